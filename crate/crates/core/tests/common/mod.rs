//! Shared oracles for integration tests, independent of the implementation
//! paths they check.

use nsbound::groebner::MonomialIdealGens;
use nsbound::poly::{Monomial, Polynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::Rng;

/// Counts the monomials of total degree t in nvars variables that are NOT
/// divisible by any generator, by direct enumeration.
pub fn standard_monomial_count(mi: &MonomialIdealGens, nvars: usize, t: u32) -> u64 {
    fn rec(
        exps: &mut Vec<u32>,
        remaining: u32,
        pos: usize,
        nvars: usize,
        mi: &MonomialIdealGens,
        count: &mut u64,
    ) {
        if pos == nvars - 1 {
            exps.push(remaining);
            let m = Monomial::new(exps.clone());
            if !mi.gens().iter().any(|g| g.divides(&m)) {
                *count += 1;
            }
            exps.pop();
            return;
        }
        for e in 0..=remaining {
            exps.push(e);
            rec(exps, remaining - e, pos + 1, nvars, mi, count);
            exps.pop();
        }
    }
    let mut count = 0;
    rec(&mut Vec::new(), t, 0, nvars, mi, &mut count);
    count
}

/// Random polynomial with small integer coefficients, for algebra laws.
pub fn random_polynomial(
    rng: &mut StdRng,
    nvars: usize,
    max_terms: usize,
    max_exp: u32,
) -> Polynomial {
    let t = rng.gen_range(0..=max_terms);
    let mut p = Polynomial::zero(nvars);
    for _ in 0..t {
        let exps: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect();
        let coeff = loop {
            let c = rng.gen_range(-5i64..=5);
            if c != 0 {
                break c;
            }
        };
        p.add_term(Monomial::new(exps), BigRational::from(BigInt::from(coeff)));
    }
    p
}
