//! Hilbert series of monomial ideals, Hilbert polynomials, and the variety
//! invariants (dimension, codimension, degree) the bound pipeline consumes.
//!
//! The series numerator N(z), with HS_{S/I}(z) = N(z)/(1-z)^{r+1}, is computed
//! by recursive pivot splitting on a generator variable. The Hilbert
//! polynomial is stored in the binomial basis P(t) = sum_j c_j C(t+j, j) with
//! integer c_j, which makes integer-valuedness automatic.

use crate::groebner::{self, GroebnerError, MonomialIdealGens, ReductionBudget};
use crate::poly::{IdealPresentation, Monomial, MonomialOrder};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HilbertError {
    /// The ideal contains 1 or defines the empty projective scheme.
    EmptyScheme,
    Groebner(GroebnerError),
    SeriesBudgetExceeded {
        max_nodes: u64,
    },
    /// Degree does not fit in the machine word we hand to the bound formulas.
    DegreeOverflow,
    InvalidShift {
        m: i64,
    },
}

impl fmt::Display for HilbertError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HilbertError::EmptyScheme => {
                write!(
                    f,
                    "ideal defines the empty projective scheme (or is improper)"
                )
            }
            HilbertError::Groebner(e) => write!(f, "{e}"),
            HilbertError::SeriesBudgetExceeded { max_nodes } => {
                write!(
                    f,
                    "Hilbert series recursion budget exceeded ({max_nodes} nodes)"
                )
            }
            HilbertError::DegreeOverflow => write!(f, "projective degree exceeds u64"),
            HilbertError::InvalidShift { m } => write!(f, "divisor multiple must be >= 1, got {m}"),
        }
    }
}

impl std::error::Error for HilbertError {}

impl From<GroebnerError> for HilbertError {
    fn from(e: GroebnerError) -> Self {
        HilbertError::Groebner(e)
    }
}

// ---------------------------------------------------------------------------
// Series numerator
// ---------------------------------------------------------------------------

/// Coefficients of N(z) in Z[z]; index i holds the coefficient of z^i.
/// The zero numerator (improper ideal) has an empty coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeriesNumerator {
    coeffs: Vec<BigInt>,
}

impl HilbertSeriesNumerator {
    fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        HilbertSeriesNumerator { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Cancels every (1-z) factor against the (1-z)^(r+1) denominator:
    /// returns (N', D) with HS = N'(z)/(1-z)^D and N'(1) != 0 (unless the
    /// numerator is zero). D = 0 means a finite-length quotient.
    pub fn reduced(&self, r: usize) -> (HilbertSeriesNumerator, usize) {
        let mut n = self.clone();
        let mut cancelled = 0usize;
        while cancelled < r + 1 && !n.is_zero() && n.eval_at_one().is_zero() {
            n = n.divide_by_one_minus_z();
            cancelled += 1;
        }
        (n, r + 1 - cancelled)
    }

    /// N(z)/(1-z), valid only when N(1) = 0.
    fn divide_by_one_minus_z(&self) -> HilbertSeriesNumerator {
        debug_assert!(self.eval_at_one().is_zero());
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut acc = BigInt::zero();
        for c in &self.coeffs {
            acc += c;
            out.push(acc.clone());
        }
        out.pop(); // top prefix sum is N(1) = 0
        HilbertSeriesNumerator::from_coeffs(out)
    }
}

fn poly_mul_z(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_z(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y;
    }
    out
}

/// 1 - z^d
fn one_minus_z_pow(d: u32) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); d as usize + 1];
    v[0] = BigInt::one();
    v[d as usize] = -BigInt::one();
    v
}

struct SeriesCtx {
    nodes: u64,
    max_nodes: u64,
}

fn series_rec(
    gens: &[Monomial],
    nvars: usize,
    ctx: &mut SeriesCtx,
) -> Result<Vec<BigInt>, HilbertError> {
    ctx.nodes += 1;
    if ctx.nodes > ctx.max_nodes {
        return Err(HilbertError::SeriesBudgetExceeded {
            max_nodes: ctx.max_nodes,
        });
    }
    if gens.iter().any(|m| m.is_one()) {
        return Ok(Vec::new()); // S/I = 0
    }
    if gens.is_empty() {
        return Ok(vec![BigInt::one()]);
    }
    // Pairwise coprime generators: the numerator is a product of 1 - z^deg.
    let coprime =
        (0..gens.len()).all(|i| (i + 1..gens.len()).all(|j| gens[i].is_coprime(&gens[j])));
    if coprime {
        let mut acc = vec![BigInt::one()];
        for g in gens {
            acc = poly_mul_z(&acc, &one_minus_z_pow(g.total_degree()));
        }
        return Ok(acc);
    }
    // Pivot: most frequent variable among the generators, ties to the lowest
    // index. Not pairwise coprime, so some variable occurs at least twice.
    let mut best = (0usize, 0usize);
    for v in 0..nvars {
        let count = gens.iter().filter(|m| m.exps()[v] > 0).count();
        if count > best.1 {
            best = (v, count);
        }
    }
    let pivot = best.0;
    // I + (x_pivot): generators containing the pivot become redundant.
    let mut with_pivot: Vec<Monomial> = vec![Monomial::var_pow(nvars, pivot, 1)];
    with_pivot.extend(gens.iter().filter(|m| m.exps()[pivot] == 0).cloned());
    let sum_with = series_rec(&with_pivot, nvars, ctx)?;
    // I : x_pivot, re-minimalized.
    let quotient: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            if m.exps()[pivot] > 0 {
                let mut e = m.exps().to_vec();
                e[pivot] -= 1;
                Monomial::new(e)
            } else {
                m.clone()
            }
        })
        .collect();
    let quotient = MonomialIdealGens::new(quotient);
    let sum_quot = series_rec(quotient.gens(), nvars, ctx)?;
    // N(I) = N(I + (x)) + z * N(I : x)
    let mut shifted = vec![BigInt::zero()];
    shifted.extend(sum_quot);
    Ok(poly_add_z(&sum_with, &shifted))
}

/// Exact numerator of the Hilbert series of S/I for the monomial ideal with
/// the given minimal generators, in r+1 variables.
pub fn hilbert_series(
    mi: &MonomialIdealGens,
    r: usize,
    max_nodes: u64,
) -> Result<HilbertSeriesNumerator, HilbertError> {
    let mut ctx = SeriesCtx {
        nodes: 0,
        max_nodes,
    };
    let coeffs = series_rec(mi.gens(), r + 1, &mut ctx)?;
    Ok(HilbertSeriesNumerator::from_coeffs(coeffs))
}

// ---------------------------------------------------------------------------
// Hilbert polynomial in the binomial basis
// ---------------------------------------------------------------------------

/// P(t) = sum_j c_j C(t+j, j) with integer c_j; index j holds c_j.
/// Integer-valued at all integers by construction; degree <= r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    coeffs: Vec<BigInt>,
}

/// C(x, j) = x(x-1)...(x-j+1)/j! evaluated exactly at an integer.
fn binomial_at(x: &BigInt, j: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..j {
        num *= x - BigInt::from(k);
        den *= BigInt::from(k + 1);
    }
    let (q, rem) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(rem.is_zero());
    q
}

/// Dense coefficients (ascending powers of t) of C(t+j, j).
fn binomial_basis_dense(j: usize) -> Vec<BigRational> {
    // Product (t+1)(t+2)...(t+j) / j!
    let mut p = vec![BigRational::one()];
    for k in 1..=j {
        let mut next = vec![BigRational::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i] += c * BigRational::from(BigInt::from(k));
            next[i + 1] += c;
        }
        p = next;
    }
    let fact: BigInt = (1..=j).map(BigInt::from).product();
    let inv = BigRational::new(BigInt::one(), fact);
    p.iter().map(|c| c * &inv).collect()
}

fn dense_trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

impl HilbertPolynomial {
    pub fn zero() -> Self {
        HilbertPolynomial { coeffs: Vec::new() }
    }

    pub fn from_binomial_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }

    /// The basis element C(t+j, j).
    pub fn binomial_basis(j: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); j + 1];
        coeffs[j] = BigInt::one();
        HilbertPolynomial { coeffs }
    }

    pub fn constant(c: BigInt) -> Self {
        HilbertPolynomial::from_binomial_coeffs(vec![c])
    }

    pub fn binomial_coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c * binomial_at(&(t + BigInt::from(j)), j))
            .sum()
    }

    pub fn eval_i64(&self, t: i64) -> BigInt {
        self.eval(&BigInt::from(t))
    }

    /// Dense rational coefficients, ascending powers of t.
    pub fn to_dense(&self) -> Vec<BigRational> {
        let mut acc = vec![BigRational::zero(); self.coeffs.len()];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let b = binomial_basis_dense(j);
            let cq = BigRational::from(c.clone());
            for (i, bc) in b.iter().enumerate() {
                acc[i] += bc * &cq;
            }
        }
        dense_trim(acc)
    }

    /// Converts dense rational coefficients back to the binomial basis;
    /// `None` when the polynomial is not integer-valued.
    pub fn from_dense(dense: &[BigRational]) -> Option<Self> {
        let mut rem = dense_trim(dense.to_vec());
        let mut coeffs = vec![BigInt::zero(); rem.len()];
        while let Some(lead) = rem.last().cloned() {
            let n = rem.len() - 1;
            let fact: BigInt = (1..=n).map(BigInt::from).product();
            let c = lead * BigRational::from(fact);
            if !c.denom().is_one() {
                return None;
            }
            let c = c.numer().clone();
            coeffs[n] = c.clone();
            let b = binomial_basis_dense(n);
            let cq = BigRational::from(c);
            for (i, bc) in b.iter().enumerate() {
                rem[i] -= bc * &cq;
            }
            rem = dense_trim(rem);
        }
        Some(HilbertPolynomial::from_binomial_coeffs(coeffs))
    }

    pub fn add(&self, other: &HilbertPolynomial) -> HilbertPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        HilbertPolynomial::from_binomial_coeffs(coeffs)
    }

    pub fn sub(&self, other: &HilbertPolynomial) -> HilbertPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        HilbertPolynomial::from_binomial_coeffs(coeffs)
    }

    pub fn scale(&self, k: &BigInt) -> HilbertPolynomial {
        HilbertPolynomial::from_binomial_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// P(t - m), exact.
    pub fn shift(&self, m: i64) -> HilbertPolynomial {
        let dense = self.to_dense();
        // Substitute t -> t - m by Horner evaluation in the polynomial ring.
        let mut out: Vec<BigRational> = Vec::new();
        let shift = BigRational::from(BigInt::from(-m));
        for c in dense.iter().rev() {
            // out = out * (t + shift) + c
            let mut next = vec![BigRational::zero(); out.len() + 1];
            for (i, v) in out.iter().enumerate() {
                next[i] += v * &shift;
                next[i + 1] += v;
            }
            if next.is_empty() {
                next.push(BigRational::zero());
            }
            next[0] += c;
            out = next;
        }
        HilbertPolynomial::from_dense(&dense_trim(out))
            .expect("integer shift preserves integer-valuedness")
    }

    /// Leading coefficient of the dense form.
    pub fn leading_coefficient(&self) -> Option<BigRational> {
        self.to_dense().last().cloned()
    }

    /// Dense display like "t^2 + 2*t + 1" or "3*t + 1".
    pub fn to_text(&self) -> String {
        let dense = self.to_dense();
        if dense.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in dense.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_str = if abs.denom().is_one() {
                abs.numer().to_string()
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            };
            match k {
                0 => out.push_str(&coeff_str),
                _ => {
                    if !abs.is_one() {
                        out.push_str(&coeff_str);
                        out.push('*');
                    }
                    if k == 1 {
                        out.push('t');
                    } else {
                        out.push_str(&format!("t^{k}"));
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Cancels all (1-z) factors from N(z)/(1-z)^{r+1} and expands the remaining
/// N'(z)/(1-z)^D into the Hilbert polynomial
/// P(t) = sum_j N'_j C(t - j + D - 1, D - 1). Zero when D = 0 (finite-length
/// quotient, empty projective scheme).
pub fn hilbert_polynomial(num: &HilbertSeriesNumerator, r: usize) -> HilbertPolynomial {
    let (n, d) = num.reduced(r);
    if n.is_zero() || d == 0 {
        return HilbertPolynomial::zero();
    }
    let basis = HilbertPolynomial::binomial_basis(d - 1);
    let mut p = HilbertPolynomial::zero();
    for (j, c) in n.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        p = p.add(&basis.shift(j as i64).scale(c));
    }
    p
}

// ---------------------------------------------------------------------------
// Variety invariants
// ---------------------------------------------------------------------------

/// The numerical data of X every bound formula consumes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyInvariants {
    /// Ambient projective dimension.
    pub r: usize,
    /// Maximum generator degree d of the ideal as supplied.
    pub max_gen_degree: u32,
    /// dim X = deg P.
    pub dim: usize,
    /// codim X = r - dim X.
    pub codim: usize,
    /// deg X = (leading coefficient of P) * (dim X)!.
    pub degree: u64,
    /// Hilbert polynomial of the coordinate ring (equivalently of O_X).
    pub hp: HilbertPolynomial,
}

/// Budgets threaded through the Groebner and series computations.
#[derive(Clone, Copy, Debug)]
pub struct HilbertOptions {
    pub order: MonomialOrder,
    pub budget: ReductionBudget,
    pub max_series_nodes: u64,
}

impl Default for HilbertOptions {
    fn default() -> Self {
        HilbertOptions {
            order: MonomialOrder::GrevLex,
            budget: ReductionBudget::default(),
            max_series_nodes: 1_000_000,
        }
    }
}

/// Composes buchberger -> lead_term_ideal -> hilbert_series ->
/// hilbert_polynomial and reads off dimension, codimension, and degree.
pub fn invariants(
    ideal: &IdealPresentation,
    opts: &HilbertOptions,
) -> Result<VarietyInvariants, HilbertError> {
    let gb = groebner::buchberger(ideal, opts.order, &opts.budget)?;
    let lead = groebner::lead_term_ideal(&gb);
    let num = hilbert_series(&lead, ideal.r(), opts.max_series_nodes)?;
    let hp = hilbert_polynomial(&num, ideal.r());
    if hp.is_zero() {
        return Err(HilbertError::EmptyScheme);
    }
    let dim = hp.degree().unwrap();
    let lead_coeff = hp.leading_coefficient().unwrap();
    let fact: BigInt = (1..=dim).map(BigInt::from).product();
    let deg_rat = lead_coeff * BigRational::from(fact);
    debug_assert!(deg_rat.denom().is_one());
    let degree: BigUint = deg_rat
        .numer()
        .to_biguint()
        .expect("projective degree is positive");
    let degree = degree.to_u64().ok_or(HilbertError::DegreeOverflow)?;
    Ok(VarietyInvariants {
        r: ideal.r(),
        max_gen_degree: ideal.max_degree(),
        dim,
        codim: ideal.r() - dim,
        degree,
        hp,
    })
}

/// Hilbert polynomial of the divisor mH as a subscheme of P^r:
/// Q(t) = P(t) - P(t-m).
pub fn divisor_hp(p: &HilbertPolynomial, m: i64) -> Result<HilbertPolynomial, HilbertError> {
    if m < 1 {
        return Err(HilbertError::InvalidShift { m });
    }
    Ok(p.sub(&p.shift(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    // ---- series ----

    #[test]
    fn series_of_free_ring() {
        let num = hilbert_series(&MonomialIdealGens::empty(), 3, 1000).unwrap();
        assert_eq!(num.coeffs(), &z(&[1]));
    }

    #[test]
    fn series_of_principal_power() {
        for d in 1..6u32 {
            for r in 1..4usize {
                let mi = MonomialIdealGens::new(vec![Monomial::var_pow(r + 1, 0, d)]);
                let num = hilbert_series(&mi, r, 1000).unwrap();
                let mut want = vec![BigInt::zero(); d as usize + 1];
                want[0] = BigInt::one();
                want[d as usize] = -BigInt::one();
                assert_eq!(num.coeffs(), &want[..]);
            }
        }
    }

    #[test]
    fn series_of_twisted_cubic_leads() {
        // Lead terms under lex; the grevlex lead terms give the same numerator.
        let mi = MonomialIdealGens::new(vec![
            mono(&[1, 0, 1, 0]),
            mono(&[1, 0, 0, 1]),
            mono(&[0, 1, 0, 1]),
        ]);
        let num = hilbert_series(&mi, 3, 1000).unwrap();
        assert_eq!(num.coeffs(), &z(&[1, 0, -3, 2]));

        let mi_grevlex = MonomialIdealGens::new(vec![
            mono(&[0, 2, 0, 0]),
            mono(&[0, 1, 1, 0]),
            mono(&[0, 0, 2, 0]),
        ]);
        let num2 = hilbert_series(&mi_grevlex, 3, 1000).unwrap();
        assert_eq!(num2.coeffs(), &z(&[1, 0, -3, 2]));
    }

    #[test]
    fn series_of_improper_ideal_is_zero() {
        let mi = MonomialIdealGens::new(vec![Monomial::one(3)]);
        let num = hilbert_series(&mi, 2, 1000).unwrap();
        assert!(num.is_zero());
    }

    #[test]
    fn numerator_value_at_one_is_degree_times_sign_structure() {
        // For the twisted cubic: after cancelling (1-z)^2, N'(1) = 3 = deg.
        let num = HilbertSeriesNumerator::from_coeffs(z(&[1, 0, -3, 2]));
        let n1 = num.divide_by_one_minus_z();
        assert_eq!(n1.coeffs(), &z(&[1, 1, -2]));
        let n2 = n1.divide_by_one_minus_z();
        assert_eq!(n2.coeffs(), &z(&[1, 2]));
        assert_eq!(n2.eval_at_one(), BigInt::from(3));
    }

    // ---- hilbert polynomial ----

    #[test]
    fn hypersurface_hp_quadric() {
        // N = 1 - z^2, r = 3: P(t) = (t+1)^2.
        let num = HilbertSeriesNumerator::from_coeffs(z(&[1, 0, -1]));
        let p = hilbert_polynomial(&num, 3);
        for t in 0..6 {
            assert_eq!(p.eval_i64(t), BigInt::from((t + 1) * (t + 1)));
        }
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn twisted_cubic_hp() {
        let num = HilbertSeriesNumerator::from_coeffs(z(&[1, 0, -3, 2]));
        let p = hilbert_polynomial(&num, 3);
        assert_eq!(p.to_text(), "3*t + 1");
        // Standard monomial dimensions in degrees 1..5: 4, 7, 10, 13, 16.
        let got: Vec<BigInt> = (1..=5).map(|t| p.eval_i64(t)).collect();
        assert_eq!(got, z(&[4, 7, 10, 13, 16]));
    }

    #[test]
    fn point_hp_on_p0() {
        let num = HilbertSeriesNumerator::from_coeffs(z(&[1]));
        let p = hilbert_polynomial(&num, 0);
        assert_eq!(p, HilbertPolynomial::constant(BigInt::one()));
    }

    #[test]
    fn complete_intersection_hp() {
        // N = (1-z^2)(1-z^3) over P^3: P(t) = 6t - 3.
        let num = HilbertSeriesNumerator::from_coeffs(z(&[1, 0, -1, -1, 0, 1]));
        let p = hilbert_polynomial(&num, 3);
        assert_eq!(p.to_text(), "6*t - 3");
    }

    // ---- binomial basis round trips ----

    #[test]
    fn dense_round_trip() {
        let p = HilbertPolynomial::from_binomial_coeffs(z(&[1, -3, 2]));
        let dense = p.to_dense();
        let q = HilbertPolynomial::from_dense(&dense).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn from_dense_rejects_non_integer_valued() {
        // t/2 is not integer-valued.
        let half_t = vec![
            BigRational::zero(),
            BigRational::new(BigInt::one(), BigInt::from(2)),
        ];
        assert!(HilbertPolynomial::from_dense(&half_t).is_none());
    }

    #[test]
    fn shift_and_eval_agree() {
        let p = HilbertPolynomial::from_binomial_coeffs(z(&[2, 0, 5]));
        let q = p.shift(3);
        for t in -4..8 {
            assert_eq!(q.eval_i64(t), p.eval_i64(t - 3));
        }
    }

    // ---- invariants ----

    fn ideal(r: usize, gens: &[&str]) -> IdealPresentation {
        IdealPresentation::new(
            r,
            gens.iter()
                .map(|s| parse_polynomial(s, r).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn invariants_of_quadric_surface() {
        let inv = invariants(&ideal(3, &["x0x3 - x1x2"]), &HilbertOptions::default()).unwrap();
        assert_eq!((inv.dim, inv.codim, inv.degree), (2, 1, 2));
        assert_eq!(inv.hp.to_text(), "t^2 + 2*t + 1");
        assert_eq!(inv.max_gen_degree, 2);
    }

    #[test]
    fn invariants_of_twisted_cubic() {
        let inv = invariants(
            &ideal(3, &["x0x2 - x1^2", "x0x3 - x1x2", "x1x3 - x2^2"]),
            &HilbertOptions::default(),
        )
        .unwrap();
        assert_eq!((inv.dim, inv.codim, inv.degree), (1, 2, 3));
        assert_eq!(inv.hp.to_text(), "3*t + 1");
    }

    #[test]
    fn invariants_of_complete_intersection() {
        let inv = invariants(
            &ideal(
                3,
                &["x0^2 + x1^2 + x2^2 + x3^2", "x0^3 + x1^3 + x2^3 + x3^3"],
            ),
            &HilbertOptions::default(),
        )
        .unwrap();
        assert_eq!((inv.dim, inv.degree), (1, 6));
        assert_eq!(inv.hp.to_text(), "6*t - 3");
    }

    #[test]
    fn invariants_reject_empty_scheme() {
        let err = invariants(&ideal(2, &["x0", "x1", "x2"]), &HilbertOptions::default());
        assert_eq!(err, Err(HilbertError::EmptyScheme));
    }

    // ---- divisor hilbert polynomials ----

    #[test]
    fn divisor_hp_of_quadric_hyperplane_section() {
        // P = (t+1)^2, m = 1: Q = 2t + 1.
        let p = HilbertPolynomial::from_dense(&[
            BigRational::from(BigInt::one()),
            BigRational::from(BigInt::from(2)),
            BigRational::from(BigInt::one()),
        ])
        .unwrap();
        let q = divisor_hp(&p, 1).unwrap();
        assert_eq!(q.to_text(), "2*t + 1");
    }

    #[test]
    fn divisor_hp_of_curve_is_constant() {
        // P = 3t + 1, m = 2: Q = 6.
        let p = HilbertPolynomial::from_dense(&[
            BigRational::from(BigInt::one()),
            BigRational::from(BigInt::from(3)),
        ])
        .unwrap();
        let q = divisor_hp(&p, 2).unwrap();
        assert_eq!(q, HilbertPolynomial::constant(BigInt::from(6)));
    }

    #[test]
    fn divisor_hp_of_constant_is_zero() {
        let p = HilbertPolynomial::constant(BigInt::from(5));
        assert!(divisor_hp(&p, 3).unwrap().is_zero());
    }

    #[test]
    fn divisor_hp_rejects_nonpositive_m() {
        let p = HilbertPolynomial::constant(BigInt::from(5));
        assert!(divisor_hp(&p, 0).is_err());
    }

    #[test]
    fn divisor_hp_telescopes() {
        let p = HilbertPolynomial::from_binomial_coeffs(z(&[1, 2, 3]));
        let m = 4;
        let direct = divisor_hp(&p, m).unwrap();
        let mut telescoped = HilbertPolynomial::zero();
        for i in 0..m {
            telescoped = telescoped.add(&p.shift(i).sub(&p.shift(i + 1)));
        }
        assert_eq!(direct, telescoped);
    }

    #[test]
    fn divisor_degree_feeds_n() {
        // Q from (P, m) has degree dimX-1 and leading coefficient
        // m * degX / (dimX-1)!.
        let p = HilbertPolynomial::binomial_basis(2); // C(t+2,2): dim 2, deg 1
        let q = divisor_hp(&p, 3).unwrap();
        assert_eq!(q.degree(), Some(1));
        assert_eq!(
            q.leading_coefficient().unwrap(),
            BigRational::from(BigInt::from(3))
        );
    }
}
