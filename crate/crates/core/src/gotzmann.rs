//! Macaulay decompositions of subscheme Hilbert polynomials, exact Gotzmann
//! numbers, and the closed-form upper bound on them.
//!
//! Convention fixed once for the whole crate: decomposition and Gotzmann
//! number take the SUBSCHEME Hilbert polynomial Q. The conversion to the
//! ideal polynomial C(t+r, r) - Q(t) is explicit at call sites.

use crate::hilbert::HilbertPolynomial;
use crate::tower::{TowerContext, TowerNumber};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// One step of the greedy expansion, kept for error reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyStep {
    pub index: u64,
    pub chosen_degree: u64,
    pub remainder: String,
}

impl fmt::Display for GreedyStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "step {}: a_{} = {}, remainder {}",
            self.index, self.index, self.chosen_degree, self.remainder
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GotzmannError {
    /// Q is not the Hilbert polynomial of any subscheme; the greedy trace up
    /// to the failure is attached.
    NotAdmissible {
        trace: Vec<GreedyStep>,
        reason: String,
    },
    /// The decomposition would be longer than the configured cap.
    LengthBudgetExceeded {
        max_len: u64,
    },
    /// Hoa's bound requires a generator degree bound of at least 2.
    DegreeBoundTooSmall {
        degree_bound: u64,
    },
    /// Krull dimension must lie in 0..=r+1.
    KrullDimOutOfRange {
        krull_dim: u64,
        r: u64,
    },
    ZeroPolynomial,
}

impl fmt::Display for GotzmannError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GotzmannError::NotAdmissible { trace, reason } => {
                writeln!(f, "not an admissible Hilbert polynomial: {reason}")?;
                for step in trace {
                    writeln!(f, "  {step}")?;
                }
                Ok(())
            }
            GotzmannError::LengthBudgetExceeded { max_len } => {
                write!(f, "decomposition longer than the cap ({max_len})")
            }
            GotzmannError::DegreeBoundTooSmall { degree_bound } => {
                write!(f, "generator degree bound must be >= 2, got {degree_bound}")
            }
            GotzmannError::KrullDimOutOfRange { krull_dim, r } => {
                write!(f, "Krull dimension {krull_dim} outside 0..={}", r + 1)
            }
            GotzmannError::ZeroPolynomial => write!(f, "the zero polynomial has no decomposition"),
        }
    }
}

impl std::error::Error for GotzmannError {}

/// The non-increasing sequence a_1 >= ... >= a_s >= 0 with
/// Q(t) = sum_i C(t + a_i - i + 1, a_i); s is the Gotzmann number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GotzmannDecomposition {
    a: Vec<u64>,
}

impl GotzmannDecomposition {
    pub fn sequence(&self) -> &[u64] {
        &self.a
    }

    pub fn len(&self) -> u64 {
        self.a.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// Rebuilds sum_i C(t + a_i - i + 1, a_i) exactly.
    pub fn reconstruct(&self) -> HilbertPolynomial {
        let mut acc = HilbertPolynomial::zero();
        let mut constant_tail = BigInt::zero();
        for (k, &ai) in self.a.iter().enumerate() {
            if ai == 0 {
                constant_tail += 1;
                continue;
            }
            let basis = HilbertPolynomial::binomial_basis(ai as usize);
            acc = acc.add(&basis.shift(k as i64));
        }
        acc.add(&HilbertPolynomial::constant(constant_tail))
    }
}

fn dense_text(dense: &[BigRational]) -> String {
    HilbertPolynomial::from_dense(dense)
        .map(|p| p.to_text())
        .unwrap_or_else(|| format!("{dense:?}"))
}

fn dense_trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

const MAX_DECOMPOSITION_LEN: u64 = 1_000_000;

/// Greedy Macaulay expansion: at step i subtract C(t + a_i - i + 1, a_i)
/// with a_i the degree of the remainder, until zero. A remainder with a
/// negative leading coefficient means Q is not the Hilbert polynomial of any
/// subscheme, reported with the greedy trace.
pub fn gotzmann_decomposition(
    q: &HilbertPolynomial,
) -> Result<GotzmannDecomposition, GotzmannError> {
    if q.is_zero() {
        return Err(GotzmannError::ZeroPolynomial);
    }
    let mut rem: Vec<BigRational> = q.to_dense();
    let mut a: Vec<u64> = Vec::new();
    let mut trace: Vec<GreedyStep> = Vec::new();
    let mut step: u64 = 1;
    loop {
        dense_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
        let deg = rem.len() - 1;
        let lead = rem.last().unwrap().clone();
        if lead.is_negative() {
            return Err(GotzmannError::NotAdmissible {
                trace,
                reason: format!(
                    "remainder {} has a negative leading coefficient",
                    dense_text(&rem)
                ),
            });
        }
        if deg == 0 {
            // Constant tail c contributes c trailing zeros to the sequence.
            debug_assert!(
                lead.denom().is_one(),
                "integer-valued polynomial has integer constant"
            );
            let c = lead
                .numer()
                .to_u64()
                .ok_or(GotzmannError::LengthBudgetExceeded {
                    max_len: MAX_DECOMPOSITION_LEN,
                })?;
            if a.len() as u64 + c > MAX_DECOMPOSITION_LEN {
                return Err(GotzmannError::LengthBudgetExceeded {
                    max_len: MAX_DECOMPOSITION_LEN,
                });
            }
            trace.push(GreedyStep {
                index: step,
                chosen_degree: 0,
                remainder: "0".to_string(),
            });
            a.extend(std::iter::repeat_n(0, c as usize));
            break;
        }
        let term = HilbertPolynomial::binomial_basis(deg).shift(step as i64 - 1);
        let term_dense = term.to_dense();
        for (i, c) in term_dense.iter().enumerate() {
            if rem.len() <= i {
                rem.push(BigRational::zero());
            }
            rem[i] -= c;
        }
        dense_trim(&mut rem);
        if rem.len().checked_sub(1).is_some_and(|d| d > deg) {
            return Err(GotzmannError::NotAdmissible {
                trace,
                reason: format!("remainder degree grew to {} at step {step}", rem.len() - 1),
            });
        }
        a.push(deg as u64);
        trace.push(GreedyStep {
            index: step,
            chosen_degree: deg as u64,
            remainder: dense_text(&rem),
        });
        step += 1;
        if step > MAX_DECOMPOSITION_LEN {
            return Err(GotzmannError::LengthBudgetExceeded {
                max_len: MAX_DECOMPOSITION_LEN,
            });
        }
    }
    debug_assert!(
        a.windows(2).all(|w| w[0] >= w[1]),
        "greedy sequence is non-increasing"
    );
    Ok(GotzmannDecomposition { a })
}

/// The Gotzmann number: the length s of the decomposition.
pub fn gotzmann_number(q: &HilbertPolynomial) -> Result<u64, GotzmannError> {
    Ok(gotzmann_decomposition(q)?.len())
}

/// Input to the closed-form Gotzmann-number bound: generator degree bound D,
/// ambient dimension r, and the Krull dimension a of the quotient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HoaBoundInput {
    pub degree_bound: u64,
    pub r: u64,
    pub krull_dim: u64,
}

/// (3/2 D^(r+1-a) + D)^(a 2^(a-1)), exact as a rational power while it fits
/// and a certified upper log2 enclosure beyond the digit threshold.
pub fn hoa_bound(ctx: &TowerContext, input: &HoaBoundInput) -> Result<TowerNumber, GotzmannError> {
    let HoaBoundInput {
        degree_bound: d,
        r,
        krull_dim: a,
    } = *input;
    if d < 2 {
        return Err(GotzmannError::DegreeBoundTooSmall { degree_bound: d });
    }
    if a > r + 1 {
        return Err(GotzmannError::KrullDimOutOfRange { krull_dim: a, r });
    }
    if a == 0 {
        return Ok(TowerNumber::one());
    }
    let exponent = BigUint::from(a) << (a - 1);
    let d_big = BigUint::from(d);
    let d_pow = d_big.pow((r + 1 - a).try_into().expect("exponent fits u32"));
    // 3/2 d^(r+1-a) + d = (3 d^(r+1-a) + 2d) / 2
    let numer = BigUint::from(3u32) * d_pow + BigUint::from(2u32) * &d_big;
    let base = BigRational::new(BigInt::from(numer), BigInt::from(2));
    Ok(TowerNumber::pow_ratio(ctx, &base, &exponent))
}
