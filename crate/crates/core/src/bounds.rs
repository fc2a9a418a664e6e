//! Every explicit torsion-bound formula, composed into the pipeline from an
//! ideal presentation to the full report.
//!
//! The closed-form bounds depend only on (d, r) or on (d, r, codim, deg);
//! the sharpened chain replaces worst-case estimates by exactly computed
//! quantities (the Gotzmann number of the divisor polynomial, the exact
//! Grassmannian embedding dimensions) and is dramatically smaller.

use crate::gotzmann::{self, HoaBoundInput};
use crate::groebner::{self, Smoothness};
use crate::hilbert::{self, HilbertError, HilbertOptions, HilbertPolynomial, VarietyInvariants};
use crate::poly::IdealPresentation;
use crate::tower::{TowerContext, TowerNumber};
use num_bigint::{BigInt, BigUint};
use num_traits::{CheckedSub, One, Signed, ToPrimitive, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundsError {
    RTooSmall {
        r: u64,
        min: u64,
    },
    DTooSmall {
        d: u64,
        min: u64,
    },
    TTooSmall {
        t: String,
        min: u64,
    },
    /// The closed-form t would not fit in memory.
    ClosedFormTooLarge {
        bits: u64,
    },
    /// A Hilbert polynomial took a negative value where a dimension was
    /// expected.
    NegativeValue {
        at: u64,
    },
    SubspaceExceedsSpace,
    Arithmetic(String),
}

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundsError::RTooSmall { r, min } => write!(f, "requires r >= {min}, got {r}"),
            BoundsError::DTooSmall { d, min } => write!(f, "requires d >= {min}, got {d}"),
            BoundsError::TTooSmall { t, min } => write!(f, "requires t >= {min}, got {t}"),
            BoundsError::ClosedFormTooLarge { bits } => {
                write!(
                    f,
                    "closed-form t needs about {bits} bits; out of desk range"
                )
            }
            BoundsError::NegativeValue { at } => {
                write!(f, "polynomial is negative at t = {at}")
            }
            BoundsError::SubspaceExceedsSpace => {
                write!(f, "P(t) exceeds the dimension of the degree-t forms")
            }
            BoundsError::Arithmetic(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for BoundsError {}

/// C(n, k) over big integers.
pub fn binomial(n: &BigUint, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        let factor = n
            .checked_sub(&BigUint::from(i))
            .unwrap_or_else(BigUint::zero);
        if factor.is_zero() {
            return BigUint::zero();
        }
        acc = acc * factor / BigUint::from(i + 1);
    }
    acc
}

/// C(n, k) for machine-sized n.
pub fn binomial_u64(n: u64, k: u64) -> BigUint {
    binomial(&BigUint::from(n), k)
}

/// Trivial-torsion short-circuit: curves, points, and the ambient space
/// itself carry no torsion, so the bound is 1.
pub fn degenerate_case(inv: &VarietyInvariants) -> Option<TowerNumber> {
    if inv.dim <= 1 || inv.codim == 0 {
        Some(TowerNumber::one())
    } else {
        None
    }
}

/// m = (d-1) * codim X.
pub fn m_divisor(d: u64, codim: u64) -> u64 {
    (d - 1) * codim
}

/// n = (d-1) * codim X * deg X, the degree of the divisor mH.
pub fn n_degree(d: u64, codim: u64, deg_x: u64) -> u64 {
    (d - 1)
        .checked_mul(codim)
        .and_then(|x| x.checked_mul(deg_x))
        .expect("divisor degree fits u64 at desk scale")
}

/// Worst case for n over all varieties with the given (d, r):
/// (r-2)(d-1)d^(r-2).
pub fn worst_case_n(d: u64, r: u64) -> BigUint {
    BigUint::from(r - 2) * BigUint::from(d - 1) * BigUint::from(d).pow((r - 2) as u32)
}

/// Dimensions of the Grassmannian picture at degree t: the Hilbert scheme
/// embeds in Gr(q, N) with q = P(t) (P the ideal polynomial) and
/// N = C(t+r, r); its components live in an affine chart of dimension
/// q(N-q) cut by minors of degree max{P(t+1)+1, P(t)+1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannianStats {
    pub subspace_dim: BigUint,
    pub space_dim: BigUint,
    pub ambient_dim: BigUint,
    pub minor_degree: BigUint,
}

pub fn grassmannian_stats(
    p: &HilbertPolynomial,
    t: u64,
    r: u64,
) -> Result<GrassmannianStats, BoundsError> {
    let value_at = |x: u64| -> Result<BigUint, BoundsError> {
        let v = p.eval(&BigInt::from(x));
        if v.is_negative() {
            return Err(BoundsError::NegativeValue { at: x });
        }
        Ok(v.to_biguint().unwrap())
    };
    let q = value_at(t)?;
    let n = binomial(&(BigUint::from(t) + BigUint::from(r)), r);
    if q > n {
        return Err(BoundsError::SubspaceExceedsSpace);
    }
    let p_next = value_at(t + 1)?;
    let minor_degree = p_next.max(q.clone()) + BigUint::one();
    let ambient_dim = &q * (&n - &q);
    Ok(GrassmannianStats {
        subspace_dim: q,
        space_dim: n,
        ambient_dim,
        minor_degree,
    })
}

/// minor_degree ^ ambient_dim from the Grassmannian picture; 1 when the
/// chart degenerates (q = 0 or q = N) or the minors are linear.
pub fn chart_component_bound(
    ctx: &TowerContext,
    p: &HilbertPolynomial,
    t: u64,
    r: u64,
) -> Result<TowerNumber, BoundsError> {
    let stats = grassmannian_stats(p, t, r)?;
    if stats.ambient_dim.is_zero() || stats.minor_degree.is_one() {
        return Ok(TowerNumber::one());
    }
    Ok(TowerNumber::pow_integer(
        ctx,
        &stats.minor_degree,
        &stats.ambient_dim,
    ))
}

/// t^(r t^(2r)), valid for r >= 2 and t >= 8r.
pub fn component_count_bound(
    ctx: &TowerContext,
    t: &BigUint,
    r: u64,
) -> Result<TowerNumber, BoundsError> {
    if r < 2 {
        return Err(BoundsError::RTooSmall { r, min: 2 });
    }
    if t < &BigUint::from(8 * r) {
        return Err(BoundsError::TTooSmall {
            t: t.to_string(),
            min: 8 * r,
        });
    }
    let exponent = BigUint::from(r) * t.pow(2 * r as u32);
    Ok(TowerNumber::pow_integer(ctx, t, &exponent))
}

/// t = (2rd)^((r+1) 2^(r-2)), exact.
pub fn closed_form_t(d: u64, r: u64) -> Result<BigUint, BoundsError> {
    if r < 3 {
        return Err(BoundsError::RTooSmall { r, min: 3 });
    }
    if d < 2 {
        return Err(BoundsError::DTooSmall { d, min: 2 });
    }
    let exponent = BigUint::from(r + 1) << (r - 2);
    let base = BigUint::from(2 * r * d);
    let bits_estimate = &exponent * BigUint::from(base.bits());
    if bits_estimate > BigUint::from(1u64 << 26) {
        return Err(BoundsError::ClosedFormTooLarge {
            bits: bits_estimate.to_u64().unwrap_or(u64::MAX),
        });
    }
    let exponent = exponent.to_u32().expect("bounded above");
    Ok(base.pow(exponent))
}

/// 2^(d^(2^r r^3)): the closed-form bound whose displayed exponent
/// 2^(r + 3 log2 r) equals the exact integer 2^r r^3.
pub fn hilbert_route_bound(d: u64, r: u64) -> Result<TowerNumber, BoundsError> {
    if r < 3 {
        return Err(BoundsError::RTooSmall { r, min: 3 });
    }
    if d < 2 {
        return Err(BoundsError::DTooSmall { d, min: 2 });
    }
    let inner_exp = (BigUint::from(r).pow(3)) << r;
    Ok(TowerNumber::Tower {
        inner_base: BigUint::from(d),
        inner_exp: crate::dyadic::RealBound::exact(crate::dyadic::Dyadic::from_biguint(&inner_exp)),
    })
}

/// C(2 max{n,d} + (r-1)d, r) ^ (2 C(n+r, r) - 2).
pub fn pair_space_bound(ctx: &TowerContext, n: u64, d: u64, r: u64) -> TowerNumber {
    let base_arg = 2 * n.max(d) + (r - 1) * d;
    let base = binomial_u64(base_arg, r);
    let exponent = BigUint::from(2u32) * binomial_u64(n + r, r) - BigUint::from(2u32);
    debug_assert!(n == 0 || exponent >= BigUint::from(2u32));
    TowerNumber::pow_integer(ctx, &base, &exponent)
}

/// 2^n * pair_space_bound(n, d, r).
pub fn effdiv_bound(ctx: &TowerContext, n: u64, d: u64, r: u64) -> TowerNumber {
    let two_n = TowerNumber::pow_integer(ctx, &BigUint::from(2u32), &BigUint::from(n));
    two_n.mul(&pair_space_bound(ctx, n, d, r), ctx)
}

/// 2^(d^(r^2 + 2r log2 r)) with the irrational exponent carried as a
/// certified enclosure (reported upward-rounded).
pub fn divisor_route_bound(ctx: &TowerContext, d: u64, r: u64) -> Result<TowerNumber, BoundsError> {
    if r < 3 {
        return Err(BoundsError::RTooSmall { r, min: 3 });
    }
    if d < 2 {
        return Err(BoundsError::DTooSmall { d, min: 2 });
    }
    let log2_r = crate::dyadic::RealBound::log2_of_biguint(&BigUint::from(r), ctx.precision_bits);
    let e = log2_r
        .scale_biguint(&BigUint::from(2 * r))
        .add(&crate::dyadic::RealBound::from_u64(r * r));
    Ok(TowerNumber::Tower {
        inner_base: BigUint::from(d),
        inner_exp: e,
    })
}

/// (d-1)(d-2) on the degree of the variety, bounding the generators of the
/// torsion (away from the characteristic).
pub fn generator_bound(deg: u64) -> u64 {
    if deg < 2 {
        return 0;
    }
    (deg - 1)
        .checked_mul(deg - 2)
        .expect("generator bound fits u64")
}

/// Ideal polynomial C(t+r, r) - Q for a subscheme polynomial Q.
pub fn ideal_polynomial(q: &HilbertPolynomial, r: u64) -> HilbertPolynomial {
    HilbertPolynomial::binomial_basis(r as usize).sub(q)
}

// ---------------------------------------------------------------------------
// Full pipeline
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Default)]
pub struct PipelineOptions {
    pub hilbert: HilbertOptions,
    pub tower: TowerContext,
    /// Restrict the report to the worst-case closed-form substitutions.
    pub paper_faithful_only: bool,
    /// Run the Jacobian criterion before bounding.
    pub check_smoothness: bool,
}

/// The closed-form side of the report; for fixed (d, r, codim, deg) it is
/// input-independent.
#[derive(Clone, Debug)]
pub struct ClosedFormBounds {
    /// m = (d-1) codim.
    pub m: u64,
    /// n = m * deg X.
    pub n: u64,
    /// t = (2rd)^((r+1)2^(r-2)).
    pub t_closed: BigUint,
    /// Gotzmann-number bound with the worst-case inputs D = rd, a = dim X.
    pub hoa_worst_case: TowerNumber,
    /// t_closed^(r t_closed^(2r)).
    pub components_closed: TowerNumber,
    pub pair_space: TowerNumber,
    pub effdiv: TowerNumber,
    pub hilbert_route: TowerNumber,
    pub divisor_route: TowerNumber,
}

/// The sharpened chain: worst-case estimates replaced by exact quantities.
#[derive(Clone, Debug)]
pub struct SharpenedChain {
    /// Q = P(t) - P(t-m), the divisor polynomial.
    pub divisor_hp: HilbertPolynomial,
    /// Exact Gotzmann number of Q, when the decomposition succeeds.
    pub phi_exact: Option<u64>,
    pub decomposition: Option<Vec<u64>>,
    /// Gotzmann-number bound with the sharper inputs D = max{d, m, 2},
    /// a = dim X.
    pub hoa_sharp: TowerNumber,
    /// max{phi, d, 8r}.
    pub t_sharp: u64,
    /// t_sharp^(r t_sharp^(2r)).
    pub components_sharp: TowerNumber,
    /// Exact Grassmannian dimensions at t_sharp.
    pub stats: GrassmannianStats,
    /// minor_degree^ambient_dim at t_sharp: the sharpest component count.
    pub component_sharp: TowerNumber,
}

#[derive(Clone, Debug)]
pub struct BoundReport {
    pub invariants: VarietyInvariants,
    /// None = not checked.
    pub smoothness: Option<Smoothness>,
    pub warnings: Vec<String>,
    /// Reason for the trivial-torsion short-circuit, when it applies.
    pub degenerate: Option<String>,
    pub closed_form: Option<ClosedFormBounds>,
    pub sharpened: Option<SharpenedChain>,
    /// (deg X - 1)(deg X - 2): generators of the prime-to-p torsion.
    pub generator_bound: u64,
}

impl BoundReport {
    /// The headline bound: 1 in the degenerate cases, else the better of the
    /// two closed forms.
    pub fn torsion_bound(&self) -> TowerNumber {
        if self.degenerate.is_some() {
            return TowerNumber::one();
        }
        self.closed_form
            .as_ref()
            .map(|c| c.divisor_route.clone())
            .expect("non-degenerate report carries closed forms")
    }
}

#[derive(Clone, Debug)]
pub enum PipelineError {
    Hilbert(HilbertError),
    Bounds(BoundsError),
    Gotzmann(gotzmann::GotzmannError),
}

impl fmt::Display for PipelineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PipelineError::Hilbert(e) => write!(f, "{e}"),
            PipelineError::Bounds(e) => write!(f, "{e}"),
            PipelineError::Gotzmann(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for PipelineError {}

impl From<HilbertError> for PipelineError {
    fn from(e: HilbertError) -> Self {
        PipelineError::Hilbert(e)
    }
}

impl From<BoundsError> for PipelineError {
    fn from(e: BoundsError) -> Self {
        PipelineError::Bounds(e)
    }
}

impl From<gotzmann::GotzmannError> for PipelineError {
    fn from(e: gotzmann::GotzmannError) -> Self {
        PipelineError::Gotzmann(e)
    }
}

/// Runs invariants, applies the degenerate short-circuit, and otherwise
/// evaluates the full set of bounds.
pub fn full_pipeline(
    ideal: &IdealPresentation,
    opts: &PipelineOptions,
) -> Result<BoundReport, PipelineError> {
    let inv = hilbert::invariants(ideal, &opts.hilbert)?;
    let ctx = &opts.tower;
    let mut warnings: Vec<String> = Vec::new();

    if ideal
        .generators()
        .iter()
        .any(|g| g.homogeneous_degree() == Some(1))
    {
        warnings.push(
            "ideal contains degree-1 generators: the variety is contained in a hyperplane; \
             proceeding with the given ambient r"
                .to_string(),
        );
    }

    let smoothness = if opts.check_smoothness {
        let verdict = smoothness_check(ideal, &opts.hilbert)?;
        match verdict {
            Smoothness::Singular => warnings.push(
                "Jacobian criterion reports a nonempty singular locus: the smoothness \
                 hypothesis FAILS and the bounds below are not justified"
                    .to_string(),
            ),
            Smoothness::Indeterminate => warnings.push(
                "smoothness check exceeded its budget: smoothness is user-asserted".to_string(),
            ),
            Smoothness::Smooth => {}
        }
        Some(verdict)
    } else {
        warnings.push("smoothness not machine-checked: hypothesis is user-asserted".to_string());
        None
    };
    warnings
        .push("connectedness/irreducibility is user-asserted (not machine-checked)".to_string());

    let generator_bound_value = generator_bound(inv.degree);

    let degenerate_reason = if inv.codim == 0 {
        Some("the ambient projective space itself".to_string())
    } else if inv.dim <= 1 {
        Some("curve or point (dim <= 1)".to_string())
    } else if inv.degree == 1 {
        Some("degree-1 variety: a projective linear subspace".to_string())
    } else {
        None
    };
    debug_assert_eq!(
        degenerate_case(&inv).is_some(),
        inv.dim <= 1 || inv.codim == 0
    );
    if let Some(reason) = degenerate_reason {
        return Ok(BoundReport {
            invariants: inv,
            smoothness,
            warnings,
            degenerate: Some(reason),
            closed_form: None,
            sharpened: None,
            generator_bound: generator_bound_value,
        });
    }

    // Non-degenerate: dim >= 2 and codim >= 1 force r >= 3, and degree >= 2
    // forces d >= 2.
    let r = inv.r as u64;
    let d = inv.max_gen_degree as u64;
    let codim = inv.codim as u64;
    let dim = inv.dim as u64;
    debug_assert!(r >= 3 && d >= 2);

    let m = m_divisor(d, codim);
    let n = n_degree(d, codim, inv.degree);
    let t_closed = closed_form_t(d, r)?;
    let hoa_worst_case = gotzmann::hoa_bound(
        ctx,
        &HoaBoundInput {
            degree_bound: r * d,
            r,
            krull_dim: dim,
        },
    )?;
    let components_closed = component_count_bound(ctx, &t_closed, r)?;
    let pair_space = pair_space_bound(ctx, n, d, r);
    let effdiv = effdiv_bound(ctx, n, d, r);
    let hilbert_route = hilbert_route_bound(d, r)?;
    let divisor_route = divisor_route_bound(ctx, d, r)?;
    let closed_form = ClosedFormBounds {
        m,
        n,
        t_closed: t_closed.clone(),
        hoa_worst_case,
        components_closed,
        pair_space,
        effdiv,
        hilbert_route,
        divisor_route,
    };

    let sharpened = if opts.paper_faithful_only {
        None
    } else {
        let q = hilbert::divisor_hp(&inv.hp, m as i64)?;
        let (phi_exact, decomposition) = match gotzmann::gotzmann_decomposition(&q) {
            Ok(dec) => (Some(dec.len()), Some(dec.sequence().to_vec())),
            Err(e) => {
                warnings.push(format!(
                    "divisor polynomial failed the Gotzmann expansion ({e}); \
                     falling back to the closed-form bound on phi"
                ));
                (None, None)
            }
        };
        let hoa_sharp = gotzmann::hoa_bound(
            ctx,
            &HoaBoundInput {
                degree_bound: d.max(m).max(2),
                r,
                krull_dim: dim,
            },
        )?;
        let phi_for_t = match phi_exact {
            Some(phi) => phi,
            None => match &hoa_sharp {
                TowerNumber::Exact(q) => (q.ceil().numer())
                    .to_u64()
                    .ok_or_else(|| BoundsError::Arithmetic("phi bound exceeds u64".into()))?,
                _ => {
                    return Err(PipelineError::Bounds(BoundsError::Arithmetic(
                        "phi bound too large for the sharpened chain".into(),
                    )))
                }
            },
        };
        let t_sharp = phi_for_t.max(d).max(8 * r);
        if BigUint::from(t_sharp) > t_closed {
            warnings.push(
                "sharpened t exceeds the closed-form t; the closed-form chain is vacuous here"
                    .to_string(),
            );
        }
        let components_sharp = component_count_bound(ctx, &BigUint::from(t_sharp), r)?;
        let p_ideal = ideal_polynomial(&q, r);
        let stats = grassmannian_stats(&p_ideal, t_sharp, r)?;
        let component_sharp = chart_component_bound(ctx, &p_ideal, t_sharp, r)?;
        Some(SharpenedChain {
            divisor_hp: q,
            phi_exact,
            decomposition,
            hoa_sharp,
            t_sharp,
            components_sharp,
            stats,
            component_sharp,
        })
    };

    Ok(BoundReport {
        invariants: inv,
        smoothness,
        warnings,
        degenerate: None,
        closed_form: Some(closed_form),
        sharpened,
        generator_bound: generator_bound_value,
    })
}

/// Jacobian criterion: c = codim X, J = I + (c x c minors of Jac), smooth
/// iff the Hilbert polynomial of J vanishes identically. Budget overruns
/// surface as Indeterminate, never as a wrong verdict.
pub fn smoothness_check(
    ideal: &IdealPresentation,
    opts: &HilbertOptions,
) -> Result<Smoothness, PipelineError> {
    let inv = hilbert::invariants(ideal, opts)?;
    let j = match groebner::jacobian_minor_ideal(ideal, inv.codim) {
        Ok(j) => j,
        Err(_) => return Ok(Smoothness::Indeterminate),
    };
    let gb = match groebner::buchberger(&j, opts.order, &opts.budget) {
        Ok(gb) => gb,
        Err(_) => return Ok(Smoothness::Indeterminate),
    };
    let lead = groebner::lead_term_ideal(&gb);
    let num = match hilbert::hilbert_series(&lead, j.r(), opts.max_series_nodes) {
        Ok(num) => num,
        Err(_) => return Ok(Smoothness::Indeterminate),
    };
    let hp = hilbert::hilbert_polynomial(&num, j.r());
    Ok(if hp.is_zero() {
        Smoothness::Smooth
    } else {
        Smoothness::Singular
    })
}
