//! Independent numerical verification of the inequality chains behind the
//! closed-form bounds, over configurable parameter grids.
//!
//! Every check uses exact integer arithmetic where both sides are integers
//! and directed rounding (left rounded up, right rounded down) where
//! logarithms are involved, so a reported "holds" is a machine-sound
//! certificate. A failed inequality is an outcome, never a crash: failures
//! are collected into a discrepancy log by the caller.

use crate::bounds::{self, BoundsError};
use crate::dyadic::{Dir, RealBound};
use crate::gotzmann::{self, HoaBoundInput};
use crate::hilbert::{self, HilbertOptions};
use crate::poly::{parse_polynomial, IdealPresentation, Polynomial};
use crate::tower::{TowerCmp, TowerContext, TowerNumber};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

/// Inclusive parameter ranges for grid runs.
#[derive(Clone, Debug)]
pub struct GridSpec {
    pub r_min: u64,
    pub r_max: u64,
    pub d_min: u64,
    pub d_max: u64,
    pub precision_bits: u64,
    /// Override for the t sample points of the binomial check; the default
    /// samples {8r, 8r+1, 8r+7, 16r, 64r} per r.
    pub t_samples: Option<Vec<u64>>,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            r_min: 3,
            r_max: 8,
            d_min: 2,
            d_max: 8,
            precision_bits: 128,
            t_samples: None,
        }
    }
}

impl GridSpec {
    pub fn tower_context(&self) -> TowerContext {
        TowerContext::with_precision(self.precision_bits)
    }

    pub fn t_samples_for(&self, r: u64) -> Vec<u64> {
        match &self.t_samples {
            Some(ts) => ts.clone(),
            None => vec![8 * r, 8 * r + 1, 8 * r + 7, 16 * r, 64 * r],
        }
    }
}

/// One checked inequality at one parameter point.
#[derive(Clone, Debug)]
pub struct VerificationOutcome {
    pub check: &'static str,
    /// Ordered (name, value) parameter list.
    pub params: Vec<(&'static str, u64)>,
    pub holds: bool,
    pub left: TowerNumber,
    pub right: TowerNumber,
    /// Certified lower bound on log2(right) - log2(left) when both sides
    /// admit one; negative margins accompany failures.
    pub margin_log2: Option<String>,
}

impl VerificationOutcome {
    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn margin_from_log2(ctx: &TowerContext, left: &TowerNumber, right: &TowerNumber) -> Option<String> {
    let l = left.log2_interval(ctx);
    let r = right.log2_interval(ctx);
    Some(r.sub(&l).lo.to_decimal(8, Dir::Down))
}

/// C(t+1+r, r) < t^r, exact. Requires r >= 2 and t >= 8r.
pub fn check_binom_lt_power(r: u64, t: u64) -> Result<VerificationOutcome, BoundsError> {
    if r < 2 {
        return Err(BoundsError::RTooSmall { r, min: 2 });
    }
    if t < 8 * r {
        return Err(BoundsError::TTooSmall {
            t: t.to_string(),
            min: 8 * r,
        });
    }
    let left = bounds::binomial_u64(t + 1 + r, r);
    let right = BigUint::from(t).pow(r as u32);
    let holds = left < right;
    let ctx = TowerContext::default();
    let left = TowerNumber::from_biguint(left);
    let right = TowerNumber::from_biguint(right);
    let margin = margin_from_log2(&ctx, &left, &right);
    Ok(VerificationOutcome {
        check: "binom_lt_power",
        params: vec![("r", r), ("t", t)],
        holds,
        left,
        right,
        margin_log2: margin,
    })
}

/// The closed-form t against the Gotzmann-number bound it is meant to
/// dominate: t >= (3/2 (rd)^(r+1-a) + rd)^(a 2^(a-1)) for 1 <= a <= r-1,
/// checked exactly, together with the coarser exponent rewrite
/// (r+1-a) a 2^(a-1) <= (r+1) 2^(r-2) it rests on. Outcomes are measured,
/// not assumed: the rewrite fails pointwise for some (d, r, a).
pub fn check_hoa_dominates_t(d: u64, r: u64) -> Result<Vec<VerificationOutcome>, BoundsError> {
    if r < 3 {
        return Err(BoundsError::RTooSmall { r, min: 3 });
    }
    if d < 2 {
        return Err(BoundsError::DTooSmall { d, min: 2 });
    }
    let t = bounds::closed_form_t(d, r)?;
    let ctx = TowerContext::default();
    let mut out = Vec::new();
    for a in 1..r {
        // Exact comparison of ((3(rd)^(r+1-a) + 2rd)/2)^E with t:
        // lhs <= t  iff  (3(rd)^(r+1-a) + 2rd)^E <= t * 2^E.
        let e = a
            .checked_mul(1u64 << (a - 1))
            .expect("exponent fits u64 at desk scale");
        let rd = BigUint::from(r * d);
        let numer = BigUint::from(3u32) * rd.pow((r + 1 - a) as u32) + BigUint::from(2u32) * &rd;
        let lhs_pow = numer.pow(e as u32);
        let rhs_pow = &t << e;
        let holds = lhs_pow <= rhs_pow;
        let left = TowerNumber::Exact(num_rational::BigRational::new(
            lhs_pow.into(),
            num_bigint::BigInt::from(BigUint::one() << e),
        ));
        let right = TowerNumber::from_biguint(t.clone());
        let margin = margin_from_log2(&ctx, &left, &right);
        out.push(VerificationOutcome {
            check: "hoa_le_t",
            params: vec![("d", d), ("r", r), ("a", a)],
            holds,
            left,
            right,
            margin_log2: margin,
        });
        // Exponent rewrite used to justify the domination.
        let lhs_exp = (r + 1 - a) * e;
        let rhs_exp = (r + 1) * (1u64 << (r - 2));
        out.push(VerificationOutcome {
            check: "hoa_exponent_form",
            params: vec![("d", d), ("r", r), ("a", a)],
            holds: lhs_exp <= rhs_exp,
            left: TowerNumber::from_u64(lhs_exp),
            right: TowerNumber::from_u64(rhs_exp),
            margin_log2: None,
        });
    }
    Ok(out)
}

/// log2 log_d log2 of the closed-form component count stays below
/// r + 3 log2 r. Left side rounded up, right side rounded down.
pub fn check_hilbert_route_chain(
    grid_ctx: &TowerContext,
    d: u64,
    r: u64,
) -> Result<VerificationOutcome, BoundsError> {
    if r < 3 {
        return Err(BoundsError::RTooSmall { r, min: 3 });
    }
    if d < 2 {
        return Err(BoundsError::DTooSmall { d, min: 2 });
    }
    let prec = grid_ctx.precision_bits;
    let t = bounds::closed_form_t(d, r)?;
    let conn = bounds::component_count_bound(grid_ctx, &t, r)?;
    let log2_conn = conn.log2_interval(grid_ctx);
    let log2_d = RealBound::log2_of_biguint(&BigUint::from(d), prec);
    let logd_log2 = log2_conn.log2(prec).div_pos(&log2_d, prec);
    let left = logd_log2.log2(prec);
    let log2_r = RealBound::log2_of_biguint(&BigUint::from(r), prec);
    let right = log2_r
        .scale_biguint(&BigUint::from(3u32))
        .add(&RealBound::from_u64(r));
    let holds = left.le_certain(&right);
    let margin = right.sub(&left).lo.to_decimal(8, Dir::Down);
    Ok(VerificationOutcome {
        check: "hilbert_route_chain",
        params: vec![("d", d), ("r", r)],
        holds,
        left: TowerNumber::Exact(left.hi.to_ratio()),
        right: TowerNumber::Exact(right.lo.to_ratio()),
        margin_log2: Some(margin),
    })
}

/// log_d log2 of the divisor-count bound at the worst-case n stays below
/// r^2 + 2r log2 r.
pub fn check_divisor_route_chain(
    grid_ctx: &TowerContext,
    d: u64,
    r: u64,
) -> Result<VerificationOutcome, BoundsError> {
    if r < 3 {
        return Err(BoundsError::RTooSmall { r, min: 3 });
    }
    if d < 2 {
        return Err(BoundsError::DTooSmall { d, min: 2 });
    }
    let prec = grid_ctx.precision_bits;
    let n_max = bounds::worst_case_n(d, r)
        .to_u64()
        .ok_or_else(|| BoundsError::Arithmetic("worst-case n exceeds u64".into()))?;
    let effdiv = bounds::effdiv_bound(grid_ctx, n_max, d, r);
    let log2_effdiv = effdiv.log2_interval(grid_ctx);
    let log2_d = RealBound::log2_of_biguint(&BigUint::from(d), prec);
    let left = log2_effdiv.log2(prec).div_pos(&log2_d, prec);
    let log2_r = RealBound::log2_of_biguint(&BigUint::from(r), prec);
    let right = log2_r
        .scale_biguint(&BigUint::from(2 * r))
        .add(&RealBound::from_u64(r * r));
    let holds = left.le_certain(&right);
    let margin = right.sub(&left).lo.to_decimal(8, Dir::Down);
    Ok(VerificationOutcome {
        check: "divisor_route_chain",
        params: vec![("d", d), ("r", r), ("n_max", n_max)],
        holds,
        left: TowerNumber::Exact(left.hi.to_ratio()),
        right: TowerNumber::Exact(right.lo.to_ratio()),
        margin_log2: Some(margin),
    })
}

/// Exact Gotzmann numbers of the corpus subscheme polynomials against the
/// closed-form bound with D = max{d, 2} and a = dim X + 1 (the Krull
/// dimension of the coordinate ring).
pub fn check_gotzmann_vs_hoa(
    ctx: &TowerContext,
    corpus: &[(String, IdealPresentation)],
) -> Result<Vec<VerificationOutcome>, String> {
    let opts = HilbertOptions::default();
    let mut out = Vec::new();
    for (name, ideal) in corpus {
        let inv = hilbert::invariants(ideal, &opts).map_err(|e| format!("{name}: {e}"))?;
        let phi = gotzmann::gotzmann_number(&inv.hp).map_err(|e| format!("{name}: {e}"))?;
        let hoa = gotzmann::hoa_bound(
            ctx,
            &HoaBoundInput {
                degree_bound: (inv.max_gen_degree as u64).max(2),
                r: inv.r as u64,
                krull_dim: inv.dim as u64 + 1,
            },
        )
        .map_err(|e| format!("{name}: {e}"))?;
        let left = TowerNumber::from_u64(phi);
        let holds = matches!(left.cmp(&hoa, ctx), TowerCmp::Less | TowerCmp::Equal);
        let margin = margin_from_log2(ctx, &left, &hoa);
        out.push(VerificationOutcome {
            check: "gotzmann_vs_hoa",
            params: vec![
                ("r", inv.r as u64),
                ("d", inv.max_gen_degree as u64),
                ("dim", inv.dim as u64),
                ("phi", phi),
            ],
            holds,
            left,
            right: hoa,
            margin_log2: margin,
        });
    }
    Ok(out)
}

/// divisor_route <= hilbert_route across the grid, via the exponent comparison.
pub fn compare_bounds_grid(grid: &GridSpec) -> Result<Vec<VerificationOutcome>, BoundsError> {
    let ctx = grid.tower_context();
    let mut out = Vec::new();
    for r in grid.r_min.max(3)..=grid.r_max {
        for d in grid.d_min.max(2)..=grid.d_max {
            let small = bounds::divisor_route_bound(&ctx, d, r)?;
            let big = bounds::hilbert_route_bound(d, r)?;
            let holds = matches!(small.cmp(&big, &ctx), TowerCmp::Less | TowerCmp::Equal);
            let margin = match (&small, &big) {
                (
                    TowerNumber::Tower { inner_exp: e1, .. },
                    TowerNumber::Tower { inner_exp: e2, .. },
                ) => Some(e2.sub(e1).lo.to_decimal(8, Dir::Down)),
                _ => None,
            };
            out.push(VerificationOutcome {
                check: "route_comparison",
                params: vec![("d", d), ("r", r)],
                holds,
                left: small,
                right: big,
                margin_log2: margin,
            });
        }
    }
    Ok(out)
}

/// The varieties used by the consistency checks: hypersurfaces, the twisted
/// cubic, complete intersections, and unions of points.
pub fn builtin_corpus() -> Vec<(String, IdealPresentation)> {
    let mut out = Vec::new();
    let fermat = |r: usize, d: u32| -> IdealPresentation {
        let text = (0..=r)
            .map(|i| format!("x{i}^{d}"))
            .collect::<Vec<_>>()
            .join(" + ");
        IdealPresentation::new(r, vec![parse_polynomial(&text, r).unwrap()]).unwrap()
    };
    for r in 2..=4usize {
        for d in 1..=4u32 {
            out.push((format!("fermat-hypersurface-d{d}-p{r}"), fermat(r, d)));
        }
    }
    out.push((
        "twisted-cubic".to_string(),
        IdealPresentation::new(
            3,
            vec![
                parse_polynomial("x0x2 - x1^2", 3).unwrap(),
                parse_polynomial("x0x3 - x1x2", 3).unwrap(),
                parse_polynomial("x1x3 - x2^2", 3).unwrap(),
            ],
        )
        .unwrap(),
    ));
    out.push((
        "ci-quadric-cubic-p3".to_string(),
        IdealPresentation::new(
            3,
            vec![
                parse_polynomial("x0^2 + x1^2 + x2^2 + x3^2", 3).unwrap(),
                parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3", 3).unwrap(),
            ],
        )
        .unwrap(),
    ));
    // c collinear points in P^2: V(x2, prod_{i<c} (x1 - i*x0)).
    for c in [1usize, 3, 5] {
        let mut product = Polynomial::one(3);
        for i in 0..c {
            let factor = parse_polynomial(&format!("x1 - {i}x0"), 2).unwrap();
            product = product.mul(&factor);
        }
        out.push((
            format!("{c}-points-p2"),
            IdealPresentation::new(2, vec![parse_polynomial("x2", 2).unwrap(), product]).unwrap(),
        ));
    }
    out
}

/// Which checks a run executes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    BinomLtPower,
    HoaStep,
    HilbertRouteChain,
    DivisorRouteChain,
    GotzmannVsHoa,
    CompareBounds,
}

impl CheckKind {
    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::BinomLtPower => "binom",
            CheckKind::HoaStep => "hoa-step",
            CheckKind::HilbertRouteChain => "hilbert-chain",
            CheckKind::DivisorRouteChain => "divisor-chain",
            CheckKind::GotzmannVsHoa => "gotzmann-hoa",
            CheckKind::CompareBounds => "compare-bounds",
        }
    }

    pub fn from_name(name: &str) -> Option<CheckKind> {
        match name {
            "binom" => Some(CheckKind::BinomLtPower),
            "hoa-step" => Some(CheckKind::HoaStep),
            "hilbert-chain" => Some(CheckKind::HilbertRouteChain),
            "divisor-chain" => Some(CheckKind::DivisorRouteChain),
            "gotzmann-hoa" => Some(CheckKind::GotzmannVsHoa),
            "compare-bounds" => Some(CheckKind::CompareBounds),
            _ => None,
        }
    }

    /// The default run: every chain the closed-form bounds rely on. The
    /// hoa-step rewrite is opt-in because its pointwise truth is measured,
    /// not claimed.
    pub fn default_set() -> Vec<CheckKind> {
        vec![
            CheckKind::BinomLtPower,
            CheckKind::HilbertRouteChain,
            CheckKind::DivisorRouteChain,
            CheckKind::GotzmannVsHoa,
            CheckKind::CompareBounds,
        ]
    }
}

/// Runs the selected checks over the grid; outcomes arrive in a canonical
/// deterministic order.
pub fn run_checks(
    grid: &GridSpec,
    selection: &[CheckKind],
) -> Result<Vec<VerificationOutcome>, String> {
    let ctx = grid.tower_context();
    let mut out = Vec::new();
    for kind in selection {
        match kind {
            CheckKind::BinomLtPower => {
                for r in grid.r_min.max(2)..=grid.r_max {
                    for t in grid.t_samples_for(r) {
                        out.push(check_binom_lt_power(r, t).map_err(|e| e.to_string())?);
                    }
                }
            }
            CheckKind::HoaStep => {
                for r in grid.r_min.max(3)..=grid.r_max {
                    for d in grid.d_min.max(2)..=grid.d_max {
                        out.extend(check_hoa_dominates_t(d, r).map_err(|e| e.to_string())?);
                    }
                }
            }
            CheckKind::HilbertRouteChain => {
                for r in grid.r_min.max(3)..=grid.r_max {
                    for d in grid.d_min.max(2)..=grid.d_max {
                        out.push(check_hilbert_route_chain(&ctx, d, r).map_err(|e| e.to_string())?);
                    }
                }
            }
            CheckKind::DivisorRouteChain => {
                for r in grid.r_min.max(3)..=grid.r_max {
                    for d in grid.d_min.max(2)..=grid.d_max {
                        out.push(check_divisor_route_chain(&ctx, d, r).map_err(|e| e.to_string())?);
                    }
                }
            }
            CheckKind::GotzmannVsHoa => {
                out.extend(check_gotzmann_vs_hoa(&ctx, &builtin_corpus())?);
            }
            CheckKind::CompareBounds => {
                out.extend(compare_bounds_grid(grid).map_err(|e| e.to_string())?);
            }
        }
    }
    Ok(out)
}
