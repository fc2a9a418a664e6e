//! The machine-readable report documents (schema "ns-bound/1") and their
//! human renderings.
//!
//! Serialization is deterministic: struct field order, decimal strings for
//! big integers, and directed 40-digit renderings for enclosure endpoints.

use nsbound::bounds::{BoundReport, GrassmannianStats};
use nsbound::dyadic::{Dir, Dyadic};
use nsbound::groebner::Smoothness;
use nsbound::hilbert::VarietyInvariants;
use nsbound::tower::{TowerContext, TowerNumber};
use nsbound::verify::VerificationOutcome;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "ns-bound/1";

/// Significant digits used for enclosure endpoints in JSON.
const JSON_SIG_DIGITS: u32 = 40;

// ---------------------------------------------------------------------------
// Tower number JSON form
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TowerJson {
    Exact {
        decimal: String,
    },
    Log2 {
        value: String,
        rounding: String,
    },
    Tower {
        base: u64,
        inner_base: String,
        inner_exp: String,
    },
}

/// Finite decimal expansion of a positive rational whose denominator divides
/// 2^a 5^b, when short enough to print.
fn finite_decimal(q: &num_rational::BigRational) -> Option<String> {
    use num_bigint::BigUint;
    use num_traits::Zero;
    if q.denom().is_one() {
        return Some(q.numer().to_string());
    }
    let mut den = q.denom().magnitude().clone();
    let mut twos = 0u32;
    let mut fives = 0u32;
    let two = BigUint::from(2u32);
    let five = BigUint::from(5u32);
    while (&den % &two).is_zero() {
        den /= &two;
        twos += 1;
        if twos > 4096 {
            return None;
        }
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
        if fives > 4096 {
            return None;
        }
    }
    if !den.is_one() {
        return None;
    }
    let shift = twos.max(fives);
    let scaled = q.numer().magnitude()
        * BigUint::from(2u32).pow(shift - twos)
        * BigUint::from(5u32).pow(shift - fives);
    let s = scaled.to_string();
    if s.len() > 4200 {
        return None;
    }
    let s = format!("{:0>width$}", s, width = shift as usize + 1);
    let (int_part, frac) = s.split_at(s.len() - shift as usize);
    let sign = if q.numer().is_negative() { "-" } else { "" };
    Some(format!("{sign}{int_part}.{frac}"))
}

pub fn tower_to_json(v: &TowerNumber) -> TowerJson {
    match v {
        TowerNumber::Exact(q) => TowerJson::Exact {
            decimal: finite_decimal(q).unwrap_or_else(|| format!("{}/{}", q.numer(), q.denom())),
        },
        TowerNumber::Log2(b) => TowerJson::Log2 {
            value: b.hi.to_decimal(JSON_SIG_DIGITS, Dir::Up),
            rounding: "up".to_string(),
        },
        TowerNumber::Tower {
            inner_base,
            inner_exp,
        } => TowerJson::Tower {
            base: 2,
            inner_base: inner_base.to_string(),
            inner_exp: if inner_exp.is_exact() && inner_exp.lo.exp() >= 0 {
                inner_exp.lo.floor_bigint().to_string()
            } else {
                inner_exp.hi.to_decimal(JSON_SIG_DIGITS, Dir::Up)
            },
        },
    }
}

/// A bound value together with the formula it instantiates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourcedBound {
    pub value: TowerJson,
    pub source: String,
}

fn sourced(v: &TowerNumber, source: &str) -> SourcedBound {
    SourcedBound {
        value: tower_to_json(v),
        source: source.to_string(),
    }
}

// ---------------------------------------------------------------------------
// Report documents
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsJson {
    pub r: u64,
    pub d: u64,
    #[serde(rename = "dimX")]
    pub dim_x: u64,
    pub codim: u64,
    #[serde(rename = "degX")]
    pub deg_x: u64,
    pub hp: String,
    pub hp_binomial: Vec<String>,
}

pub fn invariants_to_json(inv: &VarietyInvariants) -> InvariantsJson {
    InvariantsJson {
        r: inv.r as u64,
        d: inv.max_gen_degree as u64,
        dim_x: inv.dim as u64,
        codim: inv.codim as u64,
        deg_x: inv.degree,
        hp: inv.hp.to_text(),
        hp_binomial: inv
            .hp
            .binomial_coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect(),
    }
}

pub fn smoothness_str(s: Option<Smoothness>) -> String {
    match s {
        None => "not-checked".to_string(),
        Some(v) => v.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsDocument {
    pub schema: String,
    pub command: String,
    pub invariants: InvariantsJson,
    pub smoothness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormJson {
    pub m: u64,
    pub n: u64,
    pub t_closed: String,
    pub hoa_worst_case: SourcedBound,
    pub components_closed: SourcedBound,
    pub pair_space: SourcedBound,
    pub effdiv: SourcedBound,
    pub hilbert_route: SourcedBound,
    pub divisor_route: SourcedBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrassmannianJson {
    pub q: String,
    #[serde(rename = "N")]
    pub n: String,
    pub ambient_dim: String,
    pub minor_degree: String,
}

fn grassmannian_to_json(s: &GrassmannianStats) -> GrassmannianJson {
    GrassmannianJson {
        q: s.subspace_dim.to_string(),
        n: s.space_dim.to_string(),
        ambient_dim: s.ambient_dim.to_string(),
        minor_degree: s.minor_degree.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpenedJson {
    pub divisor_hp: String,
    pub phi_exact: Option<u64>,
    pub decomposition: Option<Vec<u64>>,
    pub hoa_sharp: SourcedBound,
    pub t_sharp: u64,
    pub components_sharp: SourcedBound,
    pub grassmannian: GrassmannianJson,
    pub component_sharp: SourcedBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerateJson {
    pub reason: String,
    pub bound: TowerJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundDocument {
    pub schema: String,
    pub command: String,
    pub invariants: InvariantsJson,
    pub smoothness: String,
    pub warnings: Vec<String>,
    pub degenerate: Option<DegenerateJson>,
    pub closed_form: Option<ClosedFormJson>,
    pub sharpened: Option<SharpenedJson>,
    pub generator_bound: SourcedBound,
}

pub fn bound_to_json(report: &BoundReport) -> BoundDocument {
    let closed_form = report.closed_form.as_ref().map(|c| ClosedFormJson {
        m: c.m,
        n: c.n,
        t_closed: c.t_closed.to_string(),
        hoa_worst_case: sourced(
            &c.hoa_worst_case,
            "(3/2 (rd)^(r+1-a) + rd)^(a 2^(a-1)), a = dim X",
        ),
        components_closed: sourced(
            &c.components_closed,
            "t^(r t^(2r)) at t = (2rd)^((r+1) 2^(r-2))",
        ),
        pair_space: sourced(&c.pair_space, "C(2 max(n,d) + (r-1)d, r)^(2 C(n+r,r) - 2)"),
        effdiv: sourced(&c.effdiv, "2^n C(2 max(n,d) + (r-1)d, r)^(2 C(n+r,r) - 2)"),
        hilbert_route: sourced(
            &c.hilbert_route,
            "2^(d^(2^r r^3)) = 2^(d^(2^(r + 3 log2 r)))",
        ),
        divisor_route: sourced(&c.divisor_route, "2^(d^(r^2 + 2r log2 r))"),
    });
    let sharpened = report.sharpened.as_ref().map(|s| SharpenedJson {
        divisor_hp: s.divisor_hp.to_text(),
        phi_exact: s.phi_exact,
        decomposition: s.decomposition.clone(),
        hoa_sharp: sourced(
            &s.hoa_sharp,
            "(3/2 D^(r+1-a) + D)^(a 2^(a-1)), D = max(d, m, 2), a = dim X",
        ),
        t_sharp: s.t_sharp,
        components_sharp: sourced(&s.components_sharp, "t^(r t^(2r)) at t = max(phi, d, 8r)"),
        grassmannian: grassmannian_to_json(&s.stats),
        component_sharp: sourced(
            &s.component_sharp,
            "max(P(t+1)+1, P(t)+1)^(P(t)(C(t+r,r) - P(t))) at t = t_sharp",
        ),
    });
    BoundDocument {
        schema: SCHEMA.to_string(),
        command: "bound".to_string(),
        invariants: invariants_to_json(&report.invariants),
        smoothness: smoothness_str(report.smoothness),
        warnings: report.warnings.clone(),
        degenerate: report.degenerate.as_ref().map(|reason| DegenerateJson {
            reason: reason.clone(),
            bound: tower_to_json(&TowerNumber::one()),
        }),
        closed_form,
        sharpened,
        generator_bound: sourced(
            &TowerNumber::from_u64(report.generator_bound),
            "(deg X - 1)(deg X - 2)",
        ),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GotzmannDocument {
    pub schema: String,
    pub command: String,
    pub hp: String,
    pub decomposition: Vec<u64>,
    pub phi: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeJson {
    pub check: String,
    pub params: String,
    pub holds: bool,
    pub left: TowerJson,
    pub right: TowerJson,
    pub margin_log2: Option<String>,
}

pub fn outcome_to_json(o: &VerificationOutcome) -> OutcomeJson {
    OutcomeJson {
        check: o.check.to_string(),
        params: o.params_string(),
        holds: o.holds,
        left: tower_to_json(&o.left),
        right: tower_to_json(&o.right),
        margin_log2: o.margin_log2.clone(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub schema: String,
    pub command: String,
    pub grid: String,
    pub total: u64,
    pub failures: u64,
    pub outcomes: Vec<OutcomeJson>,
}

// ---------------------------------------------------------------------------
// Human rendering
// ---------------------------------------------------------------------------

/// Short human form of a bound: exact decimals while readable, towers with
/// decimal digit counts otherwise.
pub fn human_tower(v: &TowerNumber, ctx: &TowerContext, exact: bool) -> String {
    match v {
        TowerNumber::Exact(q) if q.denom().is_one() => {
            let s = q.numer().to_string();
            if exact || s.len() <= 20 {
                s
            } else {
                format!(
                    "~{} ({} digits)",
                    Dyadic::from_bigint(q.numer()).to_decimal(5, Dir::Up),
                    s.len()
                )
            }
        }
        TowerNumber::Exact(_) => v.to_string(),
        _ => match v.digits10_upper(ctx) {
            Some(digits) => format!("{v} ~ 10^{digits}"),
            None => v.to_string(),
        },
    }
}

pub fn render_invariants(inv: &VarietyInvariants, smoothness: Option<Smoothness>) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "ambient:            P^{} ({} variables)\n",
        inv.r,
        inv.r + 1
    ));
    out.push_str(&format!("generator degree:   d = {}\n", inv.max_gen_degree));
    out.push_str(&format!(
        "dim X = {}   codim X = {}   deg X = {}\n",
        inv.dim, inv.codim, inv.degree
    ));
    out.push_str(&format!("hilbert polynomial: {}\n", inv.hp.to_text()));
    out.push_str(&format!(
        "binomial basis:     {:?}\n",
        inv.hp
            .binomial_coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
    ));
    out.push_str(&format!(
        "smoothness:         {}\n",
        smoothness_str(smoothness)
    ));
    out
}

pub fn render_bound_report(report: &BoundReport, ctx: &TowerContext, exact: bool) -> String {
    let mut out = String::new();
    out.push_str(&render_invariants(&report.invariants, report.smoothness));
    if !report.warnings.is_empty() {
        out.push_str("warnings:\n");
        for w in &report.warnings {
            out.push_str(&format!("  - {w}\n"));
        }
    }
    if let Some(reason) = &report.degenerate {
        out.push_str(&format!("\ntorsion bound: 1 (trivial torsion: {reason})\n"));
        out.push_str(&format!(
            "generator bound: {} ((deg-1)(deg-2); trivially 0 generators here)\n",
            report.generator_bound
        ));
        return out;
    }
    let c = report.closed_form.as_ref().expect("non-degenerate report");
    out.push_str("\nclosed-form chain (worst-case substitutions):\n");
    out.push_str(&format!("  m = (d-1) codim        = {}\n", c.m));
    out.push_str(&format!("  n = m deg X            = {}\n", c.n));
    let t_str = if c.t_closed.to_string().len() <= 20 {
        c.t_closed.to_string()
    } else {
        format!(
            "~{} ({} digits)",
            Dyadic::from_biguint(&c.t_closed).to_decimal(5, Dir::Up),
            c.t_closed.to_string().len()
        )
    };
    out.push_str(&format!("  t_closed               = {t_str}\n"));
    out.push_str(&format!(
        "  hoa phi bound (D = rd) = {}\n",
        human_tower(&c.hoa_worst_case, ctx, exact)
    ));
    out.push_str(&format!(
        "  components at t_closed = {}\n",
        human_tower(&c.components_closed, ctx, exact)
    ));
    out.push_str(&format!(
        "  pair-space components  = {}\n",
        human_tower(&c.pair_space, ctx, exact)
    ));
    out.push_str(&format!(
        "  EffDiv_n components    = {}\n",
        human_tower(&c.effdiv, ctx, exact)
    ));
    out.push_str(&format!(
        "  torsion bound (hilbert scheme route) = {}\n",
        human_tower(&c.hilbert_route, ctx, exact)
    ));
    out.push_str(&format!(
        "  torsion bound (divisor route)        = {}\n",
        human_tower(&c.divisor_route, ctx, exact)
    ));
    if let Some(s) = &report.sharpened {
        out.push_str("\nsharpened chain (exactly computed quantities):\n");
        out.push_str(&format!(
            "  divisor polynomial Q   = {}\n",
            s.divisor_hp.to_text()
        ));
        match (&s.phi_exact, &s.decomposition) {
            (Some(phi), Some(dec)) => {
                let shown: Vec<String> = dec.iter().take(16).map(|a| a.to_string()).collect();
                let ellipsis = if dec.len() > 16 { ", ..." } else { "" };
                out.push_str(&format!(
                    "  gotzmann number phi    = {phi} (decomposition [{}{ellipsis}])\n",
                    shown.join(", ")
                ));
            }
            _ => out.push_str("  gotzmann number phi    = (not admissible; see warnings)\n"),
        }
        out.push_str(&format!(
            "  hoa phi bound (D = max(d,m,2)) = {}\n",
            human_tower(&s.hoa_sharp, ctx, exact)
        ));
        out.push_str(&format!("  t_sharp = max(phi, d, 8r) = {}\n", s.t_sharp));
        out.push_str(&format!(
            "  components at t_sharp  = {}\n",
            human_tower(&s.components_sharp, ctx, exact)
        ));
        out.push_str(&format!(
            "  grassmannian chart     : q = {}, N = {}, ambient dim = {}, minor degree = {}\n",
            s.stats.subspace_dim, s.stats.space_dim, s.stats.ambient_dim, s.stats.minor_degree
        ));
        out.push_str(&format!(
            "  sharp component bound  = {}\n",
            human_tower(&s.component_sharp, ctx, exact)
        ));
        if matches!(
            s.components_sharp.cmp(&c.components_closed, ctx),
            nsbound::tower::TowerCmp::Less
        ) {
            out.push_str(
                "  note: the sharpened component count is far below the worst-case \
                 closed-form count\n",
            );
        }
    }
    out.push_str(&format!(
        "\ngenerator bound ((deg X - 1)(deg X - 2)) = {}\n",
        report.generator_bound
    ));
    out
}

pub fn render_outcomes(outcomes: &[VerificationOutcome], ctx: &TowerContext) -> String {
    let mut out = String::new();
    for o in outcomes {
        let status = if o.holds { "ok  " } else { "FAIL" };
        let margin = o
            .margin_log2
            .as_ref()
            .map(|m| format!(" (margin log2 {m})"))
            .unwrap_or_default();
        out.push_str(&format!(
            "[{status}] {} {}: {} vs {}{margin}\n",
            o.check,
            o.params_string(),
            human_tower(&o.left, ctx, false),
            human_tower(&o.right, ctx, false),
        ));
    }
    let failures: Vec<&VerificationOutcome> = outcomes.iter().filter(|o| !o.holds).collect();
    if failures.is_empty() {
        out.push_str(&format!("\nall {} checks hold\n", outcomes.len()));
    } else {
        out.push_str(&format!(
            "\nDISCREPANCY LOG: {} of {} checks FAILED\n",
            failures.len(),
            outcomes.len()
        ));
        for o in failures {
            out.push_str(&format!(
                "  {} at {}: left {} exceeds right {}\n",
                o.check,
                o.params_string(),
                human_tower(&o.left, ctx, false),
                human_tower(&o.right, ctx, false),
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn finite_decimal_cases() {
        let q = BigRational::new(BigInt::from(50625), BigInt::from(16));
        assert_eq!(finite_decimal(&q).unwrap(), "3164.0625");
        let q = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(finite_decimal(&q), None);
        let q = BigRational::from(BigInt::from(42));
        assert_eq!(finite_decimal(&q).unwrap(), "42");
    }

    #[test]
    fn tower_json_round_trip() {
        let vals = vec![
            TowerJson::Exact {
                decimal: "4096".into(),
            },
            TowerJson::Log2 {
                value: "524288".into(),
                rounding: "up".into(),
            },
            TowerJson::Tower {
                base: 2,
                inner_base: "2".into(),
                inner_exp: "216".into(),
            },
        ];
        for v in vals {
            let s = serde_json::to_string(&v).unwrap();
            let back: TowerJson = serde_json::from_str(&s).unwrap();
            assert_eq!(v, back);
        }
    }

    #[test]
    fn tower_json_shapes() {
        let t = TowerNumber::Tower {
            inner_base: num_bigint::BigUint::from(2u32),
            inner_exp: nsbound::dyadic::RealBound::from_u64(216),
        };
        let j = serde_json::to_value(tower_to_json(&t)).unwrap();
        assert_eq!(j["kind"], "tower");
        assert_eq!(j["base"], 2);
        assert_eq!(j["inner_base"], "2");
        assert_eq!(j["inner_exp"], "216");
    }
}
