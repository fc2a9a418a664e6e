//! Tower numbers: bound values stored exactly, as a certified log2 enclosure,
//! or symbolically as 2^(b^e).
//!
//! The bounds this crate computes range from small integers to towers like
//! 2^(2^216) with no feasible positional representation. A `TowerNumber`
//! keeps the exact value while it fits (below a configurable bit threshold)
//! and otherwise a certified upper enclosure; every operation rounds so the
//! stored value never underestimates the mathematical one. Comparisons across
//! forms are sound: they may answer `Incomparable` but never a wrong strict
//! order.

use crate::dyadic::{Dir, Dyadic, RealBound};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Precision and exact-form thresholds threaded through bound evaluation.
#[derive(Clone, Copy, Debug)]
pub struct TowerContext {
    /// Fractional bits carried by directed log/div operations.
    pub precision_bits: u64,
    /// Largest bit size kept in exact form.
    pub exact_bit_limit: u64,
}

impl Default for TowerContext {
    fn default() -> Self {
        TowerContext {
            precision_bits: 128,
            exact_bit_limit: 1_000_000,
        }
    }
}

impl TowerContext {
    pub fn with_precision(precision_bits: u64) -> Self {
        TowerContext {
            precision_bits,
            ..TowerContext::default()
        }
    }
}

/// Outcome of a sound comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TowerCmp {
    Less,
    Equal,
    Greater,
    /// The enclosures overlap at the working precision.
    Incomparable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TowerNumber {
    /// Exact positive rational (integral in almost all uses).
    Exact(BigRational),
    /// v with log2(v) certified inside the enclosure.
    Log2(RealBound),
    /// v = 2^(inner_base^e) with e certified inside the enclosure.
    Tower {
        inner_base: BigUint,
        inner_exp: RealBound,
    },
}

fn ceil_log2_biguint(n: &BigUint) -> u64 {
    // Smallest k with n <= 2^k.
    let bits = n.bits();
    if n.count_ones() == 1 {
        bits - 1
    } else {
        bits
    }
}

impl TowerNumber {
    pub fn one() -> Self {
        TowerNumber::Exact(BigRational::one())
    }

    pub fn from_biguint(n: BigUint) -> Self {
        TowerNumber::Exact(BigRational::from(BigInt::from(n)))
    }

    pub fn from_u64(n: u64) -> Self {
        TowerNumber::from_biguint(BigUint::from(n))
    }

    pub fn from_ratio(q: BigRational) -> Self {
        assert!(q > BigRational::zero(), "tower numbers are positive");
        TowerNumber::Exact(q)
    }

    pub fn is_one(&self) -> bool {
        matches!(self, TowerNumber::Exact(q) if q.is_one())
    }

    /// base^exp for integer base >= 1, exact below the bit threshold and a
    /// certified log2 enclosure above it.
    pub fn pow_integer(ctx: &TowerContext, base: &BigUint, exp: &BigUint) -> TowerNumber {
        assert!(!base.is_zero(), "power of zero base");
        if base.is_one() || exp.is_zero() {
            return TowerNumber::one();
        }
        let bit_estimate = exp * BigUint::from(ceil_log2_biguint(base).max(1));
        if bit_estimate <= BigUint::from(ctx.exact_bit_limit) {
            let e = exp.to_u32().expect("bounded exponent fits u32");
            return TowerNumber::from_biguint(base.pow(e));
        }
        let log2_base = RealBound::log2_of_biguint(base, ctx.precision_bits);
        TowerNumber::Log2(log2_base.scale_biguint(exp))
    }

    /// base^exp for a positive rational base.
    pub fn pow_ratio(ctx: &TowerContext, base: &BigRational, exp: &BigUint) -> TowerNumber {
        assert!(base > &BigRational::zero());
        if exp.is_zero() || base.is_one() {
            return TowerNumber::one();
        }
        let numer = base.numer().to_biguint().expect("positive base");
        let denom = base.denom().to_biguint().expect("positive denominator");
        let bit_estimate = exp
            * BigUint::from(ceil_log2_biguint(&numer).max(1) + ceil_log2_biguint(&denom).max(1));
        if bit_estimate <= BigUint::from(ctx.exact_bit_limit) {
            let e = exp.to_u32().expect("bounded exponent fits u32");
            return TowerNumber::Exact(BigRational::new(
                BigInt::from(numer.pow(e)),
                BigInt::from(denom.pow(e)),
            ));
        }
        let log2_base = RealBound::log2_of_ratio(&numer, &denom, ctx.precision_bits);
        TowerNumber::Log2(log2_base.scale_biguint(exp))
    }

    /// Product; not defined for symbolic towers (the pipeline never needs it).
    pub fn mul(&self, other: &TowerNumber, ctx: &TowerContext) -> TowerNumber {
        match (self, other) {
            (TowerNumber::Exact(a), TowerNumber::Exact(b)) => {
                let prod = a * b;
                let bits = prod.numer().magnitude().bits() + prod.denom().magnitude().bits();
                if bits <= ctx.exact_bit_limit {
                    TowerNumber::Exact(prod)
                } else {
                    TowerNumber::Log2(self.log2_interval(ctx).add(&other.log2_interval(ctx)))
                }
            }
            (TowerNumber::Tower { .. }, _) | (_, TowerNumber::Tower { .. }) => {
                panic!("product of symbolic towers is not supported")
            }
            _ => TowerNumber::Log2(self.log2_interval(ctx).add(&other.log2_interval(ctx))),
        }
    }

    /// Certified enclosure of log2 of the value. For towers whose inner power
    /// is out of exact reach the enclosure falls back to neighboring powers
    /// of two, which stays sound.
    pub fn log2_interval(&self, ctx: &TowerContext) -> RealBound {
        match self {
            TowerNumber::Exact(q) => {
                let numer = q.numer().to_biguint().expect("positive value");
                let denom = q.denom().to_biguint().expect("positive denominator");
                RealBound::log2_of_ratio(&numer, &denom, ctx.precision_bits)
            }
            TowerNumber::Log2(b) => b.clone(),
            TowerNumber::Tower {
                inner_base,
                inner_exp,
            } => {
                // log2 v = base^e.
                if inner_exp.is_exact() {
                    let e = &inner_exp.lo;
                    if e.exp() >= 0 {
                        // Integral exponent: try the exact power.
                        if let Some(e_int) = e.floor_bigint().to_u32() {
                            let bits = u64::from(e_int) * ceil_log2_biguint(inner_base).max(1);
                            if bits <= (1 << 22) {
                                return RealBound::exact(Dyadic::from_biguint(
                                    &inner_base.pow(e_int),
                                ));
                            }
                        }
                    }
                }
                let l = inner_exp.mul_nonneg(
                    &RealBound::log2_of_biguint(inner_base, ctx.precision_bits),
                    ctx.precision_bits,
                );
                RealBound {
                    lo: l.lo.exp2(ctx.precision_bits, crate::dyadic::Dir::Down),
                    hi: l.hi.exp2(ctx.precision_bits, crate::dyadic::Dir::Up),
                }
            }
        }
    }

    /// Certified enclosure of log2(log2 v), when v > 1 is certain.
    pub fn loglog2_interval(&self, ctx: &TowerContext) -> Option<RealBound> {
        match self {
            TowerNumber::Tower {
                inner_base,
                inner_exp,
            } => Some(inner_exp.mul_nonneg(
                &RealBound::log2_of_biguint(inner_base, ctx.precision_bits),
                ctx.precision_bits,
            )),
            _ => {
                let l = self.log2_interval(ctx);
                if l.lo.is_positive() {
                    Some(l.log2(ctx.precision_bits))
                } else {
                    None
                }
            }
        }
    }

    /// Sound comparison. Tries exact values, then shared-base exponents,
    /// then log-log and log enclosures.
    pub fn cmp(&self, other: &TowerNumber, ctx: &TowerContext) -> TowerCmp {
        if let (TowerNumber::Exact(a), TowerNumber::Exact(b)) = (self, other) {
            return match a.cmp(b) {
                Ordering::Less => TowerCmp::Less,
                Ordering::Equal => TowerCmp::Equal,
                Ordering::Greater => TowerCmp::Greater,
            };
        }
        if let (
            TowerNumber::Tower {
                inner_base: b1,
                inner_exp: e1,
            },
            TowerNumber::Tower {
                inner_base: b2,
                inner_exp: e2,
            },
        ) = (self, other)
        {
            if b1 == b2 {
                match e1.cmp_certain(e2) {
                    Some(Ordering::Less) => return TowerCmp::Less,
                    Some(Ordering::Greater) => return TowerCmp::Greater,
                    Some(Ordering::Equal) => return TowerCmp::Equal,
                    None => {}
                }
            }
        }
        if self == other {
            return TowerCmp::Equal;
        }
        if let (Some(a), Some(b)) = (self.loglog2_interval(ctx), other.loglog2_interval(ctx)) {
            match a.cmp_certain(&b) {
                Some(Ordering::Less) => return TowerCmp::Less,
                Some(Ordering::Greater) => return TowerCmp::Greater,
                _ => {}
            }
            // Towers whose log2 would overflow the dyadic exponent range can
            // only be separated in log-log space.
            if !a.hi.fits_exp2() || !b.hi.fits_exp2() {
                return TowerCmp::Incomparable;
            }
        }
        match self
            .log2_interval(ctx)
            .cmp_certain(&other.log2_interval(ctx))
        {
            Some(Ordering::Less) => TowerCmp::Less,
            Some(Ordering::Greater) => TowerCmp::Greater,
            _ => TowerCmp::Incomparable,
        }
    }

    /// Upper bound on the number of decimal digits, as a short human string;
    /// None when even the log2 of the value overflows the dyadic range.
    pub fn digits10_upper(&self, ctx: &TowerContext) -> Option<String> {
        if let Some(ll) = self.loglog2_interval(ctx) {
            if !ll.hi.fits_exp2() {
                return None;
            }
        }
        let l = self.log2_interval(ctx);
        // digits ~ log10 v = log2 v / log2 10
        let log2_ten = RealBound::log2_of_biguint(&BigUint::from(10u32), ctx.precision_bits);
        let d = l.div_pos(&log2_ten, ctx.precision_bits);
        Some(d.hi.to_decimal(4, Dir::Up))
    }
}

impl fmt::Display for TowerNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TowerNumber::Exact(q) => {
                if q.denom().is_one() {
                    let s = q.numer().to_string();
                    if s.len() <= 40 {
                        write!(f, "{s}")
                    } else {
                        let d = Dyadic::from_bigint(q.numer());
                        write!(f, "{} ({} digits)", d.to_decimal(6, Dir::Up), s.len())
                    }
                } else if let Some(d) = Dyadic::from_pow2_ratio(q) {
                    write!(f, "{}", d.to_decimal(15, Dir::Up))
                } else {
                    let d = Dyadic::from_bigint(q.numer());
                    let e = Dyadic::from_bigint(q.denom());
                    write!(
                        f,
                        "{}/{} ~ {}",
                        q.numer(),
                        q.denom(),
                        d.div(&e, 64, Dir::Up).to_decimal(8, Dir::Up)
                    )
                }
            }
            TowerNumber::Log2(b) => {
                write!(f, "2^{} [log2 rounded up]", b.hi.to_decimal(8, Dir::Up))
            }
            TowerNumber::Tower {
                inner_base,
                inner_exp,
            } => {
                if inner_exp.is_exact() && inner_exp.lo.exp() >= 0 {
                    write!(f, "2^({}^{})", inner_base, inner_exp.lo.floor_bigint())
                } else {
                    write!(
                        f,
                        "2^({}^{}) [exponent rounded up]",
                        inner_base,
                        inner_exp.hi.to_decimal(8, Dir::Up)
                    )
                }
            }
        }
    }
}
