//! Dyadic fixed-point arithmetic with directed rounding, plus certified
//! real intervals built from it.
//!
//! A `Dyadic` is mant * 2^exp with exact add/mul/compare. Rounding and the
//! transcendental pieces (log2, division) take an explicit direction, so a
//! `RealBound` interval [lo, hi] is a machine-checkable enclosure: every
//! operation rounds lo down and hi up. Inequalities certified through these
//! intervals can only err on the side of "don't know", never report a wrong
//! strict order.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Rounding direction: Down = toward -infinity, Up = toward +infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dir {
    Down,
    Up,
}

impl Dir {
    fn flip(self) -> Dir {
        match self {
            Dir::Down => Dir::Up,
            Dir::Up => Dir::Down,
        }
    }
}

/// mant * 2^exp, normalized so mant is odd (or zero with exp 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        Dyadic { mant, exp }.normalize()
    }

    fn normalize(mut self) -> Self {
        if self.mant.is_zero() {
            self.exp = 0;
            return self;
        }
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz;
            self.exp += tz as i64;
        }
        self
    }

    pub fn zero() -> Self {
        Dyadic {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            mant: BigInt::one(),
            exp: 0,
        }
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        Dyadic::new(n.clone(), 0)
    }

    pub fn from_biguint(n: &BigUint) -> Self {
        Dyadic::new(BigInt::from(n.clone()), 0)
    }

    pub fn from_i64(n: i64) -> Self {
        Dyadic::new(BigInt::from(n), 0)
    }

    /// 2^k
    pub fn pow2(k: i64) -> Self {
        Dyadic {
            mant: BigInt::one(),
            exp: k,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn mant(&self) -> &BigInt {
        &self.mant
    }

    pub fn exp(&self) -> i64 {
        self.exp
    }

    /// Number of significant bits of the mantissa.
    pub fn precision_bits(&self) -> u64 {
        self.mant.bits()
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            mant: -self.mant.clone(),
            exp: self.exp,
        }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let exp = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - exp) as u64;
        let b = &other.mant << (other.exp - exp) as u64;
        Dyadic::new(a + b, exp)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mant * &other.mant, self.exp + other.exp)
    }

    pub fn mul_pow2(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic {
            mant: self.mant.clone(),
            exp: self.exp + k,
        }
    }

    /// Keeps at most `prec` mantissa bits, rounding in the given direction.
    pub fn round(&self, prec: u64, dir: Dir) -> Dyadic {
        let bits = self.mant.bits();
        if bits <= prec {
            return self.clone();
        }
        let drop = bits - prec;
        let (sign, mag) = (self.mant.sign(), self.mant.magnitude());
        let q = mag >> drop;
        let lost = mag.trailing_zeros().is_none_or(|tz| tz < drop);
        let bump = match (dir, sign) {
            (Dir::Down, Sign::Minus) | (Dir::Up, Sign::Plus) => lost,
            _ => false,
        };
        let mut q = BigInt::from(q);
        if bump {
            q += 1;
        }
        if sign == Sign::Minus {
            q = -q;
        }
        Dyadic::new(q, self.exp + drop as i64)
    }

    /// Directed division; the divisor must be positive.
    pub fn div(&self, other: &Dyadic, prec: u64, dir: Dir) -> Dyadic {
        assert!(other.is_positive(), "division by non-positive dyadic");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let shift = prec + other.mant.bits() + 2;
        let num = &self.mant << shift;
        let (q, r) = num.div_mod_floor(&other.mant); // floor semantics
        let q = match dir {
            Dir::Down => q,
            Dir::Up => {
                if r.is_zero() {
                    q
                } else {
                    q + 1
                }
            }
        };
        Dyadic::new(q, self.exp - other.exp - shift as i64).round(prec + 8, dir)
    }

    /// floor(self) as i64, when it fits.
    pub fn floor_i64(&self) -> Option<i64> {
        self.floor_bigint().to_i64()
    }

    /// Whether 2^self stays within the representable exponent range.
    pub fn fits_exp2(&self) -> bool {
        match self.floor_i64() {
            Some(v) => v.abs() < (1 << 48),
            None => false,
        }
    }

    pub fn floor_bigint(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            let shift = (-self.exp) as u64;
            let (sign, mag) = (self.mant.sign(), self.mant.magnitude());
            let q = mag >> shift;
            let lost = mag.trailing_zeros().is_none_or(|tz| tz < shift);
            let mut q = BigInt::from(q);
            if sign == Sign::Minus {
                q = -q;
                if lost {
                    q -= 1;
                }
            }
            q
        }
    }

    pub fn ceil_bigint(&self) -> BigInt {
        -self.neg().floor_bigint()
    }

    /// True when the value is an exact power of two.
    fn is_pow2(&self) -> bool {
        self.mant == BigInt::one()
    }

    /// Exact conversion to a rational with power-of-two denominator.
    pub fn to_ratio(&self) -> num_rational::BigRational {
        if self.exp >= 0 {
            num_rational::BigRational::from(&self.mant << self.exp as u64)
        } else {
            num_rational::BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    /// Inverse of `to_ratio` for rationals with power-of-two denominators.
    pub fn from_pow2_ratio(q: &num_rational::BigRational) -> Option<Dyadic> {
        let denom = q.denom().magnitude();
        if denom.count_ones() != 1 {
            return None;
        }
        let shift = denom.trailing_zeros().unwrap_or(0);
        Some(Dyadic::new(q.numer().clone(), -(shift as i64)))
    }

    /// Directed base-2 logarithm of a positive dyadic, with `frac_bits`
    /// fractional bits. Exact (same value for both directions) on powers of
    /// two.
    ///
    /// Soundness: with k squarings of y (rounded toward `dir` each step) and
    /// halvings recorded in acc, x^(2^k) >= y * 2^acc holds for Down and
    /// <= for Up throughout, so acc/2^k (resp. (acc+1)/2^k) brackets log2 x.
    pub fn log2(&self, frac_bits: u64, dir: Dir) -> Dyadic {
        assert!(self.is_positive(), "log2 of non-positive dyadic");
        let bits = self.mant.bits();
        let int_part = self.exp + bits as i64 - 1;
        if self.is_pow2() {
            return Dyadic::from_i64(int_part);
        }
        // m in [1, 2): the mantissa re-scaled.
        let m = Dyadic {
            mant: self.mant.clone(),
            exp: -(bits as i64 - 1),
        };
        let k = frac_bits;
        let work = frac_bits + 32;
        let two = Dyadic::from_i64(2);
        let mut y = m.round(work, dir);
        let mut acc = BigInt::zero();
        for i in 1..=k {
            y = y.mul(&y).round(work, dir);
            while y.cmp(&two) != Ordering::Less {
                y = y.mul_pow2(-1);
                acc += BigInt::one() << (k - i);
            }
        }
        if dir == Dir::Up {
            acc += 1;
        }
        let mant = (BigInt::from(int_part) << k) + acc;
        Dyadic::new(mant, -(k as i64))
    }

    /// 2^self for nonnegative self, directed, with `prec` result bits.
    ///
    /// The fractional part is handled through the chain c_i = 2^(2^-i)
    /// computed by repeated directed integer square roots, multiplying the
    /// factors for the set bits of the fraction.
    pub fn exp2(&self, prec: u64, dir: Dir) -> Dyadic {
        assert!(!self.is_negative(), "exp2 of negative dyadic");
        let int_part = self
            .floor_bigint()
            .to_i64()
            .expect("exp2 exponent fits i64");
        let mut frac = self.sub(&Dyadic::from_i64(int_part));
        // Trim the fraction to the working precision, rounding toward dir.
        frac = frac.round(prec, dir);
        if frac.cmp(&Dyadic::one()) != Ordering::Less {
            // Up-rounding can push the fraction to exactly 1.
            return Dyadic::pow2(int_part + 1);
        }
        if frac.is_zero() {
            return Dyadic::pow2(int_part);
        }
        let p = prec + 16;
        let one_scaled = BigUint::one() << p;
        // Fraction bits b_1 b_2 ... relative to 2^-1, 2^-2, ...
        let frac_exp = -frac.exp() as u64;
        let frac_mant = frac.mant().magnitude().clone();
        debug_assert!(frac_exp >= 1);
        // Square-root chain c_i ~ 2^(2^-i), scaled by 2^p.
        let mut acc = one_scaled.clone();
        let mut c = BigUint::from(2u32) << p; // c_0 = 2, scaled
        for i in 1..=frac_exp {
            // c_i = sqrt(c_{i-1}), directed.
            let radicand = &c << p;
            let root = num_integer::Roots::sqrt(&radicand);
            c = match dir {
                Dir::Down => root,
                Dir::Up => {
                    if &root * &root == radicand {
                        root
                    } else {
                        root + 1u32
                    }
                }
            };
            let bit_set = frac_mant.bit(frac_exp - i);
            if bit_set {
                let prod = &acc * &c;
                acc = match dir {
                    Dir::Down => &prod >> p,
                    Dir::Up => {
                        let floored = &prod >> p;
                        if &floored << p == prod {
                            floored
                        } else {
                            floored + 1u32
                        }
                    }
                };
            }
        }
        Dyadic::new(BigInt::from(acc), int_part - p as i64)
    }

    /// Decimal rendering with at most `sig` significant digits, rounded in
    /// the given direction; exact small values print in full.
    pub fn to_decimal(&self, sig: u32, dir: Dir) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        if self.is_negative() {
            return format!("-{}", self.neg().to_decimal(sig, dir.flip()));
        }
        // Exact integer with few digits: print in full.
        if self.exp >= 0 && self.exp < 512 {
            let v = &self.mant << self.exp as u64;
            let s = v.to_string();
            if s.len() <= sig as usize {
                return s;
            }
        }
        // Short exact fraction: print the finite decimal expansion.
        if self.exp < 0 && self.exp >= -24 {
            let shift = (-self.exp) as u32;
            let scaled = self.mant.magnitude() * BigUint::from(5u32).pow(shift);
            let s = scaled.to_string();
            if s.len() <= sig as usize + 2 {
                let s = format!("{:0>width$}", s, width = shift as usize + 1);
                let (int_part, frac) = s.split_at(s.len() - shift as usize);
                return format!("{int_part}.{frac}");
            }
        }
        // Scientific notation. dec_exp = floor(log10 v), estimated from the
        // bit length and corrected exactly.
        let bits = self.mant.bits() as i64 + self.exp;
        let mut dec_exp = ((bits as f64 - 0.5) * std::f64::consts::LOG10_2).floor() as i64;
        loop {
            // v >= 10^dec_exp and v < 10^(dec_exp+1)?
            let cmp_low = self.cmp_pow10(dec_exp);
            if cmp_low == Ordering::Less {
                dec_exp -= 1;
                continue;
            }
            if self.cmp_pow10(dec_exp + 1) != Ordering::Less {
                dec_exp += 1;
                continue;
            }
            break;
        }
        let scale = dec_exp - (sig as i64 - 1);
        // n = v / 10^scale, directed.
        let n = self.div_pow10(scale, dir);
        let mut digits = n.to_string();
        if digits.len() > sig as usize {
            // Rounding up crossed a power of ten.
            digits.truncate(sig as usize);
            dec_exp += 1;
        }
        let digits = digits.trim_end_matches('0');
        let digits = if digits.is_empty() { "1" } else { digits };
        // Positional form when the integer part fits in the digit budget.
        if dec_exp >= 0 && dec_exp < sig as i64 {
            let int_len = dec_exp as usize + 1;
            let mut ds = digits.to_string();
            if ds.len() < int_len {
                ds.push_str(&"0".repeat(int_len - ds.len()));
            }
            if ds.len() == int_len {
                return ds;
            }
            return format!("{}.{}", &ds[..int_len], &ds[int_len..]);
        }
        if digits.len() == 1 {
            format!("{}e{}", digits, dec_exp)
        } else {
            format!("{}.{}e{}", &digits[..1], &digits[1..], dec_exp)
        }
    }

    fn cmp_pow10(&self, k: i64) -> Ordering {
        // Compare mant * 2^exp with 10^k = 5^k * 2^k, using only positive
        // powers on either side.
        debug_assert!(self.is_positive());
        let mut lhs = self.mant.magnitude().clone();
        let mut rhs = BigUint::one();
        if k >= 0 {
            rhs *= BigUint::from(5u32).pow(k as u32);
        } else {
            lhs *= BigUint::from(5u32).pow((-k) as u32);
        }
        let e = self.exp - k;
        if e >= 0 {
            lhs <<= e as u64;
        } else {
            rhs <<= (-e) as u64;
        }
        lhs.cmp(&rhs)
    }

    /// floor/ceil of self / 10^k for positive self.
    fn div_pow10(&self, k: i64, dir: Dir) -> BigUint {
        debug_assert!(self.is_positive());
        let mut num = self.mant.magnitude().clone();
        let mut den = BigUint::one();
        if k >= 0 {
            den *= BigUint::from(5u32).pow(k as u32);
        } else {
            num *= BigUint::from(5u32).pow((-k) as u32);
        }
        let e = self.exp - k;
        if e >= 0 {
            num <<= e as u64;
        } else {
            den <<= (-e) as u64;
        }
        let (q, r) = num.div_mod_floor(&den);
        match dir {
            Dir::Down => q,
            Dir::Up => {
                if r.is_zero() {
                    q
                } else {
                    q + 1u32
                }
            }
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.sub(other).mant.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(12, Dir::Up))
    }
}

/// Certified enclosure lo <= v <= hi of a real value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealBound {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl RealBound {
    pub fn exact(d: Dyadic) -> Self {
        RealBound {
            lo: d.clone(),
            hi: d,
        }
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        RealBound::exact(Dyadic::from_bigint(n))
    }

    pub fn from_u64(n: u64) -> Self {
        RealBound::exact(Dyadic::new(BigInt::from(n), 0))
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    /// log2 of a positive big integer.
    pub fn log2_of_biguint(n: &BigUint, prec: u64) -> Self {
        let d = Dyadic::from_biguint(n);
        RealBound {
            lo: d.log2(prec, Dir::Down),
            hi: d.log2(prec, Dir::Up),
        }
    }

    /// log2 of a positive rational p/q.
    pub fn log2_of_ratio(p: &BigUint, q: &BigUint, prec: u64) -> Self {
        let dp = Dyadic::from_biguint(p);
        let dq = Dyadic::from_biguint(q);
        RealBound {
            lo: dp.log2(prec, Dir::Down).sub(&dq.log2(prec, Dir::Up)),
            hi: dp.log2(prec, Dir::Up).sub(&dq.log2(prec, Dir::Down)),
        }
    }

    pub fn log2(&self, prec: u64) -> Self {
        assert!(self.lo.is_positive(), "log2 of interval touching zero");
        RealBound {
            lo: self.lo.log2(prec, Dir::Down),
            hi: self.hi.log2(prec, Dir::Up),
        }
    }

    pub fn add(&self, other: &RealBound) -> Self {
        RealBound {
            lo: self.lo.add(&other.lo),
            hi: self.hi.add(&other.hi),
        }
    }

    pub fn sub(&self, other: &RealBound) -> Self {
        RealBound {
            lo: self.lo.sub(&other.hi),
            hi: self.hi.sub(&other.lo),
        }
    }

    /// Product of intervals of nonnegative values.
    pub fn mul_nonneg(&self, other: &RealBound, prec: u64) -> Self {
        debug_assert!(!self.lo.is_negative() && !other.lo.is_negative());
        RealBound {
            lo: self.lo.mul(&other.lo).round(prec + 16, Dir::Down),
            hi: self.hi.mul(&other.hi).round(prec + 16, Dir::Up),
        }
    }

    /// Exact scaling by a nonnegative integer.
    pub fn scale_biguint(&self, k: &BigUint) -> Self {
        let kd = Dyadic::from_biguint(k);
        RealBound {
            lo: self.lo.mul(&kd),
            hi: self.hi.mul(&kd),
        }
    }

    /// Quotient of intervals of positive values.
    pub fn div_pos(&self, other: &RealBound, prec: u64) -> Self {
        debug_assert!(other.lo.is_positive());
        RealBound {
            lo: self.lo.div(&other.hi, prec, Dir::Down),
            hi: self.hi.div(&other.lo, prec, Dir::Up),
        }
    }

    /// Certain comparison, or None when the enclosures overlap.
    pub fn cmp_certain(&self, other: &RealBound) -> Option<Ordering> {
        if self.is_exact() && other.is_exact() && self.lo == other.lo {
            return Some(Ordering::Equal);
        }
        if self.hi.cmp(&other.lo) == Ordering::Less {
            return Some(Ordering::Less);
        }
        if self.lo.cmp(&other.hi) == Ordering::Greater {
            return Some(Ordering::Greater);
        }
        None
    }

    /// Certified self <= other (allows equality of exact endpoints).
    pub fn le_certain(&self, other: &RealBound) -> bool {
        self.hi.cmp(&other.lo) != Ordering::Greater
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: i64) -> Dyadic {
        Dyadic::from_i64(n)
    }

    #[test]
    fn normalization_strips_factors_of_two() {
        let a = Dyadic::new(BigInt::from(12), 0);
        assert_eq!(a.mant(), &BigInt::from(3));
        assert_eq!(a.exp(), 2);
    }

    #[test]
    fn add_mul_cmp_exact() {
        let a = Dyadic::new(BigInt::from(3), -1); // 1.5
        let b = Dyadic::new(BigInt::from(5), -2); // 1.25
        assert_eq!(a.add(&b), Dyadic::new(BigInt::from(11), -2));
        assert_eq!(a.mul(&b), Dyadic::new(BigInt::from(15), -3));
        assert_eq!(a.cmp(&b), Ordering::Greater);
        assert_eq!(a.sub(&a).cmp(&Dyadic::zero()), Ordering::Equal);
    }

    #[test]
    fn rounding_directions() {
        let v = Dyadic::new(BigInt::from(0b10110111), 0); // 183
        let down = v.round(4, Dir::Down);
        let up = v.round(4, Dir::Up);
        assert!(down.cmp(&v) == Ordering::Less);
        assert!(up.cmp(&v) == Ordering::Greater);
        assert_eq!(down, Dyadic::new(BigInt::from(0b1011), 4)); // 176
        assert_eq!(up, Dyadic::new(BigInt::from(0b1100), 4)); // 192
                                                              // Negative values round toward -inf / +inf respectively.
        let n = v.neg();
        assert!(n.round(4, Dir::Down).cmp(&n) == Ordering::Less);
        assert!(n.round(4, Dir::Up).cmp(&n) == Ordering::Greater);
    }

    #[test]
    fn log2_exact_on_powers_of_two() {
        for k in [-5i64, 0, 1, 4, 19, 524288] {
            let v = Dyadic::pow2(k);
            assert_eq!(v.log2(128, Dir::Down), d(k));
            assert_eq!(v.log2(128, Dir::Up), d(k));
        }
    }

    #[test]
    fn log2_brackets_value() {
        for n in [3u32, 5, 7, 10, 12, 24, 1000, 999983] {
            let v = Dyadic::from_bigint(&BigInt::from(n));
            let lo = v.log2(96, Dir::Down);
            let hi = v.log2(96, Dir::Up);
            assert!(lo.cmp(&hi) != Ordering::Greater);
            // 2^floor(lo) <= n <= 2^ceil(hi)
            let fl = lo.floor_bigint().to_i64().unwrap();
            let ch = hi.ceil_bigint().to_i64().unwrap();
            assert!(BigInt::from(2).pow(fl as u32) <= BigInt::from(n));
            assert!(BigInt::from(n) <= BigInt::from(2).pow(ch as u32));
            // Tightness: hi - lo < 2^-64.
            assert!(hi.sub(&lo).cmp(&Dyadic::pow2(-64)) == Ordering::Less);
        }
    }

    #[test]
    fn log2_of_three_known_value() {
        // log2(3) = 1.58496250072115618...
        let v = Dyadic::from_bigint(&BigInt::from(3));
        let lo_s = v.log2(128, Dir::Down).to_decimal(18, Dir::Down);
        let hi_s = v.log2(128, Dir::Up).to_decimal(18, Dir::Up);
        assert!(lo_s.starts_with("1.5849625007211561"), "{lo_s}");
        assert!(hi_s.starts_with("1.5849625007211561"), "{hi_s}");
    }

    #[test]
    fn exp2_brackets_value() {
        // 2^1.5 = 2.82842712...
        let x = Dyadic::new(BigInt::from(3), -1);
        let lo = x.exp2(96, Dir::Down);
        let hi = x.exp2(96, Dir::Up);
        assert!(lo.cmp(&hi) != Ordering::Greater);
        // Bracket sqrt(8): lo^2 <= 8 <= hi^2.
        assert!(lo.mul(&lo).cmp(&d(8)) != Ordering::Greater);
        assert!(hi.mul(&hi).cmp(&d(8)) != Ordering::Less);
        assert!(hi.sub(&lo).cmp(&Dyadic::pow2(-64)) == Ordering::Less);
        // Integer exponents are exact.
        assert_eq!(d(13).exp2(64, Dir::Down), Dyadic::pow2(13));
        assert_eq!(d(13).exp2(64, Dir::Up), Dyadic::pow2(13));
        // Round trip with log2.
        for n in [3i64, 10, 97] {
            let l = Dyadic::from_i64(n).log2(96, Dir::Down);
            let back = l.exp2(96, Dir::Down);
            assert!(back.cmp(&d(n)) != Ordering::Greater);
            let l = Dyadic::from_i64(n).log2(96, Dir::Up);
            let back = l.exp2(96, Dir::Up);
            assert!(back.cmp(&d(n)) != Ordering::Less);
        }
    }

    #[test]
    fn division_directed() {
        let a = d(1);
        let b = d(3);
        let lo = a.div(&b, 96, Dir::Down);
        let hi = a.div(&b, 96, Dir::Up);
        assert!(lo.cmp(&hi) == Ordering::Less);
        let three_lo = lo.mul(&b);
        let three_hi = hi.mul(&b);
        assert!(three_lo.cmp(&d(1)) == Ordering::Less);
        assert!(three_hi.cmp(&d(1)) == Ordering::Greater);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(d(4096).to_decimal(10, Dir::Up), "4096");
        assert_eq!(
            Dyadic::new(BigInt::from(50625), -4).to_decimal(12, Dir::Up),
            "3164.0625"
        );
        let big = Dyadic::from_bigint(&BigInt::from(10).pow(40u32));
        assert_eq!(big.to_decimal(4, Dir::Up), "1e40");
        let v = Dyadic::from_bigint(&BigInt::from(123456789u64));
        assert_eq!(v.to_decimal(3, Dir::Down), "1.23e8");
        assert_eq!(v.to_decimal(3, Dir::Up), "1.24e8");
    }

    #[test]
    fn interval_comparison_soundness() {
        let three = RealBound::log2_of_biguint(&BigUint::from(8u32), 64); // exactly 3
        let pi_ish = RealBound::log2_of_biguint(&BigUint::from(9u32), 64); // ~3.17
        assert_eq!(three.cmp_certain(&pi_ish), Some(Ordering::Less));
        assert_eq!(pi_ish.cmp_certain(&three), Some(Ordering::Greater));
        assert!(three.le_certain(&pi_ish));
        assert!(!pi_ish.le_certain(&three));
    }

    #[test]
    fn floor_bigint_matches() {
        let v = Dyadic::new(BigInt::from(7), -1); // 3.5
        assert_eq!(v.floor_bigint(), BigInt::from(3));
        assert_eq!(v.neg().floor_bigint(), BigInt::from(-4));
        assert_eq!(v.ceil_bigint(), BigInt::from(4));
        assert_eq!(v.neg().ceil_bigint(), BigInt::from(-3));
    }
}
