//! Exact multivariate polynomials over Q in variables x0..xr.
//!
//! Coefficients are `BigRational` (coprime big-integer numerator/denominator,
//! positive denominator, never zero). Terms live in a `BTreeMap` keyed by the
//! exponent vector, so two polynomials are equal iff their term maps are equal.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector of length r+1; index i holds the exponent of x_i.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    /// Single variable x_i to the given power.
    pub fn var_pow(nvars: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Monomial order with variable precedence x0 > x1 > ... > xr.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic (the default everywhere).
    GrevLex,
    /// Pure lexicographic, used for cross-checks.
    Lex,
}

impl MonomialOrder {
    /// Total order on equal-length exponent vectors. 1 is minimal and the
    /// order is multiplicative.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.exps.len(), b.exps.len());
        match self {
            MonomialOrder::Lex => {
                for (x, y) in a.exps.iter().zip(&b.exps) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::GrevLex => {
                match a.total_degree().cmp(&b.total_degree()) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                // Equal degree: the last variable with differing exponent
                // decides, and the smaller exponent there wins.
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        ord => return ord.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Checked comparison; errors on mismatched exponent-vector lengths.
pub fn monomial_compare(
    m1: &Monomial,
    m2: &Monomial,
    order: MonomialOrder,
) -> Result<Ordering, PolyError> {
    if m1.exps.len() != m2.exps.len() {
        return Err(PolyError::LengthMismatch {
            left: m1.exps.len(),
            right: m2.exps.len(),
        });
    }
    Ok(order.cmp(m1, m2))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    LengthMismatch { left: usize, right: usize },
    Syntax { pos: usize, msg: String },
    UnknownVariable { pos: usize, name: String },
    Inhomogeneous,
    ZeroGenerator,
    EmptyGeneratorList,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::LengthMismatch { left, right } => {
                write!(f, "exponent vectors have lengths {left} and {right}")
            }
            PolyError::Syntax { pos, msg } => write!(f, "syntax error at position {pos}: {msg}"),
            PolyError::UnknownVariable { pos, name } => {
                write!(f, "unknown variable `{name}` at position {pos}")
            }
            PolyError::Inhomogeneous => write!(f, "generator is not homogeneous"),
            PolyError::ZeroGenerator => write!(f, "generator is zero"),
            PolyError::EmptyGeneratorList => write!(f, "no generators supplied"),
        }
    }
}

impl std::error::Error for PolyError {}

/// Sparse polynomial over Q. Invariant: no stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Polynomial::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, BigRational::one())
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut p = Polynomial::zero(nvars);
        p.add_term(Monomial::var_pow(nvars, i, 1), BigRational::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(
        nvars: usize,
        terms: I,
    ) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Adds c·m into the term map, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// self · c·m, a single-term product.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Some(deg) when every term has the same total degree, None otherwise.
    /// The zero polynomial counts as homogeneous of every degree; it reports
    /// Some(0).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Some(0),
            Some(m) => m.total_degree(),
        };
        for m in it {
            if m.total_degree() != first {
                return None;
            }
        }
        Some(first)
    }

    /// Greatest term under the given order.
    pub fn lead_term(&self, order: MonomialOrder) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    pub fn lead_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.lead_term(order).map(|(m, _)| m)
    }

    /// Divides by the lead coefficient so the lead term is 1.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.lead_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = BigRational::one() / c;
                self.scale(&inv)
            }
        }
    }

    /// d/dx_i, exact.
    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exps[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps.clone();
            exps[i] = e - 1;
            out.add_term(Monomial::new(exps), c * BigRational::from(BigInt::from(e)));
        }
        out
    }

    /// Canonical text form; `parse_polynomial` accepts everything this prints.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        // Print grevlex-descending so lead terms come first.
        let mut terms: Vec<(&Monomial, &BigRational)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| MonomialOrder::GrevLex.cmp(b, a));
        let mut out = String::new();
        for (idx, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -(*c).clone() } else { (*c).clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                if abs.denom().is_one() {
                    factors.push(abs.numer().to_string());
                } else {
                    factors.push(format!("{}/{}", abs.numer(), abs.denom()));
                }
            }
            for (i, &e) in m.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{i}")),
                    _ => factors.push(format!("x{i}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Homogeneous generators of an ideal in k[x0..xr], with the ambient r and
/// the maximum generator degree d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    r: usize,
    generators: Vec<Polynomial>,
    max_degree: u32,
}

impl IdealPresentation {
    /// Validates that every generator is nonzero and homogeneous.
    pub fn new(r: usize, generators: Vec<Polynomial>) -> Result<Self, PolyError> {
        if generators.is_empty() {
            return Err(PolyError::EmptyGeneratorList);
        }
        let mut max_degree = 0;
        for g in &generators {
            if g.is_zero() {
                return Err(PolyError::ZeroGenerator);
            }
            match g.homogeneous_degree() {
                Some(d) => max_degree = max_degree.max(d),
                None => return Err(PolyError::Inhomogeneous),
            }
        }
        Ok(IdealPresentation {
            r,
            generators,
            max_degree,
        })
    }

    /// Ambient projective dimension r (the ring has r+1 variables).
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn nvars(&self) -> usize {
        self.r + 1
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Maximum total degree among the generators.
    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

/// Which variable names the parser accepts.
enum VarSpec {
    /// x0..xr
    Indexed { r: usize },
    /// A single named variable (used for Hilbert polynomials in t).
    Named(char),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
    spec: VarSpec,
}

/// Parses the ideal-generator grammar: terms joined by `+`/`-`; a term is an
/// optional rational coefficient followed by optional `*`-separated variable
/// powers `xi` or `xi^e`. Whitespace is ignored and the `*` between a
/// coefficient and a variable may be omitted (`2x0` = `2*x0`).
pub fn parse_polynomial(text: &str, r: usize) -> Result<Polynomial, PolyError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        nvars: r + 1,
        spec: VarSpec::Indexed { r },
    };
    p.parse()
}

/// Parses a univariate polynomial in `t` (rational coefficients allowed);
/// the result lives in a one-variable ring with t as x0.
pub fn parse_univariate_t(text: &str) -> Result<Polynomial, PolyError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        nvars: 1,
        spec: VarSpec::Named('t'),
    };
    p.parse()
}

impl<'a> Parser<'a> {
    fn parse(&mut self) -> Result<Polynomial, PolyError> {
        let mut poly = Polynomial::zero(self.nvars);
        self.skip_ws();
        if self.pos == self.src.len() {
            return Err(self.syntax("empty input"));
        }
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (m, c) = self.parse_term()?;
            poly.add_term(m, if sign { -c } else { c });
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    sign = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = true;
                }
                Some(c) => {
                    return Err(self.syntax(&format!("expected `+` or `-`, found `{}`", c as char)))
                }
            }
        }
        Ok(poly)
    }

    fn parse_term(&mut self) -> Result<(Monomial, BigRational), PolyError> {
        self.skip_ws();
        let mut coeff = BigRational::one();
        let mut saw_any = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let numer = self.parse_integer()?;
            let denom = if self.peek() == Some(b'/') {
                self.pos += 1;
                let d = self.parse_integer()?;
                if d.is_zero() {
                    return Err(self.syntax("zero denominator"));
                }
                d
            } else {
                BigInt::one()
            };
            coeff = BigRational::new(numer, denom);
            saw_any = true;
            self.skip_ws();
            // Optional `*` between the coefficient and the first variable.
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                let (m, e) = self.parse_var_pow()?;
                let mut mono = Monomial::one(self.nvars);
                mono.exps[m] += e;
                return self.parse_var_tail(mono, coeff);
            }
        }
        if self.at_variable() {
            let (i, e) = self.parse_var_pow()?;
            let mut mono = Monomial::one(self.nvars);
            mono.exps[i] += e;
            return self.parse_var_tail(mono, coeff);
        }
        if !saw_any {
            return Err(self.syntax("expected a coefficient or a variable"));
        }
        Ok((Monomial::one(self.nvars), coeff))
    }

    /// Remaining `*`-or-juxtaposed variable powers of the current term.
    fn parse_var_tail(
        &mut self,
        mut mono: Monomial,
        coeff: BigRational,
    ) -> Result<(Monomial, BigRational), PolyError> {
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                let (i, e) = self.parse_var_pow()?;
                mono.exps[i] += e;
            } else if self.at_variable() {
                let (i, e) = self.parse_var_pow()?;
                mono.exps[i] += e;
            } else {
                return Ok((mono, coeff));
            }
        }
    }

    fn at_variable(&self) -> bool {
        match self.spec {
            VarSpec::Indexed { .. } => self.peek() == Some(b'x'),
            VarSpec::Named(c) => self.peek() == Some(c as u8),
        }
    }

    fn parse_var_pow(&mut self) -> Result<(usize, u32), PolyError> {
        let start = self.pos;
        let index = match self.spec {
            VarSpec::Indexed { r } => {
                if self.peek() != Some(b'x') {
                    return Err(self.syntax("expected a variable"));
                }
                self.pos += 1;
                let digits_start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    self.pos += 1;
                }
                if self.pos == digits_start {
                    return Err(self.syntax("expected a variable index after `x`"));
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let idx: usize = name[1..].parse().map_err(|_| PolyError::UnknownVariable {
                    pos: start,
                    name: name.to_string(),
                })?;
                if idx > r {
                    return Err(PolyError::UnknownVariable {
                        pos: start,
                        name: name.to_string(),
                    });
                }
                idx
            }
            VarSpec::Named(c) => {
                if self.peek() != Some(c as u8) {
                    return Err(self.syntax("expected a variable"));
                }
                self.pos += 1;
                0
            }
        };
        self.skip_ws();
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.parse_integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.syntax("exponent out of range"))?;
            if e == 0 {
                return Err(self.syntax("exponent must be positive"));
            }
            e
        } else {
            1
        };
        Ok((index, exp))
    }

    fn parse_integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.syntax("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn syntax(&self, msg: &str) -> PolyError {
        PolyError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }
}
