//! Exact Laurent polynomials `Z[v, v^-1]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An element of `Z[v, v^-1]`, stored as exponent ↦ nonzero coefficient.
///
/// The same type carries polynomials in `p` (Hecke-operator coefficients) and
/// in `t` (Hall–Littlewood parameter); only the printed variable differs.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentScalar {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · v^e`
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentScalar { terms }
    }

    /// The variable itself.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    pub fn v_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut s = Self::zero();
        for (e, c) in it {
            s.add_term(e, c);
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Nonzero `(exponent, coefficient)` pairs, exponents ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentScalar { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentScalar { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The substitution `v ↦ v^k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        if k == 0 {
            return Self::constant(self.terms.values().fold(BigInt::zero(), |a, c| a + c));
        }
        LaurentScalar { terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect() }
    }

    /// The substitution `v ↦ -v`.
    pub fn substitute_negated(&self) -> Self {
        LaurentScalar {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, if e.rem_euclid(2) == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Value at `v = 1`.
    pub fn sum_coefficients(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn only_even_exponents(&self) -> bool {
        self.terms.keys().all(|e| e.rem_euclid(2) == 0)
    }

    pub fn is_polynomial(&self) -> bool {
        self.min_exponent().is_none_or(|e| e >= 0)
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// `Some(c)` when the element is the constant `c`.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Evaluates at a nonzero rational.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        if x.is_zero() && self.min_exponent().is_some_and(|e| e < 0) {
            return Err(Error::InvalidArgument("negative power of zero".into()));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += BigRational::from_integer(c.clone()) * Pow::pow(x, *e as i32);
        }
        Ok(acc)
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (dmax, dlead) = divisor.terms.iter().next_back()?;
        let dmin = divisor.min_exponent()?;
        let Some(lowest) = self.min_exponent() else {
            return Some(Self::zero());
        };
        let floor = lowest - dmin;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&rmax, rlead)) = rem.terms.iter().next_back() {
            let e = rmax - dmax;
            if e < floor {
                return None;
            }
            let (q, r) = rlead.div_rem(dlead);
            if !r.is_zero() {
                return None;
            }
            rem -= &divisor.shift(e).scale(&q);
            quot.add_term(e, q);
        }
        Some(quot)
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mut term = String::new();
            if *e == 0 {
                term.push_str(&c.to_string());
            } else {
                if c == &BigInt::from(-1) {
                    term.push('-');
                } else if !c.is_one() {
                    term.push_str(&c.to_string());
                }
                term.push_str(var);
                if *e != 1 {
                    term.push('^');
                    term.push_str(&e.to_string());
                }
            }
            if i > 0 && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        out
    }

    /// Parses the canonical printed form (and a few looser spellings such as
    /// `2*v^3` or whitespace) in the variable `var`.
    pub fn parse_with(s: &str, var: char) -> Result<Self> {
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let bad = || Error::Parse(format!("cannot parse scalar {s:?}"));
        let chars: Vec<char> = src.chars().collect();
        let mut pieces = Vec::new();
        let mut start = 0;
        for i in 1..chars.len() {
            if (chars[i] == '+' || chars[i] == '-') && chars[i - 1] != '^' {
                pieces.push(&chars[start..i]);
                start = i;
            }
        }
        pieces.push(&chars[start..]);
        let mut out = Self::zero();
        for piece in pieces {
            let mut rest: &[char] = piece;
            let mut sign = BigInt::one();
            match rest.first() {
                Some('+') => rest = &rest[1..],
                Some('-') => {
                    sign = -sign;
                    rest = &rest[1..];
                }
                _ => {}
            }
            let digits = rest.iter().take_while(|c| c.is_ascii_digit()).count();
            let coeff = if digits > 0 {
                rest[..digits].iter().collect::<String>().parse::<BigInt>().map_err(|_| bad())?
            } else {
                BigInt::one()
            };
            rest = &rest[digits..];
            if rest.first() == Some(&'*') {
                rest = &rest[1..];
            }
            let exp = if rest.is_empty() {
                if digits == 0 {
                    return Err(bad());
                }
                0
            } else {
                if rest[0] != var {
                    return Err(bad());
                }
                rest = &rest[1..];
                if rest.is_empty() {
                    1
                } else if rest[0] == '^' {
                    rest[1..].iter().collect::<String>().parse::<i64>().map_err(|_| bad())?
                } else {
                    return Err(bad());
                }
            };
            out.add_term(exp, sign * coeff);
        }
        Ok(out)
    }

    pub fn to_i64_terms(&self) -> Option<Vec<(i64, i64)>> {
        self.terms.iter().map(|(e, c)| c.to_i64().map(|c| (*e, c))).collect()
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("v"))
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentScalar({self})")
    }
}

impl FromStr for LaurentScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_with(s, 'v')
    }
}

impl From<i64> for LaurentScalar {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentScalar {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: &LaurentScalar) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentScalar> for LaurentScalar {
    fn sub_assign(&mut self, rhs: &LaurentScalar) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl MulAssign<&LaurentScalar> for LaurentScalar {
    fn mul_assign(&mut self, rhs: &LaurentScalar) {
        *self = &*self * rhs;
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentScalar {
            type Output = LaurentScalar;
            fn $m(self, rhs: LaurentScalar) -> LaurentScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentScalar> for LaurentScalar {
            type Output = LaurentScalar;
            fn $m(self, rhs: &LaurentScalar) -> LaurentScalar {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
