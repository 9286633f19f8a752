//! The spherical Hecke algebra of `GL_n(F)` over `Z[v, v^-1]` (`v² = q`),
//! in the basis `T_μ = 1_{Kμ(ϖ)K}`.
//!
//! The Satake transform is realized by Macdonald's formula
//! `T_μ ↦ v^{⟨2ρ,μ⟩} P_μ(x; v^{-2})`. Convolution is computed by
//! transporting the product back through the transform. The direct coset
//! count lives in [`crate::plattice`] and serves only as a cross-check.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::rootdata::{two_rho_pairing, Weight};
use crate::symfunc::{hall_littlewood, LaurentScalar, SymPoly};

/// A finite combination `Σ c_μ T_μ` over dominant coweights `μ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HeckeElement {
    rank: usize,
    coeffs: BTreeMap<Weight, LaurentScalar>,
}

impl HeckeElement {
    pub fn zero(rank: usize) -> Self {
        HeckeElement { rank, coeffs: BTreeMap::new() }
    }

    /// The unit `T_{(0,…,0)}`.
    pub fn unit(rank: usize) -> Self {
        Self::basis(&Weight::zero(rank)).expect("zero is dominant")
    }

    /// `T_μ`.
    pub fn basis(mu: &Weight) -> Result<Self> {
        Self::from_terms(mu.rank(), [(mu.clone(), LaurentScalar::one())])
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Weight, LaurentScalar)>) -> Result<Self> {
        let mut h = Self::zero(rank);
        for (mu, c) in terms {
            mu.check_rank(rank)?;
            mu.check_dominant()?;
            h.add_term(mu, c);
        }
        Ok(h)
    }

    fn add_term(&mut self, mu: Weight, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(mu.clone()).or_default();
        *e += &c;
        if e.is_zero() {
            self.coeffs.remove(&mu);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, mu: &Weight) -> LaurentScalar {
        self.coeffs.get(mu).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Weight, &LaurentScalar)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &HeckeElement) -> Result<HeckeElement> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: other.rank });
        }
        let mut out = self.clone();
        for (mu, c) in &other.coeffs {
            out.add_term(mu.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentScalar) -> HeckeElement {
        let mut out = Self::zero(self.rank);
        for (mu, x) in &self.coeffs {
            out.add_term(mu.clone(), x * c);
        }
        out
    }

    /// Whether every coefficient is an integer polynomial in `q = v²`.
    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_polynomial() && c.only_even_exponents())
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElement[n={}](", self.rank)?;
        for (i, (mu, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})T{mu}")?;
        }
        write!(f, ")")
    }
}

/// Image of a single basis vector: `v^{⟨2ρ,μ⟩} P_μ(x; v^{-2})`.
pub fn satake_basis(mu: &Weight) -> Result<SymPoly> {
    Ok(hall_littlewood(mu)?.scale(&LaurentScalar::v_pow(two_rho_pairing(mu))))
}

pub fn satake(h: &HeckeElement) -> Result<SymPoly> {
    let mut acc = SymPoly::zero(h.rank);
    for (mu, c) in &h.coeffs {
        acc = acc.add(&satake_basis(mu)?.scale(c))?;
    }
    Ok(acc)
}

/// The unique preimage under [`satake`], by dominance-triangular elimination.
pub fn inverse_satake(f: &SymPoly) -> Result<HeckeElement> {
    let mut rem = f.clone();
    let mut out = HeckeElement::zero(f.rank());
    while let Some((lam, c)) = rem.leading_term() {
        let (lam, c) = (lam.clone(), c.clone());
        // satake(T_λ) has leading coefficient v^{⟨2ρ,λ⟩} on m_λ.
        let coeff = c.shift(-two_rho_pairing(&lam));
        rem = rem.sub(&satake_basis(&lam)?.scale(&coeff))?;
        out.add_term(lam, coeff);
    }
    Ok(out)
}

pub fn convolve(a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
    if a.rank != b.rank {
        return Err(Error::RankMismatch { expected: a.rank, found: b.rank });
    }
    inverse_satake(&satake(a)?.multiply(&satake(b)?)?)
}

/// `T_μ ↦ P_μ(x; v^{-2})`: the transform with the `v^{⟨2ρ,μ⟩}` twist removed.
pub fn normalized_satake(h: &HeckeElement) -> Result<SymPoly> {
    let mut acc = SymPoly::zero(h.rank);
    for (mu, c) in &h.coeffs {
        acc = acc.add(&hall_littlewood(mu)?.scale(c))?;
    }
    Ok(acc)
}

/// A chosen square root `±√q` of a positive rational `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareRoot {
    radicand: BigRational,
    negative: bool,
    /// `Some(r)` with `r² = q`, `r > 0`, when the root is rational.
    rational_root: Option<BigRational>,
}

impl SquareRoot {
    pub fn new(q: BigRational, negative: bool) -> Result<Self> {
        if !q.is_positive() {
            return Err(Error::InvalidArgument(format!("q must be positive, got {q}")));
        }
        let rational_root = exact_sqrt(q.numer()).zip(exact_sqrt(q.denom())).map(|(a, b)| BigRational::new(a, b));
        Ok(SquareRoot { radicand: q, negative, rational_root })
    }

    /// The positive root of an integer `q`.
    pub fn of_integer(q: i64) -> Result<Self> {
        Self::new(BigRational::from_integer(q.into()), false)
    }

    pub fn q(&self) -> &BigRational {
        &self.radicand
    }

    /// `v^k` in `Q(√q)`.
    fn power(&self, k: i64) -> QuadraticValue {
        let sign = if self.negative && k.rem_euclid(2) == 1 { -BigRational::one() } else { BigRational::one() };
        if let Some(r) = &self.rational_root {
            return QuadraticValue::rational(sign * Pow::pow(r, k as i32), &self.radicand);
        }
        let half = k.div_euclid(2) as i32;
        let base = Pow::pow(&self.radicand, half);
        if k.rem_euclid(2) == 0 {
            QuadraticValue::rational(base, &self.radicand)
        } else {
            QuadraticValue { rational: BigRational::zero(), surd: sign * base, radicand: self.radicand.clone() }
        }
    }
}

fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// `rational + surd·√radicand`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticValue {
    pub rational: BigRational,
    pub surd: BigRational,
    pub radicand: BigRational,
}

impl QuadraticValue {
    fn rational(x: BigRational, radicand: &BigRational) -> Self {
        QuadraticValue { rational: x, surd: BigRational::zero(), radicand: radicand.clone() }
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.rational.is_integer()).then(|| self.rational.to_integer())
    }

    fn add_assign(&mut self, other: &QuadraticValue) {
        self.rational += &other.rational;
        self.surd += &other.surd;
    }

    fn scaled(&self, c: &BigInt) -> QuadraticValue {
        let c = BigRational::from_integer(c.clone());
        QuadraticValue { rational: &self.rational * &c, surd: &self.surd * &c, radicand: self.radicand.clone() }
    }
}

impl fmt::Display for QuadraticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            return write!(f, "{}", self.rational);
        }
        if !self.rational.is_zero() {
            write!(f, "{}", self.rational)?;
            if self.surd.is_positive() {
                write!(f, "+")?;
            }
        }
        write!(f, "{}*sqrt({})", self.surd, self.radicand)
    }
}

/// Substitution `v = ±√q`.
pub trait SpecializeV {
    type Output;
    fn specialize_v(&self, root: &SquareRoot) -> Self::Output;
}

impl SpecializeV for LaurentScalar {
    type Output = QuadraticValue;

    fn specialize_v(&self, root: &SquareRoot) -> QuadraticValue {
        let mut acc = QuadraticValue::rational(BigRational::zero(), &root.radicand);
        for (e, c) in self.terms() {
            acc.add_assign(&root.power(e).scaled(c));
        }
        acc
    }
}

impl SpecializeV for HeckeElement {
    type Output = BTreeMap<Weight, QuadraticValue>;

    fn specialize_v(&self, root: &SquareRoot) -> Self::Output {
        self.coeffs.iter().map(|(mu, c)| (mu.clone(), c.specialize_v(root))).collect()
    }
}

impl SpecializeV for SymPoly {
    type Output = BTreeMap<Weight, QuadraticValue>;

    fn specialize_v(&self, root: &SquareRoot) -> Self::Output {
        self.terms().map(|(mu, c)| (mu.clone(), c.specialize_v(root))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{dominance_leq, dominant_weights_in_box};
    use crate::symfunc::schur;

    fn w(e: &[i64]) -> Weight {
        Weight::new(e.to_vec())
    }

    fn t(e: &[i64]) -> HeckeElement {
        HeckeElement::basis(&w(e)).unwrap()
    }

    fn l(s: &str) -> LaurentScalar {
        s.parse().unwrap()
    }

    #[test]
    fn gl2_satake_values() {
        let tr = schur(&w(&[1, 0])).unwrap();
        assert_eq!(satake(&t(&[1, 0])).unwrap(), tr.scale(&LaurentScalar::v()));
        assert_eq!(satake(&t(&[1, 1])).unwrap(), schur(&w(&[1, 1])).unwrap());
        let h = t(&[2, 0]).add(&t(&[1, 1])).unwrap();
        assert_eq!(satake(&h).unwrap(), schur(&w(&[2, 0])).unwrap().scale(&l("v^2")));
    }

    #[test]
    fn gl2_inverse_values() {
        let f = schur(&w(&[2, 0])).unwrap().scale(&l("v^2"));
        assert_eq!(inverse_satake(&f).unwrap(), t(&[2, 0]).add(&t(&[1, 1])).unwrap());
        assert_eq!(inverse_satake(&schur(&w(&[1, 1])).unwrap()).unwrap(), t(&[1, 1]));
    }

    #[test]
    fn gl2_convolution() {
        let tp = t(&[1, 0]);
        let expected = HeckeElement::from_terms(2, [(w(&[2, 0]), l("1")), (w(&[1, 1]), l("1+v^2"))]).unwrap();
        assert_eq!(convolve(&tp, &tp).unwrap(), expected);
        let h = tp.add(&t(&[2, 1]).scale(&l("v^-1+3"))).unwrap();
        assert_eq!(convolve(&h, &HeckeElement::unit(2)).unwrap(), h);
        assert_eq!(convolve(&t(&[1, 1]), &t(&[1, 1])).unwrap(), t(&[2, 2]));
        assert!(convolve(&tp, &HeckeElement::unit(3)).is_err());
    }

    #[test]
    fn normalized_values() {
        assert_eq!(normalized_satake(&t(&[1, 0])).unwrap(), schur(&w(&[1, 0])).unwrap());
        assert_eq!(normalized_satake(&t(&[1, 1])).unwrap(), schur(&w(&[1, 1])).unwrap());
        let expected = schur(&w(&[2, 0])).unwrap().sub(&schur(&w(&[1, 1])).unwrap().scale(&l("v^-2"))).unwrap();
        assert_eq!(normalized_satake(&t(&[2, 0])).unwrap(), expected);
    }

    #[test]
    fn specialization_examples() {
        let three = SquareRoot::of_integer(3).unwrap();
        assert_eq!(l("1+v^2").specialize_v(&three).as_integer(), Some(4.into()));
        let four = SquareRoot::of_integer(4).unwrap();
        assert_eq!(LaurentScalar::v().specialize_v(&four).as_integer(), Some(2.into()));
        let v_at_3 = LaurentScalar::v().specialize_v(&three);
        assert!(!v_at_3.is_rational());
        assert_eq!(v_at_3.to_string(), "1*sqrt(3)");
        let neg = SquareRoot::new(BigRational::from_integer(4.into()), true).unwrap();
        assert_eq!(l("v+v^-2").specialize_v(&neg).rational, BigRational::new((-7).into(), 4.into()));
        assert!(SquareRoot::of_integer(0).is_err());
        let quarter = SquareRoot::new(BigRational::new(1.into(), 4.into()), false).unwrap();
        assert_eq!(l("v").specialize_v(&quarter).rational, BigRational::new(1.into(), 2.into()));

        let sq = convolve(&t(&[1, 0]), &t(&[1, 0])).unwrap();
        for p in [2, 3, 5] {
            let spec = sq.specialize_v(&SquareRoot::of_integer(p).unwrap());
            assert_eq!(spec[&w(&[1, 1])].as_integer(), Some((1 + p).into()));
        }
    }

    #[test]
    fn unitriangular_after_normalization() {
        for n in 1..=3 {
            for mu in dominant_weights_in_box(n, 0, 4).into_iter().filter(|m| m.total() <= 4) {
                let s = satake(&HeckeElement::basis(&mu).unwrap()).unwrap();
                assert_eq!(s.coeff(&mu), LaurentScalar::v_pow(two_rho_pairing(&mu)));
                for (lam, _) in s.terms() {
                    assert!(dominance_leq(lam, &mu).unwrap());
                }
                let norm = normalized_satake(&HeckeElement::basis(&mu).unwrap()).unwrap();
                assert!(norm.terms().all(|(_, c)| c.only_even_exponents()));
            }
        }
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(24))]

        #[test]
        fn convolution_commutative_associative_integral(
            n in 1usize..=3,
            picks in proptest::collection::vec((0usize..64, -2i64..=2), 3..=3),
        ) {
            let basis = dominant_weights_in_box(n, 0, 2);
            let el: Vec<HeckeElement> = picks
                .iter()
                .map(|(i, c)| HeckeElement::basis(&basis[i % basis.len()]).unwrap().scale(&LaurentScalar::constant(*c)))
                .collect();
            let ab = convolve(&el[0], &el[1]).unwrap();
            proptest::prop_assert_eq!(&ab, &convolve(&el[1], &el[0]).unwrap());
            proptest::prop_assert!(ab.is_integral());
            let left = convolve(&ab, &el[2]).unwrap();
            let right = convolve(&el[0], &convolve(&el[1], &el[2]).unwrap()).unwrap();
            proptest::prop_assert_eq!(left, right);
        }

        #[test]
        fn inverse_round_trip(
            n in 1usize..=3,
            picks in proptest::collection::vec((0usize..64, -3i64..=3, -2i64..=2), 1..4),
        ) {
            let basis = dominant_weights_in_box(n, -1, 2);
            let mut h = HeckeElement::zero(n);
            for (i, c, e) in picks {
                h = h.add(&HeckeElement::basis(&basis[i % basis.len()]).unwrap().scale(&LaurentScalar::monomial(c, e))).unwrap();
            }
            proptest::prop_assert_eq!(inverse_satake(&satake(&h).unwrap()).unwrap(), h);
        }
    }
}
