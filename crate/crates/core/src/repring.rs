//! The graded representation ring `R(GL_n)[v, v^-1]`: classes of
//! representations of the Tate-twisted dual group, with `v` recording the
//! `G_m`-grading.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::rootdata::{dominant_representative, dual_weight, Weight};
use crate::symfunc::{expand_in_schur, kostka, schur, LaurentScalar, SymPoly};

/// `Σ c_μ [V_μ]` with `c_μ ∈ Z[v, v^-1]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RepElement {
    rank: usize,
    mults: BTreeMap<Weight, LaurentScalar>,
}

impl RepElement {
    pub fn zero(rank: usize) -> Self {
        RepElement { rank, mults: BTreeMap::new() }
    }

    /// The trivial representation.
    pub fn trivial(rank: usize) -> Self {
        Self::irreducible(&Weight::zero(rank)).expect("zero is dominant")
    }

    /// `[V_μ]`.
    pub fn irreducible(mu: &Weight) -> Result<Self> {
        Self::from_terms(mu.rank(), [(mu.clone(), LaurentScalar::one())])
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Weight, LaurentScalar)>) -> Result<Self> {
        let mut r = Self::zero(rank);
        for (mu, c) in terms {
            mu.check_rank(rank)?;
            mu.check_dominant()?;
            r.add_term(mu, c);
        }
        Ok(r)
    }

    /// Reads a virtual character back as a class.
    pub fn from_character(chi: &SymPoly) -> Self {
        RepElement { rank: chi.rank(), mults: expand_in_schur(chi) }
    }

    fn add_term(&mut self, mu: Weight, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        let e = self.mults.entry(mu.clone()).or_default();
        *e += &c;
        if e.is_zero() {
            self.mults.remove(&mu);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn multiplicity(&self, mu: &Weight) -> LaurentScalar {
        self.mults.get(mu).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Weight, &LaurentScalar)> {
        self.mults.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    /// An honest representation: multiplicities are nonnegative integers.
    pub fn is_genuine(&self) -> bool {
        self.mults.values().all(|c| c.as_integer().is_some_and(|k| !k.is_negative()))
    }

    pub fn add(&self, other: &RepElement) -> Result<RepElement> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: other.rank });
        }
        let mut out = self.clone();
        for (mu, c) in &other.mults {
            out.add_term(mu.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentScalar) -> RepElement {
        let mut out = Self::zero(self.rank);
        for (mu, x) in &self.mults {
            out.add_term(mu.clone(), x * c);
        }
        out
    }

    /// Graded dimension `Σ c_μ dim V_μ`.
    pub fn graded_dimension(&self) -> LaurentScalar {
        let mut acc = LaurentScalar::zero();
        for (mu, c) in &self.mults {
            acc += &c.scale(&dimension(mu).expect("keys are dominant"));
        }
        acc
    }
}

impl fmt::Debug for RepElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RepElement[n={}](", self.rank)?;
        for (i, (mu, c)) in self.mults.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})V{mu}")?;
        }
        write!(f, ")")
    }
}

/// `Σ c_μ s_μ`.
pub fn character(r: &RepElement) -> SymPoly {
    let mut acc = SymPoly::zero(r.rank);
    for (mu, c) in &r.mults {
        acc = acc.add(&schur(mu).expect("keys are dominant").scale(c)).expect("same rank");
    }
    acc
}

/// Weyl dimension formula `Π_{i<j} (μ_i - μ_j + j - i) / (j - i)`.
pub fn dimension(mu: &Weight) -> Result<BigInt> {
    mu.check_dominant()?;
    let e = mu.entries();
    let mut acc = BigRational::one();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            let gap = (j - i) as i64;
            acc *= BigRational::new(BigInt::from(e[i] - e[j] + gap), BigInt::from(gap));
        }
    }
    debug_assert!(acc.is_integer());
    Ok(acc.to_integer())
}

/// `dim V_μ(λ)`, the Kostka number `K_{μ, dom(λ)}`.
pub fn weight_multiplicity(mu: &Weight, lam: &Weight) -> Result<u64> {
    mu.check_dominant()?;
    lam.check_rank(mu.rank())?;
    let dom = dominant_representative(lam);
    if dom.total() != mu.total() {
        return Ok(0);
    }
    let k = (-mu.min_entry().unwrap_or(0)).max(0);
    Ok(kostka(&mu.shift(k), &dom.shift(k)))
}

pub fn tensor(a: &RepElement, b: &RepElement) -> Result<RepElement> {
    if a.rank != b.rank {
        return Err(Error::RankMismatch { expected: a.rank, found: b.rank });
    }
    Ok(RepElement::from_character(&character(a).multiply(&character(b))?))
}

/// `V ↦ V*` on classes; the grading variable is left alone.
pub fn dual(r: &RepElement) -> RepElement {
    let mut out = RepElement::zero(r.rank);
    for (mu, c) in &r.mults {
        out.add_term(dual_weight(mu).expect("keys are dominant"), c.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::dominant_weights_in_box;

    fn w(e: &[i64]) -> Weight {
        Weight::new(e.to_vec())
    }

    fn irr(e: &[i64]) -> RepElement {
        RepElement::irreducible(&w(e)).unwrap()
    }

    #[test]
    fn characters() {
        assert_eq!(character(&irr(&[1, 0])), SymPoly::monomial_sym(&w(&[1, 0])).unwrap());
        assert_eq!(character(&RepElement::trivial(2)), SymPoly::one(2));
        let r = irr(&[1, 0]).add(&irr(&[1, 1]).scale(&LaurentScalar::v())).unwrap();
        let expected = SymPoly::monomial_sym(&w(&[1, 0]))
            .unwrap()
            .add(&SymPoly::monomial_sym(&w(&[1, 1])).unwrap().scale(&LaurentScalar::v()))
            .unwrap();
        assert_eq!(character(&r), expected);
        assert!(RepElement::irreducible(&w(&[0, 1])).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&w(&[1, 0])).unwrap(), 2.into());
        assert_eq!(dimension(&w(&[0, 0, 0, 0])).unwrap(), 1.into());
        assert_eq!(dimension(&w(&[1, 0, 0])).unwrap(), 3.into());
        assert_eq!(dimension(&w(&[2, 1, 0])).unwrap(), 8.into());
        assert_eq!(dimension(&w(&[1, -1])).unwrap(), 3.into());
    }

    #[test]
    fn multiplicities() {
        assert_eq!(weight_multiplicity(&w(&[1, 0]), &w(&[0, 1])).unwrap(), 1);
        assert_eq!(weight_multiplicity(&w(&[2, 0]), &w(&[1, 1])).unwrap(), 1);
        assert_eq!(weight_multiplicity(&w(&[1, 0]), &w(&[2, -1])).unwrap(), 0);
        assert_eq!(weight_multiplicity(&w(&[1, 0, -1]), &w(&[0, 0, 0])).unwrap(), 2);
    }

    #[test]
    fn tensor_examples() {
        let std = irr(&[1, 0]);
        assert_eq!(tensor(&std, &std).unwrap(), irr(&[2, 0]).add(&irr(&[1, 1])).unwrap());
        let v = irr(&[2, 1]).add(&irr(&[0, -3]).scale(&LaurentScalar::v_pow(2))).unwrap();
        assert_eq!(tensor(&v, &RepElement::trivial(2)).unwrap(), v);
        assert_eq!(tensor(&std, &dual(&std)).unwrap(), irr(&[1, -1]).add(&RepElement::trivial(2)).unwrap());
        assert!(tensor(&std, &RepElement::trivial(3)).is_err());
    }

    #[test]
    fn duals() {
        assert_eq!(dual(&irr(&[1, 0])), irr(&[0, -1]));
        assert_eq!(dual(&RepElement::trivial(3)), RepElement::trivial(3));
        let r = irr(&[2, 1, 0]).add(&irr(&[1, 1, -2]).scale(&LaurentScalar::v())).unwrap();
        assert_eq!(dual(&dual(&r)), r);
    }

    #[test]
    fn dimension_is_sum_of_weight_multiplicities() {
        for n in 1..=3 {
            for mu in dominant_weights_in_box(n, -1, 3) {
                let total: u64 = crate::rootdata::dominant_weights_in_box(n, -1, 3)
                    .iter()
                    .map(|lam| weight_multiplicity(&mu, lam).unwrap() * lam.orbit_size())
                    .sum();
                assert_eq!(BigInt::from(total), dimension(&mu).unwrap(), "mu={mu}");
                assert_eq!(character(&RepElement::irreducible(&mu).unwrap()).eval_at_ones(), dimension(&mu).unwrap().into());
            }
        }
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(32))]

        #[test]
        fn ring_laws(n in 1usize..=3, picks in proptest::collection::vec((0usize..200, 0i64..=2), 3..=3)) {
            let basis = dominant_weights_in_box(n, -1, 2);
            let el: Vec<RepElement> = picks
                .iter()
                .map(|(i, c)| irr(basis[i % basis.len()].entries()).scale(&LaurentScalar::constant(*c + 1)))
                .collect();
            let ab = tensor(&el[0], &el[1]).unwrap();
            proptest::prop_assert_eq!(&ab, &tensor(&el[1], &el[0]).unwrap());
            proptest::prop_assert!(ab.is_genuine());
            proptest::prop_assert_eq!(
                tensor(&ab, &el[2]).unwrap(),
                tensor(&el[0], &tensor(&el[1], &el[2]).unwrap()).unwrap()
            );
            proptest::prop_assert_eq!(dual(&ab), tensor(&dual(&el[0]), &dual(&el[1])).unwrap());
            proptest::prop_assert_eq!(
                ab.graded_dimension(),
                &el[0].graded_dimension() * &el[1].graded_dimension()
            );
        }
    }
}
