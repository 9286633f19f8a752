use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use super::laurent::LaurentScalar;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::rootdata::{dominant_representative, Weight};

/// A symmetric Laurent polynomial in `x_1..x_n` over `Z[v, v^-1]`, in the
/// monomial-symmetric basis `m_λ` keyed by dominant `λ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymPoly {
    rank: usize,
    terms: BTreeMap<Weight, LaurentScalar>,
}

impl SymPoly {
    pub fn zero(rank: usize) -> Self {
        SymPoly { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, LaurentScalar::one())
    }

    pub fn constant(rank: usize, c: LaurentScalar) -> Self {
        let mut p = Self::zero(rank);
        p.add_term(Weight::zero(rank), c);
        p
    }

    /// Builds from `(λ, c)` pairs in the monomial basis; every `λ` must be
    /// dominant of rank `rank`.
    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Weight, LaurentScalar)>) -> Result<Self> {
        let mut p = Self::zero(rank);
        for (w, c) in terms {
            w.check_rank(rank)?;
            w.check_dominant()?;
            p.add_term(w, c);
        }
        Ok(p)
    }

    /// The orbit sum `m_λ`.
    pub fn monomial_sym(lam: &Weight) -> Result<Self> {
        lam.check_dominant()?;
        let mut p = Self::zero(lam.rank());
        p.add_term(lam.clone(), LaurentScalar::one());
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, w: Weight, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lam: &Weight) -> LaurentScalar {
        self.terms.get(lam).cloned().unwrap_or_default()
    }

    /// Terms in increasing lexicographic order of the key.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Weight, &LaurentScalar)> {
        self.terms.iter()
    }

    /// The lexicographically largest key with its coefficient. Within a fixed
    /// degree this key is maximal for dominance.
    pub fn leading_term(&self) -> Option<(&Weight, &LaurentScalar)> {
        self.terms.iter().next_back()
    }

    fn check_same_rank(&self, other: &SymPoly) -> Result<()> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank, found: other.rank })
        }
    }

    pub fn add(&self, other: &SymPoly) -> Result<SymPoly> {
        self.check_same_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymPoly) -> Result<SymPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymPoly {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, c: &LaurentScalar) -> SymPoly {
        self.map_coeffs(|x| x * c)
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentScalar) -> LaurentScalar) -> SymPoly {
        let mut out = SymPoly::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Multiplies by `(x_1⋯x_n)^k`.
    pub fn shift_central(&self, k: i64) -> SymPoly {
        SymPoly { rank: self.rank, terms: self.terms.iter().map(|(w, c)| (w.shift(k), c.clone())).collect() }
    }

    /// Every monomial `x^α` with its coefficient (orbits fully expanded).
    pub fn full_monomials(&self) -> Vec<(Weight, LaurentScalar)> {
        self.terms
            .iter()
            .flat_map(|(w, c)| w.orbit().into_iter().map(move |a| (a, c.clone())))
            .collect()
    }

    pub fn multiply(&self, other: &SymPoly) -> Result<SymPoly> {
        self.multiply_with(Exec::default(), other)
    }

    /// Exact product. The coefficient of `m_ν` is the coefficient of the
    /// single monomial `x^ν`, so only dominant sums `α + β` are collected.
    pub fn multiply_with(&self, exec: Exec, other: &SymPoly) -> Result<SymPoly> {
        self.check_same_rank(other)?;
        let rank = self.rank;
        let left = self.full_monomials();
        let right: Vec<(Vec<Weight>, &LaurentScalar)> = other.terms.iter().map(|(w, c)| (w.orbit(), c)).collect();
        let partial = |(alpha, a): &(Weight, LaurentScalar)| {
            let mut acc = SymPoly::zero(rank);
            for (orbit, b) in &right {
                let prod = a * *b;
                for beta in orbit {
                    let nu = Weight::new(alpha.entries().iter().zip(beta.entries()).map(|(x, y)| x + y).collect());
                    if nu.is_dominant() {
                        acc.add_term(nu, prod.clone());
                    }
                }
            }
            acc
        };
        Ok(exec.map_reduce(&left, || SymPoly::zero(rank), partial, |mut a, b| {
            for (w, c) in b.terms {
                a.add_term(w, c);
            }
            a
        }))
    }

    /// Value at `x_1 = ⋯ = x_n = 1`.
    pub fn eval_at_ones(&self) -> LaurentScalar {
        let mut acc = LaurentScalar::zero();
        for (w, c) in &self.terms {
            acc += &c.scale(&BigInt::from(w.orbit_size()));
        }
        acc
    }

    /// Numeric value at the point `x` with `v` set to `v_value`.
    pub fn eval_point(&self, x: &[BigRational], v_value: &BigRational) -> Result<BigRational> {
        if x.len() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: x.len() });
        }
        let mut acc = BigRational::zero();
        for (w, c) in &self.terms {
            let cv = c.eval(v_value)?;
            let mut orbit_sum = BigRational::zero();
            for a in w.orbit() {
                let mut m = BigRational::one();
                for (xi, e) in x.iter().zip(a.entries()) {
                    m *= Pow::pow(xi, *e as i32);
                }
                orbit_sum += m;
            }
            acc += cv * orbit_sum;
        }
        Ok(acc)
    }

    /// Coefficient of the (not necessarily dominant) monomial `x^α`.
    pub fn monomial_coeff(&self, alpha: &Weight) -> LaurentScalar {
        self.coeff(&dominant_representative(alpha))
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPoly[n={}](", self.rank)?;
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})m{w}")?;
        }
        write!(f, ")")
    }
}
