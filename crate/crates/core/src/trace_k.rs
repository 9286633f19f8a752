//! The σ-twisted categorical trace at the level of K-rings.
//!
//! Only the unit endomorphisms `End(1̃) ≅ J` and the S-operators `S_V` are
//! modelled. For `σ = id` the S-operator of `V` is its character, and the
//! categorical trace of an endomorphism is its usual trace.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::repring::{character, RepElement};
use crate::rootdata::{dominant_weights_in_box, Weight};
use crate::symfunc::{schur, LaurentScalar, SymPoly};

/// A finite-order automorphism of the weight lattice `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SigmaWire", into = "SigmaWire")]
pub struct SigmaAction {
    matrix: Vec<Vec<i64>>,
    order: u32,
}

#[derive(Serialize, Deserialize)]
struct SigmaWire {
    matrix: Vec<Vec<i64>>,
    order: u32,
}

impl TryFrom<SigmaWire> for SigmaAction {
    type Error = Error;
    fn try_from(w: SigmaWire) -> Result<Self> {
        SigmaAction::new(w.matrix, w.order)
    }
}

impl From<SigmaAction> for SigmaWire {
    fn from(s: SigmaAction) -> Self {
        SigmaWire { matrix: s.matrix, order: s.order }
    }
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

impl SigmaAction {
    /// `order` must be the exact order of `matrix`.
    pub fn new(matrix: Vec<Vec<i64>>, order: u32) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("sigma matrix must be square".into()));
        }
        if order == 0 {
            return Err(Error::InvalidArgument("sigma order must be positive".into()));
        }
        let id = identity(n);
        let mut power = matrix.clone();
        for k in 1..order {
            if power == id {
                return Err(Error::InvalidArgument(format!("sigma has order {k}, not {order}")));
            }
            power = mat_mul(&power, &matrix);
        }
        if power != id {
            return Err(Error::InvalidArgument(format!("sigma^{order} is not the identity")));
        }
        Ok(SigmaAction { matrix, order })
    }

    pub fn identity(n: usize) -> Self {
        SigmaAction { matrix: identity(n), order: 1 }
    }

    /// `λ ↦ -w_0(λ) = (-λ_n, …, -λ_1)`, of order 2 for `n ≥ 1`.
    pub fn minus_w0(n: usize) -> Self {
        let matrix = (0..n).map(|i| (0..n).map(|j| if i + j + 1 == n { -1 } else { 0 }).collect()).collect();
        SigmaAction::new(matrix, 2).expect("-w0 is an involution")
    }

    /// Block-diagonal sum acting on `Z^{a+b}`.
    pub fn direct_sum(&self, other: &SigmaAction) -> Self {
        let (a, b) = (self.rank(), other.rank());
        let mut m = vec![vec![0; a + b]; a + b];
        for i in 0..a {
            m[i][..a].copy_from_slice(&self.matrix[i]);
        }
        for i in 0..b {
            m[a + i][a..].copy_from_slice(&other.matrix[i]);
        }
        let order = lcm(self.order, other.order);
        SigmaAction { matrix: m, order }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    pub fn apply(&self, w: &Weight) -> Result<Weight> {
        w.check_rank(self.rank())?;
        Ok(Weight::new(self.matrix.iter().map(|row| row.iter().zip(w.entries()).map(|(a, b)| a * b).sum()).collect()))
    }

    /// `Σ_{i<m} σ^i(λ)`.
    pub fn orbit_sum(&self, w: &Weight) -> Result<Weight> {
        let mut acc = Weight::zero(self.rank());
        let mut cur = w.clone();
        for _ in 0..self.order {
            acc = acc.add(&cur)?;
            cur = self.apply(&cur)?;
        }
        Ok(acc)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// An element of `J`, possibly with a rational denominator (from traces of
/// endomorphisms with rational eigenvalues).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JElement {
    value: SymPoly,
    denominator: BigInt,
}

impl JElement {
    pub fn new(value: SymPoly) -> Self {
        JElement { value, denominator: BigInt::one() }
    }

    fn with_denominator(value: SymPoly, denominator: BigInt) -> Self {
        let g = value
            .terms()
            .flat_map(|(_, c)| c.terms().map(|(_, x)| x.clone()).collect::<Vec<_>>())
            .fold(denominator.clone(), |g, x| g.gcd(&x));
        if g.is_one() || g.is_zero() {
            return JElement { value, denominator };
        }
        let value = value.map_coeffs(|c| LaurentScalar::from_terms(c.terms().map(|(e, x)| (e, x / &g))));
        JElement { value, denominator: denominator / g }
    }

    pub fn value(&self) -> &SymPoly {
        &self.value
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    /// The underlying polynomial when there is no denominator.
    pub fn as_sympoly(&self) -> Option<&SymPoly> {
        self.denominator.is_one().then_some(&self.value)
    }

    pub fn add(&self, other: &JElement) -> Result<JElement> {
        let d = self.denominator.lcm(&other.denominator);
        let a = self.value.scale(&LaurentScalar::constant(&d / &self.denominator));
        let b = other.value.scale(&LaurentScalar::constant(&d / &other.denominator));
        Ok(JElement::with_denominator(a.add(&b)?, d))
    }

    pub fn multiply(&self, other: &JElement) -> Result<JElement> {
        Ok(JElement::with_denominator(self.value.multiply(&other.value)?, &self.denominator * &other.denominator))
    }
}

/// The trace of `Rep(Ĝ)` twisted by `σ`, seen through `End(1̃)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTrace {
    sigma: SigmaAction,
}

impl KTrace {
    pub fn new(sigma: SigmaAction) -> Self {
        KTrace { sigma }
    }

    pub fn split(n: usize) -> Self {
        KTrace { sigma: SigmaAction::identity(n) }
    }

    pub fn sigma(&self) -> &SigmaAction {
        &self.sigma
    }

    fn check(&self, rank: usize) -> Result<()> {
        if !self.sigma.is_identity() {
            return Err(Error::NontrivialSigma);
        }
        if rank != self.sigma.rank() {
            return Err(Error::RankMismatch { expected: self.sigma.rank(), found: rank });
        }
        Ok(())
    }

    /// `S_V ∈ End(1̃) = J`; at `σ = id` this is the character of `V`.
    pub fn s_operator(&self, r: &RepElement) -> Result<JElement> {
        self.check(r.rank())?;
        Ok(JElement::new(character(r)))
    }

    /// The scalar `1 → V_μ ⊗ V_μ* ≅ V_μ* ⊗ V_μ → 1`. In a symmetric monoidal
    /// category this is the trace of `id_V`, i.e. the character at the unit.
    pub fn s_pairing(&self, mu: &Weight) -> Result<LaurentScalar> {
        mu.check_dominant()?;
        self.check(mu.rank())?;
        Ok(schur(mu)?.eval_at_ones())
    }

    /// Categorical trace of an endomorphism acting by a scalar on each
    /// isotypic summand of `r`.
    pub fn trace_of_endomorphism(&self, r: &RepElement, scalars: &BTreeMap<Weight, BigRational>) -> Result<JElement> {
        self.check(r.rank())?;
        let mut den = BigInt::one();
        for (mu, _) in r.terms() {
            let s = scalars
                .get(mu)
                .ok_or_else(|| Error::InvalidArgument(format!("no scalar given for constituent {mu}")))?;
            den = den.lcm(s.denom());
        }
        let mut acc = SymPoly::zero(r.rank());
        for (mu, c) in r.terms() {
            let s = &scalars[mu];
            let num = s.numer() * (&den / s.denom());
            acc = acc.add(&schur(mu)?.scale(&c.scale(&num)))?;
        }
        Ok(JElement::with_denominator(acc, den))
    }
}

/// Whether the S-operators of all `V_μ` with `|μ_i| ≤ max_total` are linearly
/// independent in `J`, by an exact rank computation over `Q`.
pub fn k_ring_injectivity_check(max_total: i64, n: usize) -> Result<bool> {
    if max_total < 0 {
        return Err(Error::InvalidArgument("max_total must be nonnegative".into()));
    }
    let trace = KTrace::split(n);
    let weights = dominant_weights_in_box(n, -max_total, max_total);
    let images: Vec<SymPoly> = weights
        .iter()
        .map(|mu| trace.s_operator(&RepElement::irreducible(mu)?).map(|j| j.value))
        .collect::<Result<_>>()?;
    let mut columns: BTreeMap<Weight, usize> = BTreeMap::new();
    for img in &images {
        for (lam, _) in img.terms() {
            let next = columns.len();
            columns.entry(lam.clone()).or_insert(next);
        }
    }
    let rows: Vec<Vec<BigInt>> = images
        .iter()
        .map(|img| {
            let mut row = vec![BigInt::zero(); columns.len()];
            for (lam, c) in img.terms() {
                row[columns[lam]] = c.as_integer().expect("characters of irreducibles are integral");
            }
            row
        })
        .collect();
    Ok(crate::linalg::rank_bigint(&rows) == images.len())
}
