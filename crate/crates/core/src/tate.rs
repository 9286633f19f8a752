//! The Tate weight lattice `Λ^Tate`, the dimension of `V^Tate`, Gaussian
//! binomials, and the formal Hecke element `h` for `GU(1, 2r)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::repring::weight_multiplicity;
use crate::rootdata::{dominant_weights_below, GroupSpec, Weight};
use crate::symfunc::LaurentScalar;
use crate::trace_k::SigmaAction;

/// Group data for `Λ^Tate`: the character lattice `Z^n` with its centre, the
/// action of `σ`, and the split of `Z^n` into a `GL_{gl_rank}` block followed
/// by `n - gl_rank` coordinates on which `V_μ` acts through a fixed character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TateWire", into = "TateWire")]
pub struct TateConfig {
    group: GroupSpec,
    sigma: SigmaAction,
    gl_rank: usize,
}

#[derive(Serialize, Deserialize)]
struct TateWire {
    n: usize,
    center: Vec<Weight>,
    sigma: SigmaAction,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gl_rank: Option<usize>,
}

impl TryFrom<TateWire> for TateConfig {
    type Error = Error;
    fn try_from(w: TateWire) -> Result<Self> {
        let group = GroupSpec::new(w.n, w.center)?;
        TateConfig::new(group, w.sigma, w.gl_rank.unwrap_or(w.n))
    }
}

impl From<TateConfig> for TateWire {
    fn from(c: TateConfig) -> Self {
        let gl_rank = (c.gl_rank != c.group.n).then_some(c.gl_rank);
        TateWire { n: c.group.n, center: c.group.center_generators().to_vec(), sigma: c.sigma, gl_rank }
    }
}

impl TateConfig {
    pub fn new(group: GroupSpec, sigma: SigmaAction, gl_rank: usize) -> Result<Self> {
        if sigma.rank() != group.n {
            return Err(Error::RankMismatch { expected: group.n, found: sigma.rank() });
        }
        if gl_rank == 0 || gl_rank > group.n {
            return Err(Error::InvalidArgument(format!("gl_rank must lie in 1..={}", group.n)));
        }
        for g in group.center_generators() {
            if !group.is_central(&sigma.apply(g)?)? {
                return Err(Error::InvalidArgument(format!("sigma does not preserve the centre: {g}")));
            }
        }
        Ok(TateConfig { group, sigma, gl_rank })
    }

    /// `GU(1, 2r)` with similitude factor. The dual group is
    /// `GL_{2r+1} × G_m`, `σ(λ; c) = (-w_0 λ; c)` from
    /// `(A, c) ↦ (J (A^T)^{-1} J, c)`, and `V_μ` is the standard
    /// representation twisted by the homothety character.
    pub fn gu_similitude(r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument("r must be positive".into()));
        }
        let m = 2 * r + 1;
        let n = m + 1;
        let mut homothety = vec![1; m];
        homothety.push(0);
        let mut similitude = vec![0; m];
        similitude.push(1);
        let group = GroupSpec::new(n, vec![Weight::new(homothety), Weight::new(similitude)])?;
        let sigma = SigmaAction::minus_w0(m).direct_sum(&SigmaAction::identity(1));
        TateConfig::new(group, sigma, m)
    }

    /// The highest weight used with [`TateConfig::gu_similitude`]: `(1, 0, …, 0; 1)`.
    pub fn gu_similitude_weight(r: usize) -> Weight {
        let mut e = vec![0; 2 * r + 2];
        e[0] = 1;
        e[2 * r + 1] = 1;
        Weight::new(e)
    }

    /// Odd unitary group without similitude: `GL_n`, `σ = -w_0`, centre
    /// spanned by `(1, …, 1)`.
    pub fn odd_unitary(n: usize) -> Result<Self> {
        if n.is_multiple_of(2) {
            return Err(Error::InvalidArgument("n must be odd".into()));
        }
        TateConfig::new(GroupSpec::gl(n), SigmaAction::minus_w0(n), n)
    }

    pub fn split(group: GroupSpec) -> Result<Self> {
        let n = group.n;
        TateConfig::new(group, SigmaAction::identity(n), n)
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn sigma(&self) -> &SigmaAction {
        &self.sigma
    }

    pub fn rank(&self) -> usize {
        self.group.n
    }

    pub fn gl_rank(&self) -> usize {
        self.gl_rank
    }
}

/// Whether `Σ_{i<m} σ^i(λ)` is central.
pub fn in_tate_lattice(lam: &Weight, cfg: &TateConfig) -> Result<bool> {
    lam.check_rank(cfg.rank())?;
    cfg.group.is_central(&cfg.sigma.orbit_sum(lam)?)
}

/// `dim V_μ^Tate`: the weights of `V_μ` (with multiplicity) lying in `Λ^Tate`.
pub fn tate_dimension(mu: &Weight, cfg: &TateConfig) -> Result<u64> {
    tate_dimension_with(Exec::default(), mu, cfg)
}

pub fn tate_dimension_with(exec: Exec, mu: &Weight, cfg: &TateConfig) -> Result<u64> {
    mu.check_rank(cfg.rank())?;
    let (head, tail) = mu.entries().split_at(cfg.gl_rank);
    let head = Weight::new(head.to_vec());
    head.check_dominant()?;
    let floor = head.min_entry().unwrap_or(0);
    let dominant = dominant_weights_below(&head, floor);
    let counts = exec.map(&dominant, |lam| -> Result<u64> {
        let mult = weight_multiplicity(&head, lam)?;
        let mut hits = 0u64;
        for w in lam.orbit() {
            let mut full = w.into_entries();
            full.extend_from_slice(tail);
            if in_tate_lattice(&Weight::new(full), cfg)? {
                hits += 1;
            }
        }
        Ok(mult * hits)
    });
    counts.into_iter().sum()
}

/// `[n]_v! = Π_{k=1}^n (v^k - 1)/(v - 1)`.
fn v_factorial(n: u32) -> LaurentScalar {
    let mut acc = LaurentScalar::one();
    for k in 1..=n {
        acc = &acc * &LaurentScalar::from_terms((0..k as i64).map(|e| (e, BigInt::from(1))));
    }
    acc
}

/// The Gaussian binomial `[nn over mm]_v`.
pub fn v_binomial(nn: i64, mm: i64) -> Result<LaurentScalar> {
    if mm < 0 || nn < mm {
        return Err(Error::OutOfRange(format!("v_binomial({nn}, {mm}) needs 0 <= m <= n")));
    }
    let (n, m) = (u32::try_from(nn).map_err(|_| Error::OutOfRange(nn.to_string()))?, mm as u32);
    let den = &v_factorial(m) * &v_factorial(n - m);
    Ok(v_factorial(n).exact_div(&den).expect("Gaussian binomials are polynomials"))
}

/// A finite combination `Σ c_j T_{p,j}` with `c_j ∈ Z[p, p^-1]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalHeckeElement {
    coefficients: BTreeMap<usize, LaurentScalar>,
}

impl FormalHeckeElement {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, j: usize, c: &LaurentScalar) {
        let e = self.coefficients.entry(j).or_default();
        *e += c;
        if e.is_zero() {
            self.coefficients.remove(&j);
        }
    }

    pub fn coeff(&self, j: usize) -> LaurentScalar {
        self.coefficients.get(&j).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &LaurentScalar)> {
        self.coefficients.iter().map(|(j, c)| (*j, c))
    }

    /// Whether every coefficient is a polynomial in `p`.
    pub fn is_integral(&self) -> bool {
        self.coefficients.values().all(LaurentScalar::is_polynomial)
    }
}

/// `h = p^{r(r+1)} Σ_{i=0}^r (-1)^i (2i+1) p^{(i-r)(r+i+1)}
///      Σ_{j=0}^{r-i} [2r+1-2j over r-i-j]_{v=-p} T_{p,j}`.
pub fn h_operator(r: usize) -> Result<FormalHeckeElement> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let r = r as i64;
    let mut h = FormalHeckeElement::new();
    for i in 0..=r {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let outer = LaurentScalar::monomial(sign * (2 * i + 1), r * (r + 1) + (i - r) * (r + i + 1));
        for j in 0..=r - i {
            let b = v_binomial(2 * r + 1 - 2 * j, r - i - j)?.substitute_negated();
            h.add_term(j as usize, &(&outer * &b));
        }
    }
    Ok(h)
}
