//! Weights and coweights of `GL_n`, the Weyl group `S_n`, and dominance.
//!
//! Both lattices are identified with `Z^n`, so a single [`Weight`] type serves
//! for characters of the dual torus and for cocharacters of the split torus.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer vector of fixed length `n` (the rank).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight(entries)
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// `(k, ..., k)`, the `k`-th power of the determinant.
    pub fn central(n: usize, k: i64) -> Self {
        Weight(vec![k; n])
    }

    /// The minuscule coweight `ω_i = 1^i 0^{n-i}`.
    pub fn fundamental(n: usize, i: usize) -> Result<Self> {
        if i > n {
            return Err(Error::InvalidArgument(format!("omega_{i} needs i <= {n}")));
        }
        let mut e = vec![0; n];
        e[..i].fill(1);
        Ok(Weight(e))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn min_entry(&self) -> Option<i64> {
        self.0.iter().copied().min()
    }

    pub fn max_entry(&self) -> Option<i64> {
        self.0.iter().copied().max()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn check_rank(&self, n: usize) -> Result<()> {
        if self.rank() == n {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: n, found: self.rank() })
        }
    }

    pub fn check_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.clone()))
        }
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        other.check_rank(self.rank())?;
        Ok(Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &Weight) -> Result<Weight> {
        other.check_rank(self.rank())?;
        Ok(Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    /// Adds `k·(1, ..., 1)`.
    pub fn shift(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a + k).collect())
    }

    /// Every distinct permutation of the entries (the `S_n`-orbit), in
    /// lexicographically increasing order.
    pub fn orbit(&self) -> Vec<Weight> {
        let mut cur = self.0.clone();
        cur.sort_unstable();
        let mut out = vec![Weight(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Weight(cur.clone()));
        }
        out
    }

    pub fn orbit_size(&self) -> u64 {
        let mut sorted = self.0.clone();
        sorted.sort_unstable();
        let mut size: u64 = (1..=sorted.len() as u64).product();
        let mut i = 0;
        while i < sorted.len() {
            let mut j = i;
            while j < sorted.len() && sorted[j] == sorted[i] {
                j += 1;
            }
            size /= (1..=(j - i) as u64).product::<u64>();
            i = j;
        }
        size
    }
}

fn next_permutation(v: &mut [i64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Accepts `(1,0)`, `[1,0]` and bare `1,0`.
impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix('[').and_then(|r| r.strip_suffix(']')))
            .unwrap_or(t)
            .trim();
        if t.is_empty() {
            return Ok(Weight(Vec::new()));
        }
        t.split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|e| Error::Parse(format!("weight {s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// Rank and centre of the group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub n: usize,
    #[serde(rename = "center")]
    center_generators: Vec<Weight>,
}

impl GroupSpec {
    pub fn new(n: usize, center_generators: Vec<Weight>) -> Result<Self> {
        for c in &center_generators {
            c.check_rank(n)?;
        }
        let rows: Vec<Vec<i64>> = center_generators.iter().map(|w| w.0.clone()).collect();
        if crate::linalg::rank_i64(&rows) != center_generators.len() {
            return Err(Error::InvalidArgument("center generators are linearly dependent".into()));
        }
        Ok(GroupSpec { n, center_generators })
    }

    /// `GL_n` with centre spanned by `(1, ..., 1)`.
    pub fn gl(n: usize) -> Self {
        GroupSpec { n, center_generators: vec![Weight::central(n, 1)] }
    }

    pub fn center_generators(&self) -> &[Weight] {
        &self.center_generators
    }

    /// Whether `w` lies in the integer span of the centre generators.
    pub fn is_central(&self, w: &Weight) -> Result<bool> {
        w.check_rank(self.n)?;
        let gens: Vec<Vec<i64>> = self.center_generators.iter().map(|g| g.0.clone()).collect();
        Ok(crate::linalg::in_integer_span(&gens, &w.0))
    }

    pub fn validate(self) -> Result<Self> {
        GroupSpec::new(self.n, self.center_generators)
    }
}

/// Sorts the entries weakly decreasing.
pub fn dominant_representative(w: &Weight) -> Weight {
    let mut e = w.0.clone();
    e.sort_unstable_by(|a, b| b.cmp(a));
    Weight(e)
}

/// `a ≤ b` in the dominance (Bruhat) order: partial sums of `a` bounded by
/// those of `b`, with equal totals.
pub fn dominance_leq(a: &Weight, b: &Weight) -> Result<bool> {
    b.check_rank(a.rank())?;
    a.check_dominant()?;
    b.check_dominant()?;
    Ok(dominance_leq_unchecked(a.entries(), b.entries()))
}

pub(crate) fn dominance_leq_unchecked(a: &[i64], b: &[i64]) -> bool {
    let (mut sa, mut sb) = (0i64, 0i64);
    for (x, y) in a.iter().zip(b) {
        sa += x;
        sb += y;
        if sa > sb {
            return false;
        }
    }
    sa == sb
}

/// `⟨2ρ, μ⟩ = Σ_i (n + 1 - 2i) μ_i`.
pub fn two_rho_pairing(mu: &Weight) -> i64 {
    let n = mu.rank() as i64;
    mu.entries()
        .iter()
        .enumerate()
        .map(|(i, m)| (n - 1 - 2 * i as i64) * m)
        .sum()
}

/// `-w_0(μ)`: reverse and negate.
pub fn dual_weight(mu: &Weight) -> Result<Weight> {
    mu.check_dominant()?;
    Ok(Weight(mu.0.iter().rev().map(|a| -a).collect()))
}

/// All dominant weights of rank `n` with entries in `[lo, hi]`, in increasing
/// lexicographic order.
pub fn dominant_weights_in_box(n: usize, lo: i64, hi: i64) -> Vec<Weight> {
    fn rec(n: usize, lo: i64, upper: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if cur.len() == n {
            out.push(Weight(cur.clone()));
            return;
        }
        for x in lo..=upper {
            cur.push(x);
            rec(n, lo, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lo <= hi {
        rec(n, lo, hi, &mut Vec::with_capacity(n), &mut out);
    }
    out.sort();
    out
}

/// Dominant weights of rank `n` lying below `top` in dominance, with every
/// entry at least `floor`.
pub fn dominant_weights_below(top: &Weight, floor: i64) -> Vec<Weight> {
    let n = top.rank();
    let hi = top.max_entry().unwrap_or(0);
    dominant_weights_in_box(n, floor, hi)
        .into_iter()
        .filter(|w| dominance_leq_unchecked(w.entries(), top.entries()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(e: &[i64]) -> Weight {
        Weight::new(e.to_vec())
    }

    #[test]
    fn dominant_representative_sorts() {
        assert_eq!(dominant_representative(&w(&[0, 2, 1])), w(&[2, 1, 0]));
        assert_eq!(dominant_representative(&w(&[1, 1])), w(&[1, 1]));
        assert_eq!(dominant_representative(&w(&[-1, 0, 3])), w(&[3, 0, -1]));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&w(&[1, 1, 0]), &w(&[2, 0, 0])).unwrap());
        assert!(!dominance_leq(&w(&[2, 0]), &w(&[1, 1])).unwrap());
        assert!(!dominance_leq(&w(&[1, 0]), &w(&[1, 1])).unwrap());
        assert!(matches!(dominance_leq(&w(&[0, 1]), &w(&[1, 0])), Err(Error::NotDominant(_))));
        assert!(matches!(dominance_leq(&w(&[1]), &w(&[1, 0])), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn two_rho_examples() {
        assert_eq!(two_rho_pairing(&w(&[1, 0])), 1);
        assert_eq!(two_rho_pairing(&w(&[1, 1])), 0);
        assert_eq!(two_rho_pairing(&w(&[1, 0, 0])), 2);
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual_weight(&w(&[1, 0])).unwrap(), w(&[0, -1]));
        assert_eq!(dual_weight(&w(&[0, 0, 0])).unwrap(), w(&[0, 0, 0]));
        for n in 1..=5 {
            for i in 0..=n {
                let omega = Weight::fundamental(n, i).unwrap();
                let expected = Weight::fundamental(n, n - i).unwrap().sub(&Weight::central(n, 1)).unwrap();
                assert_eq!(dual_weight(&omega).unwrap(), expected);
            }
        }
    }

    #[test]
    fn dominance_is_partial_order() {
        for n in 1..=4 {
            let ws = dominant_weights_in_box(n, 0, 3);
            for a in &ws {
                assert!(dominance_leq(a, a).unwrap());
                for b in &ws {
                    let ab = dominance_leq(a, b).unwrap();
                    let ba = dominance_leq(b, a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    let da = dual_weight(a).unwrap();
                    let db = dual_weight(b).unwrap();
                    assert_eq!(ab, dominance_leq(&da, &db).unwrap());
                    assert_eq!(dual_weight(&da).unwrap(), *a);
                    if !ab {
                        continue;
                    }
                    for c in &ws {
                        if dominance_leq(b, c).unwrap() {
                            assert!(dominance_leq(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn two_rho_linear_and_kills_centre() {
        for n in 1..=4 {
            assert_eq!(two_rho_pairing(&Weight::central(n, 7)), 0);
            let ws = dominant_weights_in_box(n, -2, 2);
            for a in &ws {
                for b in ws.iter().take(10) {
                    let s = a.add(b).unwrap();
                    assert_eq!(two_rho_pairing(&s), two_rho_pairing(a) + two_rho_pairing(b));
                }
            }
        }
    }

    #[test]
    fn orbit_counts() {
        assert_eq!(w(&[1, 0]).orbit(), vec![w(&[0, 1]), w(&[1, 0])]);
        assert_eq!(w(&[1, 1, 0]).orbit().len(), 3);
        assert_eq!(w(&[2, 1, 0]).orbit_size(), 6);
        assert_eq!(w(&[1, 1, 0, 0]).orbit_size(), 6);
    }

    #[test]
    fn parse_weights() {
        assert_eq!("(1,0)".parse::<Weight>().unwrap(), w(&[1, 0]));
        assert_eq!("-1, 0,3".parse::<Weight>().unwrap(), w(&[-1, 0, 3]));
        assert_eq!("[2,2]".parse::<Weight>().unwrap(), w(&[2, 2]));
        assert!("(1,x)".parse::<Weight>().is_err());
        assert_eq!(w(&[2, -1]).to_string(), "(2,-1)");
    }

    #[test]
    fn group_spec_centre() {
        let g = GroupSpec::gl(3);
        assert!(g.is_central(&w(&[2, 2, 2])).unwrap());
        assert!(!g.is_central(&w(&[2, 0, -2])).unwrap());
        assert!(GroupSpec::new(2, vec![w(&[1, 1]), w(&[2, 2])]).is_err());
    }
}
