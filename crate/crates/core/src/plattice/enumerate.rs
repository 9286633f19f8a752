use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{check_prime, inv_pair, PLattice, QMatrix};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::rootdata::{dominant_weights_below, Weight};

/// Largest depth `N` accepted by [`enumerate_between`].
pub const MAX_DEPTH: i64 = 2;
/// Largest rank accepted by the enumerations.
pub const MAX_RANK: usize = 3;

fn check_bounds(p: u64, n: usize, width: i64) -> Result<()> {
    check_prime(p)?;
    if p > 3 {
        return Err(Error::OutOfRange(format!("enumeration needs p <= 3, got {p}")));
    }
    if n == 0 || n > MAX_RANK {
        return Err(Error::OutOfRange(format!("enumeration needs 1 <= n <= {MAX_RANK}, got {n}")));
    }
    if !(0..=2 * MAX_DEPTH).contains(&width) {
        return Err(Error::OutOfRange(format!("enumeration window {width} exceeds {}", 2 * MAX_DEPTH)));
    }
    Ok(())
}

/// All `Λ` with `p^N Λ₀ ⊆ Λ ⊆ p^{-N} Λ₀`.
pub fn enumerate_between(p: u64, n: usize, depth: i64) -> Result<Vec<PLattice>> {
    if !(0..=MAX_DEPTH).contains(&depth) {
        return Err(Error::OutOfRange(format!("depth must lie in 0..={MAX_DEPTH}, got {depth}")));
    }
    enumerate_range(p, n, -depth, depth)
}

/// All `Λ` with `p^hi Λ₀ ⊆ Λ ⊆ p^lo Λ₀`.
pub fn enumerate_range(p: u64, n: usize, lo: i64, hi: i64) -> Result<Vec<PLattice>> {
    enumerate_range_with(Exec::default(), p, n, lo, hi)
}

/// Lattices come out grouped by the diagonal of their Hermite form, in a
/// fixed order that does not depend on `exec`.
pub fn enumerate_range_with(exec: Exec, p: u64, n: usize, lo: i64, hi: i64) -> Result<Vec<PLattice>> {
    check_bounds(p, n, hi - lo)?;
    let k = (hi - lo) as u32;
    let mut shapes: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..n {
        shapes = shapes.into_iter().flat_map(|s| (0..=k).map(move |a| [s.clone(), vec![a]].concat())).collect();
    }
    let pi = p as i128;
    let per_shape = exec.map(&shapes, |diag| {
        let mut out = Vec::new();
        let mut b = vec![vec![0i128; n]; n];
        for i in 0..n {
            b[i][i] = pi.pow(diag[i]);
        }
        // Free cells: row r, column c < r, each in [0, p^{a_r}).
        let cells: Vec<(usize, usize)> = (0..n).flat_map(|r| (0..r).map(move |c| (r, c))).collect();
        fill(&mut b, &cells, 0, pi, k, &mut |m| {
            out.push(to_lattice(p, m, lo));
        });
        out
    });
    Ok(per_shape.into_iter().flatten().collect())
}

fn fill(b: &mut [Vec<i128>], cells: &[(usize, usize)], idx: usize, p: i128, k: u32, emit: &mut dyn FnMut(&[Vec<i128>])) {
    if idx == cells.len() {
        if contains_scaled_standard(b, p.pow(k)) {
            emit(b);
        }
        return;
    }
    let (r, c) = cells[idx];
    for x in 0..b[r][r] {
        b[r][c] = x;
        fill(b, cells, idx + 1, p, k, emit);
    }
    b[r][c] = 0;
}

/// Whether `p^K e_j` lies in the column span of the lower-triangular `b`
/// for every `j`, by forward substitution.
fn contains_scaled_standard(b: &[Vec<i128>], pk: i128) -> bool {
    let n = b.len();
    let mut x = vec![0i128; n];
    for j in 0..n {
        for i in 0..n {
            let mut rhs = if i == j { pk } else { 0 };
            for (k, xk) in x.iter().enumerate().take(i) {
                rhs -= b[i][k] * xk;
            }
            if rhs % b[i][i] != 0 {
                return false;
            }
            x[i] = rhs / b[i][i];
        }
    }
    true
}

fn to_lattice(p: u64, m: &[Vec<i128>], lo: i64) -> PLattice {
    let f = super::p_power(p, lo);
    let basis: QMatrix =
        m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x)) * &f).collect()).collect();
    PLattice::from_canonical(p, basis)
}

fn check_weight(mu: &Weight, n: usize) -> Result<()> {
    mu.check_rank(n)?;
    mu.check_dominant()?;
    if mu.entries().iter().any(|e| e.abs() > MAX_DEPTH) {
        return Err(Error::OutOfRange(format!("{mu} exceeds the enumeration depth {MAX_DEPTH}")));
    }
    Ok(())
}

fn lattices_at(exec: Exec, mu: &Weight, p: u64) -> Result<Vec<PLattice>> {
    let n = mu.rank();
    let lo = mu.min_entry().unwrap_or(0);
    let hi = mu.max_entry().unwrap_or(0);
    let l0 = PLattice::standard(p, n)?;
    let all = enumerate_range_with(exec, p, n, lo, hi)?;
    let keep = exec.map(&all, |l| inv_pair(&l0, l).map(|w| &w == mu));
    let mut out = Vec::new();
    for (l, k) in all.into_iter().zip(keep) {
        if k? {
            out.push(l);
        }
    }
    Ok(out)
}

/// `#{Λ : inv(Λ₀, Λ) = μ}`.
pub fn schubert_count(mu: &Weight, p: u64, n: usize) -> Result<u64> {
    check_weight(mu, n)?;
    Ok(lattices_at(Exec::default(), mu, p)?.len() as u64)
}

/// `(T_λ * T_μ)(ν(p)) = #{Λ : inv(Λ₀, Λ) = λ, inv(Λ, ν(p)Λ₀) = μ}`.
pub fn convolution_oracle(lam: &Weight, mu: &Weight, nu: &Weight, p: u64) -> Result<u64> {
    convolution_oracle_with(Exec::default(), lam, mu, nu, p)
}

pub fn convolution_oracle_with(exec: Exec, lam: &Weight, mu: &Weight, nu: &Weight, p: u64) -> Result<u64> {
    let n = lam.rank();
    check_weight(lam, n)?;
    check_weight(mu, n)?;
    nu.check_rank(n)?;
    nu.check_dominant()?;
    if nu.entries().iter().any(|e| e.abs() > 2 * MAX_DEPTH) {
        return Err(Error::OutOfRange(format!("{nu} exceeds twice the enumeration depth")));
    }
    let target = PLattice::from_weight(p, nu)?;
    let candidates = lattices_at(exec, lam, p)?;
    let hits = exec.map(&candidates, |l| inv_pair(l, &target).map(|w| &w == mu));
    let mut count = 0;
    for h in hits {
        if h? {
            count += 1;
        }
    }
    Ok(count)
}

/// Every nonzero `(T_λ * T_μ)(ν(p))`, keyed by `ν`.
pub fn structure_constants(lam: &Weight, mu: &Weight, p: u64) -> Result<BTreeMap<Weight, u64>> {
    structure_constants_with(Exec::default(), lam, mu, p)
}

pub fn structure_constants_with(exec: Exec, lam: &Weight, mu: &Weight, p: u64) -> Result<BTreeMap<Weight, u64>> {
    let n = lam.rank();
    check_weight(lam, n)?;
    check_weight(mu, n)?;
    let top = lam.add(mu)?;
    let floor = lam.min_entry().unwrap_or(0) + mu.min_entry().unwrap_or(0);
    let candidates = lattices_at(exec, lam, p)?;
    let mut out = BTreeMap::new();
    for nu in dominant_weights_below(&top, floor) {
        let target = PLattice::from_weight(p, &nu)?;
        let hits = exec.map(&candidates, |l| inv_pair(l, &target).map(|w| &w == mu));
        let mut count = 0u64;
        for h in hits {
            if h? {
                count += 1;
            }
        }
        if count > 0 {
            out.insert(nu, count);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::dominant_weights_in_box;
    use std::collections::BTreeSet;

    fn w(e: &[i64]) -> Weight {
        Weight::new(e.to_vec())
    }

    #[test]
    fn small_enumerations() {
        let only = enumerate_between(2, 2, 0).unwrap();
        assert_eq!(only, vec![PLattice::standard(2, 2).unwrap()]);
        let l0 = PLattice::standard(2, 2).unwrap();
        let between = enumerate_range(2, 2, 0, 1).unwrap();
        let index_p = between.iter().filter(|l| inv_pair(&l0, l).unwrap().total() == 1).count();
        assert_eq!(index_p, 3);
        for p in [2u64, 3] {
            let l0 = PLattice::standard(p, 2).unwrap();
            let sub = enumerate_range(p, 2, 0, 2).unwrap();
            let len2 = sub.iter().filter(|l| inv_pair(&l0, l).unwrap().total() == 2).count() as u64;
            assert_eq!(len2, p * p + p + 1);
        }
        assert!(enumerate_between(2, 2, 3).is_err());
        assert!(enumerate_between(5, 2, 1).is_err());
        assert!(enumerate_between(2, 4, 1).is_err());
    }

    #[test]
    fn enumeration_is_duplicate_free_and_canonical() {
        for (p, n, d) in [(2u64, 2usize, 1i64), (3, 2, 1), (2, 3, 1), (2, 2, 2)] {
            let all = enumerate_between(p, n, d).unwrap();
            let set: BTreeSet<&PLattice> = all.iter().collect();
            assert_eq!(set.len(), all.len());
            for l in all.iter().take(200) {
                assert_eq!(&PLattice::new(p, l.basis().clone()).unwrap(), l);
            }
            assert_eq!(all, enumerate_range_with(Exec::Sequential, p, n, -d, d).unwrap());
        }
    }

    /// Subgroups of `(Z/p^2)^2` containing nothing special: counted as
    /// sublattices of `Z^2` containing `p^2 Z^2`, by listing all subsets of the
    /// 16 or 81 residues closed under addition that contain 0.
    fn subgroup_count(p: i64) -> usize {
        let m = p * p;
        let elems: Vec<(i64, i64)> = (0..m).flat_map(|a| (0..m).map(move |b| (a, b))).collect();
        let mut groups: BTreeSet<BTreeSet<(i64, i64)>> = BTreeSet::new();
        // Every subgroup is generated by at most two elements.
        for &g in &elems {
            for &h in &elems {
                let mut s = BTreeSet::new();
                for i in 0..m {
                    for j in 0..m {
                        s.insert(((i * g.0 + j * h.0) % m, (i * g.1 + j * h.1) % m));
                    }
                }
                groups.insert(s);
            }
        }
        groups.len()
    }

    #[test]
    fn depth_two_count_matches_subgroups() {
        for p in [2u64, 3] {
            assert_eq!(enumerate_range(p, 2, 0, 2).unwrap().len(), subgroup_count(p as i64));
        }
    }

    #[test]
    fn inv_pair_reverses_under_swap() {
        let all = enumerate_between(2, 2, 1).unwrap();
        for a in &all {
            for b in &all {
                let ab = inv_pair(a, b).unwrap();
                let ba = inv_pair(b, a).unwrap();
                assert_eq!(crate::rootdata::dual_weight(&ab).unwrap(), ba);
            }
        }
    }

    #[test]
    fn schubert_counts() {
        assert_eq!(schubert_count(&w(&[1, 0]), 2, 2).unwrap(), 3);
        assert_eq!(schubert_count(&w(&[1, 0, 0]), 2, 3).unwrap(), 7);
        assert_eq!(schubert_count(&w(&[1, 1]), 2, 2).unwrap(), 1);
        assert_eq!(schubert_count(&w(&[0, -1]), 3, 2).unwrap(), 4);
        assert!(schubert_count(&w(&[3, 0]), 2, 2).is_err());
        assert!(schubert_count(&w(&[0, 1]), 2, 2).is_err());
    }

    #[test]
    fn oracle_examples() {
        let o = w(&[1, 0]);
        assert_eq!(convolution_oracle(&o, &o, &w(&[2, 0]), 2).unwrap(), 1);
        assert_eq!(convolution_oracle(&o, &o, &w(&[1, 1]), 2).unwrap(), 3);
        assert_eq!(convolution_oracle(&o, &o, &w(&[1, 1]), 3).unwrap(), 4);
        for mu in dominant_weights_in_box(2, 0, 2) {
            for nu in dominant_weights_in_box(2, 0, 2) {
                let c = convolution_oracle(&Weight::zero(2), &mu, &nu, 2).unwrap();
                assert_eq!(c, u64::from(mu == nu));
            }
        }
        let table = structure_constants(&o, &o, 2).unwrap();
        assert_eq!(table, BTreeMap::from([(w(&[1, 1]), 3), (w(&[2, 0]), 1)]));
        assert_eq!(structure_constants_with(Exec::Sequential, &o, &o, 2).unwrap(), table);
    }
}
