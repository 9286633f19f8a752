//! Lattices in `Q^n` localized at a prime `p`, their relative position, and
//! brute-force enumeration at small depth.
//!
//! A lattice is the `Z_(p)`-span of the columns of its basis matrix. The
//! relative position is oriented so that `inv(Λ₀, μ(p)Λ₀) = μ`.

mod enumerate;

pub use enumerate::{
    convolution_oracle, convolution_oracle_with, enumerate_between, enumerate_range, enumerate_range_with,
    schubert_count, structure_constants, structure_constants_with, MAX_DEPTH, MAX_RANK,
};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::Weight;

pub type QMatrix = Vec<Vec<BigRational>>;

/// `v_p(x)`, or `None` for `x = 0`.
pub fn valuation(x: &BigRational, p: u64) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    Some(valuation_int(x.numer(), p) - valuation_int(x.denom(), p))
}

fn valuation_int(n: &BigInt, p: u64) -> i64 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{p} is not prime")))
    }
}

fn check_square(m: &QMatrix) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidArgument("matrix must be square".into()));
    }
    Ok(n)
}

fn p_power(p: u64, k: i64) -> BigRational {
    let base = BigRational::from_integer(BigInt::from(p));
    num_traits::Pow::pow(&base, k as i32)
}

/// Valuations of the elementary divisors of `m` over `Z_(p)`, weakly
/// decreasing.
pub fn smith_invariants(m: &QMatrix, p: u64) -> Result<Weight> {
    check_prime(p)?;
    let n = check_square(m)?;
    let mut a = m.clone();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut best: Option<(i64, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, x) in row.iter().enumerate().skip(k) {
                if let Some(v) = valuation(x, p) {
                    if best.is_none_or(|(b, _, _)| v < b) {
                        best = Some((v, i, j));
                    }
                }
            }
        }
        let Some((v, i, j)) = best else {
            return Err(Error::Singular);
        };
        a.swap(k, i);
        for row in a.iter_mut() {
            row.swap(k, j);
        }
        // Every ratio against the pivot lies in Z_(p), so these are
        // invertible operations over the local ring.
        let pivot_row = a[k].clone();
        for row in a.iter_mut().skip(k + 1) {
            if row[k].is_zero() {
                continue;
            }
            let f = &row[k] / &pivot_row[k];
            for c in k..n {
                row[c] -= &f * &pivot_row[c];
            }
        }
        for c in k + 1..n {
            a[k][c] = BigRational::zero();
        }
        out.push(v);
    }
    out.sort_unstable_by(|x, y| y.cmp(x));
    Ok(Weight::new(out))
}

fn inverse(m: &QMatrix) -> Result<QMatrix> {
    let n = check_square(m)?;
    let mut a: QMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn mat_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// A full-rank `Z_(p)`-lattice in `Q^n`, stored in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PLattice {
    prime: u64,
    basis: QMatrix,
}

impl PLattice {
    /// The span of the columns of `basis`. Denominators prime to `p` are
    /// units and vanish in the canonical form, which only has `p`-power
    /// denominators.
    pub fn new(prime: u64, basis: QMatrix) -> Result<Self> {
        check_prime(prime)?;
        check_square(&basis)?;
        smith_invariants(&basis, prime)?;
        Ok(PLattice { prime, basis: canonical_form(prime, basis) })
    }

    /// `Λ₀ = Z_(p)^n`.
    pub fn standard(prime: u64, n: usize) -> Result<Self> {
        Self::from_weight(prime, &Weight::zero(n))
    }

    /// `μ(p)Λ₀`, spanned by `p^{μ_i} e_i`.
    pub fn from_weight(prime: u64, mu: &Weight) -> Result<Self> {
        check_prime(prime)?;
        let n = mu.rank();
        let basis = (0..n)
            .map(|i| (0..n).map(|j| if i == j { p_power(prime, mu.entries()[i]) } else { BigRational::zero() }).collect())
            .collect();
        Ok(PLattice { prime, basis })
    }

    /// Trusted constructor for a matrix already in canonical form.
    pub(crate) fn from_canonical(prime: u64, basis: QMatrix) -> Self {
        PLattice { prime, basis }
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    /// `p^k Λ`.
    pub fn scaled(&self, k: i64) -> PLattice {
        let f = p_power(self.prime, k);
        PLattice { prime: self.prime, basis: self.basis.iter().map(|r| r.iter().map(|x| x * &f).collect()).collect() }
    }

    /// `g Λ` for an invertible rational `g`.
    pub fn transform(&self, g: &QMatrix) -> Result<PLattice> {
        if check_square(g)? != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: g.len() });
        }
        PLattice::new(self.prime, mat_mul(g, &self.basis))
    }

    /// Row-major entries as `"a/b"` strings.
    pub fn basis_strings(&self) -> Vec<Vec<String>> {
        self.basis.iter().map(|r| r.iter().map(rational_string).collect()).collect()
    }

    pub fn from_strings(prime: u64, rows: &[Vec<String>]) -> Result<Self> {
        let basis = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<QMatrix>>()?;
        PLattice::new(prime, basis)
    }
}

pub fn rational_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (a, b) = s.split_once('/').unwrap_or((s, "1"));
    let a: BigInt = a.trim().parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let b: BigInt = b.trim().parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if b.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(a, b))
}

/// `x mod p^a Z_(p)` as an integer in `[0, p^a)`, for `x ∈ Z_(p)`.
fn reduce_mod(x: &BigRational, p: u64, a: i64) -> BigInt {
    let m = BigInt::from(p).pow(a as u32);
    let inv_den = mod_inverse(&x.denom().mod_floor(&m), &m);
    (x.numer() * inv_den).mod_floor(&m)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    if m.is_one() {
        return BigInt::zero();
    }
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Column Hermite form over `Z_(p)`: lower triangular, diagonal `p^{a_i}`, and
/// the entries of row `r` left of the diagonal reduced into `[0, p^{a_r})`.
/// The lattice is first scaled into `Z_(p)^n` by the least power of `p` that
/// does it, which depends only on the lattice.
fn canonical_form(p: u64, basis: QMatrix) -> QMatrix {
    let n = basis.len();
    let min_val = basis.iter().flatten().filter_map(|x| valuation(x, p)).min().unwrap_or(0);
    let s = (-min_val).max(0);
    let up = p_power(p, s);
    let mut b: QMatrix = basis.iter().map(|r| r.iter().map(|x| x * &up).collect()).collect();
    let mut diag = vec![0i64; n];
    for i in 0..n {
        let (j, v) = (i..n)
            .filter_map(|j| valuation(&b[i][j], p).map(|v| (j, v)))
            .min_by_key(|&(j, v)| (v, j))
            .expect("nonsingular");
        for row in b.iter_mut() {
            row.swap(i, j);
        }
        let unit = &b[i][i] / p_power(p, v);
        let inv = unit.recip();
        for row in b.iter_mut() {
            row[i] *= &inv;
        }
        for c in i + 1..n {
            if b[i][c].is_zero() {
                continue;
            }
            let f = &b[i][c] / &b[i][i];
            for row in b.iter_mut() {
                let t = &f * &row[i];
                row[c] -= t;
            }
        }
        diag[i] = v;
    }
    for i in 0..n {
        for r in i + 1..n {
            let target = BigRational::from_integer(reduce_mod(&b[r][i], p, diag[r]));
            let f = (&b[r][i] - &target) / &b[r][r];
            for row in b.iter_mut() {
                let t = &f * &row[r];
                row[i] -= t;
            }
        }
    }
    let down = p_power(p, -s);
    b.iter().map(|r| r.iter().map(|x| x * &down).collect()).collect()
}

/// `inv(L1, L2)`: the Smith invariants of `A^{-1} B` for `L1 = AΛ₀`,
/// `L2 = BΛ₀`.
pub fn inv_pair(l1: &PLattice, l2: &PLattice) -> Result<Weight> {
    if l1.prime != l2.prime {
        return Err(Error::PrimeMismatch(l1.prime, l2.prime));
    }
    if l1.rank() != l2.rank() {
        return Err(Error::RankMismatch { expected: l1.rank(), found: l2.rank() });
    }
    smith_invariants(&mat_mul(&inverse(&l1.basis)?, &l2.basis), l1.prime)
}

impl fmt::Debug for PLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PLattice[p={}](", self.prime)?;
        for (i, r) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct LatticeWire {
    prime: u64,
    basis: Vec<Vec<String>>,
}

impl Serialize for PLattice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LatticeWire { prime: self.prime, basis: self.basis_strings() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PLattice {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = LatticeWire::deserialize(d)?;
        PLattice::from_strings(w.prime, &w.basis).map_err(serde::de::Error::custom)
    }
}

/// Converts a small integer matrix.
pub fn qmatrix(rows: &[Vec<i64>]) -> QMatrix {
    rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(e: &[i64]) -> Weight {
        Weight::new(e.to_vec())
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(&q(12, 1), 2), Some(2));
        assert_eq!(valuation(&q(3, 8), 2), Some(-3));
        assert_eq!(valuation(&q(5, 7), 3), Some(0));
        assert_eq!(valuation(&q(0, 1), 3), None);
    }

    #[test]
    fn smith_examples() {
        assert_eq!(smith_invariants(&qmatrix(&[vec![4, 0], vec![0, 1]]), 2).unwrap(), w(&[2, 0]));
        assert_eq!(smith_invariants(&qmatrix(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), 3).unwrap(), w(&[0, 0, 0]));
        for p in [2i64, 3, 5] {
            assert_eq!(smith_invariants(&qmatrix(&[vec![p, 1], vec![0, p]]), p as u64).unwrap(), w(&[2, 0]));
        }
        assert_eq!(smith_invariants(&qmatrix(&[vec![1, 1], vec![1, 1]]), 2), Err(Error::Singular));
        assert!(smith_invariants(&qmatrix(&[vec![1, 0]]), 2).is_err());
        assert!(smith_invariants(&qmatrix(&[vec![1]]), 4).is_err());
        // Units away from p are invisible.
        assert_eq!(smith_invariants(&qmatrix(&[vec![3, 0], vec![0, 6]]), 2).unwrap(), w(&[1, 0]));
        let m = vec![vec![q(1, 2), q(0, 1)], vec![q(0, 1), q(4, 1)]];
        assert_eq!(smith_invariants(&m, 2).unwrap(), w(&[2, -1]));
    }

    /// `v_p(d_k / d_{k-1})` with `d_k` the gcd of the `k × k` minors, for
    /// integer `2 × 2` matrices.
    fn determinantal_divisors(m: &[[i64; 2]; 2], p: u64) -> Weight {
        let v = |x: i64| valuation(&q(x, 1), p).unwrap();
        let g = m.iter().flatten().filter(|&&x| x != 0).map(|&x| v(x)).min().unwrap();
        let d = v(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
        Weight::new(vec![d - g, g])
    }

    #[test]
    fn smith_matches_determinantal_divisors() {
        for a in -4..=4i64 {
            for b in -4..=4i64 {
                for c in [-3i64, 0, 2, 6] {
                    for d in [1i64, 4, -9, 12] {
                        if a * d == b * c {
                            continue;
                        }
                        for p in [2u64, 3] {
                            let m = [[a, b], [c, d]];
                            let got = smith_invariants(&qmatrix(&[vec![a, b], vec![c, d]]), p).unwrap();
                            assert_eq!(got, determinantal_divisors(&m, p), "{m:?} p={p}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lattice_equality_is_basis_independent() {
        let l = PLattice::new(2, qmatrix(&[vec![2, 0], vec![1, 4]])).unwrap();
        let l2 = PLattice::new(2, qmatrix(&[vec![2, 2], vec![1, 5]])).unwrap();
        assert_eq!(l, l2);
        let l3 = PLattice::new(2, vec![vec![q(2, 3), q(0, 1)], vec![q(1, 3), q(4, 1)]]).unwrap();
        assert_eq!(l, l3);
        let other = PLattice::new(2, qmatrix(&[vec![2, 0], vec![0, 4]])).unwrap();
        assert_ne!(l, other);
        assert_eq!(PLattice::standard(3, 2).unwrap(), PLattice::new(3, qmatrix(&[vec![1, 1], vec![0, 5]])).unwrap());
        assert_eq!(PLattice::new(2, vec![vec![q(1, 3)]]).unwrap(), PLattice::standard(2, 1).unwrap());
        assert_eq!(PLattice::new(2, vec![vec![q(5, 6)]]).unwrap().basis(), &vec![vec![q(1, 2)]]);
        assert!(PLattice::new(2, qmatrix(&[vec![0]])).is_err());
        let frac = PLattice::new(3, vec![vec![q(1, 9), q(0, 1)], vec![q(2, 3), q(1, 1)]]).unwrap();
        assert_eq!(frac.scaled(2).scaled(-2), frac);
    }

    #[test]
    fn inv_pair_examples() {
        let l0 = PLattice::standard(2, 2).unwrap();
        assert_eq!(inv_pair(&l0, &PLattice::from_weight(2, &w(&[1, 0])).unwrap()).unwrap(), w(&[1, 0]));
        assert_eq!(inv_pair(&l0, &PLattice::from_weight(2, &w(&[0, 1])).unwrap()).unwrap(), w(&[1, 0]));
        assert_eq!(inv_pair(&l0, &l0.scaled(1)).unwrap(), w(&[1, 1]));
        assert_eq!(inv_pair(&l0.scaled(1), &l0).unwrap(), w(&[-1, -1]));
        for mu in crate::rootdata::dominant_weights_in_box(3, -2, 2) {
            let l = PLattice::from_weight(3, &mu).unwrap();
            assert_eq!(inv_pair(&PLattice::standard(3, 3).unwrap(), &l).unwrap(), mu);
        }
        assert!(matches!(inv_pair(&l0, &PLattice::standard(3, 2).unwrap()), Err(Error::PrimeMismatch(2, 3))));
        assert!(inv_pair(&l0, &PLattice::standard(2, 3).unwrap()).is_err());
    }

    #[test]
    fn serde_round_trip() {
        let l = PLattice::new(2, vec![vec![q(1, 2), q(0, 1)], vec![q(3, 1), q(4, 1)]]).unwrap();
        let s = serde_json::to_string(&l).unwrap();
        let back: PLattice = serde_json::from_str(&s).unwrap();
        assert_eq!(back, l);
        assert_eq!(parse_rational(" -3/6 ").unwrap(), q(-1, 2));
        assert_eq!(parse_rational("5").unwrap(), q(5, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    fn unimodular(p: i64, seed: &[i64]) -> QMatrix {
        // Products of elementary matrices and units away from p.
        let unit = if p == 2 { 3 } else { 2 };
        let mut u = qmatrix(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        for (k, &s) in seed.iter().enumerate() {
            let (i, j) = (k % 3, (k + 1 + (s.unsigned_abs() as usize % 2)) % 3);
            let mut e = qmatrix(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
            e[i][j] = BigRational::from_integer(s.into());
            if s % 4 == 0 {
                e[j][j] = BigRational::new(1.into(), unit.into());
            }
            u = mat_mul(&u, &e);
        }
        u
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn smith_is_invariant_under_unimodular_factors(
            entries in proptest::collection::vec(-9i64..=9, 9),
            s1 in proptest::collection::vec(-5i64..=5, 6),
            s2 in proptest::collection::vec(-5i64..=5, 6),
            p in prop_oneof![Just(2i64), Just(3)],
        ) {
            let m = qmatrix(&[entries[0..3].to_vec(), entries[3..6].to_vec(), entries[6..9].to_vec()]);
            let Ok(base) = smith_invariants(&m, p as u64) else { return Ok(()); };
            let u = unimodular(p, &s1);
            let v = unimodular(p, &s2);
            prop_assert_eq!(&smith_invariants(&mat_mul(&m, &u), p as u64).unwrap(), &base);
            prop_assert_eq!(&smith_invariants(&mat_mul(&u, &m), p as u64).unwrap(), &base);
            prop_assert_eq!(&smith_invariants(&mat_mul(&mat_mul(&v, &m), &u), p as u64).unwrap(), &base);
            let l = PLattice::new(p as u64, m.clone()).unwrap();
            prop_assert_eq!(&PLattice::new(p as u64, mat_mul(&m, &u)).unwrap(), &l);
        }
    }
}
