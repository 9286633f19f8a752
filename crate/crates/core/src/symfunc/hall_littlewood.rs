//! Hall–Littlewood polynomials `P_μ(x; t)`.
//!
//! `P_μ = v_μ(t)^{-1} Σ_{w ∈ S_n} w( x^μ Π_{i<j} (x_i - t x_j) / (x_i - x_j) )`.
//! The symmetrized sum equals `A(x^μ Π_{i<j}(x_i - t x_j)) / Δ`, where `A` is
//! the antisymmetrizer and `Δ` the Vandermonde, so every monomial `x^β` with
//! distinct entries contributes `±s_{sort(β) - δ}` and the rest vanish. The
//! result is exact in `Z[t]` before the stabilizer factor is divided out.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::laurent::LaurentScalar;
use super::schur::schur;
use super::sympoly::SymPoly;
use crate::error::Result;
use crate::exec::Exec;
use crate::rootdata::Weight;

/// `v_m(t) = Π_{j=1}^m (1 - t^j)/(1 - t)`.
fn v_m(m: usize) -> LaurentScalar {
    let mut acc = LaurentScalar::one();
    for j in 1..=m {
        // [j]_t = 1 + t + ... + t^{j-1}
        let qint = LaurentScalar::from_terms((0..j as i64).map(|e| (e, BigInt::from(1))));
        acc = &acc * &qint;
    }
    acc
}

/// The stabilizer normalization `v_μ(t) = Π_a v_{m_a}(t)` over the
/// multiplicities `m_a` of the entries of `μ` (zeros included).
pub fn stabilizer_factor(mu: &Weight) -> LaurentScalar {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &e in mu.entries() {
        *counts.entry(e).or_default() += 1;
    }
    counts.values().fold(LaurentScalar::one(), |acc, &m| &acc * &v_m(m))
}

/// `P_μ(x; t)` with coefficients in `Z[t]`, printed with `t` as the variable.
pub fn hall_littlewood_t(mu: &Weight) -> Result<SymPoly> {
    hall_littlewood_t_with(Exec::default(), mu)
}

pub fn hall_littlewood_t_with(exec: Exec, mu: &Weight) -> Result<SymPoly> {
    mu.check_dominant()?;
    let n = mu.rank();
    let k = (-mu.min_entry().unwrap_or(0)).max(0);
    let shifted = mu.shift(k);

    // Expand x^μ Π_{i<j} (x_i - t x_j) monomial by monomial.
    let mut poly: BTreeMap<Vec<i64>, LaurentScalar> = BTreeMap::new();
    poly.insert(shifted.entries().to_vec(), LaurentScalar::one());
    let minus_t = LaurentScalar::monomial(-1, 1);
    for i in 0..n {
        for j in i + 1..n {
            let mut next: BTreeMap<Vec<i64>, LaurentScalar> = BTreeMap::new();
            for (e, c) in &poly {
                let mut a = e.clone();
                a[i] += 1;
                *next.entry(a).or_default() += c;
                let mut b = e.clone();
                b[j] += 1;
                *next.entry(b).or_default() += &(c * &minus_t);
            }
            next.retain(|_, c| !c.is_zero());
            poly = next;
        }
    }

    // Antisymmetrize: x^β ↦ sign · a_{sort β}, and a_{λ+δ}/Δ = s_λ.
    let mut schur_coeffs: BTreeMap<Weight, LaurentScalar> = BTreeMap::new();
    for (beta, c) in &poly {
        let Some((sign, sorted)) = sort_with_sign(beta) else {
            continue;
        };
        let lam = Weight::new(sorted.iter().enumerate().map(|(i, b)| b - (n - 1 - i) as i64).collect());
        let entry = schur_coeffs.entry(lam).or_default();
        if sign > 0 {
            *entry += c;
        } else {
            *entry -= c;
        }
    }
    schur_coeffs.retain(|_, c| !c.is_zero());

    let norm = stabilizer_factor(&shifted);
    let items: Vec<(Weight, LaurentScalar)> = schur_coeffs.into_iter().collect();
    let pieces = exec.map(&items, |(lam, c)| -> Result<SymPoly> {
        let c = c.exact_div(&norm).expect("the stabilizer factor divides the symmetrization");
        Ok(schur(lam)?.scale(&c))
    });
    let mut acc = SymPoly::zero(n);
    for p in pieces {
        acc = acc.add(&p?)?;
    }
    Ok(acc.shift_central(-k))
}

/// `P_μ(x; t)` at `t = v^{-2}`.
pub fn hall_littlewood(mu: &Weight) -> Result<SymPoly> {
    Ok(hall_littlewood_t(mu)?.map_coeffs(|c| c.substitute_power(-2)))
}

/// Sorts decreasing and returns the parity of the sorting permutation, or
/// `None` when two entries coincide.
fn sort_with_sign(beta: &[i64]) -> Option<(i8, Vec<i64>)> {
    let mut inversions = 0usize;
    for i in 0..beta.len() {
        for j in i + 1..beta.len() {
            if beta[i] == beta[j] {
                return None;
            }
            if beta[i] < beta[j] {
                inversions += 1;
            }
        }
    }
    let mut sorted = beta.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    Some((if inversions.is_multiple_of(2) { 1 } else { -1 }, sorted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{dominance_leq, dominant_weights_in_box};
    use crate::symfunc::SymPoly;
    use num_rational::BigRational;
    use num_traits::{One, Pow, Zero};

    fn w(e: &[i64]) -> Weight {
        Weight::new(e.to_vec())
    }

    fn m(e: &[i64]) -> SymPoly {
        SymPoly::monomial_sym(&w(e)).unwrap()
    }

    #[test]
    fn gl2_values() {
        assert_eq!(hall_littlewood(&w(&[1, 0])).unwrap(), m(&[1, 0]));
        assert_eq!(hall_littlewood(&w(&[1, 1])).unwrap(), m(&[1, 1]));
        let one_minus = LaurentScalar::one() - LaurentScalar::v_pow(-2);
        let expected = m(&[2, 0]).add(&m(&[1, 1]).scale(&one_minus)).unwrap();
        assert_eq!(hall_littlewood(&w(&[2, 0])).unwrap(), expected);
    }

    #[test]
    fn stabilizer_factors() {
        assert_eq!(stabilizer_factor(&w(&[1, 0])), LaurentScalar::one());
        assert_eq!(stabilizer_factor(&w(&[1, 1])), "1+v".parse().unwrap());
        assert_eq!(stabilizer_factor(&w(&[0, 0, 0])), "1+2v+2v^2+v^3".parse().unwrap());
    }

    /// Direct evaluation of the defining sum over `S_n` at a rational point,
    /// one rational function per permutation.
    fn defining_sum(mu: &[i64], x: &[BigRational], t: &BigRational) -> BigRational {
        let n = mu.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = BigRational::zero();
        loop {
            let y: Vec<&BigRational> = perm.iter().map(|&i| &x[i]).collect();
            let mut term = BigRational::one();
            for i in 0..n {
                term *= Pow::pow(y[i], mu[i] as i32);
                for j in i + 1..n {
                    term *= (y[i] - t * y[j]) / (y[i] - y[j]);
                }
            }
            total += term;
            // next permutation
            let mut i = n;
            while i > 1 && perm[i - 2] >= perm[i - 1] {
                i -= 1;
            }
            if i <= 1 {
                break;
            }
            let mut j = n - 1;
            while perm[j] <= perm[i - 2] {
                j -= 1;
            }
            perm.swap(i - 2, j);
            perm[i - 1..].reverse();
        }
        let norm = stabilizer_factor(&Weight::new(mu.to_vec())).eval(t).unwrap();
        total / norm
    }

    #[test]
    fn matches_defining_sum_at_rational_points() {
        let x: Vec<BigRational> = vec![
            BigRational::new(3.into(), 2.into()),
            BigRational::from_integer((-2).into()),
            BigRational::new(5.into(), 7.into()),
            BigRational::from_integer(4.into()),
        ];
        let t = BigRational::new(2.into(), 5.into());
        for n in 1..=4 {
            for mu in dominant_weights_in_box(n, -1, 3).into_iter().filter(|l| l.total().abs() <= 4) {
                let p = hall_littlewood_t(&mu).unwrap();
                assert_eq!(
                    p.eval_point(&x[..n], &t).unwrap(),
                    defining_sum(mu.entries(), &x[..n], &t),
                    "mu = {mu}"
                );
            }
        }
    }

    #[test]
    fn specializations_and_triangularity() {
        for n in 1..=3 {
            for mu in dominant_weights_in_box(n, 0, 4).into_iter().filter(|l| l.total() <= 4) {
                let p = hall_littlewood_t(&mu).unwrap();
                let at0 = p.map_coeffs(|c| LaurentScalar::constant(c.constant_term()));
                let at1 = p.map_coeffs(|c| LaurentScalar::constant(c.sum_coefficients()));
                assert_eq!(at0, schur(&mu).unwrap());
                assert_eq!(at1, SymPoly::monomial_sym(&mu).unwrap());
                assert!(p.coeff(&mu).is_one());
                for (lam, c) in p.terms() {
                    assert!(dominance_leq(lam, &mu).unwrap());
                    assert!(c.is_polynomial());
                }
            }
        }
    }

    #[test]
    fn five_variables() {
        let mu = w(&[2, 1, 0, 0, 0]);
        let p = hall_littlewood_t_with(Exec::Sequential, &mu).unwrap();
        assert_eq!(p, hall_littlewood_t_with(Exec::Parallel, &mu).unwrap());
        assert!(p.coeff(&mu).is_one());
    }
}
