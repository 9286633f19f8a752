use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use super::laurent::LaurentScalar;
use super::sympoly::SymPoly;
use crate::error::Result;
use crate::rootdata::{dominant_weights_below, Weight};

/// Kostka number `K_{λ,α}`: semistandard tableaux of shape `λ` and content
/// `α`, counted through Gelfand–Tsetlin branching `λ ⊃ κ ⊃ ⋯`.
pub fn kostka(shape: &Weight, content: &Weight) -> u64 {
    if shape.rank() != content.rank() || shape.min_entry().is_some_and(|m| m < 0) {
        return 0;
    }
    let mut memo = HashMap::new();
    kostka_rec(shape.entries(), content.entries(), &mut memo)
}

fn kostka_rec(shape: &[i64], content: &[i64], memo: &mut HashMap<(Vec<i64>, usize), u64>) -> u64 {
    let r = shape.len();
    if r == 0 {
        return 1;
    }
    if content[r - 1] < 0 {
        return 0;
    }
    if r == 1 {
        return u64::from(shape[0] == content[0]);
    }
    let key = (shape.to_vec(), r);
    if let Some(&c) = memo.get(&key) {
        return c;
    }
    let target: i64 = shape.iter().sum::<i64>() - content[r - 1];
    let mut total = 0;
    let mut kappa = Vec::with_capacity(r - 1);
    interlacing(shape, target, &mut kappa, &mut |k: &[i64]| {
        total += kostka_rec(k, &content[..r - 1], memo);
    });
    memo.insert(key, total);
    total
}

/// Calls `f` on every `κ` of length `len(λ) - 1` with `λ_i ≥ κ_i ≥ λ_{i+1}`
/// and `|κ| = target`.
fn interlacing(shape: &[i64], target: i64, cur: &mut Vec<i64>, f: &mut dyn FnMut(&[i64])) {
    let i = cur.len();
    let m = shape.len() - 1;
    let sum: i64 = cur.iter().sum();
    if i == m {
        if sum == target {
            f(cur);
        }
        return;
    }
    let rest_max: i64 = shape[i + 1..m].iter().sum();
    let rest_min: i64 = shape[i + 2..=m].iter().sum();
    for k in shape[i + 1]..=shape[i] {
        let s = sum + k;
        if s + rest_max < target || s + rest_min > target {
            continue;
        }
        cur.push(k);
        interlacing(shape, target, cur, f);
        cur.pop();
    }
}

/// The Schur Laurent polynomial `s_λ` in the monomial basis.
pub fn schur(lam: &Weight) -> Result<SymPoly> {
    lam.check_dominant()?;
    let k = (-lam.min_entry().unwrap_or(0)).max(0);
    let shifted = lam.shift(k);
    let terms = dominant_weights_below(&shifted, 0)
        .into_iter()
        .map(|mu| {
            let c = kostka(&shifted, &mu);
            (mu.shift(-k), LaurentScalar::constant(BigInt::from(c)))
        });
    SymPoly::from_terms(lam.rank(), terms)
}

/// The unique expansion `f = Σ c_λ s_λ`, by peeling off the
/// dominance-maximal term.
pub fn expand_in_schur(f: &SymPoly) -> BTreeMap<Weight, LaurentScalar> {
    let mut rem = f.clone();
    let mut out = BTreeMap::new();
    while let Some((lam, c)) = rem.leading_term() {
        let (lam, c) = (lam.clone(), c.clone());
        let s = schur(&lam).expect("keys of a SymPoly are dominant");
        rem = rem.sub(&s.scale(&c)).expect("same rank");
        out.insert(lam, c);
    }
    out
}

/// `Σ c_λ s_λ` back in the monomial basis.
pub fn from_schur_expansion(rank: usize, coeffs: &BTreeMap<Weight, LaurentScalar>) -> Result<SymPoly> {
    let mut acc = SymPoly::zero(rank);
    for (lam, c) in coeffs {
        lam.check_rank(rank)?;
        acc = acc.add(&schur(lam)?.scale(c))?;
    }
    Ok(acc)
}
