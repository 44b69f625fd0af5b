use super::morphism::TLMorphism;
use crate::error::{Error, Result};
use crate::exact_arith::CyclotomicScalar;

/// `[0], [1], ..., [n]` with `[0] = 0`, `[1] = 1`, `[k+1] = τ[k] - [k-1]`.
pub fn quantum_integers(tau: &CyclotomicScalar, n: usize) -> Vec<CyclotomicScalar> {
    let order = tau.order();
    let mut q = vec![CyclotomicScalar::zero(order), CyclotomicScalar::one(order)];
    while q.len() <= n {
        let k = q.len();
        q.push(&(tau * &q[k - 1]) - &q[k - 2]);
    }
    q.truncate(n + 1);
    q
}

/// The Jones–Wenzl idempotent `f_n` in End(n) of TL(τ).
pub fn jones_wenzl(n: usize, tau: &CyclotomicScalar) -> Result<TLMorphism> {
    Ok(jones_wenzl_family(n, tau)?.pop().expect("family is nonempty"))
}

/// `f_0, ..., f_n` via `f_{k+1} = f_k ⊗ 1 - ([k]/[k+1]) (f_k ⊗ 1) e_k (f_k ⊗ 1)`.
pub fn jones_wenzl_family(n: usize, tau: &CyclotomicScalar) -> Result<Vec<TLMorphism>> {
    let q = quantum_integers(tau, n + 1);
    if let Some(k) = (1..=n).find(|&k| q[k].is_zero()) {
        return Err(Error::QuantumIntegerZero(k));
    }
    let mut family = vec![TLMorphism::identity(0, tau.clone())];
    if n >= 1 {
        family.push(TLMorphism::identity(1, tau.clone()));
    }
    for k in 1..n {
        let f = family[k].tensor(&TLMorphism::identity(1, tau.clone()))?;
        let sandwich = f.compose(&TLMorphism::e(k + 1, k, tau.clone()))?.compose(&f)?;
        let ratio = q[k].div(&q[k + 1]).expect("checked nonzero");
        family.push(f.sub(&sandwich.scale(&ratio))?);
    }
    Ok(family)
}

/// Whether `e_i` followed by `f` and `f` followed by `e_i` vanish for all `i`.
pub fn is_killed_by_generators(f: &TLMorphism) -> bool {
    let n = f.bottom();
    (1..n).all(|i| {
        let e = TLMorphism::e(n, i, f.tau().clone());
        e.compose_direct(f).is_zero() && f.compose_direct(&e).is_zero()
    })
}
