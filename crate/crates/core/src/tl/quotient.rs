use std::collections::HashMap;

use rayon::prelude::*;

use super::diagram::{TLDiagram, enumerate_diagrams};
use super::jones_wenzl::jones_wenzl_family;
use super::morphism::TLMorphism;
use crate::error::{Error, Result};
use crate::exact_arith::CyclotomicScalar;
use crate::exact_arith::linalg::{Matrix, rank};
use crate::fusion_ring::FusionRing;

/// `ζ_{2ℓ} + ζ_{2ℓ}^{-1} = 2cos(π/ℓ)`.
pub fn level_tau(level: usize) -> CyclotomicScalar {
    CyclotomicScalar::two_cos(2 * level, 1)
}

/// Rank of the trace pairing `(a, b) -> Tr(a ; flip(b))` on the diagram
/// basis of Hom(n, m) at the level-`level` loop value.
pub fn negligible_gram_rank(n: usize, m: usize, level: usize) -> Result<usize> {
    let tau = level_tau(level);
    let basis = enumerate_diagrams(n, m)?;
    let powers: Vec<CyclotomicScalar> = (0..=n.max(m) + 1).map(|k| tau.pow(k as i64).expect("nonnegative power")).collect();
    let gram: Matrix = basis
        .par_iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| {
                    let (d, loops) = a.compose(&b.flip());
                    powers[loops + d.closure_loops()].clone()
                })
                .collect()
        })
        .collect();
    Ok(rank(&gram))
}

/// The `(i+j, k)` diagram joining the last `(i+j-k)/2` strands of the left
/// block to the first ones of the right block; `None` when no such planar
/// vertex exists.
pub fn trivalent_vertex(i: usize, j: usize, k: usize) -> Option<TLDiagram> {
    if (i + j + k) % 2 == 1 || k > i + j || i > j + k || j > i + k {
        return None;
    }
    let a = (i + j - k) / 2;
    let n = i + j;
    let mut pairing = vec![0; n + k];
    for t in 0..a {
        pairing[i - 1 - t] = i + t;
        pairing[i + t] = i - 1 - t;
    }
    for p in (0..i - a).chain(i + a..n) {
        let top = if p < i { p } else { p - 2 * a };
        pairing[p] = n + top;
        pairing[n + top] = p;
    }
    Some(TLDiagram::new(n, k, &pairing).expect("vertex diagram is planar"))
}

/// Evaluates `Tr((f_i ⊗ f_j) ∘ X)` for single diagrams `X` in End(i+j).
///
/// Terms are dropped when a generator adjacent to a projector factors out:
/// a cap or cup with both ends in one block, or a leftover non-identity
/// diagram traced against `f_i`.
pub(crate) struct BlockTrace<'a> {
    i: usize,
    j: usize,
    fj: &'a TLMorphism,
    trace_fi: CyclotomicScalar,
    powers: Vec<CyclotomicScalar>,
    cache: HashMap<TLDiagram, CyclotomicScalar>,
}

impl<'a> BlockTrace<'a> {
    pub(crate) fn new(i: usize, j: usize, fi: &TLMorphism, fj: &'a TLMorphism) -> Result<Self> {
        let tau = fi.tau().clone();
        if tau.is_zero() {
            return Err(Error::QuantumIntegerZero(2));
        }
        let powers = (0..=i + j).map(|k| tau.pow(k as i64).expect("nonnegative power")).collect();
        Ok(BlockTrace { i, j, fj, trace_fi: fi.closure_trace()?, powers, cache: HashMap::new() })
    }

    fn killed(&self, x: &TLDiagram) -> bool {
        let (i, n) = (self.i, self.i + self.j);
        (1..n).filter(|&m| m != i).any(|m| x.has_bottom_cap(m) || x.has_top_cup(m))
    }

    pub(crate) fn eval(&mut self, x: &TLDiagram) -> CyclotomicScalar {
        if self.killed(x) {
            return CyclotomicScalar::zero(self.trace_fi.order());
        }
        if let Some(v) = self.cache.get(x) {
            return v.clone();
        }
        let lift = TLDiagram::identity(self.i);
        let mut acc = CyclotomicScalar::zero(self.trace_fi.order());
        for (e, c) in self.fj.terms() {
            let (stacked, l1) = x.compose(&lift.tensor(e));
            let (rest, l2) = stacked.partial_trace(self.j);
            if rest.is_identity() {
                acc = &acc + &(c * &self.powers[l1 + l2]);
            }
        }
        let v = &acc * &self.trace_fi;
        self.cache.insert(x.clone(), v.clone());
        v
    }
}

/// Gram entry of the trivalent vertex between `f_i ⊗ f_j` and `f_k`:
/// `Tr(f_k ∘ V ∘ (f_i ⊗ f_j) ∘ V†)`. Every other diagram in Hom(i+j, k) is
/// killed by one of the three projectors, so this single entry decides the
/// rank of the candidate space.
pub fn theta(i: usize, j: usize, k: usize, family: &[TLMorphism]) -> Result<Option<CyclotomicScalar>> {
    let Some(v) = trivalent_vertex(i, j, k) else { return Ok(None) };
    let v_dag = v.flip();
    let mut block = BlockTrace::new(i, j, &family[i], &family[j])?;
    let mut acc = CyclotomicScalar::zero(family[0].tau().order());
    for (d, c) in family[k].terms() {
        let (x, l1) = v.compose(d);
        let (x, l2) = x.compose(&v_dag);
        debug_assert_eq!(l1 + l2, 0);
        let t = block.eval(&x);
        if !t.is_zero() {
            acc = &acc + &(c * &t);
        }
    }
    Ok(Some(acc))
}

/// Semisimplified TL category at level `ℓ`.
#[derive(Clone, Debug)]
pub struct TLFusionRing {
    pub level: usize,
    pub ring: FusionRing,
    /// `closure_trace(f_i) = [i+1]`.
    pub dims: Vec<CyclotomicScalar>,
}

pub fn tl_fusion_ring(level: usize) -> Result<TLFusionRing> {
    if level < 3 {
        return Err(Error::QuantumIntegerZero(level.max(1)));
    }
    let tau = level_tau(level);
    let r = level - 1;
    let family = jones_wenzl_family(r - 1, &tau)?;
    let dims = family.iter().map(TLMorphism::closure_trace).collect::<Result<Vec<_>>>()?;
    let triples: Vec<(usize, usize, usize)> = (0..r).flat_map(|i| (0..r).flat_map(move |j| (0..r).map(move |k| (i, j, k)))).collect();
    let entries = triples
        .par_iter()
        .map(|&(i, j, k)| Ok(theta(i, j, k, &family)?.filter(|t| !t.is_zero()).map(|_| (i, j, k, 1))))
        .collect::<Result<Vec<_>>>()?;
    let ring = FusionRing::new(r, (0..r).collect(), entries.into_iter().flatten())?;
    Ok(TLFusionRing { level, ring, dims })
}
