use std::collections::HashMap;

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact_arith::CyclotomicScalar;
use crate::modular::ModularData;
use crate::tl::{BlockTrace, TLDiagram, TLMorphism, jones_wenzl_family};

/// Letters of the braid taking a block of `i` strands over a block of `j`
/// strands to its right, then back over: the double braiding on `i ⊗ j`.
pub fn double_braid_word(i: usize, j: usize) -> Vec<usize> {
    let mut word = over(i, j);
    word.extend(over(j, i));
    word
}

/// The block of `i` strands on the left crosses over the `j` to its right,
/// rightmost strand first.
fn over(i: usize, j: usize) -> Vec<usize> {
    (1..=i).rev().flat_map(|r| (0..j).map(move |s| r + s)).collect()
}

struct Specialization {
    a: CyclotomicScalar,
    a_inv: CyclotomicScalar,
    family: Vec<TLMorphism>,
}

impl Specialization {
    fn new(level: usize, galois: i64) -> Result<Self> {
        let order = 4 * level;
        if (galois.rem_euclid(order as i64) as usize).gcd(&order) != 1 {
            return Err(Error::Format(format!("Galois exponent {galois} is not a unit mod {order}")));
        }
        let a = CyclotomicScalar::root_of_unity(order, galois);
        let a_inv = CyclotomicScalar::root_of_unity(order, -galois);
        let delta = -(&(&a * &a) + &(&a_inv * &a_inv));
        let family = jones_wenzl_family(level - 2, &delta)?;
        Ok(Specialization { a, a_inv, family })
    }

    /// `Tr((f_i ⊗ f_j) ∘ β)` for a positive braid word `β` on `i + j`
    /// strands.
    fn colored_trace(&self, i: usize, j: usize, word: &[usize]) -> Result<CyclotomicScalar> {
        let n = i + j;
        let tau = self.family[0].tau().clone();
        // A term with a cap inside one block at the bottom keeps it under
        // further stacking and is killed by the projectors.
        let killed = |d: &TLDiagram| (1..n).filter(|&m| m != i).any(|m| d.has_bottom_cap(m));
        let mut acc: HashMap<TLDiagram, CyclotomicScalar> = HashMap::new();
        acc.insert(TLDiagram::identity(n), CyclotomicScalar::one(tau.order()));
        for &k in word {
            let e = TLDiagram::e(n, k);
            let mut next: HashMap<TLDiagram, CyclotomicScalar> = HashMap::with_capacity(acc.len() * 2);
            let mut add = |d: TLDiagram, c: CyclotomicScalar| {
                let slot = next.entry(d).or_insert_with(|| CyclotomicScalar::zero(c.order()));
                *slot = &*slot + &c;
            };
            for (d, c) in &acc {
                add(d.clone(), c * &self.a);
                let (de, loops) = d.compose(&e);
                if killed(&de) {
                    continue;
                }
                let mut coeff = c * &self.a_inv;
                for _ in 0..loops {
                    coeff = &coeff * &tau;
                }
                add(de, coeff);
            }
            next.retain(|_, c| !c.is_zero());
            acc = next;
        }
        let mut block = BlockTrace::new(i, j, &self.family[i], &self.family[j])?;
        let mut total = CyclotomicScalar::zero(tau.order());
        let mut terms: Vec<_> = acc.into_iter().collect();
        terms.sort_by(|x, y| x.0.cmp(&y.0));
        for (d, c) in terms {
            let t = block.eval(&d);
            if !t.is_zero() {
                total = &total + &(&c * &t);
            }
        }
        Ok(total)
    }
}

/// The `f_i`-colored positive kink divided by the `f_i`-colored unknot, in
/// TL(δ) with `A = ζ_{4ℓ}^galois`.
pub fn kink_scalar(level: usize, galois: i64, i: usize) -> Result<CyclotomicScalar> {
    let sp = Specialization::new(level, galois)?;
    let kink = sp.colored_trace(i, i, &over(i, i))?;
    let unknot = sp.family[i].closure_trace()?;
    Ok(kink.div(&unknot).expect("colored unknot is nonzero below the truncation level"))
}

/// Colored Hopf-link data at level `ℓ` with `A = ζ_{4ℓ}`.
pub fn colored_smatrix(level: usize) -> Result<ModularData> {
    colored_smatrix_galois(level, 1)
}

/// Same as [`colored_smatrix`] with `A = ζ_{4ℓ}^galois`.
///
/// Loops evaluate to `δ = -A^2 - A^-2`, so the colored unknots are
/// `(-1)^i [i+1]`. The returned data is rescaled by the grading sign,
/// `S_ij -> (-1)^{i+j} S_ij` and `T_i -> (-1)^i T_i`, which makes the
/// dimensions the positive quantum integers of the fusion ring.
pub fn colored_smatrix_galois(level: usize, galois: i64) -> Result<ModularData> {
    if level < 3 {
        return Err(Error::QuantumIntegerZero(level.max(1)));
    }
    let sp = Specialization::new(level, galois)?;
    let r = level - 1;
    let sign = |k: usize| if k.is_multiple_of(2) { 1 } else { -1 };
    let pairs: Vec<(usize, usize)> = (0..r).flat_map(|i| (0..r).map(move |j| (i, j))).collect();
    let entries = pairs
        .par_iter()
        .map(|&(i, j)| Ok(sp.colored_trace(i, j, &double_braid_word(i, j))?.mul_int(sign(i + j))))
        .collect::<Result<Vec<_>>>()?;
    let s: Vec<Vec<CyclotomicScalar>> = entries.chunks(r).map(<[CyclotomicScalar]>::to_vec).collect();
    let t = (0..r)
        .into_par_iter()
        .map(|i| {
            let kink = sp.colored_trace(i, i, &over(i, i))?;
            let unknot = sp.family[i].closure_trace()?;
            Ok(kink.div(&unknot).expect("colored unknot is nonzero").mul_int(sign(i)))
        })
        .collect::<Result<Vec<_>>>()?;
    let dims = s[0].clone();
    ModularData::new(s, t, (0..r).collect(), dims)
}
