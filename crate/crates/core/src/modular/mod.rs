//! Candidate modular data `(S, T, C, dims)` and the identities a modular
//! category must satisfy.

use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact_arith::linalg::{Matrix, determinant, identity, mat_mul};
use crate::exact_arith::{CyclotomicScalar, lcm, real_cmp};
use crate::fusion_ring::FusionRing;

/// Unnormalised modular data: `S_{0j} = dims[j]`, `T` diagonal, `C` the
/// charge-conjugation permutation. All scalars share one order.
#[derive(Clone, Debug, PartialEq)]
pub struct ModularData {
    order: usize,
    s: Matrix,
    t: Vec<CyclotomicScalar>,
    c: Vec<usize>,
    dims: Vec<CyclotomicScalar>,
}

impl ModularData {
    /// Checks shapes and that `C` is an involution fixing 0; the algebraic
    /// identities are left to [`verify_modular`].
    pub fn new(s: Matrix, t: Vec<CyclotomicScalar>, c: Vec<usize>, dims: Vec<CyclotomicScalar>) -> Result<Self> {
        let r = s.len();
        if r == 0 {
            return Err(Error::Format("modular data of rank 0".into()));
        }
        if s.iter().any(|row| row.len() != r) || t.len() != r || c.len() != r || dims.len() != r {
            return Err(Error::Format(format!("inconsistent sizes for rank {r}")));
        }
        if c[0] != 0 || c.iter().any(|&x| x >= r) || (0..r).any(|i| c[c[i]] != i) {
            return Err(Error::Format("C must be an involution fixing 0".into()));
        }
        let order = s.iter().flatten().chain(&t).chain(&dims).fold(1, |acc, x| lcm(acc, x.order()));
        let lift = |x: &CyclotomicScalar| x.lift(order);
        Ok(ModularData {
            order,
            s: s.iter().map(|row| row.iter().map(lift).collect()).collect(),
            t: t.iter().map(lift).collect(),
            c,
            dims: dims.iter().map(lift).collect(),
        })
    }

    /// Lifts every entry to a multiple of the current common order.
    pub fn with_order(&self, order: usize) -> Result<Self> {
        if !order.is_multiple_of(self.order) {
            return Err(Error::Format(format!("order {order} is not a multiple of {}", self.order)));
        }
        let lift = |x: &CyclotomicScalar| x.lift(order);
        Ok(ModularData {
            order,
            s: self.s.iter().map(|row| row.iter().map(lift).collect()).collect(),
            t: self.t.iter().map(lift).collect(),
            c: self.c.clone(),
            dims: self.dims.iter().map(lift).collect(),
        })
    }

    pub fn rank(&self) -> usize {
        self.s.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn s(&self) -> &Matrix {
        &self.s
    }

    pub fn t(&self) -> &[CyclotomicScalar] {
        &self.t
    }

    pub fn c(&self) -> &[usize] {
        &self.c
    }

    pub fn dims(&self) -> &[CyclotomicScalar] {
        &self.dims
    }

    /// `sum_i d_i conj(d_i)`.
    pub fn global_dimension(&self) -> CyclotomicScalar {
        self.dims.iter().fold(CyclotomicScalar::zero(self.order), |acc, d| &acc + &(d * &d.conj()))
    }

    pub fn is_s_symmetric(&self) -> bool {
        let r = self.rank();
        (0..r).all(|i| (i + 1..r).all(|j| self.s[i][j] == self.s[j][i]))
    }

    fn c_matrix(&self) -> Matrix {
        let r = self.rank();
        (0..r).map(|i| (0..r).map(|j| CyclotomicScalar::from_int(self.order, i64::from(self.c[i] == j))).collect()).collect()
    }

    /// `S / sqrt(global dimension)` in floating point.
    pub fn unitarized_s(&self) -> Vec<Vec<num_complex::Complex64>> {
        let norm = self.global_dimension().to_complex().re.sqrt();
        self.s.iter().map(|row| row.iter().map(|x| x.to_complex() / norm).collect()).collect()
    }
}

/// Entrywise solution of `M = λ C`, if one exists.
fn proportional_to_c(m: &Matrix, c: &[usize], order: usize) -> std::result::Result<CyclotomicScalar, String> {
    let mut lambda: Option<CyclotomicScalar> = None;
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if c[i] == j {
                match &lambda {
                    None => lambda = Some(x.clone()),
                    Some(l) if l != x => return Err(format!("entry ({i},{j}) differs from ({},{})", 0, c[0])),
                    _ => {}
                }
            } else if !x.is_zero() {
                return Err(format!("entry ({i},{j}) is nonzero off the C pattern"));
            }
        }
    }
    Ok(lambda.unwrap_or_else(|| CyclotomicScalar::zero(order)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModularReport {
    pub determinant: CyclotomicScalar,
    pub invertible: bool,
    pub alpha: Option<CyclotomicScalar>,
    pub beta: Option<CyclotomicScalar>,
    /// Informational; S-symmetry is not required.
    pub s_symmetric: bool,
    pub violations: Vec<String>,
}

impl ModularReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_modular(d: &ModularData) -> ModularReport {
    let n = d.order;
    let mut violations = Vec::new();
    if !d.dims[0].is_one() {
        violations.push("dims[0] is not 1".to_string());
    }
    if let Some(j) = (0..d.rank()).find(|&j| d.s[0][j] != d.dims[j]) {
        violations.push(format!("S[0][{j}] differs from dims[{j}]"));
    }
    let det = determinant(&d.s);
    let invertible = !det.is_zero();
    if !invertible {
        violations.push("S is singular".to_string());
    }
    let s2 = mat_mul(&d.s, &d.s);
    let alpha = match proportional_to_c(&s2, &d.c, n) {
        Ok(a) if !a.is_zero() => Some(a),
        Ok(_) => {
            violations.push("S^2 = 0 * C".to_string());
            None
        }
        Err(e) => {
            violations.push(format!("S^2 is not a multiple of C: {e}"));
            None
        }
    };
    let st: Matrix = d.s.iter().map(|row| row.iter().zip(&d.t).map(|(x, t)| x * t).collect()).collect();
    let st3 = mat_mul(&mat_mul(&st, &st), &st);
    let beta = match proportional_to_c(&st3, &d.c, n) {
        Ok(b) if !b.is_zero() => Some(b),
        Ok(_) => {
            violations.push("(ST)^3 = 0 * C".to_string());
            None
        }
        Err(e) => {
            violations.push(format!("(ST)^3 is not a multiple of C: {e}"));
            None
        }
    };
    if let Some(a) = &alpha {
        let s4 = mat_mul(&s2, &s2);
        let a2 = a * a;
        let expected: Matrix = identity(d.rank(), n).iter().map(|row| row.iter().map(|x| x * &a2).collect()).collect();
        if s4 != expected {
            violations.push("S^4 differs from alpha^2 I".to_string());
        }
    }
    let c = d.c_matrix();
    if mat_mul(&c, &c) != identity(d.rank(), n) {
        violations.push("C is not an involution".to_string());
    }
    ModularReport { determinant: det, invertible, alpha, beta, s_symmetric: d.is_s_symmetric(), violations }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GaussReport {
    /// `sum_i d_i^2`.
    pub global_dimension: CyclotomicScalar,
    /// `sum_i d_i^2 T_i`.
    pub gauss_sum: CyclotomicScalar,
    pub holds: bool,
    /// For pointed data, whether `|sum_i T_i|^2 = rank`.
    pub pointed_identity: Option<bool>,
}

impl GaussReport {
    pub fn passed(&self) -> bool {
        self.holds && self.pointed_identity != Some(false)
    }
}

pub fn gauss_sum_check(d: &ModularData) -> GaussReport {
    let n = d.order;
    let zero = CyclotomicScalar::zero(n);
    let squares: Vec<CyclotomicScalar> = d.dims.iter().map(|x| x * x).collect();
    let global = squares.iter().fold(zero.clone(), |acc, x| &acc + x);
    let gauss = squares.iter().zip(&d.t).fold(zero.clone(), |acc, (x, t)| &acc + &(x * t));
    let holds = &gauss * &gauss.conj() == global;
    let pointed = d.dims.iter().all(CyclotomicScalar::is_one).then(|| {
        let sum = d.t.iter().fold(zero.clone(), |acc, t| &acc + t);
        &sum * &sum.conj() == CyclotomicScalar::from_int(n, d.rank() as i64)
    });
    GaussReport { global_dimension: global, gauss_sum: gauss, holds, pointed_identity: pointed }
}

/// Least `N` with `T_i^N = 1` for every `i`.
pub fn t_order(d: &ModularData) -> Result<usize> {
    d.t.iter().enumerate().try_fold(1, |acc, (i, t)| {
        let k = t.root_order().ok_or_else(|| Error::NotRootOfUnity(format!("T[{i}]")))?;
        Ok(lcm(acc, k))
    })
}

/// Fusion rules from `N_ij^k = sum_m S_im S_jm conj(S_km) / (S_0m D^2)`
/// where `D^2 = sum_m S_0m conj(S_0m)` accounts for the unnormalised `S`.
pub fn verlinde_fusion(d: &ModularData) -> Result<FusionRing> {
    let r = d.rank();
    let n = d.order;
    let global = d.s[0].iter().fold(CyclotomicScalar::zero(n), |acc, x| &acc + &(x * &x.conj()));
    let weights: Vec<CyclotomicScalar> = d.s[0]
        .iter()
        .map(|x| (x * &global).inv().ok_or_else(|| Error::IllFormed("S has a zero in its first row".into())))
        .collect::<Result<_>>()?;
    let conj_s: Matrix = d.s.iter().map(|row| row.iter().map(CyclotomicScalar::conj).collect()).collect();
    let pairs: Vec<(usize, usize)> = (0..r).flat_map(|i| (0..r).map(move |j| (i, j))).collect();
    let entries: Vec<Vec<(usize, usize, usize, u32)>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let a: Vec<CyclotomicScalar> = (0..r).map(|m| &(&d.s[i][m] * &d.s[j][m]) * &weights[m]).collect();
            let mut out = Vec::new();
            for k in 0..r {
                let v = (0..r).fold(CyclotomicScalar::zero(n), |acc, m| &acc + &(&a[m] * &conj_s[k][m]));
                let q = v.to_rational().filter(|q| q.is_integer() && !q.is_negative()).ok_or(Error::NonIntegralFusion(i, j, k))?;
                let m = q.to_integer().to_u32().ok_or(Error::NonIntegralFusion(i, j, k))?;
                if m != 0 {
                    out.push((i, j, k, m));
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    FusionRing::new(r, d.c.clone(), entries.into_iter().flatten())
}

/// Indices `i` with `S_ij = d_i d_j` for every `j`.
pub fn transparent_objects(d: &ModularData) -> Vec<usize> {
    (0..d.rank()).filter(|&i| (0..d.rank()).all(|j| d.s[i][j] == &d.dims[i] * &d.dims[j])).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricBound {
    /// A fusion- and dual-closed set of labels with pairwise trivial
    /// monodromy and the largest total dimension.
    pub subset: Vec<usize>,
    /// `D_S = sum_{i in subset} d_i^2`.
    pub dimension: CyclotomicScalar,
    pub global_dimension: CyclotomicScalar,
    /// `D_S^2 <= sum_i d_i^2`.
    pub holds: bool,
    pub saturated: bool,
}

pub fn symmetric_bound_report(d: &ModularData) -> Result<SymmetricBound> {
    let ring = verlinde_fusion(d)?;
    let r = d.rank();
    let n = d.order;
    let trivial = |i: usize, j: usize| d.s[i][j] == &d.dims[i] * &d.dims[j];
    let squares: Vec<CyclotomicScalar> = d.dims.iter().map(|x| x * x).collect();
    let dimension_of = |set: &[bool]| (0..r).filter(|&i| set[i]).fold(CyclotomicScalar::zero(n), |acc, i| &acc + &squares[i]);

    // Closes `set` under fusion and duals; `None` if the closure picks up a
    // label with nontrivial monodromy against the rest.
    let close = |mut set: Vec<bool>| -> Option<Vec<bool>> {
        loop {
            let members: Vec<usize> = (0..r).filter(|&i| set[i]).collect();
            let mut added = false;
            for &a in &members {
                for k in std::iter::once(ring.dual(a)).chain(members.iter().flat_map(|&b| ring.products(a, b))) {
                    if !set[k] {
                        if !trivial(k, k) || members.iter().any(|&m| !trivial(k, m)) {
                            return None;
                        }
                        set[k] = true;
                        added = true;
                    }
                }
            }
            if !added {
                return Some(set);
            }
        }
    };

    let mut start = vec![false; r];
    start[0] = true;
    let start = close(start).ok_or_else(|| Error::IllFormed("unit has nontrivial self-monodromy".into()))?;
    let mut best = start.clone();
    let mut best_dim = dimension_of(&best);
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![start];
    while let Some(set) = stack.pop() {
        if !seen.insert(set.clone()) {
            continue;
        }
        let dim = dimension_of(&set);
        if real_cmp(&dim, &best_dim) == std::cmp::Ordering::Greater {
            best = set.clone();
            best_dim = dim;
        }
        for k in 0..r {
            if set[k] || !trivial(k, k) || !(0..r).all(|m| !set[m] || trivial(k, m)) {
                continue;
            }
            let mut next = set.clone();
            next[k] = true;
            if let Some(closed) = close(next) {
                if !seen.contains(&closed) {
                    stack.push(closed);
                }
            }
        }
    }
    let global = squares.iter().fold(CyclotomicScalar::zero(n), |acc, x| &acc + x);
    let ds2 = &best_dim * &best_dim;
    let cmp = real_cmp(&ds2, &global);
    Ok(SymmetricBound {
        subset: (0..r).filter(|&i| best[i]).collect(),
        dimension: best_dim,
        global_dimension: global,
        holds: cmp != std::cmp::Ordering::Greater,
        saturated: cmp == std::cmp::Ordering::Equal,
    })
}

/// The rank-one datum of the trivial category.
pub fn trivial_data() -> ModularData {
    let one = CyclotomicScalar::one(1);
    ModularData::new(vec![vec![one.clone()]], vec![one.clone()], vec![0], vec![one]).unwrap()
}
