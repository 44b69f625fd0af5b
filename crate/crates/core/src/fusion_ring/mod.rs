//! Fusion hypergroups `(I, N_{ij}^k, 0, i -> i*)` and the invariants derived
//! from them.

mod grading;
mod perron;

pub use grading::{AdjointSubring, GradingGroup, Nilpotency, adjoint_subring, grading_group, is_nilpotent, is_pointed};
pub use perron::{fp_dim_total, fp_dims};

use std::fmt;

use crate::error::{Error, Result};

/// Finite fusion hypergroup on the labels `0..rank`, with `0` the unit.
///
/// Multiplicities are stored densely; `entries()` yields the sparse view
/// used by the file format.
#[derive(Clone, PartialEq, Eq)]
pub struct FusionRing {
    rank: usize,
    dual: Vec<usize>,
    mult: Vec<u32>,
}

impl FusionRing {
    /// Builds a ring from sparse `(i, j, k, N_ij^k)` entries. Only the shape
    /// is checked here; the axioms are checked by [`FusionRing::validate`].
    pub fn new(rank: usize, dual: Vec<usize>, entries: impl IntoIterator<Item = (usize, usize, usize, u32)>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Format("fusion ring rank must be positive".into()));
        }
        if dual.len() != rank {
            return Err(Error::Format(format!("dual has length {}, expected {rank}", dual.len())));
        }
        if let Some(&d) = dual.iter().find(|&&d| d >= rank) {
            return Err(Error::Format(format!("dual index {d} out of range")));
        }
        let mut mult = vec![0; rank * rank * rank];
        let mut seen = vec![false; rank * rank * rank];
        for (i, j, k, m) in entries {
            if i >= rank || j >= rank || k >= rank {
                return Err(Error::Format(format!("fusion entry ({i},{j},{k}) out of range for rank {rank}")));
            }
            let idx = (i * rank + j) * rank + k;
            if seen[idx] {
                return Err(Error::Format(format!("duplicate fusion entry ({i},{j},{k})")));
            }
            seen[idx] = true;
            mult[idx] = m;
        }
        Ok(FusionRing { rank, dual, mult })
    }

    /// Builds a ring from a full multiplication function.
    pub fn from_fn(rank: usize, dual: Vec<usize>, f: impl Fn(usize, usize, usize) -> u32) -> Result<Self> {
        let entries: Vec<_> = (0..rank)
            .flat_map(|i| (0..rank).flat_map(move |j| (0..rank).map(move |k| (i, j, k))))
            .filter_map(|(i, j, k)| {
                let m = f(i, j, k);
                (m != 0).then_some((i, j, k, m))
            })
            .collect();
        Self::new(rank, dual, entries)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    /// `N_{i,j}^k`.
    #[inline]
    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        self.mult[(i * self.rank + j) * self.rank + k]
    }

    /// Nonzero entries, sorted lexicographically by `(i, j, k)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, u32)> + '_ {
        let r = self.rank;
        self.mult.iter().enumerate().filter(|(_, &m)| m != 0).map(move |(idx, &m)| (idx / (r * r), (idx / r) % r, idx % r, m))
    }

    /// The labels `k` with `N_{i,j}^k > 0`.
    pub fn products(&self, i: usize, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(move |&k| self.n(i, j, k) != 0)
    }

    /// The fusion matrix `(N_i)_{jk} = N_{i,j}^k`.
    pub fn fusion_matrix(&self, i: usize) -> Vec<Vec<u32>> {
        (0..self.rank).map(|j| (0..self.rank).map(|k| self.n(i, j, k)).collect()).collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.rank).all(|i| (0..self.rank).all(|j| (0..self.rank).all(|k| self.n(i, j, k) == self.n(j, i, k))))
    }

    /// Restricts to the labels in `subset` (which must contain 0), relabelled
    /// in increasing order.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
        let mut labels = subset.to_vec();
        labels.sort_unstable();
        labels.dedup();
        let mut new_index = vec![usize::MAX; self.rank];
        for (n, &old) in labels.iter().enumerate() {
            new_index[old] = n;
        }
        let dual = labels
            .iter()
            .map(|&i| match new_index[self.dual[i]] {
                usize::MAX => Err(Error::IllFormed(format!("subset not closed under duals at {i}"))),
                d => Ok(d),
            })
            .collect::<Result<Vec<_>>>()?;
        let entries = self
            .entries()
            .filter(|&(i, j, k, _)| new_index[i] != usize::MAX && new_index[j] != usize::MAX && new_index[k] != usize::MAX)
            .map(|(i, j, k, m)| (new_index[i], new_index[j], new_index[k], m));
        Self::new(labels.len(), dual, entries)
    }

    /// Replaces a single multiplicity, keeping everything else.
    pub fn with_entry(&self, i: usize, j: usize, k: usize, m: u32) -> Self {
        let mut out = self.clone();
        out.mult[(i * self.rank + j) * self.rank + k] = m;
        out
    }

    /// Checks the hypergroup axioms. Violations are returned as data.
    pub fn validate(&self) -> ValidationReport {
        let r = self.rank;
        let mut report = ValidationReport::default();
        for i in 0..r {
            for k in 0..r {
                let delta = u32::from(i == k);
                if self.n(i, 0, k) != delta {
                    report.push(Axiom::Unit, vec![i, 0, k]);
                }
                if self.n(0, i, k) != delta {
                    report.push(Axiom::Unit, vec![0, i, k]);
                }
            }
        }
        if self.dual[0] != 0 {
            report.push(Axiom::DualInvolution, vec![0]);
        }
        for i in 0..r {
            if self.dual[self.dual[i]] != i {
                report.push(Axiom::DualInvolution, vec![i]);
            }
        }
        for i in 0..r {
            for j in 0..r {
                if self.n(i, j, 0) != u32::from(j == self.dual[i]) {
                    report.push(Axiom::Duality, vec![i, j]);
                }
            }
        }
        // (ij)k = i(jk): sum_n N_ij^n N_nk^l = sum_m N_im^l N_jk^m.
        for i in 0..r {
            for j in 0..r {
                let ij: Vec<(usize, u64)> = self.products(i, j).map(|n| (n, self.n(i, j, n) as u64)).collect();
                for k in 0..r {
                    let jk: Vec<(usize, u64)> = self.products(j, k).map(|m| (m, self.n(j, k, m) as u64)).collect();
                    for l in 0..r {
                        let lhs: u64 = ij.iter().map(|&(n, a)| a * self.n(n, k, l) as u64).sum();
                        let rhs: u64 = jk.iter().map(|&(m, b)| b * self.n(i, m, l) as u64).sum();
                        if lhs != rhs {
                            report.push(Axiom::Associativity, vec![i, j, k, l]);
                        }
                    }
                }
            }
        }
        if let Some(w) = self.indecomposability_witness() {
            report.push(Axiom::Indecomposable, vec![w]);
        }
        report
    }

    /// A label not strongly connected to the unit in the fusion graph, i.e.
    /// the support digraph of `sum_i N_i`.
    fn indecomposability_witness(&self) -> Option<usize> {
        let r = self.rank;
        let mut adj = vec![vec![false; r]; r];
        for (_, j, k, _) in self.entries() {
            adj[j][k] = true;
        }
        let reach = |forward: bool| {
            let mut seen = vec![false; r];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(v) = stack.pop() {
                for w in 0..r {
                    let edge = if forward { adj[v][w] } else { adj[w][v] };
                    if edge && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            seen
        };
        let (fwd, bwd) = (reach(true), reach(false));
        (0..r).find(|&v| !fwd[v] || !bwd[v])
    }
}

impl fmt::Debug for FusionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FusionRing")
            .field("rank", &self.rank)
            .field("dual", &self.dual)
            .field("entries", &self.entries().collect::<Vec<_>>())
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Unit,
    Duality,
    DualInvolution,
    Associativity,
    Indecomposable,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Unit => "unit",
            Axiom::Duality => "duality",
            Axiom::DualInvolution => "dual_involution",
            Axiom::Associativity => "associativity",
            Axiom::Indecomposable => "indecomposable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

/// Axiom violations of a fusion ring; empty iff the ring is valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Violations found beyond the stored ones.
    pub truncated: usize,
}

const MAX_STORED_VIOLATIONS: usize = 256;

impl ValidationReport {
    fn push(&mut self, axiom: Axiom, witness: Vec<usize>) {
        if self.violations.len() < MAX_STORED_VIOLATIONS {
            self.violations.push(Violation { axiom, witness });
        } else {
            self.truncated += 1;
        }
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn first(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

/// Small rings used throughout the tests and the CLI.
pub mod catalog {
    use super::FusionRing;

    pub fn trivial() -> FusionRing {
        FusionRing::from_fn(1, vec![0], |_, _, _| 1).unwrap()
    }

    /// Group ring of `Z/n_1 x ... x Z/n_r`, elements in mixed radix with the
    /// first factor most significant.
    pub fn abelian_group_ring(orders: &[usize]) -> FusionRing {
        let size: usize = orders.iter().product();
        let digits = |mut x: usize| {
            let mut d = vec![0; orders.len()];
            for (slot, &n) in d.iter_mut().zip(orders).rev() {
                *slot = x % n;
                x /= n;
            }
            d
        };
        let index = |d: &[usize]| d.iter().zip(orders).fold(0, |acc, (&x, &n)| acc * n + x);
        let add = |a: usize, b: usize| {
            let s: Vec<usize> = digits(a).iter().zip(digits(b)).zip(orders).map(|((x, y), n)| (x + y) % n).collect();
            index(&s)
        };
        let neg = |a: usize| {
            let s: Vec<usize> = digits(a).iter().zip(orders).map(|(x, n)| (n - x) % n).collect();
            index(&s)
        };
        FusionRing::from_fn(size, (0..size).map(neg).collect(), |i, j, k| u32::from(add(i, j) == k)).unwrap()
    }

    pub fn cyclic_group_ring(n: usize) -> FusionRing {
        abelian_group_ring(&[n])
    }

    /// Labels `1, X` with `X x X = 1 + X`.
    pub fn fibonacci() -> FusionRing {
        FusionRing::new(2, vec![0, 1], [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 1)]).unwrap()
    }

    /// Labels `1, sigma, epsilon`.
    pub fn ising() -> FusionRing {
        su2_truncated(4)
    }

    /// The level-`l` truncation of the SU(2) fusion rules on `0..=l-2`:
    /// `i x j = |i-j| + ... + min(i+j, 2(l-2)-i-j)` in steps of two.
    pub fn su2_truncated(l: usize) -> FusionRing {
        let r = l - 1;
        let top = 2 * (l - 2);
        FusionRing::from_fn(r, (0..r).collect(), |i, j, k| {
            let lo = i.abs_diff(j);
            let hi = (i + j).min(top - i - j);
            u32::from(k >= lo && k <= hi && (k + lo) % 2 == 0)
        })
        .unwrap()
    }
}
