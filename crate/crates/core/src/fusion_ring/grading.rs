use super::{FusionRing, fp_dims};
use crate::error::{Error, Result};

/// Universal grading group: labels are partitioned into classes, and every
/// product of labels from classes `a` and `b` lies in class `table[a][b]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingGroup {
    /// Classes ordered by their least label; each class is sorted.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub table: Vec<Vec<usize>>,
}

impl GradingGroup {
    pub fn order(&self) -> usize {
        self.classes.len()
    }

    /// Class 0 contains the unit label.
    pub fn identity(&self) -> usize {
        0
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == 0).expect("grading group has inverses")
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Multiplicative order of each element.
    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order())
            .map(|a| {
                let (mut x, mut k) = (a, 1);
                while x != 0 {
                    x = self.table[x][a];
                    k += 1;
                }
                k
            })
            .collect()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut y = x;
        while self.0[y] != root {
            let next = self.0[y];
            self.0[y] = root;
            y = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // The smaller label stays the root, so roots are class minima.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Every pair `(m, n)` forces all constituents of `n x m` into one class;
/// the quotient by the generated equivalence is the universal grading.
pub fn grading_group(ring: &FusionRing) -> Result<GradingGroup> {
    let r = ring.rank();
    let mut uf = UnionFind((0..r).collect());
    for m in 0..r {
        for n in 0..r {
            let mut it = ring.products(n, m);
            if let Some(first) = it.next() {
                for k in it {
                    uf.union(first, k);
                }
            }
        }
    }
    let roots: Vec<usize> = (0..r).map(|i| uf.find(i)).collect();
    let mut root_ids: Vec<usize> = roots.clone();
    root_ids.sort_unstable();
    root_ids.dedup();
    let class_of: Vec<usize> = roots.iter().map(|root| root_ids.binary_search(root).unwrap()).collect();
    let mut classes = vec![Vec::new(); root_ids.len()];
    for (i, &c) in class_of.iter().enumerate() {
        classes[c].push(i);
    }

    let g = classes.len();
    let mut table = vec![vec![usize::MAX; g]; g];
    for i in 0..r {
        for j in 0..r {
            for k in ring.products(i, j) {
                let slot = &mut table[class_of[i]][class_of[j]];
                if *slot == usize::MAX {
                    *slot = class_of[k];
                } else if *slot != class_of[k] {
                    return Err(Error::IllFormed(format!("grading not well defined at ({i},{j},{k})")));
                }
            }
        }
    }
    if table.iter().flatten().any(|&c| c == usize::MAX) {
        return Err(Error::IllFormed("empty product between grading classes".into()));
    }
    let group = GradingGroup { classes, class_of, table };
    check_group(&group)?;
    Ok(group)
}

fn check_group(g: &GradingGroup) -> Result<()> {
    let n = g.order();
    let t = &g.table;
    for a in 0..n {
        if t[0][a] != a || t[a][0] != a {
            return Err(Error::IllFormed(format!("grading class {a} breaks the identity law")));
        }
        if !(0..n).any(|b| t[a][b] == 0 && t[b][a] == 0) {
            return Err(Error::IllFormed(format!("grading class {a} has no inverse")));
        }
        for b in 0..n {
            for c in 0..n {
                if t[t[a][b]][c] != t[a][t[b][c]] {
                    return Err(Error::IllFormed(format!("grading not associative at ({a},{b},{c})")));
                }
            }
        }
    }
    Ok(())
}

/// The subring generated by all constituents of `i x i*`, with the label
/// embedding into the parent ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointSubring {
    pub ring: FusionRing,
    pub embedding: Vec<usize>,
}

pub fn adjoint_subring(ring: &FusionRing) -> Result<AdjointSubring> {
    let labels = adjoint_labels(ring);
    let grading = grading_group(ring)?;
    if labels != grading.classes[0] {
        return Err(Error::IllFormed(format!("adjoint labels {labels:?} differ from the trivial grading class {:?}", grading.classes[0])));
    }
    Ok(AdjointSubring { ring: ring.restrict(&labels)?, embedding: labels })
}

fn adjoint_labels(ring: &FusionRing) -> Vec<usize> {
    closure(ring, (0..ring.rank()).flat_map(|i| ring.products(i, ring.dual(i))).chain([0]).collect())
}

/// Smallest set containing `seed` that is closed under products and duals.
fn closure(ring: &FusionRing, seed: Vec<usize>) -> Vec<usize> {
    let r = ring.rank();
    let mut member = vec![false; r];
    for s in seed {
        member[s] = true;
    }
    loop {
        let mut changed = false;
        for a in 0..r {
            if !member[a] {
                continue;
            }
            let d = ring.dual(a);
            if !member[d] {
                member[d] = true;
                changed = true;
            }
            for b in 0..r {
                if !member[b] {
                    continue;
                }
                for k in ring.products(a, b) {
                    if !member[k] {
                        member[k] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return (0..r).filter(|&i| member[i]).collect();
        }
    }
}

/// Outcome of iterating the adjoint subring construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nilpotency {
    pub nilpotent: bool,
    /// Ranks of `R, R_ad, R_ad_ad, ...` until the sequence stabilises.
    pub chain: Vec<usize>,
}

impl Nilpotency {
    /// Number of adjoint steps taken until the rank stopped dropping.
    pub fn length(&self) -> usize {
        self.chain.len() - 1
    }
}

pub fn is_nilpotent(ring: &FusionRing) -> Result<Nilpotency> {
    let mut current = ring.clone();
    let mut chain = vec![current.rank()];
    loop {
        if current.rank() == 1 {
            return Ok(Nilpotency { nilpotent: true, chain });
        }
        let next = adjoint_subring(&current)?.ring;
        if next.rank() == current.rank() {
            return Ok(Nilpotency { nilpotent: false, chain });
        }
        chain.push(next.rank());
        current = next;
    }
}

/// Whether every label is invertible. Checked both combinatorially and via
/// Frobenius–Perron dimensions; disagreement signals an invalid ring.
pub fn is_pointed(ring: &FusionRing) -> Result<bool> {
    let r = ring.rank();
    let combinatorial = (0..r).all(|i| {
        let mut it = ring.products(i, ring.dual(i));
        it.next() == Some(0) && it.next().is_none() && ring.n(i, ring.dual(i), 0) == 1
    });
    let dims = fp_dims(ring)?;
    let numeric = dims.iter().all(|d| (d - 1.0).abs() < 1e-9);
    if combinatorial != numeric {
        return Err(Error::IllFormed("invertibility and unit dimensions disagree".into()));
    }
    Ok(combinatorial)
}
