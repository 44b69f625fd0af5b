//! Independent oracles shared by the integration tests. Nothing here calls
//! into the TL or skein code paths it is used to check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tck::exact_arith::LaurentPoly;
use tck::fusion_ring::{Axiom, FusionRing, Violation};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut x = x;
    while parent[x] != r {
        let next = parent[x];
        parent[x] = r;
        x = next;
    }
    r
}

/// Kauffman bracket of the braid closure by summing over all `2^c`
/// smoothings. The strand at position `p` between crossings `h-1` and `h`
/// is node `h·n + p`; level `c` is glued back to level 0. Positive letters
/// take `A` on the vertical smoothing, negative letters on the horizontal.
pub fn state_sum_bracket(strands: usize, letters: &[i32]) -> LaurentPoly {
    let n = strands;
    let c = letters.len();
    let delta = LaurentPoly::from_ints(-2, &[-1, 0, 0, 0, -1]);
    let mut counts: std::collections::BTreeMap<(i64, usize), i64> = std::collections::BTreeMap::new();
    for state in 0u64..(1 << c) {
        let node = |h: usize, p: usize| (h % c.max(1)) * n + p;
        let mut parent: Vec<usize> = (0..n * c.max(1)).collect();
        let union = |a: usize, b: usize, parent: &mut Vec<usize>| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            parent[ra] = rb;
        };
        let mut exponent = 0i64;
        for (h, &l) in letters.iter().enumerate() {
            let i = l.unsigned_abs() as usize;
            let vertical = state >> h & 1 == 0;
            exponent += if vertical == (l > 0) { 1 } else { -1 };
            for p in 0..n {
                if p + 1 != i && p != i {
                    union(node(h, p), node(h + 1, p), &mut parent);
                }
            }
            if vertical {
                union(node(h, i - 1), node(h + 1, i - 1), &mut parent);
                union(node(h, i), node(h + 1, i), &mut parent);
            } else {
                union(node(h, i - 1), node(h, i), &mut parent);
                union(node(h + 1, i - 1), node(h + 1, i), &mut parent);
            }
        }
        let loops = (0..parent.len()).filter(|&x| find(&mut parent, x) == x).count();
        *counts.entry((exponent, loops)).or_default() += 1;
        if c == 0 {
            break;
        }
    }
    let mut total = LaurentPoly::zero();
    for ((e, loops), k) in counts {
        let term = &LaurentPoly::from_ints(e, &[k]) * &delta.pow(loops as u32 - 1);
        total = &total + &term;
    }
    total
}

pub fn random_word(rng: &mut impl Rng, strands: usize, len: usize) -> Vec<i32> {
    (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) { g } else { -g }
        })
        .collect()
}

/// Named small knots and links plus seeded random words, at most 10
/// crossings each.
pub fn regression_words() -> Vec<(usize, Vec<i32>)> {
    let mut words = vec![
        (1, vec![]),
        (2, vec![]),
        (2, vec![1]),
        (2, vec![-1]),
        (2, vec![1, 1]),
        (2, vec![1, -1]),
        (2, vec![1, 1, 1]),
        (2, vec![-1, -1, -1]),
        (2, vec![1, 1, 1, 1]),
        (2, vec![1, 1, 1, 1, 1]),
        (3, vec![1, -2, 1, -2]),
        (3, vec![1, 1, 2, -1, 2]),
        (3, vec![1, 2, 1, 2, 1, 2]),
        (4, vec![1, 2, 3]),
        (4, vec![1, -2, 3, -2, 1]),
        (3, vec![1, 1, 1, 2, -1, 2]),
        (3, vec![1, 1, 1, 1, 2, -1, 2]),
        (3, vec![1, -2, 1, -2, 1, -2]),
    ];
    let mut r = rng(0x5eed_b4a1d);
    while words.len() < 64 {
        let strands = r.gen_range(2..=5);
        let len = r.gen_range(0..=10);
        words.push((strands, random_word(&mut r, strands, len)));
    }
    words
}

/// `[n]_q = sin(nπ/ℓ) / sin(π/ℓ)`.
pub fn quantum_integer_f64(level: usize, n: usize) -> f64 {
    let t = std::f64::consts::PI / level as f64;
    (n as f64 * t).sin() / t.sin()
}

/// Axioms violated by `ring`, from the definitions entry by entry.
pub fn violated_axioms(ring: &FusionRing) -> BTreeSet<Axiom> {
    let r = ring.rank();
    let n = |i, j, k| ring.n(i, j, k) as u64;
    let mut out = BTreeSet::new();
    for i in 0..r {
        for k in 0..r {
            let d = u64::from(i == k);
            if n(i, 0, k) != d || n(0, i, k) != d {
                out.insert(Axiom::Unit);
            }
        }
        for j in 0..r {
            if n(i, j, 0) != u64::from(j == ring.dual(i)) {
                out.insert(Axiom::Duality);
            }
        }
        if ring.dual(ring.dual(i)) != i || ring.dual(0) != 0 {
            out.insert(Axiom::DualInvolution);
        }
    }
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                for l in 0..r {
                    let lhs: u64 = (0..r).map(|m| n(i, j, m) * n(m, k, l)).sum();
                    let rhs: u64 = (0..r).map(|m| n(i, m, l) * n(j, k, m)).sum();
                    if lhs != rhs {
                        out.insert(Axiom::Associativity);
                    }
                }
            }
        }
    }
    out
}

/// Whether a reported witness really exhibits the failure it names.
pub fn witness_holds(ring: &FusionRing, v: &Violation) -> bool {
    let r = ring.rank();
    let n = |i, j, k| ring.n(i, j, k) as u64;
    let w = &v.witness;
    match v.axiom {
        Axiom::Unit => {
            let (a, b, k) = (w[0], w[1], w[2]);
            let other = if a == 0 { b } else { a };
            (a == 0 || b == 0) && n(a, b, k) != u64::from(other == k)
        }
        Axiom::Duality => n(w[0], w[1], 0) != u64::from(w[1] == ring.dual(w[0])),
        Axiom::DualInvolution => ring.dual(ring.dual(w[0])) != w[0] || (w[0] == 0 && ring.dual(0) != 0),
        Axiom::Associativity => {
            let (i, j, k, l) = (w[0], w[1], w[2], w[3]);
            let lhs: u64 = (0..r).map(|m| n(i, j, m) * n(m, k, l)).sum();
            let rhs: u64 = (0..r).map(|m| n(i, m, l) * n(j, k, m)).sum();
            lhs != rhs
        }
        Axiom::Indecomposable => {
            // Not reachable from or to the unit along any N_i.
            let reach = |forward: bool| {
                let mut seen = vec![false; r];
                seen[0] = true;
                let mut stack = vec![0];
                while let Some(x) = stack.pop() {
                    for y in 0..r {
                        let edge = (0..r).any(|i| if forward { n(i, x, y) > 0 } else { n(i, y, x) > 0 });
                        if edge && !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
                seen
            };
            !reach(true)[w[0]] || !reach(false)[w[0]]
        }
    }
}

/// Single-entry mutations of `ring`, each changing one multiplicity to a
/// different value in `0..=2`.
pub fn single_entry_mutations(ring: &FusionRing) -> Vec<((usize, usize, usize, u32), FusionRing)> {
    let r = ring.rank();
    let mut out = Vec::new();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                for m in 0..=2 {
                    if m != ring.n(i, j, k) {
                        out.push(((i, j, k, m), ring.with_entry(i, j, k, m)));
                    }
                }
            }
        }
    }
    out
}
