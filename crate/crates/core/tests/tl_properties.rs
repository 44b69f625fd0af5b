mod common;

use proptest::prelude::*;
use tck::exact_arith::{CyclotomicScalar, rat};
use tck::fusion_ring::{catalog, fp_dims};
use tck::tl::{
    TLDiagram, TLMorphism, catalan, enumerate_diagrams, jones_wenzl, jones_wenzl_family, level_tau, negligible_gram_rank, theta, tl_fusion_ring,
};

fn tau() -> impl Strategy<Value = CyclotomicScalar> {
    prop_oneof![
        (3usize..=9).prop_map(level_tau),
        (-3i64..=3, 1i64..=3).prop_map(|(p, q)| CyclotomicScalar::from_rational(1, &rat(p, q))),
    ]
}

fn diagram(n: usize, m: usize) -> impl Strategy<Value = TLDiagram> {
    let all = enumerate_diagrams(n, m).unwrap();
    prop::sample::select(all)
}

fn morphism(n: usize, m: usize, tau: CyclotomicScalar) -> impl Strategy<Value = TLMorphism> {
    prop::collection::vec((diagram(n, m), -3i64..=3), 0..5).prop_map(move |terms| {
        let order = tau.order();
        TLMorphism::from_terms(n, m, tau.clone(), terms.into_iter().map(|(d, c)| (d, CyclotomicScalar::from_int(order, c)))).unwrap()
    })
}

/// Even sizes so that every Hom space in the chain is nonempty.
fn sizes(k: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..=3, k).prop_map(|v| v.into_iter().map(|x| 2 * x).collect())
}

#[test]
fn diagram_examples() {
    let tau = level_tau(5);
    let cup = TLMorphism::from_diagram(TLDiagram::cup(), tau.clone());
    let lhs = cup.tensor(&TLMorphism::identity(1, tau.clone())).unwrap();
    assert_eq!((lhs.bottom(), lhs.top()), (1, 3));
    assert_eq!(lhs.len(), 1);

    let e1 = TLMorphism::e(2, 1, tau.clone());
    assert_eq!(e1.compose(&e1).unwrap(), e1.scale(&tau));

    for n in 0..=6 {
        assert_eq!(TLMorphism::identity(n, tau.clone()).closure_trace().unwrap(), tau.pow(n as i64).unwrap());
    }
    for k in 0..=8 {
        assert_eq!(enumerate_diagrams(k, k).unwrap().len() as u128, catalan(k));
    }
    assert!(enumerate_diagrams(1, 2).is_err());
}

#[test]
fn second_projector() {
    let tau = level_tau(7);
    let f2 = jones_wenzl(2, &tau).unwrap();
    let expected = TLMorphism::identity(2, tau.clone()).sub(&TLMorphism::e(2, 1, tau.clone()).scale(&tau.inv().unwrap())).unwrap();
    assert_eq!(f2, expected);
    let one = CyclotomicScalar::one(tau.order());
    assert_eq!(f2.closure_trace().unwrap(), &(&tau * &tau) - &one);
    assert_eq!(f2.compose(&f2).unwrap(), f2);
}

#[test]
fn projectors_are_idempotent_and_self_dual() {
    let tau = level_tau(9);
    for f in jones_wenzl_family(6, &tau).unwrap() {
        assert_eq!(f.compose(&f).unwrap(), f);
        assert_eq!(f.flip(), f);
    }
}

#[test]
fn negligible_ranks() {
    // At level ℓ the pairing on End(n) degenerates exactly from n = ℓ-1.
    for level in 3..=6 {
        for n in 0..=level {
            let full = catalan(n) as usize;
            let r = negligible_gram_rank(n, n, level).unwrap();
            if n + 1 < level { assert_eq!(r, full, "ℓ={level} n={n}") } else { assert!(r < full, "ℓ={level} n={n}") }
        }
    }
}

/// Closed-form theta value with positive loop value:
/// `[a+b+c+1]! [a]! [b]! [c]! / ([a+b]! [b+c]! [a+c]!)` for the internal
/// strand counts `a, b, c`.
fn theta_oracle(level: usize, i: usize, j: usize, k: usize) -> f64 {
    let fact = |n: usize| (1..=n).map(|m| common::quantum_integer_f64(level, m)).product::<f64>();
    let (a, b, c) = ((i + j - k) / 2, (j + k - i) / 2, (i + k - j) / 2);
    fact(a + b + c + 1) * fact(a) * fact(b) * fact(c) / (fact(a + b) * fact(b + c) * fact(a + c))
}

#[test]
fn theta_matches_closed_form() {
    for level in 3..=8 {
        let family = jones_wenzl_family(level - 2, &level_tau(level)).unwrap();
        for i in 0..=level - 2 {
            for j in 0..=level - 2 {
                for k in 0..=level - 2 {
                    let got = theta(i, j, k, &family).unwrap();
                    let admissible = (i + j + k) % 2 == 0 && k <= i + j && i <= j + k && j <= i + k;
                    assert_eq!(got.is_some(), admissible);
                    if let Some(t) = got {
                        let want = theta_oracle(level, i, j, k);
                        assert!((t.to_complex().re - want).abs() < 1e-9 && t.to_complex().im.abs() < 1e-9, "ℓ={level} ({i},{j},{k}) {t:?} vs {want}");
                    }
                }
            }
        }
    }
}

#[test]
fn level_rings_match_the_truncated_rule() {
    for level in 3..=9 {
        let tl = tl_fusion_ring(level).unwrap();
        assert_eq!(tl.ring, catalog::su2_truncated(level), "ℓ={level}");
        assert!(tl.ring.validate().is_valid());
        let fp = fp_dims(&tl.ring).unwrap();
        let mut total = 0.0;
        for (i, d) in tl.dims.iter().enumerate() {
            let z = d.to_complex();
            assert!(z.im.abs() < 1e-9);
            assert!((z.re - common::quantum_integer_f64(level, i + 1)).abs() < 1e-9);
            assert!((z.re - fp[i]).abs() < 1e-6);
            total += z.re * z.re;
        }
        let s = (std::f64::consts::PI / level as f64).sin();
        assert!((total - level as f64 / (2.0 * s * s)).abs() < 1e-6, "ℓ={level}");
    }
}

#[test]
fn level_five_is_fibonacci_on_the_even_part() {
    let tl = tl_fusion_ring(5).unwrap();
    let ad = tck::fusion_ring::adjoint_subring(&tl.ring).unwrap();
    assert_eq!(ad.embedding, vec![0, 2]);
    assert_eq!(ad.ring, catalog::fibonacci());
}

/// Components of `a ; b` that touch neither boundary, by union-find on the
/// stacked pairings. Points: `a` bottom, shared middle, `b` top.
fn loops_oracle(a: &TLDiagram, b: &TLDiagram) -> (Vec<usize>, usize) {
    let (n, m, k) = (a.bottom(), a.top(), b.top());
    let mut parent: Vec<usize> = (0..n + m + k).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for x in 0..n + m {
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, a.partner(x)));
        parent[rx] = ry;
    }
    for x in 0..m + k {
        let (rx, ry) = (find(&mut parent, n + x), find(&mut parent, n + b.partner(x)));
        parent[rx] = ry;
    }
    let outer: Vec<usize> = (0..n).chain(n + m..n + m + k).collect();
    let mut pairing = vec![0; n + k];
    for (i, &x) in outer.iter().enumerate() {
        for (j, &y) in outer.iter().enumerate() {
            if i != j && find(&mut parent, x) == find(&mut parent, y) {
                pairing[i] = j;
            }
        }
    }
    let touching: Vec<usize> = outer.iter().map(|&x| find(&mut parent, x)).collect();
    let loops = (n..n + m).filter(|&x| find(&mut parent, x) == x && !touching.contains(&x)).count();
    (pairing, loops)
}

fn chain(k: usize) -> impl Strategy<Value = (CyclotomicScalar, Vec<usize>)> {
    (tau(), sizes(k))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn composition_is_associative(
        (a, b, c) in chain(4).prop_flat_map(|(t, s)| (morphism(s[0], s[1], t.clone()), morphism(s[1], s[2], t.clone()), morphism(s[2], s[3], t)))
    ) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn interchange_law(
        (a, c, b, d) in chain(6).prop_flat_map(|(t, s)| (
            morphism(s[0], s[1], t.clone()), morphism(s[1], s[2], t.clone()),
            morphism(s[3], s[4], t.clone()), morphism(s[4], s[5], t),
        ))
    ) {
        let lhs = a.tensor(&b).unwrap().compose(&c.tensor(&d).unwrap()).unwrap();
        let rhs = a.compose(&c).unwrap().tensor(&b.compose(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn flip_reverses_composition(
        (a, b) in chain(3).prop_flat_map(|(t, s)| (morphism(s[0], s[1], t.clone()), morphism(s[1], s[2], t)))
    ) {
        prop_assert_eq!(a.compose(&b).unwrap().flip(), b.flip().compose(&a.flip()).unwrap());
        prop_assert_eq!(a.flip().flip(), a);
    }

    #[test]
    fn traces_agree(f in (tau(), 0usize..=5).prop_flat_map(|(t, n)| morphism(n, n, t))) {
        let c = f.closure_trace().unwrap();
        prop_assert_eq!(f.left_trace().unwrap(), c.clone());
        prop_assert_eq!(f.right_trace().unwrap(), c.clone());
        prop_assert_eq!(f.partial_trace(f.bottom()).unwrap().closure_trace().unwrap(), c);
    }

    #[test]
    fn pruned_product_matches_direct(
        (f, g) in (4usize..=8, 2usize..=6, 0usize..=3).prop_flat_map(|(level, n, s)| {
            let t = level_tau(level);
            let f = jones_wenzl(n.min(level - 2), &t).unwrap();
            let n = f.bottom();
            (Just(f), morphism(n, 2 * s + n % 2, t))
        })
    ) {
        prop_assert_eq!(f.compose(&g).unwrap(), f.compose_direct(&g));
    }

    #[test]
    fn diagram_composition_matches_union_find(
        (a, b) in sizes(3).prop_flat_map(|s| (diagram(s[0] + 1, s[1] + 1), diagram(s[1] + 1, s[2] + 1)))
    ) {
        let (c, loops) = a.compose(&b);
        let (pairing, want) = loops_oracle(&a, &b);
        prop_assert_eq!(c.pairing(), pairing);
        prop_assert_eq!(loops, want);
    }
}
