//! Pointed categories `C(G, ω)` over finite abelian groups and their
//! Drinfeld centers, restricted to centers whose simples are all invertible.
//!
//! The skeleton has objects `G`, `g ⊗ h = g + h`, and associator
//! `(g ⊗ h) ⊗ k -> g ⊗ (h ⊗ k)` equal to `ω(g, h, k)`. A scalar half-braiding
//! on `g` is `φ(h): g ⊗ h -> h ⊗ g`. Expanding the half-braiding on `h ⊗ k`
//! with the associators reinserted gives
//!
//! ```text
//! φ(h + k) = φ(h) φ(k) ω(h, g, k) / (ω(g, h, k) ω(h, k, g))
//! ```
//!
//! and the tensor product `(g, φ) ⊗ (h, ψ) = (g + h, χ)` with
//!
//! ```text
//! χ(k) = φ(k) ψ(k) ω(g, h, k) ω(k, g, h) / ω(g, k, h).
//! ```
//!
//! All roots of unity are handled as exponents of one working root `ζ_W`.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact_arith::{CyclotomicScalar, lcm};
use crate::fusion_ring::FusionRing;
use crate::modular::ModularData;

pub use crate::modular::transparent_objects;

/// `Z/n_1 × ... × Z/n_k`. Elements are indexed in mixed radix with the
/// first factor most significant, so index 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    orders: Vec<usize>,
}

impl FiniteAbelianGroup {
    pub fn new(orders: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = orders.iter().find(|&&n| n < 2) {
            return Err(Error::Format(format!("cyclic factor of order {bad}; orders must be at least 2")));
        }
        Ok(FiniteAbelianGroup { orders })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    /// `"2"` is `Z/2`, `"2x2"` is `Z/2 × Z/2`.
    pub fn parse(spec: &str) -> Result<Self> {
        let orders = spec
            .split(['x', 'X'])
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Format(format!("bad group specification {spec:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(orders)
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn size(&self) -> usize {
        self.orders.iter().product()
    }

    /// Least common multiple of the factor orders.
    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1, |a, &n| lcm(a, n))
    }

    pub fn digits(&self, mut x: usize) -> Vec<usize> {
        let mut d = vec![0; self.orders.len()];
        for (slot, &n) in d.iter_mut().zip(&self.orders).rev() {
            *slot = x % n;
            x /= n;
        }
        d
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        digits.iter().zip(&self.orders).fold(0, |acc, (&x, &n)| acc * n + x % n)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let s: Vec<usize> = self.digits(a).iter().zip(self.digits(b)).map(|(x, y)| x + y).collect();
        self.index(&s)
    }

    pub fn neg(&self, a: usize) -> usize {
        let s: Vec<usize> = self.digits(a).iter().zip(&self.orders).map(|(x, n)| n - x).collect();
        self.index(&s)
    }

    /// Index of the `i`-th standard generator.
    fn generator(&self, i: usize) -> usize {
        self.orders[i + 1..].iter().product()
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.orders.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// A function `G³ -> ℚ(ζ_N)^×`, stored at one common order `N`, indexed by
/// `(g·|G| + h)·|G| + k`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThreeCocycle {
    group: FiniteAbelianGroup,
    order: usize,
    values: Vec<CyclotomicScalar>,
    /// `values[t] = ζ_N^{exponents[t]}` when it is a root of unity.
    exponents: Vec<Option<usize>>,
}

impl ThreeCocycle {
    pub fn new(group: FiniteAbelianGroup, values: Vec<CyclotomicScalar>) -> Result<Self> {
        let n = group.size();
        if values.len() != n * n * n {
            return Err(Error::Format(format!("cocycle table has {} entries, expected {}", values.len(), n * n * n)));
        }
        let order = values.iter().fold(1, |a, x| lcm(a, x.order()));
        let values: Vec<CyclotomicScalar> = values.iter().map(|x| x.lift(order)).collect();
        let exponents = values.par_iter().map(CyclotomicScalar::root_of_unity_exponent).collect();
        Ok(ThreeCocycle { group, order, values, exponents })
    }

    pub fn constant(group: FiniteAbelianGroup) -> Self {
        let n = group.size();
        Self::new(group, vec![CyclotomicScalar::one(1); n * n * n]).expect("table has the right size")
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn values(&self) -> &[CyclotomicScalar] {
        &self.values
    }

    fn slot(&self, g: usize, h: usize, k: usize) -> usize {
        let n = self.group.size();
        (g * n + h) * n + k
    }

    pub fn value(&self, g: usize, h: usize, k: usize) -> &CyclotomicScalar {
        &self.values[self.slot(g, h, k)]
    }

    /// Exponent of `ω(g, h, k)` as a power of `ζ_N`.
    fn exponent(&self, g: usize, h: usize, k: usize) -> Option<usize> {
        self.exponents[self.slot(g, h, k)]
    }
}

/// `ω(a, b, c) = exp(2πi s a (b + c - ((b + c) mod n)) / n²)` on `Z/n`.
/// The bracket is `0` or `n`, so every value is an `n`-th root of unity.
pub fn standard_cocycle(n: usize, s: usize) -> Result<ThreeCocycle> {
    let group = FiniteAbelianGroup::cyclic(n)?;
    let mut values = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let carry = usize::from(b + c >= n);
                values.push(CyclotomicScalar::root_of_unity(n, ((s % n) * a * carry) as i64));
            }
        }
    }
    ThreeCocycle::new(group, values)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CocycleAxiom {
    RootOfUnity,
    Normalization,
    Identity,
}

impl CocycleAxiom {
    pub fn name(self) -> &'static str {
        match self {
            CocycleAxiom::RootOfUnity => "root_of_unity",
            CocycleAxiom::Normalization => "normalization",
            CocycleAxiom::Identity => "cocycle_identity",
        }
    }
}

/// `witness` is a triple for the first two axioms and a quadruple
/// `(g, h, k, l)` for the cocycle identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleViolation {
    pub axiom: CocycleAxiom,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CocycleReport {
    pub violations: Vec<CocycleViolation>,
    pub truncated: bool,
}

impl CocycleReport {
    const CAP: usize = 256;

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, axiom: CocycleAxiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    fn push(&mut self, axiom: CocycleAxiom, witness: Vec<usize>) {
        if self.violations.len() < Self::CAP {
            self.violations.push(CocycleViolation { axiom, witness });
        } else {
            self.truncated = true;
        }
    }
}

/// Checks that every value is a root of unity, that `ω` is normalized, and
/// `ω(h,k,l) ω(g,h+k,l) ω(g,h,k) = ω(g+h,k,l) ω(g,h,k+l)` on all of `G⁴`.
pub fn check_cocycle(omega: &ThreeCocycle) -> CocycleReport {
    let grp = &omega.group;
    let n = grp.size();
    let mut report = CocycleReport::default();
    for (t, e) in omega.exponents.iter().enumerate() {
        if e.is_none() {
            report.push(CocycleAxiom::RootOfUnity, vec![t / (n * n), (t / n) % n, t % n]);
        }
    }
    for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                if (g == 0 || h == 0 || k == 0) && !omega.value(g, h, k).is_one() {
                    report.push(CocycleAxiom::Normalization, vec![g, h, k]);
                }
            }
        }
    }
    let failures: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .flat_map_iter(|g| {
            let mut out = Vec::new();
            for h in 0..n {
                let gh = grp.add(g, h);
                for k in 0..n {
                    let hk = grp.add(h, k);
                    for l in 0..n {
                        let kl = grp.add(k, l);
                        let holds = match (
                            omega.exponent(h, k, l),
                            omega.exponent(g, hk, l),
                            omega.exponent(g, h, k),
                            omega.exponent(gh, k, l),
                            omega.exponent(g, h, kl),
                        ) {
                            (Some(a), Some(b), Some(c), Some(d), Some(e)) => (a + b + c) % omega.order == (d + e) % omega.order,
                            _ => {
                                let lhs = &(omega.value(h, k, l) * omega.value(g, hk, l)) * omega.value(g, h, k);
                                lhs == omega.value(gh, k, l) * omega.value(g, h, kl)
                            }
                        };
                        if !holds {
                            out.push(vec![g, h, k, l]);
                        }
                    }
                }
            }
            out
        })
        .collect();
    for w in failures {
        report.push(CocycleAxiom::Identity, w);
    }
    report
}

/// A simple of the center: `g` with the half-braiding `φ(h) = ζ_order^{phases[h]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CenterObject {
    pub element: usize,
    pub order: usize,
    pub phases: Vec<usize>,
}

impl CenterObject {
    pub fn half_braiding(&self, h: usize) -> CyclotomicScalar {
        CyclotomicScalar::root_of_unity(self.order, self.phases[h] as i64)
    }

    pub fn half_braidings(&self) -> Vec<CyclotomicScalar> {
        (0..self.phases.len()).map(|h| self.half_braiding(h)).collect()
    }
}

/// Cocycle exponents rescaled to `ζ_W`, `W = N · exp(G)`, which contains
/// every half-braiding value.
struct Work<'a> {
    omega: &'a ThreeCocycle,
    w: usize,
    scale: usize,
}

impl<'a> Work<'a> {
    fn new(omega: &'a ThreeCocycle) -> Result<Self> {
        let report = check_cocycle(omega);
        if let Some(v) = report.violations.first() {
            return Err(Error::IllFormed(format!("not a normalized 3-cocycle: {} fails at {:?}", v.axiom.name(), v.witness)));
        }
        let scale = omega.group.exponent();
        Ok(Work { omega, w: omega.order * scale, scale })
    }

    fn om(&self, g: usize, h: usize, k: usize) -> usize {
        self.omega.exponent(g, h, k).expect("checked root of unity") * self.scale
    }

    /// Exponent of `ω(h,g,k) / (ω(g,h,k) ω(h,k,g))`.
    fn correction(&self, g: usize, h: usize, k: usize) -> usize {
        (self.om(h, g, k) + 2 * self.w - self.om(g, h, k) - self.om(h, k, g)) % self.w
    }

    /// Exponent of `ω(g,h,k) ω(k,g,h) / ω(g,k,h)`.
    fn tensor_correction(&self, g: usize, h: usize, k: usize) -> usize {
        (self.om(g, h, k) + self.om(k, g, h) + self.w - self.om(g, k, h)) % self.w
    }

    /// All half-braidings on `g`, sorted by phase table.
    fn half_braidings(&self, g: usize) -> Vec<Vec<usize>> {
        let grp = &self.omega.group;
        let w = self.w;
        // Going once around the i-th cyclic factor forces n_i y_i = -Σ c.
        let mut choices: Vec<Vec<usize>> = Vec::with_capacity(grp.orders.len());
        for (i, &ni) in grp.orders.iter().enumerate() {
            let e = grp.generator(i);
            let mut x = 0;
            let mut total = 0;
            for _ in 0..ni {
                total = (total + self.correction(g, x, e)) % w;
                x = grp.add(x, e);
            }
            let rhs = (w - total) % w;
            if !rhs.is_multiple_of(ni) {
                return Vec::new();
            }
            choices.push((0..ni).map(|t| (rhs / ni + t * (w / ni)) % w).collect());
        }
        let mut out = Vec::new();
        let mut pick = vec![0usize; choices.len()];
        loop {
            let y: Vec<usize> = pick.iter().zip(&choices).map(|(&p, c)| c[p]).collect();
            if let Some(phi) = self.extend(g, &y) {
                out.push(phi);
            }
            let mut pos = pick.len();
            loop {
                if pos == 0 {
                    out.sort();
                    return out;
                }
                pos -= 1;
                pick[pos] += 1;
                if pick[pos] < choices[pos].len() {
                    break;
                }
                pick[pos] = 0;
            }
        }
    }

    /// Extends generator values along the mixed-radix order and keeps the
    /// result only if the twisted multiplicativity holds on all pairs.
    fn extend(&self, g: usize, y: &[usize]) -> Option<Vec<usize>> {
        let grp = &self.omega.group;
        let n = grp.size();
        let w = self.w;
        let mut phi = vec![0usize; n];
        for x in 1..n {
            let d = grp.digits(x);
            let i = d.iter().rposition(|&v| v != 0).expect("x is not the identity");
            let e = grp.generator(i);
            let prev = x - e;
            phi[x] = (phi[prev] + y[i] + self.correction(g, prev, e)) % w;
        }
        let ok = (0..n).all(|h| (0..n).all(|k| phi[grp.add(h, k)] == (phi[h] + phi[k] + self.correction(g, h, k)) % w));
        ok.then_some(phi)
    }
}

/// The invertible simples of the center in canonical order: by group
/// element, then by phase table. Fails with `NotPointedCenter` when fewer
/// than `|G|²` exist.
pub fn center_objects(omega: &ThreeCocycle) -> Result<Vec<CenterObject>> {
    let work = Work::new(omega)?;
    let (objects, _) = objects_at_working_order(&work)?;
    let order = reduced_order(&objects, work.w);
    Ok(objects.into_iter().map(|(g, phi)| rescale(g, &phi, work.w, order)).collect())
}

fn objects_at_working_order(work: &Work<'_>) -> Result<(Vec<(usize, Vec<usize>)>, usize)> {
    let n = work.omega.group.size();
    let objects: Vec<(usize, Vec<usize>)> =
        (0..n).into_par_iter().flat_map_iter(|g| work.half_braidings(g).into_iter().map(move |phi| (g, phi))).collect();
    if objects.len() < n * n {
        return Err(Error::NotPointedCenter { found: objects.len(), expected: n * n });
    }
    Ok((objects, n))
}

/// Smallest order containing every phase.
fn reduced_order(objects: &[(usize, Vec<usize>)], w: usize) -> usize {
    let q = objects.iter().flat_map(|(_, phi)| phi.iter()).fold(w, |acc, &e| acc.gcd(&e));
    w / q
}

fn rescale(g: usize, phi: &[usize], w: usize, order: usize) -> CenterObject {
    let q = w / order;
    CenterObject { element: g, order, phases: phi.iter().map(|&e| e / q).collect() }
}

/// The center as a pointed braided category.
#[derive(Clone, Debug)]
pub struct PointedCenter {
    pub group: FiniteAbelianGroup,
    pub objects: Vec<CenterObject>,
    pub ring: FusionRing,
    pub data: ModularData,
}

impl PointedCenter {
    /// Underlying group element of each simple; a grading of the center by
    /// `G`.
    pub fn forgetful(&self) -> Vec<usize> {
        self.objects.iter().map(|o| o.element).collect()
    }
}

/// Fusion ring and modular data of the center, all dimensions 1.
///
/// `T_X = φ(g)` and `S_XY = conj(φ(h) ψ(g))`, the double braiding of `X̄`
/// with `Y`. The twist satisfies `θ_{X⊗Y} = θ_X θ_Y φ(h) ψ(g)`, and pairing
/// it with the unconjugated monodromy would satisfy `(S T^-1)^3 ∝ C` rather
/// than `(S T)^3 ∝ C`.
pub fn center_modular_data(omega: &ThreeCocycle) -> Result<PointedCenter> {
    let work = Work::new(omega)?;
    let grp = &omega.group;
    let (objects, n) = objects_at_working_order(&work)?;
    let r = objects.len();
    let w = work.w;
    let lookup: HashMap<(usize, &[usize]), usize> = objects.iter().enumerate().map(|(i, (g, phi))| ((*g, phi.as_slice()), i)).collect();
    let products: Vec<usize> = (0..r * r)
        .into_par_iter()
        .map(|t| {
            let ((g, phi), (h, psi)) = (&objects[t / r], &objects[t % r]);
            let chi: Vec<usize> = (0..n).map(|k| (phi[k] + psi[k] + work.tensor_correction(*g, *h, k)) % w).collect();
            lookup
                .get(&(grp.add(*g, *h), chi.as_slice()))
                .copied()
                .ok_or_else(|| Error::IllFormed(format!("product of center objects {} and {} is not a listed simple", t / r, t % r)))
        })
        .collect::<Result<_>>()?;
    let dual: Vec<usize> = (0..r)
        .map(|i| (0..r).find(|&j| products[i * r + j] == 0).ok_or_else(|| Error::IllFormed(format!("center object {i} has no inverse"))))
        .collect::<Result<_>>()?;
    let ring = FusionRing::new(r, dual.clone(), (0..r * r).map(|t| (t / r, t % r, products[t], 1)))?;

    let order = reduced_order(&objects, w);
    let q = w / order;
    let root = |e: usize| CyclotomicScalar::root_of_unity(order, ((e % w) / q) as i64);
    let s: Vec<Vec<CyclotomicScalar>> = objects
        .iter()
        .map(|(g, phi)| objects.iter().map(|(h, psi)| root(2 * w - phi[*h] - psi[*g])).collect())
        .collect();
    let t: Vec<CyclotomicScalar> = objects.iter().map(|(g, phi)| root(phi[*g])).collect();
    let dims = vec![CyclotomicScalar::one(order); r];
    let data = ModularData::new(s, t, dual, dims)?;
    let objects = objects.iter().map(|(g, phi)| rescale(*g, phi, w, order)).collect();
    Ok(PointedCenter { group: grp.clone(), objects, ring, data })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion_ring::{catalog, grading_group, is_pointed};
    use crate::modular::{gauss_sum_check, t_order, verify_modular};

    #[test]
    fn group_parsing() {
        let g = FiniteAbelianGroup::parse("2x3").unwrap();
        assert_eq!(g.size(), 6);
        assert_eq!(g.exponent(), 6);
        assert_eq!(g.to_string(), "2x3");
        assert_eq!(g.add(g.index(&[1, 2]), g.index(&[1, 2])), g.index(&[0, 1]));
        assert_eq!(g.neg(g.index(&[1, 1])), g.index(&[1, 2]));
        assert!(FiniteAbelianGroup::parse("1").is_err());
        assert!(FiniteAbelianGroup::parse("2x").is_err());
        assert!(FiniteAbelianGroup::parse("").is_err());
    }

    #[test]
    fn standard_cocycles_are_cocycles() {
        for n in 2..=8 {
            for s in 0..n {
                assert!(check_cocycle(&standard_cocycle(n, s).unwrap()).is_valid(), "n={n} s={s}");
            }
        }
        let w = standard_cocycle(2, 1).unwrap();
        for t in 0..8 {
            let expect = if t == 7 { CyclotomicScalar::from_int(2, -1) } else { CyclotomicScalar::one(2) };
            assert_eq!(w.values()[t], expect);
        }
        assert!(standard_cocycle(2, 0).unwrap().values().iter().all(CyclotomicScalar::is_one));
    }

    #[test]
    fn broken_cocycles() {
        let g = FiniteAbelianGroup::cyclic(3).unwrap();
        let mut values = vec![CyclotomicScalar::one(3); 27];
        values[13] = CyclotomicScalar::root_of_unity(3, 1);
        let rep = check_cocycle(&ThreeCocycle::new(g.clone(), values).unwrap());
        assert!(rep.violates(CocycleAxiom::Identity));
        assert!(!rep.violates(CocycleAxiom::Normalization));

        let mut values = vec![CyclotomicScalar::one(2); 27];
        values[1] = CyclotomicScalar::from_int(2, -1);
        values[2] = CyclotomicScalar::from_int(1, 2);
        let rep = check_cocycle(&ThreeCocycle::new(g, values).unwrap());
        assert!(rep.violates(CocycleAxiom::Normalization));
        assert!(rep.violates(CocycleAxiom::RootOfUnity));
        assert_eq!(rep.violations[0].witness, vec![0, 0, 2]);
        assert!(center_objects(&ThreeCocycle::new(FiniteAbelianGroup::cyclic(3).unwrap(), vec![CyclotomicScalar::from_int(1, 2); 27]).unwrap()).is_err());
    }

    #[test]
    fn toric_code() {
        let c = center_modular_data(&ThreeCocycle::constant(FiniteAbelianGroup::cyclic(2).unwrap())).unwrap();
        assert_eq!(c.objects.len(), 4);
        assert_eq!(c.ring, catalog::abelian_group_ring(&[2, 2]));
        let mut twists: Vec<i64> = c.data.t().iter().map(|x| if x.is_one() { 1 } else { -1 }).collect();
        twists.sort();
        assert_eq!(twists, vec![-1, 1, 1, 1]);
        assert!(verify_modular(&c.data).passed());
        assert!(gauss_sum_check(&c.data).passed());
        assert_eq!(t_order(&c.data).unwrap(), 2);
        assert_eq!(transparent_objects(&c.data), vec![0]);
    }

    #[test]
    fn double_semion() {
        let c = center_modular_data(&standard_cocycle(2, 1).unwrap()).unwrap();
        assert_eq!(c.objects.len(), 4);
        assert_eq!(t_order(&c.data).unwrap(), 4);
        assert!(verify_modular(&c.data).passed());
        assert!(gauss_sum_check(&c.data).passed());
        // The semion fuses with itself to the unit, so the ring is Z/2 x Z/2.
        assert_eq!(grading_group(&c.ring).unwrap().order(), 4);
    }

    #[test]
    fn cyclic_centers() {
        for n in 2..=5 {
            for s in 0..n {
                let c = center_modular_data(&standard_cocycle(n, s).unwrap()).unwrap();
                assert_eq!(c.data.rank(), n * n);
                assert!(c.ring.validate().is_valid());
                assert!(is_pointed(&c.ring).unwrap());
                let rep = verify_modular(&c.data);
                assert!(rep.passed(), "n={n} s={s} {:?} T={:?} S={:?}", rep.violations, c.data.t(), c.data.s());
                assert!(gauss_sum_check(&c.data).passed(), "n={n} s={s}");
                assert_eq!(transparent_objects(&c.data), vec![0]);
                let f = c.forgetful();
                for (i, j, k, _) in c.ring.entries() {
                    assert_eq!(c.group.add(f[i], f[j]), f[k]);
                }
            }
        }
    }

    #[test]
    fn canonical_order() {
        let objs = center_objects(&ThreeCocycle::constant(FiniteAbelianGroup::cyclic(3).unwrap())).unwrap();
        assert_eq!(objs.len(), 9);
        assert_eq!(objs[0].phases, vec![0, 0, 0]);
        assert!(objs.windows(2).all(|w| (w[0].element, &w[0].phases) < (w[1].element, &w[1].phases)));
        assert!(objs.iter().all(|o| o.half_braiding(0).is_one()));
    }

    #[test]
    fn klein_four_and_verlinde() {
        let c = center_modular_data(&ThreeCocycle::constant(FiniteAbelianGroup::parse("2x2").unwrap())).unwrap();
        assert_eq!(c.data.rank(), 16);
        assert!(verify_modular(&c.data).passed());
        assert_eq!(crate::modular::verlinde_fusion(&c.data).unwrap(), c.ring);
        let d = center_modular_data(&standard_cocycle(4, 3).unwrap()).unwrap();
        assert_eq!(crate::modular::verlinde_fusion(&d.data).unwrap(), d.ring);
    }

    #[test]
    fn trilinear_cocycle_has_a_nonpointed_center() {
        // (-1)^{a_1 b_2 c_3} on (Z/2)^3: its twisted double has
        // two-dimensional simples.
        let g = FiniteAbelianGroup::parse("2x2x2").unwrap();
        let mut values = Vec::new();
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    let e = g.digits(a)[0] * g.digits(b)[1] * g.digits(c)[2];
                    values.push(CyclotomicScalar::root_of_unity(2, e as i64));
                }
            }
        }
        let w = ThreeCocycle::new(g, values).unwrap();
        assert!(check_cocycle(&w).is_valid());
        match center_objects(&w) {
            Err(Error::NotPointedCenter { found, expected: 64 }) => assert!(found < 64),
            other => panic!("unexpected {other:?}"),
        }
    }
}
