use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Pairing = SmallVec<[u8; 32]>;

/// Planar `(n, m)` Temperley–Lieb diagram.
///
/// Boundary points are numbered bottom `0..n` left to right, then top
/// `n..n+m` left to right. `pairing[p]` is the partner of `p`. Isotopy
/// classes are exactly the non-crossing perfect matchings, so structural
/// equality is diagram equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TLDiagram {
    bottom: u8,
    top: u8,
    pairing: Pairing,
}

/// Largest supported boundary size; point labels are stored as `u8`.
pub const MAX_POINTS: usize = 254;

impl TLDiagram {
    pub fn new(bottom: usize, top: usize, pairing: &[usize]) -> Result<Self> {
        let total = bottom + top;
        if total % 2 == 1 {
            return Err(Error::OddBoundary(total));
        }
        if total > MAX_POINTS {
            return Err(Error::Limit(format!("{total} boundary points")));
        }
        if pairing.len() != total {
            return Err(Error::InvalidDiagram(format!("pairing has {} entries for {total} points", pairing.len())));
        }
        for (p, &q) in pairing.iter().enumerate() {
            if q >= total || q == p || pairing[q] != p {
                return Err(Error::InvalidDiagram(format!("point {p} is not properly paired")));
            }
        }
        let d = TLDiagram { bottom: bottom as u8, top: top as u8, pairing: pairing.iter().map(|&q| q as u8).collect() };
        if !d.is_planar() {
            return Err(Error::InvalidDiagram("strands cross".into()));
        }
        Ok(d)
    }

    pub(crate) fn from_raw(bottom: usize, top: usize, pairing: Pairing) -> Self {
        TLDiagram { bottom: bottom as u8, top: top as u8, pairing }
    }

    pub fn identity(n: usize) -> Self {
        let pairing = (0..n).map(|p| (n + p) as u8).chain((0..n).map(|p| p as u8)).collect();
        Self::from_raw(n, n, pairing)
    }

    /// The generator `e_i` of End(n), `1 <= i < n`: a cap on bottom points
    /// `i-1, i` and a cup on the matching top points.
    pub fn e(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "e_{i} undefined on {n} strands");
        let mut d = Self::identity(n);
        let (a, b) = (i - 1, i);
        d.pairing[a] = b as u8;
        d.pairing[b] = a as u8;
        d.pairing[n + a] = (n + b) as u8;
        d.pairing[n + b] = (n + a) as u8;
        d
    }

    /// The (0, 2) diagram.
    pub fn cup() -> Self {
        Self::from_raw(0, 2, [1, 0].into_iter().collect())
    }

    /// The (2, 0) diagram.
    pub fn cap() -> Self {
        Self::from_raw(2, 0, [1, 0].into_iter().collect())
    }

    /// `k` nested cups, a (0, 2k) diagram.
    pub fn nested_cups(k: usize) -> Self {
        Self::from_raw(0, 2 * k, (0..2 * k).map(|p| (2 * k - 1 - p) as u8).collect())
    }

    pub fn bottom(&self) -> usize {
        self.bottom as usize
    }

    pub fn top(&self) -> usize {
        self.top as usize
    }

    pub fn partner(&self, p: usize) -> usize {
        self.pairing[p] as usize
    }

    pub fn pairing(&self) -> Vec<usize> {
        self.pairing.iter().map(|&q| q as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.bottom == self.top && (0..self.bottom()).all(|p| self.partner(p) == self.bottom() + p)
    }

    /// Number of strands joining bottom to top.
    pub fn through_strands(&self) -> usize {
        (0..self.bottom()).filter(|&p| self.partner(p) >= self.bottom()).count()
    }

    /// Position of a point along the boundary circle: bottom left to
    /// right, then top right to left.
    fn position(&self, p: usize) -> usize {
        let (n, m) = (self.bottom(), self.top());
        if p < n { p } else { n + (m - 1 - (p - n)) }
    }

    fn is_planar(&self) -> bool {
        let total = self.pairing.len();
        let mut at = vec![0; total];
        for p in 0..total {
            at[self.position(p)] = p;
        }
        let mut stack = Vec::new();
        for pos in 0..total {
            let p = at[pos];
            let q_pos = self.position(self.partner(p));
            if q_pos > pos {
                stack.push(p);
            } else if stack.pop() != Some(self.partner(p)) {
                return false;
            }
        }
        true
    }

    /// Whether bottom points `i-1` and `i` are joined (a cap at `e_i`).
    pub fn has_bottom_cap(&self, i: usize) -> bool {
        i >= 1 && i < self.bottom() && self.partner(i - 1) == i
    }

    /// Whether top points `i-1` and `i` are joined (a cup at `e_i`).
    pub fn has_top_cup(&self, i: usize) -> bool {
        let n = self.bottom();
        i >= 1 && i < self.top() && self.partner(n + i - 1) == n + i
    }

    /// Vertical reflection: a `(m, n)` diagram.
    pub fn flip(&self) -> Self {
        let (n, m) = (self.bottom(), self.top());
        let map = |p: usize| if p < n { m + p } else { p - n };
        let mut pairing: Pairing = SmallVec::from_elem(0, n + m);
        for p in 0..n + m {
            pairing[map(p)] = map(self.partner(p)) as u8;
        }
        Self::from_raw(m, n, pairing)
    }

    /// Horizontal juxtaposition, `self` on the left.
    pub fn tensor(&self, other: &Self) -> Self {
        let (n1, m1, n2, m2) = (self.bottom(), self.top(), other.bottom(), other.top());
        let (n, m) = (n1 + n2, m1 + m2);
        let map1 = |p: usize| if p < n1 { p } else { n + (p - n1) };
        let map2 = |p: usize| if p < n2 { n1 + p } else { n + m1 + (p - n2) };
        let mut pairing: Pairing = SmallVec::from_elem(0, n + m);
        for p in 0..n1 + m1 {
            pairing[map1(p)] = map1(self.partner(p)) as u8;
        }
        for p in 0..n2 + m2 {
            pairing[map2(p)] = map2(other.partner(p)) as u8;
        }
        Self::from_raw(n, m, pairing)
    }

    /// Stacks `upper` on top of `self`, returning the glued diagram and the
    /// number of closed loops removed.
    pub fn compose(&self, upper: &Self) -> (Self, usize) {
        debug_assert_eq!(self.top(), upper.bottom());
        let (n, m, p) = (self.bottom(), self.top(), upper.top());
        let mut pairing: Pairing = SmallVec::from_elem(u8::MAX, n + p);
        let mut middle_seen: SmallVec<[bool; 32]> = SmallVec::from_elem(false, m);
        // Follow a strand entering the middle row at `mid` from the lower
        // diagram (`from_lower`) until it reaches an outer boundary point.
        let walk = |mut mid: usize, mut from_lower: bool, seen: &mut SmallVec<[bool; 32]>| -> usize {
            loop {
                seen[mid] = true;
                if from_lower {
                    let q = upper.partner(mid);
                    if q >= m {
                        return n + (q - m);
                    }
                    mid = q;
                } else {
                    let q = self.partner(n + mid);
                    if q < n {
                        return q;
                    }
                    mid = q - n;
                }
                seen[mid] = true;
                from_lower = !from_lower;
            }
        };
        for start in 0..n + p {
            if pairing[start] != u8::MAX {
                continue;
            }
            let end = if start < n {
                let q = self.partner(start);
                if q < n { q } else { walk(q - n, true, &mut middle_seen) }
            } else {
                let q = upper.partner(start - n + m);
                if q >= m { n + (q - m) } else { walk(q, false, &mut middle_seen) }
            };
            pairing[start] = end as u8;
            pairing[end] = start as u8;
        }
        let mut loops = 0;
        for start in 0..m {
            if middle_seen[start] {
                continue;
            }
            loops += 1;
            let mut mid = start;
            loop {
                middle_seen[mid] = true;
                let across = upper.partner(mid);
                middle_seen[across] = true;
                mid = self.partner(n + across) - n;
                if mid == start {
                    break;
                }
            }
        }
        (Self::from_raw(n, p, pairing), loops)
    }

    /// Closes the rightmost `r` strands of an endomorphism diagram around
    /// the right side.
    pub fn partial_trace(&self, r: usize) -> (Self, usize) {
        let n = self.bottom();
        assert_eq!(n, self.top(), "partial trace needs an endomorphism");
        assert!(r <= n);
        let k = n - r;
        // Identify bottom point j and top point n+j for j >= k.
        let glue = |p: usize| -> Option<usize> {
            if p >= k && p < n {
                Some(n + p)
            } else if p >= n + k {
                Some(p - n)
            } else {
                None
            }
        };
        let outer = |p: usize| if p < k { p } else { k + (p - n) };
        let mut pairing: Pairing = SmallVec::from_elem(u8::MAX, 2 * k);
        let mut seen: SmallVec<[bool; 64]> = SmallVec::from_elem(false, 2 * n);
        for p in (0..k).chain(n..n + k) {
            if seen[p] {
                continue;
            }
            seen[p] = true;
            let mut q = self.partner(p);
            while let Some(g) = glue(q) {
                seen[q] = true;
                seen[g] = true;
                q = self.partner(g);
            }
            seen[q] = true;
            pairing[outer(p)] = outer(q) as u8;
            pairing[outer(q)] = outer(p) as u8;
        }
        let mut loops = 0;
        for p in k..n {
            if seen[p] {
                continue;
            }
            loops += 1;
            let mut q = p;
            loop {
                seen[q] = true;
                let g = glue(q).expect("closed strand stays in the glued region");
                seen[g] = true;
                q = self.partner(g);
                if q == p {
                    break;
                }
            }
        }
        (Self::from_raw(k, k, pairing), loops)
    }

    /// Number of loops in the full trace closure.
    pub fn closure_loops(&self) -> usize {
        self.partial_trace(self.bottom()).1
    }
}

impl fmt::Debug for TLDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TL({}->{}; {:?})", self.bottom, self.top, self.pairing.as_slice())
    }
}

/// All non-crossing matchings with `n` bottom and `m` top points, in a
/// fixed order.
pub fn enumerate_diagrams(n: usize, m: usize) -> Result<Vec<TLDiagram>> {
    let total = n + m;
    if total % 2 == 1 {
        return Err(Error::OddBoundary(total));
    }
    if total > MAX_POINTS {
        return Err(Error::Limit(format!("{total} boundary points")));
    }
    let point = |pos: usize| if pos < n { pos } else { n + (m - 1 - (pos - n)) };
    let out = noncrossing(total)
        .into_iter()
        .map(|by_pos| {
            let mut pairing: Pairing = SmallVec::from_elem(0, total);
            for (pos, &other) in by_pos.iter().enumerate() {
                pairing[point(pos)] = point(other) as u8;
            }
            TLDiagram::from_raw(n, m, pairing)
        })
        .collect();
    Ok(out)
}

/// Non-crossing perfect matchings of `0..len` as partner arrays: position 0
/// pairs with an odd position, enclosing a matching of the interval between.
fn noncrossing(len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for close in (1..len).step_by(2) {
        let inside = noncrossing(close - 1);
        let outside = noncrossing(len - close - 1);
        for a in &inside {
            for b in &outside {
                let mut v = Vec::with_capacity(len);
                v.push(close);
                v.extend(a.iter().map(|&x| x + 1));
                v.push(0);
                v.extend(b.iter().map(|&x| x + close + 1));
                out.push(v);
            }
        }
    }
    out
}

/// `C_k = (2k)! / (k! (k+1)!)`.
pub fn catalan(k: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..k as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}
