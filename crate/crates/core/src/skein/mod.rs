//! Braid closures evaluated through the Temperley–Lieb category: Kauffman
//! bracket, Jones polynomial and colored Hopf links.
//!
//! Crossing convention: `σ_i` is the crossing whose strand from the
//! bottom-left of positions `i, i+1` passes over to the top-right. Its
//! A-smoothing joins bottom to top vertically, so
//!
//! ```text
//!   \ /          | |            \_/
//!    /    =  A · | |  +  A^-1 · / \
//!   / \          | |            ‾ ‾   (the generator e_i)
//! ```
//!
//! and `σ_i^{-1} = A^-1 · id + A · e_i`.

mod colored;

pub use colored::{colored_smatrix, colored_smatrix_galois, double_braid_word, kink_scalar};

use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::{LaurentPoly, rat};
use crate::tl::TLMorphism;

/// A word in the braid group on `strands` strands; letter `±i` is
/// `σ_i^{±1}` with `1 <= i < strands`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Format("a braid needs at least one strand".into()));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(Error::Format(format!("braid letter {bad} out of range for {strands} strands")));
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses comma-separated signed integers, e.g. `"1,-2,1"`.
    pub fn parse(strands: usize, word: &str) -> Result<Self> {
        let word = word.trim();
        let letters = if word.is_empty() {
            Vec::new()
        } else {
            word.split(',')
                .map(|t| t.trim().parse::<i32>().map_err(|_| Error::Format(format!("bad braid letter {t:?}"))))
                .collect::<Result<_>>()?
        };
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn crossings(&self) -> usize {
        self.letters.len()
    }

    /// Sum of the letter signs.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| i64::from(l.signum())).sum()
    }

    /// Every crossing switched.
    pub fn mirror(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|l| -l).collect() }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.letters.iter().map(i32::to_string).collect();
        write!(f, "{}:[{}]", self.strands, letters.join(","))
    }
}

/// `δ = -A^2 - A^-2`.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_ints(-2, &[-1, 0, 0, 0, -1])
}

fn a_power(k: i64) -> LaurentPoly {
    LaurentPoly::monomial(rat(1, 1), k)
}

/// Image of a single letter in End(n) of TL(δ).
pub fn crossing(strands: usize, letter: i32) -> TLMorphism<LaurentPoly> {
    let i = letter.unsigned_abs() as usize;
    let (id_coeff, e_coeff) = if letter > 0 { (a_power(1), a_power(-1)) } else { (a_power(-1), a_power(1)) };
    TLMorphism::from_terms(
        strands,
        strands,
        loop_value(),
        [(crate::tl::TLDiagram::identity(strands), id_coeff), (crate::tl::TLDiagram::e(strands, i), e_coeff)],
    )
    .expect("crossing terms have the right signature")
}

/// The braid as a TL morphism, first letter at the bottom.
pub fn braid_to_tl(w: &BraidWord) -> TLMorphism<LaurentPoly> {
    w.letters.iter().fold(TLMorphism::identity(w.strands, loop_value()), |acc, &l| acc.compose_direct(&crossing(w.strands, l)))
}

/// Bracket of the trace closure, normalised so the unknot is 1.
pub fn kauffman_bracket(w: &BraidWord) -> LaurentPoly {
    let m = braid_to_tl(w);
    let delta = loop_value();
    let mut powers = vec![LaurentPoly::one()];
    let mut acc = LaurentPoly::zero();
    for (d, c) in m.terms() {
        let loops = d.closure_loops();
        while powers.len() < loops {
            let next = &powers[powers.len() - 1] * &delta;
            powers.push(next);
        }
        acc = &acc + &(c * &powers[loops - 1]);
    }
    acc
}

/// `(-A)^{-3 writhe} <w>`, a Laurent polynomial in `A`; substitute
/// `t = A^-4` to read the Jones polynomial.
pub fn jones_polynomial(w: &BraidWord) -> LaurentPoly {
    &LaurentPoly::signed_monomial(-3 * w.writhe()) * &kauffman_bracket(w)
}

/// Rewrites a polynomial in `A` with exponents divisible by 4 as a
/// polynomial in `t = A^-4`.
pub fn in_t(p: &LaurentPoly) -> Option<LaurentPoly> {
    if p.terms().any(|(e, _)| e % 4 != 0) {
        return None;
    }
    let mut out = LaurentPoly::zero();
    for (e, c) in p.terms() {
        out = &out + &LaurentPoly::monomial(c.clone(), -e / 4);
    }
    Some(out)
}

/// Renders a polynomial in `t`, highest power first.
pub fn format_in_t(p: &LaurentPoly) -> String {
    p.to_string().replace('A', "t")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinValue {
    pub bracket: LaurentPoly,
    pub writhe: i64,
    pub jones: LaurentPoly,
}

pub fn skein_value(w: &BraidWord) -> SkeinValue {
    let bracket = kauffman_bracket(w);
    let writhe = w.writhe();
    let jones = &LaurentPoly::signed_monomial(-3 * writhe) * &bracket;
    SkeinValue { bracket, writhe, jones }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn parsing() {
        assert_eq!(word(3, "1, -2,1").letters(), &[1, -2, 1]);
        assert!(word(1, "").letters().is_empty());
        assert!(BraidWord::parse(2, "2").is_err());
        assert!(BraidWord::parse(2, "0").is_err());
        assert!(BraidWord::parse(2, "x").is_err());
        assert!(BraidWord::new(0, vec![]).is_err());
    }

    #[test]
    fn crossing_images() {
        let s = braid_to_tl(&word(2, "1"));
        assert_eq!(s.len(), 2);
        assert_eq!(braid_to_tl(&word(2, "1,-1")), TLMorphism::identity(2, loop_value()));
        assert_eq!(braid_to_tl(&word(3, "1,2,1")), braid_to_tl(&word(3, "2,1,2")));
        assert_eq!(braid_to_tl(&word(3, "")), TLMorphism::identity(3, loop_value()));
    }

    #[test]
    fn small_links() {
        assert_eq!(kauffman_bracket(&word(1, "")), LaurentPoly::one());
        assert_eq!(kauffman_bracket(&word(2, "1,1")), LaurentPoly::from_ints(-4, &[-1, 0, 0, 0, 0, 0, 0, 0, -1]));
        assert_eq!(kauffman_bracket(&word(2, "1,1,1")), LaurentPoly::from_ints(-7, &[1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1]));
        // The closure of sigma_1 sigma_1^-1 on two strands is the two-component
        // unlink, not the unknot; a single sigma_1 closes to the unknot.
        assert_eq!(jones_polynomial(&word(2, "1,-1")), loop_value());
        assert_eq!(jones_polynomial(&word(2, "1,-1")), jones_polynomial(&word(2, "")));
        assert_eq!(jones_polynomial(&word(2, "1")), LaurentPoly::one());
        assert_eq!(jones_polynomial(&word(2, "-1")), LaurentPoly::one());
        // sigma_1^3 closes to the right-handed trefoil: t + t^3 - t^4.
        let right = in_t(&jones_polynomial(&word(2, "1,1,1"))).unwrap();
        assert_eq!(right, LaurentPoly::from_ints(1, &[1, 0, 1, -1]));
        let left = in_t(&jones_polynomial(&word(2, "-1,-1,-1"))).unwrap();
        assert_eq!(left, LaurentPoly::from_ints(-4, &[-1, 1, 0, 1]));
        assert_eq!(left, right.mirror());
    }

    #[test]
    fn t_rendering() {
        let left = in_t(&jones_polynomial(&word(2, "-1,-1,-1"))).unwrap();
        assert_eq!(format_in_t(&left), "t^-1 + t^-3 - t^-4");
    }
}
