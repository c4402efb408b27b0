use std::fmt;
use std::sync::{Arc, LazyLock};

use serde::Serialize;

use crate::error::{AlgebraError, ParseError, Result};
use crate::group::GroupEngine;
use crate::word::{parse_syllables, Alphabet, FreeWord};

static F2: LazyLock<Arc<Alphabet>> =
    LazyLock::new(|| Alphabet::new(&["x", "y"]).expect("static alphabet"));

const X: usize = 0;
const Y: usize = 1;

/// The alphabet `{x, y}` of the free factor.
pub fn f2_alphabet() -> Arc<Alphabet> {
    F2.clone()
}

/// `B = [x, y^-1] = x y^-1 x^-1 y`.
pub fn commutator_b() -> FreeWord {
    FreeWord::from_syllables(
        &F2,
        [(X, 1), (Y, -1), (X, -1), (Y, 1)]
            .into_iter()
            .map(|(gen, exp)| crate::word::Syllable { gen, exp }),
    )
    .expect("static word")
}

fn checked(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(AlgebraError::OutOfRange(what))
}

fn write_normal_form(
    f: &mut fmt::Formatter<'_>,
    word: &FreeWord,
    a: i64,
    b: i64,
    sigma: bool,
) -> fmt::Result {
    let mut parts = Vec::new();
    if !word.is_identity() {
        parts.push(word.to_string());
    }
    for (name, e) in [("a", a), ("b", b)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    if sigma {
        parts.push("s".to_string());
    }
    if parts.is_empty() {
        f.write_str("1")
    } else {
        f.write_str(&parts.join("*"))
    }
}

/// `word * a^a_exp * b^b_exp` in `P2(T)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct P2tElement {
    pub word: FreeWord,
    pub a_exp: i64,
    pub b_exp: i64,
}

impl P2tElement {
    pub fn new(word: FreeWord, a_exp: i64, b_exp: i64) -> Self {
        debug_assert!(**word.alphabet() == **F2);
        P2tElement { word, a_exp, b_exp }
    }

    pub fn identity() -> Self {
        P2tElement::new(FreeWord::identity(&F2), 0, 0)
    }

    pub fn central(a_exp: i64, b_exp: i64) -> Self {
        P2tElement::new(FreeWord::identity(&F2), a_exp, b_exp)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let e = B2tElement::parse(text)?;
        P2tElement::try_from(e).map_err(|_| {
            AlgebraError::Domain(format!("`{text}` has odd s-exponent, not a pure braid"))
        })
    }
}

impl fmt::Display for P2tElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_normal_form(f, &self.word, self.a_exp, self.b_exp, false)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct P2tGroup;

impl GroupEngine for P2tGroup {
    type Element = P2tElement;

    fn identity(&self) -> P2tElement {
        P2tElement::identity()
    }

    fn multiply(&self, u: &P2tElement, v: &P2tElement) -> Result<P2tElement> {
        Ok(P2tElement {
            word: u.word.multiply(&v.word)?,
            a_exp: checked(u.a_exp, v.a_exp, "central a exponent")?,
            b_exp: checked(u.b_exp, v.b_exp, "central b exponent")?,
        })
    }

    fn invert(&self, u: &P2tElement) -> Result<P2tElement> {
        Ok(P2tElement {
            word: u.word.invert(),
            a_exp: u
                .a_exp
                .checked_neg()
                .ok_or(AlgebraError::OutOfRange("central a exponent"))?,
            b_exp: u
                .b_exp
                .checked_neg()
                .ok_or(AlgebraError::OutOfRange("central b exponent"))?,
        })
    }

    fn pow(&self, u: &P2tElement, n: i64) -> Result<P2tElement> {
        Ok(P2tElement {
            word: u.word.pow(n)?,
            a_exp: u
                .a_exp
                .checked_mul(n)
                .ok_or(AlgebraError::OutOfRange("central a exponent"))?,
            b_exp: u
                .b_exp
                .checked_mul(n)
                .ok_or(AlgebraError::OutOfRange("central b exponent"))?,
        })
    }
}

/// Images of `x^±1`, `y^±1` under conjugation by `s`; `a`, `b` are fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaConjugation {
    pub x: P2tElement,
    pub x_inv: P2tElement,
    pub y: P2tElement,
    pub y_inv: P2tElement,
}

static SIGMA_TABLE: LazyLock<SigmaConjugation> = LazyLock::new(SigmaConjugation::build);

impl SigmaConjugation {
    fn build() -> Self {
        let b = commutator_b();
        let x = FreeWord::from_index(&F2, X, 1);
        let y = FreeWord::from_index(&F2, Y, 1);
        let mul = |u: &FreeWord, v: &FreeWord| u.multiply(v).expect("short words");
        // s x s^-1 = B x^-1 a,  s x^-1 s^-1 = a^-1 x B^-1
        let sx = P2tElement::new(mul(&b, &x.invert()), 1, 0);
        let sxi = P2tElement::new(mul(&x, &b.invert()), -1, 0);
        let sy = P2tElement::new(mul(&b, &y.invert()), 0, 1);
        let syi = P2tElement::new(mul(&y, &b.invert()), 0, -1);
        SigmaConjugation {
            x: sx,
            x_inv: sxi,
            y: sy,
            y_inv: syi,
        }
    }

    pub fn standard() -> &'static SigmaConjugation {
        &SIGMA_TABLE
    }

    /// `s u s^-1`, computed syllable by syllable.
    pub fn conjugate(&self, u: &P2tElement) -> Result<P2tElement> {
        let g = P2tGroup;
        let mut acc = P2tElement::central(u.a_exp, u.b_exp);
        for syl in u.word.syllables() {
            let (img, n) = match (syl.gen, syl.exp > 0) {
                (X, true) => (&self.x, syl.exp),
                (X, false) => (&self.x_inv, -syl.exp),
                (_, true) => (&self.y, syl.exp),
                (_, false) => (&self.y_inv, -syl.exp),
            };
            acc = g.multiply(&acc, &g.pow(img, n)?)?;
        }
        Ok(acc)
    }
}

/// `word * a^a_exp * b^b_exp * s^(sigma as 0/1)` in `B2(T)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct B2tElement {
    pub word: FreeWord,
    pub a_exp: i64,
    pub b_exp: i64,
    pub sigma: bool,
}

/// JSON view using the `(w, m, n, eps)` field names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct B2tJson {
    pub word: String,
    pub m: i64,
    pub n: i64,
    pub eps: u8,
    pub normal_form: String,
}

impl B2tElement {
    pub fn new(word: FreeWord, a_exp: i64, b_exp: i64, sigma: bool) -> Self {
        debug_assert!(**word.alphabet() == **F2);
        B2tElement {
            word,
            a_exp,
            b_exp,
            sigma,
        }
    }

    pub fn identity() -> Self {
        P2tElement::identity().into()
    }

    pub fn x() -> Self {
        B2tElement::new(FreeWord::from_index(&F2, X, 1), 0, 0, false)
    }

    pub fn y() -> Self {
        B2tElement::new(FreeWord::from_index(&F2, Y, 1), 0, 0, false)
    }

    pub fn a() -> Self {
        P2tElement::central(1, 0).into()
    }

    pub fn b() -> Self {
        P2tElement::central(0, 1).into()
    }

    pub fn sigma() -> Self {
        B2tElement::new(FreeWord::identity(&F2), 0, 0, true)
    }

    /// `B = s^2 = [x, y^-1]`.
    pub fn big_b() -> Self {
        B2tElement::new(commutator_b(), 0, 0, false)
    }

    /// The generators `x, y, a, b, s`.
    pub fn generators() -> [B2tElement; 5] {
        [Self::x(), Self::y(), Self::a(), Self::b(), Self::sigma()]
    }

    pub fn free_part(&self) -> P2tElement {
        P2tElement::new(self.word.clone(), self.a_exp, self.b_exp)
    }

    /// Parses a word in `x y a b s B`, with `B` read as `[x, y^-1]`.
    pub fn parse(text: &str) -> Result<Self> {
        let g = B2tGroup;
        let mut acc = B2tElement::identity();
        for t in parse_syllables(text)? {
            let base = match t.name.as_str() {
                "x" => Self::x(),
                "y" => Self::y(),
                "a" => Self::a(),
                "b" => Self::b(),
                "s" => Self::sigma(),
                "B" => Self::big_b(),
                _ => {
                    return Err(ParseError::new(
                        t.column,
                        t.name,
                        "unknown generator (expected one of x y a b s B)",
                    )
                    .into())
                }
            };
            acc = g.multiply(&acc, &g.pow(&base, t.exp)?)?;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> B2tJson {
        B2tJson {
            word: self.word.to_string(),
            m: self.a_exp,
            n: self.b_exp,
            eps: self.sigma as u8,
            normal_form: self.to_string(),
        }
    }

    pub fn is_central(&self) -> Result<bool> {
        let g = B2tGroup;
        for gen in Self::generators() {
            if !g.commutes(self, &gen)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl From<P2tElement> for B2tElement {
    fn from(p: P2tElement) -> Self {
        B2tElement::new(p.word, p.a_exp, p.b_exp, false)
    }
}

impl TryFrom<B2tElement> for P2tElement {
    type Error = B2tElement;

    fn try_from(e: B2tElement) -> std::result::Result<Self, B2tElement> {
        if e.sigma {
            Err(e)
        } else {
            Ok(P2tElement::new(e.word, e.a_exp, e.b_exp))
        }
    }
}

impl fmt::Display for B2tElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_normal_form(f, &self.word, self.a_exp, self.b_exp, self.sigma)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct B2tGroup;

impl GroupEngine for B2tGroup {
    type Element = B2tElement;

    fn identity(&self) -> B2tElement {
        B2tElement::identity()
    }

    fn multiply(&self, u: &B2tElement, v: &B2tElement) -> Result<B2tElement> {
        let p = P2tGroup;
        if !u.sigma {
            let prod = p.multiply(&u.free_part(), &v.free_part())?;
            return Ok(B2tElement::new(prod.word, prod.a_exp, prod.b_exp, v.sigma));
        }
        // u = p s, so u v = p (s v_p s^-1) s s^eps(v).
        let conj = SigmaConjugation::standard().conjugate(&v.free_part())?;
        let mut prod = p.multiply(&u.free_part(), &conj)?;
        if v.sigma {
            prod.word = prod.word.multiply(&commutator_b())?;
        }
        Ok(B2tElement::new(prod.word, prod.a_exp, prod.b_exp, !v.sigma))
    }

    fn invert(&self, u: &B2tElement) -> Result<B2tElement> {
        let inv = P2tGroup.invert(&u.free_part())?;
        if !u.sigma {
            return Ok(inv.into());
        }
        // (p s)^-1 = s^-1 p^-1 = B^-1 s p^-1
        let sigma_inv = B2tElement::new(commutator_b().invert(), 0, 0, true);
        self.multiply(&sigma_inv, &inv.into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> FreeWord {
        FreeWord::parse(&f2_alphabet(), text).unwrap()
    }

    #[test]
    fn sigma_squared_is_b() {
        let g = B2tGroup;
        let s = B2tElement::sigma();
        let ss = g.multiply(&s, &s).unwrap();
        assert_eq!(ss, B2tElement::new(w("x*y^-1*x^-1*y"), 0, 0, false));
        assert_eq!(ss, B2tElement::big_b());
    }

    #[test]
    fn pure_slice_concatenates() {
        let g = B2tGroup;
        let xy = g.multiply(&B2tElement::x(), &B2tElement::y()).unwrap();
        assert_eq!(xy, B2tElement::new(w("x*y"), 0, 0, false));
    }

    #[test]
    fn sigma_conjugates_x() {
        let g = B2tGroup;
        let c = g.conjugate(&B2tElement::sigma(), &B2tElement::x()).unwrap();
        assert_eq!(c, B2tElement::new(w("x*y^-1*x^-1*y*x^-1"), 1, 0, false));
        let c = g.conjugate(&B2tElement::sigma(), &B2tElement::y()).unwrap();
        assert_eq!(c, B2tElement::new(w("x*y^-1*x^-1"), 0, 1, false));
    }

    #[test]
    fn inverse_examples() {
        let g = B2tGroup;
        assert_eq!(
            g.invert(&B2tElement::identity()).unwrap(),
            B2tElement::identity()
        );
        let si = g.invert(&B2tElement::sigma()).unwrap();
        assert_eq!(si, B2tElement::new(w("y^-1*x*y*x^-1"), 0, 0, true));
        assert!(g.is_identity(&g.multiply(&B2tElement::sigma(), &si).unwrap()));
        let c = P2tElement::central(3, -4).into();
        assert_eq!(g.invert(&c).unwrap(), P2tElement::central(-3, 4).into());
    }

    #[test]
    fn centre_examples() {
        assert!(B2tElement::a().is_central().unwrap());
        assert!(B2tElement::b().is_central().unwrap());
        assert!(!B2tElement::x().is_central().unwrap());
        assert!(!B2tElement::sigma().is_central().unwrap());
        assert!(!B2tElement::big_b().is_central().unwrap());
    }

    #[test]
    fn parse_display_round_trip() {
        let e = B2tElement::parse("s*s").unwrap();
        assert_eq!(e.to_string(), "x*y^-1*x^-1*y");
        let e = B2tElement::parse("y*s^-1").unwrap();
        assert_eq!(e.to_string(), "x*y*x^-1*s");
        assert_eq!(B2tElement::parse(&e.to_string()).unwrap(), e);
        let e = B2tElement::parse("a^-1*x^2").unwrap();
        assert_eq!(e.to_string(), "x^2*a^-1");
        assert_eq!(B2tElement::parse("B*B^-1").unwrap(), B2tElement::identity());
        assert!(B2tElement::parse("x*z").unwrap_err().is_parse_error());
    }

    #[test]
    fn p2t_parse_rejects_odd_sigma() {
        assert!(P2tElement::parse("x*s").is_err());
        assert_eq!(P2tElement::parse("s^2").unwrap().word, commutator_b());
    }

    #[test]
    fn json_fields() {
        let j = B2tElement::parse("s*s").unwrap().to_json();
        assert_eq!(j.word, "x*y^-1*x^-1*y");
        assert_eq!((j.m, j.n, j.eps), (0, 0, 0));
    }
}
