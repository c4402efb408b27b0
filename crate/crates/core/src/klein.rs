//! Normal-form arithmetic in the Klein bottle group `<al, be | al be al be^-1>`.
//!
//! Every element is uniquely `al^r * be^s`, and `be al = al^-1 be`, so
//! `(r, s) * (p, q) = (r + (-1)^s p, s + q)`.

use std::fmt;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::group::GroupEngine;
use crate::word::{parse_syllables, FreeWord, GroupHom, HomReport, Presentation};

/// `al^alpha_exp * be^beta_exp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KleinElement {
    pub alpha_exp: i64,
    pub beta_exp: i64,
}

impl KleinElement {
    pub const IDENTITY: KleinElement = KleinElement::new(0, 0);
    pub const ALPHA: KleinElement = KleinElement::new(1, 0);
    pub const BETA: KleinElement = KleinElement::new(0, 1);

    pub const fn new(alpha_exp: i64, beta_exp: i64) -> Self {
        KleinElement {
            alpha_exp,
            beta_exp,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let g = KleinGroup;
        let mut acc = KleinElement::IDENTITY;
        for t in parse_syllables(text)? {
            let base = match t.name.as_str() {
                "al" => KleinElement::ALPHA,
                "be" => KleinElement::BETA,
                _ => {
                    return Err(crate::error::ParseError::new(
                        t.column,
                        t.name,
                        "unknown generator (expected `al` or `be`)",
                    )
                    .into())
                }
            };
            acc = g.multiply(&acc, &g.pow(&base, t.exp)?)?;
        }
        Ok(acc)
    }

    /// The word `al^r * be^s` over the presentation alphabet.
    pub fn to_word(&self, presentation: &Presentation) -> Result<FreeWord> {
        let a = FreeWord::power(presentation.alphabet(), "al", self.alpha_exp)?;
        let b = FreeWord::power(presentation.alphabet(), "be", self.beta_exp)?;
        a.multiply(&b)
    }

    pub fn is_central(&self) -> bool {
        self.alpha_exp == 0 && self.beta_exp % 2 == 0
    }
}

impl fmt::Display for KleinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("al", self.alpha_exp), ("be", self.beta_exp)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

fn sign(exp: i64) -> i64 {
    if exp.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct KleinGroup;

impl GroupEngine for KleinGroup {
    type Element = KleinElement;

    fn identity(&self) -> KleinElement {
        KleinElement::IDENTITY
    }

    fn multiply(&self, u: &KleinElement, v: &KleinElement) -> Result<KleinElement> {
        let twisted = v
            .alpha_exp
            .checked_mul(sign(u.beta_exp))
            .ok_or(AlgebraError::OutOfRange("klein multiply"))?;
        Ok(KleinElement {
            alpha_exp: u
                .alpha_exp
                .checked_add(twisted)
                .ok_or(AlgebraError::OutOfRange("klein multiply"))?,
            beta_exp: u
                .beta_exp
                .checked_add(v.beta_exp)
                .ok_or(AlgebraError::OutOfRange("klein multiply"))?,
        })
    }

    fn invert(&self, u: &KleinElement) -> Result<KleinElement> {
        // (r, s)^-1 = (-(-1)^s r, -s)
        let r = u
            .alpha_exp
            .checked_mul(-sign(u.beta_exp))
            .ok_or(AlgebraError::OutOfRange("klein invert"))?;
        let s = u
            .beta_exp
            .checked_neg()
            .ok_or(AlgebraError::OutOfRange("klein invert"))?;
        Ok(KleinElement::new(r, s))
    }
}

/// `<al, be | al*be*al*be^-1>`.
pub fn klein_presentation() -> Presentation {
    Presentation::new("pi1-klein", &["al", "be"])
        .and_then(|p| p.with_relator("al*be*al*be^-1"))
        .expect("static presentation")
}

/// An endomorphism stored by the images of `al` and `be`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct KleinEndo {
    pub image_alpha: KleinElement,
    pub image_beta: KleinElement,
}

impl KleinEndo {
    /// `al -> al, be -> be`.
    pub const E1: KleinEndo = KleinEndo::new(KleinElement::new(1, 0), KleinElement::new(0, 1));
    /// `al -> al, be -> al*be`.
    pub const E2: KleinEndo = KleinEndo::new(KleinElement::new(1, 0), KleinElement::new(1, 1));
    /// `al -> al, be -> be^-1`.
    pub const E3: KleinEndo = KleinEndo::new(KleinElement::new(1, 0), KleinElement::new(0, -1));
    /// `al -> al, be -> al*be^-1`.
    pub const E4: KleinEndo = KleinEndo::new(KleinElement::new(1, 0), KleinElement::new(1, -1));

    /// Representatives of the four mapping classes of the Klein bottle.
    pub const MAPPING_CLASSES: [KleinEndo; 4] = [Self::E1, Self::E2, Self::E3, Self::E4];
    pub const NAMES: [&'static str; 4] = ["E1", "E2", "E3", "E4"];

    pub const fn new(image_alpha: KleinElement, image_beta: KleinElement) -> Self {
        KleinEndo {
            image_alpha,
            image_beta,
        }
    }

    pub fn apply(&self, u: &KleinElement) -> Result<KleinElement> {
        let g = KleinGroup;
        let a = g.pow(&self.image_alpha, u.alpha_exp)?;
        let b = g.pow(&self.image_beta, u.beta_exp)?;
        g.multiply(&a, &b)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &KleinEndo) -> Result<KleinEndo> {
        Ok(KleinEndo {
            image_alpha: self.apply(&other.image_alpha)?,
            image_beta: self.apply(&other.image_beta)?,
        })
    }

    /// Image of the defining relator `al be al be^-1`.
    pub fn relator_image(&self) -> Result<KleinElement> {
        let g = KleinGroup;
        let (a, b) = (&self.image_alpha, &self.image_beta);
        g.product([a, b, a, &g.invert(b)?])
    }

    pub fn verify(&self) -> bool {
        matches!(self.relator_image(), Ok(e) if e == KleinElement::IDENTITY)
    }

    pub fn to_hom(&self) -> GroupHom<KleinGroup> {
        GroupHom::new(
            klein_presentation(),
            KleinGroup,
            vec![("al", self.image_alpha), ("be", self.image_beta)],
        )
        .expect("generators exist")
    }

    pub fn verify_hom(&self) -> Result<HomReport> {
        self.to_hom().verify()
    }

    /// True when `self = c_g ∘ other` for some inner automorphism `c_g`.
    ///
    /// Conjugating `(r, s)` by `(p, q)` gives `((1 - (-1)^s) p + (-1)^q r, s)`,
    /// so it suffices to try both signs `(-1)^q` and solve for `p`.
    pub fn same_mapping_class(&self, other: &KleinEndo) -> bool {
        let pairs = [
            (self.image_alpha, other.image_alpha),
            (self.image_beta, other.image_beta),
        ];
        [1i64, -1].iter().any(|&eps| {
            let mut shift: Option<i128> = None;
            pairs.iter().all(|(mine, theirs)| {
                if mine.beta_exp != theirs.beta_exp {
                    return false;
                }
                let diff = mine.alpha_exp as i128 - eps as i128 * theirs.alpha_exp as i128;
                if theirs.beta_exp % 2 == 0 {
                    diff == 0
                } else if diff % 2 != 0 {
                    false
                } else {
                    match shift {
                        None => {
                            shift = Some(diff / 2);
                            true
                        }
                        Some(p) => p == diff / 2,
                    }
                }
            })
        })
    }

    /// Index into [`KleinEndo::MAPPING_CLASSES`] of the class containing `self`.
    pub fn mapping_class(&self) -> Option<usize> {
        Self::MAPPING_CLASSES
            .iter()
            .position(|e| self.same_mapping_class(e))
    }
}

impl fmt::Display for KleinEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "al -> {}, be -> {}", self.image_alpha, self.image_beta)
    }
}

/// Composition table of the four mapping classes, entries are class indices.
pub fn mapping_class_table() -> Result<[[usize; 4]; 4]> {
    let mut table = [[0usize; 4]; 4];
    for (i, e) in KleinEndo::MAPPING_CLASSES.iter().enumerate() {
        for (j, f) in KleinEndo::MAPPING_CLASSES.iter().enumerate() {
            let c = e.compose(f)?;
            table[i][j] = c.mapping_class().ok_or_else(|| {
                AlgebraError::Domain(format!("composite {c} is not one of the four classes"))
            })?;
        }
    }
    Ok(table)
}
