use std::collections::HashMap;
use std::sync::LazyLock;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::exec::Execution;
use crate::klein::{klein_presentation, KleinElement};
use crate::torus_braid::{commutator_b, f2_alphabet, B2tElement, B2tGroup};
use crate::word::{FreeWord, GroupHom};

static PHI1: LazyLock<GroupHom<B2tGroup>> = LazyLock::new(|| {
    GroupHom::new(
        klein_presentation(),
        B2tGroup,
        vec![
            ("al", B2tElement::parse("a^-1*x^2").expect("static word")),
            ("be", B2tElement::parse("y*s^-1").expect("static word")),
        ],
    )
    .expect("generators exist")
});

/// `al -> a^-1 x^2`, `be -> y s^-1`.
pub fn phi1_hom() -> &'static GroupHom<B2tGroup> {
    &PHI1
}

/// Image of `al^r be^s`, evaluated through the braid group engine.
pub fn phi1(u: &KleinElement) -> Result<B2tElement> {
    let hom = phi1_hom();
    hom.evaluate(&u.to_word(hom.source())?)
}

/// `x^2r a^-r b^(s/2)` for even `s`, `x^2r y a^-r b^((s-1)/2) s^-1` for odd
/// `s`, with `s^-1` rewritten as `B^-1 s`. Uses only free-word arithmetic.
pub fn phi1_closed_form(r: i64, s: i64) -> Result<B2tElement> {
    let f2 = f2_alphabet();
    let two_r = r
        .checked_mul(2)
        .ok_or(AlgebraError::OutOfRange("phi1 closed form"))?;
    let neg_r = r
        .checked_neg()
        .ok_or(AlgebraError::OutOfRange("phi1 closed form"))?;
    let x_part = FreeWord::power(&f2, "x", two_r)?;
    if s % 2 == 0 {
        Ok(B2tElement::new(x_part, neg_r, s / 2, false))
    } else {
        let word = x_part
            .multiply(&FreeWord::generator(&f2, "y")?)?
            .multiply(&commutator_b().invert())?;
        Ok(B2tElement::new(word, neg_r, (s - 1) / 2, true))
    }
}

pub const DEFAULT_MAX_RADIUS: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BallOptions {
    pub max_radius: u32,
    pub execution: Execution,
}

impl Default for BallOptions {
    fn default() -> Self {
        BallOptions {
            max_radius: DEFAULT_MAX_RADIUS,
            execution: Execution::default(),
        }
    }
}

/// Two grid points with the same image.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Collision {
    pub first: (i64, i64),
    pub second: (i64, i64),
    pub image: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BallReport {
    pub radius: u32,
    pub expected: u64,
    pub distinct: u64,
    pub collisions: Vec<Collision>,
    pub pass: bool,
}

/// Injectivity on `|r|, |s| <= radius` with default options.
pub fn certify_injectivity_ball(radius: u32) -> Result<BallReport> {
    certify_injectivity_ball_with(radius, BallOptions::default())
}

/// Computes the image of every `al^r be^s` with `|r|, |s| <= radius` and
/// checks that they are pairwise distinct normal forms.
pub fn certify_injectivity_ball_with(radius: u32, opts: BallOptions) -> Result<BallReport> {
    if radius > opts.max_radius {
        return Err(AlgebraError::Domain(format!(
            "radius {radius} exceeds the configured bound {}",
            opts.max_radius
        )));
    }
    let rr = radius as i64;
    let rows: Vec<i64> = (-rr..=rr).collect();
    let images = opts.execution.map(&rows, |&r| {
        (-rr..=rr)
            .map(|s| phi1(&KleinElement::new(r, s)).map(|img| ((r, s), img)))
            .collect::<Result<Vec<_>>>()
    });

    let side = 2 * radius as u64 + 1;
    let mut seen: HashMap<B2tElement, (i64, i64)> = HashMap::with_capacity((side * side) as usize);
    let mut collisions = Vec::new();
    for row in images {
        for (point, img) in row? {
            if let Some(prev) = seen.get(&img) {
                collisions.push(Collision {
                    first: *prev,
                    second: point,
                    image: img.to_string(),
                });
            } else {
                seen.insert(img, point);
            }
        }
    }
    collisions.sort();
    Ok(BallReport {
        radius,
        expected: side * side,
        distinct: seen.len() as u64,
        pass: collisions.is_empty() && seen.len() as u64 == side * side,
        collisions,
    })
}
