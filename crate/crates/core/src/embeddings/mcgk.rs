use std::fmt;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::group::GroupEngine;
use crate::klein::{KleinElement, KleinEndo, KleinGroup};

/// Integer 2×2 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct IntMat2(pub [[i64; 2]; 2]);

impl IntMat2 {
    pub const IDENTITY: IntMat2 = IntMat2([[1, 0], [0, 1]]);
    pub const MINUS_IDENTITY: IntMat2 = IntMat2([[-1, 0], [0, -1]]);

    pub fn diag(p: i64, q: i64) -> Self {
        IntMat2([[p, 0], [0, q]])
    }

    pub fn det(&self) -> Result<i64> {
        let [[a, b], [c, d]] = self.0;
        a.checked_mul(d)
            .zip(b.checked_mul(c))
            .and_then(|(ad, bc)| ad.checked_sub(bc))
            .ok_or(AlgebraError::OutOfRange("matrix determinant"))
    }

    pub fn mul(&self, other: &IntMat2) -> Result<IntMat2> {
        let mut out = [[0i64; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut acc = 0i64;
                for k in 0..2 {
                    acc = self.0[i][k]
                        .checked_mul(other.0[k][j])
                        .and_then(|t| acc.checked_add(t))
                        .ok_or(AlgebraError::OutOfRange("matrix product"))?;
                }
                *cell = acc;
            }
        }
        Ok(IntMat2(out))
    }
}

impl fmt::Display for IntMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.0;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

fn lift_data(e: &KleinEndo) -> Result<(i64, i64)> {
    if e.image_alpha.beta_exp != 0 {
        return Err(AlgebraError::NotLiftable(format!(
            "image of al is {}, not a power of al",
            e.image_alpha
        )));
    }
    let v = e.image_beta.beta_exp;
    if v % 2 == 0 {
        return Err(AlgebraError::NotLiftable(format!(
            "be-exponent {v} of the image of be is even"
        )));
    }
    Ok((e.image_alpha.alpha_exp, v))
}

/// The matrices on `pi1(T) = <a, b>` of the two lifts of `e`:
/// `diag(r, v)` and `diag(-r, v)` when `e(al) = al^r`, `e(be) = al^u be^v`, `v` odd.
pub fn lift_matrices(e: &KleinEndo) -> Result<(IntMat2, IntMat2)> {
    let (r, v) = lift_data(e)?;
    let neg_r = r
        .checked_neg()
        .ok_or(AlgebraError::OutOfRange("lift matrix"))?;
    Ok((IntMat2::diag(r, v), IntMat2::diag(neg_r, v)))
}

/// The first lift computed through the cover: `a = al`, `b = be^2`, so its
/// columns are the coordinates of `e(al)` and `e(be^2)` in `<al, be^2> ≅ Z^2`.
pub fn cover_lift_matrix(e: &KleinEndo) -> Result<IntMat2> {
    lift_data(e)?;
    let g = KleinGroup;
    let coords = |k: KleinElement| -> Result<(i64, i64)> {
        if k.beta_exp % 2 != 0 {
            return Err(AlgebraError::NotLiftable(format!(
                "{k} is not in <al, be^2>"
            )));
        }
        Ok((k.alpha_exp, k.beta_exp / 2))
    };
    let a_img = coords(e.apply(&KleinElement::ALPHA)?)?;
    let b_img = coords(e.apply(&g.pow(&KleinElement::BETA, 2)?)?)?;
    Ok(IntMat2([[a_img.0, b_img.0], [a_img.1, b_img.1]]))
}

/// The lift with determinant `+1`, as an element of `SL(2, Z)`.
pub fn induced_sl2(e: &KleinEndo) -> Result<IntMat2> {
    let (first, second) = lift_matrices(e)?;
    let (r, v) = (first.0[0][0], first.0[1][1]);
    if r.abs() != 1 || v.abs() != 1 {
        return Err(AlgebraError::NonAutomorphism(format!(
            "lift diag({r}, {v}) is not invertible over Z"
        )));
    }
    if first.det()? == 1 {
        Ok(first)
    } else {
        Ok(second)
    }
}

/// The mapping classes among `E1..E4` that act trivially on the torus.
pub fn ker_phi_mcgk() -> Result<Vec<(&'static str, KleinEndo)>> {
    let mut out = Vec::new();
    for (name, e) in KleinEndo::NAMES.iter().zip(KleinEndo::MAPPING_CLASSES) {
        if induced_sl2(&e)? == IntMat2::IDENTITY {
            out.push((*name, e));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct McgkRow {
    pub name: &'static str,
    pub image_alpha: String,
    pub image_beta: String,
    pub lifts: [IntMat2; 2],
    pub induced_sl2: IntMat2,
    pub in_kernel: bool,
}

pub fn mcgk_table() -> Result<Vec<McgkRow>> {
    KleinEndo::NAMES
        .iter()
        .zip(KleinEndo::MAPPING_CLASSES)
        .map(|(name, e)| {
            let (l1, l2) = lift_matrices(&e)?;
            let m = induced_sl2(&e)?;
            Ok(McgkRow {
                name,
                image_alpha: e.image_alpha.to_string(),
                image_beta: e.image_beta.to_string(),
                lifts: [l1, l2],
                induced_sl2: m,
                in_kernel: m == IntMat2::IDENTITY,
            })
        })
        .collect()
}
