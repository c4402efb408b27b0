//! Configurations on the Klein bottle lifted to the torus `(R/Z)^2` under
//! the deck involution `iota(u, v) = (u + 1/2, -v)`. The Klein bottle is
//! represented by the fundamental domain `[0, 1/2) × [0, 1)`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{CheckedAdd, CheckedSub, One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{AlgebraError, ParseError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusPoint {
    pub u: Rational64,
    pub v: Rational64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KleinPoint {
    pub u: Rational64,
    pub v: Rational64,
}

fn half() -> Rational64 {
    Rational64::new(1, 2)
}

fn in_unit_interval(x: &Rational64) -> bool {
    *x >= Rational64::zero() && *x < Rational64::one()
}

fn frac(x: Rational64) -> Result<Rational64> {
    x.checked_sub(&x.floor())
        .ok_or(AlgebraError::OutOfRange("rational reduction mod 1"))
}

fn fmt_pair(f: &mut fmt::Formatter<'_>, u: &Rational64, v: &Rational64) -> fmt::Result {
    write!(f, "{u},{v}")
}

impl TorusPoint {
    pub fn new(u: Rational64, v: Rational64) -> Result<Self> {
        let p = TorusPoint { u, v };
        if in_unit_interval(&u) && in_unit_interval(&v) {
            Ok(p)
        } else {
            Err(AlgebraError::OutOfDomain(p.to_string()))
        }
    }
}

impl KleinPoint {
    pub fn new(u: Rational64, v: Rational64) -> Result<Self> {
        let p = KleinPoint { u, v };
        if u >= Rational64::zero() && u < half() && in_unit_interval(&v) {
            Ok(p)
        } else {
            Err(AlgebraError::OutOfDomain(p.to_string()))
        }
    }

    pub fn as_torus_point(&self) -> TorusPoint {
        TorusPoint {
            u: self.u,
            v: self.v,
        }
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_pair(f, &self.u, &self.v)
    }
}

impl fmt::Display for KleinPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_pair(f, &self.u, &self.v)
    }
}

impl Serialize for TorusPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.u.to_string(), self.v.to_string()].serialize(s)
    }
}

impl Serialize for KleinPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.u.to_string(), self.v.to_string()].serialize(s)
    }
}

/// The deck transformation of the cover.
pub fn iota(p: &TorusPoint) -> Result<TorusPoint> {
    let u =
        p.u.checked_add(&half())
            .ok_or(AlgebraError::OutOfRange("deck involution"))?;
    Ok(TorusPoint {
        u: frac(u)?,
        v: frac(-p.v)?,
    })
}

/// Full preimage of a configuration: each `p` followed by `iota(p)`.
pub fn lift_configuration(points: &[KleinPoint]) -> Result<Vec<TorusPoint>> {
    let mut seen = HashSet::with_capacity(points.len());
    let mut out = Vec::with_capacity(2 * points.len());
    for p in points {
        let checked = KleinPoint::new(p.u, p.v)?;
        if !seen.insert(checked) {
            return Err(AlgebraError::DuplicatePoint(checked.to_string()));
        }
        let t = checked.as_torus_point();
        out.push(t);
        out.push(iota(&t)?);
    }
    Ok(out)
}

fn parse_rational(text: &str, column: usize) -> Result<Rational64> {
    Rational64::from_str(text.trim())
        .map_err(|e| ParseError::new(column, text, format!("invalid rational: {e}")).into())
}

/// Parses `u,v;u,v;...` with each coordinate `num` or `num/den`.
/// The empty string is the empty configuration.
pub fn parse_points(text: &str) -> Result<Vec<KleinPoint>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut column = 1usize;
    for chunk in text.split(';') {
        let coords: Vec<&str> = chunk.split(',').collect();
        if coords.len() != 2 {
            return Err(ParseError::new(column, chunk, "expected `u,v`").into());
        }
        let u = parse_rational(coords[0], column)?;
        let v = parse_rational(coords[1], column + coords[0].len() + 1)?;
        out.push(KleinPoint::new(u, v)?);
        column += chunk.len() + 1;
    }
    Ok(out)
}
