//! Cohomological dimension and virtual cohomological dimension of surface
//! braid groups and mapping class groups with marked points.
//!
//! Exact values and upper bounds are separate answers; a bound is never
//! reported as an equality.

use std::fmt;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::exec::Execution;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SurfaceKind {
    Orientable,
    Nonorientable,
}

/// A closed surface with `punctures` marked points. Orientable genus 0 is
/// the sphere, 1 the torus; non-orientable genus 1 is the projective plane,
/// 2 the Klein bottle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SurfaceSpec {
    pub kind: SurfaceKind,
    pub genus: u32,
    pub punctures: u32,
}

impl SurfaceSpec {
    pub fn orientable(genus: u32, punctures: u32) -> Self {
        SurfaceSpec {
            kind: SurfaceKind::Orientable,
            genus,
            punctures,
        }
    }

    /// Non-orientable genus must be at least 1.
    pub fn nonorientable(genus: u32, punctures: u32) -> Result<Self> {
        if genus == 0 {
            return Err(AlgebraError::Domain(
                "non-orientable genus counts projective planes and must be >= 1".into(),
            ));
        }
        Ok(SurfaceSpec {
            kind: SurfaceKind::Nonorientable,
            genus,
            punctures,
        })
    }

    pub fn sphere(punctures: u32) -> Self {
        Self::orientable(0, punctures)
    }

    pub fn torus(punctures: u32) -> Self {
        Self::orientable(1, punctures)
    }

    pub fn projective_plane(punctures: u32) -> Self {
        Self::nonorientable(1, punctures).expect("genus 1")
    }

    pub fn klein_bottle(punctures: u32) -> Self {
        Self::nonorientable(2, punctures).expect("genus 2")
    }

    /// Parses `orientable|S`, `nonorientable|N`, `sphere`, `torus`,
    /// `projective-plane|rp2`, `klein-bottle|klein`. Named surfaces fix
    /// the genus and reject a conflicting one.
    pub fn from_name(name: &str, genus: Option<u32>, punctures: u32) -> Result<Self> {
        let named = |fixed: u32, spec: SurfaceSpec| match genus {
            Some(g) if g != fixed => Err(AlgebraError::Domain(format!(
                "surface `{name}` has genus {fixed}, got {g}"
            ))),
            _ => Ok(spec),
        };
        let need =
            || genus.ok_or_else(|| AlgebraError::Domain(format!("surface `{name}` needs a genus")));
        match name {
            "orientable" | "S" => Ok(Self::orientable(need()?, punctures)),
            "nonorientable" | "N" => Self::nonorientable(need()?, punctures),
            "sphere" => named(0, Self::sphere(punctures)),
            "torus" => named(1, Self::torus(punctures)),
            "projective-plane" | "rp2" => named(1, Self::projective_plane(punctures)),
            "klein-bottle" | "klein" => named(2, Self::klein_bottle(punctures)),
            _ => Err(AlgebraError::Domain(format!("unknown surface `{name}`"))),
        }
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match (self.kind, self.genus) {
            (SurfaceKind::Orientable, 0) => "S^2".to_string(),
            (SurfaceKind::Orientable, 1) => "T".to_string(),
            (SurfaceKind::Orientable, g) => format!("S_{g}"),
            (SurfaceKind::Nonorientable, 1) => "RP^2".to_string(),
            (SurfaceKind::Nonorientable, 2) => "K".to_string(),
            (SurfaceKind::Nonorientable, g) => format!("N_{g}"),
        };
        write!(f, "{base}; k={}", self.punctures)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupKind {
    Braid,
    PureBraid,
    Mcg,
    Pmcg,
}

impl GroupKind {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "braid" | "B" => Ok(GroupKind::Braid),
            "pure-braid" | "pure" | "P" => Ok(GroupKind::PureBraid),
            "mcg" => Ok(GroupKind::Mcg),
            "pmcg" => Ok(GroupKind::Pmcg),
            _ => Err(AlgebraError::Domain(format!("unknown group `{name}`"))),
        }
    }

    fn is_braid(self) -> bool {
        matches!(self, GroupKind::Braid | GroupKind::PureBraid)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Cd,
    Vcd,
}

impl Quantity {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "cd" => Ok(Quantity::Cd),
            "vcd" => Ok(Quantity::Vcd),
            _ => Err(AlgebraError::Domain(format!("unknown quantity `{name}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DimValue {
    Exact { value: i64 },
    AtMost { bound: i64 },
    Undefined { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DimAnswer {
    pub surface: SurfaceSpec,
    pub group: GroupKind,
    pub quantity: Quantity,
    pub value: DimValue,
}

impl DimAnswer {
    pub fn exact(&self) -> Option<i64> {
        match self.value {
            DimValue::Exact { value } => Some(value),
            _ => None,
        }
    }

    pub fn bound(&self) -> Option<i64> {
        match self.value {
            DimValue::AtMost { bound } => Some(bound),
            _ => None,
        }
    }

    pub fn is_undefined(&self) -> bool {
        matches!(self.value, DimValue::Undefined { .. })
    }
}

impl fmt::Display for DimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimValue::Exact { value } => write!(f, "= {value}"),
            DimValue::AtMost { bound } => write!(f, "<= {bound}"),
            DimValue::Undefined { reason } => write!(f, "undefined ({reason})"),
        }
    }
}

fn undefined(reason: impl Into<String>) -> DimValue {
    DimValue::Undefined {
        reason: reason.into(),
    }
}

fn braid_value(s: &SurfaceSpec, q: Quantity) -> DimValue {
    let k = s.punctures as i64;
    if k < 1 {
        return undefined("requires k≥1");
    }
    let g = s.genus;
    let aspherical = match s.kind {
        SurfaceKind::Orientable => g >= 1,
        SurfaceKind::Nonorientable => g >= 2,
    };
    if aspherical {
        // Torsion-free, so vcd coincides with cd.
        return DimValue::Exact { value: k + 1 };
    }
    if q == Quantity::Cd {
        return undefined("braid groups of S^2 and RP^2 have torsion; only vcd is tabulated");
    }
    match s.kind {
        SurfaceKind::Orientable if k >= 4 => DimValue::Exact { value: k - 3 },
        SurfaceKind::Orientable => undefined("requires k≥4"),
        SurfaceKind::Nonorientable if k >= 3 => DimValue::Exact { value: k - 2 },
        SurfaceKind::Nonorientable => undefined("requires k≥3"),
    }
}

fn mcg_value(s: &SurfaceSpec, q: Quantity) -> DimValue {
    if q == Quantity::Cd {
        return undefined("only vcd is tabulated for mapping class groups");
    }
    let (g, k) = (s.genus as i64, s.punctures as i64);
    match s.kind {
        SurfaceKind::Orientable => {
            if 2 * g + k <= 2 {
                undefined("requires 2g+k>2")
            } else if k == 0 {
                DimValue::Exact { value: 4 * g - 5 }
            } else if g == 0 {
                DimValue::Exact { value: k - 3 }
            } else {
                DimValue::Exact {
                    value: 4 * g + k - 4,
                }
            }
        }
        SurfaceKind::Nonorientable => match g {
            1 if k >= 3 => DimValue::Exact { value: k - 2 },
            1 => undefined("requires k≥3"),
            2 if k > 0 => DimValue::Exact { value: k },
            2 => undefined("requires k>0"),
            _ if k > 0 => DimValue::AtMost {
                bound: 4 * g + k - 8,
            },
            _ => DimValue::AtMost { bound: 4 * g - 9 },
        },
    }
}

/// Tabulated cd/vcd. Braid and pure braid groups (and MCG and PMCG) share
/// their answers since they differ by a finite-index subgroup.
pub fn dim_query(surface: SurfaceSpec, group: GroupKind, quantity: Quantity) -> DimAnswer {
    let value = if group.is_braid() {
        braid_value(&surface, quantity)
    } else {
        mcg_value(&surface, quantity)
    };
    DimAnswer {
        surface,
        group,
        quantity,
        value,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub max_genus: u32,
    pub max_punctures: u32,
    pub checks: usize,
    pub failures: Vec<SweepCheck>,
    pub pass: bool,
}

fn sweep_point(g: u32, k: u32) -> Vec<SweepCheck> {
    let mut out = Vec::new();
    let mut check =
        |name: String, pass: bool, detail: String| out.push(SweepCheck { name, pass, detail });
    let (gi, ki) = (g as i64, k as i64);
    let vcd = Quantity::Vcd;

    // Pure/full agreement on every surface at (g, k).
    let mut surfaces = vec![SurfaceSpec::orientable(g, k), SurfaceSpec::sphere(k)];
    surfaces.push(SurfaceSpec::nonorientable(g, k).expect("g >= 1"));
    for s in &surfaces {
        for q in [Quantity::Cd, Quantity::Vcd] {
            let b = dim_query(*s, GroupKind::Braid, q).value;
            let p = dim_query(*s, GroupKind::PureBraid, q).value;
            check(
                format!("braid=pure {s} {q:?}"),
                b == p,
                format!("{b} vs {p}"),
            );
            let m = dim_query(*s, GroupKind::Mcg, q).value;
            let pm = dim_query(*s, GroupKind::Pmcg, q).value;
            check(
                format!("mcg=pmcg {s} {q:?}"),
                m == pm,
                format!("{m} vs {pm}"),
            );
        }
    }

    // cd of braid groups of S_g and N_{g+1} agree and equal k+1.
    let so = dim_query(
        SurfaceSpec::orientable(g, k),
        GroupKind::Braid,
        Quantity::Cd,
    );
    let sn = dim_query(
        SurfaceSpec::nonorientable(g + 1, k).expect("g+1 >= 2"),
        GroupKind::Braid,
        Quantity::Cd,
    );
    check(
        format!("cd B_{k}(S_{g}) = cd B_{k}(N_{}) = k+1", g + 1),
        so.exact() == Some(ki + 1) && sn.exact() == Some(ki + 1),
        format!("{} / {}", so.value, sn.value),
    );

    // The non-orientable bound is the braid cd plus the closed-surface bound.
    if g >= 3 {
        let bound = dim_query(
            SurfaceSpec::nonorientable(g, k).unwrap(),
            GroupKind::Mcg,
            vcd,
        );
        let cd = dim_query(
            SurfaceSpec::nonorientable(g, k).unwrap(),
            GroupKind::Braid,
            Quantity::Cd,
        );
        let closed = dim_query(
            SurfaceSpec::nonorientable(g, 0).unwrap(),
            GroupKind::Mcg,
            vcd,
        );
        let sum = cd.exact().zip(closed.bound()).map(|(a, b)| a + b);
        check(
            format!("vcd MCG(N_{g};{k}) bound = cd B_k + closed bound"),
            bound.bound().is_some() && bound.bound() == sum && sum == Some(4 * gi + ki - 8),
            format!("{} vs {sum:?}", bound.value),
        );
    }

    // Harer's g=0 row agrees with the sphere entry.
    if k >= 4 {
        let sphere = dim_query(SurfaceSpec::sphere(k), GroupKind::Mcg, vcd);
        let braid = dim_query(SurfaceSpec::sphere(k), GroupKind::Braid, vcd);
        check(
            format!("vcd MCG(S^2;{k}) = vcd B_{k}(S^2) = k-3"),
            sphere.exact() == Some(ki - 3) && braid.exact() == Some(ki - 3),
            format!("{} / {}", sphere.value, braid.value),
        );
    }
    if k >= 3 {
        let rp = dim_query(SurfaceSpec::projective_plane(k), GroupKind::Mcg, vcd);
        let braid = dim_query(SurfaceSpec::projective_plane(k), GroupKind::Braid, vcd);
        check(
            format!("vcd MCG(RP^2;{k}) = vcd B_{k}(RP^2) = k-2"),
            rp.exact() == Some(ki - 2) && braid.exact() == Some(ki - 2),
            format!("{} / {}", rp.value, braid.value),
        );
    }

    // Closed orientable surfaces.
    if g >= 2 {
        let closed = dim_query(SurfaceSpec::orientable(g, 0), GroupKind::Mcg, vcd);
        check(
            format!("vcd MCG(S_{g}) = 4g-5"),
            closed.exact() == Some(4 * gi - 5),
            closed.value.to_string(),
        );
    }

    let klein = dim_query(SurfaceSpec::klein_bottle(k), GroupKind::Mcg, vcd);
    check(
        format!("vcd MCG(K;{k}) = k"),
        klein.exact() == Some(ki),
        klein.value.to_string(),
    );
    out
}

/// Internal coherence of the table over `1 <= g <= max_genus`,
/// `1 <= k <= max_punctures`.
pub fn consistency_sweep_with(max_genus: u32, max_punctures: u32, exec: Execution) -> SweepReport {
    let grid: Vec<(u32, u32)> = (1..=max_genus)
        .flat_map(|g| (1..=max_punctures).map(move |k| (g, k)))
        .collect();
    let results = exec.map(&grid, |&(g, k)| sweep_point(g, k));
    let checks: Vec<SweepCheck> = results.into_iter().flatten().collect();
    let failures: Vec<SweepCheck> = checks.iter().filter(|c| !c.pass).cloned().collect();
    SweepReport {
        max_genus,
        max_punctures,
        checks: checks.len(),
        pass: failures.is_empty(),
        failures,
    }
}

pub fn consistency_sweep() -> SweepReport {
    consistency_sweep_with(20, 20, Execution::default())
}
