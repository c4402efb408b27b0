//! Coinvariants `N^Ab / H` of the fibre group of the map forgetting the
//! last point of a pure braid, where `N` is the fundamental group of the
//! surface with `k` punctures and `H` is spanned by the `x - g(x)`.
//!
//! The basis of `N^Ab` and the relation rows are produced from `(g, k)` by
//! listing, for every coset representative acting nontrivially, the class
//! its commutator projects to.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use super::snf::{AbelianGroup, IntMatrix};
use crate::error::{AlgebraError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientability {
    Orientable,
    Nonorientable,
}

impl fmt::Display for Orientability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientability::Orientable => "orientable",
            Orientability::Nonorientable => "nonorientable",
        })
    }
}

/// One relation of `H`, with the commutator it comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NabRelation {
    pub source: String,
    pub row: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NabReport {
    pub surface: Orientability,
    pub genus: u32,
    pub punctures: u32,
    pub basis: Vec<String>,
    pub relations: Vec<NabRelation>,
    pub quotient: AbelianGroup,
    pub expected: AbelianGroup,
    pub matches_expected: bool,
    /// Rank of `H^1` of the punctured fibre as stated alongside the basis.
    pub stated_rank: u32,
    pub notes: Vec<String>,
}

fn check_domain(g: u32, k: u32) -> Result<()> {
    if g < 1 || k < 1 {
        return Err(AlgebraError::Domain(format!(
            "requires g >= 1 and k >= 1 (got g = {g}, k = {k})"
        )));
    }
    Ok(())
}

fn unit_row(len: usize, at: usize, value: i64) -> Vec<i64> {
    let mut row = vec![0; len];
    row[at] = value;
    row
}

fn quotient(basis_len: usize, relations: &[NabRelation]) -> Result<AbelianGroup> {
    let rows: Vec<Vec<BigInt>> = relations
        .iter()
        .map(|r| r.row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let m = IntMatrix::from_rows(rows, basis_len)?;
    AbelianGroup::presented(basis_len, &m)
}

fn orientable(g: u32, k: u32) -> Result<NabReport> {
    check_domain(g, k)?;
    let p = k + 1;
    let mut basis = Vec::new();
    for r in 1..=g {
        basis.push(format!("rho_{p}_{r}"));
    }
    for r in 1..=g {
        basis.push(format!("tau_{p}_{r}"));
    }
    for i in 1..k {
        basis.push(format!("C_{i}_{p}"));
    }
    let c_index = |m: u32| (2 * g + m - 1) as usize;
    let mut relations = Vec::new();
    for m in 1..k {
        for r in 1..=g {
            relations.push(NabRelation {
                source: format!("[rho_{m}_{r}, tau_{p}_{r}]"),
                row: unit_row(basis.len(), c_index(m), 1),
            });
            relations.push(NabRelation {
                source: format!("[tau_{m}_{r}, rho_{p}_{r}]"),
                row: unit_row(basis.len(), c_index(m), 1),
            });
        }
    }
    let q = quotient(basis.len(), &relations)?;
    let expected = AbelianGroup::free(2 * g as usize);
    Ok(NabReport {
        surface: Orientability::Orientable,
        genus: g,
        punctures: k,
        matches_expected: q == expected,
        quotient: q,
        expected,
        stated_rank: 2 * g + k - 1,
        notes: Vec::new(),
        basis,
        relations,
    })
}

fn nonorientable(g: u32, k: u32) -> Result<NabReport> {
    check_domain(g, k)?;
    let p = k + 1;
    let mut basis = Vec::new();
    for r in 1..=g {
        basis.push(format!("rho_{p}_{r}"));
    }
    for i in 1..k {
        basis.push(format!("B_{i}_{p}"));
    }
    let b_index = |m: u32| (g + m - 1) as usize;
    let mut relations = Vec::new();
    for m in 1..k {
        for r in 1..=g {
            relations.push(NabRelation {
                source: format!("[rho_{m}_{r}, rho_{p}_{r}]"),
                row: unit_row(basis.len(), b_index(m), -1),
            });
        }
    }
    let mut surface = vec![0i64; basis.len()];
    for x in surface.iter_mut().take(g as usize) {
        *x = 2;
    }
    relations.push(NabRelation {
        source: format!("surface relation at point {p}"),
        row: surface,
    });
    let q = quotient(basis.len(), &relations)?;
    let expected = AbelianGroup::new((g - 1) as usize, &[2]);
    let stated_rank = g + k;
    let mut notes = Vec::new();
    if stated_rank as usize != basis.len() {
        notes.push(format!(
            "stated H^1 rank g+k = {stated_rank} differs from the basis size g+k-1 = {}",
            basis.len()
        ));
    }
    Ok(NabReport {
        surface: Orientability::Nonorientable,
        genus: g,
        punctures: k,
        matches_expected: q == expected,
        quotient: q,
        expected,
        stated_rank,
        notes,
        basis,
        relations,
    })
}

pub fn nab_report(surface: Orientability, g: u32, k: u32) -> Result<NabReport> {
    match surface {
        Orientability::Orientable => orientable(g, k),
        Orientability::Nonorientable => nonorientable(g, k),
    }
}

pub fn nab_quotient_orientable(g: u32, k: u32) -> Result<AbelianGroup> {
    Ok(orientable(g, k)?.quotient)
}

pub fn nab_quotient_nonorientable(g: u32, k: u32) -> Result<AbelianGroup> {
    Ok(nonorientable(g, k)?.quotient)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientable_examples() {
        assert_eq!(
            nab_quotient_orientable(1, 1).unwrap(),
            AbelianGroup::free(2)
        );
        let r = nab_report(Orientability::Orientable, 2, 3).unwrap();
        assert_eq!(r.basis.len(), 6);
        assert_eq!(r.stated_rank, 6);
        assert_eq!(r.quotient, AbelianGroup::free(4));
        assert!(r.matches_expected);
        let r = nab_report(Orientability::Orientable, 3, 1).unwrap();
        assert!(r.relations.is_empty());
        assert_eq!(r.quotient, AbelianGroup::free(6));
    }

    #[test]
    fn nonorientable_examples() {
        assert_eq!(
            nab_quotient_nonorientable(2, 3).unwrap(),
            AbelianGroup::new(1, &[2])
        );
        assert_eq!(
            nab_quotient_nonorientable(1, 1).unwrap(),
            AbelianGroup::new(0, &[2])
        );
        assert_eq!(
            nab_quotient_nonorientable(3, 2).unwrap(),
            AbelianGroup::new(2, &[2])
        );
        let r = nab_report(Orientability::Nonorientable, 2, 3).unwrap();
        assert_eq!(r.basis, vec!["rho_4_1", "rho_4_2", "B_1_4", "B_2_4"]);
        assert_eq!(r.notes.len(), 1);
    }

    #[test]
    fn domain_errors() {
        assert!(nab_quotient_orientable(0, 1).is_err());
        assert!(nab_quotient_nonorientable(1, 0).is_err());
    }
}
