//! The presentations of `P2(T)` and `B2(T)` as homomorphisms into the
//! normal-form engines. A presentation holds in the engine exactly when
//! every relator evaluates to the identity.

use serde::Serialize;

use super::element::{B2tElement, B2tGroup, P2tElement, P2tGroup};
use crate::error::Result;
use crate::word::{GroupHom, HomReport, Presentation};

fn build(name: &str, generators: &[&str], relations: &[(&str, &str)]) -> Presentation {
    let mut p = Presentation::new(name, generators).expect("static alphabet");
    for (lhs, rhs) in relations {
        p = if *rhs == "1" {
            p.with_relator(lhs)
        } else {
            p.with_relation(lhs, rhs)
        }
        .expect("static relation");
    }
    p
}

fn rho_images() -> Vec<(&'static str, P2tElement)> {
    let p = |t: &str| P2tElement::parse(t).expect("static word");
    vec![
        ("B12", p("B")),
        ("r11", p("x")),
        ("r12", p("y")),
        ("r21", p("B*x^-1*a")),
        ("r22", p("B*y^-1*b")),
    ]
}

const RHO_GENERATORS: [&str; 5] = ["B12", "r11", "r12", "r21", "r22"];

/// The five-generator presentation on `B12, r11, r12, r21, r22`, mapped by
/// `r11 -> x`, `r12 -> y`, `r21 -> B x^-1 a`, `r22 -> B y^-1 b`, `B12 -> B`.
pub fn p2t_rho_hom() -> GroupHom<P2tGroup> {
    let pres = build(
        "p2t-rho",
        &RHO_GENERATORS,
        &[
            ("r11*r12^-1*r11^-1*r12", "B12"),
            ("r21*r22^-1*r21^-1*r22", "B12"),
            ("r21*r11*r21^-1", "B12*r11*B12^-1"),
            ("r21*r12*r21^-1", "B12*r12*r11^-1*B12*r11*B12^-1"),
            ("r22*r11*r22^-1", "r11*B12^-1"),
            ("r22*r12*r22^-1", "B12*r12*B12^-1"),
        ],
    );
    GroupHom::new(pres, P2tGroup, rho_images()).expect("generators exist")
}

fn useful_presentation() -> Presentation {
    build(
        "p2t-rho-consequences",
        &RHO_GENERATORS,
        &[
            ("r21*B12*r21^-1", "B12*r11^-1*B12*r11*B12^-1"),
            ("r22*B12*r22^-1", "B12*r12^-1*B12*r12*B12^-1"),
        ],
    )
}

/// Two derived conjugation relations for `B12` in the `rho` generators.
pub fn p2t_useful_relations_hom() -> GroupHom<P2tGroup> {
    GroupHom::new(useful_presentation(), P2tGroup, rho_images()).expect("generators exist")
}

/// The change of variables `d11 = r11`, `t11 = r12`, `d21 = B12^-1 r21`,
/// `t21 = B12^-1 r22`, mapped by `d11 -> x`, `t11 -> y`, `d21 -> x^-1 a`,
/// `t21 -> y^-1 b`.
pub fn p2t_delta_tau_hom() -> GroupHom<P2tGroup> {
    let pres = build(
        "p2t-delta-tau",
        &["B12", "d11", "t11", "d21", "t21"],
        &[
            ("d11*t11^-1*d11^-1*t11", "B12"),
            // [B12 d21, t21^-1 B12^-1]
            ("B12*d21*t21^-1*B12^-1*d21^-1*B12^-1*B12*t21", "B12"),
            ("d21*d11*d21^-1*d11^-1", "1"),
            ("t21*t11*t21^-1*t11^-1", "1"),
            ("d21*t11*d21^-1", "t11*d11^-1*B12*d11"),
            ("t21*d11*t21^-1", "B12^-1*d11"),
        ],
    );
    let p = |t: &str| P2tElement::parse(t).expect("static word");
    GroupHom::new(
        pres,
        P2tGroup,
        vec![
            ("B12", p("B")),
            ("d11", p("x")),
            ("t11", p("y")),
            ("d21", p("x^-1*a")),
            ("t21", p("y^-1*b")),
        ],
    )
    .expect("generators exist")
}

/// `<x, y, a, b | a, b central>` mapped identically.
pub fn p2t_xyab_hom() -> GroupHom<P2tGroup> {
    let pres = build(
        "p2t-xyab",
        &["x", "y", "a", "b"],
        &[
            ("a*b*a^-1*b^-1", "1"),
            ("a*x*a^-1*x^-1", "1"),
            ("b*x*b^-1*x^-1", "1"),
            ("a*y*a^-1*y^-1", "1"),
            ("b*y*b^-1*y^-1", "1"),
        ],
    );
    let p = |t: &str| P2tElement::parse(t).expect("static word");
    GroupHom::new(
        pres,
        P2tGroup,
        vec![("x", p("x")), ("y", p("y")), ("a", p("a")), ("b", p("b"))],
    )
    .expect("generators exist")
}

/// The presentation of `B2(T)` on `B, s, x, y, a, b`, mapped identically.
pub fn b2t_full_hom() -> GroupHom<B2tGroup> {
    let pres = build(
        "b2t",
        &["B", "s", "x", "y", "a", "b"],
        &[
            ("s^2", "B"),
            ("x*y^-1*x^-1*y", "B"),
            ("a*b^-1*a^-1*b", "1"),
            ("a*x*a^-1", "x"),
            ("a*y*a^-1", "y"),
            ("b*x*b^-1", "x"),
            ("b*y*b^-1", "y"),
            ("s*x*s^-1", "B*x^-1*a"),
            ("s*y*s^-1", "B*y^-1*b"),
            ("s*a*s^-1", "a"),
            ("s*b*s^-1", "b"),
        ],
    );
    GroupHom::new(
        pres,
        B2tGroup,
        vec![
            ("B", B2tElement::big_b()),
            ("s", B2tElement::sigma()),
            ("x", B2tElement::x()),
            ("y", B2tElement::y()),
            ("a", B2tElement::a()),
            ("b", B2tElement::b()),
        ],
    )
    .expect("generators exist")
}

/// Per-presentation relator reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresentationReport {
    pub sections: Vec<HomReport>,
    pub pass: bool,
}

impl PresentationReport {
    fn from_sections(sections: Vec<HomReport>) -> Self {
        let pass = sections.iter().all(|s| s.pass);
        PresentationReport { sections, pass }
    }

    pub fn relator_count(&self) -> usize {
        self.sections.iter().map(|s| s.checks.len()).sum()
    }
}

/// Checks the `rho` presentation of `P2(T)`, its two derived relations, the
/// `delta/tau` presentation and the `x, y, a, b` presentation.
pub fn verify_presentation_a1() -> Result<PresentationReport> {
    Ok(PresentationReport::from_sections(vec![
        p2t_rho_hom().verify()?,
        p2t_useful_relations_hom().verify()?,
        p2t_delta_tau_hom().verify()?,
        p2t_xyab_hom().verify()?,
    ]))
}

/// Checks the presentation of `B2(T)` and, inside `B2(T)`, the two derived
/// `P2(T)` relations.
pub fn verify_presentation_a2() -> Result<PresentationReport> {
    let embedded = GroupHom::new(
        useful_presentation(),
        B2tGroup,
        rho_images()
            .into_iter()
            .map(|(n, e)| (n, B2tElement::from(e)))
            .collect(),
    )?;
    Ok(PresentationReport::from_sections(vec![
        b2t_full_hom().verify()?,
        embedded.verify()?,
    ]))
}

#[cfg(test)]
fn b2t_relation_holds(lhs: &str, rhs: &str) -> bool {
    use crate::group::GroupEngine;
    let g = B2tGroup;
    let l = B2tElement::parse(lhs).unwrap();
    let r = B2tElement::parse(rhs).unwrap();
    g.is_identity(&g.multiply(&l, &g.invert(&r).unwrap()).unwrap())
}
