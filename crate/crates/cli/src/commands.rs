use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};
use surfgroups::abelian::{nab_report, smith_normal_form, IntMatrix, Orientability};
use surfgroups::dimensions::{dim_query, GroupKind, Quantity, SurfaceSpec};
use surfgroups::embeddings::{
    certify_injectivity_ball_with, induced_sl2, lift_configuration, lift_matrices, mcgk_table,
    parse_points, phi1, phi1_hom, BallOptions,
};
use surfgroups::klein::{klein_presentation, mapping_class_table};
use surfgroups::sampling::Sampler;
use surfgroups::torus_braid::{
    b2t_full_hom, p2t_delta_tau_hom, p2t_rho_hom, p2t_useful_relations_hom, p2t_xyab_hom,
    verify_presentation_a1, verify_presentation_a2, SigmaConjugation,
};
use surfgroups::word::{
    parse_syllables, Alphabet, GroupHom, HomReport, Presentation, PresentationFile, RewriteSystem,
};
use surfgroups::{
    B2tElement, B2tGroup, Execution, FreeGroup, FreeWord, GroupEngine, KleinElement, KleinEndo,
    KleinGroup, P2tElement, P2tGroup,
};

use crate::output::{CliError, Report};

type Outcome = Result<Report, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    Free,
    Klein,
    P2t,
    B2t,
}

/// An element of one of the four engines.
enum Elem {
    Free(FreeWord),
    Klein(KleinElement),
    P2t(P2tElement),
    B2t(B2tElement),
}

impl Elem {
    fn normal_form(&self) -> String {
        match self {
            Elem::Free(w) => w.to_string(),
            Elem::Klein(k) => k.to_string(),
            Elem::P2t(p) => p.to_string(),
            Elem::B2t(b) => b.to_string(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Elem::Free(w) => json!({
                "group": "free",
                "normal_form": w.to_string(),
                "alphabet": w.alphabet().generators().iter().map(|g| g.name()).collect::<Vec<_>>(),
                "letter_length": w.letter_len(),
            }),
            Elem::Klein(k) => json!({
                "group": "klein",
                "normal_form": k.to_string(),
                "r": k.alpha_exp,
                "s": k.beta_exp,
            }),
            Elem::P2t(p) => json!({
                "group": "p2t",
                "normal_form": p.to_string(),
                "word": p.word.to_string(),
                "m": p.a_exp,
                "n": p.b_exp,
            }),
            Elem::B2t(b) => {
                let j = b.to_json();
                json!({
                    "group": "b2t",
                    "normal_form": j.normal_form,
                    "word": j.word,
                    "m": j.m,
                    "n": j.n,
                    "eps": j.eps,
                })
            }
        }
    }
}

/// Generators named in `words`, in order of first appearance.
fn infer_alphabet(words: &[&str]) -> Result<Arc<Alphabet>, CliError> {
    let mut names: Vec<String> = Vec::new();
    for w in words {
        for syl in parse_syllables(w).map_err(CliError::Parse)? {
            if !names.contains(&syl.name) {
                names.push(syl.name);
            }
        }
    }
    Ok(Alphabet::new(&names)?)
}

fn free_alphabet(explicit: Option<&str>, words: &[&str]) -> Result<Arc<Alphabet>, CliError> {
    match explicit {
        Some(list) => {
            let names: Vec<&str> = list.split(',').map(str::trim).collect();
            Ok(Alphabet::new(&names)?)
        }
        None => infer_alphabet(words),
    }
}

fn parse_elem(
    group: GroupArg,
    alphabet: Option<&Arc<Alphabet>>,
    text: &str,
) -> Result<Elem, CliError> {
    Ok(match group {
        GroupArg::Free => Elem::Free(FreeWord::parse(alphabet.expect("free alphabet"), text)?),
        GroupArg::Klein => Elem::Klein(KleinElement::parse(text)?),
        GroupArg::P2t => Elem::P2t(P2tElement::parse(text)?),
        GroupArg::B2t => Elem::B2t(B2tElement::parse(text)?),
    })
}

fn element_report(op: &str, result: Elem, inputs: Value) -> Report {
    let mut data = result.to_json();
    data["operation"] = json!(op);
    data["inputs"] = inputs;
    Report::new(data, result.normal_form())
}

pub fn nf(group: GroupArg, alphabet: Option<&str>, word: &str) -> Outcome {
    let ab = match group {
        GroupArg::Free => Some(free_alphabet(alphabet, &[word])?),
        _ => None,
    };
    let e = parse_elem(group, ab.as_ref(), word)?;
    Ok(element_report("nf", e, json!([word])))
}

pub fn mul(group: GroupArg, alphabet: Option<&str>, left: &str, right: &str) -> Outcome {
    let ab = match group {
        GroupArg::Free => Some(free_alphabet(alphabet, &[left, right])?),
        _ => None,
    };
    let l = parse_elem(group, ab.as_ref(), left)?;
    let r = parse_elem(group, ab.as_ref(), right)?;
    let product = match (l, r) {
        (Elem::Free(u), Elem::Free(v)) => {
            Elem::Free(FreeGroup::new(ab.clone().unwrap()).multiply(&u, &v)?)
        }
        (Elem::Klein(u), Elem::Klein(v)) => Elem::Klein(KleinGroup.multiply(&u, &v)?),
        (Elem::P2t(u), Elem::P2t(v)) => Elem::P2t(P2tGroup.multiply(&u, &v)?),
        (Elem::B2t(u), Elem::B2t(v)) => Elem::B2t(B2tGroup.multiply(&u, &v)?),
        _ => unreachable!("both operands parsed in the same group"),
    };
    Ok(element_report("mul", product, json!([left, right])))
}

pub fn inv(group: GroupArg, alphabet: Option<&str>, word: &str) -> Outcome {
    let ab = match group {
        GroupArg::Free => Some(free_alphabet(alphabet, &[word])?),
        _ => None,
    };
    let inverse = match parse_elem(group, ab.as_ref(), word)? {
        Elem::Free(u) => Elem::Free(u.invert()),
        Elem::Klein(u) => Elem::Klein(KleinGroup.invert(&u)?),
        Elem::P2t(u) => Elem::P2t(P2tGroup.invert(&u)?),
        Elem::B2t(u) => Elem::B2t(B2tGroup.invert(&u)?),
    };
    Ok(element_report("inv", inverse, json!([word])))
}

fn hom_human(report: &HomReport) -> String {
    let mut out = format!(
        "{}: {}\n",
        report.presentation,
        if report.pass { "pass" } else { "FAIL" }
    );
    for c in &report.checks {
        let _ = writeln!(
            out,
            "  [{}] {} -> {}",
            if c.pass { "ok" } else { "FAIL" },
            c.label,
            c.image
        );
    }
    out
}

fn hom_outcome(report: HomReport) -> Outcome {
    let human = hom_human(&report);
    let pass = report.pass;
    Ok(Report::new(report, human).with_pass(pass))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Builtin {
    Phi1,
    P2tRho,
    P2tUseful,
    P2tDeltaTau,
    P2tXyab,
    B2t,
    E1,
    E2,
    E3,
    E4,
}

fn parse_images(text: &str) -> Result<Vec<(String, String)>, CliError> {
    let mut out = Vec::new();
    for (i, part) in text.split(';').enumerate() {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let Some((g, w)) = part.split_once('=') else {
            return Err(CliError::Domain(format!(
                "image #{} `{part}` is not of the form gen=word",
                i + 1
            )));
        };
        out.push((g.trim().to_string(), w.trim().to_string()));
    }
    Ok(out)
}

fn check_with<E: GroupEngine>(
    pres: Presentation,
    engine: E,
    images: &[(String, String)],
    parse: impl Fn(&str) -> Result<E::Element, CliError>,
) -> Result<HomReport, CliError> {
    let mut parsed = Vec::with_capacity(images.len());
    for (g, w) in images {
        parsed.push((g.as_str(), parse(w)?));
    }
    Ok(GroupHom::new(pres, engine, parsed)?.verify()?)
}

pub fn hom_check(
    builtin: Option<Builtin>,
    presentation: Option<&Path>,
    target: Option<GroupArg>,
    images: Option<&str>,
    alphabet: Option<&str>,
) -> Outcome {
    if let Some(b) = builtin {
        if presentation.is_some() || images.is_some() {
            return Err(CliError::Domain(
                "--builtin cannot be combined with --presentation or --images".into(),
            ));
        }
        let report = match b {
            Builtin::Phi1 => phi1_hom().verify()?,
            Builtin::P2tRho => p2t_rho_hom().verify()?,
            Builtin::P2tUseful => p2t_useful_relations_hom().verify()?,
            Builtin::P2tDeltaTau => p2t_delta_tau_hom().verify()?,
            Builtin::P2tXyab => p2t_xyab_hom().verify()?,
            Builtin::B2t => b2t_full_hom().verify()?,
            Builtin::E1 => KleinEndo::E1.verify_hom()?,
            Builtin::E2 => KleinEndo::E2.verify_hom()?,
            Builtin::E3 => KleinEndo::E3.verify_hom()?,
            Builtin::E4 => KleinEndo::E4.verify_hom()?,
        };
        return hom_outcome(report);
    }
    let (Some(path), Some(target), Some(images)) = (presentation, target, images) else {
        return Err(CliError::Domain(
            "give either --builtin, or all of --presentation, --target and --images".into(),
        ));
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
    let file: PresentationFile = serde_json::from_str(&text).map_err(|e| {
        CliError::Domain(format!("invalid presentation file {}: {e}", path.display()))
    })?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let pres = Presentation::from_file(&name, &file)?;
    let images = parse_images(images)?;
    let report = match target {
        GroupArg::Klein => check_with(pres, KleinGroup, &images, |w| Ok(KleinElement::parse(w)?))?,
        GroupArg::P2t => check_with(pres, P2tGroup, &images, |w| Ok(P2tElement::parse(w)?))?,
        GroupArg::B2t => check_with(pres, B2tGroup, &images, |w| Ok(B2tElement::parse(w)?))?,
        GroupArg::Free => {
            let words: Vec<&str> = images.iter().map(|(_, w)| w.as_str()).collect();
            let ab = free_alphabet(alphabet, &words)?;
            check_with(pres, FreeGroup::new(ab.clone()), &images, |w| {
                Ok(FreeWord::parse(&ab, w)?)
            })?
        }
    };
    hom_outcome(report)
}

pub fn phi1_cmd(word: &str) -> Outcome {
    let u = KleinElement::parse(word)?;
    let img = phi1(&u)?;
    let data = json!({
        "input": word,
        "klein": { "normal_form": u.to_string(), "r": u.alpha_exp, "s": u.beta_exp },
        "image": img.to_json(),
    });
    Ok(Report::new(data, format!("phi1({u}) = {img}")))
}

pub fn ball(radius: u32, max_radius: u32, sequential: bool) -> Outcome {
    let execution = if sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let start = Instant::now();
    let report = certify_injectivity_ball_with(
        radius,
        BallOptions {
            max_radius,
            execution,
        },
    )?;
    let elapsed = start.elapsed();
    let mut human = format!(
        "radius {}: {} of {} images distinct, {} collisions",
        report.radius,
        report.distinct,
        report.expected,
        report.collisions.len()
    );
    for c in report.collisions.iter().take(10) {
        let _ = write!(
            human,
            "\n  {:?} and {:?} both map to {}",
            c.first, c.second, c.image
        );
    }
    let pass = report.pass;
    Ok(Report::new(report, human)
        .with_pass(pass)
        .diagnostic(format!(
            "{:?} execution, {:.1} ms",
            execution.effective(),
            elapsed.as_secs_f64() * 1e3
        )))
}

#[derive(Serialize)]
struct EndoData {
    image_alpha: String,
    image_beta: String,
    endomorphism: bool,
    mapping_class: Option<&'static str>,
    lifts: Option<[surfgroups::embeddings::IntMat2; 2]>,
    induced_sl2: Option<surfgroups::embeddings::IntMat2>,
}

pub fn mcgk(alpha: Option<&str>, beta: Option<&str>) -> Outcome {
    match (alpha, beta) {
        (None, None) => mcgk_table_report(),
        (Some(a), Some(b)) => {
            let e = KleinEndo::new(KleinElement::parse(a)?, KleinElement::parse(b)?);
            let endomorphism = e.verify();
            let lifts = lift_matrices(&e).ok();
            let induced = induced_sl2(&e);
            let mut report_diag = Vec::new();
            if let Err(err) = &induced {
                report_diag.push(err.to_string());
            }
            let data = EndoData {
                image_alpha: e.image_alpha.to_string(),
                image_beta: e.image_beta.to_string(),
                endomorphism,
                mapping_class: e.mapping_class().map(|i| KleinEndo::NAMES[i]),
                lifts: lifts.map(|(p, q)| [p, q]),
                induced_sl2: induced.as_ref().ok().copied(),
            };
            let mut human = format!(
                "al -> {}, be -> {}: {}",
                data.image_alpha,
                data.image_beta,
                if endomorphism {
                    "endomorphism"
                } else {
                    "NOT an endomorphism"
                }
            );
            if let Some(c) = data.mapping_class {
                let _ = write!(human, ", mapping class {c}");
            }
            if let Some([p, q]) = &data.lifts {
                let _ = write!(human, "\n  lifts {p} and {q}");
            }
            if let Some(m) = &data.induced_sl2 {
                let _ = write!(human, "\n  induced {m}");
            }
            let mut r = Report::new(data, human).with_pass(endomorphism);
            for d in report_diag {
                r = r.diagnostic(d);
            }
            Ok(r)
        }
        _ => Err(CliError::Domain("--alpha and --beta go together".into())),
    }
}

fn mcgk_table_report() -> Outcome {
    let rows = mcgk_table()?;
    let table = mapping_class_table()?;
    let names = KleinEndo::NAMES;
    let composition: Vec<Vec<&str>> = table
        .iter()
        .map(|row| row.iter().map(|&c| names[c]).collect())
        .collect();
    let kernel: Vec<&str> = rows
        .iter()
        .filter(|r| r.in_kernel)
        .map(|r| r.name)
        .collect();
    let mut human = String::new();
    for r in &rows {
        let _ = writeln!(
            human,
            "{}: al -> {}, be -> {}; lifts {} / {}; induced {}{}",
            r.name,
            r.image_alpha,
            r.image_beta,
            r.lifts[0],
            r.lifts[1],
            r.induced_sl2,
            if r.in_kernel { " (kernel)" } else { "" }
        );
    }
    let _ = writeln!(human, "composition (row o column):");
    for (name, row) in names.iter().zip(&composition) {
        let _ = writeln!(human, "  {name}: {}", row.join(" "));
    }
    let data = json!({ "rows": rows, "composition": composition, "kernel": kernel });
    Ok(Report::new(data, human))
}

pub fn lift(points: &str) -> Outcome {
    let pts = parse_points(points)?;
    let lifted = lift_configuration(&pts)?;
    let human = lifted
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(";");
    let data = json!({ "k": pts.len(), "points": pts, "lifted": lifted });
    Ok(Report::new(
        data,
        if human.is_empty() {
            "(empty)".into()
        } else {
            human
        },
    ))
}

fn matrix_entry(v: &Value, at: (usize, usize)) -> Result<BigInt, CliError> {
    let bad = || {
        CliError::Domain(format!(
            "matrix entry ({}, {}) is not an integer: {v}",
            at.0, at.1
        ))
    };
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(bad),
        Value::String(s) => s.trim().parse::<BigInt>().map_err(|_| bad()),
        _ => Err(bad()),
    }
}

/// Reads `[[..], [..]]` or `{"rows": [[..]], "cols": n}`; `cols` is only
/// needed for matrices with no rows.
fn read_matrix(path: &Path) -> Result<IntMatrix, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Domain(format!("invalid JSON in {}: {e}", path.display())))?;
    let (rows, cols) = match &value {
        Value::Array(rows) => (rows.clone(), None),
        Value::Object(o) => (
            o.get("rows")
                .and_then(Value::as_array)
                .cloned()
                .ok_or_else(|| CliError::Domain("matrix object needs a `rows` array".into()))?,
            o.get("cols").and_then(Value::as_u64).map(|c| c as usize),
        ),
        _ => return Err(CliError::Domain("matrix must be an array of rows".into())),
    };
    let mut data = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| CliError::Domain(format!("row {i} is not an array")))?;
        data.push(
            row.iter()
                .enumerate()
                .map(|(j, v)| matrix_entry(v, (i, j)))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    let cols = cols.or_else(|| data.first().map(Vec::len)).unwrap_or(0);
    Ok(IntMatrix::from_rows(data, cols)?)
}

pub fn snf(path: &Path, transforms: bool) -> Outcome {
    let m = read_matrix(path)?;
    let f = smith_normal_form(&m, transforms);
    let cokernel = f.cokernel();
    let human = format!(
        "diagonal [{}], cokernel {cokernel}",
        f.diagonal
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    let mut data = serde_json::to_value(&f).expect("serializes");
    data["rank"] = json!(f.rank());
    data["cokernel"] = json!({
        "free_rank": cokernel.free_rank,
        "torsion": serde_json::to_value(&cokernel).expect("serializes")["torsion"],
        "display": cokernel.to_string(),
    });
    Ok(Report::new(data, human))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrientArg {
    Orientable,
    Nonorientable,
}

pub fn nab(surface: OrientArg, g: u32, k: u32) -> Outcome {
    let o = match surface {
        OrientArg::Orientable => Orientability::Orientable,
        OrientArg::Nonorientable => Orientability::Nonorientable,
    };
    let r = nab_report(o, g, k)?;
    let human = format!(
        "{} g={g} k={k}: basis of {} generators, {} relations, quotient {} (expected {})",
        r.surface,
        r.basis.len(),
        r.relations.len(),
        r.quotient,
        r.expected
    );
    let pass = r.matches_expected;
    let notes = r.notes.clone();
    let mut rep = Report::new(r, human).with_pass(pass);
    for n in notes {
        rep = rep.diagnostic(n);
    }
    Ok(rep)
}

pub fn dims(surface: &str, genus: Option<u32>, k: u32, group: &str, quantity: &str) -> Outcome {
    let s = SurfaceSpec::from_name(surface, genus, k)?;
    let g = GroupKind::from_name(group)?;
    let q = Quantity::from_name(quantity)?;
    let answer = dim_query(s, g, q);
    let human = format!("{quantity} {group}({s}) {}", answer.value);
    Ok(Report::new(answer, human))
}

#[derive(Serialize)]
struct FuzzSummary {
    seed: u64,
    samples: usize,
    b2t_law_failures: usize,
    phi1_hom_failures: usize,
    klein_rewrite_failures: usize,
    sigma_automorphism_failures: usize,
    first_failures: Vec<String>,
}

fn fuzz(samples: usize, seed: u64) -> Result<FuzzSummary, CliError> {
    let mut s = Sampler::new(seed);
    let mut out = FuzzSummary {
        seed,
        samples,
        b2t_law_failures: 0,
        phi1_hom_failures: 0,
        klein_rewrite_failures: 0,
        sigma_automorphism_failures: 0,
        first_failures: Vec::new(),
    };
    let note = |out: &mut FuzzSummary, msg: String| {
        if out.first_failures.len() < 10 {
            out.first_failures.push(msg);
        }
    };
    let g = B2tGroup;
    let kp = klein_presentation();
    let rw = RewriteSystem::klein();
    let sigma = SigmaConjugation::standard();
    for _ in 0..samples {
        let (u, v, w) = (s.b2t(), s.b2t(), s.b2t());
        let assoc =
            g.multiply(&g.multiply(&u, &v)?, &w)? == g.multiply(&u, &g.multiply(&v, &w)?)?;
        let inverse = g.is_identity(&g.multiply(&u, &g.invert(&u)?)?);
        if !(assoc && inverse) {
            out.b2t_law_failures += 1;
            note(&mut out, format!("b2t laws on {u}, {v}, {w}"));
        }

        let (a, b) = (s.klein(20), s.klein(20));
        let lhs = phi1(&KleinGroup.multiply(&a, &b)?)?;
        let rhs = g.multiply(&phi1(&a)?, &phi1(&b)?)?;
        if lhs != rhs {
            out.phi1_hom_failures += 1;
            note(&mut out, format!("phi1 on {a}, {b}"));
        }

        let concat = a.to_word(&kp)?.multiply(&b.to_word(&kp)?)?;
        if rw.normal_form(&concat)? != KleinGroup.multiply(&a, &b)?.to_word(&kp)? {
            out.klein_rewrite_failures += 1;
            note(&mut out, format!("klein rewriting on {a}, {b}"));
        }

        let (p, q) = (s.p2t(), s.p2t());
        let pq = sigma.conjugate(&P2tGroup.multiply(&p, &q)?)?;
        if pq != P2tGroup.multiply(&sigma.conjugate(&p)?, &sigma.conjugate(&q)?)? {
            out.sigma_automorphism_failures += 1;
            note(&mut out, format!("s-conjugation on {p}, {q}"));
        }
    }
    Ok(out)
}

pub fn verify_presentations(samples: usize, seed: u64) -> Outcome {
    let a1 = verify_presentation_a1()?;
    let a2 = verify_presentation_a2()?;
    let phi = phi1_hom().verify()?;
    let mut human = String::new();
    for section in a1
        .sections
        .iter()
        .chain(&a2.sections)
        .chain(std::iter::once(&phi))
    {
        human.push_str(&hom_human(section));
    }
    let fuzz = if samples > 0 {
        Some(fuzz(samples, seed)?)
    } else {
        None
    };
    let fuzz_pass = fuzz.as_ref().is_none_or(|f| {
        f.b2t_law_failures
            + f.phi1_hom_failures
            + f.klein_rewrite_failures
            + f.sigma_automorphism_failures
            == 0
    });
    if let Some(f) = &fuzz {
        let _ = writeln!(
            human,
            "fuzz seed {} x {}: b2t laws {} failures, phi1 {} failures, klein rewriting {} failures, s-conjugation {} failures",
            f.seed,
            f.samples,
            f.b2t_law_failures,
            f.phi1_hom_failures,
            f.klein_rewrite_failures,
            f.sigma_automorphism_failures
        );
    }
    let pass = a1.pass && a2.pass && phi.pass && fuzz_pass;
    let data = json!({
        "p2t": a1,
        "b2t": a2,
        "phi1": phi,
        "fuzz": fuzz,
        "relators": a1.relator_count() + a2.relator_count() + phi.checks.len(),
        "pass": pass,
    });
    Ok(Report::new(data, human).with_pass(pass))
}
