//! Output shapes: one serializable struct per command, each with an aligned
//! plain-text rendering. All collections arrive canonically sorted from the
//! library, so output is deterministic for a fixed input.

use serde::Serialize;
use std::fmt::Write as _;

use multishell::{
    ArithmeticDegree, CondStatus, DecompositionReport, DimensionFiltration, Face, FacetSet,
    MaximalShellingVerdict, MonomialIdeal, MonomialPrime, Multicomplex, PretReport,
    PrimeFiltration, ShellingVerdict, VerificationReport,
};

use crate::document::{face_to_entries, ideal_to_generators, prime_to_vars, step_to_record, FaceEntry, StepRecord};

fn fmt_face(face: &Face) -> String {
    face.to_string()
}

fn fmt_prime(prime: &MonomialPrime) -> String {
    prime.to_string()
}

fn fmt_ideal(ideal: &MonomialIdeal) -> String {
    ideal.to_string()
}

fn cond_str(c: CondStatus) -> &'static str {
    match c {
        CondStatus::Pass => "pass",
        CondStatus::Fail => "fail",
        CondStatus::NotApplicable => "n/a",
    }
}

pub fn faces_json(faces: &[Face]) -> Vec<Vec<FaceEntry>> {
    faces.iter().map(face_to_entries).collect()
}

#[derive(Serialize)]
pub struct PrimaryComponentOut {
    pub ideal: Vec<String>,
    pub prime: Vec<usize>,
}

#[derive(Serialize)]
pub struct AssByDimOut {
    pub dim: usize,
    pub primes: Vec<Vec<usize>>,
}

#[derive(Serialize)]
pub struct DecomposeOut {
    pub ideal: Vec<String>,
    pub irreducible_components: Vec<Vec<String>>,
    pub primary_components: Vec<PrimaryComponentOut>,
    pub ass: Vec<Vec<usize>>,
    pub min_primes: Vec<Vec<usize>>,
    pub ass_by_dim: Vec<AssByDimOut>,
}

impl DecomposeOut {
    pub fn new(ideal: &MonomialIdeal, report: &DecompositionReport) -> Self {
        DecomposeOut {
            ideal: ideal_to_generators(ideal),
            irreducible_components: report
                .irreducible_components
                .iter()
                .map(ideal_to_generators)
                .collect(),
            primary_components: report
                .primary_components
                .iter()
                .map(|(q, p)| PrimaryComponentOut {
                    ideal: ideal_to_generators(q),
                    prime: prime_to_vars(p),
                })
                .collect(),
            ass: report.ass.iter().map(prime_to_vars).collect(),
            min_primes: report.min_primes.iter().map(prime_to_vars).collect(),
            ass_by_dim: report
                .ass_by_dim
                .iter()
                .map(|(dim, primes)| AssByDimOut {
                    dim: *dim,
                    primes: primes.iter().map(prime_to_vars).collect(),
                })
                .collect(),
        }
    }
}

pub fn decompose_text(ideal: &MonomialIdeal, report: &DecompositionReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ideal: {}", fmt_ideal(ideal));
    let _ = writeln!(out, "irreducible components:");
    for c in &report.irreducible_components {
        let _ = writeln!(out, "  {}", fmt_ideal(c));
    }
    let _ = writeln!(out, "primary components:");
    for (q, p) in &report.primary_components {
        let _ = writeln!(out, "  {}-primary: {}", fmt_prime(p), fmt_ideal(q));
    }
    let _ = writeln!(
        out,
        "associated primes: {}",
        report.ass.iter().map(fmt_prime).collect::<Vec<_>>().join(" ")
    );
    let _ = writeln!(
        out,
        "minimal primes: {}",
        report.min_primes.iter().map(fmt_prime).collect::<Vec<_>>().join(" ")
    );
    for (dim, primes) in &report.ass_by_dim {
        let _ = writeln!(
            out,
            "dimension {dim}: {}",
            primes.iter().map(fmt_prime).collect::<Vec<_>>().join(" ")
        );
    }
    out
}

#[derive(Serialize)]
pub struct AssOut {
    pub ass: Vec<Vec<usize>>,
}

pub fn ass_text(report: &DecompositionReport) -> String {
    format!(
        "associated primes: {}\n",
        report.ass.iter().map(fmt_prime).collect::<Vec<_>>().join(" ")
    )
}

#[derive(Serialize)]
pub struct DimFiltLevelOut {
    pub dim: usize,
    pub ideal: Vec<String>,
}

#[derive(Serialize)]
pub struct DimFiltOut {
    pub levels: Vec<DimFiltLevelOut>,
}

impl DimFiltOut {
    pub fn new(filt: &DimensionFiltration) -> Self {
        DimFiltOut {
            levels: filt
                .levels
                .iter()
                .map(|(dim, ideal)| DimFiltLevelOut {
                    dim: *dim,
                    ideal: ideal_to_generators(ideal),
                })
                .collect(),
        }
    }
}

pub fn dimfilt_text(filt: &DimensionFiltration) -> String {
    let mut out = String::new();
    for (dim, ideal) in &filt.levels {
        let rendered = if ideal.is_unit() {
            "whole ring".to_string()
        } else {
            fmt_ideal(ideal)
        };
        let _ = writeln!(out, "dimension {dim}: {rendered}");
    }
    out
}

#[derive(Serialize)]
pub struct BorelOut {
    pub borel: bool,
}

#[derive(Serialize)]
pub struct PretRowOut {
    pub dim: usize,
    pub union: Vec<usize>,
    pub size: usize,
    pub bound: usize,
    pub holds: bool,
}

#[derive(Serialize)]
pub struct PretOut {
    pub holds: bool,
    pub rows: Vec<PretRowOut>,
}

impl PretOut {
    pub fn new(report: &PretReport) -> Self {
        PretOut {
            holds: report.holds,
            rows: report
                .rows
                .iter()
                .map(|r| PretRowOut {
                    dim: r.dim,
                    union: r.union_vars.iter().map(|v| v + 1).collect(),
                    size: r.union_vars.len(),
                    bound: r.bound,
                    holds: r.holds,
                })
                .collect(),
        }
    }
}

pub fn pret_text(report: &PretReport) -> String {
    let mut out = String::new();
    for r in &report.rows {
        let vars = r
            .union_vars
            .iter()
            .map(|v| format!("x{}", v + 1))
            .collect::<Vec<_>>()
            .join(",");
        let verdict = if r.holds { "ok" } else { "violated" };
        let _ = writeln!(
            out,
            "dimension {}: |{{{vars}}}| = {} <= {}  {verdict}",
            r.dim,
            r.union_vars.len(),
            r.bound
        );
    }
    let _ = writeln!(
        out,
        "criterion {}",
        if report.holds { "satisfied" } else { "not satisfied" }
    );
    out
}

#[derive(Serialize)]
pub struct PrimeFacetsOut {
    pub prime: Vec<usize>,
    pub facets: Vec<Vec<FaceEntry>>,
}

#[derive(Serialize)]
pub struct FacetsOut {
    pub maximal_facets: Vec<Vec<FaceEntry>>,
    pub facets: Vec<Vec<FaceEntry>>,
    pub by_prime: Vec<PrimeFacetsOut>,
}

impl FacetsOut {
    pub fn new(gamma: &Multicomplex, facet_set: &FacetSet) -> Self {
        FacetsOut {
            maximal_facets: faces_json(gamma.maximal_facets()),
            facets: faces_json(&facet_set.facets),
            by_prime: facet_set
                .by_prime
                .iter()
                .map(|(p, fs)| PrimeFacetsOut {
                    prime: prime_to_vars(p),
                    facets: faces_json(fs),
                })
                .collect(),
        }
    }
}

pub fn facets_text(gamma: &Multicomplex, facet_set: &FacetSet) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "maximal facets: {gamma}");
    let _ = writeln!(out, "facets ({}):", facet_set.facets.len());
    for (p, fs) in &facet_set.by_prime {
        let _ = writeln!(
            out,
            "  {}: {}",
            fmt_prime(p),
            fs.iter().map(fmt_face).collect::<Vec<_>>().join(" ")
        );
    }
    out
}

#[derive(Serialize)]
pub struct MaxFacetsOut {
    pub maximal_facets: Vec<Vec<FaceEntry>>,
}

#[derive(Serialize)]
pub struct ArithDegPrimeOut {
    pub prime: Vec<usize>,
    pub count: usize,
}

#[derive(Serialize)]
pub struct ArithDegOut {
    pub total: usize,
    pub by_prime: Vec<ArithDegPrimeOut>,
}

impl ArithDegOut {
    pub fn new(report: &ArithmeticDegree) -> Self {
        ArithDegOut {
            total: report.total,
            by_prime: report
                .by_prime
                .iter()
                .map(|(p, c)| ArithDegPrimeOut {
                    prime: prime_to_vars(p),
                    count: *c,
                })
                .collect(),
        }
    }
}

pub fn arithdeg_text(report: &ArithmeticDegree) -> String {
    let mut out = String::new();
    for (p, c) in &report.by_prime {
        let _ = writeln!(out, "{}: {c}", fmt_prime(p));
    }
    let _ = writeln!(out, "arithmetic degree: {}", report.total);
    out
}

#[derive(Serialize)]
pub struct ShellingIndexOut {
    pub position: usize,
    pub face: Vec<FaceEntry>,
    pub intersection: Vec<Vec<FaceEntry>>,
    pub cond1: &'static str,
    pub cond2: &'static str,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cond2_offenders: Vec<Vec<FaceEntry>>,
    pub cond3: &'static str,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cond3_offenders: Vec<usize>,
    pub cond4: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cond4_offender: Option<(usize, usize)>,
}

#[derive(Serialize)]
pub struct ShellingVerdictOut {
    pub overall: bool,
    pub order: Vec<Vec<FaceEntry>>,
    pub per_index: Vec<ShellingIndexOut>,
}

impl ShellingVerdictOut {
    pub fn new(verdict: &ShellingVerdict) -> Self {
        ShellingVerdictOut {
            overall: verdict.overall,
            order: faces_json(&verdict.order),
            per_index: verdict
                .per_index
                .iter()
                .enumerate()
                .map(|(i, r)| ShellingIndexOut {
                    position: i + 1,
                    face: face_to_entries(&r.face),
                    intersection: faces_json(&r.intersection),
                    cond1: cond_str(r.cond1),
                    cond2: cond_str(r.cond2),
                    cond2_offenders: faces_json(&r.cond2_offenders),
                    cond3: cond_str(r.cond3),
                    cond3_offenders: r.cond3_offenders.iter().map(|k| k + 1).collect(),
                    cond4: cond_str(r.cond4),
                    cond4_offender: r.cond4_offender.map(|(j, i)| (j + 1, i + 1)),
                })
                .collect(),
        }
    }
}

pub fn shelling_verdict_text(verdict: &ShellingVerdict) -> String {
    let mut out = String::new();
    for (i, r) in verdict.per_index.iter().enumerate() {
        let _ = writeln!(out, "position {}: {}", i + 1, fmt_face(&r.face));
        if i > 0 {
            let _ = writeln!(
                out,
                "  intersection facets: {}",
                r.intersection.iter().map(fmt_face).collect::<Vec<_>>().join(" ")
            );
        }
        let mut conds = vec![format!("(1) {}", cond_str(r.cond1))];
        conds.push(format!("(2) {}", cond_str(r.cond2)));
        conds.push(format!("(3) {}", cond_str(r.cond3)));
        conds.push(format!("(4) {}", cond_str(r.cond4)));
        let _ = writeln!(out, "  {}", conds.join("  "));
        for w in &r.cond2_offenders {
            let _ = writeln!(out, "  (2) offender: {} is not a lower neighbour", fmt_face(w));
        }
        for k in &r.cond3_offenders {
            let _ = writeln!(out, "  (3) offender: no intersection facet drops at x{}", k + 1);
        }
        if let Some((j, i)) = r.cond4_offender {
            let _ = writeln!(out, "  (4) offender: positions ({}, {})", j + 1, i + 1);
        }
    }
    let _ = writeln!(out, "order {}", if verdict.overall { "passes" } else { "fails" });
    out
}

#[derive(Serialize)]
pub struct ShellOut {
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<Vec<FaceEntry>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<ShellingVerdictOut>,
}

pub fn shell_text(result: Option<&(Vec<Face>, ShellingVerdict)>) -> String {
    match result {
        None => "not shellable: no facet order passes\n".to_string(),
        Some((order, _)) => {
            let mut out = String::new();
            let _ = writeln!(out, "shellable; a shelling order:");
            for f in order {
                let _ = writeln!(out, "  {}", fmt_face(f));
            }
            out
        }
    }
}

#[derive(Serialize)]
pub struct MaximalIndexOut {
    pub position: usize,
    pub face: Vec<FaceEntry>,
    pub intersection: Vec<Vec<FaceEntry>>,
    pub cond2: &'static str,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cond2_offenders: Vec<Vec<FaceEntry>>,
}

#[derive(Serialize)]
pub struct MaximalVerdictOut {
    pub overall: bool,
    pub order: Vec<Vec<FaceEntry>>,
    pub split: usize,
    pub cond1: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cond1_offender: Option<usize>,
    pub per_index: Vec<MaximalIndexOut>,
    pub cond3: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cond3_offender: Option<(usize, usize)>,
}

impl MaximalVerdictOut {
    pub fn new(verdict: &MaximalShellingVerdict) -> Self {
        MaximalVerdictOut {
            overall: verdict.overall,
            order: faces_json(&verdict.order),
            split: verdict.split,
            cond1: cond_str(verdict.cond1),
            cond1_offender: verdict.cond1_offender.map(|j| j + 1),
            per_index: verdict
                .per_index
                .iter()
                .map(|r| MaximalIndexOut {
                    position: r.position + 1,
                    face: face_to_entries(&r.face),
                    intersection: faces_json(&r.intersection),
                    cond2: cond_str(r.cond2),
                    cond2_offenders: faces_json(&r.cond2_offenders),
                })
                .collect(),
            cond3: cond_str(verdict.cond3),
            cond3_offender: verdict.cond3_offender.map(|(j, i)| (j + 1, i + 1)),
        }
    }
}

pub fn maximal_verdict_text(verdict: &MaximalShellingVerdict) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "split: first {} facets share one infinite part", verdict.split);
    let _ = writeln!(out, "(1) {}", cond_str(verdict.cond1));
    for r in &verdict.per_index {
        let _ = writeln!(
            out,
            "position {}: {}  intersection: {}  (2) {}",
            r.position + 1,
            fmt_face(&r.face),
            r.intersection.iter().map(fmt_face).collect::<Vec<_>>().join(" "),
            cond_str(r.cond2)
        );
        for w in &r.cond2_offenders {
            let _ = writeln!(out, "  (2) offender: {} differs in more than one coordinate", fmt_face(w));
        }
    }
    let _ = writeln!(out, "(3) {}", cond_str(verdict.cond3));
    if let Some((j, i)) = verdict.cond3_offender {
        let _ = writeln!(out, "  (3) offender: positions ({}, {})", j + 1, i + 1);
    }
    let _ = writeln!(out, "order {}", if verdict.overall { "passes" } else { "fails" });
    out
}

#[derive(Serialize)]
pub struct MaxShellOut {
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<Vec<FaceEntry>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<MaximalVerdictOut>,
}

pub fn maxshell_text(result: Option<&(Vec<Face>, usize, MaximalShellingVerdict)>) -> String {
    match result {
        None => "not maximal shellable: no order and split pass\n".to_string(),
        Some((order, s, _)) => {
            let mut out = String::new();
            let _ = writeln!(out, "maximal shellable with split {s}; order:");
            for f in order {
                let _ = writeln!(out, "  {}", fmt_face(f));
            }
            out
        }
    }
}

#[derive(Serialize)]
pub struct ClassificationOut {
    pub prime: bool,
    pub clean: bool,
    pub pretty_clean: bool,
    pub almost_clean: bool,
}

impl ClassificationOut {
    pub fn new(c: &multishell::FiltrationClass) -> Self {
        ClassificationOut {
            prime: c.prime,
            clean: c.clean,
            pretty_clean: c.pretty_clean,
            almost_clean: c.almost_clean,
        }
    }
}

#[derive(Serialize)]
pub struct FiltrationOut {
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steps: Option<Vec<StepRecord>>,
}

impl FiltrationOut {
    pub fn found(filtration: &PrimeFiltration) -> Self {
        FiltrationOut {
            found: true,
            base: Some(ideal_to_generators(&filtration.base)),
            length: Some(filtration.length()),
            classification: Some(ClassificationOut::new(&filtration.classification)),
            steps: Some(filtration.steps.iter().map(step_to_record).collect()),
        }
    }

    pub fn not_found() -> Self {
        FiltrationOut {
            found: false,
            base: None,
            length: None,
            classification: None,
            steps: None,
        }
    }
}

pub fn filtration_text(result: Option<&PrimeFiltration>) -> String {
    match result {
        None => "no pretty clean filtration exists\n".to_string(),
        Some(f) => {
            let mut out = String::new();
            let kind = if f.classification.clean {
                "clean"
            } else if f.classification.pretty_clean {
                "pretty clean"
            } else {
                "prime"
            };
            let _ = writeln!(out, "{kind} filtration of length {}:", f.length());
            let _ = writeln!(out, "  base: {}", fmt_ideal(&f.base));
            for (i, step) in f.steps.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  step {}: adjoin {}  colon prime {}",
                    i + 1,
                    step.witness,
                    fmt_prime(&step.prime)
                );
            }
            let c = &f.classification;
            let _ = writeln!(
                out,
                "classification: prime {}, clean {}, pretty clean {}, almost clean {}",
                c.prime, c.clean, c.pretty_clean, c.almost_clean
            );
            out
        }
    }
}

#[derive(Serialize)]
pub struct ViolationOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub step: Option<usize>,
    pub message: String,
}

#[derive(Serialize)]
pub struct VerifyOut {
    pub valid: bool,
    pub classification: ClassificationOut,
    pub length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_length: Option<usize>,
    pub violations: Vec<ViolationOut>,
}

impl VerifyOut {
    pub fn new(report: &VerificationReport) -> Self {
        VerifyOut {
            valid: report.is_valid(),
            classification: ClassificationOut::new(&report.classification),
            length: report.length,
            expected_length: report.expected_length,
            violations: report
                .violations
                .iter()
                .map(|v| ViolationOut {
                    step: v.step.map(|s| s + 1),
                    message: v.message.clone(),
                })
                .collect(),
        }
    }
}

pub fn verify_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    let c = &report.classification;
    let _ = writeln!(
        out,
        "classification: prime {}, clean {}, pretty clean {}, almost clean {}",
        c.prime, c.clean, c.pretty_clean, c.almost_clean
    );
    let _ = writeln!(out, "length: {}", report.length);
    if let Some(expected) = report.expected_length {
        let _ = writeln!(out, "facet count of the base: {expected}");
    }
    if report.violations.is_empty() {
        let _ = writeln!(out, "all step invariants hold");
    } else {
        for v in &report.violations {
            match v.step {
                Some(s) => {
                    let _ = writeln!(out, "violation at step {}: {}", s + 1, v.message);
                }
                None => {
                    let _ = writeln!(out, "violation: {}", v.message);
                }
            }
        }
    }
    out
}
