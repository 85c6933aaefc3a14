//! JSON input documents and the JSON encodings of the core types.
//!
//! Documents are discriminated by a `kind` field: `ideal` (generator
//! strings in the text grammar), `multicomplex` (faces as arrays mixing
//! naturals and the literal `"inf"`), `simplicial` (facets as arrays of
//! 1-based vertices), and `filtration` (the step-record serialization).
//! Inputs that do not start with `{` are treated as ideal text.

use serde::{Deserialize, Serialize};

use multishell::{
    Exponent, ExtExp, Face, FiltrationStep, MonomialIdeal, MonomialPrime, Multicomplex,
    PrimeFiltration, SimplicialComplex,
};

use crate::parse::parse_ideal;

/// An input error: malformed syntax, malformed JSON, or a document that
/// does not satisfy the declared invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for InputError {}

impl From<crate::parse::ParseError> for InputError {
    fn from(e: crate::parse::ParseError) -> Self {
        InputError(e.to_string())
    }
}

/// One face entry: a natural number or the literal `"inf"`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FaceEntry {
    Nat(u32),
    Symbol(String),
}

/// One step record of a filtration document.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StepRecord {
    /// Generators of the chain ideal below the step.
    pub before: Vec<String>,
    /// The adjoined monomial.
    pub witness: String,
    /// 1-based variables of the step prime.
    pub prime: Vec<usize>,
    /// The multidegree shift.
    pub shift: Vec<u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum InputDocument {
    Ideal {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        generators: Vec<String>,
    },
    Multicomplex {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        faces: Vec<Vec<FaceEntry>>,
    },
    Simplicial {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        facets: Vec<Vec<usize>>,
    },
    Filtration {
        n: usize,
        steps: Vec<StepRecord>,
    },
}

/// Parses raw input: JSON documents start with `{`, anything else is ideal
/// text.
pub fn parse_input(text: &str, vars: Option<usize>) -> Result<InputDocument, InputError> {
    if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| InputError(format!("invalid JSON document: {e}")))
    } else {
        let ideal = parse_ideal(text, vars)?;
        Ok(InputDocument::Ideal {
            n: Some(ideal.n()),
            generators: ideal.gens().iter().map(|g| g.to_string()).collect(),
        })
    }
}

pub fn face_entry_to_ext(entry: &FaceEntry) -> Result<ExtExp, InputError> {
    match entry {
        FaceEntry::Nat(v) => Ok(ExtExp::Fin(*v)),
        FaceEntry::Symbol(s) if s == "inf" => Ok(ExtExp::Inf),
        FaceEntry::Symbol(s) => Err(InputError(format!(
            "invalid face entry {s:?}: expected a natural number or \"inf\""
        ))),
    }
}

pub fn face_from_entries(entries: &[FaceEntry]) -> Result<Face, InputError> {
    Ok(Face::new(
        entries
            .iter()
            .map(face_entry_to_ext)
            .collect::<Result<Vec<_>, _>>()?,
    ))
}

pub fn face_to_entries(face: &Face) -> Vec<FaceEntry> {
    face.coords()
        .iter()
        .map(|c| match c.finite() {
            Some(v) => FaceEntry::Nat(v),
            None => FaceEntry::Symbol("inf".into()),
        })
        .collect()
}

/// 1-based variable list of a prime.
pub fn prime_to_vars(prime: &MonomialPrime) -> Vec<usize> {
    prime.vars().iter().map(|v| v + 1).collect()
}

pub fn ideal_to_generators(ideal: &MonomialIdeal) -> Vec<String> {
    if ideal.is_zero() {
        return vec![];
    }
    ideal.gens().iter().map(|g| g.to_string()).collect()
}

fn generators_to_ideal(
    generators: &[String],
    n: Option<usize>,
) -> Result<MonomialIdeal, InputError> {
    let text = generators.join(", ");
    Ok(parse_ideal(&text, n)?)
}

fn multicomplex_from_faces(
    faces: &[Vec<FaceEntry>],
    n: Option<usize>,
) -> Result<Multicomplex, InputError> {
    if faces.is_empty() {
        return Err(InputError("multicomplex document has no faces".into()));
    }
    let width = faces[0].len();
    if faces.iter().any(|f| f.len() != width) {
        return Err(InputError("faces have differing lengths".into()));
    }
    let n = match n {
        Some(n) if n == width => n,
        Some(n) => {
            return Err(InputError(format!(
                "declared variable count {n} differs from face length {width}"
            )))
        }
        None => width,
    };
    let parsed = faces
        .iter()
        .map(|f| face_from_entries(f))
        .collect::<Result<Vec<_>, _>>()?;
    Multicomplex::from_faces(n, parsed).map_err(|e| InputError(e.to_string()))
}

/// The ideal named by a document; multicomplex documents convert through
/// the bijection.
pub fn ideal_from_document(doc: &InputDocument) -> Result<MonomialIdeal, InputError> {
    match doc {
        InputDocument::Ideal { n, generators } => generators_to_ideal(generators, *n),
        InputDocument::Multicomplex { n, faces } => {
            Ok(multicomplex_from_faces(faces, *n)?.ideal())
        }
        InputDocument::Simplicial { .. } => {
            Ok(simplicial_from_document(doc)?.stanley_reisner_ideal())
        }
        InputDocument::Filtration { .. } => Err(InputError(
            "this command expects an ideal, multicomplex or simplicial document".into(),
        )),
    }
}

/// The multicomplex named by a document; ideal documents convert through
/// the bijection (the ideal must be proper).
pub fn multicomplex_from_document(doc: &InputDocument) -> Result<Multicomplex, InputError> {
    match doc {
        InputDocument::Multicomplex { n, faces } => multicomplex_from_faces(faces, *n),
        _ => {
            let ideal = ideal_from_document(doc)?;
            Multicomplex::from_ideal(&ideal)
                .map_err(|e| InputError(format!("cannot form the multicomplex: {e}")))
        }
    }
}

pub fn simplicial_from_document(doc: &InputDocument) -> Result<SimplicialComplex, InputError> {
    let InputDocument::Simplicial { n, facets } = doc else {
        return Err(InputError("this command expects a simplicial document".into()));
    };
    if facets.iter().flatten().any(|&v| v == 0) {
        return Err(InputError("vertices are 1-based; 0 is not a vertex".into()));
    }
    let max_vertex = facets.iter().flatten().copied().max().unwrap_or(0);
    let n = match n {
        Some(n) if *n >= max_vertex => *n,
        Some(n) => {
            return Err(InputError(format!(
                "declared vertex count {n} is below the largest vertex {max_vertex}"
            )))
        }
        None if max_vertex > 0 => max_vertex,
        None => return Err(InputError("simplicial document has no vertices".into())),
    };
    SimplicialComplex::new(
        n,
        facets
            .iter()
            .map(|f| f.iter().map(|&v| v - 1).collect())
            .collect(),
    )
    .map_err(|e| InputError(e.to_string()))
}

pub fn filtration_from_document(doc: &InputDocument) -> Result<PrimeFiltration, InputError> {
    let InputDocument::Filtration { n, steps } = doc else {
        return Err(InputError("this command expects a filtration document".into()));
    };
    if steps.is_empty() {
        return Err(InputError("filtration document has no steps".into()));
    }
    let n = *n;
    let mut parsed = Vec::with_capacity(steps.len());
    for (i, record) in steps.iter().enumerate() {
        let before = generators_to_ideal(&record.before, Some(n))
            .map_err(|e| InputError(format!("step {}: {e}", i + 1)))?;
        let witness_ideal = parse_ideal(&record.witness, Some(n))
            .map_err(|e| InputError(format!("step {}: {e}", i + 1)))?;
        let witness = match witness_ideal.gens() {
            [single] => single.clone(),
            _ => {
                return Err(InputError(format!(
                    "step {}: witness must be a single monomial",
                    i + 1
                )))
            }
        };
        if record.prime.iter().any(|&v| v == 0 || v > n) {
            return Err(InputError(format!(
                "step {}: prime variable out of range 1..={n}",
                i + 1
            )));
        }
        if record.shift.len() != n {
            return Err(InputError(format!(
                "step {}: shift has length {}, expected {n}",
                i + 1,
                record.shift.len()
            )));
        }
        parsed.push(FiltrationStep {
            ideal_before: before,
            witness,
            prime: MonomialPrime::new(n, record.prime.iter().map(|&v| v - 1)),
            shift: Exponent::new(record.shift.clone()),
        });
    }
    let base = parsed[0].ideal_before.clone();
    Ok(PrimeFiltration::from_parts(base, parsed))
}

pub fn step_to_record(step: &FiltrationStep) -> StepRecord {
    StepRecord {
        before: ideal_to_generators(&step.ideal_before),
        witness: step.witness.to_string(),
        prime: prime_to_vars(&step.prime),
        shift: step.shift.coords().to_vec(),
    }
}
