//! JSON input documents: the typed payloads accepted by the command
//! line and emitted back out of reports.
//!
//! Every document is one JSON object with a `"type"` discriminator:
//!
//! * `demimatroid` — `n` plus the two rank tables as arrays of length
//!   `2^n`, indexed by subset mask with bit 0 = element 0;
//! * `matroid-bases` — `n` plus bases as arrays of element indices;
//! * `uniform` — `n` and `k`;
//! * `graph` — `vertices` and an edge list;
//! * `setsystem` — `n` plus member sets as arrays of element indices;
//! * `code` — a field spec `{"p": .., "m": ..}` and a generator matrix
//!   as row-major arrays of field-element indices.
//!
//! `labels`, where accepted, names the ground-set elements.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::{CodeError, LinearCode};
use crate::demimatroid::{DemiMatroid, DemiMatroidError, RankTable};
use crate::gf::{FieldError, FiniteField};
use crate::graph::{GraphError, Multigraph};
use crate::linalg::LinalgError;
use crate::matroid::{Matroid, MatroidError};
use crate::subset::{bit, GroundSet, GroundSetError, Mask, MAX_ELEMENTS};
use crate::transversal::{SetSystem, TransversalError};

#[derive(Debug, Error)]
pub enum DocError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("ground set has {0} elements; at most {MAX_ELEMENTS} are supported")]
    TooLarge(usize),
    #[error("labels: expected {expected} entries, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("rank value {value} at mask {mask} does not fit the ground set")]
    RankValue { mask: usize, value: u64 },
    #[error("element index {0} is out of range")]
    ElementRange(usize),
    #[error(transparent)]
    Ground(#[from] GroundSetError),
    #[error(transparent)]
    Demi(#[from] DemiMatroidError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Transversal(#[from] TransversalError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub m: u32,
}

/// One parsed input document.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "type", deny_unknown_fields)]
pub enum InputDocument {
    #[serde(rename = "demimatroid")]
    DemiMatroid {
        n: usize,
        s: Vec<u64>,
        t: Vec<u64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    #[serde(rename = "matroid-bases")]
    MatroidBases {
        n: usize,
        bases: Vec<Vec<usize>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    #[serde(rename = "uniform")]
    Uniform { n: usize, k: usize },
    #[serde(rename = "graph")]
    Graph {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    #[serde(rename = "setsystem")]
    SetSystem {
        n: usize,
        sets: Vec<Vec<usize>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    #[serde(rename = "code")]
    Code {
        field: FieldSpec,
        generator: Vec<Vec<u64>>,
    },
}

/// A document turned into its domain object.
#[derive(Clone, Debug)]
pub enum Artifact {
    DemiMatroid(DemiMatroid),
    Matroid(Matroid),
    Graph(Multigraph),
    SetSystem(SetSystem),
    Code(LinearCode),
}

impl Artifact {
    pub fn kind(&self) -> &'static str {
        match self {
            Artifact::DemiMatroid(_) => "demimatroid",
            Artifact::Matroid(_) => "matroid",
            Artifact::Graph(_) => "graph",
            Artifact::SetSystem(_) => "setsystem",
            Artifact::Code(_) => "code",
        }
    }
}

fn ground_for(n: usize, labels: Option<Vec<String>>) -> Result<GroundSet, DocError> {
    match labels {
        None => Ok(GroundSet::new(n)?),
        Some(l) => {
            if l.len() != n {
                return Err(DocError::LabelCount {
                    expected: n,
                    got: l.len(),
                });
            }
            Ok(GroundSet::with_labels(l)?)
        }
    }
}

fn mask_from_indices(indices: &[usize], n: usize) -> Result<Mask, DocError> {
    let mut mask = 0;
    for &i in indices {
        if i >= n {
            return Err(DocError::ElementRange(i));
        }
        mask |= bit(i);
    }
    Ok(mask)
}

fn rank_table(n: usize, values: &[u64]) -> Result<RankTable, DocError> {
    let mut out = Vec::with_capacity(values.len());
    for (mask, &value) in values.iter().enumerate() {
        if value > n as u64 {
            return Err(DocError::RankValue { mask, value });
        }
        out.push(value as u8);
    }
    Ok(RankTable::from_values(out))
}

impl InputDocument {
    pub fn parse(json: &str) -> Result<InputDocument, DocError> {
        Ok(serde_json::from_str(json)?)
    }

    /// Validates the payload and builds the domain object.
    pub fn build(self) -> Result<Artifact, DocError> {
        match self {
            InputDocument::DemiMatroid { n, s, t, labels } => {
                if n > MAX_ELEMENTS {
                    return Err(DocError::TooLarge(n));
                }
                let ground = ground_for(n, labels)?;
                let d = DemiMatroid::new(ground, rank_table(n, &s)?, rank_table(n, &t)?)?;
                Ok(Artifact::DemiMatroid(d))
            }
            InputDocument::MatroidBases { n, bases, labels } => {
                if n > MAX_ELEMENTS {
                    return Err(DocError::TooLarge(n));
                }
                let ground = ground_for(n, labels)?;
                let masks = bases
                    .iter()
                    .map(|b| mask_from_indices(b, n))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Artifact::Matroid(Matroid::from_bases(ground, masks)?))
            }
            InputDocument::Uniform { n, k } => Ok(Artifact::Matroid(Matroid::uniform(n, k)?)),
            InputDocument::Graph { vertices, edges } => {
                Ok(Artifact::Graph(Multigraph::new(vertices, edges)?))
            }
            InputDocument::SetSystem { n, sets, labels } => {
                if n > MAX_ELEMENTS {
                    return Err(DocError::TooLarge(n));
                }
                let ground = ground_for(n, labels)?;
                let masks = sets
                    .iter()
                    .map(|s| mask_from_indices(s, n))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Artifact::SetSystem(SetSystem::new(ground, masks)?))
            }
            InputDocument::Code { field, generator } => {
                let f = FiniteField::new(field.p, field.m)?;
                Ok(Artifact::Code(LinearCode::new(f, &generator)?))
            }
        }
    }
}

/// Serializes a demi-matroid back into its document form, suitable for
/// re-validation.
pub fn demimatroid_document(d: &DemiMatroid) -> InputDocument {
    InputDocument::DemiMatroid {
        n: d.n(),
        s: d.s_table().values().iter().map(|&v| v as u64).collect(),
        t: d.t_table().values().iter().map(|&v| v as u64).collect(),
        labels: d.ground().labels().map(|l| l.to_vec()),
    }
}
