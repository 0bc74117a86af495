//! JSON wire formats.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::burnside::BurnsideElement;
use crate::error::{Error, Result};
use crate::group::{build_group, phase, Presentation};
use crate::gspace::{GSimplicialComplex, SimplicialComplex};
use crate::lattice::{build_lattice, ClassId, SubgroupId, SubgroupLattice};

type Burnside = BurnsideElement<i64>;

/// A group presentation.
///
/// Permutation images may be 0-based or 1-based; a generator list that is a
/// permutation of `1..=degree` on every generator is read as 1-based.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum PresentationJson {
    Perm {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    Diagonal {
        /// One phase vector per generator, each coordinate `[num, den]`.
        phases: Vec<Vec<(i64, i64)>>,
    },
    Table {
        table: Vec<Vec<usize>>,
    },
}

impl PresentationJson {
    pub fn to_presentation(&self) -> Result<Presentation> {
        Ok(match self {
            PresentationJson::Perm { degree, generators } => {
                let one_based = !generators.is_empty()
                    && generators.iter().all(|g| {
                        let mut sorted = g.clone();
                        sorted.sort_unstable();
                        sorted == (1..=*degree).collect::<Vec<_>>()
                    });
                let generators = if one_based {
                    generators.iter().map(|g| g.iter().map(|x| x - 1).collect()).collect()
                } else {
                    generators.clone()
                };
                Presentation::Permutation {
                    degree: *degree,
                    generators,
                }
            }
            PresentationJson::Diagonal { phases } => Presentation::Diagonal {
                generators: phases
                    .iter()
                    .map(|g| g.iter().map(|&(num, den)| phase(num, den)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?,
            },
            PresentationJson::Table { table } => Presentation::Table { table: table.clone() },
        })
    }

    pub fn build(&self) -> Result<Arc<SubgroupLattice>> {
        build_lattice(Arc::new(build_group(&self.to_presentation()?)?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: i64,
    pub den: i64,
}

impl From<Ratio<i64>> for RationalJson {
    fn from(r: Ratio<i64>) -> Self {
        RationalJson {
            num: *r.numer(),
            den: *r.denom(),
        }
    }
}

/// Resolves a subgroup label; `e` and `G` name the trivial and whole group.
pub fn resolve_subgroup(lattice: &SubgroupLattice, label: &str) -> Result<SubgroupId> {
    match label {
        "e" => Ok(lattice.trivial_subgroup()),
        "G" => Ok(lattice.whole()),
        _ => lattice.find_label(label),
    }
}

pub fn resolve_class(lattice: &SubgroupLattice, label: &str) -> Result<ClassId> {
    Ok(lattice.class_of(resolve_subgroup(lattice, label)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub class: String,
    pub a: i64,
}

/// `{"group": id, "coeffs": [{"class": label, "a": int}]}`. On input the
/// group id may be omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BurnsideJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    pub coeffs: Vec<TermJson>,
}

impl BurnsideJson {
    pub fn from_element(b: &Burnside) -> Self {
        let l = b.lattice();
        BurnsideJson {
            group: Some(l.id().to_string()),
            coeffs: b
                .terms()
                .map(|(c, &a)| TermJson {
                    class: l.class_label(c),
                    a,
                })
                .collect(),
        }
    }

    pub fn to_element(&self, lattice: &Arc<SubgroupLattice>) -> Result<Burnside> {
        if let Some(id) = &self.group {
            if id != lattice.id() {
                return Err(Error::GroupMismatch {
                    left: id.clone(),
                    right: lattice.id().to_string(),
                });
            }
        }
        let terms = self
            .coeffs
            .iter()
            .map(|t| Ok((resolve_class(lattice, &t.class)?, t.a)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Burnside::from_terms(lattice, terms))
    }
}

/// `{"vertices": [...], "simplices": [[...]], "action": {"g": [images]}}`.
/// Vertex ids are strings or integers; `action[g][i]` is the image of
/// `vertices[i]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub vertices: Vec<Value>,
    #[serde(default)]
    pub simplices: Vec<Vec<Value>>,
    #[serde(default)]
    pub action: BTreeMap<String, Vec<Value>>,
}

fn vertex_key(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::InvalidComplex(format!(
            "vertex id {other} is not a string or integer"
        ))),
    }
}

impl ComplexJson {
    pub fn to_complex(&self) -> Result<GSimplicialComplex> {
        let labels = self.vertices.iter().map(vertex_key).collect::<Result<Vec<_>>>()?;
        let index: BTreeMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let lookup = |v: &Value| -> Result<usize> {
            let key = vertex_key(v)?;
            index
                .get(key.as_str())
                .copied()
                .ok_or_else(|| Error::InvalidComplex(format!("unknown vertex {key}")))
        };
        let faces = self
            .simplices
            .iter()
            .map(|s| s.iter().map(lookup).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let generators = self
            .action
            .values()
            .map(|images| images.iter().map(lookup).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        GSimplicialComplex::from_permutations(SimplicialComplex::new(labels, &faces)?, generators)
    }
}
