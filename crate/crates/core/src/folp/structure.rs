use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::pseudotopology::{PseudoTopology, SpaceError, SpaceViolation, Subset};

/// On-disk form:
///
/// ```json
/// {"domain_size": 3,
///  "relations": {"R": [[0], [1]]},
///  "functions": {"s": [[0, 1], [1, 2], [2, 0]]},
///  "constants": {"c": 0},
///  "omega": [1, 3, 5, 7]}
/// ```
///
/// A function graph lists `[args..., value]` rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub domain_size: u32,
    #[serde(default)]
    pub relations: BTreeMap<String, Vec<Vec<u32>>>,
    #[serde(default)]
    pub functions: BTreeMap<String, Vec<Vec<u32>>>,
    #[serde(default)]
    pub constants: BTreeMap<String, u32>,
    pub omega: Vec<Subset>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("domain size must be between 1 and 64, got {0}")]
    DomainSize(u32),
    #[error("`{symbol}` mentions {value}, outside the domain")]
    ValueOutOfRange { symbol: String, value: u32 },
    #[error("relation `{0}` has tuples of different lengths")]
    RelationArity(String),
    #[error("function `{0}` has rows of different lengths, or an empty row")]
    FunctionArity(String),
    #[error("function `{name}` is not total: {detail}")]
    FunctionNotTotal { name: String, detail: String },
    #[error("`{0}` is both a function and a constant")]
    NameClash(String),
    #[error("omega: {0}")]
    Omega(#[from] SpaceError),
    #[error("omega is not a pseudo-topology: {0}")]
    NotPseudoTopology(SpaceViolation),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Relation {
    /// `None` for an empty table, which then holds of nothing at any arity.
    pub arity: Option<usize>,
    pub tuples: BTreeSet<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Function {
    pub arity: usize,
    /// Values indexed by the arguments read as base-`domain_size` digits,
    /// first argument most significant.
    pub table: Vec<u32>,
}

/// A finite structure plus a pseudo-topology on its domain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "StructureFile", into = "StructureFile")]
pub struct PlausibleStructure {
    pub(crate) domain_size: u32,
    pub(crate) relations: BTreeMap<String, Relation>,
    pub(crate) functions: BTreeMap<String, Function>,
    pub(crate) constants: BTreeMap<String, u32>,
    pub(crate) omega: PseudoTopology,
}

impl PlausibleStructure {
    /// A structure over unary relations only.
    pub fn unary(
        domain_size: u32,
        relations: &[(&str, Subset)],
        omega: &PseudoTopology,
    ) -> Result<Self, StructureError> {
        let relations = relations
            .iter()
            .map(|&(name, set)| {
                let rows = (0..domain_size.min(64))
                    .filter(|b| set >> b & 1 == 1)
                    .map(|b| vec![b])
                    .collect();
                (name.to_string(), rows)
            })
            .collect();
        PlausibleStructure::try_from(StructureFile {
            domain_size,
            relations,
            functions: BTreeMap::new(),
            constants: BTreeMap::new(),
            omega: omega.opens.clone(),
        })
    }

    pub fn domain_size(&self) -> u32 {
        self.domain_size
    }

    pub fn omega(&self) -> &PseudoTopology {
        &self.omega
    }

    /// Replaces `Ω`, keeping the first-order part.
    pub fn with_omega(&self, omega: PseudoTopology) -> Result<Self, StructureError> {
        let mut file = StructureFile::from(self.clone());
        file.omega = omega.opens;
        PlausibleStructure::try_from(file)
    }

    pub(crate) fn apply(&self, f: &Function, args: &[u32]) -> u32 {
        let index = args
            .iter()
            .fold(0usize, |acc, &a| acc * self.domain_size as usize + a as usize);
        f.table[index]
    }
}

impl TryFrom<StructureFile> for PlausibleStructure {
    type Error = StructureError;

    fn try_from(file: StructureFile) -> Result<Self, StructureError> {
        let n = file.domain_size;
        if n == 0 || n > 64 {
            return Err(StructureError::DomainSize(n));
        }
        let in_range = |symbol: &str, value: u32| {
            if value < n {
                Ok(())
            } else {
                Err(StructureError::ValueOutOfRange {
                    symbol: symbol.to_string(),
                    value,
                })
            }
        };

        let mut relations = BTreeMap::new();
        for (name, rows) in file.relations {
            let arity = rows.first().map(Vec::len);
            for row in &rows {
                if Some(row.len()) != arity {
                    return Err(StructureError::RelationArity(name));
                }
                for &v in row {
                    in_range(&name, v)?;
                }
            }
            let tuples = rows.into_iter().collect();
            relations.insert(name, Relation { arity, tuples });
        }

        let mut functions = BTreeMap::new();
        for (name, rows) in file.functions {
            if file.constants.contains_key(&name) {
                return Err(StructureError::NameClash(name));
            }
            let width = rows.first().map_or(0, Vec::len);
            if width == 0 || rows.iter().any(|r| r.len() != width) {
                return Err(StructureError::FunctionArity(name));
            }
            let arity = width - 1;
            let size = (n as usize)
                .checked_pow(arity as u32)
                .filter(|&s| s <= 1 << 24)
                .ok_or_else(|| StructureError::FunctionNotTotal {
                    name: name.clone(),
                    detail: "table too large".into(),
                })?;
            let mut table = vec![None; size];
            for row in &rows {
                for &v in row {
                    in_range(&name, v)?;
                }
                let index = row[..arity]
                    .iter()
                    .fold(0usize, |acc, &a| acc * n as usize + a as usize);
                if table[index].replace(row[arity]).is_some() {
                    return Err(StructureError::FunctionNotTotal {
                        name,
                        detail: format!("arguments {:?} listed twice", &row[..arity]),
                    });
                }
            }
            if table.iter().any(Option::is_none) {
                return Err(StructureError::FunctionNotTotal {
                    name,
                    detail: format!("{} of {size} argument tuples listed", rows.len()),
                });
            }
            let table = table.into_iter().map(|v| v.expect("checked total")).collect();
            functions.insert(name, Function { arity, table });
        }

        for (name, &v) in &file.constants {
            in_range(name, v)?;
        }

        let omega = PseudoTopology::new(n, file.omega);
        omega.validate()?.map_err(StructureError::NotPseudoTopology)?;

        Ok(PlausibleStructure {
            domain_size: n,
            relations,
            functions,
            constants: file.constants,
            omega,
        })
    }
}

impl From<PlausibleStructure> for StructureFile {
    fn from(m: PlausibleStructure) -> Self {
        let functions = m
            .functions
            .iter()
            .map(|(name, f)| {
                let n = m.domain_size as usize;
                let rows = f
                    .table
                    .iter()
                    .enumerate()
                    .map(|(index, &value)| {
                        let mut row = vec![0u32; f.arity + 1];
                        let mut rest = index;
                        for k in (0..f.arity).rev() {
                            row[k] = (rest % n) as u32;
                            rest /= n;
                        }
                        row[f.arity] = value;
                        row
                    })
                    .collect();
                (name.clone(), rows)
            })
            .collect();
        StructureFile {
            domain_size: m.domain_size,
            relations: m
                .relations
                .into_iter()
                .map(|(name, r)| (name, r.tuples.into_iter().collect()))
                .collect(),
            functions,
            constants: m.constants,
            omega: m.omega.opens,
        }
    }
}
