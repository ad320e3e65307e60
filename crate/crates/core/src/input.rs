//! JSON input documents: quivers, posets, weight lists, group actions, raw
//! Cartan matrices and named families. The document kind is decided by its
//! distinguishing key; parse errors carry the line, column and field path.

use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{
    canonical, double_repetitive, dynkin, extended_canonical, extended_dynkin, from_hereditary_quiver, from_poset,
    galois_quotient, one_point_extension, poset_d, semichain_poset, star_quiver, tensor, truncated_linear,
    CartanAlgebra, GroupAction, PosetSpec, QuiverSpec,
};
use crate::error::{Error, Result};

/// Which algebra a weight sequence stands for.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightConstruction {
    #[default]
    ExtendedCanonical,
    Canonical,
    /// Hereditary star quiver.
    Star,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightsSpec {
    pub weights: Vec<u64>,
    #[serde(default)]
    pub construction: WeightConstruction,
}

impl WeightsSpec {
    pub fn build(&self) -> Result<CartanAlgebra> {
        match self.construction {
            WeightConstruction::ExtendedCanonical => extended_canonical(&self.weights),
            WeightConstruction::Canonical => canonical(&self.weights),
            WeightConstruction::Star => {
                let q = star_quiver(&self.weights)?;
                Ok(from_hereditary_quiver(&q)?.named(format!("star{:?}", self.weights)))
            }
        }
    }
}

/// Named family with its parameters. Composite families take their
/// operands as nested documents under `of`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    Dynkin {
        #[serde(rename = "type")]
        kind: String,
    },
    ExtendedDynkin {
        #[serde(rename = "type")]
        kind: String,
    },
    Star {
        weights: Vec<u64>,
    },
    Canonical {
        weights: Vec<u64>,
    },
    ExtendedCanonical {
        weights: Vec<u64>,
    },
    Truncated {
        n: usize,
        r: usize,
    },
    PosetD {
        n: usize,
    },
    Semichain {
        n: usize,
        m: usize,
    },
    Tensor {
        of: Vec<Value>,
    },
    Repetitive {
        of: Vec<Value>,
    },
    Quotient {
        of: Vec<Value>,
        action: GroupAction,
    },
    Extension {
        of: Vec<Value>,
        vector: Vec<i64>,
    },
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Dynkin { .. } => "dynkin",
            FamilySpec::ExtendedDynkin { .. } => "extended-dynkin",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Canonical { .. } => "canonical",
            FamilySpec::ExtendedCanonical { .. } => "extended-canonical",
            FamilySpec::Truncated { .. } => "truncated",
            FamilySpec::PosetD { .. } => "poset-d",
            FamilySpec::Semichain { .. } => "semichain",
            FamilySpec::Tensor { .. } => "tensor",
            FamilySpec::Repetitive { .. } => "repetitive",
            FamilySpec::Quotient { .. } => "quotient",
            FamilySpec::Extension { .. } => "extension",
        }
    }

    fn operands(of: &[Value], expected: usize, family: &str) -> Result<Vec<CartanAlgebra>> {
        if of.len() != expected {
            return Err(Error::Parse(format!(
                "field `of`: family {family} takes {expected} operand(s), got {}",
                of.len()
            )));
        }
        of.iter()
            .enumerate()
            .map(|(i, v)| {
                InputDocument::from_value(v.clone())
                    .and_then(|d| d.build())
                    .map_err(|e| Error::Parse(format!("field `of[{i}]`: {e}")))
            })
            .collect()
    }

    pub fn build(&self) -> Result<CartanAlgebra> {
        let name = self.name();
        match self {
            FamilySpec::Dynkin { kind } => dynkin(kind.parse()?),
            FamilySpec::ExtendedDynkin { kind } => extended_dynkin(kind.parse()?),
            FamilySpec::Star { weights } => WeightsSpec {
                weights: weights.clone(),
                construction: WeightConstruction::Star,
            }
            .build(),
            FamilySpec::Canonical { weights } => canonical(weights),
            FamilySpec::ExtendedCanonical { weights } => extended_canonical(weights),
            FamilySpec::Truncated { n, r } => truncated_linear(*n, *r),
            FamilySpec::PosetD { n } => Ok(from_poset(&poset_d(*n)?)?.named(format!("D({n})"))),
            FamilySpec::Semichain { n, m } => Ok(from_poset(&semichain_poset(*n, *m)?)?.named(format!("D({n},{m})"))),
            FamilySpec::Tensor { of } => {
                let ops = Self::operands(of, 2, name)?;
                tensor(&ops[0], &ops[1])
            }
            FamilySpec::Repetitive { of } => double_repetitive(&Self::operands(of, 1, name)?[0]),
            FamilySpec::Quotient { of, action } => galois_quotient(&Self::operands(of, 1, name)?[0], action),
            FamilySpec::Extension { of, vector } => {
                let d: Vec<BigInt> = vector.iter().map(|&x| BigInt::from(x)).collect();
                one_point_extension(&Self::operands(of, 1, name)?[0], &d)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum InputDocument {
    Algebra(CartanAlgebra),
    Quiver(QuiverSpec),
    Poset(PosetSpec),
    Weights(WeightsSpec),
    Action(GroupAction),
    Family(FamilySpec),
}

/// Key that identifies each document kind, in detection order.
const KIND_KEYS: [(&str, &str); 6] = [
    ("cartan", "algebra"),
    ("family", "family"),
    ("vertices", "quiver"),
    ("elements", "poset"),
    ("weights", "weights"),
    ("generators", "action"),
];

fn detect(v: &Value) -> Result<&'static str> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("document must be a JSON object".into()))?;
    KIND_KEYS
        .iter()
        .find(|(k, _)| obj.contains_key(*k))
        .map(|(_, kind)| *kind)
        .ok_or_else(|| {
            let keys: Vec<&str> = KIND_KEYS.iter().map(|(k, _)| *k).collect();
            Error::Parse(format!("unrecognized document: expected one of the keys {keys:?}"))
        })
}

fn typed_from_str<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        Error::Parse(format!(
            "line {}, column {}, field `{path}`: {inner}",
            inner.line(),
            inner.column()
        ))
    })
}

fn typed_from_value<T: DeserializeOwned>(v: Value) -> Result<T> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        let path = e.path().to_string();
        Error::Parse(format!("field `{path}`: {}", e.into_inner()))
    })
}

impl InputDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            InputDocument::Algebra(_) => "algebra",
            InputDocument::Quiver(_) => "quiver",
            InputDocument::Poset(_) => "poset",
            InputDocument::Weights(_) => "weights",
            InputDocument::Action(_) => "action",
            InputDocument::Family(_) => "family",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
        Ok(match detect(&v)? {
            "algebra" => InputDocument::Algebra(typed_from_str(text)?),
            "family" => InputDocument::Family(typed_from_str(text)?),
            "quiver" => InputDocument::Quiver(typed_from_str(text)?),
            "poset" => InputDocument::Poset(typed_from_str(text)?),
            "weights" => InputDocument::Weights(typed_from_str(text)?),
            _ => InputDocument::Action(typed_from_str(text)?),
        })
    }

    pub fn from_value(v: Value) -> Result<Self> {
        Ok(match detect(&v)? {
            "algebra" => InputDocument::Algebra(typed_from_value(v)?),
            "family" => InputDocument::Family(typed_from_value(v)?),
            "quiver" => InputDocument::Quiver(typed_from_value(v)?),
            "poset" => InputDocument::Poset(typed_from_value(v)?),
            "weights" => InputDocument::Weights(typed_from_value(v)?),
            _ => InputDocument::Action(typed_from_value(v)?),
        })
    }

    /// The algebra a document describes; action documents describe none.
    pub fn build(&self) -> Result<CartanAlgebra> {
        match self {
            InputDocument::Algebra(a) => Ok(a.clone()),
            InputDocument::Quiver(q) => from_hereditary_quiver(q),
            InputDocument::Poset(p) => from_poset(p),
            InputDocument::Weights(w) => w.build(),
            InputDocument::Family(f) => f.build(),
            InputDocument::Action(_) => Err(Error::Parse("an action document does not describe an algebra".into())),
        }
    }

    pub fn into_action(self) -> Result<GroupAction> {
        match self {
            InputDocument::Action(g) => Ok(g),
            other => Err(Error::Parse(format!(
                "expected an action document, found a {}",
                other.kind()
            ))),
        }
    }
}

/// Algebra as a JSON document that [`InputDocument::parse`] reads back.
pub fn algebra_to_json(a: &CartanAlgebra) -> String {
    serde_json::to_string_pretty(a).expect("algebra serializes")
}
