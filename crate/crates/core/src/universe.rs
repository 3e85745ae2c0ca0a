//! JSON form of a universe and its named qsets.
//!
//! ```json
//! {"species": [{"name": "e", "kind": "m"}, {"name": "person", "kind": "M"}],
//!  "ambient": {"e": 6, "person": ["Paul", "Peter"]},
//!  "qsets": {"A": {"e": 2}}}
//! ```
//!
//! m-atom species map to a count, classical species to a list of labels.
//! Serialization is canonical (species and keys sorted, zero counts dropped),
//! so parsing a canonical document and writing it back is byte-stable.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qset::{Kind, Qset, Species, Universe};

/// One entry of a composition map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Count(usize),
    Members(Vec<String>),
}

pub type CompositionMap = BTreeMap<String, Entry>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UniverseDoc {
    pub species: Vec<Species>,
    pub ambient: CompositionMap,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub qsets: BTreeMap<String, CompositionMap>,
}

/// A parsed universe with its ambient and named qsets.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub universe: Arc<Universe>,
    pub ambient: Qset,
    pub qsets: BTreeMap<String, Qset>,
}

impl UniverseDoc {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.canonical()).expect("composition maps always serialize")
    }

    fn canonical(&self) -> UniverseDoc {
        let mut species = self.species.clone();
        species.sort_by(|a, b| a.name.cmp(&b.name));
        let clean = |m: &CompositionMap| -> CompositionMap {
            m.iter()
                .filter_map(|(k, e)| match e {
                    Entry::Count(0) => None,
                    Entry::Members(v) if v.is_empty() => None,
                    Entry::Count(n) => Some((k.clone(), Entry::Count(*n))),
                    Entry::Members(v) => {
                        let mut v = v.clone();
                        v.sort();
                        v.dedup();
                        Some((k.clone(), Entry::Members(v)))
                    }
                })
                .collect()
        };
        UniverseDoc {
            species,
            ambient: clean(&self.ambient),
            qsets: self.qsets.iter().map(|(k, m)| (k.clone(), clean(m))).collect(),
        }
    }

    /// Build the universe and qsets, validating kinds and containment.
    pub fn load(&self) -> Result<Loaded> {
        let mut builder = Universe::builder();
        for (i, sp) in self.species.iter().enumerate() {
            let field = format!("species[{i}]");
            let entry = self.ambient.get(&sp.name);
            builder = match (sp.kind, entry) {
                (Kind::Quantum, None) => builder.quantum(&sp.name, 0),
                (Kind::Quantum, Some(Entry::Count(n))) => builder.quantum(&sp.name, *n),
                (Kind::Classical, None) => builder.classical(&sp.name, Vec::<String>::new()),
                (Kind::Classical, Some(Entry::Members(v))) => builder.classical(&sp.name, v.clone()),
                (Kind::Quantum, Some(_)) => {
                    return Err(Error::schema(
                        format!("ambient.{}", sp.name),
                        "m-atom species take a count",
                    ))
                }
                (Kind::Classical, Some(_)) => {
                    return Err(Error::schema(
                        format!("ambient.{}", sp.name),
                        "classical species take a list of labels",
                    ))
                }
            };
            if sp.name.is_empty() {
                return Err(Error::schema(field, "empty species name"));
            }
        }
        let universe = builder
            .build()
            .map_err(|e| Error::schema("species", e.to_string()))?;
        for key in self.ambient.keys() {
            if universe.kind(key).is_none() {
                return Err(Error::schema(format!("ambient.{key}"), "undeclared species"));
            }
        }
        let ambient = Qset::ambient(&universe);
        let mut qsets = BTreeMap::new();
        for (name, map) in &self.qsets {
            let q = qset_from_map(&universe, map, &format!("qsets.{name}"))?;
            qsets.insert(name.clone(), q);
        }
        Ok(Loaded {
            universe,
            ambient,
            qsets,
        })
    }

    /// Describe a universe (and optionally named qsets) as a document.
    pub fn describe(universe: &Arc<Universe>, qsets: &BTreeMap<String, Qset>) -> Self {
        UniverseDoc {
            species: universe.species().collect(),
            ambient: qset_to_map(&Qset::ambient(universe)),
            qsets: qsets.iter().map(|(k, q)| (k.clone(), qset_to_map(q))).collect(),
        }
    }
}

/// Composition map of a qset, keys sorted.
pub fn qset_to_map(q: &Qset) -> CompositionMap {
    let mut map: CompositionMap = q
        .composition()
        .iter()
        .map(|(s, &n)| (s.clone(), Entry::Count(n)))
        .collect();
    for m in q.members() {
        match map
            .entry(m.species.clone())
            .or_insert_with(|| Entry::Members(Vec::new()))
        {
            Entry::Members(v) => v.push(m.label.clone()),
            Entry::Count(_) => unreachable!("species kinds are disjoint"),
        }
    }
    map
}

/// Parse a composition map against `universe`; `field` prefixes error paths.
pub fn qset_from_map(universe: &Arc<Universe>, map: &CompositionMap, field: &str) -> Result<Qset> {
    let mut q = Qset::empty(universe);
    for (species, entry) in map {
        let path = format!("{field}.{species}");
        q = match entry {
            Entry::Count(n) => q.with_count(species, *n),
            Entry::Members(labels) => labels
                .iter()
                .try_fold(q, |acc, label| acc.with_member(species, label)),
        }
        .map_err(|e| Error::schema(path, e.to_string()))?;
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SODIUM: &str = r#"{"species":[{"name":"Na2p_e","kind":"m"}],"ambient":{"Na2p_e":6},"qsets":{"B":{"Na2p_e":2}}}"#;

    #[test]
    fn canonical_round_trip_is_byte_stable() {
        let doc = UniverseDoc::from_json(SODIUM).unwrap();
        assert_eq!(doc.to_json(), SODIUM);
        let mixed = r#"{"species":[{"name":"e","kind":"m"},{"name":"person","kind":"M"}],"ambient":{"e":2,"person":["Paul","Peter"]}}"#;
        assert_eq!(UniverseDoc::from_json(mixed).unwrap().to_json(), mixed);
    }

    #[test]
    fn non_canonical_input_is_normalized() {
        let messy = r#"{"species":[{"name":"t","kind":"m"},{"name":"s","kind":"m"}],
            "ambient":{"t":0,"s":3}, "qsets":{"A":{"s":1,"t":0}}}"#;
        let doc = UniverseDoc::from_json(messy).unwrap();
        let canon = doc.to_json();
        assert_eq!(
            canon,
            r#"{"species":[{"name":"s","kind":"m"},{"name":"t","kind":"m"}],"ambient":{"s":3},"qsets":{"A":{"s":1}}}"#
        );
        assert_eq!(UniverseDoc::from_json(&canon).unwrap().to_json(), canon);
    }

    #[test]
    fn load_and_describe_agree() {
        let loaded = UniverseDoc::from_json(SODIUM).unwrap().load().unwrap();
        assert_eq!(loaded.ambient.qcard(), 6);
        assert_eq!(loaded.qsets["B"].qcard(), 2);
        let back = UniverseDoc::describe(&loaded.universe, &loaded.qsets);
        assert_eq!(back.to_json(), SODIUM);
    }

    #[test]
    fn schema_errors_name_the_field() {
        let bad = r#"{"species":[{"name":"e","kind":"m"}],"ambient":{"e":["x"]}}"#;
        let err = UniverseDoc::from_json(bad).unwrap().load().unwrap_err();
        assert!(err.to_string().contains("ambient.e"), "{err}");

        let too_many = r#"{"species":[{"name":"e","kind":"m"}],"ambient":{"e":1},"qsets":{"A":{"e":2}}}"#;
        let err = UniverseDoc::from_json(too_many).unwrap().load().unwrap_err();
        assert!(err.to_string().contains("qsets.A.e"), "{err}");

        let undeclared = r#"{"species":[],"ambient":{"e":1}}"#;
        let err = UniverseDoc::from_json(undeclared).unwrap().load().unwrap_err();
        assert!(err.to_string().contains("ambient.e"), "{err}");

        assert!(matches!(UniverseDoc::from_json("{"), Err(Error::Json(_))));
    }
}
