//! JSON documents exchanged by the command-line tool and stored under
//! `fixtures/`.
//!
//! Elements are always referred to by name. A poset document lists its
//! cover relations as `[lower, upper]` pairs; any relation list is accepted
//! on input and closed transitively.

use indexmap::IndexMap;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::dimension::DimensionResult;
use crate::error::{Error, Result};
use crate::interval::{is_consistent, poset_from_representation, MixedInterval, Representation};
use crate::poset::{LinearExtension, Poset, Realizer};
use crate::reversal::CycleWitness;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDoc {
    pub elements: Vec<String>,
    #[serde(default)]
    pub relations: Vec<[String; 2]>,
}

impl PosetDoc {
    pub fn from_poset(poset: &Poset) -> Self {
        PosetDoc {
            elements: poset.names().to_vec(),
            relations: poset
                .covers()
                .into_iter()
                .map(|(lo, hi)| [poset.name(lo).to_owned(), poset.name(hi).to_owned()])
                .collect(),
        }
    }

    pub fn to_poset(&self) -> Result<Poset> {
        let relations: Vec<(&str, &str)> = self.relations.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        Poset::new(&self.elements, &relations)
    }
}

/// A poset with an optional interval representation.
///
/// On input either part may be omitted: a missing poset is derived from the
/// intervals, and when both are given they must agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub intervals: Option<IndexMap<String, MixedInterval>>,
}

impl InstanceDoc {
    pub fn new(poset: &Poset, rep: Option<&Representation>) -> Self {
        let doc = PosetDoc::from_poset(poset);
        InstanceDoc {
            elements: Some(doc.elements),
            relations: Some(doc.relations),
            intervals: rep.map(|r| r.intervals.clone()),
        }
    }

    pub fn representation(&self) -> Option<Representation> {
        self.intervals.clone().map(|intervals| Representation { intervals })
    }

    pub fn to_poset(&self) -> Result<Poset> {
        let rep = self.representation();
        let poset = match (&self.elements, &rep) {
            (None, Some(rep)) => return Ok(poset_from_representation(rep)),
            (None, None) => return Err(Error::Parse("document has neither elements nor intervals".into())),
            (Some(elements), _) => PosetDoc {
                elements: elements.clone(),
                relations: self.relations.clone().unwrap_or_default(),
            }
            .to_poset()?,
        };
        if let Some(rep) = &rep {
            if !is_consistent(rep, &poset)? {
                return Err(Error::Inconsistent);
            }
        }
        Ok(poset)
    }

    /// The poset and the representation, which must be present.
    pub fn to_represented(&self) -> Result<(Poset, Representation)> {
        let rep = self
            .representation()
            .ok_or_else(|| Error::Parse("document has no intervals".into()))?;
        Ok((self.to_poset()?, rep))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RealizerDoc {
    pub extensions: Vec<Vec<String>>,
}

impl RealizerDoc {
    pub fn from_realizer(poset: &Poset, realizer: &Realizer) -> Self {
        RealizerDoc {
            extensions: realizer
                .extensions
                .iter()
                .map(|e| e.names(poset).into_iter().map(str::to_owned).collect())
                .collect(),
        }
    }

    /// Resolves names against `poset`. Whether each list is a linear
    /// extension is left to [`crate::poset::verify_realizer`].
    pub fn to_realizer(&self, poset: &Poset) -> Result<Realizer> {
        self.extensions
            .iter()
            .map(|names| LinearExtension::from_names(poset, names))
            .collect::<Result<Vec<_>>>()
            .map(Realizer::new)
    }
}

/// A cycle witness as a list of `[above, below]` pairs.
pub fn witness_doc(poset: &Poset, witness: &CycleWitness) -> Vec<[String; 2]> {
    witness
        .pairs
        .iter()
        .map(|p| [poset.name(p.above).to_owned(), poset.name(p.below).to_owned()])
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub refuted_size: usize,
    pub nodes_explored: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionDoc {
    pub dimension: usize,
    pub realizer: RealizerDoc,
    pub certificate: CertificateDoc,
}

impl DimensionDoc {
    pub fn new(poset: &Poset, result: &DimensionResult) -> Self {
        DimensionDoc {
            dimension: result.dimension,
            realizer: RealizerDoc::from_realizer(poset, &result.realizer),
            certificate: CertificateDoc {
                refuted_size: result.certificate.refuted_size,
                nodes_explored: result.certificate.nodes_explored,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognizeDoc {
    pub interval_order: bool,
    pub unit_interval_order: bool,
    /// A copy of 2+2, or of 1+3 for interval orders that are not unit.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorDoc {
    pub error: String,
    pub detail: String,
}

impl From<&Error> for ErrorDoc {
    fn from(err: &Error) -> Self {
        ErrorDoc { error: err.code().to_owned(), detail: err.to_string() }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("documents serialize");
    out.push('\n');
    out
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    #[test]
    fn poset_doc_lists_covers() {
        let p = Poset::new(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        let doc = PosetDoc::from_poset(&p);
        assert_eq!(doc.relations.len(), 2);
        assert_eq!(doc.to_poset().unwrap(), p);
    }

    #[test]
    fn instance_doc_round_trip() {
        let inst = instances::named("figure2").unwrap();
        let doc = InstanceDoc::new(&inst.poset, inst.representation.as_ref());
        let back: InstanceDoc = from_json(&to_json(&doc)).unwrap();
        assert_eq!(back.to_poset().unwrap(), inst.poset);

        let only_intervals = InstanceDoc { elements: None, relations: None, ..back.clone() };
        assert_eq!(only_intervals.to_poset().unwrap(), inst.poset);

        let wrong = InstanceDoc { relations: Some(vec![]), ..back };
        assert_eq!(wrong.to_poset(), Err(Error::Inconsistent));
    }

    #[test]
    fn realizer_doc_names() {
        let p = instances::two_plus_two();
        let doc: RealizerDoc = from_json(r#"{"extensions": [["a","b","c"]]}"#).unwrap();
        let r = doc.to_realizer(&p).unwrap();
        assert_eq!(crate::poset::verify_realizer(&p, &r), Err(Error::InvalidExtension(0)));
        let doc: RealizerDoc = from_json(r#"{"extensions": [["a","q"]]}"#).unwrap();
        assert!(matches!(doc.to_realizer(&p), Err(Error::UnknownElement(_))));
        assert!(matches!(from_json::<RealizerDoc>("{"), Err(Error::Parse(_))));
    }
}
