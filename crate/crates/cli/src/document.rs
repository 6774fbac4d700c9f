//! JSON documents for orbifolds and group actions.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use orbifold_core::action::SimplicialAction;
use orbifold_core::corpus::{CorpusEntry, Provenance};
use orbifold_core::{GroupKind, LocalGroupLabel, OrbifoldComplex, Simplex, SimplicialComplex};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// A labeled cell: vertex list, group order, kind token and, for
/// quotient-built orbifolds, generator tokens.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "LabelRepr", into = "LabelRepr")]
pub struct LabelEntry {
    pub cell: Vec<String>,
    pub order: u64,
    pub kind: String,
    pub generators: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LabelRepr {
    WithGenerators(Vec<String>, u64, String, Vec<String>),
    Plain(Vec<String>, u64, String),
}

impl From<LabelRepr> for LabelEntry {
    fn from(r: LabelRepr) -> Self {
        match r {
            LabelRepr::WithGenerators(cell, order, kind, g) => LabelEntry {
                cell,
                order,
                kind,
                generators: Some(g),
            },
            LabelRepr::Plain(cell, order, kind) => LabelEntry {
                cell,
                order,
                kind,
                generators: None,
            },
        }
    }
}

impl From<LabelEntry> for LabelRepr {
    fn from(e: LabelEntry) -> Self {
        match e.generators {
            Some(g) => LabelRepr::WithGenerators(e.cell, e.order, e.kind, g),
            None => LabelRepr::Plain(e.cell, e.order, e.kind),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbifoldDocument {
    pub dimension: usize,
    pub vertices: Vec<String>,
    pub maximal_cells: Vec<Vec<String>>,
    #[serde(default)]
    pub labels: Vec<LabelEntry>,
    #[serde(default)]
    pub boundary_faces: Vec<Vec<String>>,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

fn names(s: &Simplex) -> Vec<String> {
    s.vertices().iter().map(|v| v.to_string()).collect()
}

fn parse_simplex(cell: &[String]) -> Result<Simplex, CliError> {
    Simplex::new(cell.iter().map(String::as_str)).map_err(|e| CliError::Parse(e.to_string()))
}

impl OrbifoldDocument {
    pub fn from_orbifold(o: &OrbifoldComplex) -> Self {
        let k = o.complex();
        let labels = (0..k.len())
            .filter(|&id| !o.label(id).is_trivial())
            .map(|id| {
                let l = o.label(id);
                LabelEntry {
                    cell: names(&k.simplex(id)),
                    order: l.order(),
                    kind: l.kind().to_string(),
                    generators: l.generators().map(<[String]>::to_vec),
                }
            })
            .collect();
        OrbifoldDocument {
            dimension: o.dim().unwrap_or(0),
            vertices: k.vertices().iter().map(|v| v.to_string()).collect(),
            maximal_cells: k.maximal_cells().into_iter().map(|id| names(&k.simplex(id))).collect(),
            labels,
            boundary_faces: o.boundary_faces().iter().map(|&id| names(&k.simplex(id))).collect(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn from_entry(e: &CorpusEntry) -> Self {
        let mut doc = Self::from_orbifold(&e.orbifold);
        doc.metadata.insert("name".into(), e.name.clone());
        doc.metadata.insert("provenance".into(), e.provenance.tag().into());
        match &e.provenance {
            Provenance::Mirror(of) | Provenance::Double(of) => {
                doc.metadata.insert("source_entry".into(), of.clone());
            }
            Provenance::Quotient(a) => {
                doc.metadata.insert("group_order".into(), a.group().order().to_string());
            }
            Provenance::DirectLabeled => {}
        }
        if let Some((chi, source)) = &e.expected_chi {
            doc.metadata.insert("expected_chi".into(), chi.to_string());
            doc.metadata.insert("expected_chi_source".into(), source.to_string());
        }
        doc
    }

    pub fn complex(&self) -> Result<SimplicialComplex, CliError> {
        if self.maximal_cells.is_empty() {
            return Err(CliError::Parse("no maximal cells".into()));
        }
        let k = SimplicialComplex::new(self.maximal_cells.iter().map(|c| c.iter().map(String::as_str)))
            .map_err(|e| CliError::Parse(e.to_string()))?;
        let used: BTreeSet<&str> = k.vertices().iter().map(|v| v.as_str()).collect();
        let listed: BTreeSet<&str> = self.vertices.iter().map(String::as_str).collect();
        if listed.len() != self.vertices.len() {
            return Err(CliError::Parse("duplicate entries in vertices".into()));
        }
        if let Some(v) = listed.symmetric_difference(&used).next() {
            return Err(CliError::Parse(format!("vertex {v:?} is not both listed and used by a maximal cell")));
        }
        if k.dim() != Some(self.dimension) {
            return Err(CliError::Parse(format!(
                "dimension is {} but the maximal cells span dimension {}",
                self.dimension,
                k.dim().unwrap_or(0)
            )));
        }
        Ok(k)
    }

    /// Builds the orbifold without validating it.
    pub fn to_orbifold_unchecked(&self) -> Result<OrbifoldComplex, CliError> {
        let k = self.complex()?;
        let mut labels = Vec::with_capacity(self.labels.len());
        for e in &self.labels {
            let kind: GroupKind = e.kind.parse().map_err(|err: orbifold_core::OrbifoldError| CliError::Parse(err.to_string()))?;
            let mut label = LocalGroupLabel::new(e.order, kind).map_err(|err| CliError::Parse(err.to_string()))?;
            if let Some(g) = &e.generators {
                label = label.with_generators(g.clone());
            }
            labels.push((parse_simplex(&e.cell)?, label));
        }
        let boundary = self.boundary_faces.iter().map(|c| parse_simplex(c)).collect::<Result<Vec<_>, _>>()?;
        OrbifoldComplex::new(k, labels, boundary).map_err(|e| CliError::Parse(e.to_string()))
    }

    /// Builds and validates the orbifold.
    pub fn to_orbifold(&self) -> Result<OrbifoldComplex, CliError> {
        let o = self.to_orbifold_unchecked()?;
        let violations = o.validate();
        if violations.is_empty() {
            Ok(o)
        } else {
            Err(CliError::Invalid(violations))
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        Self::from_json(&read_text(path)?)
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// The base manifold of an action, inline or as a path relative to the
/// action document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BaseRef {
    Path(PathBuf),
    Inline(Box<OrbifoldDocument>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDocument {
    pub base: BaseRef,
    /// Each generator as a list of cycles of vertex names.
    pub generators: Vec<Vec<Vec<String>>>,
}

impl ActionDocument {
    pub fn from_action(a: &SimplicialAction) -> Self {
        let k = a.complex();
        let base = OrbifoldComplex::manifold(k.clone()).expect("acting complexes are pseudomanifolds");
        let generators = a
            .group()
            .generators()
            .iter()
            .map(|g| {
                g.cycles()
                    .into_iter()
                    .map(|c| c.into_iter().map(|v| k.vertex_name(v).to_string()).collect())
                    .collect()
            })
            .collect();
        ActionDocument {
            base: BaseRef::Inline(Box::new(OrbifoldDocument::from_orbifold(&base))),
            generators,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    /// Reads the document and its base, which must be a valid manifold.
    pub fn read(path: &Path) -> Result<SimplicialAction, CliError> {
        let doc: ActionDocument = serde_json::from_str(&read_text(path)?).map_err(|e| CliError::Parse(e.to_string()))?;
        let base = match &doc.base {
            BaseRef::Inline(d) => (**d).clone(),
            BaseRef::Path(p) => {
                let p = path.parent().map_or_else(|| p.clone(), |dir| dir.join(p));
                OrbifoldDocument::read(&p)?
            }
        };
        let o = base.to_orbifold()?;
        if !o.is_manifold() {
            return Err(CliError::Precondition("the base of an action must carry no labels".into()));
        }
        let generators = doc.generators.iter().map(|g| g.iter().map(|c| c.iter().map(String::as_str)));
        Ok(SimplicialAction::from_cycles(o.complex().clone(), generators)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use orbifold_core::corpus;

    #[test]
    fn labels_serialize_as_tuples() {
        let doc = OrbifoldDocument::from_entry(&corpus::entry("m1").unwrap());
        let json = doc.to_json();
        assert!(json.contains("\"reflection\""));
        let back = OrbifoldDocument::from_json(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.metadata["expected_chi"], "1/2");
    }

    #[test]
    fn structural_errors_are_parse_errors() {
        let mut doc = OrbifoldDocument::from_entry(&corpus::entry("s1").unwrap());
        doc.dimension = 2;
        assert!(matches!(doc.to_orbifold(), Err(CliError::Parse(_))));
        let mut doc = OrbifoldDocument::from_entry(&corpus::entry("s1").unwrap());
        doc.vertices.push("z".into());
        assert!(matches!(doc.to_orbifold(), Err(CliError::Parse(_))));
        let mut doc = OrbifoldDocument::from_entry(&corpus::entry("m1").unwrap());
        doc.labels[0].kind = "spherical".into();
        assert!(matches!(doc.to_orbifold(), Err(CliError::Parse(_))));
    }

    #[test]
    fn invalid_orbifolds_report_violations() {
        let mut doc = OrbifoldDocument::from_entry(&corpus::entry("teardrop3").unwrap());
        doc.labels.push(LabelEntry {
            cell: vec!["N".into(), "a".into()],
            order: 2,
            kind: "cyclic".into(),
            generators: None,
        });
        match doc.to_orbifold() {
            Err(CliError::Invalid(v)) => assert!(v.iter().any(|x| x.rule() == "DivisibilityViolation")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn actions_round_trip() {
        let a = corpus::t24_action();
        let doc = ActionDocument::from_action(&a);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t24.json");
        std::fs::write(&path, doc.to_json()).unwrap();
        let back = ActionDocument::read(&path).unwrap();
        assert_eq!(back.group().order(), 24);
    }
}
