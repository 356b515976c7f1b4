//! JSON pair documents, DOT export and census CSV.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{DoubleGrid, Family, FamilySpec, Grid};
use crate::graph::OrientedGraph;
use crate::group::PermGroup;
use crate::pair::OrientedPair;
use crate::perm::Perm;
use crate::quotient::CensusRow;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDocument {
    pub version: u32,
    pub n: usize,
    pub generators: Vec<Vec<u32>>,
    pub arcs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl PairDocument {
    pub fn from_pair(pair: &OrientedPair, family: Option<FamilySpec>, labels: Option<Vec<String>>) -> PairDocument {
        PairDocument {
            version: FORMAT_VERSION,
            n: pair.graph().n(),
            generators: pair.group().generators().iter().map(|g| g.images().to_vec()).collect(),
            arcs: pair.delta().iter().map(|&(u, v)| [u, v]).collect(),
            family,
            labels,
        }
    }

    /// A document for a family member, with coordinate labels.
    pub fn from_family(spec: &FamilySpec) -> Result<PairDocument> {
        let pair = spec.build()?;
        Ok(PairDocument::from_pair(&pair, Some(*spec), Some(family_labels(spec))))
    }

    /// Parses JSON text. Syntax errors carry their line and column.
    pub fn parse(text: &str) -> Result<PairDocument> {
        let doc: PairDocument = serde_json::from_str(text)
            .map_err(|e| Error::Document(format!("line {}, column {}: {e}", e.line(), e.column())))?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    fn validate(&self) -> Result<()> {
        if self.version != FORMAT_VERSION {
            return Err(Error::Document(format!(
                "version: unsupported format version {} (expected {FORMAT_VERSION})",
                self.version
            )));
        }
        for (i, g) in self.generators.iter().enumerate() {
            if g.len() != self.n {
                return Err(Error::Document(format!(
                    "generators[{i}]: has {} images, expected {}",
                    g.len(),
                    self.n
                )));
            }
        }
        for (i, &[u, v]) in self.arcs.iter().enumerate() {
            if u >= self.n || v >= self.n {
                return Err(Error::Document(format!("arcs[{i}]: vertex out of range 0..{}", self.n)));
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.n {
                return Err(Error::Document(format!("labels: {} labels for {} vertices", labels.len(), self.n)));
            }
        }
        Ok(())
    }

    pub fn to_pair(&self) -> Result<OrientedPair> {
        self.validate()?;
        let gens = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| Perm::from_images(g.clone()).map_err(|e| Error::Document(format!("generators[{i}]: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let graph = OrientedGraph::new(self.n, self.arcs.iter().map(|&[u, v]| (u, v)))
            .map_err(|e| Error::Document(format!("arcs: {e}")))?;
        let group = PermGroup::new(self.n, gens)?;
        OrientedPair::new(graph, group).map_err(|e| Error::Document(format!("generators: {e}")))
    }
}

/// Coordinate labels such as `(1,2)` or `(1,2)_0`.
pub fn family_labels(spec: &FamilySpec) -> Vec<String> {
    let s = spec.s.unwrap_or(0);
    match spec.family {
        Family::LexCycle => (0..2 * spec.r).map(|x| format!("({},{})", x / 2, x % 2)).collect(),
        Family::Gamma => {
            let g = Grid::new(spec.r, s);
            (0..g.n()).map(|x| format!("{:?}", g.coords(x))).map(strip).collect()
        }
        Family::GammaPlus => {
            let g = Grid::new(spec.r, s);
            g.plus_vertices().into_iter().map(|x| strip(format!("{:?}", g.coords(x)))).collect()
        }
        Family::GammaDouble => {
            let d = DoubleGrid::new(spec.r, s);
            (0..d.n())
                .map(|x| {
                    let (i, j, e) = d.coords(x);
                    format!("({i},{j})_{e}")
                })
                .collect()
        }
    }
}

fn strip(s: String) -> String {
    s.replace(' ', "")
}

pub fn to_dot(pair: &OrientedPair, name: &str, labels: Option<&[String]>) -> String {
    pair.graph().to_dot(name, labels)
}

/// CSV with columns family, r, s, subgroup-id, length, oriented, maximal.
pub fn census_csv(family: &str, r: usize, s: Option<usize>, rows: &[CensusRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Document(e.to_string());
    w.write_record(["family", "r", "s", "subgroup-id", "length", "oriented", "maximal"]).map_err(io)?;
    let s = s.map(|x| x.to_string()).unwrap_or_default();
    for row in rows {
        w.write_record([
            family.to_string(),
            r.to_string(),
            s.clone(),
            row.subgroup_id.to_string(),
            row.length.to_string(),
            row.oriented.to_string(),
            row.maximal.to_string(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Document(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{Orientation, Variant};

    #[test]
    fn round_trip() {
        let spec = FamilySpec::gamma(3, 4, Variant::H, Orientation::Con2c);
        let doc = PairDocument::from_family(&spec).unwrap();
        let back = PairDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(doc, back);
        let (a, b) = (spec.build().unwrap(), back.to_pair().unwrap());
        assert_eq!(a.delta(), b.delta());
        assert_eq!(a.group().generators(), b.group().generators());
        assert_eq!(doc.labels.as_ref().unwrap()[5], "(1,1)");
    }

    #[test]
    fn positioned_errors() {
        let err = PairDocument::parse("{\n  \"version\": 1,\n  \"n\": 3,\n  oops\n}").unwrap_err();
        assert!(err.to_string().contains("line 4"), "{err}");
        let bad = r#"{"version":1,"n":3,"generators":[[0,1]],"arcs":[]}"#;
        assert!(PairDocument::parse(bad).unwrap_err().to_string().contains("generators[0]"));
        let bad = r#"{"version":1,"n":3,"generators":[[0,0,1]],"arcs":[]}"#;
        let doc = PairDocument::parse(bad).unwrap();
        assert!(doc.to_pair().unwrap_err().to_string().contains("generators[0]"));
    }
}
