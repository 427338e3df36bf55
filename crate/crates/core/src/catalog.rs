//! Named arrays with their provenance.
//!
//! Entries backed by a graph carry the graph; the test suite certifies
//! each one and compares the result with the stored array.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arrays::IntersectionArray;
use crate::graphcheck::{generators, parse_edge_list, Graph};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("no catalog entry named {0:?}")]
    NotFound(String),
    #[error("invalid family parameter: {0}")]
    InvalidParameter(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "kebab-case"))]
pub enum Provenance {
    PaperRemark,
    CertifiedFromGraph,
    Family { family: &'static str, params: Vec<u32> },
}

/// How to obtain the graph behind a certified entry.
#[derive(Clone, Copy, Debug)]
pub enum Fixture {
    Generator(fn() -> Graph),
    EdgeList(&'static str),
}

impl Fixture {
    pub fn graph(&self) -> Graph {
        match self {
            Fixture::Generator(f) => f(),
            Fixture::EdgeList(text) => parse_edge_list(text).expect("bundled fixture parses"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub array: IntersectionArray,
    pub provenance: Provenance,
    pub notes: &'static str,
    pub fixture: Option<Fixture>,
}

impl CatalogEntry {
    pub fn graph(&self) -> Option<Graph> {
        self.fixture.map(|f| f.graph())
    }

    pub fn is_taylor(&self) -> bool {
        self.notes.contains("taylor")
    }
}

pub const CONWAY_SMITH_EDGES: &str = include_str!("../fixtures/conway-smith.edges");
pub const DORO_EDGES: &str = include_str!("../fixtures/doro.edges");
pub const GQ22_FLAG_EDGES: &str = include_str!("../fixtures/gq22-flags.edges");

/// A family member together with any caveat attached to the parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyArray {
    pub array: IntersectionArray,
    pub note: Option<String>,
}

/// `{2mu, 2mu-1, mu, 1; 1, mu, 2mu-1, 2mu}`.
pub fn hadamard_family(mu: u32) -> Result<FamilyArray, CatalogError> {
    if mu == 0 || mu > u32::MAX / 2 {
        return Err(CatalogError::InvalidParameter("hadamard family needs mu >= 1"));
    }
    let array = IntersectionArray::new(
        vec![2 * mu, 2 * mu - 1, mu, 1],
        vec![1, mu, 2 * mu - 1, 2 * mu],
    )
    .map_err(|_| CatalogError::InvalidParameter("hadamard family needs mu >= 1"))?;
    Ok(FamilyArray {
        array,
        note: Some(format!("exists for each Hadamard matrix of order {}", 2 * mu)),
    })
}

fn flag_shape(s: u32, d: u32) -> Result<(Vec<u32>, Vec<u32>), CatalogError> {
    if s < 2 || d < 2 || d > 1000 || s > u32::MAX / 2 {
        return Err(CatalogError::InvalidParameter("flag family needs s >= 2, d >= 2"));
    }
    let n = 2 * d as usize;
    let mut b = vec![s; n];
    b[0] = 2 * s;
    Ok((b, vec![1; n]))
}

fn flag_note(d: u32) -> Option<String> {
    (d != 3 && d != 4).then(|| String::from("excluded by 2d in {6,8}"))
}

/// Flag graph of a generalized `2d`-gon of order `(s, s)`: diameter `2d`,
/// `b = (2s, s, ..., s)`, `c = (1, ..., 1, 2)`.
pub fn flag_family(s: u32, d: u32) -> Result<FamilyArray, CatalogError> {
    let (b, mut c) = flag_shape(s, d)?;
    *c.last_mut().expect("non-empty") = 2;
    Ok(FamilyArray {
        array: IntersectionArray::new(b, c).expect("valid shape"),
        note: flag_note(d),
    })
}

/// The same family with every `c_i = 1`, exactly as the shape is usually
/// abbreviated. Kept for comparison; it fails the spectral checks.
pub fn flag_family_literal(s: u32, d: u32) -> Result<FamilyArray, CatalogError> {
    let (b, c) = flag_shape(s, d)?;
    Ok(FamilyArray {
        array: IntersectionArray::new(b, c).expect("valid shape"),
        note: flag_note(d),
    })
}

pub const TERWILLIGER_EXCEPTION_NAMES: [&str; 3] = ["icosahedron", "conway-smith", "doro"];

/// Arrays of the three named Terwilliger graphs, in the order of
/// [`TERWILLIGER_EXCEPTION_NAMES`].
pub fn terwilliger_exceptions() -> [IntersectionArray; 3] {
    [
        "{5,2,1;1,2,5}".parse().expect("literal"),
        "{10,6,4,1;1,2,6,10}".parse().expect("literal"),
        "{10,6,4;1,2,5}".parse().expect("literal"),
    ]
}

fn pentagon() -> Graph {
    generators::cycle(5).expect("valid")
}

fn cube3() -> Graph {
    generators::hypercube(3).expect("valid")
}

fn cube4() -> Graph {
    generators::hypercube(4).expect("valid")
}

fn johnson63() -> Graph {
    generators::johnson(6, 3).expect("valid")
}

fn johnson73() -> Graph {
    generators::johnson(7, 3).expect("valid")
}

fn certified(
    name: &'static str,
    array: &str,
    notes: &'static str,
    fixture: Fixture,
) -> CatalogEntry {
    CatalogEntry {
        name,
        array: array.parse().expect("literal"),
        provenance: Provenance::CertifiedFromGraph,
        notes,
        fixture: Some(fixture),
    }
}

fn family(
    name: &'static str,
    family: &'static str,
    params: Vec<u32>,
    array: IntersectionArray,
    notes: &'static str,
) -> CatalogEntry {
    CatalogEntry {
        name,
        array,
        provenance: Provenance::Family { family, params },
        notes,
        fixture: None,
    }
}

/// Every entry, in a fixed order.
pub fn list() -> Vec<CatalogEntry> {
    use Fixture::*;
    vec![
        certified("petersen", "{3,2;1,1}", "", Generator(generators::petersen)),
        certified("pentagon", "{2,1;1,1}", "", Generator(pentagon)),
        certified("3-cube", "{3,2,1;1,2,3}", "taylor", Generator(cube3)),
        certified("4-cube", "{4,3,2,1;1,2,3,4}", "hadamard mu=2", Generator(cube4)),
        certified("johnson-6-3", "{9,4,1;1,4,9}", "taylor", Generator(johnson63)),
        certified("johnson-7-3", "{12,6,2;1,4,9}", "", Generator(johnson73)),
        certified("icosahedron", "{5,2,1;1,2,5}", "taylor; terwilliger", Generator(generators::icosahedron)),
        certified("conway-smith", "{10,6,4,1;1,2,6,10}", "terwilliger; locally Petersen", EdgeList(CONWAY_SMITH_EDGES)),
        certified("doro", "{10,6,4;1,2,5}", "terwilliger; locally Petersen", EdgeList(DORO_EDGES)),
        certified("gq22-flags", "{4,2,2,2;1,1,1,2}", "flag graph, s=2, d=2", EdgeList(GQ22_FLAG_EDGES)),
        family(
            "hadamard-4",
            "hadamard",
            vec![4],
            hadamard_family(4).expect("valid").array,
            "k2/k = 7/4",
        ),
        family(
            "flag-hexagon-2",
            "flag",
            vec![2, 3],
            flag_family(2, 3).expect("valid").array,
            "c_D = 2; the all-ones shape gives non-integral multiplicities",
        ),
    ]
}

pub fn lookup(name: &str) -> Result<CatalogEntry, CatalogError> {
    list()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::NotFound(name.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcheck::certify;
    use crate::spectral::{spectrum, Tolerances};
    use crate::Rational;
    use alloc::string::ToString;

    #[test]
    fn lookups() {
        assert_eq!(lookup("4-cube").unwrap().array.to_string(), "{4,3,2,1;1,2,3,4}");
        assert_eq!(lookup("4-cube").unwrap().provenance, Provenance::CertifiedFromGraph);
        assert_eq!(lookup("icosahedron").unwrap().array.to_string(), "{5,2,1;1,2,5}");
        assert_eq!(lookup("nonexistent").unwrap_err(), CatalogError::NotFound("nonexistent".into()));
    }

    #[test]
    fn hadamard() {
        assert_eq!(hadamard_family(2).unwrap().array.to_string(), "{4,3,2,1;1,2,3,4}");
        assert_eq!(hadamard_family(1).unwrap().array.to_string(), "{2,1,1,1;1,1,1,2}");
        assert_eq!(hadamard_family(4).unwrap().array.to_string(), "{8,7,4,1;1,4,7,8}");
        assert!(hadamard_family(0).is_err());
        for mu in 1..10u32 {
            let a = hadamard_family(mu).unwrap().array;
            let expected = Rational::new(2 * mu as i128 - 1, mu as i128).unwrap();
            assert_eq!(a.ratio_k2_over_k(), Some(expected));
        }
    }

    #[test]
    fn flags() {
        let lit = flag_family_literal(2, 3).unwrap();
        assert_eq!(lit.array.to_string(), "{4,2,2,2,2,2;1,1,1,1,1,1}");
        assert_eq!(lit.note, None);
        assert_eq!(flag_family_literal(2, 4).unwrap().array.diameter(), 8);
        assert!(flag_family(2, 5).unwrap().note.unwrap().contains("{6,8}"));
        assert!(flag_family(1, 3).is_err());
        assert!(spectrum(&lit.array, &Tolerances::default()).is_err());
        let fixed = flag_family(2, 3).unwrap().array;
        let s = spectrum(&fixed, &Tolerances::default()).unwrap();
        assert_eq!(s.multiplicities, [1, 21, 27, 28, 27, 21, 64]);
        assert_eq!(fixed.derive().unwrap().v, 189);
        let gq = certify(&parse_edge_list(GQ22_FLAG_EDGES).unwrap()).unwrap();
        assert_eq!(gq.array.unwrap(), flag_family(2, 2).unwrap().array);
    }

    #[test]
    fn exceptions_match_entries() {
        for (name, arr) in TERWILLIGER_EXCEPTION_NAMES.iter().zip(terwilliger_exceptions()) {
            assert_eq!(lookup(name).unwrap().array, arr);
        }
    }

    #[test]
    fn taylor_entries_have_k2_equal_k() {
        let taylors: Vec<_> = list().into_iter().filter(CatalogEntry::is_taylor).collect();
        assert_eq!(taylors.len(), 3);
        for e in taylors {
            let d = e.array.derive().unwrap();
            assert_eq!(d.k2(), Some(d.k), "{}", e.name);
            assert_eq!(e.array.diameter(), 3);
        }
    }
}
