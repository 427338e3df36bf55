//! Serialisable views of core results. Field order is part of the output
//! format.

use drg_core::catalog::{CatalogEntry, Provenance};
use drg_core::enumerate::Emitted;
use drg_core::graphcheck::{
    AntipodalCheck, CertWitness, Certification, Quotient, TerwilligerScan,
};
use drg_core::spectral::integer_value;
use drg_core::{FeasibilityReport, IntersectionArray, Rational, Spectrum, Tolerances};
use serde::Serialize;

/// One line of enumeration output.
#[derive(Serialize)]
pub struct ArrayRecord<'a> {
    pub array: &'a IntersectionArray,
    pub v: Option<u64>,
    pub k: u32,
    #[serde(rename = "D")]
    pub d: usize,
    /// `k_2 / k`.
    pub ratio: Option<Rational>,
    pub report: &'a FeasibilityReport,
}

impl<'a> ArrayRecord<'a> {
    pub fn new(e: &'a Emitted) -> Self {
        ArrayRecord {
            array: &e.array,
            v: e.array.derive().ok().map(|p| p.v),
            k: e.array.valency(),
            d: e.array.diameter(),
            ratio: e.array.ratio_k2_over_k(),
            report: &e.report,
        }
    }

    /// The record as one JSON line, newline included.
    pub fn line(e: &Emitted) -> String {
        let mut s = serde_json::to_string(&ArrayRecord::new(e)).expect("records serialise");
        s.push('\n');
        s
    }
}

#[derive(Serialize)]
pub struct SpectrumView {
    pub array: IntersectionArray,
    pub v: u64,
    pub eigenvalues: Vec<f64>,
    /// Nearest integer when an eigenvalue is integral to within tolerance.
    pub integral: Vec<Option<i64>>,
    pub multiplicities: Vec<u64>,
    pub raw_multiplicities: Vec<f64>,
    pub mu: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sequences: Option<Vec<Vec<f64>>>,
}

impl SpectrumView {
    pub fn new(arr: &IntersectionArray, s: &Spectrum, tol: &Tolerances, sequences: bool) -> Self {
        SpectrumView {
            array: arr.clone(),
            v: s.multiplicities.iter().sum(),
            eigenvalues: s.eigenvalues.clone(),
            integral: s.eigenvalues.iter().map(|&t| integer_value(t, tol.integer)).collect(),
            multiplicities: s.multiplicities.clone(),
            raw_multiplicities: s.raw_multiplicities.clone(),
            mu: s.mu.clone(),
            sequences: sequences.then(|| s.sequences.iter().map(|q| q.u.clone()).collect()),
        }
    }
}

#[derive(Serialize)]
pub struct SpectrumComparison {
    /// Distinct adjacency eigenvalues with multiplicities.
    pub adjacency: Vec<(f64, usize)>,
    pub biggs: Vec<u64>,
    pub matches: bool,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub vertices: usize,
    pub edges: usize,
    pub distance_regular: bool,
    pub array: Option<IntersectionArray>,
    pub witness: Option<CertWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_array: Option<IntersectionArray>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_expected: Option<bool>,
    pub terwilliger: Option<TerwilligerScan>,
    pub antipodal: Option<AntipodalCheck>,
    /// Quotient of the distance partition from vertex 0.
    pub quotient: Option<Quotient>,
    /// Every vertex's quotient equals the array's tridiagonal matrix.
    pub quotients_match: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumComparison>,
}

impl VerifyReport {
    pub fn new(vertices: usize, edges: usize, cert: &Certification) -> Self {
        VerifyReport {
            vertices,
            edges,
            distance_regular: cert.is_drg(),
            array: cert.array.clone(),
            witness: cert.witness,
            expected_array: None,
            matches_expected: None,
            terwilliger: None,
            antipodal: None,
            quotient: None,
            quotients_match: None,
            spectrum: None,
        }
    }

    /// Every check that ran came out positive.
    pub fn passed(&self) -> bool {
        self.distance_regular
            && self.matches_expected != Some(false)
            && self.quotients_match != Some(false)
            && self.spectrum.as_ref().is_none_or(|s| s.matches)
    }
}

#[derive(Serialize)]
pub struct CatalogView<'a> {
    pub name: &'a str,
    pub array: &'a IntersectionArray,
    pub provenance: &'a Provenance,
    pub notes: &'a str,
    pub fixture: bool,
}

impl<'a> CatalogView<'a> {
    pub fn new(e: &'a CatalogEntry) -> Self {
        CatalogView {
            name: e.name,
            array: &e.array,
            provenance: &e.provenance,
            notes: e.notes,
            fixture: e.fixture.is_some(),
        }
    }
}

/// The catalog as the pretty-printed document stored in `data/catalog.json`.
pub fn catalog_document() -> String {
    let entries = drg_core::catalog::list();
    let views: Vec<_> = entries.iter().map(CatalogView::new).collect();
    let mut s = serde_json::to_string_pretty(&views).expect("catalog serialises");
    s.push('\n');
    s
}

/// Multiset of adjacency eigenvalues against the Biggs multiplicities,
/// matched in descending order.
pub fn compare_spectra(adjacency: Vec<(f64, usize)>, s: &Spectrum, tol: f64) -> SpectrumComparison {
    let matches = adjacency.len() == s.eigenvalues.len()
        && adjacency
            .iter()
            .zip(s.eigenvalues.iter().zip(&s.multiplicities))
            .all(|(&(a, m), (&t, &bm))| (a - t).abs() <= tol && m as u64 == bm);
    SpectrumComparison {
        adjacency,
        biggs: s.multiplicities.clone(),
        matches,
    }
}
