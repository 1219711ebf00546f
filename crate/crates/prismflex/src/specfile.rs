//! Fully solved polyhedron files (angles in radians).
//!
//! ```toml
//! format = "prismflex-spec-v1"
//! genus = 0
//! samples = 50
//! truncation = 4.0          # only when set explicitly
//!
//! [base]                    # canonical juncture, every juncture is a reflection of it
//! type = "I_OEE"
//! n = 4
//! beta = [...]              # radians
//! B = [...]
//! lengths = [...]
//! zsign = [1, 1, -1, -1]
//!
//! [[juncture]]              # one per juncture, in order
//! variant = "base"          # base | A | B | C
//! beta_deg = [...]          # effective angles, informational
//! B_deg = [...]
//!
//! [[segment]]               # one per segment, in order
//! orient = "-u"
//! length = 2.5              # omitted for unbounded ends
//! edge_lengths = [...]      # l_k of each parallel edge, omitted for unbounded ends
//! ```
//!
//! Floats are written in shortest round-trip form, so writing a parsed file
//! reproduces it byte for byte.

use std::path::Path;

use prismflex_core::{alternate_params, JunctureParams, PolyhedronSpec, SegmentSpec, SuspensionType, Variant};
use serde::{Deserialize, Serialize};

use crate::config::{parse_kind, parse_orient, parse_variant};
use crate::error::{Error, Result};

pub const FORMAT: &str = "prismflex-spec-v1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub format: String,
    pub genus: u8,
    pub samples: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<f64>,
    pub base: BaseEntry,
    #[serde(rename = "juncture")]
    pub junctures: Vec<JunctureEntry>,
    #[serde(rename = "segment")]
    pub segments: Vec<SegmentEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseEntry {
    #[serde(rename = "type")]
    pub kind: String,
    pub n: usize,
    #[serde(default, rename = "L_idx", skip_serializing_if = "Option::is_none")]
    pub oas_index: Option<usize>,
    pub beta: Vec<f64>,
    #[serde(rename = "B")]
    pub big_b: Vec<f64>,
    pub lengths: Vec<f64>,
    pub zsign: Vec<i8>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JunctureEntry {
    pub variant: String,
    #[serde(default)]
    pub beta_deg: Vec<f64>,
    #[serde(default, rename = "B_deg")]
    pub big_b_deg: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentEntry {
    pub orient: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_lengths: Option<Vec<f64>>,
}

/// A spec file decoded without any geometric validation, so that damaged
/// files can still be inspected.
#[derive(Debug, Clone, PartialEq)]
pub struct RawSpec {
    pub genus: u8,
    pub samples: usize,
    pub truncation: Option<f64>,
    pub base: JunctureParams,
    pub variants: Vec<Variant>,
    pub segments: Vec<SegmentSpec>,
    pub stored_edge_lengths: Vec<Option<Vec<f64>>>,
}

/// A stored parallel-edge length that disagrees with the recomputed one.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeMismatch {
    pub segment: usize,
    pub edge: usize,
    pub stored: f64,
    pub expected: f64,
}

/// Degrees rounded to 10 decimals for the informational juncture tables.
fn display_deg(a: f64) -> f64 {
    (a.to_degrees() * 1e10).round() / 1e10
}

impl SpecFile {
    pub fn from_poly(poly: &PolyhedronSpec, samples: usize) -> Self {
        let base = poly.base();
        let oas_index = match base.stype() {
            SuspensionType::IIIOae { oas_index } => Some(oas_index),
            _ => None,
        };
        let junctures = poly
            .junctures()
            .iter()
            .map(|j| JunctureEntry {
                variant: j.variant().tag().to_string(),
                beta_deg: j.betas().iter().map(|&a| display_deg(a)).collect(),
                big_b_deg: j.big_bs().iter().map(|&a| display_deg(a)).collect(),
            })
            .collect();
        let segments = poly
            .segments()
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let finite = !poly.is_unbounded(i);
                SegmentEntry {
                    orient: s.orient.tag().to_string(),
                    length: finite.then_some(s.length),
                    edge_lengths: poly.segment_edge_lengths(i).map(|l| l.to_vec()),
                }
            })
            .collect();
        SpecFile {
            format: FORMAT.to_string(),
            genus: poly.genus(),
            samples,
            truncation: poly.explicit_truncation(),
            base: BaseEntry {
                kind: base.stype().tag().to_string(),
                n: base.n(),
                oas_index,
                beta: base.base_beta().to_vec(),
                big_b: base.base_big_b().to_vec(),
                lengths: base.lengths().to_vec(),
                zsign: base.zsign().to_vec(),
            },
            junctures,
            segments,
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("spec files always serialize")
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let spec: SpecFile = toml::from_str(text).map_err(|e| Error::Parse(format!("spec: {e}")))?;
        if spec.format != FORMAT {
            return Err(Error::field("format", format!("\"{}\" is not \"{FORMAT}\"", spec.format)));
        }
        Ok(spec)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml(&text)
    }

    /// Decodes every field without checking geometry.
    pub fn to_raw(&self) -> Result<RawSpec> {
        let b = &self.base;
        let kind = parse_kind(&b.kind, b.oas_index).map_err(|e| match e {
            Error::Field { field, message } => Error::field(field.replace("juncture", "base"), message),
            other => other,
        })?;
        for (name, len) in [("base.beta", b.beta.len()), ("base.B", b.big_b.len()), ("base.zsign", b.zsign.len())] {
            if len != b.lengths.len() {
                return Err(Error::field(name, format!("has {len} entries but base.lengths has {}", b.lengths.len())));
            }
        }
        if b.n != b.lengths.len() {
            return Err(Error::field(
                "base.n",
                format!("{} does not match the {} stored lengths", b.n, b.lengths.len()),
            ));
        }
        if self.samples == 0 {
            return Err(Error::field("samples", "must be at least 1"));
        }
        let base = JunctureParams::from_parts_unchecked(
            kind,
            b.beta.clone(),
            b.big_b.clone(),
            b.lengths.clone(),
            b.zsign.clone(),
            Variant::Base,
        );
        let variants = self
            .junctures
            .iter()
            .enumerate()
            .map(|(i, j)| parse_variant(&format!("juncture[{i}].variant"), &j.variant))
            .collect::<Result<Vec<_>>>()?;
        let segments = self
            .segments
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let orient = parse_orient(&format!("segment[{i}].orient"), &s.orient)?;
                Ok(SegmentSpec::new(s.length.unwrap_or(f64::INFINITY), orient))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RawSpec {
            genus: self.genus,
            samples: self.samples,
            truncation: self.truncation,
            base,
            variants,
            segments,
            stored_edge_lengths: self.segments.iter().map(|s| s.edge_lengths.clone()).collect(),
        })
    }

    /// Decodes and fully validates.
    pub fn build(&self, tol: f64) -> Result<PolyhedronSpec> {
        let raw = self.to_raw()?;
        let poly = raw.build_geometry(tol)?;
        if let Some(m) = raw.edge_mismatches(&poly, tol).first() {
            return Err(Error::field(
                format!("segment[{}].edge_lengths[{}]", m.segment, m.edge),
                format!("stored {} but the juncture offsets give {}", m.stored, m.expected),
            ));
        }
        Ok(poly)
    }
}

impl RawSpec {
    /// Validates the base juncture and assembles the polyhedron; stored edge
    /// lengths are not consulted.
    pub fn build_geometry(&self, tol: f64) -> Result<PolyhedronSpec> {
        self.base.validate(tol).map_err(|e| Error::core("base", e))?;
        let junctures = self.variants.iter().map(|&v| alternate_params(&self.base, v)).collect();
        PolyhedronSpec::from_parts(self.genus, junctures, self.segments.clone(), self.truncation)
            .map_err(|e| Error::core("polyhedron", e))
    }

    /// Stored parallel-edge lengths that differ from `poly` by more than
    /// `tol` relative to the segment length.
    pub fn edge_mismatches(&self, poly: &PolyhedronSpec, tol: f64) -> Vec<EdgeMismatch> {
        let mut out = Vec::new();
        for (j, stored) in self.stored_edge_lengths.iter().enumerate() {
            let expected = if j < poly.segment_count() { poly.segment_edge_lengths(j) } else { None };
            match (stored, expected) {
                (Some(s), Some(e)) => {
                    for (k, &want) in e.iter().enumerate() {
                        let got = s.get(k).copied().unwrap_or(f64::NAN);
                        if !((got - want).abs() <= tol * want.max(1.0)) {
                            out.push(EdgeMismatch { segment: j, edge: k, stored: got, expected: want });
                        }
                    }
                }
                (Some(s), None) => out.push(EdgeMismatch {
                    segment: j,
                    edge: 0,
                    stored: s.first().copied().unwrap_or(f64::NAN),
                    expected: f64::INFINITY,
                }),
                (None, Some(e)) => out.push(EdgeMismatch { segment: j, edge: 0, stored: f64::NAN, expected: e[0] }),
                (None, None) => {}
            }
        }
        out
    }
}
