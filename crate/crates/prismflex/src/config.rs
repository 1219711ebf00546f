//! Hand-written polyhedron descriptions (angles in degrees).
//!
//! ```toml
//! genus = 0            # 0 or 1
//! samples = 50         # sweep size, default 50
//! truncate = 4.0       # optional length of the rendered unbounded ends
//!
//! [juncture]
//! type = "I_OEE"       # I_OEE | II_AEE | II_OEE | III_OAE
//! n = 4
//! beta = [60, 80, 100, 130]
//! lengths = [1.0]      # free lengths, or all N for an explicit set
//!
//! [[segment]]
//! orient = "-u"
//! [[segment]]
//! orient = "+w"
//! length = 2.5
//! [[segment]]
//! orient = "+u"
//! ```
//!
//! Per type, `beta`, `B` and `lengths` hold:
//!
//! | type      | `beta` | `B` | `lengths` (free)           |
//! |-----------|--------|-----|----------------------------|
//! | `I_OEE`   | N      | -   | `L_1..L_{M−1}`             |
//! | `II_AEE`  | N      | -   | `L_1..L_{M−1}`             |
//! | `II_OEE`  | M      | M   | all but `dependents` (`L_1` when M = 2) |
//! | `III_OAE` | 1      | 1   | `L_1..L_{N−2}`, plus `L_idx` |
//!
//! Giving all `N` lengths together with `N` values of both `beta` and `B`
//! skips the solve and takes the set as is (it must still satisfy every
//! relation of its type).

use std::path::Path;

use prismflex_core::juncture::sign_pattern_for;
use prismflex_core::{
    make_type1, make_type2_aee, make_type2_oee, make_type3_oae, JunctureParams, Orient, PolyhedronSpec, SegmentSpec,
    SuspensionType, Variant,
};
use serde::Deserialize;

use crate::error::{Error, Result};

pub const DEFAULT_SAMPLES: usize = 50;
/// Relation tolerance for explicit parameter sets.
pub const EXPLICIT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyhedronConfig {
    #[serde(default)]
    pub genus: u8,
    pub samples: Option<usize>,
    pub truncate: Option<f64>,
    pub juncture: JunctureConfig,
    #[serde(default, rename = "segment")]
    pub segments: Vec<SegmentConfig>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JunctureConfig {
    #[serde(rename = "type")]
    pub kind: String,
    pub n: usize,
    pub beta: Vec<f64>,
    #[serde(default, rename = "B")]
    pub big_b: Vec<f64>,
    pub lengths: Vec<f64>,
    #[serde(rename = "L_idx")]
    pub oas_index: Option<usize>,
    /// II_OEE: 1-based indices of the two solved lengths.
    pub dependents: Option<[usize; 2]>,
    /// Free Δz signs (M of them, or 2 for III_OAE).
    pub signs: Option<Vec<i8>>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentConfig {
    pub orient: String,
    pub length: Option<f64>,
}

pub fn parse_kind(tag: &str, oas_index: Option<usize>) -> Result<SuspensionType> {
    match tag {
        "I_OEE" => Ok(SuspensionType::IOee),
        "II_AEE" => Ok(SuspensionType::IIAee),
        "II_OEE" => Ok(SuspensionType::IIOee),
        "III_OAE" => match oas_index {
            Some(l) => Ok(SuspensionType::IIIOae { oas_index: l }),
            None => Err(Error::field("juncture.L_idx", "required for III_OAE, in [3, N-2]")),
        },
        other => {
            Err(Error::field("juncture.type", format!("\"{other}\" is not one of I_OEE, II_AEE, II_OEE, III_OAE")))
        }
    }
}

pub fn parse_orient(field: &str, tag: &str) -> Result<Orient> {
    Orient::parse(tag).ok_or_else(|| Error::field(field, format!("\"{tag}\" is not one of +u, -u, +w, -w")))
}

pub fn parse_variant(field: &str, tag: &str) -> Result<Variant> {
    match tag {
        "base" => Ok(Variant::Base),
        "A" => Ok(Variant::A),
        "B" => Ok(Variant::B),
        "C" => Ok(Variant::C),
        other => Err(Error::field(field, format!("\"{other}\" is not one of base, A, B, C"))),
    }
}

fn radians(field: &str, deg: &[f64]) -> Result<Vec<f64>> {
    deg.iter()
        .enumerate()
        .map(|(i, &d)| {
            if d.is_finite() && d > 0.0 && d < 180.0 {
                Ok(d.to_radians())
            } else {
                Err(Error::field(format!("{field}[{i}]"), format!("{d} deg must lie strictly inside (0, 180)")))
            }
        })
        .collect()
}

fn expect_len(field: &str, got: usize, want: usize, what: &str) -> Result<()> {
    if got != want {
        return Err(Error::field(field, format!("expected {want} values ({what}), got {got}")));
    }
    Ok(())
}

impl PolyhedronConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml(&text)
    }

    pub fn samples(&self) -> Result<usize> {
        match self.samples {
            Some(0) => Err(Error::field("samples", "must be at least 1")),
            Some(n) => Ok(n),
            None => Ok(DEFAULT_SAMPLES),
        }
    }

    /// Solves the juncture parameter set.
    pub fn juncture_params(&self) -> Result<JunctureParams> {
        let j = &self.juncture;
        let n = j.n;
        if n < 4 || !n.is_multiple_of(2) {
            return Err(Error::field("juncture.n", format!("N = {n}: N must be even and N >= 4")));
        }
        let m = n / 2;
        let kind = parse_kind(&j.kind, j.oas_index)?;
        let ctx = "juncture";
        let explicit = j.lengths.len() == n;
        let p = if explicit {
            expect_len("juncture.beta", j.beta.len(), n, "beta_1..beta_N for an explicit set")?;
            expect_len("juncture.B", j.big_b.len(), n, "B_1..B_N for an explicit set")?;
            let beta = radians("juncture.beta", &j.beta)?;
            let big_b = radians("juncture.B", &j.big_b)?;
            let free = j.signs.clone().unwrap_or_else(|| vec![1; kind.free_sign_count(n)]);
            let zsign = sign_pattern_for(kind, n, &j.lengths, &free).map_err(|e| Error::core("juncture.signs", e))?;
            JunctureParams::from_parts(kind, beta, big_b, j.lengths.clone(), zsign, Variant::Base, EXPLICIT_TOLERANCE)
                .map_err(|e| Error::core(ctx, e))?
        } else {
            match kind {
                SuspensionType::IOee | SuspensionType::IIAee => {
                    expect_len("juncture.beta", j.beta.len(), n, "beta_1..beta_N")?;
                    expect_len("juncture.lengths", j.lengths.len(), m - 1, "free lengths L_1..L_{M-1}")?;
                    if !j.big_b.is_empty() {
                        return Err(Error::field("juncture.B", "B follows from beta for this type; omit it"));
                    }
                    let beta = radians("juncture.beta", &j.beta)?;
                    let r = if kind == SuspensionType::IOee {
                        make_type1(m, &j.lengths, &beta)
                    } else {
                        make_type2_aee(m, &j.lengths, &beta)
                    };
                    r.map_err(|e| Error::core(ctx, e))?
                }
                SuspensionType::IIOee => {
                    expect_len("juncture.beta", j.beta.len(), m, "beta_1..beta_M")?;
                    expect_len("juncture.B", j.big_b.len(), m, "B_1..B_M")?;
                    let want = if m == 2 { 1 } else { m - 2 };
                    expect_len("juncture.lengths", j.lengths.len(), want, "free lengths")?;
                    let beta = radians("juncture.beta", &j.beta)?;
                    let big_b = radians("juncture.B", &j.big_b)?;
                    let deps = j.dependents.map(|[a, b]| (a, b));
                    make_type2_oee(m, &j.lengths, &beta, &big_b, deps).map_err(|e| Error::core(ctx, e))?
                }
                SuspensionType::IIIOae { oas_index } => {
                    expect_len("juncture.beta", j.beta.len(), 1, "a single beta")?;
                    expect_len("juncture.B", j.big_b.len(), 1, "a single B")?;
                    expect_len("juncture.lengths", j.lengths.len(), n - 2, "free lengths L_1..L_{N-2}")?;
                    let beta = radians("juncture.beta", &j.beta)?;
                    let big_b = radians("juncture.B", &j.big_b)?;
                    make_type3_oae(n, oas_index, beta[0], big_b[0], &j.lengths).map_err(|e| Error::core(ctx, e))?
                }
            }
        };
        match (&j.signs, explicit) {
            (Some(signs), false) => p.with_free_signs(signs).map_err(|e| Error::core("juncture.signs", e)),
            _ => Ok(p),
        }
    }

    /// Builds the full polyhedron.
    pub fn build(&self) -> Result<PolyhedronSpec> {
        let base = self.juncture_params()?;
        let segments = self.segment_specs()?;
        let poly = match self.genus {
            0 => PolyhedronSpec::genus0(&base, &segments),
            1 => {
                let jn = segments.len();
                let mut junctures = Vec::with_capacity(jn);
                for i in 0..jn {
                    let v =
                        prismflex_core::variant_for_outward(segments[i].orient.negate(), segments[(i + 1) % jn].orient)
                            .map_err(|e| Error::core(format!("segment[{}]", (i + 1) % jn), e))?;
                    junctures.push(prismflex_core::alternate_params(&base, v));
                }
                prismflex_core::build_genus1(&junctures, &segments)
            }
            g => return Err(Error::field("genus", format!("{g} must be 0 or 1"))),
        }
        .map_err(|e| Error::core("segment", e))?;
        match self.truncate {
            Some(t) => poly.with_truncation(t).map_err(|e| Error::core("truncate", e)),
            None => Ok(poly),
        }
    }

    fn segment_specs(&self) -> Result<Vec<SegmentSpec>> {
        let default;
        let segs = if self.segments.is_empty() && self.genus == 0 {
            default = vec![
                SegmentConfig { orient: "-u".into(), length: None },
                SegmentConfig { orient: "+w".into(), length: None },
            ];
            &default
        } else {
            &self.segments
        };
        let jn = segs.len();
        segs.iter()
            .enumerate()
            .map(|(i, s)| {
                let field = format!("segment[{i}]");
                let orient = parse_orient(&format!("{field}.orient"), &s.orient)?;
                let end = self.genus == 0 && (i == 0 || i == jn - 1);
                let length = match s.length {
                    Some(l) if !(l > 0.0 && l.is_finite()) => {
                        return Err(Error::field(format!("{field}.length"), format!("{l} must be positive")))
                    }
                    Some(l) => l,
                    None if end => f64::INFINITY,
                    None => return Err(Error::field(format!("{field}.length"), "required for a bounded segment")),
                };
                Ok(SegmentSpec::new(length, orient))
            })
            .collect()
    }
}
