//! Wavefront OBJ frames.
//!
//! Vertices are written ring by ring (`ring * N + k + 1` in OBJ numbering)
//! with 9 significant digits; every face is a quad
//! `a_k, a_{k+1}, b_{k+1}, b_k` of consecutive rings, which orients adjacent
//! faces consistently. Header comments carry `theta` at full precision and
//! the ring layout so a frame can be read back.

use std::fmt::Write as _;

use prismflex_core::{frame_from_rings, Frame, PolyhedronSpec, Vec3};

use crate::error::{Error, Result};

/// `x` with 9 significant digits, trailing zeros trimmed.
pub fn sig9(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { "0".into() } else { format!("{x}") };
    }
    let e = x.abs().log10().floor() as i32;
    let decimals = (8 - e).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        let trimmed = s.trim_end_matches('0').trim_end_matches('.').len();
        s.truncate(trimmed);
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

pub fn write_obj(frame: &Frame, poly: &PolyhedronSpec) -> String {
    let mut out = String::new();
    let n = frame.n;
    let _ = writeln!(out, "# prismflex frame");
    let _ = writeln!(out, "# theta_rad {:?}", frame.theta);
    let _ = writeln!(out, "# theta_deg {}", sig9(frame.theta.to_degrees()));
    let _ = writeln!(out, "# genus {}", frame.genus);
    let _ = writeln!(out, "# n {n}");
    let _ = writeln!(out, "# rings {}", frame.rings.len());
    if frame.genus == 0 {
        let _ = writeln!(out, "# unbounded ends truncated at {}", sig9(poly.truncation()));
    }
    let _ = writeln!(out, "o {}_j{}", poly.base().stype().tag(), poly.segment_count());
    let extent = frame.rings.iter().flatten().map(|v| v.x.abs().max(v.y.abs()).max(v.z.abs())).fold(0.0, f64::max);
    // round-off residue far below the printed precision is written as 0
    let c = |x: f64| if x.abs() < 1e-12 * extent { "0".to_string() } else { sig9(x) };
    for ring in &frame.rings {
        for v in ring {
            let _ = writeln!(out, "v {} {} {}", c(v.x), c(v.y), c(v.z));
        }
    }
    for j in 0..frame.segment_count() {
        let (a, b) = frame.segment_rings(j);
        for k in 0..n {
            let k1 = (k + 1) % n;
            let idx = |r: usize, i: usize| r * n + i + 1;
            let _ = writeln!(out, "f {} {} {} {}", idx(a, k), idx(a, k1), idx(b, k1), idx(b, k));
        }
    }
    out
}

/// Reads a frame written by [`write_obj`] back as a frame of `poly`.
pub fn read_obj(text: &str, poly: &PolyhedronSpec) -> Result<Frame> {
    let mut theta = None;
    let mut verts = Vec::new();
    let mut faces = 0usize;
    for (no, line) in text.lines().enumerate() {
        let mut it = line.split_whitespace();
        match it.next() {
            Some("#") => {
                if it.next() == Some("theta_rad") {
                    theta = it.next().and_then(|t| t.parse::<f64>().ok());
                }
            }
            Some("v") => {
                let c: Vec<f64> = it
                    .map(|t| t.parse::<f64>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|e| Error::Parse(format!("obj line {}: {e}", no + 1)))?;
                if c.len() != 3 {
                    return Err(Error::Parse(format!("obj line {}: expected 3 coordinates", no + 1)));
                }
                verts.push(Vec3::new(c[0], c[1], c[2]));
            }
            Some("f") => faces += 1,
            _ => {}
        }
    }
    let theta = theta.ok_or_else(|| Error::Parse("obj: missing '# theta_rad' header".into()))?;
    let n = poly.n();
    if n == 0 || verts.len() % n != 0 {
        return Err(Error::Parse(format!("obj: {} vertices is not a whole number of rings of {n}", verts.len())));
    }
    if faces != poly.segment_count() * n {
        return Err(Error::Parse(format!("obj: {faces} faces, expected {}", poly.segment_count() * n)));
    }
    let rings = verts.chunks(n).map(|c| c.to_vec()).collect();
    frame_from_rings(poly, theta, rings).map_err(|e| Error::core("obj", e))
}
