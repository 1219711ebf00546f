//! Dihedral profiles as CSV and rigidity summaries as text.
//!
//! Column order: `theta` (radians), then `eps_j{i}_k{k}` for every juncture
//! `i` and juncture edge `k`, then `delta_s{j}_k{k}` for every segment `j`
//! and parallel edge `k` (all 1-based, juncture-major). Angles are radians;
//! an empty cell marks a coplanar pair of faces.

use std::fmt::Write as _;
use std::io::Write;

use prismflex_core::{DihedralProfile, PolyhedronSpec, RigidityReport};

use crate::error::{Error, Result};

pub fn profile_header(poly: &PolyhedronSpec) -> Vec<String> {
    let n = poly.n();
    let mut h = vec!["theta".to_string()];
    for i in 0..poly.junctures().len() {
        for k in 0..n {
            h.push(format!("eps_j{}_k{}", i + 1, k + 1));
        }
    }
    for j in 0..poly.segment_count() {
        for k in 0..n {
            h.push(format!("delta_s{}_k{}", j + 1, k + 1));
        }
    }
    h
}

pub fn write_profile_csv<W: Write>(profile: &DihedralProfile, poly: &PolyhedronSpec, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Parse(format!("csv: {e}"));
    w.write_record(profile_header(poly)).map_err(io)?;
    let cell = |x: &Option<f64>| x.map(|v| format!("{v:?}")).unwrap_or_default();
    for (s, theta) in profile.theta.iter().enumerate() {
        let mut row = vec![format!("{theta:?}")];
        row.extend(profile.epsilon[s].iter().flatten().map(cell));
        row.extend(profile.delta[s].iter().flatten().map(cell));
        w.write_record(&row).map_err(io)?;
    }
    w.flush().map_err(|e| Error::Parse(format!("csv: {e}")))?;
    Ok(())
}

pub fn rigidity_text(rep: &RigidityReport, profile: &DihedralProfile, poly: &PolyhedronSpec) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "frames: {}", rep.face_deviation.len());
    let _ = writeln!(s, "tolerance: {:e}", rep.tolerance);
    let (d, j, k) = rep.worst_face;
    let _ = writeln!(s, "max face distance deviation: {d:e} (segment {}, face {})", j + 1, k + 1);
    let (d, k) = rep.worst_juncture_edge;
    let _ = writeln!(s, "max juncture edge deviation: {d:e} (edge L_{})", k + 1);
    let (d, j, k) = rep.worst_segment_edge;
    let _ = writeln!(s, "max parallel edge deviation: {d:e} (segment {}, edge {})", j + 1, k + 1);
    let _ = writeln!(s, "max face non-planarity: {:e}", rep.max_nonplanarity);
    if poly.genus() == 1 {
        let _ = writeln!(s, "max wrap mismatch: {:e}", rep.max_wrap_mismatch);
    }
    let _ = writeln!(s, "max dihedral formula error: {:e}", profile.max_formula_error());
    if !rep.flagged_juncture_edges.is_empty() {
        let names: Vec<String> = rep.flagged_juncture_edges.iter().map(|k| format!("L_{}", k + 1)).collect();
        let _ = writeln!(s, "edges out of tolerance: {}", names.join(", "));
    }
    if poly.genus() == 0 {
        let _ = writeln!(
            s,
            "note: segments 1 and {} are unbounded and truncated at length {}",
            poly.segment_count(),
            poly.truncation()
        );
    }
    let _ = writeln!(s, "result: {}", if rep.passed() { "PASS" } else { "FAIL" });
    s
}
