//! The checks behind `prismflex validate`.

use std::fmt;

use prismflex_core::{
    closure_residual, continuity_residual, dihedral_profiles, flexion_range, rigidity_report, sweep, PolyhedronSpec,
};

use crate::specfile::RawSpec;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    /// `None` when skipped because an earlier check failed.
    pub passed: Option<bool>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed == Some(true))
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name, passed: Some(passed), detail: detail.into() });
    }

    fn skip(&mut self, name: &'static str, why: &str) {
        self.checks.push(Check { name, passed: None, detail: format!("skipped: {why}") });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.passed {
                Some(true) => "PASS",
                Some(false) => "FAIL",
                None => "SKIP",
            };
            writeln!(f, "{tag} {}: {}", c.name, c.detail)?;
        }
        write!(f, "overall: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Runs every check on a decoded spec. `tol` is relative to `Σ L_k` for
/// residuals and absolute for distances and angles.
pub fn validate(raw: &RawSpec, tol: f64, samples: usize) -> ValidationReport {
    let mut rep = ValidationReport::default();
    let base = &raw.base;
    let scale = base.total_length();

    let (rb, rbb) = continuity_residual(base);
    let ok = rb.abs() <= tol * scale && rbb.abs() <= tol * scale;
    rep.push(
        "continuity",
        ok,
        format!("sum L_k cos beta_k = {rb:e}, sum L_k cos B_k = {rbb:e} (limit {:e})", tol * scale),
    );

    match base.validate(tol) {
        Ok(()) => rep.push("juncture relations", true, format!("{} with N = {}", base.stype().tag(), base.n())),
        Err(e) => rep.push("juncture relations", false, e.to_string()),
    }

    match flexion_range(base) {
        Ok(r) => {
            rep.push("flexion range", true, format!("|theta| in [{}, {}] deg", r.lo.to_degrees(), r.hi.to_degrees()));
            let mut worst = (0.0f64, 0.0f64);
            let mut failure = None;
            for t in r.interior_samples(samples) {
                match closure_residual(base, t) {
                    Ok(v) if v.norm() > worst.0 => worst = (v.norm(), t),
                    Ok(_) => {}
                    Err(e) => {
                        failure = Some(e.to_string());
                        break;
                    }
                }
            }
            match failure {
                Some(e) => rep.push("closure", false, e),
                None => rep.push(
                    "closure",
                    worst.0 <= tol * scale,
                    format!(
                        "max |sum dv_k| = {:e} at theta = {} deg over {samples} samples",
                        worst.0,
                        worst.1.to_degrees()
                    ),
                ),
            }
        }
        Err(e) => {
            rep.push("flexion range", false, e.to_string());
            rep.skip("closure", "no flexion range");
        }
    }

    let poly = match raw.build_geometry(tol) {
        Ok(p) => {
            rep.push("assembly", true, format!("genus {}, J = {}", p.genus(), p.segment_count()));
            p
        }
        Err(e) => {
            rep.push("assembly", false, e.to_string());
            for name in ["stored edge lengths", "euler counts", "rigidity sweep", "dihedral formula"] {
                rep.skip(name, "assembly failed");
            }
            return rep;
        }
    };

    let mismatches = raw.edge_mismatches(&poly, tol);
    match mismatches.first() {
        None => rep.push("stored edge lengths", true, "match the juncture offsets"),
        Some(m) => rep.push(
            "stored edge lengths",
            false,
            format!(
                "segment {} edge {}: stored {} but expected {} ({} mismatches)",
                m.segment + 1,
                m.edge + 1,
                m.stored,
                m.expected,
                mismatches.len()
            ),
        ),
    }

    rep_euler(&mut rep, &poly);

    match sweep(&poly, samples) {
        Ok(frames) => {
            match rigidity_report(&frames, &poly, tol) {
                Ok(r) => {
                    let mut detail = format!("max deviation {:e} over {} frames", r.max_deviation(), frames.len());
                    if !r.flagged_juncture_edges.is_empty() {
                        let names: Vec<String> =
                            r.flagged_juncture_edges.iter().map(|k| format!("L_{}", k + 1)).collect();
                        detail.push_str(&format!("; edges out of tolerance: {}", names.join(", ")));
                    }
                    rep.push("rigidity sweep", r.passed(), detail);
                }
                Err(e) => rep.push("rigidity sweep", false, e.to_string()),
            }
            let prof = dihedral_profiles(&frames, &poly);
            let err = prof.max_formula_error();
            rep.push("dihedral formula", err <= tol, format!("max |measured - closed form| = {err:e} rad"));
        }
        Err(e) => {
            rep.push("rigidity sweep", false, e.to_string());
            rep.skip("dihedral formula", "sweep failed");
        }
    }
    rep
}

fn rep_euler(rep: &mut ValidationReport, poly: &PolyhedronSpec) {
    let c = poly.euler_counts();
    let want = 2 - 2 * i64::from(poly.genus());
    rep.push(
        "euler counts",
        c.characteristic() == want,
        format!(
            "V = {}, E = {}, F = {}, V - E + F = {} (expected {want})",
            c.vertices,
            c.edges,
            c.faces,
            c.characteristic()
        ),
    );
}
