//! Realization of a polyhedron at a flexion angle, sweeps, rigidity checks
//! and dihedral profiles.
//!
//! A frame holds one ring of `N` vertices per juncture. Genus 0 adds two
//! truncation rings at the ends (`J + 1` rings, segment `j` spans rings `j`
//! and `j + 1`); genus 1 has `J` rings with segment `J − 1` wrapping back to
//! ring 0.

use alloc::format;
use alloc::vec::Vec;

use crate::assembly::PolyhedronSpec;
use crate::error::{Error, Result};
use crate::geom::Vec3;
use crate::juncture::{chain_from_deltas, default_v1, deltas, epsilon_from_parts};

/// Slack on closed interval endpoints when accepting a θ.
const RANGE_SLACK: f64 = 1e-12;

/// Faces meeting at an edge are treated as coplanar (dihedral undefined)
/// below this sine of the angle between them.
pub const COPLANAR_SIN: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    pub theta: f64,
    pub genus: u8,
    pub n: usize,
    pub rings: Vec<Vec<Vec3>>,
    /// Direction `w_j(θ)` of each segment.
    pub directions: Vec<Vec3>,
    /// Unit normal of face `k` of segment `j` (Newell's method).
    pub normals: Vec<Vec<Vec3>>,
    /// Genus 1: largest distance between a vertex of ring 0 and the same
    /// vertex reached by walking once around the ring. Zero for genus 0.
    pub wrap_mismatch: f64,
}

impl Frame {
    pub fn segment_count(&self) -> usize {
        self.directions.len()
    }

    /// Ring indices bounding segment `j`.
    pub fn segment_rings(&self, j: usize) -> (usize, usize) {
        (j, (j + 1) % self.rings.len())
    }

    /// Face `k` of segment `j`: `[a_k, a_{k+1}, b_{k+1}, b_k]`.
    pub fn face(&self, j: usize, k: usize) -> [Vec3; 4] {
        let (a, b) = self.segment_rings(j);
        let k1 = (k + 1) % self.n;
        [self.rings[a][k], self.rings[a][k1], self.rings[b][k1], self.rings[b][k]]
    }

    /// Ring index of juncture `i`.
    pub fn juncture_ring(&self, i: usize) -> usize {
        if self.genus == 0 {
            i + 1
        } else {
            (i + 1) % self.rings.len()
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.rings.len() * self.n
    }
}

fn newell(face: &[Vec3; 4]) -> Vec3 {
    let mut n = Vec3::ZERO;
    for i in 0..4 {
        let (a, b) = (face[i], face[(i + 1) % 4]);
        n.x += (a.y - b.y) * (a.z + b.z);
        n.y += (a.z - b.z) * (a.x + b.x);
        n.z += (a.x - b.x) * (a.y + b.y);
    }
    let len = n.norm();
    if len > 0.0 {
        n * (1.0 / len)
    } else {
        n
    }
}

/// Places every vertex of `poly` at `theta`. Junctures use the default base
/// vertex (the symmetric one where the type has it), and unbounded ends are
/// cut at [`PolyhedronSpec::truncation`].
pub fn realize(poly: &PolyhedronSpec, theta: f64) -> Result<Frame> {
    let range = poly.flexion_range()?;
    if !range.contains_with_slack(theta, RANGE_SLACK) {
        return Err(Error::Range(format!(
            "theta = {theta} is outside the flexion range ±[{}, {}]",
            range.lo, range.hi
        )));
    }
    realize_unchecked(poly, theta)
}

/// [`realize`] without the range check; inputs that are not in range fail
/// with the first offending square root.
pub fn realize_unchecked(poly: &PolyhedronSpec, theta: f64) -> Result<Frame> {
    let base = poly.base();
    let d = deltas(base, theta)?;
    let v1 = default_v1(base, theta)?;
    let chain = chain_from_deltas(&d, v1);
    let jn = poly.segment_count();
    let directions: Vec<Vec3> = poly.segments().iter().map(|s| s.orient.vector(theta)).collect::<Result<_>>()?;

    let shift = |ring: &[Vec3], dir: Vec3, lens: &[f64]| -> Vec<Vec3> {
        ring.iter().zip(lens).map(|(&v, &l)| v + dir * l).collect()
    };

    let mut rings = Vec::with_capacity(jn + 1);
    let mut wrap_mismatch = 0.0;
    if poly.genus() == 0 {
        let t = poly.truncation();
        let tl = alloc::vec![t; poly.n()];
        rings.push(shift(&chain, -directions[0], &tl));
        rings.push(chain);
        for j in 1..jn - 1 {
            let lens = poly.segment_edge_lengths(j).expect("inner segments are finite");
            let next = shift(&rings[j], directions[j], lens);
            rings.push(next);
        }
        let last = shift(&rings[jn - 1], directions[jn - 1], &tl);
        rings.push(last);
    } else {
        rings.push(chain);
        for j in 0..jn {
            let lens = poly.segment_edge_lengths(j).expect("genus 1 segments are finite");
            let next = shift(&rings[j], directions[j], lens);
            rings.push(next);
        }
        let wrapped = rings.pop().expect("J + 1 rings");
        wrap_mismatch = wrapped.iter().zip(&rings[0]).map(|(a, b)| a.distance(*b)).fold(0.0, f64::max);
    }

    let mut frame = frame_from_rings(poly, theta, rings)?;
    frame.wrap_mismatch = wrap_mismatch;
    Ok(frame)
}

/// Wraps externally supplied vertex rings (for instance a re-imported mesh)
/// as a frame of `poly` at `theta`.
pub fn frame_from_rings(poly: &PolyhedronSpec, theta: f64, rings: Vec<Vec<Vec3>>) -> Result<Frame> {
    let jn = poly.segment_count();
    let want = if poly.genus() == 0 { jn + 1 } else { jn };
    if rings.len() != want || rings.iter().any(|r| r.len() != poly.n()) {
        return Err(Error::Domain(format!(
            "expected {want} rings of {} vertices, got {} rings",
            poly.n(),
            rings.len()
        )));
    }
    let directions: Vec<Vec3> = poly.segments().iter().map(|s| s.orient.vector(theta)).collect::<Result<_>>()?;
    let mut frame =
        Frame { theta, genus: poly.genus(), n: poly.n(), rings, directions, normals: Vec::new(), wrap_mismatch: 0.0 };
    frame.normals = (0..jn).map(|j| (0..frame.n).map(|k| newell(&frame.face(j, k))).collect()).collect();
    Ok(frame)
}

/// Frames at `samples` strictly interior points of the positive branch of
/// the flexion range.
pub fn sweep(poly: &PolyhedronSpec, samples: usize) -> Result<Vec<Frame>> {
    if samples == 0 {
        return Err(Error::Domain("a sweep needs at least one sample".into()));
    }
    let range = poly.flexion_range()?;
    range.interior_samples(samples).into_iter().map(|t| realize(poly, t)).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct RigidityReport {
    pub tolerance: f64,
    /// Per frame, the largest change of any of the six pairwise vertex
    /// distances of any face, relative to the first frame.
    pub face_deviation: Vec<f64>,
    /// Worst face deviation and its `(segment, face)`.
    pub worst_face: (f64, usize, usize),
    /// Largest `|length − L_k|` over every juncture-direction edge of every
    /// frame, with its edge index `k`.
    pub worst_juncture_edge: (f64, usize),
    /// Largest `|length − l_{k,j}|` over every segment-direction edge, with
    /// `(segment, k)`.
    pub worst_segment_edge: (f64, usize, usize),
    /// Largest deviation of a fourth face vertex from the plane of the other
    /// three.
    pub max_nonplanarity: f64,
    /// Largest genus-1 wrap mismatch.
    pub max_wrap_mismatch: f64,
    /// Juncture edges `k` whose length deviates beyond the tolerance.
    pub flagged_juncture_edges: Vec<usize>,
}

impl RigidityReport {
    pub fn max_deviation(&self) -> f64 {
        self.worst_face
            .0
            .max(self.worst_juncture_edge.0)
            .max(self.worst_segment_edge.0)
            .max(self.max_nonplanarity)
            .max(self.max_wrap_mismatch)
    }

    pub fn passed(&self) -> bool {
        self.max_deviation() <= self.tolerance
    }
}

fn face_distances(f: &[Vec3; 4]) -> [f64; 6] {
    [
        f[0].distance(f[1]),
        f[0].distance(f[2]),
        f[0].distance(f[3]),
        f[1].distance(f[2]),
        f[1].distance(f[3]),
        f[2].distance(f[3]),
    ]
}

fn nonplanarity(f: &[Vec3; 4]) -> f64 {
    let n = (f[1] - f[0]).cross(f[3] - f[0]);
    let len = n.norm();
    if len == 0.0 {
        return 0.0;
    }
    libm::fabs((f[2] - f[0]).dot(n)) / len
}

/// Checks that every face is congruent across `frames` and that every edge
/// has the length `poly` prescribes. `tol` is absolute.
pub fn rigidity_report(frames: &[Frame], poly: &PolyhedronSpec, tol: f64) -> Result<RigidityReport> {
    let first = frames.first().ok_or_else(|| Error::Domain("rigidity check needs at least one frame".into()))?;
    let jn = first.segment_count();
    if jn != poly.segment_count() || first.n != poly.n() {
        return Err(Error::Domain("frames do not belong to this polyhedron".into()));
    }
    let n = first.n;
    let reference: Vec<Vec<[f64; 6]>> =
        (0..jn).map(|j| (0..n).map(|k| face_distances(&first.face(j, k))).collect()).collect();
    let trunc = poly.truncation();

    let mut report = RigidityReport {
        tolerance: tol,
        face_deviation: Vec::with_capacity(frames.len()),
        worst_face: (0.0, 0, 0),
        worst_juncture_edge: (0.0, 0),
        worst_segment_edge: (0.0, 0, 0),
        max_nonplanarity: 0.0,
        max_wrap_mismatch: 0.0,
        flagged_juncture_edges: Vec::new(),
    };
    for fr in frames {
        let mut frame_worst = 0.0f64;
        for (j, ref_row) in reference.iter().enumerate() {
            for (k, ref_face) in ref_row.iter().enumerate() {
                let face = fr.face(j, k);
                let dev =
                    face_distances(&face).iter().zip(ref_face).map(|(a, b)| libm::fabs(a - b)).fold(0.0, f64::max);
                frame_worst = frame_worst.max(dev);
                if dev > report.worst_face.0 {
                    report.worst_face = (dev, j, k);
                }
                report.max_nonplanarity = report.max_nonplanarity.max(nonplanarity(&face));
            }
            let (a, b) = fr.segment_rings(j);
            let lens = poly.segment_edge_lengths(j);
            for k in 0..n {
                let want = lens.map_or(trunc, |l| l[k]);
                let dev = libm::fabs(fr.rings[a][k].distance(fr.rings[b][k]) - want);
                if dev > report.worst_segment_edge.0 {
                    report.worst_segment_edge = (dev, j, k);
                }
            }
        }
        report.face_deviation.push(frame_worst);
        for ring in &fr.rings {
            for k in 0..n {
                let dev = libm::fabs(ring[k].distance(ring[(k + 1) % n]) - poly.base().length(k));
                if dev > report.worst_juncture_edge.0 {
                    report.worst_juncture_edge = (dev, k);
                }
                if dev > tol && !report.flagged_juncture_edges.contains(&k) {
                    report.flagged_juncture_edges.push(k);
                }
            }
        }
        report.max_wrap_mismatch = report.max_wrap_mismatch.max(fr.wrap_mismatch);
    }
    report.flagged_juncture_edges.sort_unstable();
    Ok(report)
}

/// Dihedral angles over a sweep. Angles are unsigned, in `[0, π]`, and
/// `None` where the two faces are coplanar.
#[derive(Debug, Clone, PartialEq)]
pub struct DihedralProfile {
    pub theta: Vec<f64>,
    /// `[sample][juncture][k]`: measured angle at juncture edge `k`.
    pub epsilon: Vec<Vec<Vec<Option<f64>>>>,
    /// `[sample][juncture][k]`: the same angle from
    /// `cos(w_in, w_out) = cos β cos B + sin β sin B cos ε`.
    pub epsilon_formula: Vec<Vec<Vec<Option<f64>>>>,
    /// `[sample][segment][k]`: measured angle at the segment-direction edge
    /// through vertex `k`, between faces `k − 1` and `k`.
    pub delta: Vec<Vec<Vec<Option<f64>>>>,
}

impl DihedralProfile {
    /// Largest `|measured − formula|` over all defined samples.
    pub fn max_formula_error(&self) -> f64 {
        let mut worst = 0.0f64;
        for (m, f) in self.epsilon.iter().flatten().flatten().zip(self.epsilon_formula.iter().flatten().flatten()) {
            if let (Some(a), Some(b)) = (m, f) {
                worst = worst.max(libm::fabs(a - b));
            }
        }
        worst
    }

    /// Series of `ε` at juncture `i`, edge `k`.
    pub fn epsilon_series(&self, i: usize, k: usize) -> Vec<Option<f64>> {
        self.epsilon.iter().map(|s| s[i][k]).collect()
    }

    pub fn delta_series(&self, j: usize, k: usize) -> Vec<Option<f64>> {
        self.delta.iter().map(|s| s[j][k]).collect()
    }

    /// Smallest variation (max − min over defined samples) of a series over
    /// any window of sampled θ of width at least `width`. `None` when no
    /// window holds two defined samples.
    pub fn min_window_variation(&self, series: &[Option<f64>], width: f64) -> Option<f64> {
        let mut best: Option<f64> = None;
        for i in 0..self.theta.len() {
            let end = match (i..self.theta.len()).find(|&e| self.theta[e] - self.theta[i] >= width - 1e-12) {
                Some(e) => e,
                None => break,
            };
            let vals: Vec<f64> = series[i..=end].iter().flatten().copied().collect();
            if vals.len() < 2 {
                continue;
            }
            let hi = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let lo = vals.iter().copied().fold(f64::INFINITY, f64::min);
            best = Some(best.map_or(hi - lo, |b: f64| b.min(hi - lo)));
        }
        best
    }
}

/// Angle at edge `a → b` between the face containing `c1` and the face
/// containing `c2`.
fn edge_dihedral(a: Vec3, b: Vec3, c1: Vec3, c2: Vec3) -> Option<f64> {
    let len = a.distance(b);
    if len == 0.0 {
        return None;
    }
    let e = (b - a) * (1.0 / len);
    let p1 = (c1 - a).reject(e);
    let p2 = (c2 - a).reject(e);
    let (n1, n2) = (p1.norm(), p2.norm());
    if n1 == 0.0 || n2 == 0.0 {
        return None;
    }
    let sin = p1.cross(p2).norm() / (n1 * n2);
    if sin < COPLANAR_SIN {
        return None;
    }
    Some(p1.angle_to(p2))
}

/// Measured and closed-form dihedrals over `frames`.
pub fn dihedral_profiles(frames: &[Frame], poly: &PolyhedronSpec) -> DihedralProfile {
    let n = poly.n();
    let jn = poly.segment_count();
    let nj = poly.junctures().len();
    let mut out = DihedralProfile {
        theta: frames.iter().map(|f| f.theta).collect(),
        epsilon: Vec::with_capacity(frames.len()),
        epsilon_formula: Vec::with_capacity(frames.len()),
        delta: Vec::with_capacity(frames.len()),
    };
    for fr in frames {
        let mut eps = Vec::with_capacity(nj);
        let mut form = Vec::with_capacity(nj);
        for i in 0..nj {
            let (s_in, s_out) = poly.juncture_segments(i);
            let r = fr.juncture_ring(i);
            let (r_in, _) = fr.segment_rings(s_in);
            let (_, r_out) = fr.segment_rings(s_out);
            let ring = &fr.rings[r];
            let mut e_row = Vec::with_capacity(n);
            let mut f_row = Vec::with_capacity(n);
            let open = (-fr.directions[s_in]).dot(fr.directions[s_out]);
            let jp = &poly.junctures()[i];
            for k in 0..n {
                let k1 = (k + 1) % n;
                e_row.push(edge_dihedral(ring[k], ring[k1], fr.rings[r_in][k], fr.rings[r_out][k]));
                f_row.push(
                    epsilon_from_parts(jp.cos_beta(k), jp.sin_beta(k), jp.cos_big_b(k), jp.sin_big_b(k), open).ok(),
                );
            }
            eps.push(e_row);
            form.push(f_row);
        }
        let mut del = Vec::with_capacity(jn);
        for j in 0..jn {
            let (a, b) = fr.segment_rings(j);
            let row = (0..n)
                .map(|k| {
                    let prev = fr.rings[a][(k + n - 1) % n];
                    let next = fr.rings[a][(k + 1) % n];
                    edge_dihedral(fr.rings[a][k], fr.rings[b][k], prev, next)
                })
                .collect();
            del.push(row);
        }
        out.epsilon.push(eps);
        out.epsilon_formula.push(form);
        out.delta.push(del);
    }
    out
}
