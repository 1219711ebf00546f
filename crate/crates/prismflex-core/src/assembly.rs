//! Multi-segment prismatic polyhedra.
//!
//! A polyhedron is a sequence of annular segments `S_1..S_J`, each a tube of
//! `N` trapezoids whose parallel edges run along `w_j ∈ {u, −u, w, −w}`,
//! joined at junctures. Consecutive directions must come from different
//! families (`±u` then `±w` or vice versa). Every juncture is then a translate
//! of one canonical chain, seen with a different pair of outgoing segment
//! directions; the parameter set stored for juncture `J_j` is the reflection
//! of the canonical set selected by its outward pair `(−w_j, w_{j+1})`:
//!
//! | outward pair | stored set  |
//! |--------------|-------------|
//! | `(u, w)`     | base        |
//! | `(u, −w)`    | A           |
//! | `(−u, −w)`   | B           |
//! | `(−u, w)`    | C           |
//!
//! (`β` always pairs with the `±u` direction and `B` with the `±w` one.)
//!
//! Genus 0: `S_1` and `S_J` are unbounded (rendered truncated), with
//! `w_1 = −u` and `w_2 = w` so that `J_1` carries the base set.
//! Genus 1: `J ≥ 4` even, the ring is cyclic and the signed segment lengths
//! cancel along both `u` and `w`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geom::{orientation_vectors, FlexionInterval, Vec3};
use crate::juncture::flexion_range;
use crate::params::{JunctureParams, Variant};

/// Tolerance used when comparing a supplied juncture with the expected
/// reflection of the canonical set.
const MATCH_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orient {
    UPlus,
    UMinus,
    WPlus,
    WMinus,
}

impl Orient {
    pub fn is_u(self) -> bool {
        matches!(self, Orient::UPlus | Orient::UMinus)
    }

    pub fn sign(self) -> f64 {
        match self {
            Orient::UPlus | Orient::WPlus => 1.0,
            Orient::UMinus | Orient::WMinus => -1.0,
        }
    }

    pub fn negate(self) -> Orient {
        match self {
            Orient::UPlus => Orient::UMinus,
            Orient::UMinus => Orient::UPlus,
            Orient::WPlus => Orient::WMinus,
            Orient::WMinus => Orient::WPlus,
        }
    }

    pub fn vector(self, theta: f64) -> Result<Vec3> {
        let (u, w) = orientation_vectors(theta)?;
        let base = if self.is_u() { u } else { w };
        Ok(base * self.sign())
    }

    pub fn tag(self) -> &'static str {
        match self {
            Orient::UPlus => "+u",
            Orient::UMinus => "-u",
            Orient::WPlus => "+w",
            Orient::WMinus => "-w",
        }
    }

    pub fn parse(s: &str) -> Option<Orient> {
        match s.trim() {
            "+u" | "u" | "U_PLUS" => Some(Orient::UPlus),
            "-u" | "U_MINUS" => Some(Orient::UMinus),
            "+w" | "w" | "W_PLUS" => Some(Orient::WPlus),
            "-w" | "W_MINUS" => Some(Orient::WMinus),
            _ => None,
        }
    }

    /// `cos` of the angle between edge `k` of the canonical chain and this
    /// direction.
    fn cos_with(self, base: &JunctureParams, k: usize) -> f64 {
        let c = if self.is_u() { base.cos_beta(k) } else { base.cos_big_b(k) };
        self.sign() * c
    }
}

/// Reflection of the canonical set for a juncture whose two segments leave
/// along `a` and `b` (one from each family).
pub fn variant_for_outward(a: Orient, b: Orient) -> Result<Variant> {
    if a.is_u() == b.is_u() {
        return Err(Error::Orientation(format!(
            "outward directions {} and {} are from the same family",
            a.tag(),
            b.tag()
        )));
    }
    let (u_dir, w_dir) = if a.is_u() { (a, b) } else { (b, a) };
    Ok(Variant::from_flips(u_dir.sign() < 0.0, w_dir.sign() < 0.0))
}

/// One annular segment. `length` is the segment length `S_j`; for the two
/// unbounded ends of a genus-0 polyhedron it is only used once another
/// segment is appended after the tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentSpec {
    pub length: f64,
    pub orient: Orient,
}

impl SegmentSpec {
    pub fn new(length: f64, orient: Orient) -> Self {
        SegmentSpec { length, orient }
    }
}

/// Vertex offsets `ν_k`, `μ_k` from `v_1` and the minimum lengths derived
/// from them.
#[derive(Debug, Clone, PartialEq)]
pub struct OffsetTables {
    pub nu: Vec<f64>,
    pub mu: Vec<f64>,
    pub n_min: f64,
    pub m_max: f64,
}

/// `ν_k = ν_{k−1} − L_k cos β_k`, `μ_k = μ_{k−1} + L_k cos B_k` for
/// `k = 2..N`, `ν_1 = μ_1 = 0`; `N = min{0, ν_1..ν_{N−1}}`,
/// `M = max{0, μ_1..μ_{N−1}}`.
pub fn offsets(p: &JunctureParams) -> OffsetTables {
    let n = p.n();
    let cb: Vec<f64> = (0..n).map(|k| p.cos_beta(k)).collect();
    let cbb: Vec<f64> = (0..n).map(|k| p.cos_big_b(k)).collect();
    offsets_from(p.lengths(), &cb, &cbb)
}

fn offsets_from(lengths: &[f64], cos_in: &[f64], cos_out: &[f64]) -> OffsetTables {
    let n = lengths.len();
    let mut nu = alloc::vec![0.0; n];
    let mut mu = alloc::vec![0.0; n];
    for k in 1..n {
        nu[k] = nu[k - 1] - lengths[k] * cos_in[k];
        mu[k] = mu[k - 1] + lengths[k] * cos_out[k];
    }
    let n_min = nu[..n - 1].iter().fold(0.0f64, |a, &b| a.min(b));
    let m_max = mu[..n - 1].iter().fold(0.0f64, |a, &b| a.max(b));
    OffsetTables { nu, mu, n_min, m_max }
}

/// Offsets of a juncture measured along the axis of its incoming segment
/// (`ν`, with angles taken against `w_in`) and its outgoing segment (`μ`,
/// against `w_out`).
pub fn oriented_offsets(base: &JunctureParams, w_in: Orient, w_out: Orient) -> OffsetTables {
    let n = base.n();
    let cin: Vec<f64> = (0..n).map(|k| w_in.cos_with(base, k)).collect();
    let cout: Vec<f64> = (0..n).map(|k| w_out.cos_with(base, k)).collect();
    offsets_from(base.lengths(), &cin, &cout)
}

/// Smallest segment length for which every edge length is positive:
/// `max_k (μ_{k,prev} − M_prev + ν_{k,next} − N_next)`.
pub fn min_segment_length(prev: &OffsetTables, next: &OffsetTables) -> f64 {
    prev.mu
        .iter()
        .zip(next.nu.iter())
        .map(|(&mu, &nu)| mu - prev.m_max + nu - next.n_min)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// `l_k = S − μ_{k,prev} − ν_{k,next} + N_next + M_prev`.
pub fn edge_lengths(s: f64, prev: &OffsetTables, next: &OffsetTables) -> Result<Vec<f64>> {
    let l: Vec<f64> =
        prev.mu.iter().zip(next.nu.iter()).map(|(&mu, &nu)| s - mu - nu + next.n_min + prev.m_max).collect();
    if let Some((k, &bad)) = l.iter().enumerate().find(|(_, &x)| !(x > 0.0)) {
        return Err(Error::Infeasible(format!(
            "segment length S = {s}: edge l_{} = {bad} is not positive (need S > {})",
            k + 1,
            min_segment_length(prev, next)
        )));
    }
    Ok(l)
}

/// Reflects a parameter set: A → `{β, π−B}`, B → `{π−β, π−B}`, C → `{π−β, B}`.
pub fn alternate_params(p: &JunctureParams, variant: Variant) -> JunctureParams {
    p.with_variant(p.variant().compose(variant))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerCounts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

impl EulerCounts {
    pub fn characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolyhedronSpec {
    genus: u8,
    base: JunctureParams,
    junctures: Vec<JunctureParams>,
    segments: Vec<SegmentSpec>,
    edge_lengths: Vec<Option<Vec<f64>>>,
    truncation: Option<f64>,
}

impl PolyhedronSpec {
    /// The two-segment unbounded suspension: `S_1` along `−u`, `S_2` along
    /// `w`, joined at `J_1 = base`. `tail_length` becomes `S_2` if a segment
    /// is appended later.
    pub fn unbounded(base: &JunctureParams, tail_length: f64) -> Result<Self> {
        let base = base.canonical();
        flexion_range(&base)?;
        Ok(PolyhedronSpec {
            genus: 0,
            junctures: alloc::vec![base.clone()],
            base,
            segments: alloc::vec![
                SegmentSpec::new(f64::INFINITY, Orient::UMinus),
                SegmentSpec::new(tail_length, Orient::WPlus),
            ],
            edge_lengths: alloc::vec![None, None],
            truncation: None,
        })
    }

    /// Genus 0 from a full orientation sequence; the juncture sets follow
    /// from the lookup table. `segments[0]` and the last entry are the
    /// unbounded ends.
    pub fn genus0(base: &JunctureParams, segments: &[SegmentSpec]) -> Result<Self> {
        if segments.len() < 2 {
            return Err(Error::Domain("genus 0 needs at least two segments".into()));
        }
        if segments[0].orient != Orient::UMinus || segments[1].orient != Orient::WPlus {
            return Err(Error::Orientation(format!(
                "genus 0 starts with w_1 = -u, w_2 = +w (got {}, {})",
                segments[0].orient.tag(),
                segments[1].orient.tag()
            )));
        }
        let mut poly = PolyhedronSpec::unbounded(base, segments[1].length)?;
        for seg in &segments[2..] {
            poly = poly.append_segment_mapped(*seg)?;
        }
        Ok(poly)
    }

    /// Appends `seg` as the new unbounded tail. The previous tail becomes a
    /// finite segment of its stored length, ending at the new juncture
    /// `next_junc`, which must be the reflection of the canonical set
    /// selected by its outward pair.
    pub fn append_segment(&self, seg: SegmentSpec, next_junc: &JunctureParams) -> Result<Self> {
        if self.genus != 0 {
            return Err(Error::Domain("segments can only be appended to genus 0".into()));
        }
        let tail = *self.segments.last().expect("at least two segments");
        check_successor(tail.orient, seg.orient, self.segments.len())?;
        let expected_variant = variant_for_outward(tail.orient.negate(), seg.orient)?;
        let j = self.junctures.len() + 1;
        check_matches_base(&self.base, next_junc, expected_variant, j)?;
        if !(tail.length > 0.0) || !tail.length.is_finite() {
            return Err(Error::Infeasible(format!(
                "segment S_{} needs a finite positive length before J_{j} can be placed",
                self.segments.len()
            )));
        }
        let prev_in = self.segments[self.segments.len() - 2].orient;
        let prev = oriented_offsets(&self.base, prev_in, tail.orient);
        let next = oriented_offsets(&self.base, tail.orient, seg.orient);
        let lengths = edge_lengths(tail.length, &prev, &next)?;

        let mut out = self.clone();
        let last = out.edge_lengths.len() - 1;
        out.edge_lengths[last] = Some(lengths);
        out.junctures.push(alternate_params(&self.base, expected_variant));
        out.segments.push(seg);
        out.edge_lengths.push(None);
        Ok(out)
    }

    /// [`append_segment`](Self::append_segment) with the juncture taken from
    /// the lookup table.
    pub fn append_segment_mapped(&self, seg: SegmentSpec) -> Result<Self> {
        let tail = *self.segments.last().expect("at least two segments");
        check_successor(tail.orient, seg.orient, self.segments.len())?;
        let v = variant_for_outward(tail.orient.negate(), seg.orient)?;
        self.append_segment(seg, &alternate_params(&self.base, v))
    }

    pub fn with_truncation(mut self, len: f64) -> Result<Self> {
        if !(len > 0.0) || !len.is_finite() {
            return Err(Error::Domain(format!("truncation length {len} must be positive")));
        }
        self.truncation = Some(len);
        Ok(self)
    }

    /// Copy with `L_k += delta` in every juncture, no validation. For fault
    /// injection.
    pub fn with_base_length_perturbed(&self, k: usize, delta: f64) -> Self {
        let mut out = self.clone();
        out.base = out.base.with_length_perturbed(k, delta);
        for j in out.junctures.iter_mut() {
            *j = j.with_length_perturbed(k, delta);
        }
        out
    }

    pub fn genus(&self) -> u8 {
        self.genus
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// Number of segments `J`.
    pub fn segment_count(&self) -> usize {
        self.segments.len()
    }

    /// The canonical chain every juncture is a translate of.
    pub fn base(&self) -> &JunctureParams {
        &self.base
    }

    pub fn junctures(&self) -> &[JunctureParams] {
        &self.junctures
    }

    pub fn segments(&self) -> &[SegmentSpec] {
        &self.segments
    }

    /// `l_{k,j}` for segment `j`, `None` for unbounded ends.
    pub fn segment_edge_lengths(&self, j: usize) -> Option<&[f64]> {
        self.edge_lengths[j].as_deref()
    }

    pub fn is_unbounded(&self, j: usize) -> bool {
        self.edge_lengths[j].is_none()
    }

    /// Length at which unbounded ends are cut for rendering; defaults to
    /// `Σ L_k`, twice the half-perimeter bound on the juncture diameter.
    pub fn truncation(&self) -> f64 {
        self.truncation.unwrap_or_else(|| self.base.total_length())
    }

    pub fn explicit_truncation(&self) -> Option<f64> {
        self.truncation
    }

    pub fn flexion_range(&self) -> Result<FlexionInterval> {
        flexion_range(&self.base)
    }

    /// Segment indices on either side of juncture `i`.
    pub fn juncture_segments(&self, i: usize) -> (usize, usize) {
        (i, (i + 1) % self.segments.len())
    }

    /// Rebuilds a spec from stored parts (as read from a file) and re-checks
    /// every derived quantity.
    pub fn from_parts(
        genus: u8,
        junctures: Vec<JunctureParams>,
        segments: Vec<SegmentSpec>,
        truncation: Option<f64>,
    ) -> Result<Self> {
        let first = junctures.first().ok_or_else(|| Error::Domain("at least one juncture is required".into()))?;
        let spec = match genus {
            0 => {
                let base = first.canonical();
                let mut poly = PolyhedronSpec::unbounded(&base, segments.get(1).map_or(1.0, |s| s.length))?;
                if segments.len() < 2 || segments[0].orient != Orient::UMinus {
                    return Err(Error::Orientation("genus 0 starts with w_1 = -u, w_2 = +w".into()));
                }
                if segments[1].orient != Orient::WPlus {
                    return Err(Error::Orientation("genus 0 starts with w_1 = -u, w_2 = +w".into()));
                }
                check_matches_base(&base, first, Variant::Base, 1)?;
                if junctures.len() + 1 != segments.len() {
                    return Err(Error::Domain(format!(
                        "genus 0 with {} segments needs {} junctures, got {}",
                        segments.len(),
                        segments.len() - 1,
                        junctures.len()
                    )));
                }
                for (i, seg) in segments[2..].iter().enumerate() {
                    poly = poly.append_segment(*seg, &junctures[i + 1])?;
                }
                poly.segments[0].length = segments[0].length;
                poly
            }
            1 => build_genus1(&junctures, &segments)?,
            g => return Err(Error::Domain(format!("genus must be 0 or 1, got {g}"))),
        };
        match truncation {
            Some(t) => spec.with_truncation(t),
            None => Ok(spec),
        }
    }

    pub fn euler_counts(&self) -> EulerCounts {
        euler_counts(self)
    }
}

fn check_successor(prev: Orient, next: Orient, index: usize) -> Result<()> {
    if prev.is_u() == next.is_u() {
        return Err(Error::Orientation(format!(
            "segment S_{} along {} may not follow {} (same direction or its negative)",
            index + 1,
            next.tag(),
            prev.tag()
        )));
    }
    Ok(())
}

fn check_matches_base(base: &JunctureParams, junc: &JunctureParams, expected: Variant, j: usize) -> Result<()> {
    let canon = junc.canonical();
    let same = canon.stype() == base.stype()
        && canon.n() == base.n()
        && canon.zsign() == base.zsign()
        && close_all(canon.base_beta(), base.base_beta())
        && close_all(canon.base_big_b(), base.base_big_b())
        && close_all(canon.lengths(), base.lengths());
    if !same {
        return Err(Error::Inconsistent(format!(
            "J_{j} is not a reflection of the canonical juncture; all junctures of an in-plane \
             polyhedron share one chain"
        )));
    }
    if junc.variant() != expected {
        return Err(Error::Inconsistent(format!(
            "J_{j} must carry variant {} for its outward pair, got {}",
            expected.tag(),
            junc.variant().tag()
        )));
    }
    Ok(())
}

fn close_all(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| libm::fabs(x - y) <= MATCH_TOL)
}

/// Closed ring of `J ≥ 4` (even) segments; `junctures[i]` joins
/// `segments[i]` to `segments[(i + 1) % J]`.
pub fn build_genus1(junctures: &[JunctureParams], segments: &[SegmentSpec]) -> Result<PolyhedronSpec> {
    let jn = segments.len();
    if jn < 4 || !jn.is_multiple_of(2) {
        return Err(Error::Domain(format!("genus 1 needs an even number J >= 4 of segments, got {jn}")));
    }
    if junctures.len() != jn {
        return Err(Error::Domain(format!("genus 1 needs J = {jn} junctures, got {}", junctures.len())));
    }
    for s in 0..jn {
        check_successor(segments[s].orient, segments[(s + 1) % jn].orient, (s + 1) % jn)?;
        let l = segments[s].length;
        if !(l > 0.0) || !l.is_finite() {
            return Err(Error::Infeasible(format!("segment S_{} length {l} must be positive", s + 1)));
        }
    }
    let base = junctures[0].canonical();
    let mut stored = Vec::with_capacity(jn);
    for (i, junc) in junctures.iter().enumerate() {
        let (a, b) = (segments[i].orient, segments[(i + 1) % jn].orient);
        let v = variant_for_outward(a.negate(), b)?;
        check_matches_base(&base, junc, v, i + 1)?;
        stored.push(alternate_params(&base, v));
    }
    let range = flexion_range(&base)?;

    let mut lengths = Vec::with_capacity(jn);
    for s in 0..jn {
        let w_prev_in = segments[(s + jn - 1) % jn].orient;
        let w_s = segments[s].orient;
        let w_next_out = segments[(s + 1) % jn].orient;
        let prev = oriented_offsets(&base, w_prev_in, w_s);
        let next = oriented_offsets(&base, w_s, w_next_out);
        lengths.push(Some(edge_lengths(segments[s].length, &prev, &next)?));
    }

    // signed segment sums along u and w
    let scale: f64 = segments.iter().map(|s| s.length).sum();
    for (family, name) in [(true, "u"), (false, "w")] {
        let sum: f64 = segments.iter().filter(|s| s.orient.is_u() == family).map(|s| s.orient.sign() * s.length).sum();
        if libm::fabs(sum) > 1e-12 * scale {
            return Err(Error::Closure(format!("signed segment lengths along {name} sum to {sum} instead of 0")));
        }
    }

    let poly = PolyhedronSpec {
        genus: 1,
        base,
        junctures: stored,
        segments: segments.to_vec(),
        edge_lengths: lengths,
        truncation: None,
    };

    // numeric wrap check: Σ_j l_{k,j} w_j(θ) must vanish for every k
    for theta in range.interior_samples(5) {
        let mut worst = (0.0f64, 0usize);
        for k in 0..poly.n() {
            let mut gap = Vec3::ZERO;
            for (s, seg) in poly.segments.iter().enumerate() {
                let l = poly.edge_lengths[s].as_ref().expect("genus 1 segments are finite")[k];
                gap += seg.orient.vector(theta)? * l;
            }
            if gap.norm() > worst.0 {
                worst = (gap.norm(), k);
            }
        }
        if worst.0 > 1e-9 * scale {
            return Err(Error::Closure(format!(
                "wrap juncture vertex v_{} misses by {:e} at theta = {theta}",
                worst.1 + 1,
                worst.0
            )));
        }
    }
    Ok(poly)
}

/// Genus 0 (ends counted as one vertex each): `V = N(J−1)+2`, `E = N(2J−1)`,
/// `F = JN`, so `V − E + F = 2`. Genus 1: `V = JN`, `E = 2JN`, `F = JN`.
pub fn euler_counts(poly: &PolyhedronSpec) -> EulerCounts {
    let n = poly.n();
    let j = poly.segment_count();
    match poly.genus {
        0 => EulerCounts { vertices: n * (j - 1) + 2, edges: n * (2 * j - 1), faces: j * n },
        _ => EulerCounts { vertices: j * n, edges: 2 * j * n, faces: j * n },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::juncture::closure_residual;
    use crate::params::*;

    fn ds(v: &[f64]) -> Vec<f64> {
        v.iter().map(|&x| x.to_radians()).collect()
    }

    fn right_angle() -> JunctureParams {
        JunctureParams::from_parts(
            SuspensionType::IOee,
            ds(&[90.0; 4]),
            ds(&[90.0; 4]),
            alloc::vec![1.0; 4],
            alloc::vec![1, 1, -1, -1],
            Variant::Base,
            1e-12,
        )
        .unwrap()
    }

    fn type1() -> JunctureParams {
        make_type1(2, &[1.0], &ds(&[60.0, 80.0, 100.0, 130.0])).unwrap()
    }

    #[test]
    fn right_angle_offsets_vanish() {
        let o = offsets(&right_angle());
        assert!(o.nu.iter().chain(o.mu.iter()).all(|&x| x.abs() < 1e-15));
        assert!(o.n_min.abs() < 1e-15 && o.m_max.abs() < 1e-15);
    }

    #[test]
    fn offsets_recurrence_by_hand() {
        // I-OEE with β = (60, 70, 120, 110), unit lengths
        let p = JunctureParams::from_parts(
            SuspensionType::IOee,
            ds(&[60.0, 70.0, 120.0, 110.0]),
            ds(&[120.0, 110.0, 60.0, 70.0]),
            alloc::vec![1.0; 4],
            alloc::vec![1, 1, -1, -1],
            Variant::Base,
            1e-12,
        )
        .unwrap();
        let o = offsets(&p);
        let c = |x: f64| x.to_radians().cos();
        assert!((o.nu[1] + c(70.0)).abs() < 1e-15);
        assert!((o.nu[2] - (-c(70.0) - c(120.0))).abs() < 1e-15);
        assert!((o.nu[2] - 0.158).abs() < 1e-3);
        assert!((o.n_min + c(70.0)).abs() < 1e-15);
        // ν over the full cycle, with the first term included, returns to 0
        let full = o.nu[3] - p.length(0) * p.cos_beta(0);
        assert!(full.abs() < 1e-12);
    }

    /// Brute-force oracle: bisection on the predicate "every edge length is
    /// positive", evaluated directly from the tables.
    fn brute_min(prev: &OffsetTables, next: &OffsetTables) -> f64 {
        let ok = |s: f64| (0..prev.mu.len()).all(|k| s - prev.mu[k] - next.nu[k] + next.n_min + prev.m_max > 0.0);
        let (mut lo, mut hi) = (-100.0, 100.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if ok(mid) {
                hi = mid
            } else {
                lo = mid
            }
        }
        hi
    }

    #[test]
    fn min_segment_length_matches_brute_force() {
        let a = offsets(&type1());
        let b = offsets(&make_type1(2, &[0.7], &ds(&[50.0, 75.0, 95.0, 140.0])).unwrap());
        for (p, q) in [(&a, &b), (&b, &a), (&a, &a)] {
            let m = min_segment_length(p, q);
            assert!((m - brute_min(p, q)).abs() < 1e-12);
        }
        let r = offsets(&right_angle());
        assert_eq!(min_segment_length(&r, &r), 0.0);
    }

    #[test]
    fn edge_lengths_boundary_and_right_angle() {
        let r = offsets(&right_angle());
        assert_eq!(edge_lengths(2.0, &r, &r).unwrap(), alloc::vec![2.0; 4]);
        let a = offsets(&type1());
        let b = offsets(&make_type1(2, &[0.7], &ds(&[50.0, 75.0, 95.0, 140.0])).unwrap());
        let m = min_segment_length(&a, &b);
        assert!(matches!(edge_lengths(m, &a, &b), Err(Error::Infeasible(_))));
        let l = edge_lengths(m + 1e-6, &a, &b).unwrap();
        assert!(l.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn oriented_offsets_make_segments_prismatic() {
        let p = type1();
        for (a, b, c) in
            [(Orient::UMinus, Orient::WPlus, Orient::UPlus), (Orient::WPlus, Orient::UMinus, Orient::WMinus)]
        {
            let prev = oriented_offsets(&p, a, b);
            let next = oriented_offsets(&p, b, c);
            assert!(min_segment_length(&prev, &next).abs() < 1e-15);
            let l = edge_lengths(1.5, &prev, &next).unwrap();
            assert!(l.iter().all(|&x| (x - 1.5).abs() < 1e-14));
        }
    }

    #[test]
    fn variant_b_is_involution() {
        let p = type1();
        let q = alternate_params(&alternate_params(&p, Variant::B), Variant::B);
        assert_eq!(p, q);
    }

    #[test]
    fn variants_keep_closure_and_continuity() {
        let p = type1();
        let range = flexion_range(&p).unwrap();
        for v in [Variant::A, Variant::B, Variant::C] {
            let q = alternate_params(&p, v);
            let (a, b) = continuity_residual(&q);
            assert!(a.abs() < 1e-12 && b.abs() < 1e-12);
            // A swaps the sin/cos roles of θ: sample at θ' = π/2 − θ
            let qr = flexion_range(&q).unwrap();
            for t in qr.interior_samples(10) {
                assert!(closure_residual(&q, t).unwrap().norm() < 1e-12);
            }
            if v == Variant::B {
                assert_eq!(qr, range);
            }
        }
    }

    #[test]
    fn variant_lookup_table() {
        use Orient::*;
        assert_eq!(variant_for_outward(UPlus, WPlus).unwrap(), Variant::Base);
        assert_eq!(variant_for_outward(WMinus, UPlus).unwrap(), Variant::A);
        assert_eq!(variant_for_outward(WMinus, UMinus).unwrap(), Variant::B);
        assert_eq!(variant_for_outward(UMinus, WPlus).unwrap(), Variant::C);
        assert!(variant_for_outward(UMinus, UPlus).is_err());
    }

    #[test]
    fn append_rejects_same_family() {
        let p = PolyhedronSpec::unbounded(&type1(), 2.0).unwrap();
        let r = p.append_segment_mapped(SegmentSpec::new(1.0, Orient::WMinus));
        assert!(matches!(r, Err(Error::Orientation(_))));
        let r = p.append_segment_mapped(SegmentSpec::new(1.0, Orient::WPlus));
        assert!(matches!(r, Err(Error::Orientation(_))));
    }

    #[test]
    fn append_rejects_wrong_variant() {
        let base = type1();
        let p = PolyhedronSpec::unbounded(&base, 2.0).unwrap();
        // outward pair at J_2 is (−w, +u): variant A expected
        let r = p.append_segment(SegmentSpec::new(1.0, Orient::UPlus), &base);
        assert!(matches!(r, Err(Error::Inconsistent(_))));
        let ok = p.append_segment(SegmentSpec::new(1.0, Orient::UPlus), &alternate_params(&base, Variant::A));
        assert!(ok.is_ok());
        let other = make_type1(2, &[0.7], &ds(&[50.0, 75.0, 95.0, 140.0])).unwrap();
        let r = p.append_segment(SegmentSpec::new(1.0, Orient::UPlus), &alternate_params(&other, Variant::A));
        assert!(matches!(r, Err(Error::Inconsistent(_))));
    }

    #[test]
    fn genus0_three_segments() {
        let p = PolyhedronSpec::genus0(
            &type1(),
            &[
                SegmentSpec::new(f64::INFINITY, Orient::UMinus),
                SegmentSpec::new(2.5, Orient::WPlus),
                SegmentSpec::new(f64::INFINITY, Orient::UPlus),
            ],
        )
        .unwrap();
        assert_eq!(p.segment_count(), 3);
        assert_eq!(p.junctures().len(), 2);
        assert_eq!(p.junctures()[1].variant(), Variant::A);
        assert!(p.is_unbounded(0) && p.is_unbounded(2));
        assert_eq!(p.segment_edge_lengths(1).unwrap().len(), 4);
        let e = p.euler_counts();
        assert_eq!((e.vertices, e.edges, e.faces), (4 * 2 + 2, 4 * 5, 12));
    }

    #[test]
    fn genus0_first_two_fixed() {
        let r = PolyhedronSpec::genus0(
            &type1(),
            &[SegmentSpec::new(1.0, Orient::UPlus), SegmentSpec::new(1.0, Orient::WPlus)],
        );
        assert!(matches!(r, Err(Error::Orientation(_))));
    }

    fn torus_orients() -> [Orient; 4] {
        [Orient::UPlus, Orient::WPlus, Orient::UMinus, Orient::WMinus]
    }

    fn torus_junctures(base: &JunctureParams, o: &[Orient]) -> Vec<JunctureParams> {
        (0..o.len())
            .map(|i| {
                let v = variant_for_outward(o[i].negate(), o[(i + 1) % o.len()]).unwrap();
                alternate_params(base, v)
            })
            .collect()
    }

    #[test]
    fn torus_closes_with_equal_lengths() {
        let base = type1();
        let o = torus_orients();
        let segs: Vec<_> = o.iter().map(|&x| SegmentSpec::new(2.0, x)).collect();
        let p = build_genus1(&torus_junctures(&base, &o), &segs).unwrap();
        let vs: Vec<_> = p.junctures().iter().map(|j| j.variant()).collect();
        assert_eq!(vs, alloc::vec![Variant::C, Variant::B, Variant::A, Variant::Base]);
        let e = p.euler_counts();
        assert_eq!((e.vertices, e.edges, e.faces, e.characteristic()), (16, 32, 16, 0));
    }

    #[test]
    fn torus_unequal_opposites_fails() {
        let base = type1();
        let o = torus_orients();
        let segs: Vec<_> =
            o.iter().enumerate().map(|(i, &x)| SegmentSpec::new(if i == 0 { 3.0 } else { 2.0 }, x)).collect();
        let r = build_genus1(&torus_junctures(&base, &o), &segs);
        match r {
            Err(Error::Closure(m)) => assert!(m.contains("along u")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn torus_needs_even_j_at_least_four() {
        let base = type1();
        let o = [Orient::UPlus, Orient::WPlus];
        let segs: Vec<_> = o.iter().map(|&x| SegmentSpec::new(2.0, x)).collect();
        assert!(matches!(build_genus1(&torus_junctures(&base, &o), &segs), Err(Error::Domain(_))));
    }

    #[test]
    fn euler_octahedron() {
        let p = PolyhedronSpec::unbounded(&type1(), 1.0).unwrap();
        let e = euler_counts(&p);
        assert_eq!((e.vertices, e.edges, e.faces), (6, 12, 8));
        assert_eq!(e.characteristic(), 2);
    }

    #[test]
    fn euler_j3_n6() {
        let base = make_type1(3, &[1.0, 1.2], &ds(&[60.0, 80.0, 70.0, 100.0, 130.0, 95.0]));
        let base = base.unwrap();
        let p = PolyhedronSpec::unbounded(&base, 2.0)
            .unwrap()
            .append_segment_mapped(SegmentSpec::new(1.0, Orient::UPlus))
            .unwrap();
        let e = euler_counts(&p);
        assert_eq!((e.vertices, e.edges, e.faces), (14, 30, 18));
    }
}
