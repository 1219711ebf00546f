//! Realization of a single juncture as a closed vertex chain.
//!
//! The displacement `Δv_k = v_{k+1} − v_k` is the unique vector (up to the
//! sign of its `z` component) with
//!
//! ```text
//! |Δv_k| = L_k,   Δv_k·u(θ) = L_k cos β_k,   Δv_k·w(θ) = L_k cos B_k,
//! ```
//!
//! which gives `Δx = L(cos B − cos β)/(2 sin θ)`, `Δy = −L(cos B + cos β)/(2 cos θ)`
//! and `Δz = ±√(L² − Δx² − Δy²)`. Since the three identities involve only edge
//! lengths and face angles, θ is a flexion parameter as soon as the chain
//! closes, i.e. `Σ Δz_k = 0` for the chosen signs.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::geom::{check_theta, deg, FlexionInterval, Vec3};
use crate::params::{JunctureParams, SuspensionType};

/// Relative slack under which a negative radicand is treated as a flat edge.
const RADICAND_SLACK: f64 = 1e-12;

/// The displacement `Δv_k` between consecutive juncture vertices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaV {
    pub dx: f64,
    pub dy: f64,
    pub dz: f64,
}

impl DeltaV {
    pub fn as_vec(self) -> Vec3 {
        Vec3::new(self.dx, self.dy, self.dz)
    }
}

/// `Δv` for one edge of length `length` with face angles `beta` (against `u`)
/// and `big_b` (against `w`).
pub fn compute_delta(length: f64, beta: f64, big_b: f64, theta: f64, zsign: i8) -> Result<DeltaV> {
    delta_from_cos(length, libm::cos(beta), libm::cos(big_b), theta, zsign)
}

pub(crate) fn delta_from_cos(length: f64, cb: f64, cbb: f64, theta: f64, zsign: i8) -> Result<DeltaV> {
    check_theta(theta)?;
    let (s, c) = libm::sincos(theta);
    let diff = cbb - cb;
    let dx = if diff == 0.0 {
        0.0
    } else if s == 0.0 {
        return Err(Error::Range(format!(
            "theta = 0 requires cos beta = cos B on every edge (got difference {diff:e})"
        )));
    } else {
        length * diff / (2.0 * s)
    };
    let dy = -length * (cbb + cb) / (2.0 * c);
    let l2 = length * length;
    let mut rad = l2 - dx * dx - dy * dy;
    if rad < 0.0 {
        if rad >= -RADICAND_SLACK * l2 {
            rad = 0.0;
        } else {
            return Err(Error::Range(format!(
                "theta = {:.6} deg: radicand L^2 - dx^2 - dy^2 = {rad:e} < 0",
                deg(theta)
            )));
        }
    }
    let dz = f64::from(zsign) * libm::sqrt(rad);
    Ok(DeltaV { dx, dy, dz })
}

/// Admissible |θ| for one edge, from `cos β`, `cos B`.
///
/// With `a = cos B − cos β`, `b = cos B + cos β` and `s = sin²θ`, the radicand
/// is non-negative iff `4s² − (4 + a² − b²)s + a² ≤ 0`.
pub(crate) fn vertex_range(cb: f64, cbb: f64) -> FlexionInterval {
    let a = cbb - cb;
    let b = cbb + cb;
    let a2 = a * a;
    let p = 4.0 + a2 - b * b;
    let disc = libm::fmax(p * p - 16.0 * a2, 0.0);
    let root = libm::sqrt(disc);
    let s_hi = (p + root) / 8.0;
    // stable form of the small root
    let s_lo = if a2 == 0.0 { 0.0 } else { 2.0 * a2 / (p + root) };
    let lo = libm::asin(libm::sqrt(s_lo.clamp(0.0, 1.0)));
    let (hi, closed_hi) = if s_hi >= 1.0 { (FRAC_PI_2, false) } else { (libm::asin(libm::sqrt(s_hi.max(0.0))), true) };
    FlexionInterval { lo, hi, closed_lo: true, closed_hi }
}

/// Positive branch of θ values at which every `Δz_k` is real.
pub fn flexion_range(p: &JunctureParams) -> Result<FlexionInterval> {
    let mut acc = FlexionInterval::FULL;
    for k in 0..p.n() {
        let r = vertex_range(p.cos_beta(k), p.cos_big_b(k));
        acc = acc.intersect(&r).ok_or(Error::EmptyRange)?;
    }
    Ok(acc)
}

/// Default Δz sign pattern for the type, with every free sign `+1`.
pub fn sign_pattern(p: &JunctureParams) -> Vec<i8> {
    let free = alloc::vec![1i8; p.stype().free_sign_count(p.n())];
    sign_pattern_for(p.stype(), p.n(), p.lengths(), &free).expect("free sign count matches")
}

/// Sign pattern from explicit free signs.
///
/// I-OEE and II-OEE take `σ_{k+M} = −σ_k`, II-AEE takes `σ_{N−k+1} = −σ_k`,
/// each with `σ_1..σ_M` free. III-OAE has one free sign per parity class:
/// vertices before `v_L` carry it, vertices from `v_L` on carry its negative,
/// so the signed length sums of both classes cancel.
pub fn sign_pattern_for(stype: SuspensionType, n: usize, _lengths: &[f64], free: &[i8]) -> Result<Vec<i8>> {
    let want = stype.free_sign_count(n);
    if free.len() != want {
        return Err(Error::Domain(format!("{} takes {want} free z signs, got {}", stype.tag(), free.len())));
    }
    if free.iter().any(|&s| s != 1 && s != -1) {
        return Err(Error::Domain("free z signs must be +1 or -1".into()));
    }
    let m = n / 2;
    let mut z = alloc::vec![0i8; n];
    match stype {
        SuspensionType::IOee | SuspensionType::IIOee => {
            for k in 0..m {
                z[k] = free[k];
                z[k + m] = -free[k];
            }
        }
        SuspensionType::IIAee => {
            for k in 0..m {
                z[k] = free[k];
                z[n - 1 - k] = -free[k];
            }
        }
        SuspensionType::IIIOae { oas_index } => {
            for (k, slot) in z.iter_mut().enumerate() {
                let idx = k + 1;
                let class = if idx % 2 == 1 { free[0] } else { free[1] };
                *slot = if idx < oas_index { class } else { -class };
            }
        }
    }
    Ok(z)
}

/// All `N` displacements at `theta`, including the closing edge `Δv_N`.
pub fn deltas(p: &JunctureParams, theta: f64) -> Result<Vec<DeltaV>> {
    (0..p.n()).map(|k| delta_from_cos(p.length(k), p.cos_beta(k), p.cos_big_b(k), theta, p.zsign()[k])).collect()
}

/// `v_1..v_N` with `v_{k+1} = v_k + Δv_k`.
pub fn chain_vertices(p: &JunctureParams, v1: Vec3, theta: f64) -> Result<Vec<Vec3>> {
    let d = deltas(p, theta)?;
    Ok(chain_from_deltas(&d, v1))
}

pub(crate) fn chain_from_deltas(d: &[DeltaV], v1: Vec3) -> Vec<Vec3> {
    let mut out = Vec::with_capacity(d.len());
    let mut v = v1;
    out.push(v);
    for dv in &d[..d.len() - 1] {
        v += dv.as_vec();
        out.push(v);
    }
    out
}

/// `Σ_{k=1..N} Δv_k`; zero exactly when the juncture closes.
pub fn closure_residual(p: &JunctureParams, theta: f64) -> Result<Vec3> {
    Ok(deltas(p, theta)?.iter().fold(Vec3::ZERO, |acc, d| acc + d.as_vec()))
}

/// Base vertex giving the juncture its symmetric placement.
///
/// - I-OEE: `x_1 = −ΣΔx/2`, `y_1 = 0`, `z_1 = −ΣΔz/2` (sums over `k = 1..M`);
///   the chain is then invariant under the half-turn `(x, y, z) → (−x, y, −z)`
///   taking `v_k` to `v_{k+M}`.
/// - II-AEE: `x_1 = y_1 = 0` and `z_1` the fixed point of `z_1 = z_M/2 − ΣΔz`;
///   the chain is then mirror-symmetric in `y = 0` with `v_k ↔ v_{N−k+2}`.
/// - II-OEE: `x_1 = y_1 = 0`, `z_1 = −ΣΔz/2`; the chain is mirror-symmetric in
///   `z = 0` with `v_k ↔ v_{k+M}`.
///
/// III-OAE has no symmetric form.
pub fn symmetric_v1(p: &JunctureParams, theta: f64) -> Result<Vec3> {
    let m = p.m();
    let d = deltas(p, theta)?;
    let sum_x: f64 = d[..m].iter().map(|d| d.dx).sum();
    let sum_z: f64 = d[..m].iter().map(|d| d.dz).sum();
    match p.stype() {
        SuspensionType::IOee => Ok(Vec3::new(-sum_x / 2.0, 0.0, -sum_z / 2.0)),
        SuspensionType::IIAee => {
            // z_M = z_1 + Σ_{k<M} Δz_k, so z_1 = z_M/2 − ΣΔz solves to
            // z_1 = Σ_{k<M} Δz_k − 2 Σ_{k≤M} Δz_k.
            let partial: f64 = d[..m - 1].iter().map(|d| d.dz).sum();
            Ok(Vec3::new(0.0, 0.0, partial - 2.0 * sum_z))
        }
        SuspensionType::IIOee => Ok(Vec3::new(0.0, 0.0, -sum_z / 2.0)),
        SuspensionType::IIIOae { .. } => {
            Err(Error::Unsupported("III_OAE junctures have no symmetric base vertex; any v1 closes".into()))
        }
    }
}

/// Default base vertex: symmetric where the type has one, origin otherwise.
pub fn default_v1(p: &JunctureParams, theta: f64) -> Result<Vec3> {
    match p.stype() {
        SuspensionType::IIIOae { .. } => Ok(Vec3::ZERO),
        _ => symmetric_v1(p, theta),
    }
}

/// Juncture dihedral `ε` from `cos 2θ = cos β cos B + sin β sin B cos ε`.
pub fn dihedral_epsilon(beta: f64, big_b: f64, theta: f64) -> Result<f64> {
    check_theta(theta)?;
    epsilon_from_parts(libm::cos(beta), libm::sin(beta), libm::cos(big_b), libm::sin(big_b), libm::cos(2.0 * theta))
}

/// Same relation for an arbitrary opening: `cos_open` is the cosine of the
/// angle between the two segment directions leaving the juncture.
pub(crate) fn epsilon_from_parts(cb: f64, sb: f64, cbb: f64, sbb: f64, cos_open: f64) -> Result<f64> {
    let den = sb * sbb;
    if libm::fabs(den) < 1e-12 {
        return Err(Error::Domain(format!("sin beta sin B = {den:e}: dihedral undefined")));
    }
    let ce = (cos_open - cb * cbb) / den;
    if libm::fabs(ce) > 1.0 + 1e-12 {
        return Err(Error::Range(format!("cos epsilon = {ce} lies outside [-1, 1]")));
    }
    Ok(libm::acos(ce.clamp(-1.0, 1.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::orientation_vectors;
    use crate::params::*;
    use core::f64::consts::PI;

    fn d(x: f64) -> f64 {
        x.to_radians()
    }

    fn ds(v: &[f64]) -> Vec<f64> {
        v.iter().map(|&x| d(x)).collect()
    }

    /// Independent oracle: solve Δv·u = a, Δv·w = b, |Δv| = L by linear algebra
    /// on the 2×2 system in (x, y), no closed form.
    fn oracle_delta(l: f64, beta: f64, big_b: f64, theta: f64, sign: f64) -> Vec3 {
        let (u, w) = orientation_vectors(theta).unwrap();
        let (a, b) = (l * beta.cos(), l * big_b.cos());
        let det = u.x * w.y - u.y * w.x;
        let x = (a * w.y - u.y * b) / det;
        let y = (u.x * b - a * w.x) / det;
        Vec3::new(x, y, sign * (l * l - x * x - y * y).max(0.0).sqrt())
    }

    #[test]
    fn right_angle_edge_is_vertical() {
        for t in [0.0, 0.3, -1.2] {
            let dv = compute_delta(2.0, d(90.0), d(90.0), t, 1).unwrap();
            assert!(dv.as_vec().approx_eq(Vec3::new(0.0, 0.0, 2.0), 1e-15));
            let dv = compute_delta(2.0, d(90.0), d(90.0), t, -1).unwrap();
            assert!((dv.dz + 2.0).abs() < 1e-15);
        }
    }

    #[test]
    fn sixty_one_twenty_at_lower_endpoint_is_flat() {
        // θ = 30°: Δx = −1/(2 sin 30°) = −1, Δy = 0, Δz = 0
        let dv = compute_delta(1.0, d(60.0), d(120.0), d(30.0), 1).unwrap();
        assert!((dv.dx + 1.0).abs() < 1e-12);
        assert!(dv.dy.abs() < 1e-15);
        assert!(dv.dz.abs() < 1e-6);
    }

    #[test]
    fn sixty_one_twenty_at_75_matches_oracle() {
        let dv = compute_delta(1.0, d(60.0), d(120.0), d(75.0), 1).unwrap().as_vec();
        let o = oracle_delta(1.0, d(60.0), d(120.0), d(75.0), 1.0);
        assert!(dv.approx_eq(o, 1e-12));
        let (u, w) = orientation_vectors(d(75.0)).unwrap();
        assert!((dv.norm() - 1.0).abs() < 1e-12);
        assert!((dv.dot(u) - 0.5).abs() < 1e-12);
        assert!((dv.dot(w) + 0.5).abs() < 1e-12);
    }

    #[test]
    fn below_range_is_range_error() {
        // range for (60°, 120°) is [30°, 90°)
        let r = compute_delta(1.0, d(60.0), d(120.0), d(20.0), 1);
        assert!(matches!(r, Err(Error::Range(_))));
        let r = compute_delta(1.0, d(60.0), d(120.0), 0.0, 1);
        assert!(matches!(r, Err(Error::Range(_))));
        let r = compute_delta(1.0, d(60.0), d(120.0), FRAC_PI_2, 1);
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn delta_identities_match_oracle_on_grid() {
        for &(b, bb) in &[(50.0, 70.0), (100.0, 40.0), (130.0, 120.0), (80.0, 80.0)] {
            let r = vertex_range(d(b).cos(), d(bb).cos());
            for t in r.interior_samples(9) {
                for th in [t, -t] {
                    let dv = compute_delta(1.7, d(b), d(bb), th, -1).unwrap().as_vec();
                    let o = oracle_delta(1.7, d(b), d(bb), th, -1.0);
                    assert!(dv.approx_eq(o, 1e-11), "{b} {bb} {th}");
                }
            }
        }
    }

    fn right_angle_juncture() -> JunctureParams {
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

    #[test]
    fn right_angle_range_is_full() {
        let r = flexion_range(&right_angle_juncture()).unwrap();
        assert_eq!(r, FlexionInterval::FULL);
    }

    #[test]
    fn worst_vertex_sets_range() {
        // oracle: s = sin²θ solves 4s² − 5s + 1 = 0 → s ∈ {1/4, 1}
        let r = vertex_range(0.5, -0.5);
        assert!((r.lo - d(30.0)).abs() < 1e-12);
        assert_eq!(r.hi, FRAC_PI_2);
        assert!(r.closed_lo && !r.closed_hi);
        // β = B = 45°: a = 0, s ∈ [0, 1/2]
        let c = d(45.0).cos();
        let r = vertex_range(c, c);
        assert_eq!(r.lo, 0.0);
        assert!((r.hi - d(45.0)).abs() < 1e-12);
        assert!(r.closed_hi);
    }

    #[test]
    fn range_endpoints_are_radicand_roots() {
        for &(b, bb) in &[(50.0, 70.0), (100.0, 40.0), (130.0, 20.0)] {
            let (cb, cbb) = (d(b).cos(), d(bb).cos());
            let r = vertex_range(cb, cbb);
            let f = |t: f64| {
                let (s, c) = (t.sin(), t.cos());
                1.0 - ((cbb - cb) / (2.0 * s)).powi(2) - ((cbb + cb) / (2.0 * c)).powi(2)
            };
            assert!(f(r.lo).abs() < 1e-9);
            if r.closed_hi {
                assert!(f(r.hi).abs() < 1e-9);
            }
            assert!(f(r.lo - 1e-4) < 0.0);
            assert!(f((r.lo + r.hi) / 2.0) > 0.0);
        }
    }

    #[test]
    fn default_sign_patterns() {
        let p = make_type1(2, &[1.0], &ds(&[60.0, 80.0, 100.0, 130.0])).unwrap();
        assert_eq!(sign_pattern(&p), alloc::vec![1, 1, -1, -1]);
        let p = make_type2_aee(2, &[1.0], &ds(&[50.0, 70.0, 100.0, 140.0])).unwrap();
        assert_eq!(sign_pattern(&p), alloc::vec![1, 1, -1, -1]);
        let p = make_type2_aee(3, &[1.0, 1.0], &ds(&[50.0, 70.0, 40.0, 100.0, 120.0, 140.0])).unwrap();
        assert_eq!(sign_pattern(&p), alloc::vec![1, 1, 1, -1, -1, -1]);
        let p = make_type3_oae(6, 3, d(70.0), d(50.0), &[3.0, 2.5, 1.0, 1.0]).unwrap();
        assert_eq!(sign_pattern(&p), alloc::vec![1, 1, -1, -1, -1, -1]);
        let q = p.with_free_signs(&[-1, 1]).unwrap();
        assert_eq!(q.zsign(), &[-1, 1, 1, -1, 1, -1]);
    }

    #[test]
    fn type3_closure_with_width_partition() {
        let p = make_type3_oae(6, 3, d(70.0), d(50.0), &[3.0, 2.5, 1.0, 1.0]).unwrap();
        let r = flexion_range(&p).unwrap();
        for t in [d(10.0), d(30.0), d(55.0)] {
            if !r.contains(t) {
                continue;
            }
            let c = closure_residual(&p, t).unwrap();
            assert!(c.norm() < 1e-12, "{c:?}");
            // Σ Δz vanishes by itself
            let dz: f64 = deltas(&p, t).unwrap().iter().map(|d| d.dz).sum();
            assert!(dz.abs() < 1e-12);
        }
        for t in r.interior_samples(20) {
            assert!(closure_residual(&p, t).unwrap().norm() < 1e-12);
        }
    }

    #[test]
    fn right_angle_chain_walk() {
        let p = right_angle_juncture();
        let v = chain_vertices(&p, Vec3::ZERO, 0.4).unwrap();
        let want =
            [Vec3::new(0.0, 0.0, 0.0), Vec3::new(0.0, 0.0, 1.0), Vec3::new(0.0, 0.0, 2.0), Vec3::new(0.0, 0.0, 1.0)];
        for (a, b) in v.iter().zip(want.iter()) {
            assert!(a.approx_eq(*b, 1e-15));
        }
        assert!(closure_residual(&p, 0.4).unwrap().norm() < 1e-15);
    }

    #[test]
    fn wrong_sign_pattern_breaks_closure() {
        let p = make_type1(2, &[1.0], &ds(&[60.0, 80.0, 100.0, 130.0])).unwrap();
        let r = flexion_range(&p).unwrap();
        let t = (r.lo + r.hi) / 2.0;
        let bad = JunctureParams::from_parts(
            p.stype(),
            p.base_beta().to_vec(),
            p.base_big_b().to_vec(),
            p.lengths().to_vec(),
            alloc::vec![1, 1, -1, -1],
            Variant::Base,
            1e-12,
        )
        .unwrap();
        assert!(closure_residual(&bad, t).unwrap().norm() < 1e-12);
        // all-plus pattern: Σ Δz = Σ |Δz_k| > 0
        let dz: f64 = deltas(&bad, t).unwrap().iter().map(|d| d.dz.abs()).sum();
        assert!(dz > 1e-3);
    }

    #[test]
    fn translation_equivariance() {
        let p = make_type1(2, &[1.0], &ds(&[60.0, 80.0, 100.0, 130.0])).unwrap();
        let r = flexion_range(&p).unwrap();
        let t = (r.lo + r.hi) / 2.0;
        let shift = Vec3::new(0.3, -2.0, 5.0);
        let a = chain_vertices(&p, Vec3::ZERO, t).unwrap();
        let b = chain_vertices(&p, shift, t).unwrap();
        for (x, y) in a.iter().zip(b.iter()) {
            assert!((*x + shift).approx_eq(*y, 1e-12));
        }
    }

    #[test]
    fn symmetric_v1_rejects_type3() {
        let p = make_type3_oae(6, 3, d(70.0), d(50.0), &[3.0, 2.5, 1.0, 1.0]).unwrap();
        let r = flexion_range(&p).unwrap();
        assert!(matches!(symmetric_v1(&p, r.lo + 0.01), Err(Error::Unsupported(_))));
    }

    #[test]
    fn right_angle_symmetric_v1() {
        let p = right_angle_juncture();
        let v1 = symmetric_v1(&p, 0.5).unwrap();
        assert!(v1.approx_eq(Vec3::new(0.0, 0.0, -1.0), 1e-15));
        let v = chain_vertices(&p, v1, 0.5).unwrap();
        for k in 0..2 {
            assert!((v[k + 2].z + v[k].z).abs() < 1e-15);
        }
    }

    #[test]
    fn type1_axial_symmetry() {
        let p = make_type1(2, &[1.0], &ds(&[60.0, 80.0, 100.0, 130.0])).unwrap();
        let r = flexion_range(&p).unwrap();
        for t in r.interior_samples(5) {
            let v = chain_vertices(&p, symmetric_v1(&p, t).unwrap(), t).unwrap();
            for k in 0..2 {
                assert!((v[k + 2].x + v[k].x).abs() < 1e-12);
                assert!((v[k + 2].y - v[k].y).abs() < 1e-12);
                assert!((v[k + 2].z + v[k].z).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn type2_oee_mirror_symmetry() {
        let p = make_type2_oee(3, &[1.0], &ds(&[40.0, 100.0, 120.0]), &ds(&[70.0, 130.0, 80.0]), None).unwrap();
        let r = flexion_range(&p).unwrap();
        for t in r.interior_samples(5) {
            let v = chain_vertices(&p, symmetric_v1(&p, t).unwrap(), t).unwrap();
            for k in 0..3 {
                assert!((v[k + 3].x - v[k].x).abs() < 1e-12);
                assert!((v[k + 3].y - v[k].y).abs() < 1e-12);
                assert!((v[k + 3].z + v[k].z).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn type2_aee_mirror_symmetry() {
        let p = make_type2_aee(3, &[1.0, 0.8], &ds(&[50.0, 70.0, 40.0, 100.0, 120.0, 140.0]));
        let p = p.unwrap();
        let n = 6;
        let r = flexion_range(&p).unwrap();
        for t in r.interior_samples(5) {
            let v = chain_vertices(&p, symmetric_v1(&p, t).unwrap(), t).unwrap();
            for k in 1..n {
                let j = n - k; // zero-based image of v_{k+1} is v_{N−k+1}
                assert!((v[j].x - v[k].x).abs() < 1e-12);
                assert!((v[j].y + v[k].y).abs() < 1e-12);
                assert!((v[j].z - v[k].z).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn epsilon_right_angle_is_two_theta() {
        for t in [0.1, 0.5, 1.2, -0.7] {
            let e = dihedral_epsilon(d(90.0), d(90.0), t).unwrap();
            assert!((e - 2.0 * t.abs()).abs() < 1e-12);
        }
    }

    #[test]
    fn epsilon_range_and_value() {
        // cos ε = (1 + 0.25)/0.75 = 5/3
        assert!(matches!(dihedral_epsilon(d(60.0), d(120.0), 0.0), Err(Error::Range(_))));
        // cos ε = (cos 120° + 0.25)/0.75 = −1/3
        let e = dihedral_epsilon(d(60.0), d(120.0), d(60.0)).unwrap();
        assert!((e - (-1.0f64 / 3.0).acos()).abs() < 1e-12);
        assert!((e.to_degrees() - 109.4712206).abs() < 1e-6);
        assert!(matches!(dihedral_epsilon(0.0, 1.0, 0.3), Err(Error::Domain(_))));
    }

    #[test]
    fn epsilon_matches_half_plane_angle() {
        // geometric oracle: angle between u and w after removing the Δv component
        for &(b, bb) in &[(60.0, 120.0), (50.0, 70.0), (100.0, 40.0)] {
            let r = vertex_range(d(b).cos(), d(bb).cos());
            for t in r.interior_samples(7) {
                let dv = compute_delta(1.0, d(b), d(bb), t, 1).unwrap().as_vec();
                let e = dv * (1.0 / dv.norm());
                let (u, w) = orientation_vectors(t).unwrap();
                let measured = u.reject(e).angle_to(w.reject(e));
                let f = dihedral_epsilon(d(b), d(bb), t).unwrap();
                assert!((f - measured).abs() < 1e-9, "{b} {bb} {t}: {f} vs {measured}");
            }
        }
    }

    #[test]
    fn epsilon_is_not_constant() {
        let r = vertex_range(d(60.0).cos(), d(120.0).cos());
        let a = dihedral_epsilon(d(60.0), d(120.0), r.lo + 0.2).unwrap();
        let b = dihedral_epsilon(d(60.0), d(120.0), r.lo + 0.3).unwrap();
        assert!((a - b).abs() > 1e-6);
        let _ = PI;
    }
}
