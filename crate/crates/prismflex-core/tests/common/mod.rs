//! Random feasible parameter sets and independent geometric oracles shared by
//! the integration tests.

#![allow(dead_code)]

use std::f64::consts::PI;

use prismflex_core::{
    alternate_params, build_genus1, flexion_range, make_type1, make_type2_aee, make_type2_oee, make_type3_oae,
    variant_for_outward, Frame, JunctureParams, Orient, PolyhedronSpec, SegmentSpec, Vec3,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    OneOee,
    TwoAee,
    TwoOee,
    ThreeOae,
}

pub const KINDS: [Kind; 4] = [Kind::OneOee, Kind::TwoAee, Kind::TwoOee, Kind::ThreeOae];

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::OneOee => "I_OEE",
            Kind::TwoAee => "II_AEE",
            Kind::TwoOee => "II_OEE",
            Kind::ThreeOae => "III_OAE",
        }
    }
}

fn angle(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(15.0f64..165.0).to_radians()
}

fn length(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(0.5..2.0)
}

fn try_once(kind: Kind, n: usize, rng: &mut ChaCha8Rng) -> Option<JunctureParams> {
    let m = n / 2;
    match kind {
        Kind::OneOee => {
            let beta: Vec<f64> = (0..n).map(|_| angle(rng)).collect();
            let free: Vec<f64> = (0..m - 1).map(|_| length(rng)).collect();
            make_type1(m, &free, &beta).ok()
        }
        Kind::TwoAee => {
            let beta: Vec<f64> = (0..n).map(|_| angle(rng)).collect();
            let free: Vec<f64> = (0..m - 1).map(|_| length(rng)).collect();
            make_type2_aee(m, &free, &beta).ok()
        }
        Kind::TwoOee if m == 2 => {
            // the homogeneous 2×2 system needs a vanishing determinant:
            // pick L_1, L_2 from the β equation, then B_2 from the B equation
            let beta = [angle(rng), angle(rng)];
            let l1 = length(rng);
            let l2 = -l1 * beta[0].cos() / beta[1].cos();
            if !(l2 > 0.2 && l2 < 5.0) {
                return None;
            }
            let b1 = angle(rng);
            let cb2 = -l1 * b1.cos() / l2;
            if cb2.abs() > 0.97 {
                return None;
            }
            make_type2_oee(2, &[l1], &beta, &[b1, cb2.acos()], None).ok()
        }
        Kind::TwoOee => {
            let beta: Vec<f64> = (0..m).map(|_| angle(rng)).collect();
            let big_b: Vec<f64> = (0..m).map(|_| angle(rng)).collect();
            let free: Vec<f64> = (0..m - 2).map(|_| length(rng)).collect();
            make_type2_oee(m, &free, &beta, &big_b, None).ok()
        }
        Kind::ThreeOae => {
            let hi = 3.max(n - 2);
            let oas = rng.gen_range(3..=hi);
            let free: Vec<f64> = (0..n - 2).map(|_| length(rng)).collect();
            make_type3_oae(n, oas, angle(rng), angle(rng), &free).ok()
        }
    }
}

/// A feasible set whose flexion range is at least `min_width` wide and whose
/// solved lengths stay within a sane ratio of the free ones.
pub fn random_params(kind: Kind, n: usize, min_width: f64, rng: &mut ChaCha8Rng) -> JunctureParams {
    for _ in 0..200_000 {
        if let Some(p) = try_once(kind, n, rng) {
            let ok_len = p.lengths().iter().all(|&l| l > 0.05 && l < 20.0);
            if let Ok(r) = flexion_range(&p) {
                if ok_len && r.width() >= min_width {
                    return p;
                }
            }
        }
    }
    panic!("no feasible {} set with N = {n}", kind.name());
}

/// `Δv` from its defining relations `Δv·u = L cos β`, `Δv·w = L cos B`,
/// `|Δv| = L`, solved by Cramer's rule.
pub fn oracle_delta(l: f64, cb: f64, cbb: f64, theta: f64, zsign: i8) -> Vec3 {
    let u = (-theta.sin(), -theta.cos());
    let w = (theta.sin(), -theta.cos());
    let det = u.0 * w.1 - u.1 * w.0;
    let (r1, r2) = (l * cb, l * cbb);
    let dx = (r1 * w.1 - u.1 * r2) / det;
    let dy = (u.0 * r2 - r1 * w.0) / det;
    let rad = (l * l - dx * dx - dy * dy).max(0.0);
    Vec3::new(dx, dy, f64::from(zsign) * rad.sqrt())
}

pub fn oracle_closure(p: &JunctureParams, theta: f64) -> Vec3 {
    (0..p.n())
        .fold(Vec3::ZERO, |acc, k| acc + oracle_delta(p.length(k), p.cos_beta(k), p.cos_big_b(k), theta, p.zsign()[k]))
}

/// Unsigned angle at edge `a → b` between the faces through `c1` and `c2`,
/// measured between the face normals `e × (c − a)`; `None` when the faces
/// are within 1e-6 of coplanar.
pub fn oracle_dihedral(a: Vec3, b: Vec3, c1: Vec3, c2: Vec3) -> Option<f64> {
    let e = b - a;
    let n1 = e.cross(c1 - a);
    let n2 = e.cross(c2 - a);
    let den = n1.norm() * n2.norm();
    let cos = n1.dot(n2) / den;
    let sin = n1.cross(n2).norm() / den;
    if sin < 1e-6 {
        None
    } else {
        Some(sin.atan2(cos))
    }
}

/// The six pairwise distances of face `k` of segment `j`.
pub fn face_distances(f: &Frame, j: usize, k: usize) -> [f64; 6] {
    let q = f.face(j, k);
    [
        q[0].distance(q[1]),
        q[0].distance(q[2]),
        q[0].distance(q[3]),
        q[1].distance(q[2]),
        q[1].distance(q[3]),
        q[2].distance(q[3]),
    ]
}

/// Largest change of any face distance over the frames.
pub fn max_face_deviation(frames: &[Frame]) -> f64 {
    let first = &frames[0];
    let mut worst = 0.0f64;
    for f in frames {
        for j in 0..f.segment_count() {
            for k in 0..f.n {
                let a = face_distances(first, j, k);
                let b = face_distances(f, j, k);
                for i in 0..6 {
                    worst = worst.max((a[i] - b[i]).abs());
                }
            }
        }
    }
    worst
}

pub fn genus0_j2(base: &JunctureParams) -> PolyhedronSpec {
    PolyhedronSpec::unbounded(base, f64::INFINITY).unwrap()
}

pub fn genus0_j3(base: &JunctureParams) -> PolyhedronSpec {
    let s = base.total_length() / base.n() as f64 * 1.5;
    PolyhedronSpec::genus0(
        base,
        &[
            SegmentSpec::new(f64::INFINITY, Orient::UMinus),
            SegmentSpec::new(s, Orient::WPlus),
            SegmentSpec::new(f64::INFINITY, Orient::UPlus),
        ],
    )
    .unwrap()
}

pub const TORUS: [Orient; 4] = [Orient::UPlus, Orient::WPlus, Orient::UMinus, Orient::WMinus];

pub fn torus_with(base: &JunctureParams, lengths: [f64; 4]) -> Result<PolyhedronSpec, prismflex_core::Error> {
    let js: Vec<_> = (0..4)
        .map(|i| alternate_params(base, variant_for_outward(TORUS[i].negate(), TORUS[(i + 1) % 4]).unwrap()))
        .collect();
    let segs: Vec<_> = (0..4).map(|i| SegmentSpec::new(lengths[i], TORUS[i])).collect();
    build_genus1(&js, &segs)
}

pub fn torus(base: &JunctureParams) -> PolyhedronSpec {
    let a = base.total_length() / base.n() as f64 * 2.0;
    torus_with(base, [a, 0.7 * a, a, 0.7 * a]).unwrap()
}

pub fn in_open_pi(x: f64) -> bool {
    x > 0.0 && x < PI
}
