//! Juncture parameter sets `{β_k, B_k, L_k}` for the four flexible families.
//!
//! Each constructor takes the independent parameters of its family, assigns
//! the angle and length relations, and solves the dependent length(s) from the
//! continuity constraints `Σ L_k cos β_k = 0`, `Σ L_k cos B_k = 0` (or, for
//! III-OAE, from the flat-folding width sums). The dependent length is always
//! the highest index of its class; solved lengths that are not strictly
//! positive are an error, never clamped.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::juncture;

/// Margin below which an angle counts as touching 0 or π.
pub const ANGLE_MARGIN: f64 = 1e-9;
/// Magnitude below which a solve coefficient or determinant counts as zero.
pub const SINGULAR_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuspensionType {
    /// Opposite edges equal: `L_{k+M} = L_k`, `B_k = β_{k+M}`, `B_{k+M} = β_k`.
    IOee,
    /// Adjacent edges equal: `L_{N−k+1} = L_k`, `B_k = β_{N−k+1}`.
    IIAee,
    /// `L_{k+M} = L_k`, `β_{k+M} = β_k`, `B_{k+M} = B_k`.
    IIOee,
    /// Opposite angles equal at every vertex but `v_1` and `v_L` (1-based
    /// `oas_index = L`), where they are supplementary.
    IIIOae { oas_index: usize },
}

impl SuspensionType {
    pub fn tag(&self) -> &'static str {
        match self {
            SuspensionType::IOee => "I_OEE",
            SuspensionType::IIAee => "II_AEE",
            SuspensionType::IIOee => "II_OEE",
            SuspensionType::IIIOae { .. } => "III_OAE",
        }
    }

    /// Number of free Δz signs.
    pub fn free_sign_count(&self, n: usize) -> usize {
        match self {
            SuspensionType::IIIOae { .. } => 2,
            _ => n / 2,
        }
    }
}

/// One of the reflected parameter sets that keep a juncture flexible:
///
/// | variant | set                      |
/// |---------|--------------------------|
/// | `Base`  | `{β_k, B_k, L_k}`        |
/// | `A`     | `{β_k, π−B_k, L_k}`      |
/// | `B`     | `{π−β_k, π−B_k, L_k}`    |
/// | `C`     | `{π−β_k, B_k, L_k}`      |
///
/// The variants form a Klein four-group under composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Variant {
    #[default]
    Base,
    A,
    B,
    C,
}

impl Variant {
    pub fn from_flips(flip_beta: bool, flip_b: bool) -> Variant {
        match (flip_beta, flip_b) {
            (false, false) => Variant::Base,
            (false, true) => Variant::A,
            (true, true) => Variant::B,
            (true, false) => Variant::C,
        }
    }

    pub fn flips_beta(self) -> bool {
        matches!(self, Variant::B | Variant::C)
    }

    pub fn flips_b(self) -> bool {
        matches!(self, Variant::A | Variant::B)
    }

    pub fn compose(self, other: Variant) -> Variant {
        Variant::from_flips(self.flips_beta() ^ other.flips_beta(), self.flips_b() ^ other.flips_b())
    }

    pub fn tag(self) -> &'static str {
        match self {
            Variant::Base => "base",
            Variant::A => "A",
            Variant::B => "B",
            Variant::C => "C",
        }
    }
}

/// A juncture: `N` edges of lengths `L_k` with face angles `β_k` (against the
/// `u` segment) and `B_k` (against the `w` segment) at vertex `k`.
///
/// Angles are held in their canonical (`Variant::Base`) form together with a
/// variant tag, so reflections are exact and involutive. Accessors return the
/// effective angles.
#[derive(Debug, Clone, PartialEq)]
pub struct JunctureParams {
    stype: SuspensionType,
    beta: Vec<f64>,
    big_b: Vec<f64>,
    lengths: Vec<f64>,
    zsign: Vec<i8>,
    variant: Variant,
}

impl JunctureParams {
    /// Assembles a parameter set from explicit arrays (radians) and validates it.
    pub fn from_parts(
        stype: SuspensionType,
        beta: Vec<f64>,
        big_b: Vec<f64>,
        lengths: Vec<f64>,
        zsign: Vec<i8>,
        variant: Variant,
        tol: f64,
    ) -> Result<Self> {
        let p = JunctureParams { stype, beta, big_b, lengths, zsign, variant };
        p.validate(tol)?;
        Ok(p)
    }

    /// Same as [`from_parts`](Self::from_parts) without validation, so that a
    /// damaged set can still be inspected.
    pub fn from_parts_unchecked(
        stype: SuspensionType,
        beta: Vec<f64>,
        big_b: Vec<f64>,
        lengths: Vec<f64>,
        zsign: Vec<i8>,
        variant: Variant,
    ) -> Self {
        JunctureParams { stype, beta, big_b, lengths, zsign, variant }
    }

    fn assemble(stype: SuspensionType, beta: Vec<f64>, big_b: Vec<f64>, lengths: Vec<f64>) -> Self {
        let n = lengths.len();
        let free = alloc::vec![1i8; stype.free_sign_count(n)];
        let zsign = juncture::sign_pattern_for(stype, n, &lengths, &free).expect("free sign count matches the type");
        JunctureParams { stype, beta, big_b, lengths, zsign, variant: Variant::Base }
    }

    pub fn stype(&self) -> SuspensionType {
        self.stype
    }

    pub fn n(&self) -> usize {
        self.lengths.len()
    }

    pub fn m(&self) -> usize {
        self.n() / 2
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn lengths(&self) -> &[f64] {
        &self.lengths
    }

    pub fn length(&self, k: usize) -> f64 {
        self.lengths[k]
    }

    pub fn zsign(&self) -> &[i8] {
        &self.zsign
    }

    /// Canonical `β` values (before the variant reflection).
    pub fn base_beta(&self) -> &[f64] {
        &self.beta
    }

    /// Canonical `B` values (before the variant reflection).
    pub fn base_big_b(&self) -> &[f64] {
        &self.big_b
    }

    pub fn beta(&self, k: usize) -> f64 {
        if self.variant.flips_beta() {
            PI - self.beta[k]
        } else {
            self.beta[k]
        }
    }

    pub fn big_b(&self, k: usize) -> f64 {
        if self.variant.flips_b() {
            PI - self.big_b[k]
        } else {
            self.big_b[k]
        }
    }

    pub fn betas(&self) -> Vec<f64> {
        (0..self.n()).map(|k| self.beta(k)).collect()
    }

    pub fn big_bs(&self) -> Vec<f64> {
        (0..self.n()).map(|k| self.big_b(k)).collect()
    }

    /// `cos β_k`, computed as `±cos` of the canonical angle so that
    /// reflected sets differ by an exact sign.
    pub fn cos_beta(&self, k: usize) -> f64 {
        let c = libm::cos(self.beta[k]);
        if self.variant.flips_beta() {
            -c
        } else {
            c
        }
    }

    pub fn cos_big_b(&self, k: usize) -> f64 {
        let c = libm::cos(self.big_b[k]);
        if self.variant.flips_b() {
            -c
        } else {
            c
        }
    }

    pub fn sin_beta(&self, k: usize) -> f64 {
        libm::sin(self.beta[k])
    }

    pub fn sin_big_b(&self, k: usize) -> f64 {
        libm::sin(self.big_b[k])
    }

    /// Derived angle `γ_k = π − β_k` between the juncture edge and the
    /// parallel edge on the far side of the face.
    pub fn gamma(&self, k: usize) -> f64 {
        PI - self.beta(k)
    }

    pub fn big_gamma(&self, k: usize) -> f64 {
        PI - self.big_b(k)
    }

    pub fn total_length(&self) -> f64 {
        self.lengths.iter().sum()
    }

    pub(crate) fn with_variant(&self, variant: Variant) -> Self {
        JunctureParams { variant, ..self.clone() }
    }

    /// Same set in canonical form.
    pub fn canonical(&self) -> Self {
        self.with_variant(Variant::Base)
    }

    /// Re-derives the dependent Δz signs from new free signs.
    pub fn with_free_signs(&self, free: &[i8]) -> Result<Self> {
        let zsign = juncture::sign_pattern_for(self.stype, self.n(), &self.lengths, free)?;
        Ok(JunctureParams { zsign, ..self.clone() })
    }

    /// Copy with `L_k += delta`, bypassing every invariant. Fault injection only.
    pub fn with_length_perturbed(&self, k: usize, delta: f64) -> Self {
        let mut p = self.clone();
        p.lengths[k] += delta;
        p
    }

    /// Checks every structural invariant; `tol` bounds the continuity
    /// residuals relative to `Σ L_k` and the type relations in radians.
    pub fn validate(&self, tol: f64) -> Result<()> {
        let n = self.n();
        check_n(n)?;
        if self.beta.len() != n || self.big_b.len() != n || self.zsign.len() != n {
            return Err(Error::Domain(format!("beta, B, L and z-sign arrays must all have N = {n} entries")));
        }
        for k in 0..n {
            check_angle("beta", k, self.beta[k])?;
            check_angle("B", k, self.big_b[k])?;
            check_length(k, self.lengths[k])?;
            if self.zsign[k] != 1 && self.zsign[k] != -1 {
                return Err(Error::Domain(format!("z sign {} must be +1 or -1", k + 1)));
            }
        }
        self.check_relations(tol)?;
        let (rb, rbb) = continuity_residual(self);
        let scale = self.total_length();
        if libm::fabs(rb) > tol * scale || libm::fabs(rbb) > tol * scale {
            return Err(Error::Inconsistent(format!(
                "continuity sum L_k cos beta_k = sum L_k cos B_k = 0 violated: sum L cos beta = {rb:e}, sum L cos B = {rbb:e}"
            )));
        }
        let free = self.free_signs();
        let expect = juncture::sign_pattern_for(self.stype, n, &self.lengths, &free)?;
        if expect != self.zsign {
            return Err(Error::Inconsistent(format!(
                "z-sign pattern does not have the {} antisymmetry",
                self.stype.tag()
            )));
        }
        Ok(())
    }

    /// The free part of the stored z-sign pattern.
    pub fn free_signs(&self) -> Vec<i8> {
        match self.stype {
            SuspensionType::IIIOae { .. } => {
                let odd = if self.zsign.is_empty() { 1 } else { self.zsign[0] };
                let even = if self.zsign.len() > 1 { self.zsign[1] } else { 1 };
                alloc::vec![odd, even]
            }
            _ => self.zsign.iter().take(self.m()).copied().collect(),
        }
    }

    fn check_relations(&self, tol: f64) -> Result<()> {
        let n = self.n();
        let m = n / 2;
        let (b, bb, l) = (&self.beta, &self.big_b, &self.lengths);
        let close = |x: f64, y: f64| libm::fabs(x - y) <= tol;
        let fail = |what: alloc::string::String| {
            Err(Error::Inconsistent(format!("{} relation violated: {what}", self.stype.tag())))
        };
        let pair = |name: &str, i: usize, j: usize, v: &[f64]| {
            format!("{name}_{} = {name}_{} ({} vs {})", j + 1, i + 1, v[j], v[i])
        };
        match self.stype {
            SuspensionType::IOee => {
                for k in 0..m {
                    if !close(l[k + m], l[k]) {
                        return fail(pair("L", k, k + m, l));
                    }
                    if !close(bb[k], b[k + m]) || !close(bb[k + m], b[k]) {
                        return fail(format!("B_{} = beta_{}, B_{} = beta_{}", k + 1, k + m + 1, k + m + 1, k + 1));
                    }
                }
            }
            SuspensionType::IIAee => {
                for k in 0..n {
                    if !close(l[n - 1 - k], l[k]) {
                        return fail(pair("L", k, n - 1 - k, l));
                    }
                    if !close(bb[k], b[n - 1 - k]) {
                        return fail(format!("B_{} = beta_{}", k + 1, n - k));
                    }
                }
            }
            SuspensionType::IIOee => {
                for k in 0..m {
                    if !close(l[k + m], l[k]) {
                        return fail(pair("L", k, k + m, l));
                    }
                    if !close(b[k + m], b[k]) {
                        return fail(pair("beta", k, k + m, b));
                    }
                    if !close(bb[k + m], bb[k]) {
                        return fail(pair("B", k, k + m, bb));
                    }
                }
            }
            SuspensionType::IIIOae { oas_index } => {
                check_oas_index(n, oas_index)?;
                let (e_beta, e_b) = type3_angles(n, oas_index, b[0], bb[0]);
                for k in 0..n {
                    if !close(b[k], e_beta[k]) || !close(bb[k], e_b[k]) {
                        return fail(format!(
                            "angles at v_{} must follow the alternating (beta, B) / (pi-B, pi-beta) \
                             assignment split at v_{oas_index}",
                            k + 1
                        ));
                    }
                }
                let (odd, even) = type3_width_sums(l, oas_index);
                let scale = self.total_length();
                if libm::fabs(odd) > tol * scale {
                    return fail(format!(
                        "odd-index lengths before and from L_{oas_index} must have equal sums (difference {odd:e})"
                    ));
                }
                if libm::fabs(even) > tol * scale {
                    return fail(format!(
                        "even-index lengths before and from L_{oas_index} must have equal sums (difference {even:e})"
                    ));
                }
            }
        }
        Ok(())
    }
}

/// `(Σ L_k cos β_k, Σ L_k cos B_k)`.
pub fn continuity_residual(p: &JunctureParams) -> (f64, f64) {
    let mut rb = 0.0;
    let mut rbb = 0.0;
    for k in 0..p.n() {
        rb += p.length(k) * p.cos_beta(k);
        rbb += p.length(k) * p.cos_big_b(k);
    }
    (rb, rbb)
}

fn check_n(n: usize) -> Result<()> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::Domain(format!("N = {n}: N must be even and N >= 4")));
    }
    Ok(())
}

fn check_angle(name: &str, k: usize, a: f64) -> Result<()> {
    if !a.is_finite() || a <= ANGLE_MARGIN || a >= PI - ANGLE_MARGIN {
        return Err(Error::Domain(format!("{name}_{} = {a} rad must lie strictly inside (0, pi)", k + 1)));
    }
    Ok(())
}

fn check_length(k: usize, l: f64) -> Result<()> {
    if !l.is_finite() || l <= 0.0 {
        return Err(Error::Infeasible(format!("L_{} = {l} must be positive", k + 1)));
    }
    Ok(())
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::Domain(format!("M = {m}: M must be >= 2 (N = 2M >= 4)")));
    }
    Ok(())
}

fn check_count(what: &str, got: usize, want: usize) -> Result<()> {
    if got != want {
        return Err(Error::Domain(format!("expected {want} {what}, got {got}")));
    }
    Ok(())
}

fn solved_length(name: &str, value: f64) -> Result<f64> {
    if !(value > 0.0) || !value.is_finite() {
        return Err(Error::Infeasible(format!("solved length {name} = {value} is not positive")));
    }
    Ok(value)
}

/// I-OEE juncture: `free_lengths = [L_1, …, L_{M−1}]`, `beta = [β_1, …, β_N]`.
///
/// `L_M` is solved from `Σ_{k=1..M} L_k (cos β_k + cos β_{k+M}) = 0`.
pub fn make_type1(m: usize, free_lengths: &[f64], beta: &[f64]) -> Result<JunctureParams> {
    check_m(m)?;
    let n = 2 * m;
    check_count("free lengths L_1..L_{M-1}", free_lengths.len(), m - 1)?;
    check_count("angles beta_1..beta_N", beta.len(), n)?;
    for (k, &b) in beta.iter().enumerate() {
        check_angle("beta", k, b)?;
    }
    for (k, &l) in free_lengths.iter().enumerate() {
        check_length(k, l)?;
    }
    let coef = |k: usize| libm::cos(beta[k]) + libm::cos(beta[k + m]);
    let lm = solve_last(
        free_lengths,
        coef,
        m,
        "cos beta_M + cos beta_2M",
        "sum_{k<=M} L_k (cos beta_k + cos beta_{k+M}) = 0",
    )?;
    let mut lengths = free_lengths.to_vec();
    lengths.push(lm);
    lengths.extend_from_within(..);
    let mut big_b = beta[m..].to_vec();
    big_b.extend_from_slice(&beta[..m]);
    Ok(JunctureParams::assemble(SuspensionType::IOee, beta.to_vec(), big_b, lengths))
}

/// II-AEE juncture: `free_lengths = [L_1, …, L_{M−1}]`, `beta = [β_1, …, β_N]`.
///
/// `L_M` is solved from `Σ_{k=1..M} L_k (cos β_k + cos β_{N−k+1}) = 0`.
pub fn make_type2_aee(m: usize, free_lengths: &[f64], beta: &[f64]) -> Result<JunctureParams> {
    check_m(m)?;
    let n = 2 * m;
    check_count("free lengths L_1..L_{M-1}", free_lengths.len(), m - 1)?;
    check_count("angles beta_1..beta_N", beta.len(), n)?;
    for (k, &b) in beta.iter().enumerate() {
        check_angle("beta", k, b)?;
    }
    for (k, &l) in free_lengths.iter().enumerate() {
        check_length(k, l)?;
    }
    let coef = |k: usize| libm::cos(beta[k]) + libm::cos(beta[n - 1 - k]);
    let lm = solve_last(
        free_lengths,
        coef,
        m,
        "cos beta_M + cos beta_{M+1}",
        "sum_{k<=M} L_k (cos beta_k + cos beta_{N-k+1}) = 0",
    )?;
    let mut lengths = free_lengths.to_vec();
    lengths.push(lm);
    for k in (0..m).rev() {
        lengths.push(lengths[k]);
    }
    let big_b = (0..n).map(|k| beta[n - 1 - k]).collect();
    Ok(JunctureParams::assemble(SuspensionType::IIAee, beta.to_vec(), big_b, lengths))
}

fn solve_last(free: &[f64], coef: impl Fn(usize) -> f64, m: usize, coef_name: &str, eq: &str) -> Result<f64> {
    let c_last = coef(m - 1);
    if libm::fabs(c_last) < SINGULAR_EPS {
        return Err(Error::Singular(format!("{coef_name} = {c_last:e} is zero, so L_{m} is undetermined by {eq}")));
    }
    let partial: f64 = free.iter().enumerate().map(|(k, &l)| l * coef(k)).sum();
    solved_length(&format!("L_{m} ({eq})"), -partial / c_last)
}

/// II-OEE juncture from `β_1..β_M`, `B_1..B_M`.
///
/// `dependents` names the two 1-based indices in `1..=M` solved from the
/// 2×2 system `Σ_{k=1..M} L_k cos β_k = 0`, `Σ_{k=1..M} L_k cos B_k = 0`
/// (default `(M−1, M)`); `free_lengths` holds the remaining `M−2` lengths in
/// index order.
///
/// With `M = 2` the homogeneous system has a positive solution only when its
/// determinant vanishes. In that case `free_lengths = [L_1]`, `L_2` is solved
/// from the β equation and the B equation must then hold to
/// [`SINGULAR_EPS`]; `dependents` is ignored.
pub fn make_type2_oee(
    m: usize,
    free_lengths: &[f64],
    beta: &[f64],
    big_b: &[f64],
    dependents: Option<(usize, usize)>,
) -> Result<JunctureParams> {
    check_m(m)?;
    check_count("angles beta_1..beta_M", beta.len(), m)?;
    check_count("angles B_1..B_M", big_b.len(), m)?;
    for k in 0..m {
        check_angle("beta", k, beta[k])?;
        check_angle("B", k, big_b[k])?;
    }
    for (k, &l) in free_lengths.iter().enumerate() {
        check_length(k, l)?;
    }
    let cb: Vec<f64> = beta.iter().map(|&a| libm::cos(a)).collect();
    let cbb: Vec<f64> = big_b.iter().map(|&a| libm::cos(a)).collect();

    let half = if m == 2 {
        check_count("free lengths [L_1] for M = 2", free_lengths.len(), 1)?;
        let l1 = free_lengths[0];
        if libm::fabs(cb[1]) < SINGULAR_EPS {
            return Err(Error::Singular("cos beta_2 = 0: L_2 undetermined".into()));
        }
        let l2 = solved_length("L_2", -l1 * cb[0] / cb[1])?;
        let r = l1 * cbb[0] + l2 * cbb[1];
        if libm::fabs(r) > SINGULAR_EPS * (l1 + l2) {
            return Err(Error::Singular(format!(
                "M = 2 requires cos beta_1 cos B_2 = cos beta_2 cos B_1; sum L_k cos B_k = {r:e}"
            )));
        }
        alloc::vec![l1, l2]
    } else {
        let (d1, d2) = dependents.unwrap_or((m - 1, m));
        if d1 == d2 || d1 < 1 || d2 < 1 || d1 > m || d2 > m {
            return Err(Error::Domain(format!("dependent indices ({d1}, {d2}) must be distinct and within 1..={m}")));
        }
        check_count("free lengths (M - 2)", free_lengths.len(), m - 2)?;
        let (i, j) = (d1 - 1, d2 - 1);
        let mut half = alloc::vec![0.0; m];
        let mut free = free_lengths.iter();
        for (k, slot) in half.iter_mut().enumerate() {
            if k != i && k != j {
                *slot = *free.next().expect("count checked");
            }
        }
        let rhs1: f64 = -(0..m).map(|k| half[k] * cb[k]).sum::<f64>();
        let rhs2: f64 = -(0..m).map(|k| half[k] * cbb[k]).sum::<f64>();
        let det = cb[i] * cbb[j] - cb[j] * cbb[i];
        if libm::fabs(det) < SINGULAR_EPS {
            return Err(Error::Singular(format!("2x2 continuity system for L_{d1}, L_{d2} has determinant {det:e}")));
        }
        half[i] = solved_length(&format!("L_{d1}"), (rhs1 * cbb[j] - cb[j] * rhs2) / det)?;
        half[j] = solved_length(&format!("L_{d2}"), (cb[i] * rhs2 - rhs1 * cbb[i]) / det)?;
        half
    };
    let double = |v: &[f64]| -> Vec<f64> { v.iter().chain(v.iter()).copied().collect() };
    Ok(JunctureParams::assemble(SuspensionType::IIOee, double(beta), double(big_b), double(&half)))
}

pub(crate) fn check_oas_index(n: usize, oas_index: usize) -> Result<()> {
    // N = 4 is the octahedral case: the second OAS vertex is v_3, opposite v_1.
    let hi = core::cmp::max(3, n - 2);
    if oas_index < 3 || oas_index > hi {
        return Err(Error::Domain(format!("L_idx = {oas_index} must lie in [3, N-2] = [3, {hi}] for N = {n}")));
    }
    Ok(())
}

/// Angle assignment for III-OAE: vertices before `v_L` keep `(β, B)` on odd
/// indices and `(π−B, π−β)` on even ones; from `v_L` on, odd indices take
/// `(π−β, π−B)` and even ones `(B, β)`.
pub(crate) fn type3_angles(n: usize, oas_index: usize, beta: f64, big_b: f64) -> (Vec<f64>, Vec<f64>) {
    let mut b = alloc::vec![0.0; n];
    let mut bb = alloc::vec![0.0; n];
    for k in 0..n {
        let idx = k + 1;
        let before = idx < oas_index;
        let (x, y) = match (idx % 2 == 1, before) {
            (true, true) => (beta, big_b),
            (true, false) => (PI - beta, PI - big_b),
            (false, true) => (PI - big_b, PI - beta),
            (false, false) => (big_b, beta),
        };
        b[k] = x;
        bb[k] = y;
    }
    (b, bb)
}

/// `(Σ_{odd i<L} L_i − Σ_{odd i≥L} L_i, same for even i)`, zero for a valid set.
pub(crate) fn type3_width_sums(lengths: &[f64], oas_index: usize) -> (f64, f64) {
    let mut odd = 0.0;
    let mut even = 0.0;
    for (k, &l) in lengths.iter().enumerate() {
        let idx = k + 1;
        let s = if idx < oas_index { l } else { -l };
        if idx % 2 == 1 {
            odd += s;
        } else {
            even += s;
        }
    }
    (odd, even)
}

/// III-OAE juncture from the two free angles and `free_lengths = [L_1, …, L_{N−2}]`.
///
/// `L_{N−1}` and `L_N` are solved so that, within each parity class, the
/// lengths before `v_L` sum to the lengths from `v_L` on.
pub fn make_type3_oae(
    n: usize,
    oas_index: usize,
    beta: f64,
    big_b: f64,
    free_lengths: &[f64],
) -> Result<JunctureParams> {
    check_n(n)?;
    check_oas_index(n, oas_index)?;
    check_angle("beta", 0, beta)?;
    check_angle("B", 0, big_b)?;
    check_count("free lengths L_1..L_{N-2}", free_lengths.len(), n - 2)?;
    for (k, &l) in free_lengths.iter().enumerate() {
        check_length(k, l)?;
    }
    let (odd, even) = type3_width_sums(free_lengths, oas_index);
    // The dependents sit at indices N−1 and N, both past v_L, so each enters
    // its class sum with a minus sign.
    let l_odd = solved_length(&format!("L_{} (odd-index width sums)", n - 1), odd)?;
    let l_even = solved_length(&format!("L_{n} (even-index width sums)"), even)?;
    let mut lengths = free_lengths.to_vec();
    lengths.push(l_odd);
    lengths.push(l_even);
    let (b, bb) = type3_angles(n, oas_index, beta, big_b);
    Ok(JunctureParams::assemble(SuspensionType::IIIOae { oas_index }, b, bb, lengths))
}
