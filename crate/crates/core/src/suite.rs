//! Seeded randomized verification of every exact identity, sign claim and
//! floating oracle over random rational triangles.
//!
//! Samples are drawn sequentially from one seeded stream and checked in
//! parallel; results are merged in sample order, so a given configuration
//! always produces the same summary.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bary::{BaryPoint, InfinityDirection};
use crate::catalog::{self, Certificate, WeightTriple};
use crate::centers::{center, contact_triangle, tangent_triangle, CenterId};
use crate::eld;
use crate::planar::PlanarFrame;
use crate::scalar::{exact, ratio, Exact, Scalar, Tolerance};
use crate::{ExactPoint, ExactTriangle};

/// Relative agreement required between the barycentric metric and the
/// Cartesian embedding.
pub const ORACLE_RELATIVE: f64 = 1e-10;

/// Relative differences are measured against `max(|d|, ORACLE_FLOOR·Σa²)`;
/// without a floor the relative error of two nearly coincident centers is
/// dominated by cancellation in the embedding, not by the metric.
pub const ORACLE_FLOOR: f64 = 1e-3;

/// Tolerance for Blundon membership and the square-root identities.
pub const APPROX_TOLERANCE: Tolerance = Tolerance { relative: 1e-10, absolute: 1e-10 };

const DENOMINATORS: i64 = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct FuzzConfig {
    pub samples: usize,
    pub seed: u64,
    /// Sides are drawn from `(0, side_max]`.
    pub side_max: Exact,
    /// Weights are drawn from `[−weight_max, weight_max]`.
    pub weight_max: Exact,
    pub tol: Tolerance,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            samples: 1000,
            seed: 42,
            side_max: exact(20, 1),
            weight_max: exact(10, 1),
            tol: APPROX_TOLERANCE,
        }
    }
}

/// One random input: a triangle plus everything the weighted identities
/// consume.
#[derive(Debug, Clone)]
pub struct Sample {
    pub index: usize,
    pub triangle: ExactTriangle,
    pub other: ExactTriangle,
    pub weights: WeightTriple<Exact>,
    pub point: ExactPoint,
    pub direction: InfinityDirection<Exact>,
    pub lambdas: Vec<Exact>,
}

impl Sample {
    /// Replayable description of this input.
    pub fn describe(&self) -> String {
        let [a, b, c] = self.triangle.sides();
        let [oa, ob, oc] = self.other.sides();
        let m = self.point.mass();
        let l = self.direction.components();
        format!(
            "sample #{}: report {a} {b} {c} --weights {},{},{} (other triangle {oa},{ob},{oc}; point [{}, {}, {}]; direction [{}, {}, {}])",
            self.index, self.weights.x, self.weights.y, self.weights.z, m[0], m[1], m[2], l[0], l[1], l[2]
        )
    }
}

fn floor_times(bound: &Exact, den: i64) -> i64 {
    (bound * BigInt::from(den)).floor().to_integer().to_i64().unwrap_or(i64::MAX).max(1)
}

fn draw_side(rng: &mut ChaCha8Rng, max: &Exact) -> Exact {
    let den = rng.random_range(1..=DENOMINATORS);
    let top = floor_times(max, den);
    exact(rng.random_range(1..=top), den)
}

fn draw_triangle(rng: &mut ChaCha8Rng, max: &Exact) -> ExactTriangle {
    loop {
        let (a, b, c) = (draw_side(rng, max), draw_side(rng, max), draw_side(rng, max));
        if let Ok(t) = ExactTriangle::new(a, b, c) {
            return t;
        }
    }
}

fn draw_weight(rng: &mut ChaCha8Rng, max: &Exact) -> Exact {
    let den = rng.random_range(1..=DENOMINATORS);
    let top = floor_times(max, den);
    exact(rng.random_range(-top..=top), den)
}

fn draw_weights(rng: &mut ChaCha8Rng, max: &Exact) -> WeightTriple<Exact> {
    loop {
        let w = WeightTriple::new(draw_weight(rng, max), draw_weight(rng, max), draw_weight(rng, max));
        if !w.sum().is_zero() {
            return w;
        }
    }
}

fn draw_point(rng: &mut ChaCha8Rng) -> ExactPoint {
    loop {
        let m = [0, 1, 2].map(|_| exact(rng.random_range(-6..=12), rng.random_range(1..=DENOMINATORS)));
        if let Ok(p) = BaryPoint::new(m) {
            return p;
        }
    }
}

fn draw_direction(rng: &mut ChaCha8Rng) -> InfinityDirection<Exact> {
    loop {
        let (u, v) = (rng.random_range(-9i64..=9), rng.random_range(-9i64..=9));
        if let Ok(l) = InfinityDirection::new([exact(u, 1), exact(v, 1), exact(-u - v, 1)]) {
            return l;
        }
    }
}

/// Fixed `λ` grid on `[−4, 4]` in steps of `1/2`, plus `2/3` and two random
/// sevenths.
fn draw_lambdas(rng: &mut ChaCha8Rng) -> Vec<Exact> {
    let mut out: Vec<Exact> = (-8..=8).map(|k| exact(k, 2)).collect();
    out.push(exact(2, 3));
    out.push(exact(rng.random_range(-28..=28), 7));
    out.push(exact(rng.random_range(-28..=28), 7));
    out
}

pub fn generate_samples(cfg: &FuzzConfig) -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.samples)
        .map(|index| Sample {
            index,
            triangle: draw_triangle(&mut rng, &cfg.side_max),
            other: draw_triangle(&mut rng, &cfg.side_max),
            weights: draw_weights(&mut rng, &cfg.weight_max),
            point: draw_point(&mut rng),
            direction: draw_direction(&mut rng),
            lambdas: draw_lambdas(&mut rng),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skip(String),
}

/// Per-sample collector of named outcomes.
#[derive(Debug, Default)]
pub struct Checks {
    entries: Vec<(String, Outcome)>,
}

impl Checks {
    fn record(&mut self, name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) {
        let outcome = if ok { Outcome::Pass } else { Outcome::Fail(detail()) };
        self.entries.push((name.into(), outcome));
    }

    fn equal(&mut self, name: impl Into<String>, lhs: &Exact, rhs: &Exact) {
        self.record(name, lhs == rhs, || format!("{lhs} ≠ {rhs}"));
    }

    fn skip(&mut self, name: impl Into<String>, reason: String) {
        self.entries.push((name.into(), Outcome::Skip(reason)));
    }

    fn certificate(&mut self, prefix: &str, cert: &Certificate<Exact>) {
        for w in &cert.witnesses {
            self.record(format!("{prefix}.{}.{}", cert.name, w.label), w.residual.is_zero(), || {
                format!("residual {} (analytic {}, metric {})", w.residual, cert.analytic, w.metric)
            });
        }
        for s in &cert.skipped {
            self.skip(format!("{prefix}.{}.{}", cert.name, s.label), s.reason.clone());
        }
        if cert.hypotheses_hold {
            self.record(format!("sign.{}", cert.name), !cert.analytic.is_negative(), || {
                format!("slack {} < 0", cert.analytic)
            });
        } else {
            self.skip(format!("sign.{}", cert.name), "hypotheses not met".into());
        }
    }

    fn close(&mut self, name: impl Into<String>, approx: f64, reference: f64, scale: f64) {
        let denom = reference.abs().max(scale);
        let rel = (approx - reference).abs() / denom;
        self.record(name, rel <= ORACLE_RELATIVE, || format!("barycentric {reference} vs planar {approx} (rel {rel:e})"));
    }

    pub fn entries(&self) -> &[(String, Outcome)] {
        &self.entries
    }
}

fn check_bary(s: &Sample, out: &mut Checks) {
    let t = &s.triangle;
    let w = t.conway();
    let [a2, b2, c2] = t.sides_sq();
    out.equal("bary.conway_sum_a", &(w.sb.clone() + w.sc.clone()), &a2);
    out.equal("bary.conway_sum_b", &(w.sc.clone() + w.sa.clone()), &b2);
    out.equal("bary.conway_sum_c", &(w.sa.clone() + w.sb.clone()), &c2);
    out.equal("bary.conway_pairs", &w.pair_sum(), &(exact(4, 1) * w.area_sq.clone()));
    let h = center(t, CenterId::Orthocenter);
    let reference = t.h_kernel(&h);
    out.equal("bary.h_kernel_point", &t.h_kernel(&s.point), &reference);
    out.equal("bary.h_kernel_incenter", &t.h_kernel(&center(t, CenterId::Incenter)), &reference);
    let split = t.cauchy_split(&s.point, &center(t, CenterId::Incenter), &s.direction).expect("nondegenerate direction");
    out.equal("bary.cauchy_sum", &split.total(), &t.dist2(&s.point, &center(t, CenterId::Incenter)));
    out.record("bary.cauchy_nonnegative", !split.along.is_negative() && !split.across.is_negative(), || {
        format!("along {} across {}", split.along, split.across)
    });
    // |HX|² = XKXᵀ − HKHᵀ
    let hx = t.dist2(&h, &s.point);
    out.equal("bary.h_distance", &hx, &(t.kernel(s.point.coords(), s.point.coords()) - reference));
}

fn check_centers(s: &Sample, out: &mut Checks) {
    let t = &s.triangle;
    let inv = eld::SrrInvariants::of(t);
    let o = center(t, CenterId::Circumcenter);
    let h = center(t, CenterId::Orthocenter);
    let i = center(t, CenterId::Incenter);
    let verts = [0, 1, 2].map(BaryPoint::<Exact>::vertex);
    for (k, v) in verts.iter().enumerate() {
        out.equal(format!("centers.circumradius_{}", ['a', 'b', 'c'][k]), &t.dist2(&o, v), &inv.big_r2);
    }
    out.equal("centers.altitude_a", &t.metric_dot(&verts[0], &h, &verts[1], &verts[2]), &Exact::zero());
    out.equal("centers.altitude_b", &t.metric_dot(&verts[1], &h, &verts[2], &verts[0]), &Exact::zero());
    out.equal("centers.oh_formula", &t.dist2(&o, &h), &eld::oh_sq(&inv));
    for (k, p) in contact_triangle(t).points().into_iter().enumerate() {
        out.equal(format!("centers.contact_radius_{}", ['d', 'e', 'f'][k]), &t.dist2(&i, p), &inv.r2);
    }
    match tangent_triangle(t) {
        Ok(tt) => {
            let mut tangent = true;
            for (p, (j, k)) in [(&tt.d, (1, 2)), (&tt.e, (2, 0)), (&tt.f, (0, 1))] {
                tangent &= t.metric_dot(&verts[j], &o, &verts[j], p).is_zero();
                tangent &= t.metric_dot(&verts[k], &o, &verts[k], p).is_zero();
            }
            out.record("centers.tangency", tangent, || "tangent triangle vertex off its tangent lines".into());
            let lengths = t.dist2(&tt.e, &tt.f) == tt.ef.clone() * tt.ef.clone()
                && t.dist2(&tt.f, &tt.d) == tt.fd.clone() * tt.fd.clone()
                && t.dist2(&tt.d, &tt.e) == tt.de.clone() * tt.de.clone();
            out.record("centers.tangent_lengths", lengths, || "signed side lengths disagree with |EF|²".into());
        }
        Err(err) => {
            out.skip("centers.tangency", err.to_string());
            out.skip("centers.tangent_lengths", err.to_string());
        }
    }
}

fn check_catalog(s: &Sample, out: &mut Checks) {
    let t = &s.triangle;
    let wt = &s.weights;
    let certs = [
        catalog::quadratic_form(t, wt),
        catalog::wolstenholme(t, wt),
        catalog::garfunkel_bankoff(t),
        catalog::kooi(t, wt),
        catalog::oppenheim(t, wt),
        catalog::neuberg_pedoe(t, &s.other),
        catalog::klamkin(t, wt, &s.point),
        catalog::weitzenbock(t),
    ];
    for cert in certs {
        match cert {
            Ok(cert) => out.certificate("catalog", &cert),
            Err(err) => out.skip("catalog.unbuilt", err.to_string()),
        }
    }

    if let Ok(cert) = catalog::wolstenholme(t, wt) {
        if let [first, second] = cert.witnesses.as_slice() {
            out.equal("catalog.wolstenholme.witnesses_agree", &first.metric, &second.metric);
        }
    }
    if let Ok(m) = catalog::moment_identities(t, wt, &s.point) {
        out.equal("catalog.klamkin.inertia_moment", &m.inertia_direct, &m.inertia_kernel);
        out.equal("catalog.klamkin.pair_moment", &m.pair_direct, &m.pair_kernel);
    }
    let o = center(t, CenterId::Circumcenter);
    if let (Ok(k), Ok(kooi)) = (catalog::klamkin(t, wt, &o), catalog::kooi(t, wt)) {
        out.equal("catalog.klamkin.reduces_to_kooi", &k.analytic, &kooi.analytic);
    }
    let mut unit = WeightTriple::ones();
    if let (Ok(op), Ok(wz)) = (catalog::oppenheim(t, &unit), catalog::weitzenbock(t)) {
        out.equal("catalog.oppenheim.unit_is_weitzenbock", &op.analytic, &wz.analytic);
        out.record("equality.weitzenbock_iff_equilateral", wz.analytic.is_zero() == t.is_equilateral(), || {
            format!("slack {}", wz.analytic)
        });
    }
    if let Ok(gb) = catalog::garfunkel_bankoff(t) {
        out.record("equality.garfunkel_bankoff_iff_equilateral", gb.analytic.is_zero() == t.is_equilateral(), || {
            format!("slack {}", gb.analytic)
        });
    }
    // P = O zeroes Kooi for every triangle.
    let conway = t.conway();
    let [a2, b2, c2] = t.sides_sq();
    unit = WeightTriple::new(a2 * conway.sa.clone(), b2 * conway.sb.clone(), c2 * conway.sc.clone());
    if let Ok(k) = catalog::kooi(t, &unit) {
        out.equal("equality.kooi_at_circumcenter", &k.analytic, &Exact::zero());
    }
}

fn check_eld(s: &Sample, out: &mut Checks) {
    let t = &s.triangle;
    for check in eld::eld_i_identities(t).iter().chain(eld::eld_m_identities(t).iter()) {
        out.equal(format!("eld.{}", check.name), &check.lhs, &check.rhs);
    }
    let d = eld::d_i(t);
    let mut grid_i = true;
    let mut grid_m = true;
    let mut above_min = true;
    for lambda in &s.lambdas {
        let v = eld::eld_i(t, lambda);
        grid_i &= v == eld::eld_i_direct(t, lambda);
        grid_m &= eld::eld_m(t, lambda) == eld::eld_m_direct(t, lambda);
        above_min &= v >= d;
    }
    out.record("eld.eld_i_grid", grid_i, || "ELD_I polynomial differs from |I X(λ)|²".into());
    out.record("eld.eld_m_grid", grid_m, || "ELD_M polynomial differs from |M X(λ)|²".into());
    out.record("sign.eld_inequality", above_min && !d.is_negative(), || format!("d_I = {d}"));
    out.record("equality.d_i_zero_iff_isosceles", d.is_zero() == t.is_isosceles(), || format!("d_I = {d}"));
    out.record("sign.fundamental_bound", !eld::fundamental_bound(t).is_positive(), || {
        format!("fundamental = {}", eld::fundamental_bound(t))
    });

    let cor = eld::eld_corollaries(t);
    for check in cor.identities() {
        out.equal(format!("eld.corollary.{}", check.name), &check.lhs, &check.rhs);
    }
    out.record("sign.corollaries", cor.signs_hold(t.is_equilateral()), || {
        format!(
            "angle {} squares {} reciprocal {}",
            cor.obtuse_angle.lhs, cor.sum_of_squares.lhs, cor.reciprocal_squares.lhs
        )
    });

    for cert in eld::classical_via_eld(t) {
        out.certificate("eld", &cert);
        if t.is_equilateral() {
            out.equal(format!("equality.{}", cert.name), &cert.analytic, &Exact::zero());
        }
    }
    for bound in eld::sharpened(t) {
        out.record(format!("sign.sharpened.{}", bound.name), bound.holds(), || {
            format!("{} < {}", bound.value, bound.bound)
        });
    }

    match eld::axis_of_symmetry(t) {
        Ok(axis) => {
            out.equal("eld.axis.lower_decomposition", &axis.lower_decomposition.lhs, &axis.lower_decomposition.rhs);
            out.equal("eld.axis.upper_decomposition", &axis.upper_decomposition.lhs, &axis.upper_decomposition.rhs);
            out.equal("eld.axis.vertex_direct", &axis.vertex, &axis.vertex_direct);
            out.record("theorem.axis_in_range", axis.in_range(), || format!("λ* = {}", axis.vertex));
            out.record("theorem.eld_chain", axis.chain_monotone(), || {
                format!("ELD(2)={} ELD(1)={} ELD(2/3)={}", axis.chain[0], axis.chain[1], axis.chain[2])
            });
        }
        Err(err) => out.skip("theorem.axis_in_range", err.to_string()),
    }
    out.record(
        "theorem.obtuse_hio",
        t.is_equilateral() || cor.obtuse_angle.lhs.is_negative(),
        || format!("2(I−H)K(I−O)ᵀ = {}", cor.obtuse_angle.lhs),
    );

    let ks = eld::kooi_star(t);
    out.certificate("eld", &ks);
    let sharp = eld::kooi_star_sharpened(t);
    out.record("sign.sharpened.kooi_star", sharp.holds(), || format!("{} < {}", sharp.value, sharp.bound));

    let m = center(t, CenterId::Mittenpunkt);
    match eld::euler_frame(t, &m) {
        Ok(frame) => {
            let inv = eld::SrrInvariants::of(t);
            let kappa = inv.kappa();
            out.equal("eld.frame.mittenpunkt_alpha", &(frame.alpha.clone() * frame.alpha.clone()), &(kappa.clone() * kappa));
            let recomposed = frame.recompose(t).map(|p| p == m).unwrap_or(false);
            out.record("eld.frame.recompose", recomposed, || "α·I + β·O + γ·H ≠ P".into());
            if let Ok(dp) = eld::euler_line_distance_sq(t, &s.point) {
                let f = eld::euler_frame(t, &s.point).expect("frame is nondegenerate");
                out.equal("eld.frame.point_distance", &dp, &f.euler_line_distance_sq(t));
            }
        }
        Err(err) => out.skip("eld.frame.mittenpunkt_alpha", err.to_string()),
    }
}

fn check_oracles(s: &Sample, out: &mut Checks) {
    let t = &s.triangle;
    let frame = PlanarFrame::from_triangle(t);
    let scale = ORACLE_FLOOR * t.sides_sq().iter().map(Scalar::approx).sum::<f64>();
    let points: Vec<ExactPoint> = CenterId::ALL.iter().map(|&id| center(t, id)).collect();
    let mut worst: Option<String> = None;
    for (k, p) in points.iter().enumerate() {
        for q in &points[k + 1..] {
            let reference = t.dist2(p, q).approx();
            let planar = frame.dist2(p, q);
            if (planar - reference).abs() > ORACLE_RELATIVE * reference.abs().max(scale) {
                worst = Some(format!("{reference} vs {planar}"));
            }
        }
    }
    out.record("oracle.center_pairs", worst.is_none(), || worst.clone().unwrap_or_default());
    let i = center(t, CenterId::Incenter);
    let m = center(t, CenterId::Mittenpunkt);
    for lambda in &s.lambdas {
        let x = eld::euler_point(t, lambda);
        out.close("oracle.eld_i_points", frame.dist2(&i, &x), eld::eld_i(t, lambda).approx(), scale);
        out.close("oracle.eld_m_points", frame.dist2(&m, &x), eld::eld_m(t, lambda).approx(), scale);
    }
}

fn check_approx(s: &Sample, tol: Tolerance, out: &mut Checks) {
    let t = &s.triangle;
    let b = eld::blundon_interval(t, tol);
    out.record("approx.blundon_membership", b.contains, || format!("{} ∉ [{}, {}]", b.s2, b.lower, b.upper));
    out.record("sign.blundon_fundamental", !b.fundamental.is_positive(), || format!("fundamental {}", b.fundamental));
    out.record("equality.blundon_collapse_iff_equilateral", b.collapsed == t.is_equilateral(), || {
        format!("collapsed = {}", b.collapsed)
    });

    // Σa² − Σ(a−b)² − 4√3·S = 4r(4R + r − √3·s)
    let [a, bb, c] = t.sides().map(Scalar::approx);
    let area = t.area_sq().approx().sqrt();
    let lhs = a * a + bb * bb + c * c - (a - bb).powi(2) - (bb - c).powi(2) - (c - a).powi(2) - 4.0 * 3f64.sqrt() * area;
    let len = eld::SrrInvariants::of(t).lengths(tol);
    let rhs = 4.0 * len.r.value * (4.0 * len.big_r.value + len.r.value - 3f64.sqrt() * len.s.value);
    let scale = a * a + bb * bb + c * c;
    out.record("approx.finsler_hadwiger_sides", (lhs - rhs).abs() <= tol.slack(scale), || format!("{lhs} vs {rhs}"));
    let (minus, plus) = catalog::weitzenbock_factors(t, tol);
    let product = catalog::weitzenbock(t).map(|c| c.analytic.approx()).unwrap_or(f64::NAN);
    out.record("approx.weitzenbock_factors", tol.close(minus.value * plus.value, product), || {
        format!("{} · {} vs {product}", minus.value, plus.value)
    });
    // Euler in its bare form R − 2r = ELD_I(1)/R
    let e1 = eld::eld_i(t, &Exact::from(BigInt::from(1))).approx();
    out.record(
        "approx.euler_bare",
        tol.close(len.big_r.value - 2.0 * len.r.value, e1 / len.big_r.value),
        || format!("R − 2r = {}", len.big_r.value - 2.0 * len.r.value),
    );
    // Finsler–Hadwiger in its bare form 4R + r − √3·s = ELD_I(2)/(4R + r + √3·s)
    let e2 = eld::eld_i(t, &ratio::<Exact>(2, 1)).approx();
    let k = 4.0 * len.big_r.value + len.r.value;
    let root3s = 3f64.sqrt() * len.s.value;
    out.record("approx.finsler_hadwiger_bare", (k - root3s - e2 / (k + root3s)).abs() <= tol.slack(k), || {
        format!("{} vs {}", k - root3s, e2 / (k + root3s))
    });
}

/// Every check for one sample.
pub fn check_sample(s: &Sample, tol: Tolerance) -> Checks {
    let mut out = Checks::default();
    check_bary(s, &mut out);
    check_centers(s, &mut out);
    check_catalog(s, &mut out);
    check_eld(s, &mut out);
    check_oracles(s, &mut out);
    check_approx(s, tol, &mut out);
    out
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub identity: String,
    pub sample: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkipNote {
    pub identity: String,
    pub sample: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteSummary {
    pub samples: usize,
    pub seed: u64,
    pub tallies: BTreeMap<String, Tally>,
    pub failures: Vec<Failure>,
    pub skips: Vec<SkipNote>,
}

impl SuiteSummary {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total_checks(&self) -> usize {
        self.tallies.values().map(|t| t.pass + t.fail).sum()
    }

    /// Identities whose name starts with `prefix` all passed, and at least
    /// one of them ran.
    pub fn group_passes(&self, prefix: &str) -> bool {
        let mut ran = false;
        for (name, tally) in self.tallies.range(prefix.to_string()..) {
            if !name.starts_with(prefix) {
                break;
            }
            if tally.fail > 0 {
                return false;
            }
            ran |= tally.pass > 0;
        }
        ran
    }

    pub fn tally(&self, name: &str) -> Tally {
        self.tallies.get(name).copied().unwrap_or_default()
    }
}

impl fmt::Display for SuiteSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {} · {} samples · {} identities", self.seed, self.samples, self.tallies.len())?;
        for (name, t) in &self.tallies {
            let status = if t.fail == 0 { "ok  " } else { "FAIL" };
            write!(f, "{status} {name:<52} pass {:>6}  fail {:>4}", t.pass, t.fail)?;
            if t.skip > 0 {
                write!(f, "  skip {:>4}", t.skip)?;
            }
            writeln!(f)?;
        }
        let mut grouped: BTreeMap<(&str, &str), (usize, usize)> = BTreeMap::new();
        for skip in &self.skips {
            grouped.entry((&skip.identity, &skip.reason)).or_insert((0, skip.sample)).0 += 1;
        }
        for ((identity, reason), (count, first)) in grouped {
            writeln!(f, "skipped {identity} on {count} samples (first #{first}): {reason}")?;
        }
        for failure in &self.failures {
            writeln!(f, "failed {} on {}: {}", failure.identity, failure.sample, failure.detail)?;
        }
        if self.all_pass() {
            write!(f, "all {} × {} identities pass ({} checks)", self.samples, self.tallies.len(), self.total_checks())
        } else {
            write!(f, "{} failures", self.failures.len())
        }
    }
}

pub fn run(cfg: &FuzzConfig) -> SuiteSummary {
    let samples = generate_samples(cfg);
    let results: Vec<Checks> = samples.par_iter().map(|s| check_sample(s, cfg.tol)).collect();
    let mut summary = SuiteSummary {
        samples: samples.len(),
        seed: cfg.seed,
        tallies: BTreeMap::new(),
        failures: Vec::new(),
        skips: Vec::new(),
    };
    for (sample, checks) in samples.iter().zip(results) {
        for (name, outcome) in checks.entries {
            let tally = summary.tallies.entry(name.clone()).or_default();
            match outcome {
                Outcome::Pass => tally.pass += 1,
                Outcome::Fail(detail) => {
                    tally.fail += 1;
                    summary.failures.push(Failure { identity: name, sample: sample.describe(), detail });
                }
                Outcome::Skip(reason) => {
                    tally.skip += 1;
                    summary.skips.push(SkipNote { identity: name, sample: sample.index, reason });
                }
            }
        }
    }
    summary
}
