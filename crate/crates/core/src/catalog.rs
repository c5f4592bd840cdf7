//! Metric certificates for the classical inequalities.
//!
//! Each inequality is an `analytic` expression that must be nonnegative, and
//! one or more witnesses `factor · |PQ|²` built from explicit barycentric
//! points. A certificate is exact when every witness residual
//! `analytic − factor·|PQ|²` is zero. Trigonometric quantities are always
//! evaluated through their rational forms (`cos A = S_A/(bc)`,
//! `tan²(A/2) = (s−b)(s−c)/(s(s−a))`, `2r/R = 8S²/(abc·s)`).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bary::{BaryPoint, Triangle};
use crate::centers::{center, contact_triangle, tangent_triangle, CenterId};
use crate::error::{GeometryError, Result};
use crate::scalar::{int, sq, Approx, Scalar, Tolerance};

/// Names of the certified inequalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InequalityId {
    QuadraticForm,
    Wolstenholme,
    GarfunkelBankoff,
    Kooi,
    Oppenheim,
    NeubergPedoe,
    Klamkin,
    Weitzenbock,
    Euler,
    GerretsenUpper,
    GerretsenLower,
    FinslerHadwiger,
    KooiStar,
}

impl InequalityId {
    pub fn as_str(self) -> &'static str {
        match self {
            InequalityId::QuadraticForm => "quadratic_form",
            InequalityId::Wolstenholme => "wolstenholme",
            InequalityId::GarfunkelBankoff => "garfunkel_bankoff",
            InequalityId::Kooi => "kooi",
            InequalityId::Oppenheim => "oppenheim",
            InequalityId::NeubergPedoe => "neuberg_pedoe",
            InequalityId::Klamkin => "klamkin",
            InequalityId::Weitzenbock => "weitzenbock",
            InequalityId::Euler => "euler",
            InequalityId::GerretsenUpper => "gerretsen_upper",
            InequalityId::GerretsenLower => "gerretsen_lower",
            InequalityId::FinslerHadwiger => "finsler_hadwiger",
            InequalityId::KooiStar => "kooi_star",
        }
    }
}

impl fmt::Display for InequalityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Weights `x, y, z`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightTriple<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Scalar> WeightTriple<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        WeightTriple { x, y, z }
    }

    pub fn ones() -> Self {
        WeightTriple::new(T::one(), T::one(), T::one())
    }

    pub fn sum(&self) -> T {
        self.x.clone() + self.y.clone() + self.z.clone()
    }

    pub fn as_array(&self) -> [T; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.x.is_negative() && !self.y.is_negative() && !self.z.is_negative()
    }

    /// `yz·a² + zx·b² + xy·c²` for the given squared sides.
    fn pair_moment(&self, sides_sq: &[T; 3]) -> T {
        let [a2, b2, c2] = sides_sq.clone();
        self.y.clone() * self.z.clone() * a2
            + self.z.clone() * self.x.clone() * b2
            + self.x.clone() * self.y.clone() * c2
    }
}

/// One metric form `factor · |PQ|²`.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness<T> {
    pub label: &'static str,
    pub factor: T,
    pub p: BaryPoint<T>,
    pub q: BaryPoint<T>,
    pub dist2: T,
    pub metric: T,
    pub residual: T,
}

/// A witness that could not be built for this input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedWitness {
    pub label: &'static str,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate<T> {
    pub name: InequalityId,
    pub analytic: T,
    pub witnesses: Vec<Witness<T>>,
    pub skipped: Vec<SkippedWitness>,
    /// Whether the classical hypotheses of the inequality hold for this
    /// input, i.e. whether `slack ≥ 0` is asserted.
    pub hypotheses_hold: bool,
}

impl<T: Scalar> Certificate<T> {
    /// The nonnegative side of the inequality.
    pub fn slack(&self) -> &T {
        &self.analytic
    }

    /// Metric value of the first witness.
    pub fn metric(&self) -> &T {
        &self.witnesses[0].metric
    }

    pub fn residual(&self) -> &T {
        &self.witnesses[0].residual
    }

    /// All witness residuals are exactly zero.
    pub fn is_exact(&self) -> bool {
        self.witnesses.iter().all(|w| w.residual.is_zero())
    }

    pub fn max_abs_residual(&self) -> T {
        self.witnesses
            .iter()
            .map(|w| w.residual.abs())
            .fold(T::zero(), |m, r| if r > m { r } else { m })
    }

    pub fn witness(&self, label: &str) -> Option<&Witness<T>> {
        self.witnesses.iter().find(|w| w.label == label)
    }
}

/// Accumulates witnesses for one analytic value.
pub(crate) struct CertificateBuilder<T> {
    cert: Certificate<T>,
    triangle: Triangle<T>,
}

impl<T: Scalar> CertificateBuilder<T> {
    pub(crate) fn new(t: &Triangle<T>, name: InequalityId, analytic: T) -> Self {
        CertificateBuilder {
            cert: Certificate {
                name,
                analytic,
                witnesses: Vec::new(),
                skipped: Vec::new(),
                hypotheses_hold: true,
            },
            triangle: t.clone(),
        }
    }

    pub(crate) fn hypotheses(mut self, hold: bool) -> Self {
        self.cert.hypotheses_hold = hold;
        self
    }

    /// Adds `factor·|PQ|²`.
    pub(crate) fn distance(self, label: &'static str, factor: T, p: BaryPoint<T>, q: BaryPoint<T>) -> Self {
        let dist2 = self.triangle.dist2(&p, &q);
        self.value(label, factor, p, q, dist2)
    }

    /// Adds a witness whose squared distance was computed by another route.
    pub(crate) fn value(
        mut self,
        label: &'static str,
        factor: T,
        p: BaryPoint<T>,
        q: BaryPoint<T>,
        dist2: T,
    ) -> Self {
        let metric = factor.clone() * dist2.clone();
        let residual = self.cert.analytic.clone() - metric.clone();
        self.cert.witnesses.push(Witness { label, factor, p, q, dist2, metric, residual });
        self
    }

    pub(crate) fn attempt(
        self,
        label: &'static str,
        build: impl FnOnce() -> Result<(T, BaryPoint<T>, BaryPoint<T>)>,
    ) -> Self {
        match build() {
            Ok((factor, p, q)) => self.distance(label, factor, p, q),
            Err(err) => self.skip(label, err.to_string()),
        }
    }

    pub(crate) fn skip(mut self, label: &'static str, reason: String) -> Self {
        self.cert.skipped.push(SkippedWitness { label, reason });
        self
    }

    pub(crate) fn finish(self) -> Result<Certificate<T>> {
        if self.cert.witnesses.is_empty() {
            return Err(GeometryError::ZeroNormalizer(self.cert.name.as_str()));
        }
        Ok(self.cert)
    }
}

fn nonzero<T: Scalar>(value: T, what: &'static str) -> Result<T> {
    if value.is_zero() {
        Err(GeometryError::ZeroNormalizer(what))
    } else {
        Ok(value)
    }
}

/// Circumradius squared `R² = (abc)²/(16S²)`.
pub(crate) fn circumradius_sq<T: Scalar>(t: &Triangle<T>) -> T {
    sq(&t.side_product()) / (int::<T>(16) * t.area_sq())
}

/// `a²(x−y)(x−z) + b²(y−x)(y−z) + c²(z−x)(z−y) = (x+y+z)²·|PQ|²` with
/// `P = [y,z,x]`, `Q = [z,x,y]`.
pub fn quadratic_form<T: Scalar>(t: &Triangle<T>, w: &WeightTriple<T>) -> Result<Certificate<T>> {
    let [a2, b2, c2] = t.sides_sq();
    let (x, y, z) = (w.x.clone(), w.y.clone(), w.z.clone());
    let analytic = a2 * (x.clone() - y.clone()) * (x.clone() - z.clone())
        + b2 * (y.clone() - x.clone()) * (y.clone() - z.clone())
        + c2 * (z.clone() - x.clone()) * (z.clone() - y.clone());
    let total = nonzero(w.sum(), "weight sum")?;
    let p = BaryPoint::new([y.clone(), z.clone(), x.clone()])?;
    let q = BaryPoint::new([z, x, y])?;
    CertificateBuilder::new(t, InequalityId::QuadraticForm, analytic)
        .distance("cyclic_pair", sq(&total), p, q)
        .finish()
}

/// Wolstenholme: `x²+y²+z² − 2yz·cos A − 2zx·cos B − 2xy·cos C`.
///
/// Witnessed by the cyclic pair with masses `y/b, z/c, x/a` and by the
/// contact-triangle mix `(x·D₁ + y·E₁ + z·F₁)/(x+y+z)` against the incenter.
pub fn wolstenholme<T: Scalar>(t: &Triangle<T>, w: &WeightTriple<T>) -> Result<Certificate<T>> {
    let [a, b, c] = t.sides().map(Clone::clone);
    let conway = t.conway();
    let (x, y, z) = (w.x.clone(), w.y.clone(), w.z.clone());
    let two = int::<T>(2);
    let analytic = sq(&x) + sq(&y) + sq(&z)
        - two.clone() * y.clone() * z.clone() * conway.sa.clone() / (b.clone() * c.clone())
        - two.clone() * z.clone() * x.clone() * conway.sb.clone() / (c.clone() * a.clone())
        - two * x.clone() * y.clone() * conway.sc.clone() / (a.clone() * b.clone());

    CertificateBuilder::new(t, InequalityId::Wolstenholme, analytic)
        .attempt("cyclic_pair", || {
            let (xa, yb, zc) = (x.clone() / a, y.clone() / b, z.clone() / c);
            let mu = nonzero(xa.clone() + yb.clone() + zc.clone(), "x/a + y/b + z/c")?;
            let p = BaryPoint::new([yb.clone(), zc.clone(), xa.clone()])?;
            let q = BaryPoint::new([zc, xa, yb])?;
            Ok((sq(&mu), p, q))
        })
        .attempt("contact_incenter", || {
            let total = nonzero(w.sum(), "weight sum")?;
            let ct = contact_triangle(t);
            let p = BaryPoint::combine(&[(x.clone(), &ct.d1), (y.clone(), &ct.e1), (z.clone(), &ct.f1)])?;
            let inradius_sq = t.area_sq() / sq(&t.semiperimeter());
            Ok((sq(&total) / inradius_sq, p, center(t, CenterId::Incenter)))
        })
        .finish()
}

/// Garfunkel–Bankoff:
/// `tan²(A/2)+tan²(B/2)+tan²(C/2) − 2 + 8·sin(A/2)sin(B/2)sin(C/2) ≥ 0`.
pub fn garfunkel_bankoff<T: Scalar>(t: &Triangle<T>) -> Result<Certificate<T>> {
    let [a, b, c] = t.sides().map(Clone::clone);
    let s = t.semiperimeter();
    let gaps = [s.clone() - a.clone(), s.clone() - b.clone(), s.clone() - c.clone()];
    let [ga, gb, gc] = gaps.clone();
    let tan2 = [
        gb.clone() * gc.clone() / (s.clone() * ga.clone()),
        gc.clone() * ga.clone() / (s.clone() * gb.clone()),
        ga.clone() * gb.clone() / (s.clone() * gc.clone()),
    ];
    let two_r_over_big_r = int::<T>(8) * t.area_sq() / (t.side_product() * s.clone());
    let analytic = tan2.iter().fold(T::zero(), |acc, v| acc + v.clone()) - int::<T>(2) + two_r_over_big_r;

    // 1/cos²(A/2) = bc/(s(s−a))
    let inv_cos2 = [
        b.clone() * c.clone() / (s.clone() * ga.clone()),
        c.clone() * a.clone() / (s.clone() * gb.clone()),
        a * b / (s * gc),
    ];
    let mu = inv_cos2.iter().fold(T::zero(), |acc, v| acc + v.clone());
    let [ia, ib, ic] = inv_cos2;
    let p = BaryPoint::new([ib.clone(), ic.clone(), ia.clone()])?;
    let q = BaryPoint::new([ic, ia, ib])?;
    let factor = sq(&mu) / (int::<T>(16) * circumradius_sq(t));

    // tan(A/2) = r/(s−a); the common factor r cancels between weights and μ/r.
    let inv_gaps = gaps.map(|g| T::one() / g);
    let mu_contact = inv_gaps.iter().fold(T::zero(), |acc, v| acc + v.clone());
    let ct = contact_triangle(t);
    let [wa, wb, wc] = inv_gaps;
    let pc = BaryPoint::combine(&[(wa, &ct.d1), (wb, &ct.e1), (wc, &ct.f1)])?;

    CertificateBuilder::new(t, InequalityId::GarfunkelBankoff, analytic)
        .distance("half_angle_pair", factor, p, q)
        .distance("contact_incenter", sq(&mu_contact), pc, center(t, CenterId::Incenter))
        .finish()
}

/// Cyclic pair over the tangential triangle: weights `(u, v, w)` attached to
/// the signed sides `|EF|, |FD|, |DE|`; returns `(μ², P, Q)`.
fn tangential_pair<T: Scalar>(t: &Triangle<T>, u: &T, v: &T, w: &T) -> Result<(T, BaryPoint<T>, BaryPoint<T>)> {
    let tt = tangent_triangle(t)?;
    let (ue, vf, wd) = (u.clone() / tt.ef.clone(), v.clone() / tt.fd.clone(), w.clone() / tt.de.clone());
    let mu = nonzero(ue.clone() + vf.clone() + wd.clone(), "tangential weight sum")?;
    let p = BaryPoint::combine(&[(vf.clone(), &tt.d), (wd.clone(), &tt.e), (ue.clone(), &tt.f)])?;
    let q = BaryPoint::combine(&[(wd, &tt.d), (ue, &tt.e), (vf, &tt.f)])?;
    Ok((sq(&mu), p, q))
}

/// Kooi: `R²(x+y+z)² − (yz·a² + zx·b² + xy·c²) ≥ 0`.
pub fn kooi<T: Scalar>(t: &Triangle<T>, w: &WeightTriple<T>) -> Result<Certificate<T>> {
    let r2 = circumradius_sq(t);
    let total = w.sum();
    let analytic = r2.clone() * sq(&total) - w.pair_moment(&t.sides_sq());
    CertificateBuilder::new(t, InequalityId::Kooi, analytic)
        .attempt("tangential_pair", || {
            let (mu2, p, q) = tangential_pair(t, &w.x, &w.y, &w.z)?;
            Ok((mu2 * r2.clone(), p, q))
        })
        .attempt("circumcenter", || {
            let total = nonzero(total.clone(), "weight sum")?;
            let p = BaryPoint::new(w.as_array())?;
            Ok((sq(&total), p, center(t, CenterId::Circumcenter)))
        })
        .finish()
}

/// Oppenheim: `(x·a² + y·b² + z·c²)² − 16S²(yz + zx + xy) ≥ 0`.
pub fn oppenheim<T: Scalar>(t: &Triangle<T>, w: &WeightTriple<T>) -> Result<Certificate<T>> {
    oppenheim_named(t, w, InequalityId::Oppenheim)
}

fn oppenheim_named<T: Scalar>(t: &Triangle<T>, w: &WeightTriple<T>, name: InequalityId) -> Result<Certificate<T>> {
    let [a2, b2, c2] = t.sides_sq();
    let scaled = [w.x.clone() * a2, w.y.clone() * b2, w.z.clone() * c2];
    let scaled_sum = scaled.iter().fold(T::zero(), |acc, v| acc + v.clone());
    let pairs = w.y.clone() * w.z.clone() + w.z.clone() * w.x.clone() + w.x.clone() * w.y.clone();
    let analytic = sq(&scaled_sum) - int::<T>(16) * t.area_sq() * pairs;
    CertificateBuilder::new(t, name, analytic)
        .attempt("tangential_pair", || tangential_pair(t, &scaled[0], &scaled[1], &scaled[2]))
        .attempt("circumcenter", || {
            let total = nonzero(scaled_sum.clone(), "x·a² + y·b² + z·c²")?;
            let p = BaryPoint::new(scaled.clone())?;
            Ok((sq(&total) / circumradius_sq(t), p, center(t, CenterId::Circumcenter)))
        })
        .finish()
}

/// Neuberg–Pedoe as Oppenheim with the Conway symbols of a second triangle
/// as weights.
pub fn neuberg_pedoe<T: Scalar>(t: &Triangle<T>, other: &Triangle<T>) -> Result<Certificate<T>> {
    let w = other.conway();
    let weights = WeightTriple::new(w.sa.clone(), w.sb.clone(), w.sc.clone());
    oppenheim_named(t, &weights, InequalityId::NeubergPedoe)
}

/// Both sides of the two moment identities behind Klamkin's inequality.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentIdentities<T> {
    /// `x|QA|² + y|QB|² + z|QC|²` from distances.
    pub inertia_direct: T,
    /// `(x+y+z)(Q·K·Qᵀ − 2·P·K·Qᵀ + 3·G·K·Pᵀ)`.
    pub inertia_kernel: T,
    /// `yz·a² + zx·b² + xy·c²`.
    pub pair_direct: T,
    /// `−(x+y+z)²(P·K·Pᵀ − 3·G·K·Pᵀ)`.
    pub pair_kernel: T,
}

impl<T: Scalar> MomentIdentities<T> {
    pub fn hold(&self) -> bool {
        self.inertia_direct == self.inertia_kernel && self.pair_direct == self.pair_kernel
    }
}

pub fn moment_identities<T: Scalar>(
    t: &Triangle<T>,
    w: &WeightTriple<T>,
    q: &BaryPoint<T>,
) -> Result<MomentIdentities<T>> {
    let total = nonzero(w.sum(), "weight sum")?;
    let p = BaryPoint::new(w.as_array())?;
    let g = center(t, CenterId::Centroid);
    let verts = [0, 1, 2].map(BaryPoint::<T>::vertex);
    let inertia_direct = w
        .as_array()
        .iter()
        .zip(&verts)
        .fold(T::zero(), |acc, (wi, v)| acc + wi.clone() * t.dist2(q, v));
    let three_gkp = int::<T>(3) * t.kernel(g.coords(), p.coords());
    let inertia_kernel = total.clone()
        * (t.kernel(q.coords(), q.coords()) - int::<T>(2) * t.kernel(p.coords(), q.coords())
            + three_gkp.clone());
    let pair_kernel = -(sq(&total) * (t.kernel(p.coords(), p.coords()) - three_gkp));
    Ok(MomentIdentities {
        inertia_direct,
        inertia_kernel,
        pair_direct: w.pair_moment(&t.sides_sq()),
        pair_kernel,
    })
}

/// Klamkin's polar moment of inertia inequality:
/// `(x+y+z)(x|QA|² + y|QB|² + z|QC|²) − (yz·a² + zx·b² + xy·c²) ≥ 0`.
pub fn klamkin<T: Scalar>(t: &Triangle<T>, w: &WeightTriple<T>, q: &BaryPoint<T>) -> Result<Certificate<T>> {
    let moments = moment_identities(t, w, q)?;
    let total = w.sum();
    let analytic = total.clone() * moments.inertia_direct - moments.pair_direct;
    let p = BaryPoint::new(w.as_array())?;
    CertificateBuilder::new(t, InequalityId::Klamkin, analytic)
        .hypotheses(w.is_nonnegative())
        .distance("weighted_point", sq(&total), p, q.clone())
        .finish()
}

/// Weitzenböck in product form:
/// `(a²+b²+c² − 4√3·S)(a²+b²+c² + 4√3·S) = (a²+b²+c²)² − 48S²`,
/// witnessed by `((a²+b²+c²)²/R²)·|O X₆|²`.
pub fn weitzenbock<T: Scalar>(t: &Triangle<T>) -> Result<Certificate<T>> {
    let total = t.sides_sq().iter().fold(T::zero(), |acc, v| acc + v.clone());
    let analytic = sq(&total) - int::<T>(48) * t.area_sq();
    CertificateBuilder::new(t, InequalityId::Weitzenbock, analytic)
        .distance(
            "circumcenter_symmedian",
            sq(&total) / circumradius_sq(t),
            center(t, CenterId::Circumcenter),
            center(t, CenterId::Symmedian),
        )
        .finish()
}

/// The two square-root-bearing Weitzenböck factors `Σa² ∓ 4√3·S`.
pub fn weitzenbock_factors<T: Scalar>(t: &Triangle<T>, tol: Tolerance) -> (Approx, Approx) {
    let total: f64 = t.sides_sq().iter().map(Scalar::approx).sum();
    let k = 4.0 * 3f64.sqrt() * t.area_sq().approx().sqrt();
    (Approx::new(total - k, tol), Approx::new(total + k, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::scalar::{exact, Exact};
    use crate::ExactTriangle;

    fn tri(a: i64, b: i64, c: i64) -> ExactTriangle {
        Triangle::new(exact(a, 1), exact(b, 1), exact(c, 1)).unwrap()
    }

    fn q(n: i64, d: i64) -> Exact {
        exact(n, d)
    }

    fn w(x: i64, y: i64, z: i64) -> WeightTriple<Exact> {
        WeightTriple::new(q(x, 1), q(y, 1), q(z, 1))
    }

    #[test]
    fn quadratic_form_examples() {
        let t = tri(4, 3, 5);
        let c = quadratic_form(&t, &w(1, 1, 1)).unwrap();
        assert_eq!(c.analytic, q(0, 1));
        assert!(c.is_exact());
        assert_eq!(c.witnesses[0].p, c.witnesses[0].q);
        let c = quadratic_form(&t, &w(1, 0, 0)).unwrap();
        assert_eq!(c.analytic, q(16, 1));
        assert_eq!(c.metric(), &q(16, 1));
        assert_eq!(quadratic_form(&t, &w(1, -1, 0)).unwrap_err(), GeometryError::ZeroNormalizer("weight sum"));
    }

    #[test]
    fn wolstenholme_examples() {
        let c = wolstenholme(&tri(1, 1, 1), &w(1, 1, 1)).unwrap();
        assert_eq!(c.analytic, q(0, 1));
        let c = wolstenholme(&tri(4, 3, 5), &w(1, 1, 1)).unwrap();
        // 3 − 2(9/15 + 16/20 + 0)
        assert_eq!(c.analytic, q(1, 5));
        assert_eq!(c.witnesses.len(), 2);
        assert!(c.is_exact());
    }

    #[test]
    fn wolstenholme_skips_one_normalizer() {
        let t = tri(4, 3, 5);
        // x/a + y/b + z/c = 1 − 1 + 0
        let c = wolstenholme(&t, &w(4, -3, 0)).unwrap();
        assert_eq!(c.witnesses.len(), 1);
        assert_eq!(c.skipped[0].label, "cyclic_pair");
        assert!(c.is_exact());
    }

    #[test]
    fn garfunkel_bankoff_examples() {
        assert_eq!(garfunkel_bankoff(&tri(1, 1, 1)).unwrap().analytic, q(0, 1));
        let c = garfunkel_bankoff(&tri(4, 3, 5)).unwrap();
        // 1/4 + 1/9 + 1 − 2 + 4/5
        assert_eq!(c.analytic, q(29, 180));
        assert!(c.is_exact());
        assert_eq!(c.witnesses.len(), 2);
    }

    #[test]
    fn kooi_examples() {
        let t = tri(4, 3, 5);
        let c = kooi(&t, &w(1, 1, 1)).unwrap();
        assert_eq!(c.analytic, q(25, 4));
        assert!(c.is_exact());
        assert_eq!(c.skipped.len(), 1, "right triangle has no tangential witness");
        let conway = t.conway();
        let [a2, b2, c2] = t.sides_sq();
        let at_o = WeightTriple::new(a2 * conway.sa.clone(), b2 * conway.sb.clone(), c2 * conway.sc.clone());
        assert_eq!(kooi(&t, &at_o).unwrap().analytic, q(0, 1));

        let c = kooi(&tri(6, 5, 7), &w(2, -1, 3)).unwrap();
        assert_eq!(c.witnesses.len(), 2);
        assert!(c.is_exact());
    }

    #[test]
    fn oppenheim_examples() {
        let c = oppenheim(&tri(4, 3, 5), &w(1, 1, 1)).unwrap();
        assert_eq!(c.analytic, q(772, 1));
        assert!(c.is_exact());
        let t = tri(2, 3, 4);
        assert_eq!(oppenheim(&t, &w(1, 1, 1)).unwrap().analytic, weitzenbock(&t).unwrap().analytic);
        let c = oppenheim(&t, &w(1, 2, -3)).unwrap();
        assert_eq!(c.witnesses.len(), 2);
        assert!(c.is_exact());
    }

    #[test]
    fn neuberg_pedoe_equilateral_pair() {
        let t = tri(1, 1, 1);
        assert_eq!(neuberg_pedoe(&t, &t).unwrap().analytic, q(0, 1));
        let c = neuberg_pedoe(&tri(6, 5, 7), &tri(2, 3, 4)).unwrap();
        assert!(c.analytic >= q(0, 1));
        assert!(c.is_exact());
    }

    #[test]
    fn klamkin_examples() {
        let t = tri(4, 3, 5);
        let g = center(&t, CenterId::Centroid);
        let c = klamkin(&t, &w(1, 1, 1), &g).unwrap();
        assert_eq!(c.analytic, q(0, 1));
        let i = center(&t, CenterId::Incenter);
        let c = klamkin(&t, &w(1, 2, 3), &i).unwrap();
        assert!(c.is_exact());
        assert!(moment_identities(&t, &w(1, 2, 3), &i).unwrap().hold());
        let o = center(&t, CenterId::Circumcenter);
        let weights = w(3, -1, 5);
        assert_eq!(klamkin(&t, &weights, &o).unwrap().analytic, kooi(&t, &weights).unwrap().analytic);
        assert!(!klamkin(&t, &weights, &o).unwrap().hypotheses_hold);
    }

    #[test]
    fn weitzenbock_examples() {
        assert_eq!(weitzenbock(&tri(1, 1, 1)).unwrap().analytic, q(0, 1));
        let c = weitzenbock(&tri(4, 3, 5)).unwrap();
        assert_eq!(c.analytic, q(772, 1));
        // O = (2, 3/2), X₆ = (18/25, 24/25) with C at the origin
        assert_eq!(c.witnesses[0].dist2, q(193, 100));
        assert!(c.is_exact());
        assert_eq!(weitzenbock(&tri(2, 3, 4)).unwrap().analytic, q(436, 1));
        let (minus, plus) = weitzenbock_factors(&tri(4, 3, 5), Tolerance::default());
        assert!(Tolerance::default().close(minus.value * plus.value, 772.0));
    }

    mod props {
        use super::*;
        use crate::testutil::{arb_point, arb_triangle, arb_weights};
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn all_weighted_certificates_exact(t in arb_triangle(), wt in arb_weights()) {
                prop_assume!(!wt.sum().is_zero());
                for cert in [
                    quadratic_form(&t, &wt).unwrap(),
                    wolstenholme(&t, &wt).unwrap(),
                    kooi(&t, &wt).unwrap(),
                ] {
                    prop_assert!(cert.is_exact(), "{}", cert.name);
                    prop_assert!(cert.analytic >= q(0, 1), "{}", cert.name);
                }
                if let Ok(cert) = oppenheim(&t, &wt) {
                    prop_assert!(cert.is_exact());
                    prop_assert!(cert.analytic >= q(0, 1));
                }
            }

            #[test]
            fn wolstenholme_witnesses_agree(t in arb_triangle(), wt in arb_weights()) {
                prop_assume!(!wt.sum().is_zero());
                let cert = wolstenholme(&t, &wt).unwrap();
                if cert.witnesses.len() == 2 {
                    prop_assert_eq!(&cert.witnesses[0].metric, &cert.witnesses[1].metric);
                }
            }

            #[test]
            fn klamkin_and_moments(t in arb_triangle(), wt in arb_weights(), point in arb_point()) {
                prop_assume!(!wt.sum().is_zero());
                prop_assert!(moment_identities(&t, &wt, &point).unwrap().hold());
                let cert = klamkin(&t, &wt, &point).unwrap();
                prop_assert!(cert.is_exact());
            }

            #[test]
            fn triangle_only_certificates(t in arb_triangle(), other in arb_triangle()) {
                for cert in [garfunkel_bankoff(&t).unwrap(), weitzenbock(&t).unwrap(), neuberg_pedoe(&t, &other).unwrap()] {
                    prop_assert!(cert.is_exact(), "{}", cert.name);
                    prop_assert!(cert.analytic >= q(0, 1), "{}", cert.name);
                }
            }
        }
    }
}
