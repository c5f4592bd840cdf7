//! Squared distances from the incenter `I` and the Mittenpunkt `M` to points
//! of the Euler line, and the inequalities in `s`, `R`, `r` they encode.
//!
//! The Euler line is parameterized as `X(λ) = (1−λ)·H + λ·O`: `X(0) = H`,
//! `X(2/3) = G`, `X(1) = O`, `X(2)` is the de Longchamps point.
//!
//! `R` and `r` are irrational in general, so every polynomial here is written
//! in the rational basis `{s², S², abc, R², Rr, r²}`:
//! `R² = (abc)²/(16S²)`, `Rr = abc/(4s)`, `r² = S²/s²`, `2r/R = 8S²/(abc·s)`.
//!
//! The linear coefficient of `ELD_I` is `−(12R² + 14Rr + 5r² − 3s²)`; the
//! polynomial equals `2(O·K·Iᵀ − H·K·Hᵀ)`, not `O·K·Iᵀ − H·K·Hᵀ` itself.


use crate::bary::{area_det, BaryPoint, Triangle};
use crate::catalog::{Certificate, CertificateBuilder, InequalityId};
use crate::centers::{center, CenterId};
use crate::error::{GeometryError, Result};
use crate::scalar::{int, ratio, sq, Approx, Scalar, Tolerance};

/// Rational invariants of a triangle in the `s, R, r` basis.
#[derive(Debug, Clone, PartialEq)]
pub struct SrrInvariants<T> {
    pub s: T,
    pub s2: T,
    pub area_sq: T,
    pub abc: T,
    /// `R²`
    pub big_r2: T,
    /// `r²`
    pub r2: T,
    /// `R·r`
    pub rr: T,
    /// `r/R`
    pub r_over_big_r: T,
}

impl<T: Scalar> SrrInvariants<T> {
    pub fn of(t: &Triangle<T>) -> Self {
        let s = t.semiperimeter();
        let s2 = sq(&s);
        let area_sq = t.area_sq();
        let abc = t.side_product();
        SrrInvariants {
            big_r2: sq(&abc) / (int::<T>(16) * area_sq.clone()),
            r2: area_sq.clone() / s2.clone(),
            rr: abc.clone() / (int::<T>(4) * s.clone()),
            r_over_big_r: int::<T>(4) * area_sq.clone() / (abc.clone() * s.clone()),
            s,
            s2,
            area_sq,
            abc,
        }
    }

    /// `α·R² + β·Rr + γ·r² + δ·s²` with integer coefficients.
    pub fn poly(&self, big_r2: i64, rr: i64, r2: i64, s2: i64) -> T {
        int::<T>(big_r2) * self.big_r2.clone()
            + int::<T>(rr) * self.rr.clone()
            + int::<T>(r2) * self.r2.clone()
            + int::<T>(s2) * self.s2.clone()
    }

    pub fn two_r_over_big_r(&self) -> T {
        int::<T>(2) * self.r_over_big_r.clone()
    }

    /// `(2R + r)/(4R + r)`
    pub fn kappa(&self) -> T {
        let rho = self.r_over_big_r.clone();
        (int::<T>(2) + rho.clone()) / (int::<T>(4) + rho)
    }

    /// `R(2R − r) = 2R² − Rr`, positive by Euler's inequality.
    pub fn euler_gap(&self) -> T {
        self.poly(2, -1, 0, 0)
    }

    /// Approximations of the bare lengths `s`, `R`, `r`.
    pub fn lengths(&self, tol: Tolerance) -> ApproxLengths {
        ApproxLengths {
            s: Approx::new(self.s.approx(), tol),
            big_r: Approx::new(self.big_r2.approx().sqrt(), tol),
            r: Approx::new(self.r2.approx().sqrt(), tol),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxLengths {
    pub s: Approx,
    pub big_r: Approx,
    pub r: Approx,
}

/// `A·λ² + B·λ + C`.
#[derive(Debug, Clone, PartialEq)]
pub struct EldQuadratic<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Scalar> EldQuadratic<T> {
    pub fn eval(&self, lambda: &T) -> T {
        (self.a.clone() * lambda.clone() + self.b.clone()) * lambda.clone() + self.c.clone()
    }

    /// `λ* = −B/(2A)`; `None` when the leading coefficient vanishes.
    pub fn vertex(&self) -> Option<T> {
        if self.a.is_zero() {
            None
        } else {
            Some(-self.b.clone() / (int::<T>(2) * self.a.clone()))
        }
    }

    /// `C − B²/(4A)`, or `C` when `A = 0`.
    pub fn min_value(&self) -> T {
        if self.a.is_zero() {
            self.c.clone()
        } else {
            self.c.clone() - sq(&self.b) / (int::<T>(4) * self.a.clone())
        }
    }
}

/// `X(λ) = (1−λ)·H + λ·O`.
pub fn euler_point<T: Scalar>(t: &Triangle<T>, lambda: &T) -> BaryPoint<T> {
    BaryPoint::lerp(&center(t, CenterId::Orthocenter), &center(t, CenterId::Circumcenter), lambda)
}

/// `|OH|² = 9R² + 8Rr + 2r² − 2s²`.
pub fn oh_sq<T: Scalar>(inv: &SrrInvariants<T>) -> T {
    inv.poly(9, 8, 2, -2)
}

/// `ELD_I` from the `s, R, r` coefficients.
pub fn eld_i_quadratic<T: Scalar>(t: &Triangle<T>) -> EldQuadratic<T> {
    let inv = SrrInvariants::of(t);
    EldQuadratic { a: oh_sq(&inv), b: -inv.poly(12, 14, 5, -3), c: inv.poly(4, 4, 3, -1) }
}

/// `ELD_I(λ) = |I X(λ)|²`.
pub fn eld_i<T: Scalar>(t: &Triangle<T>, lambda: &T) -> T {
    eld_i_quadratic(t).eval(lambda)
}

/// `|I X(λ)|²` evaluated directly in barycentrics.
pub fn eld_i_direct<T: Scalar>(t: &Triangle<T>, lambda: &T) -> T {
    t.dist2(&center(t, CenterId::Incenter), &euler_point(t, lambda))
}

/// `s⁴ − 2(2R² + 10Rr − r²)s² + r(4R + r)³`, never positive.
pub fn fundamental_bound<T: Scalar>(t: &Triangle<T>) -> T {
    let inv = SrrInvariants::of(t);
    // r(4R+r)³ = 64R²·Rr + 48R²·r² + 12Rr·r² + r⁴
    let cubic = int::<T>(64) * inv.big_r2.clone() * inv.rr.clone()
        + int::<T>(48) * inv.big_r2.clone() * inv.r2.clone()
        + int::<T>(12) * inv.rr.clone() * inv.r2.clone()
        + sq(&inv.r2);
    sq(&inv.s2) - int::<T>(2) * inv.poly(2, 10, -1, 0) * inv.s2.clone() + cubic
}

/// `−16S²·[H;I;O]²`, the same quantity from the area determinant.
pub fn fundamental_via_area<T: Scalar>(t: &Triangle<T>) -> T {
    let det = area_det(
        &center(t, CenterId::Orthocenter),
        &center(t, CenterId::Incenter),
        &center(t, CenterId::Circumcenter),
    );
    -(int::<T>(16) * t.area_sq() * sq(&det))
}

/// Squared distance from the incenter to the Euler line; zero for isosceles
/// triangles and, by convention, for the equilateral one.
pub fn d_i<T: Scalar>(t: &Triangle<T>) -> T {
    let oh2 = oh_sq(&SrrInvariants::of(t));
    if oh2.is_zero() {
        return T::zero();
    }
    -fundamental_bound(t) / (int::<T>(4) * oh2)
}

/// Squared distance from `P` to the Euler line, `4S²[H;P;O]²/|OH|²`.
pub fn euler_line_distance_sq<T: Scalar>(t: &Triangle<T>, p: &BaryPoint<T>) -> Result<T> {
    let h = center(t, CenterId::Orthocenter);
    let o = center(t, CenterId::Circumcenter);
    let oh2 = t.dist2(&o, &h);
    if oh2.is_zero() {
        return Err(GeometryError::Equilateral);
    }
    Ok(int::<T>(4) * t.area_sq() * sq(&area_det(&h, p, &o)) / oh2)
}

/// Blundon's bounds `s₁² ≤ s² ≤ s₂²`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlundonInterval<T> {
    pub lower: Approx,
    pub upper: Approx,
    pub s2: Approx,
    /// `s₁² ≤ s² ≤ s₂²` within tolerance.
    pub contains: bool,
    /// `R = 2r`, decided exactly.
    pub collapsed: bool,
    /// Square-root-free certificate; `contains` is equivalent to `≤ 0`.
    pub fundamental: T,
}

pub fn blundon_interval<T: Scalar>(t: &Triangle<T>, tol: Tolerance) -> BlundonInterval<T> {
    let inv = SrrInvariants::of(t);
    let euler = inv.poly(1, -2, 0, 0);
    let lengths = inv.lengths(tol);
    let mid = inv.poly(2, 10, -1, 0).approx();
    // (R − 2r)·√(R(R − 2r)) with R − 2r = (R² − 2Rr)/R
    let euler_f = euler.approx().max(0.0);
    let half_width = 2.0 * (euler_f / lengths.big_r.value) * euler_f.sqrt();
    let lower = Approx::new(mid - half_width, tol);
    let upper = Approx::new(mid + half_width, tol);
    let s2 = Approx::new(inv.s2.approx(), tol);
    BlundonInterval {
        contains: lower.compare(&s2).is_le() && s2.compare(&upper).is_le(),
        collapsed: euler.is_zero(),
        fundamental: fundamental_bound(t),
        lower,
        upper,
        s2,
    }
}

/// Two routes to one quantity.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck<T> {
    pub name: &'static str,
    pub lhs: T,
    pub rhs: T,
}

impl<T: Scalar> IdentityCheck<T> {
    pub fn new(name: &'static str, lhs: T, rhs: T) -> Self {
        IdentityCheck { name, lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn residual(&self) -> T {
        self.lhs.clone() - self.rhs.clone()
    }
}

/// The three corollaries of the ELD inequality. Each `lhs` comes from
/// barycentric geometry, each `rhs` from `ELD_I` values.
#[derive(Debug, Clone, PartialEq)]
pub struct EldCorollaries<T> {
    /// `2(I−H)·K·(I−O)ᵀ = −ELD_I(0) − (2r/R)·ELD_I(1)`, negative unless
    /// equilateral: the angle `HIO` is obtuse.
    pub obtuse_angle: IdentityCheck<T>,
    /// `9R² − (a²+b²+c²) = 2·ELD_I(0) + (1 + 2r/R)·ELD_I(1)`.
    pub sum_of_squares: IdentityCheck<T>,
    /// `(2Rrs)²·(1/(4r²) − 1/a² − 1/b² − 1/c²) = |OH|²·d_I + Rr·ELD_I(2)`.
    pub reciprocal_squares: IdentityCheck<T>,
}

impl<T: Scalar> EldCorollaries<T> {
    pub fn identities(&self) -> [&IdentityCheck<T>; 3] {
        [&self.obtuse_angle, &self.sum_of_squares, &self.reciprocal_squares]
    }

    /// Signs: negative angle form (or zero when equilateral), nonnegative
    /// others.
    pub fn signs_hold(&self, equilateral: bool) -> bool {
        let angle = if equilateral { self.obtuse_angle.lhs.is_zero() } else { self.obtuse_angle.lhs.is_negative() };
        angle && !self.sum_of_squares.lhs.is_negative() && !self.reciprocal_squares.lhs.is_negative()
    }
}

pub fn eld_corollaries<T: Scalar>(t: &Triangle<T>) -> EldCorollaries<T> {
    let inv = SrrInvariants::of(t);
    let q = eld_i_quadratic(t);
    let (e0, e1, e2) = (q.eval(&T::zero()), q.eval(&T::one()), q.eval(&int::<T>(2)));
    let i = center(t, CenterId::Incenter);
    let h = center(t, CenterId::Orthocenter);
    let o = center(t, CenterId::Circumcenter);
    let k = inv.two_r_over_big_r();

    let angle_lhs = int::<T>(2) * t.metric_dot(&h, &i, &o, &i);
    let angle_rhs = -e0.clone() - k.clone() * e1.clone();

    let sum_sq = t.sides_sq().iter().fold(T::zero(), |acc, v| acc + v.clone());
    let squares_lhs = int::<T>(9) * inv.big_r2.clone() - sum_sq;
    let squares_rhs = int::<T>(2) * e0 + (T::one() + k) * e1;

    // 2Rrs = abc/2
    let recip = t.sides_sq().iter().fold(T::zero(), |acc, v| acc + T::one() / v.clone());
    let recip_lhs = sq(&inv.abc) / int::<T>(4) * (inv.s2.clone() / (int::<T>(4) * inv.area_sq.clone()) - recip);
    let recip_rhs = oh_sq(&inv) * d_i(t) + inv.rr.clone() * e2;

    EldCorollaries {
        obtuse_angle: IdentityCheck::new("obtuse_hio", angle_lhs, angle_rhs),
        sum_of_squares: IdentityCheck::new("nine_r_squared", squares_lhs, squares_rhs),
        reciprocal_squares: IdentityCheck::new("reciprocal_squares", recip_lhs, recip_rhs),
    }
}

/// Evaluation point and multiplier of each classical inequality on the
/// Euler line: `analytic = factor · ELD_I(λ)`.
fn classical_table<T: Scalar>(inv: &SrrInvariants<T>) -> [(InequalityId, T, T, T); 4] {
    [
        (InequalityId::Euler, inv.poly(1, -2, 0, 0), T::one(), T::one()),
        (InequalityId::GerretsenUpper, inv.poly(4, 4, 3, -1), T::zero(), T::one()),
        (InequalityId::GerretsenLower, inv.poly(0, -16, 5, 1), ratio::<T>(2, 3), int::<T>(9)),
        (InequalityId::FinslerHadwiger, inv.poly(16, 8, 1, -3), int::<T>(2), T::one()),
    ]
}

/// Euler `R²−2Rr = ELD_I(1)`, Gerretsen `4R²+4Rr+3r²−s² = ELD_I(0)` and
/// `s²−16Rr+5r² = 9·ELD_I(2/3)`, Finsler–Hadwiger `(4R+r)²−3s² = ELD_I(2)`.
///
/// Euler's `R − 2r = ELD_I(1)/R` is certified after multiplying by `R`, and
/// Finsler–Hadwiger's `4R + r − √3·s = ELD_I(2)/(4R + r + √3·s)` after
/// clearing the denominator. With
/// `a²+b²+c² − (a−b)² − (b−c)² − (c−a)² − 4√3·S = 4r(4R + r − √3·s)` the
/// latter is the side-length form of the inequality.
pub fn classical_via_eld<T: Scalar>(t: &Triangle<T>) -> [Certificate<T>; 4] {
    let inv = SrrInvariants::of(t);
    let quad = eld_i_quadratic(t);
    let i = center(t, CenterId::Incenter);
    classical_table(&inv).map(|(name, analytic, lambda, factor)| {
        let x = euler_point(t, &lambda);
        let via_quadratic = quad.eval(&lambda);
        CertificateBuilder::new(t, name, analytic)
            .distance("incenter_euler_point", factor.clone(), i.clone(), x.clone())
            .value("eld_quadratic", factor, i.clone(), x, via_quadratic)
            .finish()
            .expect("two witnesses")
    })
}

/// `value ≥ bound`, decided exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct SharpenedBound<T> {
    pub name: InequalityId,
    pub value: T,
    pub bound: T,
}

impl<T: Scalar> SharpenedBound<T> {
    pub fn slack(&self) -> T {
        self.value.clone() - self.bound.clone()
    }

    pub fn holds(&self) -> bool {
        self.value >= self.bound
    }
}

/// Each classical inequality strengthened by `ELD_I(λ) ≥ d_I`.
pub fn sharpened<T: Scalar>(t: &Triangle<T>) -> [SharpenedBound<T>; 4] {
    let inv = SrrInvariants::of(t);
    let d = d_i(t);
    classical_table(&inv).map(|(name, value, _, factor)| SharpenedBound { name, value, bound: factor * d.clone() })
}

/// Location of the axis of symmetry of `ELD_I` and the identities proving it
/// lies in `[0, 2/3]`.
#[derive(Debug, Clone, PartialEq)]
pub struct AxisReport<T> {
    pub vertex: T,
    /// `(O·K·Iᵀ − H·K·Hᵀ)/(O·K·Oᵀ − H·K·Hᵀ)` from barycentrics.
    pub vertex_direct: T,
    /// `2(O·K·Iᵀ − H·K·Hᵀ) = 3·ELD_I(0) + (2r/R)·ELD_I(1)`.
    pub lower_decomposition: IdentityCheck<T>,
    /// `2(O·K·Oᵀ − H·K·Hᵀ) − 3(O·K·Iᵀ − H·K·Hᵀ) = (9/2)·ELD_I(2/3) + (3r/R)·ELD_I(1)`.
    pub upper_decomposition: IdentityCheck<T>,
    /// `ELD_I(2), ELD_I(1), ELD_I(2/3)`.
    pub chain: [T; 3],
}

impl<T: Scalar> AxisReport<T> {
    pub fn in_range(&self) -> bool {
        !self.vertex.is_negative() && self.vertex <= ratio::<T>(2, 3)
    }

    pub fn chain_monotone(&self) -> bool {
        self.chain[0] >= self.chain[1] && self.chain[1] >= self.chain[2]
    }
}

pub fn axis_of_symmetry<T: Scalar>(t: &Triangle<T>) -> Result<AxisReport<T>> {
    let quad = eld_i_quadratic(t);
    let vertex = quad.vertex().ok_or(GeometryError::Equilateral)?;
    let inv = SrrInvariants::of(t);
    let i = center(t, CenterId::Incenter);
    let o = center(t, CenterId::Circumcenter);
    let hkh = t.h_kernel(&center(t, CenterId::Orthocenter));
    let oki = t.kernel(o.coords(), i.coords()) - hkh.clone();
    let oko = t.kernel(o.coords(), o.coords()) - hkh;
    let two = int::<T>(2);
    let (e0, e1) = (quad.eval(&T::zero()), quad.eval(&T::one()));
    let e23 = quad.eval(&ratio::<T>(2, 3));
    let lower = IdentityCheck::new(
        "axis_lower",
        two.clone() * oki.clone(),
        int::<T>(3) * e0 + inv.two_r_over_big_r() * e1.clone(),
    );
    let upper = IdentityCheck::new(
        "axis_upper",
        two.clone() * oko.clone() - int::<T>(3) * oki.clone(),
        ratio::<T>(9, 2) * e23.clone() + int::<T>(3) * inv.r_over_big_r.clone() * e1.clone(),
    );
    Ok(AxisReport {
        vertex,
        vertex_direct: oki / oko,
        lower_decomposition: lower,
        upper_decomposition: upper,
        chain: [quad.eval(&two), e1, e23],
    })
}

/// `ELD_M(λ) = |M X(λ)|²` from the `s, R, r` coefficients:
/// `|HM|² = κ²(16R² + 8Rr + r² − 3s²)`,
/// `2(O−H)·K·(H−M)ᵀ = κ(5s² − 24R² − 18Rr − 3r²)` with `κ = (2R+r)/(4R+r)`.
pub fn eld_m_quadratic<T: Scalar>(t: &Triangle<T>) -> EldQuadratic<T> {
    let inv = SrrInvariants::of(t);
    let kappa = inv.kappa();
    EldQuadratic {
        a: oh_sq(&inv),
        b: kappa.clone() * inv.poly(-24, -18, -3, 5),
        c: sq(&kappa) * inv.poly(16, 8, 1, -3),
    }
}

pub fn eld_m<T: Scalar>(t: &Triangle<T>, lambda: &T) -> T {
    eld_m_quadratic(t).eval(lambda)
}

pub fn eld_m_direct<T: Scalar>(t: &Triangle<T>, lambda: &T) -> T {
    t.dist2(&center(t, CenterId::Mittenpunkt), &euler_point(t, lambda))
}

/// Coefficient identities of `ELD_M` and its minimum.
pub fn eld_m_identities<T: Scalar>(t: &Triangle<T>) -> Vec<IdentityCheck<T>> {
    let quad = eld_m_quadratic(t);
    let inv = SrrInvariants::of(t);
    let m = center(t, CenterId::Mittenpunkt);
    let h = center(t, CenterId::Orthocenter);
    let o = center(t, CenterId::Circumcenter);
    let mut checks = vec![
        IdentityCheck::new("eld_m_constant", t.dist2(&h, &m), quad.c.clone()),
        IdentityCheck::new("eld_m_linear", int::<T>(2) * t.metric_dot(&h, &o, &m, &h), quad.b.clone()),
        IdentityCheck::new("eld_m_leading", t.dist2(&o, &h), quad.a.clone()),
        IdentityCheck::new("eld_m_minimum", quad.min_value(), sq(&inv.kappa()) * d_i(t)),
    ];
    if let Ok(direct_min) = euler_line_distance_sq(t, &m) {
        checks.push(IdentityCheck::new("eld_m_minimum_area", direct_min, quad.min_value()));
    }
    checks
}

/// Coefficient identities of `ELD_I`, `d_I` and the fundamental bound.
pub fn eld_i_identities<T: Scalar>(t: &Triangle<T>) -> Vec<IdentityCheck<T>> {
    let quad = eld_i_quadratic(t);
    let i = center(t, CenterId::Incenter);
    let h = center(t, CenterId::Orthocenter);
    let o = center(t, CenterId::Circumcenter);
    let hkh = t.h_kernel(&h);
    let oki = t.kernel(o.coords(), i.coords()) - hkh;
    let fundamental = fundamental_bound(t);
    let mut checks = vec![
        IdentityCheck::new("eld_i_leading", t.dist2(&o, &h), quad.a.clone()),
        IdentityCheck::new("eld_i_linear", int::<T>(-2) * oki, quad.b.clone()),
        IdentityCheck::new("eld_i_constant", t.dist2(&i, &h), quad.c.clone()),
        IdentityCheck::new("fundamental_area", fundamental_via_area(t), fundamental.clone()),
        IdentityCheck::new("fundamental_vertex", -(int::<T>(4) * quad.a.clone() * d_i(t)), fundamental),
        IdentityCheck::new("d_i_minimum", quad.min_value(), d_i(t)),
    ];
    if let Ok(direct) = euler_line_distance_sq(t, &i) {
        checks.push(IdentityCheck::new("d_i_area", direct, d_i(t)));
    }
    checks
}

/// Kooi★: `R(4R + r)²/(2(2R − r)) − s² ≥ 0`, witnessed by
/// `((4R+r)²/(2R(2R−r)))·|OM|²` and `((4R+r)²/(8R(2R−r)))·|HX₇|²`.
pub fn kooi_star<T: Scalar>(t: &Triangle<T>) -> Certificate<T> {
    let inv = SrrInvariants::of(t);
    let four_r_plus_r_sq = inv.poly(16, 8, 1, 0);
    let gap = inv.euler_gap();
    let analytic = inv.big_r2.clone() * four_r_plus_r_sq.clone() / (int::<T>(2) * gap.clone()) - inv.s2.clone();
    CertificateBuilder::new(t, InequalityId::KooiStar, analytic)
        .distance(
            "circumcenter_mittenpunkt",
            four_r_plus_r_sq.clone() / (int::<T>(2) * gap.clone()),
            center(t, CenterId::Circumcenter),
            center(t, CenterId::Mittenpunkt),
        )
        .distance(
            "orthocenter_gergonne",
            four_r_plus_r_sq / (int::<T>(8) * gap),
            center(t, CenterId::Orthocenter),
            center(t, CenterId::Gergonne),
        )
        .finish()
        .expect("two witnesses")
}

/// Kooi★ ≥ `(2R + r)²·d_I/(2R(2R − r))`.
pub fn kooi_star_sharpened<T: Scalar>(t: &Triangle<T>) -> SharpenedBound<T> {
    let inv = SrrInvariants::of(t);
    let bound = inv.poly(4, 4, 1, 0) * d_i(t) / (int::<T>(2) * inv.euler_gap());
    SharpenedBound { name: InequalityId::KooiStar, value: kooi_star(t).analytic, bound }
}

/// Coefficients of `P = α·I + β·O + γ·H`.
#[derive(Debug, Clone, PartialEq)]
pub struct EulerFrameDecomposition<T> {
    pub alpha: T,
    pub beta: T,
    pub gamma: T,
}

impl<T: Scalar> EulerFrameDecomposition<T> {
    pub fn recompose(&self, t: &Triangle<T>) -> Result<BaryPoint<T>> {
        let i = center(t, CenterId::Incenter);
        let o = center(t, CenterId::Circumcenter);
        let h = center(t, CenterId::Orthocenter);
        BaryPoint::combine(&[(self.alpha.clone(), &i), (self.beta.clone(), &o), (self.gamma.clone(), &h)])
    }

    /// `α²·d_I`, the squared distance of `P` to the Euler line.
    pub fn euler_line_distance_sq(&self, t: &Triangle<T>) -> T {
        sq(&self.alpha) * d_i(t)
    }
}

pub fn euler_frame<T: Scalar>(t: &Triangle<T>, p: &BaryPoint<T>) -> Result<EulerFrameDecomposition<T>> {
    let i = center(t, CenterId::Incenter);
    let o = center(t, CenterId::Circumcenter);
    let h = center(t, CenterId::Orthocenter);
    let det = area_det(&i, &o, &h);
    if det.is_zero() {
        return Err(GeometryError::FrameDegenerate);
    }
    Ok(EulerFrameDecomposition {
        alpha: area_det(p, &o, &h) / det.clone(),
        beta: area_det(&i, p, &h) / det.clone(),
        gamma: area_det(&i, &o, p) / det,
    })
}
