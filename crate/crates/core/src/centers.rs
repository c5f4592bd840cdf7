//! Triangle centers, the incircle contact triangle and the tangential
//! triangle, all in barycentric coordinates over the reference triangle.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bary::{BaryPoint, Triangle};
use crate::error::{GeometryError, Result};
use crate::scalar::{int, ratio, sq, Scalar};

/// The centers this crate knows about, with their ETC indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CenterId {
    Incenter,
    Centroid,
    Circumcenter,
    Orthocenter,
    Symmedian,
    Gergonne,
    Mittenpunkt,
}

impl CenterId {
    pub const ALL: [CenterId; 7] = [
        CenterId::Incenter,
        CenterId::Centroid,
        CenterId::Circumcenter,
        CenterId::Orthocenter,
        CenterId::Symmedian,
        CenterId::Gergonne,
        CenterId::Mittenpunkt,
    ];

    /// Index `n` of `X(n)` in Kimberling's encyclopedia.
    pub fn etc_index(self) -> u32 {
        match self {
            CenterId::Incenter => 1,
            CenterId::Centroid => 2,
            CenterId::Circumcenter => 3,
            CenterId::Orthocenter => 4,
            CenterId::Symmedian => 6,
            CenterId::Gergonne => 7,
            CenterId::Mittenpunkt => 9,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            CenterId::Incenter => "I",
            CenterId::Centroid => "G",
            CenterId::Circumcenter => "O",
            CenterId::Orthocenter => "H",
            CenterId::Symmedian => "X6",
            CenterId::Gergonne => "X7",
            CenterId::Mittenpunkt => "M",
        }
    }
}

impl fmt::Display for CenterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CenterId::Incenter => "incenter",
            CenterId::Centroid => "centroid",
            CenterId::Circumcenter => "circumcenter",
            CenterId::Orthocenter => "orthocenter",
            CenterId::Symmedian => "symmedian",
            CenterId::Gergonne => "gergonne",
            CenterId::Mittenpunkt => "mittenpunkt",
        };
        f.write_str(name)
    }
}

/// Homogeneous coordinates of a center.
pub fn center_mass<T: Scalar>(t: &Triangle<T>, id: CenterId) -> [T; 3] {
    let [a, b, c] = t.sides().map(Clone::clone);
    let [a2, b2, c2] = t.sides_sq();
    let w = t.conway();
    let s = t.semiperimeter();
    let (sa_, sb_, sc_) = (s.clone() - a.clone(), s.clone() - b.clone(), s - c.clone());
    match id {
        CenterId::Centroid => [T::one(), T::one(), T::one()],
        CenterId::Incenter => [a, b, c],
        CenterId::Circumcenter => [a2 * w.sa.clone(), b2 * w.sb.clone(), c2 * w.sc.clone()],
        CenterId::Orthocenter => [
            w.sb.clone() * w.sc.clone(),
            w.sc.clone() * w.sa.clone(),
            w.sa.clone() * w.sb.clone(),
        ],
        CenterId::Symmedian => [a2, b2, c2],
        CenterId::Gergonne => [
            sb_.clone() * sc_.clone(),
            sc_.clone() * sa_.clone(),
            sa_.clone() * sb_.clone(),
        ],
        CenterId::Mittenpunkt => [a * sa_, b * sb_, c * sc_],
    }
}

/// A center as a normalized point. Every homogeneous sum listed in
/// [`center_mass`] is positive for a nondegenerate triangle.
pub fn center<T: Scalar>(t: &Triangle<T>, id: CenterId) -> BaryPoint<T> {
    BaryPoint::new(center_mass(t, id)).expect("center masses have positive sum")
}

pub fn orthocenter<T: Scalar>(t: &Triangle<T>) -> BaryPoint<T> {
    center(t, CenterId::Orthocenter)
}

/// Points where the incircle touches `BC`, `CA` and `AB`.
#[derive(Debug, Clone, PartialEq)]
pub struct ContactTriangle<T> {
    pub d1: BaryPoint<T>,
    pub e1: BaryPoint<T>,
    pub f1: BaryPoint<T>,
}

impl<T: Scalar> ContactTriangle<T> {
    pub fn points(&self) -> [&BaryPoint<T>; 3] {
        [&self.d1, &self.e1, &self.f1]
    }
}

pub fn contact_triangle<T: Scalar>(t: &Triangle<T>) -> ContactTriangle<T> {
    let s = t.semiperimeter();
    let [a, b, c] = t.sides().map(Clone::clone);
    let (sa_, sb_, sc_) = (s.clone() - a, s.clone() - b, s - c);
    let z = T::zero;
    let pt = |m: [T; 3]| BaryPoint::new(m).expect("contact point masses sum to a side length");
    ContactTriangle {
        d1: pt([z(), sc_.clone(), sb_.clone()]),
        e1: pt([sc_, z(), sa_.clone()]),
        f1: pt([sb_, sa_, z()]),
    }
}

/// Triangle bounded by the circumcircle tangents at `A`, `B`, `C`. `d` is
/// opposite `A` (the pole of `BC`), cyclically.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentTriangle<T> {
    pub d: BaryPoint<T>,
    pub e: BaryPoint<T>,
    pub f: BaryPoint<T>,
    /// Signed side lengths; a side is negative when the Conway symbol of the
    /// opposite reference vertex is.
    pub ef: T,
    pub fd: T,
    pub de: T,
}

/// Builds the tangential triangle.
///
/// `D = (B+C)/2 + λ(H−A)` with `λ = a²/(2(S_A − H·K·Hᵀ))`. The denominator
/// equals `S_A²·a²/(4S²)`, so it vanishes exactly when `S_A = 0`; a right
/// angle at any vertex sends the opposite tangent-triangle vertex to
/// infinity.
pub fn tangent_triangle<T: Scalar>(t: &Triangle<T>) -> Result<TangentTriangle<T>> {
    let w = t.conway();
    for (vertex, symbol) in [('A', &w.sa), ('B', &w.sb), ('C', &w.sc)] {
        if symbol.is_zero() {
            return Err(GeometryError::TangentTriangleDegenerate { vertex });
        }
    }
    let h = orthocenter(t);
    let hkh = t.kernel(h.coords(), h.coords());
    let [a2, b2, c2] = t.sides_sq();
    let verts = [0, 1, 2].map(BaryPoint::<T>::vertex);
    let half = ratio::<T>(1, 2);
    let pole = |opp: usize, side_sq: T, symbol: &T| {
        let (j, k) = ((opp + 1) % 3, (opp + 2) % 3);
        let mid = BaryPoint::lerp(&verts[j], &verts[k], &half);
        let lambda = side_sq / (int::<T>(2) * (symbol.clone() - hkh.clone()));
        mid.translate(&h.displacement_from(&verts[opp]), &lambda)
    };
    let d = pole(0, a2, &w.sa);
    let e = pole(1, b2, &w.sb);
    let f = pole(2, c2, &w.sc);
    let [a, b, c] = t.sides().map(Clone::clone);
    let abc = t.side_product();
    let two = int::<T>(2);
    Ok(TangentTriangle {
        d,
        e,
        f,
        ef: abc.clone() * sq(&a) / (two.clone() * w.sb.clone() * w.sc.clone()),
        fd: abc.clone() * sq(&b) / (two.clone() * w.sa.clone() * w.sc.clone()),
        de: abc * sq(&c) / (two * w.sa.clone() * w.sb.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::{PlanarFrame, Xy};
    use crate::scalar::{exact, Exact};
    use crate::ExactTriangle;

    fn tri(a: i64, b: i64, c: i64) -> ExactTriangle {
        Triangle::new(exact(a, 1), exact(b, 1), exact(c, 1)).unwrap()
    }

    fn q(n: i64, d: i64) -> Exact {
        exact(n, d)
    }

    #[test]
    fn equilateral_centers_coincide() {
        let t = tri(1, 1, 1);
        let third = [q(1, 3), q(1, 3), q(1, 3)];
        for id in CenterId::ALL {
            assert_eq!(center(&t, id).coords(), &third, "{id}");
        }
    }

    #[test]
    fn euler_distance_on_345() {
        let t = tri(4, 3, 5);
        let o = center(&t, CenterId::Circumcenter);
        let i = center(&t, CenterId::Incenter);
        // R = 5/2, r = 1: R² − 2Rr
        assert_eq!(t.dist2(&o, &i), q(5, 4));
    }

    #[test]
    fn mittenpunkt_on_345() {
        let t = tri(4, 3, 5);
        let m = center(&t, CenterId::Mittenpunkt);
        assert_eq!(m.coords(), &[q(8, 22), q(9, 22), q(5, 22)]);
        let xy = PlanarFrame::from_triangle(&t).embed(&m);
        // frame puts B at the origin; C=(0,0), B=(4,0), A=(0,3) reflected: (4 − 18/11, 12/11)
        assert!(xy.dist2(Xy { x: 4.0 - 18.0 / 11.0, y: 12.0 / 11.0 }) < 1e-24);
    }

    #[test]
    fn contact_points() {
        let t = tri(4, 3, 5);
        let ct = contact_triangle(&t);
        assert_eq!(ct.d1.coords(), &[q(0, 1), q(1, 4), q(3, 4)]);
        let eq = contact_triangle(&tri(2, 2, 2));
        assert_eq!(eq.d1.coords(), &[q(0, 1), q(1, 2), q(1, 2)]);
        assert_eq!(eq.e1.coords(), &[q(1, 2), q(0, 1), q(1, 2)]);
        assert_eq!(eq.f1.coords(), &[q(1, 2), q(1, 2), q(0, 1)]);
    }

    #[test]
    fn tangent_triangle_rejects_right_angles() {
        assert_eq!(
            tangent_triangle(&tri(4, 3, 5)).unwrap_err(),
            GeometryError::TangentTriangleDegenerate { vertex: 'C' }
        );
        assert_eq!(
            tangent_triangle(&tri(5, 3, 4)).unwrap_err(),
            GeometryError::TangentTriangleDegenerate { vertex: 'A' }
        );
    }

    #[test]
    fn tangent_triangle_isosceles_is_tangent() {
        let t = tri(6, 5, 5);
        let tt = tangent_triangle(&t).unwrap();
        let o = center(&t, CenterId::Circumcenter);
        let [a, b, c] = [0, 1, 2].map(BaryPoint::<Exact>::vertex);
        assert_eq!(t.metric_dot(&b, &o, &b, &tt.d), q(0, 1));
        assert_eq!(t.metric_dot(&c, &o, &c, &tt.d), q(0, 1));
        assert_eq!(t.metric_dot(&c, &o, &c, &tt.e), q(0, 1));
        assert_eq!(t.metric_dot(&a, &o, &a, &tt.e), q(0, 1));
        assert_eq!(t.metric_dot(&a, &o, &a, &tt.f), q(0, 1));
        assert_eq!(t.metric_dot(&b, &o, &b, &tt.f), q(0, 1));
    }

    #[test]
    fn tangent_triangle_equilateral() {
        let t = tri(1, 1, 1);
        let tt = tangent_triangle(&t).unwrap();
        // antimedial triangle: D = B + C − A
        assert_eq!(tt.d.coords(), &[q(-1, 1), q(1, 1), q(1, 1)]);
        assert_eq!(tt.ef, q(2, 1));
        assert_eq!(t.dist2(&tt.e, &tt.f), q(4, 1));
    }

    #[test]
    fn tangent_triangle_obtuse_signed_length() {
        let t = tri(2, 3, 4);
        let tt = tangent_triangle(&t).unwrap();
        // a³bc / (2 S_B S_C) = 8·12 / (2 · 11/2 · (−3/2))
        assert_eq!(tt.ef, q(-64, 11));
        assert!(tt.fd < q(0, 1));
        assert!(tt.de > q(0, 1));
        assert_eq!(t.dist2(&tt.e, &tt.f), sq(&tt.ef));
        assert_eq!(t.dist2(&tt.f, &tt.d), sq(&tt.fd));
        assert_eq!(t.dist2(&tt.d, &tt.e), sq(&tt.de));
    }

    mod props {
        use super::*;
        use crate::testutil::arb_triangle;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn defining_properties(t in arb_triangle()) {
                let o = center(&t, CenterId::Circumcenter);
                let h = center(&t, CenterId::Orthocenter);
                let i = center(&t, CenterId::Incenter);
                let [a, b, c] = [0, 1, 2].map(BaryPoint::<Exact>::vertex);
                let abc = t.side_product();
                let r2 = sq(&abc) / (q(16, 1) * t.area_sq());
                prop_assert_eq!(t.dist2(&o, &a), r2.clone());
                prop_assert_eq!(t.dist2(&o, &b), r2.clone());
                prop_assert_eq!(t.dist2(&o, &c), r2);
                prop_assert_eq!(t.metric_dot(&a, &h, &b, &c), q(0, 1));
                prop_assert_eq!(t.metric_dot(&b, &h, &c, &a), q(0, 1));
                let inr2 = t.area_sq() / sq(&t.semiperimeter());
                for p in contact_triangle(&t).points() {
                    prop_assert_eq!(t.dist2(&i, p), inr2.clone());
                }
            }

            #[test]
            fn tangency(t in arb_triangle()) {
                prop_assume!(tangent_triangle(&t).is_ok());
                let tt = tangent_triangle(&t).unwrap();
                let o = center(&t, CenterId::Circumcenter);
                let v = [0, 1, 2].map(BaryPoint::<Exact>::vertex);
                for (p, (j, k)) in [(&tt.d, (1, 2)), (&tt.e, (2, 0)), (&tt.f, (0, 1))] {
                    prop_assert_eq!(t.metric_dot(&v[j], &o, &v[j], p), q(0, 1));
                    prop_assert_eq!(t.metric_dot(&v[k], &o, &v[k], p), q(0, 1));
                }
                prop_assert_eq!(t.dist2(&tt.e, &tt.f), sq(&tt.ef));
            }
        }
    }
}
