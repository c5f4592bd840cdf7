//! Barycentric machinery over a fixed reference triangle.
//!
//! The metric matrix is `K = diag(S_A, S_B, S_C)` built from the Conway
//! symbols. It never exists as a matrix object; [`Conway`] carries the three
//! diagonal entries and every product goes through [`Triangle::kernel`].
//!
//! Oriented areas follow `area(XYZ) = S · [X;Y;Z]`, where `S` is the area of
//! the reference triangle and `[X;Y;Z]` the determinant of normalized rows.
//! With this constant the vertex determinant `[A;B;C]` is 1.

use num_traits::Zero;

use crate::error::{GeometryError, Result};
use crate::scalar::{int, ratio, sq, Scalar};

/// Conway symbols of a triangle and its squared area.
#[derive(Debug, Clone, PartialEq)]
pub struct Conway<T> {
    pub sa: T,
    pub sb: T,
    pub sc: T,
    /// Squared area `S²`.
    pub area_sq: T,
}

impl<T: Scalar> Conway<T> {
    pub(crate) fn diag(&self) -> [&T; 3] {
        [&self.sa, &self.sb, &self.sc]
    }

    /// `S_A·S_B + S_B·S_C + S_C·S_A`, which equals `4S²`.
    pub fn pair_sum(&self) -> T {
        self.sa.clone() * self.sb.clone()
            + self.sb.clone() * self.sc.clone()
            + self.sc.clone() * self.sa.clone()
    }
}

/// Nondegenerate reference triangle given by its side lengths
/// `a = |BC|`, `b = |CA|`, `c = |AB|`.
#[derive(Debug, Clone, PartialEq)]
pub struct Triangle<T> {
    a: T,
    b: T,
    c: T,
    conway: Conway<T>,
}

impl<T: Scalar> Triangle<T> {
    pub fn new(a: T, b: T, c: T) -> Result<Self> {
        for (name, side) in [('a', &a), ('b', &b), ('c', &c)] {
            if !side.is_positive() {
                return Err(GeometryError::NonPositiveSide { name, value: side.to_string() });
            }
        }
        for (p, q, r) in [(&a, &b, &c), (&b, &c, &a), (&c, &a, &b)] {
            if p.clone() + q.clone() <= r.clone() {
                return Err(GeometryError::TriangleInequality {
                    lhs: format!("{p} + {q}"),
                    rhs: r.to_string(),
                });
            }
        }
        Self::from_sides_unchecked(a, b, c)
    }

    /// Skips the side checks but still rejects zero area.
    fn from_sides_unchecked(a: T, b: T, c: T) -> Result<Self> {
        let (a2, b2, c2) = (sq(&a), sq(&b), sq(&c));
        let half = ratio::<T>(1, 2);
        let sa = half.clone() * (b2.clone() + c2.clone() - a2.clone());
        let sb = half.clone() * (c2.clone() + a2.clone() - b2.clone());
        let sc = half * (a2.clone() + b2.clone() - c2.clone());
        let two = int::<T>(2);
        let heron = two.clone() * a2.clone() * b2.clone()
            + two.clone() * b2.clone() * c2.clone()
            + two * c2.clone() * a2.clone()
            - sq(&a2)
            - sq(&b2)
            - sq(&c2);
        let area_sq = heron / int::<T>(16);
        if !area_sq.is_positive() {
            return Err(GeometryError::ZeroArea);
        }
        Ok(Triangle { a, b, c, conway: Conway { sa, sb, sc, area_sq } })
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn c(&self) -> &T {
        &self.c
    }

    pub fn sides(&self) -> [&T; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn sides_sq(&self) -> [T; 3] {
        [sq(&self.a), sq(&self.b), sq(&self.c)]
    }

    pub fn conway(&self) -> &Conway<T> {
        &self.conway
    }

    pub fn semiperimeter(&self) -> T {
        (self.a.clone() + self.b.clone() + self.c.clone()) / int::<T>(2)
    }

    pub fn area_sq(&self) -> T {
        self.conway.area_sq.clone()
    }

    /// `a·b·c`
    pub fn side_product(&self) -> T {
        self.a.clone() * self.b.clone() * self.c.clone()
    }

    pub fn is_equilateral(&self) -> bool {
        self.a == self.b && self.b == self.c
    }

    pub fn is_isosceles(&self) -> bool {
        self.a == self.b || self.b == self.c || self.c == self.a
    }

    /// Raw bilinear form `u·K·vᵀ` on coordinate triples.
    pub fn kernel(&self, u: &[T; 3], v: &[T; 3]) -> T {
        self.conway
            .diag()
            .into_iter()
            .zip(u.iter().zip(v))
            .fold(T::zero(), |acc, (k, (x, y))| acc + k.clone() * x.clone() * y.clone())
    }

    /// Scalar product of the vectors `PQ` and `MN`: `(Q−P)·K·(N−M)ᵀ`.
    pub fn metric_dot(
        &self,
        p: &BaryPoint<T>,
        q: &BaryPoint<T>,
        m: &BaryPoint<T>,
        n: &BaryPoint<T>,
    ) -> T {
        self.kernel(&q.displacement_from(p), &n.displacement_from(m))
    }

    /// `|PQ|² = P·K·Pᵀ − 2·P·K·Qᵀ + Q·K·Qᵀ`.
    pub fn dist2(&self, p: &BaryPoint<T>, q: &BaryPoint<T>) -> T {
        let d = q.displacement_from(p);
        self.kernel(&d, &d)
    }

    /// `H·K·Xᵀ` for the orthocenter `H`; constant in `X`.
    pub fn h_kernel(&self, x: &BaryPoint<T>) -> T {
        let h = crate::centers::orthocenter(self);
        self.kernel(h.coords(), x.coords())
    }

    /// `|l|² = l·K·lᵀ`.
    pub fn direction_norm2(&self, l: &InfinityDirection<T>) -> T {
        self.kernel(&l.l, &l.l)
    }

    /// Splits `|PQ|²` into the component along `l` and the component across it.
    pub fn cauchy_split(
        &self,
        p: &BaryPoint<T>,
        q: &BaryPoint<T>,
        l: &InfinityDirection<T>,
    ) -> Result<CauchySplit<T>> {
        let norm2 = self.direction_norm2(l);
        if norm2.is_zero() {
            return Err(GeometryError::DegenerateDirection);
        }
        let along = sq(&self.kernel(&p.displacement_from(q), &l.l)) / norm2.clone();
        let det = det3([p.coords(), q.coords(), &l.l]);
        let across = int::<T>(4) * self.area_sq() * sq(&det) / norm2;
        Ok(CauchySplit { along, across })
    }

    /// Squared oriented area of `XYZ`: `S²·[X;Y;Z]²`.
    pub fn area_sq_of(&self, x: &BaryPoint<T>, y: &BaryPoint<T>, z: &BaryPoint<T>) -> T {
        self.area_sq() * sq(&area_det(x, y, z))
    }
}

/// The two nonnegative parts of `|PQ|²` relative to a direction `l`.
#[derive(Debug, Clone, PartialEq)]
pub struct CauchySplit<T> {
    /// `[(P−Q)·K·lᵀ]² / |l|²`
    pub along: T,
    /// `4S²·[P;Q;l]² / |l|²`
    pub across: T,
}

impl<T: Scalar> CauchySplit<T> {
    pub fn total(&self) -> T {
        self.along.clone() + self.across.clone()
    }
}

/// A finite point in barycentric coordinates.
///
/// The homogeneous masses are kept as given; the normalized coordinates
/// (summing to exactly one) are computed once at construction.
#[derive(Debug, Clone)]
pub struct BaryPoint<T> {
    mass: [T; 3],
    coords: [T; 3],
}

impl<T: Scalar> BaryPoint<T> {
    pub fn new(mass: [T; 3]) -> Result<Self> {
        let total = mass[0].clone() + mass[1].clone() + mass[2].clone();
        if total.is_zero() {
            return Err(GeometryError::ZeroWeightSum);
        }
        let coords = [
            mass[0].clone() / total.clone(),
            mass[1].clone() / total.clone(),
            mass[2].clone() / total,
        ];
        Ok(BaryPoint { mass, coords })
    }

    pub(crate) fn from_normalized(coords: [T; 3]) -> Self {
        BaryPoint { mass: coords.clone(), coords }
    }

    /// Vertex `A`, `B` or `C` for index 0, 1, 2.
    pub fn vertex(index: usize) -> Self {
        let mut c = [T::zero(), T::zero(), T::zero()];
        c[index] = T::one();
        Self::from_normalized(c)
    }

    pub fn mass(&self) -> &[T; 3] {
        &self.mass
    }

    pub fn coords(&self) -> &[T; 3] {
        &self.coords
    }

    /// Normalized copy; idempotent.
    pub fn normalized(&self) -> Self {
        Self::from_normalized(self.coords.clone())
    }

    /// `self − origin` as a zero-sum triple.
    pub fn displacement_from(&self, origin: &BaryPoint<T>) -> [T; 3] {
        [
            self.coords[0].clone() - origin.coords[0].clone(),
            self.coords[1].clone() - origin.coords[1].clone(),
            self.coords[2].clone() - origin.coords[2].clone(),
        ]
    }

    /// Normalized mass combination `Σ wᵢ·Pᵢ / Σ wᵢ`.
    pub fn combine(terms: &[(T, &BaryPoint<T>)]) -> Result<Self> {
        let mut acc = [T::zero(), T::zero(), T::zero()];
        for (w, p) in terms {
            for (slot, x) in acc.iter_mut().zip(p.coords.iter()) {
                *slot = slot.clone() + w.clone() * x.clone();
            }
        }
        let total = terms.iter().fold(T::zero(), |s, (w, _)| s + w.clone());
        if total.is_zero() {
            return Err(GeometryError::ZeroWeightSum);
        }
        Ok(Self::from_normalized(acc.map(|x| x / total.clone())))
    }

    /// `(1−λ)·P + λ·Q`
    pub fn lerp(p: &BaryPoint<T>, q: &BaryPoint<T>, lambda: &T) -> Self {
        let keep = T::one() - lambda.clone();
        let coords = [0, 1, 2]
            .map(|i| keep.clone() * p.coords[i].clone() + lambda.clone() * q.coords[i].clone());
        Self::from_normalized(coords)
    }

    /// `P + t·d` for a zero-sum displacement `d`.
    pub fn translate(&self, d: &[T; 3], t: &T) -> Self {
        let coords = [0, 1, 2].map(|i| self.coords[i].clone() + t.clone() * d[i].clone());
        Self::from_normalized(coords)
    }

    /// Converts the coordinates into another scalar type.
    pub fn map_scalar<U: Scalar>(&self, f: impl Fn(&T) -> U) -> BaryPoint<U> {
        BaryPoint { mass: [0, 1, 2].map(|i| f(&self.mass[i])), coords: [0, 1, 2].map(|i| f(&self.coords[i])) }
    }
}

impl<T: PartialEq> PartialEq for BaryPoint<T> {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

/// A point at infinity: a nonzero triple with zero coordinate sum.
#[derive(Debug, Clone, PartialEq)]
pub struct InfinityDirection<T> {
    l: [T; 3],
}

impl<T: Scalar> InfinityDirection<T> {
    pub fn new(l: [T; 3]) -> Result<Self> {
        let total = l[0].clone() + l[1].clone() + l[2].clone();
        if !total.is_zero() {
            return Err(GeometryError::NotAtInfinity);
        }
        if l.iter().all(Zero::is_zero) {
            return Err(GeometryError::DegenerateDirection);
        }
        Ok(InfinityDirection { l })
    }

    /// Direction of the vector from `p` to `q`.
    pub fn between(p: &BaryPoint<T>, q: &BaryPoint<T>) -> Result<Self> {
        Self::new(q.displacement_from(p))
    }

    pub fn components(&self) -> &[T; 3] {
        &self.l
    }

    pub fn scaled(&self, k: &T) -> Result<Self> {
        Self::new(self.l.clone().map(|x| x * k.clone()))
    }
}

pub(crate) fn det3<T: Scalar>(rows: [&[T; 3]; 3]) -> T {
    let [r0, r1, r2] = rows;
    let minor = |i: usize, j: usize| r1[i].clone() * r2[j].clone() - r1[j].clone() * r2[i].clone();
    r0[0].clone() * minor(1, 2) - r0[1].clone() * minor(0, 2) + r0[2].clone() * minor(0, 1)
}

/// Determinant `[X;Y;Z]` of the normalized coordinate rows.
pub fn area_det<T: Scalar>(x: &BaryPoint<T>, y: &BaryPoint<T>, z: &BaryPoint<T>) -> T {
    det3([x.coords(), y.coords(), z.coords()])
}
