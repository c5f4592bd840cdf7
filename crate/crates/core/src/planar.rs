//! Cartesian embedding used as an independent oracle for the barycentric
//! metric. Floating point only.

use serde::{Deserialize, Serialize};

use crate::bary::{BaryPoint, Triangle};
use crate::scalar::Scalar;

/// Planar point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Xy {
    pub x: f64,
    pub y: f64,
}

impl Xy {
    pub fn dist2(self, other: Xy) -> f64 {
        let (dx, dy) = (self.x - other.x, self.y - other.y);
        dx * dx + dy * dy
    }
}

/// Reference triangle placed with `B = (0,0)`, `C = (a,0)` and `A` above the
/// x-axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanarFrame {
    pub a: Xy,
    pub b: Xy,
    pub c: Xy,
}

impl PlanarFrame {
    pub fn from_triangle<T: Scalar>(t: &Triangle<T>) -> Self {
        let [a, b, c] = t.sides().map(Scalar::approx);
        let area = heron_area(a, b, c);
        PlanarFrame {
            a: Xy { x: (a * a + c * c - b * b) / (2.0 * a), y: 2.0 * area / a },
            b: Xy { x: 0.0, y: 0.0 },
            c: Xy { x: a, y: 0.0 },
        }
    }

    pub fn embed<T: Scalar>(&self, p: &BaryPoint<T>) -> Xy {
        let [u, v, w] = p.coords().clone().map(|x| x.approx());
        Xy {
            x: u * self.a.x + v * self.b.x + w * self.c.x,
            y: u * self.a.y + v * self.b.y + w * self.c.y,
        }
    }

    pub fn dist2<T: Scalar>(&self, p: &BaryPoint<T>, q: &BaryPoint<T>) -> f64 {
        self.embed(p).dist2(self.embed(q))
    }
}

/// Area from side lengths in the numerically stable ordering.
fn heron_area(a: f64, b: f64, c: f64) -> f64 {
    let mut s = [a, b, c];
    s.sort_by(|x, y| y.total_cmp(x));
    let [a, b, c] = s;
    0.25 * ((a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c))).sqrt()
}
