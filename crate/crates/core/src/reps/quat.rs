//! Hamilton quaternions and their multiplication matrices.

use std::ops::{Mul, Neg};

use nalgebra::Matrix4;

/// `w + x i + y j + z k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quat {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quat {
    pub const ONE: Quat = Quat::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quat = Quat::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quat = Quat::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quat = Quat::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Quat {
        Quat { w, x, y, z }
    }

    /// `cos θ + i sin θ`.
    pub fn from_angle(theta: f64) -> Quat {
        Quat::new(theta.cos(), theta.sin(), 0.0, 0.0)
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn conj(&self) -> Quat {
        Quat::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coords().iter().map(|c| c * c).sum()
    }

    pub fn dist(&self, other: &Quat) -> f64 {
        self.coords().iter().zip(other.coords()).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt()
    }
}

impl Mul for Quat {
    type Output = Quat;

    fn mul(self, q: Quat) -> Quat {
        let p = self;
        Quat::new(
            p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
        )
    }
}

impl Neg for Quat {
    type Output = Quat;

    fn neg(self) -> Quat {
        Quat::new(-self.w, -self.x, -self.y, -self.z)
    }
}

pub fn quat_mul(p: Quat, q: Quat) -> Quat {
    p * q
}

/// Matrix of `v ↦ q v` in the basis `1, i, j, k`.
pub fn left_mult_matrix(q: Quat) -> Matrix4<f64> {
    Matrix4::new(
        q.w, -q.x, -q.y, -q.z, //
        q.x, q.w, -q.z, q.y, //
        q.y, q.z, q.w, -q.x, //
        q.z, -q.y, q.x, q.w,
    )
}

/// Matrix of `v ↦ v q` in the basis `1, i, j, k`.
pub fn right_mult_matrix(q: Quat) -> Matrix4<f64> {
    Matrix4::new(
        q.w, -q.x, -q.y, -q.z, //
        q.x, q.w, q.z, -q.y, //
        q.y, -q.z, q.w, q.x, //
        q.z, q.y, -q.x, q.w,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use nalgebra::Vector4;
    use proptest::prelude::*;

    fn v(q: Quat) -> Vector4<f64> {
        Vector4::new(q.w, q.x, q.y, q.z)
    }

    #[test]
    fn hamilton_relations() {
        assert_eq!(Quat::I * Quat::J, Quat::K);
        assert_eq!(Quat::J * Quat::I, -Quat::K);
        assert_eq!(Quat::J * Quat::K, Quat::I);
        assert_eq!(Quat::K * Quat::I, Quat::J);
        assert_eq!(Quat::I * Quat::I, -Quat::ONE);
        assert_eq!(Quat::I * Quat::J * Quat::K, -Quat::ONE);
    }

    #[test]
    fn identity_matrices() {
        assert_eq!(left_mult_matrix(Quat::ONE), Matrix4::identity());
        assert_eq!(right_mult_matrix(Quat::ONE), Matrix4::identity());
    }

    fn unit() -> impl Strategy<Value = Quat> {
        (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64)
            .prop_filter("nonzero", |(a, b, c, d)| a * a + b * b + c * c + d * d > 1e-3)
            .prop_map(|(a, b, c, d)| {
                let n = (a * a + b * b + c * c + d * d).sqrt();
                Quat::new(a / n, b / n, c / n, d / n)
            })
    }

    proptest! {
        #[test]
        fn matrices_act_as_products(p in unit(), q in unit()) {
            assert_relative_eq!(left_mult_matrix(p) * v(q), v(p * q), epsilon = 1e-12);
            assert_relative_eq!(right_mult_matrix(q) * v(p), v(p * q), epsilon = 1e-12);
        }

        #[test]
        fn left_and_right_commute(p in unit(), q in unit()) {
            let (l, r) = (left_mult_matrix(p), right_mult_matrix(q));
            assert_relative_eq!(l * r, r * l, epsilon = 1e-12);
            assert_relative_eq!(l.transpose() * l, Matrix4::identity(), epsilon = 1e-12);
            assert_relative_eq!(r.transpose() * r, Matrix4::identity(), epsilon = 1e-12);
        }

        #[test]
        fn associative(p in unit(), q in unit(), r in unit()) {
            assert_relative_eq!(v((p * q) * r), v(p * (q * r)), epsilon = 1e-12);
        }
    }
}
