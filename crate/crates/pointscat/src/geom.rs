//! Small fixed-capacity vectors in R^d for d = 1, 2, 3.
//!
//! The spatial dimension is a runtime value here (the same solver code serves
//! all three dimensions), so points and wavevectors share one POD type with
//! the dimension carried alongside the coordinates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Spatial dimension of the problem. Multipoint potentials are only defined
/// for d = 1, 2, 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dim {
    D1,
    D2,
    D3,
}

impl Dim {
    pub fn as_usize(self) -> usize {
        match self {
            Dim::D1 => 1,
            Dim::D2 => 2,
            Dim::D3 => 3,
        }
    }

    pub fn from_usize(d: usize) -> Result<Self> {
        match d {
            1 => Ok(Dim::D1),
            2 => Ok(Dim::D2),
            3 => Ok(Dim::D3),
            _ => Err(Error::InvalidInput(format!("dimension must be 1, 2 or 3, got {d}"))),
        }
    }
}

impl std::fmt::Display for Dim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_usize())
    }
}

/// A point or vector in R^d. Unused trailing components are zero, so `dot`
/// and `norm` can run over the fixed-size array unconditionally.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vector {
    dim: Dim,
    c: [f64; 3],
}

impl Vector {
    pub fn d1(x: f64) -> Self {
        Vector { dim: Dim::D1, c: [x, 0.0, 0.0] }
    }

    pub fn d2(x: f64, y: f64) -> Self {
        Vector { dim: Dim::D2, c: [x, y, 0.0] }
    }

    pub fn d3(x: f64, y: f64, z: f64) -> Self {
        Vector { dim: Dim::D3, c: [x, y, z] }
    }

    pub fn zero(dim: Dim) -> Self {
        Vector { dim, c: [0.0; 3] }
    }

    pub fn from_slice(dim: Dim, coords: &[f64]) -> Result<Self> {
        if coords.len() != dim.as_usize() {
            return Err(Error::InvalidInput(format!(
                "coordinate list of length {} does not match dimension {}",
                coords.len(),
                dim
            )));
        }
        let mut c = [0.0; 3];
        c[..coords.len()].copy_from_slice(coords);
        Ok(Vector { dim, c })
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    /// Coordinates as a slice of length `dim`.
    pub fn coords(&self) -> &[f64] {
        &self.c[..self.dim.as_usize()]
    }

    pub fn get(&self, axis: usize) -> f64 {
        self.c[axis]
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        debug_assert_eq!(self.dim, other.dim);
        self.c[0] * other.c[0] + self.c[1] * other.c[1] + self.c[2] * other.c[2]
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scale(&self, s: f64) -> Vector {
        Vector { dim: self.dim, c: [self.c[0] * s, self.c[1] * s, self.c[2] * s] }
    }

    /// Unit vector in the same direction; `None` for the zero vector.
    pub fn unit(&self) -> Option<Vector> {
        let n = self.norm();
        (n > 0.0).then(|| self.scale(1.0 / n))
    }

    /// Cross product; defined for d = 3 only.
    pub fn cross(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim, Dim::D3);
        Vector {
            dim: Dim::D3,
            c: [
                self.c[1] * other.c[2] - self.c[2] * other.c[1],
                self.c[2] * other.c[0] - self.c[0] * other.c[2],
                self.c[0] * other.c[1] - self.c[1] * other.c[0],
            ],
        }
    }
}

impl std::ops::Add for Vector {
    type Output = Vector;
    fn add(self, rhs: Vector) -> Vector {
        debug_assert_eq!(self.dim, rhs.dim);
        Vector {
            dim: self.dim,
            c: [self.c[0] + rhs.c[0], self.c[1] + rhs.c[1], self.c[2] + rhs.c[2]],
        }
    }
}

impl std::ops::Sub for Vector {
    type Output = Vector;
    fn sub(self, rhs: Vector) -> Vector {
        debug_assert_eq!(self.dim, rhs.dim);
        Vector {
            dim: self.dim,
            c: [self.c[0] - rhs.c[0], self.c[1] - rhs.c[1], self.c[2] - rhs.c[2]],
        }
    }
}

impl std::ops::Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        self.scale(-1.0)
    }
}

impl Serialize for Vector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(serializer)
    }
}

impl std::fmt::Display for Vector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coords_match_dim() {
        assert_eq!(Vector::d1(2.0).coords(), &[2.0]);
        assert_eq!(Vector::d2(1.0, -1.0).coords(), &[1.0, -1.0]);
        assert_eq!(Vector::d3(1.0, 2.0, 3.0).coords(), &[1.0, 2.0, 3.0]);
        assert!(Vector::from_slice(Dim::D2, &[1.0]).is_err());
    }

    #[test]
    fn cross_follows_right_hand_rule() {
        let e1 = Vector::d3(1.0, 0.0, 0.0);
        let e2 = Vector::d3(0.0, 1.0, 0.0);
        assert_eq!(e1.cross(&e2), Vector::d3(0.0, 0.0, 1.0));
    }
}
