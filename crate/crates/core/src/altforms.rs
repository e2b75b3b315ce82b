//! Top-degree and codimension-one alternating forms on an `n`-dimensional space.
//!
//! A codimension-one form is stored in the basis `{∂_i ⌟ dx}` where
//! `dx = dx¹ ∧ … ∧ dxⁿ`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector {
    components: Vec<Scalar>,
}

impl Vector {
    pub fn new(components: Vec<Scalar>) -> Self {
        Self { components }
    }

    pub fn zero(n: usize) -> Self {
        Self { components: vec![Scalar::zero(); n] }
    }

    /// Coordinate vector `∂_i` (1-based).
    pub fn basis(n: usize, axis: usize) -> Self {
        let mut v = Self::zero(n);
        v.components[axis - 1] = Scalar::from_integer(1.into());
        v
    }

    pub fn n(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Scalar] {
        &self.components
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector { components: self.components.iter().map(|v| v * c).collect() }
    }
}

/// `c · dx¹ ∧ … ∧ dxⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopForm {
    pub n: usize,
    pub coeff: Scalar,
}

impl TopForm {
    pub fn new(n: usize, coeff: Scalar) -> Self {
        Self { n, coeff }
    }

    /// `dx(v1, …, vn) = c · det[v1 … vn]`.
    pub fn evaluate(&self, vs: &[Vector]) -> Result<Scalar> {
        if vs.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: vs.len() });
        }
        Ok(&self.coeff * frame_determinant(self.n, vs)?)
    }
}

/// `ω = ω^i (∂_i ⌟ dx)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoDimOneForm {
    coeffs: Vec<Scalar>,
}

impl CoDimOneForm {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        Self { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        Self { coeffs: vec![Scalar::zero(); n] }
    }

    /// `∂_i ⌟ dx`.
    pub fn basis(n: usize, axis: usize) -> Self {
        Self { coeffs: Vector::basis(n, axis).components }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn add(&self, other: &CoDimOneForm) -> Result<CoDimOneForm> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), got: other.n() });
        }
        Ok(CoDimOneForm { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn scale(&self, c: &Scalar) -> CoDimOneForm {
        CoDimOneForm { coeffs: self.coeffs.iter().map(|v| v * c).collect() }
    }
}

fn frame_determinant(n: usize, vs: &[Vector]) -> Result<Scalar> {
    let cols: Vec<Vec<Scalar>> = vs.iter().map(|v| v.components.clone()).collect();
    if let Some(bad) = vs.iter().find(|v| v.n() != n) {
        return Err(Error::DimensionMismatch { expected: n, got: bad.n() });
    }
    Matrix::from_columns(&cols, n)?.determinant()
}

/// Interior product `v ⌟ θ`: `(v⌟θ)^i = v^i · coeff(θ)`.
pub fn contract(v: &Vector, theta: &TopForm) -> Result<CoDimOneForm> {
    if v.n() != theta.n {
        return Err(Error::DimensionMismatch { expected: theta.n, got: v.n() });
    }
    Ok(CoDimOneForm { coeffs: v.components.iter().map(|c| c * &theta.coeff).collect() })
}

/// `ω(v2, …, vn) = Σ_i ω^i dx(∂_i, v2, …, vn)`.
pub fn evaluate(omega: &CoDimOneForm, vs: &[Vector]) -> Result<Scalar> {
    let n = omega.n();
    if n == 0 || vs.len() != n - 1 {
        return Err(Error::LengthMismatch { expected: n.saturating_sub(1), got: vs.len() });
    }
    let mut total = Scalar::zero();
    for (i, w) in omega.coeffs.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let mut frame = Vec::with_capacity(n);
        frame.push(Vector::basis(n, i + 1));
        frame.extend_from_slice(vs);
        total += w * frame_determinant(n, &frame)?;
    }
    Ok(total)
}

/// Coefficient of `ω` restricted to the hyperplane spanned by `frame`,
/// relative to that ordered frame.
pub fn restrict(omega: &CoDimOneForm, frame: &[Vector]) -> Result<Scalar> {
    let n = omega.n();
    check_frame(n, frame)?;
    evaluate(omega, frame)
}

/// Rejects frames that are not `n - 1` independent vectors in dimension `n`.
pub fn check_frame(n: usize, frame: &[Vector]) -> Result<()> {
    if n == 0 || frame.len() != n - 1 {
        return Err(Error::LengthMismatch { expected: n.saturating_sub(1), got: frame.len() });
    }
    if let Some(bad) = frame.iter().find(|v| v.n() != n) {
        return Err(Error::DimensionMismatch { expected: n, got: bad.n() });
    }
    let cols: Vec<Vec<Scalar>> = frame.iter().map(|v| v.components.clone()).collect();
    let rank = Matrix::from_columns(&cols, n)?.rank();
    if rank != n - 1 {
        return Err(Error::DegenerateFrame { rank, expected: n - 1 });
    }
    Ok(())
}

/// Matrix of `v ⊗ θ ↦ v ⌟ θ` from the basis `∂_i ⊗ dx` to the values of
/// the image on every increasing `(n-1)`-tuple of coordinate vectors.
pub fn contraction_matrix(n: usize) -> Result<Matrix> {
    let mut m = Matrix::zeros(n, n);
    let dx = TopForm::new(n, Scalar::from_integer(1.into()));
    for i in 1..=n {
        let form = contract(&Vector::basis(n, i), &dx)?;
        // row r: evaluation on the coordinate frame omitting axis r
        for r in 1..=n {
            let frame: Vec<Vector> =
                (1..=n).filter(|&a| a != r).map(|a| Vector::basis(n, a)).collect();
            m.set(r - 1, i - 1, evaluate(&form, &frame)?);
        }
    }
    Ok(m)
}
