//! Jets of polynomial fields.
//!
//! A [`JetElement`] of order `k` at `x` stores, for each order `l ≤ k` and
//! each fiber component `α`, a covariant symmetric tensor of degree `l` in
//! the plain convention. Those components are the coefficients against
//! `←dx^(𝐈) ⊗ e_α`, which makes them exactly the partial derivatives
//! `w^α_,𝐈(x)`.
//!
//! A [`JetCovector`] stores `φ^𝐈_α` against `∂_(𝐈) ⊗ e^α` (arrow convention
//! on a contravariant tensor), so `φ(A) = Σ φ^𝐈_α A^α_𝐈` is a plain sum.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::multiindex::{enumerate_graded, CardinalityIndex};
use crate::polyfield::{shift, Point, PolyField, Polynomial};
use crate::scalar::Scalar;
use crate::symtensor::{pair, Convention, SymTensor, Variance};

/// All `(α, 𝐈)` slots of an order-`k` jet, α 1-based, graded by `|𝐈|`.
pub fn jet_slots(n: usize, m: usize, k: usize) -> Vec<(usize, CardinalityIndex)> {
    let indices = enumerate_graded(n, k);
    let mut out = Vec::with_capacity(indices.len() * m);
    for idx in indices {
        for alpha in 1..=m {
            out.push((alpha, idx.clone()));
        }
    }
    out
}

fn zero_blocks(n: usize, m: usize, k: usize, variance: Variance, convention: Convention) -> Vec<Vec<SymTensor>> {
    (0..=k).map(|l| vec![SymTensor::zeros(n, l, variance, convention); m]).collect()
}

fn check_alpha(alpha: usize, m: usize) {
    assert!(alpha >= 1 && alpha <= m, "fiber index {alpha} out of range 1..={m}");
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetElement {
    n: usize,
    m: usize,
    k: usize,
    point: Point,
    blocks: Vec<Vec<SymTensor>>,
}

impl JetElement {
    pub fn zeros(m: usize, k: usize, point: Point) -> Self {
        let n = point.n();
        Self { n, m, k, point, blocks: zero_blocks(n, m, k, Variance::Covariant, Convention::Plain) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn point(&self) -> &Point {
        &self.point
    }

    /// Block of order `l` for fiber component `α` (1-based).
    pub fn block(&self, l: usize, alpha: usize) -> &SymTensor {
        check_alpha(alpha, self.m);
        &self.blocks[l][alpha - 1]
    }

    /// `A^α_𝐈`.
    pub fn get(&self, alpha: usize, index: &CardinalityIndex) -> &Scalar {
        self.block(index.degree(), alpha).get(index)
    }

    pub fn set(&mut self, alpha: usize, index: &CardinalityIndex, value: Scalar) {
        check_alpha(alpha, self.m);
        self.blocks[index.degree()][alpha - 1].set(index, value);
    }

    pub fn slots(&self) -> Vec<(usize, CardinalityIndex)> {
        jet_slots(self.n, self.m, self.k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetCovector {
    n: usize,
    m: usize,
    k: usize,
    blocks: Vec<Vec<SymTensor>>,
}

impl JetCovector {
    pub fn zeros(n: usize, m: usize, k: usize) -> Self {
        Self { n, m, k, blocks: zero_blocks(n, m, k, Variance::Contravariant, Convention::Arrow) }
    }

    /// Dual basis element to the slot `(α, 𝐈)`.
    pub fn dual_basis(n: usize, m: usize, k: usize, alpha: usize, index: &CardinalityIndex) -> Self {
        let mut phi = Self::zeros(n, m, k);
        phi.set(alpha, index, Scalar::from_integer(1.into()));
        phi
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn block(&self, l: usize, alpha: usize) -> &SymTensor {
        check_alpha(alpha, self.m);
        &self.blocks[l][alpha - 1]
    }

    /// `φ^𝐈_α`.
    pub fn get(&self, alpha: usize, index: &CardinalityIndex) -> &Scalar {
        self.block(index.degree(), alpha).get(index)
    }

    pub fn set(&mut self, alpha: usize, index: &CardinalityIndex, value: Scalar) {
        check_alpha(alpha, self.m);
        self.blocks[index.degree()][alpha - 1].set(index, value);
    }

    pub fn slots(&self) -> Vec<(usize, CardinalityIndex)> {
        jet_slots(self.n, self.m, self.k)
    }
}

/// `j^k w(x)`: block `l`, slot `(α, 𝐈)` is `w^α_,𝐈(x)`.
pub fn jet_of(w: &PolyField, x: &Point, k: usize) -> Result<JetElement> {
    if x.n() != w.n() {
        return Err(Error::DimensionMismatch { expected: w.n(), got: x.n() });
    }
    let mut jet = JetElement::zeros(w.m(), k, x.clone());
    for (alpha, idx) in jet.slots() {
        let value = w.component(alpha).derive(&idx)?.eval(x)?;
        jet.set(alpha, &idx, value);
    }
    Ok(jet)
}

/// `π^k_l`: drops blocks above order `l`.
pub fn truncate(a: &JetElement, l: usize) -> Result<JetElement> {
    if l > a.k {
        return Err(Error::OrderTooHigh { requested: l, order: a.k });
    }
    Ok(JetElement {
        k: l,
        point: a.point.clone(),
        blocks: a.blocks[..=l].to_vec(),
        ..*a
    })
}

pub fn source(a: &JetElement) -> &Point {
    &a.point
}

/// Taylor polynomial representative `P^α = Σ_𝐈 A^α_𝐈/𝐈! (x - x0)^𝐈`.
pub fn realize(a: &JetElement) -> Result<PolyField> {
    let mut components = Vec::with_capacity(a.m);
    for alpha in 1..=a.m {
        let terms = enumerate_graded(a.n, a.k).into_iter().map(|idx| {
            let g = a.get(alpha, &idx) / Scalar::from_integer(idx.factorial());
            (idx, g)
        });
        let h_poly = Polynomial::from_terms(a.n, terms)?;
        components.push(shift(&h_poly, &a.point)?);
    }
    PolyField::new(a.n, components)
}

/// `φ(A) = Σ φ^𝐈_α A^α_𝐈` over `0 ≤ |𝐈| ≤ k`.
pub fn pair_jet(phi: &JetCovector, a: &JetElement) -> Result<Scalar> {
    if (phi.n, phi.m, phi.k) != (a.n, a.m, a.k) {
        return Err(Error::ShapeMismatch(format!(
            "covector (n={}, m={}, k={}) against jet (n={}, m={}, k={})",
            phi.n, phi.m, phi.k, a.n, a.m, a.k
        )));
    }
    let mut total = Scalar::zero();
    for (jet_block, co_block) in a.blocks.iter().zip(&phi.blocks) {
        for (x, y) in jet_block.iter().zip(co_block) {
            total += pair(x, y)?;
        }
    }
    Ok(total)
}

/// Affine base chart `x' = B x + c` together with a fiber frame change
/// `w^α' = F^α'_α(x) w^α`, the frame given as polynomials in the old coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartMap {
    linear: Matrix,
    inverse: Matrix,
    offset: Vec<Scalar>,
    frame: Vec<Vec<Polynomial>>,
}

impl ChartMap {
    pub fn new(linear: Matrix, offset: Vec<Scalar>, frame: Vec<Vec<Polynomial>>) -> Result<Self> {
        let n = linear.rows();
        if linear.cols() != n || offset.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: offset.len() });
        }
        let m = frame.len();
        for row in &frame {
            if row.len() != m {
                return Err(Error::LengthMismatch { expected: m, got: row.len() });
            }
            if let Some(bad) = row.iter().find(|p| p.n() != n) {
                return Err(Error::DimensionMismatch { expected: n, got: bad.n() });
            }
        }
        let inverse = linear.inverse()?;
        Ok(Self { linear, inverse, offset, frame })
    }

    pub fn identity(n: usize, m: usize) -> Self {
        let frame = (0..m)
            .map(|r| {
                (0..m)
                    .map(|c| {
                        if r == c {
                            Polynomial::constant(n, Scalar::from_integer(1.into()))
                        } else {
                            Polynomial::zero(n)
                        }
                    })
                    .collect()
            })
            .collect();
        Self { linear: Matrix::identity(n), inverse: Matrix::identity(n), offset: vec![Scalar::zero(); n], frame }
    }

    pub fn n(&self) -> usize {
        self.linear.rows()
    }

    pub fn m(&self) -> usize {
        self.frame.len()
    }

    pub fn map_point(&self, x: &Point) -> Result<Point> {
        let mut y = self.linear.mul_vec(x.coords())?;
        for (yi, ci) in y.iter_mut().zip(&self.offset) {
            *yi += ci;
        }
        Ok(Point::new(y))
    }

    /// `next ∘ self`: first `self`, then `next` (whose frame is expressed in
    /// `self`'s target coordinates).
    pub fn then(&self, next: &ChartMap) -> Result<ChartMap> {
        if self.n() != next.n() || self.m() != next.m() {
            return Err(Error::ShapeMismatch("composing charts of different shape".into()));
        }
        let linear = next.linear.mul(&self.linear)?;
        let mut offset = next.linear.mul_vec(&self.offset)?;
        for (o, c) in offset.iter_mut().zip(&next.offset) {
            *o += c;
        }
        let pulled: Vec<Vec<Polynomial>> = next
            .frame
            .iter()
            .map(|row| row.iter().map(|p| p.compose_affine(&self.linear, &self.offset)).collect())
            .collect::<Result<_>>()?;
        let m = self.m();
        let mut frame = vec![vec![Polynomial::zero(self.n()); m]; m];
        for (r, out_row) in frame.iter_mut().enumerate() {
            for (c, slot) in out_row.iter_mut().enumerate() {
                for (mid, pulled_entry) in pulled[r].iter().enumerate() {
                    *slot = slot.add(&pulled_entry.mul(&self.frame[mid][c])?)?;
                }
            }
        }
        ChartMap::new(linear, offset, frame)
    }
}

/// First-jet transformation under an affine chart and a point-dependent frame:
///
/// `w^α' = F^α'_α w^α`,
/// `w^α'_,i' = F^α'_α,j x^j_,i' w^α + F^α'_α w^α_,j x^j_,i'`,
///
/// with `x^j_,i' = (B⁻¹)^j_i'`.
pub fn transform_1jet(a: &JetElement, chart: &ChartMap) -> Result<JetElement> {
    if a.k != 1 {
        return Err(Error::ShapeMismatch(format!("expected a 1-jet, got order {}", a.k)));
    }
    if chart.n() != a.n || chart.m() != a.m {
        return Err(Error::ShapeMismatch("chart does not match jet shape".into()));
    }
    let n = a.n;
    let m = a.m;
    let x = &a.point;
    let mut value = vec![vec![Scalar::zero(); m]; m];
    let mut grad = vec![vec![vec![Scalar::zero(); n]; m]; m];
    for r in 0..m {
        for c in 0..m {
            let f = &chart.frame[r][c];
            value[r][c] = f.eval(x)?;
            for j in 0..n {
                grad[r][c][j] = f.derive(&CardinalityIndex::unit(n, j + 1)?)?.eval(x)?;
            }
        }
    }
    let w: Vec<Scalar> = (1..=m).map(|al| a.get(al, &CardinalityIndex::zero(n)).clone()).collect();
    let dw: Vec<Vec<Scalar>> = (1..=m)
        .map(|al| {
            (1..=n).map(|j| a.get(al, &CardinalityIndex::unit(n, j).unwrap()).clone()).collect()
        })
        .collect();

    let mut out = JetElement::zeros(m, 1, chart.map_point(x)?);
    for r in 0..m {
        let v0: Scalar = (0..m).map(|c| &value[r][c] * &w[c]).sum();
        out.set(r + 1, &CardinalityIndex::zero(n), v0);
        for ip in 0..n {
            let mut acc = Scalar::zero();
            for c in 0..m {
                for j in 0..n {
                    let jac = chart.inverse.get(j, ip);
                    if jac.is_zero() {
                        continue;
                    }
                    acc += (&grad[r][c][j] * &w[c] + &value[r][c] * &dw[c][j]) * jac;
                }
            }
            out.set(r + 1, &CardinalityIndex::unit(n, ip + 1)?, acc);
        }
    }
    Ok(out)
}
