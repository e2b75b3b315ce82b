//! Polynomials in `n` variables with exact coefficients, and polynomial
//! sections `w = w^α e_α` of a trivial rank-`m` bundle.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::multiindex::{enumerate_graded, CardinalityIndex};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point(Vec<Scalar>);

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Self(coords)
    }

    pub fn origin(n: usize) -> Self {
        Self(vec![Scalar::zero(); n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    /// `x^𝐈 = (x¹)^{I1} ⋯ (xⁿ)^{In}`.
    pub fn monomial(&self, index: &CardinalityIndex) -> Scalar {
        self.0
            .iter()
            .zip(index.counts())
            .map(|(x, &e)| Pow::pow(x, e as u32))
            .product()
    }
}

/// Sparse polynomial `u = a_𝐈 x^𝐈`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    coeffs: BTreeMap<CardinalityIndex, Scalar>,
}

fn falling_factorial_ratio(i: &CardinalityIndex, j: &CardinalityIndex) -> BigInt {
    // 𝐈!/(𝐈-𝐉)! for 𝐉 ≤ 𝐈
    i.counts()
        .iter()
        .zip(j.counts())
        .map(|(&a, &b)| ((a - b + 1)..=a).fold(BigInt::one(), |acc, k| acc * BigInt::from(k)))
        .product()
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Self { n, coeffs: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        Self::monomial(CardinalityIndex::zero(n), c)
    }

    pub fn monomial(index: CardinalityIndex, c: Scalar) -> Self {
        let n = index.n();
        let mut p = Self::zero(n);
        p.add_term(index, c);
        p
    }

    /// The coordinate function `x^axis` (1-based).
    pub fn coordinate(n: usize, axis: usize) -> Result<Self> {
        Ok(Self::monomial(CardinalityIndex::unit(n, axis)?, Scalar::one()))
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (CardinalityIndex, Scalar)>,
    ) -> Result<Self> {
        let mut p = Self::zero(n);
        for (idx, c) in terms {
            if idx.n() != n {
                return Err(Error::DimensionMismatch { expected: n, got: idx.n() });
            }
            p.add_term(idx, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, index: CardinalityIndex, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(index.clone()).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&index);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Maximum `|𝐈|` with a nonzero coefficient; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.keys().map(CardinalityIndex::degree).max().unwrap_or(0)
    }

    pub fn coeff(&self, index: &CardinalityIndex) -> Scalar {
        self.coeffs.get(index).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CardinalityIndex, &Scalar)> {
        self.coeffs.iter()
    }

    fn check_same_n(&self, other: &Polynomial) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (idx, c) in &other.coeffs {
            out.add_term(idx.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_n(other)?;
        let mut out = Polynomial::zero(self.n);
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                out.add_term(i.add(j), a * b);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> Result<Polynomial> {
        let mut acc = Polynomial::constant(self.n, Scalar::one());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn eval(&self, x: &Point) -> Result<Scalar> {
        if x.n() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: x.n() });
        }
        Ok(self.coeffs.iter().map(|(idx, a)| a * x.monomial(idx)).sum())
    }

    /// `∂_𝐉 u = Σ_{𝐉 ≤ 𝐈} a_𝐈 𝐈!/(𝐈-𝐉)! x^{𝐈-𝐉}`; terms with `𝐉 ≰ 𝐈` vanish.
    pub fn derive(&self, j: &CardinalityIndex) -> Result<Polynomial> {
        if j.n() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: j.n() });
        }
        let mut out = Polynomial::zero(self.n);
        for (i, a) in &self.coeffs {
            if let Some(rest) = j.sub_from(i) {
                let f = Scalar::from_integer(falling_factorial_ratio(i, j));
                out.add_term(rest, a * f);
            }
        }
        Ok(out)
    }

    /// `u(B x + c)`.
    pub fn compose_affine(&self, b: &Matrix, c: &[Scalar]) -> Result<Polynomial> {
        if b.rows() != self.n || c.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: b.rows() });
        }
        let m = b.cols();
        let linear: Vec<Polynomial> = (0..self.n)
            .map(|r| {
                let mut y = Polynomial::constant(m, c[r].clone());
                for j in 0..m {
                    y.add_term(CardinalityIndex::unit(m, j + 1).unwrap(), b.get(r, j).clone());
                }
                y
            })
            .collect();
        let mut powers: Vec<Vec<Polynomial>> =
            linear.iter().map(|_| vec![Polynomial::constant(m, Scalar::one())]).collect();
        let mut out = Polynomial::zero(m);
        for (idx, a) in &self.coeffs {
            let mut term = Polynomial::constant(m, a.clone());
            for (r, &e) in idx.counts().iter().enumerate() {
                while powers[r].len() <= e {
                    let next = powers[r].last().unwrap().mul(&linear[r])?;
                    powers[r].push(next);
                }
                term = term.mul(&powers[r][e])?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Exact integral over the box `Π [lower_r, upper_r]`.
    pub fn integrate_box(&self, lower: &[Scalar], upper: &[Scalar]) -> Result<Scalar> {
        self.integrate_face(lower, upper, None)
    }

    /// Exact integral over the box with axis `fixed.0` (1-based) pinned at `fixed.1`.
    pub fn integrate_face(
        &self,
        lower: &[Scalar],
        upper: &[Scalar],
        fixed: Option<(usize, &Scalar)>,
    ) -> Result<Scalar> {
        if lower.len() != self.n || upper.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: lower.len() });
        }
        let mut total = Scalar::zero();
        for (idx, a) in &self.coeffs {
            let mut term = a.clone();
            for (r, &e) in idx.counts().iter().enumerate() {
                match fixed {
                    Some((axis, value)) if axis == r + 1 => term *= Pow::pow(value, e as u32),
                    _ => {
                        let e1 = e as u32 + 1;
                        let span = Pow::pow(&upper[r], e1) - Pow::pow(&lower[r], e1);
                        term *= span / Scalar::from_integer(BigInt::from(e1));
                    }
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Floating-point evaluator for quadrature cross-checks.
    pub fn to_float(&self) -> FloatPolynomial {
        FloatPolynomial {
            terms: self
                .coeffs
                .iter()
                .map(|(idx, a)| {
                    (idx.counts().iter().map(|&e| e as i32).collect(), crate::scalar::to_f64(a))
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FloatPolynomial {
    terms: Vec<(Vec<i32>, f64)>,
}

impl FloatPolynomial {
    pub fn eval(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(exps, a)| a * exps.iter().zip(x).map(|(&e, xi)| xi.powi(e)).product::<f64>())
            .sum()
    }
}

/// `u_,𝐉` as a free function.
pub fn derive(u: &Polynomial, j: &CardinalityIndex) -> Result<Polynomial> {
    u.derive(j)
}

pub fn eval(u: &Polynomial, x: &Point) -> Result<Scalar> {
    u.eval(x)
}

/// Taylor polynomial in the displacement `h`: `g_𝐈 = u_,𝐈(x0)/𝐈!`, `|𝐈| ≤ order`.
pub fn taylor(u: &Polynomial, x0: &Point, order: usize) -> Result<Polynomial> {
    let mut out = Polynomial::zero(u.n());
    for idx in enumerate_graded(u.n(), order) {
        let value = u.derive(&idx)?.eval(x0)?;
        let g = value / Scalar::from_integer(idx.factorial());
        out.add_term(idx, g);
    }
    Ok(out)
}

/// Substitutes `h = x - x0` into a polynomial in `h`.
pub fn shift(h_poly: &Polynomial, x0: &Point) -> Result<Polynomial> {
    let c: Vec<Scalar> = x0.coords().iter().map(|v| -v).collect();
    h_poly.compose_affine(&Matrix::identity(h_poly.n()), &c)
}

/// `w = w^α e_α` with polynomial components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyField {
    n: usize,
    components: Vec<Polynomial>,
}

impl PolyField {
    pub fn new(n: usize, components: Vec<Polynomial>) -> Result<Self> {
        if let Some(bad) = components.iter().find(|p| p.n() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: bad.n() });
        }
        Ok(Self { n, components })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Fiber dimension.
    pub fn m(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    /// `w^α`, 1-based.
    pub fn component(&self, alpha: usize) -> &Polynomial {
        &self.components[alpha - 1]
    }

    pub fn eval(&self, x: &Point) -> Result<Vec<Scalar>> {
        self.components.iter().map(|p| p.eval(x)).collect()
    }
}
