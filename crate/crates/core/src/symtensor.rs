//! Dense and compressed symmetric tensors.
//!
//! A [`SymTensor`] stores one component per non-decreasing index, addressed
//! by colexicographic rank. Two component conventions are kept explicit:
//!
//! * [`Convention::Plain`]: `T^𝐈`, the value of the symmetric array at the
//!   canonical index. These are the coefficients against the scaled basis
//!   `←e_(𝐈) = (|𝐈|!/𝐈!) e_(𝐈)`.
//! * [`Convention::Arrow`]: `←T^𝐈 = (|𝐈|!/𝐈!) T^𝐈`, the coefficients against
//!   the symmetric-product basis `e_(𝐈) = (1/l!) Σ_p e_p(𝐈)`.
//!
//! The pairing of a symmetric co-tensor with a symmetric tensor is
//! `Σ_𝐈 ←ψ_𝐈 T^𝐈 = Σ_𝐈 ψ_𝐈 ←T^𝐈`, which equals the dense pairing of the
//! included arrays. `e^(𝐈)` and `←e_(𝐉)` are dual bases.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::multiindex::{
    enumerate_nondecreasing, permutations_with_cap, sym_dim, CardinalityIndex, MultiIndex,
    DEFAULT_PERMUTATION_CAP,
};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variance {
    Covariant,
    Contravariant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    Plain,
    Arrow,
}

fn scalar_of(v: BigInt) -> Scalar {
    Scalar::from_integer(v)
}

/// General tensor of degree `l` with `n^l` components, row-major, axis 1 slowest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseTensor {
    n: usize,
    degree: usize,
    variance: Variance,
    components: Vec<Scalar>,
}

impl DenseTensor {
    pub fn zeros(n: usize, degree: usize, variance: Variance) -> Self {
        Self { n, degree, variance, components: vec![Scalar::zero(); n.pow(degree as u32)] }
    }

    pub fn from_components(
        n: usize,
        degree: usize,
        variance: Variance,
        components: Vec<Scalar>,
    ) -> Result<Self> {
        let expected = n.pow(degree as u32);
        if components.len() != expected {
            return Err(Error::LengthMismatch { expected, got: components.len() });
        }
        Ok(Self { n, degree, variance, components })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn components(&self) -> &[Scalar] {
        &self.components
    }

    fn check_index(&self, index: &MultiIndex) {
        assert!(
            index.n() == self.n && index.len() == self.degree,
            "multi-index {index} does not address a degree-{} tensor over n={}",
            self.degree,
            self.n
        );
    }

    pub fn get(&self, index: &MultiIndex) -> &Scalar {
        self.check_index(index);
        &self.components[index.dense_offset()]
    }

    pub fn set(&mut self, index: &MultiIndex, value: Scalar) {
        self.check_index(index);
        self.components[index.dense_offset()] = value;
    }

    /// Exact check `T_p(I) = T_I` for every index and permutation.
    pub fn is_symmetric(&self) -> Result<bool> {
        self.is_symmetric_with_cap(DEFAULT_PERMUTATION_CAP)
    }

    pub fn is_symmetric_with_cap(&self, cap: usize) -> Result<bool> {
        let perms: Vec<_> = permutations_with_cap(self.degree, cap)?.collect();
        for index in MultiIndex::all(self.n, self.degree) {
            let value = self.get(&index);
            for p in &perms {
                if self.get(&p.apply(&index)?) != value {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Dense pairing `Σ_J φ_J T^J` of a co-tensor with a tensor.
pub fn dense_pair(phi: &DenseTensor, t: &DenseTensor) -> Result<Scalar> {
    check_pair_shape(phi.n, phi.degree, phi.variance, t.n, t.degree, t.variance)?;
    Ok(phi.components.iter().zip(&t.components).map(|(a, b)| a * b).sum())
}

fn check_pair_shape(
    n1: usize,
    l1: usize,
    v1: Variance,
    n2: usize,
    l2: usize,
    v2: Variance,
) -> Result<()> {
    if n1 != n2 || l1 != l2 {
        return Err(Error::ShapeMismatch(format!(
            "pairing (n={n1}, l={l1}) with (n={n2}, l={l2})"
        )));
    }
    if v1 != Variance::Covariant || v2 != Variance::Contravariant {
        return Err(Error::ShapeMismatch(
            "pairing expects a covariant left and a contravariant right argument".into(),
        ));
    }
    Ok(())
}

/// Symmetric tensor in compressed storage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymTensor {
    n: usize,
    degree: usize,
    variance: Variance,
    convention: Convention,
    components: Vec<Scalar>,
}

impl SymTensor {
    pub fn zeros(n: usize, degree: usize, variance: Variance, convention: Convention) -> Self {
        Self {
            n,
            degree,
            variance,
            convention,
            components: vec![Scalar::zero(); sym_dim(n, degree)],
        }
    }

    pub fn from_components(
        n: usize,
        degree: usize,
        variance: Variance,
        convention: Convention,
        components: Vec<Scalar>,
    ) -> Result<Self> {
        let expected = sym_dim(n, degree);
        if components.len() != expected {
            return Err(Error::LengthMismatch { expected, got: components.len() });
        }
        Ok(Self { n, degree, variance, convention, components })
    }

    /// `e_(𝐈)` (or `e^(𝐈)` when covariant): the symmetrized product of basis vectors.
    pub fn basis(n: usize, variance: Variance, index: &CardinalityIndex) -> Self {
        let mut t = Self::zeros(n, index.degree(), variance, Convention::Arrow);
        t.components[index.rank()] = Scalar::one();
        t
    }

    /// `←e_(𝐈) = (|𝐈|!/𝐈!) e_(𝐈)`.
    pub fn arrow_basis(n: usize, variance: Variance, index: &CardinalityIndex) -> Self {
        let mut t = Self::zeros(n, index.degree(), variance, Convention::Plain);
        t.components[index.rank()] = Scalar::one();
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Components in this tensor's own convention, in rank order.
    pub fn components(&self) -> &[Scalar] {
        &self.components
    }

    fn check_index(&self, index: &CardinalityIndex) {
        assert!(
            index.n() == self.n && index.degree() == self.degree,
            "index {index} does not address a degree-{} tensor over n={}",
            self.degree,
            self.n
        );
    }

    pub fn get(&self, index: &CardinalityIndex) -> &Scalar {
        self.check_index(index);
        &self.components[index.rank()]
    }

    pub fn set(&mut self, index: &CardinalityIndex, value: Scalar) {
        self.check_index(index);
        self.components[index.rank()] = value;
    }

    pub fn to_convention(&self, target: Convention) -> SymTensor {
        if target == self.convention {
            return self.clone();
        }
        let components = enumerate_nondecreasing(self.n, self.degree)
            .iter()
            .zip(&self.components)
            .map(|(idx, v)| {
                let m = scalar_of(idx.multiplicity());
                match target {
                    Convention::Arrow => v * m,
                    Convention::Plain => v / m,
                }
            })
            .collect();
        SymTensor { convention: target, components, ..*self }
    }

    fn plain_components(&self) -> Vec<Scalar> {
        self.to_convention(Convention::Plain).components
    }

    fn arrow_components(&self) -> Vec<Scalar> {
        self.to_convention(Convention::Arrow).components
    }
}

/// Lossless rescaling between the plain and arrow conventions.
pub fn convert_convention(s: &SymTensor, target: Convention) -> SymTensor {
    s.to_convention(target)
}

/// `S(T)_I = (1/l!) Σ_p T_p(I)`.
pub fn symmetrize_dense(t: &DenseTensor) -> Result<DenseTensor> {
    symmetrize_dense_with_cap(t, DEFAULT_PERMUTATION_CAP)
}

pub fn symmetrize_dense_with_cap(t: &DenseTensor, cap: usize) -> Result<DenseTensor> {
    let perms: Vec<_> = permutations_with_cap(t.degree, cap)?.collect();
    let count = Scalar::from_integer(BigInt::from(perms.len()));
    let mut out = DenseTensor::zeros(t.n, t.degree, t.variance);
    for (off, index) in MultiIndex::all(t.n, t.degree).enumerate() {
        let mut acc = Scalar::zero();
        for p in &perms {
            acc += t.get(&p.apply(&index)?);
        }
        out.components[off] = acc / &count;
    }
    Ok(out)
}

/// Reads a symmetric array at its canonical indices (plain convention).
pub fn compress(t: &DenseTensor) -> Result<SymTensor> {
    if !t.is_symmetric()? {
        return Err(Error::NotSymmetric);
    }
    let components = enumerate_nondecreasing(t.n, t.degree)
        .iter()
        .map(|idx| t.get(&idx.canonical()).clone())
        .collect();
    Ok(SymTensor {
        n: t.n,
        degree: t.degree,
        variance: t.variance,
        convention: Convention::Plain,
        components,
    })
}

/// `T^J = |ε|^J_𝐈 T^𝐈`: every ordered index receives the plain component of its sorted form.
pub fn include(s: &SymTensor) -> DenseTensor {
    let plain = s.plain_components();
    let components =
        MultiIndex::all(s.n, s.degree).map(|j| plain[j.cardinality().rank()].clone()).collect();
    DenseTensor { n: s.n, degree: s.degree, variance: s.variance, components }
}

/// `ψ(T) = Σ_𝐈 ←ψ_𝐈 T^𝐈` for covariant `ψ` and contravariant `T`.
pub fn pair(psi: &SymTensor, t: &SymTensor) -> Result<Scalar> {
    check_pair_shape(psi.n, psi.degree, psi.variance, t.n, t.degree, t.variance)?;
    let a = psi.arrow_components();
    let b = t.plain_components();
    Ok(a.iter().zip(&b).map(|(x, y)| x * y).sum())
}

/// `(ι*_S φ)_𝐈 = Σ_{J a permutation of 𝐈} φ_J`, returned in arrow convention.
pub fn cosymmetrize_project(phi: &DenseTensor) -> SymTensor {
    let mut components = vec![Scalar::zero(); sym_dim(phi.n, phi.degree)];
    for (off, j) in MultiIndex::all(phi.n, phi.degree).enumerate() {
        components[j.cardinality().rank()] += &phi.components[off];
    }
    SymTensor {
        n: phi.n,
        degree: phi.degree,
        variance: phi.variance,
        convention: Convention::Arrow,
        components,
    }
}

/// `S*(ψ)_J = (J!/|J|!) ψ_⟨J⟩`, with `ψ_𝐈` the arrow components.
pub fn cosymmetrize_extend(psi: &SymTensor) -> DenseTensor {
    let arrow = psi.arrow_components();
    let weighted: Vec<Scalar> = enumerate_nondecreasing(psi.n, psi.degree)
        .iter()
        .zip(arrow)
        .map(|(idx, v)| v / scalar_of(idx.multiplicity()))
        .collect();
    let components =
        MultiIndex::all(psi.n, psi.degree).map(|j| weighted[j.cardinality().rank()].clone()).collect();
    DenseTensor { n: psi.n, degree: psi.degree, variance: psi.variance, components }
}

/// Matrix of `S` from the dense space to plain compressed components:
/// `S^𝐈_J = (𝐈!/|𝐈|!) |ε|^𝐈_J`, shape `C(n+l-1,l) × n^l`.
pub fn symmetrization_matrix(n: usize, l: usize) -> Matrix {
    let classes = enumerate_nondecreasing(n, l);
    let mut m = Matrix::zeros(classes.len(), n.pow(l as u32));
    for (col, j) in MultiIndex::all(n, l).enumerate() {
        let row = j.cardinality().rank();
        let weight = Scalar::one() / scalar_of(classes[row].multiplicity());
        m.set(row, col, weight);
    }
    m
}

/// Matrix of the inclusion from plain compressed components: `(ι_S)^J_𝐈 = |ε|^J_𝐈`.
pub fn inclusion_matrix(n: usize, l: usize) -> Matrix {
    let mut m = Matrix::zeros(n.pow(l as u32), sym_dim(n, l));
    for (row, j) in MultiIndex::all(n, l).enumerate() {
        m.set(row, j.cardinality().rank(), Scalar::one());
    }
    m
}
