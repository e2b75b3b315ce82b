//! Seeded generators of random exact data for the identity suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::altforms::Vector;
use crate::hyperstress::{TractionHyperStress, TractionStressField, VariationalStressField};
use crate::jet::{jet_slots, ChartMap, JetCovector, JetElement};
use crate::linalg::Matrix;
use crate::multiindex::{enumerate_graded, CardinalityIndex, MultiIndex, Permutation};
use crate::polyfield::{Point, PolyField, Polynomial};
use crate::scalar::{ratio, Scalar};
use crate::symtensor::{Convention, DenseTensor, SymTensor, Variance};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// `p/q` with `|p| ≤ 9`, `1 ≤ q ≤ 5`.
    pub fn rational(&mut self) -> Scalar {
        ratio(self.rng.gen_range(-9..=9), self.rng.gen_range(1..=5))
    }

    pub fn nonzero_rational(&mut self) -> Scalar {
        loop {
            let r = self.rational();
            if r != Scalar::from_integer(0.into()) {
                return r;
            }
        }
    }

    pub fn rationals(&mut self, count: usize) -> Vec<Scalar> {
        (0..count).map(|_| self.rational()).collect()
    }

    pub fn multi_index(&mut self, n: usize, l: usize) -> MultiIndex {
        MultiIndex::new(n, (0..l).map(|_| self.rng.gen_range(1..=n)).collect())
            .expect("entries drawn in range")
    }

    pub fn permutation(&mut self, l: usize) -> Permutation {
        let mut map: Vec<usize> = (1..=l).collect();
        map.shuffle(&mut self.rng);
        Permutation::new(map).expect("shuffle of 1..=l")
    }

    pub fn dense_tensor(&mut self, n: usize, l: usize, variance: Variance) -> DenseTensor {
        let len = n.pow(l as u32);
        DenseTensor::from_components(n, l, variance, self.rationals(len)).expect("length n^l")
    }

    pub fn sym_tensor(&mut self, n: usize, l: usize, variance: Variance, convention: Convention) -> SymTensor {
        let len = crate::multiindex::sym_dim(n, l);
        SymTensor::from_components(n, l, variance, convention, self.rationals(len)).expect("length C(n+l-1,l)")
    }

    pub fn point(&mut self, n: usize) -> Point {
        Point::new(self.rationals(n))
    }

    /// Roughly half of the monomials of degree `≤ max_degree` get a coefficient.
    pub fn polynomial(&mut self, n: usize, max_degree: usize) -> Polynomial {
        let mut terms: Vec<(CardinalityIndex, Scalar)> = Vec::new();
        for idx in enumerate_graded(n, max_degree) {
            if self.rng.gen_bool(0.5) {
                terms.push((idx, self.rational()));
            }
        }
        Polynomial::from_terms(n, terms).expect("indices over n")
    }

    pub fn poly_field(&mut self, n: usize, m: usize, max_degree: usize) -> PolyField {
        let comps = (0..m).map(|_| self.polynomial(n, max_degree)).collect();
        PolyField::new(n, comps).expect("components over n")
    }

    pub fn jet(&mut self, n: usize, m: usize, k: usize) -> JetElement {
        let x = self.point(n);
        let mut jet = JetElement::zeros(m, k, x);
        for (alpha, idx) in jet_slots(n, m, k) {
            let v = self.rational();
            jet.set(alpha, &idx, v);
        }
        jet
    }

    pub fn jet_covector(&mut self, n: usize, m: usize, k: usize) -> JetCovector {
        let mut phi = JetCovector::zeros(n, m, k);
        for (alpha, idx) in jet_slots(n, m, k) {
            let v = self.rational();
            phi.set(alpha, &idx, v);
        }
        phi
    }

    pub fn traction_stress(&mut self, n: usize, m: usize, k: usize) -> TractionHyperStress {
        let mut s = TractionHyperStress::zeros(n, m, k);
        for (alpha, idx, j) in s.slots() {
            let v = self.rational();
            s.set(alpha, &idx, j, v);
        }
        s
    }

    pub fn traction_field(&mut self, n: usize, m: usize, k: usize, max_degree: usize) -> TractionStressField {
        let mut f = TractionStressField::new(n, m, k);
        for (alpha, idx, j) in TractionHyperStress::zeros(n, m, k).slots() {
            let p = self.polynomial(n, max_degree);
            f.insert(alpha, idx, j, p).expect("slot from layout");
        }
        f
    }

    pub fn variational_field(&mut self, n: usize, m: usize, k: usize, max_degree: usize) -> VariationalStressField {
        let mut f = VariationalStressField::new(n, m, k);
        for (alpha, idx) in jet_slots(n, m, k) {
            let p = self.polynomial(n, max_degree);
            f.insert(alpha, idx, p).expect("slot from layout");
        }
        f
    }

    /// `n - 1` independent vectors.
    pub fn frame(&mut self, n: usize) -> Vec<Vector> {
        loop {
            let frame: Vec<Vector> = (0..n - 1).map(|_| Vector::new(self.rationals(n))).collect();
            if crate::altforms::check_frame(n, &frame).is_ok() {
                return frame;
            }
        }
    }

    pub fn invertible_matrix(&mut self, n: usize) -> Matrix {
        loop {
            let rows = (0..n).map(|_| self.rationals(n)).collect();
            let m = Matrix::from_rows(rows).expect("square");
            if m.rank() == n {
                return m;
            }
        }
    }

    /// Affine chart with a polynomial frame of degree `≤ frame_degree`.
    pub fn chart(&mut self, n: usize, m: usize, frame_degree: usize) -> ChartMap {
        let linear = self.invertible_matrix(n);
        let offset = self.rationals(n);
        let frame = (0..m).map(|_| (0..m).map(|_| self.polynomial(n, frame_degree)).collect()).collect();
        ChartMap::new(linear, offset, frame).expect("invertible linear part")
    }
}
