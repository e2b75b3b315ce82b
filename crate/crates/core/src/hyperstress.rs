//! Variational and traction hyper-stresses, hyper-tractions, and exact
//! power / flux integration over coordinate boxes.
//!
//! Box faces are oriented outward: on the face `x^i = upper_i` the frame is
//! `(∂_1, …, ∂̂_i, …, ∂_n)` with its first vector scaled by `(-1)^{i-1}`, so
//! that `∂_i ⌟ dx` restricts to `+1`; on `x^i = lower_i` the sign is
//! reversed.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::altforms::{check_frame, restrict, CoDimOneForm, Vector};
use crate::error::{Error, Result};
use crate::jet::{jet_slots, pair_jet, JetCovector, JetElement};
use crate::multiindex::{sym_dim, CardinalityIndex, MultiIndex};
use crate::polyfield::{FloatPolynomial, Point, PolyField, Polynomial};
use crate::scalar::{self, Scalar};
use crate::symtensor::DenseTensor;

/// `S = S^𝐈_α ∂_(𝐈) ⊗ e^α ⊗ dx`, stored with the jet-dual layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariationalHyperStress {
    components: JetCovector,
}

impl VariationalHyperStress {
    pub fn zeros(n: usize, m: usize, k: usize) -> Self {
        Self { components: JetCovector::zeros(n, m, k) }
    }

    pub fn from_covector(components: JetCovector) -> Self {
        Self { components }
    }

    pub fn covector(&self) -> &JetCovector {
        &self.components
    }

    pub fn get(&self, alpha: usize, index: &CardinalityIndex) -> &Scalar {
        self.components.get(alpha, index)
    }

    pub fn set(&mut self, alpha: usize, index: &CardinalityIndex, value: Scalar) {
        self.components.set(alpha, index, value);
    }
}

/// Coefficient of the power density `S(j^k w) = S^𝐈_α w^α_,𝐈 dx`.
pub fn power_density(s: &VariationalHyperStress, a: &JetElement) -> Result<Scalar> {
    pair_jet(&s.components, a)
}

/// `σ = σ^{𝐉j}_α ∂_(𝐉) ⊗ e^α ⊗ (∂_j ⌟ dx)` for `0 ≤ |𝐉| ≤ k-1`.
///
/// Each order block is almost symmetric: symmetric in `𝐉`, free in `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TractionHyperStress {
    n: usize,
    m: usize,
    k: usize,
    blocks: Vec<Vec<Scalar>>,
}

impl TractionHyperStress {
    pub fn zeros(n: usize, m: usize, k: usize) -> Self {
        let blocks = (0..k).map(|l| vec![Scalar::zero(); m * n * sym_dim(n, l)]).collect();
        Self { n, m, k, blocks }
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

    fn offset(&self, alpha: usize, index: &CardinalityIndex, j: usize) -> usize {
        assert!(alpha >= 1 && alpha <= self.m, "fiber index {alpha} out of range");
        assert!(j >= 1 && j <= self.n, "axis {j} out of range");
        assert!(index.degree() < self.k, "order {} not below k={}", index.degree(), self.k);
        let dim = sym_dim(self.n, index.degree());
        ((alpha - 1) * dim + index.rank()) * self.n + (j - 1)
    }

    /// `σ^{𝐉j}_α`.
    pub fn get(&self, alpha: usize, index: &CardinalityIndex, j: usize) -> &Scalar {
        let off = self.offset(alpha, index, j);
        &self.blocks[index.degree()][off]
    }

    pub fn set(&mut self, alpha: usize, index: &CardinalityIndex, j: usize, value: Scalar) {
        let off = self.offset(alpha, index, j);
        self.blocks[index.degree()][off] = value;
    }

    /// All `(α, 𝐉, j)` slots, graded by `|𝐉|`.
    pub fn slots(&self) -> Vec<(usize, CardinalityIndex, usize)> {
        traction_slots(self.n, self.m, self.k)
    }

    /// Builds the stress from dense per-order arrays `T^{J j}` (degree `l+1`,
    /// last index free), `dense[l][α-1]`. The `𝐉` slot collects every ordering
    /// of `𝐉`, so `σ · j^{k-1}w` equals the dense contraction `Σ_J T^{Jj} w_,J`.
    pub fn from_dense(n: usize, m: usize, k: usize, dense: &[Vec<DenseTensor>]) -> Result<Self> {
        if dense.len() != k {
            return Err(Error::LengthMismatch { expected: k, got: dense.len() });
        }
        let mut out = Self::zeros(n, m, k);
        for (l, per_alpha) in dense.iter().enumerate() {
            if per_alpha.len() != m {
                return Err(Error::LengthMismatch { expected: m, got: per_alpha.len() });
            }
            for (a, t) in per_alpha.iter().enumerate() {
                if t.n() != n || t.degree() != l + 1 {
                    return Err(Error::ShapeMismatch(format!(
                        "order-{l} block must have n={n}, degree {}",
                        l + 1
                    )));
                }
                for (off, full) in MultiIndex::all(n, l + 1).enumerate() {
                    let (head, last) = full.entries().split_at(l);
                    let idx = MultiIndex::new(n, head.to_vec())?.cardinality();
                    let o = out.offset(a + 1, &idx, last[0]);
                    out.blocks[l][o] += &t.components()[off];
                }
            }
        }
        Ok(out)
    }
}

pub fn traction_slots(n: usize, m: usize, k: usize) -> Vec<(usize, CardinalityIndex, usize)> {
    if k == 0 {
        return Vec::new();
    }
    jet_slots(n, m, k - 1)
        .into_iter()
        .flat_map(|(alpha, idx)| (1..=n).map(move |j| (alpha, idx.clone(), j)))
        .collect()
}

/// Averages a degree-`l+1` tensor over permutations of its first `l` indices.
pub fn symmetrize_leading(t: &DenseTensor) -> Result<DenseTensor> {
    let l = t.degree().checked_sub(1).ok_or_else(|| {
        Error::ShapeMismatch("almost symmetric tensors need degree ≥ 1".into())
    })?;
    let perms: Vec<_> = crate::multiindex::permutations_of(l)?.collect();
    let count = Scalar::from_integer(perms.len().into());
    let mut out = DenseTensor::zeros(t.n(), t.degree(), t.variance());
    for full in MultiIndex::all(t.n(), t.degree()) {
        let (head, last) = full.entries().split_at(l);
        let head = MultiIndex::new(t.n(), head.to_vec())?;
        let mut acc = Scalar::zero();
        for p in &perms {
            let moved = p.apply(&head)?.concat(&MultiIndex::new(t.n(), last.to_vec())?)?;
            acc += t.get(&moved);
        }
        out.set(&full, acc / &count);
    }
    Ok(out)
}

/// `σ · j^{k-1}w = σ^{𝐉i}_α w^α_,𝐉 (∂_i ⌟ dx)`.
pub fn traction_density(sigma: &TractionHyperStress, a: &JetElement) -> Result<CoDimOneForm> {
    if sigma.k == 0 || a.order() + 1 != sigma.k || a.n() != sigma.n || a.m() != sigma.m {
        return Err(Error::ShapeMismatch(format!(
            "traction stress (n={}, m={}, k={}) needs a jet of order k-1, got (n={}, m={}, order={})",
            sigma.n,
            sigma.m,
            sigma.k,
            a.n(),
            a.m(),
            a.order()
        )));
    }
    let mut coeffs = vec![Scalar::zero(); sigma.n];
    for (alpha, idx, j) in sigma.slots() {
        let s = sigma.get(alpha, &idx, j);
        if s.is_zero() {
            continue;
        }
        coeffs[j - 1] += s * a.get(alpha, &idx);
    }
    Ok(CoDimOneForm::new(coeffs))
}

/// Boundary flux density acting on `(k-1)`-jets, one coefficient per slot
/// relative to a fixed ordered boundary frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperTraction {
    components: JetCovector,
}

impl HyperTraction {
    pub fn covector(&self) -> &JetCovector {
        &self.components
    }

    pub fn get(&self, alpha: usize, index: &CardinalityIndex) -> &Scalar {
        self.components.get(alpha, index)
    }

    /// `t · j^{k-1}w`.
    pub fn apply(&self, a: &JetElement) -> Result<Scalar> {
        pair_jet(&self.components, a)
    }
}

/// Generalized Cauchy formula `t = ρ_∂R ∘ σ`: every slot `(α, 𝐉)` is the
/// restriction of the form with coefficients `σ^{𝐉·}_α` to `frame`.
pub fn cauchy_traction(sigma: &TractionHyperStress, frame: &[Vector]) -> Result<HyperTraction> {
    if sigma.k == 0 {
        return Err(Error::ShapeMismatch("traction stress of order 0".into()));
    }
    check_frame(sigma.n, frame)?;
    let mut t = JetCovector::zeros(sigma.n, sigma.m, sigma.k - 1);
    for (alpha, idx) in jet_slots(sigma.n, sigma.m, sigma.k - 1) {
        let coeffs = (1..=sigma.n).map(|j| sigma.get(alpha, &idx, j).clone()).collect();
        t.set(alpha, &idx, restrict(&CoDimOneForm::new(coeffs), frame)?);
    }
    Ok(HyperTraction { components: t })
}

/// Axis-aligned box `Π [lower_i, upper_i]` with a quadrature subdivision count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxRegion {
    lower: Vec<Scalar>,
    upper: Vec<Scalar>,
    subdivisions: usize,
}

impl BoxRegion {
    pub fn new(lower: Vec<Scalar>, upper: Vec<Scalar>, subdivisions: usize) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch { expected: lower.len(), got: upper.len() });
        }
        if let Some(i) = (0..lower.len()).find(|&i| lower[i] >= upper[i]) {
            return Err(Error::InvalidRegion(format!("axis {} has lower ≥ upper", i + 1)));
        }
        if subdivisions == 0 {
            return Err(Error::InvalidRegion("subdivisions must be positive".into()));
        }
        Ok(Self { lower, upper, subdivisions })
    }

    pub fn unit(n: usize) -> Self {
        Self { lower: vec![Scalar::zero(); n], upper: vec![Scalar::one(); n], subdivisions: 1 }
    }

    pub fn n(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[Scalar] {
        &self.lower
    }

    pub fn upper(&self) -> &[Scalar] {
        &self.upper
    }

    pub fn subdivisions(&self) -> usize {
        self.subdivisions
    }

    pub fn with_subdivisions(&self, subdivisions: usize) -> Result<Self> {
        Self::new(self.lower.clone(), self.upper.clone(), subdivisions)
    }

    /// Splits along `axis` (1-based) at `at`, which must lie strictly inside.
    pub fn split(&self, axis: usize, at: &Scalar) -> Result<(BoxRegion, BoxRegion)> {
        let i = axis - 1;
        if at <= &self.lower[i] || at >= &self.upper[i] {
            return Err(Error::InvalidRegion("split point outside the box".into()));
        }
        let mut a = self.clone();
        let mut b = self.clone();
        a.upper[i] = at.clone();
        b.lower[i] = at.clone();
        Ok((a, b))
    }

    pub fn faces(&self) -> Vec<BoxFace> {
        (1..=self.n())
            .flat_map(|axis| [BoxFace { axis, upper: false }, BoxFace { axis, upper: true }])
            .collect()
    }
}

/// One face `x^axis = lower` or `x^axis = upper` of a box.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxFace {
    pub axis: usize,
    pub upper: bool,
}

impl BoxFace {
    fn sign(&self) -> Scalar {
        let s = if (self.axis - 1).is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
        if self.upper {
            s
        } else {
            -s
        }
    }

    /// Outward-oriented frame of the face (needs `n ≥ 2`).
    pub fn frame(&self, n: usize) -> Vec<Vector> {
        let mut frame: Vec<Vector> =
            (1..=n).filter(|&a| a != self.axis).map(|a| Vector::basis(n, a)).collect();
        if let Some(first) = frame.first_mut() {
            *first = first.scale(&self.sign());
        }
        frame
    }

    /// `ρ(∂_j ⌟ dx)` on this face for each `j`: `±1` at `j = axis`, zero elsewhere.
    pub fn restriction_weights(&self, n: usize) -> Result<Vec<Scalar>> {
        if n == 1 {
            // a face is a point; the orientation is the bare sign
            let s = if self.upper { Scalar::one() } else { -Scalar::one() };
            return Ok(vec![s]);
        }
        let frame = self.frame(n);
        (1..=n).map(|j| restrict(&CoDimOneForm::basis(n, j), &frame)).collect()
    }

    fn value(&self, region: &BoxRegion) -> Scalar {
        if self.upper {
            region.upper[self.axis - 1].clone()
        } else {
            region.lower[self.axis - 1].clone()
        }
    }
}

/// Variational stress whose components are polynomials in `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariationalStressField {
    n: usize,
    m: usize,
    k: usize,
    slots: BTreeMap<(usize, CardinalityIndex), Polynomial>,
}

impl VariationalStressField {
    pub fn new(n: usize, m: usize, k: usize) -> Self {
        Self { n, m, k, slots: BTreeMap::new() }
    }

    pub fn constant(s: &VariationalHyperStress) -> Self {
        let phi = s.covector();
        let mut f = Self::new(phi.n(), phi.m(), phi.order());
        for (alpha, idx) in phi.slots() {
            f.insert(alpha, idx.clone(), Polynomial::constant(phi.n(), phi.get(alpha, &idx).clone()))
                .expect("slot from own layout");
        }
        f
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

    pub fn insert(&mut self, alpha: usize, index: CardinalityIndex, p: Polynomial) -> Result<()> {
        if alpha == 0 || alpha > self.m || index.n() != self.n || index.degree() > self.k || p.n() != self.n {
            return Err(Error::ShapeMismatch(format!("variational slot {alpha}|{index}")));
        }
        if p.is_zero() {
            self.slots.remove(&(alpha, index));
        } else {
            self.slots.insert((alpha, index), p);
        }
        Ok(())
    }

    pub fn slots(&self) -> impl Iterator<Item = (&(usize, CardinalityIndex), &Polynomial)> {
        self.slots.iter()
    }

    pub fn at(&self, x: &Point) -> Result<VariationalHyperStress> {
        let mut s = VariationalHyperStress::zeros(self.n, self.m, self.k);
        for ((alpha, idx), p) in &self.slots {
            s.set(*alpha, idx, p.eval(x)?);
        }
        Ok(s)
    }

    fn check_field(&self, w: &PolyField) -> Result<()> {
        if w.n() != self.n || w.m() != self.m {
            return Err(Error::ShapeMismatch(format!(
                "stress (n={}, m={}) against field (n={}, m={})",
                self.n,
                self.m,
                w.n(),
                w.m()
            )));
        }
        Ok(())
    }

    /// `x ↦ S(x)(j^k w(x))` as a polynomial.
    pub fn density_polynomial(&self, w: &PolyField) -> Result<Polynomial> {
        self.check_field(w)?;
        let mut total = Polynomial::zero(self.n);
        for ((alpha, idx), p) in &self.slots {
            let dw = w.component(*alpha).derive(idx)?;
            total = total.add(&p.mul(&dw)?)?;
        }
        Ok(total)
    }
}

/// Traction stress whose components are polynomials in `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TractionStressField {
    n: usize,
    m: usize,
    k: usize,
    slots: BTreeMap<(usize, CardinalityIndex, usize), Polynomial>,
}

impl TractionStressField {
    pub fn new(n: usize, m: usize, k: usize) -> Self {
        Self { n, m, k, slots: BTreeMap::new() }
    }

    pub fn constant(sigma: &TractionHyperStress) -> Self {
        let mut f = Self::new(sigma.n, sigma.m, sigma.k);
        for (alpha, idx, j) in sigma.slots() {
            let c = Polynomial::constant(sigma.n, sigma.get(alpha, &idx, j).clone());
            f.insert(alpha, idx, j, c).expect("slot from own layout");
        }
        f
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

    pub fn insert(&mut self, alpha: usize, index: CardinalityIndex, j: usize, p: Polynomial) -> Result<()> {
        if alpha == 0
            || alpha > self.m
            || j == 0
            || j > self.n
            || index.n() != self.n
            || index.degree() >= self.k
            || p.n() != self.n
        {
            return Err(Error::ShapeMismatch(format!("traction slot {alpha}|{index}|{j}")));
        }
        if p.is_zero() {
            self.slots.remove(&(alpha, index, j));
        } else {
            self.slots.insert((alpha, index, j), p);
        }
        Ok(())
    }

    pub fn slots(&self) -> impl Iterator<Item = (&(usize, CardinalityIndex, usize), &Polynomial)> {
        self.slots.iter()
    }

    pub fn at(&self, x: &Point) -> Result<TractionHyperStress> {
        let mut s = TractionHyperStress::zeros(self.n, self.m, self.k);
        for ((alpha, idx, j), p) in &self.slots {
            s.set(*alpha, idx, *j, p.eval(x)?);
        }
        Ok(s)
    }

    /// Coefficients `ω^j(x)` of `σ(x) · j^{k-1}w(x)` as polynomials.
    pub fn form_polynomials(&self, w: &PolyField) -> Result<Vec<Polynomial>> {
        if w.n() != self.n || w.m() != self.m {
            return Err(Error::ShapeMismatch(format!(
                "stress (n={}, m={}) against field (n={}, m={})",
                self.n,
                self.m,
                w.n(),
                w.m()
            )));
        }
        let mut out = vec![Polynomial::zero(self.n); self.n];
        for ((alpha, idx, j), p) in &self.slots {
            let dw = w.component(*alpha).derive(idx)?;
            out[j - 1] = out[j - 1].add(&p.mul(&dw)?)?;
        }
        Ok(out)
    }
}

fn check_region(n: usize, region: &BoxRegion) -> Result<()> {
    if region.n() != n {
        return Err(Error::DimensionMismatch { expected: n, got: region.n() });
    }
    Ok(())
}

/// `P = ∫_R S · j^k w`, exact.
pub fn total_power(s: &VariationalStressField, w: &PolyField, region: &BoxRegion) -> Result<Scalar> {
    check_region(s.n, region)?;
    s.density_polynomial(w)?.integrate_box(&region.lower, &region.upper)
}

/// Midpoint-rule approximation of [`total_power`] with `region.subdivisions()`
/// cells per axis, evaluating stress and jet pointwise in `f64`.
pub fn total_power_midpoint(s: &VariationalStressField, w: &PolyField, region: &BoxRegion) -> Result<f64> {
    check_region(s.n, region)?;
    s.check_field(w)?;
    let terms: Vec<(FloatPolynomial, FloatPolynomial)> = s
        .slots
        .iter()
        .map(|((alpha, idx), p)| Ok((p.to_float(), w.component(*alpha).derive(idx)?.to_float())))
        .collect::<Result<_>>()?;
    let axes: Vec<usize> = (0..s.n).collect();
    Ok(midpoint(region, &axes, &[], |x| terms.iter().map(|(a, b)| a.eval(x) * b.eval(x)).sum()))
}

/// `∫_∂R ρ(σ) · j^{k-1}w` over all `2n` outward-oriented faces, exact.
pub fn boundary_power_flux(sigma: &TractionStressField, w: &PolyField, region: &BoxRegion) -> Result<Scalar> {
    check_region(sigma.n, region)?;
    let forms = sigma.form_polynomials(w)?;
    let mut total = Scalar::zero();
    for face in region.faces() {
        total += face_flux(sigma.n, &forms, region, face)?;
    }
    Ok(total)
}

fn face_flux(n: usize, forms: &[Polynomial], region: &BoxRegion, face: BoxFace) -> Result<Scalar> {
    let weights = face.restriction_weights(n)?;
    let mut integrand = Polynomial::zero(n);
    for (form, wgt) in forms.iter().zip(&weights) {
        if !wgt.is_zero() {
            integrand = integrand.add(&form.scale(wgt))?;
        }
    }
    let at = face.value(region);
    integrand.integrate_face(&region.lower, &region.upper, Some((face.axis, &at)))
}

/// Midpoint-rule approximation of [`boundary_power_flux`].
pub fn boundary_power_flux_midpoint(
    sigma: &TractionStressField,
    w: &PolyField,
    region: &BoxRegion,
) -> Result<f64> {
    check_region(sigma.n, region)?;
    if w.n() != sigma.n || w.m() != sigma.m {
        return Err(Error::ShapeMismatch("stress and field shapes differ".into()));
    }
    let n = sigma.n;
    // (j, stress slot, derivative of w)
    let terms: Vec<(usize, FloatPolynomial, FloatPolynomial)> = sigma
        .slots
        .iter()
        .map(|((alpha, idx, j), p)| Ok((*j, p.to_float(), w.component(*alpha).derive(idx)?.to_float())))
        .collect::<Result<_>>()?;
    let mut total = 0.0;
    for face in region.faces() {
        let weights: Vec<f64> = face.restriction_weights(n)?.iter().map(scalar::to_f64).collect();
        let axes: Vec<usize> = (0..n).filter(|&a| a + 1 != face.axis).collect();
        let pinned = [(face.axis - 1, scalar::to_f64(&face.value(region)))];
        total += midpoint(region, &axes, &pinned, |x| {
            terms.iter().map(|(j, s, dw)| weights[j - 1] * s.eval(x) * dw.eval(x)).sum()
        });
    }
    Ok(total)
}

/// Tensor-product midpoint rule over `axes`, with the remaining coordinates pinned.
fn midpoint(region: &BoxRegion, axes: &[usize], pinned: &[(usize, f64)], f: impl Fn(&[f64]) -> f64) -> f64 {
    let n = region.n();
    let sub = region.subdivisions;
    let lo: Vec<f64> = region.lower.iter().map(scalar::to_f64).collect();
    let hi: Vec<f64> = region.upper.iter().map(scalar::to_f64).collect();
    let h: Vec<f64> = (0..n).map(|i| (hi[i] - lo[i]) / sub as f64).collect();
    let cell: f64 = axes.iter().map(|&a| h[a]).product();
    let mut x = vec![0.0; n];
    for &(a, v) in pinned {
        x[a] = v;
    }
    let cells = sub.pow(axes.len() as u32);
    let mut total = 0.0;
    for c in 0..cells {
        let mut rem = c;
        for &a in axes {
            x[a] = lo[a] + (rem % sub) as f64 * h[a] + 0.5 * h[a];
            rem /= sub;
        }
        total += f(&x);
    }
    total * cell
}
