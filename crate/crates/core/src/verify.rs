//! Randomized and exhaustive identity suites run by `symjet verify`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::altforms::contraction_matrix;
use crate::error::{Error, Result};
use crate::hyperstress::{cauchy_traction, traction_density};
use crate::jet::{jet_of, realize, transform_1jet, truncate};
use crate::multiindex::{
    binomial, enumerate_nondecreasing, epsilon_abs, kron_delta, permutations_of, sym_dim,
    CardinalityIndex, MultiIndex,
};
use crate::altforms::restrict;
use crate::random::Sampler;
use crate::scalar::Scalar;
use crate::symtensor::{
    compress, cosymmetrize_extend, cosymmetrize_project, dense_pair, include, pair,
    symmetrize_dense, Convention, SymTensor, Variance,
};

pub const SUITES: &[&str] =
    &["dims", "epsilon", "projection", "duality", "adjoint", "jets", "cauchy", "contraction"];

/// Size bounds shared by all suites; each suite reads what it needs.
#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub n: usize,
    pub l: usize,
    pub m: usize,
    pub k: usize,
    pub seed: u64,
    pub samples: usize,
}

impl Default for SuiteParams {
    fn default() -> Self {
        Self { n: 3, l: 3, m: 2, k: 2, seed: 0, samples: 100 }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub cases: usize,
    pub failures: usize,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        Self { name: name.into(), checks: Vec::new() }
    }

    fn record(&mut self, label: impl Into<String>, results: impl IntoIterator<Item = bool>) {
        let mut cases = 0;
        let mut failures = 0;
        for ok in results {
            cases += 1;
            failures += usize::from(!ok);
        }
        self.checks.push(Check { label: label.into(), cases, failures });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.failures == 0 { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {}/{} cases={} failures={}", self.name, c.label, c.cases, c.failures)?;
        }
        Ok(())
    }
}

pub fn run_suite(name: &str, params: &SuiteParams) -> Result<SuiteReport> {
    match name {
        "dims" => dims(params),
        "epsilon" => epsilon(params),
        "projection" => projection(params),
        "duality" => duality(params),
        "adjoint" => adjoint(params),
        "jets" => jets(params),
        "cauchy" => cauchy(params),
        "contraction" => contraction(params),
        other => Err(Error::Parse(format!("unknown suite {other:?}; expected one of {SUITES:?}"))),
    }
}

fn dims(p: &SuiteParams) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("dims");
    let mut counts = Vec::new();
    let mut sums = Vec::new();
    for n in 1..=p.n {
        for l in 0..=p.l {
            let classes = enumerate_nondecreasing(n, l);
            counts.push(classes.len() == binomial(n + l - 1, l));
            let total: BigInt = classes.iter().map(CardinalityIndex::multiplicity).sum();
            sums.push(total == BigInt::from(n).pow(l as u32));
        }
    }
    r.record("count=C(n+l-1,l)", counts);
    r.record("multiplicity-sum=n^l", sums);
    Ok(r)
}

fn epsilon(p: &SuiteParams) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("epsilon");
    let mut rng = Sampler::new(p.seed);
    let mut delta = Vec::new();
    let mut cancel = Vec::new();
    let mut subst = Vec::new();
    for _ in 0..p.samples {
        let n = rng.rng_range(1, p.n);
        let l = rng.rng_range(0, p.l);
        let i = rng.multi_index(n, l);
        // half the time J is a rearrangement of I
        let j = if rng.coin() { rng.permutation(l).apply(&i)? } else { rng.multi_index(n, l) };
        let perms: Vec<_> = permutations_of(l)?.collect();
        let mut lhs = BigInt::zero();
        for q in &perms {
            lhs += BigInt::from(kron_delta(&i, &q.apply(&j)?)?);
        }
        delta.push(lhs == i.cardinality().factorial() * BigInt::from(epsilon_abs(&j, &i)));
        let base = epsilon_abs(&i, &j);
        cancel.push(perms.iter().all(|q| q.apply(&i).map(|pi| epsilon_abs(&pi, &j) == base).unwrap_or(false)));

        // Σ_{distinct J ~ 𝐈} T_J = (|𝐈|!/𝐈!) T_𝐈 for symmetric T
        let t = symmetrize_dense(&rng.dense_tensor(n, l, Variance::Covariant))?;
        let class = i.cardinality();
        let canonical = class.canonical();
        let sum: Scalar = MultiIndex::all(n, l)
            .filter(|jj| epsilon_abs(&canonical, jj) == 1)
            .map(|jj| t.get(&jj).clone())
            .sum();
        subst.push(sum == t.get(&canonical) * Scalar::from_integer(class.multiplicity()));
    }
    r.record("sum_p delta = I! |eps|", delta);
    r.record("|eps| invariant under p", cancel);
    r.record("epsilon substitution", subst);
    Ok(r)
}

fn projection(p: &SuiteParams) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("projection");
    let mut rng = Sampler::new(p.seed);
    let mut idem = Vec::new();
    let mut left = Vec::new();
    for n in 1..=p.n {
        for l in 0..=p.l {
            for _ in 0..p.samples {
                let t = rng.dense_tensor(n, l, Variance::Contravariant);
                let s = symmetrize_dense(&t)?;
                idem.push(symmetrize_dense(&s)? == s);
                let c = rng.sym_tensor(n, l, Variance::Contravariant, Convention::Plain);
                left.push(compress(&symmetrize_dense(&include(&c))?)? == c);
            }
        }
    }
    r.record("S∘S = S", idem);
    r.record("S∘ι = Id", left);
    Ok(r)
}

fn duality(p: &SuiteParams) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("duality");
    let mut checks = Vec::new();
    for n in 1..=p.n {
        for l in 0..=p.l {
            let classes = enumerate_nondecreasing(n, l);
            for a in &classes {
                let e = SymTensor::basis(n, Variance::Covariant, a);
                for b in &classes {
                    let f = SymTensor::arrow_basis(n, Variance::Contravariant, b);
                    let expected = Scalar::from_integer(BigInt::from(u8::from(a == b)));
                    checks.push(pair(&e, &f)? == expected);
                }
            }
        }
    }
    r.record("e^(I)(←e_(J)) = δ", checks);
    Ok(r)
}

fn adjoint(p: &SuiteParams) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("adjoint");
    let mut rng = Sampler::new(p.seed);
    let mut proj = Vec::new();
    let mut ext = Vec::new();
    for n in 1..=p.n {
        for l in 0..=p.l {
            for _ in 0..p.samples {
                let phi = rng.dense_tensor(n, l, Variance::Covariant);
                let t = rng.sym_tensor(n, l, Variance::Contravariant, Convention::Plain);
                proj.push(dense_pair(&phi, &include(&t))? == pair(&cosymmetrize_project(&phi), &t)?);
                let psi = rng.sym_tensor(n, l, Variance::Covariant, Convention::Arrow);
                let dense = rng.dense_tensor(n, l, Variance::Contravariant);
                let lhs = dense_pair(&cosymmetrize_extend(&psi), &dense)?;
                ext.push(lhs == pair(&psi, &compress(&symmetrize_dense(&dense)?)?)?);
            }
        }
    }
    r.record("ι*(φ)(T) = φ(ι T)", proj);
    r.record("S*(ψ)(T) = ψ(S T)", ext);
    Ok(r)
}

fn jets(p: &SuiteParams) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("jets");
    let mut rng = Sampler::new(p.seed);
    let mut roundtrip = Vec::new();
    let mut trunc = Vec::new();
    let mut functorial = Vec::new();
    for _ in 0..p.samples {
        let n = rng.rng_range(1, p.n);
        let m = rng.rng_range(1, p.m);
        let k = rng.rng_range(0, p.k);
        let a = rng.jet(n, m, k);
        roundtrip.push(jet_of(&realize(&a)?, a.point(), k)? == a);

        let w = rng.poly_field(n, m, k + 1);
        let x = rng.point(n);
        let full = jet_of(&w, &x, k)?;
        let l = rng.rng_range(0, k);
        trunc.push(truncate(&full, l)? == jet_of(&w, &x, l)?);

        let a1 = rng.jet(n, m, 1);
        let c1 = rng.chart(n, m, 2);
        let c2 = rng.chart(n, m, 2);
        let stepwise = transform_1jet(&transform_1jet(&a1, &c1)?, &c2)?;
        functorial.push(stepwise == transform_1jet(&a1, &c1.then(&c2)?)?);
    }
    r.record("jet_of∘realize = Id", roundtrip);
    r.record("truncate∘jet_of = jet_of", trunc);
    r.record("1-jet transform functorial", functorial);
    Ok(r)
}

fn cauchy(p: &SuiteParams) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("cauchy");
    let mut rng = Sampler::new(p.seed);
    let mut commute = Vec::new();
    let n = p.n.max(2);
    let k = p.k.max(1);
    for _ in 0..p.samples {
        let sigma = rng.traction_stress(n, p.m, k);
        let a = rng.jet(n, p.m, k - 1);
        let frame = rng.frame(n);
        let t = cauchy_traction(&sigma, &frame)?;
        commute.push(t.apply(&a)? == restrict(&traction_density(&sigma, &a)?, &frame)?);
    }
    r.record("t(A) = ρ(σ·A)", commute);
    Ok(r)
}

fn contraction(p: &SuiteParams) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("contraction");
    let mut ranks = Vec::new();
    for n in 1..=p.n {
        ranks.push(contraction_matrix(n)?.rank() == n);
    }
    r.record("rank(V⊗Λⁿ → Λⁿ⁻¹) = n", ranks);
    Ok(r)
}

impl Sampler {
    fn rng_range(&mut self, lo: usize, hi: usize) -> usize {
        use rand::Rng;
        self.rng().gen_range(lo..=hi.max(lo))
    }

    fn coin(&mut self) -> bool {
        use rand::Rng;
        self.rng().gen_bool(0.5)
    }
}

/// Symmetric dimension table row: `(l, C(n+l-1,l), n^l, Σ multiplicities)`.
pub fn dims_table(n: usize, kmax: usize) -> Vec<(usize, usize, BigInt, BigInt)> {
    (0..=kmax)
        .map(|l| {
            let total: BigInt = enumerate_nondecreasing(n, l).iter().map(CardinalityIndex::multiplicity).sum();
            (l, sym_dim(n, l), BigInt::from(n).pow(l as u32), total)
        })
        .collect()
}
