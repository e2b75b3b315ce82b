//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p symjet-core --test acceptance -- --nocapture` to see them.

mod oracle;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use oracle::{class_factorial, eps, fact, int, nondecreasing, perms, sorted, tuples};
use symjet_core::altforms::{contraction_matrix, restrict};
use symjet_core::hyperstress::{
    boundary_power_flux, boundary_power_flux_midpoint, cauchy_traction, traction_density,
};
use symjet_core::jet::{jet_of, realize, transform_1jet, ChartMap};
use symjet_core::multiindex::{
    epsilon_abs, enumerate_nondecreasing, kron_delta, permutations_of, rank, unrank,
};
use symjet_core::random::Sampler;
use symjet_core::symtensor::{
    compress, cosymmetrize_extend, cosymmetrize_project, dense_pair, include, inclusion_matrix, pair,
    symmetrization_matrix, symmetrize_dense,
};
use symjet_core::{
    BoxRegion, CardinalityIndex, Convention, DenseTensor, JetElement, Matrix, MultiIndex, Point,
    Polynomial, Scalar, SymTensor, TractionHyperStress, Variance,
};

fn report(id: u32, name: &str, ok: bool, detail: String) {
    println!("{} criterion {id} ({name}): {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {id} ({name}) failed: {detail}");
}

fn ci(n: usize, idx: &[usize]) -> CardinalityIndex {
    MultiIndex::new(n, idx.to_vec()).unwrap().cardinality()
}

fn mi(n: usize, idx: &[usize]) -> MultiIndex {
    MultiIndex::new(n, idx.to_vec()).unwrap()
}

/// Dense tensor from raw row-major components.
fn dense(n: usize, l: usize, variance: Variance, comps: Vec<Scalar>) -> DenseTensor {
    DenseTensor::from_components(n, l, variance, comps).unwrap()
}

#[test]
fn criterion_01_dimensions() {
    let start = Instant::now();
    let mut cases = 0;
    let mut ok = true;
    for n in 1..=5 {
        for l in 0..=6 {
            let classes = enumerate_nondecreasing(n, l);
            let brute = nondecreasing(n, l);
            ok &= BigInt::from(classes.len()) == oracle::binom(n + l - 1, l);
            ok &= classes.len() == brute.len();
            let listed: Vec<Vec<usize>> = classes.iter().map(|c| c.canonical().entries().to_vec()).collect();
            ok &= sorted_vecs(listed) == brute;
            let total: BigInt = classes.iter().map(|c| c.multiplicity()).sum();
            ok &= total == BigInt::from(n).pow(l as u32);
            // multiplicity against a direct count of orderings
            ok &= classes
                .iter()
                .all(|c| c.multiplicity() == BigInt::from(oracle::class_size(c.canonical().entries())));
            ok &= classes.iter().enumerate().all(|(r, c)| rank(c) == r && unrank(n, l, r).unwrap() == *c);
            cases += 1;
        }
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(1);
    report(1, "dimension identities", ok, format!("{cases} shapes n≤5 l≤6, {elapsed:.2?}"));
}

#[test]
fn criterion_02_epsilon_identities() {
    let start = Instant::now();
    let mut rng = Sampler::new(2);
    let mut tensors = 0;
    let mut checks = 0usize;
    let mut ok = true;
    for n in 1..=4 {
        for l in 0..=5 {
            let ps = perms(l);
            let lib: Vec<Vec<usize>> =
                permutations_of(l).unwrap().map(|p| p.map().iter().map(|a| a - 1).collect()).collect();
            ok &= sorted_vecs(lib) == sorted_vecs(ps.clone());
            let all = tuples(n, l);
            for _ in 0..9 {
                tensors += 1;
                let t: Vec<Scalar> = rng.rationals(all.len());
                let sym: Vec<Scalar> = symmetrize_raw(n, &t, l);
                for _ in 0..3 {
                    let i = rng.multi_index(n, l).entries().to_vec();
                    let j = if rng.rational() > Scalar::zero() {
                        oracle::apply(&ps[rng.multi_index(ps.len(), 1).entries()[0] - 1], &i)
                    } else {
                        rng.multi_index(n, l).entries().to_vec()
                    };
                    let (mi_i, mi_j) = (mi(n, &i), mi(n, &j));
                    let e = u8::from(eps(&i, &j));
                    ok &= epsilon_abs(&mi_i, &mi_j) == e;
                    // Σ_p δ^I_{p(J)} = 𝐈! |ε|^I_J
                    let lhs: usize = ps.iter().map(|p| usize::from(oracle::apply(p, &j) == i)).sum();
                    let lib_lhs: u32 = permutations_of(l)
                        .unwrap()
                        .map(|p| u32::from(kron_delta(&mi_i, &p.apply(&mi_j).unwrap()).unwrap()))
                        .sum();
                    let rhs = class_factorial(n, &i) * BigInt::from(e);
                    ok &= BigInt::from(lhs) == rhs && BigInt::from(lib_lhs) == rhs;
                    // |ε|^{p(I)}_J = |ε|^I_J for every p
                    ok &= ps.iter().all(|p| epsilon_abs(&mi(n, &oracle::apply(p, &i)), &mi_j) == e);
                    // Σ_p T_{p(I)} = 𝐈! Σ_J |ε|^J_I T_J
                    let by_perm: Scalar = ps.iter().map(|p| &t[oracle::offset(n, &oracle::apply(p, &i))]).sum();
                    let by_eps: Scalar = all
                        .iter()
                        .filter(|jj| epsilon_abs(&mi(n, jj), &mi_i) == 1)
                        .map(|jj| &t[oracle::offset(n, jj)])
                        .sum();
                    ok &= by_perm == int(class_factorial(n, &i)) * by_eps;
                    // symmetric T: Σ_J |ε|^J_I T_J = (|I|!/𝐈!) T_I
                    let subst: Scalar = all
                        .iter()
                        .filter(|jj| epsilon_abs(&mi(n, jj), &mi_i) == 1)
                        .map(|jj| &sym[oracle::offset(n, jj)])
                        .sum();
                    ok &= subst
                        == &sym[oracle::offset(n, &i)] * int(fact(l)) / int(class_factorial(n, &i));
                    checks += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    ok &= tensors >= 200 && elapsed < Duration::from_secs(10);
    report(
        2,
        "epsilon/permutation identities",
        ok,
        format!("{tensors} tensors, {checks} index pairs, n≤4 l≤5, {elapsed:.2?}"),
    );
}

fn sorted_vecs(mut v: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    v.sort();
    v
}

/// `(1/l!) Σ_p T_{p(I)}` on raw components.
fn symmetrize_raw(n: usize, t: &[Scalar], l: usize) -> Vec<Scalar> {
    let ps = perms(l);
    let count = int(ps.len());
    tuples(n, l)
        .iter()
        .map(|i| ps.iter().map(|p| &t[oracle::offset(n, &oracle::apply(p, i))]).sum::<Scalar>() / &count)
        .collect()
}

#[test]
fn criterion_03_projection() {
    let mut rng = Sampler::new(3);
    let mut ok = true;
    let mut cases = 0;
    for n in 1..=4 {
        for l in 0..=4 {
            let s_mat = symmetrization_matrix(n, l);
            let i_mat = inclusion_matrix(n, l);
            ok &= s_mat.mul(&i_mat).unwrap() == Matrix::identity(s_mat.rows());
            let p = i_mat.mul(&s_mat).unwrap();
            ok &= p.mul(&p).unwrap() == p;
            for _ in 0..100 {
                let t = rng.dense_tensor(n, l, Variance::Contravariant);
                let s = symmetrize_dense(&t).unwrap();
                ok &= symmetrize_dense(&s).unwrap() == s;
                let c = rng.sym_tensor(n, l, Variance::Contravariant, Convention::Plain);
                ok &= compress(&symmetrize_dense(&include(&c)).unwrap()).unwrap() == c;
                cases += 1;
            }
        }
    }
    report(3, "S∘S = S and S∘ι = Id", ok, format!("{cases} random tensors, n≤4 l≤4"));
}

#[test]
fn criterion_04_duality() {
    let mut ok = true;
    let mut pairs = 0;
    for n in 1..=3 {
        for l in 0..=4 {
            let l_fact = int(fact(l));
            for a in nondecreasing(n, l) {
                let e = SymTensor::basis(n, Variance::Covariant, &ci(n, &a));
                // e^(I) densely: (𝐈!/l!) on the class of I
                let e_dense: Vec<Scalar> = tuples(n, l)
                    .iter()
                    .map(|k| if eps(k, &a) { int(class_factorial(n, &a)) / &l_fact } else { Scalar::zero() })
                    .collect();
                ok &= include(&e).components() == &e_dense[..];
                for b in nondecreasing(n, l) {
                    let f = SymTensor::arrow_basis(n, Variance::Contravariant, &ci(n, &b));
                    // ←e_(J) densely: the indicator of the class of J
                    let f_dense: Vec<Scalar> = tuples(n, l).iter().map(|k| int(u8::from(eps(k, &b)))).collect();
                    ok &= include(&f).components() == &f_dense[..];
                    let expected = int(u8::from(a == b));
                    ok &= pair(&e, &f).unwrap() == expected;
                    ok &= oracle::dense_pair(&e_dense, &f_dense) == expected;
                    pairs += 1;
                }
            }
        }
    }
    report(4, "duality of symmetric bases", ok, format!("{pairs} basis pairs, n≤3 l≤4"));
}

#[test]
fn criterion_05_adjointness() {
    let mut rng = Sampler::new(5);
    let mut ok = true;
    let mut shapes = 0;
    for n in 1..=4 {
        for l in 0..=4 {
            shapes += 1;
            let all = tuples(n, l);
            for _ in 0..100 {
                let phi = rng.dense_tensor(n, l, Variance::Covariant);
                let t = rng.sym_tensor(n, l, Variance::Contravariant, Convention::Plain);
                let t_dense: Vec<Scalar> = all.iter().map(|j| t.get(&ci(n, j)).clone()).collect();
                let lhs = oracle::dense_pair(phi.components(), &t_dense);
                ok &= pair(&cosymmetrize_project(&phi), &t).unwrap() == lhs;

                let psi = rng.sym_tensor(n, l, Variance::Covariant, Convention::Arrow);
                let big_t = rng.dense_tensor(n, l, Variance::Contravariant);
                let st = compress(&symmetrize_dense(&big_t).unwrap()).unwrap();
                let rhs = pair(&psi, &st).unwrap();
                ok &= dense_pair(&cosymmetrize_extend(&psi), &big_t).unwrap() == rhs;
                // S*(ψ) by hand: ψ_⟨J⟩ / (number of orderings of J)
                let ext: Vec<Scalar> = all
                    .iter()
                    .map(|j| psi.get(&ci(n, j)) / int(oracle::class_size(&sorted(j))))
                    .collect();
                ok &= oracle::dense_pair(&ext, big_t.components()) == rhs;
            }
        }
    }
    report(5, "adjointness of ι*_S and S*", ok, format!("{shapes} shapes × 100 triples, n≤4 l≤4"));
}

fn terms(p: &Polynomial) -> oracle::Terms {
    p.terms().map(|(e, c)| (e.counts().to_vec(), c.clone())).collect()
}

#[test]
fn criterion_06_jet_round_trip() {
    let mut rng = Sampler::new(6);
    let mut ok = true;
    let mut cases = 0;
    for n in 1..=3 {
        for m in 1..=3 {
            for k in 0..=3 {
                for _ in 0..4 {
                    let a = rng.jet(n, m, k);
                    let w = realize(&a).unwrap();
                    ok &= jet_of(&w, a.point(), k).unwrap() == a;
                    for (alpha, idx) in a.slots() {
                        let d = oracle::derivative_at(&terms(w.component(alpha)), idx.counts(), a.point().coords());
                        ok &= &d == a.get(alpha, &idx);
                    }
                    cases += 1;
                }
            }
        }
    }
    report(6, "jet_of∘realize = Id", ok, format!("{cases} random jets, n,m≤3 k≤3"));
}

struct Chart {
    map: ChartMap,
    linear: Matrix,
    offset: Vec<Scalar>,
    frame: Vec<Vec<Polynomial>>,
}

fn random_chart(rng: &mut Sampler, n: usize, m: usize) -> Chart {
    let linear = rng.invertible_matrix(n);
    let offset = rng.rationals(n);
    let frame: Vec<Vec<Polynomial>> = (0..m).map(|_| (0..m).map(|_| rng.polynomial(n, 2)).collect()).collect();
    let map = ChartMap::new(linear.clone(), offset.clone(), frame.clone()).unwrap();
    Chart { map, linear, offset, frame }
}

/// Transformed 1-jet from the field `w'(y) = F(x(y)) w(x(y))`, with `w` the
/// affine field of `a` and derivatives taken along coordinate lines in `y`.
fn transform_by_field(a: &JetElement, c: &Chart) -> Vec<Vec<Scalar>> {
    let (n, m) = (a.n(), a.m());
    let x0 = a.point().coords().to_vec();
    let inv = c.linear.inverse().unwrap();
    assert_eq!(c.linear.mul(&inv).unwrap(), Matrix::identity(n));
    let w_at = |x: &[Scalar]| -> Vec<Scalar> {
        (1..=m)
            .map(|al| {
                let mut v = a.get(al, &CardinalityIndex::zero(n)).clone();
                for j in 0..n {
                    v += a.get(al, &CardinalityIndex::unit(n, j + 1).unwrap()) * (&x[j] - &x0[j]);
                }
                v
            })
            .collect()
    };
    let new_field = |y: &[Scalar]| -> Vec<Scalar> {
        let shifted: Vec<Scalar> = y.iter().zip(&c.offset).map(|(a, b)| a - b).collect();
        let x = inv.mul_vec(&shifted).unwrap();
        let w = w_at(&x);
        let pt = Point::new(x);
        (0..m).map(|r| (0..m).map(|col| c.frame[r][col].eval(&pt).unwrap() * &w[col]).sum()).collect()
    };
    let y0 = {
        let mut y = c.linear.mul_vec(&x0).unwrap();
        y.iter_mut().zip(&c.offset).for_each(|(a, b)| *a += b);
        y
    };
    let degree = c.frame.iter().flatten().map(Polynomial::degree).max().unwrap_or(0) + 1;
    let mut out = vec![new_field(&y0)];
    for i in 0..n {
        let samples: Vec<Vec<Scalar>> = (0..=degree)
            .map(|t| {
                let mut y = y0.clone();
                y[i] += int(t);
                new_field(&y)
            })
            .collect();
        out.push(
            (0..m)
                .map(|r| oracle::derivative_at_zero(&samples.iter().map(|s| s[r].clone()).collect::<Vec<_>>()))
                .collect(),
        );
    }
    out
}

fn jet_rows(a: &JetElement) -> Vec<Vec<Scalar>> {
    let n = a.n();
    let mut rows = vec![(1..=a.m()).map(|al| a.get(al, &CardinalityIndex::zero(n)).clone()).collect()];
    for i in 1..=n {
        rows.push((1..=a.m()).map(|al| a.get(al, &CardinalityIndex::unit(n, i).unwrap()).clone()).collect());
    }
    rows
}

#[test]
fn criterion_07_one_jet_functoriality() {
    let mut rng = Sampler::new(7);
    let mut ok = true;
    let mut cases = 0;
    for n in 1..=3 {
        for m in 1..=3 {
            for _ in 0..6 {
                let a = rng.jet(n, m, 1);
                let c1 = random_chart(&mut rng, n, m);
                let c2 = random_chart(&mut rng, n, m);
                let once = transform_1jet(&a, &c1.map).unwrap();
                let stepwise = transform_1jet(&once, &c2.map).unwrap();
                ok &= stepwise == transform_1jet(&a, &c1.map.then(&c2.map).unwrap()).unwrap();
                ok &= jet_rows(&once) == transform_by_field(&a, &c1);
                ok &= jet_rows(&stepwise) == transform_by_field(&once, &c2);
                ok &= transform_1jet(&a, &ChartMap::identity(n, m)).unwrap() == a;
                cases += 1;
            }
        }
    }
    report(7, "1-jet transformation functoriality", ok, format!("{cases} chart pairs, n,m≤3"));
}

#[test]
fn criterion_08_cauchy_commutation() {
    let mut rng = Sampler::new(8);
    let mut ok = true;
    let mut cases = 0;
    for n in 2..=4 {
        for m in 1..=2 {
            for k in 1..=3 {
                for _ in 0..6 {
                    let sigma = rng.traction_stress(n, m, k);
                    let a = rng.jet(n, m, k - 1);
                    let frame = rng.frame(n);
                    let raw: Vec<Vec<Scalar>> = frame.iter().map(|v| v.components().to_vec()).collect();
                    ok &= !oracle::det(&gram(&raw)).is_zero();
                    let t = cauchy_traction(&sigma, &frame).unwrap();
                    let lhs = t.apply(&a).unwrap();
                    ok &= lhs == restrict(&traction_density(&sigma, &a).unwrap(), &frame).unwrap();
                    ok &= lhs == oracle::restrict(&density_by_hand(&sigma, &a), &raw);
                    cases += 1;
                }
            }
        }
    }
    report(8, "Cauchy commutation", ok, format!("{cases} random (σ, A, frame), n≤4 m≤2 k≤3"));
}

fn gram(rows: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    rows.iter().map(|a| rows.iter().map(|b| oracle::dense_pair(a, b)).collect()).collect()
}

fn density_by_hand(sigma: &TractionHyperStress, a: &JetElement) -> Vec<Scalar> {
    let n = sigma.n();
    let mut out = vec![Scalar::zero(); n];
    for alpha in 1..=sigma.m() {
        for l in 0..sigma.order() {
            for j in nondecreasing(n, l) {
                let idx = ci(n, &j);
                for i in 1..=n {
                    out[i - 1] += sigma.get(alpha, &idx, i) * a.get(alpha, &idx);
                }
            }
        }
    }
    out
}

#[test]
fn criterion_09_contraction_rank() {
    let mut ok = true;
    let mut detail = Vec::new();
    for n in 1..=6 {
        let lib = contraction_matrix(n).unwrap();
        // ∂_i ⌟ dx on the frame omitting axis r is (-1)^{r-1} δ_ir
        let mut by_hand = vec![vec![Scalar::zero(); n]; n];
        for i in 0..n {
            for r in 0..n {
                let frame: Vec<Vec<Scalar>> = (0..n)
                    .filter(|&a| a != r)
                    .map(|a| (0..n).map(|b| int(u8::from(a == b))).collect())
                    .collect();
                let mut form = vec![Scalar::zero(); n];
                form[i] = int(1);
                by_hand[r][i] = oracle::restrict(&form, &frame);
            }
        }
        let rank = lib.rank();
        ok &= rank == n && !oracle::det(&by_hand).is_zero();
        ok &= (0..n).all(|r| (0..n).all(|i| lib.get(r, i) == &by_hand[r][i]));
        detail.push(format!("n={n}:{rank}"));
    }
    report(9, "contraction isomorphism", ok, format!("ranks {}", detail.join(" ")));
}

/// Least-squares slope of `log e` against `log h`.
fn fitted_order(hs: &[f64], errs: &[f64]) -> f64 {
    let xs: Vec<f64> = hs.iter().map(|h| h.ln()).collect();
    let ys: Vec<f64> = errs.iter().map(|e| e.ln()).collect();
    let mx = xs.iter().sum::<f64>() / xs.len() as f64;
    let my = ys.iter().sum::<f64>() / ys.len() as f64;
    let num: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    num / den
}

#[test]
fn criterion_10_flux_quadrature_convergence() {
    let start = Instant::now();
    let mut rng = Sampler::new(10);
    let levels = [4usize, 8, 16, 32];
    let mut orders = Vec::new();
    let mut ok = true;
    for case in 0..12 {
        let (n, m, k) = if case % 2 == 0 { (2, 2, 2) } else { (3, 1, 2) };
        let sigma = rng.traction_field(n, m, k, 2);
        let w = rng.poly_field(n, m, 3);
        let lower: Vec<Scalar> = (0..n).map(|_| rng.rational()).collect();
        let upper: Vec<Scalar> = lower.iter().map(|a| a + Scalar::new(BigInt::from(1 + case % 3), BigInt::from(2))).collect();
        let region = BoxRegion::new(lower, upper, 1).unwrap();
        let exact = boundary_power_flux(&sigma, &w, &region).unwrap().to_f64().unwrap();
        let mut hs = Vec::new();
        let mut errs = Vec::new();
        for &s in &levels {
            let approx = boundary_power_flux_midpoint(&sigma, &w, &region.with_subdivisions(s).unwrap()).unwrap();
            hs.push(1.0 / s as f64);
            errs.push((approx - exact).abs());
        }
        let order = fitted_order(&hs, &errs);
        ok &= order >= 1.9 && (order - 2.0).abs() <= 0.15;
        orders.push(order);
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(30);
    let shown: Vec<String> = orders.iter().map(|o| format!("{o:.3}")).collect();
    report(
        10,
        "flux midpoint convergence",
        ok,
        format!("{} pairs, observed orders [{}], {elapsed:.2?}", orders.len(), shown.join(", ")),
    );
}

#[test]
fn criterion_11_oracle_equivalence() {
    let mut rng = Sampler::new(11);
    let mut ok = true;
    let mut cases = 0;
    for n in 1..=3 {
        for l in 0..=3 {
            let classes = nondecreasing(n, l);
            let all = tuples(n, l);
            let basis = |c: &[usize]| -> Vec<Scalar> {
                classes.iter().map(|d| int(u8::from(d == c))).collect()
            };
            let mut inputs: Vec<Vec<Scalar>> = classes.iter().map(|c| basis(c)).collect();
            for _ in 0..20 {
                inputs.push(rng.rationals(classes.len()));
            }
            let build = |vals: &[Scalar], variance| {
                let mut s = SymTensor::zeros(n, l, variance, Convention::Plain);
                for (c, v) in classes.iter().zip(vals) {
                    s.set(&ci(n, c), v.clone());
                }
                s
            };
            // dense image of plain components: T_J = T_{sort J}
            let spread = |vals: &[Scalar]| -> Vec<Scalar> {
                all.iter().map(|j| vals[classes.iter().position(|c| *c == sorted(j)).unwrap()].clone()).collect()
            };

            for x in &inputs {
                let s = build(x, Variance::Contravariant);
                ok &= include(&s).components() == &spread(x)[..];
                let arrow = s.to_convention(Convention::Arrow);
                ok &= include(&arrow).components() == &spread(x)[..];
                for y in inputs.iter().take(classes.len() + 3) {
                    let psi = build(y, Variance::Covariant);
                    let expected = oracle::dense_pair(&spread(y), &spread(x));
                    ok &= pair(&psi, &s).unwrap() == expected;
                    ok &= pair(&psi.to_convention(Convention::Arrow), &arrow).unwrap() == expected;
                    cases += 1;
                }
            }

            let mut dense_inputs: Vec<Vec<Scalar>> =
                (0..all.len()).map(|i| (0..all.len()).map(|j| int(u8::from(i == j))).collect()).collect();
            for _ in 0..20 {
                dense_inputs.push(rng.rationals(all.len()));
            }
            for t in &dense_inputs {
                let expected = symmetrize_raw(n, t, l);
                let lib = symmetrize_dense(&dense(n, l, Variance::Contravariant, t.clone())).unwrap();
                ok &= lib.components() == &expected[..];
                let c = compress(&lib).unwrap();
                ok &= classes.iter().all(|cl| c.get(&ci(n, cl)) == &expected[oracle::offset(n, cl)]);
                cases += 1;
            }
        }
    }

    // traction_density against the dense contraction Σ_J T^{J i}_α w^α_,J
    for n in 1..=3usize {
        for m in 1..=2 {
            for k in 1..=4 {
                for _ in 0..10 {
                    let blocks: Vec<Vec<Vec<Scalar>>> = (0..k)
                        .map(|l| (0..m).map(|_| rng.rationals(n.pow(l as u32 + 1))).collect())
                        .collect();
                    let dense_blocks: Vec<Vec<DenseTensor>> = blocks
                        .iter()
                        .enumerate()
                        .map(|(l, per)| {
                            per.iter().map(|c| dense(n, l + 1, Variance::Contravariant, c.clone())).collect()
                        })
                        .collect();
                    let sigma = TractionHyperStress::from_dense(n, m, k, &dense_blocks).unwrap();
                    let a = rng.jet(n, m, k - 1);
                    let mut expected = vec![Scalar::zero(); n];
                    for (l, per) in blocks.iter().enumerate() {
                        for (al, comps) in per.iter().enumerate() {
                            for j in tuples(n, l) {
                                let w = a.get(al + 1, &ci(n, &j));
                                for i in 1..=n {
                                    let mut full = j.clone();
                                    full.push(i);
                                    expected[i - 1] += &comps[oracle::offset(n, &full)] * w;
                                }
                            }
                        }
                    }
                    ok &= traction_density(&sigma, &a).unwrap().coeffs() == &expected[..];
                    cases += 1;
                }
            }
        }
    }
    report(11, "oracle equivalence", ok, format!("{cases} comparisons, n≤3 l≤3 (traction k≤4)"));
}
