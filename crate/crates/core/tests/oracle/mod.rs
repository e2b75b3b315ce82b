//! Dense brute-force reference implementations. Nothing here goes through
//! the compressed layout, ranking, or the library's permutation machinery.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use symjet_core::Scalar;

pub fn fact(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn binom(a: usize, b: usize) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    fact(a) / (fact(b) * fact(a - b))
}

/// All permutations of `0..l` as index maps.
pub fn perms(l: usize) -> Vec<Vec<usize>> {
    if l == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in perms(l - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, l - 1);
            out.push(q);
        }
    }
    out
}

/// `p(I) = (i_{p(1)}, …, i_{p(l)})`.
pub fn apply(p: &[usize], idx: &[usize]) -> Vec<usize> {
    p.iter().map(|&a| idx[a]).collect()
}

/// Every ordered tuple over `1..=n` of length `l`, last entry fastest.
pub fn tuples(n: usize, l: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=n).map(move |a| {
                    let mut t = t.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn sorted(idx: &[usize]) -> Vec<usize> {
    let mut s = idx.to_vec();
    s.sort_unstable();
    s
}

pub fn nondecreasing(n: usize, l: usize) -> Vec<Vec<usize>> {
    tuples(n, l).into_iter().filter(|t| t.windows(2).all(|w| w[0] <= w[1])).collect()
}

pub fn eps(i: &[usize], j: &[usize]) -> bool {
    sorted(i) == sorted(j)
}

pub fn counts(n: usize, idx: &[usize]) -> Vec<usize> {
    let mut c = vec![0; n];
    for &a in idx {
        c[a - 1] += 1;
    }
    c
}

/// `𝐈! = Π I_r!`.
pub fn class_factorial(n: usize, idx: &[usize]) -> BigInt {
    counts(n, idx).into_iter().map(fact).product()
}

/// Number of distinct orderings of `idx`, counted directly.
pub fn class_size(idx: &[usize]) -> usize {
    let mut seen: Vec<Vec<usize>> = perms(idx.len()).iter().map(|p| apply(p, idx)).collect();
    seen.sort();
    seen.dedup();
    seen.len()
}

pub fn int(v: impl Into<BigInt>) -> Scalar {
    Scalar::from_integer(v.into())
}

/// Row-major offset with axis 1 slowest.
pub fn offset(n: usize, idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &a| acc * n + (a - 1))
}

pub fn dense_pair(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Leibniz expansion.
pub fn det(rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    let mut total = Scalar::zero();
    for p in perms(n) {
        let inversions = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count();
        let mut term: Scalar = (0..n).map(|r| rows[r][p[r]].clone()).product();
        if inversions % 2 == 1 {
            term = -term;
        }
        total += term;
    }
    total
}

/// `Σ_i ω^i det[e_i, v_1, …, v_{n-1}]`.
pub fn restrict(coeffs: &[Scalar], frame: &[Vec<Scalar>]) -> Scalar {
    let n = coeffs.len();
    let mut total = Scalar::zero();
    for (i, w) in coeffs.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let mut rows = vec![(0..n).map(|a| int(u8::from(a == i))).collect::<Vec<_>>()];
        rows.extend(frame.iter().cloned());
        total += w * det(&rows);
    }
    total
}

/// Sparse polynomial as `(exponents, coefficient)` terms.
pub type Terms = Vec<(Vec<usize>, Scalar)>;

/// `∂^𝐉 p (x)` by term-wise falling factorials.
pub fn derivative_at(terms: &Terms, j: &[usize], x: &[Scalar]) -> Scalar {
    let mut total = Scalar::zero();
    'term: for (exps, c) in terms {
        let mut v = c.clone();
        for (axis, (&e, &d)) in exps.iter().zip(j).enumerate() {
            if d > e {
                continue 'term;
            }
            let falling: BigInt = ((e - d + 1)..=e).map(BigInt::from).product();
            v *= int(falling);
            for _ in 0..(e - d) {
                v *= &x[axis];
            }
        }
        total += v;
    }
    total
}

/// `p'(0)` from samples `f(0), f(1), …, f(D)` of a polynomial of degree `≤ D`.
pub fn derivative_at_zero(samples: &[Scalar]) -> Scalar {
    let mut diffs = samples.to_vec();
    let mut total = Scalar::zero();
    for k in 1..samples.len() {
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        let term = &diffs[0] / int(k);
        if k % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}
