//! Multi-index combinatorics.
//!
//! Axis indices are 1-based everywhere in the public surface. A
//! [`MultiIndex`] is an ordered tuple `i1 … il`; a [`CardinalityIndex`] is
//! its occurrence-count vector `(I1, …, In)`, which also names the canonical
//! non-decreasing representative of the permutation class.
//!
//! Non-decreasing indices of a fixed degree are ordered colexicographically
//! on their canonical sequences. Under the map `a_i ↦ a_i + i - 1` the
//! canonical sequences become strictly increasing `l`-subsets of
//! `{0, …, n + l - 2}`, so the combinatorial number system gives a closed
//! form rank `Σ C(b_i, i)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// Default upper bound on `l` for anything that enumerates `l!` permutations.
pub const DEFAULT_PERMUTATION_CAP: usize = 8;

/// Ordered tuple of 1-based axis indices over an `n`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    n: usize,
    entries: Vec<usize>,
}

impl MultiIndex {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if let Some(&index) = entries.iter().find(|&&e| e == 0 || e > n) {
            return Err(Error::AxisOutOfRange { index, n });
        }
        Ok(Self { n, entries })
    }

    /// The degree-0 index.
    pub fn empty(n: usize) -> Self {
        Self { n, entries: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Concatenation `IJ`.
    pub fn concat(&self, other: &MultiIndex) -> Result<MultiIndex> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: other.n });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Self { n: self.n, entries })
    }

    pub fn cardinality(&self) -> CardinalityIndex {
        let mut counts = vec![0; self.n];
        for &e in &self.entries {
            counts[e - 1] += 1;
        }
        CardinalityIndex { counts }
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] <= w[1])
    }

    /// Row-major offset with axis 1 slowest.
    pub fn dense_offset(&self) -> usize {
        self.entries.iter().fold(0, |acc, &e| acc * self.n + (e - 1))
    }

    pub fn from_dense_offset(n: usize, l: usize, mut offset: usize) -> Self {
        let mut entries = vec![0; l];
        for slot in entries.iter_mut().rev() {
            *slot = offset % n + 1;
            offset /= n;
        }
        Self { n, entries }
    }

    /// All `n^l` ordered multi-indices in dense (row-major) order.
    pub fn all(n: usize, l: usize) -> impl Iterator<Item = MultiIndex> {
        let total = n.pow(l as u32);
        (0..total).map(move |off| MultiIndex::from_dense_offset(n, l, off))
    }

    /// Parses `"1,2,2"`; the empty string is the degree-0 index.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty(n));
        }
        let entries = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid multi-index {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, entries)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Occurrence counts `(I1, …, In)`; the canonical non-decreasing index.
///
/// `Ord` is graded colexicographic on the canonical sequence, so sorted
/// collections iterate in rank order within each degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CardinalityIndex {
    counts: Vec<usize>,
}

impl CardinalityIndex {
    pub fn new(counts: Vec<usize>) -> Self {
        Self { counts }
    }

    pub fn zero(n: usize) -> Self {
        Self { counts: vec![0; n] }
    }

    /// The simple index `i` (1-based).
    pub fn unit(n: usize, axis: usize) -> Result<Self> {
        if axis == 0 || axis > n {
            return Err(Error::AxisOutOfRange { index: axis, n });
        }
        let mut counts = vec![0; n];
        counts[axis - 1] = 1;
        Ok(Self { counts })
    }

    pub fn n(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn degree(&self) -> usize {
        self.counts.iter().sum()
    }

    /// The non-decreasing multi-index `1…1 2…2 … n…n`.
    pub fn canonical(&self) -> MultiIndex {
        let mut entries = Vec::with_capacity(self.degree());
        for (r, &c) in self.counts.iter().enumerate() {
            entries.extend(std::iter::repeat_n(r + 1, c));
        }
        MultiIndex { n: self.n(), entries }
    }

    /// `𝐈! = I1! ⋯ In!`
    pub fn factorial(&self) -> BigInt {
        self.counts.iter().map(|&c| factorial(c)).product()
    }

    /// `|𝐈|!/𝐈!`, the number of distinct orderings of the canonical index.
    pub fn multiplicity(&self) -> BigInt {
        factorial(self.degree()) / self.factorial()
    }

    pub fn add(&self, other: &CardinalityIndex) -> CardinalityIndex {
        debug_assert_eq!(self.n(), other.n());
        CardinalityIndex {
            counts: self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect(),
        }
    }

    /// Partial order `self ≤ other` (componentwise).
    pub fn le(&self, other: &CardinalityIndex) -> bool {
        self.n() == other.n() && self.counts.iter().zip(&other.counts).all(|(a, b)| a <= b)
    }

    /// `other - self`, defined when `self ≤ other`.
    pub fn sub_from(&self, other: &CardinalityIndex) -> Option<CardinalityIndex> {
        if !self.le(other) {
            return None;
        }
        Some(CardinalityIndex {
            counts: other.counts.iter().zip(&self.counts).map(|(a, b)| a - b).collect(),
        })
    }

    /// Colexicographic rank among indices of the same degree.
    pub fn rank(&self) -> usize {
        let mut rank = 0;
        let mut i = 0;
        for (axis, &c) in self.counts.iter().enumerate() {
            for _ in 0..c {
                i += 1;
                rank += binomial(axis + i - 1, i);
            }
        }
        rank
    }

    pub fn unrank(n: usize, l: usize, mut rank: usize) -> Result<Self> {
        let count = sym_dim(n, l);
        if rank >= count {
            return Err(Error::RankOutOfRange { rank, count });
        }
        let mut counts = vec![0; n];
        let mut top = n + l - 1;
        for i in (1..=l).rev() {
            let mut b = top - 1;
            while binomial(b, i) > rank {
                b -= 1;
            }
            rank -= binomial(b, i);
            counts[b + 1 - i] += 1;
            top = b;
        }
        Ok(Self { counts })
    }

    /// Parses a counts string `"I1,…,In"` with exactly `n` entries.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let counts: Vec<usize> = if s.is_empty() {
            Vec::new()
        } else {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("invalid cardinality index {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        if counts.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: counts.len() });
        }
        Ok(Self { counts })
    }
}

impl fmt::Display for CardinalityIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl Ord for CardinalityIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.n().cmp(&other.n()))
            .then_with(|| {
                let a = self.canonical();
                let b = other.canonical();
                a.entries.iter().rev().cmp(b.entries.iter().rev())
            })
    }
}

impl PartialOrd for CardinalityIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A bijection of `{1, …, l}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let l = map.len();
        let mut seen = vec![false; l];
        for &v in &map {
            if v == 0 || v > l || seen[v - 1] {
                return Err(Error::InvalidPermutation(l));
            }
            seen[v - 1] = true;
        }
        Ok(Self { map })
    }

    pub fn identity(l: usize) -> Self {
        Self { map: (1..=l).collect() }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// `self ∘ other`, i.e. `r ↦ self(other(r))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.len(), got: other.len() });
        }
        Ok(Permutation { map: other.map.iter().map(|&r| self.map[r - 1]).collect() })
    }

    /// `p(I) = I ∘ p`.
    pub fn apply(&self, index: &MultiIndex) -> Result<MultiIndex> {
        if self.len() != index.len() {
            return Err(Error::LengthMismatch { expected: self.len(), got: index.len() });
        }
        Ok(MultiIndex {
            n: index.n,
            entries: self.map.iter().map(|&r| index.entries[r - 1]).collect(),
        })
    }
}

/// Iterator over all `l!` permutations in lexicographic order.
#[derive(Clone, Debug)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // next lexicographic permutation
        if let Some(i) = (1..succ.len()).rev().find(|&i| succ[i - 1] < succ[i]) {
            let pivot = i - 1;
            let j = (i..succ.len()).rev().find(|&j| succ[j] > succ[pivot]).unwrap();
            succ.swap(pivot, j);
            succ[i..].reverse();
            self.next = Some(succ);
        }
        Some(Permutation { map: current })
    }
}

pub fn permutations_of(l: usize) -> Result<Permutations> {
    permutations_with_cap(l, DEFAULT_PERMUTATION_CAP)
}

pub fn permutations_with_cap(l: usize, cap: usize) -> Result<Permutations> {
    if l > cap {
        return Err(Error::DegreeExceedsCap { degree: l, cap });
    }
    Ok(Permutations { next: Some((1..=l).collect()) })
}

pub fn cardinality(index: &MultiIndex) -> CardinalityIndex {
    index.cardinality()
}

pub fn mi_factorial(index: &CardinalityIndex) -> BigInt {
    index.factorial()
}

pub fn multiplicity(index: &CardinalityIndex) -> BigInt {
    index.multiplicity()
}

pub fn apply_permutation(p: &Permutation, index: &MultiIndex) -> Result<MultiIndex> {
    p.apply(index)
}

/// `|ε|^I_J`: 1 iff `J` is a rearrangement of `I`.
pub fn epsilon_abs(i: &MultiIndex, j: &MultiIndex) -> u8 {
    if i.len() != j.len() {
        return 0;
    }
    let mut a = i.entries.clone();
    let mut b = j.entries.clone();
    a.sort_unstable();
    b.sort_unstable();
    u8::from(a == b)
}

/// `δ^I_J` for ordered multi-indices of equal length.
pub fn kron_delta(i: &MultiIndex, j: &MultiIndex) -> Result<u8> {
    if i.len() != j.len() {
        return Err(Error::LengthMismatch { expected: i.len(), got: j.len() });
    }
    Ok(u8::from(i.entries == j.entries))
}

/// Non-decreasing indices of degree `l` in colexicographic order.
pub fn enumerate_nondecreasing(n: usize, l: usize) -> Vec<CardinalityIndex> {
    let mut out = Vec::with_capacity(sym_dim(n, l));
    if n == 0 {
        if l == 0 {
            out.push(CardinalityIndex::zero(0));
        }
        return out;
    }
    // 0-based canonical sequence
    let mut seq = vec![0usize; l];
    loop {
        let mut counts = vec![0; n];
        for &a in &seq {
            counts[a] += 1;
        }
        out.push(CardinalityIndex { counts });
        let bump = (0..l).find(|&i| {
            let ceiling = if i + 1 == l { n - 1 } else { seq[i + 1] };
            seq[i] < ceiling
        });
        match bump {
            Some(i) => {
                seq[i] += 1;
                seq[..i].fill(0);
            }
            None => break,
        }
    }
    out
}

/// Non-decreasing indices of all degrees `0..=k`, graded.
pub fn enumerate_graded(n: usize, k: usize) -> Vec<CardinalityIndex> {
    (0..=k).flat_map(|l| enumerate_nondecreasing(n, l)).collect()
}

pub fn rank(index: &CardinalityIndex) -> usize {
    index.rank()
}

pub fn unrank(n: usize, l: usize, rank: usize) -> Result<CardinalityIndex> {
    CardinalityIndex::unrank(n, l, rank)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * (n + 1 - i) as u128 / i as u128;
    }
    acc as usize
}

/// `C(n + l - 1, l)`, the number of non-decreasing indices of degree `l`.
pub fn sym_dim(n: usize, l: usize) -> usize {
    if n == 0 {
        return usize::from(l == 0);
    }
    binomial(n + l - 1, l)
}

pub fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
