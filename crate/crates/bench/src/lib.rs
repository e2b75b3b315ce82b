//! Fixtures shared by the criterion benches.

use symjet_core::random::Sampler;
use symjet_core::{Convention, DenseTensor, SymTensor, Variance};

pub fn dense_fixture(n: usize, l: usize, seed: u64) -> DenseTensor {
    Sampler::new(seed).dense_tensor(n, l, Variance::Contravariant)
}

pub fn sym_pair_fixture(n: usize, l: usize, seed: u64) -> (SymTensor, SymTensor) {
    let mut s = Sampler::new(seed);
    (
        s.sym_tensor(n, l, Variance::Covariant, Convention::Arrow),
        s.sym_tensor(n, l, Variance::Contravariant, Convention::Plain),
    )
}
