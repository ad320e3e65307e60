//! Benchmark fixtures.

use coxeterlab::{extended_canonical, tensor, truncated_linear, CartanAlgebra, Result};

/// Weight sequences of increasing size, all with spectral radius one.
pub const WEIGHTS: [&[u64]; 4] = [&[2, 3, 7], &[2, 3, 12], &[2, 2, 2, 2, 6], &[2, 2, 2, 2, 2, 2]];

pub fn weight_algebras() -> Result<Vec<CartanAlgebra>> {
    WEIGHTS.iter().map(|w| extended_canonical(w)).collect()
}

/// Tensor square of a truncated linear algebra on `n` vertices.
pub fn ladder_square(n: usize) -> Result<CartanAlgebra> {
    let a = truncated_linear(n, 2)?;
    tensor(&a, &a)
}
