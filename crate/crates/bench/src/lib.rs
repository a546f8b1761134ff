//! Shared fixtures for the benchmarks in `benches/`.

use cyclaut::construct::{ConstructionSpec, InnerGroup};
use cyclaut::{CyclicCode, Gf2Poly, Permutation};

pub fn code(n: usize, generator: &str) -> CyclicCode {
    CyclicCode::new(
        n,
        Gf2Poly::parse_product(generator).expect("valid polynomial"),
    )
    .expect("divisor of x^n - 1")
}

/// Generators of `(S_k)^n : Aut C(n, g)` on `k * n` points.
pub fn block_generators(k: usize, n: usize, generator: &str) -> Vec<Permutation> {
    let specs = [
        ConstructionSpec::BlockRows { k, n },
        ConstructionSpec::LiftedColumn {
            k,
            inner: InnerGroup::Brute {
                n,
                generator: generator.into(),
            },
        },
    ];
    specs
        .iter()
        .flat_map(|s| s.instantiate(k * n, n).expect("construction"))
        .map(|g| g.perm)
        .collect()
}
