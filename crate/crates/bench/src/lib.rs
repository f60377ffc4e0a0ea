//! Inputs shared by the benchmarks.

use liemap_core::chevalley::AlgElement;
use liemap_core::*;

pub fn algebra(kind: RootType, rank: usize, p: u64) -> ChevalleyAlgebra<PrimeField> {
    let f = PrimeField::new(p).expect("prime");
    build_chevalley(build_root_system(kind, rank, &f.descriptor()).expect("supported"), f).expect("builds")
}

/// A dense element with coordinates `(seed + 7i) mod p`, deterministic and cheap.
pub fn dense_element(alg: &ChevalleyAlgebra<PrimeField>, seed: u32) -> AlgElement<u32> {
    let p = alg.field().modulus();
    (0..alg.dim() as u32).map(|i| (seed + 7 * i + i * i) % p).collect()
}

/// First noncentral element of the dense family, starting at `seed`.
pub fn noncentral_target(alg: &ChevalleyAlgebra<PrimeField>, seed: u32) -> AlgElement<u32> {
    (seed..).map(|s| dense_element(alg, s)).find(|x| !alg.is_central(x)).expect("noncentral elements exist")
}

pub const NORMAL_FORM_INPUT: &str = "[[[X,Y],[Z,X]],[Y,Z]] + 2*[[[[X,Y],Y],Z],X] - [[X,[Y,[Z,X]]],Y]";
