//! Polynomial maps on Chevalley algebras: identity testing in `sl(2)`,
//! θ-separation witnesses, the constructive Engel solver, image scans over
//! finite fields and the central-value probe.

mod example48;
mod identity;
mod probe;
mod scan;
mod solve;
mod witness;

use crate::chevalley::{build_chevalley, ChevalleyAlgebra};
use crate::error::{Error, Result};
use crate::rootsystem::{build_root_system, RootType};
use crate::scalar::Field;

pub use example48::{example48_check, example48_closed_form, example48_corrected, example48_direct, example48_polynomial, Example48Check};
pub use identity::{is_identity_sl2, IdentityMode, IdentityReason, IdentityResult, IdentityVerdict};
pub use probe::{central_image_probe, engel, CentralHit, ProbeReport, ProbeRow};
pub use scan::{image_scan, ClassCounts, Hit, ImageReport, ScanMode, MISSED_SAMPLE};
pub use solve::{certificate_hash, engel_solve, EngelSolution};
pub use witness::{dominance_witness_check, dominance_witness_search, random_element, SearchResult, WitnessCheck, WitnessResult, WitnessSearch};

pub(crate) fn sl2<F: Field>(field: &F) -> Result<ChevalleyAlgebra<F>> {
    build_chevalley(build_root_system(RootType::A, 1, &field.descriptor())?, field.clone())
}

/// Run `f` on a pool of `workers` threads (`0` = one per core).
pub(crate) fn with_workers<R: Send>(workers: usize, f: impl FnOnce() -> R + Send) -> Result<R> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}
