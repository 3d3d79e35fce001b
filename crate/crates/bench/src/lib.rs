//! Shared fixtures for the benchmark suite: deterministic inputs sized to
//! exercise the hot paths without dwarfing the measurement.

use anyonic_core::presets::preset;
use anyonic_core::qla::QuantumLieAlgebra;
use anyonic_core::{Presentation, Word};

pub fn free_presentation() -> Presentation {
    preset("z18-free").unwrap().presentation().unwrap().unwrap()
}

pub fn nilpotent_presentation() -> Presentation {
    preset("z18-nilpotent")
        .unwrap()
        .presentation()
        .unwrap()
        .unwrap()
}

pub fn nonabelian_qla() -> QuantumLieAlgebra {
    preset("z18-nonabelian")
        .unwrap()
        .quantum_lie()
        .unwrap()
        .unwrap()
}

pub fn abelian_qla() -> QuantumLieAlgebra {
    preset("z18-abelian")
        .unwrap()
        .quantum_lie()
        .unwrap()
        .unwrap()
}

/// A maximally unsorted word over three generators: every adjacent pair is
/// a redex, so normalisation does the full quadratic work.
pub fn descending_word(len: usize) -> Word {
    Word::from_indices((0..len).map(|i| 2 - (i % 3) as u32).collect())
}
