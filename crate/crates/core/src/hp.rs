//! Periodic cyclic cohomology tables assembled from homology dimensions.
//!
//! For an enveloping algebra of a focused quantum Lie algebra, the periodic
//! theory of a given parity is the direct sum of the Lie-algebra homologies
//! of that parity. Since the full sum is infinite, results are reported as
//! truncations at a cutoff together with the degree-focusing pattern, which
//! is the checkable content: a parity-`p` table supported only on degrees
//! `d = p*m (mod 2m)`.

use crate::homology::HomologyTable;
use std::collections::BTreeMap;

/// Truncated per-degree dimension totals of one parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HpTable {
    parity: u8,
    max_i: usize,
    totals: BTreeMap<u32, usize>,
}

impl HpTable {
    /// Assemble directly from per-degree totals (mainly for tests; prefer
    /// [`assemble_hp`]).
    pub fn new(parity: u8, max_i: usize, totals: BTreeMap<u32, usize>) -> Self {
        HpTable {
            parity: parity % 2,
            max_i,
            totals,
        }
    }

    pub fn parity(&self) -> u8 {
        self.parity
    }

    /// The truncation cutoff: homological degrees `i <= max_i` contribute.
    pub fn max_i(&self) -> usize {
        self.max_i
    }

    /// Per-`Z_n`-degree totals (only nonzero degrees are present).
    pub fn per_degree(&self) -> &BTreeMap<u32, usize> {
        &self.totals
    }

    /// The supported `Z_n` degrees.
    pub fn degrees(&self) -> Vec<u32> {
        self.totals.keys().copied().collect()
    }

    pub fn total(&self) -> usize {
        self.totals.values().sum()
    }
}

/// Sum the homology dimensions of the given parity for `i <= max_i`.
///
/// The result is a truncation of an infinite direct sum; totals can only
/// grow as the cutoff does.
pub fn assemble_hp(table: &HomologyTable, parity: u8, max_i: usize) -> HpTable {
    assert!(
        max_i <= table.max_i(),
        "homology table covers i <= {} but the requested cutoff is {}",
        table.max_i(),
        max_i
    );
    let parity = parity % 2;
    let mut totals: BTreeMap<u32, usize> = BTreeMap::new();
    for (&(i, degree), &dim) in table.entries() {
        if i <= max_i && i % 2 == usize::from(parity) {
            *totals.entry(degree).or_insert(0) += dim;
        }
    }
    HpTable {
        parity,
        max_i,
        totals,
    }
}

/// True iff every supported degree `d` satisfies `d = parity * m (mod 2m)`,
/// i.e. `d/m` is an integer whose parity matches the table's.
pub fn focusing_predicate(hp: &HpTable, m: u32) -> bool {
    hp.totals
        .keys()
        .all(|&d| d % m == 0 && (d / m) % 2 == u32::from(hp.parity))
}
