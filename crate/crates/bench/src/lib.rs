//! Benchmark fixtures.

use lattice_ramsey::poset::{enumerate_posets_up_to_iso, linear_extensions};
use lattice_ramsey::{LinearOrderedPoset, Poset};

/// One representative of every poset class with 1 to `n` elements.
pub fn posets_up_to(n: usize) -> Vec<Poset> {
    (1..=n).flat_map(|k| enumerate_posets_up_to_iso(k).expect("within the enumeration bound")).collect()
}

/// Every linear extension of every poset class with 1 to `n` elements.
pub fn ordered_posets_up_to(n: usize) -> Vec<LinearOrderedPoset> {
    posets_up_to(n).iter().flat_map(linear_extensions).collect()
}
