//! Fixtures shared by the benchmarks.

use hypbill::polygon::regular_side_length;
use hypbill::BilliardSequence;

/// Free sides of a mildly irregular 2k-gon, two percent off regular in an alternating pattern.
pub fn irregular_free_sides(k: usize) -> Vec<f64> {
    let s0 = regular_side_length(k);
    (0..2 * k - 3)
        .map(|i| if i % 2 == 0 { s0 * 1.02 } else { s0 * 0.98 })
        .collect()
}

pub fn sequence(labels: &[usize]) -> BilliardSequence {
    BilliardSequence::new(labels.to_vec()).expect("valid fixture sequence")
}
