//! Benchmark workloads shared by the criterion benches.

use curvesym_core::{make_curve, CurveIdeal};

/// A curve with empty caches, so every call measures the full computation.
pub fn fresh_curve(q: u32, m: u32) -> CurveIdeal {
    make_curve(q, m).expect("valid parameters")
}

/// Reduced basis size of the structural `p^(n)`.
pub fn structural_basis_len(q: u32, m: u32, n: u32) -> usize {
    fresh_curve(q, m)
        .symbolic_power_structural(n)
        .expect("n >= 1")
        .basis()
        .len()
}

/// Reduced basis size of `(p^n : x1^∞)`.
pub fn oracle_basis_len(q: u32, m: u32, n: u32) -> usize {
    fresh_curve(q, m)
        .symbolic_power_oracle(n)
        .expect("n >= 1")
        .basis()
        .len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_agree() {
        assert_eq!(structural_basis_len(1, 1, 3), oracle_basis_len(1, 1, 3));
    }
}
