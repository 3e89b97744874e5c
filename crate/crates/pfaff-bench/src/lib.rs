//! Deterministic fixtures for the criterion benchmarks, sized like the
//! library's real workloads: constant and linear skew matrices for the
//! pfaffian kernels, a rational cubic family member, and a canonical-form
//! solution over a small prime field.

use pfaff_core::cubic::{AffineCurvePoint, WeierstrassCurve};
use pfaff_core::quartic::{self, QuarticParams};
use pfaff_core::{Poly, Scalar, SkewPolyMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// ---- Matrix fixtures ----

/// A skew matrix with constant entries drawn deterministically from the seed.
pub fn constant_skew(n: usize, seed: u64) -> SkewPolyMatrix<Scalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = SkewPolyMatrix::new(n, 0).expect("even size");
    for i in 0..n {
        for j in (i + 1)..n {
            let c = Scalar::from_int(rng.gen_range(-9i64..=9));
            m.set(i, j, Poly::constant(c)).expect("in range");
        }
    }
    m
}

/// A skew matrix with linear entries drawn deterministically from the seed.
pub fn linear_skew(n: usize, seed: u64) -> SkewPolyMatrix<Scalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = SkewPolyMatrix::new(n, 1).expect("even size");
    for i in 0..n {
        for j in (i + 1)..n {
            let coeffs = [
                Scalar::from_int(rng.gen_range(-5i64..=5)),
                Scalar::from_int(rng.gen_range(-5i64..=5)),
                Scalar::from_int(rng.gen_range(-5i64..=5)),
            ];
            m.set(i, j, Poly::linear(coeffs)).expect("in range");
        }
    }
    m
}

// ---- Curve fixtures ----

/// The rational cubic family member with fractional arithmetic in play:
/// alpha = 2, beta = 3, based at (3, 6).
pub fn cubic_workload() -> (WeierstrassCurve, AffineCurvePoint) {
    let curve = WeierstrassCurve::new(Scalar::from_int(2), Scalar::from_int(3))
        .expect("valid coefficients");
    let pt = curve
        .point(Scalar::from_int(3), Scalar::from_int(6))
        .expect("on the curve");
    (curve, pt)
}

/// A canonical-form solution over F_11, found deterministically.
pub fn quartic_solution() -> QuarticParams {
    quartic::solve_over_prime_field(11, 1, 1_000_000, 1)
        .expect("solution within budget")
        .solutions
        .remove(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pfaff_core::Ring;

    #[test]
    fn test_fixtures_are_deterministic_and_valid() {
        let a = linear_skew(6, 7);
        assert_eq!(a, linear_skew(6, 7));
        assert_eq!(a.pfaffian(), a.pfaffian_matchings_oracle().unwrap());
        let c = constant_skew(8, 7);
        assert_eq!(c.entry_degree(), 0);
        let sol = quartic_solution();
        let residuals = quartic::residuals_at(&sol).unwrap();
        assert!(residuals.iter().all(|v| v.is_zero()));
    }
}
