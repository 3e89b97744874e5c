//! The complete family of determinantal and pfaffian representations of a
//! cubic in Weierstrass form, parametrized by affine curve points.
//!
//! The curve is F = -x1*x2^2 + x0^3 + alpha*x0*x1^2 + beta*x1^3 and the
//! parameter space is the set of (s, l) with l^2 = s^3 + alpha*s + beta,
//! which is exactly the affine part F(s, 1, l) = 0. Each point yields the
//! 3x3 determinantal representation
//!
//!   M(s, l) = x0*Id + x2*N + x1*C(s, l, alpha),
//!
//! with N the superdiagonal nilpotent and C the printed companion-style
//! block, and det M = F on the nose (scale 1). The 6x6 block matrix
//! [[0, M], [-M^t, 0]] is then the corresponding pfaffian representation.
//!
//! Invariants: every constructed representation is re-verified symbolically;
//! the determinantal scale is always 1 and the pfaffian scale is always the
//! d = 3 decomposable sign, independent of the point. The entries of C use
//! the constants 1/2 and 3/4, so prime fields need p > 3.

use crate::error::{Error, Result};
use crate::matrix::ConstMatrix;
use crate::poly::{Mono3, Poly};
use crate::reps::{decomposable_pfaffian, DeterminantalRep, PfaffianRep};
use crate::ring::Ring;
use crate::scalar::{joint_field, FieldSpec, Scalar};

/// A cubic in Weierstrass form: F = -x1*x2^2 + x0^3 + alpha*x0*x1^2 + beta*x1^3.
#[derive(Debug, Clone, PartialEq)]
pub struct WeierstrassCurve {
    alpha: Scalar,
    beta: Scalar,
}

impl WeierstrassCurve {
    /// Builds the curve from its two coefficients, promoting them into a
    /// common field. Smoothness is not enforced; see [`WeierstrassCurve::is_smooth`].
    pub fn new(alpha: Scalar, beta: Scalar) -> Result<WeierstrassCurve> {
        let field = joint_field(&[&alpha, &beta])?;
        Ok(WeierstrassCurve {
            alpha: alpha.try_into_field(field)?,
            beta: beta.try_into_field(field)?,
        })
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn beta(&self) -> &Scalar {
        &self.beta
    }

    pub fn field(&self) -> FieldSpec {
        self.alpha.field()
    }

    /// The homogeneous cubic F itself.
    pub fn poly(&self) -> Poly<Scalar> {
        weierstrass_poly(&self.alpha, &self.beta)
    }

    /// 4*alpha^3 + 27*beta^2: zero exactly when s^3 + alpha*s + beta has a
    /// repeated root, which away from characteristics 2 and 3 is the
    /// singularity test for the curve.
    pub fn discriminant(&self) -> Scalar {
        let four = Scalar::from_int(4).into_field(self.field());
        let twenty_seven = Scalar::from_int(27).into_field(self.field());
        four.mul(&self.alpha.pow(3))
            .add(&twenty_seven.mul(&self.beta.pow(2)))
    }

    /// Whether the discriminant test passes. A flag, not a gate: degenerate
    /// curves are still accepted everywhere, callers decide how to report.
    pub fn is_smooth(&self) -> bool {
        !self.discriminant().is_zero()
    }

    /// Validates (s, l) against l^2 = s^3 + alpha*s + beta and wraps it.
    pub fn point(&self, s: Scalar, l: Scalar) -> Result<AffineCurvePoint> {
        let field = joint_field(&[&self.alpha, &s, &l])?;
        let s = s.try_into_field(field)?;
        let l = l.try_into_field(field)?;
        let alpha = self.alpha.clone().try_into_field(field)?;
        let beta = self.beta.clone().try_into_field(field)?;
        let rhs = s.pow(3).add(&alpha.mul(&s)).add(&beta);
        if l.pow(2) != rhs {
            return Err(Error::PointNotOnCurve {
                s: s.to_string(),
                l: l.to_string(),
            });
        }
        Ok(AffineCurvePoint { s, l })
    }
}

/// A point (s, l) of the affine part F(s, 1, l) = 0, i.e. l^2 = s^3 + alpha*s + beta.
/// Constructed through [`WeierstrassCurve::point`], which validates the equation.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineCurvePoint {
    s: Scalar,
    l: Scalar,
}

impl AffineCurvePoint {
    pub fn s(&self) -> &Scalar {
        &self.s
    }

    pub fn l(&self) -> &Scalar {
        &self.l
    }
}

/// The Weierstrass cubic -x1*x2^2 + x0^3 + alpha*x0*x1^2 + beta*x1^3.
pub fn weierstrass_poly(alpha: &Scalar, beta: &Scalar) -> Poly<Scalar> {
    let field = joint_field(&[alpha, beta]).expect("coefficients in one field");
    let one = Scalar::field_one(field);
    Poly::from_terms(
        3,
        [
            (Mono3([3, 0, 0]), one.clone()),
            (Mono3([1, 2, 0]), alpha.clone().into_field(field)),
            (Mono3([0, 3, 0]), beta.clone().into_field(field)),
            (Mono3([0, 1, 2]), one.neg()),
        ],
    )
    .expect("all terms are degree 3")
}

/// The two constant blocks multiplying x2 and x1 in the family:
/// N is the superdiagonal nilpotent and C(s, l, alpha) is
/// [[s/2, l, alpha + (3/4)s^2], [0, -s, -l], [-1, 0, s/2]].
fn family_blocks(
    alpha: &Scalar,
    s: &Scalar,
    l: &Scalar,
    field: FieldSpec,
) -> Result<(ConstMatrix, ConstMatrix)> {
    if let FieldSpec::Prime(p) = field {
        if p <= 3 {
            return Err(Error::UnsupportedField(
                field.descriptor(),
                "the family matrix divides by 2 and 4, so p > 3 is required".into(),
            ));
        }
    }
    let s = s.clone().try_into_field(field)?;
    let l = l.clone().try_into_field(field)?;
    let alpha = alpha.clone().try_into_field(field)?;
    let zero = Scalar::field_zero(field);
    let one = Scalar::field_one(field);
    let half_s = s.div(&Scalar::from_int(2).into_field(field));
    let corner = alpha.add(
        &Scalar::from_ratio(3, 4)
            .try_into_field(field)?
            .mul(&s.pow(2)),
    );
    let n = ConstMatrix::from_rows(vec![
        vec![zero.clone(), one.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), one.clone()],
        vec![zero.clone(), zero.clone(), zero.clone()],
    ]);
    let c = ConstMatrix::from_rows(vec![
        vec![half_s.clone(), l.clone(), corner],
        vec![zero.clone(), s.neg(), l.neg()],
        vec![one.neg(), zero.clone(), half_s],
    ]);
    Ok((n, c))
}

/// The determinantal representation M(s, l) = x0*Id + x2*N + x1*C of the
/// curve at the given affine point, verified with scale exactly 1.
pub fn cubic_determinantal(
    curve: &WeierstrassCurve,
    pt: &AffineCurvePoint,
) -> Result<DeterminantalRep> {
    let field = joint_field(&[&curve.alpha, &pt.s, &pt.l])?;
    // Re-validate the point against this curve: points are only meaningful
    // together with the curve whose equation they satisfy.
    curve.point(pt.s.clone(), pt.l.clone())?;
    let (n, c) = family_blocks(&curve.alpha, &pt.s, &pt.l, field)?;
    let m0 = ConstMatrix::identity(3).into_field(field)?;
    let f = curve.poly().into_field(field)?;
    let rep = DeterminantalRep::verify([m0, c, n], f)?;
    assert_eq!(
        *rep.scale(),
        Scalar::field_one(field),
        "the family always has det M = F exactly"
    );
    Ok(rep)
}

/// The 6x6 pfaffian representation [[0, M], [-M^t, 0]] at the given point.
/// Its scale is the d = 3 decomposable sign (-1), independent of the point.
pub fn cubic_pfaffian(curve: &WeierstrassCurve, pt: &AffineCurvePoint) -> Result<PfaffianRep> {
    decomposable_pfaffian(&cubic_determinantal(curve, pt)?)
}

/// All affine points of the curve over F_p, found by exhausting s and
/// matching l against a table of squares. Output size is at most 2p.
pub fn enumerate_affine_points(curve: &WeierstrassCurve, p: u64) -> Result<Vec<AffineCurvePoint>> {
    let field = FieldSpec::parse(&format!("Fp:{p}"))?;
    let alpha = curve.alpha.clone().try_into_field(field)?;
    let beta = curve.beta.clone().try_into_field(field)?;
    let mut roots: Vec<Vec<u64>> = vec![Vec::new(); p as usize];
    for l in 0..p {
        let sq = Scalar::residue(l, p).pow(2);
        roots[sq.residue_value().expect("residue") as usize].push(l);
    }
    let mut points = Vec::new();
    for s in 0..p {
        let sv = Scalar::residue(s, p);
        let rhs = sv.pow(3).add(&alpha.mul(&sv)).add(&beta);
        for &l in &roots[rhs.residue_value().expect("residue") as usize] {
            points.push(AffineCurvePoint {
                s: sv.clone(),
                l: Scalar::residue(l, p),
            });
        }
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{corank_profile, enumerate_curve_points, gradient_identity_symbolic};

    fn qq(text: &str) -> Poly<Scalar> {
        Poly::parse(text, FieldSpec::Rational).unwrap()
    }

    fn curve_01() -> WeierstrassCurve {
        WeierstrassCurve::new(Scalar::from_int(0), Scalar::from_int(1)).unwrap()
    }

    #[test]
    fn test_weierstrass_poly_examples() {
        assert_eq!(curve_01().poly(), qq("x0^3 + x1^3 - x1*x2^2"));
        let cusp = WeierstrassCurve::new(Scalar::from_int(0), Scalar::from_int(0)).unwrap();
        assert_eq!(cusp.poly(), qq("x0^3 - x1*x2^2"));
        assert!(!cusp.is_smooth());
        assert!(curve_01().is_smooth());
        let generic =
            WeierstrassCurve::new(Scalar::from_ratio(2, 3), Scalar::from_int(-5)).unwrap();
        assert_eq!(generic.poly().degree(), 3);
        assert_eq!(generic.poly().term_count(), 4);
    }

    #[test]
    fn test_discriminant_values() {
        // (2,3): 4*8 + 27*9 = 275.
        let c = WeierstrassCurve::new(Scalar::from_int(2), Scalar::from_int(3)).unwrap();
        assert_eq!(c.discriminant(), Scalar::from_int(275));
        assert!(c.is_smooth());
    }

    #[test]
    fn test_point_validation() {
        let c = curve_01();
        assert!(c.point(Scalar::from_int(0), Scalar::from_int(1)).is_ok());
        assert!(c.point(Scalar::from_int(0), Scalar::from_int(-1)).is_ok());
        assert!(c.point(Scalar::from_int(2), Scalar::from_int(3)).is_ok());
        assert!(matches!(
            c.point(Scalar::from_int(1), Scalar::from_int(1)),
            Err(Error::PointNotOnCurve { .. })
        ));
        // Mixed fields promote: (0, 1) mod 5 is on the reduced curve.
        assert!(c
            .point(Scalar::residue(0, 5), Scalar::residue(4, 5))
            .is_ok());
        // Distinct primes do not mix.
        assert!(matches!(
            c.point(Scalar::residue(0, 5), Scalar::residue(1, 7)),
            Err(Error::UnsupportedField(..))
        ));
    }

    #[test]
    fn test_cubic_determinantal_printed_matrices() {
        let c = curve_01();
        let pt = c.point(Scalar::from_int(0), Scalar::from_int(1)).unwrap();
        let rep = cubic_determinantal(&c, &pt).unwrap();
        assert_eq!(*rep.scale(), Scalar::one());
        assert_eq!(rep.curve(), &qq("x0^3 + x1^3 - x1*x2^2"));
        let id = ConstMatrix::identity(3);
        let n = ConstMatrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        // C(0, 1, 0) = [[0, 1, 0], [0, 0, -1], [-1, 0, 0]].
        let cm = ConstMatrix::from_ints(&[&[0, 1, 0], &[0, 0, -1], &[-1, 0, 0]]);
        assert_eq!(rep.matrices(), &[id, cm, n]);
    }

    #[test]
    fn test_generic_point_determinant_is_curve() {
        // A fractional point on the (2, 3) curve: s = 1/4 gives
        // rhs = 1/64 + 1/2 + 3 = 225/64 = (15/8)^2.
        let c = WeierstrassCurve::new(Scalar::from_int(2), Scalar::from_int(3)).unwrap();
        let pt = c
            .point(Scalar::from_ratio(1, 4), Scalar::from_ratio(15, 8))
            .unwrap();
        let rep = cubic_determinantal(&c, &pt).unwrap();
        assert_eq!(*rep.scale(), Scalar::one());
        assert_eq!(rep.curve(), &qq("x0^3 + 2x0*x1^2 + 3x1^3 - x1*x2^2"));
    }

    #[test]
    fn test_opposite_points_differ() {
        let c = curve_01();
        let up = c.point(Scalar::from_int(0), Scalar::from_int(1)).unwrap();
        let down = c.point(Scalar::from_int(0), Scalar::from_int(-1)).unwrap();
        let r1 = cubic_determinantal(&c, &up).unwrap();
        let r2 = cubic_determinantal(&c, &down).unwrap();
        assert_ne!(r1.matrices(), r2.matrices());
    }

    #[test]
    fn test_cubic_pfaffian_scale_and_oracle() {
        let c = curve_01();
        let pt = c.point(Scalar::from_int(0), Scalar::from_int(1)).unwrap();
        let rep = cubic_pfaffian(&c, &pt).unwrap();
        assert_eq!(rep.size(), 6);
        assert_eq!(*rep.scale(), Scalar::from_int(-1));
        // Pf = -F, cross-checked against the matchings oracle.
        let pencil = rep.pencil();
        let pf = pencil.pfaffian();
        assert_eq!(pf, rep.curve().neg());
        assert_eq!(pf, pencil.pfaffian_matchings_oracle().unwrap());
        // The pfaffian family is exactly the decomposable construction.
        let dec = decomposable_pfaffian(&cubic_determinantal(&c, &pt).unwrap()).unwrap();
        assert_eq!(rep, dec);
    }

    #[test]
    fn test_corank_and_gradient_identity() {
        // Symbolic gradient identity over the rationals.
        let c = curve_01();
        let pt = c.point(Scalar::from_int(0), Scalar::from_int(1)).unwrap();
        let rep = cubic_pfaffian(&c, &pt).unwrap();
        assert!(gradient_identity_symbolic(&rep).unwrap());
        // Corank 2 at every curve point of a representation built over F_7.
        let c7 = WeierstrassCurve::new(Scalar::residue(0, 7), Scalar::residue(1, 7)).unwrap();
        let pt7 = &enumerate_affine_points(&c7, 7).unwrap()[0];
        let rep7 = cubic_pfaffian(&c7, pt7).unwrap();
        let samples = enumerate_curve_points(rep7.curve(), 7).unwrap();
        assert!(samples.len() >= 10);
        let report = corank_profile(&rep7, &samples).unwrap();
        assert!(
            report.flagged.is_empty(),
            "smooth cubic: corank 2 everywhere"
        );
    }

    #[test]
    fn test_enumerate_affine_points_f5() {
        let c = curve_01();
        let pts = enumerate_affine_points(&c, 5).unwrap();
        assert!(pts.len() <= 10);
        let has = |s: u64, l: u64| {
            pts.iter()
                .any(|pt| *pt.s() == Scalar::residue(s, 5) && *pt.l() == Scalar::residue(l, 5))
        };
        assert!(has(0, 1));
        assert!(has(0, 4));
        // Every enumerated point yields a verified representation with c = 1
        // and the same pfaffian scale.
        for pt in &pts {
            let rep = cubic_determinantal(&c, pt).unwrap();
            assert_eq!(*rep.scale(), Scalar::field_one(FieldSpec::Prime(5)));
            let pf = cubic_pfaffian(&c, pt).unwrap();
            assert_eq!(
                *pf.scale(),
                Scalar::from_int(-1).into_field(FieldSpec::Prime(5))
            );
        }
    }

    #[test]
    fn test_small_characteristic_rejected() {
        let c = curve_01();
        let pt = c
            .point(Scalar::residue(0, 3), Scalar::residue(1, 3))
            .unwrap();
        assert!(matches!(
            cubic_determinantal(&c, &pt),
            Err(Error::UnsupportedField(..))
        ));
    }

    #[test]
    fn test_point_from_wrong_curve_rejected() {
        let c = curve_01();
        let other = WeierstrassCurve::new(Scalar::from_int(2), Scalar::from_int(3)).unwrap();
        let pt = other
            .point(Scalar::from_int(3), Scalar::from_int(6))
            .unwrap();
        assert!(matches!(
            cubic_determinantal(&c, &pt),
            Err(Error::PointNotOnCurve { .. })
        ));
    }
}
