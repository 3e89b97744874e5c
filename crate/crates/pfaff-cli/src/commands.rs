//! Report builders: one function per CLI verb. Each reads its input files,
//! calls into pfaff-core, and renders a key-value text report (or a
//! representation file, when the result is itself a certificate).
//!
//! Determinism: reports depend only on the inputs and the seed; collections
//! are iterated in sorted order.

use pfaff_core::cubic::{self, WeierstrassCurve};
use pfaff_core::io;
use pfaff_core::quartic::{self, GroupElement, QuarticParams};
use pfaff_core::reps::{
    decomposable_pfaffian, format_point, representation_from_b, smoothness_probe, SectionMatrix,
};
use pfaff_core::{Error, FieldSpec, Mono3, Poly, Scalar, SkewPolyMatrix};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

type Result<T> = std::result::Result<T, Error>;

// ---- Shared plumbing ----

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// The scalar field a skew matrix lives in: the field of the first
/// non-rational entry, rational otherwise.
fn matrix_field(m: &SkewPolyMatrix<Scalar>) -> FieldSpec {
    m.upper_entries()
        .map(|(_, _, p)| p.field())
        .find(|f| *f != FieldSpec::Rational)
        .unwrap_or(FieldSpec::Rational)
}

/// Renders a monomial in the curve variables, `1` for the empty monomial.
fn format_monomial(m: &Mono3) -> String {
    let mut parts = Vec::new();
    for (name, &e) in ["x0", "x1", "x2"].iter().zip(m.0.iter()) {
        match e {
            0 => {}
            1 => parts.push((*name).to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

// ---- pf: pfaffian calculus ----

pub fn pf_compute(path: &Path) -> Result<String> {
    let m = io::read_skew_matrix(&read(path)?)?;
    let pf = m.pfaffian();
    Ok(format!(
        "n = {}\nentry_degree = {}\nfield = {}\npf = {}\n",
        m.size(),
        m.entry_degree(),
        matrix_field(&m),
        pf
    ))
}

pub fn pf_adjoint(path: &Path) -> Result<String> {
    let m = io::read_skew_matrix(&read(path)?)?;
    Ok(io::write_skew_matrix(&m.pfaffian_adjoint()?))
}

pub fn pf_verify(path: &Path) -> Result<String> {
    let rep = io::read_pfaffian_rep(&read(path)?)?;
    Ok(format!(
        "kind = pfaffian\nn = {}\nfield = {}\nc = {}\ncurve = {}\nverified = true\n",
        rep.size(),
        rep.curve().field(),
        rep.scale(),
        rep.curve()
    ))
}

// ---- det: determinantal representations ----

pub fn det_verify(path: &Path) -> Result<String> {
    let rep = io::read_determinantal_rep(&read(path)?)?;
    Ok(format!(
        "kind = determinantal\nd = {}\nfield = {}\nc = {}\ncurve = {}\nverified = true\n",
        rep.size(),
        rep.curve().field(),
        rep.scale(),
        rep.curve()
    ))
}

pub fn det_adjugate(path: &Path) -> Result<String> {
    let rep = io::read_determinantal_rep(&read(path)?)?;
    let adj = rep.adjugate_matrix();
    let mut out = format!(
        "d = {}\nentry_degree = {}\n",
        adj.size(),
        adj.entry_degree()
    );
    for i in 0..adj.size() {
        for j in 0..adj.size() {
            writeln!(out, "adj {} {} = {}", i + 1, j + 1, adj.get(i, j)).unwrap();
        }
    }
    Ok(out)
}

pub fn det_lift(path: &Path) -> Result<String> {
    let rep = io::read_determinantal_rep(&read(path)?)?;
    Ok(io::write_pfaffian_rep(&decomposable_pfaffian(&rep)?))
}

// ---- construct: section-matrix construction ----

pub fn construct_from_b(path: &Path, curve_text: &str) -> Result<String> {
    let b = io::read_skew_matrix(&read(path)?)?;
    let curve = Poly::parse(curve_text, matrix_field(&b))?;
    let rep = representation_from_b(&SectionMatrix::new(b, curve)?)?;
    Ok(io::write_pfaffian_rep(&rep))
}

// ---- cubic: the Weierstrass family ----

pub fn cubic_family(alpha: Scalar, beta: Scalar) -> Result<String> {
    let curve = WeierstrassCurve::new(alpha, beta)?;
    Ok(format!(
        "alpha = {}\nbeta = {}\nfield = {}\ncurve = {}\ndiscriminant = {}\nsmooth = {}\n",
        curve.alpha(),
        curve.beta(),
        curve.field(),
        curve.poly(),
        curve.discriminant(),
        curve.is_smooth()
    ))
}

pub fn cubic_point(
    alpha: Scalar,
    beta: Scalar,
    s: Scalar,
    l: Scalar,
    determinantal: bool,
) -> Result<String> {
    let curve = WeierstrassCurve::new(alpha, beta)?;
    let pt = curve.point(s, l)?;
    if determinantal {
        Ok(io::write_determinantal_rep(&cubic::cubic_determinantal(
            &curve, &pt,
        )?))
    } else {
        Ok(io::write_pfaffian_rep(&cubic::cubic_pfaffian(&curve, &pt)?))
    }
}

pub fn cubic_enumerate(alpha: Scalar, beta: Scalar, prime: u64) -> Result<String> {
    let curve = WeierstrassCurve::new(alpha, beta)?;
    let points = cubic::enumerate_affine_points(&curve, prime)?;
    let mut out = format!("prime = {prime}\ncount = {}\n", points.len());
    for (k, pt) in points.iter().enumerate() {
        writeln!(out, "point.{} = ({}, {})", k + 1, pt.s(), pt.l()).unwrap();
    }
    Ok(out)
}

// ---- quartic: the canonical form ----

pub fn quartic_relations() -> Result<String> {
    let mut out = String::new();
    for rel in quartic::derive_linear_relations()? {
        out.push_str(&rel.render());
        out.push('\n');
    }
    Ok(out)
}

pub fn quartic_residuals() -> Result<String> {
    let system = quartic::residual_system()?;
    let mut out = format!("count = {}\n", system.len());
    for (k, r) in system.iter().enumerate() {
        writeln!(out, "monomial.{} = {}", k + 1, format_monomial(&r.monomial)).unwrap();
        writeln!(
            out,
            "equation.{} = {}",
            k + 1,
            r.equation.format_with(&quartic::PARAM_NAMES)
        )
        .unwrap();
    }
    Ok(out)
}

fn read_reduced_params(
    path: &Path,
    field: FieldSpec,
) -> Result<(QuarticParams, Option<GroupElement>)> {
    let file = io::read_param_file(&read(path)?, field)?;
    let params = QuarticParams::reduced(file.values)?;
    let element = match file.action {
        Some([a, e, p]) => Some(GroupElement::new(a, e, p)?),
        None => None,
    };
    Ok((params, element))
}

pub fn quartic_act(path: &Path, field: FieldSpec) -> Result<String> {
    let (params, element) = read_reduced_params(path, field)?;
    let Some(g) = element else {
        return Err(Error::Parse {
            position: 0,
            message: "parameter file needs an 'action <a> <e> <p>' line".to_string(),
        });
    };
    let moved = quartic::apply_group_action(&params, &g)?;
    let values: BTreeMap<(usize, usize), Scalar> =
        moved.entries().map(|(&key, v)| (key, v.clone())).collect();
    Ok(io::write_param_file(&values, None))
}

pub fn quartic_invariants(path: &Path, field: FieldSpec) -> Result<String> {
    let (params, _) = read_reduced_params(path, field)?;
    let (i1, i2) = quartic::invariant_pair(&params)?;
    Ok(format!("I1 = {i1}\nI2 = {i2}\n"))
}

fn render_solutions(out: &mut String, solutions: &[QuarticParams]) {
    for (n, sol) in solutions.iter().enumerate() {
        for (&(i, j), v) in sol.entries() {
            writeln!(out, "solution.{}.c{i}{j} = {v}", n + 1).unwrap();
        }
    }
}

pub fn quartic_solve(prime: u64, seed: u64, budget: u64, max: usize) -> Result<String> {
    let outcome = quartic::solve_over_prime_field(prime, seed, budget, max)?;
    let mut out = format!(
        "prime = {prime}\nseed = {seed}\nbudget = {budget}\nattempts = {}\nsolutions = {}\n",
        outcome.attempts,
        outcome.solutions.len()
    );
    render_solutions(&mut out, &outcome.solutions);
    Ok(out)
}

pub fn quartic_dimension(prime: u64, samples: usize, seed: u64, budget: u64) -> Result<String> {
    let outcome = quartic::solve_over_prime_field(prime, seed, budget, samples)?;
    let estimate = quartic::moduli_dimension_estimate(&outcome.solutions, prime)?;
    let mut out = format!(
        "prime = {prime}\nseed = {seed}\nsamples = {}\n",
        outcome.solutions.len()
    );
    for (k, r) in estimate.jacobian_ranks.iter().enumerate() {
        writeln!(out, "rank.{} = {r}", k + 1).unwrap();
    }
    writeln!(out, "dimension = {}", estimate.dimension).unwrap();
    Ok(out)
}

// ---- curve: smoothness probe ----

pub fn curve_smooth(
    curve_text: &str,
    field: FieldSpec,
    primes: &[u64],
    allow_large: bool,
) -> Result<String> {
    let curve = Poly::parse(curve_text, field)?;
    let findings = smoothness_probe(&curve, primes, allow_large)?;
    let mut out = format!("curve = {curve}\n");
    let mut smooth = true;
    for f in &findings {
        match &f.singular_witness {
            Some(pt) => {
                smooth = false;
                writeln!(out, "witness.{} = {}", f.prime, format_point(pt)).unwrap();
            }
            None => writeln!(out, "witness.{} = none", f.prime).unwrap(),
        }
    }
    writeln!(out, "smooth = {smooth}").unwrap();
    Ok(out)
}

// ---- Tests ----

#[cfg(test)]
mod tests {
    use super::*;
    use pfaff_core::reps::section_matrix_from_determinantal;
    use pfaff_core::Ring;
    use std::io::Write as _;

    fn temp_file(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    fn sample_cubic_rep() -> pfaff_core::reps::PfaffianRep {
        let curve = WeierstrassCurve::new(Scalar::from_int(0), Scalar::from_int(1)).unwrap();
        let pt = curve
            .point(Scalar::from_int(0), Scalar::from_int(1))
            .unwrap();
        cubic::cubic_pfaffian(&curve, &pt).unwrap()
    }

    #[test]
    fn test_format_monomial() {
        assert_eq!(format_monomial(&Mono3([1, 3, 0])), "x0*x1^3");
        assert_eq!(format_monomial(&Mono3([0, 0, 1])), "x2");
        assert_eq!(format_monomial(&Mono3([0, 0, 0])), "1");
    }

    #[test]
    fn test_pf_verify_reports_core_scale() {
        let rep = sample_cubic_rep();
        let f = temp_file(&io::write_pfaffian_rep(&rep));
        let report = pf_verify(f.path()).unwrap();
        assert!(report.contains(&format!("c = {}", rep.scale())));
        assert!(report.contains("c = -1"));
        assert!(report.contains("n = 6"));
    }

    #[test]
    fn test_pf_compute_matches_core() {
        let rep = sample_cubic_rep();
        let pencil = rep.pencil();
        let f = temp_file(&io::write_skew_matrix(&pencil));
        let report = pf_compute(f.path()).unwrap();
        assert!(report.contains(&format!("pf = {}", pencil.pfaffian())));
    }

    #[test]
    fn test_adjoint_report_is_a_matrix_file() {
        let rep = sample_cubic_rep();
        let f = temp_file(&io::write_skew_matrix(&rep.pencil()));
        let report = pf_adjoint(f.path()).unwrap();
        let adj = io::read_skew_matrix(&report).unwrap();
        assert_eq!(adj, rep.pencil().pfaffian_adjoint().unwrap());
    }

    #[test]
    fn test_construct_from_b_reproduces_lift() {
        let curve = WeierstrassCurve::new(Scalar::from_int(1), Scalar::from_int(1)).unwrap();
        let pt = curve
            .point(Scalar::from_int(0), Scalar::from_int(1))
            .unwrap();
        let det = cubic::cubic_determinantal(&curve, &pt).unwrap();
        let b = section_matrix_from_determinantal(&det).unwrap();
        let f = temp_file(&io::write_skew_matrix(b.matrix()));
        let report = construct_from_b(f.path(), &det.curve().to_string()).unwrap();
        let expected = representation_from_b(&b).unwrap();
        assert_eq!(report, io::write_pfaffian_rep(&expected));
    }

    #[test]
    fn test_quartic_relations_report() {
        let report = quartic_relations().unwrap();
        let first = report.lines().next().unwrap();
        assert_eq!(first, "c48 = 1");
        assert_eq!(report.lines().count(), 7);
    }

    #[test]
    fn test_quartic_act_report_round_trips() {
        let mut values = BTreeMap::new();
        let mut lines = String::new();
        for (k, &(i, j)) in quartic::REDUCED_FREE.iter().enumerate() {
            let v = k as i64 % 3 - 1;
            values.insert((i, j), Scalar::from_int(v));
            lines.push_str(&format!("cij {i} {j} {v}\n"));
        }
        lines.push_str("action 2 5 3\n");
        let f = temp_file(&lines);
        let report = quartic_act(f.path(), FieldSpec::Rational).unwrap();
        let parsed = io::read_param_file(&report, FieldSpec::Rational).unwrap();
        assert_eq!(parsed.values.len(), quartic::REDUCED_FREE.len());
        // The three action-fixed parameters are unchanged.
        for key in [(2, 6), (4, 5), (4, 6)] {
            assert_eq!(parsed.values[&key], values[&key]);
        }
        // Missing action line is a parse error.
        let no_action: String = quartic::REDUCED_FREE
            .iter()
            .map(|&(i, j)| format!("cij {i} {j} 0\n"))
            .collect();
        let f = temp_file(&no_action);
        assert!(matches!(
            quartic_act(f.path(), FieldSpec::Rational),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn test_curve_smooth_report() {
        let report = curve_smooth(
            "x0^4 - x1*x2^3 - x1^4",
            FieldSpec::Rational,
            &[5, 11],
            false,
        )
        .unwrap();
        assert!(report.contains("witness.5 = none"));
        assert!(report.contains("smooth = true"));
        let report = curve_smooth("x0^3", FieldSpec::Rational, &[5], false).unwrap();
        assert!(report.contains("smooth = false"));
        assert!(report.contains("witness.5 = ("));
    }

    #[test]
    fn test_missing_file_is_io_error() {
        let e = pf_compute(Path::new("/nonexistent/matrix.skm")).unwrap_err();
        assert!(matches!(e, Error::Io(_)));
        assert!(!Scalar::from_int(1).is_zero());
    }
}
