//! Text formats for skew matrices, verified representations, and quartic
//! parameter files.
//!
//! All formats are line-oriented, exact, and round-trip bit-identically:
//! rationals print as "p/q", prime-field residues as their canonical
//! representative with the modulus carried by the field descriptor in the
//! header. Indices in files are 1-based; omitted entries are zero. Blank
//! lines and lines starting with '#' are ignored.
//!
//! - Skew matrix: `skew <n> <entry-degree> <field>` then `<i> <j> <poly>`
//!   per stored upper-triangle entry (i < j).
//! - Pfaffian representation: `pfaffrep <n> <field>`, blocks headed `A0`,
//!   `A1`, `A2` with constant entries in the skew line format, then
//!   `curve <poly>`.
//! - Determinantal representation: `detrep <d> <field>`, blocks `M0`, `M1`,
//!   `M2` with arbitrary (not skew) constant entries, then `curve <poly>`.
//! - Parameter file: `cij <i> <j> <scalar>` per parameter and at most one
//!   `action <a> <e> <p>` line.
//!
//! Representation files are certificates: reading one re-verifies the
//! pfaffian or determinant identity and fails if it does not hold.

use crate::error::{Error, Result};
use crate::matrix::ConstMatrix;
use crate::poly::Poly;
use crate::reps::{DeterminantalRep, PfaffianRep};
use crate::ring::Ring;
use crate::scalar::{FieldSpec, Scalar};
use crate::skew::SkewPolyMatrix;
use std::collections::BTreeMap;

fn parse_err(line_no: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position: line_no,
        message: message.into(),
    }
}

/// Content lines with their 1-based line numbers; comments and blanks
/// dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn split_entry(line: &str) -> Option<(usize, usize, &str)> {
    let mut it = line.splitn(3, char::is_whitespace);
    let i = it.next()?.parse().ok()?;
    let j = it.next()?.parse().ok()?;
    let rest = it.next()?.trim();
    if rest.is_empty() {
        return None;
    }
    Some((i, j, rest))
}

// ---- Skew matrix files ----

/// Renders a skew matrix of polynomials in the skew file format.
pub fn write_skew_matrix(m: &SkewPolyMatrix<Scalar>) -> String {
    let mut field = FieldSpec::Rational;
    for (_, _, p) in m.upper_entries() {
        if p.field() != FieldSpec::Rational {
            field = p.field();
        }
    }
    let mut out = format!(
        "skew {} {} {}\n",
        m.size(),
        m.entry_degree(),
        field.descriptor()
    );
    for (i, j, p) in m.upper_entries() {
        out.push_str(&format!("{} {} {}\n", i + 1, j + 1, p));
    }
    out
}

/// Parses the skew file format back into a matrix.
pub fn read_skew_matrix(text: &str) -> Result<SkewPolyMatrix<Scalar>> {
    let mut lines = content_lines(text);
    let (no, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty skew matrix file"))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 4 || parts[0] != "skew" {
        return Err(parse_err(
            no,
            "expected header: skew <n> <entry-degree> <field>",
        ));
    }
    let n: usize = parts[1]
        .parse()
        .map_err(|_| parse_err(no, "matrix size is not an integer"))?;
    let degree: u32 = parts[2]
        .parse()
        .map_err(|_| parse_err(no, "entry degree is not an integer"))?;
    let field = FieldSpec::parse(parts[3])?;
    let mut m = SkewPolyMatrix::new(n, degree)?;
    for (no, line) in lines {
        let (i, j, poly_text) = split_entry(line)
            .ok_or_else(|| parse_err(no, "expected entry line: <i> <j> <polynomial>"))?;
        if i < 1 || j < 1 {
            return Err(parse_err(no, "entry indices are 1-based"));
        }
        let p = Poly::parse(poly_text, field)?;
        m.set(i - 1, j - 1, p)?;
    }
    Ok(m)
}

// ---- Representation files ----

fn write_const_block(out: &mut String, head: &str, m: &ConstMatrix, skew_upper: bool) {
    out.push_str(head);
    out.push('\n');
    for i in 0..m.rows() {
        let start = if skew_upper { i + 1 } else { 0 };
        for j in start..m.cols() {
            let v = m.get(i, j);
            if !v.is_zero() {
                out.push_str(&format!("{} {} {}\n", i + 1, j + 1, v));
            }
        }
    }
}

fn rep_field(matrices: &[ConstMatrix; 3], curve: &Poly<Scalar>) -> FieldSpec {
    if curve.field() != FieldSpec::Rational {
        return curve.field();
    }
    for m in matrices {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let f = m.get(i, j).field();
                if f != FieldSpec::Rational {
                    return f;
                }
            }
        }
    }
    FieldSpec::Rational
}

/// Renders a verified pfaffian representation; only the upper triangles of
/// the coefficient matrices are stored.
pub fn write_pfaffian_rep(rep: &PfaffianRep) -> String {
    let field = rep_field(rep.matrices(), rep.curve());
    let mut out = format!("pfaffrep {} {}\n", rep.size(), field.descriptor());
    for (k, m) in rep.matrices().iter().enumerate() {
        write_const_block(&mut out, &format!("A{k}"), m, true);
    }
    out.push_str(&format!("curve {}\n", rep.curve()));
    out
}

/// Renders a verified determinantal representation with full blocks.
pub fn write_determinantal_rep(rep: &DeterminantalRep) -> String {
    let field = rep_field(rep.matrices(), rep.curve());
    let mut out = format!("detrep {} {}\n", rep.size(), field.descriptor());
    for (k, m) in rep.matrices().iter().enumerate() {
        write_const_block(&mut out, &format!("M{k}"), m, false);
    }
    out.push_str(&format!("curve {}\n", rep.curve()));
    out
}

struct RepFile {
    matrices: [ConstMatrix; 3],
    curve: Poly<Scalar>,
}

fn read_rep_file(text: &str, kind: &str, block_prefix: &str, skew: bool) -> Result<RepFile> {
    let mut lines = content_lines(text).peekable();
    let (no, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, format!("empty {kind} file")))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 3 || parts[0] != kind {
        return Err(parse_err(
            no,
            format!("expected header: {kind} <size> <field>"),
        ));
    }
    let size: usize = parts[1]
        .parse()
        .map_err(|_| parse_err(no, "matrix size is not an integer"))?;
    let field = FieldSpec::parse(parts[2])?;
    let mut matrices = [
        ConstMatrix::zero(size, size),
        ConstMatrix::zero(size, size),
        ConstMatrix::zero(size, size),
    ];
    let mut curve: Option<Poly<Scalar>> = None;
    let mut block: Option<usize> = None;
    for (no, line) in lines {
        if let Some(rest) = line.strip_prefix("curve") {
            if rest.starts_with(char::is_whitespace) {
                curve = Some(Poly::parse(rest.trim(), field)?);
                continue;
            }
        }
        if let Some(k) = line
            .strip_prefix(block_prefix)
            .and_then(|r| r.parse::<usize>().ok())
        {
            if k > 2 {
                return Err(parse_err(no, format!("unknown block {line}")));
            }
            block = Some(k);
            continue;
        }
        let (i, j, value) = split_entry(line)
            .ok_or_else(|| parse_err(no, "expected a block header, entry line, or curve line"))?;
        let k = block.ok_or_else(|| parse_err(no, "entry line before any block header"))?;
        if i < 1 || j < 1 || i > size || j > size {
            return Err(parse_err(no, "entry indices out of range"));
        }
        if skew && i >= j {
            return Err(parse_err(no, "skew blocks store only entries with i < j"));
        }
        let v = Scalar::parse(value, field)?;
        if skew {
            matrices[k].set(i - 1, j - 1, v.clone());
            matrices[k].set(j - 1, i - 1, v.neg());
        } else {
            matrices[k].set(i - 1, j - 1, v);
        }
    }
    let curve = curve.ok_or_else(|| parse_err(0, format!("{kind} file has no curve line")))?;
    Ok(RepFile { matrices, curve })
}

/// Parses and re-verifies a pfaffian representation file.
pub fn read_pfaffian_rep(text: &str) -> Result<PfaffianRep> {
    let f = read_rep_file(text, "pfaffrep", "A", true)?;
    PfaffianRep::verify(f.matrices, f.curve)
}

/// Parses and re-verifies a determinantal representation file.
pub fn read_determinantal_rep(text: &str) -> Result<DeterminantalRep> {
    let f = read_rep_file(text, "detrep", "M", false)?;
    DeterminantalRep::verify(f.matrices, f.curve)
}

// ---- Quartic parameter files ----

/// Contents of a parameter file: the assignments and the optional group
/// element triple, kept raw for the caller to validate.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamFile {
    pub values: BTreeMap<(usize, usize), Scalar>,
    pub action: Option<[Scalar; 3]>,
}

/// Parses `cij <i> <j> <scalar>` and `action <a> <e> <p>` lines, reading
/// scalars in the given field.
pub fn read_param_file(text: &str, field: FieldSpec) -> Result<ParamFile> {
    let mut values = BTreeMap::new();
    let mut action = None;
    for (no, line) in content_lines(text) {
        let parts: Vec<&str> = line.split_whitespace().collect();
        match parts.first().copied() {
            Some("cij") if parts.len() == 4 => {
                let i: usize = parts[1]
                    .parse()
                    .map_err(|_| parse_err(no, "cij index is not an integer"))?;
                let j: usize = parts[2]
                    .parse()
                    .map_err(|_| parse_err(no, "cij index is not an integer"))?;
                let v = Scalar::parse(parts[3], field)?;
                if values.insert((i, j), v).is_some() {
                    return Err(parse_err(no, format!("duplicate parameter c{i}{j}")));
                }
            }
            Some("action") if parts.len() == 4 => {
                if action.is_some() {
                    return Err(parse_err(no, "more than one action line"));
                }
                let a = Scalar::parse(parts[1], field)?;
                let e = Scalar::parse(parts[2], field)?;
                let p = Scalar::parse(parts[3], field)?;
                action = Some([a, e, p]);
            }
            _ => {
                return Err(parse_err(
                    no,
                    "expected 'cij <i> <j> <scalar>' or 'action <a> <e> <p>'",
                ))
            }
        }
    }
    Ok(ParamFile { values, action })
}

/// Renders parameter assignments (and an optional group element) in the
/// parameter file format.
pub fn write_param_file(
    values: &BTreeMap<(usize, usize), Scalar>,
    action: Option<&[Scalar; 3]>,
) -> String {
    let mut out = String::new();
    for (&(i, j), v) in values {
        out.push_str(&format!("cij {i} {j} {v}\n"));
    }
    if let Some([a, e, p]) = action {
        out.push_str(&format!("action {a} {e} {p}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::WeierstrassCurve;
    use crate::poly::Mono3;
    use crate::quartic::{self, QuarticParams};

    fn sample_skew() -> SkewPolyMatrix<Scalar> {
        let mut m = SkewPolyMatrix::new(4, 1).unwrap();
        m.set(0, 1, Poly::parse("x0 + 2*x1", FieldSpec::Rational).unwrap())
            .unwrap();
        m.set(1, 2, Poly::parse("-x2", FieldSpec::Rational).unwrap())
            .unwrap();
        m.set(
            2,
            3,
            Poly::parse("1/3*x0 - x1 + x2", FieldSpec::Rational).unwrap(),
        )
        .unwrap();
        m
    }

    #[test]
    fn test_skew_round_trip() {
        let m = sample_skew();
        let text = write_skew_matrix(&m);
        assert!(text.starts_with("skew 4 1 QQ\n"));
        let back = read_skew_matrix(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(write_skew_matrix(&back), text);
    }

    #[test]
    fn test_skew_round_trip_mod_p() {
        let m = sample_skew().into_field(FieldSpec::Prime(7)).unwrap();
        let text = write_skew_matrix(&m);
        assert!(text.starts_with("skew 4 1 Fp:7\n"));
        let back = read_skew_matrix(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn test_skew_parse_errors() {
        assert!(matches!(
            read_skew_matrix(""),
            Err(Error::Parse { position: 1, .. })
        ));
        assert!(matches!(
            read_skew_matrix("skew 4 1\n"),
            Err(Error::Parse { .. })
        ));
        let bad_indices = "skew 4 1 QQ\n0 2 x0\n";
        assert!(read_skew_matrix(bad_indices).is_err());
        // i >= j is rejected by the matrix itself.
        let lower = "skew 4 1 QQ\n2 1 x0\n";
        assert!(matches!(
            read_skew_matrix(lower),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn test_comments_and_blanks_ignored() {
        let text = "# a certificate\n\nskew 2 1 QQ\n# entry\n1 2 x0\n\n";
        let m = read_skew_matrix(text).unwrap();
        assert_eq!(
            m.entry(0, 1),
            Poly::parse("x0", FieldSpec::Rational).unwrap()
        );
    }

    #[test]
    fn test_pfaffrep_round_trip() {
        let curve = WeierstrassCurve::new(Scalar::from_int(2), Scalar::from_int(3)).unwrap();
        let pt = curve
            .point(Scalar::from_int(3), Scalar::from_int(6))
            .unwrap();
        let rep = crate::cubic::cubic_pfaffian(&curve, &pt).unwrap();
        let text = write_pfaffian_rep(&rep);
        assert!(text.starts_with("pfaffrep 6 QQ\n"));
        assert!(text.contains("curve "));
        let back = read_pfaffian_rep(&text).unwrap();
        assert_eq!(back.matrices(), rep.matrices());
        assert_eq!(back.curve(), rep.curve());
        assert_eq!(back.scale(), rep.scale());
        assert_eq!(write_pfaffian_rep(&back), text);
    }

    #[test]
    fn test_detrep_round_trip() {
        let curve = WeierstrassCurve::new(Scalar::from_int(0), Scalar::from_int(1)).unwrap();
        let pt = curve
            .point(Scalar::from_int(0), Scalar::from_int(1))
            .unwrap();
        let rep = crate::cubic::cubic_determinantal(&curve, &pt).unwrap();
        let text = write_determinantal_rep(&rep);
        assert!(text.starts_with("detrep 3 QQ\n"));
        let back = read_determinantal_rep(&text).unwrap();
        assert_eq!(back.matrices(), rep.matrices());
        assert_eq!(back.curve(), rep.curve());
        assert_eq!(write_determinantal_rep(&back), text);
    }

    #[test]
    fn test_rep_file_is_a_certificate() {
        // Tampering with the curve makes re-verification fail on read.
        let curve = WeierstrassCurve::new(Scalar::from_int(0), Scalar::from_int(1)).unwrap();
        let pt = curve
            .point(Scalar::from_int(0), Scalar::from_int(1))
            .unwrap();
        let rep = crate::cubic::cubic_determinantal(&curve, &pt).unwrap();
        let text = write_determinantal_rep(&rep);
        let tampered = text.replace("curve ", "curve x1^3 + ");
        assert!(read_determinantal_rep(&tampered).is_err());
        let no_curve: String = text
            .lines()
            .filter(|l| !l.starts_with("curve"))
            .map(|l| format!("{l}\n"))
            .collect();
        assert!(matches!(
            read_determinantal_rep(&no_curve),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn test_pfaffrep_quartic_solution() {
        // A reduced quartic solution over F_11 survives the file format.
        let outcome = quartic::solve_over_prime_field(11, 1, 200_000, 1).unwrap();
        let rep = quartic::verified_representation(&outcome.solutions[0]).unwrap();
        let text = write_pfaffian_rep(&rep);
        assert!(text.starts_with("pfaffrep 8 Fp:11\n"));
        let back = read_pfaffian_rep(&text).unwrap();
        assert_eq!(back.matrices(), rep.matrices());
    }

    #[test]
    fn test_param_file_round_trip() {
        let text = "cij 1 2 3/4\ncij 5 6 -2\naction 1 2 3\n";
        let f = read_param_file(text, FieldSpec::Rational).unwrap();
        assert_eq!(f.values.len(), 2);
        assert_eq!(f.values[&(1, 2)], Scalar::from_ratio(3, 4));
        assert_eq!(f.values[&(5, 6)], Scalar::from_int(-2));
        let [a, e, p] = f.action.clone().unwrap();
        assert_eq!(a, Scalar::from_int(1));
        assert_eq!(e, Scalar::from_int(2));
        assert_eq!(p, Scalar::from_int(3));
        let rendered = write_param_file(&f.values, f.action.as_ref());
        assert_eq!(read_param_file(&rendered, FieldSpec::Rational).unwrap(), f);
    }

    #[test]
    fn test_param_file_reduced_set() {
        let values: BTreeMap<(usize, usize), Scalar> = quartic::REDUCED_FREE
            .iter()
            .enumerate()
            .map(|(k, &ij)| (ij, Scalar::from_int(k as i64 - 5)))
            .collect();
        let text = write_param_file(&values, None);
        let f = read_param_file(&text, FieldSpec::Rational).unwrap();
        let params = QuarticParams::reduced(f.values).unwrap();
        assert_eq!(*params.get(1, 2).unwrap(), Scalar::from_int(-5));
    }

    #[test]
    fn test_param_file_errors() {
        assert!(matches!(
            read_param_file("cij 1 2\n", FieldSpec::Rational),
            Err(Error::Parse { position: 1, .. })
        ));
        assert!(matches!(
            read_param_file("cij 1 2 1\ncij 1 2 2\n", FieldSpec::Rational),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            read_param_file("action 1 2 3\naction 1 2 3\n", FieldSpec::Rational),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(read_param_file("bogus line\n", FieldSpec::Rational).is_err());
    }

    #[test]
    fn test_detrep_negative_and_fractional_entries() {
        // det(x0*M0 + x1*M1) = (-x0/2)(2*x0) - x1^2 = -x0^2 - x1^2.
        let good = "detrep 2 QQ\nM0\n1 1 -1/2\n2 2 2\nM1\n1 2 1\n2 1 1\ncurve -x0^2 - x1^2\n";
        let rep = read_determinantal_rep(good).unwrap();
        assert_eq!(
            *rep.curve(),
            Poly::parse("-x0^2 - x1^2", FieldSpec::Rational).unwrap()
        );
        assert_eq!(*rep.matrices()[0].get(0, 0), Scalar::from_ratio(-1, 2));
        // A proportional curve reads back with the scale folded into c.
        let scaled = good.replace("curve -x0^2 - x1^2", "curve x0^2 + x1^2");
        let rep = read_determinantal_rep(&scaled).unwrap();
        assert_eq!(*rep.scale(), Scalar::from_int(-1));
        // A curve that is not proportional to the determinant is rejected.
        let bad = good.replace("curve -x0^2 - x1^2", "curve x0^2 + x0*x1 + x1^2");
        assert!(read_determinantal_rep(&bad).is_err());
    }

    #[test]
    fn test_skew_omitted_entries_are_zero() {
        let text = "skew 4 1 QQ\n1 2 x0\n";
        let m = read_skew_matrix(text).unwrap();
        assert!(m.entry(2, 3).is_zero());
        assert_eq!(m.entry(0, 1).coeff(&Mono3([1, 0, 0])), Scalar::one());
    }
}
