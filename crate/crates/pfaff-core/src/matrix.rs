//! Dense exact matrices: constant matrices over a [`Scalar`] field with
//! elimination-based determinant and rank, and square matrices of homogeneous
//! polynomials with cofactor determinant and adjugate (sizes here never exceed
//! single digits, so cofactor expansion is the right tool).

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::Ring;
use crate::scalar::{FieldSpec, Scalar};

/// Constant matrix over an exact field.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ConstMatrix {
    pub fn zero(rows: usize, cols: usize) -> ConstMatrix {
        ConstMatrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> ConstMatrix {
        let mut m = ConstMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> ConstMatrix {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ConstMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds from an integer pattern, row-major.
    pub fn from_ints(rows: &[&[i64]]) -> ConstMatrix {
        ConstMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| Scalar::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> ConstMatrix {
        let mut out = ConstMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, rhs: &ConstMatrix) -> ConstMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = ConstMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Scalar::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).mul(rhs.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> ConstMatrix {
        ConstMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.mul(c)).collect(),
        }
    }

    pub fn neg(&self) -> ConstMatrix {
        ConstMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.neg()).collect(),
        }
    }

    pub fn is_skew(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            if !self.get(i, i).is_zero() {
                return false;
            }
            for j in (i + 1)..self.cols {
                if *self.get(i, j) != self.get(j, i).neg() {
                    return false;
                }
            }
        }
        true
    }

    pub fn into_field(&self, field: FieldSpec) -> Result<ConstMatrix> {
        Ok(ConstMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|v| v.clone().try_into_field(field))
                .collect::<Result<_>>()?,
        })
    }

    /// Determinant by exact Gaussian elimination.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Scalar::zero();
            };
            if pivot != col {
                for j in 0..n {
                    let a = m.get(col, j).clone();
                    let b = m.get(pivot, j).clone();
                    m.set(col, j, b);
                    m.set(pivot, j, a);
                }
                det = det.neg();
            }
            let p = m.get(col, col).clone();
            det = det.mul(&p);
            for r in (col + 1)..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).div(&p);
                for j in col..n {
                    let v = m.get(r, j).sub(&factor.mul(m.get(col, j)));
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if pivot != rank {
                for j in 0..self.cols {
                    let a = m.get(rank, j).clone();
                    let b = m.get(pivot, j).clone();
                    m.set(rank, j, b);
                    m.set(pivot, j, a);
                }
            }
            let p = m.get(rank, col).clone();
            for r in (rank + 1)..self.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).div(&p);
                for j in col..self.cols {
                    let v = m.get(r, j).sub(&factor.mul(m.get(rank, j)));
                    m.set(r, j, v);
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

/// Square matrix of homogeneous polynomials, all entries of one degree.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix {
    n: usize,
    entry_degree: u32,
    entries: Vec<Poly<Scalar>>,
}

impl PolyMatrix {
    pub fn zero(n: usize, entry_degree: u32) -> PolyMatrix {
        PolyMatrix {
            n,
            entry_degree,
            entries: vec![Poly::zero(entry_degree); n * n],
        }
    }

    /// Assembles the linear pencil x0*M0 + x1*M1 + x2*M2.
    pub fn pencil(mats: &[ConstMatrix; 3]) -> PolyMatrix {
        let n = mats[0].rows();
        for m in mats {
            assert_eq!(m.rows(), n, "pencil blocks differ in size");
            assert_eq!(m.cols(), n, "pencil blocks are not square");
        }
        let mut out = PolyMatrix::zero(n, 1);
        for i in 0..n {
            for j in 0..n {
                out.set(
                    i,
                    j,
                    Poly::linear([
                        mats[0].get(i, j).clone(),
                        mats[1].get(i, j).clone(),
                        mats[2].get(i, j).clone(),
                    ]),
                );
            }
        }
        out
    }

    /// Recovers the three constant coefficient matrices of a linear matrix.
    pub fn pencil_coefficients(&self) -> Result<[ConstMatrix; 3]> {
        let mut out = [
            ConstMatrix::zero(self.n, self.n),
            ConstMatrix::zero(self.n, self.n),
            ConstMatrix::zero(self.n, self.n),
        ];
        for i in 0..self.n {
            for j in 0..self.n {
                let e = self.get(i, j);
                if e.is_zero() {
                    continue;
                }
                if e.degree() != 1 {
                    return Err(Error::DegreeMismatch(1, e.degree()));
                }
                for k in 0..3 {
                    let mut mono = [0u32; 3];
                    mono[k] = 1;
                    out[k].set(i, j, e.coeff(&crate::poly::Mono3(mono)));
                }
            }
        }
        Ok(out)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry_degree(&self) -> u32 {
        self.entry_degree
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly<Scalar> {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly<Scalar>) {
        assert!(
            p.is_zero() || p.degree() == self.entry_degree,
            "entry degree mismatch"
        );
        self.entries[i * self.n + j] = p;
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.n, self.entry_degree);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch in matrix product");
        let mut out = PolyMatrix::zero(self.n, self.entry_degree + rhs.entry_degree);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut acc = Poly::zero(out.entry_degree);
                for k in 0..self.n {
                    acc = acc.add(&self.get(i, k).mul(rhs.get(k, j)));
                }
                out.entries[i * self.n + j] = acc;
            }
        }
        out
    }

    pub fn evaluate(&self, pt: &[Scalar; 3]) -> ConstMatrix {
        let mut out = ConstMatrix::zero(self.n, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(i, j, self.get(i, j).eval_point(pt));
            }
        }
        out
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.n - 1, self.entry_degree);
        let mut ri = 0;
        for i in 0..self.n {
            if i == skip_row {
                continue;
            }
            let mut cj = 0;
            for j in 0..self.n {
                if j == skip_col {
                    continue;
                }
                out.set(ri, cj, self.get(i, j).clone());
                cj += 1;
            }
            ri += 1;
        }
        out
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> Poly<Scalar> {
        if self.n == 0 {
            return Poly::one();
        }
        if self.n == 1 {
            return self.get(0, 0).clone();
        }
        let mut acc = Poly::zero(self.entry_degree * self.n as u32);
        for j in 0..self.n {
            let e = self.get(0, j);
            if e.is_zero() {
                continue;
            }
            let cof = self.minor(0, j).det().mul(e);
            acc = if j % 2 == 0 {
                acc.add(&cof)
            } else {
                acc.sub(&cof)
            };
        }
        acc
    }

    /// Adjugate: adj(M)·M = M·adj(M) = det(M)·Id.
    pub fn adjugate(&self) -> PolyMatrix {
        assert!(self.n >= 1, "adjugate of an empty matrix");
        let mut out = PolyMatrix::zero(self.n, self.entry_degree * (self.n as u32 - 1));
        for i in 0..self.n {
            for j in 0..self.n {
                let cof = self.minor(i, j).det();
                let signed = if (i + j) % 2 == 0 { cof } else { cof.neg() };
                out.set(j, i, signed);
            }
        }
        out
    }

    pub fn scale_poly(&self, f: &Poly<Scalar>) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.n, self.entry_degree + f.degree());
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(i, j, self.get(i, j).mul(f));
            }
        }
        out
    }

    /// True if this is `f` times the identity.
    pub fn is_scalar_matrix(&self, f: &Poly<Scalar>) -> bool {
        for i in 0..self.n {
            for j in 0..self.n {
                let want_zero = i != j;
                let e = self.get(i, j);
                if want_zero && !e.is_zero() {
                    return false;
                }
                if !want_zero && e != f {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    fn qq(text: &str) -> Poly<Scalar> {
        Poly::parse(text, FieldSpec::Rational).unwrap()
    }

    #[test]
    fn test_const_det_rank() {
        let m = ConstMatrix::from_ints(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.det(), Scalar::from_int(1));
        assert_eq!(m.rank(), 2);
        let s = ConstMatrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(s.det(), Scalar::zero());
        assert_eq!(s.rank(), 2);
        assert_eq!(ConstMatrix::zero(3, 3).rank(), 0);
        assert_eq!(ConstMatrix::identity(4).det(), Scalar::one());
    }

    #[test]
    fn test_const_det_prime_field() {
        let m = ConstMatrix::from_ints(&[&[2, 1], &[7, 4]])
            .into_field(FieldSpec::Prime(5))
            .unwrap();
        assert_eq!(m.det(), Scalar::residue(1, 5));
        // det = 6, which vanishes mod 3.
        let s = ConstMatrix::from_ints(&[&[1, 2], &[4, 14]])
            .into_field(FieldSpec::Prime(3))
            .unwrap();
        assert_eq!(s.det(), Scalar::residue(0, 3));
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn test_const_product_transpose_skew() {
        let a = ConstMatrix::from_ints(&[&[1, 2], &[3, 4]]);
        let b = ConstMatrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), ConstMatrix::from_ints(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), ConstMatrix::from_ints(&[&[1, 3], &[2, 4]]));
        assert!(ConstMatrix::from_ints(&[&[0, 5], &[-5, 0]]).is_skew());
        assert!(!a.is_skew());
        // det(AB) = det(A)det(B)
        assert_eq!(a.mul(&b).det(), a.det().mul(&b.det()));
    }

    #[test]
    fn test_poly_det_adjugate() {
        // M = [[x0, x1], [x2, x0]]: det = x0^2 - x1*x2, adj = [[x0, -x1], [-x2, x0]].
        let mut m = PolyMatrix::zero(2, 1);
        m.set(0, 0, qq("x0"));
        m.set(0, 1, qq("x1"));
        m.set(1, 0, qq("x2"));
        m.set(1, 1, qq("x0"));
        let det = m.det();
        assert_eq!(det, qq("x0^2 - x1*x2"));
        let adj = m.adjugate();
        assert_eq!(*adj.get(0, 0), qq("x0"));
        assert_eq!(*adj.get(0, 1), qq("-x1"));
        assert!(adj.mul(&m).is_scalar_matrix(&det));
        assert!(m.mul(&adj).is_scalar_matrix(&det));
    }

    #[test]
    fn test_pencil_round_trip() {
        let mats = [
            ConstMatrix::from_ints(&[&[1, 0], &[2, 1]]),
            ConstMatrix::from_ints(&[&[0, 3], &[0, 0]]),
            ConstMatrix::from_ints(&[&[0, 0], &[-1, 5]]),
        ];
        let p = PolyMatrix::pencil(&mats);
        assert_eq!(*p.get(1, 0), qq("2x0 - x2"));
        let back = p.pencil_coefficients().unwrap();
        assert_eq!(back, mats);
        // det of the pencil evaluated = det of the evaluated pencil.
        let pt = [
            Scalar::from_int(2),
            Scalar::from_int(-1),
            Scalar::from_int(3),
        ];
        assert_eq!(p.det().eval_point(&pt), p.evaluate(&pt).det());
    }
}
