//! Skew-symmetric matrices of homogeneous polynomials and the pfaffian
//! calculus: pfaffians, pfaffian minors, the pfaffian adjoint, congruence
//! transforms, and rank at a point.
//!
//! Only the strict upper triangle is stored; the lower triangle is implied by
//! skew-symmetry. Indices are 0-based throughout the API (the text file
//! format is 1-based and converted on IO).
//!
//! Sign conventions, fixed once and validated by tests against a brute-force
//! perfect-matching oracle:
//! - `pfaffian` expands along the first remaining row: for ordered support
//!   {s1 < s2 < ...}, Pf = sum over r >= 2 of (-1)^r * a_{s1,s_r} * Pf(rest).
//! - `pfaffian_adjoint` entry (i,j), i < j, is (-1)^{i+j} * Pf^{ij} in 1-based
//!   indices, which makes adj(A)·A = Pf(A)·Id hold identically. Consequences:
//!   Pf(adj A) = (-1)^k Pf(A)^{k-1} and adj(adj A) = (-1)^k Pf(A)^{k-2}·A for
//!   size 2k; both signs drop out when k is even.

use crate::error::{Error, Result};
use crate::matrix::ConstMatrix;
use crate::poly::Poly;
use crate::ring::Ring;
use crate::scalar::Scalar;
use std::collections::{BTreeMap, HashMap};

#[derive(Debug, Clone, PartialEq)]
pub struct SkewPolyMatrix<R: Ring> {
    n: usize,
    entry_degree: u32,
    upper: BTreeMap<(usize, usize), Poly<R>>,
}

impl<R: Ring> SkewPolyMatrix<R> {
    pub fn new(n: usize, entry_degree: u32) -> Result<SkewPolyMatrix<R>> {
        if !n.is_multiple_of(2) {
            return Err(Error::OddSize(n));
        }
        Ok(SkewPolyMatrix {
            n,
            entry_degree,
            upper: BTreeMap::new(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry_degree(&self) -> u32 {
        self.entry_degree
    }

    /// Sets entry (i,j) with i < j; the mirrored entry is implied.
    pub fn set(&mut self, i: usize, j: usize, p: Poly<R>) -> Result<()> {
        if i >= j || j >= self.n {
            return Err(Error::IndexOutOfRange { i, j, n: self.n });
        }
        if !p.is_zero() && p.degree() != self.entry_degree {
            return Err(Error::DegreeMismatch(self.entry_degree, p.degree()));
        }
        if p.is_zero() {
            self.upper.remove(&(i, j));
        } else {
            self.upper.insert((i, j), p);
        }
        Ok(())
    }

    /// The stored upper-triangle entries (i < j), zeros omitted.
    pub fn upper_entries(&self) -> impl Iterator<Item = (usize, usize, &Poly<R>)> {
        self.upper.iter().map(|(&(i, j), p)| (i, j, p))
    }

    /// Entry (i,j) materialized with sign: A[j][i] = -A[i][j], A[i][i] = 0.
    pub fn entry(&self, i: usize, j: usize) -> Poly<R> {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Less => self
                .upper
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| Poly::zero(self.entry_degree)),
            Ordering::Equal => Poly::zero(self.entry_degree),
            Ordering::Greater => self
                .upper
                .get(&(j, i))
                .map(|p| p.neg())
                .unwrap_or_else(|| Poly::zero(self.entry_degree)),
        }
    }

    /// Applies `f` to every entry, e.g. to evaluate symbolic coefficients or
    /// reduce mod p. `f` must preserve degree or return zero.
    pub fn map_entries<S: Ring>(
        &self,
        mut f: impl FnMut(&Poly<R>) -> Poly<S>,
    ) -> Result<SkewPolyMatrix<S>> {
        let mut out = SkewPolyMatrix::new(self.n, self.entry_degree)?;
        for (&(i, j), p) in &self.upper {
            out.set(i, j, f(p))?;
        }
        Ok(out)
    }

    fn pf_rec(&self, mask: u32, memo: &mut HashMap<u32, Poly<R>>) -> Poly<R> {
        if mask == 0 {
            return Poly::one();
        }
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut acc = Poly::zero(0);
        let mut sign_pos = true;
        let mut bits = rest;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= !(1 << j);
            let a = self.entry(i, j);
            if !a.is_zero() {
                let sub = self.pf_rec(rest & !(1 << j), memo);
                let term = a.mul(&sub);
                acc = if sign_pos {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            sign_pos = !sign_pos;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// The pfaffian, by memoized expansion along the first remaining row.
    /// Homogeneous of degree (n/2)·entry_degree; Pf of the 0x0 matrix is 1.
    pub fn pfaffian(&self) -> Poly<R> {
        assert!(self.n <= 32, "pfaffian limited to size 32");
        let mut memo = HashMap::new();
        let full: u32 = if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        };
        let pf = self.pf_rec(full, &mut memo);
        if pf.is_zero() {
            Poly::zero(self.entry_degree * (self.n as u32 / 2))
        } else {
            pf
        }
    }

    /// Independent pfaffian oracle: the signed sum over perfect matchings,
    /// with the sign of a matching computed as (-1)^{number of crossings}.
    /// Exponential; guarded to sizes <= 12.
    pub fn pfaffian_matchings_oracle(&self) -> Result<Poly<R>> {
        const LIMIT: usize = 12;
        if self.n > LIMIT {
            return Err(Error::SizeLimit {
                limit: LIMIT,
                got: self.n,
            });
        }
        let target_degree = self.entry_degree * (self.n as u32 / 2);
        let mut total = Poly::zero(target_degree);
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut remaining: Vec<usize> = (0..self.n).collect();
        self.oracle_rec(&mut remaining, &mut pairs, &mut total);
        Ok(total)
    }

    fn oracle_rec(
        &self,
        remaining: &mut [usize],
        pairs: &mut Vec<(usize, usize)>,
        total: &mut Poly<R>,
    ) {
        if remaining.is_empty() {
            let mut crossings = 0;
            for (idx, &(_, b)) in pairs.iter().enumerate() {
                for &(c, d) in &pairs[idx + 1..] {
                    // Pairs are generated with a < b, c < d, a < c.
                    if c < b && b < d {
                        crossings += 1;
                    }
                }
            }
            let mut prod = Poly::one();
            for &(a, b) in pairs.iter() {
                prod = prod.mul(&self.entry(a, b));
                if prod.is_zero() {
                    return;
                }
            }
            *total = if crossings % 2 == 0 {
                total.add(&prod)
            } else {
                total.sub(&prod)
            };
            return;
        }
        let a = remaining[0];
        for pick in 1..remaining.len() {
            let mut rest: Vec<usize> = remaining.to_vec();
            let b = rest.remove(pick);
            rest.remove(0);
            pairs.push((a, b));
            self.oracle_rec(&mut rest, pairs, total);
            pairs.pop();
        }
    }

    /// Submatrix with the rows and columns in `drop` (sorted) removed.
    pub fn delete(&self, drop: &[usize]) -> SkewPolyMatrix<R> {
        let keep: Vec<usize> = (0..self.n).filter(|k| !drop.contains(k)).collect();
        let mut out = SkewPolyMatrix::new(keep.len(), self.entry_degree)
            .expect("even size: pairs are deleted");
        for (new_i, &old_i) in keep.iter().enumerate() {
            for (new_j, &old_j) in keep.iter().enumerate().skip(new_i + 1) {
                let p = self.entry(old_i, old_j);
                if !p.is_zero() {
                    out.set(new_i, new_j, p).expect("degree preserved");
                }
            }
        }
        out
    }

    /// Pfaffian minor Pf^{ij}: pfaffian with rows/columns i and j deleted
    /// (0-based, i < j).
    pub fn pfaffian_minor(&self, i: usize, j: usize) -> Result<Poly<R>> {
        if i >= j || j >= self.n {
            return Err(Error::IndexOutOfRange { i, j, n: self.n });
        }
        Ok(self.delete(&[i, j]).pfaffian())
    }

    /// The pfaffian adjoint: the skew matrix of signed pfaffian minors with
    /// adj(A)·A = Pf(A)·Id. Entry (i,j), i<j, carries sign (-1)^{i+j} in
    /// 1-based indices (equivalently (-1)^{i+j} in 0-based ones).
    pub fn pfaffian_adjoint(&self) -> Result<SkewPolyMatrix<R>> {
        let k = self.n as u32 / 2;
        let mut out = SkewPolyMatrix::new(self.n, self.entry_degree * k.saturating_sub(1))?;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let minor = self.pfaffian_minor(i, j)?;
                let signed = if (i + j) % 2 == 0 { minor } else { minor.neg() };
                out.set(i, j, signed)?;
            }
        }
        Ok(out)
    }

    /// Dense product against another skew matrix, for identity checks.
    pub fn mul_dense(&self, rhs: &SkewPolyMatrix<R>) -> Vec<Vec<Poly<R>>> {
        assert_eq!(self.n, rhs.n, "size mismatch");
        let deg = self.entry_degree + rhs.entry_degree;
        let mut out = vec![vec![Poly::zero(deg); self.n]; self.n];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let mut acc = Poly::zero(deg);
                for k in 0..self.n {
                    let a = self.entry(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(&rhs.entry(k, j)));
                }
                *slot = acc;
            }
        }
        out
    }

    /// True if `product` is f·Id.
    pub fn product_is_scalar(product: &[Vec<Poly<R>>], f: &Poly<R>) -> bool {
        product.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, e)| if i == j { e == f } else { e.is_zero() })
        })
    }

    /// Entrywise scale.
    pub fn scale(&self, c: &R) -> SkewPolyMatrix<R> {
        let mut out = SkewPolyMatrix {
            n: self.n,
            entry_degree: self.entry_degree,
            upper: BTreeMap::new(),
        };
        for (&(i, j), p) in &self.upper {
            let s = p.scale(c);
            if !s.is_zero() {
                out.upper.insert((i, j), s);
            }
        }
        out
    }
}

impl SkewPolyMatrix<Scalar> {
    /// Assembles the skew linear pencil x0*A0 + x1*A1 + x2*A2.
    pub fn pencil(mats: &[ConstMatrix; 3]) -> Result<SkewPolyMatrix<Scalar>> {
        let n = mats[0].rows();
        for m in mats {
            if m.rows() != n || m.cols() != n {
                return Err(Error::SizeMismatch(m.rows(), n));
            }
            if !m.is_skew() {
                return Err(Error::NotARepresentation);
            }
        }
        let mut out = SkewPolyMatrix::new(n, 1)?;
        for i in 0..n {
            for j in (i + 1)..n {
                let p = Poly::linear([
                    mats[0].get(i, j).clone(),
                    mats[1].get(i, j).clone(),
                    mats[2].get(i, j).clone(),
                ]);
                out.set(i, j, p)?;
            }
        }
        Ok(out)
    }

    /// The three constant coefficient matrices of a linear skew matrix.
    pub fn pencil_coefficients(&self) -> Result<[ConstMatrix; 3]> {
        if self.entry_degree != 1 {
            return Err(Error::DegreeMismatch(1, self.entry_degree));
        }
        let mut out = [
            ConstMatrix::zero(self.n, self.n),
            ConstMatrix::zero(self.n, self.n),
            ConstMatrix::zero(self.n, self.n),
        ];
        for (&(i, j), p) in &self.upper {
            for k in 0..3 {
                let mut mono = [0u32; 3];
                mono[k] = 1;
                let c = p.coeff(&crate::poly::Mono3(mono));
                out[k].set(i, j, c.clone());
                out[k].set(j, i, c.neg());
            }
        }
        Ok(out)
    }

    /// Evaluates every entry at a point.
    pub fn evaluate(&self, pt: &[Scalar; 3]) -> ConstMatrix {
        let mut out = ConstMatrix::zero(self.n, self.n);
        for (&(i, j), p) in &self.upper {
            let v = p.eval_point(pt);
            out.set(i, j, v.clone());
            out.set(j, i, v.neg());
        }
        out
    }

    /// Rank of the evaluated matrix; always even for skew matrices.
    pub fn rank_at_point(&self, pt: &[Scalar; 3]) -> usize {
        self.evaluate(pt).rank()
    }

    /// Congruence transform X·A·X^t.
    pub fn congruence(&self, x: &ConstMatrix) -> Result<SkewPolyMatrix<Scalar>> {
        if x.rows() != self.n || x.cols() != self.n {
            return Err(Error::SizeMismatch(x.rows(), self.n));
        }
        let mut out = SkewPolyMatrix::new(self.n, self.entry_degree)?;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let mut acc = Poly::zero(self.entry_degree);
                for (&(u, v), p) in &self.upper {
                    // Contribution of A_{uv} and its mirror A_{vu} = -A_{uv}.
                    let c = x
                        .get(i, u)
                        .mul(x.get(j, v))
                        .sub(&x.get(i, v).mul(x.get(j, u)));
                    if !c.is_zero() {
                        acc = acc.add(&p.scale(&c));
                    }
                }
                out.set(i, j, acc)?;
            }
        }
        Ok(out)
    }

    /// Moves all entries into `field`.
    pub fn into_field(&self, field: crate::scalar::FieldSpec) -> Result<SkewPolyMatrix<Scalar>> {
        let mut out = SkewPolyMatrix::new(self.n, self.entry_degree)?;
        for (&(i, j), p) in &self.upper {
            out.set(i, j, p.into_field(field)?)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    fn qq(text: &str) -> Poly<Scalar> {
        Poly::parse(text, FieldSpec::Rational).unwrap()
    }

    /// Generic 4x4 with constant entries 1..6 in the upper triangle.
    fn skew4() -> SkewPolyMatrix<Scalar> {
        let mut s = SkewPolyMatrix::new(4, 0).unwrap();
        let mut v = 1i64;
        for i in 0..4 {
            for j in (i + 1)..4 {
                s.set(i, j, Poly::constant(Scalar::from_int(v))).unwrap();
                v += 1;
            }
        }
        s
    }

    #[test]
    fn test_pfaffian_2x2_and_4x4() {
        let mut s2 = SkewPolyMatrix::new(2, 1).unwrap();
        s2.set(0, 1, qq("x0 + 2x1")).unwrap();
        assert_eq!(s2.pfaffian(), qq("x0 + 2x1"));
        // Generic 4x4: a12*a34 - a13*a24 + a14*a23 = 1*6 - 2*5 + 3*4 = 8.
        assert_eq!(skew4().pfaffian(), Poly::constant(Scalar::from_int(8)));
        // Empty matrix has pfaffian 1.
        let s0: SkewPolyMatrix<Scalar> = SkewPolyMatrix::new(0, 1).unwrap();
        assert_eq!(s0.pfaffian(), Poly::one());
    }

    #[test]
    fn test_pfaffian_equals_oracle() {
        assert_eq!(
            skew4().pfaffian(),
            skew4().pfaffian_matchings_oracle().unwrap()
        );
        let mut s6 = SkewPolyMatrix::new(6, 1).unwrap();
        let polys = [
            "x0", "x1", "x2", "x0-x1", "x1+x2", "x0+x2", "2x0", "x2-x0", "3x1", "x0+x1",
        ];
        let mut t = 0;
        for i in 0..6 {
            for j in (i + 1)..6 {
                s6.set(i, j, qq(polys[t % polys.len()])).unwrap();
                t += 1;
            }
        }
        assert_eq!(s6.pfaffian(), s6.pfaffian_matchings_oracle().unwrap());
        let s14: SkewPolyMatrix<Scalar> = SkewPolyMatrix::new(14, 0).unwrap();
        assert!(matches!(
            s14.pfaffian_matchings_oracle(),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn test_pfaffian_squared_is_det() {
        let s = skew4();
        let pf = s
            .pfaffian()
            .eval_point(&[Scalar::zero(), Scalar::zero(), Scalar::zero()]);
        let det = s
            .evaluate(&[Scalar::zero(), Scalar::zero(), Scalar::zero()])
            .det();
        assert_eq!(pf.mul(&pf), det);
    }

    #[test]
    fn test_pfaffian_minor() {
        // Pf^{12} of a 2x2 (0-based: delete rows 0,1) is the empty pfaffian 1.
        let mut s2 = SkewPolyMatrix::new(2, 1).unwrap();
        s2.set(0, 1, qq("x0")).unwrap();
        assert_eq!(s2.pfaffian_minor(0, 1).unwrap(), Poly::one());
        // Pf^{12} of the generic 4x4 is a34 = 6.
        assert_eq!(
            skew4().pfaffian_minor(0, 1).unwrap(),
            Poly::constant(Scalar::from_int(6))
        );
        assert!(skew4().pfaffian_minor(2, 1).is_err());
    }

    #[test]
    fn test_adjoint_identity() {
        // 2x2: adjoint of [[0,a],[-a,0]] is [[0,-1],[1,0]].
        let mut s2 = SkewPolyMatrix::new(2, 1).unwrap();
        s2.set(0, 1, qq("x0")).unwrap();
        let adj2 = s2.pfaffian_adjoint().unwrap();
        assert_eq!(adj2.entry(0, 1), Poly::constant(Scalar::from_int(-1)));
        let s = skew4();
        let adj = s.pfaffian_adjoint().unwrap();
        let prod = adj.mul_dense(&s);
        assert!(SkewPolyMatrix::product_is_scalar(&prod, &s.pfaffian()));
        let prod2 = s.mul_dense(&adj);
        assert!(SkewPolyMatrix::product_is_scalar(&prod2, &s.pfaffian()));
    }

    #[test]
    fn test_adjoint_sign_table_forced_symbolically() {
        // Fully generic 4x4 with independent symbolic entries a_{ij}: the
        // identity adj(A)·A = Pf(A)·Id must hold as a polynomial identity in
        // the a_{ij}, which pins every sign in the adjoint entry table.
        use crate::mpoly::MPoly;
        let mut s: SkewPolyMatrix<MPoly> = SkewPolyMatrix::new(4, 0).unwrap();
        let mut v = 0u16;
        for i in 0..4 {
            for j in (i + 1)..4 {
                s.set(i, j, Poly::constant(MPoly::var(v))).unwrap();
                v += 1;
            }
        }
        let pf = s.pfaffian();
        let adj = s.pfaffian_adjoint().unwrap();
        assert!(SkewPolyMatrix::product_is_scalar(&adj.mul_dense(&s), &pf));
        assert!(SkewPolyMatrix::product_is_scalar(&s.mul_dense(&adj), &pf));
        // And flipping any single sign in the table breaks the identity: the
        // (i,j) signs are forced, not conventional.
        for flip in 0..6 {
            let mut broken = adj.clone();
            let &(i, j) = s.upper.keys().nth(flip).unwrap();
            let cur = broken.entry(i, j);
            broken.set(i, j, cur.neg()).unwrap();
            assert!(
                !SkewPolyMatrix::product_is_scalar(&broken.mul_dense(&s), &pf),
                "sign at ({i},{j}) is not forced"
            );
        }
    }

    #[test]
    fn test_adjoint_power_laws() {
        // For size 2k: Pf(adj A) = (-1)^k Pf(A)^{k-1} and
        // adj(adj A) = (-1)^k Pf(A)^{k-2} A. Checked on random constant
        // matrices at sizes 6 (k odd: signs flip) and 8 (k even: signs drop).
        for (n, vals) in [
            (
                6usize,
                [3i64, -1, 4, 1, -5, 9, 2, -6, 5, 3, 5, -8, 9, 7, 9].as_slice(),
            ),
            (
                8usize,
                [
                    2i64, 7, -1, 8, 2, -8, 1, 8, 2, 8, -4, 5, 9, 0, 4, 5, 2, -3, 5, 3, 6, 0, 8, 7,
                    -9, 3, 1, 4,
                ]
                .as_slice(),
            ),
        ] {
            let k = n / 2;
            let mut s = SkewPolyMatrix::new(n, 0).unwrap();
            let mut t = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    s.set(i, j, Poly::constant(Scalar::from_int(vals[t])))
                        .unwrap();
                    t += 1;
                }
            }
            let pf = s.pfaffian();
            assert!(!pf.is_zero(), "sample at size {n} is degenerate");
            let adj = s.pfaffian_adjoint().unwrap();
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let want_pf_adj = pf.pow((k - 1) as u32).scale(&Scalar::from_int(sign));
            assert_eq!(adj.pfaffian(), want_pf_adj, "Pf(adj) law at size {n}");
            let adj2 = adj.pfaffian_adjoint().unwrap();
            let factor = pf.pow((k - 2) as u32).scale(&Scalar::from_int(sign));
            let c = factor.coeff(&crate::poly::Mono3([0, 0, 0]));
            assert_eq!(adj2, s.scale(&c), "double adjoint law at size {n}");
        }
    }

    #[test]
    fn test_congruence() {
        let s = skew4();
        let x =
            ConstMatrix::from_ints(&[&[1, 2, 0, 1], &[0, 1, 3, 0], &[1, 0, 1, 2], &[0, 1, 0, 1]]);
        let t = s.congruence(&x).unwrap();
        assert_eq!(t.pfaffian(), s.pfaffian().scale(&x.det()));
        let id = ConstMatrix::identity(4);
        assert_eq!(s.congruence(&id).unwrap(), s);
    }

    #[test]
    fn test_rank_at_point() {
        let mut s = SkewPolyMatrix::new(4, 1).unwrap();
        s.set(0, 1, qq("x0")).unwrap();
        let zero_pt = [Scalar::zero(), Scalar::zero(), Scalar::one()];
        assert_eq!(s.rank_at_point(&zero_pt), 0);
        let pt = [Scalar::one(), Scalar::zero(), Scalar::zero()];
        assert_eq!(s.rank_at_point(&pt), 2);
    }

    #[test]
    fn test_pencil_round_trip() {
        let a0 = ConstMatrix::from_ints(&[&[0, 1], &[-1, 0]]);
        let a1 = ConstMatrix::from_ints(&[&[0, -3], &[3, 0]]);
        let a2 = ConstMatrix::from_ints(&[&[0, 0], &[0, 0]]);
        let s = SkewPolyMatrix::pencil(&[a0.clone(), a1.clone(), a2.clone()]).unwrap();
        assert_eq!(s.entry(0, 1), qq("x0 - 3x1"));
        let back = s.pencil_coefficients().unwrap();
        assert_eq!(back[0], a0);
        assert_eq!(back[1], a1);
        assert_eq!(back[2], a2);
        let not_skew = ConstMatrix::from_ints(&[&[1, 0], &[0, 1]]);
        assert!(SkewPolyMatrix::pencil(&[not_skew, a0, a1]).is_err());
    }
}
