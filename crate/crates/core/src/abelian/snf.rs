use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{AlgebraError, Result};

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    /// Builds from rows; all rows must have the same length. `cols` is
    /// needed only when there are no rows.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Result<Self> {
        let cols = rows.first().map_or(cols, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(AlgebraError::Domain("ragged matrix rows".into()));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            0,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn row_vecs(&self) -> &[Vec<BigInt>] {
        &self.data
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(AlgebraError::Domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i][j] += &self.data[i][k] * &other.data[k][j];
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(AlgebraError::Domain(
                "determinant of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(if n == 0 { BigInt::one() } else { sign * prev })
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.data.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.data {
            row.swap(i, j);
        }
    }

    /// row_i += factor * row_j
    fn add_row(&mut self, i: usize, j: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let t = &self.data[j][c] * factor;
            self.data[i][c] += t;
        }
    }

    /// col_i += factor * col_j
    fn add_col(&mut self, i: usize, j: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for row in &mut self.data {
            let t = &row[j] * factor;
            row[i] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.data[i] {
            *x = -std::mem::take(x);
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .data
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

pub(crate) fn serialize_big<S: Serializer>(
    x: &BigInt,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&x.to_string()),
    }
}

fn serialize_bigs<S: Serializer>(xs: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    struct Big<'a>(&'a BigInt);
    impl Serialize for Big<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
            serialize_big(self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&Big(x))?;
    }
    seq.end()
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        struct Row<'a>(&'a [BigInt]);
        impl Serialize for Row<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                serialize_bigs(self.0, s)
            }
        }
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for r in &self.data {
            seq.serialize_element(&Row(r))?;
        }
        seq.end()
    }
}

/// `U * M * V = D` with `D` diagonal, `d_1 | d_2 | ...`, all `d_i >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmithForm {
    #[serde(serialize_with = "serialize_bigs")]
    pub diagonal: Vec<BigInt>,
    pub rows: usize,
    pub cols: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<IntMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<IntMatrix>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// `Z^rows / M Z^cols`.
    pub fn cokernel(&self) -> AbelianGroup {
        AbelianGroup {
            free_rank: self.rows - self.rank(),
            torsion: self
                .diagonal
                .iter()
                .filter(|d| !d.is_zero() && !d.is_one())
                .cloned()
                .collect(),
        }
    }

    /// The diagonal matrix `D` with the shape of the input.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.rows, self.cols);
        for (i, x) in self.diagonal.iter().enumerate() {
            d.data[i][i] = x.clone();
        }
        d
    }
}

/// Smith normal form; `U` and `V` are tracked when `with_transforms` is set.
pub fn smith_normal_form(m: &IntMatrix, with_transforms: bool) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = with_transforms.then(|| IntMatrix::identity(rows));
    let mut v = with_transforms.then(|| IntMatrix::identity(cols));
    let n = rows.min(cols);

    for t in 0..n {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &a.data[i][j];
                    if !x.is_zero() && pivot.is_none_or(|(pi, pj)| x.abs() < a.data[pi][pj].abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return finish(a, u, v, rows, cols);
            };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            if let Some(u) = u.as_mut() {
                u.swap_rows(t, pi);
            }
            if let Some(v) = v.as_mut() {
                v.swap_cols(t, pj);
            }

            let mut remainder = false;
            let p = a.data[t][t].clone();
            for i in t + 1..rows {
                let q = -a.data[i][t].div_floor(&p);
                a.add_row(i, t, &q);
                if let Some(u) = u.as_mut() {
                    u.add_row(i, t, &q);
                }
                remainder |= !a.data[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = -a.data[t][j].div_floor(&p);
                a.add_col(j, t, &q);
                if let Some(v) = v.as_mut() {
                    v.add_col(j, t, &q);
                }
                remainder |= !a.data[t][j].is_zero();
            }
            if remainder {
                continue;
            }

            // The pivot must divide the whole trailing block.
            let bad_row =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.data[i][j].is_multiple_of(&p)));
            match bad_row {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    if let Some(u) = u.as_mut() {
                        u.add_row(t, i, &one);
                    }
                }
                None => break,
            }
        }
        if a.data[t][t].is_negative() {
            a.negate_row(t);
            if let Some(u) = u.as_mut() {
                u.negate_row(t);
            }
        }
    }
    finish(a, u, v, rows, cols)
}

fn finish(
    a: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
    rows: usize,
    cols: usize,
) -> SmithForm {
    let diagonal = (0..rows.min(cols)).map(|i| a.data[i][i].clone()).collect();
    SmithForm {
        diagonal,
        rows,
        cols,
        u,
        v,
    }
}

/// `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_t` with `d_1 | ... | d_t`, `d_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    #[serde(serialize_with = "serialize_bigs")]
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn new(free_rank: usize, torsion: &[i64]) -> Self {
        AbelianGroup {
            free_rank,
            torsion: torsion.iter().map(|&d| BigInt::from(d)).collect(),
        }
    }

    /// The group on `generators` free generators subject to the given
    /// relation rows (one row per relation, one column per generator).
    pub fn presented(generators: usize, relations: &IntMatrix) -> Result<Self> {
        if relations.rows > 0 && relations.cols != generators {
            return Err(AlgebraError::Domain(format!(
                "relation rows have {} entries, expected {generators}",
                relations.cols
            )));
        }
        let columns = if relations.rows == 0 {
            IntMatrix::zeros(generators, 0)
        } else {
            relations.transpose()
        };
        Ok(smith_normal_form(&columns, false).cokernel())
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// `|Hom(G, Z/m)|`, i.e. `m^free_rank * prod gcd(d_i, m)`.
    pub fn hom_count(&self, m: u64) -> BigInt {
        let m_big = BigInt::from(m);
        let mut acc = num_traits::pow(m_big.clone(), self.free_rank);
        for d in &self.torsion {
            acc *= d.gcd(&m_big);
        }
        acc
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z_{d}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf(rows: &[Vec<i64>]) -> SmithForm {
        smith_normal_form(&IntMatrix::from_i64(rows).unwrap(), true)
    }

    fn diag(f: &SmithForm) -> Vec<i64> {
        f.diagonal.iter().map(|d| d.to_i64().unwrap()).collect()
    }

    fn check_transforms(m: &[Vec<i64>], f: &SmithForm) {
        let m = IntMatrix::from_i64(m).unwrap();
        let u = f.u.as_ref().unwrap();
        let v = f.v.as_ref().unwrap();
        assert_eq!(u.mul(&m).unwrap().mul(v).unwrap(), f.diagonal_matrix());
        assert!(u.det().unwrap().abs().is_one());
        assert!(v.det().unwrap().abs().is_one());
    }

    #[test]
    fn examples() {
        let m = vec![vec![2, 0], vec![0, 3]];
        let f = snf(&m);
        assert_eq!(diag(&f), vec![1, 6]);
        check_transforms(&m, &f);
        assert_eq!(f.cokernel(), AbelianGroup::new(0, &[6]));

        let z = vec![vec![0, 0, 0], vec![0, 0, 0]];
        let f = snf(&z);
        assert_eq!(diag(&f), vec![0, 0]);
        assert_eq!(f.cokernel(), AbelianGroup::free(2));

        let f = snf(&[vec![1]]);
        assert_eq!(diag(&f), vec![1]);
        assert!(f.cokernel().is_trivial());
    }

    #[test]
    fn classic_example() {
        let m = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let f = snf(&m);
        assert_eq!(diag(&f), vec![2, 6, 12]);
        check_transforms(&m, &f);
    }

    #[test]
    fn rectangular_and_empty() {
        let m = vec![vec![4, 6, 8]];
        let f = snf(&m);
        assert_eq!(diag(&f), vec![2]);
        check_transforms(&m, &f);
        assert_eq!(f.cokernel(), AbelianGroup::new(0, &[2]));

        let e = smith_normal_form(&IntMatrix::zeros(0, 0), true);
        assert!(e.diagonal.is_empty());
        assert!(e.cokernel().is_trivial());
        let tall = smith_normal_form(&IntMatrix::zeros(3, 0), false);
        assert_eq!(tall.cokernel(), AbelianGroup::free(3));
    }

    #[test]
    fn presented_groups() {
        let rel = IntMatrix::from_i64(&[vec![2, 2, 0]]).unwrap();
        assert_eq!(
            AbelianGroup::presented(3, &rel).unwrap(),
            AbelianGroup::new(2, &[2])
        );
        let none = IntMatrix::zeros(0, 0);
        assert_eq!(
            AbelianGroup::presented(4, &none).unwrap(),
            AbelianGroup::free(4)
        );
        assert!(AbelianGroup::presented(2, &rel).is_err());
    }

    #[test]
    fn determinant() {
        let m = IntMatrix::from_i64(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(m.det().unwrap(), BigInt::from(-1));
        let m = IntMatrix::from_i64(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]).unwrap();
        assert_eq!(m.det().unwrap(), BigInt::from(4));
    }

    #[test]
    fn entry_growth_stays_exact() {
        let big = i64::MAX;
        let m = vec![vec![big, big - 1], vec![big - 1, big - 2]];
        let f = snf(&m);
        check_transforms(&m, &f);
        // det = -1, so D = diag(1, 1)
        assert_eq!(diag(&f), vec![1, 1]);
    }

    #[test]
    fn display() {
        assert_eq!(AbelianGroup::new(1, &[2]).to_string(), "Z + Z_2");
        assert_eq!(AbelianGroup::free(4).to_string(), "Z^4");
        assert_eq!(AbelianGroup::free(0).to_string(), "0");
        assert_eq!(
            serde_json::to_string(&AbelianGroup::new(2, &[2, 4])).unwrap(),
            r#"{"free_rank":2,"torsion":[2,4]}"#
        );
    }
}
