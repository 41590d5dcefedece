//! Dense exact linear algebra.
//!
//! Over the rationals rows are scaled to primitive integer vectors and
//! reduced fraction-free (Gauss-Jordan with content removal), which keeps
//! intermediate coefficients small; only the final reduced rows are turned
//! back into rationals. Over `F_p` plain elimination on `u64` residues is used.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::{Field, Scalar};

/// Row-major matrix of field elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row-echelon form: nonzero rows only, leading entries 1 at
/// strictly increasing pivot columns, zeros above and below every pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

impl ExactMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Build from rows; every row must have length `cols`.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        ExactMatrix {
            field,
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = ExactMatrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + &(a * other.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    pub fn rref(&self) -> Rref {
        rref_rows(self.field, self.cols, self.to_rows())
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right null space `{v : M v = 0}`, itself in reduced
    /// row-echelon form.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let red = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &red.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &p) in red.rows.iter().zip(&red.pivots) {
                v[p] = -&row[free];
            }
            basis.push(v);
        }
        rref_rows(self.field, self.cols, basis).rows
    }

    pub fn inverse(&self) -> Option<ExactMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| {
                    if c == r {
                        self.field.one()
                    } else {
                        self.field.zero()
                    }
                }));
                row
            })
            .collect();
        let red = rref_rows(self.field, 2 * n, aug);
        if red.pivots.len() < n || red.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(ExactMatrix::from_rows(
            self.field,
            n,
            red.rows.into_iter().map(|r| r[n..].to_vec()).collect(),
        ))
    }

    /// Some solution of `M x = b`, or `None` when the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let aug: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        let red = rref_rows(self.field, self.cols + 1, aug);
        if red.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in red.rows.iter().zip(&red.pivots) {
            x[p] = row[self.cols].clone();
        }
        Some(x)
    }
}

/// Reduced row-echelon form of a list of rows of length `cols`.
pub fn rref_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Rref {
    match field {
        Field::Prime(p) => rref_modular(p, cols, rows),
        Field::Rational => rref_rational(cols, rows),
    }
}

fn rref_modular(p: u64, cols: usize, rows: Vec<Vec<Scalar>>) -> Rref {
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| s.as_modular().expect("modular entry"))
                .collect()
        })
        .collect();
    let mulm = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let inv = |x: u64| {
        let (mut base, mut e, mut acc) = (x, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulm(acc, base);
            }
            base = mulm(base, base);
            e >>= 1;
        }
        acc
    };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(i) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, i);
        let s = inv(a[r][c]);
        for v in a[r][c..].iter_mut() {
            *v = mulm(*v, s);
        }
        let pivot_row = std::mem::take(&mut a[r]);
        for (j, row) in a.iter_mut().enumerate() {
            if j == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if y != 0 {
                    *x = (*x + p - mulm(f, y)) % p;
                }
            }
        }
        a[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Rref {
        rows: a
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|value| Scalar::Modular { value, modulus: p })
                    .collect()
            })
            .collect(),
        pivots,
    }
}

fn primitive(row: &mut [BigInt]) {
    let g = row
        .iter()
        .filter(|v| !v.is_zero())
        .fold(BigInt::zero(), |g, v| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.iter_mut() {
            if !v.is_zero() {
                *v = &*v / &g;
            }
        }
    }
}

fn rref_rational(cols: usize, rows: Vec<Vec<Scalar>>) -> Rref {
    // clear denominators row by row
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let qs: Vec<&BigRational> = r
                .iter()
                .map(|s| s.as_rational().expect("rational entry"))
                .collect();
            let l = qs.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
            let mut ints: Vec<BigInt> = qs.iter().map(|q| q.numer() * (&l / q.denom())).collect();
            primitive(&mut ints);
            ints
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        // smallest nonzero entry as pivot keeps growth down
        let Some(i) = (r..a.len())
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].bits())
        else {
            continue;
        };
        a.swap(r, i);
        let pivot_row = std::mem::take(&mut a[r]);
        let pv = &pivot_row[c];
        for (j, row) in a.iter_mut().enumerate() {
            if j == r || row[c].is_zero() {
                continue;
            }
            let g = pv.gcd(&row[c]);
            let mp = pv / &g;
            let mr = &row[c] / &g;
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                let scaled = if x.is_zero() {
                    BigInt::zero()
                } else {
                    &*x * &mp
                };
                *x = if y.is_zero() {
                    scaled
                } else {
                    scaled - &mr * y
                };
            }
            primitive(row);
        }
        a[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    let rows = a
        .into_iter()
        .zip(&pivots)
        .map(|(row, &p)| {
            let lead = row[p].clone();
            row.into_iter()
                .map(|v| Scalar::Rational(BigRational::new(v, lead.clone())))
                .collect()
        })
        .collect();
    Rref { rows, pivots }
}

/// Whether the row vector is all zeros.
pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}
