//! Exact dense linear algebra over cyclotomic and rational scalars.
//!
//! Sizes in this crate stay at desk scale (matrices up to ~30×30), so the
//! implementations favor exactness and clarity: fraction-free Bareiss
//! elimination for determinants, plain Gauss-Jordan for row reduction, and
//! Faddeev–LeVerrier for characteristic polynomials.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactnum::{Cyclotomic, Rational};

/// Dense matrix with exact cyclotomic entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Cyclotomic>,
}

impl CycMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        CycMatrix {
            rows,
            cols,
            entries: vec![Cyclotomic::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Cyclotomic::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Cyclotomic) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        CycMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn mul(&self, rhs: &CycMatrix) -> CycMatrix {
        assert_eq!(self.cols, rhs.rows);
        CycMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Cyclotomic::zero();
            for k in 0..self.cols {
                if !self[(i, k)].is_zero() && !rhs[(k, j)].is_zero() {
                    acc += &(&self[(i, k)] * &rhs[(k, j)]);
                }
            }
            acc
        })
    }

    pub fn sub(&self, rhs: &CycMatrix) -> CycMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CycMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }

    pub fn trace(&self) -> Cyclotomic {
        assert_eq!(self.rows, self.cols);
        let mut acc = Cyclotomic::zero();
        for i in 0..self.rows {
            acc += &self[(i, i)];
        }
        acc
    }

    /// Determinant by fraction-free (Bareiss-style) elimination. Division by
    /// the previous pivot is exact at every step; over the cyclotomic field
    /// this stays exact throughout.
    pub fn det(&self) -> Cyclotomic {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return Cyclotomic::one();
        }
        let mut a = self.entries.clone();
        let at = |a: &Vec<Cyclotomic>, i: usize, j: usize| a[i * n + j].clone();
        let mut sign = false;
        let mut prev = Cyclotomic::one();
        for k in 0..n - 1 {
            // Pivot selection: any nonzero entry in column k at or below row k.
            if at(&a, k, k).is_zero() {
                let swap = (k + 1..n).find(|&r| !at(&a, r, k).is_zero());
                match swap {
                    Some(r) => {
                        for j in 0..n {
                            a.swap(k * n + j, r * n + j);
                        }
                        sign = !sign;
                    }
                    None => return Cyclotomic::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&at(&a, i, j) * &at(&a, k, k)) - &(&at(&a, i, k) * &at(&a, k, j));
                    a[i * n + j] = num.div(&prev).expect("exact Bareiss division");
                }
            }
            for i in k + 1..n {
                a[i * n + k] = Cyclotomic::zero();
            }
            prev = at(&a, k, k);
        }
        let d = at(&a, n - 1, n - 1);
        if sign {
            -&d
        } else {
            d
        }
    }

    /// Sum of the determinants of all principal `k`×`k` minors: the trace of
    /// the `k`-th exterior power, i.e. the `k`-th elementary symmetric
    /// polynomial of the eigenvalues.
    pub fn exterior_power_trace(&self, k: usize) -> Cyclotomic {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if k == 0 {
            return Cyclotomic::one();
        }
        if k > n {
            return Cyclotomic::zero();
        }
        let mut acc = Cyclotomic::zero();
        for subset in subsets_of_size(n, k) {
            let minor = CycMatrix::from_fn(k, k, |i, j| self[(subset[i], subset[j])].clone());
            acc += &minor.det();
        }
        acc
    }
}

impl std::ops::Index<(usize, usize)> for CycMatrix {
    type Output = Cyclotomic;
    fn index(&self, (r, c): (usize, usize)) -> &Cyclotomic {
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CycMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Cyclotomic {
        &mut self.entries[r * self.cols + c]
    }
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            if n - i < k - current.len() {
                break;
            }
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Row-reduce a list of vectors over the cyclotomic field in place,
/// returning a reduced echelon basis of their span. Vectors must share a
/// length; zero rows are dropped.
pub fn row_reduce(rows: Vec<Vec<Cyclotomic>>) -> Vec<Vec<Cyclotomic>> {
    let mut basis: Vec<Vec<Cyclotomic>> = Vec::new();
    for mut v in rows {
        reduce_against(&mut v, &basis);
        if let Some(pivot) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[pivot].inverse().expect("nonzero pivot");
            for x in v.iter_mut() {
                *x = &*x * &inv;
            }
            // Back-substitute into the existing basis to keep it reduced.
            for b in basis.iter_mut() {
                if !b[pivot].is_zero() {
                    let factor = b[pivot].clone();
                    for (x, y) in b.iter_mut().zip(v.iter()) {
                        *x = &*x - &(&factor * y);
                    }
                }
            }
            basis.push(v);
        }
    }
    basis.sort_by_key(|v| v.iter().position(|x| !x.is_zero()).unwrap_or(usize::MAX));
    basis
}

/// Reduce `v` against an echelon `basis` (each basis row normalized with
/// pivot 1). After the call, `v` is in the span iff it is zero.
pub fn reduce_against(v: &mut [Cyclotomic], basis: &[Vec<Cyclotomic>]) {
    for b in basis {
        let pivot = match b.iter().position(|x| !x.is_zero()) {
            Some(p) => p,
            None => continue,
        };
        if !v[pivot].is_zero() {
            let factor = v[pivot].clone();
            for (x, y) in v.iter_mut().zip(b.iter()) {
                *x = &*x - &(&factor * y);
            }
        }
    }
}

/// Characteristic polynomial det(tI − A) of an exact rational square
/// matrix, by Faddeev–LeVerrier. Little-endian coefficients; leading
/// coefficient 1.
pub fn char_poly_rational(a: &[Vec<Rational>]) -> Vec<Rational> {
    let n = a.len();
    for row in a {
        assert_eq!(row.len(), n);
    }
    // M_0 = I, c_n = 1; M_k = A·M_{k−1} + c_{n−k+1} I, c_{n−k} = −tr(A·M_{k−1})/k
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for k in 1..=n {
        // am = A · M
        let am: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = Rational::zero();
                        for l in 0..n {
                            acc += &a[i][l] * &m[l][j];
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let tr: Rational = (0..n).map(|i| am[i][i].clone()).sum();
        let c = -tr / Rational::from_integer(BigInt::from(k as i64));
        coeffs[n - k] = c.clone();
        m = am;
        for i in 0..n {
            m[i][i] += &c;
        }
    }
    coeffs
}

/// Characteristic polynomial of an integer matrix, with the guarantee that
/// all coefficients are integers.
pub fn char_poly_integer(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rat: Vec<Vec<Rational>> = a
        .iter()
        .map(|row| row.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    char_poly_rational(&rat)
        .into_iter()
        .map(|c| {
            assert!(c.denom().is_one(), "integer matrix has integer char poly");
            c.numer().clone()
        })
        .collect()
}

/// Exact positive-semidefiniteness certificate for a symmetric integer
/// matrix: all eigenvalues are ≥ 0 iff the characteristic polynomial
/// det(tI − A) = Σ b_i t^i has weakly alternating signs,
/// (−1)^{n−i} b_i ≥ 0. Symmetry guarantees real eigenvalues, so the sign
/// test is both necessary and sufficient.
pub fn is_positive_semidefinite(a: &[Vec<BigInt>]) -> bool {
    let n = a.len();
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if *x != a[j][i] {
                return false;
            }
        }
        let _ = i;
    }
    let p = char_poly_integer(a);
    p.iter().enumerate().all(|(i, b)| {
        let sign_flip = (n - i) % 2 == 1;
        if sign_flip {
            !b.is_positive()
        } else {
            !b.is_negative()
        }
    })
}
