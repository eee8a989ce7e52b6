use crate::error::NumError;
use crate::scalar::Scalar;

/// Dense row-major square-capable matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, NumError> {
        let nr = rows.len();
        if nr == 0 {
            return Err(NumError::DimensionMismatch("empty matrix".into()));
        }
        let nc = rows[0].len();
        if rows.iter().any(|r| r.len() != nc) {
            return Err(NumError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: nr,
            cols: nc,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, m: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                data.push(f(i, j));
            }
        }
        Self {
            rows: n,
            cols: m,
            data,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, NumError> {
        if v.len() != self.cols {
            return Err(NumError::DimensionMismatch(format!(
                "matrix {}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    acc = acc.add_ref(&self.get(i, j).mul_ref(&v[j]));
                }
                acc
            })
            .collect())
    }
}

fn check_square<T: Scalar>(m: &Matrix<T>) -> Result<usize, NumError> {
    if m.nrows() != m.ncols() {
        return Err(NumError::DimensionMismatch(format!(
            "expected square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    Ok(m.nrows())
}

/// Determinant by full-pivoting Gaussian elimination: O(n^3), exact over
/// Rational, sign-stable over Real at working precision.
pub fn determinant<T: Scalar>(m: &Matrix<T>) -> Result<T, NumError> {
    let n = check_square(m)?;
    let mut a = m.clone();
    let mut det = T::one();
    let mut sign_flip = false;
    for step in 0..n {
        let (pi, pj) = best_pivot(&a, step);
        if a.get(pi, pj).is_zero() {
            return Ok(T::zero());
        }
        if pi != step {
            swap_rows(&mut a, step, pi);
            sign_flip = !sign_flip;
        }
        if pj != step {
            swap_cols(&mut a, step, pj);
            sign_flip = !sign_flip;
        }
        let pivot = a.get(step, step).clone();
        det = det.mul_ref(&pivot);
        for i in step + 1..n {
            let factor = a.get(i, step).div_ref(&pivot);
            if factor.is_zero() {
                continue;
            }
            for j in step + 1..n {
                let v = a.get(i, j).sub_ref(&factor.mul_ref(a.get(step, j)));
                a.set(i, j, v);
            }
            a.set(i, step, T::zero());
        }
    }
    Ok(if sign_flip { det.neg_ref() } else { det })
}

/// Solve A x = b with full pivoting.  Errors out loudly when the matrix is
/// singular to working precision instead of returning garbage.
pub fn solve_linear<T: Scalar>(m: &Matrix<T>, rhs: &[T]) -> Result<Vec<T>, NumError> {
    let n = check_square(m)?;
    if rhs.len() != n {
        return Err(NumError::DimensionMismatch(format!(
            "rhs length {} for {}x{} matrix",
            rhs.len(),
            n,
            n
        )));
    }
    let mut a = m.clone();
    let mut b = rhs.to_vec();
    let mut col_perm: Vec<usize> = (0..n).collect();
    let floor = singular_floor(&a);
    for step in 0..n {
        let (pi, pj) = best_pivot(&a, step);
        let w = a.get(pi, pj).pivot_weight();
        if a.get(pi, pj).is_zero() || w < floor {
            return Err(NumError::Singular { step });
        }
        if pi != step {
            swap_rows(&mut a, step, pi);
            b.swap(step, pi);
        }
        if pj != step {
            swap_cols(&mut a, step, pj);
            col_perm.swap(step, pj);
        }
        let pivot = a.get(step, step).clone();
        for i in step + 1..n {
            let factor = a.get(i, step).div_ref(&pivot);
            if factor.is_zero() {
                continue;
            }
            for j in step + 1..n {
                let v = a.get(i, j).sub_ref(&factor.mul_ref(a.get(step, j)));
                a.set(i, j, v);
            }
            b[i] = b[i].sub_ref(&factor.mul_ref(&b[step]));
            a.set(i, step, T::zero());
        }
    }
    // back substitution
    let mut y = vec![T::zero(); n];
    for i in (0..n).rev() {
        let mut acc = b[i].clone();
        for j in i + 1..n {
            acc = acc.sub_ref(&a.get(i, j).mul_ref(&y[j]));
        }
        y[i] = acc.div_ref(a.get(i, i));
    }
    // undo column permutation
    let mut x = vec![T::zero(); n];
    for (slot, &orig) in col_perm.iter().enumerate() {
        x[orig] = y[slot].clone();
    }
    Ok(x)
}

/// Threshold below which a pivot is treated as numerically zero: the matrix
/// scale reduced by nearly the full working precision.  Exact scalars have
/// no floor; any nonzero pivot is valid for them.
fn singular_floor<T: Scalar>(a: &Matrix<T>) -> f64 {
    let mut scale = f64::NEG_INFINITY;
    let mut digits: Option<f64> = None;
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            let e = a.get(i, j);
            scale = scale.max(e.pivot_weight());
            if digits.is_none() {
                digits = e.precision_digits();
            }
        }
    }
    match digits {
        Some(d) => scale - (d - 5.0).max(5.0),
        None => f64::NEG_INFINITY,
    }
}

fn best_pivot<T: Scalar>(a: &Matrix<T>, step: usize) -> (usize, usize) {
    let n = a.nrows();
    let mut bi = step;
    let mut bj = step;
    let mut bw = f64::NEG_INFINITY;
    for i in step..n {
        for j in step..n {
            let w = a.get(i, j).pivot_weight();
            if w > bw {
                bw = w;
                bi = i;
                bj = j;
            }
        }
    }
    (bi, bj)
}

fn swap_rows<T: Scalar>(a: &mut Matrix<T>, r1: usize, r2: usize) {
    for j in 0..a.ncols() {
        let x = a.get(r1, j).clone();
        let y = a.get(r2, j).clone();
        a.set(r1, j, y);
        a.set(r2, j, x);
    }
}

fn swap_cols<T: Scalar>(a: &mut Matrix<T>, c1: usize, c2: usize) {
    for i in 0..a.nrows() {
        let x = a.get(i, c1).clone();
        let y = a.get(i, c2).clone();
        a.set(i, c1, y);
        a.set(i, c2, x);
    }
}

/// Cofactor-expansion determinant for ring scalars (no division), used for
/// small symbolic matrices such as polynomial Sylvester blocks.
pub fn determinant_cofactor<T: Scalar>(m: &Matrix<T>) -> Result<T, NumError> {
    let n = check_square(m)?;
    fn go<T: Scalar>(m: &Matrix<T>, cols: &mut Vec<usize>, row: usize) -> T {
        if cols.len() == 1 {
            return m.get(row, cols[0]).clone();
        }
        let mut acc = T::zero();
        for k in 0..cols.len() {
            let c = cols.remove(k);
            let sub = go(m, cols, row + 1);
            cols.insert(k, c);
            let term = m.get(row, c).mul_ref(&sub);
            acc = if k % 2 == 0 {
                acc.add_ref(&term)
            } else {
                acc.sub_ref(&term)
            };
        }
        acc
    }
    if n > 7 {
        return Err(NumError::InvalidInput(
            "cofactor determinant limited to n <= 7".into(),
        ));
    }
    let mut cols: Vec<usize> = (0..n).collect();
    Ok(go(m, &mut cols, 0))
}
