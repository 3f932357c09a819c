//! Least squares by Householder QR with collinear columns dropped.

use crate::scalar::{ordered_sum, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("column {0} is collinear with earlier columns")]
    Collinear(usize),
    #[error("columns have inconsistent lengths")]
    Shape,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LeastSquares<F> {
    /// One entry per input column; `None` for dropped columns.
    pub coef: Vec<Option<F>>,
}

impl<F: Scalar> LeastSquares<F> {
    pub fn dropped(&self) -> Vec<usize> {
        self.coef.iter().enumerate().filter(|(_, c)| c.is_none()).map(|(i, _)| i).collect()
    }
}

fn norm<F: Scalar>(xs: &[F]) -> F {
    ordered_sum(xs.iter().map(|&x| x * x)).sqrt()
}

struct Reflector<F> {
    row: usize,
    v: Vec<F>,
    beta: F,
}

impl<F: Scalar> Reflector<F> {
    fn apply(&self, x: &mut [F]) {
        let tail = &mut x[self.row..];
        let dot = ordered_sum(self.v.iter().zip(tail.iter()).map(|(&a, &b)| a * b));
        let s = self.beta * dot;
        for (t, &v) in tail.iter_mut().zip(&self.v) {
            *t = *t - s * v;
        }
    }
}

/// Minimises `|X b - y|` where `X` is given column by column.
///
/// Columns are taken in order; one whose component orthogonal to the
/// previously kept columns is below `tol` times its own norm is dropped.
/// The first `required` columns may not be dropped.
pub fn least_squares<F: Scalar>(
    columns: &[Vec<F>],
    y: &[F],
    required: usize,
    tol: F,
) -> Result<LeastSquares<F>, LinalgError> {
    let n = y.len();
    if columns.iter().any(|c| c.len() != n) {
        return Err(LinalgError::Shape);
    }
    let mut qty = y.to_vec();
    let mut refl: Vec<Reflector<F>> = Vec::new();
    let mut r_cols: Vec<(usize, Vec<F>)> = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let k = refl.len();
        let mut a = col.clone();
        for h in &refl {
            h.apply(&mut a);
        }
        let full = norm(col);
        let tail_norm = if k < n { norm(&a[k..]) } else { F::zero() };
        if k >= n || full == F::zero() || tail_norm <= tol * full {
            if j < required {
                return Err(LinalgError::Collinear(j));
            }
            continue;
        }
        let alpha = if a[k] > F::zero() { -tail_norm } else { tail_norm };
        let mut v = a[k..].to_vec();
        v[0] = v[0] - alpha;
        let vv = ordered_sum(v.iter().map(|&x| x * x));
        let h = Reflector {
            row: k,
            v,
            beta: F::lit(2.0) / vv,
        };
        h.apply(&mut qty);
        a[k] = alpha;
        a.truncate(k + 1);
        refl.push(h);
        r_cols.push((j, a));
    }
    let p = r_cols.len();
    let mut beta = vec![F::zero(); p];
    for i in (0..p).rev() {
        let mut s = qty[i];
        for (c, b) in beta.iter().enumerate().skip(i + 1) {
            s = s - r_cols[c].1[i] * *b;
        }
        beta[i] = s / r_cols[i].1[i];
    }
    let mut coef = vec![None; columns.len()];
    for (i, (j, _)) in r_cols.iter().enumerate() {
        coef[*j] = Some(beta[i]);
    }
    Ok(LeastSquares { coef })
}

/// Default collinearity tolerance: about `eps^(1/2)`.
pub fn default_tol<F: Scalar>() -> F {
    F::epsilon().sqrt() * F::lit(10.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_fit() {
        let x0 = vec![1.0, 1.0, 1.0, 1.0];
        let x1 = vec![0.0, 1.0, 2.0, 3.0];
        let y: Vec<f64> = x1.iter().map(|x| 3.0 - 2.0 * x).collect();
        let fit = least_squares(&[x0, x1], &y, 2, default_tol()).unwrap();
        assert!((fit.coef[0].unwrap() - 3.0).abs() < 1e-12);
        assert!((fit.coef[1].unwrap() + 2.0).abs() < 1e-12);
    }

    #[test]
    fn drops_collinear_column() {
        let x0 = vec![1.0; 5];
        let x1 = vec![0.0, 1.0, 0.0, 1.0, 1.0];
        let x2: Vec<f64> = x1.iter().map(|v| 2.0 * v + 1.0).collect();
        let y = vec![1.0, 2.0, 1.5, 2.5, 2.0];
        let fit = least_squares(&[x0, x1, x2], &y, 2, default_tol()).unwrap();
        assert_eq!(fit.dropped(), vec![2]);
        let err = least_squares(&[vec![1.0; 3], vec![2.0; 3]], &[1.0, 2.0, 3.0], 2, default_tol());
        assert_eq!(err.unwrap_err(), LinalgError::Collinear(1));
    }

    #[test]
    fn overdetermined_matches_normal_equations() {
        let x1 = [0.5, -1.0, 2.0, 0.0, 3.0, 1.5];
        let y = [1.0, 0.0, 4.0, 1.0, 5.5, 2.0];
        let n = x1.len() as f64;
        let (sx, sy) = (x1.iter().sum::<f64>(), y.iter().sum::<f64>());
        let sxx: f64 = x1.iter().map(|x| x * x).sum();
        let sxy: f64 = x1.iter().zip(&y).map(|(x, y)| x * y).sum();
        let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        let icpt = (sy - slope * sx) / n;
        let fit = least_squares(&[vec![1.0; 6], x1.to_vec()], &y, 2, default_tol()).unwrap();
        assert!((fit.coef[0].unwrap() - icpt).abs() < 1e-12);
        assert!((fit.coef[1].unwrap() - slope).abs() < 1e-12);
    }
}
