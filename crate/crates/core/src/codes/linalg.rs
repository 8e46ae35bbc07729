//! Exact Gaussian elimination over a [`Field`].

use crate::gf::Field;

pub type Matrix<E> = Vec<Vec<E>>;

/// Reduced row echelon form of `rows` (each of length `ncols`), with zero
/// rows dropped. Returns the nonzero rows and their pivot columns.
pub fn rref<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut m: Matrix<F::Elem> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == m.len() {
            break;
        }
        let Some(found) = (top..m.len()).find(|&i| !field.is_zero(&m[i][col])) else {
            continue;
        };
        m.swap(top, found);
        let inv = field.inv(&m[top][col]).expect("pivot is nonzero");
        for x in m[top].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = m[top].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == top || field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = field.sub(x, &field.mul(&factor, p));
            }
        }
        pivots.push(col);
        top += 1;
    }
    m.truncate(top);
    (m, pivots)
}

pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> usize {
    rref(field, rows, ncols).1.len()
}

/// A basis of `{x : row·x = 0 for every row}`.
pub fn null_space<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Matrix<F::Elem> {
    let (reduced, pivots) = rref(field, rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); ncols];
            v[free] = field.one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = field.neg(&row[free]);
            }
            v
        })
        .collect()
}

/// Whether every row of `b` lies in the row space of `a`.
pub fn row_space_contains<F: Field>(
    field: &F,
    a: &[Vec<F::Elem>],
    b: &[Vec<F::Elem>],
    ncols: usize,
) -> bool {
    let base = rank(field, a, ncols);
    let mut stacked = a.to_vec();
    stacked.extend_from_slice(b);
    rank(field, &stacked, ncols) == base
}

pub fn same_row_space<F: Field>(
    field: &F,
    a: &[Vec<F::Elem>],
    b: &[Vec<F::Elem>],
    ncols: usize,
) -> bool {
    let ra = rank(field, a, ncols);
    ra == rank(field, b, ncols) && row_space_contains(field, a, b, ncols)
}

pub fn dot<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    a.iter()
        .zip(b)
        .fold(field.zero(), |acc, (x, y)| field.add(&acc, &field.mul(x, y)))
}

/// `message · rows`.
pub fn combine<F: Field>(field: &F, message: &[F::Elem], rows: &[Vec<F::Elem>], ncols: usize) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); ncols];
    for (c, row) in message.iter().zip(rows) {
        if field.is_zero(c) {
            continue;
        }
        for (o, x) in out.iter_mut().zip(row) {
            *o = field.add(o, &field.mul(c, x));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;

    #[test]
    fn rank_and_null_space_over_gf7() {
        let f = FieldCtx::new(7, 1).unwrap();
        let rows = vec![vec![1, 2, 3, 4], vec![0, 1, 2, 3], vec![1, 3, 5, 0]];
        // Third row is the sum of the first two.
        assert_eq!(rank(&f, &rows, 4), 2);
        let ns = null_space(&f, &rows, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                assert_eq!(dot(&f, r, v), 0);
            }
        }
        assert!(same_row_space(&f, &rows[..2], &rows, 4));
        assert!(!row_space_contains(&f, &rows[..1], &rows, 4));
    }

    #[test]
    fn empty_inputs() {
        let f = FieldCtx::new(2, 1).unwrap();
        let none: Matrix<u64> = Vec::new();
        assert_eq!(rank(&f, &none, 3), 0);
        assert_eq!(null_space(&f, &none, 3).len(), 3);
        assert!(null_space(&f, &[vec![1, 0], vec![0, 1]], 2).is_empty());
    }
}
