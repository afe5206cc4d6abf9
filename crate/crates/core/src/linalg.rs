//! Exact Gaussian elimination over a field of scalars.

use crate::scalar::Scalar;

/// Reduces `rows` (each of length `ncols`) to reduced row echelon form in
/// place and returns the pivot columns.
pub fn row_reduce<S: Scalar>(rows: &mut Vec<Vec<S>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = S::one() / rows[r][col].clone();
        for v in rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank<S: Scalar>(rows: &[Vec<S>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    row_reduce(&mut m, ncols).len()
}

/// Basis of `{ v : M v = 0 }` for the matrix with the given rows.
pub fn kernel<S: Scalar>(rows: &[Vec<S>], ncols: usize) -> Vec<Vec<S>> {
    let mut m = rows.to_vec();
    let pivots = row_reduce(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![S::zero(); ncols];
            v[f] = S::one();
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Incrementally maintained row-echelon basis, for rank-of-span questions
/// over long streams of vectors.
pub struct SpanBuilder<S> {
    ncols: usize,
    rows: Vec<(usize, Vec<S>)>,
}

impl<S: Scalar> SpanBuilder<S> {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, rows: Vec::new() }
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<S>) -> bool {
        assert_eq!(v.len(), self.ncols);
        for (pc, row) in &self.rows {
            if !v[*pc].is_zero() {
                let f = v[*pc].clone();
                for j in 0..self.ncols {
                    let delta = f.clone() * row[j].clone();
                    v[j] = v[j].clone() - delta;
                }
            }
        }
        let Some(pc) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = S::one() / v[pc].clone();
        for c in v.iter_mut() {
            *c = c.clone() * inv.clone();
        }
        // keep existing rows reduced against the new pivot
        for (_, row) in self.rows.iter_mut() {
            if !row[pc].is_zero() {
                let f = row[pc].clone();
                for j in 0..self.ncols {
                    let delta = f.clone() * v[j].clone();
                    row[j] = row[j].clone() - delta;
                }
            }
        }
        self.rows.push((pc, v));
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| Q::from_int(x)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a, 3), 2);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 1);
        for row in &a {
            let dot: Q = row.iter().zip(&k[0]).map(|(x, y)| x * y).sum();
            assert_eq!(dot, Q::from_int(0));
        }
    }

    #[test]
    fn empty_matrix_kernel_is_everything() {
        let k = kernel::<Q>(&[], 2);
        assert_eq!(k.len(), 2);
    }

    #[test]
    fn span_builder_matches_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1], &[0, 2, 2]]);
        let mut sb = SpanBuilder::new(3);
        let grew: Vec<bool> = a.iter().map(|r| sb.insert(r.clone())).collect();
        assert_eq!(grew, vec![true, false, true, false]);
        assert_eq!(sb.rank(), rank(&a, 3));
    }
}
