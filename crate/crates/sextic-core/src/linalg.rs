//! Dense exact linear algebra over any [`Field`].

use alloc::vec;
use alloc::vec::Vec;

use crate::exactfield::Field;

pub type Matrix<F> = Vec<Vec<F>>;

/// Reduced row echelon form with leftmost pivots. Returns the reduced
/// nonzero rows and the pivot columns.
pub fn rref<F: Field>(m: &[Vec<F>]) -> (Matrix<F>, Vec<usize>) {
    let mut a: Matrix<F> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].try_inv().expect("pivot is nonzero");
        for j in c..cols {
            a[r][j] = a[r][j].mul_ref(&inv);
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let v = a[r][j].mul_ref(&f);
                    a[i][j] = a[i][j].sub_ref(&v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    rref(m).1.len()
}

/// Basis of the right kernel {v : m·v = 0}.
pub fn kernel<F: Field>(m: &[Vec<F>], cols: usize) -> Matrix<F> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); cols];
            v[f] = F::one();
            for (row, &pc) in r.iter().zip(pivots.iter()) {
                v[pc] = row[f].neg_ref();
            }
            v
        })
        .collect()
}

/// Solve `m·x = b` for one solution, if any.
pub fn solve<F: Field>(m: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let cols = m.first().map_or(0, Vec::len);
    let aug: Matrix<F> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (row, &pc) in r.iter().zip(pivots.iter()) {
        x[pc] = row[cols].clone();
    }
    Some(x)
}

pub fn mat_mul<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Matrix<F> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(F::zero(), |acc, (x, brow)| acc.add_ref(&x.mul_ref(&brow[j])))
                })
                .collect()
        })
        .collect()
}

/// Whether two families of vectors span the same subspace.
pub fn same_span<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> bool {
    let ra = rank(a);
    let rb = rank(b);
    if ra != rb {
        return false;
    }
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    rank(&both) == ra
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::CycloNum;

    fn q(n: i64) -> CycloNum {
        CycloNum::from_int(n)
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        assert_eq!(rank(&m), 1);
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot = v.iter().zip(&m[0]).fold(q(0), |a, (x, y)| a + x.clone() * y.clone());
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        assert_eq!(solve(&m, &[q(2), q(0)]).unwrap(), vec![q(1), q(1)]);
        let s = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert!(solve(&s, &[q(1), q(3)]).is_none());
    }
}
