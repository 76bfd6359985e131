//! Small exact linear algebra over the rationals: rank, nullspace, solving.

use crate::scalar::Scalar;
use num_traits::Zero;

/// Row-reduce in place; returns pivot column indices.
fn row_reduce(m: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = vec![];
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pv = m[r][c].clone();
        for x in &mut m[r] {
            *x /= &pv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &m[r][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(matrix: &[Vec<Scalar>]) -> usize {
    let mut m = matrix.to_vec();
    row_reduce(&mut m).len()
}

/// Basis of the right nullspace of `matrix`.
pub fn nullspace(matrix: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let mut m = matrix.to_vec();
    if m.is_empty() {
        return vec![];
    }
    let cols = m[0].len();
    let pivots = row_reduce(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Scalar::zero(); cols];
            v[fc] = Scalar::from_integer(1.into());
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[ri][fc].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn rank_and_nullspace() {
        let m = vec![
            vec![int(1), int(2), int(3), int(4)],
            vec![int(2), int(4), int(6), int(8)],
            vec![int(0), int(1), int(0), int(1)],
        ];
        assert_eq!(rank(&m), 2);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &m {
                let dot: Scalar = row.iter().zip(&v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }
}
