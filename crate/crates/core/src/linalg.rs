//! Exact matrix rank over the integers by fraction-free (Bareiss) Gaussian
//! elimination.  The fast path runs in i128 with checked arithmetic and
//! escalates to arbitrary precision if any intermediate would overflow.

use num_bigint::BigInt;
use num_traits::Zero;

/// Rank of an integer matrix (exact; equals the rank over the rationals).
pub fn rank(matrix: &[Vec<i64>]) -> usize {
    match rank_i128(matrix) {
        Some(r) => r,
        None => rank_bigint(matrix),
    }
}

fn rank_i128(matrix: &[Vec<i64>]) -> Option<usize> {
    let rows = matrix.len();
    if rows == 0 {
        return Some(0);
    }
    let cols = matrix[0].len();
    let mut a: Vec<Vec<i128>> =
        matrix.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| a[i][col] != 0) else { continue };
        a.swap(rank, pivot);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let lhs = a[rank][col].checked_mul(a[i][j])?;
                let rhs = a[i][col].checked_mul(a[rank][j])?;
                a[i][j] = lhs.checked_sub(rhs)? / prev;
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
    }
    Some(rank)
}

fn rank_bigint(matrix: &[Vec<i64>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut a: Vec<Vec<BigInt>> =
        matrix.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(rank, pivot);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = (&a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![1, 2], vec![3, 4]]), 2);
        // rank 2 in a 3x4 matrix
        assert_eq!(
            rank(&[vec![1, 0, 1, 0], vec![0, 1, 0, 1], vec![1, 1, 1, 1]]),
            2
        );
    }

    #[test]
    fn bigint_path_agrees() {
        let m = vec![
            vec![2, -1, 0, 3],
            vec![5, 7, -2, 1],
            vec![0, 4, 4, 4],
            vec![7, 6, -2, 4],
        ];
        assert_eq!(rank_i128(&m).unwrap(), rank_bigint(&m));
    }
}
