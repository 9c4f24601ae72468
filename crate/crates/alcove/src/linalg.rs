//! Small exact-rational linear algebra helpers (Gaussian elimination scale).

use num_rational::Rational64;
use num_traits::{One, Zero};

pub type Rat = Rational64;

/// Rank of a rational matrix, by elimination on a working copy.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let pivot = (rank..nrows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let inv = Rat::one() / m[rank][col];
        for c in col..ncols {
            m[rank][c] *= inv;
        }
        for r in 0..nrows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in col..ncols {
                    let sub = f * m[rank][c];
                    m[r][c] -= sub;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

pub fn rank_int(rows: &[Vec<i64>]) -> usize {
    let rat: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Rat::from_integer(x)).collect())
        .collect();
    rank(&rat)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rat>),
    Underdetermined,
    Inconsistent,
}

/// Solve `rows * x = rhs` exactly. The system may be overdetermined; the
/// result is `Unique` only when the coefficient rank equals the number of
/// unknowns and every row is consistent.
pub fn solve(rows: &[Vec<Rat>], rhs: &[Rat]) -> Solution {
    assert_eq!(rows.len(), rhs.len());
    let nrows = rows.len();
    if nrows == 0 {
        return Solution::Underdetermined;
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(*b);
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..ncols {
        let pivot = (prow..nrows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(prow, p);
        let inv = Rat::one() / m[prow][col];
        for c in col..=ncols {
            m[prow][c] *= inv;
        }
        for r in 0..nrows {
            if r != prow && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in col..=ncols {
                    let sub = f * m[prow][c];
                    m[r][c] -= sub;
                }
            }
        }
        pivots.push(col);
        prow += 1;
        if prow == nrows {
            break;
        }
    }
    for r in prow..nrows {
        if !m[r][ncols].is_zero() {
            return Solution::Inconsistent;
        }
    }
    if pivots.len() < ncols {
        return Solution::Underdetermined;
    }
    let mut x = vec![Rat::zero(); ncols];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = m[row][ncols];
    }
    Solution::Unique(x)
}

/// Exact inverse of a square rational matrix. Panics on singular input;
/// callers only invert Cartan matrices already validated as positive definite.
pub fn invert(mat: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    let n = mat.len();
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|r| {
            let mut row: Vec<Rat> = mat[r].iter().map(|&x| Rat::from_integer(x)).collect();
            for c in 0..n {
                row.push(if r == c { Rat::one() } else { Rat::zero() });
            }
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("matrix is singular");
        m.swap(col, p);
        let inv = Rat::one() / m[col][col];
        for c in 0..2 * n {
            m[col][c] *= inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in 0..2 * n {
                    let sub = f * m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

pub fn mat_vec_rat(mat: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    mat.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| *a * *b).sum())
        .collect()
}

pub fn dot_int_rat(ints: &[i64], rats: &[Rat]) -> Rat {
    ints.iter()
        .zip(rats)
        .map(|(&a, b)| Rat::from_integer(a) * *b)
        .sum()
}

pub fn dot_int(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_integer(n)
    }

    #[test]
    fn rank_and_solve() {
        assert_eq!(rank_int(&[vec![2, -1], vec![-1, 2]]), 2);
        assert_eq!(rank_int(&[vec![1, 1], vec![2, 2]]), 1);
        let sol = solve(
            &[vec![r(2), r(-1)], vec![r(-1), r(2)]],
            &[r(1), r(0)],
        );
        assert_eq!(sol, Solution::Unique(vec![Rat::new(2, 3), Rat::new(1, 3)]));
        assert_eq!(
            solve(&[vec![r(1), r(1)], vec![r(2), r(2)]], &[r(0), r(1)]),
            Solution::Inconsistent
        );
        assert_eq!(
            solve(&[vec![r(1), r(1)]], &[r(0)]),
            Solution::Underdetermined
        );
    }

    #[test]
    fn invert_cartan_a2() {
        let inv = invert(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(inv[0], vec![Rat::new(2, 3), Rat::new(1, 3)]);
        assert_eq!(inv[1], vec![Rat::new(1, 3), Rat::new(2, 3)]);
    }
}
