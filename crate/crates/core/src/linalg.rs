//! Small exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::Rational;

/// Solves `a·x = b` for square nonsingular `a`; `None` if singular.
pub(crate) fn solve(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            row.iter()
                .map(|&x| Rational::from_integer(x))
                .chain(std::iter::once(Rational::from_integer(rhs)))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in col..=n {
                    let v = m[col][c];
                    m[r][c] -= f * v;
                }
            }
        }
    }
    debug_assert!((0..n).all(|i| m[i][i].is_one()));
    Some(m.into_iter().map(|row| row[n]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_cartan_system() {
        // A2 Cartan matrix
        let a = vec![vec![2, -1], vec![-1, 2]];
        let x = solve(&a, &[1, 0]).unwrap();
        assert_eq!(x, vec![Rational::new(2, 3), Rational::new(1, 3)]);
    }

    #[test]
    fn singular_is_none() {
        let a = vec![vec![1, 2], vec![2, 4]];
        assert!(solve(&a, &[1, 1]).is_none());
    }
}
