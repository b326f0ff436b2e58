//! Exact rank by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Scales a rational row by the lcm of its denominators.
pub fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

/// Rank of an integer matrix given as rows. Every intermediate entry is a
/// minor of the input, so each division by the previous pivot is exact.
pub fn rank_fraction_free(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[col]);
            for c in col + 1..ncols {
                let v = pivot * &row[c] - &lead * &pivot_row[c];
                debug_assert!((&v % &prev).is_zero());
                row[c] = v / &prev;
            }
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}

pub fn rank_rational(rows: &[Vec<BigRational>]) -> usize {
    rank_fraction_free(rows.iter().map(|r| integer_row(r)).collect())
}
