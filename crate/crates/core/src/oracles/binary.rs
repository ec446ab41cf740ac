use num_bigint::BigUint;
use num_traits::Zero;

use crate::counting::Count;

/// Coefficients of the Gaussian binomial `[parts + largest choose parts]_q`:
/// entry `m` is the number of partitions of `m` into at most `parts` parts,
/// each at most `largest`.
pub fn bounded_partitions(parts: u32, largest: u32) -> Vec<Count> {
    // grid[j][e] is the polynomial for a j-by-e box, built with
    // G(j, e) = G(j - 1, e) + q^j G(j, e - 1)
    let (parts, largest) = (parts as usize, largest as usize);
    let mut prev_row: Vec<Vec<BigUint>> = vec![vec![BigUint::from(1u8)]; largest + 1];
    for j in 1..=parts {
        let mut row: Vec<Vec<BigUint>> = Vec::with_capacity(largest + 1);
        row.push(vec![BigUint::from(1u8)]);
        for e in 1..=largest {
            let mut poly = vec![BigUint::zero(); j * e + 1];
            for (m, c) in prev_row[e].iter().enumerate() {
                poly[m] += c;
            }
            for (m, c) in row[e - 1].iter().enumerate() {
                poly[m + j] += c;
            }
            row.push(poly);
        }
        prev_row = row;
    }
    prev_row.swap_remove(largest)
}

/// Dimension of degree-`k` invariants of the binary form of degree `d`:
/// `P(kd/2) - P(kd/2 - 1)`, zero when `kd` is odd.
pub fn classical_binary_nu(d: u32, k: u32) -> Count {
    let kd = k as usize * d as usize;
    if kd % 2 == 1 {
        return Count::zero();
    }
    let p = bounded_partitions(k, d);
    let half = kd / 2;
    let at = |m: usize| p.get(m).cloned().unwrap_or_default();
    if half == 0 {
        return at(0);
    }
    // unimodality makes this difference nonnegative
    at(half) - at(half - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Partitions of `m` with at most `parts` parts each at most `largest`,
    /// by direct recursion on the largest part.
    fn naive(m: u32, parts: u32, largest: u32) -> u64 {
        if m == 0 {
            return 1;
        }
        if parts == 0 || largest == 0 {
            return 0;
        }
        (1..=largest.min(m))
            .map(|first| naive(m - first, parts - 1, first))
            .sum()
    }

    #[test]
    fn matches_naive_recursion() {
        for parts in 0..=5 {
            for largest in 0..=5 {
                let p = bounded_partitions(parts, largest);
                assert_eq!(p.len() as u32, parts * largest + 1);
                for (m, c) in p.iter().enumerate() {
                    assert_eq!(*c, Count::from(naive(m as u32, parts, largest)));
                }
            }
        }
    }

    #[test]
    fn classical_values() {
        assert_eq!(classical_binary_nu(3, 4), Count::from(1u8));
        assert_eq!(classical_binary_nu(4, 5), Count::from(1u8));
        assert_eq!(classical_binary_nu(3, 3), Count::zero());
        for d in 1..=8 {
            assert_eq!(classical_binary_nu(d, 0), Count::from(1u8));
        }
        // binary quartic: free on degrees 2 and 3
        let quartic: Vec<u32> = (0..=6)
            .map(|k| classical_binary_nu(4, k).try_into().unwrap())
            .collect();
        assert_eq!(quartic, vec![1, 0, 1, 1, 1, 1, 2]);
    }
}
