//! Minimum-cost perfect matching on square integer cost matrices.

use itertools::Itertools;

/// Minimum of `Σ_i cost[i][σ(i)]` over all permutations, by enumeration.
pub fn min_cost_exhaustive(cost: &[Vec<i64>]) -> i64 {
    let l = cost.len();
    if l == 0 {
        return 0;
    }
    let mut best = i64::MAX;
    for sigma in (0..l).permutations(l) {
        let total: i64 = sigma.iter().enumerate().map(|(i, &j)| cost[i][j]).sum();
        best = best.min(total);
    }
    best
}

/// The same minimum via the O(l³) potential-based Hungarian method.
pub fn min_cost_hungarian(cost: &[Vec<i64>]) -> i64 {
    let l = cost.len();
    if l == 0 {
        return 0;
    }
    // 1-based rows/columns; column 0 is a virtual sink.
    let inf = i64::MAX / 4;
    let mut u = vec![0i64; l + 1];
    let mut v = vec![0i64; l + 1];
    let mut row_of = vec![0usize; l + 1];
    let mut way = vec![0usize; l + 1];
    for i in 1..=l {
        row_of[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![inf; l + 1];
        let mut used = vec![false; l + 1];
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let mut delta = inf;
            let mut j1 = 0usize;
            for j in 1..=l {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=l {
                if used[j] {
                    u[row_of[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if row_of[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    (1..=l).map(|j| cost[row_of[j] - 1][j - 1]).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn known_matrix() {
        let c = vec![vec![4, 1, 3], vec![2, 0, 5], vec![3, 2, 2]];
        assert_eq!(min_cost_exhaustive(&c), 5);
        assert_eq!(min_cost_hungarian(&c), 5);
    }

    #[test]
    fn solvers_agree_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let l = rng.gen_range(1..=7);
            let c: Vec<Vec<i64>> = (0..l)
                .map(|_| (0..l).map(|_| rng.gen_range(-5..10)).collect())
                .collect();
            assert_eq!(min_cost_exhaustive(&c), min_cost_hungarian(&c), "{c:?}");
        }
    }
}
