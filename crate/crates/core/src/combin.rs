//! Indexing of strictly increasing index tuples in lexicographic order.

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All `k`-subsets of `0..n`, each sorted, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binom(n, k));
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Lexicographic rank of a sorted subset among all subsets of its size.
pub fn subset_rank(n: usize, subset: &[usize]) -> usize {
    let k = subset.len();
    let mut r = 0;
    let mut prev = 0;
    for (i, &c) in subset.iter().enumerate() {
        for v in prev..c {
            r += binom(n - 1 - v, k - 1 - i);
        }
        prev = c + 1;
    }
    r
}

/// Sorts `tuple` in place and returns the permutation sign, or `None` when an
/// index repeats.
pub fn sort_with_sign(tuple: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..tuple.len() {
        let mut j = i;
        while j > 0 && tuple[j - 1] > tuple[j] {
            tuple.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if tuple.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_matches_enumeration() {
        for n in 0..8 {
            for k in 0..=n {
                let all = subsets(n, k);
                assert_eq!(all.len(), binom(n, k));
                for (i, s) in all.iter().enumerate() {
                    assert_eq!(subset_rank(n, s), i);
                }
            }
        }
    }

    #[test]
    fn sign_of_sort() {
        let mut t = [2, 0, 1];
        assert_eq!(sort_with_sign(&mut t), Some(1));
        assert_eq!(t, [0, 1, 2]);
        let mut t = [1, 0];
        assert_eq!(sort_with_sign(&mut t), Some(-1));
        let mut t = [1, 1];
        assert_eq!(sort_with_sign(&mut t), None);
    }
}
