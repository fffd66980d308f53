//! Sorted one-based index subsets of `[n] = {1, ..., n}`.

use crate::error::{Error, Result};

/// A sorted subset of `[n]` with one-based entries.
pub type Subset = Vec<usize>;

/// All `k`-subsets of `[n]` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Subset> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(cur.clone());
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - (k - 1 - i) {
                break;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// `[k] = {1, ..., k}`
pub fn initial(k: usize) -> Subset {
    (1..=k).collect()
}

/// `[n] \ [n-k] = {n-k+1, ..., n}`
pub fn terminal(n: usize, k: usize) -> Subset {
    (n - k + 1..=n).collect()
}

pub fn sum(set: &[usize]) -> usize {
    set.iter().sum()
}

/// Componentwise (Gale) order on sorted sets of equal size.
pub fn gale_le(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn complement(set: &[usize], n: usize) -> Subset {
    (1..=n).filter(|i| !set.contains(i)).collect()
}

/// `I^perp = {n + 1 - i : i in [n] \ I}`, sorted.
pub fn i_perp(set: &[usize], n: usize) -> Subset {
    let mut out: Vec<usize> = complement(set, n).into_iter().map(|i| n + 1 - i).collect();
    out.sort_unstable();
    out
}

/// Checks that `set` is a strictly increasing subset of `[n]`.
pub fn validate(set: &[usize], n: usize) -> Result<()> {
    for (idx, &i) in set.iter().enumerate() {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, bound: n });
        }
        if idx > 0 && set[idx - 1] >= i {
            return Err(Error::InvalidInput(format!("subset {set:?} is not strictly increasing")));
        }
    }
    Ok(())
}

/// The key format `"1,3"` used in JSON.
pub fn key(set: &[usize]) -> String {
    set.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

pub fn parse_key(s: &str) -> Result<Subset> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad subset key {s:?}")))
        })
        .collect()
}

/// Sorts an index sequence, returning the sign of the sorting permutation,
/// or `None` if an index repeats.
pub fn sort_with_sign(seq: &[usize]) -> Option<(Subset, i8)> {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] == seq[j] {
                return None;
            }
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    let mut v = seq.to_vec();
    v.sort_unstable();
    Some((v, if inversions.is_multiple_of(2) { 1 } else { -1 }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration() {
        assert_eq!(k_subsets(4, 2).len(), 6);
        assert_eq!(k_subsets(4, 2)[0], vec![1, 2]);
        assert_eq!(k_subsets(4, 2)[5], vec![3, 4]);
        assert_eq!(k_subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(k_subsets(2, 3).is_empty());
        assert_eq!(k_subsets(6, 3).len(), 20);
    }

    #[test]
    fn perp_examples() {
        assert_eq!(i_perp(&[1, 2], 4), vec![1, 2]);
        assert_eq!(i_perp(&[1, 3], 4), vec![1, 3]);
        assert_eq!(i_perp(&[1, 2, 3], 7), vec![1, 2, 3, 4]);
    }

    #[test]
    fn gale() {
        assert!(gale_le(&[1, 2], &[2, 3]));
        assert!(!gale_le(&[2], &[1]));
        assert!(!gale_le(&[1, 4], &[2, 3]));
    }

    #[test]
    fn signs() {
        assert_eq!(sort_with_sign(&[2, 1, 3]), Some((vec![1, 2, 3], -1)));
        assert_eq!(sort_with_sign(&[3, 1, 2]), Some((vec![1, 2, 3], 1)));
        assert_eq!(sort_with_sign(&[1, 1]), None);
    }
}
