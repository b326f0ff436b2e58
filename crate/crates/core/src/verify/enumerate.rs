use std::collections::HashMap;

use crate::hilbert::{is_o_sequence_entries, macaulay_growth, HVector};

/// Streams every O-sequence with socle degree `<= max_c`, all entries
/// `<= max_entry`, and the given prefix (default `(1)`), in graded-lex order:
/// shorter sequences first, then lexicographically.
///
/// A prefix that is not itself an O-sequence with positive entries within
/// `max_entry` yields nothing.
pub fn enumerate_osequences(max_c: usize, max_entry: u64, prefix: Option<&[u64]>) -> OSequenceIter {
    let prefix = prefix.unwrap_or(&[1]).to_vec();
    let valid = !prefix.is_empty()
        && prefix.iter().all(|&v| v >= 1 && v <= max_entry.max(1))
        && is_o_sequence_entries(&prefix)
        && prefix.len() <= max_c + 1;
    OSequenceIter {
        fixed: prefix.len(),
        current: if valid { Some(prefix) } else { None },
        max_len: max_c + 1,
        max_entry,
        growth: HashMap::new(),
    }
}

pub struct OSequenceIter {
    fixed: usize,
    current: Option<Vec<u64>>,
    max_len: usize,
    max_entry: u64,
    growth: HashMap<(u64, usize), u64>,
}

impl OSequenceIter {
    /// Largest value allowed at `pos` after `prev`.
    fn bound(&mut self, prev: u64, pos: usize) -> u64 {
        let cap = self.max_entry;
        *self.growth.entry((prev, pos - 1)).or_insert_with(|| {
            match macaulay_growth(prev, pos - 1) {
                Ok(g) => g.min(cap as u128) as u64,
                Err(_) => cap,
            }
        })
    }

    fn advance(&mut self, mut cur: Vec<u64>) -> Option<Vec<u64>> {
        for k in (self.fixed..cur.len()).rev() {
            if cur[k] < self.bound(cur[k - 1], k) {
                cur[k] += 1;
                for v in &mut cur[k + 1..] {
                    *v = 1;
                }
                return Some(cur);
            }
        }
        if cur.len() < self.max_len && self.max_entry >= 1 {
            let len = cur.len() + 1;
            let mut next = cur;
            next.truncate(self.fixed);
            next.resize(len, 1);
            return Some(next);
        }
        None
    }
}

impl Iterator for OSequenceIter {
    type Item = HVector;

    fn next(&mut self) -> Option<HVector> {
        let cur = self.current.take()?;
        let out = HVector::new(cur.clone()).expect("enumerated sequences are valid");
        self.current = self.advance(cur);
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::is_o_sequence;
    use std::collections::BTreeSet;

    fn shown(it: OSequenceIter) -> Vec<String> {
        it.map(|h| h.to_string()).collect()
    }

    #[test]
    fn codimension_three_degree_two() {
        let all = shown(enumerate_osequences(2, 6, Some(&[1, 3])));
        assert_eq!(all, ["1,3", "1,3,1", "1,3,2", "1,3,3", "1,3,4", "1,3,5", "1,3,6"]);
    }

    #[test]
    fn growth_limits_entries() {
        let all = shown(enumerate_osequences(2, 9, Some(&[1, 2])));
        assert_eq!(all, ["1,2", "1,2,1", "1,2,2", "1,2,3"]);
    }

    #[test]
    fn invalid_prefix_is_empty() {
        assert_eq!(enumerate_osequences(5, 20, Some(&[1, 3, 7])).count(), 0);
        assert_eq!(enumerate_osequences(5, 20, Some(&[2])).count(), 0);
        assert_eq!(enumerate_osequences(1, 20, Some(&[1, 3, 3])).count(), 0);
        assert_eq!(enumerate_osequences(5, 2, Some(&[1, 3])).count(), 0);
    }

    #[test]
    fn default_prefix() {
        let all = shown(enumerate_osequences(2, 2, None));
        assert_eq!(all, ["1", "1,1", "1,2", "1,1,1", "1,2,1", "1,2,2"]);
    }

    /// Brute force: all positive sequences within the caps, filtered.
    fn brute(max_c: usize, max_entry: u64, prefix: &[u64]) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        for len in prefix.len()..=max_c + 1 {
            let free = len - prefix.len();
            let total = (max_entry as usize).pow(free as u32);
            for code in 0..total {
                let mut seq = prefix.to_vec();
                let mut x = code;
                let mut tail = Vec::new();
                for _ in 0..free {
                    tail.push((x % max_entry as usize) as u64 + 1);
                    x /= max_entry as usize;
                }
                tail.reverse();
                seq.extend(tail);
                if is_o_sequence_entries(&seq) {
                    out.push(seq);
                }
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    #[test]
    fn matches_brute_force() {
        for (max_c, max_entry, prefix) in [(4, 6, vec![1, 3]), (5, 4, vec![1]), (4, 7, vec![1, 3, 4])] {
            let got: Vec<Vec<u64>> = enumerate_osequences(max_c, max_entry, Some(&prefix))
                .map(|h| h.entries().to_vec())
                .collect();
            assert_eq!(got, brute(max_c, max_entry, &prefix), "{max_c} {max_entry} {prefix:?}");
        }
    }

    #[test]
    fn stream_is_duplicate_free_and_valid() {
        let all: Vec<HVector> = enumerate_osequences(6, 10, Some(&[1, 3])).collect();
        let set: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(is_o_sequence));
    }
}
