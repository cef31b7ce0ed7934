//! Small fixed-capacity bitsets used by the enumeration hot paths.

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub(crate) struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn zero(capacity: usize) -> Self {
        Bits {
            words: vec![0; capacity.div_ceil(64)],
        }
    }

    pub fn set(&mut self, idx: usize) {
        self.words[idx / 64] |= 1 << (idx % 64);
    }

    #[cfg(test)]
    pub fn clear(&mut self, idx: usize) {
        self.words[idx / 64] &= !(1 << (idx % 64));
    }

    #[cfg(test)]
    pub fn test(&self, idx: usize) -> bool {
        self.words[idx / 64] >> (idx % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and_assign(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// `|self ∩ other|` without allocating.
    pub fn and_count(&self, other: &Bits) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `|self ∖ other|` without allocating.
    pub fn minus_count(&self, other: &Bits) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &Bits) -> bool {
        self.and_count(other) == 0
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * 64 + bit)
                }
            })
        })
    }
}

/// Visits all `k`-element index combinations of `0..m` in lexicographic
/// order, reusing one buffer. The callback returns `false` to stop early.
pub(crate) fn for_each_combination<F>(m: usize, k: usize, mut f: F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    if k > m {
        return true;
    }
    if k == 0 {
        return f(&[]);
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return false;
        }
        // advance to the next combination
        let mut pos = k;
        loop {
            if pos == 0 {
                return true;
            }
            pos -= 1;
            if idx[pos] != pos + m - k {
                break;
            }
        }
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// Collects all `k`-element combinations of `0..m` (lexicographic order).
pub(crate) fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_combination(m, k, |c| {
        out.push(c.to_vec());
        true
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bits_roundtrip() {
        let mut b = Bits::zero(130);
        b.set(0);
        b.set(64);
        b.set(129);
        assert!(b.test(64));
        assert!(!b.test(63));
        assert_eq!(b.count(), 3);
        assert_eq!(b.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        b.clear(64);
        assert_eq!(b.count(), 2);
    }

    #[test]
    fn combination_order() {
        let combos = combinations(4, 2);
        assert_eq!(
            combos,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
