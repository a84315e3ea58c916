//! Word-level helpers for adjacency rows stored as packed `u64` bitsets.

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn test(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
pub(crate) fn set(row: &mut [u64], i: usize) {
    row[i / 64] |= 1 << (i % 64);
}

#[inline]
pub(crate) fn clear(row: &mut [u64], i: usize) {
    row[i / 64] &= !(1 << (i % 64));
}

#[inline]
pub(crate) fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn count_and(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

/// Iterator over the set bits of a row, in ascending order.
pub(crate) struct Ones<'a> {
    row: &'a [u64],
    word: usize,
    current: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(row: &'a [u64]) -> Self {
        Ones {
            row,
            word: 0,
            current: row.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.current = self.row[self.word];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_spans_word_boundaries() {
        let mut row = vec![0u64; 3];
        for i in [0, 63, 64, 130] {
            set(&mut row, i);
        }
        assert_eq!(Ones::new(&row).collect::<Vec<_>>(), vec![0, 63, 64, 130]);
        assert_eq!(count(&row), 4);
        clear(&mut row, 63);
        assert!(!test(&row, 63));
        assert_eq!(Ones::new(&[]).next(), None);
    }
}
