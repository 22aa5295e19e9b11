//! Permutations of `{1..m}`, canonical cycle notation and the fundamental
//! bijection between permutations and words.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{1..m}` in one-line form: `images[i - 1] = π(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

/// A rearrangement of `{1..m}` read as a sequence of letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<usize>,
}

/// Disjoint cycles covering `{1..m}`.
///
/// Values built by [`Permutation::canonical_cycles`] are canonical: every
/// cycle starts with its largest letter and cycles are ordered by increasing
/// first letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleForm {
    cycles: Vec<Vec<usize>>,
}

/// Checks that `values` is a rearrangement of `{1..values.len()}`.
fn check_rearrangement(values: &[usize]) -> Result<()> {
    let m = values.len();
    let mut seen = vec![false; m];
    for (pos, &v) in values.iter().enumerate() {
        if v == 0 || v > m {
            return Err(Error::InvalidPermutation {
                len: m,
                reason: format!("value {v} at position {} out of range", pos + 1),
            });
        }
        if std::mem::replace(&mut seen[v - 1], true) {
            return Err(Error::InvalidPermutation {
                len: m,
                reason: format!("value {v} repeated at position {}", pos + 1),
            });
        }
    }
    Ok(())
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        check_rearrangement(&images)?;
        Ok(Permutation { images })
    }

    /// Caller guarantees `images` is a rearrangement of `{1..len}`.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(check_rearrangement(&images).is_ok());
        Permutation { images }
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (1..=m).collect(),
        }
    }

    /// Builds a permutation on `{1..m}` from disjoint cycles. Letters not
    /// mentioned are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(cycles: &[C], m: usize) -> Result<Self> {
        let mut images = vec![0usize; m];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (j, &a) in cycle.iter().enumerate() {
                if a == 0 || a > m {
                    return Err(Error::InvalidPermutation {
                        len: m,
                        reason: format!("letter {a} out of range"),
                    });
                }
                if images[a - 1] != 0 {
                    return Err(Error::InvalidPermutation {
                        len: m,
                        reason: format!("letter {a} appears twice"),
                    });
                }
                images[a - 1] = cycle[(j + 1) % cycle.len()];
            }
        }
        for (i, slot) in images.iter_mut().enumerate() {
            if *slot == 0 {
                *slot = i + 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// One-line notation, 1-based values.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `π(i)` for `1 ≤ i ≤ m`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn canonical_cycles(&self) -> CycleForm {
        let m = self.len();
        let mut seen = vec![false; m];
        let mut cycles = Vec::new();
        // Scanning from the largest letter down, the first unseen letter of
        // each cycle is its maximum.
        for start in (1..=m).rev() {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut next = self.images[start - 1];
            while next != start {
                seen[next - 1] = true;
                cycle.push(next);
                next = self.images[next - 1];
            }
            cycles.push(cycle);
        }
        cycles.reverse();
        CycleForm { cycles }
    }

    /// Cycle lengths, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths = cycle_lengths(&self.images);
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn cycle_count(&self) -> usize {
        cycle_lengths(&self.images).len()
    }

    /// Number of cycles of length exactly `k`.
    pub fn count_k_cycles(&self, k: usize) -> usize {
        count_k_cycles_in(&self.images, k, &mut vec![false; self.len()])
    }
}

fn cycle_lengths(images: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; images.len()];
    let mut lengths = Vec::new();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            i = images[i] - 1;
        }
        lengths.push(len);
    }
    lengths
}

/// Counts k-cycles of a one-line permutation using caller-provided scratch of
/// the same length. Used on enumeration hot paths.
pub(crate) fn count_k_cycles_in(images: &[usize], k: usize, seen: &mut [bool]) -> usize {
    seen.fill(false);
    let mut count = 0;
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            i = images[i] - 1;
        }
        if len == k {
            count += 1;
        }
    }
    count
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical_cycles().fmt(f)
    }
}

impl CycleForm {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn into_cycles(self) -> Vec<Vec<usize>> {
        self.cycles
    }

    pub fn is_canonical(&self) -> bool {
        self.cycles.iter().all(|c| {
            c.first()
                .is_some_and(|&head| c.iter().all(|&a| a <= head))
        }) && self.cycles.windows(2).all(|w| w[0][0] < w[1][0])
    }

    /// Concatenation of the cycles with parentheses dropped.
    pub fn to_word(&self) -> Word {
        Word {
            letters: self.cycles.iter().flatten().copied().collect(),
        }
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in &self.cycles {
            f.write_str("(")?;
            for (j, a) in cycle.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        check_rearrangement(&letters)?;
        Ok(Word { letters })
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<usize>) -> Self {
        debug_assert!(check_rearrangement(&letters).is_ok());
        Word { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `w_i` for `1 ≤ i ≤ m`.
    pub fn letter(&self, i: usize) -> usize {
        self.letters[i - 1]
    }

    pub fn records(&self) -> Vec<usize> {
        records(&self.letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, a) in self.letters.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Ascending 1-based positions of the left-to-right maxima of `letters`.
pub fn records(letters: &[usize]) -> Vec<usize> {
    let mut max = 0;
    let mut out = Vec::new();
    for (pos, &a) in letters.iter().enumerate() {
        if a > max {
            max = a;
            out.push(pos + 1);
        }
    }
    out
}

/// The word obtained by writing `p` in canonical cycle notation and dropping
/// the parentheses.
pub fn stanley_hat(p: &Permutation) -> Word {
    p.canonical_cycles().to_word()
}

/// Inverse of [`stanley_hat`]: a new cycle opens before every record.
pub fn stanley_unhat(w: &Word) -> Permutation {
    Permutation::from_images_unchecked(unhat_images(w.letters()))
}

pub(crate) fn unhat_images(letters: &[usize]) -> Vec<usize> {
    let m = letters.len();
    let mut images = vec![0usize; m];
    let mut start = 0;
    let mut max = 0;
    for pos in 0..=m {
        let opens = pos == m || letters[pos] > max;
        if opens && pos > start {
            let cycle = &letters[start..pos];
            for j in 0..cycle.len() {
                images[cycle[j] - 1] = cycle[(j + 1) % cycle.len()];
            }
            start = pos;
        }
        if pos < m && letters[pos] > max {
            max = letters[pos];
        }
    }
    images
}

/// Window test for whether the letter at position `i` opens a k-cycle once
/// the word is cut at its records: every letter strictly before position
/// `i + k` is at most `w_i`, and either `w_{i+k}` exceeds `w_i` or the word
/// ends exactly at `i + k - 1`.
pub fn opens_k_cycle(letters: &[usize], i: usize, k: usize) -> bool {
    let m = letters.len();
    if k == 0 || i == 0 || i > m || i + k > m + 1 {
        return false;
    }
    let head = letters[i - 1];
    if letters[..i + k - 1].iter().any(|&a| a > head) {
        return false;
    }
    i + k == m + 1 || letters[i + k - 1] > head
}

pub fn factorial(m: usize) -> Option<u128> {
    (1..=m as u128).try_fold(1u128, |acc, j| acc.checked_mul(j))
}

/// Lexicographic successor in place. Returns false at the last permutation.
pub(crate) fn next_lex(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// The permutation of lexicographic rank `rank` (0-based) on `{1..m}`.
pub fn unrank_lex(m: usize, mut rank: u128) -> Option<Vec<usize>> {
    let total = factorial(m)?;
    if rank >= total {
        return None;
    }
    let mut pool: Vec<usize> = (1..=m).collect();
    let mut out = Vec::with_capacity(m);
    for remaining in (1..=m).rev() {
        let block = factorial(remaining - 1)?;
        let idx = (rank / block) as usize;
        rank %= block;
        out.push(pool.remove(idx));
    }
    Some(out)
}

/// Largest `m!` the enumerators accept.
pub const MAX_ENUMERATION: u128 = u64::MAX as u128;

/// A contiguous run of permutations of `{1..m}` in lexicographic order.
///
/// The slice-level cursor (`current` / `advance`) avoids allocating per item;
/// the `Iterator` impl clones into owned [`Permutation`]s.
#[derive(Debug, Clone)]
pub struct Permutations {
    current: Vec<usize>,
    remaining: u128,
    fresh: bool,
}

impl Permutations {
    /// Ranks `start..end` in lexicographic order.
    pub fn range(m: usize, start: u128, end: u128) -> Result<Self> {
        let total = factorial(m)
            .filter(|&t| t <= MAX_ENUMERATION)
            .ok_or_else(|| Error::capacity("permutations", factorial(m), MAX_ENUMERATION))?;
        let end = end.min(total);
        let start = start.min(end);
        let current = if start < total {
            unrank_lex(m, start).expect("rank below m!")
        } else {
            (1..=m).collect()
        };
        Ok(Permutations {
            current,
            remaining: end - start,
            fresh: true,
        })
    }

    /// Moves to the next item. Returns false when the run is exhausted.
    pub fn advance(&mut self) -> bool {
        if self.remaining == 0 {
            return false;
        }
        if self.fresh {
            self.fresh = false;
        } else {
            next_lex(&mut self.current);
        }
        self.remaining -= 1;
        true
    }

    /// The item produced by the last successful [`advance`](Self::advance).
    pub fn current(&self) -> &[usize] {
        &self.current
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        self.advance()
            .then(|| Permutation::from_images_unchecked(self.current.clone()))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, usize::try_from(self.remaining).ok())
    }
}

/// Every permutation of `{1..m}` in lexicographic one-line order.
pub fn enumerate_permutations(m: usize) -> Result<Permutations> {
    Permutations::range(m, 0, u128::MAX)
}
