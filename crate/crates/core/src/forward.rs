//! The statistic-preserving bijection `S_kn → D_{k,n} × S(k,n)`.
//!
//! Write `π̂` for the hat word of `π` and cut it into `n` consecutive blocks
//! of length `k`. Then
//!
//! * `δ` reads every block as one k-cycle;
//! * `τ` is the unhat of the standardized sequence of block maxima (the block
//!   leaders);
//! * `x` records, for every leader, its distance mod `k` to the next record of
//!   `π̂` (or to the end of the word).
//!
//! The number of k-cycles of `π` equals the number of fixed points of
//! `(x, τ)`.

use crate::error::{Error, Result};
use crate::gsg::GsgElement;
use crate::perm::{records, stanley_hat, stanley_unhat, Permutation, Word};

/// A permutation of `{1..kn}` made of exactly `n` disjoint k-cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KCycleFactorization {
    k: usize,
    perm: Permutation,
}

impl KCycleFactorization {
    pub fn new(k: usize, perm: Permutation) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroModulus);
        }
        if !perm.len().is_multiple_of(k) {
            return Err(Error::NotDivisible { len: perm.len(), k });
        }
        if let Some(&bad) = perm.cycle_type().iter().find(|&&l| l != k) {
            return Err(Error::NotKCycleFactorization { k, found: bad });
        }
        Ok(KCycleFactorization { k, perm })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.perm.len() / self.k
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn into_perm(self) -> Permutation {
        self.perm
    }

    /// All `(kn)! / (k^n n!)` elements of `D_{k,n}`.
    ///
    /// Cycles are built greedily: the largest unused letter opens a cycle and
    /// is followed by an ordered choice of `k - 1` further unused letters.
    pub fn enumerate(k: usize, n: usize) -> Result<Vec<KCycleFactorization>> {
        if k == 0 {
            return Err(Error::ZeroModulus);
        }
        let m = k * n;
        let mut out = Vec::new();
        let mut images = vec![0usize; m];
        let mut used = vec![false; m];
        let mut cycle = Vec::with_capacity(k);
        fill_cycles(k, &mut images, &mut used, &mut cycle, &mut out);
        Ok(out)
    }
}

fn fill_cycles(
    k: usize,
    images: &mut [usize],
    used: &mut [bool],
    cycle: &mut Vec<usize>,
    out: &mut Vec<KCycleFactorization>,
) {
    if cycle.is_empty() {
        match (1..=images.len()).rev().find(|&a| !used[a - 1]) {
            None => out.push(KCycleFactorization {
                k,
                perm: Permutation::from_images_unchecked(images.to_vec()),
            }),
            Some(leader) => {
                used[leader - 1] = true;
                cycle.push(leader);
                fill_cycles(k, images, used, cycle, out);
                cycle.pop();
                used[leader - 1] = false;
            }
        }
        return;
    }
    if cycle.len() == k {
        for j in 0..k {
            images[cycle[j] - 1] = cycle[(j + 1) % k];
        }
        let saved = std::mem::take(cycle);
        fill_cycles(k, images, used, cycle, out);
        *cycle = saved;
        return;
    }
    // Letters after the leader must be smaller than it.
    for a in 1..cycle[0] {
        if used[a - 1] {
            continue;
        }
        used[a - 1] = true;
        cycle.push(a);
        fill_cycles(k, images, used, cycle, out);
        cycle.pop();
        used[a - 1] = false;
    }
}

/// The image `(δ, σ)` of a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactoredPair {
    pub delta: KCycleFactorization,
    pub sigma: GsgElement,
}

impl FactoredPair {
    pub fn new(delta: KCycleFactorization, sigma: GsgElement) -> Result<Self> {
        if delta.k() != sigma.k() || delta.n() != sigma.n() {
            return Err(Error::Mismatch(format!(
                "delta lives in D({},{}) but sigma in S({},{})",
                delta.k(),
                delta.n(),
                sigma.k(),
                sigma.n()
            )));
        }
        Ok(FactoredPair { delta, sigma })
    }
}

fn check_divisible(len: usize, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::ZeroModulus);
    }
    if !len.is_multiple_of(k) {
        return Err(Error::NotDivisible { len, k });
    }
    Ok(len / k)
}

/// The `i`-th length-`k` block of `w` (1-based).
pub fn block(w: &Word, i: usize, k: usize) -> Result<&[usize]> {
    let n = check_divisible(w.len(), k)?;
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    Ok(&w.letters()[k * (i - 1)..k * i])
}

/// The maximum of every block.
pub fn block_leaders(w: &Word, k: usize) -> Result<Vec<usize>> {
    check_divisible(w.len(), k)?;
    Ok(leaders_of(w.letters(), k))
}

fn leaders_of(letters: &[usize], k: usize) -> Vec<usize> {
    letters
        .chunks(k)
        .map(|b| *b.iter().max().expect("blocks are nonempty"))
        .collect()
}

/// Relabels distinct integers by `1..=len`, preserving relative order.
pub fn standardize(values: &[usize]) -> Result<Word> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_unstable_by_key(|&j| values[j]);
    if let Some(w) = order.windows(2).find(|w| values[w[0]] == values[w[1]]) {
        return Err(Error::DuplicateEntry(values[w[0]]));
    }
    let mut out = vec![0; values.len()];
    for (rank, &j) in order.iter().enumerate() {
        out[j] = rank + 1;
    }
    Ok(Word::from_letters_unchecked(out))
}

/// `δ`: the hat word of `p` re-read as consecutive k-cycles.
pub fn split_into_k_cycles(p: &Permutation, k: usize) -> Result<KCycleFactorization> {
    check_divisible(p.len(), k)?;
    let w = stanley_hat(p);
    Ok(delta_of(&w, k))
}

fn delta_of(w: &Word, k: usize) -> KCycleFactorization {
    let mut images = vec![0; w.len()];
    for b in w.letters().chunks(k) {
        for j in 0..k {
            images[b[j] - 1] = b[(j + 1) % k];
        }
    }
    KCycleFactorization {
        k,
        perm: Permutation::from_images_unchecked(images),
    }
}

/// `τ̂`: the standardized block leaders of the hat word.
pub fn leader_word(p: &Permutation, k: usize) -> Result<Word> {
    let w = stanley_hat(p);
    standardize(&block_leaders(&w, k)?)
}

/// `τ`: the unhat of [`leader_word`].
pub fn leader_permutation(p: &Permutation, k: usize) -> Result<Permutation> {
    Ok(stanley_unhat(&leader_word(p, k)?))
}

/// For each block, the 1-based position of its leader, the first record
/// strictly to its right (or `len + 1`), and their difference.
pub(crate) fn leader_gaps(letters: &[usize], k: usize) -> Vec<(usize, usize, usize)> {
    let m = letters.len();
    let recs = records(letters);
    letters
        .chunks(k)
        .enumerate()
        .map(|(b, chunk)| {
            let (offset, _) = chunk
                .iter()
                .enumerate()
                .max_by_key(|&(_, &a)| a)
                .expect("blocks are nonempty");
            let pos = b * k + offset + 1;
            let g = recs
                .iter()
                .copied()
                .find(|&r| r > pos)
                .unwrap_or(m + 1);
            (pos, g, g - pos)
        })
        .collect()
}

/// `x`: entry `τ̂_i` holds the distance from the `i`-th leader to the end of
/// its cycle in the hat word, reduced mod `k`.
pub fn leader_offsets(p: &Permutation, k: usize) -> Result<Vec<usize>> {
    check_divisible(p.len(), k)?;
    let w = stanley_hat(p);
    let tau_hat = standardize(&leaders_of(w.letters(), k))?;
    Ok(offsets_of(&w, &tau_hat, k))
}

fn offsets_of(w: &Word, tau_hat: &Word, k: usize) -> Vec<usize> {
    let mut x = vec![0; tau_hat.len()];
    for (i, (_, _, d)) in leader_gaps(w.letters(), k).into_iter().enumerate() {
        x[tau_hat.letters()[i] - 1] = d % k;
    }
    x
}

/// `f(π) = (δ, (x, τ))`.
pub fn factor(p: &Permutation, k: usize) -> Result<FactoredPair> {
    check_divisible(p.len(), k)?;
    let w = stanley_hat(p);
    let tau_hat = standardize(&leaders_of(w.letters(), k))?;
    let x = offsets_of(&w, &tau_hat, k);
    let tau = stanley_unhat(&tau_hat);
    Ok(FactoredPair {
        delta: delta_of(&w, k),
        sigma: GsgElement::new(k, x, tau)?,
    })
}
