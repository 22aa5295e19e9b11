//! Reconstruction of `π` from `(δ, (x, τ))`.
//!
//! The blocks of `δ̂` are placed in the order given by `τ̂`. Each block must
//! then be rotated so that its leader ends up at the distance from the next
//! record that `x` prescribes. The record to the right of a block's leader
//! never lies inside the block itself, so it does not move when that block is
//! rotated; processing blocks from last to first therefore determines every
//! rotation uniquely.

use crate::error::{Error, Result};
use crate::forward::{FactoredPair, KCycleFactorization};
use crate::gsg::GsgElement;
use crate::perm::{records, stanley_hat, unhat_images, Permutation, Word};

/// Per-block left rotations, each in `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftVector {
    k: usize,
    shifts: Vec<usize>,
}

impl ShiftVector {
    pub fn new(k: usize, shifts: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroModulus);
        }
        if let Some(&s) = shifts.iter().find(|&&s| s >= k) {
            return Err(Error::ShiftOutOfRange { shift: s, k });
        }
        Ok(ShiftVector { k, shifts })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn shifts(&self) -> &[usize] {
        &self.shifts
    }
}

/// Rotates `block` left by `s`: the length `k - s` suffix followed by the
/// length `s` prefix.
pub fn shift_block(block: &[usize], s: usize) -> Result<Vec<usize>> {
    let k = block.len();
    if s >= k.max(1) {
        return Err(Error::ShiftOutOfRange { shift: s, k });
    }
    let mut out = block.to_vec();
    out.rotate_left(s);
    Ok(out)
}

/// Position `g` of the first record strictly right of the leader of block
/// `i`, or `len + 1`, and its distance `d` from the leader.
pub fn next_record_gap(w: &Word, i: usize, k: usize) -> Result<(usize, usize)> {
    let block = crate::forward::block(w, i, k)?;
    let (offset, _) = block
        .iter()
        .enumerate()
        .max_by_key(|&(_, &a)| a)
        .expect("blocks are nonempty");
    let pos = k * (i - 1) + offset + 1;
    let g = gap_after(w.letters(), pos);
    Ok((g, g - pos))
}

fn gap_after(letters: &[usize], pos: usize) -> usize {
    records(letters)
        .into_iter()
        .find(|&r| r > pos)
        .unwrap_or(letters.len() + 1)
}

fn check_compatible(delta: &KCycleFactorization, sigma: &GsgElement) -> Result<()> {
    if delta.k() != sigma.k() || delta.n() != sigma.n() {
        return Err(Error::Mismatch(format!(
            "delta lives in D({},{}) but sigma in S({},{})",
            delta.k(),
            delta.n(),
            sigma.k(),
            sigma.n()
        )));
    }
    Ok(())
}

/// Runs the right-to-left scan, returning the shifts and the finished word.
fn reconstruct(delta: &KCycleFactorization, sigma: &GsgElement) -> Result<(ShiftVector, Vec<usize>)> {
    check_compatible(delta, sigma)?;
    let k = delta.k();
    let n = delta.n();
    let delta_hat = stanley_hat(delta.perm());
    let tau_hat = stanley_hat(sigma.tau());

    // Canonical cycles of δ are exactly its blocks, each with the leader first.
    let mut word = Vec::with_capacity(k * n);
    for &t in tau_hat.letters() {
        word.extend_from_slice(&delta_hat.letters()[k * (t - 1)..k * t]);
    }

    let mut shifts = vec![0; n];
    for i in (1..=n).rev() {
        let leader_pos = k * (i - 1) + 1;
        let d = gap_after(&word, leader_pos) - leader_pos;
        let target = sigma.x()[tau_hat.letter(i) - 1];
        let s = (target + k - d % k) % k;
        word[k * (i - 1)..k * i].rotate_left(s);
        shifts[i - 1] = s;
    }
    Ok((ShiftVector { k, shifts }, word))
}

/// The rotations `s_i` with `block(π̂, i) = shift_{s_i}(block(δ̂, τ̂_i))`.
pub fn recover_shifts(delta: &KCycleFactorization, sigma: &GsgElement) -> Result<ShiftVector> {
    reconstruct(delta, sigma).map(|(s, _)| s)
}

/// The unique `π` with `factor(π, k) = (δ, σ)`.
pub fn unfactor(delta: &KCycleFactorization, sigma: &GsgElement) -> Result<Permutation> {
    let (_, word) = reconstruct(delta, sigma)?;
    Ok(Permutation::from_images_unchecked(unhat_images(&word)))
}

pub fn unfactor_pair(pair: &FactoredPair) -> Result<Permutation> {
    unfactor(&pair.delta, &pair.sigma)
}
