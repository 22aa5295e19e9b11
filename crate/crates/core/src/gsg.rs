//! Elements of the generalized symmetric group `S(k,n) = Z_k^n ⋊ S_n`.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{factorial, Permutation, Permutations, MAX_ENUMERATION};

/// An element `(x, τ)` of `S(k,n)`. Residues are kept reduced into `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GsgElement {
    k: usize,
    x: Vec<usize>,
    tau: Permutation,
}

impl GsgElement {
    /// Builds `(x, τ)`, reducing every entry of `x` mod `k`.
    pub fn new(k: usize, x: Vec<usize>, tau: Permutation) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroModulus);
        }
        if x.len() != tau.len() {
            return Err(Error::Mismatch(format!(
                "x has length {} but tau acts on {} letters",
                x.len(),
                tau.len()
            )));
        }
        let x = x.into_iter().map(|v| v % k).collect();
        Ok(GsgElement { k, x, tau })
    }

    /// The identity `(0, id)` of `S(k,n)`.
    pub fn identity(k: usize, n: usize) -> Result<Self> {
        GsgElement::new(k, vec![0; n], Permutation::identity(n))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn tau(&self) -> &Permutation {
        &self.tau
    }

    /// Indices `i` (ascending, 1-based) with `x_i = 0` and `τ(i) = i`.
    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.n())
            .filter(|&i| self.x[i - 1] == 0 && self.tau.image(i) == i)
            .collect()
    }

    pub fn count_fixed_points(&self) -> usize {
        count_fixed_points_in(&self.x, self.tau.images())
    }
}

pub(crate) fn count_fixed_points_in(x: &[usize], tau: &[usize]) -> usize {
    x.iter()
        .zip(tau)
        .enumerate()
        .filter(|&(i, (&xi, &ti))| xi == 0 && ti == i + 1)
        .count()
}

impl fmt::Display for GsgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("x=(")?;
        for (j, v) in self.x.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "); tau={}", self.tau)
    }
}

/// `|S(k,n)| = k^n · n!`, or `None` on overflow.
pub fn group_order(k: usize, n: usize) -> Option<u128> {
    let kn = (k as u128).checked_pow(u32::try_from(n).ok()?)?;
    kn.checked_mul(factorial(n)?)
}

/// Every element of `S(k,n)`: `τ` in lexicographic order on the outside, `x`
/// counting in base `k` (last coordinate fastest) on the inside.
#[derive(Debug, Clone)]
pub struct GsgElements {
    k: usize,
    taus: Permutations,
    x: Vec<usize>,
    started: bool,
    remaining: u128,
}

impl GsgElements {
    /// Ranks `start..end`, where rank = `rank(τ) · k^n + value(x)`.
    pub fn range(k: usize, n: usize, start: u128, end: u128) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroModulus);
        }
        let total = group_order(k, n)
            .filter(|&t| t <= MAX_ENUMERATION)
            .ok_or_else(|| Error::capacity("S(k,n) elements", group_order(k, n), MAX_ENUMERATION))?;
        let end = end.min(total);
        let start = start.min(end);
        let residues = total / factorial(n).expect("checked above");
        let tau_rank = start / residues;
        let mut x_rank = start % residues;
        let mut x = vec![0; n];
        for slot in x.iter_mut().rev() {
            *slot = (x_rank % k as u128) as usize;
            x_rank /= k as u128;
        }
        Ok(GsgElements {
            k,
            taus: Permutations::range(n, tau_rank, u128::MAX)?,
            x,
            started: false,
            remaining: end - start,
        })
    }

    /// Moves to the next element; returns false when exhausted.
    pub fn advance(&mut self) -> bool {
        if self.remaining == 0 {
            return false;
        }
        self.remaining -= 1;
        if !self.started {
            self.started = true;
            return self.taus.advance();
        }
        for slot in self.x.iter_mut().rev() {
            *slot += 1;
            if *slot < self.k {
                return true;
            }
            *slot = 0;
        }
        self.taus.advance()
    }

    /// `(x, τ)` in one-line form for the current element.
    pub fn current(&self) -> (&[usize], &[usize]) {
        (&self.x, self.taus.current())
    }
}

impl Iterator for GsgElements {
    type Item = GsgElement;

    fn next(&mut self) -> Option<GsgElement> {
        if !self.advance() {
            return None;
        }
        let (x, tau) = self.current();
        Some(GsgElement {
            k: self.k,
            x: x.to_vec(),
            tau: Permutation::from_images_unchecked(tau.to_vec()),
        })
    }
}

/// Every element of `S(k,n)` exactly once.
pub fn enumerate_gsg(k: usize, n: usize) -> Result<GsgElements> {
    GsgElements::range(k, n, 0, u128::MAX)
}
