//! The involution on `S(k,n) × S_kn` that exchanges the fixed-point count of
//! the group element with the k-cycle count of the permutation.

use crate::error::{Error, Result};
use crate::forward::factor;
use crate::gsg::GsgElement;
use crate::inverse::unfactor;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InvolutionPair {
    pub sigma: GsgElement,
    pub pi: Permutation,
}

impl InvolutionPair {
    pub fn new(sigma: GsgElement, pi: Permutation) -> Result<Self> {
        if sigma.k() * sigma.n() != pi.len() {
            return Err(Error::Mismatch(format!(
                "sigma in S({},{}) needs a permutation of {} letters, got {}",
                sigma.k(),
                sigma.n(),
                sigma.k() * sigma.n(),
                pi.len()
            )));
        }
        Ok(InvolutionPair { sigma, pi })
    }

    pub fn k(&self) -> usize {
        self.sigma.k()
    }
}

/// `(σ', π) ↦ (σ, π')` where `factor(π) = (δ, σ)` and `π' = unfactor(δ, σ')`.
pub fn swap_statistics(input: &InvolutionPair) -> Result<InvolutionPair> {
    let k = input.k();
    let image = factor(&input.pi, k)?;
    let pi = unfactor(&image.delta, &input.sigma)?;
    Ok(InvolutionPair {
        sigma: image.sigma,
        pi,
    })
}
