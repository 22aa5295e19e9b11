//! Exhaustive and sampled verification.
//!
//! Every count is an exact `u128`. Exhaustive runs are split into contiguous
//! rank ranges that can be processed on separate threads; partial results
//! merge by pointwise addition, so the outcome does not depend on scheduling.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::forward::{factor, KCycleFactorization};
use crate::gsg::{count_fixed_points_in, group_order, GsgElement, GsgElements};
use crate::inverse::unfactor;
use crate::involution::{swap_statistics, InvolutionPair};
use crate::perm::{count_k_cycles_in, factorial, Permutation, Permutations};

/// Refuse exhaustive runs over more than this many permutations.
pub const DEFAULT_MAX_PERMUTATIONS: u128 = 400_000_000;
/// Refuse exhaustive involution runs over more than this many pairs.
pub const DEFAULT_MAX_PAIRS: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_permutations: u128,
    pub max_pairs: u128,
    /// Ignore both limits.
    pub force: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_permutations: DEFAULT_MAX_PERMUTATIONS,
            max_pairs: DEFAULT_MAX_PAIRS,
            force: false,
        }
    }
}

impl Limits {
    fn admit(&self, what: &'static str, count: Option<u128>, limit: u128) -> Result<u128> {
        match count {
            Some(c) if c <= limit || self.force => Ok(c),
            _ => Err(Error::capacity(what, count, limit)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub limits: Limits,
    /// Worker threads; 0 or 1 runs serially.
    pub jobs: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            limits: Limits::default(),
            jobs: 1,
        }
    }
}

/// Splits `0..total` into contiguous ranges and folds them, in parallel when
/// `jobs > 1`. Results come back in range order.
fn partitioned<T, F>(total: u128, jobs: usize, work: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u128, u128) -> Result<T> + Sync + Send,
{
    if jobs <= 1 || total < 2 {
        return Ok(vec![work(0, total)?]);
    }
    let parts = (jobs as u128 * 4).min(total);
    let bounds: Vec<(u128, u128)> = (0..parts)
        .map(|j| (total * j / parts, total * (j + 1) / parts))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| bounds.par_iter().map(|&(a, b)| work(a, b)).collect())
}

/// Exact counts `counts[m]` of objects whose statistic equals `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution {
    pub k: usize,
    pub n: usize,
    pub counts: Vec<u128>,
    pub total: u128,
}

impl Distribution {
    pub fn zero(k: usize, n: usize) -> Self {
        Distribution {
            k,
            n,
            counts: vec![0; n + 1],
            total: 0,
        }
    }

    fn record(&mut self, m: usize) {
        self.counts[m] += 1;
        self.total += 1;
    }

    /// Pointwise sum.
    pub fn merge(mut self, other: &Distribution) -> Self {
        debug_assert_eq!((self.k, self.n), (other.k, other.n));
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        self.total += other.total;
        self
    }

    /// Empirical probability of statistic value `m`.
    pub fn frequency(&self, m: usize) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        self.counts[m] as f64 / self.total as f64
    }

    pub fn to_json(&self) -> Value {
        json!({
            "counts": self.counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "total": self.total.to_string(),
        })
    }
}

fn check_params(k: usize, n: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroModulus);
    }
    k.checked_mul(n)
        .map(|_| ())
        .ok_or_else(|| Error::capacity("letters", None, usize::MAX as u128))
}

/// Distribution of the number of k-cycles over `S_kn`.
pub fn cyc_distribution(k: usize, n: usize, opts: &RunOptions) -> Result<Distribution> {
    check_params(k, n)?;
    let total = opts
        .limits
        .admit("permutations", factorial(k * n), opts.limits.max_permutations)?;
    let parts = partitioned(total, opts.jobs, |a, b| {
        let mut dist = Distribution::zero(k, n);
        let mut perms = Permutations::range(k * n, a, b)?;
        let mut seen = vec![false; k * n];
        while perms.advance() {
            dist.record(count_k_cycles_in(perms.current(), k, &mut seen));
        }
        Ok(dist)
    })?;
    Ok(parts
        .iter()
        .fold(Distribution::zero(k, n), |acc, d| acc.merge(d)))
}

/// Distribution of the number of fixed points over `S(k,n)`.
pub fn fxpt_distribution(k: usize, n: usize, opts: &RunOptions) -> Result<Distribution> {
    check_params(k, n)?;
    let total = opts
        .limits
        .admit("S(k,n) elements", group_order(k, n), opts.limits.max_permutations)?;
    let parts = partitioned(total, opts.jobs, |a, b| {
        let mut dist = Distribution::zero(k, n);
        let mut elems = GsgElements::range(k, n, a, b)?;
        while elems.advance() {
            let (x, tau) = elems.current();
            dist.record(count_fixed_points_in(x, tau));
        }
        Ok(dist)
    })?;
    Ok(parts
        .iter()
        .fold(Distribution::zero(k, n), |acc, d| acc.merge(d)))
}

/// Outcome of one property within a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub checked: u128,
    /// First failing instance, if any.
    pub counterexample: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            checked: 0,
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    fn observe(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }

    fn absorb(&mut self, other: &Check) {
        self.checked += other.checked;
        if self.counterexample.is_none() {
            self.counterexample.clone_from(&other.counterexample);
        }
    }
}

fn merge_checks(parts: Vec<Vec<Check>>) -> Vec<Check> {
    let mut iter = parts.into_iter();
    let mut acc = iter.next().unwrap_or_default();
    for part in iter {
        for (a, b) in acc.iter_mut().zip(&part) {
            a.absorb(b);
        }
    }
    acc
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub property: &'static str,
    pub k: usize,
    pub n: usize,
    pub checks: Vec<Check>,
    /// Seed of the sampled run, `None` when exhaustive.
    pub seed: Option<u64>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = write!(
            out,
            "{} k={} n={}: {}",
            self.property,
            self.k,
            self.n,
            if self.passed() { "PASS" } else { "FAIL" }
        );
        if let Some(seed) = self.seed {
            let _ = write!(out, " (sampled, seed {seed})");
        }
        let _ = writeln!(out, " [{:.3}s]", self.elapsed.as_secs_f64());
        for c in &self.checks {
            let _ = writeln!(
                out,
                "  {} {} ({} checked)",
                if c.passed() { "PASS" } else { "FAIL" },
                c.name,
                c.checked
            );
            if let Some(cx) = &c.counterexample {
                let _ = writeln!(out, "    counterexample: {cx}");
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "property": self.property,
            "k": self.k.to_string(),
            "n": self.n.to_string(),
            "passed": self.passed(),
            "seed": self.seed.map(|s| s.to_string()),
            "elapsed_ms": self.elapsed.as_millis().to_string(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed(),
                "checked": c.checked.to_string(),
                "counterexample": c.counterexample,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Exact check of `|Cyc_m(S_kn)| · |S(k,n)| = |Fxpt_m(S(k,n))| · (kn)!` for
/// every `m`, and of the cross form
/// `|Fxpt_α| · |Cyc_β| = |Fxpt_β| · |Cyc_α|` for every pair `(α, β)`.
pub fn verify_theorem1(k: usize, n: usize, opts: &RunOptions) -> Result<VerificationReport> {
    let started = Instant::now();
    let cyc = cyc_distribution(k, n, opts)?;
    let fxpt = fxpt_distribution(k, n, opts)?;
    let (order_s, order_g) = (cyc.total, fxpt.total);

    let mut totals = Check::new("totals");
    totals.observe(Some(order_s) == factorial(k * n), || {
        format!("sum of k-cycle counts {order_s} != (kn)!")
    });
    totals.observe(Some(order_g) == group_order(k, n), || {
        format!("sum of fixed-point counts {order_g} != k^n n!")
    });

    let mut ratio = Check::new("ratio identity");
    for m in 0..=n {
        let lhs = cyc.counts[m].checked_mul(order_g);
        let rhs = fxpt.counts[m].checked_mul(order_s);
        ratio.observe(lhs.is_some() && lhs == rhs, || {
            format!(
                "m={m}: {}*{order_g} != {}*{order_s}",
                cyc.counts[m], fxpt.counts[m]
            )
        });
    }

    let mut cross = Check::new("cross identity");
    for a in 0..=n {
        for b in 0..=n {
            let lhs = fxpt.counts[a].checked_mul(cyc.counts[b]);
            let rhs = fxpt.counts[b].checked_mul(cyc.counts[a]);
            cross.observe(lhs.is_some() && lhs == rhs, || {
                format!("alpha={a} beta={b}")
            });
        }
    }

    Ok(VerificationReport {
        property: "theorem1",
        k,
        n,
        checks: vec![totals, ratio, cross],
        seed: None,
        elapsed: started.elapsed(),
    })
}

/// `unfactor ∘ factor = id` on `S_kn`, statistic preservation, the shape of
/// `δ`, the cardinality of `D_{k,n}`, and `factor ∘ unfactor = id` on
/// `D_{k,n} × S(k,n)`.
pub fn verify_bijection(k: usize, n: usize, opts: &RunOptions) -> Result<VerificationReport> {
    let started = Instant::now();
    check_params(k, n)?;
    let m = k * n;
    let total = opts
        .limits
        .admit("permutations", factorial(m), opts.limits.max_permutations)?;

    let forward = partitioned(total, opts.jobs, |a, b| {
        let mut left = Check::new("left inverse");
        let mut stat = Check::new("k-cycles = fixed points");
        let mut shape = Check::new("delta has type (k^n)");
        for p in Permutations::range(m, a, b)? {
            let pair = factor(&p, k)?;
            stat.observe(
                p.count_k_cycles(k) == pair.sigma.count_fixed_points(),
                || format!("pi={p}"),
            );
            shape.observe(
                pair.delta.perm().cycle_type().iter().all(|&l| l == k),
                || format!("pi={p} delta={}", pair.delta.perm()),
            );
            let back = unfactor(&pair.delta, &pair.sigma)?;
            left.observe(back == p, || format!("pi={p} came back as {back}"));
        }
        Ok(vec![left, stat, shape])
    })?;
    let mut checks = merge_checks(forward);

    let deltas = KCycleFactorization::enumerate(k, n)?;
    let group = group_order(k, n).expect("bounded by (kn)!");
    let mut card = Check::new("|D_{k,n}| = (kn)!/(k^n n!)");
    let d_count = deltas.len() as u128;
    card.observe(d_count * group == total, || {
        format!("|D|={d_count}, |S(k,n)|={group}, (kn)!={total}")
    });

    let backward = partitioned(d_count, opts.jobs, |a, b| {
        let mut right = Check::new("right inverse");
        for delta in &deltas[a as usize..b as usize] {
            for sigma in GsgElements::range(k, n, 0, u128::MAX)? {
                let p = unfactor(delta, &sigma)?;
                let back = factor(&p, k)?;
                right.observe(back.delta == *delta && back.sigma == sigma, || {
                    format!("delta={} sigma={sigma}", delta.perm())
                });
            }
        }
        Ok(vec![right])
    })?;
    checks.push(card);
    checks.extend(merge_checks(backward));

    Ok(VerificationReport {
        property: "bijection",
        k,
        n,
        checks,
        seed: None,
        elapsed: started.elapsed(),
    })
}

fn involution_checks(pair: &InvolutionPair, twice: &mut Check, swap: &mut Check) -> Result<()> {
    let k = pair.k();
    let out = swap_statistics(pair)?;
    let back = swap_statistics(&out)?;
    twice.observe(back == *pair, || {
        format!("sigma'={} pi={}", pair.sigma, pair.pi)
    });
    swap.observe(
        pair.sigma.count_fixed_points() == out.pi.count_k_cycles(k)
            && pair.pi.count_k_cycles(k) == out.sigma.count_fixed_points(),
        || format!("sigma'={} pi={}", pair.sigma, pair.pi),
    );
    Ok(())
}

/// How [`verify_involution`] covers `S(k,n) × S_kn`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    Exhaustive,
    /// `pairs` independent uniform draws from a seeded ChaCha8 stream.
    Sampled { pairs: u64, seed: u64 },
}

/// Self-inverse property and statistic swap of the involution.
pub fn verify_involution(
    k: usize,
    n: usize,
    coverage: Coverage,
    opts: &RunOptions,
) -> Result<VerificationReport> {
    let started = Instant::now();
    check_params(k, n)?;
    let m = k * n;
    let mut seed = None;
    let checks = match coverage {
        Coverage::Exhaustive => {
            let perms = factorial(m);
            let pairs = perms.zip(group_order(k, n)).and_then(|(a, b)| a.checked_mul(b));
            opts.limits.admit("pairs", pairs, opts.limits.max_pairs)?;
            let perms = perms.expect("pairs admitted");
            let parts = partitioned(perms, opts.jobs, |a, b| {
                let mut twice = Check::new("phi(phi(p)) = p");
                let mut swap = Check::new("statistics swapped");
                for pi in Permutations::range(m, a, b)? {
                    for sigma in GsgElements::range(k, n, 0, u128::MAX)? {
                        let pair = InvolutionPair::new(sigma, pi.clone())?;
                        involution_checks(&pair, &mut twice, &mut swap)?;
                    }
                }
                Ok(vec![twice, swap])
            })?;
            merge_checks(parts)
        }
        Coverage::Sampled { pairs, seed: s } => {
            seed = Some(s);
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let mut twice = Check::new("phi(phi(p)) = p");
            let mut swap = Check::new("statistics swapped");
            for _ in 0..pairs {
                let pi = random_permutation(m, &mut rng);
                let sigma = random_gsg(k, n, &mut rng);
                let pair = InvolutionPair::new(sigma, pi)?;
                involution_checks(&pair, &mut twice, &mut swap)?;
            }
            vec![twice, swap]
        }
    };
    Ok(VerificationReport {
        property: "involution",
        k,
        n,
        checks,
        seed,
        elapsed: started.elapsed(),
    })
}

fn random_permutation<R: Rng>(m: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<usize> = (1..=m).collect();
    images.shuffle(rng);
    Permutation::from_images_unchecked(images)
}

fn random_gsg<R: Rng>(k: usize, n: usize, rng: &mut R) -> GsgElement {
    let tau = random_permutation(n, rng);
    let x = (0..n).map(|_| rng.gen_range(0..k)).collect();
    GsgElement::new(k, x, tau).expect("k >= 1 and matching lengths")
}

/// Empirical histograms from uniform draws.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleReport {
    pub k: usize,
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub cycles: Distribution,
    pub fixed_points: Distribution,
}

impl SampleReport {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "sample k={} n={} trials={} seed={}\n",
            self.k, self.n, self.trials, self.seed
        );
        out.push_str(&format_table(&self.cycles, &self.fixed_points));
        let _ = write!(out, "{:<8}", "P(m)");
        for m in 0..=self.n {
            let _ = write!(
                out,
                "  {:.6}/{:.6}",
                self.cycles.frequency(m),
                self.fixed_points.frequency(m)
            );
        }
        out.push('\n');
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k.to_string(),
            "n": self.n.to_string(),
            "trials": self.trials.to_string(),
            "seed": self.seed.to_string(),
            "generator": "ChaCha8",
            "cycles": self.cycles.to_json(),
            "fixed_points": self.fixed_points.to_json(),
        })
    }
}

/// Draws `trials` uniform permutations of `S_kn` and, from the same stream,
/// `trials` uniform elements of `S(k,n)`; histograms their statistics.
///
/// Each trial draws the permutation first, then `τ`, then `x`. The ChaCha8
/// stream makes the result reproducible for a fixed seed.
pub fn sample_empirical(k: usize, n: usize, trials: u64, seed: u64) -> Result<SampleReport> {
    check_params(k, n)?;
    let m = k * n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cycles = Distribution::zero(k, n);
    let mut fixed_points = Distribution::zero(k, n);
    let mut images: Vec<usize> = (1..=m).collect();
    let mut tau: Vec<usize> = (1..=n).collect();
    let mut x = vec![0; n];
    let mut seen = vec![false; m];
    for _ in 0..trials {
        images.shuffle(&mut rng);
        cycles.record(count_k_cycles_in(&images, k, &mut seen));
        tau.shuffle(&mut rng);
        for xi in x.iter_mut() {
            *xi = rng.gen_range(0..k);
        }
        fixed_points.record(count_fixed_points_in(&x, &tau));
    }
    Ok(SampleReport {
        k,
        n,
        trials,
        seed,
        cycles,
        fixed_points,
    })
}

/// Two-row table: statistic values across, one row per side, totals last.
pub fn format_table(cyc: &Distribution, fxpt: &Distribution) -> String {
    let width = cyc
        .counts
        .iter()
        .chain(&fxpt.counts)
        .chain([&cyc.total, &fxpt.total])
        .map(|c| c.to_string().len())
        .max()
        .unwrap_or(1)
        .max(5);
    let (k, n) = (cyc.k, cyc.n);
    let row_labels = [format!("S_{}", k * n), format!("S({k},{n})")];
    let label_width = row_labels.iter().map(String::len).max().unwrap_or(0).max(8);
    let mut out = String::new();
    let _ = write!(out, "{:<label_width$}", "m");
    for m in 0..=n {
        let _ = write!(out, " {m:>width$}");
    }
    let _ = writeln!(out, " {:>width$}", "total");
    for (label, dist) in row_labels.iter().zip([cyc, fxpt]) {
        let _ = write!(out, "{label:<label_width$}");
        for c in &dist.counts {
            let _ = write!(out, " {c:>width$}");
        }
        let _ = writeln!(out, " {:>width$}", dist.total);
    }
    out
}

pub fn table_json(cyc: &Distribution, fxpt: &Distribution) -> Value {
    json!({
        "k": cyc.k.to_string(),
        "n": cyc.n.to_string(),
        "cycles": cyc.to_json(),
        "fixed_points": fxpt.to_json(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Oracle: Heap's algorithm and a direct cycle walk, sharing nothing with
    // the lexicographic enumerator or the scratch-buffer counter.
    fn brute_cycle_counts(k: usize, n: usize) -> Vec<u128> {
        fn heap(a: &mut Vec<usize>, size: usize, k: usize, out: &mut Vec<u128>) {
            if size <= 1 {
                let mut seen = vec![false; a.len()];
                let mut count = 0;
                for s in 0..a.len() {
                    if !seen[s] {
                        let mut len = 0;
                        let mut i = s;
                        while !seen[i] {
                            seen[i] = true;
                            i = a[i];
                            len += 1;
                        }
                        if len == k {
                            count += 1;
                        }
                    }
                }
                out[count] += 1;
                return;
            }
            for i in 0..size {
                heap(a, size - 1, k, out);
                if size.is_multiple_of(2) {
                    a.swap(i, size - 1);
                } else {
                    a.swap(0, size - 1);
                }
            }
        }
        let mut out = vec![0; n + 1];
        let mut a: Vec<usize> = (0..k * n).collect();
        let len = a.len();
        heap(&mut a, len, k, &mut out);
        out
    }

    fn brute_fixed_point_counts(k: usize, n: usize) -> Vec<u128> {
        let mut out = vec![0; n + 1];
        let taus = brute_perms(n);
        for tau in &taus {
            for code in 0..k.pow(n as u32) {
                let mut c = code;
                let mut fixed = 0;
                for (i, &t) in tau.iter().enumerate() {
                    if c % k == 0 && t == i {
                        fixed += 1;
                    }
                    c /= k;
                }
                out[fixed] += 1;
            }
        }
        out
    }

    fn brute_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in brute_perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn oracle_values() {
        assert_eq!(brute_cycle_counts(2, 3), vec![435, 225, 45, 15]);
        assert_eq!(brute_fixed_point_counts(2, 3), vec![29, 15, 3, 1]);
        assert_eq!(brute_cycle_counts(1, 2), vec![1, 0, 1]);
        assert_eq!(brute_cycle_counts(3, 2), vec![520, 160, 40]);
        assert_eq!(brute_fixed_point_counts(3, 2), vec![13, 4, 1]);
        assert_eq!(brute_fixed_point_counts(2, 2), vec![5, 2, 1]);
        assert_eq!(brute_fixed_point_counts(1, 3), vec![2, 3, 0, 1]);
    }

    #[test]
    fn distributions_match_frozen_values() {
        let opts = RunOptions::default();
        let d = cyc_distribution(2, 3, &opts).unwrap();
        assert_eq!(d.counts, vec![435, 225, 45, 15]);
        assert_eq!(d.total, 720);
        assert_eq!(cyc_distribution(1, 2, &opts).unwrap().counts, vec![1, 0, 1]);
        assert_eq!(cyc_distribution(3, 2, &opts).unwrap().counts, vec![520, 160, 40]);

        let d = fxpt_distribution(2, 3, &opts).unwrap();
        assert_eq!(d.counts, vec![29, 15, 3, 1]);
        assert_eq!(d.total, 48);
        assert_eq!(fxpt_distribution(1, 3, &opts).unwrap().counts, vec![2, 3, 0, 1]);
        assert_eq!(fxpt_distribution(2, 2, &opts).unwrap().counts, vec![5, 2, 1]);
        assert_eq!(fxpt_distribution(3, 2, &opts).unwrap().counts, vec![13, 4, 1]);
    }

    #[test]
    fn distributions_match_oracle() {
        let opts = RunOptions::default();
        for k in 1..=3 {
            for n in 0..=(7 / k) {
                let d = cyc_distribution(k, n, &opts).unwrap();
                assert_eq!(d.counts, brute_cycle_counts(k, n), "k={k} n={n}");
                assert_eq!(Some(d.total), factorial(k * n));
                let d = fxpt_distribution(k, n, &opts).unwrap();
                assert_eq!(d.counts, brute_fixed_point_counts(k, n), "k={k} n={n}");
                assert_eq!(Some(d.total), group_order(k, n));
            }
        }
    }

    #[test]
    fn parallel_matches_serial() {
        let serial = RunOptions::default();
        let parallel = RunOptions {
            jobs: 4,
            ..RunOptions::default()
        };
        for (k, n) in [(1, 6), (2, 3), (3, 2), (2, 4)] {
            assert_eq!(
                cyc_distribution(k, n, &serial).unwrap(),
                cyc_distribution(k, n, &parallel).unwrap()
            );
            assert_eq!(
                fxpt_distribution(k, n, &serial).unwrap(),
                fxpt_distribution(k, n, &parallel).unwrap()
            );
        }
        let a = verify_bijection(2, 3, &serial).unwrap();
        let b = verify_bijection(2, 3, &parallel).unwrap();
        assert_eq!(a.checks, b.checks);
    }

    #[test]
    fn theorem1_reports() {
        let opts = RunOptions::default();
        for (k, n) in [(2, 3), (3, 2), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5)] {
            let r = verify_theorem1(k, n, &opts).unwrap();
            assert!(r.passed(), "{}", r.to_text());
        }
        // 435 · 48 = 29 · 720
        assert_eq!(435u128 * 48, 20_880);
        assert_eq!(29u128 * 720, 20_880);
    }

    #[test]
    fn bijection_reports() {
        let opts = RunOptions::default();
        let r = verify_bijection(2, 3, &opts).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.checks[0].checked, 720);
        let right = r.checks.iter().find(|c| c.name == "right inverse").unwrap();
        assert_eq!(right.checked, 15 * 48);
        assert!(verify_bijection(3, 1, &opts).unwrap().passed());
        assert!(verify_bijection(1, 4, &opts).unwrap().passed());
    }

    #[test]
    fn involution_reports() {
        let opts = RunOptions::default();
        let r = verify_involution(2, 2, Coverage::Exhaustive, &opts).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks[0].checked, 192);
        let r = verify_involution(2, 3, Coverage::Exhaustive, &opts).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks[0].checked, 34_560);
        assert!(verify_involution(1, 3, Coverage::Exhaustive, &opts).unwrap().passed());
        let r = verify_involution(2, 4, Coverage::Sampled { pairs: 2000, seed: 3 }, &opts).unwrap();
        assert!(r.passed());
        assert_eq!(r.seed, Some(3));
    }

    #[test]
    fn capacity_refusals() {
        let opts = RunOptions::default();
        assert!(matches!(
            cyc_distribution(1, 13, &opts),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            verify_involution(2, 4, Coverage::Exhaustive, &RunOptions {
                limits: Limits { max_pairs: 1000, ..Limits::default() },
                jobs: 1,
            }),
            Err(Error::Capacity { .. })
        ));
        let tight = RunOptions {
            limits: Limits {
                max_permutations: 10,
                force: true,
                ..Limits::default()
            },
            jobs: 1,
        };
        assert_eq!(cyc_distribution(1, 4, &tight).unwrap().total, 24);
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_empirical(2, 3, 10_000, 9).unwrap();
        let b = sample_empirical(2, 3, 10_000, 9).unwrap();
        assert_eq!(a, b);
        let one = sample_empirical(2, 3, 1, 0).unwrap();
        assert_eq!(one.cycles.counts.iter().sum::<u128>(), 1);
        assert_eq!(one.fixed_points.counts.iter().sum::<u128>(), 1);
    }

    #[test]
    fn table_layout() {
        let opts = RunOptions::default();
        let t = format_table(
            &cyc_distribution(2, 3, &opts).unwrap(),
            &fxpt_distribution(2, 3, &opts).unwrap(),
        );
        let lines: Vec<Vec<&str>> = t.lines().map(|l| l.split_whitespace().collect()).collect();
        assert_eq!(lines[0], ["m", "0", "1", "2", "3", "total"]);
        assert_eq!(lines[1], ["S_6", "435", "225", "45", "15", "720"]);
        assert_eq!(lines[2], ["S(2,3)", "29", "15", "3", "1", "48"]);
    }
}
