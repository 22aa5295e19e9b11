//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use cycswap::forward::{block, factor, KCycleFactorization};
use cycswap::harness::{verify_bijection, verify_involution, verify_theorem1, Coverage, RunOptions};
use cycswap::inverse::{next_record_gap, shift_block, unfactor};
use cycswap::perm::{enumerate_permutations, opens_k_cycle, stanley_hat, stanley_unhat};
use cycswap::{swap_statistics, GsgElement, InvolutionPair, Permutation, Word};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, started: Instant) -> Result<(), String> {
    let took = started.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_cycswap"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn cycles(text: &str, m: usize) -> Permutation {
    cycswap::text::parse_permutation(text, m).expect("valid literal")
}

fn example_pi() -> Permutation {
    cycles("(8 3 4 5)(9)(11 1 10)(15 7 2 6 12 14 13)", 15)
}

fn example_pi_prime() -> Permutation {
    cycles("(8 3 4)(11 5 9 6 7 2)(13 12)(14)(15 1 10)", 15)
}

fn example_delta() -> KCycleFactorization {
    KCycleFactorization::new(3, cycles("(7 2 6)(8 3 4)(11 5 9)(14 13 12)(15 1 10)", 15)).unwrap()
}

fn example_sigma() -> GsgElement {
    GsgElement::new(3, vec![0, 1, 0, 2, 1], cycles("(2)(3)(5 1 4)", 5)).unwrap()
}

fn example_sigma_prime() -> GsgElement {
    GsgElement::new(3, vec![2, 0, 0, 1, 0], cycles("(2)(3 1)(4)(5)", 5)).unwrap()
}

fn table_reproduction() -> Outcome {
    let started = Instant::now();
    let text = cli(&["table", "--k", "2", "--n", "3"])?;
    within(Duration::from_secs(1), started)?;
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split_whitespace().collect()).collect();
    ensure(rows.len() == 3, || format!("unexpected table:\n{text}"))?;
    ensure(rows[0] == ["m", "0", "1", "2", "3", "total"], || format!("header {:?}", rows[0]))?;
    ensure(rows[1][1..] == ["435", "225", "45", "15", "720"], || format!("S_kn row {:?}", rows[1]))?;
    ensure(rows[2][1..] == ["29", "15", "3", "1", "48"], || format!("S(k,n) row {:?}", rows[2]))?;

    let json: serde_json::Value = serde_json::from_str(&cli(&["--format", "structured", "table", "--k", "2", "--n", "3"])?)
        .map_err(|e| e.to_string())?;
    ensure(json["cycles"]["counts"] == serde_json::json!(["435", "225", "45", "15"]), || json.to_string())?;
    ensure(json["fixed_points"]["total"] == "48", || json.to_string())?;
    Ok(text.lines().skip(1).collect::<Vec<_>>().join(" | "))
}

fn forward_example() -> Outcome {
    let pair = factor(&example_pi(), 3).map_err(|e| e.to_string())?;
    let delta = pair.delta.perm().to_string();
    ensure(delta == "(7 2 6)(8 3 4)(11 5 9)(14 13 12)(15 1 10)", || delta.clone())?;
    ensure(pair.sigma.x() == [0, 1, 0, 2, 1], || format!("x = {:?}", pair.sigma.x()))?;
    let tau = pair.sigma.tau().to_string();
    ensure(tau == "(2)(3)(5 1 4)", || tau.clone())?;
    Ok(format!("delta={delta} sigma={}", pair.sigma))
}

fn inverse_examples() -> Outcome {
    let pi = unfactor(&example_delta(), &example_sigma()).map_err(|e| e.to_string())?;
    ensure(pi == example_pi(), || format!("got {pi}"))?;
    let pi_prime = unfactor(&example_delta(), &example_sigma_prime()).map_err(|e| e.to_string())?;
    ensure(pi_prime == example_pi_prime(), || format!("got {pi_prime}"))?;
    Ok(format!("pi={pi} pi'={pi_prime}"))
}

fn involution_example() -> Outcome {
    let input = InvolutionPair::new(example_sigma_prime(), example_pi()).map_err(|e| e.to_string())?;
    let out = swap_statistics(&input).map_err(|e| e.to_string())?;
    ensure(out.sigma == example_sigma(), || format!("sigma = {}", out.sigma))?;
    ensure(out.pi == example_pi_prime(), || format!("pi' = {}", out.pi))?;
    let stats = (
        input.sigma.count_fixed_points(),
        out.pi.count_k_cycles(3),
        input.pi.count_k_cycles(3),
        out.sigma.count_fixed_points(),
    );
    ensure(stats == (2, 2, 1, 1), || format!("statistics {stats:?}"))?;
    Ok("fixed points 2 -> k-cycles 2, k-cycles 1 -> fixed points 1".into())
}

fn bijectivity() -> Outcome {
    let started = Instant::now();
    let opts = RunOptions::default();
    let mut summary = Vec::new();
    for k in 1..=4usize {
        for n in 1..=(8 / k) {
            let r = verify_bijection(k, n, &opts).map_err(|e| e.to_string())?;
            ensure(r.passed(), || r.to_text())?;
            summary.push(format!("({k},{n})"));
        }
    }
    within(Duration::from_secs(30), started)?;
    Ok(format!("{} parameter pairs in {:.2?}", summary.len(), started.elapsed()))
}

fn cardinality() -> Outcome {
    let mut checked = 0;
    for k in 1..=4usize {
        for n in 1..=(8 / k) {
            let d = KCycleFactorization::enumerate(k, n).map_err(|e| e.to_string())?.len() as u128;
            let fact = |m: usize| (1..=m as u128).product::<u128>();
            let expected = fact(k * n) / ((k as u128).pow(n as u32) * fact(n));
            ensure(d == expected, || format!("k={k} n={n}: {d} != {expected}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} parameter pairs"))
}

fn involution_exhaustive() -> Outcome {
    let started = Instant::now();
    let opts = RunOptions::default();
    let mut pairs = 0;
    for (k, n) in [(1, 3), (2, 2), (3, 2), (2, 3)] {
        let r = verify_involution(k, n, Coverage::Exhaustive, &opts).map_err(|e| e.to_string())?;
        ensure(r.passed(), || r.to_text())?;
        pairs += r.checks[0].checked;
    }
    within(Duration::from_secs(30), started)?;
    Ok(format!("{pairs} pairs in {:.2?}", started.elapsed()))
}

fn theorem1() -> Outcome {
    let started = Instant::now();
    let opts = RunOptions::default();
    let mut count = 0;
    for m in 1..=10usize {
        for k in (1..=m).filter(|k| m % k == 0) {
            let r = verify_theorem1(k, m / k, &opts).map_err(|e| e.to_string())?;
            ensure(r.passed(), || r.to_text())?;
            count += 1;
        }
    }
    within(Duration::from_secs(300), started)?;
    Ok(format!("{count} parameter pairs up to 10! in {:.2?}", started.elapsed()))
}

fn monte_carlo() -> Outcome {
    let started = Instant::now();
    let args = [
        "--format", "structured", "sample", "--k", "2", "--n", "3", "--trials", "1000000", "--seed", "42",
    ];
    let first = cli(&args)?;
    let second = cli(&args)?;
    within(Duration::from_secs(10), started)?;
    ensure(first == second, || "outputs differ between runs".into())?;
    let json: serde_json::Value = serde_json::from_str(&first).map_err(|e| e.to_string())?;
    let p0 = |side: &str| -> f64 {
        let count: f64 = json[side]["counts"][0].as_str().unwrap().parse().unwrap();
        let total: f64 = json[side]["total"].as_str().unwrap().parse().unwrap();
        count / total
    };
    let (c, f) = (p0("cycles"), p0("fixed_points"));
    for p in [c, f] {
        ensure((p - 0.60416).abs() <= 0.005, || format!("P(m=0) = {p}"))?;
    }
    Ok(format!("P_cyc(0)={c:.5} P_fxpt(0)={f:.5}, identical across runs"))
}

fn structural_properties() -> Outcome {
    let started = Instant::now();
    let mut cases = 0u64;
    for m in 1..=7usize {
        for k in (1..=m).filter(|k| m % k == 0) {
            let n = m / k;
            for p in enumerate_permutations(m).map_err(|e| e.to_string())? {
                let w = stanley_hat(&p);
                // k-cycle window criterion against the cycles themselves
                let unhat = stanley_unhat(&w);
                let mut starts = vec![0usize; m + 1];
                let mut pos = 1;
                for c in unhat.canonical_cycles().cycles() {
                    starts[pos] = c.len();
                    pos += c.len();
                }
                for (i, &len) in starts.iter().enumerate().skip(1) {
                    ensure(opens_k_cycle(w.letters(), i, k) == (len == k), || {
                        format!("window criterion: w={w} i={i} k={k}")
                    })?;
                }

                let pair = factor(&p, k).map_err(|e| e.to_string())?;
                let dh = stanley_hat(pair.delta.perm());
                let th = stanley_hat(pair.sigma.tau());
                for i in 1..=n {
                    // unique rotation
                    let target = block(&w, i, k).unwrap();
                    let src = block(&dh, th.letter(i), k).unwrap();
                    let hits = (0..k).filter(|&s| shift_block(src, s).unwrap() == target).count();
                    ensure(hits == 1, || format!("rotation: p={p} k={k} i={i} hits={hits}"))?;

                    // next-record position beyond the block and rotation-invariant
                    let (g, _) = next_record_gap(&w, i, k).unwrap();
                    ensure(g > k * i, || format!("gap: p={p} k={k} i={i} g={g}"))?;
                    for s in 0..k {
                        let mut letters = w.letters().to_vec();
                        letters[k * (i - 1)..k * i].rotate_left(s);
                        let shifted = Word::new(letters).unwrap();
                        let g2 = next_record_gap(&shifted, i, k).unwrap().0;
                        ensure(g2 == g, || format!("gap invariance: p={p} k={k} i={i} s={s}"))?;
                    }
                }
                cases += 1;
            }
        }
    }
    within(Duration::from_secs(30), started)?;
    Ok(format!("{cases} (permutation, k) cases in {:.2?}", started.elapsed()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 table reproduction (k=2, n=3)", table_reproduction),
        ("2 forward map on the running example", forward_example),
        ("3 inverse map on both examples", inverse_examples),
        ("4 involution on the example pair", involution_example),
        ("5 exhaustive bijectivity, kn <= 8", bijectivity),
        ("6 exhaustive involution", involution_exhaustive),
        ("7 exact distribution identity, (kn)! <= 10!", theorem1),
        ("8 |D_{k,n}| = (kn)!/(k^n n!)", cardinality),
        ("9 Monte Carlo concordance, seed 42", monte_carlo),
        ("10 hat-word structural properties, kn <= 7", structural_properties),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failures += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
