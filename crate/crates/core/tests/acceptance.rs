//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Timing criteria compare medians measured in this process, so run
//! it on an otherwise idle machine.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use tunedfs::bench::{median_for, run_suite, BenchRecord, ExperimentSpec, Suite, DEFAULT_M_TOTAL};
use tunedfs::corpus::{
    bcc_trial, check_bcc, check_scc_exact, check_scc_oracle, check_scc_ordering, check_transcripts,
    scc_trial, sweep, Check, Execution,
};
use tunedfs::dfs::EngineKind;
use tunedfs::graph::{random_digraph, SplitMix64, StaticDigraph};
use tunedfs::scc::{scc_cmg_tuned, scc_kosaraju_sharir, SccLabeling};

const SCC_TRIALS: usize = 2000;
const SCC_MAX_N: usize = 64;
const SCC_SEED: u64 = 1;
const BCC_TRIALS: usize = 1000;
const TRANSCRIPT_TRIALS: usize = 200;
const TRANSCRIPT_MAX_N: usize = 32;
const TIMING_REPEATS: usize = 9;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn corpus_outcome(
    trials: usize,
    generate: impl Fn(usize) -> tunedfs::EdgeList + Sync,
    check: impl Fn(&tunedfs::EdgeList) -> Check + Sync,
) -> Outcome {
    match sweep(trials, Execution::default(), generate, check) {
        None => outcome(true, format!("{trials} graphs")),
        Some(c) => outcome(
            false,
            format!(
                "trial {} (n = {}, edges {:?}): {}",
                c.trial, c.graph.n, c.graph.edges, c.reason
            ),
        ),
    }
}

fn scc_corpus(check: impl Fn(&tunedfs::EdgeList) -> Check + Sync) -> Outcome {
    corpus_outcome(SCC_TRIALS, |i| scc_trial(SCC_SEED, SCC_MAX_N, i), check)
}

fn oracle_scc() -> Outcome {
    scc_corpus(check_scc_oracle)
}

fn exact_labeling() -> Outcome {
    scc_corpus(check_scc_exact)
}

fn ordering() -> Outcome {
    scc_corpus(check_scc_ordering)
}

fn oracle_bcc() -> Outcome {
    corpus_outcome(BCC_TRIALS, |i| bcc_trial(SCC_SEED, 10, i), check_bcc)
}

fn transcripts() -> Outcome {
    corpus_outcome(
        TRANSCRIPT_TRIALS,
        |i| scc_trial(SCC_SEED, TRANSCRIPT_MAX_N, i),
        check_transcripts,
    )
}

fn timed_spec(suite: Suite, densities: &[usize], ids: &[&str]) -> ExperimentSpec {
    let mut spec = ExperimentSpec::new(suite).with_m_total(DEFAULT_M_TOTAL);
    spec.densities = densities.to_vec();
    spec.repeats = TIMING_REPEATS;
    spec.algorithms = ids
        .iter()
        .map(|id| tunedfs::bench::algorithm(id).expect("registered id"))
        .collect();
    spec
}

/// Median ns/edge of each id at the single grid point `(n, m)`.
fn medians_at(
    records: &[BenchRecord],
    ids: &[&str],
    n: usize,
    m: usize,
) -> Result<Vec<f64>, String> {
    ids.iter()
        .map(|id| median_for(records, id, n, m).ok_or_else(|| format!("no timings for {id}")))
        .collect()
}

fn ablation() -> Outcome {
    const IDS: [&str; 6] = [
        "cmg_baseline",
        "cmg_overlay",
        "cmg_overlay_edgestack",
        "tarjan_baseline",
        "tarjan_overlay",
        "tarjan_overlay_edgestack",
    ];
    let spec = timed_spec(Suite::Ablation, &[10], &IDS);
    let (n, m) = spec.grid()[0];
    let t = match run_suite(&spec)
        .map_err(|e| e.to_string())
        .and_then(|r| medians_at(&r, &IDS, n, m))
    {
        Ok(t) => t,
        Err(e) => return outcome(false, e),
    };
    let mut pass = true;
    let mut detail = Vec::new();
    for (family, t) in [("cmg", &t[0..3]), ("tarjan", &t[3..6])] {
        let overlay = t[1] / t[0];
        let edge_stack = t[2] / t[1];
        pass &= overlay <= 0.85 && edge_stack <= 1.05;
        detail.push(format!(
            "{family}: {:.1}/{:.1}/{:.1} ns/edge, overlay/baseline {overlay:.3} (<= 0.85), edgestack/overlay {edge_stack:.3} (<= 1.05)",
            t[0], t[1], t[2]
        ));
    }
    outcome(pass, detail.join("; "))
}

fn density_trend() -> Outcome {
    const DENSITIES: [usize; 5] = [2, 4, 8, 16, 32];
    let spec = timed_spec(Suite::DensitySweep, &DENSITIES, &["cmg_tuned"]);
    let records = match run_suite(&spec) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let times: Option<Vec<f64>> = spec
        .grid()
        .iter()
        .map(|&(n, m)| median_for(&records, "cmg_tuned", n, m))
        .collect();
    let Some(times) = times else {
        return outcome(false, "missing timings");
    };
    // every denser point may be at most 10% slower than any sparser one
    let violation = (0..times.len())
        .flat_map(|i| (i + 1..times.len()).map(move |j| (i, j)))
        .find(|&(i, j)| times[j] > 1.10 * times[i]);
    let series = DENSITIES
        .iter()
        .zip(&times)
        .map(|(d, t)| format!("m/n={d}: {t:.1}"))
        .collect::<Vec<_>>()
        .join(", ");
    match violation {
        None => outcome(true, series),
        Some((i, j)) => outcome(
            false,
            format!(
                "m/n={} slower than m/n={} by more than 10%; {series}",
                DENSITIES[j], DENSITIES[i]
            ),
        ),
    }
}

fn ranking() -> Outcome {
    const IDS: [&str; 4] = ["dfs_scan", "tarjan_tuned", "cmg_tuned", "ks_with_reverse"];
    let spec = timed_spec(Suite::DensitySweep, &[10], &IDS);
    let (n, m) = spec.grid()[0];
    let t = match run_suite(&spec)
        .map_err(|e| e.to_string())
        .and_then(|r| medians_at(&r, &IDS, n, m))
    {
        Ok(t) => t,
        Err(e) => return outcome(false, e),
    };
    let (scan, tarjan, cmg, ks) = (t[0], t[1], t[2], t[3]);
    let scan_ok = scan <= 1.05 * tarjan;
    let gap = (tarjan - cmg).abs();
    let close_ok = gap <= 0.15 * tarjan.min(cmg);
    let ks_ok = ks >= 1.5 * cmg;
    outcome(
        scan_ok && close_ok && ks_ok,
        format!(
            "scan {scan:.1}, tarjan {tarjan:.1}, cmg {cmg:.1}, ks+reverse {ks:.1} ns/edge; \
             scan/tarjan {:.3} (<= 1.05), |tarjan-cmg|/min {:.3} (<= 0.15), ks/cmg {:.2} (>= 1.5)",
            scan / tarjan,
            gap / tarjan.min(cmg),
            ks / cmg
        ),
    )
}

fn scale() -> Outcome {
    const N: usize = 1 << 21;
    const M: usize = 1 << 24;
    const SAMPLE: usize = 100_000;
    let g = match random_digraph(N, M, 7).and_then(|el| StaticDigraph::from_edge_list(&el)) {
        Ok(g) => g,
        Err(e) => return outcome(false, e.to_string()),
    };
    // the iterative engine keeps its frames on the heap, so this runs on the
    // calling thread's default stack
    let start = Instant::now();
    let lab = scc_cmg_tuned(&g, EngineKind::Iterative);
    let elapsed = start.elapsed();
    if !lab.is_well_formed() {
        return outcome(false, "labeling is not well formed");
    }
    let truth: SccLabeling = scc_kosaraju_sharir(&g);
    let mut rng = SplitMix64::seed_from_u64(11);
    let (offsets, targets) = (g.offsets(), g.targets());
    for _ in 0..SAMPLE {
        let e = rng.gen_range(0..M);
        let u = offsets.partition_point(|&o| o as usize <= e) - 1;
        let v = targets[e] as usize;
        let (cu, cv) = (lab.comp_num[u], lab.comp_num[v]);
        let same = truth.comp_num[u] == truth.comp_num[v];
        if cu < cv || (cu == cv) != same {
            return outcome(
                false,
                format!("edge ({u}, {v}) has labels {cu}, {cv}, same component: {same}"),
            );
        }
    }
    outcome(
        true,
        format!(
            "n = {N}, m = {M}, {} components in {:.2} s, {SAMPLE} sampled edges consistent",
            lab.scc_count,
            elapsed.as_secs_f64()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("scc oracle agreement", oracle_scc),
        ("exact labeling equivalence", exact_labeling),
        ("ordering invariants", ordering),
        ("bcc oracle agreement", oracle_bcc),
        ("engine transcript equivalence", transcripts),
        ("optimization ablation", ablation),
        ("density trend", density_trend),
        ("algorithm ranking", ranking),
        ("scale smoke test", scale),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "[{verdict}] {}. {name} ({:.1} s): {}",
            i + 1,
            start.elapsed().as_secs_f64(),
            o.detail
        );
        failures += usize::from(!o.pass);
    }
    if failures == 0 {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!(
            "acceptance: {failures} of {} criteria failed",
            criteria.len()
        );
        ExitCode::FAILURE
    }
}
