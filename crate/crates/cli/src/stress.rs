use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use rcm_core::colouring::ColouredCompleteGraph;
use rcm_core::extremal::{perturbed_burr, random_colouring};
use rcm_core::finder::{find_connected_clique_matching, FinderError, Outcome};
use rcm_core::format::serialize_colouring;
use rcm_core::oracle::verify_certificate;
use rcm_core::params::{theorem_bound, Params};

use crate::commands::write_file;
use crate::report::digest;
use crate::{exit, CliError, Family, StressArgs};

struct RunResult {
    line: String,
    find_ms: f64,
    augmentations: usize,
    verified: bool,
    violation: Option<String>,
}

pub(crate) fn stress(args: StressArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let vertex_count = theorem_bound(args.r, args.n);
    Params::new(args.r, args.n, vertex_count)
        .check_theorem_regime(args.ramsey_bound)
        .map_err(|e| CliError::Precondition(e.to_string()))?;
    if args.family == Family::Random && args.p.is_empty() || args.family == Family::PerturbedBurr && args.flips.is_empty()
    {
        return Err(CliError::Precondition("empty parameter list".into()));
    }
    if args.family == Family::PerturbedBurr {
        // Surface bad flip counts before spawning work.
        for &flips in &args.flips {
            perturbed_burr(args.r, args.n, flips, args.seed).map_err(|e| CliError::Precondition(e.to_string()))?;
        }
    }

    let results: Vec<RunResult> = (0..args.count).into_par_iter().map(|i| one_run(&args, i, vertex_count)).collect();

    let mut times = Vec::with_capacity(results.len());
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    let (mut verified, mut violations) = (0, 0);
    for (i, result) in results.iter().enumerate() {
        let _ = writeln!(out, "{}", result.line);
        times.push(result.find_ms);
        *histogram.entry(result.augmentations).or_default() += 1;
        verified += usize::from(result.verified);
        if let Some(dump) = &result.violation {
            violations += 1;
            match &args.dump_dir {
                Some(dir) => write_file(&dir.join(format!("violation-{i}.txt")), dump)?,
                None => {
                    let _ = writeln!(err, "run {i} violation:\n{dump}");
                }
            }
        }
    }
    times.sort_by(f64::total_cmp);
    let median = if times.is_empty() {
        0.0
    } else if times.len() % 2 == 1 {
        times[times.len() / 2]
    } else {
        (times[times.len() / 2 - 1] + times[times.len() / 2]) / 2.0
    };
    let max = times.last().copied().unwrap_or(0.0);
    let hist: Vec<String> = histogram.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    let _ = writeln!(
        out,
        "runs={} verified={verified} violations={violations} median_ms={median:.3} max_ms={max:.3} augmentation_histogram={}",
        results.len(),
        hist.join(",")
    );
    Ok(if violations > 0 {
        exit::VIOLATION
    } else if verified < results.len() {
        exit::REJECTED
    } else {
        exit::OK
    })
}

fn instance(args: &StressArgs, i: usize, vertex_count: usize) -> (ColouredCompleteGraph, String, u64) {
    let seed = args.seed.wrapping_add(i as u64);
    match args.family {
        Family::Random => {
            let p = args.p[i % args.p.len()];
            (random_colouring(vertex_count, p, seed), format!("family=random p={p}"), seed)
        }
        Family::PerturbedBurr => {
            let flips = args.flips[i % args.flips.len()];
            let g = perturbed_burr(args.r, args.n, flips, seed).expect("checked before the runs");
            (g, format!("family=perturbed-burr flips={flips}"), seed)
        }
    }
}

fn one_run(args: &StressArgs, i: usize, vertex_count: usize) -> RunResult {
    let (g, family, seed) = instance(args, i, vertex_count);
    let text = serialize_colouring(&g);
    let mut line = format!("run={i} {family} seed={seed} digest={:016x}", digest(&text));
    let start = Instant::now();
    let found = find_connected_clique_matching(&g, args.r, args.n, args.ramsey_bound);
    let find_ms = start.elapsed().as_secs_f64() * 1e3;
    match found {
        Ok(run) => {
            let verified = verify_certificate(&g, &run.certificate, args.r, args.n).is_ok();
            let trace_ok = run.report.trace.iter().all(|e| e.after > e.before);
            let _ = write!(
                line,
                " outcome={} colour={} augmentations={} trace_ok={trace_ok} verified={verified} find_ms={find_ms:.3}",
                run.report.outcome.map_or("none", Outcome::as_str),
                run.certificate.colour,
                run.report.augmentations(),
            );
            RunResult { line, find_ms, augmentations: run.report.augmentations(), verified, violation: None }
        }
        Err(FinderError::Violation(v)) => {
            let _ = write!(line, " outcome=violation stage={} verified=false find_ms={find_ms:.3}", v.stage);
            RunResult { line, find_ms, augmentations: 0, verified: false, violation: Some(v.dump()) }
        }
        Err(FinderError::Regime(e)) => {
            let _ = write!(line, " outcome=precondition error={e:?} verified=false");
            RunResult { line, find_ms, augmentations: 0, verified: false, violation: None }
        }
    }
}
