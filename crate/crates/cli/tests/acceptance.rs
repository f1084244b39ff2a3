//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs the real `rcm` binary where a criterion is about commands.

use std::path::Path;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use rcm_core::certificate::Certificate;
use rcm_core::colouring::{Colour, ColouredCompleteGraph};
use rcm_core::extremal::{burr_colouring, burr_layout, burr_lower_bound, perturb, random_colouring, BurrParams};
use rcm_core::finder::find_connected_clique_matching;
use rcm_core::format::{parse_colouring, serialize_colouring};
use rcm_core::oracle::{
    decide, max_connected_packing, ramsey_connected_exact, verify_certificate, Mode, RamseyOutcome,
    DEFAULT_LEAF_BUDGET,
};
use rcm_core::rng::{below, generator, Probability};

type Verdict = Result<String, String>;

fn rcm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rcm")).args(args).output().expect("spawn rcm")
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap_or(-1)
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 temp path")
}

fn formula_identity() -> Verdict {
    let start = Instant::now();
    let mut checked = 0;
    for r in 2..=10usize {
        for n in 1..=100usize {
            let expected = (r * r - r + 1) * n - r + 1;
            let got = burr_lower_bound(BurrParams::clique_matching(r, n).map_err(|e| e.to_string())?);
            if got != expected {
                return Err(format!("r={r} n={n}: {got} != {expected}"));
            }
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{checked} pairs equal in {elapsed:?}"))
}

fn extremal_negativity() -> Verdict {
    let mut notes = Vec::new();
    for (r, n) in [(2, 2), (2, 3), (3, 2), (4, 2), (4, 3), (5, 2)] {
        let g = burr_colouring(r, n).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let d = decide(&g, r, n, Mode::Connected);
        let elapsed = start.elapsed();
        if d.answer {
            return Err(format!("({r},{n}) on {} vertices: decided yes", g.vertex_count()));
        }
        if elapsed >= Duration::from_secs(60) {
            return Err(format!("({r},{n}) took {elapsed:?}"));
        }
        notes.push(format!("({r},{n}) no in {:.1} ms", elapsed.as_secs_f64() * 1e3));
    }

    let (r, n) = (4, 18);
    let g = burr_colouring(r, n).map_err(|e| e.to_string())?;
    if g.vertex_count() != 230 {
        return Err(format!("burr(4,18) has {} vertices", g.vertex_count()));
    }
    let blue: Vec<usize> = g.colour_components(Colour::Blue, &g.all_vertices()).iter().map(|c| c.count()).collect();
    if blue.iter().any(|&s| s >= r * n) || blue.iter().filter(|&&s| s == r * n - 1).count() != r - 1 {
        return Err(format!("blue component sizes {blue:?}"));
    }
    // Red is complete multipartite on the parts, so every red K_4 has one
    // vertex in each part and the smallest part caps the packing.
    let parts = burr_layout(r, n);
    let multipartite = (0..g.vertex_count()).all(|u| {
        (0..u).all(|v| {
            let same = parts.iter().any(|p| p.contains(&u) && p.contains(&v));
            g.colour(u, v) == if same { Colour::Blue } else { Colour::Red }
        })
    });
    let red = max_connected_packing(&g, Colour::Red, r);
    if !multipartite || red != n - 1 {
        return Err(format!("multipartite={multipartite} max red packing {red}"));
    }
    notes.push(format!("burr(4,18): blue components {blue:?}, max red packing {red}"));
    Ok(notes.join("; "))
}

fn tiny_ramsey_values() -> Verdict {
    let start = Instant::now();
    let mut notes = Vec::new();
    for (r, n, expected) in [(2, 2, 5), (2, 3, 8), (3, 1, 6)] {
        match ramsey_connected_exact(r, n, expected + 2, DEFAULT_LEAF_BUDGET) {
            RamseyOutcome::Value { m, failing_witness, .. } => {
                if m != expected {
                    return Err(format!("({r},{n}) = {m}, expected {expected}"));
                }
                if decide(&failing_witness, r, n, Mode::Connected).answer {
                    return Err(format!("({r},{n}) witness on {} vertices is not failing", m - 1));
                }
                notes.push(format!("({r},{n})={m}"));
            }
            RamseyOutcome::Unknown { reason, .. } => return Err(format!("({r},{n}) unknown: {reason}")),
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(600) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{} in {elapsed:?}", notes.join(" ")))
}

struct CorpusRun {
    name: String,
    find_ms: f64,
    augmentations: usize,
    trace_ok: bool,
}

/// Generates, finds and verifies every corpus instance through the binary.
fn theorem_scale_corpus(dir: &Path) -> Result<Vec<CorpusRun>, String> {
    let mut jobs: Vec<(String, Vec<String>)> = Vec::new();
    for i in 0..102u64 {
        let p = ["0.1", "0.5", "0.9"][(i % 3) as usize];
        let seed = (1000 + i).to_string();
        let args = ["gen", "random", "--N", "231", "--p", p, "--seed", &seed].map(String::from).to_vec();
        jobs.push((format!("random p={p} seed={seed}"), args));
    }
    for i in 0..30u64 {
        let flips = ["1", "10", "100"][(i % 3) as usize];
        let seed = (2000 + i).to_string();
        let args = ["gen", "perturbed-burr", "--r", "4", "--n", "18", "--flips", flips, "--seed", &seed]
            .map(String::from)
            .to_vec();
        jobs.push((format!("perturbed-burr flips={flips} seed={seed}"), args));
    }

    let mut runs = Vec::new();
    for (k, (name, mut gen)) in jobs.into_iter().enumerate() {
        let colouring = dir.join(format!("c{k}.rcm"));
        let cert = dir.join(format!("c{k}.cert"));
        let report = dir.join(format!("c{k}.report"));
        gen.extend(["--out".to_string(), path_str(&colouring).to_string()]);
        let args: Vec<&str> = gen.iter().map(String::as_str).collect();
        let out = rcm(&args);
        if code(&out) != 0 {
            return Err(format!("{name}: gen exited {}", code(&out)));
        }
        let found = rcm(&[
            "find", "--input", path_str(&colouring), "--r", "4", "--n", "18", "--out", path_str(&cert), "--report",
            path_str(&report),
        ]);
        if code(&found) != 0 {
            let err = String::from_utf8_lossy(&found.stderr);
            return Err(format!("{name}: find exited {}: {}", code(&found), err.lines().take(3).collect::<Vec<_>>().join(" | ")));
        }
        let checked =
            rcm(&["verify", "--colouring", path_str(&colouring), "--certificate", path_str(&cert), "--r", "4", "--n", "18"]);
        if code(&checked) != 0 {
            return Err(format!("{name}: verify exited {}: {}", code(&checked), String::from_utf8_lossy(&checked.stderr)));
        }
        let stderr = String::from_utf8_lossy(&found.stderr).to_string();
        let find_ms: f64 = stderr
            .split_whitespace()
            .find_map(|t| t.strip_prefix("wall_ms="))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| format!("{name}: no wall_ms in report"))?;
        let text = std::fs::read_to_string(&report).map_err(|e| e.to_string())?;
        let field = |key: &str| text.lines().find_map(|l| l.strip_prefix(key)).unwrap_or("").to_string();
        let augmentations: usize = field("augmentations=").parse().map_err(|_| format!("{name}: bad report"))?;
        let trace = field("trace=");
        let trace_ok = trace.split(',').filter(|s| !s.is_empty()).all(|step| {
            let sizes = step.rsplit(':').next().unwrap_or("");
            match sizes.split_once("->").map(|(a, b)| (a.parse::<usize>(), b.parse::<usize>())) {
                Some((Ok(a), Ok(b))) => b > a,
                _ => false,
            }
        });
        let traced = trace.split(',').filter(|s| !s.is_empty()).count();
        runs.push(CorpusRun { name, find_ms, augmentations, trace_ok: trace_ok && traced == augmentations });
    }
    Ok(runs)
}

fn finder_soundness(runs: &Result<Vec<CorpusRun>, String>) -> Verdict {
    let runs = runs.as_ref().map_err(Clone::clone)?;
    let random = runs.iter().filter(|r| r.name.starts_with("random")).count();
    let perturbed = runs.len() - random;
    if random < 100 || perturbed < 30 {
        return Err(format!("corpus too small: {random} random, {perturbed} perturbed"));
    }
    let mut times: Vec<f64> = runs.iter().map(|r| r.find_ms).collect();
    times.sort_by(f64::total_cmp);
    let median = (times[times.len() / 2 - 1] + times[times.len() / 2]) / 2.0;
    let max = *times.last().unwrap();
    if median >= 1000.0 || max >= 30000.0 {
        return Err(format!("median {median:.1} ms, max {max:.1} ms"));
    }
    Ok(format!(
        "{random} random + {perturbed} perturbed: all found and verified, 0 violations; median {median:.1} ms, max {max:.1} ms"
    ))
}

// Red K_4 groups followed by three blue cliques joined in red; each group
// vertex is blue to one clique (or none), sometimes with a few red edges into
// it. Greedy packings on these are short, so augmentations actually happen.
fn grouped(seed: u64) -> ColouredCompleteGraph {
    let mut rng = generator(seed);
    let k = 1 + below(&mut rng, 17) as usize;
    let start = 4 * k;
    let rest = 231 - start;
    let a = rest / 3 + below(&mut rng, 5) as usize;
    let b = (rest - a) / 2;
    let firsts = [start, start + a, start + a + b];
    let comp = |v: usize| (v >= start).then(|| firsts.iter().rposition(|&f| v >= f).unwrap());
    let profile: Vec<(Option<usize>, usize)> = (0..start)
        .map(|_| {
            let t = below(&mut rng, 4) as usize;
            let reds = if below(&mut rng, 4) == 0 { 1 + below(&mut rng, 2) as usize } else { 0 };
            ((t < 3).then_some(t), reds)
        })
        .collect();
    let noise = random_colouring(start, Probability::new(below(&mut rng, 3), 40).unwrap(), seed);
    let g = ColouredCompleteGraph::from_fn(231, |u, v| match (comp(u), comp(v)) {
        (Some(x), Some(y)) => if x == y { Colour::Blue } else { Colour::Red },
        (None, None) => if u / 4 == v / 4 { Colour::Red } else { noise.colour(u, v) },
        (Some(x), None) | (None, Some(x)) => {
            let (p, w) = if u < start { (u, v) } else { (v, u) };
            match profile[p] {
                (Some(t), reds) if t == x => if w < firsts[x] + reds { Colour::Red } else { Colour::Blue },
                _ => Colour::Red,
            }
        }
    })
    .unwrap();
    perturb(&g, (seed % 4) as usize, seed).unwrap()
}

fn progress_bound(runs: &Result<Vec<CorpusRun>, String>) -> Verdict {
    let runs = runs.as_ref().map_err(Clone::clone)?;
    let most = runs.iter().map(|r| r.augmentations).max().unwrap_or(0);
    if let Some(bad) = runs.iter().find(|r| r.augmentations > 18 || !r.trace_ok) {
        return Err(format!("{}: {} augmentations, trace ok {}", bad.name, bad.augmentations, bad.trace_ok));
    }
    // The binary corpus rarely needs augmenting, so add inputs that do.
    let (mut augmented, mut grouped_most) = (0, 0);
    for seed in 0..200u64 {
        let g = grouped(seed);
        let run = find_connected_clique_matching(&g, 4, 18, None).map_err(|e| format!("grouped seed {seed}: {e}"))?;
        let steps = run.report.augmentations();
        if steps > 18 || run.report.trace.iter().any(|e| e.after <= e.before) {
            return Err(format!("grouped seed {seed}: {steps} augmentations, trace {:?}", run.report.trace));
        }
        verify_certificate(&g, &run.certificate, 4, 18).map_err(|e| format!("grouped seed {seed}: {e}"))?;
        augmented += usize::from(steps > 0);
        grouped_most = grouped_most.max(steps);
    }
    Ok(format!(
        "{} binary runs (at most {most} augmentations) and 200 grouped inputs ({augmented} augmented, at most {grouped_most}); every step grows the packing",
        runs.len()
    ))
}

// The extremal colouring plus one vertex that is blue to one of the three
// large blue cliques and to a random subset of the small one, red elsewhere,
// randomly relabelled. Every red K_4 still needs a vertex of the small part,
// so the certificate is blue and another blue component stays available to
// the mutation that moves a vertex.
fn blue_certificate_instance(seed: u64) -> ColouredCompleteGraph {
    let burr = burr_colouring(4, 18).unwrap();
    let parts = burr_layout(4, 18);
    let mut rng = generator(seed);
    let host = parts[below(&mut rng, 3) as usize].clone();
    let small = parts[3].clone();
    let blue_to: Vec<bool> =
        (0..burr.vertex_count()).map(|v| host.contains(&v) || small.contains(&v) && below(&mut rng, 2) == 0).collect();
    let extra = burr.vertex_count();
    let mut perm: Vec<usize> = (0..=extra).collect();
    for i in (1..perm.len()).rev() {
        perm.swap(i, below(&mut rng, i as u64 + 1) as usize);
    }
    ColouredCompleteGraph::from_fn(extra + 1, |u, v| {
        let (u, v) = (perm[u], perm[v]);
        match (u == extra, v == extra) {
            (true, _) => if blue_to[v] { Colour::Blue } else { Colour::Red },
            (_, true) => if blue_to[u] { Colour::Blue } else { Colour::Red },
            _ => burr.colour(u, v),
        }
    })
    .unwrap()
}

fn mutation_kill_rate() -> Verdict {
    let start = Instant::now();
    let (r, n) = (4, 18);
    let mut killed = 0;
    let mut total = 0;
    for seed in 0..50u64 {
        let g = blue_certificate_instance(seed);
        let cert = find_connected_clique_matching(&g, r, n, None).map_err(|e| format!("seed {seed}: {e}"))?.certificate;
        if verify_certificate(&g, &cert, r, n).is_err() {
            return Err(format!("seed {seed}: original certificate rejected"));
        }
        let components = g.colour_components(cert.colour, &g.all_vertices());
        let home = components.iter().position(|c| c.contains(cert.cliques[0][0])).unwrap();
        let used: Vec<usize> = cert.cliques.concat();
        let elsewhere = components
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != home)
            .flat_map(|(_, c)| c.iter())
            .find(|v| !used.contains(v))
            .ok_or_else(|| {
                let sizes: Vec<usize> = components.iter().map(|c| c.count()).collect();
                format!("seed {seed}: {} certificate, components {sizes:?}", cert.colour)
            })?;

        let mut removed = cert.clone();
        removed.cliques.pop();
        let mut duplicated = cert.clone();
        duplicated.cliques[1][0] = duplicated.cliques[0][0];
        let mut flipped = cert.clone();
        flipped.colour = flipped.colour.other();
        let mut moved = cert.clone();
        let last = moved.cliques[n - 1].len() - 1;
        moved.cliques[n - 1][last] = elsewhere;

        for mutant in [removed, duplicated, flipped, moved] {
            total += 1;
            // Through the text form, as a file would be read.
            let reparsed = Certificate::parse(&mutant.to_text()).map_err(|e| e.to_string())?;
            if verify_certificate(&g, &reparsed, r, n).is_err() {
                killed += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    if killed != total || elapsed >= Duration::from_secs(10) {
        return Err(format!("{killed}/{total} mutants rejected in {elapsed:?}"));
    }
    Ok(format!("{killed}/{total} mutants rejected in {elapsed:?}"))
}

fn determinism(dir: &Path) -> Verdict {
    let mut invocations = 0;
    let mut compare = |label: &str, args: &[&str], files: &[&Path]| -> Result<(), String> {
        let mut seen: Option<(Vec<u8>, Vec<Vec<u8>>)> = None;
        for _ in 0..3 {
            let out = rcm(args);
            invocations += 1;
            let contents: Vec<Vec<u8>> = files.iter().map(|f| std::fs::read(f).unwrap_or_default()).collect();
            let current = (out.stdout, contents);
            if let Some(first) = &seen {
                if *first != current {
                    return Err(format!("{label}: outputs differ"));
                }
            }
            seen = Some(current);
        }
        Ok(())
    };
    let random = dir.join("det-random.rcm");
    let burr = dir.join("det-burr.rcm");
    let cert = dir.join("det.cert");
    let report = dir.join("det.report");
    let small = dir.join("det-small.rcm");
    compare("gen random", &["gen", "random", "--N", "231", "--p", "0.5", "--seed", "11", "--out", path_str(&random)], &[&random])?;
    compare("gen perturbed-burr", &["gen", "perturbed-burr", "--r", "4", "--n", "18", "--flips", "10", "--seed", "3", "--out", path_str(&burr)], &[&burr])?;
    compare("gen random stdout", &["gen", "random", "--N", "12", "--p", "1/3", "--seed", "5"], &[])?;
    std::fs::write(&small, serialize_colouring(&parse_colouring(&std::fs::read_to_string(&burr).unwrap()).unwrap().induced(&(0..20).collect::<Vec<_>>()).unwrap())).unwrap();
    compare(
        "find",
        &["find", "--input", path_str(&burr), "--r", "4", "--n", "18", "--out", path_str(&cert), "--report", path_str(&report)],
        &[&cert, &report],
    )?;
    compare("find stdout", &["find", "--input", path_str(&random), "--r", "4", "--n", "18"], &[])?;
    compare("decide", &["decide", "--input", path_str(&small), "--r", "3", "--n", "2"], &[])?;
    compare("decide unconnected", &["decide", "--input", path_str(&small), "--r", "3", "--n", "3", "--mode", "unconnected"], &[])?;
    Ok(format!("{invocations} invocations, byte-identical per command"))
}

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    let corpus = theorem_scale_corpus(dir.path());
    let results: Vec<(&str, Verdict)> = vec![
        ("1 formula identity", formula_identity()),
        ("2 extremal negativity", extremal_negativity()),
        ("3 tiny exact Ramsey values", tiny_ramsey_values()),
        ("4 finder soundness at theorem scale", finder_soundness(&corpus)),
        ("5 progress bound", progress_bound(&corpus)),
        ("6 verifier mutation kill rate", mutation_kill_rate()),
        ("7 determinism", determinism(dir.path())),
    ];
    let mut failed = 0;
    for (name, verdict) in &results {
        match verdict {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
