use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rcm_core::certificate::Certificate;
use rcm_core::colouring::ColouredCompleteGraph;
use rcm_core::extremal::{burr_colouring, burr_layout, perturbed_burr, random_colouring};
use rcm_core::finder::{find_connected_clique_matching, FinderError, Outcome};
use rcm_core::format::{parse_colouring, serialize_colouring};
use rcm_core::oracle::{decide_with_budget, ramsey_connected_exact, verify_certificate, RamseyOutcome};

use crate::report::{digest, RunReport};
use crate::{exit, CliError, DecideArgs, FindArgs, GenKind, RamseyArgs, VerifyArgs};

pub(crate) fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub(crate) fn read_colouring(path: &Path) -> Result<(String, ColouredCompleteGraph), CliError> {
    let text = read_text(path)?;
    let g = parse_colouring(&text).map_err(|source| CliError::Parse { path: path.to_path_buf(), source })?;
    Ok((text, g))
}

pub(crate) fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn emit(dest: Option<&PathBuf>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match dest {
        Some(path) => write_file(path, text),
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: PathBuf::from("<stdout>"), source }),
    }
}

fn precondition(e: impl ToString) -> CliError {
    CliError::Precondition(e.to_string())
}

pub(crate) fn gen(kind: GenKind, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let (g, info, dest) = match kind {
        GenKind::Burr { r, n, out } => {
            let g = burr_colouring(r, n).map_err(precondition)?;
            let layout: Vec<String> = burr_layout(r, n).iter().map(|p| format!("{}..{}", p.start, p.end)).collect();
            let info = format!("N={} layout={}", g.vertex_count(), layout.join(","));
            (g, info, out)
        }
        GenKind::Random { vertices, p, seed, out } => {
            if vertices == 0 {
                return Err(precondition("N must be at least 1"));
            }
            let info = format!("N={vertices} p={p} seed={seed}");
            (random_colouring(vertices, p, seed), info, out)
        }
        GenKind::PerturbedBurr { r, n, flips, seed, out } => {
            let g = perturbed_burr(r, n, flips, seed).map_err(precondition)?;
            let info = format!("N={} flips={flips} seed={seed}", g.vertex_count());
            (g, info, out)
        }
    };
    let text = serialize_colouring(&g);
    match &dest {
        Some(_) => {
            emit(dest.as_ref(), &text, out)?;
            let _ = writeln!(out, "{info}");
        }
        None => {
            emit(None, &text, out)?;
            let _ = writeln!(err, "{info}");
        }
    }
    Ok(exit::OK)
}

pub(crate) fn find(args: FindArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let (text, g) = read_colouring(&args.input)?;
    let mut report = RunReport::new("find").param("r", args.r).param("n", args.n).param("N", g.vertex_count());
    report.digest = Some(digest(&text));
    let start = Instant::now();
    let result = find_connected_clique_matching(&g, args.r, args.n, args.ramsey_bound);
    report.wall = start.elapsed();
    match result {
        Ok(run) => {
            emit(args.out.as_ref(), &run.certificate.to_text(), out)?;
            if let Some(path) = &args.report {
                write_file(path, &run.report.to_key_values())?;
            }
            report.outcome = run.report.outcome.map_or("none", Outcome::as_str).to_string();
            report.augmentations = Some(run.report.augmentations());
            let _ = writeln!(err, "{}", report.line());
            Ok(exit::OK)
        }
        Err(FinderError::Regime(e)) => Err(precondition(e)),
        Err(FinderError::Violation(v)) => {
            report.outcome = "violation".into();
            let _ = writeln!(err, "{}", report.line());
            let _ = writeln!(err, "{v}");
            let _ = err.write_all(v.dump().as_bytes());
            Ok(exit::VIOLATION)
        }
    }
}

pub(crate) fn verify(args: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let (_, g) = read_colouring(&args.colouring)?;
    let cert = Certificate::parse(&read_text(&args.certificate)?)
        .map_err(|source| CliError::Parse { path: args.certificate.clone(), source })?;
    match verify_certificate(&g, &cert, args.r, args.n) {
        Ok(()) => {
            let _ = writeln!(out, "ok");
            Ok(exit::OK)
        }
        Err(rejection) => {
            let _ = writeln!(err, "rejected: {rejection}");
            Ok(exit::REJECTED)
        }
    }
}

fn check_small_params(r: usize, n: usize) -> Result<(), CliError> {
    if r < 2 || n < 1 {
        return Err(precondition(format!("need r >= 2 and n >= 1, got r = {r}, n = {n}")));
    }
    Ok(())
}

pub(crate) fn decide(args: DecideArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    check_small_params(args.r, args.n)?;
    let (text, g) = read_colouring(&args.input)?;
    let mut report = RunReport::new("decide").param("r", args.r).param("n", args.n).param("mode", args.mode);
    report.digest = Some(digest(&text));
    let start = Instant::now();
    let result = decide_with_budget(&g, args.r, args.n, args.mode, args.budget);
    report.wall = start.elapsed();
    let code = match result {
        Err(e) => {
            let _ = writeln!(out, "answer=unknown");
            let _ = writeln!(err, "{e}");
            report.outcome = "unknown".into();
            exit::UNKNOWN
        }
        Ok(d) => match d.witness {
            Some(cert) => {
                let _ = writeln!(out, "answer=yes colour={}", cert.colour);
                emit(args.witness_out.as_ref(), &cert.to_text(), out)?;
                report.outcome = "yes".into();
                exit::OK
            }
            None => {
                let _ = writeln!(out, "answer=no");
                report.outcome = "no".into();
                exit::NO
            }
        },
    };
    let _ = writeln!(err, "{}", report.line());
    Ok(code)
}

pub(crate) fn ramsey(args: RamseyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    check_small_params(args.r, args.n)?;
    if args.m_max < 1 {
        return Err(precondition("m-max must be at least 1"));
    }
    match ramsey_connected_exact(args.r, args.n, args.m_max, args.budget) {
        RamseyOutcome::Value { m, failing_witness, leaves } => {
            let _ = writeln!(out, "value={m}");
            if let Some(path) = &args.witness_out {
                write_file(path, &serialize_colouring(&failing_witness))?;
                let _ = writeln!(out, "witness={}", path.display());
            }
            let _ = writeln!(err, "leaves={leaves}");
            Ok(exit::OK)
        }
        RamseyOutcome::Unknown { reason, leaves } => {
            let _ = writeln!(out, "value=unknown");
            let _ = writeln!(err, "reason={reason}\nleaves={leaves}");
            Ok(exit::UNKNOWN)
        }
    }
}
