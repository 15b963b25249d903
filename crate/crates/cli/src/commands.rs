use std::fs;
use std::io::Write;
use std::path::Path;

use ckcoh_core::ck::{self, Family};
use ckcoh_core::cohomology;
use ckcoh_core::extensions::{self, TheoremReport};
use ckcoh_core::format;
use ckcoh_core::generator::CkBasis;
use ckcoh_core::OmegaVector;
use rayon::prelude::*;
use serde_json::json;

use crate::render::{basic_text, cochain_entries, cochain_json};
use crate::{Failure, Format, Output, Target};

/// Sweeps refuse ranks above this without `--allow-large`.
const MAX_SWEEP_RANK: usize = 6;

fn emit(output: &Output, content: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => fs::write(path, content)?,
        None => std::io::stdout().lock().write_all(content.as_bytes())?,
    }
    Ok(())
}

fn pretty(value: &serde_json::Value) -> Result<String, Failure> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn header(family: Family, w: &OmegaVector) -> String {
    format!("{family}_ω({}) ω = {}", w.n() + 1, w.notation())
}

pub fn algebra(target: &Target, output: &Output) -> Result<(), Failure> {
    let w = target.omega()?;
    let g = ck::build_family(target.family, target.n, &w)?;
    let content = match output.format {
        Format::Text => format::algebra_to_text(&g),
        Format::Json => format::algebra_to_json(&g)? + "\n",
    };
    emit(output, &content)?;
    let ok = g.jacobi_residual() == ckcoh_core::rational::zero();
    eprintln!(
        "{}: dim {}, {} structure constants, jacobi: {}",
        header(target.family, &w),
        g.dim(),
        g.nonzero_count(),
        if ok { "ok" } else { "FAILED" }
    );
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch("Jacobi residual is nonzero".into()))
    }
}

fn verdict(report: &TheoremReport) -> Result<(), Failure> {
    if report.ok() {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!(
            "{} {}: solver dim {} formula {}, generators ok {}, spans H2 {}",
            report.family,
            report.omega.sign_string(),
            report.dim_h2,
            report.dim_h2_formula,
            report.generators.iter().all(|g| g.ok()),
            report.spans_h2
        )))
    }
}

pub fn h2(target: &Target, output: &Output) -> Result<(), Failure> {
    let w = target.omega()?;
    let g = ck::build_family(target.family, target.n, &w)?;
    let report = extensions::verify_theorem(target.family, target.n, &w)?;
    let result = cohomology::h2(&g)?;
    let basics = result
        .representatives
        .iter()
        .map(|r| extensions::extract_basic(&g, r))
        .collect::<Result<Vec<_>, _>>()?;
    let status = if report.dims_match() {
        "MATCH"
    } else {
        "MISMATCH"
    };
    let content = match output.format {
        Format::Text => {
            let mut s = format!("{}\n", header(target.family, &w));
            s += &format!("dim Z2 = {}\n", report.dim_z2);
            s += &format!("dim B2 = {}\n", report.dim_b2);
            s += &format!(
                "dim H2 = {} (formula {}) {status}\n",
                report.dim_h2, report.dim_h2_formula
            );
            for check in &report.generators {
                s += &format!(
                    "generator {}: {} (expected {}) {}\n",
                    check.label,
                    if check.is_coboundary {
                        "coboundary"
                    } else {
                        "non-trivial"
                    },
                    if check.expected_trivial {
                        "coboundary"
                    } else {
                        "non-trivial"
                    },
                    if check.ok() { "ok" } else { "MISMATCH" }
                );
            }
            s += &format!(
                "generators span H2: {}\n",
                if report.spans_h2 { "yes" } else { "no" }
            );
            for (i, c) in basics.iter().enumerate() {
                s += &format!("representative {}: {}\n", i + 1, basic_text(c));
            }
            s
        }
        Format::Json => pretty(&json!({
            "family": target.family,
            "n": target.n,
            "omega": w,
            "dim_z2": report.dim_z2,
            "dim_b2": report.dim_b2,
            "dim_h2": report.dim_h2,
            "dim_h2_formula": report.dim_h2_formula,
            "match": report.dims_match(),
            "generators": report.generators.iter().map(|c| json!({
                "label": c.label.to_string(),
                "expected_trivial": c.expected_trivial,
                "is_coboundary": c.is_coboundary,
            })).collect::<Vec<_>>(),
            "spans_h2": report.spans_h2,
            "representatives": basics,
        }))?,
    };
    emit(output, &content)?;
    verdict(&report)
}

pub fn classify(target: &Target, output: &Output) -> Result<(), Failure> {
    let w = target.omega()?;
    let c = extensions::classify(target.family, &w);
    let join = |v: Vec<String>| {
        if v.is_empty() {
            "none".to_string()
        } else {
            v.join(",")
        }
    };
    let labels: Vec<String> = c.labels().iter().map(ToString::to_string).collect();
    let content = match output.format {
        Format::Text => {
            let alpha = |ks: &[usize]| join(ks.iter().map(|k| format!("α_{k}")).collect());
            let mut s = format!("{}\n", header(target.family, &w));
            s += &format!("zero parameters: {}\n", c.n_zero);
            s += &format!("type I (always trivial): {} coefficients\n", c.type1_count);
            s += &format!("type II trivial: {}\n", alpha(&c.type2_trivial));
            s += &format!("type II non-trivial: {}\n", alpha(&c.type2_nontrivial));
            let type3: Vec<String> = c
                .labels()
                .iter()
                .filter(|l| l.type_number() == 3)
                .map(ToString::to_string)
                .collect();
            s += &format!("type III: {}\n", join(type3));
            s += &format!("non-trivial: {}\n", join(labels));
            s += &format!(
                "dim H2 (formula) = {} = {}+{}\n",
                c.dim_h2_formula,
                c.type2_count(),
                c.type3_count()
            );
            s
        }
        Format::Json => {
            let mut v = serde_json::to_value(&c)?;
            v["labels"] = json!(labels);
            pretty(&v)?
        }
    };
    emit(output, &content)
}

pub fn rep(target: &Target, output: &Output) -> Result<(), Failure> {
    let w = target.omega()?;
    let g = ck::build_family(target.family, target.n, &w)?;
    let basis = CkBasis::new(target.n, target.family);
    let result = cohomology::h2(&g)?;
    let content = match output.format {
        Format::Text => {
            let mut s = format!(
                "{}\ndim H2 = {}\n",
                header(target.family, &w),
                result.dim_h2
            );
            for (i, r) in result.representatives.iter().enumerate() {
                let c = extensions::extract_basic(&g, r)?;
                s += &format!("representative {}: {}\n", i + 1, basic_text(&c));
                for (x, y, v) in cochain_entries(&basis, r) {
                    s += &format!("  xi({x},{y}) = {v}\n");
                }
            }
            s
        }
        Format::Json => {
            let reps = result
                .representatives
                .iter()
                .map(|r| {
                    let c = extensions::extract_basic(&g, r)?;
                    Ok(json!({ "basic": c, "entries": cochain_json(&basis, r) }))
                })
                .collect::<Result<Vec<_>, ckcoh_core::Error>>()?;
            pretty(&json!({
                "family": target.family,
                "n": target.n,
                "omega": w,
                "dim_h2": result.dim_h2,
                "representatives": reps,
            }))?
        }
    };
    emit(output, &content)
}

pub fn contract(target: &Target, index: usize, output: &Output) -> Result<(), Failure> {
    let w = target.omega()?;
    let r = extensions::contract(target.family, &w, index)?;
    let join = |v: &[extensions::Label]| {
        if v.is_empty() {
            "none".to_string()
        } else {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        }
    };
    let content = match output.format {
        Format::Text => {
            let mut s = format!(
                "contract {}_ω({}) at ω_{index}: {} -> {}\n",
                target.family,
                target.n + 1,
                r.before.notation(),
                r.after.notation()
            );
            s += &format!("dim H2 (formula): {} -> {}\n", r.dim_before, r.dim_after);
            s += &format!("became non-trivial: {}\n", join(&r.became_nontrivial));
            s += &format!("newly allowed: {}\n", join(&r.newly_allowed));
            s
        }
        Format::Json => pretty(&serde_json::to_value(&r)?)?,
    };
    emit(output, &content)
}

pub fn table(
    family: Family,
    n: usize,
    golden: Option<&Path>,
    output: &Output,
) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("N must be positive".into()));
    }
    let rows = extensions::table(family, n);
    let text = extensions::render_table(&rows);
    let content = match output.format {
        Format::Text => text.clone(),
        Format::Json => pretty(&json!({ "family": family, "n": n, "rows": rows }))?,
    };
    emit(output, &content)?;
    if let Some(path) = golden {
        let expected = fs::read_to_string(path)?;
        if expected != text {
            let line = text
                .lines()
                .zip(expected.lines())
                .position(|(a, b)| a != b)
                .map_or_else(
                    || "line count differs".to_string(),
                    |i| format!("first difference at line {}", i + 1),
                );
            return Err(Failure::Mismatch(format!(
                "table differs from {}: {line}",
                path.display()
            )));
        }
        eprintln!("golden {}: MATCH", path.display());
    }
    Ok(())
}

fn parse_range(range: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Usage(format!("invalid N range `{range}` (expected a..b)"));
    let (lo, hi) = match range.split_once("..") {
        Some((lo, hi)) => (lo, hi.trim_start_matches('=')),
        None => (range, range),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn thread_pool() -> Result<rayon::ThreadPool, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("CKCOH_THREADS") {
        let threads: usize = v.parse().ok().filter(|&t| t > 0).ok_or_else(|| {
            Failure::Usage(format!(
                "CKCOH_THREADS must be a positive integer, got `{v}`"
            ))
        })?;
        builder = builder.num_threads(threads);
    }
    builder.build().map_err(|e| Failure::Usage(e.to_string()))
}

pub fn sweep(
    family: Family,
    range: &str,
    allow_large: bool,
    output: &Output,
) -> Result<(), Failure> {
    let (lo, hi) = parse_range(range)?;
    if hi > MAX_SWEEP_RANK && !allow_large {
        return Err(Failure::Usage(format!(
            "N = {hi} exceeds {MAX_SWEEP_RANK}; pass --allow-large to run it anyway"
        )));
    }
    let cases: Vec<(usize, OmegaVector)> = (lo..=hi)
        .flat_map(|n| OmegaVector::all_signs(n).into_iter().map(move |w| (n, w)))
        .collect();
    let reports = thread_pool()?.install(|| {
        cases
            .par_iter()
            .map(|(n, w)| extensions::verify_theorem(family, *n, w))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let passed = reports.iter().filter(|r| r.ok()).count();
    let failed = reports.len() - passed;
    let content = match output.format {
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                s += &format!(
                    "{} {family} N={} {} dim H2 = {} (formula {})\n",
                    if r.ok() { "PASS" } else { "FAIL" },
                    r.omega.n(),
                    r.omega.sign_string(),
                    r.dim_h2,
                    r.dim_h2_formula
                );
            }
            s + &format!("{passed} PASS, {failed} FAIL\n")
        }
        Format::Json => pretty(&json!({
            "family": family,
            "range": [lo, hi],
            "cases": reports.iter().map(|r| json!({
                "n": r.omega.n(),
                "omega": r.omega,
                "dim_h2": r.dim_h2,
                "dim_h2_formula": r.dim_h2_formula,
                "ok": r.ok(),
            })).collect::<Vec<_>>(),
            "pass": passed,
            "fail": failed,
        }))?,
    };
    emit(output, &content)?;
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!(
            "{failed} of {} cases failed",
            reports.len()
        )))
    }
}
