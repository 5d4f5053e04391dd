//! `seidel`: command-line access to the seidel-core library.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on usage errors.

mod report;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use report::{align, csv_rows, Format, Report};
use seidel_core::bounds::{self, BoundTableRow, NeumaierV};
use seidel_core::classify::{self, ClassFingerprint};
use seidel_core::constructions::{self, ExtendOptions};
use seidel_core::nonexistence::{canned_corollaries, theorem_nonex_certificate, Verdict};
use seidel_core::repro::{Repro, ReproOptions, CRITERIA};
use seidel_core::spectra::{self, min_eigenvalue_multiplicity};
use seidel_core::{identities, linalg, SeidelMatrix, Spectrum};
use serde_json::json;
use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "seidel", version, about = "Seidel matrices, switching classes and equiangular lines")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Largest order accepted by enumeration, invariants and permanents.
    #[arg(long, global = true)]
    limit_order: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Seidel matrix in text format; stdin when omitted or `-`.
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the input is a well-formed Seidel matrix.
    Validate(Input),
    /// Switch with respect to a vertex subset, optionally permuting after.
    Switch {
        #[command(flatten)]
        input: Input,
        /// Comma-separated 0-based vertices.
        #[arg(long, value_delimiter = ',')]
        subset: Vec<usize>,
        /// Image of each vertex, comma-separated.
        #[arg(long, value_delimiter = ',')]
        perm: Option<Vec<usize>>,
    },
    /// Exact determinant and its residue mod 4.
    Det(Input),
    /// Exact permanent.
    Perm(Input),
    /// Characteristic polynomial.
    Charpoly(Input),
    /// Exact spectrum, when every eigenvalue is rational or quadratic.
    Spectrum(Input),
    /// Certify a claimed spectrum.
    Certify {
        #[command(flatten)]
        input: Input,
        /// For example `{[-5]^6,[3]^10}`.
        #[arg(long)]
        claim: String,
    },
    /// Switching-class invariant, chosen by order.
    Invariant(Input),
    /// Canonical representatives of every switching class of order `n`.
    Enumerate { n: usize },
    /// Class counts by order.
    Census {
        n: usize,
        /// Last order of a range starting at `n`.
        #[arg(long)]
        to: Option<usize>,
    },
    /// Build a named construction; `--list` shows the names.
    Construct {
        name: Option<String>,
        #[arg(long)]
        list: bool,
        /// Print the Seidel matrix too.
        #[arg(long)]
        matrix: bool,
    },
    /// Add lines one at a time, keeping the smallest eigenvalue at least `lambda0`.
    Extend {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        lambda0: i64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        max_dimension: Option<usize>,
    },
    /// Feasible three-eigenvalue spectra.
    Feasible {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        d_to: Option<usize>,
        #[arg(long, allow_hyphen_values = true, default_value_t = -5)]
        lambda0: i64,
        /// Smallest order searched; defaults to the best known count.
        #[arg(long)]
        n_from: Option<usize>,
    },
    /// Try to rule out a three-eigenvalue spectrum.
    Nonexist {
        spectrum: Option<String>,
        /// Replay the packaged nonexistence arguments instead.
        #[arg(long)]
        canned: bool,
    },
    /// Bounds on the maximum number of equiangular lines.
    Bounds {
        #[arg(long, default_value_t = 2)]
        from: usize,
        #[arg(long, default_value_t = 41)]
        to: usize,
        /// One row per dimension.
        #[arg(long)]
        ungrouped: bool,
        /// Rerun the witnesses behind each entry.
        #[arg(long)]
        check: bool,
    },
    /// Bounds at angle 1/5.
    N5table {
        /// Assumed value of Neumaier's constant; symbolic when omitted.
        #[arg(long)]
        v: Option<u64>,
        #[arg(long)]
        check: bool,
    },
    /// Rerun the expected-value checks.
    Repro {
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        criterion: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        census_order: usize,
        #[arg(long, default_value_t = 10_000)]
        random_graphs: usize,
    },
}

#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Usage(msg.into()).into())
}

fn read_matrix(input: &Input) -> Result<SeidelMatrix> {
    let text = match input.input.as_deref() {
        None => read_stdin()?,
        Some(p) if p.as_os_str() == "-" => read_stdin()?,
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
    };
    Ok(SeidelMatrix::parse_text(&text)?)
}

fn read_stdin() -> Result<String> {
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
    Ok(s)
}

fn parse_spectrum(s: &str) -> Result<Spectrum> {
    s.parse().or_else(|e| usage(format!("bad spectrum {s:?}: {e}")))
}

fn run(cli: &Cli) -> Result<Report> {
    let limit = cli.limit_order;
    match &cli.command {
        Command::Validate(input) => {
            let s = read_matrix(input)?;
            Ok(Report::new(format!("valid Seidel matrix of order {}", s.n()), json!({ "valid": true, "n": s.n() })))
        }
        Command::Switch { input, subset, perm } => {
            let mut s = read_matrix(input)?.switched(subset)?;
            if let Some(p) = perm {
                s = s.permuted(p)?;
            }
            Ok(Report::new(s.to_text().trim_end(), json!({ "n": s.n(), "matrix": s.to_line() })))
        }
        Command::Det(input) => {
            let s = read_matrix(input)?;
            let check = identities::det_mod4(&s);
            let text = format!("det = {}\ndet mod 4 = {}, 1 - n mod 4 = {}", s.det(), check.lhs, check.rhs);
            Ok(Report::new(text, json!({ "n": s.n(), "det": s.det().to_string(), "mod4": check })).ok(check.holds))
        }
        Command::Perm(input) => {
            let s = read_matrix(input)?;
            let p = linalg::permanent_exact(&s.to_int_matrix(), limit.unwrap_or(classify::DEFAULT_LIMIT))?;
            Ok(Report::new(format!("perm = {p}"), json!({ "n": s.n(), "perm": p.to_string() })))
        }
        Command::Charpoly(input) => {
            let s = read_matrix(input)?;
            let f = s.charpoly();
            Ok(Report::new(f.to_string(), json!({ "n": s.n(), "charpoly": f.to_string() })))
        }
        Command::Spectrum(input) => {
            let s = read_matrix(input)?;
            match spectra::exact_spectrum(&s) {
                Some(spec) => {
                    let dim = spec.order() - spec.smallest().map_or(0, |l| spec.multiplicity(&l));
                    let text = format!("{spec}\ndimension {dim}");
                    Ok(Report::new(text, json!({ "n": s.n(), "spectrum": spec, "dimension": dim })))
                }
                None => {
                    let f = s.charpoly();
                    Ok(Report::new(format!("no closed form; charpoly {f}"), json!({ "n": s.n(), "spectrum": null, "charpoly": f.to_string() })).ok(false))
                }
            }
        }
        Command::Certify { input, claim } => {
            let s = read_matrix(input)?;
            let claim = parse_spectrum(claim)?;
            match spectra::certify_spectrum(&s, &claim) {
                Ok(spec) => Ok(Report::new(format!("certified {spec}"), json!({ "certified": true, "spectrum": spec }))),
                Err(e) => Ok(Report::new(format!("not certified: {e}"), json!({ "certified": false, "reason": e.to_string() })).ok(false)),
            }
        }
        Command::Invariant(input) => {
            let s = read_matrix(input)?;
            if let Some(l) = limit.filter(|&l| s.n() > l) {
                return usage(format!("order {} exceeds --limit-order {l}", s.n()));
            }
            let inv = classify::invariant(&s)?;
            Ok(Report::new(inv.to_string(), json!({ "n": s.n(), "invariant": inv })))
        }
        Command::Enumerate { n } => {
            let reps = classify::enumerate::switching_class_reps_with_limit(*n, limit.unwrap_or(classify::enumerate::SWITCHING_CLASS_LIMIT))?;
            let lines: Vec<String> = reps.iter().map(SeidelMatrix::to_line).collect();
            let prints: Vec<ClassFingerprint> = reps.into_iter().map(ClassFingerprint::of).collect();
            let csv = csv_rows("index,matrix,invariant", prints.iter().enumerate().map(|(i, f)| vec![i.to_string(), lines[i].clone(), f.invariant.to_string()]));
            Ok(Report::new(lines.join("\n"), &prints).csv(csv))
        }
        Command::Census { n, to } => census(*n, to.unwrap_or(*n), limit),
        Command::Construct { name, list, matrix } => {
            if *list {
                return Ok(Report::new(constructions::CATALOG.join("\n"), constructions::CATALOG));
            }
            let Some(name) = name else { return usage("construct needs a name (see --list)") };
            construct(name, *matrix)
        }
        Command::Extend { input, lambda0, count, max_dimension } => {
            let s = read_matrix(input)?;
            let out = constructions::extend_system(&s, *lambda0, *count, ExtendOptions { max_dimension: *max_dimension })?;
            let rows: Vec<(String, usize)> =
                out.iter().map(|t| (t.to_line(), min_eigenvalue_multiplicity(t, *lambda0).unwrap_or(t.n()))).collect();
            let mut text = format!("{} classes of order {}", out.len(), s.n() + count);
            for (line, d) in &rows {
                text.push_str(&format!("\n{line}  dimension {d}"));
            }
            let json: Vec<_> = rows.iter().map(|(l, d)| json!({ "matrix": l, "dimension": d })).collect();
            let csv = csv_rows("matrix,dimension", rows.iter().map(|(l, d)| vec![l.clone(), d.to_string()]));
            Ok(Report::new(text, json).csv(csv))
        }
        Command::Feasible { d, d_to, lambda0, n_from } => feasible(*d, d_to.unwrap_or(*d), *lambda0, *n_from),
        Command::Nonexist { spectrum, canned } => {
            if *canned {
                return Ok(canned_report());
            }
            let Some(text) = spectrum else { return usage("nonexist needs a spectrum or --canned") };
            let spec = parse_spectrum(text)?;
            let cert = theorem_nonex_certificate(&spec)?;
            let mut out = format!("spectrum {spec}");
            for (step, holds) in cert.steps() {
                out.push_str(&format!("\n  [{}] {step}", if holds { "ok" } else { "no" }));
            }
            let verdict = match cert.verdict {
                Verdict::Nonexistent => "nonexistent (clique structure: a labelling meets the hypotheses but not the conclusions)",
                Verdict::Inconclusive => "inconclusive",
            };
            out.push_str(&format!("\nverdict: {verdict}"));
            Ok(Report::new(out, &cert))
        }
        Command::Bounds { from, to, ungrouped, check } => {
            let rows = bounds::n_table(*from..=*to).map_err(|e| Usage(e.to_string()))?;
            let rows = if *ungrouped { rows } else { bounds::group_rows(rows) };
            table_report(rows, *check, None)
        }
        Command::N5table { v, check } => {
            let v = v.map_or(NeumaierV::Symbolic, NeumaierV::Value);
            table_report(bounds::n5_table(v)?, *check, Some(-5))
        }
        Command::Repro { criterion, census_order, random_graphs } => {
            let ids: Vec<usize> = if criterion.is_empty() { (1..=CRITERIA).collect() } else { criterion.clone() };
            if let Some(bad) = ids.iter().find(|&&i| i == 0 || i > CRITERIA) {
                return usage(format!("criteria are numbered 1 to {CRITERIA}, got {bad}"));
            }
            let mut repro = Repro::new(ReproOptions { census_order: *census_order, random_graphs: *random_graphs, seed: cli.seed });
            let outcomes: Vec<_> = ids.iter().map(|&i| repro.run(i)).collect();
            let text = outcomes
                .iter()
                .map(|o| format!("criterion {:>2} {} {}: {}", o.id, if o.pass { "PASS" } else { "FAIL" }, o.name, o.detail))
                .collect::<Vec<_>>()
                .join("\n");
            let csv = csv_rows("criterion,name,pass,seconds,detail", outcomes.iter().map(|o| {
                vec![o.id.to_string(), o.name.to_string(), o.pass.to_string(), format!("{:.1}", o.seconds), o.detail.clone()]
            }));
            let ok = outcomes.iter().all(|o| o.pass);
            Ok(Report::new(text, &outcomes).csv(csv).ok(ok))
        }
    }
}

fn census(from: usize, to: usize, limit: Option<usize>) -> Result<Report> {
    if to < from {
        return usage("--to must be at least n");
    }
    let limit = limit.unwrap_or(classify::enumerate::SWITCHING_CLASS_LIMIT);
    let mut rows = Vec::new();
    for n in from..=to {
        let reps = classify::enumerate::switching_class_reps_with_limit(n, limit)?;
        rows.push(classify::census_of(n, &reps));
    }
    let text = if rows.len() == 1 {
        rows[0].to_string()
    } else {
        rows.iter().map(|r| format!("n={}: {r}", r.n)).collect::<Vec<_>>().join("\n")
    };
    let csv = csv_rows(
        "n,total,gamma_nonzero,self_complementary,lambda_min_minus5,three_eigenvalues",
        rows.iter().map(|r| {
            [r.n, r.total, r.gamma_nonzero, r.self_complementary, r.lambda_min_minus5, r.three_eigenvalues].iter().map(usize::to_string).collect()
        }),
    );
    Ok(Report::new(text, &rows).csv(csv))
}

fn construct(name: &str, matrix: bool) -> Result<Report> {
    let b = match constructions::build(name) {
        Err(e @ seidel_core::ConstructionError::Unknown(_)) => return usage(format!("{e}; see construct --list")),
        r => r?,
    };
    let spectrum = b.spectrum.as_ref().map_or_else(|| "not in closed form".to_string(), |s| s.to_string());
    let mut text = format!("{}: {} lines in dimension {}\nspectrum {spectrum}", b.name, b.seidel.n(), b.dimension);
    if let Some(ls) = &b.lines {
        text.push_str(&format!("\nvectors of squared norm {} in R^{}, angle 1/{}", ls.scale, ls.dimension_ambient, ls.angle_inv));
    }
    if matrix {
        text.push('\n');
        text.push_str(b.seidel.to_text().trim_end());
    }
    let json = json!({
        "name": b.name,
        "n": b.seidel.n(),
        "dimension": b.dimension,
        "spectrum": b.spectrum,
        "matrix": b.seidel.to_line(),
        "lines": b.lines,
    });
    Ok(Report::new(text, json))
}

fn feasible(d_from: usize, d_to: usize, lambda0: i64, n_from: Option<usize>) -> Result<Report> {
    if d_to < d_from {
        return usage("--d-to must be at least --d");
    }
    let known = seidel_core::repro::table5_targets();
    let targets: BTreeMap<usize, usize> = (d_from..=d_to)
        .map(|d| (d, n_from.or_else(|| known.get(&d).copied()).unwrap_or(d + 1)))
        .collect();
    let rows = bounds::feasible_table(lambda0, &targets)?;
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.spectrum.n.to_string(),
                r.spectrum.d.to_string(),
                r.spectrum.spectrum().to_string(),
                r.existence.to_string(),
                r.example.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let mut table = vec![["n", "d", "spectrum", "exists", "example"].map(String::from).to_vec()];
    table.extend(cells.iter().cloned());
    let csv = csv_rows("n,d,spectrum,exists,example", cells);
    Ok(Report::new(align(&table), &rows).csv(csv))
}

fn canned_report() -> Report {
    let results = canned_corollaries();
    let mut text = Vec::new();
    for r in &results {
        text.push(format!("{}: {}", r.claim, if r.established { "established" } else { "not established" }));
        text.extend(r.steps.iter().map(|s| format!("  {s}")));
    }
    let ok = results.iter().all(|r| r.established);
    Report::new(text.join("\n"), &results).ok(ok)
}

fn table_report(rows: Vec<BoundTableRow>, check: bool, lambda0: Option<i64>) -> Result<Report> {
    let mut table = vec![["d", "N", "1/alpha", "lower from", "upper from", "note"].map(String::from).to_vec()];
    for r in &rows {
        table.push(vec![
            r.d_label.clone(),
            r.value_label(),
            r.inv_alpha.join(", "),
            r.lower.provenance.clone(),
            r.upper.provenance.clone(),
            r.note.clone().unwrap_or_default(),
        ]);
    }
    // drop columns that are empty in every row
    let keep: Vec<bool> = (0..table[0].len()).map(|c| table[1..].iter().any(|r| !r[c].is_empty())).collect();
    let table: Vec<Vec<String>> = table.into_iter().map(|r| r.into_iter().zip(&keep).filter(|p| *p.1).map(|p| p.0).collect()).collect();
    let mut text = align(&table);
    let mut json = json!({ "rows": rows });
    let mut ok = true;
    if check {
        let checks = bounds::check_rows(&rows, lambda0)?;
        for c in &checks {
            text.push_str(&format!("\nd={}: need {}, found {} [{}]", c.d, c.claimed, c.found, if c.ok { "ok" } else { "FAILED" }));
        }
        ok = checks.iter().all(|c| c.ok);
        json["checks"] = serde_json::to_value(&checks)?;
    }
    let csv = std::iter::once(BoundTableRow::csv_header().to_string()).chain(rows.iter().map(BoundTableRow::to_csv)).collect::<Vec<_>>().join("\n");
    Ok(Report::new(text, json).csv(csv).ok(ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(report) => match report.render(cli.format) {
            Some(out) => {
                let mut stdout = std::io::stdout().lock();
                if let Err(e) = writeln!(stdout, "{out}") {
                    if e.kind() != std::io::ErrorKind::BrokenPipe {
                        eprintln!("error: {e}");
                        return ExitCode::from(1);
                    }
                }
                if report.ok { ExitCode::SUCCESS } else { ExitCode::from(1) }
            }
            None => {
                eprintln!("error: no {:?} output for this command", cli.format);
                ExitCode::from(2)
            }
        },
        Err(e) if e.is::<Usage>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn bad_spectrum_is_a_usage_error() {
        assert!(parse_spectrum("[-5]^2").unwrap_err().is::<Usage>());
    }
}
