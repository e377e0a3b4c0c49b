//! `boolinv`: decide, enumerate and count Boolean involutions.
//!
//! Exit status: 0 when the answer is "Boolean" (or a check/suite passed),
//! 1 when it is "not Boolean" (or a cross-check failed), 2 on any error.
//! Commands that only produce output (`ideal`, `enumerate`, `motzkin`,
//! non-verify `table`) exit 0 on success.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use boolinv_core::bruhat::{dot_export, hasse_edges};
use boolinv_core::counting::{
    self, brute_tables, cross_validate, gf_table_f, gf_table_g, gf_table_h, recurrence_f,
    recurrence_g, recurrence_h, CountTable, TableKey, ValidationReport,
};
use boolinv_core::enumerate::{involutions, signed_involutions, Shard};
use boolinv_core::motzkin::{alpha, rank_from_path};
use boolinv_core::signed::{is_boolean_signed, is_boolean_signed_by, SignedMethod};
use boolinv_core::verify::selftest;
use boolinv_core::{
    ideal, is_boolean, is_boolean_by, is_boolean_lattice, psi, psi_inverse, rank_profile, Error,
    Involution, Method, MotzkinPath, SignedInvolution,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "boolinv",
    version,
    about = "Boolean involutions in the Bruhat order"
)]
struct Cli {
    /// Output format; defaults to json (dot for `ideal`).
    #[arg(long, global = true, env = "BOOLINV_FORMAT", value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Tsv,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Stat {
    F,
    G,
    H,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableMethod {
    Brute,
    Recurrence,
    Gf,
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Direction {
    ToPath,
    FromPath,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether an involution is Boolean, with witnesses.
    Check {
        /// One-line word (`4321` or `4,3,2,1`); window notation with --signed.
        #[arg(allow_hyphen_values = true)]
        element: String,
        /// Treat the element as a signed involution (`-1,-2`).
        #[arg(long)]
        signed: bool,
        /// patterns | long-crossing | sexpr | poset | all
        /// (signed: phi | signed-patterns | sexpr | all).
        #[arg(long)]
        method: Option<String>,
    },
    /// Count tables f(n,l,a), g(n,k) or h(n).
    Table {
        #[arg(value_enum)]
        stat: Stat,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "brute")]
        method: TableMethod,
        /// Worker threads for brute-force tables.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Convert between involutions and Motzkin paths.
    Motzkin {
        #[arg(value_enum)]
        direction: Direction,
        /// An involution (to-path) or a path over U, F, D (from-path).
        argument: String,
    },
    /// Hasse diagram of the principal ideal B(w).
    Ideal {
        element: String,
        /// Write to this file instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Stream involutions of S_n (or signed involutions) one per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        boolean_only: bool,
        #[arg(long)]
        signed: bool,
        /// Only elements at stream positions congruent to k modulo m.
        #[arg(long, value_name = "k/m")]
        shard: Option<Shard>,
    },
    /// Run the cross-module invariant suite.
    Selftest {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

/// What a command decided, mapped onto the exit status.
enum Answer {
    Yes,
    No,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Answer::Yes) => ExitCode::SUCCESS,
        Ok(Answer::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("boolinv: {e}");
            ExitCode::from(2)
        }
    }
}

fn pick(
    format: Option<Format>,
    default: Format,
    allowed: &[Format],
    command: &str,
) -> Result<Format, Error> {
    let f = format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Error::Domain(
            format!("format {f:?} is not available for {command}").to_lowercase(),
        ))
    }
}

fn run(cli: Cli) -> Result<Answer, Error> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let answer = match cli.command {
        Command::Check {
            element,
            signed,
            method,
        } => {
            let format = pick(
                cli.format,
                Format::Json,
                &[Format::Json, Format::Text],
                "check",
            )?;
            if signed {
                check_signed(&mut out, &element, method.as_deref(), format)?
            } else {
                check(&mut out, &element, method.as_deref(), format)?
            }
        }
        Command::Table {
            stat,
            max_n,
            method,
            jobs,
        } => {
            let format = pick(
                cli.format,
                Format::Json,
                &[Format::Json, Format::Tsv, Format::Text],
                "table",
            )?;
            table(&mut out, stat, max_n, method, jobs, format)?
        }
        Command::Motzkin {
            direction,
            argument,
        } => {
            let format = pick(
                cli.format,
                Format::Json,
                &[Format::Json, Format::Text],
                "motzkin",
            )?;
            motzkin(&mut out, direction, &argument, format)?
        }
        Command::Ideal { element, output } => {
            let format = pick(
                cli.format,
                Format::Dot,
                &[Format::Dot, Format::Json],
                "ideal",
            )?;
            match output {
                Some(path) => {
                    let mut file = BufWriter::new(File::create(&path)?);
                    let a = ideal_cmd(&mut file, &element, format)?;
                    file.flush()?;
                    a
                }
                None => ideal_cmd(&mut out, &element, format)?,
            }
        }
        Command::Enumerate {
            n,
            boolean_only,
            signed,
            shard,
        } => {
            let format = pick(
                cli.format,
                Format::Json,
                &[Format::Json, Format::Text],
                "enumerate",
            )?;
            enumerate(
                &mut out,
                n,
                boolean_only,
                signed,
                shard.unwrap_or(Shard::WHOLE),
                format,
            )?
        }
        Command::Selftest { max_n, jobs } => {
            let format = pick(
                cli.format,
                Format::Json,
                &[Format::Json, Format::Text],
                "selftest",
            )?;
            let report = selftest(max_n, jobs)?;
            write_report(&mut out, &report, format)?
        }
    };
    out.flush()?;
    Ok(answer)
}

fn yes_no(b: bool) -> Answer {
    if b {
        Answer::Yes
    } else {
        Answer::No
    }
}

fn json_line<W: Write>(out: &mut W, value: &impl serde::Serialize) -> Result<(), Error> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| Error::Io(io::Error::other(e)))?;
    writeln!(out)?;
    Ok(())
}

fn check<W: Write>(
    out: &mut W,
    element: &str,
    method: Option<&str>,
    format: Format,
) -> Result<Answer, Error> {
    let method: Method = method.map(str::parse).transpose()?.unwrap_or_default();
    let w: Involution = element.parse()?;
    let v = is_boolean(&w, method)?;
    if format == Format::Json {
        json_line(out, &v)?;
        return Ok(yes_no(v.is_boolean));
    }
    let r = &v.rank;
    writeln!(
        out,
        "{w}: {}",
        if v.is_boolean {
            "Boolean"
        } else {
            "not Boolean"
        }
    )?;
    writeln!(
        out,
        "rank {} (inversions {}, 2-cycles {})",
        r.rank, r.coxeter_length, r.absolute_length
    )?;
    if let Some(e) = &v.expression {
        writeln!(out, "expression {e}")?;
    }
    if let Some((i, j)) = v.long_crossing {
        writeln!(out, "long-crossing pair ({i},{j})")?;
    }
    if let Some(p) = &v.pattern {
        let positions: Vec<String> = p
            .occurrence
            .positions
            .iter()
            .map(|x| x.to_string())
            .collect();
        writeln!(
            out,
            "pattern {} at positions {}{}",
            p.pattern,
            positions.join(","),
            if p.induced { " (induced)" } else { "" }
        )?;
    }
    Ok(yes_no(v.is_boolean))
}

fn check_signed<W: Write>(
    out: &mut W,
    element: &str,
    method: Option<&str>,
    format: Format,
) -> Result<Answer, Error> {
    let method: SignedMethod = method
        .map(str::parse)
        .transpose()?
        .unwrap_or(SignedMethod::Phi);
    let w: SignedInvolution = element.parse()?;
    let v = is_boolean_signed(&w, method)?;
    if format == Format::Json {
        json_line(out, &v)?;
        return Ok(yes_no(v.is_boolean));
    }
    writeln!(
        out,
        "{w}: {}",
        if v.is_boolean {
            "Boolean"
        } else {
            "not Boolean"
        }
    )?;
    writeln!(out, "phi image {}", v.phi_image)?;
    if let Some(e) = &v.expression {
        let letters: Vec<String> = e.iter().map(|x| x.to_string()).collect();
        writeln!(out, "expression {}", letters.join(","))?;
    }
    if let Some(p) = &v.signed_pattern {
        let positions: Vec<String> = p
            .occurrence
            .positions
            .iter()
            .map(|x| x.to_string())
            .collect();
        writeln!(
            out,
            "signed pattern {} at positions {}",
            p.pattern,
            positions.join(",")
        )?;
    }
    Ok(yes_no(v.is_boolean))
}

fn emit_table<W: Write, K: TableKey>(
    out: &mut W,
    t: &CountTable<K>,
    stat: &str,
    format: Format,
) -> Result<(), Error> {
    if format == Format::Json {
        json_line(out, &t.to_json(stat))
    } else {
        write!(out, "{}", t.to_tsv())?;
        Ok(())
    }
}

fn table<W: Write>(
    out: &mut W,
    stat: Stat,
    max_n: usize,
    method: TableMethod,
    jobs: usize,
    format: Format,
) -> Result<Answer, Error> {
    if max_n > counting::TABLE_MAX_N {
        return Err(Error::Resource(format!(
            "tables limited to n <= {}, got {max_n}",
            counting::TABLE_MAX_N
        )));
    }
    let name = match stat {
        Stat::F => "f",
        Stat::G => "g",
        Stat::H => "h",
    };
    match method {
        TableMethod::Verify => {
            let report = cross_validate(max_n, jobs)?;
            write_report(out, &report, format)
        }
        TableMethod::Brute => {
            let t = brute_tables(max_n, jobs)?;
            match stat {
                Stat::F => emit_table(out, &t.f, name, format)?,
                Stat::G => emit_table(out, &t.g, name, format)?,
                Stat::H => emit_table(out, &t.h, name, format)?,
            }
            Ok(Answer::Yes)
        }
        TableMethod::Recurrence => {
            match stat {
                Stat::F => emit_table(out, &recurrence_f(max_n), name, format)?,
                Stat::G => emit_table(out, &recurrence_g(max_n)?, name, format)?,
                Stat::H => emit_table(out, &recurrence_h(max_n)?, name, format)?,
            }
            Ok(Answer::Yes)
        }
        TableMethod::Gf => {
            match stat {
                Stat::F => emit_table(out, &gf_table_f(max_n), name, format)?,
                Stat::G => emit_table(out, &gf_table_g(max_n), name, format)?,
                Stat::H => emit_table(out, &gf_table_h(max_n), name, format)?,
            }
            Ok(Answer::Yes)
        }
    }
}

fn write_report<W: Write>(
    out: &mut W,
    report: &ValidationReport,
    format: Format,
) -> Result<Answer, Error> {
    if format == Format::Json {
        json_line(out, &json!({ "passed": report.passed(), "report": report }))?;
    } else {
        for c in &report.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            match &c.detail {
                Some(d) => writeln!(out, "{mark}\t{}\t{d}", c.name)?,
                None => writeln!(out, "{mark}\t{}", c.name)?,
            }
        }
    }
    Ok(yes_no(report.passed()))
}

fn motzkin<W: Write>(
    out: &mut W,
    direction: Direction,
    argument: &str,
    format: Format,
) -> Result<Answer, Error> {
    let (w, p) = match direction {
        Direction::ToPath => {
            let w: Involution = argument.parse()?;
            let p = psi(&w);
            (w, p)
        }
        Direction::FromPath => {
            let p: MotzkinPath = argument.parse()?;
            (psi_inverse(&p)?, p)
        }
    };
    let boolean = is_boolean_by(&w, Method::LongCrossing)?;
    if format == Format::Text {
        match direction {
            Direction::ToPath => writeln!(out, "{p}")?,
            Direction::FromPath => writeln!(out, "{w}")?,
        }
    } else {
        let restriction = p.restriction();
        let rank = if boolean {
            Some(rank_from_path(&p)?)
        } else {
            None
        };
        json_line(
            out,
            &json!({
                "involution": w.to_string(),
                "path": p.to_string(),
                "restricted": restriction.is_restricted(),
                "max_height": restriction.max_height,
                "alpha": alpha(&p),
                "boolean": boolean,
                "rank": rank,
            }),
        )?;
    }
    Ok(Answer::Yes)
}

fn ideal_cmd<W: Write>(out: &mut W, element: &str, format: Format) -> Result<Answer, Error> {
    let w: Involution = element.parse()?;
    let p = ideal(&w)?;
    let boolean = is_boolean_lattice(&p);
    let rho = rank_profile(&w).rank;
    if format == Format::Json {
        let nodes: Vec<_> = p
            .elements()
            .iter()
            .enumerate()
            .map(|(k, e)| json!({ "id": k, "element": e.to_string(), "rank": p.rank_of(k) }))
            .collect();
        let edges: Vec<_> = hasse_edges(&p)
            .into_iter()
            .map(|(u, v)| json!([u, v]))
            .collect();
        json_line(
            out,
            &json!({ "root": w.to_string(), "rank": rho, "boolean": boolean, "nodes": nodes, "edges": edges }),
        )?;
    } else {
        writeln!(
            out,
            "// B({w}): {} elements, rank {rho}, Boolean lattice: {}",
            p.len(),
            if boolean { "yes" } else { "no" }
        )?;
        dot_export(&p, out)?;
    }
    Ok(Answer::Yes)
}

fn enumerate<W: Write>(
    out: &mut W,
    n: usize,
    boolean_only: bool,
    signed: bool,
    shard: Shard,
    format: Format,
) -> Result<Answer, Error> {
    if signed {
        for w in shard.apply(signed_involutions(n)?) {
            let boolean = is_boolean_signed_by(&w, SignedMethod::Phi)?;
            if boolean_only && !boolean {
                continue;
            }
            match format {
                Format::Text => writeln!(out, "{w}")?,
                _ => writeln!(
                    out,
                    "{}",
                    json!({ "element": w.to_string(), "boolean": boolean })
                )?,
            }
        }
    } else {
        for w in shard.apply(involutions(n)?) {
            let boolean = is_boolean_by(&w, Method::LongCrossing)?;
            if boolean_only && !boolean {
                continue;
            }
            match format {
                Format::Text => writeln!(out, "{w}")?,
                _ => writeln!(
                    out,
                    "{}",
                    json!({ "element": w.to_string(), "boolean": boolean, "rank": rank_profile(&w).rank })
                )?,
            }
        }
    }
    Ok(Answer::Yes)
}
