use std::io::Write;

use equalpow::oracle::{ComponentRange, DEFAULT_PAIR_BUDGET};
use equalpow::{
    build_index_with, divisors, enumerate_identities_with, index_file, multi_representations,
    verify_quadruple, BigInt, DivisorList, Exponent, Generator, GrowthModel, Quadruple,
    SolveOptions, Verdict,
};
use num_bigint::Sign;
use serde::Serialize;

use crate::args::{Cli, Command, Format};
use crate::bench;
use crate::error::{CliError, Status};
use crate::record::{
    QuadrupleRecord, RepresentationRecord, GENERATOR_CSV_HEADER, QUADRUPLE_CSV_HEADER,
    REPRESENTATION_CSV_HEADER,
};

pub const PAIR_BUDGET_ENV: &str = "EQUALPOW_PAIR_BUDGET";
pub const GEN_C1_MAX: u64 = 10_000;

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Status, CliError> {
    match &cli.command {
        Command::Solve { n, delta, divisors } => cmd_solve(cli, *n, delta, divisors, out),
        Command::Gen {
            from,
            to,
            emit_sums_only,
            digits,
            skip_nonpositive,
        } => {
            let mode = if *emit_sums_only {
                GenMode::SumsOnly
            } else if *digits {
                GenMode::Digits
            } else {
                GenMode::Records
            };
            cmd_gen(cli.format, *from, *to, mode, *skip_nonpositive, out)
        }
        Command::Verify { n, a, b, c, d } => cmd_verify(*n, [a, b, c, d], out),
        Command::Oracle {
            n,
            limit,
            ways,
            signed,
            save_index,
            load_index,
        } => {
            let source = match (load_index, limit) {
                (Some(path), _) => IndexSource::File(path.clone()),
                (None, Some(limit)) => IndexSource::Build {
                    limit: *limit,
                    range: if *signed {
                        ComponentRange::Signed
                    } else {
                        ComponentRange::from_positive_only(cli.positive_only)
                    },
                },
                (None, None) => return Err(CliError::Usage("--limit is required".into())),
            };
            cmd_oracle(cli.format, *n, source, *ways, save_index.as_deref(), out)
        }
        Command::Bench {
            n,
            limits,
            c1,
            naive,
        } => bench::cmd_bench(parse_exponent(*n)?, limits, c1, *naive, pair_budget()?, out),
    }
}

pub(crate) fn parse_exponent(n: u32) -> Result<Exponent, CliError> {
    Exponent::try_from(n).map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_int(name: &str, s: &str) -> Result<BigInt, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{name}: '{s}' is not a decimal integer")))
}

pub(crate) fn pair_budget() -> Result<u64, CliError> {
    match std::env::var(PAIR_BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{PAIR_BUDGET_ENV}='{v}' is not a pair count"))),
        Err(_) => Ok(DEFAULT_PAIR_BUDGET),
    }
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Re-verifies a quadruple exactly as `verify` would before it is printed.
fn self_check(q: &Quadruple) -> Result<(), CliError> {
    match verify_quadruple(q.n, &q.a, &q.b, &q.c, &q.d) {
        Verdict::ValidNontrivial => {
            let sum = q.n.pow(&q.a) + q.n.pow(&q.b);
            if sum == q.sum {
                Ok(())
            } else {
                Err(CliError::SelfCheck(format!("stored sum {} differs from {sum}", q.sum)))
            }
        }
        v => Err(CliError::SelfCheck(format!("{q:?} verifies as {}", v.as_str()))),
    }
}

fn cmd_solve(
    cli: &Cli,
    n: u32,
    delta: &str,
    explicit: &[String],
    out: &mut dyn Write,
) -> Result<Status, CliError> {
    let n = parse_exponent(n)?;
    let delta = parse_int("delta", delta)?;
    if delta.sign() != Sign::Plus {
        return Err(CliError::Usage(format!("delta must be positive, got {delta}")));
    }
    let list = if explicit.is_empty() {
        divisors(&delta)?
    } else {
        let rs = explicit
            .iter()
            .map(|s| parse_int("divisor", s))
            .collect::<Result<Vec<_>, _>>()?;
        DivisorList::from_parts(delta, rs)?
    };
    let opts = SolveOptions {
        positive_only: cli.positive_only,
        include_negative_branch: cli.include_negative_branch,
    };
    let found = enumerate_identities_with(n, &list, &opts)?;
    if cli.format == Format::Csv {
        writeln!(out, "{QUADRUPLE_CSV_HEADER}")?;
    }
    for q in &found {
        self_check(q)?;
        let rec = QuadrupleRecord::from(q);
        match cli.format {
            Format::Json => write_json(out, &rec)?,
            Format::Csv => writeln!(out, "{}", rec.to_csv())?,
        }
    }
    Ok(if found.is_empty() {
        Status::NoneFound
    } else {
        Status::Found
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GenMode {
    Records,
    SumsOnly,
    Digits,
}

#[derive(Serialize)]
struct DigitsRecord {
    c1: u64,
    digits: usize,
    predicted: f64,
    log10: f64,
}

fn cmd_gen(
    format: Format,
    from: u64,
    to: u64,
    mode: GenMode,
    skip_nonpositive: bool,
    out: &mut dyn Write,
) -> Result<Status, CliError> {
    if from > to || to > GEN_C1_MAX {
        return Err(CliError::Usage(format!(
            "need 0 <= from <= to <= {GEN_C1_MAX}, got {from}..={to}"
        )));
    }
    let model = GrowthModel::default();
    let mut emitted = 0usize;
    if format == Format::Csv {
        match mode {
            GenMode::Records => writeln!(out, "{GENERATOR_CSV_HEADER}")?,
            GenMode::Digits => writeln!(out, "c1,digits,predicted,log10")?,
            GenMode::SumsOnly => {}
        }
    }
    for (c1, q) in (from..=to).zip(Generator::new(from, to)) {
        let q = q?;
        if skip_nonpositive && q.components().iter().any(|x| x.sign() != Sign::Plus) {
            continue;
        }
        self_check(&q)?;
        emitted += 1;
        match mode {
            GenMode::SumsOnly => writeln!(out, "{}", q.sum)?,
            GenMode::Digits => {
                let rec = DigitsRecord {
                    c1,
                    digits: equalpow::generator::decimal_digits(&q.a),
                    predicted: model.predicted_digits(c1),
                    log10: equalpow::generator::log10_abs(&q.a),
                };
                match format {
                    Format::Json => write_json(out, &rec)?,
                    Format::Csv => writeln!(
                        out,
                        "{},{},{:.6},{:.6}",
                        rec.c1, rec.digits, rec.predicted, rec.log10
                    )?,
                }
            }
            GenMode::Records => {
                let rec = QuadrupleRecord::from(&q);
                match format {
                    Format::Json => write_json(out, &rec)?,
                    Format::Csv => writeln!(out, "{}", rec.to_generator_csv(c1))?,
                }
            }
        }
    }
    Ok(if emitted == 0 {
        Status::NoneFound
    } else {
        Status::Found
    })
}

#[derive(Serialize)]
struct VerdictRecord<'a> {
    n: u32,
    #[serde(rename = "A")]
    a: String,
    #[serde(rename = "B")]
    b: String,
    #[serde(rename = "C")]
    c: String,
    #[serde(rename = "D")]
    d: String,
    lhs: String,
    rhs: String,
    verdict: &'a str,
}

fn cmd_verify(n: u32, values: [&String; 4], out: &mut dyn Write) -> Result<Status, CliError> {
    let n = parse_exponent(n)?;
    let [a, b, c, d] = [
        parse_int("A", values[0])?,
        parse_int("B", values[1])?,
        parse_int("C", values[2])?,
        parse_int("D", values[3])?,
    ];
    let verdict = verify_quadruple(n, &a, &b, &c, &d);
    let rec = VerdictRecord {
        n: n.value(),
        lhs: (n.pow(&a) + n.pow(&b)).to_string(),
        rhs: (n.pow(&c) + n.pow(&d)).to_string(),
        a: a.to_string(),
        b: b.to_string(),
        c: c.to_string(),
        d: d.to_string(),
        verdict: verdict.as_str(),
    };
    write_json(out, &rec)?;
    Ok(match verdict {
        Verdict::ValidNontrivial => Status::Found,
        Verdict::ValidTrivial => Status::Trivial,
        Verdict::Invalid => Status::NoneFound,
    })
}

enum IndexSource {
    Build { limit: u32, range: ComponentRange },
    File(std::path::PathBuf),
}

fn cmd_oracle(
    format: Format,
    n: u32,
    source: IndexSource,
    ways: usize,
    save: Option<&std::path::Path>,
    out: &mut dyn Write,
) -> Result<Status, CliError> {
    let n = parse_exponent(n)?;
    let index = match source {
        IndexSource::Build { limit, range } => build_index_with(n, limit, range, pair_budget()?)?,
        IndexSource::File(path) => {
            let index = index_file::load(path)?;
            if index.n() != n {
                return Err(CliError::Usage(format!(
                    "index file holds n = {}, requested n = {n}",
                    index.n()
                )));
            }
            index
        }
    };
    if let Some(path) = save {
        index_file::save(&index, path)?;
    }
    let reps = multi_representations(&index, ways)?;
    if format == Format::Csv {
        writeln!(out, "{REPRESENTATION_CSV_HEADER}")?;
    }
    for rep in &reps {
        for &(x, y) in &rep.pairs {
            let sum = n.pow(&BigInt::from(x)) + n.pow(&BigInt::from(y));
            if sum != BigInt::from(rep.sum) {
                return Err(CliError::SelfCheck(format!(
                    "pair ({x}, {y}) does not sum to {}",
                    rep.sum
                )));
            }
        }
        let rec = RepresentationRecord::new(n, index.limit(), index.range(), rep);
        match format {
            Format::Json => write_json(out, &rec)?,
            Format::Csv => writeln!(out, "{}", rec.to_csv())?,
        }
    }
    Ok(if reps.is_empty() {
        Status::NoneFound
    } else {
        Status::Found
    })
}
