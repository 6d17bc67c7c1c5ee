//! Exit criteria. Each criterion prints one PASS/FAIL line; the test fails
//! if any criterion fails. Run with `--nocapture` to see the report.

use std::collections::BTreeSet;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use equalpow::generator::{decimal_digits, least_squares_slope, log10_abs};
use equalpow::index_file::to_bytes;
use equalpow::oracle::DEFAULT_PAIR_BUDGET;
use equalpow::solver::admissible_witnesses;
use equalpow::{
    admissible_divisors, build_index_with, conjugate_pair_value, divisors, gen_b, gen_c,
    gen_quadruple, recurrence_step, BigInt, ComponentRange, Exponent, GeneratorConstants, Quadruple,
    Series, SolveOptions, SumIndex,
};
use equalpow_cli::bench::run_bench;
use equalpow_cli::record::{QuadrupleRecord, RepresentationRecord};
use num_traits::ToPrimitive;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn equalpow(args: &[&str]) -> (Output, Duration) {
    let start = Instant::now();
    let o = Command::new(env!("CARGO_BIN_EXE_equalpow"))
        .args(args)
        .output()
        .expect("spawn equalpow");
    (o, start.elapsed())
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn quadruples(o: &Output) -> Result<Vec<Quadruple>, String> {
    stdout(o)
        .lines()
        .map(|l| {
            let rec: QuadrupleRecord = serde_json::from_str(l).map_err(|e| e.to_string())?;
            Quadruple::try_from(&rec).map_err(|e| e.to_string())
        })
        .collect()
}

fn tuple(q: &Quadruple) -> [String; 5] {
    [&q.a, &q.b, &q.c, &q.d, &q.sum].map(|x| x.to_string())
}

fn strs(v: [&str; 5]) -> [String; 5] {
    v.map(str::to_owned)
}

/// Table rows exactly as printed, thousands separators included.
const TABLE: [[&str; 6]; 7] = [
    ["1", "96", "50", "93", "59", "1,009,736"],
    ["2", "1317", "755", "1314", "764", "2,714,690,888"],
    ["3", "18324", "10574", "18321", "10583", "7,334,904,115,448"],
    ["4", "255201", "147335", "255198", "147344", "19,818,905,563,705,976"],
    ["5", "3 554 472", "2 052 170", "3 554 469", "2 052 179", "53,550,675,461,437,475,048"],
    ["6", "49 507 389", "28 583 099", "49 507 386", "28 583 108", "144,693,905,277,386,048,024 168"],
    ["7", "689 548 956", "398 111 270", "689 548 953", "398 111 279", "390,962,878,508,814,502,873,889 816"],
];

fn plain(s: &str) -> String {
    s.chars().filter(char::is_ascii_digit).collect()
}

fn ac1_table() -> Outcome {
    let (o, elapsed) = equalpow(&["gen", "1", "7", "--format", "csv"]);
    ensure!(o.status.code() == Some(0), "exit {:?}", o.status.code());
    let mut expected = String::from("c1,A,B,C,D,sum\n");
    for row in TABLE {
        expected.push_str(&row.map(plain).join(","));
        expected.push('\n');
    }
    ensure!(stdout(&o) == expected, "got\n{}", stdout(&o));
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("7 rows byte-exact in {elapsed:?}"))
}

fn ac2_headline() -> Outcome {
    let (o, _) = equalpow(&["gen", "8", "8"]);
    ensure!(o.status.code() == Some(0), "exit {:?}", o.status.code());
    let q = quadruples(&o)?;
    ensure!(q.len() == 1, "{} records", q.len());
    let got = [&q[0].a, &q[0].b, &q[0].c, &q[0].d].map(|x| x.to_string());
    ensure!(
        got == ["9604177977", "5544974735", "9604177974", "5544974744"],
        "got {got:?}"
    );
    Ok(format!("A={} B={} C={} D={}", got[0], got[1], got[2], got[3]))
}

fn ac3_hardy_ramanujan() -> Outcome {
    let (o, _) = equalpow(&["solve", "--n", "3", "--delta", "999"]);
    let q: Vec<_> = quadruples(&o)?.iter().map(tuple).collect();
    ensure!(q == vec![strs(["12", "1", "9", "10", "1729"])], "plus branch: {q:?}");
    let (o, _) = equalpow(&["solve", "--n", "3", "--delta", "999", "--include-negative-branch"]);
    let q: Vec<_> = quadruples(&o)?.iter().map(tuple).collect();
    ensure!(
        q == vec![
            strs(["12", "1", "9", "10", "1729"]),
            strs(["-9", "-10", "-12", "-1", "-1729"])
        ],
        "both branches: {q:?}"
    );
    Ok("1729 and sign-corrected -1729".into())
}

fn ac4_squares() -> Outcome {
    let (o, _) = equalpow(&["solve", "--n", "2", "--delta", "24"]);
    let q: Vec<_> = quadruples(&o)?.iter().map(tuple).collect();
    ensure!(q == vec![strs(["7", "1", "5", "5", "50"])], "delta 24: {q:?}");
    let (o, _) = equalpow(&["solve", "--n", "2", "--delta", "1000"]);
    let q: Vec<_> = quadruples(&o)?.iter().map(tuple).collect();
    ensure!(q.contains(&strs(["55", "15", "45", "35", "3250"])), "missing 3250");
    ensure!(q.contains(&strs(["251", "123", "249", "127", "78130"])), "missing 78130");
    Ok(format!("delta 24 -> 50; delta 1000 -> {} identities incl. 3250, 78130", q.len()))
}

fn ac5_admissibility() -> Outcome {
    let got: Vec<_> = admissible_divisors(Exponent::Square, &BigInt::from(1000), true)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|(r, _)| r.to_i64().unwrap())
        .collect();
    ensure!(got == vec![2, 4, 10, 20], "got {got:?}");
    ensure!(!got.contains(&8), "r = 8 admitted");
    Ok("{2, 4, 10, 20}; r = 8 rejected".into())
}

fn ac6_oracle() -> Outcome {
    let (o, elapsed) = equalpow(&["oracle", "--n", "3", "--limit", "13", "--ways", "2"]);
    ensure!(o.status.code() == Some(0), "exit {:?}", o.status.code());
    let recs: Vec<RepresentationRecord> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    ensure!(recs.len() == 1 && recs[0].sum == "1729", "got {recs:?}");
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");

    let mut emitted = Vec::new();
    for args in [
        &["gen", "1", "7"][..],
        &["gen", "8", "8"],
        &["solve", "--n", "3", "--delta", "999", "--include-negative-branch"],
        &["solve", "--n", "2", "--delta", "24"],
        &["solve", "--n", "2", "--delta", "1000"],
    ] {
        emitted.extend(quadruples(&equalpow(args).0)?);
    }
    let index = |n, limit, range| -> Result<SumIndex, String> {
        build_index_with(n, limit, range, DEFAULT_PAIR_BUDGET).map_err(|e| e.to_string())
    };
    let indices = [
        index(Exponent::Cube, 100, ComponentRange::Positive)?,
        index(Exponent::Cube, 12, ComponentRange::Signed)?,
        index(Exponent::Square, 251, ComponentRange::Positive)?,
    ];
    let mut checked = 0;
    for q in &emitted {
        for idx in indices.iter().filter(|i| i.covers(q)) {
            ensure!(idx.contains_quadruple(q), "{q:?} missing from {:?} index", idx.range());
            checked += 1;
        }
    }
    ensure!(checked >= 10, "only {checked} cross-checks");
    Ok(format!("unique entry 1729 in {elapsed:?}; {checked} emitted quadruples found in indices"))
}

fn ac7_recurrence() -> Outcome {
    let start = Instant::now();
    for c1 in 2..=50 {
        for (series, f) in [(Series::C, gen_c as fn(u64) -> _), (Series::B, gen_b)] {
            let closed = f(c1).map_err(|e| e.to_string())?;
            let prev = f(c1 - 2).map_err(|e| e.to_string())?;
            let curr = f(c1 - 1).map_err(|e| e.to_string())?;
            ensure!(closed == recurrence_step(&prev, &curr, series), "{series:?} at c1 = {c1}");
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("c1 = 2..=50 in {elapsed:?}"))
}

fn ac8_identity() -> Outcome {
    let start = Instant::now();
    let mut widest = 0;
    for c1 in 0..=64 {
        let q = gen_quadruple(c1).map_err(|e| e.to_string())?;
        let cube = |x: &BigInt| x * x * x;
        ensure!(cube(&q.a) + cube(&q.b) == cube(&q.c) + cube(&q.d), "fails at {c1}");
        widest = widest.max(decimal_digits(&q.a));
    }
    let elapsed = start.elapsed();
    ensure!(widest > 70, "largest term has {widest} digits");
    ensure!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    Ok(format!("c1 = 0..=64, terms up to {widest} digits, {elapsed:?}"))
}

fn ac9_digits() -> Outcome {
    let points: Vec<(f64, f64)> = (10..=40)
        .map(|c1| Ok((c1 as f64, log10_abs(&gen_quadruple(c1).map_err(|e| e.to_string())?.a))))
        .collect::<Result<_, String>>()?;
    let slope = least_squares_slope(&points);
    let expected = GeneratorConstants::default().base.to_f64().log10();
    ensure!((slope - expected).abs() < 1e-3, "slope {slope} vs {expected}");

    let quads: Vec<Quadruple> = (1..=7)
        .map(|c| gen_quadruple(c).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    // digit counts of the smallest term of each identity
    let smallest: Vec<usize> = quads
        .iter()
        .map(|q| q.components().iter().map(|x| decimal_digits(x)).min().unwrap())
        .collect();
    let of_a: Vec<usize> = quads.iter().map(|q| decimal_digits(&q.a)).collect();
    ensure!(smallest == vec![2, 3, 5, 6, 7, 8, 9], "smallest-term digits {smallest:?}");
    let at_100 = decimal_digits(&gen_quadruple(100).map_err(|e| e.to_string())?.a);
    ensure!(at_100 == 116, "A(100) has {at_100} digits");
    Ok(format!(
        "slope {slope:.6} vs log10(7+4√3) = {expected:.6}; smallest-term digits {smallest:?}; \
         digits of A {of_a:?}; A(100) has {at_100} digits"
    ))
}

fn ac10_sequence() -> Outcome {
    let (o, _) = equalpow(&["gen", "1", "7", "--emit-sums-only"]);
    let got: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    let expected: Vec<String> = TABLE.iter().map(|row| plain(row[5])).collect();
    ensure!(got == expected, "got {got:?}");
    Ok(format!("{} terms", got.len()))
}

fn ac11_properties() -> Outcome {
    // shift identity on every witness, and exhaustiveness against a brute scan
    for n in [Exponent::Square, Exponent::Cube] {
        for delta in 1..=2000i64 {
            let list = divisors(&BigInt::from(delta)).map_err(|e| e.to_string())?;
            let ws = admissible_witnesses(n, &list, &SolveOptions::new(false)).map_err(|e| e.to_string())?;
            let mut found = BTreeSet::new();
            for w in &ws {
                ensure!(w.satisfies_shift_identity(), "shift identity fails for {w:?}");
                found.insert((w.r.to_i64().unwrap(), w.small.to_i64().unwrap()));
            }
            let mut brute = BTreeSet::new();
            for r in (1..=delta).filter(|r| delta % r == 0) {
                let reach = delta / r + r + 2;
                for s in -reach..=reach {
                    if (s + r).pow(n.value()) - s.pow(n.value()) == delta {
                        brute.insert((r, s));
                    }
                }
            }
            ensure!(found == brute, "n = {n}, delta = {delta}: {found:?} vs {brute:?}");
        }
    }

    let k = GeneratorConstants::default();
    for c1 in 0..=64 {
        for coeff in [&k.coeff_c, &k.coeff_b] {
            conjugate_pair_value(coeff, &k.base, c1).map_err(|e| e.to_string())?;
        }
    }

    for (n, limit, range) in [
        (Exponent::Cube, 150, ComponentRange::Positive),
        (Exponent::Square, 150, ComponentRange::NonNegative),
        (Exponent::Cube, 40, ComponentRange::Signed),
    ] {
        let a = build_index_with(n, limit, range, DEFAULT_PAIR_BUDGET).map_err(|e| e.to_string())?;
        let b = build_index_with(n, limit, range, DEFAULT_PAIR_BUDGET).map_err(|e| e.to_string())?;
        ensure!(to_bytes(&a) == to_bytes(&b), "rebuild differs for {n} {limit} {range:?}");
    }

    let rows = run_bench(Exponent::Cube, &[50, 100], &[5], true, DEFAULT_PAIR_BUDGET)
        .map_err(|e| e.to_string())?;
    let row = |method: &str, p: u64| rows.iter().find(|r| r.method == method && r.parameter == p).unwrap();
    let (generator, mitm, naive) = (row("generator", 5), row("oracle-mitm", 100), row("naive-pairs", 100));
    ensure!(generator.wall_time_ms < 100.0, "generator took {} ms", generator.wall_time_ms);
    ensure!(mitm.pairs == Some(5050), "pairs {:?}", mitm.pairs);
    ensure!(
        row("oracle-mitm", 50).solutions_found == row("naive-pairs", 50).solutions_found
            && mitm.solutions_found == naive.solutions_found,
        "naive and indexed counts differ"
    );
    ensure!(
        generator.wall_time_ms < mitm.wall_time_ms && mitm.wall_time_ms < naive.wall_time_ms,
        "timing order {} / {} / {} ms",
        generator.wall_time_ms,
        mitm.wall_time_ms,
        naive.wall_time_ms
    );
    Ok(format!(
        "witness identities and exhaustiveness to 2000; conjugate sums to 64; byte-identical rebuilds; \
         generator {:.3} ms < mitm {:.3} ms < naive {:.3} ms at N = 100",
        generator.wall_time_ms, mitm.wall_time_ms, naive.wall_time_ms
    ))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("AC1 table reproduction", ac1_table),
        ("AC2 headline c1 = 8", ac2_headline),
        ("AC3 Hardy-Ramanujan from divisors", ac3_hardy_ramanujan),
        ("AC4 square examples", ac4_squares),
        ("AC5 admissibility correction", ac5_admissibility),
        ("AC6 oracle ground truth", ac6_oracle),
        ("AC7 closed form = recurrence", ac7_recurrence),
        ("AC8 identity at scale", ac8_identity),
        ("AC9 digit growth", ac9_digits),
        ("AC10 sum sequence", ac10_sequence),
        ("AC11 property suites", ac11_properties),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                println!("FAIL {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
