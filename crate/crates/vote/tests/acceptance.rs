//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

// Golden cells include 6.28, which is not meant as tau.
#![allow(clippy::approx_constant, clippy::neg_cmp_op_on_partial_ord)]

mod oracle;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use oracle::{argmin, committees, coverage, histogram, int_power_sum, random_rows, Rows};
use pnorm_committee::metrics::hamming_distance;
use pnorm_committee::solvers::{
    elect_exact, elect_greedy_cover, elect_max_cover, elect_minisum, elect_p_zero,
};
use pnorm_committee::{
    BallotProfile, CandidateRoster, Committee, ElectionResult, Mode, Objective, SolverConfig,
};
use pnorm_vote::formats::{parse_ballots, read_ballots, write_profile, BallotFormat};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::Value;

const CELL_TOLERANCE: f64 = 0.01;
const PROPERTY_INSTANCES: usize = 500;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn load(name: &str, budget: Option<usize>) -> BallotProfile {
    read_ballots(&data(name), None, None, budget).expect("fixture parses")
}

/// Runs the CLI in-process and returns its JSON output.
fn cli_json(args: &[&str]) -> Result<Value, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["pnorm-vote"];
    argv.extend_from_slice(args);
    let code = pnorm_vote::cli::run(argv, &mut out, &mut err);
    ensure!(code == 0, "exit {code}: {}", String::from_utf8_lossy(&err));
    serde_json::from_slice(&out).map_err(|e| e.to_string())
}

fn names(profile: &BallotProfile, c: &Committee) -> Vec<String> {
    profile
        .roster()
        .committee_names(c)
        .into_iter()
        .map(String::from)
        .collect()
}

fn winner_names(profile: &BallotProfile, r: &ElectionResult) -> Vec<Vec<String>> {
    r.winner_committees().map(|c| names(profile, c)).collect()
}

fn winner_members(r: &ElectionResult) -> Vec<Vec<usize>> {
    r.winner_committees()
        .map(|c| c.members().to_vec())
        .collect()
}

fn label(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// Checks a `sweep --format json` output against a golden table.
fn check_sweep(
    json: &Value,
    expected_rows: &[(&[&str], &[f64])],
    expected_minimizers: &[&[&str]],
) -> Outcome {
    let rows = json["rows"].as_array().ok_or("no rows")?;
    ensure!(rows.len() == expected_rows.len(), "{} rows", rows.len());
    let mut checked = 0;
    for (row, (committee, cells)) in rows.iter().zip(expected_rows) {
        let got: Vec<String> = serde_json::from_value(row["committee"].clone()).unwrap();
        ensure!(
            got == label(committee),
            "row order: {got:?} vs {committee:?}"
        );
        let values = row["cells"].as_array().ok_or("no cells")?;
        for (j, (v, want)) in values.iter().zip(cells.iter()).enumerate() {
            let v = v.as_f64().ok_or("non-numeric cell")?;
            ensure!(
                (v - want).abs() <= CELL_TOLERANCE,
                "{committee:?} column {j}: {v} vs {want}"
            );
            checked += 1;
        }
    }
    ensure!(
        checked == expected_rows.len() * expected_minimizers.len(),
        "{checked} cells checked"
    );
    let minimizers = json["minimizers"].as_array().ok_or("no minimizers")?;
    for (j, (col, want)) in minimizers.iter().zip(expected_minimizers).enumerate() {
        let got: Vec<Vec<String>> = serde_json::from_value(col.clone()).unwrap();
        ensure!(
            got == vec![label(want)],
            "column {j} minimizers {got:?}, expected {want:?}"
        );
    }
    Ok(())
}

fn criterion_1_table5() -> Outcome {
    let started = Instant::now();
    let table4 = data("table4.txt");
    let json = cli_json(&[
        "sweep",
        "--ballots",
        table4.to_str().unwrap(),
        "--k",
        "2",
        "--ps",
        "1,2,3,4,10,100",
        "--format",
        "json",
    ])?;
    let elapsed = started.elapsed();
    check_sweep(
        &json,
        &[
            (&["A1", "A2"], &[1700.0, 78.74, 28.68, 17.42, 7.19, 4.24]),
            (&["A1", "B1"], &[1840.0, 61.97, 20.26, 11.77, 5.42, 4.12]),
            (&["A1", "B2"], &[2020.0, 64.81, 20.83, 11.99, 5.42, 4.12]),
            (&["A2", "B1"], &[1980.0, 63.56, 20.33, 11.60, 5.08, 4.09]),
            (&["A2", "B2"], &[2160.0, 71.55, 23.78, 14.11, 6.34, 4.19]),
            (&["B1", "B2"], &[2300.0, 92.74, 32.14, 19.00, 7.45, 4.26]),
        ],
        &[
            &["A1", "A2"],
            &["A1", "B1"],
            &["A1", "B1"],
            &["A2", "B1"],
            &["A2", "B1"],
            &["A2", "B1"],
        ],
    )?;
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(())
}

fn criterion_2_table8() -> Outcome {
    let table7 = data("table7.txt");
    let json = cli_json(&[
        "sweep",
        "--ballots",
        table7.to_str().unwrap(),
        "--k",
        "2",
        "--ps",
        "1,0.5,0.1,0.001",
        "--power-sum",
        "--format",
        "json",
    ])?;
    check_sweep(
        &json,
        &[
            (&["A1", "A2"], &[1800.0, 1107.11, 765.63, 700.62]),
            (&["A1", "B1"], &[1620.0, 1095.81, 808.45, 750.56]),
            (&["A1", "B2"], &[1780.0, 1225.51, 914.08, 850.62]),
            (&["A2", "B1"], &[2220.0, 1445.51, 1040.44, 960.77]),
            (&["A2", "B2"], &[2380.0, 1475.81, 1026.70, 940.83]),
            (&["B1", "B2"], &[2200.0, 1307.11, 880.50, 800.76]),
        ],
        &[&["A1", "B1"], &["A1", "B1"], &["A1", "A2"], &["A1", "A2"]],
    )
}

fn criterion_3_table9() -> Outcome {
    let table9 = data("table9.txt");
    let json = cli_json(&[
        "sweep",
        "--ballots",
        table9.to_str().unwrap(),
        "--k",
        "2",
        "--ps",
        "1,2,3,4,10,100",
        "--format",
        "json",
    ])?;
    ensure!(json["mode"] == "ternary", "mode {}", json["mode"]);
    check_sweep(
        &json,
        &[
            (&["A1", "A2"], &[3700.0, 130.38, 44.68, 26.59, 10.79, 6.36]),
            (&["A1", "B1"], &[3840.0, 123.29, 39.46, 22.42, 8.57, 6.18]),
            (&["A1", "B2"], &[3020.0, 101.39, 33.76, 19.82, 8.38, 6.18]),
            (&["A2", "B1"], &[4980.0, 161.12, 51.97, 29.73, 11.21, 6.39]),
            (&["A2", "B2"], &[4160.0, 133.27, 42.74, 24.41, 9.65, 6.28]),
            (&["B1", "B2"], &[4300.0, 147.65, 49.38, 28.84, 11.18, 6.38]),
        ],
        &[&["A1", "B2"][..]; 6],
    )
}

fn criterion_4_table3() -> Outcome {
    let profile = load("table3.csv", None);
    let cfg = SolverConfig::default();
    ensure!(
        profile.voters() == 4 && profile.candidates() == 5,
        "profile shape"
    );
    let minisum = elect_minisum(&profile, 2, &cfg).map_err(|e| e.to_string())?;
    ensure!(
        winner_names(&profile, &minisum) == vec![label(&["A", "B"])],
        "minisum elected {:?}",
        winner_names(&profile, &minisum)
    );
    ensure!(
        minisum.winners[0].value == 8.0,
        "distance sum {}",
        minisum.winners[0].value
    );
    let ab = &minisum.winners[0].committee;
    let distances: Vec<u32> = profile
        .ballots()
        .iter()
        .map(|b| hamming_distance(b, ab).unwrap())
        .collect();
    ensure!(distances == [1, 0, 2, 5], "distances {distances:?}");

    let minimax = elect_exact(&profile, 2, Objective::MiniMax, &cfg).map_err(|e| e.to_string())?;
    let rows = Rows::of(&profile);
    let cands = committees(5, 2);
    let oracle = argmin(&cands, |c| {
        oracle::distances(&rows, c).into_iter().max().unwrap()
    });
    ensure!(
        winner_members(&minimax) == oracle,
        "minimax set differs from oracle"
    );
    ensure!(
        minimax.winners[0].value == 3.0,
        "min max distance {}",
        minimax.winners[0].value
    );
    ensure!(
        winner_names(&profile, &minimax).contains(&label(&["A", "C"])),
        "{{A, C}} missing from minimax winners"
    );
    Ok(())
}

fn criterion_5_max_cover() -> Outcome {
    let profile = load("table4.txt", Some(2));
    let cfg = SolverConfig::default();
    let r = elect_max_cover(&profile, 2, &cfg).map_err(|e| e.to_string())?;
    ensure!(
        winner_names(&profile, &r) == vec![label(&["A2", "B1"])],
        "max cover elected {:?}",
        winner_names(&profile, &r)
    );
    ensure!(
        r.winners[0].coverage == 990,
        "coverage {}",
        r.winners[0].coverage
    );
    let a1b1 = Committee::new(vec![0, 2], 4).unwrap();
    ensure!(profile.coverage(&a1b1) == 980, "{{A1,B1}} coverage");
    let greedy = elect_greedy_cover(&profile, 2).map_err(|e| e.to_string())?;
    ensure!(
        winner_names(&profile, &greedy) == vec![label(&["A1", "B1"])],
        "greedy elected {:?}",
        winner_names(&profile, &greedy)
    );
    Ok(())
}

fn criterion_6_minimax_ties() -> Outcome {
    let cfg = SolverConfig::default();
    let table4 = load("table4.txt", Some(2));
    let r = elect_exact(&table4, 2, Objective::MiniMax, &cfg).map_err(|e| e.to_string())?;
    ensure!(
        r.winners.len() == 6 && r.tie(),
        "{} winners",
        r.winners.len()
    );
    ensure!(
        r.winners.iter().all(|w| w.value == 4.0),
        "not all at distance 4"
    );

    let swing = load("swing.txt", Some(2));
    let r = elect_exact(&swing, 2, Objective::MiniMax, &cfg).map_err(|e| e.to_string())?;
    let rows = Rows::of(&swing);
    let oracle = argmin(&committees(4, 2), |c| {
        oracle::distances(&rows, c).into_iter().max().unwrap()
    });
    ensure!(
        winner_members(&r) == oracle,
        "differs from oracle {oracle:?}"
    );
    let expected = vec![
        label(&["A1", "B1"]),
        label(&["A1", "B2"]),
        label(&["A2", "B2"]),
    ];
    ensure!(
        winner_names(&swing, &r) == expected,
        "{:?}",
        winner_names(&swing, &r)
    );
    ensure!(
        !winner_names(&swing, &r).contains(&label(&["A1", "A2"])),
        "{{A1, A2}} elected"
    );
    Ok(())
}

fn to_profile(rows: &Rows, budget: Option<usize>) -> BallotProfile {
    let roster = CandidateRoster::new((0..rows.n).map(|i| format!("c{i}"))).unwrap();
    let mode = if rows.ternary {
        Mode::Ternary
    } else {
        Mode::Binary
    };
    BallotProfile::from_raw(roster, rows.ballots.clone(), mode, budget).unwrap()
}

/// Property suite over random profiles, checked against the brute-force oracle.
fn criterion_7_properties() -> Outcome {
    let started = Instant::now();
    let cfg = SolverConfig::default();
    let mut rng = StdRng::seed_from_u64(0x5eed_c0ffee);
    let (mut c_checked, mut d_checked) = (0, 0);
    for instance in 0..PROPERTY_INSTANCES {
        for ternary in [false, true] {
            let (rows, k, budget) = random_rows(&mut rng, ternary);
            let profile = to_profile(&rows, budget);
            let cands = committees(rows.n, k);
            let hist = |c: &[usize]| histogram(&rows, c);
            let ctx = |what: &str| {
                format!(
                    "instance {instance} ternary={ternary} n={} k={k}: {what}",
                    rows.n
                )
            };

            // (a)/(b) minisum shortcut ≡ exhaustive p = 1 ≡ oracle.
            let fast = elect_minisum(&profile, k, &cfg).map_err(|e| e.to_string())?;
            let exact =
                elect_exact(&profile, k, Objective::PNorm(1.0), &cfg).map_err(|e| e.to_string())?;
            let oracle_p1 = argmin(&cands, |c| int_power_sum(&hist(c), 1));
            ensure!(
                winner_members(&fast) == winner_members(&exact),
                "{}",
                ctx("minisum vs exact p=1")
            );
            ensure!(
                winner_members(&exact) == oracle_p1,
                "{}",
                ctx("exact p=1 vs oracle")
            );
            let oracle_p2 = argmin(&cands, |c| int_power_sum(&hist(c), 2));
            let p2 =
                elect_exact(&profile, k, Objective::PNorm(2.0), &cfg).map_err(|e| e.to_string())?;
            ensure!(
                winner_members(&p2) == oracle_p2,
                "{}",
                ctx("exact p=2 vs oracle")
            );

            // (c) max cover ≡ p = 200 when the top-distance comparison is decisive.
            let lex = |c: &[usize]| -> Vec<(u32, u64)> { hist(c).into_iter().rev().collect() };
            let top = |c: &[usize]| {
                let (&d, &n) = hist(c).iter().next_back().unwrap();
                (d, n)
            };
            let cover = elect_max_cover(&profile, k, &cfg).map_err(|e| e.to_string())?;
            let oracle_lex = argmin(&cands, lex);
            ensure!(
                winner_members(&cover) == oracle_lex,
                "{}",
                ctx("max cover vs oracle")
            );
            let best_top = top(&oracle_lex[0]);
            let decisive = cands
                .iter()
                .filter(|c| !oracle_lex.contains(c))
                .all(|c| top(c) != best_top);
            if decisive {
                let p200 = elect_exact(&profile, k, Objective::PNorm(200.0), &cfg)
                    .map_err(|e| e.to_string())?;
                ensure!(
                    winner_members(&p200) == winner_members(&cover),
                    "{}",
                    ctx("p=200 vs max cover")
                );
                c_checked += 1;
            }

            // (d) p -> 0 ≡ p = 0.001 when the best ν_0 is held by one histogram.
            let p0 = elect_p_zero(&profile, k, &cfg).map_err(|e| e.to_string())?;
            let oracle_p0 = argmin(&cands, |c| {
                std::cmp::Reverse(hist(c).get(&0).copied().unwrap_or(0))
            });
            ensure!(winner_members(&p0) == oracle_p0, "{}", ctx("p0 vs oracle"));
            if oracle_p0.iter().all(|c| hist(c) == hist(&oracle_p0[0])) {
                let small = elect_exact(&profile, k, Objective::PNorm(0.001), &cfg)
                    .map_err(|e| e.to_string())?;
                ensure!(
                    winner_members(&small) == winner_members(&p0),
                    "{}",
                    ctx("p=0.001 vs p0")
                );
                d_checked += 1;
            }

            // (e) greedy within 1 - 1/e of the optimal coverage (approval ballots).
            if !ternary {
                let greedy = elect_greedy_cover(&profile, k).map_err(|e| e.to_string())?;
                let got = coverage(&rows, greedy.winners[0].committee.members());
                let best = cands.iter().map(|c| coverage(&rows, c)).max().unwrap();
                ensure!(
                    got as f64 >= (1.0 - (-1.0f64).exp()) * best as f64,
                    "{}",
                    ctx(&format!("greedy covers {got} of optimal {best}"))
                );
                ensure!(
                    greedy.winners[0].coverage == got,
                    "{}",
                    ctx("greedy coverage report")
                );
            }

            // (f) histogram mass, parity and range.
            let m = rows.voters();
            for r in [&exact, &cover, &p0] {
                for w in &r.winners {
                    ensure!(w.histogram.total() == m, "{}", ctx("histogram mass"));
                    let oracle_hist: Vec<(u32, u64)> =
                        hist(w.committee.members()).into_iter().collect();
                    ensure!(
                        w.histogram.iter().collect::<Vec<_>>() == oracle_hist,
                        "{}",
                        ctx("histogram")
                    );
                    if budget == Some(k) {
                        for (d, _) in w.histogram.iter() {
                            let ok = if ternary {
                                rows.n - k <= d as usize && d as usize <= rows.n + k
                            } else {
                                d % 2 == 0 && d as usize <= 2 * k
                            };
                            ensure!(ok, "{}", ctx(&format!("distance {d} out of range")));
                        }
                    }
                }
            }

            // (g) scaling every weight leaves every winner set unchanged.
            let factor = 1 + instance as u64 % 7;
            let scaled = profile.scaled(factor).map_err(|e| e.to_string())?;
            for obj in [
                Objective::PNorm(1.0),
                Objective::PNorm(2.0),
                Objective::PNorm(0.5),
                Objective::PZero,
                Objective::MaxCover,
                Objective::MiniMax,
            ] {
                let a = elect_exact(&profile, k, obj, &cfg).map_err(|e| e.to_string())?;
                let b = elect_exact(&scaled, k, obj, &cfg).map_err(|e| e.to_string())?;
                ensure!(
                    winner_members(&a) == winner_members(&b),
                    "{}",
                    ctx(&format!("scaling by {factor} under {obj:?}"))
                );
            }
        }
    }
    let elapsed = started.elapsed();
    ensure!(
        c_checked > 100 && d_checked > 100,
        "too few decisive instances: {c_checked}, {d_checked}"
    );
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok(())
}

fn criterion_8_round_trip() -> Outcome {
    let formats = [
        BallotFormat::CompactText,
        BallotFormat::MatrixCsv,
        BallotFormat::JsonLines,
    ];
    for (name, budget) in [
        ("table3.csv", None),
        ("table4.txt", Some(2)),
        ("table7.txt", Some(2)),
        ("table9.txt", Some(2)),
    ] {
        let original = load(name, budget);
        for format in formats {
            let text = write_profile(&original, format);
            let again = parse_ballots(&text, format, None, budget).map_err(|e| e.to_string())?;
            ensure!(again == original, "{name} via {format:?}");
            let twice = parse_ballots(&write_profile(&again, format), format, None, budget)
                .map_err(|e| e.to_string())?;
            ensure!(twice == again, "{name} second pass via {format:?}");
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "1. Golden Table 5 (binary p-norm sweep)",
            criterion_1_table5,
        ),
        ("2. Golden Table 8 (power sums, p -> 0)", criterion_2_table8),
        ("3. Golden Table 9 (ternary sweep)", criterion_3_table9),
        ("4. Minisum and minimax on Table 3", criterion_4_table3),
        ("5. Max cover and greedy on Table 4", criterion_5_max_cover),
        ("6. Minimax tie pathology", criterion_6_minimax_ties),
        ("7. Randomized property suite", criterion_7_properties),
        ("8. Ballot format round-trips", criterion_8_round_trip),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let started = Instant::now();
        let outcome =
            std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = started.elapsed();
        match outcome {
            Ok(()) => println!("PASS  {name}  ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
