//! linlog command line: parse and evaluate formulas, check proofs, run
//! the observation-universe oracles, and run the built-in property
//! suites.
//!
//! Exit codes: 0 success, 2 bad input (usage, syntax, file), 3 unbound
//! atom, 4 invalid proof, 5 oracle estimate outside tolerance, 1 failed
//! self-test. All stdout is deterministic for fixed flags and seed; wall
//! time goes to stderr.

mod args;
mod report;

use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use linlog_core::eval::{evaluate_report, Environment, EvalError, EvalTrace};
use linlog_core::formula;
use linlog_core::kernel::{check, parse_proof, tv_annotate, AnnotatedProof, CheckedProof, Sequent};
use linlog_core::oracle::{detector_sim, mc_independence, McEstimate, Universe};
use linlog_core::selftest;
use linlog_core::tv::{TruthValue, UniverseConfig};

use args::scan;
use report::{truth_value_json, Json};

const USAGE: &str = "\
usage: linlog <command> [args]

commands:
  parse \"<formula>\" [--nnf] [--json]
      Parse a formula and print its canonical form.
  eval \"<formula>\" <env-file> [--report] [--json]
      Evaluate a formula in an environment.
  check <proof-file> [--env <env-file>] [--conclusion \"<sequent>\"] [--json]
      Check a proof and print its evidence ledger.
  oracle indep --na <n> --pa <p> --nb <n> --pb <p> --N <size>
               [--trials <t>] [--seed <s>] [--json]
      Monte Carlo check of the multiplicative connective formulas.
  oracle detector --bt <p> --bc <p> [--ticks <t>] [--trials <t>]
                  [--seed <s>] [--json]
      Joint-detector simulation against the min and product readings.
  selftest [--suite <name>] [--seed <s>] [--json]
      Run the built-in property suites.

exit codes: 0 ok, 2 input error, 3 unbound atom, 4 invalid proof,
5 oracle tolerance failure, 1 failed self-test.
";

const EXIT_INPUT: u8 = 2;
const EXIT_UNBOUND: u8 = 3;
const EXIT_INVALID_PROOF: u8 = 4;
const EXIT_TOLERANCE: u8 = 5;

fn main() -> ExitCode {
    let start = Instant::now();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let code = run(&argv);
    eprintln!("# wall {} ms", start.elapsed().as_millis());
    ExitCode::from(code)
}

fn fail(code: u8, message: impl std::fmt::Display) -> u8 {
    eprintln!("error: {message}");
    code
}

fn run(argv: &[String]) -> u8 {
    let Some(command) = argv.first() else {
        eprint!("{USAGE}");
        return EXIT_INPUT;
    };
    match command.as_str() {
        "parse" => cmd_parse(&argv[1..]),
        "eval" => cmd_eval(&argv[1..]),
        "check" => cmd_check(&argv[1..]),
        "oracle" => match argv.get(1).map(String::as_str) {
            Some("indep") => cmd_oracle_indep(&argv[2..]),
            Some("detector") => cmd_oracle_detector(&argv[2..]),
            _ => fail(EXIT_INPUT, "oracle expects a subcommand: indep or detector"),
        },
        "selftest" => cmd_selftest(&argv[1..]),
        "help" | "--help" | "-h" => {
            print!("{USAGE}");
            0
        }
        other => fail(
            EXIT_INPUT,
            format!("unknown command `{other}` (try `linlog help`)"),
        ),
    }
}

fn cmd_parse(argv: &[String]) -> u8 {
    let parsed = match scan(argv, &[], &["--nnf", "--json"]) {
        Ok(p) => p,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let [text] = parsed.positionals.as_slice() else {
        return fail(EXIT_INPUT, "parse expects exactly one formula argument");
    };
    let formula = match formula::parse(text) {
        Ok(f) => f,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let formula = if parsed.switch("--nnf") {
        formula.nnf()
    } else {
        formula
    };
    if parsed.switch("--json") {
        let report = Json::obj([
            ("command", Json::str("parse")),
            ("input", Json::str(text)),
            ("nnf", Json::Bool(parsed.switch("--nnf"))),
            ("formula", Json::str(formula.render())),
        ]);
        println!("{}", report.render());
    } else {
        println!("{formula}");
    }
    0
}

fn load_env(path: &str) -> Result<Environment, (u8, String)> {
    let text =
        fs::read_to_string(path).map_err(|e| (EXIT_INPUT, format!("cannot read `{path}`: {e}")))?;
    Environment::parse(&text).map_err(|e| (EXIT_INPUT, format!("{path}: {e}")))
}

fn trace_json(trace: &EvalTrace) -> Json {
    Json::obj([
        ("formula", Json::str(trace.formula.render())),
        ("value", truth_value_json(trace.value)),
        (
            "children",
            Json::Arr(trace.children.iter().map(trace_json).collect()),
        ),
    ])
}

fn cmd_eval(argv: &[String]) -> u8 {
    let parsed = match scan(argv, &[], &["--report", "--json"]) {
        Ok(p) => p,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let [text, env_path] = parsed.positionals.as_slice() else {
        return fail(EXIT_INPUT, "eval expects a formula and an environment file");
    };
    let formula = match formula::parse(text) {
        Ok(f) => f,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let env = match load_env(env_path) {
        Ok(env) => env,
        Err((code, e)) => return fail(code, e),
    };
    let trace = match evaluate_report(&formula, &env) {
        Ok(t) => t,
        Err(EvalError::UnboundAtom(atom)) => {
            return fail(EXIT_UNBOUND, format!("unbound atom `{atom}`"))
        }
    };
    if parsed.switch("--json") {
        let mut fields = vec![
            ("command", Json::str("eval")),
            ("formula", Json::str(text)),
            ("env", Json::str(env_path)),
            ("value", truth_value_json(trace.value)),
        ];
        if parsed.switch("--report") {
            fields.push(("report", trace_json(&trace)));
        }
        println!("{}", Json::obj(fields).render());
    } else if parsed.switch("--report") {
        print!("{trace}");
    } else {
        println!("{}", trace.value);
    }
    0
}

fn ledger_json(proof: &CheckedProof) -> Json {
    let tokens = proof
        .ledger
        .tokens()
        .map(|(atom, n)| (atom.to_string(), Json::UInt(n)))
        .collect();
    let reuse = proof
        .ledger
        .reuse_events()
        .iter()
        .map(|event| {
            Json::obj([
                ("formula", Json::str(event.formula.render())),
                (
                    "path",
                    Json::Arr(event.path.iter().map(|&i| Json::UInt(i as u64)).collect()),
                ),
            ])
        })
        .collect();
    Json::obj([("tokens", Json::Obj(tokens)), ("reuse", Json::Arr(reuse))])
}

fn annotation_json(node: &AnnotatedProof) -> Json {
    Json::obj([
        ("rule", Json::str(node.rule.name())),
        ("conclusion", Json::str(node.conclusion.to_string())),
        ("value", truth_value_json(node.value)),
        (
            "premises",
            Json::Arr(node.premises.iter().map(annotation_json).collect()),
        ),
    ])
}

fn cmd_check(argv: &[String]) -> u8 {
    let parsed = match scan(argv, &["--env", "--conclusion"], &["--json"]) {
        Ok(p) => p,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let [proof_path] = parsed.positionals.as_slice() else {
        return fail(EXIT_INPUT, "check expects exactly one proof file");
    };
    let text = match fs::read_to_string(proof_path) {
        Ok(t) => t,
        Err(e) => return fail(EXIT_INPUT, format!("cannot read `{proof_path}`: {e}")),
    };
    let proof = match parse_proof(&text) {
        Ok(p) => p,
        Err(e) => return fail(EXIT_INPUT, format!("{proof_path}: {e}")),
    };
    let json = parsed.switch("--json");
    let checked = match check(&proof) {
        Ok(c) => c,
        Err(violation) => {
            if json {
                let report = Json::obj([
                    ("command", Json::str("check")),
                    ("proof", Json::str(proof_path)),
                    ("valid", Json::Bool(false)),
                    ("rule", Json::str(violation.rule.name())),
                    (
                        "path",
                        Json::Arr(
                            violation
                                .path
                                .iter()
                                .map(|&i| Json::UInt(i as u64))
                                .collect(),
                        ),
                    ),
                    ("message", Json::str(&violation.message)),
                ]);
                println!("{}", report.render());
            } else {
                println!("invalid proof: {violation}");
            }
            return EXIT_INVALID_PROOF;
        }
    };

    if let Some(expected_text) = parsed.value("--conclusion") {
        let expected = match Sequent::parse(expected_text) {
            Ok(s) => s,
            Err(e) => return fail(EXIT_INPUT, format!("--conclusion: {e}")),
        };
        if checked.conclusion() != &expected {
            println!(
                "valid proof, but it concludes {} (expected {})",
                checked.conclusion(),
                expected
            );
            return EXIT_INVALID_PROOF;
        }
    }

    let annotated = match parsed.value("--env") {
        None => None,
        Some(env_path) => {
            let env = match load_env(env_path) {
                Ok(env) => env,
                Err((code, e)) => return fail(code, e),
            };
            match tv_annotate(&checked, &env) {
                Ok(a) => Some(a),
                Err(EvalError::UnboundAtom(atom)) => {
                    return fail(EXIT_UNBOUND, format!("unbound atom `{atom}`"))
                }
            }
        }
    };

    if json {
        let mut fields = vec![
            ("command", Json::str("check")),
            ("proof", Json::str(proof_path)),
            ("valid", Json::Bool(true)),
            ("conclusion", Json::str(checked.conclusion().to_string())),
            ("ledger", ledger_json(&checked)),
        ];
        if let Some(annotated) = &annotated {
            fields.push(("annotations", annotation_json(annotated)));
        }
        println!("{}", Json::obj(fields).render());
    } else {
        println!("valid");
        println!("conclusion: {}", checked.conclusion());
        print!("{}", checked.ledger);
        if let Some(annotated) = &annotated {
            print!("{annotated}");
        }
    }
    0
}

fn estimate_json(e: McEstimate) -> Json {
    Json::obj([
        ("mean", Json::Num(e.mean)),
        ("std_error", Json::Num(e.std_error)),
        ("trials", Json::UInt(e.trials)),
    ])
}

fn print_estimate_line(name: &str, e: McEstimate, target: f64, pass: bool) {
    println!(
        "{name}: {} ± {} (target {}) {}",
        e.mean,
        e.std_error,
        target,
        if pass { "PASS" } else { "FAIL" }
    );
}

fn within_3_sigma(e: McEstimate, target: f64) -> bool {
    (e.mean - target).abs() <= 3.0 * e.std_error
}

fn cmd_oracle_indep(argv: &[String]) -> u8 {
    let parsed = match scan(
        argv,
        &["--na", "--pa", "--nb", "--pb", "--N", "--trials", "--seed"],
        &["--json"],
    ) {
        Ok(p) => p,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let numbers = (|| -> Result<(usize, f64, usize, f64, usize, u64, u64), String> {
        Ok((
            parsed.usize_flag("--na")?,
            parsed.f64_flag("--pa")?,
            parsed.usize_flag("--nb")?,
            parsed.f64_flag("--pb")?,
            parsed.usize_flag("--N")?,
            parsed.u64_flag_or("--trials", 100_000)?,
            parsed.u64_flag_or("--seed", 7)?,
        ))
    })();
    let (na, pa, nb, pb, size, trials, seed) = match numbers {
        Ok(v) => v,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    if size == 0 {
        return fail(EXIT_INPUT, "--N must be at least 1");
    }
    let est = match mc_independence(na, pa, nb, pb, Universe::new(size), trials, seed) {
        Ok(est) => est,
        Err(e) => return fail(EXIT_INPUT, e),
    };

    let universe = UniverseConfig::new(size as f64);
    let va = TruthValue::finite(pa, na as f64);
    let vb = TruthValue::finite(pb, nb as f64);
    let conj = va.and_multiplicative(vb, universe);
    let disj = va.or_multiplicative(vb, universe);
    let count_of = |v: TruthValue| v.count().as_finite().expect("finite inputs");

    let rows = [
        ("conj strength", est.conj_strength, conj.strength()),
        ("conj count", est.conj_count, count_of(conj)),
        ("disj strength", est.disj_strength, disj.strength()),
        ("disj count", est.disj_count, count_of(disj)),
    ];
    let all_pass = rows.iter().all(|&(_, e, target)| within_3_sigma(e, target));

    if parsed.switch("--json") {
        let report = Json::obj([
            ("command", Json::str("oracle indep")),
            (
                "inputs",
                Json::obj([
                    ("na", Json::UInt(na as u64)),
                    ("pa", Json::Num(pa)),
                    ("nb", Json::UInt(nb as u64)),
                    ("pb", Json::Num(pb)),
                    ("N", Json::UInt(size as u64)),
                    ("trials", Json::UInt(trials)),
                ]),
            ),
            ("seed", Json::UInt(seed)),
            (
                "estimates",
                Json::obj([
                    ("conj_strength", estimate_json(est.conj_strength)),
                    ("conj_count", estimate_json(est.conj_count)),
                    ("disj_strength", estimate_json(est.disj_strength)),
                    ("disj_count", estimate_json(est.disj_count)),
                ]),
            ),
            (
                "targets",
                Json::obj([
                    ("conj_strength", Json::Num(conj.strength())),
                    ("conj_count", Json::Num(count_of(conj))),
                    ("disj_strength", Json::Num(disj.strength())),
                    ("disj_count", Json::Num(count_of(disj))),
                ]),
            ),
            ("pass", Json::Bool(all_pass)),
        ]);
        println!("{}", report.render());
    } else {
        for (name, e, target) in rows {
            print_estimate_line(name, e, target, within_3_sigma(e, target));
        }
        println!("overall: {}", if all_pass { "PASS" } else { "FAIL" });
    }
    if all_pass {
        0
    } else {
        EXIT_TOLERANCE
    }
}

fn cmd_oracle_detector(argv: &[String]) -> u8 {
    let parsed = match scan(
        argv,
        &["--bt", "--bc", "--ticks", "--trials", "--seed"],
        &["--json"],
    ) {
        Ok(p) => p,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let numbers = (|| -> Result<(f64, f64, u64, u64, u64), String> {
        Ok((
            parsed.f64_flag("--bt")?,
            parsed.f64_flag("--bc")?,
            parsed.u64_flag_or("--ticks", 1_000)?,
            parsed.u64_flag_or("--trials", 1_000)?,
            parsed.u64_flag_or("--seed", 7)?,
        ))
    })();
    let (bt, bc, ticks, trials, seed) = match numbers {
        Ok(v) => v,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let est = match detector_sim(bt, bc, ticks, trials, seed) {
        Ok(est) => est,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let target = bt * bc;
    let pass = within_3_sigma(est.independent_joint, target);

    if parsed.switch("--json") {
        let report = Json::obj([
            ("command", Json::str("oracle detector")),
            (
                "inputs",
                Json::obj([
                    ("bt", Json::Num(bt)),
                    ("bc", Json::Num(bc)),
                    ("ticks", Json::UInt(ticks)),
                    ("trials", Json::UInt(trials)),
                ]),
            ),
            ("seed", Json::UInt(seed)),
            ("independent_joint", estimate_json(est.independent_joint)),
            ("joint_target", Json::Num(target)),
            ("combined_min", Json::Num(est.combined_min)),
            ("pass", Json::Bool(pass)),
        ]);
        println!("{}", report.render());
    } else {
        print_estimate_line("independent joint", est.independent_joint, target, pass);
        println!("combined min: {}", est.combined_min);
        println!("overall: {}", if pass { "PASS" } else { "FAIL" });
    }
    if pass {
        0
    } else {
        EXIT_TOLERANCE
    }
}

fn cmd_selftest(argv: &[String]) -> u8 {
    let parsed = match scan(argv, &["--suite", "--seed"], &["--json"]) {
        Ok(p) => p,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let seed = match parsed.u64_flag_or("--seed", 0xC0FFEE) {
        Ok(s) => s,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let outcomes = match parsed.value("--suite") {
        None => selftest::run_all(seed),
        Some(name) => match selftest::run(name, seed) {
            Some(outcome) => vec![outcome],
            None => {
                return fail(
                    EXIT_INPUT,
                    format!(
                        "unknown suite `{name}` (available: {})",
                        selftest::SUITES.join(", ")
                    ),
                )
            }
        },
    };
    let all_pass = outcomes.iter().all(|o| o.passed());

    if parsed.switch("--json") {
        let suites = outcomes
            .iter()
            .map(|o| {
                Json::obj([
                    ("name", Json::str(o.name)),
                    ("checks", Json::UInt(o.checks)),
                    ("passed", Json::Bool(o.passed())),
                    (
                        "failures",
                        Json::Arr(o.failures.iter().map(Json::str).collect()),
                    ),
                ])
            })
            .collect();
        let report = Json::obj([
            ("command", Json::str("selftest")),
            ("seed", Json::UInt(seed)),
            ("suites", Json::Arr(suites)),
            ("pass", Json::Bool(all_pass)),
        ]);
        println!("{}", report.render());
    } else {
        for o in &outcomes {
            if o.passed() {
                println!("suite {}: PASS ({} checks)", o.name, o.checks);
            } else {
                println!("suite {}: FAIL ({} checks)", o.name, o.checks);
                for failure in &o.failures {
                    println!("  {failure}");
                }
            }
        }
        println!("overall: {}", if all_pass { "PASS" } else { "FAIL" });
    }
    if all_pass {
        0
    } else {
        1
    }
}
