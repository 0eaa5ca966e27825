//! Built-in property suites, runnable from the command line.
//!
//! Each suite draws deterministic cases from a seed, checks a family of
//! algebraic laws or oracle agreements, and reports how many checks ran
//! and which failed.

use crate::eval::{evaluate, Environment};
use crate::formula::parse;
use crate::kernel;
use crate::oracle::rng::SplitMix64;
use crate::oracle::{
    detector_sim, exact_eval_conj, exact_eval_disj, ground_max_overlap, mc_independence, Universe,
};
use crate::tv::{Constant, Count, TruthValue, UniverseConfig};

/// Result of one suite run.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checks: u64,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    fn new(name: &'static str) -> SuiteOutcome {
        SuiteOutcome {
            name,
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        // Keep a few concrete witnesses; the count carries the rest.
        if !ok && self.failures.len() < 8 {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub const SUITES: &[&str] = &["tnorm", "distributivity", "demorgan", "oracle", "proofs"];

/// Runs one suite by name.
pub fn run(name: &str, seed: u64) -> Option<SuiteOutcome> {
    match name {
        "tnorm" => Some(tnorm_suite(seed)),
        "distributivity" => Some(distributivity_suite(seed)),
        "demorgan" => Some(demorgan_suite(seed)),
        "oracle" => Some(oracle_suite(seed)),
        "proofs" => Some(proofs_suite()),
        _ => None,
    }
}

/// Runs every suite.
pub fn run_all(seed: u64) -> Vec<SuiteOutcome> {
    SUITES.iter().map(|name| run(name, seed).unwrap()).collect()
}

const TOL: f64 = 1e-12;
const N100: f64 = 100.0;

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= TOL
}

fn counts_close(a: Count, b: Count) -> bool {
    match (a, b) {
        (Count::Infinite, Count::Infinite) => true,
        (Count::Finite(x), Count::Finite(y)) => close(x, y),
        _ => false,
    }
}

fn rand_tv(rng: &mut SplitMix64) -> TruthValue {
    TruthValue::finite(rng.next_f64(), rng.next_f64() * N100)
}

fn tnorm_suite(seed: u64) -> SuiteOutcome {
    let mut suite = SuiteOutcome::new("tnorm");
    let mut rng = SplitMix64::substream(seed, 1);
    let universe = UniverseConfig::new(N100);
    for _ in 0..20_000 {
        let (a, b, c) = (rng.next_f64(), rng.next_f64(), rng.next_f64());
        let pairs: [(&str, fn(f64, f64) -> f64, fn(f64, f64) -> f64); 2] = [
            ("additive", |x, y| x.min(y), |x, y| x.max(y)),
            ("multiplicative", |x, y| x * y, |x, y| x + y - x * y),
        ];
        for (family, t, s) in pairs {
            suite.check(t(a, b) == t(b, a), || {
                format!("{family} and not commutative at ({a}, {b})")
            });
            suite.check(close(t(a, t(b, c)), t(t(a, b), c)), || {
                format!("{family} and not associative at ({a}, {b}, {c})")
            });
            suite.check(t(a.min(b), c) <= t(a.max(b), c) + TOL, || {
                format!("{family} and not monotone at ({a}, {b}, {c})")
            });
            suite.check(close(t(a, 1.0), a), || format!("{family} unit law at {a}"));
            suite.check(close(s(a, b), 1.0 - t(1.0 - a, 1.0 - b)), || {
                format!("{family} or is not the dual t-conorm at ({a}, {b})")
            });
            suite.check(close(s(a, 0.0), a), || {
                format!("{family} or unit law at {a}")
            });
        }
    }
    // Unit laws on full truth values.
    let mut rng = SplitMix64::substream(seed, 2);
    for _ in 0..5_000 {
        let v = rand_tv(&mut rng);
        let one = Constant::One.truth_value(universe);
        let top = Constant::Top.truth_value(universe);
        suite.check(v.and_additive(top) == v, || format!("T unit at {v}"));
        let via_one = v.and_multiplicative(one, universe);
        suite.check(
            close(via_one.strength(), v.strength()) && counts_close(via_one.count(), v.count()),
            || format!("1 unit at {v}"),
        );
    }
    suite
}

fn distributivity_suite(seed: u64) -> SuiteOutcome {
    let mut suite = SuiteOutcome::new("distributivity");
    let universe = UniverseConfig::new(N100);
    let mut rng = SplitMix64::substream(seed, 3);
    for _ in 0..20_000 {
        let (a, b, c) = (rand_tv(&mut rng), rand_tv(&mut rng), rand_tv(&mut rng));
        let lhs = a.and_multiplicative(b.or_additive(c), universe);
        let rhs = a
            .and_multiplicative(b, universe)
            .or_additive(a.and_multiplicative(c, universe));
        suite.check(
            close(lhs.strength(), rhs.strength()) && counts_close(lhs.count(), rhs.count()),
            || format!("tensor over plus at {a}, {b}, {c}"),
        );
        let lhs = a.or_multiplicative(b.and_additive(c), universe);
        let rhs = a
            .or_multiplicative(b, universe)
            .and_additive(a.or_multiplicative(c, universe));
        suite.check(
            close(lhs.strength(), rhs.strength()) && counts_close(lhs.count(), rhs.count()),
            || format!("par over with at {a}, {b}, {c}"),
        );
    }
    suite
}

fn demorgan_suite(seed: u64) -> SuiteOutcome {
    let mut suite = SuiteOutcome::new("demorgan");
    let universe = UniverseConfig::new(N100);
    let mut rng = SplitMix64::substream(seed, 4);
    for _ in 0..20_000 {
        let (a, b) = (rand_tv(&mut rng), rand_tv(&mut rng));
        let add = a.and_additive(b).negate();
        let add_dual = a.negate().or_additive(b.negate());
        suite.check(close(add.strength(), add_dual.strength()), || {
            format!("additive De Morgan strength at {a}, {b}")
        });
        let mul = a.and_multiplicative(b, universe).negate();
        let mul_dual = a.negate().or_multiplicative(b.negate(), universe);
        suite.check(close(mul.strength(), mul_dual.strength()), || {
            format!("multiplicative De Morgan strength at {a}, {b}")
        });
    }
    // The count level differs by design: min against max.
    let lhs = TruthValue::finite(0.5, 20.0)
        .and_additive(TruthValue::finite(0.3, 10.0))
        .negate();
    let rhs = TruthValue::finite(0.5, 20.0)
        .negate()
        .or_additive(TruthValue::finite(0.3, 10.0).negate());
    suite.check(lhs.count() != rhs.count(), || {
        "count-level De Morgan unexpectedly held".to_string()
    });
    suite
}

fn oracle_suite(seed: u64) -> SuiteOutcome {
    let mut suite = SuiteOutcome::new("oracle");
    // Exhaustive max-overlap agreement on order-compatible tallies.
    for size in 1..=10usize {
        for na in 1..=size {
            for ka in 0..=na {
                for nb in 1..=size {
                    for kb in 0..=nb {
                        let pa = ka as f64 / na as f64;
                        let pb = kb as f64 / nb as f64;
                        if !((na >= nb && pa >= pb) || (nb >= na && pb >= pa)) {
                            continue;
                        }
                        let gs = ground_max_overlap(&[(na, pa), (nb, pb)], Universe::new(size))
                            .expect("realizable");
                        let conj = exact_eval_conj(&gs[0], &gs[1]);
                        let disj = exact_eval_disj(&gs[0], &gs[1]);
                        let ok = conj.count == na.min(nb)
                            && disj.count == na.max(nb)
                            && conj.strength == Some(pa.min(pb))
                            && disj.strength == Some(pa.max(pb));
                        suite.check(ok, || {
                            format!("max-overlap mismatch at N={size} ({na},{pa}) ({nb},{pb})")
                        });
                    }
                }
            }
        }
    }
    // Monte Carlo agreement with the multiplicative formulas.
    let est = mc_independence(20, 0.5, 10, 0.3, Universe::new(100), 20_000, seed)
        .expect("valid parameters");
    for (name, estimate, target) in [
        ("conj strength", est.conj_strength, 0.15),
        ("conj count", est.conj_count, 2.0),
        ("disj strength", est.disj_strength, 0.65),
        ("disj count", est.disj_count, 28.0),
    ] {
        suite.check(
            (estimate.mean - target).abs() <= 3.0 * estimate.std_error,
            || {
                format!(
                    "{name}: mean {} vs target {target} (se {})",
                    estimate.mean, estimate.std_error
                )
            },
        );
    }
    // Detector joint rate converges to the product reading.
    let det = detector_sim(0.7, 0.8, 400, 400, seed).expect("valid parameters");
    suite.check(
        (det.independent_joint.mean - 0.56).abs() <= 3.0 * det.independent_joint.std_error,
        || format!("detector joint {}", det.independent_joint.mean),
    );
    suite.check(det.combined_min == 0.7, || {
        format!("combined min {}", det.combined_min)
    });
    suite
}

fn proofs_suite() -> SuiteOutcome {
    let mut suite = SuiteOutcome::new("proofs");
    let env = Environment::from_bindings(
        UniverseConfig::new(N100),
        [
            ("A", TruthValue::finite(0.3, 10.0)),
            ("B", TruthValue::finite(0.5, 20.0)),
            ("C", TruthValue::finite(0.25, 40.0)),
        ],
    )
    .expect("valid bindings");
    for golden in kernel::golden::VALID {
        let outcome = kernel::parse_proof(golden.text)
            .map_err(|e| e.to_string())
            .and_then(|proof| kernel::check(&proof).map_err(|v| v.to_string()))
            .and_then(|checked| {
                let expected =
                    kernel::Sequent::parse(golden.conclusion).map_err(|e| e.to_string())?;
                if checked.conclusion() != &expected {
                    return Err(format!("concluded {}", checked.conclusion()));
                }
                kernel::tv_annotate(&checked, &env).map_err(|e| e.to_string())?;
                Ok(())
            });
        suite.check(outcome.is_ok(), || {
            format!(
                "{}: {}",
                golden.name,
                outcome.as_ref().err().map(String::as_str).unwrap_or("")
            )
        });
    }
    for bad in kernel::golden::INVALID {
        let outcome = kernel::parse_proof(bad.text)
            .map_err(|e| e.to_string())
            .and_then(|proof| match kernel::check(&proof) {
                Ok(_) => Err("accepted".to_string()),
                Err(v) if v.path == bad.path && v.message.contains(bad.message_contains) => Ok(()),
                Err(v) => Err(format!("wrong violation: {v}")),
            });
        suite.check(outcome.is_ok(), || {
            format!(
                "{}: {}",
                bad.name,
                outcome.as_ref().err().map(String::as_str).unwrap_or("")
            )
        });
    }
    // Derived identities for a sample of compound formulas.
    for text in ["A * B", "!(A & B)", "(A + B) | C", "?A -o !B"] {
        let f = parse(text).expect("well-formed");
        let ok = kernel::check(&kernel::identity_proof(&f)).is_ok();
        suite.check(ok, || format!("identity for {text}"));
    }
    // The evaluator's worked example, end to end.
    let survey = Environment::parse("universe 100\nrainy 0.5 20\nwindy 0.3 10\n").expect("valid");
    let cases = [
        ("rainy & windy", TruthValue::finite(0.3, 10.0)),
        ("rainy + windy", TruthValue::finite(0.5, 20.0)),
        ("rainy * windy", TruthValue::finite(0.15, 2.0)),
        ("rainy | windy", TruthValue::finite(0.65, 28.0)),
    ];
    for (text, expected) in cases {
        let got = evaluate(&parse(text).expect("well-formed"), &survey).expect("bound");
        suite.check(got == expected, || {
            format!("{text}: {got} expected {expected}")
        });
    }
    suite
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_with_the_default_seed() {
        for outcome in run_all(0xC0FFEE) {
            assert!(
                outcome.passed(),
                "suite {} failed: {:?}",
                outcome.name,
                outcome.failures
            );
            assert!(outcome.checks > 0);
        }
    }

    #[test]
    fn unknown_suites_are_rejected() {
        assert!(run("nonsense", 0).is_none());
    }

    #[test]
    fn failures_are_recorded() {
        let mut outcome = SuiteOutcome::new("probe");
        outcome.check(false, || "witness".to_string());
        assert!(!outcome.passed());
        assert_eq!(outcome.failures, vec!["witness".to_string()]);
    }
}
