//! Seeded Monte Carlo estimators for the independence heuristic.

use thiserror::Error;

use super::rng::SplitMix64;
use super::{exact_eval_conj, exact_eval_disj, Grounding, Universe};

/// Mean / standard-error summary of one simulated quantity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub std_error: f64,
    /// Number of trials the estimate is based on. Strength estimates are
    /// conditioned on trials with nonzero supporting evidence, so this
    /// may be smaller than the number of trials run.
    pub trials: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum McError {
    #[error("sample size {n} exceeds the universe size {size}")]
    SampleTooLarge { n: usize, size: usize },
    #[error("probability {0} is outside [0, 1]")]
    ProbabilityOutOfRange(f64),
    #[error("at least one trial is required")]
    NoTrials,
}

/// Streaming mean and variance; trials are folded in a fixed order so
/// reported estimates are bit-identical for a given seed.
#[derive(Debug, Clone, Copy, Default)]
struct RunningStat {
    n: u64,
    mean: f64,
    m2: f64,
}

impl RunningStat {
    fn push(&mut self, x: f64) {
        self.n += 1;
        let delta = x - self.mean;
        self.mean += delta / self.n as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn finish(self) -> McEstimate {
        let std_error = if self.n >= 2 {
            (self.m2 / (self.n - 1) as f64).sqrt() / (self.n as f64).sqrt()
        } else {
            0.0
        };
        McEstimate {
            mean: if self.n == 0 { f64::NAN } else { self.mean },
            std_error,
            trials: self.n,
        }
    }
}

/// Monte Carlo estimates for a conjunction and disjunction of two atoms
/// whose evidence sets are drawn independently from the universe.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndependenceEstimates {
    pub conj_strength: McEstimate,
    pub conj_count: McEstimate,
    pub disj_strength: McEstimate,
    pub disj_count: McEstimate,
}

/// Per trial: draws evaluated sets of sizes `na` and `nb` uniformly and
/// independently, assigns every observation an independent outcome for
/// each property (positive with probability `pa` resp. `pb`), then
/// records the exact joint evaluations.
///
/// Counts average over all trials. Strengths are conditioned on trials
/// with nonzero shared (resp. pooled) evidence. The conjunction strength
/// is the exact shared-evidence evaluation; the disjunction strength
/// scores every pooled observation on both assigned outcomes, so it
/// estimates the probabilistic sum `pa + pb - pa*pb` rather than the
/// evaluated-only pooling used by [`exact_eval_disj`].
pub fn mc_independence(
    na: usize,
    pa: f64,
    nb: usize,
    pb: f64,
    universe: Universe,
    trials: u64,
    seed: u64,
) -> Result<IndependenceEstimates, McError> {
    let size = universe.size();
    for n in [na, nb] {
        if n > size {
            return Err(McError::SampleTooLarge { n, size });
        }
    }
    for p in [pa, pb] {
        if !(0.0..=1.0).contains(&p) {
            return Err(McError::ProbabilityOutOfRange(p));
        }
    }
    if trials == 0 {
        return Err(McError::NoTrials);
    }

    let mut conj_strength = RunningStat::default();
    let mut conj_count = RunningStat::default();
    let mut disj_strength = RunningStat::default();
    let mut disj_count = RunningStat::default();

    for trial in 0..trials {
        let mut rng = SplitMix64::substream(seed, trial);
        let eval_a = rng.sample_subset(size, na);
        let eval_b = rng.sample_subset(size, nb);
        let out_a: Vec<bool> = (0..size).map(|_| rng.bernoulli(pa)).collect();
        let out_b: Vec<bool> = (0..size).map(|_| rng.bernoulli(pb)).collect();

        let ga = Grounding {
            positive_set: eval_a
                .iter()
                .copied()
                .filter(|&o| out_a[o as usize])
                .collect(),
            eval_set: eval_a.iter().copied().collect(),
        };
        let gb = Grounding {
            positive_set: eval_b
                .iter()
                .copied()
                .filter(|&o| out_b[o as usize])
                .collect(),
            eval_set: eval_b.iter().copied().collect(),
        };

        let conj = exact_eval_conj(&ga, &gb);
        conj_count.push(conj.count as f64);
        if let Some(s) = conj.strength {
            conj_strength.push(s);
        }

        let disj = exact_eval_disj(&ga, &gb);
        disj_count.push(disj.count as f64);
        let union: Vec<u32> = ga.eval_set.union(&gb.eval_set).copied().collect();
        if !union.is_empty() {
            let positive = union
                .iter()
                .filter(|&&o| out_a[o as usize] || out_b[o as usize])
                .count();
            disj_strength.push(positive as f64 / union.len() as f64);
        }
    }

    Ok(IndependenceEstimates {
        conj_strength: conj_strength.finish(),
        conj_count: conj_count.finish(),
        disj_strength: disj_strength.finish(),
        disj_count: disj_count.finish(),
    })
}

/// Results of the two readings of a joint detector experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectorEstimates {
    /// Fraction of ticks on which both detectors ring when each rings
    /// independently at its own rate (Monte Carlo).
    pub independent_joint: McEstimate,
    /// Degree of a single combined detector that rings only when both
    /// properties are judged present (analytic).
    pub combined_min: f64,
}

/// Simulates two detectors ringing independently at rates `bt` and `bc`
/// over `ticks` ticks per trial.
pub fn detector_sim(
    bt: f64,
    bc: f64,
    ticks: u64,
    trials: u64,
    seed: u64,
) -> Result<DetectorEstimates, McError> {
    for p in [bt, bc] {
        if !(0.0..=1.0).contains(&p) {
            return Err(McError::ProbabilityOutOfRange(p));
        }
    }
    if ticks == 0 || trials == 0 {
        return Err(McError::NoTrials);
    }

    let mut joint = RunningStat::default();
    for trial in 0..trials {
        let mut rng = SplitMix64::substream(seed, trial);
        let mut both = 0u64;
        for _ in 0..ticks {
            let t_rings = rng.bernoulli(bt);
            let c_rings = rng.bernoulli(bc);
            if t_rings && c_rings {
                both += 1;
            }
        }
        joint.push(both as f64 / ticks as f64);
    }

    Ok(DetectorEstimates {
        independent_joint: joint.finish(),
        combined_min: bt.min(bc),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn within(estimate: McEstimate, target: f64, sigmas: f64) -> bool {
        (estimate.mean - target).abs() <= sigmas * estimate.std_error
    }

    #[test]
    fn survey_parameters_match_the_multiplicative_formulas() {
        let est = mc_independence(20, 0.5, 10, 0.3, Universe::new(100), 20_000, 7).unwrap();
        assert!(
            within(est.conj_strength, 0.15, 3.0),
            "{:?}",
            est.conj_strength
        );
        assert!(within(est.conj_count, 2.0, 3.0), "{:?}", est.conj_count);
        assert!(
            within(est.disj_strength, 0.65, 3.0),
            "{:?}",
            est.disj_strength
        );
        assert!(within(est.disj_count, 28.0, 3.0), "{:?}", est.disj_count);
    }

    #[test]
    fn equal_halves_match_the_probabilistic_sum() {
        // Arithmetic cross-check: 0.5 + 0.5 - 0.25 = 0.75 and
        // 50 + 50 - 2500/100 = 75.
        let est = mc_independence(50, 0.5, 50, 0.5, Universe::new(100), 20_000, 11).unwrap();
        assert!(
            within(est.disj_strength, 0.75, 3.0),
            "{:?}",
            est.disj_strength
        );
        assert!(within(est.disj_count, 75.0, 3.0), "{:?}", est.disj_count);
    }

    #[test]
    fn certain_outcomes_have_zero_variance() {
        let est = mc_independence(20, 1.0, 10, 1.0, Universe::new(100), 2_000, 5).unwrap();
        assert_eq!(est.conj_strength.mean, 1.0);
        assert_eq!(est.conj_strength.std_error, 0.0);
    }

    #[test]
    fn full_samples_always_overlap_completely() {
        let est = mc_independence(100, 0.5, 100, 0.5, Universe::new(100), 500, 5).unwrap();
        assert_eq!(est.conj_count.mean, 100.0);
        assert_eq!(est.conj_count.std_error, 0.0);
    }

    #[test]
    fn estimates_are_bit_identical_for_a_seed() {
        let a = mc_independence(20, 0.5, 10, 0.3, Universe::new(100), 2_000, 9).unwrap();
        let b = mc_independence(20, 0.5, 10, 0.3, Universe::new(100), 2_000, 9).unwrap();
        assert_eq!(a, b);
        let c = mc_independence(20, 0.5, 10, 0.3, Universe::new(100), 2_000, 10).unwrap();
        assert_ne!(a.conj_count.mean, c.conj_count.mean);
    }

    #[test]
    fn conj_strength_is_conditioned_on_overlap() {
        // Tiny samples in a big universe: plenty of zero-overlap trials.
        let est = mc_independence(2, 1.0, 2, 1.0, Universe::new(50), 2_000, 3).unwrap();
        assert!(est.conj_strength.trials < est.conj_count.trials);
        assert_eq!(est.conj_count.trials, 2_000);
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        let u = Universe::new(10);
        assert!(matches!(
            mc_independence(11, 0.5, 5, 0.5, u, 10, 0),
            Err(McError::SampleTooLarge { .. })
        ));
        assert!(matches!(
            mc_independence(5, 1.5, 5, 0.5, u, 10, 0),
            Err(McError::ProbabilityOutOfRange(_))
        ));
        assert!(matches!(
            mc_independence(5, 0.5, 5, 0.5, u, 0, 0),
            Err(McError::NoTrials)
        ));
        assert!(matches!(
            detector_sim(0.5, 0.5, 0, 10, 0),
            Err(McError::NoTrials)
        ));
    }

    #[test]
    fn detector_joint_converges_to_the_product() {
        let est = detector_sim(0.7, 0.8, 500, 500, 7).unwrap();
        assert!(
            within(est.independent_joint, 0.56, 3.0),
            "{:?}",
            est.independent_joint
        );
        assert_eq!(est.combined_min, 0.7);
    }

    #[test]
    fn detector_edge_rates() {
        let est = detector_sim(1.0, 0.4, 400, 400, 7).unwrap();
        assert!(
            within(est.independent_joint, 0.4, 3.0),
            "{:?}",
            est.independent_joint
        );
        assert_eq!(est.combined_min, 0.4);

        let est = detector_sim(0.0, 0.4, 200, 200, 7).unwrap();
        assert_eq!(est.independent_joint.mean, 0.0);
        assert_eq!(est.independent_joint.std_error, 0.0);
    }
}
