//! The `(strength, count)` truth-value algebra.
//!
//! A [`TruthValue`] pairs a strength in `[0, 1]` (proportion of positive
//! observations) with a [`Count`] (how many observations that proportion
//! is based on, possibly unbounded). The additive connectives combine
//! values as if their evidence sets overlap maximally; the multiplicative
//! connectives combine them as if the evidence sets were drawn
//! independently from a universe of [`UniverseConfig::size`] potential
//! observations.
//!
//! Everything here is a pure function over `Copy` data and is safe to use
//! from any number of threads.

use std::fmt;

/// Amount of evidence behind a truth value.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub enum Count {
    /// Finitely many observations. Expected counts produced by the
    /// multiplicative connectives are means rather than realized tallies,
    /// so the payload is a non-negative real, not an integer.
    Finite(f64),
    /// Unbounded evidence, as produced by [`TruthValue::bang`].
    Infinite,
}

impl Count {
    /// Wraps a non-negative finite number of observations.
    pub fn finite(value: f64) -> Count {
        debug_assert!(
            value.is_finite() && value >= -1e-9,
            "count must be a non-negative finite number, got {value}"
        );
        Count::Finite(value.max(0.0))
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Count::Infinite)
    }

    pub fn as_finite(self) -> Option<f64> {
        match self {
            Count::Finite(v) => Some(v),
            Count::Infinite => None,
        }
    }

    /// Smaller of two counts; unbounded evidence never wins.
    pub fn min(self, other: Count) -> Count {
        match (self, other) {
            (Count::Infinite, c) | (c, Count::Infinite) => c,
            (Count::Finite(a), Count::Finite(b)) => Count::Finite(a.min(b)),
        }
    }

    /// Larger of two counts; unbounded evidence always wins.
    pub fn max(self, other: Count) -> Count {
        match (self, other) {
            (Count::Infinite, _) | (_, Count::Infinite) => Count::Infinite,
            (Count::Finite(a), Count::Finite(b)) => Count::Finite(a.max(b)),
        }
    }

    /// Expected size of the overlap of two independently drawn evidence
    /// sets: `a * b / N`. Unbounded evidence absorbs (`inf * x = inf` for
    /// `x > 0`), while an empty evidence set contributes nothing
    /// (`inf * 0 = 0`).
    pub fn expected_overlap(self, other: Count, universe: UniverseConfig) -> Count {
        match (self, other) {
            (Count::Infinite, Count::Infinite) => Count::Infinite,
            (Count::Infinite, Count::Finite(x)) | (Count::Finite(x), Count::Infinite) => {
                if x == 0.0 {
                    Count::Finite(0.0)
                } else {
                    Count::Infinite
                }
            }
            (Count::Finite(a), Count::Finite(b)) => Count::finite(a * b / universe.size()),
        }
    }

    /// Expected size of the union of two independently drawn evidence
    /// sets: `a + b - a * b / N`. Any unbounded operand makes the union
    /// unbounded.
    pub fn expected_union(self, other: Count, universe: UniverseConfig) -> Count {
        match (self, other) {
            (Count::Finite(a), Count::Finite(b)) => Count::finite(a + b - a * b / universe.size()),
            _ => Count::Infinite,
        }
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(v) => write!(f, "{v}"),
            Count::Infinite => write!(f, "inf"),
        }
    }
}

/// Size of the body of potential observations that the multiplicative
/// connectives draw from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniverseConfig {
    size: f64,
}

impl UniverseConfig {
    /// Panics unless `size` is strictly positive and finite.
    pub fn new(size: f64) -> UniverseConfig {
        assert!(
            size.is_finite() && size > 0.0,
            "universe size must be positive, got {size}"
        );
        UniverseConfig { size }
    }

    pub fn size(self) -> f64 {
        self.size
    }
}

/// A `(strength, count)` pair: the proportion of positive observations
/// and the number of observations it is based on.
///
/// A zero count with a nonzero strength is legal; the algebra treats the
/// strength as a degenerate estimate backed by no evidence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruthValue {
    strength: f64,
    count: Count,
}

impl TruthValue {
    pub fn new(strength: f64, count: Count) -> TruthValue {
        debug_assert!(
            (-1e-9..=1.0 + 1e-9).contains(&strength),
            "strength must lie in [0, 1], got {strength}"
        );
        TruthValue {
            strength: strength.clamp(0.0, 1.0),
            count,
        }
    }

    /// Shorthand for a value backed by finitely many observations.
    pub fn finite(strength: f64, count: f64) -> TruthValue {
        TruthValue::new(strength, Count::finite(count))
    }

    pub fn strength(self) -> f64 {
        self.strength
    }

    pub fn count(self) -> Count {
        self.count
    }

    /// Conjunction under maximal overlap of the evidence sets: both
    /// components take the minimum. Commutative, associative, idempotent;
    /// unit is `Top`.
    pub fn and_additive(self, other: TruthValue) -> TruthValue {
        TruthValue::new(
            self.strength.min(other.strength),
            self.count.min(other.count),
        )
    }

    /// Disjunction under maximal overlap: both components take the
    /// maximum. Commutative, associative, idempotent; unit is `Zero`.
    pub fn or_additive(self, other: TruthValue) -> TruthValue {
        TruthValue::new(
            self.strength.max(other.strength),
            self.count.max(other.count),
        )
    }

    /// Conjunction under independently sampled evidence sets: strengths
    /// multiply, counts contract to the expected overlap `n_a * n_b / N`.
    /// Commutative, associative; unit is `One`.
    pub fn and_multiplicative(self, other: TruthValue, universe: UniverseConfig) -> TruthValue {
        TruthValue::new(
            self.strength * other.strength,
            self.count.expected_overlap(other.count, universe),
        )
    }

    /// Disjunction under independence: probabilistic sum on strengths,
    /// expected union `n_a + n_b - n_a * n_b / N` on counts. Commutative,
    /// associative; unit is `Bottom`.
    pub fn or_multiplicative(self, other: TruthValue, universe: UniverseConfig) -> TruthValue {
        let s = self.strength + other.strength - self.strength * other.strength;
        TruthValue::new(s, self.count.expected_union(other.count, universe))
    }

    /// Complement of the positive proportion over the same evidence set:
    /// `(1 - s, n)`. Involutive.
    pub fn negate(self) -> TruthValue {
        TruthValue::new(1.0 - self.strength, self.count)
    }

    /// Marks the proposition as backed by unbounded evidence: `(s, inf)`.
    pub fn bang(self) -> TruthValue {
        TruthValue::new(self.strength, Count::Infinite)
    }

    /// Dual exponential, defined as `negate(bang(negate(v)))`, which
    /// simplifies to `(s, inf)`. The simplified form is returned so the
    /// strength survives bit-exactly instead of rounding through
    /// `1 - (1 - s)`.
    pub fn quest(self) -> TruthValue {
        TruthValue::new(self.strength, Count::Infinite)
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.strength, self.count)
    }
}

/// The four logical constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constant {
    /// Additive truth, the unit of `&`. Its count must dominate every
    /// other count under `min`, which forces unbounded evidence.
    Top,
    /// Additive falsity: a proposition grounded by no evidence.
    Zero,
    /// Multiplicative truth, the unit of `*`. The count normalization
    /// `n * n_1 / N = n` forces its count to be exactly `N`.
    One,
    /// Multiplicative falsity: also grounded by no evidence.
    Bottom,
}

impl Constant {
    pub fn truth_value(self, universe: UniverseConfig) -> TruthValue {
        match self {
            Constant::Top => TruthValue::new(1.0, Count::Infinite),
            Constant::One => TruthValue::finite(1.0, universe.size()),
            Constant::Zero | Constant::Bottom => TruthValue::finite(0.0, 0.0),
        }
    }

    pub fn dual(self) -> Constant {
        match self {
            Constant::Top => Constant::Zero,
            Constant::Zero => Constant::Top,
            Constant::One => Constant::Bottom,
            Constant::Bottom => Constant::One,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const N100: UniverseConfig = UniverseConfig { size: 100.0 };

    fn tv(s: f64, n: f64) -> TruthValue {
        TruthValue::finite(s, n)
    }

    #[test]
    fn additive_conjunction_takes_min_on_both_components() {
        let got = tv(0.5, 20.0).and_additive(tv(0.3, 10.0));
        assert_eq!(got, tv(0.3, 10.0));
    }

    #[test]
    fn additive_conjunction_is_idempotent() {
        let a = tv(0.42, 17.0);
        assert_eq!(a.and_additive(a), a);
    }

    #[test]
    fn top_is_the_unit_of_additive_conjunction() {
        let top = Constant::Top.truth_value(N100);
        let a = tv(0.3, 10.0);
        assert_eq!(a.and_additive(top), a);
        assert_eq!(top.and_additive(a), a);
    }

    #[test]
    fn additive_disjunction_takes_max_on_both_components() {
        assert_eq!(tv(0.5, 20.0).or_additive(tv(0.3, 10.0)), tv(0.5, 20.0));
        assert_eq!(tv(0.2, 5.0).or_additive(tv(0.2, 7.0)), tv(0.2, 7.0));
    }

    #[test]
    fn zero_is_the_unit_of_additive_disjunction() {
        let zero = Constant::Zero.truth_value(N100);
        let a = tv(0.3, 10.0);
        assert_eq!(a.or_additive(zero), a);
    }

    #[test]
    fn multiplicative_conjunction_multiplies_strengths_and_normalizes_counts() {
        let got = tv(0.5, 20.0).and_multiplicative(tv(0.3, 10.0), N100);
        assert_eq!(got, tv(0.15, 2.0));
    }

    #[test]
    fn one_is_the_unit_of_multiplicative_conjunction() {
        let one = Constant::One.truth_value(N100);
        let a = tv(0.3, 10.0);
        assert_eq!(a.and_multiplicative(one, N100), a);
    }

    #[test]
    fn infinite_evidence_absorbs_in_multiplicative_conjunction() {
        let got = TruthValue::new(0.9, Count::Infinite).and_multiplicative(tv(0.5, 10.0), N100);
        assert_eq!(got, TruthValue::new(0.45, Count::Infinite));
    }

    #[test]
    fn multiplicative_disjunction_probabilistic_sum() {
        let got = tv(0.5, 20.0).or_multiplicative(tv(0.3, 10.0), N100);
        assert_eq!(got, tv(0.65, 28.0));
    }

    #[test]
    fn bottom_is_the_unit_of_multiplicative_disjunction() {
        let bottom = Constant::Bottom.truth_value(N100);
        let a = tv(0.3, 10.0);
        assert_eq!(a.or_multiplicative(bottom, N100), a);
    }

    #[test]
    fn multiplicative_disjunction_direct_arithmetic() {
        // 0.5 + 0.5 - 0.25 and 50 + 50 - 2500/100; cross-checked against the
        // Monte Carlo estimator in the oracle tests.
        let got = tv(0.5, 50.0).or_multiplicative(tv(0.5, 50.0), N100);
        assert_eq!(got, tv(0.75, 75.0));
    }

    #[test]
    fn negation_complements_strength_and_keeps_count() {
        assert_eq!(tv(0.3, 10.0).negate(), tv(0.7, 10.0));
        assert_eq!(tv(0.5, 20.0).negate(), tv(0.5, 20.0));
    }

    #[test]
    fn bang_makes_evidence_unbounded() {
        assert_eq!(tv(0.3, 10.0).bang(), TruthValue::new(0.3, Count::Infinite));
        assert_eq!(
            TruthValue::new(0.3, Count::Infinite).bang(),
            TruthValue::new(0.3, Count::Infinite)
        );
        assert_eq!(tv(0.0, 0.0).bang(), TruthValue::new(0.0, Count::Infinite));
    }

    #[test]
    fn quest_composes_to_unbounded_evidence() {
        assert_eq!(tv(0.3, 10.0).quest(), TruthValue::new(0.3, Count::Infinite));
        assert_eq!(tv(1.0, 5.0).quest(), TruthValue::new(1.0, Count::Infinite));
    }

    #[test]
    fn constants_have_forced_counts() {
        assert_eq!(Constant::One.truth_value(N100), tv(1.0, 100.0));
        assert_eq!(Constant::Zero.truth_value(N100), tv(0.0, 0.0));
        assert_eq!(Constant::Bottom.truth_value(N100), tv(0.0, 0.0));
        assert_eq!(
            Constant::Top.truth_value(N100),
            TruthValue::new(1.0, Count::Infinite)
        );
    }

    #[test]
    fn constant_duals() {
        assert_eq!(Constant::Top.dual(), Constant::Zero);
        assert_eq!(Constant::Zero.dual(), Constant::Top);
        assert_eq!(Constant::One.dual(), Constant::Bottom);
        assert_eq!(Constant::Bottom.dual(), Constant::One);
    }

    #[test]
    fn extended_count_arithmetic() {
        let inf = Count::Infinite;
        let five = Count::finite(5.0);
        let zero = Count::finite(0.0);
        assert_eq!(inf.min(five), five);
        assert_eq!(inf.max(five), inf);
        assert_eq!(inf.expected_overlap(five, N100), inf);
        assert_eq!(inf.expected_overlap(zero, N100), zero);
        assert_eq!(inf.expected_overlap(inf, N100), inf);
        assert_eq!(inf.expected_union(zero, N100), inf);
        assert_eq!(five.expected_union(inf, N100), inf);
    }

    #[test]
    fn degenerate_strength_with_zero_count_is_allowed() {
        let v = tv(0.5, 0.0);
        assert_eq!(v.strength(), 0.5);
        assert_eq!(v.count(), Count::finite(0.0));
    }

    #[test]
    fn count_level_de_morgan_fails_by_design() {
        // Strength-level De Morgan holds (see the property below), but the
        // count components land on min vs max.
        let a = tv(0.5, 20.0);
        let b = tv(0.3, 10.0);
        let lhs = a.and_additive(b).negate();
        let rhs = a.negate().or_additive(b.negate());
        assert_eq!(lhs.count(), Count::finite(10.0));
        assert_eq!(rhs.count(), Count::finite(20.0));
        assert_ne!(lhs.count(), rhs.count());
    }

    #[test]
    fn exponential_isomorphism_counts_agree_strengths_do_not() {
        let a = tv(0.5, 10.0);
        let b = tv(0.5, 10.0);
        let additive_banged = a.and_additive(b).bang();
        let banged_tensored = a.bang().and_multiplicative(b.bang(), N100);
        assert_eq!(additive_banged.count(), Count::Infinite);
        assert_eq!(banged_tensored.count(), Count::Infinite);
        assert_eq!(additive_banged.strength(), 0.5);
        assert_eq!(banged_tensored.strength(), 0.25);
    }

    fn arb_strength() -> impl Strategy<Value = f64> {
        0.0f64..=1.0
    }

    fn arb_count() -> impl Strategy<Value = Count> {
        prop_oneof![
            9 => (0.0f64..=100.0).prop_map(Count::finite),
            1 => Just(Count::Infinite),
        ]
    }

    fn arb_tv() -> impl Strategy<Value = TruthValue> {
        (arb_strength(), arb_count()).prop_map(|(s, c)| TruthValue::new(s, c))
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12
    }

    fn counts_close(a: Count, b: Count) -> bool {
        match (a, b) {
            (Count::Infinite, Count::Infinite) => true,
            (Count::Finite(x), Count::Finite(y)) => close(x, y),
            _ => false,
        }
    }

    proptest! {
        #[test]
        fn strength_conjunctions_are_t_norms(a in arb_strength(), b in arb_strength(), c in arb_strength()) {
            for family in [false, true] {
                let t = |x: f64, y: f64| -> f64 {
                    let (vx, vy) = (tv(x, 1.0), tv(y, 1.0));
                    if family { vx.and_multiplicative(vy, N100).strength() } else { vx.and_additive(vy).strength() }
                };
                prop_assert_eq!(t(a, b), t(b, a));
                prop_assert!(close(t(a, t(b, c)), t(t(a, b), c)));
                prop_assert!(t(a.min(b), c) <= t(a.max(b), c));
                prop_assert!(close(t(a, 1.0), a));
            }
        }

        #[test]
        fn strength_disjunctions_are_dual_t_conorms(a in arb_strength(), b in arb_strength()) {
            let add = tv(a, 1.0).or_additive(tv(b, 1.0)).strength();
            let add_dual = 1.0 - tv(1.0 - a, 1.0).and_additive(tv(1.0 - b, 1.0)).strength();
            prop_assert!(close(add, add_dual));
            let mul = tv(a, 1.0).or_multiplicative(tv(b, 1.0), N100).strength();
            let mul_dual = 1.0 - tv(1.0 - a, 1.0).and_multiplicative(tv(1.0 - b, 1.0), N100).strength();
            prop_assert!(close(mul, mul_dual));
        }

        #[test]
        fn unit_laws_hold_on_full_truth_values(v in arb_tv()) {
            let top = Constant::Top.truth_value(N100);
            let zero = Constant::Zero.truth_value(N100);
            let one = Constant::One.truth_value(N100);
            let bottom = Constant::Bottom.truth_value(N100);
            prop_assert_eq!(v.and_additive(top), v);
            prop_assert_eq!(v.or_additive(zero), v);
            let via_one = v.and_multiplicative(one, N100);
            prop_assert_eq!(via_one.strength(), v.strength());
            prop_assert!(counts_close(via_one.count(), v.count()));
            let via_bottom = v.or_multiplicative(bottom, N100);
            prop_assert_eq!(via_bottom.strength(), v.strength());
            prop_assert!(counts_close(via_bottom.count(), v.count()));
        }

        #[test]
        fn mixed_distributivity_holds_on_both_components(a in arb_tv(), b in arb_tv(), c in arb_tv()) {
            // a * (b + c) against (a * b) + (a * c)
            let lhs = a.and_multiplicative(b.or_additive(c), N100);
            let rhs = a.and_multiplicative(b, N100).or_additive(a.and_multiplicative(c, N100));
            prop_assert!(close(lhs.strength(), rhs.strength()));
            prop_assert!(counts_close(lhs.count(), rhs.count()));
            // a | (b & c) against (a | b) & (a | c)
            let lhs = a.or_multiplicative(b.and_additive(c), N100);
            let rhs = a.or_multiplicative(b, N100).and_additive(a.or_multiplicative(c, N100));
            prop_assert!(close(lhs.strength(), rhs.strength()));
            prop_assert!(counts_close(lhs.count(), rhs.count()));
        }

        #[test]
        fn de_morgan_holds_at_the_strength_level(a in arb_tv(), b in arb_tv()) {
            let add = a.and_additive(b).negate().strength();
            let add_or = a.negate().or_additive(b.negate()).strength();
            prop_assert!(close(add, add_or));
            let mul = a.and_multiplicative(b, N100).negate().strength();
            let mul_or = a.negate().or_multiplicative(b.negate(), N100).strength();
            prop_assert!(close(mul, mul_or));
        }

        #[test]
        fn negation_is_involutive(v in arb_tv()) {
            let back = v.negate().negate();
            prop_assert!(close(back.strength(), v.strength()));
            prop_assert_eq!(back.count(), v.count());
        }

        #[test]
        fn quest_matches_its_defining_composition(v in arb_tv()) {
            let composed = v.negate().bang().negate();
            prop_assert!(close(v.quest().strength(), composed.strength()));
            prop_assert_eq!(v.quest().count(), composed.count());
        }

        #[test]
        fn exponential_isomorphism_at_the_count_level(a in arb_tv(), b in arb_tv()) {
            let lhs = a.and_additive(b).bang();
            let rhs = a.bang().and_multiplicative(b.bang(), N100);
            prop_assert!(lhs.count().is_infinite());
            prop_assert!(rhs.count().is_infinite());
        }
    }
}
