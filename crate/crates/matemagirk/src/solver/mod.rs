//! Exact solvers for every problem class, an independent forward
//! simulation for cross-checking, and verification against recorded
//! answers.
//!
//! [`solve`] applies the closed form of each class and keeps a
//! step-by-step derivation. [`simulate`] deliberately avoids those
//! closed forms: it walks the narrative forward with a candidate value
//! (taking each stated fraction in turn, doubling and paying round by
//! round) and reports how far the story ends from the stated outcome.
//! The two paths agreeing at residual zero is the strongest internal
//! check this crate has.
//!
//! [`verify`] compares computed values against the recorded answers.
//! A mismatch is a [`VerificationOutcome::Discrepancy`], which is a
//! finding, not a failure: three of the bundled problems (4, 5, 15)
//! record answers inconsistent with their own statements, and the
//! harness's job is to surface exactly that.

pub mod puzzles;

use thiserror::Error;

use crate::corpus::{Corpus, Problem, ProblemModel, RecordedAnswer};
use crate::exact::{BigInt, Rational};
use crate::units::{Dimension, Quantity, Unit};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("the stated fractions take {levied} of the whole; nothing remains to solve for")]
    NothingRemains { levied: Rational },
    #[error("the chaser ({chaser} per day) never catches a leader doing {leader} per day")]
    ChaserNotFaster { leader: Rational, chaser: Rational },
    #[error("division by zero while computing {context}")]
    DivisionByZero { context: &'static str },
}

/// One narrated step of a derivation, with the exact value it reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationStep {
    pub description: String,
    pub value: Rational,
}

/// The solved values of a problem, in the order the question asks for
/// them, plus the worked derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub values: Vec<Quantity>,
    pub derivation: Vec<DerivationStep>,
}

impl Solution {
    /// The headline value (the total, the time, the first share).
    pub fn principal(&self) -> &Quantity {
        &self.values[0]
    }
}

/// Human labels for [`Solution::values`], in the same order.
pub fn value_labels(model: &ProblemModel) -> Vec<String> {
    match model {
        ProblemModel::FractionsOfWhole { part_prices, .. } => {
            let mut labels = vec!["total".to_string()];
            if !part_prices.is_empty() {
                labels.push("revenue".to_string());
            }
            labels
        }
        ProblemModel::FractionsOfRemainder { .. } => vec!["total".to_string()],
        ProblemModel::CatchUp { .. } => vec!["days to catch up".to_string()],
        ProblemModel::DoublingPayment { .. } => vec!["starting amount".to_string()],
        ProblemModel::ProportionalShares { weights, .. } => (1..=weights.len())
            .map(|k| format!("share {k}"))
            .collect(),
        ProblemModel::CombinedRates { .. } => vec!["time to finish".to_string()],
        ProblemModel::UnitAggregation { .. } => {
            vec!["total".to_string(), "consumers".to_string()]
        }
        ProblemModel::SelfReferentialSum { .. } => vec!["time".to_string()],
    }
}

fn sum(fractions: &[Rational]) -> Rational {
    fractions
        .iter()
        .fold(Rational::zero(), |acc, f| acc + f.clone())
}

struct Trace(Vec<DerivationStep>);

impl Trace {
    fn step(&mut self, description: impl Into<String>, value: &Rational) {
        self.0.push(DerivationStep {
            description: description.into(),
            value: value.clone(),
        });
    }
}

/// Solves a model exactly by its closed form.
pub fn solve(model: &ProblemModel) -> Result<Solution, SolveError> {
    let mut trace = Trace(Vec::new());
    let values = match model {
        ProblemModel::FractionsOfWhole {
            fractions,
            remainder,
            part_prices,
        } => {
            let levied = sum(fractions);
            trace.step("the stated fractions sum to", &levied);
            let kept = Rational::one() - &levied;
            if !kept.is_positive() {
                return Err(SolveError::NothingRemains { levied });
            }
            trace.step("so the remainder is this share of the whole", &kept);
            let total = remainder
                .value
                .checked_div(&kept)
                .expect("kept is positive");
            trace.step("total = remainder / share", &total);
            let mut values = vec![Quantity::new(total.clone(), remainder.unit)];
            if !part_prices.is_empty() {
                let mut revenue = Rational::zero();
                for (fraction, price) in part_prices {
                    let sold = fraction * &total;
                    trace.step(format!("{fraction} of the total is"), &sold);
                    let income = &sold * &price.value;
                    trace.step(format!("which at {price} apiece brings"), &income);
                    revenue = revenue + income;
                }
                trace.step("revenue in all", &revenue);
                values.push(Quantity::new(revenue, part_prices[0].1.unit));
            }
            values
        }
        ProblemModel::FractionsOfRemainder { stages, remainder } => {
            let mut kept = Rational::one();
            for (i, stage) in stages.iter().enumerate() {
                let levied = sum(stage);
                let retained = Rational::one() - &levied;
                if !retained.is_positive() {
                    return Err(SolveError::NothingRemains { levied });
                }
                kept = kept * retained;
                trace.step(format!("after stage {} the share kept is", i + 1), &kept);
            }
            let total = remainder.value.checked_div(&kept).expect("kept is positive");
            trace.step("total = remainder / kept share", &total);
            vec![Quantity::new(total, remainder.unit)]
        }
        ProblemModel::CatchUp {
            lead,
            rate_leader,
            rate_chaser,
        } => {
            let closing = rate_chaser - rate_leader;
            if !closing.is_positive() {
                return Err(SolveError::ChaserNotFaster {
                    leader: rate_leader.clone(),
                    chaser: rate_chaser.clone(),
                });
            }
            trace.step("the gap closes per day by", &closing);
            let days = lead.value.checked_div(&closing).expect("closing is positive");
            trace.step("days = lead / closing rate", &days);
            vec![Quantity::new(days, Unit::Day)]
        }
        ProblemModel::DoublingPayment {
            rounds,
            payment,
            final_amount,
        } => {
            let growth = Rational::from_integer(BigInt::from(2u32).pow(*rounds));
            trace.step(format!("{rounds} doublings multiply the purse by"), &growth);
            let paid = &payment.value * &(&growth - &Rational::one());
            trace.step("while the payments compound to", &paid);
            let start = (&final_amount.value + &paid)
                .checked_div(&growth)
                .expect("growth is a power of two");
            trace.step("starting amount = (final + compounded payments) / growth", &start);
            vec![Quantity::new(start, payment.unit)]
        }
        ProblemModel::ProportionalShares { total, weights } => {
            let weight_sum = Rational::from_integer(weights.iter().sum::<u64>());
            trace.step("the weights sum to", &weight_sum);
            let unit_share = total
                .value
                .checked_div(&weight_sum)
                .map_err(|_| SolveError::DivisionByZero {
                    context: "the sum of weights",
                })?;
            trace.step("one weight's worth of the total is", &unit_share);
            weights
                .iter()
                .map(|w| {
                    Quantity::new(
                        Rational::from_integer(*w) * unit_share.clone(),
                        total.unit,
                    )
                })
                .collect()
        }
        ProblemModel::CombinedRates { rates } => {
            let combined = sum(rates);
            trace.step("together they finish per hour", &combined);
            let time = Rational::one()
                .checked_div(&combined)
                .map_err(|_| SolveError::DivisionByZero {
                    context: "the combined rate",
                })?;
            trace.step("time = 1 / combined rate", &time);
            vec![Quantity::new(time, Unit::Hour)]
        }
        ProblemModel::UnitAggregation {
            containers,
            per_container,
            per_consumer,
        } => {
            let total =
                Rational::from_integer(*containers) * Rational::from_integer(*per_container);
            trace.step(
                format!("{containers} containers of {per_container} hold"),
                &total,
            );
            let consumers = total
                .checked_div(&Rational::from_integer(*per_consumer))
                .map_err(|_| SolveError::DivisionByZero {
                    context: "the amount per consumer",
                })?;
            trace.step(format!("at {per_consumer} each that took"), &consumers);
            vec![Quantity::count(total), Quantity::count(consumers)]
        }
        ProblemModel::SelfReferentialSum {
            self_fractions,
            target,
        } => {
            let multiplier = Rational::one() + sum(self_fractions);
            trace.step("the time plus its stated fractions comes to", &multiplier);
            let time = target
                .value
                .checked_div(&multiplier)
                .expect("multiplier exceeds one");
            trace.step("time = target / that multiplier", &time);
            vec![Quantity::new(time, target.unit)]
        }
    };
    Ok(Solution {
        values,
        derivation: trace.0,
    })
}

/// Replays the narrative forward with `candidate` standing in for the
/// unknown, and returns stated outcome minus simulated outcome. Zero
/// exactly when the candidate solves the problem.
///
/// This is the crate's independent second path: no closed forms, just
/// the story step by step.
pub fn simulate(model: &ProblemModel, candidate: &Rational) -> Result<Rational, SolveError> {
    match model {
        ProblemModel::FractionsOfWhole {
            fractions,
            remainder,
            ..
        } => {
            let mut left = candidate.clone();
            for fraction in fractions {
                left = left - fraction * candidate;
            }
            Ok(&remainder.value - &left)
        }
        ProblemModel::FractionsOfRemainder { stages, remainder } => {
            let mut left = candidate.clone();
            for stage in stages {
                let base = left.clone();
                for fraction in stage {
                    left = left - fraction * &base;
                }
            }
            Ok(&remainder.value - &left)
        }
        ProblemModel::CatchUp {
            lead,
            rate_leader,
            rate_chaser,
        } => {
            let leader_position = &lead.value + &(rate_leader * candidate);
            let chaser_position = rate_chaser * candidate;
            Ok(chaser_position - leader_position)
        }
        ProblemModel::DoublingPayment {
            rounds,
            payment,
            final_amount,
        } => {
            let mut purse = candidate.clone();
            for _ in 0..*rounds {
                purse = &purse + &purse;
                purse = purse - &payment.value;
            }
            Ok(&final_amount.value - &purse)
        }
        ProblemModel::ProportionalShares { total, weights } => {
            // The candidate is the first share; the others follow the
            // weight ratios.
            let first_weight = Rational::from_integer(weights[0]);
            let mut handed_out = Rational::zero();
            for w in weights {
                let share = candidate
                    .checked_div(&first_weight)
                    .map_err(|_| SolveError::DivisionByZero {
                        context: "the first weight",
                    })?
                    * Rational::from_integer(*w);
                handed_out = handed_out + share;
            }
            Ok(&total.value - &handed_out)
        }
        ProblemModel::CombinedRates { rates } => {
            let mut filled = Rational::zero();
            for rate in rates {
                filled = filled + rate * candidate;
            }
            Ok(Rational::one() - filled)
        }
        ProblemModel::UnitAggregation {
            containers,
            per_container,
            ..
        } => {
            let mut stock = Rational::zero();
            for _ in 0..*containers {
                stock = stock + Rational::from_integer(*per_container);
            }
            Ok(stock - candidate)
        }
        ProblemModel::SelfReferentialSum {
            self_fractions,
            target,
        } => {
            let mut reached = candidate.clone();
            for fraction in self_fractions {
                reached = reached + fraction * candidate;
            }
            Ok(&target.value - &reached)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerificationOutcome {
    /// Every recorded value equals the corresponding computed value.
    Match,
    /// At least one recorded value disagrees with the computation.
    Discrepancy {
        recorded: Vec<Rational>,
        computed: Vec<Rational>,
    },
    /// The source records no answer to compare against.
    NoRecordedAnswer,
    /// The model itself cannot be solved.
    Unsolvable(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub id: u32,
    pub outcome: VerificationOutcome,
    /// Raised when a solution that counts discrete things (or reads a
    /// clock) is not a whole number.
    pub non_integral: bool,
    pub computed: Vec<Quantity>,
}

/// Whether a non-integral value of this unit is worth flagging. Heads,
/// grains, and eggs come in wholes; a clock is read in whole hours. Money,
/// weight, volume, and elapsed time divide freely.
fn counts_discrete_things(model: &ProblemModel, unit: Unit) -> bool {
    matches!(unit.dimension(), Dimension::Count | Dimension::Grain)
        || matches!(model, ProblemModel::SelfReferentialSum { .. })
}

/// Solves one problem and compares against its recorded answers.
/// Comparison is by exact rational value; Egyptian-fraction answers
/// count as equal whenever their value is, whatever their spelling.
pub fn verify(problem: &Problem) -> Verification {
    let solution = match solve(&problem.model) {
        Ok(s) => s,
        Err(e) => {
            return Verification {
                id: problem.id,
                outcome: VerificationOutcome::Unsolvable(e.to_string()),
                non_integral: false,
                computed: Vec::new(),
            }
        }
    };
    let non_integral = solution
        .values
        .iter()
        .any(|q| counts_discrete_things(&problem.model, q.unit) && !q.value.is_integer());
    let outcome = if problem.recorded.is_empty() {
        VerificationOutcome::NoRecordedAnswer
    } else {
        let agrees = problem.recorded.len() <= solution.values.len()
            && problem
                .recorded
                .iter()
                .zip(&solution.values)
                .all(|(recorded, computed)| match recorded {
                    RecordedAnswer::Quantity(q) => q.value == computed.value,
                    RecordedAnswer::Egyptian { value, .. } => value.check(&computed.value),
                });
        if agrees {
            VerificationOutcome::Match
        } else {
            VerificationOutcome::Discrepancy {
                recorded: problem.recorded.iter().map(RecordedAnswer::value).collect(),
                computed: solution.values.iter().map(|q| q.value.clone()).collect(),
            }
        }
    };
    Verification {
        id: problem.id,
        outcome,
        non_integral,
        computed: solution.values,
    }
}

/// Verifies every problem, ordered by id.
pub fn verify_corpus(corpus: &Corpus) -> Vec<Verification> {
    let mut report: Vec<Verification> = corpus.problems.iter().map(verify).collect();
    report.sort_by_key(|v| v.id);
    report
}
