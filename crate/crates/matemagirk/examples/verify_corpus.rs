//! Verifying the whole collection against its recorded answers.
//!
//! Twenty-one problems match exactly. Three (4, 5, 15) are known to
//! disagree with their own statements; the harness reports them
//! rather than repairing them. Three more record no answer at all.
//!
//! ```sh
//! cargo run --example verify_corpus
//! ```

use matemagirk::corpus::Corpus;
use matemagirk::solver::{self, VerificationOutcome};

fn main() {
    let corpus = Corpus::bundled().unwrap();
    let report = solver::verify_corpus(&corpus);

    let mut matched = 0;
    for verification in &report {
        let problem = corpus.get(verification.id).unwrap();
        match &verification.outcome {
            VerificationOutcome::Match => {
                matched += 1;
            }
            VerificationOutcome::Discrepancy { recorded, computed } => {
                let spell = |values: &[matemagirk::exact::Rational]| {
                    values
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(", ")
                };
                println!(
                    "problem {:2} ({}) disagrees with its record:",
                    verification.id, problem.title
                );
                println!("    computed {}", spell(computed));
                println!("    recorded {}", spell(recorded));
            }
            VerificationOutcome::NoRecordedAnswer => {
                let values: Vec<String> = verification
                    .computed
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                let flag = if verification.non_integral {
                    "  [not a whole number]"
                } else {
                    ""
                };
                println!(
                    "problem {:2} ({}) has no recorded answer; computed {}{flag}",
                    verification.id,
                    problem.title,
                    values.join(", "),
                );
            }
            VerificationOutcome::Unsolvable(reason) => {
                println!("problem {:2} is unsolvable: {reason}", verification.id);
            }
        }
    }
    println!("\n{matched} of {} problems match their records exactly", report.len());
}
