//! Writing problems of your own in the corpus format.
//!
//! The format is line-oriented: one `problem <id> "<title>"` header,
//! a `class`, the class's keys, optional recorded answers and notes,
//! and `end`. Parsing validates as it goes and reports line numbers.
//!
//! ```sh
//! cargo run --example custom_corpus
//! ```

use matemagirk::corpus::Corpus;
use matemagirk::solver::{self, VerificationOutcome};

const MY_PROBLEMS: &str = r#"
# A modern entry in a seventh-century format.
problem 1 "The bakery's flour"
  class fractions-of-whole
  fraction 1/4
  fraction 1/6
  remainder 21 basket
  answer 36 basket
end

problem 2 "Two scribes copying a psalter"
  class combined-rates
  rate 1/6
  rate 1/10
  answer 15/4 hour
end
"#;

fn main() {
    let corpus = Corpus::parse(MY_PROBLEMS).unwrap();
    println!("parsed {} problems", corpus.problems.len());

    for verification in solver::verify_corpus(&corpus) {
        let problem = corpus.get(verification.id).unwrap();
        let outcome = match verification.outcome {
            VerificationOutcome::Match => "matches its answer",
            _ => "does not match",
        };
        println!(
            "  {} -> {} ({outcome})",
            problem.title,
            verification.computed[0]
        );
    }

    // Serialization round-trips: write the collection back out and
    // parse it again.
    let text = corpus.serialize();
    let reparsed = Corpus::parse(&text).unwrap();
    assert_eq!(reparsed.problems.len(), corpus.problems.len());
    println!("\nserialized form:\n{text}");

    // Mistakes are reported with their line number.
    let broken = "problem 1 \"Too greedy\"\n  class fractions-of-whole\n  fraction 5/4\n";
    match Corpus::parse(broken) {
        Ok(_) => unreachable!(),
        Err(e) => println!("a bad file is refused: {e}"),
    }
}
