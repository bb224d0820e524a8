//! Solving problems from the bundled collection, with derivations.
//!
//! ```sh
//! cargo run --example solve_problem
//! ```

use matemagirk::corpus::Corpus;
use matemagirk::egyptian::EgyptianFraction;
use matemagirk::solver::{self, value_labels};

fn main() {
    let corpus = Corpus::bundled().unwrap();

    // A problem with two asked-for values: how many pearls, and what
    // they sold for.
    let pearls = corpus.get(2).unwrap();
    let solution = solver::solve(&pearls.model).unwrap();
    println!("problem {}: {}", pearls.id, pearls.title);
    for (label, value) in value_labels(&pearls.model).iter().zip(&solution.values) {
        println!("  {label}: {value}");
    }

    // Every solution carries its worked derivation.
    let duties = corpus.get(11).unwrap();
    let solution = solver::solve(&duties.model).unwrap();
    println!("\nproblem {}: {}", duties.id, duties.title);
    for step in &solution.derivation {
        println!("  {}: {}", step.description, step.value);
    }
    println!("  = {}", solution.principal());

    // Fractional answers are exact, and spell naturally as unit
    // fractions.
    let churches = corpus.get(19).unwrap();
    let solution = solver::solve(&churches.model).unwrap();
    let amount = &solution.principal().value;
    let spelled = EgyptianFraction::greedy(amount).unwrap();
    println!("\nproblem {}: {}", churches.id, churches.title);
    println!("  starting amount: {amount} dahekan, that is {spelled}");

    // The independent check: replay the story at the solved value and
    // at a wrong one.
    let at_solution = solver::simulate(&churches.model, amount).unwrap();
    let at_wrong = solver::simulate(&churches.model, &"22".parse().unwrap()).unwrap();
    println!("  replayed at the solution the story closes with residual {at_solution}");
    println!("  replayed at 22 it misses by {at_wrong}");
}
