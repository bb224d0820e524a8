//! Egyptian fractions: a whole part plus distinct unit fractions.
//!
//! ```sh
//! cargo run --example egyptian_fractions
//! ```

use matemagirk::egyptian::EgyptianFraction;
use matemagirk::exact::{BinOp, Rational};

fn main() {
    // The greedy rule: always take the largest unit fraction that fits.
    for input in ["7/15", "6/11", "175/8"] {
        let value: Rational = input.parse().unwrap();
        let ef = EgyptianFraction::greedy(&value).unwrap();
        println!("{input} = {ef}");
    }

    // Greedy can be spectacular. 5/121 needs only five terms, but
    // look at them.
    let awkward = EgyptianFraction::greedy(&"5/121".parse().unwrap()).unwrap();
    println!("5/121 = {awkward}");

    // A value has many spellings. The old records write 175/8 as
    // halves of halves, not greedily; both check out by value.
    let recorded: EgyptianFraction = "21 + 1/2 + 1/4 + 1/8".parse().unwrap();
    let greedy = EgyptianFraction::greedy(&"175/8".parse().unwrap()).unwrap();
    println!("recorded {recorded} and greedy {greedy}");
    let value: Rational = "175/8".parse().unwrap();
    println!(
        "  same value? {} and {}",
        recorded.check(&value),
        greedy.check(&value)
    );
    println!("  same spelling? {}", recorded == greedy);

    // Arithmetic on spellings goes through the exact value and comes
    // back out canonical.
    let half: EgyptianFraction = "1/2".parse().unwrap();
    let third: EgyptianFraction = "1/3".parse().unwrap();
    let sum = half.combine(BinOp::Add, &third).unwrap();
    println!("1/2 + 1/3 = {sum} (value {})", sum.value());

    // Structure is enforced: denominators must be distinct and
    // increasing, so "1/3 + 1/3" is rejected at parse time.
    let err = "1/3 + 1/3".parse::<EgyptianFraction>().unwrap_err();
    println!("parsing 1/3 + 1/3 fails: {err}");
}
