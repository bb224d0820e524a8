//! Exact rational arithmetic: no floats anywhere, so every
//! seventh and eleventh comes out whole.
//!
//! ```sh
//! cargo run --example exact_arithmetic
//! ```

use matemagirk::exact::{BinOp, Rational, Tie};

fn main() {
    // Values parse from "p" or "p/q" and print the same way.
    let owed: Rational = "175/8".parse().unwrap();
    println!("owed: {owed}");
    println!("  floor: {}", owed.floor_int());
    println!("  as a decimal it would never terminate; as a fraction it is exact");

    // The four operations, also available through an operator enum.
    let a = Rational::ratio(37, 44);
    let b = Rational::ratio(7, 44);
    for op in [BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div] {
        let result = Rational::apply(op, &a, &b).unwrap();
        println!("{a} {op:?} {b} = {result}");
    }

    // Division by zero is an error value, not a panic.
    let err = a.checked_div(&Rational::zero()).unwrap_err();
    println!("dividing by zero reports: {err}");

    // Rounding to the nearest integer must pick a side for exact
    // halves. 6000/32 = 187.5 lands differently under the two rules.
    let half = Rational::ratio(6000, 32);
    println!(
        "{half} rounds to {} half-up and {} half-down",
        half.round_nearest(Tie::HalfUp),
        half.round_nearest(Tie::HalfDown),
    );

    // Chains of exact operations cancel perfectly.
    let third = Rational::ratio(1, 3);
    let sum = &third + &third + third.clone();
    assert_eq!(sum, Rational::one());
    println!("1/3 + 1/3 + 1/3 = {sum}, exactly");
}
