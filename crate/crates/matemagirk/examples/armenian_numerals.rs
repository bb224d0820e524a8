//! The two Armenian numeral systems, with the hat mark for myriads.
//!
//! The traditional system gives all 36 letters of the classical
//! alphabet a value (1..9, 10..90, 100..900, 1000..9000) and simply
//! adds them up. Anania's own system needs just twelve letters: the
//! nine digits, and multipliers for ten, hundred, and thousand.
//!
//! ```sh
//! cargo run --example armenian_numerals
//! ```

use matemagirk::exact::BigInt;
use matemagirk::numerals::{decode, encode, letter_table, DecodeMode, NumeralSystem};

fn main() {
    use NumeralSystem::{Anania, Traditional};

    // The letter values themselves.
    let traditional = letter_table(Traditional);
    let anania = letter_table(Anania);
    println!("traditional letters: {} of them", traditional.len());
    for (letter, value) in traditional.iter().take(3) {
        println!("  {letter} = {value}");
    }
    println!("  ... up to {} = {}", traditional[35].0, traditional[35].1);
    println!("anania letters:      {} of them", anania.len());
    for (letter, value) in &anania[9..] {
        println!("  {letter} multiplies by {value}");
    }

    // The same numbers, spelled both ways.
    println!("{:>8}  {:<12} {}", "value", "traditional", "anania");
    for n in [23u64, 50, 216, 1760, 9999] {
        println!(
            "{n:>8}  {:<12} {}",
            encode(n, Traditional, false).unwrap(),
            encode(n, Anania, false).unwrap(),
        );
    }

    // A combining circumflex multiplies a letter by 10,000, lifting
    // the ceiling from 9,999 to 99,999,999.
    for n in [90_000_000u64, 24_000, 42_0042] {
        let spelled = encode(n, Traditional, true).unwrap();
        println!("{n} with the hat: {spelled}");
        assert_eq!(decode(&spelled, Traditional, DecodeMode::Strict).unwrap(), BigInt::from(n));
    }

    // Strict decoding accepts only the canonical spelling; lenient
    // decoding sums whatever letters it is given.
    let scrambled = "գի";
    println!(
        "lenient {scrambled} = {}",
        decode(scrambled, Anania, DecodeMode::Lenient).unwrap()
    );
    match decode(scrambled, Anania, DecodeMode::Strict) {
        Ok(v) => println!("strict {scrambled} = {v}"),
        Err(e) => println!("strict {scrambled} is refused: {e}"),
    }

    // Errors carry byte offsets into the input.
    let err = decode("ի7գ", Traditional, DecodeMode::Lenient).unwrap_err();
    println!("decoding ի7գ fails: {err}");
}
