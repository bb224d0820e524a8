//! The five reckoning tables: addition, multiplication, subtraction,
//! division, and parity.
//!
//! ```sh
//! cargo run --example arithmetic_tables
//! ```

use matemagirk::exact::Tie;
use matemagirk::numerals::NumeralSystem;
use matemagirk::tables::{generate, render, RenderFormat, TableKind};

fn main() {
    // Sizes first. The scales run over units, tens, hundreds, and
    // thousands, which is why addition has 45 * 4 = 180 facts.
    for kind in [
        TableKind::Addition,
        TableKind::Multiplication { include_ten: false },
        TableKind::Multiplication { include_ten: true },
        TableKind::Subtraction,
        TableKind::Division,
        TableKind::Parity,
    ] {
        let entries = generate(kind, Tie::HalfUp);
        println!("{kind:?}: {} entries", entries.len());
    }

    // The division table shares 6000 among n takers, rounded to the
    // nearest whole. Its first rows:
    let division = generate(TableKind::Division, Tie::HalfUp);
    let text = render(TableKind::Division, &division, RenderFormat::Text, None).unwrap();
    for line in text.lines().take(6) {
        println!("{line}");
    }
    println!("...");

    // Four divisors hit an exact half and care about the tie rule.
    let down = generate(TableKind::Division, Tie::HalfDown);
    for (up_entry, down_entry) in division.iter().zip(&down) {
        if up_entry.result != down_entry.result {
            println!(
                "6000 / {} rounds to {} half-up but {} half-down",
                up_entry.operands[0], up_entry.result, down_entry.result
            );
        }
    }

    // Parity is judged by the leading coefficient, so 30 counts as
    // odd. That is the table's own claim, faithfully reproduced.
    let parity = generate(TableKind::Parity, Tie::HalfUp);
    let csv = render(TableKind::Parity, &parity, RenderFormat::Csv, None).unwrap();
    for line in csv.lines().filter(|l| l.starts_with("3")).take(3) {
        println!("parity: {line}");
    }

    // Any table renders in Armenian numerals; the hat covers every
    // value that occurs.
    let csv = render(
        TableKind::Division,
        &division,
        RenderFormat::Csv,
        Some(NumeralSystem::Traditional),
    )
    .unwrap();
    for line in csv.lines().skip(1).take(3) {
        println!("in numerals: {line}");
    }
}
