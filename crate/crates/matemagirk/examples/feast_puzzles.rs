//! The five after-dinner puzzles, worked end to end.
//!
//! ```sh
//! cargo run --example feast_puzzles
//! ```

use matemagirk::exact::Rational;
use matemagirk::solver::puzzles;

fn main() {
    // The dinner trick. The guest's arithmetic buries the hour and
    // the glasses in one number; the host digs them back out.
    let reported = puzzles::dinner_encode(6, 3);
    println!("a guest who dined at hour 6 with 3 glasses reports {reported}");
    match puzzles::dinner_decode(reported).unwrap() {
        puzzles::DinnerReading::Dinner { hour, glasses } => {
            println!("  the host announces: hour {hour}, {glasses} glasses");
        }
        puzzles::DinnerReading::Refusal => println!("  the host refuses"),
    }
    // A claim of a hundred glasses caves in on itself.
    let boast = puzzles::dinner_encode(6, 100);
    println!(
        "a boast of 100 glasses reports {boast}: {:?}",
        puzzles::dinner_decode(boast).unwrap()
    );

    // The tourists. A band, the band again, half, a quarter, and one
    // more make 100.
    println!("\nthe first band of tourists numbered {}", puzzles::tourists());
    println!(
        "  and had the total been 199, it would have been {}",
        puzzles::tourists_for_total(199)
    );

    // The pouch: the five-step patter multiplies by ten, nothing more.
    let secret: Rational = "3/2".parse().unwrap();
    let reported = puzzles::pouch_encode(&secret);
    println!("\na pouch of {secret} drams reports {reported}");
    println!("  divided by ten: {} drams", puzzles::pouch_decode(&reported));

    // The eggs, counted in myriads.
    let eggs = puzzles::eggs_grand_total();
    println!("\nthe year of eggs comes to {eggs}, spoken as {}", puzzles::myriads(eggs));

    // The wineskins: selling five-for-two in two unequal halves
    // quietly earns an extra dram.
    let sale = puzzles::wineskins();
    println!(
        "\nwineskins sold fairly bring {}; split into threes and twos, {}",
        sale.fair, sale.trick
    );
    println!("  the trick is worth {}", sale.gap());
}
