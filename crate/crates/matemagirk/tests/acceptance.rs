//! The acceptance gate: ten criteria, one test and one printed pass
//! line each. Every comparison here is exact; there are no tolerances.

use matemagirk::corpus::{Corpus, RecordedAnswer};
use matemagirk::egyptian::EgyptianFraction;
use matemagirk::exact::{BigInt, Rational, Tie};
use matemagirk::numerals::{self, DecodeMode, NumeralSystem};
use matemagirk::solver::{self, puzzles, VerificationOutcome};
use matemagirk::tables::{self, Parity, TableKind};
use matemagirk::units::Unit;

fn rat(s: &str) -> Rational {
    s.parse().unwrap()
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn corpus() -> Corpus {
    Corpus::bundled().unwrap()
}

#[test]
fn criterion_01_recorded_answers_reproduced() {
    let report = solver::verify_corpus(&corpus());
    let matched: Vec<u32> = report
        .iter()
        .filter(|v| v.outcome == VerificationOutcome::Match)
        .map(|v| v.id)
        .collect();
    assert_eq!(
        matched,
        vec![1, 2, 3, 6, 7, 8, 9, 10, 11, 12, 13, 14, 16, 17, 18, 19, 20, 21, 22, 23, 24]
    );

    let expected: &[(u32, &[&str])] = &[
        (1, &["1760"]),
        (2, &["144", "6720"]),
        (3, &["1686"]),
        (6, &["150"]),
        (7, &["420"]),
        (8, &["25"]),
        (9, &["360"]),
        (10, &["240"]),
        (11, &["2376"]),
        (12, &["42"]),
        (13, &["320"]),
        (14, &["126"]),
        (16, &["70"]),
        (17, &["24000"]),
        (18, &["4200"]),
        (19, &["175/8"]),
        (20, &["2160"]),
        (21, &["2240"]),
        (23, &["82944000", "1036800"]),
        (24, &["6/11"]),
    ];
    for (id, values) in expected {
        let verification = report.iter().find(|v| v.id == *id).unwrap();
        let computed: Vec<Rational> = verification
            .computed
            .iter()
            .map(|q| q.value.clone())
            .collect();
        let wanted: Vec<Rational> = values.iter().map(|s| rat(s)).collect();
        assert_eq!(computed, wanted, "problem {id}");
    }

    let shares: Vec<Rational> = report
        .iter()
        .find(|v| v.id == 22)
        .unwrap()
        .computed
        .iter()
        .map(|q| q.value.clone())
        .collect();
    let wanted: Vec<Rational> = (1..=10).map(|k| Rational::ratio(k * 100, 55)).collect();
    assert_eq!(shares, wanted);

    println!("criterion 1 pass: 21 problems match their recorded answers exactly");
}

#[test]
fn criterion_02_known_discrepancies() {
    let report = solver::verify_corpus(&corpus());
    for (id, computed, recorded) in [
        (4, "22000/7", "3200"),
        (5, "2000/9", "240"),
        (15, "44520/71", "616"),
    ] {
        let verification = report.iter().find(|v| v.id == id).unwrap();
        match &verification.outcome {
            VerificationOutcome::Discrepancy {
                recorded: r,
                computed: c,
            } => {
                assert_eq!(c, &vec![rat(computed)], "problem {id} computed");
                assert_eq!(r, &vec![rat(recorded)], "problem {id} recorded");
            }
            other => panic!("problem {id}: expected a discrepancy, got {other:?}"),
        }
    }
    println!("criterion 2 pass: problems 4, 5, 15 are discrepant with the expected values");
}

#[test]
fn criterion_03_unanswered_problems_solved() {
    let corpus = corpus();
    let principal = |id: u32| {
        solver::solve(&corpus.get(id).unwrap().model)
            .unwrap()
            .values
            .iter()
            .map(|q| q.value.clone())
            .collect::<Vec<Rational>>()
    };
    assert_eq!(principal(25), vec![rat("3276")]);
    assert_eq!(principal(26), vec![rat("250"), rat("125"), rat("125")]);
    assert_eq!(principal(27), vec![rat("672/37")]);

    let verification = solver::verify(corpus.get(27).unwrap());
    assert_eq!(verification.computed[0].unit, Unit::Hour);
    assert!(verification.non_integral, "672/37 hours must raise the flag");
    assert!(!solver::verify(corpus.get(25).unwrap()).non_integral);
    assert!(!solver::verify(corpus.get(26).unwrap()).non_integral);

    println!("criterion 3 pass: problems 25-27 solve to 3276, (250, 125, 125), 672/37 flagged");
}

#[test]
fn criterion_04_problem_22_shares() {
    let corpus = corpus();
    let problem = corpus.get(22).unwrap();
    assert_eq!(problem.recorded.len(), 10);
    let mut sum = Rational::zero();
    for (k, recorded) in (1i64..=10).zip(&problem.recorded) {
        let share = Rational::ratio(k * 100, 55);
        match recorded {
            RecordedAnswer::Egyptian { value, .. } => {
                assert!(value.check(&share), "share {k} should equal {share}");
            }
            other => panic!("share {k}: expected an Egyptian answer, got {other:?}"),
        }
        sum = sum + share;
    }
    assert_eq!(sum, rat("100"));
    println!("criterion 4 pass: the ten recorded share lists equal k*100/55 and sum to 100");
}

#[test]
fn criterion_05_egyptian_answers_19_and_24() {
    let churches: EgyptianFraction = "21 + 1/2 + 1/4 + 1/8".parse().unwrap();
    assert!(churches.check(&rat("175/8")));

    let pipes: EgyptianFraction = "1/4 + 1/6 + 1/12 + 1/22".parse().unwrap();
    assert!(pipes.check(&rat("6/11")));

    let greedy = EgyptianFraction::greedy(&rat("6/11")).unwrap();
    assert_eq!(greedy.whole(), &big(0));
    assert_eq!(greedy.denominators(), &[big(2), big(22)]);
    assert!(greedy.check(&rat("6/11")));
    assert_ne!(greedy.to_string(), pipes.to_string());

    println!("criterion 5 pass: recorded spellings check by value; greedy(6/11) is 1/2 + 1/22");
}

#[test]
fn criterion_06_numeral_codecs() {
    use DecodeMode::{Lenient, Strict};
    use NumeralSystem::{Anania, Traditional};

    for (text, value, system) in [
        ("իգ", 23u64, Traditional),
        ("եժ", 50, Anania),
        ("բճժզ", 216, Anania),
    ] {
        assert_eq!(numerals::encode(value, system, false).unwrap(), text);
        assert_eq!(numerals::decode(text, system, Strict).unwrap(), BigInt::from(value));
        assert_eq!(numerals::decode(text, system, Lenient).unwrap(), BigInt::from(value));
    }

    let hatted = numerals::encode(90_000_000u64, Traditional, true).unwrap();
    assert_eq!(hatted, "ք\u{302}");
    assert_eq!(
        numerals::decode(&hatted, Traditional, Strict).unwrap(),
        big(90_000_000)
    );

    for system in [Traditional, Anania] {
        for n in 1u64..=9999 {
            let text = numerals::encode(n, system, false).unwrap();
            assert_eq!(
                numerals::decode(&text, system, Strict).unwrap(),
                BigInt::from(n),
                "{system} {n}"
            );
            assert_eq!(
                numerals::decode(&text, system, Lenient).unwrap(),
                BigInt::from(n),
                "{system} {n}"
            );
        }
    }

    println!("criterion 6 pass: codec examples and the exhaustive 1..9999 round-trip hold");
}

#[test]
fn criterion_07_tables() {
    let division = tables::generate(TableKind::Division, Tie::HalfUp);
    let at = |n: i64| {
        division
            .iter()
            .find(|e| e.operands == [big(n)])
            .unwrap_or_else(|| panic!("no division entry for {n}"))
            .result
            .clone()
    };
    assert_eq!(at(17), big(353));

    let addition = tables::generate(TableKind::Addition, Tie::HalfUp);
    assert_eq!(addition.len(), 180);

    let parity = tables::generate(TableKind::Parity, Tie::HalfUp);
    let thirty = parity.iter().find(|e| e.result == big(30)).unwrap();
    assert_eq!(thirty.label, Some(Parity::Odd));

    for entry in &division {
        let n = &entry.operands[0];
        let gap = big(6000) - n * &entry.result;
        let magnitude = if gap < big(0) { -gap } else { gap };
        assert!(
            big(2) * magnitude <= *n,
            "division entry {n} strays by more than half"
        );
    }

    let with_ten = tables::generate(TableKind::Multiplication { include_ten: true }, Tie::HalfUp);
    let max = with_ten.iter().map(|e| e.result.clone()).max().unwrap();
    assert_eq!(max, big(90_000_000));

    println!(
        "criterion 7 pass: division(17) = 353, 180 additions, 30 is odd, \
         halves bounded, multiplication tops at 9*10^7"
    );
}

#[test]
fn criterion_08_residual_double_path() {
    let corpus = corpus();
    let report = solver::verify_corpus(&corpus);
    let mut checked = 0;
    for verification in &report {
        if verification.outcome != VerificationOutcome::Match {
            continue;
        }
        let problem = corpus.get(verification.id).unwrap();
        let solved = &verification.computed[0].value;
        let residual = solver::simulate(&problem.model, solved).unwrap();
        assert!(
            residual.is_zero(),
            "problem {}: residual {residual} at the solved value",
            problem.id
        );
        for delta in [rat("1"), rat("-1")] {
            let perturbed = solved + &delta;
            let residual = solver::simulate(&problem.model, &perturbed).unwrap();
            assert!(
                !residual.is_zero(),
                "problem {}: perturbed value {perturbed} still passes",
                problem.id
            );
        }
        checked += 1;
    }
    assert_eq!(checked, 21);
    println!("criterion 8 pass: simulation confirms all 21 matches and rejects perturbations");
}

#[test]
fn criterion_09_puzzles() {
    for hour in 1..=24 {
        for glasses in 1..=99 {
            assert_eq!(
                puzzles::dinner_decode(puzzles::dinner_encode(hour, glasses)).unwrap(),
                puzzles::DinnerReading::Dinner { hour, glasses }
            );
        }
        for glasses in [100, 200, 300] {
            assert_eq!(
                puzzles::dinner_decode(puzzles::dinner_encode(hour, glasses)).unwrap(),
                puzzles::DinnerReading::Refusal
            );
        }
    }

    assert_eq!(puzzles::tourists(), 36);

    for value in ["1", "7", "3/2", "365/4", "10001/3"] {
        let drams = rat(value);
        assert_eq!(puzzles::pouch_decode(&puzzles::pouch_encode(&drams)), drams);
    }

    assert_eq!(puzzles::eggs_grand_total(), 3_650_000);
    assert_eq!(puzzles::myriads(puzzles::eggs_grand_total()), "365 myriads");

    let sale = puzzles::wineskins();
    assert_eq!(sale.fair.value, rat("24"));
    assert_eq!(sale.trick.value, rat("25"));

    println!(
        "criterion 9 pass: dinner identity and refusals, tourists 36, pouch identity, \
         365 myriads of eggs, wineskins 24 vs 25"
    );
}

#[test]
fn criterion_10_greedy_properties() {
    for q in 2i64..=200 {
        for p in 1..q {
            let value = Rational::ratio(p, q);
            let ef = EgyptianFraction::greedy(&value).unwrap();
            assert_eq!(ef.whole(), &big(0), "{p}/{q}");
            assert!(
                ef.denominators().len() <= p as usize,
                "{p}/{q} took more than {p} steps"
            );
            assert!(ef.check(&value), "{p}/{q} value drifted");

            let mut remainder = value;
            let mut previous: Option<&BigInt> = None;
            for d in ef.denominators() {
                if let Some(prev) = previous {
                    assert!(prev < d, "{p}/{q}: denominators must increase");
                }
                let unit = Rational::new(1, d.clone()).unwrap();
                assert!(unit <= remainder, "{p}/{q}: 1/{d} overshoots");
                let coarser = Rational::new(1, d - 1u32).unwrap();
                assert!(
                    remainder < coarser,
                    "{p}/{q}: 1/{} would have fit before 1/{d}",
                    d - 1u32
                );
                remainder = remainder - unit;
                previous = Some(d);
            }
            assert!(remainder.is_zero());
        }
    }
    println!(
        "criterion 10 pass: greedy preserves value, increases denominators, \
         is maximal, and ends within p steps for all p/q up to 200"
    );
}
