//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Tolerances are fixed here and nowhere else: counts and maxima are exact,
//! the one real-valued bound is compared as a rational, and every wall-clock
//! budget is the stated one.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rote_cli::verify::run_rows;
use rote_core::morphism::NamedMorphism;
use rote_core::properness::find_dominated_xyxyx;
use rote_core::repetition::{
    is_power_free, max_factor_exponent, suffix_is_52plus_power, Exponent, Threshold,
};
use rote_core::search::paper_table;
use rote_core::structure::{
    classify_by_length4, decompose, f_decode, g_decode, generate_case_word, h_decode, reencode, CaseTag,
    DecodeError, DecodeResult, DecomposeOptions, FactorClass,
};
use rote_core::{Morphism, Word};

/// Upper end of the exponent bracket, 2.4808628, as a fraction.
const EXPONENT_CEILING: (usize, usize) = (24_808_628, 10_000_000);
const LOWER_EXPONENT: (usize, usize) = (12, 5);
const RANDOM_SEED: u64 = 0x5eed_2025;

/// Criteria that fail as stated. The binary word tau(G) has complexity 2n and
/// contains 0110011001, exponent 5/2; the values 2n+1 and 2.4808... belong to
/// the ternary word G, which criterion 6c checks. Such a criterion still
/// prints FAIL; the run only aborts if it unexpectedly starts passing.
const KNOWN_FAILURES: &[&str] = &["6"];

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn rote_prefix(len: usize) -> Word {
    let u = NamedMorphism::F.morphism().iterate_prefix(0, len).unwrap();
    NamedMorphism::G.morphism().apply(&u).unwrap().prefix(len)
}

fn theta_prefix(len: usize) -> Word {
    NamedMorphism::Theta.morphism().iterate_prefix(0, len).unwrap()
}

fn first_complexity_miss(
    w: &Word,
    max_n: usize,
    expected: impl Fn(usize) -> usize,
) -> Option<(usize, usize)> {
    (1..=max_n).map(|n| (n, w.factor_complexity(n))).find(|&(n, c)| c != expected(n))
}

fn complexity_detail(miss: Option<(usize, usize)>, formula: &str) -> String {
    match miss {
        None => format!("complexity {formula} for n in 1..=100"),
        Some((n, c)) => format!("complexity at n={n} is {c}, not {formula}"),
    }
}

fn in_bracket(e: Exponent) -> bool {
    e >= Exponent::new(LOWER_EXPONENT.0, LOWER_EXPONENT.1)
        && e < Exponent::new(EXPONENT_CEILING.0, EXPONENT_CEILING.1)
}

fn table() -> Verdict {
    let rows = paper_table();
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let results = run_rows(&rows, 200, threads);
    let got: Vec<usize> = results.iter().map(|r| r.outcome.max_length).collect();
    let bad: Vec<usize> =
        results.iter().enumerate().filter(|(_, r)| !r.matches()).map(|(i, _)| i + 1).collect();
    verdict(bad.is_empty(), format!("{} rows, maxima {got:?}, mismatched rows {bad:?}", rows.len()))
}

fn identities() -> Verdict {
    use NamedMorphism::*;
    let c = |a: &Morphism, b: &Morphism| Morphism::compose(a, b).unwrap();
    let first = Tau.morphism().equal_on_letters(&c(&G.morphism(), &Sigma.morphism()));
    let second = c(&Theta.morphism(), &Theta.morphism())
        .equal_on_letters(&c(&SigmaInv.morphism(), &c(&H.morphism(), &Sigma.morphism())));
    verdict(first && second, format!("tau = g.sigma: {first}, theta^2 = sigma_inv.h.sigma: {second}"))
}

fn rote_power_free() -> Verdict {
    match is_power_free(&rote_prefix(10_000), &Threshold::FIVE_HALVES_PLUS) {
        Ok(()) => verdict(true, "10000 letters, no 5/2+ power"),
        Err(w) => verdict(false, format!("witness {w:?}")),
    }
}

fn rote_complexity() -> Verdict {
    let miss = first_complexity_miss(&rote_prefix(20_000), 100, |n| 2 * n);
    verdict(miss.is_none(), complexity_detail(miss, "2n"))
}

fn four_cases() -> Verdict {
    let mut notes = Vec::new();
    let mut pass = true;
    for tag in CaseTag::ALL {
        let w = generate_case_word(tag, 4, 4000);
        let class = classify_by_length4(&w).unwrap();
        let classified = class == FactorClass::Case(tag);
        let note = match decompose(&w, 4, &DecomposeOptions::default()) {
            Ok(cert) => {
                let ok = classified && cert.depth_achieved == 4 && cert.all_levels_passed();
                pass &= ok;
                let via = |pick: fn(&rote_core::structure::Level) -> bool| {
                    cert.levels.iter().filter(|l| pick(l)).count()
                };
                let proper = via(|l| l.proper.as_ref().is_some_and(|r| r.passed()));
                let anti = via(|l| l.antiproper.as_ref().is_some_and(|r| r.passed()));
                format!(
                    "{tag}: {class}, depth {}, proper {proper}/5, antiproper {anti}/5",
                    cert.depth_achieved
                )
            }
            Err(e) => {
                pass = false;
                format!("{tag}: {e:?}")
            }
        };
        notes.push(note);
    }
    verdict(pass, notes.join("; "))
}

/// The criterion as stated, on the binary word `tau(G)`.
fn tau_g_example() -> Verdict {
    let g = theta_prefix(5000);
    let w = NamedMorphism::Tau.morphism().apply(&g).unwrap().prefix(5000);
    let class = classify_by_length4(&w).unwrap();
    let miss = first_complexity_miss(&w, 100, |n| 2 * n + 1);
    let (e, _) = max_factor_exponent(&w).unwrap();
    let pass = class == FactorClass::Case(CaseTag::FRev) && miss.is_none() && in_bracket(e);
    verdict(
        pass,
        format!("{class}; {}; max exponent {e} = {:.7}", complexity_detail(miss, "2n+1"), e.to_f64()),
    )
}

/// The same three measurements on the ternary word `G` itself.
fn ternary_g_companion() -> Verdict {
    let g = theta_prefix(5000);
    let miss = first_complexity_miss(&g, 100, |n| 2 * n + 1);
    let (e, _) = max_factor_exponent(&g).unwrap();
    verdict(
        miss.is_none() && in_bracket(e),
        format!("{}; max exponent {e} = {:.7}", complexity_detail(miss, "2n+1"), e.to_f64()),
    )
}

fn all_words(alphabet: u8, len: usize) -> impl Iterator<Item = Word> {
    let total = (alphabet as usize).pow(len as u32);
    (0..total).map(move |mut code| {
        let letters = (0..len)
            .map(|_| {
                let a = (code % alphabet as usize) as u8;
                code /= alphabet as usize;
                a
            })
            .collect();
        Word::new(letters, alphabet).unwrap()
    })
}

fn naive_period(s: &[u8]) -> usize {
    (1..=s.len()).find(|&p| (0..s.len() - p).all(|i| s[i] == s[i + p])).unwrap()
}

fn oracles() -> Verdict {
    let mut binary = 0usize;
    let mut suffix_disagreements = 0usize;
    for len in 0..=14 {
        for w in all_words(2, len) {
            let s = w.letters();
            let brute = (0..s.len()).any(|i| (s.len() - i) * 2 > 5 * naive_period(&s[i..]));
            suffix_disagreements += usize::from(brute != suffix_is_52plus_power(s));
            binary += 1;
        }
    }
    let g = NamedMorphism::G.morphism();
    let (mut ternary, mut dominated, mut lift_failures) = (0usize, 0usize, 0usize);
    for len in 0..=10 {
        for u in all_words(3, len) {
            ternary += 1;
            if let Some(occ) = find_dominated_xyxyx(&u) {
                dominated += 1;
                let x = u.factor(occ.start..occ.start + occ.x_length);
                let y = u.factor(occ.start + occ.x_length..occ.start + occ.period());
                let gx = g.apply(&x).unwrap();
                let gy = g.apply(&y).unwrap();
                let power =
                    gx.concat(&gy).unwrap().concat(&gx).unwrap().concat(&gy).unwrap().concat(&gx).unwrap();
                let is_power = is_power_free(&power, &Threshold::FIVE_HALVES_PLUS).is_err();
                let inside = g.apply(&u).unwrap().find(power.letters()).is_some();
                lift_failures += usize::from(!(is_power && inside));
            }
        }
    }
    verdict(
        suffix_disagreements == 0 && lift_failures == 0,
        format!(
            "{binary} binary words, {suffix_disagreements} disagreements; {ternary} ternary words, \
             {dominated} with dominated xyxyx, {lift_failures} lifting failures"
        ),
    )
}

type Decoder = fn(&Word) -> Result<DecodeResult, DecodeError>;

fn round_trips() -> Verdict {
    let mut rng = StdRng::seed_from_u64(RANDOM_SEED);
    let decoders: [(NamedMorphism, Decoder); 3] =
        [(NamedMorphism::F, f_decode), (NamedMorphism::H, h_decode), (NamedMorphism::G, g_decode)];
    let mut failures = 0usize;
    for _ in 0..10_000 {
        let len = rng.gen_range(0..=50);
        let v = Word::new((0..len).map(|_| rng.gen_range(0..3u8)).collect(), 3).unwrap();
        for (m, decode) in &decoders {
            let m = m.morphism();
            let image = m.apply(&v).unwrap();
            let ok = match decode(&image) {
                Ok(r) => {
                    r.preimage == v
                        && r.dropped_prefix == 0
                        && r.truncated_suffix == 0
                        && reencode(&m, &image, &r).unwrap() == image
                }
                Err(_) => false,
            };
            failures += usize::from(!ok);
        }
    }
    verdict(failures == 0, format!("10000 words x 3 morphisms, {failures} failures"))
}

struct Criterion {
    id: &'static str,
    name: &'static str,
    budget: Duration,
    run: fn() -> Verdict,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: "1", name: "backtrack table", budget: secs(60), run: table },
        Criterion { id: "2", name: "morphism identities", budget: secs(1), run: identities },
        Criterion { id: "3", name: "g(f^w(0)) avoids 5/2+ powers", budget: secs(30), run: rote_power_free },
        Criterion { id: "4", name: "g(f^w(0)) complexity 2n", budget: secs(30), run: rote_complexity },
        Criterion { id: "5", name: "four cases decompose", budget: secs(60), run: four_cases },
        Criterion { id: "6", name: "tau(G) example", budget: secs(60), run: tau_g_example },
        Criterion { id: "6c", name: "G companion", budget: secs(60), run: ternary_g_companion },
        Criterion { id: "7", name: "oracle equivalence", budget: secs(300), run: oracles },
        Criterion { id: "8", name: "round-trip decoding", budget: secs(30), run: round_trips },
    ];
    let mut failed = Vec::new();
    let mut surprises = Vec::new();
    for c in &criteria {
        let started = Instant::now();
        let v = (c.run)();
        let elapsed = started.elapsed();
        let pass = v.pass && elapsed <= c.budget;
        let known = KNOWN_FAILURES.contains(&c.id);
        println!(
            "criterion {:<2} {:<30} {}  {} [{:.2}s of {}s]",
            c.id,
            c.name,
            match (pass, known) {
                (true, _) => "PASS",
                (false, false) => "FAIL",
                (false, true) => "FAIL (known)",
            },
            v.detail,
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        if !pass {
            failed.push(c.id);
        }
        if pass == known {
            surprises.push(c.id);
        }
    }
    println!(
        "acceptance: {} of {} pass; failing {:?}; unexpected {:?}",
        criteria.len() - failed.len(),
        criteria.len(),
        failed,
        surprises
    );
    if surprises.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
