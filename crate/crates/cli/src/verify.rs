//! Everything `verify-paper` checks: the backtrack table, the morphism
//! identities, and the small worked images from the structure proofs.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use rote_core::morphism::NamedMorphism;
use rote_core::properness::{is_proper, Violation};
use rote_core::repetition::{is_power_free, Threshold};
use rote_core::search::{run_row, RowResult, TableRow};
use rote_core::structure::CaseTag;
use rote_core::{Morphism, ParikhVector, Word};
use serde_json::{json, Value};

/// Runs the rows on up to `threads` workers; results come back in row order.
pub fn run_rows(rows: &[TableRow], target: usize, threads: usize) -> Vec<RowResult> {
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<RowResult>>> = Mutex::new(vec![None; rows.len()]);
    thread::scope(|s| {
        for _ in 0..threads.clamp(1, rows.len().max(1)) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(row) = rows.get(i) else { break };
                let result = run_row(row, target);
                slots.lock().expect("no worker panics")[i] = Some(result);
            });
        }
    });
    slots.into_inner().expect("no worker panics").into_iter().map(|r| r.expect("every row ran")).collect()
}

pub struct Check {
    pub name: String,
    pub ok: bool,
    pub line: String,
    pub json: Value,
}

pub fn row_check(index: usize, r: &RowResult) -> Check {
    let set: Vec<String> = r.row.forbidden.iter().map(Word::to_string).collect();
    let name = format!("row {} {{{}}}", index + 1, set.join(","));
    let ok = r.matches();
    Check {
        line: format!(
            "{:<8} {:<40} expected {:>3}  got {:>3}",
            if ok { "ok" } else { "MISMATCH" },
            name,
            r.row.expected,
            r.outcome.max_length
        ),
        json: json!({
            "check": "table",
            "row": index + 1,
            "group": r.row.group,
            "forbidden": set,
            "expected": r.row.expected,
            "computed": r.outcome.max_length,
            "witness": r.outcome.witness,
            "reached_target": r.outcome.reached_target,
            "nodes_explored": r.outcome.nodes_explored,
            "ok": ok,
        }),
        name,
        ok,
    }
}

pub fn identity_checks() -> Vec<Check> {
    use NamedMorphism::*;
    let compose = |a: &Morphism, b: &Morphism| Morphism::compose(a, b).expect("alphabets line up");
    let tau = Tau.morphism();
    let g_sigma = compose(&G.morphism(), &Sigma.morphism());
    let theta2 = compose(&Theta.morphism(), &Theta.morphism());
    let conj = compose(&SigmaInv.morphism(), &compose(&H.morphism(), &Sigma.morphism()));
    [("tau = g.sigma", tau, g_sigma), ("theta^2 = sigma_inv.h.sigma", theta2, conj)]
        .into_iter()
        .map(|(name, left, right)| {
            let ok = left.equal_on_letters(&right);
            Check {
                name: name.to_string(),
                ok,
                line: format!("{:<8} {name}  ({left} vs {right})", if ok { "ok" } else { "MISMATCH" }),
                json: json!({
                    "check": "identity",
                    "name": name,
                    "left": left.to_string(),
                    "right": right.to_string(),
                    "ok": ok,
                }),
            }
        })
        .collect()
}

enum Property {
    /// The word is a 5/2⁺ power.
    Power,
    /// The word contains this length-4 factor, which is absent from F.
    OutsideF(&'static str),
    /// The word is or starts with one of the seven forbidden factors.
    Forbidden,
    /// The word contains `xyxyx` with `π(x) > π(y)`.
    Xyxyx(&'static str, &'static str),
}

struct Worked {
    morphism: NamedMorphism,
    left: &'static str,
    preimage: &'static str,
    right: &'static str,
    expected: &'static str,
    property: Property,
}

#[rustfmt::skip]
const WORKED: [Worked; 15] = [
    Worked { morphism: NamedMorphism::G, left: "", preimage: "00", right: "", expected: "011011", property: Property::OutsideF("1011") },
    Worked { morphism: NamedMorphism::G, left: "", preimage: "11", right: "0", expected: "000", property: Property::Power },
    Worked { morphism: NamedMorphism::G, left: "", preimage: "22", right: "", expected: "0101", property: Property::OutsideF("0101") },
    Worked { morphism: NamedMorphism::G, left: "", preimage: "20", right: "", expected: "01011", property: Property::OutsideF("0101") },
    Worked { morphism: NamedMorphism::G, left: "1", preimage: "10101", right: "0", expected: "10011001100", property: Property::Power },
    Worked { morphism: NamedMorphism::G, left: "", preimage: "2121", right: "01", expected: "01001001", property: Property::Power },
    Worked { morphism: NamedMorphism::G, left: "", preimage: "10210210", right: "", expected: "0011010011010011", property: Property::Power },
    Worked { morphism: NamedMorphism::F, left: "1", preimage: "22", right: "", expected: "10101", property: Property::Forbidden },
    Worked { morphism: NamedMorphism::F, left: "1", preimage: "20", right: "", expected: "1010121", property: Property::Forbidden },
    Worked { morphism: NamedMorphism::F, left: "", preimage: "000", right: "", expected: "012101210121", property: Property::Xyxyx("0121", "") },
    Worked { morphism: NamedMorphism::F, left: "", preimage: "100", right: "0", expected: "021012101210", property: Property::Xyxyx("210", "1") },
    Worked { morphism: NamedMorphism::F, left: "1", preimage: "11", right: "0", expected: "10210210", property: Property::Forbidden },
    Worked { morphism: NamedMorphism::F, left: "1", preimage: "10101", right: "0", expected: "1021012102101210210", property: Property::Xyxyx("10210", "12") },
    Worked { morphism: NamedMorphism::F, left: "21", preimage: "2121", right: "0", expected: "2101021010210", property: Property::Xyxyx("210", "10") },
    Worked { morphism: NamedMorphism::F, left: "", preimage: "10210210", right: "", expected: "0210121010210121010210121", property: Property::Xyxyx("0210121", "01") },
];

fn parikh(s: &str) -> ParikhVector {
    Word::parse(s, 3).expect("ternary literal").parikh()
}

fn holds(word: &Word, property: &Property) -> bool {
    match property {
        Property::Power => {
            let t = Threshold::FIVE_HALVES_PLUS;
            is_power_free(word, &t).is_err_and(|w| w.start == 0 && w.length == word.len())
        }
        Property::OutsideF(factor) => {
            let f = Word::parse(factor, 2).expect("binary literal");
            word.find(f.letters()).is_some() && !CaseTag::F.factor_set().contains(&f)
        }
        Property::Forbidden => {
            matches!(is_proper(word), Ok(Some(Violation::ForbiddenFactor { position: 0, .. })))
        }
        Property::Xyxyx(x, y) => {
            let pattern = format!("{x}{y}{x}{y}{x}");
            let dominated = parikh(x).dominates(&parikh(y)).unwrap_or(false);
            dominated && word.to_string().contains(&pattern) && is_proper(word).is_ok_and(|v| v.is_some())
        }
    }
}

fn describe(p: &Property) -> String {
    match p {
        Property::Power => "a 5/2+ power".to_string(),
        Property::OutsideF(f) => format!("contains {f}, not in F"),
        Property::Forbidden => "starts with a forbidden factor".to_string(),
        Property::Xyxyx(x, y) => {
            format!("contains xyxyx with x={x}, y={}", if y.is_empty() { "(empty)" } else { y })
        }
    }
}

pub fn worked_checks() -> Vec<Check> {
    WORKED
        .iter()
        .map(|w| {
            let m = w.morphism.morphism();
            let image =
                m.apply(&Word::parse(w.preimage, 3).expect("ternary literal")).expect("ternary source");
            let k = m.target_alphabet();
            let computed = format!("{}{}{}", w.left, image, w.right);
            let word = Word::parse(&computed, k).expect("letters of the target alphabet");
            let ok = computed == w.expected && holds(&word, &w.property);
            let name = format!("{}{}({}){}", w.left, w.morphism, w.preimage, w.right);
            Check {
                line: format!(
                    "{:<8} {name} = {computed}, {}",
                    if ok { "ok" } else { "MISMATCH" },
                    describe(&w.property)
                ),
                json: json!({
                    "check": "worked",
                    "name": name,
                    "expected": w.expected,
                    "computed": computed,
                    "property": describe(&w.property),
                    "ok": ok,
                }),
                name,
                ok,
            }
        })
        .collect()
}
