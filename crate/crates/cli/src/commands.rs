use std::fs;
use std::thread;

use anyhow::{anyhow, bail, Context as _, Result};
use rote_core::morphism::NamedMorphism;
use rote_core::repetition::{is_power_free, Threshold};
use rote_core::search::{longest_avoiding, paper_table};
use rote_core::structure::{
    classify_by_length4, decode_with, decompose as decompose_word, generate_case_word, reencode, CaseTag,
    DecomposeError, DecomposeOptions,
};
use rote_core::{Error, Word};
use serde_json::{json, Value};

use crate::report::{Output, Status};
use crate::source::{read_words, with_alphabet};
use crate::verify::{identity_checks, row_check, run_rows, worked_checks};
use crate::{
    CheckPowerArgs, ComplexityArgs, Context, DecodeArgs, DecomposeArgs, GenerateArgs, InputArgs, SearchArgs,
    VerifyArgs,
};

fn words(ctx: &mut Context<'_>, a: &InputArgs) -> Result<Vec<Word>> {
    let given = [a.input.is_some(), a.stdin, a.source.is_some(), a.word.is_some()];
    match given.iter().filter(|&&g| g).count() {
        0 => bail!("no input: give a word, --input <path>, --stdin or --source <spec>"),
        1 => {}
        _ => bail!("give only one of a word, --input, --stdin and --source"),
    }
    let text = match (&a.input, a.stdin) {
        (Some(path), _) if path != "-" => {
            Some(fs::read_to_string(path).with_context(|| format!("reading {path}"))?)
        }
        (Some(_), _) | (None, true) => {
            let mut s = String::new();
            ctx.stdin.read_to_string(&mut s).context("reading standard input")?;
            Some(s)
        }
        _ => None,
    };
    let words = match (text, &a.source, &a.word) {
        (Some(text), _, _) => read_words(&text, ctx.limit)?,
        (None, Some(spec), _) => vec![ctx.registry.generate(spec, ctx.limit)?],
        (None, None, Some(w)) => read_words(w, ctx.limit)?,
        (None, None, None) => unreachable!("checked above"),
    };
    if words.is_empty() {
        bail!("input holds no word");
    }
    Ok(words)
}

fn single(ctx: &mut Context<'_>, a: &InputArgs) -> Result<Word> {
    let mut ws = words(ctx, a)?;
    if ws.len() > 1 {
        bail!("expected one word, got {}", ws.len());
    }
    Ok(ws.remove(0))
}

pub fn verify_paper(a: &VerifyArgs) -> Result<Output> {
    let mut rows = paper_table();
    if let Some(r) = a.perturb {
        let row = rows.get_mut(r.wrapping_sub(1)).ok_or_else(|| anyhow!("no row {r}"))?;
        row.expected += 1;
    }
    let threads = a.threads.unwrap_or_else(|| thread::available_parallelism().map_or(1, |n| n.get()));
    let results = run_rows(&rows, rote_core::search::DEFAULT_TARGET, threads);
    let checks: Vec<_> = results
        .iter()
        .enumerate()
        .map(|(i, r)| row_check(i, r))
        .chain(identity_checks())
        .chain(worked_checks())
        .collect();
    let failing: Vec<&str> = checks.iter().filter(|c| !c.ok).map(|c| c.name.as_str()).collect();
    let status = if failing.is_empty() { Status::Ok } else { Status::Mismatch };
    let mut plain: Vec<String> = checks.iter().map(|c| c.line.clone()).collect();
    plain.push(format!("{} of {} checks match", checks.len() - failing.len(), checks.len()));
    Ok(Output {
        status,
        results: json!({
            "checks": checks.len(),
            "table_rows": rows.len(),
            "passed": checks.len() - failing.len(),
            "failing": failing,
        }),
        plain,
        checks: checks.into_iter().map(|c| c.json).collect(),
    })
}

pub fn search(ctx: &Context<'_>, a: &SearchArgs) -> Result<Output> {
    if a.target > ctx.limit {
        return Err(Error::InputTooLong { length: a.target, limit: ctx.limit }.into());
    }
    let forbidden = a
        .forbidden
        .iter()
        .map(|s| Word::parse(s, 2).with_context(|| format!("forbidden factor {s:?}")))
        .collect::<Result<Vec<_>>>()?;
    let out = longest_avoiding(&forbidden, a.target)?;
    let plain = vec![
        format!("max length {}{}", out.max_length, if out.reached_target { " (target reached)" } else { "" }),
        format!("witness {}", out.witness),
        format!("nodes {}", out.nodes_explored),
    ];
    Ok(Output::ok(serde_json::to_value(&out)?, plain))
}

pub fn classify(ctx: &mut Context<'_>, a: &InputArgs) -> Result<Output> {
    let mut results = Vec::new();
    let mut plain = Vec::new();
    for w in words(ctx, a)? {
        let w = with_alphabet(&w, 2)?;
        let class = classify_by_length4(&w)?;
        plain.push(class.to_string());
        results.push(json!({ "length": w.len(), "class": class }));
    }
    Ok(Output::ok(Value::Array(results), plain))
}

fn decoder(name: &str) -> Result<NamedMorphism> {
    match name.parse::<NamedMorphism>()? {
        m @ (NamedMorphism::G | NamedMorphism::F | NamedMorphism::H) => Ok(m),
        other => bail!("no decoder for {other}; use g, f or h"),
    }
}

pub fn decode(ctx: &mut Context<'_>, a: &DecodeArgs) -> Result<Output> {
    let m = decoder(&a.morphism)?;
    let k = if m == NamedMorphism::G { 2 } else { 3 };
    let mut results = Vec::new();
    let mut plain = Vec::new();
    for w in words(ctx, &a.input)? {
        let w = with_alphabet(&w, k)?;
        let r = decode_with(m, &w)?.map_err(|e| anyhow!("{e}"))?;
        let reencoded = reencode(&m.morphism(), &w, &r)? == w;
        plain.push(format!("{} dropped {} truncated {}", r.preimage, r.dropped_prefix, r.truncated_suffix));
        results.push(json!({ "decode": r, "reencodes": reencoded }));
    }
    Ok(Output::ok(Value::Array(results), plain))
}

pub fn decompose(ctx: &mut Context<'_>, a: &DecomposeArgs) -> Result<Output> {
    let w = with_alphabet(&single(ctx, &a.input)?, 2)?;
    let options =
        DecomposeOptions { min_level_length: a.floor, seed_trim: ctx.seed_trim, check_limit: a.check_limit };
    let cert = match decompose_word(&w, a.depth, &options) {
        Ok(cert) => cert,
        Err(DecomposeError::Word(e)) => return Err(e.into()),
        Err(DecomposeError::Structural(class)) => bail!("cannot decompose: class {class}"),
        Err(DecomposeError::Decode { level, error, partial }) => {
            let partial = serde_json::to_string(&partial)?;
            bail!("decode failed at level {level}: {error}; partial certificate {partial}")
        }
    };
    let mut plain =
        vec![format!("class {}  depth achieved {} of {}", cert.class, cert.depth_achieved, a.depth)];
    for (i, level) in cert.levels.iter().enumerate() {
        let report = |r: &Option<rote_core::properness::PropernessReport>| match r {
            None => "-".to_string(),
            Some(r) if r.passed() => format!("ok on {} letters (trim {})", r.verified_length, r.trimmed),
            Some(r) => format!(
                "violation {} at {}",
                r.violation.as_ref().map_or(String::new(), |v| v.detail()),
                r.violation.as_ref().map_or(0, |v| v.position())
            ),
        };
        plain.push(format!(
            "level {i} {}: preimage {} letters, margins {}/{}, proper {}, antiproper {}",
            level.morphism,
            level.decode.preimage.len(),
            level.decode.dropped_prefix,
            level.decode.truncated_suffix,
            report(&level.proper),
            report(&level.antiproper),
        ));
    }
    let all_passed = cert.all_levels_passed();
    plain.push(format!("all levels passed: {all_passed}"));
    let mut results = serde_json::to_value(&cert)?;
    results["all_levels_passed"] = json!(all_passed);
    Ok(Output::ok(results, plain))
}

pub fn generate(ctx: &Context<'_>, a: &GenerateArgs) -> Result<Output> {
    let w = match &a.source {
        Some(spec) => ctx.registry.generate(spec, ctx.limit)?,
        None => {
            if a.length > ctx.limit {
                return Err(Error::InputTooLong { length: a.length, limit: ctx.limit }.into());
            }
            let tag: CaseTag = a.case.as_deref().unwrap_or("F").parse()?;
            generate_case_word(tag, a.depth, a.length)
        }
    };
    let results = json!({ "length": w.len(), "alphabet_size": w.alphabet_size(), "word": w });
    Ok(Output::ok(results, vec![w.to_string()]))
}

fn expected_complexity(formula: &str, n: usize) -> Result<usize> {
    match formula.replace(' ', "").as_str() {
        "2n" => Ok(2 * n),
        "2n+1" => Ok(2 * n + 1),
        "n+1" => Ok(n + 1),
        other => bail!("unknown complexity formula {other:?} (expected 2n, 2n+1 or n+1)"),
    }
}

pub fn complexity(ctx: &mut Context<'_>, a: &ComplexityArgs) -> Result<Output> {
    if a.max_n == 0 {
        bail!("--max-n must be at least 1");
    }
    let w = single(ctx, &a.input)?;
    let required = a.max_n.saturating_mul(a.safety);
    if w.len() < required {
        return Err(anyhow::Error::new(Error::TooShort { length: w.len(), required }).context(format!(
            "word too short for max-n {}; use a prefix of at least {required} letters",
            a.max_n
        )));
    }
    let mut rows = Vec::with_capacity(a.max_n);
    let mut plain = Vec::with_capacity(a.max_n);
    let mut all_match = true;
    for n in 1..=a.max_n {
        let c = w.factor_complexity(n);
        match &a.expect {
            Some(f) => {
                let e = expected_complexity(f, n)?;
                all_match &= c == e;
                plain.push(format!("{n:>4} {c:>6} {e:>6} {}", if c == e { "ok" } else { "MISMATCH" }));
                rows.push(json!({ "n": n, "complexity": c, "expected": e, "matches": c == e }));
            }
            None => {
                plain.push(format!("{n:>4} {c:>6}"));
                rows.push(json!({ "n": n, "complexity": c }));
            }
        }
    }
    Ok(Output {
        status: if all_match { Status::Ok } else { Status::Mismatch },
        results: json!({ "length": w.len(), "rows": rows }),
        plain,
        checks: Vec::new(),
    })
}

fn parse_threshold(text: &str, strict: bool) -> Result<Threshold> {
    let (num, den) = text.split_once('/').unwrap_or((text, "1"));
    let num = num.trim().parse().with_context(|| format!("bad threshold {text:?}"))?;
    let den = den.trim().parse().with_context(|| format!("bad threshold {text:?}"))?;
    Ok(Threshold::new(num, den, strict)?)
}

pub fn check_power(ctx: &mut Context<'_>, a: &CheckPowerArgs) -> Result<Output> {
    let t = parse_threshold(&a.threshold, !a.non_strict)?;
    let mut results = Vec::new();
    let mut plain = Vec::new();
    for w in words(ctx, &a.input)? {
        match is_power_free(&w, &t) {
            Ok(()) => {
                plain.push(format!("free ({} letters)", w.len()));
                results.push(json!({ "length": w.len(), "free": true, "witness": null }));
            }
            Err(wit) => {
                let factor = w.factor(wit.start..wit.start + wit.length);
                plain.push(format!(
                    "witness start {} length {} period {} ({factor})",
                    wit.start, wit.length, wit.period
                ));
                results.push(json!({ "length": w.len(), "free": false, "witness": wit, "factor": factor }));
            }
        }
    }
    Ok(Output::ok(Value::Array(results), plain))
}
