//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails or exceeds its time budget.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use schubert::classify::{multiplicitous_patterns, survey, zero_one_status, SurveyMethods};
use schubert::orthodontia::{schubert_orthodontic, Orthodontia};
use schubert::perm::{one_step_pattern, permutations, rothe_diagram};
use schubert::poly::schubert_classic;
use schubert::tableaux::{root_operator, schubert_from_tableaux, Tableaux, Word};
use schubert::weyl::{dual_character, pattern_dominance_check, schubert_pattern_inequality};

/// Largest coefficient of any Schubert polynomial indexed by `S_6`.
const MAX_COEFFICIENT_S6: u32 = 4;

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .output()
        .map_err(|e| format!("cannot run the binary: {e}"))?;
    if !out.status.success() {
        return Err(format!(
            "`schubert {}` exited with {}: {}",
            args.join(" "),
            out.status,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(String::from_utf8_lossy(&out.stdout).into_owned())
}

fn worked_examples() -> Check {
    let orth = cli(&["orthodontia", "31542"])?;
    let lines: Vec<&str> = orth.lines().collect();
    ensure(lines == ["i=(2,3,1)", "k=(1,0,0,0,0)", "m=(0,1,1)"], || {
        format!("orthodontia printed {lines:?}")
    })?;

    let expand = cli(&["expand", "31542"])?;
    let terms: BTreeSet<&str> = expand.trim_end().split(" + ").collect();
    let expected: BTreeSet<&str> = [
        "x1^3*x2*x3",
        "x1^3*x2*x4",
        "x1^3*x3*x4",
        "x1^2*x2^2*x3",
        "x1^2*x2*x3^2",
        "x1^2*x2^2*x4",
        "x1^2*x2*x3*x4",
        "x1^2*x3^2*x4",
    ]
    .into();
    ensure(terms == expected && expand.matches(" + ").count() == 7, || {
        format!("expand printed {expand:?}")
    })?;

    let tab = cli(&["tableaux", "31542"])?;
    let words: BTreeSet<&str> = tab.lines().collect();
    let expected: BTreeSet<&str> =
        ["11231", "11241", "11341", "11232", "11233", "11242", "11342", "11343"].into();
    ensure(words == expected && tab.lines().count() == 8, || {
        format!("tableaux printed {tab:?}")
    })?;
    Ok("orthodontia, expand and tableaux output of 31542".into())
}

fn root_operators() -> Check {
    let t: Word = "3122213124324131".parse().unwrap();
    let once = root_operator(1, &t).ok_or("f_1 undefined on the first word")?;
    ensure(once.to_string() == "3122213124324231", || format!("f_1 gave {once}"))?;
    let twice = root_operator(1, &once).ok_or("f_1 undefined on the second word")?;
    ensure(twice.to_string() == "3122213124324232", || format!("f_1^2 gave {twice}"))?;
    ensure(root_operator(1, &twice).is_none(), || "f_1^3 is defined".into())?;
    Ok("f_1, f_1^2 match and f_1^3 is undefined".into())
}

fn four_methods() -> Check {
    for w in permutations(6) {
        let classic = schubert_classic(&w);
        ensure(schubert_orthodontic(&w) == classic, || format!("operator formula differs at {w}"))?;
        ensure(schubert_from_tableaux(&w) == classic, || format!("tableaux differ at {w}"))?;
    }
    for w in permutations(5) {
        let chi = dual_character(&rothe_diagram(&w)).map_err(|e| e.to_string())?;
        ensure(chi == schubert_classic(&w), || format!("dual character differs at {w}"))?;
    }
    Ok("720 permutations by three methods, 120 by four".into())
}

fn zero_one_sweep() -> Check {
    let start = Instant::now();
    for w in permutations(7) {
        zero_one_status(&w, true, true).map_err(|e| e.to_string())?;
    }
    let s7 = start.elapsed();
    ensure(s7 <= Duration::from_secs(1800), || format!("S_7 sweep took {s7:?}"))?;
    let start = Instant::now();
    let s8 = survey(8, SurveyMethods::Fast, None).map_err(|e| e.to_string())?;
    let s8_time = start.elapsed();
    ensure(s8.disagreements.is_empty(), || {
        format!("{} disagreements on S_8", s8.disagreements.len())
    })?;
    ensure(s8_time <= Duration::from_secs(600), || format!("S_8 sweep took {s8_time:?}"))?;
    Ok(format!(
        "S_7 four-way ({:.1}s), S_8 three-way ({:.1}s); {} of {} in S_8 are zero-one",
        s7.as_secs_f64(),
        s8_time.as_secs_f64(),
        s8.zero_one,
        s8.total
    ))
}

fn multiplicitous_coefficients() -> Check {
    for w in multiplicitous_patterns() {
        let top = schubert_classic(&w).max_coefficient();
        ensure(top == BigInt::from(2), || format!("max coefficient of {w} is {top}"))?;
    }
    let top = permutations(6)
        .map(|w| schubert_classic(&w).max_coefficient())
        .max()
        .unwrap();
    ensure(top == BigInt::from(MAX_COEFFICIENT_S6), || {
        format!("max coefficient over S_6 is {top}, pinned {MAX_COEFFICIENT_S6}")
    })?;
    Ok(format!("twelve patterns reach exactly 2; max over S_6 is {top}"))
}

fn pattern_dominance() -> Check {
    for w in permutations(6) {
        for k in 1..=6 {
            let ok = schubert_pattern_inequality(&w, k).map_err(|e| e.to_string())?;
            ensure(ok, || format!("negative coefficient for w = {w}, k = {k}"))?;
        }
    }
    Ok("4320 pairs (w, k)".into())
}

fn diagram_dominance() -> Check {
    for w in permutations(4) {
        let d = rothe_diagram(&w);
        for k in 1..=4 {
            for l in 1..=4 {
                let r = pattern_dominance_check(&d, k, l).map_err(|e| e.to_string())?;
                ensure(r.ok, || format!("F = {} for w = {w}, k = {k}, l = {l}", r.f))?;
                ensure(r.rank_monotone, || {
                    format!("rank monotonicity fails for w = {w}, k = {k}, l = {l}")
                })?;
                ensure(r.augmentation == Some(true), || {
                    format!("augmentation fails for w = {w}, k = {k}, l = {l}")
                })?;
            }
        }
    }
    Ok("384 triples (w, k, l)".into())
}

fn filling_validity() -> Check {
    let mut count = 0usize;
    for w in permutations(5) {
        let t = Tableaux::new(&w);
        let o = Orthodontia::new(&w);
        for r in 0..t.num_stages() {
            ensure(o.intermediate(r).has_northwest_property(), || {
                format!("O(w,{r}) is not northwest for w = {w}")
            })?;
            for word in t.stage(r).map_err(|e| e.to_string())? {
                t.read(word, r)
                    .map_err(|e| format!("w = {w}, r = {r}, word {word}: {e}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} fillings"))
}

fn pattern_closure() -> Check {
    for w in permutations(6) {
        if !schubert_classic(&w).is_zero_one() {
            continue;
        }
        for k in 1..=6 {
            let sigma = one_step_pattern(&w, k).map_err(|e| e.to_string())?;
            ensure(schubert_classic(&sigma).is_zero_one(), || {
                format!("{w} is zero-one but its pattern {sigma} is not")
            })?;
        }
    }
    for w in multiplicitous_patterns() {
        for k in 1..=w.size() {
            let sigma = one_step_pattern(&w, k).map_err(|e| e.to_string())?;
            ensure(schubert_classic(&sigma).is_zero_one(), || {
                format!("{sigma}, a pattern of {w}, is not zero-one")
            })?;
        }
    }
    Ok("closure on S_6 and minimality of the twelve patterns".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("worked examples", Duration::from_secs(1), worked_examples),
        ("root operators", Duration::from_secs(1), root_operators),
        ("four-method agreement", Duration::from_secs(600), four_methods),
        ("zero-one equivalence sweep", Duration::from_secs(2400), zero_one_sweep),
        ("multiplicitous coefficients", Duration::from_secs(60), multiplicitous_coefficients),
        ("pattern dominance on S_6", Duration::from_secs(300), pattern_dominance),
        ("diagram dominance on S_4", Duration::from_secs(300), diagram_dominance),
        ("filling validity on S_5", Duration::from_secs(60), filling_validity),
        ("pattern closure", Duration::from_secs(300), pattern_closure),
    ];
    let mut failures = 0;
    for (index, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(detail) if elapsed <= *budget => format!("PASS  {detail}"),
            Ok(detail) => format!("FAIL  over budget {budget:?}: {detail}"),
            Err(why) => format!("FAIL  {why}"),
        };
        if verdict.starts_with("FAIL") {
            failures += 1;
        }
        println!(
            "criterion {} [{name}] {:.2}s {verdict}",
            index + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
