//! Acceptance suite: one line per criterion, exact arithmetic throughout.
//!
//! Run with `cargo test -p psv-cli --test acceptance -- --nocapture` to see
//! the report lines.

use std::process::{Command, Stdio};
use std::sync::Mutex;

use psv_core::fock::{lattice_states, FockSpace, ModuleVec};
use psv_core::ideal::{is_member, r_generator, IdealSpec};
use psv_core::upbw::{gen_power, multiply};
use psv_core::verifier::{
    annihilation_check, commutator_agrees, dominant_weights, fundamental, lemma_check_sigma,
    lemma_check_tau, translation_check, verify_presentation, VerifyOptions,
};
use psv_core::{AffineWeight, GradedIndex, LieData, LoopGen};
use rayon::prelude::*;

static LINES: Mutex<Vec<String>> = Mutex::new(Vec::new());

fn report(id: &str, ok: bool, detail: &str) {
    let line = format!(
        "criterion {id}: {} {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    println!("{line}");
    LINES.lock().unwrap().push(line);
    assert!(ok, "criterion {id} failed: {detail}");
}

fn weight(v: &[u32]) -> AffineWeight {
    AffineWeight::new(v.to_vec()).unwrap()
}

#[test]
fn criterion_1_annihilation() {
    let lie = LieData::new(2).unwrap();
    let mut checked = 0;
    let mut failed = Vec::new();
    for k in 1..=3 {
        for l in dominant_weights(2, k) {
            for (label, ok) in annihilation_check(&lie, &l, 6).unwrap() {
                checked += 1;
                if !ok {
                    failed.push(format!("{} on {}", label, l));
                }
            }
        }
    }
    report(
        "1",
        failed.is_empty(),
        &format!("{checked} generators kill v_L, failures {failed:?}"),
    );
}

fn presentation_runs(cases: &[(AffineWeight, i64, i64)]) -> (bool, String) {
    let lie = LieData::new(cases[0].0.rank()).unwrap();
    let mut components = 0;
    let mut bad = Vec::new();
    for (l, w, c) in cases {
        let r = verify_presentation(&lie, l, &VerifyOptions::new(*w, *c)).unwrap();
        components += r.components.len();
        if !r.passed() {
            bad.push(format!("{} {}", l, r.status.as_str()));
        }
    }
    (
        bad.is_empty(),
        format!(
            "{} weights, {components} components, failures {bad:?}",
            cases.len()
        ),
    )
}

#[test]
fn criterion_2_theorem_truncated() {
    let a: Vec<_> = dominant_weights(2, 1)
        .into_iter()
        .map(|l| (l, 6, 6))
        .collect();
    let (ok, d) = presentation_runs(&a);
    report("2a", ok, &format!("k=1 weight<=6 charge<=6: {d}"));
    let b: Vec<_> = dominant_weights(2, 2)
        .into_iter()
        .map(|l| (l, 5, 10))
        .collect();
    let (ok, d) = presentation_runs(&b);
    report("2b", ok, &format!("k=2 weight<=5: {d}"));
    let c = vec![(weight(&[1, 1, 1]), 4, 8), (weight(&[0, 2, 1]), 4, 8)];
    let (ok, d) = presentation_runs(&c);
    report("2c", ok, &format!("k=3 weight<=4: {d}"));
}

#[test]
fn criterion_3_operator_homomorphism() {
    let lie = LieData::new(2).unwrap();
    let states = lattice_states(&lie, 4);
    let gens: Vec<LoopGen> = (0..3)
        .flat_map(|r| (-3..=3).map(move |m| LoopGen::new(r, m)))
        .collect();
    let failures: usize = states
        .par_iter()
        .map(|s| {
            let fock = FockSpace::new(&lie);
            let v = ModuleVec::basis(vec![s.clone()]);
            let mut bad = 0;
            for (i, &a) in gens.iter().enumerate() {
                for &b in &gens[i + 1..] {
                    if !commutator_agrees(&fock, a, b, &v) {
                        bad += 1;
                    }
                }
            }
            bad
        })
        .sum();
    let pairs = gens.len() * (gens.len() - 1) / 2;
    report(
        "3",
        failures == 0,
        &format!(
            "{} states x {pairs} generator pairs, {failures} disagreements",
            states.len()
        ),
    );
}

#[test]
fn criterion_4_lemmas() {
    let lie = LieData::new(2).unwrap();
    let mut items = 0;
    let mut bad = Vec::new();
    for k in 1..=2 {
        for l in dominant_weights(2, k) {
            let r = lemma_check_tau(&lie, &l, 5).unwrap();
            items += r.items.len();
            bad.extend(
                r.failures()
                    .map(|f| format!("tau {} {} {}", l, f.map, f.generator)),
            );
        }
        for k1 in 0..=k {
            let r = lemma_check_sigma(&lie, k1, k - k1, 5).unwrap();
            items += r.items.len();
            bad.extend(
                r.failures()
                    .map(|f| format!("sigma {} {}", f.map, f.generator)),
            );
        }
    }
    report(
        "4",
        bad.is_empty(),
        &format!("{items} image memberships, failures {bad:?}"),
    );
}

#[test]
fn criterion_5_corollary_and_remark() {
    let lie = LieData::new(2).unwrap();
    let rs = &lie.roots;
    let a12 = rs.root_index(&[1, 1]).unwrap();
    let mut checked = 0;
    let mut bad = Vec::new();
    for k in 1..=2u32 {
        let spec = IdealSpec::vacuum(2, k).with_power(a12, 1);
        for (i, j) in [(1, 2), (2, 1)] {
            for m in 0..=k as usize {
                for t in (k as i64 + 1)..=(k as i64 + 3) {
                    let r = r_generator(&lie, i, t, k).unwrap();
                    let x = gen_power(LoopGen::new(rs.simple_root_index(j), -1), m);
                    let a = multiply(&lie, &r, &x);
                    checked += 1;
                    if !is_member(&lie, &spec, &a, 1).unwrap() {
                        bad.push(format!("k={k} R[{i}]_-1,{t} x_a{j}(-1)^{m}"));
                    }
                }
            }
        }
    }
    report(
        "5a",
        bad.is_empty(),
        &format!("{checked} products R x^m in I_kL0 + U x_a12(-1), failures {bad:?}"),
    );

    // x_{a2}(-1)^3 is already in I_{L0+L1}
    let s110 = IdealSpec::for_weight(&lie, &weight(&[1, 1, 0])).unwrap();
    let cube = gen_power(LoopGen::new(1, -1), 3);
    let cube_in = is_member(&lie, &s110, &cube, 0).unwrap();
    // I_{L0+L1} lies in I_{2L0} + U x_{a1}(-1)^2
    let smaller = IdealSpec::vacuum(2, 2).with_power(0, 2);
    let mut contained = true;
    for (_, g) in s110.generators(&lie, 5).unwrap() {
        contained &= is_member(&lie, &smaller, &g, 1).unwrap();
    }
    // x_{a1+a2}(-1) is not redundant for L1+L2
    let without = IdealSpec::vacuum(2, 2).with_power(0, 2).with_power(1, 2);
    let x12 = gen_power(LoopGen::new(a12, -1), 1);
    let x12_in = is_member(&lie, &without, &x12, 3).unwrap();
    let s011 = IdealSpec::for_weight(&lie, &weight(&[0, 1, 1])).unwrap();
    let x12_needed = is_member(&lie, &s011, &x12, 0).unwrap();
    report(
        "5b",
        cube_in && contained && !x12_in && x12_needed,
        &format!(
            "x_a2(-1)^3 in I_(1,1,0): {cube_in}; I_(1,1,0) in I_2L0 + U x_a1(-1)^2: {contained}; \
             x_a12(-1) in I_2L0 + U x_a1(-1)^2 + U x_a2(-1)^2: {x12_in}"
        ),
    );
}

#[test]
fn criterion_6_conjecture_rank_three() {
    let lie = LieData::new(3).unwrap();
    let mut details = Vec::new();
    let mut ok = true;
    for l in [weight(&[1, 0, 0, 0]), weight(&[0, 1, 0, 0])] {
        let r = verify_presentation(&lie, &l, &VerifyOptions::new(3, 4)).unwrap();
        ok &= r.passed();
        details.push(format!(
            "{} {} ({} components)",
            l,
            r.status.as_str(),
            r.components.len()
        ));
        if let Some(m) = &r.mismatch {
            details.push(format!(
                "first mismatch {:?}",
                GradedIndex::new(m.weight, m.charges.clone())
            ));
        }
    }
    report("6", ok, &details.join("; "));
}

#[test]
fn criterion_7_translations() {
    let lie = LieData::new(2).unwrap();
    let mut bad = Vec::new();
    let mut pieces = 0;
    let mut conj = 0;
    let omega1 = psv_core::upbw::omega(&lie, 1);
    let omega2 = psv_core::upbw::omega(&lie, 2);
    for k in 1..=2 {
        for l in dominant_weights(2, k) {
            let mut maps = vec![
                ("e_lambda1", fundamental(2, 1)),
                ("e_lambda2", fundamental(2, 2)),
            ];
            if l.k(0) == 0 {
                maps.push(("e_omega1", omega1.clone()));
                maps.push(("e_omega2", omega2.clone()));
            }
            for (name, mu) in maps {
                let r = translation_check(&lie, name, &mu, &l, 4, 2 * 4, 3).unwrap();
                pieces += r.pieces.len();
                conj += r.conjugation_checked;
                if !r.pass {
                    bad.push(format!("{name} on {l}"));
                }
            }
        }
    }
    report(
        "7",
        bad.is_empty(),
        &format!(
            "{conj} conjugation identities, {pieces} graded pieces injective, failures {bad:?}"
        ),
    );
}

#[test]
fn criterion_8_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let mut same = true;
    for w in ["1,0,0", "0,1,0", "0,0,1"] {
        let mut outs = Vec::new();
        for jobs in ["1", "8"] {
            let path = dir.path().join(format!("{w}-{jobs}.json"));
            let status = Command::new(env!("CARGO_BIN_EXE_psv"))
                .args([
                    "--jobs", jobs, "verify", "--rank", "2", "--level", "1", "--weight", w,
                ])
                .args(["--max-weight", "6", "--max-charge", "6", "--out"])
                .arg(&path)
                .stderr(Stdio::null())
                .status()
                .unwrap();
            assert_eq!(status.code(), Some(0));
            outs.push(std::fs::read(&path).unwrap());
        }
        same &= outs[0] == outs[1];
    }
    report(
        "8",
        same,
        "criterion 2(a) reports byte-identical for --jobs 1 and --jobs 8",
    );
}
