//! One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

use std::process::ExitCode;

use selfext_core::hybrid::{catalog, verify};
use selfext_core::lab::{self, SweepConfig};
use selfext_core::oracle::Oracle;
use selfext_core::verdict::{Status, Verdict};
use selfext_core::{NakayamaAlgebra, Shape};

const SEED: u64 = 0;
const CATALOG_DEPTH: usize = 12;

type Outcome = Result<String, String>;

/// Every verdict whose check matches must pass, and at least one must match.
fn require(verdicts: &[Verdict], label: &str, matches: impl Fn(&str) -> bool) -> Outcome {
    let selected: Vec<&Verdict> = verdicts.iter().filter(|v| matches(&v.check)).collect();
    if selected.is_empty() {
        return Err(format!("{label}: no verdicts"));
    }
    if let Some(bad) = selected.iter().find(|v| v.status != Status::Pass) {
        return Err(format!(
            "{label}: {} {} {} ({}) {}",
            bad.instance,
            bad.check,
            bad.status,
            bad.detail,
            bad.witness.as_ref().map(|w| w.to_string()).unwrap_or_default()
        ));
    }
    Ok(format!("{label}: {} pass", selected.len()))
}

fn all(parts: Vec<Outcome>) -> Outcome {
    let mut notes = Vec::new();
    for p in parts {
        notes.push(p?);
    }
    Ok(notes.join("; "))
}

fn catalog_verdicts(name: &str) -> Result<Vec<Verdict>, String> {
    verify::verify_entry(name, CATALOG_DEPTH, SEED).map_err(|e| format!("{name}: {e}"))
}

fn sweep_criteria(verdicts: &[Verdict]) -> Vec<Outcome> {
    let builds = require(verdicts, "oracle builds", |c| c == "oracle_build");
    let no_build_failures = match builds {
        Err(e) if !e.ends_with("no verdicts") => Err(e),
        _ => Ok(()),
    };
    let with_builds = |o: Outcome| no_build_failures.clone().and(o);
    vec![
        with_builds(all(vec![
            require(verdicts, "interval criterion vs oracle Ext^1", |c| {
                c == "oracle_rigidity"
            }),
            require(verdicts, "interval criterion vs closed-form Ext^1", |c| c == "rigidity"),
        ])),
        with_builds(require(verdicts, "Hom, Ext^1, Ext^i<=20, pd vs oracle", |c| {
            c == "oracle_agreement"
        })),
        require_allowing_skips(verdicts, "Ext^i != 0 for non-rigid modules", "ext_nonvanishing"),
        require(verdicts, "min-inequalities", |c| c == "min_inequality"),
    ]
}

/// Like `require`, but instances without any non-rigid module are skipped.
fn require_allowing_skips(verdicts: &[Verdict], label: &str, check: &str) -> Outcome {
    let selected: Vec<&Verdict> = verdicts.iter().filter(|v| v.check == check).collect();
    if let Some(bad) = selected.iter().find(|v| v.status == Status::Fail) {
        return Err(format!(
            "{label}: {} {} {}",
            bad.instance,
            bad.detail,
            bad.witness.clone().unwrap_or_default()
        ));
    }
    let pass = selected.iter().filter(|v| v.status == Status::Pass).count();
    if pass == 0 {
        return Err(format!("{label}: no verdicts"));
    }
    let certified = selected
        .iter()
        .filter(|v| v.detail.contains("certified for all degrees"))
        .count();
    if certified != pass {
        return Err(format!(
            "{label}: only {certified} of {pass} instances certified for all degrees"
        ));
    }
    Ok(format!(
        "{label}: {pass} instances certified for all degrees, {} without non-rigid modules",
        selected.len() - pass
    ))
}

fn criterion_5(verdicts: &[Verdict]) -> Outcome {
    let sweep = require_allowing_skips_any(verdicts, "Loewy length and rigidity under finite gldim", "loewy_bound")?;
    let mut notes = vec![sweep];
    for n in 2..=4 {
        let alg = NakayamaAlgebra::extremal(n);
        let gldim = alg.global_dim();
        if !gldim.is_finite() || alg.loewy_length() != 2 * n - 1 {
            return Err(format!(
                "extremal {alg}: gldim {gldim}, Loewy length {}",
                alg.loewy_length()
            ));
        }
        if let Some(m) = alg.modules().into_iter().find(|&m| !alg.is_rigid(m)) {
            return Err(format!("extremal {alg}: {m} not rigid"));
        }
        notes.push(format!("{alg} gldim {gldim}, Loewy length {}", 2 * n - 1));
    }
    Ok(notes.join("; "))
}

fn require_allowing_skips_any(verdicts: &[Verdict], label: &str, check: &str) -> Outcome {
    let selected: Vec<&Verdict> = verdicts.iter().filter(|v| v.check == check).collect();
    if let Some(bad) = selected.iter().find(|v| v.status == Status::Fail) {
        return Err(format!("{label}: {} {}", bad.instance, bad.detail));
    }
    let pass = selected.iter().filter(|v| v.status == Status::Pass).count();
    if pass == 0 {
        return Err(format!("{label}: no verdicts"));
    }
    Ok(format!(
        "{label}: {pass} pass, {} not applicable",
        selected.len() - pass
    ))
}

fn criterion_6() -> Outcome {
    let pres = catalog::presentation("loop_triangle").map_err(|e| e.to_string())?;
    let oracle = Oracle::build(&pres).map_err(|e| e.to_string())?;
    let s = oracle.simple(0);
    let (e1, e3) = (oracle.ext_dim(&s, &s, 1), oracle.ext_dim(&s, &s, 3));
    if e1 >= 1 && e3 == 0 {
        Ok(format!("dim Ext^1(S_1,S_1) = {e1}, dim Ext^3(S_1,S_1) = {e3}"))
    } else {
        Err(format!("dim Ext^1(S_1,S_1) = {e1}, dim Ext^3(S_1,S_1) = {e3}"))
    }
}

/// `dim Ext^n(S_v, S_v)` for `n = 1..=depth`, all nonzero.
fn self_ext_nonzero(name: &str, v: usize, depth: usize) -> Outcome {
    let pres = catalog::presentation(name).map_err(|e| e.to_string())?;
    let oracle = Oracle::build(&pres).map_err(|e| e.to_string())?;
    let s = oracle.simple(v);
    let res = oracle.resolution(&s, depth);
    let dims: Vec<usize> = (1..=depth).map(|n| Oracle::ext_from_resolution(&res, &s, n)).collect();
    if dims.contains(&0) {
        Err(format!("{name} vertex {v}: Ext^n(S,S) = {dims:?}"))
    } else {
        Ok(format!("{name} vertex {v}: Ext^n(S,S) nonzero for n <= {depth}"))
    }
}

fn criterion_7() -> Outcome {
    let mut parts = Vec::new();
    for name in ["sd2b3", "sd2b3_c1"] {
        let v = catalog_verdicts(name)?;
        parts.push(require(&v, &format!("{name} Cartan ((4,2),(2,4))"), |c| c == "cartan"));
        parts.push(require(&v, &format!("{name} dim W = (3,3)"), |c| c == "w_dimension"));
        parts.push(require(&v, &format!("{name} Ω²W ≅ W"), |c| c == "w_period_two"));
        for vertex in 0..2 {
            parts.push(self_ext_nonzero(name, vertex, CATALOG_DEPTH));
        }
    }
    all(parts)
}

fn criterion_8() -> Outcome {
    let mut parts = Vec::new();
    for name in ["sd3c1", "sd3c2"] {
        let v = catalog_verdicts(name)?;
        parts.push(require(&v, &format!("{name} ρΛ period 3"), |c| {
            c == "rho_module_period"
        }));
        parts.push(require(&v, &format!("{name} W candidates"), |c| c == "w_candidates"));
        parts.push(require(&v, &format!("{name} W period 3"), |c| {
            c.starts_with('w') && c.ends_with("_period")
        }));
        parts.push(self_ext_nonzero(name, 0, CATALOG_DEPTH));
    }
    all(parts)
}

fn criterion_9() -> Outcome {
    let v = catalog_verdicts("sd2a2")?;
    all(vec![
        require(&v, "Ω(X) ≅ αΛ", |c| c == "x_first_syzygy"),
        require(&v, "Ω²(X) ≅ (αβ)Λ", |c| c == "x_second_syzygy"),
        require(&v, "Ω³(S_0) ≅ rad((αβ)Λ)", |c| c == "s0_third_syzygy"),
        require(&v, "W found", |c| c == "w_candidates"),
        require(&v, "W indecomposable", |c| {
            c.starts_with('w') && c.ends_with("_indecomposable")
        }),
        require(&v, "W period 3", |c| c.starts_with('w') && c.ends_with("_period")),
    ])
}

fn criterion_10() -> Outcome {
    let mut parts = Vec::new();
    for name in ["triangle", "triangle_brauer", "brauer_loop"] {
        let v = catalog_verdicts(name)?;
        for check in [
            "projective_dimensions",
            "arrow_module_dimensions",
            "g_path_module_dimensions",
            "g_inverse_identity",
            "weak_symmetry",
        ] {
            parts.push(require(&v, &format!("{name} {check}"), |c| c == check));
        }
    }
    all(parts)
}

fn criterion_11() -> Outcome {
    let v = catalog_verdicts("triangle")?;
    all(vec![
        require(&v, "period 4 simples", |c| c.starts_with("quaternion_period_")),
        require(&v, "resolution terms", |c| {
            c.starts_with("quaternion_resolution_terms_")
        }),
        require(&v, "Ext^1..4 of 4-periodic non-rigid modules", |c| {
            c == "four_periodic_self_extensions"
        }),
    ])
}

fn criterion_12() -> Outcome {
    let mut parts = Vec::new();
    for name in ["gf2_c2", "gf2_c4", "gf3_c3", "gf5_c5"] {
        let v = catalog_verdicts(name)?;
        parts.push(require(&v, &format!("{name} non-rigid"), |c| {
            c == "non_projectives_non_rigid"
        }));
        parts.push(
            require(&v, &format!("{name} Ext certificate"), |c| c == "ext_nonvanishing").and_then(|note| {
                let certified = v
                    .iter()
                    .any(|x| x.check == "ext_nonvanishing" && x.detail.contains("certified for all degrees"));
                if certified {
                    Ok(note)
                } else {
                    Err(format!("{name}: no all-degree certificate"))
                }
            }),
        );
        parts.push(require(&v, &format!("{name} oracle"), |c| c.starts_with("oracle_")));
    }
    let pres = catalog::presentation("klein_four").map_err(|e| e.to_string())?;
    let oracle = Oracle::build(&pres).map_err(|e| e.to_string())?;
    let s = oracle.simple(0);
    let res = oracle.resolution(&s, 10);
    let dims: Vec<usize> = (1..=10).map(|i| Oracle::ext_from_resolution(&res, &s, i)).collect();
    parts.push(if dims[0] == 2 && !dims.contains(&0) {
        Ok(format!("klein_four Ext^i(S,S) = {dims:?}"))
    } else {
        Err(format!("klein_four Ext^i(S,S) = {dims:?}"))
    });
    all(parts)
}

fn main() -> ExitCode {
    let config = SweepConfig {
        n_max: 3,
        c_max: 9,
        shapes: vec![Shape::Cyclic, Shape::Linear],
        ext_depth: 20,
        field_chars: vec![2, 3],
        checks: lab::CheckKind::ALL.to_vec(),
        seed: SEED,
    };
    let instances = lab::enumerate_kupisch(&config).len();
    let sweep = lab::sweep(&config);
    println!(
        "sweep: {instances} algebras (n <= 3, c_i <= 9, cyclic up to rotation and linear), {} verdicts",
        sweep.len()
    );

    let mut outcomes = sweep_criteria(&sweep);
    outcomes.push(criterion_5(&sweep));
    outcomes.push(criterion_6());
    outcomes.push(criterion_7());
    outcomes.push(criterion_8());
    outcomes.push(criterion_9());
    outcomes.push(criterion_10());
    outcomes.push(criterion_11());
    outcomes.push(criterion_12());

    let mut failed = 0;
    for (i, outcome) in outcomes.iter().enumerate() {
        match outcome {
            Ok(note) => println!("criterion {:>2}: PASS  {note}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all {} criteria pass", outcomes.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of {} criteria fail", outcomes.len());
        ExitCode::FAILURE
    }
}
