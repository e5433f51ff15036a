//! Exit gate: one PASS/FAIL line per acceptance criterion.
//!
//! Runs without the libtest harness so the lines always appear in the output.

use std::process::ExitCode;
use std::thread;

use kn_algebra::axioms::{verify_axioms, Coverage};
use kn_algebra::cli;
use kn_algebra::crosscheck::cross_check_geometry;
use kn_algebra::doubling::{cross_check_doubling, RingSpec};
use kn_algebra::geometry::GeometryConfig;
use kn_algebra::kernel::{Rational, Scalar};
use kn_algebra::morphisms::{check_all_r_maps, check_embedding_iso_witt, check_ovs_map, window_derivations};
use kn_algebra::ovs::check_three_point_isomorphism;
use kn_algebra::presentations::AlgebraHandle;
use kn_algebra::representations::{classify_lambda_jordan, RepMode};
use kn_algebra::simplicity::{forge_step, seed_sweep, simplicity_witness, verify_witness};
use kn_algebra::Result;

type Outcome = Result<(bool, String)>;
type Criterion = (&'static str, fn() -> Outcome);

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

const S_VALUES: [(i64, i64); 7] = [(1, 1), (2, 1), (3, 1), (1, 2), (3, 2), (-1, 1), (2, 3)];
const THETA_P: [((i64, i64), i64); 7] = [
    ((1, 1), -1),
    ((2, 1), 1),
    ((-1, 1), 2),
    ((1, 2), -2),
    ((3, 1), 1),
    ((-2, 3), 3),
    ((5, 4), -1),
];
const TORUS: [((i64, i64), (i64, i64)); 7] = [
    ((1, 1), (1, 1)),
    ((0, 1), (1, 1)),
    ((1, 1), (0, 1)),
    ((2, 1), (-1, 1)),
    ((1, 2), (3, 1)),
    ((-1, 1), (2, 1)),
    ((3, 2), (1, 3)),
];

/// Every instance with the seven parameter values it is checked at.
fn instances() -> Result<Vec<AlgebraHandle>> {
    let mut out = Vec::new();
    for (n, d) in S_VALUES {
        let s = q(n, d);
        out.push(AlgebraHandle::a03(&s)?);
        out.push(AlgebraHandle::g03(&s)?);
        out.push(AlgebraHandle::l03(&s)?);
        out.push(AlgebraHandle::j03(&s)?);
        out.push(AlgebraHandle::j03_unital(&s)?);
    }
    out.push(AlgebraHandle::ak1());
    out.push(AlgebraHandle::k1());
    out.push(AlgebraHandle::witt());
    for ((n, d), p) in THETA_P {
        let t = q(n, d);
        out.push(AlgebraHandle::jsigma(&t, p, &q(1, 2))?);
        out.push(AlgebraHandle::jsigma(&t, p, &q(1, 1))?);
        out.push(AlgebraHandle::lthetap(&t, p)?);
    }
    for ((a, b), (c, d)) in TORUS {
        let (t1, t2) = (q(a, b), q(c, d));
        out.push(AlgebraHandle::jtorus(&t1, &t2, &q(1, 2))?);
        out.push(AlgebraHandle::jtorus(&t1, &t2, &q(1, 1))?);
        out.push(AlgebraHandle::ltorus(&t1, &t2));
    }
    Ok(out)
}

fn label(h: &AlgebraHandle) -> String {
    let ps: Vec<String> = h.params().iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{}({})", h.name(), ps.join(", "))
}

fn axiom_suites() -> Outcome {
    let all = instances()?;
    let results: Vec<Result<(String, u64, u64)>> = thread::scope(|sc| {
        let jobs: Vec<_> = all
            .iter()
            .map(|h| {
                sc.spawn(move || {
                    let r = verify_axioms(h, 5, Coverage::Exhaustive)?;
                    let checked = r.outcomes.iter().map(|o| o.tuples_checked).sum();
                    Ok((label(h), checked, r.violations()))
                })
            })
            .collect();
        jobs.into_iter().map(|j| j.join().expect("worker panicked")).collect()
    });
    let mut tuples = 0;
    let mut bad = Vec::new();
    for r in results {
        let (name, checked, violations) = r?;
        tuples += checked;
        if violations > 0 {
            bad.push(format!("{name}: {violations}"));
        }
    }
    Ok((
        bad.is_empty(),
        format!("{} instances, {tuples} tuples at window 5; failing: {bad:?}", all.len()),
    ))
}

fn geometry_cross_check() -> Outcome {
    let mut pairs = 0;
    let mut bad = Vec::new();
    for s in [1, 2, 3] {
        let s = Rational::from_int(s);
        for h in [
            AlgebraHandle::a03(&s)?,
            AlgebraHandle::g03(&s)?,
            AlgebraHandle::l03(&s)?,
            AlgebraHandle::j03(&s)?,
            AlgebraHandle::j03_unital(&s)?,
        ] {
            let r = cross_check_geometry(&h, 5)?;
            pairs += r.pairs_checked;
            if !r.passed() {
                bad.push(format!("{}: {:?}", label(&h), r.first_mismatch));
            }
        }
    }
    Ok((bad.is_empty(), format!("{pairs} products compared; failing: {bad:?}")))
}

fn doubling_cross_check() -> Outcome {
    let mut pairs = 0;
    let mut bad = Vec::new();
    let mut handles = Vec::new();
    for (t, p) in [(1, 1), (1, -1), (2, 2)] {
        let t = Rational::from_int(t);
        handles.push(AlgebraHandle::jsigma(&t, p, &q(1, 2))?);
        handles.push(AlgebraHandle::jsigma(&t, p, &q(1, 1))?);
        handles.push(AlgebraHandle::lthetap(&t, p)?);
    }
    for (t1, t2) in [(1, 1), (0, 1)] {
        let (t1, t2) = (Rational::from_int(t1), Rational::from_int(t2));
        handles.push(AlgebraHandle::jtorus(&t1, &t2, &q(1, 2))?);
        handles.push(AlgebraHandle::jtorus(&t1, &t2, &q(1, 1))?);
        handles.push(AlgebraHandle::ltorus(&t1, &t2));
    }
    for h in &handles {
        let r = cross_check_doubling(h, 5)?;
        pairs += r.pairs_checked;
        if !r.passed() {
            bad.push(format!("{}: {:?}", label(h), r.first_mismatch));
        }
    }
    // Torus with theta1 = 0 against the p = 2 family: x^2 = 1 - theta2*y^4.
    let mut coincide = true;
    let mut literal = true;
    for t in [1, 2, -3] {
        let t = Rational::from_int(t);
        let neg = -t.clone();
        for sigma in [q(1, 2), q(1, 1)] {
            let family = AlgebraHandle::jsigma(&t, 2, &sigma)?.table(5)?;
            coincide &= AlgebraHandle::jtorus(&Rational::ZERO, &neg, &sigma)?.table(5)? == family;
            literal &= AlgebraHandle::jtorus(&Rational::ZERO, &t, &sigma)?.table(5)? == family;
        }
        coincide &= AlgebraHandle::ltorus(&Rational::ZERO, &neg).table(5)? == AlgebraHandle::lthetap(&t, 2)?.table(5)?;
    }
    Ok((
        bad.is_empty() && coincide,
        format!(
            "{pairs} products compared; failing: {bad:?}; torus(0, -theta) = p=2 family(theta): {coincide}; \
             with the same sign: {literal}"
        ),
    ))
}

fn ovs_isomorphism() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for s in [1, 2] {
        let s = Rational::from_int(s);
        let iso = check_three_point_isomorphism(&s, 4)?;
        let map = check_ovs_map(&s, 4, &Scalar::ONE)?;
        ok &= iso.passed() && map.passed() && map.injective();
        notes.push(format!(
            "s={s}: {} brackets, {} violations, rank {}/{}; map {} pairs, {} violations, rank {}/{}",
            iso.brackets_checked,
            iso.bracket_violations,
            iso.image_rank,
            iso.even_dimension,
            map.pairs_checked,
            map.violations,
            map.image_rank,
            map.domain_dimension
        ));
    }
    Ok((ok, format!("N=4; {}", notes.join("; "))))
}

fn derivations() -> Outcome {
    let s = Rational::ONE;
    let maps = check_all_r_maps(&s, 4)?;
    let failing = maps.iter().filter(|m| !m.passed()).count();
    let space = window_derivations(&s, 4, 4)?;
    Ok((
        failing == 0 && space.matches(),
        format!(
            "{} R maps, {failing} failing; window derivation dimension {} ({} even, {} odd) vs {} fitting elements of L03 (rank {})",
            maps.len(),
            space.dimension(),
            space.even_dimension,
            space.odd_dimension,
            space.lie_window_dimension(),
            space.r_span_rank
        ),
    ))
}

fn geometric_lambdas() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for s in [1, 2] {
        let mode = RepMode::Geometric(GeometryConfig::three(Rational::from_int(s))?);
        let lams = [q(-1, 1), q(-1, 2), q(0, 1), q(1, 2), q(1, 1)];
        for v in classify_lambda_jordan(&mode, &lams, 4)? {
            let expected = v.lambda == q(0, 1) || v.lambda == q(1, 2);
            ok &= v.closed == expected && (v.closed || v.witness.is_some());
            notes.push(format!("s={s} lambda={}: {}", v.lambda, if v.closed { "closed" } else { "witness" }));
        }
    }
    Ok((ok, notes.join(", ")))
}

fn algebraic_lambdas() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for (t, p) in [(1, -1), (2, 1)] {
        let mode = RepMode::Algebraic {
            theta: Rational::from_int(t),
            p,
        };
        let lams = [q(0, 1), q(1, 8), q(1, 4), q(1, 3), q(1, 2), q(1, 1)];
        for v in classify_lambda_jordan(&mode, &lams, 4)? {
            let want = if v.lambda == q(1, 4) {
                Some(format!("Jsigma(theta={t}, p={p}, sigma=1)"))
            } else if v.lambda == q(0, 1) || v.lambda == q(1, 2) {
                Some(format!("Jsigma(theta={t}, p={p}, sigma=1/2)"))
            } else {
                None
            };
            ok &= v.closed == want.is_some() && v.matches == want;
            notes.push(format!(
                "({t},{p}) lambda={}: {}",
                v.lambda,
                v.matches.clone().unwrap_or_else(|| "fails".into())
            ));
        }
    }
    Ok((ok, notes.join(", ")))
}

fn embeddings() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for s in [1, 2, 3] {
        for lie in [false, true] {
            let e = check_embedding_iso_witt(&Rational::from_int(s), 4, lie)?;
            ok &= e.passed() && (lie || e.printed.len() == 3);
            notes.push(format!(
                "s={s} {}->{}: {} outside, {} relation violations, {} printed images match",
                e.source,
                e.target,
                e.outside_subalgebra,
                e.relations.violations,
                e.printed.iter().filter(|p| p.matches).count()
            ));
        }
    }
    Ok((ok, notes.join("; ")))
}

fn simplicity() -> Outcome {
    let mut witnesses = 0;
    let mut forged = 0;
    let mut ok = true;
    for (t, p) in [(1, 1), (1, -1), (2, 2), (-1, 1)] {
        let spec = RingSpec::hyperelliptic(Rational::from_int(t), p)?;
        for seed in seed_sweep(&spec, 4)? {
            let w = simplicity_witness(&spec, &seed)?;
            witnesses += 1;
            ok &= verify_witness(&w);
            for i in 0..w.len() {
                forged += 1;
                ok &= !verify_witness(&forge_step(&w, i));
            }
        }
    }
    Ok((ok, format!("{witnesses} witnesses verified, {forged} forged steps rejected")))
}

fn determinism() -> Outcome {
    let dir = std::env::temp_dir();
    let spec = dir.join(format!("kn-acceptance-{}.json", std::process::id()));
    std::fs::write(
        &spec,
        r#"{"source": {"name": "Witt"}, "target": {"name": "K1"},
            "images": [{"key": "L_-1", "vector": {"L_-1": "1"}}, {"key": "L_0", "vector": {"L_0": "1"}},
                       {"key": "L_1", "vector": {"L_1": "1"}}]}"#,
    )
    .expect("temp dir is writable");
    let spec_arg = spec.display().to_string();
    let commands: Vec<Vec<&str>> = vec![
        vec!["table", "J03", "--window", "3"],
        vec!["verify-axioms", "Jsigma", "--window", "3", "--format", "json"],
        vec!["cross-check", "L03", "--window", "3", "--format", "csv"],
        vec!["ovs", "--window", "3"],
        vec!["classify-lambda", "--window", "3", "--format", "json"],
        vec!["check-hom", "--spec", &spec_arg, "--window", "0"],
        vec!["simplicity", "--seed", "y^2+x*y", "--format", "json"],
        vec!["embed-witt", "--window", "3", "--format", "latex"],
        vec!["doubling-check", "LTorus", "--window", "3"],
        vec!["derivations", "--window", "3", "--margin", "3"],
        vec!["table", "Lthetap", "--window", "2", "--params-sweep", "--format", "csv"],
    ];
    let mut bad = Vec::new();
    for c in &commands {
        let a = cli::run(c.iter().copied());
        let b = cli::run(c.iter().copied());
        if a != b || a.code != 0 {
            bad.push(c.join(" "));
        }
    }
    let _ = std::fs::remove_file(&spec);
    Ok((bad.is_empty(), format!("{} subcommands run twice; differing or failing: {bad:?}", commands.len())))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("axiom suites", axiom_suites),
        ("geometry cross-check", geometry_cross_check),
        ("doubling cross-check", doubling_cross_check),
        ("ovs isomorphism", ovs_isomorphism),
        ("derivations", derivations),
        ("geometric weights", geometric_lambdas),
        ("algebraic weights", algebraic_lambdas),
        ("embeddings", embeddings),
        ("simplicity", simplicity),
        ("determinism", determinism),
    ];
    let results: Vec<Outcome> = thread::scope(|sc| {
        let jobs: Vec<_> = criteria.iter().map(|(_, f)| sc.spawn(f)).collect();
        jobs.into_iter().map(|j| j.join().expect("criterion panicked")).collect()
    });
    let mut all = true;
    for (i, ((name, _), r)) in criteria.iter().zip(results).enumerate() {
        let (ok, detail) = r.unwrap_or_else(|e| (false, format!("error: {e}")));
        all &= ok;
        println!("criterion {:>2} {name}: {} ({detail})", i + 1, if ok { "PASS" } else { "FAIL" });
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
