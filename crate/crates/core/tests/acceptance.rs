use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use wanas_core::catalog::{Catalog, GroupId};
use wanas_core::exactalg::{Monomial, Polynomial, Rational, VarId};
use wanas_core::geometry::{
    contract, contract_shortcut, form_from_operator, levi_civita, operator_from_form, symmetrize_operator, torsion, Components,
    Pipeline,
};
use wanas_core::liealg::{evaluate_spec, jacobi_residual, LieAlgebraSpec, MetricSignature, ParameterAssignment};
use wanas_core::soliton::{derivation_residual, residual_system, soliton_decide, SolitonKind, SolitonVerdict};
use wanas_core::verify::{reproduce_group, verify_paper, Certificate, GridSpec, Item, Report, Verdict, VerifyOptions};

type R3 = [Rational; 3];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

// Independent oracle, numeric only: brackets c[i][j][k], metric eps, J = diag(1, 1, -1).

fn numeric_brackets(spec: &LieAlgebraSpec) -> [[R3; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            std::array::from_fn(|k| spec.constants.get(i, j, k).as_constant().expect("numeric spec"))
        })
    })
}

/// Koszul, then drop the components that mix the ±1 eigenspaces of J.
fn oracle_connection(c: &[[R3; 3]; 3], eps: [i64; 3]) -> [[R3; 3]; 3] {
    let e = |k: usize| Rational::from_int(eps[k]);
    let low = |i: usize, j: usize, k: usize| &c[i][j][k] * &e(k);
    let j_sign = [1, 1, -1];
    let half = Rational::new(1, 2);
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            std::array::from_fn(|k| {
                if j_sign[j] != j_sign[k] {
                    return Rational::zero();
                }
                let s = &(&low(i, j, k) - &low(j, k, i)) + &low(k, i, j);
                &(&s * &half) * &e(k)
            })
        })
    })
}

fn oracle_torsion(g: &[[R3; 3]; 3], c: &[[R3; 3]; 3]) -> [[R3; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| std::array::from_fn(|k| &(&g[i][j][k] - &g[j][i][k]) - &c[i][j][k])))
}

fn oracle_a(t: &[[R3; 3]; 3]) -> [[[R3; 3]; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            std::array::from_fn(|k| {
                std::array::from_fn(|l| (0..3).fold(Rational::zero(), |acc, m| &acc + &(&t[i][j][m] * &t[m][k][l])))
            })
        })
    })
}

fn eval_at(p: &Polynomial, sigma: &ParameterAssignment) -> Rational {
    p.eval(sigma.values()).expect("point assigns every parameter")
}

fn grid_points(cat: &Catalog, id: GroupId) -> Vec<ParameterAssignment> {
    GridSpec::default().points(&cat.get_group(id).spec)
}

fn item_verdicts(cat: &Catalog, items: &[Item]) -> (usize, Vec<String>, Vec<(GroupId, Certificate)>) {
    let mut count = 0;
    let mut bad = Vec::new();
    let mut certs = Vec::new();
    for id in GroupId::ALL {
        for e in reproduce_group(cat, id).entries.iter().filter(|e| items.contains(&e.item)) {
            count += 1;
            if e.verdict == Verdict::Mismatch {
                bad.push(format!("{id} {:?} {:?}", e.item, e.location));
            }
            if let Some(c) = &e.certificate {
                certs.push((id, c.clone()));
            }
        }
    }
    (count, bad, certs)
}

fn connection(cat: &Catalog) -> Outcome {
    let start = Instant::now();
    let (count, bad, certs) = item_verdicts(cat, &[Item::Connection]);
    let elapsed = start.elapsed();
    let exact = certs
        .iter()
        .all(|(id, c)| matches!(c, Certificate::Identity) || (*id == GroupId::G4 && matches!(c, Certificate::EtaReduction)));

    let mut oracle_bad = Vec::new();
    let mut points = 0;
    for id in GroupId::ALL {
        let claimed = &cat.claimed_tensors(id).connection;
        for sigma in grid_points(cat, id).iter().take(40) {
            let numeric = evaluate_spec(&cat.get_group(id).spec, sigma).unwrap();
            let g = oracle_connection(&numeric_brackets(&numeric), numeric.signature.entries().map(i64::from));
            points += 1;
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        if eval_at(&claimed.gamma[i][j][k], sigma) != g[i][j][k] {
                            oracle_bad.push(format!("{id} {sigma} ({},{},{})", i + 1, j + 1, k + 1));
                        }
                    }
                }
            }
        }
    }
    let pass = bad.is_empty() && exact && oracle_bad.is_empty() && elapsed < Duration::from_secs(1);
    outcome(
        pass,
        format!(
            "{count} entries, {} mismatched, exact certificates: {exact}, oracle disagreements {} over {points} points, {:.3} s",
            bad.len(),
            oracle_bad.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn torsion_crit(cat: &Catalog) -> Outcome {
    let (count, bad, _) = item_verdicts(cat, &[Item::Torsion]);
    let mut oracle_bad = 0;
    for id in GroupId::ALL {
        let claimed = &cat.claimed_tensors(id).torsion;
        for sigma in grid_points(cat, id).iter().take(40) {
            let numeric = evaluate_spec(&cat.get_group(id).spec, sigma).unwrap();
            let c = numeric_brackets(&numeric);
            let t = oracle_torsion(&oracle_connection(&c, numeric.signature.entries().map(i64::from)), &c);
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        if eval_at(&claimed.t[i][j][k], sigma) != t[i][j][k] {
                            oracle_bad += 1;
                        }
                    }
                }
            }
        }
    }
    outcome(
        bad.is_empty() && oracle_bad == 0,
        format!("{count} entries, {} mismatched, {oracle_bad} oracle disagreements", bad.len()),
    )
}

fn matrices(cat: &Catalog) -> Outcome {
    let items = [Item::ATensor, Item::Abar, Item::Ric, Item::Wan, Item::WanTilde];
    let mut count = 0;
    let mut mismatched = 0;
    let mut on_variety = 0;
    let mut unimodular_inexact = 0;
    for id in GroupId::ALL {
        for e in reproduce_group(cat, id).entries.iter().filter(|e| items.contains(&e.item)) {
            count += 1;
            match e.verdict {
                Verdict::Mismatch => mismatched += 1,
                Verdict::MatchOnVariety => {
                    on_variety += 1;
                    if id.unimodular() {
                        unimodular_inexact += 1;
                    }
                }
                Verdict::Match => {}
            }
        }
    }
    let mut oracle_bad = 0;
    for id in GroupId::ALL {
        let claimed = &cat.claimed_tensors(id).a_tensor;
        for sigma in grid_points(cat, id).iter().take(20) {
            let numeric = evaluate_spec(&cat.get_group(id).spec, sigma).unwrap();
            let c = numeric_brackets(&numeric);
            let a = oracle_a(&oracle_torsion(&oracle_connection(&c, numeric.signature.entries().map(i64::from)), &c));
            for (i, j, k, l) in (0..81).map(|n| (n / 27, n / 9 % 3, n / 3 % 3, n % 3)) {
                if eval_at(&claimed.k[i][j][k][l], sigma) != a[i][j][k][l] {
                    oracle_bad += 1;
                }
            }
        }
    }
    outcome(
        mismatched == 0 && unimodular_inexact == 0 && oracle_bad == 0,
        format!(
            "{count} entries, {mismatched} mismatched, {on_variety} on the variety ({unimodular_inexact} for G1-G4), {oracle_bad} A-tensor oracle disagreements"
        ),
    )
}

fn theorem_cases(report: &Report) -> Outcome {
    let cases: Vec<_> = report.groups.iter().flat_map(|g| g.theorem_cases.iter()).collect();
    let failing: Vec<String> =
        cases.iter().filter(|c| !c.passed).map(|c| format!("{} {} ({})", c.group, c.kind, c.label)).collect();
    let per_group: BTreeMap<GroupId, usize> = cases.iter().fold(BTreeMap::new(), |mut m, c| {
        *m.entry(c.group).or_insert(0) += 1;
        m
    });
    // every group with a soliton claim contributes cases
    let covered = [GroupId::G2, GroupId::G3, GroupId::G4, GroupId::G5, GroupId::G6, GroupId::G7]
        .iter()
        .all(|id| per_group.get(id).copied().unwrap_or(0) > 0);
    outcome(
        failing.is_empty() && covered && !cases.is_empty(),
        format!("{} cases, {} failing {:?}", cases.len(), failing.len(), failing),
    )
}

fn grids(report: &Report, elapsed: Duration) -> Outcome {
    let sizes_ok = report.classifications.iter().all(|c| (200..=5000).contains(&c.total));
    let disagree: usize = report.classifications.iter().map(|c| c.disagree).sum();
    let total: usize = report.classifications.iter().map(|c| c.total).sum();
    let g1: Vec<_> = report.classifications.iter().filter(|c| c.group == GroupId::G1).collect();
    let g1_none = g1.len() == 2
        && g1.iter().all(|c| {
            c.points.iter().all(|p| matches!(p.computed, Some(SolitonVerdict::NoSoliton { .. })))
        });
    let complete = report.classifications.len() == 14;
    outcome(
        sizes_ok && disagree == 0 && g1_none && complete && elapsed < Duration::from_secs(30),
        format!(
            "{total} points over {} grids, {disagree} disagree, sizes within [200, 5000]: {sizes_ok}, G1 all no_soliton: {g1_none}, verify-paper {:.1} s",
            report.classifications.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn identity_remarks(cat: &Catalog) -> Outcome {
    let mut details = Vec::new();
    let mut pass = true;
    for id in [GroupId::G3, GroupId::G5] {
        let pipe = Pipeline::canonical(&cat.get_group(id).spec);
        let holds = pipe.wan_tilde == pipe.wan;
        pass &= holds;
        details.push(format!("{id}: {holds}"));
    }
    outcome(pass, details.join(", "))
}

fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    const VARS: [VarId; 5] = [VarId::Alpha, VarId::Beta, VarId::Gamma, VarId::Delta, VarId::Eta];
    let mono = proptest::collection::vec(0usize..5, 0..4)
        .prop_map(|vs| vs.into_iter().fold(Monomial::one(), |m, v| m.mul(&Monomial::var(VARS[v]))));
    proptest::collection::vec(((-6i64..=6, 1i64..=4), mono), 0..5).prop_map(|terms| {
        terms.into_iter().map(|((n, d), m)| Polynomial::term(Rational::new(n, d), m)).sum()
    })
}

fn properties(cat: &Catalog) -> Outcome {
    let mut failures = Vec::new();
    let mut exhaustive = 0usize;
    for id in GroupId::ALL {
        let spec = &cat.get_group(id).spec;
        let residual_zero = if id.unimodular() || spec.equations().next().is_none() {
            jacobi_residual(spec).iter().all(Polynomial::is_zero)
        } else {
            grid_points(cat, id).iter().all(|s| jacobi_residual(&evaluate_spec(spec, s).unwrap()).iter().all(Polynomial::is_zero))
        };
        if !residual_zero {
            failures.push(format!("{id} jacobi"));
        }
        let lc = levi_civita(spec);
        let sig: MetricSignature = spec.signature;
        let metric = (0..27).all(|n| {
            let (i, j, k) = (n / 9, n / 3 % 3, n % 3);
            (&lc.gamma[i][j][k].scale(&sig.eps_rational(k)) + &lc.gamma[i][k][j].scale(&sig.eps_rational(j))).is_zero()
        });
        if !metric || !torsion(&lc, spec).is_zero() {
            failures.push(format!("{id} levi-civita"));
        }
        let pipe = Pipeline::canonical(spec);
        for k in [pipe.curvature.clone().into(), pipe.a_tensor.clone(), pipe.wanas.clone()] {
            if contract(&k, sig) != contract_shortcut(&k) {
                failures.push(format!("{id} contraction"));
            }
        }
        for m in [&pipe.abar, &pipe.ric, &pipe.wan, &pipe.wan_tilde] {
            if operator_from_form(&form_from_operator(m, sig), sig) != *m {
                failures.push(format!("{id} round trip"));
            }
            let s = form_from_operator(&symmetrize_operator(m, sig), sig);
            if (0..9).any(|n| s.s[n / 3][n % 3] != s.s[n % 3][n / 3]) {
                failures.push(format!("{id} symmetrization"));
            }
        }
        for sigma in grid_points(cat, id) {
            let numeric = evaluate_spec(spec, &sigma).unwrap();
            let pipe = Pipeline::canonical(&numeric);
            for kind in SolitonKind::BOTH {
                let wan = kind.operator(&pipe);
                let sound = match soliton_decide(&numeric, kind, &pipe) {
                    Ok(SolitonVerdict::Soliton { c, d }) => {
                        let d_op = wanas_core::geometry::Operator3 {
                            m: std::array::from_fn(|i| std::array::from_fn(|j| Polynomial::constant(d[i][j].clone()))),
                        };
                        let cid = wanas_core::geometry::Operator3::identity().scale(&Polynomial::constant(c));
                        d_op.add(&cid) == *wan && derivation_residual(&d_op, &numeric).is_zero()
                    }
                    Ok(SolitonVerdict::SolitonAnyC { .. }) => residual_system(&numeric, wan).is_identically_zero(),
                    Ok(SolitonVerdict::NoSoliton { witness }) => !witness.is_empty(),
                    Err(_) => false,
                };
                exhaustive += 1;
                if !sound {
                    failures.push(format!("{id} {sigma} {kind} soundness"));
                }
            }
        }
    }

    let mut runner = TestRunner::new(Config { cases: 1000, ..Config::default() });
    let random = runner.run(&(poly_strategy(), poly_strategy(), poly_strategy()), |(a, b, c)| {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        let back: Polynomial = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
        Ok(())
    });
    if let Err(e) = random {
        failures.push(format!("random ring axioms: {e}"));
    }
    outcome(
        failures.is_empty(),
        format!("{exhaustive} soundness re-substitutions, 1000 random ring cases, failures {failures:?}"),
    )
}

fn determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("wanas-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let run = |name: &str| {
        let path = dir.join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_wanas"))
            .args(["verify-paper", "--out"])
            .arg(&path)
            .env_remove("WANAS_CATALOG")
            .output()
            .expect("binary runs")
            .status;
        (status.code(), std::fs::read(&path).unwrap_or_default())
    };
    let (s1, a) = run("a.json");
    let (s2, b) = run("b.json");
    let _ = std::fs::remove_dir_all(&dir);
    outcome(
        s1 == Some(0) && s2 == Some(0) && !a.is_empty() && a == b,
        format!("exit codes {s1:?}/{s2:?}, {} bytes, identical: {}", a.len(), a == b),
    )
}

fn main() -> ExitCode {
    let cat = Catalog::embedded().expect("embedded catalog loads");
    let start = Instant::now();
    let report = verify_paper(&cat, &VerifyOptions::default());
    let elapsed = start.elapsed();

    let results = [
        ("connection reproduction", connection(&cat)),
        ("torsion reproduction", torsion_crit(&cat)),
        ("matrix reproduction", matrices(&cat)),
        ("theorem sufficiency", theorem_cases(&report)),
        ("grid classification", grids(&report, elapsed)),
        ("identity remarks", identity_remarks(&cat)),
        ("property suites", properties(&cat)),
        ("determinism", determinism()),
    ];
    let mut failed = 0;
    for (n, (name, o)) in results.iter().enumerate() {
        println!("[{}] {}. {name}: {}", if o.pass { "PASS" } else { "FAIL" }, n + 1, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
