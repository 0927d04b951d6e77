//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the summary is always printed. Exits
//! non-zero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use cherednik::algebra::Monomial;
use cherednik::linalg::{rank, Matrix};
use cherednik::reps::{
    beta_candidates, build_w, classify_all, direct_sum, enveloping_dimension, h_spectrum,
    is_irreducible, isomorphic_by_intertwiner, w_mu_sequence, w_truncation, RepKind,
    Representation,
};
use cherednik::{AlgebraParams, FieldElem, PbwAlgebra, Planck};
use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Parameter pairs for the relation, dimension and spectrum sweeps.
const SWEEP: [(u64, u32); 5] = [(3, 2), (5, 2), (3, 4), (5, 3), (7, 2)];
const C_DRAWS_PER_PAIR: usize = 5;
const SWEEP_SEED: u64 = 0x5eed_0001;
const CENTRALITY_PAIRS: [(u64, u32); 3] = [(3, 2), (5, 2), (3, 4)];
const CENTRALITY_SEED: u64 = 0x5eed_0006;
/// Minimum fraction of draws with every `dim W_m = pr`.
const GENERICITY_THRESHOLD: f64 = 0.90;
const GENERICITY_DRAWS: usize = 50;
const GENERICITY_SEED: u64 = 0x5eed_0008;
const IRREDUCIBILITY_CASES: usize = 30;
/// Required agreement between the spinning verdict and the fixture label.
const IRREDUCIBILITY_AGREEMENT: f64 = 1.0;
const RUNTIME_TARGET_SECS: f64 = 120.0;

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        passed: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        passed: false,
        detail: detail.into(),
    }
}

/// Central characters used by the sweep for one algebra: the nilpotent one,
/// a random `(a, b)` with `a != 0` and one with `a = 0`.
fn sweep_characters(params: &AlgebraParams, rng: &mut ChaCha8Rng) -> Vec<(FieldElem, FieldElem)> {
    let ctx = params.ctx();
    let beta = random_elem(ctx, rng);
    let a = random_nonzero(ctx, rng);
    let b = ctx.div(oracle_ab(params, beta), a).unwrap();
    // beta = -A_0 makes the product vanish, so a = 0, b != 0 is admissible.
    let b_only = random_nonzero(ctx, rng);
    vec![(ctx.zero(), ctx.zero()), (a, b), (ctx.zero(), b_only)]
}

fn sweep_params() -> Vec<AlgebraParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(SWEEP_SEED);
    let mut out = Vec::new();
    for (p, r) in SWEEP {
        let k = cherednik::min_ext_degree(p, r as u64).unwrap();
        let ctx = field(p, k);
        for t in [0, 1] {
            for _ in 0..C_DRAWS_PER_PAIR {
                out.push(random_params(&ctx, r, t, &mut rng));
            }
        }
    }
    out
}

fn sweep_reports() -> Vec<cherednik::ClassificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(SWEEP_SEED ^ 0xff);
    let mut out = Vec::new();
    for params in sweep_params() {
        for (a, b) in sweep_characters(&params, &mut rng) {
            out.push(classify_all(&params, a, b).unwrap());
        }
    }
    out
}

fn criterion_relations() -> Outcome {
    let mut reps = 0;
    for report in sweep_reports() {
        for class in &report.classes {
            reps += 1;
            if let Some(f) = class.relations.first_failure() {
                return fail(format!("{} fails {} at {:?}", class.label, f.name, f.first_failure));
            }
        }
    }
    if reps == 0 {
        return fail("no representations produced");
    }
    pass(format!("{reps} representations, zero residual"))
}

fn criterion_dimensions() -> Outcome {
    let mut checked = 0;
    for report in sweep_reports() {
        let params = &report.params;
        let n = match params.t() {
            Planck::One => params.pr(),
            Planck::Zero => params.r(),
        } as usize;
        for class in &report.classes {
            checked += 1;
            let dim = class.rep.dim();
            match class.rep.kind() {
                RepKind::V { .. } if dim != n => return fail(format!("{} has dim {dim} != {n}", class.label)),
                RepKind::W { .. } if dim > n => return fail(format!("{} has dim {dim} > {n}", class.label)),
                _ => {}
            }
        }
        for m in 0..params.r() {
            let mu = w_mu_sequence(params, m, n);
            if !mu[n].is_zero() || !oracle_w_mu(params, m, n)[n].is_zero() {
                return fail(format!("mu_N != 0 for m = {m} in {params:?}"));
            }
        }
    }
    pass(format!("{checked} classes; mu_N = 0 for every m"))
}

fn criterion_spectrum() -> Outcome {
    let mut checked = 0;
    for report in sweep_reports() {
        if report.params.t() != Planck::One {
            continue;
        }
        let ctx = report.params.ctx();
        let r = report.params.r() as usize;
        for class in &report.classes {
            let RepKind::V { beta, .. } = class.rep.kind() else {
                continue;
            };
            let spectrum = h_spectrum(&class.rep).unwrap();
            let mut expected = std::collections::BTreeMap::new();
            for i in 0..ctx.p() as i64 {
                expected.insert(ctx.add(*beta, ctx.from_int(i)), r);
            }
            if spectrum.eigenvalues != expected {
                return fail(format!("{}: spectrum differs from beta + F_p (x{r})", class.label));
            }
            checked += 1;
        }
    }
    pass(format!("{checked} t = 1 V-representations"))
}

fn criterion_classification_equation() -> Outcome {
    let mut v_checked = 0;
    for report in sweep_reports() {
        let ctx = report.params.ctx();
        for class in &report.classes {
            if let RepKind::V { a, b, .. } = class.rep.kind() {
                let prod = ctx.product(class.rep.mu().iter().copied());
                if prod != ctx.mul(*a, *b) {
                    return fail(format!("{}: prod mu != ab", class.label));
                }
                v_checked += 1;
            }
        }
    }
    let mut scans = Vec::new();
    for (k, c) in [(1, "1"), (2, "1,1"), (2, "0,2")] {
        for t in [0, 1] {
            let params = params_from_literals(3, k, 2, t, &[c]);
            let ctx = params.ctx();
            let (a, b) = (ctx.one(), ctx.zero());
            let brute: Vec<FieldElem> = ctx
                .elements()
                .filter(|&z| oracle_ab(&params, z) == ctx.mul(a, b))
                .collect();
            let cands = beta_candidates(&params, a, b).unwrap();
            let reported: Vec<FieldElem> = cands.roots.iter().map(|&(z, _)| z).collect();
            if brute != reported {
                return fail(format!("GF(3^{k}) c={c} t={t}: scan {brute:?} vs reported {reported:?}"));
            }
            let mut orbits: Vec<FieldElem> = brute
                .iter()
                .map(|&z| if t == 1 { orbit_min(ctx, z) } else { z })
                .collect();
            orbits.sort();
            orbits.dedup();
            let report = classify_all(&params, a, b).unwrap();
            if orbits.len() != report.classes.len() {
                return fail(format!("orbit count {} vs {} classes", orbits.len(), report.classes.len()));
            }
            for (i, c1) in report.classes.iter().enumerate() {
                for (j, c2) in report.classes.iter().enumerate() {
                    if isomorphic_by_intertwiner(&c1.rep, &c2.rep).unwrap() != (i == j) {
                        return fail(format!("intertwiner oracle disagrees on {} vs {}", c1.label, c2.label));
                    }
                }
            }
            scans.push(format!("GF(3^{k}) t={t}: {} class(es)", orbits.len()));
        }
    }
    pass(format!("{v_checked} V's satisfy prod mu = ab; {}", scans.join(", ")))
}

fn criterion_w_fixture() -> Outcome {
    let dims = |params: &AlgebraParams| -> Vec<(usize, usize)> {
        (0..params.r())
            .map(|m| (oracle_w_dim(params, m), build_w(params, m).dim()))
            .collect()
    };
    let mut cases = vec![
        (params_from_literals(3, 1, 2, 1, &["1"]), vec![1, 5]),
        (params_from_literals(5, 1, 2, 0, &["2"]), vec![2, 2]),
        (params_from_literals(3, 2, 2, 0, &["1,2"]), vec![2, 2]),
        (params_from_literals(7, 1, 2, 0, &["3"]), vec![2, 2]),
    ];
    for (p, r) in SWEEP {
        let k = cherednik::min_ext_degree(p, r as u64).unwrap();
        let zeros = vec!["0"; r as usize - 1];
        cases.push((params_from_literals(p, k, r, 1, &zeros), vec![p as usize; r as usize]));
        cases.push((params_from_literals(p, k, r, 0, &zeros), vec![1; r as usize]));
    }
    for (params, expected) in &cases {
        let got = dims(params);
        let oracle: Vec<usize> = got.iter().map(|&(o, _)| o).collect();
        let built: Vec<usize> = got.iter().map(|&(_, b)| b).collect();
        if &oracle != expected || &built != expected {
            return fail(format!("{params:?}: expected {expected:?}, oracle {oracle:?}, built {built:?}"));
        }
    }
    pass(format!("{} fixtures", cases.len()))
}

fn criterion_centrality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(CENTRALITY_SEED);
    let mut checks = 0;
    for (p, r) in CENTRALITY_PAIRS {
        let k = cherednik::min_ext_degree(p, r as u64).unwrap();
        let ctx = field(p, k);
        for t in [0, 1] {
            let params = random_params(&ctx, r, t, &mut rng);
            let alg = PbwAlgebra::new(params.clone());
            let n = if t == 1 { params.pr() } else { r };
            let mut central = vec![
                alg.monomial(Monomial::new(n, 0, 0), ctx.one()),
                alg.monomial(Monomial::new(0, n, 0), ctx.one()),
            ];
            if t == 0 {
                central.push(alg.element_h());
            }
            for e in &central {
                let check = alg.check_central(e).unwrap();
                if !check.central {
                    return fail(format!("{} is not central for {params:?}", alg.format(e)));
                }
                checks += 1;
            }
            if t == 1 {
                let h = alg.element_h();
                let hx = alg.commutator(&h, &alg.x()).unwrap();
                let hy = alg.commutator(&h, &alg.y()).unwrap();
                let hs = alg.commutator(&h, &alg.s()).unwrap();
                if hx != alg.x() || hy != alg.neg(&alg.y()).unwrap() || !hs.is_zero() {
                    return fail(format!("grading identities fail for {params:?}"));
                }
                checks += 3;
            }
        }
    }
    pass(format!("{checks} identities"))
}

fn monomial_image(rep: &Representation, m: Monomial) -> Matrix {
    let ctx = rep.ctx();
    rep.x()
        .pow(ctx, m.i as u64)
        .mul(ctx, &rep.y().pow(ctx, m.j as u64))
        .mul(ctx, &rep.s_power(m.l))
}

fn criterion_pbw() -> Outcome {
    let params = params_from_literals(3, 2, 2, 1, &["1"]);
    let ctx = params.ctx();
    let beta = ctx.parse("0,1").unwrap();
    let ab = oracle_ab(&params, beta);
    let mut reps = Vec::new();
    for (a, b) in [(ctx.one(), ab), (ab, ctx.one())] {
        let report = classify_all(&params, a, b).unwrap();
        if !report.complete || report.classes.len() != params.r() as usize {
            return fail(format!("(a, b) = ({}, {}) is not generic here", ctx.format(a), ctx.format(b)));
        }
        reps.extend(report.classes.into_iter().map(|c| c.rep));
    }
    let refs: Vec<&Representation> = reps.iter().collect();
    let sum = direct_sum(&refs).unwrap();
    let pr = params.pr();
    let r = params.r();
    let monomials: Vec<Monomial> = (0..pr)
        .flat_map(|i| (0..pr).flat_map(move |j| (0..r).map(move |l| Monomial::new(i, j, l))))
        .collect();
    // Only the diagonal blocks can be nonzero; flatten those.
    let mut rows = Vec::new();
    for &m in &monomials {
        let image = monomial_image(&sum, m);
        let mut row = Vec::new();
        let mut off = 0;
        for rep in &reps {
            for i in 0..rep.dim() {
                for j in 0..rep.dim() {
                    row.push(image.get(off + i, off + j));
                }
            }
            off += rep.dim();
        }
        rows.push(row);
    }
    let expected = (pr * pr * params.r()) as usize;
    let got = rank(ctx, &Matrix::from_rows(rows).unwrap());
    if got == expected {
        pass(format!("rank {got} = pr*pr*r over {} representations", reps.len()))
    } else {
        fail(format!("rank {got}, expected {expected}"))
    }
}

fn criterion_genericity() -> Outcome {
    let ctx = field(3, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(GENERICITY_SEED);
    let mut generic = 0;
    let mut bad_failures = 0;
    for _ in 0..GENERICITY_DRAWS {
        let params = random_params(&ctx, 2, 1, &mut rng);
        let pr = params.pr() as usize;
        let dims: Vec<usize> = (0..params.r()).map(|m| build_w(&params, m).dim()).collect();
        if dims.iter().all(|&d| d == pr) {
            generic += 1;
        } else {
            for (m, &d) in dims.iter().enumerate() {
                if d < pr && !(satisfies_d_equation(&params, m as u32, d) && oracle_w_dim(&params, m as u32) == d) {
                    bad_failures += 1;
                }
            }
        }
    }
    let fraction = generic as f64 / GENERICITY_DRAWS as f64;
    let detail = format!(
        "{generic}/{GENERICITY_DRAWS} draws ({:.1}%) have dim W_m = pr, threshold {:.0}%; {bad_failures} failures violate the D-equation",
        100.0 * fraction,
        100.0 * GENERICITY_THRESHOLD
    );
    if fraction >= GENERICITY_THRESHOLD && bad_failures == 0 {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn criterion_irreducibility() -> Outcome {
    let mut cases: Vec<(String, Representation, bool)> = Vec::new();
    let setups: Vec<(AlgebraParams, &str, &str)> = vec![
        (params_from_literals(3, 1, 2, 1, &["1"]), "0", "0"),
        (params_from_literals(3, 2, 2, 0, &["1"]), "1", "1"),
        (params_from_literals(5, 1, 2, 1, &["2"]), "0", "0"),
        (params_from_literals(5, 1, 2, 0, &["2"]), "0", "0"),
        (params_from_literals(3, 2, 4, 1, &["1", "0,1", "2"]), "0", "0"),
        (params_from_literals(5, 1, 1, 1, &[]), "1", "0"),
    ];
    let mut irreducibles: Vec<Representation> = Vec::new();
    for (params, a, b) in &setups {
        let ctx = params.ctx();
        let report = classify_all(params, ctx.parse(a).unwrap(), ctx.parse(b).unwrap()).unwrap();
        irreducibles.extend(report.classes.into_iter().map(|c| c.rep));
    }
    for rep in irreducibles.iter().take(12) {
        cases.push((rep.label(), rep.clone(), true));
    }
    'sums: for (i, r1) in irreducibles.iter().enumerate() {
        for r2 in &irreducibles[i..] {
            if r1.params() == r2.params() && r1.dim() + r2.dim() <= 12 {
                let label = format!("{} + {}", r1.label(), r2.label());
                cases.push((label, direct_sum(&[r1, r2]).unwrap(), false));
                if cases.len() >= 21 {
                    break 'sums;
                }
            }
        }
    }
    'trunc: for (params, _, _) in &setups {
        let n = params.generic_dim() as usize;
        for m in 0..params.r() {
            let d = build_w(params, m).dim();
            for extra in 1..=2 {
                if d + extra <= n + 1 {
                    cases.push((format!("W_{m} truncated to {}", d + extra), w_truncation(params, m, d + extra), false));
                }
                if cases.len() >= IRREDUCIBILITY_CASES {
                    break 'trunc;
                }
            }
        }
    }
    if cases.len() != IRREDUCIBILITY_CASES {
        return fail(format!("fixture has {} cases, expected {IRREDUCIBILITY_CASES}", cases.len()));
    }
    let mut agree = 0;
    let mut disagreements = Vec::new();
    for (label, rep, expected) in &cases {
        let spinning = is_irreducible(rep);
        let n = rep.dim();
        let burnside = enveloping_dimension(rep) == n * n;
        if spinning == *expected && burnside == *expected {
            agree += 1;
        } else {
            disagreements.push(label.clone());
        }
    }
    let fraction = agree as f64 / cases.len() as f64;
    let mut detail = format!("{agree}/{} agree", cases.len());
    if !disagreements.is_empty() {
        detail.push_str(&format!("; disagree on {disagreements:?}"));
    }
    if fraction >= IRREDUCIBILITY_AGREEMENT {
        pass(detail)
    } else {
        fail(detail)
    }
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "relation suite", criterion_relations),
        (2, "dimension claims", criterion_dimensions),
        (3, "h spectrum", criterion_spectrum),
        (4, "classification equation", criterion_classification_equation),
        (5, "W-dimension fixture", criterion_w_fixture),
        (6, "centrality", criterion_centrality),
        (7, "PBW faithfulness", criterion_pbw),
        (8, "genericity", criterion_genericity),
        (9, "irreducibility oracle", criterion_irreducibility),
    ];
    let start = Instant::now();
    let mut passed = 0;
    for (n, name, f) in criteria {
        let t0 = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            fail(format!("panicked: {msg}"))
        });
        if outcome.passed {
            passed += 1;
        }
        println!(
            "criterion {n} ({name}): {} - {} [{:.2}s]",
            if outcome.passed { "PASS" } else { "FAIL" },
            outcome.detail,
            t0.elapsed().as_secs_f64()
        );
    }
    let total = start.elapsed().as_secs_f64();
    println!(
        "acceptance: {passed}/{} criteria passed in {total:.1}s (runtime target {RUNTIME_TARGET_SECS:.0}s)",
        criteria.len()
    );
    if passed != criteria.len() {
        std::process::exit(1);
    }
}
