//! Acceptance criteria for the workbench, one PASS/FAIL line each.
//!
//! Runs with its own harness: `cargo test --test acceptance`.
mod common;

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use quiverlab::claims::quotient_exact_sequence;
use quiverlab::family::{example211, loop_truncated, nakayama_indecomposables, semisimple, Indecomposable};
use quiverlab::homolog::{
    ext_dims, homological_profile, is_n_auslander, is_n_min_ag, min_ag_branch, minimal_resolution, pd,
    sub2_q_test, Dimension, Direction, Gorenstein, HigherAg, MinAgBranch, DEFAULT_CAP,
};
use quiverlab::ideal::annihilator_of_element;
use quiverlab::module::{direct_sum, projective, regular, ModuleMorphism};
use quiverlab::oracle::{
    brute_axioms, brute_torsion_submodule, enumerate_left_ideals, enumerate_submodules, maranda_roundtrip,
};
use quiverlab::quotient::{quotient_exactness, is_closed, localize};
use quiverlab::report::emit_table;
use quiverlab::theorems::{dense_topology, q_topology, verify_quotient_injectives, verify_closed_iff_small_gpd};
use quiverlab::topology::{dense_primes, annihilator_criterion};
use quiverlab::{Field, PathAlgebra, Representation};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn fields() -> [Field; 2] {
    [Field::Rational, Field::prime(2).unwrap()]
}

fn build(n: usize, field: Field) -> (Arc<PathAlgebra>, Vec<Indecomposable>) {
    let alg = Arc::new(example211(n, field).unwrap());
    let ind = nakayama_indecomposables(&alg).unwrap();
    (alg, ind)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn table_regression() -> Outcome {
    let mut slowest = Duration::ZERO;
    for n in 1..=3 {
        for field in fields() {
            let start = Instant::now();
            let (alg, ind) = build(n, field);
            let report = emit_table(&alg, "example211", &ind, DEFAULT_CAP).map_err(|e| e.to_string())?;
            let cell = |name: &str| {
                report
                    .row(name)
                    .map(|r| (r.pd, r.id))
                    .ok_or_else(|| format!("n={n} {field}: no row {name}"))
            };
            let fin = Dimension::Finite;
            for j in 1..=n + 2 {
                // S(n+2) = P(n+2) is listed under its projective name
                let name = if j == n + 2 { format!("P({j})") } else { format!("S({j})") };
                let got = cell(&name)?;
                ensure(got == (fin(n + 2 - j), fin(j - 1)), || format!("n={n} {field}: S({j}) has {got:?}"))?;
            }
            for i in 1..=n + 1 {
                let got = cell(&format!("P({i})"))?;
                ensure(got == (fin(0), fin(0)), || format!("n={n} {field}: P({i}) has {got:?}"))?;
            }
            let got = cell(&format!("P({})", n + 2))?;
            ensure(got == (fin(0), fin(n + 1)), || format!("n={n} {field}: P({}) has {got:?}", n + 2))?;
            ensure(report.rows.len() == 2 * n + 3, || format!("n={n}: {} rows", report.rows.len()))?;
            within(start, Duration::from_secs(5), &format!("n={n} {field}"))?;
            slowest = slowest.max(start.elapsed());
        }
    }
    Ok(format!("n = 1..3 over Q and F2, slowest {slowest:.2?}"))
}

fn dimension_profile() -> Outcome {
    for n in 1..=4 {
        for field in fields() {
            let (alg, _) = build(n, field);
            let p = homological_profile(&alg, DEFAULT_CAP);
            let want = Dimension::Finite(n + 1);
            ensure(
                [p.gldim, p.domdim, p.id_left, p.id_right].iter().all(|&d| d == want),
                || format!("n={n} {field}: gldim {} domdim {} id {}/{}", p.gldim, p.domdim, p.id_left, p.id_right),
            )?;
            let aus = is_n_auslander(&alg, n, DEFAULT_CAP).map_err(|e| e.to_string())?;
            let ag = is_n_min_ag(&alg, n, DEFAULT_CAP).map_err(|e| e.to_string())?;
            ensure(aus && ag, || format!("n={n} {field}: n-Auslander {aus}, n-min AG {ag}"))?;
        }
    }
    Ok("gldim = domdim = id = n+1, n-Auslander and n-minimal AG for n = 1..4".into())
}

fn injective_resolution_shape() -> Outcome {
    for n in 1..=4 {
        for field in fields() {
            let (alg, _) = build(n, field);
            let res = minimal_resolution(&regular(&alg), Direction::Injective, DEFAULT_CAP);
            let mut got: Vec<Vec<usize>> = res.labels.iter().map(|l| l.iter().map(|v| v + 1).collect()).collect();
            for t in &mut got {
                t.sort_unstable();
            }
            let mut want: Vec<Vec<usize>> = vec![(2..=n + 2).chain([n + 2]).collect()];
            want.extend((1..=n + 1).rev().map(|i| vec![i]));
            ensure(got == want && res.terminated, || format!("n={n} {field}: {got:?}"))?;
        }
    }
    Ok("I(2)+…+I(n+2)+I(n+2) → I(n+1) → … → I(1), n+2 terms, n = 1..4".into())
}

fn torsion_and_topology() -> Outcome {
    for n in 1..=4 {
        for field in fields() {
            let (alg, ind) = build(n, field);
            let topology = dense_topology(&alg).map_err(|e| e.to_string())?;
            let pair = topology.pair();
            let torsion: Vec<&str> = ind.iter().filter(|i| pair.is_torsion(&i.module)).map(|i| i.name.as_str()).collect();
            ensure(torsion == ["S(1)"], || format!("n={n} {field}: torsion {torsion:?}"))?;
            for i in &ind {
                let by_kernels = common::torsion_by_kernels(&i.module, pair.cogenerator());
                let fully = by_kernels == i.module.dims();
                ensure(fully == pair.is_torsion(&i.module), || format!("n={n}: {} kernel route disagrees", i.name))?;
            }
            ensure(topology.j0().dim() + 1 == alg.dim(), || format!("n={n}: dim J0 = {}", topology.j0().dim()))?;
            let cert = HigherAg::certify(&alg, n, DEFAULT_CAP).map_err(|e| e.to_string())?;
            let primes = dense_primes(&topology, &cert).map_err(|e| e.to_string())?;
            let dense: Vec<(usize, usize)> = primes.iter().filter(|p| p.dense).map(|p| (p.vertex, p.gpd)).collect();
            ensure(dense == [(1, n + 1)], || format!("n={n} {field}: dense primes {dense:?}"))?;
        }
    }
    Ok("torsion indecomposables {S(1)}, dim J0 = dim Γ − 1, dense primes {p_1} with gpd n+1".into())
}

fn closed_by_ext(j0_quotient: &Representation, m: &Representation) -> bool {
    let ext = common::ext_by_injective_resolution(j0_quotient, m, 1);
    ext[0] == 0 && ext[1] == 0
}

fn theorem_sweep() -> Outcome {
    let mut slowest = Duration::ZERO;
    for n in 1..=4 {
        for field in fields() {
            let start = Instant::now();
            let (alg, ind) = build(n, field);
            let report = verify_closed_iff_small_gpd(&alg, n, &ind, DEFAULT_CAP).map_err(|e| e.to_string())?;
            ensure(report.holds(), || format!("n={n} {field}: mismatches {:?}", report.mismatches))?;
            ensure(report.rows.len() == 2 * n + 3, || format!("n={n}: {} rows", report.rows.len()))?;
            let gor = Gorenstein::certify(&alg, DEFAULT_CAP).map_err(|e| e.to_string())?;
            let topology = q_topology(&alg).map_err(|e| e.to_string())?;
            let quotient = topology.quotient_by_j0();
            for i in &ind {
                let grade = gor.gpd(&i.module).map_err(|e| e.to_string())?;
                let by_pd = pd(&i.module, DEFAULT_CAP).finite();
                let by_sub2 = sub2_q_test(&i.module);
                ensure(by_pd == Some(grade), || format!("n={n}: {} grade {grade} pd {by_pd:?}", i.name))?;
                ensure((grade < n) == by_sub2, || format!("n={n}: {} gpd {grade} Sub² {by_sub2}", i.name))?;
                let closed = closed_by_ext(&quotient, &i.module);
                ensure(closed == (grade < n), || format!("n={n}: {} closed {closed} gpd {grade}", i.name))?;
            }
            within(start, Duration::from_secs(30), &format!("n={n} {field}"))?;
            slowest = slowest.max(start.elapsed());
        }
    }
    Ok(format!("2n+3 indecomposables, n = 1..4, three gpd routes agree, slowest {slowest:.2?}"))
}

fn exactness_in_quotient() -> Outcome {
    for n in 1..=4 {
        for field in fields() {
            let (alg, _) = build(n, field);
            let topology = q_topology(&alg).map_err(|e| e.to_string())?;
            let (f, g) = quotient_exact_sequence(&alg).map_err(|e| e.to_string())?;
            let (report, x) = quotient_exactness(&topology, &f, &g).map_err(|e| e.to_string())?;
            ensure(report.holds && x.dims() == quiverlab::module::simple(&alg, 0).dims(), || {
                format!("n={n} {field}: holds {} X {:?}", report.holds, x.dims())
            })?;
            let zero = ModuleMorphism::zero(g.source(), g.target());
            let (bad, _) = quotient_exactness(&topology, &f, &zero).map_err(|e| e.to_string())?;
            ensure(!bad.holds, || format!("n={n} {field}: zero map accepted"))?;
            let zero_f = ModuleMorphism::zero(f.source(), f.target());
            let (bad, _) = quotient_exactness(&topology, &zero_f, &g).map_err(|e| e.to_string())?;
            ensure(!bad.holds, || format!("n={n} {field}: zero inclusion accepted"))?;
        }
    }
    Ok("S(3) → P(2) → P(1) exact with X ≅ S(1); perturbed maps rejected".into())
}

fn quotient_injectives() -> Outcome {
    for n in 1..=4 {
        for field in fields() {
            let (alg, ind) = build(n, field);
            let report = verify_quotient_injectives(&alg, n, &ind, DEFAULT_CAP).map_err(|e| e.to_string())?;
            let want: Vec<String> = (1..=n + 1).map(|i| format!("P({i})")).collect();
            let mut got = report.injective_objects.clone();
            got.sort();
            ensure(report.holds() && got == want, || format!("n={n} {field}: {got:?}"))?;
        }
    }
    Ok("injective objects P(1), …, P(n+1) for n = 1..4".into())
}

fn localization() -> Outcome {
    for field in fields() {
        let (alg, ind) = build(1, field);
        let topology = q_topology(&alg).map_err(|e| e.to_string())?;
        let get = |name: &str| ind.iter().find(|i| i.name == name).unwrap().module.clone();
        let s2 = localize(&topology, &get("S(2)")).map_err(|e| e.to_string())?;
        ensure(s2.module.dims() == [1, 1, 0] && s2.psi_cokernel.dims() == [1, 0, 0], || {
            format!("{field}: S(2) localizes to {:?}, coker {:?}", s2.module.dims(), s2.psi_cokernel.dims())
        })?;
        let s1 = localize(&topology, &get("S(1)")).map_err(|e| e.to_string())?;
        ensure(s1.module.is_zero(), || format!("{field}: S(1) localizes to {:?}", s1.module.dims()))?;
        for i in &ind {
            let l = localize(&topology, &i.module).map_err(|e| e.to_string())?;
            let solved = common::localization_dims_by_solve(&topology, &i.module);
            ensure(l.module.dims() == solved, || format!("{field}: {} {:?} vs solve {solved:?}", i.name, l.module.dims()))?;
            let again = localize(&topology, &l.module).map_err(|e| e.to_string())?;
            ensure(again.psi.is_isomorphism(), || format!("{field}: {} not idempotent", i.name))?;
        }
    }
    Ok("S(2) → [1,1,0] with cokernel [1,0,0], S(1) → 0, idempotent, matches direct solve".into())
}

fn oracle_certification() -> Outcome {
    let start = Instant::now();
    let (alg, ind) = build(1, Field::prime(2).unwrap());
    ensure(alg.dim() == 5, || format!("dim {}", alg.dim()))?;
    let topology = dense_topology(&alg).map_err(|e| e.to_string())?;
    let lattice = enumerate_left_ideals(&alg).map_err(|e| e.to_string())?;
    ensure(lattice.is_consistent(), || "ideal lattice inconsistent".into())?;
    let j0 = topology.j0();
    let members: Vec<_> = lattice.ideals.iter().filter(|j| topology.is_dense_by_quotient(j)).cloned().collect();
    for j in &lattice.ideals {
        ensure(topology.is_dense_by_quotient(j) == j.contains(j0), || format!("{j} breaks G = {{J ⊇ J0}}"))?;
    }
    let least = members.iter().min_by_key(|j| j.dim()).unwrap();
    ensure(least == j0 && members.iter().all(|j| j.contains(least)), || format!("least member {least}"))?;
    let axioms = brute_axioms(&lattice, &members);
    ensure(axioms.passed(), || format!("axiom violations {:?}", axioms.violations))?;
    let rt = maranda_roundtrip(&topology, &lattice).map_err(|e| e.to_string())?;
    ensure(rt.identity(), || format!("round trip {:?}", rt.witness))?;

    // every submodule and quotient of sums of indecomposables, up to total dim 6
    let mut modules: Vec<Representation> = Vec::new();
    for a in 0..ind.len() {
        for b in a..=ind.len() {
            let parts: Vec<&Representation> = std::iter::once(&ind[a].module).chain(ind.get(b).map(|i| &i.module)).collect();
            let m = direct_sum(&parts);
            if m.dim() > 6 {
                continue;
            }
            for spans in enumerate_submodules(&m).map_err(|e| e.to_string())? {
                modules.push(quiverlab::module::submodule(&m, &spans).0);
                modules.push(quiverlab::module::quotient(&m, &spans).0);
            }
        }
    }
    for m in &modules {
        let brute = brute_torsion_submodule(topology.pair(), m).map_err(|e| e.to_string())?.0;
        let fast = topology.pair().torsion_submodule(m).map_err(|e| e.to_string())?.torsion;
        ensure(brute.dims() == fast.dims(), || format!("t(M) differs on {:?}", m.dims()))?;
    }
    within(start, Duration::from_secs(60), "certification")?;
    Ok(format!(
        "{} left ideals, |G| = {}, T1–T4, round trip, t(M) on {} modules, {:.2?}",
        lattice.len(),
        members.len(),
        modules.len(),
        start.elapsed()
    ))
}

fn annihilator_criterion_holds() -> Outcome {
    let mut checked = 0;
    for n in 1..=2 {
        let (alg, ind) = build(n, Field::prime(2).unwrap());
        let cert = HigherAg::certify(&alg, n, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let mut sample: Vec<(String, Representation)> = ind.iter().map(|i| (i.name.clone(), i.module.clone())).collect();
        for a in 0..ind.len() {
            for b in a..ind.len() {
                let m = direct_sum(&[&ind[a].module, &ind[b].module]);
                if m.dim() <= 6 {
                    sample.push((format!("{}+{}", ind[a].name, ind[b].name), m));
                }
            }
        }
        for (name, m) in &sample {
            let r = annihilator_criterion(m, &cert, 0).map_err(|e| e.to_string())?;
            ensure(r.exhaustive && r.holds, || format!("n={n}: {name} {r:?}"))?;
            // gldim is finite here, so gpd = pd
            let module_side = pd(m, DEFAULT_CAP).finite().unwrap() < n + 1;
            let mut element_side = true;
            for x in m.all_elements().map_err(|e| e.to_string())? {
                let ann = annihilator_of_element(m, &x).map_err(|e| e.to_string())?;
                element_side &= pd(&ann.to_module().0, DEFAULT_CAP).finite().unwrap() < n;
            }
            ensure(module_side == element_side, || format!("n={n}: {name} fails the biconditional"))?;
            ensure(module_side == r.module_side, || format!("n={n}: {name} library disagrees"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} modules over F2, every element"))
}

fn trivial_families() -> Outcome {
    for field in fields() {
        let alg = Arc::new(semisimple(2, field).unwrap());
        let topology = dense_topology(&alg).map_err(|e| e.to_string())?;
        ensure(topology.j0().is_whole(), || "semisimple: J0 ≠ Γ".into())?;
        let p = homological_profile(&alg, DEFAULT_CAP);
        let zero = Dimension::Finite(0);
        // self-injective, so the dominant dimension is infinite
        ensure(
            [p.gldim, p.id_left, p.id_right, p.ggldim].iter().all(|&d| d == zero) && p.domdim == Dimension::Infinite,
            || format!("semisimple: gldim {} domdim {} id {}/{}", p.gldim, p.domdim, p.id_left, p.id_right),
        )?;
        for i in nakayama_indecomposables(&alg).unwrap() {
            ensure(is_closed(&topology, &i.module).map_err(|e| e.to_string())?.closed, || format!("semisimple: {} not closed", i.name))?;
            ensure(pd(&i.module, DEFAULT_CAP) == zero, || format!("semisimple: pd {}", i.name))?;
        }

        let alg = Arc::new(loop_truncated(2, field).unwrap());
        for n in 1..=6 {
            let branch = min_ag_branch(&alg, n, DEFAULT_CAP).map_err(|e| e.to_string())?;
            ensure(branch == Some(MinAgBranch::SelfInjective), || format!("loop: n={n} branch {branch:?}"))?;
        }
        let topology = dense_topology(&alg).map_err(|e| e.to_string())?;
        let gor = Gorenstein::certify(&alg, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let ind = nakayama_indecomposables(&alg).unwrap();
        ensure(ind.len() == 2, || format!("loop: {} indecomposables", ind.len()))?;
        let mut modules: Vec<Representation> = ind.iter().map(|i| i.module.clone()).collect();
        modules.push(direct_sum(&[&ind[0].module, &ind[1].module]));
        modules.push(projective(&alg, 0));
        for m in &modules {
            ensure(!topology.pair().is_torsion(m), || format!("loop: {:?} torsion", m.dims()))?;
            ensure(is_closed(&topology, m).map_err(|e| e.to_string())?.closed, || format!("loop: {:?} not closed", m.dims()))?;
            ensure(gor.gpd(m).map_err(|e| e.to_string())? == 0, || format!("loop: {:?} gpd", m.dims()))?;
        }
        let ext = ext_dims(&ind[0].module, &regular(&alg), 3).map_err(|e| e.to_string())?;
        ensure(ext[1..].iter().all(|&d| d == 0), || format!("loop: Ext(S, Γ) {ext:?}"))?;
    }
    Ok("semisimple: closed, J0 = Γ, dims 0; k[x]/x²: self-injective branch, torsion {0}, closed, gpd 0".into())
}

fn claim_suites() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_quiverlab");
    let ok = Command::new(bin).args(["verify", "--claims", "all"]).output().map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&ok.stdout).to_string();
    ensure(ok.status.code() == Some(0), || format!("verify exited {:?}\n{text}", ok.status.code()))?;
    let summary = text.lines().last().unwrap_or("").to_string();
    for family in ["example211:2", "cyclic:3:2", "loop:2"] {
        let bad = Command::new(bin)
            .args(["--family", family, "verify", "--claims", "all", "--mutate"])
            .output()
            .map_err(|e| e.to_string())?;
        let out = String::from_utf8_lossy(&bad.stdout);
        ensure(bad.status.code() == Some(1) && out.contains("witness:"), || {
            format!("{family} mutation exited {:?}\n{out}", bad.status.code())
        })?;
    }
    Ok(format!("shipped families: {summary}; mutations caught with witnesses"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("table regression", table_regression),
        ("dimension profile", dimension_profile),
        ("injective resolution shape", injective_resolution_shape),
        ("torsion and topology", torsion_and_topology),
        ("closed iff small gpd", theorem_sweep),
        ("exactness in the quotient category", exactness_in_quotient),
        ("quotient-category injectives", quotient_injectives),
        ("localization", localization),
        ("oracle certification", oracle_certification),
        ("annihilator criterion", annihilator_criterion_holds),
        ("trivial families", trivial_families),
        ("claim suites", claim_suites),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
