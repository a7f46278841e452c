//! Randomized invariants over small bound quiver algebras and their modules.
mod common;

use std::sync::Arc;

use proptest::prelude::*;
use quiverlab::family::{nakayama_indecomposables, FamilySpec};
use quiverlab::homolog::{
    ext_dims, homological_profile, minimal_resolution, pd, sub2_q_test, Direction, Gorenstein, HigherAg,
};
use quiverlab::ideal::annihilator_of_element;
use quiverlab::matrix::subspace;
use quiverlab::module::{
    cokernel, direct_sum, hom_space, image, kernel, radical_spans, socle, socle_spans, spans_of,
    submodule_generated, top, ModuleMorphism,
};
use quiverlab::parse::{parse_algebra_file, parse_module_file, serialize_algebra, serialize_module};
use quiverlab::quotient::{is_closed, localize};
use quiverlab::report::{emit_table, ProfileReport};
use quiverlab::theorems::{dense_topology, q_topology};
use quiverlab::{build_algebra, Field, PathAlgebra, Quiver, Relation, Representation, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CAP: usize = 24;

fn field_of(i: u8) -> Field {
    match i % 3 {
        0 => Field::Rational,
        1 => Field::prime(2).unwrap(),
        _ => Field::prime(3).unwrap(),
    }
}

fn family_of(i: u8) -> FamilySpec {
    let all = [
        "example211:1",
        "example211:2",
        "example211:3",
        "cyclic:2:2",
        "cyclic:3:2",
        "cyclic:2:3",
        "loop:2",
        "loop:3",
        "semisimple:2",
    ];
    all[i as usize % all.len()].parse().unwrap()
}

fn algebra(family: u8, field: u8) -> Arc<PathAlgebra> {
    Arc::new(family_of(family).build(field_of(field)).unwrap())
}

fn scalar(field: Field, rng: &mut ChaCha8Rng) -> Scalar {
    field.from_i64(rng.gen_range(-2..=2))
}

fn random_vector(m: &Representation, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    (0..m.dim()).map(|_| scalar(m.field(), rng)).collect()
}

/// A direct sum of one to three indecomposables.
fn random_module(alg: &Arc<PathAlgebra>, rng: &mut ChaCha8Rng) -> Representation {
    let ind = nakayama_indecomposables(alg).unwrap();
    let k = rng.gen_range(1..=3);
    let parts: Vec<Representation> = (0..k).map(|_| ind[rng.gen_range(0..ind.len())].module.clone()).collect();
    let refs: Vec<&Representation> = parts.iter().collect();
    direct_sum(&refs)
}

/// A random submodule, quotient or sum, so that modules beyond direct sums
/// of indecomposables appear.
fn random_module_deep(alg: &Arc<PathAlgebra>, rng: &mut ChaCha8Rng) -> Representation {
    let m = random_module(alg, rng);
    match rng.gen_range(0..3) {
        0 => m,
        1 => {
            let x = random_vector(&m, rng);
            submodule_generated(&m, &[x]).unwrap().0
        }
        _ => {
            let x = random_vector(&m, rng);
            let (_, incl) = submodule_generated(&m, &[x]).unwrap();
            cokernel(&incl).0
        }
    }
}

fn random_hom(m: &Representation, n: &Representation, rng: &mut ChaCha8Rng) -> ModuleMorphism {
    let mut f = ModuleMorphism::zero(m, n);
    for h in hom_space(m, n).unwrap() {
        f = f.add(&h.scale(&scalar(m.field(), rng)));
    }
    f
}

fn contained(a: &[quiverlab::Matrix], b: &[quiverlab::Matrix]) -> bool {
    a.iter().zip(b).all(|(x, y)| subspace::is_subspace(x, y))
}

/// Acyclic quiver on `k` vertices (arrows go up) with a random set of
/// length-2 zero relations.
fn random_acyclic(k: usize, arrows: &[(usize, usize)], zero: &[bool], field: Field) -> Option<PathAlgebra> {
    let named: Vec<(String, usize, usize)> = arrows
        .iter()
        .enumerate()
        .filter(|(_, (s, t))| s < t && *t <= k)
        .map(|(i, &(s, t))| (format!("x{i}"), s, t))
        .collect();
    let labels: Vec<(&str, usize, usize)> = named.iter().map(|(n, s, t)| (n.as_str(), *s, *t)).collect();
    let quiver = Quiver::from_labels(k, &labels).ok()?;
    let mut rels = Vec::new();
    let mut z = zero.iter().cycle();
    for a in &named {
        for b in &named {
            if a.2 == b.1 && *z.next().unwrap() {
                rels.push(Relation::monomial(&quiver, field, &[&a.0, &b.0]).unwrap());
            }
        }
    }
    build_algebra(quiver, rels, field).ok()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn structure_constants_are_sound(
        k in 2usize..5,
        arrows in prop::collection::vec((1usize..5, 1usize..5), 1..6),
        zero in prop::collection::vec(any::<bool>(), 1..8),
        f in 0u8..3,
    ) {
        if let Some(alg) = random_acyclic(k, &arrows, &zero, field_of(f)) {
            prop_assert!(alg.associativity_violation().is_none());
            prop_assert!(alg.idempotents_are_complete());
            prop_assert!(alg.relation_violation().is_none());
            let op = alg.opposite();
            prop_assert_eq!(op.dim(), alg.dim());
            prop_assert!(*op.opposite() == alg);
            let back = parse_algebra_file(&serialize_algebra(&alg)).unwrap();
            prop_assert!(back == alg);
        }
    }

    #[test]
    fn kernels_images_and_cokernels(fam in any::<u8>(), f in 0u8..3, seed in any::<u64>()) {
        let alg = algebra(fam, f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module_deep(&alg, &mut rng);
        let n = random_module_deep(&alg, &mut rng);
        let g = random_hom(&m, &n, &mut rng);
        prop_assert!(g.intertwines());
        let (k, ki) = kernel(&g);
        let (i, _) = image(&g);
        let (c, cp) = cokernel(&g);
        prop_assert!(ki.intertwines() && cp.intertwines());
        prop_assert!(g.compose(&ki).is_zero());
        for v in 0..alg.vertex_count() {
            prop_assert_eq!(k.dims()[v] + i.dims()[v], m.dims()[v]);
            prop_assert_eq!(i.dims()[v] + c.dims()[v], n.dims()[v]);
        }
    }

    #[test]
    fn socle_and_top_are_semisimple(fam in any::<u8>(), f in 0u8..3, seed in any::<u64>()) {
        let alg = algebra(fam, f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module_deep(&alg, &mut rng);
        prop_assert!(socle(&m).0.maps().iter().all(|a| a.is_zero()));
        prop_assert!(top(&m).0.maps().iter().all(|a| a.is_zero()));
    }

    #[test]
    fn annihilators_and_cyclic_submodules(fam in any::<u8>(), f in 0u8..3, seed in any::<u64>()) {
        let alg = algebra(fam, f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module_deep(&alg, &mut rng);
        let x = random_vector(&m, &mut rng);
        let ann = annihilator_of_element(&m, &x).unwrap();
        prop_assert!(ann.is_left_ideal());
        let (cyclic, incl) = submodule_generated(&m, std::slice::from_ref(&x)).unwrap();
        prop_assert_eq!(alg.dim(), ann.dim() + cyclic.dim());

        // idempotent and monotone
        let spans = spans_of(&incl);
        let gens: Vec<Vec<Scalar>> = (0..alg.vertex_count())
            .flat_map(|v| spans[v].columns().into_iter().map(move |c| (v, c)))
            .map(|(v, c)| m.embed(v, &c))
            .collect();
        let again = submodule_generated(&m, &gens).unwrap().0;
        prop_assert_eq!(again.dims().to_vec(), cyclic.dims().to_vec());
        let y = random_vector(&m, &mut rng);
        let (_, bigger) = submodule_generated(&m, &[x, y]).unwrap();
        prop_assert!(contained(&spans, &spans_of(&bigger)));
    }

    #[test]
    fn resolutions_are_minimal(fam in any::<u8>(), f in 0u8..3, seed in any::<u64>()) {
        let alg = algebra(fam, f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module_deep(&alg, &mut rng);
        let proj = minimal_resolution(&m, Direction::Projective, 6);
        for d in proj.maps.iter().skip(1) {
            prop_assert!(contained(&spans_of(&image(d).1), &radical_spans(d.target())));
        }
        let inj = minimal_resolution(&m, Direction::Injective, 6);
        for d in &inj.maps {
            prop_assert!(contained(&socle_spans(d.target()), &spans_of(&image(d).1)));
        }
    }

    #[test]
    fn ext_routes_agree(fam in any::<u8>(), f in 0u8..3, seed in any::<u64>()) {
        let alg = algebra(fam, f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module_deep(&alg, &mut rng);
        let n = random_module_deep(&alg, &mut rng);
        let by_projective = ext_dims(&m, &n, 3).unwrap();
        prop_assert_eq!(by_projective[0], hom_space(&m, &n).unwrap().len());
        prop_assert_eq!(by_projective, common::ext_by_injective_resolution(&m, &n, 3));
    }

    #[test]
    fn gorenstein_dimensions(fam in any::<u8>(), f in 0u8..3, seed in any::<u64>()) {
        let alg = algebra(fam, f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module_deep(&alg, &mut rng);
        let gor = Gorenstein::certify(&alg, CAP).unwrap();
        let g = gor.gpd(&m).unwrap();
        if let Some(p) = pd(&m, CAP).finite() {
            prop_assert_eq!(g, p);
        }
        let profile = homological_profile(&alg, CAP);
        prop_assert_eq!(profile.id_left, profile.id_right);
        prop_assert_eq!(profile.id_left, profile.ggldim);
        if let Some(range) = profile.n_min_ag {
            let n = range.min;
            let cert = HigherAg::certify(&alg, n, CAP).unwrap();
            prop_assert_eq!(g < n, sub2_q_test(&m));
            prop_assert_eq!(cert.sub2_q_member(&m), sub2_q_test(&m));
            let gamma = quiverlab::module::regular(&alg);
            let ext = ext_dims(&m, &gamma, n).unwrap();
            if ext[0] == 0 {
                prop_assert!(ext[1..].iter().all(|&d| d == 0));
            }
            if quiverlab::module::is_injective(&m) && g <= n {
                prop_assert!(quiverlab::module::is_projective(&m));
            }
        }
    }

    #[test]
    fn torsion_is_hereditary(fam in any::<u8>(), f in 0u8..3, seed in any::<u64>()) {
        let alg = algebra(fam, f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let topology = dense_topology(&alg).unwrap();
        let pair = topology.pair();
        let m = random_module_deep(&alg, &mut rng);
        let seq = pair.torsion_submodule(&m).unwrap();
        prop_assert_eq!(pair.torsion_submodule(&seq.torsion).unwrap().torsion.dims().to_vec(), seq.torsion.dims().to_vec());
        prop_assert!(pair.torsion_submodule(&seq.torsionfree).unwrap().torsion.is_zero());
        prop_assert_eq!(pair.torsion_submodule_by_support(&m).0.dims().to_vec(), seq.torsion.dims().to_vec());
        prop_assert_eq!(common::torsion_by_kernels(&m, pair.cogenerator()), seq.torsion.dims().to_vec());

        let x = random_vector(&m, &mut rng);
        let (sub, incl) = submodule_generated(&m, &[x]).unwrap();
        let t_sub = pair.torsion_submodule(&sub).unwrap().torsion;
        let meet: Vec<usize> = spans_of(&incl)
            .iter()
            .zip(spans_of(&seq.inclusion))
            .enumerate()
            .map(|(v, (a, b))| subspace::dim(&subspace::intersection(alg.field(), m.dims()[v], a, &b)))
            .collect();
        prop_assert_eq!(t_sub.dims().to_vec(), meet);
    }

    #[test]
    fn localization_laws(fam in any::<u8>(), f in 0u8..3, seed in any::<u64>(), use_q in any::<bool>()) {
        let alg = algebra(fam, f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let topology = if use_q { q_topology(&alg).unwrap() } else { dense_topology(&alg).unwrap() };
        let pair = topology.pair();
        let m = random_module_deep(&alg, &mut rng);
        let l = localize(&topology, &m).unwrap();
        prop_assert!(l.psi.intertwines());
        prop_assert_eq!(l.psi_kernel.dims().to_vec(), pair.torsion_submodule(&m).unwrap().torsion.dims().to_vec());
        prop_assert!(pair.is_torsion(&l.psi_cokernel));
        prop_assert_eq!(l.module.dims().to_vec(), common::localization_dims_by_solve(&topology, &m));
        let twice = localize(&topology, &l.module).unwrap();
        prop_assert!(twice.psi.is_isomorphism());
        let closed = is_closed(&topology, &l.module).unwrap();
        prop_assert!(closed.closed && closed.agrees);
        prop_assert!(is_closed(&topology, &m).unwrap().agrees);
    }

    #[test]
    fn kernels_of_closed_modules_are_closed(fam in any::<u8>(), f in 0u8..3, seed in any::<u64>()) {
        let alg = algebra(fam, f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let topology = dense_topology(&alg).unwrap();
        let m = localize(&topology, &random_module(&alg, &mut rng)).unwrap().module;
        let n = localize(&topology, &random_module(&alg, &mut rng)).unwrap().module;
        let g = random_hom(&m, &n, &mut rng);
        let q = quiverlab::quotient::q_kernel(&topology, &g).unwrap();
        prop_assert_eq!(q.dims().to_vec(), kernel(&g).0.dims().to_vec());
        prop_assert!(is_closed(&topology, &q).unwrap().closed);
    }

    #[test]
    fn module_files_round_trip(fam in any::<u8>(), f in 0u8..3, seed in any::<u64>()) {
        let alg = algebra(fam, f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module_deep(&alg, &mut rng);
        let (name, back) = parse_module_file(&alg, &serialize_module("R", &m)).unwrap();
        prop_assert_eq!(name, "R");
        prop_assert_eq!(back.dims().to_vec(), m.dims().to_vec());
        prop_assert_eq!(back.maps(), m.maps());
    }

    #[test]
    fn profile_json_round_trips(fam in any::<u8>(), f in 0u8..3) {
        let alg = algebra(fam, f);
        let sample = nakayama_indecomposables(&alg).unwrap();
        let report = emit_table(&alg, "sample", &sample, CAP).unwrap();
        prop_assert!(report.is_consistent());
        let json = serde_json::to_string(&report).unwrap();
        let back: ProfileReport = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, report);
    }
}
