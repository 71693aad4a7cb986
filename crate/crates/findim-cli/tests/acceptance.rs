//! Acceptance suite: one test per shipped guarantee, each printing a PASS
//! line with the measured values.  Everything is exact rational arithmetic;
//! every equality below is equality, not approximation.

use std::process::Command;

use findim_core::algebra::{
    algebra_iso_search, corner, quotient_algebra, triangular_matrix_algebra, trivial_extension,
    ARef, Bimodule,
};
use findim_core::complex::{
    cone, homological_width, projective_normalize_complex, projective_normalize_module,
    random_chain_map, random_contractible_complex, random_projective_complex,
};
use findim_core::context::{
    check_exact_context, check_exact_pair, is_homological_epimorphism, nc_tensor_quotient_case,
    simple_bimodule, verify_inequality, ExactContext, HomologicalVerdict, HypStatus, Instance,
};
use findim_core::dimension::{
    finitistic_dimension, global_dimension, nakayama_indecomposables, Bracket, ExtNat,
    VerificationStatus,
};
use findim_core::endo::{
    decompose_idempotents, endomorphism_algebra, is_covariant_morphism, relative_end_quotient,
};
use findim_core::module::{
    projective_dimension, random_module, simple, Module, PdCertificate, Side,
};
use findim_core::presets;
use findim_core::tensor::{tor_dims, transport_to_opposite};
use findim_core::{seeded_rng, Mat};
use rand::Rng;

const CAP: usize = 24;

fn zero_bimodule(s: &ARef, t: &ARef) -> Bimodule {
    Bimodule::new(
        s.clone(),
        t.clone(),
        0,
        vec![Mat::zeros(0, 0); s.dim()],
        vec![Mat::zeros(0, 0); t.dim()],
    )
    .expect("zero bimodule is always lawful")
}

#[test]
fn acceptance_01_width_equals_projective_dimension() {
    let names = ["A2", "ut2", "nak3", "kronecker-trunc"];
    let mut rng = seeded_rng(101);
    let mut done = 0;
    let mut attempts = 0;
    while done < 25 {
        attempts += 1;
        assert!(attempts < 2000, "sampling stalled");
        let a = presets::by_name(names[done % names.len()]).unwrap();
        let side = if rng.gen_bool(0.5) { Side::Left } else { Side::Right };
        let m = random_module(&a, side, &mut rng, 6);
        if m.is_zero() {
            continue;
        }
        let pd = projective_dimension(&m, CAP, 0);
        let ExtNat::Finite(v) = pd.value else { continue };
        let c = projective_normalize_module(&m, CAP, 0).expect("finite pd normalizes");
        let w = homological_width(&c, CAP, 0).expect("all terms are projective");
        assert_eq!(w, ExtNat::Finite(v), "width must equal pd for a module of dim {}", m.dim());
        done += 1;
    }
    println!("PASS: homological width = projective dimension on {done} random modules");
}

#[test]
fn acceptance_02_width_is_homotopy_invariant() {
    let names = ["A2", "ut2", "nak3", "kronecker-trunc"];
    let mut rng = seeded_rng(202);
    for t in 0..25 {
        let a = presets::by_name(names[t % names.len()]).unwrap();
        let c = random_projective_complex(&a, Side::Left, &mut rng, 8, 0);
        let k = random_contractible_complex(&a, Side::Left, &mut rng);
        let w1 = homological_width(&c, CAP, 0).expect("projective complex");
        let w2 = homological_width(&c.direct_sum(&k), CAP, 0).expect("projective complex");
        assert_eq!(w1, w2, "adding a contractible summand changed the width (pair {t})");
    }
    println!("PASS: width unchanged by contractible summands on 25 pairs");
}

#[test]
fn acceptance_03_cones_stay_supported_below_the_inputs() {
    let names = ["A2", "ut2", "kronecker-trunc"];
    let mut rng = seeded_rng(303);
    for t in 0..10 {
        let a = presets::by_name(names[t % names.len()]).unwrap();
        let n = rng.gen_range(-2..=1);
        let m = rng.gen_range(-2..=1);
        let p = random_projective_complex(&a, Side::Left, &mut rng, 8, 0);
        let q = random_projective_complex(&a, Side::Left, &mut rng, 8, 0);
        let p = p.shift(p.window().unwrap().0 - n);
        let q = q.shift(q.window().unwrap().0 - m);
        let f = random_chain_map(&q.shift(-1), &p, &mut rng);
        let normalized = projective_normalize_complex(&cone(&f), CAP, 0).unwrap();
        if let Some((lo, _)) = normalized.window() {
            assert!(lo >= n.min(m), "map {t}: support {lo} below min({n},{m})");
        }
    }
    println!("PASS: 10 normalized cones supported in degrees >= min of the inputs");
}

/// Largest finite projective dimension over the indecomposables; exact for
/// Nakayama algebras.
fn nakayama_fd(a: &ARef) -> usize {
    nakayama_indecomposables(a)
        .expect("factor must be Nakayama")
        .iter()
        .filter(|m| !m.is_zero())
        .filter_map(|m| match projective_dimension(m, CAP, 0).value {
            ExtNat::Finite(v) => Some(v),
            _ => None,
        })
        .max()
        .unwrap_or(0)
}

#[test]
fn acceptance_04_triangular_bound_with_exact_instances() {
    let k = presets::by_name("k").unwrap();
    let a2 = presets::by_name("A2").unwrap();
    let m = simple_bimodule(&k, 0, &k, 0).unwrap();
    let b = triangular_matrix_algebra(&k, &k, &m).unwrap();
    assert!(algebra_iso_search(&b, &a2, 0).is_some(), "triangular(k,k;k) must match A2");
    let inst = Instance::Triangular { s: k.clone(), t: k.clone(), m };
    let rep = verify_inequality("triangular", &inst, CAP, 0).unwrap();
    assert_eq!(rep.verdict, VerificationStatus::Verified);
    assert_eq!(rep.lhs, Bracket::finite(1));
    assert_eq!(rep.rhs, Bracket::finite(1));

    // chains and local uniserial algebras; loops forbid extra arrows
    let nak_names = ["k", "A2", "dual", "nak3", "ut2"];
    let loop_free = |name: &str| matches!(name, "k" | "A2" | "ut2");
    let mut rng = seeded_rng(404);
    for t in 0..10 {
        let sn = nak_names[rng.gen_range(0..nak_names.len())];
        let tn = nak_names[rng.gen_range(0..nak_names.len())];
        let s = presets::by_name(sn).unwrap();
        let t_alg = presets::by_name(tn).unwrap();
        let mut m = if loop_free(sn) && loop_free(tn) && rng.gen_bool(0.5) {
            // one arrow from the sink of T to the source of S keeps a chain
            simple_bimodule(&s, 0, &t_alg, t_alg.idempotents().len() - 1).unwrap()
        } else {
            zero_bimodule(&s, &t_alg)
        };
        let b = triangular_matrix_algebra(&s, &t_alg, &m).unwrap();
        if nakayama_indecomposables(&b).is_err() {
            m = zero_bimodule(&s, &t_alg);
        }
        let expected_rhs = nakayama_fd(&s) + nakayama_fd(&t_alg) + 1;
        let inst = Instance::Triangular { s, t: t_alg, m };
        let rep = verify_inequality("triangular", &inst, CAP, 0).unwrap();
        assert_eq!(rep.verdict, VerificationStatus::Verified, "instance {t} ({sn},{tn})");
        assert_eq!(rep.rhs, Bracket::finite(expected_rhs), "instance {t} ({sn},{tn})");
        assert!(rep.lhs.is_exact(), "instance {t} ({sn},{tn}) must resolve exactly");
    }
    println!("PASS: triangular bound exact on (k,k;k) and verified on 10 seeded instances");
}

#[test]
fn acceptance_05_stratifying_bound_on_the_corner_of_ut2() {
    let ut2 = presets::by_name("ut2").unwrap();
    let e = ut2.idempotents()[1].clone();
    let data =
        findim_core::context::stratifying_recollement_data(&ut2, &e, CAP, 0).unwrap();
    assert!(
        data.hypotheses.iter().all(|h| h.status == HypStatus::Holds),
        "all hypotheses must be certified: {:?}",
        data.hypotheses.iter().map(|h| format!("{} {}", h.name, h.status)).collect::<Vec<_>>()
    );
    assert!(matches!(data.homological, Some(HomologicalVerdict::Certified)));

    let rep =
        verify_inequality("stratifying", &Instance::Stratifying { r: ut2.clone(), e }, CAP, 0)
            .unwrap();
    assert_eq!(rep.verdict, VerificationStatus::Verified);
    assert_eq!(rep.lhs, Bracket::finite(1));
    assert_eq!(rep.rhs, Bracket::finite(2));

    let rer = ut2.ideal_closure(&ut2.idempotents()[1]);
    let (q, _) = quotient_algebra(&ut2, &rer).unwrap();
    assert_eq!(finitistic_dimension(&q, CAP, 0).bracket, Bracket::finite(0));
    assert_eq!(finitistic_dimension(&ut2, CAP, 0).bracket, Bracket::finite(1));
    println!("PASS: stratifying hypotheses certified and 0 <= 1 <= 2 exact on (ut2, corner)");
}

#[test]
fn acceptance_06_homological_surjections_respect_the_dimension_drop() {
    let mut certified = 0;
    for name in presets::names() {
        let a = presets::by_name(name).unwrap();
        for i in 0..a.idempotents().len() {
            let rows = a.ideal_closure(&a.idempotents()[i]);
            if rows.rows() == a.dim() {
                continue; // improper ideal
            }
            let Ok((_, f)) = quotient_algebra(&a, &rows) else { continue };
            if let HomologicalVerdict::Certified = is_homological_epimorphism(&f, CAP, 0).unwrap()
            {
                let rep =
                    verify_inequality("homo_ring", &Instance::RingSurjection { f }, CAP, 0)
                        .unwrap();
                assert_eq!(rep.verdict, VerificationStatus::Verified, "{name} vertex {i}");
                certified += 1;
            }
        }
    }
    assert!(certified >= 2, "the presets must supply certified surjections, got {certified}");

    // the dimension-3 local algebra onto its dimension-2 quotient has Tor_1 != 0
    let nak3 = presets::by_name("nak3").unwrap();
    let dual = presets::by_name("dual").unwrap();
    let ideal = nak3.ideal_closure(&Mat::from_int_rows(&[&[0, 0, 1]]));
    let (d, f) = quotient_algebra(&nak3, &ideal).unwrap();
    assert!(algebra_iso_search(&d, &dual, 0).is_some());
    match is_homological_epimorphism(&f, 6, 0).unwrap() {
        HomologicalVerdict::NotHomological { first_nonzero } => assert_eq!(first_nonzero, 1),
        other => panic!("expected a rejection, got {other}"),
    }
    println!("PASS: {certified} certified surjections verified; the non-homological one rejected at Tor_1");
}

#[test]
fn acceptance_07_exact_context_and_coproduct_on_the_ut2_square() {
    let ut2 = presets::by_name("ut2").unwrap();
    let i1 = ut2.ideal_closure(&ut2.idempotents()[1]);
    let i2 = Mat::zeros(0, ut2.dim());

    let ctx = ExactContext::milnor_square(&ut2, &i1, &i2).unwrap();
    assert!(check_exact_context(&ctx).holds(), "the ideal square must give an exact context");
    assert!(check_exact_pair(&ctx), "the ideal square must give an exact pair");

    let nc = nc_tensor_quotient_case(&ut2, &i1, &i2).unwrap();
    assert_eq!(nc.algebra.dim(), ut2.dim() - i1.rows(), "target is R/(I1+I2)");
    assert_eq!(nc.coproduct_model.dim(), nc.algebra.dim());
    assert!(algebra_iso_search(&nc.algebra, &nc.coproduct_model, 0).is_some());

    for id in ["mod1a_1", "mod1a_2a", "mod1a_2b"] {
        let inst =
            Instance::MilnorSquare { r: ut2.clone(), i1: i1.clone(), i2: i2.clone() };
        let rep = verify_inequality(id, &inst, CAP, 0).unwrap();
        assert_eq!(rep.verdict, VerificationStatus::Verified, "{id}");
        assert!(rep.lhs.is_exact() && rep.rhs.is_exact(), "{id} must be determinate");
    }
    println!("PASS: exact context + pair + coproduct iso on ut2; ideal bounds determinate");
}

#[test]
fn acceptance_08_trivial_extensions_and_their_bounds() {
    let k = presets::by_name("k").unwrap();
    let dual = presets::by_name("dual").unwrap();
    let (te, _, _) = trivial_extension(&k, &presets::one_dim_bimodule(&k, &k)).unwrap();
    assert!(
        algebra_iso_search(&te, &dual, 0).is_some(),
        "extending scalars by scalars must give the dual numbers"
    );

    // identity map: both bounds hold trivially
    let lambda = findim_core::algebra::AlgebraHom::new(
        dual.clone(),
        dual.clone(),
        Mat::identity(dual.dim()),
    )
    .unwrap();
    let m = presets::one_dim_bimodule(&dual, &dual);
    for id in ["mod1b_a", "mod1b_b"] {
        let inst = Instance::TrivialExtension { lambda: lambda.clone(), m: m.clone() };
        let rep = verify_inequality(id, &inst, CAP, 0).unwrap();
        assert_eq!(rep.verdict, VerificationStatus::Verified, "{id}");
    }

    // the non-flat quotient is rejected by its Tor certificate
    let nak3 = presets::by_name("nak3").unwrap();
    let ideal = nak3.ideal_closure(&Mat::from_int_rows(&[&[0, 0, 1]]));
    let (d, pi) = quotient_algebra(&nak3, &ideal).unwrap();
    let m = presets::one_dim_bimodule(&d, &d);
    let rep = verify_inequality(
        "mod1b_a",
        &Instance::TrivialExtension { lambda: pi, m },
        10,
        0,
    )
    .unwrap();
    assert_eq!(rep.verdict, VerificationStatus::Undetermined);
    assert!(rep.hypotheses.iter().any(|h| h.status == HypStatus::Fails));
    println!("PASS: dual = k extended by k; extension bounds verified or rejected per Tor");
}

#[test]
fn acceptance_09_tor_agrees_with_its_opposite_computation() {
    let names = ["A2", "ut2", "nak3", "kronecker-trunc"];
    let mut rng = seeded_rng(909);
    let mut done = 0;
    let mut attempts = 0;
    while done < 20 {
        attempts += 1;
        assert!(attempts < 2000, "sampling stalled");
        let a = presets::by_name(names[done % names.len()]).unwrap();
        let m = random_module(&a, Side::Right, &mut rng, 5);
        let n = random_module(&a, Side::Left, &mut rng, 5);
        if m.is_zero() || n.is_zero() {
            continue;
        }
        if !matches!(projective_dimension(&m, CAP, 0).value, ExtNat::Finite(_)) {
            continue;
        }
        if !matches!(projective_dimension(&n, CAP, 0).value, ExtNat::Finite(_)) {
            continue;
        }
        let left = tor_dims(&m, &n, 8, 0);
        let aop = a.opposite();
        let right = tor_dims(
            &transport_to_opposite(&n, &aop),
            &transport_to_opposite(&m, &aop),
            8,
            0,
        );
        assert_eq!(left, right, "pair {done} over {}", names[done % names.len()]);
        done += 1;
    }
    println!("PASS: Tor dimensions balanced on {done} pairs through degree 8");
}

#[test]
fn acceptance_10_global_dimension_pieces_of_the_recollement() {
    let ut2 = presets::by_name("ut2").unwrap();
    let e = ut2.idempotents()[1].clone();
    let (corner_alg, _) = corner(&ut2, &e).unwrap();
    assert_eq!(global_dimension(&corner_alg, CAP, 0), ExtNat::Finite(0));
    let (q, _) = quotient_algebra(&ut2, &ut2.ideal_closure(&e)).unwrap();
    assert_eq!(global_dimension(&q, CAP, 0), ExtNat::Finite(0));
    assert_eq!(global_dimension(&ut2, CAP, 0), ExtNat::Finite(1));

    let rep =
        verify_inequality("gldim_2", &Instance::Stratifying { r: ut2.clone(), e }, CAP, 0)
            .unwrap();
    assert_eq!(rep.verdict, VerificationStatus::Verified);
    assert_eq!(rep.lhs, Bracket::finite(1));
    assert_eq!(rep.rhs, Bracket::finite(2));

    let dual = presets::by_name("dual").unwrap();
    let s = simple(&dual, Side::Left, 0).unwrap();
    let pd = projective_dimension(&s, CAP, 0);
    assert_eq!(pd.value, ExtNat::Infinite);
    assert!(matches!(pd.certificate, PdCertificate::SyzygyPeriodic { .. }));
    assert_eq!(global_dimension(&dual, CAP, 0), ExtNat::Infinite);
    println!("PASS: gd chain 0, 0, 1 <= 2 exact; infinite gd certified by periodicity");
}

#[test]
fn acceptance_11_covariant_inclusion_and_the_idempotent_ideal_bound() {
    let ut2 = presets::by_name("ut2").unwrap();
    let e = ut2.idempotents()[1].clone();
    let span = ut2.ideal_closure(&e);
    let reg = Module::regular(&ut2, Side::Left);
    let (sub, inc) = reg.submodule(&span).unwrap();

    assert!(is_covariant_morphism(&inc).holds(), "the trace-ideal inclusion is covariant");
    let (q, _) = relative_end_quotient(&reg, &sub).unwrap();
    assert_eq!(q.dim(), 1, "endomorphisms modulo the ideal must be scalars");

    let rep = verify_inequality(
        "ars_1",
        &Instance::IdempotentIdeal { r: ut2.clone(), e },
        CAP,
        0,
    )
    .unwrap();
    assert_eq!(rep.verdict, VerificationStatus::Verified);
    assert_eq!(rep.lhs, Bracket::finite(1));
    assert_eq!(rep.rhs, Bracket::finite(2));

    // end algebras: R + I has three indecomposable summands
    let x = reg.direct_sum(&sub);
    let end = endomorphism_algebra(&x).unwrap();
    let prim = decompose_idempotents(&end.algebra).unwrap();
    assert_eq!(prim.len(), 3);
    let (ri, _) = quotient_algebra(&ut2, &span).unwrap();
    assert_eq!(finitistic_dimension(&ri, CAP, 0).bracket, Bracket::finite(0));
    println!("PASS: covariant inclusion, scalar relative end, and 0 <= 1 <= 2 for the ideal bound");
}

#[test]
fn acceptance_12_full_suite_has_no_violations() {
    let rows = findim_core::context::report_suite(CAP, 0);
    assert!(rows.len() >= 12, "suite too small: {}", rows.len());
    assert!(
        rows.iter().all(|r| r.verdict != VerificationStatus::Violated),
        "a violated row means the arithmetic contradicts a proved bound"
    );
    let verified =
        rows.iter().filter(|r| r.verdict == VerificationStatus::Verified).count();
    assert!(verified >= 12, "expected at least 12 verified rows, got {verified}");

    // and the CI wiring: exit code 0 now, 2 reserved for violations
    let out = Command::new(env!("CARGO_BIN_EXE_findim"))
        .arg("report-suite")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("violated: 0"));
    println!("PASS: {verified} verified rows, zero violations, exit code clean");
}
