//! Release acceptance checks, one test per criterion. The harness line for
//! each test doubles as the criterion's pass/fail line; on success the test
//! also prints a one-line summary with the measured margins (visible under
//! `--nocapture`).
//!
//! Every tolerance is pinned here, next to what it bounds, so a change to
//! any gate has to happen in plain sight.

use std::time::{Duration, Instant};

use corona_spectra::closed_form::quartic_coefficients;
use corona_spectra::invariants::{invariant_report_for_corona, is_cospectral, InvariantReport};
use corona_spectra::matrix::{
    assemble_block_normalized_laplacian, line_graph_charpoly_identity_check, matrix_of, MatrixKind,
};
use corona_spectra::poly::RealPolynomial;
use corona_spectra::sampling::{
    random_connected_regular_graph, random_operand_triple, random_permutation, rng_from_seed,
};
use corona_spectra::{
    build_corona, make_named_graph, spectrum_method, CoronaKind, CoronaOperands, Graph,
    GraphFamily, Spectrum, SpectrumMethod,
};

/// Eigenvalue grouping used for every spectrum in this suite.
const GROUPING_TOL: f64 = 1e-7;
/// Sorted entrywise agreement demanded between closed-form and eigensolver
/// spectra.
const SPECTRUM_DEV_TOL: f64 = 1e-8;
/// Relative agreement of the floating spanning-tree routes with the exact
/// integer count.
const TAU_REL_TOL: f64 = 1e-6;
/// Relative agreement of all Kirchhoff-index routes with the frozen
/// rational values.
const KF_REL_TOL: f64 = 1e-6;
/// Absolute agreement of Kemeny's constant with the frozen rationals.
const KEMENY_ABS_TOL: f64 = 1e-8;
/// Relative tightness of the identity Kf* = 2 m K.
const KF_IDENTITY_REL_TOL: f64 = 1e-10;
/// Entrywise agreement of the block-assembled normalized Laplacian with the
/// directly constructed one.
const BLOCK_ENTRYWISE_TOL: f64 = 1e-12;
/// Slack around the theoretical eigenvalue range [0, 2].
const EIGEN_RANGE_SLACK: f64 = 1e-9;
/// Relative agreement of both sides of the line-graph characteristic
/// polynomial identity.
const LINE_GRAPH_REL_TOL: f64 = 1e-9;
/// Entrywise tolerance for declaring two sorted spectra cospectral.
const COSPECTRAL_TOL: f64 = 1e-7;
/// Seed for every randomized check below; criteria 6 and 7 deliberately
/// draw the same triples from it.
const SUITE_SEED: u64 = 20260825;

fn named(family: GraphFamily, k: usize) -> Graph {
    make_named_graph(family, k).unwrap()
}

/// C4 first operand and K2 second operand; the third operand is K2 for the
/// vertex-attached construction and K1 for the edge-attached one.
fn fixture(kind: CoronaKind) -> CoronaOperands {
    let g3 = match kind {
        CoronaKind::Svev => named(GraphFamily::Complete, 2),
        CoronaKind::Svee => named(GraphFamily::Complete, 1),
    };
    CoronaOperands::new(
        named(GraphFamily::Cycle, 4),
        named(GraphFamily::Complete, 2),
        g3,
    )
    .unwrap()
}

fn oracle() -> &'static dyn SpectrumMethod {
    spectrum_method("oracle").unwrap()
}

fn closed() -> &'static dyn SpectrumMethod {
    spectrum_method("closed").unwrap()
}

fn fixture_report(kind: CoronaKind) -> InvariantReport {
    invariant_report_for_corona(kind, &fixture(kind), GROUPING_TOL).unwrap()
}

/// The shared randomized triples: 50 draws, each checked under both corona
/// kinds, giving the 100 randomized cases.
fn seeded_triples() -> Vec<CoronaOperands> {
    let mut rng = rng_from_seed(SUITE_SEED);
    (0..50)
        .map(|_| random_operand_triple(&mut rng).expect("sampler stays inside its pools"))
        .collect()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs())
}

#[test]
fn criterion_1_svev_spectrum_fixture() {
    let start = Instant::now();
    let ops = fixture(CoronaKind::Svev);
    let reference = oracle()
        .corona_spectrum(CoronaKind::Svev, &ops, GROUPING_TOL)
        .unwrap();
    let candidate = closed()
        .corona_spectrum(CoronaKind::Svev, &ops, GROUPING_TOL)
        .unwrap();
    for (label, spec) in [("oracle", &reference), ("closed", &candidate)] {
        assert_eq!(
            spec.multiplicity_near(4.0 / 3.0, GROUPING_TOL),
            4,
            "{label}: expected 4/3 with multiplicity 4"
        );
        assert_eq!(
            spec.multiplicity_near(1.5, GROUPING_TOL),
            4,
            "{label}: expected 3/2 with multiplicity 4"
        );
    }
    let dev = candidate.max_sorted_deviation(&reference).unwrap();
    assert!(dev <= SPECTRUM_DEV_TOL, "deviation {dev:.3e}");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 1 PASS: vertex-attached fixture spectrum, deviation {dev:.2e}, {elapsed:?}");
}

#[test]
fn criterion_2_svee_spectrum_fixture() {
    let start = Instant::now();
    let ops = fixture(CoronaKind::Svee);
    let reference = oracle()
        .corona_spectrum(CoronaKind::Svee, &ops, GROUPING_TOL)
        .unwrap();
    let candidate = closed()
        .corona_spectrum(CoronaKind::Svee, &ops, GROUPING_TOL)
        .unwrap();
    for (label, spec) in [("oracle", &reference), ("closed", &candidate)] {
        assert_eq!(
            spec.multiplicity_near(4.0 / 3.0, GROUPING_TOL),
            4,
            "{label}: expected 4/3 with multiplicity 4"
        );
    }
    let dev = candidate.max_sorted_deviation(&reference).unwrap();
    assert!(dev <= SPECTRUM_DEV_TOL, "deviation {dev:.3e}");

    // The zero-mode quartic factor must share its root multiset with
    // 42x^4 - 154x^3 + 176x^2 - 64x.
    let ours = quartic_coefficients(CoronaKind::Svee, &ops, 0.0)
        .unwrap()
        .real_roots(1e-8)
        .unwrap();
    let frozen = RealPolynomial::new(vec![0.0, -64.0, 176.0, -154.0, 42.0])
        .unwrap()
        .real_roots(1e-8)
        .unwrap();
    assert_eq!(ours.len(), frozen.len());
    let mut worst_root_gap = 0.0_f64;
    for (a, b) in ours.iter().zip(&frozen) {
        worst_root_gap = worst_root_gap.max((a - b).abs());
    }
    assert!(
        worst_root_gap <= SPECTRUM_DEV_TOL,
        "root multiset gap {worst_root_gap:.3e}"
    );
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!(
        "criterion 2 PASS: edge-attached fixture spectrum, deviation {dev:.2e}, \
         root gap {worst_root_gap:.2e}, {elapsed:?}"
    );
}

#[test]
fn criterion_3_spanning_tree_counts() {
    let start = Instant::now();
    let cases = [
        (CoronaKind::Svev, "71663616"),
        (CoronaKind::Svee, "884736"),
    ];
    let mut worst = 0.0_f64;
    for (kind, frozen) in cases {
        let report = fixture_report(kind);
        assert_eq!(report.tau_exact.to_string(), frozen, "{kind}: exact count");
        let exact = frozen.parse::<f64>().unwrap();
        for (route, value) in [
            ("spectral", report.tau_spectral),
            ("closed", report.tau_closed),
        ] {
            let value = value.unwrap_or_else(|| panic!("{kind}: {route} route missing"));
            let dev = rel(value, exact);
            assert!(dev <= TAU_REL_TOL, "{kind}: {route} off by {dev:.3e}");
            worst = worst.max(dev);
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(2), "took {elapsed:?}");
    println!("criterion 3 PASS: spanning-tree counts, worst relative deviation {worst:.2e}, {elapsed:?}");
}

#[test]
fn criterion_4_kirchhoff_index() {
    let start = Instant::now();
    let cases = [
        (CoronaKind::Svev, 8492.0 / 3.0),
        (CoronaKind::Svee, 4912.0 / 3.0),
    ];
    let mut worst = 0.0_f64;
    for (kind, frozen) in cases {
        let report = fixture_report(kind);
        for (route, value) in [
            ("spectral", report.kf_star_spectral),
            ("closed", report.kf_star_closed),
            ("resistance", report.kf_star_resistance),
        ] {
            let value = value.unwrap_or_else(|| panic!("{kind}: {route} route missing"));
            let dev = rel(value, frozen);
            assert!(dev <= KF_REL_TOL, "{kind}: {route} off by {dev:.3e}");
            worst = worst.max(dev);
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(2), "took {elapsed:?}");
    println!("criterion 4 PASS: Kirchhoff index, worst relative deviation {worst:.2e}, {elapsed:?}");
}

#[test]
fn criterion_5_kemeny_constant() {
    let cases = [
        (CoronaKind::Svev, 2123.0 / 60.0),
        (CoronaKind::Svee, 307.0 / 12.0),
    ];
    let mut worst_abs = 0.0_f64;
    let mut worst_identity = 0.0_f64;
    for (kind, frozen) in cases {
        let report = fixture_report(kind);
        for (route, value) in [
            ("spectral", report.kemeny_spectral),
            ("closed", report.kemeny_closed),
        ] {
            let value = value.unwrap_or_else(|| panic!("{kind}: {route} route missing"));
            let gap = (value - frozen).abs();
            assert!(gap <= KEMENY_ABS_TOL, "{kind}: {route} off by {gap:.3e}");
            worst_abs = worst_abs.max(gap);
        }
        let kf = report.kf_star_spectral.unwrap();
        let identity_dev = rel(kf, 2.0 * report.m as f64 * report.kemeny_spectral.unwrap());
        assert!(
            identity_dev <= KF_IDENTITY_REL_TOL,
            "{kind}: Kf* = 2mK violated by {identity_dev:.3e}"
        );
        worst_identity = worst_identity.max(identity_dev);
    }
    println!(
        "criterion 5 PASS: Kemeny constant, worst absolute gap {worst_abs:.2e}, \
         identity deviation {worst_identity:.2e}"
    );
}

#[test]
fn criterion_6_block_assembly_equivalence() {
    let start = Instant::now();
    let mut worst = 0.0_f64;
    for ops in &seeded_triples() {
        for kind in [CoronaKind::Svev, CoronaKind::Svee] {
            let assembled = assemble_block_normalized_laplacian(kind, ops).unwrap();
            let direct = matrix_of(&build_corona(kind, ops), MatrixKind::NormalizedLaplacian)
                .unwrap();
            let diff = assembled.max_abs_diff(&direct);
            assert!(
                diff <= BLOCK_ENTRYWISE_TOL,
                "{kind}: entrywise gap {diff:.3e} on n1={} n2={} n3={}",
                ops.n1(),
                ops.n2(),
                ops.n3()
            );
            worst = worst.max(diff);
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!(
        "criterion 6 PASS: block assembly vs direct construction on 100 cases, \
         worst entrywise gap {worst:.2e}, {elapsed:?}"
    );
}

#[test]
fn criterion_7_closed_oracle_property_suite() {
    let mut worst = 0.0_f64;
    for (index, ops) in seeded_triples().iter().enumerate() {
        for kind in [CoronaKind::Svev, CoronaKind::Svee] {
            let reference = oracle().corona_spectrum(kind, ops, GROUPING_TOL).unwrap();
            let candidate = closed().corona_spectrum(kind, ops, GROUPING_TOL).unwrap();
            let dev = candidate
                .max_sorted_deviation(&reference)
                .unwrap_or(f64::INFINITY);
            assert!(
                dev <= SPECTRUM_DEV_TOL,
                "case {index} ({kind}): deviation {dev:.3e} on n1={} n2={} n3={}",
                ops.n1(),
                ops.n2(),
                ops.n3()
            );
            worst = worst.max(dev);
            for spec in [&reference, &candidate] {
                for entry in spec.entries() {
                    assert!(
                        entry.value >= -EIGEN_RANGE_SLACK
                            && entry.value <= 2.0 + EIGEN_RANGE_SLACK,
                        "case {index} ({kind}): eigenvalue {} out of range",
                        entry.value
                    );
                }
                assert_eq!(
                    spec.multiplicity_near(0.0, GROUPING_TOL),
                    1,
                    "case {index} ({kind}): connected corona needs a simple zero mode"
                );
            }
        }
    }
    println!(
        "criterion 7 PASS: closed vs oracle on 100 randomized cases, \
         worst sorted deviation {worst:.2e}"
    );
}

#[test]
fn criterion_8_line_graph_identity() {
    let sample_points = [-2.5, -1.2, 0.3, 1.4, 2.7];
    let mut rng = rng_from_seed(SUITE_SEED);
    let graphs = vec![
        ("C4", named(GraphFamily::Cycle, 4)),
        ("K3", named(GraphFamily::Complete, 3)),
        ("K4", named(GraphFamily::Complete, 4)),
        ("P4", named(GraphFamily::Path, 4)),
        (
            "random cubic on 10",
            random_connected_regular_graph(&mut rng, 10, 3).unwrap(),
        ),
        (
            "random quartic on 10",
            random_connected_regular_graph(&mut rng, 10, 4).unwrap(),
        ),
    ];
    let mut worst = 0.0_f64;
    for (label, g) in graphs {
        let report = line_graph_charpoly_identity_check(&g, &sample_points).unwrap();
        assert!(
            report.passes(LINE_GRAPH_REL_TOL),
            "{label}: deviation {:.3e} (corollary {:?})",
            report.max_deviation,
            report.corollary_max_deviation
        );
        worst = worst
            .max(report.max_deviation)
            .max(report.corollary_max_deviation.unwrap_or(0.0));
    }
    println!("criterion 8 PASS: line-graph identity at 5 points, worst relative deviation {worst:.2e}");
}

#[test]
fn criterion_9_relabeled_operands_stay_cospectral() {
    let mut rng = rng_from_seed(SUITE_SEED);
    let mut worst = 0.0_f64;
    for round in 0..20 {
        let kind = if round % 2 == 0 {
            CoronaKind::Svev
        } else {
            CoronaKind::Svee
        };
        let ops = random_operand_triple(&mut rng).unwrap();
        let relabeled = CoronaOperands::new(
            ops.g1()
                .relabel(&random_permutation(&mut rng, ops.n1()))
                .unwrap(),
            ops.g2()
                .relabel(&random_permutation(&mut rng, ops.n2()))
                .unwrap(),
            ops.g3()
                .relabel(&random_permutation(&mut rng, ops.n3()))
                .unwrap(),
        )
        .unwrap();
        let a = oracle().corona_spectrum(kind, &ops, GROUPING_TOL).unwrap();
        let b = oracle()
            .corona_spectrum(kind, &relabeled, GROUPING_TOL)
            .unwrap();
        assert!(
            is_cospectral(&a, &b, COSPECTRAL_TOL),
            "round {round} ({kind}): relabeled operands changed the spectrum"
        );
        worst = worst.max(a.max_sorted_deviation(&b).unwrap_or(f64::INFINITY));
    }
    println!(
        "criterion 9 PASS: 20 relabeled-operand rounds stay cospectral, \
         worst sorted deviation {worst:.2e}"
    );
}

/// The two spectrum strategies must expose the grouping tolerance they were
/// asked for, so reports stay auditable.
#[test]
fn spectra_record_their_grouping_tolerance() {
    let ops = fixture(CoronaKind::Svev);
    let spec: Spectrum = oracle()
        .corona_spectrum(CoronaKind::Svev, &ops, GROUPING_TOL)
        .unwrap();
    assert_eq!(spec.grouping_tol(), GROUPING_TOL);
}
