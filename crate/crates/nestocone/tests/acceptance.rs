//! Acceptance suite: every check runs at its stated size and prints one
//! PASS line (the panic message is the FAIL line). Budgeted checks assert
//! wall-clock limits.

use std::time::{Duration, Instant};

use nestocone::building::graphical_building;
use nestocone::realize::{kinematic_polytope, realize_polytope, KinematicInput};
use nestocone::typecone::{
    classic_height, facet_cone, height_membership, interval_profile, is_simplicial,
    HeightVariant, Membership,
};
use nestocone::verify::{
    self, all_intervals_building, catalan, factorial, graphs_up_to_iso, instance_pool,
    nine_block_building, pitman_stanley_building, random_interval_building, suite_heights,
    suite_kinematic, suite_minkowski, suite_oracle_closures, suite_oracle_graphs,
    suite_realizations, suite_simpliciality_graphs, suite_worked_example,
    suite_worked_example_cone,
};

const SEED: u64 = 2024;

fn report(name: &str, rep: &verify::SuiteReport) {
    assert!(
        rep.passed(),
        "FAIL {name}: {} of {} checks failed: {:?}",
        rep.failures.len(),
        rep.instances,
        rep.failures
    );
    println!("PASS {name} ({} checks)", rep.instances);
}

/// Facet counts of the permutahedron, associahedron, cyclohedron, and
/// stellohedron families for n = 3..7 match their closed forms exactly,
/// within ten seconds.
#[test]
fn acceptance_01_family_facet_counts() {
    let t = Instant::now();
    let rep = verify::suite_family_counts(3, 7);
    let elapsed = t.elapsed();
    assert!(
        elapsed < Duration::from_secs(10),
        "FAIL family-facet-counts: took {elapsed:?}, budget 10s"
    );
    report("family-facet-counts (n = 3..7, exact)", &rep);
}

/// The irredundant facet description equals the LP-reduced brute-force
/// wall-crossing system for every connected graph on at most five vertices
/// (up to isomorphism) and for fifty seeded random building-set closures on
/// ground size at most six, within five minutes.
#[test]
fn acceptance_02_oracle_equivalence() {
    let t = Instant::now();
    let graphs = suite_oracle_graphs(5);
    let closures = suite_oracle_closures(50, 6, SEED);
    let elapsed = t.elapsed();
    assert!(
        elapsed < Duration::from_secs(300),
        "FAIL oracle-equivalence: took {elapsed:?}, budget 300s"
    );
    report("oracle-equivalence: connected graphs <= 5", &graphs);
    report("oracle-equivalence: 50 random closures <= 6", &closures);
}

/// The nine-element worked example: components, elementary blocks, the two
/// stated adjacent maximal nested sets, the flip frame (14, 25, 12345) with
/// pivots (1, 2), both wall inequalities, and the stated roots, all exact.
#[test]
fn acceptance_03_worked_example() {
    report("worked-example (string-level values)", &suite_worked_example());
}

/// The worked example's type cone: 19 rays, dimension 7, 12 facets,
/// simplicial; the facet list equals the twelve derived inequalities and
/// the oracle confirms irredundancy.
#[test]
fn acceptance_04_worked_example_cone() {
    report("worked-example-cone (19 rays, dim 7, 12 facets)", &suite_worked_example_cone());
}

/// Maximal nested-set counts: Catalan numbers for paths and factorials for
/// complete graphs up to n = 6, exactly.
#[test]
fn acceptance_05_nested_set_counts() {
    let rep = verify::suite_nested_counts(6);
    assert_eq!(catalan(6), 132);
    assert_eq!(factorial(6), 720);
    report("nested-set-counts (Catalan / factorial, n <= 6)", &rep);
}

/// Simpliciality characterizations: over all graphs on at most six vertices
/// (up to isomorphism), the tube building has a simplicial type cone iff
/// the graph is a disjoint union of paths; twenty seeded random interval
/// building sets on at most seven elements are simplicial with the interval
/// profile reproducing the facet description exactly.
#[test]
fn acceptance_06_simpliciality() {
    let graphs = suite_simpliciality_graphs(6);
    let intervals = verify::suite_simpliciality_intervals(20, 7, SEED.wrapping_add(1));
    report("simpliciality: graphs <= 6 vs disjoint unions of paths", &graphs);
    report("simpliciality: 20 interval buildings <= 7", &intervals);
}

/// Both classical heights are strictly interior for every instance used in
/// the preceding checks: the four families up to n = 7, all graphs up to
/// six vertices, the random closures and interval buildings, and the
/// worked example.
#[test]
fn acceptance_07_height_membership() {
    let mut pool: Vec<(String, nestocone::building::BuildingSet)> = Vec::new();
    for n in 3..=7u32 {
        pool.push((format!("complete-{n}"), graphical_building(&verify::complete_graph(n))));
        pool.push((format!("path-{n}"), graphical_building(&verify::path_graph(n))));
        pool.push((format!("cycle-{n}"), graphical_building(&verify::cycle_graph(n))));
        pool.push((format!("star-{n}"), graphical_building(&verify::star_graph(n))));
    }
    for n in 1..=6u32 {
        for (i, g) in graphs_up_to_iso(n, false).into_iter().enumerate() {
            pool.push((format!("graph-{n}-{i}"), graphical_building(&g)));
        }
    }
    pool.extend(instance_pool(0, 50, 6, SEED));
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(SEED.wrapping_add(1));
    for i in 0..20 {
        pool.push((format!("interval-{i}"), random_interval_building(&mut rng, 7)));
    }
    pool.push(("nine-block-example".into(), nine_block_building()));
    report("height-membership (both classical heights interior)", &suite_heights(&pool));
}

/// Realization coherence on every instance with at most five ground
/// elements: one vertex per maximal nested set, tight exactly on its
/// blocks, edges exactly the flips, for both classical heights.
#[test]
fn acceptance_08_realization_coherence() {
    let mut pool: Vec<(String, nestocone::building::BuildingSet)> = Vec::new();
    for n in 1..=5u32 {
        for (i, g) in graphs_up_to_iso(n, false).into_iter().enumerate() {
            pool.push((format!("graph-{n}-{i}"), graphical_building(&g)));
        }
    }
    let full = instance_pool(0, 50, 6, SEED);
    pool.extend(
        full.into_iter()
            .filter(|(_, b)| b.ground().len() <= 5),
    );
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(SEED.wrapping_add(1));
    for i in 0..20 {
        let b = random_interval_building(&mut rng, 7);
        if b.ground().len() <= 5 {
            pool.push((format!("interval-{i}"), b));
        }
    }
    report("realization-coherence (ground <= 5, both heights)", &suite_realizations(&pool));
}

/// Kinematic realizations: the all-intervals building on n <= 5 has
/// Catalan(n) kinematic vertices with the zero-set bijection, and
/// Pitman-Stanley on three elements gives four vertices, within thirty
/// seconds.
#[test]
fn acceptance_09_kinematic_realizations() {
    let t = Instant::now();
    let rep = suite_kinematic(5);
    // Pin the stated counts here as well.
    let b5 = all_intervals_building(5);
    let m = facet_cone(&b5).inequalities().len();
    let poly = kinematic_polytope(&b5, &KinematicInput::ones(m)).expect("simplicial");
    assert_eq!(poly.vertices.len() as u64, catalan(5), "FAIL kinematic: Catalan(5)");
    let ps = pitman_stanley_building(3);
    let mps = facet_cone(&ps).inequalities().len();
    let ps_poly = kinematic_polytope(&ps, &KinematicInput::ones(mps)).expect("simplicial");
    assert_eq!(ps_poly.vertices.len(), 4, "FAIL kinematic: Pitman-Stanley [3]");
    let elapsed = t.elapsed();
    assert!(
        elapsed < Duration::from_secs(30),
        "FAIL kinematic-realizations: took {elapsed:?}, budget 30s"
    );
    report("kinematic-realizations (intervals <= 5, Pitman-Stanley)", &rep);
}

/// Minkowski cross-check: for every tube building on at most four vertices,
/// the Postnikov realization has as many vertices as the Minkowski sum of
/// the block simplices, counted by the independent support-function oracle.
#[test]
fn acceptance_10_minkowski_cross_check() {
    report("minkowski-cross-check (tube buildings <= 4)", &suite_minkowski(4));
}

/// Sanity of the classical heights at interior membership on the worked
/// example, exercised end to end through the membership classifier.
#[test]
fn acceptance_heights_worked_example_interior() {
    let b = nine_block_building();
    for variant in [HeightVariant::Devadoss, HeightVariant::Postnikov] {
        let h = classic_height(&b, variant);
        assert_eq!(
            height_membership(&b, &h).unwrap(),
            Membership::Interior,
            "FAIL {variant:?} height on the worked example"
        );
    }
    println!("PASS worked-example heights interior");
}

/// The interval machinery and the simplicial test agree on the interval
/// interval instances used above.
#[test]
fn acceptance_interval_consistency() {
    for n in 2..=5u32 {
        let b = all_intervals_building(n);
        assert!(is_simplicial(&b));
        let profile = interval_profile(&b).unwrap();
        assert_eq!(profile.cone, facet_cone(&b));
        let h = classic_height(&b, HeightVariant::Postnikov);
        let poly = realize_polytope(&b, &h).unwrap();
        assert_eq!(poly.vertices.len() as u64, catalan(n));
    }
    println!("PASS interval consistency (n <= 5)");
}
