//! Expensive randomized soak checks, excluded from the default run.
//! Execute with `cargo test -p nestocone --test soak -- --ignored`.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nestocone::building::BuildingSet;
use nestocone::oracle::{brute_cone, cone_equal, irredundant};
use nestocone::realize::{kinematic_polytope, KinematicInput};
use nestocone::typecone::{facet_cone, facet_count};
use nestocone::verify::{all_intervals_building, catalan};
use nestocone::vset::VertexSet;

/// Random closures with a wider envelope than the seeded verification
/// suite: up to seven hyperedges of size up to four on six elements.
#[test]
#[ignore]
fn wide_random_closures_agree_with_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(777);
    for round in 0..40 {
        let n = rng.gen_range(4..=6u32);
        let ground = VertexSet::range(n);
        let count = rng.gen_range(1..=7u32);
        let mut generators = Vec::new();
        for _ in 0..count {
            let size = rng.gen_range(2..=4.min(n));
            let mut edge = VertexSet::EMPTY;
            while edge.len() < size {
                edge.insert(rng.gen_range(1..=n));
            }
            generators.push(edge);
        }
        let b = BuildingSet::from_generators(ground, &generators).unwrap();
        let facets = facet_cone(&b);
        let reduced = irredundant(&brute_cone(&b));
        assert!(
            cone_equal(&facets, &reduced).unwrap(),
            "round {round}: |B| = {}, generators {generators:?}",
            b.len()
        );
        assert_eq!(facets.inequalities().len() as u64, facet_count(&b));
    }
}

/// The all-intervals building on six elements: Catalan(6) kinematic
/// vertices with the zero-set bijection.
#[test]
#[ignore]
fn all_intervals_six_kinematic() {
    let b = all_intervals_building(6);
    let m = facet_cone(&b).inequalities().len();
    let poly = kinematic_polytope(&b, &KinematicInput::ones(m)).unwrap();
    assert_eq!(poly.vertices.len() as u64, catalan(6));
    let coords = poly.coord_blocks.unwrap();
    for v in &poly.vertices {
        let zeros: Vec<_> = coords
            .iter()
            .zip(&v.coords)
            .filter(|(_, c)| num_traits::Zero::is_zero(*c))
            .map(|(b, _)| *b)
            .collect();
        assert_eq!(zeros, v.nested_set.non_component_blocks(&b));
    }
}
