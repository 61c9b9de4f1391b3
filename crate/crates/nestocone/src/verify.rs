//! Cross-validation suites: closed-form counts against the brute-force
//! oracle, simpliciality characterizations, height membership, realization
//! coherence, and the worked nine-element example. The CLI `verify` verb
//! and the acceptance tests both drive these.

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::building::{components_of, elementary_blocks, graphical_building, BuildingSet};
use crate::graph::Graph;
use crate::linalg::{solve_particular, Rat};
use crate::nested::{
    enumerate_maximal_nested_sets, exchange_witnesses, flips, roots, NestedSet,
};
use crate::oracle::{brute_cone, cone_equal, irredundant, minkowski_vertex_count};
use crate::realize::{kinematic_polytope, realize_polytope, KinematicInput};
use crate::typecone::{
    classic_height, facet_cone, facet_count, height_membership, interval_profile, is_simplicial,
    HeightVariant, Membership,
};
use crate::vset::{Block, VertexSet};

/// Outcome of one verification suite.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> SuiteReport {
        SuiteReport {
            name: name.to_string(),
            instances: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn catalan(n: u32) -> u64 {
    // C(2n, n) / (n + 1), exactly.
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * (2 * n as u128 - k) / (k + 1);
    }
    (c / (n as u128 + 1)) as u64
}

pub fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut c: u128 = 1;
    for i in 0..k as u128 {
        c = c * (n as u128 - i) / (i + 1);
    }
    c as u64
}

// --- graph families -------------------------------------------------------

pub fn path_graph(n: u32) -> Graph {
    Graph::new(n, &(1..n).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
}

pub fn complete_graph(n: u32) -> Graph {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            edges.push((i, j));
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn cycle_graph(n: u32) -> Graph {
    let mut edges: Vec<(u32, u32)> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((n, 1));
    Graph::new(n, &edges).unwrap()
}

/// Star with center 1.
pub fn star_graph(n: u32) -> Graph {
    Graph::new(n, &(2..=n).map(|i| (1, i)).collect::<Vec<_>>()).unwrap()
}

// --- exhaustive graph enumeration up to isomorphism ------------------------

fn edge_pairs(n: u32) -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            pairs.push((i, j));
        }
    }
    pairs
}

fn permutations(n: u32) -> Vec<Vec<u32>> {
    fn rec(remaining: &mut Vec<u32>, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining.is_empty() {
            out.push(current.clone());
            return;
        }
        for i in 0..remaining.len() {
            let v = remaining.remove(i);
            current.push(v);
            rec(remaining, current, out);
            current.pop();
            remaining.insert(i, v);
        }
    }
    let mut remaining: Vec<u32> = (1..=n).collect();
    let mut out = Vec::new();
    rec(&mut remaining, &mut Vec::new(), &mut out);
    out
}

/// Graphs on exactly `n` labelled vertices, one representative per
/// isomorphism class, optionally restricted to connected ones.
pub fn graphs_up_to_iso(n: u32, connected_only: bool) -> Vec<Graph> {
    let pairs = edge_pairs(n);
    let perms = permutations(n);
    // Permutation action on edge-mask bit positions.
    let pair_index = |a: u32, b: u32| -> usize {
        let (a, b) = (a.min(b), a.max(b));
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let actions: Vec<Vec<usize>> = perms
        .iter()
        .map(|perm| {
            pairs
                .iter()
                .map(|&(a, b)| pair_index(perm[(a - 1) as usize], perm[(b - 1) as usize]))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let canon = actions
            .iter()
            .map(|act| {
                let mut m = 0u32;
                for (bit, &img) in act.iter().enumerate() {
                    if mask & (1 << bit) != 0 {
                        m |= 1 << img;
                    }
                }
                m
            })
            .min()
            .unwrap();
        if canon != mask || !seen.insert(canon) {
            continue;
        }
        let edges: Vec<(u32, u32)> = pairs
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask & (1 << bit) != 0)
            .map(|(_, &p)| p)
            .collect();
        let g = Graph::new(n, &edges).unwrap();
        if !connected_only || g.components().len() == 1 {
            out.push(g);
        }
    }
    out
}

/// Whether the graph is a disjoint union of paths: a forest with maximum
/// degree two.
pub fn is_disjoint_union_of_paths(g: &Graph) -> bool {
    let n = g.n();
    if (1..=n).any(|v| g.neighbors(v).len() > 2) {
        return false;
    }
    let edge_count = g.edges().len() as u32;
    // A forest has #vertices - #components edges; degree <= 2 then forces
    // disjoint paths.
    edge_count + g.components().len() as u32 == n
}

// --- random instances -------------------------------------------------------

/// Seeded random hypergraph closure on a ground set of size 2..=max_ground.
pub fn random_closure(rng: &mut ChaCha8Rng, max_ground: u32) -> BuildingSet {
    let n = rng.gen_range(2..=max_ground);
    let ground = VertexSet::range(n);
    let hyperedges = rng.gen_range(1..=n.max(2));
    let mut generators = Vec::new();
    for _ in 0..hyperedges {
        let size = rng.gen_range(2..=3.min(n));
        let mut edge = VertexSet::EMPTY;
        while edge.len() < size {
            edge.insert(rng.gen_range(1..=n));
        }
        generators.push(edge);
    }
    BuildingSet::from_generators(ground, &generators).expect("closure of valid hyperedges")
}

/// Seeded random interval building set on `{1..n}`: the closure of a random
/// family of intervals (unions of overlapping intervals stay intervals).
pub fn random_interval_building(rng: &mut ChaCha8Rng, n_max: u32) -> BuildingSet {
    let n = rng.gen_range(2..=n_max);
    let ground = VertexSet::range(n);
    let count = rng.gen_range(1..=n);
    let mut generators = Vec::new();
    for _ in 0..count {
        let i = rng.gen_range(1..=n);
        let j = rng.gen_range(i..=n);
        generators.push(VertexSet::from_labels(i..=j).unwrap());
    }
    BuildingSet::from_generators(ground, &generators).expect("closure of intervals")
}

/// All-intervals building on `{1..n}` (the tube set of the path).
pub fn all_intervals_building(n: u32) -> BuildingSet {
    graphical_building(&path_graph(n))
}

/// Pitman-Stanley building on `{1..n}`: singletons plus initial intervals.
pub fn pitman_stanley_building(n: u32) -> BuildingSet {
    let mut blocks: Vec<Block> = (1..=n).map(VertexSet::singleton).collect();
    for j in 2..=n {
        blocks.push(VertexSet::from_labels(1..=j).unwrap());
    }
    BuildingSet::from_blocks(VertexSet::range(n), &blocks).unwrap()
}

/// The 21-block worked example on the ground set 1..=9.
pub fn nine_block_building() -> BuildingSet {
    let blocks: Vec<VertexSet> = [
        vec![1], vec![2], vec![3], vec![4], vec![5], vec![6], vec![7], vec![8], vec![9],
        vec![1, 4], vec![2, 5],
        vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9],
        vec![1, 2, 3, 4], vec![1, 2, 3, 5], vec![1, 4, 5, 6], vec![2, 4, 5, 6],
        vec![1, 2, 3, 4, 5], vec![1, 2, 4, 5, 6],
        vec![1, 2, 3, 4, 5, 6],
    ]
    .iter()
    .map(|v| VertexSet::from_labels(v.iter().copied()).unwrap())
    .collect();
    BuildingSet::from_blocks(VertexSet::range(9), &blocks).unwrap()
}

fn vs(labels: &[u32]) -> VertexSet {
    VertexSet::from_labels(labels.iter().copied()).unwrap()
}

// --- suites -----------------------------------------------------------------

/// Facet counts of the four classical families against their closed forms.
pub fn suite_family_counts(n_lo: u32, n_hi: u32) -> SuiteReport {
    let mut rep = SuiteReport::new("family-facet-counts");
    for n in n_lo..=n_hi {
        let nn = n as u64;
        let cases: [(&str, Graph, u64); 4] = [
            ("complete", complete_graph(n), (1 << (n - 2)) * binom(nn, 2)),
            ("path", path_graph(n), binom(nn, 2)),
            ("cycle", cycle_graph(n), 3 * binom(nn, 2) - nn),
            (
                "star",
                star_graph(n),
                nn - 1 + (1u64 << (n - 3)) * binom(nn - 1, 2),
            ),
        ];
        for (family, g, expected) in cases {
            let got = facet_count(&graphical_building(&g));
            rep.check(got == expected, || {
                format!("{family} n={n}: facet_count {got} != {expected}")
            });
        }
    }
    rep
}

/// Main oracle equality on exhaustive connected graphs:
/// `facet_cone == irredundant(brute_cone)`, the count matches, and the
/// non-disconnecting-vertex route gives the same facets.
pub fn suite_oracle_graphs(max_vertices: u32) -> SuiteReport {
    let mut rep = SuiteReport::new("oracle-equality-connected-graphs");
    for n in 1..=max_vertices {
        for g in graphs_up_to_iso(n, true) {
            let b = graphical_building(&g);
            let label = format!("graph n={n} edges={:?}", g.edges());
            oracle_check(&mut rep, &b, &label);
            rep.check(
                crate::typecone::graphical_facet_cone(&g) == facet_cone(&b),
                || format!("{label}: tube-pair facet route disagrees"),
            );
        }
    }
    rep
}

/// Oracle equality on seeded random hypergraph closures.
pub fn suite_oracle_closures(count: usize, max_ground: u32, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("oracle-equality-random-closures");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let b = random_closure(&mut rng, max_ground);
        let label = format!("closure |B|={} ground={}", b.len(), b.ground());
        oracle_check(&mut rep, &b, &label);
    }
    rep
}

fn oracle_check(rep: &mut SuiteReport, b: &BuildingSet, label: &str) {
    let facets = facet_cone(b);
    let reduced = irredundant(&brute_cone(b));
    let equal = cone_equal(&facets, &reduced).unwrap_or(false);
    rep.check(equal, || format!("{label}: facet_cone != irredundant(brute_cone)"));
    let count_ok = facets.inequalities().len() as u64 == facet_count(b);
    rep.check(count_ok, || format!("{label}: facet count mismatch"));
    // Simpliciality is exactly "as many facets as the type cone has
    // dimensions beyond its lineality": #blocks - #ground.
    let slack = (b.len() - b.ground().len() as usize) as u64;
    rep.check(is_simplicial(b) == (facet_count(b) == slack), || {
        format!("{label}: simpliciality vs facet-count identity")
    });
}

/// The worked nine-element example, asserted at string level.
pub fn suite_worked_example() -> SuiteReport {
    let mut rep = SuiteReport::new("worked-example");
    let b = nine_block_building();

    let fmt_blocks = |blocks: &[Block]| -> String {
        blocks
            .iter()
            .map(|c| c.iter().map(|v| v.to_string()).collect::<String>())
            .collect::<Vec<_>>()
            .join(",")
    };
    rep.check(fmt_blocks(b.components()) == "789,123456", || {
        format!("components are {}", fmt_blocks(b.components()))
    });
    rep.check(
        fmt_blocks(&elementary_blocks(&b)) == "14,25,123,456,789",
        || format!("elementary blocks are {}", fmt_blocks(&elementary_blocks(&b))),
    );

    let nested_circ = NestedSet::new(
        &b,
        &[
            vs(&[3]), vs(&[4]), vs(&[5]), vs(&[7]), vs(&[8]),
            vs(&[1, 4]), vs(&[7, 8, 9]), vs(&[1, 2, 3, 4, 5]), vs(&[1, 2, 3, 4, 5, 6]),
        ],
    );
    let nested_prime = NestedSet::new(
        &b,
        &[
            vs(&[3]), vs(&[4]), vs(&[5]), vs(&[7]), vs(&[8]),
            vs(&[2, 5]), vs(&[7, 8, 9]), vs(&[1, 2, 3, 4, 5]), vs(&[1, 2, 3, 4, 5, 6]),
        ],
    );
    let (Ok(nc), Ok(np)) = (nested_circ, nested_prime) else {
        rep.check(false, || "stated nested sets are not nested".to_string());
        return rep;
    };
    rep.check(nc.is_maximal(&b) && np.is_maximal(&b), || {
        "stated nested sets are not maximal".to_string()
    });

    let all_flips = flips(&b, &nc).expect("maximal");
    let found = all_flips.iter().find(|(f, _)| f.block_out == vs(&[1, 4]));
    match found {
        Some((frame, adjacent)) => {
            rep.check(adjacent == &np, || "flip at 14 does not reach the stated set".into());
            rep.check(
                frame.block_in == vs(&[2, 5])
                    && frame.parent == vs(&[1, 2, 3, 4, 5])
                    && frame.pivots == (1, 2),
                || format!("frame at 14 is ({}, {}, {}) pivots {:?}", frame.block_out, frame.block_in, frame.parent, frame.pivots),
            );
            let ineq = crate::typecone::wall_inequality(&b, frame).expect("valid frame");
            let coeffs = ineq.coeffs();
            rep.check(
                coeffs.get(&vs(&[1, 4])) == Some(&1)
                    && coeffs.get(&vs(&[2, 5])) == Some(&1)
                    && coeffs.get(&vs(&[3])) == Some(&1)
                    && coeffs.get(&vs(&[1, 2, 3, 4, 5])) == Some(&-1)
                    && coeffs.len() == 4,
                || "wall inequality at (14,25,12345) is wrong".into(),
            );
        }
        None => rep.check(false, || "no flip at 14".into()),
    }

    // Second wall via witnesses.
    let witnesses = exchange_witnesses(&b, vs(&[1, 4]), vs(&[2, 5])).expect("blocks");
    rep.check(
        witnesses.contains(&(vs(&[1, 2, 3, 4, 5]), 1, 2))
            && witnesses.contains(&(vs(&[1, 2, 4, 5, 6]), 4, 5)),
        || format!("witnesses are {witnesses:?}"),
    );
    let frame2 = crate::nested::ExchangeFrame {
        block_out: vs(&[1, 4]),
        block_in: vs(&[2, 5]),
        parent: vs(&[1, 2, 4, 5, 6]),
        pivots: (4, 5),
    };
    let ineq2 = crate::typecone::wall_inequality(&b, &frame2).expect("valid frame");
    rep.check(
        ineq2.coeff(vs(&[1, 4])) == 1
            && ineq2.coeff(vs(&[2, 5])) == 1
            && ineq2.coeff(vs(&[6])) == 1
            && ineq2.coeff(vs(&[1, 2, 4, 5, 6])) == -1
            && ineq2.coeffs().len() == 4,
        || "wall inequality at (14,25,12456) is wrong".into(),
    );

    // Roots as stated.
    let rc = roots(&b, &nc);
    let rp = roots(&b, &np);
    rep.check(
        rc[&vs(&[1, 4])] == vs(&[1])
            && rc[&vs(&[1, 2, 3, 4, 5])] == vs(&[2])
            && rp[&vs(&[1, 2, 3, 4, 5])] == vs(&[1])
            && rp[&vs(&[2, 5])] == vs(&[2]),
        || "roots differ from the stated values".into(),
    );

    // Restriction and connected components of the stated subset.
    let u = vs(&[1, 2, 4, 5, 7, 8]);
    let comps = components_of(&b, u).expect("subset of ground");
    rep.check(fmt_blocks(&comps) == "7,8,14,25", || {
        format!("components of 124578 are {}", fmt_blocks(&comps))
    });
    rep
}

/// The type cone of the worked example: rays, dimension, facet count,
/// simpliciality, the exact facet list, and oracle-confirmed irredundancy.
pub fn suite_worked_example_cone() -> SuiteReport {
    let mut rep = SuiteReport::new("worked-example-cone");
    let b = nine_block_building();
    let rays = b.len() - b.components().len();
    let dim = b.ground().len() as usize - b.components().len();
    rep.check(rays == 19, || format!("rays = {rays}"));
    rep.check(dim == 7, || format!("dim = {dim}"));
    rep.check(facet_count(&b) == 12, || format!("facets = {}", facet_count(&b)));
    rep.check(is_simplicial(&b), || "not simplicial".into());

    let cone = facet_cone(&b);
    rep.check(cone.inequalities().len() == 12, || "facet list size".into());
    let mk = |entries: &[(&[u32], i64)]| -> crate::typecone::Inequality {
        crate::typecone::Inequality::new(
            entries.iter().map(|(l, c)| (vs(l), *c)).collect(),
            b.components(),
        )
        .unwrap()
    };
    let expected = vec![
        mk(&[(&[1], 1), (&[4], 1), (&[1, 4], -1)]),
        mk(&[(&[2], 1), (&[5], 1), (&[2, 5], -1)]),
        mk(&[(&[1], 1), (&[2], 1), (&[3], 1), (&[1, 2, 3], -1)]),
        mk(&[(&[4], 1), (&[5], 1), (&[6], 1), (&[4, 5, 6], -1)]),
        mk(&[(&[7], 1), (&[8], 1), (&[9], 1)]),
        mk(&[(&[1, 4], 1), (&[1, 2, 3], 1), (&[1, 2, 3, 4], -1), (&[1], -1)]),
        mk(&[(&[2, 5], 1), (&[1, 2, 3], 1), (&[1, 2, 3, 5], -1), (&[2], -1)]),
        mk(&[(&[1, 4], 1), (&[4, 5, 6], 1), (&[1, 4, 5, 6], -1), (&[4], -1)]),
        mk(&[(&[2, 5], 1), (&[4, 5, 6], 1), (&[2, 4, 5, 6], -1), (&[5], -1)]),
        mk(&[(&[1, 2, 3, 4], 1), (&[1, 2, 3, 5], 1), (&[1, 2, 3, 4, 5], -1), (&[1, 2, 3], -1)]),
        mk(&[(&[1, 4, 5, 6], 1), (&[2, 4, 5, 6], 1), (&[1, 2, 4, 5, 6], -1), (&[4, 5, 6], -1)]),
        mk(&[(&[1, 2, 3, 4, 5], 1), (&[1, 2, 4, 5, 6], 1), (&[1, 4], -1), (&[2, 5], -1)]),
    ];
    let got: std::collections::BTreeSet<_> = cone.inequalities().iter().cloned().collect();
    let want: std::collections::BTreeSet<_> = expected.into_iter().collect();
    rep.check(got == want, || "facet list differs from the derived twelve".into());

    let reduced = irredundant(&brute_cone(&b));
    rep.check(
        cone_equal(&cone, &reduced).unwrap_or(false),
        || "oracle disagrees on the worked example".into(),
    );
    rep
}

/// Maximal nested set counts: Catalan for paths, factorials for complete
/// graphs.
pub fn suite_nested_counts(n_max: u32) -> SuiteReport {
    let mut rep = SuiteReport::new("nested-set-counts");
    for n in 1..=n_max {
        let p = enumerate_maximal_nested_sets(&graphical_building(&path_graph(n))).len() as u64;
        rep.check(p == catalan(n), || format!("path n={n}: {p} != Catalan"));
        let k = enumerate_maximal_nested_sets(&graphical_building(&complete_graph(n))).len() as u64;
        rep.check(k == factorial(n), || format!("complete n={n}: {k} != n!"));
    }
    rep
}

/// is_simplicial(tubes(G)) iff G is a disjoint union of paths, over all
/// graphs up to isomorphism with at most `max_vertices` vertices.
pub fn suite_simpliciality_graphs(max_vertices: u32) -> SuiteReport {
    let mut rep = SuiteReport::new("simpliciality-graphs");
    for n in 1..=max_vertices {
        for g in graphs_up_to_iso(n, false) {
            let simp = is_simplicial(&graphical_building(&g));
            let paths = is_disjoint_union_of_paths(&g);
            rep.check(simp == paths, || {
                format!("n={n} edges={:?}: simplicial={simp} paths={paths}", g.edges())
            });
        }
    }
    rep
}

/// Interval building sets: always simplicial, and the interval profile
/// reproduces the facet description exactly.
pub fn suite_simpliciality_intervals(count: usize, n_max: u32, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("simpliciality-intervals");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let b = random_interval_building(&mut rng, n_max);
        let label = format!("interval |B|={} n={}", b.len(), b.ground().len());
        rep.check(is_simplicial(&b), || format!("{label}: not simplicial"));
        match interval_profile(&b) {
            Ok(profile) => rep.check(profile.cone == facet_cone(&b), || {
                format!("{label}: profile facets differ")
            }),
            Err(e) => rep.check(false, || format!("{label}: profile failed: {e}")),
        }
    }
    rep
}

/// Both classical heights are strictly interior on every given instance.
pub fn suite_heights(instances: &[(String, BuildingSet)]) -> SuiteReport {
    let mut rep = SuiteReport::new("height-membership");
    for (label, b) in instances {
        for variant in [HeightVariant::Devadoss, HeightVariant::Postnikov] {
            let h = classic_height(b, variant);
            let m = height_membership(b, &h).expect("heights are valid");
            rep.check(m == Membership::Interior, || {
                format!("{label} {variant:?}: membership {m:?}")
            });
        }
    }
    rep
}

/// Realization coherence: one vertex per maximal nested set, tight exactly
/// on its blocks, and polytope edges exactly the flips.
pub fn suite_realizations(instances: &[(String, BuildingSet)]) -> SuiteReport {
    let mut rep = SuiteReport::new("realization-coherence");
    for (label, b) in instances {
        let mns = enumerate_maximal_nested_sets(b);
        for variant in [HeightVariant::Devadoss, HeightVariant::Postnikov] {
            let h = classic_height(b, variant);
            let poly = match realize_polytope(b, &h) {
                Ok(p) => p,
                Err(e) => {
                    rep.check(false, || format!("{label} {variant:?}: realize failed: {e}"));
                    continue;
                }
            };
            rep.check(poly.vertices.len() == mns.len(), || {
                format!("{label} {variant:?}: vertex count")
            });
            // Tightness: vertex tight exactly on its nested set.
            let labels: Vec<u32> = b.ground().to_vec();
            let mut tight_ok = true;
            let mut distinct_ok = true;
            for v in &poly.vertices {
                for &blk in b.blocks() {
                    let sum: Rat = blk
                        .iter()
                        .map(|x| {
                            let i = labels.iter().position(|&l| l == x).unwrap();
                            v.coords[i].clone()
                        })
                        .sum();
                    let tight = sum == h.value(blk);
                    if tight != v.nested_set.contains(blk) || (!tight && sum > h.value(blk)) {
                        tight_ok = false;
                    }
                }
            }
            for i in 0..poly.vertices.len() {
                for j in (i + 1)..poly.vertices.len() {
                    if poly.vertices[i].coords == poly.vertices[j].coords {
                        distinct_ok = false;
                    }
                }
            }
            rep.check(tight_ok, || format!("{label} {variant:?}: tightness"));
            rep.check(distinct_ok, || format!("{label} {variant:?}: vertex injectivity"));
            // Edges (n-1 shared tight blocks) are exactly flips.
            let n = b.ground().len() as usize;
            let mut edges_ok = true;
            for i in 0..poly.vertices.len() {
                let s = &poly.vertices[i].nested_set;
                let neighbors: std::collections::BTreeSet<NestedSet> = flips(b, s)
                    .expect("maximal")
                    .into_iter()
                    .map(|(_, adj)| adj)
                    .collect();
                for j in 0..poly.vertices.len() {
                    if i == j {
                        continue;
                    }
                    let t = &poly.vertices[j].nested_set;
                    let shared = s.blocks().iter().filter(|c| t.contains(**c)).count();
                    if (shared + 1 == n) != neighbors.contains(t) {
                        edges_ok = false;
                    }
                }
            }
            rep.check(edges_ok, || format!("{label} {variant:?}: edges vs flips"));
        }
    }
    rep
}

/// Kinematic realizations: Catalan many vertices for the all-intervals
/// building, the zero-set bijection, and the Pitman-Stanley count.
pub fn suite_kinematic(n_max: u32) -> SuiteReport {
    let mut rep = SuiteReport::new("kinematic-realizations");
    for n in 2..=n_max {
        let b = all_intervals_building(n);
        let m = facet_cone(&b).inequalities().len();
        match kinematic_polytope(&b, &KinematicInput::ones(m)) {
            Ok(poly) => {
                rep.check(poly.vertices.len() as u64 == catalan(n), || {
                    format!("intervals n={n}: {} vertices", poly.vertices.len())
                });
                let coords = poly.coord_blocks.clone().unwrap();
                let mut bijection_ok = true;
                let mut seen = std::collections::BTreeSet::new();
                for v in &poly.vertices {
                    let zeros: Vec<Block> = coords
                        .iter()
                        .zip(&v.coords)
                        .filter(|(_, c)| c.is_zero())
                        .map(|(b, _)| *b)
                        .collect();
                    if zeros != v.nested_set.non_component_blocks(&b) {
                        bijection_ok = false;
                    }
                    if !seen.insert(v.nested_set.clone()) {
                        bijection_ok = false;
                    }
                }
                rep.check(bijection_ok, || format!("intervals n={n}: zero-set bijection"));
            }
            Err(e) => rep.check(false, || format!("intervals n={n}: {e}")),
        }
    }
    let ps = pitman_stanley_building(3);
    let m = facet_cone(&ps).inequalities().len();
    match kinematic_polytope(&ps, &KinematicInput::ones(m)) {
        Ok(poly) => {
            rep.check(poly.vertices.len() == 4, || {
                format!("pitman-stanley [3]: {} vertices", poly.vertices.len())
            });
            rep.check(poly.dim == 4, || format!("pitman-stanley [3]: dim {}", poly.dim));
        }
        Err(e) => rep.check(false, || format!("pitman-stanley [3]: {e}")),
    }
    rep
}

/// Kinematic/height duality: for a simplicial type cone an interior height
/// with facet slacks p exists, and the per-vertex slack map lands exactly
/// on the kinematic vertices.
pub fn suite_kinematic_duality(instances: &[(String, BuildingSet)]) -> SuiteReport {
    let mut rep = SuiteReport::new("kinematic-height-duality");
    for (label, b) in instances {
        if !is_simplicial(b) {
            continue;
        }
        let cone = facet_cone(b);
        let coords = cone.ray_blocks();
        let m = cone.inequalities().len();
        let p = KinematicInput::ones(m);
        // Solve <n_i, h> = 1 for some height h; all facets at slack one is
        // interior by definition.
        let rows: Vec<Vec<Rat>> = cone
            .inequalities()
            .iter()
            .map(|q| {
                q.dense_row(&coords)
                    .into_iter()
                    .map(|c| Rat::from_integer(c.into()))
                    .collect()
            })
            .collect();
        let rhs: Vec<Rat> = p.values().to_vec();
        let Some(h_free) = solve_particular(&rows, &rhs) else {
            rep.check(false, || format!("{label}: no height with unit slacks"));
            continue;
        };
        let mut values: std::collections::BTreeMap<Block, Rat> = coords
            .iter()
            .cloned()
            .zip(h_free)
            .collect();
        for &k in b.components() {
            values.insert(k, Rat::zero());
        }
        let h = crate::typecone::HeightVector::new(b, values).expect("valid height");
        let poly = match realize_polytope(b, &h) {
            Ok(p) => p,
            Err(e) => {
                rep.check(false, || format!("{label}: realize with unit slacks: {e}"));
                continue;
            }
        };
        let kin = match kinematic_polytope(b, &p) {
            Ok(k) => k,
            Err(e) => {
                rep.check(false, || format!("{label}: kinematic: {e}"));
                continue;
            }
        };
        // Slack map z_B = h_B - sum_{v in B} x_v.
        let labels: Vec<u32> = b.ground().to_vec();
        let mut mapped: Vec<(NestedSet, Vec<Rat>)> = Vec::new();
        for v in &poly.vertices {
            let z: Vec<Rat> = coords
                .iter()
                .map(|&blk| {
                    let sum: Rat = blk
                        .iter()
                        .map(|x| {
                            let i = labels.iter().position(|&l| l == x).unwrap();
                            v.coords[i].clone()
                        })
                        .sum();
                    h.value(blk) - sum
                })
                .collect();
            mapped.push((v.nested_set.clone(), z));
        }
        let mut ok = mapped.len() == kin.vertices.len();
        for (ns, z) in &mapped {
            match kin.vertices.iter().find(|kv| &kv.nested_set == ns) {
                Some(kv) => {
                    if &kv.coords != z {
                        ok = false;
                    }
                }
                None => ok = false,
            }
        }
        rep.check(ok, || format!("{label}: slack map is not the kinematic bijection"));
    }
    rep
}

/// Vertex counts of the Postnikov realization against the support-function
/// count of the Minkowski sum of block simplices.
pub fn suite_minkowski(max_vertices: u32) -> SuiteReport {
    let mut rep = SuiteReport::new("minkowski-cross-check");
    for n in 1..=max_vertices {
        for g in graphs_up_to_iso(n, false) {
            let b = graphical_building(&g);
            let h = classic_height(&b, HeightVariant::Postnikov);
            let realized = match realize_polytope(&b, &h) {
                Ok(p) => p.vertices.len(),
                Err(e) => {
                    rep.check(false, || format!("n={n} {:?}: realize: {e}", g.edges()));
                    continue;
                }
            };
            match minkowski_vertex_count(&b) {
                Ok(mk) => rep.check(mk == realized, || {
                    format!("n={n} {:?}: minkowski {mk} != realized {realized}", g.edges())
                }),
                Err(e) => rep.check(false, || format!("n={n} {:?}: {e}", g.edges())),
            }
        }
    }
    rep
}

/// The standard instance pool: exhaustive connected graphs, seeded random
/// closures, seeded interval buildings, and the worked example.
pub fn instance_pool(max_graph: u32, closures: usize, max_ground: u32, seed: u64) -> Vec<(String, BuildingSet)> {
    let mut pool: Vec<(String, BuildingSet)> = Vec::new();
    for n in 1..=max_graph {
        for (i, g) in graphs_up_to_iso(n, true).into_iter().enumerate() {
            pool.push((format!("graph-n{n}-{i}"), graphical_building(&g)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..closures {
        let b = random_closure(&mut rng, max_ground);
        pool.push((format!("closure-{i}"), b));
    }
    pool
}

/// Everything, sized for the CLI `verify` verb.
pub fn run_all(max_n: u32, seed: u64) -> Vec<SuiteReport> {
    let max_n = max_n.max(3);
    let oracle_graph_cap = max_n.min(5);
    let closure_cap = (max_n + 1).min(6);
    let mut reports = vec![
        suite_family_counts(3, (max_n + 2).min(7)),
        suite_oracle_graphs(oracle_graph_cap),
        suite_oracle_closures(50, closure_cap, seed),
        suite_worked_example(),
        suite_worked_example_cone(),
        suite_nested_counts((max_n + 1).min(6)),
        suite_simpliciality_graphs((max_n + 1).min(6)),
        suite_simpliciality_intervals(20, (max_n + 2).min(7), seed.wrapping_add(1)),
    ];
    let pool = instance_pool(oracle_graph_cap.min(5), 10, 5, seed.wrapping_add(2));
    let mut with_example = pool.clone();
    with_example.push(("nine-block-example".into(), nine_block_building()));
    reports.push(suite_heights(&with_example));
    reports.push(suite_realizations(&pool));
    reports.push(suite_kinematic(max_n.min(5)));
    reports.push(suite_kinematic_duality(&pool));
    reports.push(suite_minkowski((max_n.saturating_sub(1)).clamp(1, 4)));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_enumeration_counts() {
        // Known counts of graphs on n labelled vertices up to isomorphism.
        assert_eq!(graphs_up_to_iso(1, false).len(), 1);
        assert_eq!(graphs_up_to_iso(2, false).len(), 2);
        assert_eq!(graphs_up_to_iso(3, false).len(), 4);
        assert_eq!(graphs_up_to_iso(4, false).len(), 11);
        assert_eq!(graphs_up_to_iso(5, false).len(), 34);
        // Connected ones.
        assert_eq!(graphs_up_to_iso(3, true).len(), 2);
        assert_eq!(graphs_up_to_iso(4, true).len(), 6);
        assert_eq!(graphs_up_to_iso(5, true).len(), 21);
    }

    #[test]
    fn catalan_and_factorial() {
        assert_eq!(catalan(3), 5);
        assert_eq!(catalan(5), 42);
        assert_eq!(factorial(6), 720);
    }

    #[test]
    fn path_union_detection() {
        assert!(is_disjoint_union_of_paths(&path_graph(4)));
        assert!(is_disjoint_union_of_paths(&Graph::new(3, &[]).unwrap()));
        assert!(!is_disjoint_union_of_paths(&cycle_graph(4)));
        assert!(!is_disjoint_union_of_paths(&star_graph(4)));
    }

    #[test]
    fn worked_example_suites_pass() {
        let rep = suite_worked_example();
        assert!(rep.passed(), "{:?}", rep.failures);
        let rep = suite_worked_example_cone();
        assert!(rep.passed(), "{:?}", rep.failures);
    }

    #[test]
    fn small_suites_pass() {
        assert!(suite_family_counts(3, 4).passed());
        assert!(suite_nested_counts(4).passed());
        assert!(suite_oracle_graphs(4).passed());
        assert!(suite_simpliciality_graphs(4).passed());
        let pool = instance_pool(3, 4, 4, 7);
        assert!(suite_heights(&pool).passed());
        assert!(suite_realizations(&pool).passed());
        assert!(suite_kinematic(4).passed());
        assert!(suite_kinematic_duality(&pool).passed());
        assert!(suite_minkowski(3).passed());
    }

    #[test]
    fn random_generators_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..30 {
            let b = random_closure(&mut rng, 6);
            b.verify_axioms().unwrap();
            let iv = random_interval_building(&mut rng, 7);
            iv.verify_axioms().unwrap();
            assert!(iv.blocks().iter().all(|b| b.is_interval()));
        }
    }
}
