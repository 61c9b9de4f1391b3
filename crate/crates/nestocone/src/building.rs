//! Building sets: construction and axiom validation, hypergraph closure,
//! connected components, elementary blocks, maximal strict subblocks,
//! restriction and contraction.
//!
//! Ground sets are arbitrary label sets (not necessarily `{1..n}`) so that
//! restriction and contraction preserve vertex identities; the JSON layer
//! maps `{"n": k}` to the ground `{1..k}`.

use crate::error::Error;
use crate::graph::{enumerate_tubes, Graph};
use crate::vset::{Block, VertexSet};

/// A building set: a family of non-empty subsets of the ground set that
/// contains all singletons and the union of any two intersecting members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildingSet {
    ground: VertexSet,
    blocks: Vec<Block>,
    components: Vec<Block>,
}

/// Restriction keeps the blocks inside `u`; contraction keeps the traces of
/// blocks over the complement of `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InduceMode {
    Restriction,
    Contraction,
}

impl BuildingSet {
    /// Validate the two building-set axioms over an explicit block family.
    pub fn from_blocks(ground: VertexSet, blocks: &[Block]) -> Result<BuildingSet, Error> {
        if ground.is_empty() {
            return Err(Error::EmptyGround);
        }
        let mut sorted: Vec<Block> = Vec::with_capacity(blocks.len());
        for &b in blocks {
            if b.is_empty() {
                return Err(Error::EmptySubset);
            }
            if let Some(v) = b.difference(ground).min() {
                return Err(Error::NotInGround { vertex: v, ground });
            }
            sorted.push(b);
        }
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateBlock(w[0]));
            }
        }
        for v in ground.iter() {
            if sorted.binary_search(&VertexSet::singleton(v)).is_err() {
                return Err(Error::MissingSingleton(v));
            }
        }
        for i in 0..sorted.len() {
            for j in (i + 1)..sorted.len() {
                let (a, b) = (sorted[i], sorted[j]);
                if a.intersects(b) && sorted.binary_search(&a.union(b)).is_err() {
                    return Err(Error::UnionClosureViolated {
                        a,
                        b,
                        union: a.union(b),
                    });
                }
            }
        }
        Ok(Self::assemble(ground, sorted))
    }

    /// Closure mode: treat the input as hyperedges, add all singletons, and
    /// return the family of subsets inducing connected subhypergraphs.
    ///
    /// Computed as the union-closure fixed point of singletons plus
    /// hyperedges, which coincides with hypergraph connectivity.
    pub fn from_generators(ground: VertexSet, generators: &[VertexSet]) -> Result<BuildingSet, Error> {
        if ground.is_empty() {
            return Err(Error::EmptyGround);
        }
        let mut family: Vec<Block> = ground.iter().map(VertexSet::singleton).collect();
        for &e in generators {
            if e.is_empty() {
                return Err(Error::EmptySubset);
            }
            if let Some(v) = e.difference(ground).min() {
                return Err(Error::NotInGround { vertex: v, ground });
            }
            if !family.contains(&e) {
                family.push(e);
            }
        }
        // Fixed point over intersecting pairs; bounded by 2^|ground|.
        let mut frontier: Vec<Block> = family.clone();
        while let Some(b) = frontier.pop() {
            let mut new_blocks = Vec::new();
            for &c in &family {
                if b.intersects(c) {
                    let u = b.union(c);
                    if !family.contains(&u) && !new_blocks.contains(&u) {
                        new_blocks.push(u);
                    }
                }
            }
            for u in new_blocks {
                family.push(u);
                frontier.push(u);
            }
        }
        family.sort();
        let built = Self::assemble(ground, family);
        debug_assert!(built.verify_axioms().is_ok());
        Ok(built)
    }

    fn assemble(ground: VertexSet, blocks: Vec<Block>) -> BuildingSet {
        let mut components: Vec<Block> = Vec::new();
        for &b in &blocks {
            if !blocks.iter().any(|&c| b.is_strict_subset(c)) {
                components.push(b);
            }
        }
        components.sort();
        BuildingSet {
            ground,
            blocks,
            components,
        }
    }

    /// Re-run the axiom checks on an already-constructed value.
    pub fn verify_axioms(&self) -> Result<(), Error> {
        BuildingSet::from_blocks(self.ground, &self.blocks).map(|_| ())
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn contains(&self, b: Block) -> bool {
        self.blocks.binary_search(&b).is_ok()
    }

    pub fn check_block(&self, b: Block) -> Result<(), Error> {
        if self.contains(b) {
            Ok(())
        } else {
            Err(Error::NotABlock(b))
        }
    }

    /// Connected components: the inclusion-maximal blocks. They partition
    /// the ground set.
    pub fn components(&self) -> &[Block] {
        &self.components
    }

    pub fn is_component(&self, b: Block) -> bool {
        self.components.binary_search(&b).is_ok()
    }

    /// Blocks that are not components, in canonical order. These index the
    /// rays of the nested fan.
    pub fn non_component_blocks(&self) -> Vec<Block> {
        self.blocks
            .iter()
            .copied()
            .filter(|&b| !self.is_component(b))
            .collect()
    }

    /// The component containing a vertex.
    pub fn component_of_vertex(&self, v: u32) -> Option<Block> {
        self.components.iter().copied().find(|c| c.contains(v))
    }
}

/// The graphical building set: all tubes of `g`.
pub fn graphical_building(g: &Graph) -> BuildingSet {
    let blocks = enumerate_tubes(g);
    BuildingSet::from_blocks(g.ground(), &blocks)
        .expect("tube sets satisfy the building-set axioms")
}

/// `from_blocks` / `from_generators` behind one switch, matching the two
/// JSON input forms.
pub fn build_from_blocks(
    ground: VertexSet,
    blocks: &[VertexSet],
    close: bool,
) -> Result<BuildingSet, Error> {
    if close {
        BuildingSet::from_generators(ground, blocks)
    } else {
        BuildingSet::from_blocks(ground, blocks)
    }
}

/// Connected components of `u` inside the building set: the inclusion-maximal
/// blocks contained in `u`. They partition `u`; empty `u` gives an empty list.
pub fn components_of(b: &BuildingSet, u: VertexSet) -> Result<Vec<Block>, Error> {
    if let Some(v) = u.difference(b.ground()).min() {
        return Err(Error::NotInGround {
            vertex: v,
            ground: b.ground(),
        });
    }
    let inside: Vec<Block> = b.blocks().iter().copied().filter(|&c| c.is_subset(u)).collect();
    let mut out: Vec<Block> = inside
        .iter()
        .copied()
        .filter(|&c| !inside.iter().any(|&d| c.is_strict_subset(d)))
        .collect();
    out.sort();
    debug_assert_eq!(
        out.iter().fold(VertexSet::EMPTY, |acc, &c| acc.union(c)),
        u,
        "components must partition u"
    );
    Ok(out)
}

/// Inclusion-maximal blocks strictly contained in `p`.
pub fn maximal_strict_subblocks(b: &BuildingSet, p: Block) -> Result<Vec<Block>, Error> {
    b.check_block(p)?;
    let inside: Vec<Block> = b
        .blocks()
        .iter()
        .copied()
        .filter(|&c| c.is_strict_subset(p))
        .collect();
    let mut out: Vec<Block> = inside
        .iter()
        .copied()
        .filter(|&c| !inside.iter().any(|&d| c.is_strict_subset(d)))
        .collect();
    out.sort();
    Ok(out)
}

/// Elementary blocks: blocks `B` with `|B| > 1` such that any way of writing
/// `B` as a union of two other blocks uses disjoint parts.
///
/// Implemented by the definitional pair scan; `elementary_blocks_via_subblocks`
/// is the equivalent shortcut through disjoint maximal strict subblocks, kept
/// as a cross-checked fast path.
pub fn elementary_blocks(b: &BuildingSet) -> Vec<Block> {
    let mut out = Vec::new();
    'outer: for &p in b.blocks() {
        if p.len() <= 1 {
            continue;
        }
        let inside: Vec<Block> = b
            .blocks()
            .iter()
            .copied()
            .filter(|&c| c != p && c.is_subset(p))
            .collect();
        for i in 0..inside.len() {
            for j in (i + 1)..inside.len() {
                let (x, y) = (inside[i], inside[j]);
                if x.union(y) == p && x.intersects(y) {
                    continue 'outer;
                }
            }
        }
        out.push(p);
    }
    out
}

/// Shortcut test: a block of size > 1 is elementary iff its maximal strict
/// subblocks are pairwise disjoint (equivalently, iff two of them are).
pub fn elementary_blocks_via_subblocks(b: &BuildingSet) -> Vec<Block> {
    let mut out = Vec::new();
    for &p in b.blocks() {
        if p.len() <= 1 {
            continue;
        }
        let mu = maximal_strict_subblocks(b, p).expect("p is a block");
        let pairwise_disjoint = (0..mu.len())
            .all(|i| ((i + 1)..mu.len()).all(|j| mu[i].is_disjoint(mu[j])));
        if pairwise_disjoint {
            out.push(p);
        }
    }
    out
}

/// Restriction to `u` (blocks inside `u`, ground set `u`) or contraction of
/// `u` (traces over the complement, ground set `ground \ u`).
pub fn induce(b: &BuildingSet, u: VertexSet, mode: InduceMode) -> Result<BuildingSet, Error> {
    if let Some(v) = u.difference(b.ground()).min() {
        return Err(Error::NotInGround {
            vertex: v,
            ground: b.ground(),
        });
    }
    match mode {
        InduceMode::Restriction => {
            if u.is_empty() {
                return Err(Error::EmptyGround);
            }
            let blocks: Vec<Block> = b
                .blocks()
                .iter()
                .copied()
                .filter(|&c| c.is_subset(u))
                .collect();
            BuildingSet::from_blocks(u, &blocks)
        }
        InduceMode::Contraction => {
            let rest = b.ground().difference(u);
            if rest.is_empty() {
                return Err(Error::EmptyGround);
            }
            let mut blocks: Vec<Block> = Vec::new();
            for &c in b.blocks() {
                let candidate = if c.is_disjoint(u) {
                    c
                } else if u.is_subset(c) {
                    c.difference(u)
                } else {
                    continue;
                };
                if !candidate.is_empty() && !blocks.contains(&candidate) {
                    blocks.push(candidate);
                }
            }
            BuildingSet::from_blocks(rest, &blocks)
        }
    }
}

/// Whether the building set is graphical, i.e. equals the tube set of some
/// graph. The only candidate graph has the 2-element blocks as edges, so the
/// test reconstructs the closure of those and compares.
pub fn is_graphical(b: &BuildingSet) -> bool {
    let edges: Vec<Block> = b.blocks().iter().copied().filter(|c| c.len() == 2).collect();
    match BuildingSet::from_generators(b.ground(), &edges) {
        Ok(closure) => closure == *b,
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{complete, nine_block_building, path, star, vs};

    #[test]
    fn nine_block_building_is_valid() {
        let b = nine_block_building();
        assert_eq!(b.len(), 21);
        assert_eq!(b.components(), &[vs(&[7, 8, 9]), vs(&[1, 2, 3, 4, 5, 6])]);
    }

    #[test]
    fn closure_of_path_hyperedges() {
        let b = BuildingSet::from_generators(VertexSet::range(3), &[vs(&[1, 2]), vs(&[2, 3])])
            .unwrap();
        assert_eq!(b.blocks(), graphical_building(&path(3)).blocks());
    }

    #[test]
    fn two_components_accepted() {
        let b = BuildingSet::from_blocks(VertexSet::range(2), &[vs(&[1]), vs(&[2])]).unwrap();
        assert_eq!(b.components().len(), 2);
    }

    #[test]
    fn axiom_violations_are_reported() {
        let err = BuildingSet::from_blocks(
            VertexSet::range(3),
            &[vs(&[1]), vs(&[2]), vs(&[3]), vs(&[1, 2]), vs(&[2, 3])],
        )
        .unwrap_err();
        match err {
            Error::UnionClosureViolated { a, b, union } => {
                assert_eq!((a, b, union), (vs(&[1, 2]), vs(&[2, 3]), vs(&[1, 2, 3])));
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(matches!(
            BuildingSet::from_blocks(VertexSet::range(2), &[vs(&[1]), vs(&[1, 2])]),
            Err(Error::MissingSingleton(2))
        ));
        assert!(matches!(
            BuildingSet::from_blocks(VertexSet::range(1), &[vs(&[1]), VertexSet::EMPTY]),
            Err(Error::EmptySubset)
        ));
    }

    #[test]
    fn components_of_worked_example() {
        let b = nine_block_building();
        let u = vs(&[1, 2, 4, 5, 7, 8]);
        assert_eq!(
            components_of(&b, u).unwrap(),
            vec![vs(&[7]), vs(&[8]), vs(&[1, 4]), vs(&[2, 5])]
        );
        assert_eq!(components_of(&b, VertexSet::EMPTY).unwrap(), vec![]);
        assert_eq!(
            components_of(&b, VertexSet::range(9)).unwrap(),
            vec![vs(&[7, 8, 9]), vs(&[1, 2, 3, 4, 5, 6])]
        );
        assert!(matches!(
            components_of(&b, vs(&[10])),
            Err(Error::NotInGround { vertex: 10, .. })
        ));
        assert!(matches!(
            induce(&b, vs(&[10]), InduceMode::Restriction),
            Err(Error::NotInGround { .. })
        ));
    }

    #[test]
    fn elementary_blocks_worked_example() {
        let b = nine_block_building();
        let expected = vec![
            vs(&[1, 4]),
            vs(&[2, 5]),
            vs(&[1, 2, 3]),
            vs(&[4, 5, 6]),
            vs(&[7, 8, 9]),
        ];
        assert_eq!(elementary_blocks(&b), expected);
        assert_eq!(elementary_blocks_via_subblocks(&b), expected);
    }

    #[test]
    fn elementary_blocks_graphical_are_edges() {
        let g = star(4);
        let b = graphical_building(&g);
        let expected: Vec<Block> = g.edges().iter().map(|&(a, c)| vs(&[a, c])).collect();
        let mut expected = expected;
        expected.sort();
        assert_eq!(elementary_blocks(&b), expected);

        let singletons =
            BuildingSet::from_blocks(VertexSet::range(3), &[vs(&[1]), vs(&[2]), vs(&[3])]).unwrap();
        assert!(elementary_blocks(&singletons).is_empty());
    }

    #[test]
    fn maximal_strict_subblocks_examples() {
        let b = nine_block_building();
        assert_eq!(
            maximal_strict_subblocks(&b, vs(&[1, 2, 3, 4, 5])).unwrap(),
            vec![vs(&[1, 2, 3, 4]), vs(&[1, 2, 3, 5])]
        );
        assert_eq!(
            maximal_strict_subblocks(&b, vs(&[1, 2, 3])).unwrap(),
            vec![vs(&[1]), vs(&[2]), vs(&[3])]
        );
        assert_eq!(maximal_strict_subblocks(&b, vs(&[7])).unwrap(), vec![]);
        assert!(matches!(
            maximal_strict_subblocks(&b, vs(&[1, 2])),
            Err(Error::NotABlock(_))
        ));
    }

    #[test]
    fn restriction_worked_example() {
        let b = nine_block_building();
        let u = vs(&[1, 2, 4, 5, 7, 8]);
        let r = induce(&b, u, InduceMode::Restriction).unwrap();
        assert_eq!(
            r.blocks(),
            &[
                vs(&[1]),
                vs(&[2]),
                vs(&[4]),
                vs(&[5]),
                vs(&[7]),
                vs(&[8]),
                vs(&[1, 4]),
                vs(&[2, 5])
            ]
        );
        let full = induce(&b, b.ground(), InduceMode::Restriction).unwrap();
        assert_eq!(full, b);
    }

    #[test]
    fn contraction_example() {
        let b = graphical_building(&path(3));
        let c = induce(&b, vs(&[2]), InduceMode::Contraction).unwrap();
        assert_eq!(c.ground(), vs(&[1, 3]));
        assert_eq!(c.blocks(), &[vs(&[1]), vs(&[3]), vs(&[1, 3])]);
    }

    #[test]
    fn restriction_is_idempotent() {
        let b = nine_block_building();
        let u = vs(&[1, 2, 4, 5, 7, 8]);
        let once = induce(&b, u, InduceMode::Restriction).unwrap();
        let twice = induce(&once, u, InduceMode::Restriction).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn graphical_detection() {
        assert!(is_graphical(&graphical_building(&complete(4))));
        assert!(is_graphical(&graphical_building(&path(4))));
        let hyper =
            BuildingSet::from_generators(VertexSet::range(3), &[vs(&[1, 2, 3])]).unwrap();
        assert_eq!(hyper.len(), 4);
        assert!(!is_graphical(&hyper));
        let singletons =
            BuildingSet::from_blocks(VertexSet::range(3), &[vs(&[1]), vs(&[2]), vs(&[3])]).unwrap();
        assert!(is_graphical(&singletons));
    }

    /// The literal closure-condition quantifier, feasible only on tiny
    /// instances; used to cross-check `is_graphical`.
    pub(crate) fn is_graphical_by_quantifier(b: &BuildingSet) -> bool {
        let blocks = b.blocks();
        let m = blocks.len();
        assert!(m <= 16, "quantifier oracle only for tiny instances");
        for &blk in blocks {
            for mask in 1u32..(1 << m) {
                let family: Vec<Block> = (0..m)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| blocks[i])
                    .collect();
                let cup = family.iter().fold(blk, |acc, &c| acc.union(c));
                if b.contains(cup) && !family.iter().any(|&c| b.contains(blk.union(c))) {
                    return false;
                }
            }
        }
        true
    }

    proptest::proptest! {
        /// Closures of random hypergraphs satisfy both axioms, their
        /// components partition the ground set, and the two elementary
        /// tests agree.
        #[test]
        fn random_closures_are_sound(n in 2u32..7, edges in proptest::collection::vec((1u32..7, 1u32..7, 1u32..7), 1..5)) {
            let ground = VertexSet::range(n);
            let generators: Vec<VertexSet> = edges
                .iter()
                .map(|&(a, b, c)| {
                    VertexSet::from_labels([a, b, c].iter().map(|v| (v - 1) % n + 1)).unwrap()
                })
                .collect();
            let built = BuildingSet::from_generators(ground, &generators).unwrap();
            built.verify_axioms().unwrap();
            let union = built
                .components()
                .iter()
                .fold(VertexSet::EMPTY, |acc, &k| acc.union(k));
            proptest::prop_assert_eq!(union, ground);
            for i in 0..built.components().len() {
                for j in (i + 1)..built.components().len() {
                    proptest::prop_assert!(built.components()[i].is_disjoint(built.components()[j]));
                }
            }
            proptest::prop_assert_eq!(elementary_blocks(&built), elementary_blocks_via_subblocks(&built));
            for &blk in built.blocks() {
                let parts = components_of(&built, blk).unwrap();
                proptest::prop_assert_eq!(parts, vec![blk]);
            }
            // components_of partitions arbitrary subsets, not just blocks.
            for bits in 0u64..(1 << n) {
                let u = VertexSet::from_bits(bits);
                let parts = components_of(&built, u).unwrap();
                let mut seen = VertexSet::EMPTY;
                for &p in &parts {
                    proptest::prop_assert!(seen.is_disjoint(p));
                    seen = seen.union(p);
                }
                proptest::prop_assert_eq!(seen, u);
            }
        }
    }

    #[test]
    fn graphical_quantifier_cross_check() {
        let instances: Vec<BuildingSet> = vec![
            graphical_building(&path(3)),
            graphical_building(&star(4)),
            BuildingSet::from_generators(VertexSet::range(3), &[vs(&[1, 2, 3])]).unwrap(),
            BuildingSet::from_generators(VertexSet::range(4), &[vs(&[1, 2, 3]), vs(&[3, 4])])
                .unwrap(),
            BuildingSet::from_blocks(VertexSet::range(3), &[vs(&[1]), vs(&[2]), vs(&[3])]).unwrap(),
        ];
        for b in &instances {
            assert_eq!(is_graphical(b), is_graphical_by_quantifier(b), "{b:?}");
        }
    }
}
