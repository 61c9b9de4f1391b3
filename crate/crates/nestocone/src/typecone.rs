//! Wall-crossing inequalities, redundant and irredundant type-cone
//! descriptions, facet counts, simpliciality, classical heights, and the
//! interval specialization.
//!
//! Heights live in the block-indexed space with the connected components
//! pinned to zero; inequality normals are integer vectors over the
//! non-component blocks in canonical form (component coordinates deleted,
//! gcd one, ">0" orientation kept). The exchange relation holds exactly at
//! the level of characteristic vectors, so everything stays integral.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::building::{
    components_of, elementary_blocks, maximal_strict_subblocks, BuildingSet,
};
use crate::error::Error;
use crate::graph::{graphical_maximal_pairs, Graph};
use crate::linalg::Rat;
use crate::nested::{
    enumerate_maximal_nested_sets, flips, is_valid_frame, maximal_exchange_frames, ExchangeFrame,
};
use crate::vset::{Block, VertexSet};

/// Characteristic vector of a block over the ground labels of its building.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GVector {
    pub labels: Vec<u32>,
    pub coords: Vec<i64>,
}

/// One strict inequality `<coeffs, h> > 0` over the non-component blocks.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Inequality {
    coeffs: BTreeMap<Block, i64>,
}

impl Inequality {
    /// Canonical form: drop component coordinates and zeros, reduce by the
    /// gcd, keep orientation.
    pub fn new(raw: BTreeMap<Block, i64>, components: &[Block]) -> Result<Inequality, Error> {
        Inequality::canonicalize(raw, components)
    }

    fn canonicalize(raw: BTreeMap<Block, i64>, components: &[Block]) -> Result<Inequality, Error> {
        let mut coeffs: BTreeMap<Block, i64> = raw
            .into_iter()
            .filter(|(b, c)| *c != 0 && components.binary_search(b).is_err())
            .collect();
        if coeffs.is_empty() {
            return Err(Error::InvariantViolation(
                "inequality vanished after deleting component coordinates".into(),
            ));
        }
        let mut g: i64 = 0;
        for c in coeffs.values() {
            g = num_integer::gcd(g, c.abs());
        }
        if g > 1 {
            for c in coeffs.values_mut() {
                *c /= g;
            }
        }
        Ok(Inequality { coeffs })
    }

    pub fn coeffs(&self) -> &BTreeMap<Block, i64> {
        &self.coeffs
    }

    pub fn coeff(&self, b: Block) -> i64 {
        self.coeffs.get(&b).copied().unwrap_or(0)
    }

    pub fn eval(&self, h: &HeightVector) -> Rat {
        let mut acc = Rat::zero();
        for (b, c) in &self.coeffs {
            acc += Rat::from_integer(BigInt::from(*c)) * h.value(*b);
        }
        acc
    }

    /// Dense coefficient row over the given block order.
    pub fn dense_row(&self, blocks: &[Block]) -> Vec<i64> {
        blocks.iter().map(|&b| self.coeff(b)).collect()
    }
}

/// A type-cone description: component coordinates pinned to zero plus a
/// canonical set of strict inequalities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeDescription {
    ground: VertexSet,
    blocks: Vec<Block>,
    equalities: Vec<Block>,
    inequalities: Vec<Inequality>,
}

impl ConeDescription {
    pub(crate) fn from_normals(b: &BuildingSet, normals: BTreeSet<Inequality>) -> ConeDescription {
        ConeDescription::new(b, normals)
    }

    fn new(b: &BuildingSet, normals: BTreeSet<Inequality>) -> ConeDescription {
        ConeDescription {
            ground: b.ground(),
            blocks: b.blocks().to_vec(),
            equalities: b.components().to_vec(),
            inequalities: normals.into_iter().collect(),
        }
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn equalities(&self) -> &[Block] {
        &self.equalities
    }

    pub fn inequalities(&self) -> &[Inequality] {
        &self.inequalities
    }

    /// Non-component blocks, the coordinates of the inequality space.
    pub fn ray_blocks(&self) -> Vec<Block> {
        self.blocks
            .iter()
            .copied()
            .filter(|b| self.equalities.binary_search(b).is_err())
            .collect()
    }

    pub fn with_inequalities(&self, inequalities: Vec<Inequality>) -> ConeDescription {
        let set: BTreeSet<Inequality> = inequalities.into_iter().collect();
        ConeDescription {
            ground: self.ground,
            blocks: self.blocks.clone(),
            equalities: self.equalities.clone(),
            inequalities: set.into_iter().collect(),
        }
    }
}

/// Height vector: one rational per block, zero on every component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightVector {
    values: BTreeMap<Block, Rat>,
}

impl HeightVector {
    /// Validate against a building set: keys must be exactly the blocks and
    /// the component values must vanish.
    pub fn new(b: &BuildingSet, values: BTreeMap<Block, Rat>) -> Result<HeightVector, Error> {
        if values.len() != b.len() || !b.blocks().iter().all(|blk| values.contains_key(blk)) {
            return Err(Error::HeightMismatch {
                reason: "height keys must be exactly the blocks of the building set".into(),
            });
        }
        for &k in b.components() {
            if !values[&k].is_zero() {
                return Err(Error::HeightMismatch {
                    reason: format!("component {k} must have height 0, got {}", values[&k]),
                });
            }
        }
        Ok(HeightVector { values })
    }

    pub fn value(&self, b: Block) -> Rat {
        self.values.get(&b).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn values(&self) -> &BTreeMap<Block, Rat> {
        &self.values
    }
}

/// The classical height functions realizing the nestohedron.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeightVariant {
    /// `h_B = -3^|B|`, the facet-truncation construction.
    Devadoss,
    /// `h_B = -#{blocks inside B}`, the Minkowski-sum construction.
    Postnikov,
}

/// Position of a height vector relative to the type cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Interior,
    Boundary,
    Outside,
}

/// Characteristic vector of a block.
pub fn g_vector(b: &BuildingSet, x: Block) -> Result<GVector, Error> {
    b.check_block(x)?;
    let labels = b.ground().to_vec();
    let coords = labels
        .iter()
        .map(|&v| if x.contains(v) { 1 } else { 0 })
        .collect();
    Ok(GVector { labels, coords })
}

fn wall_normal_raw(b: &BuildingSet, f: &ExchangeFrame) -> Result<BTreeMap<Block, i64>, Error> {
    let mut coeffs: BTreeMap<Block, i64> = BTreeMap::new();
    let add = |blk: Block, c: i64, coeffs: &mut BTreeMap<Block, i64>| {
        *coeffs.entry(blk).or_insert(0) += c;
    };
    add(f.block_out, 1, &mut coeffs);
    add(f.block_in, 1, &mut coeffs);
    let union = f.block_out.union(f.block_in);
    for k in components_of(b, f.parent.difference(union))? {
        add(k, 1, &mut coeffs);
    }
    add(f.parent, -1, &mut coeffs);
    for k in components_of(b, f.block_out.intersection(f.block_in))? {
        add(k, -1, &mut coeffs);
    }
    Ok(coeffs)
}

/// The wall-crossing inequality of an exchange frame, in canonical form.
pub fn wall_inequality(b: &BuildingSet, f: &ExchangeFrame) -> Result<Inequality, Error> {
    is_valid_frame(b, f)?;
    Inequality::canonicalize(wall_normal_raw(b, f)?, b.components())
}

/// The possibly-redundant type-cone description: component heights pinned
/// to zero, one wall inequality per flip of every maximal nested set,
/// deduplicated canonically.
pub fn redundant_cone(b: &BuildingSet) -> ConeDescription {
    let mut normals: BTreeSet<Inequality> = BTreeSet::new();
    for s in enumerate_maximal_nested_sets(b) {
        for (frame, _) in flips(b, &s).expect("enumerated nested sets are maximal") {
            let raw = wall_normal_raw(b, &frame).expect("flip frames are valid");
            normals.insert(
                Inequality::canonicalize(raw, b.components()).expect("wall normals are non-zero"),
            );
        }
    }
    ConeDescription::new(b, normals)
}

/// The irredundant facet description: one inequality
/// `sum_{B in mu(P)} h_B > h_P` per elementary block `P`, and one wall
/// inequality per pair of maximal strict subblocks of every non-elementary
/// non-singleton block.
pub fn facet_cone(b: &BuildingSet) -> ConeDescription {
    let elem = elementary_blocks(b);
    let mut normals: BTreeSet<Inequality> = BTreeSet::new();
    for &p in b.blocks() {
        if p.len() <= 1 {
            continue;
        }
        let mu = maximal_strict_subblocks(b, p).expect("p is a block");
        if elem.binary_search(&p).is_ok() {
            let mut coeffs: BTreeMap<Block, i64> = BTreeMap::new();
            for &m in &mu {
                *coeffs.entry(m).or_insert(0) += 1;
            }
            *coeffs.entry(p).or_insert(0) += -1;
            normals.insert(
                Inequality::canonicalize(coeffs, b.components())
                    .expect("elementary facet normals are non-zero"),
            );
        } else {
            for i in 0..mu.len() {
                for j in (i + 1)..mu.len() {
                    let frame = ExchangeFrame {
                        block_out: mu[i],
                        block_in: mu[j],
                        parent: p,
                        pivots: (0, 0), // unused by the normal
                    };
                    let raw = wall_normal_raw(b, &frame).expect("mu members are blocks");
                    normals.insert(
                        Inequality::canonicalize(raw, b.components())
                            .expect("wall normals are non-zero"),
                    );
                }
            }
        }
    }
    ConeDescription::new(b, normals)
}

/// The graphical facet description: one inequality per tube and pair of
/// distinct non-disconnecting vertices. Must agree with `facet_cone` on the
/// tube building of the same graph.
pub fn graphical_facet_cone(g: &Graph) -> ConeDescription {
    let b = crate::building::graphical_building(g);
    let mut normals: BTreeSet<Inequality> = BTreeSet::new();
    for (t1, t2, s) in graphical_maximal_pairs(g) {
        let mut coeffs: BTreeMap<Block, i64> = BTreeMap::new();
        *coeffs.entry(t1).or_insert(0) += 1;
        *coeffs.entry(t2).or_insert(0) += 1;
        *coeffs.entry(s).or_insert(0) += -1;
        for k in components_of(&b, t1.intersection(t2)).expect("subset of ground") {
            *coeffs.entry(k).or_insert(0) += -1;
        }
        normals.insert(
            Inequality::canonicalize(coeffs, b.components()).expect("non-zero normal"),
        );
    }
    ConeDescription::new(&b, normals)
}

/// Closed-form facet count: `#elementary + sum_P binom(|mu(P)|, 2)` over
/// the non-singleton non-elementary blocks.
pub fn facet_count(b: &BuildingSet) -> u64 {
    let elem = elementary_blocks(b);
    let mut count = elem.len() as u64;
    for &p in b.blocks() {
        if p.len() <= 1 || elem.binary_search(&p).is_ok() {
            continue;
        }
        let mu = maximal_strict_subblocks(b, p).expect("p is a block").len() as u64;
        count += mu * (mu - 1) / 2;
    }
    count
}

/// Simplicial type cone: every block with three or more maximal strict
/// subblocks is elementary. Equivalent to `facet_count == #blocks - #ground`.
pub fn is_simplicial(b: &BuildingSet) -> bool {
    let elem = elementary_blocks(b);
    for &p in b.blocks() {
        if p.len() <= 1 || elem.binary_search(&p).is_ok() {
            continue;
        }
        if maximal_strict_subblocks(b, p).expect("p is a block").len() >= 3 {
            return false;
        }
    }
    true
}

/// The stated height before the normalizing shift.
pub fn classic_height_raw(b: &BuildingSet, variant: HeightVariant) -> BTreeMap<Block, Rat> {
    b.blocks()
        .iter()
        .map(|&blk| {
            let v = match variant {
                HeightVariant::Devadoss => -BigInt::from(3).pow(blk.len()),
                HeightVariant::Postnikov => {
                    let inside = b.blocks().iter().filter(|c| c.is_subset(blk)).count();
                    -BigInt::from(inside)
                }
            };
            (blk, Rat::from_integer(v))
        })
        .collect()
}

/// A classical interior height, shifted along the lineality space so that
/// every component height is zero. The shift moves each vertex by
/// `-h_K / |K|` for its component `K`, which leaves every wall-crossing
/// evaluation unchanged.
pub fn classic_height(b: &BuildingSet, variant: HeightVariant) -> HeightVector {
    let raw = classic_height_raw(b, variant);
    let mut shift: BTreeMap<u32, Rat> = BTreeMap::new();
    for &k in b.components() {
        let per_vertex = -&raw[&k] / Rat::from_integer(BigInt::from(k.len()));
        for v in k.iter() {
            shift.insert(v, per_vertex.clone());
        }
    }
    let values: BTreeMap<Block, Rat> = raw
        .into_iter()
        .map(|(blk, h)| {
            let s = blk.iter().fold(Rat::zero(), |acc, v| acc + &shift[&v]);
            (blk, h + s)
        })
        .collect();
    HeightVector::new(b, values).expect("shifted heights vanish on components")
}

/// Classify a height vector against the facet description of the type cone.
pub fn height_membership(b: &BuildingSet, h: &HeightVector) -> Result<Membership, Error> {
    HeightVector::new(b, h.values().clone())?;
    let cone = facet_cone(b);
    let mut boundary = false;
    for ineq in cone.inequalities() {
        let v = ineq.eval(h);
        if v.is_negative() {
            return Ok(Membership::Outside);
        }
        if v.is_zero() {
            boundary = true;
        }
    }
    Ok(if boundary {
        Membership::Boundary
    } else {
        Membership::Interior
    })
}

/// Per-block data of the interval specialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalEntry {
    pub block: Block,
    /// Smallest `k > i` with `[k, j]` a block.
    pub left: u32,
    /// Largest `k < j` with `[i, k]` a block.
    pub right: u32,
    pub kind: IntervalKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntervalKind {
    /// `right < left`: the maximal strict subblocks tile the interval at
    /// these cut points.
    Elementary { cuts: Vec<u32> },
    /// `left <= right`: the two maximal strict subblocks overlap in
    /// `[left, right]`, whose components these cut points tile.
    Composite { cuts: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalProfile {
    pub entries: Vec<IntervalEntry>,
    pub cone: ConeDescription,
}

fn interval_of(b: Block) -> (u32, u32) {
    (b.min().unwrap(), b.max().unwrap())
}

fn interval_block(i: u32, j: u32) -> Block {
    VertexSet::from_labels(i..=j).expect("labels in range")
}

/// The interval-building specialization: per non-singleton block, the
/// boundary indices and the tiling sequence, plus the facet inequalities
/// they induce. Equals `facet_cone` on every interval building set.
pub fn interval_profile(b: &BuildingSet) -> Result<IntervalProfile, Error> {
    let n = b.ground().len();
    if b.ground() != VertexSet::range(n) {
        return Err(Error::BadInput(
            "interval building sets live on a contiguous ground set {1..n}".into(),
        ));
    }
    for &blk in b.blocks() {
        if !blk.is_interval() {
            return Err(Error::NotInterval(blk));
        }
    }
    // max{k in [a, hi]: [a,k] in B}; well-defined since singletons are blocks.
    let reach = |a: u32, hi: u32| -> u32 {
        (a..=hi)
            .rev()
            .find(|&k| b.contains(interval_block(a, k)))
            .expect("singleton [a,a] is a block")
    };
    let mut entries = Vec::new();
    let mut normals: BTreeSet<Inequality> = BTreeSet::new();
    for &blk in b.blocks() {
        if blk.len() <= 1 {
            continue;
        }
        let (i, j) = interval_of(blk);
        let left = (i + 1..=j)
            .find(|&k| b.contains(interval_block(k, j)))
            .expect("singleton [j,j] is a block");
        let right = reach(i, j - 1);
        let mut coeffs: BTreeMap<Block, i64> = BTreeMap::new();
        let kind = if right < left {
            // Elementary: consecutive maximal strict subblocks tile [i, j].
            let mut cuts = vec![i, right + 1];
            while *cuts.last().unwrap() != j + 1 {
                let a = *cuts.last().unwrap();
                cuts.push(reach(a, j) + 1);
            }
            for w in cuts.windows(2) {
                *coeffs.entry(interval_block(w[0], w[1] - 1)).or_insert(0) += 1;
            }
            *coeffs.entry(blk).or_insert(0) += -1;
            IntervalKind::Elementary { cuts }
        } else {
            // The two maximal strict subblocks [i, right] and [left, j]
            // overlap in [left, right]; its components tile by the cuts.
            let mut cuts = vec![left];
            while *cuts.last().unwrap() != right + 1 {
                let a = *cuts.last().unwrap();
                cuts.push(reach(a, right) + 1);
            }
            *coeffs.entry(interval_block(i, right)).or_insert(0) += 1;
            *coeffs.entry(interval_block(left, j)).or_insert(0) += 1;
            *coeffs.entry(blk).or_insert(0) += -1;
            for w in cuts.windows(2) {
                *coeffs.entry(interval_block(w[0], w[1] - 1)).or_insert(0) += -1;
            }
            IntervalKind::Composite { cuts }
        };
        normals.insert(
            Inequality::canonicalize(coeffs, b.components()).expect("non-zero interval normal"),
        );
        entries.push(IntervalEntry {
            block: blk,
            left,
            right,
            kind,
        });
    }
    Ok(IntervalProfile {
        entries,
        cone: ConeDescription::new(b, normals),
    })
}

/// All maximal exchange frames together with their wall inequalities;
/// convenience used by tests and the CLI.
pub fn maximal_frame_inequalities(b: &BuildingSet) -> Vec<(ExchangeFrame, Inequality)> {
    maximal_exchange_frames(b)
        .into_iter()
        .map(|f| {
            let raw = wall_normal_raw(b, &f).expect("frame blocks are blocks");
            let ineq = Inequality::canonicalize(raw, b.components()).expect("non-zero");
            (f, ineq)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::graphical_building;
    use crate::building::BuildingSet;
    use crate::testutil::{complete, cycle, nine_block_building, path, star, vs};

    fn ineq(b: &BuildingSet, entries: &[(&[u32], i64)]) -> Inequality {
        let raw: BTreeMap<Block, i64> = entries
            .iter()
            .map(|(labels, c)| (vs(labels), *c))
            .collect();
        Inequality::canonicalize(raw, b.components()).unwrap()
    }

    #[test]
    fn g_vector_is_characteristic() {
        let b = nine_block_building();
        let g = g_vector(&b, vs(&[1, 4])).unwrap();
        assert_eq!(g.coords, vec![1, 0, 0, 1, 0, 0, 0, 0, 0]);
        let p = graphical_building(&path(3));
        assert_eq!(g_vector(&p, vs(&[1, 2])).unwrap().coords, vec![1, 1, 0]);
        // A component's characteristic vector sums to |K|; its projection
        // to the fan's ambient space is zero, which the cone machinery
        // realizes by pinning the component coordinate.
        let k = vs(&[7, 8, 9]);
        let gk = g_vector(&b, k).unwrap();
        assert_eq!(gk.coords.iter().sum::<i64>(), 3);
        assert!(matches!(g_vector(&b, vs(&[1, 2])), Err(Error::NotABlock(_))));
    }

    #[test]
    fn wall_inequalities_of_worked_example() {
        let b = nine_block_building();
        let f = ExchangeFrame {
            block_out: vs(&[1, 4]),
            block_in: vs(&[2, 5]),
            parent: vs(&[1, 2, 3, 4, 5]),
            pivots: (1, 2),
        };
        let got = wall_inequality(&b, &f).unwrap();
        assert_eq!(
            got,
            ineq(
                &b,
                &[(&[1, 4], 1), (&[2, 5], 1), (&[3], 1), (&[1, 2, 3, 4, 5], -1)]
            )
        );
        let f2 = ExchangeFrame {
            block_out: vs(&[1, 4]),
            block_in: vs(&[2, 5]),
            parent: vs(&[1, 2, 4, 5, 6]),
            pivots: (4, 5),
        };
        let got2 = wall_inequality(&b, &f2).unwrap();
        assert_eq!(
            got2,
            ineq(
                &b,
                &[(&[1, 4], 1), (&[2, 5], 1), (&[6], 1), (&[1, 2, 4, 5, 6], -1)]
            )
        );
    }

    #[test]
    fn wall_inequality_drops_component_parent() {
        let b = graphical_building(&path(3));
        let f = ExchangeFrame {
            block_out: vs(&[1, 2]),
            block_in: vs(&[2, 3]),
            parent: vs(&[1, 2, 3]),
            pivots: (1, 3),
        };
        let got = wall_inequality(&b, &f).unwrap();
        assert_eq!(got, ineq(&b, &[(&[1, 2], 1), (&[2, 3], 1), (&[2], -1)]));
    }

    #[test]
    fn invalid_frame_rejected() {
        let b = graphical_building(&path(3));
        let f = ExchangeFrame {
            block_out: vs(&[1]),
            block_in: vs(&[1, 2]),
            parent: vs(&[1, 2, 3]),
            pivots: (1, 2),
        };
        assert!(matches!(
            wall_inequality(&b, &f),
            Err(Error::InvalidFrame { .. })
        ));
    }

    #[test]
    fn redundant_cone_path3_has_five_walls() {
        // One wall per edge of the pentagon; no two flips share a normal.
        let b = graphical_building(&path(3));
        let cone = redundant_cone(&b);
        assert_eq!(cone.equalities(), &[vs(&[1, 2, 3])]);
        let expected: BTreeSet<Inequality> = [
            ineq(&b, &[(&[1], 1), (&[2], 1), (&[1, 2], -1)]),
            ineq(&b, &[(&[2], 1), (&[3], 1), (&[2, 3], -1)]),
            ineq(&b, &[(&[1, 2], 1), (&[2, 3], 1), (&[2], -1)]),
            ineq(&b, &[(&[1], 1), (&[2, 3], 1)]),
            ineq(&b, &[(&[3], 1), (&[1, 2], 1)]),
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<Inequality> = cone.inequalities().iter().cloned().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn redundant_cone_k3_has_six_walls() {
        let b = graphical_building(&complete(3));
        assert_eq!(redundant_cone(&b).inequalities().len(), 6);
    }

    #[test]
    fn redundant_cone_singletons_empty() {
        let b =
            BuildingSet::from_blocks(VertexSet::range(2), &[vs(&[1]), vs(&[2])]).unwrap();
        let cone = redundant_cone(&b);
        assert!(cone.inequalities().is_empty());
        assert_eq!(cone.equalities().len(), 2);
    }

    #[test]
    fn facet_cone_path3() {
        let b = graphical_building(&path(3));
        let expected: BTreeSet<Inequality> = [
            ineq(&b, &[(&[1], 1), (&[2], 1), (&[1, 2], -1)]),
            ineq(&b, &[(&[2], 1), (&[3], 1), (&[2, 3], -1)]),
            ineq(&b, &[(&[1, 2], 1), (&[2, 3], 1), (&[2], -1)]),
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<Inequality> = facet_cone(&b).inequalities().iter().cloned().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn facet_cone_worked_example() {
        let b = nine_block_building();
        let cone = facet_cone(&b);
        assert_eq!(cone.inequalities().len(), 12);
        // The component-parent facet with both big subblocks.
        assert!(cone.inequalities().contains(&ineq(
            &b,
            &[
                (&[1, 2, 3, 4, 5], 1),
                (&[1, 2, 4, 5, 6], 1),
                (&[1, 4], -1),
                (&[2, 5], -1)
            ]
        )));
        // The elementary facet at 123.
        assert!(cone.inequalities().contains(&ineq(
            &b,
            &[(&[1], 1), (&[2], 1), (&[3], 1), (&[1, 2, 3], -1)]
        )));
    }

    #[test]
    fn facet_cone_subset_of_redundant_and_counts() {
        for b in [
            graphical_building(&path(4)),
            graphical_building(&complete(4)),
            graphical_building(&cycle(4)),
            graphical_building(&star(4)),
            nine_block_building(),
        ] {
            let facets: BTreeSet<Inequality> =
                facet_cone(&b).inequalities().iter().cloned().collect();
            let walls: BTreeSet<Inequality> =
                redundant_cone(&b).inequalities().iter().cloned().collect();
            assert!(facets.is_subset(&walls));
            assert_eq!(facets.len() as u64, facet_count(&b));
        }
    }

    #[test]
    fn facet_counts_families_n4() {
        assert_eq!(facet_count(&graphical_building(&complete(4))), 24);
        assert_eq!(facet_count(&graphical_building(&cycle(4))), 14);
        assert_eq!(facet_count(&graphical_building(&star(4))), 9);
        assert_eq!(facet_count(&graphical_building(&path(4))), 6);
    }

    #[test]
    fn graphical_route_agrees() {
        for g in [path(4), complete(4), cycle(5), star(5)] {
            let b = graphical_building(&g);
            assert_eq!(graphical_facet_cone(&g), facet_cone(&b));
        }
    }

    #[test]
    fn mutualization_of_elementary_frames() {
        let b = nine_block_building();
        let mut per_parent: BTreeMap<Block, BTreeSet<Inequality>> = BTreeMap::new();
        for (f, ineq) in maximal_frame_inequalities(&b) {
            per_parent.entry(f.parent).or_default().insert(ineq);
        }
        let elem = elementary_blocks(&b);
        for (parent, normals) in per_parent {
            let mu = maximal_strict_subblocks(&b, parent).unwrap().len();
            if elem.binary_search(&parent).is_ok() {
                assert_eq!(normals.len(), 1, "elementary parent {parent} mutualizes");
            } else {
                assert_eq!(
                    normals.len(),
                    mu * (mu - 1) / 2,
                    "distinct pairs under {parent} give distinct normals"
                );
            }
        }
    }

    #[test]
    fn simpliciality_examples() {
        assert!(is_simplicial(&graphical_building(&path(4))));
        assert!(!is_simplicial(&graphical_building(&complete(3))));
        let b = nine_block_building();
        assert!(is_simplicial(&b));
        // Simplicial iff facet count equals #blocks - #ground.
        assert_eq!(facet_count(&b), (b.len() - 9) as u64);
    }

    #[test]
    fn classic_height_raw_values() {
        let b = graphical_building(&path(3));
        let post = classic_height_raw(&b, HeightVariant::Postnikov);
        assert_eq!(post[&vs(&[1, 2])], crate::linalg::rat_int(-3));
        let dev = classic_height_raw(&b, HeightVariant::Devadoss);
        assert_eq!(dev[&vs(&[1, 2])], crate::linalg::rat_int(-9));
        assert_eq!(dev[&vs(&[1])], crate::linalg::rat_int(-3));
        assert_eq!(post[&vs(&[1])], crate::linalg::rat_int(-1));
    }

    #[test]
    fn classic_heights_are_interior() {
        for b in [
            graphical_building(&path(4)),
            graphical_building(&complete(4)),
            graphical_building(&cycle(5)),
            nine_block_building(),
        ] {
            for variant in [HeightVariant::Devadoss, HeightVariant::Postnikov] {
                let h = classic_height(&b, variant);
                assert_eq!(height_membership(&b, &h).unwrap(), Membership::Interior);
            }
        }
    }

    #[test]
    fn membership_boundary_and_outside() {
        let b = graphical_building(&path(3));
        let zero: BTreeMap<Block, Rat> = b
            .blocks()
            .iter()
            .map(|&blk| (blk, Rat::zero()))
            .collect();
        let h0 = HeightVector::new(&b, zero).unwrap();
        assert_eq!(height_membership(&b, &h0).unwrap(), Membership::Boundary);

        let mut vals: BTreeMap<Block, Rat> = b
            .blocks()
            .iter()
            .map(|&blk| (blk, Rat::zero()))
            .collect();
        vals.insert(vs(&[1, 2]), crate::linalg::rat_int(1));
        let h = HeightVector::new(&b, vals).unwrap();
        assert_eq!(height_membership(&b, &h).unwrap(), Membership::Outside);
    }

    #[test]
    fn height_validation() {
        let b = graphical_building(&path(3));
        let mut vals: BTreeMap<Block, Rat> = b
            .blocks()
            .iter()
            .map(|&blk| (blk, Rat::zero()))
            .collect();
        vals.insert(vs(&[1, 2, 3]), crate::linalg::rat_int(5));
        assert!(matches!(
            HeightVector::new(&b, vals),
            Err(Error::HeightMismatch { .. })
        ));
    }

    #[test]
    fn interval_profile_all_intervals() {
        let b = graphical_building(&path(4));
        let profile = interval_profile(&b).unwrap();
        assert_eq!(profile.cone, facet_cone(&b));
        for e in &profile.entries {
            let (i, j) = interval_of(e.block);
            assert_eq!(e.left, i + 1);
            assert_eq!(e.right, j - 1);
            // Edges have right < left and degenerate to the elementary
            // tiling; longer intervals overlap in [i+1, j-1].
            if j - i >= 2 {
                assert!(matches!(e.kind, IntervalKind::Composite { .. }));
            } else {
                assert!(matches!(e.kind, IntervalKind::Elementary { .. }));
            }
        }
    }

    /// Pitman-Stanley building: singletons plus all initial intervals.
    fn pitman_stanley(n: u32) -> BuildingSet {
        let mut blocks: Vec<Block> = (1..=n).map(VertexSet::singleton).collect();
        for j in 2..=n {
            blocks.push(interval_block(1, j));
        }
        BuildingSet::from_blocks(VertexSet::range(n), &blocks).unwrap()
    }

    #[test]
    fn interval_profile_pitman_stanley() {
        let b = pitman_stanley(3);
        let profile = interval_profile(&b).unwrap();
        assert_eq!(profile.cone, facet_cone(&b));
        let expected: BTreeSet<Inequality> = [
            ineq(&b, &[(&[1], 1), (&[2], 1), (&[1, 2], -1)]),
            ineq(&b, &[(&[1, 2], 1), (&[3], 1), (&[1, 2, 3], -1)]),
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<Inequality> = profile.cone.inequalities().iter().cloned().collect();
        assert_eq!(got, expected);
        for e in &profile.entries {
            assert!(matches!(e.kind, IntervalKind::Elementary { .. }));
        }
    }

    #[test]
    fn interval_profile_rejects_non_intervals() {
        let b = graphical_building(&complete(3));
        assert!(matches!(
            interval_profile(&b),
            Err(Error::NotInterval(blk)) if blk == vs(&[1, 3])
        ));
    }

    #[test]
    fn characteristic_identity_for_flips() {
        // chi_B + chi_B' + sum chi_K(P minus union) = chi_P + sum chi_K(meet)
        let b = nine_block_building();
        for s in enumerate_maximal_nested_sets(&b).into_iter().take(12) {
            for (f, _) in flips(&b, &s).unwrap() {
                let n9 = b.ground().len() as usize;
                let mut lhs = vec![0i64; n9];
                let mut rhs = vec![0i64; n9];
                let add = |vsx: Block, target: &mut Vec<i64>| {
                    for v in vsx.iter() {
                        target[(v - 1) as usize] += 1;
                    }
                };
                add(f.block_out, &mut lhs);
                add(f.block_in, &mut lhs);
                let union = f.block_out.union(f.block_in);
                for k in components_of(&b, f.parent.difference(union)).unwrap() {
                    add(k, &mut lhs);
                }
                add(f.parent, &mut rhs);
                for k in components_of(&b, f.block_out.intersection(f.block_in)).unwrap() {
                    add(k, &mut rhs);
                }
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn interval_buildings_are_simplicial() {
        for b in [
            pitman_stanley(5),
            graphical_building(&path(5)),
            {
                // Freehedron-style: singletons, initial and final intervals.
                let n = 5;
                let mut blocks: Vec<Block> = (1..=n).map(VertexSet::singleton).collect();
                for j in 2..=n {
                    blocks.push(interval_block(1, j));
                }
                for i in 2..n {
                    blocks.push(interval_block(i, n));
                }
                BuildingSet::from_blocks(VertexSet::range(n), &blocks).unwrap()
            },
        ] {
            assert!(is_simplicial(&b));
            assert_eq!(interval_profile(&b).unwrap().cone, facet_cone(&b));
        }
    }
}
