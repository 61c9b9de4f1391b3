//! Nested sets, their enumeration, roots, flips, exchange frames, and the
//! exchangeability criteria.
//!
//! A family of blocks is nested when it contains every connected component,
//! its members are pairwise nested or disjoint, and no union of two or more
//! pairwise disjoint members is a block. Maximal nested sets all have
//! exactly `|ground|` blocks and index the maximal cones of the nested fan;
//! two of them related by a flip exchange a single pair of blocks, and the
//! data of such an exchange is its frame `(B_out, B_in, P)` with pivots.

use std::collections::BTreeMap;

use crate::building::{elementary_blocks, maximal_strict_subblocks, BuildingSet};
use crate::error::Error;
use crate::vset::{Block, VertexSet};

/// A nested set of a building set, stored in canonical block order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct NestedSet {
    blocks: Vec<Block>,
}

/// The frame of an exchange: the leaving and entering blocks, the parent
/// (minimal common strict superblock in both nested sets), and one pivot
/// pair `(v, v')` with `v` in the leaving block and `v'` in the entering one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExchangeFrame {
    pub block_out: Block,
    pub block_in: Block,
    pub parent: Block,
    pub pivots: (u32, u32),
}

impl NestedSet {
    /// Validate and build. Errors on foreign blocks; `Ok(None)`-style
    /// signalling is avoided: a non-nested family is an error here, while
    /// the plain predicate below returns a boolean.
    pub fn new(b: &BuildingSet, blocks: &[Block]) -> Result<NestedSet, Error> {
        for &c in blocks {
            b.check_block(c)?;
        }
        let mut sorted = blocks.to_vec();
        sorted.sort();
        sorted.dedup();
        if let Some(reason) = nestedness_failure(b, &sorted) {
            return Err(Error::NotNested { reason });
        }
        Ok(NestedSet { blocks: sorted })
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

    pub fn contains(&self, c: Block) -> bool {
        self.blocks.binary_search(&c).is_ok()
    }

    /// Maximal nested sets have exactly `|ground|` blocks.
    pub fn is_maximal(&self, b: &BuildingSet) -> bool {
        self.blocks.len() == b.ground().len() as usize
    }

    fn check_maximal(&self, b: &BuildingSet) -> Result<(), Error> {
        if self.is_maximal(b) {
            Ok(())
        } else {
            Err(Error::NotMaximal {
                got: self.blocks.len(),
                expected: b.ground().len() as usize,
            })
        }
    }

    /// Blocks that are not components of `b`, i.e. the flippable ones.
    pub fn non_component_blocks(&self, b: &BuildingSet) -> Vec<Block> {
        self.blocks
            .iter()
            .copied()
            .filter(|&c| !b.is_component(c))
            .collect()
    }
}

/// Why a sorted, deduplicated family fails to be nested; `None` if it is.
fn nestedness_failure(b: &BuildingSet, sorted: &[Block]) -> Option<String> {
    for &k in b.components() {
        if sorted.binary_search(&k).is_err() {
            return Some(format!("missing connected component {k}"));
        }
    }
    for i in 0..sorted.len() {
        for j in (i + 1)..sorted.len() {
            let (x, y) = (sorted[i], sorted[j]);
            if x.intersects(y) && !x.is_subset(y) && !y.is_subset(x) {
                return Some(format!("blocks {x} and {y} overlap without nesting"));
            }
        }
    }
    // Unions of >= 2 pairwise disjoint members must not be blocks. Such a
    // union is strictly larger than every member, so it can never lie in the
    // family itself.
    fn scan(
        b: &BuildingSet,
        sorted: &[Block],
        start: usize,
        union: VertexSet,
        count: usize,
    ) -> Option<String> {
        if count >= 2 && b.contains(union) {
            return Some(format!("union {union} of disjoint members is a block"));
        }
        for j in start..sorted.len() {
            if sorted[j].is_disjoint(union) {
                if let Some(r) = scan(b, sorted, j + 1, union.union(sorted[j]), count + 1) {
                    return Some(r);
                }
            }
        }
        None
    }
    for i in 0..sorted.len() {
        if let Some(r) = scan(b, sorted, i + 1, sorted[i], 1) {
            return Some(r);
        }
    }
    None
}

/// The nestedness predicate on an arbitrary set of blocks of `b`.
pub fn is_nested_set(b: &BuildingSet, blocks: &[Block]) -> Result<bool, Error> {
    for &c in blocks {
        b.check_block(c)?;
    }
    let mut sorted = blocks.to_vec();
    sorted.sort();
    sorted.dedup();
    Ok(nestedness_failure(b, &sorted).is_none())
}

/// Whether a nested family stays nested after adding `new`. Assumes `sorted`
/// is already nested; only the conditions involving `new` are checked.
fn extends_nested(b: &BuildingSet, sorted: &[Block], new: Block) -> bool {
    for &c in sorted {
        if c.intersects(new) && !c.is_subset(new) && !new.is_subset(c) {
            return false;
        }
    }
    // New disjoint families must involve `new`.
    let disjoint: Vec<Block> = sorted
        .iter()
        .copied()
        .filter(|&c| c.is_disjoint(new))
        .collect();
    fn scan(b: &BuildingSet, pool: &[Block], start: usize, union: VertexSet) -> bool {
        if b.contains(union) {
            return false;
        }
        for j in start..pool.len() {
            if pool[j].is_disjoint(union) && !scan(b, pool, j + 1, union.union(pool[j])) {
                return false;
            }
        }
        true
    }
    for i in 0..disjoint.len() {
        if !scan(b, &disjoint, i + 1, new.union(disjoint[i])) {
            return false;
        }
    }
    true
}

/// All maximal nested sets, in canonical order. Depth-first search over the
/// non-component blocks in canonical order with incremental nestedness
/// pruning; the components are forced members and seed every branch.
pub fn enumerate_maximal_nested_sets(b: &BuildingSet) -> Vec<NestedSet> {
    let comps: Vec<Block> = b.components().to_vec();
    let free: Vec<Block> = b.non_component_blocks();
    let target = b.ground().len() as usize;
    let mut out: Vec<NestedSet> = Vec::new();
    let mut current: Vec<Block> = comps.clone();

    fn dfs(
        b: &BuildingSet,
        free: &[Block],
        start: usize,
        current: &mut Vec<Block>,
        target: usize,
        out: &mut Vec<NestedSet>,
    ) {
        if current.len() == target {
            let mut blocks = current.clone();
            blocks.sort();
            out.push(NestedSet { blocks });
            return;
        }
        let need = target - current.len();
        for i in start..free.len() {
            if free.len() - i < need {
                break;
            }
            if extends_nested(b, current, free[i]) {
                current.push(free[i]);
                dfs(b, free, i + 1, current, target, out);
                current.pop();
            }
        }
    }
    dfs(b, &free, 0, &mut current, target, &mut out);
    out.sort();
    out
}

/// Root of each block of `s`: the elements in no smaller block of `s`.
/// In a maximal nested set every root is a singleton.
pub fn roots(b: &BuildingSet, s: &NestedSet) -> BTreeMap<Block, VertexSet> {
    let _ = b;
    let mut out = BTreeMap::new();
    for &blk in s.blocks() {
        let mut root = blk;
        for &c in s.blocks() {
            if c.is_strict_subset(blk) {
                root = root.difference(c);
            }
        }
        out.insert(blk, root);
    }
    out
}

fn singleton_root(b: &BuildingSet, s: &NestedSet, blk: Block) -> Result<u32, Error> {
    let root = roots(b, s)
        .get(&blk)
        .copied()
        .ok_or_else(|| Error::InvariantViolation(format!("{blk} missing from nested set")))?;
    if root.len() == 1 {
        Ok(root.min().unwrap())
    } else {
        Err(Error::InvariantViolation(format!(
            "root of {blk} is {root}, expected a singleton in a maximal nested set"
        )))
    }
}

/// The parent of a flip at `blk`: the inclusion-minimal element of
/// `{C in s : blk strictly inside C}`, which is a chain.
fn parent_of(b: &BuildingSet, s: &NestedSet, blk: Block) -> Result<Block, Error> {
    let mut above: Vec<Block> = s
        .blocks()
        .iter()
        .copied()
        .filter(|&c| blk.is_strict_subset(c))
        .collect();
    above.sort();
    let _ = b;
    match above.first() {
        Some(&p) => {
            debug_assert!(above.iter().all(|&c| p.is_subset(c)), "upper set is a chain");
            Ok(p)
        }
        None => Err(Error::InvariantViolation(format!(
            "no block of the nested set strictly contains {blk}"
        ))),
    }
}

/// All flips of a maximal nested set: for each non-component block `B`, the
/// unique adjacent maximal nested set obtained by exchanging `B` for some
/// `B'`, together with the frame of the exchange. Exactly
/// `n - #components` flips.
pub fn flips(b: &BuildingSet, s: &NestedSet) -> Result<Vec<(ExchangeFrame, NestedSet)>, Error> {
    s.check_maximal(b)?;
    let mut out = Vec::new();
    for blk in s.non_component_blocks(b) {
        let rest: Vec<Block> = s.blocks().iter().copied().filter(|&c| c != blk).collect();
        let mut entering: Vec<Block> = Vec::new();
        for &cand in b.blocks() {
            if cand != blk && !s.contains(cand) && extends_nested(b, &rest, cand) {
                entering.push(cand);
            }
        }
        if entering.len() != 1 {
            return Err(Error::InvariantViolation(format!(
                "flip at {blk} admits {} replacements, expected exactly one",
                entering.len()
            )));
        }
        let block_in = entering[0];
        let mut blocks = rest;
        blocks.push(block_in);
        blocks.sort();
        let adjacent = NestedSet { blocks };

        let parent = parent_of(b, s, blk)?;
        debug_assert_eq!(parent, parent_of(b, &adjacent, block_in)?);
        let v = singleton_root(b, &adjacent, parent)?;
        let vp = singleton_root(b, s, parent)?;
        out.push((
            ExchangeFrame {
                block_out: blk,
                block_in,
                parent,
                pivots: (v, vp),
            },
            adjacent,
        ));
    }
    Ok(out)
}

/// All witnesses `(P, v, v')` certifying that `x` and `y` are exchangeable:
/// `P` a block strictly containing both, `v in x \ y`, `v' in y \ x`, such
/// that every elementary block inside `P` that meets `x` without sitting
/// inside it contains `v'`, and symmetrically. Empty iff not exchangeable.
pub fn exchange_witnesses(
    b: &BuildingSet,
    x: Block,
    y: Block,
) -> Result<Vec<(Block, u32, u32)>, Error> {
    b.check_block(x)?;
    b.check_block(y)?;
    if x == y {
        return Err(Error::BlocksNotDistinct);
    }
    let elem = elementary_blocks(b);
    let mut out = Vec::new();
    for &p in b.blocks() {
        if !(x.is_strict_subset(p) && y.is_strict_subset(p)) {
            continue;
        }
        let mut v_allowed = x.difference(y);
        let mut vp_allowed = y.difference(x);
        for &c in &elem {
            if c.is_subset(p) {
                if c.intersects(x) && !c.is_subset(x) {
                    vp_allowed = vp_allowed.intersection(c);
                }
                if c.intersects(y) && !c.is_subset(y) {
                    v_allowed = v_allowed.intersection(c);
                }
            }
        }
        for v in v_allowed.iter() {
            for vp in vp_allowed.iter() {
                out.push((p, v, vp));
            }
        }
    }
    Ok(out)
}

/// Whether a frame (with its pivot pair) satisfies the exchange criterion.
pub fn is_valid_frame(b: &BuildingSet, f: &ExchangeFrame) -> Result<(), Error> {
    b.check_block(f.block_out)?;
    b.check_block(f.block_in)?;
    b.check_block(f.parent)?;
    let (v, vp) = f.pivots;
    if !(f.block_out.is_strict_subset(f.parent) && f.block_in.is_strict_subset(f.parent)) {
        return Err(Error::InvalidFrame {
            reason: format!("{} and {} must lie strictly inside {}", f.block_out, f.block_in, f.parent),
        });
    }
    if !(f.block_out.difference(f.block_in).contains(v)
        && f.block_in.difference(f.block_out).contains(vp))
    {
        return Err(Error::InvalidFrame {
            reason: format!("pivots ({v},{vp}) not split by the exchanged blocks"),
        });
    }
    let witnesses = exchange_witnesses(b, f.block_out, f.block_in)?;
    if witnesses.contains(&(f.parent, v, vp)) {
        Ok(())
    } else {
        Err(Error::InvalidFrame {
            reason: format!(
                "({}, {}, {}) with pivots ({v},{vp}) fails the exchange criterion",
                f.block_out, f.block_in, f.parent
            ),
        })
    }
}

/// The maximal exchange frames: `(B, B', P)` for every non-singleton block
/// `P` and every pair `B != B'` of maximal blocks strictly inside `P`.
/// Pivots are the lexicographically smallest valid choice.
pub fn maximal_exchange_frames(b: &BuildingSet) -> Vec<ExchangeFrame> {
    let mut out = Vec::new();
    for &p in b.blocks() {
        if p.len() <= 1 {
            continue;
        }
        let mu = maximal_strict_subblocks(b, p).expect("p is a block");
        for i in 0..mu.len() {
            for j in (i + 1)..mu.len() {
                let (x, y) = (mu[i], mu[j]);
                let v = x.difference(y).min().expect("maximal blocks are incomparable");
                let vp = y.difference(x).min().expect("maximal blocks are incomparable");
                out.push(ExchangeFrame {
                    block_out: x,
                    block_in: y,
                    parent: p,
                    pivots: (v, vp),
                });
            }
        }
    }
    out
}
