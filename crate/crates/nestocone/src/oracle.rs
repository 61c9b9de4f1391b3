//! Independent brute-force verification: wall-crossing inequalities from
//! exact nullspaces of projected characteristic vectors, redundancy
//! elimination by an exact LP feasibility test, canonical cone comparison,
//! and a support-function count of Minkowski-sum vertices.
//!
//! Nothing here reuses the combinatorial formulas of the typecone module;
//! the two paths meet only at the canonical `Inequality` form, which is the
//! point of the cross-validation.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::building::BuildingSet;
use crate::error::Error;
use crate::linalg::{feasible, nullspace_of_columns, Rat};
use crate::nested::{enumerate_maximal_nested_sets, NestedSet};
use crate::typecone::{ConeDescription, Inequality};
use crate::vset::Block;

/// Projected characteristic vector: `chi_B - (|B| / |K|) chi_K` for the
/// component `K` containing `B`, as rational coordinates over the ground.
fn projected_g_vector(b: &BuildingSet, blk: Block) -> Vec<Rat> {
    let k = b
        .component_of_vertex(blk.min().expect("blocks are non-empty"))
        .expect("every vertex lies in a component");
    debug_assert!(blk.is_subset(k));
    let ratio = Rat::new(BigInt::from(blk.len()), BigInt::from(k.len()));
    b.ground()
        .iter()
        .map(|v| {
            let mut c = Rat::zero();
            if blk.contains(v) {
                c += Rat::one();
            }
            if k.contains(v) {
                c -= &ratio * Rat::one();
            }
            c
        })
        .collect()
}

/// The unique linear dependence among the rays of two adjacent maximal
/// nested sets, scaled so the two exchanged-block coefficients sum to 2,
/// returned as a canonical inequality (positive on the exchanged blocks).
pub fn flip_dependence(
    b: &BuildingSet,
    s: &NestedSet,
    s2: &NestedSet,
) -> Result<Inequality, Error> {
    for t in [s, s2] {
        if !t.is_maximal(b) {
            return Err(Error::NotMaximal {
                got: t.len(),
                expected: b.ground().len() as usize,
            });
        }
    }
    let only_in_s: Vec<Block> = s
        .blocks()
        .iter()
        .copied()
        .filter(|&c| !s2.contains(c))
        .collect();
    let only_in_s2: Vec<Block> = s2
        .blocks()
        .iter()
        .copied()
        .filter(|&c| !s.contains(c))
        .collect();
    if only_in_s.len() != 1 || only_in_s2.len() != 1 {
        return Err(Error::NotAdjacent);
    }
    let (out_block, in_block) = (only_in_s[0], only_in_s2[0]);

    let mut rays: Vec<Block> = s.blocks().to_vec();
    rays.push(in_block);
    rays.sort();
    rays.retain(|&c| !b.is_component(c));
    let cols: Vec<Vec<Rat>> = rays.iter().map(|&c| projected_g_vector(b, c)).collect();
    let null = nullspace_of_columns(&cols);
    if null.len() != 1 {
        return Err(Error::InvariantViolation(format!(
            "expected a one-dimensional dependence, found {}",
            null.len()
        )));
    }
    let alpha = &null[0];
    let idx_out = rays.iter().position(|&c| c == out_block).unwrap();
    let idx_in = rays.iter().position(|&c| c == in_block).unwrap();
    let pair_sum = &alpha[idx_out] + &alpha[idx_in];
    if pair_sum.is_zero() {
        return Err(Error::InvariantViolation(
            "exchanged-block coefficients cancel".into(),
        ));
    }
    let scale = Rat::from_integer(BigInt::from(2)) / pair_sum;
    let scaled: Vec<Rat> = alpha.iter().map(|a| a * &scale).collect();

    // Clear denominators and build the integer normal.
    let mut denom_lcm = BigInt::one();
    for a in &scaled {
        denom_lcm = num_integer::lcm(denom_lcm, a.denom().clone());
    }
    let mut coeffs: BTreeMap<Block, i64> = BTreeMap::new();
    for (ray, a) in rays.iter().zip(&scaled) {
        let as_int = (a * Rat::from_integer(denom_lcm.clone())).to_integer();
        let c: i64 = i64::try_from(&as_int).map_err(|_| {
            Error::InvariantViolation("dependence coefficient exceeds i64".into())
        })?;
        if c != 0 {
            coeffs.insert(*ray, c);
        }
    }
    for idx in [idx_out, idx_in] {
        if scaled[idx] != Rat::one() {
            return Err(Error::InvariantViolation(format!(
                "exchanged-block coefficient is {}, expected 1",
                scaled[idx]
            )));
        }
    }
    Inequality::new(coeffs, b.components())
}

/// Wall-crossing inequalities of every adjacent pair of maximal nested
/// sets, found by scanning for symmetric differences of size two.
pub fn brute_cone(b: &BuildingSet) -> ConeDescription {
    let mns = enumerate_maximal_nested_sets(b);
    let mut normals: BTreeSet<Inequality> = BTreeSet::new();
    for i in 0..mns.len() {
        for j in (i + 1)..mns.len() {
            let common = mns[i]
                .blocks()
                .iter()
                .filter(|c| mns[j].contains(**c))
                .count();
            if common + 1 == mns[i].len() {
                let dep = flip_dependence(b, &mns[i], &mns[j])
                    .expect("pairs at distance one are adjacent");
                normals.insert(dep);
            }
        }
    }
    ConeDescription::from_normals(b, normals)
}

/// Keep exactly the facet-defining inequalities: inequality `i` survives
/// iff some point is tight on it while keeping slack at least one on every
/// other inequality (components pinned throughout). Exact phase-one
/// simplex; duplicates were already merged by the canonical form.
pub fn irredundant(c: &ConeDescription) -> ConeDescription {
    let coords = c.ray_blocks();
    let rows: Vec<Vec<Rat>> = c
        .inequalities()
        .iter()
        .map(|q| {
            q.dense_row(&coords)
                .into_iter()
                .map(|x| Rat::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let mut kept: Vec<Inequality> = Vec::new();
    for i in 0..rows.len() {
        let a_ge: Vec<Vec<Rat>> = rows
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, r)| r.clone())
            .collect();
        let b_ge = vec![Rat::one(); a_ge.len()];
        let a_eq = vec![rows[i].clone()];
        let b_eq = vec![Rat::zero()];
        if feasible(&a_ge, &b_ge, &a_eq, &b_eq) {
            kept.push(c.inequalities()[i].clone());
        }
    }
    c.with_inequalities(kept)
}

/// Canonical equality of cone descriptions over the same building set.
pub fn cone_equal(c1: &ConeDescription, c2: &ConeDescription) -> Result<bool, Error> {
    if c1.ground() != c2.ground() || c1.blocks() != c2.blocks() {
        return Err(Error::BuildingMismatch);
    }
    Ok(c1.equalities() == c2.equalities() && c1.inequalities() == c2.inequalities())
}

/// Number of vertices of the Minkowski sum of the simplices of all blocks,
/// by evaluating the support function in one direction per maximal nested
/// set. The direction `c_v = -#{C in N : v in C}` is generic: on every
/// block the argmax is the single root vertex of the minimal block of `N`
/// containing it, and summing those argmax vertices over all blocks gives
/// one Minkowski-sum vertex per maximal nested set.
pub fn minkowski_vertex_count(b: &BuildingSet) -> Result<usize, Error> {
    let labels: Vec<u32> = b.ground().to_vec();
    let index: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut points: BTreeSet<Vec<i64>> = BTreeSet::new();
    for s in enumerate_maximal_nested_sets(b) {
        let mut dir = vec![0i64; labels.len()];
        for &blk in s.blocks() {
            for v in blk.iter() {
                dir[index[&v]] -= 1;
            }
        }
        let mut point = vec![0i64; labels.len()];
        for &blk in b.blocks() {
            let best = blk
                .iter()
                .map(|v| dir[index[&v]])
                .max()
                .expect("blocks are non-empty");
            let argmax: Vec<u32> = blk.iter().filter(|&v| dir[index[&v]] == best).collect();
            if argmax.len() != 1 {
                return Err(Error::InvariantViolation(format!(
                    "direction of a maximal nested set is not generic on block {blk}"
                )));
            }
            point[index[&argmax[0]]] += 1;
        }
        points.insert(point);
    }
    Ok(points.len())
}
