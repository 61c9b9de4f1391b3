//! Polytopal realizations from interior heights (one vertex per maximal
//! nested set) and kinematic realizations for simplicial type cones.
//!
//! The height realization lives in the ground space: the vertex of a
//! maximal nested set solves the triangular system of its block equations.
//! The kinematic realization lives in the space indexed by non-component
//! blocks: `{z >= 0 : K z = p}` with the facet normals as rows of `K`,
//! vertices found by exhausting candidate tight-coordinate subsets.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::building::BuildingSet;
use crate::error::Error;
use crate::linalg::{bareiss_solve_i128, solve_square, Rat};
use crate::nested::{enumerate_maximal_nested_sets, NestedSet};
use crate::typecone::{facet_cone, height_membership, is_simplicial, HeightVector, Membership};
use crate::vset::Block;

/// A vertex together with the maximal nested set it realizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeVertex {
    pub coords: Vec<Rat>,
    pub nested_set: NestedSet,
}

/// A polytope given by its exact vertices; `coord_labels` names the
/// coordinates (ground vertices for height realizations, non-component
/// blocks for kinematic ones).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    pub dim: usize,
    pub coord_blocks: Option<Vec<Block>>,
    pub vertices: Vec<PolytopeVertex>,
}

/// Strictly positive rationals, one per facet of the type cone in
/// canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KinematicInput {
    values: Vec<Rat>,
}

impl KinematicInput {
    pub fn new(values: Vec<Rat>) -> Result<KinematicInput, Error> {
        for (index, v) in values.iter().enumerate() {
            if !v.is_positive() {
                return Err(Error::NonPositiveInput { index });
            }
        }
        Ok(KinematicInput { values })
    }

    pub fn ones(len: usize) -> KinematicInput {
        KinematicInput {
            values: vec![Rat::from_integer(BigInt::from(1)); len],
        }
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }
}

fn vertex_coords(b: &BuildingSet, h: &HeightVector, s: &NestedSet) -> Result<Vec<Rat>, Error> {
    let labels: Vec<u32> = b.ground().to_vec();
    let index: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut x: Vec<Option<Rat>> = vec![None; labels.len()];
    // Blocks in canonical order come smallest first, so every non-root
    // vertex of a block is already solved when the block is reached.
    for &blk in s.blocks() {
        let mut acc = h.value(blk);
        let mut unknown: Option<u32> = None;
        for v in blk.iter() {
            match &x[index[&v]] {
                Some(val) => acc -= val,
                None => {
                    if unknown.replace(v).is_some() {
                        return Err(Error::InvariantViolation(format!(
                            "block {blk} has more than one undetermined vertex"
                        )));
                    }
                }
            }
        }
        match unknown {
            Some(v) => x[index[&v]] = Some(acc),
            None => {
                if !acc.is_zero() {
                    return Err(Error::InvariantViolation(format!(
                        "block {blk} is overdetermined with residue {acc}"
                    )));
                }
            }
        }
    }
    x.into_iter()
        .map(|v| {
            v.ok_or_else(|| {
                Error::InvariantViolation("vertex coordinate left undetermined".into())
            })
        })
        .collect()
}

/// The unique point of the ground space satisfying the block equations of a
/// maximal nested set, for an interior height. Tight exactly on the blocks
/// of the nested set.
pub fn vertex_of(b: &BuildingSet, h: &HeightVector, s: &NestedSet) -> Result<Vec<Rat>, Error> {
    if !s.is_maximal(b) {
        return Err(Error::NotMaximal {
            got: s.len(),
            expected: b.ground().len() as usize,
        });
    }
    if height_membership(b, h)? != Membership::Interior {
        return Err(Error::NotInterior);
    }
    let coords = vertex_coords(b, h, s)?;
    // Every block outside the nested set must be strictly slack.
    let labels: Vec<u32> = b.ground().to_vec();
    let index: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for &blk in b.blocks() {
        if s.contains(blk) {
            continue;
        }
        let sum = blk
            .iter()
            .fold(Rat::zero(), |acc, v| acc + &coords[index[&v]]);
        if sum >= h.value(blk) {
            return Err(Error::InvariantViolation(format!(
                "vertex of an interior height is tight or violated on {blk} outside its nested set"
            )));
        }
    }
    Ok(coords)
}

/// The polytope of an interior height: one vertex per maximal nested set,
/// adjacent exactly along flips.
pub fn realize_polytope(b: &BuildingSet, h: &HeightVector) -> Result<Polytope, Error> {
    if height_membership(b, h)? != Membership::Interior {
        return Err(Error::NotInterior);
    }
    let mut vertices = Vec::new();
    for s in enumerate_maximal_nested_sets(b) {
        let coords = vertex_coords(b, h, &s)?;
        vertices.push(PolytopeVertex {
            coords,
            nested_set: s,
        });
    }
    Ok(Polytope {
        dim: b.ground().len() as usize,
        coord_blocks: None,
        vertices,
    })
}

fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> Result<(), Error>) -> Result<(), Error> {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return Ok(());
    }
    loop {
        f(&idx)?;
        // Advance to the next k-combination of {0..n}.
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return Ok(());
            }
        }
        idx[i] += 1;
        for j in (i + 1)..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The kinematic realization `{z >= 0 : K z = p}` of a simplicial type
/// cone, with one coordinate per non-component block and the facet normals
/// as rows of `K`. Vertices are enumerated exactly: every candidate set of
/// `#ground - #components` tight coordinates is solved and kept when
/// feasible; each vertex's zero set is the non-component part of a unique
/// maximal nested set.
pub fn kinematic_polytope(b: &BuildingSet, p: &KinematicInput) -> Result<Polytope, Error> {
    if !is_simplicial(b) {
        return Err(Error::NotSimplicial);
    }
    let cone = facet_cone(b);
    let coords = cone.ray_blocks();
    let m = cone.inequalities().len();
    if p.values().len() != m {
        return Err(Error::KinematicLength {
            expected: m,
            got: p.values().len(),
        });
    }
    let big_n = coords.len();
    let n_zero = big_n - m;
    let rows: Vec<Vec<i64>> = cone
        .inequalities()
        .iter()
        .map(|q| q.dense_row(&coords))
        .collect();

    // Integer-scaled rows for the fraction-free fast path; any entry too
    // large for i128 disables it and every candidate solves rationally.
    let scaled: Option<Vec<(Vec<i128>, i128)>> = rows
        .iter()
        .zip(p.values())
        .map(|(row, pi)| {
            let d = pi.denom().clone();
            let row_i: Option<Vec<i128>> = row
                .iter()
                .map(|&c| i128::try_from(BigInt::from(c) * &d).ok())
                .collect();
            let rhs = i128::try_from(pi.numer().clone()).ok();
            match (row_i, rhs) {
                (Some(r), Some(b)) => Some((r, b)),
                _ => None,
            }
        })
        .collect();

    let mut vertices: Vec<PolytopeVertex> = Vec::new();
    let mns = enumerate_maximal_nested_sets(b);
    for_each_combination(big_n, n_zero, |zero_idx| {
        let live: Vec<usize> = (0..big_n).filter(|i| !zero_idx.contains(i)).collect();
        let rational_solve = |live: &[usize]| {
            let ar: Vec<Vec<Rat>> = rows
                .iter()
                .map(|row| {
                    live.iter()
                        .map(|&j| Rat::from_integer(BigInt::from(row[j])))
                        .collect()
                })
                .collect();
            let rr: Vec<Rat> = p.values().to_vec();
            solve_square(&ar, &rr)
        };
        let solved = match &scaled {
            Some(scaled) => {
                let a: Vec<Vec<i128>> = scaled
                    .iter()
                    .map(|(row, _)| live.iter().map(|&j| row[j]).collect())
                    .collect();
                let rhs: Vec<i128> = scaled.iter().map(|(_, r)| *r).collect();
                match bareiss_solve_i128(&a, &rhs) {
                    Ok(sol) => sol,
                    Err(crate::linalg::Overflow) => rational_solve(&live),
                }
            }
            None => rational_solve(&live),
        };
        let Some(sol) = solved else {
            return Ok(());
        };
        if sol.iter().any(|v| v.is_negative()) {
            return Ok(());
        }
        if sol.iter().any(|v| v.is_zero()) {
            return Err(Error::InvariantViolation(
                "kinematic vertex lies on more tight coordinates than its candidate set".into(),
            ));
        }
        let mut z = vec![Rat::zero(); big_n];
        for (slot, &j) in live.iter().enumerate() {
            z[j] = sol[slot].clone();
        }
        // The zero set plus the components must be a maximal nested set.
        let mut label_blocks: Vec<Block> = zero_idx.iter().map(|&i| coords[i]).collect();
        label_blocks.extend_from_slice(b.components());
        label_blocks.sort();
        let matched = mns
            .iter()
            .find(|s| s.blocks() == label_blocks.as_slice())
            .cloned()
            .ok_or_else(|| {
                Error::InvariantViolation(
                    "kinematic vertex zero set is not a maximal nested set".into(),
                )
            })?;
        vertices.push(PolytopeVertex {
            coords: z,
            nested_set: matched,
        });
        Ok(())
    })?;
    vertices.sort_by(|a, b| a.nested_set.cmp(&b.nested_set));
    for w in vertices.windows(2) {
        if w[0].nested_set == w[1].nested_set {
            return Err(Error::InvariantViolation(
                "two kinematic vertices share a nested set".into(),
            ));
        }
    }
    Ok(Polytope {
        dim: big_n,
        coord_blocks: Some(coords),
        vertices,
    })
}
