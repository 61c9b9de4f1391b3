//! Shared fixtures for unit tests.

use crate::building::BuildingSet;
use crate::graph::Graph;
use crate::vset::VertexSet;

pub fn vs(labels: &[u32]) -> VertexSet {
    VertexSet::from_labels(labels.iter().copied()).unwrap()
}

pub fn path(n: u32) -> Graph {
    let edges: Vec<(u32, u32)> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn complete(n: u32) -> Graph {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            edges.push((i, j));
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn cycle(n: u32) -> Graph {
    let mut edges: Vec<(u32, u32)> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((n, 1));
    Graph::new(n, &edges).unwrap()
}

/// Star with center 1 and `n - 1` leaves.
pub fn star(n: u32) -> Graph {
    let edges: Vec<(u32, u32)> = (2..=n).map(|i| (1, i)).collect();
    Graph::new(n, &edges).unwrap()
}

/// The 21-block building set on the ground 1..=9 used as the worked example.
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
