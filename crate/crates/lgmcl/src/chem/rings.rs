//! Ring perception via per-bond shortest alternative paths: the smallest
//! ring through a bond (u, v) is 1 + the shortest path from u to v with
//! that bond removed. Independent of atom ordering because only path
//! lengths matter.

use super::{Molecule, RingInfo};
use std::collections::VecDeque;

pub fn perceive_rings(mol: &Molecule) -> RingInfo {
    let n = mol.atom_count();
    let m = mol.bond_count();
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for bond in &mol.bonds {
        adjacency[bond.a].push((bond.b, bond.index));
        adjacency[bond.b].push((bond.a, bond.index));
    }

    let mut info = RingInfo {
        atom_in_ring: vec![false; n],
        bond_in_ring: vec![false; m],
        atom_ring_sizes: vec![Vec::new(); n],
    };

    for bond in &mol.bonds {
        if let Some(len) = shortest_path_avoiding(&adjacency, bond.a, bond.b, bond.index) {
            let size = len + 1;
            info.bond_in_ring[bond.index] = true;
            for &atom in &[bond.a, bond.b] {
                info.atom_in_ring[atom] = true;
                if !info.atom_ring_sizes[atom].contains(&size) {
                    info.atom_ring_sizes[atom].push(size);
                }
            }
        }
    }
    for sizes in &mut info.atom_ring_sizes {
        sizes.sort_unstable();
    }
    info
}

/// BFS path length from `start` to `goal` ignoring bond `skip`.
fn shortest_path_avoiding(
    adjacency: &[Vec<(usize, usize)>],
    start: usize,
    goal: usize,
    skip: usize,
) -> Option<usize> {
    let mut dist = vec![usize::MAX; adjacency.len()];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        if v == goal {
            return Some(dist[v]);
        }
        for &(u, bond) in &adjacency[v] {
            if bond != skip && dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    None
}

/// Number of independent cycles (cycle rank). The molecule is a single
/// component after parsing, so this is m - n + 1 clamped at zero.
pub fn ring_count(mol: &Molecule) -> usize {
    (mol.bond_count() + 1).saturating_sub(mol.atom_count())
}
