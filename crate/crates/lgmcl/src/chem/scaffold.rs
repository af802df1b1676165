//! Bemis-Murcko scaffolds and canonical graph keys.
//!
//! The scaffold is what remains after iteratively deleting non-ring atoms
//! of degree <= 1; the key is a canonical serialization produced by
//! iterative neighborhood refinement with individualization, so any two
//! isomorphic graphs (same atom and bond attributes) map to one string.

use super::{assign_implicit_hydrogens, perceive_rings_into, Atom, BondOrder, Molecule};

/// Reduce to ring systems plus the linkers connecting them. Acyclic
/// molecules give the empty scaffold.
pub fn bemis_murcko_scaffold(mol: &Molecule) -> Molecule {
    let n = mol.atom_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|i| mol.degree(i)).collect();
    loop {
        let mut removed = false;
        for i in 0..n {
            if alive[i] && degree[i] <= 1 && !mol.rings.atom_in_ring[i] {
                alive[i] = false;
                removed = true;
                for (u, _) in mol.neighbors(i) {
                    if alive[u] {
                        degree[u] -= 1;
                    }
                }
            }
        }
        if !removed {
            break;
        }
    }

    let mut remap = vec![usize::MAX; n];
    let mut atoms = Vec::new();
    for (i, atom) in mol.atoms.iter().enumerate() {
        if alive[i] {
            remap[i] = atoms.len();
            let mut atom = atom.clone();
            atom.index = atoms.len();
            atoms.push(atom);
        }
    }
    let mut bonds = Vec::new();
    for bond in &mol.bonds {
        if alive[bond.a] && alive[bond.b] {
            let mut bond = bond.clone();
            bond.a = remap[bond.a];
            bond.b = remap[bond.b];
            bond.index = bonds.len();
            bonds.push(bond);
        }
    }
    let scaffold = assign_implicit_hydrogens(Molecule::new(atoms, bonds));
    perceive_rings_into(scaffold)
}

/// Canonical grouping key for a scaffold. Empty scaffolds (acyclic
/// molecules) share the empty key.
pub fn scaffold_key(scaffold: &Molecule) -> String {
    if scaffold.atom_count() == 0 {
        return String::new();
    }
    canonical_key(scaffold)
}

/// Canonical string for any molecule, invariant to input atom ordering.
pub fn canonical_key(mol: &Molecule) -> String {
    if mol.atom_count() == 0 {
        return String::new();
    }
    let ranks = canonical_ranks(mol);
    serialize(mol, &ranks)
}

fn bond_code(order: BondOrder) -> u64 {
    match order {
        BondOrder::Single => 1,
        BondOrder::Double => 2,
        BondOrder::Triple => 3,
        BondOrder::Aromatic => 4,
    }
}

fn atom_invariant(mol: &Molecule, i: usize) -> u64 {
    let a = &mol.atoms[i];
    let mut key = a.element as u64;
    key = key * 2 + a.aromatic as u64;
    key = key * 16 + (a.formal_charge as i64 + 8) as u64;
    key = key * 16 + mol.hydrogen_count(i) as u64;
    key = key * 16 + mol.degree(i) as u64;
    key = key * 1024 + a.isotope.unwrap_or(0) as u64;
    key
}

/// Discrete canonical ranks via Weisfeiler-Lehman refinement. Ties left by
/// refinement are broken by individualizing each member of the first tied
/// class in turn and keeping the lexicographically smallest serialization.
pub fn canonical_ranks(mol: &Molecule) -> Vec<usize> {
    let init: Vec<u64> = (0..mol.atom_count())
        .map(|i| atom_invariant(mol, i))
        .collect();
    let ranks = refine(mol, &dense_ranks(&init));
    if is_discrete(&ranks) {
        return ranks;
    }
    let mut best: Option<(String, Vec<usize>)> = None;
    let class = smallest_tied_class(&ranks);
    for &candidate in &class {
        let mut seeded: Vec<u64> = ranks.iter().map(|&r| (r as u64 + 1) * 2).collect();
        seeded[candidate] -= 1;
        let sub = resolve(mol, refine(mol, &dense_ranks(&seeded)));
        let s = serialize(mol, &sub);
        if best.as_ref().is_none_or(|(b, _)| s < *b) {
            best = Some((s, sub));
        }
    }
    best.unwrap().1
}

/// Recursive individualization until the partition is discrete.
fn resolve(mol: &Molecule, ranks: Vec<usize>) -> Vec<usize> {
    if is_discrete(&ranks) {
        return ranks;
    }
    let mut best: Option<(String, Vec<usize>)> = None;
    let class = smallest_tied_class(&ranks);
    for &candidate in &class {
        let mut seeded: Vec<u64> = ranks.iter().map(|&r| (r as u64 + 1) * 2).collect();
        seeded[candidate] -= 1;
        let sub = resolve(mol, refine(mol, &dense_ranks(&seeded)));
        let s = serialize(mol, &sub);
        if best.as_ref().is_none_or(|(b, _)| s < *b) {
            best = Some((s, sub));
        }
    }
    best.unwrap().1
}

fn smallest_tied_class(ranks: &[usize]) -> Vec<usize> {
    let mut counts = vec![0usize; ranks.len()];
    for &r in ranks {
        counts[r] += 1;
    }
    let tied_rank = (0..ranks.len()).find(|&r| counts[r] > 1).unwrap();
    (0..ranks.len()).filter(|&i| ranks[i] == tied_rank).collect()
}

fn is_discrete(ranks: &[usize]) -> bool {
    let mut seen = vec![false; ranks.len()];
    for &r in ranks {
        if seen[r] {
            return false;
        }
        seen[r] = true;
    }
    true
}

fn dense_ranks(keys: &[u64]) -> Vec<usize> {
    let mut sorted: Vec<u64> = keys.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).unwrap())
        .collect()
}

fn refine(mol: &Molecule, start: &[usize]) -> Vec<usize> {
    let mut ranks = start.to_vec();
    loop {
        let mut keys: Vec<(usize, Vec<(usize, u64)>)> = Vec::with_capacity(ranks.len());
        for i in 0..ranks.len() {
            let mut neighborhood: Vec<(usize, u64)> = mol
                .neighbors(i)
                .into_iter()
                .map(|(u, b)| (ranks[u], bond_code(mol.bonds[b].order)))
                .collect();
            neighborhood.sort_unstable();
            keys.push((ranks[i], neighborhood));
        }
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        let new_ranks: Vec<usize> = keys
            .iter()
            .map(|k| sorted.binary_search(k).unwrap())
            .collect();
        if new_ranks == ranks {
            return ranks;
        }
        ranks = new_ranks;
    }
}

/// Deterministic DFS serialization guided by canonical ranks: children in
/// rank order, ring-closure bonds as `&n` pairs numbered by first mention.
fn serialize(mol: &Molecule, ranks: &[usize]) -> String {
    let n = mol.atom_count();
    let root = (0..n).min_by_key(|&i| ranks[i]).unwrap();

    // Pass 1: mark DFS tree edges; the rest are ring closures.
    let mut visited = vec![false; n];
    let mut tree = vec![false; mol.bond_count()];
    build_tree(mol, ranks, root, &mut visited, &mut tree);

    // Pass 2: emit. Closure numbers are assigned at first mention, which
    // follows the same deterministic order as the tree construction.
    let mut closure_num = vec![0usize; mol.bond_count()];
    let mut next_closure = 1usize;
    let mut out = String::new();
    emit(
        mol,
        ranks,
        root,
        usize::MAX,
        &tree,
        &mut closure_num,
        &mut next_closure,
        &mut out,
    );
    out
}

fn sorted_neighbors(mol: &Molecule, ranks: &[usize], v: usize) -> Vec<(usize, usize)> {
    let mut nbrs = mol.neighbors(v);
    nbrs.sort_by_key(|&(u, _)| ranks[u]);
    nbrs
}

fn build_tree(mol: &Molecule, ranks: &[usize], v: usize, visited: &mut [bool], tree: &mut [bool]) {
    visited[v] = true;
    for (u, b) in sorted_neighbors(mol, ranks, v) {
        if !visited[u] {
            tree[b] = true;
            build_tree(mol, ranks, u, visited, tree);
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn emit(
    mol: &Molecule,
    ranks: &[usize],
    v: usize,
    via_bond: usize,
    tree: &[bool],
    closure_num: &mut [usize],
    next_closure: &mut usize,
    out: &mut String,
) {
    if via_bond != usize::MAX {
        out.push(order_char(mol.bonds[via_bond].order));
    }
    atom_token(mol, v, out);
    let nbrs = sorted_neighbors(mol, ranks, v);
    for &(_, b) in &nbrs {
        if !tree[b] {
            if closure_num[b] == 0 {
                closure_num[b] = *next_closure;
                *next_closure += 1;
            }
            out.push('&');
            out.push(order_char(mol.bonds[b].order));
            out.push_str(&closure_num[b].to_string());
        }
    }
    for &(u, b) in &nbrs {
        if tree[b] && b != via_bond {
            out.push('(');
            emit(mol, ranks, u, b, tree, closure_num, next_closure, out);
            out.push(')');
        }
    }
}

fn order_char(order: BondOrder) -> char {
    match order {
        BondOrder::Single => '-',
        BondOrder::Double => '=',
        BondOrder::Triple => '#',
        BondOrder::Aromatic => ':',
    }
}

fn atom_token(mol: &Molecule, i: usize, out: &mut String) {
    let a: &Atom = &mol.atoms[i];
    out.push('[');
    if let Some(iso) = a.isotope {
        out.push_str(&iso.to_string());
        out.push('*');
    }
    if a.aromatic {
        out.push_str(&a.symbol().to_lowercase());
    } else {
        out.push_str(a.symbol());
    }
    if a.formal_charge != 0 {
        out.push_str(&format!("{:+}", a.formal_charge));
    }
    out.push('H');
    out.push_str(&mol.hydrogen_count(i).to_string());
    out.push(']');
}

/// Convenience: scaffold key straight from a parsed molecule.
pub fn scaffold_key_of(mol: &Molecule) -> String {
    scaffold_key(&bemis_murcko_scaffold(mol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chem::Molecule;

    fn key(s: &str) -> String {
        canonical_key(&Molecule::from_smiles(s).unwrap())
    }

    fn skey(s: &str) -> String {
        let mol = Molecule::from_smiles(s).unwrap();
        scaffold_key(&bemis_murcko_scaffold(&mol))
    }

    #[test]
    fn scaffold_of_ethylbenzene_is_benzene() {
        let mol = Molecule::from_smiles("CCc1ccccc1").unwrap();
        let scaffold = bemis_murcko_scaffold(&mol);
        assert_eq!(scaffold.atom_count(), 6);
        assert_eq!(scaffold.bond_count(), 6);
        assert!(scaffold.atoms.iter().all(|a| a.aromatic));
    }

    #[test]
    fn benzene_is_its_own_scaffold() {
        let mol = Molecule::from_smiles("c1ccccc1").unwrap();
        let scaffold = bemis_murcko_scaffold(&mol);
        assert_eq!(scaffold.atom_count(), 6);
        assert_eq!(canonical_key(&scaffold), canonical_key(&mol));
    }

    #[test]
    fn acyclic_gives_empty_scaffold() {
        let mol = Molecule::from_smiles("CCO").unwrap();
        let scaffold = bemis_murcko_scaffold(&mol);
        assert_eq!(scaffold.atom_count(), 0);
        assert_eq!(scaffold_key(&scaffold), "");
    }

    #[test]
    fn scaffold_is_idempotent() {
        for s in ["CCc1ccccc1", "CC(=O)Oc1ccccc1C(=O)O", "C1CCC1CC1CC1", "CCO"] {
            let mol = Molecule::from_smiles(s).unwrap();
            let once = bemis_murcko_scaffold(&mol);
            let twice = bemis_murcko_scaffold(&once);
            assert_eq!(canonical_key(&once), canonical_key(&twice), "{s}");
        }
    }

    #[test]
    fn shared_scaffold_same_key() {
        assert_eq!(skey("CCc1ccccc1"), skey("NCc1ccccc1"));
        assert_eq!(skey("CCO"), skey("NCCN"));
    }

    #[test]
    fn distinct_rings_distinct_keys() {
        assert_ne!(key("C1CC1"), key("C1CCC1"));
        assert_ne!(key("c1ccccc1"), key("C1CCCCC1"));
    }

    #[test]
    fn spelling_invariance() {
        assert_eq!(key("CCO"), key("OCC"));
        assert_eq!(key("c1ccccc1CC"), key("CCc1ccccc1"));
        assert_eq!(key("CC(N)C(=O)O"), key("OC(=O)C(C)N"));
        assert_eq!(key("C1CC1CO"), key("OCC1CC1"));
    }

    #[test]
    fn charge_and_isotope_distinguish() {
        assert_ne!(key("[NH4+]"), key("N"));
        assert_ne!(key("[13CH4]"), key("C"));
    }
}
