//! Numeric atom/bond features, whole-molecule descriptors and the
//! deterministic template text.
//!
//! Atom vectors have 57 entries, bond vectors 15, laid out block by block
//! (see the `ATOM_*` / `BOND_*` offsets). One-hot blocks hold at most one
//! active entry; the ring-type block is multi-hot over sizes {3,4,5,6}.

use crate::chem::{elements, ring_count, BondOrder, Chirality, Molecule, Wedge};
use thiserror::Error;

pub const ATOM_FEATURE_DIM: usize = 57;
pub const BOND_FEATURE_DIM: usize = 15;

// Atom feature layout.
pub const ATOM_SYMBOL: usize = 0; // 16 one-hot
pub const ATOM_DEGREE: usize = 16; // 6 one-hot, 0..5
pub const ATOM_FORMAL_CHARGE: usize = 22; // scalar
pub const ATOM_RADICAL: usize = 23; // scalar, always 0 in this subset
pub const ATOM_HYBRIDIZATION: usize = 24; // 6 one-hot
pub const ATOM_AROMATIC: usize = 30; // flag
pub const ATOM_HYDROGENS: usize = 31; // 5 one-hot, 0..4
pub const ATOM_CHIRALITY: usize = 36; // 4 one-hot
pub const ATOM_RING: usize = 40; // flag
pub const ATOM_RING_TYPE: usize = 41; // 4 multi-hot, sizes 3..6
pub const ATOM_MASS: usize = 45; // scalar
pub const ATOM_IMPLICIT_VALENCE: usize = 46; // 7 one-hot, 0..6 (7 clamps to 6)
pub const ATOM_H_ACCEPTOR: usize = 53;
pub const ATOM_H_DONOR: usize = 54;
pub const ATOM_ACIDIC: usize = 55;
pub const ATOM_BASIC: usize = 56;

// Bond feature layout.
pub const BOND_TYPE: usize = 0; // 5: [exists, single, double, triple, aromatic]
pub const BOND_CONJUGATED: usize = 5;
pub const BOND_WEDGE: usize = 6; // 2: [up, down]
pub const BOND_RING: usize = 8;
pub const BOND_STEREO: usize = 9; // 6 one-hot, codes 0..5

/// Symbol one-hot order; anything else maps to the trailing "others" slot.
const SYMBOL_ORDER: [u8; 15] = [
    elements::B,
    elements::C,
    elements::N,
    elements::O,
    elements::F,
    elements::SI,
    elements::P,
    elements::S,
    elements::CL,
    elements::AS,
    elements::SE,
    elements::BR,
    elements::TE,
    elements::I,
    elements::AT,
];

#[derive(Debug, Error, PartialEq)]
pub enum FeaturizeError {
    #[error("atom index {0} out of range ({1} atoms)")]
    AtomIndex(usize, usize),
    #[error("bond index {0} out of range ({1} bonds)")]
    BondIndex(usize, usize),
    #[error("cannot featurize an empty molecule")]
    EmptyMolecule,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hybridization {
    Sp,
    Sp2,
    Sp3,
    Sp3d,
    Sp3d2,
    Other,
}

/// Connectivity-only hybridization: sp for a triple bond or two doubles,
/// sp2 for aromatic or one double, sp3d/sp3d2 for hypervalent P/S, sp3 for
/// the rest of the organic subset, other beyond it.
pub fn hybridization(mol: &Molecule, atom: usize) -> Hybridization {
    let a = &mol.atoms[atom];
    let mut doubles = 0;
    let mut triples = 0;
    for (_, b) in mol.neighbors(atom) {
        match mol.bonds[b].order {
            BondOrder::Double => doubles += 1,
            BondOrder::Triple => triples += 1,
            _ => {}
        }
    }
    let total_valence = mol.bond_order_sum(atom).ceil() as u32 + mol.hydrogen_count(atom) as u32;
    if matches!(a.element, elements::P | elements::S) && total_valence >= 5 {
        return if total_valence >= 6 {
            Hybridization::Sp3d2
        } else {
            Hybridization::Sp3d
        };
    }
    if triples >= 1 || doubles >= 2 {
        return Hybridization::Sp;
    }
    if a.aromatic || doubles == 1 {
        return Hybridization::Sp2;
    }
    if !elements::default_valences(a.element).is_empty() {
        return Hybridization::Sp3;
    }
    Hybridization::Other
}

fn is_n_or_o(z: u8) -> bool {
    z == elements::N || z == elements::O
}

/// N or O carrying at least one hydrogen.
pub fn is_h_donor(mol: &Molecule, atom: usize) -> bool {
    is_n_or_o(mol.atoms[atom].element) && mol.hydrogen_count(atom) >= 1
}

/// N or O with a lone pair: formal charge <= 0 and total valence below the
/// quaternary/oxonium maximum.
pub fn is_h_acceptor(mol: &Molecule, atom: usize) -> bool {
    let a = &mol.atoms[atom];
    if a.formal_charge > 0 {
        return false;
    }
    let total_valence = mol.bond_order_sum(atom).ceil() as u32 + mol.hydrogen_count(atom) as u32;
    match a.element {
        elements::N => total_valence < 4,
        elements::O => total_valence < 3,
        _ => false,
    }
}

/// True when the atom belongs to an O-H on C(=O), S(=O) or P(=O): the
/// hydroxyl oxygen, the central atom and the doubly bonded oxygen are all
/// part of the acidic group.
pub fn is_acidic(mol: &Molecule, atom: usize) -> bool {
    acidic_centers(mol)[atom]
}

fn acidic_centers(mol: &Molecule) -> Vec<bool> {
    let n = mol.atom_count();
    let mut flag = vec![false; n];
    for i in 0..n {
        // Hydroxyl oxygen candidate.
        if mol.atoms[i].element != elements::O || mol.hydrogen_count(i) < 1 {
            continue;
        }
        for (center, cb) in mol.neighbors(i) {
            if mol.bonds[cb].order != BondOrder::Single {
                continue;
            }
            let z = mol.atoms[center].element;
            if !matches!(z, elements::C | elements::S | elements::P) {
                continue;
            }
            for (oxo, ob) in mol.neighbors(center) {
                if oxo != i
                    && mol.atoms[oxo].element == elements::O
                    && mol.bonds[ob].order == BondOrder::Double
                {
                    flag[i] = true;
                    flag[center] = true;
                    flag[oxo] = true;
                }
            }
        }
    }
    flag
}

/// sp3 nitrogen with no adjacent carbonyl carbon, or an amidine/guanidine
/// nitrogen (N attached to a C that is double-bonded to some N).
pub fn is_basic(mol: &Molecule, atom: usize) -> bool {
    let a = &mol.atoms[atom];
    if a.element != elements::N {
        return false;
    }
    for (c, _) in mol.neighbors(atom) {
        if mol.atoms[c].element != elements::C {
            continue;
        }
        let c_has_n_double = mol.neighbors(c).into_iter().any(|(x, xb)| {
            mol.atoms[x].element == elements::N && mol.bonds[xb].order == BondOrder::Double
        });
        if c_has_n_double {
            return true;
        }
    }
    if a.aromatic || hybridization(mol, atom) != Hybridization::Sp3 {
        return false;
    }
    // Exclude amide-like N: any neighboring carbon with a C=O.
    for (c, _) in mol.neighbors(atom) {
        if mol.atoms[c].element != elements::C {
            continue;
        }
        let carbonyl = mol.neighbors(c).into_iter().any(|(x, xb)| {
            mol.atoms[x].element == elements::O && mol.bonds[xb].order == BondOrder::Double
        });
        if carbonyl {
            return false;
        }
    }
    true
}

/// Alternation rule: aromatic bonds are conjugated; a single bond is
/// conjugated when both endpoints carry a multiple/aromatic bond; a
/// multiple bond is conjugated when a single-bonded neighbor atom carries
/// another multiple/aromatic bond.
pub fn is_conjugated(mol: &Molecule, bond: usize) -> bool {
    let b = &mol.bonds[bond];
    let unsat = |atom: usize| {
        mol.neighbors(atom)
            .into_iter()
            .any(|(_, ib)| !matches!(mol.bonds[ib].order, BondOrder::Single))
    };
    match b.order {
        BondOrder::Aromatic => true,
        BondOrder::Single => unsat(b.a) && unsat(b.b),
        BondOrder::Double | BondOrder::Triple => [b.a, b.b].iter().any(|&end| {
            mol.neighbors(end).into_iter().any(|(far, ib)| {
                ib != bond && mol.bonds[ib].order == BondOrder::Single && unsat(far)
            })
        }),
    }
}

/// 57-entry atom feature vector.
pub fn atom_features(mol: &Molecule, atom: usize) -> Result<Vec<f64>, FeaturizeError> {
    if atom >= mol.atom_count() {
        return Err(FeaturizeError::AtomIndex(atom, mol.atom_count()));
    }
    let a = &mol.atoms[atom];
    let mut v = vec![0.0; ATOM_FEATURE_DIM];

    let slot = SYMBOL_ORDER
        .iter()
        .position(|&z| z == a.element)
        .unwrap_or(15);
    v[ATOM_SYMBOL + slot] = 1.0;

    v[ATOM_DEGREE + mol.degree(atom).min(5)] = 1.0;
    v[ATOM_FORMAL_CHARGE] = a.formal_charge as f64;
    v[ATOM_RADICAL] = 0.0;

    let hyb = match hybridization(mol, atom) {
        Hybridization::Sp => 0,
        Hybridization::Sp2 => 1,
        Hybridization::Sp3 => 2,
        Hybridization::Sp3d => 3,
        Hybridization::Sp3d2 => 4,
        Hybridization::Other => 5,
    };
    v[ATOM_HYBRIDIZATION + hyb] = 1.0;

    v[ATOM_AROMATIC] = a.aromatic as u8 as f64;
    v[ATOM_HYDROGENS + (mol.hydrogen_count(atom) as usize).min(4)] = 1.0;

    let chi = match a.chirality {
        Chirality::None => 0,
        Chirality::Clockwise => 1,
        Chirality::CounterClockwise => 2,
        Chirality::Other => 3,
    };
    v[ATOM_CHIRALITY + chi] = 1.0;

    v[ATOM_RING] = mol.rings.atom_in_ring[atom] as u8 as f64;
    for &size in &mol.rings.atom_ring_sizes[atom] {
        if (3..=6).contains(&size) {
            v[ATOM_RING_TYPE + size - 3] = 1.0;
        }
    }

    v[ATOM_MASS] = elements::weight(a.element);
    v[ATOM_IMPLICIT_VALENCE + (mol.implicit_h[atom] as usize).min(6)] = 1.0;

    v[ATOM_H_ACCEPTOR] = is_h_acceptor(mol, atom) as u8 as f64;
    v[ATOM_H_DONOR] = is_h_donor(mol, atom) as u8 as f64;
    v[ATOM_ACIDIC] = is_acidic(mol, atom) as u8 as f64;
    v[ATOM_BASIC] = is_basic(mol, atom) as u8 as f64;
    Ok(v)
}

/// 15-entry bond feature vector.
pub fn bond_features(mol: &Molecule, bond: usize) -> Result<Vec<f64>, FeaturizeError> {
    if bond >= mol.bond_count() {
        return Err(FeaturizeError::BondIndex(bond, mol.bond_count()));
    }
    let b = &mol.bonds[bond];
    let mut v = vec![0.0; BOND_FEATURE_DIM];
    v[BOND_TYPE] = 1.0; // exists
    let slot = match b.order {
        BondOrder::Single => 1,
        BondOrder::Double => 2,
        BondOrder::Triple => 3,
        BondOrder::Aromatic => 4,
    };
    v[BOND_TYPE + slot] = 1.0;
    v[BOND_CONJUGATED] = is_conjugated(mol, bond) as u8 as f64;
    match b.wedge {
        Wedge::None => {}
        Wedge::Up => v[BOND_WEDGE] = 1.0,
        Wedge::Down => v[BOND_WEDGE + 1] = 1.0,
    }
    v[BOND_RING] = mol.rings.bond_in_ring[bond] as u8 as f64;
    v[BOND_STEREO + (b.stereo as usize).min(5)] = 1.0;
    Ok(v)
}

/// Assembled feature matrices plus adjacency and incidence lists.
#[derive(Debug, Clone)]
pub struct FeaturizedGraph {
    pub n_atoms: usize,
    pub n_bonds: usize,
    /// Row-major n x 57.
    pub atom_features: Vec<f64>,
    /// Row-major m x 15.
    pub bond_features: Vec<f64>,
    /// Row-major n x n binary, symmetric, zero diagonal.
    pub adjacency: Vec<f64>,
    /// Per-atom (neighbor, bond index) pairs.
    pub incidence: Vec<Vec<(usize, usize)>>,
}

pub fn featurize(mol: &Molecule) -> Result<FeaturizedGraph, FeaturizeError> {
    let n = mol.atom_count();
    if n == 0 {
        return Err(FeaturizeError::EmptyMolecule);
    }
    let m = mol.bond_count();
    let mut atom_mat = Vec::with_capacity(n * ATOM_FEATURE_DIM);
    for i in 0..n {
        atom_mat.extend(atom_features(mol, i)?);
    }
    let mut bond_mat = Vec::with_capacity(m * BOND_FEATURE_DIM);
    for k in 0..m {
        bond_mat.extend(bond_features(mol, k)?);
    }
    let mut adjacency = vec![0.0; n * n];
    let mut incidence = vec![Vec::new(); n];
    for b in &mol.bonds {
        adjacency[b.a * n + b.b] = 1.0;
        adjacency[b.b * n + b.a] = 1.0;
        incidence[b.a].push((b.b, b.index));
        incidence[b.b].push((b.a, b.index));
    }
    Ok(FeaturizedGraph {
        n_atoms: n,
        n_bonds: m,
        atom_features: atom_mat,
        bond_features: bond_mat,
        adjacency,
        incidence,
    })
}

/// Whole-molecule descriptors computed from the graph only.
#[derive(Debug, Clone, PartialEq)]
pub struct DescriptorSet {
    pub molecular_weight: f64,
    pub heavy_atom_count: usize,
    pub ring_count: usize,
    pub aromatic_ring_count: usize,
    pub hbd_count: usize,
    pub hba_count: usize,
    pub net_formal_charge: i32,
    pub rotatable_bond_estimate: usize,
}

pub fn compute_descriptors(mol: &Molecule) -> DescriptorSet {
    let n = mol.atom_count();
    let hbd = (0..n).filter(|&i| is_h_donor(mol, i)).count();
    let hba = (0..n).filter(|&i| is_h_acceptor(mol, i)).count();
    let net: i32 = mol.atoms.iter().map(|a| a.formal_charge as i32).sum();
    let rotatable = mol
        .bonds
        .iter()
        .filter(|b| {
            b.order == BondOrder::Single
                && !mol.rings.bond_in_ring[b.index]
                && mol.degree(b.a) >= 2
                && mol.degree(b.b) >= 2
        })
        .count();
    DescriptorSet {
        molecular_weight: mol.molecular_weight(),
        heavy_atom_count: n,
        ring_count: ring_count(mol),
        aromatic_ring_count: aromatic_ring_count(mol),
        hbd_count: hbd,
        hba_count: hba,
        net_formal_charge: net,
        rotatable_bond_estimate: rotatable,
    }
}

/// Cycle rank of the aromatic-bond subgraph.
fn aromatic_ring_count(mol: &Molecule) -> usize {
    let arom_bonds: Vec<&crate::chem::Bond> = mol
        .bonds
        .iter()
        .filter(|b| b.order == BondOrder::Aromatic)
        .collect();
    if arom_bonds.is_empty() {
        return 0;
    }
    let mut atoms: Vec<usize> = arom_bonds.iter().flat_map(|b| [b.a, b.b]).collect();
    atoms.sort_unstable();
    atoms.dedup();
    let index_of = |a: usize| atoms.binary_search(&a).unwrap();
    let mut parent: Vec<usize> = (0..atoms.len()).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    let mut components = atoms.len();
    for b in &arom_bonds {
        let (ra, rb) = (
            find(&mut parent, index_of(b.a)),
            find(&mut parent, index_of(b.b)),
        );
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    }
    arom_bonds.len() + components - atoms.len()
}

/// Deterministic three-section description:
/// `Scaffold: ... Salient features: ... Physicochemical profile: ...`
pub fn generate_template_text(mol: &Molecule, d: &DescriptorSet) -> String {
    let scaffold = if d.ring_count == 0 {
        "acyclic framework with no ring system".to_string()
    } else {
        let aromatic = if d.aromatic_ring_count > 0 {
            format!(", {} aromatic", d.aromatic_ring_count)
        } else {
            ", none aromatic".to_string()
        };
        format!(
            "ring system with {} ring{}{}",
            d.ring_count,
            if d.ring_count == 1 { "" } else { "s" },
            aromatic
        )
    };

    let mut features = Vec::new();
    if d.hbd_count > 0 {
        features.push(format!(
            "{} hydrogen bond donor site{}",
            d.hbd_count,
            if d.hbd_count == 1 { "" } else { "s" }
        ));
    }
    if d.hba_count > 0 {
        features.push(format!(
            "{} hydrogen bond acceptor site{}",
            d.hba_count,
            if d.hba_count == 1 { "" } else { "s" }
        ));
    }
    if (0..mol.atom_count()).any(|i| is_acidic(mol, i)) {
        features.push("an acidic group".to_string());
    }
    if (0..mol.atom_count()).any(|i| is_basic(mol, i)) {
        features.push("a basic center".to_string());
    }
    if d.net_formal_charge != 0 {
        features.push(format!("net formal charge {}", d.net_formal_charge));
    }
    let features = if features.is_empty() {
        "no notable functional features".to_string()
    } else {
        features.join(", ")
    };

    format!(
        "Scaffold: {scaffold}. Salient features: {features}. \
         Physicochemical profile: molecular weight {:.1} daltons, \
         {} heavy atoms, {} rotatable bond estimate.",
        d.molecular_weight, d.heavy_atom_count, d.rotatable_bond_estimate
    )
}

/// Machine check for the fixed section structure.
pub fn template_text_well_formed(text: &str) -> bool {
    let Some(rest) = text.strip_prefix("Scaffold: ") else {
        return false;
    };
    let Some(split) = rest.find(". Salient features: ") else {
        return false;
    };
    let rest = &rest[split + ". Salient features: ".len()..];
    let Some(split) = rest.find(". Physicochemical profile: ") else {
        return false;
    };
    let profile = &rest[split + ". Physicochemical profile: ".len()..];
    profile.ends_with('.') && profile.contains("daltons")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chem::Molecule;

    fn mol(s: &str) -> Molecule {
        Molecule::from_smiles(s).unwrap()
    }

    fn one_hot_argmax(v: &[f64], start: usize, len: usize) -> usize {
        let block = &v[start..start + len];
        assert!(
            (block.iter().sum::<f64>() - 1.0).abs() < 1e-12,
            "block at {start} not one-hot: {block:?}"
        );
        block.iter().position(|&x| x == 1.0).unwrap()
    }

    #[test]
    fn vector_lengths() {
        let m = mol("CC(=O)Oc1ccccc1C(=O)O");
        for i in 0..m.atom_count() {
            assert_eq!(atom_features(&m, i).unwrap().len(), 57);
        }
        for k in 0..m.bond_count() {
            assert_eq!(bond_features(&m, k).unwrap().len(), 15);
        }
    }

    #[test]
    fn ethanol_oxygen() {
        let m = mol("CCO");
        let v = atom_features(&m, 2).unwrap();
        assert_eq!(one_hot_argmax(&v, ATOM_DEGREE, 6), 1);
        assert_eq!(one_hot_argmax(&v, ATOM_HYDROGENS, 5), 1);
        assert_eq!(v[ATOM_H_DONOR], 1.0);
        assert_eq!(v[ATOM_H_ACCEPTOR], 1.0);
    }

    #[test]
    fn methane_carbon() {
        let m = mol("C");
        let v = atom_features(&m, 0).unwrap();
        assert_eq!(one_hot_argmax(&v, ATOM_DEGREE, 6), 0);
        assert_eq!(one_hot_argmax(&v, ATOM_HYDROGENS, 5), 4);
        assert_eq!(v[ATOM_AROMATIC], 0.0);
    }

    #[test]
    fn benzene_bond() {
        let m = mol("c1ccccc1");
        let v = bond_features(&m, 0).unwrap();
        assert_eq!(&v[BOND_TYPE..BOND_TYPE + 5], &[1.0, 0.0, 0.0, 0.0, 1.0]);
        assert_eq!(v[BOND_RING], 1.0);
        assert_eq!(v[BOND_CONJUGATED], 1.0);
    }

    #[test]
    fn ethane_bond() {
        let m = mol("CC");
        let v = bond_features(&m, 0).unwrap();
        assert_eq!(&v[BOND_TYPE..BOND_TYPE + 5], &[1.0, 1.0, 0.0, 0.0, 0.0]);
        assert_eq!(v[BOND_RING], 0.0);
        assert_eq!(v[BOND_CONJUGATED], 0.0);
        assert_eq!(one_hot_argmax(&v, BOND_STEREO, 6), 0);
    }

    #[test]
    fn butadiene_conjugation() {
        let m = mol("C=CC=C");
        for k in 0..3 {
            assert!(is_conjugated(&m, k), "bond {k}");
        }
        let m = mol("C=C");
        assert!(!is_conjugated(&m, 0));
    }

    #[test]
    fn featurize_shapes() {
        let g = featurize(&mol("CCO")).unwrap();
        assert_eq!(g.atom_features.len(), 3 * 57);
        assert_eq!(g.bond_features.len(), 2 * 15);
        assert_eq!(g.adjacency.iter().filter(|&&x| x == 1.0).count(), 4);
    }

    #[test]
    fn adjacency_symmetric() {
        let g = featurize(&mol("c1ccc2ccccc2c1")).unwrap();
        let n = g.n_atoms;
        for i in 0..n {
            assert_eq!(g.adjacency[i * n + i], 0.0);
            for j in 0..n {
                assert_eq!(g.adjacency[i * n + j], g.adjacency[j * n + i]);
            }
        }
    }

    #[test]
    fn permutation_consistency() {
        // Two spellings of the same molecule produce identical features
        // once rows are sorted into canonical order.
        let a = mol("CC(N)C(=O)O");
        let b = mol("OC(=O)C(C)N");
        let canonical_rows = |m: &Molecule| {
            let ranks = crate::chem::canonical_ranks(m);
            let g = featurize(m).unwrap();
            let mut order: Vec<usize> = (0..m.atom_count()).collect();
            order.sort_by_key(|&i| ranks[i]);
            order
                .iter()
                .map(|&i| g.atom_features[i * 57..(i + 1) * 57].to_vec())
                .collect::<Vec<_>>()
        };
        assert_eq!(canonical_rows(&a), canonical_rows(&b));
    }

    #[test]
    fn hypervalent_hybridization() {
        let m = mol("CS(=O)(=O)C");
        assert_eq!(hybridization(&m, 1), Hybridization::Sp3d2);
        let m = mol("OP(=O)(O)O");
        assert_eq!(hybridization(&m, 1), Hybridization::Sp3d);
        let m = mol("C#N");
        assert_eq!(hybridization(&m, 0), Hybridization::Sp);
        assert_eq!(hybridization(&m, 1), Hybridization::Sp);
    }

    #[test]
    fn acidic_group_atoms() {
        let m = mol("CC(=O)O");
        assert!(!is_acidic(&m, 0));
        assert!(is_acidic(&m, 1));
        assert!(is_acidic(&m, 2));
        assert!(is_acidic(&m, 3));
        // Ethanol O-H is not acidic.
        assert!(!is_acidic(&mol("CCO"), 2));
    }

    #[test]
    fn basic_centers() {
        assert!(is_basic(&mol("CCN"), 2));
        // Amide nitrogen is not basic.
        let amide = mol("CC(=O)N");
        assert!(!is_basic(&amide, 3));
        // Guanidine nitrogens are basic.
        let guanidine = mol("NC(=N)N");
        assert!(is_basic(&guanidine, 0));
        assert!(is_basic(&guanidine, 2));
        // Pyridine (aromatic) nitrogen is not flagged by this rule.
        assert!(!is_basic(&mol("c1ccncc1"), 3));
    }

    #[test]
    fn descriptor_values() {
        let d = compute_descriptors(&mol("C"));
        assert!((d.molecular_weight - 16.04).abs() < 0.01);

        let d = compute_descriptors(&mol("c1ccccc1"));
        assert_eq!(d.aromatic_ring_count, 1);
        assert_eq!(d.hbd_count, 0);

        let d = compute_descriptors(&mol("O"));
        assert_eq!(d.hbd_count, 1);
        assert_eq!(d.hba_count, 1);

        let d = compute_descriptors(&mol("c1ccc2ccccc2c1"));
        assert_eq!(d.ring_count, 2);
        assert_eq!(d.aromatic_ring_count, 2);

        let d = compute_descriptors(&mol("CCCC"));
        assert_eq!(d.rotatable_bond_estimate, 1);
    }

    #[test]
    fn template_text_rules() {
        let m = mol("CCO");
        let d = compute_descriptors(&m);
        let t1 = generate_template_text(&m, &d);
        let t2 = generate_template_text(&m, &d);
        assert_eq!(t1, t2);
        assert!(t1.contains("hydrogen bond donor"));
        assert!(template_text_well_formed(&t1));

        let m = mol("c1ccccc1");
        let t = generate_template_text(&m, &compute_descriptors(&m));
        assert!(t.contains("aromatic"));
        assert!(t.contains("1 ring"));
        assert!(template_text_well_formed(&t));
    }

    #[test]
    fn errors() {
        let m = mol("CC");
        assert_eq!(
            atom_features(&m, 5).unwrap_err(),
            FeaturizeError::AtomIndex(5, 2)
        );
        assert_eq!(
            bond_features(&m, 3).unwrap_err(),
            FeaturizeError::BondIndex(3, 1)
        );
    }
}
