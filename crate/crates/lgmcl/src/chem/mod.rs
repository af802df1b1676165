//! Molecular graphs parsed from SMILES: atoms, bonds, rings, implicit
//! hydrogens and Bemis-Murcko scaffolds.

pub mod elements;
mod parse;
mod rings;
mod scaffold;
mod write;

pub use parse::{parse_smiles, ParseError, ParseErrorKind};
pub use rings::{perceive_rings, ring_count};
pub use scaffold::{
    bemis_murcko_scaffold, canonical_key, canonical_ranks, scaffold_key, scaffold_key_of,
};
pub use write::write_smiles;

/// Tetrahedral chirality mark carried by a bracket atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Chirality {
    #[default]
    None,
    /// `@@`
    Clockwise,
    /// `@`
    CounterClockwise,
    /// Extended marks (`@TH1`, `@AL1`, ...) we record but do not interpret.
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BondOrder {
    Single,
    Double,
    Triple,
    Aromatic,
}

impl BondOrder {
    /// Contribution to the valence sum. Aromatic bonds count 1.5; the total
    /// is rounded up before comparing against default valences.
    pub fn valence(self) -> f64 {
        match self {
            BondOrder::Single => 1.0,
            BondOrder::Double => 2.0,
            BondOrder::Triple => 3.0,
            BondOrder::Aromatic => 1.5,
        }
    }
}

/// Up/down direction marks (`/`, `\`). Cis/trans resolution is out of
/// scope; the marks feed the wedge feature block only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Wedge {
    #[default]
    None,
    Up,
    Down,
}

#[derive(Debug, Clone)]
pub struct Atom {
    /// Atomic number, 1..=118.
    pub element: u8,
    pub aromatic: bool,
    pub formal_charge: i8,
    /// Hydrogen count written in a bracket atom. `None` for organic-subset
    /// atoms, whose hydrogens are implicit.
    pub explicit_h: Option<u8>,
    pub isotope: Option<u16>,
    pub chirality: Chirality,
    pub index: usize,
}

impl Atom {
    pub fn symbol(&self) -> &'static str {
        elements::symbol(self.element)
    }
}

#[derive(Debug, Clone)]
pub struct Bond {
    pub a: usize,
    pub b: usize,
    pub order: BondOrder,
    /// Stereo code 0-5; stays 0 for everything we parse (cis/trans
    /// resolution is out of scope).
    pub stereo: u8,
    pub wedge: Wedge,
    pub index: usize,
}

impl Bond {
    pub fn other(&self, atom: usize) -> usize {
        if atom == self.a {
            self.b
        } else {
            self.a
        }
    }
}

/// Ring membership flags and per-atom smallest-ring sizes.
#[derive(Debug, Clone, Default)]
pub struct RingInfo {
    pub atom_in_ring: Vec<bool>,
    pub bond_in_ring: Vec<bool>,
    /// Sorted, deduplicated smallest-ring sizes per atom. All detected
    /// sizes are recorded; the featurizer keeps only {3,4,5,6}.
    pub atom_ring_sizes: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct Molecule {
    pub atoms: Vec<Atom>,
    pub bonds: Vec<Bond>,
    pub rings: RingInfo,
    /// Per-atom implicit hydrogen count, filled by
    /// [`assign_implicit_hydrogens`].
    pub implicit_h: Vec<u8>,
    /// Atoms whose bond-order sum exceeds every admissible valence.
    pub overvalent: Vec<bool>,
}

impl Molecule {
    pub fn new(atoms: Vec<Atom>, bonds: Vec<Bond>) -> Self {
        let n = atoms.len();
        Molecule {
            atoms,
            bonds,
            rings: RingInfo::default(),
            implicit_h: vec![0; n],
            overvalent: vec![false; n],
        }
    }

    /// Parse, assign implicit hydrogens and perceive rings in one call.
    pub fn from_smiles(text: &str) -> Result<Molecule, ParseError> {
        let mol = parse_smiles(text)?;
        let mol = assign_implicit_hydrogens(mol);
        Ok(perceive_rings_into(mol))
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn bond_count(&self) -> usize {
        self.bonds.len()
    }

    /// Neighbor list as (atom index, bond index) pairs, in bond order.
    pub fn neighbors(&self, atom: usize) -> Vec<(usize, usize)> {
        self.bonds
            .iter()
            .filter(|b| b.a == atom || b.b == atom)
            .map(|b| (b.other(atom), b.index))
            .collect()
    }

    /// Heavy-atom degree.
    pub fn degree(&self, atom: usize) -> usize {
        self.bonds
            .iter()
            .filter(|b| b.a == atom || b.b == atom)
            .count()
    }

    /// Bond-order sum at an atom (aromatic bonds count 1.5).
    pub fn bond_order_sum(&self, atom: usize) -> f64 {
        self.bonds
            .iter()
            .filter(|b| b.a == atom || b.b == atom)
            .map(|b| b.order.valence())
            .sum()
    }

    /// Total hydrogen count: bracket count verbatim, implicit otherwise.
    pub fn hydrogen_count(&self, atom: usize) -> u8 {
        match self.atoms[atom].explicit_h {
            Some(h) => h,
            None => self.implicit_h[atom],
        }
    }

    /// Sum of atomic weights including hydrogens.
    pub fn molecular_weight(&self) -> f64 {
        let heavy: f64 = self.atoms.iter().map(|a| elements::weight(a.element)).sum();
        let hydrogens: f64 = (0..self.atoms.len())
            .map(|i| self.hydrogen_count(i) as f64 * elements::HYDROGEN_WEIGHT)
            .sum();
        heavy + hydrogens
    }
}

/// Fill per-atom implicit hydrogen counts.
///
/// For organic-subset atoms the count is the smallest admissible default
/// valence at or above the (charge-adjusted) bond-order sum, minus that
/// sum, clamped at zero. Charge raises the valence of the N family and
/// lowers it for the O family. Bracket atoms keep their written hydrogen
/// count and get zero implicit hydrogens. Over-valent atoms get zero and a
/// diagnostic flag.
pub fn assign_implicit_hydrogens(mut mol: Molecule) -> Molecule {
    let n = mol.atoms.len();
    let mut implicit = vec![0u8; n];
    let mut over = vec![false; n];
    for i in 0..n {
        let atom = &mol.atoms[i];
        let order_sum = mol.bond_order_sum(i).ceil() as i32;
        let valences = elements::default_valences(atom.element);
        if valences.is_empty() {
            continue;
        }
        let adjust = match atom.element {
            elements::N | elements::P | elements::AS => atom.formal_charge as i32,
            elements::O | elements::S | elements::SE | elements::TE => {
                -(atom.formal_charge.abs() as i32)
            }
            _ => 0,
        };
        let mut target = None;
        for &v in valences {
            let adjusted = v as i32 + adjust;
            if adjusted >= order_sum {
                target = Some(adjusted);
                break;
            }
        }
        match target {
            Some(v) => implicit[i] = (v - order_sum).max(0) as u8,
            None => over[i] = true,
        }
        if atom.explicit_h.is_some() {
            implicit[i] = 0;
        }
    }
    mol.implicit_h = implicit;
    mol.overvalent = over;
    mol
}

/// Run ring perception and store the result on the molecule.
pub fn perceive_rings_into(mut mol: Molecule) -> Molecule {
    mol.rings = perceive_rings(&mol);
    mol
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn implicit_h_on_plain_atoms() {
        let mol = Molecule::from_smiles("C").unwrap();
        assert_eq!(mol.implicit_h[0], 4);
        let mol = Molecule::from_smiles("N").unwrap();
        assert_eq!(mol.implicit_h[0], 3);
        let mol = Molecule::from_smiles("O").unwrap();
        assert_eq!(mol.implicit_h[0], 2);
    }

    #[test]
    fn bracket_atom_h_is_verbatim() {
        let mol = Molecule::from_smiles("[NH4+]").unwrap();
        assert_eq!(mol.atoms[0].explicit_h, Some(4));
        assert_eq!(mol.implicit_h[0], 0);
        assert_eq!(mol.hydrogen_count(0), 4);
    }

    #[test]
    fn aromatic_carbon_gets_one_h() {
        let mol = Molecule::from_smiles("c1ccccc1").unwrap();
        for i in 0..6 {
            assert_eq!(mol.implicit_h[i], 1);
        }
    }

    #[test]
    fn fusion_carbons_get_no_h() {
        // Naphthalene: the two shared carbons have three aromatic bonds.
        let mol = Molecule::from_smiles("c1ccc2ccccc2c1").unwrap();
        let h_total: u32 = (0..10).map(|i| mol.implicit_h[i] as u32).sum();
        assert_eq!(h_total, 8);
    }

    #[test]
    fn sulfur_picks_higher_valence() {
        // Sulfone sulfur: bond-order sum 6 -> valence 6, zero H.
        let mol = Molecule::from_smiles("CS(=O)(=O)C").unwrap();
        assert_eq!(mol.implicit_h[1], 0);
        assert!(!mol.overvalent[1]);
    }

    #[test]
    fn overvalent_atom_flagged() {
        // Five single bonds on carbon.
        let mol = Molecule::from_smiles("C(C)(C)(C)(C)C").unwrap();
        assert!(mol.overvalent[0]);
        assert_eq!(mol.implicit_h[0], 0);
    }

    #[test]
    fn methane_weight() {
        let mol = Molecule::from_smiles("C").unwrap();
        assert!((mol.molecular_weight() - 16.043).abs() < 0.01);
    }
}
