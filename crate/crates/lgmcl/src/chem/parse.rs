//! Hand-rolled SMILES parser for the organic benchmark subset: organic
//! atoms, bracket atoms with isotope/chirality/hydrogens/charge, bond
//! symbols `- = # : / \`, ring closures (including `%nn`), branches and
//! dot-separated components (the largest component is kept).

use super::elements;
use super::{Atom, Bond, BondOrder, Chirality, Molecule, Wedge};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    EmptyInput,
    UnclosedRingDigit(u8),
    UnmatchedParenthesis,
    UnknownElement(String),
    InvalidBracketAtom(String),
    Syntax(String),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("{} at offset {offset}", self.describe())]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offset into the input string.
    pub offset: usize,
}

impl ParseError {
    fn new(kind: ParseErrorKind, offset: usize) -> Self {
        ParseError { kind, offset }
    }

    fn describe(&self) -> String {
        match &self.kind {
            ParseErrorKind::EmptyInput => "empty SMILES".into(),
            ParseErrorKind::UnclosedRingDigit(d) => format!("unclosed ring digit {d}"),
            ParseErrorKind::UnmatchedParenthesis => "unmatched parenthesis".into(),
            ParseErrorKind::UnknownElement(s) => format!("unknown element symbol '{s}'"),
            ParseErrorKind::InvalidBracketAtom(m) => format!("invalid bracket atom: {m}"),
            ParseErrorKind::Syntax(m) => m.clone(),
        }
    }
}

/// A bond symbol read from the input, before order resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BondSym {
    Single,
    Double,
    Triple,
    Aromatic,
    Up,
    Down,
}

impl BondSym {
    fn order(self) -> BondOrder {
        match self {
            BondSym::Single | BondSym::Up | BondSym::Down => BondOrder::Single,
            BondSym::Double => BondOrder::Double,
            BondSym::Triple => BondOrder::Triple,
            BondSym::Aromatic => BondOrder::Aromatic,
        }
    }

    fn wedge(self) -> Wedge {
        match self {
            BondSym::Up => Wedge::Up,
            BondSym::Down => Wedge::Down,
            _ => Wedge::None,
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    atoms: Vec<Atom>,
    bonds: Vec<Bond>,
    /// Open ring closures: digit -> (atom, pending bond, offset of digit).
    open_rings: Vec<(u8, usize, Option<BondSym>, usize)>,
    /// Branch stack of previous-atom indices.
    stack: Vec<Option<usize>>,
    prev: Option<usize>,
    pending: Option<BondSym>,
}

pub fn parse_smiles(text: &str) -> Result<Molecule, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::new(ParseErrorKind::EmptyInput, 0));
    }
    let mut p = Parser {
        bytes: text.trim().as_bytes(),
        pos: 0,
        atoms: Vec::new(),
        bonds: Vec::new(),
        open_rings: Vec::new(),
        stack: Vec::new(),
        prev: None,
        pending: None,
    };
    p.run()?;
    Ok(largest_component(p.atoms, p.bonds))
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, kind: ParseErrorKind, offset: usize) -> ParseError {
        ParseError::new(kind, offset)
    }

    fn syntax(&self, msg: &str, offset: usize) -> ParseError {
        self.err(ParseErrorKind::Syntax(msg.into()), offset)
    }

    fn run(&mut self) -> Result<(), ParseError> {
        while let Some(c) = self.peek() {
            let at = self.pos;
            match c {
                b'(' => {
                    if self.pending.is_some() {
                        return Err(self.syntax("bond symbol before branch", at));
                    }
                    if self.prev.is_none() {
                        return Err(self.syntax("branch with no preceding atom", at));
                    }
                    self.stack.push(self.prev);
                    self.pos += 1;
                }
                b')' => {
                    if self.pending.is_some() {
                        return Err(self.syntax("dangling bond symbol", at));
                    }
                    match self.stack.pop() {
                        Some(prev) => self.prev = prev,
                        None => {
                            return Err(self.err(ParseErrorKind::UnmatchedParenthesis, at));
                        }
                    }
                    self.pos += 1;
                }
                b'.' => {
                    if self.pending.is_some() {
                        return Err(self.syntax("dangling bond symbol", at));
                    }
                    if !self.stack.is_empty() {
                        return Err(self.syntax("component separator inside branch", at));
                    }
                    self.prev = None;
                    self.pos += 1;
                }
                b'-' | b'=' | b'#' | b':' | b'/' | b'\\' => {
                    if self.pending.is_some() {
                        return Err(self.syntax("two bond symbols in a row", at));
                    }
                    self.pending = Some(match c {
                        b'-' => BondSym::Single,
                        b'=' => BondSym::Double,
                        b'#' => BondSym::Triple,
                        b':' => BondSym::Aromatic,
                        b'/' => BondSym::Up,
                        _ => BondSym::Down,
                    });
                    self.pos += 1;
                }
                b'0'..=b'9' => {
                    self.ring_closure(c - b'0', at)?;
                    self.pos += 1;
                }
                b'%' => {
                    let d1 = self.bytes.get(self.pos + 1).copied();
                    let d2 = self.bytes.get(self.pos + 2).copied();
                    match (d1, d2) {
                        (Some(a), Some(b)) if a.is_ascii_digit() && b.is_ascii_digit() => {
                            self.ring_closure((a - b'0') * 10 + (b - b'0'), at)?;
                            self.pos += 3;
                        }
                        _ => return Err(self.syntax("'%' needs two digits", at)),
                    }
                }
                b'[' => {
                    let atom = self.bracket_atom()?;
                    self.add_atom(atom, at)?;
                }
                _ => {
                    let atom = self.organic_atom()?;
                    self.add_atom(atom, at)?;
                }
            }
        }
        if let Some(&(digit, _, _, offset)) = self.open_rings.first() {
            return Err(self.err(ParseErrorKind::UnclosedRingDigit(digit), offset));
        }
        if !self.stack.is_empty() {
            return Err(self.err(ParseErrorKind::UnmatchedParenthesis, self.bytes.len()));
        }
        if self.pending.is_some() {
            return Err(self.syntax("dangling bond symbol", self.bytes.len()));
        }
        if self.atoms.is_empty() {
            return Err(self.err(ParseErrorKind::EmptyInput, 0));
        }
        Ok(())
    }

    /// Organic-subset atom outside brackets.
    fn organic_atom(&mut self) -> Result<Atom, ParseError> {
        let at = self.pos;
        let rest = &self.bytes[self.pos..];
        let two = if rest.len() >= 2 { &rest[..2] } else { &[] };
        let (element, aromatic, len) = match two {
            b"Cl" => (elements::CL, false, 2),
            b"Br" => (elements::BR, false, 2),
            _ => match rest[0] {
                b'B' => (elements::B, false, 1),
                b'C' => (elements::C, false, 1),
                b'N' => (elements::N, false, 1),
                b'O' => (elements::O, false, 1),
                b'P' => (elements::P, false, 1),
                b'S' => (elements::S, false, 1),
                b'F' => (elements::F, false, 1),
                b'I' => (elements::I, false, 1),
                b'b' => (elements::B, true, 1),
                b'c' => (elements::C, true, 1),
                b'n' => (elements::N, true, 1),
                b'o' => (elements::O, true, 1),
                b'p' => (elements::P, true, 1),
                b's' => (elements::S, true, 1),
                other => {
                    return Err(self.err(
                        ParseErrorKind::UnknownElement((other as char).to_string()),
                        at,
                    ));
                }
            },
        };
        self.pos += len;
        Ok(Atom {
            element,
            aromatic,
            formal_charge: 0,
            explicit_h: None,
            isotope: None,
            chirality: Chirality::None,
            index: 0,
        })
    }

    /// `[isotope? symbol chirality? Hcount? charge? :class?]`
    fn bracket_atom(&mut self) -> Result<Atom, ParseError> {
        let open = self.pos;
        let invalid = |p: &Self, msg: &str, off: usize| {
            p.err(ParseErrorKind::InvalidBracketAtom(msg.into()), off)
        };
        self.pos += 1; // '['

        let isotope = self.read_number();

        // Element symbol: uppercase + optional lowercase, or a lowercase
        // aromatic form (c, n, o, p, s, b, se, as).
        let sym_at = self.pos;
        let mut aromatic = false;
        let element = match self.peek() {
            Some(c) if c.is_ascii_uppercase() => {
                let mut sym = vec![c];
                self.pos += 1;
                if let Some(l) = self.peek() {
                    if l.is_ascii_lowercase() {
                        let candidate = String::from_utf8(vec![c, l]).unwrap();
                        if elements::atomic_number(&candidate).is_some() {
                            sym.push(l);
                            self.pos += 1;
                        }
                    }
                }
                let sym = String::from_utf8(sym).unwrap();
                elements::atomic_number(&sym)
                    .ok_or_else(|| self.err(ParseErrorKind::UnknownElement(sym), sym_at))?
            }
            Some(c) if c.is_ascii_lowercase() => {
                aromatic = true;
                let two = &self.bytes[self.pos..(self.pos + 2).min(self.bytes.len())];
                let (z, len) = match two {
                    b"se" => (elements::SE, 2),
                    b"as" => (elements::AS, 2),
                    _ => match c {
                        b'b' => (elements::B, 1),
                        b'c' => (elements::C, 1),
                        b'n' => (elements::N, 1),
                        b'o' => (elements::O, 1),
                        b'p' => (elements::P, 1),
                        b's' => (elements::S, 1),
                        other => {
                            return Err(self.err(
                                ParseErrorKind::UnknownElement((other as char).to_string()),
                                sym_at,
                            ));
                        }
                    },
                };
                self.pos += len;
                z
            }
            _ => return Err(invalid(self, "missing element symbol", self.pos)),
        };
        if aromatic && !elements::aromatic_capable(element) {
            return Err(invalid(self, "element cannot be aromatic", sym_at));
        }

        let mut chirality = Chirality::None;
        if self.peek() == Some(b'@') {
            self.pos += 1;
            let ext = &self.bytes[self.pos..(self.pos + 3).min(self.bytes.len())];
            if self.peek() == Some(b'@') {
                self.pos += 1;
                chirality = Chirality::Clockwise;
            } else if ext.len() == 3
                && matches!(&ext[..2], b"TH" | b"AL" | b"SP" | b"TB" | b"OH")
                && ext[2].is_ascii_digit()
            {
                self.pos += 2;
                self.read_number();
                chirality = Chirality::Other;
            } else {
                chirality = Chirality::CounterClockwise;
            }
        }

        let mut explicit_h = 0u8;
        if self.peek() == Some(b'H') {
            self.pos += 1;
            explicit_h = self.read_number().unwrap_or(1) as u8;
        }

        let mut charge = 0i32;
        match self.peek() {
            Some(sign @ (b'+' | b'-')) => {
                let unit = if sign == b'+' { 1 } else { -1 };
                self.pos += 1;
                if let Some(n) = self.read_number() {
                    charge = unit * n as i32;
                } else {
                    charge = unit;
                    while self.peek() == Some(sign) {
                        charge += unit;
                        self.pos += 1;
                    }
                }
            }
            _ => {}
        }
        if !(-4..=4).contains(&charge) {
            return Err(invalid(self, "formal charge out of range [-4, 4]", open));
        }

        // Atom class: parsed and ignored.
        if self.peek() == Some(b':') {
            self.pos += 1;
            if self.read_number().is_none() {
                return Err(invalid(self, "missing atom class number", self.pos));
            }
        }

        if self.peek() != Some(b']') {
            return Err(invalid(self, "expected ']'", self.pos));
        }
        self.pos += 1;

        Ok(Atom {
            element,
            aromatic,
            formal_charge: charge as i8,
            explicit_h: Some(explicit_h),
            isotope: isotope.map(|n| n as u16),
            chirality,
            index: 0,
        })
    }

    fn read_number(&mut self) -> Option<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()?
            .parse()
            .ok()
    }

    fn add_atom(&mut self, mut atom: Atom, at: usize) -> Result<(), ParseError> {
        atom.index = self.atoms.len();
        let idx = atom.index;
        self.atoms.push(atom);
        if let Some(prev) = self.prev {
            let sym = self.pending.take();
            self.push_bond(prev, idx, sym, at)?;
        } else {
            self.pending = None;
        }
        self.prev = Some(idx);
        Ok(())
    }

    fn ring_closure(&mut self, digit: u8, at: usize) -> Result<(), ParseError> {
        let here = match self.prev {
            Some(i) => i,
            None => return Err(self.syntax("ring closure with no preceding atom", at)),
        };
        let sym = self.pending.take();
        if let Some(slot) = self.open_rings.iter().position(|&(d, _, _, _)| d == digit) {
            let (_, other, other_sym, _) = self.open_rings.remove(slot);
            if other == here {
                return Err(self.syntax("ring closure to the same atom", at));
            }
            let resolved = match (other_sym, sym) {
                (Some(a), Some(b)) if a != b => {
                    return Err(self.syntax("conflicting ring-closure bond symbols", at));
                }
                (Some(a), _) => Some(a),
                (None, b) => b,
            };
            self.push_bond(other, here, resolved, at)?;
        } else {
            self.open_rings.push((digit, here, sym, at));
        }
        Ok(())
    }

    fn push_bond(
        &mut self,
        a: usize,
        b: usize,
        sym: Option<BondSym>,
        at: usize,
    ) -> Result<(), ParseError> {
        if self
            .bonds
            .iter()
            .any(|x| (x.a == a && x.b == b) || (x.a == b && x.b == a))
        {
            return Err(self.syntax("duplicate bond between atom pair", at));
        }
        let both_aromatic = self.atoms[a].aromatic && self.atoms[b].aromatic;
        let (order, wedge) = match sym {
            Some(s) => (s.order(), s.wedge()),
            None => (
                if both_aromatic {
                    BondOrder::Aromatic
                } else {
                    BondOrder::Single
                },
                Wedge::None,
            ),
        };
        if order == BondOrder::Aromatic && !both_aromatic {
            return Err(self.syntax("aromatic bond between non-aromatic atoms", at));
        }
        self.bonds.push(Bond {
            a,
            b,
            order,
            stereo: 0,
            wedge,
            index: self.bonds.len(),
        });
        Ok(())
    }
}

/// Keep the largest connected component (ties go to the one containing the
/// lowest atom index) and reindex atoms and bonds.
fn largest_component(atoms: Vec<Atom>, bonds: Vec<Bond>) -> Molecule {
    let n = atoms.len();
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(comp: &mut Vec<usize>, i: usize) -> usize {
        if comp[i] != i {
            let root = find(comp, comp[i]);
            comp[i] = root;
        }
        comp[i]
    }
    for bond in &bonds {
        let ra = find(&mut comp, bond.a);
        let rb = find(&mut comp, bond.b);
        if ra != rb {
            comp[ra.max(rb)] = ra.min(rb);
        }
    }
    let roots: Vec<usize> = (0..n).map(|i| find(&mut comp, i)).collect();
    let mut sizes = vec![0usize; n];
    for &r in &roots {
        sizes[r] += 1;
    }
    let best = (0..n).max_by_key(|&i| (sizes[i], std::cmp::Reverse(i))).unwrap();

    let mut remap = vec![usize::MAX; n];
    let mut kept_atoms = Vec::new();
    for (i, atom) in atoms.into_iter().enumerate() {
        if roots[i] == best {
            remap[i] = kept_atoms.len();
            let mut atom = atom;
            atom.index = kept_atoms.len();
            kept_atoms.push(atom);
        }
    }
    let mut kept_bonds = Vec::new();
    for bond in bonds {
        if remap[bond.a] != usize::MAX && remap[bond.b] != usize::MAX {
            let mut bond = bond;
            bond.a = remap[bond.a];
            bond.b = remap[bond.b];
            bond.index = kept_bonds.len();
            kept_bonds.push(bond);
        }
    }
    Molecule::new(kept_atoms, kept_bonds)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(s: &str) -> ParseErrorKind {
        parse_smiles(s).unwrap_err().kind
    }

    #[test]
    fn ethanol() {
        let mol = parse_smiles("CCO").unwrap();
        assert_eq!(mol.atom_count(), 3);
        assert_eq!(mol.bond_count(), 2);
        assert!(mol.bonds.iter().all(|b| b.order == BondOrder::Single));
    }

    #[test]
    fn cyclopropane() {
        let mol = parse_smiles("C1CC1").unwrap();
        assert_eq!(mol.atom_count(), 3);
        assert_eq!(mol.bond_count(), 3);
    }

    #[test]
    fn naphthalene_counts() {
        let mol = parse_smiles("c1ccc2ccccc2c1").unwrap();
        assert_eq!(mol.atom_count(), 10);
        assert_eq!(mol.bond_count(), 11);
        assert!(mol.atoms.iter().all(|a| a.aromatic));
        assert!(mol.bonds.iter().all(|b| b.order == BondOrder::Aromatic));
    }

    #[test]
    fn unclosed_ring_digit() {
        let err = parse_smiles("C1CC").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnclosedRingDigit(1));
        assert_eq!(err.offset, 1);
    }

    #[test]
    fn unmatched_parens() {
        assert_eq!(kinds("CC(C"), ParseErrorKind::UnmatchedParenthesis);
        assert_eq!(kinds("CC)C"), ParseErrorKind::UnmatchedParenthesis);
    }

    #[test]
    fn unknown_element() {
        assert!(matches!(kinds("CxC"), ParseErrorKind::UnknownElement(_)));
        assert!(matches!(kinds("[Xx]"), ParseErrorKind::UnknownElement(_)));
    }

    #[test]
    fn bracket_atoms() {
        let mol = parse_smiles("[NH4+]").unwrap();
        let atom = &mol.atoms[0];
        assert_eq!(atom.element, elements::N);
        assert_eq!(atom.formal_charge, 1);
        assert_eq!(atom.explicit_h, Some(4));

        let mol = parse_smiles("[13CH3-]").unwrap();
        let atom = &mol.atoms[0];
        assert_eq!(atom.isotope, Some(13));
        assert_eq!(atom.formal_charge, -1);
        assert_eq!(atom.explicit_h, Some(3));

        let mol = parse_smiles("[O--]").unwrap();
        assert_eq!(mol.atoms[0].formal_charge, -2);

        let mol = parse_smiles("[Fe+3]").unwrap();
        assert_eq!(mol.atoms[0].formal_charge, 3);
    }

    #[test]
    fn chirality_marks() {
        let mol = parse_smiles("C[C@H](N)C(=O)O").unwrap();
        assert_eq!(mol.atoms[1].chirality, Chirality::CounterClockwise);
        let mol = parse_smiles("C[C@@H](N)O").unwrap();
        assert_eq!(mol.atoms[1].chirality, Chirality::Clockwise);
    }

    #[test]
    fn invalid_brackets() {
        assert!(matches!(kinds("[C"), ParseErrorKind::InvalidBracketAtom(_)));
        assert!(matches!(kinds("[]"), ParseErrorKind::InvalidBracketAtom(_)));
        assert!(matches!(
            kinds("[N+5]"),
            ParseErrorKind::InvalidBracketAtom(_)
        ));
    }

    #[test]
    fn explicit_bonds() {
        let mol = parse_smiles("C#N").unwrap();
        assert_eq!(mol.bonds[0].order, BondOrder::Triple);
        let mol = parse_smiles("C=C").unwrap();
        assert_eq!(mol.bonds[0].order, BondOrder::Double);
    }

    #[test]
    fn directional_bonds_set_wedge() {
        let mol = parse_smiles("F/C=C/F").unwrap();
        assert_eq!(mol.bonds[0].wedge, Wedge::Up);
        assert_eq!(mol.bonds[0].order, BondOrder::Single);
        assert_eq!(mol.bonds[1].order, BondOrder::Double);
        let mol = parse_smiles("F/C=C\\F").unwrap();
        assert_eq!(mol.bonds[2].wedge, Wedge::Down);
    }

    #[test]
    fn percent_ring_closure() {
        let mol = parse_smiles("C%10CC%10").unwrap();
        assert_eq!(mol.bond_count(), 3);
        assert!(matches!(kinds("C%1C"), ParseErrorKind::Syntax(_)));
    }

    #[test]
    fn ring_bond_order_from_either_side() {
        let a = parse_smiles("C=1CCCCC=1").unwrap();
        assert_eq!(a.bonds.last().unwrap().order, BondOrder::Double);
        let b = parse_smiles("C1CCCCC=1").unwrap();
        assert_eq!(b.bonds.last().unwrap().order, BondOrder::Double);
        assert!(matches!(kinds("C=1CCCCC#1"), ParseErrorKind::Syntax(_)));
    }

    #[test]
    fn aromatic_bond_requires_aromatic_atoms() {
        assert!(matches!(kinds("C:C"), ParseErrorKind::Syntax(_)));
        // Explicit single bond between aromatic rings is fine.
        let mol = parse_smiles("c1ccccc1-c1ccccc1").unwrap();
        assert_eq!(mol.atom_count(), 12);
    }

    #[test]
    fn largest_component_kept() {
        let mol = parse_smiles("[Na+].CC(=O)O").unwrap();
        assert_eq!(mol.atom_count(), 4);
        assert_eq!(mol.atoms[0].element, elements::C);
        // Tie goes to the earlier component.
        let mol = parse_smiles("CC.OO").unwrap();
        assert_eq!(mol.atoms[0].element, elements::C);
    }

    #[test]
    fn ring_closure_across_dot_merges() {
        let mol = parse_smiles("C1.C1").unwrap();
        assert_eq!(mol.atom_count(), 2);
        assert_eq!(mol.bond_count(), 1);
    }

    #[test]
    fn empty_and_dangling() {
        assert_eq!(kinds(""), ParseErrorKind::EmptyInput);
        assert_eq!(kinds("   "), ParseErrorKind::EmptyInput);
        assert!(matches!(kinds("CC="), ParseErrorKind::Syntax(_)));
        assert!(matches!(kinds("C(=)C"), ParseErrorKind::Syntax(_)));
    }

    #[test]
    fn double_digit_reuse() {
        // Digit 1 is freed after closing and may be reused.
        let mol = parse_smiles("C1CC1C1CC1").unwrap();
        assert_eq!(mol.atom_count(), 6);
        assert_eq!(mol.bond_count(), 7);
    }
}
