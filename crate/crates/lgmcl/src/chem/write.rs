//! Plain (non-canonical) SMILES output, used by the synthetic corpus
//! generator. Round-trips through the parser: parse(write(m)) is
//! isomorphic to m.

use super::{elements, BondOrder, Chirality, Molecule};

pub fn write_smiles(mol: &Molecule) -> String {
    let n = mol.atom_count();
    if n == 0 {
        return String::new();
    }
    let mut visited = vec![false; n];
    let mut tree = vec![false; mol.bond_count()];
    build_tree(mol, 0, &mut visited, &mut tree);

    let mut closure_num = vec![0usize; mol.bond_count()];
    let mut next_closure = 1usize;
    let mut out = String::new();
    emit(
        mol,
        0,
        usize::MAX,
        &tree,
        &mut closure_num,
        &mut next_closure,
        &mut out,
    );
    out
}

fn build_tree(mol: &Molecule, v: usize, visited: &mut [bool], tree: &mut [bool]) {
    visited[v] = true;
    for (u, b) in mol.neighbors(v) {
        if !visited[u] {
            tree[b] = true;
            build_tree(mol, u, visited, tree);
        }
    }
}

fn emit(
    mol: &Molecule,
    v: usize,
    via_bond: usize,
    tree: &[bool],
    closure_num: &mut [usize],
    next_closure: &mut usize,
    out: &mut String,
) {
    if via_bond != usize::MAX {
        push_bond_symbol(mol, via_bond, out);
    }
    push_atom(mol, v, out);
    let nbrs = mol.neighbors(v);
    for &(_, b) in &nbrs {
        if !tree[b] {
            if closure_num[b] == 0 {
                closure_num[b] = *next_closure;
                *next_closure += 1;
            }
            push_bond_symbol(mol, b, out);
            let num = closure_num[b];
            if num < 10 {
                out.push_str(&num.to_string());
            } else {
                out.push_str(&format!("%{num:02}"));
            }
        }
    }
    for &(u, b) in &nbrs {
        if tree[b] && b != via_bond {
            out.push('(');
            emit(mol, u, b, tree, closure_num, next_closure, out);
            out.push(')');
        }
    }
}

fn push_bond_symbol(mol: &Molecule, bond: usize, out: &mut String) {
    let b = &mol.bonds[bond];
    let both_aromatic = mol.atoms[b.a].aromatic && mol.atoms[b.b].aromatic;
    match b.order {
        BondOrder::Single => {
            if both_aromatic {
                out.push('-');
            }
        }
        BondOrder::Double => out.push('='),
        BondOrder::Triple => out.push('#'),
        BondOrder::Aromatic => {}
    }
}

fn push_atom(mol: &Molecule, i: usize, out: &mut String) {
    let a = &mol.atoms[i];
    let bare_ok = a.formal_charge == 0
        && a.isotope.is_none()
        && a.explicit_h.is_none()
        && a.chirality == Chirality::None
        && if a.aromatic {
            matches!(
                a.element,
                elements::B | elements::C | elements::N | elements::O | elements::P | elements::S
            )
        } else {
            matches!(
                a.element,
                elements::B
                    | elements::C
                    | elements::N
                    | elements::O
                    | elements::P
                    | elements::S
                    | elements::F
                    | elements::CL
                    | elements::BR
                    | elements::I
            )
        };
    if bare_ok {
        if a.aromatic {
            out.push_str(&a.symbol().to_lowercase());
        } else {
            out.push_str(a.symbol());
        }
        return;
    }
    out.push('[');
    if let Some(iso) = a.isotope {
        out.push_str(&iso.to_string());
    }
    if a.aromatic {
        out.push_str(&a.symbol().to_lowercase());
    } else {
        out.push_str(a.symbol());
    }
    match a.chirality {
        Chirality::None | Chirality::Other => {}
        Chirality::Clockwise => out.push_str("@@"),
        Chirality::CounterClockwise => out.push('@'),
    }
    let h = mol.hydrogen_count(i);
    if h == 1 {
        out.push('H');
    } else if h > 1 {
        out.push('H');
        out.push_str(&h.to_string());
    }
    let q = a.formal_charge;
    if q != 0 {
        out.push(if q > 0 { '+' } else { '-' });
        if q.abs() > 1 {
            out.push_str(&q.abs().to_string());
        }
    }
    out.push(']');
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chem::{canonical_key, Molecule};

    #[test]
    fn round_trip_preserves_graph() {
        for s in [
            "CCO",
            "c1ccccc1",
            "c1ccc2ccccc2c1",
            "CC(=O)Oc1ccccc1C(=O)O",
            "[NH4+]",
            "C1CCC12CCCCC2",
            "c1cc[nH]c1",
            "CS(=O)(=O)N",
            "FC(F)(F)c1ccccc1",
        ] {
            let mol = Molecule::from_smiles(s).unwrap();
            let emitted = write_smiles(&mol);
            let reparsed = Molecule::from_smiles(&emitted).unwrap_or_else(|e| {
                panic!("writer output {emitted:?} for {s:?} fails to parse: {e}")
            });
            assert_eq!(
                canonical_key(&mol),
                canonical_key(&reparsed),
                "{s} -> {emitted}"
            );
        }
    }
}
