//! Periodic-table symbol recognition, standard atomic weights and
//! organic-subset default valences.

/// Symbols indexed by atomic number - 1 (H = 1 .. Og = 118).
pub const SYMBOLS: [&str; 118] = [
    "H", "He", "Li", "Be", "B", "C", "N", "O", "F", "Ne", "Na", "Mg", "Al", "Si", "P", "S", "Cl",
    "Ar", "K", "Ca", "Sc", "Ti", "V", "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As",
    "Se", "Br", "Kr", "Rb", "Sr", "Y", "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd", "In",
    "Sn", "Sb", "Te", "I", "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd", "Pm", "Sm", "Eu", "Gd", "Tb",
    "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf", "Ta", "W", "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl",
    "Pb", "Bi", "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U", "Np", "Pu", "Am", "Cm", "Bk",
    "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh", "Hs", "Mt", "Ds", "Rg", "Cn",
    "Nh", "Fl", "Mc", "Lv", "Ts", "Og",
];

/// IUPAC standard atomic weights (conventional values where an interval is
/// published; mass number of the most stable isotope for elements without
/// stable isotopes). Indexed by atomic number - 1.
pub const WEIGHTS: [f64; 118] = [
    1.008, 4.003, 6.94, 9.012, 10.81, 12.011, 14.007, 15.999, 18.998, 20.180, 22.990, 24.305,
    26.982, 28.085, 30.974, 32.06, 35.45, 39.948, 39.098, 40.078, 44.956, 47.867, 50.942, 51.996,
    54.938, 55.845, 58.933, 58.693, 63.546, 65.38, 69.723, 72.630, 74.922, 78.971, 79.904, 83.798,
    85.468, 87.62, 88.906, 91.224, 92.906, 95.95, 98.0, 101.07, 102.906, 106.42, 107.868, 112.414,
    114.818, 118.710, 121.760, 127.60, 126.904, 131.293, 132.905, 137.327, 138.905, 140.116,
    140.908, 144.242, 145.0, 150.36, 151.964, 157.25, 158.925, 162.500, 164.930, 167.259, 168.934,
    173.045, 174.967, 178.486, 180.948, 183.84, 186.207, 190.23, 192.217, 195.084, 196.967,
    200.592, 204.38, 207.2, 208.980, 209.0, 210.0, 222.0, 223.0, 226.0, 227.0, 232.038, 231.036,
    238.029, 237.0, 244.0, 243.0, 247.0, 247.0, 251.0, 252.0, 257.0, 258.0, 259.0, 262.0, 267.0,
    268.0, 269.0, 270.0, 269.0, 278.0, 281.0, 282.0, 285.0, 286.0, 289.0, 290.0, 293.0, 294.0,
    294.0,
];

pub const HYDROGEN_WEIGHT: f64 = 1.008;

/// Atomic number for a case-sensitive symbol, if recognized.
pub fn atomic_number(symbol: &str) -> Option<u8> {
    SYMBOLS
        .iter()
        .position(|&s| s == symbol)
        .map(|i| (i + 1) as u8)
}

pub fn symbol(z: u8) -> &'static str {
    SYMBOLS[(z as usize) - 1]
}

pub fn weight(z: u8) -> f64 {
    WEIGHTS[(z as usize) - 1]
}

pub const B: u8 = 5;
pub const C: u8 = 6;
pub const N: u8 = 7;
pub const O: u8 = 8;
pub const F: u8 = 9;
pub const SI: u8 = 14;
pub const P: u8 = 15;
pub const S: u8 = 16;
pub const CL: u8 = 17;
pub const AS: u8 = 33;
pub const SE: u8 = 34;
pub const BR: u8 = 35;
pub const TE: u8 = 52;
pub const I: u8 = 53;
pub const AT: u8 = 85;

/// Elements that may appear lowercase (aromatic) inside brackets.
pub fn aromatic_capable(z: u8) -> bool {
    matches!(z, B | C | N | O | P | S | SE | AS)
}

/// Default valences for the organic subset. Multi-valent elements list all
/// admissible values in increasing order; the implicit-hydrogen rule picks
/// the smallest one at or above the bond-order sum.
pub fn default_valences(z: u8) -> &'static [u8] {
    match z {
        B => &[3],
        C => &[4],
        N => &[3],
        O => &[2],
        P => &[3, 5],
        S => &[2, 4, 6],
        F | CL | BR | I | AT => &[1],
        _ => &[],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_symbols() {
        for z in 1..=118u8 {
            assert_eq!(atomic_number(symbol(z)), Some(z));
        }
    }

    #[test]
    fn unknown_symbol_rejected() {
        assert_eq!(atomic_number("Xx"), None);
        assert_eq!(atomic_number("cl"), None);
    }

    #[test]
    fn carbon_weight() {
        assert!((weight(C) - 12.011).abs() < 1e-9);
    }
}
