use std::collections::BTreeMap;

use superlie::bialgebra::inner_table;
use superlie::linalg::{Rref, SparseVec};
use superlie::module::{CoeffDescriptor, ModuleAtom, ModuleElem};
use superlie::*;

fn w(domain: i64, codomain: i64, core: i64) -> Window {
    Window {
        domain: HalfInt::from_int(domain),
        codomain: HalfInt::from_int(codomain),
        core: HalfInt::from_int(core),
    }
}

fn main() {
    let thv = preset("thv-centerless").unwrap();
    let window = w(8, 10, 4);

    // coordinates over all domain keys, truncated atoms
    let mut coords: BTreeMap<(BasisKey, ModuleAtom), u32> = BTreeMap::new();
    for key in thv.keys_in_window(window.domain) {
        for parity in [Parity::Even, Parity::Odd] {
            for atom in
                CoeffDescriptor::TensorSquare.atoms_at(&thv, key.degree(), parity, window.codomain)
            {
                let next = coords.len() as u32;
                coords.insert((key, atom), next);
            }
        }
    }
    let base = coords.len() as u32;

    let vec_of = |table: &DerivationTable, marker: Option<u32>| -> SparseVec {
        let mut entries = Vec::new();
        for ((key, atom), &col) in &coords {
            if let Some(value) = table.value_of(key) {
                for (a, c) in value.truncated(window.codomain).atoms() {
                    if a == *atom {
                        entries.push((col, c));
                        break;
                    }
                }
            }
        }
        if let Some(m) = marker {
            entries.push((base + m, scalar::one()));
        }
        SparseVec::from_entries(entries)
    };

    // augmented system: inner generators (unmarked), then the six rho tables
    // marked in extra coordinates. A dependency shows up as a row supported
    // only on marker columns.
    let atoms: Vec<ModuleAtom> = [Parity::Even, Parity::Odd]
        .into_iter()
        .flat_map(|p| CoeffDescriptor::TensorSquare.atoms_at(&thv, HalfInt::ZERO, p, window.codomain))
        .collect();
    let mut rref = Rref::new();
    for atom in &atoms {
        let t = inner_table(&thv, &ModuleElem::basis(atom), CoeffDescriptor::TensorSquare, window)
            .unwrap();
        rref.insert(vec_of(&t, None));
    }
    println!("inner span rank = {}", rref.rank());
    let names = ["alpha", "alpha_dag", "beta", "beta_dag", "gamma", "gamma_dag"];
    for k in 0..6 {
        let t = rho(&RhoParams::unit(k), window);
        rref.insert(vec_of(&t, Some(k as u32)));
    }
    for row in rref.rows() {
        if row.entries.iter().all(|(c, _)| *c >= base) {
            let combo: Vec<String> = row
                .entries
                .iter()
                .map(|(c, v)| format!("{}*{}", v, names[(*c - base) as usize]))
                .collect();
            println!("collapsed rho combination: {}", combo.join(" + "));
        }
    }
}
