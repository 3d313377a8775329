use std::collections::BTreeMap;

use superlie::linalg::{Rref, SparseVec};
use superlie::module::{CoeffDescriptor, ModuleAtom};
use superlie::*;

fn w(domain: i64, codomain: i64, core: i64) -> Window {
    Window {
        domain: HalfInt::from_int(domain),
        codomain: HalfInt::from_int(codomain),
        core: HalfInt::from_int(core),
    }
}

struct Coords {
    map: BTreeMap<(BasisKey, ModuleAtom), u32>,
}

impl Coords {
    fn build(spec: &AlgebraSpec, degree: HalfInt, window: &Window) -> Coords {
        let mut map = BTreeMap::new();
        for key in spec.keys_in_window(window.core) {
            for parity in [Parity::Even, Parity::Odd] {
                for atom in CoeffDescriptor::TensorSquare.atoms_at(
                    spec,
                    key.degree() + degree,
                    parity,
                    window.codomain,
                ) {
                    let next = map.len() as u32;
                    map.insert((key, atom), next);
                }
            }
        }
        Coords { map }
    }

    fn vec(&self, table: &DerivationTable, window: &Window) -> SparseVec {
        let mut entries = Vec::new();
        for ((key, atom), &col) in &self.map {
            if let Some(value) = table.value_of(key) {
                for (a, c) in value.truncated(window.codomain).atoms() {
                    if a == *atom {
                        entries.push((col, c.clone()));
                    }
                }
            }
        }
        SparseVec::from_entries(entries)
    }
}

fn main() {
    let thv = preset("thv-centerless").unwrap();
    let window = w(8, 10, 4);
    let report = h1_window(&thv, &CoeffDescriptor::TensorSquare, HalfInt::ZERO, &window);
    println!(
        "thv d0: solutions {}, inner {}, quotient {}",
        report.solution_basis.len(),
        report.inner_basis.len(),
        report.quotient_dimension
    );

    let coords = Coords::build(&thv, HalfInt::ZERO, &window);
    let mut inner_rref = Rref::new();
    for t in &report.inner_basis {
        inner_rref.insert(coords.vec(t, &window));
    }
    let mut sol_rref = Rref::new();
    for t in &report.solution_basis {
        sol_rref.insert(coords.vec(t, &window));
    }
    println!("rank(S_core) = {}, rank(Inn_core) = {}", sol_rref.rank(), inner_rref.rank());

    for k in 0..6 {
        let table = rho(&RhoParams::unit(k), window);
        let v = coords.vec(&table, &window);
        let in_inner = inner_rref.reduce(v.clone()).is_zero();
        let in_sol = sol_rref.reduce(v).is_zero();
        println!("rho[{k}]: in span(inner_core) = {in_inner}, in span(S_core) = {in_sol}");
    }

    // which inner tables pollute: count inner tables whose core values need truncation
    let mut truncated_count = 0;
    for t in &report.inner_basis {
        let mut needs = false;
        for key in thv.keys_in_window(window.core) {
            if let Some(v) = t.value_of(&key) {
                if v != v.truncated(window.codomain) {
                    needs = true;
                }
            }
        }
        if needs {
            truncated_count += 1;
        }
    }
    println!("inner tables with truncated core values: {truncated_count} / {}", report.inner_basis.len());


    // hunt the artifact: reduce each solution by rref(inner ∪ rho) on core
    let mut known = Rref::new();
    for t in &report.inner_basis {
        known.insert(coords.vec(t, &window));
    }
    for k in 0..6 {
        known.insert(coords.vec(&rho(&RhoParams::unit(k), window), &window));
    }
    println!("rank(inner ∪ rho on core) = {}", known.rank());
    for (n, t) in report.solution_basis.iter().enumerate() {
        let residue = known.reduce(coords.vec(t, &window));
        if !residue.is_zero() {
            println!("solution {n} escapes inner+rho; table:");
            for (key, value) in t.iter() {
                let s = value.to_string();
                let shown = if s.len() > 200 { format!("{}...", &s[..200]) } else { s };
                println!("  {key} -> {shown}");
            }
        }
    }


    // full-window quotient experiment: coords over all domain keys
    let full_coords = {
        let mut map = std::collections::BTreeMap::new();
        for key in thv.keys_in_window(window.domain) {
            for parity in [Parity::Even, Parity::Odd] {
                for atom in CoeffDescriptor::TensorSquare.atoms_at(&thv, key.degree(), parity, window.codomain) {
                    let next = map.len() as u32;
                    map.insert((key, atom), next);
                }
            }
        }
        map
    };
    let full_vec = |table: &DerivationTable| -> SparseVec {
        let mut entries = Vec::new();
        for ((key, atom), &col) in &full_coords {
            if let Some(value) = table.value_of(key) {
                for (a, c) in value.truncated(window.codomain).atoms() {
                    if a == *atom {
                        entries.push((col, c.clone()));
                    }
                }
            }
        }
        SparseVec::from_entries(entries)
    };
    // absorbing span: ALL inner generators with atom components <= codomain,
    // truncated to the window
    let mut absorb = Rref::new();
    for parity in [Parity::Even, Parity::Odd] {
        for atom in CoeffDescriptor::TensorSquare.atoms_at(&thv, HalfInt::ZERO, parity, window.codomain) {
            let t = superlie::bialgebra::inner_table(&thv, &superlie::module::ModuleElem::basis(&atom), CoeffDescriptor::TensorSquare, window).unwrap();
            absorb.insert(full_vec(&t));
        }
    }
    println!("rank(absorbing inner span, full window) = {}", absorb.rank());
    let mut rho_residues = Rref::new();
    for k in 0..6 {
        let v = full_vec(&rho(&RhoParams::unit(k), window));
        let red = absorb.reduce(v);
        rho_residues.insert(red);
    }
    println!("rho residues mod absorbing span: rank = {} (want 6: no collapse)", rho_residues.rank());
    let mut classes = Rref::new();
    for t in &report.solution_basis {
        let red = absorb.reduce(full_vec(t));
        classes.insert(red);
    }
    println!("solution classes mod absorbing span: rank = {} (want 6)", classes.rank());

    println!("--- ns2 degree 1/2 ---");


    let ns2 = preset("ns2-centerless").unwrap();
    let window = w(8, 10, 3);
    let report = h1_window(&ns2, &CoeffDescriptor::TensorSquare, HalfInt::from_doubled(1), &window);
    println!(
        "ns2 d1/2: solutions {}, inner {}, quotient {}",
        report.solution_basis.len(),
        report.inner_basis.len(),
        report.quotient_dimension
    );
    for rep in report.quotient_representatives.iter().take(2) {
        println!("representative (parity {:?}):", rep.parity);
        for (key, value) in rep.iter() {
            println!("  {key} -> {value}");
        }
    }
}

#[allow(dead_code)]
fn artifact_hunt() {}
