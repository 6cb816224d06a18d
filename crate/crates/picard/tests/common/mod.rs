#![allow(dead_code)]

pub mod mutation;
pub mod oracle;

use std::sync::Arc;

use picard::catalog;
use picard::constructions::ModHom;

pub fn mod_hom(name: &str) -> ModHom {
    let h = catalog::hom(name).expect("catalog hom");
    ModHom::new(Arc::clone(&h.dom), Arc::clone(&h.cod), h.hom)
}

pub fn catalog_mod_homs() -> Vec<(String, ModHom)> {
    catalog::homs().into_iter().map(|h| (h.name, ModHom::new(h.dom, h.cod, h.hom))).collect()
}
