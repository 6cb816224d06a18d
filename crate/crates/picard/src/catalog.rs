//! Named small instances: cyclic rings, their discrete and one-object modules, and a few homs.

use std::sync::Arc;

use crate::error::Result;
use crate::rmodule::{build_deloop_module, build_discrete_module, strict_hom, Module};
use crate::tworing::{build_discrete_ring, RingTable, TwoRing};
use crate::twogroup::{build_deloop, build_discrete, GroupTable, Hom, TwoGroup};

pub fn ring(n: usize) -> Arc<TwoRing> {
    Arc::new(build_discrete_ring(&RingTable::cyclic(n)).expect("cyclic rings are rings"))
}

fn cyclic_action(nr: usize, k: usize) -> Vec<usize> {
    (0..nr * k).map(|i| (i / k) * (i % k) % k).collect()
}

/// `D(Z/k)` over `ring`, with `r·m = rm mod k`.
pub fn discrete(ring: &Arc<TwoRing>, k: usize) -> Result<Module> {
    build_discrete_module(ring.clone(), &GroupTable::cyclic(k), &cyclic_action(ring.n(), k))
}

/// `B(Z/k)` over `ring`, with `1_r·h = rh mod k`.
pub fn deloop(ring: &Arc<TwoRing>, k: usize) -> Result<Module> {
    build_deloop_module(ring.clone(), &GroupTable::cyclic(k), &cyclic_action(ring.n(), k))
}

pub fn two_groups() -> Vec<(String, TwoGroup)> {
    let mut out = Vec::new();
    for n in [1, 2, 3, 4, 6] {
        out.push((format!("D{n}"), build_discrete(&GroupTable::cyclic(n)).unwrap()));
    }
    for m in [1, 2, 4] {
        out.push((format!("B{m}"), build_deloop(&GroupTable::cyclic(m)).unwrap()));
    }
    out
}

pub fn rings() -> Vec<(String, Arc<TwoRing>)> {
    [2, 4, 6].into_iter().map(|n| (format!("Z{n}"), ring(n))).collect()
}

/// Every `D(Z/k)` and `B(Z/k)` over `Z/n` with `k | n` and `B` only for `k ∈ {1,2,4}`.
pub fn modules() -> Vec<(String, Arc<Module>)> {
    let mut out = Vec::new();
    for (rname, r) in rings() {
        let n = r.n();
        for k in [1, 2, 3, 4, 6].into_iter().filter(|k| n % k == 0) {
            out.push((format!("D{k}/{rname}"), Arc::new(discrete(&r, k).unwrap())));
        }
        for k in [1, 2, 4].into_iter().filter(|k| n % k == 0) {
            out.push((format!("B{k}/{rname}"), Arc::new(deloop(&r, k).unwrap())));
        }
    }
    out
}

pub fn module(name: &str) -> Option<Arc<Module>> {
    modules().into_iter().find(|(n, _)| n == name).map(|(_, m)| m)
}

#[derive(Debug, Clone)]
pub struct CatalogHom {
    pub name: String,
    pub dom: Arc<Module>,
    pub cod: Arc<Module>,
    pub hom: Hom,
}

fn on_discrete(dom: Arc<Module>, cod: Arc<Module>, name: &str, f: impl Fn(usize) -> usize) -> CatalogHom {
    let omap: Vec<usize> = (0..dom.n()).map(f).collect();
    let mmap = (0..dom.m()).map(|x| cod.carrier.id(omap[dom.carrier.base.src(x)])).collect();
    let hom = strict_hom(&dom, &cod, omap, mmap);
    CatalogHom { name: name.into(), dom, cod, hom }
}

fn on_deloop(dom: Arc<Module>, cod: Arc<Module>, name: &str, f: impl Fn(usize) -> usize) -> CatalogHom {
    let hom = strict_hom(&dom, &cod, vec![0], (0..dom.m()).map(f).collect());
    CatalogHom { name: name.into(), dom, cod, hom }
}

/// The named homs used throughout the tests and the CLI.
pub fn homs() -> Vec<CatalogHom> {
    let m = |s: &str| module(s).expect("catalog module");
    vec![
        on_discrete(m("D2/Z2"), m("D2/Z2"), "id_D2", |x| x),
        on_discrete(m("D2/Z6"), m("D3/Z6"), "zero_D2_D3", |_| 0),
        on_discrete(m("D2/Z4"), m("D4/Z4"), "times2_D2_D4", |x| 2 * x),
        on_discrete(m("D4/Z4"), m("D2/Z4"), "mod2_D4_D2", |x| x % 2),
        on_deloop(m("B4/Z4"), m("B2/Z4"), "mod2_B4_B2", |h| h % 2),
        on_deloop(m("B2/Z4"), m("B4/Z4"), "times2_B2_B4", |h| 2 * h),
        on_deloop(m("B2/Z2"), m("B2/Z2"), "id_B2", |h| h),
    ]
}

pub fn hom(name: &str) -> Option<CatalogHom> {
    homs().into_iter().find(|h| h.name == name)
}
