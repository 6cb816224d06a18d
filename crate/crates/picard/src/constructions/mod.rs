//! Kernels, cokernels, pips, copips, roots, coroots, image factorizations and the Puppe comparisons.
//!
//! Every construction produces explicit tables. Most new modules are either a *lift* (new
//! objects over a parent, morphisms drawn from the parent's hom-sets) or a quotient of a
//! parent by a relation on morphisms; [`assemble`] turns a [`Shape`] into a [`Module`].

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groupoid::{congruence_closure, quotient_from_classes, Groupoid, MorDecl, MorRelation, Quotient, UnionFind};
use crate::rmodule::{validate_mod_hom, validate_mod_two_morphism, zero_hom, Module};
use crate::tworing::TwoRing;
use crate::twogroup::{Hom, TwoGroup, TwoMor};

mod cokernel;
mod image;
mod kernel;
mod pip;
mod puppe;

pub use cokernel::{cokernel, cokernel_compatible, cokernel_factor, cokernel_psi, CokernelResult};
pub use image::{factorize, factorize_pl, im1, im1_pl, im2, im2_pl, FactorFlags, Factorization, Triples};
pub use kernel::{kernel, kernel_compatible, kernel_factor, kernel_psi, KernelResult};
pub use pip::{copip, coroot, pip, root, CopipResult, CorootResult, PipResult, RootResult};
pub use puppe::{puppe_catalog, puppe_check, puppe_check_with};

/// A hom `dom → cod` bundled with its endpoints.
#[derive(Debug, Clone)]
pub struct ModHom {
    pub dom: Arc<Module>,
    pub cod: Arc<Module>,
    pub hom: Hom,
}

impl ModHom {
    pub fn new(dom: Arc<Module>, cod: Arc<Module>, hom: Hom) -> Self {
        ModHom { dom, cod, hom }
    }

    /// Error unless the hom passes every check.
    pub fn require_valid(&self) -> Result<()> {
        let rep = validate_mod_hom(&self.dom, &self.cod, &self.hom)?;
        let failed = rep.failures().next().map(|e| e.axiom.clone());
        match failed {
            None => Ok(()),
            Some(a) => Err(Error::MalformedTable(format!("input hom fails {a}"))),
        }
    }
}

/// Result of a factoring through a kernel or cokernel.
#[derive(Debug, Clone)]
pub struct Factored {
    pub g_prime: Hom,
    pub phi_prime: TwoMor,
}

/// Uniqueness data for the comparison 2-morphism ψ.
#[derive(Debug, Clone)]
pub struct PsiResult {
    pub psi: TwoMor,
    /// Number of parallel 2-morphisms satisfying the defining equation (1 when unique).
    pub solutions: usize,
}

/// Check `e: f ⇒ g` for homs `d → c`; the error kind is BOUNDARY.
pub(crate) fn require_boundary(d: &Module, c: &Module, f: &Hom, g: &Hom, e: &TwoMor, what: &str) -> Result<()> {
    let rep = validate_mod_two_morphism(d, c, f, g, e).map_err(|x| Error::Boundary(format!("{what}: {x}")))?;
    let failed = rep.failures().next().map(|x| x.axiom.clone());
    match failed {
        None => Ok(()),
        Some(a) => Err(Error::Boundary(format!("{what} fails {a}"))),
    }
}

pub(crate) fn zero(d: &Module, c: &Module) -> Hom {
    zero_hom(d, c).expect("same ring")
}

/// Structure data of a module under construction. Morphism-valued entries return `None` when
/// the construction has no morphism with the required endpoints.
pub(crate) trait Shape {
    fn unit(&self) -> usize;
    fn plus(&self, a: usize, b: usize) -> usize;
    fn act(&self, r: usize, x: usize) -> usize;
    fn plus_mor(&self, f: usize, g: usize) -> Option<usize>;
    fn act_mor(&self, rho: usize, f: usize) -> Option<usize>;
    fn assoc(&self, a: usize, b: usize, c: usize) -> Option<usize>;
    fn lunit(&self, a: usize) -> Option<usize>;
    fn runit(&self, a: usize) -> Option<usize>;
    fn sym(&self, a: usize, b: usize) -> Option<usize>;
    fn adist(&self, r: usize, x: usize, y: usize) -> Option<usize>;
    fn bdist(&self, r: usize, s: usize, x: usize) -> Option<usize>;
    fn bassoc(&self, r: usize, s: usize, x: usize) -> Option<usize>;
    fn iunit(&self, x: usize) -> Option<usize>;
    fn zzero(&self, r: usize) -> Option<usize>;
}

fn need(v: Option<usize>, what: &str) -> Result<usize> {
    v.ok_or_else(|| Error::MalformedTable(format!("construction has no {what} morphism")))
}

/// Fill every table of a module from a shape; duals and η are found by search.
pub(crate) fn assemble(ring: Arc<TwoRing>, base: Groupoid, sh: &dyn Shape) -> Result<Module> {
    let (n, m) = (base.n_obj(), base.n_mor());
    let (nr, mr) = (ring.n(), ring.m());
    let mut plus_obj = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            plus_obj.push(sh.plus(a, b));
        }
    }
    let mut plus_mor = Vec::with_capacity(m * m);
    for f in 0..m {
        for g in 0..m {
            plus_mor.push(need(sh.plus_mor(f, g), "tensor")?);
        }
    }
    let (mut assoc, mut sym) = (Vec::with_capacity(n * n * n), Vec::with_capacity(n * n));
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                assoc.push(need(sh.assoc(a, b, c), "associator")?);
            }
            sym.push(need(sh.sym(a, b), "symmetry")?);
        }
    }
    let lunit = (0..n).map(|a| need(sh.lunit(a), "left unitor")).collect::<Result<Vec<_>>>()?;
    let runit = (0..n).map(|a| need(sh.runit(a), "right unitor")).collect::<Result<Vec<_>>>()?;
    let unit = sh.unit();
    let mut dual = Vec::with_capacity(n);
    let mut eta = Vec::with_capacity(n);
    for a in 0..n {
        let (b, e) = (0..n)
            .find_map(|b| base.hom(plus_obj[b * n + a], unit).first().map(|&e| (b, e)))
            .ok_or_else(|| Error::NotClosed(format!("object {} has no additive inverse", base.obj_name(a))))?;
        dual.push(b);
        eta.push(e);
    }
    let carrier = TwoGroup { base, plus_obj, plus_mor, unit, assoc, lunit, runit, sym, dual, eta };

    let act_obj = (0..nr * n).map(|i| sh.act(i / n, i % n)).collect();
    let act_mor = (0..mr * m).map(|i| need(sh.act_mor(i / m, i % m), "action")).collect::<Result<Vec<_>>>()?;
    let adist = (0..nr * n * n)
        .map(|i| need(sh.adist(i / (n * n), (i / n) % n, i % n), "distributor"))
        .collect::<Result<Vec<_>>>()?;
    let bdist = (0..nr * nr * n)
        .map(|i| need(sh.bdist(i / (nr * n), (i / n) % nr, i % n), "distributor"))
        .collect::<Result<Vec<_>>>()?;
    let bassoc = (0..nr * nr * n)
        .map(|i| need(sh.bassoc(i / (nr * n), (i / n) % nr, i % n), "action associator"))
        .collect::<Result<Vec<_>>>()?;
    let iunit = (0..n).map(|x| need(sh.iunit(x), "action unitor")).collect::<Result<Vec<_>>>()?;
    let zzero = (0..nr).map(|r| need(sh.zzero(r), "action zero")).collect::<Result<Vec<_>>>()?;
    Ok(Module { ring, carrier, act_obj, act_mor, adist, bdist, bassoc, iunit, zzero })
}

/// New objects over a parent groupoid; a morphism is a parent morphism between the underlying
/// objects that passes an admissibility test.
#[derive(Debug, Clone)]
pub(crate) struct Lift {
    pub groupoid: Groupoid,
    pub under: Vec<usize>,
    /// `(source, target, parent morphism)`
    pub mors: Vec<(usize, usize, usize)>,
    index: HashMap<(usize, usize, usize), usize>,
}

impl Lift {
    pub fn new(
        parent: &Groupoid,
        objects: Vec<String>,
        under: Vec<usize>,
        admissible: impl Fn(usize, usize, usize) -> bool,
    ) -> Result<Lift> {
        let n = objects.len();
        let mut mors = Vec::new();
        let mut index = HashMap::new();
        for s in 0..n {
            for t in 0..n {
                for &p in parent.hom(under[s], under[t]) {
                    if admissible(s, t, p) {
                        index.insert((s, t, p), mors.len());
                        mors.push((s, t, p));
                    }
                }
            }
        }
        let decls: Vec<MorDecl> = mors
            .iter()
            .map(|&(s, t, p)| (format!("{}@{}>{}", parent.mor_name(p), objects[s], objects[t]), s, t))
            .collect();
        let id_of = (0..n)
            .map(|s| {
                index
                    .get(&(s, s, parent.id(under[s])))
                    .copied()
                    .ok_or_else(|| Error::MalformedTable(format!("identity of {} is not admissible", objects[s])))
            })
            .collect::<Result<Vec<_>>>()?;
        let groupoid = Groupoid::from_fn(objects, decls, id_of, |g, f| {
            let (s, _, pf) = mors[f];
            let (_, t, pg) = mors[g];
            parent.comp(pg, pf).and_then(|p| index.get(&(s, t, p)).copied()).unwrap_or(usize::MAX)
        })?;
        Ok(Lift { groupoid, under, mors, index })
    }

    pub fn at(&self, s: usize, t: usize, p: Option<usize>) -> Option<usize> {
        self.index.get(&(s, t, p?)).copied()
    }

    pub fn parent_mor(&self, k: usize) -> usize {
        self.mors[k].2
    }
}

/// A lift whose structure morphisms are the parent module's, read at the underlying objects.
pub(crate) struct Inherit<'a> {
    pub lift: &'a Lift,
    pub parent: &'a Module,
    pub unit: usize,
    /// `a + b` at `a * n + b`
    pub plus: Vec<usize>,
    /// `r·x` at `r * n + x`
    pub act: Vec<usize>,
}

impl Inherit<'_> {
    fn n(&self) -> usize {
        self.lift.under.len()
    }
    fn u(&self, a: usize) -> usize {
        self.lift.under[a]
    }
}

impl Shape for Inherit<'_> {
    fn unit(&self) -> usize {
        self.unit
    }
    fn plus(&self, a: usize, b: usize) -> usize {
        self.plus[a * self.n() + b]
    }
    fn act(&self, r: usize, x: usize) -> usize {
        self.act[r * self.n() + x]
    }
    fn plus_mor(&self, f: usize, g: usize) -> Option<usize> {
        let (s1, t1, p1) = self.lift.mors[f];
        let (s2, t2, p2) = self.lift.mors[g];
        self.lift.at(self.plus(s1, s2), self.plus(t1, t2), Some(self.parent.carrier.addm(p1, p2)))
    }
    fn act_mor(&self, rho: usize, f: usize) -> Option<usize> {
        let rb = &self.parent.ring.add.base;
        let (s, t, p) = self.lift.mors[f];
        self.lift.at(self.act(rb.src(rho), s), self.act(rb.tgt(rho), t), Some(self.parent.actm(rho, p)))
    }
    fn assoc(&self, a: usize, b: usize, c: usize) -> Option<usize> {
        let p = self.parent.carrier.a(self.u(a), self.u(b), self.u(c));
        self.lift.at(self.plus(self.plus(a, b), c), self.plus(a, self.plus(b, c)), Some(p))
    }
    fn lunit(&self, a: usize) -> Option<usize> {
        self.lift.at(self.plus(self.unit, a), a, Some(self.parent.carrier.l(self.u(a))))
    }
    fn runit(&self, a: usize) -> Option<usize> {
        self.lift.at(self.plus(a, self.unit), a, Some(self.parent.carrier.r(self.u(a))))
    }
    fn sym(&self, a: usize, b: usize) -> Option<usize> {
        self.lift.at(self.plus(a, b), self.plus(b, a), Some(self.parent.carrier.c(self.u(a), self.u(b))))
    }
    fn adist(&self, r: usize, x: usize, y: usize) -> Option<usize> {
        let p = self.parent.ad(r, self.u(x), self.u(y));
        self.lift.at(self.act(r, self.plus(x, y)), self.plus(self.act(r, x), self.act(r, y)), Some(p))
    }
    fn bdist(&self, r: usize, s: usize, x: usize) -> Option<usize> {
        let rs = self.parent.ring.add.add(r, s);
        let p = self.parent.bd(r, s, self.u(x));
        self.lift.at(self.act(rs, x), self.plus(self.act(r, x), self.act(s, x)), Some(p))
    }
    fn bassoc(&self, r: usize, s: usize, x: usize) -> Option<usize> {
        let rs = self.parent.ring.mul(r, s);
        let p = self.parent.ba(r, s, self.u(x));
        self.lift.at(self.act(rs, x), self.act(r, self.act(s, x)), Some(p))
    }
    fn iunit(&self, x: usize) -> Option<usize> {
        self.lift.at(self.act(self.parent.ring.one, x), x, Some(self.parent.i(self.u(x))))
    }
    fn zzero(&self, r: usize) -> Option<usize> {
        self.lift.at(self.act(r, self.unit), self.unit, Some(self.parent.z(r)))
    }
}

/// A module with the same objects as a parent and morphisms collapsed by a quotient.
struct Collapse<'a> {
    md: &'a Module,
    proj: &'a [usize],
    rep: &'a [usize],
}

impl Shape for Collapse<'_> {
    fn unit(&self) -> usize {
        self.md.carrier.unit
    }
    fn plus(&self, a: usize, b: usize) -> usize {
        self.md.carrier.add(a, b)
    }
    fn act(&self, r: usize, x: usize) -> usize {
        self.md.act(r, x)
    }
    fn plus_mor(&self, f: usize, g: usize) -> Option<usize> {
        Some(self.proj[self.md.carrier.addm(self.rep[f], self.rep[g])])
    }
    fn act_mor(&self, rho: usize, f: usize) -> Option<usize> {
        Some(self.proj[self.md.actm(rho, self.rep[f])])
    }
    fn assoc(&self, a: usize, b: usize, c: usize) -> Option<usize> {
        Some(self.proj[self.md.carrier.a(a, b, c)])
    }
    fn lunit(&self, a: usize) -> Option<usize> {
        Some(self.proj[self.md.carrier.l(a)])
    }
    fn runit(&self, a: usize) -> Option<usize> {
        Some(self.proj[self.md.carrier.r(a)])
    }
    fn sym(&self, a: usize, b: usize) -> Option<usize> {
        Some(self.proj[self.md.carrier.c(a, b)])
    }
    fn adist(&self, r: usize, x: usize, y: usize) -> Option<usize> {
        Some(self.proj[self.md.ad(r, x, y)])
    }
    fn bdist(&self, r: usize, s: usize, x: usize) -> Option<usize> {
        Some(self.proj[self.md.bd(r, s, x)])
    }
    fn bassoc(&self, r: usize, s: usize, x: usize) -> Option<usize> {
        Some(self.proj[self.md.ba(r, s, x)])
    }
    fn iunit(&self, x: usize) -> Option<usize> {
        Some(self.proj[self.md.i(x)])
    }
    fn zzero(&self, r: usize) -> Option<usize> {
        Some(self.proj[self.md.z(r)])
    }
}

/// Quotient of a module by the smallest congruence containing `rel` that is also compatible
/// with `+` and the ring action. Returns the quotient and the projection hom.
pub fn quotient_module(md: &Module, rel: &MorRelation) -> Result<(Module, Hom, Quotient)> {
    let g = &md.carrier.base;
    let m = g.n_mor();
    let mut uf = UnionFind::new(m);
    for &(a, b) in rel {
        if a >= m || b >= m {
            return Err(Error::MalformedTable("relation references an unknown morphism".into()));
        }
        if g.src(a) != g.src(b) || g.tgt(a) != g.tgt(b) {
            return Err(Error::NotParallel(format!("{} and {}", g.mor_name(a), g.mor_name(b))));
        }
        uf.union(a, b);
    }
    loop {
        congruence_closure(g, &mut uf);
        let mut changed = false;
        for f in 0..m {
            let rf = uf.find(f);
            if rf == f {
                continue;
            }
            for h in 0..m {
                changed |= uf.union(md.carrier.addm(f, h), md.carrier.addm(rf, h));
                changed |= uf.union(md.carrier.addm(h, f), md.carrier.addm(h, rf));
            }
            for rho in 0..md.ring.m() {
                changed |= uf.union(md.actm(rho, f), md.actm(rho, rf));
            }
        }
        if !changed {
            break;
        }
    }
    let q = quotient_from_classes(g, &mut uf);
    let sh = Collapse { md, proj: &q.projection.mmap, rep: &q.rep };
    let out = assemble(md.ring.clone(), q.groupoid.clone(), &sh)?;
    let proj = crate::rmodule::strict_hom(md, &out, (0..md.n()).collect(), q.projection.mmap.clone());
    Ok((out, proj, q))
}

/// Every object tuple name helper used for triples and pairs.
pub(crate) fn tuple_name(parts: &[&str]) -> String {
    format!("({})", parts.join(","))
}
