use std::sync::Arc;

use super::{assemble, quotient_module, require_boundary, zero, Inherit, Lift, ModHom, Shape};
use crate::error::{Error, Result};
use crate::groupoid::{Groupoid, MorDecl, Quotient, UnionFind};
use crate::rmodule::{strict_hom, Module};
use crate::tworing::TwoRing;
use crate::twogroup::{Hom, HomData, TwoMor};

/// A module whose only morphisms are identities; morphism `k` is the identity of object `k`.
struct Discrete<'a> {
    ring: &'a TwoRing,
    n: usize,
    unit: usize,
    plus: Vec<usize>,
    act: Vec<usize>,
}

impl Discrete<'_> {
    fn same(&self, a: usize, b: usize) -> Option<usize> {
        (a == b).then_some(a)
    }
}

impl Shape for Discrete<'_> {
    fn unit(&self) -> usize {
        self.unit
    }
    fn plus(&self, a: usize, b: usize) -> usize {
        self.plus[a * self.n + b]
    }
    fn act(&self, r: usize, x: usize) -> usize {
        self.act[r * self.n + x]
    }
    fn plus_mor(&self, f: usize, g: usize) -> Option<usize> {
        Some(self.plus(f, g))
    }
    fn act_mor(&self, rho: usize, f: usize) -> Option<usize> {
        let rb = &self.ring.add.base;
        self.same(self.act(rb.src(rho), f), self.act(rb.tgt(rho), f))
    }
    fn assoc(&self, a: usize, b: usize, c: usize) -> Option<usize> {
        self.same(self.plus(self.plus(a, b), c), self.plus(a, self.plus(b, c)))
    }
    fn lunit(&self, a: usize) -> Option<usize> {
        self.same(self.plus(self.unit, a), a)
    }
    fn runit(&self, a: usize) -> Option<usize> {
        self.same(self.plus(a, self.unit), a)
    }
    fn sym(&self, a: usize, b: usize) -> Option<usize> {
        self.same(self.plus(a, b), self.plus(b, a))
    }
    fn adist(&self, r: usize, x: usize, y: usize) -> Option<usize> {
        self.same(self.act(r, self.plus(x, y)), self.plus(self.act(r, x), self.act(r, y)))
    }
    fn bdist(&self, r: usize, s: usize, x: usize) -> Option<usize> {
        let rs = self.ring.add.add(r, s);
        self.same(self.act(rs, x), self.plus(self.act(r, x), self.act(s, x)))
    }
    fn bassoc(&self, r: usize, s: usize, x: usize) -> Option<usize> {
        self.same(self.act(self.ring.mul(r, s), x), self.act(r, self.act(s, x)))
    }
    fn iunit(&self, x: usize) -> Option<usize> {
        self.same(self.act(self.ring.one, x), x)
    }
    fn zzero(&self, r: usize) -> Option<usize> {
        self.same(self.act(r, self.unit), self.unit)
    }
}

#[derive(Debug, Clone)]
pub struct PipResult {
    pub f: ModHom,
    pub pip: Arc<Module>,
    /// `σ: 0 ⇒ 0` between the zero homs `Pip F → A`; `σ_a = a`.
    pub sigma: TwoMor,
    /// Object `k` is the automorphism `endos[k]` of `0` in `A`.
    pub endos: Vec<usize>,
}

pub fn pip(f: &ModHom) -> Result<PipResult> {
    f.require_valid()?;
    let (am, bm, h) = (&*f.dom, &*f.cod, &f.hom);
    let (a, b) = (&am.carrier, &bm.carrier);
    let endos: Vec<usize> = a.base.hom(a.unit, a.unit).iter().copied().filter(|&e| h.f(e) == b.id(h.o(a.unit))).collect();
    let n = endos.len();
    let pos = |e: Option<usize>| {
        e.and_then(|e| endos.iter().position(|&x| x == e))
            .ok_or_else(|| Error::MalformedTable("pip is not closed".into()))
    };
    let mut plus = Vec::with_capacity(n * n);
    for &x in &endos {
        for &y in &endos {
            plus.push(pos(a.base.comp(x, y))?);
        }
    }
    let mut act = Vec::with_capacity(am.ring.n() * n);
    for r in 0..am.ring.n() {
        for &x in &endos {
            let z = am.z(r);
            act.push(pos(a.seq(&[a.inv(z), am.act_l(r, x), z]))?);
        }
    }
    let unit = pos(Some(a.id(a.unit)))?;
    let objects: Vec<String> = endos.iter().map(|&e| a.base.mor_name(e).to_string()).collect();
    let decls: Vec<MorDecl> = objects.iter().enumerate().map(|(k, o)| (format!("id_{o}"), k, k)).collect();
    let base = Groupoid::from_fn(objects, decls, (0..n).collect(), |g, _| g)?;
    let sh = Discrete { ring: &am.ring, n, unit, plus, act };
    let pip = Arc::new(assemble(am.ring.clone(), base, &sh)?);
    let sigma = TwoMor { comp: endos.clone() };
    Ok(PipResult { f: f.clone(), pip, sigma, endos })
}

#[derive(Debug, Clone)]
pub struct CopipResult {
    pub f: ModHom,
    pub copip: Arc<Module>,
    /// `σ: 0 ⇒ 0` between the zero homs `B → Copip F`; `σ_B = [B]`.
    pub sigma: TwoMor,
    /// Class of every object of `B`.
    pub class_of: Vec<usize>,
    /// Smallest object of every class.
    pub reps: Vec<usize>,
}

/// Classes of objects of `B` under `B₁ ~ B₂` when some `B₁ → FA + B₂` exists.
pub(crate) fn copip_classes(f: &ModHom) -> (Vec<usize>, Vec<usize>) {
    let (a, b, h) = (&f.dom.carrier, &f.cod.carrier, &f.hom);
    let mut uf = UnionFind::new(b.n());
    for b1 in 0..b.n() {
        for b2 in 0..b.n() {
            if (0..a.n()).any(|x| !b.base.hom(b1, b.add(h.o(x), b2)).is_empty()) {
                uf.union(b1, b2);
            }
        }
    }
    let mut reps: Vec<usize> = Vec::new();
    let mut class_of = Vec::with_capacity(b.n());
    for x in 0..b.n() {
        let r = uf.find(x);
        match reps.iter().position(|&y| uf.find(y) == r) {
            Some(k) => class_of.push(k),
            None => {
                class_of.push(reps.len());
                reps.push(x);
            }
        }
    }
    (class_of, reps)
}

pub fn copip(f: &ModHom) -> Result<CopipResult> {
    f.require_valid()?;
    let bm = &*f.cod;
    let b = &bm.carrier;
    let (class_of, reps) = copip_classes(f);
    let decls: Vec<MorDecl> = reps.iter().map(|&x| (format!("[{}]", b.base.obj_name(x)), 0, 0)).collect();
    let id0 = class_of[b.unit];
    let sum = |g: usize, k: usize| class_of[b.add(reps[g], reps[k])];
    let base = Groupoid::from_fn(vec!["*".into()], decls, vec![id0], sum)?;
    let sh = CopipShape { md: bm, class_of: &class_of, reps: &reps };
    let copip = Arc::new(assemble(bm.ring.clone(), base, &sh)?);
    let sigma = TwoMor { comp: class_of.clone() };
    Ok(CopipResult { f: f.clone(), copip, sigma, class_of, reps })
}

struct CopipShape<'a> {
    md: &'a Module,
    class_of: &'a [usize],
    reps: &'a [usize],
}

impl CopipShape<'_> {
    fn id(&self) -> Option<usize> {
        Some(self.class_of[self.md.carrier.unit])
    }
}

impl Shape for CopipShape<'_> {
    fn unit(&self) -> usize {
        0
    }
    fn plus(&self, _: usize, _: usize) -> usize {
        0
    }
    fn act(&self, _: usize, _: usize) -> usize {
        0
    }
    fn plus_mor(&self, f: usize, g: usize) -> Option<usize> {
        Some(self.class_of[self.md.carrier.add(self.reps[f], self.reps[g])])
    }
    fn act_mor(&self, rho: usize, f: usize) -> Option<usize> {
        let r = self.md.ring.add.base.tgt(rho);
        Some(self.class_of[self.md.act(r, self.reps[f])])
    }
    fn assoc(&self, _: usize, _: usize, _: usize) -> Option<usize> {
        self.id()
    }
    fn lunit(&self, _: usize) -> Option<usize> {
        self.id()
    }
    fn runit(&self, _: usize) -> Option<usize> {
        self.id()
    }
    fn sym(&self, _: usize, _: usize) -> Option<usize> {
        self.id()
    }
    fn adist(&self, _: usize, _: usize, _: usize) -> Option<usize> {
        self.id()
    }
    fn bdist(&self, _: usize, _: usize, _: usize) -> Option<usize> {
        self.id()
    }
    fn bassoc(&self, _: usize, _: usize, _: usize) -> Option<usize> {
        self.id()
    }
    fn iunit(&self, _: usize) -> Option<usize> {
        self.id()
    }
    fn zzero(&self, _: usize) -> Option<usize> {
        self.id()
    }
}

#[derive(Debug, Clone)]
pub struct RootResult {
    pub root: Arc<Module>,
    /// Inclusion `Root α → A`.
    pub r: Hom,
    pub(crate) lift: Lift,
}

impl RootResult {
    /// Root object over the object `x` of `A`, if kept.
    pub fn object(&self, x: usize) -> Option<usize> {
        self.lift.under.iter().position(|&u| u == x)
    }

    pub fn morphism(&self, s: usize, t: usize, f: Option<usize>) -> Option<usize> {
        self.lift.at(s, t, f)
    }
}

/// Full sub-module of `A` on the objects where `α` is the identity.
pub fn root(a: &Module, b: &Module, alpha: &TwoMor) -> Result<RootResult> {
    let z = zero(a, b);
    require_boundary(a, b, &z, &z, alpha, "α: 0 ⇒ 0")?;
    let ac = &a.carrier;
    let id0 = b.carrier.id(b.carrier.unit);
    let under: Vec<usize> = (0..a.n()).filter(|&x| alpha.comp[x] == id0).collect();
    let names = under.iter().map(|&x| ac.base.obj_name(x).to_string()).collect();
    let lift = Lift::new(&ac.base, names, under.clone(), |_, _, _| true)?;
    let pos = |x: usize, what: &str| {
        under
            .iter()
            .position(|&u| u == x)
            .ok_or_else(|| Error::NotClosed(format!("{what} leaves the root at {}", ac.base.obj_name(x))))
    };
    let n = under.len();
    let mut plus = Vec::with_capacity(n * n);
    for &x in &under {
        for &y in &under {
            plus.push(pos(ac.add(x, y), "tensor")?);
        }
    }
    let mut act = Vec::with_capacity(a.ring.n() * n);
    for r in 0..a.ring.n() {
        for &x in &under {
            act.push(pos(a.act(r, x), "action")?);
        }
    }
    let unit = pos(ac.unit, "unit")?;
    let sh = Inherit { lift: &lift, parent: a, unit, plus, act };
    let root = Arc::new(assemble(a.ring.clone(), lift.groupoid.clone(), &sh)?);
    let r = strict_hom(&root, a, under, lift.mors.iter().map(|m| m.2).collect());
    Ok(RootResult { root, r, lift })
}

#[derive(Debug, Clone)]
pub struct CorootResult {
    pub coroot: Arc<Module>,
    /// Projection `B → Coroot α`.
    pub r: Hom,
    pub quotient: Quotient,
}

/// Quotient of `B` identifying `f` with `r∘(f + α_x)∘r⁻¹` for every component `α_x`.
pub fn coroot(a: &Module, b: &Module, alpha: &TwoMor) -> Result<CorootResult> {
    let z = zero(a, b);
    require_boundary(a, b, &z, &z, alpha, "α: 0 ⇒ 0")?;
    let bc = &b.carrier;
    let mut rel = Vec::new();
    for f in 0..bc.m() {
        let (s, t) = (bc.base.src(f), bc.base.tgt(f));
        for &ax in &alpha.comp {
            let g = bc
                .seq(&[bc.inv(bc.r(s)), bc.addm(f, ax), bc.r(t)])
                .ok_or_else(|| Error::MalformedTable("twisted morphism is not composable".into()))?;
            if g != f {
                rel.push((f, g));
            }
        }
    }
    rel.sort_unstable();
    rel.dedup();
    let (q, r, quotient) = quotient_module(b, &rel)?;
    Ok(CorootResult { coroot: Arc::new(q), r, quotient })
}
