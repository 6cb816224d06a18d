use std::collections::HashMap;
use std::sync::Arc;

use super::{assemble, quotient_module, tuple_name, Inherit, Lift, ModHom, Shape};
use crate::equivalence::{is_essentially_surjective, is_faithful, is_full};
use crate::error::{Error, Result};
use crate::groupoid::Quotient;
use crate::rmodule::{compose_mod_hom, strict_hom, Module};
use crate::twogroup::{Hom, HomData};

/// Objects of `A`, morphisms `x → y` are the morphisms `Fx → Fy` of `B`.
struct Image<'a> {
    f: &'a ModHom,
    lift: &'a Lift,
}

impl Image<'_> {
    fn lifted(&self, s: usize, t: usize, g: usize) -> Option<usize> {
        self.lift.at(s, t, Some(self.f.hom.f(g)))
    }
}

impl Shape for Image<'_> {
    fn unit(&self) -> usize {
        self.f.dom.carrier.unit
    }
    fn plus(&self, a: usize, b: usize) -> usize {
        self.f.dom.carrier.add(a, b)
    }
    fn act(&self, r: usize, x: usize) -> usize {
        self.f.dom.act(r, x)
    }
    fn plus_mor(&self, f: usize, g: usize) -> Option<usize> {
        let (b, h) = (&self.f.cod.carrier, &self.f.hom);
        let (s1, t1, p1) = self.lift.mors[f];
        let (s2, t2, p2) = self.lift.mors[g];
        let k = b.seq(&[h.p(s1, s2), b.addm(p1, p2), b.inv(h.p(t1, t2))]);
        self.lift.at(self.plus(s1, s2), self.plus(t1, t2), k)
    }
    fn act_mor(&self, rho: usize, f: usize) -> Option<usize> {
        let (bm, h) = (&*self.f.cod, &self.f.hom);
        let rb = &bm.ring.add.base;
        let (r, r2) = (rb.src(rho), rb.tgt(rho));
        let (s, t, p) = self.lift.mors[f];
        let k = bm.carrier.seq(&[h.t(r, s), bm.actm(rho, p), bm.carrier.inv(h.t(r2, t))]);
        self.lift.at(self.act(r, s), self.act(r2, t), k)
    }
    fn assoc(&self, a: usize, b: usize, c: usize) -> Option<usize> {
        let ac = &self.f.dom.carrier;
        self.lifted(ac.add(ac.add(a, b), c), ac.add(a, ac.add(b, c)), ac.a(a, b, c))
    }
    fn lunit(&self, a: usize) -> Option<usize> {
        let ac = &self.f.dom.carrier;
        self.lifted(ac.add(ac.unit, a), a, ac.l(a))
    }
    fn runit(&self, a: usize) -> Option<usize> {
        let ac = &self.f.dom.carrier;
        self.lifted(ac.add(a, ac.unit), a, ac.r(a))
    }
    fn sym(&self, a: usize, b: usize) -> Option<usize> {
        let ac = &self.f.dom.carrier;
        self.lifted(ac.add(a, b), ac.add(b, a), ac.c(a, b))
    }
    fn adist(&self, r: usize, x: usize, y: usize) -> Option<usize> {
        let am = &*self.f.dom;
        let ac = &am.carrier;
        self.lifted(am.act(r, ac.add(x, y)), ac.add(am.act(r, x), am.act(r, y)), am.ad(r, x, y))
    }
    fn bdist(&self, r: usize, s: usize, x: usize) -> Option<usize> {
        let am = &*self.f.dom;
        let rs = am.ring.add.add(r, s);
        self.lifted(am.act(rs, x), am.carrier.add(am.act(r, x), am.act(s, x)), am.bd(r, s, x))
    }
    fn bassoc(&self, r: usize, s: usize, x: usize) -> Option<usize> {
        let am = &*self.f.dom;
        self.lifted(am.act(am.ring.mul(r, s), x), am.act(r, am.act(s, x)), am.ba(r, s, x))
    }
    fn iunit(&self, x: usize) -> Option<usize> {
        let am = &*self.f.dom;
        self.lifted(am.act(am.ring.one, x), x, am.i(x))
    }
    fn zzero(&self, r: usize) -> Option<usize> {
        let am = &*self.f.dom;
        self.lifted(am.act(r, am.carrier.unit), am.carrier.unit, am.z(r))
    }
}

/// Objects `(A, φ: FA → B, B)` over `B`.
#[derive(Debug, Clone)]
pub struct Triples {
    pub module: Arc<Module>,
    pub triples: Vec<(usize, usize, usize)>,
    index: HashMap<(usize, usize, usize), usize>,
    pub(crate) lift: Lift,
    /// For `Im²`, an `f` with `g∘φ = φ'∘Ff` for every morphism; `None` for `Im²_pl`.
    pub provenance: Option<Vec<usize>>,
}

impl Triples {
    pub fn object(&self, x: usize, phi: usize, b: usize) -> Option<usize> {
        self.index.get(&(x, phi, b)).copied()
    }

    pub fn morphism(&self, s: usize, t: usize, g: Option<usize>) -> Option<usize> {
        self.lift.at(s, t, g)
    }

    pub fn parent_mor(&self, k: usize) -> usize {
        self.lift.parent_mor(k)
    }
}

/// Witnesses `f: x → x'` with `g∘φ = φ'∘Ff`, smallest first.
fn connecting(f: &ModHom, s: (usize, usize, usize), t: (usize, usize, usize), g: usize) -> Option<usize> {
    let (a, b) = (&f.dom.carrier, &f.cod.carrier);
    let lhs = b.seq(&[s.1, g]);
    a.base.hom(s.0, t.0).iter().copied().find(|&k| b.seq(&[f.hom.f(k), t.1]) == lhs)
}

fn triples(f: &ModHom, plain: bool) -> Result<Triples> {
    let (am, bm, h) = (&*f.dom, &*f.cod, &f.hom);
    let (a, b) = (&am.carrier, &bm.carrier);
    let mut ts = Vec::new();
    for x in 0..a.n() {
        for y in 0..b.n() {
            for &phi in b.base.hom(h.o(x), y) {
                ts.push((x, phi, y));
            }
        }
    }
    let index: HashMap<_, _> = ts.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let names = ts
        .iter()
        .map(|&(x, phi, y)| tuple_name(&[a.base.obj_name(x), b.base.mor_name(phi), b.base.obj_name(y)]))
        .collect();
    let under = ts.iter().map(|t| t.2).collect();
    let lift = Lift::new(&b.base, names, under, |s, t, g| plain || connecting(f, ts[s], ts[t], g).is_some())?;
    let find = |t: (usize, Option<usize>, usize)| {
        t.1.and_then(|phi| index.get(&(t.0, phi, t.2)).copied())
            .ok_or_else(|| Error::MalformedTable("triples are not closed".into()))
    };
    let n = ts.len();
    let mut plus = Vec::with_capacity(n * n);
    for &(x, p, y) in &ts {
        for &(x2, p2, y2) in &ts {
            plus.push(find((a.add(x, x2), b.seq(&[h.p(x, x2), b.addm(p, p2)]), b.add(y, y2)))?);
        }
    }
    let mut act = Vec::with_capacity(am.ring.n() * n);
    for r in 0..am.ring.n() {
        for &(x, p, y) in &ts {
            act.push(find((am.act(r, x), b.seq(&[h.t(r, x), bm.act_l(r, p)]), bm.act(r, y)))?);
        }
    }
    let unit = find((a.unit, Some(h.z()), b.unit))?;
    let sh = Inherit { lift: &lift, parent: bm, unit, plus, act };
    let module = Arc::new(assemble(bm.ring.clone(), lift.groupoid.clone(), &sh)?);
    let provenance = (!plain).then(|| {
        lift.mors.iter().map(|&(s, t, g)| connecting(f, ts[s], ts[t], g).expect("admissible")).collect()
    });
    Ok(Triples { module, triples: ts, index, lift, provenance })
}

/// The properties each factor is expected to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize)]
pub struct FactorFlags {
    pub e_surjective: bool,
    pub e_full: bool,
    pub omega_equivalence: bool,
    pub m_full: bool,
    pub m_faithful: bool,
}

#[derive(Debug, Clone)]
pub struct Factorization {
    pub im1: Arc<Module>,
    pub im2: Triples,
    pub e: Hom,
    pub omega: Hom,
    pub m: Hom,
    pub composite: Hom,
    /// The composite `M∘Ω∘E` is `F` table for table.
    pub exact: bool,
    pub flags: FactorFlags,
    /// The projection when `Im¹` is a quotient of `A`.
    pub quotient: Option<Quotient>,
    /// `Im¹_pl` lift, present for the first factorization.
    pub(crate) im1_lift: Option<Lift>,
}

impl Factorization {
    /// `Im¹_pl` morphism `s → t` over the `B`-morphism `g`.
    pub fn im1_pl_morphism(&self, s: usize, t: usize, g: Option<usize>) -> Option<usize> {
        self.im1_lift.as_ref()?.at(s, t, g)
    }
}

fn finish(
    f: &ModHom,
    im1: Arc<Module>,
    im2: Triples,
    e: Hom,
    omega: Hom,
    quotient: Option<Quotient>,
    im1_lift: Option<Lift>,
) -> Result<Factorization> {
    let (a, b) = (&*f.dom, &*f.cod);
    let i2 = &im2.module;
    let m = strict_hom(i2, b, im2.triples.iter().map(|t| t.2).collect(), im2.lift.mors.iter().map(|k| k.2).collect());
    let oe = compose_mod_hom(a, &im1, i2, &e, &omega)?;
    let composite = compose_mod_hom(a, i2, b, &oe, &m)?;
    let (ag, g1, g2, bg) = (&a.carrier.base, &im1.carrier.base, &i2.carrier.base, &b.carrier.base);
    let flags = FactorFlags {
        e_surjective: (0..im1.n()).all(|y| e.omap.contains(&y)),
        e_full: is_full(ag, g1, &e).holds,
        omega_equivalence: is_faithful(g1, g2, &omega).holds
            && is_full(g1, g2, &omega).holds
            && is_essentially_surjective(g1, g2, &omega).holds,
        m_full: is_full(g2, bg, &m).holds,
        m_faithful: is_faithful(g2, bg, &m).holds,
    };
    let exact = composite == f.hom;
    Ok(Factorization { im1, im2, e, omega, m, composite, exact, flags, quotient, im1_lift })
}

/// `Ω` on objects: `x ↦ (x, 1, Fx)`, with `Ω₊ = F₊`, `Ω₀ = F₀`, `Ω₂ = F₂` read in the triples.
fn omega(f: &ModHom, t: &Triples, mors: impl Fn(usize) -> Option<(usize, usize, usize)>, m: usize) -> Result<Hom> {
    let (am, b, h) = (&*f.dom, &f.cod.carrier, &f.hom);
    let a = &am.carrier;
    let miss = || Error::MalformedTable("Ω leaves the triples".into());
    let omap =
        (0..a.n()).map(|x| t.object(x, b.id(h.o(x)), h.o(x)).ok_or_else(miss)).collect::<Result<Vec<_>>>()?;
    let ti = &t.module.carrier;
    let mmap = (0..m)
        .map(|k| mors(k).and_then(|(s, tt, g)| t.morphism(omap[s], omap[tt], Some(g))).ok_or_else(miss))
        .collect::<Result<Vec<_>>>()?;
    let n = a.n();
    let fplus = (0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            t.morphism(omap[a.add(x, y)], ti.add(omap[x], omap[y]), Some(h.p(x, y))).ok_or_else(miss)
        })
        .collect::<Result<Vec<_>>>()?;
    let fzero = t.morphism(omap[a.unit], ti.unit, Some(h.z())).ok_or_else(miss)?;
    let ftwo = (0..am.ring.n() * n)
        .map(|i| {
            let (r, x) = (i / n, i % n);
            t.morphism(omap[am.act(r, x)], t.module.act(r, omap[x]), Some(h.t(r, x))).ok_or_else(miss)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Hom { omap, mmap, fplus, fzero, ftwo })
}

/// `A → Im¹_pl → Im²_pl → B`: surjective, equivalence, full and faithful.
pub fn factorize_pl(f: &ModHom) -> Result<Factorization> {
    f.require_valid()?;
    let (am, h) = (&*f.dom, &f.hom);
    let a = &am.carrier;
    let names = a.base.objects().to_vec();
    let lift = Lift::new(&f.cod.carrier.base, names, h.omap.clone(), |_, _, _| true)?;
    let im1 = Arc::new(assemble(am.ring.clone(), lift.groupoid.clone(), &Image { f, lift: &lift })?);
    let miss = || Error::MalformedTable("Ê leaves the image".into());
    let emm = (0..a.m())
        .map(|k| lift.at(a.base.src(k), a.base.tgt(k), Some(h.f(k))).ok_or_else(miss))
        .collect::<Result<Vec<_>>>()?;
    let e = strict_hom(am, &im1, (0..a.n()).collect(), emm);
    let im2 = triples(f, true)?;
    let om = omega(f, &im2, |k| Some(lift.mors[k]), im1.m())?;
    finish(f, im1, im2, e, om, None, Some(lift))
}

/// `A → Im¹ → Im² → B`: full and surjective, equivalence, faithful.
pub fn factorize(f: &ModHom) -> Result<Factorization> {
    f.require_valid()?;
    let (am, h) = (&*f.dom, &f.hom);
    let a = &am.carrier;
    let mut rel = Vec::new();
    for k1 in 0..a.m() {
        for k2 in k1 + 1..a.m() {
            let parallel = a.base.src(k1) == a.base.src(k2) && a.base.tgt(k1) == a.base.tgt(k2);
            if parallel && h.f(k1) == h.f(k2) {
                rel.push((k1, k2));
            }
        }
    }
    let (q, e, quotient) = quotient_module(am, &rel)?;
    let im1 = Arc::new(q);
    let im2 = triples(f, false)?;
    let rep = &quotient.rep;
    let om = omega(
        f,
        &im2,
        |k| {
            let g = rep[k];
            Some((a.base.src(g), a.base.tgt(g), h.f(g)))
        },
        im1.m(),
    )?;
    finish(f, im1, im2, e, om, Some(quotient), None)
}

pub fn im1_pl(f: &ModHom) -> Result<Arc<Module>> {
    Ok(factorize_pl(f)?.im1)
}

pub fn im2_pl(f: &ModHom) -> Result<Arc<Module>> {
    Ok(factorize_pl(f)?.im2.module)
}

pub fn im1(f: &ModHom) -> Result<Arc<Module>> {
    Ok(factorize(f)?.im1)
}

pub fn im2(f: &ModHom) -> Result<Arc<Module>> {
    Ok(factorize(f)?.im2.module)
}
