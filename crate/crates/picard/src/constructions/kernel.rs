use std::collections::HashMap;
use std::sync::Arc;

use super::{assemble, require_boundary, tuple_name, zero, Factored, Inherit, Lift, ModHom, PsiResult};
use crate::error::{Error, Result};
use crate::rmodule::{compose_mod_hom, strict_hom, Module};
use crate::search::{for_each_two_morphism, Endpoints, SearchBudget};
use crate::twogroup::{Hom, HomData, TwoMor};

#[derive(Debug, Clone)]
pub struct KernelResult {
    pub f: ModHom,
    pub ker: Arc<Module>,
    /// `e_F: Ker F → A`
    pub e: Hom,
    /// `ε_F: F∘e_F ⇒ 0`
    pub eps: TwoMor,
    /// Each object as `(A, a: FA → 0)`.
    pub pairs: Vec<(usize, usize)>,
    pub(crate) lift: Lift,
    pub(crate) index: HashMap<(usize, usize), usize>,
}

impl KernelResult {
    pub fn object(&self, x: usize, a: usize) -> Option<usize> {
        self.index.get(&(x, a)).copied()
    }

    /// The kernel morphism over `f` starting at object `s`, if admissible.
    pub fn morphism(&self, s: usize, t: usize, f: Option<usize>) -> Option<usize> {
        self.lift.at(s, t, f)
    }
}

pub fn kernel(f: &ModHom) -> Result<KernelResult> {
    f.require_valid()?;
    let (a, b, h) = (&*f.dom, &*f.cod, &f.hom);
    let (ag, bg) = (&a.carrier, &b.carrier);
    let mut pairs = Vec::new();
    for x in 0..a.n() {
        for &k in bg.base.hom(h.o(x), bg.unit) {
            pairs.push((x, k));
        }
    }
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let names = pairs
        .iter()
        .map(|&(x, k)| tuple_name(&[ag.base.obj_name(x), bg.base.mor_name(k)]))
        .collect();
    let under = pairs.iter().map(|p| p.0).collect();
    let lift = Lift::new(&ag.base, names, under, |s, t, p| {
        bg.seq(&[h.f(p), pairs[t].1]) == Some(pairs[s].1)
    })?;
    let find = |x: usize, k: Option<usize>| {
        k.and_then(|k| index.get(&(x, k)).copied())
            .ok_or_else(|| Error::MalformedTable("kernel is not closed under its structure".into()))
    };
    let n = pairs.len();
    let mut plus = Vec::with_capacity(n * n);
    for &(x, k1) in &pairs {
        for &(y, k2) in &pairs {
            plus.push(find(ag.add(x, y), bg.seq(&[h.p(x, y), bg.addm(k1, k2), bg.l(bg.unit)]))?);
        }
    }
    let mut act = Vec::with_capacity(a.ring.n() * n);
    for r in 0..a.ring.n() {
        for &(x, k) in &pairs {
            act.push(find(a.act(r, x), bg.seq(&[h.t(r, x), b.act_l(r, k), b.z(r)]))?);
        }
    }
    let unit = find(ag.unit, Some(h.z()))?;
    let sh = Inherit { lift: &lift, parent: a, unit, plus, act };
    let ker = Arc::new(assemble(a.ring.clone(), lift.groupoid.clone(), &sh)?);
    let e = strict_hom(&ker, a, lift.under.clone(), lift.mors.iter().map(|m| m.2).collect());
    let eps = TwoMor { comp: pairs.iter().map(|p| p.1).collect() };
    Ok(KernelResult { f: f.clone(), ker, e, eps, pairs, lift, index })
}

/// `ε_{G″c} = φ_c ∘ F(φ″_c)` for every object `c`.
pub fn kernel_compatible(k: &KernelResult, c: &Module, phi: &TwoMor, g2: &Hom, phi2: &TwoMor) -> bool {
    let (b, h) = (&k.f.cod.carrier, &k.f.hom);
    (0..c.n()).all(|x| b.seq(&[h.f(phi2.comp[x]), phi.comp[x]]) == Some(k.eps.comp[g2.o(x)]))
}

/// Factor `G: C → A` with `φ: F∘G ⇒ 0` through the kernel.
pub fn kernel_factor(k: &KernelResult, c: &Arc<Module>, g: &Hom, phi: &TwoMor) -> Result<Factored> {
    let (a, b) = (&*k.f.dom, &*k.f.cod);
    let fg = compose_mod_hom(c, a, b, g, &k.f.hom)?;
    require_boundary(c, b, &fg, &zero(c, b), phi, "φ: F∘G ⇒ 0")?;
    let ker = &k.ker;
    let miss = || Error::MalformedTable("factorization leaves the kernel".into());
    let omap = (0..c.n()).map(|x| k.object(g.o(x), phi.comp[x]).ok_or_else(miss)).collect::<Result<Vec<_>>>()?;
    let cg = &c.carrier.base;
    let mmap = (0..c.m())
        .map(|f| k.morphism(omap[cg.src(f)], omap[cg.tgt(f)], Some(g.f(f))).ok_or_else(miss))
        .collect::<Result<Vec<_>>>()?;
    let n = c.n();
    let kc = &ker.carrier;
    let fplus = (0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            k.morphism(omap[c.carrier.add(x, y)], kc.add(omap[x], omap[y]), Some(g.p(x, y))).ok_or_else(miss)
        })
        .collect::<Result<Vec<_>>>()?;
    let fzero = k.morphism(omap[c.carrier.unit], kc.unit, Some(g.z())).ok_or_else(miss)?;
    let ftwo = (0..c.ring.n() * n)
        .map(|i| {
            let (r, x) = (i / n, i % n);
            k.morphism(omap[c.act(r, x)], ker.act(r, omap[x]), Some(g.t(r, x))).ok_or_else(miss)
        })
        .collect::<Result<Vec<_>>>()?;
    let g_prime = Hom { omap, mmap, fplus, fzero, ftwo };
    let phi_prime = TwoMor { comp: (0..n).map(|x| a.carrier.id(g.o(x))).collect() };
    Ok(Factored { g_prime, phi_prime })
}

/// ψ: G″ ⇒ G′ with `ψ_c = φ″_c`, and the number of 2-morphisms with that underlying family.
pub fn kernel_psi(
    k: &KernelResult,
    c: &Arc<Module>,
    g_prime: &Hom,
    g2: &Hom,
    phi2: &TwoMor,
    budget: &SearchBudget,
) -> Result<PsiResult> {
    let miss = || Error::MalformedTable("ψ component is not a kernel morphism".into());
    let comp = (0..c.n())
        .map(|x| k.morphism(g2.o(x), g_prime.o(x), Some(phi2.comp[x])).ok_or_else(miss))
        .collect::<Result<Vec<_>>>()?;
    let mut solutions = 0;
    for_each_two_morphism(Endpoints::Modules(c, &k.ker), g2, g_prime, &mut budget.ticker(), &mut |e| {
        if e.comp.iter().zip(&phi2.comp).all(|(&m, &p)| k.lift.parent_mor(m) == p) {
            solutions += 1;
        }
        Ok(false)
    })?;
    Ok(PsiResult { psi: TwoMor { comp }, solutions })
}
