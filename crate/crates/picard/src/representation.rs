//! The endomorphism 2-ring of a symmetric 2-group, and modules as representations into it.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::homgroup::{pointwise_group, HomGroup};
use crate::rmodule::Module;
use crate::search::{Endpoints, SearchBudget};
use crate::tworing::{RingHom, TwoRing};
use crate::twogroup::{compose_hom, hcomp, Hom, HomData, TwoGroup, TwoMor};

/// `End(A)`: all endo-homs of `A` with pointwise sum and composition as product.
#[derive(Debug, Clone)]
pub struct EndRing {
    pub ring: Arc<TwoRing>,
    /// The 2-group `A` whose endomorphisms these are.
    pub carrier: TwoGroup,
    pub table: HomGroup,
}

impl EndRing {
    pub fn hom(&self, i: usize) -> &Hom {
        &self.table.homs[i]
    }

    pub fn mor(&self, k: usize) -> &(usize, usize, TwoMor) {
        &self.table.mors[k]
    }
}

fn missing(what: &str) -> Error {
    Error::MalformedTable(format!("{what} is not among the enumerated endomorphisms"))
}

pub fn end_ring(a: &TwoGroup, budget: &SearchBudget) -> Result<EndRing> {
    let hg = pointwise_group(Endpoints::Groups(a, a), budget, &mut budget.ticker())?;
    let n = hg.homs.len();
    let m = hg.mors.len();
    let base = &hg.group.base;

    let mut mul_obj = Vec::with_capacity(n * n);
    for f in &hg.homs {
        for g in &hg.homs {
            let fg = compose_hom(a, a, a, g, f)?;
            mul_obj.push(hg.hom_index(&fg).ok_or_else(|| missing("a composite"))?);
        }
    }
    let mut mul_mor = Vec::with_capacity(m * m);
    for (s1, t1, tau) in &hg.mors {
        for (s2, t2, tau2) in &hg.mors {
            let e = hcomp(a, tau2, &hg.homs[*t2], &hg.homs[*s1], tau)?;
            let k = hg
                .mor_index(mul_obj[s1 * n + s2], mul_obj[t1 * n + t2], &e)
                .ok_or_else(|| missing("a horizontal composite"))?;
            mul_mor.push(k);
        }
    }
    let one = hg.hom_index(&Hom::identity(a)).ok_or_else(|| missing("the identity"))?;
    let mul = |r: usize, s: usize| mul_obj[r * n + s];
    let plus = |r: usize, s: usize| hg.group.add(r, s);

    let strict = |x: usize, y: usize| -> Result<usize> {
        if x != y {
            return Err(Error::NotRing(format!("F{x} and F{y} should coincide as tables")));
        }
        Ok(base.id(x))
    };
    let mut massoc = Vec::with_capacity(n * n * n);
    let mut ldist = Vec::with_capacity(n * n * n);
    let mut rdist = Vec::with_capacity(n * n * n);
    for r in 0..n {
        for s in 0..n {
            for t in 0..n {
                massoc.push(strict(mul(mul(r, s), t), mul(r, mul(s, t)))?);
                rdist.push(strict(mul(plus(r, s), t), plus(mul(r, t), mul(s, t)))?);
                let (f, g, h) = (&hg.homs[r], &hg.homs[s], &hg.homs[t]);
                let comp = (0..a.n()).map(|x| f.p(g.o(x), h.o(x))).collect();
                let k = hg
                    .mor_index(mul(r, plus(s, t)), plus(mul(r, s), mul(r, t)), &TwoMor { comp })
                    .ok_or_else(|| missing("a left distributor"))?;
                ldist.push(k);
            }
        }
    }
    let mut mlunit = Vec::with_capacity(n);
    let mut mrunit = Vec::with_capacity(n);
    for r in 0..n {
        mlunit.push(strict(mul(one, r), r)?);
        mrunit.push(strict(mul(r, one), r)?);
    }
    let ring = TwoRing { add: hg.group.clone(), mul_obj, mul_mor, one, massoc, mlunit, mrunit, ldist, rdist };
    Ok(EndRing { ring: Arc::new(ring), carrier: a.clone(), table: hg })
}

/// A module as a representation `R → End(carrier)`.
#[derive(Debug, Clone)]
pub struct Representation {
    pub end: EndRing,
    pub rep: RingHom,
}

pub fn rep_from_module(md: &Module, budget: &SearchBudget) -> Result<Representation> {
    let end = end_ring(&md.carrier, budget)?;
    let rg = &md.ring;
    let a = &md.carrier;
    let (nr, n) = (rg.n(), md.n());
    let hg = &end.table;
    let hom_of = |r: usize| Hom {
        omap: (0..n).map(|x| md.act(r, x)).collect(),
        mmap: (0..md.m()).map(|f| md.act_l(r, f)).collect(),
        fplus: (0..n * n).map(|i| md.ad(r, i / n, i % n)).collect(),
        fzero: md.z(r),
        ftwo: Vec::new(),
    };
    let omap = (0..nr)
        .map(|r| hg.hom_index(&hom_of(r)).ok_or_else(|| missing("an action endomorphism")))
        .collect::<Result<Vec<_>>>()?;
    let mor = |s: usize, t: usize, comp: Vec<usize>| {
        hg.mor_index(s, t, &TwoMor { comp }).ok_or_else(|| missing("an action 2-morphism"))
    };
    let rb = &rg.add.base;
    let mmap = (0..rg.m())
        .map(|rho| mor(omap[rb.src(rho)], omap[rb.tgt(rho)], (0..n).map(|x| md.act_r(rho, x)).collect()))
        .collect::<Result<Vec<_>>>()?;
    let mut fplus = Vec::with_capacity(nr * nr);
    let mut fdot = Vec::with_capacity(nr * nr);
    for r in 0..nr {
        for s in 0..nr {
            let sum = end.ring.add.add(omap[r], omap[s]);
            fplus.push(mor(omap[rg.add.add(r, s)], sum, (0..n).map(|x| md.bd(r, s, x)).collect())?);
            let prod = end.ring.mul(omap[r], omap[s]);
            fdot.push(mor(omap[rg.mul(r, s)], prod, (0..n).map(|x| md.ba(r, s, x)).collect())?);
        }
    }
    // F₀ at x is the unique u: 0·x → 0 with l∘(u+1) = (l₀·1)∘b⁻¹.
    let z0 = rg.add.unit;
    let mut uz = Vec::with_capacity(n);
    for x in 0..n {
        let zx = md.act(z0, x);
        let rhs = a.seq(&[a.inv(md.bd(z0, z0, x)), md.act_r(rg.add.l(z0), x)]);
        let u = a
            .base
            .hom(zx, a.unit)
            .iter()
            .copied()
            .find(|&u| a.seq(&[a.add_r(u, zx), a.l(zx)]) == rhs && rhs.is_some())
            .ok_or_else(|| Error::NotModule(format!("no unit component at {}", a.base.obj_name(x))))?;
        uz.push(u);
    }
    let fzero = mor(omap[z0], end.ring.add.unit, uz)?;
    let fone = mor(omap[rg.one], end.ring.one, (0..n).map(|x| md.i(x)).collect())?;
    let hom = Hom { omap, mmap, fplus, fzero, ftwo: Vec::new() };
    Ok(Representation { end, rep: RingHom { hom, fdot, fone } })
}

/// Read the module structure back off a representation.
pub fn module_from_rep(ring: Arc<TwoRing>, end: &EndRing, f: &RingHom) -> Result<Module> {
    let a = &end.carrier;
    let (nr, n, m) = (ring.n(), a.n(), a.m());
    let hg = &end.table;
    let bad = |msg: &str| Error::NotEndRing(msg.into());
    if f.hom.omap.len() != nr
        || f.hom.mmap.len() != ring.m()
        || f.fdot.len() != nr * nr
        || f.hom.fplus.len() != nr * nr
        || f.hom.omap.iter().any(|&x| x >= hg.homs.len())
        || f.hom.mmap.iter().chain(&f.hom.fplus).chain(&f.fdot).chain([&f.fone, &f.hom.fzero]).any(|&k| k >= hg.mors.len())
    {
        return Err(bad("representation tables do not point into the End ring"));
    }
    let endo = |r: usize| &hg.homs[f.hom.omap[r]];
    let comps = |k: usize| &hg.mors[k].2.comp;

    let mut act_obj = Vec::with_capacity(nr * n);
    for r in 0..nr {
        act_obj.extend_from_slice(&endo(r).omap);
    }
    let rb = &ring.add.base;
    let mut act_mor = Vec::with_capacity(ring.m() * m);
    for rho in 0..ring.m() {
        let (s, t, _) = hg.mors[f.hom.mmap[rho]];
        if s != f.hom.omap[rb.src(rho)] || t != f.hom.omap[rb.tgt(rho)] {
            return Err(bad("image of a ring morphism has the wrong endpoints"));
        }
        for g in 0..m {
            let v = a
                .seq(&[endo(rb.src(rho)).mmap[g], comps(f.hom.mmap[rho])[a.base.tgt(g)]])
                .ok_or_else(|| bad("action on morphisms is not composable"))?;
            act_mor.push(v);
        }
    }
    let mut adist = Vec::with_capacity(nr * n * n);
    let mut zzero = Vec::with_capacity(nr);
    for r in 0..nr {
        adist.extend_from_slice(&endo(r).fplus);
        zzero.push(endo(r).fzero);
    }
    let mut bdist = Vec::with_capacity(nr * nr * n);
    let mut bassoc = Vec::with_capacity(nr * nr * n);
    for r in 0..nr {
        for s in 0..nr {
            bdist.extend_from_slice(comps(f.hom.p(r, s)));
            bassoc.extend_from_slice(comps(f.dot(r, s)));
        }
    }
    let iunit = comps(f.fone).clone();
    Ok(Module { ring, carrier: a.clone(), act_obj, act_mor, adist, bdist, bassoc, iunit, zzero })
}
