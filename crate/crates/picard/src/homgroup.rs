//! The symmetric 2-group of all homs between two fixed 2-groups or modules, with pointwise sum.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groupoid::{Groupoid, MorDecl};
use crate::rmodule::zero_hom;
use crate::search::{all_homs, all_two_morphisms, Endpoints, SearchBudget, Ticker};
use crate::twogroup::{vcomp, Hom, HomData, TwoGroup, TwoMor};

/// A Hom 2-group together with the tables behind each object and morphism.
#[derive(Debug, Clone)]
pub struct HomGroup {
    pub group: TwoGroup,
    pub homs: Vec<Hom>,
    /// `(source, target, components)` for every morphism.
    pub mors: Vec<(usize, usize, TwoMor)>,
    index: HashMap<Hom, usize>,
    mor_index: HashMap<(usize, usize, TwoMor), usize>,
}

impl HomGroup {
    pub fn hom_index(&self, h: &Hom) -> Option<usize> {
        self.index.get(h).copied()
    }

    pub fn mor_index(&self, s: usize, t: usize, e: &TwoMor) -> Option<usize> {
        self.mor_index.get(&(s, t, e.clone())).copied()
    }

    fn need_hom(&self, h: &Hom) -> Result<usize> {
        self.hom_index(h).ok_or_else(|| Error::MalformedTable("pointwise result is not an enumerated hom".into()))
    }

    fn need_mor(&self, s: usize, t: usize, comp: Vec<usize>) -> Result<usize> {
        self.mor_index(s, t, &TwoMor { comp })
            .ok_or_else(|| Error::MalformedTable("pointwise result is not an enumerated 2-morphism".into()))
    }
}

fn endpoint_groups<'a>(ends: &Endpoints<'a>) -> (&'a TwoGroup, &'a TwoGroup) {
    match *ends {
        Endpoints::Groups(d, c) => (d, c),
        Endpoints::Modules(d, c) => (&d.carrier, &c.carrier),
    }
}

/// Pointwise sum `F + G`.
pub fn hom_sum(ends: Endpoints<'_>, f: &Hom, g: &Hom) -> Hom {
    let (d, c) = endpoint_groups(&ends);
    let n = d.n();
    let omap = (0..n).map(|a| c.add(f.o(a), g.o(a))).collect();
    let mmap = (0..d.m()).map(|x| c.addm(f.f(x), g.f(x))).collect();
    let mut fplus = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let ic = c.interchange(f.o(a), f.o(b), g.o(a), g.o(b));
            fplus.push(c.seq(&[c.addm(f.p(a, b), g.p(a, b)), ic]).expect("interchange composite"));
        }
    }
    let fzero = c.seq(&[c.addm(f.z(), g.z()), c.l(c.unit)]).expect("unit composite");
    let ftwo = match ends {
        Endpoints::Groups(..) => Vec::new(),
        Endpoints::Modules(dm, cm) => {
            let mut t = Vec::with_capacity(dm.ring.n() * n);
            for r in 0..dm.ring.n() {
                for x in 0..n {
                    let back = c.inv(cm.ad(r, f.o(x), g.o(x)));
                    t.push(c.seq(&[c.addm(f.t(r, x), g.t(r, x)), back]).expect("action composite"));
                }
            }
            t
        }
    };
    Hom { omap, mmap, fplus, fzero, ftwo }
}

/// Enumerate every hom and 2-morphism and assemble the pointwise 2-group.
pub fn pointwise_group(ends: Endpoints<'_>, budget: &SearchBudget, ticker: &mut Ticker) -> Result<HomGroup> {
    let (d, c) = endpoint_groups(&ends);
    budget.admit("domain", &d.base)?;
    budget.admit("codomain", &c.base)?;
    let homs = all_homs(ends, ticker)?;
    let index: HashMap<Hom, usize> = homs.iter().cloned().enumerate().map(|(i, h)| (h, i)).collect();
    let zero = match ends {
        Endpoints::Groups(d, c) => Hom::zero(d, c),
        Endpoints::Modules(d, c) => zero_hom(d, c)?,
    };
    let unit = *index.get(&zero).ok_or_else(|| Error::MalformedTable("zero hom was not enumerated".into()))?;

    let mut mors = Vec::new();
    let mut mor_index = HashMap::new();
    let mut ids = vec![0; homs.len()];
    for (i, f) in homs.iter().enumerate() {
        for (j, g) in homs.iter().enumerate() {
            for e in all_two_morphisms(ends, f, g, ticker)? {
                if i == j && e == TwoMor::identity(c, f) {
                    ids[i] = mors.len();
                }
                mor_index.insert((i, j, e.clone()), mors.len());
                mors.push((i, j, e));
            }
        }
    }
    let cap = budget.max_morphisms * budget.max_morphisms;
    if mors.len() > cap {
        return Err(Error::BudgetExceeded(format!(
            "hom 2-group has {} 2-morphisms; cap is {cap}",
            mors.len()
        )));
    }
    let objects: Vec<String> = (0..homs.len()).map(|i| format!("F{i}")).collect();
    let decls: Vec<MorDecl> = mors.iter().enumerate().map(|(k, (s, t, _))| (format!("e{k}"), *s, *t)).collect();
    let mut comp_table = HashMap::new();
    for (k1, (s1, t1, e1)) in mors.iter().enumerate() {
        for (k2, (s2, t2, e2)) in mors.iter().enumerate() {
            if t1 == s2 {
                let e = vcomp(c, e1, e2)?;
                let h = *mor_index.get(&(*s1, *t2, e)).ok_or_else(|| Error::MalformedTable("vertical composite missing".into()))?;
                comp_table.insert((k2, k1), h);
            }
        }
    }
    let inv: Vec<usize> = mors
        .iter()
        .map(|(s, t, e)| mor_index[&(*t, *s, e.inverse(c))])
        .collect();
    let base = Groupoid::from_tables(objects, decls, ids, &comp_table, inv)?;

    let mut hg = HomGroup {
        group: TwoGroup {
            base,
            plus_obj: Vec::new(),
            plus_mor: Vec::new(),
            unit,
            assoc: Vec::new(),
            lunit: Vec::new(),
            runit: Vec::new(),
            sym: Vec::new(),
            dual: Vec::new(),
            eta: Vec::new(),
        },
        homs,
        mors,
        index,
        mor_index,
    };
    let n = hg.homs.len();
    let dn = d.n();
    let mut plus_obj = Vec::with_capacity(n * n);
    for f in &hg.homs {
        for g in &hg.homs {
            plus_obj.push(hg.need_hom(&hom_sum(ends, f, g))?);
        }
    }
    let mut plus_mor = Vec::with_capacity(hg.mors.len() * hg.mors.len());
    for (s1, t1, e1) in &hg.mors {
        for (s2, t2, e2) in &hg.mors {
            let comp = (0..dn).map(|x| c.addm(e1.comp[x], e2.comp[x])).collect();
            plus_mor.push(hg.need_mor(plus_obj[s1 * n + s2], plus_obj[t1 * n + t2], comp)?);
        }
    }
    let sum = |a: usize, b: usize| plus_obj[a * n + b];
    let mut assoc = Vec::with_capacity(n * n * n);
    let mut sym = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            for x in 0..n {
                let (fa, fb, fx) = (&hg.homs[a], &hg.homs[b], &hg.homs[x]);
                let comp = (0..dn).map(|m| c.a(fa.o(m), fb.o(m), fx.o(m))).collect();
                assoc.push(hg.need_mor(sum(sum(a, b), x), sum(a, sum(b, x)), comp)?);
            }
            let comp = (0..dn).map(|m| c.c(hg.homs[a].o(m), hg.homs[b].o(m))).collect();
            sym.push(hg.need_mor(sum(a, b), sum(b, a), comp)?);
        }
    }
    let mut lunit = Vec::with_capacity(n);
    let mut runit = Vec::with_capacity(n);
    for a in 0..n {
        let fa = &hg.homs[a];
        lunit.push(hg.need_mor(sum(unit, a), a, (0..dn).map(|m| c.l(fa.o(m))).collect())?);
        runit.push(hg.need_mor(sum(a, unit), a, (0..dn).map(|m| c.r(fa.o(m))).collect())?);
    }
    let mut dual = Vec::with_capacity(n);
    let mut eta = Vec::with_capacity(n);
    for a in 0..n {
        let (b, e) = (0..n)
            .find_map(|b| hg.group.base.hom(sum(b, a), unit).first().map(|&e| (b, e)))
            .ok_or_else(|| Error::NotGroup(format!("hom F{a} has no additive inverse")))?;
        dual.push(b);
        eta.push(e);
    }
    let g = &mut hg.group;
    g.plus_obj = plus_obj;
    g.plus_mor = plus_mor;
    g.assoc = assoc;
    g.lunit = lunit;
    g.runit = runit;
    g.sym = sym;
    g.dual = dual;
    g.eta = eta;
    Ok(hg)
}
