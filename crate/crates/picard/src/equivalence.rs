//! Functor properties, cheap invariants, and exhaustive equivalence search between modules.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupoid::Groupoid;
use crate::rmodule::{compose_mod_hom, identity_mod_hom, validate_mod_hom, validate_mod_two_morphism, Module};
use crate::search::{for_each_hom, Endpoints, SearchBudget};
use crate::twogroup::{Hom, HomData, TwoGroup, TwoMor};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Vec<String>>,
}

impl Verdict {
    fn from_witness(witness: Option<Vec<String>>) -> Self {
        Verdict { holds: witness.is_none(), witness }
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

/// Witness: two distinct parallel morphisms with the same image.
pub fn is_faithful(dom: &Groupoid, _cod: &Groupoid, f: &Hom) -> Verdict {
    let w = pairs(dom.n_obj()).find_map(|(a, b)| {
        let hs = dom.hom(a, b);
        hs.iter().enumerate().find_map(|(i, &g)| {
            hs[i + 1..]
                .iter()
                .find(|&&h| f.mmap[g] == f.mmap[h])
                .map(|&h| vec![dom.mor_name(g).to_string(), dom.mor_name(h).to_string()])
        })
    });
    Verdict::from_witness(w)
}

/// Witness: the pair of objects and a morphism between their images that is not hit.
pub fn is_full(dom: &Groupoid, cod: &Groupoid, f: &Hom) -> Verdict {
    let w = pairs(dom.n_obj()).find_map(|(a, b)| {
        cod.hom(f.omap[a], f.omap[b])
            .iter()
            .find(|&&k| !dom.hom(a, b).iter().any(|&g| f.mmap[g] == k))
            .map(|&k| vec![dom.obj_name(a).into(), dom.obj_name(b).into(), cod.mor_name(k).into()])
    });
    Verdict::from_witness(w)
}

/// Witness: an object of the codomain not isomorphic to any image.
pub fn is_essentially_surjective(dom: &Groupoid, cod: &Groupoid, f: &Hom) -> Verdict {
    let w = (0..cod.n_obj())
        .find(|&y| !(0..dom.n_obj()).any(|a| cod.is_iso(f.omap[a], y)))
        .map(|y| vec![cod.obj_name(y).to_string()]);
    Verdict::from_witness(w)
}

/// Necessary conditions for equivalence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub pi0: usize,
    pub pi1: usize,
    pub aut_sizes: Vec<usize>,
}

pub fn invariants_fingerprint(t: &TwoGroup) -> Fingerprint {
    let s = t.base.skeleton_data();
    let mut aut_sizes: Vec<usize> = s.aut.iter().map(Vec::len).collect();
    aut_sizes.sort_unstable();
    Fingerprint { pi0: s.reps.len(), pi1: t.base.hom(t.unit, t.unit).len(), aut_sizes }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub forth: Hom,
    pub back: Hom,
    /// `back∘forth ⇒ 1`
    pub unit: TwoMor,
    /// `forth∘back ⇒ 1`
    pub counit: TwoMor,
}

/// The unique `g: a → b` with `F g = k`, given `F` full and faithful.
fn preimage(dom: &Groupoid, f: &Hom, a: usize, b: usize, k: Option<usize>) -> Option<usize> {
    let k = k?;
    dom.hom(a, b).iter().copied().find(|&g| f.mmap[g] == k)
}

/// Build a quasi-inverse of a full, faithful, essentially surjective `f: m → n`.
pub fn quasi_inverse(m: &Module, n: &Module, f: &Hom) -> Option<EquivalenceWitness> {
    let (ma, na) = (&m.carrier, &n.carrier);
    let (mg, ng) = (&ma.base, &na.base);
    let sk = mg.skeleton_data();
    let mut gobj = Vec::with_capacity(na.n());
    let mut eps = Vec::with_capacity(na.n());
    for y in 0..na.n() {
        let exact = (0..ma.n()).find(|&a| f.omap[a] == y);
        let (c, e) = match exact {
            Some(a) => (a, ng.id(y)),
            None => {
                let c = *sk.reps.iter().find(|&&c| ng.is_iso(f.omap[c], y))?;
                (c, *ng.hom(f.omap[c], y).first()?)
            }
        };
        gobj.push(c);
        eps.push(e);
    }
    let mut gmor = Vec::with_capacity(na.m());
    for g in 0..na.m() {
        let (y, y2) = (ng.src(g), ng.tgt(g));
        gmor.push(preimage(mg, f, gobj[y], gobj[y2], na.seq(&[eps[y], g, na.inv(eps[y2])]))?);
    }
    let nn = na.n();
    let mut gplus = Vec::with_capacity(nn * nn);
    for y in 0..nn {
        for y2 in 0..nn {
            let (a, b) = (gobj[y], gobj[y2]);
            let k = na.seq(&[
                eps[na.add(y, y2)],
                na.inv(na.addm(eps[y], eps[y2])),
                na.inv(f.p(a, b)),
            ]);
            gplus.push(preimage(mg, f, gobj[na.add(y, y2)], ma.add(a, b), k)?);
        }
    }
    let gzero = preimage(mg, f, gobj[na.unit], ma.unit, na.seq(&[eps[na.unit], na.inv(f.z())]))?;
    let mut gtwo = Vec::with_capacity(n.ring.n() * nn);
    for r in 0..n.ring.n() {
        for y in 0..nn {
            let k = na.seq(&[eps[n.act(r, y)], na.inv(n.act_l(r, eps[y])), na.inv(f.t(r, gobj[y]))]);
            gtwo.push(preimage(mg, f, gobj[n.act(r, y)], m.act(r, gobj[y]), k)?);
        }
    }
    let back = Hom { omap: gobj, mmap: gmor, fplus: gplus, fzero: gzero, ftwo: gtwo };
    let unit = TwoMor {
        comp: (0..ma.n())
            .map(|x| preimage(mg, f, back.omap[f.omap[x]], x, Some(eps[f.omap[x]])))
            .collect::<Option<Vec<_>>>()?,
    };
    let w = EquivalenceWitness { forth: f.clone(), back, unit, counit: TwoMor { comp: eps } };
    verify(m, n, &w).ok().filter(|&ok| ok).map(|_| w)
}

/// Run every validator on a witness. Components live in groupoids, so they are invertible.
pub fn verify(m: &Module, n: &Module, w: &EquivalenceWitness) -> Result<bool> {
    let gf = compose_mod_hom(m, n, m, &w.forth, &w.back)?;
    let fg = compose_mod_hom(n, m, n, &w.back, &w.forth)?;
    Ok(validate_mod_hom(m, n, &w.forth)?.all_pass()
        && validate_mod_hom(n, m, &w.back)?.all_pass()
        && validate_mod_two_morphism(m, m, &gf, &identity_mod_hom(m), &w.unit)?.all_pass()
        && validate_mod_two_morphism(n, n, &fg, &identity_mod_hom(n), &w.counit)?.all_pass())
}

/// `Ok(None)` is a definitive answer; running out of budget is an error.
pub fn find_equivalence(m: &Module, n: &Module, budget: &SearchBudget) -> Result<Option<EquivalenceWitness>> {
    Ok(find_equivalence_stats(m, n, budget)?.0)
}

/// Like [`find_equivalence`], also returning the number of search nodes visited.
pub fn find_equivalence_stats(
    m: &Module,
    n: &Module,
    budget: &SearchBudget,
) -> Result<(Option<EquivalenceWitness>, u64)> {
    if !m.same_ring(n) {
        return Err(Error::RingMismatch("modules are over different rings".into()));
    }
    if invariants_fingerprint(&m.carrier) != invariants_fingerprint(&n.carrier) {
        return Ok((None, 0));
    }
    let mut found = None;
    let mut ticker = budget.ticker();
    for_each_hom(Endpoints::Modules(m, n), true, &mut ticker, &mut |h| {
        let (mg, ng) = (&m.carrier.base, &n.carrier.base);
        if !(is_faithful(mg, ng, &h).holds && is_full(mg, ng, &h).holds && is_essentially_surjective(mg, ng, &h).holds) {
            return Ok(false);
        }
        found = quasi_inverse(m, n, &h);
        Ok(found.is_some())
    })?;
    Ok((found, ticker.nodes))
}
