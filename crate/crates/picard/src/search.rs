//! Backtracking enumeration of homomorphisms and 2-morphisms.
//!
//! Every structure component is a variable whose domain is a hom-set of the codomain; each
//! coherence square becomes a check that fires as soon as its last variable is assigned.

use std::rc::Rc;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::groupoid::{Groupoid, Skeleton};
use crate::rmodule::{faces as mfaces, validate_mod_hom, validate_mod_two_morphism, Module};
use crate::twogroup::{faces, mor_faces, validate_hom, validate_two_morphism, Hom, HomData, TwoGroup, TwoMor};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_objects: usize,
    pub max_morphisms: usize,
    pub max_candidates: u64,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_objects: 8, max_morphisms: 64, max_candidates: 20_000_000, time_limit: None }
    }
}

impl SearchBudget {
    pub fn with_candidates(max_candidates: u64) -> Self {
        SearchBudget { max_candidates, ..Self::default() }
    }

    pub fn ticker(&self) -> Ticker {
        Ticker { nodes: 0, max: self.max_candidates, deadline: self.time_limit.map(|d| Instant::now() + d) }
    }

    /// Enforce the size caps on an input of an exhaustive enumeration.
    pub fn admit(&self, what: &str, g: &Groupoid) -> Result<()> {
        if g.n_obj() > self.max_objects || g.n_mor() > self.max_morphisms {
            return Err(Error::BudgetExceeded(format!(
                "{what} has {} objects and {} morphisms; caps are {} and {}",
                g.n_obj(),
                g.n_mor(),
                self.max_objects,
                self.max_morphisms
            )));
        }
        Ok(())
    }
}

/// Counts search nodes against the budget.
#[derive(Debug, Clone)]
pub struct Ticker {
    pub nodes: u64,
    max: u64,
    deadline: Option<Instant>,
}

impl Ticker {
    pub fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max {
            return Err(Error::BudgetExceeded(format!("more than {} candidates examined", self.max)));
        }
        if self.nodes % 4096 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    return Err(Error::BudgetExceeded("time limit reached".into()));
                }
            }
        }
        Ok(())
    }
}

const UNSET: usize = usize::MAX;

type Domain<'a> = Box<dyn Fn(&[usize]) -> Vec<usize> + 'a>;
type Check<'a> = Box<dyn Fn(&[usize]) -> bool + 'a>;

struct Csp<'a> {
    domains: Vec<Domain<'a>>,
    checks: Vec<Vec<Check<'a>>>,
}

impl<'a> Csp<'a> {
    fn new() -> Self {
        Csp { domains: Vec::new(), checks: Vec::new() }
    }

    fn var(&mut self, d: Domain<'a>) -> usize {
        self.domains.push(d);
        self.checks.push(Vec::new());
        self.domains.len() - 1
    }

    /// Attach a check to the last of the variables it reads.
    fn check(&mut self, deps: &[usize], c: Check<'a>) {
        let at = *deps.iter().max().expect("check with no dependencies");
        self.checks[at].push(c);
    }

    fn solve(&self, ticker: &mut Ticker, visit: &mut dyn FnMut(&[usize]) -> Result<bool>) -> Result<()> {
        let mut asg = vec![UNSET; self.domains.len()];
        self.rec(0, &mut asg, ticker, visit).map(|_| ())
    }

    fn rec(
        &self,
        i: usize,
        asg: &mut Vec<usize>,
        ticker: &mut Ticker,
        visit: &mut dyn FnMut(&[usize]) -> Result<bool>,
    ) -> Result<bool> {
        if i == asg.len() {
            return visit(asg);
        }
        for v in (self.domains[i])(asg) {
            ticker.tick()?;
            asg[i] = v;
            if self.checks[i].iter().all(|c| c(asg)) && self.rec(i + 1, asg, ticker, visit)? {
                return Ok(true);
            }
        }
        asg[i] = UNSET;
        Ok(false)
    }
}

/// Variable positions of a hom search.
struct Layout {
    n: usize,
    o: usize,
    mvar: Vec<usize>,
    z: usize,
    p: usize,
    t: usize,
}

struct View<'v> {
    asg: &'v [usize],
    l: &'v Layout,
}

impl HomData for View<'_> {
    fn o(&self, a: usize) -> usize {
        self.asg[self.l.o + a]
    }
    fn f(&self, m: usize) -> usize {
        self.asg[self.l.mvar[m]]
    }
    fn p(&self, a: usize, b: usize) -> usize {
        self.asg[self.l.p + a * self.l.n + b]
    }
    fn z(&self) -> usize {
        self.asg[self.l.z]
    }
    fn t(&self, r: usize, m: usize) -> usize {
        self.asg[self.l.t + r * self.l.n + m]
    }
}

/// The two kinds of hom this engine enumerates.
#[derive(Clone, Copy)]
pub enum Endpoints<'a> {
    Groups(&'a TwoGroup, &'a TwoGroup),
    Modules(&'a Module, &'a Module),
}

impl<'a> Endpoints<'a> {
    fn groups(&self) -> (&'a TwoGroup, &'a TwoGroup) {
        match *self {
            Endpoints::Groups(d, c) => (d, c),
            Endpoints::Modules(d, c) => (&d.carrier, &c.carrier),
        }
    }

    fn validate(&self, h: &Hom) -> bool {
        match *self {
            Endpoints::Groups(d, c) => validate_hom(d, c, h).map(|r| r.all_pass()).unwrap_or(false),
            Endpoints::Modules(d, c) => validate_mod_hom(d, c, h).map(|r| r.all_pass()).unwrap_or(false),
        }
    }

    fn validate_mor(&self, f: &Hom, g: &Hom, e: &TwoMor) -> bool {
        match *self {
            Endpoints::Groups(d, c) => validate_two_morphism(d, c, f, g, e).map(|r| r.all_pass()).unwrap_or(false),
            Endpoints::Modules(d, c) => validate_mod_two_morphism(d, c, f, g, e).map(|r| r.all_pass()).unwrap_or(false),
        }
    }
}

/// Morphism order for the search: automorphisms of representatives, transports, morphisms
/// touching a representative, then the rest. Later ones are pinned by composition.
fn morphism_order(g: &Groupoid, s: &Skeleton) -> Vec<usize> {
    let key = |f: usize| {
        let (a, b) = (g.src(f), g.tgt(f));
        let class = s.rep[a];
        let cat = if a == class && b == class {
            0
        } else if b == class && f == s.to_rep[a] {
            1
        } else if a == class || b == class {
            2
        } else {
            3
        };
        (class, cat, f)
    };
    let mut order: Vec<usize> = (0..g.n_mor()).collect();
    order.sort_by_key(|&f| key(f));
    order
}

/// Enumerate homs in deterministic order. In `equivalence` mode only candidates for a full,
/// faithful, essentially surjective hom that sends every object to the image of its
/// representative (with transports sent to identities) are produced.
pub fn for_each_hom(
    ends: Endpoints<'_>,
    equivalence: bool,
    ticker: &mut Ticker,
    visit: &mut dyn FnMut(Hom) -> Result<bool>,
) -> Result<()> {
    let (d, c) = ends.groups();
    let (dg, cg) = (&d.base, &c.base);
    let (n, m) = (d.n(), d.m());
    let sk = Rc::new(dg.skeleton_data());
    let modules = match ends {
        Endpoints::Modules(dm, cm) => Some((dm, cm)),
        Endpoints::Groups(..) => None,
    };
    let nr = modules.map(|(dm, _)| dm.ring.n()).unwrap_or(0);

    let order = morphism_order(dg, &sk);
    let mut mvar = vec![0; m];
    for (k, &f) in order.iter().enumerate() {
        mvar[f] = n + k;
    }
    let l = Rc::new(Layout { n, o: 0, mvar, z: n + m, p: n + m + 1, t: n + m + 1 + n * n });
    let mut csp = Csp::new();

    // objects
    for a in 0..n {
        let sk2 = sk.clone();
        csp.var(Box::new(move |asg| {
            if equivalence && sk2.rep[a] != a {
                vec![asg[sk2.rep[a]]]
            } else {
                (0..cg.n_obj()).collect()
            }
        }));
    }
    let iso = move |x: usize, y: usize| cg.is_iso(x, y);
    csp.check(&[d.unit], Box::new(move |asg| iso(asg[d.unit], c.unit)));
    for x in 0..n {
        for y in 0..n {
            let z = d.add(x, y);
            csp.check(&[x, y, z], Box::new(move |asg| iso(asg[z], c.add(asg[x], asg[y]))));
        }
        let r0 = sk.rep[x];
        if r0 != x {
            csp.check(&[x, r0], Box::new(move |asg| iso(asg[x], asg[r0])));
        }
    }
    if let Some((dm, cm)) = modules {
        for r in 0..nr {
            for x in 0..n {
                let z = dm.act(r, x);
                csp.check(&[x, z], Box::new(move |asg| iso(asg[z], cm.act(r, asg[x]))));
            }
        }
    }
    if equivalence {
        for (i, &c1) in sk.reps.iter().enumerate() {
            let aut = dg.hom(c1, c1).len();
            csp.check(&[c1], Box::new(move |asg| cg.hom(asg[c1], asg[c1]).len() == aut));
            for &c0 in &sk.reps[..i] {
                csp.check(&[c0, c1], Box::new(move |asg| !iso(asg[c0], asg[c1])));
            }
        }
    }

    // morphisms
    for &f in &order {
        let (s, t) = (dg.src(f), dg.tgt(f));
        let is_id = dg.id(s) == f;
        let transport = equivalence && s != sk.rep[s] && f == sk.to_rep[s];
        csp.var(Box::new(move |asg| {
            let (fs, ft) = (asg[s], asg[t]);
            if is_id || transport {
                if fs == ft {
                    vec![cg.id(fs)]
                } else {
                    vec![]
                }
            } else {
                cg.hom(fs, ft).to_vec()
            }
        }));
    }
    for (g2, f1) in dg.composable_pairs() {
        let h = dg.comp(g2, f1).unwrap();
        let lv = l.clone();
        csp.check(
            &[l.mvar[g2], l.mvar[f1], l.mvar[h]],
            Box::new(move |asg| cg.comp(asg[lv.mvar[g2]], asg[lv.mvar[f1]]) == Some(asg[lv.mvar[h]])),
        );
    }
    if equivalence {
        for &c1 in &sk.reps {
            let aut: Vec<usize> = dg.hom(c1, c1).to_vec();
            let deps: Vec<usize> = aut.iter().map(|&f| l.mvar[f]).collect();
            csp.check(
                &deps.clone(),
                Box::new(move |asg| {
                    let mut img: Vec<usize> = deps.iter().map(|&v| asg[v]).collect();
                    img.sort_unstable();
                    img.windows(2).all(|w| w[0] != w[1])
                }),
            );
        }
    }

    // F₀
    let unit = d.unit;
    csp.var(Box::new(move |asg| cg.hom(asg[unit], c.unit).to_vec()));

    // F₊
    for a in 0..n {
        for b in 0..n {
            let ab = d.add(a, b);
            csp.var(Box::new(move |asg| cg.hom(asg[ab], c.add(asg[a], asg[b])).to_vec()));
        }
    }
    let pv = |a: usize, b: usize| l.p + a * n + b;
    macro_rules! hom_check {
        ($deps:expr, |$h:ident| $body:expr) => {{
            let lv = l.clone();
            csp.check(
                &$deps,
                Box::new(move |asg| {
                    let $h = View { asg, l: &lv };
                    $body
                }),
            );
        }};
    }
    for f in 0..m {
        let (s, t) = (dg.src(f), dg.tgt(f));
        for b in 0..n {
            hom_check!([pv(s, b), pv(t, b)], |h| faces::fplus_natural(d, c, &h, f, b, true));
            hom_check!([pv(b, s), pv(b, t)], |h| faces::fplus_natural(d, c, &h, f, b, false));
        }
    }
    for a in 0..n {
        for b in 0..n {
            hom_check!([pv(a, b), pv(b, a)], |h| faces::sym(d, c, &h, a, b));
            for x in 0..n {
                hom_check!([pv(a, b), pv(d.add(a, b), x), pv(b, x), pv(a, d.add(b, x))], |h| faces::assoc(
                    d, c, &h, a, b, x
                ));
            }
        }
        hom_check!([pv(d.unit, a), l.z], |h| faces::lunit(d, c, &h, a));
        hom_check!([pv(a, d.unit), l.z], |h| faces::runit(d, c, &h, a));
    }

    // F₂
    if let Some((dm, cm)) = modules {
        let rg = &dm.ring.add.base;
        for r in 0..nr {
            for x in 0..n {
                let rx = dm.act(r, x);
                csp.var(Box::new(move |asg| cg.hom(asg[rx], cm.act(r, asg[x])).to_vec()));
            }
        }
        let tv = |r: usize, x: usize| l.t + r * n + x;
        for rho in 0..rg.n_mor() {
            let (s, t) = (rg.src(rho), rg.tgt(rho));
            for x in 0..n {
                hom_check!([tv(s, x), tv(t, x)], |h| mfaces::ftwo_natural_ring(dm, cm, &h, rho, x));
            }
        }
        for r in 0..nr {
            for f in 0..m {
                hom_check!([tv(r, dg.src(f)), tv(r, dg.tgt(f))], |h| mfaces::ftwo_natural_mod(dm, cm, &h, r, f));
            }
            for x in 0..n {
                for y in 0..n {
                    hom_check!([tv(r, d.add(x, y)), tv(r, x), tv(r, y)], |h| mfaces::adist(dm, cm, &h, r, x, y));
                }
                for s in 0..nr {
                    let rs = dm.ring.add.add(r, s);
                    hom_check!([tv(rs, x), tv(r, x), tv(s, x)], |h| mfaces::bdist(dm, cm, &h, r, s, x));
                    let rm = dm.ring.mul(r, s);
                    hom_check!([tv(rm, x), tv(s, x), tv(r, dm.act(s, x))], |h| mfaces::bassoc(dm, cm, &h, r, s, x));
                }
            }
            hom_check!([tv(r, d.unit)], |h| mfaces::zzero(dm, cm, &h, r));
        }
        for x in 0..n {
            hom_check!([tv(dm.ring.one, x)], |h| mfaces::iunit(dm, cm, &h, x));
        }
    }

    let lv = l.clone();
    csp.solve(ticker, &mut |asg| {
        let v = View { asg, l: &lv };
        let h = Hom {
            omap: (0..n).map(|a| v.o(a)).collect(),
            mmap: (0..m).map(|f| v.f(f)).collect(),
            fplus: (0..n * n).map(|i| v.p(i / n, i % n)).collect(),
            fzero: v.z(),
            ftwo: (0..nr * n).map(|i| v.t(i / n, i % n)).collect(),
        };
        if !ends.validate(&h) {
            return Ok(false);
        }
        visit(h)
    })
}

pub fn all_homs(ends: Endpoints<'_>, ticker: &mut Ticker) -> Result<Vec<Hom>> {
    let mut out = Vec::new();
    for_each_hom(ends, false, ticker, &mut |h| {
        out.push(h);
        Ok(false)
    })?;
    Ok(out)
}

/// Enumerate all 2-morphisms `f ⇒ g`.
pub fn for_each_two_morphism(
    ends: Endpoints<'_>,
    f: &Hom,
    g: &Hom,
    ticker: &mut Ticker,
    visit: &mut dyn FnMut(TwoMor) -> Result<bool>,
) -> Result<()> {
    let (d, c) = ends.groups();
    let (dg, cg) = (&d.base, &c.base);
    let n = d.n();
    let mut csp = Csp::new();
    for a in 0..n {
        let (fa, ga) = (f.omap[a], g.omap[a]);
        csp.var(Box::new(move |_| cg.hom(fa, ga).to_vec()));
    }
    for mm in 0..dg.n_mor() {
        csp.check(&[dg.src(mm), dg.tgt(mm)], Box::new(move |asg| mor_faces::natural_at(d, c, f, g, asg, mm)));
    }
    for a in 0..n {
        for b in 0..n {
            csp.check(&[a, b, d.add(a, b)], Box::new(move |asg| mor_faces::plus_at(d, c, f, g, asg, a, b)));
        }
    }
    csp.check(&[d.unit], Box::new(move |asg| mor_faces::zero_at(d, c, f, g, asg)));
    if let Endpoints::Modules(dm, cm) = ends {
        for r in 0..dm.ring.n() {
            for x in 0..n {
                csp.check(&[x, dm.act(r, x)], Box::new(move |asg| mfaces::mor_action(dm, cm, f, g, asg, r, x)));
            }
        }
    }
    csp.solve(ticker, &mut |asg| {
        let e = TwoMor { comp: asg.to_vec() };
        if !ends.validate_mor(f, g, &e) {
            return Ok(false);
        }
        visit(e)
    })
}

pub fn all_two_morphisms(ends: Endpoints<'_>, f: &Hom, g: &Hom, ticker: &mut Ticker) -> Result<Vec<TwoMor>> {
    let mut out = Vec::new();
    for_each_two_morphism(ends, f, g, ticker, &mut |e| {
        out.push(e);
        Ok(false)
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twogroup::{build_deloop, build_discrete, GroupTable};

    fn count(d: &TwoGroup, c: &TwoGroup) -> usize {
        all_homs(Endpoints::Groups(d, c), &mut SearchBudget::default().ticker()).unwrap().len()
    }

    /// Independent count of homs B(Z/a) → B(Z/b): group homs times the choice of F₊(0,0),
    /// with F₀ then forced by the unit squares.
    fn deloop_oracle(a: usize, b: usize) -> usize {
        let group_homs = (0..b).filter(|&k| (k * a) % b == 0).count();
        group_homs * b
    }

    #[test]
    fn deloop_counts_match_oracle() {
        for (a, b) in [(2, 2), (4, 2), (2, 4), (4, 4), (3, 2)] {
            let (x, y) = (build_deloop(&GroupTable::cyclic(a)).unwrap(), build_deloop(&GroupTable::cyclic(b)).unwrap());
            assert_eq!(count(&x, &y), deloop_oracle(a, b), "B{a} -> B{b}");
        }
    }

    #[test]
    fn discrete_counts_are_group_homs() {
        for (a, b) in [(2, 2), (3, 3), (4, 2), (2, 4), (6, 3)] {
            let (x, y) = (build_discrete(&GroupTable::cyclic(a)).unwrap(), build_discrete(&GroupTable::cyclic(b)).unwrap());
            let oracle = (0..b).filter(|&k| (k * a) % b == 0).count();
            assert_eq!(count(&x, &y), oracle);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let x = build_deloop(&GroupTable::cyclic(4)).unwrap();
        let err = all_homs(Endpoints::Groups(&x, &x), &mut SearchBudget::with_candidates(3).ticker()).unwrap_err();
        assert_eq!(err.kind(), "BUDGET_EXCEEDED");
    }

    #[test]
    fn two_morphisms_of_identity_on_deloop() {
        let x = build_deloop(&GroupTable::cyclic(2)).unwrap();
        let id = Hom::identity(&x);
        let ms = all_two_morphisms(Endpoints::Groups(&x, &x), &id, &id, &mut SearchBudget::default().ticker()).unwrap();
        assert_eq!(ms, vec![TwoMor { comp: vec![0] }]);
    }

    /// Exhaustive product over every table entry, filtered by the validator alone.
    fn brute_module_homs(d: &Module, c: &Module) -> Vec<Hom> {
        let (dg, cg) = (&d.carrier.base, &c.carrier.base);
        let (n, nr) = (d.n(), d.ring.n());
        let mut out = Vec::new();
        let omaps = (0..cg.n_obj().pow(n as u32)).map(|mut k| {
            (0..n)
                .map(|_| {
                    let x = k % cg.n_obj();
                    k /= cg.n_obj();
                    x
                })
                .collect::<Vec<_>>()
        });
        for omap in omaps {
            let mut slots: Vec<Vec<usize>> = Vec::new();
            for f in 0..dg.n_mor() {
                slots.push(cg.hom(omap[dg.src(f)], omap[dg.tgt(f)]).to_vec());
            }
            for a in 0..n {
                for b in 0..n {
                    let s = c.carrier.add(omap[a], omap[b]);
                    slots.push(cg.hom(omap[d.carrier.add(a, b)], s).to_vec());
                }
            }
            slots.push(cg.hom(omap[d.carrier.unit], c.carrier.unit).to_vec());
            for r in 0..nr {
                for x in 0..n {
                    slots.push(cg.hom(omap[d.act(r, x)], c.act(r, omap[x])).to_vec());
                }
            }
            let mut idx = vec![0usize; slots.len()];
            if slots.iter().any(|s| s.is_empty()) {
                continue;
            }
            loop {
                let v: Vec<usize> = idx.iter().zip(&slots).map(|(&i, s)| s[i]).collect();
                let m = dg.n_mor();
                let h = Hom {
                    omap: omap.clone(),
                    mmap: v[..m].to_vec(),
                    fplus: v[m..m + n * n].to_vec(),
                    fzero: v[m + n * n],
                    ftwo: v[m + n * n + 1..].to_vec(),
                };
                if validate_mod_hom(d, c, &h).unwrap().all_pass() {
                    out.push(h);
                }
                let mut k = 0;
                while k < idx.len() {
                    idx[k] += 1;
                    if idx[k] < slots[k].len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == idx.len() {
                    break;
                }
            }
        }
        out.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
        out
    }

    #[test]
    fn module_search_agrees_with_brute_force() {
        use crate::catalog::module;
        for (a, b) in [("D2/Z2", "D2/Z2"), ("B2/Z2", "B2/Z2"), ("D4/Z4", "D2/Z4"), ("D2/Z4", "D4/Z4"), ("B2/Z4", "B2/Z4"), ("D2/Z2", "B2/Z2")] {
            let (x, y) = (module(a).unwrap(), module(b).unwrap());
            let mut fast = all_homs(Endpoints::Modules(&x, &y), &mut SearchBudget::default().ticker()).unwrap();
            fast.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
            assert_eq!(fast, brute_module_homs(&x, &y), "{a} -> {b}");
            assert!(!fast.is_empty());
        }
    }
}
