//! Symmetric 2-groups, their homomorphisms and 2-morphisms.

use crate::error::{Error, Result};
use crate::groupoid::{bifunctor_violation, functor_violation, validate_groupoid, Functor, Groupoid, MorDecl};
use crate::report::CheckReport;

/// Both sides of a diagram evaluated; `None` means a path was not composable.
pub(crate) fn same(lhs: Option<usize>, rhs: Option<usize>) -> bool {
    lhs.is_some() && lhs == rhs
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoGroup {
    pub base: Groupoid,
    /// `a + b` at `a * n + b`.
    pub plus_obj: Vec<usize>,
    /// `f + g` at `f * m + g`.
    pub plus_mor: Vec<usize>,
    pub unit: usize,
    /// `⟨a,b,c⟩: (a+b)+c → a+(b+c)` at `(a * n + b) * n + c`.
    pub assoc: Vec<usize>,
    /// `l_a: 0+a → a`
    pub lunit: Vec<usize>,
    /// `r_a: a+0 → a`
    pub runit: Vec<usize>,
    /// `c_{a,b}: a+b → b+a` at `a * n + b`.
    pub sym: Vec<usize>,
    pub dual: Vec<usize>,
    /// `η_a: a*+a → 0`
    pub eta: Vec<usize>,
}

impl TwoGroup {
    pub fn n(&self) -> usize {
        self.base.n_obj()
    }

    pub fn m(&self) -> usize {
        self.base.n_mor()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.plus_obj[a * self.n() + b]
    }

    pub fn addm(&self, f: usize, g: usize) -> usize {
        self.plus_mor[f * self.m() + g]
    }

    pub fn a(&self, a: usize, b: usize, c: usize) -> usize {
        let n = self.n();
        self.assoc[(a * n + b) * n + c]
    }

    pub fn l(&self, a: usize) -> usize {
        self.lunit[a]
    }

    pub fn r(&self, a: usize) -> usize {
        self.runit[a]
    }

    pub fn c(&self, a: usize, b: usize) -> usize {
        self.sym[a * self.n() + b]
    }

    pub fn id(&self, a: usize) -> usize {
        self.base.id(a)
    }

    pub fn inv(&self, f: usize) -> usize {
        self.base.inv(f)
    }

    pub fn seq(&self, fs: &[usize]) -> Option<usize> {
        self.base.seq(fs)
    }

    /// `f + 1_b`
    pub fn add_r(&self, f: usize, b: usize) -> usize {
        self.addm(f, self.id(b))
    }

    /// `1_a + g`
    pub fn add_l(&self, a: usize, g: usize) -> usize {
        self.addm(self.id(a), g)
    }

    fn shape_check(&self) -> Result<()> {
        let (n, m) = (self.n(), self.m());
        let sizes = [
            ("plus_obj", self.plus_obj.len(), n * n),
            ("plus_mor", self.plus_mor.len(), m * m),
            ("assoc", self.assoc.len(), n * n * n),
            ("lunit", self.lunit.len(), n),
            ("runit", self.runit.len(), n),
            ("sym", self.sym.len(), n * n),
            ("dual", self.dual.len(), n),
            ("eta", self.eta.len(), n),
        ];
        for (name, len, want) in sizes {
            if len != want {
                return Err(Error::MalformedTable(format!("{name} has {len} entries, expected {want}")));
            }
        }
        let in_range = |v: &[usize], bound: usize| v.iter().all(|&x| x < bound);
        let ok = in_range(&self.plus_obj, n)
            && in_range(&self.plus_mor, m)
            && in_range(&self.assoc, m)
            && in_range(&self.lunit, m)
            && in_range(&self.runit, m)
            && in_range(&self.sym, m)
            && in_range(&self.dual, n)
            && in_range(&self.eta, m)
            && self.unit < n;
        if !ok {
            return Err(Error::MalformedTable("a structure table references an unknown identifier".into()));
        }
        Ok(())
    }

    /// Canonical `⟨^{a b}_{c d}⟩: (a+b)+(c+d) → (a+c)+(b+d)`.
    pub fn interchange(&self, a: usize, b: usize, c: usize, d: usize) -> usize {
        self.interchange_opt(a, b, c, d).expect("interchange in a valid 2-group")
    }

    pub fn interchange_opt(&self, a: usize, b: usize, c: usize, d: usize) -> Option<usize> {
        let bd = self.add(b, d);
        self.seq(&[
            self.a(a, b, self.add(c, d)),
            self.add_l(a, self.inv(self.a(b, c, d))),
            self.add_l(a, self.add_r(self.c(b, c), d)),
            self.add_l(a, self.a(c, b, d)),
            self.inv(self.a(a, c, bd)),
        ])
    }

    /// The same boundary reached through the other bracketing.
    pub fn interchange_alt(&self, a: usize, b: usize, c: usize, d: usize) -> Option<usize> {
        let (ab, ac) = (self.add(a, b), self.add(a, c));
        self.seq(&[
            self.inv(self.a(ab, c, d)),
            self.add_r(self.a(a, b, c), d),
            self.add_r(self.add_l(a, self.c(b, c)), d),
            self.add_r(self.inv(self.a(a, c, b)), d),
            self.a(ac, b, d),
        ])
    }
}

pub(crate) fn names(g: &Groupoid, objs: &[usize]) -> Vec<String> {
    objs.iter().map(|&a| g.obj_name(a).to_string()).collect()
}

pub(crate) fn mnames(g: &Groupoid, mors: &[usize]) -> Vec<String> {
    mors.iter().map(|&f| g.mor_name(f).to_string()).collect()
}

pub(crate) fn typed(g: &Groupoid, f: usize, s: usize, t: usize) -> bool {
    g.src(f) == s && g.tgt(f) == t
}

fn tensor_violation(t: &TwoGroup) -> Option<Vec<String>> {
    bifunctor_violation(&t.base, &t.base, &t.base, |a, b| t.add(a, b), |f, g| t.addm(f, g))
}

pub fn validate_two_group(t: &TwoGroup) -> Result<CheckReport> {
    t.shape_check()?;
    let g = &t.base;
    let n = t.n();
    let mut r = validate_groupoid(g).prefixed("twogroup.");
    r.record("twogroup.tensor_functor", tensor_violation(t));

    let find3 = |p: &dyn Fn(usize, usize, usize) -> bool| -> Option<Vec<String>> {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !p(a, b, c) {
                        return Some(names(g, &[a, b, c]));
                    }
                }
            }
        }
        None
    };
    let find2 = |p: &dyn Fn(usize, usize) -> bool| -> Option<Vec<String>> {
        for a in 0..n {
            for b in 0..n {
                if !p(a, b) {
                    return Some(names(g, &[a, b]));
                }
            }
        }
        None
    };
    let find1 = |p: &dyn Fn(usize) -> bool| (0..n).find(|&a| !p(a)).map(|a| names(g, &[a]));

    r.record(
        "twogroup.assoc_typing",
        find3(&|a, b, c| typed(g, t.a(a, b, c), t.add(t.add(a, b), c), t.add(a, t.add(b, c)))),
    );
    r.record("twogroup.lunit_typing", find1(&|a| typed(g, t.l(a), t.add(t.unit, a), a)));
    r.record("twogroup.runit_typing", find1(&|a| typed(g, t.r(a), t.add(a, t.unit), a)));
    r.record("twogroup.sym_typing", find2(&|a, b| typed(g, t.c(a, b), t.add(a, b), t.add(b, a))));
    r.record("twogroup.eta_typing", find1(&|a| typed(g, t.eta[a], t.add(t.dual[a], a), t.unit)));

    // Naturality one variable at a time; with bifunctoriality this is joint naturality.
    let assoc_nat = || {
        for f in 0..t.m() {
            let (s, d) = (g.src(f), g.tgt(f));
            for b in 0..n {
                for c in 0..n {
                    let i = |x| t.id(x);
                    let checks = [
                        (
                            t.seq(&[t.addm(t.addm(f, i(b)), i(c)), t.a(d, b, c)]),
                            t.seq(&[t.a(s, b, c), t.addm(f, t.addm(i(b), i(c)))]),
                        ),
                        (
                            t.seq(&[t.addm(t.addm(i(b), f), i(c)), t.a(b, d, c)]),
                            t.seq(&[t.a(b, s, c), t.addm(i(b), t.addm(f, i(c)))]),
                        ),
                        (
                            t.seq(&[t.addm(t.addm(i(b), i(c)), f), t.a(b, c, d)]),
                            t.seq(&[t.a(b, c, s), t.addm(i(b), t.addm(i(c), f))]),
                        ),
                    ];
                    if checks.iter().any(|&(x, y)| !same(x, y)) {
                        return Some(vec![g.mor_name(f).to_string(), g.obj_name(b).into(), g.obj_name(c).into()]);
                    }
                }
            }
        }
        None
    };
    r.record("twogroup.assoc_natural", assoc_nat());
    let unit_nat = |side: &dyn Fn(usize) -> usize, comp: &dyn Fn(usize) -> usize| {
        (0..t.m())
            .find(|&f| !same(t.seq(&[side(f), comp(g.tgt(f))]), t.seq(&[comp(g.src(f)), f])))
            .map(|f| mnames(g, &[f]))
    };
    r.record("twogroup.lunit_natural", unit_nat(&|f| t.addm(t.id(t.unit), f), &|a| t.l(a)));
    r.record("twogroup.runit_natural", unit_nat(&|f| t.addm(f, t.id(t.unit)), &|a| t.r(a)));
    let sym_nat = || {
        for f in 0..t.m() {
            for b in 0..n {
                let (s, d) = (g.src(f), g.tgt(f));
                let left = same(
                    t.seq(&[t.add_r(f, b), t.c(d, b)]),
                    t.seq(&[t.c(s, b), t.add_l(b, f)]),
                );
                let right = same(
                    t.seq(&[t.add_l(b, f), t.c(b, d)]),
                    t.seq(&[t.c(b, s), t.add_r(f, b)]),
                );
                if !(left && right) {
                    return Some(vec![g.mor_name(f).to_string(), g.obj_name(b).to_string()]);
                }
            }
        }
        None
    };
    r.record("twogroup.sym_natural", sym_nat());

    let pentagon = || {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let (ab, bc, cd) = (t.add(a, b), t.add(b, c), t.add(c, d));
                        let lhs = t.seq(&[t.a(ab, c, d), t.a(a, b, cd)]);
                        let rhs = t.seq(&[
                            t.add_r(t.a(a, b, c), d),
                            t.a(a, bc, d),
                            t.add_l(a, t.a(b, c, d)),
                        ]);
                        if !same(lhs, rhs) {
                            return Some(names(g, &[a, b, c, d]));
                        }
                    }
                }
            }
        }
        None
    };
    r.record("twogroup.pentagon", pentagon());
    r.record(
        "twogroup.triangle",
        find2(&|a, b| same(t.seq(&[t.a(a, t.unit, b), t.add_l(a, t.l(b))]), Some(t.add_r(t.r(a), b)))),
    );
    r.record(
        "twogroup.hexagon",
        find3(&|a, b, c| {
            let lhs = t.seq(&[t.a(a, b, c), t.c(a, t.add(b, c)), t.a(b, c, a)]);
            let rhs = t.seq(&[t.add_r(t.c(a, b), c), t.a(b, a, c), t.add_l(b, t.c(a, c))]);
            same(lhs, rhs)
        }),
    );
    r.record(
        "twogroup.sym_involution",
        find2(&|a, b| same(t.seq(&[t.c(a, b), t.c(b, a)]), Some(t.id(t.add(a, b))))),
    );
    Ok(r.sorted())
}

/// A finite abelian group given by its addition table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    pub names: Vec<String>,
    /// `a + b` at `a * n + b`.
    pub add: Vec<usize>,
}

impl GroupTable {
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        GroupTable {
            names: (0..n).map(|k| k.to_string()).collect(),
            add: (0..n * n).map(|i| (i / n + i % n) % n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.add[a * self.len() + b]
    }

    /// Check the abelian group axioms; returns (zero, negation).
    pub fn check(&self) -> Result<(usize, Vec<usize>)> {
        let n = self.len();
        if n == 0 || self.add.len() != n * n || self.add.iter().any(|&x| x >= n) {
            return Err(Error::NotGroup("table is not a total operation".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.op(self.op(a, b), c) != self.op(a, self.op(b, c)) {
                        return Err(Error::NotGroup(format!(
                            "associativity fails at ({},{},{})",
                            self.names[a], self.names[b], self.names[c]
                        )));
                    }
                }
            }
        }
        let zero = (0..n)
            .find(|&e| (0..n).all(|a| self.op(e, a) == a && self.op(a, e) == a))
            .ok_or_else(|| Error::NotGroup("no neutral element".into()))?;
        let mut neg = Vec::with_capacity(n);
        for a in 0..n {
            let b = (0..n)
                .find(|&b| self.op(b, a) == zero && self.op(a, b) == zero)
                .ok_or_else(|| Error::NotGroup(format!("{} has no inverse", self.names[a])))?;
            neg.push(b);
        }
        for a in 0..n {
            for b in 0..n {
                if self.op(a, b) != self.op(b, a) {
                    return Err(Error::NotAbelian(format!("{} + {}", self.names[a], self.names[b])));
                }
            }
        }
        Ok((zero, neg))
    }
}

/// Discrete 2-group: objects are the elements, only identity morphisms.
pub fn build_discrete(gt: &GroupTable) -> Result<TwoGroup> {
    let (zero, neg) = gt.check()?;
    let n = gt.len();
    let mors: Vec<MorDecl> = (0..n).map(|k| (format!("id_{}", gt.names[k]), k, k)).collect();
    let base = Groupoid::from_fn(gt.names.clone(), mors, (0..n).collect(), |g, _| g)?;
    let ids = |k: usize| k;
    Ok(TwoGroup {
        base,
        plus_obj: gt.add.clone(),
        plus_mor: gt.add.clone(),
        unit: zero,
        assoc: (0..n * n * n).map(|i| ids(gt.op(gt.op(i / (n * n), (i / n) % n), i % n))).collect(),
        lunit: (0..n).collect(),
        runit: (0..n).collect(),
        sym: gt.add.clone(),
        dual: neg,
        eta: vec![zero; n],
    })
}

/// One-object 2-group whose automorphism group is `H`.
pub fn build_deloop(gt: &GroupTable) -> Result<TwoGroup> {
    let (zero, _) = gt.check()?;
    let m = gt.len();
    let mors: Vec<MorDecl> = (0..m).map(|k| (gt.names[k].clone(), 0, 0)).collect();
    let base = Groupoid::from_fn(vec!["0".into()], mors, vec![zero], |g, f| gt.op(g, f))?;
    Ok(TwoGroup {
        base,
        plus_obj: vec![0],
        plus_mor: gt.add.clone(),
        unit: 0,
        assoc: vec![zero],
        lunit: vec![zero],
        runit: vec![zero],
        sym: vec![zero],
        dual: vec![0],
        eta: vec![zero],
    })
}

/// Homomorphism tables; `ftwo` is empty for plain 2-group homs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hom {
    pub omap: Vec<usize>,
    pub mmap: Vec<usize>,
    /// `F₊(a,b): F(a+b) → Fa+Fb` at `a * n + b`.
    pub fplus: Vec<usize>,
    /// `F₀: F0 → 0`
    pub fzero: usize,
    /// `F₂(r,m): F(r·m) → r·Fm` at `r * n + m`.
    pub ftwo: Vec<usize>,
}

/// Read access to hom data; lets the validators run on partial search assignments.
pub trait HomData {
    fn o(&self, a: usize) -> usize;
    fn f(&self, m: usize) -> usize;
    fn p(&self, a: usize, b: usize) -> usize;
    fn z(&self) -> usize;
    fn t(&self, r: usize, m: usize) -> usize;
}

impl HomData for Hom {
    fn o(&self, a: usize) -> usize {
        self.omap[a]
    }
    fn f(&self, m: usize) -> usize {
        self.mmap[m]
    }
    fn p(&self, a: usize, b: usize) -> usize {
        self.fplus[a * self.omap.len() + b]
    }
    fn z(&self) -> usize {
        self.fzero
    }
    fn t(&self, r: usize, m: usize) -> usize {
        self.ftwo[r * self.omap.len() + m]
    }
}

impl Hom {
    pub fn functor(&self) -> Functor {
        Functor { omap: self.omap.clone(), mmap: self.mmap.clone() }
    }

    pub fn identity(t: &TwoGroup) -> Hom {
        let n = t.n();
        Hom {
            omap: (0..n).collect(),
            mmap: (0..t.m()).collect(),
            fplus: (0..n * n).map(|i| t.id(t.add(i / n, i % n))).collect(),
            fzero: t.id(t.unit),
            ftwo: Vec::new(),
        }
    }

    /// Constant at the unit, `F₊ = l₀⁻¹`, `F₀ = id`.
    pub fn zero(dom: &TwoGroup, cod: &TwoGroup) -> Hom {
        let z = cod.unit;
        let n = dom.n();
        Hom {
            omap: vec![z; n],
            mmap: vec![cod.id(z); dom.m()],
            fplus: vec![cod.inv(cod.l(z)); n * n],
            fzero: cod.id(z),
            ftwo: Vec::new(),
        }
    }
}

pub(crate) mod faces {
    //! Single-instance hom squares shared by the validators and the search.
    use super::*;

    pub fn fplus_typed<H: HomData>(d: &TwoGroup, c: &TwoGroup, h: &H, a: usize, b: usize) -> bool {
        typed(&c.base, h.p(a, b), h.o(d.add(a, b)), c.add(h.o(a), h.o(b)))
    }

    pub fn fzero_typed<H: HomData>(d: &TwoGroup, c: &TwoGroup, h: &H) -> bool {
        typed(&c.base, h.z(), h.o(d.unit), c.unit)
    }

    /// Naturality of F₊ in the first slot (`left`) or second slot along `f`.
    pub fn fplus_natural<H: HomData>(d: &TwoGroup, c: &TwoGroup, h: &H, f: usize, b: usize, left: bool) -> bool {
        let (s, t) = (d.base.src(f), d.base.tgt(f));
        if left {
            same(
                c.seq(&[h.f(d.add_r(f, b)), h.p(t, b)]),
                c.seq(&[h.p(s, b), c.add_r(h.f(f), h.o(b))]),
            )
        } else {
            same(
                c.seq(&[h.f(d.add_l(b, f)), h.p(b, t)]),
                c.seq(&[h.p(b, s), c.add_l(h.o(b), h.f(f))]),
            )
        }
    }

    pub fn assoc<H: HomData>(d: &TwoGroup, c: &TwoGroup, h: &H, a: usize, b: usize, x: usize) -> bool {
        let (fa, fb, fx) = (h.o(a), h.o(b), h.o(x));
        let lhs = c.seq(&[h.p(d.add(a, b), x), c.add_r(h.p(a, b), fx), c.a(fa, fb, fx)]);
        let rhs = c.seq(&[h.f(d.a(a, b, x)), h.p(a, d.add(b, x)), c.add_l(fa, h.p(b, x))]);
        same(lhs, rhs)
    }

    pub fn lunit<H: HomData>(d: &TwoGroup, c: &TwoGroup, h: &H, a: usize) -> bool {
        let lhs = c.seq(&[h.p(d.unit, a), c.add_r(h.z(), h.o(a)), c.l(h.o(a))]);
        same(lhs, Some(h.f(d.l(a))))
    }

    pub fn runit<H: HomData>(d: &TwoGroup, c: &TwoGroup, h: &H, a: usize) -> bool {
        let lhs = c.seq(&[h.p(a, d.unit), c.add_l(h.o(a), h.z()), c.r(h.o(a))]);
        same(lhs, Some(h.f(d.r(a))))
    }

    pub fn sym<H: HomData>(d: &TwoGroup, c: &TwoGroup, h: &H, a: usize, b: usize) -> bool {
        same(
            c.seq(&[h.p(a, b), c.c(h.o(a), h.o(b))]),
            c.seq(&[h.f(d.c(a, b)), h.p(b, a)]),
        )
    }
}

fn hom_shape(d: &TwoGroup, c: &TwoGroup, h: &Hom) -> Result<()> {
    let ok = h.omap.len() == d.n()
        && h.mmap.len() == d.m()
        && h.fplus.len() == d.n() * d.n()
        && h.omap.iter().all(|&x| x < c.n())
        && h.mmap.iter().all(|&x| x < c.m())
        && h.fplus.iter().all(|&x| x < c.m())
        && h.fzero < c.m();
    if ok {
        Ok(())
    } else {
        Err(Error::MalformedTable("hom tables do not match the declared domain and codomain".into()))
    }
}

pub fn validate_hom(d: &TwoGroup, c: &TwoGroup, h: &Hom) -> Result<CheckReport> {
    hom_shape(d, c, h)?;
    let n = d.n();
    let dn = &d.base;
    let mut r = CheckReport::new();
    r.record(
        "hom.functor",
        functor_violation(&d.base, &c.base, &h.functor()).map(|(k, mut w)| {
            w.insert(0, k.to_string());
            w
        }),
    );
    let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
    r.record(
        "hom.fplus_typing",
        pairs().find(|&(a, b)| !faces::fplus_typed(d, c, h, a, b)).map(|(a, b)| names(dn, &[a, b])),
    );
    r.record("hom.fzero_typing", (!faces::fzero_typed(d, c, h)).then(|| names(dn, &[d.unit])));
    let nat = || {
        for f in 0..d.m() {
            for b in 0..n {
                if !faces::fplus_natural(d, c, h, f, b, true) || !faces::fplus_natural(d, c, h, f, b, false) {
                    return Some(vec![dn.mor_name(f).to_string(), dn.obj_name(b).to_string()]);
                }
            }
        }
        None
    };
    r.record("hom.fplus_natural", nat());
    let triples = || pairs().flat_map(move |(a, b)| (0..n).map(move |x| (a, b, x)));
    r.record(
        "hom.assoc",
        triples().find(|&(a, b, x)| !faces::assoc(d, c, h, a, b, x)).map(|(a, b, x)| names(dn, &[a, b, x])),
    );
    r.record("hom.lunit", (0..n).find(|&a| !faces::lunit(d, c, h, a)).map(|a| names(dn, &[a])));
    r.record("hom.runit", (0..n).find(|&a| !faces::runit(d, c, h, a)).map(|a| names(dn, &[a])));
    r.record(
        "hom.sym",
        pairs().find(|&(a, b)| !faces::sym(d, c, h, a, b)).map(|(a, b)| names(dn, &[a, b])),
    );
    Ok(r.sorted())
}

/// `G∘F` for `F: d → mid`, `G: mid → c`. The `ftwo` tables are left empty here.
pub fn compose_hom(d: &TwoGroup, mid: &TwoGroup, c: &TwoGroup, f: &Hom, g: &Hom) -> Result<Hom> {
    if f.omap.len() != d.n() || g.omap.len() != mid.n() || f.omap.iter().any(|&x| x >= mid.n()) {
        return Err(Error::DomainMismatch("codomain of the first hom is not the domain of the second".into()));
    }
    let _ = c;
    let n = d.n();
    let omap = f.omap.iter().map(|&x| g.omap[x]).collect();
    let mmap = f.mmap.iter().map(|&x| g.mmap[x]).collect();
    let mut fplus = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let v = c
                .base
                .comp(g.p(f.o(a), f.o(b)), g.f(f.p(a, b)))
                .ok_or_else(|| Error::DomainMismatch("composite structure map is not composable".into()))?;
            fplus.push(v);
        }
    }
    let fzero = c
        .base
        .comp(g.fzero, g.f(f.fzero))
        .ok_or_else(|| Error::DomainMismatch("composite unit map is not composable".into()))?;
    Ok(Hom { omap, mmap, fplus, fzero, ftwo: Vec::new() })
}

/// Components of a 2-morphism, one per object of the domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoMor {
    pub comp: Vec<usize>,
}

impl TwoMor {
    pub fn identity(c: &TwoGroup, f: &Hom) -> TwoMor {
        TwoMor { comp: f.omap.iter().map(|&x| c.id(x)).collect() }
    }

    pub fn inverse(&self, c: &TwoGroup) -> TwoMor {
        TwoMor { comp: self.comp.iter().map(|&x| c.inv(x)).collect() }
    }
}

pub fn check_parallel(d: &TwoGroup, c: &TwoGroup, f: &Hom, g: &Hom, e: &TwoMor) -> Result<()> {
    hom_shape(d, c, f).map_err(|e| Error::Parallelism(e.to_string()))?;
    hom_shape(d, c, g).map_err(|e| Error::Parallelism(e.to_string()))?;
    if e.comp.len() != d.n() || e.comp.iter().any(|&x| x >= c.m()) {
        return Err(Error::Parallelism("components do not match the shared domain".into()));
    }
    Ok(())
}

pub(crate) mod mor_faces {
    use super::*;

    pub fn typed_at(c: &TwoGroup, f: &impl HomData, g: &impl HomData, e: &[usize], a: usize) -> bool {
        typed(&c.base, e[a], f.o(a), g.o(a))
    }

    pub fn natural_at(d: &TwoGroup, c: &TwoGroup, f: &impl HomData, g: &impl HomData, e: &[usize], m: usize) -> bool {
        let (s, t) = (d.base.src(m), d.base.tgt(m));
        same(c.seq(&[f.f(m), e[t]]), c.seq(&[e[s], g.f(m)]))
    }

    pub fn plus_at(d: &TwoGroup, c: &TwoGroup, f: &impl HomData, g: &impl HomData, e: &[usize], a: usize, b: usize) -> bool {
        same(
            c.seq(&[e[d.add(a, b)], g.p(a, b)]),
            c.seq(&[f.p(a, b), c.addm(e[a], e[b])]),
        )
    }

    pub fn zero_at(d: &TwoGroup, c: &TwoGroup, f: &impl HomData, g: &impl HomData, e: &[usize]) -> bool {
        same(c.seq(&[e[d.unit], g.z()]), Some(f.z()))
    }
}

pub fn validate_two_morphism(d: &TwoGroup, c: &TwoGroup, f: &Hom, g: &Hom, e: &TwoMor) -> Result<CheckReport> {
    check_parallel(d, c, f, g, e)?;
    let dn = &d.base;
    let n = d.n();
    let mut r = CheckReport::new();
    r.record(
        "twomor.typing",
        (0..n).find(|&a| !mor_faces::typed_at(c, f, g, &e.comp, a)).map(|a| names(dn, &[a])),
    );
    r.record(
        "twomor.natural",
        (0..d.m()).find(|&m| !mor_faces::natural_at(d, c, f, g, &e.comp, m)).map(|m| mnames(dn, &[m])),
    );
    let pair = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| !mor_faces::plus_at(d, c, f, g, &e.comp, a, b));
    r.record("twomor.plus", pair.map(|(a, b)| names(dn, &[a, b])));
    r.record("twomor.zero", (!mor_faces::zero_at(d, c, f, g, &e.comp)).then(|| names(dn, &[d.unit])));
    Ok(r.sorted())
}

/// `(σ∘τ)_a = σ_a∘τ_a` for `τ: F ⇒ G`, `σ: G ⇒ H`.
pub fn vcomp(c: &TwoGroup, tau: &TwoMor, sigma: &TwoMor) -> Result<TwoMor> {
    if tau.comp.len() != sigma.comp.len() {
        return Err(Error::DomainMismatch("2-morphisms have different domains".into()));
    }
    tau.comp
        .iter()
        .zip(&sigma.comp)
        .map(|(&t, &s)| c.base.comp(s, t).ok_or_else(|| Error::DomainMismatch("components are not composable".into())))
        .collect::<Result<Vec<_>>>()
        .map(|comp| TwoMor { comp })
}

/// For `α: F ⇒ F′` (d → mid) and `β: G ⇒ G′` (mid → c): `τ_m = β_{F′m}∘G(α_m)`.
pub fn hcomp(c: &TwoGroup, alpha: &TwoMor, f_prime: &Hom, g: &Hom, beta: &TwoMor) -> Result<TwoMor> {
    if beta.comp.len() != g.omap.len() {
        return Err(Error::DomainMismatch("outer 2-morphism does not match the outer hom".into()));
    }
    alpha
        .comp
        .iter()
        .zip(&f_prime.omap)
        .map(|(&am, &fm)| {
            c.base
                .comp(beta.comp[fm], g.mmap[am])
                .ok_or_else(|| Error::DomainMismatch("whiskered components are not composable".into()))
        })
        .collect::<Result<Vec<_>>>()
        .map(|comp| TwoMor { comp })
}
