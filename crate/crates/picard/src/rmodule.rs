//! R-2-modules, their homomorphisms and 2-morphisms.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groupoid::{bifunctor_violation, find_object_tuple, natural_in_each, product, Groupoid};
use crate::report::CheckReport;
use crate::twogroup::{
    build_deloop, build_discrete, compose_hom, names, same, typed, validate_hom, validate_two_group,
    validate_two_morphism, GroupTable, Hom, HomData, TwoGroup, TwoMor,
};
use crate::homgroup::{pointwise_group, HomGroup};
use crate::search::{Endpoints, SearchBudget};
use crate::tworing::TwoRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Module {
    pub ring: Arc<TwoRing>,
    pub carrier: TwoGroup,
    /// `r·m` at `r * n + m`.
    pub act_obj: Vec<usize>,
    /// `ρ·f` at `ρ * m + f`.
    pub act_mor: Vec<usize>,
    /// `a^r_{m,n}: r(m+n) → rm+rn` at `(r * n + m) * n + n'`.
    pub adist: Vec<usize>,
    /// `b^{r,s}_m: (r+s)m → rm+sm` at `(r * nR + s) * n + m`.
    pub bdist: Vec<usize>,
    /// `b_{r,s,m}: (rs)m → r(sm)`, indexed like `bdist`.
    pub bassoc: Vec<usize>,
    /// `i_m: 1·m → m`
    pub iunit: Vec<usize>,
    /// `z_r: r·0 → 0`
    pub zzero: Vec<usize>,
}

impl Module {
    pub fn n(&self) -> usize {
        self.carrier.n()
    }

    pub fn m(&self) -> usize {
        self.carrier.m()
    }

    pub fn act(&self, r: usize, x: usize) -> usize {
        self.act_obj[r * self.n() + x]
    }

    pub fn actm(&self, rho: usize, f: usize) -> usize {
        self.act_mor[rho * self.m() + f]
    }

    /// `1_r·f`
    pub fn act_l(&self, r: usize, f: usize) -> usize {
        self.actm(self.ring.add.id(r), f)
    }

    /// `ρ·1_x`
    pub fn act_r(&self, rho: usize, x: usize) -> usize {
        self.actm(rho, self.carrier.id(x))
    }

    pub fn ad(&self, r: usize, x: usize, y: usize) -> usize {
        self.adist[(r * self.n() + x) * self.n() + y]
    }

    pub fn bd(&self, r: usize, s: usize, x: usize) -> usize {
        self.bdist[(r * self.ring.n() + s) * self.n() + x]
    }

    pub fn ba(&self, r: usize, s: usize, x: usize) -> usize {
        self.bassoc[(r * self.ring.n() + s) * self.n() + x]
    }

    pub fn i(&self, x: usize) -> usize {
        self.iunit[x]
    }

    pub fn z(&self, r: usize) -> usize {
        self.zzero[r]
    }

    pub fn same_ring(&self, other: &Module) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    fn shape_check(&self) -> Result<()> {
        let (n, m, nr, mr) = (self.n(), self.m(), self.ring.n(), self.ring.m());
        let ok = self.act_obj.len() == nr * n
            && self.act_mor.len() == mr * m
            && self.adist.len() == nr * n * n
            && self.bdist.len() == nr * nr * n
            && self.bassoc.len() == nr * nr * n
            && self.iunit.len() == n
            && self.zzero.len() == nr
            && self.act_obj.iter().all(|&x| x < n)
            && [&self.act_mor, &self.adist, &self.bdist, &self.bassoc, &self.iunit, &self.zzero]
                .iter()
                .all(|v| v.iter().all(|&x| x < m));
        if ok {
            Ok(())
        } else {
            Err(Error::MalformedTable("module tables do not match ring and carrier".into()))
        }
    }
}

fn discrete_ring_elements(ring: &TwoRing) -> Result<()> {
    if ring.m() != ring.n() {
        return Err(Error::NotModule("catalog modules need a discrete ring".into()));
    }
    Ok(())
}

/// Check the module laws of `action` (`r·x` at `r * |G| + x`) over the object tables of a discrete ring.
fn check_action(ring: &TwoRing, gt: &GroupTable, action: &[usize]) -> Result<()> {
    let (nr, n) = (ring.n(), gt.len());
    if action.len() != nr * n || action.iter().any(|&x| x >= n) {
        return Err(Error::NotModule("action table is not total".into()));
    }
    let act = |r: usize, x: usize| action[r * n + x];
    let rn = |r: usize| ring.add.base.obj_name(r).to_string();
    for r in 0..nr {
        for s in 0..nr {
            for x in 0..n {
                if act(ring.add.add(r, s), x) != gt.op(act(r, x), act(s, x)) {
                    return Err(Error::NotModule(format!(
                        "({}+{})·{} differs from {}·{}+{}·{}",
                        rn(r), rn(s), gt.names[x], rn(r), gt.names[x], rn(s), gt.names[x]
                    )));
                }
                if act(ring.mul(r, s), x) != act(r, act(s, x)) {
                    return Err(Error::NotModule(format!("({}{})·{} differs from {}·({}·{})", rn(r), rn(s), gt.names[x], rn(r), rn(s), gt.names[x])));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if act(r, gt.op(x, y)) != gt.op(act(r, x), act(r, y)) {
                    return Err(Error::NotModule(format!("{}·({}+{}) is not additive", rn(r), gt.names[x], gt.names[y])));
                }
            }
        }
    }
    for x in 0..n {
        if act(ring.one, x) != x {
            return Err(Error::NotModule(format!("1·{} differs from {}", gt.names[x], gt.names[x])));
        }
    }
    Ok(())
}

/// Discrete module over a discrete ring: objects are the elements, identity coherences.
pub fn build_discrete_module(ring: Arc<TwoRing>, gt: &GroupTable, action: &[usize]) -> Result<Module> {
    discrete_ring_elements(&ring)?;
    check_action(&ring, gt, action)?;
    let carrier = build_discrete(gt)?;
    let (nr, n) = (ring.n(), carrier.n());
    let act = |r: usize, x: usize| action[r * n + x];
    Ok(Module {
        act_obj: action.to_vec(),
        act_mor: action.to_vec(),
        adist: (0..nr * n * n).map(|i| act(i / (n * n), gt.op((i / n) % n, i % n))).collect(),
        bdist: (0..nr * nr * n).map(|i| act(ring.add.add(i / (nr * n), (i / n) % nr), i % n)).collect(),
        bassoc: (0..nr * nr * n).map(|i| act(ring.mul(i / (nr * n), (i / n) % nr), i % n)).collect(),
        iunit: (0..n).collect(),
        zzero: vec![carrier.unit; nr],
        carrier,
        ring,
    })
}

/// One-object module `B(H)`; `action` gives `1_r·h` as an element of `H`.
pub fn build_deloop_module(ring: Arc<TwoRing>, gt: &GroupTable, action: &[usize]) -> Result<Module> {
    discrete_ring_elements(&ring)?;
    check_action(&ring, gt, action)?;
    let carrier = build_deloop(gt)?;
    let nr = ring.n();
    let zero = carrier.id(0);
    Ok(Module {
        act_obj: vec![0; nr],
        act_mor: action.to_vec(),
        adist: vec![zero; nr],
        bdist: vec![zero; nr * nr],
        bassoc: vec![zero; nr * nr],
        iunit: vec![zero],
        zzero: vec![zero; nr],
        carrier,
        ring,
    })
}

/// The zero module over `ring`.
pub fn zero_module(ring: Arc<TwoRing>) -> Module {
    let nr = ring.n();
    build_discrete_module(ring, &GroupTable::cyclic(1), &vec![0; nr]).expect("zero module")
}

pub fn validate_module(md: &Module) -> Result<CheckReport> {
    md.shape_check()?;
    let mut r = validate_two_group(&md.carrier)?.prefixed("module.");
    let rg = &*md.ring;
    let (ra, ca) = (&rg.add, &md.carrier);
    let (rb, cb) = (&ra.base, &ca.base);
    let act = |x: usize, y: usize| md.act(x, y);
    let p = |x: usize, y: usize| ca.add(x, y);
    let rp = |x: usize, y: usize| ra.add(x, y);
    r.record("module.action_functor", bifunctor_violation(rb, cb, cb, act, |f, g| md.actm(f, g)));

    let rmm = [rb, cb, cb];
    let rrm = [rb, rb, cb];
    let mut typing = find_object_tuple(&rmm, |t| typed(cb, md.ad(t[0], t[1], t[2]), act(t[0], p(t[1], t[2])), p(act(t[0], t[1]), act(t[0], t[2]))))
        .map(|w| prefixed_witness("adist", w));
    typing = typing.or_else(|| {
        find_object_tuple(&rrm, |t| typed(cb, md.bd(t[0], t[1], t[2]), act(rp(t[0], t[1]), t[2]), p(act(t[0], t[2]), act(t[1], t[2]))))
            .map(|w| prefixed_witness("bdist", w))
    });
    typing = typing.or_else(|| {
        find_object_tuple(&rrm, |t| typed(cb, md.ba(t[0], t[1], t[2]), act(rg.mul(t[0], t[1]), t[2]), act(t[0], act(t[1], t[2]))))
            .map(|w| prefixed_witness("bassoc", w))
    });
    typing = typing.or_else(|| {
        find_object_tuple(&[cb], |t| typed(cb, md.i(t[0]), act(rg.one, t[0]), t[0])).map(|w| prefixed_witness("iunit", w))
    });
    typing = typing.or_else(|| {
        find_object_tuple(&[rb], |t| typed(cb, md.z(t[0]), act(t[0], ca.unit), ca.unit)).map(|w| prefixed_witness("zzero", w))
    });
    r.record("module.component_typing", typing);

    let am = |f: usize, g: usize| md.actm(f, g);
    let pm = |f: usize, g: usize| ca.addm(f, g);
    let rpm = |f: usize, g: usize| ra.addm(f, g);
    let mut nat = natural_in_each(&rmm, cb, &|o| md.ad(o[0], o[1], o[2]), &|f| am(f[0], pm(f[1], f[2])), &|f| {
        pm(am(f[0], f[1]), am(f[0], f[2]))
    })
    .map(|w| prefixed_witness("adist", w));
    nat = nat.or_else(|| {
        natural_in_each(&rrm, cb, &|o| md.bd(o[0], o[1], o[2]), &|f| am(rpm(f[0], f[1]), f[2]), &|f| {
            pm(am(f[0], f[2]), am(f[1], f[2]))
        })
        .map(|w| prefixed_witness("bdist", w))
    });
    nat = nat.or_else(|| {
        natural_in_each(&rrm, cb, &|o| md.ba(o[0], o[1], o[2]), &|f| am(rg.mulm(f[0], f[1]), f[2]), &|f| {
            am(f[0], am(f[1], f[2]))
        })
        .map(|w| prefixed_witness("bassoc", w))
    });
    let one = ra.id(rg.one);
    nat = nat.or_else(|| {
        natural_in_each(&[cb], cb, &|o| md.i(o[0]), &|f| am(one, f[0]), &|f| f[0]).map(|w| prefixed_witness("iunit", w))
    });
    let zid = ca.id(ca.unit);
    nat = nat.or_else(|| {
        natural_in_each(&[rb], cb, &|o| md.z(o[0]), &|f| am(f[0], zid), &|_| zid).map(|w| prefixed_witness("zzero", w))
    });
    r.record("module.component_natural", nat);

    let m = |x: usize, y: usize| rg.mul(x, y);
    r.record(
        "module.pentagon",
        find_object_tuple(&[rb, rb, rb, cb], |t| {
            let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
            let lhs = ca.seq(&[md.ba(m(x, y), z, w), md.ba(x, y, act(z, w))]);
            let rhs = ca.seq(&[md.act_r(rg.ma(x, y, z), w), md.ba(x, m(y, z), w), md.act_l(x, md.ba(y, z, w))]);
            same(lhs, rhs)
        }),
    );
    r.record(
        "module.lambda",
        find_object_tuple(&[rb, cb], |t| {
            same(ca.seq(&[md.ba(rg.one, t[0], t[1]), md.i(act(t[0], t[1]))]), Some(md.act_r(rg.mlunit[t[0]], t[1])))
        }),
    );
    r.record(
        "module.rho",
        find_object_tuple(&[rb, cb], |t| {
            same(ca.seq(&[md.ba(t[0], rg.one, t[1]), md.act_l(t[0], md.i(t[1]))]), Some(md.act_r(rg.mrunit[t[0]], t[1])))
        }),
    );
    r.record(
        "module.adist.assoc",
        find_object_tuple(&[rb, cb, cb, cb], |t| {
            let (x, a, b, c) = (t[0], t[1], t[2], t[3]);
            let lhs = ca.seq(&[md.ad(x, p(a, b), c), ca.add_r(md.ad(x, a, b), act(x, c)), ca.a(act(x, a), act(x, b), act(x, c))]);
            let rhs = ca.seq(&[md.act_l(x, ca.a(a, b, c)), md.ad(x, a, p(b, c)), ca.add_l(act(x, a), md.ad(x, b, c))]);
            same(lhs, rhs)
        }),
    );
    r.record(
        "module.adist.sym",
        find_object_tuple(&rmm, |t| {
            let (x, a, b) = (t[0], t[1], t[2]);
            same(
                ca.seq(&[md.ad(x, a, b), ca.c(act(x, a), act(x, b))]),
                ca.seq(&[md.act_l(x, ca.c(a, b)), md.ad(x, b, a)]),
            )
        }),
    );
    r.record(
        "module.adist.unit",
        find_object_tuple(&[rb, cb], |t| {
            let (x, a) = (t[0], t[1]);
            let lhs = ca.seq(&[md.ad(x, ca.unit, a), ca.add_r(md.z(x), act(x, a)), ca.l(act(x, a))]);
            same(lhs, Some(md.act_l(x, ca.l(a))))
        }),
    );
    r.record(
        "module.bdist.assoc",
        find_object_tuple(&[rb, rb, rb, cb], |t| {
            let (x, y, z, a) = (t[0], t[1], t[2], t[3]);
            let lhs = ca.seq(&[md.bd(rp(x, y), z, a), ca.add_r(md.bd(x, y, a), act(z, a)), ca.a(act(x, a), act(y, a), act(z, a))]);
            let rhs = ca.seq(&[md.act_r(ra.a(x, y, z), a), md.bd(x, rp(y, z), a), ca.add_l(act(x, a), md.bd(y, z, a))]);
            same(lhs, rhs)
        }),
    );
    r.record(
        "module.bdist.sym",
        find_object_tuple(&rrm, |t| {
            let (x, y, a) = (t[0], t[1], t[2]);
            same(
                ca.seq(&[md.bd(x, y, a), ca.c(act(x, a), act(y, a))]),
                ca.seq(&[md.act_r(ra.c(x, y), a), md.bd(y, x, a)]),
            )
        }),
    );
    r.record(
        "module.interchange",
        find_object_tuple(&[rb, rb, cb, cb], |t| {
            let (x, y, a, b) = (t[0], t[1], t[2], t[3]);
            let ic = match ca.interchange_opt(act(x, a), act(x, b), act(y, a), act(y, b)) {
                Some(v) => v,
                None => return false,
            };
            let lhs = ca.seq(&[md.bd(x, y, p(a, b)), ca.addm(md.ad(x, a, b), md.ad(y, a, b)), ic]);
            let rhs = ca.seq(&[md.ad(rp(x, y), a, b), ca.addm(md.bd(x, y, a), md.bd(x, y, b))]);
            same(lhs, rhs)
        }),
    );
    r.record(
        "module.mixed",
        find_object_tuple(&[rb, rb, cb, cb], |t| {
            let (x, y, a, b) = (t[0], t[1], t[2], t[3]);
            let lhs = ca.seq(&[md.ad(m(x, y), a, b), ca.addm(md.ba(x, y, a), md.ba(x, y, b))]);
            let rhs = ca.seq(&[md.ba(x, y, p(a, b)), md.act_l(x, md.ad(y, a, b)), md.ad(x, act(y, a), act(y, b))]);
            same(lhs, rhs)
        }),
    );
    r.record(
        "module.bassoc.ldist",
        find_object_tuple(&[rb, rb, rb, cb], |t| {
            let (x, y, z, a) = (t[0], t[1], t[2], t[3]);
            let lhs = ca.seq(&[md.act_r(rg.ld(x, y, z), a), md.bd(m(x, y), m(x, z), a), ca.addm(md.ba(x, y, a), md.ba(x, z, a))]);
            let rhs = ca.seq(&[md.ba(x, rp(y, z), a), md.act_l(x, md.bd(y, z, a)), md.ad(x, act(y, a), act(z, a))]);
            same(lhs, rhs)
        }),
    );
    r.record(
        "module.bassoc.rdist",
        find_object_tuple(&[rb, rb, rb, cb], |t| {
            let (x, y, z, a) = (t[0], t[1], t[2], t[3]);
            let lhs = ca.seq(&[md.act_r(rg.rd(x, y, z), a), md.bd(m(x, z), m(y, z), a), ca.addm(md.ba(x, z, a), md.ba(y, z, a))]);
            let rhs = ca.seq(&[md.ba(rp(x, y), z, a), md.bd(x, y, act(z, a))]);
            same(lhs, rhs)
        }),
    );
    r.record(
        "module.iunit.adist",
        find_object_tuple(&[cb, cb], |t| {
            let (a, b) = (t[0], t[1]);
            same(ca.seq(&[md.ad(rg.one, a, b), ca.addm(md.i(a), md.i(b))]), Some(md.i(p(a, b))))
        }),
    );
    r.record(
        "module.zzero.bdist",
        find_object_tuple(&[rb, rb], |t| {
            let (x, y) = (t[0], t[1]);
            let lhs = ca.seq(&[md.bd(x, y, ca.unit), ca.addm(md.z(x), md.z(y)), ca.l(ca.unit)]);
            same(lhs, Some(md.z(rp(x, y))))
        }),
    );
    Ok(r.sorted())
}

fn prefixed_witness(family: &str, mut w: Vec<String>) -> Vec<String> {
    w.insert(0, family.to_string());
    w
}

pub(crate) mod faces {
    //! Equivariance squares of a module hom at a single tuple.
    use super::*;

    pub fn ftwo_typed<H: HomData>(d: &Module, c: &Module, h: &H, r: usize, x: usize) -> bool {
        typed(&c.carrier.base, h.t(r, x), h.o(d.act(r, x)), c.act(r, h.o(x)))
    }

    /// Naturality of F₂ along a ring morphism `rho` at `x`.
    pub fn ftwo_natural_ring<H: HomData>(d: &Module, c: &Module, h: &H, rho: usize, x: usize) -> bool {
        let rb = &d.ring.add.base;
        let (s, t) = (rb.src(rho), rb.tgt(rho));
        same(
            c.carrier.seq(&[h.f(d.act_r(rho, x)), h.t(t, x)]),
            c.carrier.seq(&[h.t(s, x), c.act_r(rho, h.o(x))]),
        )
    }

    /// Naturality of F₂ along a carrier morphism `f` at ring object `r`.
    pub fn ftwo_natural_mod<H: HomData>(d: &Module, c: &Module, h: &H, r: usize, f: usize) -> bool {
        let cb = &d.carrier.base;
        let (s, t) = (cb.src(f), cb.tgt(f));
        same(
            c.carrier.seq(&[h.f(d.act_l(r, f)), h.t(r, t)]),
            c.carrier.seq(&[h.t(r, s), c.act_l(r, h.f(f))]),
        )
    }

    pub fn adist<H: HomData>(d: &Module, c: &Module, h: &H, r: usize, x: usize, y: usize) -> bool {
        let (dc, cc) = (&d.carrier, &c.carrier);
        let lhs = cc.seq(&[h.t(r, dc.add(x, y)), c.act_l(r, h.p(x, y)), c.ad(r, h.o(x), h.o(y))]);
        let rhs = cc.seq(&[h.f(d.ad(r, x, y)), h.p(d.act(r, x), d.act(r, y)), cc.addm(h.t(r, x), h.t(r, y))]);
        same(lhs, rhs)
    }

    pub fn bdist<H: HomData>(d: &Module, c: &Module, h: &H, r: usize, s: usize, x: usize) -> bool {
        let cc = &c.carrier;
        let lhs = cc.seq(&[h.t(d.ring.add.add(r, s), x), c.bd(r, s, h.o(x))]);
        let rhs = cc.seq(&[h.f(d.bd(r, s, x)), h.p(d.act(r, x), d.act(s, x)), cc.addm(h.t(r, x), h.t(s, x))]);
        same(lhs, rhs)
    }

    pub fn bassoc<H: HomData>(d: &Module, c: &Module, h: &H, r: usize, s: usize, x: usize) -> bool {
        let cc = &c.carrier;
        let lhs = cc.seq(&[h.t(d.ring.mul(r, s), x), c.ba(r, s, h.o(x))]);
        let rhs = cc.seq(&[h.f(d.ba(r, s, x)), h.t(r, d.act(s, x)), c.act_l(r, h.t(s, x))]);
        same(lhs, rhs)
    }

    pub fn iunit<H: HomData>(d: &Module, c: &Module, h: &H, x: usize) -> bool {
        same(c.carrier.seq(&[h.t(d.ring.one, x), c.i(h.o(x))]), Some(h.f(d.i(x))))
    }

    pub fn zzero<H: HomData>(d: &Module, c: &Module, h: &H, r: usize) -> bool {
        let cc = &c.carrier;
        same(
            cc.seq(&[h.t(r, d.carrier.unit), c.act_l(r, h.z()), c.z(r)]),
            cc.seq(&[h.f(d.z(r)), h.z()]),
        )
    }

    /// `G₂(r,x)∘τ_{rx} = (r·τ_x)∘F₂(r,x)`
    pub fn mor_action<H: HomData>(d: &Module, c: &Module, f: &H, g: &H, e: &[usize], r: usize, x: usize) -> bool {
        same(
            c.carrier.seq(&[e[d.act(r, x)], g.t(r, x)]),
            c.carrier.seq(&[f.t(r, x), c.act_l(r, e[x])]),
        )
    }
}

fn require_same_ring(d: &Module, c: &Module) -> Result<()> {
    if d.same_ring(c) {
        Ok(())
    } else {
        Err(Error::RingMismatch("modules are over different rings".into()))
    }
}

fn ftwo_shape(d: &Module, c: &Module, h: &Hom) -> Result<()> {
    if h.ftwo.len() != d.ring.n() * d.n() || h.ftwo.iter().any(|&x| x >= c.m()) {
        return Err(Error::MalformedTable("F₂ table does not match the domain".into()));
    }
    Ok(())
}

pub fn validate_mod_hom(d: &Module, c: &Module, h: &Hom) -> Result<CheckReport> {
    require_same_ring(d, c).map_err(|e| Error::DomainMismatch(e.to_string()))?;
    let mut r = validate_hom(&d.carrier, &c.carrier, h)?.prefixed("mod");
    ftwo_shape(d, c, h)?;
    let (rb, cb) = (&d.ring.add.base, &d.carrier.base);
    r.record("modhom.ftwo_typing", find_object_tuple(&[rb, cb], |t| faces::ftwo_typed(d, c, h, t[0], t[1])));
    let nat = (0..rb.n_mor())
        .flat_map(|rho| (0..d.n()).map(move |x| (rho, x)))
        .find(|&(rho, x)| !faces::ftwo_natural_ring(d, c, h, rho, x))
        .map(|(rho, x)| vec![rb.mor_name(rho).to_string(), cb.obj_name(x).to_string()])
        .or_else(|| {
            (0..d.ring.n())
                .flat_map(|r| (0..cb.n_mor()).map(move |f| (r, f)))
                .find(|&(r, f)| !faces::ftwo_natural_mod(d, c, h, r, f))
                .map(|(r, f)| vec![rb.obj_name(r).to_string(), cb.mor_name(f).to_string()])
        });
    r.record("modhom.ftwo_natural", nat);
    r.record("modhom.adist", find_object_tuple(&[rb, cb, cb], |t| faces::adist(d, c, h, t[0], t[1], t[2])));
    r.record("modhom.bdist", find_object_tuple(&[rb, rb, cb], |t| faces::bdist(d, c, h, t[0], t[1], t[2])));
    r.record("modhom.bassoc", find_object_tuple(&[rb, rb, cb], |t| faces::bassoc(d, c, h, t[0], t[1], t[2])));
    r.record("modhom.iunit", find_object_tuple(&[cb], |t| faces::iunit(d, c, h, t[0])));
    r.record("modhom.zzero", find_object_tuple(&[rb], |t| faces::zzero(d, c, h, t[0])));
    Ok(r.sorted())
}

pub fn validate_mod_two_morphism(d: &Module, c: &Module, f: &Hom, g: &Hom, e: &TwoMor) -> Result<CheckReport> {
    require_same_ring(d, c).map_err(|e| Error::Parallelism(e.to_string()))?;
    ftwo_shape(d, c, f).map_err(|e| Error::Parallelism(e.to_string()))?;
    ftwo_shape(d, c, g).map_err(|e| Error::Parallelism(e.to_string()))?;
    let mut r = validate_two_morphism(&d.carrier, &c.carrier, f, g, e)?.prefixed("mod");
    r.record(
        "modtwomor.action",
        find_object_tuple(&[&d.ring.add.base, &d.carrier.base], |t| faces::mor_action(d, c, f, g, &e.comp, t[0], t[1])),
    );
    Ok(r.sorted())
}

pub fn identity_mod_hom(md: &Module) -> Hom {
    let mut h = Hom::identity(&md.carrier);
    let (nr, n) = (md.ring.n(), md.n());
    h.ftwo = (0..nr * n).map(|i| md.carrier.id(md.act(i / n, i % n))).collect();
    h
}

/// Constant at `0` with `F₊ = l₀⁻¹`, `F₀ = id`, `F₂ = z_r⁻¹`.
pub fn zero_hom(d: &Module, c: &Module) -> Result<Hom> {
    require_same_ring(d, c)?;
    let mut h = Hom::zero(&d.carrier, &c.carrier);
    let n = d.n();
    h.ftwo = (0..d.ring.n() * n).map(|i| c.carrier.inv(c.z(i / n))).collect();
    Ok(h)
}

/// `G∘F` including `H₂(r,x) = G₂(r,Fx)∘G(F₂(r,x))`.
pub fn compose_mod_hom(d: &Module, mid: &Module, c: &Module, f: &Hom, g: &Hom) -> Result<Hom> {
    if !d.same_ring(mid) || !mid.same_ring(c) {
        return Err(Error::DomainMismatch("modules are over different rings".into()));
    }
    let mut h = compose_hom(&d.carrier, &mid.carrier, &c.carrier, f, g)?;
    let (nr, n) = (d.ring.n(), d.n());
    if f.ftwo.len() != nr * n || g.ftwo.len() != nr * mid.n() {
        return Err(Error::DomainMismatch("F₂ tables do not match".into()));
    }
    h.ftwo = (0..nr * n)
        .map(|i| {
            let (r, x) = (i / n, i % n);
            c.carrier
                .base
                .comp(g.t(r, f.o(x)), g.f(f.t(r, x)))
                .ok_or_else(|| Error::DomainMismatch("composite F₂ is not composable".into()))
        })
        .collect::<Result<_>>()?;
    Ok(h)
}

/// Componentwise product of two 2-groups; pair `(a, b)` sits at `a * |B| + b`.
pub fn product_two_group(a: &TwoGroup, b: &TwoGroup) -> TwoGroup {
    let base = product(&a.base, &b.base);
    let (an, bn, am, bm) = (a.n(), b.n(), a.m(), b.m());
    let po = |x: usize, y: usize| x * bn + y;
    let pm = |f: usize, g: usize| f * bm + g;
    let n = an * bn;
    let split = |o: usize| (o / bn, o % bn);
    let mut assoc = Vec::with_capacity(n * n * n);
    for i in 0..n * n * n {
        let (x, y, z) = (split(i / (n * n)), split((i / n) % n), split(i % n));
        assoc.push(pm(a.a(x.0, y.0, z.0), b.a(x.1, y.1, z.1)));
    }
    let pairs = |f: &dyn Fn((usize, usize), (usize, usize)) -> usize| -> Vec<usize> {
        (0..n * n).map(|i| f(split(i / n), split(i % n))).collect()
    };
    TwoGroup {
        plus_obj: pairs(&|x, y| po(a.add(x.0, y.0), b.add(x.1, y.1))),
        plus_mor: (0..am * bm * am * bm)
            .map(|i| {
                let (f, g) = (i / (am * bm), i % (am * bm));
                pm(a.addm(f / bm, g / bm), b.addm(f % bm, g % bm))
            })
            .collect(),
        unit: po(a.unit, b.unit),
        assoc,
        lunit: (0..n).map(|o| pm(a.l(o / bn), b.l(o % bn))).collect(),
        runit: (0..n).map(|o| pm(a.r(o / bn), b.r(o % bn))).collect(),
        sym: pairs(&|x, y| pm(a.c(x.0, y.0), b.c(x.1, y.1))),
        dual: (0..n).map(|o| po(a.dual[o / bn], b.dual[o % bn])).collect(),
        eta: (0..n).map(|o| pm(a.eta[o / bn], b.eta[o % bn])).collect(),
        base,
    }
}

#[derive(Debug, Clone)]
pub struct Biproduct {
    pub sum: Arc<Module>,
    pub p1: Hom,
    pub p2: Hom,
    pub i1: Hom,
    pub i2: Hom,
}

pub fn biproduct(x: &Module, y: &Module) -> Result<Biproduct> {
    require_same_ring(x, y)?;
    let rg = x.ring.clone();
    let carrier = product_two_group(&x.carrier, &y.carrier);
    let (nr, xn, yn, ym) = (rg.n(), x.n(), y.n(), y.m());
    let n = xn * yn;
    let po = |a: usize, b: usize| a * yn + b;
    let pm = |f: usize, g: usize| f * ym + g;
    let sum = Module {
        act_obj: (0..nr * n).map(|i| po(x.act(i / n, (i % n) / yn), y.act(i / n, i % yn))).collect(),
        act_mor: {
            let m = carrier.m();
            (0..rg.m() * m).map(|i| pm(x.actm(i / m, (i % m) / ym), y.actm(i / m, (i % m) % ym))).collect()
        },
        adist: (0..nr * n * n)
            .map(|i| {
                let (r, a, b) = (i / (n * n), (i / n) % n, i % n);
                pm(x.ad(r, a / yn, b / yn), y.ad(r, a % yn, b % yn))
            })
            .collect(),
        bdist: (0..nr * nr * n)
            .map(|i| {
                let (r, s, a) = (i / (nr * n), (i / n) % nr, i % n);
                pm(x.bd(r, s, a / yn), y.bd(r, s, a % yn))
            })
            .collect(),
        bassoc: (0..nr * nr * n)
            .map(|i| {
                let (r, s, a) = (i / (nr * n), (i / n) % nr, i % n);
                pm(x.ba(r, s, a / yn), y.ba(r, s, a % yn))
            })
            .collect(),
        iunit: (0..n).map(|a| pm(x.i(a / yn), y.i(a % yn))).collect(),
        zzero: (0..nr).map(|r| pm(x.z(r), y.z(r))).collect(),
        carrier,
        ring: rg,
    };
    let sc = &sum.carrier;
    let (xc, yc) = (&x.carrier, &y.carrier);
    let p1 = Hom {
        omap: (0..n).map(|o| o / yn).collect(),
        mmap: (0..sc.m()).map(|f| f / ym).collect(),
        fplus: (0..n * n).map(|i| xc.id(xc.add((i / n) / yn, (i % n) / yn))).collect(),
        fzero: xc.id(xc.unit),
        ftwo: (0..nr * n).map(|i| xc.id(x.act(i / n, (i % n) / yn))).collect(),
    };
    let p2 = Hom {
        omap: (0..n).map(|o| o % yn).collect(),
        mmap: (0..sc.m()).map(|f| f % ym).collect(),
        fplus: (0..n * n).map(|i| yc.id(yc.add((i / n) % yn, (i % n) % yn))).collect(),
        fzero: yc.id(yc.unit),
        ftwo: (0..nr * n).map(|i| yc.id(y.act(i / n, (i % n) % yn))).collect(),
    };
    let i1 = Hom {
        omap: (0..xn).map(|a| po(a, yc.unit)).collect(),
        mmap: (0..xc.m()).map(|f| pm(f, yc.id(yc.unit))).collect(),
        fplus: (0..xn * xn).map(|i| pm(xc.id(xc.add(i / xn, i % xn)), yc.inv(yc.l(yc.unit)))).collect(),
        fzero: sc.id(sum.carrier.unit),
        ftwo: (0..nr * xn).map(|i| pm(xc.id(x.act(i / xn, i % xn)), yc.inv(y.z(i / xn)))).collect(),
    };
    let i2 = Hom {
        omap: (0..yn).map(|b| po(xc.unit, b)).collect(),
        mmap: (0..yc.m()).map(|g| pm(xc.id(xc.unit), g)).collect(),
        fplus: (0..yn * yn).map(|i| pm(xc.inv(xc.l(xc.unit)), yc.id(yc.add(i / yn, i % yn)))).collect(),
        fzero: sc.id(sum.carrier.unit),
        ftwo: (0..nr * yn).map(|i| pm(xc.inv(x.z(i / yn)), yc.id(y.act(i / yn, i % yn)))).collect(),
    };
    Ok(Biproduct { sum: Arc::new(sum), p1, p2, i1, i2 })
}

/// A hom whose structure maps are all identities; `omap` must commute with `+` and the action on the nose.
pub fn strict_hom(d: &Module, c: &Module, omap: Vec<usize>, mmap: Vec<usize>) -> Hom {
    let cg = &c.carrier;
    let n = d.n();
    let fplus = (0..n * n).map(|i| cg.id(omap[d.carrier.add(i / n, i % n)])).collect();
    let ftwo = (0..d.ring.n() * n).map(|i| cg.id(omap[d.act(i / n, i % n)])).collect();
    Hom { fzero: cg.id(omap[d.carrier.unit]), omap, mmap, fplus, ftwo }
}

/// All module homs `m → n` and their 2-morphisms, summed pointwise.
pub fn hom_two_group(m: &Module, n: &Module, budget: &SearchBudget) -> Result<HomGroup> {
    if !m.same_ring(n) {
        return Err(Error::RingMismatch("modules are over different rings".into()));
    }
    pointwise_group(Endpoints::Modules(m, n), budget, &mut budget.ticker())
}

/// Object names of a groupoid, for witness formatting in other modules.
pub fn obj_names(g: &Groupoid, xs: &[usize]) -> Vec<String> {
    names(g, xs)
}
