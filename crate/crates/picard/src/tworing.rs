//! 2-rings: a symmetric 2-group with a coherent multiplication.

use crate::error::{Error, Result};
use crate::groupoid::{bifunctor_violation, natural_in_each};
use crate::report::CheckReport;
use crate::twogroup::{
    build_discrete, names, same, typed, validate_hom, validate_two_morphism, GroupTable, Hom, HomData, TwoGroup,
    TwoMor,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoRing {
    pub add: TwoGroup,
    /// `r·s` at `r * n + s`.
    pub mul_obj: Vec<usize>,
    pub mul_mor: Vec<usize>,
    pub one: usize,
    /// `[r,s,t]: (rs)t → r(st)`
    pub massoc: Vec<usize>,
    /// `λ_r: 1·r → r`
    pub mlunit: Vec<usize>,
    /// `ρ_r: r·1 → r`
    pub mrunit: Vec<usize>,
    /// `r(s+t) → rs+rt`
    pub ldist: Vec<usize>,
    /// `(r+s)t → rt+st`
    pub rdist: Vec<usize>,
}

impl TwoRing {
    pub fn n(&self) -> usize {
        self.add.n()
    }

    pub fn m(&self) -> usize {
        self.add.m()
    }

    pub fn mul(&self, r: usize, s: usize) -> usize {
        self.mul_obj[r * self.n() + s]
    }

    pub fn mulm(&self, f: usize, g: usize) -> usize {
        self.mul_mor[f * self.m() + g]
    }

    fn i3(&self, r: usize, s: usize, t: usize) -> usize {
        (r * self.n() + s) * self.n() + t
    }

    pub fn ma(&self, r: usize, s: usize, t: usize) -> usize {
        self.massoc[self.i3(r, s, t)]
    }

    pub fn ld(&self, r: usize, s: usize, t: usize) -> usize {
        self.ldist[self.i3(r, s, t)]
    }

    pub fn rd(&self, r: usize, s: usize, t: usize) -> usize {
        self.rdist[self.i3(r, s, t)]
    }

    /// `f·1_s`
    pub fn mul_r(&self, f: usize, s: usize) -> usize {
        self.mulm(f, self.add.id(s))
    }

    /// `1_r·g`
    pub fn mul_l(&self, r: usize, g: usize) -> usize {
        self.mulm(self.add.id(r), g)
    }

    fn shape_check(&self) -> Result<()> {
        let (n, m) = (self.n(), self.m());
        let ok = self.mul_obj.len() == n * n
            && self.mul_mor.len() == m * m
            && self.massoc.len() == n * n * n
            && self.ldist.len() == n * n * n
            && self.rdist.len() == n * n * n
            && self.mlunit.len() == n
            && self.mrunit.len() == n
            && self.one < n
            && self.mul_obj.iter().all(|&x| x < n)
            && [&self.mul_mor, &self.massoc, &self.ldist, &self.rdist, &self.mlunit, &self.mrunit]
                .iter()
                .all(|v| v.iter().all(|&x| x < m));
        if ok {
            Ok(())
        } else {
            Err(Error::MalformedTable("ring tables do not match the additive 2-group".into()))
        }
    }
}

/// Finite ring given by addition and multiplication tables on the same element names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingTable {
    pub group: GroupTable,
    pub mul: Vec<usize>,
}

impl RingTable {
    pub fn cyclic(n: usize) -> Self {
        RingTable { group: GroupTable::cyclic(n), mul: (0..n * n).map(|i| (i / n) * (i % n) % n).collect() }
    }

    pub fn mul_op(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.group.len() + b]
    }

    /// Check the commutative unital ring axioms; returns the multiplicative unit.
    pub fn check(&self) -> Result<usize> {
        self.group.check().map_err(|e| Error::NotRing(e.to_string()))?;
        let n = self.group.len();
        if self.mul.len() != n * n || self.mul.iter().any(|&x| x >= n) {
            return Err(Error::NotRing("multiplication table is not a total operation".into()));
        }
        let nm = |xs: &[usize]| xs.iter().map(|&x| self.group.names[x].clone()).collect::<Vec<_>>().join(",");
        for a in 0..n {
            for b in 0..n {
                if self.mul_op(a, b) != self.mul_op(b, a) {
                    return Err(Error::NotRing(format!("multiplication not commutative at ({})", nm(&[a, b]))));
                }
                for c in 0..n {
                    if self.mul_op(self.mul_op(a, b), c) != self.mul_op(a, self.mul_op(b, c)) {
                        return Err(Error::NotRing(format!("multiplication not associative at ({})", nm(&[a, b, c]))));
                    }
                    if self.mul_op(a, self.group.op(b, c)) != self.group.op(self.mul_op(a, b), self.mul_op(a, c)) {
                        return Err(Error::NotRing(format!("distributivity fails at ({})", nm(&[a, b, c]))));
                    }
                }
            }
        }
        (0..n)
            .find(|&e| (0..n).all(|a| self.mul_op(e, a) == a))
            .ok_or_else(|| Error::NotRing("no multiplicative unit".into()))
    }
}

/// Discrete 2-ring: identity morphisms only, every coherence an identity.
pub fn build_discrete_ring(rt: &RingTable) -> Result<TwoRing> {
    let one = rt.check()?;
    let add = build_discrete(&rt.group)?;
    let n = add.n();
    let i3 = |f: &dyn Fn(usize, usize, usize) -> usize| -> Vec<usize> {
        (0..n * n * n).map(|i| f(i / (n * n), (i / n) % n, i % n)).collect()
    };
    let (g, m) = (&rt.group, |a, b| rt.mul_op(a, b));
    Ok(TwoRing {
        mul_obj: rt.mul.clone(),
        mul_mor: rt.mul.clone(),
        one,
        massoc: i3(&|r, s, t| m(m(r, s), t)),
        mlunit: (0..n).collect(),
        mrunit: (0..n).collect(),
        ldist: i3(&|r, s, t| m(r, g.op(s, t))),
        rdist: i3(&|r, s, t| m(g.op(r, s), t)),
        add,
    })
}

pub fn validate_two_ring(rg: &TwoRing) -> Result<CheckReport> {
    let mut r = crate::twogroup::validate_two_group(&rg.add)?.prefixed("ring.");
    rg.shape_check()?;
    let a = &rg.add;
    let g = &a.base;
    let n = rg.n();
    r.record("ring.mult_functor", bifunctor_violation(g, g, g, |x, y| rg.mul(x, y), |f, h| rg.mulm(f, h)));

    let m = |x: usize, y: usize| rg.mul(x, y);
    let p = |x: usize, y: usize| a.add(x, y);
    let all3 = || (0..n * n * n).map(move |i| (i / (n * n), (i / n) % n, i % n));
    let typing3 = |comp: &dyn Fn(usize, usize, usize) -> usize,
                   src: &dyn Fn(usize, usize, usize) -> usize,
                   tgt: &dyn Fn(usize, usize, usize) -> usize| {
        all3().find(|&(x, y, z)| !typed(g, comp(x, y, z), src(x, y, z), tgt(x, y, z))).map(|(x, y, z)| names(g, &[x, y, z]))
    };
    r.record("ring.massoc_typing", typing3(&|x, y, z| rg.ma(x, y, z), &|x, y, z| m(m(x, y), z), &|x, y, z| m(x, m(y, z))));
    r.record(
        "ring.ldist_typing",
        typing3(&|x, y, z| rg.ld(x, y, z), &|x, y, z| m(x, p(y, z)), &|x, y, z| p(m(x, y), m(x, z))),
    );
    r.record(
        "ring.rdist_typing",
        typing3(&|x, y, z| rg.rd(x, y, z), &|x, y, z| m(p(x, y), z), &|x, y, z| p(m(x, z), m(y, z))),
    );
    r.record(
        "ring.unit_typing",
        (0..n)
            .find(|&x| !typed(g, rg.mlunit[x], m(rg.one, x), x) || !typed(g, rg.mrunit[x], m(x, rg.one), x))
            .map(|x| names(g, &[x])),
    );

    let mm = |f: usize, h: usize| rg.mulm(f, h);
    let pm = |f: usize, h: usize| a.addm(f, h);
    let slots3 = [g, g, g];
    r.record(
        "ring.massoc_natural",
        natural_in_each(&slots3, g, &|o| rg.ma(o[0], o[1], o[2]), &|f| mm(mm(f[0], f[1]), f[2]), &|f| {
            mm(f[0], mm(f[1], f[2]))
        }),
    );
    r.record(
        "ring.ldist_natural",
        natural_in_each(&slots3, g, &|o| rg.ld(o[0], o[1], o[2]), &|f| mm(f[0], pm(f[1], f[2])), &|f| {
            pm(mm(f[0], f[1]), mm(f[0], f[2]))
        }),
    );
    r.record(
        "ring.rdist_natural",
        natural_in_each(&slots3, g, &|o| rg.rd(o[0], o[1], o[2]), &|f| mm(pm(f[0], f[1]), f[2]), &|f| {
            pm(mm(f[0], f[2]), mm(f[1], f[2]))
        }),
    );
    let one_id = a.id(rg.one);
    let lam = natural_in_each(&[g], g, &|o| rg.mlunit[o[0]], &|f| mm(one_id, f[0]), &|f| f[0]);
    let rho = natural_in_each(&[g], g, &|o| rg.mrunit[o[0]], &|f| mm(f[0], one_id), &|f| f[0]);
    r.record("ring.unit_natural", lam.or(rho));

    let pentagon = || {
        for i in 0..n * n * n * n {
            let (w, x, y, z) = (i / (n * n * n), (i / (n * n)) % n, (i / n) % n, i % n);
            let lhs = a.seq(&[rg.ma(m(w, x), y, z), rg.ma(w, x, m(y, z))]);
            let rhs = a.seq(&[rg.mul_r(rg.ma(w, x, y), z), rg.ma(w, m(x, y), z), rg.mul_l(w, rg.ma(x, y, z))]);
            if !same(lhs, rhs) {
                return Some(names(g, &[w, x, y, z]));
            }
        }
        None
    };
    r.record("ring.pentagon", pentagon());
    let triangle = (0..n * n)
        .map(|i| (i / n, i % n))
        .find(|&(x, y)| {
            !same(a.seq(&[rg.ma(x, rg.one, y), rg.mul_l(x, rg.mlunit[y])]), Some(rg.mul_r(rg.mrunit[x], y)))
        })
        .map(|(x, y)| names(g, &[x, y]));
    r.record("ring.triangle", triangle);

    let face3 = |ok: &dyn Fn(usize, usize, usize) -> bool| all3().find(|&(x, y, z)| !ok(x, y, z)).map(|(x, y, z)| names(g, &[x, y, z]));
    // r((s+t)+u) and ((r+s)+t)u against the additive associator
    let add_assoc_left = || {
        for i in 0..n * n * n * n {
            let (w, x, y, z) = (i / (n * n * n), (i / (n * n)) % n, (i / n) % n, i % n);
            let lhs = a.seq(&[rg.ld(w, p(x, y), z), a.add_r(rg.ld(w, x, y), m(w, z)), a.a(m(w, x), m(w, y), m(w, z))]);
            let rhs = a.seq(&[rg.mul_l(w, a.a(x, y, z)), rg.ld(w, x, p(y, z)), a.add_l(m(w, x), rg.ld(w, y, z))]);
            if !same(lhs, rhs) {
                return Some(names(g, &[w, x, y, z]));
            }
        }
        None
    };
    let add_assoc_right = || {
        for i in 0..n * n * n * n {
            let (w, x, y, z) = (i / (n * n * n), (i / (n * n)) % n, (i / n) % n, i % n);
            let lhs = a.seq(&[rg.rd(p(w, x), y, z), a.add_r(rg.rd(w, x, z), m(y, z)), a.a(m(w, z), m(x, z), m(y, z))]);
            let rhs = a.seq(&[rg.mul_r(a.a(w, x, y), z), rg.rd(w, p(x, y), z), a.add_l(m(w, z), rg.rd(x, y, z))]);
            if !same(lhs, rhs) {
                return Some(names(g, &[w, x, y, z]));
            }
        }
        None
    };
    r.record("ring.dist_add_assoc.left", add_assoc_left());
    r.record("ring.dist_add_assoc.right", add_assoc_right());

    let four = |ok: &dyn Fn(usize, usize, usize, usize) -> bool| {
        (0..n * n * n * n)
            .map(|i| (i / (n * n * n), (i / (n * n)) % n, (i / n) % n, i % n))
            .find(|&(w, x, y, z)| !ok(w, x, y, z))
            .map(|(w, x, y, z)| names(g, &[w, x, y, z]))
    };
    // (rs)(t+u)
    r.record(
        "ring.dist_mult_assoc.left",
        four(&|w, x, y, z| {
            let lhs = a.seq(&[rg.ld(m(w, x), y, z), a.addm(rg.ma(w, x, y), rg.ma(w, x, z))]);
            let rhs = a.seq(&[rg.ma(w, x, p(y, z)), rg.mul_l(w, rg.ld(x, y, z)), rg.ld(w, m(x, y), m(x, z))]);
            same(lhs, rhs)
        }),
    );
    // ((r+s)t)u
    r.record(
        "ring.dist_mult_assoc.right",
        four(&|w, x, y, z| {
            let lhs = a.seq(&[rg.mul_r(rg.rd(w, x, y), z), rg.rd(m(w, y), m(x, y), z), a.addm(rg.ma(w, y, z), rg.ma(x, y, z))]);
            let rhs = a.seq(&[rg.ma(p(w, x), y, z), rg.rd(w, x, m(y, z))]);
            same(lhs, rhs)
        }),
    );
    // (r(s+t))u
    r.record(
        "ring.dist_mult_assoc.mixed",
        four(&|w, x, y, z| {
            let lhs = a.seq(&[rg.mul_r(rg.ld(w, x, y), z), rg.rd(m(w, x), m(w, y), z), a.addm(rg.ma(w, x, z), rg.ma(w, y, z))]);
            let rhs = a.seq(&[rg.ma(w, p(x, y), z), rg.mul_l(w, rg.rd(x, y, z)), rg.ld(w, m(x, z), m(y, z))]);
            same(lhs, rhs)
        }),
    );
    let pairs = || (0..n * n).map(move |i| (i / n, i % n));
    r.record(
        "ring.dist_unit.left",
        pairs()
            .find(|&(x, y)| {
                !same(a.seq(&[rg.ld(rg.one, x, y), a.addm(rg.mlunit[x], rg.mlunit[y])]), Some(rg.mlunit[p(x, y)]))
            })
            .map(|(x, y)| names(g, &[x, y])),
    );
    r.record(
        "ring.dist_unit.right",
        pairs()
            .find(|&(x, y)| {
                !same(a.seq(&[rg.rd(x, y, rg.one), a.addm(rg.mrunit[x], rg.mrunit[y])]), Some(rg.mrunit[p(x, y)]))
            })
            .map(|(x, y)| names(g, &[x, y])),
    );
    r.record(
        "ring.dist_sym.left",
        face3(&|x, y, z| {
            same(
                a.seq(&[rg.ld(x, y, z), a.c(m(x, y), m(x, z))]),
                a.seq(&[rg.mul_l(x, a.c(y, z)), rg.ld(x, z, y)]),
            )
        }),
    );
    r.record(
        "ring.dist_sym.right",
        face3(&|x, y, z| {
            same(
                a.seq(&[rg.rd(x, y, z), a.c(m(x, z), m(y, z))]),
                a.seq(&[rg.mul_r(a.c(x, y), z), rg.rd(y, x, z)]),
            )
        }),
    );
    // (r+s)(t+u)
    r.record(
        "ring.dist_interchange",
        four(&|w, x, y, z| {
            let lhs = a.seq(&[rg.rd(w, x, p(y, z)), a.addm(rg.ld(w, y, z), rg.ld(x, y, z))]);
            let rhs = a.seq(&[
                rg.ld(p(w, x), y, z),
                a.addm(rg.rd(w, x, y), rg.rd(w, x, z)),
                match a.interchange_opt(m(w, y), m(x, y), m(w, z), m(x, z)) {
                    Some(v) => v,
                    None => return false,
                },
            ]);
            same(lhs, rhs)
        }),
    );
    Ok(r.sorted())
}

/// Ring homomorphism: additive part plus `F·(r,s): F(rs) → Fr·Fs` and `F₁: F1 → 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingHom {
    pub hom: Hom,
    pub fdot: Vec<usize>,
    pub fone: usize,
}

impl RingHom {
    pub fn dot(&self, r: usize, s: usize) -> usize {
        self.fdot[r * self.hom.omap.len() + s]
    }

    pub fn identity(rg: &TwoRing) -> RingHom {
        let n = rg.n();
        RingHom {
            hom: Hom::identity(&rg.add),
            fdot: (0..n * n).map(|i| rg.add.id(rg.mul(i / n, i % n))).collect(),
            fone: rg.add.id(rg.one),
        }
    }
}

pub fn validate_ring_hom(d: &TwoRing, c: &TwoRing, h: &RingHom) -> Result<CheckReport> {
    let mut r = validate_hom(&d.add, &c.add, &h.hom)
        .map_err(|e| Error::DomainMismatch(e.to_string()))?
        .prefixed("ring");
    let n = d.n();
    if h.fdot.len() != n * n || h.fdot.iter().any(|&x| x >= c.m()) || h.fone >= c.m() {
        return Err(Error::DomainMismatch("multiplicative structure tables do not match".into()));
    }
    let (dg, cg) = (&d.add.base, &c.add.base);
    let f = &h.hom;
    let pairs = || (0..n * n).map(move |i| (i / n, i % n));
    let triples = || (0..n * n * n).map(move |i| (i / (n * n), (i / n) % n, i % n));
    r.record(
        "ringhom.fdot_typing",
        pairs()
            .find(|&(x, y)| !typed(cg, h.dot(x, y), f.o(d.mul(x, y)), c.mul(f.o(x), f.o(y))))
            .map(|(x, y)| names(dg, &[x, y])),
    );
    r.record("ringhom.fone_typing", (!typed(cg, h.fone, f.o(d.one), c.one)).then(|| names(dg, &[d.one])));
    r.record(
        "ringhom.fdot_natural",
        natural_in_each(
            &[dg, dg],
            cg,
            &|o| h.dot(o[0], o[1]),
            &|m| f.f(d.mulm(m[0], m[1])),
            &|m| c.mulm(f.f(m[0]), f.f(m[1])),
        ),
    );
    let ca = &c.add;
    r.record(
        "ringhom.mult_assoc",
        triples()
            .find(|&(x, y, z)| {
                let (fx, fy, fz) = (f.o(x), f.o(y), f.o(z));
                let lhs = ca.seq(&[h.dot(d.mul(x, y), z), c.mul_r(h.dot(x, y), fz), c.ma(fx, fy, fz)]);
                let rhs = ca.seq(&[f.f(d.ma(x, y, z)), h.dot(x, d.mul(y, z)), c.mul_l(fx, h.dot(y, z))]);
                !same(lhs, rhs)
            })
            .map(|(x, y, z)| names(dg, &[x, y, z])),
    );
    r.record(
        "ringhom.mult_unit",
        (0..n)
            .find(|&x| {
                let fx = f.o(x);
                let l = ca.seq(&[h.dot(d.one, x), c.mul_r(h.fone, fx), c.mlunit[fx]]);
                let rr = ca.seq(&[h.dot(x, d.one), c.mul_l(fx, h.fone), c.mrunit[fx]]);
                !same(l, Some(f.f(d.mlunit[x]))) || !same(rr, Some(f.f(d.mrunit[x])))
            })
            .map(|x| names(dg, &[x])),
    );
    r.record(
        "ringhom.ldist",
        triples()
            .find(|&(x, y, z)| {
                let (fx, fy, fz) = (f.o(x), f.o(y), f.o(z));
                let lhs = ca.seq(&[h.dot(x, d.add.add(y, z)), c.mul_l(fx, f.p(y, z)), c.ld(fx, fy, fz)]);
                let rhs = ca.seq(&[
                    f.f(d.ld(x, y, z)),
                    f.p(d.mul(x, y), d.mul(x, z)),
                    ca.addm(h.dot(x, y), h.dot(x, z)),
                ]);
                !same(lhs, rhs)
            })
            .map(|(x, y, z)| names(dg, &[x, y, z])),
    );
    r.record(
        "ringhom.rdist",
        triples()
            .find(|&(x, y, z)| {
                let (fx, fy, fz) = (f.o(x), f.o(y), f.o(z));
                let lhs = ca.seq(&[h.dot(d.add.add(x, y), z), c.mul_r(f.p(x, y), fz), c.rd(fx, fy, fz)]);
                let rhs = ca.seq(&[
                    f.f(d.rd(x, y, z)),
                    f.p(d.mul(x, z), d.mul(y, z)),
                    ca.addm(h.dot(x, z), h.dot(y, z)),
                ]);
                !same(lhs, rhs)
            })
            .map(|(x, y, z)| names(dg, &[x, y, z])),
    );
    Ok(r.sorted())
}

pub fn validate_ring_two_morphism(d: &TwoRing, c: &TwoRing, f: &RingHom, g: &RingHom, e: &TwoMor) -> Result<CheckReport> {
    let mut r = validate_two_morphism(&d.add, &c.add, &f.hom, &g.hom, e)?.prefixed("ring");
    let n = d.n();
    let ca = &c.add;
    let dot = (0..n * n)
        .map(|i| (i / n, i % n))
        .find(|&(x, y)| {
            !same(
                ca.seq(&[e.comp[d.mul(x, y)], g.dot(x, y)]),
                ca.seq(&[f.dot(x, y), c.mulm(e.comp[x], e.comp[y])]),
            )
        })
        .map(|(x, y)| names(&d.add.base, &[x, y]));
    r.record("ringmor.dot", dot);
    r.record(
        "ringmor.one",
        (!same(ca.seq(&[e.comp[d.one], g.fone]), Some(f.fone))).then(|| names(&d.add.base, &[d.one])),
    );
    Ok(r.sorted())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> TwoRing {
        build_discrete_ring(&RingTable::cyclic(n)).unwrap()
    }

    #[test]
    fn discrete_rings_pass() {
        for n in [1, 2, 3, 4, 6] {
            let r = validate_two_ring(&zn(n)).unwrap();
            assert!(r.all_pass(), "Z/{n}: {:?}", r.failures().collect::<Vec<_>>());
        }
        assert_eq!(zn(6).one, 1);
    }

    #[test]
    fn forgetting_multiplication_gives_discrete_group() {
        let r = zn(4);
        assert_eq!(r.add, build_discrete(&GroupTable::cyclic(4)).unwrap());
    }

    #[test]
    fn broken_distributivity_is_not_a_ring() {
        let mut t = RingTable::cyclic(3);
        t.mul[2 * 3 + 2] = 2;
        assert_eq!(build_discrete_ring(&t).unwrap_err().kind(), "NOT_RING");
    }

    #[test]
    fn retargeted_ldist_is_caught() {
        let mut r = zn(4);
        let i = r.i3(1, 1, 1);
        r.ldist[i] = 3;
        let rep = validate_two_ring(&r).unwrap();
        let e = rep.get("ring.ldist_typing").unwrap();
        assert_eq!(e.witness.as_deref(), Some(&["1".to_string(), "1".into(), "1".into()][..]));
    }

    #[test]
    fn rewired_multiplication_caught() {
        let mut r = zn(3);
        r.mul_mor[1 * 3 + 2] = 0;
        assert!(validate_two_ring(&r).unwrap().failed("ring.mult_functor"));
    }

    fn reduction(from: usize, to: usize) -> RingHom {
        let k = |x: usize| x % to;
        RingHom {
            hom: Hom {
                omap: (0..from).map(k).collect(),
                mmap: (0..from).map(k).collect(),
                fplus: (0..from * from).map(|i| k(i / from + i % from)).collect(),
                fzero: 0,
                ftwo: vec![],
            },
            fdot: (0..from * from).map(|i| k((i / from) * (i % from))).collect(),
            fone: 1 % to,
        }
    }

    #[test]
    fn reduction_is_ring_hom() {
        assert!(validate_ring_hom(&zn(4), &zn(2), &reduction(4, 2)).unwrap().all_pass());
        let id = RingHom::identity(&zn(3));
        assert!(validate_ring_hom(&zn(3), &zn(3), &id).unwrap().all_pass());
        let e = TwoMor::identity(&zn(3).add, &id.hom);
        assert!(validate_ring_two_morphism(&zn(3), &zn(3), &id, &id, &e).unwrap().all_pass());
    }

    #[test]
    fn shift_is_not_ring_hom() {
        let z2 = zn(2);
        let h = RingHom {
            hom: Hom { omap: vec![1, 0], mmap: vec![1, 0], fplus: vec![0, 1, 1, 0], fzero: 0, ftwo: vec![] },
            fdot: vec![1, 1, 1, 0],
            fone: 0,
        };
        let r = validate_ring_hom(&z2, &z2, &h).unwrap();
        assert!(r.failed("ringhom.fone_typing") || r.failed("ringhom.fdot_typing"));
    }
}
