use std::collections::HashMap;
use std::sync::Arc;

use super::{assemble, require_boundary, zero, Factored, ModHom, PsiResult, Shape};
use crate::error::{Error, Result};
use crate::groupoid::{Groupoid, MorDecl, UnionFind};
use crate::rmodule::{compose_mod_hom, strict_hom, Module};
use crate::search::{for_each_two_morphism, Endpoints, SearchBudget};
use crate::twogroup::{Hom, HomData, TwoMor};

/// A raw cokernel morphism `(f: s → t + FA, A)`; the source is `src f`.
type Raw = (usize, usize, usize);

#[derive(Debug, Clone)]
pub struct CokernelResult {
    pub f: ModHom,
    pub coker: Arc<Module>,
    /// `p_F: B → Coker F`
    pub p: Hom,
    /// `π_F: p_F∘F ⇒ 0`
    pub pi: TwoMor,
    /// Representative `(target, f, A)` of every morphism class.
    pub reps: Vec<Raw>,
    class: HashMap<Raw, usize>,
}

impl CokernelResult {
    /// Class of the raw morphism `f: s → t + FA`.
    pub fn class_of(&self, t: usize, f: Option<usize>, x: usize) -> Option<usize> {
        self.class.get(&(t, f?, x)).copied()
    }

    /// The class of `[(1+F₀⁻¹)∘r⁻¹∘g, 0]` for a morphism `g` of `B`.
    pub fn lift(&self, g: usize) -> Option<usize> {
        lift_in(&self.f, &self.class, g)
    }
}

fn lift_in(f: &ModHom, class: &HashMap<Raw, usize>, g: usize) -> Option<usize> {
    let b = &f.cod.carrier;
    let t = b.base.tgt(g);
    let h = b.seq(&[g, b.inv(b.r(t)), b.add_l(t, b.inv(f.hom.z()))])?;
    class.get(&(t, h, f.dom.carrier.unit)).copied()
}

struct CokerShape<'a> {
    f: &'a ModHom,
    class: &'a HashMap<Raw, usize>,
    reps: &'a [Raw],
    base: &'a Groupoid,
}

impl CokerShape<'_> {
    fn lift(&self, g: usize) -> Option<usize> {
        lift_in(self.f, self.class, g)
    }
}

impl Shape for CokerShape<'_> {
    fn unit(&self) -> usize {
        self.f.cod.carrier.unit
    }
    fn plus(&self, a: usize, b: usize) -> usize {
        self.f.cod.carrier.add(a, b)
    }
    fn act(&self, r: usize, x: usize) -> usize {
        self.f.cod.act(r, x)
    }
    fn plus_mor(&self, c1: usize, c2: usize) -> Option<usize> {
        let (b, h) = (&self.f.cod.carrier, &self.f.hom);
        let (t1, f1, x) = self.reps[c1];
        let (t2, f2, y) = self.reps[c2];
        let k = b.seq(&[
            b.addm(f1, f2),
            b.interchange(t1, h.o(x), t2, h.o(y)),
            b.add_l(b.add(t1, t2), b.inv(h.p(x, y))),
        ])?;
        self.class.get(&(b.add(t1, t2), k, self.f.dom.carrier.add(x, y))).copied()
    }
    fn act_mor(&self, rho: usize, c: usize) -> Option<usize> {
        let (bm, h) = (&*self.f.cod, &self.f.hom);
        let b = &bm.carrier;
        let r2 = bm.ring.add.base.tgt(rho);
        let (t, f, x) = self.reps[c];
        let k = b.seq(&[bm.actm(rho, f), bm.ad(r2, t, h.o(x)), b.add_l(bm.act(r2, t), b.inv(h.t(r2, x)))])?;
        self.class.get(&(bm.act(r2, t), k, self.f.dom.act(r2, x))).copied()
    }
    fn assoc(&self, a: usize, b: usize, c: usize) -> Option<usize> {
        self.lift(self.f.cod.carrier.a(a, b, c))
    }
    fn lunit(&self, a: usize) -> Option<usize> {
        self.lift(self.f.cod.carrier.l(a))
    }
    fn runit(&self, a: usize) -> Option<usize> {
        self.lift(self.f.cod.carrier.r(a))
    }
    fn sym(&self, a: usize, b: usize) -> Option<usize> {
        self.lift(self.f.cod.carrier.c(a, b))
    }
    fn adist(&self, r: usize, x: usize, y: usize) -> Option<usize> {
        self.lift(self.f.cod.ad(r, x, y))
    }
    fn bdist(&self, r: usize, s: usize, x: usize) -> Option<usize> {
        self.lift(self.f.cod.bd(r, s, x))
    }
    fn bassoc(&self, r: usize, s: usize, x: usize) -> Option<usize> {
        self.lift(self.f.cod.ba(r, s, x))
    }
    fn iunit(&self, x: usize) -> Option<usize> {
        self.lift(self.f.cod.i(x))
    }
    fn zzero(&self, r: usize) -> Option<usize> {
        let _ = self.base;
        self.lift(self.f.cod.z(r))
    }
}

pub fn cokernel(f: &ModHom) -> Result<CokernelResult> {
    f.require_valid()?;
    let (a, bm, h) = (&f.dom.carrier, &*f.cod, &f.hom);
    let b = &bm.carrier;
    let mut raw: Vec<Raw> = Vec::new();
    for s in 0..b.n() {
        for t in 0..b.n() {
            for x in 0..a.n() {
                for &k in b.base.hom(s, b.add(t, h.o(x))) {
                    raw.push((t, k, x));
                }
            }
        }
    }
    let raw_index: HashMap<Raw, usize> = raw.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let mut uf = UnionFind::new(raw.len());
    for (i, &(t, k, x)) in raw.iter().enumerate() {
        for al in 0..a.m() {
            if a.base.src(al) != x {
                continue;
            }
            let k2 = b.seq(&[k, b.add_l(t, h.f(al))]).expect("typed by construction");
            uf.union(i, raw_index[&(t, k2, a.base.tgt(al))]);
        }
    }
    let mut reps: Vec<Raw> = Vec::new();
    let mut root_class: HashMap<usize, usize> = HashMap::new();
    for i in 0..raw.len() {
        let r = uf.find(i);
        if let std::collections::hash_map::Entry::Vacant(e) = root_class.entry(r) {
            e.insert(reps.len());
            reps.push(raw[i]);
        }
    }
    let class: HashMap<Raw, usize> = raw.iter().enumerate().map(|(i, &r)| (r, root_class[&uf.find(i)])).collect();
    let decls: Vec<MorDecl> = reps
        .iter()
        .map(|&(t, k, x)| (format!("[{},{}]", b.base.mor_name(k), a.base.obj_name(x)), b.base.src(k), t))
        .collect();
    let id_of = (0..b.n())
        .map(|s| lift_in(f, &class, b.id(s)).ok_or_else(|| Error::MalformedTable("identity class missing".into())))
        .collect::<Result<Vec<_>>>()?;
    let base = Groupoid::from_fn(b.base.objects().to_vec(), decls, id_of, |g, fc| {
        let (t1, f1, x) = reps[fc];
        let (t2, g1, y) = reps[g];
        debug_assert_eq!(t1, b.base.src(g1));
        let (fx, fy) = (h.o(x), h.o(y));
        b.seq(&[
            f1,
            b.add_r(g1, fx),
            b.a(t2, fy, fx),
            b.add_l(t2, b.c(fy, fx)),
            b.add_l(t2, b.inv(h.p(x, y))),
        ])
        .and_then(|k| class.get(&(t2, k, a.add(x, y))).copied())
        .unwrap_or(usize::MAX)
    })?;
    let sh = CokerShape { f, class: &class, reps: &reps, base: &base };
    let coker = Arc::new(assemble(bm.ring.clone(), base.clone(), &sh)?);
    let mmap = (0..b.m())
        .map(|g| lift_in(f, &class, g).ok_or_else(|| Error::MalformedTable("lift missing".into())))
        .collect::<Result<Vec<_>>>()?;
    let p = strict_hom(bm, &coker, (0..b.n()).collect(), mmap);
    let pi = TwoMor {
        comp: (0..a.n())
            .map(|x| {
                class
                    .get(&(b.unit, b.inv(b.l(h.o(x))), x))
                    .copied()
                    .ok_or_else(|| Error::MalformedTable("π component missing".into()))
            })
            .collect::<Result<Vec<_>>>()?,
    };
    Ok(CokernelResult { f: f.clone(), coker, p, pi, reps, class })
}

/// `φ_x ∘ φ″_{Fx} = G″₀ ∘ G″(π_x)` for every object `x` of the domain of `F`.
pub fn cokernel_compatible(c: &CokernelResult, k: &Module, phi: &TwoMor, g2: &Hom, phi2: &TwoMor) -> bool {
    let kc = &k.carrier;
    (0..c.f.dom.n()).all(|x| {
        let fx = c.f.hom.o(x);
        kc.seq(&[phi2.comp[fx], phi.comp[x]]) == kc.seq(&[g2.f(c.pi.comp[x]), g2.z()])
    })
}

/// Factor `G: B → K` with `φ: G∘F ⇒ 0` through the cokernel.
pub fn cokernel_factor(c: &CokernelResult, k: &Arc<Module>, g: &Hom, phi: &TwoMor) -> Result<Factored> {
    let (a, b) = (&*c.f.dom, &*c.f.cod);
    let gf = compose_mod_hom(a, b, k, &c.f.hom, g)?;
    require_boundary(a, k, &gf, &zero(a, k), phi, "φ: G∘F ⇒ 0")?;
    let kc = &k.carrier;
    let mmap = c
        .reps
        .iter()
        .map(|&(t, f, x)| {
            let gt = g.o(t);
            kc.seq(&[g.f(f), g.p(t, c.f.hom.o(x)), kc.add_l(gt, phi.comp[x]), kc.r(gt)])
                .ok_or_else(|| Error::MalformedTable("factored morphism is not composable".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let g_prime = Hom { omap: g.omap.clone(), mmap, fplus: g.fplus.clone(), fzero: g.fzero, ftwo: g.ftwo.clone() };
    let phi_prime = TwoMor { comp: g.omap.iter().map(|&y| kc.id(y)).collect() };
    Ok(Factored { g_prime, phi_prime })
}

/// ψ: G″ ⇒ G′ with `ψ_B = φ″_B`, and how many 2-morphisms have those components.
pub fn cokernel_psi(
    c: &CokernelResult,
    k: &Arc<Module>,
    g_prime: &Hom,
    g2: &Hom,
    phi2: &TwoMor,
    budget: &SearchBudget,
) -> Result<PsiResult> {
    let psi = TwoMor { comp: phi2.comp.clone() };
    let mut solutions = 0;
    for_each_two_morphism(Endpoints::Modules(&c.coker, k), g2, g_prime, &mut budget.ticker(), &mut |e| {
        if e == psi {
            solutions += 1;
        }
        Ok(false)
    })?;
    Ok(PsiResult { psi, solutions })
}
