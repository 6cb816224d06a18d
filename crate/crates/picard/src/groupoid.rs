//! Finite groupoids, functors and natural transformations stored as dense tables.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::report::CheckReport;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Groupoid {
    objects: Vec<String>,
    mor_names: Vec<String>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    id_of: Vec<usize>,
    inv: Vec<usize>,
    /// `comp[g][pos_in[f]] = g∘f` for every f with `tgt f = src g`.
    comp: Vec<Vec<usize>>,
    into: Vec<Vec<usize>>,
    pos_in: Vec<usize>,
    homs: Vec<Vec<usize>>,
    obj_index: HashMap<String, usize>,
    mor_index: HashMap<String, usize>,
}

/// One morphism declaration: name, source, target.
pub type MorDecl = (String, usize, usize);

impl Groupoid {
    /// Build a groupoid whose composition is given by a function on composable pairs.
    /// Inverses are located by search in the finished table.
    pub fn from_fn(
        objects: Vec<String>,
        mors: Vec<MorDecl>,
        id_of: Vec<usize>,
        mut comp: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self> {
        let mut g = Self::skeleton(objects, mors, id_of)?;
        for gm in 0..g.src.len() {
            let s = g.src[gm];
            let mut row = Vec::with_capacity(g.into[s].len());
            for &f in &g.into[s] {
                let h = comp(gm, f);
                if h >= g.src.len() {
                    return Err(Error::MalformedTable(format!(
                        "composite of {} and {} is out of range",
                        g.mor_names[gm], g.mor_names[f]
                    )));
                }
                row.push(h);
            }
            g.comp[gm] = row;
        }
        for f in 0..g.src.len() {
            let (a, b) = (g.src[f], g.tgt[f]);
            let found = g.hom(b, a).iter().copied().find(|&h| g.comp(h, f) == Some(g.id_of[a]));
            match found {
                Some(h) => g.inv[f] = h,
                None => {
                    return Err(Error::MalformedTable(format!(
                        "morphism {} has no inverse",
                        g.mor_names[f]
                    )))
                }
            }
        }
        Ok(g)
    }

    /// Build from explicit composition and inverse tables.
    pub fn from_tables(
        objects: Vec<String>,
        mors: Vec<MorDecl>,
        id_of: Vec<usize>,
        comp: &HashMap<(usize, usize), usize>,
        inv: Vec<usize>,
    ) -> Result<Self> {
        let mut g = Self::skeleton(objects, mors, id_of)?;
        let m = g.src.len();
        if inv.len() != m || inv.iter().any(|&i| i >= m) {
            return Err(Error::MalformedTable("inverse table incomplete or out of range".into()));
        }
        g.inv = inv;
        for gm in 0..m {
            let s = g.src[gm];
            let mut row = Vec::with_capacity(g.into[s].len());
            for &f in &g.into[s] {
                match comp.get(&(gm, f)) {
                    Some(&h) if h < m => row.push(h),
                    Some(_) => {
                        return Err(Error::MalformedTable(format!(
                            "composite {} {} out of range",
                            g.mor_names[gm], g.mor_names[f]
                        )))
                    }
                    None => {
                        return Err(Error::Reference(format!(
                            "missing comp entry for {} {}",
                            g.mor_names[gm], g.mor_names[f]
                        )))
                    }
                }
            }
            g.comp[gm] = row;
        }
        Ok(g)
    }

    fn skeleton(objects: Vec<String>, mors: Vec<MorDecl>, id_of: Vec<usize>) -> Result<Self> {
        let n = objects.len();
        let m = mors.len();
        let mut obj_index = HashMap::new();
        for (i, o) in objects.iter().enumerate() {
            if obj_index.insert(o.clone(), i).is_some() {
                return Err(Error::MalformedTable(format!("duplicate object {o}")));
            }
        }
        let mut mor_index = HashMap::new();
        let mut src = Vec::with_capacity(m);
        let mut tgt = Vec::with_capacity(m);
        let mut mor_names = Vec::with_capacity(m);
        for (i, (name, s, t)) in mors.into_iter().enumerate() {
            if s >= n || t >= n {
                return Err(Error::MalformedTable(format!("morphism {name} has unknown endpoint")));
            }
            if mor_index.insert(name.clone(), i).is_some() {
                return Err(Error::MalformedTable(format!("duplicate morphism {name}")));
            }
            src.push(s);
            tgt.push(t);
            mor_names.push(name);
        }
        if id_of.len() != n || id_of.iter().any(|&i| i >= m) {
            return Err(Error::MalformedTable("identity table incomplete or out of range".into()));
        }
        let mut into = vec![Vec::new(); n];
        let mut pos_in = vec![0; m];
        let mut homs = vec![Vec::new(); n * n];
        for f in 0..m {
            pos_in[f] = into[tgt[f]].len();
            into[tgt[f]].push(f);
            homs[src[f] * n + tgt[f]].push(f);
        }
        Ok(Groupoid {
            objects,
            mor_names,
            src,
            tgt,
            id_of,
            inv: vec![0; m],
            comp: vec![Vec::new(); m],
            into,
            pos_in,
            homs,
            obj_index,
            mor_index,
        })
    }

    pub fn n_obj(&self) -> usize {
        self.objects.len()
    }

    pub fn n_mor(&self) -> usize {
        self.src.len()
    }

    pub fn obj_name(&self, a: usize) -> &str {
        &self.objects[a]
    }

    pub fn mor_name(&self, f: usize) -> &str {
        &self.mor_names[f]
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn mor_names(&self) -> &[String] {
        &self.mor_names
    }

    pub fn obj_by_name(&self, name: &str) -> Option<usize> {
        self.obj_index.get(name).copied()
    }

    pub fn mor_by_name(&self, name: &str) -> Option<usize> {
        self.mor_index.get(name).copied()
    }

    pub fn src(&self, f: usize) -> usize {
        self.src[f]
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.tgt[f]
    }

    pub fn id(&self, a: usize) -> usize {
        self.id_of[a]
    }

    pub fn inv(&self, f: usize) -> usize {
        self.inv[f]
    }

    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        &self.homs[a * self.objects.len() + b]
    }

    pub fn is_iso(&self, a: usize, b: usize) -> bool {
        !self.hom(a, b).is_empty()
    }

    /// `g∘f`, or `None` when the pair is not composable.
    pub fn comp(&self, g: usize, f: usize) -> Option<usize> {
        if self.tgt[f] != self.src[g] {
            return None;
        }
        Some(self.comp[g][self.pos_in[f]])
    }

    /// Composite of a path given in the order of application: `fs[0]` first.
    pub fn seq(&self, fs: &[usize]) -> Option<usize> {
        let (&first, rest) = fs.split_first()?;
        rest.iter().try_fold(first, |acc, &g| self.comp(g, acc))
    }

    /// Composable pairs `(g, f)` in deterministic order.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n_mor()).flat_map(move |g| self.into[self.src[g]].iter().map(move |&f| (g, f)))
    }

    pub fn set_comp(&mut self, g: usize, f: usize, h: usize) {
        assert_eq!(self.tgt[f], self.src[g], "set_comp on a non-composable pair");
        let p = self.pos_in[f];
        self.comp[g][p] = h;
    }

    pub fn set_inv(&mut self, f: usize, h: usize) {
        self.inv[f] = h;
    }

    pub fn set_id(&mut self, a: usize, f: usize) {
        self.id_of[a] = f;
    }

    pub fn mor_decls(&self) -> Vec<MorDecl> {
        (0..self.n_mor()).map(|f| (self.mor_names[f].clone(), self.src[f], self.tgt[f])).collect()
    }

    pub fn id_table(&self) -> &[usize] {
        &self.id_of
    }

    pub fn inv_table(&self) -> &[usize] {
        &self.inv
    }

    /// Connected components with chosen representatives and transport morphisms.
    pub fn skeleton_data(&self) -> Skeleton {
        let n = self.n_obj();
        let mut rep = vec![usize::MAX; n];
        let mut to_rep = vec![0; n];
        let mut reps = Vec::new();
        for a in 0..n {
            if rep[a] != usize::MAX {
                continue;
            }
            reps.push(a);
            for b in a..n {
                if rep[b] == usize::MAX {
                    if let Some(&t) = self.hom(b, a).first() {
                        rep[b] = a;
                        to_rep[b] = if a == b { self.id(a) } else { t };
                    }
                }
            }
        }
        let class_of = rep.iter().map(|r| reps.iter().position(|x| x == r).unwrap()).collect();
        let aut = reps.iter().map(|&r| self.hom(r, r).to_vec()).collect();
        Skeleton { rep, to_rep, reps, class_of, aut }
    }
}

/// Chosen skeleton of a groupoid: every object is transported to the least object of its component.
#[derive(Debug, Clone)]
pub struct Skeleton {
    pub rep: Vec<usize>,
    pub to_rep: Vec<usize>,
    pub reps: Vec<usize>,
    pub class_of: Vec<usize>,
    pub aut: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Functor {
    pub omap: Vec<usize>,
    pub mmap: Vec<usize>,
}

impl Functor {
    pub fn identity(g: &Groupoid) -> Self {
        Functor { omap: (0..g.n_obj()).collect(), mmap: (0..g.n_mor()).collect() }
    }

    pub fn then(&self, next: &Functor) -> Functor {
        Functor {
            omap: self.omap.iter().map(|&a| next.omap[a]).collect(),
            mmap: self.mmap.iter().map(|&f| next.mmap[f]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NatTrans {
    pub component: Vec<usize>,
}

pub type MorRelation = Vec<(usize, usize)>;

/// Witness of the first functor-law violation, if any.
pub fn functor_violation(dom: &Groupoid, cod: &Groupoid, f: &Functor) -> Option<(&'static str, Vec<String>)> {
    if f.omap.len() != dom.n_obj() || f.mmap.len() != dom.n_mor() {
        return Some(("shape", vec![]));
    }
    if let Some(a) = f.omap.iter().position(|&x| x >= cod.n_obj()) {
        return Some(("shape", vec![dom.obj_name(a).to_string()]));
    }
    if let Some(m) = f.mmap.iter().position(|&x| x >= cod.n_mor()) {
        return Some(("shape", vec![dom.mor_name(m).to_string()]));
    }
    for m in 0..dom.n_mor() {
        let fm = f.mmap[m];
        if cod.src(fm) != f.omap[dom.src(m)] || cod.tgt(fm) != f.omap[dom.tgt(m)] {
            return Some(("typing", vec![dom.mor_name(m).to_string()]));
        }
    }
    for a in 0..dom.n_obj() {
        if f.mmap[dom.id(a)] != cod.id(f.omap[a]) {
            return Some(("identity", vec![dom.obj_name(a).to_string()]));
        }
    }
    for (g, h) in dom.composable_pairs() {
        let gh = dom.comp(g, h).unwrap();
        if cod.comp(f.mmap[g], f.mmap[h]) != Some(f.mmap[gh]) {
            return Some(("composition", vec![dom.mor_name(g).to_string(), dom.mor_name(h).to_string()]));
        }
    }
    None
}

/// Witness of the first naturality violation of `eta: f ⇒ g`.
pub fn naturality_violation(dom: &Groupoid, cod: &Groupoid, f: &Functor, g: &Functor, eta: &NatTrans) -> Option<Vec<String>> {
    for a in 0..dom.n_obj() {
        let c = eta.component[a];
        if c >= cod.n_mor() || cod.src(c) != f.omap[a] || cod.tgt(c) != g.omap[a] {
            return Some(vec![dom.obj_name(a).to_string()]);
        }
    }
    for m in 0..dom.n_mor() {
        let (a, b) = (dom.src(m), dom.tgt(m));
        let lhs = cod.comp(eta.component[b], f.mmap[m]);
        let rhs = cod.comp(g.mmap[m], eta.component[a]);
        if lhs.is_none() || lhs != rhs {
            return Some(vec![dom.mor_name(m).to_string()]);
        }
    }
    None
}

/// First violation of the bifunctor laws for `(x, y) ↦ obj(x, y)`, `(f, g) ↦ mor(f, g)`.
pub fn bifunctor_violation(
    g1: &Groupoid,
    g2: &Groupoid,
    cod: &Groupoid,
    obj: impl Fn(usize, usize) -> usize,
    mor: impl Fn(usize, usize) -> usize,
) -> Option<Vec<String>> {
    for f in 0..g1.n_mor() {
        for h in 0..g2.n_mor() {
            let s = mor(f, h);
            if cod.src(s) != obj(g1.src(f), g2.src(h)) || cod.tgt(s) != obj(g1.tgt(f), g2.tgt(h)) {
                return Some(vec![g1.mor_name(f).to_string(), g2.mor_name(h).to_string()]);
            }
        }
    }
    for a in 0..g1.n_obj() {
        for b in 0..g2.n_obj() {
            if mor(g1.id(a), g2.id(b)) != cod.id(obj(a, b)) {
                return Some(vec![g1.obj_name(a).to_string(), g2.obj_name(b).to_string()]);
            }
        }
    }
    let p2: Vec<(usize, usize)> = g2.composable_pairs().collect();
    for (f2, f1) in g1.composable_pairs() {
        let f = g1.comp(f2, f1).unwrap();
        for &(h2, h1) in &p2 {
            let h = g2.comp(h2, h1).unwrap();
            if cod.comp(mor(f2, h2), mor(f1, h1)) != Some(mor(f, h)) {
                return Some(vec![
                    g1.mor_name(f2).to_string(),
                    g1.mor_name(f1).to_string(),
                    g2.mor_name(h2).to_string(),
                    g2.mor_name(h1).to_string(),
                ]);
            }
        }
    }
    None
}

/// Naturality of a component family `kappa: S ⇒ T` of several variables, checked one slot at a time
/// with identities elsewhere. `s` and `t` act on morphism tuples, `kappa` on object tuples.
pub fn natural_in_each(
    slots: &[&Groupoid],
    cod: &Groupoid,
    kappa: &dyn Fn(&[usize]) -> usize,
    s: &dyn Fn(&[usize]) -> usize,
    t: &dyn Fn(&[usize]) -> usize,
) -> Option<Vec<String>> {
    let k = slots.len();
    let mut objs = vec![0usize; k];
    for slot in 0..k {
        let others: Vec<usize> = (0..k).filter(|&i| i != slot).collect();
        let total: usize = others.iter().map(|&i| slots[i].n_obj()).product();
        for f in 0..slots[slot].n_mor() {
            for mut code in 0..total {
                for &i in others.iter().rev() {
                    objs[i] = code % slots[i].n_obj();
                    code /= slots[i].n_obj();
                }
                let mut mors: Vec<usize> = (0..k).map(|i| slots[i].id(objs[i])).collect();
                mors[slot] = f;
                let mut src = objs.clone();
                src[slot] = slots[slot].src(f);
                let mut tgt = objs.clone();
                tgt[slot] = slots[slot].tgt(f);
                let lhs = cod.seq(&[s(&mors), kappa(&tgt)]);
                let rhs = cod.seq(&[kappa(&src), t(&mors)]);
                if lhs.is_none() || lhs != rhs {
                    let mut w = vec![slots[slot].mor_name(f).to_string()];
                    w.extend(others.iter().map(|&i| slots[i].obj_name(objs[i]).to_string()));
                    return Some(w);
                }
            }
        }
    }
    None
}

/// First object tuple (one object per slot) failing `ok`, reported by name.
pub fn find_object_tuple(slots: &[&Groupoid], ok: impl Fn(&[usize]) -> bool) -> Option<Vec<String>> {
    let total: usize = slots.iter().map(|g| g.n_obj()).product();
    let mut t = vec![0usize; slots.len()];
    for mut code in 0..total {
        for i in (0..slots.len()).rev() {
            t[i] = code % slots[i].n_obj();
            code /= slots[i].n_obj();
        }
        if !ok(&t) {
            return Some(t.iter().zip(slots).map(|(&x, g)| g.obj_name(x).to_string()).collect());
        }
    }
    None
}

pub fn validate_groupoid(g: &Groupoid) -> CheckReport {
    let mut r = CheckReport::new();
    let name = |f: usize| g.mor_name(f).to_string();
    r.record(
        "groupoid.id_typing",
        (0..g.n_obj()).find(|&a| g.src(g.id(a)) != a || g.tgt(g.id(a)) != a).map(|a| vec![g.obj_name(a).to_string()]),
    );
    r.record(
        "groupoid.inv_typing",
        (0..g.n_mor()).find(|&f| g.src(g.inv(f)) != g.tgt(f) || g.tgt(g.inv(f)) != g.src(f)).map(|f| vec![name(f)]),
    );
    r.record(
        "groupoid.comp_typing",
        g.composable_pairs()
            .find(|&(x, y)| {
                let h = g.comp(x, y).unwrap();
                g.src(h) != g.src(y) || g.tgt(h) != g.tgt(x)
            })
            .map(|(x, y)| vec![name(x), name(y)]),
    );
    let assoc = || {
        for (hh, gg) in g.composable_pairs() {
            let hg = g.comp(hh, gg).unwrap();
            for &ff in &g.into[g.src(gg)] {
                let lhs = g.comp(hg, ff);
                let rhs = g.comp(gg, ff).and_then(|gf| g.comp(hh, gf));
                if lhs.is_none() || lhs != rhs {
                    return Some(vec![name(hh), name(gg), name(ff)]);
                }
            }
        }
        None
    };
    r.record("groupoid.assoc", assoc());
    r.record(
        "groupoid.identity",
        (0..g.n_mor())
            .find(|&f| g.comp(g.id(g.tgt(f)), f) != Some(f) || g.comp(f, g.id(g.src(f))) != Some(f))
            .map(|f| vec![name(f)]),
    );
    r.record(
        "groupoid.inverse",
        (0..g.n_mor())
            .find(|&f| {
                g.comp(g.inv(f), f) != Some(g.id(g.src(f))) || g.comp(f, g.inv(f)) != Some(g.id(g.tgt(f)))
            })
            .map(|f| vec![name(f)]),
    );
    r.sorted()
}

pub fn pair_name(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

/// Componentwise product; object `(a, b)` has index `a * |obj H| + b`, likewise for morphisms.
pub fn product(g: &Groupoid, h: &Groupoid) -> Groupoid {
    let (gn, hn, hm) = (g.n_obj(), h.n_obj(), h.n_mor());
    let mut objects = Vec::with_capacity(gn * hn);
    for a in 0..gn {
        for b in 0..hn {
            objects.push(pair_name(g.obj_name(a), h.obj_name(b)));
        }
    }
    let mut mors = Vec::with_capacity(g.n_mor() * hm);
    for f in 0..g.n_mor() {
        for k in 0..hm {
            mors.push((pair_name(g.mor_name(f), h.mor_name(k)), g.src(f) * hn + h.src(k), g.tgt(f) * hn + h.tgt(k)));
        }
    }
    let id_of = (0..gn * hn).map(|o| g.id(o / hn) * hm + h.id(o % hn)).collect();
    Groupoid::from_fn(objects, mors, id_of, |x, y| {
        g.comp(x / hm, y / hm).unwrap() * hm + h.comp(x % hm, y % hm).unwrap()
    })
    .expect("product of valid groupoids")
}

#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    /// Returns true when two distinct classes were merged. The smaller index becomes the root.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Close `uf` under composition on both sides until nothing changes.
pub fn congruence_closure(g: &Groupoid, uf: &mut UnionFind) {
    loop {
        let mut changed = false;
        for f in 0..g.n_mor() {
            let rf = uf.find(f);
            if rf == f {
                continue;
            }
            for &h in &g.into[g.src(f)] {
                let (a, b) = (g.comp(f, h).unwrap(), g.comp(rf, h).unwrap());
                changed |= uf.union(a, b);
            }
            let outs: Vec<usize> = (0..g.n_mor()).filter(|&k| g.src(k) == g.tgt(f)).collect();
            for k in outs {
                let (a, b) = (g.comp(k, f).unwrap(), g.comp(k, rf).unwrap());
                changed |= uf.union(a, b);
            }
        }
        if !changed {
            break;
        }
    }
}

/// Result of collapsing a groupoid along a congruence on morphisms.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub groupoid: Groupoid,
    pub projection: Functor,
    /// For every class (quotient morphism), its representative in the source.
    pub rep: Vec<usize>,
}

/// Quotient from a finished union-find (assumed already a congruence).
pub fn quotient_from_classes(g: &Groupoid, uf: &mut UnionFind) -> Quotient {
    let m = g.n_mor();
    let mut best: HashMap<usize, usize> = HashMap::new();
    for f in 0..m {
        let r = uf.find(f);
        let e = best.entry(r).or_insert(f);
        if g.mor_name(f) < g.mor_name(*e) {
            *e = f;
        }
    }
    let mut reps: Vec<usize> = best.values().copied().collect();
    reps.sort_unstable();
    let class_index: HashMap<usize, usize> = reps.iter().enumerate().map(|(i, &f)| (uf.find(f), i)).collect();
    let mmap: Vec<usize> = (0..m).map(|f| class_index[&uf.find(f)]).collect();
    let mors = reps.iter().map(|&f| (g.mor_name(f).to_string(), g.src(f), g.tgt(f))).collect();
    let id_of = (0..g.n_obj()).map(|a| mmap[g.id(a)]).collect();
    let groupoid = Groupoid::from_fn(g.objects.clone(), mors, id_of, |x, y| {
        mmap[g.comp(reps[x], reps[y]).unwrap()]
    })
    .expect("quotient of a valid groupoid by a congruence");
    Quotient { groupoid, projection: Functor { omap: (0..g.n_obj()).collect(), mmap }, rep: reps }
}

pub fn quotient_morphisms(g: &Groupoid, rel: &MorRelation) -> Result<Quotient> {
    let mut uf = UnionFind::new(g.n_mor());
    for &(a, b) in rel {
        if a >= g.n_mor() || b >= g.n_mor() {
            return Err(Error::MalformedTable("relation references an unknown morphism".into()));
        }
        if g.src(a) != g.src(b) || g.tgt(a) != g.tgt(b) {
            return Err(Error::NotParallel(format!("{} and {}", g.mor_name(a), g.mor_name(b))));
        }
        uf.union(a, b);
    }
    congruence_closure(g, &mut uf);
    Ok(quotient_from_classes(g, &mut uf))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_one_object(n: usize) -> Groupoid {
        let mors = (0..n).map(|k| (k.to_string(), 0, 0)).collect();
        Groupoid::from_fn(vec!["0".into()], mors, vec![0], |g, f| (g + f) % n).unwrap()
    }

    fn discrete(n: usize) -> Groupoid {
        let mors = (0..n).map(|k| (format!("id_{k}"), k, k)).collect();
        Groupoid::from_fn((0..n).map(|k| k.to_string()).collect(), mors, (0..n).collect(), |g, _| g).unwrap()
    }

    #[test]
    fn cyclic_groupoid_passes() {
        let g = cyclic_one_object(4);
        assert!(validate_groupoid(&g).all_pass());
        assert_eq!(g.inv(1), 3);
    }

    #[test]
    fn rewired_composite_breaks_associativity() {
        let mut g = cyclic_one_object(4);
        g.set_comp(1, 1, 3);
        let r = validate_groupoid(&g);
        let e = r.get("groupoid.assoc").unwrap();
        assert!(!e.pass);
        let w = e.witness.as_ref().unwrap();
        assert_eq!(w.len(), 3);
        // the reported triple really is non-associative
        let ix: Vec<usize> = w.iter().map(|s| g.mor_by_name(s).unwrap()).collect();
        let lhs = g.comp(g.comp(ix[0], ix[1]).unwrap(), ix[2]);
        let rhs = g.comp(ix[0], g.comp(ix[1], ix[2]).unwrap());
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn product_counts() {
        let p = product(&discrete(2), &discrete(3));
        assert_eq!((p.n_obj(), p.n_mor()), (6, 6));
        let q = product(&cyclic_one_object(2), &cyclic_one_object(2));
        assert_eq!((q.n_obj(), q.n_mor()), (1, 4));
        // (1,0)∘(1,1) = (0,1)
        let a = q.mor_by_name("(1,0)").unwrap();
        let b = q.mor_by_name("(1,1)").unwrap();
        assert_eq!(q.mor_name(q.comp(a, b).unwrap()), "(0,1)");
        assert!(validate_groupoid(&q).all_pass());
    }

    #[test]
    fn quotient_of_cyclic() {
        let g = cyclic_one_object(4);
        let q = quotient_morphisms(&g, &vec![(0, 2)]).unwrap();
        assert_eq!(q.groupoid.n_mor(), 2);
        assert!(validate_groupoid(&q.groupoid).all_pass());
        let one = q.projection.mmap[1];
        assert_eq!(q.groupoid.comp(one, one), Some(q.projection.mmap[0]));
        assert!(functor_violation(&g, &q.groupoid, &q.projection).is_none());
    }

    #[test]
    fn empty_relation_is_bijective() {
        let g = cyclic_one_object(3);
        let q = quotient_morphisms(&g, &vec![]).unwrap();
        assert_eq!(q.groupoid.n_mor(), 3);
        assert_eq!(q.projection.mmap, vec![0, 1, 2]);
    }

    #[test]
    fn non_parallel_relation_rejected() {
        let g = discrete(2);
        let err = quotient_morphisms(&g, &vec![(0, 1)]).unwrap_err();
        assert_eq!(err.kind(), "NOT_PARALLEL");
    }
}
