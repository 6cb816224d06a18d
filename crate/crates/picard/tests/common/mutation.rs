//! Single-entry mutations of table-backed structures.
//!
//! A mutation is known to be invalid without consulting any validator when it replaces a
//! morphism entry by one with different endpoints: every morphism table has its endpoints
//! fixed by the (unchanged) object tables.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use picard::groupoid::{validate_groupoid, Groupoid};
use picard::rmodule::{validate_mod_hom, validate_mod_two_morphism, validate_module, Module};
use picard::tworing::{validate_ring_hom, validate_ring_two_morphism, validate_two_ring, RingHom, TwoRing};
use picard::twogroup::{validate_hom, validate_two_group, validate_two_morphism, Hom, TwoGroup, TwoMor};
use picard::CheckReport;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Obj,
    Mor,
}

pub struct Table {
    pub name: String,
    pub len: usize,
    pub bound: usize,
    pub kind: Kind,
}

fn tab(name: impl Into<String>, len: usize, bound: usize, kind: Kind) -> Table {
    Table { name: name.into(), len, bound, kind }
}

pub trait Subject: Clone {
    fn label(&self) -> String;
    fn tables(&self) -> Vec<Table>;
    fn get(&self, t: &str, i: usize) -> usize;
    fn set(&mut self, t: &str, i: usize, v: usize);
    /// The groupoid holding the values of a morphism table.
    fn home(&self, t: &str) -> &Groupoid;
    fn check(&self) -> picard::Result<CheckReport>;
    fn names(&self) -> HashSet<String>;
    /// Typing family that must flag a retyped entry, with the expected witness.
    fn typing(&self, _t: &str, _i: usize) -> Option<(String, Vec<String>)> {
        None
    }
}

fn n_obj(g: &Groupoid) -> usize {
    g.objects().len()
}

fn all_names(gs: &[&Groupoid]) -> HashSet<String> {
    let mut s = HashSet::new();
    for g in gs {
        s.extend(g.objects().iter().cloned());
        s.extend(g.mor_names().iter().cloned());
    }
    s
}

fn onames(g: &Groupoid, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| g.obj_name(x).to_string()).collect()
}

fn g_tables(p: &str, g: &Groupoid) -> Vec<Table> {
    let m = g.n_mor();
    vec![
        tab(format!("{p}comp"), g.composable_pairs().count(), m, Kind::Mor),
        tab(format!("{p}inv"), m, m, Kind::Mor),
        tab(format!("{p}id"), n_obj(g), m, Kind::Mor),
    ]
}

fn g_get(g: &Groupoid, t: &str, i: usize) -> usize {
    match t {
        "comp" => {
            let (a, b) = g.composable_pairs().nth(i).unwrap();
            g.comp(a, b).unwrap()
        }
        "inv" => g.inv(i),
        "id" => g.id(i),
        _ => panic!("unknown groupoid table {t}"),
    }
}

fn g_set(g: &mut Groupoid, t: &str, i: usize, v: usize) {
    match t {
        "comp" => {
            let (a, b) = g.composable_pairs().nth(i).unwrap();
            g.set_comp(a, b, v)
        }
        "inv" => g.set_inv(i, v),
        "id" => g.set_id(i, v),
        _ => panic!("unknown groupoid table {t}"),
    }
}

fn t_tables(p: &str, t: &TwoGroup) -> Vec<Table> {
    let (n, m) = (t.n(), t.m());
    let mut v = g_tables(&format!("{p}base."), &t.base);
    v.extend([
        tab(format!("{p}plus_obj"), n * n, n, Kind::Obj),
        tab(format!("{p}plus_mor"), m * m, m, Kind::Mor),
        tab(format!("{p}unit"), 1, n, Kind::Obj),
        tab(format!("{p}assoc"), n * n * n, m, Kind::Mor),
        tab(format!("{p}lunit"), n, m, Kind::Mor),
        tab(format!("{p}runit"), n, m, Kind::Mor),
        tab(format!("{p}sym"), n * n, m, Kind::Mor),
        tab(format!("{p}dual"), n, n, Kind::Obj),
        tab(format!("{p}eta"), n, m, Kind::Mor),
    ]);
    v
}

fn t_vec<'a>(t: &'a mut TwoGroup, k: &str) -> &'a mut Vec<usize> {
    match k {
        "plus_obj" => &mut t.plus_obj,
        "plus_mor" => &mut t.plus_mor,
        "assoc" => &mut t.assoc,
        "lunit" => &mut t.lunit,
        "runit" => &mut t.runit,
        "sym" => &mut t.sym,
        "dual" => &mut t.dual,
        "eta" => &mut t.eta,
        _ => panic!("unknown twogroup table {k}"),
    }
}

fn t_get(t: &TwoGroup, k: &str, i: usize) -> usize {
    if let Some(g) = k.strip_prefix("base.") {
        return g_get(&t.base, g, i);
    }
    if k == "unit" {
        return t.unit;
    }
    t_vec(&mut t.clone(), k)[i]
}

fn t_set(t: &mut TwoGroup, k: &str, i: usize, v: usize) {
    if let Some(g) = k.strip_prefix("base.") {
        return g_set(&mut t.base, g, i, v);
    }
    if k == "unit" {
        t.unit = v;
        return;
    }
    t_vec(t, k)[i] = v;
}

fn t_typing(fam: &str, t: &TwoGroup, k: &str, i: usize) -> Option<(String, Vec<String>)> {
    let n = t.n();
    let g = &t.base;
    let (name, objs) = match k {
        "assoc" => ("assoc_typing", vec![i / (n * n), (i / n) % n, i % n]),
        "lunit" => ("lunit_typing", vec![i]),
        "runit" => ("runit_typing", vec![i]),
        "sym" => ("sym_typing", vec![i / n, i % n]),
        "eta" => ("eta_typing", vec![i]),
        _ => return None,
    };
    Some((format!("{fam}twogroup.{name}"), onames(g, &objs)))
}

#[derive(Clone)]
pub struct GroupoidSub(pub String, pub Groupoid);

impl Subject for GroupoidSub {
    fn label(&self) -> String {
        format!("groupoid {}", self.0)
    }
    fn tables(&self) -> Vec<Table> {
        g_tables("", &self.1)
    }
    fn get(&self, t: &str, i: usize) -> usize {
        g_get(&self.1, t, i)
    }
    fn set(&mut self, t: &str, i: usize, v: usize) {
        g_set(&mut self.1, t, i, v)
    }
    fn home(&self, _t: &str) -> &Groupoid {
        &self.1
    }
    fn check(&self) -> picard::Result<CheckReport> {
        Ok(validate_groupoid(&self.1))
    }
    fn names(&self) -> HashSet<String> {
        all_names(&[&self.1])
    }
}

#[derive(Clone)]
pub struct GroupSub(pub String, pub TwoGroup);

impl Subject for GroupSub {
    fn label(&self) -> String {
        format!("twogroup {}", self.0)
    }
    fn tables(&self) -> Vec<Table> {
        t_tables("", &self.1)
    }
    fn get(&self, t: &str, i: usize) -> usize {
        t_get(&self.1, t, i)
    }
    fn set(&mut self, t: &str, i: usize, v: usize) {
        t_set(&mut self.1, t, i, v)
    }
    fn home(&self, _t: &str) -> &Groupoid {
        &self.1.base
    }
    fn check(&self) -> picard::Result<CheckReport> {
        validate_two_group(&self.1)
    }
    fn names(&self) -> HashSet<String> {
        all_names(&[&self.1.base])
    }
    fn typing(&self, t: &str, i: usize) -> Option<(String, Vec<String>)> {
        t_typing("", &self.1, t, i)
    }
}

#[derive(Clone)]
pub struct RingSub(pub String, pub TwoRing);

impl RingSub {
    fn vec_mut(&mut self, k: &str) -> &mut Vec<usize> {
        let r = &mut self.1;
        match k {
            "mul_obj" => &mut r.mul_obj,
            "mul_mor" => &mut r.mul_mor,
            "massoc" => &mut r.massoc,
            "mlunit" => &mut r.mlunit,
            "mrunit" => &mut r.mrunit,
            "ldist" => &mut r.ldist,
            "rdist" => &mut r.rdist,
            _ => panic!("unknown ring table {k}"),
        }
    }
}

impl Subject for RingSub {
    fn label(&self) -> String {
        format!("tworing {}", self.0)
    }
    fn tables(&self) -> Vec<Table> {
        let r = &self.1;
        let (n, m) = (r.n(), r.m());
        let mut v = t_tables("add.", &r.add);
        v.extend([
            tab("mul_obj", n * n, n, Kind::Obj),
            tab("mul_mor", m * m, m, Kind::Mor),
            tab("one", 1, n, Kind::Obj),
            tab("massoc", n * n * n, m, Kind::Mor),
            tab("mlunit", n, m, Kind::Mor),
            tab("mrunit", n, m, Kind::Mor),
            tab("ldist", n * n * n, m, Kind::Mor),
            tab("rdist", n * n * n, m, Kind::Mor),
        ]);
        v
    }
    fn get(&self, t: &str, i: usize) -> usize {
        if let Some(k) = t.strip_prefix("add.") {
            return t_get(&self.1.add, k, i);
        }
        if t == "one" {
            return self.1.one;
        }
        self.clone().vec_mut(t)[i]
    }
    fn set(&mut self, t: &str, i: usize, v: usize) {
        if let Some(k) = t.strip_prefix("add.") {
            return t_set(&mut self.1.add, k, i, v);
        }
        if t == "one" {
            self.1.one = v;
            return;
        }
        self.vec_mut(t)[i] = v;
    }
    fn home(&self, _t: &str) -> &Groupoid {
        &self.1.add.base
    }
    fn check(&self) -> picard::Result<CheckReport> {
        validate_two_ring(&self.1)
    }
    fn names(&self) -> HashSet<String> {
        all_names(&[&self.1.add.base])
    }
    fn typing(&self, t: &str, i: usize) -> Option<(String, Vec<String>)> {
        if let Some(k) = t.strip_prefix("add.") {
            return t_typing("ring.", &self.1.add, k, i);
        }
        let n = self.1.n();
        let fam = match t {
            "massoc" => "ring.massoc_typing",
            "ldist" => "ring.ldist_typing",
            "rdist" => "ring.rdist_typing",
            _ => return None,
        };
        Some((fam.into(), onames(&self.1.add.base, &[i / (n * n), (i / n) % n, i % n])))
    }
}

#[derive(Clone)]
pub struct ModuleSub(pub String, pub Module);

impl ModuleSub {
    fn vec_mut(&mut self, k: &str) -> &mut Vec<usize> {
        let md = &mut self.1;
        match k {
            "act_obj" => &mut md.act_obj,
            "act_mor" => &mut md.act_mor,
            "adist" => &mut md.adist,
            "bdist" => &mut md.bdist,
            "bassoc" => &mut md.bassoc,
            "iunit" => &mut md.iunit,
            "zzero" => &mut md.zzero,
            _ => panic!("unknown module table {k}"),
        }
    }
}

impl Subject for ModuleSub {
    fn label(&self) -> String {
        format!("module {}", self.0)
    }
    fn tables(&self) -> Vec<Table> {
        let md = &self.1;
        let (n, m, nr, mr) = (md.n(), md.m(), md.ring.n(), md.ring.m());
        let mut v = t_tables("carrier.", &md.carrier);
        v.extend([
            tab("act_obj", nr * n, n, Kind::Obj),
            tab("act_mor", mr * m, m, Kind::Mor),
            tab("adist", nr * n * n, m, Kind::Mor),
            tab("bdist", nr * nr * n, m, Kind::Mor),
            tab("bassoc", nr * nr * n, m, Kind::Mor),
            tab("iunit", n, m, Kind::Mor),
            tab("zzero", nr, m, Kind::Mor),
        ]);
        v
    }
    fn get(&self, t: &str, i: usize) -> usize {
        if let Some(k) = t.strip_prefix("carrier.") {
            return t_get(&self.1.carrier, k, i);
        }
        self.clone().vec_mut(t)[i]
    }
    fn set(&mut self, t: &str, i: usize, v: usize) {
        if let Some(k) = t.strip_prefix("carrier.") {
            return t_set(&mut self.1.carrier, k, i, v);
        }
        self.vec_mut(t)[i] = v;
    }
    fn home(&self, _t: &str) -> &Groupoid {
        &self.1.carrier.base
    }
    fn check(&self) -> picard::Result<CheckReport> {
        validate_module(&self.1)
    }
    fn names(&self) -> HashSet<String> {
        all_names(&[&self.1.carrier.base, &self.1.ring.add.base])
    }
    fn typing(&self, t: &str, i: usize) -> Option<(String, Vec<String>)> {
        if let Some(k) = t.strip_prefix("carrier.") {
            return t_typing("module.", &self.1.carrier, k, i);
        }
        let md = &self.1;
        let (n, nr) = (md.n(), md.ring.n());
        let (rb, cb) = (&md.ring.add.base, &md.carrier.base);
        let (r, c) = (|x: usize| rb.obj_name(x).to_string(), |x: usize| cb.obj_name(x).to_string());
        let w = match t {
            "adist" => vec![r(i / (n * n)), c((i / n) % n), c(i % n)],
            "bdist" | "bassoc" => vec![r(i / (nr * n)), r((i / n) % nr), c(i % n)],
            "iunit" => vec![c(i)],
            "zzero" => vec![r(i)],
            _ => return None,
        };
        let mut full = vec![t.to_string()];
        full.extend(w);
        Some(("module.component_typing".into(), full))
    }
}

fn hom_tables(h: &Hom, nd: usize, nc: usize, mc: usize) -> Vec<Table> {
    vec![
        tab("omap", h.omap.len(), nc, Kind::Obj),
        tab("mmap", h.mmap.len(), mc, Kind::Mor),
        tab("fplus", nd * nd, mc, Kind::Mor),
        tab("fzero", 1, mc, Kind::Mor),
        tab("ftwo", h.ftwo.len(), mc, Kind::Mor),
    ]
    .into_iter()
    .filter(|t| t.len > 0)
    .collect()
}

fn hom_get(h: &Hom, t: &str, i: usize) -> usize {
    match t {
        "omap" => h.omap[i],
        "mmap" => h.mmap[i],
        "fplus" => h.fplus[i],
        "fzero" => h.fzero,
        "ftwo" => h.ftwo[i],
        _ => panic!("unknown hom table {t}"),
    }
}

fn hom_set(h: &mut Hom, t: &str, i: usize, v: usize) {
    match t {
        "omap" => h.omap[i] = v,
        "mmap" => h.mmap[i] = v,
        "fplus" => h.fplus[i] = v,
        "fzero" => h.fzero = v,
        "ftwo" => h.ftwo[i] = v,
        _ => panic!("unknown hom table {t}"),
    }
}

fn hom_typing(fam: &str, d: &TwoGroup, t: &str, i: usize) -> Option<(String, Vec<String>)> {
    let n = d.n();
    match t {
        "fplus" => Some((format!("{fam}.fplus_typing"), onames(&d.base, &[i / n, i % n]))),
        "fzero" => Some((format!("{fam}.fzero_typing"), onames(&d.base, &[d.unit]))),
        _ => None,
    }
}

#[derive(Clone)]
pub struct HomSub {
    pub name: String,
    pub d: Arc<TwoGroup>,
    pub c: Arc<TwoGroup>,
    pub h: Hom,
}

impl Subject for HomSub {
    fn label(&self) -> String {
        format!("hom {}", self.name)
    }
    fn tables(&self) -> Vec<Table> {
        hom_tables(&self.h, self.d.n(), self.c.n(), self.c.m())
    }
    fn get(&self, t: &str, i: usize) -> usize {
        hom_get(&self.h, t, i)
    }
    fn set(&mut self, t: &str, i: usize, v: usize) {
        hom_set(&mut self.h, t, i, v)
    }
    fn home(&self, _t: &str) -> &Groupoid {
        &self.c.base
    }
    fn check(&self) -> picard::Result<CheckReport> {
        validate_hom(&self.d, &self.c, &self.h)
    }
    fn names(&self) -> HashSet<String> {
        all_names(&[&self.d.base, &self.c.base])
    }
    fn typing(&self, t: &str, i: usize) -> Option<(String, Vec<String>)> {
        hom_typing("hom", &self.d, t, i)
    }
}

#[derive(Clone)]
pub struct ModHomSub {
    pub name: String,
    pub d: Arc<Module>,
    pub c: Arc<Module>,
    pub h: Hom,
}

impl Subject for ModHomSub {
    fn label(&self) -> String {
        format!("module hom {}", self.name)
    }
    fn tables(&self) -> Vec<Table> {
        hom_tables(&self.h, self.d.n(), self.c.n(), self.c.m())
    }
    fn get(&self, t: &str, i: usize) -> usize {
        hom_get(&self.h, t, i)
    }
    fn set(&mut self, t: &str, i: usize, v: usize) {
        hom_set(&mut self.h, t, i, v)
    }
    fn home(&self, _t: &str) -> &Groupoid {
        &self.c.carrier.base
    }
    fn check(&self) -> picard::Result<CheckReport> {
        validate_mod_hom(&self.d, &self.c, &self.h)
    }
    fn names(&self) -> HashSet<String> {
        all_names(&[&self.d.carrier.base, &self.c.carrier.base, &self.d.ring.add.base])
    }
    fn typing(&self, t: &str, i: usize) -> Option<(String, Vec<String>)> {
        if t == "ftwo" {
            let n = self.d.n();
            let w = vec![
                self.d.ring.add.base.obj_name(i / n).to_string(),
                self.d.carrier.base.obj_name(i % n).to_string(),
            ];
            return Some(("modhom.ftwo_typing".into(), w));
        }
        hom_typing("modhom", &self.d.carrier, t, i)
    }
}

#[derive(Clone)]
pub struct RingHomSub {
    pub name: String,
    pub d: Arc<TwoRing>,
    pub c: Arc<TwoRing>,
    pub h: RingHom,
}

impl Subject for RingHomSub {
    fn label(&self) -> String {
        format!("ring hom {}", self.name)
    }
    fn tables(&self) -> Vec<Table> {
        let (n, mc) = (self.d.n(), self.c.m());
        let mut v = hom_tables(&self.h.hom, n, self.c.n(), mc);
        v.push(tab("fdot", n * n, mc, Kind::Mor));
        v.push(tab("fone", 1, mc, Kind::Mor));
        v
    }
    fn get(&self, t: &str, i: usize) -> usize {
        match t {
            "fdot" => self.h.fdot[i],
            "fone" => self.h.fone,
            _ => hom_get(&self.h.hom, t, i),
        }
    }
    fn set(&mut self, t: &str, i: usize, v: usize) {
        match t {
            "fdot" => self.h.fdot[i] = v,
            "fone" => self.h.fone = v,
            _ => hom_set(&mut self.h.hom, t, i, v),
        }
    }
    fn home(&self, _t: &str) -> &Groupoid {
        &self.c.add.base
    }
    fn check(&self) -> picard::Result<CheckReport> {
        validate_ring_hom(&self.d, &self.c, &self.h)
    }
    fn names(&self) -> HashSet<String> {
        all_names(&[&self.d.add.base, &self.c.add.base])
    }
    fn typing(&self, t: &str, i: usize) -> Option<(String, Vec<String>)> {
        let n = self.d.n();
        let g = &self.d.add.base;
        match t {
            "fdot" => Some(("ringhom.fdot_typing".into(), onames(g, &[i / n, i % n]))),
            "fone" => Some(("ringhom.fone_typing".into(), onames(g, &[self.d.one]))),
            _ => hom_typing("ringhom", &self.d.add, t, i),
        }
    }
}

/// A 2-morphism between homs of some kind; `check` picks the validator.
#[derive(Clone)]
pub struct TwoMorSub<E: Clone> {
    pub name: String,
    pub ends: E,
    pub e: TwoMor,
}

#[derive(Clone)]
pub struct GroupEnds(pub Arc<TwoGroup>, pub Arc<TwoGroup>, pub Hom, pub Hom);
#[derive(Clone)]
pub struct RingEnds(pub Arc<TwoRing>, pub Arc<TwoRing>, pub RingHom, pub RingHom);
#[derive(Clone)]
pub struct ModEnds(pub Arc<Module>, pub Arc<Module>, pub Hom, pub Hom);

pub trait Ends: Clone {
    fn prefix(&self) -> &'static str;
    fn dom(&self) -> &Groupoid;
    fn cod(&self) -> &Groupoid;
    fn extra(&self) -> Vec<&Groupoid> {
        Vec::new()
    }
    fn check(&self, e: &TwoMor) -> picard::Result<CheckReport>;
}

impl Ends for GroupEnds {
    fn prefix(&self) -> &'static str {
        "twomor"
    }
    fn dom(&self) -> &Groupoid {
        &self.0.base
    }
    fn cod(&self) -> &Groupoid {
        &self.1.base
    }
    fn check(&self, e: &TwoMor) -> picard::Result<CheckReport> {
        validate_two_morphism(&self.0, &self.1, &self.2, &self.3, e)
    }
}

impl Ends for RingEnds {
    fn prefix(&self) -> &'static str {
        "ringtwomor"
    }
    fn dom(&self) -> &Groupoid {
        &self.0.add.base
    }
    fn cod(&self) -> &Groupoid {
        &self.1.add.base
    }
    fn check(&self, e: &TwoMor) -> picard::Result<CheckReport> {
        validate_ring_two_morphism(&self.0, &self.1, &self.2, &self.3, e)
    }
}

impl Ends for ModEnds {
    fn prefix(&self) -> &'static str {
        "modtwomor"
    }
    fn dom(&self) -> &Groupoid {
        &self.0.carrier.base
    }
    fn cod(&self) -> &Groupoid {
        &self.1.carrier.base
    }
    fn extra(&self) -> Vec<&Groupoid> {
        vec![&self.0.ring.add.base]
    }
    fn check(&self, e: &TwoMor) -> picard::Result<CheckReport> {
        validate_mod_two_morphism(&self.0, &self.1, &self.2, &self.3, e)
    }
}

impl<E: Ends> Subject for TwoMorSub<E> {
    fn label(&self) -> String {
        format!("{} {}", self.ends.prefix(), self.name)
    }
    fn tables(&self) -> Vec<Table> {
        vec![tab("comp", self.e.comp.len(), self.ends.cod().n_mor(), Kind::Mor)]
    }
    fn get(&self, _t: &str, i: usize) -> usize {
        self.e.comp[i]
    }
    fn set(&mut self, _t: &str, i: usize, v: usize) {
        self.e.comp[i] = v;
    }
    fn home(&self, _t: &str) -> &Groupoid {
        self.ends.cod()
    }
    fn check(&self) -> picard::Result<CheckReport> {
        self.ends.check(&self.e)
    }
    fn names(&self) -> HashSet<String> {
        let mut gs = vec![self.ends.dom(), self.ends.cod()];
        gs.extend(self.ends.extra());
        all_names(&gs)
    }
    fn typing(&self, _t: &str, i: usize) -> Option<(String, Vec<String>)> {
        Some((format!("{}.typing", self.ends.prefix()), onames(self.ends.dom(), &[i])))
    }
}

/// A witness names identifiers of the subject, optionally after one lowercase face label.
pub fn resolves(w: &[String], names: &HashSet<String>) -> bool {
    let label = |x: &String| !names.contains(x) && x.chars().all(|c| c.is_ascii_lowercase() || c == '_');
    let rest = match w.first() {
        Some(x) if label(x) => &w[1..],
        _ => w,
    };
    !rest.is_empty() && rest.iter().all(|x| names.contains(x))
}

/// Tally over every single-entry mutation of a set of subjects.
#[derive(Default, Debug)]
pub struct Tally {
    /// Every family reported on an unmutated subject.
    pub families: BTreeSet<String>,
    /// Families that rejected some mutation with a witness naming only identifiers of the subject.
    pub caught: BTreeSet<String>,
    /// Retyped entries that every family accepted.
    pub false_passes: Vec<String>,
    /// Retyped entries whose typing family was silent or named the wrong entry.
    pub bad_witnesses: Vec<String>,
    /// Subjects whose unmutated form did not pass.
    pub broken_originals: Vec<String>,
    pub mutations: usize,
    pub rejected: usize,
}

impl Tally {
    pub fn run<S: Subject>(&mut self, s: &S) {
        let orig = match s.check() {
            Ok(r) => r,
            Err(e) => {
                self.broken_originals.push(format!("{}: {e}", s.label()));
                return;
            }
        };
        if !orig.all_pass() {
            self.broken_originals.push(s.label());
            return;
        }
        self.families.extend(orig.entries.iter().map(|e| e.axiom.clone()));
        let names = s.names();
        for t in s.tables() {
            for i in 0..t.len {
                let old = s.get(&t.name, i);
                for v in (0..t.bound).filter(|&v| v != old) {
                    let mut m = s.clone();
                    m.set(&t.name, i, v);
                    self.mutations += 1;
                    let retyped = t.kind == Kind::Mor && {
                        let h = s.home(&t.name);
                        (h.src(v), h.tgt(v)) != (h.src(old), h.tgt(old))
                    };
                    let tag = || format!("{} {}[{i}] {old}->{v}", s.label(), t.name);
                    let rep = match m.check() {
                        Ok(r) => r,
                        Err(_) => {
                            self.rejected += 1;
                            continue;
                        }
                    };
                    if rep.all_pass() {
                        if retyped {
                            self.false_passes.push(tag());
                        }
                        continue;
                    }
                    self.rejected += 1;
                    for e in rep.failures() {
                        if resolves(e.witness.as_deref().unwrap_or_default(), &names) {
                            self.caught.insert(e.axiom.clone());
                        }
                    }
                    if retyped {
                        if let Some((fam, want)) = s.typing(&t.name, i) {
                            let got = rep.get(&fam).filter(|e| !e.pass).and_then(|e| e.witness.clone());
                            if got.as_ref() != Some(&want) {
                                self.bad_witnesses.push(format!("{}: {fam} gave {got:?}, want {want:?}", tag()));
                            }
                        }
                    }
                }
            }
        }
    }

    pub fn missed(&self) -> Vec<&String> {
        self.families.difference(&self.caught).collect()
    }

    pub fn ok(&self) -> bool {
        self.missed().is_empty()
            && self.false_passes.is_empty()
            && self.bad_witnesses.is_empty()
            && self.broken_originals.is_empty()
    }
}
