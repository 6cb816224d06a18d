//! Line-oriented text documents for every structure, and reports.
//!
//! ```text
//! version 1
//! kind twogroup
//! object 0
//! mor id_0 : 0 -> 0
//! id 0 = id_0
//! comp id_0 id_0 = id_0
//! ...
//! ```
//!
//! Nested structures sit in `begin <role> <kind>` … `end` blocks. Identifier lists keep their
//! declaration order (it fixes the dense indices); every table is written in index order, so
//! `serialize(parse(t)) == t` for canonical `t`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groupoid::Groupoid;
use crate::report::{CheckReport, Entry};
use crate::rmodule::{validate_mod_hom, validate_mod_two_morphism, validate_module, Module};
use crate::tworing::{validate_two_ring, TwoRing};
use crate::twogroup::{validate_hom, validate_two_group, validate_two_morphism, Hom, TwoGroup, TwoMor};

pub const VERSION: u32 = 1;

/// Endpoint of a hom or 2-morphism document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Carrier {
    Group(Arc<TwoGroup>),
    Module(Arc<Module>),
}

impl Carrier {
    pub fn group(&self) -> &TwoGroup {
        match self {
            Carrier::Group(g) => g,
            Carrier::Module(m) => &m.carrier,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Carrier::Group(_) => "twogroup",
            Carrier::Module(_) => "module",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportDoc {
    /// `(key, value)` in output order.
    pub fields: Vec<(String, String)>,
    pub report: CheckReport,
}

impl ReportDoc {
    pub fn new(report: CheckReport) -> Self {
        ReportDoc { fields: Vec::new(), report }
    }

    /// Values are kept on one line; an empty value is written as `-`.
    pub fn field(mut self, key: &str, value: impl Into<String>) -> Self {
        let v: String = value.into().split_whitespace().collect::<Vec<_>>().join(" ");
        self.fields.push((key.into(), if v.is_empty() { "-".into() } else { v }));
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    TwoGroup(TwoGroup),
    TwoRing(TwoRing),
    Module(Module),
    Hom { dom: Carrier, cod: Carrier, hom: Hom },
    TwoMorphism { dom: Carrier, cod: Carrier, source: Hom, target: Hom, mor: TwoMor },
    Report(ReportDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::TwoGroup(_) => "twogroup",
            Document::TwoRing(_) => "tworing",
            Document::Module(_) => "module",
            Document::Hom { .. } => "hom",
            Document::TwoMorphism { .. } => "twomorphism",
            Document::Report(_) => "report",
        }
    }

    /// Run the validator for this kind. Reports have nothing to validate.
    pub fn validate(&self) -> Result<CheckReport> {
        match self {
            Document::TwoGroup(g) => validate_two_group(g),
            Document::TwoRing(r) => validate_two_ring(r),
            Document::Module(m) => validate_module(m),
            Document::Hom { dom, cod, hom } => match (dom, cod) {
                (Carrier::Module(d), Carrier::Module(c)) => validate_mod_hom(d, c, hom),
                _ => validate_hom(dom.group(), cod.group(), hom),
            },
            Document::TwoMorphism { dom, cod, source, target, mor } => match (dom, cod) {
                (Carrier::Module(d), Carrier::Module(c)) => validate_mod_two_morphism(d, c, source, target, mor),
                _ => validate_two_morphism(dom.group(), cod.group(), source, target, mor),
            },
            Document::Report(_) => Ok(CheckReport::new()),
        }
    }
}

// ---------------------------------------------------------------------------------------------
// serialization

struct Out {
    buf: String,
    depth: usize,
}

impl Out {
    fn line(&mut self, parts: &[&str]) {
        for _ in 0..self.depth {
            self.buf.push_str("  ");
        }
        self.buf.push_str(&parts.join(" "));
        self.buf.push('\n');
    }

    fn block(&mut self, role: &str, kind: &str, body: impl FnOnce(&mut Out)) {
        self.line(&["begin", role, kind]);
        self.depth += 1;
        body(self);
        self.depth -= 1;
        self.line(&["end"]);
    }
}

fn write_groupoid(o: &mut Out, g: &Groupoid) {
    for a in g.objects() {
        o.line(&["object", a]);
    }
    for f in 0..g.n_mor() {
        o.line(&["mor", g.mor_name(f), ":", g.obj_name(g.src(f)), "->", g.obj_name(g.tgt(f))]);
    }
    for a in 0..g.n_obj() {
        o.line(&["id", g.obj_name(a), "=", g.mor_name(g.id(a))]);
    }
    for h in 0..g.n_mor() {
        for f in 0..g.n_mor() {
            if let Some(k) = g.comp(h, f) {
                o.line(&["comp", g.mor_name(h), g.mor_name(f), "=", g.mor_name(k)]);
            }
        }
    }
    for f in 0..g.n_mor() {
        o.line(&["inv", g.mor_name(f), "=", g.mor_name(g.inv(f))]);
    }
}

/// Write `key args.. = value` for every index of a dense table.
fn write_table(o: &mut Out, key: &str, args: &[Ns<'_>], val: Ns<'_>, table: &[usize]) {
    let sizes: Vec<usize> = args.iter().map(Ns::len).collect();
    for (i, &v) in table.iter().enumerate() {
        let mut parts = vec![key];
        let mut rest = i;
        let mut idx = vec![0; args.len()];
        for k in (0..args.len()).rev() {
            idx[k] = rest % sizes[k];
            rest /= sizes[k];
        }
        for (k, ns) in args.iter().enumerate() {
            parts.push(ns.name(idx[k]));
        }
        parts.push("=");
        parts.push(val.name(v));
        o.line(&parts);
    }
}

fn write_two_group(o: &mut Out, t: &TwoGroup) {
    let g = &t.base;
    let (ob, mo) = (Ns::Obj(g), Ns::Mor(g));
    write_groupoid(o, g);
    o.line(&["unit", g.obj_name(t.unit)]);
    write_table(o, "plus", &[ob, ob], ob, &t.plus_obj);
    write_table(o, "plusm", &[mo, mo], mo, &t.plus_mor);
    write_table(o, "assoc", &[ob, ob, ob], mo, &t.assoc);
    write_table(o, "lunit", &[ob], mo, &t.lunit);
    write_table(o, "runit", &[ob], mo, &t.runit);
    write_table(o, "sym", &[ob, ob], mo, &t.sym);
    write_table(o, "dual", &[ob], ob, &t.dual);
    write_table(o, "eta", &[ob], mo, &t.eta);
}

fn write_two_ring(o: &mut Out, r: &TwoRing) {
    o.block("add", "twogroup", |o| write_two_group(o, &r.add));
    let g = &r.add.base;
    let (ob, mo) = (Ns::Obj(g), Ns::Mor(g));
    o.line(&["one", g.obj_name(r.one)]);
    write_table(o, "mul", &[ob, ob], ob, &r.mul_obj);
    write_table(o, "mulm", &[mo, mo], mo, &r.mul_mor);
    write_table(o, "massoc", &[ob, ob, ob], mo, &r.massoc);
    write_table(o, "mlunit", &[ob], mo, &r.mlunit);
    write_table(o, "mrunit", &[ob], mo, &r.mrunit);
    write_table(o, "ldist", &[ob, ob, ob], mo, &r.ldist);
    write_table(o, "rdist", &[ob, ob, ob], mo, &r.rdist);
}

fn write_module(o: &mut Out, m: &Module) {
    o.block("ring", "tworing", |o| write_two_ring(o, &m.ring));
    o.block("carrier", "twogroup", |o| write_two_group(o, &m.carrier));
    let (rg, g) = (&m.ring.add.base, &m.carrier.base);
    let (ro, rm, ob, mo) = (Ns::Obj(rg), Ns::Mor(rg), Ns::Obj(g), Ns::Mor(g));
    write_table(o, "act", &[ro, ob], ob, &m.act_obj);
    write_table(o, "actm", &[rm, mo], mo, &m.act_mor);
    write_table(o, "adist", &[ro, ob, ob], mo, &m.adist);
    write_table(o, "bdist", &[ro, ro, ob], mo, &m.bdist);
    write_table(o, "bassoc", &[ro, ro, ob], mo, &m.bassoc);
    write_table(o, "iunit", &[ob], mo, &m.iunit);
    write_table(o, "zzero", &[ro], mo, &m.zzero);
}

fn write_carrier(o: &mut Out, role: &str, c: &Carrier) {
    o.block(role, c.kind(), |o| match c {
        Carrier::Group(g) => write_two_group(o, g),
        Carrier::Module(m) => write_module(o, m),
    });
}

fn write_maps(o: &mut Out, dom: &Carrier, cod: &Carrier, h: &Hom) {
    let (d, c) = (&dom.group().base, &cod.group().base);
    write_table(o, "omap", &[Ns::Obj(d)], Ns::Obj(c), &h.omap);
    write_table(o, "mmap", &[Ns::Mor(d)], Ns::Mor(c), &h.mmap);
    write_table(o, "fplus", &[Ns::Obj(d), Ns::Obj(d)], Ns::Mor(c), &h.fplus);
    o.line(&["fzero", "=", c.mor_name(h.fzero)]);
    if let Carrier::Module(m) = dom {
        write_table(o, "ftwo", &[Ns::Obj(&m.ring.add.base), Ns::Obj(d)], Ns::Mor(c), &h.ftwo);
    }
}

fn write_report(o: &mut Out, r: &ReportDoc) {
    for (k, v) in &r.fields {
        o.line(&["field", k, v]);
    }
    for e in &r.report.entries {
        match &e.witness {
            None => o.line(&["entry", &e.axiom, "PASS"]),
            Some(w) => {
                let js = serde_json::to_string(w).expect("strings serialize");
                o.line(&["entry", &e.axiom, "FAIL", &js]);
            }
        }
    }
}

pub fn serialize(doc: &Document) -> String {
    let mut o = Out { buf: String::new(), depth: 0 };
    let _ = write!(o.buf, "version {VERSION}\nkind {}\n", doc.kind());
    match doc {
        Document::TwoGroup(t) => write_two_group(&mut o, t),
        Document::TwoRing(r) => write_two_ring(&mut o, r),
        Document::Module(m) => write_module(&mut o, m),
        Document::Hom { dom, cod, hom } => {
            write_carrier(&mut o, "dom", dom);
            write_carrier(&mut o, "cod", cod);
            write_maps(&mut o, dom, cod, hom);
        }
        Document::TwoMorphism { dom, cod, source, target, mor } => {
            write_carrier(&mut o, "dom", dom);
            write_carrier(&mut o, "cod", cod);
            o.block("source", "maps", |o| write_maps(o, dom, cod, source));
            o.block("target", "maps", |o| write_maps(o, dom, cod, target));
            let (d, c) = (&dom.group().base, &cod.group().base);
            write_table(&mut o, "comp", &[Ns::Obj(d)], Ns::Mor(c), &mor.comp);
        }
        Document::Report(r) => write_report(&mut o, r),
    }
    o.buf
}

/// One JSON object per line: a header with the fields, then one line per entry.
pub fn report_json_lines(r: &ReportDoc) -> String {
    let mut head = serde_json::Map::new();
    head.insert("kind".into(), "report".into());
    for (k, v) in &r.fields {
        head.insert(k.clone(), v.clone().into());
    }
    let mut out = serde_json::to_string(&head).expect("map serializes");
    out.push('\n');
    for e in &r.report.entries {
        out.push_str(&serde_json::to_string(e).expect("entry serializes"));
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------------------------
// parsing

#[derive(Debug, Clone, Copy)]
struct Tok<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

fn perr(t: &Tok<'_>, msg: impl Into<String>) -> Error {
    Error::Parse { line: t.line, col: t.col, msg: msg.into() }
}

type Line<'a> = Vec<Tok<'a>>;

struct Block<'a> {
    head: Line<'a>,
    body: Section<'a>,
}

#[derive(Default)]
struct Section<'a> {
    lines: Vec<Line<'a>>,
    blocks: Vec<Block<'a>>,
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let mut toks = Vec::new();
        let mut start = None;
        for (i, ch) in raw.char_indices().chain(std::iter::once((raw.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(s)) => {
                    toks.push(Tok { text: &raw[s..i], line: no + 1, col: raw[..s].chars().count() + 1 });
                    start = None;
                }
                _ => {}
            }
        }
        if toks.first().is_some_and(|t| t.text.starts_with('#')) || toks.is_empty() {
            continue;
        }
        out.push(toks);
    }
    out
}

/// Rest of the line after the first `skip` tokens, verbatim.
fn rest_of_line<'a>(text: &'a str, line: &Line<'a>, skip: usize) -> &'a str {
    let src = text.lines().nth(line[0].line - 1).unwrap_or("");
    let start: usize = src.char_indices().nth(line[skip].col - 1).map(|(i, _)| i).unwrap_or(src.len());
    src[start..].trim_end()
}

fn section<'a>(lines: &[Line<'a>], pos: &mut usize, nested: Option<&Tok<'a>>) -> Result<Section<'a>> {
    let mut sec = Section::default();
    while *pos < lines.len() {
        let l = &lines[*pos];
        *pos += 1;
        match l[0].text {
            "begin" => {
                if l.len() != 3 {
                    return Err(perr(&l[0], "expected `begin <role> <kind>`"));
                }
                let body = section(lines, pos, Some(&l[0]))?;
                sec.blocks.push(Block { head: l.clone(), body });
            }
            "end" => {
                if l.len() != 1 {
                    return Err(perr(&l[1], "unexpected token after `end`"));
                }
                return match nested {
                    Some(_) => Ok(sec),
                    None => Err(perr(&l[0], "`end` without `begin`")),
                };
            }
            _ => sec.lines.push(l.clone()),
        }
    }
    match nested {
        Some(t) => Err(perr(t, "block is never closed")),
        None => Ok(sec),
    }
}

/// Identifier namespace of a table argument or value.
#[derive(Clone, Copy)]
enum Ns<'g> {
    Obj(&'g Groupoid),
    Mor(&'g Groupoid),
}

impl<'g> Ns<'g> {
    fn len(&self) -> usize {
        match self {
            Ns::Obj(g) => g.n_obj(),
            Ns::Mor(g) => g.n_mor(),
        }
    }

    fn name(&self, i: usize) -> &'g str {
        match self {
            Ns::Obj(g) => g.obj_name(i),
            Ns::Mor(g) => g.mor_name(i),
        }
    }

    fn lookup(&self, t: &Tok<'_>) -> Result<usize> {
        let (found, what) = match self {
            Ns::Obj(g) => (g.obj_by_name(t.text), "object"),
            Ns::Mor(g) => (g.mor_by_name(t.text), "morphism"),
        };
        found.ok_or_else(|| Error::Reference(format!("{}:{}: unknown {what} {}", t.line, t.col, t.text)))
    }
}

/// Lines of a section grouped by key; every key must be consumed.
struct Fields<'s, 'a> {
    by_key: HashMap<&'a str, Vec<&'s Line<'a>>>,
    order: Vec<&'s Line<'a>>,
    blocks: &'s [Block<'a>],
    used_blocks: Vec<bool>,
    end: Tok<'a>,
}

impl<'s, 'a> Fields<'s, 'a> {
    fn new(sec: &'s Section<'a>, end: Tok<'a>) -> Self {
        let mut by_key: HashMap<&str, Vec<&Line>> = HashMap::new();
        for l in &sec.lines {
            by_key.entry(l[0].text).or_default().push(l);
        }
        Fields {
            by_key,
            order: sec.lines.iter().collect(),
            blocks: &sec.blocks,
            used_blocks: vec![false; sec.blocks.len()],
            end,
        }
    }

    fn take(&mut self, key: &str) -> Vec<&'s Line<'a>> {
        self.by_key.remove(key).unwrap_or_default()
    }

    fn one(&mut self, key: &str) -> Result<&'s Line<'a>> {
        let ls = self.take(key);
        match ls.as_slice() {
            [l] => Ok(l),
            [] => Err(Error::Reference(format!("missing `{key}` entry"))),
            [_, second, ..] => Err(perr(&second[0], format!("duplicate `{key}` entry"))),
        }
    }

    fn block(&mut self, role: &str) -> Result<(&'s Block<'a>, &'a str)> {
        let i = self
            .blocks
            .iter()
            .position(|b| b.head[1].text == role)
            .ok_or_else(|| perr(&self.end, format!("missing `{role}` block")))?;
        if let Some(j) = self.blocks[i + 1..].iter().position(|b| b.head[1].text == role) {
            return Err(perr(&self.blocks[i + 1 + j].head[1], format!("duplicate `{role}` block")));
        }
        self.used_blocks[i] = true;
        Ok((&self.blocks[i], self.blocks[i].head[2].text))
    }

    /// Error on the first line or block nobody asked for.
    fn finish(self) -> Result<()> {
        if let Some(l) = self.order.iter().find(|l| self.by_key.contains_key(l[0].text)) {
            return Err(perr(&l[0], format!("unknown field `{}`", l[0].text)));
        }
        if let Some(i) = self.used_blocks.iter().position(|u| !u) {
            return Err(perr(&self.blocks[i].head[1], format!("unknown block `{}`", self.blocks[i].head[1].text)));
        }
        Ok(())
    }

    /// Dense table from `key a₁ … aₖ = v` lines.
    fn table(&mut self, key: &str, args: &[Ns<'_>], val: Ns<'_>) -> Result<Vec<usize>> {
        let sizes: Vec<usize> = args.iter().map(Ns::len).collect();
        let total: usize = sizes.iter().product();
        let mut out: Vec<Option<usize>> = vec![None; total];
        for l in self.take(key) {
            let k = args.len();
            if l.len() != k + 3 {
                return Err(perr(&l[0], format!("`{key}` takes {k} arguments then `= value`")));
            }
            if l[k + 1].text != "=" {
                return Err(perr(&l[k + 1], "expected `=`"));
            }
            let mut idx = 0;
            for (j, ns) in args.iter().enumerate() {
                idx = idx * sizes[j] + ns.lookup(&l[j + 1])?;
            }
            if out[idx].is_some() {
                return Err(perr(&l[0], format!("duplicate `{key}` entry")));
            }
            out[idx] = Some(val.lookup(&l[k + 2])?);
        }
        out.into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    let mut rest = i;
                    let mut names = vec![""; args.len()];
                    for j in (0..args.len()).rev() {
                        names[j] = args[j].name(rest % sizes[j]);
                        rest /= sizes[j];
                    }
                    Error::Reference(format!("missing `{key}` entry for {}", names.join(" ")))
                })
            })
            .collect()
    }
}

fn expect_len(l: &Line<'_>, n: usize, shape: &str) -> Result<()> {
    if l.len() != n {
        let at = l.get(n).unwrap_or(&l[l.len() - 1]);
        return Err(perr(at, format!("expected `{shape}`")));
    }
    Ok(())
}

fn parse_groupoid(f: &mut Fields<'_, '_>) -> Result<Groupoid> {
    let mut objects: Vec<String> = Vec::new();
    let mut obj_index: HashMap<&str, usize> = HashMap::new();
    for l in f.take("object") {
        expect_len(l, 2, "object <name>")?;
        if obj_index.insert(l[1].text, objects.len()).is_some() {
            return Err(perr(&l[1], format!("duplicate object {}", l[1].text)));
        }
        objects.push(l[1].text.to_string());
    }
    let obj = |t: &Tok<'_>| {
        obj_index
            .get(t.text)
            .copied()
            .ok_or_else(|| Error::Reference(format!("{}:{}: unknown object {}", t.line, t.col, t.text)))
    };
    let mut decls = Vec::new();
    let mut mor_index: HashMap<&str, usize> = HashMap::new();
    for l in f.take("mor") {
        expect_len(l, 6, "mor <name> : <src> -> <tgt>")?;
        if l[2].text != ":" {
            return Err(perr(&l[2], "expected `:`"));
        }
        if l[4].text != "->" {
            return Err(perr(&l[4], "expected `->`"));
        }
        if mor_index.insert(l[1].text, decls.len()).is_some() {
            return Err(perr(&l[1], format!("duplicate morphism {}", l[1].text)));
        }
        decls.push((l[1].text.to_string(), obj(&l[3])?, obj(&l[5])?));
    }
    let mor = |t: &Tok<'_>| {
        mor_index
            .get(t.text)
            .copied()
            .ok_or_else(|| Error::Reference(format!("{}:{}: unknown morphism {}", t.line, t.col, t.text)))
    };
    let mut id_of = vec![None; objects.len()];
    for l in f.take("id") {
        expect_len(l, 4, "id <object> = <morphism>")?;
        let a = obj(&l[1])?;
        if id_of[a].replace(mor(&l[3])?).is_some() {
            return Err(perr(&l[0], "duplicate `id` entry"));
        }
    }
    let id_of = id_of
        .into_iter()
        .enumerate()
        .map(|(a, v)| v.ok_or_else(|| Error::Reference(format!("missing `id` entry for {}", objects[a]))))
        .collect::<Result<Vec<_>>>()?;
    let mut comp = HashMap::new();
    for l in f.take("comp") {
        expect_len(l, 5, "comp <g> <f> = <h>")?;
        if comp.insert((mor(&l[1])?, mor(&l[2])?), mor(&l[4])?).is_some() {
            return Err(perr(&l[0], "duplicate `comp` entry"));
        }
    }
    let mut inv = vec![None; decls.len()];
    for l in f.take("inv") {
        expect_len(l, 4, "inv <f> = <g>")?;
        if inv[mor(&l[1])?].replace(mor(&l[3])?).is_some() {
            return Err(perr(&l[0], "duplicate `inv` entry"));
        }
    }
    let inv = inv
        .into_iter()
        .enumerate()
        .map(|(k, v)| v.ok_or_else(|| Error::Reference(format!("missing `inv` entry for {}", decls[k].0))))
        .collect::<Result<Vec<_>>>()?;
    for (&(g, h), _) in &comp {
        if decls[g].1 != decls[h].2 {
            return Err(Error::Reference(format!("comp entry for non-composable {} {}", decls[g].0, decls[h].0)));
        }
    }
    Groupoid::from_tables(objects, decls, id_of, &comp, inv)
}

fn parse_two_group(f: &mut Fields<'_, '_>) -> Result<TwoGroup> {
    let base = parse_groupoid(f)?;
    let (ob, mo) = (Ns::Obj(&base), Ns::Mor(&base));
    let u = f.one("unit")?;
    expect_len(u, 2, "unit <object>")?;
    let unit = ob.lookup(&u[1])?;
    let plus_obj = f.table("plus", &[ob, ob], ob)?;
    let plus_mor = f.table("plusm", &[mo, mo], mo)?;
    let assoc = f.table("assoc", &[ob, ob, ob], mo)?;
    let lunit = f.table("lunit", &[ob], mo)?;
    let runit = f.table("runit", &[ob], mo)?;
    let sym = f.table("sym", &[ob, ob], mo)?;
    let dual = f.table("dual", &[ob], ob)?;
    let eta = f.table("eta", &[ob], mo)?;
    Ok(TwoGroup { base, plus_obj, plus_mor, unit, assoc, lunit, runit, sym, dual, eta })
}

fn sub<'s, 'a>(f: &mut Fields<'s, 'a>, role: &str, kind: &str) -> Result<Fields<'s, 'a>> {
    let (b, k) = f.block(role)?;
    if k != kind {
        return Err(perr(&b.head[2], format!("`{role}` must be a {kind}")));
    }
    Ok(Fields::new(&b.body, b.head[0]))
}

fn parse_two_ring(f: &mut Fields<'_, '_>) -> Result<TwoRing> {
    let mut af = sub(f, "add", "twogroup")?;
    let add = parse_two_group(&mut af)?;
    af.finish()?;
    let g = &add.base;
    let (ob, mo) = (Ns::Obj(g), Ns::Mor(g));
    let l = f.one("one")?;
    expect_len(l, 2, "one <object>")?;
    let one = ob.lookup(&l[1])?;
    let mul_obj = f.table("mul", &[ob, ob], ob)?;
    let mul_mor = f.table("mulm", &[mo, mo], mo)?;
    let massoc = f.table("massoc", &[ob, ob, ob], mo)?;
    let mlunit = f.table("mlunit", &[ob], mo)?;
    let mrunit = f.table("mrunit", &[ob], mo)?;
    let ldist = f.table("ldist", &[ob, ob, ob], mo)?;
    let rdist = f.table("rdist", &[ob, ob, ob], mo)?;
    Ok(TwoRing { add, mul_obj, mul_mor, one, massoc, mlunit, mrunit, ldist, rdist })
}

fn parse_module(f: &mut Fields<'_, '_>) -> Result<Module> {
    let mut rf = sub(f, "ring", "tworing")?;
    let ring = Arc::new(parse_two_ring(&mut rf)?);
    rf.finish()?;
    let mut cf = sub(f, "carrier", "twogroup")?;
    let carrier = parse_two_group(&mut cf)?;
    cf.finish()?;
    let (rg, g) = (&ring.add.base, &carrier.base);
    let (ro, rm, ob, mo) = (Ns::Obj(rg), Ns::Mor(rg), Ns::Obj(g), Ns::Mor(g));
    let act_obj = f.table("act", &[ro, ob], ob)?;
    let act_mor = f.table("actm", &[rm, mo], mo)?;
    let adist = f.table("adist", &[ro, ob, ob], mo)?;
    let bdist = f.table("bdist", &[ro, ro, ob], mo)?;
    let bassoc = f.table("bassoc", &[ro, ro, ob], mo)?;
    let iunit = f.table("iunit", &[ob], mo)?;
    let zzero = f.table("zzero", &[ro], mo)?;
    Ok(Module { ring, carrier, act_obj, act_mor, adist, bdist, bassoc, iunit, zzero })
}

fn parse_carrier(f: &mut Fields<'_, '_>, role: &str) -> Result<Carrier> {
    let (b, kind) = f.block(role)?;
    let mut bf = Fields::new(&b.body, b.head[0]);
    let c = match kind {
        "twogroup" => Carrier::Group(Arc::new(parse_two_group(&mut bf)?)),
        "module" => Carrier::Module(Arc::new(parse_module(&mut bf)?)),
        _ => return Err(perr(&b.head[2], format!("`{role}` must be a twogroup or a module"))),
    };
    bf.finish()?;
    Ok(c)
}

fn parse_maps(f: &mut Fields<'_, '_>, dom: &Carrier, cod: &Carrier) -> Result<Hom> {
    let (d, c) = (&dom.group().base, &cod.group().base);
    let omap = f.table("omap", &[Ns::Obj(d)], Ns::Obj(c))?;
    let mmap = f.table("mmap", &[Ns::Mor(d)], Ns::Mor(c))?;
    let fplus = f.table("fplus", &[Ns::Obj(d), Ns::Obj(d)], Ns::Mor(c))?;
    let l = f.one("fzero")?;
    expect_len(l, 3, "fzero = <morphism>")?;
    if l[1].text != "=" {
        return Err(perr(&l[1], "expected `=`"));
    }
    let fzero = Ns::Mor(c).lookup(&l[2])?;
    let ftwo = match dom {
        Carrier::Module(m) => f.table("ftwo", &[Ns::Obj(&m.ring.add.base), Ns::Obj(d)], Ns::Mor(c))?,
        Carrier::Group(_) => Vec::new(),
    };
    Ok(Hom { omap, mmap, fplus, fzero, ftwo })
}

fn parse_endpoints(f: &mut Fields<'_, '_>) -> Result<(Carrier, Carrier)> {
    let dom = parse_carrier(f, "dom")?;
    let cod = parse_carrier(f, "cod")?;
    if dom.kind() != cod.kind() {
        let (b, _) = f.block("cod")?;
        return Err(perr(&b.head[2], "`dom` and `cod` must have the same kind"));
    }
    Ok((dom, cod))
}

fn parse_report(text: &str, f: &mut Fields<'_, '_>) -> Result<ReportDoc> {
    let mut fields = Vec::new();
    for l in f.take("field") {
        if l.len() < 3 {
            return Err(perr(&l[0], "expected `field <key> <value>`"));
        }
        fields.push((l[1].text.to_string(), rest_of_line(text, l, 2).to_string()));
    }
    let mut report = CheckReport::new();
    for l in f.take("entry") {
        if l.len() < 3 {
            return Err(perr(&l[0], "expected `entry <axiom> PASS|FAIL`"));
        }
        match l[2].text {
            "PASS" => {
                expect_len(l, 3, "entry <axiom> PASS")?;
                report.entries.push(Entry { axiom: l[1].text.into(), pass: true, witness: None });
            }
            "FAIL" => {
                if l.len() < 4 {
                    return Err(perr(&l[2], "a failing entry needs a witness"));
                }
                let w: Vec<String> = serde_json::from_str(rest_of_line(text, l, 3))
                    .map_err(|e| perr(&l[3], format!("witness is not a JSON string list: {e}")))?;
                report.entries.push(Entry { axiom: l[1].text.into(), pass: false, witness: Some(w) });
            }
            _ => return Err(perr(&l[2], "expected PASS or FAIL")),
        }
    }
    Ok(ReportDoc { fields, report })
}

pub fn parse(text: &str) -> Result<Document> {
    let lines = tokenize(text);
    let start = Tok { text: "", line: 1, col: 1 };
    let head = |i: usize, key: &str| -> Result<&Line<'_>> {
        let l = lines.get(i).ok_or_else(|| perr(&start, format!("missing `{key}` line")))?;
        if l[0].text != key || l.len() != 2 {
            return Err(perr(&l[0], format!("expected `{key} <value>`")));
        }
        Ok(l)
    };
    let v = head(0, "version")?;
    let version: u32 = v[1].text.parse().map_err(|_| perr(&v[1], "version is not an integer"))?;
    if version != VERSION {
        return Err(Error::VersionUnsupported(version));
    }
    let k = head(1, "kind")?;
    let mut pos = 2;
    let sec = section(&lines, &mut pos, None)?;
    let end = lines.last().map(|l| l[0]).unwrap_or(start);
    let mut f = Fields::new(&sec, end);
    let doc = match k[1].text {
        "twogroup" => Document::TwoGroup(parse_two_group(&mut f)?),
        "tworing" => Document::TwoRing(parse_two_ring(&mut f)?),
        "module" => Document::Module(parse_module(&mut f)?),
        "hom" => {
            let (dom, cod) = parse_endpoints(&mut f)?;
            let hom = parse_maps(&mut f, &dom, &cod)?;
            Document::Hom { dom, cod, hom }
        }
        "twomorphism" => {
            let (dom, cod) = parse_endpoints(&mut f)?;
            let mut sf = sub(&mut f, "source", "maps")?;
            let source = parse_maps(&mut sf, &dom, &cod)?;
            sf.finish()?;
            let mut tf = sub(&mut f, "target", "maps")?;
            let target = parse_maps(&mut tf, &dom, &cod)?;
            tf.finish()?;
            let comp = f.table("comp", &[Ns::Obj(&dom.group().base)], Ns::Mor(&cod.group().base))?;
            Document::TwoMorphism { dom, cod, source, target, mor: TwoMor { comp } }
        }
        "report" => Document::Report(parse_report(text, &mut f)?),
        _ => return Err(perr(&k[1], format!("unknown kind `{}`", k[1].text))),
    };
    f.finish()?;
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{hom, homs, module, modules, rings, two_groups};
    use crate::rmodule::zero_hom;

    fn round_trip(doc: &Document) {
        let text = serialize(doc);
        let back = parse(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
        assert_eq!(&back, doc);
        assert_eq!(serialize(&back), text);
    }

    #[test]
    fn catalog_round_trips() {
        for (_, g) in two_groups() {
            round_trip(&Document::TwoGroup(g));
        }
        for (_, r) in rings() {
            round_trip(&Document::TwoRing((*r).clone()));
        }
        for (_, m) in modules() {
            round_trip(&Document::Module((*m).clone()));
        }
        for h in homs() {
            round_trip(&Document::Hom { dom: Carrier::Module(h.dom), cod: Carrier::Module(h.cod), hom: h.hom });
        }
    }

    #[test]
    fn two_morphism_and_report_round_trip() {
        let d2 = module("D2/Z2").unwrap();
        let b2 = module("B2/Z2").unwrap();
        let z = zero_hom(&d2, &b2).unwrap();
        let doc = Document::TwoMorphism {
            dom: Carrier::Module(d2),
            cod: Carrier::Module(b2),
            source: z.clone(),
            target: z,
            mor: TwoMor { comp: vec![0, 1] },
        };
        round_trip(&doc);
        assert!(doc.validate().unwrap().all_pass());
        let mut rep = CheckReport::new();
        rep.pass("a.b");
        rep.fail("c", vec!["x y".into(), "z\"".into()]);
        round_trip(&Document::Report(ReportDoc::new(rep).field("command", "validate some file")));
    }

    #[test]
    fn group_hom_round_trips() {
        let (d, c) = (two_groups().remove(1).1, two_groups().remove(3).1);
        let z = Hom::zero(&d, &c);
        round_trip(&Document::Hom { dom: Carrier::Group(Arc::new(d)), cod: Carrier::Group(Arc::new(c)), hom: z });
    }

    fn d2_text() -> String {
        serialize(&Document::TwoGroup(two_groups().remove(1).1))
    }

    #[test]
    fn missing_comp_is_a_reference_error() {
        let t = d2_text().replacen("comp id_0 id_0 = id_0\n", "", 1);
        assert_eq!(parse(&t).unwrap_err().kind(), "REFERENCE_ERROR");
    }

    #[test]
    fn duplicate_morphism_is_a_parse_error() {
        let t = d2_text().replacen("mor id_1 : 1 -> 1", "mor id_0 : 1 -> 1", 1);
        let err = parse(&t).unwrap_err();
        assert_eq!(err.kind(), "PARSE_ERROR");
        assert_eq!(err, Error::Parse { line: 6, col: 5, msg: "duplicate morphism id_0".into() });
    }

    #[test]
    fn unknown_field_and_version() {
        let t = d2_text().replacen("unit 0", "unit 0\ncolour blue", 1);
        assert_eq!(parse(&t).unwrap_err().kind(), "PARSE_ERROR");
        let t = d2_text().replacen("version 1", "version 7", 1);
        assert_eq!(parse(&t).unwrap_err(), Error::VersionUnsupported(7));
        assert_eq!(parse("kind twogroup\n").unwrap_err().kind(), "PARSE_ERROR");
    }

    #[test]
    fn comments_and_indentation_are_ignored() {
        let t = d2_text().replace("\nobject", "\n   # note\n   object");
        assert_eq!(parse(&t).unwrap(), parse(&d2_text()).unwrap());
    }

    #[test]
    fn mutated_hom_fails_validation() {
        let h = hom("mod2_D4_D2").unwrap();
        let text = serialize(&Document::Hom { dom: Carrier::Module(h.dom), cod: Carrier::Module(h.cod), hom: h.hom });
        let t = text.replacen("omap 1 = 1", "omap 1 = 0", 1);
        let rep = parse(&t).unwrap().validate().unwrap();
        assert!(!rep.all_pass());
    }

    #[test]
    fn json_lines_report() {
        let mut rep = CheckReport::new();
        rep.pass("x");
        let s = report_json_lines(&ReportDoc::new(rep).field("command", "validate"));
        assert_eq!(s, "{\"command\":\"validate\",\"kind\":\"report\"}\n{\"axiom\":\"x\",\"pass\":true,\"witness\":null}\n");
    }
}
