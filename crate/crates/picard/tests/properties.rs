mod common;

use std::sync::Arc;

use common::mutation::{Kind, ModuleSub, Subject};
use common::oracle;
use picard::catalog;
use picard::constructions::{cokernel, copip, factorize, factorize_pl, kernel, pip, puppe_check, ModHom};
use picard::equivalence::{find_equivalence, invariants_fingerprint, verify};
use picard::groupoid::{product, quotient_morphisms, validate_groupoid, Groupoid};
use picard::io::{parse, serialize, Document};
use picard::rmodule::{hom_two_group, validate_mod_two_morphism, validate_module, zero_hom, Module};
use picard::search::{all_homs, all_two_morphisms, Endpoints, SearchBudget};
use picard::tworing::validate_two_ring;
use picard::twogroup::{validate_two_group, vcomp, Hom, TwoMor};
use proptest::prelude::*;
use proptest::sample::Index;

fn small_modules() -> Vec<Arc<Module>> {
    catalog::modules().into_iter().map(|m| m.1).filter(|m| m.m() <= 4).collect()
}

fn pairs(mods: &[Arc<Module>]) -> Vec<(Arc<Module>, Arc<Module>)> {
    let mut out = Vec::new();
    for a in mods {
        for b in mods.iter().filter(|b| b.ring == a.ring) {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

fn homs(d: &Module, c: &Module) -> Vec<Hom> {
    all_homs(Endpoints::Modules(d, c), &mut SearchBudget::default().ticker()).unwrap()
}

/// A hom between small catalog modules, chosen by two indices.
fn pick_hom(p: Index, h: Index) -> ModHom {
    let ps = pairs(&small_modules());
    let (d, c) = ps[p.index(ps.len())].clone();
    let hs = homs(&d, &c);
    let f = hs[h.index(hs.len())].clone();
    ModHom::new(d, c, f)
}

fn groupoids() -> Vec<Groupoid> {
    catalog::two_groups().into_iter().map(|g| g.1.base).collect()
}

fn cases(n: u32) -> ProptestConfig {
    ProptestConfig { cases: n, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(cases(24))]

    #[test]
    fn constructions_of_random_homs_validate_and_match_counts(p in any::<Index>(), h in any::<Index>()) {
        let f = pick_hom(p, h);
        let (a, hm, b) = (&*f.dom, &f.hom, &*f.cod);
        let k = kernel(&f).unwrap();
        prop_assert!(validate_module(&k.ker).unwrap().all_pass());
        prop_assert_eq!(k.ker.n(), oracle::kernel_pairs(a, hm, b));
        if a.m() == a.n() && b.m() == b.n() {
            let killed = (0..a.n()).filter(|&x| hm.omap[x] == b.carrier.unit).count();
            prop_assert_eq!(k.ker.n(), killed);
        }
        let c = cokernel(&f).unwrap();
        prop_assert!(validate_module(&c.coker).unwrap().all_pass());
        let p = pip(&f).unwrap();
        prop_assert!(validate_module(&p.pip).unwrap().all_pass());
        prop_assert_eq!(p.pip.n(), oracle::killed_automorphisms(a, hm, b));
        let cp = copip(&f).unwrap();
        prop_assert!(validate_module(&cp.copip).unwrap().all_pass());
        prop_assert_eq!(cp.copip.m(), oracle::object_classes_mod_image(a, hm, b));
    }

    #[test]
    fn random_homs_factor_exactly(p in any::<Index>(), h in any::<Index>()) {
        let f = pick_hom(p, h);
        let pl = factorize_pl(&f).unwrap();
        let fl = pl.flags;
        prop_assert!(pl.exact);
        prop_assert!(fl.e_surjective && fl.omega_equivalence && fl.m_full && fl.m_faithful, "{:?}", fl);
        let fz = factorize(&f).unwrap();
        let fl = fz.flags;
        prop_assert!(fz.exact);
        prop_assert!(fl.e_surjective && fl.e_full && fl.omega_equivalence && fl.m_faithful, "{:?}", fl);
    }

    #[test]
    fn random_homs_pass_the_four_comparisons(p in any::<Index>(), h in any::<Index>()) {
        let f = pick_hom(p, h);
        let rep = puppe_check(&f).unwrap();
        prop_assert_eq!(rep.entries.len(), 4);
        prop_assert!(rep.all_pass(), "{:?}", rep.failures().collect::<Vec<_>>());
    }

    #[test]
    fn retyped_module_entries_are_rejected(m in any::<Index>(), t in any::<Index>(), i in any::<Index>(), v in any::<Index>()) {
        let mods = small_modules();
        let s = ModuleSub("m".into(), (*mods[m.index(mods.len())]).clone());
        let tables: Vec<_> = s.tables().into_iter().filter(|t| t.kind == Kind::Mor && t.len > 0).collect();
        let tb = &tables[t.index(tables.len())];
        let i = i.index(tb.len);
        let old = s.get(&tb.name, i);
        let g = s.home(&tb.name);
        let retyped: Vec<usize> =
            (0..tb.bound).filter(|&x| (g.src(x), g.tgt(x)) != (g.src(old), g.tgt(old))).collect();
        prop_assume!(!retyped.is_empty());
        let mut bad = s.clone();
        bad.set(&tb.name, i, retyped[v.index(retyped.len())]);
        prop_assert!(!bad.check().unwrap().all_pass());
    }

    #[test]
    fn quotient_projection_is_a_full_surjective_functor(rel in prop::collection::vec((any::<Index>(), any::<Index>()), 0..4)) {
        let g = product(&groupoids()[1].clone(), &groupoids()[7].clone());
        let m = g.n_mor();
        let rel: Vec<(usize, usize)> = rel
            .into_iter()
            .map(|(a, b)| (a.index(m), b.index(m)))
            .filter(|&(a, b)| g.src(a) == g.src(b) && g.tgt(a) == g.tgt(b))
            .collect();
        let q = quotient_morphisms(&g, &rel).unwrap();
        let (qg, pr) = (&q.groupoid, &q.projection);
        prop_assert!(validate_groupoid(qg).all_pass());
        prop_assert!((0..qg.n_mor()).all(|k| pr.mmap.contains(&k)));
        prop_assert!(rel.iter().all(|&(a, b)| pr.mmap[a] == pr.mmap[b]));
        for (x, y) in g.composable_pairs() {
            prop_assert_eq!(qg.comp(pr.mmap[x], pr.mmap[y]), Some(pr.mmap[g.comp(x, y).unwrap()]));
        }
    }

    #[test]
    fn product_is_symmetric(i in any::<Index>(), j in any::<Index>()) {
        let gs = groupoids();
        let (g, h) = (&gs[i.index(gs.len())], &gs[j.index(gs.len())]);
        let (gh, hg) = (product(g, h), product(h, g));
        prop_assert!(validate_groupoid(&gh).all_pass());
        let (gm, hm) = (g.n_mor(), h.n_mor());
        let swap = |f: usize| (f % hm) * gm + f / hm;
        let swap_obj = |o: usize| (o % h.n_obj()) * g.n_obj() + o / h.n_obj();
        for f in 0..gh.n_mor() {
            prop_assert_eq!(hg.src(swap(f)), swap_obj(gh.src(f)));
            prop_assert_eq!(hg.tgt(swap(f)), swap_obj(gh.tgt(f)));
        }
        for (x, y) in gh.composable_pairs() {
            prop_assert_eq!(hg.comp(swap(x), swap(y)), Some(swap(gh.comp(x, y).unwrap())));
        }
    }

    #[test]
    fn interchange_is_path_independent(t in any::<Index>(), xs in prop::array::uniform4(any::<Index>())) {
        let tg = catalog::two_groups();
        let g = &tg[t.index(tg.len())].1;
        let [a, b, c, d] = xs.map(|x| x.index(g.n()));
        prop_assert_eq!(g.interchange_opt(a, b, c, d), g.interchange_alt(a, b, c, d));
    }

    #[test]
    fn two_morphisms_are_invertible(p in any::<Index>(), f in any::<Index>(), g in any::<Index>(), e in any::<Index>()) {
        let ps = pairs(&small_modules());
        let (d, c) = ps[p.index(ps.len())].clone();
        let hs = homs(&d, &c);
        let (f, g) = (&hs[f.index(hs.len())], &hs[g.index(hs.len())]);
        let es = all_two_morphisms(Endpoints::Modules(&d, &c), f, g, &mut SearchBudget::default().ticker()).unwrap();
        prop_assume!(!es.is_empty());
        let al = &es[e.index(es.len())];
        let inv = al.inverse(&c.carrier);
        prop_assert!(validate_mod_two_morphism(&d, &c, g, f, &inv).unwrap().all_pass());
        prop_assert_eq!(vcomp(&c.carrier, al, &inv).unwrap(), TwoMor::identity(&c.carrier, f));
        prop_assert_eq!(vcomp(&c.carrier, &inv, al).unwrap(), TwoMor::identity(&c.carrier, g));
    }

    #[test]
    fn hom_two_groups_validate_and_are_pointed(p in any::<Index>()) {
        let ps = pairs(&small_modules());
        let (d, c) = ps[p.index(ps.len())].clone();
        let hg = hom_two_group(&d, &c, &SearchBudget::default());
        prop_assume!(!matches!(&hg, Err(e) if e.kind() == "BUDGET_EXCEEDED"));
        let hg = hg.unwrap();
        prop_assert!(validate_two_group(&hg.group).unwrap().all_pass());
        let z = zero_hom(&d, &c).unwrap();
        prop_assert_eq!(hg.hom_index(&z), Some(hg.group.unit));
    }

    #[test]
    fn equivalence_search_is_sound(i in any::<Index>(), j in any::<Index>()) {
        let mods: Vec<Arc<Module>> = catalog::modules().into_iter().map(|m| m.1).collect();
        let (m, n) = (&mods[i.index(mods.len())], &mods[j.index(mods.len())]);
        prop_assume!(m.ring == n.ring);
        let found = find_equivalence(m, n, &SearchBudget::default()).unwrap();
        if let Some(w) = &found {
            prop_assert!(verify(m, n, w).unwrap());
        }
        if invariants_fingerprint(&m.carrier) != invariants_fingerprint(&n.carrier) {
            prop_assert!(found.is_none());
        }
        prop_assert!(find_equivalence(m, m, &SearchBudget::default()).unwrap().is_some());
    }

    #[test]
    fn constructed_documents_round_trip(p in any::<Index>(), h in any::<Index>()) {
        let f = pick_hom(p, h);
        for m in [kernel(&f).unwrap().ker, cokernel(&f).unwrap().coker, pip(&f).unwrap().pip, copip(&f).unwrap().copip] {
            let doc = Document::Module((*m).clone());
            let text = serialize(&doc);
            let back = parse(&text).unwrap();
            prop_assert_eq!(serialize(&back), text);
            prop_assert_eq!(back, doc);
        }
    }
}

proptest! {
    #![proptest_config(cases(8))]

    #[test]
    fn equivalent_modules_are_found_after_relabelling(i in any::<Index>()) {
        // a module and its kernel under the zero hom into the trivial module are equivalent
        let mods: Vec<Arc<Module>> = catalog::modules().into_iter().map(|m| m.1).collect();
        let m = mods[i.index(mods.len())].clone();
        let zero = catalog::module(&format!("D1/Z{}", m.ring.n())).unwrap();
        let f = ModHom::new(m.clone(), zero.clone(), zero_hom(&m, &zero).unwrap());
        let k = kernel(&f).unwrap();
        prop_assert!(find_equivalence(&k.ker, &m, &SearchBudget::default()).unwrap().is_some());
    }
}

#[test]
fn catalog_two_groups_are_strict() {
    for (name, g) in catalog::two_groups() {
        let is_id = |f: usize| g.base.src(f) == g.base.tgt(f) && g.id(g.base.src(f)) == f;
        for table in [&g.assoc, &g.lunit, &g.runit] {
            assert!(table.iter().all(|&f| is_id(f)), "{name}");
        }
    }
}

#[test]
fn catalog_rings_are_discrete_and_layered() {
    for (name, r) in catalog::rings() {
        assert_eq!(r.m(), r.n(), "{name}");
        let rep = validate_two_ring(&r).unwrap();
        assert!(rep.all_pass(), "{name}");
        let layered: Vec<_> = rep.entries.iter().filter(|e| e.axiom.starts_with("ring.twogroup.")).collect();
        assert_eq!(layered.len(), validate_two_group(&r.add).unwrap().entries.len(), "{name}");
    }
}
