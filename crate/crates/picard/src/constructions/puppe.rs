use std::sync::Arc;

use super::{cokernel, cokernel_factor, copip, coroot, factorize, factorize_pl, kernel, kernel_factor, pip, root, ModHom};
use crate::equivalence::{find_equivalence_stats, is_essentially_surjective, is_faithful, is_full};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::rmodule::{strict_hom, validate_mod_hom, Module};
use crate::search::SearchBudget;
use crate::twogroup::{HomData, Hom, TwoMor};

/// Why a comparison hom is not an equivalence, or `None` when it is one.
fn comparison_defect(d: &Module, c: &Module, h: &Hom) -> Result<Option<Vec<String>>> {
    let rep = validate_mod_hom(d, c, h)?;
    if let Some(e) = rep.failures().next() {
        return Ok(Some(vec!["comparison".into(), e.axiom.clone()]));
    }
    let (dg, cg) = (&d.carrier.base, &c.carrier.base);
    for (what, v) in [
        ("not faithful", is_faithful(dg, cg, h)),
        ("not full", is_full(dg, cg, h)),
        ("not essentially surjective", is_essentially_surjective(dg, cg, h)),
    ] {
        if let Some(w) = v.witness {
            let mut out = vec!["comparison".to_string(), what.to_string()];
            out.extend(w);
            return Ok(Some(out));
        }
    }
    Ok(None)
}

fn entry(
    rep: &mut CheckReport,
    axiom: &str,
    lhs: &Module,
    rhs: &Module,
    comparison: Result<(Hom, bool)>,
    budget: &SearchBudget,
) -> Result<()> {
    let (found, nodes) = find_equivalence_stats(lhs, rhs, budget)?;
    if found.is_none() {
        rep.fail(axiom, vec!["EQUIV_NOT_FOUND".into(), format!("nodes={nodes}")]);
        return Ok(());
    }
    let (h, forward) = match comparison {
        Ok(x) => x,
        Err(e @ Error::BudgetExceeded(_)) => return Err(e),
        Err(e) => {
            rep.fail(axiom, vec!["comparison".into(), e.to_string()]);
            return Ok(());
        }
    };
    let defect = if forward { comparison_defect(lhs, rhs, &h)? } else { comparison_defect(rhs, lhs, &h)? };
    rep.record(axiom, defect);
    Ok(())
}

pub fn puppe_check(f: &ModHom) -> Result<CheckReport> {
    puppe_check_with(f, &SearchBudget::default())
}

/// The four comparisons between constructed modules and images of `F`, each certified by an
/// equivalence search and by an explicit comparison hom.
pub fn puppe_check_with(f: &ModHom, budget: &SearchBudget) -> Result<CheckReport> {
    f.require_valid()?;
    let (a, b, h) = (&f.dom, &f.cod, &f.hom);
    let (ac, bc) = (&a.carrier, &b.carrier);
    let mut rep = CheckReport::new();
    let pl = factorize_pl(f)?;
    let fz = factorize(f)?;

    // Coker(e_F) ≃ Im¹_pl, compared by Φ: Coker(e_F) → Im¹_pl induced by Ê.
    let k = kernel(f)?;
    let ef = ModHom::new(k.ker.clone(), a.clone(), k.e.clone());
    let c = cokernel(&ef)?;
    let phi = (|| {
        let comp = k
            .pairs
            .iter()
            .map(|&(x, ak)| {
                pl.im1_pl_morphism(x, ac.unit, bc.seq(&[ak, bc.inv(h.z())]))
                    .ok_or_else(|| Error::MalformedTable("no Ê∘e_F component".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let fac = cokernel_factor(&c, &pl.im1, &pl.e, &TwoMor { comp })?;
        Ok((fac.g_prime, true))
    })();
    entry(&mut rep, "puppe.coker_of_kernel", &c.coker, &pl.im1, phi, budget)?;

    // Root(σ) ≃ Im²_pl for the copip σ, compared by (A, φ, B) ↦ B.
    let cp = copip(f)?;
    let r = root(b, &cp.copip, &cp.sigma)?;
    let t2 = &pl.im2;
    let phi = (|| {
        let miss = || Error::MalformedTable("triple outside the root".into());
        let omap = t2.triples.iter().map(|t| r.object(t.2).ok_or_else(miss)).collect::<Result<Vec<_>>>()?;
        let mmap = t2
            .lift
            .mors
            .iter()
            .map(|&(s, t, g)| r.morphism(omap[s], omap[t], Some(g)).ok_or_else(miss))
            .collect::<Result<Vec<_>>>()?;
        Ok((strict_hom(&t2.module, &r.root, omap, mmap), false))
    })();
    entry(&mut rep, "puppe.root_of_copip", &r.root, &t2.module, phi, budget)?;

    // Ker(p_F) ≃ Im², compared by Θ: Im² → Ker(p_F) induced by M.
    let cf = cokernel(f)?;
    let pf = ModHom::new(b.clone(), cf.coker.clone(), cf.p.clone());
    let kp = kernel(&pf)?;
    let theta = (|| {
        let comp = fz
            .im2
            .triples
            .iter()
            .map(|&(x, p, _)| {
                let raw = bc.seq(&[bc.inv(p), bc.inv(bc.l(h.o(x)))]);
                cf.class_of(bc.unit, raw, x).ok_or_else(|| Error::MalformedTable("no p_F∘M component".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let fac = kernel_factor(&kp, &fz.im2.module, &fz.m, &TwoMor { comp })?;
        Ok((fac.g_prime, false))
    })();
    entry(&mut rep, "puppe.kernel_of_cokernel", &kp.ker, &fz.im2.module, theta, budget)?;

    // Coroot(σ) ≃ Im¹ for the pip σ; both are quotients of A, compared on representatives.
    let pp = pip(f)?;
    let cr = coroot(&pp.pip, a, &pp.sigma)?;
    let theta = (|| {
        let proj = &fz.quotient.as_ref().ok_or_else(|| Error::MalformedTable("Im¹ is not a quotient".into()))?.projection;
        let mmap = cr.quotient.rep.iter().map(|&g| proj.mmap[g]).collect();
        Ok((strict_hom(&cr.coroot, &fz.im1, (0..a.n()).collect(), mmap), true))
    })();
    entry(&mut rep, "puppe.coroot_of_pip", &cr.coroot, &fz.im1, theta, budget)?;
    Ok(rep.sorted())
}

/// Pair every catalog hom with its report, in catalog order.
pub fn puppe_catalog(budget: &SearchBudget) -> Result<Vec<(String, CheckReport)>> {
    crate::catalog::homs()
        .into_iter()
        .map(|h| {
            let f = ModHom::new(Arc::clone(&h.dom), Arc::clone(&h.cod), h.hom);
            Ok((h.name, puppe_check_with(&f, budget)?))
        })
        .collect()
}
