//! Counting oracles that read the input tables directly and share no code with the
//! constructions they check.

use picard::groupoid::Groupoid;
use picard::rmodule::Module;
use picard::twogroup::Hom;

/// Morphisms `0 → 0` of `A` that `F` sends to the identity.
pub fn killed_automorphisms(a: &Module, h: &Hom, b: &Module) -> usize {
    let (ag, bg) = (&a.carrier.base, &b.carrier.base);
    let u = a.carrier.unit;
    (0..ag.n_mor())
        .filter(|&e| ag.src(e) == u && ag.tgt(e) == u)
        .filter(|&e| {
            let fe = h.mmap[e];
            bg.src(fe) == bg.tgt(fe) && bg.id(bg.src(fe)) == fe
        })
        .count()
}

/// Classes of objects of `B` under `B₁ ~ B₂` when `B₁ ≅ FA + B₂` for some `A`.
pub fn object_classes_mod_image(a: &Module, h: &Hom, b: &Module) -> usize {
    let (bg, n) = (&b.carrier.base, b.n());
    let related = |x: usize, y: usize| (0..a.n()).any(|k| bg.is_iso(x, b.carrier.add(h.omap[k], y)));
    let mut seen = vec![false; n];
    let mut classes = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        classes += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if !seen[y] && (related(x, y) || related(y, x)) {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    classes
}

/// Pairs `(x, a: Fx → 0)`.
pub fn kernel_pairs(a: &Module, h: &Hom, b: &Module) -> usize {
    let bg = &b.carrier.base;
    (0..a.n()).map(|x| bg.hom(h.omap[x], b.carrier.unit).len()).sum()
}

/// Number of isomorphism classes of objects.
pub fn components(g: &Groupoid) -> usize {
    let n = g.objects().len();
    let mut label: Vec<usize> = (0..n).collect();
    for x in 0..n {
        for y in 0..n {
            if g.is_iso(x, y) && label[y] > label[x] {
                let (old, new) = (label[y], label[x]);
                for l in label.iter_mut() {
                    if *l == old {
                        *l = new;
                    }
                }
            }
        }
    }
    label.sort_unstable();
    label.dedup();
    label.len()
}

/// Size of `Z/n / ⟨image⟩`.
pub fn cyclic_quotient(n: usize, image: &[usize]) -> usize {
    let mut sub = vec![0usize];
    let mut i = 0;
    while i < sub.len() {
        for &g in image {
            let y = (sub[i] + g) % n;
            if !sub.contains(&y) {
                sub.push(y);
            }
        }
        i += 1;
    }
    n / sub.len()
}

/// Additive maps `Z/k → Z/k`, each given by its value at 1, found by trying every function.
pub fn cyclic_endomorphisms(k: usize) -> Vec<usize> {
    let total = k.pow(k as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let f: Vec<usize> = (0..k).map(|i| (code / k.pow(i as u32)) % k).collect();
        let additive = (0..k).all(|x| (0..k).all(|y| f[(x + y) % k] == (f[x] + f[y]) % k));
        if additive {
            out.push(f[1 % k]);
        }
    }
    out
}
