//! Buchberger's algorithm with the sugar pair-selection strategy.
//!
//! Pairs are discarded by Buchberger's product criterion (coprime leading
//! monomials) and chain criterion. The output is the reduced basis: monic,
//! inter-reduced, sorted by ascending leading monomial.

use std::cmp::Ordering;

use crate::limits::StepCounter;
use crate::ring::{Monomial, MultiPoly, PolyCtx};
use crate::Result;

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// `S(f, g) = (L/lt f)·f − (L/lt g)·g` with `L = lcm(lm f, lm g)`.
pub fn s_polynomial(f: &MultiPoly, g: &MultiPoly, ctx: &PolyCtx) -> MultiPoly {
    let (Some(lf), Some(lg)) = (f.lm(), g.lm()) else {
        return MultiPoly::zero();
    };
    let l = lf.lcm(lg);
    let fl = ctx.field.inv(&f.lc()).expect("nonzero lc");
    let gl = ctx.field.inv(&g.lc()).expect("nonzero lc");
    f.mul_term(&lf.quotient_of(&l), &fl, ctx).sub(&g.mul_term(&lg.quotient_of(&l), &gl, ctx), ctx)
}

/// Full reduction of `f` modulo `basis`; returns the remainder and the updated sugar.
fn reduce_with_sugar(
    f: &MultiPoly,
    sugar: u32,
    basis: &[(MultiPoly, u32)],
    ctx: &PolyCtx,
    steps: &mut Option<&mut StepCounter>,
) -> Result<(MultiPoly, u32)> {
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, crate::ring::Coeff)> = Vec::new();
    let mut sugar = sugar;
    while let Some((m, c)) = p.terms().first().cloned() {
        if let Some(s) = steps.as_mut() {
            s.tick()?;
        }
        let reducer = basis.iter().find(|(g, _)| g.lm().is_some_and(|lm| lm.divides(&m)));
        match reducer {
            Some((g, gs)) => {
                let q = g.lm().expect("nonzero").quotient_of(&m);
                let coef = ctx.field.div(&c, &g.lc()).expect("nonzero lc");
                sugar = sugar.max(gs + q.degree());
                p = p.sub(&g.mul_term(&q, &coef, ctx), ctx);
            }
            None => {
                rem.push((m.clone(), c.clone()));
                p = p.sub(&MultiPoly::term(ctx, m, c), ctx);
            }
        }
    }
    Ok((MultiPoly::from_terms(ctx, rem), sugar))
}

/// Normal form of `f` modulo `basis` (fully reduced remainder).
pub fn normal_form(f: &MultiPoly, basis: &[MultiPoly], ctx: &PolyCtx) -> MultiPoly {
    let with_sugar: Vec<(MultiPoly, u32)> = basis.iter().map(|g| (g.clone(), 0)).collect();
    reduce_with_sugar(f, 0, &with_sugar, ctx, &mut None).expect("no budget without a counter").0
}

fn pair_cmp(a: &Pair, b: &Pair, ctx: &PolyCtx) -> Ordering {
    a.sugar
        .cmp(&b.sugar)
        .then_with(|| ctx.order.cmp(&a.lcm, &b.lcm))
        .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
}

fn has_pair(pairs: &[Pair], a: usize, b: usize) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    pairs.iter().any(|p| p.i == a && p.j == b)
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner(gens: &[MultiPoly], ctx: &PolyCtx) -> Result<Vec<MultiPoly>> {
    let mut steps = StepCounter::new("Buchberger");
    let mut basis: Vec<(MultiPoly, u32)> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let add = |basis: &mut Vec<(MultiPoly, u32)>, pairs: &mut Vec<Pair>, h: MultiPoly, sugar: u32| {
        let k = basis.len();
        let lh = h.lm().expect("nonzero").clone();
        for (i, (g, gs)) in basis.iter().enumerate() {
            let lg = g.lm().expect("nonzero");
            let lcm = lg.lcm(&lh);
            let s = (gs + lg.quotient_of(&lcm).degree()).max(sugar + lh.quotient_of(&lcm).degree());
            pairs.push(Pair { i, j: k, lcm, sugar: s });
        }
        basis.push((h, sugar));
    };

    for g in gens {
        if g.is_zero() {
            continue;
        }
        let sugar = g.total_degree();
        add(&mut basis, &mut pairs, g.monic(ctx), sugar);
    }

    while !pairs.is_empty() {
        steps.tick()?;
        let best = (0..pairs.len())
            .min_by(|&a, &b| pair_cmp(&pairs[a], &pairs[b], ctx))
            .expect("nonempty");
        let pair = pairs.remove(best);
        let (fi, fj) = (&basis[pair.i].0, &basis[pair.j].0);
        let (li, lj) = (fi.lm().expect("nonzero"), fj.lm().expect("nonzero"));
        if li.coprime(lj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].0.lm().is_some_and(|lk| lk.divides(&pair.lcm))
                && !has_pair(&pairs, pair.i, k)
                && !has_pair(&pairs, pair.j, k)
        });
        if chain {
            continue;
        }
        let s = s_polynomial(fi, fj, ctx);
        let (h, sugar) = reduce_with_sugar(&s, pair.sugar, &basis, ctx, &mut Some(&mut steps))?;
        if !h.is_zero() {
            add(&mut basis, &mut pairs, h.monic(ctx), sugar);
        }
    }

    Ok(reduce_basis(basis.into_iter().map(|(g, _)| g).collect(), ctx))
}

/// Minimizes, inter-reduces and sorts a Gröbner basis.
fn reduce_basis(mut g: Vec<MultiPoly>, ctx: &PolyCtx) -> Vec<MultiPoly> {
    let mut keep: Vec<MultiPoly> = Vec::new();
    g.sort_by(|a, b| ctx.order.cmp(a.lm().expect("nonzero"), b.lm().expect("nonzero")));
    for p in g {
        let lp = p.lm().expect("nonzero");
        if !keep.iter().any(|q| q.lm().expect("nonzero").divides(lp)) {
            keep.push(p);
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<MultiPoly> =
            keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
        out.push(normal_form(&keep[i], &others, ctx).monic(ctx));
    }
    out.sort_by(|a, b| ctx.order.cmp(a.lm().expect("nonzero"), b.lm().expect("nonzero")));
    out
}
