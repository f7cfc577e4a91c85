//! Buchberger's algorithm with the Gebauer-Moeller pair criteria, normal
//! forms, and reduced Groebner bases.
//!
//! The engine works fraction-free over the integers: every polynomial is
//! kept primitive (content 1, positive leading coefficient), reduction
//! steps cross-multiply by the gcd-reduced leading coefficients, and the
//! content is cleared after each full reduction. Output is deterministic:
//! generators are pre-sorted, the pair with the smallest lcm is always
//! selected next, and the final basis is reduced, primitive and sorted by
//! leading monomial.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::order::MonomialOrder;
use crate::poly::{MPoly, Monomial, Rat};
use crate::Result;

/// Counts actual Buchberger executions (cache hits do not increment).
pub static GB_RUNS: AtomicU64 = AtomicU64::new(0);

/// Integer polynomial, terms sorted descending under the active order.
#[derive(Clone, Debug)]
struct IPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl IPoly {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &(Monomial, BigInt) {
        &self.terms[0]
    }

    fn from_mpoly(p: &MPoly, order: &MonomialOrder) -> IPoly {
        let prim = p.primitive_normalized(order);
        let terms = prim
            .sorted_terms(order)
            .into_iter()
            .map(|(m, c)| {
                debug_assert!(c.is_integer());
                (m, c.numer().clone())
            })
            .collect();
        IPoly { terms }
    }

    fn to_mpoly(&self, arena: &crate::arena::Arena) -> MPoly {
        MPoly::from_terms(
            arena,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), Rat::from_integer(c.clone()))),
        )
    }

    /// Divide all coefficients by their gcd; make the leading one positive.
    fn normalize_content(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c = &*c / &g;
            }
        }
    }
}

/// `ca * a + cb * (mb * b)`, both inputs sorted descending; result sorted.
fn combine(
    a: &[(Monomial, BigInt)],
    ca: &BigInt,
    b: &[(Monomial, BigInt)],
    cb: &BigInt,
    mb: Option<&Monomial>,
    order: &MonomialOrder,
) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0usize;
    let mut j = 0usize;
    let shift = |m: &Monomial| match mb {
        Some(s) => m.mul(s),
        None => m.clone(),
    };
    while i < a.len() && j < b.len() {
        let bm = shift(&b[j].0);
        match order.cmp(a[i].0.exps(), bm.exps()) {
            Ordering::Greater => {
                out.push((a[i].0.clone(), &a[i].1 * ca));
                i += 1;
            }
            Ordering::Less => {
                out.push((bm, &b[j].1 * cb));
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].1 * ca + &b[j].1 * cb;
                if !c.is_zero() {
                    out.push((bm, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    while i < a.len() {
        out.push((a[i].0.clone(), &a[i].1 * ca));
        i += 1;
    }
    while j < b.len() {
        out.push((shift(&b[j].0), &b[j].1 * cb));
        j += 1;
    }
    out
}

/// Full normal form of `f` against `basis`, fraction-free. The result is
/// content-normalized, so it equals the true normal form up to a positive
/// rational scalar.
fn nf_int(f: Vec<(Monomial, BigInt)>, basis: &[IPoly], order: &MonomialOrder) -> IPoly {
    let mut work = f;
    let mut out: Vec<(Monomial, BigInt)> = Vec::new();
    'outer: while !work.is_empty() {
        let (lm, lc) = work[0].clone();
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (gm, gc) = g.lead();
            if gm.divides(&lm) {
                let d = lc.gcd(gc);
                let a = gc / &d;
                let b = -(&lc / &d);
                let shift = gm.quotient_into(&lm);
                work = combine(&work, &a, &g.terms, &b, Some(&shift), order);
                debug_assert!(work.first().map(|(m, _)| m != &lm).unwrap_or(true));
                if !a.is_one() {
                    for (_, c) in out.iter_mut() {
                        *c = &*c * &a;
                    }
                }
                continue 'outer;
            }
        }
        out.push(work.remove(0));
    }
    let mut p = IPoly { terms: out };
    p.normalize_content();
    p
}

/// S-polynomial over the rationals, for property tests and the public API.
pub fn s_polynomial(f: &MPoly, g: &MPoly, order: &MonomialOrder) -> Result<MPoly> {
    f.arena().check_same(g.arena())?;
    if f.is_zero() || g.is_zero() {
        return Ok(MPoly::zero(f.arena()));
    }
    let (fm, fc) = f.leading_term(order).unwrap();
    let (gm, gc) = g.leading_term(order).unwrap();
    let l = fm.lcm(gm);
    let uf = fm.quotient_into(&l);
    let ug = gm.quotient_into(&l);
    let a = f.mul_term(&uf, &(Rat::from_integer(BigInt::from(1)) / fc));
    let b = g.mul_term(&ug, &(Rat::from_integer(BigInt::from(1)) / gc));
    Ok(a.sub(&b))
}

/// Remainder of `f` on multivariate division by `basis`: no term of the
/// result is divisible by any leading term of `basis`, and `f - result`
/// lies in the ideal generated by `basis`.
pub fn normal_form(f: &MPoly, basis: &[MPoly], order: &MonomialOrder) -> Result<MPoly> {
    for g in basis {
        f.arena().check_same(g.arena())?;
    }
    let leads: Vec<Option<(Monomial, Rat)>> = basis
        .iter()
        .map(|g| g.leading_term(order).map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    let mut work = f.clone();
    let mut rem = MPoly::zero(f.arena());
    'outer: while let Some((lm, lc)) = work
        .leading_term(order)
        .map(|(m, c)| (m.clone(), c.clone()))
    {
        for (g, lead) in basis.iter().zip(leads.iter()) {
            if let Some((gm, gc)) = lead {
                if gm.divides(&lm) {
                    let shift = gm.quotient_into(&lm);
                    let scale = &lc / gc;
                    work = work.sub(&g.mul_term(&shift, &scale));
                    continue 'outer;
                }
            }
        }
        rem.add_term(lm.clone(), lc.clone());
        work.add_term(lm, -lc);
    }
    Ok(rem)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Optional wall-clock budget for long runs.
#[derive(Clone, Copy, Default)]
pub struct GbBudget {
    pub deadline: Option<Instant>,
}

impl GbBudget {
    pub fn check(&self) -> Result<()> {
        if let Some(d) = self.deadline {
            if Instant::now() > d {
                return Err(Error::BudgetExceeded);
            }
        }
        Ok(())
    }
}

/// Reduced Groebner basis of the ideal generated by `gens` under `order`.
///
/// The result is inter-reduced (no leading term divides another, tails
/// fully reduced), each element integer-primitive with positive leading
/// coefficient, sorted ascending by leading monomial.
pub fn buchberger(gens: &[MPoly], order: &MonomialOrder) -> Result<Vec<MPoly>> {
    buchberger_with_budget(gens, order, GbBudget::default())
}

pub fn buchberger_with_budget(
    gens: &[MPoly],
    order: &MonomialOrder,
    budget: GbBudget,
) -> Result<Vec<MPoly>> {
    assert!(!gens.is_empty(), "buchberger needs a nonempty generator list");
    let arena = gens[0].arena().clone();
    for g in gens {
        arena.check_same(g.arena())?;
    }
    GB_RUNS.fetch_add(1, AtomicOrdering::Relaxed);

    let mut input: Vec<IPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| IPoly::from_mpoly(g, order))
        .collect();
    if input.is_empty() {
        return Ok(vec![]);
    }
    input.sort_by(|a, b| cmp_ipoly(a, b, order));
    input.dedup_by(|a, b| a.terms == b.terms);

    let mut basis: Vec<IPoly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for f in input {
        let red = nf_int(f.terms, &basis, order);
        if !red.is_zero() {
            update_pairs(&mut basis, &mut pairs, red);
        }
    }

    while !pairs.is_empty() {
        budget.check()?;
        // Normal selection: smallest lcm, ties by index.
        let mut best = 0usize;
        for k in 1..pairs.len() {
            let c = order.cmp(pairs[k].lcm.exps(), pairs[best].lcm.exps());
            if c == Ordering::Less
                || (c == Ordering::Equal
                    && (pairs[k].i, pairs[k].j) < (pairs[best].i, pairs[best].j))
            {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let s = spoly_terms(&basis[pair.i], &basis[pair.j], order);
        let red = nf_int(s, &basis, order);
        if !red.is_zero() {
            update_pairs(&mut basis, &mut pairs, red);
        }
    }

    Ok(interreduce(basis, &arena, order))
}

fn spoly_terms(f: &IPoly, g: &IPoly, order: &MonomialOrder) -> Vec<(Monomial, BigInt)> {
    let (fm, fc) = f.lead();
    let (gm, gc) = g.lead();
    let l = fm.lcm(gm);
    let d = fc.gcd(gc);
    let cf = gc / &d;
    let cg = -(fc / &d);
    let sf = fm.quotient_into(&l);
    let sg = gm.quotient_into(&l);
    // Shift f by sf first, then combine with shifted g.
    let shifted_f: Vec<(Monomial, BigInt)> = f
        .terms
        .iter()
        .map(|(m, c)| (m.mul(&sf), c.clone()))
        .collect();
    combine(&shifted_f, &cf, &g.terms, &cg, Some(&sg), order)
}

/// Gebauer-Moeller update: install `h` into the basis, building the new
/// pair set with the M, F and B criteria applied.
fn update_pairs(basis: &mut Vec<IPoly>, pairs: &mut Vec<Pair>, h: IPoly) {
    let h_idx = basis.len();
    let hm = h.lead().0.clone();

    let cand_lcms: Vec<Monomial> = basis.iter().map(|g| g.lead().0.lcm(&hm)).collect();
    let mut keep = vec![true; cand_lcms.len()];
    // Criterion M: drop candidates whose lcm is properly divisible by another.
    for i in 0..cand_lcms.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..cand_lcms.len() {
            if i != j
                && cand_lcms[j] != cand_lcms[i]
                && cand_lcms[j].divides(&cand_lcms[i])
            {
                keep[i] = false;
                break;
            }
        }
    }
    // Criterion F: among equal lcms keep the first.
    for i in 0..cand_lcms.len() {
        if !keep[i] {
            continue;
        }
        for j in (i + 1)..cand_lcms.len() {
            if keep[j] && cand_lcms[j] == cand_lcms[i] {
                keep[j] = false;
            }
        }
    }
    // Criterion B: coprime leading monomials reduce to zero anyway.
    for (i, g) in basis.iter().enumerate() {
        if keep[i] && g.lead().0.coprime(&hm) {
            keep[i] = false;
        }
    }
    // Prune old pairs strictly covered by h.
    pairs.retain(|p| {
        let covered = hm.divides(&p.lcm)
            && basis[p.i].lead().0.lcm(&hm) != p.lcm
            && basis[p.j].lead().0.lcm(&hm) != p.lcm;
        !covered
    });
    for (i, lcm) in cand_lcms.into_iter().enumerate() {
        if keep[i] {
            pairs.push(Pair { i, j: h_idx, lcm });
        }
    }
    basis.push(h);
}

fn interreduce(
    mut basis: Vec<IPoly>,
    arena: &crate::arena::Arena,
    order: &MonomialOrder,
) -> Vec<MPoly> {
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| cmp_ipoly(a, b, order));
    // Minimalize: drop any element whose lead is divisible by another lead;
    // among equal leads the earliest survives.
    let mut minimal: Vec<IPoly> = Vec::new();
    'next: for (i, g) in basis.iter().enumerate() {
        for (j, h) in basis.iter().enumerate() {
            if i == j {
                continue;
            }
            let (hm, gm) = (&h.lead().0, &g.lead().0);
            if hm.divides(gm) && (hm != gm || j < i) {
                continue 'next;
            }
        }
        minimal.push(g.clone());
    }
    // Tail-reduce each element against the rest.
    let mut reduced: Vec<IPoly> = Vec::new();
    for i in 0..minimal.len() {
        let others: Vec<IPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let mut r = nf_int(minimal[i].terms.clone(), &others, order);
        r.normalize_content();
        debug_assert!(!r.is_zero());
        reduced.push(r);
    }
    reduced.sort_by(|a, b| cmp_ipoly(a, b, order));
    reduced.into_iter().map(|g| g.to_mpoly(arena)).collect()
}

fn cmp_ipoly(a: &IPoly, b: &IPoly, order: &MonomialOrder) -> Ordering {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Ordering::Equal,
        (true, false) => return Ordering::Less,
        (false, true) => return Ordering::Greater,
        _ => {}
    }
    for ((ma, ca), (mb, cb)) in a.terms.iter().zip(b.terms.iter()) {
        match order.cmp(ma.exps(), mb.exps()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        match ca.cmp(cb) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    a.terms.len().cmp(&b.terms.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::Arena;

    fn gb(gens: &[&str], arena: &Arena, order: &MonomialOrder) -> Vec<MPoly> {
        let polys: Vec<MPoly> = gens.iter().map(|s| MPoly::parse(arena, s).unwrap()).collect();
        buchberger(&polys, order).unwrap()
    }

    #[test]
    fn normal_form_substitutes() {
        let a = Arena::from_names(&["x", "y"]);
        let f = MPoly::parse(&a, "x^2").unwrap();
        let basis = vec![MPoly::parse(&a, "x-y").unwrap()];
        let r = normal_form(&f, &basis, &MonomialOrder::lex()).unwrap();
        assert_eq!(r, MPoly::parse(&a, "y^2").unwrap());
    }

    #[test]
    fn normal_form_of_generator_is_zero() {
        let a = Arena::from_names(&["x", "y"]);
        let f = MPoly::parse(&a, "x-y").unwrap();
        let basis = vec![f.clone()];
        assert!(normal_form(&f, &basis, &MonomialOrder::lex()).unwrap().is_zero());
    }

    #[test]
    fn normal_form_single_division_step() {
        // x^3 - z against x^2 - y under lex x>y>z: one step gives xy - z.
        let a = Arena::from_names(&["x", "y", "z"]);
        let f = MPoly::parse(&a, "x^3-z").unwrap();
        let basis = vec![MPoly::parse(&a, "x^2-y").unwrap()];
        let r = normal_form(&f, &basis, &MonomialOrder::lex()).unwrap();
        assert_eq!(r, MPoly::parse(&a, "xy-z").unwrap());
    }

    #[test]
    fn buchberger_on_a_basis_is_identity() {
        let a = Arena::from_names(&["x", "y"]);
        let basis = gb(&["x", "y"], &a, &MonomialOrder::lex());
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0], MPoly::parse(&a, "y").unwrap());
        assert_eq!(basis[1], MPoly::parse(&a, "x").unwrap());
    }

    #[test]
    fn twisted_cubic_elimination_part() {
        // Oracle for the frozen expectation: substituting x=t, y=t^2, z=t^3
        // kills y^3 - z^2 identically, so it lies in the ideal; the lex
        // basis must expose it in the (y, z)-subring.
        let a = Arena::from_names(&["x", "y", "z"]);
        let basis = gb(&["y-x^2", "z-x^3"], &a, &MonomialOrder::lex());
        let target = MPoly::parse(&a, "y^3-z^2").unwrap();
        let t = Arena::from_names(&["t"]);
        let imgs = vec![
            MPoly::var(&t, 0),
            MPoly::parse(&t, "t^2").unwrap(),
            MPoly::parse(&t, "t^3").unwrap(),
        ];
        assert!(target.substitute(&t, &imgs).is_zero());
        assert!(basis.iter().any(|g| g == &target));
    }

    #[test]
    fn difference_of_generators_appears() {
        let a = Arena::from_names(&["x", "y", "z"]);
        let basis = gb(&["x^2-y", "x^2-z"], &a, &MonomialOrder::grevlex());
        assert!(basis.contains(&MPoly::parse(&a, "y-z").unwrap()));
    }

    #[test]
    fn s_polynomials_reduce_to_zero() {
        let a = Arena::from_names(&["x", "y", "z"]);
        let order = MonomialOrder::grevlex();
        let basis = gb(&["x^2+y^2+z^2-1", "xy-z", "x-y^2"], &a, &order);
        for f in &basis {
            for g in &basis {
                let s = s_polynomial(f, g, &order).unwrap();
                assert!(normal_form(&s, &basis, &order).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn reduced_basis_is_self_reduced() {
        let a = Arena::from_names(&["x", "y", "z"]);
        let order = MonomialOrder::grevlex();
        let basis = gb(&["x^2+y^2+z^2-1", "xy-z"], &a, &order);
        for (i, g) in basis.iter().enumerate() {
            let (gm, _) = g.leading_term(&order).unwrap();
            for (j, h) in basis.iter().enumerate() {
                if i == j {
                    continue;
                }
                let (hm, _) = h.leading_term(&order).unwrap();
                assert!(!hm.divides(gm), "head term divides another head term");
                for (m, _) in g.terms() {
                    assert!(!hm.divides(m), "tail not fully reduced");
                }
            }
        }
    }

    #[test]
    fn deterministic_output() {
        let a = Arena::from_names(&["x", "y", "z"]);
        let order = MonomialOrder::grevlex();
        let g1 = gb(&["x^2-y", "y^2-z", "xz-y"], &a, &order);
        let g2 = gb(&["xz-y", "x^2-y", "y^2-z"], &a, &order);
        assert_eq!(g1, g2);
    }
}
