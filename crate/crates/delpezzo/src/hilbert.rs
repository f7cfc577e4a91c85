//! Hilbert series of monomial ideals: projective dimension and degree of a
//! homogeneous ideal via the staircase of its lead-term ideal, and monomial
//! bases of finite quotient algebras.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::gb;
use crate::order::MonomialOrder;
use crate::poly::{MPoly, Monomial};
use crate::Result;

/// Numerator of the Hilbert series of `k[x_1..x_n]/I` for a monomial ideal
/// `I`, written as `P(t) / (1-t)^n`. Dense coefficient vector, index = degree.
pub fn hilbert_numerator(lead_terms: &[Monomial], nvars: usize) -> Vec<BigInt> {
    let mut gens: Vec<Vec<u16>> = lead_terms.iter().map(|m| m.exps().to_vec()).collect();
    minimalize(&mut gens);
    hn(&gens, nvars)
}

fn minimalize(gens: &mut Vec<Vec<u16>>) {
    gens.sort();
    gens.dedup();
    let snapshot = gens.clone();
    gens.retain(|g| {
        !snapshot
            .iter()
            .any(|h| h != g && h.iter().zip(g.iter()).all(|(a, b)| a <= b))
    });
}

fn poly_add(a: &mut Vec<BigInt>, b: &[BigInt]) {
    if a.len() < b.len() {
        a.resize(b.len(), BigInt::zero());
    }
    for (i, c) in b.iter().enumerate() {
        a[i] += c;
    }
}

fn poly_shift_mul(p: &[BigInt], shift: usize, sign: i32) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + shift];
    for (i, c) in p.iter().enumerate() {
        out[i + shift] = if sign < 0 { -c } else { c.clone() };
    }
    out
}

/// Recursive staircase computation (pivot splitting).
fn hn(gens: &[Vec<u16>], nvars: usize) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return vec![BigInt::zero()];
    }
    // Base case: all generators are pure powers -> product formula.
    if gens.iter().all(|g| g.iter().filter(|&&e| e > 0).count() == 1) {
        let mut out = vec![BigInt::one()];
        for g in gens {
            let d: usize = g.iter().map(|&e| e as usize).sum();
            // multiply by (1 - t^d)
            let neg = poly_shift_mul(&out, d, -1);
            poly_add(&mut out, &neg);
        }
        return out;
    }
    // Pivot: the most frequent variable among non-pure generators.
    let mut counts = vec![0usize; nvars];
    for g in gens {
        if g.iter().filter(|&&e| e > 0).count() > 1 {
            for (i, &e) in g.iter().enumerate() {
                if e > 0 {
                    counts[i] += 1;
                }
            }
        }
    }
    let pivot = counts
        .iter()
        .enumerate()
        .max_by_key(|&(i, c)| (*c, usize::MAX - i))
        .map(|(i, _)| i)
        .unwrap();
    // Split by x_pivot: HN(I) = HN(I + (x_p)) + t * HN(I : x_p).
    let mut with: Vec<Vec<u16>> = gens
        .iter()
        .filter(|g| g[pivot] == 0)
        .cloned()
        .collect();
    let mut pure = vec![0u16; nvars];
    pure[pivot] = 1;
    with.push(pure);
    minimalize(&mut with);

    let mut quot: Vec<Vec<u16>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            if h[pivot] > 0 {
                h[pivot] -= 1;
            }
            h
        })
        .collect();
    minimalize(&mut quot);

    let mut out = hn(&with, nvars);
    let shifted = poly_shift_mul(&hn(&quot, nvars), 1, 1);
    poly_add(&mut out, &shifted);
    out
}

/// Projective dimension and degree of a homogeneous ideal, read from the
/// Hilbert series of its lead-term ideal. Hilbert-polynomial data only, so
/// irrelevant (vertex-supported) components are ignored: an empty
/// projective zero set reports dimension -1 and degree 0.
pub fn proj_dim_degree(gens: &[MPoly], order: &MonomialOrder) -> Result<(i64, BigInt)> {
    for g in gens {
        if !g.is_homogeneous() {
            return Err(Error::NonHomogeneous(format!("{g}")));
        }
    }
    let nvars = gens
        .first()
        .map(|g| g.arena().len())
        .ok_or_else(|| Error::Internal("empty generator list".into()))?;
    let basis = gb::buchberger(gens, order)?;
    let leads: Vec<Monomial> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.leading_term(order).unwrap().0.clone())
        .collect();
    let mut p = hilbert_numerator(&leads, nvars);
    // Cancel (1-t) factors: dimension of the cone is n - (cancellations left).
    let mut cancels = 0usize;
    loop {
        let at_one: BigInt = p.iter().sum();
        if at_one.is_zero() {
            // Divide by (1 - t): synthetic division.
            let mut q = vec![BigInt::zero(); p.len().saturating_sub(1)];
            let mut carry = BigInt::zero();
            for i in 0..p.len().saturating_sub(1) {
                carry = &p[i] + &carry;
                q[i] = carry.clone();
            }
            p = q;
            cancels += 1;
        } else {
            break;
        }
        if p.is_empty() {
            return Ok((-1, BigInt::zero()));
        }
    }
    let pole_order = nvars - cancels; // order of the pole at t = 1
    let degree: BigInt = p.iter().sum();
    if pole_order == 0 {
        // Finite-length quotient: empty projective set.
        return Ok((-1, BigInt::zero()));
    }
    Ok((pole_order as i64 - 1, degree))
}

/// Monomials outside the lead-term ideal of an affine ideal: a vector-space
/// basis of the quotient when finite.
pub fn quotient_space_basis(
    gens: &[MPoly],
    order: &MonomialOrder,
) -> Result<Option<Vec<Monomial>>> {
    let nvars = gens
        .first()
        .map(|g| g.arena().len())
        .ok_or_else(|| Error::Internal("empty generator list".into()))?;
    let basis = gb::buchberger(gens, order)?;
    if basis.is_empty() {
        return Ok(None); // zero ideal, infinite quotient (unless nvars = 0)
    }
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_term(order).unwrap().0.clone())
        .collect();
    // Finite iff every variable occurs as a pure power among the leads.
    let mut bound = vec![None::<u16>; nvars];
    for m in &leads {
        if let Some(i) = single_var(m) {
            let e = m.exp(i);
            bound[i] = Some(bound[i].map_or(e, |b: u16| b.min(e)));
        }
        if m.is_one() {
            return Ok(Some(vec![])); // unit ideal
        }
    }
    if bound.iter().any(|b| b.is_none()) {
        return Ok(None);
    }
    let bound: Vec<u16> = bound.into_iter().map(|b| b.unwrap()).collect();
    let mut out = Vec::new();
    let mut exps = vec![0u16; nvars];
    enumerate_staircase(&leads, &bound, &mut exps, 0, &mut out);
    out.sort();
    Ok(Some(out))
}

fn single_var(m: &Monomial) -> Option<usize> {
    let mut idx = None;
    for (i, &e) in m.exps().iter().enumerate() {
        if e > 0 {
            if idx.is_some() {
                return None;
            }
            idx = Some(i);
        }
    }
    idx
}

fn enumerate_staircase(
    leads: &[Monomial],
    bound: &[u16],
    exps: &mut Vec<u16>,
    var: usize,
    out: &mut Vec<Monomial>,
) {
    if var == exps.len() {
        let m = Monomial::from_exps(exps);
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        return;
    }
    for e in 0..bound[var] {
        exps[var] = e;
        enumerate_staircase(leads, bound, exps, var + 1, out);
    }
    exps[var] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::Arena;

    #[test]
    fn line_in_p2() {
        let a = Arena::from_names(&["x0", "x1", "x2"]);
        let gens = vec![MPoly::parse(&a, "x0").unwrap()];
        let (dim, deg) = proj_dim_degree(&gens, &MonomialOrder::grevlex()).unwrap();
        assert_eq!((dim, deg), (1, BigInt::one()));
    }

    #[test]
    fn twisted_cubic_dim_and_degree() {
        // Oracle: the parametrization (s^3, s^2 t, s t^2, t^3) kills the
        // three quadrics identically, a curve of degree 3.
        let a = Arena::from_names(&["w", "x", "y", "z"]);
        let gens: Vec<MPoly> = ["wy-x^2", "wz-xy", "xz-y^2"]
            .iter()
            .map(|s| MPoly::parse(&a, s).unwrap())
            .collect();
        let st = Arena::from_names(&["s", "t"]);
        let imgs: Vec<MPoly> = ["s^3", "s^2t", "st^2", "t^3"]
            .iter()
            .map(|s| MPoly::parse(&st, s).unwrap())
            .collect();
        for g in &gens {
            assert!(g.substitute(&st, &imgs).is_zero());
        }
        let (dim, deg) = proj_dim_degree(&gens, &MonomialOrder::grevlex()).unwrap();
        assert_eq!((dim, deg), (1, BigInt::from(3)));
    }

    #[test]
    fn dim_degree_order_invariant() {
        let a = Arena::from_names(&["w", "x", "y", "z"]);
        let gens: Vec<MPoly> = ["wy-x^2", "wz-xy", "xz-y^2"]
            .iter()
            .map(|s| MPoly::parse(&a, s).unwrap())
            .collect();
        let g1 = proj_dim_degree(&gens, &MonomialOrder::grevlex()).unwrap();
        let g2 = proj_dim_degree(&gens, &MonomialOrder::lex()).unwrap();
        assert_eq!(g1, g2);
    }

    #[test]
    fn non_homogeneous_rejected() {
        let a = Arena::from_names(&["x0", "x1", "x2"]);
        let gens = vec![MPoly::parse(&a, "x0-1").unwrap()];
        assert!(matches!(
            proj_dim_degree(&gens, &MonomialOrder::grevlex()),
            Err(Error::NonHomogeneous(_))
        ));
    }

    #[test]
    fn quotient_basis_examples() {
        let a = Arena::from_names(&["x", "y", "z"]);
        let order = MonomialOrder::grevlex();
        let gens: Vec<MPoly> = ["x^2", "y", "z"]
            .iter()
            .map(|s| MPoly::parse(&a, s).unwrap())
            .collect();
        let basis = quotient_space_basis(&gens, &order).unwrap().unwrap();
        assert_eq!(basis.len(), 2); // {1, x}

        let gens: Vec<MPoly> = ["x^5", "y", "z"]
            .iter()
            .map(|s| MPoly::parse(&a, s).unwrap())
            .collect();
        let basis = quotient_space_basis(&gens, &order).unwrap().unwrap();
        assert_eq!(basis.len(), 5); // {1, x, ..., x^4}

        let b = Arena::from_names(&["x", "y"]);
        let gens = vec![MPoly::parse(&b, "x").unwrap()];
        assert!(quotient_space_basis(&gens, &order).unwrap().is_none());
    }
}
