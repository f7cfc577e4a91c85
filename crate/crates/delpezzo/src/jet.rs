//! Truncated power series (jets) in a handful of local variables, and the
//! linear algebra on jet spaces used by the singularity analysis.

use crate::arena::Arena;
use crate::linalg::QMat;
use crate::poly::{MPoly, Monomial, Rat};

/// A polynomial truncated at total degree `trunc`: no term of degree
/// >= trunc is ever stored, and arithmetic re-truncates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jet {
    poly: MPoly,
    trunc: usize,
}

impl Jet {
    pub fn new(poly: MPoly, trunc: usize) -> Jet {
        Jet {
            poly: truncate(&poly, trunc),
            trunc,
        }
    }

    pub fn zero(arena: &Arena, trunc: usize) -> Jet {
        Jet {
            poly: MPoly::zero(arena),
            trunc,
        }
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn arena(&self) -> &Arena {
        self.poly.arena()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Order of vanishing at the origin (minimal term degree).
    pub fn order(&self) -> Option<u32> {
        self.poly.min_degree()
    }

    pub fn add(&self, other: &Jet) -> Jet {
        Jet::new(self.poly.add(&other.poly), self.trunc.min(other.trunc))
    }

    pub fn sub(&self, other: &Jet) -> Jet {
        Jet::new(self.poly.sub(&other.poly), self.trunc.min(other.trunc))
    }

    pub fn mul(&self, other: &Jet) -> Jet {
        Jet::new(self.poly.mul(&other.poly), self.trunc.min(other.trunc))
    }

    pub fn scale(&self, c: &Rat) -> Jet {
        Jet {
            poly: self.poly.scale(c),
            trunc: self.trunc,
        }
    }

    pub fn derivative(&self, var: usize) -> Jet {
        // Differentiating a jet known mod m^N determines it mod m^(N-1).
        Jet {
            poly: self.poly.derivative(var),
            trunc: self.trunc.saturating_sub(1),
        }
    }

    /// Retruncate to a lower order.
    pub fn cut(&self, trunc: usize) -> Jet {
        Jet::new(self.poly.clone(), trunc.min(self.trunc))
    }
}

pub fn truncate(p: &MPoly, trunc: usize) -> MPoly {
    MPoly::from_terms(
        p.arena(),
        p.terms()
            .filter(|(m, _)| (m.degree() as usize) < trunc)
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

/// Evaluate a polynomial with jets substituted for its variables,
/// truncating along the way.
pub fn substitute_jets(p: &MPoly, images: &[Jet], arena: &Arena, trunc: usize) -> Jet {
    let mut out = Jet::zero(arena, trunc);
    let one = Jet::new(MPoly::one(arena), trunc);
    for (m, c) in p.terms() {
        let mut acc = one.scale(c);
        for (i, &e) in m.exps().iter().enumerate() {
            for _ in 0..e {
                if acc.is_zero() {
                    break;
                }
                acc = acc.mul(&images[i]);
            }
        }
        out = out.add(&acc);
    }
    out
}

/// Monomials of total degree below `bound`, sorted by (degree, exponents).
pub fn monomials_below(nvars: usize, bound: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; nvars];
    collect(&mut out, &mut exps, 0, bound as u32);
    out.sort_by_key(|m| (m.degree(), m.exps().to_vec()));
    out
}

fn collect(out: &mut Vec<Monomial>, exps: &mut Vec<u16>, var: usize, remaining: u32) {
    if var == exps.len() {
        out.push(Monomial::from_exps(exps));
        return;
    }
    for e in 0..remaining {
        exps[var] = e as u16;
        collect(out, exps, var + 1, remaining - e);
    }
    exps[var] = 0;
}

/// Coordinate vector of a jet against a monomial list.
pub fn jet_vector(jet: &Jet, monomials: &[Monomial]) -> Vec<Rat> {
    monomials.iter().map(|m| jet.poly().coeff(m)).collect()
}

/// Row matrix spanning the image of the ideal generated by `gens` in the
/// jet space of order < `bound`: all products gen * monomial, truncated.
pub fn ideal_span(gens: &[Jet], bound: usize, monomials: &[Monomial]) -> QMat {
    let nvars = gens
        .first()
        .map(|g| g.arena().len())
        .unwrap_or(monomials.first().map(|m| m.nvars()).unwrap_or(0));
    let mut rows = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        for mu in monomials_below(nvars, bound) {
            let shifted = Jet::new(g.poly().mul_term(&mu, &crate::poly::rat(1)), bound);
            if !shifted.is_zero() {
                rows.push(jet_vector(&shifted, monomials));
            }
        }
    }
    if rows.is_empty() {
        rows.push(vec![Rat::from_integer(0.into()); monomials.len()]);
    }
    QMat::new(rows, monomials.len())
}
