//! Exact multivariate polynomials over arbitrary-precision rationals.
//!
//! `MPoly` is the universal currency of the crate: cubic forms, ideal
//! generators, chart substitutions and jet data are all values of this type.
//! Terms are kept in a `BTreeMap` keyed by exponent vector, which gives a
//! canonical representation independent of any monomial order; order-aware
//! consumers sort on demand.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::arena::Arena;
use crate::error::Error;
use crate::order::MonomialOrder;

/// Arbitrary-precision rational. Always stored reduced with a positive
/// denominator (maintained by `num-rational`).
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exponent vector over a declared arena.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 16]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(self.exps.iter())
                .map(|(&b, &a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.exps.as_slice())
    }
}

/// Sparse multivariate polynomial with rational coefficients over a fixed
/// arena. No zero coefficients are ever stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    arena: Arena,
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero(arena: &Arena) -> Self {
        MPoly {
            arena: arena.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arena: &Arena, c: Rat) -> Self {
        let mut p = Self::zero(arena);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(arena.len()), c);
        }
        p
    }

    pub fn one(arena: &Arena) -> Self {
        Self::constant(arena, Rat::one())
    }

    pub fn var(arena: &Arena, i: usize) -> Self {
        assert!(i < arena.len());
        let mut p = Self::zero(arena);
        p.terms.insert(Monomial::var(arena.len(), i), Rat::one());
        p
    }

    pub fn var_named(arena: &Arena, name: &str) -> Self {
        let i = arena
            .index_of(name)
            .unwrap_or_else(|| panic!("variable {name} not in {arena:?}"));
        Self::var(arena, i)
    }

    pub fn from_terms(arena: &Arena, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Self::zero(arena);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn arena(&self) -> &Arena {
        &self.arena
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one(self.arena.len()))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.nvars(), self.arena.len());
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Minimal total degree among terms (the order of vanishing at the
    /// origin). `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Homogeneous of the given degree in the first `k` variables only.
    pub fn is_homogeneous_in_front(&self, k: usize, degree: u32) -> bool {
        self.terms
            .keys()
            .all(|m| m.exps()[..k].iter().map(|&e| e as u32).sum::<u32>() == degree)
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        debug_assert!(self.arena.same_as(&other.arena));
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        debug_assert!(self.arena.same_as(&other.arena));
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            arena: self.arena.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return Self::zero(&self.arena);
        }
        MPoly {
            arena: self.arena.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        debug_assert!(self.arena.same_as(&other.arena));
        let mut out = Self::zero(&self.arena);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> MPoly {
        if c.is_zero() {
            return Self::zero(&self.arena);
        }
        MPoly {
            arena: self.arena.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut out = Self::one(&self.arena);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn derivative(&self, var: usize) -> MPoly {
        let mut out = Self::zero(&self.arena);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e > 0 {
                let mut exps: SmallVec<[u16; 16]> = SmallVec::from_slice(m.exps());
                exps[var] = e - 1;
                out.add_term(
                    Monomial { exps },
                    c * Rat::from_integer(BigInt::from(e)),
                );
            }
        }
        out
    }

    /// Leading term under the given order, or `None` for zero.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a.exps(), b.exps()))
    }

    /// Terms sorted descending under the given order.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, Rat)> {
        let mut v: Vec<(Monomial, Rat)> =
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|(a, _), (b, _)| order.cmp(b.exps(), a.exps()));
        v
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.arena.len());
        let mut out = Rat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            out += v;
        }
        out
    }

    /// Substitute every variable by a polynomial over the target arena.
    pub fn substitute(&self, target: &Arena, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.arena.len());
        for img in images {
            debug_assert!(img.arena().same_as(target));
        }
        let mut out = MPoly::zero(target);
        // Memoize powers per variable.
        let mut powers: Vec<Vec<MPoly>> = images.iter().map(|p| vec![MPoly::one(target), p.clone()]).collect();
        let power = |var: usize, e: usize, pw: &mut Vec<Vec<MPoly>>| -> MPoly {
            while pw[var].len() <= e {
                let last = pw[var].last().unwrap().mul(&images[var]);
                pw[var].push(last);
            }
            pw[var][e].clone()
        };
        for (m, c) in &self.terms {
            let mut acc = MPoly::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    acc = acc.mul(&power(i, e as usize, &mut powers));
                }
            }
            out = out.add(&acc);
        }
        out
    }

    /// Substitute a single variable by a rational constant, keeping the arena.
    pub fn substitute_value(&self, var: usize, value: &Rat) -> MPoly {
        let mut out = MPoly::zero(&self.arena);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            let mut exps: SmallVec<[u16; 16]> = SmallVec::from_slice(m.exps());
            exps[var] = 0;
            let mut coeff = c.clone();
            for _ in 0..e {
                coeff *= value;
            }
            out.add_term(Monomial { exps }, coeff);
        }
        out
    }

    /// Reinterpret over a new arena, variable `i` mapping to `var_map[i]`.
    pub fn map_arena(&self, target: &Arena, var_map: &[usize]) -> MPoly {
        assert_eq!(var_map.len(), self.arena.len());
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut exps: SmallVec<[u16; 16]> = SmallVec::from_elem(0, target.len());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    exps[var_map[i]] += e;
                }
            }
            out.add_term(Monomial { exps }, c.clone());
        }
        out
    }

    /// Exact multivariate division: returns `self / divisor` when the
    /// remainder is zero, `None` otherwise.
    pub fn exact_div(&self, divisor: &MPoly) -> Option<MPoly> {
        debug_assert!(self.arena.same_as(&divisor.arena));
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let order = MonomialOrder::grevlex();
        let (dm, dc) = divisor.leading_term(&order)?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = MPoly::zero(&self.arena);
        while let Some((lm, lc)) = rem.leading_term(&order) {
            if !dm.divides(lm) {
                return None;
            }
            let qm = dm.quotient_into(lm);
            let qc = lc / &dc;
            quot.add_term(qm.clone(), qc.clone());
            rem = rem.sub(&divisor.mul_term(&qm, &qc));
        }
        Some(quot)
    }

    /// Divide by a power of a single variable, requiring exactness.
    pub fn exact_div_var_power(&self, var: usize, k: u16) -> Option<MPoly> {
        if k == 0 {
            return Some(self.clone());
        }
        let mut out = MPoly::zero(&self.arena);
        for (m, c) in &self.terms {
            if m.exp(var) < k {
                return None;
            }
            let mut exps: SmallVec<[u16; 16]> = SmallVec::from_slice(m.exps());
            exps[var] -= k;
            out.add_term(Monomial { exps }, c.clone());
        }
        Some(out)
    }

    /// Order of vanishing along `var = 0`: the minimal exponent of `var`.
    pub fn var_order(&self, var: usize) -> Option<u16> {
        self.terms.keys().map(|m| m.exp(var)).min()
    }

    /// Scale to integer coefficients with content 1, sign chosen so the
    /// leading coefficient under `order` is positive. Identity on zero.
    pub fn primitive_normalized(&self, order: &MonomialOrder) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut content = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&den / c.denom());
            content = content.gcd(&n);
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        let scale = Rat::new(den, content);
        let mut out = self.scale(&scale);
        let (_, lc) = out.leading_term(order).unwrap();
        if lc.is_negative() {
            out = out.neg();
        }
        out
    }

    /// Parse a polynomial in the crate's text format against an arena.
    pub fn parse(arena: &Arena, text: &str) -> Result<MPoly, Error> {
        parse_poly(arena, text)
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for MPoly {
    /// Canonical text form: terms in descending grevlex, `^` for powers,
    /// juxtaposition on single-letter arenas and `*` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let single = self.arena.single_letter();
        let order = MonomialOrder::grevlex();
        let mut first = true;
        for (m, c) in self.sorted_terms(&order) {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(if abs.is_integer() {
                    abs.numer().to_string()
                } else {
                    format!("{}/{}", abs.numer(), abs.denom())
                });
            }
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = self.arena.name(i);
                if e == 1 {
                    factors.push(name.to_string());
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            let sep = if single { "" } else { "*" };
            write!(f, "{}", factors.join(sep))?;
        }
        Ok(())
    }
}

fn parse_poly(arena: &Arena, text: &str) -> Result<MPoly, Error> {
    let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial text".into()));
    }
    let single = arena.single_letter();
    let mut out = MPoly::zero(arena);
    let mut i = 0usize;
    let n = s.len();
    while i < n {
        // Sign
        let mut sign = 1i64;
        while i < n && (s[i] == '+' || s[i] == '-') {
            if s[i] == '-' {
                sign = -sign;
            }
            i += 1;
        }
        if i >= n {
            return Err(Error::Parse(format!("dangling sign in '{text}'")));
        }
        // Coefficient
        let mut coeff = Rat::from_integer(BigInt::from(sign));
        let mut saw_factor = false;
        if s[i].is_ascii_digit() {
            let start = i;
            while i < n && s[i].is_ascii_digit() {
                i += 1;
            }
            let num: BigInt = s[start..i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer in '{text}'")))?;
            let mut c = Rat::from_integer(num);
            if i < n && s[i] == '/' {
                i += 1;
                let dstart = i;
                while i < n && s[i].is_ascii_digit() {
                    i += 1;
                }
                if dstart == i {
                    return Err(Error::Parse(format!("bad denominator in '{text}'")));
                }
                let den: BigInt = s[dstart..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer in '{text}'")))?;
                if den.is_zero() {
                    return Err(Error::Parse("zero denominator".into()));
                }
                c /= Rat::from_integer(den);
            }
            coeff *= c;
            saw_factor = true;
        }
        // Variable factors
        let mut exps: SmallVec<[u16; 16]> = SmallVec::from_elem(0, arena.len());
        loop {
            if i < n && s[i] == '*' {
                i += 1;
                continue;
            }
            if i >= n || s[i] == '+' || s[i] == '-' {
                break;
            }
            if !s[i].is_ascii_alphabetic() {
                return Err(Error::Parse(format!(
                    "unexpected character '{}' in '{text}'",
                    s[i]
                )));
            }
            let var_idx = if single {
                let name = s[i].to_string();
                i += 1;
                arena
                    .index_of(&name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable '{name}' in '{text}'")))?
            } else {
                let start = i;
                while i < n && (s[i].is_ascii_alphanumeric() || s[i] == '_') {
                    i += 1;
                }
                let name: String = s[start..i].iter().collect();
                arena
                    .index_of(&name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable '{name}' in '{text}'")))?
            };
            let mut e: u16 = 1;
            if i < n && s[i] == '^' {
                i += 1;
                let start = i;
                while i < n && s[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(Error::Parse(format!("bad exponent in '{text}'")));
                }
                e = s[start..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in '{text}'")))?;
            }
            exps[var_idx] += e;
            saw_factor = true;
        }
        if !saw_factor {
            return Err(Error::Parse(format!("empty term in '{text}'")));
        }
        out.add_term(Monomial { exps }, coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> Arena {
        Arena::from_names(&["x", "y", "z"])
    }

    #[test]
    fn parse_and_display_round_trip() {
        let a = Arena::from_names(&["c", "e", "f"]);
        let p = MPoly::parse(&a, "ce-fe^2+f^3").unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.to_string(), "-e^2f+f^3+ce");
        let q = MPoly::parse(&a, &p.to_string()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn parse_multi_letter_mode() {
        let a = Arena::from_names(&["x0", "x1", "x2"]);
        let p = MPoly::parse(&a, "x2^3-x0^2*x2").unwrap();
        assert_eq!(p.num_terms(), 2);
        assert!(MPoly::parse(&a, "x0x1").is_err());
    }

    #[test]
    fn parse_rational_coefficients() {
        let a = xyz();
        let p = MPoly::parse(&a, "1/2x^2-3y+4").unwrap();
        assert_eq!(p.coeff(&Monomial::from_exps(&[2, 0, 0])), ratio(1, 2));
        assert_eq!(p.constant_term(), rat(4));
    }

    #[test]
    fn arithmetic_distributes() {
        let a = xyz();
        let f = MPoly::parse(&a, "x+y").unwrap();
        let g = MPoly::parse(&a, "x-z^2").unwrap();
        let h = MPoly::parse(&a, "2xy-1").unwrap();
        let lhs = f.add(&g).mul(&h);
        let rhs = f.mul(&h).add(&g.mul(&h));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_division() {
        let a = xyz();
        let f = MPoly::parse(&a, "x^2-y^2").unwrap();
        let g = MPoly::parse(&a, "x-y").unwrap();
        let q = f.exact_div(&g).unwrap();
        assert_eq!(q, MPoly::parse(&a, "x+y").unwrap());
        assert!(MPoly::parse(&a, "x^2-y^2+1").unwrap().exact_div(&g).is_none());
    }

    #[test]
    fn derivative_and_eval() {
        let a = xyz();
        let f = MPoly::parse(&a, "x^3+2xy").unwrap();
        let fx = f.derivative(0);
        assert_eq!(fx, MPoly::parse(&a, "3x^2+2y").unwrap());
        let v = f.eval(&[rat(2), rat(3), rat(0)]);
        assert_eq!(v, rat(8 + 12));
    }

    #[test]
    fn substitution_into_other_arena() {
        let a = xyz();
        let t = Arena::from_names(&["t"]);
        let f = MPoly::parse(&a, "y^3-z^2").unwrap();
        let imgs = vec![
            MPoly::var(&t, 0),
            MPoly::parse(&t, "t^2").unwrap(),
            MPoly::parse(&t, "t^3").unwrap(),
        ];
        assert!(f.substitute(&t, &imgs).is_zero());
    }

    #[test]
    fn primitive_normalization() {
        let a = xyz();
        let f = MPoly::parse(&a, "-1/2x^2+1/3y").unwrap();
        let g = f.primitive_normalized(&MonomialOrder::grevlex());
        assert_eq!(g, MPoly::parse(&a, "3x^2-2y").unwrap());
    }
}
