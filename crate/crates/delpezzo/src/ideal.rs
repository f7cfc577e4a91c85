//! Ideals with cached reduced Groebner bases, elimination, saturation and
//! the Cramer divisibility test.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arena::Arena;
use crate::cache;
use crate::error::Error;
use crate::gb::{self, GbBudget};
use crate::hilbert;
use crate::order::MonomialOrder;
use crate::poly::{MPoly, Monomial};
use crate::Result;

/// Generator list with lazily computed, cached reduced Groebner bases.
/// Values are immutable; the cache is an interior memo keyed by order.
pub struct HomogIdeal {
    arena: Arena,
    gens: Vec<MPoly>,
    homogeneous: bool,
    cache: Mutex<HashMap<String, Vec<MPoly>>>,
}

impl Clone for HomogIdeal {
    fn clone(&self) -> Self {
        HomogIdeal {
            arena: self.arena.clone(),
            gens: self.gens.clone(),
            homogeneous: self.homogeneous,
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl std::fmt::Debug for HomogIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ideal(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl HomogIdeal {
    pub fn new(arena: &Arena, gens: Vec<MPoly>) -> Result<Self> {
        for g in &gens {
            arena.check_same(g.arena())?;
        }
        let homogeneous = gens.iter().all(|g| g.is_homogeneous());
        Ok(HomogIdeal {
            arena: arena.clone(),
            gens,
            homogeneous,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn parse(arena: &Arena, gens: &[&str]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|s| MPoly::parse(arena, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(arena, polys)
    }

    pub fn arena(&self) -> &Arena {
        &self.arena
    }

    pub fn generators(&self) -> &[MPoly] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// Reduced Groebner basis under `order`, memoized per order and backed
    /// by the on-disk cache when one is configured.
    pub fn groebner(&self, order: &MonomialOrder) -> Result<Vec<MPoly>> {
        self.groebner_with_budget(order, GbBudget::default())
    }

    pub fn groebner_with_budget(
        &self,
        order: &MonomialOrder,
        budget: GbBudget,
    ) -> Result<Vec<MPoly>> {
        let key = order.descriptor();
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let basis = cache::gb_cached(&self.arena, &self.gens, order, budget)?;
        self.cache.lock().unwrap().insert(key, basis.clone());
        Ok(basis)
    }

    /// Ideal membership via normal form against the grevlex basis.
    pub fn contains(&self, f: &MPoly) -> Result<bool> {
        let order = MonomialOrder::grevlex();
        let basis = self.groebner(&order)?;
        Ok(gb::normal_form(f, &basis, &order)?.is_zero())
    }

    /// Two ideals over one arena are equal iff their reduced grevlex bases
    /// agree (the reduced basis is a canonical form).
    pub fn equals(&self, other: &HomogIdeal) -> Result<bool> {
        self.arena.check_same(&other.arena)?;
        let order = MonomialOrder::grevlex();
        Ok(self.groebner(&order)? == other.groebner(&order)?)
    }

    /// Projective dimension and degree from the Hilbert series of the
    /// lead-term ideal.
    pub fn proj_dim_degree(&self) -> Result<(i64, BigInt)> {
        if !self.homogeneous {
            return Err(Error::NonHomogeneous(format!("{self:?}")));
        }
        hilbert::proj_dim_degree(&self.gens, &MonomialOrder::grevlex())
    }

    /// Monomial basis of the quotient algebra (affine sense); `None` when
    /// infinite-dimensional.
    pub fn quotient_space_basis(&self) -> Result<Option<Vec<Monomial>>> {
        hilbert::quotient_space_basis(&self.gens, &MonomialOrder::grevlex())
    }

    /// Eliminate the named variables: the ideal's intersection with the
    /// subring in the remaining variables, returned over the smaller arena.
    pub fn eliminate(&self, drop_vars: &[&str]) -> Result<HomogIdeal> {
        self.eliminate_with_budget(drop_vars, GbBudget::default())
    }

    pub fn eliminate_with_budget(
        &self,
        drop_vars: &[&str],
        budget: GbBudget,
    ) -> Result<HomogIdeal> {
        let mut drop_idx = Vec::new();
        for name in drop_vars {
            let i = self
                .arena
                .index_of(name)
                .ok_or_else(|| Error::Internal(format!("unknown variable {name}")))?;
            drop_idx.push(i);
        }
        let keep_idx: Vec<usize> = (0..self.arena.len())
            .filter(|i| !drop_idx.contains(i))
            .collect();
        // Block order with the dropped variables in front.
        let mut perm = drop_idx.clone();
        perm.extend(keep_idx.iter().copied());
        let order = MonomialOrder::elimination(drop_idx.len()).with_permutation(perm);
        let basis = cache::gb_cached(&self.arena, &self.gens, &order, budget)?;
        let keep_arena = Arena::new(
            keep_idx
                .iter()
                .map(|&i| self.arena.name(i).to_string())
                .collect::<Vec<_>>(),
        );
        let mut var_map = vec![usize::MAX; self.arena.len()];
        for (new, &old) in keep_idx.iter().enumerate() {
            var_map[old] = new;
        }
        let kept: Vec<MPoly> = basis
            .into_iter()
            .filter(|g| {
                g.terms()
                    .all(|(m, _)| drop_idx.iter().all(|&i| m.exp(i) == 0))
            })
            .map(|g| {
                // Safe: no dropped variable occurs.
                let mut map = var_map.clone();
                for &i in &drop_idx {
                    map[i] = 0;
                }
                g.map_arena(&keep_arena, &map)
            })
            .collect();
        let kept = if kept.is_empty() {
            vec![MPoly::zero(&keep_arena)]
        } else {
            kept
        };
        HomogIdeal::new(&keep_arena, kept)
    }

    /// Saturation `(I : f^inf)` by the extra-variable trick:
    /// eliminate `w` from `I + (1 - w f)`.
    pub fn saturate(&self, f: &MPoly) -> Result<HomogIdeal> {
        self.arena.check_same(f.arena())?;
        let mut names: Vec<String> = vec!["sat_w".to_string()];
        names.extend(self.arena.names().iter().cloned());
        let big = Arena::new(names);
        let shift: Vec<usize> = (1..=self.arena.len()).collect();
        let mut gens: Vec<MPoly> = self
            .gens
            .iter()
            .map(|g| g.map_arena(&big, &shift))
            .collect();
        let w = MPoly::var(&big, 0);
        let f_big = f.map_arena(&big, &shift);
        gens.push(MPoly::one(&big).sub(&w.mul(&f_big)));
        let extended = HomogIdeal::new(&big, gens)?;
        let out = extended.eliminate(&["sat_w"])?;
        // Map back onto the original arena object for pointer-equality ergonomics.
        let idx: Vec<usize> = (0..self.arena.len()).collect();
        let gens = out
            .generators()
            .iter()
            .map(|g| g.map_arena(&self.arena, &idx))
            .collect();
        HomogIdeal::new(&self.arena, gens)
    }
}

/// An affine chart presentation after eliminating variables that occur
/// unit-linearly in some generator (substituting their defining equation
/// is a ring isomorphism, so the scheme and its singular subscheme are
/// unchanged).
#[derive(Clone, Debug)]
pub struct SimplifiedChart {
    pub arena: Arena,
    pub gens: Vec<MPoly>,
    /// Image of each original variable as a polynomial over the new arena.
    pub images: Vec<MPoly>,
}

/// Repeatedly substitute away variables that appear in a generator with a
/// nonzero constant coefficient and exponent one. Variables listed in
/// `keep` are never eliminated.
pub fn simplify_affine_ideal(gens: &[MPoly], arena: &Arena, keep: &[usize]) -> SimplifiedChart {
    let mut cur_arena = arena.clone();
    let mut cur: Vec<MPoly> = gens.to_vec();
    let mut keep_names: Vec<String> = keep.iter().map(|&i| arena.name(i).to_string()).collect();
    let mut images: Vec<MPoly> = (0..arena.len()).map(|i| MPoly::var(arena, i)).collect();
    loop {
        cur.retain(|g| !g.is_zero());
        let Some((gi, v, image)) = find_unit_linear(&cur, &cur_arena, &keep_names) else {
            break;
        };
        // Drop variable v and generator gi; substitute everywhere.
        let small = Arena::new(
            (0..cur_arena.len())
                .filter(|&i| i != v)
                .map(|i| cur_arena.name(i).to_string())
                .collect::<Vec<_>>(),
        );
        let mut var_map = vec![0usize; cur_arena.len()];
        let mut k = 0usize;
        for (i, slot) in var_map.iter_mut().enumerate() {
            if i != v {
                *slot = k;
                k += 1;
            }
        }
        let mut subst: Vec<MPoly> = Vec::with_capacity(cur_arena.len());
        let mut k = 0usize;
        for i in 0..cur_arena.len() {
            if i == v {
                // The image is free of v, so the remap is well defined.
                subst.push(image.map_arena(&small, &var_map));
            } else {
                subst.push(MPoly::var(&small, k));
                k += 1;
            }
        }
        cur = cur
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != gi)
            .map(|(_, g)| g.substitute(&small, &subst))
            .collect();
        images = images
            .iter()
            .map(|img| img.substitute(&small, &subst))
            .collect();
        cur_arena = small;
        keep_names.retain(|n| cur_arena.index_of(n).is_some());
    }
    SimplifiedChart {
        arena: cur_arena,
        gens: cur,
        images,
    }
}

/// Find a generator of the form c*v + rest with c a nonzero constant and
/// rest free of v; returns (generator index, variable, image of v).
fn find_unit_linear(
    gens: &[MPoly],
    arena: &Arena,
    keep_names: &[String],
) -> Option<(usize, usize, MPoly)> {
    for (gi, g) in gens.iter().enumerate() {
        'var: for v in 0..arena.len() {
            if keep_names.iter().any(|n| n == arena.name(v)) {
                continue;
            }
            let mut coeff: Option<crate::poly::Rat> = None;
            let mut rest = MPoly::zero(arena);
            for (m, c) in g.terms() {
                match m.exp(v) {
                    0 => rest.add_term(m.clone(), c.clone()),
                    1 => {
                        if m.degree() == 1 {
                            coeff = Some(c.clone());
                        } else {
                            continue 'var; // v multiplied by other variables
                        }
                    }
                    _ => continue 'var,
                }
            }
            if let Some(c) = coeff {
                let image = rest.scale(&(-crate::poly::rat(1) / c));
                return Some((gi, v, image));
            }
        }
    }
    None
}

/// Cramer image test for 2x2 systems over a polynomial ring: `v` lies in
/// the column image of `M` iff `det(M)` divides both cross-combinations.
pub fn cramer_image_test(m: &[[MPoly; 2]; 2], v: &[MPoly; 2]) -> Result<bool> {
    let arena = m[0][0].arena();
    for p in m.iter().flatten() {
        arena.check_same(p.arena())?;
    }
    for p in v {
        arena.check_same(p.arena())?;
    }
    let (a, b, c, d) = (&m[0][0], &m[0][1], &m[1][0], &m[1][1]);
    let (f, g) = (&v[0], &v[1]);
    let det = a.mul(d).sub(&b.mul(c));
    if det.is_zero() {
        return Err(Error::SingularMatrix("det(M) = 0".into()));
    }
    let x_num = f.mul(d).sub(&b.mul(g)); // df - bg
    let y_num = a.mul(g).sub(&c.mul(f)); // ag - cf
    Ok(x_num.exact_div(&det).is_some() && y_num.exact_div(&det).is_some())
}

/// Serialized form of an ideal: arena plus polynomial strings.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct IdealJson {
    pub arena: Vec<String>,
    pub generators: Vec<String>,
}

impl IdealJson {
    pub fn from_ideal(ideal: &HomogIdeal) -> IdealJson {
        IdealJson {
            arena: ideal.arena().names().to_vec(),
            generators: ideal.generators().iter().map(|g| g.to_string()).collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<HomogIdeal> {
        let arena = Arena::new(self.arena.clone());
        let gens = self
            .generators
            .iter()
            .map(|s| MPoly::parse(&arena, s))
            .collect::<Result<Vec<_>>>()?;
        HomogIdeal::new(&arena, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn eliminate_parametrized_curve() {
        // Oracle: a = t^2, b = t^3 satisfies a^3 - b^2 identically.
        let arena = Arena::from_names(&["x", "a", "b"]);
        let ideal = HomogIdeal::parse(&arena, &["a-x^2", "b-x^3"]).unwrap();
        let out = ideal.eliminate(&["x"]).unwrap();
        let ab = out.arena().clone();
        let expect = MPoly::parse(&ab, "a^3-b^2").unwrap();
        let t = Arena::from_names(&["t"]);
        let imgs = vec![
            MPoly::parse(&t, "t^2").unwrap(),
            MPoly::parse(&t, "t^3").unwrap(),
        ];
        assert!(expect.substitute(&t, &imgs).is_zero());
        let basis = out.groebner(&MonomialOrder::grevlex()).unwrap();
        assert_eq!(basis, vec![expect]);
    }

    #[test]
    fn eliminate_everything_gives_zero() {
        let arena = Arena::from_names(&["x", "y"]);
        let ideal = HomogIdeal::parse(&arena, &["x"]).unwrap();
        let out = ideal.eliminate(&["x"]).unwrap();
        assert!(out.generators().iter().all(|g| g.is_zero()));
    }

    #[test]
    fn saturate_monomial() {
        let arena = Arena::from_names(&["x", "y"]);
        let ideal = HomogIdeal::parse(&arena, &["xy"]).unwrap();
        let x = MPoly::var_named(&arena, "x");
        let sat = ideal.saturate(&x).unwrap();
        let y_only = HomogIdeal::parse(&arena, &["y"]).unwrap();
        assert!(sat.equals(&y_only).unwrap());
    }

    #[test]
    fn saturate_embedded_point() {
        // (x^2, xy) : x^inf. Brute-force membership on monomials up to
        // degree 2 settles it: x*x = x^2 and y*x = xy lie in the ideal, so
        // x and y saturate in -- but so does 1, because 1 * x^2 = x^2 is
        // already a generator. The saturation is therefore the unit ideal
        // (the whole zero set sits inside {x = 0}).
        let arena = Arena::from_names(&["x", "y"]);
        let ideal = HomogIdeal::parse(&arena, &["x^2", "xy"]).unwrap();
        let x = MPoly::var_named(&arena, "x");
        let sat = ideal.saturate(&x).unwrap();
        assert!(sat.contains(&MPoly::var_named(&arena, "y")).unwrap());
        assert!(sat.contains(&x).unwrap());
        let unit = HomogIdeal::parse(&arena, &["1"]).unwrap();
        assert!(sat.equals(&unit).unwrap());
    }

    #[test]
    fn saturate_coprime_is_identity() {
        let arena = Arena::from_names(&["x", "y"]);
        let ideal = HomogIdeal::parse(&arena, &["x^2+y^2"]).unwrap();
        let x = MPoly::var_named(&arena, "x");
        let sat = ideal.saturate(&x).unwrap();
        assert!(sat.equals(&ideal).unwrap());
    }

    #[test]
    fn saturation_is_stable() {
        let arena = Arena::from_names(&["x", "y"]);
        let ideal = HomogIdeal::parse(&arena, &["x^2", "xy"]).unwrap();
        let x = MPoly::var_named(&arena, "x");
        let s1 = ideal.saturate(&x).unwrap();
        let s2 = s1.saturate(&x).unwrap();
        assert!(s1.equals(&s2).unwrap());
    }

    #[test]
    fn cramer_identity_and_failures() {
        let arena = Arena::from_names(&["s", "x"]);
        let one = MPoly::one(&arena);
        let zero = MPoly::zero(&arena);
        let x = MPoly::var_named(&arena, "x");
        let m = [[one.clone(), zero.clone()], [zero.clone(), one.clone()]];
        let v = [x.clone(), one.clone()];
        assert!(cramer_image_test(&m, &v).unwrap());

        let m2 = [[x.clone(), zero.clone()], [zero.clone(), x.clone()]];
        let v2 = [one.clone(), x.clone()];
        assert!(!cramer_image_test(&m2, &v2).unwrap());

        let sing = [[x.clone(), x.clone()], [x.clone(), x.clone()]];
        assert!(matches!(
            cramer_image_test(&sing, &v),
            Err(Error::SingularMatrix(_))
        ));
    }

    #[test]
    fn cramer_blowup_chart_condition() {
        // M = [[1,0],[s,x]] as in the first blow-up chart: (f, g) is in the
        // image iff x divides g - s f.
        let arena = Arena::from_names(&["s", "x"]);
        let one = MPoly::one(&arena);
        let zero = MPoly::zero(&arena);
        let s = MPoly::var_named(&arena, "s");
        let x = MPoly::var_named(&arena, "x");
        let m = [[one.clone(), zero.clone()], [s.clone(), x.clone()]];
        // v = (x, sx): g - s f = sx - sx = 0, divisible.
        assert!(cramer_image_test(&m, &[x.clone(), s.mul(&x)]).unwrap());
        // v = (1, 0): g - s f = -s, not divisible by x.
        assert!(!cramer_image_test(&m, &[one.clone(), zero.clone()]).unwrap());
    }

    #[test]
    fn ideal_json_round_trip() {
        let arena = Arena::from_names(&["a", "b"]);
        let ideal = HomogIdeal::parse(&arena, &["a^3-b^2"]).unwrap();
        let json = IdealJson::from_ideal(&ideal);
        let text = serde_json::to_string(&json).unwrap();
        let back: IdealJson = serde_json::from_str(&text).unwrap();
        let ideal2 = back.to_ideal().unwrap();
        assert!(ideal.equals(&ideal2).unwrap());
        assert_eq!(rat(1), rat(1));
    }
}
