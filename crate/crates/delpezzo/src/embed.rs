//! Anticanonical embeddings: the linear system of cubics through a
//! configuration, the rational map to projective space, the implicitized
//! image ideal, and its invariants.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arena::Arena;
use crate::catalog::{self, CatalogEntry, NegCurve, NegCurveKind};
use crate::error::Error;
use crate::gb::GbBudget;
use crate::ideal::HomogIdeal;
use crate::linalg::QMat;
use crate::order::MonomialOrder;
use crate::poly::{rat, MPoly, Monomial, Rat};
use crate::Result;

/// Coordinate names in the target projective space.
pub const TARGET_NAMES: [&str; 10] = ["a", "b", "c", "d", "e", "f", "g", "h", "i", "j"];

pub fn source_arena() -> Arena {
    Arena::from_names(&["x0", "x1", "x2"])
}

pub fn target_arena(dim: usize) -> Arena {
    Arena::from_names(&TARGET_NAMES[..dim])
}

/// The ten cubic monomials in graded-lex order with x0^3 first; the fixed
/// coefficient ordering for condition matrices and echelon bases.
pub fn cubic_monomials() -> Vec<Monomial> {
    let mut out = Vec::new();
    for i in (0..=3u16).rev() {
        for j in (0..=3 - i).rev() {
            out.push(Monomial::from_exps(&[i, j, 3 - i - j]));
        }
    }
    out
}

/// Dehomogenized counterparts over (x, y): set x0 = 1.
fn affine_cubic_monomials() -> Vec<MPoly> {
    let xy = catalog::affine_xy();
    cubic_monomials()
        .iter()
        .map(|m| {
            MPoly::from_terms(
                &xy,
                [(Monomial::from_exps(&[m.exp(1), m.exp(2)]), rat(1))],
            )
        })
        .collect()
}

/// The linear system of cubics through the configuration.
#[derive(Clone, Debug)]
pub struct CubicSystem {
    /// Homogeneous cubics over (x0, x1, x2), echelon basis of the kernel
    /// of the condition matrix.
    pub basis: Vec<MPoly>,
    /// One row per base point, columns indexed by `cubic_monomials`.
    pub condition_matrix: QMat,
}

/// Rational map to projective space given by equal-degree forms.
#[derive(Clone, Debug)]
pub struct AnticanonicalMap {
    pub source: Arena,
    pub target: Arena,
    pub components: Vec<MPoly>,
}

impl AnticanonicalMap {
    /// Components with x0 = 1, over the affine (x, y) arena.
    pub fn affine_components(&self) -> Vec<MPoly> {
        let xy = catalog::affine_xy();
        let imgs = [
            MPoly::one(&xy),
            MPoly::var(&xy, 0),
            MPoly::var(&xy, 1),
        ];
        self.components
            .iter()
            .map(|c| c.substitute(&xy, &imgs))
            .collect()
    }
}

/// One linear condition on the ten cubic coefficients per base point.
///
/// For a point at chain depth m, the generic cubic is pulled back through
/// the chart tower; the conditions of the chain ancestors make it divisible
/// by the m-th power of the exceptional coordinate, and the new condition is
/// the value of the quotient at the chart origin. As a functional on all
/// ten coefficients this is the coefficient of v^m w^0 in the pullback.
pub fn base_conditions(entry: &CatalogEntry) -> QMat {
    let monos = affine_cubic_monomials();
    let mut rows = Vec::new();
    for i in 0..entry.points.len() {
        let chart = catalog::chart_before(entry, i);
        let depth = chart.depth as u16;
        let row: Vec<Rat> = monos
            .iter()
            .map(|mu| {
                let pulled = chart.pullback(mu);
                pulled.coeff(&Monomial::from_exps(&[depth, 0]))
            })
            .collect();
        rows.push(row);
    }
    QMat::new(rows, monos.len())
}

/// Kernel of the base conditions as homogeneous cubics; dimension d + 1.
pub fn cubic_system(entry: &CatalogEntry) -> Result<CubicSystem> {
    let conditions = base_conditions(entry);
    let expected = entry.degree as usize + 1;
    let kernel = if entry.points.is_empty() {
        QMat::zero(1, 10).kernel_basis()
    } else {
        conditions.kernel_basis()
    };
    if kernel.len() != expected || conditions.rank() != entry.points.len() {
        return Err(Error::ConditionDependence(format!(
            "{}: cubic system has dimension {} (rank {}), expected {}",
            entry.id,
            kernel.len(),
            conditions.rank(),
            expected
        )));
    }
    let monos = cubic_monomials();
    let src = source_arena();
    let basis = kernel
        .iter()
        .map(|coeffs| {
            MPoly::from_terms(
                &src,
                monos
                    .iter()
                    .zip(coeffs.iter())
                    .map(|(m, c)| (m.clone(), c.clone())),
            )
        })
        .collect();
    Ok(CubicSystem {
        basis,
        condition_matrix: conditions,
    })
}

fn coeff_vector(cubic: &MPoly) -> Vec<Rat> {
    cubic_monomials()
        .iter()
        .map(|m| cubic.coeff(m))
        .collect()
}

/// The anticanonical map of an entry: canonical echelon basis, or an
/// explicit basis choice which must span the same system.
pub fn anticanonical_map(
    entry: &CatalogEntry,
    basis_choice: Option<Vec<MPoly>>,
) -> Result<AnticanonicalMap> {
    let system = cubic_system(entry)?;
    let components = match basis_choice {
        None => system.basis.clone(),
        Some(choice) => {
            if choice.len() != system.basis.len() {
                return Err(Error::BasisNotInSystem(format!(
                    "{}: {} cubics given, expected {}",
                    entry.id,
                    choice.len(),
                    system.basis.len()
                )));
            }
            let span = QMat::new(system.basis.iter().map(coeff_vector).collect(), 10);
            for c in &choice {
                if !c.is_homogeneous() || c.total_degree() != Some(3) {
                    return Err(Error::BasisNotInSystem(format!("{c} is not a cubic")));
                }
                if !span.row_span_contains(&coeff_vector(c)) {
                    return Err(Error::BasisNotInSystem(format!(
                        "{c} does not satisfy the base conditions"
                    )));
                }
            }
            let rank = QMat::new(choice.iter().map(coeff_vector).collect(), 10).rank();
            if rank != choice.len() {
                return Err(Error::BasisNotInSystem(
                    "chosen cubics are linearly dependent".into(),
                ));
            }
            choice
        }
    };
    Ok(AnticanonicalMap {
        source: source_arena(),
        target: target_arena(components.len()),
        components,
    })
}

/// The explicit sextuple used for the degree-5 surface with one A2 point:
/// (x1^3, x2^3 - x0^2 x2, x0 x1^2, x1^2 x2, x1 x2^2, x0 x1 x2).
pub fn s4pp_preset_map() -> Result<AnticanonicalMap> {
    let entry = catalog::entry("S4''")?;
    let src = source_arena();
    let cubics = [
        "x1^3",
        "x2^3-x0^2*x2",
        "x0*x1^2",
        "x1^2*x2",
        "x1*x2^2",
        "x0*x1*x2",
    ]
    .iter()
    .map(|s| MPoly::parse(&src, s))
    .collect::<Result<Vec<_>>>()?;
    anticanonical_map(&entry, Some(cubics))
}

/// Defining ideal of the closure of the image: eliminate the source
/// variables from the graph ideal (a_i - f_i). The components share a
/// degree, so the result must be homogeneous.
pub fn implicitize(map: &AnticanonicalMap) -> Result<HomogIdeal> {
    implicitize_with_budget(map, GbBudget::default())
}

pub fn implicitize_with_budget(map: &AnticanonicalMap, budget: GbBudget) -> Result<HomogIdeal> {
    let n_src = map.source.len();
    let n_tgt = map.target.len();
    let mut names: Vec<String> = map.source.names().to_vec();
    names.extend(map.target.names().iter().cloned());
    let joint = Arena::new(names);
    let src_map: Vec<usize> = (0..n_src).collect();
    let mut gens = Vec::new();
    for (k, f) in map.components.iter().enumerate() {
        let f_joint = f.map_arena(&joint, &src_map);
        let coord = MPoly::var(&joint, n_src + k);
        gens.push(coord.sub(&f_joint));
    }
    let graph = HomogIdeal::new(&joint, gens)?;
    let drop: Vec<&str> = map.source.names().iter().map(|s| s.as_str()).collect();
    let image = graph.eliminate_with_budget(&drop, budget)?;
    let canonical = HomogIdeal::new(
        &target_arena(n_tgt),
        image
            .generators()
            .iter()
            .map(|g| g.map_arena(&target_arena(n_tgt), &(0..n_tgt).collect::<Vec<_>>()))
            .collect(),
    )?;
    if !canonical.is_homogeneous() {
        return Err(Error::Internal(
            "image ideal of an equal-degree map must be homogeneous".into(),
        ));
    }
    Ok(canonical)
}

/// Checked invariants of an image ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageInvariants {
    pub dim: i64,
    pub degree: BigInt,
    pub quadric_generated: bool,
}

/// Dimension and degree from the Hilbert series, plus whether the ideal is
/// generated by its quadrics. The reduced basis may contain cubics under
/// grevlex even for quadric-generated ideals, so the test reduces every
/// basis element against the basis of the degree-2 part.
pub fn image_invariants(ideal: &HomogIdeal) -> Result<ImageInvariants> {
    let order = MonomialOrder::grevlex();
    let (dim, degree) = ideal.proj_dim_degree()?;
    let basis = ideal.groebner(&order)?;
    let quads: Vec<MPoly> = basis
        .iter()
        .filter(|g| g.total_degree() == Some(2))
        .cloned()
        .collect();
    let quadric_generated = if quads.is_empty() {
        basis.is_empty()
    } else {
        let qbasis = HomogIdeal::new(ideal.arena(), quads)?.groebner(&order)?;
        basis
            .iter()
            .map(|g| crate::gb::normal_form(g, &qbasis, &order).map(|r| r.is_zero()))
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .all(|b| b)
    };
    Ok(ImageInvariants {
        dim,
        degree,
        quadric_generated,
    })
}

/// A rational projective point, stored as a primitive integer vector with
/// positive first nonzero coordinate.
pub type ProjPoint = Vec<BigInt>;

pub fn normalize_point(coords: &[Rat]) -> ProjPoint {
    use num_integer::Integer;
    let mut den = BigInt::from(1);
    for c in coords {
        den = den.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = coords
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for v in &ints {
        content = content.gcd(v);
    }
    if let Some(first) = ints.iter().find(|v| !v.is_zero()) {
        if first.is_negative() {
            content = -content;
        }
    }
    if !content.is_zero() {
        for v in ints.iter_mut() {
            *v = &*v / &content;
        }
    }
    ints
}

pub fn point_to_rats(p: &ProjPoint) -> Vec<Rat> {
    p.iter().map(|v| Rat::from_integer(v.clone())).collect()
}

/// Predicted singular points: the image of each contracted (-2)-chain.
///
/// A chain containing a line transform is evaluated along the plane line;
/// a purely exceptional chain is evaluated on the strict transform of its
/// root exceptional curve, in the chart where that curve is the w = 0 axis,
/// after removing the common exceptional factor of the components.
pub fn predicted_singular_points(
    entry: &CatalogEntry,
    map: &AnticanonicalMap,
) -> Result<Vec<ProjPoint>> {
    let chains = catalog::minus_two_chains(entry)?;
    let affine = map.affine_components();
    let mut points = Vec::new();
    for chain in &chains {
        let p = chain_image(entry, chain, &affine)?;
        if points.contains(&p) {
            return Err(Error::Internal(format!(
                "{}: two (-2)-chains map to the same point",
                entry.id
            )));
        }
        points.push(p);
    }
    Ok(points)
}

fn chain_image(
    entry: &CatalogEntry,
    chain: &[NegCurve],
    affine_components: &[MPoly],
) -> Result<ProjPoint> {
    let line = chain.iter().find_map(|c| match &c.kind {
        NegCurveKind::Line { equation, .. } => Some(equation.clone()),
        NegCurveKind::Exceptional(_) => None,
    });
    if let Some(eq) = line {
        // Parametrize a x + b y + c = 0 and evaluate off the base points.
        let xy = catalog::affine_xy();
        let a = eq.coeff(&Monomial::from_exps(&[1, 0]));
        let b = eq.coeff(&Monomial::from_exps(&[0, 1]));
        let c = eq.coeff(&Monomial::from_exps(&[0, 0]));
        let mut last: Option<ProjPoint> = None;
        let mut hits = 0;
        for lambda in 0..16i64 {
            let t = rat(lambda);
            let (px, py) = if !b.is_zero() {
                (t.clone(), (-&c - &a * &t) / &b)
            } else {
                ((-&c) / &a, t.clone())
            };
            let vals: Vec<Rat> = affine_components
                .iter()
                .map(|f| f.eval(&[px.clone(), py.clone()]))
                .collect();
            if vals.iter().all(|v| v.is_zero()) {
                continue; // base point of the system on the line
            }
            let p = normalize_point(&vals);
            if let Some(prev) = &last {
                if *prev != p {
                    return Err(Error::Internal(format!(
                        "{}: map is not constant along a contracted line ({})",
                        entry.id,
                        eq
                    )));
                }
                hits += 1;
                if hits >= 2 {
                    return Ok(p);
                }
            } else {
                last = Some(p);
                hits = 1;
            }
        }
        let _ = xy;
        last.ok_or_else(|| {
            Error::Internal(format!("{}: all components vanish on a line", entry.id))
        })
    } else {
        // Root of the exceptional chain: the member that is nobody's child
        // inside the chain.
        let members: Vec<usize> = chain
            .iter()
            .map(|c| match &c.kind {
                NegCurveKind::Exceptional(i) => *i,
                NegCurveKind::Line { .. } => unreachable!(),
            })
            .collect();
        let &root = members
            .iter()
            .find(|&&i| {
                entry.points[i]
                    .parent
                    .map(|p| !members.contains(&p))
                    .unwrap_or(true)
            })
            .expect("chain root");
        let child = (0..entry.points.len())
            .find(|&j| entry.points[j].parent == Some(root))
            .expect("root of a (-2)-chain has a blown-up child");
        let chart = catalog::exceptional_view(entry, root, child);
        let pulled: Vec<MPoly> = affine_components.iter().map(|f| chart.pullback(f)).collect();
        // Remove the common monomial factor of all components.
        let mut min_exps = [u16::MAX; 2];
        for p in &pulled {
            if p.is_zero() {
                return Err(Error::Internal(format!(
                    "{}: a component vanishes identically on the chart",
                    entry.id
                )));
            }
            for var in 0..2 {
                min_exps[var] = min_exps[var].min(p.var_order(var).unwrap());
            }
        }
        let reduced: Vec<MPoly> = pulled
            .iter()
            .map(|p| {
                p.exact_div_var_power(0, min_exps[0])
                    .unwrap()
                    .exact_div_var_power(1, min_exps[1])
                    .unwrap()
            })
            .collect();
        let mut last: Option<ProjPoint> = None;
        for lambda in 1..=4i64 {
            let vals: Vec<Rat> = reduced
                .iter()
                .map(|f| f.eval(&[rat(lambda), rat(0)]))
                .collect();
            if vals.iter().all(|v| v.is_zero()) {
                continue;
            }
            let p = normalize_point(&vals);
            if let Some(prev) = &last {
                if *prev != p {
                    return Err(Error::Internal(format!(
                        "{}: map not constant on a contracted exceptional curve",
                        entry.id
                    )));
                }
                return Ok(p);
            }
            last = Some(p);
        }
        Err(Error::Internal(format!(
            "{}: all components vanish along the exceptional chart",
            entry.id
        )))
    }
}

/// Rank of the Jacobian of the generators at a rational point.
pub fn jacobian_rank_at(ideal: &HomogIdeal, point: &ProjPoint) -> usize {
    let coords = point_to_rats(point);
    let n = ideal.arena().len();
    let rows: Vec<Vec<Rat>> = ideal
        .generators()
        .iter()
        .map(|g| (0..n).map(|v| g.derivative(v).eval(&coords)).collect())
        .collect();
    QMat::new(rows, n).rank()
}

/// Exact certificate that the singular locus is no bigger than predicted.
///
/// Chart by chart, the image ideal is dehomogenized, simplified by
/// unit-linear substitutions (an isomorphism of the chart), and the full
/// set of Fitting minors of the simplified Jacobian is adjoined. The
/// resulting singular subscheme is finite; its vector-space dimension
/// counts each A_lambda point with multiplicity lambda. Charts are made
/// disjoint by forcing the earlier coordinates to vanish, so the chart
/// contributions add up to the lambda sum exactly when the predicted
/// points account for the whole singular locus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingularLocusCheck {
    Certified { total: u32 },
    Uncertified { reason: String },
}

pub fn singular_locus_check(
    ideal: &HomogIdeal,
    label: &str,
    points_with_tau: &[(ProjPoint, u32)],
    budget: GbBudget,
) -> Result<SingularLocusCheck> {
    let n = ideal.arena().len();
    let mut total = 0u32;
    for chart in 0..n {
        budget.check()?;
        let expected: u32 = points_with_tau
            .iter()
            .filter(|(p, _)| !p[chart].is_zero())
            .map(|(_, tau)| *tau)
            .sum();
        match chart_singular_length(ideal, chart)? {
            Some(len) => {
                if len != expected {
                    return Ok(SingularLocusCheck::Uncertified {
                        reason: format!(
                            "{label}: chart {chart} singular length {len} vs predicted {expected}"
                        ),
                    });
                }
                total = total.max(len);
            }
            None => {
                return Ok(SingularLocusCheck::Uncertified {
                    reason: format!("{label}: singular scheme not finite in chart {chart}"),
                })
            }
        }
    }
    let _ = total;
    Ok(SingularLocusCheck::Certified {
        total: points_with_tau.iter().map(|(_, t)| *t).sum(),
    })
}

/// Length of the whole singular subscheme visible in chart `chart`
/// (the sum of Tjurina lengths of the singular points with nonzero
/// chart coordinate); `None` when not finite.
fn chart_singular_length(ideal: &HomogIdeal, chart: usize) -> Result<Option<u32>> {
    let n = ideal.arena().len();
    // Dehomogenize at the chart coordinate.
    let affine = Arena::new(
        (0..n)
            .filter(|&i| i != chart)
            .map(|i| ideal.arena().name(i).to_string())
            .collect::<Vec<_>>(),
    );
    let mut images = Vec::new();
    let mut k = 0usize;
    for i in 0..n {
        if i == chart {
            images.push(MPoly::one(&affine));
        } else {
            images.push(MPoly::var(&affine, k));
            k += 1;
        }
    }
    let gens: Vec<MPoly> = ideal
        .generators()
        .iter()
        .map(|g| g.substitute(&affine, &images))
        .collect();
    let simplified = crate::ideal::simplify_affine_ideal(&gens, &affine, &[]);
    let m = simplified.arena.len();
    if simplified.gens.is_empty() {
        // The chart is an affine cell: smooth, nothing to count.
        return Ok(Some(0));
    }
    if m < 3 {
        return Err(Error::Internal(
            "chart simplification left fewer than three variables".into(),
        ));
    }
    let c = m - 2;
    let mut scheme = simplified.gens.clone();
    scheme.extend(all_minors(&simplified.gens, &simplified.arena, c)?);
    match crate::hilbert::quotient_space_basis(&scheme, &MonomialOrder::grevlex())? {
        Some(basis) => Ok(Some(basis.len() as u32)),
        None => Ok(None),
    }
}

/// Every c x c minor of the Jacobian of the generators.
pub(crate) fn all_minors(gens: &[MPoly], arena: &Arena, c: usize) -> Result<Vec<MPoly>> {
    let g = gens.len();
    let n = arena.len();
    if c == 0 || c > g || c > n {
        return Err(Error::Internal(format!(
            "minor size {c} out of range for {g} generators in {n} variables"
        )));
    }
    let jac: Vec<Vec<MPoly>> = gens
        .iter()
        .map(|f| (0..n).map(|v| f.derivative(v)).collect())
        .collect();
    let row_sets = combinations(g, c);
    let col_sets = combinations(n, c);
    if row_sets.len() * col_sets.len() > 20_000 {
        return Err(Error::Internal(format!(
            "minor count {} exceeds the cap",
            row_sets.len() * col_sets.len()
        )));
    }
    let mut out = Vec::new();
    for rows in &row_sets {
        for cols in &col_sets {
            let m: Vec<Vec<MPoly>> = rows
                .iter()
                .map(|&ri| cols.iter().map(|&ci| jac[ri][ci].clone()).collect())
                .collect();
            let d = det_poly(&m, arena);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// An actual c x c minor of the Jacobian, rows and columns sampled by a
/// deterministic LCG; every such minor vanishes wherever rank(J) < c, and
/// the sparse gradient entries keep the determinant small.
pub(crate) fn projected_minor(
    jac: &[Vec<MPoly>],
    c: usize,
    arena: &Arena,
    seed: &mut u64,
) -> MPoly {
    let g = jac.len();
    let n = jac[0].len();
    let mut next = |m: usize| {
        *seed = seed
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((*seed >> 33) as usize) % m
    };
    let mut rows: Vec<usize> = Vec::with_capacity(c);
    while rows.len() < c {
        let k = next(g);
        if !rows.contains(&k) {
            rows.push(k);
        }
    }
    rows.sort();
    let mut cols: Vec<usize> = Vec::with_capacity(c);
    while cols.len() < c {
        let k = next(n);
        if !cols.contains(&k) {
            cols.push(k);
        }
    }
    cols.sort();
    let m: Vec<Vec<MPoly>> = rows
        .iter()
        .map(|&ri| cols.iter().map(|&ci| jac[ri][ci].clone()).collect())
        .collect();
    det_poly(&m, arena)
}

/// Determinant by cofactor expansion along the first column.
pub(crate) fn det_poly(m: &[Vec<MPoly>], arena: &Arena) -> MPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut out = MPoly::zero(arena);
    for row in 0..n {
        if m[row][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MPoly>> = (0..n)
            .filter(|&r| r != row)
            .map(|r| m[r][1..].to_vec())
            .collect();
        let sub = det_poly(&minor, arena);
        let term = m[row][0].mul(&sub);
        if row % 2 == 0 {
            out = out.add(&term);
        } else {
            out = out.sub(&term);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::entry;

    #[test]
    fn base_conditions_for_s4pp_match_the_worked_case() {
        // s(1,0,0) = 0, s(1,0,1) = 0, s(1,0,-1) = 0, s_x1(1,0,0) = 0.
        let e = entry("S4''").unwrap();
        let m = base_conditions(&e);
        assert_eq!(m.nrows(), 4);
        // Row 1: value at origin = coefficient of the constant monomial.
        let row0: Vec<i64> = vec![1, 0, 0, 0, 0, 0, 0, 0, 0, 0];
        assert_eq!(m.rows[0], row0.iter().map(|&v| rat(v)).collect::<Vec<_>>());
        // Row 4 (tangent direction [1:0] at p1): d/dx at origin.
        let row3: Vec<i64> = vec![0, 1, 0, 0, 0, 0, 0, 0, 0, 0];
        assert_eq!(m.rows[3], row3.iter().map(|&v| rat(v)).collect::<Vec<_>>());
        // Rows 2 and 3: evaluation at (0, 1) and (0, -1).
        let row1: Vec<i64> = vec![1, 0, 1, 0, 0, 1, 0, 0, 0, 1];
        assert_eq!(m.rows[1], row1.iter().map(|&v| rat(v)).collect::<Vec<_>>());
        let row2: Vec<i64> = vec![1, 0, -1, 0, 0, 1, 0, 0, 0, -1];
        assert_eq!(m.rows[2], row2.iter().map(|&v| rat(v)).collect::<Vec<_>>());
    }

    #[test]
    fn s1_and_s7_conditions() {
        let s1 = entry("S1").unwrap();
        assert_eq!(base_conditions(&s1).nrows(), 1);
        let s7 = entry("S7").unwrap();
        let m = base_conditions(&s7);
        // {s(1,0,0)=0, s_x1(1,0,0)=0}
        assert_eq!(m.rows[0][0], rat(1));
        assert_eq!(m.rows[1][1], rat(1));
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn cubic_system_dimensions() {
        for e in catalog::catalog() {
            let sys = cubic_system(&e).unwrap();
            assert_eq!(
                sys.basis.len(),
                e.degree as usize + 1,
                "{}: system dimension",
                e.id
            );
            // Every basis element satisfies every condition.
            let m = base_conditions(&e);
            for cubic in &sys.basis {
                let v = coeff_vector(cubic);
                for row in &m.rows {
                    let dot: Rat = row.iter().zip(v.iter()).map(|(a, b)| a * b).sum();
                    assert!(dot.is_zero(), "{}: {cubic} violates a condition", e.id);
                }
            }
        }
    }

    #[test]
    fn s4pp_preset_is_accepted_and_spans() {
        let map = s4pp_preset_map().unwrap();
        assert_eq!(map.components.len(), 6);
        assert_eq!(map.target.names(), ["a", "b", "c", "d", "e", "f"]);
    }

    #[test]
    fn bad_basis_choice_is_rejected() {
        let e = entry("S4''").unwrap();
        let src = source_arena();
        // x0^3 does not vanish at p1.
        let bad = vec![
            MPoly::parse(&src, "x0^3").unwrap(),
            MPoly::parse(&src, "x1^3").unwrap(),
            MPoly::parse(&src, "x0*x1^2").unwrap(),
            MPoly::parse(&src, "x1^2*x2").unwrap(),
            MPoly::parse(&src, "x1*x2^2").unwrap(),
            MPoly::parse(&src, "x0*x1*x2").unwrap(),
        ];
        assert!(matches!(
            anticanonical_map(&e, Some(bad)),
            Err(Error::BasisNotInSystem(_))
        ));
    }

    #[test]
    fn implicitize_veronese_toy() {
        // Conic Veronese of P^1: map by (x0^2, x0 x1, x1^2); the image is
        // the conic b^2 - a c. Oracle: substitution kills every generator.
        let src = Arena::from_names(&["x0", "x1"]);
        let comps: Vec<MPoly> = ["x0^2", "x0*x1", "x1^2"]
            .iter()
            .map(|s| MPoly::parse(&src, s).unwrap())
            .collect();
        let map = AnticanonicalMap {
            source: src.clone(),
            target: target_arena(3),
            components: comps.clone(),
        };
        let ideal = implicitize(&map).unwrap();
        for g in ideal.generators() {
            let sub = g.substitute(&src, &comps);
            assert!(sub.is_zero());
        }
        let expected = HomogIdeal::parse(&target_arena(3), &["b^2-ac"]).unwrap();
        assert!(ideal.equals(&expected).unwrap());
    }

    #[test]
    fn s4pp_image_ideal_matches_the_quadric_list() {
        let map = s4pp_preset_map().unwrap();
        let ideal = implicitize(&map).unwrap();
        let tgt = target_arena(6);
        let expected = HomogIdeal::parse(
            &tgt,
            &["ce-df", "d^2-ae", "cd-af", "bd-e^2+f^2", "ab-de+cf"],
        )
        .unwrap();
        assert!(ideal.equals(&expected).unwrap());
        let inv = image_invariants(&ideal).unwrap();
        assert_eq!(inv.dim, 2);
        assert_eq!(inv.degree, BigInt::from(5));
        assert!(inv.quadric_generated);
    }

    #[test]
    fn s4pp_singular_point() {
        let e = entry("S4''").unwrap();
        let map = s4pp_preset_map().unwrap();
        let pts = predicted_singular_points(&e, &map).unwrap();
        assert_eq!(pts.len(), 1);
        let expect: ProjPoint = vec![0, 1, 0, 0, 0, 0].into_iter().map(BigInt::from).collect();
        assert_eq!(pts[0], expect);
    }

    #[test]
    fn smooth_entry_has_no_predicted_points() {
        let e = entry("S3").unwrap();
        let map = anticanonical_map(&e, None).unwrap();
        assert!(predicted_singular_points(&e, &map).unwrap().is_empty());
    }

    #[test]
    fn s7_singular_point_is_on_the_variety() {
        let e = entry("S7").unwrap();
        let map = anticanonical_map(&e, None).unwrap();
        let ideal = implicitize(&map).unwrap();
        let pts = predicted_singular_points(&e, &map).unwrap();
        assert_eq!(pts.len(), 1);
        let coords = point_to_rats(&pts[0]);
        for g in ideal.generators() {
            assert!(g.eval(&coords).is_zero());
        }
        // Rank of the Jacobian drops below the codimension (d - 2 = 5).
        assert!(jacobian_rank_at(&ideal, &pts[0]) < 5);
    }
}
