//! Local analysis at singular points: reduction to a three-variable
//! hypersurface jet, Tjurina numbers, A-type classification, and the
//! Jacobian-ideal membership count for hyperplane sections.

use num_traits::Zero;

use crate::arena::Arena;
use crate::catalog::CatalogEntry;
use crate::embed::{self, AnticanonicalMap, ProjPoint};
use crate::error::Error;
use crate::ideal::HomogIdeal;
use crate::jet::{self, Jet};
use crate::linalg::QMat;
use crate::poly::{rat, MPoly, Monomial, Rat};
use crate::Result;

/// Default working truncation for an expected A-lambda point, with the
/// escalation cap used when the staircase touches the boundary.
pub fn default_truncation(lambda_hint: u32) -> usize {
    (lambda_hint as usize + 3).max(5)
}
pub const MAX_TRUNCATION: usize = 12;

/// Dehomogenize an ideal at the first nonzero coordinate of `point` and
/// translate that point to the origin. Returns the affine generators, the
/// affine arena, the pivot index, and the affine coordinates of the point.
pub fn localize(
    ideal: &HomogIdeal,
    point: &ProjPoint,
) -> Result<(Vec<MPoly>, Arena, usize, Vec<Rat>)> {
    let n = ideal.arena().len();
    assert_eq!(point.len(), n);
    let coords = embed::point_to_rats(point);
    for g in ideal.generators() {
        if !g.eval(&coords).is_zero() {
            return Err(Error::PointNotOnVariety(format!(
                "{g} does not vanish at the point"
            )));
        }
    }
    let pivot = coords
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::PointNotOnVariety("zero vector is not a point".into()))?;
    let affine_names: Vec<String> = ideal
        .arena()
        .names()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != pivot)
        .map(|(_, s)| s.clone())
        .collect();
    let affine = Arena::new(affine_names);
    // x_pivot -> 1, x_i -> u_i + q_i / q_pivot.
    let scale = coords[pivot].clone();
    let mut center = Vec::new();
    let mut images = Vec::new();
    let mut k = 0usize;
    for i in 0..n {
        if i == pivot {
            images.push(MPoly::one(&affine));
        } else {
            let c = &coords[i] / &scale;
            images.push(MPoly::var(&affine, k).add(&MPoly::constant(&affine, c.clone())));
            center.push(c);
            k += 1;
        }
    }
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.substitute(&affine, &images))
        .collect();
    Ok((gens, affine, pivot, center))
}

/// Local model of an isolated hypersurface point: jets solving the
/// variables with independent linear parts, and the residual equation.
#[derive(Clone, Debug)]
pub struct LocalModel {
    pub point: ProjPoint,
    pub pivot: usize,
    pub affine_arena: Arena,
    pub affine_center: Vec<Rat>,
    /// Indices (into the affine arena) of the three free local variables.
    pub free_vars: Vec<usize>,
    pub local_arena: Arena,
    /// (affine variable index, jet solution over the local arena).
    pub solved: Vec<(usize, Jet)>,
    /// The residual hypersurface equation.
    pub equation: Jet,
    pub trunc: usize,
}

/// Build the local model from affine generators centered at the origin.
///
/// The linear parts must have rank #vars - 3 (embedding dimension 3); the
/// pivoted variables are solved by successive substitution, and all
/// remaining generators must land in the principal ideal of the
/// minimal-order residual modulo the truncation.
pub fn local_model(
    gens: &[MPoly],
    arena: &Arena,
    trunc: usize,
    point: ProjPoint,
    pivot: usize,
    center: Vec<Rat>,
) -> Result<LocalModel> {
    let n = arena.len();
    // Linear-part matrix, rows = generators.
    let lin_rows: Vec<Vec<Rat>> = gens
        .iter()
        .map(|g| (0..n).map(|v| g.coeff(&Monomial::var(n, v))).collect())
        .collect();
    let mut aug = QMat::new(
        lin_rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend((0..gens.len()).map(|j| if i == j { rat(1) } else { rat(0) }));
                r
            })
            .collect(),
        n + gens.len(),
    );
    let pivots_aug = aug.rref();
    let pivot_cols: Vec<usize> = pivots_aug.iter().copied().filter(|&c| c < n).collect();
    let rank = pivot_cols.len();
    if rank != n - 3 {
        return Err(Error::EmbeddingDimension(format!(
            "linear-part rank {rank}, expected {} (embedding dimension {})",
            n - 3,
            n - rank
        )));
    }
    let free_vars: Vec<usize> = (0..n).filter(|v| !pivot_cols.contains(v)).collect();
    let local_arena = Arena::new(
        free_vars
            .iter()
            .map(|&v| arena.name(v).to_string())
            .collect::<Vec<_>>(),
    );
    // Combined generators with unit pivot linear parts.
    let combos: Vec<MPoly> = aug
        .rows
        .iter()
        .take(rank)
        .map(|row| {
            let mut acc = MPoly::zero(arena);
            for (j, c) in row[n..].iter().enumerate() {
                if !c.is_zero() {
                    acc = acc.add(&gens[j].scale(c));
                }
            }
            acc
        })
        .collect();
    // Successive substitution: u_j <- u_j - h_j(u, v), gaining one order
    // of accuracy per pass.
    let mut solutions: Vec<Jet> = vec![Jet::zero(&local_arena, trunc); rank];
    for _pass in 0..trunc + 1 {
        let images = build_images(arena, &pivot_cols, &free_vars, &solutions, &local_arena, trunc);
        for (j, combo) in combos.iter().enumerate() {
            let value = jet::substitute_jets(combo, &images, &local_arena, trunc);
            solutions[j] = solutions[j].sub(&value);
        }
    }
    // Verify the solving generators vanish identically mod the truncation.
    let images = build_images(arena, &pivot_cols, &free_vars, &solutions, &local_arena, trunc);
    for combo in &combos {
        let value = jet::substitute_jets(combo, &images, &local_arena, trunc);
        if !value.is_zero() {
            return Err(Error::Internal(
                "pivot solving did not converge at the working truncation".into(),
            ));
        }
    }
    // Residuals of every generator; all must fall in the principal ideal
    // of the minimal-order one.
    let residuals: Vec<Jet> = gens
        .iter()
        .map(|g| jet::substitute_jets(g, &images, &local_arena, trunc))
        .filter(|r| !r.is_zero())
        .collect();
    let equation = residuals
        .iter()
        .min_by_key(|r| r.order().unwrap())
        .cloned()
        .ok_or_else(|| {
            Error::Internal("no residual equation: input was a complete intersection".into())
        })?;
    let monos = jet::monomials_below(3, trunc);
    let span = jet::ideal_span(std::slice::from_ref(&equation), trunc, &monos);
    for r in &residuals {
        if !span.row_span_contains(&jet::jet_vector(r, &monos)) {
            return Err(Error::NotHypersurface(format!(
                "independent residual {} besides {}",
                r.poly(),
                equation.poly()
            )));
        }
    }
    if equation.order() == Some(1) {
        return Err(Error::Internal(
            "residual of order one contradicts the rank computation".into(),
        ));
    }
    Ok(LocalModel {
        point,
        pivot,
        affine_arena: arena.clone(),
        affine_center: center,
        free_vars,
        local_arena,
        solved: pivot_cols.into_iter().zip(solutions).collect(),
        equation,
        trunc,
    })
}

fn build_images(
    arena: &Arena,
    pivot_cols: &[usize],
    free_vars: &[usize],
    solutions: &[Jet],
    local_arena: &Arena,
    trunc: usize,
) -> Vec<Jet> {
    let mut images = vec![Jet::zero(local_arena, trunc); arena.len()];
    for (k, &v) in pivot_cols.iter().enumerate() {
        images[v] = solutions[k].clone();
    }
    for (k, &v) in free_vars.iter().enumerate() {
        images[v] = Jet::new(MPoly::var(local_arena, k), trunc);
    }
    images
}

/// Tjurina number and a monomial basis of the Tjurina algebra
/// k[[x,y,z]] / (f, df/dx, df/dy, df/dz), computed on jets. The dimension
/// must be stable against lowering the working order by one, otherwise the
/// truncation is declared too small.
pub fn tjurina(f: &Jet) -> Result<(u32, Vec<Monomial>)> {
    let n = f.trunc();
    if n < 3 {
        return Err(Error::TruncationTooSmall("need order at least 3".into()));
    }
    let (tau, basis) = tjurina_at(f, n)?;
    let (tau_lower, _) = tjurina_at(f, n - 1)?;
    if tau != tau_lower {
        return Err(Error::TruncationTooSmall(format!(
            "dimension {tau} at order {n} vs {tau_lower} at order {}",
            n - 1
        )));
    }
    Ok((tau, basis))
}

/// Quotient dimension of the jet space of order < `bound` by the span of
/// (f, partials) plus everything of degree >= bound - 1.
fn tjurina_at(f: &Jet, bound: usize) -> Result<(u32, Vec<Monomial>)> {
    let arena = f.arena().clone();
    assert_eq!(arena.len(), 3);
    let gens: Vec<Jet> = std::iter::once(f.cut(bound))
        .chain((0..3).map(|v| f.derivative(v).cut(bound)))
        .collect();
    let monos = jet::monomials_below(3, bound);
    let mut span = jet::ideal_span(&gens, bound, &monos);
    // Cap: monomials of degree exactly bound - 1 are declared inside.
    for (idx, m) in monos.iter().enumerate() {
        if m.degree() as usize == bound - 1 {
            let mut row = vec![Rat::zero(); monos.len()];
            row[idx] = rat(1);
            span.rows.push(row);
        }
    }
    let pivots = span.rref();
    let quotient: Vec<Monomial> = monos
        .iter()
        .enumerate()
        .filter(|(i, _)| !pivots.contains(i))
        .map(|(_, m)| m.clone())
        .collect();
    Ok((quotient.len() as u32, quotient))
}

/// A-type classification via the Hessian corank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdeType {
    A(u32),
    NotAType,
}

pub fn hessian_corank(f: &Jet) -> usize {
    let n = 3;
    let mut rows = Vec::new();
    for i in 0..n {
        let mut row = Vec::new();
        for j in 0..n {
            let mut exps = [0u16; 3];
            exps[i] += 1;
            exps[j] += 1;
            let c = f.poly().coeff(&Monomial::from_exps(&exps));
            row.push(if i == j { c * rat(2) } else { c });
        }
        rows.push(row);
    }
    n - QMat::new(rows, n).rank()
}

/// A_tau when the Hessian corank is at most 1, otherwise not A-type.
pub fn classify_ade(f: &Jet) -> Result<AdeType> {
    let (tau, _) = tjurina(f)?;
    let corank = hessian_corank(f);
    if corank <= 1 {
        if corank == 0 {
            debug_assert_eq!(tau, 1);
        }
        Ok(AdeType::A(tau))
    } else {
        Ok(AdeType::NotAType)
    }
}

/// Full report for one singular point.
#[derive(Clone, Debug)]
pub struct SingularityReport {
    pub point: ProjPoint,
    pub ade: AdeType,
    pub tjurina: u32,
    pub hessian_corank: usize,
    pub model: LocalModel,
}

/// Localize and analyze one singular point of an image ideal, escalating
/// the truncation when the Tjurina staircase touches the boundary.
pub fn analyze_point(
    ideal: &HomogIdeal,
    point: &ProjPoint,
    lambda_hint: u32,
) -> Result<SingularityReport> {
    let (gens, arena, pivot, center) = localize(ideal, point)?;
    let mut trunc = default_truncation(lambda_hint);
    loop {
        let model = local_model(&gens, &arena, trunc, point.clone(), pivot, center.clone())?;
        match tjurina(&model.equation) {
            Ok((tau, _)) => {
                let corank = hessian_corank(&model.equation);
                let ade = classify_ade(&model.equation)?;
                return Ok(SingularityReport {
                    point: point.clone(),
                    ade,
                    tjurina: tau,
                    hessian_corank: corank,
                    model,
                });
            }
            Err(Error::TruncationTooSmall(_)) if trunc + 2 <= MAX_TRUNCATION => {
                trunc += 2;
            }
            Err(e) => return Err(e),
        }
    }
}

/// Restrict a linear form in the ambient coordinates to the local model:
/// dehomogenize at the pivot, translate, substitute the solved jets.
pub fn restrict_linear(model: &LocalModel, s: &MPoly) -> Jet {
    let n_amb = s.arena().len();
    let trunc = model.trunc;
    let mut images = Vec::with_capacity(n_amb);
    let mut k = 0usize;
    for i in 0..n_amb {
        if i == model.pivot {
            images.push(Jet::new(MPoly::one(&model.local_arena), trunc));
        } else {
            let center = model.affine_center[k].clone();
            let var = affine_var_jet(model, k);
            images.push(var.add(&Jet::new(
                MPoly::constant(&model.local_arena, center),
                trunc,
            )));
            k += 1;
        }
    }
    jet::substitute_jets(s, &images, &model.local_arena, trunc)
}

/// The jet of affine variable `k` (index into the affine arena): either a
/// free local coordinate or its solved series.
fn affine_var_jet(model: &LocalModel, k: usize) -> Jet {
    if let Some(pos) = model.free_vars.iter().position(|&v| v == k) {
        Jet::new(MPoly::var(&model.local_arena, pos), model.trunc)
    } else {
        let (_, jet) = model
            .solved
            .iter()
            .find(|(v, _)| *v == k)
            .expect("variable is either free or solved");
        jet.clone()
    }
}

/// Membership of a linear form's germ in the Tjurina ideal, decided modulo
/// m^lambda (valid because m^lambda lies inside the Tjurina ideal of an
/// A_lambda point).
pub fn jacobian_membership(model: &LocalModel, lambda: u32, s: &MPoly) -> Result<bool> {
    let bound = lambda as usize;
    if bound + 1 > model.trunc {
        return Err(Error::TruncationTooSmall(format!(
            "model truncated at {} but membership needs {}",
            model.trunc, bound
        )));
    }
    if bound == 0 {
        return Ok(true);
    }
    let restricted = restrict_linear(model, s).cut(bound);
    let monos = jet::monomials_below(3, bound);
    let span = tjurina_span(model, bound, &monos);
    Ok(span.row_span_contains(&jet::jet_vector(&restricted, &monos)))
}

fn tjurina_span(model: &LocalModel, bound: usize, monos: &[Monomial]) -> QMat {
    let f = &model.equation;
    let gens: Vec<Jet> = std::iter::once(f.cut(bound))
        .chain((0..3).map(|v| f.derivative(v).cut(bound)))
        .collect();
    jet::ideal_span(&gens, bound, monos)
}

/// Dimension (and condition rows on the hyperplane coefficients) of the
/// subspace of hyperplane sections lying in every Jacobian ideal.
pub struct JacobianKernel {
    pub dim_total: usize,
    pub dim_kernel: usize,
    /// RREF rows over the d + 1 hyperplane coefficients.
    pub conditions: Vec<Vec<Rat>>,
    pub reports: Vec<SingularityReport>,
}

/// The central count: hyperplane sections whose germs lie in the Jacobian
/// ideal at every singular point.
pub fn jacobian_kernel(
    entry: &CatalogEntry,
    map: &AnticanonicalMap,
    ideal: &HomogIdeal,
) -> Result<JacobianKernel> {
    let points = embed::predicted_singular_points(entry, map)?;
    let total = map.components.len();
    let lambda_hint = entry
        .expected_singularities
        .iter()
        .max()
        .copied()
        .unwrap_or(1);
    let mut condition_rows: Vec<Vec<Rat>> = Vec::new();
    let mut reports = Vec::new();
    for point in &points {
        let report = analyze_point(ideal, point, lambda_hint)?;
        let bound = (report.tjurina as usize).max(1);
        let monos = jet::monomials_below(3, bound);
        let mut span = tjurina_span(&report.model, bound, &monos);
        let span_pivots = span.rref();
        // Reduce the restriction of each ambient coordinate by the span;
        // what survives in the non-pivot (quotient) columns must vanish.
        let mut residuals: Vec<Vec<Rat>> = Vec::new();
        for k in 0..total {
            let coord = MPoly::var(ideal.arena(), k);
            let restricted = restrict_linear(&report.model, &coord).cut(bound);
            let mut vec = jet::jet_vector(&restricted, &monos);
            for (ri, &pc) in span_pivots.iter().enumerate() {
                if !vec[pc].is_zero() {
                    let factor = vec[pc].clone();
                    for (j, v) in vec.iter_mut().enumerate() {
                        let delta = &span.rows[ri][j] * &factor;
                        *v -= delta;
                    }
                }
            }
            residuals.push(vec);
        }
        for j in 0..monos.len() {
            if span_pivots.contains(&j) {
                continue;
            }
            let row: Vec<Rat> = (0..total).map(|k| residuals[k][j].clone()).collect();
            if row.iter().any(|v| !v.is_zero()) {
                condition_rows.push(row);
            }
        }
        reports.push(report);
    }
    let mut mat = QMat::new(condition_rows, total);
    let kernel_dim = total - mat.rank();
    mat.rref();
    Ok(JacobianKernel {
        dim_total: total,
        dim_kernel: kernel_dim,
        conditions: mat.rows.clone(),
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn jet_of(arena: &Arena, text: &str, trunc: usize) -> Jet {
        Jet::new(MPoly::parse(arena, text).unwrap(), trunc)
    }

    #[test]
    fn tjurina_of_basic_models() {
        let a = Arena::from_names(&["x", "y", "z"]);
        // A1: x^2 + y^2 + z^2.
        let (tau, basis) = tjurina(&jet_of(&a, "x^2+y^2+z^2", 6)).unwrap();
        assert_eq!(tau, 1);
        assert_eq!(basis.len(), 1);
        // A4: x^5 + yz; quotient basis {1, x, x^2, x^3}.
        let (tau, basis) = tjurina(&jet_of(&a, "x^5+yz", 8)).unwrap();
        assert_eq!(tau, 4);
        assert_eq!(basis.len(), 4);
        assert!(basis.iter().all(|m| m.exp(1) == 0 && m.exp(2) == 0));
    }

    #[test]
    fn tjurina_of_the_a2_chart_equation() {
        let a = Arena::from_names(&["c", "e", "f"]);
        let (tau, basis) = tjurina(&jet_of(&a, "ce-fe^2+f^3", 6)).unwrap();
        assert_eq!(tau, 2);
        // Basis {1, f}.
        assert_eq!(basis.len(), 2);
        assert!(basis.contains(&Monomial::from_exps(&[0, 0, 0])));
        assert!(basis.contains(&Monomial::from_exps(&[0, 0, 1])));
    }

    #[test]
    fn classify_ade_examples() {
        let a = Arena::from_names(&["x", "y", "z"]);
        assert_eq!(
            classify_ade(&jet_of(&a, "x^2+y^2+z^2", 6)).unwrap(),
            AdeType::A(1)
        );
        let cef = Arena::from_names(&["c", "e", "f"]);
        assert_eq!(
            classify_ade(&jet_of(&cef, "ce-fe^2+f^3", 6)).unwrap(),
            AdeType::A(2)
        );
        assert_eq!(
            classify_ade(&jet_of(&a, "x^3+y^3+z^3", 6)).unwrap(),
            AdeType::NotAType
        );
    }

    #[test]
    fn truncation_escalation_is_reported() {
        let a = Arena::from_names(&["x", "y", "z"]);
        // x^5 + yz at truncation 5: the staircase touches the boundary.
        assert!(matches!(
            tjurina(&jet_of(&a, "x^5+yz", 5)),
            Err(Error::TruncationTooSmall(_))
        ));
    }

    #[test]
    fn localize_rejects_off_variety_points() {
        let arena = Arena::from_names(&["x0", "x1", "x2"]);
        let ideal = HomogIdeal::parse(&arena, &["x0"]).unwrap();
        let bad: ProjPoint = vec![1.into(), 0.into(), 0.into()];
        assert!(matches!(
            localize(&ideal, &bad),
            Err(Error::PointNotOnVariety(_))
        ));
        let good: ProjPoint = vec![0.into(), 1.into(), 0.into()];
        let (gens, affine, pivot, _) = localize(&ideal, &good).unwrap();
        assert_eq!(pivot, 1);
        assert_eq!(affine.names(), ["x0", "x2"]);
        assert_eq!(gens.len(), 1);
    }

    #[test]
    fn local_model_of_hypersurface_input_is_the_jet() {
        let a = Arena::from_names(&["x", "y", "z"]);
        let gens = vec![MPoly::parse(&a, "x^2+y^2+z^3").unwrap()];
        let model = local_model(&gens, &a, 6, vec![], 0, vec![]).unwrap();
        assert!(model.solved.is_empty());
        assert_eq!(
            model.equation.poly(),
            &MPoly::parse(&a, "x^2+y^2+z^3").unwrap()
        );
    }

    #[test]
    fn smooth_point_is_an_embedding_dimension_error() {
        let a = Arena::from_names(&["x", "y", "z"]);
        let gens = vec![MPoly::parse(&a, "x+y^2").unwrap()];
        assert!(matches!(
            local_model(&gens, &a, 6, vec![], 0, vec![]),
            Err(Error::EmbeddingDimension(_))
        ));
    }

    #[test]
    fn s4pp_local_model_matches_the_worked_case() {
        let e = catalog::entry("S4''").unwrap();
        let map = embed::s4pp_preset_map().unwrap();
        let ideal = embed::implicitize(&map).unwrap();
        let pts = embed::predicted_singular_points(&e, &map).unwrap();
        let report = analyze_point(&ideal, &pts[0], 2).unwrap();
        assert_eq!(report.ade, AdeType::A(2));
        assert_eq!(report.tjurina, 2);
        assert_eq!(report.hessian_corank, 1);
        // Solved variables: a = -cf + e^3 - f^2 e and d = e^2 - f^2, jets
        // over (c, e, f).
        let la = &report.model.local_arena;
        assert_eq!(la.names(), ["c", "e", "f"]);
        let d_jet = report
            .model
            .solved
            .iter()
            .find(|(v, _)| report.model.affine_arena.name(*v) == "d")
            .map(|(_, j)| j.clone())
            .unwrap();
        assert_eq!(d_jet.poly(), &MPoly::parse(la, "e^2-f^2").unwrap());
        let a_jet = report
            .model
            .solved
            .iter()
            .find(|(v, _)| report.model.affine_arena.name(*v) == "a")
            .map(|(_, j)| j.clone())
            .unwrap();
        assert_eq!(
            jet::truncate(a_jet.poly(), 4),
            MPoly::parse(la, "-cf+e^3-f^2e").unwrap()
        );
        // Local equation generates the same jet ideal as ce - f e^2 + f^3.
        let target = Jet::new(MPoly::parse(la, "ce-fe^2+f^3").unwrap(), 4);
        let monos = jet::monomials_below(3, 4);
        let span_f =
            jet::ideal_span(std::slice::from_ref(&report.model.equation), 4, &monos);
        assert!(span_f.row_span_contains(&jet::jet_vector(&target, &monos)));
        let span_t = jet::ideal_span(std::slice::from_ref(&target), 4, &monos);
        assert!(span_t
            .row_span_contains(&jet::jet_vector(&report.model.equation.cut(4), &monos)));
    }

    #[test]
    fn s4pp_jacobian_membership_matches_the_kernel_conditions() {
        let e = catalog::entry("S4''").unwrap();
        let map = embed::s4pp_preset_map().unwrap();
        let ideal = embed::implicitize(&map).unwrap();
        let pts = embed::predicted_singular_points(&e, &map).unwrap();
        let report = analyze_point(&ideal, &pts[0], 2).unwrap();
        let tgt = ideal.arena();
        // c is in (c, e, f^2); b restricts to a unit; f is not in the ideal.
        assert!(jacobian_membership(&report.model, 2, &MPoly::var_named(tgt, "c")).unwrap());
        assert!(!jacobian_membership(&report.model, 2, &MPoly::var_named(tgt, "b")).unwrap());
        assert!(!jacobian_membership(&report.model, 2, &MPoly::var_named(tgt, "f")).unwrap());
        assert!(jacobian_membership(&report.model, 2, &MPoly::var_named(tgt, "d")).unwrap());

        let kernel = jacobian_kernel(&e, &map, &ideal).unwrap();
        assert_eq!(kernel.dim_total, 6);
        assert_eq!(kernel.dim_kernel, 4);
        // Conditions exactly mu_2 = mu_6 = 0 (coordinates b and f).
        let mut expect_b = vec![Rat::zero(); 6];
        expect_b[1] = rat(1);
        let mut expect_f = vec![Rat::zero(); 6];
        expect_f[5] = rat(1);
        assert_eq!(kernel.conditions, vec![expect_b, expect_f]);
    }

    #[test]
    fn smooth_entry_kernel_is_everything() {
        let e = catalog::entry("S3").unwrap();
        let map = embed::anticanonical_map(&e, None).unwrap();
        let ideal = embed::implicitize(&map).unwrap();
        let kernel = jacobian_kernel(&e, &map, &ideal).unwrap();
        assert_eq!(kernel.dim_total, 7);
        assert_eq!(kernel.dim_kernel, 7);
    }

    #[test]
    fn membership_is_linear() {
        // The qualifying set is closed under addition and scaling.
        let e = catalog::entry("S4''").unwrap();
        let map = embed::s4pp_preset_map().unwrap();
        let ideal = embed::implicitize(&map).unwrap();
        let pts = embed::predicted_singular_points(&e, &map).unwrap();
        let report = analyze_point(&ideal, &pts[0], 2).unwrap();
        let tgt = ideal.arena();
        let c = MPoly::var_named(tgt, "c");
        let d = MPoly::var_named(tgt, "d");
        let combo = c.scale(&rat(3)).add(&d.scale(&rat(-7)));
        assert!(jacobian_membership(&report.model, 2, &combo).unwrap());
        let b = MPoly::var_named(tgt, "b");
        let bad = combo.add(&b);
        assert!(!jacobian_membership(&report.model, 2, &bad).unwrap());
    }
}
