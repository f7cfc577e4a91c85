//! Global tangent-sheaf bookkeeping: the eight-dimensional space of plane
//! vector fields, lifting conditions through each blow-up, and the
//! step-by-step h0/h1 ledger with its two verification views.
//!
//! A field is recorded by eight coefficients (a1..a8) against the basis
//! (1,0), (x,0), (y,0), (0,1), (0,x), (0,y), (x^2,xy), (xy,y^2) on the
//! affine chart. A field lifts through the blow-up at a point exactly when
//! its lift to the current chart vanishes at that point; each blow-up step
//! therefore contributes the vanishing of the two lifted components as
//! linear conditions on the coefficients.

use crate::arena::Arena;
use crate::catalog::{self, CatalogEntry, Step};
use crate::error::Error;
use crate::ideal::cramer_image_test;
use crate::linalg::QMat;
use crate::poly::{rat, MPoly, Rat};
use crate::Result;

/// Coefficients against the fixed eight-element basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorFieldCoeffs(pub Vec<Rat>);

/// The eight basis fields of the plane: h0 = 8, h1 = 0 seed the ledger.
pub fn p2_basis() -> Vec<VectorFieldCoeffs> {
    (0..8)
        .map(|i| {
            let mut v = vec![Rat::from_integer(0.into()); 8];
            v[i] = rat(1);
            VectorFieldCoeffs(v)
        })
        .collect()
}

fn chart_arena() -> Arena {
    Arena::from_names(&["v", "w"])
}

/// The polynomial pair (P, Q) represented by a coefficient vector:
/// (a1 + a2 x + a3 y + a7 x^2 + a8 xy, a4 + a5 x + a6 y + a7 xy + a8 y^2).
pub fn field_polys(coeffs: &[Rat]) -> (MPoly, MPoly) {
    let a = chart_arena();
    let x = MPoly::var(&a, 0);
    let y = MPoly::var(&a, 1);
    let c = |k: usize| MPoly::constant(&a, coeffs[k].clone());
    let p = c(0)
        .add(&c(1).mul(&x))
        .add(&c(2).mul(&y))
        .add(&c(6).mul(&x).mul(&x))
        .add(&c(7).mul(&x).mul(&y));
    let q = c(3)
        .add(&c(4).mul(&x))
        .add(&c(5).mul(&y))
        .add(&c(6).mul(&x).mul(&y))
        .add(&c(7).mul(&y).mul(&y));
    (p, q)
}

/// Push a field through one chart step: substitute and transform the
/// components by the inverse Jacobian. Divisions must be exact for fields
/// that actually lift; a failed division is an internal error.
fn push_field(p: &MPoly, q: &MPoly, step: &Step, check_cramer: bool) -> Result<(MPoly, MPoly)> {
    let a = chart_arena();
    let v = MPoly::var(&a, 0);
    let w = MPoly::var(&a, 1);
    match step {
        Step::Translate(dx, dy) => {
            let imgs = [
                v.add(&MPoly::constant(&a, dx.clone())),
                w.add(&MPoly::constant(&a, dy.clone())),
            ];
            Ok((p.substitute(&a, &imgs), q.substitute(&a, &imgs)))
        }
        Step::BlowBase => {
            // (V, W) = (v, v w); J = [[1, 0], [w, v]].
            let imgs = [v.clone(), v.mul(&w)];
            let pp = p.substitute(&a, &imgs);
            let qq = q.substitute(&a, &imgs);
            if check_cramer {
                let m = [[MPoly::one(&a), MPoly::zero(&a)], [w.clone(), v.clone()]];
                if !cramer_image_test(&m, &[pp.clone(), qq.clone()])? {
                    return Err(Error::Internal(
                        "field fails the Cramer test at a base chart".into(),
                    ));
                }
            }
            let num = qq.sub(&w.mul(&pp));
            let new_q = num.exact_div(&v).ok_or_else(|| {
                Error::Internal("non-polynomial lift where regularity was expected".into())
            })?;
            Ok((pp, new_q))
        }
        Step::BlowOther => {
            // (V, W) = (v w, v); J = [[w, v], [1, 0]].
            let imgs = [v.mul(&w), v.clone()];
            let pp = p.substitute(&a, &imgs);
            let qq = q.substitute(&a, &imgs);
            if check_cramer {
                let m = [[w.clone(), v.clone()], [MPoly::one(&a), MPoly::zero(&a)]];
                if !cramer_image_test(&m, &[pp.clone(), qq.clone()])? {
                    return Err(Error::Internal(
                        "field fails the Cramer test at the other chart".into(),
                    ));
                }
            }
            let num = pp.sub(&w.mul(&qq));
            let new_p = num.exact_div(&v).ok_or_else(|| {
                Error::Internal("non-polynomial lift where regularity was expected".into())
            })?;
            Ok((qq, new_p))
        }
    }
}

/// Lift a coefficient field to the chart right before blowing up point
/// `i` (0-based). Returns the lifted component pair.
pub fn lift_to_chart(
    entry: &CatalogEntry,
    i: usize,
    coeffs: &[Rat],
    check_cramer: bool,
) -> Result<(MPoly, MPoly)> {
    let (mut p, mut q) = field_polys(coeffs);
    if catalog::chain_vertical(entry, i) {
        // The chart tower is expressed through (y, x): both the components
        // and the variable roles swap.
        let a = chart_arena();
        let swapped_p = q.map_arena(&a, &[1, 0]);
        let swapped_q = p.map_arena(&a, &[1, 0]);
        p = swapped_p;
        q = swapped_q;
    }
    for step in catalog::steps_before(entry, i) {
        let (np, nq) = push_field(&p, &q, &step, check_cramer)?;
        p = np;
        q = nq;
    }
    Ok((p, q))
}

/// One blow-up step: intersect the current subspace with the vanishing of
/// the lifted field at the next point. Returns the new subspace (echelon
/// rows over a1..a8) and the new conditions as ambient rows.
pub fn lift_step(
    subspace: &[Vec<Rat>],
    entry: &CatalogEntry,
    step: usize,
) -> Result<(Vec<Vec<Rat>>, Vec<Vec<Rat>>)> {
    let i = step - 1;
    let m = subspace.len();
    // Evaluation of both lifted components at the chart origin, per basis
    // field of the current subspace.
    let mut eval_rows: Vec<Vec<Rat>> = vec![Vec::with_capacity(m), Vec::with_capacity(m)];
    for basis_field in subspace {
        let (p, q) = lift_to_chart(entry, i, basis_field, false)?;
        let origin = [rat(0), rat(0)];
        eval_rows[0].push(p.eval(&origin));
        eval_rows[1].push(q.eval(&origin));
    }
    let mut eval = QMat::new(eval_rows, m);
    let kernel = eval.kernel_basis();
    let pivots_sub = subspace_pivots(subspace);
    // New subspace: kernel combinations of the old basis, re-echelonized.
    let mut new_rows: Vec<Vec<Rat>> = kernel
        .iter()
        .map(|combo| {
            let mut row = vec![Rat::from_integer(0.into()); 8];
            for (ci, c) in combo.iter().enumerate() {
                if !c.is_zero() {
                    for (j, val) in subspace[ci].iter().enumerate() {
                        let delta = val * c;
                        row[j] += delta;
                    }
                }
            }
            row
        })
        .collect();
    let mut mat = QMat::new(std::mem::take(&mut new_rows), 8);
    mat.rref();
    let new_subspace = mat.rows;
    // Conditions in ambient coordinates, supported on the old pivots.
    let cond_pivots = eval.rref();
    let _ = cond_pivots;
    let mut conditions = Vec::new();
    for row in &eval.rows {
        let mut amb = vec![Rat::from_integer(0.into()); 8];
        for (j, c) in row.iter().enumerate() {
            amb[pivots_sub[j]] = c.clone();
        }
        conditions.push(amb);
    }
    Ok((new_subspace, conditions))
}

fn subspace_pivots(subspace: &[Vec<Rat>]) -> Vec<usize> {
    // Rows are kept in RREF, so each row's first nonzero column is a pivot.
    subspace
        .iter()
        .map(|row| row.iter().position(|v| !v.is_zero()).unwrap())
        .collect()
}

use num_traits::Zero;

/// One recorded blow-up step.
#[derive(Clone, Debug)]
pub struct LedgerStep {
    pub point: usize,
    pub point_type: u8,
    pub conditions: Vec<Vec<Rat>>,
    pub h0_after: usize,
    pub h1_after: usize,
}

/// The full ledger of an entry.
#[derive(Clone, Debug)]
pub struct TangentLedger {
    pub entry_id: String,
    pub steps: Vec<LedgerStep>,
    pub final_subspace: Vec<Vec<Rat>>,
    pub final_h0: usize,
    pub final_h1: usize,
}

/// Run every blow-up step, recording h0/h1 via
/// h1' = h1 + (h0' - h0 + 2).
pub fn ledger(entry: &CatalogEntry) -> Result<TangentLedger> {
    let mut subspace: Vec<Vec<Rat>> = p2_basis().into_iter().map(|c| c.0).collect();
    let mut h0 = 8usize;
    let mut h1 = 0usize;
    let mut steps = Vec::new();
    for step in 1..=entry.points.len() {
        let point_type = catalog::classify_point_type(entry, step)?;
        let (new_subspace, conditions) = lift_step(&subspace, entry, step)?;
        let h0_new = new_subspace.len();
        let drop = h0 - h0_new;
        if drop > 2 {
            return Err(Error::Internal(format!(
                "{}: step {step} dropped h0 by {drop}",
                entry.id
            )));
        }
        let h1_new = h1 + (2 - drop);
        steps.push(LedgerStep {
            point: step,
            point_type,
            conditions,
            h0_after: h0_new,
            h1_after: h1_new,
        });
        subspace = new_subspace;
        h0 = h0_new;
        h1 = h1_new;
    }
    Ok(TangentLedger {
        entry_id: entry.id.to_string(),
        steps,
        final_subspace: subspace,
        final_h0: h0,
        final_h1: h1,
    })
}

/// Per-step comparison of the ledger increments against the combinatorial
/// point types: Type 1 adds 0 to h1, Type 2 adds 1, Type 3 adds 2.
pub struct TddStep {
    pub point: usize,
    pub point_type: u8,
    pub h1_increment: usize,
    pub pass: bool,
}

pub fn verify_tdd(entry: &CatalogEntry, ledger: &TangentLedger) -> Vec<TddStep> {
    let mut prev_h1 = 0usize;
    ledger
        .steps
        .iter()
        .map(|s| {
            let inc = s.h1_after - prev_h1;
            prev_h1 = s.h1_after;
            TddStep {
                point: s.point,
                point_type: s.point_type,
                h1_increment: inc,
                pass: inc == (s.point_type as usize - 1),
            }
        })
        .collect()
}

/// Final h1 must count the (-2)-curves: it equals the lambda sum of the
/// expected singularities.
pub fn verify_cdd(entry: &CatalogEntry, ledger: &TangentLedger) -> bool {
    ledger.final_h1 as u32 == entry.sum_lambda()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::entry;

    fn amb(vals: [i64; 8]) -> Vec<Rat> {
        vals.iter().map(|&v| rat(v)).collect()
    }

    #[test]
    fn basis_has_eight_elements_and_euler_rank() {
        let basis = p2_basis();
        assert_eq!(basis.len(), 8);
        // Element 7 is (x^2, xy).
        let (p, q) = field_polys(&basis[6].0);
        let a = chart_arena();
        assert_eq!(p, MPoly::parse(&a, "v^2").unwrap());
        assert_eq!(q, MPoly::parse(&a, "vw").unwrap());
        // The nine Euler-sequence images span exactly this 8-space: the
        // images of (s0, s1, s2) with s monomials are, on the chart,
        // combinations with the single relation from the Euler field.
        let images: Vec<Vec<Rat>> = vec![
            amb([0, -1, 0, 0, 0, -1, 0, 0]), // (x0,0,0) -> (-x, -y)
            amb([0, 0, 0, 0, 0, 0, -1, 0]),  // (x1,0,0) -> (-x^2, -xy)
            amb([0, 0, 0, 0, 0, 0, 0, -1]),  // (x2,0,0) -> (-xy, -y^2)
            amb([1, 0, 0, 0, 0, 0, 0, 0]),   // (0,x0,0) -> (1, 0)
            amb([0, 1, 0, 0, 0, 0, 0, 0]),   // (0,x1,0) -> (x, 0)
            amb([0, 0, 1, 0, 0, 0, 0, 0]),   // (0,x2,0) -> (y, 0)
            amb([0, 0, 0, 1, 0, 0, 0, 0]),   // (0,0,x0) -> (0, 1)
            amb([0, 0, 0, 0, 1, 0, 0, 0]),   // (0,0,x1) -> (0, x)
            amb([0, 0, 0, 0, 0, 1, 0, 0]),   // (0,0,x2) -> (0, y)
        ];
        let m = QMat::new(images, 8);
        assert_eq!(m.rank(), 8);
    }

    #[test]
    fn first_blowup_kills_a1_and_a4() {
        let s1 = entry("S1").unwrap();
        let subspace: Vec<Vec<Rat>> = p2_basis().into_iter().map(|c| c.0).collect();
        let (new, conditions) = lift_step(&subspace, &s1, 1).unwrap();
        assert_eq!(new.len(), 6);
        assert_eq!(conditions.len(), 2);
        assert_eq!(conditions[0], amb([1, 0, 0, 0, 0, 0, 0, 0])); // a1 = 0
        assert_eq!(conditions[1], amb([0, 0, 0, 1, 0, 0, 0, 0])); // a4 = 0
    }

    #[test]
    fn s7_second_step_kills_a5() {
        let s7 = entry("S7").unwrap();
        let led = ledger(&s7).unwrap();
        // The first lifted component vanishes identically on the surviving
        // space; the single surviving condition is a5 = 0.
        assert_eq!(led.steps[1].conditions.len(), 1);
        assert_eq!(led.steps[1].conditions[0], amb([0, 0, 0, 0, 1, 0, 0, 0]));
        assert_eq!(led.final_h0, 5);
        assert_eq!(led.final_h1, 1);
    }

    #[test]
    fn worked_ledger_sequence_p2_s1_s7() {
        let s7 = entry("S7").unwrap();
        let led = ledger(&s7).unwrap();
        let h0: Vec<usize> = led.steps.iter().map(|s| s.h0_after).collect();
        let h1: Vec<usize> = led.steps.iter().map(|s| s.h1_after).collect();
        assert_eq!(h0, vec![6, 5]);
        assert_eq!(h1, vec![0, 1]);
    }

    #[test]
    fn s1_ledger() {
        let s1 = entry("S1").unwrap();
        let led = ledger(&s1).unwrap();
        assert_eq!(led.final_h0, 6);
        assert_eq!(led.final_h1, 0);
    }

    #[test]
    fn s2_step_two_drops_by_two() {
        let s2 = entry("S2").unwrap();
        let led = ledger(&s2).unwrap();
        assert_eq!(led.steps[1].h0_after, 4);
        assert_eq!(led.steps[1].h1_after, 0);
        assert_eq!(led.steps[1].point_type, 1);
    }

    #[test]
    fn all_entries_match_types_and_lambda_sums() {
        for e in catalog::catalog() {
            let led = ledger(&e).unwrap();
            for step in verify_tdd(&e, &led) {
                assert!(
                    step.pass,
                    "{}: step {} type {} but increment {}",
                    e.id, step.point, step.point_type, step.h1_increment
                );
            }
            assert!(
                verify_cdd(&e, &led),
                "{}: final h1 = {} but lambda sum = {}",
                e.id,
                led.final_h1,
                e.sum_lambda()
            );
            // Monotone h0, drops in {0, 1, 2}.
            let mut h0 = 8;
            for s in &led.steps {
                assert!(s.h0_after <= h0 && h0 - s.h0_after <= 2);
                h0 = s.h0_after;
            }
        }
    }

    #[test]
    fn s9p_ledger_reaches_four() {
        let e = entry("S9'").unwrap();
        let led = ledger(&e).unwrap();
        assert_eq!(led.final_h1, 4);
        let types: Vec<u8> = led.steps.iter().map(|s| s.point_type).collect();
        assert_eq!(types, vec![1, 2, 3, 2]);
    }

    #[test]
    fn surviving_fields_vanish_at_every_point_and_pass_cramer() {
        for e in catalog::catalog() {
            let led = ledger(&e).unwrap();
            for field in &led.final_subspace {
                for i in 0..e.points.len() {
                    let (p, q) = lift_to_chart(&e, i, field, true).unwrap();
                    assert!(p.eval(&[rat(0), rat(0)]).is_zero(), "{}", e.id);
                    assert!(q.eval(&[rat(0), rat(0)]).is_zero(), "{}", e.id);
                }
            }
        }
    }
}
