//! The 22 configurations of at most four points in almost general position
//! on the projective plane, their blow-up chart towers, the negative-curve
//! lattice bookkeeping, and the expected singularity table.
//!
//! Conventions. Homogeneous coordinates [x0:x1:x2]; the affine chart
//! U0 = {x0 != 0} carries x = x1/x0, y = x2/x0, and every catalog point is
//! normalized to have x0 = 1. A direction [u:v] in the projectivized
//! tangent space at a point means dx:dy = u:v, so [1:0] is the tangent
//! direction of the line {y = const} and [0:1] that of {x = const}.

use serde::Serialize;

use crate::arena::Arena;
use crate::error::Error;
use crate::poly::{rat, MPoly, Rat};
use crate::Result;

/// One base point of a configuration: either a plane point of U0 or a
/// point infinitely near a previous one, given by a tangent direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePoint {
    /// 0-based index of the point this one is infinitely near to.
    pub parent: Option<usize>,
    pub location: Location,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    /// Homogeneous coordinates, normalized with x0 = 1.
    Plane(i64, i64, i64),
    /// Direction [u:v] in the projectivized tangent space of the parent.
    Dir(i64, i64),
}

impl BasePoint {
    pub fn plane(x1: i64, x2: i64) -> Self {
        BasePoint {
            parent: None,
            location: Location::Plane(1, x1, x2),
        }
    }

    pub fn near(parent_1based: usize, u: i64, v: i64) -> Self {
        assert!((u, v) != (0, 0), "direction must be a nonzero pair");
        BasePoint {
            parent: Some(parent_1based - 1),
            location: Location::Dir(u, v),
        }
    }

    /// Affine coordinates on U0 for plane points.
    pub fn affine(&self) -> Option<(Rat, Rat)> {
        match self.location {
            Location::Plane(x0, x1, x2) => {
                assert_eq!(x0, 1);
                Some((rat(x1), rat(x2)))
            }
            Location::Dir(..) => None,
        }
    }

    /// Direction as (vertical?, slope): [0:1] is vertical, [u:v] with
    /// u != 0 has slope v/u.
    pub fn direction(&self) -> Option<(bool, Rat)> {
        match self.location {
            Location::Plane(..) => None,
            Location::Dir(0, _) => Some((true, rat(0))),
            Location::Dir(u, v) => Some((false, Rat::new(v.into(), u.into()))),
        }
    }
}

/// Divisor class in Pic of the blow-up, basis (H; E1..E4).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CurveClass {
    pub h: i64,
    pub e: [i64; 4],
}

impl CurveClass {
    pub fn exceptional(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        CurveClass { h: 0, e }
    }

    pub fn dot(&self, o: &CurveClass) -> i64 {
        self.h * o.h - self.e.iter().zip(o.e.iter()).map(|(a, b)| a * b).sum::<i64>()
    }

    pub fn self_int(&self) -> i64 {
        self.dot(self)
    }

    /// Pairing with the canonical class K = -3H + E1 + ... + E4.
    pub fn k_dot(&self) -> i64 {
        -3 * self.h - self.e.iter().sum::<i64>()
    }
}

/// A negative curve on a prefix blow-up: its class plus enough geometry to
/// test incidence with later points.
#[derive(Clone, Debug)]
pub struct NegCurve {
    pub class: CurveClass,
    pub kind: NegCurveKind,
}

#[derive(Clone, Debug)]
pub enum NegCurveKind {
    /// Strict transform of the exceptional curve of blow-up `i` (0-based).
    Exceptional(usize),
    /// Strict transform of a plane line; the affine equation over (x, y)
    /// and the 0-based incident configuration points.
    Line { equation: MPoly, incident: Vec<usize> },
}

impl NegCurve {
    pub fn self_int(&self) -> i64 {
        self.class.self_int()
    }
}

/// One of the 22 blow-up configurations.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub points: Vec<BasePoint>,
    /// Declared collinear triples, 1-based point indices.
    pub collinear_sets: Vec<Vec<usize>>,
    pub degree: u32,
    /// Multiset of lambda values of the expected A-type singularities,
    /// ascending.
    pub expected_singularities: Vec<u32>,
}

impl CatalogEntry {
    pub fn sum_lambda(&self) -> u32 {
        self.expected_singularities.iter().sum()
    }
}

/// The 22 configurations, in the paper's presentation order.
pub fn catalog() -> Vec<CatalogEntry> {
    use BasePoint as P;
    let e = |id, points: Vec<BasePoint>, coll: Vec<Vec<usize>>, sing: Vec<u32>| {
        let degree = 9 - points.len() as u32;
        CatalogEntry {
            id,
            points,
            collinear_sets: coll,
            degree,
            expected_singularities: sing,
        }
    };
    vec![
        e("P2", vec![], vec![], vec![]),
        e("S1", vec![P::plane(0, 0)], vec![], vec![]),
        e("S2", vec![P::plane(0, 0), P::plane(0, 1)], vec![], vec![]),
        e("S7", vec![P::plane(0, 0), P::near(1, 1, 0)], vec![], vec![1]),
        e(
            "S3",
            vec![P::plane(0, 0), P::plane(0, 1), P::plane(1, 0)],
            vec![],
            vec![],
        ),
        e(
            "S4",
            vec![P::plane(0, 0), P::plane(0, 1), P::plane(0, -1)],
            vec![vec![1, 2, 3]],
            vec![1],
        ),
        e(
            "S5",
            vec![P::plane(0, 0), P::plane(0, 1), P::near(1, 1, 0)],
            vec![],
            vec![1],
        ),
        e(
            "S6",
            vec![P::plane(0, 0), P::plane(0, 1), P::near(1, 0, 1)],
            vec![vec![1, 2, 3]],
            vec![1, 1],
        ),
        e(
            "S8",
            vec![P::plane(0, 0), P::near(1, 1, 0), P::near(2, 1, 1)],
            vec![],
            vec![2],
        ),
        e(
            "S9",
            vec![P::plane(0, 0), P::near(1, 1, 0), P::near(2, 1, 0)],
            vec![vec![1, 2, 3]],
            vec![1, 2],
        ),
        e(
            "S3'",
            vec![
                P::plane(0, 0),
                P::plane(0, 1),
                P::plane(1, 0),
                P::plane(1, -1),
            ],
            vec![],
            vec![],
        ),
        e(
            "S4'",
            vec![
                P::plane(0, 0),
                P::plane(0, 1),
                P::plane(0, -1),
                P::plane(1, 0),
            ],
            vec![vec![1, 2, 3]],
            vec![1],
        ),
        // The printed representative direction [1:0] for p4 would put p4 on
        // the line through p1 and p3, against the declared "no three
        // collinear"; [1:1] realizes the declared configuration.
        e(
            "S3''",
            vec![
                P::plane(0, 0),
                P::plane(0, 1),
                P::plane(1, 0),
                P::near(1, 1, 1),
            ],
            vec![],
            vec![1],
        ),
        e(
            "S3'''",
            vec![
                P::plane(0, 0),
                P::plane(0, 1),
                P::plane(1, 0),
                P::near(1, 0, 1),
            ],
            vec![vec![1, 2, 4]],
            vec![1, 1],
        ),
        e(
            "S4''",
            vec![
                P::plane(0, 0),
                P::plane(0, 1),
                P::plane(0, -1),
                P::near(1, 1, 0),
            ],
            vec![vec![1, 2, 3]],
            vec![2],
        ),
        e(
            "S5'",
            vec![
                P::plane(0, 0),
                P::plane(0, 1),
                P::near(1, 1, 0),
                P::near(2, 1, 0),
            ],
            vec![],
            vec![1, 1],
        ),
        e(
            "S5''",
            vec![
                P::plane(0, 0),
                P::plane(0, 1),
                P::near(1, 1, 0),
                P::near(3, 1, 1),
            ],
            vec![],
            vec![2],
        ),
        e(
            "S5'''",
            vec![
                P::plane(0, 0),
                P::plane(0, 1),
                P::near(1, 1, 0),
                P::near(3, 1, 0),
            ],
            vec![vec![1, 3, 4]],
            vec![1, 2],
        ),
        e(
            "S6'",
            vec![
                P::plane(0, 0),
                P::plane(0, 1),
                P::near(1, 0, 1),
                P::near(2, 1, 0),
            ],
            vec![vec![1, 2, 3]],
            vec![1, 2],
        ),
        e(
            "S6''",
            vec![
                P::plane(0, 0),
                P::plane(0, 1),
                P::near(1, 0, 1),
                P::near(3, 1, 1),
            ],
            vec![vec![1, 2, 3]],
            vec![3],
        ),
        e(
            "S8'",
            vec![
                P::plane(0, 0),
                P::near(1, 1, 0),
                P::near(2, 1, 1),
                P::near(3, 1, 0),
            ],
            vec![],
            vec![3],
        ),
        // The printed representative repeats S8'; the declared constraints
        // (p1,p2,p3 collinear, almost general position) force p3 = [1:0]
        // and p4 off both the line transform and the (-2) chain, e.g. [1:1].
        e(
            "S9'",
            vec![
                P::plane(0, 0),
                P::near(1, 1, 0),
                P::near(2, 1, 0),
                P::near(3, 1, 1),
            ],
            vec![vec![1, 2, 3]],
            vec![4],
        ),
    ]
}

pub fn entry(id: &str) -> Result<CatalogEntry> {
    catalog()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::InvalidEntry(format!("unknown entry id {id}")))
}

pub fn entry_ids() -> Vec<&'static str> {
    catalog().iter().map(|e| e.id).collect()
}

/// Expected singularity multiset of an entry, ascending lambda values.
pub fn expected_singularities(entry: &CatalogEntry) -> Vec<u32> {
    entry.expected_singularities.clone()
}

// ---------------------------------------------------------------------------
// Chart chains
// ---------------------------------------------------------------------------

/// Composed substitution from a chart of the blow-up tower down to U0.
/// `x_sub` and `y_sub` express the plane coordinates (x, y) through the
/// two chart variables; the blown-up point of interest sits at the origin.
#[derive(Clone, Debug)]
pub struct ChartChain {
    pub arena: Arena,
    pub x_sub: MPoly,
    pub y_sub: MPoly,
    /// Number of blow-ups composed into the substitution.
    pub depth: usize,
    /// Index (into `arena`) of the exceptional coordinate; it is the same
    /// chart variable at every level of these towers.
    pub exceptional_var: usize,
}

impl ChartChain {
    fn identity(names: (&str, &str)) -> ChartChain {
        let arena = Arena::from_names(&[names.0, names.1]);
        ChartChain {
            x_sub: MPoly::var(&arena, 0),
            y_sub: MPoly::var(&arena, 1),
            arena,
            depth: 0,
            exceptional_var: 0,
        }
    }

    fn apply(&mut self, step: &Step) {
        let v = MPoly::var(&self.arena, 0);
        let w = MPoly::var(&self.arena, 1);
        let (sv, sw) = match step {
            Step::Translate(a, b) => (
                v.add(&MPoly::constant(&self.arena, a.clone())),
                w.add(&MPoly::constant(&self.arena, b.clone())),
            ),
            Step::BlowBase => (v.clone(), v.mul(&w)),
            Step::BlowOther => (v.mul(&w), v.clone()),
        };
        let imgs = [sv, sw];
        self.x_sub = self.x_sub.substitute(&self.arena, &imgs);
        self.y_sub = self.y_sub.substitute(&self.arena, &imgs);
        if !matches!(step, Step::Translate(..)) {
            self.depth += 1;
        }
    }

    fn rename(mut self, names: (&str, &str)) -> ChartChain {
        let arena = Arena::from_names(&[names.0, names.1]);
        self.x_sub = self.x_sub.map_arena(&arena, &[0, 1]);
        self.y_sub = self.y_sub.map_arena(&arena, &[0, 1]);
        self.arena = arena;
        self
    }

    /// Pull an affine polynomial in (x, y) back through the chart.
    pub fn pullback(&self, g: &MPoly) -> MPoly {
        assert_eq!(g.arena().len(), 2);
        g.map_arena(&self.arena, &[0, 1])
            .substitute(&self.arena, &[self.x_sub.clone(), self.y_sub.clone()])
    }
}

/// Elementary chart construction step (substitution into the previous
/// chart's coordinates).
pub enum Step {
    Translate(Rat, Rat),
    /// Chart keeping the base coordinate: (v, w) -> (v, v w).
    BlowBase,
    /// The other chart: (v, w) -> (v w, v). Used for the vertical direction
    /// at the first level and for views of strict exceptional transforms.
    BlowOther,
}

/// Chain of ancestors of point `i` (0-based), root first, ending at `i`.
fn ancestry(entry: &CatalogEntry, i: usize) -> Vec<usize> {
    let mut chain = vec![i];
    let mut cur = i;
    while let Some(p) = entry.points[cur].parent {
        assert!(p < cur, "parent chain must be strictly decreasing");
        chain.push(p);
        cur = p;
    }
    chain.reverse();
    chain
}

/// Whether the chain of `i` starts with a vertical direction (so its charts
/// are based on y rather than x).
pub fn chain_vertical(entry: &CatalogEntry, i: usize) -> bool {
    let chain = ancestry(entry, i);
    chain
        .get(1)
        .and_then(|&c1| entry.points[c1].direction())
        .map(|(vertical, _)| vertical)
        .unwrap_or(false)
}

fn chart_names(vertical: bool, depth: usize) -> (&'static str, &'static str) {
    let fiber = match depth {
        0 | 1 => {
            if vertical {
                "t"
            } else {
                "s"
            }
        }
        2 => "u",
        _ => "w",
    };
    (if vertical { "y" } else { "x" }, fiber)
}

/// Steps of the tower reaching (but not blowing up) point `i`: the chart of
/// the surface after blowing all proper ancestors, translated so point `i`
/// is at the origin. For vertical chains the steps are expressed in the
/// swapped coordinates (y, x).
pub fn steps_before(entry: &CatalogEntry, i: usize) -> Vec<Step> {
    let chain = ancestry(entry, i);
    let root = &entry.points[chain[0]];
    let (px, py) = root.affine().expect("chain root must be a plane point");
    let vertical = chain_vertical(entry, i);
    let mut steps = if vertical {
        vec![Step::Translate(py, px)]
    } else {
        vec![Step::Translate(px, py)]
    };
    for level in 1..chain.len() {
        let (v, slope) = entry.points[chain[level]].direction().unwrap();
        if level == 1 {
            // First blow-up: orientation fixed by the first direction; in
            // the vertical case the coordinates were swapped already.
            steps.push(Step::BlowBase);
            if !v && slope != rat(0) {
                steps.push(Step::Translate(rat(0), slope));
            }
        } else {
            assert!(!v, "vertical directions only occur at depth 1");
            steps.push(Step::BlowBase);
            if slope != rat(0) {
                steps.push(Step::Translate(rat(0), slope));
            }
        }
    }
    steps
}

/// Chart of the surface right before blowing up point `i`, with the point
/// at the chart origin. Depth equals the number of proper ancestors.
pub fn chart_before(entry: &CatalogEntry, i: usize) -> ChartChain {
    let vertical = chain_vertical(entry, i);
    let depth = ancestry(entry, i).len() - 1;
    let mut chart = ChartChain::identity(chart_names(vertical, depth.max(1)));
    for step in steps_before(entry, i) {
        chart.apply(&step);
    }
    if vertical {
        // The tower was expressed through (y, t); swap back so x_sub / y_sub
        // mean the plane coordinates.
        std::mem::swap(&mut chart.x_sub, &mut chart.y_sub);
    }
    chart
}

/// Composed substitution reaching the chart created by blowing up point
/// `point_index` (1-based), oriented along the base direction, with the
/// blown-up point's preimage chart centered at the origin.
pub fn chart_chain(entry: &CatalogEntry, point_index: usize) -> Result<ChartChain> {
    if point_index == 0 || point_index > entry.points.len() {
        return Err(Error::InvalidEntry(format!(
            "{}: point index {point_index} out of range",
            entry.id
        )));
    }
    let i = point_index - 1;
    let vertical = chain_vertical(entry, i);
    let depth = ancestry(entry, i).len();
    let mut chart = chart_before(entry, i).rename(chart_names(vertical, depth));
    if vertical {
        std::mem::swap(&mut chart.x_sub, &mut chart.y_sub);
        chart.apply(&Step::BlowBase);
        std::mem::swap(&mut chart.x_sub, &mut chart.y_sub);
    } else {
        chart.apply(&Step::BlowBase);
    }
    Ok(chart)
}

/// Chart in which the strict transform of the exceptional curve of point
/// `root` (0-based) is the axis {w = 0}, parametrized by the base variable.
/// `child` must be a configuration point infinitely near `root`.
pub fn exceptional_view(entry: &CatalogEntry, root: usize, child: usize) -> ChartChain {
    assert_eq!(entry.points[child].parent, Some(root));
    let vertical = chain_vertical(entry, child);
    let mut chart = chart_before(entry, child);
    if vertical {
        std::mem::swap(&mut chart.x_sub, &mut chart.y_sub);
        chart.apply(&Step::BlowOther);
        std::mem::swap(&mut chart.x_sub, &mut chart.y_sub);
    } else {
        chart.apply(&Step::BlowOther);
    }
    chart
}

// ---------------------------------------------------------------------------
// Incidence and negative curves
// ---------------------------------------------------------------------------

pub fn affine_xy() -> Arena {
    Arena::from_names(&["x", "y"])
}

/// Does the strict transform of the affine plane curve `g` pass through
/// configuration point `i`? Decided by pulling `g` back through the chart
/// tower, removing the full power of the exceptional coordinate, and
/// evaluating at the chart origin.
pub fn strict_transform_passes(entry: &CatalogEntry, g: &MPoly, i: usize) -> bool {
    match entry.points[i].location {
        Location::Plane(..) => {
            let (px, py) = entry.points[i].affine().unwrap();
            g.eval(&[px, py]) == rat(0)
        }
        Location::Dir(..) => {
            let chart = chart_before(entry, i);
            let pulled = chart.pullback(g);
            if pulled.is_zero() {
                return true;
            }
            let ord = pulled.var_order(chart.exceptional_var).unwrap();
            let strict = pulled
                .exact_div_var_power(chart.exceptional_var, ord)
                .unwrap();
            strict.eval(&[rat(0), rat(0)]) == rat(0)
        }
    }
}

/// Candidate plane lines supporting at least two configuration points of
/// the prefix: joins of plane-point pairs and tangent lines of depth-1
/// infinitely near points. Returns (affine equation, incident point set).
fn candidate_lines(entry: &CatalogEntry, prefix: usize) -> Vec<(MPoly, Vec<usize>)> {
    let xy = affine_xy();
    let mut equations: Vec<MPoly> = Vec::new();
    let mut push = |eq: MPoly| {
        let norm = eq.primitive_normalized(&crate::order::MonomialOrder::grevlex());
        if !equations.iter().any(|e| *e == norm) {
            equations.push(norm);
        }
    };
    for i in 0..prefix {
        let Some((xi, yi)) = entry.points[i].affine() else {
            continue;
        };
        // Joins with other plane points.
        for j in (i + 1)..prefix {
            if let Some((xj, yj)) = entry.points[j].affine() {
                // (y - yi)(xj - xi) - (x - xi)(yj - yi) = 0
                let x = MPoly::var(&xy, 0);
                let y = MPoly::var(&xy, 1);
                let dx = MPoly::constant(&xy, xj.clone() - xi.clone());
                let dy = MPoly::constant(&xy, yj.clone() - yi.clone());
                let eq = y
                    .sub(&MPoly::constant(&xy, yi.clone()))
                    .mul(&dx)
                    .sub(&x.sub(&MPoly::constant(&xy, xi.clone())).mul(&dy));
                push(eq);
            }
        }
        // Tangent lines of depth-1 children.
        for j in 0..prefix {
            if entry.points[j].parent == Some(i) {
                let (vertical, slope) = entry.points[j].direction().unwrap();
                let x = MPoly::var(&xy, 0);
                let y = MPoly::var(&xy, 1);
                let eq = if vertical {
                    x.sub(&MPoly::constant(&xy, xi.clone()))
                } else {
                    y.sub(&MPoly::constant(&xy, yi.clone())).sub(
                        &x.sub(&MPoly::constant(&xy, xi.clone()))
                            .mul(&MPoly::constant(&xy, slope)),
                    )
                };
                push(eq);
            }
        }
    }
    equations
        .into_iter()
        .map(|eq| {
            let incident: Vec<usize> = (0..prefix)
                .filter(|&k| strict_transform_passes(entry, &eq, k))
                .collect();
            (eq, incident)
        })
        .filter(|(_, incident)| incident.len() >= 2)
        .collect()
}

/// All irreducible effective classes of negative self-intersection on the
/// blow-up of the first `prefix_length` points.
pub fn negative_curves(entry: &CatalogEntry, prefix_length: usize) -> Result<Vec<NegCurve>> {
    if prefix_length > entry.points.len() {
        return Err(Error::InvalidEntry(format!(
            "{}: prefix {prefix_length} exceeds {} points",
            entry.id,
            entry.points.len()
        )));
    }
    let mut out = Vec::new();
    for i in 0..prefix_length {
        let mut class = CurveClass::exceptional(i);
        for j in 0..prefix_length {
            if entry.points[j].parent == Some(i) {
                class.e[j] -= 1;
            }
        }
        out.push(NegCurve {
            class,
            kind: NegCurveKind::Exceptional(i),
        });
    }
    for (equation, incident) in candidate_lines(entry, prefix_length) {
        let mut class = CurveClass { h: 1, e: [0; 4] };
        for &k in &incident {
            class.e[k] = -1;
        }
        out.push(NegCurve {
            class,
            kind: NegCurveKind::Line { equation, incident },
        });
    }
    out.retain(|c| c.self_int() < 0);
    Ok(out)
}

/// Is configuration point `i` on the given negative curve of the prefix
/// surface (the prefix excludes `i` itself)?
pub fn point_on_curve(entry: &CatalogEntry, i: usize, curve: &NegCurve) -> bool {
    match &curve.kind {
        NegCurveKind::Exceptional(r) => entry.points[i].parent == Some(*r),
        NegCurveKind::Line { equation, .. } => strict_transform_passes(entry, equation, i),
    }
}

/// Point type of blow-up step `step` (1-based): 1 + the number of
/// (-1)-curves through the point on the prefix surface. Landing on a
/// (-2)-curve violates almost general position and is an error.
pub fn classify_point_type(entry: &CatalogEntry, step: usize) -> Result<u8> {
    if step == 0 || step > entry.points.len() {
        return Err(Error::InvalidEntry(format!(
            "{}: step {step} out of range",
            entry.id
        )));
    }
    let i = step - 1;
    let curves = negative_curves(entry, i)?;
    let mut minus_one = 0u8;
    for c in &curves {
        if point_on_curve(entry, i, c) {
            match c.self_int() {
                -1 => minus_one += 1,
                _ => {
                    return Err(Error::AlmostGeneralPosition(format!(
                        "{}: point {} lies on a curve of self-intersection {}",
                        entry.id,
                        step,
                        c.self_int()
                    )))
                }
            }
        }
    }
    if minus_one > 2 {
        return Err(Error::Internal(format!(
            "{}: point {step} on {minus_one} (-1)-curves",
            entry.id
        )));
    }
    Ok(1 + minus_one)
}

/// Connected components of the (-2)-curve configuration on the full
/// blow-up, each ordered as a chain.
pub fn minus_two_chains(entry: &CatalogEntry) -> Result<Vec<Vec<NegCurve>>> {
    let curves: Vec<NegCurve> = negative_curves(entry, entry.points.len())?
        .into_iter()
        .filter(|c| c.self_int() == -2)
        .collect();
    let n = curves.len();
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            let d = curves[i].class.dot(&curves[j].class);
            assert!(
                (0..=1).contains(&d),
                "unexpected intersection number {d} between (-2)-classes"
            );
            if d == 1 {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    let mut seen = vec![false; n];
    let mut chains = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut component = vec![start];
        seen[start] = true;
        let mut frontier = vec![start];
        while let Some(k) = frontier.pop() {
            for &nb in &adj[k] {
                if !seen[nb] {
                    seen[nb] = true;
                    component.push(nb);
                    frontier.push(nb);
                }
            }
        }
        // Order as a path; A-type chains never branch.
        for &k in &component {
            assert!(adj[k].len() <= 2, "(-2)-component is not a chain");
        }
        let ordered = if component.len() == 1 {
            component
        } else {
            let &end = component
                .iter()
                .find(|&&k| adj[k].len() == 1)
                .expect("chain endpoint");
            let mut path = vec![end];
            let mut prev = usize::MAX;
            let mut cur = end;
            while path.len() < component.len() {
                let &next = adj[cur]
                    .iter()
                    .find(|&&m| m != prev)
                    .expect("chain continuation");
                path.push(next);
                prev = cur;
                cur = next;
            }
            path
        };
        chains.push(ordered.into_iter().map(|k| curves[k].clone()).collect());
    }
    chains.sort_by_key(|c: &Vec<NegCurve>| c.len());
    Ok(chains)
}

// ---------------------------------------------------------------------------
// JSON export
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct PointJson {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    coords: Option<[i64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    parent: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    direction: Option<[i64; 2]>,
}

#[derive(Serialize)]
struct EntryJson {
    id: String,
    points: Vec<PointJson>,
    collinear_sets: Vec<Vec<usize>>,
    degree: u32,
    expected_singularities: Vec<u32>,
}

/// Stable JSON export of the catalog.
pub fn catalog_json() -> String {
    let entries: Vec<EntryJson> = catalog()
        .iter()
        .map(|e| EntryJson {
            id: e.id.to_string(),
            points: e
                .points
                .iter()
                .map(|p| match p.location {
                    Location::Plane(a, b, c) => PointJson {
                        kind: "plane",
                        coords: Some([a, b, c]),
                        parent: None,
                        direction: None,
                    },
                    Location::Dir(u, v) => PointJson {
                        kind: "near",
                        coords: None,
                        parent: p.parent.map(|q| q + 1),
                        direction: Some([u, v]),
                    },
                })
                .collect(),
            collinear_sets: e.collinear_sets.clone(),
            degree: e.degree,
            expected_singularities: e.expected_singularities.clone(),
        })
        .collect();
    serde_json::to_string_pretty(&entries).unwrap()
}

/// SHA-256 of the catalog export; pins the representative coordinates.
pub fn catalog_hash() -> String {
    use sha2::{Digest, Sha256};
    let mut h = Sha256::new();
    h.update(catalog_json().as_bytes());
    format!("{:x}", h.finalize())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_two_entries_with_degree_partition() {
        let cat = catalog();
        assert_eq!(cat.len(), 22);
        let count = |d: u32| cat.iter().filter(|e| e.degree == d).count();
        assert_eq!(count(9), 1);
        assert_eq!(count(8), 1);
        assert_eq!(count(7), 2);
        assert_eq!(count(6), 6);
        assert_eq!(count(5), 12);
    }

    #[test]
    fn s4pp_has_the_paper_coordinates() {
        let e = entry("S4''").unwrap();
        assert_eq!(e.points[0], BasePoint::plane(0, 0)); // [1:0:0]
        assert_eq!(e.points[1], BasePoint::plane(0, 1)); // [1:0:1]
        assert_eq!(e.points[2], BasePoint::plane(0, -1)); // [1:0:-1]
        assert_eq!(e.points[3], BasePoint::near(1, 1, 0)); // [1:0] at p1
        assert_eq!(e.degree, 5);
    }

    #[test]
    fn base_point_invariants() {
        for e in catalog() {
            let mut plane_pts = Vec::new();
            for (i, p) in e.points.iter().enumerate() {
                if let Some(parent) = p.parent {
                    assert!(parent < i);
                    assert!(matches!(p.location, Location::Dir(u, v) if (u, v) != (0, 0)));
                } else if let Some(xy) = p.affine() {
                    assert!(!plane_pts.contains(&xy), "{}: repeated plane point", e.id);
                    plane_pts.push(xy);
                }
            }
            assert_eq!(e.degree, 9 - e.points.len() as u32);
            assert!(e.degree >= 5);
        }
    }

    #[test]
    fn chart_chain_examples() {
        // S1: (x, x s).
        let s1 = entry("S1").unwrap();
        let c = chart_chain(&s1, 1).unwrap();
        assert_eq!(c.arena.names(), ["x", "s"]);
        assert_eq!(c.x_sub, MPoly::parse(&c.arena, "x").unwrap());
        assert_eq!(c.y_sub, MPoly::parse(&c.arena, "xs").unwrap());
        // S7: (x, x^2 u).
        let s7 = entry("S7").unwrap();
        let c = chart_chain(&s7, 2).unwrap();
        assert_eq!(c.arena.names(), ["x", "u"]);
        assert_eq!(c.x_sub, MPoly::parse(&c.arena, "x").unwrap());
        assert_eq!(c.y_sub, MPoly::parse(&c.arena, "x^2u").unwrap());
        assert_eq!(c.depth, 2);
        // S2 point 2: translation to (0,1) before blowing up.
        let s2 = entry("S2").unwrap();
        let c = chart_chain(&s2, 2).unwrap();
        assert_eq!(c.x_sub, MPoly::parse(&c.arena, "x").unwrap());
        assert_eq!(c.y_sub, MPoly::parse(&c.arena, "xs+1").unwrap());
    }

    #[test]
    fn vertical_chart_chain() {
        // S6: p3 = [0:1] at p1, chart through (y, t) with x = y t.
        let s6 = entry("S6").unwrap();
        let c = chart_before(&s6, 2);
        assert_eq!(c.arena.names(), ["y", "t"]);
        assert_eq!(c.x_sub, MPoly::parse(&c.arena, "yt").unwrap());
        assert_eq!(c.y_sub, MPoly::parse(&c.arena, "y").unwrap());
    }

    #[test]
    fn chart_jacobian_is_monomial_in_exceptional_coordinate() {
        for e in catalog() {
            for i in 1..=e.points.len() {
                let c = chart_chain(&e, i).unwrap();
                let j = c
                    .x_sub
                    .derivative(0)
                    .mul(&c.y_sub.derivative(1))
                    .sub(&c.x_sub.derivative(1).mul(&c.y_sub.derivative(0)));
                assert_eq!(j.num_terms(), 1, "{}: chart {} jacobian {j}", e.id, i);
                let (m, _) = j.terms().next().unwrap();
                assert_eq!(m.exp(1), 0, "{}: jacobian involves fiber variable", e.id);
            }
        }
    }

    #[test]
    fn deep_chain_substitution() {
        // S9: chart before p3 is y = x^2 u (both directions [1:0]).
        let s9 = entry("S9").unwrap();
        let c = chart_before(&s9, 2);
        assert_eq!(c.depth, 2);
        assert_eq!(c.y_sub, MPoly::parse(&c.arena, "x^2u").unwrap());
        // S8: p3 = [1:1], so the chart before p3 carries y = x^2 (u + 1).
        let s8 = entry("S8").unwrap();
        let c = chart_before(&s8, 2);
        assert_eq!(c.y_sub, MPoly::parse(&c.arena, "x^2u+x^2").unwrap());
    }

    #[test]
    fn negative_curves_examples() {
        // S7 prefix 2: E1 strict (-2), E2 (-1), line transform H-E1-E2 (-1).
        let s7 = entry("S7").unwrap();
        let curves = negative_curves(&s7, 2).unwrap();
        let mut ints: Vec<i64> = curves.iter().map(|c| c.self_int()).collect();
        ints.sort();
        assert_eq!(ints, vec![-2, -1, -1]);

        // S1 prefix 1: just E1.
        let s1 = entry("S1").unwrap();
        let curves = negative_curves(&s1, 1).unwrap();
        assert_eq!(curves.len(), 1);
        assert_eq!(curves[0].self_int(), -1);

        // S3 prefix 3: three E's and three lines, all (-1).
        let s3 = entry("S3").unwrap();
        let curves = negative_curves(&s3, 3).unwrap();
        assert_eq!(curves.len(), 6);
        assert!(curves.iter().all(|c| c.self_int() == -1));
    }

    #[test]
    fn lattice_invariants() {
        for e in catalog() {
            for prefix in 0..=e.points.len() {
                let k = CurveClass {
                    h: -3,
                    e: {
                        let mut a = [0i64; 4];
                        for (i, slot) in a.iter_mut().enumerate() {
                            if i < prefix {
                                *slot = 1;
                            }
                        }
                        a
                    },
                };
                assert_eq!(k.dot(&k), 9 - prefix as i64);
                for c in negative_curves(&e, prefix).unwrap() {
                    let si = c.self_int();
                    assert!(si == -1 || si == -2, "{}: self-int {si}", e.id);
                    let kc = c.class.k_dot();
                    if si == -1 {
                        assert_eq!(kc, -1);
                    } else {
                        assert_eq!(kc, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn point_types_match_paper_cases() {
        let s7 = entry("S7").unwrap();
        assert_eq!(classify_point_type(&s7, 1).unwrap(), 1);
        assert_eq!(classify_point_type(&s7, 2).unwrap(), 2);
        let s9 = entry("S9").unwrap();
        assert_eq!(classify_point_type(&s9, 3).unwrap(), 3);
        let s2 = entry("S2").unwrap();
        assert_eq!(classify_point_type(&s2, 2).unwrap(), 1);
    }

    #[test]
    fn almost_general_position_holds_everywhere() {
        for e in catalog() {
            for step in 1..=e.points.len() {
                classify_point_type(&e, step).unwrap();
            }
        }
    }

    #[test]
    fn declared_collinearity_matches_geometry() {
        for e in catalog() {
            let lines = candidate_lines(&e, e.points.len());
            let mut derived: Vec<Vec<usize>> = lines
                .iter()
                .filter(|(_, inc)| inc.len() >= 3)
                .map(|(_, inc)| inc.iter().map(|k| k + 1).collect())
                .collect();
            derived.sort();
            let mut declared = e.collinear_sets.clone();
            declared.sort();
            assert_eq!(derived, declared, "{}: collinearity mismatch", e.id);
            // Almost general position: no four collinear.
            assert!(lines.iter().all(|(_, inc)| inc.len() <= 3), "{}", e.id);
        }
    }

    #[test]
    fn minus_two_components_match_expected_singularities() {
        for e in catalog() {
            let chains = minus_two_chains(&e).unwrap();
            let mut sizes: Vec<u32> = chains.iter().map(|c| c.len() as u32).collect();
            sizes.sort();
            assert_eq!(
                sizes, e.expected_singularities,
                "{}: (-2)-chains vs expected table",
                e.id
            );
        }
    }

    #[test]
    fn expected_table_spot_checks() {
        assert_eq!(entry("S9'").unwrap().expected_singularities, vec![4]);
        assert_eq!(entry("S6'").unwrap().expected_singularities, vec![1, 2]);
        assert!(entry("S3").unwrap().expected_singularities.is_empty());
    }

    #[test]
    fn catalog_export_is_stable() {
        assert_eq!(catalog_hash(), catalog_hash());
        let json = catalog_json();
        assert!(json.contains("\"S9'\""));
    }
}
