//! Monomial orders: lex, graded reverse lex, and block elimination orders.
//!
//! Every order here is a total, multiplicative well-order on monomials,
//! which is what Buchberger's algorithm needs to terminate.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// A monomial order on a fixed number of variables, with an optional
/// variable permutation applied before comparison.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    /// When present, position `i` of the comparison reads exponent
    /// `perm[i]`. Identity when absent.
    perm: Option<Arc<Vec<usize>>>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderKind {
    Lex,
    GrevLex,
    /// Front block of the given size compared first (grevlex within each
    /// block). Realizes elimination of the front block.
    Elim(usize),
    /// Three blocks: front (eliminated), middle, and a trailing block that
    /// behaves like a coefficient ring (compared last).
    Elim2(usize, usize),
}

impl MonomialOrder {
    pub fn lex() -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            perm: None,
        }
    }

    pub fn grevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::GrevLex,
            perm: None,
        }
    }

    /// Block elimination order: the first `front` variables form the
    /// eliminated block.
    pub fn elimination(front: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Elim(front),
            perm: None,
        }
    }

    /// Elimination with a trailing parameter block: variables split as
    /// `front | middle | rest`, compared block by block.
    pub fn elimination_with_params(front: usize, middle: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Elim2(front, middle),
            perm: None,
        }
    }

    pub fn with_permutation(mut self, perm: Vec<usize>) -> Self {
        self.perm = Some(Arc::new(perm));
        self
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    /// Stable textual descriptor, used for cache fingerprints.
    pub fn descriptor(&self) -> String {
        let base = match self.kind {
            OrderKind::Lex => "lex".to_string(),
            OrderKind::GrevLex => "grevlex".to_string(),
            OrderKind::Elim(k) => format!("elim({k})"),
            OrderKind::Elim2(k, m) => format!("elim2({k},{m})"),
        };
        match &self.perm {
            None => base,
            Some(p) => format!(
                "{base};perm={}",
                p.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        }
    }

    /// Compare two exponent vectors. Returns `Greater` when `a` is the
    /// larger monomial.
    pub fn cmp(&self, a: &[u16], b: &[u16]) -> Ordering {
        match &self.perm {
            None => self.cmp_slices(a, b),
            Some(p) => {
                // Permuted view; slices are small so the buffers are cheap.
                let pa: Vec<u16> = p.iter().map(|&i| a[i]).collect();
                let pb: Vec<u16> = p.iter().map(|&i| b[i]).collect();
                self.cmp_slices(&pa, &pb)
            }
        }
    }

    fn cmp_slices(&self, a: &[u16], b: &[u16]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self.kind {
            OrderKind::Lex => lex_cmp(a, b),
            OrderKind::GrevLex => grevlex_cmp(a, b),
            OrderKind::Elim(k) => {
                grevlex_cmp(&a[..k], &b[..k]).then_with(|| grevlex_cmp(&a[k..], &b[k..]))
            }
            OrderKind::Elim2(k, m) => grevlex_cmp(&a[..k], &b[..k])
                .then_with(|| grevlex_cmp(&a[k..k + m], &b[k..k + m]))
                .then_with(|| grevlex_cmp(&a[k + m..], &b[k + m..])),
        }
    }
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor())
    }
}

fn lex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn grevlex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Reverse lex tie-break: the last variable where they differ decides,
    // and the monomial with the *smaller* exponent there is larger.
    for (x, y) in a.iter().zip(b.iter()).rev() {
        match x.cmp(y) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_on_three_vars() {
        let o = MonomialOrder::lex();
        // x > y^5 under lex x>y>z
        assert_eq!(o.cmp(&[1, 0, 0], &[0, 5, 0]), Ordering::Greater);
        assert_eq!(o.cmp(&[1, 1, 0], &[1, 0, 3]), Ordering::Greater);
    }

    #[test]
    fn grevlex_grades_by_total_degree_first() {
        let o = MonomialOrder::grevlex();
        assert_eq!(o.cmp(&[0, 0, 3], &[1, 1, 0]), Ordering::Greater);
        // Equal degree: x^2 y z  vs  x y^3: last differing exponent is z,
        // and the one with smaller z-exponent wins.
        assert_eq!(o.cmp(&[2, 1, 1], &[1, 3, 0]), Ordering::Less);
        // Classic: x y > z^2? degrees equal, z-exponent smaller for xy.
        assert_eq!(o.cmp(&[1, 1, 0], &[0, 0, 2]), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates() {
        let o = MonomialOrder::elimination(1);
        // Any positive power of the front variable beats everything without it.
        assert_eq!(o.cmp(&[1, 0, 0], &[0, 9, 9]), Ordering::Greater);
        assert_eq!(o.cmp(&[0, 2, 0], &[0, 0, 2]), Ordering::Greater);
    }

    #[test]
    fn permutation_reorders_comparison() {
        // Compare with y in front: y beats x^9.
        let o = MonomialOrder::elimination(1).with_permutation(vec![1, 0]);
        assert_eq!(o.cmp(&[0, 1], &[9, 0]), Ordering::Greater);
    }
}
