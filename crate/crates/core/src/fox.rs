//! Independent Alexander-polynomial oracle via the Wirtinger presentation of
//! the braid closure.
//!
//! This route never touches the C-complex machinery: arcs of the closure
//! diagram become generators, each crossing a conjugation relation, and the
//! Alexander matrix is the table of Fox derivatives abelianized by sending
//! each arc generator to the variable of its component's color. A maximal
//! minor then yields the polynomial (for two or more colors after dividing
//! by `t_c - 1` for the color `c` of the deleted generator).

use thiserror::Error;

use crate::bareiss::bareiss_det;
use crate::braid::ColoredBraid;
use crate::dsu::Dsu;
use crate::laurent::{Coeff, LaurentPoly};

#[derive(Error, Debug, PartialEq, Eq)]
pub enum FoxError {
    #[error("braid too large for the oracle (strands <= 6, word length <= 14)")]
    FixtureTooLarge,
    #[error("minor is not divisible by t{0} - 1; oracle bug")]
    IndivisibleMinor(usize),
}

struct Relation {
    new_arc: usize,
    over: usize,
    under: usize,
    /// +1: `new = o u o^-1`; -1: `new = o^-1 u o`.
    conj: i8,
}

/// Alexander polynomial of the braid closure, up to units, in the canonical
/// form of [`LaurentPoly::canonical_up_to_units`]. Intended for fixtures and
/// randomized cross-checks; sizes are capped accordingly.
pub fn oracle_alexander<C: Coeff>(braid: &ColoredBraid) -> Result<LaurentPoly<C>, FoxError> {
    let n = braid.strands;
    let m = braid.word.len();
    if n > 6 || m > 14 {
        return Err(FoxError::FixtureTooLarge);
    }
    let mu = braid.mu;

    // arcs: ids 0..n enter at the left; each crossing retires the under arc
    // and allocates a new id for its continuation
    let mut current: Vec<usize> = (0..n).collect();
    let mut arc_color: Vec<usize> = braid.colors.clone();
    let mut relations: Vec<Relation> = Vec::with_capacity(m);
    for &s in &braid.word {
        let p = s.unsigned_abs() as usize - 1;
        let (over_pos, under_pos) = if s > 0 { (p + 1, p) } else { (p, p + 1) };
        let over = current[over_pos];
        let under = current[under_pos];
        let new_arc = arc_color.len();
        arc_color.push(arc_color[under]);
        relations.push(Relation {
            new_arc,
            over,
            under,
            conj: if s > 0 { 1 } else { -1 },
        });
        // the strands swap positions; the over arc continues, the under
        // strand carries the new arc
        if s > 0 {
            current[p] = over;
            current[p + 1] = new_arc;
        } else {
            current[p + 1] = over;
            current[p] = new_arc;
        }
    }

    // closure: the arc leaving at position p is the arc entering at p
    let total_ids = arc_color.len();
    let mut classes = Dsu::new(total_ids);
    for p in 0..n {
        classes.union(current[p], p);
    }
    let mut column_of = vec![usize::MAX; total_ids];
    let mut generators: Vec<usize> = Vec::new();
    for id in 0..total_ids {
        if classes.find(id) == id {
            column_of[id] = generators.len();
            generators.push(id);
        }
    }
    let k = generators.len();

    // more generators than relations-plus-one: a free summand, so the
    // polynomial vanishes (split diagrams)
    if k > m + 1 {
        return Ok(LaurentPoly::zero(mu));
    }

    // Fox derivatives of w^-1 o^e u o^-e, as a word in representatives
    let tvar = |id: usize| LaurentPoly::<C>::var(mu, arc_color[id]);
    let tvar_inv = |id: usize| {
        let mut exps = vec![0i32; mu];
        exps[arc_color[id]] = -1;
        LaurentPoly::<C>::monomial(mu, exps, C::one())
    };
    let mut matrix: Vec<Vec<LaurentPoly<C>>> = Vec::with_capacity(m);
    for rel in &mut relations.iter() {
        let word: [(usize, i8); 4] = [
            (rel.new_arc, -1),
            (rel.over, rel.conj),
            (rel.under, 1),
            (rel.over, -rel.conj),
        ];
        let mut row = vec![LaurentPoly::zero(mu); k];
        let mut prefix = LaurentPoly::<C>::one(mu);
        for (id, exp) in word {
            let col = column_of[classes.find(id)];
            if exp > 0 {
                row[col] = &row[col] + &prefix;
                prefix = &prefix * &tvar(id);
            } else {
                let inv = tvar_inv(id);
                row[col] = &row[col] - &(&prefix * &inv);
                prefix = &prefix * &inv;
            }
        }
        matrix.push(row);
    }

    // maximal minor: drop one (redundant) relation when the matrix is
    // square, then delete the first generator's column
    let rows = if k == m { m - 1 } else { m };
    let minor: Vec<Vec<LaurentPoly<C>>> = matrix[..rows]
        .iter()
        .map(|row| row[1..].to_vec())
        .collect();
    let det = if minor.is_empty() {
        LaurentPoly::one(mu)
    } else {
        bareiss_det(&minor)
    };

    let delta = if mu >= 2 && !det.is_zero() {
        let color = arc_color[generators[0]];
        let divisor = &LaurentPoly::var(mu, color) - &LaurentPoly::one(mu);
        det.exact_div(&divisor)
            .map_err(|_| FoxError::IndivisibleMinor(color))?
    } else {
        det
    };
    Ok(delta.canonical_up_to_units())
}
