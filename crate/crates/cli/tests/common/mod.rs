//! Shared helpers for the integration suites: seeded random colored braids,
//! Markov moves, and comparison up to units.
#![allow(dead_code)]

use clasp_core::braid::ColoredBraid;
use clasp_core::ccomplex::{build_spine, DragOrder};
use clasp_core::invariants::conway_potential;
use clasp_core::seifert::{chi_excluding, complex_sign, seifert_family, SeifertFamily};
use clasp_core::{Laurent, Potential};
use rand::Rng;

pub fn random_braid<R: Rng>(rng: &mut R, max_strands: usize, max_len: usize, max_colors: usize) -> ColoredBraid {
    let strands = rng.gen_range(2..=max_strands);
    let len = rng.gen_range(1..=max_len);
    let word: Vec<i32> = (0..len)
        .map(|_| {
            let v = rng.gen_range(1..=(strands - 1) as i32);
            if rng.gen_bool(0.5) {
                v
            } else {
                -v
            }
        })
        .collect();
    // color each closure component at random, then renumber
    let skeleton = ColoredBraid::new(strands, word.clone(), vec![0; strands]).unwrap();
    let orbits = skeleton.permutation().orbits;
    let mut colors = vec![0usize; strands];
    for orbit in &orbits {
        let c = rng.gen_range(0..max_colors);
        for &p in orbit {
            colors[p] = c;
        }
    }
    ColoredBraid::new(strands, word, colors).unwrap()
}

pub fn random_drag_order<R: Rng>(rng: &mut R, mu: usize) -> DragOrder {
    let mut order: Vec<usize> = (0..mu).collect();
    for i in (1..mu).rev() {
        let j = rng.gen_range(0..=i);
        order.swap(i, j);
    }
    DragOrder::new(order).unwrap()
}

/// Conjugation by a random word: the closure is unchanged.
pub fn conjugate<R: Rng>(braid: &ColoredBraid, rng: &mut R) -> ColoredBraid {
    let n = braid.strands;
    if n < 2 {
        return braid.clone();
    }
    let len = rng.gen_range(1..=3);
    let u: Vec<i32> = (0..len)
        .map(|_| {
            let v = rng.gen_range(1..=(n - 1) as i32);
            if rng.gen_bool(0.5) {
                v
            } else {
                -v
            }
        })
        .collect();
    let mut word = u.clone();
    word.extend_from_slice(&braid.word);
    word.extend(u.iter().rev().map(|&s| -s));
    // a strand starting at p sits at the image of p after u when it enters
    // the original word
    let prefix = ColoredBraid::new(n, u, vec![0; n]).unwrap();
    let mapping = prefix.permutation().mapping;
    let colors: Vec<usize> = (0..n).map(|p| braid.colors[mapping[p]]).collect();
    ColoredBraid::from_parts(n, word, colors, braid.mu).unwrap()
}

/// Positive or negative stabilization: one extra strand, crossed once with
/// the top strand; the closure is unchanged.
pub fn stabilize<R: Rng>(braid: &ColoredBraid, rng: &mut R) -> ColoredBraid {
    let n = braid.strands;
    let mut word = braid.word.clone();
    word.push(if rng.gen_bool(0.5) { n as i32 } else { -(n as i32) });
    let skeleton = ColoredBraid::new(n + 1, word.clone(), vec![0; n + 1]).unwrap();
    let mut colors = braid.colors.clone();
    colors.push(0);
    for orbit in skeleton.permutation().orbits {
        if orbit.contains(&n) {
            let donor = orbit
                .iter()
                .copied()
                .find(|&p| p < n)
                .expect("the new strand always joins an existing component");
            colors[n] = braid.colors[donor];
        }
    }
    ColoredBraid::from_parts(n + 1, word, colors, braid.mu).unwrap()
}

pub fn family_of(braid: &ColoredBraid, drag: &DragOrder) -> (SeifertFamily, i8, Vec<i64>) {
    let spine = build_spine(braid, drag, false).unwrap();
    let family = seifert_family(&spine);
    let sign = complex_sign(&spine);
    let chi: Vec<i64> = (0..braid.mu).map(|i| chi_excluding(&spine, i)).collect();
    (family, sign, chi)
}

pub fn potential_of(braid: &ColoredBraid, drag: &DragOrder) -> Potential {
    let (family, sign, chi) = family_of(braid, drag);
    conway_potential(&family, sign, &chi)
}

/// Canonical representative up to units of the ring with `1 - t_i` inverted:
/// all `t_i - 1` factors divided out, then monomial-and-sign canonical form.
pub fn lambda_canonical(p: &Laurent) -> Laurent {
    let mu = p.mu();
    let mut p = p.clone();
    if p.is_zero() {
        return p;
    }
    for i in 0..mu {
        let factor = &Laurent::var(mu, i) - &Laurent::one(mu);
        while let Ok(q) = p.exact_div(&factor) {
            p = q;
        }
    }
    p.canonical_up_to_units()
}
