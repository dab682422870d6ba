//! End-to-end pipeline: drag-order search, spine construction, invariants.

use clasp_core::braid::{BraidError, ColoredBraid};
use clasp_core::ccomplex::{build_spine, DecoratedSpine, DragOrder, SpineError};
use clasp_core::invariants::{
    alexander_from_conway, conway_potential, hermitian_h, presentation_matrix, signature_nullity,
    InvariantError,
};
use clasp_core::seifert::{chi_excluding, complex_sign, seifert_family, SeifertFamily};
use clasp_core::{Laurent, PolyMatrix, Potential, Signature, TorusPoint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Fixed default seed for the drag-order search, so published outputs are
/// reproducible run to run.
pub const DEFAULT_SEED: u64 = 12345;

/// Default number of random color permutations tried when minimizing the
/// homology rank.
pub const DEFAULT_TRIALS: usize = 500;

#[derive(Error, Debug)]
pub enum PipelineError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Spine(#[from] SpineError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub braid: ColoredBraid,
    pub pairwise: bool,
    pub trials: usize,
    pub seed: u64,
    pub omega: Option<TorusPoint>,
}

impl RunOptions {
    pub fn new(braid: ColoredBraid) -> Self {
        RunOptions {
            braid,
            pairwise: false,
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
            omega: None,
        }
    }
}

/// Everything the front end reports for one braid.
#[derive(Clone, Debug)]
pub struct Report {
    pub braid: ColoredBraid,
    pub drag_order: DragOrder,
    pub spine: DecoratedSpine,
    pub family: SeifertFamily,
    pub complex_sign: i8,
    pub chi: Vec<i64>,
    pub conway: Potential,
    pub alexander: Laurent,
    pub presentation: Option<PolyMatrix>,
    pub signature: Option<(TorusPoint, Signature)>,
    pub latex: String,
}

/// Tries the identity order plus `trials` seeded-random permutations of the
/// colors and returns one minimizing the homology rank of the resulting
/// spine; ties go to the lexicographically smallest permutation.
pub fn optimize_drag_order(
    braid: &ColoredBraid,
    pairwise: bool,
    trials: usize,
    seed: u64,
) -> Result<DragOrder, PipelineError> {
    let mu = braid.mu;
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut consider = |order: Vec<usize>| -> Result<(), PipelineError> {
        let drag = DragOrder::new(order.clone()).expect("permutation of 0..mu");
        let rank = build_spine(braid, &drag, pairwise)?.rank();
        let candidate = (rank, order);
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
        Ok(())
    };

    consider((0..mu).collect())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut order: Vec<usize> = (0..mu).collect();
        // Fisher-Yates with the seeded generator
        for i in (1..mu).rev() {
            let j = rng.gen_range(0..=i);
            order.swap(i, j);
        }
        consider(order)?;
    }
    let (_, order) = best.expect("at least the identity order was tried");
    Ok(DragOrder::new(order).expect("permutation of 0..mu"))
}

/// Runs the whole pipeline on one braid.
pub fn run_pipeline(options: &RunOptions) -> Result<Report, PipelineError> {
    let braid = options.braid.clone();
    let drag_order = optimize_drag_order(&braid, options.pairwise, options.trials, options.seed)?;
    let spine = build_spine(&braid, &drag_order, options.pairwise)?;
    let family = seifert_family(&spine);
    let sign = complex_sign(&spine);
    let chi: Vec<i64> = (0..braid.mu).map(|i| chi_excluding(&spine, i)).collect();
    let conway: Potential = conway_potential(&family, sign, &chi);
    let alexander = alexander_from_conway(&conway)?;
    let presentation = if options.pairwise {
        Some(presentation_matrix(&family)?)
    } else {
        match presentation_matrix(&family) {
            Ok(matrix) => Some(matrix),
            Err(InvariantError::PairwiseRequired) => None,
            Err(other) => return Err(other.into()),
        }
    };
    let signature = match &options.omega {
        Some(point) => {
            let h = hermitian_h(&family, point)?;
            Some((point.clone(), signature_nullity(&h, 1)?))
        }
        None => None,
    };
    let latex = latex_summary(&conway, &alexander, signature.as_ref());
    Ok(Report {
        braid,
        drag_order,
        spine,
        family,
        complex_sign: sign,
        chi,
        conway,
        alexander,
        presentation,
        signature,
        latex,
    })
}

fn latex_summary(
    conway: &Potential,
    alexander: &Laurent,
    signature: Option<&(TorusPoint, Signature)>,
) -> String {
    let mut out = String::new();
    let num = poly_latex(&conway.numerator);
    if conway.is_polynomial() {
        out.push_str(&format!("\\nabla_L = {num}\n"));
    } else {
        let mut denom = String::new();
        for (i, &d) in conway.denom_exponents.iter().enumerate() {
            if d == 0 {
                continue;
            }
            denom.push_str(&format!("(t_{{{i}}} - t_{{{i}}}^{{-1}})"));
            if d > 1 {
                denom.push_str(&format!("^{{{d}}}"));
            }
        }
        out.push_str(&format!("\\nabla_L = \\frac{{{num}}}{{{denom}}}\n"));
    }
    out.push_str(&format!("\\Delta_L \\doteq {}\n", poly_latex(alexander)));
    if let Some((point, result)) = signature {
        let theta: Vec<String> = point.theta().iter().map(|t| format!("{t}")).collect();
        out.push_str(&format!(
            "\\sigma_L(\\omega) = {}, \\quad \\eta_L(\\omega) = {} \\quad (\\theta = ({}))\n",
            result.signature,
            result.nullity,
            theta.join(", ")
        ));
    }
    out
}

fn poly_latex(p: &Laurent) -> String {
    // reuse the plain rendering, then mark up variables and exponents
    let plain = p.to_string();
    let mut out = String::new();
    let mut chars = plain.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            't' => {
                let mut digits = String::new();
                while chars.peek().is_some_and(|d| d.is_ascii_digit()) {
                    digits.push(chars.next().unwrap());
                }
                out.push_str(&format!("t_{{{digits}}}"));
            }
            '*' => out.push(' '),
            '^' => {
                let mut exp = String::new();
                if chars.peek() == Some(&'-') {
                    exp.push(chars.next().unwrap());
                }
                while chars.peek().is_some_and(|d| d.is_ascii_digit()) {
                    exp.push(chars.next().unwrap());
                }
                out.push_str(&format!("^{{{exp}}}"));
            }
            other => out.push(other),
        }
    }
    out
}
