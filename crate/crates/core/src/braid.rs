//! Colored braid input: parsing, validation and the induced permutation.
//!
//! Positions in a braid are numbered from bottom to top starting at `0`, and
//! strands run left to right. A braid word is a sequence of nonzero integers
//! `s` with `|s| <= strands - 1`: the letter `s` crosses the strands in
//! positions `|s|-1` and `|s|`, a positive sign meaning that the over-strand
//! moves down one position (a right-handed crossing) and a negative sign
//! that it moves up.

use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum BraidError {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("crossing #{index} is {value}, outside 1..={max} in absolute value")]
    CrossingOutOfRange { index: usize, value: i32, max: usize },
    #[error("expected {expected} colors, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("closure component {orbit:?} carries more than one color")]
    ColoringMismatch { orbit: Vec<usize> },
    #[error("color {0} is not used by any strand")]
    UnusedColor(usize),
    #[error("a braid needs at least one strand")]
    NoStrands,
}

/// A braid together with a coloring of its closure components.
///
/// `colors[k]` is the color of the strand that starts at position `k`; the
/// coloring must be constant on each orbit of the braid permutation, and the
/// color values are exactly `0..mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredBraid {
    pub strands: usize,
    pub word: Vec<i32>,
    pub colors: Vec<usize>,
    pub mu: usize,
}

/// The permutation of `0..n` induced by a braid word, with its orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidPermutation {
    /// `mapping[start]` is the position where the strand ends.
    pub mapping: Vec<usize>,
    /// Cycles, ordered by their smallest element; each cycle starts at its
    /// smallest element and follows the mapping.
    pub orbits: Vec<Vec<usize>>,
}

impl ColoredBraid {
    /// Validates the input and renumbers colors to `0..mu` in order of first
    /// appearance (bottom to top).
    pub fn new(strands: usize, word: Vec<i32>, colors: Vec<usize>) -> Result<Self, BraidError> {
        let colors = renumber_colors(&colors);
        let mu = colors.iter().max().map_or(0, |&c| c + 1);
        Self::from_parts(strands, word, colors, mu)
    }

    /// Builds a braid whose colors are already `0..mu`, without renumbering.
    pub fn from_parts(
        strands: usize,
        word: Vec<i32>,
        colors: Vec<usize>,
        mu: usize,
    ) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        if colors.len() != strands {
            return Err(BraidError::WrongLength {
                expected: strands,
                got: colors.len(),
            });
        }
        for (index, &value) in word.iter().enumerate() {
            if value == 0 || value.unsigned_abs() as usize >= strands {
                return Err(BraidError::CrossingOutOfRange {
                    index: index + 1,
                    value,
                    max: strands - 1,
                });
            }
        }
        let braid = ColoredBraid {
            strands,
            word,
            colors,
            mu,
        };
        braid.validate_coloring()?;
        Ok(braid)
    }

    /// The permutation induced by the word: the transpositions
    /// `(|s_1| |s_1|+1) ... (|s_m| |s_m|+1)` applied left to right.
    pub fn permutation(&self) -> BraidPermutation {
        let n = self.strands;
        let mut mapping: Vec<usize> = (0..n).collect();
        for &s in &self.word {
            let p = s.unsigned_abs() as usize - 1;
            // mapping currently sends start positions to positions just
            // before this crossing; the crossing swaps positions p, p+1.
            for entry in mapping.iter_mut() {
                if *entry == p {
                    *entry = p + 1;
                } else if *entry == p + 1 {
                    *entry = p;
                }
            }
        }
        let mut orbits = Vec::new();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur);
                cur = mapping[cur];
            }
            orbits.push(cycle);
        }
        BraidPermutation { mapping, orbits }
    }

    /// Checks that the coloring is constant on closure components and that
    /// every color in `0..mu` is used.
    pub fn validate_coloring(&self) -> Result<(), BraidError> {
        let perm = self.permutation();
        for orbit in &perm.orbits {
            let c = self.colors[orbit[0]];
            if orbit.iter().any(|&p| self.colors[p] != c) {
                return Err(BraidError::ColoringMismatch {
                    orbit: orbit.clone(),
                });
            }
        }
        for color in 0..self.mu {
            if !self.colors.contains(&color) {
                return Err(BraidError::UnusedColor(color));
            }
        }
        if self.colors.iter().any(|&c| c >= self.mu) {
            return Err(BraidError::MalformedInput(format!(
                "color out of range for mu={}",
                self.mu
            )));
        }
        Ok(())
    }

    /// Number of closure components.
    pub fn components(&self) -> usize {
        self.permutation().orbits.len()
    }
}

fn renumber_colors(colors: &[usize]) -> Vec<usize> {
    let mut map: Vec<usize> = Vec::new();
    colors
        .iter()
        .map(|&c| match map.iter().position(|&m| m == c) {
            Some(i) => i,
            None => {
                map.push(c);
                map.len() - 1
            }
        })
        .collect()
}

/// Parses braid-notation input: a bracketed or bare comma-separated integer
/// list for the word, and a comma-separated list of `strands` integers for
/// the colors. Color values are renumbered to `0..mu` by first appearance.
pub fn parse_braid(
    word_text: &str,
    strands: usize,
    colors_text: &str,
) -> Result<ColoredBraid, BraidError> {
    let word = parse_int_list(word_text)?
        .into_iter()
        .map(|v| {
            i32::try_from(v).map_err(|_| BraidError::MalformedInput(format!("crossing {v} too large")))
        })
        .collect::<Result<Vec<i32>, _>>()?;
    let colors_raw = parse_int_list(colors_text)?;
    let colors = colors_raw
        .into_iter()
        .map(|v| {
            usize::try_from(v)
                .map_err(|_| BraidError::MalformedInput(format!("negative color {v}")))
        })
        .collect::<Result<Vec<usize>, _>>()?;
    ColoredBraid::new(strands, word, colors)
}

fn parse_int_list(text: &str) -> Result<Vec<i64>, BraidError> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .unwrap_or(trimmed)
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| BraidError::MalformedInput(format!("not an integer: {:?}", tok.trim())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn three_color_braid() -> ColoredBraid {
        parse_braid("[-2,-3,2,-3,-1,-2,-3]", 4, "0,1,2,0").unwrap()
    }

    #[test]
    fn parses_bracketed_word() {
        let b = three_color_braid();
        assert_eq!(b.word, vec![-2, -3, 2, -3, -1, -2, -3]);
        assert_eq!(b.colors, vec![0, 1, 2, 0]);
        assert_eq!(b.mu, 3);
    }

    #[test]
    fn parses_empty_word_unknot() {
        let b = parse_braid("[]", 1, "0").unwrap();
        assert_eq!(b.strands, 1);
        assert!(b.word.is_empty());
        assert_eq!(b.mu, 1);
    }

    #[test]
    fn parses_trefoil() {
        let b = parse_braid("[1,1,1]", 2, "0,0").unwrap();
        assert_eq!(b.components(), 1);
    }

    #[test]
    fn renumbers_colors_by_first_appearance() {
        let b = parse_braid("[]", 3, "5,9,5").unwrap();
        assert_eq!(b.colors, vec![0, 1, 0]);
        assert_eq!(b.mu, 2);
    }

    #[test]
    fn rejects_out_of_range_crossing() {
        let err = parse_braid("[2]", 2, "0,0").unwrap_err();
        assert!(matches!(err, BraidError::CrossingOutOfRange { .. }));
        let err = parse_braid("[0]", 2, "0,0").unwrap_err();
        assert!(matches!(err, BraidError::CrossingOutOfRange { .. }));
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(
            parse_braid("[1,x]", 2, "0,0"),
            Err(BraidError::MalformedInput(_))
        ));
        assert!(matches!(
            parse_braid("[1]", 2, "0"),
            Err(BraidError::WrongLength { .. })
        ));
    }

    #[test]
    fn identity_permutation_on_empty_word() {
        let b = parse_braid("[]", 3, "0,1,2").unwrap();
        let perm = b.permutation();
        assert_eq!(perm.mapping, vec![0, 1, 2]);
        assert_eq!(perm.orbits, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn squared_generator_is_identity() {
        let b = parse_braid("[1,1]", 2, "0,1").unwrap();
        let perm = b.permutation();
        assert_eq!(perm.mapping, vec![0, 1]);
        assert_eq!(perm.orbits.len(), 2);
    }

    #[test]
    fn three_color_braid_permutation() {
        let b = three_color_braid();
        let perm = b.permutation();
        assert_eq!(perm.mapping, vec![3, 1, 2, 0]);
        assert_eq!(perm.orbits, vec![vec![0, 3], vec![1], vec![2]]);
    }

    #[test]
    fn permutation_is_deterministic() {
        let b = three_color_braid();
        assert_eq!(b.permutation(), b.permutation());
    }

    #[test]
    fn coloring_must_be_orbit_constant() {
        let err = parse_braid("[1]", 2, "0,1").unwrap_err();
        assert!(matches!(err, BraidError::ColoringMismatch { .. }));
        // the identity permutation supports distinct colors
        assert!(parse_braid("[1,1]", 2, "0,1").is_ok());
    }

    #[test]
    fn unused_color_detected_on_raw_parts() {
        let braid = ColoredBraid {
            strands: 2,
            word: vec![1, 1],
            colors: vec![0, 2],
            mu: 3,
        };
        assert_eq!(braid.validate_coloring(), Err(BraidError::UnusedColor(1)));
    }

    #[test]
    fn orbit_count_matches_components() {
        let trefoil = parse_braid("[1,1,1]", 2, "0,0").unwrap();
        assert_eq!(trefoil.permutation().orbits.len(), 1);
        let empty = parse_braid("[]", 4, "0,0,0,0").unwrap();
        assert_eq!(empty.permutation().orbits.len(), 4);
    }
}
