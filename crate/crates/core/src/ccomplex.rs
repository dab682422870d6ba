//! From a colored braid to a C-complex, encoded as a decorated spine.
//!
//! The construction sorts the strands by color (dragging one color at a time
//! across the back of the braid), reads off half-twisted bands and fingers,
//! trades ribbon intersections for clean fingers, cancels redundant pairs,
//! repairs connectivity, and finally encodes the resulting complex as an
//! ordered, colored, signed graph.

use crate::braid::ColoredBraid;
use crate::dsu::Dsu;
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum SpineError {
    #[error("edge {0} has endpoints out of order or out of range")]
    InvalidEdge(usize),
    #[error("the complex is not connected")]
    Disconnected,
    #[error("the color-{0} surface is not connected by bands")]
    ColorDisconnected(usize),
    #[error("vertex color out of range")]
    ColorOutOfRange,
}

/// The order in which colors are dragged to the bottom of the braid.
///
/// `order[k]` is the color moved at stage `k`; the blocks of sorted disks are
/// stacked bottom-to-top in this order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DragOrder {
    order: Vec<usize>,
    stage_of: Vec<usize>,
}

impl DragOrder {
    pub fn identity(mu: usize) -> Self {
        DragOrder {
            order: (0..mu).collect(),
            stage_of: (0..mu).collect(),
        }
    }

    pub fn new(order: Vec<usize>) -> Option<Self> {
        let mu = order.len();
        let mut stage_of = vec![usize::MAX; mu];
        for (stage, &color) in order.iter().enumerate() {
            if color >= mu || stage_of[color] != usize::MAX {
                return None;
            }
            stage_of[color] = stage;
        }
        Some(DragOrder { order, stage_of })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Rank of `color` in the drag sequence.
    pub fn stage(&self, color: usize) -> usize {
        self.stage_of[color]
    }

    pub fn mu(&self) -> usize {
        self.order.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PassSide {
    Front,
    Back,
}

/// A band or finger read off the color-sorted braid diagram, over sorted
/// disk indices (bottom to top, starting at 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RawEvent {
    /// Half-twisted band joining sorted disks `disk` and `disk + 1`, which
    /// have the same color.
    Band { disk: usize, sign: i8 },
    /// Finger from disk `lo` clasping disk `hi` (`lo < hi`, colors differ).
    /// `passes` lists the disks the finger travels past, bottom to top; back
    /// passes are ribbon intersections.
    Finger {
        lo: usize,
        hi: usize,
        sign: i8,
        passes: Vec<(usize, PassSide)>,
    },
}

impl RawEvent {
    pub fn endpoints(&self) -> (usize, usize) {
        match *self {
            RawEvent::Band { disk, .. } => (disk, disk + 1),
            RawEvent::Finger { lo, hi, .. } => (lo, hi),
        }
    }

    pub fn sign(&self) -> i8 {
        match *self {
            RawEvent::Band { sign, .. } | RawEvent::Finger { sign, .. } => sign,
        }
    }

    pub fn is_clean(&self) -> bool {
        match self {
            RawEvent::Band { .. } => true,
            RawEvent::Finger { passes, .. } => passes.is_empty(),
        }
    }

    fn same_kind(&self, other: &RawEvent) -> bool {
        matches!(
            (self, other),
            (RawEvent::Band { .. }, RawEvent::Band { .. })
                | (RawEvent::Finger { .. }, RawEvent::Finger { .. })
        )
    }

    /// Events cancel when they join the same disks with opposite handedness.
    fn cancels(&self, other: &RawEvent) -> bool {
        self.same_kind(other)
            && self.endpoints() == other.endpoints()
            && self.sign() == -other.sign()
    }
}

/// Colors of the sorted disks, bottom to top: one block per color, stacked
/// in drag order.
pub fn disk_colors(braid: &ColoredBraid, drag: &DragOrder) -> Vec<usize> {
    let mut colors = Vec::with_capacity(braid.strands);
    for &color in drag.order() {
        let count = braid.colors.iter().filter(|&&c| c == color).count();
        colors.extend(std::iter::repeat_n(color, count));
    }
    colors
}

fn block_offsets(braid: &ColoredBraid, drag: &DragOrder) -> Vec<usize> {
    let mut counts = vec![0usize; braid.mu];
    for &c in &braid.colors {
        counts[c] += 1;
    }
    let mut offsets = vec![0usize; braid.mu];
    let mut acc = 0;
    for &color in drag.order() {
        offsets[color] = acc;
        acc += counts[color];
    }
    offsets
}

/// Simulates the braid left to right and reads off the events of the
/// color-sorted diagram.
///
/// At each crossing the strands in positions `p`, `p+1` interact. Crossings
/// between equal colors become bands; a crossing whose over-strand has the
/// smaller drag stage becomes a finger from the over-strand's disk to the
/// under-strand's disk (passing in front of or behind each disk in between,
/// depending on whether the crossing sits above or below that strand); a
/// crossing whose over-strand has the larger stage disappears.
pub fn sort_by_color(braid: &ColoredBraid, drag: &DragOrder) -> Vec<RawEvent> {
    assert_eq!(drag.mu(), braid.mu);
    let n = braid.strands;
    let offsets = block_offsets(braid, drag);
    // strand_at[p]: strand (by start position) currently at position p
    let mut strand_at: Vec<usize> = (0..n).collect();
    let mut pos_of: Vec<usize> = (0..n).collect();

    let sorted_pos = |strand: usize, pos_of: &[usize]| -> usize {
        let color = braid.colors[strand];
        let rank = (0..n)
            .filter(|&t| braid.colors[t] == color && pos_of[t] < pos_of[strand])
            .count();
        offsets[color] + rank
    };

    let mut events = Vec::new();
    for &s in &braid.word {
        let p = s.unsigned_abs() as usize - 1;
        let sign = if s > 0 { 1i8 } else { -1i8 };
        let (over, under) = if s > 0 {
            (strand_at[p + 1], strand_at[p])
        } else {
            (strand_at[p], strand_at[p + 1])
        };
        let (c_over, c_under) = (braid.colors[over], braid.colors[under]);
        if c_over == c_under {
            let a = sorted_pos(over, &pos_of);
            let b = sorted_pos(under, &pos_of);
            events.push(RawEvent::Band {
                disk: a.min(b),
                sign,
            });
        } else if drag.stage(c_over) < drag.stage(c_under) {
            let lo = sorted_pos(over, &pos_of);
            let hi = sorted_pos(under, &pos_of);
            debug_assert!(lo < hi);
            let mut at_sorted = vec![usize::MAX; n];
            for t in 0..n {
                at_sorted[sorted_pos(t, &pos_of)] = t;
            }
            let passes = (lo + 1..hi)
                .map(|d| {
                    let t = at_sorted[d];
                    debug_assert!(pos_of[t] < p || pos_of[t] > p + 1);
                    let side = if pos_of[t] < p {
                        PassSide::Back
                    } else {
                        PassSide::Front
                    };
                    (d, side)
                })
                .collect();
            events.push(RawEvent::Finger {
                lo,
                hi,
                sign,
                passes,
            });
        }
        // else: the over-strand is dragged later and the crossing vanishes

        strand_at.swap(p, p + 1);
        pos_of[strand_at[p]] = p;
        pos_of[strand_at[p + 1]] = p + 1;
    }
    events
}

/// Replaces every ribbon intersection by a pair of clean fingers.
///
/// For each finger, its back passes are processed from the bottom-most disk
/// upward: the pass is removed, a right-handed clean finger to the passed
/// disk is inserted immediately left of the finger and a left-handed one
/// immediately right. Front passes carry no further data and are dropped.
pub fn remove_ribbons(events: Vec<RawEvent>) -> Vec<RawEvent> {
    let mut out = Vec::with_capacity(events.len());
    for event in events {
        match event {
            RawEvent::Band { .. } => out.push(event),
            RawEvent::Finger {
                lo,
                hi,
                sign,
                passes,
            } => {
                let mut backs: Vec<usize> = passes
                    .iter()
                    .filter(|(_, side)| *side == PassSide::Back)
                    .map(|&(d, _)| d)
                    .collect();
                backs.sort_unstable();
                for &disk in &backs {
                    out.push(RawEvent::Finger {
                        lo,
                        hi: disk,
                        sign: 1,
                        passes: Vec::new(),
                    });
                }
                out.push(RawEvent::Finger {
                    lo,
                    hi,
                    sign,
                    passes: Vec::new(),
                });
                for &disk in backs.iter().rev() {
                    out.push(RawEvent::Finger {
                        lo,
                        hi: disk,
                        sign: -1,
                        passes: Vec::new(),
                    });
                }
            }
        }
    }
    out
}

/// Deletes adjacent opposite-handed pairs of events between the same disks,
/// cyclically (the last and first event may cancel), until a fixed point.
pub fn cleanup(events: Vec<RawEvent>) -> Vec<RawEvent> {
    debug_assert!(events.iter().all(RawEvent::is_clean));
    let mut stack: Vec<RawEvent> = Vec::with_capacity(events.len());
    for event in events {
        if stack.last().is_some_and(|top| top.cancels(&event)) {
            stack.pop();
        } else {
            stack.push(event);
        }
    }
    // wrap-around: the interior is already reduced, so only the outermost
    // first/last pairs can still cancel
    while stack.len() >= 2 && stack[0].cancels(stack.last().unwrap()) {
        stack.pop();
        stack.remove(0);
    }
    stack
}

/// Makes each one-color surface and then the whole complex connected, by
/// appending opposite-handed pairs of bands and fingers; with `pairwise` set,
/// also makes every two one-color surfaces intersect.
///
/// Appended events go at the right end, bands first, then the fingers that
/// join components, then the pairwise fingers, each group ordered by disk
/// index. The result is not re-cleaned: the added pairs are load-bearing.
pub fn ensure_connected(
    events: Vec<RawEvent>,
    colors: &[usize],
    pairwise: bool,
) -> Vec<RawEvent> {
    let n = colors.len();
    let mut events = events;

    // (1) bands between adjacent same-color disks in different band-components
    let mut bands = Dsu::new(n);
    for e in &events {
        if let RawEvent::Band { disk, .. } = *e {
            bands.union(disk, disk + 1);
        }
    }
    for d in 0..n.saturating_sub(1) {
        if colors[d] == colors[d + 1] && bands.find(d) != bands.find(d + 1) {
            bands.union(d, d + 1);
            events.push(RawEvent::Band { disk: d, sign: 1 });
            events.push(RawEvent::Band { disk: d, sign: -1 });
        }
    }

    // (2) fingers from the bottom-most disk of the bottom-most component to
    // the bottom-most disk of every other component
    let mut whole = Dsu::new(n);
    for e in &events {
        let (a, b) = e.endpoints();
        whole.union(a, b);
    }
    let mut bottoms = Vec::new(); // bottom-most disk of each component, ascending
    for d in 0..n {
        if whole.find(d) == d {
            bottoms.push(d);
        }
    }
    let base = bottoms[0];
    for &d in &bottoms[1..] {
        // disks below have colors of earlier drag stages, so `base < d`
        // already orders the pair by stage
        events.push(RawEvent::Finger {
            lo: base,
            hi: d,
            sign: 1,
            passes: Vec::new(),
        });
        events.push(RawEvent::Finger {
            lo: base,
            hi: d,
            sign: -1,
            passes: Vec::new(),
        });
        whole.union(base, d);
    }

    // (3) optionally, fingers between every two colors whose surfaces do not
    // yet intersect
    if pairwise {
        let mu = colors.iter().copied().max().map_or(0, |c| c + 1);
        let mut clasped = vec![vec![false; mu]; mu];
        for e in &events {
            let (a, b) = e.endpoints();
            let (ca, cb) = (colors[a], colors[b]);
            if ca != cb {
                clasped[ca][cb] = true;
                clasped[cb][ca] = true;
            }
        }
        let bottom_of_color = |c: usize| colors.iter().position(|&x| x == c).unwrap();
        let mut pairs = Vec::new();
        for ca in 0..mu {
            for cb in ca + 1..mu {
                if !clasped[ca][cb] {
                    let (a, b) = (bottom_of_color(ca), bottom_of_color(cb));
                    pairs.push((a.min(b), a.max(b)));
                }
            }
        }
        pairs.sort_unstable();
        for (lo, hi) in pairs {
            events.push(RawEvent::Finger {
                lo,
                hi,
                sign: 1,
                passes: Vec::new(),
            });
            events.push(RawEvent::Finger {
                lo,
                hi,
                sign: -1,
                passes: Vec::new(),
            });
        }
    }
    events
}

/// An edge of the decorated spine: a half-twisted band when its endpoints
/// share a color, otherwise a clasp.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpineEdge {
    pub lower: usize,
    pub upper: usize,
    pub sign: i8,
}

/// The ordered, colored, signed graph encoding a C-complex: vertices are the
/// Seifert disks bottom to top, edges the bands and fingers left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedSpine {
    pub mu: usize,
    /// Color of each vertex, bottom to top.
    pub colors: Vec<usize>,
    /// Edges in left-to-right order.
    pub edges: Vec<SpineEdge>,
}

impl DecoratedSpine {
    pub fn new(mu: usize, colors: Vec<usize>, edges: Vec<SpineEdge>) -> Result<Self, SpineError> {
        let n = colors.len();
        if colors.iter().any(|&c| c >= mu) {
            return Err(SpineError::ColorOutOfRange);
        }
        for (i, e) in edges.iter().enumerate() {
            if e.lower >= e.upper || e.upper >= n || (e.sign != 1 && e.sign != -1) {
                return Err(SpineError::InvalidEdge(i));
            }
        }
        let spine = DecoratedSpine { mu, colors, edges };
        spine.check_connectivity()?;
        Ok(spine)
    }

    fn check_connectivity(&self) -> Result<(), SpineError> {
        let n = self.colors.len();
        let mut whole = Dsu::new(n);
        let mut bands = Dsu::new(n);
        for e in &self.edges {
            whole.union(e.lower, e.upper);
            if self.colors[e.lower] == self.colors[e.upper] {
                bands.union(e.lower, e.upper);
            }
        }
        if (1..n).any(|v| whole.find(v) != whole.find(0)) {
            return Err(SpineError::Disconnected);
        }
        for color in 0..self.mu {
            let of_color: Vec<usize> = (0..n).filter(|&v| self.colors[v] == color).collect();
            if let Some(&first) = of_color.first() {
                if of_color.iter().any(|&v| bands.find(v) != bands.find(first)) {
                    return Err(SpineError::ColorDisconnected(color));
                }
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Rank of the first homology of the spine, `E - V + 1`.
    pub fn rank(&self) -> usize {
        self.edges.len() + 1 - self.colors.len()
    }

    pub fn is_clasp(&self, edge: usize) -> bool {
        let e = &self.edges[edge];
        self.colors[e.lower] != self.colors[e.upper]
    }
}

/// Encodes a clean, connected event list as a decorated spine.
pub fn encode_spine(events: &[RawEvent], colors: &[usize]) -> Result<DecoratedSpine, SpineError> {
    debug_assert!(events.iter().all(RawEvent::is_clean));
    let mu = colors.iter().copied().max().map_or(0, |c| c + 1);
    let edges = events
        .iter()
        .map(|e| {
            let (lower, upper) = e.endpoints();
            SpineEdge {
                lower,
                upper,
                sign: e.sign(),
            }
        })
        .collect();
    DecoratedSpine::new(mu, colors.to_vec(), edges)
}

/// Full construction for one drag order: sort, remove ribbons, clean up,
/// repair connectivity, encode.
pub fn build_spine(
    braid: &ColoredBraid,
    drag: &DragOrder,
    pairwise: bool,
) -> Result<DecoratedSpine, SpineError> {
    let colors = disk_colors(braid, drag);
    let events = sort_by_color(braid, drag);
    let events = remove_ribbons(events);
    let events = cleanup(events);
    let events = ensure_connected(events, &colors, pairwise);
    encode_spine(&events, &colors)
}
