//! Static SVG rendering of the input braid diagram and of the spine
//! schematic. Layouts are computed from the data alone, so output bytes are
//! deterministic for a fixed input.

use clasp_core::braid::ColoredBraid;
use clasp_core::ccomplex::DecoratedSpine;
use std::fmt::Write;

const PALETTE: [&str; 8] = [
    "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f",
];

fn color(index: usize) -> &'static str {
    PALETTE[index % PALETTE.len()]
}

/// Braid diagram: one horizontal lane per position (bottom lane = position
/// 0), one column per crossing, strands colored by their component's color,
/// the under-strand broken at each crossing.
pub fn braid_svg(braid: &ColoredBraid) -> String {
    let n = braid.strands;
    let m = braid.word.len();
    let step = 48i64;
    let row = 36i64;
    let margin = 24i64;
    let width = margin * 2 + step * (m as i64).max(1);
    let height = margin * 2 + row * (n as i64 - 1).max(0);
    let y = |pos: usize| height - margin - row * pos as i64;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(svg, "<rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>");

    let mut strand_at: Vec<usize> = (0..n).collect();
    let mut x = margin;
    let line = |svg: &mut String, x1: i64, y1: i64, x2: i64, y2: i64, stroke: &str| {
        let _ = writeln!(
            svg,
            "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"{stroke}\" stroke-width=\"3\" stroke-linecap=\"round\"/>"
        );
    };

    if m == 0 {
        for p in 0..n {
            line(
                &mut svg,
                x,
                y(p),
                x + step,
                y(p),
                color(braid.colors[strand_at[p]]),
            );
        }
    }
    for &s in &braid.word {
        let p = s.unsigned_abs() as usize - 1;
        for q in 0..n {
            if q != p && q != p + 1 {
                line(&mut svg, x, y(q), x + step, y(q), color(braid.colors[strand_at[q]]));
            }
        }
        // over-strand drawn whole; under-strand broken around the middle
        let (over_pos, under_pos) = if s > 0 { (p + 1, p) } else { (p, p + 1) };
        let over_color = color(braid.colors[strand_at[over_pos]]);
        let under_color = color(braid.colors[strand_at[under_pos]]);
        let (ux1, uy1) = (x, y(under_pos));
        let (ux2, uy2) = (x + step, y(over_pos));
        let mid_x = x + step / 2;
        let mid_y = (uy1 + uy2) / 2;
        let gap = 7i64;
        let dx = (ux2 - ux1) as f64;
        let dy = (uy2 - uy1) as f64;
        let len = (dx * dx + dy * dy).sqrt();
        let (gx, gy) = (
            (gap as f64 * dx / len) as i64,
            (gap as f64 * dy / len) as i64,
        );
        line(&mut svg, ux1, uy1, mid_x - gx, mid_y - gy, under_color);
        line(&mut svg, mid_x + gx, mid_y + gy, ux2, uy2, under_color);
        line(&mut svg, x, y(over_pos), x + step, y(under_pos), over_color);

        strand_at.swap(p, p + 1);
        x += step;
    }
    svg.push_str("</svg>\n");
    svg
}

/// Spine schematic: one horizontal bar per disk (bottom to top), colored by
/// the disk's color; edges as nested hooks to the left of all bars, in
/// left-to-right order, each labeled with its sign.
pub fn spine_svg(spine: &DecoratedSpine) -> String {
    let v = spine.vertex_count();
    let e = spine.edge_count();
    let edge_step = 26i64;
    let row = 44i64;
    let margin = 24i64;
    let bar_width = 120i64;
    let bar_height = 8i64;
    let edge_zone = margin + edge_step * e as i64;
    let width = edge_zone + bar_width + margin;
    let height = margin * 2 + row * (v as i64 - 1).max(0) + bar_height;
    let y = |vertex: usize| height - margin - row * vertex as i64 - bar_height / 2;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(svg, "<rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>");

    for (index, edge) in spine.edges.iter().enumerate() {
        let x = margin + edge_step * index as i64;
        let (y_lower, y_upper) = (y(edge.lower), y(edge.upper));
        let _ = writeln!(
            svg,
            "<path d=\"M {bx} {y_lower} H {x} V {y_upper} H {bx}\" fill=\"none\" stroke=\"#333333\" stroke-width=\"2\"/>",
            bx = edge_zone,
        );
        let label = if edge.sign > 0 { "+" } else { "&#8722;" };
        let _ = writeln!(
            svg,
            "<text x=\"{tx}\" y=\"{ty}\" font-size=\"14\" text-anchor=\"middle\" fill=\"#333333\">{label}</text>",
            tx = x - 8,
            ty = (y_lower + y_upper) / 2,
        );
    }
    for (vertex, &c) in spine.colors.iter().enumerate() {
        let _ = writeln!(
            svg,
            "<rect x=\"{x}\" y=\"{ry}\" width=\"{bar_width}\" height=\"{bar_height}\" rx=\"3\" fill=\"{fill}\"/>",
            x = edge_zone,
            ry = y(vertex) - bar_height / 2,
            fill = color(c),
        );
    }
    svg.push_str("</svg>\n");
    svg
}
