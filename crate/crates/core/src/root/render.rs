//! Text and SVG pictures of graded roots.
//!
//! Layout: local minima are placed left to right in tree order, a branch
//! vertex sits midway between its outermost children, and implicit string
//! vertices share the column of the stored vertex below them. Levels run
//! from `min chi` at the bottom to one level above the top vertex; the
//! picture is cut there and the stem continues upward.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use super::GradedRoot;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

pub fn render(root: &GradedRoot, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(root),
        RenderFormat::Svg => render_svg(root),
    }
}

/// Column of every stored vertex, in units of leaf slots.
fn columns(root: &GradedRoot) -> (Vec<i64>, i64) {
    let mut col = vec![0i64; root.nodes().len()];
    let mut next = 0i64;
    for v in root.postorder() {
        let node = &root.nodes()[v];
        if node.children.is_empty() {
            col[v] = 2 * next;
            next += 1;
        } else {
            let first = col[node.children[0]];
            let last = col[*node.children.last().unwrap()];
            col[v] = (first + last) / 2;
        }
    }
    (col, next)
}

// columns are doubled slot indices so midpoints stay integral
const ASCII_SLOT: i64 = 2;
const LABEL_WIDTH: usize = 6;

pub fn render_ascii(root: &GradedRoot) -> String {
    let (col, slots) = columns(root);
    let top = root.chi(root.top());
    let low = root.min_chi();
    let width = (slots * 2 * ASCII_SLOT) as usize + 1;
    let pos = |c: i64| (c * ASCII_SLOT) as usize + ASCII_SLOT as usize;

    let mut out = String::new();
    for level in (low..=top + 1).rev() {
        let mut row = vec![b' '; width];
        for (v, node) in root.nodes().iter().enumerate() {
            let x = pos(col[v]);
            if node.chi == level {
                if let (Some(&first), Some(&last)) = (node.children.first(), node.children.last()) {
                    for cell in &mut row[pos(col[first])..=pos(col[last])] {
                        *cell = b'-';
                    }
                }
                row[x] = b'o';
            } else {
                let ceiling = match node.parent {
                    Some(p) => root.chi(p),
                    None => top + 2,
                };
                if node.chi < level && level < ceiling {
                    row[x] = b'|';
                }
            }
        }
        while row.last() == Some(&b' ') {
            row.pop();
        }
        let body = String::from_utf8(row).unwrap();
        let _ = writeln!(out, "{level:>w$} {body}", w = LABEL_WIDTH - 1);
    }
    out
}

const SVG_LEVEL: i64 = 20;
const SVG_SLOT: i64 = 15;
const SVG_LEFT: i64 = 50;
const SVG_MARGIN: i64 = 20;
const SVG_RADIUS: i64 = 3;

pub fn render_svg(root: &GradedRoot) -> String {
    let (col, slots) = columns(root);
    let top = root.chi(root.top());
    let low = root.min_chi();
    let high = top + 1;
    let width = SVG_LEFT + (2 * slots) * SVG_SLOT + SVG_MARGIN;
    let height = 2 * SVG_MARGIN + (high - low) * SVG_LEVEL + SVG_LEVEL;
    let x_of = |c: i64| SVG_LEFT + SVG_SLOT + c * SVG_SLOT;
    let y_of = |level: i64| SVG_MARGIN + SVG_LEVEL + (high - level) * SVG_LEVEL;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r##"<g class="levels" stroke="#bbbbbb" stroke-width="0.5" stroke-dasharray="3,3">"##
    );
    for level in (low..=high).rev() {
        let y = y_of(level);
        let _ = writeln!(
            out,
            r#"<line x1="{SVG_LEFT}" y1="{y}" x2="{}" y2="{y}"/>"#,
            width - SVG_MARGIN
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(
        out,
        r#"<g class="labels" font-family="monospace" font-size="10" text-anchor="end">"#
    );
    for level in (low..=high).rev().filter(|l| l % 5 == 0) {
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}">{level}</text>"#,
            SVG_LEFT - 6,
            y_of(level) + 3
        );
    }
    let _ = writeln!(out, "</g>");

    // vertices and edges of the expanded picture
    let mut vertices: Vec<(i64, i64)> = Vec::new();
    let mut edges: Vec<((i64, i64), (i64, i64))> = Vec::new();
    for (v, node) in root.nodes().iter().enumerate() {
        let x = x_of(col[v]);
        let (ceiling, parent_x) = match node.parent {
            Some(p) => (root.chi(p), x_of(col[p])),
            None => (high + 1, x),
        };
        for level in node.chi..ceiling.min(high + 1) {
            vertices.push((x, y_of(level)));
            let upper = if level + 1 == ceiling { parent_x } else { x };
            if level < high {
                edges.push(((x, y_of(level)), (upper, y_of(level + 1))));
            }
        }
    }
    let _ = writeln!(out, r#"<g class="edges" stroke="black" stroke-width="1">"#);
    for ((x1, y1), (x2, y2)) in edges {
        let _ = writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
    }
    let top_x = x_of(col[root.top()]);
    let _ = writeln!(
        out,
        r#"<line class="stem" x1="{top_x}" y1="{}" x2="{top_x}" y2="{}" stroke-dasharray="2,2"/>"#,
        y_of(high),
        y_of(high) - SVG_LEVEL / 2 - SVG_MARGIN / 2
    );
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g class="vertices" fill="black">"#);
    for (x, y) in vertices {
        let _ = writeln!(out, r#"<circle cx="{x}" cy="{y}" r="{SVG_RADIUS}"/>"#);
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}

/// One-line summary used in logs: number of minima and grading span.
pub fn describe(root: &GradedRoot) -> String {
    format!(
        "{} minima, chi in [{}, {}]",
        root.leaves().len(),
        root.min_chi(),
        root.chi(root.top())
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root::TauFunction;

    #[test]
    fn ascii_two_leaves() {
        let root = GradedRoot::from_tau(&TauFunction::new(alloc::vec![0, 3, 1, 5]));
        let text = render_ascii(&root);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[0].starts_with("    4"));
        assert!(lines[1].contains("o"));
        assert!(lines[4].trim_end().ends_with('o'));
    }

    #[test]
    fn svg_counts_elements() {
        let root = GradedRoot::from_tau(&TauFunction::new(alloc::vec![0, 3, 1, 5]));
        let svg = render_svg(&root);
        // vertices up to one level above the top: 4 + 2 + 1
        assert_eq!(
            svg.matches("<circle").count(),
            root.expanded_len() as usize + 1
        );
        // dashed level lines 0..=4, edges between consecutive vertices, one stem
        assert_eq!(
            svg.matches("<line").count(),
            5 + root.expanded_len() as usize + 1
        );
        assert!(svg.starts_with("<?xml"));
    }
}
