//! SVG drawing of copies of the fundamental domain of a cusp complex.

use std::fmt::Write;

use crate::complex::{CuspComplex, EdgeClass, TriangleKind};

/// Pixels per unit length.
const UNIT: f64 = 120.0;
const MARGIN: f64 = 30.0;

fn num(v: f64) -> String {
    format!("{v:.2}")
}

/// Draws `copies_x × copies_y` fundamental domains with vertex labels and
/// valences, shaded clasp triangles and dashed meridional lines. A zero
/// count yields a document holding only metadata. Output is byte-stable.
pub fn render_svg(cx: &CuspComplex, copies_x: u32, copies_y: u32) -> String {
    let s = cx.x_scale as f64;
    let (px, py) = (cx.periods.0 as f64, cx.periods.1 as f64);
    let width = copies_x as f64 * px * UNIT + 2.0 * MARGIN;
    let height = copies_y as f64 * py * UNIT + 2.0 * MARGIN;
    let to_screen = |x: i64, y: i64, i: u32, j: u32| {
        let sx = MARGIN + (x as f64 / s + i as f64 * px) * UNIT;
        let sy = height - MARGIN - (y as f64 + j as f64 * py) * UNIT;
        (sx, sy)
    };

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        num(width),
        num(height),
        num(width),
        num(height)
    );
    let counts = cx.counts();
    let _ = writeln!(
        out,
        "<metadata>word={} components={} vertices={} edges={} triangles={} copies={}x{}</metadata>",
        cx.word, cx.epsilon, counts.vertices, counts.edges, counts.triangles, copies_x, copies_y
    );
    let _ = writeln!(out, "<title>Cusp triangulation of {}</title>", cx.word);
    if copies_x == 0 || copies_y == 0 {
        out.push_str("</svg>\n");
        return out;
    }

    out.push_str("<g id=\"triangles\" stroke=\"#333\" stroke-width=\"1\">\n");
    for j in 0..copies_y {
        for i in 0..copies_x {
            for t in &cx.triangles {
                let pts: Vec<String> = t
                    .corners
                    .iter()
                    .map(|p| {
                        let (x, y) = to_screen(p.x, p.y, i, j);
                        format!("{},{}", num(x), num(y))
                    })
                    .collect();
                let fill = match t.kind {
                    TriangleKind::Clasp => "#c8d8f0",
                    TriangleKind::Ordinary => "#ffffff",
                };
                let _ = writeln!(
                    out,
                    "<polygon class=\"{}\" data-letter=\"{}\" points=\"{}\" fill=\"{}\"/>",
                    if t.kind == TriangleKind::Clasp { "clasp" } else { "ordinary" },
                    t.letter_index,
                    pts.join(" "),
                    fill
                );
            }
        }
    }
    out.push_str("</g>\n");

    out.push_str("<g id=\"meridians\" stroke=\"#b00\" stroke-width=\"2.5\">\n");
    for j in 0..copies_y {
        for i in 0..copies_x {
            for e in cx.edges.iter().filter(|e| e.class == EdgeClass::Meridional) {
                let (x1, y1) = to_screen(e.segment[0].x, e.segment[0].y, i, j);
                let (x2, y2) = to_screen(e.segment[1].x, e.segment[1].y, i, j);
                let _ = writeln!(
                    out,
                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                    num(x1),
                    num(y1),
                    num(x2),
                    num(y2)
                );
            }
        }
    }
    out.push_str("</g>\n");

    out.push_str("<g id=\"lines\" stroke=\"#999\" stroke-dasharray=\"4 4\">\n");
    let total_x = copies_x as i64 * cx.periods.0;
    for k in 0..=total_x {
        let x = MARGIN + k as f64 * UNIT;
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            num(x),
            num(MARGIN),
            num(x),
            num(height - MARGIN)
        );
    }
    out.push_str("</g>\n");

    out.push_str("<g id=\"vertices\" font-family=\"sans-serif\" font-size=\"11\">\n");
    for j in 0..copies_y {
        for i in 0..copies_x {
            for v in &cx.vertices {
                let (x, y) = to_screen(v.position.x, v.position.y, i, j);
                let _ = writeln!(
                    out,
                    "<circle cx=\"{}\" cy=\"{}\" r=\"3\"/><text x=\"{}\" y=\"{}\">{} ({})</text>",
                    num(x),
                    num(y),
                    num(x + 4.0),
                    num(y - 4.0),
                    v.label,
                    v.valence
                );
            }
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}
