//! Arc diagrams of contractions: SVG and plain-text renderings.
//!
//! A word of length m becomes m equally spaced vertices on a baseline,
//! numbered beneath. Creators are filled, annihilators are outlined, and
//! the mode picks the colour (or the shape, in monochrome shape mode).
//! Every matched pair becomes an arc strictly above the baseline whose
//! height grows with the distance between its endpoints. Rendering is a
//! pure function of the spec, so outputs are byte-stable.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::contraction::Matching;
use crate::word::{generator_name, Word};

/// Colours assigned to modes 1, 2, ... in order; further modes reuse the
/// cycle.
pub const COLOUR_CYCLE: [&str; 8] = [
    "#000000", "#c02020", "#2050c0", "#108040", "#b06000", "#7030a0", "#c03080", "#406080",
];

const ARC_COLOUR: &str = "#555555";
const LABEL_COLOUR: &str = "#333333";

/// Everything a rendering depends on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramSpec {
    pub word: Word,
    pub matching: Matching,
    pub modes: usize,
    /// Colour per mode, indexed by mode - 1. Must cover all modes.
    pub palette: Vec<String>,
    /// Horizontal distance between vertices.
    pub pitch: u32,
    /// Control-point rise per unit of arc span.
    pub arc_scale: u32,
    /// Encode the mode as a vertex shape and draw everything in one colour.
    pub shapes: bool,
}

/// The default palette for a system of `modes` modes.
pub fn default_palette(modes: usize) -> Vec<String> {
    (0..modes)
        .map(|m| COLOUR_CYCLE[m % COLOUR_CYCLE.len()].to_string())
        .collect()
}

impl DiagramSpec {
    pub fn new(word: Word, matching: Matching, modes: usize) -> DiagramSpec {
        DiagramSpec {
            word,
            matching,
            modes,
            palette: default_palette(modes),
            pitch: 40,
            arc_scale: 20,
            shapes: false,
        }
    }
}

fn mode_colour(spec: &DiagramSpec, mode: u32) -> &str {
    &spec.palette[(mode - 1) as usize % spec.palette.len()]
}

/// Vertex shapes used in shape mode, cycled by mode index.
const SHAPES: [Shape; 4] = [
    Shape::Circle,
    Shape::Square,
    Shape::Diamond,
    Shape::Triangle,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    Circle,
    Square,
    Diamond,
    Triangle,
}

fn vertex_svg(x: i64, y: i64, shape: Shape, colour: &str, filled: bool) -> String {
    let style = if filled {
        format!("fill=\"{colour}\" stroke=\"none\"")
    } else {
        format!("fill=\"none\" stroke=\"{colour}\" stroke-width=\"2\"")
    };
    match shape {
        Shape::Circle => format!("  <circle cx=\"{x}\" cy=\"{y}\" r=\"8\" {style}/>\n"),
        Shape::Square => format!(
            "  <rect x=\"{}\" y=\"{}\" width=\"14\" height=\"14\" {style}/>\n",
            x - 7,
            y - 7
        ),
        Shape::Diamond => format!(
            "  <polygon points=\"{x},{} {},{y} {x},{} {},{y}\" {style}/>\n",
            y - 9,
            x + 9,
            y + 9,
            x - 9
        ),
        Shape::Triangle => format!(
            "  <polygon points=\"{x},{} {},{} {},{}\" {style}/>\n",
            y - 9,
            x + 8,
            y + 7,
            x - 8,
            y + 7
        ),
    }
}

/// Renders the spec as a standalone SVG document.
pub fn render_svg(spec: &DiagramSpec) -> String {
    let letters = spec.word.letters();
    let m = letters.len() as i64;
    let pitch = spec.pitch as i64;
    let max_span = spec
        .matching
        .pairs()
        .iter()
        .map(|&(p, q)| (q - p) as i64)
        .max()
        .unwrap_or(0);
    let baseline = 20 + spec.arc_scale as i64 * max_span;
    let width = pitch * (m + 1);
    let height = baseline + 36;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    for &(p, q) in spec.matching.pairs() {
        let x1 = pitch * p as i64;
        let x2 = pitch * q as i64;
        let y0 = baseline - 8;
        let yc = y0 - spec.arc_scale as i64 * (q - p) as i64;
        let xm = (x1 + x2) / 2;
        let _ = writeln!(
            svg,
            "  <path d=\"M {x1} {y0} Q {xm} {yc} {x2} {y0}\" fill=\"none\" stroke=\"{ARC_COLOUR}\" stroke-width=\"2\"/>"
        );
    }
    for (idx, g) in letters.iter().enumerate() {
        let x = pitch * (idx as i64 + 1);
        let (shape, colour) = if spec.shapes {
            (SHAPES[(g.mode - 1) as usize % SHAPES.len()], "#000000")
        } else {
            (Shape::Circle, mode_colour(spec, g.mode))
        };
        svg.push_str(&vertex_svg(x, baseline, shape, colour, g.dagger));
        let _ = writeln!(
            svg,
            "  <text x=\"{x}\" y=\"{}\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\" fill=\"{LABEL_COLOUR}\">{}</text>",
            baseline + 24,
            idx + 1
        );
    }
    svg.push_str("</svg>\n");
    svg
}

/// Renders the spec as plain text: arc rows above a row of word tokens.
/// Arcs use underscores for the span and vertical bars dropping to their
/// endpoints; shorter arcs sit closer to the tokens.
pub fn render_ascii(spec: &DiagramSpec) -> String {
    let letters = spec.word.letters();
    let tokens: Vec<String> = letters
        .iter()
        .map(|&g| generator_name(g, spec.modes))
        .collect();
    let mut cols = Vec::with_capacity(tokens.len());
    let mut width = 0usize;
    for t in &tokens {
        if width > 0 {
            width += 1;
        }
        cols.push(width);
        width += t.len();
    }
    let symbol_row = tokens.join(" ");
    if spec.matching.degree() == 0 {
        return symbol_row;
    }

    // assign arcs to rows: shortest spans first, lowest free row
    let mut pairs: Vec<(usize, usize)> = spec.matching.pairs().to_vec();
    pairs.sort_by_key(|&(p, q)| (q - p, p));
    let mut rows: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut placed: Vec<(usize, usize, usize)> = Vec::new(); // (row, col_p, col_q)
    for &(p, q) in &pairs {
        let (cp, cq) = (cols[p - 1], cols[q - 1]);
        let mut row = 0;
        loop {
            if row == rows.len() {
                rows.push(Vec::new());
            }
            let free = rows[row].iter().all(|&(a, b)| cq < a || b < cp);
            if free {
                rows[row].push((cp, cq));
                placed.push((row, cp, cq));
                break;
            }
            row += 1;
        }
    }

    let max_row = rows.len() - 1;
    let lines = max_row + 2;
    let mut grid = alloc::vec![alloc::vec![b' '; width]; lines];
    for &(row, cp, cq) in &placed {
        let line = max_row - row;
        for cell in grid[line][cp + 1..cq].iter_mut() {
            *cell = b'_';
        }
        for below in grid[line + 1..lines].iter_mut() {
            below[cp] = b'|';
            below[cq] = b'|';
        }
    }

    let mut out = String::new();
    for line in grid {
        let text = core::str::from_utf8(&line).unwrap().trim_end();
        out.push_str(text);
        out.push('\n');
    }
    out.push_str(&symbol_row);
    out
}
