//! Drawings of decompositions in the usual convention: vertex `(m, n)` at
//! coordinates `(m, n)`, and each wrap edge `(k-1,n)(0,n-l)` drawn as two
//! half-edges carrying the same number. Numbers run from the top down by the
//! level of the right-hand end.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{Dir, Edge, GklParams};
use crate::periodic::{Color, Decomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
    Tikz,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "svg" => Ok(Format::Svg),
            "tikz" => Ok(Format::Tikz),
            other => Err(Error::Malformed(format!("unknown render format `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub lo: i64,
    pub hi: i64,
    pub format: Format,
    /// Stroke colours of class 1 and class 2 (SVG and TikZ).
    pub palette: [String; 2],
}

impl RenderSpec {
    pub fn new(lo: i64, hi: i64, format: Format) -> Self {
        RenderSpec {
            lo,
            hi,
            format,
            palette: ["#d62728".to_string(), "#1f77b4".to_string()],
        }
    }
}

/// Which edges are drawn and how wrap edges are numbered.
struct Layout {
    g: GklParams,
    lo: i64,
    hi: i64,
    /// Label of the wrap edge whose right-hand end is at the given level.
    labels: BTreeMap<i64, usize>,
    top: i64,
    bottom: i64,
}

impl Layout {
    fn new(g: GklParams, lo: i64, hi: i64) -> Self {
        let labels = (lo..=hi).rev().enumerate().map(|(i, n)| (n, i + 1)).collect();
        let l = g.l();
        Layout {
            g,
            lo,
            hi,
            labels,
            top: hi.max(hi - l),
            bottom: lo.min(lo - l),
        }
    }

    fn in_range(&self, n: i64) -> bool {
        (self.lo..=self.hi).contains(&n)
    }

    fn wrap(&self, n: i64) -> Edge {
        Edge::new(self.g.k() - 1, n, Dir::H)
    }

    /// The wrap edge whose left half ends at `(0, level)`, if it is drawn.
    fn left_wrap(&self, level: i64) -> Option<(i64, usize)> {
        let n = level + self.g.l();
        self.labels.get(&n).map(|&label| (n, label))
    }

    /// Edges drawn as full segments.
    fn inner_edges(&self) -> Vec<Edge> {
        let k = self.g.k();
        let mut out = Vec::new();
        for n in (self.lo..=self.hi).rev() {
            for m in 0..k - 1 {
                out.push(Edge::new(m, n, Dir::H));
            }
            if n > self.lo {
                for m in 0..k {
                    out.push(Edge::new(m, n - 1, Dir::V));
                }
            }
        }
        out
    }
}

pub fn render(d: &Decomposition, spec: &RenderSpec) -> Result<String> {
    let min = 2 * d.period();
    if spec.hi - spec.lo < min {
        return Err(Error::RangeTooSmall {
            lo: spec.lo,
            hi: spec.hi,
            min,
        });
    }
    let layout = Layout::new(d.params(), spec.lo, spec.hi);
    Ok(match spec.format {
        Format::Ascii => ascii(d, &layout),
        Format::Svg => svg(d, &layout, spec),
        Format::Tikz => tikz(d, &layout, spec),
    })
}

fn h_char(c: Color) -> char {
    match c {
        Color::One => '-',
        Color::Two => '=',
    }
}

fn v_char(c: Color) -> char {
    match c {
        Color::One => '|',
        Color::Two => ':',
    }
}

fn color_of_char(ch: char) -> Option<Color> {
    match ch {
        '-' | '|' => Some(Color::One),
        '=' | ':' => Some(Color::Two),
        _ => None,
    }
}

/// Widths of the level column and the label column.
fn ascii_widths(layout: &Layout) -> (usize, usize) {
    let level_width = (layout.bottom..=layout.top)
        .map(|n| n.to_string().len())
        .max()
        .unwrap_or(1);
    let label_width = layout.labels.len().to_string().len();
    (level_width, label_width)
}

fn ascii(d: &Decomposition, layout: &Layout) -> String {
    let g = layout.g;
    let k = g.k();
    let (lw, w) = ascii_widths(layout);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# {g} levels {}..{} period {}; class 1: - |  class 2: = :",
        layout.lo,
        layout.hi,
        d.period()
    );
    for level in (layout.bottom..=layout.top).rev() {
        let mut row = format!("{level:>lw$} ");
        match layout.left_wrap(level) {
            Some((n, label)) => {
                let _ = write!(row, "{label:>w$}{}", h_char(d.color(layout.wrap(n))));
            }
            None => row.push_str(&" ".repeat(w + 1)),
        }
        let present = layout.in_range(level);
        for m in 0..k {
            row.push(if present { 'o' } else { ' ' });
            if m + 1 < k {
                row.push(if present {
                    h_char(d.color(Edge::new(m, level, Dir::H)))
                } else {
                    ' '
                });
            }
        }
        if present {
            let label = layout.labels[&level];
            let _ = write!(row, "{}{label}", h_char(d.color(layout.wrap(level))));
        }
        out.push_str(row.trim_end());
        out.push('\n');
        if present && level > layout.lo {
            let mut between = " ".repeat(lw + 1 + w + 1);
            for m in 0..k {
                between.push(v_char(d.color(Edge::new(m, level - 1, Dir::V))));
                if m + 1 < k {
                    between.push(' ');
                }
            }
            out.push_str(&between);
            out.push('\n');
        } else if level > layout.bottom {
            out.push('\n');
        }
    }
    out
}

/// Reads back the colours drawn by the ASCII renderer: every edge with a
/// full segment in range plus every wrap edge (from its right half-edge).
pub fn parse_ascii(text: &str) -> Result<BTreeMap<Edge, Color>> {
    let bad = |msg: &str| Error::Malformed(format!("ascii drawing: {msg}"));
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| bad("empty"))?;
    let nums: Vec<i64> = header
        .split(|c: char| !(c.is_ascii_digit() || c == '-'))
        .filter_map(|t| t.parse().ok())
        .collect();
    let [k, l, lo, hi, _period, ..] = nums[..] else {
        return Err(bad("unreadable header"));
    };
    let g = GklParams::new(k, l)?;
    let layout = Layout::new(g, lo, hi);
    let (lw, w) = ascii_widths(&layout);
    let body_start = lw + 1 + w + 1;
    let mut out = BTreeMap::new();
    let rows: Vec<Vec<char>> = lines.map(|s| s.chars().collect()).collect();
    let mut i = 0;
    for level in (layout.bottom..=layout.top).rev() {
        let row = rows.get(i).ok_or_else(|| bad("too few rows"))?;
        let at = |x: usize| row.get(x).copied().unwrap_or(' ');
        if layout.in_range(level) {
            for m in 0..k {
                let x = body_start + 2 * m as usize;
                if at(x) != 'o' {
                    return Err(bad("missing vertex glyph"));
                }
                let e = if m + 1 < k {
                    Edge::new(m, level, Dir::H)
                } else {
                    layout.wrap(level)
                };
                let c = color_of_char(at(x + 1)).ok_or_else(|| bad("missing edge glyph"))?;
                out.insert(e, c);
            }
            if level > lo {
                let between = rows.get(i + 1).ok_or_else(|| bad("too few rows"))?;
                for m in 0..k {
                    let x = body_start + 2 * m as usize;
                    let ch = between.get(x).copied().unwrap_or(' ');
                    let c = color_of_char(ch).ok_or_else(|| bad("missing vertical glyph"))?;
                    out.insert(Edge::new(m, level - 1, Dir::V), c);
                }
            }
        }
        if let Some((n, _)) = layout.left_wrap(level) {
            let c = color_of_char(at(body_start - 1)).ok_or_else(|| bad("missing half-edge"))?;
            if out.get(&layout.wrap(n)).is_some_and(|&prev| prev != c) {
                return Err(bad("half-edges of one wrap edge disagree"));
            }
        }
        i += 2;
    }
    Ok(out)
}

const SCALE: i64 = 40;
const MARGIN: i64 = 40;

fn svg(d: &Decomposition, layout: &Layout, spec: &RenderSpec) -> String {
    let k = layout.g.k();
    let x = |m: f64| MARGIN as f64 + m * SCALE as f64;
    let y = |n: f64| MARGIN as f64 + (layout.top as f64 - n) * SCALE as f64;
    let width = 2 * MARGIN + (k - 1) * SCALE;
    let height = 2 * MARGIN + (layout.top - layout.bottom) * SCALE;
    let stroke = |c: Color| {
        let i = (c.number() - 1) as usize;
        let dash = if c == Color::Two { " stroke-dasharray=\"6,3\"" } else { "" };
        format!("stroke=\"{}\" stroke-width=\"3\"{dash}", spec.palette[i])
    };
    let mut out = String::new();
    let _ = writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(out, "<title>{} levels {}..{}</title>", layout.g, layout.lo, layout.hi);
    let line = |out: &mut String, x1: f64, y1: f64, x2: f64, y2: f64, c: Color| {
        let _ = writeln!(
            out,
            "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" {}/>",
            stroke(c)
        );
    };
    for e in layout.inner_edges() {
        let (m, n) = (e.base.m as f64, e.base.n as f64);
        let (m2, n2) = match e.dir {
            Dir::H => (m + 1.0, n),
            Dir::V => (m, n + 1.0),
        };
        line(&mut out, x(m), y(n), x(m2), y(n2), d.color(e));
    }
    let half = 0.5;
    for (&n, &label) in &layout.labels {
        let c = d.color(layout.wrap(n));
        let right = (k - 1) as f64;
        let left_level = (n - layout.g.l()) as f64;
        line(&mut out, x(right), y(n as f64), x(right + half), y(n as f64), c);
        line(&mut out, x(-half), y(left_level), x(0.0), y(left_level), c);
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"12\">{label}</text>",
            x(right + half) + 3.0,
            y(n as f64) + 4.0
        );
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"end\">{label}</text>",
            x(-half) - 3.0,
            y(left_level) + 4.0
        );
    }
    for n in layout.lo..=layout.hi {
        for m in 0..k {
            let _ = writeln!(
                out,
                "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"black\"/>",
                x(m as f64),
                y(n as f64)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

fn tikz_color(hex: &str) -> String {
    hex.trim_start_matches('#').to_uppercase()
}

fn tikz(d: &Decomposition, layout: &Layout, spec: &RenderSpec) -> String {
    let k = layout.g.k();
    let mut out = String::new();
    out.push_str("\\documentclass[tikz]{standalone}\n");
    let _ = writeln!(out, "\\definecolor{{classone}}{{HTML}}{{{}}}", tikz_color(&spec.palette[0]));
    let _ = writeln!(out, "\\definecolor{{classtwo}}{{HTML}}{{{}}}", tikz_color(&spec.palette[1]));
    out.push_str("\\begin{document}\n");
    out.push_str("\\begin{tikzpicture}[c1/.style={classone, very thick}, c2/.style={classtwo, very thick, dashed}]\n");
    let _ = writeln!(out, "% {} levels {}..{}", layout.g, layout.lo, layout.hi);
    let style = |c: Color| match c {
        Color::One => "c1",
        Color::Two => "c2",
    };
    for e in layout.inner_edges() {
        let (m, n) = (e.base.m, e.base.n);
        let (m2, n2) = match e.dir {
            Dir::H => (m + 1, n),
            Dir::V => (m, n + 1),
        };
        let _ = writeln!(out, "\\draw[{}] ({m},{n}) -- ({m2},{n2});", style(d.color(e)));
    }
    for (&n, &label) in layout.labels.iter().rev() {
        let s = style(d.color(layout.wrap(n)));
        let left = n - layout.g.l();
        let _ = writeln!(
            out,
            "\\draw[{s}] ({},{n}) -- ({}.5,{n}) node[right] {{{label}}};",
            k - 1,
            k - 1
        );
        let _ = writeln!(out, "\\draw[{s}] (0,{left}) -- (-0.5,{left}) node[left] {{{label}}};");
    }
    for n in layout.lo..=layout.hi {
        for m in 0..k {
            let _ = writeln!(out, "\\fill ({m},{n}) circle (2pt);");
        }
    }
    out.push_str("\\end{tikzpicture}\n\\end{document}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructor::base_pattern;

    fn split21() -> Decomposition {
        Decomposition::hv_split(GklParams::new(2, 1).unwrap())
    }

    #[test]
    fn ascii_g21() {
        let text = render(&split21(), &RenderSpec::new(0, 3, Format::Ascii)).unwrap();
        let (header, body) = text.split_once('\n').unwrap();
        assert!(header.starts_with("# G(2,1) levels 0..3"));
        assert_eq!(body.matches('o').count(), 8);
        assert!(body.contains('-') && body.contains(':'));
        // Rows for levels 3..=-1: level -1 only carries the left half of wrap 4.
        let rows: Vec<&str> = body.lines().step_by(2).collect();
        assert_eq!(rows.len(), 5);
        assert!(rows[4].trim_start().starts_with("-1 4") && !rows[4].contains('o'));
        for label in 1..=4 {
            let label = label.to_string();
            let ends = rows.iter().map(|r| r[2..].matches(label.as_str()).count()).sum::<usize>();
            assert_eq!(ends, 2, "label {label}");
        }
        let parsed = parse_ascii(&text).unwrap();
        assert_eq!(parsed.len(), 4 * 2 + 3 * 2);
    }

    #[test]
    fn ascii_round_trip() {
        for name in ["G42_rays", "G41_mixed", "G31_circles", "G22_rays"] {
            let d = base_pattern(name).unwrap();
            let (lo, hi) = (-7, 2 * d.period() + 1);
            let text = render(&d, &RenderSpec::new(lo, hi, Format::Ascii)).unwrap();
            let parsed = parse_ascii(&text).unwrap();
            let k = d.params().k();
            let expected = (hi - lo + 1) * k + (hi - lo) * k;
            assert_eq!(parsed.len() as i64, expected, "{name}");
            for (e, c) in parsed {
                assert_eq!(d.color(e), c, "{name} {e}");
            }
        }
    }

    #[test]
    fn svg_line_count_and_xml() {
        let d = base_pattern("G42_rays").unwrap();
        let (lo, hi) = (-5, 8);
        let text = render(&d, &RenderSpec::new(lo, hi, Format::Svg)).unwrap();
        let k = 4;
        let levels = hi - lo + 1;
        let inner = levels * (k - 1) + (levels - 1) * k;
        let wraps = levels;
        let mut reader = quick_xml::Reader::from_str(&text);
        let mut lines = 0;
        loop {
            match reader.read_event().expect("well-formed SVG") {
                quick_xml::events::Event::Empty(e) if e.name().as_ref() == b"line" => lines += 1,
                quick_xml::events::Event::Eof => break,
                _ => {}
            }
        }
        assert_eq!(lines, inner + 2 * wraps);
    }

    #[test]
    fn tikz_labels_pair_up() {
        let d = base_pattern("G42_rays").unwrap();
        let err = render(&d, &RenderSpec::new(-5, 5, Format::Tikz)).unwrap_err();
        assert!(matches!(err, Error::RangeTooSmall { min: 12, .. }));
        let text = render(&d, &RenderSpec::new(-6, 6, Format::Tikz)).unwrap();
        assert!(text.starts_with("\\documentclass[tikz]{standalone}"));
        assert!(text.trim_end().ends_with("\\end{document}"));
        for label in 1..=13 {
            let right = text.matches(&format!("node[right] {{{label}}}")).count();
            let left = text.matches(&format!("node[left] {{{label}}}")).count();
            assert_eq!((right, left), (1, 1), "label {label}");
        }
        // Label 1 marks the topmost wrap edge: right end at level 6, left end at level 4.
        assert!(text.contains("(3,6) -- (3.5,6) node[right] {1};"));
        assert!(text.contains("(0,4) -- (-0.5,4) node[left] {1};"));
    }

    #[test]
    fn deterministic() {
        let d = base_pattern("G41_mixed").unwrap();
        for format in [Format::Ascii, Format::Svg, Format::Tikz] {
            let spec = RenderSpec::new(0, 12, format);
            assert_eq!(render(&d, &spec).unwrap(), render(&d, &spec).unwrap());
        }
    }
}
