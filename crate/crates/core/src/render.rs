//! Text and SVG drawings of wiring diagrams with per-chamber annotations.

use std::fmt::Write;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ingermanson::appearance_matrix;
use crate::leclerc::chamber_shape;
use crate::wiring::WiringDiagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Annotation {
    /// Left and right chamber minors.
    Labels,
    /// Chamber minors as products of cluster variables.
    Monomials,
    /// Content intervals of the components of each chamber's shape.
    Shapes,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "svg" => Ok(Format::Svg),
            other => Err(Error::Parse(format!("unknown format {other}"))),
        }
    }
}

impl FromStr for Annotation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "labels" => Ok(Annotation::Labels),
            "monomials" => Ok(Annotation::Monomials),
            "shapes" => Ok(Annotation::Shapes),
            other => Err(Error::Parse(format!("unknown annotation {other}"))),
        }
    }
}

/// One line of text per chamber, in crossing order.
pub fn chamber_annotations(d: &WiringDiagram, a: Annotation) -> Result<Vec<String>> {
    match a {
        Annotation::Labels => {
            Ok(d.chambers().iter().map(|ch| format!("left {}  right {}", ch.left, ch.right)).collect())
        }
        Annotation::Monomials => {
            let m = appearance_matrix(d)?;
            Ok((1..=d.len())
                .map(|c| {
                    let parts: Vec<String> =
                        m.solid().iter().filter(|&&s| m.get(c, s) == 1).map(|s| format!("A{s}")).collect();
                    if parts.is_empty() {
                        "1".to_string()
                    } else {
                        parts.join("*")
                    }
                })
                .collect())
        }
        Annotation::Shapes => (1..=d.len())
            .map(|c| {
                let comps = chamber_shape(d, c)?.components();
                let parts: Vec<String> = comps
                    .iter()
                    .map(|s| {
                        let cs = s.contents();
                        format!("[{},{}]", cs.first().expect("nonempty"), cs.last().expect("nonempty"))
                    })
                    .collect();
                Ok(if parts.is_empty() { "empty".to_string() } else { parts.join(" ") })
            })
            .collect(),
    }
}

pub fn render(d: &WiringDiagram, format: Format, a: Annotation) -> Result<String> {
    let notes = chamber_annotations(d, a)?;
    Ok(match format {
        Format::Ascii => ascii(d, &notes),
        Format::Svg => svg(d, &notes),
    })
}

const CELL: usize = 5;

/// Height `n` on top. A solid crossing is drawn `X`, a hollow one `O`.
fn ascii(d: &WiringDiagram, notes: &[String]) -> String {
    let (n, l) = (d.n(), d.len());
    let width = 4 + CELL * l + 2;
    // row 2(n - k) holds height k; odd rows are gaps
    let mut grid = vec![vec![' '; width]; 2 * n - 1];
    for k in 1..=n {
        let row = &mut grid[2 * (n - k)];
        let label: Vec<char> = format!("{k:>2} ").chars().collect();
        row[..3].copy_from_slice(&label);
        row[3..].fill('-');
    }
    let mut header = vec![' '; width];
    for x in d.crossings() {
        let x0 = 4 + CELL * (x.index - 1);
        let (top, gap, bottom) = (2 * (n - x.height - 1), 2 * (n - x.height) - 1, 2 * (n - x.height));
        grid[top][x0 + 1] = '\\';
        grid[top][x0 + 2] = ' ';
        grid[top][x0 + 3] = '/';
        grid[bottom][x0 + 1] = '/';
        grid[bottom][x0 + 2] = ' ';
        grid[bottom][x0 + 3] = '\\';
        grid[gap][x0 + 2] = if x.hollow { 'O' } else { 'X' };
        for (i, ch) in x.index.to_string().chars().enumerate() {
            if x0 + 2 + i < width {
                header[x0 + 2 + i] = ch;
            }
        }
    }
    let mut out = String::new();
    let _ = writeln!(out, "v = {}  word = {}  mask = {}", d.v(), d.word(), d.mask());
    let _ = writeln!(out, "{}", header.iter().collect::<String>().trim_end());
    for row in grid {
        let _ = writeln!(out, "{}", row.iter().collect::<String>().trim_end());
    }
    for (c, note) in notes.iter().enumerate() {
        let _ = writeln!(out, "chamber {}: {note}", c + 1);
    }
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn svg(d: &WiringDiagram, notes: &[String]) -> String {
    let (n, l) = (d.n(), d.len());
    let (step, gap, margin) = (60, 40, 40);
    let width = 2 * margin + step * (l + 1);
    let height = 2 * margin + gap * (n - 1) + 20 * (l + 1);
    let y = |k: usize| margin + gap * (n - k);
    let x = |c: usize| margin + step * c;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<g stroke="black" stroke-width="2" fill="none">"#);
    for c in 0..=l {
        let (x0, x1) = (if c == 0 { margin } else { x(c) - step / 2 }, x(c) + step / 2);
        let crossing = (c >= 1).then(|| d.crossing(c));
        for k in 1..=n {
            match crossing {
                Some(cr) if k == cr.height => {
                    let _ = writeln!(out, r#"<line x1="{x0}" y1="{}" x2="{x1}" y2="{}"/>"#, y(k), y(k + 1));
                }
                Some(cr) if k == cr.height + 1 => {
                    let _ = writeln!(out, r#"<line x1="{x0}" y1="{}" x2="{x1}" y2="{}"/>"#, y(k), y(k - 1));
                }
                _ => {
                    let _ = writeln!(out, r#"<line x1="{x0}" y1="{}" x2="{x1}" y2="{}"/>"#, y(k), y(k));
                }
            }
        }
    }
    let _ = writeln!(out, "</g>");
    for cr in d.crossings() {
        let (cx, cy) = (x(cr.index), (y(cr.height) + y(cr.height + 1)) / 2);
        let fill = if cr.hollow { "white" } else { "black" };
        let _ = writeln!(out, r#"<circle cx="{cx}" cy="{cy}" r="6" fill="{fill}" stroke="black" stroke-width="2"/>"#);
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{cy}" font-size="11" text-anchor="middle">{}</text>"#,
            cx - step / 2,
            cr.index
        );
    }
    let base = margin + gap * (n - 1) + 30;
    for (c, note) in notes.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"<text x="{margin}" y="{}" font-size="12">chamber {}: {}</text>"#,
            base + 20 * c,
            c + 1,
            escape(note)
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{Permutation, ReducedWord};

    fn diagram(v: &str, n: usize, word: &[usize]) -> WiringDiagram {
        WiringDiagram::new(&Permutation::from_digits(v).unwrap(), &ReducedWord::new(n, word.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn solid_and_hollow_differ() {
        let solid = render(&diagram("12", 2, &[1]), Format::Ascii, Annotation::Labels).unwrap();
        let hollow = render(&diagram("21", 2, &[1]), Format::Ascii, Annotation::Labels).unwrap();
        assert!(solid.contains('X') && !solid.contains('O'));
        assert!(hollow.contains('O') && !hollow.contains('X'));
    }

    #[test]
    fn shapes_list_content_intervals() {
        let d = diagram("12534", 5, &[4, 3, 2, 1, 4, 3, 2, 3, 4]);
        let notes = chamber_annotations(&d, Annotation::Shapes).unwrap();
        assert_eq!(notes.len(), 9);
        assert!(notes.iter().all(|s| s.starts_with('[') || s == "empty"));
    }

    #[test]
    fn unknown_names_are_rejected() {
        assert!("png".parse::<Format>().is_err());
        assert!("colors".parse::<Annotation>().is_err());
    }
}
