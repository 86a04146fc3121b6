//! Braid diagrams of words, one letter per row, time running down.
//!
//! Classical crossings are black with a gap in the lower strand, flat ones
//! blue, virtual ones grey with a circle, and `z` rows shift every strand
//! one lane to the right (orange).

use std::fmt::Write;

use braidrep_core::{LetterKind, Word};

const LANE: f64 = 36.0;
const ROW: f64 = 32.0;
const MARGIN: f64 = 24.0;

pub fn word_svg(w: &Word, title: &str) -> String {
    let w = w.free_reduce();
    let m = w.group().strands();
    let letters: Vec<_> = w.unit_letters().collect();
    let width = 2.0 * MARGIN + LANE * (m as f64 - 1.0) + LANE;
    let height = 2.0 * MARGIN + ROW * letters.len().max(1) as f64 + 16.0;
    let x = |lane: usize| MARGIN + LANE * lane as f64;
    let mut body = String::new();
    for (row, l) in letters.iter().enumerate() {
        let y0 = MARGIN + 16.0 + ROW * row as f64;
        let y1 = y0 + ROW;
        if l.kind == LetterKind::Zeta {
            for lane in 0..m {
                let to = if l.power > 0 {
                    (lane + 1) % m
                } else {
                    (lane + m - 1) % m
                };
                let dash = if to.abs_diff(lane) > 1 {
                    " stroke-dasharray=\"3 3\""
                } else {
                    ""
                };
                line(&mut body, x(lane), y0, x(to), y1, "#d9822b", dash);
            }
            continue;
        }
        let (a, b) = w.group().positions(l.index);
        for lane in (0..m).filter(|&q| q != a && q != b) {
            line(&mut body, x(lane), y0, x(lane), y1, "#000", "");
        }
        let (xa, xb) = (x(a), x(b));
        let (mx, my) = ((xa + xb) / 2.0, (y0 + y1) / 2.0);
        match l.kind {
            LetterKind::Sigma => {
                // s^{+1}: the strand from the upper right passes over
                let (over, under) = if l.power > 0 {
                    ((xb, xa), (xa, xb))
                } else {
                    ((xa, xb), (xb, xa))
                };
                line(&mut body, over.0, y0, over.1, y1, "#000", "");
                let gap = 0.22;
                let lerp = |u: f64| (under.0 + (under.1 - under.0) * u, y0 + (y1 - y0) * u);
                let (p, q) = (lerp(0.5 - gap), lerp(0.5 + gap));
                line(&mut body, under.0, y0, p.0, p.1, "#000", "");
                line(&mut body, q.0, q.1, under.1, y1, "#000", "");
            }
            LetterKind::Pi => {
                line(&mut body, xa, y0, xb, y1, "#1f5fbf", "");
                line(&mut body, xb, y0, xa, y1, "#1f5fbf", "");
            }
            LetterKind::Tau => {
                line(&mut body, xa, y0, xb, y1, "#888", "");
                line(&mut body, xb, y0, xa, y1, "#888", "");
                let _ = writeln!(
                    body,
                    "<circle cx=\"{mx:.1}\" cy=\"{my:.1}\" r=\"5\" fill=\"none\" stroke=\"#888\"/>"
                );
            }
            LetterKind::Zeta => unreachable!(),
        }
    }
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" \
         viewBox=\"0 0 {width:.0} {height:.0}\">\n<title>{}</title>\n<text x=\"{MARGIN}\" y=\"16\" \
         font-family=\"monospace\" font-size=\"12\">{}</text>\n{body}</svg>\n",
        escape(title),
        escape(title)
    )
}

fn line(out: &mut String, x0: f64, y0: f64, x1: f64, y1: f64, color: &str, extra: &str) {
    let _ = writeln!(
        out,
        "<line x1=\"{x0:.1}\" y1=\"{y0:.1}\" x2=\"{x1:.1}\" y2=\"{y1:.1}\" stroke=\"{color}\" stroke-width=\"2\"{extra}/>"
    );
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
