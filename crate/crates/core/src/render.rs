//! Deterministic SVG output. All coordinates are integers computed with exact
//! arithmetic, and elements are emitted in a fixed order.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::family::IntervalFamily;
use crate::order::{pp_graph, IntervalOrder, Poset};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Representation,
    Hasse,
    PPGraph,
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "representation" => Ok(Target::Representation),
            "hasse" => Ok(Target::Hasse),
            "ppgraph" => Ok(Target::PPGraph),
            other => Err(Error::UnsupportedTarget(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Long,
    Short,
    Uncolored,
}

impl Color {
    fn css(self) -> &'static str {
        match self {
            Color::Long => "red",
            Color::Short => "green",
            Color::Uncolored => "black",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub target: Target,
    pub width: u32,
    pub height: u32,
    /// Per element; missing entries draw black.
    pub colors: Vec<Color>,
    /// Dotted vertical line, representation target only.
    pub guide: Option<Rational>,
}

impl RenderSpec {
    pub fn new(target: Target) -> Self {
        RenderSpec { target, width: 640, height: 0, colors: Vec::new(), guide: None }
    }

    fn color(&self, e: usize) -> &'static str {
        self.colors.get(e).copied().unwrap_or(Color::Uncolored).css()
    }
}

pub enum RenderInput<'a> {
    Family(&'a IntervalFamily),
    Order(&'a Poset),
}

/// Long/short by length when the family uses exactly two lengths.
pub fn length_colors(f: &IntervalFamily) -> Vec<Color> {
    let ls = f.distinct_lengths();
    if ls.len() != 2 {
        return vec![Color::Uncolored; f.len()];
    }
    f.lengths().map(|l| if l == ls[1] { Color::Long } else { Color::Short }).collect()
}

pub fn render(input: RenderInput<'_>, spec: &RenderSpec) -> Result<String> {
    if spec.width < 100 {
        return Err(Error::Parse(format!("width {} too small", spec.width)));
    }
    match (input, spec.target) {
        (RenderInput::Family(f), Target::Representation) => Ok(representation(f, spec)),
        (RenderInput::Order(p), Target::Hasse) => Ok(hasse(p, spec)),
        (RenderInput::Order(p), Target::PPGraph) => {
            let o = IntervalOrder::new(p.clone())?;
            Ok(ppgraph(&o, spec))
        }
        (RenderInput::Family(_), t) => Err(Error::UnsupportedTarget(format!("{t:?} from a representation"))),
        (RenderInput::Order(_), t) => Err(Error::UnsupportedTarget(format!("{t:?} from an order"))),
    }
}

const MARGIN: i64 = 30;

fn open(out: &mut String, w: i64, h: i64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(out, r#"<rect id="bg" x="0" y="0" width="{w}" height="{h}" fill="white"/>"#);
}

fn close(out: &mut String) {
    out.push_str("</svg>\n");
}

fn height_or(spec: &RenderSpec, auto: i64) -> i64 {
    if spec.height == 0 {
        auto
    } else {
        i64::from(spec.height)
    }
}

// floor(lo + (v - min) * span / range)
fn scale(v: &Rational, min: &Rational, range: &Rational, lo: i64, span: i64) -> i64 {
    if range == &rational::zero() {
        return lo + span / 2;
    }
    let t = (v - min) * Rational::from_integer(BigInt::from(span)) / range;
    lo + t.floor().to_integer().to_i64().expect("coordinate fits")
}

fn representation(f: &IntervalFamily, spec: &RenderSpec) -> String {
    let n = f.len() as i64;
    let w = i64::from(spec.width);
    let h = height_or(spec, 2 * MARGIN + 24 * n.max(1));
    let mut ends: Vec<Rational> = f.intervals().iter().flat_map(|iv| [iv.l.clone(), iv.r.clone()]).collect();
    ends.sort();
    ends.dedup();
    let (min, max) = match (ends.first(), ends.last()) {
        (Some(a), Some(b)) => (a.clone(), b.clone()),
        _ => (rational::zero(), rational::zero()),
    };
    let range = &max - &min;
    let x = |v: &Rational| scale(v, &min, &range, MARGIN, w - 2 * MARGIN);
    let mut out = String::new();
    open(&mut out, w, h);
    out.push_str("<g id=\"grid\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n");
    for (i, e) in ends.iter().enumerate() {
        let xe = x(e);
        let _ = writeln!(
            out,
            r#"<line id="grid-{i}" x1="{xe}" y1="{}" x2="{xe}" y2="{}"/>"#,
            MARGIN / 2,
            h - MARGIN / 2
        );
    }
    out.push_str("</g>\n");
    if let Some(g) = &spec.guide {
        let xg = x(g);
        let _ = writeln!(
            out,
            r#"<line id="guide" x1="{xg}" y1="{}" x2="{xg}" y2="{}" stroke="black" stroke-dasharray="2,4"/>"#,
            MARGIN / 4,
            h - MARGIN / 4
        );
    }
    // tracks ordered by (l, r, element) so the picture reads left to right
    let mut order: Vec<usize> = (0..f.len()).collect();
    order.sort_by(|&a, &b| {
        let (ia, ib) = (f.get(a), f.get(b));
        (&ia.l, &ia.r, a).cmp(&(&ib.l, &ib.r, b))
    });
    let track = (h - 2 * MARGIN) / n.max(1);
    out.push_str("<g id=\"intervals\" stroke-width=\"3\">\n");
    for (t, &e) in order.iter().enumerate() {
        let y = MARGIN + track * t as i64 + track / 2;
        let iv = f.get(e);
        let (x1, x2) = (x(&iv.l), x(&iv.r));
        let c = spec.color(e);
        let _ = writeln!(
            out,
            r#"<line id="iv-{}" x1="{x1}" y1="{y}" x2="{x2}" y2="{y}" stroke="{c}"/>"#,
            e + 1
        );
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="10" fill="{c}">{}</text>"#,
            x1 - 14,
            y + 4,
            e + 1
        );
    }
    out.push_str("</g>\n");
    close(&mut out);
    out
}

fn node(out: &mut String, e: usize, x: i64, y: i64, c: &str) {
    let _ = writeln!(out, r#"<circle id="v-{}" cx="{x}" cy="{y}" r="9" fill="white" stroke="{c}" stroke-width="2"/>"#, e + 1);
    let _ = writeln!(
        out,
        r#"<text x="{x}" y="{}" font-size="10" text-anchor="middle" fill="{c}">{}</text>"#,
        y + 4,
        e + 1
    );
}

fn hasse(p: &Poset, spec: &RenderSpec) -> String {
    let n = p.len();
    // layer = length of the longest chain ending at the element
    let mut layer = vec![0usize; n];
    let mut by_size: Vec<usize> = (0..n).collect();
    by_size.sort_by_key(|&x| (p.down_set(x).count(), x));
    for &y in &by_size {
        layer[y] = (0..n).filter(|&x| p.lt(x, y)).map(|x| layer[x] + 1).max().unwrap_or(0);
    }
    let layers = layer.iter().max().map_or(1, |m| m + 1) as i64;
    let w = i64::from(spec.width);
    let h = height_or(spec, 2 * MARGIN + 60 * layers);
    let row_h = (h - 2 * MARGIN) / layers;
    let mut pos = vec![(0i64, 0i64); n];
    for l in 0..layers as usize {
        let members: Vec<usize> = (0..n).filter(|&x| layer[x] == l).collect();
        let k = members.len() as i64;
        for (j, &x) in members.iter().enumerate() {
            let px = MARGIN + (w - 2 * MARGIN) * (2 * j as i64 + 1) / (2 * k);
            let py = h - MARGIN - row_h * l as i64 - row_h / 2;
            pos[x] = (px, py);
        }
    }
    let mut out = String::new();
    open(&mut out, w, h);
    out.push_str("<g id=\"covers\" stroke=\"black\" stroke-width=\"1\">\n");
    for (x, y) in p.covers() {
        let ((x1, y1), (x2, y2)) = (pos[x], pos[y]);
        let _ = writeln!(out, r#"<line id="c-{}-{}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#, x + 1, y + 1);
    }
    out.push_str("</g>\n<g id=\"elements\">\n");
    for (e, &(x, y)) in pos.iter().enumerate() {
        node(&mut out, e, x, y, spec.color(e));
    }
    out.push_str("</g>\n");
    close(&mut out);
    out
}

fn ppgraph(o: &IntervalOrder, spec: &RenderSpec) -> String {
    let g = pp_graph(o);
    let n = o.len() as i64;
    let w = i64::from(spec.width);
    let h = height_or(spec, 160);
    let base = h - MARGIN - 10;
    let x = |e: usize| MARGIN + (w - 2 * MARGIN) * (2 * e as i64 + 1) / (2 * n.max(1));
    let mut out = String::new();
    open(&mut out, w, h);
    out.push_str(
        "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"8\" refY=\"4\" orient=\"auto\">\
         <path d=\"M0,0 L8,4 L0,8 z\" fill=\"black\"/></marker></defs>\n",
    );
    out.push_str("<g id=\"arcs\" fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n");
    for &(pith, peel) in &g.arcs {
        let (x1, x2) = (x(pith), x(peel));
        let lift = ((x2 - x1).abs() / 2).min(base - MARGIN / 2);
        let _ = writeln!(
            out,
            r#"<path id="a-{}-{}" d="M{x1},{} Q{},{} {x2},{}" marker-end="url(#head)"/>"#,
            pith + 1,
            peel + 1,
            base - 9,
            (x1 + x2) / 2,
            base - 9 - lift,
            base - 9
        );
    }
    out.push_str("</g>\n<g id=\"elements\">\n");
    for e in 0..o.len() {
        node(&mut out, e, x(e), base, spec.color(e));
    }
    out.push_str("</g>\n");
    close(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{canonical_representation, order_from_ascent};
    use crate::AscentSequence;

    fn ord(s: &str) -> IntervalOrder {
        order_from_ascent(&AscentSequence::parse(s).unwrap())
    }

    #[test]
    fn canonical_twelve_has_seven_gridlines() {
        let f = canonical_representation(&ord("0,1,0,1,2,1,0,2,0,2,0,3")).to_family();
        let svg = render(RenderInput::Family(&f), &RenderSpec::new(Target::Representation)).unwrap();
        assert_eq!(svg.matches("id=\"grid-").count(), 7);
        assert_eq!(svg.matches("id=\"iv-").count(), 12);
        let frac = svg.as_bytes().windows(3).any(|w| w[0].is_ascii_digit() && w[1] == b'.' && w[2].is_ascii_digit());
        assert!(!frac, "no fractional coordinates");
    }

    #[test]
    fn single_element_single_track() {
        let f = canonical_representation(&ord("0")).to_family();
        let svg = render(RenderInput::Family(&f), &RenderSpec::new(Target::Representation)).unwrap();
        assert_eq!(svg.matches("id=\"iv-").count(), 1);
    }

    #[test]
    fn pp_graph_eleven_nodes_five_arrows() {
        let o = ord("0,1,2,0,3,2,3,0,2,4,2");
        let svg = render(RenderInput::Order(o.poset()), &RenderSpec::new(Target::PPGraph)).unwrap();
        assert_eq!(svg.matches("<circle").count(), 11);
        assert_eq!(svg.matches("marker-end").count(), 5);
    }

    #[test]
    fn stable_output() {
        let o = ord("0,1,0,2,1");
        let s = RenderSpec::new(Target::Hasse);
        assert_eq!(render(RenderInput::Order(o.poset()), &s).unwrap(), render(RenderInput::Order(o.poset()), &s).unwrap());
    }

    #[test]
    fn unsupported() {
        assert!(matches!("tikz".parse::<Target>(), Err(Error::UnsupportedTarget(_))));
        let o = ord("0,1");
        let r = render(RenderInput::Order(o.poset()), &RenderSpec::new(Target::Representation));
        assert!(matches!(r, Err(Error::UnsupportedTarget(_))));
    }
}
