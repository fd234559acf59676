//! JSON documents exchanged by the CLI and the FFI layer.
//!
//! Element ids are 1-based everywhere in here; rationals are `"p/q"` strings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{Interval, IntervalFamily, Role};
use crate::kcount::{Answer, KCountVerdict};
use crate::lp::{LinearSystem, Rel, Row};
use crate::order::{IntervalOrder, Poset};
use crate::perm::SortedColoring;
use crate::rational::{self, Rational};
use crate::SCHEMA;

fn schema() -> String {
    SCHEMA.to_string()
}

fn check_schema(found: &str) -> Result<()> {
    if found == SCHEMA {
        Ok(())
    } else {
        Err(Error::Parse(format!("unknown schema {found:?}, expected {SCHEMA:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub n: usize,
    pub relation: Vec<[usize; 2]>,
}

impl OrderDoc {
    pub fn from_poset(p: &Poset) -> Self {
        OrderDoc {
            schema: schema(),
            n: p.len(),
            relation: p.relation_pairs().into_iter().map(|(x, y)| [x + 1, y + 1]).collect(),
        }
    }

    pub fn to_poset(&self) -> Result<Poset> {
        check_schema(&self.schema)?;
        let mut pairs = Vec::with_capacity(self.relation.len());
        for &[x, y] in &self.relation {
            if x == 0 || y == 0 || x > self.n || y > self.n {
                return Err(Error::Parse(format!("element id out of range in [{x},{y}]")));
            }
            pairs.push((x - 1, y - 1));
        }
        Poset::from_relation(self.n, &pairs)
    }

    pub fn to_interval_order(&self) -> Result<IntervalOrder> {
        IntervalOrder::new(self.to_poset()?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalDoc {
    pub elem: usize,
    pub l: String,
    pub r: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationDoc {
    #[serde(default = "schema")]
    pub schema: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub role: Option<Role>,
    pub intervals: Vec<IntervalDoc>,
}

impl RepresentationDoc {
    pub fn from_family(f: &IntervalFamily) -> Self {
        RepresentationDoc {
            schema: schema(),
            role: Some(f.role()),
            intervals: f
                .intervals()
                .iter()
                .enumerate()
                .map(|(i, iv)| IntervalDoc {
                    elem: i + 1,
                    l: rational::format(&iv.l),
                    r: rational::format(&iv.r),
                })
                .collect(),
        }
    }

    /// Entries may come in any order but must cover `1..=n` exactly once.
    pub fn to_family(&self) -> Result<IntervalFamily> {
        check_schema(&self.schema)?;
        let n = self.intervals.len();
        let mut slots: Vec<Option<Interval>> = vec![None; n];
        for d in &self.intervals {
            if d.elem == 0 || d.elem > n || slots[d.elem - 1].is_some() {
                return Err(Error::IndexMismatch { expected: n, found: d.elem });
            }
            slots[d.elem - 1] = Some(Interval::new(rational::parse(&d.l)?, rational::parse(&d.r)?));
        }
        let ivs = slots.into_iter().map(|s| s.expect("all slots filled")).collect();
        IntervalFamily::new(self.role.unwrap_or(Role::OrderRepresentation), ivs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub classes: Vec<Vec<usize>>,
}

impl ColoringDoc {
    pub fn from_coloring(c: &SortedColoring) -> Self {
        ColoringDoc { schema: schema(), classes: c.classes().to_vec() }
    }

    pub fn to_coloring(&self) -> Result<SortedColoring> {
        check_schema(&self.schema)?;
        SortedColoring::new(self.classes.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AnswerDoc {
    Yes,
    No,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub answer: AnswerDoc,
    pub k: usize,
    #[serde(default)]
    pub coloring: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<RepresentationDoc>,
    pub colorings_tried: u64,
}

impl VerdictDoc {
    pub fn from_verdict(v: &KCountVerdict) -> Self {
        let (answer, coloring, witness) = match &v.answer {
            Answer::Yes { coloring, witness } => {
                (AnswerDoc::Yes, coloring.clone(), Some(RepresentationDoc::from_family(witness)))
            }
            Answer::No => (AnswerDoc::No, Vec::new(), None),
        };
        VerdictDoc { schema: schema(), answer, k: v.k, coloring, witness, colorings_tried: v.colorings_tried }
    }

    pub fn to_verdict(&self) -> Result<KCountVerdict> {
        check_schema(&self.schema)?;
        let answer = match (&self.answer, &self.witness) {
            (AnswerDoc::Yes, Some(w)) => Answer::Yes { coloring: self.coloring.clone(), witness: w.to_family()? },
            (AnswerDoc::Yes, None) => return Err(Error::Parse("yes verdict without witness".into())),
            (AnswerDoc::No, _) => Answer::No,
        };
        Ok(KCountVerdict { k: self.k, answer, colorings_tried: self.colorings_tried })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowDoc {
    pub a: Vec<String>,
    pub rel: String,
    pub b: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub vars: Vec<String>,
    pub rows: Vec<RowDoc>,
}

impl SystemDoc {
    pub fn from_system(s: &LinearSystem) -> Self {
        SystemDoc {
            schema: schema(),
            vars: s.vars.clone(),
            rows: s
                .rows
                .iter()
                .map(|r| RowDoc {
                    a: r.a.iter().map(rational::format).collect(),
                    rel: r.rel.symbol().to_string(),
                    b: rational::format(&r.b),
                })
                .collect(),
        }
    }

    pub fn to_system(&self) -> Result<LinearSystem> {
        check_schema(&self.schema)?;
        let mut rows = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            let a = r.a.iter().map(|s| rational::parse(s)).collect::<Result<Vec<Rational>>>()?;
            let rel = Rel::from_symbol(&r.rel)?;
            rows.push(Row { a, rel, b: rational::parse(&r.b)? });
        }
        let sys = LinearSystem { vars: self.vars.clone(), rows };
        sys.check()?;
        Ok(sys)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub error: String,
    pub message: String,
}

impl ErrorDoc {
    pub fn from_error(e: &Error) -> Self {
        ErrorDoc { schema: schema(), error: e.kind().to_string(), message: e.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderAnalysisDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub n: usize,
    pub ascent: String,
    pub height: usize,
    pub depth: usize,
    pub magnitude: usize,
    pub four_plus_one_free: bool,
    /// Sorted 1-based element sets, one per spring copy found.
    pub springs: Vec<[usize; 6]>,
    /// `[pith, peel]`, 1-based.
    pub pp_arcs: Vec<[usize; 2]>,
    pub canonical: RepresentationDoc,
}

impl OrderAnalysisDoc {
    pub fn analyze(o: &IntervalOrder) -> Result<Self> {
        use crate::order::{
            ascent_of_order, canonical_representation, depth_order, find_chain_plus_one, find_springs, height,
            pp_graph,
        };
        let mut springs: Vec<[usize; 6]> = find_springs(o)
            .iter()
            .map(|w| {
                let mut e = w.elems.map(|x| x + 1);
                e.sort_unstable();
                e
            })
            .collect();
        springs.sort_unstable();
        springs.dedup();
        let canon = canonical_representation(o);
        Ok(OrderAnalysisDoc {
            schema: schema(),
            n: o.len(),
            ascent: ascent_of_order(o)?.to_string(),
            height: height(o),
            depth: depth_order(o)?,
            magnitude: canon.magnitude(),
            four_plus_one_free: find_chain_plus_one(o, 4).is_none(),
            springs,
            pp_arcs: pp_graph(o).arcs.iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
            canonical: RepresentationDoc::from_family(&canon.to_family()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermAnalysisDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub permutation: String,
    pub n: usize,
    pub depth: usize,
    /// Greedy sorted coloring with `depth` classes.
    pub coloring: Vec<Vec<usize>>,
}

impl PermAnalysisDoc {
    pub fn analyze(pi: &crate::Permutation) -> Self {
        use crate::perm::{mirsky_sorted_coloring, perm_depth};
        PermAnalysisDoc {
            schema: schema(),
            permutation: pi.to_string(),
            n: pi.len(),
            depth: perm_depth(pi),
            coloring: mirsky_sorted_coloring(pi).classes().to_vec(),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

pub fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{canonical_representation, order_from_ascent};
    use crate::AscentSequence;

    #[test]
    fn order_round_trip() {
        let o = order_from_ascent(&AscentSequence::parse("0,1,0,2").unwrap());
        let text = to_json(&OrderDoc::from_poset(&o));
        assert!(text.contains("\"schema\": \"intervalia/1\""));
        let back: OrderDoc = from_json(&text).unwrap();
        assert_eq!(back.to_poset().unwrap(), *o.poset());
    }

    #[test]
    fn representation_accepts_shuffled_entries() {
        let o = order_from_ascent(&AscentSequence::parse("0,1,1").unwrap());
        let f = canonical_representation(&o).to_family();
        let mut doc = RepresentationDoc::from_family(&f);
        doc.intervals.reverse();
        assert_eq!(doc.to_family().unwrap(), f);
    }

    #[test]
    fn rejects_bad_rational_and_schema() {
        let bad = r#"{"schema":"intervalia/1","intervals":[{"elem":1,"l":"1/0","r":"2"}]}"#;
        assert!(matches!(
            from_json::<RepresentationDoc>(bad).unwrap().to_family(),
            Err(Error::InvalidRational(_))
        ));
        let other = r#"{"schema":"other/9","n":1,"relation":[]}"#;
        assert!(from_json::<OrderDoc>(other).unwrap().to_poset().is_err());
    }

    #[test]
    fn missing_schema_defaults() {
        let doc: ColoringDoc = from_json(r#"{"classes":[[1],[2]]}"#).unwrap();
        assert_eq!(doc.to_coloring().unwrap().k(), 2);
    }
}
