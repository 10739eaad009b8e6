//! Oriented link diagrams as signed crossing lists over arcs.
//!
//! An arc runs from one undercrossing to the next. Each crossing records the
//! under-arc entering it, the over-arc, and the under-arc leaving it.
//! Components that never pass under anything are a single arc listed with
//! `loop`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::{content_lines, parse_num};

pub type Arc = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub sign: Sign,
    pub under_in: Arc,
    pub over: Arc,
    pub under_out: Arc,
}

impl Crossing {
    pub fn new(sign: Sign, under_in: Arc, over: Arc, under_out: Arc) -> Self {
        Crossing {
            sign,
            under_in,
            over,
            under_out,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkDiagram {
    pub name: String,
    pub arc_count: usize,
    pub crossings: Vec<Crossing>,
    /// Arcs forming crossing-free (never under) components.
    pub loops: Vec<Arc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiagramViolation {
    Empty,
    ArcOutOfRange {
        crossing: usize,
        arc: Arc,
    },
    LoopOutOfRange {
        arc: Arc,
    },
    UnderInCount {
        arc: Arc,
        count: usize,
    },
    UnderOutCount {
        arc: Arc,
        count: usize,
    },
    /// Arc is neither entered nor left by an under-strand and is not a loop.
    DanglingArc {
        arc: Arc,
    },
    /// Loop arc also occurs as an under-strand, or is listed twice.
    BadLoop {
        arc: Arc,
    },
}

impl fmt::Display for DiagramViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramViolation::Empty => write!(f, "diagram has no crossings and no loops"),
            DiagramViolation::ArcOutOfRange { crossing, arc } => {
                write!(f, "crossing {crossing} references arc {arc} out of range")
            }
            DiagramViolation::LoopOutOfRange { arc } => write!(f, "loop arc {arc} out of range"),
            DiagramViolation::UnderInCount { arc, count } => {
                write!(f, "arc {arc} is an incoming under-arc {count} times")
            }
            DiagramViolation::UnderOutCount { arc, count } => {
                write!(f, "arc {arc} is an outgoing under-arc {count} times")
            }
            DiagramViolation::DanglingArc { arc } => {
                write!(f, "arc {arc} has no under-crossing ends and is not a loop")
            }
            DiagramViolation::BadLoop { arc } => {
                write!(
                    f,
                    "loop arc {arc} is listed twice or passes under a crossing"
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramReport {
    pub valid: bool,
    pub violations: Vec<DiagramViolation>,
}

pub fn validate_diagram(d: &LinkDiagram) -> DiagramReport {
    let m = d.arc_count;
    let mut violations = Vec::new();
    if d.crossings.is_empty() && d.loops.is_empty() {
        violations.push(DiagramViolation::Empty);
    }
    let mut ins = vec![0usize; m];
    let mut outs = vec![0usize; m];
    for (i, c) in d.crossings.iter().enumerate() {
        for arc in [c.under_in, c.over, c.under_out] {
            if arc >= m {
                violations.push(DiagramViolation::ArcOutOfRange { crossing: i, arc });
            }
        }
        if c.under_in < m {
            ins[c.under_in] += 1;
        }
        if c.under_out < m {
            outs[c.under_out] += 1;
        }
    }
    let mut loops = BTreeSet::new();
    for &arc in &d.loops {
        if arc >= m {
            violations.push(DiagramViolation::LoopOutOfRange { arc });
        } else if !loops.insert(arc) || ins[arc] + outs[arc] > 0 {
            violations.push(DiagramViolation::BadLoop { arc });
        }
    }
    for arc in 0..m {
        match (ins[arc], outs[arc]) {
            (1, 1) => {}
            (0, 0) if loops.contains(&arc) => {}
            (0, 0) => violations.push(DiagramViolation::DanglingArc { arc }),
            (i, o) => {
                if i != 1 {
                    violations.push(DiagramViolation::UnderInCount { arc, count: i });
                }
                if o != 1 {
                    violations.push(DiagramViolation::UnderOutCount { arc, count: o });
                }
            }
        }
    }
    DiagramReport {
        valid: violations.is_empty(),
        violations,
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl LinkDiagram {
    /// Builds and validates.
    pub fn new(
        name: impl Into<String>,
        arc_count: usize,
        crossings: Vec<Crossing>,
        loops: Vec<Arc>,
    ) -> Result<Self> {
        let d = LinkDiagram {
            name: name.into(),
            arc_count,
            crossings,
            loops,
        };
        d.check()?;
        Ok(d)
    }

    pub fn unknot() -> Self {
        LinkDiagram {
            name: "0_1".into(),
            arc_count: 1,
            crossings: Vec::new(),
            loops: vec![0],
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn free_loops(&self) -> usize {
        self.loops.len()
    }

    fn check(&self) -> Result<()> {
        let report = validate_diagram(self);
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidDiagram(v.to_string())),
        }
    }

    /// Component index of every arc. Components are numbered by their
    /// smallest arc.
    pub fn arc_components(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.arc_count);
        for c in &self.crossings {
            uf.union(c.under_in, c.under_out);
        }
        let roots: Vec<usize> = (0..self.arc_count).map(|a| uf.find(a)).collect();
        let mut index = BTreeMap::new();
        for &r in &roots {
            let next = index.len();
            index.entry(r).or_insert(next);
        }
        roots.into_iter().map(|r| index[&r]).collect()
    }

    pub fn component_count(&self) -> usize {
        self.arc_components().into_iter().max().map_or(0, |m| m + 1)
    }

    /// Reverses the orientation of every component whose bit is set in
    /// `mask`. Arc ids are preserved.
    pub fn reverse_components(&self, mask: u64) -> LinkDiagram {
        let comp = self.arc_components();
        let rev = |arc: Arc| comp[arc] < 64 && (mask >> comp[arc]) & 1 == 1;
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let (ru, ro) = (rev(c.under_in), rev(c.over));
                let mut out = *c;
                if ru {
                    std::mem::swap(&mut out.under_in, &mut out.under_out);
                }
                if ru != ro {
                    out.sign = out.sign.flipped();
                }
                out
            })
            .collect();
        LinkDiagram {
            crossings,
            ..self.clone()
        }
    }

    /// Mirror image: every crossing changes sign, arcs are unchanged.
    pub fn mirror(&self) -> LinkDiagram {
        LinkDiagram {
            crossings: self
                .crossings
                .iter()
                .map(|c| Crossing {
                    sign: c.sign.flipped(),
                    ..*c
                })
                .collect(),
            ..self.clone()
        }
    }

    /// Orientation/mirror variant used by table searches.
    pub fn variant(&self, mask: u64, mirror: bool) -> LinkDiagram {
        let d = self.reverse_components(mask);
        if mirror {
            d.mirror()
        } else {
            d
        }
    }

    /// Parses the native line format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut name = None;
        let mut arcs = None;
        let mut crossings = Vec::new();
        let mut loops = Vec::new();
        for (lno, line) in content_lines(text) {
            let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            let fields: Vec<&str> = rest.split_whitespace().collect();
            let syntax = |message: &str| Error::Syntax {
                line: lno,
                message: message.to_string(),
            };
            match keyword {
                "link" => {
                    if name.is_some() {
                        return Err(syntax("duplicate `link` line"));
                    }
                    if rest.is_empty() {
                        return Err(syntax("`link` needs a name"));
                    }
                    name = Some(rest.to_string());
                }
                "arcs" => {
                    if arcs.is_some() {
                        return Err(syntax("duplicate `arcs` line"));
                    }
                    match fields[..] {
                        [m] => arcs = Some(parse_num::<usize>(m, lno)?),
                        _ => return Err(syntax("expected `arcs <m>`")),
                    }
                }
                "crossing" => match fields[..] {
                    [sign, a, b, c] => {
                        let sign = match sign {
                            "+" => Sign::Positive,
                            "-" => Sign::Negative,
                            other => {
                                return Err(syntax(&format!(
                                    "crossing sign must be + or -, found {other:?}"
                                )))
                            }
                        };
                        crossings.push(Crossing::new(
                            sign,
                            parse_num(a, lno)?,
                            parse_num(b, lno)?,
                            parse_num(c, lno)?,
                        ));
                    }
                    _ => {
                        return Err(syntax(
                            "expected `crossing <+|-> <under_in> <over> <under_out>`",
                        ))
                    }
                },
                "loop" => match fields[..] {
                    [a] => loops.push(parse_num(a, lno)?),
                    _ => return Err(syntax("expected `loop <arc>`")),
                },
                other => return Err(syntax(&format!("unknown keyword {other:?}"))),
            }
            if name.is_none() {
                return Err(syntax("first line must be `link <name>`"));
            }
        }
        let name = name.ok_or(Error::Syntax {
            line: 1,
            message: "missing `link <name>` line".into(),
        })?;
        let arcs = arcs.ok_or(Error::Syntax {
            line: 1,
            message: "missing `arcs <m>` line".into(),
        })?;
        LinkDiagram::new(name, arcs, crossings, loops)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("link {}\narcs {}\n", self.name, self.arc_count);
        for c in &self.crossings {
            out.push_str(&format!(
                "crossing {} {} {} {}\n",
                c.sign.symbol(),
                c.under_in,
                c.over,
                c.under_out
            ));
        }
        for l in &self.loops {
            out.push_str(&format!("loop {l}\n"));
        }
        out
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn pd_error(msg: impl Into<String>) -> Error {
    Error::InvalidPd(msg.into())
}

fn parse_pd_tokens(text: &str) -> Result<Vec<[usize; 4]>> {
    let mut out = Vec::new();
    for (lno, line) in content_lines(text) {
        let mut rest = line;
        loop {
            rest = rest.trim_start_matches(|c: char| c == ',' || c.is_whitespace());
            if rest.is_empty() {
                break;
            }
            let body = rest
                .strip_prefix("X[")
                .or_else(|| rest.strip_prefix("X_{"))
                .ok_or_else(|| Error::Syntax {
                    line: lno,
                    message: format!("expected `X[a,b,c,d]`, found {rest:?}"),
                })?;
            let end = body.find([']', '}']).ok_or_else(|| Error::Syntax {
                line: lno,
                message: "unterminated crossing".into(),
            })?;
            let nums = body[..end]
                .split(',')
                .map(|t| parse_num::<usize>(t.trim(), lno))
                .collect::<Result<Vec<_>>>()?;
            let x: [usize; 4] = nums.try_into().map_err(|_| Error::Syntax {
                line: lno,
                message: "a crossing needs four edges".into(),
            })?;
            if x.contains(&0) {
                return Err(Error::Syntax {
                    line: lno,
                    message: "PD edges are 1-based".into(),
                });
            }
            out.push(x);
            rest = &body[end + 1..];
        }
    }
    Ok(out)
}

/// Converts planar-diagram notation to a crossing list.
///
/// Each `X[a,b,c,d]` lists edges counterclockwise from the incoming
/// under-edge `a`, so `c` is the outgoing under-edge and `b, d` are the over
/// edges. Edges must be numbered consecutively along every component.
pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
    let pd = parse_pd_tokens(text)?;
    if pd.is_empty() {
        return Err(pd_error("no crossings"));
    }
    let edge_count = pd.len() * 2;
    let mut seen = vec![0usize; edge_count + 1];
    let mut under_in_seen = vec![false; edge_count + 1];
    let mut under_out_seen = vec![false; edge_count + 1];
    for x in &pd {
        for &e in x {
            if e > edge_count {
                return Err(pd_error(format!(
                    "edge {e} exceeds twice the crossing count"
                )));
            }
            seen[e] += 1;
        }
        for (flags, e) in [(&mut under_in_seen, x[0]), (&mut under_out_seen, x[2])] {
            if flags[e] {
                return Err(pd_error(format!("edge {e} repeats an under-strand role")));
            }
            flags[e] = true;
        }
    }
    if let Some(e) = (1..=edge_count).find(|&e| seen[e] != 2) {
        return Err(pd_error(format!(
            "edge {e} occurs {} times, expected 2",
            seen[e]
        )));
    }

    // index 0 unused
    let mut comp = UnionFind::new(edge_count + 1);
    let mut arc = UnionFind::new(edge_count + 1);
    for &[a, b, c, d] in &pd {
        comp.union(a, c);
        comp.union(b, d);
        arc.union(b, d);
    }
    let mut range: BTreeMap<usize, (usize, usize, usize)> = BTreeMap::new();
    for e in 1..=edge_count {
        let r = comp.find(e);
        let entry = range.entry(r).or_insert((e, e, 0));
        entry.0 = entry.0.min(e);
        entry.1 = entry.1.max(e);
        entry.2 += 1;
    }
    for &(lo, hi, count) in range.values() {
        if hi - lo + 1 != count {
            return Err(pd_error(format!(
                "component edges {lo}..={hi} are not numbered consecutively"
            )));
        }
        if count < 2 {
            return Err(pd_error(format!(
                "component of edge {lo} has a single edge"
            )));
        }
    }
    let next = |comp: &mut UnionFind, e: usize| {
        let (lo, hi, _) = range[&comp.find(e)];
        if e == hi {
            lo
        } else {
            e + 1
        }
    };

    // arcs are numbered by their smallest edge
    let mut arc_id = BTreeMap::new();
    for e in 1..=edge_count {
        let r = arc.find(e);
        let next_id = arc_id.len();
        arc_id.entry(r).or_insert(next_id);
    }
    let arc_count = arc_id.len();

    let mut crossings = Vec::with_capacity(pd.len());
    for &[a, b, c, d] in &pd {
        if next(&mut comp, a) != c {
            return Err(pd_error(format!(
                "under-strand {a} -> {c} does not follow the edge numbering"
            )));
        }
        let (lo, hi, count) = range[&comp.find(b)];
        let sign = if count >= 3 {
            if next(&mut comp, b) == d {
                Sign::Negative
            } else if next(&mut comp, d) == b {
                Sign::Positive
            } else {
                return Err(pd_error(format!(
                    "over-strand edges {b}, {d} are not adjacent"
                )));
            }
        } else if under_out_seen[b] {
            Sign::Negative
        } else if under_out_seen[d] {
            Sign::Positive
        } else {
            return Err(pd_error(format!(
                "cannot orient the two-edge component {lo}..={hi}"
            )));
        };
        crossings.push(Crossing::new(
            sign,
            arc_id[&arc.find(a)],
            arc_id[&arc.find(b)],
            arc_id[&arc.find(c)],
        ));
    }
    let mut under = vec![false; arc_count];
    for c in &crossings {
        under[c.under_in] = true;
    }
    let loops = (0..arc_count).filter(|&a| !under[a]).collect();
    LinkDiagram::new("pd", arc_count, crossings, loops)
}
