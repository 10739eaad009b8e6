//! Quandle colorings of link diagrams.
//!
//! At a positive crossing the outgoing under-arc gets `in ▷ over`; at a
//! negative crossing it gets `in ▷⁻¹ over`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::diagram::{Arc, LinkDiagram, Sign};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::quandle::{is_endomorphism, Element, Endomorphism, Quandle};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<Element>,
}

impl Coloring {
    /// Checks every crossing condition.
    pub fn new(d: &LinkDiagram, q: &Quandle, colors: Vec<Element>) -> Result<Self> {
        if colors.len() != d.arc_count {
            return Err(Error::InvalidColoring(format!(
                "{} colors for {} arcs",
                colors.len(),
                d.arc_count
            )));
        }
        if colors.iter().any(|&c| c >= q.order()) {
            return Err(Error::InvalidColoring("color out of range".into()));
        }
        if let Some(i) = first_violated_crossing(d, q, &colors) {
            return Err(Error::InvalidColoring(format!("crossing {i} is violated")));
        }
        Ok(Coloring { colors })
    }

    pub fn colors(&self) -> &[Element] {
        &self.colors
    }

    pub fn into_colors(self) -> Vec<Element> {
        self.colors
    }

    /// Colors rendered 1-based, space separated.
    pub fn to_one_based(&self) -> String {
        self.colors
            .iter()
            .map(|c| (c + 1).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn first_violated_crossing(d: &LinkDiagram, q: &Quandle, colors: &[Element]) -> Option<usize> {
    d.crossings.iter().position(|c| {
        let expected = match c.sign {
            Sign::Positive => q.op(colors[c.under_in], colors[c.over]),
            Sign::Negative => q.inv_op(colors[c.under_in], colors[c.over]),
        };
        colors[c.under_out] != expected
    })
}

/// `true` when `colors` satisfies every crossing of `d`.
pub fn is_coloring(d: &LinkDiagram, q: &Quandle, colors: &[Element]) -> bool {
    colors.len() == d.arc_count
        && colors.iter().all(|&c| c < q.order())
        && first_violated_crossing(d, q, colors).is_none()
}

const UNSET: Element = Element::MAX;

struct Search<'a> {
    d: &'a LinkDiagram,
    q: &'a Quandle,
    order: Vec<Arc>,
    /// crossings incident to each arc
    touching: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(d: &'a LinkDiagram, q: &'a Quandle) -> Self {
        let m = d.arc_count;
        let mut touching = vec![Vec::new(); m];
        for (i, c) in d.crossings.iter().enumerate() {
            for a in [c.under_in, c.over, c.under_out] {
                if !touching[a].contains(&i) {
                    touching[a].push(i);
                }
            }
        }
        Search {
            d,
            q,
            order: bfs_arc_order(d, &touching),
            touching,
        }
    }

    /// Assigns `arc := value` and propagates. Every newly set arc is pushed
    /// on `trail`; returns `false` on contradiction.
    fn assign(
        &self,
        colors: &mut [Element],
        trail: &mut Vec<Arc>,
        arc: Arc,
        value: Element,
    ) -> bool {
        colors[arc] = value;
        trail.push(arc);
        let mut queue = VecDeque::from([arc]);
        while let Some(a) = queue.pop_front() {
            for &ci in &self.touching[a] {
                let c = &self.d.crossings[ci];
                let (i, o, u) = (colors[c.under_in], colors[c.over], colors[c.under_out]);
                if o == UNSET {
                    continue;
                }
                let (target, value) = if i != UNSET {
                    let v = match c.sign {
                        Sign::Positive => self.q.op(i, o),
                        Sign::Negative => self.q.inv_op(i, o),
                    };
                    (c.under_out, v)
                } else if u != UNSET {
                    let v = match c.sign {
                        Sign::Positive => self.q.inv_op(u, o),
                        Sign::Negative => self.q.op(u, o),
                    };
                    (c.under_in, v)
                } else {
                    continue;
                };
                if colors[target] == UNSET {
                    colors[target] = value;
                    trail.push(target);
                    queue.push_back(target);
                } else if colors[target] != value {
                    return false;
                }
            }
        }
        true
    }

    fn undo(colors: &mut [Element], trail: &mut Vec<Arc>, mark: usize) {
        for a in trail.drain(mark..) {
            colors[a] = UNSET;
        }
    }

    fn descend(
        &self,
        colors: &mut [Element],
        trail: &mut Vec<Arc>,
        pos: usize,
        out: &mut Vec<Coloring>,
    ) {
        let Some(k) = (pos..self.order.len()).find(|&k| colors[self.order[k]] == UNSET) else {
            out.push(Coloring {
                colors: colors.to_vec(),
            });
            return;
        };
        let arc = self.order[k];
        for v in 0..self.q.order() {
            let mark = trail.len();
            if self.assign(colors, trail, arc, v) {
                self.descend(colors, trail, k + 1, out);
            }
            Self::undo(colors, trail, mark);
        }
    }

    fn branch(&self, first: Element) -> Vec<Coloring> {
        let mut out = Vec::new();
        let mut colors = vec![UNSET; self.d.arc_count];
        let mut trail = Vec::new();
        match self.order.first() {
            None => out.push(Coloring { colors }),
            Some(&arc) => {
                if self.assign(&mut colors, &mut trail, arc, first) {
                    self.descend(&mut colors, &mut trail, 1, &mut out);
                }
            }
        }
        out
    }
}

/// Arcs in breadth-first order over crossing adjacency, starting from the
/// smallest unvisited arc of each component.
fn bfs_arc_order(d: &LinkDiagram, touching: &[Vec<usize>]) -> Vec<Arc> {
    let m = d.arc_count;
    let mut seen = vec![false; m];
    let mut order = Vec::with_capacity(m);
    for start in 0..m {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(a) = queue.pop_front() {
            order.push(a);
            let mut next: Vec<Arc> = touching[a]
                .iter()
                .flat_map(|&ci| {
                    let c = &d.crossings[ci];
                    [c.under_in, c.over, c.under_out]
                })
                .filter(|&b| !seen[b])
                .collect();
            next.sort_unstable();
            next.dedup();
            for b in next {
                seen[b] = true;
                queue.push_back(b);
            }
        }
    }
    order
}

/// All colorings, sorted lexicographically by color tuple.
pub fn enumerate_colorings(d: &LinkDiagram, q: &Quandle) -> Vec<Coloring> {
    enumerate_colorings_with(d, q, Execution::default())
}

pub fn enumerate_colorings_with(d: &LinkDiagram, q: &Quandle, exec: Execution) -> Vec<Coloring> {
    let search = Search::new(d, q);
    let firsts: Vec<Element> = if d.arc_count == 0 {
        vec![0]
    } else {
        (0..q.order()).collect()
    };
    let mut all: Vec<Coloring> = exec
        .map(&firsts, |&v| search.branch(v))
        .into_iter()
        .flatten()
        .collect();
    all.sort_unstable();
    all
}

pub fn counting_invariant(d: &LinkDiagram, q: &Quandle) -> u64 {
    enumerate_colorings(d, q).len() as u64
}

/// Exhaustive `|X|^m` filter; a test oracle for small diagrams.
pub fn brute_force_colorings(d: &LinkDiagram, q: &Quandle) -> Vec<Coloring> {
    let n = q.order();
    let m = d.arc_count;
    let mut out = Vec::new();
    let mut colors = vec![0; m];
    loop {
        if first_violated_crossing(d, q, &colors).is_none() {
            out.push(Coloring {
                colors: colors.clone(),
            });
        }
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            colors[i] += 1;
            if colors[i] < n {
                break;
            }
            colors[i] = 0;
        }
    }
}

/// Image of a coloring under an endomorphism. Refuses maps that are not
/// endomorphisms of `q`.
pub fn push_coloring(q: &Quandle, c: &Coloring, f: &Endomorphism) -> Result<Coloring> {
    if !is_endomorphism(q, f.as_slice())? {
        return Err(Error::NotAnEndomorphism(f.to_string()));
    }
    Ok(Coloring {
        colors: push_assignment(c, f),
    })
}

/// Arc-wise image of a coloring under any self-map, which need not be a
/// coloring again.
pub fn push_assignment(c: &Coloring, f: &Endomorphism) -> Vec<Element> {
    c.colors.iter().map(|&x| f.apply(x)).collect()
}
