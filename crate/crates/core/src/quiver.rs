//! Quandle coloring quivers, their module-weighted versions, the
//! two-variable quiver polynomial and DOT export.
//!
//! Vertices are colorings in sorted order. Each endomorphism `f` in the
//! generating set contributes one edge from every coloring `c` to `f ∘ c`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coloring::{enumerate_colorings_with, is_coloring};
use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::module::{check_sizes, coloring_weight, QuandleModule, WeightValue};
use crate::poly::TwoVarPolynomial;
use crate::quandle::{is_endomorphism, Element, Endomorphism, Quandle};

/// How maps that are not quandle endomorphisms are treated.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PushPolicy {
    /// Reject any map failing the homomorphism identity.
    #[default]
    RequireEndomorphism,
    /// Accept any self-map. A pushed assignment that is not a coloring gets
    /// an auxiliary vertex with no outgoing edges; its weight comes from
    /// the bead matrix of the assignment.
    AnyMap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverVertex {
    pub colors: Vec<Element>,
    pub is_coloring: bool,
    pub weight: Option<WeightValue>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverEdge {
    pub source: usize,
    pub target: usize,
    /// Index into the generating set.
    pub label: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedQuiver {
    pub vertices: Vec<QuiverVertex>,
    pub edges: Vec<QuiverEdge>,
    pub endomorphisms: Vec<Endomorphism>,
}

impl WeightedQuiver {
    pub fn coloring_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.is_coloring).count()
    }

    /// Target of the edge labeled `label` leaving `source`.
    pub fn successor(&self, source: usize, label: usize) -> Option<usize> {
        self.edges
            .iter()
            .find(|e| e.source == source && e.label == label)
            .map(|e| e.target)
    }
}

fn check_maps(q: &Quandle, endos: &[Endomorphism], policy: PushPolicy) -> Result<()> {
    for f in endos {
        let ok = is_endomorphism(q, f.as_slice())?;
        if !ok && policy == PushPolicy::RequireEndomorphism {
            return Err(Error::NotAnEndomorphism(f.to_string()));
        }
    }
    Ok(())
}

/// Unweighted quiver. Fails on a map that is not an endomorphism.
pub fn coloring_quiver(
    d: &LinkDiagram,
    q: &Quandle,
    endos: &[Endomorphism],
) -> Result<WeightedQuiver> {
    coloring_quiver_with(d, q, endos, PushPolicy::default(), Execution::default())
}

pub fn coloring_quiver_with(
    d: &LinkDiagram,
    q: &Quandle,
    endos: &[Endomorphism],
    policy: PushPolicy,
    exec: Execution,
) -> Result<WeightedQuiver> {
    check_maps(q, endos, policy)?;
    let colorings = enumerate_colorings_with(d, q, exec);
    let mut index: BTreeMap<Vec<Element>, usize> = BTreeMap::new();
    let mut vertices: Vec<QuiverVertex> = colorings
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            index.insert(c.colors().to_vec(), i);
            QuiverVertex {
                colors: c.into_colors(),
                is_coloring: true,
                weight: None,
            }
        })
        .collect();
    let count = vertices.len();

    let mut images = Vec::with_capacity(count * endos.len());
    let mut extra = BTreeSet::new();
    for v in &vertices {
        for f in endos {
            let image: Vec<Element> = v.colors.iter().map(|&x| f.apply(x)).collect();
            if !index.contains_key(&image) {
                debug_assert!(!is_coloring(d, q, &image));
                extra.insert(image.clone());
            }
            images.push(image);
        }
    }
    for colors in extra {
        index.insert(colors.clone(), vertices.len());
        vertices.push(QuiverVertex {
            colors,
            is_coloring: false,
            weight: None,
        });
    }
    let k = endos.len().max(1);
    let edges = images
        .into_iter()
        .enumerate()
        .map(|(i, image)| QuiverEdge {
            source: i / k,
            target: index[&image],
            label: i % k,
        })
        .collect();
    Ok(WeightedQuiver {
        vertices,
        edges,
        endomorphisms: endos.to_vec(),
    })
}

pub fn module_quiver(
    d: &LinkDiagram,
    q: &Quandle,
    endos: &[Endomorphism],
    m: &QuandleModule,
) -> Result<WeightedQuiver> {
    module_quiver_with(d, q, endos, m, PushPolicy::default(), Execution::default())
}

pub fn module_quiver_with(
    d: &LinkDiagram,
    q: &Quandle,
    endos: &[Endomorphism],
    m: &QuandleModule,
    policy: PushPolicy,
    exec: Execution,
) -> Result<WeightedQuiver> {
    check_sizes(q, m)?;
    let mut quiver = coloring_quiver_with(d, q, endos, policy, exec)?;
    let weights = exec.try_map(&quiver.vertices, |v| coloring_weight(d, &v.colors, m))?;
    for (v, w) in quiver.vertices.iter_mut().zip(weights) {
        v.weight = Some(w);
    }
    Ok(quiver)
}

/// Sum over edges of σ^w(source) τ^w(target).
pub fn quiver_polynomial(wq: &WeightedQuiver) -> Result<TwoVarPolynomial> {
    let weights: Vec<WeightValue> = wq
        .vertices
        .iter()
        .map(|v| v.weight.ok_or(Error::MissingWeights))
        .collect::<Result<_>>()?;
    let rank = weights
        .iter()
        .filter(|w| matches!(w, WeightValue::Rank(_)))
        .count();
    if rank != 0 && rank != weights.len() {
        return Err(Error::MixedWeights);
    }
    let mut p = TwoVarPolynomial::new();
    for e in &wq.edges {
        p.add_term(weights[e.source].value(), weights[e.target].value(), 1);
    }
    Ok(p)
}

/// Convenience: build the weighted quiver and return its polynomial.
pub fn module_quiver_polynomial(
    d: &LinkDiagram,
    q: &Quandle,
    endos: &[Endomorphism],
    m: &QuandleModule,
    policy: PushPolicy,
    exec: Execution,
) -> Result<TwoVarPolynomial> {
    quiver_polynomial(&module_quiver_with(d, q, endos, m, policy, exec)?)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DotLabels {
    /// Weight when present, else the coloring.
    #[default]
    Weight,
    Coloring,
    Both,
}

pub fn dot_export(wq: &WeightedQuiver, labels: DotLabels) -> String {
    let mut out = String::from("digraph quiver {\n");
    for (i, v) in wq.vertices.iter().enumerate() {
        let colors = v
            .colors
            .iter()
            .map(|c| (c + 1).to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let label = match (labels, v.weight) {
            (DotLabels::Weight, Some(w)) => w.to_string(),
            (DotLabels::Both, Some(w)) => format!("{colors}\\nw={w}"),
            _ => colors,
        };
        let style = if v.is_coloring { "" } else { ", style=dashed" };
        let _ = writeln!(out, "  v{i} [label=\"{label}\"{style}];");
    }
    let labelled = wq.endomorphisms.len() > 1;
    for e in &wq.edges {
        if labelled {
            let _ = writeln!(
                out,
                "  v{} -> v{} [label=\"f{}\"];",
                e.source,
                e.target,
                e.label + 1
            );
        } else {
            let _ = writeln!(out, "  v{} -> v{};", e.source, e.target);
        }
    }
    out.push_str("}\n");
    out
}
