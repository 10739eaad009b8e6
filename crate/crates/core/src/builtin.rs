//! Diagrams of the knots and links used throughout the examples, embedded
//! from `data/links`.

use crate::diagram::{parse_pd, LinkDiagram};
use crate::error::{Error, Result};

const NATIVE: &[(&str, &str)] = &[
    ("0_1", include_str!("../data/links/0_1.link")),
    ("3_1", include_str!("../data/links/3_1.link")),
    ("4_1", include_str!("../data/links/4_1.link")),
    ("L2a1", include_str!("../data/links/L2a1.link")),
    ("L4a1", include_str!("../data/links/L4a1.link")),
    ("L5a1", include_str!("../data/links/L5a1.link")),
    ("L6a1", include_str!("../data/links/L6a1.link")),
    ("L6a2", include_str!("../data/links/L6a2.link")),
    ("L6a3", include_str!("../data/links/L6a3.link")),
    ("L6a4", include_str!("../data/links/L6a4.link")),
    ("L6a5", include_str!("../data/links/L6a5.link")),
    ("L6n1", include_str!("../data/links/L6n1.link")),
    ("L7a1", include_str!("../data/links/L7a1.link")),
    ("L7a2", include_str!("../data/links/L7a2.link")),
    ("L7a3", include_str!("../data/links/L7a3.link")),
    ("L7a4", include_str!("../data/links/L7a4.link")),
    ("L7a5", include_str!("../data/links/L7a5.link")),
    ("L7a6", include_str!("../data/links/L7a6.link")),
    ("L7a7", include_str!("../data/links/L7a7.link")),
    ("L7n1", include_str!("../data/links/L7n1.link")),
    ("L7n2", include_str!("../data/links/L7n2.link")),
];

/// Knot Atlas PD codes the native files were imported from.
const PD: &[(&str, &str)] = &[
    ("3_1", include_str!("../data/links/3_1.pd")),
    ("4_1", include_str!("../data/links/4_1.pd")),
    ("L2a1", include_str!("../data/links/L2a1.pd")),
    ("L4a1", include_str!("../data/links/L4a1.pd")),
    ("L5a1", include_str!("../data/links/L5a1.pd")),
    ("L6a1", include_str!("../data/links/L6a1.pd")),
    ("L6a2", include_str!("../data/links/L6a2.pd")),
    ("L6a3", include_str!("../data/links/L6a3.pd")),
    ("L6a4", include_str!("../data/links/L6a4.pd")),
    ("L6a5", include_str!("../data/links/L6a5.pd")),
    ("L6n1", include_str!("../data/links/L6n1.pd")),
    ("L7a1", include_str!("../data/links/L7a1.pd")),
    ("L7a2", include_str!("../data/links/L7a2.pd")),
    ("L7a3", include_str!("../data/links/L7a3.pd")),
    ("L7a4", include_str!("../data/links/L7a4.pd")),
    ("L7a5", include_str!("../data/links/L7a5.pd")),
    ("L7a6", include_str!("../data/links/L7a6.pd")),
    ("L7a7", include_str!("../data/links/L7a7.pd")),
    ("L7n1", include_str!("../data/links/L7n1.pd")),
    ("L7n2", include_str!("../data/links/L7n2.pd")),
];

const ALIASES: &[(&str, &str)] = &[("T(4,2)", "L4a1"), ("Hopf", "L2a1")];

/// The links of the Thistlethwaite-table examples, in table order.
pub const TABLE_LINKS: &[&str] = &[
    "L2a1", "L4a1", "L5a1", "L6a1", "L6a2", "L6a3", "L6a4", "L6a5", "L6n1", "L7a1", "L7a2", "L7a3",
    "L7a4", "L7a5", "L7a6", "L7a7", "L7n1", "L7n2",
];

/// Canonical names, then aliases.
pub fn available_names() -> Vec<&'static str> {
    NATIVE
        .iter()
        .map(|(n, _)| *n)
        .chain(ALIASES.iter().map(|(a, _)| *a))
        .collect()
}

fn resolve(name: &str) -> Option<&'static str> {
    ALIASES
        .iter()
        .find(|(a, _)| *a == name)
        .map(|(_, target)| *target)
        .or_else(|| NATIVE.iter().find(|(n, _)| *n == name).map(|(n, _)| *n))
}

pub fn builtin_link(name: &str) -> Result<LinkDiagram> {
    let canonical = resolve(name).ok_or_else(|| Error::UnknownLink {
        name: name.to_string(),
        available: available_names().join(", "),
    })?;
    let text = NATIVE
        .iter()
        .find(|(n, _)| *n == canonical)
        .map(|(_, t)| *t)
        .expect("resolved name");
    LinkDiagram::parse(text)
}

/// Diagram re-imported from the stored PD code, if there is one.
pub fn builtin_pd(name: &str) -> Option<Result<LinkDiagram>> {
    let canonical = resolve(name)?;
    PD.iter()
        .find(|(n, _)| *n == canonical)
        .map(|(n, text)| parse_pd(text).map(|d| d.named(*n)))
}

/// Crossing number and number of components.
pub fn census(name: &str) -> Option<(usize, usize)> {
    let canonical = resolve(name)?;
    Some(match canonical {
        "0_1" => (0, 1),
        "3_1" => (3, 1),
        "4_1" => (4, 1),
        _ => {
            let crossings = canonical[1..2].parse().ok()?;
            let components = match canonical {
                "L6a4" | "L6a5" | "L6n1" | "L7a7" => 3,
                _ => 2,
            };
            (crossings, components)
        }
    })
}
