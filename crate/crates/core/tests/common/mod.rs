#![allow(dead_code)]

use qmq_core::diagram::LinkDiagram;
use qmq_core::module::QuandleModule;
use qmq_core::quandle::{Endomorphism, Quandle};

pub fn quandle(name: &str) -> Quandle {
    let text = match name {
        "q1" => include_str!("../../data/quandles/q1.qnd"),
        "q4_knots" => include_str!("../../data/quandles/q4_knots.qnd"),
        "q5" => include_str!("../../data/quandles/q5.qnd"),
        "q4_l7n" => include_str!("../../data/quandles/q4_l7n.qnd"),
        "q3" => include_str!("../../data/quandles/q3.qnd"),
        _ => panic!("no quandle {name}"),
    };
    Quandle::parse(text).unwrap()
}

pub fn module(name: &str) -> QuandleModule {
    let text = match name {
        "q4_knots_z5" => include_str!("../../data/modules/q4_knots_z5.mod"),
        "q1_z4" => include_str!("../../data/modules/q1_z4.mod"),
        "q5_z3" => include_str!("../../data/modules/q5_z3.mod"),
        "q4_l7n_z3" => include_str!("../../data/modules/q4_l7n_z3.mod"),
        "q4_l7n_z3_reference" => include_str!("../../data/modules/q4_l7n_z3_reference.mod"),
        "q3_z6" => include_str!("../../data/modules/q3_z6.mod"),
        _ => panic!("no module {name}"),
    };
    QuandleModule::parse(text).unwrap()
}

/// Map from an `.endo` file, unchecked.
pub fn endo(name: &str, q: &Quandle) -> Endomorphism {
    let text = match name {
        "q1" => include_str!("../../data/endos/q1.endo"),
        "q5" => include_str!("../../data/endos/q5.endo"),
        "q4_l7n" => include_str!("../../data/endos/q4_l7n.endo"),
        "q3" => include_str!("../../data/endos/q3.endo"),
        _ => panic!("no endomorphism {name}"),
    };
    let body: String = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join(" ");
    Endomorphism::unchecked(q, Endomorphism::parse_one_based(&body).unwrap()).unwrap()
}

pub fn alternate(name: &str) -> LinkDiagram {
    let text = match name {
        "0_1_kink_pos" => include_str!("../../data/alternates/0_1_kink_pos.link"),
        "0_1_kink_neg" => include_str!("../../data/alternates/0_1_kink_neg.link"),
        "0_1_kink_pair" => include_str!("../../data/alternates/0_1_kink_pair.link"),
        "3_1_kink_pos" => include_str!("../../data/alternates/3_1_kink_pos.link"),
        "3_1_kink_neg" => include_str!("../../data/alternates/3_1_kink_neg.link"),
        "3_1_r2" => include_str!("../../data/alternates/3_1_r2.link"),
        _ => panic!("no alternate diagram {name}"),
    };
    LinkDiagram::parse(text).unwrap()
}

pub const ALTERNATES: &[(&str, &[&str])] = &[
    ("0_1", &["0_1_kink_pos", "0_1_kink_neg", "0_1_kink_pair"]),
    ("3_1", &["3_1_kink_pos", "3_1_kink_neg", "3_1_r2"]),
];

pub fn golden(name: &str) -> &'static str {
    match name {
        "q5_z3" => include_str!("../../data/golden/q5_z3.tsv"),
        "q4_l7n_z3" => include_str!("../../data/golden/q4_l7n_z3.tsv"),
        "q3_z6" => include_str!("../../data/golden/q3_z6.tsv"),
        _ => panic!("no golden file {name}"),
    }
}

/// Reference quiver polynomials for the Z_3 table (x = sigma, y = tau).
pub const REFERENCE_Q5_Z3: &[(&str, &str)] = &[
    ("L2a1", "4 x^9 y^9 + 1 x^9 y^3 + 4 x^3 y^9 + 4 x^3 y^3"),
    ("L4a1", "16 x^9 y^9 + 1 x^9 y^3 + 8 x^3 y^9"),
    ("L5a1", "20 x^9 y^9 + 1 x^9 y^3 + 4 x^3 y^9"),
    ("L6a1", "21 x^9 y^9 + 4 x^3 y^9"),
    ("L6a2", "4 x^9 y^9 + 1 x^9 y^3 + 4 x^3 y^9 + 4 x^3 y^3"),
    ("L6a3", "9 x^9 y^9 + 4 x^3 y^3"),
    ("L6a4", "20 x^27 y^27 + 15 x^27 y^9 + 40 x^9 y^27"),
    (
        "L6a5",
        "8 x^27 y^27 + 1 x^27 y^9 + 8 x^9 y^27 + 6 x^9 y^9 + 12 x^9 y^3 + 6 x^3 y^9",
    ),
    (
        "L6n1",
        "8 x^27 y^27 + 1 x^27 y^3 + 6 x^9 y^9 + 12 x^9 y^3 + 8 x^3 y^27 + 6 x^3 y^9",
    ),
    ("L7a1", "25 x^9 y^9"),
    ("L7a2", "16 x^9 y^9 + 1 x^9 y^3 + 8 x^3 y^9"),
    ("L7a3", "20 x^9 y^9 + 1 x^9 y^3 + 4 x^3 y^9"),
    ("L7a4", "20 x^9 y^9 + 1 x^9 y^3 + 4 x^3 y^9"),
    ("L7a5", "9 x^9 y^9 + 4 x^3 y^3"),
    ("L7a6", "4 x^9 y^9 + 1 x^9 y^3 + 4 x^3 y^9 + 4 x^3 y^3"),
    (
        "L7a7",
        "8 x^27 y^27 + 1 x^27 y^3 + 6 x^9 y^9 + 12 x^9 y^3 + 8 x^3 y^27 + 6 x^3 y^9",
    ),
    ("L7n1", "16 x^9 y^9 + 1 x^9 y^3 + 8 x^3 y^9"),
    ("L7n2", "20 x^9 y^9 + 1 x^9 y^3 + 4 x^3 y^9"),
];

/// Reference quiver polynomials for the Z_6 table.
pub const REFERENCE_Q3_Z6: &[(&str, &str)] = &[
    ("L2a1", "1 x^36 y^12 + 1 x^12 y^36 + 1 x^12 y^12 + 2 x^12 y^2"),
    ("L4a1", "1 x^36 y^12 + 4 x^36 y^6 + 1 x^12 y^36 + 3 x^12 y^12"),
    ("L5a1", "2 x^36 y^12 + 1 x^36 y^6 + 2 x^36 y^2 + 2 x^12 y^36 + 2 x^12 y^12"),
    ("L6a1", "3 x^36 y^36 + 2 x^36 y^12 + 4 x^36 y^2"),
    ("L6a2", "1 x^36 y^12 + 1 x^12 y^36 + 1 x^12 y^12 + 2 x^12 y^2"),
    ("L6a3", "3 x^36 y^36 + 2 x^36 y^2"),
    ("L6a4", "3 x^216 y^72 + 3 x^72 y^216 + 9 x^72 y^72 + 6 x^72 y^36"),
    ("L6a5", "1 x^216 y^72 + 1 x^72 y^216 + 1 x^72 y^72 + 6 x^72 y^12 + 6 x^12 y^4"),
    ("L6n1", "1 x^216 y^24 + 1 x^24 y^216 + 1 x^24 y^24 + 6 x^24 y^12 + 3 x^12 y^8 + 3 x^12 y^4"),
    ("L7a1", "4 x^36 y^36 + 2 x^36 y^12 + 3 x^36 y^6"),
    ("L7a2", "1 x^36 y^12 + 1 x^36 y^6 + 3 x^36 y^2 + 1 x^12 y^36 + 3 x^12 y^12"),
    ("L7a3", "2 x^36 y^12 + 2 x^36 y^6 + 1 x^36 y^2 + 2 x^12 y^36 + 2 x^12 y^12"),
    ("L7a4", "1 x^36 y^18 + 2 x^36 y^12 + 1 x^36 y^6 + 1 x^36 y^2 + 2 x^12 y^36 + 2 x^12 y^12"),
    ("L7a5", "3 x^36 y^36 + 2 x^36 y^2"),
    ("L7a6", "1 x^36 y^12 + 1 x^12 y^36 + 1 x^12 y^12 + 2 x^12 y^2"),
    ("L7a7", "1 x^216 y^24 + 1 x^24 y^216 + 1 x^24 y^24 + 5 x^24 y^12 + 1 x^24 y^4 + 1 x^12 y^36 + 3 x^12 y^12 + 2 x^12 y^4"),
    ("L7n1", "1 x^36 y^12 + 2 x^36 y^4 + 2 x^36 y^2 + 1 x^12 y^36 + 3 x^12 y^12"),
    ("L7n2", "3 x^36 y^12 + 1 x^36 y^6 + 1 x^36 y^2 + 2 x^12 y^36 + 2 x^12 y^12"),
];
