//! Finite quandles: axiom checking, standard constructions, endomorphisms and
//! the `quandle <n>` text format.
//!
//! Elements are `0..n` internally. Every text surface is 1-based, so a table
//! printed by [`Quandle::to_text`] reads exactly like a hand-written operation
//! table with row `x`, column `y` holding `x ▷ y`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Element = usize;

/// Default largest order accepted by [`enumerate_endomorphisms`].
pub const DEFAULT_ENDOMORPHISM_BOUND: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuandleAxiom {
    /// `x ▷ x = x`
    Idempotence,
    /// `y ↦ (x ↦ x ▷ y)` is a bijection
    RightInvertibility,
    /// `(x ▷ y) ▷ z = (x ▷ z) ▷ (y ▷ z)`
    SelfDistributivity,
}

/// A failing axiom instance. Witness elements are 0-based; unused slots are
/// `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleViolation {
    pub axiom: QuandleAxiom,
    pub witness: [Option<Element>; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleReport {
    pub is_quandle: bool,
    pub is_kei: bool,
    pub violations: Vec<QuandleViolation>,
}

/// Validated finite quandle with its derived inverse operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quandle {
    n: usize,
    op: Vec<Element>,
    inv: Vec<Element>,
}

fn check_table(table: &[Vec<Element>]) -> Result<usize> {
    let n = table.len();
    if n == 0 {
        return Err(Error::MalformedTable("empty table".into()));
    }
    for (x, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable(format!(
                "row {} has {} entries, expected {n}",
                x + 1,
                row.len()
            )));
        }
        if let Some(&bad) = row.iter().find(|&&v| v >= n) {
            return Err(Error::MalformedTable(format!(
                "entry {} in row {} is out of range",
                bad + 1,
                x + 1
            )));
        }
    }
    Ok(n)
}

/// Checks the quandle axioms on a 0-based `n x n` table.
#[allow(clippy::needless_range_loop)]
pub fn validate_quandle(table: &[Vec<Element>]) -> Result<QuandleReport> {
    let n = check_table(table)?;
    let mut violations = Vec::new();

    for x in 0..n {
        if table[x][x] != x {
            violations.push(QuandleViolation {
                axiom: QuandleAxiom::Idempotence,
                witness: [Some(x), None, None],
            });
        }
    }

    let mut bijective = true;
    for y in 0..n {
        let mut seen = vec![None; n];
        for x in 0..n {
            let v = table[x][y];
            if let Some(prev) = seen[v] {
                bijective = false;
                violations.push(QuandleViolation {
                    axiom: QuandleAxiom::RightInvertibility,
                    witness: [Some(prev), Some(x), Some(y)],
                });
                break;
            }
            seen[v] = Some(x);
        }
    }

    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if table[table[x][y]][z] != table[table[x][z]][table[y][z]] {
                    violations.push(QuandleViolation {
                        axiom: QuandleAxiom::SelfDistributivity,
                        witness: [Some(x), Some(y), Some(z)],
                    });
                    break 'outer;
                }
            }
        }
    }

    let is_quandle = violations.is_empty();
    let is_kei =
        is_quandle && bijective && (0..n).all(|x| (0..n).all(|y| table[table[x][y]][y] == x));
    Ok(QuandleReport {
        is_quandle,
        is_kei,
        violations,
    })
}

impl Quandle {
    /// Validates and wraps a 0-based operation table.
    pub fn from_table(table: Vec<Vec<Element>>) -> Result<Self> {
        let report = validate_quandle(&table)?;
        if !report.is_quandle {
            let v = &report.violations[0];
            let w: Vec<String> = v
                .witness
                .iter()
                .flatten()
                .map(|e| (e + 1).to_string())
                .collect();
            return Err(Error::NotAQuandle(format!(
                "{:?} fails at ({})",
                v.axiom,
                w.join(", ")
            )));
        }
        let n = table.len();
        let op: Vec<Element> = table.into_iter().flatten().collect();
        let mut inv = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                inv[op[x * n + y] * n + y] = x;
            }
        }
        Ok(Quandle { n, op, inv })
    }

    /// Builds from a 1-based table, as printed in operation-table form.
    pub fn from_one_based(table: &[Vec<usize>]) -> Result<Self> {
        let mut zero = Vec::with_capacity(table.len());
        for row in table {
            let mut r = Vec::with_capacity(row.len());
            for &v in row {
                if v == 0 {
                    return Err(Error::MalformedTable("entries are 1-based".into()));
                }
                r.push(v - 1);
            }
            zero.push(r);
        }
        Self::from_table(zero)
    }

    pub fn trivial(n: usize) -> Result<Self> {
        Self::from_table((0..n).map(|x| vec![x; n]).collect())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, x: Element, y: Element) -> Element {
        self.op[x * self.n + y]
    }

    /// Right inverse: `inv_op(op(x, y), y) == x`.
    #[inline]
    pub fn inv_op(&self, x: Element, y: Element) -> Element {
        self.inv[x * self.n + y]
    }

    pub fn table(&self) -> Vec<Vec<Element>> {
        self.op.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_kei(&self) -> bool {
        self.op == self.inv
    }

    /// Parses the `quandle <n>` format: a header line followed by `n` rows of
    /// `n` 1-based entries. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        Self::from_table(parse_table(text)?)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("quandle {}\n", self.n);
        for row in self.op.chunks(self.n) {
            let cells: Vec<String> = row.iter().map(|v| (v + 1).to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Reads a `quandle <n>` file into a 0-based table without checking the
/// axioms.
pub fn parse_table(text: &str) -> Result<Vec<Vec<Element>>> {
    let mut lines = crate::text::content_lines(text);
    let (lno, header) = lines.next().ok_or(Error::Syntax {
        line: 1,
        message: "missing `quandle <n>` header".into(),
    })?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["quandle", n] => crate::text::parse_num::<usize>(n, lno)?,
        _ => {
            return Err(Error::Syntax {
                line: lno,
                message: "expected `quandle <n>`".into(),
            })
        }
    };
    let mut table = Vec::with_capacity(n);
    for _ in 0..n {
        let (lno, line) = lines.next().ok_or(Error::Syntax {
            line: lno + table.len() + 1,
            message: format!("expected {n} table rows"),
        })?;
        let row = line
            .split_whitespace()
            .map(|t| crate::text::parse_num::<usize>(t, lno))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n || row.iter().any(|&v| v == 0 || v > n) {
            return Err(Error::Syntax {
                line: lno,
                message: format!("expected {n} entries in 1..={n}"),
            });
        }
        table.push(row);
    }
    if let Some((lno, _)) = lines.next() {
        return Err(Error::Syntax {
            line: lno,
            message: "trailing content after table".into(),
        });
    }
    Ok(table
        .into_iter()
        .map(|row| row.into_iter().map(|v| v - 1).collect())
        .collect())
}

impl fmt::Display for Quandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    n: usize,
    mul: Vec<Element>,
    identity: Element,
    inverse: Vec<Element>,
}

impl GroupTable {
    #[allow(clippy::needless_range_loop)]
    pub fn new(table: Vec<Vec<Element>>) -> Result<Self> {
        let n = check_table(&table).map_err(|e| Error::InvalidGroup(e.to_string()))?;
        let mul: Vec<Element> = table.into_iter().flatten().collect();
        let m = |a: usize, b: usize| mul[a * n + b];

        let identity = (0..n)
            .find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| m(a, b) == identity && m(b, a) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {} has no inverse", a + 1)))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            a + 1,
                            b + 1,
                            c + 1
                        )));
                    }
                }
            }
        }
        Ok(GroupTable {
            n,
            mul,
            identity,
            inverse,
        })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(
            (0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect(),
        )
    }

    /// Symmetric group on `k` points, elements in lexicographic order of
    /// their one-line notation; composition `(p * q)(i) = p(q(i))`.
    pub fn symmetric(k: usize) -> Result<Self> {
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut current: Vec<usize> = (0..k).collect();
        permutations(&mut current, 0, &mut perms);
        perms.sort();
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index(&(0..k).map(|i| p[q[i]]).collect()))
                    .collect()
            })
            .collect();
        Self::new(table)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.mul[a * self.n + b]
    }

    pub fn inverse(&self, a: Element) -> Element {
        self.inverse[a]
    }
}

fn permutations(current: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == current.len() {
        out.push(current.clone());
        return;
    }
    for i in k..current.len() {
        current.swap(k, i);
        permutations(current, k + 1, out);
        current.swap(k, i);
    }
}

/// Core quandle `x ▷ y = y x⁻¹ y`; always a kei.
pub fn core_quandle(g: &GroupTable) -> Result<Quandle> {
    let n = g.order();
    Quandle::from_table(
        (0..n)
            .map(|x| (0..n).map(|y| g.mul(g.mul(y, g.inverse(x)), y)).collect())
            .collect(),
    )
}

/// Conjugation quandle `x ▷ y = y⁻¹ x y`.
pub fn conjugation_quandle(g: &GroupTable) -> Result<Quandle> {
    let n = g.order();
    Quandle::from_table(
        (0..n)
            .map(|x| (0..n).map(|y| g.mul(g.mul(g.inverse(y), x), y)).collect())
            .collect(),
    )
}

/// Alexander quandle on `Z/nZ` with `x ▷ y = t x + (1 - t) y`.
pub fn alexander_quandle(n: u64, t: u64) -> Result<Quandle> {
    if n == 0 {
        return Err(Error::BadModulus(n));
    }
    let t = t % n;
    if t.gcd(&n) != 1 {
        return Err(Error::NotAUnit { t, n });
    }
    let s = (1 + n - t) % n;
    Quandle::from_table(
        (0..n)
            .map(|x| (0..n).map(|y| ((t * x + s * y) % n) as Element).collect())
            .collect(),
    )
}

/// Map `X -> X` known to be a quandle endomorphism (or, for
/// [`Endomorphism::unchecked`], merely a map of the right length).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Endomorphism {
    map: Vec<Element>,
}

impl Endomorphism {
    pub fn new(q: &Quandle, map: Vec<Element>) -> Result<Self> {
        if !is_endomorphism(q, &map)? {
            return Err(Error::NotAnEndomorphism(format_one_based(&map)));
        }
        Ok(Endomorphism { map })
    }

    /// Wraps an arbitrary self-map of `X` without checking the homomorphism
    /// identity. Pushing colorings along such a map may leave the coloring
    /// set; see [`crate::quiver::PushPolicy`].
    pub fn unchecked(q: &Quandle, map: Vec<Element>) -> Result<Self> {
        check_map(q, &map)?;
        Ok(Endomorphism { map })
    }

    pub fn identity(q: &Quandle) -> Self {
        Endomorphism {
            map: (0..q.order()).collect(),
        }
    }

    /// Parses `2,4,3,1` (1-based, commas and/or whitespace).
    pub fn parse_one_based(text: &str) -> Result<Vec<Element>> {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(Error::MalformedMap(format!("bad entry {t:?}"))),
            })
            .collect()
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.map[x]
    }

    pub fn as_slice(&self) -> &[Element] {
        &self.map
    }

    pub fn compose(&self, inner: &Endomorphism) -> Endomorphism {
        Endomorphism {
            map: inner.map.iter().map(|&x| self.map[x]).collect(),
        }
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", format_one_based(&self.map))
    }
}

fn format_one_based(map: &[Element]) -> String {
    map.iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn check_map(q: &Quandle, f: &[Element]) -> Result<()> {
    if f.len() != q.order() {
        return Err(Error::MalformedMap(format!(
            "map has {} entries, quandle has order {}",
            f.len(),
            q.order()
        )));
    }
    if let Some(&bad) = f.iter().find(|&&v| v >= q.order()) {
        return Err(Error::MalformedMap(format!(
            "value {} out of range",
            bad + 1
        )));
    }
    Ok(())
}

/// `f(x ▷ y) = f(x) ▷ f(y)` for all `x, y`.
pub fn is_endomorphism(q: &Quandle, f: &[Element]) -> Result<bool> {
    check_map(q, f)?;
    let n = q.order();
    Ok((0..n).all(|x| (0..n).all(|y| f[q.op(x, y)] == q.op(f[x], f[y]))))
}

/// All endomorphisms in lexicographic order of the map tuple.
///
/// Depth-first over `f(0), f(1), ...`, rejecting a prefix as soon as some
/// pair `x, y` with `x, y, x ▷ y` all assigned violates the identity.
pub fn enumerate_endomorphisms(q: &Quandle, bound: usize) -> Result<Vec<Endomorphism>> {
    let n = q.order();
    if n > bound {
        return Err(Error::OrderTooLarge { order: n, bound });
    }
    let mut out = Vec::new();
    let mut f = Vec::with_capacity(n);
    extend_endomorphism(q, &mut f, &mut out);
    Ok(out)
}

fn extend_endomorphism(q: &Quandle, f: &mut Vec<Element>, out: &mut Vec<Endomorphism>) {
    let n = q.order();
    let k = f.len();
    if k == n {
        out.push(Endomorphism { map: f.clone() });
        return;
    }
    for v in 0..n {
        f.push(v);
        // only pairs touching the newly assigned element need checking
        let consistent = (0..=k).all(|a| {
            [(a, k), (k, a)].iter().all(|&(x, y)| {
                let xy = q.op(x, y);
                xy > k || f[xy] == q.op(f[x], f[y])
            })
        }) && (0..k).all(|x| {
            (0..k).all(|y| {
                let xy = q.op(x, y);
                xy != k || f[xy] == q.op(f[x], f[y])
            })
        });
        if consistent {
            extend_endomorphism(q, f, out);
        }
        f.pop();
    }
}
