//! Quandle modules over `Z/nZ` or `Z`, bead matrices and kernel weights.
//!
//! Axioms checked by [`validate_module`], for all `x, y, z`:
//!
//! ```text
//! unit      t[x][y] invertible
//! A1        t[x][x] + s[x][x] = 1
//! A2        t[x▷y][z] t[x][y] = t[x▷z][y▷z] t[x][z]
//! A3        t[x▷y][z] s[x][y] = s[x▷z][y▷z] t[y][z]
//! A4        s[x▷y][z] = t[x▷z][y▷z] s[x][z] + s[x▷z][y▷z] s[y][z]
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloring::{enumerate_colorings_with, Coloring};
use crate::diagram::{LinkDiagram, Sign};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::{biguint_to_u64, kernel_count_mod_n, kernel_rank_over_z, IntMatrix, Ring};
use crate::poly::OneVarPolynomial;
use crate::quandle::{Element, Quandle};
use crate::text::{content_lines, parse_num};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleModule {
    ring: Ring,
    n: usize,
    t: Vec<i64>,
    s: Vec<i64>,
}

impl QuandleModule {
    /// Wraps two `n x n` tables. Entries must be canonical ring elements
    /// (in `[0, modulus)` for `Z/nZ`). Axioms are not checked here.
    pub fn new(ring: Ring, t: Vec<Vec<i64>>, s: Vec<Vec<i64>>) -> Result<Self> {
        let n = t.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty module tables".into()));
        }
        for (name, table) in [("t", &t), ("s", &s)] {
            if table.len() != n || table.iter().any(|r| r.len() != n) {
                return Err(Error::MalformedTable(format!("{name} is not {n}x{n}")));
            }
            if let Some(v) = table.iter().flatten().find(|&&v| ring.reduce(v) != v) {
                return Err(Error::MalformedTable(format!(
                    "{name} entry {v} is not reduced in {ring}"
                )));
            }
        }
        Ok(QuandleModule {
            ring,
            n,
            t: t.into_iter().flatten().collect(),
            s: s.into_iter().flatten().collect(),
        })
    }

    /// `t = u`, `s = 1 - u` everywhere.
    pub fn constant(ring: Ring, n: usize, u: i64) -> Result<Self> {
        let u = ring.reduce(u);
        let v = ring.reduce(1 - u);
        QuandleModule::new(ring, vec![vec![u; n]; n], vec![vec![v; n]; n])
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn t(&self, x: Element, y: Element) -> i64 {
        self.t[x * self.n + y]
    }

    #[inline]
    pub fn s(&self, x: Element, y: Element) -> i64 {
        self.s[x * self.n + y]
    }

    pub fn t_table(&self) -> Vec<Vec<i64>> {
        self.t.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn s_table(&self) -> Vec<Vec<i64>> {
        self.s.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    /// Parses `module <n> mod <m|Z>` followed by the `t` rows and the `s`
    /// rows.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (lno, header) = lines.next().ok_or(Error::Syntax {
            line: 1,
            message: "missing `module <n> mod <m>` header".into(),
        })?;
        let (n, ring) = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["module", n, "mod", "Z"] => (parse_num::<usize>(n, lno)?, Ring::Integers),
            ["module", n, "mod", m] => {
                let m = parse_num::<u64>(m, lno)?;
                (parse_num::<usize>(n, lno)?, Ring::modulo(m)?)
            }
            _ => {
                return Err(Error::Syntax {
                    line: lno,
                    message: "expected `module <n> mod <m>` or `module <n> mod Z`".into(),
                })
            }
        };
        if n == 0 {
            return Err(Error::Syntax {
                line: lno,
                message: "module order must be positive".into(),
            });
        }
        let mut rows = Vec::with_capacity(2 * n);
        let mut last = lno;
        for _ in 0..2 * n {
            let (lno, line) = lines.next().ok_or(Error::Syntax {
                line: last + 1,
                message: format!("expected {} table rows (t then s)", 2 * n),
            })?;
            last = lno;
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>().map_err(|_| Error::Syntax {
                        line: lno,
                        message: format!("bad entry {tok:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != n {
                return Err(Error::Syntax {
                    line: lno,
                    message: format!("expected {n} entries, found {}", row.len()),
                });
            }
            if let Some(v) = row.iter().find(|&&v| ring.reduce(v) != v) {
                return Err(Error::Syntax {
                    line: lno,
                    message: format!("entry {v} is outside 0..{}", ring_modulus_text(ring)),
                });
            }
            rows.push(row);
        }
        if let Some((lno, _)) = lines.next() {
            return Err(Error::Syntax {
                line: lno,
                message: "trailing content after tables".into(),
            });
        }
        let s = rows.split_off(n);
        QuandleModule::new(ring, rows, s)
    }

    pub fn to_text(&self) -> String {
        let modulus = match self.ring {
            Ring::Mod(m) => m.to_string(),
            Ring::Integers => "Z".into(),
        };
        let mut out = format!("module {} mod {modulus}\n# t\n", self.n);
        let render = |table: &[i64], out: &mut String| {
            for row in table.chunks(self.n) {
                let cells: Vec<String> = row.iter().map(i64::to_string).collect();
                out.push_str(&cells.join(" "));
                out.push('\n');
            }
        };
        render(&self.t, &mut out);
        out.push_str("# s\n");
        render(&self.s, &mut out);
        out
    }
}

fn ring_modulus_text(ring: Ring) -> String {
    match ring {
        Ring::Mod(m) => m.to_string(),
        Ring::Integers => "inf".into(),
    }
}

impl fmt::Display for QuandleModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ModuleAxiom {
    Unit,
    A1,
    A2,
    A3,
    A4,
}

impl fmt::Display for ModuleAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            ModuleAxiom::Unit => "t[x][y] is a unit",
            ModuleAxiom::A1 => "t[x][x] + s[x][x] = 1",
            ModuleAxiom::A2 => "t[x>y][z] t[x][y] = t[x>z][y>z] t[x][z]",
            ModuleAxiom::A3 => "t[x>y][z] s[x][y] = s[x>z][y>z] t[y][z]",
            ModuleAxiom::A4 => "s[x>y][z] = t[x>z][y>z] s[x][z] + s[x>z][y>z] s[y][z]",
        };
        f.write_str(text)
    }
}

/// Smallest failing instance of one axiom, with the number of failing
/// instances. Witness elements are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleViolation {
    pub axiom: ModuleAxiom,
    pub witness: [Option<Element>; 3],
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleReport {
    pub valid: bool,
    pub violations: Vec<ModuleViolation>,
}

struct Axioms<'a> {
    q: &'a Quandle,
    ring: Ring,
}

impl Axioms<'_> {
    fn eq(&self, a: i128, b: i128) -> bool {
        match self.ring {
            Ring::Mod(n) => (a - b).rem_euclid(n as i128) == 0,
            Ring::Integers => a == b,
        }
    }

    /// Evaluates one axiom instance given entry accessors.
    fn holds(
        &self,
        axiom: ModuleAxiom,
        [x, y, z]: [Element; 3],
        t: &impl Fn(Element, Element) -> i128,
        s: &impl Fn(Element, Element) -> i128,
    ) -> bool {
        let q = self.q;
        match axiom {
            ModuleAxiom::Unit => {
                let v = t(x, y);
                match self.ring {
                    Ring::Mod(_) => self.ring.is_unit(v as i64),
                    Ring::Integers => v == 1 || v == -1,
                }
            }
            ModuleAxiom::A1 => self.eq(t(x, x) + s(x, x), 1),
            ModuleAxiom::A2 => self.eq(
                t(q.op(x, y), z) * t(x, y),
                t(q.op(x, z), q.op(y, z)) * t(x, z),
            ),
            ModuleAxiom::A3 => self.eq(
                t(q.op(x, y), z) * s(x, y),
                s(q.op(x, z), q.op(y, z)) * t(y, z),
            ),
            ModuleAxiom::A4 => self.eq(
                s(q.op(x, y), z),
                t(q.op(x, z), q.op(y, z)) * s(x, z) + s(q.op(x, z), q.op(y, z)) * s(y, z),
            ),
        }
    }

    /// Table entries `(is_s, row, col)` read by an instance.
    fn operands(
        &self,
        axiom: ModuleAxiom,
        [x, y, z]: [Element; 3],
    ) -> Vec<(bool, Element, Element)> {
        let q = self.q;
        let (xy, xz, yz) = (q.op(x, y), q.op(x, z), q.op(y, z));
        match axiom {
            ModuleAxiom::Unit => vec![(false, x, y)],
            ModuleAxiom::A1 => vec![(false, x, x), (true, x, x)],
            ModuleAxiom::A2 => vec![
                (false, xy, z),
                (false, x, y),
                (false, xz, yz),
                (false, x, z),
            ],
            ModuleAxiom::A3 => vec![(false, xy, z), (true, x, y), (true, xz, yz), (false, y, z)],
            ModuleAxiom::A4 => vec![
                (true, xy, z),
                (false, xz, yz),
                (true, x, z),
                (true, xz, yz),
                (true, y, z),
            ],
        }
    }
}

fn instances(axiom: ModuleAxiom, n: usize) -> Box<dyn Iterator<Item = [Element; 3]>> {
    match axiom {
        ModuleAxiom::Unit => Box::new((0..n).flat_map(move |x| (0..n).map(move |y| [x, y, 0]))),
        ModuleAxiom::A1 => Box::new((0..n).map(|x| [x, x, x])),
        _ => Box::new(
            (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| [x, y, z]))),
        ),
    }
}

fn witness(axiom: ModuleAxiom, [x, y, z]: [Element; 3]) -> [Option<Element>; 3] {
    match axiom {
        ModuleAxiom::Unit => [Some(x), Some(y), None],
        ModuleAxiom::A1 => [Some(x), None, None],
        _ => [Some(x), Some(y), Some(z)],
    }
}

const ALL_AXIOMS: [ModuleAxiom; 5] = [
    ModuleAxiom::Unit,
    ModuleAxiom::A1,
    ModuleAxiom::A2,
    ModuleAxiom::A3,
    ModuleAxiom::A4,
];

pub fn validate_module(q: &Quandle, m: &QuandleModule) -> Result<ModuleReport> {
    if m.order() != q.order() {
        return Err(Error::SizeMismatch(format!(
            "module has order {}, quandle has order {}",
            m.order(),
            q.order()
        )));
    }
    let ax = Axioms { q, ring: m.ring };
    let t = |x, y| m.t(x, y) as i128;
    let s = |x, y| m.s(x, y) as i128;
    let mut violations = Vec::new();
    for axiom in ALL_AXIOMS {
        let mut first = None;
        let mut failures = 0;
        for inst in instances(axiom, q.order()) {
            if !ax.holds(axiom, inst, &t, &s) {
                failures += 1;
                first.get_or_insert(inst);
            }
        }
        if let Some(inst) = first {
            violations.push(ModuleViolation {
                axiom,
                witness: witness(axiom, inst),
                failures,
            });
        }
    }
    Ok(ModuleReport {
        valid: violations.is_empty(),
        violations,
    })
}

/// Every quandle module over `Z/nZ`, in enumeration order, up to
/// `max_results`.
///
/// Variables are the `t` entries row-major, then the `s` entries row-major.
/// Each axiom instance is checked as soon as its last operand is assigned.
pub fn search_modules(q: &Quandle, modulus: u64, max_results: usize) -> Result<Vec<QuandleModule>> {
    let ring = Ring::modulo(modulus)?;
    let n = q.order();
    let ax = Axioms { q, ring };
    let var = |(is_s, r, c): (bool, Element, Element)| usize::from(is_s) * n * n + r * n + c;

    let mut checks: Vec<Vec<(ModuleAxiom, [Element; 3])>> = vec![Vec::new(); 2 * n * n];
    for axiom in ALL_AXIOMS.into_iter().filter(|&a| a != ModuleAxiom::Unit) {
        for inst in instances(axiom, n) {
            let last = ax
                .operands(axiom, inst)
                .into_iter()
                .map(var)
                .max()
                .expect("operands");
            checks[last].push((axiom, inst));
        }
    }
    let units: Vec<i64> = (0..modulus as i64).filter(|&v| ring.is_unit(v)).collect();
    let all: Vec<i64> = (0..modulus as i64).collect();

    let mut values = vec![0i64; 2 * n * n];
    let mut out = Vec::new();
    if max_results > 0 {
        search_step(
            &ax,
            n,
            &checks,
            &units,
            &all,
            &mut values,
            0,
            max_results,
            &mut out,
        );
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search_step(
    ax: &Axioms<'_>,
    n: usize,
    checks: &[Vec<(ModuleAxiom, [Element; 3])>],
    units: &[i64],
    all: &[i64],
    values: &mut Vec<i64>,
    k: usize,
    max_results: usize,
    out: &mut Vec<QuandleModule>,
) {
    if k == values.len() {
        let (t, s) = values.split_at(n * n);
        out.push(QuandleModule {
            ring: ax.ring,
            n,
            t: t.to_vec(),
            s: s.to_vec(),
        });
        return;
    }
    let domain = if k < n * n { units } else { all };
    for &v in domain {
        values[k] = v;
        let ok = {
            let vals = &*values;
            let t = |x: Element, y: Element| vals[x * n + y] as i128;
            let s = |x: Element, y: Element| vals[n * n + x * n + y] as i128;
            checks[k]
                .iter()
                .all(|&(axiom, inst)| ax.holds(axiom, inst, &t, &s))
        };
        if ok {
            search_step(ax, n, checks, units, all, values, k + 1, max_results, out);
            if out.len() >= max_results {
                return;
            }
        }
    }
}

/// Coefficient matrix of the bead equations: one row per crossing, one
/// column per arc, entries reduced into the ring.
///
/// `colors` may be any assignment of elements to arcs; the crossing
/// conditions are not checked.
pub fn bead_matrix(d: &LinkDiagram, colors: &[Element], m: &QuandleModule) -> Result<IntMatrix> {
    if colors.len() != d.arc_count {
        return Err(Error::InvalidColoring(format!(
            "{} colors for {} arcs",
            colors.len(),
            d.arc_count
        )));
    }
    if colors.iter().any(|&c| c >= m.order()) {
        return Err(Error::InvalidColoring(
            "color outside the module's quandle".into(),
        ));
    }
    let cols = d.arc_count;
    let mut entries = vec![0i64; d.crossings.len() * cols];
    for (r, c) in d.crossings.iter().enumerate() {
        let row = &mut entries[r * cols..(r + 1) * cols];
        let y = colors[c.over];
        let (head, tail) = match c.sign {
            Sign::Positive => (c.under_in, c.under_out),
            Sign::Negative => (c.under_out, c.under_in),
        };
        let x = colors[head];
        row[head] += m.t(x, y);
        row[c.over] += m.s(x, y);
        row[tail] -= 1;
        for v in row.iter_mut() {
            *v = m.ring.reduce(*v);
        }
    }
    IntMatrix::from_i64(d.crossings.len(), cols, &entries)
}

/// Per-coloring weight: kernel cardinality over a finite ring, kernel rank
/// over `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WeightValue {
    Cardinality(u64),
    Rank(u64),
}

impl WeightValue {
    pub fn value(self) -> u64 {
        match self {
            WeightValue::Cardinality(v) | WeightValue::Rank(v) => v,
        }
    }
}

impl fmt::Display for WeightValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

pub fn coloring_weight(
    d: &LinkDiagram,
    colors: &[Element],
    m: &QuandleModule,
) -> Result<WeightValue> {
    let matrix = bead_matrix(d, colors, m)?;
    Ok(match m.ring {
        Ring::Mod(n) => WeightValue::Cardinality(biguint_to_u64(&kernel_count_mod_n(&matrix, n)?)?),
        Ring::Integers => WeightValue::Rank(kernel_rank_over_z(&matrix) as u64),
    })
}

pub fn module_polynomial(
    d: &LinkDiagram,
    q: &Quandle,
    m: &QuandleModule,
) -> Result<OneVarPolynomial> {
    module_polynomial_with(d, q, m, Execution::default())
}

pub fn module_polynomial_with(
    d: &LinkDiagram,
    q: &Quandle,
    m: &QuandleModule,
    exec: Execution,
) -> Result<OneVarPolynomial> {
    check_sizes(q, m)?;
    let colorings = enumerate_colorings_with(d, q, exec);
    let weights = coloring_weights(d, &colorings, m, exec)?;
    let mut p = OneVarPolynomial::new();
    for w in weights {
        p.add_term(w.value(), 1);
    }
    Ok(p)
}

pub(crate) fn check_sizes(q: &Quandle, m: &QuandleModule) -> Result<()> {
    if q.order() != m.order() {
        return Err(Error::SizeMismatch(format!(
            "module has order {}, quandle has order {}",
            m.order(),
            q.order()
        )));
    }
    Ok(())
}

pub(crate) fn coloring_weights(
    d: &LinkDiagram,
    colorings: &[Coloring],
    m: &QuandleModule,
    exec: Execution,
) -> Result<Vec<WeightValue>> {
    exec.try_map(colorings, |c| coloring_weight(d, c.colors(), m))
}
