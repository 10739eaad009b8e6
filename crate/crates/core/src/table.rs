//! Quiver polynomial tables over lists of links, with an optional search
//! over component orientations and mirror images.

use serde::{Deserialize, Serialize};

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::module::QuandleModule;
use crate::poly::TwoVarPolynomial;
use crate::quandle::{Endomorphism, Quandle};
use crate::quiver::{module_quiver_polynomial, PushPolicy};

/// Largest component count for which all orientation variants are tried.
pub const MAX_SEARCH_COMPONENTS: usize = 16;

/// Fixed data shared by every row of a table.
#[derive(Debug, Clone)]
pub struct TableConfig<'a> {
    pub quandle: &'a Quandle,
    pub module: &'a QuandleModule,
    pub endomorphisms: &'a [Endomorphism],
    pub policy: PushPolicy,
    pub exec: Execution,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub link: String,
    /// Components reversed, bit `i` for component `i`.
    pub mask: u64,
    pub mirror: bool,
    pub polynomial: TwoVarPolynomial,
}

impl TableRow {
    /// Tab separated: link, mask, mirror flag, polynomial.
    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}",
            self.link,
            self.mask,
            u8::from(self.mirror),
            self.polynomial
        )
    }
}

fn in_link(link: &str, e: Error) -> Error {
    Error::InLink {
        link: link.to_string(),
        source: Box::new(e),
    }
}

pub fn polynomial_of(cfg: &TableConfig<'_>, d: &LinkDiagram) -> Result<TwoVarPolynomial> {
    module_quiver_polynomial(
        d,
        cfg.quandle,
        cfg.endomorphisms,
        cfg.module,
        cfg.policy,
        cfg.exec,
    )
}

/// One row per link, each at its given orientation.
pub fn batch_table(cfg: &TableConfig<'_>, links: &[LinkDiagram]) -> Result<Vec<TableRow>> {
    cfg.exec.try_map(links, |d| {
        Ok(TableRow {
            link: d.name.clone(),
            mask: 0,
            mirror: false,
            polynomial: polynomial_of(cfg, d).map_err(|e| in_link(&d.name, e))?,
        })
    })
}

/// Polynomials of every orientation/mirror variant, ordered by
/// `(mask, mirror)`.
pub fn orientation_variants(cfg: &TableConfig<'_>, d: &LinkDiagram) -> Result<Vec<TableRow>> {
    let components = d.component_count();
    if components > MAX_SEARCH_COMPONENTS {
        return Err(in_link(
            &d.name,
            Error::InvalidDiagram(format!("{components} components is too many to search")),
        ));
    }
    let variants: Vec<(u64, bool)> = (0..1u64 << components)
        .flat_map(|mask| [(mask, false), (mask, true)])
        .collect();
    cfg.exec.try_map(&variants, |&(mask, mirror)| {
        Ok(TableRow {
            link: d.name.clone(),
            mask,
            mirror,
            polynomial: polynomial_of(cfg, &d.variant(mask, mirror))
                .map_err(|e| in_link(&d.name, e))?,
        })
    })
}

/// First variant in `(mask, mirror)` order whose polynomial equals `target`.
pub fn find_matching_variant(
    cfg: &TableConfig<'_>,
    d: &LinkDiagram,
    target: &TwoVarPolynomial,
) -> Result<Option<TableRow>> {
    Ok(orientation_variants(cfg, d)?
        .into_iter()
        .find(|row| &row.polynomial == target))
}

pub fn render_table(rows: &[TableRow]) -> String {
    let width = rows.iter().map(|r| r.link.len()).max().unwrap_or(0);
    rows.iter()
        .map(|r| format!("{:<width$}  {}\n", r.link, r.polynomial))
        .collect()
}
