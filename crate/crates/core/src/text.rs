//! Line helpers shared by the text formats.

use std::str::FromStr;

use crate::error::{Error, Result};

/// Non-blank lines with `#` comments stripped, paired with 1-based line
/// numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = match line.find('#') {
            Some(p) => &line[..p],
            None => line,
        }
        .trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub(crate) fn parse_num<T: FromStr>(token: &str, line: usize) -> Result<T> {
    token.parse().map_err(|_| Error::Syntax {
        line,
        message: format!("expected a non-negative integer, found {token:?}"),
    })
}
