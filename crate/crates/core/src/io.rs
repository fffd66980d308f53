//! Plain-text matrix files: one row per line, whitespace-separated
//! rationals. Blank lines and lines starting with `#` are skipped.

use crate::error::{Error, Result};
use crate::exact::{parse_rational, ExactMatrix};

pub fn parse_matrix(text: &str) -> Result<ExactMatrix> {
    let rows = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().map(parse_rational).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Err(Error::Parse("matrix file has no rows".into()));
    }
    ExactMatrix::from_rows(rows).map_err(|_| Error::Parse("rows have different lengths".into()))
}

pub fn format_matrix(m: &ExactMatrix) -> String {
    m.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;

    #[test]
    fn parses_rows() {
        let m = parse_matrix("# flag\n1 0 0\n3 1/2 0\n\n1 1 1\n").unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 3));
        assert_eq!(m.get(1, 1), &frac(1, 2));
        assert!(parse_matrix("1 2\n3").is_err());
        assert!(parse_matrix("1 x").is_err());
        assert!(parse_matrix("\n").is_err());
    }
}
