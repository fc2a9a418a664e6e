//! The ideal file format: a `vars N` header declaring the ambient P^(N-1),
//! then one homogeneous polynomial per line. `#` starts a comment and blank
//! lines are ignored.

use nsbound::poly::{parse_polynomial, IdealPresentation, Polynomial};
use std::fmt;
use std::path::Path;

#[derive(Debug)]
pub enum IdealFileError {
    Io {
        path: String,
        err: std::io::Error,
    },
    MissingHeader {
        path: String,
    },
    BadHeader {
        path: String,
        line: usize,
        msg: String,
    },
    BadPolynomial {
        path: String,
        line: usize,
        msg: String,
    },
    Empty {
        path: String,
    },
}

impl fmt::Display for IdealFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealFileError::Io { path, err } => write!(f, "{path}: {err}"),
            IdealFileError::MissingHeader { path } => {
                write!(f, "{path}: expected a `vars N` header line")
            }
            IdealFileError::BadHeader { path, line, msg } => {
                write!(f, "{path}:{line}: {msg}")
            }
            IdealFileError::BadPolynomial { path, line, msg } => {
                write!(f, "{path}:{line}: {msg}")
            }
            IdealFileError::Empty { path } => write!(f, "{path}: no generators"),
        }
    }
}

impl std::error::Error for IdealFileError {}

pub fn read_ideal_file(path: &Path) -> Result<IdealPresentation, IdealFileError> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|err| IdealFileError::Io {
        path: display.clone(),
        err,
    })?;
    parse_ideal_text(&text, &display)
}

pub fn parse_ideal_text(text: &str, path: &str) -> Result<IdealPresentation, IdealFileError> {
    let mut r: Option<usize> = None;
    let mut generators: Vec<Polynomial> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        match r {
            None => {
                let rest = line
                    .strip_prefix("vars")
                    .ok_or_else(|| IdealFileError::BadHeader {
                        path: path.to_string(),
                        line: line_no,
                        msg: format!("expected `vars N`, found `{line}`"),
                    })?;
                let n: usize = rest.trim().parse().map_err(|_| IdealFileError::BadHeader {
                    path: path.to_string(),
                    line: line_no,
                    msg: format!(
                        "expected a variable count after `vars`, found `{}`",
                        rest.trim()
                    ),
                })?;
                if n < 2 {
                    return Err(IdealFileError::BadHeader {
                        path: path.to_string(),
                        line: line_no,
                        msg: format!("need at least 2 variables (ambient P^1), got {n}"),
                    });
                }
                r = Some(n - 1);
            }
            Some(r) => {
                let poly =
                    parse_polynomial(line, r).map_err(|e| IdealFileError::BadPolynomial {
                        path: path.to_string(),
                        line: line_no,
                        msg: e.to_string(),
                    })?;
                if poly.is_zero() {
                    return Err(IdealFileError::BadPolynomial {
                        path: path.to_string(),
                        line: line_no,
                        msg: "generator is zero".to_string(),
                    });
                }
                if poly.homogeneous_degree().is_none() {
                    return Err(IdealFileError::BadPolynomial {
                        path: path.to_string(),
                        line: line_no,
                        msg: format!("generator is not homogeneous: {poly}"),
                    });
                }
                generators.push(poly);
            }
        }
    }
    let r = r.ok_or_else(|| IdealFileError::MissingHeader {
        path: path.to_string(),
    })?;
    if generators.is_empty() {
        return Err(IdealFileError::Empty {
            path: path.to_string(),
        });
    }
    IdealPresentation::new(r, generators).map_err(|e| IdealFileError::BadPolynomial {
        path: path.to_string(),
        line: 0,
        msg: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_quadric_file() {
        let ideal = parse_ideal_text("# quadric\nvars 4\nx0*x3 - x1*x2\n", "test").unwrap();
        assert_eq!(ideal.r(), 3);
        assert_eq!(ideal.generators().len(), 1);
        assert_eq!(ideal.max_degree(), 2);
    }

    #[test]
    fn rejects_inhomogeneous_line_with_number() {
        let err = parse_ideal_text("vars 3\nx0^2 + x1\n", "test").unwrap_err();
        match err {
            IdealFileError::BadPolynomial { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn rejects_missing_header() {
        assert!(matches!(
            parse_ideal_text("x0*x3 - x1*x2\n", "test"),
            Err(IdealFileError::BadHeader { .. })
        ));
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let ideal = parse_ideal_text(
            "\n# leading comment\nvars 4\n\nx0x2 - x1^2 # inline\nx0x3 - x1x2\nx1x3 - x2^2\n",
            "test",
        )
        .unwrap();
        assert_eq!(ideal.generators().len(), 3);
    }
}
