//! Plain-text Cayley table format.
//!
//! Line 1 holds `n`; then `n` lines of `n` integers separated by single
//! spaces. Row `i`, column `j` is the product `i*j`. A single trailing
//! newline is accepted; anything else out of place is an error.

use super::Group;
use crate::error::{Error, Result};

impl Group {
    pub fn parse_table(text: &str) -> Result<Group> {
        let body = text.strip_suffix('\n').unwrap_or(text);
        let mut lines = body.split('\n');
        let first = lines.next().unwrap_or("");
        let n = parse_uint(first, 1, 1)?;
        if n == 0 {
            return Err(Error::Parse { line: 1, col: 1, msg: "order must be positive".into() });
        }
        let mut rows = Vec::with_capacity(n);
        for (i, line) in lines.enumerate() {
            let lineno = i + 2;
            if rows.len() == n {
                return Err(Error::Parse { line: lineno, col: 1, msg: "unexpected extra line".into() });
            }
            let mut row = Vec::with_capacity(n);
            let mut col = 1;
            for tok in line.split(' ') {
                let v = parse_uint(tok, lineno, col)?;
                if v >= n {
                    return Err(Error::Parse { line: lineno, col, msg: format!("entry {v} is outside 0..{n}") });
                }
                row.push(v);
                col += tok.len() + 1;
            }
            if row.len() != n {
                return Err(Error::Parse {
                    line: lineno,
                    col: line.len() + 1,
                    msg: format!("expected {n} entries, found {}", row.len()),
                });
            }
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::Parse {
                line: rows.len() + 2,
                col: 1,
                msg: format!("expected {n} rows, found {}", rows.len()),
            });
        }
        Group::from_table(&rows)
    }

    pub fn to_table_text(&self) -> String {
        let n = self.order();
        let mut s = String::with_capacity(n * n * 4 + 8);
        s.push_str(&n.to_string());
        s.push('\n');
        for a in 0..n {
            for (j, v) in self.row(a).iter().enumerate() {
                if j > 0 {
                    s.push(' ');
                }
                s.push_str(&v.to_string());
            }
            s.push('\n');
        }
        s
    }
}

fn parse_uint(tok: &str, line: usize, col: usize) -> Result<usize> {
    if tok.is_empty() {
        return Err(Error::Parse { line, col, msg: "expected an integer".into() });
    }
    if let Some(off) = tok.find(|c: char| !c.is_ascii_digit()) {
        return Err(Error::Parse {
            line,
            col: col + off,
            msg: format!("unexpected character {:?}", tok[off..].chars().next().unwrap()),
        });
    }
    tok.parse::<usize>().map_err(|e| Error::Parse { line, col, msg: e.to_string() })
}
