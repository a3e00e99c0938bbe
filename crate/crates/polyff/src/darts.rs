//! Text format for dart permutations:
//!
//! ```text
//! darts 4
//! v: (0 1 2 3)
//! e: (0 2)(1 3)
//! f: (0 3 2 1)
//! ```
//!
//! Cycles are listed by smallest element, each starting at that element.
//! Fixed points are written as one-cycles so every dart appears once.

use std::fmt::Write;

use polyff_core::DartModel;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DartFormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: &'static str },
    #[error("{0} line does not describe a permutation of the darts")]
    NotAPermutation(char),
}

fn write_cycles(out: &mut String, perm: &[u32]) {
    let mut seen = vec![false; perm.len()];
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        out.push('(');
        let mut d = start;
        let mut first = true;
        while !seen[d] {
            seen[d] = true;
            if !first {
                out.push(' ');
            }
            first = false;
            let _ = write!(out, "{d}");
            d = perm[d] as usize;
        }
        out.push(')');
    }
}

pub fn to_text(model: &DartModel) -> String {
    let mut out = format!("darts {}\n", model.degree());
    for (name, perm) in [
        ('v', &model.perm_v),
        ('e', &model.perm_e),
        ('f', &model.perm_f),
    ] {
        out.push(name);
        out.push_str(": ");
        write_cycles(&mut out, perm);
        out.push('\n');
    }
    out
}

fn parse_cycles(
    text: &str,
    n: usize,
    name: char,
    line: usize,
) -> Result<Vec<u32>, DartFormatError> {
    const UNSET: u32 = u32::MAX;
    let syntax = |msg| DartFormatError::Syntax { line, msg };
    let mut perm = vec![UNSET; n];
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or(syntax("expected `(`"))?;
        let close = body.find(')').ok_or(syntax("unclosed cycle"))?;
        let cycle: Vec<usize> = body[..close]
            .split(' ')
            .map(|s| s.parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| syntax("bad dart index"))?;
        for (i, &d) in cycle.iter().enumerate() {
            let next = cycle[(i + 1) % cycle.len()];
            if d >= n || next >= n || perm[d] != UNSET {
                return Err(DartFormatError::NotAPermutation(name));
            }
            perm[d] = next as u32;
        }
        rest = &body[close + 1..];
    }
    if perm.contains(&UNSET) {
        return Err(DartFormatError::NotAPermutation(name));
    }
    Ok(perm)
}

pub fn from_text(text: &str) -> Result<DartModel, DartFormatError> {
    let mut lines = text.lines();
    let header = lines.next().ok_or(DartFormatError::Syntax {
        line: 1,
        msg: "empty input",
    })?;
    let n: usize = header
        .strip_prefix("darts ")
        .and_then(|s| s.parse().ok())
        .ok_or(DartFormatError::Syntax {
            line: 1,
            msg: "expected `darts <n>`",
        })?;
    let mut perms = Vec::with_capacity(3);
    for (i, name) in ['v', 'e', 'f'].into_iter().enumerate() {
        let line = i + 2;
        let l = lines.next().ok_or(DartFormatError::Syntax {
            line,
            msg: "missing line",
        })?;
        let body = l
            .strip_prefix(name)
            .and_then(|s| s.strip_prefix(": "))
            .ok_or(DartFormatError::Syntax {
                line,
                msg: "expected `v: `, `e: ` or `f: `",
            })?;
        perms.push(parse_cycles(body, n, name, line)?);
    }
    if lines.any(|l| !l.trim().is_empty()) {
        return Err(DartFormatError::Syntax {
            line: 5,
            msg: "trailing content",
        });
    }
    let perm_f = perms.pop().unwrap_or_default();
    let perm_e = perms.pop().unwrap_or_default();
    let perm_v = perms.pop().unwrap_or_default();
    Ok(DartModel {
        perm_v,
        perm_e,
        perm_f,
    })
}
