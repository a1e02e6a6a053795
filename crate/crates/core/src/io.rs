//! Plain-text formats.
//!
//! A scalar is a `+`-separated list of terms `(num,den,exp)` meaning
//! `sum num/den zeta_m^exp`, with `m` the file's conductor. Integers and
//! fractions (`-1`, `3/2`) are accepted as shorthand, and `m:terms` overrides
//! the conductor for one scalar.
//!
//! Braided-pair files are line oriented; `#` starts a comment.
//!
//! ```text
//! kind diagonal
//! conductor 4
//! dim 2
//! (-1,1,0) (1,1,1)
//! (-1,1,0) (1,1,1)
//! ```
//!
//! `kind matrix` takes `dim^2` rows of `dim^2` scalars (row = output index).
//! `kind v3` takes `q <scalar>`; `kind v4` takes `q` and `alpha`; `kind two_by_two`
//! takes `q1 q2 eta1 eta2 beta1 beta2`. `kind cocycle` takes `size n`, a `table`
//! line followed by `n` rows of the crossed set, `modulus m`, and an `exponents`
//! line followed by `n` rows.

use malachite_base::num::basic::traits::Zero;
use malachite_nz::integer::Integer;
use malachite_q::Rational;

use crate::bpair::{self, BraidedPair};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::quandle::{Cocycle2, CrossedSet};
use crate::scalars::{self, Cyc};
use crate::tensor::TensorVec;

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_int(s: &str) -> Result<Integer> {
    s.trim().parse::<Integer>().map_err(|_| perr(format!("bad integer `{s}`")))
}

fn parse_rational(s: &str) -> Result<Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d == Integer::ZERO {
                return Err(perr("zero denominator"));
            }
            Ok(Rational::from_integers(parse_int(n)?, d))
        }
        None => Ok(Rational::from(parse_int(s)?)),
    }
}

/// Parses one scalar over conductor `m`.
pub fn parse_scalar(s: &str, m: u32) -> Result<Cyc> {
    let s = s.trim();
    if s.is_empty() {
        return Err(perr("empty scalar"));
    }
    if let Some((c, rest)) = s.split_once(':') {
        let m: u32 = c.trim().parse().map_err(|_| perr(format!("bad conductor `{c}`")))?;
        if m == 0 {
            return Err(perr("conductor must be positive"));
        }
        return parse_scalar(rest, m);
    }
    if !s.starts_with('(') {
        return Ok(Cyc::from_rational(parse_rational(s)?));
    }
    let mut terms = Vec::new();
    for part in s.split('+') {
        let part = part.trim();
        let inner = part
            .strip_prefix('(')
            .and_then(|p| p.strip_suffix(')'))
            .ok_or_else(|| perr(format!("bad term `{part}`")))?;
        let fields: Vec<&str> = inner.split(',').collect();
        if fields.len() != 3 {
            return Err(perr(format!("term `{part}` needs (num,den,exp)")));
        }
        let num = parse_int(fields[0])?;
        let den = parse_int(fields[1])?;
        if den == Integer::ZERO {
            return Err(perr("zero denominator"));
        }
        let exp: i64 = fields[2].trim().parse().map_err(|_| perr(format!("bad exponent `{}`", fields[2])))?;
        terms.push((Rational::from_integers(num, den), exp));
    }
    Ok(Cyc::from_terms(m, terms))
}

/// Writes `x` over conductor `m` (which must be a multiple of its conductor).
pub fn format_scalar(x: &Cyc, m: u32) -> String {
    scalars::format_terms(x, m)
}

/// Lines with comments and blanks removed.
fn content_lines(text: &str) -> Vec<&str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect()
}

fn scalar_row(line: &str, m: u32, len: usize) -> Result<Vec<Cyc>> {
    let row: Vec<Cyc> = line.split_whitespace().map(|t| parse_scalar(t, m)).collect::<Result<_>>()?;
    if row.len() != len {
        return Err(perr(format!("expected {len} entries, got {}: `{line}`", row.len())));
    }
    Ok(row)
}

fn usize_row(line: &str, len: usize) -> Result<Vec<usize>> {
    let row: Vec<usize> = line
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| perr(format!("bad index `{t}`"))))
        .collect::<Result<_>>()?;
    if row.len() != len {
        return Err(perr(format!("expected {len} entries, got {}: `{line}`", row.len())));
    }
    Ok(row)
}

fn u32_row(line: &str, len: usize) -> Result<Vec<u32>> {
    usize_row(line, len).map(|r| r.into_iter().map(|x| x as u32).collect())
}

struct Header<'a> {
    kind: Option<String>,
    conductor: u32,
    dim: Option<usize>,
    params: Vec<(String, &'a str)>,
    rest: Vec<&'a str>,
}

fn header<'a>(lines: &[&'a str]) -> Result<Header<'a>> {
    let mut h = Header { kind: None, conductor: 1, dim: None, params: Vec::new(), rest: Vec::new() };
    for (k, line) in lines.iter().enumerate() {
        let (key, value) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let value = value.trim();
        match key {
            "kind" => h.kind = Some(value.to_string()),
            "conductor" => h.conductor = value.parse().map_err(|_| perr(format!("bad conductor `{value}`")))?,
            "dim" => h.dim = Some(value.parse().map_err(|_| perr(format!("bad dim `{value}`")))?),
            _ if key.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) => {
                h.params.push((key.to_string(), value));
            }
            _ => {
                h.rest = lines[k..].to_vec();
                break;
            }
        }
    }
    if h.conductor == 0 {
        return Err(perr("conductor must be positive"));
    }
    Ok(h)
}

fn param<'a>(h: &Header<'a>, name: &str) -> Result<&'a str> {
    h.params.iter().find(|(k, _)| k == name).map(|(_, v)| *v).ok_or_else(|| perr(format!("missing `{name}`")))
}

fn scalar_param(h: &Header<'_>, name: &str) -> Result<Cyc> {
    parse_scalar(param(h, name)?, h.conductor)
}

/// The `kind` declared in a braided-pair file.
pub fn pair_file_kind(text: &str) -> Option<&str> {
    content_lines(text).into_iter().find_map(|l| l.strip_prefix("kind").map(str::trim))
}

/// Parses a braided-pair file. Mathematical validation errors (braid equation,
/// invertibility) are reported as non-parse errors.
pub fn parse_braided_pair(text: &str) -> Result<BraidedPair> {
    let lines = content_lines(text);
    let h = header(&lines)?;
    let kind = h.kind.clone().ok_or_else(|| perr("missing `kind`"))?;
    let m = h.conductor;
    match kind.as_str() {
        "diagonal" => {
            let d = h.dim.unwrap_or(h.rest.len());
            if h.rest.len() != d {
                return Err(perr(format!("diagonal braiding needs {d} rows")));
            }
            let q: Vec<Vec<Cyc>> = h.rest.iter().map(|l| scalar_row(l, m, d)).collect::<Result<_>>()?;
            bpair::diagonal(&q)
        }
        "matrix" => {
            let d = h.dim.ok_or_else(|| perr("matrix braiding needs `dim`"))?;
            if h.rest.len() != d * d {
                return Err(perr(format!("matrix braiding needs {} rows", d * d)));
            }
            let q: Vec<Vec<Cyc>> = h.rest.iter().map(|l| scalar_row(l, m, d * d)).collect::<Result<_>>()?;
            BraidedPair::from_matrix(d, &q)
        }
        "v3" => bpair::v3(&scalar_param(&h, "q")?),
        "v4" => bpair::v4(&scalar_param(&h, "q")?, &scalar_param(&h, "alpha")?),
        "two_by_two" => {
            let p: Vec<Cyc> = ["q1", "q2", "eta1", "eta2", "beta1", "beta2"]
                .iter()
                .map(|k| scalar_param(&h, k))
                .collect::<Result<_>>()?;
            bpair::two_by_two(&p[0], &p[1], &p[2], &p[3], &p[4], &p[5])
        }
        "cocycle" => {
            let (x, f) = parse_cocycle_sections(&lines)?;
            bpair::from_cocycle(&x, &f)
        }
        other => Err(perr(format!("unknown kind `{other}`"))),
    }
}

fn parse_cocycle_sections(lines: &[&str]) -> Result<(CrossedSet, Cocycle2)> {
    let find = |key: &str| lines.iter().position(|l| l.split_whitespace().next() == Some(key));
    let size_line = find("size").ok_or_else(|| perr("missing `size`"))?;
    let n: usize = lines[size_line]["size".len()..].trim().parse().map_err(|_| perr("bad size"))?;
    let t = find("table").ok_or_else(|| perr("missing `table`"))?;
    let e = find("exponents").ok_or_else(|| perr("missing `exponents`"))?;
    let ml = find("modulus").ok_or_else(|| perr("missing `modulus`"))?;
    let modulus: u32 = lines[ml]["modulus".len()..].trim().parse().map_err(|_| perr("bad modulus"))?;
    let rows = |start: usize| -> Result<Vec<&str>> {
        lines.get(start + 1..start + 1 + n).map(|r| r.to_vec()).ok_or_else(|| perr("truncated section"))
    };
    let table: Vec<Vec<usize>> = rows(t)?.iter().map(|l| usize_row(l, n)).collect::<Result<_>>()?;
    let exps: Vec<Vec<u32>> = rows(e)?.iter().map(|l| u32_row(l, n)).collect::<Result<_>>()?;
    Ok((CrossedSet::new(table)?, Cocycle2::new(modulus, exps)?))
}

/// Writes `bp` as a `kind matrix` file.
pub fn format_braided_pair(bp: &BraidedPair) -> String {
    let d = bp.dim();
    let m = bp.conductor();
    let mut out = format!("kind matrix\nconductor {m}\ndim {d}\n");
    for row in 0..d * d {
        let entries: Vec<String> = (0..d * d).map(|col| format_scalar(&bp.entry(row, col), m)).collect();
        out.push_str(&entries.join(" "));
        out.push('\n');
    }
    out
}

/// `(n,d,e)*x0*x1 + ...` over conductor `m`, terms in word order.
pub fn format_tensor(v: &TensorVec, m: u32) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    v.terms()
        .map(|(w, c)| {
            let word: Vec<String> = w.iter().map(|i| format!("x{i}")).collect();
            if word.is_empty() {
                format_scalar(c, m)
            } else {
                format!("{}*{}", format_scalar(c, m), word.join("*"))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Size `n`, then `n` rows of `i |> j`.
pub fn parse_crossed_set(text: &str) -> Result<CrossedSet> {
    let lines = content_lines(text);
    let n: usize = lines.first().ok_or_else(|| perr("empty crossed set"))?.parse().map_err(|_| perr("bad size"))?;
    if lines.len() != n + 1 {
        return Err(perr(format!("expected {n} rows")));
    }
    let table = lines[1..].iter().map(|l| usize_row(l, n)).collect::<Result<_>>()?;
    CrossedSet::new(table)
}

pub fn format_crossed_set(x: &CrossedSet) -> String {
    let mut out = format!("{}\n", x.size());
    for row in x.table() {
        out.push_str(&row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
        out.push('\n');
    }
    out
}

/// Modulus `m`, then the exponent table.
pub fn parse_cochain(text: &str) -> Result<Cocycle2> {
    let lines = content_lines(text);
    let m: u32 = lines.first().ok_or_else(|| perr("empty cochain"))?.parse().map_err(|_| perr("bad modulus"))?;
    let n = lines.len() - 1;
    let exps = lines[1..].iter().map(|l| u32_row(l, n)).collect::<Result<_>>()?;
    Cocycle2::new(m, exps)
}

pub fn format_cochain(f: &Cocycle2) -> String {
    let mut out = format!("{}\n", f.modulus());
    for row in f.exponents() {
        out.push_str(&row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
        out.push('\n');
    }
    out
}

/// Order `n`, then the multiplication table.
pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    let lines = content_lines(text);
    let n: usize = lines.first().ok_or_else(|| perr("empty group"))?.parse().map_err(|_| perr("bad order"))?;
    if lines.len() != n + 1 {
        return Err(perr(format!("expected {n} rows")));
    }
    let table = lines[1..].iter().map(|l| usize_row(l, n)).collect::<Result<_>>()?;
    FiniteGroup::from_table(table)
}
