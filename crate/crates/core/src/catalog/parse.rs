//! Text formats for permutation and matrix groups.
//!
//! Permutation groups: `degree n` then one `gen` per line, either in cycle
//! notation `(1,2,3)(4,5)` or as a 1-based image list `[2,1,3]`. Matrix
//! groups: `dim n`, `prime p`, then `gen [[row],[row],...]`. Both accept
//! `#` comments and an optional `order N` line checked on load.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::matgroup::{MatGroup, Matrix};
use crate::perm::Permutation;
use crate::permgroup::PermGroup;

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-empty lines with comments stripped, as `(1-based line, keyword, rest)`.
fn directives(text: &str) -> impl Iterator<Item = (usize, &str, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            return None;
        }
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        Some((i + 1, kw, rest.trim()))
    })
}

fn parse_uint<T: std::str::FromStr>(line: usize, s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| err(line, format!("expected {}, got {:?}", what, s)))
}

fn parse_list(line: usize, s: &str) -> Result<Vec<u64>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| err(line, format!("expected [..], got {:?}", s)))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| parse_uint(line, x, "an integer"))
        .collect()
}

fn parse_permutation(line: usize, degree: usize, s: &str) -> Result<Permutation> {
    if s.starts_with('[') {
        let images = parse_list(line, s)?;
        if images.len() != degree {
            return Err(err(
                line,
                format!(
                    "image list has {} entries, degree is {}",
                    images.len(),
                    degree
                ),
            ));
        }
        if images.iter().any(|&x| x == 0 || x > degree as u64) {
            return Err(err(line, "image out of range 1..degree"));
        }
        return Permutation::from_images(images.iter().map(|&x| x as u32 - 1).collect())
            .map_err(|e| err(line, e.to_string()));
    }
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| err(line, format!("expected '(' at {:?}", rest)))?;
        let close = body.find(')').ok_or_else(|| err(line, "unclosed cycle"))?;
        let pts = &body[..close];
        if !pts.trim().is_empty() {
            let cyc = pts
                .split(',')
                .map(|x| {
                    let v: u32 = parse_uint(line, x, "a point")?;
                    if v == 0 || v as usize > degree {
                        return Err(err(line, format!("point {} out of range 1..{}", v, degree)));
                    }
                    Ok(v - 1)
                })
                .collect::<Result<Vec<u32>>>()?;
            cycles.push(cyc);
        }
        rest = body[close + 1..].trim_start();
    }
    Permutation::from_cycles(degree, &cycles).map_err(|e| err(line, e.to_string()))
}

fn check_expected(name: &str, expected: Option<BigUint>, actual: BigUint) -> Result<()> {
    match expected {
        Some(e) if e != actual => Err(Error::OrderMismatch {
            name: name.to_string(),
            expected: e.to_string(),
            actual: actual.to_string(),
        }),
        _ => Ok(()),
    }
}

pub fn parse_perm_group(text: &str) -> Result<PermGroup> {
    let mut degree = None;
    let mut order = None;
    let mut gens = Vec::new();
    for (line, kw, rest) in directives(text) {
        match kw {
            "degree" => degree = Some(parse_uint::<usize>(line, rest, "a degree")?),
            "order" => order = Some(parse_uint::<BigUint>(line, rest, "an order")?),
            "gen" => {
                let d = degree.ok_or_else(|| err(line, "gen before degree"))?;
                gens.push(parse_permutation(line, d, rest)?);
            }
            _ => return Err(err(line, format!("unknown directive {:?}", kw))),
        }
    }
    let degree = degree.ok_or_else(|| err(0, "missing degree line"))?;
    let g = PermGroup::new(degree, gens)?;
    check_expected("permutation group", order, g.order())?;
    Ok(g)
}

fn parse_matrix(line: usize, dim: usize, s: &str) -> Result<Matrix> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| err(line, "expected [[..],..]"))?;
    let mut rows = Vec::new();
    let mut rest = inner.trim();
    while !rest.is_empty() {
        let close = rest.find(']').ok_or_else(|| err(line, "unclosed row"))?;
        rows.push(parse_list(line, &rest[..=close])?);
        rest = rest[close + 1..]
            .trim_start()
            .trim_start_matches(',')
            .trim_start();
    }
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(err(line, format!("matrix is not {}x{}", dim, dim)));
    }
    Ok(rows)
}

pub fn parse_mat_group(text: &str) -> Result<MatGroup> {
    let (mut dim, mut prime, mut order) = (None, None, None);
    let mut gens = Vec::new();
    for (line, kw, rest) in directives(text) {
        match kw {
            "dim" => dim = Some(parse_uint::<usize>(line, rest, "a dimension")?),
            "prime" => prime = Some(parse_uint::<u64>(line, rest, "a prime")?),
            "order" => order = Some(parse_uint::<BigUint>(line, rest, "an order")?),
            "gen" => {
                let d = dim.ok_or_else(|| err(line, "gen before dim"))?;
                let p = prime.ok_or_else(|| err(line, "gen before prime"))?;
                let m = parse_matrix(line, d, rest)?;
                if m.iter().flatten().any(|&x| x >= p) {
                    return Err(err(line, format!("entry outside 0..{}", p - 1)));
                }
                if crate::gf::PrimeField::new(p).determinant(&m) == 0 {
                    return Err(err(line, format!("matrix is singular mod {}", p)));
                }
                gens.push(m);
            }
            _ => return Err(err(line, format!("unknown directive {:?}", kw))),
        }
    }
    let dim = dim.ok_or_else(|| err(0, "missing dim line"))?;
    let prime = prime.ok_or_else(|| err(0, "missing prime line"))?;
    let g = MatGroup::new(dim, prime, gens)?;
    if order.is_some() {
        check_expected("matrix group", order, g.order()?)?;
    }
    Ok(g)
}

/// Canonical text form (image lists), accepted by [`parse_perm_group`].
pub fn write_perm_group(g: &PermGroup) -> String {
    let mut out = format!("degree {}\n", g.degree());
    for s in g.generators() {
        let imgs: Vec<String> = s.images().iter().map(|x| (x + 1).to_string()).collect();
        out.push_str(&format!("gen [{}]\n", imgs.join(",")));
    }
    out
}

pub fn write_mat_group(g: &MatGroup) -> String {
    let mut out = format!("dim {}\nprime {}\n", g.dim(), g.prime());
    for m in g.generators() {
        let rows: Vec<String> = m
            .iter()
            .map(|r| {
                format!(
                    "[{}]",
                    r.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        out.push_str(&format!("gen [{}]\n", rows.join(",")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_formats() {
        let s3 = parse_perm_group("degree 3\ngen (1,2)\ngen (1,2,3)\n").unwrap();
        assert_eq!(s3.order_u64(), Some(6));
        let c2 = parse_perm_group("# comment\ndegree 4\ngen [2,1,4,3]  # trailing\n").unwrap();
        assert_eq!(c2.order_u64(), Some(2));
        let id = parse_perm_group("degree 2\ngen ()\n").unwrap();
        assert!(id.is_trivial());
    }

    #[test]
    fn perm_errors_carry_line_numbers() {
        let e = parse_perm_group("degree 3\n\ngen [1,1,2]\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = parse_perm_group("degree 3\ngen (1,4)\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_perm_group("gen (1,2)\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        let e = parse_perm_group("degree 3\nfoo\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        assert!(matches!(
            parse_perm_group("degree 3\norder 7\ngen (1,2)\n"),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn matrix_format() {
        let g = parse_mat_group("dim 2\nprime 3\ngen [[1,1],[0,1]]\n").unwrap();
        assert_eq!(g.order().unwrap(), BigUint::from(3u32));
        let e = parse_mat_group("dim 2\nprime 3\ngen [[1,1],[1,1]]\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        let e = parse_mat_group("dim 2\nprime 3\ngen [[1,1,0],[0,1]]\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        let e = parse_mat_group("dim 2\nprime 3\ngen [[1,3],[0,1]]\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn round_trip() {
        let g = parse_perm_group("degree 5\ngen (1,2,3,4,5)\ngen (1,2)\n").unwrap();
        let again = parse_perm_group(&write_perm_group(&g)).unwrap();
        assert_eq!(again.generators(), g.generators());
        let m = parse_mat_group("dim 2\nprime 5\ngen [[2,0],[0,3]]\ngen [[0,1],[4,0]]\n").unwrap();
        let again = parse_mat_group(&write_mat_group(&m)).unwrap();
        assert_eq!(again.generators(), m.generators());
    }
}
