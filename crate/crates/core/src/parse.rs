//! Input formats: generator text, ideal JSON, graph edge lists, facet JSON.

use std::collections::BTreeSet;

use serde::Deserialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};
use crate::ring::{FieldSpec, RingDescriptor};
use crate::varset::{VarSet, MAX_VARS};

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

/// One factor `name^e` of a generator.
#[derive(Debug)]
struct Factor {
    name: String,
    exp: u32,
}

/// Splits generator text into factors. With `vars` given, names are matched
/// greedily against that list; otherwise a name is a letter followed by
/// digits and `_digits` groups, so `x1x2` and `xy` both split.
fn factors(term: &str, vars: Option<&[String]>) -> Result<Vec<Factor>> {
    let chars: Vec<char> = term.chars().filter(|c| !c.is_whitespace()).collect();
    let squeezed: String = chars.iter().collect();
    if squeezed.starts_with('*') || squeezed.ends_with('*') || squeezed.contains("**") {
        return Err(malformed(format!("dangling '*' in '{term}'")));
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        if chars[i] == '*' {
            i += 1;
            continue;
        }
        let rest: String = chars[i..].iter().collect();
        let name = match vars {
            Some(vs) => vs
                .iter()
                .filter(|v| rest.starts_with(v.as_str()))
                .max_by_key(|v| v.len())
                .cloned()
                .ok_or_else(|| malformed(format!("unknown variable at '{rest}'")))?,
            None => {
                if !chars[i].is_ascii_alphabetic() {
                    return Err(malformed(format!("expected a variable at '{rest}'")));
                }
                let mut j = i + 1;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                while j + 1 < chars.len() && chars[j] == '_' && chars[j + 1].is_ascii_digit() {
                    j += 1;
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                }
                chars[i..j].iter().collect()
            }
        };
        i += name.chars().count();
        let mut exp = 1u32;
        if i < chars.len() && chars[i] == '^' {
            let start = i + 1;
            let mut j = start;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            let digits: String = chars[start..j].iter().collect();
            exp = digits.parse().map_err(|_| malformed(format!("bad exponent in '{term}'")))?;
            i = j;
        }
        out.push(Factor { name, exp });
    }
    if out.is_empty() {
        return Err(malformed(format!("empty generator in '{term}'")));
    }
    Ok(out)
}

fn split_name(name: &str) -> (&str, Option<u64>) {
    let cut = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
    let (prefix, digits) = name.split_at(cut);
    (prefix, digits.parse().ok())
}

/// Ring inferred from the names used: `p1..pN` when every name is one prefix
/// followed by an index, otherwise the distinct names in natural order.
fn infer_names(used: &BTreeSet<String>) -> Vec<String> {
    let parts: Vec<(&str, Option<u64>)> = used.iter().map(|s| split_name(s)).collect();
    if let Some(&(p0, _)) = parts.first() {
        if parts.iter().all(|&(p, k)| p == p0 && k.is_some_and(|k| k >= 1) && !used.iter().any(|s| s.contains('_'))) {
            let max = parts.iter().filter_map(|&(_, k)| k).max().unwrap_or(0);
            if max as usize <= MAX_VARS {
                return (1..=max).map(|k| format!("{p0}{k}")).collect();
            }
        }
    }
    let mut names: Vec<String> = used.iter().cloned().collect();
    names.sort_by(|a, b| {
        let (pa, ka) = split_name(a);
        let (pb, kb) = split_name(b);
        pa.cmp(pb).then(ka.cmp(&kb)).then(a.cmp(b))
    });
    names
}

fn split_gens(text: &str) -> Vec<&str> {
    text.split([',', ';', '\n']).map(str::trim).filter(|s| !s.is_empty()).collect()
}

/// Parses `x1*x2^2, x3x4` style generator lists. `0` (or nothing) is the
/// zero ideal and `1` the unit ideal; both need `vars` to fix the ring.
pub fn parse_ideal_text(text: &str, vars: Option<&[String]>, field: FieldSpec) -> Result<MonomialIdeal> {
    let text = text.trim().trim_start_matches('(').trim_end_matches(')');
    let terms = split_gens(text);
    let special = |t: &str| t == "0" || t == "1";
    let mut parsed: Vec<Option<Vec<Factor>>> = Vec::new();
    for t in &terms {
        parsed.push(if special(t) { None } else { Some(factors(t, vars)?) });
    }
    let ring = match vars {
        Some(vs) => RingDescriptor::new(vs.to_vec(), field)?,
        None => {
            let used: BTreeSet<String> = parsed.iter().flatten().flatten().map(|f| f.name.clone()).collect();
            if used.is_empty() {
                return Err(malformed("cannot infer the ring from constant generators; pass the variable names"));
            }
            RingDescriptor::new(infer_names(&used), field)?
        }
    };
    let n = ring.nvars();
    let mut gens = Vec::new();
    for (t, p) in terms.iter().zip(parsed) {
        match p {
            None if *t == "1" => return Ok(MonomialIdeal::unit(ring)),
            None => {}
            Some(fs) => {
                let mut e = vec![0u32; n];
                for f in fs {
                    let k = ring.index_of(&f.name).ok_or_else(|| malformed(format!("unknown variable '{}'", f.name)))?;
                    e[k] = e[k].checked_add(f.exp).ok_or_else(|| malformed("exponent overflow"))?;
                }
                gens.push(Monomial::new(e));
            }
        }
    }
    MonomialIdeal::new(ring, gens)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealJson {
    vars: Option<Vec<String>>,
    gens: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FacetJson {
    vertices: usize,
    facets: Vec<Vec<usize>>,
}

/// `{"vars": [...], "gens": ["x1*x2", ...]}`; `vars` may be omitted.
pub fn parse_ideal_json(text: &str, field: FieldSpec) -> Result<MonomialIdeal> {
    let j: IdealJson = serde_json::from_str(text).map_err(|e| malformed(format!("ideal JSON: {e}")))?;
    parse_ideal_text(&j.gens.join(","), j.vars.as_deref(), field)
}

/// `{"vertices": n, "facets": [[1,2],[2,3]]}` with 1-based vertices; yields
/// the Stanley–Reisner ideal.
pub fn parse_facet_json(text: &str, field: FieldSpec) -> Result<MonomialIdeal> {
    let j: FacetJson = serde_json::from_str(text).map_err(|e| malformed(format!("facet JSON: {e}")))?;
    check_vertex_count(j.vertices)?;
    let faces = j
        .facets
        .iter()
        .map(|f| {
            f.iter().try_fold(VarSet::EMPTY, |s, &v| {
                if v == 0 || v > j.vertices {
                    Err(malformed(format!("vertex {v} outside 1..={}", j.vertices)))
                } else {
                    Ok(s.with(v - 1))
                }
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let cx = SimplicialComplex::from_facets(j.vertices, faces)?;
    cx.to_ideal(&RingDescriptor::standard(j.vertices, field)?)
}

fn check_vertex_count(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        return Err(malformed(format!("vertex count {n} outside 1..={MAX_VARS}")));
    }
    Ok(())
}

/// Simple graph on `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<(usize, usize)> = (1..=n).map(|i| (i.min(i % n + 1), i.max(i % n + 1))).collect();
        edges.sort_unstable();
        Graph { n, edges }
    }

    pub fn edge_ideal(&self, field: FieldSpec) -> Result<MonomialIdeal> {
        let ring = RingDescriptor::standard(self.n, field)?;
        let gens = self
            .edges
            .iter()
            .map(|&(a, b)| Monomial::from_support(self.n, VarSet::from_indices([a - 1, b - 1])))
            .collect();
        MonomialIdeal::new(ring, gens)
    }
}

/// `n=8; edges=1-2,2-3,...` or a bare `1-2,2-3,...` (then `n` is the largest
/// vertex).
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edge_text = None;
    for part in text.split([';', '\n']).map(str::trim).filter(|s| !s.is_empty()) {
        if let Some(v) = part.strip_prefix("n=") {
            n = Some(v.trim().parse::<usize>().map_err(|_| malformed(format!("bad vertex count '{v}'")))?);
        } else if let Some(e) = part.strip_prefix("edges=") {
            edge_text = Some(e.to_string());
        } else if edge_text.is_none() {
            edge_text = Some(part.to_string());
        } else {
            return Err(malformed(format!("unexpected edge-list section '{part}'")));
        }
    }
    let edge_text = edge_text.ok_or_else(|| malformed("edge list has no edges"))?;
    let mut edges = Vec::new();
    for e in edge_text.split([',', ' ']).map(str::trim).filter(|s| !s.is_empty()) {
        let (a, b) = e.split_once('-').ok_or_else(|| malformed(format!("bad edge '{e}'")))?;
        let a: usize = a.trim().parse().map_err(|_| malformed(format!("bad edge '{e}'")))?;
        let b: usize = b.trim().parse().map_err(|_| malformed(format!("bad edge '{e}'")))?;
        if a == 0 || b == 0 {
            return Err(malformed(format!("vertices are 1-based: '{e}'")));
        }
        if a == b {
            return Err(malformed(format!("loop '{e}'")));
        }
        edges.push((a.min(b), a.max(b)));
    }
    let max = edges.iter().map(|&(_, b)| b).max().unwrap_or(0);
    let n = n.unwrap_or(max);
    check_vertex_count(n)?;
    if max > n {
        return Err(malformed(format!("vertex {max} exceeds n={n}")));
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(Graph { n, edges })
}

/// Guesses the format of a file: JSON objects by key, edge lists by
/// `edges=`/`n=` or `a-b` tokens, generator text otherwise.
pub fn parse_any(text: &str, vars: Option<&[String]>, field: FieldSpec) -> Result<MonomialIdeal> {
    let t = text.trim();
    if t.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(t).map_err(|e| malformed(format!("JSON: {e}")))?;
        return if v.get("facets").is_some() { parse_facet_json(t, field) } else { parse_ideal_json(t, field) };
    }
    let looks_like_edges = t.contains("edges=")
        || t.starts_with("n=")
        || t.split([',', ';', ' ', '\n']).filter(|s| !s.trim().is_empty()).all(|s| {
            s.split_once('-').is_some_and(|(a, b)| a.trim().parse::<usize>().is_ok() && b.trim().parse::<usize>().is_ok())
        });
    if looks_like_edges {
        parse_edge_list(t)?.edge_ideal(field)
    } else {
        parse_ideal_text(t, vars, field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(i: &MonomialIdeal) -> Vec<String> {
        i.gen_strings()
    }

    #[test]
    fn implicit_and_explicit_products() {
        let i = parse_ideal_text("x1*x3, x1x4,x2 * x3,x2*x4", None, FieldSpec::Rationals).unwrap();
        assert_eq!(i.nvars(), 4);
        assert_eq!(gens(&i), ["x1*x3", "x1*x4", "x2*x3", "x2*x4"]);
        let j = parse_ideal_text("x^2, xy", None, FieldSpec::Rationals).unwrap();
        assert_eq!(j.ring().names(), ["x", "y"]);
        assert_eq!(gens(&j), ["x^2", "x*y"]);
    }

    #[test]
    fn indexed_names_fill_gaps() {
        let i = parse_ideal_text("x1*x3", None, FieldSpec::Rationals).unwrap();
        assert_eq!(i.ring().names(), ["x1", "x2", "x3"]);
    }

    #[test]
    fn explicit_vars_and_constants() {
        let vars: Vec<String> = ["a", "ab"].iter().map(|s| s.to_string()).collect();
        let i = parse_ideal_text("ab*a", Some(&vars), FieldSpec::Rationals).unwrap();
        assert_eq!(gens(&i), ["a*ab"]);
        assert!(parse_ideal_text("0", Some(&vars), FieldSpec::Rationals).unwrap().is_zero());
        assert!(parse_ideal_text("a, 1", Some(&vars), FieldSpec::Rationals).unwrap().is_unit());
        assert!(parse_ideal_text("0", None, FieldSpec::Rationals).is_err());
    }

    #[test]
    fn malformed_text() {
        for bad in ["x1*", "x^", "3x", "x1,,*"] {
            let e = parse_ideal_text(bad, None, FieldSpec::Rationals).unwrap_err();
            assert_eq!(e.exit_code(), 2, "{bad}");
        }
    }

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("n=8; edges=1-2,2-3,3-4,4-5,5-6,6-7,7-8,8-1").unwrap();
        assert_eq!(g, Graph::cycle(8));
        let g = parse_edge_list("1-2, 2-3").unwrap();
        assert_eq!(g.n, 3);
        assert!(parse_edge_list("n=2; edges=1-3").is_err());
        assert!(parse_edge_list("0-1").is_err());
    }

    #[test]
    fn facet_json_gives_sr_ideal() {
        let i = parse_facet_json(r#"{"vertices": 3, "facets": [[1,2],[2,3],[1,3]]}"#, FieldSpec::Rationals).unwrap();
        assert_eq!(gens(&i), ["x1*x2*x3"]);
        assert!(parse_facet_json(r#"{"vertices": 2, "facets": [[3]]}"#, FieldSpec::Rationals).is_err());
    }

    #[test]
    fn format_detection() {
        let f = FieldSpec::Rationals;
        let a = parse_any("1-2,2-3,3-1", None, f).unwrap();
        let b = parse_any(r#"{"gens": ["x1*x2","x2*x3","x1*x3"]}"#, None, f).unwrap();
        assert_eq!(a, b);
    }

}
