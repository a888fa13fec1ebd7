//! Facet files and generator specs.
//!
//! Facet file: one facet per line as 1-based vertex indices separated by
//! whitespace; `#` starts a comment line; an optional `n <int>` header declares the
//! vertex count so vertices in no listed facet become isolated points.

use std::fmt;
use std::path::Path;

use srmult_core::generators::*;
use srmult_core::{Face, SimplicialComplex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn at(line: usize, msg: impl fmt::Display) -> InputError {
    InputError(format!("line {line}: {msg}"))
}

pub fn parse_facets(text: &str) -> Result<SimplicialComplex, InputError> {
    let mut declared: Option<usize> = None;
    let mut facets: Vec<(usize, Vec<usize>)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('n') {
            if declared.is_some() || !facets.is_empty() {
                return Err(at(line_no, "header \"n <int>\" must come before any facet"));
            }
            let n = rest.trim().parse::<usize>().map_err(|_| {
                at(
                    line_no,
                    format!("malformed header {line:?}, expected \"n <int>\""),
                )
            })?;
            declared = Some(n);
            continue;
        }
        let mut facet = Vec::new();
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| at(line_no, format!("{tok:?} is not a vertex index")))?;
            if v == 0 {
                return Err(at(line_no, "vertex index 0 not allowed (1-based)"));
            }
            facet.push(v - 1);
        }
        facets.push((line_no, facet));
    }
    if facets.is_empty() && declared.unwrap_or(0) == 0 {
        return Err(InputError("no facets".into()));
    }
    let max_vertex = facets
        .iter()
        .flat_map(|(_, f)| f.iter().copied())
        .max()
        .map_or(0, |v| v + 1);
    let n = match declared {
        Some(n) if n < max_vertex => {
            let (line_no, _) = facets
                .iter()
                .find(|(_, f)| f.iter().any(|&v| v >= n))
                .unwrap();
            return Err(at(
                *line_no,
                format!("vertex {max_vertex} exceeds declared n = {n}"),
            ));
        }
        Some(n) => n,
        None => max_vertex,
    };
    if n > 64 {
        return Err(InputError(format!(
            "{n} vertices; at most 64 are supported"
        )));
    }
    let mut faces: Vec<Face> = facets
        .iter()
        .map(|(_, f)| Face::from_iter(f.iter().copied()))
        .collect();
    let covered = faces.iter().fold(Face::EMPTY, |a, f| a.union(*f));
    let missing: Vec<usize> = Face::full(n).difference(covered).vertices().collect();
    if declared.is_none() && !missing.is_empty() {
        return Err(InputError(format!(
            "vertex {} appears in no facet; add it as its own line or declare \"n {n}\"",
            missing[0] + 1
        )));
    }
    faces.extend(missing.into_iter().map(|v| Face::from_vertices([v])));
    SimplicialComplex::from_facets(n, faces).map_err(|e| InputError(e.to_string()))
}

pub fn read_facet_file(path: &Path) -> Result<SimplicialComplex, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    parse_facets(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn params(spec: &str, rest: &str, count: usize) -> Result<Vec<usize>, InputError> {
    let vals: Vec<usize> = rest
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| InputError(format!("generator {spec:?}: parameters must be integers")))?;
    if vals.len() != count {
        return Err(InputError(format!(
            "generator {spec:?}: expected {count} parameter(s)"
        )));
    }
    Ok(vals)
}

pub const GENERATORS: &str =
    "simplex:d, boundary:d, cross:s, cycle:k, cyclic:d,n, example7, rp2, torus7";

/// Builds a complex from `name[:params]`.
pub fn generate(spec: &str) -> Result<SimplicialComplex, InputError> {
    let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let built = match name {
        "example7" => Ok(example_seven()),
        "rp2" => Ok(real_projective_plane()),
        "torus7" => Ok(torus_seven()),
        "simplex" => simplex(params(spec, rest, 1)?[0]),
        "boundary" => boundary_of_simplex(params(spec, rest, 1)?[0]),
        "cross" => cross_polytope_boundary(params(spec, rest, 1)?[0]),
        "cycle" => cycle(params(spec, rest, 1)?[0]),
        "cyclic" => {
            let p = params(spec, rest, 2)?;
            cyclic_polytope_boundary(p[0], p[1])
        }
        _ => {
            return Err(InputError(format!(
                "unknown generator {name:?}; available: {GENERATORS}"
            )))
        }
    };
    built.map_err(|e| InputError(format!("generator {spec:?}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_header() {
        let c = parse_facets("# square\nn 5\n1 2\n2 3\n3 4\n4 1\n").unwrap();
        assert_eq!(c.n(), 5);
        assert_eq!(c.facets().len(), 5);
        assert_eq!(c.f_vector().entries(), &[1, 5, 4]);
    }

    #[test]
    fn drops_non_maximal_lines() {
        let c = parse_facets("1 2 3\n1 2\n3\n").unwrap();
        assert!(c.is_simplex());
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_facets("1 2\n2 3\n0 1\n").unwrap_err();
        assert_eq!(err.0, "line 3: vertex index 0 not allowed (1-based)");
        let err = parse_facets("1 x\n").unwrap_err();
        assert!(err.0.starts_with("line 1:"));
        let err = parse_facets("n 2\n1 3\n").unwrap_err();
        assert_eq!(err.0, "line 2: vertex 3 exceeds declared n = 2");
        assert!(parse_facets("1 2\n4 3\n1 2 5\n6\n").is_ok());
        assert!(parse_facets("1 3\n").unwrap_err().0.contains("vertex 2"));
    }

    #[test]
    fn generators() {
        assert_eq!(generate("cross:3").unwrap().facets().len(), 8);
        assert_eq!(generate("cyclic:4,8").unwrap().facets().len(), 20);
        assert_eq!(generate("example7").unwrap().facets().len(), 21);
        assert!(generate("cycle").is_err());
        assert!(generate("nope:1").unwrap_err().0.contains("available"));
    }
}
