//! Module description files and module expressions.
//!
//! ```text
//! module T over exA
//! dims 2 1
//! map α = [[1, 0]]
//! end
//! ```
//!
//! Arrows without a `map` line act as zero. An expression such as
//! `P(1)+S1+T` sums indecomposable projectives `P`, simples `S`, injectives
//! `I` and named modules.

use std::sync::Arc;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

use super::Rep;

const OP: &str = "parse_modules";

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        op: OP,
        line,
        column,
        message: message.into(),
    }
}

/// Named modules read from one or more files.
#[derive(Clone, Debug, Default)]
pub struct ModuleLibrary {
    modules: Vec<(String, Rep)>,
}

impl ModuleLibrary {
    pub fn get(&self, name: &str) -> Option<&Rep> {
        self.modules.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.modules.iter().map(|(n, _)| n.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Rep)> {
        self.modules.iter().map(|(n, m)| (n.as_str(), m))
    }

    pub fn insert(&mut self, name: impl Into<String>, module: Rep) {
        let name = name.into();
        self.modules.retain(|(n, _)| *n != name);
        self.modules.push((name, module));
    }

    pub fn extend(&mut self, other: ModuleLibrary) {
        for (n, m) in other.modules {
            self.insert(n, m);
        }
    }
}

fn parse_matrix(field: Field, text: &str, rows: usize, cols: usize, line: usize) -> Result<Matrix> {
    let t = text.trim();
    if !(t.starts_with('[') && t.ends_with(']')) {
        return Err(syntax(line, 1, "expected a matrix like [[1, 0], [0, 1]]"));
    }
    let inner = t[1..t.len() - 1].trim();
    let mut parsed: Vec<Vec<Scalar>> = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let Some(open) = rest.find('[') else {
            return Err(syntax(line, 1, "expected '[' to open a row"));
        };
        if !rest[..open].trim().trim_matches(',').trim().is_empty() {
            return Err(syntax(line, 1, "unexpected text between rows"));
        }
        let close = rest[open..].find(']').ok_or_else(|| syntax(line, 1, "unclosed row"))? + open;
        let row = rest[open + 1..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| field.parse_scalar(s).map_err(|e| syntax(line, 1, e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        parsed.push(row);
        rest = rest[close + 1..].trim_start_matches(|c: char| c == ',' || c.is_whitespace());
    }
    if parsed.is_empty() && rows == 0 {
        return Ok(Matrix::zeros(field, 0, cols));
    }
    if parsed.len() != rows || parsed.iter().any(|r| r.len() != cols) {
        return Err(Error::invalid(OP, format!("line {line}: matrix must be {rows}×{cols}")));
    }
    Ok(Matrix::from_rows(field, rows, cols, parsed))
}

/// Parses module descriptions over the given algebras, matched by name.
pub fn parse_modules(text: &str, algebras: &[Arc<BoundQuiverAlgebra>]) -> Result<ModuleLibrary> {
    struct Pending {
        name: String,
        algebra: Arc<BoundQuiverAlgebra>,
        dims: Option<Vec<usize>>,
        maps: Vec<Option<Matrix>>,
    }
    let mut lib = ModuleLibrary::default();
    let mut cur: Option<Pending> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = crate::algebra::strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match (head, cur.as_mut()) {
            ("module", None) => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [name, "over", alg] = parts.as_slice() else {
                    return Err(syntax(lineno, 1, "expected 'module <name> over <algebra>'"));
                };
                let algebra = algebras
                    .iter()
                    .find(|a| a.name() == *alg)
                    .ok_or_else(|| Error::invalid(OP, format!("line {lineno}: unknown algebra '{alg}'")))?
                    .clone();
                let arrows = algebra.quiver().arrows().len();
                cur = Some(Pending {
                    name: name.to_string(),
                    algebra,
                    dims: None,
                    maps: vec![None; arrows],
                });
            }
            ("dims", Some(p)) => {
                let dims = rest
                    .split_whitespace()
                    .map(|d| {
                        d.parse::<usize>()
                            .map_err(|_| syntax(lineno, 1, format!("bad dimension '{d}'")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if dims.len() != p.algebra.vertex_count() {
                    return Err(syntax(
                        lineno,
                        1,
                        format!("expected {} dimensions", p.algebra.vertex_count()),
                    ));
                }
                p.dims = Some(dims);
            }
            ("map", Some(p)) => {
                let dims = p
                    .dims
                    .as_ref()
                    .ok_or_else(|| syntax(lineno, 1, "'dims' must precede maps"))?;
                let (label, mat) = rest
                    .split_once('=')
                    .ok_or_else(|| syntax(lineno, 1, "expected 'map <arrow> = <matrix>'"))?;
                let label = label.trim();
                let k = p
                    .algebra
                    .quiver()
                    .arrow_index(label)
                    .ok_or_else(|| Error::UnknownArrow {
                        op: OP,
                        label: label.to_string(),
                    })?;
                let arr = &p.algebra.quiver().arrows()[k];
                p.maps[k] = Some(parse_matrix(
                    p.algebra.field(),
                    mat,
                    dims[arr.target],
                    dims[arr.source],
                    lineno,
                )?);
            }
            ("end", Some(_)) => {
                let p = cur.take().expect("open module");
                let dims = p.dims.ok_or_else(|| syntax(lineno, 1, "module has no 'dims' line"))?;
                let f = p.algebra.field();
                let maps = p
                    .maps
                    .into_iter()
                    .zip(p.algebra.quiver().arrows())
                    .map(|(m, arr)| m.unwrap_or_else(|| Matrix::zeros(f, dims[arr.target], dims[arr.source])))
                    .collect();
                lib.insert(p.name, Rep::new(p.algebra, dims, maps)?);
            }
            (other, _) => {
                return Err(syntax(
                    lineno,
                    raw.find(other).map_or(1, |c| raw[..c].chars().count() + 1),
                    format!("unexpected '{other}'"),
                ));
            }
        }
    }
    if cur.is_some() {
        return Err(syntax(text.lines().count().max(1), 1, "missing 'end'"));
    }
    Ok(lib)
}

fn vertex_of(algebra: &BoundQuiverAlgebra, term: &str) -> Option<usize> {
    let inner = term
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(term)
        .trim();
    algebra.quiver().vertex_index(inner)
}

/// Evaluates `term + term + ...` where a term is `0`, `P(v)`, `S(v)`,
/// `I(v)` (parentheses optional) or a module name from `library`.
pub fn parse_module_expr(expr: &str, algebra: &Arc<BoundQuiverAlgebra>, library: &ModuleLibrary) -> Result<Rep> {
    const OP: &str = "parse_module_expr";
    let mut acc = Rep::zero(algebra);
    for term in expr.split('+').map(str::trim) {
        if term.is_empty() {
            return Err(Error::invalid(OP, format!("empty term in '{expr}'")));
        }
        if term == "0" {
            continue;
        }
        let m = if let Some(m) = library.get(term) {
            if m.algebra().name() != algebra.name() {
                return Err(Error::invalid(
                    OP,
                    format!("module '{term}' lives over '{}'", m.algebra().name()),
                ));
            }
            m.transport(algebra)?
        } else {
            let (kind, rest) = term.split_at(term.char_indices().nth(1).map_or(term.len(), |(i, _)| i));
            let v = vertex_of(algebra, rest).ok_or_else(|| Error::UnknownVertex {
                op: OP,
                label: term.to_string(),
            })?;
            match kind {
                "P" => Rep::projective(algebra, v),
                "S" => Rep::simple(algebra, v),
                "I" => Rep::injective(algebra, v),
                _ => {
                    return Err(Error::invalid(OP, format!("unknown module '{term}'")));
                }
            }
        };
        acc = acc.direct_sum(&m);
    }
    Ok(acc)
}
