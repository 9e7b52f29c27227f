//! The line-oriented algebra description format.
//!
//! ```text
//! algebra exA
//! field Fp 32003
//! vertices 1 2
//! arrow α: 1 -> 2
//! arrow β: 2 -> 2
//! relations
//!   α*β
//!   β*β
//! end
//! ```

use super::{Arrow, BoundQuiverAlgebra, Path, Quiver, Relation, DEFAULT_MAX_LEN};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

const OP: &str = "parse_algebra";

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        op: OP,
        line,
        column,
        message: message.into(),
    }
}

/// 1-based character column of `needle` inside `line`.
fn column_of(line: &str, needle: &str) -> usize {
    line.find(needle).map_or(1, |b| line[..b].chars().count() + 1)
}

/// Strips a trailing `#` comment.
pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses an algebra description with the default `max_len`.
pub fn parse_algebra(text: &str) -> Result<BoundQuiverAlgebra> {
    parse_algebra_with(text, DEFAULT_MAX_LEN)
}

pub fn parse_algebra_with(text: &str, max_len: usize) -> Result<BoundQuiverAlgebra> {
    let mut name: Option<String> = None;
    let mut field = Field::default();
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut relation_lines: Vec<(usize, String)> = Vec::new();
    let mut in_relations = false;
    let mut ended = false;

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if ended {
            return Err(syntax(lineno, 1, "content after 'end'"));
        }
        let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        if in_relations && head != "end" {
            relation_lines.push((lineno, raw.to_string()));
            continue;
        }
        match head {
            "algebra" => {
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return Err(syntax(
                        lineno,
                        column_of(raw, "algebra") + 8,
                        "expected a single algebra name",
                    ));
                }
                name = Some(rest.to_string());
            }
            "field" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                field = match parts.as_slice() {
                    ["Q"] => Field::Rationals,
                    ["Fp", p] => {
                        let p: u64 = p
                            .parse()
                            .map_err(|_| syntax(lineno, column_of(raw, p), "expected a prime"))?;
                        Field::prime(p).map_err(|e| syntax(lineno, column_of(raw, "Fp") + 3, e.to_string()))?
                    }
                    _ => {
                        return Err(syntax(
                            lineno,
                            column_of(raw, "field"),
                            "expected 'field Fp <prime>' or 'field Q'",
                        ))
                    }
                };
            }
            "vertices" => {
                let vs: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if vs.is_empty() {
                    return Err(syntax(
                        lineno,
                        column_of(raw, "vertices"),
                        "expected at least one vertex",
                    ));
                }
                vertices = Some(vs);
            }
            "arrow" => {
                let vs = vertices
                    .as_ref()
                    .ok_or_else(|| syntax(lineno, 1, "'vertices' must precede arrows"))?;
                let (label, ends) = rest.split_once(':').ok_or_else(|| {
                    syntax(
                        lineno,
                        column_of(raw, "arrow") + 6,
                        "expected '<label>: <src> -> <tgt>'",
                    )
                })?;
                let (src, tgt) = ends
                    .split_once("->")
                    .ok_or_else(|| syntax(lineno, column_of(raw, ":") + 1, "expected '->'"))?;
                let (label, src, tgt) = (label.trim(), src.trim(), tgt.trim());
                if label.is_empty() || label.contains(|c: char| c.is_whitespace() || c == '*') {
                    return Err(syntax(lineno, column_of(raw, "arrow") + 6, "invalid arrow label"));
                }
                let find = |v: &str| {
                    vs.iter().position(|x| x == v).ok_or_else(|| Error::UnknownVertex {
                        op: OP,
                        label: v.to_string(),
                    })
                };
                arrows.push(Arrow {
                    label: label.to_string(),
                    source: find(src)?,
                    target: find(tgt)?,
                });
            }
            "relations" => {
                if !rest.is_empty() {
                    return Err(syntax(
                        lineno,
                        column_of(raw, "relations") + 10,
                        "unexpected text after 'relations'",
                    ));
                }
                in_relations = true;
            }
            "end" => {
                in_relations = false;
                ended = true;
            }
            other => {
                return Err(syntax(
                    lineno,
                    column_of(raw, other),
                    format!("unknown directive '{other}'"),
                ));
            }
        }
    }
    let name = name.ok_or_else(|| syntax(1, 1, "missing 'algebra <name>' line"))?;
    let vertices = vertices.ok_or_else(|| syntax(1, 1, "missing 'vertices' line"))?;
    if !ended {
        return Err(syntax(text.lines().count().max(1), 1, "missing 'end'"));
    }
    let quiver = Quiver::new(vertices, arrows)?;
    let mut relations = Vec::new();
    for (lineno, raw) in relation_lines {
        relations.push(parse_relation(&quiver, field, lineno, &raw)?);
    }
    BoundQuiverAlgebra::new(name, field, quiver, relations, max_len)
}

/// Splits `s` into signed chunks at top-level `+`/`-`.
fn signed_chunks(s: &str) -> Vec<(bool, &str, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut negative = false;
    for (i, ch) in s.char_indices() {
        if ch == '+' || ch == '-' {
            let chunk = &s[start..i];
            if !chunk.trim().is_empty() {
                out.push((negative, chunk, start));
            } else if !out.is_empty() || i > 0 && !s[..i].trim().is_empty() {
                // two signs in a row: keep an empty chunk to report
                out.push((negative, chunk, start));
            }
            negative = ch == '-';
            start = i + ch.len_utf8();
        }
    }
    out.push((negative, &s[start..], start));
    out
}

fn parse_relation(quiver: &Quiver, field: Field, lineno: usize, raw: &str) -> Result<Relation> {
    let line = strip_comment(raw);
    let mut terms: Vec<(Scalar, Path)> = Vec::new();
    for (negative, chunk, offset) in signed_chunks(line) {
        let col = line[..offset].chars().count() + 1 + (chunk.len() - chunk.trim_start().len());
        let chunk = chunk.trim();
        if chunk.is_empty() {
            return Err(syntax(lineno, col, "empty term"));
        }
        let mut coeff = field.one();
        let mut arrows = Vec::new();
        let mut lazy: Option<usize> = None;
        for (k, factor) in chunk.split('*').map(str::trim).enumerate() {
            if factor.is_empty() {
                return Err(syntax(lineno, col, "empty factor"));
            }
            if factor.starts_with(|c: char| c.is_ascii_digit()) {
                if k != 0 {
                    return Err(syntax(lineno, col, "a coefficient must lead its term"));
                }
                coeff = field
                    .parse_scalar(factor)
                    .map_err(|e| syntax(lineno, col, e.to_string()))?;
                continue;
            }
            if let Some(a) = quiver.arrow_index(factor) {
                arrows.push(a);
            } else if let Some(v) = factor.strip_prefix('e').and_then(|v| quiver.vertex_index(v)) {
                lazy = Some(v);
            } else {
                return Err(Error::UnknownArrow {
                    op: OP,
                    label: factor.to_string(),
                });
            }
        }
        if lazy.is_some() || arrows.len() < 2 {
            return Err(Error::invalid(OP, "relation must lie in the square of the arrow ideal"));
        }
        let path =
            Path::from_arrows(quiver, arrows).ok_or_else(|| syntax(lineno, col, format!("'{chunk}' is not a path")))?;
        if negative {
            coeff = -coeff;
        }
        terms.push((coeff, path));
    }
    Ok(Relation { terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_algebras::*;

    #[test]
    fn example_dimension() {
        assert_eq!(ex_a().dim(), 4);
        let k = parse_algebra("algebra k\nvertices 1\nend\n").unwrap();
        assert_eq!(k.dim(), 1);
    }

    #[test]
    fn lazy_path_relation_rejected() {
        let text = "algebra bad\nvertices 1 2\narrow a: 1 -> 2\nrelations\n  e1\nend\n";
        let err = parse_algebra(text).unwrap_err();
        assert!(
            err.to_string()
                .contains("relation must lie in the square of the arrow ideal"),
            "{err}"
        );
    }

    #[test]
    fn unknown_labels() {
        let text = "algebra bad\nvertices 1\narrow a: 1 -> 3\nend\n";
        assert!(matches!(parse_algebra(text), Err(Error::UnknownVertex { .. })));
        let text = "algebra bad\nvertices 1\narrow a: 1 -> 1\nrelations\n a*c\nend\n";
        assert!(matches!(parse_algebra(text), Err(Error::UnknownArrow { .. })));
    }

    #[test]
    fn syntax_error_position() {
        let text = "algebra x\nvertices 1\n  bogus 3\nend\n";
        match parse_algebra(text) {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (3, 3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn non_parallel_relation() {
        let text = "algebra x\nvertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 2 -> 2\nrelations\n a*b - a*c\nend\n";
        let err = parse_algebra(text).unwrap_err();
        assert!(err.to_string().contains("not parallel"), "{err}");
    }

    #[test]
    fn commutative_square() {
        let text = "algebra sq\nfield Q\nvertices 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 4\narrow c: 1 -> 3\narrow d: 3 -> 4\nrelations\n a*b - c*d\nend\n";
        let a = parse_algebra(text).unwrap();
        assert_eq!(a.dim(), 9);
        a.check_invariants().unwrap();
        // a*b survives, c*d is rewritten onto it
        let cd = a.path_element(&Path::from_arrows(a.quiver(), vec![2, 3]).unwrap());
        let ab = a.path_element(&Path::from_arrows(a.quiver(), vec![0, 1]).unwrap());
        assert_eq!(cd, ab);
    }

    #[test]
    fn loop_without_relations_is_infinite() {
        let text = "algebra kx\nvertices 1\narrow b: 1 -> 1\nend\n";
        assert_eq!(
            parse_algebra_with(text, 10).unwrap_err(),
            Error::NotFiniteDimensional { max_len: 10 }
        );
    }

    #[test]
    fn truncated_loop() {
        let text = "algebra kx2\nvertices 1\narrow b: 1 -> 1\nrelations\n b*b\nend\n";
        let a = parse_algebra(text).unwrap();
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn a2_basis() {
        let a = a2();
        assert_eq!(a.dim(), 3);
        assert_eq!(k2().dim(), 2);
    }

    #[test]
    fn parsing_twice_is_identical() {
        assert_eq!(ex_a(), ex_a());
    }
}
