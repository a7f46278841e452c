//! Line-oriented text formats for algebras and modules.
//!
//! Algebra files:
//!
//! ```text
//! # comment
//! field rational            # or: field prime 7   (optional, default rational)
//! vertices 3
//! arrow a 1 2
//! arrow b 2 3
//! relation a*b              # terms: [coeff*]arrow{*arrow}, coeff an integer or p/q
//! ```
//!
//! Module files:
//!
//! ```text
//! module M
//! dim 1 1 0
//! map a 1                   # rows separated by ';', omitted maps are zero
//! ```

use std::sync::Arc;

use num_bigint::BigInt;

use crate::algebra::{build_algebra, Arrow, PathAlgebra, Quiver, Relation};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::module::{builtin_module, direct_sum, Builtin, Representation};

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// A whitespace-separated word with its 1-based column.
#[derive(Debug, Clone, Copy)]
struct Word<'a> {
    text: &'a str,
    column: usize,
}

fn words(line: &str) -> Vec<Word<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Word { text: &line[s..i], column: line[..s].chars().count() + 1 });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Word { text: &line[s..], column: line[..s].chars().count() + 1 });
    }
    out
}

/// Lines with comments stripped, paired with their 1-based number.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        (!body.trim().is_empty()).then_some((i + 1, body))
    })
}

fn parse_usize(w: &Word<'_>, line: usize, what: &str) -> Result<usize> {
    w.text
        .parse()
        .map_err(|_| syntax(line, w.column, format!("expected {what}, found `{}`", w.text)))
}

fn is_number(s: &str) -> bool {
    let mut parts = s.splitn(2, '/');
    let num = parts.next().unwrap_or("");
    let ok = |t: &str| !t.is_empty() && t.chars().all(|c| c.is_ascii_digit());
    ok(num) && parts.next().is_none_or(ok)
}

/// Parses an integer or `p/q` (optionally signed) into the field.
fn parse_scalar(field: Field, s: &str, line: usize, column: usize) -> Result<Scalar> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    if !is_number(body) {
        return Err(syntax(line, column, format!("expected a number, found `{s}`")));
    }
    let mut parts = body.splitn(2, '/');
    let num: BigInt = parts.next().unwrap_or("0").parse().expect("digits");
    let den: BigInt = parts.next().map_or(BigInt::from(1), |d| d.parse().expect("digits"));
    let num = if neg { -num } else { num };
    field
        .from_ratio(&num, &den)
        .ok_or_else(|| syntax(line, column, format!("denominator of `{s}` vanishes in the field")))
}

/// Parses an algebra description and builds the algebra.
pub fn parse_algebra_file(text: &str) -> Result<PathAlgebra> {
    let mut field: Option<Field> = None;
    let mut vertices: Option<usize> = None;
    let mut arrows: Vec<(String, usize, usize)> = Vec::new();
    let mut relation_lines: Vec<(usize, usize, &str)> = Vec::new();

    for (ln, body) in content_lines(text) {
        let ws = words(body);
        let head = ws[0];
        match head.text {
            "field" => {
                if field.is_some() {
                    return Err(syntax(ln, head.column, "duplicate `field` line"));
                }
                field = Some(match ws.get(1).map(|w| w.text) {
                    Some("rational") if ws.len() == 2 => Field::Rational,
                    Some("prime") if ws.len() == 3 => {
                        let p: u64 = ws[2].text.parse().map_err(|_| {
                            syntax(ln, ws[2].column, format!("expected a prime, found `{}`", ws[2].text))
                        })?;
                        Field::prime(p)?
                    }
                    _ => {
                        return Err(syntax(ln, head.column, "expected `field rational` or `field prime <p>`"));
                    }
                });
            }
            "vertices" => {
                if vertices.is_some() {
                    return Err(syntax(ln, head.column, "duplicate `vertices` line"));
                }
                if ws.len() != 2 {
                    return Err(syntax(ln, head.column, "expected `vertices <k>`"));
                }
                let k = parse_usize(&ws[1], ln, "a vertex count")?;
                if k == 0 {
                    return Err(syntax(ln, ws[1].column, "vertex count must be positive"));
                }
                vertices = Some(k);
            }
            "arrow" => {
                if ws.len() != 4 {
                    return Err(syntax(ln, head.column, "expected `arrow <name> <source> <target>`"));
                }
                let name = ws[1].text;
                if !name.chars().all(|c| c.is_alphanumeric() || c == '_')
                    || !name.chars().next().is_some_and(char::is_alphabetic)
                {
                    return Err(syntax(ln, ws[1].column, format!("invalid arrow name `{name}`")));
                }
                let s = parse_usize(&ws[2], ln, "a source vertex")?;
                let t = parse_usize(&ws[3], ln, "a target vertex")?;
                arrows.push((name.to_string(), s, t));
            }
            "relation" => {
                let rest_col = head.column + head.text.len();
                let start = body.char_indices().nth(rest_col - 1).map_or(body.len(), |(i, _)| i);
                relation_lines.push((ln, rest_col, &body[start..]));
            }
            other => {
                return Err(syntax(ln, head.column, format!("unknown keyword `{other}`")));
            }
        }
    }

    let field = field.unwrap_or(Field::Rational);
    let vertices = vertices.ok_or_else(|| syntax(1, 1, "missing `vertices` line"))?;
    let mut quiver_arrows = Vec::new();
    for (name, s, t) in arrows {
        for v in [s, t] {
            if v == 0 || v > vertices {
                return Err(Error::VertexOutOfRange { vertex: v, count: vertices });
            }
        }
        quiver_arrows.push(Arrow { name, source: s - 1, target: t - 1 });
    }
    let quiver = Quiver::new(vertices, quiver_arrows)?;
    let mut relations = Vec::new();
    for (ln, col, rest) in relation_lines {
        relations.push(parse_relation(&quiver, field, rest, ln, col)?);
    }
    build_algebra(quiver, relations, field)
}

/// Parses `term {(+|-) term}` where `col` is the column of `rest[0]`.
fn parse_relation(quiver: &Quiver, field: Field, rest: &str, line: usize, col: usize) -> Result<Relation> {
    let chars: Vec<char> = rest.chars().collect();
    let mut terms: Vec<(Scalar, Vec<usize>)> = Vec::new();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].is_whitespace() {
            *i += 1;
        }
    };
    let mut first = true;
    loop {
        skip_ws(&mut i);
        if i >= chars.len() {
            if first {
                return Err(syntax(line, col + i, "empty relation"));
            }
            break;
        }
        let mut sign = field.one();
        if chars[i] == '+' || chars[i] == '-' {
            if chars[i] == '-' {
                sign = -&sign;
            }
            i += 1;
            skip_ws(&mut i);
        } else if !first {
            return Err(syntax(line, col + i, format!("expected `+` or `-`, found `{}`", chars[i])));
        }
        let start = i;
        while i < chars.len() && !chars[i].is_whitespace() && chars[i] != '+' && chars[i] != '-' {
            i += 1;
        }
        if start == i {
            return Err(syntax(line, col + start, "missing term"));
        }
        let token: String = chars[start..i].iter().collect();
        let mut coeff = sign;
        let mut factors: Vec<(&str, usize)> = Vec::new();
        let mut off = 0;
        for part in token.split('*') {
            factors.push((part, col + start + off));
            off += part.chars().count() + 1;
        }
        let mut path = Vec::new();
        for (idx, (f, c)) in factors.iter().enumerate() {
            if f.is_empty() {
                return Err(syntax(line, *c, "empty factor in term"));
            }
            if idx == 0 && is_number(f) {
                coeff = &coeff * &parse_scalar(field, f, line, *c)?;
                continue;
            }
            match quiver.arrow_index(f) {
                Some(a) => path.push(a),
                None => return Err(syntax(line, *c, format!("unknown arrow `{f}`"))),
            }
        }
        if path.is_empty() {
            return Err(syntax(line, col + start, "term has no arrows"));
        }
        terms.push((coeff, path));
        first = false;
    }
    Relation::new(quiver, field, terms)
}

/// Normalized text form; `parse_algebra_file` of it rebuilds the same algebra.
pub fn serialize_algebra(algebra: &PathAlgebra) -> String {
    let q = algebra.quiver();
    let mut out = format!("field {}\nvertices {}\n", algebra.field(), q.vertex_count());
    for a in q.arrows() {
        out.push_str(&format!("arrow {} {} {}\n", a.name, a.source + 1, a.target + 1));
    }
    for r in algebra.relations() {
        out.push_str(&format!("relation {}\n", r.display(q)));
    }
    out
}

/// Parses a module file over `algebra`, returning its name and the module.
pub fn parse_module_file(algebra: &Arc<PathAlgebra>, text: &str) -> Result<(String, Representation)> {
    let field = algebra.field();
    let q = algebra.quiver();
    let mut name: Option<String> = None;
    let mut dims: Option<Vec<usize>> = None;
    let mut maps: Vec<Option<(usize, Vec<Vec<Scalar>>)>> = vec![None; q.arrows().len()];
    for (ln, body) in content_lines(text) {
        let ws = words(body);
        let head = ws[0];
        match head.text {
            "module" => {
                if ws.len() != 2 {
                    return Err(syntax(ln, head.column, "expected `module <name>`"));
                }
                name = Some(ws[1].text.to_string());
            }
            "dim" => {
                if ws.len() != q.vertex_count() + 1 {
                    return Err(syntax(
                        ln,
                        head.column,
                        format!("expected {} dimensions", q.vertex_count()),
                    ));
                }
                dims = Some(
                    ws[1..]
                        .iter()
                        .map(|w| parse_usize(w, ln, "a dimension"))
                        .collect::<Result<_>>()?,
                );
            }
            "map" => {
                if ws.len() < 2 {
                    return Err(syntax(ln, head.column, "expected `map <arrow> <rows>`"));
                }
                let a = q
                    .arrow_index(ws[1].text)
                    .ok_or_else(|| syntax(ln, ws[1].column, format!("unknown arrow `{}`", ws[1].text)))?;
                if maps[a].is_some() {
                    return Err(syntax(ln, ws[1].column, "duplicate map"));
                }
                let mut rows = vec![Vec::new()];
                for w in &ws[2..] {
                    let mut off = 0;
                    for (k, piece) in w.text.split(';').enumerate() {
                        if k > 0 {
                            rows.push(Vec::new());
                        }
                        if !piece.is_empty() {
                            let s = parse_scalar(field, piece, ln, w.column + off)?;
                            rows.last_mut().expect("nonempty").push(s);
                        }
                        off += piece.chars().count() + 1;
                    }
                }
                rows.retain(|r| !r.is_empty());
                maps[a] = Some((ln, rows));
            }
            other => return Err(syntax(ln, head.column, format!("unknown keyword `{other}`"))),
        }
    }
    let dims = dims.ok_or_else(|| syntax(1, 1, "missing `dim` line"))?;
    let mut mats = Vec::with_capacity(maps.len());
    for (a, arrow) in q.arrows().iter().enumerate() {
        let (r, c) = (dims[arrow.target], dims[arrow.source]);
        mats.push(match &maps[a] {
            None => Matrix::zeros(field, r, c),
            Some((ln, rows)) => {
                if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                    return Err(syntax(
                        *ln,
                        1,
                        format!("map `{}` must be {r}x{c}", arrow.name),
                    ));
                }
                Matrix::from_rows(field, c, rows)
            }
        });
    }
    let rep = Representation::new(algebra.clone(), dims, mats)?;
    Ok((name.unwrap_or_else(|| "M".to_string()), rep))
}

pub fn serialize_module(name: &str, m: &Representation) -> String {
    let dims: Vec<String> = m.dims().iter().map(ToString::to_string).collect();
    let mut out = format!("module {name}\ndim {}\n", dims.join(" "));
    for (a, arrow) in m.algebra().quiver().arrows().iter().enumerate() {
        let mat = m.map(a);
        if mat.is_zero() {
            continue;
        }
        let rows: Vec<String> = (0..mat.rows())
            .map(|r| mat.row(r).iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        out.push_str(&format!("map {} {}\n", arrow.name, rows.join(";")));
    }
    out
}

/// A builtin name or a `+`-separated direct sum of builtins, e.g. `P(1)+S(2)`.
pub fn parse_module_ref(algebra: &Arc<PathAlgebra>, text: &str) -> Option<Result<Representation>> {
    let parts: Vec<Builtin> = text.split('+').map(Builtin::parse).collect::<Option<_>>()?;
    let mods: Result<Vec<Representation>> = parts.iter().map(|b| builtin_module(algebra, *b)).collect();
    Some(mods.map(|ms| {
        let refs: Vec<&Representation> = ms.iter().collect();
        direct_sum(&refs)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "# A3 with the radical-square relation\nfield rational\nvertices 3\narrow a 1 2\narrow b 2 3\nrelation a*b\n";

    #[test]
    fn parses_the_linear_example() {
        let a = parse_algebra_file(EXAMPLE).unwrap();
        assert_eq!(a.dim(), 5);
    }

    #[test]
    fn rejects_non_prime_fields() {
        let text = EXAMPLE.replace("field rational", "field prime 4");
        assert_eq!(parse_algebra_file(&text).unwrap_err(), Error::BadField(4));
    }

    #[test]
    fn syntax_errors_carry_locations() {
        let text = "vertices 2\narrow a 1 2\nrelation a*q\n";
        match parse_algebra_file(text).unwrap_err() {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (3, 12)),
            e => panic!("unexpected {e:?}"),
        }
        match parse_algebra_file("vertices 2\nfrobnicate\n").unwrap_err() {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (2, 1)),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn round_trip_is_a_fixed_point() {
        let text = "vertices 4\narrow a 1 2\narrow b 2 4\narrow c 1 3\narrow d 3 4\nrelation 1/2*a*b -3*c*d\nfield prime 7\n";
        let a = parse_algebra_file(text).unwrap();
        let once = serialize_algebra(&a);
        let b = parse_algebra_file(&once).unwrap();
        assert_eq!(a, b);
        assert_eq!(serialize_algebra(&b), once);
    }

    #[test]
    fn rational_coefficients_survive() {
        let text = "vertices 4\narrow a 1 2\narrow b 2 4\narrow c 1 3\narrow d 3 4\nrelation -a*b + 2/3*c*d\n";
        let a = parse_algebra_file(text).unwrap();
        let s = serialize_algebra(&a);
        assert!(s.contains("2/3*c*d"), "{s}");
        assert_eq!(parse_algebra_file(&s).unwrap(), a);
    }

    #[test]
    fn module_files() {
        let alg = Arc::new(parse_algebra_file(EXAMPLE).unwrap());
        let (name, m) = parse_module_file(&alg, "module P1\ndim 1 1 0\nmap a 1\n").unwrap();
        assert_eq!(name, "P1");
        assert_eq!(m, crate::module::projective(&alg, 0));
        let text = serialize_module(&name, &m);
        assert_eq!(parse_module_file(&alg, &text).unwrap().1, m);
        let bad = parse_module_file(&alg, "dim 1 1 1\nmap a 1\nmap b 1\n").unwrap_err();
        assert!(matches!(bad, Error::InvalidRepresentation(_)));
    }

    #[test]
    fn builtin_references() {
        let alg = Arc::new(parse_algebra_file(EXAMPLE).unwrap());
        let m = parse_module_ref(&alg, "P(1)+S(3)").unwrap().unwrap();
        assert_eq!(m.dims(), &[1, 1, 1]);
        assert!(parse_module_ref(&alg, "file.mod").is_none());
    }
}
