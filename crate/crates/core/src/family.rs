//! Generators for the algebra families used in regressions, and the complete
//! list of indecomposables for Nakayama algebras.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::{build_algebra, PathAlgebra, Quiver, Relation};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::module::{projective, quotient, radical_power_spans, Representation};

/// A named algebra family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    /// Linear quiver `1 → 2 → … → n+2` modulo all paths of length two.
    Example211 { n: usize },
    /// Cyclic quiver on `k` vertices modulo all paths of length `m`.
    CyclicNakayama { k: usize, m: usize },
    /// One loop `x` with `x^m = 0`.
    LoopTruncated { m: usize },
    /// `k` vertices, no arrows.
    Semisimple { k: usize },
}

impl FamilySpec {
    pub fn build(self, field: Field) -> Result<PathAlgebra> {
        match self {
            FamilySpec::Example211 { n } => example211(n, field),
            FamilySpec::CyclicNakayama { k, m } => cyclic_nakayama(k, m, field),
            FamilySpec::LoopTruncated { m } => loop_truncated(m, field),
            FamilySpec::Semisimple { k } => semisimple(k, field),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Example211 { n } => write!(f, "example211:{n}"),
            FamilySpec::CyclicNakayama { k, m } => write!(f, "cyclic:{k}:{m}"),
            FamilySpec::LoopTruncated { m } => write!(f, "loop:{m}"),
            FamilySpec::Semisimple { k } => write!(f, "semisimple:{k}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// `example211:N`, `cyclic:K:M`, `loop:M` or `semisimple:K`.
    fn from_str(s: &str) -> Result<FamilySpec> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |i: usize| -> Result<usize> {
            parts
                .get(i)
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| Error::BadParameters(format!("cannot read family `{s}`")))
        };
        let spec = match (parts[0], parts.len()) {
            ("example211", 2) => FamilySpec::Example211 { n: num(1)? },
            ("cyclic", 3) => FamilySpec::CyclicNakayama { k: num(1)?, m: num(2)? },
            ("loop", 2) => FamilySpec::LoopTruncated { m: num(1)? },
            ("semisimple", 2) => FamilySpec::Semisimple { k: num(1)? },
            _ => return Err(Error::BadParameters(format!("unknown family `{s}`"))),
        };
        Ok(spec)
    }
}

/// All arrow sequences of length `len` in a quiver where each vertex has at
/// most one outgoing arrow, one per starting vertex that admits one.
fn paths_of_length(quiver: &Quiver, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for v in 0..quiver.vertex_count() {
        let mut path = Vec::new();
        let mut at = v;
        for _ in 0..len {
            let Some(a) = quiver.arrows_from(at).next() else { break };
            path.push(a);
            at = quiver.arrow(a).target;
        }
        if path.len() == len {
            out.push(path);
        }
    }
    out
}

fn monomials(quiver: &Quiver, field: Field, len: usize) -> Result<Vec<Relation>> {
    paths_of_length(quiver, len)
        .into_iter()
        .map(|p| Relation::new(quiver, field, vec![(field.one(), p)]))
        .collect()
}

fn arrow_name(i: usize) -> String {
    format!("a{}", i + 1)
}

pub fn example211(n: usize, field: Field) -> Result<PathAlgebra> {
    if n == 0 {
        return Err(Error::BadParameters("example211 needs n >= 1".into()));
    }
    let k = n + 2;
    let names: Vec<String> = (0..k - 1).map(arrow_name).collect();
    let labels: Vec<(&str, usize, usize)> = names.iter().enumerate().map(|(i, a)| (a.as_str(), i + 1, i + 2)).collect();
    let quiver = Quiver::from_labels(k, &labels)?;
    let relations = monomials(&quiver, field, 2)?;
    build_algebra(quiver, relations, field)
}

pub fn cyclic_nakayama(k: usize, m: usize, field: Field) -> Result<PathAlgebra> {
    if k == 0 || m < 2 {
        return Err(Error::BadParameters("cyclic Nakayama needs k >= 1 and m >= 2".into()));
    }
    let names: Vec<String> = (0..k).map(arrow_name).collect();
    let labels: Vec<(&str, usize, usize)> = names
        .iter()
        .enumerate()
        .map(|(i, a)| (a.as_str(), i + 1, (i + 1) % k + 1))
        .collect();
    let quiver = Quiver::from_labels(k, &labels)?;
    let relations = monomials(&quiver, field, m)?;
    build_algebra(quiver, relations, field)
}

pub fn loop_truncated(m: usize, field: Field) -> Result<PathAlgebra> {
    if m < 2 {
        return Err(Error::BadParameters("truncated loop needs m >= 2".into()));
    }
    let quiver = Quiver::from_labels(1, &[("x", 1, 1)])?;
    let relations = monomials(&quiver, field, m)?;
    build_algebra(quiver, relations, field)
}

pub fn semisimple(k: usize, field: Field) -> Result<PathAlgebra> {
    if k == 0 {
        return Err(Error::BadParameters("semisimple needs k >= 1".into()));
    }
    build_algebra(Quiver::new(k, Vec::new())?, Vec::new(), field)
}

/// A named indecomposable module.
#[derive(Debug, Clone)]
pub struct Indecomposable {
    pub name: String,
    pub module: Representation,
}

/// For a Nakayama algebra, every indecomposable is `P(i)/rad^j P(i)` for some
/// `1 <= j <= length P(i)`. Named `P(i)` at full length, `S(i)` at `j = 1`,
/// else `P(i)/rad^j`.
pub fn nakayama_indecomposables(algebra: &Arc<PathAlgebra>) -> Result<Vec<Indecomposable>> {
    if !algebra.quiver().is_nakayama_shaped() {
        return Err(Error::BadParameters(
            "indecomposables are only enumerated for Nakayama algebras; pass --modules".into(),
        ));
    }
    let mut out = Vec::new();
    for v in 0..algebra.vertex_count() {
        let p = projective(algebra, v);
        let length = p.dim();
        for j in (1..=length).rev() {
            let module = if j == length {
                p.clone()
            } else {
                quotient(&p, &radical_power_spans(&p, j)).0
            };
            let name = if j == length {
                format!("P({})", v + 1)
            } else if j == 1 {
                format!("S({})", v + 1)
            } else {
                format!("P({})/rad^{j}", v + 1)
            };
            out.push(Indecomposable { name, module });
        }
    }
    Ok(out)
}
