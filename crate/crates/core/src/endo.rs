//! Endomorphism algebras of basic modules, their quiver presentations and
//! derived dimension estimates.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{loewy_length, present, BoundQuiverAlgebra, Quiver, ScAlgebra};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{Coordinates, Matrix};
use crate::rep::{global_dimension, hom_basis, is_isomorphic, Bounded, ModMap, Rep};

/// Search cap for the global dimension when testing heredity.
pub const GLDIM_CAP: usize = 4;

/// `End(T_1 ⊕ ... ⊕ T_n)` with its basis grouped into blocks
/// `Hom(T_j, T_i)`, stored as `ε_i B ε_j`. Composition is the product, so
/// a map `T_j → T_i` is an arrow `i → j` of the presentation.
#[derive(Clone, Debug)]
pub struct EndoAlgebra {
    pub summands: Vec<Rep>,
    /// For each basis element, its block `(i, j)` and the map itself.
    pub basis: Vec<(usize, usize, ModMap)>,
    pub sc: ScAlgebra,
}

impl EndoAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// A basis of `rad End(X)` for indecomposable `X`: the nilpotent
/// endomorphisms, found as the kernel of the trace form.
fn local_radical(x: &Rep, basis: &[ModMap], summand: usize) -> Result<Vec<ModMap>> {
    let f = x.field();
    let n = basis.len();
    let traces: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let prod = basis[j].then(&basis[i]);
                    prod.blocks.iter().fold(f.zero(), |acc, b| &acc + &b.trace())
                })
                .collect()
        })
        .collect();
    let gram = Matrix::from_rows(f, n, n, traces);
    if gram.rank() != 1 {
        return Err(Error::NonSplitBlock { summand });
    }
    Ok(gram
        .nullspace()
        .iter()
        .map(|c| {
            basis
                .iter()
                .zip(c)
                .fold(ModMap::zero(x, x), |acc, (b, s)| acc.add(&b.scale(s)))
        })
        .collect())
}

pub fn endo_algebra(summands: &[Rep], name: impl Into<String>) -> Result<EndoAlgebra> {
    let n = summands.len();
    for i in 0..n {
        for j in 0..i {
            if is_isomorphic(&summands[i], &summands[j])? {
                return Err(Error::NotBasic);
            }
        }
    }
    if let Some(p) = summands.first().and_then(|t| t.field().characteristic()) {
        let dim = summands.iter().map(|t| hom_basis(t, t).len()).max().unwrap_or(0);
        if p <= dim as u64 {
            return Err(Error::FieldTooSmall { p, dim });
        }
    }
    let mut basis: Vec<(usize, usize, ModMap)> = Vec::new();
    let mut radical_positions = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let block = if i == j {
                let t = &summands[i];
                let end = hom_basis(t, t);
                let mut b = vec![ModMap::identity(t)];
                b.extend(local_radical(t, &end, i)?);
                b
            } else {
                hom_basis(&summands[j], &summands[i])
            };
            for (k, m) in block.into_iter().enumerate() {
                if i != j || k > 0 {
                    radical_positions.push(basis.len());
                }
                basis.push((i, j, m));
            }
        }
    }
    let dim = basis.len();
    let field = summands.first().map_or_else(Default::default, Rep::field);
    // coordinates inside each block
    let mut blocks: BTreeMap<(usize, usize), (Vec<usize>, Coordinates)> = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let idx: Vec<usize> = (0..dim).filter(|&k| basis[k].0 == i && basis[k].1 == j).collect();
            let flat: Vec<_> = idx.iter().map(|&k| basis[k].2.flatten()).collect();
            let len = ModMap::zero(&summands[j], &summands[i]).flatten().len();
            let coords = Coordinates::new(field, len, &flat).expect("block basis is independent");
            blocks.insert((i, j), (idx, coords));
        }
    }
    let mut table = vec![Vec::new(); dim * dim];
    for (x, (i, j, f)) in basis.iter().enumerate() {
        for (y, (k, l, g)) in basis.iter().enumerate() {
            if j != k {
                continue;
            }
            // x·y = x ∘ y : T_l → T_i
            let prod = g.then(f);
            let (idx, coords) = &blocks[&(*i, *l)];
            let c = coords.of(&prod.flatten()).expect("composite lies in its block");
            table[x * dim + y] = idx
                .iter()
                .zip(c)
                .filter(|(_, s)| !s.is_zero())
                .map(|(&k, s)| (k, s))
                .collect();
        }
    }
    let unit = |k: usize| {
        let mut e = vec![field.zero(); dim];
        e[k] = field.one();
        e
    };
    let idempotents = (0..n).map(|i| unit(blocks[&(i, i)].0[0])).collect();
    let radical = radical_positions.iter().map(|&k| (unit(k), None)).collect();
    let sc = ScAlgebra {
        name: name.into(),
        field,
        dim,
        table,
        vertex_labels: (1..=n).map(|i| i.to_string()).collect(),
        idempotents,
        radical,
    };
    Ok(EndoAlgebra {
        summands: summands.to_vec(),
        basis,
        sc,
    })
}

/// The bound quiver algebra presenting `End(T)`; vertex `i` is `T_i`.
pub fn quiver_presentation(b: &EndoAlgebra) -> Result<BoundQuiverAlgebra> {
    present(&b.sc)
}

/// Global dimension at most one.
pub fn is_hereditary(b: &Arc<BoundQuiverAlgebra>, cap: usize) -> Result<bool> {
    match global_dimension(b, cap) {
        Bounded::Exact(n) => Ok(n <= 1),
        Bounded::AtLeast(n) if n >= 2 => Ok(false),
        Bounded::AtLeast(_) => Err(Error::Undetermined {
            op: "is_hereditary",
            cap,
        }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Dynkin {
    A(usize),
    D(usize),
    E(usize),
}

impl fmt::Display for Dynkin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dynkin::A(n) => write!(f, "A{n}"),
            Dynkin::D(n) => write!(f, "D{n}"),
            Dynkin::E(n) => write!(f, "E{n}"),
        }
    }
}

/// Components of a Dynkin quiver, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinType(pub Vec<Dynkin>);

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Dynkin::to_string).collect();
        f.write_str(&parts.join(" × "))
    }
}

fn classify_tree(adj: &[Vec<usize>], comp: &[usize]) -> Option<Dynkin> {
    let n = comp.len();
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| adj[v].len() >= 3).collect();
    if comp.iter().any(|&v| adj[v].len() > 3) || branch.len() > 1 {
        return None;
    }
    let Some(&center) = branch.first() else {
        return Some(Dynkin::A(n));
    };
    let mut arms: Vec<usize> = adj[center]
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (center, start, 1);
            while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    arms.sort();
    match arms.as_slice() {
        [1, 1, _] => Some(Dynkin::D(n)),
        [1, 2, 2..=4] => Some(Dynkin::E(n)),
        _ => None,
    }
}

/// The Dynkin type of the underlying graph, or `None` when some component
/// is not a simply-laced Dynkin diagram or the quiver has loops, multiple
/// edges or cycles.
pub fn dynkin_type(q: &Quiver) -> Option<DynkinType> {
    let n = q.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for arr in q.arrows() {
        let (s, t) = (arr.source, arr.target);
        if s == t || adj[s].contains(&t) {
            return None;
        }
        adj[s].push(t);
        adj[t].push(s);
    }
    let mut seen = vec![false; n];
    let mut types = Vec::new();
    for v in 0..n {
        if seen[v] {
            continue;
        }
        let mut comp = vec![v];
        seen[v] = true;
        let mut k = 0;
        while k < comp.len() {
            for &w in &adj[comp[k]] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        let edges: usize = comp.iter().map(|&u| adj[u].len()).sum::<usize>() / 2;
        if edges + 1 != comp.len() {
            return None;
        }
        types.push(classify_tree(&adj, &comp)?);
    }
    types.sort();
    Some(DynkinType(types))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EstimateKind {
    Exact,
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "registry")]
    Registry,
    #[serde(rename = "rule:semisimple")]
    RuleSemisimple,
    #[serde(rename = "rule:hereditary-dynkin")]
    RuleHereditaryDynkin,
    #[serde(rename = "loewy-length")]
    LoewyLength,
    /// Carried over from a derived equivalent algebra.
    #[serde(rename = "derived-equivalence")]
    DerivedEquivalence,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerdimEstimate {
    pub kind: EstimateKind,
    pub value: usize,
    pub provenance: Provenance,
}

impl DerdimEstimate {
    pub fn is_exact(&self) -> bool {
        self.kind == EstimateKind::Exact
    }
}

impl fmt::Display for DerdimEstimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            EstimateKind::Exact => write!(f, "{} ({})", self.value, self.provenance),
            EstimateKind::Upper => write!(f, "<= {} ({})", self.value, self.provenance),
        }
    }
}

/// Known derived dimensions, one line each:
/// `derdim <name> = <n>` or `derdim <name> <= <n>`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Registry {
    exact: BTreeMap<String, usize>,
    upper: BTreeMap<String, usize>,
}

impl Registry {
    pub fn parse(text: &str) -> Result<Registry> {
        let mut reg = Registry::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = crate::algebra::strip_comment(raw).trim();
            if line.is_empty() {
                continue;
            }
            let err = || Error::Syntax {
                op: "parse_registry",
                line: lineno + 1,
                column: 1,
                message: "expected 'derdim <name> = <n>' or 'derdim <name> <= <n>'".into(),
            };
            let parts: Vec<&str> = line.split_whitespace().collect();
            let ["derdim", name, op, value] = parts.as_slice() else {
                return Err(err());
            };
            let value: usize = value.parse().map_err(|_| err())?;
            match *op {
                "=" => reg.exact.insert(name.to_string(), value),
                "<=" => reg.upper.insert(name.to_string(), value),
                _ => return Err(err()),
            };
        }
        Ok(reg)
    }

    pub fn exact(&self, name: &str) -> Option<usize> {
        self.exact.get(name).copied()
    }

    pub fn upper(&self, name: &str) -> Option<usize> {
        self.upper.get(name).copied()
    }

    pub fn insert_exact(&mut self, name: impl Into<String>, value: usize) {
        self.exact.insert(name.into(), value);
    }
}

/// Registry value first, then the semisimple and hereditary Dynkin rules
/// (both give zero), then the bound `LL(B) - 1`.
pub fn derdim_estimate(b: &Arc<BoundQuiverAlgebra>, registry: &Registry) -> Result<DerdimEstimate> {
    if b.is_zero() {
        return Err(Error::ZeroAlgebra { op: "derdim_estimate" });
    }
    let exact = |value, provenance| DerdimEstimate {
        kind: EstimateKind::Exact,
        value,
        provenance,
    };
    if let Some(v) = registry.exact(b.name()) {
        return Ok(exact(v, Provenance::Registry));
    }
    if b.quiver().arrows().is_empty() {
        return Ok(exact(0, Provenance::RuleSemisimple));
    }
    if dynkin_type(b.quiver()).is_some() && is_hereditary(b, GLDIM_CAP)? {
        return Ok(exact(0, Provenance::RuleHereditaryDynkin));
    }
    let loewy = loewy_length(b)? - 1;
    Ok(match registry.upper(b.name()) {
        Some(u) if u < loewy => DerdimEstimate {
            kind: EstimateKind::Upper,
            value: u,
            provenance: Provenance::Registry,
        },
        _ => DerdimEstimate {
            kind: EstimateKind::Upper,
            value: loewy,
            provenance: Provenance::LoewyLength,
        },
    })
}
