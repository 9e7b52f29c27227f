//! Support τ-tilting pairs: validation, classification and labels.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::algebra::{delete_vertices, BoundQuiverAlgebra};
use crate::error::{Error, Result};
use crate::rep::{decompose, is_isomorphic, Rep};

use super::is_tau_rigid;

/// A pair `(M, P)` with `M` given by its indecomposable summands over `A`
/// and `P = ⊕_{i ∈ support} P(i)`.
#[derive(Clone, Debug)]
pub struct SttPair {
    pub module: Vec<Rep>,
    pub support: BTreeSet<usize>,
}

impl SttPair {
    /// `(A, 0)` with `A` split into its indecomposable projectives.
    pub fn root(algebra: &Arc<BoundQuiverAlgebra>) -> SttPair {
        SttPair {
            module: (0..algebra.vertex_count())
                .map(|i| Rep::projective(algebra, i))
                .collect(),
            support: BTreeSet::new(),
        }
    }

    pub fn module_sum(&self, algebra: &Arc<BoundQuiverAlgebra>) -> Rep {
        Rep::direct_sum_all(algebra, &self.module)
    }

    /// `|M| + |P|`.
    pub fn size(&self) -> usize {
        self.module.len() + self.support.len()
    }
}

/// Vertex-deletion quotients of one algebra, computed once each.
pub struct Quotients {
    algebra: Arc<BoundQuiverAlgebra>,
    cache: Mutex<BTreeMap<BTreeSet<usize>, Arc<BoundQuiverAlgebra>>>,
}

impl Quotients {
    pub fn new(algebra: &Arc<BoundQuiverAlgebra>) -> Quotients {
        Quotients {
            algebra: algebra.clone(),
            cache: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.algebra
    }

    /// `A / ⟨e⟩`.
    pub fn get(&self, deleted: &BTreeSet<usize>) -> Result<Arc<BoundQuiverAlgebra>> {
        if deleted.is_empty() {
            return Ok(self.algebra.clone());
        }
        let mut cache = self.cache.lock().expect("quotient cache");
        if let Some(c) = cache.get(deleted) {
            return Ok(c.clone());
        }
        let c = Arc::new(delete_vertices(&self.algebra, deleted)?);
        cache.insert(deleted.clone(), c.clone());
        Ok(c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairStatus {
    ValidStt,
    TauRigidOnly,
    Invalid,
}

impl fmt::Display for PairStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairStatus::ValidStt => "valid-stt",
            PairStatus::TauRigidOnly => "tau-rigid-only",
            PairStatus::Invalid => "invalid",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub status: PairStatus,
    /// The first condition that failed.
    pub diagnostic: Option<String>,
}

impl Validation {
    fn fail(status: PairStatus, msg: impl Into<String>) -> Validation {
        Validation {
            status,
            diagnostic: Some(msg.into()),
        }
    }
}

pub fn validate_stt_pair(m: &Rep, support: &BTreeSet<usize>) -> Result<Validation> {
    validate_with(&Quotients::new(m.algebra()), m, support)
}

pub(crate) fn validate_with(quotients: &Quotients, m: &Rep, support: &BTreeSet<usize>) -> Result<Validation> {
    let a = quotients.algebra();
    let labels = a.quiver().vertices();
    if let Some(&v) = support.iter().find(|&&v| v >= a.vertex_count()) {
        return Err(Error::invalid(
            "validate_stt_pair",
            format!("vertex index {v} out of range"),
        ));
    }
    if let Some(&v) = support.iter().find(|&&v| m.dims()[v] > 0) {
        return Ok(Validation::fail(
            PairStatus::Invalid,
            format!("module is nonzero at deleted vertex {}", labels[v]),
        ));
    }
    let d = decompose(m)?;
    if !d.is_basic() {
        return Ok(Validation::fail(PairStatus::Invalid, "module is not basic"));
    }
    let c = quotients.get(support)?;
    let mc = m.transport(&c)?;
    if !is_tau_rigid(&mc) {
        return Ok(Validation::fail(PairStatus::Invalid, "Hom(M, τM) ≠ 0 over A/⟨e⟩"));
    }
    let expected = a.vertex_count() - support.len();
    if d.summands.len() != expected {
        return Ok(Validation::fail(
            PairStatus::TauRigidOnly,
            format!("|M| = {} but A/⟨e⟩ has {expected} vertices", d.summands.len()),
        ));
    }
    Ok(Validation {
        status: PairStatus::ValidStt,
        diagnostic: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairClass {
    Tilting,
    TauTiltingNotTilting,
    ProperSupport,
    Zero,
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairClass::Tilting => "tilting",
            PairClass::TauTiltingNotTilting => "tau-tilting-not-tilting",
            PairClass::ProperSupport => "proper-support",
            PairClass::Zero => "zero",
        })
    }
}

/// Faithful means tilting, sincere means τ-tilting.
pub fn classify_pair(algebra: &Arc<BoundQuiverAlgebra>, pair: &SttPair) -> PairClass {
    let m = pair.module_sum(algebra);
    if m.is_zero() {
        PairClass::Zero
    } else if m.is_faithful() {
        PairClass::Tilting
    } else if m.is_sincere() {
        PairClass::TauTiltingNotTilting
    } else {
        PairClass::ProperSupport
    }
}

/// Stable names for indecomposables: `P<v>`, `S<v>`, `I<v>` in that order
/// of preference, otherwise `M(d1,d2,...)` numbered by discovery.
pub struct Labeler {
    standard: Vec<(String, Rep)>,
    extra: Vec<(String, Rep)>,
}

impl Labeler {
    pub fn new(algebra: &Arc<BoundQuiverAlgebra>) -> Labeler {
        let labels = algebra.quiver().vertices();
        let mut standard = Vec::new();
        for (kind, make) in [
            ("P", Rep::projective as fn(&Arc<BoundQuiverAlgebra>, usize) -> Rep),
            ("S", Rep::simple),
            ("I", Rep::injective),
        ] {
            for (v, l) in labels.iter().enumerate() {
                standard.push((format!("{kind}{l}"), make(algebra, v)));
            }
        }
        Labeler {
            standard,
            extra: Vec::new(),
        }
    }

    pub fn label(&mut self, x: &Rep) -> Result<String> {
        for (name, m) in self.standard.iter().chain(&self.extra) {
            if m.dims() == x.dims() && is_isomorphic(m, x)? {
                return Ok(name.clone());
            }
        }
        let dims: Vec<String> = x.dims().iter().map(usize::to_string).collect();
        let base = format!("M({})", dims.join(","));
        let same = self.extra.iter().filter(|(_, m)| m.dims() == x.dims()).count();
        let name = if same == 0 {
            base
        } else {
            format!("{base}#{}", same + 1)
        };
        self.extra.push((name.clone(), x.clone()));
        Ok(name)
    }
}

pub fn support_label(algebra: &BoundQuiverAlgebra, v: usize) -> String {
    format!("P{}[1]", algebra.quiver().vertices()[v])
}

/// Sorted summand labels joined by `+`, or `0`.
pub fn node_name(labels: &[String]) -> String {
    if labels.is_empty() {
        return "0".to_string();
    }
    let mut sorted = labels.to_vec();
    sorted.sort();
    sorted.join("+")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::test_reps::*;

    #[test]
    fn example_pairs() {
        let a = ex_a();
        let t = Rep::projective(&a, 0).direct_sum(&Rep::simple(&a, 0));
        assert_eq!(
            validate_stt_pair(&t, &BTreeSet::new()).unwrap().status,
            PairStatus::ValidStt
        );
        let s1 = Rep::simple(&a, 0);
        assert_eq!(
            validate_stt_pair(&s1, &BTreeSet::from([1])).unwrap().status,
            PairStatus::ValidStt
        );
        let p1 = validate_stt_pair(&Rep::projective(&a, 0), &BTreeSet::new()).unwrap();
        assert_eq!(p1.status, PairStatus::TauRigidOnly);
        assert!(p1.diagnostic.unwrap().contains("|M| = 1"));
        let bad = validate_stt_pair(&Rep::simple(&a, 1), &BTreeSet::from([1])).unwrap();
        assert_eq!(bad.status, PairStatus::Invalid);
        let s2 = validate_stt_pair(&Rep::simple(&a, 1), &BTreeSet::new()).unwrap();
        assert_eq!(s2.status, PairStatus::Invalid);
    }

    #[test]
    fn classes() {
        let a = ex_a();
        assert_eq!(classify_pair(&a, &SttPair::root(&a)), PairClass::Tilting);
        let t = SttPair {
            module: vec![Rep::projective(&a, 0), Rep::simple(&a, 0)],
            support: BTreeSet::new(),
        };
        assert_eq!(classify_pair(&a, &t), PairClass::TauTiltingNotTilting);
        let s = SttPair {
            module: vec![Rep::simple(&a, 0)],
            support: BTreeSet::from([1]),
        };
        assert_eq!(classify_pair(&a, &s), PairClass::ProperSupport);
        let z = SttPair {
            module: vec![],
            support: BTreeSet::from([0, 1]),
        };
        assert_eq!(classify_pair(&a, &z), PairClass::Zero);
    }

    #[test]
    fn labels() {
        let a = a2();
        let mut l = Labeler::new(&a);
        assert_eq!(l.label(&Rep::injective(&a, 1)).unwrap(), "P1");
        assert_eq!(l.label(&Rep::simple(&a, 1)).unwrap(), "P2");
        assert_eq!(l.label(&Rep::simple(&a, 0)).unwrap(), "S1");
        assert_eq!(node_name(&["S1".into(), "P1".into()]), "P1+S1");
        assert_eq!(node_name(&[]), "0");
    }
}
