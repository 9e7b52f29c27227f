//! Derived dimension bound reports and the tilting check over `A/ann M`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{
    delete_vertices, factor_algebra, ideal_from_generators, loewy_length, nilpotency_index, BoundQuiverAlgebra,
    PresentationInvariants,
};
use crate::endo::{
    derdim_estimate, dynkin_type, endo_algebra, is_hereditary, quiver_presentation, DerdimEstimate, EstimateKind,
    Provenance, Registry, GLDIM_CAP,
};
use crate::error::{Error, Result};
use crate::rep::{decompose, ext1_dim, proj_dim, Bounded, Rep};
use crate::tau::{classify_pair, node_name, support_label, validate_stt_pair, Labeler, PairClass, PairStatus, SttPair};

/// Search cap for projective dimensions in the tilting check.
pub const PD_CAP: usize = 3;

pub const INAPPLICABLE_REASON: &str = "annihilator contains an idempotent; the bound requires a τ-tilting module";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundStatus {
    Tight,
    Satisfied,
    BoundOnly,
    Inapplicable,
}

impl std::fmt::Display for BoundStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BoundStatus::Tight => "tight",
            BoundStatus::Satisfied => "satisfied",
            BoundStatus::BoundOnly => "bound-only",
            BoundStatus::Inapplicable => "inapplicable",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundValue {
    pub kind: EstimateKind,
    pub value: usize,
}

/// Shape of a presented algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSummary {
    pub name: String,
    pub dim: usize,
    pub vertices: usize,
    pub arrows: Vec<String>,
    pub relations: Vec<String>,
}

impl AlgebraSummary {
    pub fn of(a: &BoundQuiverAlgebra) -> AlgebraSummary {
        let q = a.quiver();
        AlgebraSummary {
            name: a.name().to_string(),
            dim: a.dim(),
            vertices: a.vertex_count(),
            arrows: q
                .arrows()
                .iter()
                .map(|x| format!("{}: {} -> {}", x.label, q.vertices()[x.source], q.vertices()[x.target]))
                .collect(),
            relations: a.relations().iter().map(|r| r.display(q)).collect(),
        }
    }
}

/// `End(T)` with the data the bound needs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndoSummary {
    #[serde(flatten)]
    pub algebra: AlgebraSummary,
    pub hereditary: bool,
    pub dynkin: Option<String>,
}

impl EndoSummary {
    pub fn of(b: &Arc<BoundQuiverAlgebra>) -> Result<EndoSummary> {
        Ok(EndoSummary {
            algebra: AlgebraSummary::of(b),
            hereditary: !b.is_zero() && is_hereditary(b, GLDIM_CAP)?,
            dynkin: dynkin_type(b.quiver()).map(|t| t.to_string()),
        })
    }
}

/// The bound `der.dim A <= r(1 + der.dim B) - 1` for a support τ-tilting
/// pair, with `r` the nilpotency index of `ann M` and `B = End M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub algebra: String,
    pub pair: String,
    pub support: Vec<String>,
    pub classification: PairClass,
    pub annihilator_dim: usize,
    pub r: Option<usize>,
    pub endomorphism: Option<EndoSummary>,
    pub d_b: Option<DerdimEstimate>,
    pub rhs: Option<BoundValue>,
    pub loewy_rhs: usize,
    pub lhs: DerdimEstimate,
    pub status: BoundStatus,
    pub reason: Option<String>,
}

impl BoundReport {
    pub fn to_json(&self) -> String {
        canonical(self)
    }

    pub fn from_json(text: &str) -> Result<BoundReport> {
        serde_json::from_str(text).map_err(|e| Error::invalid("parse_report", e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "algebra: {}", self.algebra);
        let _ = writeln!(out, "pair: {}{}", self.pair, support_suffix(&self.support));
        let _ = writeln!(out, "class: {}", self.classification);
        let _ = writeln!(out, "dim ann M: {}", self.annihilator_dim);
        if let Some(r) = self.r {
            let _ = writeln!(out, "r: {r}");
        }
        if let Some(b) = &self.endomorphism {
            let _ = writeln!(
                out,
                "B: dim {}, {} vertices, {} arrows",
                b.algebra.dim,
                b.algebra.vertices,
                b.algebra.arrows.len()
            );
        }
        if let Some(d) = &self.d_b {
            let _ = writeln!(out, "der.dim B: {d}");
        }
        if let Some(rhs) = &self.rhs {
            let rel = if rhs.kind == EstimateKind::Exact { "" } else { "<= " };
            let _ = writeln!(out, "rhs: {rel}{}", rhs.value);
        }
        let _ = writeln!(out, "loewy rhs: {}", self.loewy_rhs);
        let _ = writeln!(out, "der.dim A: {}", self.lhs);
        let _ = writeln!(out, "status: {}", self.status);
        if let Some(reason) = &self.reason {
            let _ = writeln!(out, "reason: {reason}");
        }
        out
    }
}

/// Pretty JSON with keys sorted.
fn canonical(x: &impl Serialize) -> String {
    let v = serde_json::to_value(x).expect("report serializes");
    serde_json::to_string_pretty(&v).expect("json") + "\n"
}

fn support_suffix(support: &[String]) -> String {
    if support.is_empty() {
        String::new()
    } else {
        format!(" | {}", support.join("+"))
    }
}

/// A validated pair with its summands ordered by label.
struct Labelled {
    pair: SttPair,
    name: String,
    support: Vec<String>,
}

fn labelled(m: &Rep, support: &BTreeSet<usize>, op: &'static str) -> Result<Labelled> {
    let a = m.algebra();
    let v = validate_stt_pair(m, support)?;
    if v.status != PairStatus::ValidStt {
        let why = v.diagnostic.unwrap_or_default();
        return Err(Error::invalid(
            op,
            format!("not a support τ-tilting pair ({}): {why}", v.status),
        ));
    }
    let mut labeler = Labeler::new(a);
    let mut summands = decompose(m)?
        .summands
        .into_iter()
        .map(|s| Ok((labeler.label(&s.module)?, s.module)))
        .collect::<Result<Vec<_>>>()?;
    summands.sort_by(|x, y| x.0.cmp(&y.0));
    let labels: Vec<String> = summands.iter().map(|s| s.0.clone()).collect();
    Ok(Labelled {
        pair: SttPair {
            module: summands.into_iter().map(|s| s.1).collect(),
            support: support.clone(),
        },
        name: node_name(&labels),
        support: support.iter().map(|&v| support_label(a, v)).collect(),
    })
}

/// For a tilting module `A` and `B` are derived equivalent, so an exact
/// value on one side is exact on the other.
fn transfer(lhs: &mut DerdimEstimate, d_b: &mut DerdimEstimate) -> Result<()> {
    let carried = |v: usize| DerdimEstimate {
        kind: EstimateKind::Exact,
        value: v,
        provenance: Provenance::DerivedEquivalence,
    };
    match (lhs.is_exact(), d_b.is_exact()) {
        (true, false) => *d_b = carried(lhs.value),
        (false, true) => *lhs = carried(d_b.value),
        (true, true) if lhs.value != d_b.value => {
            return Err(Error::internal(
                "bound_report",
                format!(
                    "derived equivalent algebras with der.dim {} and {}",
                    lhs.value, d_b.value
                ),
            ))
        }
        _ => {}
    }
    Ok(())
}

pub fn bound_report(m: &Rep, support: &BTreeSet<usize>, registry: &Registry) -> Result<BoundReport> {
    const OP: &str = "bound_report";
    let a = m.algebra();
    let lab = labelled(m, support, OP)?;
    let classification = classify_pair(a, &lab.pair);
    let ann = ideal_from_generators(a, &m.annihilator());
    let loewy_rhs = loewy_length(a)? - 1;
    let mut lhs = derdim_estimate(a, registry)?;
    let mut report = BoundReport {
        algebra: a.name().to_string(),
        pair: lab.name,
        support: lab.support,
        classification,
        annihilator_dim: ann.dim(),
        r: None,
        endomorphism: None,
        d_b: None,
        rhs: None,
        loewy_rhs,
        lhs,
        status: BoundStatus::Inapplicable,
        reason: None,
    };
    if !m.is_sincere() {
        report.reason = Some(INAPPLICABLE_REASON.to_string());
        return Ok(report);
    }
    let r =
        nilpotency_index(a, &ann).map_err(|e| Error::internal(OP, format!("annihilator of a sincere module: {e}")))?;
    let name = format!("End({})", report.pair);
    let b = Arc::new(quiver_presentation(&endo_algebra(&lab.pair.module, name)?)?);
    let mut d_b = derdim_estimate(&b, registry)?;
    if classification == PairClass::Tilting {
        transfer(&mut lhs, &mut d_b)?;
    }
    let rhs = BoundValue {
        kind: d_b.kind,
        value: r * (1 + d_b.value) - 1,
    };
    if lhs.is_exact() && (lhs.value > rhs.value || lhs.value > loewy_rhs) {
        return Err(Error::internal(
            OP,
            format!(
                "der.dim A = {} exceeds rhs {} or loewy rhs {loewy_rhs}",
                lhs.value, rhs.value
            ),
        ));
    }
    report.status = match (lhs.is_exact(), d_b.is_exact()) {
        (true, true) if lhs.value == rhs.value => BoundStatus::Tight,
        (true, _) => BoundStatus::Satisfied,
        (false, _) => BoundStatus::BoundOnly,
    };
    report.r = Some(r);
    report.endomorphism = Some(EndoSummary::of(&b)?);
    report.d_b = Some(d_b);
    report.rhs = Some(rhs);
    report.lhs = lhs;
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ProxyChecks {
    pub projective_dimension: bool,
    pub self_extensions: bool,
    pub summand_count: bool,
    pub end_transport: bool,
}

/// Whether `M` is a classical tilting module over `C = (A/⟨e⟩)/ann M`, and
/// whether `End_C(M)` agrees with `End_A(M)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TiltingProxyReport {
    pub algebra: String,
    pub pair: String,
    pub support: Vec<String>,
    pub c: AlgebraSummary,
    pub projective_dimension: Bounded,
    pub ext1: usize,
    pub summands: usize,
    pub simples: usize,
    pub end_over_a: PresentationInvariants,
    pub end_over_c: PresentationInvariants,
    pub checks: ProxyChecks,
    pub passed: bool,
}

impl TiltingProxyReport {
    pub fn to_json(&self) -> String {
        canonical(self)
    }

    pub fn to_text(&self) -> String {
        let mark = |b: bool| if b { "ok" } else { "FAILED" };
        let mut out = String::new();
        let _ = writeln!(out, "pair: {}{}", self.pair, support_suffix(&self.support));
        let _ = writeln!(
            out,
            "C: {} (dim {}, {} vertices)",
            self.c.name, self.c.dim, self.c.vertices
        );
        let _ = writeln!(
            out,
            "pd_C M = {}  {}",
            self.projective_dimension,
            mark(self.checks.projective_dimension)
        );
        let _ = writeln!(
            out,
            "Ext1_C(M, M) = {}  {}",
            self.ext1,
            mark(self.checks.self_extensions)
        );
        let _ = writeln!(
            out,
            "|M| = {}, simples of C = {}  {}",
            self.summands,
            self.simples,
            mark(self.checks.summand_count)
        );
        let _ = writeln!(out, "End_C(M) = End_A(M)  {}", mark(self.checks.end_transport));
        out
    }
}

pub fn tilting_proxy_check(m: &Rep, support: &BTreeSet<usize>) -> Result<TiltingProxyReport> {
    const OP: &str = "tilting_proxy_check";
    let a = m.algebra();
    let lab = labelled(m, support, OP)?;
    let cq = Arc::new(delete_vertices(a, support)?);
    let mq = m.transport(&cq)?;
    let c = if cq.is_zero() {
        cq.clone()
    } else {
        let ann = ideal_from_generators(&cq, &mq.annihilator());
        Arc::new(factor_algebra(&cq, &ann)?)
    };
    let lift = |x: &Rep| {
        x.transport(&c)
            .map_err(|e| Error::internal(OP, format!("module over C: {e}")))
    };
    let mc = lift(m)?;
    let over_c: Vec<Rep> = lab.pair.module.iter().map(lift).collect::<Result<_>>()?;
    let pd = proj_dim(&mc, PD_CAP);
    let ext1 = ext1_dim(&mc, &mc);
    let end_a = PresentationInvariants::of(&quiver_presentation(&endo_algebra(&lab.pair.module, "End_A")?)?)?;
    let end_c = PresentationInvariants::of(&quiver_presentation(&endo_algebra(&over_c, "End_C")?)?)?;
    let checks = ProxyChecks {
        projective_dimension: matches!(pd, Bounded::Exact(k) if k <= 1),
        self_extensions: ext1 == 0,
        summand_count: over_c.len() == c.vertex_count(),
        end_transport: end_a == end_c,
    };
    let passed = checks.projective_dimension && checks.self_extensions && checks.summand_count && checks.end_transport;
    Ok(TiltingProxyReport {
        algebra: a.name().to_string(),
        pair: lab.name,
        support: lab.support,
        c: AlgebraSummary::of(&c),
        projective_dimension: pd,
        ext1,
        summands: over_c.len(),
        simples: c.vertex_count(),
        end_over_a: end_a,
        end_over_c: end_c,
        checks,
        passed,
    })
}
