//! Breadth-first enumeration of the support τ-tilting exchange graph.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};

use super::mutation::{Direction, Mutator, SummandRef};
use super::pair::{classify_pair, node_name, support_label, Labeler, PairClass, SttPair};

pub const DEFAULT_MAX_NODES: usize = 4096;

#[derive(Clone, Debug)]
pub struct Node {
    pub name: String,
    /// Sorted labels of the module part.
    pub labels: Vec<String>,
    pub pair: SttPair,
    pub class: PairClass,
}

/// `source → target`, where the module part of `source` generates that of
/// `target`; `label` names the summand of `source` that is exchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

#[derive(Clone, Debug)]
pub struct ExchangeGraph {
    pub algebra: Arc<BoundQuiverAlgebra>,
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
}

struct Builder {
    labeler: Labeler,
    nodes: Vec<Node>,
    index: HashMap<String, usize>,
    max_nodes: usize,
}

impl Builder {
    fn labels(&mut self, pair: &SttPair) -> Result<Vec<String>> {
        let mut labels = pair
            .module
            .iter()
            .map(|m| self.labeler.label(m))
            .collect::<Result<Vec<_>>>()?;
        labels.sort();
        Ok(labels)
    }

    /// Index of the node for `pair`, and whether it is new.
    fn intern(&mut self, algebra: &Arc<BoundQuiverAlgebra>, pair: SttPair) -> Result<(usize, bool)> {
        let labels = self.labels(&pair)?;
        let name = node_name(&labels);
        if let Some(&i) = self.index.get(&name) {
            return Ok((i, false));
        }
        if self.nodes.len() == self.max_nodes {
            return Err(Error::BudgetExceeded(self.max_nodes));
        }
        let class = classify_pair(algebra, &pair);
        self.index.insert(name.clone(), self.nodes.len());
        self.nodes.push(Node {
            name,
            labels,
            pair,
            class,
        });
        Ok((self.nodes.len() - 1, true))
    }
}

pub fn enumerate_stt(algebra: &Arc<BoundQuiverAlgebra>, max_nodes: usize) -> Result<ExchangeGraph> {
    let mutator = Mutator::new(algebra);
    let mut b = Builder {
        labeler: Labeler::new(algebra),
        nodes: Vec::new(),
        index: HashMap::new(),
        max_nodes,
    };
    let mut edges: Vec<Edge> = Vec::new();
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let (root, _) = b.intern(algebra, SttPair::root(algebra))?;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let pair = b.nodes[u].pair.clone();
        let refs: Vec<SummandRef> = (0..pair.module.len())
            .map(SummandRef::Module)
            .chain(pair.support.iter().map(|&v| SummandRef::Support(v)))
            .collect();
        for at in refs {
            let m = mutator.mutate(&pair, at)?;
            let (v, fresh) = b.intern(algebra, m.pair)?;
            if fresh {
                queue.push_back(v);
            }
            let (s, t) = match m.direction {
                Direction::Left => (u, v),
                Direction::Right => (v, u),
            };
            if seen.insert((s, t)) {
                let removed: Vec<&String> = b.nodes[s]
                    .labels
                    .iter()
                    .filter(|l| !b.nodes[t].labels.contains(l))
                    .collect();
                let [label] = removed.as_slice() else {
                    return Err(Error::internal("enumerate_stt", "edge does not exchange one summand"));
                };
                edges.push(Edge {
                    source: s,
                    target: t,
                    label: (*label).clone(),
                });
            }
        }
    }
    edges.sort_by_key(|e| (e.source, e.target));
    Ok(ExchangeGraph {
        algebra: algebra.clone(),
        nodes: b.nodes,
        edges,
    })
}

impl ExchangeGraph {
    pub fn node(&self, name: &str) -> Option<&Node> {
        self.nodes.iter().find(|n| n.name == name)
    }

    pub fn node_names(&self) -> Vec<&str> {
        self.nodes.iter().map(|n| n.name.as_str()).collect()
    }

    /// Edges as `(source name, target name)`.
    pub fn edge_names(&self) -> Vec<(&str, &str)> {
        self.edges
            .iter()
            .map(|e| (self.nodes[e.source].name.as_str(), self.nodes[e.target].name.as_str()))
            .collect()
    }

    /// Number of edges at node `i`, in either direction.
    pub fn degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|e| e.source == i || e.target == i).count()
    }

    fn support_names(&self, node: &Node) -> Vec<String> {
        node.pair
            .support
            .iter()
            .map(|&v| support_label(&self.algebra, v))
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", self.algebra.name());
        for n in &self.nodes {
            if n.class == PairClass::TauTiltingNotTilting {
                let _ = writeln!(out, "  \"{}\" [color=red, fontcolor=red];", n.name);
            } else {
                let _ = writeln!(out, "  \"{}\";", n.name);
            }
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                self.nodes[e.source].name, self.nodes[e.target].name, e.label
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        let nodes: Vec<Value> = self
            .nodes
            .iter()
            .map(|n| {
                json!({
                    "name": n.name,
                    "summands": n.labels,
                    "support": self.support_names(n),
                    "class": n.class,
                })
            })
            .collect();
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|e| {
                json!({
                    "source": self.nodes[e.source].name,
                    "target": self.nodes[e.target].name,
                    "label": e.label,
                })
            })
            .collect();
        json!({
            "algebra": self.algebra.name(),
            "root": self.nodes.first().map(|n| n.name.as_str()),
            "nodes": nodes,
            "edges": edges,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} nodes, {} edges\n", self.nodes.len(), self.edges.len());
        for n in &self.nodes {
            let support = self.support_names(n);
            let support = if support.is_empty() {
                String::new()
            } else {
                format!(" | {}", support.join("+"))
            };
            let _ = writeln!(out, "{}{}  [{}]", n.name, support, n.class);
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "{} -> {}  ({})",
                self.nodes[e.source].name, self.nodes[e.target].name, e.label
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::test_reps::*;

    #[test]
    fn example_graph() {
        let g = enumerate_stt(&ex_a(), DEFAULT_MAX_NODES).unwrap();
        let mut names = g.node_names();
        names.sort();
        assert_eq!(names, ["0", "P1+P2", "P1+S1", "P2", "S1"]);
        let mut edges = g.edge_names();
        edges.sort();
        assert_eq!(
            edges,
            [
                ("P1+P2", "P1+S1"),
                ("P1+P2", "P2"),
                ("P1+S1", "S1"),
                ("P2", "0"),
                ("S1", "0")
            ]
        );
        assert!(g.to_dot().contains("\"P1+S1\" [color=red, fontcolor=red];"));
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_stt(&a2(), DEFAULT_MAX_NODES).unwrap().nodes.len(), 5);
        assert_eq!(enumerate_stt(&k2(), DEFAULT_MAX_NODES).unwrap().nodes.len(), 4);
    }

    #[test]
    fn empty_graph_dot() {
        let g = ExchangeGraph {
            algebra: ex_a(),
            nodes: vec![],
            edges: vec![],
        };
        assert_eq!(g.to_dot(), "digraph \"exA\" {\n}\n");
        assert!(g.to_json()["root"].is_null());
    }

    #[test]
    fn budget() {
        assert_eq!(enumerate_stt(&a2(), 3).unwrap_err(), Error::BudgetExceeded(3));
    }
}
