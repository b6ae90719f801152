//! Weyl orbit diagrams: the Hasse diagram of the weak order on an orbit `Wλ`.

use std::collections::BTreeSet;

use root_datum::RootDatum;
use serde_json::{json, Value};

use crate::error::WeylError;

/// A labelled Hasse diagram on a Weyl orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDiagram {
    /// The orbit, sorted.
    pub nodes: Vec<Vec<i64>>,
    /// Edges `μ →^{s_i} s_iμ`, drawn when `⟨μ, α_i⟩ < 0` (towards the dominant element).
    pub edges: Vec<(Vec<i64>, Vec<i64>, usize)>,
}

fn label(v: &[i64]) -> String {
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", s.join(","))
}

/// Builds the diagram of `Wλ` for dominant `λ`, oriented from `λ^opp` to `λ`.
pub fn weak_order_diagram(datum: &RootDatum, lambda: &[i64]) -> Result<OrbitDiagram, WeylError> {
    if !datum.is_dominant(lambda) {
        return Err(WeylError::NotDominant(lambda.to_vec()));
    }
    let nodes: BTreeSet<Vec<i64>> = datum.orbit(lambda);
    let mut edges = Vec::new();
    for mu in &nodes {
        for i in 1..=datum.num_simple() {
            let k = datum.pair(mu, datum.simple_root(i)).expect("orbit has datum rank");
            if k < 0 {
                edges.push((mu.clone(), datum.simple_reflect(mu, i), i));
            }
        }
    }
    Ok(OrbitDiagram {
        nodes: nodes.into_iter().collect(),
        edges,
    })
}

impl OrbitDiagram {
    /// Graphviz DOT rendering with deterministic node and edge order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph orbit {\n  rankdir=LR;\n");
        for n in &self.nodes {
            out.push_str(&format!("  \"{}\";\n", label(n)));
        }
        for (a, b, i) in &self.edges {
            out.push_str(&format!("  \"{}\" -> \"{}\" [label=\"s{}\"];\n", label(a), label(b), i));
        }
        out.push_str("}\n");
        out
    }

    /// JSON rendering: `{"nodes": [...], "edges": [{"from","to","label"}]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "nodes": self.nodes,
            "edges": self.edges.iter().map(|(a, b, i)| json!({"from": a, "to": b, "label": format!("s{i}")})).collect::<Vec<_>>(),
        })
    }

    /// For a chain-shaped diagram, the path from the unique source to the unique sink.
    pub fn chain(&self) -> Option<Vec<(Vec<i64>, usize)>> {
        let sources: Vec<&Vec<i64>> = self
            .nodes
            .iter()
            .filter(|n| !self.edges.iter().any(|(_, b, _)| b == *n))
            .collect();
        if sources.len() != 1 {
            return None;
        }
        let mut cur = sources[0].clone();
        let mut path = Vec::new();
        loop {
            let out: Vec<_> = self.edges.iter().filter(|(a, _, _)| *a == cur).collect();
            match out.as_slice() {
                [] => break,
                [(_, b, i)] => {
                    path.push((cur.clone(), *i));
                    cur = b.clone();
                }
                _ => return None,
            }
        }
        path.push((cur, 0));
        (path.len() == self.nodes.len()).then_some(path)
    }
}
