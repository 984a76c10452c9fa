use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use super::branch::RuleId;
use crate::formula::Formula;

pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LeafMark {
    Closed,
    Open,
    /// Left pending because an open branch was found first.
    Unexplored,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub formula: Formula,
    pub rule: RuleId,
    pub parent: Option<NodeId>,
    pub children: Vec<NodeId>,
    pub mark: Option<LeafMark>,
}

/// Arena of tableau nodes; node 0 is the root.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TableauTree {
    nodes: Vec<Node>,
}

impl TableauTree {
    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub(crate) fn push(&mut self, formula: Formula, rule: RuleId, parent: Option<NodeId>) -> NodeId {
        let id = self.nodes.len();
        self.nodes.push(Node {
            formula,
            rule,
            parent,
            children: Vec::new(),
            mark: None,
        });
        if let Some(p) = parent {
            self.nodes[p].children.push(id);
        }
        id
    }

    pub(crate) fn mark(&mut self, id: NodeId, mark: LeafMark) {
        self.nodes[id].mark = Some(mark);
    }

    pub fn leaves(&self) -> impl Iterator<Item = &Node> {
        self.nodes.iter().filter(|n| n.children.is_empty())
    }

    pub fn all_leaves_closed(&self) -> bool {
        !self.nodes.is_empty() && self.leaves().all(|n| n.mark == Some(LeafMark::Closed))
    }

    /// Vertical rendering: one formula per line with its rule, splits drawn
    /// as `+--` arms, `x` under closed leaves.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if !self.nodes.is_empty() {
            self.render_from(0, "", &mut out);
        }
        out
    }

    fn render_from(&self, start: NodeId, prefix: &str, out: &mut String) {
        let mut id = start;
        loop {
            let node = &self.nodes[id];
            let _ = writeln!(out, "{prefix}{}   [{}]", node.formula, node.rule);
            match node.children.as_slice() {
                [] => {
                    let tag = match node.mark {
                        Some(LeafMark::Closed) => "x",
                        Some(LeafMark::Open) => "o (open)",
                        Some(LeafMark::Unexplored) | None => "? (unexplored)",
                    };
                    let _ = writeln!(out, "{prefix}{tag}");
                    return;
                }
                [only] => id = *only,
                many => {
                    for (i, &child) in many.iter().enumerate() {
                        let last = i + 1 == many.len();
                        let _ = writeln!(out, "{prefix}+--");
                        let inner = format!("{prefix}{}", if last { "    " } else { "|   " });
                        self.render_from(child, &inner, out);
                    }
                    return;
                }
            }
        }
    }

    /// Nested `{formula, rule, children}` objects; leaves carry `mark`.
    pub fn to_json(&self) -> Value {
        if self.nodes.is_empty() {
            return Value::Null;
        }
        self.node_json(0)
    }

    fn node_json(&self, id: NodeId) -> Value {
        let node = &self.nodes[id];
        let children: Vec<Value> = node.children.iter().map(|&c| self.node_json(c)).collect();
        let mut obj = json!({
            "formula": node.formula.to_string(),
            "rule": node.rule.label(),
            "children": children,
        });
        if let Some(mark) = node.mark {
            obj["mark"] = serde_json::to_value(mark).expect("mark serializes");
        }
        obj
    }
}
