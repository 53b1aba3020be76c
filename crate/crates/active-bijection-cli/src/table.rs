//! One row per spanning tree: active filtration, active partition, activity
//! class and tree.

use std::fmt::Write as _;

use active_bijection::activity::tree_activities;
use active_bijection::bijection::{tree_active_data, tree_active_filtration};
use active_bijection::{EdgeSet, OrderedGraph, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TableRow {
    /// The filtration with its cyclic flat in brackets.
    pub filtration: String,
    pub cyclic_flat: Vec<usize>,
    /// Parts sorted by smallest edge, each marked cyclic or not.
    pub partition: Vec<PartRow>,
    /// Reorientation sets of the class relative to the stored directions,
    /// sorted.
    pub class: Vec<Vec<usize>>,
    pub tree: Vec<usize>,
    pub internal: Vec<usize>,
    pub external: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PartRow {
    pub edges: Vec<usize>,
    pub cyclic: bool,
}

/// Rows sorted by tree.
pub fn build_table(g: &OrderedGraph) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for t in g.spanning_trees()? {
        let data = tree_active_data(g, t, None)?;
        let f = tree_active_filtration(g, t)?;
        let acts = tree_activities(g, t)?;
        rows.push(TableRow {
            filtration: f.to_string(),
            cyclic_flat: f.cyclic_flat().ranks(),
            partition: data
                .partition
                .parts
                .iter()
                .map(|p| PartRow {
                    edges: p.edges.ranks(),
                    cyclic: p.edges.is_subset(f.cyclic_flat()),
                })
                .collect(),
            class: data.preimages.iter().map(|a| a.ranks()).collect(),
            tree: t.ranks(),
            internal: acts.internal.ranks(),
            external: acts.external.ranks(),
        });
    }
    Ok(rows)
}

fn set(ranks: &[usize]) -> String {
    EdgeSet::of(ranks).to_string()
}

fn braces(ranks: &[usize]) -> String {
    let inner: Vec<String> = ranks.iter().map(|r| r.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Plain text, one line per row. Cyclic parts are marked with `*`.
pub fn render_text(rows: &[TableRow]) -> String {
    let cells: Vec<[String; 4]> = rows
        .iter()
        .map(|r| {
            let parts: Vec<String> = r
                .partition
                .iter()
                .map(|p| format!("{}{}", set(&p.edges), if p.cyclic { "*" } else { "" }))
                .collect();
            let class: Vec<String> = r.class.iter().map(|a| braces(a)).collect();
            [
                r.filtration.clone(),
                parts.join("+"),
                class.join(" "),
                set(&r.tree),
            ]
        })
        .collect();
    let header = ["filtration", "partition", "class", "tree"];
    let mut width = header.map(|h| h.chars().count());
    for c in &cells {
        for (w, s) in width.iter_mut().zip(c) {
            *w = (*w).max(s.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |c: &[String]| {
        let padded: Vec<String> = c
            .iter()
            .zip(width)
            .map(|(s, w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
            .collect();
        let _ = writeln!(out, "{}", padded.join(" | ").trim_end());
    };
    line(&header.map(String::from));
    for c in &cells {
        line(c);
    }
    out
}

pub fn render_json(rows: &[TableRow]) -> String {
    serde_json::to_string_pretty(rows).expect("plain data serializes")
}
