//! Walks the generating tree from the empty word.
//!
//! A node with `m` ones is expanded with every `h` in `1..=min(j, n - m)`, so a
//! single traversal towards `n` ones visits every admissible word with at most
//! `n` ones exactly once.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rules::{expand, Branch, Expansion};
use crate::word::{PatternParam, Word};

/// Maximum number of nodes `export_tree` will materialise.
pub const TREE_NODE_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Traversal {
    #[default]
    DepthFirst,
    BreadthFirst,
}

#[derive(Debug, Clone, Copy)]
pub struct GenerationConfig {
    pub pattern: PatternParam,
    pub n_target: usize,
    pub traversal: Traversal,
    /// Also yield the nodes with fewer than `n_target` ones.
    pub emit_intermediate: bool,
}

impl GenerationConfig {
    pub fn new(pattern: PatternParam, n_target: usize) -> GenerationConfig {
        GenerationConfig { pattern, n_target, traversal: Traversal::DepthFirst, emit_intermediate: false }
    }

    pub fn traversal(mut self, traversal: Traversal) -> Self {
        self.traversal = traversal;
        self
    }

    pub fn emit_intermediate(mut self, yes: bool) -> Self {
        self.emit_intermediate = yes;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParentEdge {
    pub parent: Word,
    pub h: usize,
    pub branch: Branch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationNode {
    pub word: Word,
    /// Endpoint ordinate, the label of the node in the succession rule.
    pub label: i32,
    pub ones: usize,
    pub parent_edge: Option<ParentEdge>,
}

impl GenerationNode {
    pub fn root() -> GenerationNode {
        GenerationNode { word: Word::empty(), label: 0, ones: 0, parent_edge: None }
    }

    fn child(parent: &Word, h: usize, word: Word, branch: Branch) -> GenerationNode {
        GenerationNode {
            label: word.endpoint(),
            ones: word.ones(),
            word,
            parent_edge: Some(ParentEdge { parent: parent.clone(), h, branch }),
        }
    }
}

/// All expansions of `node` towards `n_target` ones, in ascending `h`.
pub fn expansions_of(node: &GenerationNode, p: PatternParam, n_target: usize) -> Result<Vec<Expansion>> {
    let max_h = p.j().min(n_target.saturating_sub(node.ones));
    (1..=max_h).map(|h| expand(&node.word, h, p)).collect()
}

fn children_of(expansions: &[Expansion]) -> impl Iterator<Item = GenerationNode> + '_ {
    expansions.iter().flat_map(|e| {
        e.children
            .iter()
            .map(move |c| GenerationNode::child(&e.parent, e.h, c.word.clone(), c.branch))
    })
}

/// Streaming traversal of the generating tree.
///
/// Depth-first order is deterministic: children in ascending `h`, and for each
/// `h` in the order produced by the rules (descending ordinate, then the
/// child on the axis, then the underground child).
pub struct Generator {
    config: GenerationConfig,
    frontier: VecDeque<GenerationNode>,
    failed: bool,
    #[cfg(debug_assertions)]
    seen: std::collections::HashSet<Word>,
}

impl Generator {
    pub fn new(config: GenerationConfig) -> Generator {
        Generator {
            config,
            frontier: VecDeque::from([GenerationNode::root()]),
            failed: false,
            #[cfg(debug_assertions)]
            seen: Default::default(),
        }
    }
}

impl Iterator for Generator {
    type Item = Result<GenerationNode>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        let n = self.config.n_target;
        loop {
            let node = match self.config.traversal {
                Traversal::DepthFirst => self.frontier.pop_back()?,
                Traversal::BreadthFirst => self.frontier.pop_front()?,
            };
            if node.ones < n {
                let expansions = match expansions_of(&node, self.config.pattern, n) {
                    Ok(e) => e,
                    Err(e) => {
                        self.failed = true;
                        return Some(Err(e));
                    }
                };
                match self.config.traversal {
                    Traversal::DepthFirst => {
                        let children: Vec<_> = children_of(&expansions).collect();
                        self.frontier.extend(children.into_iter().rev());
                    }
                    Traversal::BreadthFirst => self.frontier.extend(children_of(&expansions)),
                }
            }
            if node.ones == n || self.config.emit_intermediate {
                #[cfg(debug_assertions)]
                debug_assert!(self.seen.insert(node.word.clone()), "duplicate word {}", node.word);
                return Some(Ok(node));
            }
        }
    }
}

/// Every admissible word with exactly `config.n_target` ones.
pub fn generate_all(config: GenerationConfig) -> Result<Vec<Word>> {
    let config = GenerationConfig { emit_intermediate: false, ..config };
    Generator::new(config).map(|r| r.map(|n| n.word)).collect()
}

/// Depth-first walk that hands every node and its expansions to `visit`.
/// Nodes with `n_target` ones get an empty expansion list.
pub fn walk(
    p: PatternParam,
    n_target: usize,
    mut visit: impl FnMut(&GenerationNode, &[Expansion]) -> Result<()>,
) -> Result<()> {
    let mut stack = vec![GenerationNode::root()];
    while let Some(node) = stack.pop() {
        let expansions = expansions_of(&node, p, n_target)?;
        visit(&node, &expansions)?;
        let children: Vec<_> = children_of(&expansions).collect();
        stack.extend(children.into_iter().rev());
    }
    Ok(())
}

/// `c[n]` = number of admissible words with `n` ones, for `n` in `0..=n_max`.
pub fn count_by_ones(p: PatternParam, n_max: usize) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; n_max + 1];
    walk(p, n_max, |node, _| {
        counts[node.ones] += 1;
        Ok(())
    })?;
    Ok(counts)
}

/// One line of the JSONL node format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeRecord {
    pub word: String,
    pub ones: usize,
    pub label: i32,
    pub parent: Option<String>,
    pub h: Option<usize>,
    pub branch: Option<String>,
}

impl From<&GenerationNode> for NodeRecord {
    fn from(node: &GenerationNode) -> NodeRecord {
        let edge = node.parent_edge.as_ref();
        NodeRecord {
            word: node.word.to_string(),
            ones: node.ones,
            label: node.label,
            parent: edge.map(|e| e.parent.to_string()),
            h: edge.map(|e| e.h),
            branch: edge.map(|e| e.branch.to_string()),
        }
    }
}

impl NodeRecord {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("node records serialise")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeFormat {
    Dot,
    Jsonl,
}

/// Nodes of the tree down to `n_max` ones, in depth-first order.
pub fn tree_nodes(p: PatternParam, n_max: usize, limit: usize) -> Result<Vec<GenerationNode>> {
    let mut nodes = Vec::new();
    for node in Generator::new(GenerationConfig::new(p, n_max).emit_intermediate(true)) {
        if nodes.len() == limit {
            return Err(Error::GuardExceeded { what: "tree node count", got: limit + 1, limit });
        }
        nodes.push(node?);
    }
    Ok(nodes)
}

fn dot_label(word: &Word, label: i32) -> String {
    let shown = if word.is_empty() { "ε".to_string() } else { word.to_string() };
    format!("{shown}\\n({label})")
}

/// Serialises the generating tree. In DOT output edges with `h >= 2` are dashed.
pub fn export_tree(p: PatternParam, n_max: usize, format: TreeFormat) -> Result<String> {
    let nodes = tree_nodes(p, n_max, TREE_NODE_LIMIT)?;
    let mut out = String::new();
    match format {
        TreeFormat::Jsonl => {
            for node in &nodes {
                out.push_str(&NodeRecord::from(node).to_json_line());
                out.push('\n');
            }
        }
        TreeFormat::Dot => {
            let ids: HashMap<&Word, usize> = nodes.iter().enumerate().map(|(i, n)| (&n.word, i)).collect();
            writeln!(out, "digraph generating_tree {{").unwrap();
            writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
            for (i, node) in nodes.iter().enumerate() {
                writeln!(out, "  n{i} [label=\"{}\"];", dot_label(&node.word, node.label)).unwrap();
            }
            for (i, node) in nodes.iter().enumerate() {
                if let Some(edge) = &node.parent_edge {
                    let style = if edge.h >= 2 { ", style=dashed" } else { "" };
                    writeln!(out, "  n{} -> n{i} [label=\"h={}\"{style}];", ids[&edge.parent], edge.h).unwrap();
                }
            }
            writeln!(out, "}}").unwrap();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn pj(j: usize) -> PatternParam {
        PatternParam::new(j).unwrap()
    }

    fn strings(words: &[Word]) -> BTreeSet<String> {
        words.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn small_levels() {
        assert_eq!(generate_all(GenerationConfig::new(pj(1), 0)).unwrap(), vec![Word::empty()]);
        let one = generate_all(GenerationConfig::new(pj(1), 1)).unwrap();
        assert_eq!(strings(&one), ["1", "10", "01"].iter().map(|s| s.to_string()).collect());
        let two = generate_all(GenerationConfig::new(pj(1), 2)).unwrap();
        let expect: BTreeSet<String> =
            ["11", "110", "011", "1100", "0110", "0011", "1001"].iter().map(|s| s.to_string()).collect();
        assert_eq!(two.len(), 7);
        assert_eq!(strings(&two), expect);
    }

    #[test]
    fn depth_first_order_is_fixed() {
        let words: Vec<String> =
            generate_all(GenerationConfig::new(pj(2), 2)).unwrap().iter().map(|w| w.to_string()).collect();
        // "1" then "10" then "01" at h = 1, followed by the h = 2 children of the root
        assert_eq!(words, ["11", "101", "1010", "1001", "011", "0110", "0101", "110", "1100", "0011"]);
    }

    #[test]
    fn breadth_first_yields_same_set() {
        for j in 1..=3 {
            let dfs = generate_all(GenerationConfig::new(pj(j), 4)).unwrap();
            let bfs = generate_all(GenerationConfig::new(pj(j), 4).traversal(Traversal::BreadthFirst)).unwrap();
            assert_eq!(strings(&dfs), strings(&bfs));
            assert_eq!(dfs.len(), bfs.len());
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_by_ones(pj(1), 2).unwrap(), vec![1, 3, 7]);
        assert_eq!(count_by_ones(pj(2), 1).unwrap(), vec![1, 3]);
        assert_eq!(count_by_ones(pj(5), 0).unwrap(), vec![1]);
    }

    #[test]
    fn intermediate_nodes_carry_edges() {
        let nodes: Vec<GenerationNode> = Generator::new(GenerationConfig::new(pj(1), 2).emit_intermediate(true))
            .collect::<Result<_>>()
            .unwrap();
        assert_eq!(nodes.len(), 1 + 3 + 7);
        assert!(nodes[0].parent_edge.is_none());
        for n in &nodes {
            assert_eq!(n.label, n.word.endpoint());
            assert_eq!(n.ones, n.word.ones());
        }
        let under = nodes.iter().find(|n| n.word.to_string() == "01").unwrap();
        let edge = under.parent_edge.as_ref().unwrap();
        assert_eq!((edge.parent.clone(), edge.h, edge.branch), (Word::empty(), 1, Branch::Underground));
    }

    #[test]
    fn dot_export() {
        let dot = export_tree(pj(2), 2, TreeFormat::Dot).unwrap();
        assert!(dot.starts_with("digraph generating_tree {\n"));
        assert!(dot.trim_end().ends_with('}'));
        assert!(dot.contains("n0 [label=\"ε\\n(0)\"];"));
        assert!(dot.contains("[label=\"h=2\", style=dashed]"));
        // root fan-out: three children per h
        assert_eq!(dot.matches("n0 -> ").count(), 6);
        let solid = dot.lines().filter(|l| l.contains("->") && !l.contains("dashed")).count();
        let dashed = dot.lines().filter(|l| l.contains("dashed")).count();
        assert_eq!(solid + dashed, count_by_ones(pj(2), 2).unwrap().iter().sum::<u64>() as usize - 1);
    }

    #[test]
    fn jsonl_export() {
        let text = export_tree(pj(1), 2, TreeFormat::Jsonl).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 11);
        assert_eq!(lines[0], r#"{"word":"","ones":0,"label":0,"parent":null,"h":null,"branch":null}"#);
        let levels: Vec<usize> = lines
            .iter()
            .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["ones"].as_u64().unwrap() as usize)
            .collect();
        assert_eq!(levels.iter().filter(|&&o| o == 1).count(), 3);
        assert_eq!(levels.iter().filter(|&&o| o == 2).count(), 7);
    }

    #[test]
    fn tree_guard() {
        assert!(matches!(tree_nodes(pj(1), 3, 10), Err(Error::GuardExceeded { .. })));
    }
}
