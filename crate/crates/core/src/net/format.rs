//! Text formats for proof structures.
//!
//! The structure file is line oriented; `#` starts a comment line.
//!
//! ```text
//! logic mll
//! sequent A@B, (B*C)^ => C-oA
//! 0 - A@B              # node: id, sign, label
//! dlink times 0 1 2    # decomposition link: kind, conclusion, premises
//! clink 9 11 12        # contraction: conclusion, two premise copies
//! wlink 2 0 9          # weakening: host, weakened formula, premise copy
//! axlink 1 9
//! ```
//!
//! Nodes are the active positions of the decomposition (ids as assigned by
//! the decomposition) followed by the copies made for structural links.

use std::fmt::Write as _;
use std::sync::Arc;

use super::{build_skeleton, Frame, Link, LinkKind, Node, ProofStructure};
use crate::error::{Error, Result};
use crate::logic::{LogicId, PosId, Sign};
use crate::syntax::{parse_formula, parse_sequent};

pub fn to_structure_file(ps: &ProofStructure) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "logic {}", ps.logic().name());
    let _ = writeln!(out, "sequent {}", ps.sequent());
    for id in ps.active() {
        let n = ps.node(id);
        let _ = writeln!(out, "{id} {} {}", n.sign, n.label);
    }
    for l in ps.links() {
        let ids = |v: &[PosId]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ");
        let line = match l.kind {
            LinkKind::Contraction => format!("clink {} {}", ids(&l.conclusions), ids(&l.premises)),
            LinkKind::Weakening => format!("wlink {} {}", ids(&l.conclusions), ids(&l.premises)),
            kind => format!("dlink {} {} {}", kind.name(), ids(&l.conclusions), ids(&l.premises)),
        };
        let _ = writeln!(out, "{line}");
    }
    for (p, n) in ps.axioms() {
        let _ = writeln!(out, "axlink {p} {n}");
    }
    out
}

fn file_error(line: usize, message: impl Into<String>) -> Error {
    Error::StructureFile { line, message: message.into() }
}

fn parse_ids(line: usize, words: &[&str]) -> Result<Vec<PosId>> {
    words
        .iter()
        .map(|w| w.parse::<usize>().map(PosId).map_err(|_| file_error(line, format!("`{w}` is not a node id"))))
        .collect()
}

pub fn parse_structure_file(text: &str) -> Result<ProofStructure> {
    let mut logic: Option<LogicId> = None;
    let mut skeleton: Option<ProofStructure> = None;
    let mut listed: Vec<bool> = Vec::new();
    let mut extras: Vec<Node> = Vec::new();
    let mut links: Vec<(usize, Link)> = Vec::new();
    let mut axioms: Vec<(usize, PosId, PosId)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let (head, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        let words: Vec<&str> = rest.split_whitespace().collect();
        match head {
            "logic" => {
                logic = Some(rest.parse().map_err(|_| file_error(line, format!("unknown logic `{rest}`")))?);
            }
            "sequent" => {
                let l = logic.ok_or_else(|| file_error(line, "`logic` must precede `sequent`"))?;
                let seq = parse_sequent(rest, l).map_err(|e| file_error(line, e.to_string()))?;
                let sk = build_skeleton(&seq);
                listed = vec![false; sk.nodes().len()];
                skeleton = Some(sk);
            }
            _ => {
                let sk = skeleton.as_ref().ok_or_else(|| file_error(line, "`sequent` must come first"))?;
                match head {
                    "dlink" | "clink" | "wlink" => {
                        let (kind, ids) = match head {
                            "dlink" => {
                                let kind = match words.first().copied() {
                                    Some("times") => LinkKind::Times,
                                    Some("par") => LinkKind::Par,
                                    Some("unary") => LinkKind::Unary,
                                    other => {
                                        return Err(file_error(line, format!("unknown link kind {other:?}")));
                                    }
                                };
                                (kind, parse_ids(line, &words[1..])?)
                            }
                            "clink" => (LinkKind::Contraction, parse_ids(line, &words)?),
                            _ => (LinkKind::Weakening, parse_ids(line, &words)?),
                        };
                        let split = if kind == LinkKind::Weakening { 2 } else { 1 };
                        if ids.len() <= split {
                            return Err(Error::MalformedStructuralLink(format!(
                                "line {line}: `{head}` needs more than {split} node ids"
                            )));
                        }
                        let link = Link { kind, conclusions: ids[..split].to_vec(), premises: ids[split..].to_vec() };
                        links.push((line, link));
                    }
                    "axlink" => {
                        let ids = parse_ids(line, &words)?;
                        let [a, b] = ids[..] else {
                            return Err(file_error(line, "an axiom link joins two nodes"));
                        };
                        axioms.push((line, a, b));
                    }
                    _ => {
                        let id: usize =
                            head.parse().map_err(|_| file_error(line, format!("unknown directive `{head}`")))?;
                        let (sign, label) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                        let sign = match sign {
                            "+" => Sign::Pos,
                            "-" => Sign::Neg,
                            _ => return Err(file_error(line, format!("bad sign `{sign}`"))),
                        };
                        let label =
                            parse_formula(label.trim(), sk.logic()).map_err(|e| file_error(line, e.to_string()))?;
                        let node = Node { label, sign, active: true };
                        let n = sk.nodes().len();
                        if id < n {
                            let expected = sk.node(PosId(id));
                            if expected.label != node.label || expected.sign != node.sign {
                                return Err(file_error(
                                    line,
                                    format!("node {id} is {} in the decomposition", expected.signed()),
                                ));
                            }
                            listed[id] = true;
                        } else if id == n + extras.len() {
                            extras.push(node);
                        } else {
                            return Err(file_error(line, format!("copy ids must continue from {}", n + extras.len())));
                        }
                    }
                }
            }
        }
    }

    let sk = skeleton.ok_or_else(|| file_error(0, "missing `sequent` line"))?;
    let forest = sk.forest().clone();
    for &root in forest.roots() {
        if !listed[root.0] {
            return Err(Error::MalformedStructure(format!("sequent formula {} is missing", sk.render(root))));
        }
    }
    let mut nodes: Vec<Node> =
        sk.nodes().iter().zip(&listed).map(|(n, &on)| Node { active: on, ..n.clone() }).collect();
    nodes.extend(extras);
    let total = nodes.len();
    for (line, link) in &links {
        if let Some(bad) = link.conclusions.iter().chain(&link.premises).find(|p| p.0 >= total || !nodes[p.0].active) {
            return Err(file_error(*line, format!("node {bad} is not listed")));
        }
        if matches!(link.kind, LinkKind::Times | LinkKind::Par | LinkKind::Unary) {
            let c = link.conclusions[0];
            let expected = sk.links().iter().find(|l| l.conclusions[0] == c);
            if expected != Some(link) {
                return Err(file_error(*line, format!("link does not decompose node {c}")));
            }
        }
    }
    let links = links.into_iter().map(|(_, l)| l).collect();
    let frame = Frame { sequent: sk.sequent().clone(), forest, nodes, links };
    let ps = ProofStructure { frame: Arc::new(frame), axioms: Vec::new() };
    let mut pairs = Vec::new();
    for (line, a, b) in axioms {
        if a.0 >= total || b.0 >= total {
            return Err(file_error(line, "axiom link names an unknown node"));
        }
        ps.with_axioms([(a, b)]).map_err(|e| file_error(line, e.to_string()))?;
        pairs.push((a, b));
    }
    ps.with_axioms(pairs)
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering: times edges solid, par edges dotted, axiom links
/// curved and left out of rank constraints.
pub fn to_dot(ps: &ProofStructure) -> String {
    let mut out = String::from("graph proof_structure {\n  splines=curved;\n  node [shape=plaintext];\n");
    for id in ps.active() {
        let _ = writeln!(out, "  n{id} [label=\"{}\"];", dot_escape(&ps.render(id)));
    }
    for (i, l) in ps.links().iter().enumerate() {
        match l.kind {
            LinkKind::Weakening => {
                let _ = writeln!(out, "  w{i} [label=\"Weak\"];");
                for p in l.conclusions.iter().chain(&l.premises) {
                    let _ = writeln!(out, "  w{i} -- n{p} [style=solid];");
                }
            }
            kind => {
                let style = if kind.is_par() { "dotted" } else { "solid" };
                for p in &l.premises {
                    let _ = writeln!(out, "  n{} -- n{p} [style={style}];", l.conclusions[0]);
                }
            }
        }
    }
    for (p, n) in ps.axioms() {
        let _ = writeln!(out, "  n{p} -- n{n} [style=solid, constraint=false, class=axiom];");
    }
    out.push_str("}\n");
    out
}
