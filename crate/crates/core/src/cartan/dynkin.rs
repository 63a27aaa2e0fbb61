//! Dynkin diagrams: extraction, recognition, and text rendering.
//!
//! ASCII conventions: nodes are `o`; a simple edge is `---`; double and
//! triple edges are `===` and `≡≡≡` with the middle glyph replaced by `>`
//! or `<` pointing at the short root; any other multiplicity `m` is drawn
//! `-m-`. The longest path is drawn on one line and a node hanging off it
//! is drawn below its neighbour, joined by `|`. Components are separated by
//! a blank line. Diagrams that are not trees of this shape are listed edge
//! by edge.

use std::collections::VecDeque;
use std::fmt::Write;

use super::{CartanMatrix, CartanType};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinEdge {
    pub i: usize,
    pub j: usize,
    pub multiplicity: u32,
    /// The node the arrow points at (the shorter root), for unequal lengths.
    pub arrow_to: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    pub nodes: usize,
    /// Sorted by `(i, j)` with `i < j`.
    pub edges: Vec<DynkinEdge>,
}

impl DynkinDiagram {
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|e| if e.i == v { Some(e.j) } else if e.j == v { Some(e.i) } else { None })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn edge(&self, a: usize, b: usize) -> Option<&DynkinEdge> {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        self.edges.iter().find(|e| e.i == i && e.j == j)
    }

    /// Connected components, each sorted, ordered by smallest node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.nodes];
        let mut out = Vec::new();
        for s in 0..self.nodes {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbours(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

pub fn dynkin(a: &CartanMatrix) -> DynkinDiagram {
    let l = a.rank();
    let mut edges = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            let (aij, aji) = (a.entry(i, j), a.entry(j, i));
            if aij == 0 && aji == 0 {
                continue;
            }
            let multiplicity = (aij * aji).unsigned_abs() as u32;
            let arrow_to = match aij.abs().cmp(&aji.abs()) {
                std::cmp::Ordering::Greater => Some(i),
                std::cmp::Ordering::Less => Some(j),
                std::cmp::Ordering::Equal => None,
            };
            edges.push(DynkinEdge { i, j, multiplicity, arrow_to });
        }
    }
    DynkinDiagram { nodes: l, edges }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognized {
    Finite { ty: CartanType, rank: usize, nodes: Vec<usize> },
    NotFinite { nodes: Vec<usize> },
}

impl Recognized {
    pub fn label(&self) -> Option<(CartanType, usize)> {
        match self {
            Recognized::Finite { ty, rank, .. } => Some((*ty, *rank)),
            Recognized::NotFinite { .. } => None,
        }
    }

    pub fn nodes(&self) -> &[usize] {
        match self {
            Recognized::Finite { nodes, .. } | Recognized::NotFinite { nodes } => nodes,
        }
    }
}

fn classify_component(d: &DynkinDiagram, nodes: &[usize]) -> Option<(CartanType, usize)> {
    let n = nodes.len();
    let edges: Vec<&DynkinEdge> = d.edges.iter().filter(|e| nodes.contains(&e.i)).collect();
    if n == 1 {
        return Some((CartanType::A, 1));
    }
    if edges.len() != n - 1 {
        return None;
    }
    let degree = |v: usize| d.neighbours(v).len();
    let multi: Vec<&&DynkinEdge> = edges.iter().filter(|e| e.multiplicity > 1).collect();
    if multi.len() > 1 || edges.iter().any(|e| e.multiplicity > 3) {
        return None;
    }
    let is_path = nodes.iter().all(|&v| degree(v) <= 2);
    if let Some(e) = multi.first() {
        e.arrow_to?;
        if !is_path {
            return None;
        }
        return match (e.multiplicity, n) {
            (3, 2) => Some((CartanType::G, 2)),
            (3, _) => None,
            (_, 2) => Some((CartanType::B, 2)),
            _ => {
                let end = [e.i, e.j].into_iter().find(|&v| degree(v) == 1);
                match end {
                    Some(v) if e.arrow_to == Some(v) => Some((CartanType::B, n)),
                    Some(_) => Some((CartanType::C, n)),
                    None if n == 4 => Some((CartanType::F, 4)),
                    None => None,
                }
            }
        };
    }
    if is_path {
        return Some((CartanType::A, n));
    }
    let branches: Vec<usize> = nodes.iter().copied().filter(|&v| degree(v) >= 3).collect();
    if branches.len() != 1 || degree(branches[0]) != 3 {
        return None;
    }
    let centre = branches[0];
    let mut arms: Vec<usize> = d
        .neighbours(centre)
        .into_iter()
        .map(|start| {
            let (mut prev, mut cur, mut len) = (centre, start, 1);
            loop {
                let next: Vec<usize> = d.neighbours(cur).into_iter().filter(|&w| w != prev).collect();
                match next.as_slice() {
                    [w] => {
                        prev = cur;
                        cur = *w;
                        len += 1;
                    }
                    _ => return len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, r] => Some((CartanType::D, r + 3)),
        [1, 2, 2] => Some((CartanType::E, 6)),
        [1, 2, 3] => Some((CartanType::E, 7)),
        [1, 2, 4] => Some((CartanType::E, 8)),
        _ => None,
    }
}

/// Matches each connected component against the finite-type catalogue.
/// `B_2` and `C_2` are the same diagram and are reported as `B_2`.
pub fn recognize(d: &DynkinDiagram) -> Vec<Recognized> {
    d.components()
        .into_iter()
        .map(|nodes| match classify_component(d, &nodes) {
            Some((ty, rank)) => Recognized::Finite { ty, rank, nodes },
            None => Recognized::NotFinite { nodes },
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramFormat {
    Ascii,
    Dot,
}

pub fn render_dynkin(d: &DynkinDiagram, format: DiagramFormat) -> String {
    match format {
        DiagramFormat::Ascii => {
            d.components().iter().map(|c| render_component(d, c)).collect::<Vec<_>>().join("\n\n")
        }
        DiagramFormat::Dot => render_dot(d),
    }
}

fn glyph(e: &DynkinEdge, right: usize) -> String {
    let arrow = match e.arrow_to {
        Some(v) if v == right => '>',
        Some(_) => '<',
        None => ' ',
    };
    match (e.multiplicity, arrow) {
        (1, _) => "---".into(),
        (2, ' ') => "===".into(),
        (2, a) => format!("={a}="),
        (3, ' ') => "≡≡≡".into(),
        (3, a) => format!("≡{a}≡"),
        (m, _) => format!("-{m}-"),
    }
}

/// Farthest node from `s` within the component, smallest index on ties,
/// with parent pointers for path recovery.
fn farthest(d: &DynkinDiagram, s: usize) -> (usize, Vec<Option<usize>>) {
    let mut dist = vec![usize::MAX; d.nodes];
    let mut parent = vec![None; d.nodes];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    let mut best = s;
    while let Some(v) = queue.pop_front() {
        if dist[v] > dist[best] || (dist[v] == dist[best] && v < best) {
            best = v;
        }
        for w in d.neighbours(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    (best, parent)
}

fn render_component(d: &DynkinDiagram, nodes: &[usize]) -> String {
    if nodes.len() == 1 {
        return "o".into();
    }
    let edge_count = d.edges.iter().filter(|e| nodes.contains(&e.i)).count();
    if edge_count == nodes.len() - 1 {
        let (a, _) = farthest(d, nodes[0]);
        let (b, parent) = farthest(d, a);
        let mut spine = vec![b];
        while let Some(p) = parent[*spine.last().expect("nonempty")] {
            spine.push(p);
        }
        if spine[0] > spine[spine.len() - 1] {
            spine.reverse();
        }
        let mut hanging: Vec<(usize, usize)> = Vec::new();
        let mut drawable = true;
        for &v in nodes {
            if spine.contains(&v) {
                continue;
            }
            let nb = d.neighbours(v);
            match nb.as_slice() {
                [u] if spine.contains(u) && d.edge(v, *u).is_some_and(|e| e.multiplicity == 1) => {
                    let pos = spine.iter().position(|x| x == u).expect("on spine");
                    if hanging.iter().any(|&(p, _)| p == pos) {
                        drawable = false;
                    }
                    hanging.push((pos, v));
                }
                _ => drawable = false,
            }
        }
        if drawable {
            let mut line = String::from("o");
            for w in spine.windows(2) {
                line.push_str(&glyph(d.edge(w[0], w[1]).expect("path edge"), w[1]));
                line.push('o');
            }
            if hanging.is_empty() {
                return line;
            }
            hanging.sort_unstable();
            let mut bar = String::new();
            let mut low = String::new();
            for &(pos, _) in &hanging {
                let col = 4 * pos;
                while bar.chars().count() < col {
                    bar.push(' ');
                    low.push(' ');
                }
                bar.push('|');
                low.push('o');
            }
            return format!("{line}\n{bar}\n{low}");
        }
    }
    let mut out = format!("nodes {}", nodes.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(","));
    for e in d.edges.iter().filter(|e| nodes.contains(&e.i)) {
        let _ = write!(out, "\n{} {} {}", e.i + 1, glyph(e, e.j), e.j + 1);
    }
    out
}

fn render_dot(d: &DynkinDiagram) -> String {
    let mut out = String::from("graph dynkin {\n  node [shape=circle];\n");
    for v in 0..d.nodes {
        let _ = writeln!(out, "  n{} [label=\"{}\"];", v + 1, v + 1);
    }
    for e in &d.edges {
        match e.arrow_to {
            Some(short) => {
                let long = if short == e.i { e.j } else { e.i };
                let _ = writeln!(out, "  n{} -- n{} [label=\"{}\", dir=forward];", long + 1, short + 1, e.multiplicity);
            }
            None => {
                let _ = writeln!(out, "  n{} -- n{} [label=\"{}\"];", e.i + 1, e.j + 1, e.multiplicity);
            }
        }
    }
    out.push_str("}\n");
    out
}
