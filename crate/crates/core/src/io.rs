//! Plain-text formats. Every format is line based, ids are 1-based, and
//! lines starting with `c` are comments.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Matching, VertexId, VertexWeightedGraph, Weight, WeightedGraph};
use crate::reductions::{
    Certificate, Cnf, Label, LabeledInstance, ReductionKind, SetCoverInstance, SourceInstance, SourceSolution,
    SteinerInstance, SteinerTree, TargetGraph,
};
use crate::treedecomp::TreeDecomposition;

pub fn read_file(path: impl AsRef<Path>) -> Result<String> {
    let path = path.as_ref();
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn write_file(path: impl AsRef<Path>, text: &str) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

/// Non-comment, non-blank lines with their 1-based numbers, split on whitespace.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t: Vec<&str> = l.split_whitespace().collect();
        match t.first() {
            None | Some(&"c") => None,
            Some(_) => Some((i + 1, t)),
        }
    })
}

fn num<T: std::str::FromStr>(line: usize, s: &str) -> Result<T> {
    s.parse().or_else(|_| err(line, format!("bad number {s:?}")))
}

/// 1-based id to 0-based, checked against `n`.
fn id(line: usize, s: &str, n: usize) -> Result<VertexId> {
    let x: usize = num(line, s)?;
    if x == 0 || x > n {
        return err(line, format!("id {x} outside 1..={n}"));
    }
    Ok(x - 1)
}

fn arity(line: usize, t: &[&str], want: usize) -> Result<()> {
    if t.len() != want {
        return err(line, format!("expected {} fields, found {}", want, t.len()));
    }
    Ok(())
}

/// Parses `p <kind> <a> <b>` and returns `(a, b)`.
fn header(line: usize, t: &[&str], kind: &str) -> Result<(usize, usize)> {
    if t.len() != 4 || t[0] != "p" || t[1] != kind {
        return err(line, format!("expected header \"p {kind} <a> <b>\""));
    }
    Ok((num(line, t[2])?, num(line, t[3])?))
}

fn graph_error(line: usize, e: Error) -> Error {
    Error::Parse {
        line,
        msg: e.to_string(),
    }
}

/// `p wcm <n> <m>` then exactly `m` lines `e <u> <v> <w>`.
pub fn parse_graph(text: &str) -> Result<WeightedGraph> {
    let mut lines = records(text);
    let Some((hl, h)) = lines.next() else {
        return err(0, "missing header");
    };
    let (n, m) = header(hl, &h, "wcm")?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashMap::new();
    let mut last = hl;
    for (line, t) in lines {
        last = line;
        if t[0] != "e" {
            return err(line, format!("unexpected record {:?}", t[0]));
        }
        arity(line, &t, 4)?;
        let (u, v, w): (VertexId, VertexId, Weight) = (id(line, t[1], n)?, id(line, t[2], n)?, num(line, t[3])?);
        if u == v {
            return err(line, format!("self-loop on vertex {}", u + 1));
        }
        if let Some(first) = seen.insert((u.min(v), u.max(v)), line) {
            return err(line, format!("edge {}-{} repeats line {first}", u + 1, v + 1));
        }
        edges.push((u, v, w));
    }
    if edges.len() != m {
        return err(last, format!("header promises {m} edges, found {}", edges.len()));
    }
    WeightedGraph::new(n, edges).map_err(|e| graph_error(hl, e))
}

pub fn write_graph(g: &WeightedGraph) -> String {
    let mut s = format!("p wcm {} {}\n", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(s, "e {} {} {}", e.u + 1, e.v + 1, e.w);
    }
    s
}

/// DIMACS CNF: `p cnf <vars> <clauses>`, clauses terminated by `0`.
pub fn parse_cnf(text: &str) -> Result<Cnf> {
    let mut lines = records(text);
    let Some((hl, h)) = lines.next() else {
        return err(0, "missing header");
    };
    let (vars, m) = header(hl, &h, "cnf")?;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    let mut last = hl;
    for (line, t) in lines {
        last = line;
        if t[0] == "%" {
            break;
        }
        for s in t {
            let l: i32 = num(line, s)?;
            if l == 0 {
                if current.is_empty() {
                    return err(line, "empty clause");
                }
                clauses.push(std::mem::take(&mut current));
            } else if l.unsigned_abs() as usize > vars {
                return err(line, format!("literal {l} outside 1..={vars}"));
            } else {
                current.push(l);
            }
        }
    }
    if !current.is_empty() {
        return err(last, "last clause is not terminated by 0");
    }
    if clauses.len() != m {
        return err(last, format!("header promises {m} clauses, found {}", clauses.len()));
    }
    Cnf::new(vars, clauses).map_err(|e| graph_error(hl, e))
}

pub fn write_cnf(f: &Cnf) -> String {
    let mut s = format!("p cnf {} {}\n", f.vars, f.clauses.len());
    for c in &f.clauses {
        for l in c {
            let _ = write!(s, "{l} ");
        }
        s.push_str("0\n");
    }
    s
}

/// Several formulas in one file, separated by lines holding `%`.
pub fn parse_cnf_family(text: &str) -> Result<Vec<Cnf>> {
    let mut out = Vec::new();
    let mut chunk = String::new();
    let mut offset = 0;
    let mut start = 0;
    for (i, l) in text.lines().enumerate() {
        if l.trim() == "%" {
            out.push(parse_cnf(&chunk).map_err(|e| shift(e, start))?);
            chunk.clear();
            start = i + 1;
            offset = 0;
        } else {
            chunk.push_str(l);
            chunk.push('\n');
            offset += 1;
        }
    }
    if offset > 0 && records(&chunk).next().is_some() {
        out.push(parse_cnf(&chunk).map_err(|e| shift(e, start))?);
    }
    Ok(out)
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { line, msg } => Error::Parse { line: line + by, msg },
        e => e,
    }
}

pub fn write_cnf_family(fs: &[Cnf]) -> String {
    fs.iter().map(write_cnf).collect::<Vec<_>>().join("%\n")
}

/// `p steiner <n> <m>`, lines `e <u> <v>`, `t <v>` and one `k <budget>`.
pub fn parse_steiner(text: &str) -> Result<SteinerInstance> {
    let mut lines = records(text);
    let Some((hl, h)) = lines.next() else {
        return err(0, "missing header");
    };
    let (n, m) = header(hl, &h, "steiner")?;
    let (mut edges, mut terminals, mut budget) = (Vec::new(), Vec::new(), None);
    let mut last = hl;
    for (line, t) in lines {
        last = line;
        match t[0] {
            "e" => {
                arity(line, &t, 3)?;
                edges.push((id(line, t[1], n)?, id(line, t[2], n)?, 1));
            }
            "t" => {
                arity(line, &t, 2)?;
                terminals.push(id(line, t[1], n)?);
            }
            "k" => {
                arity(line, &t, 2)?;
                budget = Some(num(line, t[1])?);
            }
            r => return err(line, format!("unexpected record {r:?}")),
        }
    }
    if edges.len() != m {
        return err(last, format!("header promises {m} edges, found {}", edges.len()));
    }
    let budget = budget.ok_or_else(|| Error::Parse {
        line: last,
        msg: "missing budget line \"k <int>\"".into(),
    })?;
    let g = WeightedGraph::new(n, edges).map_err(|e| graph_error(hl, e))?;
    SteinerInstance::new(g, terminals, budget)
}

pub fn write_steiner(s: &SteinerInstance) -> String {
    let mut out = format!("p steiner {} {}\n", s.graph.n(), s.graph.m());
    for e in s.graph.edges() {
        let _ = writeln!(out, "e {} {}", e.u + 1, e.v + 1);
    }
    for t in &s.terminals {
        let _ = writeln!(out, "t {}", t + 1);
    }
    let _ = writeln!(out, "k {}", s.budget);
    out
}

/// `p setcover <|U|> <|S|>`, one `s <elements…>` line per set, one `k <budget>`.
pub fn parse_setcover(text: &str) -> Result<SetCoverInstance> {
    let mut lines = records(text);
    let Some((hl, h)) = lines.next() else {
        return err(0, "missing header");
    };
    let (q, p) = header(hl, &h, "setcover")?;
    let (mut sets, mut budget) = (Vec::new(), None);
    let mut last = hl;
    for (line, t) in lines {
        last = line;
        match t[0] {
            "s" => sets.push(t[1..].iter().map(|x| id(line, x, q)).collect::<Result<Vec<_>>>()?),
            "k" => {
                arity(line, &t, 2)?;
                budget = Some(num(line, t[1])?);
            }
            r => return err(line, format!("unexpected record {r:?}")),
        }
    }
    if sets.len() != p {
        return err(last, format!("header promises {p} sets, found {}", sets.len()));
    }
    let budget = budget.ok_or_else(|| Error::Parse {
        line: last,
        msg: "missing budget line \"k <int>\"".into(),
    })?;
    SetCoverInstance::new(q, sets, budget)
}

pub fn write_setcover(s: &SetCoverInstance) -> String {
    let mut out = format!("p setcover {} {}\n", s.universe, s.sets.len());
    for set in &s.sets {
        out.push('s');
        for x in set {
            let _ = write!(out, " {}", x + 1);
        }
        out.push('\n');
    }
    let _ = writeln!(out, "k {}", s.budget);
    out
}

/// `p wcs <n> <m>`, one `v <id> <weight>` per vertex, `e <u> <v>` lines and
/// an optional `k <target>` (default 0).
pub fn parse_wcs(text: &str) -> Result<(VertexWeightedGraph, Weight)> {
    let mut lines = records(text);
    let Some((hl, h)) = lines.next() else {
        return err(0, "missing header");
    };
    let (n, m) = header(hl, &h, "wcs")?;
    let mut weights = vec![None; n];
    let (mut edges, mut k) = (Vec::new(), 0);
    let mut last = hl;
    for (line, t) in lines {
        last = line;
        match t[0] {
            "v" => {
                arity(line, &t, 3)?;
                let v = id(line, t[1], n)?;
                if weights[v].replace(num::<Weight>(line, t[2])?).is_some() {
                    return err(line, format!("vertex {} weighted twice", v + 1));
                }
            }
            "e" => {
                arity(line, &t, 3)?;
                edges.push((id(line, t[1], n)?, id(line, t[2], n)?));
            }
            "k" => {
                arity(line, &t, 2)?;
                k = num(line, t[1])?;
            }
            r => return err(line, format!("unexpected record {r:?}")),
        }
    }
    if edges.len() != m {
        return err(last, format!("header promises {m} edges, found {}", edges.len()));
    }
    let weights = weights
        .into_iter()
        .enumerate()
        .map(|(v, w)| {
            w.ok_or_else(|| Error::Parse {
                line: last,
                msg: format!("vertex {} has no weight", v + 1),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let g = VertexWeightedGraph::new(weights, edges).map_err(|e| graph_error(hl, e))?;
    Ok((g, k))
}

pub fn write_wcs(g: &VertexWeightedGraph, k: Weight) -> String {
    let mut out = format!("p wcs {} {}\n", g.n(), g.m());
    for v in 0..g.n() {
        let _ = writeln!(out, "v {} {}", v + 1, g.weight(v));
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    let _ = writeln!(out, "k {k}");
    out
}

/// `s td <bags> <width+1> <n>`, `b <id> <vertices…>` lines, then tree edges `<i> <j>`.
pub fn parse_td(text: &str, n: usize) -> Result<TreeDecomposition> {
    let mut lines = records(text);
    let Some((hl, h)) = lines.next() else {
        return err(0, "missing header");
    };
    if h.len() != 5 || h[0] != "s" || h[1] != "td" {
        return err(hl, "expected header \"s td <bags> <width+1> <n>\"");
    }
    let (count, size, vertices): (usize, usize, usize) = (num(hl, h[2])?, num(hl, h[3])?, num(hl, h[4])?);
    if vertices != n {
        return err(hl, format!("decomposition is for {vertices} vertices, graph has {n}"));
    }
    let mut bags: Vec<Option<Vec<VertexId>>> = vec![None; count];
    let mut edges = Vec::new();
    for (line, t) in lines {
        if t[0] == "b" {
            if t.len() < 2 {
                return err(line, "bag line needs an id");
            }
            let b = id(line, t[1], count)?;
            let mut bag = t[2..].iter().map(|x| id(line, x, n)).collect::<Result<Vec<_>>>()?;
            if bag.len() > size {
                return err(
                    line,
                    format!("bag {} has {} vertices, header allows {size}", b + 1, bag.len()),
                );
            }
            bag.sort_unstable();
            if bags[b].replace(bag).is_some() {
                return err(line, format!("bag {} defined twice", b + 1));
            }
        } else {
            arity(line, &t, 2)?;
            edges.push((id(line, t[0], count)?, id(line, t[1], count)?));
        }
    }
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| {
            b.ok_or_else(|| Error::Parse {
                line: hl,
                msg: format!("bag {} is never defined", i + 1),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TreeDecomposition::new(bags, edges))
}

pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let mut out = format!("s td {} {} {}\n", td.bags.len(), td.width() + 1, n);
    for (i, bag) in td.bags.iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for v in bag {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for &(i, j) in &td.edges {
        let _ = writeln!(out, "{} {}", i + 1, j + 1);
    }
    out
}

/// `m <u> <v>` lines; `w <weight>` lines are ignored.
pub fn parse_certificate(g: &WeightedGraph, text: &str) -> Result<Matching> {
    let mut pairs = Vec::new();
    for (line, t) in records(text) {
        match t[0] {
            "m" => {
                arity(line, &t, 3)?;
                let (u, v) = (id(line, t[1], g.n())?, id(line, t[2], g.n())?);
                if g.edge_between(u, v).is_none() {
                    return err(line, format!("no edge between {} and {}", u + 1, v + 1));
                }
                pairs.push((u, v));
            }
            "w" => {}
            r => return err(line, format!("unexpected record {r:?}")),
        }
    }
    Matching::from_pairs(g, &pairs)
}

/// Matched pairs in increasing order, smaller endpoint first.
pub fn write_certificate(g: &WeightedGraph, m: &Matching) -> String {
    let mut pairs = m.pairs(g);
    for p in &mut pairs {
        *p = (p.0.min(p.1), p.0.max(p.1));
    }
    pairs.sort_unstable();
    pairs.iter().map(|(u, v)| format!("m {} {}\n", u + 1, v + 1)).collect()
}

/// `v <id>` lines.
pub fn parse_vertex_set(text: &str, n: usize) -> Result<Vec<VertexId>> {
    let mut out = Vec::new();
    for (line, t) in records(text) {
        if t[0] != "v" {
            return err(line, format!("unexpected record {:?}", t[0]));
        }
        arity(line, &t, 2)?;
        out.push(id(line, t[1], n)?);
    }
    Ok(out)
}

pub fn write_vertex_set(vs: &[VertexId]) -> String {
    let mut vs = vs.to_vec();
    vs.sort_unstable();
    vs.iter().map(|v| format!("v {}\n", v + 1)).collect()
}

/// `k <target>` then `map <id> <label>` for every vertex.
pub fn parse_map(text: &str) -> Result<(Weight, Vec<Label>)> {
    let mut k = None;
    let mut labels: Vec<Option<Label>> = Vec::new();
    for (line, t) in records(text) {
        match t[0] {
            "k" => {
                arity(line, &t, 2)?;
                k = Some(num(line, t[1])?);
            }
            "map" => {
                arity(line, &t, 3)?;
                let v: usize = num(line, t[1])?;
                if v == 0 {
                    return err(line, "ids start at 1");
                }
                let l: Label = t[2].parse().map_err(|e: Error| shift_parse(e, line))?;
                if labels.len() < v {
                    labels.resize(v, None);
                }
                if labels[v - 1].replace(l).is_some() {
                    return err(line, format!("vertex {v} mapped twice"));
                }
            }
            r => return err(line, format!("unexpected record {r:?}")),
        }
    }
    let k = k.ok_or_else(|| Error::Parse {
        line: 0,
        msg: "missing \"k <target>\" line".into(),
    })?;
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(v, l)| {
            l.ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("vertex {} has no label", v + 1),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((k, labels))
}

fn shift_parse(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { msg, .. } => Error::Parse { line, msg },
        e => e,
    }
}

pub fn write_map(k: Weight, labels: &[Label]) -> String {
    let mut out = format!("k {k}\n");
    for (v, l) in labels.iter().enumerate() {
        let _ = writeln!(out, "map {} {l}", v + 1);
    }
    out
}

/// Source solutions. Assignments are `v <literals…> 0` lines, optionally
/// preceded by `i <instance>`; trees are `t <v>` and `e <u> <v>` lines; set
/// families are `s <set>` lines; vertex sets are `v <id>` lines.
pub fn write_solution(sol: &SourceSolution) -> String {
    let assignment = |a: &[bool]| {
        let mut s = String::from("v");
        for (i, &x) in a.iter().enumerate() {
            let l = i as i64 + 1;
            let _ = write!(s, " {}", if x { l } else { -l });
        }
        s.push_str(" 0\n");
        s
    };
    match sol {
        SourceSolution::Assignment(a) => assignment(a),
        SourceSolution::Selected {
            instance,
            assignment: a,
        } => format!("i {}\n{}", instance + 1, assignment(a)),
        SourceSolution::Tree(t) => {
            let mut s = String::new();
            for v in &t.vertices {
                let _ = writeln!(s, "t {}", v + 1);
            }
            for (u, v) in &t.edges {
                let _ = writeln!(s, "e {} {}", u + 1, v + 1);
            }
            s
        }
        SourceSolution::Sets(c) => c.iter().map(|j| format!("s {}\n", j + 1)).collect(),
        SourceSolution::Vertices(vs) => write_vertex_set(vs),
    }
}

/// Kinds of source solution a reduction expects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionShape {
    Assignment { vars: usize },
    Selected { vars: usize, instances: usize },
    Tree { n: usize },
    Sets { count: usize },
    Vertices { n: usize },
}

pub fn parse_solution(text: &str, shape: SolutionShape) -> Result<SourceSolution> {
    let assignment = |vars: usize| -> Result<Vec<bool>> {
        let mut a = vec![None; vars];
        for (line, t) in records(text).filter(|(_, t)| t[0] == "v") {
            for s in &t[1..] {
                let l: i64 = num(line, s)?;
                if l == 0 {
                    continue;
                }
                let i = id(line, &l.unsigned_abs().to_string(), vars)?;
                a[i] = Some(l > 0);
            }
        }
        a.into_iter()
            .enumerate()
            .map(|(i, x)| {
                x.ok_or_else(|| Error::Parse {
                    line: 0,
                    msg: format!("variable {} has no value", i + 1),
                })
            })
            .collect()
    };
    match shape {
        SolutionShape::Assignment { vars } => Ok(SourceSolution::Assignment(assignment(vars)?)),
        SolutionShape::Selected { vars, instances } => {
            let mut instance = None;
            for (line, t) in records(text).filter(|(_, t)| t[0] == "i") {
                arity(line, &t, 2)?;
                instance = Some(id(line, t[1], instances)?);
            }
            let instance = instance.ok_or_else(|| Error::Parse {
                line: 0,
                msg: "missing \"i <instance>\" line".into(),
            })?;
            Ok(SourceSolution::Selected {
                instance,
                assignment: assignment(vars)?,
            })
        }
        SolutionShape::Tree { n } => {
            let mut tree = SteinerTree::default();
            for (line, t) in records(text) {
                match t[0] {
                    "t" => {
                        arity(line, &t, 2)?;
                        tree.vertices.push(id(line, t[1], n)?);
                    }
                    "e" => {
                        arity(line, &t, 3)?;
                        tree.edges.push((id(line, t[1], n)?, id(line, t[2], n)?));
                    }
                    r => return err(line, format!("unexpected record {r:?}")),
                }
            }
            Ok(SourceSolution::Tree(tree))
        }
        SolutionShape::Sets { count } => {
            let mut out = Vec::new();
            for (line, t) in records(text) {
                if t[0] != "s" {
                    return err(line, format!("unexpected record {:?}", t[0]));
                }
                arity(line, &t, 2)?;
                out.push(id(line, t[1], count)?);
            }
            Ok(SourceSolution::Sets(out))
        }
        SolutionShape::Vertices { n } => Ok(SourceSolution::Vertices(parse_vertex_set(text, n)?)),
    }
}

/// Source instance of `kind` in its own format. Cross-composition reads a
/// `%`-separated family of CNF formulas.
pub fn parse_source(kind: ReductionKind, text: &str) -> Result<SourceInstance> {
    Ok(match kind {
        ReductionKind::Starlike | ReductionKind::Bip4 | ReductionKind::PlanarBipartite => {
            SourceInstance::Cnf(parse_cnf(text)?)
        }
        ReductionKind::CrossComp => SourceInstance::Family(parse_cnf_family(text)?),
        ReductionKind::Steiner => SourceInstance::Steiner(parse_steiner(text)?),
        ReductionKind::WcsToWcm => {
            let (graph, k) = parse_wcs(text)?;
            SourceInstance::Wcs { graph, k }
        }
        ReductionKind::SetCoverToWcs => SourceInstance::SetCover(parse_setcover(text)?),
    })
}

pub fn write_source(source: &SourceInstance) -> String {
    match source {
        SourceInstance::Cnf(f) => write_cnf(f),
        SourceInstance::Family(fs) => write_cnf_family(fs),
        SourceInstance::Steiner(s) => write_steiner(s),
        SourceInstance::Wcs { graph, k } => write_wcs(graph, *k),
        SourceInstance::SetCover(s) => write_setcover(s),
    }
}

/// Generated graph as `.gr`, or as `.wcs` with its target for vertex-weighted output.
pub fn write_target(inst: &LabeledInstance) -> String {
    match &inst.graph {
        TargetGraph::Edge(g) => write_graph(g),
        TargetGraph::Vertex(g) => write_wcs(g, inst.k),
    }
}

pub fn solution_shape(inst: &LabeledInstance) -> SolutionShape {
    match &inst.source {
        SourceInstance::Cnf(f) => SolutionShape::Assignment { vars: f.vars },
        SourceInstance::Family(fs) => SolutionShape::Selected {
            vars: fs.first().map_or(0, |f| f.vars),
            instances: fs.len(),
        },
        SourceInstance::Steiner(s) => SolutionShape::Tree { n: s.graph.n() },
        SourceInstance::Wcs { graph, .. } => SolutionShape::Vertices { n: graph.n() },
        SourceInstance::SetCover(s) => SolutionShape::Sets { count: s.sets.len() },
    }
}

pub fn parse_target_certificate(inst: &LabeledInstance, text: &str) -> Result<Certificate> {
    match &inst.graph {
        TargetGraph::Edge(g) => Ok(Certificate::Matching(parse_certificate(g, text)?)),
        TargetGraph::Vertex(g) => Ok(Certificate::Vertices(parse_vertex_set(text, g.n())?)),
    }
}

pub fn write_target_certificate(inst: &LabeledInstance, cert: &Certificate) -> Result<String> {
    match (cert, &inst.graph) {
        (Certificate::Matching(m), TargetGraph::Edge(g)) => Ok(write_certificate(g, m)),
        (Certificate::Vertices(vs), TargetGraph::Vertex(_)) => Ok(write_vertex_set(vs)),
        _ => Err(Error::Certificate(format!("wrong certificate type for {}", inst.kind))),
    }
}
