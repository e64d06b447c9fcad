//! Text formats: graphs, families, DIMACS CNF, terminal and list files.
//!
//! Vertex ids are 1-based in every file and 0-based in memory. Writers
//! start with `c format 1`; readers accept a missing version line but
//! reject any other version.

use std::fmt::Write;

use hsfree_core::oracles::{CnfFormula, ListAssignment, Literal};
use hsfree_core::Graph;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, msg: msg.into() })
}

pub const VERSION_LINE: &str = "c format 1";

/// Handles `c ...` comments; returns `Some(rest)` for `c label ...`.
fn comment(line_no: usize, line: &str) -> Result<Option<&str>, ParseError> {
    let rest = line[1..].trim_start();
    if let Some(v) = rest.strip_prefix("format") {
        if v.trim() != "1" {
            return err(line_no, format!("unsupported format version `{}`", v.trim()));
        }
    }
    Ok(rest.strip_prefix("label ").map(str::trim_start))
}

fn is_comment(line: &str) -> bool {
    line == "c" || line.starts_with("c ") || line.starts_with("c\t")
}

fn vertex(line_no: usize, tok: Option<&str>, n: usize) -> Result<usize, ParseError> {
    let tok = tok.ok_or(ParseError {
        line: line_no,
        msg: "missing vertex".into(),
    })?;
    match tok.parse::<usize>() {
        Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
        Ok(v) => err(line_no, format!("vertex {v} outside 1..={n}")),
        Err(_) => err(line_no, format!("`{tok}` is not a vertex id")),
    }
}

fn count(line_no: usize, tok: Option<&str>, what: &str) -> Result<usize, ParseError> {
    tok.and_then(|t| t.parse().ok()).ok_or(ParseError {
        line: line_no,
        msg: format!("bad {what} in header"),
    })
}

/// Parses one graph; `first_line` is the number of the first line of
/// `text` in its file, for error messages.
fn parse_graph_at(text: &str, first_line: usize) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut labels: Vec<(usize, usize, String)> = Vec::new();
    let mut last = first_line;
    for (i, raw) in text.lines().enumerate() {
        let line_no = first_line + i;
        last = line_no;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if is_comment(line) {
            if let Some(rest) = comment(line_no, line)? {
                let (id, text) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                labels.push((line_no, id.parse().unwrap_or(0), text.trim().to_string()));
            }
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return err(line_no, "second header");
                }
                if toks.next() != Some("edge") {
                    return err(line_no, "expected `p edge <n> <m>`");
                }
                let n = count(line_no, toks.next(), "vertex count")?;
                let m = count(line_no, toks.next(), "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return err(line_no, "edge before header");
                };
                let u = vertex(line_no, toks.next(), n)?;
                let v = vertex(line_no, toks.next(), n)?;
                if u == v {
                    return err(line_no, format!("self-loop at {}", u + 1));
                }
                edges.push((line_no, u, v));
            }
            Some(t) => return err(line_no, format!("unexpected `{t}`")),
            None => unreachable!(),
        }
        if toks.next().is_some() {
            return err(line_no, "trailing tokens");
        }
    }
    let Some((n, m)) = header else {
        return err(last, "missing `p edge` header");
    };
    if edges.len() != m {
        return err(last, format!("header declares {m} edges, found {}", edges.len()));
    }
    let mut seen = std::collections::HashSet::new();
    for &(line_no, u, v) in &edges {
        if !seen.insert((u.min(v), u.max(v))) {
            return err(line_no, format!("duplicate edge {}-{}", u + 1, v + 1));
        }
    }
    let g = Graph::new(n, edges.iter().map(|&(_, u, v)| (u, v))).expect("edges validated");
    if labels.is_empty() {
        return Ok(g);
    }
    let mut names = vec![None; n];
    for (line_no, id, text) in labels {
        if !(1..=n).contains(&id) {
            return err(line_no, "label for a vertex outside the graph");
        }
        if names[id - 1].replace(text).is_some() {
            return err(line_no, format!("vertex {id} labelled twice"));
        }
    }
    if names.iter().any(Option::is_none) {
        return err(last, "labels must cover every vertex");
    }
    Ok(g.with_labels(names.into_iter().map(Option::unwrap).collect())
        .expect("one label per vertex"))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    parse_graph_at(text, 1)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = String::from(VERSION_LINE);
    s.push('\n');
    write_graph_body(g, &mut s);
    s
}

fn write_graph_body(g: &Graph, s: &mut String) {
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            writeln!(s, "c label {} {l}", v + 1).unwrap();
        }
    }
    writeln!(s, "p edge {} {}", g.n(), g.m()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(s, "e {} {}", u + 1, v + 1).unwrap();
    }
}

/// Graph blocks separated by `--` lines.
pub fn parse_family(text: &str) -> Result<Vec<Graph>, ParseError> {
    let mut family = Vec::new();
    let mut block = String::new();
    let mut start = 1;
    let lines: Vec<&str> = text.lines().collect();
    for (i, line) in lines.iter().enumerate() {
        if line.trim() == "--" {
            family.push(parse_graph_at(&block, start)?);
            block.clear();
            start = i + 2;
        } else {
            block.push_str(line);
            block.push('\n');
        }
    }
    family.push(parse_graph_at(&block, start)?);
    Ok(family)
}

pub fn write_family(family: &[Graph]) -> String {
    let mut s = String::from(VERSION_LINE);
    s.push('\n');
    for (i, g) in family.iter().enumerate() {
        if i > 0 {
            s.push_str("--\n");
        }
        write_graph_body(g, &mut s);
    }
    s
}

/// DIMACS CNF restricted to clauses of exactly three literals.
pub fn parse_cnf(text: &str) -> Result<CnfFormula, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<(usize, i32)> = Vec::new();
    let mut last = 1;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if is_comment(line) {
            comment(line_no, line)?;
            continue;
        }
        if line.starts_with('p') {
            let mut toks = line.split_whitespace().skip(1);
            if header.is_some() || toks.next() != Some("cnf") {
                return err(line_no, "expected a single `p cnf <n> <m>` header");
            }
            let n = count(line_no, toks.next(), "variable count")?;
            let m = count(line_no, toks.next(), "clause count")?;
            header = Some((n, m));
            continue;
        }
        let Some((n, _)) = header else {
            return err(line_no, "clause before header");
        };
        for tok in line.split_whitespace() {
            let x: i32 = tok.parse().map_err(|_| ParseError {
                line: line_no,
                msg: format!("`{tok}` is not a literal"),
            })?;
            if x == 0 {
                if current.len() != 3 {
                    return err(line_no, format!("clause has {} literals, expected 3", current.len()));
                }
                let lits = [current[0].1, current[1].1, current[2].1].map(|l| Literal::from_dimacs(l).unwrap());
                clauses.push(lits);
                current.clear();
            } else if x.unsigned_abs() as usize > n {
                return err(line_no, format!("literal {x} refers past {n} variables"));
            } else {
                current.push((line_no, x));
            }
        }
    }
    let Some((n, m)) = header else {
        return err(last, "missing `p cnf` header");
    };
    if let Some(&(line_no, _)) = current.first() {
        return err(line_no, "unterminated clause");
    }
    if clauses.len() != m {
        return err(last, format!("header declares {m} clauses, found {}", clauses.len()));
    }
    CnfFormula::new(n, clauses).map_err(|e| ParseError {
        line: last,
        msg: e.to_string(),
    })
}

pub fn write_cnf(phi: &CnfFormula) -> String {
    let mut s = format!("{VERSION_LINE}\np cnf {} {}\n", phi.n_vars(), phi.clauses().len());
    for c in phi.clauses() {
        writeln!(s, "{} {} {} 0", c[0].dimacs(), c[1].dimacs(), c[2].dimacs()).unwrap();
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TerminalFile {
    Set(Vec<usize>),
    Pairs(Vec<(usize, usize)>),
}

/// `t <v>` lines or `pair <s> <t>` lines, not mixed. Ranges are checked
/// against `n`.
pub fn parse_terminals(text: &str, n: usize) -> Result<TerminalFile, ParseError> {
    let mut set = Vec::new();
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if is_comment(line) {
            comment(line_no, line)?;
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("t") => set.push(vertex(line_no, toks.next(), n)?),
            Some("pair") => pairs.push((vertex(line_no, toks.next(), n)?, vertex(line_no, toks.next(), n)?)),
            Some(t) => return err(line_no, format!("unexpected `{t}`")),
            None => unreachable!(),
        }
        if toks.next().is_some() {
            return err(line_no, "trailing tokens");
        }
        if !set.is_empty() && !pairs.is_empty() {
            return err(line_no, "`t` and `pair` lines cannot be mixed");
        }
    }
    Ok(if pairs.is_empty() {
        TerminalFile::Set(set)
    } else {
        TerminalFile::Pairs(pairs)
    })
}

pub fn write_terminals(t: &TerminalFile) -> String {
    let mut s = String::from(VERSION_LINE);
    s.push('\n');
    match t {
        TerminalFile::Set(vs) => vs.iter().for_each(|v| writeln!(s, "t {}", v + 1).unwrap()),
        TerminalFile::Pairs(ps) => ps
            .iter()
            .for_each(|(a, b)| writeln!(s, "pair {} {}", a + 1, b + 1).unwrap()),
    }
    s
}

/// One `<v>: <colour> ...` line per vertex.
pub fn parse_lists(text: &str, n: usize) -> Result<ListAssignment, ParseError> {
    let mut lists: Vec<Option<Vec<u32>>> = vec![None; n];
    let mut last = 1;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last = line_no;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if is_comment(line) {
            comment(line_no, line)?;
            continue;
        }
        let Some((v, colours)) = line.split_once(':') else {
            return err(line_no, "expected `<vertex>: <colours>`");
        };
        let v = vertex(line_no, Some(v.trim()), n)?;
        let colours: Vec<u32> = colours
            .split_whitespace()
            .map(|c| match c.parse::<u32>() {
                Ok(x) if x > 0 => Ok(x),
                _ => err(line_no, format!("`{c}` is not a positive colour")),
            })
            .collect::<Result<_, _>>()?;
        if lists[v].replace(colours).is_some() {
            return err(line_no, format!("second list for vertex {}", v + 1));
        }
    }
    if let Some(v) = lists.iter().position(Option::is_none) {
        return err(last, format!("no list for vertex {}", v + 1));
    }
    ListAssignment::new(lists.into_iter().map(Option::unwrap).collect()).map_err(|e| ParseError {
        line: last,
        msg: e.to_string(),
    })
}

pub fn write_lists(l: &ListAssignment) -> String {
    let mut s = String::from(VERSION_LINE);
    s.push('\n');
    for (v, list) in l.lists().iter().enumerate() {
        let cs: Vec<String> = list.iter().map(u32::to_string).collect();
        writeln!(s, "{}: {}", v + 1, cs.join(" ")).unwrap();
    }
    s
}
