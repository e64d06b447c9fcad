use std::path::Path;

use hsfree_core::graph::k_subdivide;
use hsfree_core::iso::first_contained_pattern;
use hsfree_core::oracles::{
    check_solution, solve, Certificate, CnfFormula, InstanceKind, OptResult, OracleBudget, Problem, ProblemInstance,
    Solution,
};
use hsfree_core::pattern::{self, classify_family, component_kinds, PatternConfig, Verdict};
use hsfree_core::reductions::random::{gnp, random_cnf, random_connected, random_subcubic};
use hsfree_core::reductions::{nae_to_oct_gadget, steiner_subcubic_expand, trial_rng};
use hsfree_core::width::{pathwidth, treewidth, WidthBudget};
use hsfree_core::{Error, Graph};
use serde_json::{json, Value};

use crate::format::{self, TerminalFile};
use crate::{verify, CliError, Command, Finished, GadgetKind, GenerateKind, Report};

pub(crate) fn dispatch(cmd: Command) -> Result<Finished, CliError> {
    match cmd {
        Command::Classify { family, size_cap } => classify(&family, size_cap),
        Command::Sfree { graph, family } => sfree(&graph, &family),
        Command::Subdivide { graph, k } => subdivide(&graph, k),
        Command::Width {
            graph,
            pathwidth,
            treewidth,
            max_n,
            budget,
        } => {
            let both = !pathwidth && !treewidth;
            let wb = WidthBudget {
                max_n,
                ..budget.width()
            };
            width(&graph, pathwidth || both, treewidth || both, &wb)
        }
        Command::Solve {
            problem,
            instance,
            terminals,
            lists,
            check,
            budget,
        } => {
            let inst = load_instance(problem, &instance, terminals.as_deref(), lists.as_deref())?;
            match check {
                None => solve_cmd(problem, &instance, &inst, &budget.oracle()),
                Some(r) => check_cmd(problem, &inst, &r, &budget.oracle()),
            }
        }
        Command::Gadget { kind } => gadget(kind),
        Command::Verify(args) => verify::run(&args),
        Command::Generate { kind } => generate(kind),
    }
}

pub(crate) fn ok(report: Report) -> Result<Finished, CliError> {
    Ok(Finished { report, code: 0 })
}

pub(crate) fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn parsed<T>(path: &Path, r: Result<T, format::ParseError>) -> Result<T, CliError> {
    r.map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// FNV-1a of the file bytes.
fn file_digest(text: &str) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in text.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    format!("{h:016x}")
}

/// Reads and parses an input file, recording it in the report.
pub(crate) fn load<T>(
    r: &mut Report,
    path: &Path,
    parse: impl FnOnce(&str) -> Result<T, format::ParseError>,
) -> Result<T, CliError> {
    let text = read(path)?;
    r.input(
        format!("{} {}", path.display(), file_digest(&text)),
        json!({ "path": path.display().to_string(), "fnv1a": file_digest(&text) }),
    );
    parsed(path, parse(&text))
}

pub(crate) fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parsed(path, format::parse_graph(&read(path)?))
}

pub(crate) fn load_cnf(path: &Path) -> Result<CnfFormula, CliError> {
    parsed(path, format::parse_cnf(&read(path)?))
}

pub(crate) fn load_terminals(path: &Path, n: usize) -> Result<TerminalFile, CliError> {
    parsed(path, format::parse_terminals(&read(path)?, n))
}

fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn join_edges(es: &[(usize, usize)]) -> String {
    es.iter()
        .map(|(u, v)| format!("{}-{}", u + 1, v + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

fn graph_json(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect();
    let mut v = json!({ "n": g.n(), "m": g.m(), "edges": edges });
    if let Some(labels) = g.labels() {
        v["labels"] = json!(labels);
    }
    v
}

/// Attaches a graph: as the text body and as a JSON field.
fn attach_graph(r: &mut Report, g: &Graph) {
    r.put_lines("graph", Vec::new(), graph_json(g));
    r.set_body(format::write_graph(g));
}

fn classify(path: &Path, size_cap: Option<usize>) -> Result<Finished, CliError> {
    let mut r = Report::new("classify");
    let family = load(&mut r, path, format::parse_family)?;
    let mut cfg = PatternConfig::default();
    if let Some(cap) = size_cap {
        cfg.size_cap = cap;
    }
    let verdict = classify_family(&family, &cfg)?;
    r.put("members", family.len());
    let shapes: Vec<String> = family.iter().map(|h| pattern::describe(&component_kinds(h))).collect();
    let lines = shapes
        .iter()
        .enumerate()
        .map(|(i, s)| format!("member {i}: {s}"))
        .collect();
    r.put_lines("shapes", lines, json!(shapes));
    match verdict {
        Verdict::Tractable {
            witness_index,
            pw_bound,
        } => {
            r.put("verdict", "tractable")
                .put("witness", witness_index)
                .put("pw_bound", pw_bound);
        }
        Verdict::Hard { ell1, ell2, ell } => {
            r.put("verdict", "hard")
                .put("ell1", ell1)
                .put("ell2", ell2)
                .put("ell", ell);
        }
    }
    ok(r)
}

fn sfree(graph: &Path, family: &Path) -> Result<Finished, CliError> {
    let mut r = Report::new("sfree");
    let g = load(&mut r, graph, format::parse_graph)?;
    let fam = load(&mut r, family, format::parse_family)?;
    match first_contained_pattern(&g, &fam) {
        None => {
            r.put("free", true);
        }
        Some((i, e)) => {
            let pairs: Vec<String> =
                e.0.iter()
                    .enumerate()
                    .map(|(h, x)| format!("{}->{}", h + 1, x + 1))
                    .collect();
            r.put("free", false).put("member", i);
            r.put_as("embedding", pairs.join(" "), json!(one_based(&e.0)));
        }
    }
    ok(r)
}

fn subdivide(path: &Path, k: usize) -> Result<Finished, CliError> {
    let mut r = Report::new("subdivide");
    let g = load(&mut r, path, format::parse_graph)?;
    r.put("k", k);
    attach_graph(&mut r, &k_subdivide(&g, k));
    ok(r)
}

fn width(path: &Path, pw: bool, tw: bool, budget: &WidthBudget) -> Result<Finished, CliError> {
    let mut r = Report::new("width");
    let g = load(&mut r, path, format::parse_graph)?;
    if pw {
        let (w, layout) = pathwidth(&g, budget)?;
        r.put("pathwidth", w);
        r.put_as("layout", join(layout.order()), json!(one_based(layout.order())));
    }
    if tw {
        let (w, td) = treewidth(&g, budget)?;
        r.put("treewidth", w);
        let mut lines = vec![format!("bags: {}", td.bags.len())];
        lines.extend(
            td.bags
                .iter()
                .enumerate()
                .map(|(i, b)| format!("bag {}: {}", i + 1, join(b))),
        );
        lines.push(format!("tree: {}", join_edges(&td.tree_edges)));
        let bags: Vec<Vec<usize>> = td.bags.iter().map(|b| one_based(b)).collect();
        let tree: Vec<[usize; 2]> = td.tree_edges.iter().map(|&(a, b)| [a + 1, b + 1]).collect();
        r.put_lines("decomposition", lines, json!({ "bags": bags, "tree": tree }));
    }
    ok(r)
}

fn load_instance(
    p: Problem,
    path: &Path,
    terminals: Option<&Path>,
    lists: Option<&Path>,
) -> Result<ProblemInstance, CliError> {
    let need = |what: &str| CliError::Usage(format!("problem {p} needs --{what}"));
    Ok(match p.instance_kind() {
        InstanceKind::Formula => ProblemInstance::Formula(load_cnf(path)?),
        InstanceKind::Graph => ProblemInstance::Graph(load_graph(path)?),
        InstanceKind::Terminals => {
            let g = load_graph(path)?;
            match load_terminals(terminals.ok_or_else(|| need("terminals"))?, g.n())? {
                TerminalFile::Set(t) => ProblemInstance::Terminals(g, t),
                TerminalFile::Pairs(_) => return Err(CliError::Input(format!("problem {p} needs `t` lines"))),
            }
        }
        InstanceKind::Pairs => {
            let g = load_graph(path)?;
            match load_terminals(terminals.ok_or_else(|| need("terminals"))?, g.n())? {
                TerminalFile::Pairs(pairs) => ProblemInstance::Pairs(g, pairs),
                TerminalFile::Set(t) if t.is_empty() => ProblemInstance::Pairs(g, Vec::new()),
                TerminalFile::Set(_) => return Err(CliError::Input(format!("problem {p} needs `pair` lines"))),
            }
        }
        InstanceKind::Lists => {
            let g = load_graph(path)?;
            let lpath = lists.ok_or_else(|| need("lists"))?;
            let l = parsed(lpath, format::parse_lists(&read(lpath)?, g.n()))?;
            ProblemInstance::Lists(g, l)
        }
    })
}

fn put_solution(r: &mut Report, sol: &Solution) {
    match sol {
        Solution::Optimum(OptResult { value, certificate }) => {
            r.put("value", *value);
            let (kind, text, items) = match certificate {
                Certificate::Vertices(v) => ("vertices", join(v), json!(one_based(v))),
                Certificate::Side(v) => ("side", join(v), json!(one_based(v))),
                Certificate::Edges(e) => {
                    let es: Vec<[usize; 2]> = e.iter().map(|&(a, b)| [a + 1, b + 1]).collect();
                    ("edges", join_edges(e), json!(es))
                }
            };
            r.put_as(
                "certificate",
                format!("{kind} {text}").trim_end().to_string(),
                json!({ kind: items }),
            );
        }
        Solution::Colouring(c) => {
            r.put("colourable", c.is_some());
            if let Some(c) = c {
                let text = c.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
                r.put_as("colouring", text, json!(c));
            }
        }
        Solution::Paths(p) => {
            r.put("linked", p.is_some());
            if let Some(paths) = p {
                let lines = paths
                    .iter()
                    .enumerate()
                    .map(|(i, q)| format!("path {}: {}", i + 1, join(q)))
                    .collect();
                let js: Vec<Vec<usize>> = paths.iter().map(|q| one_based(q)).collect();
                r.put_lines("paths", lines, json!(js));
            }
        }
        Solution::Assignment(a) => {
            r.put("satisfiable", a.is_some());
            if let Some(a) = a {
                let lits: Vec<i64> = a
                    .iter()
                    .enumerate()
                    .map(|(i, &b)| if b { i as i64 + 1 } else { -(i as i64 + 1) })
                    .collect();
                let text = lits.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
                r.put_as("assignment", text, json!(lits));
            }
        }
        Solution::DiameterRadius(d, rad) => {
            r.put("diameter", *d).put("radius", *rad);
        }
        Solution::Decision(b) => {
            r.put("answer", *b);
        }
    }
}

fn solve_cmd(p: Problem, path: &Path, inst: &ProblemInstance, b: &OracleBudget) -> Result<Finished, CliError> {
    let mut r = Report::new("solve");
    r.put("problem", p.name());
    // Digest of the parsed instance, terminals and lists included.
    r.put_as(
        "instance",
        format!("{} {:016x}", path.display(), hsfree_core::reductions::digest(inst)),
        json!({ "path": path.display().to_string(), "digest": format!("{:016x}", hsfree_core::reductions::digest(inst)) }),
    );
    match solve(p, inst, b) {
        Ok(sol) => put_solution(&mut r, &sol),
        Err(Error::Infeasible(why)) => {
            r.put("value", "infeasible").put("reason", why);
        }
        Err(e) => return Err(e.into()),
    }
    ok(r)
}

/// `key: value` pairs of a text report; `c ` prefixes are dropped.
fn report_fields(text: &str) -> Vec<(String, String)> {
    text.lines()
        .map(|l| l.strip_prefix("c ").unwrap_or(l))
        .filter_map(|l| l.split_once(':'))
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .collect()
}

fn numbers<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, CliError> {
    s.split_whitespace()
        .map(|t| t.parse().map_err(|_| CliError::Input(format!("`{t}` is not a number"))))
        .collect()
}

fn vertices(s: &str) -> Result<Vec<usize>, CliError> {
    let vs: Vec<usize> = numbers(s)?;
    vs.into_iter()
        .map(|v| {
            v.checked_sub(1)
                .ok_or_else(|| CliError::Input("vertex 0 in report".into()))
        })
        .collect()
}

fn yes(s: Option<&String>) -> Result<bool, CliError> {
    match s.map(String::as_str) {
        Some("yes") => Ok(true),
        Some("no") => Ok(false),
        other => Err(CliError::Input(format!("expected yes or no, found {other:?}"))),
    }
}

/// Reads back the solution from a `solve` report. `Ok(None)` means the
/// report states the instance is infeasible.
fn parse_solution(p: Problem, text: &str) -> Result<Option<Solution>, CliError> {
    let fields = report_fields(text);
    let get = |k: &str| fields.iter().find(|(key, _)| key == k).map(|(_, v)| v);
    let missing = |k: &str| CliError::Input(format!("report has no `{k}` field"));
    if let Some(name) = get("problem") {
        if name != p.name() {
            return Err(CliError::Input(format!("report is for problem {name}, not {p}")));
        }
    }
    if get("value").map(String::as_str) == Some("infeasible") {
        return Ok(None);
    }
    use Problem::*;
    Ok(Some(match p {
        ListColouring => {
            let c = if yes(get("colourable"))? {
                Some(numbers(get("colouring").ok_or_else(|| missing("colouring"))?)?)
            } else {
                None
            };
            Solution::Colouring(c)
        }
        DisjointPaths | InducedDisjointPaths => {
            let paths = if yes(get("linked"))? {
                let mut v = Vec::new();
                for i in 1.. {
                    match get(&format!("path {i}")) {
                        Some(s) => v.push(vertices(s)?),
                        None => break,
                    }
                }
                Some(v)
            } else {
                None
            };
            Solution::Paths(paths)
        }
        NaeSat => {
            let a = if yes(get("satisfiable"))? {
                let lits: Vec<i64> = numbers(get("assignment").ok_or_else(|| missing("assignment"))?)?;
                Some(lits.iter().map(|&l| l > 0).collect())
            } else {
                None
            };
            Solution::Assignment(a)
        }
        DiameterRadius => {
            let d = get("diameter").ok_or_else(|| missing("diameter"))?;
            let rad = get("radius").ok_or_else(|| missing("radius"))?;
            let n = |s: &str| s.parse().map_err(|_| CliError::Input(format!("`{s}` is not a number")));
            Solution::DiameterRadius(n(d)?, n(rad)?)
        }
        BModifiedListColouring => Solution::Decision(yes(get("answer"))?),
        _ => {
            let value = get("value").ok_or_else(|| missing("value"))?;
            let value = value
                .parse()
                .map_err(|_| CliError::Input(format!("bad value `{value}`")))?;
            let cert = get("certificate").ok_or_else(|| missing("certificate"))?;
            let (kind, rest) = cert.split_once(' ').unwrap_or((cert, ""));
            let certificate = match kind {
                "vertices" => Certificate::Vertices(vertices(rest)?),
                "side" => Certificate::Side(vertices(rest)?),
                "edges" => Certificate::Edges(
                    rest.split_whitespace()
                        .map(|e| {
                            let (a, b) = e
                                .split_once('-')
                                .ok_or_else(|| CliError::Input(format!("bad edge `{e}`")))?;
                            let a = vertices(a)?;
                            let b = vertices(b)?;
                            Ok((a[0], b[0]))
                        })
                        .collect::<Result<_, CliError>>()?,
                ),
                k => return Err(CliError::Input(format!("unknown certificate kind `{k}`"))),
            };
            Solution::Optimum(OptResult { value, certificate })
        }
    }))
}

fn check_cmd(p: Problem, inst: &ProblemInstance, report: &Path, b: &OracleBudget) -> Result<Finished, CliError> {
    let mut r = Report::new("solve");
    r.put("problem", p.name());
    let sol = parse_solution(p, &read(report)?)?;
    let valid = match sol {
        Some(sol) => match check_solution(p, inst, &sol, b) {
            Ok(v) => v,
            Err(e) if e.is_budget() => return Err(e.into()),
            Err(_) => false,
        },
        None => matches!(solve(p, inst, b), Err(Error::Infeasible(_))),
    };
    r.put("check", if valid { "valid" } else { "invalid" });
    Ok(Finished {
        report: r,
        code: !valid as i32,
    })
}

fn gadget(kind: GadgetKind) -> Result<Finished, CliError> {
    let mut r = Report::new("gadget");
    match kind {
        GadgetKind::Nae { cnf } => {
            let phi = load(&mut r, &cnf, format::parse_cnf)?;
            let (g, m) = nae_to_oct_gadget(&phi)?;
            r.put("gadget", "nae-oct").put("target", m);
            attach_graph(&mut r, &g);
        }
        GadgetKind::Steiner { graph, terminals, k } => {
            let g = load(&mut r, &graph, format::parse_graph)?;
            let t = match load(&mut r, &terminals, |s| format::parse_terminals(s, g.n()))? {
                TerminalFile::Set(t) => t,
                TerminalFile::Pairs(_) => return Err(CliError::Input("expected `t` lines".into())),
            };
            let e = steiner_subcubic_expand(&g, &t, k)?;
            r.put("gadget", "steiner-subcubic")
                .put("path_len", e.path_len)
                .put("tree_size", e.tree_size);
            r.put_as("terminals", join(&e.terminals), json!(one_based(&e.terminals)));
            r.put("k", e.k);
            attach_graph(&mut r, &e.graph);
        }
        GadgetKind::Witness { family, base, k } => {
            let fam = load(&mut r, &family, format::parse_family)?;
            let b = load(&mut r, &base, format::parse_graph)?;
            let w = pattern::hardness_witness(&fam, k, &b, &PatternConfig::default())?;
            r.put("gadget", "hardness-witness").put("k", k);
            attach_graph(&mut r, &w);
        }
        GadgetKind::BWitness { family } => {
            let fam = load(&mut r, &family, format::parse_family)?;
            let w = pattern::b_witness(&fam, &PatternConfig::default())?;
            r.put("gadget", "b-witness");
            attach_graph(&mut r, &w);
        }
        GadgetKind::HEll { ell } => {
            if ell == 0 {
                return Err(CliError::Usage("ell must be at least 1".into()));
            }
            r.put("gadget", "h-ell").put("ell", ell);
            attach_graph(&mut r, &pattern::gen_h_ell(ell));
        }
    }
    ok(r)
}

fn generate(kind: GenerateKind) -> Result<Finished, CliError> {
    let mut r = Report::new("generate");
    let check_p = |p: f64| {
        if (0.0..=1.0).contains(&p) {
            Ok(())
        } else {
            Err(CliError::Usage(format!("p = {p} is not a probability")))
        }
    };
    let check_n = |n: usize| {
        if n <= hsfree_core::bitset::MAX_BITSET_VERTICES {
            Ok(())
        } else {
            Err(CliError::Usage(format!(
                "n = {n} exceeds {}",
                hsfree_core::bitset::MAX_BITSET_VERTICES
            )))
        }
    };
    match kind {
        GenerateKind::Gnp { n, p, seed } => {
            check_p(p)?;
            check_n(n)?;
            r.put("model", "gnp").put("n", n).put("p", p).put("seed", seed);
            attach_graph(&mut r, &gnp(n, p, &mut trial_rng(seed, 0)));
        }
        GenerateKind::Connected { n, p, max_m, seed } => {
            check_p(p)?;
            check_n(n)?;
            r.put("model", "connected").put("n", n).put("p", p).put("seed", seed);
            attach_graph(&mut r, &random_connected(n, p, max_m, &mut trial_rng(seed, 0)));
        }
        GenerateKind::Subcubic { n, max_m, seed } => {
            check_n(n)?;
            r.put("model", "subcubic").put("n", n).put("seed", seed);
            attach_graph(&mut r, &random_subcubic(n, max_m, &mut trial_rng(seed, 0)));
        }
        GenerateKind::Cnf { vars, clauses, seed } => {
            let phi = random_cnf(vars, clauses, &mut trial_rng(seed, 0));
            r.put("model", "cnf")
                .put("vars", vars)
                .put("clauses", phi.clauses().len())
                .put("seed", seed);
            let lits: Vec<Vec<i32>> = phi
                .clauses()
                .iter()
                .map(|c| c.iter().map(|l| l.dimacs()).collect())
                .collect();
            r.put_lines("cnf", Vec::new(), json!({ "vars": phi.n_vars(), "clauses": lits }));
            r.set_body(format::write_cnf(&phi));
        }
    }
    ok(r)
}
