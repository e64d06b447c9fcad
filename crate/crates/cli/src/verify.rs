use std::path::PathBuf;
use std::time::Instant;

use clap::Args;
use hsfree_core::oracles::ProblemInstance;
use hsfree_core::reductions::{random_base, trial_rng, verify_claim, ClaimBudget, ClaimId, ClaimReport, SuiteConfig};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::commands::{load_cnf, load_graph, load_terminals};
use crate::format::TerminalFile;
use crate::{BudgetArgs, CliError, Finished, Report};

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Claim name such as MAXCUT_2SUB, or `all`.
    #[arg(long)]
    pub claim: String,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    /// Largest base graph (variables, for the formula claims).
    #[arg(long, default_value_t = 7)]
    pub max_n: usize,
    /// Most edges of a base graph (clauses, for the formula claims).
    #[arg(long, default_value_t = 10)]
    pub max_m: usize,
    /// Seed of the trial streams; required unless --instance is given.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Check one base instance (graph file, or CNF for formula claims)
    /// instead of random trials.
    #[arg(long, conflicts_with = "seed")]
    pub instance: Option<PathBuf>,
    /// Terminal or pair file for --instance.
    #[arg(long, requires = "instance")]
    pub terminals: Option<PathBuf>,
    /// Worker threads; the output does not depend on it.
    #[arg(long)]
    pub threads: Option<usize>,
    /// Report run times. Off by default so reports are reproducible.
    #[arg(long)]
    pub timings: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

fn claims(name: &str) -> Result<Vec<ClaimId>, CliError> {
    if name.eq_ignore_ascii_case("all") {
        return Ok(ClaimId::ALL.to_vec());
    }
    name.parse::<ClaimId>()
        .map(|c| vec![c])
        .map_err(|_| CliError::Usage(format!("unknown claim `{name}`")))
}

fn load_base(claim: ClaimId, args: &VerifyArgs) -> Result<ProblemInstance, CliError> {
    use ClaimId::*;
    let path = args.instance.as_ref().expect("instance mode");
    if matches!(claim, NaeOctGadget | Ioct2SubGadget) {
        return Ok(ProblemInstance::Formula(load_cnf(path)?));
    }
    let g = load_graph(path)?;
    let needs_terminals = matches!(
        claim,
        Est1Sub | Emwc1Sub | Nmwc1Sub | SteinerSubcubic | Dp1Sub | Idp1Sub
    );
    Ok(match (needs_terminals, &args.terminals) {
        (false, _) => ProblemInstance::Graph(g),
        (true, None) => return Err(CliError::Usage(format!("claim {claim} needs --terminals"))),
        (true, Some(t)) => match (load_terminals(t, g.n())?, matches!(claim, Dp1Sub | Idp1Sub)) {
            (TerminalFile::Pairs(p), true) => ProblemInstance::Pairs(g, p),
            (TerminalFile::Set(t), false) => ProblemInstance::Terminals(g, t),
            _ => return Err(CliError::Input(format!("wrong terminal file kind for claim {claim}"))),
        },
    })
}

fn trial_json(index: usize, r: &ClaimReport, timings: bool) -> Value {
    let mut v = json!({
        "index": index,
        "digest": format!("{:016x}", r.digest),
        "lhs": r.lhs.to_string(),
        "rhs": r.rhs.to_string(),
        "relation": r.relation.to_string(),
        "pass": r.pass,
    });
    if let Some(note) = &r.note {
        v["note"] = json!(note);
    }
    if let (true, Some(t)) = (timings, r.runtime) {
        v["runtime_ms"] = json!(t.as_secs_f64() * 1e3);
    }
    v
}

fn trial_line(index: usize, r: &ClaimReport, timings: bool) -> String {
    let mut s = format!(
        "trial {index}: {} digest={:016x} lhs={} rhs={} [{}]",
        if r.pass { "pass" } else { "FAIL" },
        r.digest,
        r.lhs,
        r.rhs,
        r.relation
    );
    if let Some(note) = &r.note {
        s.push_str(&format!(" ({note})"));
    }
    if let (true, Some(t)) = (timings, r.runtime) {
        s.push_str(&format!(" time={:.3}ms", t.as_secs_f64() * 1e3));
    }
    s
}

pub(crate) fn run(args: &VerifyArgs) -> Result<Finished, CliError> {
    let ids = claims(&args.claim)?;
    if args.instance.is_none() && args.seed.is_none() {
        return Err(CliError::Usage("verify needs --seed (or --instance)".into()));
    }
    if args.max_n == 0 {
        return Err(CliError::Usage("--max-n must be at least 1".into()));
    }
    let budget = ClaimBudget {
        oracle: args.budget.oracle(),
        width: args.budget.width(),
    };
    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(t) = args.threads {
            b = b.num_threads(t);
        }
        b.build().map_err(|e| CliError::Usage(e.to_string()))?
    };
    let config = SuiteConfig::new(args.max_n, args.max_m);
    let mut report = Report::new("verify");
    if let Some(seed) = args.seed {
        report
            .put("seed", seed)
            .put("trials", args.trials)
            .put("max_n", args.max_n)
            .put("max_m", args.max_m);
    }
    let started = Instant::now();
    let (mut passed, mut total) = (0, 0);
    let mut summaries = Vec::new();
    let mut budget_error = None;
    for claim in ids {
        let bases: Vec<Result<ProblemInstance, CliError>> = match args.seed {
            Some(seed) => (0..args.trials)
                .map(|i| Ok(random_base(claim, &config, &mut trial_rng(seed, i))))
                .collect(),
            None => vec![load_base(claim, args)],
        };
        let results: Vec<Result<ClaimReport, CliError>> = pool.install(|| {
            bases
                .into_par_iter()
                .map(|base| {
                    let t = Instant::now();
                    let mut r = verify_claim(claim, &base?, &budget)?;
                    r.runtime = Some(t.elapsed());
                    Ok(r)
                })
                .collect()
        });
        let mut lines = vec![format!("claim: {claim}"), format!("statement: {}", claim.statement())];
        let mut trials = Vec::new();
        let mut claim_pass = 0;
        for (i, r) in results.iter().enumerate() {
            match r {
                Ok(r) => {
                    claim_pass += r.pass as usize;
                    lines.push(trial_line(i, r, args.timings));
                    trials.push(trial_json(i, r, args.timings));
                }
                Err(e) => {
                    if matches!(e, CliError::Budget(_)) {
                        budget_error.get_or_insert_with(|| e.to_string());
                    } else if args.instance.is_some() {
                        return Err(CliError::Input(e.to_string()));
                    }
                    lines.push(format!("trial {i}: error: {e}"));
                    trials.push(json!({ "index": i, "error": e.to_string() }));
                }
            }
        }
        lines.push(format!("pass: {claim_pass}/{}", results.len()));
        passed += claim_pass;
        total += results.len();
        summaries.push(json!({
            "claim": claim.name(),
            "statement": claim.statement(),
            "passed": claim_pass,
            "total": results.len(),
            "trials": trials,
        }));
        report.text_only(lines);
    }
    // The JSON form keeps one array of per-claim summaries.
    report.put_lines("claims", Vec::new(), json!(summaries));
    if summaries.len() > 1 {
        report.put("total", format!("{passed}/{total}"));
    }
    if args.timings {
        report.put("time_s", started.elapsed().as_secs_f64());
    }
    // Exceeding a budget leaves the claim undecided, which outranks a failure.
    let code = match budget_error {
        Some(e) => {
            report.put("error", e);
            3
        }
        None => (passed < total) as i32,
    };
    Ok(Finished { report, code })
}
