use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use equimatch::eqsets::{
    build_exp2, compute_eta_xp, eta_cycle_closed_form, eta_expandable_shortcut, is_equimatchable_set,
    Verdict,
};
use equimatch::gadgets::{
    figure2_fixture, make_k_of, make_kp4, make_kp4_connected, make_poljak_instance, make_prism,
};
use equimatch::gallai_edmonds::decompose;
use equimatch::gap::{decide, is_equimatchable, Decider, GapCertificate};
use equimatch::graph::{build_family, read_graph, write_graph, Family};
use equimatch::invariants::maximum_clique;
use equimatch::matching::MatchingMetrics;
use equimatch::{Error, Graph, Matching};

const SCHEMA: &str = "equimatch/1";

#[derive(Parser)]
#[command(name = "equimatch", version, about = "Matching gap and equimatchability defect of small graphs")]
struct Cli {
    /// Largest vertex count for exponential routines.
    #[arg(long, global = true, default_value_t = 20)]
    cap: usize,

    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Args)]
struct Input {
    /// Edge-list file; standard input when omitted or `-`.
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// nu, beta, mu, the Gallai-Edmonds partition and equimatchability.
    Analyze(Input),
    /// Decide mu(G) >= k.
    Gap {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Alg::Alg2)]
        alg: Alg,
    },
    /// Equimatchability defect.
    Eta {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Method::HittingSet)]
        method: Method,
    },
    /// Test whether a vertex set is equimatchable.
    Eqset {
        #[command(flatten)]
        input: Input,
        /// Comma-separated vertices, e.g. `0,3,5`.
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
    },
    /// Print a gadget or family as an edge list.
    ///
    /// Gadgets: prism K, kp4 K, kp4-connected K, figure2, k-of, poljak
    /// (the last two transform the input graph). Families: path N, cycle N,
    /// complete N, complete-bipartite A B, star K, kk2 K, edgeless N.
    Gen {
        gadget: String,
        params: Vec<usize>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Alg {
    Brute,
    IsEnum,
    Alg1,
    Alg2,
}

impl From<Alg> for Decider {
    fn from(a: Alg) -> Decider {
        match a {
            Alg::Brute => Decider::BruteForce,
            Alg::IsEnum => Decider::IndependentSets,
            Alg::Alg1 => Decider::Alg1,
            Alg::Alg2 => Decider::Alg2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Xp,
    HittingSet,
    Shortcut,
    Cycle,
}

enum Failure {
    Input(String),
    Refused(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Hypothesis(_) | Error::ScaleCap { .. } => Failure::Refused(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// Text lines plus the JSON document for the same result.
struct Report {
    text: Vec<String>,
    json: Value,
}

fn load(path: &Option<PathBuf>) -> Result<Graph, Failure> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
            s
        }
    };
    Ok(read_graph(&text)?)
}

fn capped(g: &Graph, cap: usize, what: &'static str) -> Result<(), Failure> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::ScaleCap { n, cap, what }.into());
    }
    Ok(())
}

fn fmt_set(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn fmt_matching(m: &Matching) -> String {
    let parts: Vec<String> = m.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("[{}]", parts.join(" "))
}

fn analyze(g: &Graph, cap: usize) -> Report {
    let n = g.vertex_count();
    let metrics = MatchingMetrics::compute(g, n <= cap);
    let ge = decompose(g);
    let eq = is_equimatchable(g);
    let mut text = vec![
        format!("vertices: {n}"),
        format!("edges: {}", g.edge_count()),
        format!("nu: {}", metrics.nu),
    ];
    let mut notice = None;
    match (metrics.beta, metrics.mu) {
        (Some(b), Some(m)) => {
            text.push(format!("beta: {b}"));
            text.push(format!("mu: {m}"));
        }
        _ => {
            let msg = format!("beta and mu omitted: {n} vertices exceeds --cap {cap}");
            text.push(format!("notice: {msg}"));
            notice = Some(msg);
        }
    }
    text.push(format!("equimatchable: {eq}"));
    text.push(format!("D: {}", fmt_set(&ge.d)));
    text.push(format!("A: {}", fmt_set(&ge.a)));
    text.push(format!("C: {}", fmt_set(&ge.c)));
    text.push(format!("rho: {}", ge.rho));
    let mut json = json!({
        "n": n,
        "m": g.edge_count(),
        "nu": metrics.nu,
        "equimatchable": eq,
        "gallai_edmonds": ge,
    });
    if let (Some(b), Some(m)) = (metrics.beta, metrics.mu) {
        json["beta"] = json!(b);
        json["mu"] = json!(m);
    }
    if let Some(msg) = notice {
        json["notice"] = json!(msg);
    }
    Report { text, json }
}

fn gap(g: &Graph, k: usize, alg: Alg, cap: usize) -> Result<Report, Failure> {
    let d = Decider::from(alg);
    capped(g, cap, "the gap deciders")?;
    let cert = decide(g, k, d);
    let mut text = vec![format!("mu >= {k} ({}): {}", d.name(), if cert.is_some() { "YES" } else { "NO" })];
    if let Some(c) = &cert {
        let m = c.verify(g, k)?;
        text.push(format!("matching: {} ({} edges)", fmt_matching(&m), m.len()));
        text.extend(certificate_lines(c));
    }
    let json = json!({
        "k": k,
        "alg": d.name(),
        "answer": if cert.is_some() { "YES" } else { "NO" },
        "certificate": cert,
    });
    Ok(Report { text, json })
}

fn certificate_lines(c: &GapCertificate) -> Vec<String> {
    match c {
        GapCertificate::BruteForce { minimum_maximal, .. } => {
            vec![format!("minimum maximal matching: {}", fmt_matching(minimum_maximal))]
        }
        GapCertificate::IndependentSet { independent_set, .. } => {
            vec![format!("independent set: {}", fmt_set(independent_set))]
        }
        GapCertificate::Alg1(a) => vec![
            format!("I: {}", fmt_set(&a.independent_set)),
            format!("M_A: {}", fmt_matching(&a.m_a)),
            format!("M_A*: {}", fmt_matching(&a.m_a_star)),
            format!("exposed roots: {}", fmt_set(&a.exposed_roots)),
        ],
        GapCertificate::Alg2(b) => vec![
            format!("M*: {}", fmt_matching(&b.m_star)),
            format!("I: {}", fmt_set(&b.independent_set)),
            format!("Z: {}", fmt_set(&b.z)),
            format!("T: {}", fmt_set(&b.t)),
            format!("U: {}", fmt_set(&b.u)),
        ],
    }
}

fn is_cycle(g: &Graph) -> bool {
    let all: Vec<usize> = g.vertices().collect();
    g.vertex_count() >= 3 && g.is_regular(2) && g.components_within(&all).len() == 1
}

fn eta(g: &Graph, method: Method, cap: usize) -> Result<Report, Failure> {
    let (name, value, witness) = match method {
        Method::Xp => {
            capped(g, cap, "the subset search")?;
            let (v, w) = compute_eta_xp(g);
            ("xp", v, Some(w))
        }
        Method::HittingSet => {
            capped(g, cap, "the hitting-set formulation")?;
            let w = build_exp2(g).minimum_hitting_set();
            ("hitting-set", w.len(), Some(w))
        }
        Method::Shortcut => {
            capped(g, cap, "the clique search")?;
            let v = eta_expandable_shortcut(g)?;
            let clique = maximum_clique(g);
            let w: Vec<usize> = g.vertices().filter(|v| !clique.contains(v)).collect();
            ("shortcut", v, Some(w))
        }
        Method::Cycle => {
            if !is_cycle(g) {
                return Err(Error::Hypothesis("graph is not a cycle".into()).into());
            }
            ("cycle", eta_cycle_closed_form(g.vertex_count())?, None)
        }
    };
    let mut text = vec![format!("eta ({name}): {value}")];
    if let Some(w) = &witness {
        text.push(format!("witness: {}", fmt_set(w)));
    }
    let json = json!({ "method": name, "eta": value, "witness": witness });
    Ok(Report { text, json })
}

fn eqset(g: &Graph, set: &[usize]) -> Result<Report, Failure> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    let r = is_equimatchable_set(g, &s)?;
    let verdict = match r.verdict {
        Verdict::Equimatchable => "equimatchable",
        Verdict::NotEquimatchable => "not equimatchable",
        Verdict::Vacuous => "vacuous (no matching covers the set)",
    };
    let mut text = vec![format!("{}: {verdict}", fmt_set(&s))];
    if let Some(c) = &r.counterexample {
        text.push(format!("smaller: {} ({} edges)", fmt_matching(&c.smaller), c.smaller.len()));
        text.push(format!("larger: {} ({} edges)", fmt_matching(&c.larger), c.larger.len()));
    }
    let json = serde_json::to_value(&r).expect("report serializes");
    Ok(Report { text, json })
}

fn one(gadget: &str, params: &[usize]) -> Result<usize, Failure> {
    match params {
        [k] => Ok(*k),
        _ => Err(Failure::Input(format!("{gadget} takes exactly one parameter"))),
    }
}

fn gen(gadget: &str, params: &[usize], input: &Option<PathBuf>) -> Result<Report, Failure> {
    let g = match gadget {
        "prism" => make_prism(one(gadget, params)?)?,
        "kp4" => make_kp4(one(gadget, params)?)?,
        "kp4-connected" => make_kp4_connected(one(gadget, params)?)?,
        "figure2" => figure2_fixture(),
        "k-of" => make_k_of(&load(input)?)?,
        "poljak" => make_poljak_instance(&load(input)?)?,
        other => build_family(other.parse::<Family>()?, params)?,
    };
    let text = write_graph(&g).lines().map(str::to_owned).collect();
    let json = json!({ "gadget": gadget, "params": params, "graph": g });
    Ok(Report { text, json })
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Analyze(i) => Ok(analyze(&load(&i.input)?, cli.cap)),
        Command::Gap { input, k, alg } => gap(&load(&input.input)?, *k, *alg, cli.cap),
        Command::Eta { input, method } => eta(&load(&input.input)?, *method, cli.cap),
        Command::Eqset { input, set } => eqset(&load(&input.input)?, set),
        Command::Gen { gadget, params, input } => gen(gadget, params, input),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Analyze(_) => "analyze",
        Command::Gap { .. } => "gap",
        Command::Eta { .. } => "eta",
        Command::Eqset { .. } => "eqset",
        Command::Gen { .. } => "gen",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (code, message) = match run(&cli) {
        Ok(report) => {
            match cli.output {
                Output::Text => {
                    for line in report.text {
                        println!("{line}");
                    }
                }
                Output::Json => {
                    let mut doc = json!({ "schema": SCHEMA, "command": command_name(&cli.command) });
                    if let (Value::Object(d), Value::Object(body)) = (&mut doc, report.json) {
                        d.extend(body);
                    }
                    println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
                }
            }
            return ExitCode::SUCCESS;
        }
        Err(Failure::Input(m)) => (1, m),
        Err(Failure::Refused(m)) => (3, m),
    };
    match cli.output {
        Output::Text => eprintln!("error: {message}"),
        Output::Json => eprintln!(
            "{}",
            json!({ "schema": SCHEMA, "command": command_name(&cli.command), "error": message, "exit": code })
        ),
    }
    ExitCode::from(code)
}
