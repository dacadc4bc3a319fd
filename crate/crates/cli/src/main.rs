//! `edgeext`: command-line front end.
//!
//! Exit codes: 0 solved or passed, 1 unsolvable or counterexample, 2 input
//! error, 3 node budget exhausted, 4 unsolvable on a known exceptional shape.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use edgeext::colouring::{is_proper, max_precoloured_degree_vertex, validate_precolouring};
use edgeext::gallai::{extend_gallai, extend_subcubic};
use edgeext::instances::{compute_rho, generate, replay, verify, Bounds, Claim, FamilySpec};
use edgeext::io::{
    colouring_to_json, edge_set_from_names, graph_to_json, lists_to_json, outcome_to_json, parse_graph, parse_lists,
    parse_precolouring, precolouring_to_json, to_dot, EdgeLabels, GraphInput,
};
use edgeext::kernel::{extend_bipartite, f_bound, list_colour_bipartite, Bipartition, FBound};
use edgeext::planar::generate::{hub_stacked, icosahedron, random_plane_graph, stacked_triangulation, wheel, PlaneGraph};
use edgeext::planar::{audit_discharge, extend_planar, AuditOptions, PlanarMode, Reading, Variant};
use edgeext::solver::{avoid, chromatic_index, extend_with, solve_list_with, vizing_colour, SolverConfig};
use edgeext::{Charge, ListAssignment, MultiGraph, Palette, PartialEdgeColouring, SolveOutcome, Status};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

const SOLVED: u8 = 0;
const FAILED: u8 = 1;
const INPUT: u8 = 2;
const BUDGET: u8 = 3;
const EXCEPTION: u8 = 4;

#[derive(Parser)]
#[command(name = "edgeext", version, about = "Extend precoloured edge-colourings of multigraphs")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Write the main output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Extend a precolouring to a proper edge-colouring.
    Extend(ExtendArgs),
    /// Find a proper colouring that avoids a forbidden colour on each listed edge.
    Avoid(AvoidArgs),
    /// Decide a list edge-colouring instance.
    SolveList(SolveListArgs),
    /// Chromatic index by exact search.
    Chi(GraphArg),
    /// The odd-set density bound ρ.
    Rho(GraphArg),
    /// Colouring from [Δ+μ] by fan recolouring.
    Vizing(GraphArg),
    /// Generate a graph family instance.
    Gen(GenArgs),
    /// Exhaustively check a claim on small multigraphs.
    Verify(VerifyArgs),
    /// Run the discharging audit on a plane graph.
    Audit(AuditArgs),
    /// Line-graph distances between edges.
    Distance(DistanceArgs),
}

#[derive(Args)]
struct GraphArg {
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Exact,
    Kernel,
    Gallai,
    Planar,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Precoloured matching, palette [Δ+1].
    Matching,
    /// Precoloured distance-3 matching, palette [Δ].
    Distance3,
}

impl From<ModeArg> for PlanarMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Matching => PlanarMode::MatchingDeltaPlus1,
            ModeArg::Distance3 => PlanarMode::Distance3Delta,
        }
    }
}

#[derive(Args)]
struct ExtendArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    colours: PathBuf,
    /// Palette size; overrides the one in the colours file.
    #[arg(long)]
    palette: Option<u32>,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    /// Bound on the precoloured degree of a vertex (kernel and gallai).
    #[arg(long)]
    k: Option<usize>,
    /// Planar extension mode.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Node budget for the exact solver.
    #[arg(long)]
    budget: Option<u64>,
    /// Write the coloured graph as DOT.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct AvoidArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Forbidden colours, in the precolouring format.
    #[arg(long)]
    colours: PathBuf,
    #[arg(long)]
    palette: Option<u32>,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct SolveListArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    lists: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Star,
    Multistar,
    Chain,
    Shannon,
    Wheel,
    Icosahedron,
    Stacked,
    Hub,
    RandomPlane,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Number of spokes (star, multistar) or rim vertices (wheel).
    #[arg(long)]
    s: Option<usize>,
    /// Parallel pendant edges per spoke (multistar).
    #[arg(long)]
    k: Option<usize>,
    /// Maximum degree (chain, hub).
    #[arg(long)]
    delta: Option<usize>,
    /// Number of blocks (chain).
    #[arg(long, default_value_t = 2)]
    blocks: usize,
    /// Edge multiplicities of the triangle, e.g. 2,2,2.
    #[arg(long, value_delimiter = ',')]
    m: Vec<usize>,
    /// Vertex count (stacked, random-plane) or extra stacked vertices (hub).
    #[arg(long)]
    n: Option<usize>,
    /// Seed for random families; falls back to EDGEEXT_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
    /// Also write graph.json and colours.json into this directory.
    #[arg(long)]
    dir: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim to check, e.g. conj1.1.
    #[arg(long)]
    claim: String,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    #[arg(long, default_value_t = 7)]
    max_e: usize,
    #[arg(long, default_value_t = 2)]
    max_mu: usize,
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Added to the claimed palette size; negative values probe sharpness.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    palette_shift: i64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Enumerate every precolouring, not one per colour permutation.
    #[arg(long)]
    all_colourings: bool,
    /// Omit the elapsed time so output is reproducible.
    #[arg(long)]
    no_time: bool,
    /// Save a counterexample as graph.json and colours.json here.
    #[arg(long)]
    dir: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    S41,
    S42,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReadingArg {
    Corrected,
    Literal,
}

#[derive(Args)]
struct AuditArgs {
    /// Graph file with a rotation system.
    #[arg(long)]
    graph: PathBuf,
    /// Precoloured edges; only the edge set is used.
    #[arg(long)]
    colours: Option<PathBuf>,
    /// Precoloured edges by id, as an alternative to --colours.
    #[arg(long, value_delimiter = ',')]
    matching: Vec<String>,
    #[arg(long, value_enum, default_value = "s41")]
    variant: VariantArg,
    #[arg(long, value_enum, default_value = "corrected")]
    reading: ReadingArg,
    /// Δ the rules refer to; defaults to the maximum degree.
    #[arg(long)]
    delta: Option<usize>,
}

#[derive(Args)]
struct DistanceArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Edge ids.
    #[arg(long, value_delimiter = ',', required = true)]
    edges: Vec<String>,
    /// Also report whether the edges form a distance-t matching.
    #[arg(long)]
    t: Option<usize>,
}

/// What a verb produced: the JSON document, its human rendering and the
/// exit code.
struct Report {
    json: Value,
    text: String,
    code: u8,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_graph(path: &Path) -> Result<GraphInput> {
    parse_graph(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn write_dot(path: &Option<PathBuf>, g: &MultiGraph, c: Option<&PartialEdgeColouring>, labels: &EdgeLabels) -> Result<()> {
    if let Some(p) = path {
        fs::write(p, to_dot(g, c, labels)).with_context(|| format!("cannot write {}", p.display()))?;
    }
    Ok(())
}

fn status_code(s: Status) -> u8 {
    match s {
        Status::Solved => SOLVED,
        Status::Unsolvable => FAILED,
        Status::Budget => BUDGET,
    }
}

/// Rejects a "Solved" outcome that is not a proper, complete colouring from `p`.
fn recheck(g: &MultiGraph, o: &SolveOutcome, p: Palette) -> Result<()> {
    if o.is_solved()
        && (!is_proper(g, &o.colouring)
            || o.colouring.len() != g.edge_count()
            || validate_precolouring(g, &o.colouring, p).is_err())
    {
        bail!("internal error: solver returned an invalid colouring");
    }
    Ok(())
}

fn outcome_text(o: &SolveOutcome, labels: &EdgeLabels) -> String {
    let mut s = format!("status  {:?}\nmethod  {:?}\nnodes   {}\n", o.status, o.method, o.stats.nodes);
    for (e, c) in o.colouring.iter() {
        s.push_str(&format!("  edge {:>4}  colour {c}\n", labels.name(e)));
    }
    s
}

fn need_palette(p: Palette, need: usize, what: &str) -> Result<()> {
    if (p.size() as usize) < need {
        bail!("{what} needs a palette of at least {need}, got {}", p.size());
    }
    Ok(())
}

fn cmd_extend(a: &ExtendArgs) -> Result<Report> {
    let input = load_graph(&a.graph)?;
    let g = &input.graph;
    let (file_palette, c) = parse_precolouring(&read(&a.colours)?, &input)?;
    let p = match a.palette {
        Some(k) => Palette::new(k)?,
        None => file_palette,
    };
    validate_precolouring(g, &c, p)?;
    let delta = g.max_degree();
    let kv = max_precoloured_degree_vertex(g, &c.domain());
    let k = a.k.unwrap_or(kv);
    let cfg = SolverConfig { node_budget: a.budget };
    let method = match a.method {
        MethodArg::Auto if a.mode.is_some() => MethodArg::Planar,
        MethodArg::Auto => {
            let fits = |need: usize| p.size() as usize >= need && c.max_colour().unwrap_or(0) as usize <= need;
            if g.is_bipartite() && fits(delta + kv) {
                MethodArg::Kernel
            } else if delta <= 3 && g.is_matching(&c.domain()) && fits(4) {
                MethodArg::Gallai
            } else {
                MethodArg::Exact
            }
        }
        m => m,
    };
    let mut exception = None;
    let out = match method {
        MethodArg::Exact | MethodArg::Auto => extend_with(g, &c, p, &cfg)?,
        MethodArg::Kernel => {
            need_palette(p, delta + k, "kernel extension")?;
            extend_bipartite(g, &Bipartition::of(g)?, &c, k)?
        }
        MethodArg::Gallai if a.method == MethodArg::Auto => extend_subcubic(g, &c)?,
        MethodArg::Gallai => {
            need_palette(p, delta + k, "degree-list extension")?;
            let r = extend_gallai(g, &c, k)?;
            exception = r.exception;
            r.outcome
        }
        MethodArg::Planar => {
            let mode: PlanarMode = a.mode.ok_or_else(|| anyhow!("--method planar needs --mode"))?.into();
            need_palette(p, mode.palette(delta), "planar extension")?;
            extend_planar(g, &c, mode)?
        }
    };
    recheck(g, &out, p)?;
    write_dot(&a.dot, g, Some(&out.colouring), &input.labels)?;
    let mut json = outcome_to_json(&out, &input.labels);
    json["palette"] = json!(p.size());
    let mut text = outcome_text(&out, &input.labels);
    let mut code = status_code(out.status);
    if let Some(x) = &exception {
        json["exception"] = serde_json::to_value(x)?;
        text.push_str(&format!("exception  {x:?}\n"));
        if !out.is_solved() {
            code = EXCEPTION;
        }
    }
    Ok(Report { json, text, code })
}

fn cmd_avoid(a: &AvoidArgs) -> Result<Report> {
    let input = load_graph(&a.graph)?;
    let g = &input.graph;
    let (file_palette, forbidden) = parse_precolouring(&read(&a.colours)?, &input)?;
    let p = match a.palette {
        Some(k) => Palette::new(k)?,
        None => file_palette,
    };
    let out = avoid(g, &forbidden, p)?;
    recheck(g, &out, p)?;
    if out.is_solved() && forbidden.iter().any(|(e, c)| out.colouring.get(e) == Some(c)) {
        bail!("internal error: colouring uses a forbidden colour");
    }
    write_dot(&a.dot, g, Some(&out.colouring), &input.labels)?;
    let mut json = outcome_to_json(&out, &input.labels);
    json["palette"] = json!(p.size());
    Ok(Report { json, text: outcome_text(&out, &input.labels), code: status_code(out.status) })
}

fn cmd_solve_list(a: &SolveListArgs) -> Result<Report> {
    let input = load_graph(&a.graph)?;
    let g = &input.graph;
    let (p, l) = parse_lists(&read(&a.lists)?, &input)?;
    l.covers(g)?;
    let cfg = SolverConfig { node_budget: a.budget };
    let long_enough = |l: &ListAssignment| f_bound(g, FBound::Bipartite).iter().all(|(&e, &f)| l.get(e).unwrap().len() >= f);
    let method = match a.method {
        MethodArg::Auto if g.is_bipartite() && long_enough(&l) => MethodArg::Kernel,
        MethodArg::Auto => MethodArg::Exact,
        MethodArg::Gallai | MethodArg::Planar => bail!("solve-list supports --method auto, exact or kernel"),
        m => m,
    };
    let out = match method {
        MethodArg::Kernel => list_colour_bipartite(g, &Bipartition::of(g)?, &l)?,
        _ => solve_list_with(g, &l, &cfg)?,
    };
    recheck(g, &out, p)?;
    if out.is_solved() && !edgeext::colouring::respects_lists(g, &out.colouring, &l) {
        bail!("internal error: colouring leaves the lists");
    }
    write_dot(&a.dot, g, Some(&out.colouring), &input.labels)?;
    let mut json = outcome_to_json(&out, &input.labels);
    json["lists"] = lists_to_json(p, &l, &input.labels)["lists"].clone();
    Ok(Report { json, text: outcome_text(&out, &input.labels), code: status_code(out.status) })
}

fn cmd_chi(a: &GraphArg) -> Result<Report> {
    let g = load_graph(&a.graph)?.graph;
    let chi = chromatic_index(&g)?;
    let s = g.degree_stats();
    let json = json!({
        "chromatic_index": chi,
        "max_degree": s.delta,
        "max_multiplicity": g.max_multiplicity(),
        "vizing_bound": s.delta + g.max_multiplicity(),
        "shannon_bound": 3 * s.delta / 2,
    });
    let text = format!("χ′ = {chi}  (Δ = {}, μ = {})\n", s.delta, g.max_multiplicity());
    Ok(Report { json, text, code: SOLVED })
}

fn cmd_rho(a: &GraphArg) -> Result<Report> {
    let g = load_graph(&a.graph)?.graph;
    let rho: Charge = compute_rho(&g)?;
    let value = *rho.numer() as f64 / *rho.denom() as f64;
    let json = json!({ "rho": rho.to_string(), "value": value, "ceil": rho.ceil().to_integer() });
    Ok(Report { json, text: format!("ρ = {rho} ≈ {value:.4}\n"), code: SOLVED })
}

fn cmd_vizing(a: &GraphArg) -> Result<Report> {
    let input = load_graph(&a.graph)?;
    let g = &input.graph;
    let c = vizing_colour(g);
    let bound = g.max_degree() + g.max_multiplicity();
    if !is_proper(g, &c) || c.len() != g.edge_count() || c.max_colour().unwrap_or(0) as usize > bound {
        bail!("internal error: fan recolouring produced an invalid colouring");
    }
    let json = json!({
        "colouring": colouring_to_json(&c, &input.labels),
        "colours_used": c.colour_count(),
        "bound": bound,
    });
    let text = format!("{} colours used, bound Δ+μ = {bound}\n", c.colour_count());
    Ok(Report { json, text, code: SOLVED })
}

fn seed(a: &GenArgs) -> Result<u64> {
    if let Some(s) = a.seed {
        return Ok(s);
    }
    match std::env::var("EDGEEXT_SEED") {
        Ok(v) => v.parse().with_context(|| format!("EDGEEXT_SEED is not an integer: {v:?}")),
        Err(_) => Ok(0),
    }
}

fn cmd_gen(a: &GenArgs) -> Result<Report> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| anyhow!("this family needs --{flag}"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed(a)?);
    let spec = match a.family {
        FamilyArg::Star => Some(FamilySpec::SubdividedStar { s: need(a.s, "s")? }),
        FamilyArg::Multistar => Some(FamilySpec::MultiStar { s: need(a.s, "s")?, k: need(a.k, "k")? }),
        FamilyArg::Chain => Some(FamilySpec::ChainBlocks { delta: need(a.delta, "delta")?, blocks: a.blocks }),
        FamilyArg::Shannon => match a.m[..] {
            [m1, m2, m3] => Some(FamilySpec::ShannonTriangle { m1, m2, m3 }),
            [m] => Some(FamilySpec::ShannonTriangle { m1: m, m2: m, m3: m }),
            _ => bail!("--m takes one or three multiplicities"),
        },
        _ => None,
    };
    let labels = EdgeLabels::default();
    let (graph_json, colours, palette, family) = match spec {
        Some(spec) => {
            let inst = generate(spec)?;
            let fam = serde_json::to_value(spec)?;
            (graph_to_json(&inst.graph, &labels, None), inst.precolouring, inst.palette, fam)
        }
        None => {
            let plane: PlaneGraph = match a.family {
                FamilyArg::Wheel => {
                    let s = need(a.s, "s")?;
                    if s < 3 {
                        bail!("a wheel needs --s ≥ 3");
                    }
                    wheel(s)
                }
                FamilyArg::Icosahedron => icosahedron(),
                FamilyArg::Stacked => {
                    let n = need(a.n, "n")?;
                    if n < 3 {
                        bail!("a stacked triangulation needs --n ≥ 3");
                    }
                    stacked_triangulation(n, &mut rng)
                }
                FamilyArg::Hub => {
                    let d = need(a.delta, "delta")?;
                    if d < 6 {
                        bail!("hub graphs need --delta ≥ 6");
                    }
                    hub_stacked(d, a.n.unwrap_or(0), &mut rng)
                }
                _ => {
                    let n = need(a.n, "n")?;
                    if n < 4 {
                        bail!("random plane graphs need --n ≥ 4");
                    }
                    random_plane_graph(n, &mut rng)
                }
            };
            let palette = Palette::new(plane.graph.max_degree().max(1) as u32 + 1)?;
            let fam = json!({ "family": a.family.to_possible_value().unwrap().get_name() });
            (graph_to_json(&plane.graph, &labels, Some(&plane.rotation)), PartialEdgeColouring::new(), palette, fam)
        }
    };
    let colours_json = precolouring_to_json(palette, &colours, &labels);
    if let Some(dir) = &a.dir {
        save(dir, &graph_json, &colours_json)?;
    }
    let n = graph_json["n"].clone();
    let e = graph_json["edges"].as_array().map_or(0, |v| v.len());
    let json = json!({ "family": family, "graph": graph_json, "precolouring": colours_json });
    let text = format!("generated {n} vertices, {e} edges, palette {}\n", palette.size());
    Ok(Report { json, text, code: SOLVED })
}

fn save(dir: &Path, graph: &Value, colours: &Value) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    fs::write(dir.join("graph.json"), serde_json::to_string_pretty(graph)? + "\n")?;
    fs::write(dir.join("colours.json"), serde_json::to_string_pretty(colours)? + "\n")?;
    Ok(())
}

fn cmd_verify(a: &VerifyArgs) -> Result<Report> {
    let claim: Claim = a.claim.parse()?;
    if a.jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    let bounds = Bounds {
        n_max: a.max_n,
        e_max: a.max_e,
        mu_max: a.max_mu,
        k: a.k,
        palette_shift: a.palette_shift,
        jobs: a.jobs,
        up_to_colour_permutation: !a.all_colourings,
        timed: !a.no_time,
    };
    let r = verify(claim, bounds)?;
    if let Some(cx) = &r.counterexample {
        if !replay(claim, cx)? {
            bail!("internal error: counterexample does not replay");
        }
        if let Some(dir) = &a.dir {
            let j = cx.to_json();
            save(dir, &j["graph"], &j["precolouring"])?;
        }
    }
    let code = if r.passed() { SOLVED } else { FAILED };
    Ok(Report { json: r.to_json(), text: r.to_table(), code })
}

fn cmd_audit(a: &AuditArgs) -> Result<Report> {
    let input = load_graph(&a.graph)?;
    let rotation = input.rotation.as_ref().ok_or_else(|| anyhow!("the audit needs a graph file with a rotation"))?;
    let m = match &a.colours {
        Some(path) => parse_precolouring(&read(path)?, &input)?.1.domain(),
        None => edge_set_from_names(a.matching.iter().map(String::as_str), &input)?,
    };
    let opts = AuditOptions {
        variant: match a.variant {
            VariantArg::S41 => Variant::S41,
            VariantArg::S42 => Variant::S42,
        },
        reading: match a.reading {
            ReadingArg::Corrected => Reading::Corrected,
            ReadingArg::Literal => Reading::Literal,
        },
        delta: a.delta,
    };
    let r = audit_discharge::<Charge>(&input.graph, rotation, &m, opts)?;
    let mut text = format!(
        "Σα = {}  Σγ = {}  Σδ = {}  identities {}\n",
        r.sum_alpha,
        r.sum_gamma,
        r.sum_delta,
        if r.identities_hold() { "hold" } else { "FAIL" }
    );
    text.push_str(&format!("failing vertices {:?}\nfailing faces    {:?}\n", r.failing_vertices(), r.failing_faces()));
    for v in &r.violations {
        text.push_str(&format!("violation  {}\n", v.name()));
    }
    let code = if r.identities_hold() && r.failures_explained() { SOLVED } else { FAILED };
    Ok(Report { json: r.to_json(), text, code })
}

fn cmd_distance(a: &DistanceArgs) -> Result<Report> {
    let input = load_graph(&a.graph)?;
    let g = &input.graph;
    let ids = a
        .edges
        .iter()
        .map(|n| {
            let id = input.labels.resolve(n)?;
            g.edge(id)?;
            Ok(id)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut pairs = Vec::new();
    let mut text = String::new();
    for (i, &e) in ids.iter().enumerate() {
        for &f in &ids[i + 1..] {
            let d = g.edge_distance(e, f)?;
            text.push_str(&format!("{} {}  {d}\n", input.labels.name(e), input.labels.name(f)));
            pairs.push(json!({ "edges": [input.labels.name(e), input.labels.name(f)], "distance": d.to_string() }));
        }
    }
    let mut json = json!({ "pairs": pairs });
    if let Some(t) = a.t {
        let ok = g.is_distance_matching(&ids.iter().copied().collect(), t)?;
        json["distance_t_matching"] = json!({ "t": t, "holds": ok });
        text.push_str(&format!("distance-{t} matching: {ok}\n"));
    }
    Ok(Report { json, text, code: SOLVED })
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.verb {
        Verb::Extend(a) => cmd_extend(a),
        Verb::Avoid(a) => cmd_avoid(a),
        Verb::SolveList(a) => cmd_solve_list(a),
        Verb::Chi(a) => cmd_chi(a),
        Verb::Rho(a) => cmd_rho(a),
        Verb::Vizing(a) => cmd_vizing(a),
        Verb::Gen(a) => cmd_gen(a),
        Verb::Verify(a) => cmd_verify(a),
        Verb::Audit(a) => cmd_audit(a),
        Verb::Distance(a) => cmd_distance(a),
    }
}

fn emit(cli: &Cli, r: &Report) -> Result<()> {
    let body = if cli.pretty { r.text.clone() } else { serde_json::to_string_pretty(&r.json)? + "\n" };
    match &cli.out {
        Some(p) => fs::write(p, body).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INPUT } else { SOLVED });
        }
    };
    match run(&cli).and_then(|r| emit(&cli, &r).map(|_| r.code)) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(INPUT)
        }
    }
}
