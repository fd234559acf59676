use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use intervalia::explorer::{self, OrderFilters, SearchOptions};
use intervalia::height3::construct_height3;
use intervalia::io::{
    self, ErrorDoc, OrderAnalysisDoc, OrderDoc, PermAnalysisDoc, RepresentationDoc, VerdictDoc,
};
use intervalia::kcount::{self, is_k_count_order_with, is_k_count_perm_with};
use intervalia::order::{canonical_representation, order_from_ascent};
use intervalia::render::{self, length_colors, RenderInput, RenderSpec, Target};
use intervalia::{construct2, AscentSequence, Error, IntervalFamily, IntervalOrder, Permutation};

#[derive(Parser)]
#[command(name = "intervalia", version, about = "Interval orders, permutations and few-length representations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true)]
    allow_large: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Svg,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct Source {
    /// Ascent sequence, e.g. 0,1,0,2
    #[arg(long)]
    ascent: Option<String>,
    /// Order JSON file
    #[arg(long)]
    order: Option<PathBuf>,
    /// Permutation in one-line notation, e.g. "[2,1,3]"
    #[arg(long)]
    perm: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse an input and print it in canonical JSON.
    Parse(#[command(flatten)] Source),
    /// Structural facts about an order or a permutation.
    Analyze(#[command(flatten)] Source),
    /// 2-count representation of a depth-2 permutation.
    TwocountPerm { perm: String },
    /// 2-count representation of a height-3, depth-2 interval order.
    TwocountOrder(#[command(flatten)] Source),
    /// Exact k-count decision.
    Kcount {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        k: usize,
    },
    /// Exhaustive searches over small instances.
    Search {
        #[arg(value_enum)]
        kind: SearchKind,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Keep orders that contain 4+1 or have depth above 2.
        #[arg(long)]
        no_filters: bool,
        #[arg(long)]
        no_shortcuts: bool,
        /// Also write the report into this directory.
        #[arg(long)]
        results: Option<PathBuf>,
    },
    /// SVG pictures of representations, Hasse diagrams and PP graphs.
    Render {
        #[command(flatten)]
        src: Source,
        /// representation | hasse | ppgraph
        #[arg(long, default_value = "representation")]
        target: String,
        /// Render a 2-count representation instead of the canonical one.
        #[arg(long)]
        twocount: bool,
        #[arg(long, default_value_t = 640)]
        width: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchKind {
    Orders,
    Perms,
    Conjecture,
}

enum Input {
    Order(IntervalOrder),
    Perm(Permutation),
}

fn read_source(s: &Source) -> Result<Input, Error> {
    if let Some(a) = &s.ascent {
        return Ok(Input::Order(order_from_ascent(&AscentSequence::parse(a)?)));
    }
    if let Some(p) = &s.perm {
        return Ok(Input::Perm(Permutation::parse(p)?));
    }
    let path = s.order.as_ref().expect("clap enforces one source");
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let doc: OrderDoc = io::from_json(&text)?;
    Ok(Input::Order(doc.to_interval_order()?))
}

fn need_order(i: Input) -> Result<IntervalOrder, Error> {
    match i {
        Input::Order(o) => Ok(o),
        Input::Perm(_) => Err(Error::Parse("this command takes an order, not a permutation".into())),
    }
}

/// What a command produced, before formatting.
enum Output {
    Doc(serde_json::Value, String),
    Svg(String),
}

fn doc<T: Serialize>(d: &T, text: String) -> Output {
    Output::Doc(serde_json::to_value(d).expect("serializable"), text)
}

fn family_text(f: &IntervalFamily) -> String {
    let mut s = String::new();
    for (i, iv) in f.intervals().iter().enumerate() {
        s.push_str(&format!("{}: {}\n", i + 1, iv));
    }
    let lens: Vec<String> = f.distinct_lengths().iter().map(intervalia::rational::format).collect();
    s.push_str(&format!("lengths: {}\n", lens.join(", ")));
    s
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let opts = kcount::Options { allow_large: cli.allow_large, ..Default::default() };
    match &cli.cmd {
        Cmd::Parse(src) => match read_source(src)? {
            Input::Order(o) => {
                let d = OrderDoc::from_poset(&o);
                Ok(doc(&d, format!("{} elements, {} relations\n", d.n, d.relation.len())))
            }
            Input::Perm(p) => {
                let d = PermAnalysisDoc::analyze(&p);
                Ok(doc(&d, format!("{}\n", d.permutation)))
            }
        },
        Cmd::Analyze(src) => match read_source(src)? {
            Input::Order(o) => {
                let d = OrderAnalysisDoc::analyze(&o)?;
                let text = format!(
                    "n {}\nascent {}\nheight {}\ndepth {}\nmagnitude {}\n4+1-free {}\nsprings {}\npp arcs {:?}\n",
                    d.n,
                    d.ascent,
                    d.height,
                    d.depth,
                    d.magnitude,
                    d.four_plus_one_free,
                    d.springs.len(),
                    d.pp_arcs
                );
                Ok(doc(&d, text))
            }
            Input::Perm(p) => {
                let d = PermAnalysisDoc::analyze(&p);
                Ok(doc(&d, format!("n {}\ndepth {}\ncoloring {:?}\n", d.n, d.depth, d.coloring)))
            }
        },
        Cmd::TwocountPerm { perm } => {
            let f = construct2::two_count_permutation(&Permutation::parse(perm)?)?;
            Ok(doc(&RepresentationDoc::from_family(&f), family_text(&f)))
        }
        Cmd::TwocountOrder(src) => {
            let o = need_order(read_source(src)?)?;
            let f = construct_height3(&o)?.representation;
            Ok(doc(&RepresentationDoc::from_family(&f), family_text(&f)))
        }
        Cmd::Kcount { src, k } => {
            let v = match read_source(src)? {
                Input::Order(o) => is_k_count_order_with(&o, *k, opts)?,
                Input::Perm(p) => is_k_count_perm_with(&p, *k, opts)?,
            };
            let text = match v.witness() {
                Some(f) => format!("yes ({} colorings tried)\n{}", v.colorings_tried, family_text(f)),
                None => format!("no ({} colorings tried)\n", v.colorings_tried),
            };
            Ok(doc(&VerdictDoc::from_verdict(&v), text))
        }
        Cmd::Search { kind, max_n, no_filters, no_shortcuts, results } => {
            let sopts = SearchOptions { jobs: cli.jobs, allow_large: cli.allow_large, shortcuts: !no_shortcuts };
            let (value, text, name) = match kind {
                SearchKind::Orders => {
                    let filters = if *no_filters {
                        OrderFilters { four_plus_one_free: false, depth_at_most_2: false }
                    } else {
                        OrderFilters::default()
                    };
                    let r = explorer::search_non_2count_orders(*max_n, filters, sopts)?;
                    (serde_json::to_value(&r), search_text(&r), "orders")
                }
                SearchKind::Perms => {
                    let r = explorer::search_non_3count_perms(*max_n, sopts)?;
                    (serde_json::to_value(&r), search_text(&r), "perms")
                }
                SearchKind::Conjecture => {
                    let r = explorer::conjecture_search(*max_n, sopts)?;
                    let text = format!("applicable {:?}\ndisagreements {:?}\n", r.applicable, r.disagreements);
                    (serde_json::to_value(&r), text, "conjecture")
                }
            };
            let value = value.map_err(|e| Error::Internal(e.to_string()))?;
            if let Some(dir) = results {
                explorer::write_report(&value, dir, &format!("{name}-n{max_n}"))?;
            }
            Ok(Output::Doc(value, text))
        }
        Cmd::Render { src, target, twocount, width } => {
            let target: Target = target.parse()?;
            let mut spec = RenderSpec::new(target);
            spec.width = *width;
            let svg = match (read_source(src)?, target) {
                (Input::Perm(p), Target::Representation) => {
                    let f = construct2::two_count_permutation(&p)?;
                    spec.colors = length_colors(&f);
                    render::render(RenderInput::Family(&f), &spec)?
                }
                (Input::Perm(_), t) => return Err(Error::UnsupportedTarget(format!("{t:?} from a permutation"))),
                (Input::Order(o), Target::Representation) => {
                    let f = if *twocount {
                        let c = construct_height3(&o)?;
                        let f = c.representation;
                        spec.colors = length_colors(&f);
                        f
                    } else {
                        canonical_representation(&o).to_family()
                    };
                    render::render(RenderInput::Family(&f), &spec)?
                }
                (Input::Order(o), _) => render::render(RenderInput::Order(o.poset()), &spec)?,
            };
            Ok(Output::Svg(svg))
        }
    }
}

fn search_text(r: &explorer::SearchReport) -> String {
    let mut s = String::new();
    for c in &r.counts {
        s.push_str(&format!("n={} total={} examined={} witnesses={}\n", c.n, c.total, c.examined, c.witnesses));
    }
    for w in &r.witnesses {
        s.push_str(&format!("witness {w}\n"));
    }
    s
}

fn emit(cli: &Cli, body: &str) -> Result<(), Error> {
    match &cli.out {
        Some(p) => std::fs::write(p, body).map_err(|e| Error::Parse(format!("{}: {e}", p.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let body = match run(&cli) {
        Ok(Output::Doc(v, text)) => match cli.format {
            Format::Json => io::to_json(&v),
            Format::Text => text,
            Format::Svg => {
                eprintln!("error: --format svg is only available for the render command");
                return ExitCode::from(2);
            }
        },
        Ok(Output::Svg(svg)) => match cli.format {
            Format::Svg => svg,
            Format::Json => io::to_json(&serde_json::json!({ "schema": intervalia::SCHEMA, "svg": svg })),
            Format::Text => svg,
        },
        Err(e) => {
            print!("{}", io::to_json(&ErrorDoc::from_error(&e)));
            return ExitCode::from(1);
        }
    };
    if let Err(e) = emit(&cli, &body) {
        print!("{}", io::to_json(&ErrorDoc::from_error(&e)));
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
