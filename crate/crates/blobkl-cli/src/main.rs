//! Command-line front end: exact Hecke-algebra expansions, (p-)canonical
//! tables, tableau enumeration, alcove data, graded decomposition numbers
//! and the named verification suites.
//!
//! Exit codes: 0 on success, 2 on a validation/usage error (one-line
//! diagnostic naming the offending flag), 3 on an internal-consistency
//! failure, with a reproducer dump of the full run configuration.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use blobkl::alcove;
use blobkl::error::Error;
use blobkl::hecke::{bott_samelson, KlContext, KlTable};
use blobkl::laurent::LaurentPoly;
use blobkl::pascal::{self, blob_graded_decomposition, cross_check_soergel};
use blobkl::suites::{self, SuiteConfig};
use blobkl::tableaux::{
    enumerate_std_same_residue, graded_cell_dim, tableau_degree, BlobParams,
    OneColMultipartition, DEFAULT_ENUM_CAP,
};
use blobkl::weyl::{AffineElement, DihedralForm, Word};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
    Tex,
    Plain,
}

#[derive(Parser)]
#[command(name = "blobkl", version, about = "Exact Kazhdan-Lusztig and blob-algebra combinatorics")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Characteristic-zero Kazhdan-Lusztig table of an element
    Kl {
        /// Level of the affine Weyl group (number of window entries)
        #[arg(long, default_value_t = 2)]
        l: usize,
        /// Word in the generators: "s1 s3 s0", compact "130", or "ststs" at level 2
        #[arg(long)]
        word: Option<String>,
        /// Dihedral element "5s", "4t" or "e" (level 2)
        #[arg(long)]
        w: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// p-canonical table over the infinite dihedral group
    Pkl {
        /// Prime characteristic
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        l: usize,
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        w: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Expansion of the barred-generator product over a word
    Bs {
        #[arg(long, default_value_t = 2)]
        l: usize,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Standard tableaux sharing the dominant residue sequence, with degrees
    Tableaux {
        #[arg(long)]
        e: i64,
        /// Level; must match the number of kappa entries
        #[arg(long)]
        l: Option<usize>,
        /// Multicharge, comma-separated residues: "0,2,4,6"
        #[arg(long)]
        kappa: String,
        /// Column heights, comma-separated: "1,13,1,8"
        #[arg(long)]
        lambda: String,
        /// Only report the count (2^r), without materializing
        #[arg(long)]
        count_only: bool,
        /// Cap on the number of materialized tableaux (env BLOBKL_CAP)
        #[arg(long)]
        cap: Option<u128>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Graded dimension of one cell of the idempotent truncation
    Celldim {
        #[arg(long)]
        e: i64,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        kappa: String,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        cap: Option<u128>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Hyperplane sequence, alcove element and principal word of a shape
    Alcove {
        #[arg(long)]
        e: i64,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        kappa: String,
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Graded decomposition numbers of the level-2 truncation
    Decomp {
        #[arg(long)]
        e: i64,
        #[arg(long)]
        kappa: String,
        #[arg(long)]
        lambda: String,
        /// Characteristic: a prime, or 0
        #[arg(long)]
        p: u64,
        /// Also compute the p-canonical table and compare entry by entry
        #[arg(long)]
        cross_check: bool,
        #[arg(long)]
        cap: Option<u128>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run named verification suites over seeded corpora
    Verify {
        /// Suite name; omit to run the whole registry
        #[arg(long)]
        suite: Option<String>,
        /// List available suites and exit
        #[arg(long)]
        list: bool,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        instances: usize,
        #[arg(long)]
        cap: Option<u128>,
    },
}

/// Everything needed to reproduce a run; dumped on consistency failures.
#[derive(Default, serde::Serialize)]
struct RunConfig {
    subcommand: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    e: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kappa: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    w: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    suite: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    instances: Option<usize>,
    cap: u64,
    format: String,
}

fn main() {
    let cli = Cli::parse();
    let config = run_config(&cli.command);
    match dispatch(cli.command) {
        Ok(output) => print!("{output}"),
        Err(err) => {
            let code = match err {
                Error::Decomposition(_) | Error::MultipleNewHyperplanes { .. } => 3,
                _ => 2,
            };
            eprintln!("error: {err}");
            if code == 3 {
                eprintln!(
                    "reproducer: {}",
                    serde_json::to_string(&config).expect("config serializes")
                );
            }
            std::process::exit(code);
        }
    }
}

fn effective_cap(cap: Option<u128>) -> u128 {
    cap.or_else(|| std::env::var("BLOBKL_CAP").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(DEFAULT_ENUM_CAP)
}

fn run_config(cmd: &Cmd) -> RunConfig {
    let mut cfg = RunConfig { cap: effective_cap(None) as u64, ..Default::default() };
    match cmd {
        Cmd::Kl { l, word, w, format } => {
            cfg.subcommand = "kl".into();
            cfg.l = Some(*l);
            cfg.word = word.clone();
            cfg.w = w.clone();
            cfg.format = format!("{format:?}");
        }
        Cmd::Pkl { p, l, word, w, format } => {
            cfg.subcommand = "pkl".into();
            cfg.p = Some(*p);
            cfg.l = Some(*l);
            cfg.word = word.clone();
            cfg.w = w.clone();
            cfg.format = format!("{format:?}");
        }
        Cmd::Bs { l, word, format } => {
            cfg.subcommand = "bs".into();
            cfg.l = Some(*l);
            cfg.word = Some(word.clone());
            cfg.format = format!("{format:?}");
        }
        Cmd::Tableaux { e, l, kappa, lambda, cap, format, .. } => {
            cfg.subcommand = "tableaux".into();
            cfg.e = Some(*e);
            cfg.l = *l;
            cfg.kappa = Some(kappa.clone());
            cfg.lambda = Some(lambda.clone());
            cfg.cap = effective_cap(*cap) as u64;
            cfg.format = format!("{format:?}");
        }
        Cmd::Celldim { e, l, kappa, lambda, mu, cap, format } => {
            cfg.subcommand = "celldim".into();
            cfg.e = Some(*e);
            cfg.l = *l;
            cfg.kappa = Some(kappa.clone());
            cfg.lambda = Some(lambda.clone());
            cfg.mu = Some(mu.clone());
            cfg.cap = effective_cap(*cap) as u64;
            cfg.format = format!("{format:?}");
        }
        Cmd::Alcove { e, l, kappa, lambda, format } => {
            cfg.subcommand = "alcove".into();
            cfg.e = Some(*e);
            cfg.l = *l;
            cfg.kappa = Some(kappa.clone());
            cfg.lambda = Some(lambda.clone());
            cfg.format = format!("{format:?}");
        }
        Cmd::Decomp { e, kappa, lambda, p, cap, format, .. } => {
            cfg.subcommand = "decomp".into();
            cfg.e = Some(*e);
            cfg.kappa = Some(kappa.clone());
            cfg.lambda = Some(lambda.clone());
            cfg.p = Some(*p);
            cfg.cap = effective_cap(*cap) as u64;
            cfg.format = format!("{format:?}");
        }
        Cmd::Verify { suite, seed, instances, cap, .. } => {
            cfg.subcommand = "verify".into();
            cfg.suite = suite.clone();
            cfg.seed = Some(*seed);
            cfg.instances = Some(*instances);
            cfg.cap = effective_cap(*cap) as u64;
            cfg.format = "plain".into();
        }
    }
    cfg
}

fn dispatch(cmd: Cmd) -> Result<String, Error> {
    match cmd {
        Cmd::Kl { l, word, w, format } => {
            let element = parse_element(l, word.as_deref(), w.as_deref())?;
            let ctx = KlContext::new();
            let table = ctx.kl_char0(&element)?;
            Ok(render_kl_table(&table, format))
        }
        Cmd::Pkl { p, l, word, w, format } => {
            if l != 2 {
                return Err(Error::Unsupported(
                    "--l: p-canonical tables are only available at level 2".into(),
                ));
            }
            let element = parse_element(2, word.as_deref(), w.as_deref())?;
            let ctx = KlContext::new();
            let table = ctx.pkl_dihedral(&element.dihedral_form()?, p)?;
            Ok(render_kl_table(&table, format))
        }
        Cmd::Bs { l, word, format } => {
            let word = Word::parse(&word, l).map_err(flag("--word"))?;
            let expansion = bott_samelson(&word);
            let mut items: Vec<(AffineElement, LaurentPoly)> =
                expansion.terms().map(|(x, c)| (x.clone(), c.clone())).collect();
            sort_elements(&mut items);
            Ok(match format {
                Format::Json => pretty(&json!({
                    "word": word.to_string(),
                    "coeffs": items.iter().map(|(x, c)| json!({
                        "x": x.to_string(),
                        "c": poly_json(c),
                    })).collect::<Vec<_>>(),
                })),
                Format::Csv => {
                    let mut out = String::from("x,coefficient\n");
                    for (x, c) in &items {
                        out.push_str(&format!("{x},{}\n", c.to_tex()));
                    }
                    out
                }
                Format::Tex => {
                    let mut out = String::from("\\begin{tabular}{ll}\nx & \\text{coefficient} \\\\\n\\hline\n");
                    for (x, c) in &items {
                        out.push_str(&format!("{x} & {} \\\\\n", c.to_tex()));
                    }
                    out.push_str("\\end{tabular}\n");
                    out
                }
                Format::Plain => {
                    let mut out = format!("word = {word}\n");
                    for (x, c) in &items {
                        out.push_str(&format!("{x}: {}\n", c.to_tex()));
                    }
                    out
                }
            })
        }
        Cmd::Tableaux { e, l, kappa, lambda, count_only, cap, format } => {
            let params = parse_params(e, l, &kappa)?;
            let lam = parse_shape(&lambda, "--lambda", &params)?;
            if count_only {
                let count = alcove::std_count(&lam, &params)?;
                return Ok(match format {
                    Format::Json => pretty(&json!({
                        "e": e, "kappa": params.kappa(), "lambda": lam.heights(),
                        "count": count.to_string(),
                    })),
                    _ => format!("count = {count}\n"),
                });
            }
            let cap = effective_cap(cap);
            let all = enumerate_std_same_residue(&lam, &params, cap)?;
            Ok(match format {
                Format::Json => pretty(&json!({
                    "e": e, "kappa": params.kappa(), "lambda": lam.heights(),
                    "count": all.len(),
                    "tableaux": all.iter().map(|t| json!({
                        "word": t.to_string(),
                        "shape": t.shape().heights(),
                        "degree": tableau_degree(t, &params),
                    })).collect::<Vec<_>>(),
                })),
                Format::Csv => {
                    let mut out = String::from("word,shape,degree\n");
                    for t in &all {
                        out.push_str(&format!(
                            "{t},{},{}\n",
                            join(t.shape().heights()),
                            tableau_degree(t, &params)
                        ));
                    }
                    out
                }
                Format::Tex | Format::Plain => {
                    let mut out = format!("count = {}\n", all.len());
                    for t in &all {
                        out.push_str(&format!(
                            "{t}  shape=({})  degree={}\n",
                            join(t.shape().heights()),
                            tableau_degree(t, &params)
                        ));
                    }
                    out
                }
            })
        }
        Cmd::Celldim { e, l, kappa, lambda, mu, cap, format } => {
            let params = parse_params(e, l, &kappa)?;
            let lam = parse_shape(&lambda, "--lambda", &params)?;
            let mu = parse_shape(&mu, "--mu", &params)?;
            let dim = graded_cell_dim(&lam, &mu, &params, effective_cap(cap))?;
            Ok(match format {
                Format::Json => pretty(&json!({
                    "e": e, "kappa": params.kappa(),
                    "lambda": lam.heights(), "mu": mu.heights(),
                    "dim": poly_json(&dim),
                    "tex": dim.to_tex(),
                })),
                _ => format!("{}\n", dim.to_tex()),
            })
        }
        Cmd::Alcove { e, l, kappa, lambda, format } => {
            let params = parse_params(e, l, &kappa)?;
            let lam = parse_shape(&lambda, "--lambda", &params)?;
            let seq = alcove::hyperplane_sequence(&lam, &params)?;
            let word = alcove::principal_word(&lam, &params)?;
            let w = alcove::w_of(&lam, &params)?;
            let dihedral = if params.level() == 2 {
                Some(w.dihedral_form()?.to_string())
            } else {
                None
            };
            let hyperplanes: Vec<String> =
                seq.hyperplanes().iter().map(|h| h.to_string()).collect();
            Ok(match format {
                Format::Json => pretty(&json!({
                    "e": e, "kappa": params.kappa(), "lambda": lam.heights(),
                    "hit_levels": seq.hit_levels(),
                    "hyperplanes": hyperplanes,
                    "w": word.to_string(),
                    "window": w.window(),
                    "dihedral": dihedral,
                    "length": w.length(),
                })),
                _ => {
                    let mut out = String::new();
                    out.push_str(&format!("hit levels = {}\n", join(&seq.hit_levels())));
                    out.push_str(&format!("hyperplanes = {}\n", hyperplanes.join(" ")));
                    out.push_str(&format!("w = {word}\n"));
                    out.push_str(&format!("window = {w}\n"));
                    if let Some(d) = dihedral {
                        out.push_str(&format!("dihedral = {d}\n"));
                    }
                    out.push_str(&format!("length = {}\n", w.length()));
                    out
                }
            })
        }
        Cmd::Decomp { e, kappa, lambda, p, cross_check, cap, format } => {
            let params = parse_params(e, None, &kappa)?;
            if params.level() != 2 {
                return Err(Error::Unsupported(
                    "--kappa: decomposition tables are only available at level 2".into(),
                ));
            }
            let lam = parse_shape(&lambda, "--lambda", &params)?;
            let table = blob_graded_decomposition(&lam, &params, p, effective_cap(cap))?;
            let comparisons = if cross_check && p > 0 {
                Some(cross_check_soergel(&table)?)
            } else {
                None
            };
            Ok(render_decomp(&table, comparisons.as_deref(), format))
        }
        Cmd::Verify { suite, list, seed, instances, cap } => {
            if list {
                let mut out = String::new();
                for s in suites::registry() {
                    out.push_str(&format!("{} v{}: {}\n", s.name(), s.version(), s.description()));
                }
                return Ok(out);
            }
            let cfg = SuiteConfig { seed, instances, cap: effective_cap(cap) };
            let to_run: Vec<_> = match &suite {
                Some(name) => {
                    let found = suites::find(name).ok_or_else(|| {
                        Error::InvalidParams(format!("--suite: no suite named '{name}'"))
                    })?;
                    vec![found]
                }
                None => suites::registry(),
            };
            let mut out = String::new();
            let mut failed = false;
            for s in to_run {
                let rep = s.run(&cfg)?;
                out.push_str(&format!("{} v{}: {}\n", rep.name, rep.version, rep.summary));
                for finding in &rep.findings {
                    out.push_str(&format!("  finding: {finding}\n"));
                }
                for failure in &rep.failures {
                    out.push_str(&format!("  FAIL: {failure}\n"));
                }
                failed |= !rep.passed();
            }
            if failed {
                print!("{out}");
                return Err(Error::Decomposition("verification suite reported failures".into()));
            }
            Ok(out)
        }
    }
}

fn flag(name: &'static str) -> impl Fn(Error) -> Error {
    move |e| Error::Parse(format!("{name}: {e}"))
}

fn parse_element(l: usize, word: Option<&str>, w: Option<&str>) -> Result<AffineElement, Error> {
    match (word, w) {
        (Some(text), None) => Ok(Word::parse(text, l).map_err(flag("--word"))?.evaluate()),
        (None, Some(text)) => {
            if l != 2 {
                return Err(Error::Parse(
                    "--w: dihedral notation needs level 2; use --word".into(),
                ));
            }
            Ok(DihedralForm::parse(text).map_err(flag("--w"))?.element())
        }
        _ => Err(Error::Parse("exactly one of --word and --w is required".into())),
    }
}

fn parse_params(e: i64, l: Option<usize>, kappa: &str) -> Result<BlobParams, Error> {
    let kappa: Vec<i64> = kappa
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Error::Parse(format!("--kappa: '{kappa}' is not a comma-separated residue list")))?;
    if let Some(l) = l {
        if l != kappa.len() {
            return Err(Error::Parse(format!(
                "--l: level {l} does not match the {} kappa entries",
                kappa.len()
            )));
        }
    }
    BlobParams::new(e, kappa).map_err(flag("--kappa"))
}

fn parse_shape(text: &str, name: &'static str, params: &BlobParams) -> Result<OneColMultipartition, Error> {
    let heights: Vec<usize> = text
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| Error::Parse(format!("{name}: '{text}' is not a comma-separated height list")))?;
    if heights.len() != params.level() {
        return Err(Error::Parse(format!(
            "{name}: {} heights given but the level is {}",
            heights.len(),
            params.level()
        )));
    }
    Ok(OneColMultipartition::new(heights))
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn pretty(v: &Value) -> String {
    let mut out = serde_json::to_string_pretty(v).expect("value serializes");
    out.push('\n');
    out
}

fn poly_json(p: &LaurentPoly) -> Value {
    serde_json::to_value(p).expect("polynomial serializes")
}

fn sort_elements(items: &mut [(AffineElement, LaurentPoly)]) {
    items.sort_by(|(a, _), (b, _)| {
        b.length().cmp(&a.length()).then_with(|| a.window().cmp(b.window()))
    });
}

fn render_kl_table(table: &KlTable, format: Format) -> String {
    let mut rows: Vec<(AffineElement, LaurentPoly)> =
        table.rows.iter().map(|(x, h)| (x.clone(), h.clone())).collect();
    sort_elements(&mut rows);
    let mut aux: Vec<(AffineElement, LaurentPoly)> =
        table.aux.iter().map(|(y, g)| (y.clone(), g.clone())).collect();
    aux.retain(|(_, g)| !g.is_zero());
    sort_elements(&mut aux);
    match format {
        Format::Json => pretty(&json!({
            "w": table.w.to_string(),
            "p": table.p,
            "word": table.word.to_string(),
            "rows": rows.iter().map(|(x, h)| json!({
                "x": x.to_string(),
                "h": poly_json(h),
            })).collect::<Vec<_>>(),
            "aux": aux.iter().map(|(y, g)| json!({
                "y": y.to_string(),
                "grk": poly_json(g),
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut out = String::from("x,h,grk\n");
            for (x, h) in &rows {
                let grk = table.aux.get(x).map(|g| g.to_tex()).unwrap_or_default();
                out.push_str(&format!("{x},{},{grk}\n", h.to_tex()));
            }
            out
        }
        Format::Tex => {
            let mut out = String::from(
                "\\begin{tabular}{lll}\nx & h_{x} & \\mathrm{grk} \\\\\n\\hline\n",
            );
            for (x, h) in &rows {
                let grk = table.aux.get(x).map(|g| g.to_tex()).unwrap_or_default();
                out.push_str(&format!("{x} & {} & {grk} \\\\\n", h.to_tex()));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
        Format::Plain => {
            let mut out = format!("w = {} (p = {})\n", table.w, table.p);
            for (x, h) in &rows {
                out.push_str(&format!("h[{x}] = {}\n", h.to_tex()));
            }
            for (y, g) in &aux {
                out.push_str(&format!("grk[{y}] = {}\n", g.to_tex()));
            }
            out
        }
    }
}

fn render_decomp(
    table: &pascal::BlobDecompTable,
    comparisons: Option<&[pascal::SoergelComparison]>,
    format: Format,
) -> String {
    let zero = LaurentPoly::zero();
    match format {
        Format::Json => {
            let rows: Vec<Value> = table
                .mus
                .iter()
                .map(|(mu, w_mu)| {
                    json!({
                        "mu": mu.heights(),
                        "w": w_mu.to_string(),
                        "cell_dim": poly_json(table.cell_dims.get(mu).unwrap_or(&zero)),
                        "d": poly_json(&table.d(mu, &table.lambda)),
                        "gdim_simple": poly_json(&table.gdim_simple[mu]),
                    })
                })
                .collect();
            let mut doc = json!({
                "lambda": table.lambda.heights(),
                "w_lambda": table.w_lambda.to_string(),
                "p": table.p,
                "poset": rows,
                "resubstitution": table.resubstitution_holds(),
            });
            if let Some(cmp) = comparisons {
                doc["cross_check"] = Value::Array(
                    cmp.iter()
                        .map(|c| {
                            json!({
                                "mu": c.mu.heights(),
                                "w": c.w_mu.to_string(),
                                "blob": poly_json(&c.blob),
                                "hecke": poly_json(&c.hecke),
                                "equal": c.equal,
                            })
                        })
                        .collect(),
                );
                doc["all_equal"] = Value::Bool(cmp.iter().all(|c| c.equal));
            }
            pretty(&doc)
        }
        Format::Csv => {
            let mut out = String::from("mu,w,cell_dim,d,gdim_simple\n");
            for (mu, w_mu) in &table.mus {
                out.push_str(&format!(
                    "\"{}\",{w_mu},{},{},{}\n",
                    join(mu.heights()),
                    table.cell_dims.get(mu).unwrap_or(&zero).to_tex(),
                    table.d(mu, &table.lambda).to_tex(),
                    table.gdim_simple[mu].to_tex(),
                ));
            }
            out
        }
        Format::Tex => {
            let mut out = String::from(
                "\\begin{tabular}{llll}\n\\mu & w & d & \\dim_v L \\\\\n\\hline\n",
            );
            for (mu, w_mu) in &table.mus {
                out.push_str(&format!(
                    "({}) & {w_mu} & {} & {} \\\\\n",
                    join(mu.heights()),
                    table.d(mu, &table.lambda).to_tex(),
                    table.gdim_simple[mu].to_tex(),
                ));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
        Format::Plain => {
            let mut out = format!(
                "lambda = ({}), w = {}, p = {}\n",
                join(table.lambda.heights()),
                table.w_lambda,
                table.p
            );
            for (mu, w_mu) in &table.mus {
                out.push_str(&format!(
                    "mu = ({}) [{w_mu}]: d = {}, gdim L = {}\n",
                    join(mu.heights()),
                    table.d(mu, &table.lambda).to_tex(),
                    table.gdim_simple[mu].to_tex(),
                ));
            }
            if let Some(cmp) = comparisons {
                let all = cmp.iter().all(|c| c.equal);
                for c in cmp {
                    if !c.equal {
                        out.push_str(&format!(
                            "MISMATCH at mu = ({}): blob {} vs hecke {}\n",
                            join(c.mu.heights()),
                            c.blob.to_tex(),
                            c.hecke.to_tex()
                        ));
                    }
                }
                out.push_str(&format!("cross-check: {}\n", if all { "all equal" } else { "MISMATCHES" }));
            }
            out
        }
    }
}
