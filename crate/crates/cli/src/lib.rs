//! The `qtc` command line.
//!
//! ```text
//! qtc fund      --type A2 --node 1 [--shift 0]
//! qtc kr        --type A2 --node 1 --k 2 [--shift 0]
//! qtc standard  --type A2 --root 1:0 --root 1:2
//! qtc simple    --type A2 --root 1:0 --root 1:2
//! qtc tsys      --type A2 --node 1 --k 1 [--t-analog | --decomposition]
//! qtc qsys      --type A2 --node 1 --k 2
//! qtc fermionic --type A1 --nu 1:1=1 --truncate 3 [--convention gamma] [--verify]
//! qtc converge  --type A2 --node 1 --k 4 --truncate 2
//! qtc graph     --type A2 --root 1:0 --root 1:2
//! ```
//!
//! Characters are printed in the `# qtc v1` format, or as DOT with `--dot`
//! (`graph` always prints DOT). `--out FILE` redirects the output. The
//! cache directory is `--cache-dir`, else `$QTC_CACHE`, else `./qtc-cache`.
//!
//! Exit status: 0 on success or a passing check, 1 on a failing check or
//! a computation error, 2 on a usage error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use qtc_core::qtpoly::write_qtc;
use qtc_core::systems::{self, compare_conventions, fermionic_rhs};
use qtc_core::ymono::a_monomial;
use qtc_core::{
    Convention, DrinfeldPoly, Engine, Error, LieType, NuConfig, QtCharacter, VerifyReport,
    YMonomial,
};

#[derive(Parser, Debug)]
#[command(name = "qtc", about = "t-analogs of q-characters for ADE quantum loop algebras")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug)]
struct Common {
    /// Lie type, e.g. A2, D4, E6
    #[arg(long = "type")]
    lie: String,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Write output to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Shape {
    #[arg(long)]
    node: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    shift: i32,
    /// Root of a Drinfeld polynomial as node:shift, repeatable
    #[arg(long = "root", allow_hyphen_values = true)]
    roots: Vec<String>,
    #[arg(long)]
    dot: bool,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Fundamental character
    Fund {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        shape: Shape,
    },
    /// Kirillov-Reshetikhin character
    Kr {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        shape: Shape,
    },
    /// Standard module character
    Standard {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        shape: Shape,
    },
    /// Simple module character with its decomposition factors
    Simple {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        shape: Shape,
    },
    /// T-system check
    Tsys {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        node: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t_analog: bool,
        /// Check the KR tensor decomposition instead
        #[arg(long, conflicts_with = "t_analog")]
        decomposition: bool,
    },
    /// Q-system check
    Qsys {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        node: usize,
        #[arg(long)]
        k: usize,
    },
    /// Fermionic sum, or the full formula with --verify
    Fermionic {
        #[command(flatten)]
        common: Common,
        /// Multiplicity as i:k=v, repeatable
        #[arg(long = "nu")]
        nu: Vec<String>,
        #[arg(long)]
        truncate: usize,
        #[arg(long, default_value = "gamma")]
        convention: String,
        #[arg(long)]
        verify: bool,
        /// Evaluate both conventions and report whether they agree
        #[arg(long, conflicts_with = "verify")]
        compare: bool,
    },
    /// Stabilization of truncated normalized KR characters
    Converge {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        node: usize,
        /// Largest k
        #[arg(long)]
        k: usize,
        #[arg(long)]
        truncate: usize,
    },
    /// DOT graph of a character
    Graph {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        shape: Shape,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::UnsupportedType(_) | Error::DomainError(_) | Error::Parse { .. } => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Compute(other.to_string()),
        }
    }
}

struct Output {
    text: String,
    pass: bool,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, pass: true }
    }

    fn report(r: &VerifyReport) -> Output {
        Output {
            text: format!("{r}\n"),
            pass: r.pass,
        }
    }
}

/// Runs one command line (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let dest = common(&cli.verb).out.clone();
    match dispatch(cli.verb) {
        Ok(o) => {
            let written = match dest {
                Some(path) => std::fs::write(&path, &o.text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => out.write_all(o.text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "qtc: {e}");
                return 1;
            }
            if o.pass {
                0
            } else {
                1
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "qtc: {msg}");
            2
        }
        Err(Failure::Compute(msg)) => {
            let _ = writeln!(err, "qtc: {msg}");
            1
        }
    }
}

fn common(v: &Verb) -> &Common {
    match v {
        Verb::Fund { common, .. }
        | Verb::Kr { common, .. }
        | Verb::Standard { common, .. }
        | Verb::Simple { common, .. }
        | Verb::Tsys { common, .. }
        | Verb::Qsys { common, .. }
        | Verb::Fermionic { common, .. }
        | Verb::Converge { common, .. }
        | Verb::Graph { common, .. } => common,
    }
}

fn engine(c: &Common) -> Result<Engine, Failure> {
    let lt = LieType::parse(&c.lie)?;
    let dir = c
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("QTC_CACHE").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("qtc-cache"));
    Ok(Engine::with_cache_dir(lt, dir))
}

fn need<T>(x: Option<T>, name: &str) -> Result<T, Failure> {
    x.ok_or_else(|| Failure::Usage(format!("--{name} is required")))
}

fn parse_roots(roots: &[String]) -> Result<DrinfeldPoly, Failure> {
    let mut out = Vec::new();
    for r in roots {
        let parsed = r
            .split_once(':')
            .and_then(|(i, s)| Some((i.trim().parse().ok()?, s.trim().parse().ok()?)));
        match parsed {
            Some(p) => out.push(p),
            None => return Err(Failure::Usage(format!("expected --root i:s, got '{r}'"))),
        }
    }
    Ok(DrinfeldPoly::from_roots(out))
}

fn render(chi: &QtCharacter, dot: bool) -> String {
    if dot {
        export_dot(chi)
    } else {
        write_qtc(chi)
    }
}

/// The character named by `shape`: roots give a Drinfeld polynomial,
/// otherwise `--node` with optional `--k`.
fn shape_poly(shape: &Shape, default_k: usize) -> Result<DrinfeldPoly, Failure> {
    if !shape.roots.is_empty() {
        if shape.node.is_some() || shape.k.is_some() {
            return Err(Failure::Usage("--root cannot be combined with --node/--k".into()));
        }
        return parse_roots(&shape.roots);
    }
    let i = need(shape.node, "node")?;
    Ok(DrinfeldPoly::kr(i, shape.k.unwrap_or(default_k), shape.shift))
}

fn dispatch(verb: Verb) -> Result<Output, Failure> {
    match verb {
        Verb::Fund { common, shape } => {
            let e = engine(&common)?;
            if shape.k.is_some() || !shape.roots.is_empty() {
                return Err(Failure::Usage("fund takes --node and --shift only".into()));
            }
            let chi = e.fundamental_char(need(shape.node, "node")?, shape.shift)?;
            Ok(Output::ok(render(&chi, shape.dot)))
        }
        Verb::Kr { common, shape } => {
            let e = engine(&common)?;
            let chi = e.kr_char_direct(need(shape.node, "node")?, need(shape.k, "k")?, shape.shift)?;
            Ok(Output::ok(render(&chi, shape.dot)))
        }
        Verb::Standard { common, shape } => {
            let e = engine(&common)?;
            let chi = e.standard_char(&shape_poly(&shape, 1)?)?;
            Ok(Output::ok(render(&chi, shape.dot)))
        }
        Verb::Simple { common, shape } => {
            let e = engine(&common)?;
            let p = shape_poly(&shape, 1)?;
            let base = p.roots().map(|(_, s)| s).min().unwrap_or(0);
            let res = e.kl_decompose(&p.shifted(-base))?;
            let chi = res.simple().shifted(base);
            let mut text = String::new();
            for (q, z) in &res.factors {
                let roots: Vec<String> = q
                    .shifted(base)
                    .roots()
                    .map(|(i, s)| format!("{i}:{s}"))
                    .collect();
                let _ = writeln!(text, "# factor {z} : [{}]", roots.join(" "));
            }
            if shape.dot {
                text.clear();
            }
            text.push_str(&render(&chi, shape.dot));
            Ok(Output::ok(text))
        }
        Verb::Tsys {
            common,
            node,
            k,
            t_analog,
            decomposition,
        } => {
            let e = engine(&common)?;
            let r = if decomposition {
                systems::verify_kr_tensor_decomposition(&e, node, k)?
            } else if t_analog {
                systems::verify_t_system_t(&e, node, k)?
            } else {
                systems::verify_t_system_t1(&e, node, k)?
            };
            Ok(Output::report(&r))
        }
        Verb::Qsys { common, node, k } => {
            let e = engine(&common)?;
            Ok(Output::report(&systems::verify_q_system(&e, node, k)?))
        }
        Verb::Fermionic {
            common,
            nu,
            truncate,
            convention,
            verify,
            compare,
        } => {
            let e = engine(&common)?;
            let mut cfg = NuConfig::new();
            for frag in &nu {
                cfg.add_fragment(frag)?;
            }
            for ((i, _), _) in cfg.entries() {
                if !e.lie_type().is_node(i) {
                    return Err(Failure::Usage(format!("node {i} out of range")));
                }
            }
            let conv: Convention = convention.parse()?;
            if verify {
                if conv != Convention::Gamma {
                    return Err(Failure::Usage("--verify uses the gamma convention".into()));
                }
                return Ok(Output::report(&systems::verify_kr_formula(&e, &cfg, truncate)?));
            }
            if compare {
                let c = compare_conventions(e.lie_type(), &cfg, truncate);
                let text = format!(
                    "gamma: {}\nlusztig: {}\nagree: {}\nnonnegative tops: {}\n",
                    series_text(e.lie_type(), &c.gamma, truncate),
                    series_text(e.lie_type(), &c.lusztig, truncate),
                    c.agree,
                    c.tops_nonnegative
                );
                return Ok(Output::ok(text));
            }
            let s = fermionic_rhs(e.lie_type(), &cfg, truncate, conv);
            Ok(Output::ok(format!("{}\n", series_text(e.lie_type(), &s, truncate))))
        }
        Verb::Converge {
            common,
            node,
            k,
            truncate,
        } => {
            let e = engine(&common)?;
            Ok(Output::report(&systems::verify_convergence(&e, node, k, truncate)?))
        }
        Verb::Graph { common, shape } => {
            let e = engine(&common)?;
            let p = shape_poly(&shape, 1)?;
            let chi = if shape.roots.is_empty() {
                e.kr_char_direct(need(shape.node, "node")?, shape.k.unwrap_or(1), shape.shift)?
            } else {
                e.standard_char(&p)?
            };
            Ok(Output::ok(export_dot(&chi)))
        }
    }
}

/// Rank one: coefficients of degrees `0..=D` on one line. Otherwise one
/// `(c_1,...,c_n) value` line per nonzero point.
fn series_text(lt: &LieType, s: &systems::RootSeries, d: usize) -> String {
    if lt.rank() == 1 {
        return (0..=d as i64)
            .map(|x| {
                s.get(&qtc_core::RootVector(vec![x]))
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "0".into())
            })
            .collect::<Vec<_>>()
            .join(" ");
    }
    let mut pts: Vec<_> = s.iter().collect();
    pts.sort_by_key(|(r, _)| (r.height(), (*r).clone()));
    pts.iter()
        .map(|(r, c)| format!("{r} {c}"))
        .collect::<Vec<_>>()
        .join("\n")
}

/// DOT digraph of a character: one node per monomial labelled with the
/// monomial and its coefficient, and an edge `m -> m A_{i,s}^{-1}` labelled
/// `(i,s)` whenever both ends are in the support.
pub fn export_dot(chi: &QtCharacter) -> String {
    let lt = chi.lie_type();
    let index: BTreeMap<&YMonomial, usize> =
        chi.terms().keys().enumerate().map(|(n, m)| (m, n)).collect();
    let mut s = String::from("digraph qtc {\n");
    for (m, c) in chi.terms() {
        let _ = writeln!(s, "  n{} [label=\"{m} : {c}\"];", index[m]);
    }
    if let Some((lo, hi)) = chi.shift_range() {
        for (m, &a) in &index {
            for i in lt.nodes() {
                for sh in lo - 1..=hi + 1 {
                    let m2 = m.mul(&a_monomial(lt, i, sh).inv());
                    if let Some(&b) = index.get(&m2) {
                        let _ = writeln!(s, "  n{a} -> n{b} [label=\"({i},{sh})\"];");
                    }
                }
            }
        }
    }
    s.push_str("}\n");
    s
}
