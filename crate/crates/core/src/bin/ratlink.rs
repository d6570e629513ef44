use std::fmt::Write as _;
use std::io::{self, Write as _};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use ratlink::frieze::{frieze_from_word, render_frieze, Frieze, RenderFormat, RenderOptions};
use ratlink::jones::{extended_weight, frieze_jones, jones, jones_plus_minus, weight, JonesValue};
use ratlink::laurent::LaurentPoly;
use ratlink::lr_words::{word_of, LRWord, Orbit};
use ratlink::rational::{cf_expand, parents, Fraction, TermParity};
use ratlink::schubert::{classes_to_csv, classify_denominator};
use ratlink::tangle_bracket::bracket_of_denominator;
use ratlink::verify::{run, Suite, VerifyOptions};
use ratlink::writhe::{sign_sequence, writhe_plus_minus, writhe_principal};
use ratlink::Error;

#[derive(Parser)]
#[command(name = "ratlink", version, about = "Zigzag friezes, rational links and their Jones polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Everything known about one fraction.
    Report {
        alpha: Fraction,
        #[arg(long)]
        json: bool,
    },
    /// Render the frieze of a fraction `p/q` or an L/R word.
    Frieze {
        input: String,
        /// Read the input as a word even if it could be a fraction.
        #[arg(long, conflicts_with = "fraction")]
        word: bool,
        /// Read the input as a fraction.
        #[arg(long)]
        fraction: bool,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Mark the maximum and its four neighbors.
        #[arg(long)]
        mark_max: bool,
    },
    /// The orbit `{α, i(α), r(α), (ir)(α)}`.
    Orbit {
        alpha: Fraction,
        #[arg(long)]
        json: bool,
    },
    /// Jones polynomial of `D(T(α))`.
    Jones {
        alpha: Fraction,
        /// Reverse the second component (two-component links only).
        #[arg(long)]
        plus_minus: bool,
        /// Exponent `k` of the `t^(k/2)` prefactor in the text form.
        #[arg(long, allow_hyphen_values = true)]
        prefactor: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Partition the numerators of `q` into link classes.
    Classify {
        q: u64,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Run verification sweeps.
    Verify {
        /// Override each suite's default bound.
        #[arg(long)]
        max_q: Option<u64>,
        /// Suite to run; repeat for several. Runs all when omitted.
        #[arg(long)]
        suite: Vec<Suite>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Markdown,
    Json,
}

impl From<Format> for RenderFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Ascii => RenderFormat::Ascii,
            Format::Markdown => RenderFormat::Markdown,
            Format::Json => RenderFormat::Json,
        }
    }
}

/// `[[exp, coeff], ...]`, descending.
fn terms_json(p: &LaurentPoly) -> Value {
    serde_json::to_value(p).expect("polynomials serialize")["terms"].take()
}

#[derive(Serialize)]
struct JonesJson {
    alpha: String,
    wr: i64,
    wt: i64,
    ext_wt: i64,
    #[serde(rename = "V_A")]
    v_a: Value,
    #[serde(rename = "V_t")]
    v_t: String,
}

fn jones_json(v: &JonesValue, wr: i64, prefactor: Option<i64>) -> anyhow::Result<JonesJson> {
    let wt = weight(v.alpha)?;
    Ok(JonesJson {
        alpha: v.alpha.to_string(),
        wr,
        wt,
        ext_wt: -wr - wt,
        v_a: terms_json(&v.poly_a),
        v_t: v.pretty(prefactor),
    })
}

fn print_json<T: Serialize>(out: &mut String, v: &T) -> anyhow::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v)?)?;
    Ok(())
}

fn word_text(w: &LRWord) -> String {
    if w.is_empty() {
        "∅".to_string()
    } else {
        w.to_string()
    }
}

fn orbit_text(o: &Orbit) -> String {
    let parts: Vec<String> = o.as_array().iter().map(Fraction::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn report(out: &mut String, alpha: Fraction, as_json: bool) -> anyhow::Result<()> {
    let a = alpha.require_unit_interval()?;
    let even = cf_expand(a, TermParity::Even)?;
    let odd = cf_expand(a, TermParity::Odd)?;
    let word = word_of(a)?;
    let orbit = Orbit::of(a)?;
    let (left, right) = parents(a)?;
    let wt = weight(a)?;
    let wr = writhe_principal(a)?;
    let ext = extended_weight(a)?;
    let signs = sign_sequence(&cf_expand(a, TermParity::Any)?)?;
    let bracket = bracket_of_denominator(a)?;
    let v = jones(a)?;
    let class = frieze_jones(a)?;
    let class_t: Vec<String> = class.members_t()?.iter().map(|p| p.pretty_t(None)).collect();
    if as_json {
        return print_json(out, &json!({
            "alpha": a.to_string(),
            "cf_even": even.to_string(),
            "cf_odd": odd.to_string(),
            "word": word.to_string(),
            "orbit": orbit.members().iter().map(Fraction::to_string).collect::<Vec<_>>(),
            "type": a.parity_type().label(),
            "parents": [left.to_string(), right.to_string()],
            "wt": wt,
            "wr": wr,
            "ext_wt": ext,
            "signs": signs.signs(),
            "bracket": terms_json(&bracket),
            "V_A": terms_json(&v.poly_a),
            "V_t": v.pretty(None),
            "class_case": class.case,
            "class": class_t,
        }));
    }
    writeln!(out, "alpha     = {a}")?;
    writeln!(out, "cf (even) = {even}")?;
    writeln!(out, "cf (odd)  = {odd}")?;
    writeln!(out, "word      = {}", word_text(&word))?;
    writeln!(out, "orbit     = {}  (size {})", orbit_text(&orbit), orbit.members().len())?;
    writeln!(out, "type      = {}", a.parity_type().label())?;
    writeln!(out, "parents   = ({left}, {right})")?;
    writeln!(out, "wt = {wt}")?;
    writeln!(out, "wr = {wr}")?;
    writeln!(out, "wt~ = {ext}")?;
    writeln!(out, "signs     = {signs}")?;
    writeln!(out, "<D(T)>    = {bracket}")?;
    writeln!(out, "V         = {}", v.pretty(None))?;
    writeln!(out, "class     = {:?}", class.case)?;
    for m in class_t {
        writeln!(out, "            {m}")?;
    }
    Ok(())
}

fn frieze_input(input: &str, word: bool, fraction: bool) -> anyhow::Result<Frieze> {
    let input = input.trim();
    let as_fraction = fraction || (!word && input.contains('/'));
    let w: LRWord = if as_fraction {
        let a: Fraction = input.parse().with_context(|| format!("not a fraction: {input:?}"))?;
        word_of(a.require_unit_interval()?)?
    } else {
        input.parse().with_context(|| format!("not an L/R word: {input:?}"))?
    };
    Ok(frieze_from_word(&w)?)
}

fn color_requested() -> bool {
    std::env::var("FRIEZE_COLOR").map(|v| !v.is_empty() && v != "0").unwrap_or(false)
}

/// Usage problems map to exit code 2, failed properties to 1.
enum Failure {
    Usage(anyhow::Error),
    Property(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<Error>() {
            Some(Error::PathMismatch(_)) | Some(Error::DiamondRule { .. }) => Failure::Property(format!("{e:#}")),
            _ => Failure::Usage(e),
        }
    }
}

impl From<std::fmt::Error> for Failure {
    fn from(e: std::fmt::Error) -> Self {
        Failure::Usage(e.into())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from(anyhow::Error::from(e))
    }
}

fn execute(cli: Cli, out: &mut String) -> Result<(), Failure> {
    match cli.command {
        Command::Report { alpha, json } => report(out, alpha, json)?,
        Command::Frieze { input, word, fraction, format, mark_max } => {
            let f = frieze_input(&input, word, fraction)?;
            let opts = RenderOptions { mark_max, color: color_requested() };
            writeln!(out, "{}", render_frieze(&f, format.into(), opts))?;
        }
        Command::Orbit { alpha, json } => {
            let a = alpha.require_unit_interval()?;
            let o = Orbit::of(a)?;
            if json {
                print_json(out, &json!({
                    "alpha": a.to_string(),
                    "i": o.i.to_string(),
                    "r": o.r.to_string(),
                    "ir": o.ir.to_string(),
                    "members": o.members().iter().map(Fraction::to_string).collect::<Vec<_>>(),
                    "canonical": o.canonical().to_string(),
                }))?;
            } else {
                writeln!(out, "alpha = {}", o.alpha)?;
                writeln!(out, "i     = {}", o.i)?;
                writeln!(out, "r     = {}", o.r)?;
                writeln!(out, "ir    = {}", o.ir)?;
                writeln!(out, "size  = {}", o.members().len())?;
            }
        }
        Command::Jones { alpha, plus_minus, prefactor, json } => {
            let a = alpha.require_unit_interval()?;
            let (v, wr) = if plus_minus {
                (jones_plus_minus(a)?, writhe_plus_minus(a)?)
            } else {
                (jones(a)?, writhe_principal(a)?)
            };
            if json {
                print_json(out, &jones_json(&v, wr, prefactor)?)?;
            } else {
                writeln!(out, "{}", v.pretty(prefactor))?;
            }
        }
        Command::Classify { q, json, csv } => {
            let classes = classify_denominator(q)?;
            if csv {
                out.push_str(&classes_to_csv(&classes)?);
            } else if json {
                print_json(out, &classes)?;
            } else {
                for c in &classes {
                    let m: Vec<String> = c.members.iter().map(u64::to_string).collect();
                    writeln!(out, "{}  [{}]", c.canonical(), m.join(", "))?;
                }
            }
        }
        Command::Verify { max_q, suite, jobs, json } => {
            if let Some(q) = max_q {
                if q < 2 {
                    return Err(Failure::Usage(anyhow::anyhow!("--max-q must be at least 2")));
                }
            }
            if jobs == 0 {
                return Err(Failure::Usage(anyhow::anyhow!("--jobs must be positive")));
            }
            let suites = if suite.is_empty() { Suite::ALL.to_vec() } else { suite };
            let opts = VerifyOptions { max_q, jobs, ..Default::default() };
            let report = run(&suites, &opts)?;
            if json {
                print_json(out, &report)?;
            } else {
                writeln!(out, "{report}")?;
            }
            if !report.passed() {
                return Err(Failure::Property(format!("{} failure(s)", report.failures())));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = execute(cli, &mut out);
    // a closed pipe downstream is not an error
    let _ = io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Property(msg)) => {
            eprintln!("property failure: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
