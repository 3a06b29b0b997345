//! The `rootadj` command line.
//!
//! Exit status: 0 on success and passing checks, 1 when a check fails,
//! 2 on usage errors and on every library error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use crate::algebra::{Element, GeneratorKind, PresentedAlgebra};
use crate::basis::{enumerate_basis, BasisTable};
use crate::document::{make_algebra, parse_presentation, render_table_text, table_to_json, PresentationDoc};
use crate::error::Error;
use crate::hkr::{cofiber_check, hh, log_etale_check, log_hh, weight_zero_iso_check};
use crate::ktheory::{ko_check, ko_check_summary, reassemble, t2_presentation, table_k_ku, weight_piece, T2Table};
use crate::properties::run_property_suite;
use crate::report::CheckReport;
use crate::root::{adjoin_root, check_hypothesis, preset, Preset, PresetParams, RootAdjunctionRequest};
use crate::splitting::{tc_k_summand_report, thh_splitting_check};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    /// Basis table of a presentation
    Basis,
    /// Basis table after adjoining an m-th root
    Adjoin,
    /// HKR model of Hochschild homology
    Hh,
    /// Logarithmic HKR model relative to --gen
    Loghh,
    /// Weight-zero isomorphism check for s_mk ↦ s_k^m
    HhmapCheck,
    /// Cofiber sequence HH(A) → HH(A|g) → ΣHH(A/g)
    CofiberCheck,
    /// Log-étaleness of the root adjunction
    LogetaleCheck,
    /// Assembled HH table of the root adjunction against the direct one
    SplitThh,
    /// Frobenius orbits on Z/m and the splitting statements that apply
    TcOrbits,
    /// The V(1)_*K(ku_p) table
    KuTable,
    /// Even-weight reassembly of K(ku_p) against K(ko_p)
    KoCheck,
    /// T(2)-local presentations
    T2,
    /// Seeded randomized property suite
    Props,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    Json,
    #[default]
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "rootadj", version, about = "Homotopy-level shadows of root adjunction")]
pub struct Cli {
    #[arg(value_enum)]
    pub verb: Verb,
    /// ell, ku, ko, kn, Kn, En_hat, two_periodic_K (t2: ku or ko)
    #[arg(long)]
    pub preset: Option<String>,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    pub k: Option<i64>,
    /// Height for the chromatic presets
    #[arg(long)]
    pub n: Option<u32>,
    /// Exponent cap for degree-0 generators of presets
    #[arg(long)]
    pub cap: Option<u32>,
    /// Generator name, or an element for `adjoin`
    #[arg(long)]
    pub gen: Option<String>,
    /// Restrict ku-table to one weight
    #[arg(long)]
    pub weight: Option<i64>,
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    pub window: Option<Vec<i64>>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of random pairs for `props`
    #[arg(long, default_value_t = 1000)]
    pub pairs: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Presentation document (JSON)
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = std::result::Result<(String, bool), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Parses `args` (without the program name) and runs the verb.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("rootadj")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((doc, ok)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &doc).map_err(|e| format!("{}: {e}", path.display())),
                None => out.write_all(doc.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => i32::from(!ok),
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    2
                }
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn window(cli: &Cli) -> std::result::Result<(i64, i64), Failure> {
    match cli.window.as_deref() {
        Some(&[lo, hi]) if lo <= hi => Ok((lo, hi)),
        Some(&[lo, hi]) => Err(Error::InvalidWindow(lo, hi).into()),
        _ => Err(usage(format!("{:?} needs --window LO HI", cli.verb))),
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str, verb: Verb) -> std::result::Result<T, Failure> {
    v.ok_or_else(|| usage(format!("{verb:?} needs {flag}")))
}

/// The algebra of the command, with a preferred element `a` and root
/// request data from the document when present.
struct Source {
    algebra: PresentedAlgebra,
    preset: Option<Preset>,
    doc: Option<PresentationDoc>,
}

impl Source {
    fn load(cli: &Cli) -> std::result::Result<Self, Failure> {
        match (&cli.input, &cli.preset) {
            (Some(_), Some(_)) => Err(usage("give either --input or --preset, not both")),
            (Some(path), None) => {
                let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                let doc = parse_presentation(&text)?;
                Ok(Source {
                    algebra: make_algebra(&doc)?,
                    preset: None,
                    doc: Some(doc),
                })
            }
            (None, Some(name)) => {
                let p = need(cli.p, "--p", cli.verb)?;
                let mut params = PresetParams::new(p);
                if let Some(n) = cli.n {
                    params.n = n;
                }
                if let Some(cap) = cli.cap {
                    params.cap = cap;
                }
                let preset = preset(name, params)?;
                Ok(Source {
                    algebra: preset.algebra.clone(),
                    preset: Some(preset),
                    doc: None,
                })
            }
            (None, None) => Err(usage(format!("{:?} needs --preset NAME --p P or --input PATH", cli.verb))),
        }
    }

    /// `--gen`, else the document's root request, else the preset's class.
    fn element(&self, cli: &Cli) -> std::result::Result<Element, Failure> {
        if let Some(g) = &cli.gen {
            return Ok(self.algebra.parse_element(g)?);
        }
        if let Some(r) = self.doc.as_ref().and_then(|d| d.root.as_ref()) {
            return Ok(self.algebra.parse_element(&r.a)?);
        }
        if let Some(p) = &self.preset {
            return Ok(p.distinguished.clone());
        }
        Err(usage(format!("{:?} needs --gen", cli.verb)))
    }

    fn generator_name(&self, cli: &Cli) -> std::result::Result<String, Failure> {
        if let Some(g) = &cli.gen {
            return Ok(g.clone());
        }
        if let Some(r) = self.doc.as_ref().and_then(|d| d.root.as_ref()) {
            return Ok(r.a.clone());
        }
        if let Some(p) = &self.preset {
            return Ok(p.distinguished_name.clone());
        }
        Err(usage(format!("{:?} needs --gen NAME", cli.verb)))
    }

    fn root_m(&self, cli: &Cli) -> std::result::Result<u32, Failure> {
        cli.m
            .or_else(|| self.doc.as_ref().and_then(|d| d.root.as_ref()).map(|r| r.m))
            .ok_or_else(|| usage(format!("{:?} needs --m", cli.verb)))
    }

    fn header(&self) -> String {
        let mut s = String::new();
        if let Some(p) = &self.preset {
            let _ = writeln!(s, "# {}: {}", p.name, p.description);
            if p.rank_multiplier > 1 {
                let _ = writeln!(s, "# ranks over the ground ring; multiply by {} after base change", p.rank_multiplier);
            }
            if let Some(c) = &p.convention {
                let _ = writeln!(
                    s,
                    "# stored generator {} in degree {} stands for {} in degree {}",
                    c.stored, c.stored_degree, c.customary, c.customary_degree
                );
            }
        }
        s
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn emit_table(cli: &Cli, header: &str, t: &BasisTable) -> Outcome {
    Ok(match cli.format {
        Format::Json => (table_to_json(t) + "\n", true),
        Format::Text => (format!("{header}{}", render_table_text(t)), true),
    })
}

fn emit_report(cli: &Cli, r: &CheckReport) -> Outcome {
    let text = match cli.format {
        Format::Json => json(r),
        Format::Text => r.render_text(),
    };
    Ok((text, r.passed()))
}

fn dispatch(cli: &Cli) -> Outcome {
    match cli.verb {
        Verb::Basis => {
            let src = Source::load(cli)?;
            let t = enumerate_basis(&src.algebra, window(cli)?)?;
            emit_table(cli, &src.header(), &t)
        }
        Verb::Adjoin => {
            let src = Source::load(cli)?;
            let a = src.element(cli)?;
            let mut req = RootAdjunctionRequest::new(src.algebra.clone(), a, src.root_m(cli)?);
            let k = cli.k.or_else(|| src.doc.as_ref().and_then(|d| d.root.as_ref()).and_then(|r| r.k));
            if let Some(k) = k {
                req = req.with_k(k);
            }
            if let Some(name) = src.doc.as_ref().and_then(|d| d.root.as_ref()).and_then(|r| r.name.clone()) {
                req = req.named(name);
            }
            let report = check_hypothesis(&req);
            let alg = adjoin_root(&req)?;
            let t = enumerate_basis(&alg, window(cli)?)?;
            let header = format!(
                "{}# adjoined z with z^{} = {}, k = {}, {}\n",
                src.header(),
                req.m,
                src.algebra.format_element(&req.a),
                report.k.unwrap_or(0),
                if report.tame { "tame" } else { "wild: p divides m" }
            );
            emit_table(cli, &header, &t)
        }
        Verb::Hh => {
            let src = Source::load(cli)?;
            let t = hh(&src.algebra)?.basis(window(cli)?)?;
            emit_table(cli, &src.header(), &t)
        }
        Verb::Loghh => {
            let src = Source::load(cli)?;
            let g = src.generator_name(cli)?;
            let t = log_hh(&src.algebra, &g)?.basis(window(cli)?)?;
            emit_table(cli, &src.header(), &t)
        }
        Verb::HhmapCheck => {
            let m = need(cli.m, "--m", cli.verb)?;
            let k = need(cli.k, "--k", cli.verb)?;
            let p = need(cli.p, "--p", cli.verb)?;
            emit_report(cli, &weight_zero_iso_check(m, k, p, window(cli)?)?)
        }
        Verb::CofiberCheck => {
            let src = Source::load(cli)?;
            let g = src.generator_name(cli)?;
            emit_report(cli, &cofiber_check(&src.algebra, &g, window(cli)?)?)
        }
        Verb::LogetaleCheck => {
            let src = Source::load(cli)?;
            let g = src.generator_name(cli)?;
            emit_report(cli, &log_etale_check(&src.algebra, &g, src.root_m(cli)?, window(cli)?)?)
        }
        Verb::SplitThh => {
            let src = Source::load(cli)?;
            let g = src.generator_name(cli)?;
            emit_report(cli, &thh_splitting_check(&src.algebra, &g, src.root_m(cli)?, window(cli)?)?)
        }
        Verb::TcOrbits => tc_orbits(cli),
        Verb::KuTable => {
            let p = need(cli.p, "--p", cli.verb)?;
            let t = table_k_ku(p)?;
            match (&cli.window, cli.weight) {
                (None, None) => Ok(match cli.format {
                    Format::Json => (json(&t), true),
                    Format::Text => (t.render_text(), true),
                }),
                (_, Some(w)) => emit_table(cli, "", &weight_piece(&t, w, window(cli)?)?),
                (Some(_), None) => {
                    let all: Vec<i64> = (0..t.modulus() as i64).collect();
                    emit_table(cli, "", &reassemble(&t, &all, window(cli)?)?)
                }
            }
        }
        Verb::KoCheck => {
            let p = need(cli.p, "--p", cli.verb)?;
            let r = ko_check(p, window(cli)?)?;
            let text = match cli.format {
                Format::Json => json(&r),
                Format::Text => {
                    let mut s = ko_check_summary(p, &r) + "\n";
                    if !r.passed() {
                        s.push_str(&r.render_text());
                    }
                    s
                }
            };
            Ok((text, r.passed()))
        }
        Verb::T2 => {
            let p = need(cli.p, "--p", cli.verb)?;
            let tables = match cli.preset.as_deref() {
                None => vec![T2Table::Ku, T2Table::Ko],
                Some(s) => vec![s.parse::<T2Table>()?],
            };
            let pres = tables
                .into_iter()
                .map(|t| t2_presentation(p, t))
                .collect::<crate::error::Result<Vec<_>>>()?;
            Ok(match cli.format {
                Format::Json => (json(&pres), true),
                Format::Text => {
                    let mut s = String::new();
                    for x in &pres {
                        let _ = writeln!(s, "{}\n  relation: {}", x.presentation, x.relation);
                    }
                    (s, true)
                }
            })
        }
        Verb::Props => {
            let r = run_property_suite(cli.seed, cli.pairs)?;
            Ok(match cli.format {
                Format::Json => (json(&r), r.passed()),
                Format::Text => {
                    let mut s = format!(
                        "{}: {} random pairs, seed {}\n",
                        if r.passed() { "PASS" } else { "FAIL" },
                        r.pairs,
                        r.seed
                    );
                    for (name, n) in &r.checked {
                        let _ = writeln!(s, "  {name}: {n} checked");
                    }
                    for f in &r.failures {
                        let _ = writeln!(s, "  failure: {f}");
                    }
                    (s, r.passed())
                }
            })
        }
    }
}

fn tc_orbits(cli: &Cli) -> Outcome {
    let m = need(cli.m, "--m", cli.verb)?;
    let p = need(cli.p, "--p", cli.verb)?;
    // without a preset, assume the connective case with deg(a) > 0
    let (positive, connective) = if cli.preset.is_some() {
        let src = Source::load(cli)?;
        let a = src.element(cli)?;
        let positive = src.algebra.bidegree(&a).is_some_and(|b| b.deg > 0);
        let connective = src.algebra.generators().iter().all(|g| g.kind != GeneratorKind::Laurent && g.bidegree.deg >= 0);
        (positive, connective)
    } else {
        (true, true)
    };
    let r = tc_k_summand_report(m as u64, p, positive, connective)?;
    Ok(match cli.format {
        Format::Json => (json(&r), true),
        Format::Text => {
            let mut s = format!("blocks {}\n", r.orbits);
            for c in &r.claims {
                let _ = writeln!(s, "note: {c}");
            }
            (s, true)
        }
    })
}
