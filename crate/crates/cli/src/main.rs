//! superklr: exact computations for U_q^+(gl(m|n)) and its dg KLR categorification.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use superklr::bilinear_form::{form_graphical, FormEngine};
use superklr::characters::{
    ch_divided_projective, ch_projective, serre_checks, Character, KatoModule,
};
use superklr::dg::{AlgebraJson, DgAlgebra};
use superklr::free_super::FreeElement;
use superklr::klr::{gdim, gdim_of, DividedSequence, Klr, RawWord, Strategy};
use superklr::pbw::{form_pbw_closed, ideal_generators, pbw_instances, two_sided_multiples, RootVectorTable};
use superklr::root_data::{RootConfig, Weight};
use superklr::scalars::RationalQ;
use superklr::verify;

#[derive(Parser)]
#[command(name = "superklr", version, about = "Exact computations for U_q^+(gl(m|n)) and dg KLR algebras")]
struct Cli {
    /// Worker threads for parallel Gram and gdim tables (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the output to this file name inside the output directory.
    #[arg(long, global = true)]
    save: Option<String>,
    /// Output directory used by --save.
    #[arg(long, global = true, env = "SUPERKLR_OUT_DIR", default_value = "superklr-out")]
    out_dir: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct Rank {
    #[arg(long)]
    m: u32,
    #[arg(long, default_value_t = 1)]
    n: u32,
}

#[derive(Subcommand)]
enum Command {
    /// The bilinear form (a, b) of two words.
    Form {
        #[command(flatten)]
        rank: Rank,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Also evaluate the graphical formula and compare.
        #[arg(long)]
        check: bool,
    },
    /// Gram matrix of all words of a weight.
    Gram {
        #[command(flatten)]
        rank: Rank,
        #[arg(long)]
        nu: String,
    },
    /// dim f_nu, the rank of the Gram matrix.
    DimFnu {
        #[command(flatten)]
        rank: Rank,
        #[arg(long)]
        nu: String,
    },
    /// PBW monomials of a weight with their norms.
    Pbw {
        #[command(flatten)]
        rank: Rank,
        #[arg(long)]
        nu: String,
    },
    /// Radical membership of an element, or of all built-in radical elements.
    RadicalCheck {
        #[command(flatten)]
        rank: Rank,
        /// A term COEFF@WORD, e.g. "q+q^-1@1,2,1"; repeat for a sum.
        #[arg(long = "term", allow_hyphen_values = true)]
        terms: Vec<String>,
        /// Size bound for the built-in instances.
        #[arg(long, default_value_t = 5)]
        max_size: u32,
    },
    /// Graded dimension of e(j) R e(i).
    KlrGdim {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        i: String,
        /// Omit to list every target.
        #[arg(long)]
        j: Option<String>,
    },
    /// Normal form of a word in the generators.
    KlrRewrite {
        #[arg(long)]
        m: u32,
        /// Source idempotent, e.g. 1,2,2.
        #[arg(long)]
        source: String,
        /// Generators, leftmost on top, e.g. "psi1 y2^2 psi2".
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::BottomUp)]
        strategy: StrategyArg,
    },
    /// Fuzzed relation closure, associativity and strategy independence.
    KlrVerify {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Character of R(nu) e(i) or of R(nu) e~ for a divided sequence.
    Char {
        #[arg(long)]
        m: u32,
        /// A sequence such as 1,2 or a divided sequence such as 1^2,2.
        #[arg(long)]
        seq: String,
        /// Print the t = -1 specialization instead.
        #[arg(long)]
        specialize: bool,
    },
    /// The shuffle lemma for sequences of length at most --max.
    ShuffleCheck {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 2)]
        max: u32,
    },
    /// Serre relations and rank checks in K0 at t = -1.
    SerreCheck {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 4)]
        max_size: u32,
    },
    /// Type I / type II analysis of a finite-dimensional dg algebra.
    DgAnalyze {
        /// Build R(nu) for nu a multiple of m.
        #[arg(long)]
        from_klr: bool,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        nu: Option<String>,
        /// Read an algebra from a JSON file.
        #[arg(long)]
        input: Option<PathBuf>,
        /// A built-in algebra: ground or lambda.
        #[arg(long)]
        example: Option<String>,
        /// Print the full analysis, including blocks and dimensions.
        #[arg(long)]
        full: bool,
        /// Print the algebra as JSON instead of analyzing it.
        #[arg(long)]
        dump: bool,
    },
    /// The Kato module L(i^k).
    Kato {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        i: u32,
        #[arg(long)]
        k: usize,
    },
    /// Run acceptance criteria by number, or all of them.
    Verify {
        #[arg(long, default_value = "all")]
        criterion: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    BottomUp,
    TopDown,
}

#[derive(Serialize)]
struct DgCounts {
    #[serde(rename = "m_I")]
    m_i: usize,
    #[serde(rename = "m_II")]
    m_ii: usize,
    k0_rank: usize,
}

/// Output of a command: the text to print and whether a check failed.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn config(rank: &Rank) -> anyhow::Result<RootConfig> {
    RootConfig::new(rank.m, rank.n).with_context(|| format!("--m {} --n {}", rank.m, rank.n))
}

fn klr_config(m: u32) -> anyhow::Result<RootConfig> {
    RootConfig::new(m, 1).with_context(|| format!("--m {m}"))
}

fn parse_word(cfg: &RootConfig, flag: &str, s: &str) -> anyhow::Result<Vec<u32>> {
    let mut w = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let i: u32 = part.parse().with_context(|| format!("{flag}: bad label {part:?}"))?;
        cfg.check(i).with_context(|| format!("{flag}"))?;
        w.push(i);
    }
    Ok(w)
}

fn parse_weight(cfg: &RootConfig, s: &str) -> anyhow::Result<Weight> {
    let nu = Weight::parse(s).context("--nu")?;
    for (&i, _) in &nu.0 {
        cfg.check(i).context("--nu")?;
    }
    Ok(nu)
}

fn to_json<T: Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("serializable")
}

fn csv_rows(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

fn character_out(c: &Character, specialize: bool, format: Format) -> String {
    if specialize {
        let s = c.specialize();
        return match format {
            Format::Json => to_json(&s.iter().map(|(k, v)| json!({"sequence": k, "value": v.to_string()})).collect::<Vec<_>>()),
            Format::Csv => csv_rows(
                &["sequence", "value"],
                s.iter().map(|(k, v)| vec![join(k), v.to_string()]).collect(),
            ),
            Format::Text => s.iter().map(|(k, v)| format!("({}): {v}", join(k))).collect::<Vec<_>>().join("\n"),
        };
    }
    match format {
        Format::Json => to_json(&c.to_json()),
        Format::Csv => csv_rows(
            &["sequence", "t_exponent", "num", "den"],
            c.to_json()
                .into_iter()
                .map(|r| vec![join(&r.sequence), r.t_exponent.to_string(), r.num, r.den])
                .collect(),
        ),
        Format::Text => c.to_string(),
    }
}

fn join(s: &[u32]) -> String {
    s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn report_out(reports: &[verify::CriterionReport], format: Format) -> Outcome {
    let ok = reports.iter().all(|r| r.passed);
    let text = match format {
        Format::Json => to_json(&reports),
        _ => reports
            .iter()
            .map(|r| {
                let mut s = format!(
                    "{} AC{} {} ({} checks, {} failed): {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.id,
                    r.title,
                    r.checks,
                    r.failed,
                    r.detail
                );
                if let Some(f) = r.failures.first() {
                    s.push_str(&format!("\n  first counterexample: {f}"));
                }
                s
            })
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Outcome { text, ok }
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let format = cli.format;
    match &cli.command {
        Command::Form { rank, a, b, check } => {
            let c = config(rank)?;
            let (a, b) = (parse_word(&c, "--a", a)?, parse_word(&c, "--b", b)?);
            let v = FormEngine::new(c).form(&a, &b);
            if *check {
                let g = form_graphical(&c, &a, &b);
                let ok = g == v;
                let text = match format {
                    Format::Json => to_json(&json!({"recursive": v.to_string(), "graphical": g.to_string(), "agree": ok})),
                    _ => format!("recursive: {v}\ngraphical: {g}"),
                };
                return Ok(Outcome { text, ok });
            }
            Ok(Outcome::ok(match format {
                Format::Json => to_json(&json!({"a": a, "b": b, "value": v.to_string()})),
                _ => v.to_string(),
            }))
        }
        Command::Gram { rank, nu } => {
            let c = config(rank)?;
            let g = FormEngine::new(c).gram(&parse_weight(&c, nu)?);
            Ok(Outcome::ok(match format {
                Format::Json => g.to_json().to_string(),
                _ => g.to_csv().trim_end().to_string(),
            }))
        }
        Command::DimFnu { rank, nu } => {
            let c = config(rank)?;
            let d = FormEngine::new(c).dim_f(&parse_weight(&c, nu)?);
            Ok(Outcome::ok(match format {
                Format::Json => to_json(&json!({"dim": d})),
                _ => d.to_string(),
            }))
        }
        Command::Pbw { rank, nu } => {
            let c = config(rank)?;
            let mons = c.pbw_monomials(&parse_weight(&c, nu)?);
            let rows: Vec<(String, String)> = mons
                .iter()
                .map(|x| (x.to_string(), form_pbw_closed(&c, x, x).to_string()))
                .collect();
            Ok(Outcome::ok(match format {
                Format::Json => to_json(&rows.iter().map(|(a, b)| json!({"monomial": a, "norm": b})).collect::<Vec<_>>()),
                Format::Csv => csv_rows(&["monomial", "norm"], rows.into_iter().map(|(a, b)| vec![a, b]).collect()),
                Format::Text => rows.iter().map(|(a, b)| format!("{a}\t{b}")).collect::<Vec<_>>().join("\n"),
            }))
        }
        Command::RadicalCheck { rank, terms, max_size } => {
            let c = config(rank)?;
            let e = FormEngine::new(c);
            if !terms.is_empty() {
                let mut x = FreeElement::zero();
                for t in terms {
                    let (coef, w) = t.rsplit_once('@').with_context(|| format!("--term {t:?} is not COEFF@WORD"))?;
                    let coef: RationalQ = coef.trim().parse().with_context(|| format!("--term {t:?}"))?;
                    x.add_term(parse_word(&c, "--term", w)?, &coef);
                }
                let ok = e.radical_contains(&x).context("--term")?;
                let witness = e.radical_witness(&x);
                let text = match format {
                    Format::Json => to_json(&json!({
                        "in_radical": ok,
                        "witness": witness.as_ref().map(|(w, v)| json!({"word": w, "pairing": v.to_string()})),
                    })),
                    _ => match &witness {
                        None => "in radical".to_string(),
                        Some((w, v)) => format!("not in radical: pairing with ({}) is {v}", join(w)),
                    },
                };
                return Ok(Outcome { text, ok });
            }
            let mut lines = Vec::new();
            let mut ok = true;
            let mut all = Vec::new();
            for g in ideal_generators(&c) {
                let size = g.element.weight().map(|w| w.size()).unwrap_or(0);
                all.extend(two_sided_multiples(&c, &g, max_size.saturating_sub(size)));
            }
            all.extend(pbw_instances(&RootVectorTable::new(c), *max_size));
            for x in &all {
                let good = e.radical_contains(&x.element)?;
                if !good && ok {
                    lines.push(format!("FAIL {} {}", x.family, x.label));
                }
                ok &= good;
            }
            lines.push(format!("{} instances checked", all.len()));
            Ok(Outcome { text: lines.join("\n"), ok })
        }
        Command::KlrGdim { m, i, j } => {
            let c = klr_config(*m)?;
            let i = parse_word(&c, "--i", i)?;
            let rows: Vec<(Vec<u32>, String, String)> = match j {
                Some(j) => {
                    let j = parse_word(&c, "--j", j)?;
                    let g = gdim(&c, &i, &j);
                    vec![(j, g.to_string(), g.specialize().to_string())]
                }
                None => gdim_of(&c, &i)
                    .into_iter()
                    .map(|(j, g)| (j, g.to_string(), g.specialize().to_string()))
                    .collect(),
            };
            Ok(Outcome::ok(match format {
                Format::Json => to_json(
                    &rows
                        .iter()
                        .map(|(j, g, s)| json!({"source": i, "target": j, "gdim": g, "at_t_minus_1": s}))
                        .collect::<Vec<_>>(),
                ),
                Format::Csv => csv_rows(
                    &["target", "gdim", "at_t_minus_1"],
                    rows.into_iter().map(|(j, g, s)| vec![join(&j), g, s]).collect(),
                ),
                Format::Text => rows.iter().map(|(j, g, _)| format!("e({}): {g}", join(j))).collect::<Vec<_>>().join("\n"),
            }))
        }
        Command::KlrRewrite { m, source, word, strategy } => {
            let c = klr_config(*m)?;
            let source = parse_word(&c, "--source", source)?;
            let w = RawWord::parse(word, source).context("--word")?;
            let s = match strategy {
                StrategyArg::BottomUp => Strategy::BottomUp,
                StrategyArg::TopDown => Strategy::TopDown,
            };
            let x = Klr::new(*m, s)?.rewrite(&w);
            Ok(Outcome::ok(match format {
                Format::Json => x.to_json(&c).to_string(),
                _ => x.to_string(),
            }))
        }
        Command::KlrVerify { m, samples, trials } => {
            klr_config(*m)?;
            let r = verify::klr_soundness(&[*m], *samples, *trials, cli.seed)?;
            Ok(report_out(&[r], format))
        }
        Command::Char { m, seq, specialize } => {
            let c = klr_config(*m)?;
            let ch = if seq.contains('^') {
                let ds = DividedSequence::parse(seq).context("--seq")?;
                for &(i, _) in &ds.0 {
                    c.check(i).context("--seq")?;
                }
                ch_divided_projective(&c, &ds).context("--seq")?
            } else {
                ch_projective(&c, &parse_word(&c, "--seq", seq)?)
            };
            Ok(Outcome::ok(character_out(&ch, *specialize, format)))
        }
        Command::ShuffleCheck { m, max } => {
            klr_config(*m)?;
            Ok(report_out(&[verify::shuffle_lemma(&[*m], *max)?], format))
        }
        Command::SerreCheck { m, max_size } => {
            klr_config(*m)?;
            let r = serre_checks(*m, *max_size)?;
            let ok = r.ok();
            let text = match format {
                Format::Json => to_json(&r),
                _ => {
                    let mut s = format!(
                        "{} vanishing, {} commutation, {} Serre, {} rank checks; {} failures",
                        r.vanishing_checked,
                        r.commutation_checked,
                        r.serre_checked,
                        r.rank_checked,
                        r.failures.len()
                    );
                    if let Some(f) = r.failures.first() {
                        s.push_str(&format!("\nfirst counterexample: {f}"));
                    }
                    s
                }
            };
            Ok(Outcome { text, ok })
        }
        Command::DgAnalyze { from_klr, m, nu, input, example, full, dump } => {
            let a = if *from_klr {
                let m = m.context("--from-klr needs --m")?;
                let c = klr_config(m)?;
                let nu = nu.as_deref().context("--from-klr needs --nu")?;
                DgAlgebra::from_klr(m, &parse_weight(&c, nu)?).context("--nu")?
            } else if let Some(path) = input {
                let text = std::fs::read_to_string(path).with_context(|| format!("--input {}", path.display()))?;
                let j: AlgebraJson = serde_json::from_str(&text).context("--input")?;
                DgAlgebra::from_json(&j).context("--input")?
            } else {
                match example.as_deref() {
                    Some("ground") => DgAlgebra::ground(),
                    Some("lambda") => DgAlgebra::lambda_y(),
                    Some(other) => bail!("--example: unknown algebra {other:?}"),
                    None => bail!("give one of --from-klr, --input, --example"),
                }
            };
            if *dump {
                return Ok(Outcome::ok(to_json(&a.to_json())));
            }
            let r = a.classify()?;
            Ok(Outcome::ok(if *full {
                to_json(&r)
            } else {
                to_json(&DgCounts { m_i: r.m_i, m_ii: r.m_ii, k0_rank: r.k0_rank })
            }))
        }
        Command::Kato { m, i, k } => {
            let klr = Klr::new(*m, Strategy::BottomUp)?;
            let c = *klr.config();
            let l = KatoModule::new(*m, *i, *k).context("--i/--k")?;
            let module = l.check_module(&klr);
            let dg = l.check_dg(&klr, 2);
            let h = l.complex(&c).cohomology()?;
            let ok = module.is_ok() && dg.is_ok();
            let h: Vec<(String, usize)> = h.iter().map(|((a, b), d)| (format!("{a},{b}"), *d)).collect();
            let text = match format {
                Format::Json => to_json(&json!({
                    "dim": l.dim(),
                    "character": l.character(&c).to_json(),
                    "module_axioms": module.as_ref().err(),
                    "dg_axioms": dg.as_ref().err(),
                    "cohomology": h,
                })),
                _ => {
                    let mut s = vec![
                        format!("dim {}", l.dim()),
                        format!("character {}", l.character(&c)),
                        format!("module axioms: {}", module.as_ref().err().map_or("ok", |e| e.as_str())),
                        format!("dg axioms: {}", dg.as_ref().err().map_or("ok", |e| e.as_str())),
                    ];
                    let total: usize = h.iter().map(|x| x.1).sum();
                    s.push(format!("cohomology dimension {total} {h:?}"));
                    s.join("\n")
                }
            };
            Ok(Outcome { text, ok })
        }
        Command::Verify { criterion } => {
            let reports = if criterion == "all" {
                verify::all(cli.seed)?
            } else {
                let id: u8 = criterion.parse().ok().filter(|x| (1..=verify::COUNT).contains(x)).with_context(|| {
                    format!("--criterion {criterion:?}: expected 1..={} or all", verify::COUNT)
                })?;
                vec![verify::run(id, cli.seed)?]
            };
            Ok(report_out(&reports, format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: --threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            println!("{}", out.text);
            if let Some(name) = &cli.save {
                let path = cli.out_dir.join(name);
                let written = std::fs::create_dir_all(&cli.out_dir).and_then(|_| std::fs::write(&path, format!("{}\n", out.text)));
                if let Err(e) = written {
                    eprintln!("error: --save {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
