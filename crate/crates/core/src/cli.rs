//! Command-line front end. Every subcommand is deterministic: identical
//! invocations produce byte-identical output.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::combinatorics::{duality_stats, poincare_closed, zeta_polynomial, zeta_values};
use crate::error::Error;
use crate::garside::{
    circle_make, equal_group, equal_monoid, gcd_left, lattice_dot, lcm_right, normal_form,
    psi_embed, simples_closed, BraidModel, GarsideData,
};
use crate::presentation::{build_classical_b, SignedWord};
use crate::reflection::{enumerate_group, project, ReflectionModel};
use crate::reversing::{check_completeness, right_reverse_traced, ReverseStep, DEFAULT_BUDGET};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Parser, Debug)]
#[command(
    name = "eer",
    about = "Garside-structure calculator for braid groups of type (e,e,r)",
    disable_help_subcommand = true
)]
struct Cli {
    /// Circle size e of the (e,e,r) family.
    #[arg(long, global = true)]
    e: Option<u32>,

    /// Rank r of the (e,e,r) family.
    #[arg(long, global = true)]
    r: Option<u32>,

    /// Step cap for reversing and enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run the cube-condition completeness check on the presentation.
    CheckComplete {
        /// Skip triples known to hold by symmetry.
        #[arg(long)]
        pruned: bool,
    },
    /// Monoid word problem on two positive words.
    Eq { lhs: String, rhs: String },
    /// Group word problem on two signed words.
    GroupEq {
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// Greedy normal form of a positive word.
    Nf { word: String },
    /// Right lcm of two positive words, with residues.
    Lcm { lhs: String, rhs: String },
    /// Left gcd of two positive words.
    Gcd { lhs: String, rhs: String },
    /// Queries about the simples of the Garside element.
    Simples {
        #[command(subcommand)]
        what: SimplesCmd,
    },
    /// Poincaré polynomial coefficients (alias for `simples poincare`).
    Poincare,
    /// DOT rendering of the lattice of simples.
    LatticeDot,
    /// Project a signed word to the reflection group G(e,e,r).
    Project {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Order of G(e,e,r), computed by closure of the generator matrices.
    GroupOrder,
    /// Numerical duality statistics: atoms, |Δ|, conjugation order.
    Stats,
    /// Image of a type-B word under the embedding q1 -> τ, qj -> s_{j+1}.
    EmbedB { word: String },
    /// Circle of elements on two signed words.
    Circle {
        #[arg(allow_hyphen_values = true)]
        g1: String,
        #[arg(allow_hyphen_values = true)]
        g0: String,
        /// Search bound for the period (default 4e).
        #[arg(long)]
        bound: Option<usize>,
        /// Compute in the reflection group instead of the braid group.
        #[arg(long)]
        reflection: bool,
    },
    /// Right-reverse a signed word to positive·negative⁻¹.
    Reverse {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Print one rewrite per line: position, rule applied.
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Subcommand, Debug)]
enum SimplesCmd {
    Count,
    List,
    Poincare,
    Zeta,
}

/// Run the CLI on the given arguments (without the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code:
/// 0 on success, 1 on domain errors, 2 on usage errors.
pub fn run<W: Write, V: Write>(args: &[String], out: &mut W, err: &mut V) -> i32 {
    let argv = std::iter::once("eer".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{rendered}");
                0
            } else {
                let _ = write!(err, "{rendered}");
                2
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(RunError::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
        Err(RunError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

enum RunError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for RunError {
    fn from(e: Error) -> RunError {
        RunError::Domain(e)
    }
}

type RunResult = std::result::Result<(), RunError>;

fn family_params(cli: &Cli) -> std::result::Result<(u32, u32), RunError> {
    match (cli.e, cli.r) {
        (Some(e), Some(r)) => Ok((e, r)),
        _ => Err(RunError::Usage(
            "this command needs both --e <int> and --r <int>".into(),
        )),
    }
}

fn check_format(cli: &Cli, dot_ok: bool) -> std::result::Result<(), RunError> {
    if cli.format == Format::Dot && !dot_ok {
        return Err(RunError::Usage(
            "--format dot is only valid for lattice-dot".into(),
        ));
    }
    Ok(())
}

fn dispatch<W: Write>(cli: &Cli, out: &mut W) -> RunResult {
    check_format(cli, matches!(cli.command, Cmd::LatticeDot))?;
    let budget = cli.budget;
    match &cli.command {
        Cmd::CheckComplete { pruned } => {
            let (e, r) = family_params(cli)?;
            let gd = GarsideData::new(e, r)?;
            let report = check_completeness(gd.presentation(), budget, *pruned)?;
            let p = gd.presentation();
            emit(cli, out, |f| match f {
                Format::Text => match report.failing {
                    None => format!("pass ({} triples)\n", report.triples_checked),
                    Some((x, y, z)) => format!(
                        "fail at ({}, {}, {})\n",
                        p.word_to_string(&crate::Word::single(x)),
                        p.word_to_string(&crate::Word::single(y)),
                        p.word_to_string(&crate::Word::single(z)),
                    ),
                },
                Format::Json => {
                    let failing = report.failing.map(|(x, y, z)| {
                        vec![
                            p.word_to_string(&crate::Word::single(x)),
                            p.word_to_string(&crate::Word::single(y)),
                            p.word_to_string(&crate::Word::single(z)),
                        ]
                    });
                    json_line(json!({
                        "pass": report.pass,
                        "triples": report.triples_checked,
                        "failing": failing,
                    }))
                }
                Format::Dot => unreachable!(),
            })
        }
        Cmd::Eq { lhs, rhs } => {
            let (e, r) = family_params(cli)?;
            let gd = GarsideData::new(e, r)?;
            let p = gd.presentation();
            let u = p.parse_word(lhs)?;
            let v = p.parse_word(rhs)?;
            let equal = equal_monoid(p, &u, &v, budget)?;
            emit_bool(cli, out, equal)
        }
        Cmd::GroupEq { lhs, rhs } => {
            let (e, r) = family_params(cli)?;
            let gd = GarsideData::new(e, r)?;
            let p = gd.presentation();
            let u = p.parse_signed_word(lhs)?;
            let v = p.parse_signed_word(rhs)?;
            let equal = equal_group(p, &u, &v, budget)?;
            emit_bool(cli, out, equal)
        }
        Cmd::Nf { word } => {
            let (e, r) = family_params(cli)?;
            let gd = GarsideData::new(e, r)?;
            let p = gd.presentation();
            let w = p.parse_word(word)?;
            let nf = normal_form(&gd, &w, budget)?;
            emit(cli, out, |f| match f {
                Format::Text => {
                    let mut parts = Vec::new();
                    match nf.delta_power {
                        0 => {}
                        1 => parts.push("delta".to_string()),
                        k => parts.push(format!("delta^{k}")),
                    }
                    for factor in &nf.factors {
                        parts.push(p.word_to_string(factor));
                    }
                    if parts.is_empty() {
                        "1\n".to_string()
                    } else {
                        format!("{}\n", parts.join(" . "))
                    }
                }
                Format::Json => json_line(json!({
                    "delta_power": nf.delta_power,
                    "factors": nf.factors.iter().map(|w| p.word_to_string(w)).collect::<Vec<_>>(),
                })),
                Format::Dot => unreachable!(),
            })
        }
        Cmd::Lcm { lhs, rhs } => {
            let (e, r) = family_params(cli)?;
            let gd = GarsideData::new(e, r)?;
            let p = gd.presentation();
            let a = p.parse_word(lhs)?;
            let b = p.parse_word(rhs)?;
            let l = lcm_right(p, &a, &b, budget)?;
            emit(cli, out, |f| match f {
                Format::Text => format!(
                    "lcm: {}\nresidue-a: {}\nresidue-b: {}\n",
                    p.word_to_string(&l.lcm),
                    p.word_to_string(&l.residue_a),
                    p.word_to_string(&l.residue_b),
                ),
                Format::Json => json_line(json!({
                    "lcm": p.word_to_string(&l.lcm),
                    "residues": [p.word_to_string(&l.residue_a), p.word_to_string(&l.residue_b)],
                })),
                Format::Dot => unreachable!(),
            })
        }
        Cmd::Gcd { lhs, rhs } => {
            let (e, r) = family_params(cli)?;
            let gd = GarsideData::new(e, r)?;
            let p = gd.presentation();
            let a = p.parse_word(lhs)?;
            let b = p.parse_word(rhs)?;
            let g = gcd_left(p, &a, &b, budget)?;
            emit(cli, out, |f| match f {
                Format::Text => format!("{}\n", p.word_to_string(&g)),
                Format::Json => json_line(json!({ "gcd": p.word_to_string(&g) })),
                Format::Dot => unreachable!(),
            })
        }
        Cmd::Simples { what } => {
            let (e, r) = family_params(cli)?;
            run_simples(cli, out, e, r, what, budget)
        }
        Cmd::Poincare => {
            let (e, r) = family_params(cli)?;
            run_simples(cli, out, e, r, &SimplesCmd::Poincare, budget)
        }
        Cmd::LatticeDot => {
            let (e, r) = family_params(cli)?;
            let gd = GarsideData::new(e, r)?;
            let dot = lattice_dot(&gd, budget)?;
            let _ = write!(out, "{dot}");
            Ok(())
        }
        Cmd::Project { word } => {
            let (e, r) = family_params(cli)?;
            let gd = GarsideData::new(e, r)?;
            let p = gd.presentation();
            let w = p.parse_signed_word(word)?;
            let m = project(&w, e, r);
            emit(cli, out, |f| match f {
                Format::Text => format!("{m}\n"),
                Format::Json => json_line(json!({
                    "perm": m.perm().iter().map(|&x| x + 1).collect::<Vec<_>>(),
                    "exp": m.exps(),
                    "e": e,
                })),
                Format::Dot => unreachable!(),
            })
        }
        Cmd::GroupOrder => {
            let (e, r) = family_params(cli)?;
            let order = enumerate_group(e, r, budget)?.len();
            emit(cli, out, |f| match f {
                Format::Text => format!("{order}\n"),
                Format::Json => json_line(json!({ "order": order })),
                Format::Dot => unreachable!(),
            })
        }
        Cmd::Stats => {
            let (e, r) = family_params(cli)?;
            if e < 1 || r < 2 {
                return Err(RunError::Domain(Error::InvalidParameters(
                    "need e >= 1 and r >= 2".into(),
                )));
            }
            let s = duality_stats(e, r);
            emit(cli, out, |f| match f {
                Format::Text => format!(
                    "atoms={} delta_length={} conj_order={}\n",
                    s.atom_count, s.delta_length, s.conj_order
                ),
                Format::Json => json_line(json!({
                    "atoms": s.atom_count,
                    "delta_length": s.delta_length,
                    "conj_order": s.conj_order,
                })),
                Format::Dot => unreachable!(),
            })
        }
        Cmd::EmbedB { word } => {
            let (e, r) = family_params(cli)?;
            let gd = GarsideData::new(e, r)?;
            if r < 2 {
                return Err(RunError::Domain(Error::InvalidParameters(
                    "embedding needs r >= 2".into(),
                )));
            }
            let b = build_classical_b(r - 1)?;
            let w = b.parse_word(word)?;
            let image = psi_embed(&gd, &w);
            let p = gd.presentation();
            emit(cli, out, |f| match f {
                Format::Text => format!("{}\n", p.word_to_string(&image)),
                Format::Json => json_line(json!({ "word": p.word_to_string(&image) })),
                Format::Dot => unreachable!(),
            })
        }
        Cmd::Circle { g1, g0, bound, reflection } => {
            let (e, r) = family_params(cli)?;
            let gd = GarsideData::new(e, r)?;
            let p = gd.presentation();
            let bound = bound.unwrap_or(4 * e as usize);
            if *reflection {
                let model = ReflectionModel { e, r };
                let m1 = project(&p.parse_signed_word(g1)?, e, r);
                let m0 = project(&p.parse_signed_word(g0)?, e, r);
                let circle = circle_make(&model, &m1, &m0, bound)?;
                emit(cli, out, |f| match f {
                    Format::Text => {
                        let mut s = format!("cardinality: {}\n", circle.cardinality());
                        for (i, m) in circle.members.iter().enumerate() {
                            s.push_str(&format!("g{i}: {m}\n"));
                        }
                        s
                    }
                    Format::Json => json_line(json!({
                        "cardinality": circle.cardinality(),
                        "members": circle.members.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    })),
                    Format::Dot => unreachable!(),
                })
            } else {
                let model = BraidModel { presentation: p, budget };
                let w1 = p.parse_signed_word(g1)?;
                let w0 = p.parse_signed_word(g0)?;
                let circle = circle_make(&model, &w1, &w0, bound)?;
                // Render each member reduced to positive·negative⁻¹ form.
                let mut rendered = Vec::with_capacity(circle.members.len());
                for m in &circle.members {
                    let red = crate::reversing::right_reverse(p, m, budget)?;
                    let mut sw = SignedWord::positive(&red.positive);
                    sw = sw.concat(&SignedWord::inverse_of(&red.negative));
                    rendered.push(p.signed_to_string(&sw));
                }
                emit(cli, out, |f| match f {
                    Format::Text => {
                        let mut s = format!("cardinality: {}\n", circle.cardinality());
                        for (i, m) in rendered.iter().enumerate() {
                            s.push_str(&format!("g{i}: {m}\n"));
                        }
                        s
                    }
                    Format::Json => json_line(json!({
                        "cardinality": circle.cardinality(),
                        "members": rendered,
                    })),
                    Format::Dot => unreachable!(),
                })
            }
        }
        Cmd::Reverse { word, trace } => {
            let (e, r) = family_params(cli)?;
            let gd = GarsideData::new(e, r)?;
            let p = gd.presentation();
            let w = p.parse_signed_word(word)?;
            let (result, steps) = right_reverse_traced(p, &w, budget)?;
            let show = |step: &ReverseStep| match step {
                ReverseStep::Cancel { position, x } => format!(
                    "{position} cancel {}",
                    p.word_to_string(&crate::Word::single(*x))
                ),
                ReverseStep::Complement { position, x, y } => format!(
                    "{position} complement {} {}",
                    p.word_to_string(&crate::Word::single(*x)),
                    p.word_to_string(&crate::Word::single(*y))
                ),
            };
            emit(cli, out, |f| match f {
                Format::Text => {
                    let mut s = String::new();
                    if *trace {
                        for step in &steps {
                            s.push_str(&show(step));
                            s.push('\n');
                        }
                    }
                    s.push_str(&format!(
                        "positive: {}\nnegative: {}\nsteps: {}\n",
                        p.word_to_string(&result.positive),
                        p.word_to_string(&result.negative),
                        result.steps
                    ));
                    s
                }
                Format::Json => json_line(json!({
                    "positive": p.word_to_string(&result.positive),
                    "negative": p.word_to_string(&result.negative),
                    "steps": result.steps,
                    "trace": if *trace {
                        Some(steps.iter().map(show).collect::<Vec<_>>())
                    } else {
                        None
                    },
                })),
                Format::Dot => unreachable!(),
            })
        }
    }
}

fn run_simples<W: Write>(
    cli: &Cli,
    out: &mut W,
    e: u32,
    r: u32,
    what: &SimplesCmd,
    budget: u64,
) -> RunResult {
    let gd = GarsideData::new(e, r)?;
    let p = gd.presentation();
    match what {
        SimplesCmd::Count => {
            let count = crate::combinatorics::simple_count(e, r);
            emit(cli, out, |f| match f {
                Format::Text => format!("{count}\n"),
                Format::Json => json_line(json!({ "count": count.to_string() })),
                Format::Dot => unreachable!(),
            })
        }
        SimplesCmd::List => {
            let simples = simples_closed(&gd);
            emit(cli, out, |f| match f {
                Format::Text => {
                    let mut s = String::new();
                    for simple in &simples {
                        let tuple: Vec<String> =
                            simple.tuple.iter().map(|w| p.word_to_string(w)).collect();
                        s.push_str(&format!(
                            "{}\ttuple({})\n",
                            p.word_to_string(&simple.word),
                            tuple.join("|")
                        ));
                    }
                    s
                }
                Format::Json => json_line(json!({
                    "simples": simples.iter().map(|simple| json!({
                        "word": p.word_to_string(&simple.word),
                        "tuple": simple.tuple.iter().map(|w| p.word_to_string(w)).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                })),
                Format::Dot => unreachable!(),
            })
        }
        SimplesCmd::Poincare => {
            let poly = poincare_closed(e, r);
            emit(cli, out, |f| match f {
                Format::Text => {
                    let coeffs: Vec<String> =
                        poly.coeffs().iter().map(|c| c.to_string()).collect();
                    format!("{}\n", coeffs.join(" "))
                }
                Format::Json => json_line(json!({
                    "coefficients": poly.coeffs(),
                    "polynomial": poly.to_string(),
                })),
                Format::Dot => unreachable!(),
            })
        }
        SimplesCmd::Zeta => {
            let rank = r * (r - 1);
            let values = zeta_values(&gd, rank, budget)?;
            let poly = zeta_polynomial(&gd, budget)?;
            let (numerators, denominator) = poly.common_denominator();
            emit(cli, out, |f| match f {
                Format::Text => {
                    let vals: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                    let nums: Vec<String> = numerators.iter().map(|v| v.to_string()).collect();
                    format!(
                        "values: {}\npolynomial: {}\nnumerators: {}\ndenominator: {}\n",
                        vals.join(" "),
                        poly,
                        nums.join(" "),
                        denominator
                    )
                }
                Format::Json => json_line(json!({
                    "values": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    "polynomial": poly.to_string(),
                    "numerators": numerators.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    "denominator": denominator.to_string(),
                })),
                Format::Dot => unreachable!(),
            })
        }
    }
}

fn emit<W: Write, F: Fn(Format) -> String>(cli: &Cli, out: &mut W, render: F) -> RunResult {
    let _ = write!(out, "{}", render(cli.format));
    Ok(())
}

fn emit_bool<W: Write>(cli: &Cli, out: &mut W, value: bool) -> RunResult {
    emit(cli, out, |f| match f {
        Format::Text => format!("{value}\n"),
        Format::Json => json_line(json!({ "equal": value })),
        Format::Dot => unreachable!(),
    })
}

fn json_line(value: serde_json::Value) -> String {
    format!("{value}\n")
}
