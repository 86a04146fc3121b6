//! Command definitions and their implementations.

use std::fs;
use std::io::Read;
use std::path::PathBuf;

use braidrep_core::geom::{
    self, artin_dynamics_from, circle_configuration, cylinder_events, jittered_circle, perturb, psi_d_events,
    psi_events, q_kl, random_zero_linking_braid, realize_with_slots, zero_infinity_frame, Conventions, CutRay,
    CylinderEventKind, GeomBraid, NeRule, PsiVariant, Rotation, RoutingScheme,
};
use braidrep_core::homs::{pipeline_matrix, pipeline_word, power_map, project, PipelineConfig, Purity};
use braidrep_core::relcheck::{self, CocycleOptions, Report};
use braidrep_core::rep::{self, represent, RepId, RepKind};
use braidrep_core::word::{bigelow5, parse_word_with, CommutatorConvention, ParseOptions};
use braidrep_core::{sample, Assignment, GroupId, Matrix, Word};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::format;
use crate::svg::word_svg;

#[derive(Debug, Parser)]
#[command(name = "braidrep", version, about = "Exact representations of pure braid groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Commutator convention for `comm(x; y)` and BIGELOW5.
    #[arg(long, global = true, value_enum, default_value_t = Commutator::InverseLast)]
    pub commutator: Commutator,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Commutator {
    /// x y x^-1 y^-1
    InverseLast,
    /// x^-1 y^-1 x y
    InverseFirst,
}

impl From<Commutator> for CommutatorConvention {
    fn from(c: Commutator) -> Self {
        match c {
            Commutator::InverseLast => CommutatorConvention::InverseLast,
            Commutator::InverseFirst => CommutatorConvention::InverseFirst,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a word and print its canonical form.
    Parse {
        #[arg(long)]
        group: String,
        #[arg(long)]
        json: bool,
        word: String,
    },
    /// Matrix of a word under a representation or pipeline.
    Rep(RepArgs),
    /// Word-level images under the projection and the power map.
    Map(MapArgs),
    /// Verify relation suites, the projection cocycle or the geometric oracle.
    Check(CheckArgs),
    /// Read a trajectory file and extract words, events or matrices.
    Geom(GeomArgs),
    /// Write trajectory files.
    Synth(SynthArgs),
    /// The Bigelow element through the projection pipeline, next to Burau.
    Example,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Pipeline {
    /// rho(f_d(p_k(w))) for a pure word in B_n.
    PkFd,
    /// rho_tilde(psi(q_kl(w))) via trajectories from a jittered circle.
    PsiQ,
    Rho,
    RhoTilde,
    BurauReduced,
    BurauUnreduced,
}

#[derive(Debug, Args)]
pub struct RepArgs {
    #[arg(long, value_enum)]
    pub pipeline: Pipeline,
    #[arg(long)]
    pub n: Option<usize>,
    /// Group of the word for rho, rho-tilde and Burau (default B<n> for Burau).
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    /// Degree of the power map; for psi-q, selects psi_d.
    #[arg(long)]
    pub d: Option<u32>,
    /// Substitute values, e.g. `t=-1,s=1` (unassigned variables are 1).
    #[arg(long)]
    pub eval: Option<String>,
    /// Translate non-pure words letter by letter.
    #[arg(long)]
    pub bypass_purity: bool,
    #[arg(long)]
    pub json: bool,
    pub word: String,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub d: u32,
    #[arg(long)]
    pub bypass_purity: bool,
    #[arg(long)]
    pub json: bool,
    pub word: String,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub rep: Option<String>,
    #[arg(long)]
    pub group: Option<String>,
    /// Check the projection cocycle and multiplicativity instead.
    #[arg(long)]
    pub cocycle: bool,
    /// Compare the trajectory oracle with the algebra on random pure words.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub d: u32,
    /// Random pairs (cocycle) or words (oracle).
    #[arg(long, default_value_t = 10)]
    pub pairs: usize,
    /// Pure generators per random word.
    #[arg(long, default_value_t = 8)]
    pub factors: usize,
    /// Worker threads for relation checks.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scheme {
    RouteAndReturn,
    SwapInPlace,
}

impl From<Scheme> for RoutingScheme {
    fn from(s: Scheme) -> Self {
        match s {
            Scheme::RouteAndReturn => RoutingScheme::RouteAndReturn,
            Scheme::SwapInPlace => RoutingScheme::SwapInPlace,
        }
    }
}

#[derive(Debug, Args)]
pub struct ConventionArgs {
    /// Realize s_i^{+1} as a clockwise half-turn.
    #[arg(long)]
    pub clockwise: bool,
    /// In the projection, the strand nearer to the projection strand passes over.
    #[arg(long)]
    pub over_nearer: bool,
    /// Direction of the cut ray in radians (default: outward, slightly tilted).
    #[arg(long, allow_hyphen_values = true)]
    pub cut_angle: Option<f64>,
    /// NE strand is the one moving upwards in normalized coordinates.
    #[arg(long)]
    pub ne_positive: bool,
}

impl ConventionArgs {
    fn conventions(&self) -> Conventions {
        Conventions {
            positive_sigma: if self.clockwise {
                Rotation::Clockwise
            } else {
                Rotation::Counterclockwise
            },
            over_is_farther: !self.over_nearer,
            cut: self.cut_angle.map_or(CutRay::Outward, CutRay::Angle),
            ne_rule: if self.ne_positive {
                NeRule::PositiveImaginary
            } else {
                NeRule::NegativeImaginary
            },
        }
    }
}

#[derive(Debug, Args)]
pub struct GeomArgs {
    /// Trajectory JSON file, `-` for standard input.
    pub input: PathBuf,
    /// Cylinder braid p_k (with --d, the virtual cylinder braid f_d(p_k)).
    #[arg(long)]
    pub project_pk: bool,
    /// Flat-virtual braid psi(q_kl) (with --d >= 2, psi_d).
    #[arg(long)]
    pub psi: bool,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long)]
    pub d: Option<u32>,
    /// Print the matrix (rho or rho_tilde) instead of the word.
    #[arg(long)]
    pub emit_matrix: bool,
    /// List the crossing events.
    #[arg(long)]
    pub events: bool,
    #[arg(long)]
    pub eval: Option<String>,
    #[arg(long, value_enum, default_value_t = Scheme::RouteAndReturn)]
    pub scheme: Scheme,
    /// Jitter interior breakpoints by at most this much (seeded).
    #[arg(long)]
    pub perturb: Option<f64>,
    /// Write a diagram of the extracted word.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub conventions: ConventionArgs,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    /// Group of the word, e.g. B5.
    #[arg(long)]
    pub group: Option<String>,
    /// Start from a seeded jittered circle instead of the regular one.
    #[arg(long)]
    pub jitter: bool,
    /// A seeded product of commutators of pure generators on --n strands.
    #[arg(long)]
    pub zero_linking: bool,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub commutators: usize,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub clockwise: bool,
    pub word: Option<String>,
}

/// What a command prints and its exit status.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let opts = ParseOptions {
        commutator: cli.commutator.into(),
    };
    match &cli.command {
        Command::Parse { group, json, word } => {
            let w = parse_word_with(word, group.parse()?, &opts)?;
            Ok(Outcome::ok(if *json {
                format::word_json(&w).to_string()
            } else {
                w.to_string()
            }))
        }
        Command::Rep(a) => rep_cmd(a, &opts, cli.seed).map(Outcome::ok),
        Command::Map(a) => map_cmd(a, &opts).map(Outcome::ok),
        Command::Check(a) => check_cmd(a, cli.seed),
        Command::Geom(a) => geom_cmd(a, cli.seed).map(Outcome::ok),
        Command::Synth(a) => synth_cmd(a, &opts, cli.seed).map(Outcome::ok),
        Command::Example => example_cmd(cli.commutator.into()).map(Outcome::ok),
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("--{flag} is required here")))
}

fn braid_group(n: Option<usize>) -> Result<GroupId, CliError> {
    Ok(GroupId::braid(need(n, "n")?)?)
}

fn render_matrix(m: &Matrix, eval: Option<&str>, json: bool) -> Result<String, CliError> {
    Ok(match eval {
        Some(text) => {
            let a: Assignment = text.parse()?;
            let e = m.eval(&a);
            if json {
                format::rational_matrix_json(&e).to_string()
            } else {
                e.to_string()
            }
        }
        None if json => format::matrix_json(m).to_string(),
        None => m.to_string(),
    })
}

fn rep_cmd(a: &RepArgs, opts: &ParseOptions, seed: u64) -> Result<String, CliError> {
    let m = match a.pipeline {
        Pipeline::PkFd => {
            let group = braid_group(a.n)?;
            let w = parse_word_with(&a.word, group, opts)?;
            let cfg = PipelineConfig::new(group.strands(), need(a.k, "k")?, a.d.unwrap_or(1))?;
            if a.bypass_purity {
                rep::rho(&pipeline_word(&w, &cfg, Purity::Bypass)?)?
            } else {
                pipeline_matrix(&w, &cfg)?
            }
        }
        Pipeline::PsiQ => {
            let group = braid_group(a.n)?;
            let w = parse_word_with(&a.word, group, opts)?;
            if !w.is_pure() {
                return Err(braidrep_core::Error::NotPure.into());
            }
            let start = jittered_circle(group.strands(), &mut sample::rng(seed));
            let conv = Conventions::default();
            let g = artin_dynamics_from(&start, &w, &conv)?;
            let variant = match a.d {
                None => PsiVariant::Psi,
                Some(d) => PsiVariant::PsiD(d),
            };
            geom::psi_matrix(
                &g,
                need(a.k, "k")?,
                need(a.l, "l")?,
                variant,
                &conv,
                RoutingScheme::default(),
            )?
        }
        other => {
            let which = match other {
                Pipeline::Rho => RepKind::Rho,
                Pipeline::RhoTilde => RepKind::RhoTilde,
                Pipeline::BurauReduced => RepKind::BurauReduced,
                _ => RepKind::BurauUnreduced,
            };
            let group = match (&a.group, which) {
                (Some(g), _) => g.parse()?,
                (None, RepKind::BurauReduced | RepKind::BurauUnreduced) => braid_group(a.n)?,
                (None, _) => return Err(CliError::Usage("--group is required for rho and rho-tilde".into())),
            };
            RepId::for_group(which, group)?;
            represent(which, &parse_word_with(&a.word, group, opts)?)?
        }
    };
    render_matrix(&m, a.eval.as_deref(), a.json)
}

fn map_cmd(a: &MapArgs, opts: &ParseOptions) -> Result<String, CliError> {
    let group = GroupId::braid(a.n)?;
    let w = parse_word_with(&a.word, group, opts)?;
    let purity = if a.bypass_purity {
        Purity::Bypass
    } else {
        Purity::Require
    };
    PipelineConfig::new(a.n, a.k, a.d)?;
    let cyl = project(&w, a.k, purity)?;
    let virt = power_map(&cyl, a.d)?;
    Ok(if a.json {
        json!({ "cylinder": format::word_json(&cyl), "virtualCylinder": format::word_json(&virt) }).to_string()
    } else {
        format!("p_k: {cyl}\nf_d: {virt}")
    })
}

fn check_cmd(a: &CheckArgs, seed: u64) -> Result<Outcome, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs.max(1))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let report = if a.cocycle || a.oracle {
        let cfg = PipelineConfig::new(need(a.n, "n")?, need(a.k, "k")?, a.d)?;
        if a.cocycle {
            let opts = CocycleOptions {
                pairs: a.pairs,
                factors: a.factors,
                seed,
            };
            relcheck::verify_pk_cocycle(&cfg, &opts)?
        } else {
            let group = GroupId::braid(cfg.n())?;
            let mut rng = sample::rng(seed);
            let words: Vec<Word> = (0..a.pairs)
                .map(|_| sample::random_pure_word(group, a.factors, &mut rng))
                .collect::<Result<_, _>>()?;
            let conv = Conventions::default();
            let outcomes = pool.install(|| {
                words
                    .par_iter()
                    .map(|w| relcheck::oracle_outcome(w, &cfg, &conv))
                    .collect::<Result<Vec<_>, _>>()
            })?;
            Report::from_outcomes(outcomes)
        }
    } else {
        let which: RepKind = need(a.rep.as_deref(), "rep")?.parse()?;
        let group: GroupId = need(a.group.as_deref(), "group")?.parse()?;
        RepId::for_group(which, group)?;
        let suite = braidrep_core::word::relation_suite(group);
        let outcomes = pool.install(|| {
            suite
                .par_iter()
                .map(|(l, r)| relcheck::check_relation(which, l, r))
                .collect::<Result<Vec<_>, _>>()
        })?;
        Report::from_outcomes(outcomes)
    };
    let stdout = if a.json {
        format::report_json(&report).to_string()
    } else {
        format::report_text(&report)
    };
    Ok(Outcome {
        stdout,
        code: if report.passed() { 0 } else { 1 },
    })
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn geom_cmd(a: &GeomArgs, seed: u64) -> Result<String, CliError> {
    let mut g = format::geom_from_json(&read_input(&a.input)?)?;
    if let Some(mag) = a.perturb {
        g = perturb(&g, seed, mag)?;
    }
    let conv = a.conventions.conventions();
    let (word, events, matrix) = match (a.project_pk, a.psi) {
        (true, false) => {
            let k = need(a.k, "k")?;
            let d = a.d.unwrap_or(1);
            let evs = cylinder_events(&g, k, d, &conv)?;
            let group = if d == 1 {
                GroupId::cylinder(g.n() - 1)?
            } else {
                GroupId::virtual_cylinder(g.n() - 1)?
            };
            let word = Word::new(group, evs.iter().map(|e| e.letter).collect())?;
            let events: Vec<Value> = evs.iter().map(cylinder_event_json).collect();
            let matrix = rep::rho(&word)?;
            (word, events, matrix)
        }
        (false, true) => {
            let (k, l) = (need(a.k, "k")?, need(a.l, "l")?);
            let m = g.n().saturating_sub(2);
            let (evs, group) = match a.d {
                None => (psi_events(&q_kl(&g, k, l)?, &conv)?, GroupId::flat_virtual(m, false)?),
                Some(d) => (
                    psi_d_events(&zero_infinity_frame(&g, k, l)?, d, &conv)?,
                    GroupId::flat_virtual(m, d > 2)?,
                ),
            };
            let (word, slotted) = realize_with_slots(&evs, group, a.scheme.into())?;
            let events = slotted.iter().map(format::event_json).collect();
            let matrix = rep::rho_tilde(&word)?;
            (word, events, matrix)
        }
        _ => return Err(CliError::Usage("choose exactly one of --project-pk and --psi".into())),
    };
    if let Some(path) = &a.svg {
        fs::write(path, word_svg(&word, &word.to_string()))?;
    }
    if a.events {
        return Ok(if a.json {
            Value::Array(events).to_string()
        } else {
            events.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("\n")
        });
    }
    if a.emit_matrix {
        return render_matrix(&matrix, a.eval.as_deref(), a.json);
    }
    Ok(if a.json {
        format::word_json(&word).to_string()
    } else {
        word.to_string()
    })
}

fn cylinder_event_json(e: &geom::CylinderEvent) -> Value {
    let kind = match e.kind {
        CylinderEventKind::Crossing { over, under } => json!({"crossing": {"over": over + 1, "under": under + 1}}),
        CylinderEventKind::Virtual { pair } => json!({"virtual": [pair.0 + 1, pair.1 + 1]}),
        CylinderEventKind::Cut { strand } => json!({"cut": strand + 1}),
    };
    json!({ "time": e.time, "kind": kind, "letter": e.letter.to_string() })
}

fn synth_cmd(a: &SynthArgs, opts: &ParseOptions, seed: u64) -> Result<String, CliError> {
    let g: GeomBraid = if a.zero_linking {
        random_zero_linking_braid(need(a.n, "n")?, a.commutators, seed)?.1
    } else {
        let group: GroupId = match (&a.group, a.n) {
            (Some(g), _) => g.parse()?,
            (None, n) => braid_group(n)?,
        };
        let text = a
            .word
            .as_deref()
            .ok_or_else(|| CliError::Usage("a word is required unless --zero-linking".into()))?;
        let w = parse_word_with(text, group, opts)?;
        let start = if a.jitter {
            jittered_circle(group.strands(), &mut sample::rng(seed))
        } else {
            circle_configuration(group.strands())
        };
        let conv = Conventions {
            positive_sigma: if a.clockwise {
                Rotation::Clockwise
            } else {
                Rotation::Counterclockwise
            },
            ..Conventions::default()
        };
        artin_dynamics_from(&start, &w, &conv)?
    };
    let text = format::geom_json(&g).to_string();
    match &a.output {
        Some(path) => {
            fs::write(path, &text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn example_cmd(conv: CommutatorConvention) -> Result<String, CliError> {
    let b5 = GroupId::braid(5)?;
    let w = bigelow5(b5, conv)?;
    let cfg = PipelineConfig::new(5, 1, 2)?;
    let at: Assignment = "t=-1,s=1".parse()?;
    let m = pipeline_matrix(&w, &cfg)?.eval(&at);
    let burau = rep::burau_reduced(&w)?;
    Ok(format!(
        "BIGELOW5 = {w}\n({} letters, pure: {})\n\nrho(f_2(p_1(BIGELOW5))) at t=-1, s=1:\n{m}\n\n\
         reduced Burau image is the identity: {}",
        w.len(),
        w.is_pure(),
        burau.is_identity()
    ))
}
