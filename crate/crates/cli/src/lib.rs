//! Command-line front end: argument parsing, dispatch to `weakop-core` and
//! deterministic text output.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use weakop_core::arrows::{arrow_oe_to_ou, normalize_object, typecheck};
use weakop_core::polytopes::{emit, parse_labels, parse_rename, Format};
use weakop_core::syntax::{parse_raw_arrow, parse_raw_term};
use weakop_core::terms::build;
use weakop_core::{
    arrow_eq, strictify, term_eq, translate, Arrow, Error, Flavor, GeneratorSignature,
    NominalArity, Skeleton, Term, TreeInput,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SOUNDNESS: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "weakop",
    version,
    about = "Operad terms, weak arrows and their coherence"
)]
#[command(group(ArgGroup::new("flavor").args(["o", "oe", "ou"])))]
pub struct Cli {
    /// Generator signature file, one `name arity` pair per line.
    #[arg(long, global = true, value_name = "FILE")]
    pub sig: Option<PathBuf>,

    /// Extra generator as `name:arity`; may be repeated.
    #[arg(long = "gen", global = true, value_name = "NAME:ARITY")]
    pub gens: Vec<String>,

    /// Terms with numeric insertion `(g o[n] f)`.
    #[arg(long, global = true)]
    pub o: bool,

    /// Terms with address-indexed insertion `(g o[a] f)`.
    #[arg(long, global = true)]
    pub oe: bool,

    /// Diversified terms `(a*x o b*y)`.
    #[arg(long, global = true)]
    pub ou: bool,

    /// Work in the calculus without the unit.
    #[arg(long, global = true)]
    pub non_unitary: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the arity (O), source (Oe) or source and target (Ou) of a term.
    Sig { term: String },
    /// Translate a term into another flavor.
    Translate {
        #[arg(long, value_enum)]
        to: FlavorArg,
        term: String,
    },
    /// Decide equality of two terms.
    Eq { left: String, right: String },
    /// Typecheck an arrow and print its type.
    ArrowCheck { arrow: String },
    /// Decide equality of two arrows.
    ArrowEq { left: String, right: String },
    /// Print the normal form of an object and a directed arrow reaching it.
    Normalize { term: String },
    /// Print the transposition sequence of the strictified arrow.
    Strictify { arrow: String },
    /// Emit the skeleton of the polytope attached to a labelled tree.
    Polytope {
        /// Leaves of the tree as a nominal arity, e.g. `{1-1,1-2,2}`.
        #[arg(long, value_name = "FILE")]
        leaves: PathBuf,
        /// `address generator` per inner vertex.
        #[arg(long, value_name = "FILE")]
        labels: PathBuf,
        /// `address name` per inner vertex; defaults to the addresses.
        #[arg(long, value_name = "FILE")]
        rename: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Dot)]
        format: FormatArg,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FlavorArg {
    O,
    Oe,
    Ou,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::O => Flavor::O,
            FlavorArg::Oe => Flavor::Oe,
            FlavorArg::Ou => Flavor::Ou,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Dot,
    Json,
}

/// Result of one invocation: exit code and the two output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn answer(yes: bool) -> Self {
        Outcome {
            code: if yes { EXIT_OK } else { EXIT_FALSE },
            stdout: format!("{yes}\n"),
            stderr: String::new(),
        }
    }

    fn fail(code: i32, msg: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Core(Error::Soundness(_)) => EXIT_SOUNDNESS,
            _ => EXIT_INPUT,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(out) => out,
        Err(e) => Outcome::fail(e.code(), e.to_string()),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn signature(cli: &Cli) -> Result<GeneratorSignature, CliError> {
    let mut sig = match &cli.sig {
        Some(p) => GeneratorSignature::parse(&read(p)?)?,
        None => GeneratorSignature::new(),
    };
    for g in &cli.gens {
        let (name, arity) = g
            .split_once(':')
            .and_then(|(n, a)| Some((n, a.parse::<u32>().ok()?)))
            .ok_or_else(|| CliError::Usage(format!("--gen expects `name:arity`, got `{g}`")))?;
        sig.insert(name, arity)?;
    }
    Ok(sig)
}

fn flavor(cli: &Cli) -> Result<Flavor, CliError> {
    match (cli.o, cli.oe, cli.ou) {
        (true, _, _) => Ok(Flavor::O),
        (_, true, _) => Ok(Flavor::Oe),
        (_, _, true) => Ok(Flavor::Ou),
        _ => Err(CliError::Usage(
            "one of --o, --oe, --ou is required".to_string(),
        )),
    }
}

struct Ctx {
    sig: GeneratorSignature,
    flavor: Flavor,
    unitary: bool,
}

impl Ctx {
    fn new(cli: &Cli) -> Result<Self, CliError> {
        Ok(Ctx {
            sig: signature(cli)?,
            flavor: flavor(cli)?,
            unitary: !cli.non_unitary,
        })
    }

    fn term(&self, text: &str) -> Result<Term, CliError> {
        let raw = parse_raw_term(text, self.flavor)?;
        Ok(build(&self.sig, self.flavor, self.unitary, &raw)?)
    }

    fn arrow(&self, text: &str) -> Result<Arrow, CliError> {
        if self.flavor == Flavor::O {
            return Err(CliError::Usage(
                "arrows are written over --oe or --ou terms".to_string(),
            ));
        }
        let raw = parse_raw_arrow(text, self.flavor)?;
        Ok(typecheck(&raw, &self.sig, self.flavor, self.unitary)?)
    }

    fn ou_arrow(&self, text: &str) -> Result<Arrow, CliError> {
        let u = self.arrow(text)?;
        Ok(match u.flavor() {
            Flavor::Oe => arrow_oe_to_ou(&u)?,
            _ => u,
        })
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    if let Command::Polytope {
        leaves,
        labels,
        rename,
        format,
    } = &cli.command
    {
        let sig = signature(cli)?;
        let leaves: NominalArity = read(leaves)?.trim().parse()?;
        let labels = parse_labels(&read(labels)?)?;
        let rename = match rename {
            Some(p) => parse_rename(&read(p)?)?,
            None => Default::default(),
        };
        let input = TreeInput::new(&sig, leaves, &labels, &rename)?;
        let format = match format {
            FormatArg::Dot => Format::Dot,
            FormatArg::Json => Format::Json,
        };
        return Ok(Outcome::ok(emit(&Skeleton::build(&input), format)));
    }
    let ctx = Ctx::new(cli)?;
    Ok(match &cli.command {
        Command::Sig { term } => Outcome::ok(format!("{}\n", ctx.term(term)?.signature())),
        Command::Translate { to, term } => {
            Outcome::ok(format!("{}\n", translate(&ctx.term(term)?, (*to).into())))
        }
        Command::Eq { left, right } => {
            Outcome::answer(term_eq(&ctx.term(left)?, &ctx.term(right)?)?)
        }
        Command::ArrowCheck { arrow } => {
            let u = ctx.arrow(arrow)?;
            Outcome::ok(format!("{} : {} -> {}\n", u, u.source(), u.target()))
        }
        Command::ArrowEq { left, right } => {
            Outcome::answer(arrow_eq(&ctx.arrow(left)?, &ctx.arrow(right)?)?)
        }
        Command::Normalize { term } => {
            let f = ctx.term(term)?;
            let f = match f.flavor() {
                Flavor::Ou => f,
                _ => translate(&f, Flavor::Ou),
            };
            let (n, u) = normalize_object(&f)?;
            Outcome::ok(format!("{n}\n{u}\n"))
        }
        Command::Strictify { arrow } => {
            Outcome::ok(format!("{}\n", strictify(&ctx.ou_arrow(arrow)?)?))
        }
        Command::Polytope { .. } => unreachable!("handled above"),
    })
}
