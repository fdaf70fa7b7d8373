use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use richardson_core::export::{seed_to_dot, seed_to_json};
use richardson_core::harness::{verify, Case, VerifyConfig, CHECKS};
use richardson_core::minors::rng;
use richardson_core::render::{render, Annotation};
use richardson_core::{
    component_keys, eval_minor, pds, skew_shape, ExactMatrix, IndexSet, IngermansonSeed, LeclercSeed, MinorIndex,
    Permutation, ReducedWord, Seed, WiringDiagram,
};

#[derive(Parser)]
#[command(name = "richardson", version, about = "Cluster seeds for type A open Richardson varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Greedy subexpression for v inside a reduced word.
    Pds {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Draw the wiring diagram.
    Diagram {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Ascii)]
        format: DiagramFormat,
        #[arg(long, value_enum, default_value_t = AnnotationArg::Labels)]
        annotate: AnnotationArg,
    },
    /// Cluster variables and quiver of one construction.
    Seed {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, value_enum, default_value_t = ConstructionArg::Ingermanson)]
        construction: ConstructionArg,
        #[arg(long, value_enum, default_value_t = SeedFormat::Json)]
        format: SeedFormat,
    },
    /// The quiver alone.
    Quiver {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, value_enum, default_value_t = ConstructionArg::Ingermanson)]
        construction: ConstructionArg,
        #[arg(long, value_enum, default_value_t = SeedFormat::Text)]
        format: SeedFormat,
    },
    /// Evaluate a minor, its reduced form and its factors on a unitriangular matrix.
    EvalMinor {
        #[arg(long)]
        n: usize,
        /// Comma-separated row indices.
        #[arg(long, value_delimiter = ',')]
        rows: Vec<usize>,
        /// Comma-separated column indices.
        #[arg(long, value_delimiter = ',')]
        cols: Vec<usize>,
        /// Rows separated by `;`, entries by `,`. Random unitriangular if absent.
        #[arg(long)]
        matrix: Option<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Run the verification checks and print a JSON report.
    Verify {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Every case of every size up to n.
        #[arg(long)]
        exhaustive: bool,
        /// Number of sampled cases of size n when not exhaustive.
        #[arg(long, default_value_t = 200)]
        sample: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Comma-separated check names; all checks when absent.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        checks: Option<Vec<String>>,
        /// Restrict to one permutation (with --word).
        #[arg(long)]
        v: Option<String>,
        #[arg(long, value_delimiter = ',')]
        word: Option<Vec<usize>>,
        /// Include wall time per check.
        #[arg(long)]
        timing: bool,
        /// List the registered checks and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args)]
struct CaseArgs {
    /// Size of the permutations; inferred from --v or --word when absent.
    #[arg(long)]
    n: Option<usize>,
    /// One-line notation without separators, e.g. 2134. Identity when absent.
    #[arg(long)]
    v: Option<String>,
    /// Comma-separated letters of a reduced word.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    word: Vec<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiagramFormat {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum AnnotationArg {
    Labels,
    Monomials,
    Shapes,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructionArg {
    Ingermanson,
    Leclerc,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeedFormat {
    Text,
    Json,
    Dot,
}

/// Bad input, reported with exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

impl CaseArgs {
    fn case(&self) -> Result<Case, Usage> {
        let v = self.v.as_deref().map(Permutation::from_digits).transpose()?;
        let n = self
            .n
            .or(v.as_ref().map(Permutation::n))
            .or(self.word.iter().max().map(|m| m + 1))
            .ok_or_else(|| Usage("give --n, --v or --word".into()))?;
        let v = v.unwrap_or_else(|| Permutation::identity(n));
        if v.n() != n {
            return Err(Usage(format!("--v has size {} but n is {n}", v.n())));
        }
        Ok(Case { v, word: ReducedWord::new(n, self.word.clone())? })
    }

    fn diagram(&self) -> Result<WiringDiagram, Usage> {
        Ok(self.case()?.diagram()?)
    }
}

fn build_seed(d: &WiringDiagram, c: ConstructionArg) -> Result<Seed, Usage> {
    Ok(match c {
        ConstructionArg::Ingermanson => IngermansonSeed::new(d)?.seed,
        ConstructionArg::Leclerc => LeclercSeed::new(d)?.seed,
    })
}

fn seed_text(seed: &Seed, with_variables: bool) -> String {
    let mut out = String::new();
    if with_variables {
        for x in &seed.variables {
            let tag = if x.frozen { "frozen" } else { "mutable" };
            out.push_str(&format!("{} {tag} {} = {}\n", x.label, x.minor, x.monomial));
        }
    }
    for (&(a, b), &k) in seed.quiver.arrows() {
        out.push_str(&format!("{a} -> {b}{}\n", if k > 1 { format!(" x{k}") } else { String::new() }));
    }
    out
}

fn print_seed(case: &CaseArgs, c: ConstructionArg, format: SeedFormat, with_variables: bool) -> Result<(), Usage> {
    let seed = build_seed(&case.diagram()?, c)?;
    match format {
        SeedFormat::Json => println!("{}", seed_to_json(&seed)),
        SeedFormat::Dot => print!("{}", seed_to_dot(&seed)),
        SeedFormat::Text => print!("{}", seed_text(&seed, with_variables)),
    }
    Ok(())
}

fn parse_matrix(s: &str) -> Result<ExactMatrix, Usage> {
    let rows: Vec<Vec<i64>> = s
        .split(';')
        .map(|r| r.split(',').map(|x| x.trim().parse::<i64>()).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    Ok(ExactMatrix::from_integers(&rows)?)
}

fn run(cli: Cli) -> Result<bool, Usage> {
    match cli.command {
        Command::Pds { case, format } => {
            let c = case.case()?;
            let mask = pds(&c.v, &c.word)?;
            match format {
                TextOrJson::Text => {
                    println!("mask {mask}");
                    println!("hollow {:?}", mask.hollow_positions());
                    println!("solid {:?}", mask.solid_positions());
                }
                TextOrJson::Json => println!(
                    "{}",
                    json!({"mask": mask.to_string(), "hollow": mask.hollow_positions(), "solid": mask.solid_positions()})
                ),
            }
        }
        Command::Diagram { case, format, annotate } => {
            let d = case.diagram()?;
            let format = match format {
                DiagramFormat::Ascii => richardson_core::render::Format::Ascii,
                DiagramFormat::Svg => richardson_core::render::Format::Svg,
            };
            let a = match annotate {
                AnnotationArg::Labels => Annotation::Labels,
                AnnotationArg::Monomials => Annotation::Monomials,
                AnnotationArg::Shapes => Annotation::Shapes,
            };
            print!("{}", render(&d, format, a)?);
        }
        Command::Seed { case, construction, format } => print_seed(&case, construction, format, true)?,
        Command::Quiver { case, construction, format } => print_seed(&case, construction, format, false)?,
        Command::EvalMinor { n, rows, cols, matrix, seed } => {
            let (rows, cols) = (IndexSet::new(rows), IndexSet::new(cols));
            let x = match matrix {
                Some(s) => parse_matrix(&s)?,
                None => ExactMatrix::random_unitriangular(n, &mut rng(seed)),
            };
            if x.n() != n {
                return Err(Usage(format!("matrix has size {} but n is {n}", x.n())));
            }
            let whole = MinorIndex::new(rows.clone(), cols.clone());
            println!("{whole} = {}", eval_minor(&x, &whole)?);
            if x.is_unitriangular() && rows.gale_leq(&cols).unwrap_or(false) {
                let key = skew_shape(&rows, &cols, n)?.canonical_key();
                println!("reduced {key} = {}", eval_minor(&x, &key)?);
                for k in component_keys(&rows, &cols, n)? {
                    println!("factor {k} = {}", eval_minor(&x, &k)?);
                }
            }
        }
        Command::Verify { n, exhaustive, sample, seed, trials, checks, v, word, timing, list } => {
            if list {
                for c in CHECKS {
                    println!("{:<18} {}", c.name, c.description);
                }
                return Ok(true);
            }
            let only = match (v, word) {
                (None, None) => None,
                (v, word) => Some(CaseArgs { n: None, v, word: word.unwrap_or_default() }.case()?),
            };
            let n = only.as_ref().map_or(n, |c| c.v.n());
            let checks = checks.map(|c| c.into_iter().filter(|s| !s.is_empty()).collect());
            let config = VerifyConfig { n, exhaustive, sample, seed, trials, checks, only, timing };
            let report = verify(&config)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            return Ok(report.all_passed);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
