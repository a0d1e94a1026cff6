//! Command-line surface for the hopfwick library: moment ingestion from
//! distribution expressions, JSON specs or CSV samples, the moment/cumulant
//! transforms, Wick polynomials, deformed products, decorated-tree
//! operations and verification suites.
//!
//! Exit codes: 0 success, 1 usage error, 2 validation error, 3 enumeration
//! guard.

mod checks;
mod dist;
mod error;
mod samples;
mod tree_spec;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hopfwick::render::{
    functional_json, functional_latex, functional_text, poly_json, poly_latex, poly_text,
};
use hopfwick::{
    centering_character, extraction_contraction, moment_functional, DecTree, Deformation,
    Functional, HElem, Letter, MomentSpec, Multiset, Rat,
};

use dist::DistributionSpec;
use error::{CliError, CliResult};
use samples::SampleTable;
use tree_spec::TreeCharSpec;

#[derive(Parser)]
#[command(
    name = "hopfwick",
    version,
    about = "Exact Hopf-algebraic calculus of moments, cumulants and Wick polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Args)]
struct MomentInput {
    /// Moment specification JSON file
    #[arg(long, value_name = "FILE")]
    spec: Option<PathBuf>,
    /// Inline distribution assignment, e.g. "a=gaussian(0,1),b=poisson(1)"
    #[arg(long, value_name = "EXPR")]
    dist: Option<String>,
    /// CSV sample file with a header row of letters
    #[arg(long, value_name = "FILE")]
    samples: Option<PathBuf>,
    /// Truncation degree
    #[arg(long, default_value_t = 6)]
    max_degree: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Joint cumulants of the input moments
    Cumulants {
        #[command(flatten)]
        input: MomentInput,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Joint moments: of a cumulant spec (--spec) or of a distribution or
    /// sample table directly
    Moments {
        #[command(flatten)]
        input: MomentInput,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Wick polynomial of a monomial
    Wick {
        #[command(flatten)]
        input: MomentInput,
        /// Monomial in multiset notation, e.g. "a^4" or "a^2 b"
        #[arg(long, value_name = "MSET")]
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Preimage of a monomial under the Wick map
    WickInverse {
        #[command(flatten)]
        input: MomentInput,
        #[arg(long, value_name = "MSET")]
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Deformed product of monomials, e.g. --expr "a^2 * a b"
    DeformMul {
        #[command(flatten)]
        input: MomentInput,
        /// Factors in multiset notation joined by " * "
        #[arg(long, value_name = "EXPR")]
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify the Hopf-algebra laws (and, given moments, the Wick
    /// characterization)
    HopfCheck {
        #[command(flatten)]
        input: OptionalMomentInput,
    },
    /// Decorated rooted tree operations
    Tree {
        #[command(subcommand)]
        command: TreeCommand,
    },
}

#[derive(Args)]
struct OptionalMomentInput {
    #[arg(long, value_name = "FILE")]
    spec: Option<PathBuf>,
    #[arg(long, value_name = "EXPR")]
    dist: Option<String>,
    #[arg(long, value_name = "FILE")]
    samples: Option<PathBuf>,
    #[arg(long, default_value_t = 4)]
    max_degree: u32,
}

#[derive(Subcommand)]
enum TreeCommand {
    /// Extraction-contraction coproduct of a tree
    Coprod {
        /// Tree in edge-list notation, e.g. "(1:(2:()),3:())"
        #[arg(long, value_name = "TREE")]
        tree: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Product of trees by root identification
    Prod {
        /// Factor trees; give the flag at least twice
        #[arg(long = "tree", value_name = "TREE", required = true)]
        trees: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Centering character of a moment character spec
    Center {
        /// Tree character JSON file
        #[arg(long, value_name = "FILE")]
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Verify the decorated-tree Hopf laws
    Check {
        /// Edge bound for the enumerated checks
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        /// Number of edge decorations
        #[arg(long, default_value_t = 2)]
        d: u32,
    },
}

fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))
}

/// Builds the moment spec from exactly one input source. `needed_degree`
/// lets expression-driven commands raise the truncation of generated
/// moments; explicit spec files keep their own declared bound.
fn resolve_moments(input: &MomentInput, needed_degree: u32) -> CliResult<MomentSpec> {
    let sources = usize::from(input.spec.is_some())
        + usize::from(input.dist.is_some())
        + usize::from(input.samples.is_some());
    if sources != 1 {
        return Err(CliError::Usage(
            "give exactly one of --spec, --dist, --samples".into(),
        ));
    }
    let degree = input.max_degree.max(needed_degree);
    if let Some(path) = &input.spec {
        return MomentSpec::from_json(&read_file(path)?).map_err(CliError::from);
    }
    if let Some(expr) = &input.dist {
        return DistributionSpec::from_str(expr)?.moments(degree);
    }
    let path = input.samples.as_ref().expect("one source present");
    SampleTable::parse(&read_file(path)?)?.moments(degree)
}

/// Cumulant spec JSON for the `moments` command:
/// `{"alphabet":[..],"max_degree":n,"cumulants":{"<mset>":"<rational>"}}`
/// with value zero at the empty multiset and a complete table.
fn cumulant_spec_from_json(text: &str) -> CliResult<(Functional, Vec<Letter>, u32)> {
    let root: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CliError::Validation(format!("bad JSON: {e}")))?;
    let alphabet = root
        .get("alphabet")
        .and_then(serde_json::Value::as_array)
        .ok_or_else(|| CliError::Validation("missing array field `alphabet`".into()))?
        .iter()
        .map(|v| {
            v.as_str()
                .ok_or_else(|| CliError::Validation("alphabet entries must be strings".into()))
                .and_then(|s| Letter::new(s).map_err(CliError::from))
        })
        .collect::<CliResult<Vec<_>>>()?;
    let max_degree = root
        .get("max_degree")
        .and_then(serde_json::Value::as_u64)
        .and_then(|v| u32::try_from(v).ok())
        .ok_or_else(|| CliError::Validation("missing integer field `max_degree`".into()))?;
    let raw = root
        .get("cumulants")
        .and_then(serde_json::Value::as_object)
        .ok_or_else(|| CliError::Validation("missing object field `cumulants`".into()))?;
    let mut table = BTreeMap::new();
    for (key, value) in raw {
        let m = Multiset::from_str(key).map_err(CliError::from)?;
        let r = value
            .as_str()
            .ok_or_else(|| CliError::Validation(format!("value for `{key}` must be a string")))?;
        table.insert(m, Rat::from_str(r).map_err(CliError::from)?);
    }
    match table.get(&Multiset::empty()) {
        Some(v) if v.is_zero() => {}
        Some(v) => {
            return Err(CliError::Validation(format!(
                "cumulant of the empty multiset must be 0, found {v}"
            )))
        }
        None => {
            return Err(CliError::Validation(
                "missing cumulant at the empty multiset".into(),
            ))
        }
    }
    for m in Multiset::enumerate(&alphabet, max_degree) {
        if !table.contains_key(&m) {
            return Err(CliError::Validation(format!(
                "missing cumulant for `{m}` below degree {max_degree}"
            )));
        }
    }
    Ok((
        Functional::from_table(table, max_degree),
        alphabet,
        max_degree,
    ))
}

fn render_functional(
    f: &Functional,
    alphabet: &[Letter],
    max_degree: u32,
    format: Format,
) -> CliResult<String> {
    let text = match format {
        Format::Json => functional_json(f, alphabet, max_degree).map_err(CliError::from)?,
        Format::Latex => functional_latex(f, alphabet, max_degree).map_err(CliError::from)?,
        Format::Text => functional_text(f, alphabet, max_degree).map_err(CliError::from)?,
    };
    Ok(text.trim_end().to_owned())
}

fn render_poly(x: &HElem, format: Format) -> String {
    match format {
        Format::Json => poly_json(x),
        Format::Latex => poly_latex(x),
        Format::Text => poly_text(x),
    }
}

fn parse_monomial(expr: &str) -> CliResult<Multiset> {
    Multiset::from_str(expr).map_err(CliError::from)
}

fn run_cumulants(input: &MomentInput, format: Format) -> CliResult<String> {
    let spec = resolve_moments(input, 0)?;
    let kappa = hopfwick::cumulants(&moment_functional(&spec)).map_err(CliError::from)?;
    render_functional(&kappa, spec.alphabet(), spec.max_degree(), format)
}

fn run_moments(input: &MomentInput, format: Format) -> CliResult<String> {
    if let Some(path) = &input.spec {
        // the spec file holds cumulants; return their moments
        let (kappa, alphabet, max_degree) = cumulant_spec_from_json(&read_file(path)?)?;
        let mu = hopfwick::moments_from_cumulants(&kappa).map_err(CliError::from)?;
        return render_functional(&mu, &alphabet, max_degree, format);
    }
    let spec = resolve_moments(input, 0)?;
    render_functional(
        &moment_functional(&spec),
        spec.alphabet(),
        spec.max_degree(),
        format,
    )
}

fn run_wick(input: &MomentInput, expr: &str, format: Format, inverse: bool) -> CliResult<String> {
    let monomial = parse_monomial(expr)?;
    let spec = resolve_moments(input, monomial.degree())?;
    let mu = moment_functional(&spec);
    let image = if inverse {
        hopfwick::wick_inverse(&mu, &HElem::basis(monomial))
    } else {
        hopfwick::wick(&mu, &HElem::basis(monomial))
    }
    .map_err(CliError::from)?;
    Ok(render_poly(&image, format))
}

fn run_deform_mul(input: &MomentInput, expr: &str, format: Format) -> CliResult<String> {
    let factors = expr
        .split(" * ")
        .map(parse_monomial)
        .collect::<CliResult<Vec<_>>>()?;
    if factors.len() < 2 {
        return Err(CliError::Usage(
            "deform-mul needs at least two factors joined by \" * \"".into(),
        ));
    }
    let total_degree: u32 = factors.iter().map(Multiset::degree).sum();
    let spec = resolve_moments(input, total_degree)?;
    let deformation = Deformation::new(&moment_functional(&spec)).map_err(CliError::from)?;
    let mut product = HElem::basis(factors[0].clone());
    for factor in &factors[1..] {
        product = deformation
            .product(&product, &HElem::basis(factor.clone()))
            .map_err(CliError::from)?;
    }
    Ok(render_poly(&product, format))
}

fn run_hopf_check(input: &OptionalMomentInput) -> CliResult<String> {
    let sources = usize::from(input.spec.is_some())
        + usize::from(input.dist.is_some())
        + usize::from(input.samples.is_some());
    if sources > 1 {
        return Err(CliError::Usage(
            "give at most one of --spec, --dist, --samples".into(),
        ));
    }
    let moments = if sources == 1 {
        let inner = MomentInput {
            spec: input.spec.clone(),
            dist: input.dist.clone(),
            samples: input.samples.clone(),
            max_degree: input.max_degree,
        };
        Some(resolve_moments(&inner, 0)?)
    } else {
        None
    };
    let outcome = checks::hopf_check(input.max_degree, moments.as_ref())?;
    if outcome.all_passed {
        Ok(outcome.lines.join("\n"))
    } else {
        Err(CliError::Validation(format!(
            "{}\nsome checks failed",
            outcome.lines.join("\n")
        )))
    }
}

fn tree_tensor_lines(t: &DecTree, format: Format) -> CliResult<String> {
    let split = extraction_contraction(t).map_err(CliError::from)?;
    match format {
        Format::Json => {
            let terms: Vec<serde_json::Value> = split
                .iter()
                .map(|((forest, rest), coeff)| {
                    serde_json::json!({
                        "coeff": coeff.to_string(),
                        "forest": forest.to_string(),
                        "tree": rest.to_string(),
                    })
                })
                .collect();
            Ok(
                serde_json::to_string_pretty(&serde_json::json!({ "terms": terms }))
                    .expect("terms serialize"),
            )
        }
        Format::Latex => Ok(split
            .iter()
            .map(|((forest, rest), coeff)| {
                let prefix = if coeff.is_one() {
                    String::new()
                } else {
                    format!("{coeff}\\, ")
                };
                let forest_tex = forest.to_string().replace(" * ", " \\bullet ");
                format!("{prefix}{forest_tex} \\otimes {rest}")
            })
            .collect::<Vec<_>>()
            .join(" + ")),
        Format::Text => Ok(split
            .iter()
            .map(|((forest, rest), coeff)| {
                if coeff.is_one() {
                    format!("{forest} (x) {rest}")
                } else {
                    format!("{coeff} {forest} (x) {rest}")
                }
            })
            .collect::<Vec<_>>()
            .join("\n")),
    }
}

fn run_tree(command: &TreeCommand) -> CliResult<String> {
    match command {
        TreeCommand::Coprod { tree, format } => {
            let t = DecTree::from_str(tree).map_err(CliError::from)?;
            tree_tensor_lines(&t, *format)
        }
        TreeCommand::Prod { trees, format } => {
            if trees.len() < 2 {
                return Err(CliError::Usage("give --tree at least twice".into()));
            }
            let mut product = DecTree::leaf();
            for text in trees {
                product = product.product(&DecTree::from_str(text).map_err(CliError::from)?);
            }
            Ok(match format {
                Format::Json => serde_json::to_string_pretty(
                    &serde_json::json!({ "tree": product.to_string() }),
                )
                .expect("tree serializes"),
                _ => product.to_string(),
            })
        }
        TreeCommand::Center { spec, format } => {
            let spec = TreeCharSpec::from_json(&read_file(spec)?)?;
            let mu = spec.character();
            let lambda = centering_character(&mu);
            let centered = spec.map_values(|t| lambda.eval_tree(t).map_err(CliError::from))?;
            Ok(match format {
                Format::Json => centered.to_json(),
                Format::Latex => centered
                    .values
                    .iter()
                    .map(|(t, v)| format!("{t} &\\mapsto {v}\\\\"))
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Text => centered
                    .values
                    .iter()
                    .map(|(t, v)| format!("{t} = {v}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
            })
        }
        TreeCommand::Check { max_degree, d } => {
            let outcome = checks::tree_check(*max_degree, *d)?;
            if outcome.all_passed {
                Ok(outcome.lines.join("\n"))
            } else {
                Err(CliError::Validation(format!(
                    "{}\nsome checks failed",
                    outcome.lines.join("\n")
                )))
            }
        }
    }
}

fn run(cli: Cli) -> CliResult<String> {
    match &cli.command {
        Command::Cumulants { input, format } => run_cumulants(input, *format),
        Command::Moments { input, format } => run_moments(input, *format),
        Command::Wick {
            input,
            expr,
            format,
        } => run_wick(input, expr, *format, false),
        Command::WickInverse {
            input,
            expr,
            format,
        } => run_wick(input, expr, *format, true),
        Command::DeformMul {
            input,
            expr,
            format,
        } => run_deform_mul(input, expr, *format),
        Command::HopfCheck { input } => run_hopf_check(input),
        Command::Tree { command } => run_tree(command),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(output) => {
            // a downstream pipe closing early (e.g. `| head`) is not an error
            use std::io::Write;
            match writeln!(std::io::stdout(), "{output}") {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}
