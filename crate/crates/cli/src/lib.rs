//! Front end for the `bordiscope` binary. [`run`] does all the work so tests
//! can drive the CLI in-process.

use std::io::Read;

use bordiscope_core::geometric::{euler_image, kappa_n, kappa_n_inverse, phi_n};
use bordiscope_core::group::{enumerate_characters, fixed_summands, regular_representation};
use bordiscope_core::mo::hilbert_dimension;
use bordiscope_core::pullback::{intersect_positive, monomial_frame, pullback_report, subalgebra_span};
use bordiscope_core::rings::{Direction, Positivity, DEFAULT_D_MAX, DEFAULT_MO_MAX};
use bordiscope_core::{AoElement, BigRingSpec, Error, GeometricClass, GradedPolynomial, TruncationWindow};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "bordiscope", version, about = "Exact F_2 algebra for (Z/2)^l equivariant bordism")]
pub struct Cli {
    /// Rank l of G = (Z/2)^l.
    #[arg(long = "l", global = true, default_value_t = 1)]
    pub l: u32,
    /// Largest Y-index d.
    #[arg(long = "dmax", global = true, default_value_t = DEFAULT_D_MAX)]
    pub d_max: u32,
    /// Largest MO_* generator degree.
    #[arg(long = "momax", global = true, default_value_t = DEFAULT_MO_MAX)]
    pub mo_max: u32,
    /// Emit JSON instead of canonical text.
    #[arg(long, global = true)]
    pub json: bool,
    /// e-exponent bound B of the truncation window (default |degree| + dmax).
    #[arg(long = "window-b", global = true)]
    pub window_b: Option<u32>,
    /// Maximum number of generator factors per word.
    #[arg(long = "word-length", global = true)]
    pub word_length: Option<u32>,
    /// Seed for randomized harnesses; commands themselves are deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the nontrivial characters J.
    Chars,
    /// The regular representation.
    Regular,
    /// All representations of dimension N.
    Summands { n: u32 },
    /// Product of two elements.
    Mul { a: String, b: String },
    /// Sum of two elements.
    Add { a: String, b: String },
    /// The antipode on X-variables.
    Antipode { a: String },
    /// The involution ι.
    Iota { a: String },
    /// Embed an AO element, given as JSON like {"c1": 2}.
    AoEmbed { a: String },
    /// Switch between X- and Y-presentations.
    Rewrite {
        a: String,
        #[arg(long, default_value = "x-to-y")]
        direction: Direction,
    },
    /// Membership in MO_*[e_V^-1, Y_{d,V}].
    Positive { a: String },
    /// φ_N of a closed geometric class (JSON file).
    PhiN { file: String },
    /// κ_N of a class with boundary (JSON file).
    Kappa { file: String },
    /// κ_N^-1 of a monomial.
    KappaInv { a: String },
    /// The Euler class e_V.
    Euler { character: String },
    /// dim MO_N.
    Hilbert { n: u32 },
    /// Coordinate monomials of a window.
    Frame {
        #[arg(allow_negative_numbers = true)]
        degree: i64,
    },
    /// Span of generator products in one degree.
    Span {
        #[arg(allow_negative_numbers = true)]
        degree: i64,
        /// Generators; repeat the flag.
        #[arg(long = "gen")]
        gens: Vec<String>,
        /// Intersect with the e-nonpositive subring.
        #[arg(long)]
        positive: bool,
    },
    /// Decide membership in span(gens) ∩ MO_*[e_V^-1, Y_{d,V}].
    Pullback {
        x: String,
        #[arg(long = "gen")]
        gens: Vec<String>,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn render(&self) -> String {
        match self {
            Failure::Lib(e) => format!("error: {}: {e}\n", e.name()),
            Failure::Io(msg) => format!("error: io-error: {msg}\n"),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Parse `args` (including the program name) and execute.
pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let result = BigRingSpec::new(cli.l, cli.d_max, cli.mo_max)
        .map_err(Failure::from)
        .and_then(|spec| {
            let mut session = Session { cli: &cli, stdin, stdin_used: None, spec: &spec };
            session.dispatch(&cli.command)
        });
    match result {
        Ok(mut out) => {
            if !out.ends_with('\n') {
                out.push('\n');
            }
            Outcome { code: 0, stdout: out, stderr: String::new() }
        }
        Err(f) => Outcome { code: 1, stdout: String::new(), stderr: f.render() },
    }
}

struct Session<'a> {
    cli: &'a Cli,
    stdin: &'a mut dyn Read,
    stdin_used: Option<String>,
    spec: &'a BigRingSpec,
}

impl<'a> Session<'a> {
    /// The argument itself, or all of stdin for "-".
    fn source(&mut self, arg: &str) -> CliResult<String> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if let Some(s) = &self.stdin_used {
            return Ok(s.clone());
        }
        let mut buf = String::new();
        self.stdin
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Io(format!("reading stdin: {e}")))?;
        let buf = buf.trim().to_string();
        self.stdin_used = Some(buf.clone());
        Ok(buf)
    }

    /// Elements are canonical text, or polynomial JSON when they start with `{`.
    fn element(&mut self, arg: &str) -> CliResult<GradedPolynomial> {
        let src = self.source(arg)?;
        if src.trim_start().starts_with('{') {
            let v: Value = serde_json::from_str(&src).map_err(Error::from)?;
            Ok(GradedPolynomial::from_json(self.spec.ring(), &v)?)
        } else {
            Ok(self.spec.parse(&src)?)
        }
    }

    /// Inline JSON, `-` for stdin, or a file path.
    fn json_arg(&mut self, arg: &str) -> CliResult<Value> {
        let src = self.source(arg)?;
        let text = if arg == "-" || src.trim_start().starts_with(['{', '[']) {
            src
        } else {
            std::fs::read_to_string(&src).map_err(|e| Failure::Io(format!("{src}: {e}")))?
        };
        Ok(serde_json::from_str(&text).map_err(Error::from)?)
    }

    fn class(&mut self, arg: &str) -> CliResult<GeometricClass> {
        let v = self.json_arg(arg)?;
        Ok(GeometricClass::from_json(&v, self.spec)?)
    }

    fn window(&self, degree: i64) -> TruncationWindow {
        let mut w = TruncationWindow::default_for(degree, self.spec);
        if let Some(b) = self.cli.window_b {
            w.e_range = b;
        }
        if let Some(l) = self.cli.word_length {
            w.max_word_length = l;
        }
        w
    }

    fn poly_out(&self, p: &GradedPolynomial) -> String {
        if self.cli.json {
            p.to_json().to_string()
        } else {
            p.to_text()
        }
    }

    fn list_out(&self, items: Vec<String>, json_items: Vec<Value>) -> String {
        if self.cli.json {
            Value::Array(json_items).to_string()
        } else {
            items.join("\n")
        }
    }

    fn dispatch(&mut self, cmd: &Command) -> CliResult<String> {
        let spec = self.spec;
        Ok(match cmd {
            Command::Chars => {
                let chars = enumerate_characters(self.cli.l)?;
                let labels: Vec<String> = chars.iter().map(|c| c.label()).collect();
                self.list_out(labels.clone(), labels.into_iter().map(Value::from).collect())
            }
            Command::Regular => {
                let r = regular_representation(self.cli.l)?;
                if self.cli.json {
                    r.to_json().to_string()
                } else {
                    r.to_string()
                }
            }
            Command::Summands { n } => {
                let list = fixed_summands(*n, self.cli.l)?;
                self.list_out(
                    list.iter().map(|r| r.to_string()).collect(),
                    list.iter().map(|r| r.to_json()).collect(),
                )
            }
            Command::Mul { a, b } => {
                let (a, b) = (self.element(a)?, self.element(b)?);
                self.poly_out(&a.mul(&b)?)
            }
            Command::Add { a, b } => {
                let (a, b) = (self.element(a)?, self.element(b)?);
                self.poly_out(&a.add(&b)?)
            }
            Command::Antipode { a } => {
                let a = self.element(a)?;
                self.poly_out(&spec.antipode().apply(&a)?)
            }
            Command::Iota { a } => {
                let a = self.element(a)?;
                self.poly_out(&spec.iota(&a)?)
            }
            Command::AoEmbed { a } => {
                let v = self.json_arg(a)?;
                let a = AoElement::from_json(&v, self.cli.l)?;
                self.poly_out(&spec.ao_embed(&a)?)
            }
            Command::Rewrite { a, direction } => {
                let a = self.element(a)?;
                self.poly_out(&spec.rewrite(&a, *direction)?)
            }
            Command::Positive { a } => {
                let a = self.element(a)?;
                match (spec.is_in_positive_part(&a)?, self.cli.json) {
                    (Positivity::Positive, false) => "positive".into(),
                    (Positivity::Positive, true) => json!({"positive": true}).to_string(),
                    (Positivity::NotPositive { witness }, false) => {
                        format!("not-positive\nwitness: {}", spec.format_monomial(&witness))
                    }
                    (Positivity::NotPositive { witness }, true) => {
                        json!({"positive": false, "witness": spec.format_monomial(&witness)}).to_string()
                    }
                }
            }
            Command::PhiN { file } => {
                let g = self.class(file)?;
                self.poly_out(&phi_n(&g, spec)?)
            }
            Command::Kappa { file } => {
                let g = self.class(file)?;
                self.poly_out(&kappa_n(&g, spec)?)
            }
            Command::KappaInv { a } => {
                let a = self.element(a)?;
                let g = kappa_n_inverse(&a, spec)?;
                if self.cli.json {
                    g.to_json().to_string()
                } else {
                    describe_class(&g)
                }
            }
            Command::Euler { character } => {
                let c = spec.parse_character(character)?;
                self.poly_out(&euler_image(&c, spec)?)
            }
            Command::Hilbert { n } => {
                let d = hilbert_dimension(*n)?;
                if self.cli.json {
                    json!({"degree": n, "dimension": d}).to_string()
                } else {
                    d.to_string()
                }
            }
            Command::Frame { degree } => {
                let w = self.window(*degree);
                let frame = monomial_frame(spec, &w)?;
                let texts: Vec<String> = frame.iter().map(|m| spec.format_monomial(m)).collect();
                if self.cli.json {
                    json!({"window": w.to_json(), "monomials": texts}).to_string()
                } else {
                    texts.join("\n")
                }
            }
            Command::Span { degree, gens, positive } => {
                let gens = self.elements(gens)?;
                let w = self.window(*degree);
                let mut basis = subalgebra_span(&gens, spec, &w)?;
                if *positive {
                    basis = intersect_positive(&basis, spec);
                }
                let polys = basis.polynomials();
                if self.cli.json {
                    json!({
                        "window": w.to_json(),
                        "dimension": basis.dimension(),
                        "basis": polys.iter().map(|p| p.to_text()).collect::<Vec<_>>(),
                    })
                    .to_string()
                } else {
                    let mut lines = vec![format!("dimension: {}", basis.dimension())];
                    lines.extend(polys.iter().map(|p| p.to_text()));
                    lines.join("\n")
                }
            }
            Command::Pullback { x, gens } => {
                let x = self.element(x)?;
                let gens = self.elements(gens)?;
                let degree = match x.homogeneous_degree() {
                    Some(d) => d,
                    None if x.is_zero() => 0,
                    None => {
                        return Err(Error::NotHomogeneous(format!("query {x}")).into());
                    }
                };
                let report = pullback_report(&x, &gens, spec, &self.window(degree))?;
                if self.cli.json {
                    report.to_json().to_string()
                } else {
                    report.to_text()
                }
            }
        })
    }

    fn elements(&mut self, args: &[String]) -> CliResult<Vec<GradedPolynomial>> {
        args.iter().map(|a| self.element(a)).collect()
    }
}

fn describe_class(g: &GeometricClass) -> String {
    let mut lines = vec![format!(
        "n = {}{}",
        g.ambient_dim,
        if g.boundary_allowed { ", with boundary" } else { "" }
    )];
    for (k, c) in g.components.iter().enumerate() {
        let ranks: Vec<String> = c.ranks.iter().map(|(ch, r)| format!("{ch}:{r}")).collect();
        lines.push(format!(
            "component {}: base {}; ranks {}",
            k + 1,
            c.base,
            if ranks.is_empty() { "-".into() } else { ranks.join(" ") }
        ));
    }
    lines.join("\n")
}
