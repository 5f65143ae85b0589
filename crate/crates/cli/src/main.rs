use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value as Json};

use habiro_core::acceptance;
use habiro_core::evalx::{eval_padic, eval_rational, modp_nonvanishing, modp_scan, modp_value};
use habiro_core::habiro::HabiroElem;
use habiro_core::invariants::{
    congruence_report, knot_borromean, load_diagram, ohtsuki, tilde_tau8_check, wrt,
    SurgeryPresentation,
};
use habiro_core::ring::{Laurent, ModPoly};
use habiro_core::tangle::{builtin, colored_jones, framing_adjust, Diagram};
use habiro_core::Error;

#[derive(Parser)]
#[command(
    name = "habiro",
    version,
    about = "Unified WRT invariants of integral homology spheres"
)]
struct Cli {
    /// Truncation depth of Habiro-ring elements.
    #[arg(long, global = true, default_value_t = 10)]
    depth: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Args, Clone, Default)]
struct Input {
    /// Built-in diagram name (unknot, unknot+1, unknot-1, hopf, trefoil, borromean).
    #[arg(long)]
    builtin: Option<String>,
    /// Diagram file.
    #[arg(long)]
    diagram: Option<String>,
    /// Surgery presentation as a JSON file or inline JSON.
    #[arg(long)]
    surgery: Option<String>,
    /// Framings for --builtin or --diagram, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    framings: Vec<i64>,
    /// Borromean family parameters i,j,k.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1)]
    borromean: Vec<i64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Colored Jones polynomial of a diagram in its own framing.
    Jones {
        #[command(flatten)]
        input: Input,
        /// Colors, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        colors: Vec<u32>,
    },
    /// J_M of a surgery presentation.
    Jm {
        #[command(flatten)]
        input: Input,
    },
    /// Evaluate J_M (or an element read with --element).
    Eval {
        #[command(flatten)]
        input: Input,
        /// Habiro element in JSON form instead of a presentation.
        #[arg(long)]
        element: Option<String>,
        #[command(subcommand)]
        mode: EvalMode,
    },
    /// Ohtsuki series λ_0..λ_{d-1} and its congruences.
    Ohtsuki {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 6)]
        d: usize,
    },
    /// Expansion around a primitive r-th root of unity.
    Taylor {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 3)]
        d: usize,
    },
    /// WRT invariant τ at primitive r-th roots of unity.
    Wrt {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        r: usize,
    },
    /// Unified Kashaev invariant of the knot K_{i,j}.
    Kashaev {
        #[arg(allow_hyphen_values = true)]
        i: i64,
        #[arg(allow_hyphen_values = true)]
        j: i64,
        /// Also evaluate at primitive r-th roots of unity.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Run a named check suite ("acceptance" or "spec-accept").
    Check {
        #[arg(default_value = "acceptance")]
        suite: String,
        /// Run only this criterion.
        #[arg(long)]
        only: Option<usize>,
    },
}

#[derive(Subcommand, Clone)]
enum EvalMode {
    /// Value at primitive r-th roots of unity.
    Root { r: usize },
    /// Value at q = a/b modulo m.
    Rational {
        #[arg(allow_hyphen_values = true)]
        a: BigInt,
        b: BigInt,
        m: BigInt,
    },
    /// Value at the p-adic unit s modulo p^e.
    Padic {
        #[arg(allow_hyphen_values = true)]
        s: BigInt,
        p: BigInt,
        e: u32,
    },
    /// Value over F_p at primitive r-th roots of unity.
    Modp { p: BigInt, r: usize },
    /// CSV table of mod-p values.
    Scan {
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<usize>,
    },
}

enum Failure {
    Domain(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Syntax { .. }
            | Error::InterfaceMismatch { .. }
            | Error::OpenDiagram(_)
            | Error::ColorCountMismatch { .. }
            | Error::UnknownName(_)
            | Error::InvalidInput(_)
            | Error::Encoding(_) => Failure::Input(msg),
            _ => Failure::Domain(msg),
        }
    }
}

type Out = Result<(), Failure>;

fn input_err(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

fn read_text(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input_err(format!("cannot read {}: {}", path, e)))
}

fn read_json(s: &str) -> Result<(Json, Option<std::path::PathBuf>), Failure> {
    if s.trim_start().starts_with('{') {
        let v = serde_json::from_str(s).map_err(|e| input_err(format!("bad JSON: {}", e)))?;
        return Ok((v, None));
    }
    let v = serde_json::from_str(&read_text(s)?)
        .map_err(|e| input_err(format!("bad JSON in {}: {}", s, e)))?;
    Ok((v, Path::new(s).parent().map(|p| p.to_path_buf())))
}

impl Input {
    fn count(&self) -> usize {
        [
            self.builtin.is_some(),
            self.diagram.is_some(),
            self.surgery.is_some(),
            !self.borromean.is_empty(),
        ]
        .iter()
        .filter(|&&b| b)
        .count()
    }

    fn diagram(&self) -> Result<Diagram, Failure> {
        match (&self.builtin, &self.diagram) {
            (Some(n), None) => Ok(builtin(n)?),
            (None, Some(f)) => Ok(load_diagram(f, None)?),
            _ => Err(input_err("give exactly one of --builtin or --diagram")),
        }
    }

    fn presentation(&self) -> Result<SurgeryPresentation, Failure> {
        if self.count() != 1 {
            return Err(input_err(
                "give exactly one of --builtin, --diagram, --surgery, --borromean",
            ));
        }
        if let Some(s) = &self.surgery {
            let (v, base) = read_json(s)?;
            return Ok(SurgeryPresentation::from_json(&v, base.as_deref())?);
        }
        if !self.borromean.is_empty() {
            let b = &self.borromean;
            if b.len() != 3 {
                return Err(input_err("--borromean takes three integers"));
            }
            return Ok(SurgeryPresentation::borromean(b[0], b[1], b[2]));
        }
        let d = self.diagram()?;
        Ok(SurgeryPresentation::diagram(d, self.framings.clone())?)
    }
}

fn poly_text(p: &Laurent) -> String {
    if let Some(q) = p.contract_var(4) {
        q.display_var("q")
    } else if let Some(v) = p.contract_var(2) {
        v.display_var("v")
    } else {
        p.display_var("u")
    }
}

fn modpoly_json(m: &ModPoly) -> Json {
    m.to_json()
}

fn emit(format: Format, human: String, machine: Json) {
    match format {
        Format::Human => println!("{}", human),
        Format::Json => println!("{}", serde_json::to_string(&machine).expect("serializable")),
    }
}

fn elem_from(input: &Input, element: &Option<String>, depth: usize) -> Result<HabiroElem, Failure> {
    match element {
        Some(f) => {
            if input.count() != 0 {
                return Err(input_err(
                    "--element cannot be combined with a presentation",
                ));
            }
            let (v, _) = read_json(f)?;
            Ok(HabiroElem::from_json(&v)?)
        }
        None => Ok(input.presentation()?.jm(depth)?),
    }
}

fn run(cli: Cli) -> Out {
    let depth = cli.depth;
    let fmt = cli.format;
    if depth == 0 {
        return Err(input_err("--depth must be at least 1"));
    }
    match cli.cmd {
        Cmd::Jones { input, colors } => {
            let d = input.diagram()?;
            let mut j = colored_jones(&d, &colors)?;
            if !input.framings.is_empty() {
                j = framing_adjust(&j, &d, &colors, &input.framings)?;
            }
            emit(
                fmt,
                poly_text(&j),
                json!({ "colors": colors, "value": j.to_json("u") }),
            );
        }
        Cmd::Jm { input } => {
            let x = input.presentation()?.jm(depth)?;
            let red = x.reduce(depth)?;
            emit(
                fmt,
                format!("J_M = {}\nmod (q)_{}: {}", x, depth, poly_text(&red)),
                json!({ "element": x.to_json(), "reduced": red.to_json("u") }),
            );
        }
        Cmd::Eval {
            input,
            element,
            mode,
        } => {
            let x = elem_from(&input, &element, depth)?;
            match mode {
                EvalMode::Root { r } => {
                    let v = x.eval_root(r)?;
                    emit(
                        fmt,
                        format!("{} (mod Phi_{}(q))", v.display_var("q"), r),
                        json!({ "r": r, "value": modpoly_json(&v) }),
                    );
                }
                EvalMode::Rational { a, b, m } => {
                    let v = eval_rational(&x, &a, &b, &m)?;
                    emit(fmt, v.to_string(), v.to_json());
                }
                EvalMode::Padic { s, p, e } => {
                    let v = eval_padic(&x, &s, &p, e)?;
                    emit(
                        fmt,
                        format!("{} using {} terms", v, v.terms_used),
                        v.to_json(),
                    );
                }
                EvalMode::Modp { p, r } => {
                    let v = modp_value(&x, &p, r)?;
                    let nv = modp_nonvanishing(&x, &p, r)?;
                    let mut j = v.to_json();
                    j["nonvanishing"] = json!(nv);
                    emit(fmt, format!("{}\nnonvanishing: {}", v, nv), j);
                }
                EvalMode::Scan { primes, orders } => {
                    print!("{}", modp_scan(&x, &primes, &orders)?);
                }
            }
        }
        Cmd::Ohtsuki { input, d } => {
            let x = input.presentation()?.jm(depth)?;
            let l = ohtsuki(&x, d)?;
            let ls: Vec<String> = l.iter().map(|c| c.to_string()).collect();
            let mut human = format!("λ = ({})", ls.join(", "));
            let mut rels = Vec::new();
            if l.len() >= 5 {
                let rep = congruence_report(&l)?;
                for r in &rep.relations {
                    human.push_str(&format!(
                        "\n  {}: {}",
                        r.name,
                        if r.holds { "holds" } else { "FAILS" }
                    ));
                    rels.push(json!({ "relation": r.name, "holds": r.holds }));
                }
            }
            if depth >= 8 && l.len() >= 2 {
                let t = tilde_tau8_check(&x, &l[1])?;
                human.push_str(&format!(
                    "\n  τ̃_8 - 1 = {:?}: lattice {}, span(4, 2√2) {}",
                    t.difference
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>(),
                    t.in_lattice,
                    t.in_small_lattice
                ));
            }
            emit(fmt, human, json!({ "lambda": ls, "relations": rels }));
        }
        Cmd::Taylor { input, r, d } => {
            let x = input.presentation()?.jm(depth)?;
            let t = x.taylor(r, d)?;
            let human: Vec<String> = t
                .iter()
                .enumerate()
                .map(|(k, c)| format!("h^{}: {}", k, c.display_var("q")))
                .collect();
            let machine: Vec<Json> = t.iter().map(modpoly_json).collect();
            emit(
                fmt,
                human.join("\n"),
                json!({ "r": r, "coefficients": machine }),
            );
        }
        Cmd::Wrt { input, r } => {
            let w = wrt(&input.presentation()?, r)?;
            emit(
                fmt,
                format!("{} (mod Phi_{}(q))", w.display_var("q"), r),
                json!({ "r": r, "value": modpoly_json(&w) }),
            );
        }
        Cmd::Kashaev { i, j, r } => {
            let k = knot_borromean(i, j, depth)?;
            let t0 = k.theta0();
            let mut human = format!("θ_0(K_({},{})) = {}", i, j, t0);
            let mut machine = json!({ "element": t0.to_json() });
            if let Some(r) = r {
                let v = t0.eval_root(r)?;
                human.push_str(&format!("\nat ζ_{}: {}", r, v.display_var("q")));
                machine["value"] = modpoly_json(&v);
            }
            emit(fmt, human, machine);
        }
        Cmd::Check { suite, only } => {
            if suite != "acceptance" && suite != "spec-accept" {
                return Err(input_err(format!("unknown suite {:?}", suite)));
            }
            let ids: Vec<usize> = match only {
                Some(n) if (1..=acceptance::TITLES.len()).contains(&n) => vec![n],
                Some(n) => return Err(input_err(format!("no criterion {}", n))),
                None => (1..=acceptance::TITLES.len()).collect(),
            };
            let mut failed = 0;
            for id in ids {
                let o = acceptance::run(id);
                if !o.passed {
                    failed += 1;
                }
                match fmt {
                    Format::Human => println!("{}", o),
                    Format::Json => println!(
                        "{}",
                        json!({ "id": o.id, "title": o.title, "passed": o.passed, "detail": o.detail })
                    ),
                }
            }
            if failed > 0 {
                return Err(Failure::Domain(format!("{} criteria failed", failed)));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("input error: {}", m);
            ExitCode::from(2)
        }
    }
}
