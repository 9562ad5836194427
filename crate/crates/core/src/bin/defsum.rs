use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use defsum::arith::rat_string;
use defsum::basis::check_compatibility;
use defsum::syntax::{parse_ore, to_json, to_latex, to_text};
use defsum::{
    gcrd, parse_operator, reduce_first_column, unroll, verify_solution, BasisSpec, BigRat, ExpansionTable,
    InputOperator, KernelSpec, OreOp, Reducer, Sequence, Var,
};

#[derive(Parser)]
#[command(name = "defsum", version, about = "Definite-sum solutions of linear recurrences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute L' from L and a binomial basis.
    Reduce(ReduceArgs),
    /// Print shift and multiplication tables of a basis.
    Expand(ExpandArgs),
    /// Check that a sequence h yields a solution of L y = 0.
    Verify(VerifyArgs),
    /// Greatest common right divisor of recurrence operators.
    Gcrd(GcrdArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Args)]
struct BasisArgs {
    /// Comma-separated positive integers a_1..a_m.
    #[arg(long, value_delimiter = ',', required = true)]
    a: Vec<u32>,
    /// Comma-separated rationals b_1..b_m.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    b: Vec<BigRat>,
}

impl BasisArgs {
    fn spec(&self) -> Result<BasisSpec, String> {
        BasisSpec::new(self.a.clone(), self.b.clone()).map_err(|e| e.to_string())
    }
}

#[derive(Args)]
struct ReduceArgs {
    #[command(flatten)]
    basis: BasisArgs,
    #[arg(long)]
    operator: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Also print the first column of the operator matrix.
    #[arg(long)]
    column: bool,
    /// Also print the full operator matrix.
    #[arg(long)]
    matrix: bool,
}

#[derive(Args)]
struct ExpandArgs {
    #[command(flatten)]
    basis: BasisArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Check compatibility of the tables up to this basis index.
    #[arg(long)]
    nmax: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    basis: BasisArgs,
    #[arg(long)]
    operator: String,
    /// Recurrence for h in k; computed from the operator when omitted.
    #[arg(long, conflicts_with = "h")]
    lprime: Option<String>,
    /// Initial values h_0, h_1, ... for unrolling.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    initial: Vec<BigRat>,
    /// Explicit values h_0, h_1, ... instead of unrolling.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    h: Option<Vec<BigRat>>,
    #[arg(long, default_value_t = 15)]
    nmax: u64,
    /// Cut the sum at k = T (required when no b_i is a nonnegative integer).
    #[arg(long)]
    truncate: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct GcrdArgs {
    #[arg(required = true, allow_hyphen_values = true)]
    operators: Vec<String>,
    #[arg(long, default_value = "k")]
    var: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

enum Failure {
    Usage(String),
    Unverified,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn render(op: &OreOp, format: Format) -> Value {
    match format {
        Format::Json => to_json(op),
        Format::Latex => Value::String(to_latex(op)),
        Format::Text => Value::String(to_text(op)),
    }
}

fn show(op: &OreOp, format: Format) -> String {
    match format {
        Format::Latex => to_latex(op),
        _ => to_text(op),
    }
}

fn rats(v: &[BigRat]) -> Value {
    v.iter().map(|q| Value::String(rat_string(q))).collect()
}

fn basis_json(spec: &BasisSpec) -> Value {
    json!({ "a": spec.a(), "b": rats(spec.b()) })
}

fn print_json(v: Value) {
    println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
}

fn reduce(args: ReduceArgs) -> Result<(), Failure> {
    let spec = args.basis.spec()?;
    let l = parse_operator(&args.operator)?;
    let reducer = Reducer::new(&spec)?;
    let r = reducer.reduce(&l)?;
    let matrix = args.matrix.then(|| reducer.full_matrix(&l));
    let primitive = r.lprime_primitive();
    if let Format::Json = args.format {
        let mut out = json!({
            "schema": 1,
            "command": "reduce",
            "basis": basis_json(&spec),
            "operator": to_json(l.op()),
            "lprime": to_json(&r.lprime),
            "lprime_primitive": to_json(&primitive),
            "shifts": r.shifts,
        });
        if args.column {
            out["column"] = r.column.iter().map(to_json).collect();
        }
        if let Some(m) = &matrix {
            out["matrix"] = m.rows().iter().map(|row| row.iter().map(to_json).collect::<Value>()).collect();
        }
        print_json(out);
        return Ok(());
    }
    println!("L' = {}", show(&r.lprime, args.format));
    println!("L' (primitive) = {}", show(&primitive, args.format));
    if args.column {
        for (i, c) in r.column.iter().enumerate() {
            println!("L[{i},0] = {}", show(c, args.format));
        }
    }
    if let Some(m) = &matrix {
        for (i, row) in m.rows().iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                println!("L[{i},{j}] = {}", show(c, args.format));
            }
        }
    }
    Ok(())
}

fn expand(args: ExpandArgs) -> Result<(), Failure> {
    let spec = args.basis.spec()?;
    let table = ExpansionTable::compute(&spec)?;
    let compat = args.nmax.map(|n| check_compatibility(&table, n)).transpose()?;
    if let Format::Json = args.format {
        let mut out = table.to_json();
        out["schema"] = json!(1);
        out["command"] = json!("expand");
        if let Some(c) = &compat {
            out["compatible"] = json!(c.passed());
            out["first_failure"] = json!(c.first_failure().map(|r| r.n));
        }
        print_json(out);
    } else {
        let m = spec.m();
        let label = |d: i64| match d {
            0 => format!("P_{m}k"),
            d if d > 0 => format!("P_{m}k+{d}"),
            d => format!("P_{m}k{d}"),
        };
        for (j, row) in table.shift().iter().enumerate() {
            for (i, alpha) in row.iter().enumerate() {
                println!("alpha[{j}][{i}] = {}    ({})", alpha.display_with("k"), label(j as i64 - i as i64));
            }
        }
        for (j, (diag, up)) in table.x().iter().enumerate() {
            let j = j as i64;
            println!(
                "x {} = ({}) {} + ({}) {}",
                label(j),
                up.display_with("k"),
                label(j + 1),
                diag.display_with("k"),
                label(j)
            );
        }
        if let Some(c) = &compat {
            match c.first_failure() {
                None => println!("compatible up to n = {}", args.nmax.unwrap_or_default()),
                Some(row) => println!("compatibility fails at n = {}", row.n),
            }
        }
    }
    match compat {
        Some(c) if !c.passed() => Err(Failure::Unverified),
        _ => Ok(()),
    }
}

fn verify(args: VerifyArgs) -> Result<(), Failure> {
    let spec = args.basis.spec()?;
    let l: InputOperator = parse_operator(&args.operator)?;
    let kernel = KernelSpec::new(spec.clone());
    let len = match (kernel.required_prefix(args.nmax + l.order() as u64), args.truncate) {
        (Some(p), Some(t)) => p.min(t as usize + 1),
        (Some(p), None) => p,
        (None, Some(t)) => t as usize + 1,
        (None, None) => return Err(Failure::Usage("non-terminating kernel needs --truncate".into())),
    };
    let (lprime, h) = match &args.h {
        Some(values) => (None, Sequence::new(values.clone())),
        None => {
            let lp = match &args.lprime {
                Some(text) => parse_ore(text, Var::K)?,
                None => reduce_first_column(&l, &spec)?.lprime,
            };
            if args.initial.is_empty() {
                return Err(Failure::Usage("unrolling needs --initial".into()));
            }
            let h = unroll(&lp, &args.initial, len.saturating_sub(1))?;
            (Some(lp), h)
        }
    };
    let report = verify_solution(&l, &kernel, &h, args.nmax, args.truncate)?;
    let passed = report.passed();
    if let Format::Json = args.format {
        print_json(json!({
            "schema": 1,
            "command": "verify",
            "basis": basis_json(&spec),
            "operator": to_json(l.op()),
            "lprime": lprime.as_ref().map(to_json),
            "nmax": args.nmax,
            "passed": passed,
            "first_failure": report.first_failure(),
            "h": rats(h.values()),
            "y": rats(&report.y),
            "residuals": rats(&report.residuals),
        }));
    } else {
        if let Some(lp) = &lprime {
            println!("L' = {}", show(lp, args.format));
        }
        let shown: Vec<String> = h.values().iter().take(8).map(ToString::to_string).collect();
        println!("h = {}{}", shown.join(", "), if h.len() > 8 { ", ..." } else { "" });
        match report.first_failure() {
            None => println!("verified for n = 0..={}", args.nmax),
            Some(n) => println!("fails at n = {n}: residual {}", report.residuals[n]),
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Unverified)
    }
}

fn gcrd_cmd(args: GcrdArgs) -> Result<(), Failure> {
    let var = match args.var.as_str() {
        "k" => Var::K,
        "n" => Var::N,
        other => return Err(Failure::Usage(format!("unknown variable {other:?}"))),
    };
    let ops = args.operators.iter().map(|s| parse_ore(s, var)).collect::<Result<Vec<_>, _>>()?;
    let g = gcrd(&ops)?;
    match args.format {
        Format::Json => print_json(json!({ "schema": 1, "command": "gcrd", "gcrd": render(&g, args.format) })),
        f => println!("{}", show(&g, f)),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Reduce(a) => reduce(a),
        Command::Expand(a) => expand(a),
        Command::Verify(a) => verify(a),
        Command::Gcrd(a) => gcrd_cmd(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Unverified) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
