//! `qtri`: command-line front end for qtri-core.

mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qtri_core::braiding::TwistResult;
use qtri_core::catalog::ENTRIES;
use qtri_core::io::{double_file, to_json, Input};
use qtri_core::limit::Specializability;
use qtri_core::{
    build_presentation, catalog_build, check_specializable, classical_limit, classify, integral_presentation,
    is_twist_equivalent, nichols_analysis, parse_input, validate, verify_hopf, verify_sl2_triples, ClassifyOptions,
    Scalar,
};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "qtri", version, about = "Exact computations for braided doubles and Nichols algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Input JSON file (braiding, realization or double)
    file: PathBuf,
    /// Emit a machine-readable JSON report
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify the braiding of an input file
    Classify {
        #[command(flatten)]
        common: Common,
        /// Parameters assumed to be positive reals, comma separated
        #[arg(long, value_delimiter = ',')]
        positive: Vec<String>,
        /// Bound on Cartan entries searched for non-monomial q_ii
        #[arg(long, default_value_t = 8)]
        amax: u32,
    },
    /// Hilbert dimensions and relations of the Nichols algebra
    Nichols {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// Also list a kernel basis in each degree
        #[arg(long)]
        relations: bool,
    },
    /// Generators-and-relations presentation of the double
    Double {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Consistency checks on double data
    Validate {
        #[command(flatten)]
        common: Common,
    },
    /// Hopf axioms, quasi-YD condition and triangularity
    VerifyHopf {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Integral form, specialization and classical brackets
    Limit {
        #[command(flatten)]
        common: Common,
        /// Square roots r_i of q_ii, as i=r with 1-based i, comma separated
        #[arg(long, value_delimiter = ',')]
        sqrt: Vec<String>,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Build a catalog entry, or list the entries
    Catalog {
        /// Entry name; omit to list all entries
        name: Option<String>,
        #[arg(long = "type")]
        cartan_type: Option<String>,
        #[arg(long)]
        rank: Option<String>,
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        r: Option<String>,
        #[arg(long = "N")]
        big_n: Option<String>,
        #[arg(long)]
        nu: Option<String>,
        #[arg(long)]
        p: Option<String>,
        /// Write the entry here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Decide twist equivalence of two braidings
    Twist {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug)]
struct Failure(String);

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Exit code and output of a successful run.
struct Outcome {
    ok: bool,
    text: String,
}

impl Outcome {
    fn new(ok: bool, json: bool, text: String, value: Value) -> Self {
        let text = if json { serde_json::to_string_pretty(&value).expect("json values serialize") } else { text };
        Outcome { ok, text }
    }
}

fn read_input(path: &PathBuf) -> Result<Input, Failure> {
    let s = std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_input(&s).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn envelope(command: &str, body: Value) -> Value {
    let mut v = json!({ "version": qtri_core::io::FORMAT_VERSION, "command": command });
    if let (Value::Object(m), Value::Object(b)) = (&mut v, body) {
        m.extend(b);
    }
    v
}

fn parse_roots(data: &qtri_core::DoubleData, specs: &[String]) -> Result<Option<Vec<Scalar>>, Failure> {
    if specs.is_empty() {
        return Ok(None);
    }
    let n = data.rank();
    let mut roots: Vec<Option<Scalar>> = match &data.sqrt {
        Some(r) => r.iter().cloned().map(Some).collect(),
        None => vec![None; n],
    };
    for s in specs {
        let (i, r) = s.split_once('=').ok_or_else(|| Failure(format!("--sqrt {s:?}: expected i=r")))?;
        let i: usize = i.trim().parse().map_err(|_| Failure(format!("--sqrt {s:?}: bad index")))?;
        if i == 0 || i > n {
            return Err(Failure(format!("--sqrt {s:?}: index out of range 1..={n}")));
        }
        roots[i - 1] = Some(data.field().parse(r.trim()).map_err(|e| Failure(format!("--sqrt {s:?}: {e}")))?);
    }
    roots
        .into_iter()
        .enumerate()
        .map(|(i, r)| r.ok_or_else(|| Failure(format!("no square root given for index {}", i + 1))))
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Classify { common, positive, amax } => {
            let b = read_input(&common.file)?.braiding()?;
            let rep = classify(&b, &ClassifyOptions { positive, amax })?;
            Ok(Outcome::new(true, common.json, report::classification_text(&rep), envelope("classify", report::classification_json(&rep))))
        }
        Command::Nichols { common, max_degree, relations } => {
            let b = read_input(&common.file)?.braiding()?;
            let rep = nichols_analysis(&b, max_degree);
            Ok(Outcome::new(
                true,
                common.json,
                report::nichols_text(&rep, relations),
                envelope("nichols", report::nichols_json(&rep, relations)),
            ))
        }
        Command::Double { common, max_degree } => {
            let data = read_input(&common.file)?.double()?;
            let p = build_presentation(&data, max_degree)?;
            Ok(Outcome::new(true, common.json, p.to_string(), envelope("double", report::presentation_json(&p))))
        }
        Command::Validate { common } => {
            let data = read_input(&common.file)?.double()?;
            let rep = validate(&data);
            Ok(Outcome::new(rep.passed(), common.json, rep.to_string(), envelope("validate", report::validation_json(&rep))))
        }
        Command::VerifyHopf { common, max_degree } => {
            let data = read_input(&common.file)?.double()?;
            let reports = verify_hopf(&data, max_degree);
            let ok = reports.iter().all(|r| r.passed);
            let text = reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
            let body = json!({ "passed": ok, "max_degree": max_degree, "reports": reports.iter().map(report::verification_json).collect::<Vec<_>>() });
            Ok(Outcome::new(ok, common.json, text, envelope("verify-hopf", body)))
        }
        Command::Limit { common, sqrt, max_degree } => {
            let data = read_input(&common.file)?.double()?;
            let roots = parse_roots(&data, &sqrt)?;
            let pres = integral_presentation(&data, roots.as_deref(), max_degree)?;
            let verdict = check_specializable(&pres);
            let mut text = format!("{pres}specialization: {verdict}\n");
            let mut body = json!({
                "integral": report::integral_json(&pres),
                "specializable": report::specializability_json(&verdict),
            });
            let mut ok = pres.verified();
            if verdict == Specializability::Ok {
                let table = classical_limit(&pres)?;
                let sl2 = verify_sl2_triples(&table);
                ok &= sl2.passed;
                text.push_str(&format!("{table}{sl2}\n"));
                body["brackets"] = report::table_json(&table);
                body["sl2"] = report::verification_json(&sl2);
            }
            body["passed"] = json!(ok);
            Ok(Outcome::new(ok, common.json, text.trim_end().to_string(), envelope("limit", body)))
        }
        Command::Catalog { name, cartan_type, rank, n, r, big_n, nu, p, out, json } => {
            let Some(name) = name else {
                let text = ENTRIES.iter().map(|e| format!("{:<18} {}  [{}]", e.name, e.summary, e.schema)).collect::<Vec<_>>().join("\n");
                let list = ENTRIES.iter().map(|e| json!({"name": e.name, "schema": e.schema, "summary": e.summary})).collect::<Vec<_>>();
                return Ok(Outcome::new(true, json, text, envelope("catalog", json!({ "entries": list }))));
            };
            let params: BTreeMap<String, String> = [("type", cartan_type), ("rank", rank), ("n", n), ("r", r), ("N", big_n), ("nu", nu), ("p", p)]
                .into_iter()
                .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
                .collect();
            let data = catalog_build(&name, &params)?;
            let file = to_json(&double_file(&data));
            match out {
                Some(path) => {
                    std::fs::write(&path, format!("{file}\n")).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
                    let msg = format!("wrote {} to {}", data.name.as_deref().unwrap_or(&name), path.display());
                    Ok(Outcome::new(true, json, msg, envelope("catalog", json!({ "written": path.display().to_string() }))))
                }
                None => Ok(Outcome { ok: true, text: file }),
            }
        }
        Command::Twist { first, second, json } => {
            let (a, b) = (read_input(&first)?.braiding()?, read_input(&second)?.braiding()?);
            let res = is_twist_equivalent(&a, &b)?;
            let (ok, text, body) = match &res {
                TwistResult::Yes(sigma) => {
                    let mut lines = vec!["twist equivalent".to_string()];
                    for (i, row) in sigma.iter().enumerate() {
                        for (j, s) in row.iter().enumerate().skip(i + 1) {
                            lines.push(format!("sigma_{}{} = {s}", i + 1, j + 1));
                        }
                    }
                    (true, lines.join("\n"), json!({ "equivalent": true, "sigma": report::scalar_matrix(sigma) }))
                }
                TwistResult::No(i, j) => {
                    let what = if i == j { format!("q_{0}{0}", i + 1) } else { format!("q_{0}{1} q_{1}{0}", i + 1, j + 1) };
                    (false, format!("not twist equivalent: {what} differs"), json!({ "equivalent": false, "witness": [i + 1, j + 1] }))
                }
            };
            Ok(Outcome::new(ok, json, text, envelope("twist", body)))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    qtri_core::init_threads();
    match run(cli) {
        Ok(o) => {
            println!("{}", o.text);
            if o.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
