use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use pentagon::format::{self, matrix_json, scalars_json, to_pretty};
use pentagon::gallery::{self, GalleryItem, GalleryName, GallerySpec};
use pentagon::heisenberg::{self, splitting_check};
use pentagon::hopf::{self, HopfData};
use pentagon::pentagon::{hopf_transform, verify_hopf_equation};
use pentagon::{analyze, verify_pentagon, CheckReport, Error, Mat, Method, Side, Tensor2};

#[derive(Parser)]
#[command(
    name = "pentagon",
    version,
    about = "Exact checks for pentagon-equation solutions and their Hopf algebras"
)]
struct Cli {
    /// Print an indented plain-text report instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check R¹²R¹³R²³ = R²³R¹².
    Verify {
        solution: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
    },
    /// Length, coefficient bases, (co)invariants and dimension counts.
    Analyze {
        solution: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build P or H as structure constants.
    Construct {
        solution: PathBuf,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the Hopf algebra axioms.
    Axioms { hopf: PathBuf },
    /// Heisenberg double, canonical element and the induced matrix solution.
    Heisenberg {
        hopf: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare L with P of its matrix solution.
    SplitCheck { hopf: PathBuf },
    /// Check that the second solution is the first conjugated by u⊗u.
    Equiv {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        conjugator: PathBuf,
    },
    /// Dimension identities between P, H and the coinvariants.
    Lagrange { solution: PathBuf },
    /// Write a named example.
    Gallery {
        /// trivial, cyclic, sweedler4, nilsol1, nilsol2, group_hopf or sweedler_hopf
        name: String,
        /// Matrix size (trivial, cyclic) or group order (group_hopf)
        #[arg(long)]
        n: Option<usize>,
        /// Half the matrix size for nilsol1 and nilsol2
        #[arg(long)]
        q: Option<usize>,
        /// Conjugate a solution by a seeded random matrix; for nilsol2, draw X instead
        #[arg(long)]
        seed: Option<u64>,
        /// Q or Fp:<p>
        #[arg(long)]
        field: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Legs,
    Blocks,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "P")]
    P,
    #[value(name = "H")]
    H,
}

enum Failure {
    /// A mathematical check failed; the report explains which.
    Check(Value),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Check(json!({ "ok": false, "error": e.to_string() }))
        }
    }
}

type Outcome = Result<Value, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let emit = |v: &Value| {
        if cli.text {
            print!("{}", format::render_text(v));
        } else {
            print!("{}", to_pretty(v));
        }
    };
    match run(&cli.command) {
        Ok(report) => {
            let ok = report.get("ok").and_then(Value::as_bool).unwrap_or(true);
            emit(&report);
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Check(report)) => {
            emit(&report);
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_solution(path: &Path) -> Result<Tensor2, Failure> {
    Ok(format::parse_solution(&read(path)?)?)
}

fn load_hopf(path: &Path) -> Result<HopfData, Failure> {
    Ok(format::parse_hopf(&read(path)?)?)
}

fn one_based(w: &[usize]) -> Value {
    json!(w.iter().map(|i| i + 1).collect::<Vec<_>>())
}

fn checks_json(report: &CheckReport) -> Value {
    Value::Array(
        report
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "passed": c.passed,
                    "witness": c.witness.as_deref().map_or(Value::Null, one_based),
                })
            })
            .collect(),
    )
}

fn matrices_json(ms: &[Mat]) -> Value {
    Value::Array(ms.iter().map(matrix_json).collect())
}

fn run(command: &Command) -> Outcome {
    match command {
        Command::Verify { solution, method } => verify(&load_solution(solution)?, *method),
        Command::Analyze { solution, out } => {
            let report = analyze_report(&load_solution(solution)?)?;
            if let Some(out) = out {
                write(out, &to_pretty(&report))?;
            }
            Ok(report)
        }
        Command::Construct {
            solution,
            which,
            out,
        } => {
            let s = analyze(&load_solution(solution)?)?;
            let emb = match which {
                Which::P => hopf::construct_p(&s)?,
                Which::H => hopf::construct_h(&s)?,
            };
            if let Some(out) = out {
                write(out, &format::serialize_hopf(&emb.hopf))?;
            }
            let axioms = emb.hopf.check_axioms();
            Ok(json!({
                "command": "construct",
                "which": match which { Which::P => "P", Which::H => "H" },
                "ok": axioms.all_pass(),
                "dim": emb.hopf.dim(),
                "carrier": matrices_json(&emb.carrier),
                "axioms": checks_json(&axioms),
                "hopf": format::hopf_to_json(&emb.hopf),
            }))
        }
        Command::Axioms { hopf } => {
            let h = load_hopf(hopf)?;
            let report = h.check_axioms();
            Ok(json!({
                "command": "axioms",
                "ok": report.all_pass(),
                "dim": h.dim(),
                "axioms": checks_json(&report),
            }))
        }
        Command::Heisenberg { hopf, out } => heisenberg_report(&load_hopf(hopf)?, out.as_deref()),
        Command::SplitCheck { hopf } => {
            let l = load_hopf(hopf)?;
            let report = splitting_check(&l)?;
            Ok(json!({
                "command": "split-check",
                "ok": report.all_pass(),
                "dim": l.dim(),
                "checks": checks_json(&report),
            }))
        }
        Command::Equiv {
            first,
            second,
            conjugator,
        } => {
            let r1 = load_solution(first)?;
            let r2 = load_solution(second)?;
            let u = format::parse_matrix(&read(conjugator)?)?;
            equiv(&r1, &r2, &u)
        }
        Command::Lagrange { solution } => {
            let s = analyze(&load_solution(solution)?)?;
            let rep = s.lagrange_report()?;
            Ok(json!({
                "command": "lagrange",
                "ok": rep.relations_hold,
                "n": rep.n,
                "dim_p": rep.dim_p,
                "dim_h": rep.dim_h,
                "dim_coinvariants_left": rep.dim_coinv_l,
                "dim_coinvariants_right": rep.dim_coinv_r,
                "relations_hold": rep.relations_hold,
            }))
        }
        Command::Gallery {
            name,
            n,
            q,
            seed,
            field,
            out,
        } => {
            let mut spec = GallerySpec::new(
                name.parse::<GalleryName>()?,
                format::field_from_flag(field)?,
            );
            spec.n = *n;
            spec.q = *q;
            spec.seed = *seed;
            let text = match gallery::generate(&spec)? {
                GalleryItem::Solution(t) => format::serialize_solution(&t),
                GalleryItem::Hopf(h) => format::serialize_hopf(&h),
            };
            match out {
                Some(out) => {
                    write(out, &text)?;
                    Ok(json!({
                        "command": "gallery",
                        "ok": true,
                        "name": spec.name.as_str(),
                        "written": out.display().to_string(),
                    }))
                }
                None => {
                    let doc: Value = serde_json::from_str(&text).expect("serializer emits JSON");
                    Ok(doc)
                }
            }
        }
    }
}

fn verify(r: &Tensor2, method: MethodArg) -> Outcome {
    let method = match method {
        MethodArg::Legs => Method::Legs,
        MethodArg::Blocks => Method::Blocks,
        MethodArg::Both => Method::Both,
    };
    let verdict = verify_pentagon(r, method)?;
    let mut report = Map::new();
    report.insert("command".into(), json!("verify"));
    report.insert("ok".into(), json!(verdict.holds));
    report.insert("field".into(), format::field_to_json(r.field()));
    report.insert("n".into(), json!(r.n()));
    report.insert(
        "method".into(),
        json!(match method {
            Method::Legs => "legs",
            Method::Blocks => "blocks",
            Method::Both => "both",
        }),
    );
    report.insert("holds".into(), json!(verdict.holds));
    report.insert(
        "witness".into(),
        verdict.witness.as_deref().map_or(Value::Null, one_based),
    );
    if let Ok(t) = hopf_transform(r) {
        report.insert(
            "hopf_equation_for_inverse".into(),
            json!(verify_hopf_equation(&t)),
        );
    }
    Ok(Value::Object(report))
}

fn analyze_report(r: &Tensor2) -> Outcome {
    let s = analyze(r)?;
    let n = s.n();
    let m = s.length();
    let coinv_l = s.coinvariants(Side::Left)?;
    let coinv_r = s.coinvariants(Side::Right)?;
    let inv_l = s.r_invariants(Side::Left)?;
    let inv_r = s.r_invariants(Side::Right)?;
    let generated = s.generated_subalgebra()?.len();
    let lagrange = s.lagrange_report()?;
    let divides = (n * n) % (m * m) == 0;
    Ok(json!({
        "command": "analyze",
        "ok": lagrange.relations_hold && divides,
        "field": format::field_to_json(s.field()),
        "n": n,
        "length": m,
        "a_basis": matrices_json(s.a_basis()),
        "b_basis": matrices_json(s.b_basis()),
        "gamma": matrix_json(s.gamma()),
        "one_in_p": scalars_json(s.one_in_p()),
        "one_in_h": scalars_json(s.one_in_h()),
        "coinvariants": {
            "left": matrices_json(&coinv_l),
            "right": matrices_json(&coinv_r),
        },
        "r_invariants": {
            "left": matrices_json(&inv_l),
            "right": matrices_json(&inv_r),
        },
        "generated_subalgebra": { "dim": generated, "bound": m * m },
        "lagrange": {
            "dim_p": lagrange.dim_p,
            "dim_h": lagrange.dim_h,
            "dim_coinvariants_left": lagrange.dim_coinv_l,
            "dim_coinvariants_right": lagrange.dim_coinv_r,
            "relations_hold": lagrange.relations_hold,
        },
        "length_squared_divides_n_squared": divides,
    }))
}

fn heisenberg_report(l: &HopfData, out: Option<&Path>) -> Outcome {
    let d = heisenberg::build_double(l)?;
    let canonical = heisenberg::canonical_element(&d)?;
    let pentagon = heisenberg::verify_double_pentagon(&d, &canonical);
    let rep = heisenberg::regular_rep(&d);
    let solution = heisenberg::matrix_solution(l)?;
    if let Some(out) = out {
        write(out, &format::serialize_solution(solution.r()))?;
    }
    let sanity = d.sanity_report();
    let ok = pentagon && rep.bijective && rep.multiplicative && sanity.all_pass();
    Ok(json!({
        "command": "heisenberg",
        "ok": ok,
        "base_dim": l.dim(),
        "double_dim": d.dim(),
        "double_checks": checks_json(&sanity),
        "canonical_element_pentagon": pentagon,
        "regular_rep": {
            "rank": rep.rank,
            "bijective": rep.bijective,
            "multiplicative": rep.multiplicative,
        },
        "matrix_solution": {
            "n": solution.n(),
            "length": solution.length(),
        },
    }))
}

fn equiv(r1: &Tensor2, r2: &Tensor2, u: &Mat) -> Outcome {
    if u.invert().is_err() {
        return Err(Failure::Input("conjugator is not invertible".into()));
    }
    let conj = r1.conjugate(u)?;
    let conjugate_matches = &conj == r2;
    let s1 = analyze(r1)?;
    let s2 = analyze(r2)?;
    let p_matches = if conjugate_matches {
        hopf::conjugated_p_matches(&s1, &s2, u)?
    } else {
        false
    };
    Ok(json!({
        "command": "equiv",
        "ok": conjugate_matches && p_matches,
        "conjugate_matches": conjugate_matches,
        "length_first": s1.length(),
        "length_second": s2.length(),
        "p_structure_matches": p_matches,
    }))
}
