//! Command-line front end: table emission, verification suites and
//! scenario reports over the exact class-function machinery.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or data error.

mod emit;
mod report;
mod suites;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use gentab_core::bruhat::{build_instance, solve_signs, ClassTag};
use gentab_core::exactnum::parse_pol;
use gentab_core::hecke::{HeckeFamily, HeckeSpec};
use gentab_core::sigma;
use gentab_core::symbols::{self, Bipartition, Case};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Parser)]
#[command(
    name = "gentab",
    version,
    about = "Exact tables for class functions of finite reductive groups of types D4, D5 and adjoint E6"
)]
struct Cli {
    /// Output format for tables and reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact Iwahori-Hecke character values.
    ///
    /// Types: D4, D5 (equal parameters) and B4, B5 (distinguished generator
    /// with its own parameter, default q^2; the rank-4 two-parameter algebra
    /// is the twisted rank-5 principal series). Words: `1,2,3,4,5` for type
    /// D (diagram labels), `t,1,2,3` for type B.
    Hecke {
        #[arg(long = "type")]
        type_: String,
        /// Bipartition label, e.g. "1.31" or "211.".
        #[arg(long)]
        label: Option<String>,
        /// Comma-separated generator word.
        #[arg(long)]
        word: Option<String>,
        /// Parameter of the distinguished type-B generator (default q^2).
        #[arg(long)]
        param: Option<String>,
        /// JSON file with a list of {"label": ..., "word": ...} requests.
        #[arg(long)]
        batch: Option<PathBuf>,
    },
    /// Unipotent-character labels, families and Fourier matrices.
    Symbols {
        /// One of D4-split, D4-twisted, D5-split, D5-twisted.
        #[arg(long)]
        case: String,
        /// List all labels with rank and defect.
        #[arg(long)]
        list: bool,
        /// Emit a family with its Fourier matrix and row roles.
        #[arg(long)]
        fourier: bool,
        /// 1-based family index (f0, or f1/f2).
        #[arg(long)]
        family: Option<usize>,
    },
    /// Sigma-class splitting tables.
    Sigma {
        /// `e6` (needs --q and --twisted) or `d4`.
        #[arg(long)]
        case: String,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        twisted: Option<bool>,
        /// Write the table to this file (alias of --out).
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Counting-identity instances and the sign pipeline.
    Bruhat {
        /// D5-split or D5-twisted.
        #[arg(long)]
        case: String,
        /// Derive the signs and emit the support-value table.
        #[arg(long)]
        solve_signs: bool,
        /// Write the output to this file (alias of --out).
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Run a verification suite (exit code 1 on failure).
    Verify {
        /// One of: appendix-d5-split, appendix-d5-twisted, e6-tables,
        /// d4-tables, fourier, coxeter-counts.
        suite: String,
        /// Optional prime power for the scenario checks of e6-tables.
        #[arg(long)]
        q: Option<u64>,
    },
    /// Emit a fixed table: table1, table2, cuspidal2x3, table3, table4, d4.
    Emit { id: String },
    /// Scenario logic for a concrete prime power q.
    Scenario {
        #[arg(long)]
        q: u64,
        /// e6-split or e6-twisted.
        #[arg(long = "type")]
        type_: String,
    },
}

#[derive(Deserialize)]
struct BatchRequest {
    label: String,
    word: String,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e);
            std::process::exit(2);
        }
    }
}

fn write_output(out: &Option<PathBuf>, content: &str) -> gentab_core::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{}", content),
    }
    Ok(())
}

fn render_json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn parse_hecke_type(type_: &str, param: &Option<String>) -> gentab_core::Result<HeckeSpec> {
    let type_ = type_.trim();
    let (family, rank_str) = match type_.chars().next() {
        Some('D') | Some('d') => (HeckeFamily::D, &type_[1..]),
        Some('B') | Some('b') => (HeckeFamily::B, &type_[1..]),
        _ => {
            return Err(gentab_core::Error::WrongCase(format!(
                "unknown algebra type {} (expected e.g. D5 or B4)",
                type_
            )))
        }
    };
    let rank: usize = rank_str
        .parse()
        .map_err(|_| gentab_core::Error::WrongCase(format!("bad rank in {}", type_)))?;
    match family {
        HeckeFamily::D => {
            if param.is_some() {
                return Err(gentab_core::Error::WrongCase(
                    "type D has equal parameters; --param applies to type B".to_string(),
                ));
            }
            HeckeSpec::d(rank)
        }
        HeckeFamily::B => {
            let big_q = match param {
                Some(s) => parse_pol(s)?,
                None => parse_pol("q^2")?,
            };
            HeckeSpec::b(rank, big_q)
        }
    }
}

fn hecke_one(spec: &HeckeSpec, label: &str, word: &str) -> gentab_core::Result<serde_json::Value> {
    let bp = Bipartition::parse(label)?;
    let letters = spec.parse_word(word)?;
    let value = spec.char_value(&bp, &letters).map_err(|e| {
        if label.trim() == ".211" {
            gentab_core::Error::BadBipartition(
                "(.211) has size 4, not 5; the valid rank-5 family label is (.221)".to_string(),
            )
        } else {
            e
        }
    })?;
    Ok(json!({
        "label": label,
        "word": word,
        "value": value.to_string(),
    }))
}

fn run(cli: Cli) -> gentab_core::Result<i32> {
    match cli.cmd {
        Cmd::Hecke {
            type_,
            label,
            word,
            param,
            batch,
        } => {
            let spec = parse_hecke_type(&type_, &param)?;
            let result = if let Some(path) = batch {
                let text = std::fs::read_to_string(path)?;
                let requests: Vec<BatchRequest> = serde_json::from_str(&text)
                    .map_err(|e| gentab_core::Error::Parse(e.to_string()))?;
                let values = requests
                    .iter()
                    .map(|r| hecke_one(&spec, &r.label, &r.word))
                    .collect::<gentab_core::Result<Vec<_>>>()?;
                json!({ "type": type_, "results": values })
            } else {
                let label = label.ok_or_else(|| {
                    gentab_core::Error::WrongCase("--label is required without --batch".to_string())
                })?;
                let word = word.unwrap_or_default();
                let one = hecke_one(&spec, &label, &word)?;
                json!({ "type": type_, "results": [one] })
            };
            let content = match cli.format {
                Format::Json => render_json(&result),
                Format::Csv | Format::Text => {
                    let mut s = String::new();
                    for r in result["results"].as_array().unwrap() {
                        s.push_str(r["value"].as_str().unwrap());
                        s.push('\n');
                    }
                    s
                }
            };
            write_output(&cli.out, &content)?;
            Ok(0)
        }
        Cmd::Symbols {
            case,
            list,
            fourier,
            family,
        } => {
            let case = Case::parse(&case)?;
            let value = if fourier {
                let which = family.unwrap_or(1);
                let fam = symbols::family_fourier(case, which)?;
                json!({
                    "case": case.to_string(),
                    "family": which,
                    "name": fam.name,
                    "members": fam.members.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    "matrix": fam.matrix.iter().map(|row| {
                        row.iter().map(|v| v.to_string()).collect::<Vec<_>>()
                    }).collect::<Vec<_>>(),
                    "row_roles": fam.row_roles.iter().map(|r| match r {
                        symbols::RowRole::UniformSpan => "uniform-span",
                        symbols::RowRole::NonUniform => "non-uniform",
                    }).collect::<Vec<_>>(),
                })
            } else if list {
                let basis = symbols::enumerate_unipotent(case);
                json!({
                    "case": case.to_string(),
                    "count": basis.labels.len(),
                    "labels": basis.labels.iter().map(|l| {
                        let (rank, defect) = l.symbol.rank_defect();
                        json!({
                            "label": l.to_string(),
                            "rank": rank,
                            "defect": defect,
                        })
                    }).collect::<Vec<_>>(),
                })
            } else {
                return Err(gentab_core::Error::WrongCase(
                    "pass --list or --fourier".to_string(),
                ));
            };
            write_output(&cli.out, &render_json(&value))?;
            Ok(0)
        }
        Cmd::Sigma {
            case,
            q,
            twisted,
            emit,
        } => {
            let out = emit.or(cli.out);
            match case.as_str() {
                "e6" => {
                    let q = q.ok_or_else(|| {
                        gentab_core::Error::InvalidQ("--q is required for case e6".to_string())
                    })?;
                    let twisted = twisted.unwrap_or(false);
                    let rep = sigma::e6_scenario(q, twisted)?;
                    let value = scenario_json(&rep);
                    write_output(&out, &render_json(&value))?;
                }
                "d4" => {
                    let table = emit::emit_table("d4")?;
                    let content = render_table(&table, cli.format);
                    write_output(&out, &content)?;
                }
                other => {
                    return Err(gentab_core::Error::WrongCase(format!(
                        "unknown sigma case {} (expected e6 or d4)",
                        other
                    )))
                }
            }
            Ok(0)
        }
        Cmd::Bruhat {
            case,
            solve_signs: do_solve,
            emit,
        } => {
            let case = Case::parse(&case)?;
            let out = emit.or(cli.out);
            let instances = vec![
                build_instance(case, ClassTag::Reg82)?,
                build_instance(case, ClassTag::Sub6211)?,
            ];
            let instances_json: Vec<serde_json::Value> = instances
                .iter()
                .map(|inst| {
                    json!({
                        "tag": inst.tag.name(),
                        "word": inst.word,
                        "note": inst.note,
                        "records": inst.records.iter().map(|r| json!({
                            "label": r.label.to_string(),
                            "hecke": r.hecke.to_string(),
                            "f_unif": r.f_unif.to_string(),
                            "a1": r.a1.to_string(),
                            "a2": r.a2.to_string(),
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let value = if do_solve {
                let outcome = solve_signs(&instances)?;
                json!({
                    "case": case.to_string(),
                    "signs": {
                        "gamma_82": outcome.signs.gamma_82,
                        "gamma_6211": outcome.signs.gamma_6211,
                    },
                    "table4": {
                        "columns": outcome.table4.columns,
                        "rows": outcome.table4.rows.iter().map(|(name, vals)| json!({
                            "name": name,
                            "values": vals.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                        })).collect::<Vec<_>>(),
                    },
                    "audits": outcome.audits.iter().map(|a| json!({
                        "tag": a.tag.name(),
                        "word": a.word,
                        "uniform_part": a.uniform_part.to_string(),
                        "y_coefficient": a.y_coefficient.to_string(),
                        "rhs_positive_class": a.rhs_positive_class.to_string(),
                        "rhs_negative_class": a.rhs_negative_class.to_string(),
                        "surviving_gammas": a.surviving_gammas.iter()
                            .map(|g| g.to_string()).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                    "notes": outcome.notes,
                    "instances": instances_json,
                })
            } else {
                json!({
                    "case": case.to_string(),
                    "instances": instances_json,
                })
            };
            write_output(&out, &render_json(&value))?;
            Ok(0)
        }
        Cmd::Verify { suite, q } => {
            let report = suites::run_suite(&suite, q)?;
            let content = match cli.format {
                Format::Json => render_json(&serde_json::to_value(&report).unwrap()),
                Format::Csv | Format::Text => report.render_text(),
            };
            write_output(&cli.out, &content)?;
            Ok(if report.pass { 0 } else { 1 })
        }
        Cmd::Emit { id } => {
            let table = emit::emit_table(&id)?;
            let content = render_table(&table, cli.format);
            write_output(&cli.out, &content)?;
            Ok(0)
        }
        Cmd::Scenario { q, type_ } => {
            let twisted = match type_.as_str() {
                "e6-split" => false,
                "e6-twisted" => true,
                other => {
                    return Err(gentab_core::Error::WrongCase(format!(
                        "unknown scenario type {} (expected e6-split or e6-twisted)",
                        other
                    )))
                }
            };
            let rep = sigma::e6_scenario(q, twisted)?;
            let value = scenario_json(&rep);
            write_output(&cli.out, &render_json(&value))?;
            Ok(0)
        }
    }
}

fn scenario_json(rep: &sigma::ScenarioReport) -> serde_json::Value {
    json!({
        "q": rep.q,
        "twisted": rep.twisted,
        "k_action_trivial": rep.k_action_trivial,
        "class_count": rep.class_count,
        "dim_cf": rep.dim_cf,
        "f_invariant_cuspidal_count": rep.f_invariant_cuspidal_count,
        "unipotent_character_count": sigma::E6_UNIPOTENT_CHARACTER_COUNT,
        "basis": {
            "columns": rep.basis.columns,
            "rows": rep.basis.rows.iter().map(|(name, vals)| json!({
                "name": name,
                "values": vals.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        },
    })
}

fn render_table(table: &emit::EmittedTable, format: Format) -> String {
    match format {
        Format::Json => render_json(&table.to_json()),
        Format::Csv => table.to_csv(),
        Format::Text => table.to_text(),
    }
}
