//! Command-line front end.
//!
//! Codes travel through standard input and output in the text format of
//! [`LinearCode::to_text`]; classification results use the database line
//! format of [`ClassRecord::to_line`]. With `--json` every command prints a
//! single JSON object tagged with [`SCHEMA`].
//!
//! Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.

use std::fs;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog;
use crate::classify::{
    census_by_min_weight, classify_self_dual, extremal_bound, extremal_records,
    format_database, indecomposable_count, mass_check, parse_database, sharpened_bound,
    ClassRecord,
};
use crate::code::LinearCode;
use crate::enumerators::{cwe, euclid_we, hamming_we, swe};
use crate::error::CodeError;
use crate::maps::{beta, marking_classes, phi, phi_inv, phi_inv_marked, psi, sigma, Marking};
use crate::symbol::Flavor;
use crate::symmetry::{are_equivalent, aut_group, canonical_form};
use crate::tables;

/// Version tag of the JSON output.
pub const SCHEMA: &str = "lcodes/1";

#[derive(Parser, Debug)]
#[command(name = "lcodes", version, about = "Additive codes over the Klein four group")]
struct Cli {
    /// Print one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Length, dimension, duality, evenness and minimum weights.
    Info { file: Option<String> },
    /// The dual code.
    Dual { file: Option<String> },
    /// A weight enumerator.
    Wenum {
        #[arg(long, value_enum, default_value = "swe")]
        kind: Kind,
        file: Option<String>,
    },
    /// Apply a structure map.
    Map {
        #[arg(long, value_enum)]
        which: Which,
        /// Marking over `abc` for `phi-inv`.
        #[arg(long)]
        marking: Option<String>,
        file: Option<String>,
    },
    /// Automorphism group order and generators.
    Aut { file: Option<String> },
    /// Canonical basis of the equivalence class.
    Canon { file: Option<String> },
    /// A signed permutation carrying the first code onto the second.
    Equiv { first: String, second: String },
    /// Classify self-dual codes of one length.
    Classify {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        even: bool,
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Compare the class sum with the mass formula.
    Mass {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        even: bool,
    },
    /// Summarize a classification database.
    Census { file: Option<String> },
    /// Marking classes of a Kleinian code.
    Markings { file: Option<String> },
    /// Classes meeting the minimum weight bound.
    Extremal {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        even: bool,
    },
    /// Print a named code.
    Named { name: Vec<String> },
    /// Print one of the reference tables.
    Tables {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        number: u8,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Kind {
    Cwe,
    Swe,
    Hamming,
    Euclid,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Which {
    Phi,
    PhiInv,
    Sigma,
    Psi,
    Beta,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<CodeError> for Failure {
    fn from(e: CodeError) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = std::result::Result<Output, Failure>;

struct Output {
    text: String,
    json: Value,
}

impl Output {
    fn new(text: String, json: Value) -> Output {
        Output { text, json }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Io<'_> {
    fn read(&mut self, file: Option<&str>) -> std::result::Result<String, Failure> {
        match file {
            None | Some("-") => {
                if self.stdin_used {
                    return Err(Failure::Usage("standard input can be read only once".into()));
                }
                self.stdin_used = true;
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| Failure::Domain(format!("reading standard input: {e}")))?;
                Ok(s)
            }
            Some(path) => {
                fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{path}: {e}")))
            }
        }
    }

    fn code(&mut self, file: Option<&str>) -> std::result::Result<LinearCode, Failure> {
        Ok(LinearCode::parse(&self.read(file)?)?)
    }
}

fn code_json(code: &LinearCode) -> Value {
    json!({
        "flavor": code.flavor().tag().to_string(),
        "length": code.len(),
        "basis": code.basis().iter().map(|w| w.format(code.flavor())).collect::<Vec<_>>(),
    })
}

fn code_output(code: &LinearCode) -> Output {
    Output::new(code.to_text(), json!({ "code": code_json(code) }))
}

fn record_json(r: &ClassRecord) -> Value {
    json!({
        "length": r.len(),
        "even": r.even,
        "min_ewt": r.min_ewt,
        "aut_order": r.aut_order.to_string(),
        "orbit_size": r.orbit_size.to_string(),
        "basis": r.code.basis().iter().map(|w| w.format(Flavor::L)).collect::<Vec<_>>(),
        "swe": r.swe.to_string(),
        "euclid": r.euclid.to_string(),
    })
}

fn opt_weight(r: crate::error::Result<u32>) -> Option<u32> {
    r.ok()
}

fn info(code: &LinearCode) -> Output {
    let min_ewt = opt_weight(code.min_ewt());
    let min_hwt = opt_weight(code.min_hwt());
    let show = |v: Option<u32>| v.map_or("-".to_string(), |d| d.to_string());
    let text = format!(
        "flavor {}\nlength {}\ndimension {}\nsize {}\nself-orthogonal {}\nself-dual {}\neven {}\nmin-ewt {}\nmin-hwt {}\n",
        code.flavor().tag(),
        code.len(),
        code.dimension_text(),
        code.size(),
        code.is_self_orthogonal(),
        code.is_self_dual(),
        code.is_even(),
        show(min_ewt),
        show(min_hwt),
    );
    let json = json!({
        "code": code_json(code),
        "dimension": code.dimension_text(),
        "size": code.size().to_string(),
        "self_orthogonal": code.is_self_orthogonal(),
        "self_dual": code.is_self_dual(),
        "even": code.is_even(),
        "min_ewt": min_ewt,
        "min_hwt": min_hwt,
    });
    Output::new(text, json)
}

fn with_threads<T: Send>(
    threads: Option<usize>,
    f: impl FnOnce() -> T + Send,
) -> std::result::Result<T, Failure> {
    match threads {
        None => Ok(f()),
        Some(0) => Err(Failure::Usage("--threads must be positive".into())),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| Failure::Domain(e.to_string())),
    }
}

fn census(records: &[ClassRecord]) -> Output {
    let histogram = census_by_min_weight(records);
    let indecomposable = indecomposable_count(records);
    let even = records.iter().filter(|r| r.even).count();
    let mut text = format!(
        "classes {}\neven {}\nindecomposable {}\n",
        records.len(),
        even,
        indecomposable
    );
    for (d, count) in &histogram {
        text.push_str(&format!("d={d} {count}\n"));
    }
    let json = json!({
        "classes": records.len(),
        "even": even,
        "indecomposable": indecomposable,
        "by_min_ewt": histogram.iter().map(|(d, c)| (d.to_string(), json!(c))).collect::<serde_json::Map<_, _>>(),
    });
    Output::new(text, json)
}

fn execute(command: Command, io: &mut Io) -> Outcome {
    match command {
        Command::Info { file } => Ok(info(&io.code(file.as_deref())?)),
        Command::Dual { file } => Ok(code_output(&io.code(file.as_deref())?.dual())),
        Command::Wenum { kind, file } => {
            let code = io.code(file.as_deref())?;
            let p = match kind {
                Kind::Cwe => cwe(&code)?,
                Kind::Swe => swe(&code)?,
                Kind::Hamming => hamming_we(&code)?,
                Kind::Euclid => euclid_we(&code)?,
            };
            Ok(Output::new(
                format!("{p}\n"),
                json!({ "kind": format!("{kind:?}").to_lowercase(), "polynomial": p.to_string() }),
            ))
        }
        Command::Map {
            which,
            marking,
            file,
        } => {
            if marking.is_some() && !matches!(which, Which::PhiInv) {
                return Err(Failure::Usage("--marking applies only to phi-inv".into()));
            }
            let code = io.code(file.as_deref())?;
            let image = match which {
                Which::Phi => phi(&code)?,
                Which::PhiInv => match marking {
                    Some(m) => phi_inv_marked(&code, &Marking::parse(&m)?)?,
                    None => phi_inv(&code)?,
                },
                Which::Sigma => sigma(&code)?,
                Which::Psi => psi(&code)?,
                Which::Beta => {
                    let b = beta(&code)?;
                    let rows = b.format_rows();
                    return Ok(Output::new(
                        rows.clone(),
                        json!({ "length": b.len(), "rows": rows.lines().collect::<Vec<_>>() }),
                    ));
                }
            };
            Ok(code_output(&image))
        }
        Command::Aut { file } => {
            let code = io.code(file.as_deref())?;
            let group = aut_group(&code)?;
            let gens: Vec<String> = group.generators().iter().map(|g| g.describe()).collect();
            let mut text = format!("order {}\n", group.order());
            for g in &gens {
                text.push_str(g);
                text.push('\n');
            }
            Ok(Output::new(
                text,
                json!({
                    "order": group.order().to_string(),
                    "orbit_size": group.orbit_size().to_string(),
                    "generators": gens,
                }),
            ))
        }
        Command::Canon { file } => {
            let form = canonical_form(&io.code(file.as_deref())?)?;
            let mut out = code_output(&form.code);
            out.json["transporter"] = json!(form.transporter.describe());
            Ok(out)
        }
        Command::Equiv { first, second } => {
            let a = io.code(Some(&first))?;
            let b = io.code(Some(&second))?;
            Ok(match are_equivalent(&a, &b)? {
                Some(g) => Output::new(
                    format!("{}\n", g.describe()),
                    json!({ "equivalent": true, "transporter": g.describe() }),
                ),
                None => Output::new(
                    "inequivalent\n".into(),
                    json!({ "equivalent": false }),
                ),
            })
        }
        Command::Classify {
            length,
            even,
            out,
            threads,
        } => {
            let records = with_threads(threads, || classify_self_dual(length, even))??;
            let db = format_database(&records);
            let json = json!({
                "length": length,
                "even_only": even,
                "classes": records.len(),
                "records": records.iter().map(record_json).collect::<Vec<_>>(),
            });
            match out {
                Some(path) => {
                    fs::write(&path, &db).map_err(|e| Failure::Domain(format!("{path}: {e}")))?;
                    Ok(Output::new(format!("{} classes written to {path}\n", records.len()), json))
                }
                None => Ok(Output::new(db, json)),
            }
        }
        Command::Mass { length, even } => {
            let records = classify_self_dual(length, even)?;
            let report = mass_check(&records, length, even);
            Ok(Output::new(
                format!("{report}\n"),
                json!({
                    "length": length,
                    "even_only": even,
                    "class_sum": report.class_sum.to_string(),
                    "expected": report.expected.to_string(),
                    "match": report.matches(),
                }),
            ))
        }
        Command::Census { file } => {
            let records = parse_database(&io.read(file.as_deref())?)?;
            Ok(census(&records))
        }
        Command::Markings { file } => {
            let code = io.code(file.as_deref())?;
            let classes = marking_classes(&code)?;
            let mut text = String::new();
            for c in &classes {
                text.push_str(&format!(
                    "{} {} {}\n",
                    c.representative, c.stabilizer_order, c.orbit_size
                ));
            }
            let json = json!({
                "classes": classes.iter().map(|c| json!({
                    "marking": c.representative.to_string(),
                    "aut_order": c.stabilizer_order.to_string(),
                    "orbit_size": c.orbit_size,
                })).collect::<Vec<_>>(),
            });
            Ok(Output::new(text, json))
        }
        Command::Extremal { length, even } => {
            let records = classify_self_dual(length, even)?;
            let found = extremal_records(&records, length, even);
            let bound = extremal_bound(length, even);
            let mut text = format!("bound {bound}\n");
            if !even {
                text.push_str(&format!("sharpened {}\n", sharpened_bound(length)));
            }
            text.push_str(&format!("extremal {}\n", found.len()));
            text.push_str(&format_database(&found));
            Ok(Output::new(
                text,
                json!({
                    "length": length,
                    "even_only": even,
                    "bound": bound,
                    "records": found.iter().map(record_json).collect::<Vec<_>>(),
                }),
            ))
        }
        Command::Named { name } => {
            if name.is_empty() {
                return Err(Failure::Usage(format!(
                    "a name is required; known names: {}",
                    catalog::NAMES.join(", ")
                )));
            }
            Ok(code_output(&catalog::named(&name.join(" "))?))
        }
        Command::Tables { number } => {
            let text = match number {
                1 => tables::table1()?,
                2 => tables::table2()?,
                _ => tables::table3()?,
            };
            let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
            let json = json!({ "table": number, "rows": rows });
            Ok(Output::new(text, json))
        }
    }
}

/// Runs one command line (`args[0]` is the program name) and returns the
/// exit code.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let json = cli.json;
    let mut io = Io {
        stdin,
        stdin_used: false,
    };
    let (code, message) = match execute(cli.command, &mut io) {
        Ok(out) => {
            let body = if json {
                let mut v = out.json;
                if let Value::Object(map) = &mut v {
                    map.insert("schema".into(), json!(SCHEMA));
                }
                format!("{v}\n")
            } else {
                out.text
            };
            if stdout.write_all(body.as_bytes()).is_err() {
                return 1;
            }
            return 0;
        }
        Err(Failure::Usage(m)) => (2, m),
        Err(Failure::Domain(m)) => (1, m),
    };
    let _ = writeln!(stderr, "error: {message}");
    code
}
