//! Command-line front end.
//!
//! Exit codes: 0 success, 1 domain error (JSON on stderr), 2 usage error,
//! 3 when `verify` finds a mismatch the ledger does not cover.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::code::{parse_exps, CodeFamily, CodeSpec, Family, SimpleRootCode};
use crate::distance::{discrepancy_report, distance_exact, distance_paper_table};
use crate::error::{Error, Result};
use crate::field::make_field;
use crate::mds::{classify_mds, mds_verdicts};
use crate::oracle::{brute_enumerator, Budget};
use crate::qsc::{check_qsc_pair, qsc_params};
use crate::spectrum::{Label, Spectrum};
use crate::verify::{run_verify, Ledger};
use crate::weights::{simple_distance, weight_table};

#[derive(Parser, Debug)]
#[command(
    name = "rrcodes",
    version,
    about = "Repeated-root cyclic codes of length 5p^s over GF(p^m)"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Worker threads for sweeps (output does not depend on it).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    /// One JSON document per line for list outputs.
    Jsonl,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Field size, modulus and case.
    FieldInfo(FieldArgs),
    /// Labelled factorization of x^5 - 1.
    Factor(FieldArgs),
    /// Generator, dimension, dual and distance of one code.
    CodeInfo(CodeArgs),
    /// Minimum distance from the exact engine and/or the published tables.
    Distance {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
    },
    /// Weight distribution of a length-5 cyclic code.
    Weights {
        #[command(flatten)]
        field: FieldArgs,
        /// Factors in the generator, comma separated (empty for the full space).
        #[arg(long, value_delimiter = ',', conflicts_with = "all")]
        include: Vec<Label>,
        /// List every nonzero length-5 code.
        #[arg(long)]
        all: bool,
        /// Also enumerate codewords and compare.
        #[arg(long)]
        brute: bool,
    },
    /// MDS verdict for every code of the family.
    MdsScan {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        only_mds: bool,
    },
    /// Check a nested pair and derive synchronizable code parameters.
    Qsc {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        c1: String,
        #[arg(long)]
        c2: String,
        #[arg(long, default_value_t = 0)]
        al: u64,
        #[arg(long, default_value_t = 0)]
        ar: u64,
    },
    /// Run every oracle-versus-formula check.
    Verify {
        /// Known-discrepancy ledger (JSON); defaults to the bundled one.
        #[arg(long)]
        ledger: Option<std::path::PathBuf>,
    },
    /// Codes where the exact distance and the published tables disagree.
    Discrepancies(FamilyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Paper,
    Both,
}

#[derive(Args, Debug)]
struct FieldArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    m: u32,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, default_value_t = 1)]
    s: u32,
}

#[derive(Args, Debug)]
struct CodeArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Exponents as a label map ('{"U":2,"Phi":1}') or a list in factor order ('[2,1]' or '2,1').
    #[arg(long)]
    exps: String,
}

impl FieldArgs {
    fn spectrum(&self) -> Result<Spectrum> {
        Ok(Spectrum::new(&make_field(self.p, self.m)?))
    }
}

impl FamilyArgs {
    fn family(&self) -> Result<Family> {
        CodeFamily::new(&make_field(self.field.p, self.field.m)?, self.s)
    }
}

fn parse_code(family: &Family, text: &str) -> Result<CodeSpec> {
    let value = match serde_json::from_str::<Value>(text) {
        Ok(v) => v,
        Err(_) => {
            let list = text
                .split(',')
                .map(|t| t.trim().parse::<u64>().map(Value::from))
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::Invalid(format!("cannot read exponents from {text:?}")))?;
            Value::Array(list)
        }
    };
    parse_exps(family, &value)
}

impl CodeArgs {
    fn code(&self) -> Result<CodeSpec> {
        parse_code(&self.family.family()?, &self.exps)
    }
}

/// Rendered output: a JSON value plus a table and CSV rendering.
struct Output {
    json: Value,
    /// Items for line-delimited output; `None` for single documents.
    lines: Option<Vec<Value>>,
    table: String,
    csv: String,
}

impl Output {
    fn single(json: Value, table: String, csv: String) -> Output {
        Output {
            json,
            lines: None,
            table,
            csv,
        }
    }

    fn write(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Table => out.write_all(self.table.as_bytes()),
            Format::Csv => out.write_all(self.csv.as_bytes()),
            Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&self.json).unwrap()),
            Format::Jsonl => match &self.lines {
                Some(items) => items.iter().try_for_each(|v| writeln!(out, "{v}")),
                None => writeln!(out, "{}", self.json),
            },
        }
    }
}

fn key_values(pairs: &[(&str, String)]) -> (String, String) {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let table = pairs
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect();
    let csv = std::iter::once("key,value\n".to_string())
        .chain(pairs.iter().map(|(k, v)| format!("{k},{}\n", csv_field(v))))
        .collect();
    (table, csv)
}

fn csv_field(v: &str) -> String {
    if v.contains([',', '"', '\n']) {
        format!("\"{}\"", v.replace('"', "\"\""))
    } else {
        v.to_string()
    }
}

fn exps_text(code: &CodeSpec) -> String {
    code.exps_map()
        .iter()
        .map(|(l, e)| format!("{l}={e}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn opt_text<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

fn field_info(args: &FieldArgs) -> Result<Output> {
    let f = make_field(args.p, args.m)?;
    let sp = Spectrum::new(&f);
    let modulus = crate::poly::Poly::from_coeffs(
        &make_field(args.p, 1)?,
        f.modulus()
            .iter()
            .map(|&c| crate::field::FieldElement::from_packed(c))
            .collect(),
    );
    let omega = sp.omega().map(|w| f.format(w));
    let json = json!({
        "p": f.p(), "m": f.m(), "q": f.q(),
        "modulus": modulus.to_string(),
        "case": sp.case(),
        "omega": omega,
    });
    let (table, csv) = key_values(&[
        ("p", f.p().to_string()),
        ("m", f.m().to_string()),
        ("q", f.q().to_string()),
        ("modulus", modulus.to_string()),
        ("case", sp.case().to_string()),
        ("omega", opt_text(omega)),
    ]);
    Ok(Output::single(json, table, csv))
}

fn factor(args: &FieldArgs) -> Result<Output> {
    let sp = args.spectrum()?;
    let f = sp.field();
    let mut table = format!("case {}", sp.case());
    if let Some(w) = sp.omega() {
        table.push_str(&format!(", omega = {}", f.format(w)));
    }
    table.push('\n');
    let mut csv = String::from("label,poly,degree,coset,recip\n");
    for (i, fac) in sp.factors().iter().enumerate() {
        let recip = sp.factors()[sp.recip_index(i)].label;
        let coset = fac
            .coset
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        table.push_str(&format!(
            "{:<4} {:<20} deg {}  coset {{{coset}}}  recip {recip}\n",
            fac.label.name(),
            fac.poly.to_string(),
            fac.degree()
        ));
        csv.push_str(&format!(
            "{},{},{},{coset},{recip}\n",
            fac.label,
            fac.poly,
            fac.degree()
        ));
    }
    Ok(Output::single(sp.to_json(), table, csv))
}

fn code_info(args: &CodeArgs) -> Result<Output> {
    let code = args.code()?;
    let dual = code.dual_code();
    let exact = distance_exact(&code);
    let mds = classify_mds(&code)?;
    let json = json!({
        "code": code.to_json(),
        "n": code.n(),
        "generator": code.generator_poly().to_string(),
        "degree": code.generator_degree(),
        "dimension": code.dimension(),
        "dual": dual.to_json()["exps"],
        "dual_containing": code.is_dual_containing(),
        "distance": exact.distance,
        "witness_t": exact.witness_t,
        "mds": mds.is_mds,
        "singleton_defect": mds.defect,
    });
    let generator = code.generator_poly().to_string();
    let (table, csv) = key_values(&[
        ("exponents", exps_text(&code)),
        ("n", code.n().to_string()),
        ("degree", code.generator_degree().to_string()),
        ("dimension", code.dimension().to_string()),
        ("generator", generator),
        ("dual", exps_text(&dual)),
        ("dual_containing", code.is_dual_containing().to_string()),
        ("distance", exact.distance.to_string()),
        ("witness_t", opt_text(exact.witness_t)),
        ("mds", mds.is_mds.to_string()),
        ("singleton_defect", opt_text(mds.defect)),
    ]);
    Ok(Output::single(json, table, csv))
}

fn distance(args: &CodeArgs, mode: Mode) -> Result<Output> {
    let code = args.code()?;
    let mut json = serde_json::Map::new();
    let mut pairs = Vec::new();
    let exact = (mode != Mode::Paper).then(|| distance_exact(&code));
    let paper = (mode != Mode::Exact).then(|| distance_paper_table(&code));
    if let Some(e) = exact {
        json.insert("exact".into(), json!(e.distance));
        json.insert("witness_t".into(), json!(e.witness_t));
        pairs.push(("exact", e.distance.to_string()));
        pairs.push(("witness_t", opt_text(e.witness_t)));
    }
    if let Some(p) = &paper {
        json.insert("paper".into(), json!(p.value));
        json.insert("paper_row".into(), json!(p.row));
        pairs.push(("paper", opt_text(p.value.as_distance())));
        pairs.push(("paper_row", opt_text(p.row.clone())));
    }
    if let (Some(e), Some(p)) = (exact, &paper) {
        let agrees = p.value.as_distance() == Some(e.distance);
        json.insert("agrees".into(), json!(agrees));
        pairs.push(("agrees", agrees.to_string()));
    }
    let (table, csv) = key_values(&pairs);
    Ok(Output::single(Value::Object(json), table, csv))
}

fn weights(field: &FieldArgs, include: &[Label], all: bool, brute: bool) -> Result<Output> {
    let fam = CodeFamily::new(&make_field(field.p, field.m)?, 1)?;
    let sp = fam.spectrum();
    let codes = if all {
        SimpleRootCode::all(sp)
            .into_iter()
            .filter(|c| !c.is_zero_code())
            .collect()
    } else {
        vec![SimpleRootCode::new(sp, include)?]
    };
    let budget = Budget::default();
    let mut items = Vec::new();
    let mut table = String::new();
    let mut csv = String::from(if all {
        "code,weight,multiplicity\n"
    } else {
        ""
    });
    for c in &codes {
        let w = weight_table(c)?;
        let mut item = json!({
            "code": c.describe(),
            "dimension": c.dimension(),
            "distance": simple_distance(c),
            "counts": w.counts.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        });
        if brute {
            let b = brute_enumerator(c, &budget)?;
            item["brute_agrees"] = json!(b == w);
        }
        table.push_str(&format!(
            "{:<16} k={} d={}  A = {}\n",
            c.describe(),
            c.dimension(),
            opt_text(simple_distance(c)),
            w.counts
                .iter()
                .map(u128::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        ));
        if all {
            for (i, a) in w.counts.iter().enumerate() {
                csv.push_str(&format!("{},{i},{a}\n", c.describe()));
            }
        } else {
            csv.push_str(&w.to_csv());
        }
        items.push(item);
    }
    let json = if all {
        Value::Array(items.clone())
    } else {
        items[0].clone()
    };
    Ok(Output {
        json,
        lines: all.then_some(items),
        table,
        csv,
    })
}

fn mds_scan_cmd(args: &FamilyArgs, only_mds: bool) -> Result<Output> {
    let fam = args.family()?;
    let verdicts = mds_verdicts(&fam, &Budget::default())?;
    let mut items = Vec::new();
    let mut table = String::new();
    let mut csv = String::from("exps,degree,distance,defect,is_mds,clause\n");
    for (code, v) in verdicts.iter().filter(|(_, v)| !only_mds || v.is_mds) {
        items.push(json!({"code": code.to_json(), "verdict": v}));
        let clause = v.clause.map(|c| format!("{c:?}"));
        table.push_str(&format!(
            "{:<40} deg {:>4}  d {:>4}  defect {:>4}  {}\n",
            exps_text(code),
            v.degree,
            v.distance,
            opt_text(v.defect),
            clause
                .clone()
                .unwrap_or_else(|| if v.is_mds { "MDS".into() } else { "-".into() })
        ));
        csv.push_str(&format!(
            "{},{},{},{},{},{}\n",
            exps_text(code),
            v.degree,
            v.distance,
            opt_text(v.defect),
            v.is_mds,
            clause.unwrap_or_default()
        ));
    }
    Ok(Output {
        json: Value::Array(items.clone()),
        lines: Some(items),
        table,
        csv,
    })
}

fn qsc(args: &FamilyArgs, c1: &str, c2: &str, al: u64, ar: u64) -> Result<Output> {
    let fam = args.family()?;
    let (c1, c2) = (parse_code(&fam, c1)?, parse_code(&fam, c2)?);
    let check = check_qsc_pair(&c1, &c2)?;
    let params = if check.eligible {
        Some(qsc_params(&c1, al, ar)?)
    } else {
        None
    };
    let json = json!({
        "eligible": check.eligible,
        "reasons": check.reasons,
        "n_out": params.map(|p| p.n_out),
        "k_out": params.map(|p| p.k_out),
        "q": fam.field().q(),
        "a_l": al,
        "a_r": ar,
    });
    let mut pairs = vec![("eligible", check.eligible.to_string())];
    if let Some(p) = params {
        pairs.push(("params", p.to_string()));
    }
    for r in &check.reasons {
        pairs.push(("reason", r.clone()));
    }
    let (table, csv) = key_values(&pairs);
    Ok(Output::single(json, table, csv))
}

fn verify(ledger: Option<&std::path::Path>) -> Result<(Output, bool)> {
    let ledger = match ledger {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
            Ledger::from_json(&text)?
        }
        None => Ledger::default(),
    };
    let report = run_verify(&ledger, &Budget::default())?;
    let mut csv = String::from("check,cases,key,known,detail\n");
    for c in &report.checks {
        if c.mismatches.is_empty() {
            csv.push_str(&format!("{},{},,,\n", c.name, c.cases));
        }
        for m in &c.mismatches {
            csv.push_str(&format!(
                "{},{},{},{},{}\n",
                c.name,
                c.cases,
                m.key,
                m.known,
                csv_field(&m.detail)
            ));
        }
    }
    let clean = report.unexpected() == 0;
    let json = json!({"checks": report.checks, "known": report.known(), "unexpected": report.unexpected()});
    Ok((Output::single(json, report.to_table(), csv), clean))
}

fn discrepancies(args: &FamilyArgs) -> Result<Output> {
    let fam = args.family()?;
    let found = discrepancy_report(&fam, |_| true, &Budget::default())?;
    let items: Vec<Value> = found.iter().map(|d| d.to_json()).collect();
    let mut table = String::new();
    let mut csv = String::from("exps,exact,paper,row\n");
    for d in &found {
        let paper = opt_text(d.paper.as_distance());
        let row = d.row.clone().unwrap_or_default();
        table.push_str(&format!(
            "{:<40} exact {:>5}  published {:>5}  {row}\n",
            exps_text(&d.code),
            d.exact,
            paper
        ));
        csv.push_str(&format!(
            "{},{},{paper},{row}\n",
            exps_text(&d.code),
            d.exact
        ));
    }
    table.push_str(&format!(
        "{} of {} codes disagree\n",
        found.len(),
        fam.spec_count().unwrap_or(0)
    ));
    Ok(Output {
        json: Value::Array(items.clone()),
        lines: Some(items),
        table,
        csv,
    })
}

fn dispatch(cli: &Cli) -> Result<(Output, i32)> {
    let (output, code) = match &cli.command {
        Command::FieldInfo(a) => (field_info(a)?, 0),
        Command::Factor(a) => (factor(a)?, 0),
        Command::CodeInfo(a) => (code_info(a)?, 0),
        Command::Distance { code, mode } => (distance(code, *mode)?, 0),
        Command::Weights {
            field,
            include,
            all,
            brute,
        } => (weights(field, include, *all, *brute)?, 0),
        Command::MdsScan { family, only_mds } => (mds_scan_cmd(family, *only_mds)?, 0),
        Command::Qsc {
            family,
            c1,
            c2,
            al,
            ar,
        } => (qsc(family, c1, c2, *al, *ar)?, 0),
        Command::Verify { ledger } => {
            let (o, clean) = verify(ledger.as_deref())?;
            (o, if clean { 0 } else { 3 })
        }
        Command::Discrepancies(a) => (discrepancies(a)?, 0),
    };
    Ok((output, code))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build();
    let result = match pool {
        Ok(pool) => pool.install(|| dispatch(&cli)),
        Err(e) => Err(Error::Invalid(format!("cannot start worker pool: {e}"))),
    };
    let result = result.and_then(|(output, code)| {
        output
            .write(cli.format, out)
            .map_err(|e| Error::Invalid(format!("write failed: {e}")))?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(
                err,
                "{}",
                json!({"error": e.kind(), "message": e.to_string()})
            );
            1
        }
    }
}
