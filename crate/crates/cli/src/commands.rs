use std::fmt::Write as _;
use std::fs;
use std::ops::RangeInclusive;
use std::path::Path;

use qpv_core::partition::{parse_system_file, ListedPartition};
use qpv_core::verify::{load_cases, verify_rr};
use qpv_core::{
    builtin_case, builtin_cases, verify_all, verify_case, CaseReport, Error, PartitionSystem,
    Product, Series, Side, Variables,
};
use serde_json::{json, Value};

use crate::args::{EnumerateArgs, ExpandArgs, Format, VerifyArgs};

/// What a command produced: the text to print and whether every check passed.
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

/// A configuration or input problem, reported on stderr with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<Outcome, UsageError>;

fn read(path: &Path) -> Result<String, UsageError> {
    fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn expand(args: &ExpandArgs) -> CmdResult {
    let product = Product::parse(&args.expr).map_err(|e| match e {
        Error::Parse { column, .. } => UsageError(format!(
            "{e}\n  {}\n  {:>width$}",
            args.expr,
            "^",
            width = column
        )),
        e => e.into(),
    })?;
    let series = product.expand(args.trunc)?;
    Ok(Outcome::ok(render_series(&series, args.output.format)))
}

fn render_series(s: &Series, format: Format) -> String {
    match format {
        Format::Json => json_text(&s.to_json()),
        Format::Tsv => s.to_tsv(),
        Format::Pretty => format!("{} + O(q^{})\n", s.pretty(), s.truncation() + 1),
    }
}

/// A source of partitions: an identity case or a bare colour system.
enum Source {
    Case(Box<qpv_core::IdentityCase>),
    System(PartitionSystem),
}

impl Source {
    fn name(&self) -> String {
        match self {
            Source::Case(c) => c.name.clone(),
            Source::System(_) => "matrix".into(),
        }
    }

    fn variables(&self) -> Result<Variables, UsageError> {
        Ok(match self {
            Source::Case(c) => c.variables()?,
            Source::System(s) => Variables::new(s.colours.labels())?,
        })
    }

    fn list(&self, side: Side, n: u32) -> Result<Vec<ListedPartition>, UsageError> {
        match self {
            Source::Case(c) => Ok(c.list(side, n)?),
            Source::System(s) => {
                let labels = s.colours.labels().to_vec();
                Ok(s.list(n, &labels, &self.variables()?))
            }
        }
    }

    fn series(&self, side: Side, truncation: u32) -> Result<Series, UsageError> {
        match self {
            Source::Case(c) => Ok(c.series(side, truncation)?),
            Source::System(s) => Ok(s.generating_series(&self.variables()?, truncation)?),
        }
    }
}

fn pick_case(
    cases: Vec<qpv_core::IdentityCase>,
    name: Option<&str>,
) -> Result<qpv_core::IdentityCase, UsageError> {
    match name {
        Some(n) => cases
            .into_iter()
            .find(|c| c.name == n)
            .ok_or_else(|| Error::UnknownCase(n.to_string()).into()),
        None if cases.len() == 1 => Ok(cases.into_iter().next().unwrap()),
        None => Err(UsageError(
            "case file holds several cases; choose one with --case".into(),
        )),
    }
}

fn source(args: &EnumerateArgs) -> Result<Source, UsageError> {
    if let Some(path) = &args.matrix {
        if args.side != Side::A {
            return Err(UsageError(
                "a colour system file has only the A side".into(),
            ));
        }
        return Ok(Source::System(parse_system_file(&read(path)?)?.system));
    }
    if let Some(path) = &args.case_file {
        let case = pick_case(load_cases(&read(path)?)?, args.case.as_deref())?;
        return Ok(Source::Case(Box::new(case)));
    }
    match &args.case {
        Some(name) => Ok(Source::Case(Box::new(builtin_case(name)?))),
        None => Err(UsageError("give --case, --case-file or --matrix".into())),
    }
}

fn weights(args: &EnumerateArgs) -> Result<RangeInclusive<u32>, UsageError> {
    match (args.n, args.nmax) {
        (Some(n), _) => Ok(n..=n),
        (None, Some(m)) => Ok(0..=m),
        (None, None) => Err(UsageError("give --n or --nmax".into())),
    }
}

pub fn enumerate(args: &EnumerateArgs) -> CmdResult {
    let src = source(args)?;
    let range = weights(args)?;
    let vars = src.variables()?;
    let names = vars.names();
    let header = json!({ "case": src.name(), "side": args.side.to_string(), "variables": names });
    let format = args.output.format;

    if args.count_only {
        let series = src.series(args.side, *range.end())?;
        let mut rows = Vec::new();
        for n in range {
            for (exps, coef) in series.slice(n)? {
                rows.push((n, exps.to_vec(), coef.to_string()));
            }
        }
        let text = match format {
            Format::Json => {
                let counts: Vec<Value> = rows
                    .iter()
                    .map(|(n, e, c)| json!({ "n": n, "stats": e, "count": c }))
                    .collect();
                let mut v = header;
                v["counts"] = Value::Array(counts);
                json_text(&v)
            }
            Format::Tsv | Format::Pretty => {
                let sep = if format == Format::Tsv { "\t" } else { " " };
                let mut out = ["n"]
                    .into_iter()
                    .chain(names.iter().map(String::as_str))
                    .chain(["count"])
                    .collect::<Vec<_>>()
                    .join(sep);
                out.push('\n');
                for (n, e, c) in &rows {
                    let cols: Vec<String> = e.iter().map(u32::to_string).collect();
                    let mid = if cols.is_empty() {
                        String::new()
                    } else {
                        format!("{}{sep}", cols.join(sep))
                    };
                    writeln!(out, "{n}{sep}{mid}{c}").unwrap();
                }
                out
            }
        };
        return Ok(Outcome::ok(text));
    }

    let mut listed = Vec::new();
    for n in range {
        listed.extend(src.list(args.side, n)?);
    }
    let text = match format {
        Format::Json => {
            let mut v = header;
            v["partitions"] = json!(listed);
            json_text(&v)
        }
        Format::Tsv => {
            let mut out = String::from("weight\tparts");
            for n in names {
                write!(out, "\t{n}").unwrap();
            }
            out.push('\n');
            for p in &listed {
                write!(out, "{}\t{}", p.weight, p.parts).unwrap();
                for s in &p.stats {
                    write!(out, "\t{s}").unwrap();
                }
                out.push('\n');
            }
            out
        }
        Format::Pretty => {
            let mut out = String::new();
            let mut current = None;
            for p in &listed {
                if current != Some(p.weight) {
                    current = Some(p.weight);
                    let count = listed.iter().filter(|q| q.weight == p.weight).count();
                    writeln!(out, "weight {}: {count} partitions", p.weight).unwrap();
                }
                let stats: Vec<String> = names
                    .iter()
                    .zip(&p.stats)
                    .map(|(n, s)| format!("{n}={s}"))
                    .collect();
                let parts = if p.parts.is_empty() {
                    "()".to_string()
                } else {
                    format!("({})", p.parts)
                };
                let line = format!("  {parts:<24} {}", stats.join(" "));
                writeln!(out, "{}", line.trim_end()).unwrap();
            }
            out
        }
    };
    Ok(Outcome::ok(text))
}

fn reports(args: &VerifyArgs) -> Result<Vec<CaseReport>, UsageError> {
    if let Some(path) = &args.case_file {
        let cases = load_cases(&read(path)?)?;
        if args.target == "all" {
            return Ok(verify_all(&cases, args.nmax, args.trunc)?);
        }
        let case = pick_case(cases, Some(&args.target))?;
        return Ok(vec![verify_case(&case, args.nmax, args.trunc)?]);
    }
    match args.target.as_str() {
        "all" => {
            let mut out = verify_all(&builtin_cases(), args.nmax, args.trunc)?;
            out.push(verify_rr(args.trunc)?);
            Ok(out)
        }
        "rr" => Ok(vec![verify_rr(args.trunc)?]),
        name => Ok(vec![verify_case(
            &builtin_case(name)?,
            args.nmax,
            args.trunc,
        )?]),
    }
}

pub fn verify(args: &VerifyArgs) -> CmdResult {
    let reports = reports(args)?;
    let passed = reports.iter().all(CaseReport::passed);
    let text = match args.output.format {
        Format::Json => json_text(&json!({
            "status": if passed { "pass" } else { "fail" },
            "reports": reports,
        })),
        Format::Tsv => {
            let mut out = String::from("case\tcheck\tstatus\tfirst_q\n");
            for r in &reports {
                for c in &r.checks {
                    let q = c.first_discrepancy.as_ref().map(|d| d.q_exp.to_string());
                    let status = if c.passed() { "pass" } else { "fail" };
                    writeln!(
                        out,
                        "{}\t{}\t{status}\t{}",
                        r.case,
                        c.check_id,
                        q.unwrap_or_default()
                    )
                    .unwrap();
                }
            }
            out
        }
        Format::Pretty => pretty_reports(&reports),
    };
    Ok(Outcome { text, passed })
}

fn pretty_reports(reports: &[CaseReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let mark = if r.passed() { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{mark} {} (n_max {}, truncation {}, {} checks)",
            r.case,
            r.n_max,
            r.truncation,
            r.checks.len()
        )
        .unwrap();
        for c in r.failures() {
            write!(out, "  fail {}", c.check_id).unwrap();
            if let Some(d) = &c.first_discrepancy {
                let exps: Vec<String> = d
                    .colour_exps
                    .iter()
                    .map(|(k, v)| format!("{k}^{v}"))
                    .collect();
                write!(
                    out,
                    ": first discrepancy at q^{} [{}]: {} vs {}",
                    d.q_exp,
                    exps.join(" "),
                    d.lhs,
                    d.rhs
                )
                .unwrap();
            }
            out.push('\n');
            for n in &c.notes {
                writeln!(out, "    {n}").unwrap();
            }
        }
    }
    let good = reports.iter().filter(|r| r.passed()).count();
    writeln!(out, "{good} of {} cases passed", reports.len()).unwrap();
    out
}
