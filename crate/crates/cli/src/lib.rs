//! Command-line front end. [`run`] takes argv and returns the exit code and
//! the text for stdout and stderr, so tests can drive it without a process.

pub mod args;
pub mod report;
pub mod verify;

use clap::Parser;
use serde_json::{json, Value};
use twistroots::enumeration::enumerate_classes;
use twistroots::homology::{find_square_root, psi_twist_a1, psi_twist_b};
use twistroots::max_degree::{caseb_census, exceptional_table};
use twistroots::primary::PrimaryQuery;
use twistroots::{
    construction_dataset, enumerate_datasets, max_degree_bruteforce, max_degree_closed_form,
    primary_exists_bruteforce, primary_exists_closed_form, root_exists, root_exists_closed_form,
    DataSet, DataSetType, DegreeBound, Error, GenusQuery, MaxDegreeResult,
};

use args::{Cli, Command, GenusArg, HomologyOp, Method, TableKind, Twist};
use report::{Report, Table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: String) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg,
        }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text)
            } else {
                // --help and --version
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let format = cli.format;
    let result = match cli.jobs {
        Some(0) => return Outcome::usage("error: --jobs must be at least 1\n".into()),
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| execute(cli.command)),
            Err(e) => return Outcome::usage(format!("error: cannot start {k} workers: {e}\n")),
        },
        None => execute(cli.command),
    };
    match result {
        Ok(report) => Outcome {
            code: if report.ok { EXIT_OK } else { EXIT_FAILED },
            stdout: report.render(format),
            stderr: String::new(),
        },
        Err(e) => Outcome::usage(format!("error: {e}\n")),
    }
}

fn resolve_genus(kind: DataSetType, g: &GenusArg) -> Result<i64, Error> {
    match (g.genus, g.surface_genus) {
        (Some(gp), _) => Ok(gp),
        (None, Some(s)) => match kind {
            DataSetType::A => Ok(s - 2),
            DataSetType::B if s % 2 == 0 => Ok((s - 2) / 2),
            DataSetType::B => Err(Error::InvalidInput(format!(
                "--surface-genus: type B twists need an even surface genus, got {s}"
            ))),
        },
        (None, None) => unreachable!("clap enforces the genus group"),
    }
}

fn execute(cmd: Command) -> Result<Report, Error> {
    match cmd {
        Command::Enumerate {
            kind,
            genus,
            degree,
            classes,
        } => {
            let kind = kind.into();
            let gp = resolve_genus(kind, &genus)?;
            let mut q = GenusQuery::new(kind, gp);
            if let Some(n) = degree {
                q = q.with_degree(n);
            }
            let list: Vec<DataSet> = if classes {
                enumerate_classes(q)?
            } else {
                enumerate_datasets(q)?.collect()
            };
            Ok(dataset_list(&list))
        }
        Command::Exists { kind, genus } => {
            let kind = kind.into();
            let gp = resolve_genus(kind, &genus)?;
            exists(kind, gp)
        }
        Command::Maxdeg {
            kind,
            genus,
            method,
        } => {
            let kind = kind.into();
            let gp = resolve_genus(kind, &genus)?;
            maxdeg(kind, gp, method)
        }
        Command::Table { which, limit } => match which {
            TableKind::Exceptional => exceptional(limit),
            TableKind::CensusB => census(limit),
        },
        Command::Primary {
            kind,
            degree,
            genus,
            construct,
            g0,
            m,
        } => {
            let kind = kind.into();
            if construct {
                let ds = construction_dataset(kind, degree, g0.unwrap_or(0), m.unwrap_or(0))?;
                Ok(dataset_list(std::slice::from_ref(&ds)))
            } else {
                primary(kind, degree, genus.expect("clap requires --genus"))
            }
        }
        Command::Homology { op, genus, target } => homology(op, genus, target),
        Command::Verify { suite, limit } => {
            if !(0..=twistroots::max_degree::TABLE_LIMIT_CAP).contains(&limit) {
                return Err(Error::InvalidInput(format!(
                    "--limit must lie in [0, {}]",
                    twistroots::max_degree::TABLE_LIMIT_CAP
                )));
            }
            verify_report(suite, limit)
        }
    }
}

fn cones_cell(ds: &DataSet) -> String {
    ds.cones()
        .iter()
        .map(|c| format!("({},{})", c.c, c.order))
        .collect::<Vec<_>>()
        .join(";")
}

fn dataset_list(list: &[DataSet]) -> Report {
    let mut table = Table::new(&["type", "n", "g0", "a", "b", "cones", "genus"]);
    for ds in list {
        table.push(vec![
            ds.kind().to_string(),
            ds.n().to_string(),
            ds.g0().to_string(),
            ds.a().to_string(),
            ds.b().to_string(),
            cones_cell(ds),
            ds.genus().map(|g| g.to_string()).unwrap_or_default(),
        ]);
    }
    let plain = if list.is_empty() {
        "no data sets".to_string()
    } else {
        list.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("\n")
    };
    Report {
        plain,
        json: json!(list),
        table,
        ok: true,
    }
}

fn exists(kind: DataSetType, gp: i64) -> Result<Report, Error> {
    let searched = root_exists(kind, gp)?;
    let closed = root_exists_closed_form(kind, gp);
    let clause = match kind {
        DataSetType::A => "g = 3 or g ≥ 5",
        DataSetType::B => "g' ≥ 2",
    };
    let mut table = Table::new(&["type", "genus", "exists", "clause"]);
    table.push(vec![kind.to_string(), gp.to_string(), searched.to_string(), clause.into()]);
    Ok(Report {
        plain: format!("{searched} (type {kind} roots exist iff {clause})"),
        json: json!({"type": kind, "genus": gp, "exists": searched, "clause": clause}),
        table,
        ok: searched == closed,
    })
}

fn witness_cell(r: &MaxDegreeResult) -> String {
    r.witness.as_ref().map(|w| w.to_string()).unwrap_or_default()
}

fn maxdeg(kind: DataSetType, gp: i64, method: Method) -> Result<Report, Error> {
    let mut results = Vec::new();
    if method != Method::Closed {
        results.push(("search", max_degree_bruteforce(kind, gp)?));
    }
    if method != Method::Brute {
        results.push(("closed", max_degree_closed_form(kind, gp)?));
    }
    let mut agree = None;
    if let [(_, searched), (_, closed)] = results.as_mut_slice() {
        let ok = match searched.exact() {
            Some(n) => closed.bound.admits(n),
            None => closed.bound == DegreeBound::NoRoot,
        };
        *closed = closed.clone().with_resolved(searched);
        agree = Some(ok);
    }

    let mut table = Table::new(&["method", "type", "genus", "bound", "case_id", "resolved", "witness"]);
    let mut lines = Vec::new();
    for (name, r) in &results {
        let resolved = r.resolved.map(|n| n.to_string()).unwrap_or_default();
        table.push(vec![
            name.to_string(),
            kind.to_string(),
            gp.to_string(),
            r.bound.to_string(),
            r.case_id.to_string(),
            resolved.clone(),
            witness_cell(r),
        ]);
        let mut line = format!("{name}: {} [{}]", r.bound, r.case_id);
        if let Some(n) = r.resolved {
            line.push_str(&format!(", resolved N = {n}"));
        }
        if let Some(w) = &r.witness {
            line.push_str(&format!(", witness {w}"));
        }
        lines.push(line);
    }
    if let Some(ok) = agree {
        lines.push(if ok { "agree".into() } else { "disagree".into() });
    }
    let json_results: Vec<Value> = results
        .iter()
        .map(|(name, r)| json!({"method": name, "result": r}))
        .collect();
    Ok(Report {
        plain: lines.join("\n"),
        json: json!({"type": kind, "genus": gp, "results": json_results, "agree": agree}),
        table,
        ok: agree != Some(false),
    })
}

fn exceptional(limit: i64) -> Result<Report, Error> {
    let rows = exceptional_table(limit)?;
    let mut table = Table::new(&["g", "N", "case_id", "witness"]);
    for r in &rows {
        table.push(vec![r.g.to_string(), r.n.to_string(), r.case_id.to_string(), r.witness.to_string()]);
    }
    let mut plain = format!("type A genera g <= {limit} with N < g/4: {}", rows.len());
    for r in &rows {
        plain.push_str(&format!("\n{:>5}  N = {:<4} {}", r.g, r.n, r.witness));
    }
    Ok(Report {
        plain,
        json: json!(rows),
        table,
        ok: true,
    })
}

fn census(limit: i64) -> Result<Report, Error> {
    let c = caseb_census(limit)?;
    let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let entries: [(&str, &[i64]); 5] = [
        ("case11", &c.case11),
        ("case11_n_eq_g", &c.case11_n_eq_g),
        ("case12", &c.case12),
        ("case12_n_eq_g_plus_1", &c.case12_n_eq_g_plus_1),
        ("case12_two_cone_maximal", &c.case12_two_cone_maximal),
    ];
    let mut table = Table::new(&["metric", "count", "genera"]);
    let mut plain = format!("type B census, g' <= {limit}");
    for (name, v) in entries {
        table.push(vec![name.into(), v.len().to_string(), join(v)]);
        plain.push_str(&format!("\n{name:<24} {:>4}", v.len()));
    }
    plain.push_str(&format!("\ncase 12 genera with N = g' + 1: {}", join(&c.case12_n_eq_g_plus_1)));
    Ok(Report {
        plain,
        json: json!(c),
        table,
        ok: true,
    })
}

fn primary(kind: DataSetType, n: i64, gp: i64) -> Result<Report, Error> {
    let q = PrimaryQuery::new(kind, n, gp);
    let closed = primary_exists_closed_form(q)?;
    let searched = primary_exists_bruteforce(q)?;
    let mut table = Table::new(&["type", "n", "genus", "search", "closed"]);
    table.push(vec![kind.to_string(), n.to_string(), gp.to_string(), searched.to_string(), closed.to_string()]);
    let mut plain = format!("{searched} (primary, type {kind}, n = {n}, genus {gp})");
    if searched != closed {
        plain.push_str(&format!("\nclosed form says {closed}: disagree"));
    }
    Ok(Report {
        plain,
        json: json!({"type": kind, "n": n, "genus": gp, "search": searched, "closed": closed}),
        table,
        ok: searched == closed,
    })
}

fn homology(op: HomologyOp, g: usize, target: Option<Twist>) -> Result<Report, Error> {
    let matrix_report = |m: twistroots::F2Matrix| {
        let mut table = Table::new(&["row"]);
        for line in m.to_string().lines() {
            table.push(vec![line.to_string()]);
        }
        Report {
            plain: m.to_string(),
            json: json!(m),
            table,
            ok: true,
        }
    };
    match op {
        HomologyOp::PsiA1 => Ok(matrix_report(psi_twist_a1(g)?)),
        HomologyOp::PsiB => Ok(matrix_report(psi_twist_b(g)?)),
        HomologyOp::Sqrt => {
            let target = target.unwrap_or(if g % 2 == 0 { Twist::B } else { Twist::A1 });
            let (name, m) = match target {
                Twist::A1 => ("psi(t_a1)", psi_twist_a1(g)?),
                Twist::B => ("psi(t_b)", psi_twist_b(g)?),
            };
            let root = find_square_root(&m)?;
            let mut table = Table::new(&["target", "genus", "root"]);
            table.push(vec![
                name.into(),
                g.to_string(),
                root.as_ref().map(|r| r.to_string().replace('\n', " ")).unwrap_or_default(),
            ]);
            let plain = match &root {
                None => format!("{name}, g = {g}: no square root found (exhaustive)"),
                Some(r) => format!("{name}, g = {g}: square root\n{r}"),
            };
            Ok(Report {
                plain,
                json: json!({"target": name, "genus": g, "root": root}),
                table,
                ok: true,
            })
        }
    }
}

fn verify_report(suite: args::Suite, limit: i64) -> Result<Report, Error> {
    let claims = verify::run_suite(suite, limit)?;
    let mut table = Table::new(&["suite", "claim", "result", "detail"]);
    let mut lines = Vec::new();
    for c in &claims {
        let verdict = if c.passed { "PASS" } else { "FAIL" };
        table.push(vec![c.suite.into(), c.claim.clone(), verdict.into(), c.detail.clone()]);
        let mut line = format!("{verdict} {:<7} {}", c.suite, c.claim);
        if !c.passed {
            line.push_str(&format!(" (first failure: {})", c.detail));
        }
        lines.push(line);
    }
    let ok = claims.iter().all(|c| c.passed);
    Ok(Report {
        plain: lines.join("\n"),
        json: json!(claims),
        table,
        ok,
    })
}
