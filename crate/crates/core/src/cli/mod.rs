//! Command-line interface.

mod reproduce;
mod spec;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::chartab::{
    dixon_character_table_with_prime, CharacterTable, TableJson,
};
use crate::constructions::{family, FamilyTables, Series};
use crate::depth::{ordinary_depth_with_tables, DepthReport};
use crate::error::{Error, Result};
use crate::graphs::verify_lemma_with;
use crate::perm::{class_fusion, PermGroup, DEFAULT_CAP};

pub use reproduce::{reproduce, CheckLine};
pub use spec::{resolve_pair, GroupSpec, Member};

/// Environment variable overriding the default enumeration cap.
pub const CAP_ENV: &str = "SUBDEPTH_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "subdepth", version, about = "Ordinary depth of subgroups of permutation groups")]
pub struct Cli {
    /// Maximum number of group elements to enumerate [env: SUBDEPTH_CAP] [default: 1000000]
    #[arg(long, global = true)]
    pub cap: Option<usize>,

    /// Prime for Dixon's method; must be 1 mod the group exponent and exceed 2*sqrt(|G|)
    #[arg(long, global = true)]
    pub prime: Option<u64>,

    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Character table of a group
    Table {
        #[arg(long)]
        group: String,
    },
    /// Depth of a subgroup, with the verdict of every criterion
    Depth {
        #[arg(long)]
        group: String,
        /// Defaults to H when --group names a family member
        #[arg(long)]
        subgroup: Option<String>,
        /// Character table of the group, as written by `table`
        #[arg(long)]
        group_table: Option<PathBuf>,
        #[arg(long)]
        subgroup_table: Option<PathBuf>,
    },
    /// Build one member of a subgroup family
    Family {
        #[arg(long)]
        series: Series,
        /// n for series A and B, step for series C
        #[arg(long)]
        n: usize,
        /// Also compute the depth and compare with the designed value
        #[arg(long)]
        verify: bool,
    },
    /// Check the correspondence between Y_n and Gamma_n, parts (i) to (v)
    Lemma {
        #[arg(long)]
        n: usize,
    },
    /// Recompute the reference depth values, one PASS/FAIL line each
    Reproduce,
}

impl clap::ValueEnum for Series {
    fn value_variants<'a>() -> &'a [Self] {
        &[Series::A, Series::B, Series::C]
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
        }))
    }
}

pub struct RunConfig {
    pub cap: usize,
    pub prime: Option<u64>,
    pub format: Format,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> Result<Self> {
        let cap = match (cli.cap, std::env::var(CAP_ENV)) {
            (Some(c), _) => c,
            (None, Ok(v)) => v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{CAP_ENV}={v:?} is not a number")))?,
            (None, Err(_)) => DEFAULT_CAP,
        };
        if cap == 0 {
            return Err(Error::Parse("cap must be at least 1".into()));
        }
        Ok(Self {
            cap,
            prime: cli.prime,
            format: cli.format,
        })
    }
}

/// Exit status for an error: 2 for bad input, 3 for the enumeration cap,
/// 4 for an internal consistency failure, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::InvalidArgument(_)
        | Error::NotSubgroup(_)
        | Error::NotInGroup(_)
        | Error::DegreeMismatch { .. }
        | Error::Json(_) => 2,
        Error::CapExceeded { .. } => 3,
        Error::Inconsistency(_) => 4,
        _ => 1,
    }
}

/// Parses `args` and runs the command, writing results to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
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
    match RunConfig::from_cli(&cli).and_then(|cfg| execute(&cli.command, &cfg, out)) {
        Ok(code) => code,
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(command: &Command, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Table { group } => {
            let (g, _) = resolve_pair(&GroupSpec::parse(group)?, None, cfg.cap)?;
            let t = dixon_character_table_with_prime(&g, cfg.prime)?;
            emit_table(&t, cfg.format, out)?;
        }
        Command::Depth {
            group,
            subgroup,
            group_table,
            subgroup_table,
        } => {
            let sub_spec = subgroup.as_deref().map(GroupSpec::parse).transpose()?;
            let (g, h) = resolve_pair(&GroupSpec::parse(group)?, sub_spec.as_ref(), cfg.cap)?;
            let h = h.ok_or_else(|| Error::Parse("depth needs --subgroup".into()))?;
            let tg = load_or_compute(group_table.as_ref(), &g, cfg.prime)?;
            let th = load_or_compute(subgroup_table.as_ref(), &h, cfg.prime)?;
            let emb = class_fusion(g, h)?;
            let report = ordinary_depth_with_tables(&emb, &tg, &th)?;
            emit_depth(&report, cfg.format, out)?;
        }
        Command::Family { series, n, verify } => {
            let inst = family(*series, *n, cfg.cap)?;
            let mut summary = FamilySummary {
                schema: 1,
                spec: inst.spec().to_string(),
                degree: inst.degree(),
                g_order: inst.g.order(),
                h_order: inst.h.order(),
                k_order: inst.k.order(),
                core_order: inst.core.order(),
                sigma: inst.sigma.as_ref().map(ToString::to_string),
                expected_depth: inst.expected_depth(),
                depth: None,
            };
            let mut code = 0;
            if *verify {
                let tables = FamilyTables::new(&inst, cfg.prime)?;
                let emb = class_fusion(inst.g.clone(), inst.h.clone())?;
                let r = ordinary_depth_with_tables(&emb, &tables.g, &tables.h)?;
                if r.depth != inst.expected_depth() {
                    code = 4;
                }
                summary.depth = Some(r);
            }
            emit_family(&summary, cfg.format, out)?;
            return Ok(code);
        }
        Command::Lemma { n } => {
            let inst = family(Series::A, *n, cfg.cap)?;
            let tables = FamilyTables::new(&inst, cfg.prime)?;
            let r = verify_lemma_with(&inst, &tables)?;
            match cfg.format {
                Format::Json => write_json(&r, out)?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    w.write_record(["part", "pass", "detail"]).map_err(csv_err)?;
                    for p in &r.parts {
                        w.write_record([p.part, if p.pass { "true" } else { "false" }, &p.detail])
                            .map_err(csv_err)?;
                    }
                    w.flush()?;
                }
                Format::Text => {
                    for p in &r.parts {
                        writeln!(out, "({}) {} {}", p.part, pass_word(p.pass), p.detail)?;
                    }
                }
            }
            return Ok(if r.all_pass() { 0 } else { 4 });
        }
        Command::Reproduce => {
            let lines = reproduce(cfg.cap);
            match cfg.format {
                Format::Json => write_json(&lines, out)?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    for l in &lines {
                        w.serialize(l).map_err(csv_err)?;
                    }
                    w.flush()?;
                }
                Format::Text => {
                    for l in &lines {
                        writeln!(out, "{l}")?;
                    }
                }
            }
            return Ok(if lines.iter().all(|l| l.pass) { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn pass_word(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}

fn write_json<T: Serialize>(value: &T, out: &mut dyn Write) -> Result<()> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    out.write_all(&bytes)?;
    Ok(())
}

fn load_or_compute(
    path: Option<&PathBuf>,
    group: &PermGroup,
    prime: Option<u64>,
) -> Result<CharacterTable> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p)?;
            let json: TableJson = serde_json::from_str(&text)?;
            CharacterTable::from_json(&json)?.align_to(group)
        }
        None => dixon_character_table_with_prime(group, prime),
    }
}

fn emit_table(t: &CharacterTable, format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => write_json(&t.to_json(), out),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let mut header = vec!["character".to_string()];
            header.extend(t.classes.representatives.iter().map(ToString::to_string));
            w.write_record(&header).map_err(csv_err)?;
            let mut sizes = vec!["class size".to_string()];
            sizes.extend(t.classes.sizes.iter().map(ToString::to_string));
            w.write_record(&sizes).map_err(csv_err)?;
            for (i, chi) in t.irreducibles.iter().enumerate() {
                let mut row = vec![format!("X.{}", i + 1)];
                row.extend(chi.values.iter().map(ToString::to_string));
                w.write_record(&row).map_err(csv_err)?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Text => {
            let mut rows: Vec<Vec<String>> = Vec::new();
            let mut header = vec![String::new()];
            header.extend(t.classes.representatives.iter().map(ToString::to_string));
            rows.push(header);
            let mut sizes = vec!["size".to_string()];
            sizes.extend(t.classes.sizes.iter().map(ToString::to_string));
            rows.push(sizes);
            for (i, chi) in t.irreducibles.iter().enumerate() {
                let mut row = vec![format!("X.{}", i + 1)];
                row.extend(chi.values.iter().map(ToString::to_string));
                rows.push(row);
            }
            let widths: Vec<usize> = (0..rows[0].len())
                .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
                .collect();
            for r in rows {
                let cells: Vec<String> = r
                    .iter()
                    .zip(&widths)
                    .map(|(s, w)| format!("{s:>w$}"))
                    .collect();
                writeln!(out, "{}", cells.join("  ").trim_end())?;
            }
            Ok(())
        }
    }
}

fn emit_depth(r: &DepthReport, format: Format, out: &mut dyn Write) -> Result<()> {
    let rows = [
        ("depth", r.depth.to_string()),
        ("group_order", r.group_order.to_string()),
        ("subgroup_order", r.subgroup_order.to_string()),
        ("depth_one", r.depth_one.to_string()),
        ("normal", r.normal.to_string()),
        ("odd_bound", r.odd.bound.to_string()),
        ("max_distance", r.odd.max_distance.to_string()),
        ("even_bound", r.even.bound.to_string()),
        ("max_m_chi", r.even.max_m_chi.to_string()),
        ("matrix_depth", r.matrix_depth.depth.to_string()),
        ("matrix_multiplier", r.matrix_depth.multiplier.to_string()),
        ("core_bound", r.core_bound.bound.to_string()),
        ("core_conjugates", r.core_bound.m.to_string()),
        ("core_central", r.core_bound.central.to_string()),
    ];
    match format {
        Format::Json => write_json(r, out),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["criterion", "value"]).map_err(csv_err)?;
            for (k, v) in &rows {
                w.write_record([*k, v.as_str()]).map_err(csv_err)?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Text => {
            for (k, v) in &rows {
                writeln!(out, "{k:<18} {v}")?;
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct FamilySummary {
    schema: u32,
    spec: String,
    degree: usize,
    g_order: usize,
    h_order: usize,
    k_order: usize,
    core_order: usize,
    sigma: Option<String>,
    expected_depth: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    depth: Option<DepthReport>,
}

fn emit_family(s: &FamilySummary, format: Format, out: &mut dyn Write) -> Result<()> {
    let mut rows = vec![
        ("spec", s.spec.clone()),
        ("degree", s.degree.to_string()),
        ("g_order", s.g_order.to_string()),
        ("h_order", s.h_order.to_string()),
        ("k_order", s.k_order.to_string()),
        ("core_order", s.core_order.to_string()),
        ("sigma", s.sigma.clone().unwrap_or_default()),
        ("expected_depth", s.expected_depth.to_string()),
    ];
    if let Some(r) = &s.depth {
        rows.push(("depth", r.depth.to_string()));
    }
    match format {
        Format::Json => write_json(s, out),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["field", "value"]).map_err(csv_err)?;
            for (k, v) in &rows {
                w.write_record([*k, v.as_str()]).map_err(csv_err)?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Text => {
            for (k, v) in &rows {
                writeln!(out, "{k:<15} {v}")?;
            }
            Ok(())
        }
    }
}
