//! Plain, JSON and CSV renderings shared by the command-line tool.
//!
//! JSON output is always one document; CSV output always starts with a
//! header row. The formats are described in `docs/formats.md`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::json;

use crate::counting::{SubgroupTable, TypeKey};
use crate::oracle::OracleReport;
use crate::subgroups::{ElementSet, GoursatTuple, SubgroupDescriptor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(Self::Plain),
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(format!("unknown format `{other}` (expected plain, json or csv)")),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values always serialize");
    s.push('\n');
    s
}

/// Isomorphism type label, `Z_B` for cyclic types.
pub fn type_label(key: &TypeKey) -> String {
    if key.small() == 1 {
        format!("Z_{}", key.large())
    } else {
        key.to_string()
    }
}

/// Which count a single `count` invocation asked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountQuery {
    Total,
    Order(u64),
    Type(TypeKey),
    Cyclic,
}

pub fn render_count(m: u64, n: u64, query: CountQuery, count: u64, format: OutputFormat) -> String {
    let (name, order, a, b) = match query {
        CountQuery::Total => ("total", String::new(), String::new(), String::new()),
        CountQuery::Order(delta) => ("order", delta.to_string(), String::new(), String::new()),
        CountQuery::Type(key) => (
            "type",
            String::new(),
            key.small().to_string(),
            key.large().to_string(),
        ),
        CountQuery::Cyclic => ("cyclic", String::new(), String::new(), String::new()),
    };
    match format {
        OutputFormat::Plain => format!("{count}\n"),
        OutputFormat::Csv => {
            format!("m,n,query,order,a,b,count\n{m},{n},{name},{order},{a},{b},{count}\n")
        }
        OutputFormat::Json => {
            let mut doc = json!({
                "ambient": { "m": m, "n": n },
                "query": name,
                "count": count,
            });
            match query {
                CountQuery::Order(delta) => doc["order"] = json!(delta),
                CountQuery::Type(key) => {
                    doc["a"] = json!(key.small());
                    doc["b"] = json!(key.large());
                }
                _ => {}
            }
            to_json(&doc)
        }
    }
}

#[derive(Serialize)]
struct AmbientJson {
    m: u64,
    n: u64,
}

#[derive(Serialize)]
struct OrderRow {
    order: u64,
    count: u64,
}

#[derive(Serialize)]
struct TypeRow {
    a: u64,
    b: u64,
    count: u64,
}

#[derive(Serialize)]
struct TableJson {
    ambient: AmbientJson,
    total: u64,
    by_order: Vec<OrderRow>,
    by_type: Vec<TypeRow>,
    cyclic: u64,
    noncyclic: u64,
}

pub fn render_table(table: &SubgroupTable, format: OutputFormat) -> String {
    let (m, n) = table.ambient;
    match format {
        OutputFormat::Plain => {
            let mut out = String::new();
            let _ = writeln!(out, "Subgroups of Z_{m} x Z_{n}");
            let _ = writeln!(out, "total: {}", table.total);
            let _ = writeln!(out, "cyclic: {}", table.cyclic_total);
            let _ = writeln!(out, "noncyclic: {}", table.noncyclic_total);
            let _ = writeln!(out, "by order:");
            for (order, count) in &table.by_order {
                let _ = writeln!(out, "  {order}: {count}");
            }
            let _ = writeln!(out, "by type:");
            for (key, count) in &table.by_type {
                let _ = writeln!(out, "  {}: {count}", type_label(key));
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("kind,a,b,count\n");
            let _ = writeln!(out, "total,,,{}", table.total);
            let _ = writeln!(out, "cyclic,,,{}", table.cyclic_total);
            let _ = writeln!(out, "noncyclic,,,{}", table.noncyclic_total);
            for (order, count) in &table.by_order {
                let _ = writeln!(out, "order,{order},,{count}");
            }
            for (key, count) in &table.by_type {
                let _ = writeln!(out, "type,{},{},{count}", key.small(), key.large());
            }
            out
        }
        OutputFormat::Json => to_json(&TableJson {
            ambient: AmbientJson { m, n },
            total: table.total,
            by_order: table
                .by_order
                .iter()
                .map(|(&order, &count)| OrderRow { order, count })
                .collect(),
            by_type: table
                .by_type
                .iter()
                .map(|(key, &count)| TypeRow {
                    a: key.small(),
                    b: key.large(),
                    count,
                })
                .collect(),
            cyclic: table.cyclic_total,
            noncyclic: table.noncyclic_total,
        }),
    }
}

pub fn render_descriptors(
    m: u64,
    n: u64,
    records: &[SubgroupDescriptor],
    format: OutputFormat,
) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Plain => {
            for d in records {
                let [(g1x, g1y), (g2x, g2y)] = d.generators;
                let _ = writeln!(
                    out,
                    "{} order={} exponent={} type={} cyclic={} generators=({g1x},{g1y}),({g2x},{g2y})",
                    d.tuple, d.order, d.exponent, d.invariants, d.cyclic
                );
            }
        }
        OutputFormat::Csv => {
            out.push_str("a,b,c,d,ell,order,exponent,u,v,cyclic,g1x,g1y,g2x,g2y\n");
            for d in records {
                let t = d.tuple;
                let [(g1x, g1y), (g2x, g2y)] = d.generators;
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{g1x},{g1y},{g2x},{g2y}",
                    t.a, t.b, t.c, t.d, t.ell, d.order, d.exponent, d.invariants.u,
                    d.invariants.v, d.cyclic
                );
            }
        }
        OutputFormat::Json => {
            out = to_json(&json!({
                "ambient": { "m": m, "n": n },
                "subgroups": records,
            }));
        }
    }
    out
}

fn digits(x: u64) -> usize {
    x.to_string().len()
}

/// Lattice-point picture of a subgroup: rows `y = n-1` down to `0`, columns
/// `x = 0..m`, `*` for members and `.` otherwise, with a final row of column
/// labels.
pub fn render_figure(set: &ElementSet, t: GoursatTuple, format: OutputFormat) -> String {
    let (m, n) = set.ambient();
    match format {
        OutputFormat::Plain => {
            let row_w = digits(n.saturating_sub(1));
            let col_w = digits(m.saturating_sub(1));
            let mut out = String::new();
            for y in (0..n).rev() {
                let _ = write!(out, "{y:>row_w$}");
                for x in 0..m {
                    let glyph = if set.contains((x, y)) { '*' } else { '.' };
                    let _ = write!(out, " {glyph:>col_w$}");
                }
                out.push('\n');
            }
            let _ = write!(out, "{:>row_w$}", "");
            for x in 0..m {
                let _ = write!(out, " {x:>col_w$}");
            }
            out.push('\n');
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("x,y\n");
            for &(x, y) in set.elements() {
                let _ = writeln!(out, "{x},{y}");
            }
            out
        }
        OutputFormat::Json => to_json(&json!({
            "ambient": { "m": m, "n": n },
            "tuple": t,
            "points": set.elements(),
        })),
    }
}

fn report_status(r: &OracleReport) -> &'static str {
    if r.is_ok() {
        "OK"
    } else {
        "MISMATCH"
    }
}

fn write_mismatches(out: &mut String, r: &OracleReport) {
    for mm in &r.mismatches {
        let _ = writeln!(
            out,
            "  {} {}: expected {}, got {}",
            mm.side, mm.key, mm.expected, mm.actual
        );
    }
}

/// Renders one or more oracle reports. A single report in plain format
/// prints just its status line.
pub fn render_reports(reports: &[OracleReport], format: OutputFormat) -> String {
    let mismatch_total: usize = reports.iter().map(|r| r.mismatches.len()).sum();
    let mut out = String::new();
    match format {
        OutputFormat::Plain => {
            if let [r] = reports {
                let _ = writeln!(
                    out,
                    "{}, {} subgroups, {} mismatches",
                    report_status(r),
                    r.subgroup_count,
                    r.mismatches.len()
                );
                write_mismatches(&mut out, r);
            } else {
                for r in reports {
                    let _ = writeln!(
                        out,
                        "({},{}) {}, {} subgroups, {} mismatches",
                        r.ambient.0,
                        r.ambient.1,
                        report_status(r),
                        r.subgroup_count,
                        r.mismatches.len()
                    );
                    write_mismatches(&mut out, r);
                }
                let status = if mismatch_total == 0 { "OK" } else { "MISMATCH" };
                let _ = writeln!(
                    out,
                    "{status}, {} pairs, {mismatch_total} mismatches",
                    reports.len()
                );
            }
        }
        OutputFormat::Csv => {
            out.push_str("m,n,subgroups,side,key,expected,actual\n");
            for r in reports {
                let (m, n) = r.ambient;
                if r.is_ok() {
                    let _ = writeln!(out, "{m},{n},{},,,,", r.subgroup_count);
                }
                for mm in &r.mismatches {
                    let _ = writeln!(
                        out,
                        "{m},{n},{},{},\"{}\",{},{}",
                        r.subgroup_count, mm.side, mm.key, mm.expected, mm.actual
                    );
                }
            }
        }
        OutputFormat::Json => {
            let items: Vec<_> = reports
                .iter()
                .map(|r| {
                    json!({
                        "ambient": { "m": r.ambient.0, "n": r.ambient.1 },
                        "subgroups": r.subgroup_count,
                        "mismatches": r.mismatches,
                    })
                })
                .collect();
            out = to_json(&json!({
                "ok": mismatch_total == 0,
                "mismatch_count": mismatch_total,
                "reports": items,
            }));
        }
    }
    out
}
