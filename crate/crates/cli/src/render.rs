//! Output formats for `tdim`.

use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;
use terwilliger::exactlin::DivisorReport;
use terwilliger::talgebra::{SchemeTable, TAlgebraReport};

use crate::source::Loaded;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// One characteristic of one point; characteristic 0 has no radical.
/// Radical fields are `None` for dimension-only reports.
struct Cell {
    dim: usize,
    radical_dim: Option<usize>,
    semisimple: Option<bool>,
}

fn cell(r: &TAlgebraReport, c: u32) -> Cell {
    if c == 0 {
        let semisimple = r.char_zero.as_ref().is_some_and(|z| z.passed());
        return Cell { dim: r.dim_q, radical_dim: Some(0), semisimple: Some(semisimple) };
    }
    let p = r.prime(c).expect("every requested prime was computed");
    Cell { dim: p.dim, radical_dim: p.radical_dim, semisimple: p.semisimple }
}

fn divisor_values(d: &DivisorReport) -> Vec<Value> {
    d.divisors()
        .iter()
        .map(|e| {
            let s = e.to_string();
            s.parse::<u64>().map(Value::from).unwrap_or(Value::String(s))
        })
        .collect()
}

fn nontrivial(d: &DivisorReport) -> String {
    let v: Vec<String> = d.nontrivial().iter().map(|e| e.to_string()).collect();
    if v.is_empty() {
        "-".into()
    } else {
        v.join(" ")
    }
}

fn set(values: &[usize]) -> String {
    let v: Vec<String> = values.iter().map(|d| d.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

pub fn render(format: Format, loaded: &[Loaded], tables: &[SchemeTable], chars: &[u32]) -> String {
    match format {
        Format::Table => table(loaded, tables, chars),
        Format::Csv => csv(tables, chars),
        Format::Json => json(tables, chars),
    }
}

fn table(loaded: &[Loaded], tables: &[SchemeTable], chars: &[u32]) -> String {
    let mut out = String::new();
    for (l, t) in loaded.iter().zip(tables) {
        let vals: Vec<String> = l.scheme.valencies().iter().map(|v| v.to_string()).collect();
        let srg = l.srg.map(|p| format!(", srg{p}")).unwrap_or_default();
        writeln!(
            out,
            "{}: order {}, rank {}, valencies {}{srg}",
            t.scheme,
            l.scheme.order(),
            l.scheme.rank(),
            vals.join(" ")
        )
        .unwrap();
        let mut rows: Vec<Vec<String>> = Vec::new();
        let mut header = vec!["point".to_string()];
        header.extend(chars.iter().map(|c| format!("char {c}")));
        header.push("divisors".into());
        rows.push(header);
        for r in &t.reports {
            let mut row = vec![(r.point + 1).to_string()];
            for &c in chars {
                let x = cell(r, c);
                row.push(match x.radical_dim {
                    Some(rad) if rad > 0 => format!("{} ({rad})", x.dim),
                    _ => x.dim.to_string(),
                });
            }
            row.push(nontrivial(&r.divisors));
            rows.push(row);
        }
        let mut distinct = vec!["distinct".to_string()];
        distinct.extend(chars.iter().map(|&c| set(&t.distinct_dims(c))));
        distinct.push(String::new());
        rows.push(distinct);

        let widths: Vec<usize> =
            (0..rows[0].len()).map(|i| rows.iter().map(|r| r[i].chars().count()).max().unwrap_or(0)).collect();
        for row in rows {
            let cells: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            writeln!(out, "  {}", cells.join("  ").trim_end()).unwrap();
        }
        writeln!(out).unwrap();
    }
    out.push_str("dim (radical dim) per characteristic; a bare number means semisimple unless --dims-only\n");
    out
}

fn csv(tables: &[SchemeTable], chars: &[u32]) -> String {
    let mut out = String::from("scheme,point,char,dim,radical_dim,semisimple\n");
    for t in tables {
        for r in &t.reports {
            for &c in chars {
                let x = cell(r, c);
                let rad = x.radical_dim.map(|d| d.to_string()).unwrap_or_default();
                let ss = x.semisimple.map(|b| b.to_string()).unwrap_or_default();
                writeln!(out, "{},{},{c},{},{rad},{ss}", t.scheme, r.point + 1, x.dim).unwrap();
            }
        }
    }
    out
}

#[derive(Serialize)]
struct JsonCorner {
    s: usize,
    dim: usize,
    radical_dim: usize,
    semisimple: bool,
}

#[derive(Serialize)]
struct JsonChar {
    dim: usize,
    radical_dim: Option<usize>,
    semisimple: Option<bool>,
    /// `None` in characteristic 0, where corners are not computed.
    corners: Option<Vec<JsonCorner>>,
}

#[derive(Serialize)]
struct JsonPoint {
    scheme: String,
    point: usize,
    dim_char0: usize,
    divisors: Vec<Value>,
    chars: CharMap,
}

/// Characteristics in numeric order, serialized as a map keyed by the characteristic.
struct CharMap(Vec<(u32, JsonChar)>);

impl Serialize for CharMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(self.0.iter().map(|(c, v)| (c.to_string(), v)))
    }
}

fn json(tables: &[SchemeTable], chars: &[u32]) -> String {
    let points: Vec<JsonPoint> = tables
        .iter()
        .flat_map(|t| t.reports.iter().map(move |r| (t, r)))
        .map(|(t, r)| {
            let chars = chars
                .iter()
                .map(|&c| {
                    let x = cell(r, c);
                    let corners = (c != 0).then(|| {
                        r.prime(c)
                            .expect("computed")
                            .corners
                            .iter()
                            .map(|k| JsonCorner { s: k.s, dim: k.dim, radical_dim: k.radical_dim, semisimple: k.semisimple })
                            .collect()
                    });
                    (c, JsonChar { dim: x.dim, radical_dim: x.radical_dim, semisimple: x.semisimple, corners })
                })
                .collect();
            let chars = CharMap(chars);
            JsonPoint {
                scheme: t.scheme.clone(),
                point: r.point + 1,
                dim_char0: r.dim_q,
                divisors: divisor_values(&r.divisors),
                chars,
            }
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&points).expect("plain data serializes");
    s.push('\n');
    s
}
