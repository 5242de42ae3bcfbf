//! Report tables and their deterministic text/csv/json renderings.

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::bound::Hypothesis;
use crate::campaign::Campaign;
use crate::error::{Error, Result};
use crate::faberkrahn::fk_best;
use crate::group::GroupSpec;
use crate::pleijel::{best_gamma_bound, gamma_tilde, pansu_quotient_suite, pleijel_pansu};
use crate::report::{Cell, ReportTable};
use crate::value::Value;
use crate::weyl::{cn_hurwitz, cn_series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableName {
    Cn,
    GammaTilde,
    Quotients,
    Constants,
    Routes,
}

impl TableName {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "cn" => TableName::Cn,
            "gamma_tilde" => TableName::GammaTilde,
            "quotients" => TableName::Quotients,
            "constants" => TableName::Constants,
            "routes" => TableName::Routes,
            other => return Err(Error::domain("emit_table", format!("unknown table '{other}'"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl Format {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "text" => Format::Text,
            "csv" => Format::Csv,
            "json" => Format::Json,
            other => return Err(Error::domain("emit_table", format!("unknown format '{other}'"))),
        })
    }
}

/// Fixed numeric formatting: lower-case scientific, 10 significant digits.
pub fn fmt_sci(x: f64) -> String {
    format!("{:.9e}", x)
}

fn num(v: Value) -> Cell {
    Cell::Num(v)
}

pub fn build_table(name: TableName, max_n: u32) -> Result<ReportTable> {
    match name {
        TableName::Cn => {
            let top = max_n.clamp(1, 13);
            let mut t = ReportTable::new("cn", vec!["n", "value", "err", "series_check"]);
            for n in 1..=top {
                let h = cn_hurwitz(n)?;
                let s = cn_series(n, 1e-7)?;
                t.push_row(
                    vec![
                        Cell::text(n.to_string()),
                        num(h),
                        Cell::text(fmt_sci(h.err)),
                        num(s),
                    ],
                    format!("s7.cn.n{n:02}"),
                );
            }
            Ok(t)
        }
        TableName::GammaTilde => {
            let top = max_n.clamp(1, 13);
            let mut t = ReportTable::new("gamma_tilde", vec!["n", "value", "err"]);
            for n in 1..=top {
                let g = gamma_tilde(n)?;
                t.push_row(
                    vec![Cell::text(n.to_string()), num(g), Cell::text(fmt_sci(g.err))],
                    format!("s9.gammatilde.n{n:02}"),
                );
            }
            Ok(t)
        }
        TableName::Quotients => {
            let top = max_n.clamp(4, 13);
            let mut t = ReportTable::new(
                "quotients",
                vec!["m", "true_quotient", "closed_form_upper", "alpha_quotient", "gamma_rd_quotient", "combined_upper"],
            );
            for m in 2..=top {
                let row = pansu_quotient_suite(m)?;
                let opt = |v: Option<Value>| v.map_or(Cell::text("-"), num);
                t.push_row(
                    vec![
                        Cell::text(m.to_string()),
                        opt(row.true_quotient),
                        opt(row.gamma_tilde_quotient_upper),
                        num(row.alpha_quotient),
                        opt(row.gamma_rd_quotient),
                        opt(row.combined_upper),
                    ],
                    format!("s9.quotient.n{m:02}"),
                );
            }
            Ok(t)
        }
        TableName::Constants => build_constants_table(),
        TableName::Routes => build_routes_table(),
    }
}

fn build_constants_table() -> Result<ReportTable> {
    use crate::functional::{gn_nagy_q, sobolev_euclidean, sobolev_heisenberg, wangzhang_limit};
    use crate::isoperimetry::{iso_lower_heisenberg, pansu_isoperimetric};
    use crate::weyl::{weyl_euclidean, weyl_heisenberg};

    let mut t = ReportTable::new("constants", vec!["name", "value", "err", "kind"]);
    let mut push = |name: &str, v: Value, kind: &str, prov: &str| {
        t.push_row(
            vec![Cell::text(name), num(v), Cell::text(fmt_sci(v.err)), Cell::text(kind)],
            prov,
        );
    };
    push("weyl_h1", weyl_heisenberg(1)?, "exact", "s7.weyl.w1");
    push("weyl_h2", weyl_heisenberg(2)?, "exact", "s7.weyl.w2");
    push("weyl_r2", weyl_euclidean(2)?, "exact", "s7.weyl.r2");
    push("sobolev_h1", sobolev_heisenberg(1)?, "exact", "s9.jl.n1");
    push("sobolev_r3", sobolev_euclidean(3)?, "exact", "s9.sobolev.r3");
    push("gn_nagy_q4", gn_nagy_q(4.0)?, "exact", "s9.nagy.q04");
    push("wangzhang_k1", wangzhang_limit(1)?, "exact", "s9.wangzhang.k1");
    push("iso_h1_lower", iso_lower_heisenberg(1)?.bound.value, "lower", "s11.isopercor.n1");
    push("iso_h2_lower", iso_lower_heisenberg(2)?.bound.value, "lower", "s11.isopercor.n2");
    push("iso_h1_conj", pansu_isoperimetric(1)?.bound.value, "conjectural", "s11.pansusconj.n1");
    let fk1 = fk_best(GroupSpec::new(1, 0)?, Hypothesis::Unconditional)?;
    push("fk_h1_lower", fk1.value, "lower", "s11.fkiso.n1");
    let fk2 = fk_best(GroupSpec::new(2, 0)?, Hypothesis::Unconditional)?;
    push("fk_h2_lower", fk2.value, "lower", "s11.fkiso.n2");
    let g1 = best_gamma_bound(GroupSpec::new(1, 0)?, Hypothesis::Unconditional)?;
    push("gamma_h1_upper", g1.bound.value, "upper", "s11.gammaiso.n1");
    let g12 = best_gamma_bound(GroupSpec::new(1, 2)?, Hypothesis::Unconditional)?;
    push("gamma_h1r2_upper", g12.bound.value, "upper", "s11.maincomp.value.n1k2");
    let g21 = best_gamma_bound(GroupSpec::new(2, 1)?, Hypothesis::Unconditional)?;
    push("gamma_h2r1_upper", g21.bound.value, "upper", "s11.maincomp.value.n2k1");
    for n in 1..=3u32 {
        push(
            &format!("gamma_h{n}_conj"),
            pleijel_pansu(n)?.value,
            "conjectural",
            &format!("s11.panpl1.n{n}"),
        );
    }
    Ok(t)
}

fn build_routes_table() -> Result<ReportTable> {
    let mut t = ReportTable::new(
        "routes",
        vec!["n", "k", "gamma_route", "gamma_value", "headline", "fk_route", "fk_value"],
    );
    let mut grid: Vec<(u32, u32)> = Vec::new();
    for n in 1..=13u32 {
        for k in 0..=1u32 {
            grid.push((n, k));
        }
    }
    for n in 1..=2u32 {
        for k in 2..=20u32 {
            grid.push((n, k));
        }
    }
    grid.sort_unstable();
    for (n, k) in grid {
        let g = GroupSpec::new(n, k)?;
        let gamma = best_gamma_bound(g, Hypothesis::Unconditional)?;
        let fk = fk_best(g, Hypothesis::Unconditional)?;
        t.push_row(
            vec![
                Cell::text(n.to_string()),
                Cell::text(k.to_string()),
                Cell::text(gamma.bound.route.get(1).cloned().unwrap_or_default()),
                num(gamma.bound.value),
                Cell::text(fmt_sci(gamma.headline())),
                Cell::text(fk.route.get(1).cloned().unwrap_or_default()),
                num(fk.value),
            ],
            format!("s9.routes.n{n:02}k{k:02}"),
        );
    }
    Ok(t)
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn cell_string(c: &Cell) -> String {
    match c {
        Cell::Text(s) => s.clone(),
        Cell::Num(v) => fmt_sci(v.estimate),
    }
}

/// Render a table to bytes; byte-identical for identical inputs.
pub fn render_table(table: &ReportTable, format: Format) -> Vec<u8> {
    match format {
        Format::Text => {
            let mut widths: Vec<usize> = table.headers.iter().map(String::len).collect();
            let rows: Vec<Vec<String>> =
                table.rows.iter().map(|r| r.iter().map(cell_string).collect()).collect();
            for row in &rows {
                for (i, cell) in row.iter().enumerate() {
                    widths[i] = widths[i].max(cell.len());
                }
            }
            let mut out = String::new();
            out.push_str(&format!("table: {}\n", table.name));
            let header: Vec<String> = table
                .headers
                .iter()
                .enumerate()
                .map(|(i, h)| format!("{:<w$}", h, w = widths[i]))
                .collect();
            out.push_str(&header.join("  "));
            out.push('\n');
            for row in &rows {
                let line: Vec<String> = row
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("{:<w$}", c, w = widths[i]))
                    .collect();
                out.push_str(line.join("  ").trim_end());
                out.push('\n');
            }
            out.into_bytes()
        }
        Format::Csv => {
            let mut out = String::new();
            out.push_str(
                &table.headers.iter().map(|h| csv_escape(h)).collect::<Vec<_>>().join(","),
            );
            out.push_str(",provenance\n");
            for (row, prov) in table.rows.iter().zip(&table.provenance) {
                let mut fields: Vec<String> =
                    row.iter().map(|c| csv_escape(&cell_string(c))).collect();
                fields.push(csv_escape(prov));
                out.push_str(&fields.join(","));
                out.push('\n');
            }
            out.into_bytes()
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = table
                .rows
                .iter()
                .zip(&table.provenance)
                .map(|(row, prov)| {
                    let mut obj = serde_json::Map::new();
                    for (h, c) in table.headers.iter().zip(row) {
                        let v = match c {
                            Cell::Text(s) => json!(s),
                            Cell::Num(val) => serde_json::to_value(val).expect("finite"),
                        };
                        obj.insert(h.clone(), v);
                    }
                    obj.insert("provenance".to_string(), json!(prov));
                    serde_json::Value::Object(obj)
                })
                .collect();
            let mut bytes = serde_json::to_vec_pretty(&rows).expect("finite values");
            bytes.push(b'\n');
            bytes
        }
    }
}

/// Build and render in one step.
pub fn emit_table(name: TableName, format: Format, max_n: u32) -> Result<Vec<u8>> {
    Ok(render_table(&build_table(name, max_n)?, format))
}

/// Render a campaign report; one line per record plus a summary, or csv/json.
pub fn render_campaign(c: &Campaign, format: Format) -> Vec<u8> {
    match format {
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!("suite: {}\n", c.name.as_str()));
            for rec in &c.records {
                out.push_str(&rec.line());
                out.push('\n');
            }
            let passed = c.records.iter().filter(|r| r.passed()).count();
            out.push_str(&format!(
                "summary: {}/{} passed, exit {}\n",
                passed,
                c.records.len(),
                c.exit_status
            ));
            out.into_bytes()
        }
        Format::Csv => {
            let mut out = String::new();
            out.push_str("claim_id,status,computed,expected,tolerance,absolute,margin,description\n");
            for r in &c.records {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    csv_escape(&r.claim_id),
                    if r.passed() { "pass" } else { "fail" },
                    fmt_sci(r.computed.estimate),
                    fmt_sci(r.expected.estimate),
                    fmt_sci(r.tolerance),
                    r.absolute,
                    fmt_sci(r.margin),
                    csv_escape(&r.description),
                ));
            }
            out.into_bytes()
        }
        Format::Json => {
            let mut bytes = serde_json::to_vec_pretty(c).expect("finite values");
            bytes.push(b'\n');
            bytes
        }
    }
}
