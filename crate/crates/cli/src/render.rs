use clap::ValueEnum;
use eulergram::{EExpansion, GammaExpansion};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Out {
    Text,
    Json,
}

pub fn json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string(v).expect("values are serializable");
    s.push('\n');
    s
}

/// Right-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        let parts: Vec<String> = cells
            .zip(&widths)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        format!("{}\n", parts.join("  "))
    };
    let mut out = line(&mut header.iter().copied());
    for row in rows {
        out.push_str(&line(&mut row.iter().map(String::as_str)));
    }
    out
}

pub fn histogram(index_names: &[&str], rows: &[(Vec<u32>, u64)], out: Out) -> String {
    match out {
        Out::Json => json(&serde_json::Value::Array(
            rows.iter()
                .map(|(idx, c)| serde_json::json!({ "index": idx, "count": c.to_string() }))
                .collect(),
        )),
        Out::Text => {
            let mut header = index_names.to_vec();
            header.push("count");
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|(idx, c)| {
                    idx.iter()
                        .map(u32::to_string)
                        .chain([c.to_string()])
                        .collect()
                })
                .collect();
            table(&header, &cells)
        }
    }
}

pub fn gamma_table(g: &GammaExpansion) -> String {
    let rows: Vec<Vec<String>> = g
        .coefficients
        .iter()
        .map(|(k, c)| vec![k.to_string(), c.to_string()])
        .collect();
    format!(
        "n = {}, basis = gamma, positive = {}\n{}",
        g.n,
        g.positive,
        table(&["k", "coeff"], &rows)
    )
}

pub fn e_table(e: &EExpansion) -> String {
    let rows: Vec<Vec<String>> = e
        .coefficients
        .iter()
        .map(|((i, j, k), c)| vec![i.to_string(), j.to_string(), k.to_string(), c.to_string()])
        .collect();
    format!(
        "n = {}, basis = elementary, positive = {}\n{}",
        e.n,
        e.positive,
        table(&["i", "j", "k", "coeff"], &rows)
    )
}
