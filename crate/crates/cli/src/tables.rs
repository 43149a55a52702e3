//! Coefficient tables for the `tabulate` verb.

use psho_core::biortho::normalization;
use psho_core::jordan::{coeff_a, coeff_b, f_polynomials, ladder_apply, JordanLabel, LadderOp};
use psho_core::weyl::uvw::UVW_NAMES;
use serde_json::{Map, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_text(&self) -> String {
        let mut width: Vec<usize> = self.header.iter().map(String::len).collect();
        for row in &self.rows {
            for (w, cell) in width.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = line(&self.header);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> anyhow::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .header
                    .iter()
                    .cloned()
                    .zip(row.iter().map(|c| Value::String(c.clone())))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&rows).expect("table serializes");
        s.push('\n');
        s
    }
}

/// `a_q^{(n,p)}` for `p ≤ n` and `b_q^{(n,p)}` for `p ≤ n − 1`, with `n ≤ max_n`.
pub fn coefficients(max_n: u32) -> Table {
    let mut t = Table::new(&["n", "p", "q", "a", "b"]);
    for n in 0..=max_n {
        for p in 0..=n {
            for q in 0..=p {
                let a = coeff_a(n, p, q).map(|c| c.render()).unwrap_or_default();
                let b = coeff_b(n, p, q).map(|c| c.render()).unwrap_or_else(|_| "-".into());
                t.push(vec![n.to_string(), p.to_string(), q.to_string(), a, b]);
            }
        }
    }
    t
}

pub fn norms(max_k: u32, max_n: u32) -> Table {
    let mut t = Table::new(&["k", "n", "N"]);
    for k in 0..=max_k {
        for n in 0..=max_n {
            t.push(vec![k.to_string(), n.to_string(), normalization(k, n).render()]);
        }
    }
    t
}

pub fn ladder_coefficients(max_total: u32) -> Table {
    let mut t = Table::new(&["state", "operator", "target", "coefficient"]);
    for label in JordanLabel::up_to(max_total) {
        for op in LadderOp::ALL {
            let expansion = ladder_apply(op, label);
            if expansion.is_empty() {
                t.push(vec![label.to_string(), op.to_string(), "-".into(), "0".into()]);
            }
            for (target, c) in expansion {
                t.push(vec![label.to_string(), op.to_string(), target.to_string(), c.render()]);
            }
        }
    }
    t
}

/// The polynomials `f_q^{(n,p)}(u, w)` for `p ≤ max_p`.
pub fn f_table(max_p: u32) -> Table {
    let mut t = Table::new(&["p", "q", "f"]);
    for (p, row) in f_polynomials(max_p).into_iter().enumerate() {
        for (q, f) in row {
            t.push(vec![p.to_string(), q.to_string(), f.render_with(&UVW_NAMES)]);
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_table_lists_the_first_block() {
        let t = norms(2, 2);
        let row = t.rows.iter().find(|r| r[0] == "0" && r[1] == "1").unwrap();
        assert_eq!(row[2], "8*lam*g^2");
    }

    #[test]
    fn csv_quotes_labels() {
        let t = ladder_coefficients(0);
        let csv = t.to_csv().unwrap();
        assert!(csv.starts_with("state,operator,target,coefficient\n\"(0,0,0)\",A+,"));
    }

    #[test]
    fn text_has_one_line_per_row() {
        let t = coefficients(2);
        assert_eq!(t.to_text().lines().count(), t.rows.len() + 1);
        assert!(t.to_text().starts_with("n  p  q  a"));
    }
}
