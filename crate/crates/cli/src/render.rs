//! Text formats: CSV and markdown tables, OEIS b-files.

use std::fmt::Write as _;

use dconsec::ExactInt;

/// One table row: `n` and one value per requested `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: u32,
    pub values: Vec<ExactInt>,
}

/// Header `n,d0,d1,…` then one comma-separated row per `n`.
pub fn csv(ds: &[u32], rows: &[TableRow]) -> String {
    let mut out = String::from("n");
    for d in ds {
        write!(out, ",d{d}").unwrap();
    }
    out.push('\n');
    for row in rows {
        write!(out, "{}", row.n).unwrap();
        for v in &row.values {
            write!(out, ",{v}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Pipe table with right-aligned columns.
pub fn markdown(ds: &[u32], rows: &[TableRow]) -> String {
    let header: Vec<String> = std::iter::once("n".to_string())
        .chain(ds.iter().map(|d| format!("a(n,{d})")))
        .collect();
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            std::iter::once(r.n.to_string())
                .chain(r.values.iter().map(ToString::to_string))
                .collect()
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|i| {
            body.iter()
                .map(|r| r[i].len())
                .chain(std::iter::once(header[i].len()))
                .max()
                .unwrap_or(1)
        })
        .collect();

    let mut out = String::new();
    let line = |cells: &[String], out: &mut String| {
        out.push('|');
        for (cell, w) in cells.iter().zip(&widths) {
            write!(out, " {cell:>w$} |").unwrap();
        }
        out.push('\n');
    };
    line(&header, &mut out);
    out.push('|');
    for w in &widths {
        write!(out, "{}:|", "-".repeat(w + 1)).unwrap();
    }
    out.push('\n');
    for r in &body {
        line(r, &mut out);
    }
    out
}

/// OEIS b-file: `"n a(n)"` per line from `n = 1`, newline-terminated.
pub fn bfile(values: &[ExactInt]) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        writeln!(out, "{} {v}", i + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows() -> Vec<TableRow> {
        vec![
            TableRow { n: 1, values: vec![1.into(), 1.into()] },
            TableRow { n: 2, values: vec![0.into(), 2.into()] },
        ]
    }

    #[test]
    fn csv_layout() {
        assert_eq!(csv(&[0, 3], &rows()), "n,d0,d3\n1,1,1\n2,0,2\n");
    }

    #[test]
    fn markdown_layout() {
        let md = markdown(&[2], &[TableRow { n: 10, values: vec![744360.into()] }]);
        assert_eq!(md, "|  n | a(n,2) |\n|---:|-------:|\n| 10 | 744360 |\n");
    }

    #[test]
    fn bfile_layout() {
        let text = bfile(&[1.into(), 0.into(), 0.into(), 2.into()]);
        assert_eq!(text, "1 1\n2 0\n3 0\n4 2\n");
        assert_eq!(bfile(&[]), "");
    }
}
