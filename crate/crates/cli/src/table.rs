use crate::Format;

/// Rows of cells rendered either tab-separated or padded into columns.
#[derive(Default)]
pub struct Table {
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn row<I, S>(&mut self, cells: I)
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.rows.push(cells.into_iter().map(Into::into).collect());
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Tsv => {
                for r in &self.rows {
                    out.push_str(&r.join("\t"));
                    out.push('\n');
                }
            }
            Format::Pretty => {
                let cols = self.rows.iter().map(Vec::len).max().unwrap_or(0);
                let widths: Vec<usize> = (0..cols)
                    .map(|c| {
                        self.rows
                            .iter()
                            .filter_map(|r| r.get(c))
                            .map(|s| s.chars().count())
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                for r in &self.rows {
                    let line: Vec<String> = r
                        .iter()
                        .enumerate()
                        .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
                        .collect();
                    out.push_str(line.join("  ").trim_end());
                    out.push('\n');
                }
            }
        }
        out
    }
}
