//! Plain ASCII tables with right-aligned, possibly multi-line cells.

pub struct Table {
    headers: Vec<String>,
    rows: Vec<Vec<Vec<String>>>,
    row_rules: bool,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
            row_rules: false,
        }
    }

    /// Draw a rule after every row, for tables with multi-line cells.
    pub fn with_row_rules(mut self) -> Self {
        self.row_rules = true;
        self
    }

    pub fn row<S: Into<String>>(&mut self, cells: impl IntoIterator<Item = S>) {
        self.rows
            .push(cells.into_iter().map(|c| vec![c.into()]).collect());
    }

    pub fn multi_row(&mut self, cells: Vec<Vec<String>>) {
        self.rows.push(cells);
    }

    pub fn render(&self) -> String {
        let cols = self.headers.len();
        let mut width: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (k, cell) in row.iter().enumerate().take(cols) {
                for line in cell {
                    width[k] = width[k].max(line.len());
                }
            }
        }
        let rule: String = width
            .iter()
            .enumerate()
            .map(|(k, w)| "-".repeat(if k + 1 == cols { w + 1 } else { w + 2 }))
            .collect::<Vec<_>>()
            .join("+");
        let line = |cells: Vec<&str>| -> String {
            let parts: Vec<String> = cells
                .iter()
                .zip(&width)
                .map(|(c, w)| format!(" {c:>w$} "))
                .collect();
            parts.join("|").trim_end().to_string()
        };
        let mut out = Vec::new();
        out.push(line(self.headers.iter().map(String::as_str).collect()));
        out.push(rule.clone());
        for row in &self.rows {
            let height = row.iter().map(Vec::len).max().unwrap_or(1);
            for i in 0..height {
                let cells: Vec<&str> = (0..cols)
                    .map(|k| row.get(k).and_then(|c| c.get(i)).map_or("", String::as_str))
                    .collect();
                out.push(line(cells));
            }
            if self.row_rules {
                out.push(rule.clone());
            }
        }
        let mut text = out.join("\n");
        text.push('\n');
        text
    }
}
