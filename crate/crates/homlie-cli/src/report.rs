//! Line-oriented report: ordered `key = value` pairs with a `#`-prefixed
//! metadata header. The comparable body excludes the header, so two runs
//! on the same input produce byte-identical bodies.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Default)]
pub struct Report {
    header: Vec<String>,
    lines: Vec<(String, String)>,
}

impl Report {
    pub fn new(command_echo: &str) -> Report {
        Report {
            header: vec![format!("# homlie {command_echo}")],
            lines: Vec::new(),
        }
    }

    pub fn add(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.lines.push((key.into(), value.into()));
    }

    pub fn add_bool(&mut self, key: impl Into<String>, value: bool) {
        self.add(key, if value { "pass" } else { "fail" });
    }

    /// The deterministic body used by `--compare`.
    pub fn comparable_body(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.lines {
            out.push_str(k);
            out.push_str(" = ");
            out.push_str(v);
            out.push('\n');
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for h in &self.header {
            out.push_str(h);
            out.push('\n');
        }
        match format {
            Format::Machine => out.push_str(&self.comparable_body()),
            Format::Human => {
                let mut last_section = String::new();
                for (k, v) in &self.lines {
                    let section = k.split('.').next().unwrap_or("").to_string();
                    if section != last_section && !last_section.is_empty() {
                        out.push('\n');
                    }
                    last_section = section;
                    out.push_str(k);
                    out.push_str(" = ");
                    out.push_str(v);
                    out.push('\n');
                }
            }
        }
        out
    }
}

/// Strips `#` header lines; used when comparing against a golden file.
pub fn strip_header(text: &str) -> String {
    let mut out = String::new();
    for line in text.lines() {
        if line.starts_with('#') {
            continue;
        }
        out.push_str(line);
        out.push('\n');
    }
    out
}
