//! Report records and their JSON / CSV serialization.

use serde::Serialize;

/// One check: what was computed, what the closed form predicts, and whether
/// they agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub q: u32,
    pub m: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub check_id: String,
    pub computed: String,
    pub closed_form: String,
    #[serde(rename = "match")]
    pub matched: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub runtime_ms: u64,
}

impl Record {
    pub fn new(
        q: u32,
        m: u32,
        n: Option<u32>,
        check_id: &str,
        computed: impl ToString,
        closed_form: impl ToString,
        matched: bool,
    ) -> Self {
        Record {
            q,
            m,
            n,
            check_id: check_id.to_string(),
            computed: computed.to_string(),
            closed_form: closed_form.to_string(),
            matched,
            witness: None,
            runtime_ms: 0,
        }
    }

    pub fn with_witness(mut self, witness: impl ToString) -> Self {
        self.witness = Some(witness.to_string());
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

pub const COLUMNS: [&str; 9] = [
    "q",
    "m",
    "n",
    "check_id",
    "computed",
    "closed_form",
    "match",
    "witness",
    "runtime_ms",
];

/// JSON array with one record per line; `[]` when empty.
pub fn render_json(records: &[Record]) -> String {
    if records.is_empty() {
        return "[]\n".to_string();
    }
    let lines: Vec<String> = records
        .iter()
        .map(|r| serde_json::to_string(r).expect("records serialize"))
        .collect();
    format!("[\n{}\n]\n", lines.join(",\n"))
}

/// CSV with a header row and the same columns as the JSON records.
pub fn render_csv(records: &[Record]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(COLUMNS).expect("in-memory write");
    for r in records {
        let n = r.n.map(|n| n.to_string()).unwrap_or_default();
        w.write_record([
            r.q.to_string().as_str(),
            r.m.to_string().as_str(),
            n.as_str(),
            &r.check_id,
            &r.computed,
            &r.closed_form,
            if r.matched { "true" } else { "false" },
            r.witness.as_deref().unwrap_or(""),
            r.runtime_ms.to_string().as_str(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8 input")
}

pub fn render(records: &[Record], format: Format) -> String {
    match format {
        Format::Json => render_json(records),
        Format::Csv => render_csv(records),
    }
}
