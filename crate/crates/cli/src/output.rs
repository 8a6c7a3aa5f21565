use serde_json::Value;

use crate::Format;

pub(crate) struct Payload {
    pub text: String,
    pub json: Value,
    pub csv: String,
}

impl Payload {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.json).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.csv.clone(),
        }
    }
}

pub(crate) fn csv_table(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}
