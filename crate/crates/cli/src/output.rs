//! CSV and JSON documents. Every float is written with 17 significant
//! digits so that parsing the output recovers the exact binary value.

use std::str::FromStr;

use fracroot_core::{DerivativeRow, IterationTrace, OracleResult, RootRecord, SweepReport};
use serde_json::{json, Map, Number, Value};

use crate::spec::Format;

/// Round-trip decimal form of `x`.
pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Value::Number(Number::from_str(&float(x)).expect("finite float formats as a JSON number"))
}

/// CSV document made of blocks separated by empty lines.
struct Csv {
    done: String,
    block: csv::Writer<Vec<u8>>,
}

fn writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new())
}

impl Csv {
    fn new() -> Self {
        Csv {
            done: String::new(),
            block: writer(),
        }
    }

    fn row<I, S>(&mut self, fields: I)
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u8]>,
    {
        self.block.write_record(fields).expect("writing to memory");
    }

    fn blank(&mut self) {
        let block = std::mem::replace(&mut self.block, writer());
        self.done.push_str(&into_string(block));
        self.done.push('\n');
    }

    fn finish(mut self) -> String {
        self.done.push_str(&into_string(self.block));
        self.done
    }
}

fn into_string(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is utf-8")
}

fn json_doc(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json serialization");
    s.push('\n');
    s
}

fn record_json(r: &RootRecord) -> Value {
    json!({
        "alpha": num(r.alpha),
        "re_root": num(r.root.re),
        "im_root": num(r.root.im),
        "residual": num(r.residual_norm),
        "iterations": r.iterations,
        "termination": r.termination.to_string(),
    })
}

fn record_row(r: &RootRecord) -> [String; 6] {
    [
        float(r.alpha),
        float(r.root.re),
        float(r.root.im),
        float(r.residual_norm),
        r.iterations.to_string(),
        r.termination.to_string(),
    ]
}

const RECORD_HEADER: [&str; 6] = [
    "alpha",
    "re_root",
    "im_root",
    "residual",
    "iterations",
    "termination",
];

fn trace_rows(t: &IterationTrace) -> impl Iterator<Item = (usize, f64, f64, f64, bool)> + '_ {
    t.iterates
        .iter()
        .zip(&t.residuals)
        .enumerate()
        .map(|(k, (z, r))| (k, z.re, z.im, *r, t.accelerated_steps.contains(&k)))
}

pub fn solve(format: Format, record: &RootRecord, trace: Option<&IterationTrace>) -> String {
    match format {
        Format::Csv => {
            let mut w = Csv::new();
            w.row(RECORD_HEADER);
            w.row(record_row(record));
            if let Some(t) = trace {
                w.blank();
                w.row(["step", "re", "im", "residual", "accelerated"]);
                for (k, re, im, res, acc) in trace_rows(t) {
                    w.row([
                        k.to_string(),
                        float(re),
                        float(im),
                        float(res),
                        acc.to_string(),
                    ]);
                }
            }
            w.finish()
        }
        Format::Json => {
            let mut doc = Map::new();
            doc.insert("result".into(), record_json(record));
            if let Some(t) = trace {
                let steps: Vec<Value> = trace_rows(t)
                    .map(|(k, re, im, res, acc)| {
                        json!({"step": k, "re": num(re), "im": num(im), "residual": num(res), "accelerated": acc})
                    })
                    .collect();
                doc.insert("trace".into(), Value::Array(steps));
            }
            json_doc(Value::Object(doc))
        }
    }
}

pub fn sweep(format: Format, report: &SweepReport) -> String {
    match format {
        Format::Csv => {
            let mut w = Csv::new();
            w.row(RECORD_HEADER);
            for r in &report.records {
                w.row(record_row(r));
            }
            w.blank();
            w.row(["re_root", "im_root", "discoveries", "best_residual"]);
            for d in &report.distinct_roots {
                w.row([
                    float(d.root.re),
                    float(d.root.im),
                    d.discoveries.to_string(),
                    float(d.best_residual),
                ]);
            }
            w.blank();
            w.row(["converged", "distinct", "failures", "unverified"]);
            w.row([
                report.records.len().to_string(),
                report.distinct_roots.len().to_string(),
                report.failures.to_string(),
                report.unverified.to_string(),
            ]);
            w.finish()
        }
        Format::Json => {
            let distinct: Vec<Value> = report
                .distinct_roots
                .iter()
                .map(|d| {
                    json!({
                        "re_root": num(d.root.re),
                        "im_root": num(d.root.im),
                        "discoveries": d.discoveries,
                        "best_residual": num(d.best_residual),
                    })
                })
                .collect();
            json_doc(json!({
                "records": report.records.iter().map(record_json).collect::<Vec<_>>(),
                "distinct_roots": distinct,
                "summary": {
                    "converged": report.records.len(),
                    "distinct": report.distinct_roots.len(),
                    "failures": report.failures,
                    "unverified": report.unverified,
                },
            }))
        }
    }
}

pub fn table(format: Format, rows: &[DerivativeRow]) -> String {
    match format {
        Format::Csv => {
            let mut w = Csv::new();
            w.row(["alpha", "z", "re_value", "im_value", "error"]);
            for r in rows {
                match &r.value {
                    Ok(v) => w.row([
                        float(r.alpha),
                        float(r.z),
                        float(v.re),
                        float(v.im),
                        String::new(),
                    ]),
                    Err(e) => w.row([
                        float(r.alpha),
                        float(r.z),
                        String::new(),
                        String::new(),
                        e.to_string(),
                    ]),
                }
            }
            w.finish()
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| match &r.value {
                    Ok(v) => json!({
                        "alpha": num(r.alpha), "z": num(r.z),
                        "re_value": num(v.re), "im_value": num(v.im), "error": null,
                    }),
                    Err(e) => json!({
                        "alpha": num(r.alpha), "z": num(r.z),
                        "re_value": null, "im_value": null, "error": e.to_string(),
                    }),
                })
                .collect();
            json_doc(json!({ "rows": rows }))
        }
    }
}

pub fn oracle(format: Format, result: &OracleResult, residuals: &[f64]) -> String {
    match format {
        Format::Csv => {
            let mut w = Csv::new();
            w.row(["re_root", "im_root", "residual"]);
            for (z, r) in result.roots.iter().zip(residuals) {
                w.row([float(z.re), float(z.im), float(*r)]);
            }
            w.blank();
            w.row(["converged", "max_residual"]);
            w.row([result.converged.to_string(), float(result.max_residual)]);
            w.finish()
        }
        Format::Json => {
            let roots: Vec<Value> = result
                .roots
                .iter()
                .zip(residuals)
                .map(|(z, r)| json!({"re_root": num(z.re), "im_root": num(z.im), "residual": num(*r)}))
                .collect();
            json_doc(json!({
                "roots": roots,
                "converged": result.converged,
                "max_residual": num(result.max_residual),
            }))
        }
    }
}
