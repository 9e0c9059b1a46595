//! Number formatting and CSV/JSON rendering.

use serde_json::{Map, Number, Value};
use topk_info::measures::MeasureReport;
use topk_info::DomainSpec;

/// Four decimal places, ties to even, never `-0.0000`.
pub fn fmt4(x: f64) -> String {
    let s = format!("{x:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

fn num4(x: f64) -> Value {
    let rounded: f64 = fmt4(x).parse().expect("formatted float parses");
    Number::from_f64(rounded).map_or(Value::Null, Value::Number)
}

pub fn mode_label(mode: DomainSpec) -> String {
    match mode {
        DomainSpec::Known(n) => format!("known({n})"),
        DomainSpec::Unknown => "unknown".to_string(),
    }
}

/// Everything `info` reports for one pair.
#[derive(Debug, Clone)]
pub struct InfoRecord {
    pub report: MeasureReport,
    pub info_cost: f64,
    pub footrule_ext: f64,
    pub kendall_ext: f64,
    pub canberra: f64,
}

impl InfoRecord {
    pub fn to_json(&self) -> Value {
        let r = &self.report;
        let steps: Map<String, Value> = r
            .step_bits
            .iter()
            .map(|&(step, bits)| (step.as_str().to_string(), num4(bits)))
            .collect();
        let mut doc = Map::new();
        doc.insert("mode".into(), Value::String(mode_label(r.mode)));
        doc.insert("k".into(), Value::from(r.k));
        doc.insert("step_bits".into(), Value::Object(steps));
        doc.insert("i_tau1".into(), num4(r.i_tau1));
        doc.insert("i_tau2_given_tau1".into(), num4(r.i_tau2_given_tau1));
        doc.insert("null_bits".into(), num4(r.null_bits));
        doc.insert("total_bits".into(), num4(r.total_bits));
        doc.insert("used_null".into(), Value::Bool(r.used_null));
        doc.insert("info_cost".into(), num4(self.info_cost));
        doc.insert("footrule_ext".into(), num4(self.footrule_ext));
        doc.insert("kendall_ext".into(), num4(self.kendall_ext));
        doc.insert("canberra".into(), num4(self.canberra));
        Value::Object(doc)
    }

    /// Header and single data row, step columns flattened as `step_bits.<id>`.
    pub fn to_csv(&self) -> String {
        let r = &self.report;
        let mut header = vec!["mode".to_string(), "k".to_string()];
        let mut row = vec![mode_label(r.mode), r.k.to_string()];
        for &(step, bits) in &r.step_bits {
            header.push(format!("step_bits.{step}"));
            row.push(fmt4(bits));
        }
        let tail = [
            ("i_tau1", fmt4(r.i_tau1)),
            ("i_tau2_given_tau1", fmt4(r.i_tau2_given_tau1)),
            ("null_bits", fmt4(r.null_bits)),
            ("total_bits", fmt4(r.total_bits)),
            ("used_null", r.used_null.to_string()),
            ("info_cost", fmt4(self.info_cost)),
            ("footrule_ext", fmt4(self.footrule_ext)),
            ("kendall_ext", fmt4(self.kendall_ext)),
            ("canberra", fmt4(self.canberra)),
        ];
        for (name, value) in tail {
            header.push(name.to_string());
            row.push(value);
        }
        format!("{}\n{}\n", header.join(","), row.join(","))
    }
}

pub const SWEEP_HEADER: &str = "k,info_total,info_cost,null_bits,footrule_ext,kendall_ext,canberra";

/// One k of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub k: usize,
    pub info_total: f64,
    pub info_cost: f64,
    pub null_bits: f64,
    pub footrule_ext: f64,
    pub kendall_ext: f64,
    pub canberra: f64,
}

impl SweepRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.k,
            fmt4(self.info_total),
            fmt4(self.info_cost),
            fmt4(self.null_bits),
            fmt4(self.footrule_ext),
            fmt4(self.kendall_ext),
            fmt4(self.canberra)
        )
    }
}

pub const PERMSCAN_HEADER: &str = "index,perm,footrule,kendall,canberra,info_bits";
