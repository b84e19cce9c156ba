//! Records and their text, CSV and JSON renderings.

use std::io::{self, Write};

use casimir_core::Numerics;
use serde::{Deserialize, Serialize};

pub const CSV_HEADER: &str =
    "d,m,a,ma,energy_per_dof,force_per_dof,force_total,method,error_estimate";

/// `method` value of a sweep row whose evaluation failed.
pub const FAILED: &str = "failed";

/// One sweep grid point. Numeric fields are `None` when not available
/// (massive bosonic energy) or when the evaluation failed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub d: f64,
    pub m: f64,
    pub a: f64,
    pub ma: f64,
    pub energy_per_dof: Option<f64>,
    pub force_per_dof: Option<f64>,
    pub force_total: Option<f64>,
    pub method: String,
    pub error_estimate: Option<f64>,
}

impl OutputRecord {
    pub fn failed(d: f64, m: f64, a: f64) -> Self {
        Self {
            d,
            m,
            a,
            ma: m * a,
            energy_per_dof: None,
            force_per_dof: None,
            force_total: None,
            method: FAILED.to_string(),
            error_estimate: None,
        }
    }

    pub fn is_failed(&self) -> bool {
        self.method == FAILED
    }

    pub fn csv_line(&self) -> String {
        let opt = |v: Option<f64>| v.map(|x| format!("{x:e}")).unwrap_or_default();
        format!(
            "{:e},{:e},{:e},{:e},{},{},{},{},{}",
            self.d,
            self.m,
            self.a,
            self.ma,
            opt(self.energy_per_dof),
            opt(self.force_per_dof),
            opt(self.force_total),
            self.method,
            opt(self.error_estimate),
        )
    }
}

/// A single `force` or `energy` evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub quantity: String,
    pub statistics: String,
    pub d: f64,
    pub m: f64,
    pub a: f64,
    pub ma: f64,
    pub dof: u32,
    pub per_dof: bool,
    pub value: f64,
    pub method: String,
    pub error_estimate: f64,
    pub terms_used: usize,
}

pub const EVALUATION_CSV_HEADER: &str =
    "quantity,statistics,d,m,a,ma,dof,per_dof,value,method,error_estimate,terms_used";

impl Evaluation {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{:e},{:e},{:e},{:e},{},{},{:e},{},{:e},{}",
            self.quantity,
            self.statistics,
            self.d,
            self.m,
            self.a,
            self.ma,
            self.dof,
            self.per_dof,
            self.value,
            self.method,
            self.error_estimate,
            self.terms_used,
        )
    }

    pub fn text(&self) -> String {
        let scope = if self.per_dof { "per_dof" } else { "total" };
        format!(
            "{} {}, d = {}, m = {}, a = {}\n{}_{scope} = {}\nmethod = {}\nerror_estimate = {}\nterms_used = {}\n",
            self.statistics,
            self.quantity,
            self.d,
            self.m,
            self.a,
            self.quantity,
            number(self.value),
            self.method,
            number(self.error_estimate),
            self.terms_used,
        )
    }
}

#[derive(Debug, Serialize)]
pub struct Meta<'a, P: Serialize> {
    pub parameters: &'a P,
    pub tolerances: &'a Numerics,
    pub version: &'static str,
}

#[derive(Debug, Serialize)]
pub struct Document<'a, P: Serialize, R: Serialize> {
    pub meta: Meta<'a, P>,
    pub rows: &'a [R],
}

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn write_json<P: Serialize, R: Serialize>(
    out: &mut impl Write,
    parameters: &P,
    tolerances: &Numerics,
    rows: &[R],
) -> io::Result<()> {
    let doc = Document {
        meta: Meta {
            parameters,
            tolerances,
            version: VERSION,
        },
        rows,
    };
    serde_json::to_writer_pretty(&mut *out, &doc)?;
    writeln!(out)
}

/// Plain decimal in a readable range, scientific otherwise; both forms are
/// the shortest representation that parses back to the same `f64`.
pub fn number(x: f64) -> String {
    let ax = x.abs();
    if x == 0.0 || (1e-4..1e6).contains(&ax) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}
