//! Campaign reports: per-instance records keyed by instance digest, with a
//! machine-readable JSON form (schema version 1) and a human summary.
//! Records are sorted by digest before emission so identical runs emit
//! identical reports modulo the timing fields.

use std::fmt::Write as _;

use serde_json::{json, Value};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Record {
    pub digest: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub micros: u128,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub campaign: String,
    pub seed: u64,
    pub records: Vec<Record>,
}

impl VerificationReport {
    pub fn new(campaign: &str, seed: u64) -> Self {
        VerificationReport {
            campaign: campaign.to_string(),
            seed,
            records: Vec::new(),
        }
    }

    pub fn push(&mut self, record: Record) {
        self.records.push(record);
    }

    /// Sorts records by digest; call once after all records are in.
    pub fn finalize(&mut self) {
        self.records
            .sort_by(|a, b| a.digest.cmp(&b.digest).then(a.expected.cmp(&b.expected)));
    }

    pub fn instance_count(&self) -> usize {
        self.records.len()
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0 && self.count(Status::Inconclusive) == 0
    }

    /// 0 = all pass, 1 = some fail, 3 = inconclusive only.
    pub fn exit_code(&self) -> i32 {
        if self.count(Status::Fail) > 0 {
            1
        } else if self.count(Status::Inconclusive) > 0 {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": REPORT_SCHEMA_VERSION,
            "campaign": self.campaign,
            "seed": self.seed,
            "instances": self.instance_count(),
            "summary": {
                "pass": self.count(Status::Pass),
                "fail": self.count(Status::Fail),
                "inconclusive": self.count(Status::Inconclusive),
            },
            "records": self.records.iter().map(|r| json!({
                "instance": r.digest,
                "expected": r.expected,
                "computed": r.computed,
                "status": r.status.as_str(),
                "micros": r.micros,
            })).collect::<Vec<_>>(),
        })
    }

    /// Human-readable summary; non-passing records are listed in full.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "campaign {}  seed {}  instances {}",
            self.campaign,
            self.seed,
            self.instance_count()
        );
        let _ = writeln!(
            out,
            "pass {}  fail {}  inconclusive {}",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Inconclusive)
        );
        for record in &self.records {
            if record.status != Status::Pass {
                let _ = writeln!(
                    out,
                    "{} {}: expected {} computed {}",
                    record.status.as_str(),
                    record.digest,
                    record.expected,
                    record.computed
                );
            }
        }
        out
    }
}
