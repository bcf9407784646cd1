//! Campaign reports. A report passes iff its counterexample list is empty;
//! every counterexample carries the fully serialized instance so it can be
//! re-verified on its own.

use serde_json::{json, Value};
use wordrep_core::Config;

#[derive(Clone, Debug)]
pub struct Counterexample {
    /// Self-contained instance text (graph / embedding / triangulation
    /// format, with any auxiliary selection recorded in `detail`).
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub campaign: String,
    pub instances: usize,
    pub skipped: usize,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// 0 pass, 1 counterexamples, 3 partial (instances skipped under caps).
    pub fn exit_code(&self) -> i32 {
        if !self.counterexamples.is_empty() {
            1
        } else if self.skipped > 0 {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self, cfg: &Config) -> Value {
        json!({
            "campaign": self.campaign,
            "instances": self.instances,
            "skipped": self.skipped,
            "passed": self.passed(),
            "partial": self.skipped > 0,
            "elapsed_ms": self.elapsed_ms,
            "counterexamples": self.counterexamples.iter().map(|c| json!({
                "instance": c.instance,
                "lhs": c.lhs,
                "rhs": c.rhs,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "config": config_json(cfg),
        })
    }

    pub fn render_human(&self) -> String {
        let mut s = format!(
            "campaign {}: {} instances, {} skipped, {} counterexamples ({} ms)\n",
            self.campaign,
            self.instances,
            self.skipped,
            self.counterexamples.len(),
            self.elapsed_ms
        );
        for c in &self.counterexamples {
            s.push_str(&format!(
                "counterexample ({}): lhs={} rhs={}\n{}\n",
                c.detail, c.lhs, c.rhs, c.instance
            ));
        }
        s.push_str(if self.passed() {
            if self.skipped > 0 {
                "result: PARTIAL (no counterexamples, but instances were skipped)\n"
            } else {
                "result: PASS\n"
            }
        } else {
            "result: FAIL\n"
        });
        s
    }
}

pub fn config_json(cfg: &Config) -> Value {
    json!({
        "edge_cap": cfg.edge_cap,
        "oracle_vertex_cap": cfg.oracle_vertex_cap,
        "perfect_vertex_cap": cfg.perfect_vertex_cap,
        "witness_vertex_cap": cfg.witness_vertex_cap,
        "boundary_cap": cfg.boundary_cap,
        "census_cell_cap": cfg.census_cell_cap,
        "seed": cfg.seed,
        "oracle_fallback": cfg.oracle_fallback,
    })
}
