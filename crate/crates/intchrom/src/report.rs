//! Result records printed by the command line, as JSON or plain text.
//!
//! Rationals are always serialized as `"num/den"` strings, orientations as
//! lists of `"u>v"` pairs in canonical edge order, and cycles as
//! comma-separated canonical node sequences.

use std::fmt::Write as _;

use serde::Serialize;

pub trait Report: Serialize {
    fn text(&self) -> String;

    fn render(&self, json: bool) -> String {
        if json {
            serde_json::to_string(self).expect("reports serialize") + "\n"
        } else {
            self.text()
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub chi_int_star: String,
    pub suggested_k: Option<usize>,
    pub chi: usize,
    pub forest: bool,
    pub nodes: usize,
    pub edges: usize,
    pub orientation: Vec<String>,
    pub critical_cycle: Option<String>,
    pub chi_orientation: Vec<String>,
    pub orientations_scanned: usize,
    pub cycles: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Report for AnalyzeReport {
    fn text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "nodes: {}", self.nodes).unwrap();
        writeln!(out, "edges: {}", self.edges).unwrap();
        if self.forest {
            writeln!(
                out,
                "chi_int_star: {} (forest, no critical cycle)",
                self.chi_int_star
            )
            .unwrap();
        } else {
            writeln!(out, "chi_int_star: {}", self.chi_int_star).unwrap();
            if let Some(c) = &self.critical_cycle {
                writeln!(out, "critical cycle: {c}").unwrap();
            }
            if let Some(k) = self.suggested_k {
                writeln!(out, "suggested k: {k}").unwrap();
            }
        }
        writeln!(out, "orientation: {}", self.orientation.join(" ")).unwrap();
        writeln!(out, "chi: {}", self.chi).unwrap();
        writeln!(out, "chi orientation: {}", self.chi_orientation.join(" ")).unwrap();
        writeln!(out, "orientations scanned: {}", self.orientations_scanned).unwrap();
        writeln!(out, "simple cycles: {}", self.cycles).unwrap();
        if let Some(ms) = self.timing_ms {
            writeln!(out, "time: {ms:.3} ms").unwrap();
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ChiReport {
    pub chi: usize,
    pub orientation: Vec<String>,
    pub longest_path: Vec<usize>,
}

impl Report for ChiReport {
    fn text(&self) -> String {
        format!(
            "chi: {}\norientation: {}\nlongest path: {}\n",
            self.chi,
            self.orientation.join(" "),
            join(&self.longest_path, " -> ")
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ColoringReport {
    pub k: usize,
    pub palette: usize,
    pub interleaved: bool,
    pub colors: Vec<Vec<usize>>,
    #[serde(skip)]
    pub text: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChiIntKReport {
    pub k: usize,
    pub chi_int_k: usize,
    pub ratio: String,
    pub orientation: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<ColoringReport>,
}

impl Report for ChiIntKReport {
    fn text(&self) -> String {
        let mut out = format!(
            "k: {}\nchi_int_k: {}\nratio: {}\norientation: {}\n",
            self.k,
            self.chi_int_k,
            self.ratio,
            self.orientation.join(" ")
        );
        if let Some(c) = &self.coloring {
            out.push_str(&c.text);
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrientationsReport {
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orientations: Option<Vec<Vec<String>>>,
}

impl Report for OrientationsReport {
    fn text(&self) -> String {
        match &self.orientations {
            None => format!("{}\n", self.count),
            Some(list) => list.iter().map(|o| o.join(" ") + "\n").collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CyclesReport {
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycles: Option<Vec<String>>,
}

impl Report for CyclesReport {
    fn text(&self) -> String {
        match &self.cycles {
            None => format!("{}\n", self.count),
            Some(list) => list.iter().map(|c| format!("{c}\n")).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ProductReport {
    pub k: usize,
    pub nodes: usize,
    pub edges: usize,
    pub edge_list: Vec<(usize, usize)>,
    #[serde(skip)]
    pub text: String,
}

impl Report for ProductReport {
    fn text(&self) -> String {
        self.text.clone()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SerReport {
    pub initial: Vec<String>,
    pub tail_length: usize,
    pub period: usize,
    pub ops_per_node: Vec<usize>,
    pub rate: Option<usize>,
    pub concurrency: Option<String>,
    pub cycle_formula: Option<String>,
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<Vec<String>>>,
}

impl Report for SerReport {
    fn text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "initial: {}", self.initial.join(" ")).unwrap();
        writeln!(out, "tail length: {}", self.tail_length).unwrap();
        writeln!(out, "period: {}", self.period).unwrap();
        writeln!(out, "ops per node: {}", join(&self.ops_per_node, " ")).unwrap();
        if let Some(r) = self.rate {
            writeln!(out, "r: {r}").unwrap();
        }
        if let Some(c) = &self.concurrency {
            writeln!(out, "concurrency: {c}").unwrap();
        }
        if let Some(c) = &self.cycle_formula {
            writeln!(out, "cycle formula: {c}").unwrap();
        }
        if let Some(note) = &self.note {
            writeln!(out, "note: {note}").unwrap();
        }
        if let Some(trace) = &self.trace {
            for (i, state) in trace.iter().enumerate() {
                writeln!(out, "step {i}: {}", state.join(" ")).unwrap();
            }
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub oracle: &'static str,
    pub value: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycles: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<ColoringReport>,
}

impl Report for OracleReport {
    fn text(&self) -> String {
        let mut out = format!("{}\n", self.value);
        for c in self.cycles.iter().flatten() {
            writeln!(out, "{c}").unwrap();
        }
        if let Some(c) = &self.coloring {
            out.push_str(&c.text);
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma3CheckReport {
    pub k: usize,
    pub passed: bool,
    pub orientations_checked: usize,
    pub paths_checked: usize,
    pub violations: Vec<String>,
}

impl Report for Lemma3CheckReport {
    fn text(&self) -> String {
        let mut out = format!(
            "{}\nk: {}\norientations checked: {}\nlongest paths checked: {}\n",
            if self.passed { "pass" } else { "FAIL" },
            self.k,
            self.orientations_checked,
            self.paths_checked
        );
        for v in &self.violations {
            writeln!(out, "violation: {v}").unwrap();
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphReport {
    pub nodes: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip)]
    pub text: String,
}

impl Report for GraphReport {
    fn text(&self) -> String {
        self.text.clone()
    }
}

pub(crate) fn join(values: &[usize], sep: &str) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}
