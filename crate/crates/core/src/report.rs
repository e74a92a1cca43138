//! Line-oriented `key: value` reports with a JSON mirror.

use serde_json::{Map, Value};

use crate::axioms::{ArrowVerdict, AxiomReport, AxiomVerdict, Dictator};
use crate::search::{CondorcetEstimate, ContradictorySurvey, Discrepancy, LemmaReport, PrunedReport, SweepReport};
use crate::witness::Provenance;

/// An ordered list of keys and values; the key order is part of the format.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    entries: Vec<(String, Value)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<Value>) -> &mut Self {
        self.entries.push((key.into(), value.into()));
        self
    }

    pub fn extend(&mut self, other: Report) -> &mut Self {
        self.entries.extend(other.entries);
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn entries(&self) -> &[(String, Value)] {
        &self.entries
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            let v = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}: {v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let map: Map<String, Value> = self.entries.iter().cloned().collect();
        let mut out = serde_json::to_string_pretty(&Value::Object(map)).expect("serializable");
        out.push('\n');
        out
    }
}

pub fn verdict_text(v: &AxiomVerdict) -> String {
    match (&v.counterexample, v.dictator) {
        _ if v.holds => "holds".into(),
        (Some(c), _) => format!("fails: {c}"),
        (None, Some(d)) => format!("fails: {}", dictator_text(d)),
        (None, None) => "fails".into(),
    }
}

fn dictator_text(d: Dictator) -> String {
    format!("individual {} dictates component {}", d.individual, d.component)
}

pub fn verdict_report(v: &AxiomVerdict) -> Report {
    let mut r = Report::new();
    r.push(v.axiom.name(), verdict_text(v));
    r
}

pub fn axiom_report(report: &AxiomReport) -> Report {
    let mut r = Report::new();
    r.push("individuals", report.n);
    for v in &report.verdicts {
        r.push(v.axiom.name(), verdict_text(v));
    }
    let dictators: Vec<String> = report
        .component_dictators
        .iter()
        .map(|d| format!("{}@{}", d.individual, d.component))
        .collect();
    r.push(
        "component-dictators",
        if dictators.is_empty() {
            "none".into()
        } else {
            dictators.join(" ")
        },
    );
    let arrow = match &report.arrow {
        ArrowVerdict::NotApplicable => "not applicable (unanimity fails)".into(),
        ArrowVerdict::Dictator { individual } => format!("dictator {individual}"),
        ArrowVerdict::PartialDictatorship { dictators } => {
            let list: Vec<String> = dictators.iter().map(|d| dictator_text(*d)).collect();
            format!("partial dictatorship: {}", list.join(", "))
        }
        ArrowVerdict::Cycle(w) => format!(
            "cycle {} aggregates to {} ({})",
            w.profile(),
            w.aggregate(),
            w.provenance()
        ),
    };
    r.push("arrow", arrow);
    r
}

fn discrepancy_value(list: &[Discrepancy]) -> String {
    if list.is_empty() {
        return "none".into();
    }
    let shown: Vec<String> = list
        .iter()
        .take(10)
        .map(|d| format!("#{} {}", d.candidate, d.message))
        .collect();
    let more = if list.len() > 10 {
        format!("; {} more", list.len() - 10)
    } else {
        String::new()
    };
    format!("{}{more}", shown.join("; "))
}

fn provenance_counts(r: &mut Report, prefix: &str, counts: &std::collections::BTreeMap<Provenance, u64>) {
    for (p, c) in counts {
        r.push(format!("{prefix}.{p}"), *c);
    }
}

pub fn sweep_report(report: &SweepReport) -> Report {
    let mut r = Report::new();
    r.push("total", report.total)
        .push("non-unanimous", report.non_unanimous)
        .push("dictatorial", report.dictatorial)
        .push("ud-satisfying", report.ud_satisfying)
        .push("dictatorial-cycling", report.dictatorial_cycling)
        .push("witnessed", report.witnessed);
    provenance_counts(&mut r, "witnessed", &report.provenance);
    r.push("discrepancy-count", report.discrepancies.len() as u64);
    r.push("discrepancies", discrepancy_value(&report.discrepancies));
    r
}

pub fn lemma_report(report: &LemmaReport) -> Report {
    let mut r = Report::new();
    r.push("lemma-candidates", report.candidates)
        .push("lemma-ud-satisfying", report.ud_satisfying)
        .push("strictness-violations", report.strictness_violations)
        .push("strict-neutrality-violations", report.strict_neutrality_violations)
        .push("pareto-indifferent", report.pareto_indifferent)
        .push("full-neutrality-violations", report.full_neutrality_violations);
    r
}

pub fn pruned_report(report: &PrunedReport) -> Report {
    let mut r = Report::new();
    r.push("total", report.total)
        .push("eliminated", report.eliminated)
        .push("ud-satisfying", report.ud_satisfying);
    for (i, c) in &report.dictators {
        r.push(format!("dictator.{i}"), *c);
    }
    r.push("complete", report.is_complete());
    r.push("discrepancy-count", report.discrepancies.len() as u64);
    r.push("discrepancies", discrepancy_value(&report.discrepancies));
    r
}

pub fn survey_report(report: &ContradictorySurvey) -> Report {
    let mut r = Report::new();
    r.push("candidates", report.candidates)
        .push("non-dictatorial", report.non_dictatorial)
        .push("stage-three", report.stage_three)
        .push("constructed", report.constructed);
    provenance_counts(&mut r, "constructed", &report.by_case);
    r.push("absent", report.absent)
        .push("missed", report.missed)
        .push("invalid", report.invalid);
    r
}

pub fn estimate_report(e: &CondorcetEstimate) -> Report {
    let mut r = Report::new();
    r.push("voters", e.voters)
        .push("culture", e.culture.name())
        .push("trials", e.trials)
        .push("seed", e.seed)
        .push("cycles", e.cycles)
        .push("fraction", format!("{:.6}", e.fraction))
        .push("std-error", format!("{:.6}", e.std_error))
        .push("ci95", format!("[{:.6}, {:.6}]", e.ci_low, e.ci_high));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::full_report;
    use crate::swf::*;

    #[test]
    fn text_and_json_keep_order() {
        let mut r = Report::new();
        r.push("b", 1u64).push("a", "x");
        assert_eq!(r.to_text(), "b: 1\na: x\n");
        assert_eq!(r.to_json(), "{\n  \"b\": 1,\n  \"a\": \"x\"\n}\n");
    }

    #[test]
    fn majority_report_lines() {
        let text = axiom_report(&full_report(&pairwise_majority(3).unwrap()).unwrap()).to_text();
        assert!(text.contains("unanimity: holds\n"));
        assert!(text.contains("non-dictatorship: holds\n"));
        assert!(text.contains("unrestricted-domain: fails: "));
        assert!(text.contains("arrow: cycle r1=011 r2=110 r3=101 aggregates to 111 (arrow-case-2)\n"));
    }
}
