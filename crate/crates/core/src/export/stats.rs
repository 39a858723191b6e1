//! Census and metrics reports.

use std::fmt::Write;

use serde_json::{Map, Value};

use crate::analysis::complexity;
use crate::model::{BomiModel, ElementCensus};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatsFormat {
    Table,
    Json,
}

const JSON_KEYS: [&str; 7] = ["bo", "mi", "usage", "driver", "role", "governanceTeam", "governs"];

/// One census row per model, optionally followed by complexity metrics.
pub fn stats_report(model: &BomiModel, format: StatsFormat, with_metrics: bool) -> String {
    let census = model.census();
    match format {
        StatsFormat::Table => table(model, &census, with_metrics),
        StatsFormat::Json => json(model, &census, with_metrics),
    }
}

fn table(model: &BomiModel, census: &ElementCensus, with_metrics: bool) -> String {
    let name_width = model.name().chars().count().max("Model".len());
    let mut header = format!("{:<name_width$}", "Model");
    let mut row = format!("{:<name_width$}", model.name());
    for (col, n) in ElementCensus::COLUMNS.iter().zip(census.row()) {
        let w = col.len();
        let _ = write!(header, "  {col:>w$}");
        let _ = write!(row, "  {n:>w$}");
    }
    let mut out = format!("{}\n{}\n", header.trim_end(), row.trim_end());
    if with_metrics {
        let m = complexity(model);
        let _ = writeln!(out);
        let _ = writeln!(out, "elements: {}", m.element_count);
        let _ = writeln!(out, "relations: {}", m.relation_count);
        let _ = writeln!(
            out,
            "island coupling: {:.2} ({}/{})",
            m.avg_island_coupling(),
            m.crossing_relations,
            m.relation_count
        );
        let _ = writeln!(out, "max usage fan-in: {}", m.max_usage_fan_in());
        for (bo, n) in &m.usage_fan_in {
            let _ = writeln!(out, "  fan-in {bo}: {n}");
        }
        for (team, n) in &m.governance_diversity {
            let _ = writeln!(out, "  governance diversity {team}: {n}");
        }
    }
    out
}

fn counts(map: &std::collections::BTreeMap<String, usize>) -> Value {
    Value::Object(
        map.iter()
            .map(|(k, v)| (k.clone(), Value::from(*v)))
            .collect::<Map<_, _>>(),
    )
}

fn json(model: &BomiModel, census: &ElementCensus, with_metrics: bool) -> String {
    let mut c = Map::new();
    let mut keys: Vec<_> = JSON_KEYS.iter().zip(census.row()).collect();
    keys.sort();
    for (k, n) in keys {
        c.insert((*k).to_owned(), Value::from(n));
    }
    let mut root = Map::new();
    root.insert("census".into(), Value::Object(c));
    if with_metrics {
        let m = complexity(model);
        let mut metrics = Map::new();
        metrics.insert("avgIslandCoupling".into(), Value::from(m.avg_island_coupling()));
        metrics.insert("crossingRelations".into(), Value::from(m.crossing_relations));
        metrics.insert("elementCount".into(), Value::from(m.element_count));
        metrics.insert("governanceDiversity".into(), counts(&m.governance_diversity));
        metrics.insert("maxUsageFanIn".into(), Value::from(m.max_usage_fan_in()));
        metrics.insert("relationCount".into(), Value::from(m.relation_count));
        metrics.insert("usageFanIn".into(), counts(&m.usage_fan_in));
        root.insert("metrics".into(), Value::Object(metrics));
    }
    root.insert("model".into(), Value::from(model.name()));
    let mut text = serde_json::to_string_pretty(&Value::Object(root)).expect("JSON values serialize");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::resolve;
    use crate::syntax::parse;

    #[test]
    fn table_row_matches_census() {
        let (ast, _) = parse(
            r#"model "X" { bo B {} mi I { types: [Team] } mi J { types: [Silo] } usage I -> B {} }"#,
            "t",
        );
        let m = resolve(&ast).unwrap();
        let out = stats_report(&m, StatsFormat::Table, false);
        let row: Vec<&str> = out.lines().nth(1).unwrap().split_whitespace().collect();
        assert_eq!(row, ["X", "1", "2", "1", "0", "0", "0", "0"]);
        let json: Value = serde_json::from_str(&stats_report(&m, StatsFormat::Json, true)).unwrap();
        assert_eq!(json["census"]["mi"], 2);
        assert_eq!(json["metrics"]["elementCount"], 4);
    }
}
