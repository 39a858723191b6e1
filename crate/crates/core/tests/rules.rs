//! One firing and one negation fixture per catalog rule. Each fixture is a
//! healthy base model with a single change, so any other warning is a bug.

use bomi::analysis::{builtin_rules, evaluate, AnalysisConfig, FindingSeverity};
use bomi::model::resolve;
use bomi::syntax::parse;

struct Base<'a> {
    bo: &'a str,
    usage: &'a str,
    crud: &'a str,
    governs: &'a str,
    members: &'a str,
    responsible: bool,
    governed: bool,
}

const HEALTHY: Base<'static> = Base {
    bo: "",
    usage: "",
    crud: "RU",
    governs: "",
    members: "R",
    responsible: true,
    governed: true,
};

impl Base<'_> {
    fn source(&self) -> String {
        let mut s = format!(
            "model \"fixture\" {{\n  bo B {{ {} }}\n  mi I {{ types: [Team] }}\n  mi J {{ types: [Silo] }}\n  \
             role R {{ part_of: I }}\n  role S {{ part_of: I }}\n  role T {{ part_of: J }}\n  \
             usage R -> B {{ crud: [{}] {} }}\n",
            self.bo, self.crud, self.usage
        );
        if self.responsible {
            s.push_str("  responsible R -> B\n");
        }
        if self.governed {
            s.push_str(&format!(
                "  governance G {{ members: [{}] governs B {{ {} }} }}\n",
                self.members, self.governs
            ));
        }
        s.push_str("}\n");
        s
    }
}

fn warnings(src: &str, config: &AnalysisConfig) -> Vec<&'static str> {
    let (ast, diags) = parse(src, "fixture.bomi");
    assert!(diags.is_empty(), "{diags:?}\n{src}");
    let model = resolve(&ast).unwrap();
    evaluate(&model, config)
        .unwrap()
        .into_iter()
        .filter(|f| f.severity == FindingSeverity::Warning || f.rule_id == "WS-02")
        .map(|f| f.rule_id)
        .collect()
}

fn fixtures() -> Vec<(&'static str, Base<'static>, Base<'static>)> {
    let bo = |fire: &'static str, neg: &'static str| (Base { bo: fire, ..HEALTHY }, Base { bo: neg, ..HEALTHY });
    let usage =
        |fire: &'static str, neg: &'static str| (Base { usage: fire, ..HEALTHY }, Base { usage: neg, ..HEALTHY });
    let mut out = Vec::new();
    let mut add = |id, (fire, neg)| out.push((id, fire, neg));
    add("BO-01", bo("modularity: low", "modularity: medium"));
    add("BO-02", bo("internal_consistency: low", "internal_consistency: high"));
    add("BO-03", bo("external_consistency: low", "external_consistency: unknown"));
    add("BO-04", bo("maintainability: high", "maintainability: low"));
    add("BO-05", bo("up_to_date: low", "up_to_date: high"));
    add("BO-06", bo("level_of_detail: high frequency_of_change: high", "level_of_detail: high frequency_of_change: medium"));
    add("BO-07", bo("lifecycle: Retire frequency_of_change: high", "lifecycle: Operation frequency_of_change: high"));
    add("BO-08", bo("lifecycle: Planning frequency_of_change: low", "lifecycle: Planning frequency_of_change: high"));
    add("US-01", usage("fit_for_purpose: low", "fit_for_purpose: medium"));
    add("US-02", usage("criticality: high stability: low", "criticality: high stability: medium"));
    add("US-03", usage("criticality: high accessibility: low", "criticality: low accessibility: low"));
    add("MS-01", (Base { governed: false, ..HEALTHY }, HEALTHY));
    add("MS-02", (Base { responsible: false, ..HEALTHY }, HEALTHY));
    add("MS-03", (Base { crud: "CR", ..HEALTHY }, Base { crud: "U", ..HEALTHY }));
    add("AC-01", (Base { members: "T", ..HEALTHY }, Base { members: "", ..HEALTHY }));
    add(
        "AC-02",
        (
            Base { bo: "frequency_of_change: high", governs: "frequency_of_coordination: low", ..HEALTHY },
            Base { bo: "frequency_of_change: high", governs: "frequency_of_coordination: high", ..HEALTHY },
        ),
    );
    add("WS-01", (Base { members: "R, S", ..HEALTHY }, Base { members: "R, T", ..HEALTHY }));
    out
}

#[test]
fn every_rule_has_a_firing_and_a_negation_fixture() {
    let config = AnalysisConfig::default();
    let cases = fixtures();
    for (id, fire, neg) in &cases {
        assert_eq!(warnings(&fire.source(), &config), [*id], "{id} firing\n{}", fire.source());
        assert_eq!(warnings(&neg.source(), &config), Vec::<&str>::new(), "{id} negation\n{}", neg.source());
    }
    let covered: Vec<&str> = cases.iter().map(|c| c.0).chain(["WS-02"]).collect();
    for rule in builtin_rules() {
        assert!(covered.contains(&rule.id), "no fixture for {}", rule.id);
    }
}

#[test]
fn governed_through_island_usage_counts_as_use() {
    let src = HEALTHY.source().replace("usage R -> B", "usage I -> B");
    assert_eq!(warnings(&src, &AnalysisConfig::default()), Vec::<&str>::new());
}

#[test]
fn ws02_uses_configured_thresholds() {
    let src = HEALTHY.source();
    let mut config = AnalysisConfig::default();
    assert_eq!(warnings(&src, &config), Vec::<&str>::new());
    config.thresholds.max_elements = 5;
    assert_eq!(warnings(&src, &config), ["WS-02"]);
    config.thresholds.max_elements = 30;
    config.thresholds.max_usage_fan_in = 1;
    assert_eq!(warnings(&src.replace("role T", "usage S -> B {}\n  role T"), &config), ["WS-02"]);
}

#[test]
fn fan_in_above_default_limit() {
    let mut src = String::from("model \"fan\" {\n  bo B {}\n");
    for i in 0..9 {
        src.push_str(&format!("  mi I{i} {{ types: [Team] }}\n  usage I{i} -> B {{}}\n"));
    }
    src.push_str("}\n");
    let (ast, _) = parse(&src, "fan.bomi");
    let model = resolve(&ast).unwrap();
    let ws02: Vec<_> = evaluate(&model, &AnalysisConfig::default())
        .unwrap()
        .into_iter()
        .filter(|f| f.rule_id == "WS-02")
        .map(|f| f.subject_id)
        .collect();
    assert_eq!(ws02, ["B"]);
}

#[test]
fn all_unknown_values_raise_no_value_warnings() {
    let src = r#"model "blank" { bo B {} mi I { types: [Team] } role R { part_of: I } usage R -> B {} }"#;
    let found = warnings(src, &AnalysisConfig::default());
    assert!(found.iter().all(|id| id.starts_with("MS-")), "{found:?}");
}

#[test]
fn single_low_modularity_gives_one_warning_and_incompleteness_info() {
    let src = r#"model "one" { bo B { modularity: low } }"#;
    let only_bo_rules = AnalysisConfig::only(["BO-01", "BO-02", "BO-06", "IN-01"]);
    let (ast, _) = parse(src, "one.bomi");
    let findings = evaluate(&resolve(&ast).unwrap(), &only_bo_rules).unwrap();
    let ids: Vec<_> = findings.iter().map(|f| (f.rule_id, f.severity)).collect();
    assert_eq!(ids, [("BO-01", FindingSeverity::Warning), ("IN-01", FindingSeverity::Info)]);
    assert!(findings[1].message.contains("internal_consistency"));
    assert!(!findings[1].message.contains("modularity"));
}
