use bomi::analysis::{evaluate, AnalysisConfig, FindingSeverity};
use bomi::corpus;
use bomi::export::{to_dot, DotStyle};
use bomi::model::{conformance, resolve, BomiModel, ElementCensus};
use bomi::syntax::parse;

fn load(src: &str, file: &str) -> BomiModel {
    let (ast, diags) = parse(src, file);
    assert!(diags.is_empty(), "{file}: {diags:?}");
    let model = resolve(&ast).unwrap_or_else(|e| panic!("{file}: {e:?}"));
    assert!(conformance(&model).is_empty(), "{file}");
    model
}

#[test]
fn corpus_census_rows() {
    let expected = [
        [1, 2, 2, 1, 2, 1, 1],
        [1, 3, 1, 1, 5, 1, 1],
        [1, 5, 5, 4, 0, 1, 1],
        [1, 3, 1, 2, 2, 1, 1],
    ];
    for ((file, src), row) in corpus::ALL.iter().zip(expected) {
        assert_eq!(load(src, file).census(), ElementCensus::from_row(row), "{file}");
    }
}

#[test]
fn company_a_findings() {
    let model = load(corpus::COMPANY_A, "company-a.bomi");
    let findings = evaluate(&model, &AnalysisConfig::default()).unwrap();
    let warnings: Vec<(&str, &str)> = findings
        .iter()
        .filter(|f| f.severity == FindingSeverity::Warning)
        .map(|f| (f.rule_id, f.subject_id.as_str()))
        .collect();
    assert_eq!(
        warnings,
        [
            ("US-02", "Developer->UserStory"),
            ("US-02", "ProductOwner->UserStory")
        ]
    );
    assert!(findings
        .iter()
        .all(|f| f.severity == FindingSeverity::Warning || f.rule_id == "IN-01"));
}

#[test]
fn company_a_dot_shape() {
    let model = load(corpus::COMPANY_A, "company-a.bomi");
    let dot = to_dot(&model, &DotStyle::default());
    assert!(dot.starts_with("// BOMI model \"Company A\": 7 nodes, 9 edges\n"), "{dot}");
}
