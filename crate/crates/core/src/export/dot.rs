//! Graphviz DOT rendering.

use std::fmt::Write;

use thiserror::Error;

use crate::model::types::*;
use crate::model::BomiModel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid color `{0}`: expected #RRGGBB, #RRGGBBAA or an X11 color name")]
pub struct InvalidColor(pub String);

const X11_NAMES: &[&str] = &[
    "aliceblue", "antiquewhite", "aquamarine", "azure", "beige", "bisque", "black",
    "blanchedalmond", "blue", "blueviolet", "brown", "burlywood", "cadetblue", "chartreuse",
    "chocolate", "coral", "cornflowerblue", "cornsilk", "crimson", "cyan", "darkblue",
    "darkcyan", "darkgoldenrod", "darkgray", "darkgreen", "darkgrey", "darkkhaki",
    "darkmagenta", "darkolivegreen", "darkorange", "darkorchid", "darkred", "darksalmon",
    "darkseagreen", "darkslateblue", "darkslategray", "darkslategrey", "darkturquoise",
    "darkviolet", "deeppink", "deepskyblue", "dimgray", "dimgrey", "dodgerblue", "firebrick",
    "floralwhite", "forestgreen", "gainsboro", "ghostwhite", "gold", "goldenrod", "gray",
    "green", "greenyellow", "grey", "honeydew", "hotpink", "indianred", "indigo", "invis",
    "ivory", "khaki", "lavender", "lavenderblush", "lawngreen", "lemonchiffon", "lightblue",
    "lightcoral", "lightcyan", "lightgoldenrod", "lightgoldenrodyellow", "lightgray",
    "lightgrey", "lightpink", "lightsalmon", "lightseagreen", "lightskyblue", "lightslateblue",
    "lightslategray", "lightslategrey", "lightsteelblue", "lightyellow", "limegreen", "linen",
    "magenta", "maroon", "mediumaquamarine", "mediumblue", "mediumorchid", "mediumpurple",
    "mediumseagreen", "mediumslateblue", "mediumspringgreen", "mediumturquoise",
    "mediumvioletred", "midnightblue", "mintcream", "mistyrose", "moccasin", "navajowhite",
    "navy", "navyblue", "none", "oldlace", "olivedrab", "orange", "orangered", "orchid",
    "palegoldenrod", "palegreen", "paleturquoise", "palevioletred", "papayawhip", "peachpuff",
    "peru", "pink", "plum", "powderblue", "purple", "red", "rosybrown", "royalblue",
    "saddlebrown", "salmon", "sandybrown", "seagreen", "seashell", "sienna", "skyblue",
    "slateblue", "slategray", "slategrey", "snow", "springgreen", "steelblue", "tan",
    "thistle", "tomato", "transparent", "turquoise", "violet", "violetred", "wheat", "white",
    "whitesmoke", "yellow", "yellowgreen",
];

/// Accepts `#RRGGBB`, `#RRGGBBAA` and X11 names, including the numbered
/// variants (`green3`, `gray50`).
pub fn is_valid_color(color: &str) -> bool {
    if let Some(hex) = color.strip_prefix('#') {
        return matches!(hex.len(), 6 | 8) && hex.chars().all(|c| c.is_ascii_hexdigit());
    }
    let lower = color.to_ascii_lowercase();
    let base = lower.trim_end_matches(|c: char| c.is_ascii_digit());
    let digits = &lower[base.len()..];
    if !X11_NAMES.contains(&base) {
        return false;
    }
    if digits.is_empty() {
        return true;
    }
    let Ok(n) = digits.parse::<u32>() else {
        return false;
    };
    if base == "gray" || base == "grey" {
        n <= 100 && !(digits.len() > 1 && digits.starts_with('0'))
    } else {
        digits.len() == 1 && (1..=4).contains(&n)
    }
}

/// Rendering options. Colors are validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DotStyle {
    bo_fill: String,
    mi_fill: String,
    pub show_attributes: bool,
    pub show_notes: bool,
    /// Draw usage and governs links as intermediate nodes. Every counted
    /// element then has exactly one node.
    pub association_nodes: bool,
}

impl Default for DotStyle {
    fn default() -> Self {
        Self {
            bo_fill: "darkgray".into(),
            mi_fill: "green".into(),
            show_attributes: true,
            show_notes: false,
            association_nodes: false,
        }
    }
}

impl DotStyle {
    pub fn bo_fill(&self) -> &str {
        &self.bo_fill
    }

    pub fn mi_fill(&self) -> &str {
        &self.mi_fill
    }

    pub fn with_bo_fill(mut self, color: &str) -> Result<Self, InvalidColor> {
        if !is_valid_color(color) {
            return Err(InvalidColor(color.into()));
        }
        self.bo_fill = color.into();
        Ok(self)
    }

    pub fn with_mi_fill(mut self, color: &str) -> Result<Self, InvalidColor> {
        if !is_valid_color(color) {
            return Err(InvalidColor(color.into()));
        }
        self.mi_fill = color.into();
        Ok(self)
    }
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => {}
            c => out.push(c),
        }
    }
    out
}

struct Graph {
    body: String,
    nodes: usize,
    edges: usize,
}

impl Graph {
    fn node(&mut self, id: &str, attrs: &str, label_lines: &[String]) {
        let label = label_lines.iter().map(|l| escape(l)).collect::<Vec<_>>().join("\\n");
        let _ = writeln!(self.body, "  \"{}\" [{attrs}, label=\"{label}\"];", escape(id));
        self.nodes += 1;
    }

    fn edge(&mut self, from: &str, to: &str, label: Option<&str>, extra: &str) {
        let mut attrs = Vec::new();
        if let Some(l) = label {
            attrs.push(format!("label=\"{}\"", escape(l)));
        }
        if !extra.is_empty() {
            attrs.push(extra.to_owned());
        }
        let attrs = if attrs.is_empty() {
            String::new()
        } else {
            format!(" [{}]", attrs.join(", "))
        };
        let _ = writeln!(self.body, "  \"{}\" -> \"{}\"{attrs};", escape(from), escape(to));
        self.edges += 1;
    }
}

fn qual_line(style: &DotStyle, key: &str, q: &QualAttr) -> Option<String> {
    if q.is_unset() {
        return None;
    }
    match &q.note {
        Some(note) if style.show_notes => Some(format!("{key}: {} ({note})", q.level)),
        _ if q.level.is_known() => Some(format!("{key}: {}", q.level)),
        _ => None,
    }
}

fn text_line(key: &str, v: &Option<String>) -> Option<String> {
    v.as_ref().map(|s| format!("{key}: {s}"))
}

fn bo_lines(style: &DotStyle, b: &BoundaryObject) -> Vec<String> {
    let mut lines = vec![b.id.clone()];
    if !style.show_attributes {
        return lines;
    }
    lines.extend(b.super_type.as_ref().map(|s| match s {
        SuperType::Known(k) => format!("supertype: {k}"),
        SuperType::Other(l) => format!("supertype: {l}"),
    }));
    lines.extend(text_line("subtype", &b.sub_type));
    lines.extend(text_line("purpose", &b.purpose));
    lines.extend(qual_line(style, "level_of_detail", &b.level_of_detail));
    lines.extend(qual_line(style, "frequency_of_change", &b.frequency_of_change));
    lines.extend(qual_line(style, "modularity", &b.modularity));
    lines.extend(qual_line(style, "maintainability", &b.maintenance_burden));
    lines.extend(b.prescriptive.map(|p| format!("prescriptive: {p}")));
    if b.lifecycle != LifecycleStage::Unknown {
        lines.push(format!("lifecycle: {}", b.lifecycle));
    }
    lines.extend(text_line("representation_format", &b.representation_format));
    lines.extend(qual_line(style, "internal_consistency", &b.internal_consistency));
    lines.extend(qual_line(style, "external_consistency", &b.external_consistency));
    lines.extend(text_line("versioning", &b.versioning));
    lines.extend(qual_line(style, "connectedness", &b.connectedness));
    lines.extend(qual_line(style, "up_to_date", &b.up_to_date));
    lines
}

fn usage_lines(style: &DotStyle, u: &UsageLink) -> Vec<String> {
    let mut lines = Vec::new();
    if !style.show_attributes {
        return lines;
    }
    lines.extend(qual_line(style, "accessibility", &u.accessibility));
    lines.extend(qual_line(style, "stability", &u.stability));
    lines.extend(qual_line(style, "criticality", &u.criticality));
    lines.extend(qual_line(style, "fit_for_purpose", &u.fit_for_purpose));
    if !u.crud.is_empty() {
        lines.push(format!("crud: {}", u.crud.iter().map(|c| c.letter()).collect::<String>()));
    }
    lines
}

fn governs_lines(style: &DotStyle, g: &GovernsLink) -> Vec<String> {
    let mut lines = Vec::new();
    if !style.show_attributes {
        return lines;
    }
    lines.extend(text_line("mechanism", &g.coordination_mechanism));
    lines.extend(qual_line(style, "frequency", &g.frequency_of_coordination));
    lines
}

/// Renders the model as a directed graph. Output is deterministic: nodes
/// and edges follow declaration order.
pub fn to_dot(model: &BomiModel, style: &DotStyle) -> String {
    let mut g = Graph {
        body: String::new(),
        nodes: 0,
        edges: 0,
    };

    for b in model.boundary_objects() {
        let attrs = format!("shape=box, style=filled, fillcolor=\"{}\"", escape(&style.bo_fill));
        g.node(&b.id, &attrs, &bo_lines(style, b));
    }
    for i in model.islands() {
        let attrs = format!(
            "shape=box, style=\"rounded,filled\", fillcolor=\"{}\"",
            escape(&style.mi_fill)
        );
        let mut lines = vec![i.id.clone()];
        if style.show_attributes && !i.types.is_empty() {
            lines.push(i.types.iter().map(|t| t.name()).collect::<Vec<_>>().join(", "));
        }
        g.node(&i.id, &attrs, &lines);
    }
    for r in model.roles() {
        let mut lines = vec![r.id.clone()];
        if style.show_attributes {
            lines.extend(r.name.clone());
        }
        g.node(&r.id, "shape=ellipse", &lines);
    }
    for d in model.drivers() {
        let mut lines = vec![d.id.clone()];
        if style.show_attributes {
            lines.extend(d.driver_type.map(|t| format!("type: {t}")));
            lines.extend(text_line("subtype", &d.sub_type));
            lines.extend(d.distance_type.map(|t| format!("distance: {t}")));
            if d.distance_size.is_known() {
                lines.push(format!("distance size: {}", d.distance_size));
            }
        }
        g.node(&d.id, "shape=hexagon", &lines);
    }
    for t in model.governance_teams() {
        let mut lines = vec![t.id.clone()];
        if style.show_attributes {
            lines.extend(t.name.clone());
        }
        g.node(&t.id, "shape=component", &lines);
    }

    for r in model.roles() {
        if let Some(i) = r.part_of {
            g.edge(&r.id, &model.island(i).id, Some("part of"), "style=dashed");
        }
    }
    for t in model.governance_teams() {
        for &r in &t.members {
            g.edge(&model.role(r).id, &t.id, Some("member of"), "style=dashed");
        }
    }
    for d in model.drivers() {
        for &i in &d.drives {
            g.edge(&d.id, &model.island(i).id, Some("drives"), "");
        }
    }
    for u in model.usages() {
        let user = model.user_id(u.user);
        let bo = &model.bo(u.bo).id;
        let lines = usage_lines(style, u);
        if style.association_nodes {
            let id = format!("usage:{}", model.usage_key(u));
            let mut label = vec!["usage".to_owned()];
            label.extend(lines);
            g.node(&id, "shape=note", &label);
            g.edge(user, &id, Some("uses"), "");
            g.edge(&id, bo, None, "");
        } else {
            let label = std::iter::once("uses".to_owned()).chain(lines).collect::<Vec<_>>().join("\n");
            g.edge(user, bo, Some(&label), "");
        }
    }
    for r in model.responsibilities() {
        g.edge(&model.role(r.role).id, &model.bo(r.bo).id, Some("responsible"), "style=bold");
    }
    for link in model.governs_links() {
        let team = &model.team(link.team).id;
        let bo = &model.bo(link.bo).id;
        let lines = governs_lines(style, link);
        if style.association_nodes {
            let id = format!("governs:{}", model.governs_key(link));
            let mut label = vec!["governs".to_owned()];
            label.extend(lines);
            g.node(&id, "shape=note", &label);
            g.edge(team, &id, Some("governs"), "");
            g.edge(&id, bo, None, "");
        } else {
            let label = std::iter::once("governs".to_owned()).chain(lines).collect::<Vec<_>>().join("\n");
            g.edge(team, bo, Some(&label), "");
        }
    }

    let mut out = String::new();
    let _ = writeln!(
        out,
        "// BOMI model \"{}\": {} nodes, {} edges",
        model.name().replace(['\n', '\r'], " "),
        g.nodes,
        g.edges
    );
    if g.body.is_empty() {
        out.push_str("digraph bomi { }\n");
        return out;
    }
    out.push_str("digraph bomi {\n  rankdir=LR;\n  node [fontname=\"Helvetica\"];\n  edge [fontname=\"Helvetica\", fontsize=10];\n");
    out.push_str(&g.body);
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::resolve;
    use crate::syntax::parse;

    fn model(src: &str) -> BomiModel {
        let (ast, diags) = parse(src, "t");
        assert!(diags.is_empty(), "{diags:?}");
        resolve(&ast).unwrap()
    }

    #[test]
    fn colors() {
        for ok in ["green", "darkgray", "#A0B0C0", "#a0b0c0ff", "green3", "gray50", "Gray0", "grey100"] {
            assert!(is_valid_color(ok), "{ok}");
        }
        for bad in ["", "#12345", "grene", "green5", "gray101", "gray007", "#zzzzzz", "red; x"] {
            assert!(!is_valid_color(bad), "{bad}");
        }
        assert!(DotStyle::default().with_bo_fill("nope").is_err());
    }

    #[test]
    fn empty_model() {
        let dot = to_dot(&model(r#"model "e" { }"#), &DotStyle::default());
        assert!(dot.ends_with("digraph bomi { }\n"));
    }

    #[test]
    fn ids_are_escaped() {
        let m = model(r#"model "m" { bo "A \"quoted\" one" { } }"#);
        let dot = to_dot(&m, &DotStyle::default());
        assert!(dot.contains(r#""A \"quoted\" one" ["#));
    }

    #[test]
    fn association_nodes_add_one_node_per_link() {
        let src = r#"model "m" { bo B {} mi I { types: [Team] } role R { part_of: I }
            governance G { members: [R] governs B {} } usage R -> B {} }"#;
        let m = model(src);
        let plain = to_dot(&m, &DotStyle::default());
        assert!(plain.starts_with("// BOMI model \"m\": 4 nodes, 4 edges"));
        let style = DotStyle {
            association_nodes: true,
            ..DotStyle::default()
        };
        let assoc = to_dot(&m, &style);
        assert!(assoc.starts_with("// BOMI model \"m\": 6 nodes, 6 edges"), "{assoc}");
    }

    #[test]
    fn notes_only_when_requested() {
        let m = model(r#"model "m" { bo B { modularity: low ("tangled") } }"#);
        assert!(!to_dot(&m, &DotStyle::default()).contains("tangled"));
        let style = DotStyle {
            show_notes: true,
            ..DotStyle::default()
        };
        assert!(to_dot(&m, &style).contains("modularity: Low (tangled)"));
    }
}
