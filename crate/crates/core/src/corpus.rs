//! Bundled example models.

/// The agile product development example: one user story shared by a
/// development team and a product management team.
pub const COMPANY_A: &str = include_str!("../../../corpus/company-a.bomi");
pub const COMPANY_B: &str = include_str!("../../../corpus/company-b.bomi");
pub const COMPANY_C: &str = include_str!("../../../corpus/company-c.bomi");
pub const COMPANY_D: &str = include_str!("../../../corpus/company-d.bomi");

/// `(file name, source)` for every bundled model.
pub const ALL: [(&str, &str); 4] = [
    ("company-a.bomi", COMPANY_A),
    ("company-b.bomi", COMPANY_B),
    ("company-c.bomi", COMPANY_C),
    ("company-d.bomi", COMPANY_D),
];
