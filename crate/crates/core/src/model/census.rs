use std::fmt;

use crate::model::BomiModel;

/// Per-kind element counts, in a fixed column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementCensus {
    pub boundary_objects: usize,
    pub islands: usize,
    pub usages: usize,
    pub drivers: usize,
    pub roles: usize,
    pub governance_teams: usize,
    pub governs: usize,
}

impl ElementCensus {
    pub const COLUMNS: [&'static str; 7] = [
        "BO",
        "MI",
        "Usage",
        "Driver",
        "Role",
        "Governance Team",
        "Governs",
    ];

    pub const fn from_row(row: [usize; 7]) -> Self {
        Self {
            boundary_objects: row[0],
            islands: row[1],
            usages: row[2],
            drivers: row[3],
            roles: row[4],
            governance_teams: row[5],
            governs: row[6],
        }
    }

    pub fn row(&self) -> [usize; 7] {
        [
            self.boundary_objects,
            self.islands,
            self.usages,
            self.drivers,
            self.roles,
            self.governance_teams,
            self.governs,
        ]
    }

    pub fn total(&self) -> usize {
        self.row().iter().sum()
    }
}

impl fmt::Display for ElementCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.row().iter().map(usize::to_string).collect();
        f.write_str(&cells.join(" "))
    }
}

pub fn census(model: &BomiModel) -> ElementCensus {
    ElementCensus {
        boundary_objects: model.boundary_objects.len(),
        islands: model.islands.len(),
        usages: model.usages.len(),
        drivers: model.drivers.len(),
        roles: model.roles.len(),
        governance_teams: model.governance_teams.len(),
        governs: model.governs_links.len(),
    }
}
