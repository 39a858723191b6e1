//! Size, coupling and governance diversity measures.

use std::collections::{BTreeMap, BTreeSet};

use crate::model::types::{IslandRef, TeamRef, UsageUser};
use crate::model::BomiModel;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityMetrics {
    /// Sum of all census counts.
    pub element_count: usize,
    /// Usages, responsibilities, governs links, driven islands and team memberships.
    pub relation_count: usize,
    /// Number of relations touching more than one island.
    pub crossing_relations: usize,
    pub usage_fan_in: BTreeMap<String, usize>,
    pub governance_diversity: BTreeMap<String, usize>,
}

impl ComplexityMetrics {
    /// Share of relations that cross island boundaries, 0 for a model without relations.
    pub fn avg_island_coupling(&self) -> f64 {
        if self.relation_count == 0 {
            0.0
        } else {
            self.crossing_relations as f64 / self.relation_count as f64
        }
    }

    pub fn max_usage_fan_in(&self) -> usize {
        self.usage_fan_in.values().copied().max().unwrap_or(0)
    }
}

/// Distinct islands among the team's members. A member without an island
/// counts as an island of its own.
pub fn governance_diversity(model: &BomiModel, team: TeamRef) -> usize {
    let mut islands = BTreeSet::new();
    let mut unplaced = 0;
    for &m in &model.team(team).members {
        match model.role(m).part_of {
            Some(i) => {
                islands.insert(i);
            }
            None => unplaced += 1,
        }
    }
    islands.len() + unplaced
}

/// Island affiliation of each element kind, used to decide whether a
/// relation crosses island boundaries.
struct Affiliation<'m> {
    model: &'m BomiModel,
    bo: Vec<BTreeSet<IslandRef>>,
}

impl<'m> Affiliation<'m> {
    fn new(model: &'m BomiModel) -> Self {
        let mut bo = vec![BTreeSet::new(); model.boundary_objects().len()];
        for u in model.usages() {
            bo[u.bo.index()].extend(Self::user_islands(model, u.user));
        }
        Self { model, bo }
    }

    fn user_islands(model: &BomiModel, user: UsageUser) -> Option<IslandRef> {
        match user {
            UsageUser::Role(r) => model.role(r).part_of,
            UsageUser::Island(i) => Some(i),
        }
    }

    fn team(&self, team: TeamRef) -> BTreeSet<IslandRef> {
        self.model
            .team(team)
            .members
            .iter()
            .filter_map(|&r| self.model.role(r).part_of)
            .collect()
    }
}

fn crosses(a: impl IntoIterator<Item = IslandRef>, b: impl IntoIterator<Item = IslandRef>) -> bool {
    let set: BTreeSet<IslandRef> = a.into_iter().chain(b).collect();
    set.len() >= 2
}

pub fn complexity(model: &BomiModel) -> ComplexityMetrics {
    let aff = Affiliation::new(model);
    let mut relation_count = 0;
    let mut crossing = 0;
    let mut count = |is_crossing: bool| {
        relation_count += 1;
        if is_crossing {
            crossing += 1;
        }
    };

    for u in model.usages() {
        count(crosses(
            Affiliation::user_islands(model, u.user),
            aff.bo[u.bo.index()].iter().copied(),
        ));
    }
    for r in model.responsibilities() {
        count(crosses(model.role(r.role).part_of, aff.bo[r.bo.index()].iter().copied()));
    }
    for g in model.governs_links() {
        count(crosses(aff.team(g.team), aff.bo[g.bo.index()].iter().copied()));
    }
    for d in model.drivers() {
        for &i in &d.drives {
            count(crosses(d.drives.iter().copied(), [i]));
        }
    }
    for t in model.team_refs() {
        let team_islands = aff.team(t);
        for &m in &model.team(t).members {
            count(crosses(model.role(m).part_of, team_islands.iter().copied()));
        }
    }

    let mut usage_fan_in: BTreeMap<String, usize> = model
        .boundary_objects()
        .iter()
        .map(|b| (b.id.clone(), 0))
        .collect();
    for u in model.usages() {
        *usage_fan_in.get_mut(&model.bo(u.bo).id).expect("bo indexed") += 1;
    }

    ComplexityMetrics {
        element_count: model.census().total(),
        relation_count,
        crossing_relations: crossing,
        usage_fan_in,
        governance_diversity: model
            .team_refs()
            .map(|t| (model.team(t).id.clone(), governance_diversity(model, t)))
            .collect(),
    }
}
