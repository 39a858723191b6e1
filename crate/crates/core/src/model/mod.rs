//! Resolved BOMI instance models.

pub mod census;
pub mod conformance;
pub mod resolve;
pub mod types;

use std::collections::HashMap;

use crate::span::SourceSpan;
use types::*;

pub use census::{census, ElementCensus};
pub use conformance::{conformance, StructuralViolation, ViolationKind};
pub use resolve::{resolve, ResolutionError};

/// A resolved instance model. Every reference is a checked index into one
/// of the element collections; the model is immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct BomiModel {
    pub(crate) name: String,
    pub(crate) span: SourceSpan,
    pub(crate) boundary_objects: Vec<BoundaryObject>,
    pub(crate) islands: Vec<MethodologicalIsland>,
    pub(crate) roles: Vec<Role>,
    pub(crate) usages: Vec<UsageLink>,
    pub(crate) responsibilities: Vec<Responsibility>,
    pub(crate) drivers: Vec<Driver>,
    pub(crate) governance_teams: Vec<GovernanceTeam>,
    pub(crate) governs_links: Vec<GovernsLink>,
    pub(crate) index: HashMap<String, (ElementKind, usize)>,
}

impl BomiModel {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn span(&self) -> &SourceSpan {
        &self.span
    }

    pub fn boundary_objects(&self) -> &[BoundaryObject] {
        &self.boundary_objects
    }

    pub fn islands(&self) -> &[MethodologicalIsland] {
        &self.islands
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn usages(&self) -> &[UsageLink] {
        &self.usages
    }

    pub fn responsibilities(&self) -> &[Responsibility] {
        &self.responsibilities
    }

    pub fn drivers(&self) -> &[Driver] {
        &self.drivers
    }

    pub fn governance_teams(&self) -> &[GovernanceTeam] {
        &self.governance_teams
    }

    pub fn governs_links(&self) -> &[GovernsLink] {
        &self.governs_links
    }

    pub fn bo(&self, r: BoRef) -> &BoundaryObject {
        &self.boundary_objects[r.0]
    }

    pub fn island(&self, r: IslandRef) -> &MethodologicalIsland {
        &self.islands[r.0]
    }

    pub fn role(&self, r: RoleRef) -> &Role {
        &self.roles[r.0]
    }

    pub fn team(&self, r: TeamRef) -> &GovernanceTeam {
        &self.governance_teams[r.0]
    }

    pub fn bo_refs(&self) -> impl Iterator<Item = BoRef> {
        (0..self.boundary_objects.len()).map(BoRef)
    }

    pub fn team_refs(&self) -> impl Iterator<Item = TeamRef> {
        (0..self.governance_teams.len()).map(TeamRef)
    }

    /// Kind of the named element, if declared.
    pub fn kind_of(&self, id: &str) -> Option<ElementKind> {
        self.index.get(id).map(|(k, _)| *k)
    }

    /// Source location of the named element.
    pub fn span_of(&self, id: &str) -> Option<&SourceSpan> {
        let (kind, i) = *self.index.get(id)?;
        Some(match kind {
            ElementKind::BoundaryObject => &self.boundary_objects[i].span,
            ElementKind::Island => &self.islands[i].span,
            ElementKind::Role => &self.roles[i].span,
            ElementKind::Driver => &self.drivers[i].span,
            ElementKind::GovernanceTeam => &self.governance_teams[i].span,
        })
    }

    pub fn user_id(&self, user: UsageUser) -> &str {
        match user {
            UsageUser::Role(r) => &self.role(r).id,
            UsageUser::Island(i) => &self.island(i).id,
        }
    }

    /// `user->bo`, the identity of a usage link.
    pub fn usage_key(&self, usage: &UsageLink) -> String {
        format!("{}->{}", self.user_id(usage.user), self.bo(usage.bo).id)
    }

    /// `team->bo`, the identity of a governs link.
    pub fn governs_key(&self, link: &GovernsLink) -> String {
        format!("{}->{}", self.team(link.team).id, self.bo(link.bo).id)
    }

    pub fn usages_of(&self, bo: BoRef) -> impl Iterator<Item = &UsageLink> {
        self.usages.iter().filter(move |u| u.bo == bo)
    }

    pub fn governs_of(&self, bo: BoRef) -> impl Iterator<Item = &GovernsLink> {
        self.governs_links.iter().filter(move |g| g.bo == bo)
    }

    pub fn responsibilities_of(&self, bo: BoRef) -> impl Iterator<Item = &Responsibility> {
        self.responsibilities.iter().filter(move |r| r.bo == bo)
    }

    pub fn census(&self) -> ElementCensus {
        census(self)
    }
}
