//! Universes of hypergraphs, teams, delegations and the root-removal
//! decomposition of a team.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::constructs::{validate, Construct};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId, VertexSet};

/// Maximal distance between the ends of an edge in a `Gamma` universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reach {
    Finite(u32),
    Infinite,
}

impl Reach {
    fn allows(self, gap: i64) -> bool {
        match self {
            Reach::Finite(k) => gap <= i64::from(k),
            Reach::Infinite => true,
        }
    }
}

/// A family of connected atomic hypergraphs, given by a membership oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Universe {
    /// Connected restrictions of the graph on the integers with an edge
    /// between `a` and `b` whenever `|a - b| <= k`. Reach 1 gives
    /// associahedra, 2 friezohedra and infinite reach permutohedra.
    Gamma(Reach),
    /// The simplices: singletons plus the whole carrier.
    Simplex,
    /// Hypercubes: singletons plus every prefix of the carrier in vertex order.
    Hypercube,
    /// Erosohedra together with the simplices they restrict to.
    Erosohedron,
    /// A finite user-supplied family, at most one member per carrier.
    Explicit(Vec<Hypergraph>),
}

/// The two kinds of member in the erosohedron universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Eroso,
    Simplex,
}

impl FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eroso" | "erosohedron" => Ok(Flavor::Eroso),
            "simplex" => Ok(Flavor::Simplex),
            other => Err(Error::UnknownUniverse(other.to_string())),
        }
    }
}

pub fn gamma_hypergraph(reach: Reach, carrier: &VertexSet) -> Hypergraph {
    let ids = carrier.as_slice();
    let mut edges = Vec::new();
    for (i, a) in ids.iter().enumerate() {
        for b in &ids[i + 1..] {
            if reach.allows(b.0 - a.0) {
                edges.push(VertexSet::from([a.0, b.0]));
            } else if reach != Reach::Infinite {
                break;
            }
        }
    }
    Hypergraph::new(carrier.clone(), edges).expect("nonempty carrier")
}

pub fn simplex_hypergraph(carrier: &VertexSet) -> Hypergraph {
    Hypergraph::new(carrier.clone(), [carrier.clone()]).expect("nonempty carrier")
}

pub fn hypercube_hypergraph(carrier: &VertexSet) -> Hypergraph {
    let ids = carrier.as_slice();
    let prefixes = (2..=ids.len()).map(|i| ids[..i].iter().copied().collect());
    Hypergraph::new(carrier.clone(), prefixes).expect("nonempty carrier")
}

/// All subsets of size `|X| - 1`, the whole carrier and the singletons.
pub fn erosohedron_hypergraph(carrier: &VertexSet) -> Hypergraph {
    let mut edges = vec![carrier.clone()];
    if carrier.len() >= 3 {
        for v in carrier.iter() {
            edges.push(carrier.difference(&VertexSet::singleton(v)));
        }
    }
    Hypergraph::new(carrier.clone(), edges).expect("nonempty carrier")
}

impl Universe {
    pub fn gamma(k: u32) -> Self {
        Universe::Gamma(Reach::Finite(k))
    }

    pub fn permutohedra() -> Self {
        Universe::Gamma(Reach::Infinite)
    }

    /// The default member on `carrier`, if any.
    pub fn member(&self, carrier: &VertexSet) -> Option<Hypergraph> {
        if carrier.is_empty() {
            return None;
        }
        match self {
            Universe::Gamma(r) => {
                let h = gamma_hypergraph(*r, carrier);
                h.is_connected().then_some(h)
            }
            Universe::Simplex => Some(simplex_hypergraph(carrier)),
            Universe::Hypercube => Some(hypercube_hypergraph(carrier)),
            Universe::Erosohedron => Some(erosohedron_hypergraph(carrier)),
            Universe::Explicit(list) => list.iter().find(|h| h.carrier() == carrier).cloned(),
        }
    }

    /// Member on `carrier` selected by a flavor tag. Only the erosohedron
    /// universe has more than one member per carrier; elsewhere the tag must
    /// be absent or name the universe itself.
    pub fn member_tagged(&self, carrier: &VertexSet, tag: Option<&str>) -> Result<Option<Hypergraph>> {
        let Some(tag) = tag else {
            return Ok(self.member(carrier));
        };
        match self {
            Universe::Erosohedron => {
                if carrier.is_empty() {
                    return Ok(None);
                }
                Ok(Some(match tag.parse::<Flavor>()? {
                    Flavor::Eroso => erosohedron_hypergraph(carrier),
                    Flavor::Simplex => simplex_hypergraph(carrier),
                }))
            }
            _ if tag.parse::<Universe>().is_ok_and(|u| u == *self) => Ok(self.member(carrier)),
            _ => Err(Error::UnknownUniverse(tag.to_string())),
        }
    }

    /// Whether `h` is a member of this universe.
    pub fn contains(&self, h: &Hypergraph) -> bool {
        match self {
            Universe::Erosohedron => {
                *h == erosohedron_hypergraph(h.carrier()) || *h == simplex_hypergraph(h.carrier())
            }
            Universe::Explicit(list) => list.contains(h),
            _ => self.member(h.carrier()).as_ref() == Some(h),
        }
    }

    /// Universes whose teams must list their blocks in increasing order.
    pub fn requires_ordered_blocks(&self) -> bool {
        matches!(self, Universe::Hypercube)
    }

    /// Whether the clan of this universe contains teams with this whole and
    /// these participants. In the erosohedron clan an erosohedron whole only
    /// takes erosohedron participants; a simplex whole takes either flavor.
    pub fn admits_team(&self, participants: &[Hypergraph], whole: &Hypergraph) -> bool {
        match self {
            Universe::Erosohedron if *whole == erosohedron_hypergraph(whole.carrier()) => participants
                .iter()
                .all(|h| *h == erosohedron_hypergraph(h.carrier())),
            _ => true,
        }
    }

    /// Restrictohedra: closed under restriction to connected subsets, hence
    /// every team is strict.
    pub fn is_restrictohedron(&self) -> bool {
        matches!(self, Universe::Gamma(_))
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Universe::Gamma(Reach::Finite(k)) => write!(f, "gamma:{k}"),
            Universe::Gamma(Reach::Infinite) => write!(f, "gamma:inf"),
            Universe::Simplex => write!(f, "simplex"),
            Universe::Hypercube => write!(f, "hypercube"),
            Universe::Erosohedron => write!(f, "erosohedron"),
            Universe::Explicit(list) => write!(f, "explicit[{}]", list.len()),
        }
    }
}

impl FromStr for Universe {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "simplex" => return Ok(Universe::Simplex),
            "hypercube" => return Ok(Universe::Hypercube),
            "erosohedron" => return Ok(Universe::Erosohedron),
            "frieze" => return Ok(Universe::gamma(2)),
            _ => {}
        }
        if let Some(k) = s.strip_prefix("gamma:") {
            if k == "inf" {
                return Ok(Universe::permutohedra());
            }
            if let Ok(k) = k.parse::<u32>() {
                if k >= 1 {
                    return Ok(Universe::gamma(k));
                }
            }
        }
        Err(Error::UnknownUniverse(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Strict,
    SemiStrict,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(Mode::Strict),
            "semistrict" | "semi-strict" => Ok(Mode::SemiStrict),
            other => Err(Error::Parse(format!("unknown mode {other:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Strict => "strict",
            Mode::SemiStrict => "semistrict",
        })
    }
}

/// Participating hypergraphs partitioning a coordinating one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Team {
    universe: Arc<Universe>,
    participants: Vec<Hypergraph>,
    whole: Hypergraph,
    mode: Mode,
}

fn check_partition(participants: &[Hypergraph], whole: &Hypergraph) -> Result<()> {
    if participants.is_empty() {
        return Err(Error::NotPartition("no participants".into()));
    }
    let mut seen = VertexSet::new();
    for p in participants {
        if !seen.is_disjoint(p.carrier()) {
            return Err(Error::NotPartition(format!("{} overlaps another participant", p.carrier())));
        }
        seen = seen.union(p.carrier());
    }
    if &seen != whole.carrier() {
        return Err(Error::NotPartition(format!(
            "participants cover {seen}, whole is {}",
            whole.carrier()
        )));
    }
    Ok(())
}

fn check_ordered(participants: &[Hypergraph]) -> Result<()> {
    for w in participants.windows(2) {
        if w[0].carrier().max_vertex() >= w[1].carrier().min_vertex() {
            return Err(Error::NotOrdered(format!("{} before {}", w[0].carrier(), w[1].carrier())));
        }
    }
    Ok(())
}

/// Every hyperedge of every participant is connected in the whole.
pub fn is_strict(participants: &[Hypergraph], whole: &Hypergraph) -> bool {
    participants
        .iter()
        .all(|p| p.hyperedges().iter().all(|e| e.len() == 1 || whole.is_connected_subset(e)))
}

/// Strictness straight from the definition: for every nonempty `B` and
/// nonempty `X_b ⊆ H_b`, every refined participant lies in a single
/// component of `H \ ∪X_b`.
pub fn brute_force_strict(participants: &[Hypergraph], whole: &Hypergraph) -> Result<bool> {
    if whole.len() > 8 {
        return Err(Error::TooLarge(format!("{} vertices, at most 8 allowed", whole.len())));
    }
    let n = participants.len();
    let subsets: Vec<Vec<VertexSet>> = participants.iter().map(|p| p.carrier().nonempty_subsets()).collect();
    for mask in 1u32..(1 << n) {
        let b_set: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let mut choice = vec![0usize; b_set.len()];
        loop {
            let x_sets: Vec<&VertexSet> = b_set.iter().zip(&choice).map(|(&b, &i)| &subsets[b][i]).collect();
            if !refined_parts_fit(participants, whole, &b_set, &x_sets) {
                return Ok(false);
            }
            // odometer over the choices of X_b
            let mut k = 0;
            loop {
                if k == choice.len() {
                    break;
                }
                choice[k] += 1;
                if choice[k] < subsets[b_set[k]].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
        }
    }
    Ok(true)
}

fn refined_parts_fit(participants: &[Hypergraph], whole: &Hypergraph, b_set: &[usize], x_sets: &[&VertexSet]) -> bool {
    let removed = x_sets.iter().fold(VertexSet::new(), |acc, x| acc.union(x));
    let Some(rest) = whole.remove(&removed).expect("subset") else {
        return true;
    };
    let comps = rest.component_carriers();
    let fits = |part: &VertexSet| comps.iter().any(|c| part.is_subset(c));
    for (a, p) in participants.iter().enumerate() {
        match b_set.iter().position(|&b| b == a) {
            None => {
                if !fits(p.carrier()) {
                    return false;
                }
            }
            Some(i) => {
                if let Some(r) = p.remove(x_sets[i]).expect("subset") {
                    if !r.component_carriers().iter().all(fits) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

impl Team {
    /// Builds a team from carriers, looking every hypergraph up in the universe.
    pub fn make(u: Arc<Universe>, parts: &[VertexSet], whole: &VertexSet, mode: Mode) -> Result<Team> {
        Self::make_tagged(u, parts, &[], whole, None, mode)
    }

    /// As [`Team::make`], with optional per-participant flavor tags.
    pub fn make_tagged(
        u: Arc<Universe>,
        parts: &[VertexSet],
        part_tags: &[Option<String>],
        whole: &VertexSet,
        whole_tag: Option<&str>,
        mode: Mode,
    ) -> Result<Team> {
        let lookup = |c: &VertexSet, tag: Option<&str>| -> Result<Hypergraph> {
            u.member_tagged(c, tag)?.ok_or_else(|| Error::NotInUniverse {
                universe: u.to_string(),
                carrier: c.to_string(),
            })
        };
        let whole_h = lookup(whole, whole_tag)?;
        let participants = parts
            .iter()
            .enumerate()
            .map(|(i, c)| lookup(c, part_tags.get(i).and_then(|t| t.as_deref())))
            .collect::<Result<Vec<_>>>()?;
        Self::from_hypergraphs(u, participants, whole_h, mode)
    }

    /// Builds a team from member hypergraphs.
    pub fn from_hypergraphs(u: Arc<Universe>, participants: Vec<Hypergraph>, whole: Hypergraph, mode: Mode) -> Result<Team> {
        for h in participants.iter().chain(std::iter::once(&whole)) {
            if !u.contains(h) {
                return Err(Error::NotInUniverse {
                    universe: u.to_string(),
                    carrier: h.carrier().to_string(),
                });
            }
        }
        check_partition(&participants, &whole)?;
        if !u.admits_team(&participants, &whole) {
            return Err(Error::NotInUniverse {
                universe: u.to_string(),
                carrier: whole.carrier().to_string(),
            });
        }
        if u.requires_ordered_blocks() {
            check_ordered(&participants)?;
        }
        if mode == Mode::Strict && !is_strict(&participants, &whole) {
            return Err(Error::NotStrict(format!(
                "a participant hyperedge is disconnected in {}",
                whole.carrier()
            )));
        }
        Ok(Team {
            universe: u,
            participants,
            whole,
            mode,
        })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn participants(&self) -> &[Hypergraph] {
        &self.participants
    }

    pub fn whole(&self) -> &Hypergraph {
        &self.whole
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn arity(&self) -> usize {
        self.participants.len()
    }

    pub fn is_strict(&self) -> bool {
        is_strict(&self.participants, &self.whole)
    }

    pub fn brute_force_strict(&self) -> Result<bool> {
        brute_force_strict(&self.participants, &self.whole)
    }

    /// Same team in another mode, checking strictness when needed.
    pub fn with_mode(&self, mode: Mode) -> Result<Team> {
        Team::from_hypergraphs(self.universe.clone(), self.participants.clone(), self.whole.clone(), mode)
    }

    /// Removes `∪X_b` for the positions `b` in `b_set` and splits the team
    /// along the connected components of what is left.
    pub fn decompose(&self, b_set: &BTreeSet<usize>, x_sets: &BTreeMap<usize, VertexSet>) -> Result<DecompositionResult> {
        if b_set.is_empty() {
            return Err(Error::PreconditionViolated("empty set of positions".into()));
        }
        let mut removed = VertexSet::new();
        for &b in b_set {
            let p = self
                .participants
                .get(b)
                .ok_or_else(|| Error::PreconditionViolated(format!("no participant at position {b}")))?;
            let x = x_sets
                .get(&b)
                .ok_or_else(|| Error::PreconditionViolated(format!("no vertex set for position {b}")))?;
            if x.is_empty() || !x.is_subset(p.carrier()) {
                return Err(Error::PreconditionViolated(format!(
                    "{x} is not a nonempty subset of {}",
                    p.carrier()
                )));
            }
            removed = removed.union(x);
        }

        let mut refined = Vec::new();
        for (a, p) in self.participants.iter().enumerate() {
            if b_set.contains(&a) {
                if let Some(r) = p.remove(&x_sets[&a])? {
                    for (i, comp) in r.connected_components().into_iter().enumerate() {
                        refined.push((RefinedIndex::Split(a, i), comp));
                    }
                }
            } else {
                refined.push((RefinedIndex::Kept(a), p.clone()));
            }
        }

        let components = match self.whole.remove(&removed)? {
            None => Vec::new(),
            Some(rest) => rest.connected_components(),
        };

        let mut component_map = BTreeMap::new();
        let mut dissolved = BTreeSet::new();
        let mut singleton_fill = BTreeMap::new();
        for (idx, h) in &refined {
            if let Some(i) = components.iter().position(|c| h.carrier().is_subset(c.carrier())) {
                component_map.insert(*idx, i);
                continue;
            }
            let atomized = h.len() >= 2
                && h.carrier()
                    .iter()
                    .all(|v| components.iter().any(|c| c.len() == 1 && c.carrier().contains(v)));
            match self.mode {
                Mode::SemiStrict if atomized => {
                    dissolved.insert(*idx);
                    singleton_fill.insert(*idx, h.carrier().iter().collect::<Vec<VertexId>>());
                }
                Mode::SemiStrict => {
                    return Err(Error::NotSemiStrict(format!(
                        "refined participant {} is split by removing {removed}",
                        h.carrier()
                    )))
                }
                Mode::Strict => {
                    return Err(Error::NotStrict(format!(
                        "refined participant {} is split by removing {removed}",
                        h.carrier()
                    )))
                }
            }
        }

        let mut members: Vec<Vec<(VertexId, Source, Hypergraph)>> = vec![Vec::new(); components.len()];
        for (idx, h) in &refined {
            if let Some(&i) = component_map.get(idx) {
                members[i].push((h.carrier().min_vertex().expect("nonempty"), Source::Refined(*idx), h.clone()));
            }
        }
        for (idx, verts) in &singleton_fill {
            for &v in verts {
                let i = components
                    .iter()
                    .position(|c| c.carrier().contains(v))
                    .expect("dissolved vertex is a component");
                let single = self.whole.restrict_unchecked(&VertexSet::singleton(v));
                members[i].push((v, Source::Dissolved(*idx, v), single));
            }
        }

        let mut subteams = Vec::with_capacity(components.len());
        let mut sources = Vec::with_capacity(components.len());
        for (comp, mut m) in components.iter().zip(members) {
            m.sort_by_key(|(min, _, _)| *min);
            sources.push(m.iter().map(|(_, s, _)| *s).collect());
            subteams.push(Team {
                universe: self.universe.clone(),
                participants: m.into_iter().map(|(_, _, h)| h).collect(),
                whole: comp.clone(),
                mode: self.mode,
            });
        }

        Ok(DecompositionResult {
            refined,
            components,
            component_map,
            subteams,
            sources,
            dissolved,
            singleton_fill,
        })
    }

    /// Replaces the participant at `pos` by the participants of `inner`.
    pub fn graft(&self, pos: usize, inner: &Team) -> Result<Team> {
        let target = self
            .participants
            .get(pos)
            .ok_or_else(|| Error::PreconditionViolated(format!("no participant at position {pos}")))?;
        if target != inner.whole() {
            return Err(Error::Mismatch(format!(
                "participant {} differs from inner whole {}",
                target.carrier(),
                inner.whole().carrier()
            )));
        }
        let mut participants = self.participants[..pos].to_vec();
        participants.extend(inner.participants.iter().cloned());
        participants.extend(self.participants[pos + 1..].iter().cloned());
        let mode = if self.mode == Mode::SemiStrict || inner.mode == Mode::SemiStrict {
            Mode::SemiStrict
        } else {
            Mode::Strict
        };
        Team::from_hypergraphs(self.universe.clone(), participants, self.whole.clone(), mode)
    }
}

/// Free function form of [`Team::make`].
pub fn make_team(u: Arc<Universe>, parts: &[VertexSet], whole: &VertexSet, mode: Mode) -> Result<Team> {
    Team::make(u, parts, whole, mode)
}

/// Free function form of [`Team::graft`].
pub fn graft_team(outer: &Team, pos: usize, inner: &Team) -> Result<Team> {
    outer.graft(pos, inner)
}

/// Index of a participant after root removal: either an untouched
/// participant `a`, or the `i`-th component (by minimum vertex) of
/// `H_b \ X_b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RefinedIndex {
    Kept(usize),
    Split(usize, usize),
}

/// Where a subteam participant comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    Refined(RefinedIndex),
    /// A singleton left over from a dissolved participant.
    Dissolved(RefinedIndex, VertexId),
}

#[derive(Clone, Debug)]
pub struct DecompositionResult {
    /// Refined participants in position order.
    pub refined: Vec<(RefinedIndex, Hypergraph)>,
    /// Components of the whole after removal, by minimum vertex.
    pub components: Vec<Hypergraph>,
    /// Refined index to component index; partial in the semi-strict case.
    pub component_map: BTreeMap<RefinedIndex, usize>,
    /// One team per component.
    pub subteams: Vec<Team>,
    /// For each subteam, the origin of each of its participants.
    pub sources: Vec<Vec<Source>>,
    pub dissolved: BTreeSet<RefinedIndex>,
    pub singleton_fill: BTreeMap<RefinedIndex, Vec<VertexId>>,
}

/// A team with one construct per participant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Delegation {
    team: Team,
    constructs: Vec<Construct>,
}

impl Delegation {
    pub fn new(team: Team, constructs: Vec<Construct>) -> Result<Delegation> {
        if constructs.len() != team.arity() {
            return Err(Error::Arity {
                expected: team.arity(),
                found: constructs.len(),
            });
        }
        for (h, c) in team.participants().iter().zip(&constructs) {
            validate(h, c)?;
        }
        Ok(Delegation { team, constructs })
    }

    pub(crate) fn new_unchecked(team: Team, constructs: Vec<Construct>) -> Delegation {
        Delegation { team, constructs }
    }

    pub fn team(&self) -> &Team {
        &self.team
    }

    pub fn constructs(&self) -> &[Construct] {
        &self.constructs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs<const N: usize>(a: [i64; N]) -> VertexSet {
        VertexSet::from(a)
    }

    fn frieze() -> Arc<Universe> {
        Arc::new(Universe::gamma(2))
    }

    #[test]
    fn erosohedron_whole_takes_erosohedron_participants() {
        let u = Arc::new(Universe::Erosohedron);
        let tags = |t: &str| vec![Some(t.to_string()), None];
        let parts = [vs([1, 2, 3]), vs([4])];
        let whole = VertexSet::interval(1, 4);
        let make = |p: &str, w: &str| Team::make_tagged(u.clone(), &parts, &tags(p), &whole, Some(w), Mode::SemiStrict);
        assert!(make("eroso", "eroso").is_ok());
        assert!(matches!(make("simplex", "eroso"), Err(Error::NotInUniverse { .. })));
        assert!(make("eroso", "simplex").is_ok());
        assert!(make("simplex", "simplex").is_ok());
    }

    fn example_team() -> Team {
        Team::make(
            frieze(),
            &[vs([1, 3, 5]), vs([2, 4]), vs([6, 7, 8])],
            &VertexSet::interval(1, 8),
            Mode::Strict,
        )
        .unwrap()
    }

    #[test]
    fn universe_tags() {
        for tag in ["gamma:1", "gamma:2", "gamma:inf", "simplex", "hypercube", "erosohedron"] {
            assert_eq!(tag.parse::<Universe>().unwrap().to_string(), tag);
        }
        assert_eq!("frieze".parse::<Universe>().unwrap(), Universe::gamma(2));
        assert!(matches!("gamma:0".parse::<Universe>(), Err(Error::UnknownUniverse(_))));
        assert!("torus".parse::<Universe>().is_err());
    }

    #[test]
    fn membership() {
        let g2 = Universe::gamma(2);
        assert!(g2.member(&vs([1, 2, 5])).is_none());
        assert!(g2.member(&vs([1, 3, 5])).is_some());
        assert!(Universe::gamma(1).member(&vs([1, 3])).is_none());
        assert!(Universe::permutohedra().member(&vs([1, 30])).is_some());
        let e = Universe::Erosohedron;
        let eroso = e.member_tagged(&vs([1, 2, 3]), Some("eroso")).unwrap().unwrap();
        let simplex = e.member_tagged(&vs([1, 2, 3]), Some("simplex")).unwrap().unwrap();
        assert_ne!(eroso, simplex);
        assert!(e.contains(&eroso) && e.contains(&simplex));
        assert_eq!(e.member(&vs([1, 2])), Some(simplex_hypergraph(&vs([1, 2]))));
        assert!(!Universe::Simplex.contains(&eroso));
        let cube = hypercube_hypergraph(&vs([1, 2, 3]));
        assert_eq!(cube.hyperedges().len(), 5);
    }

    #[test]
    fn make_team_examples() {
        let t = example_team();
        assert_eq!(t.arity(), 3);
        assert!(t.is_strict());
        let single = Team::make(frieze(), &[vs([1, 2])], &vs([1, 2]), Mode::Strict).unwrap();
        assert!(single.is_strict());
        let err = Team::make(Arc::new(Universe::Simplex), &[vs([1, 3]), vs([2, 4])], &vs([1, 2, 3, 4]), Mode::Strict);
        assert!(matches!(err, Err(Error::NotStrict(_))));
        let err = Team::make(frieze(), &[vs([1, 2])], &vs([1, 2, 3]), Mode::Strict);
        assert!(matches!(err, Err(Error::NotPartition(_))));
        let err = Team::make(frieze(), &[vs([1, 4]), vs([2, 3])], &vs([1, 2, 3, 4]), Mode::Strict);
        assert!(matches!(err, Err(Error::NotInUniverse { .. })));
        let err = Team::make(Arc::new(Universe::Hypercube), &[vs([3]), vs([1, 2])], &vs([1, 2, 3]), Mode::SemiStrict);
        assert!(matches!(err, Err(Error::NotOrdered(_))));
    }

    #[test]
    fn strictness_agrees_with_definition() {
        let t = example_team();
        assert!(t.brute_force_strict().unwrap());
        let simplex = Arc::new(Universe::Simplex);
        let semi = Team::make(simplex, &[vs([1, 3]), vs([2, 4])], &vs([1, 2, 3, 4]), Mode::SemiStrict).unwrap();
        assert!(!semi.is_strict());
        assert!(!semi.brute_force_strict().unwrap());
        let big = Team::make(frieze(), &[VertexSet::interval(1, 9)], &VertexSet::interval(1, 9), Mode::Strict).unwrap();
        assert!(matches!(big.brute_force_strict(), Err(Error::TooLarge(_))));
    }

    #[test]
    fn decompose_frieze_example() {
        let t = example_team();
        let b: BTreeSet<usize> = [0, 1].into_iter().collect();
        let x: BTreeMap<usize, VertexSet> = [(0, vs([3])), (1, vs([2]))].into_iter().collect();
        let d = t.decompose(&b, &x).unwrap();
        assert_eq!(d.subteams.len(), 2);
        assert_eq!(d.subteams[0].whole().carrier(), &vs([1]));
        assert_eq!(d.subteams[1].whole().carrier(), &VertexSet::interval(4, 8));
        let carriers: Vec<&VertexSet> = d.subteams[1].participants().iter().map(Hypergraph::carrier).collect();
        assert_eq!(carriers, vec![&vs([4]), &vs([5]), &vs([6, 7, 8])]);
        assert_eq!(d.component_map[&RefinedIndex::Split(0, 0)], 0);
        assert_eq!(d.component_map[&RefinedIndex::Split(0, 1)], 1);
        assert_eq!(d.component_map[&RefinedIndex::Split(1, 0)], 1);
        assert_eq!(d.component_map[&RefinedIndex::Kept(2)], 1);
        assert!(d.dissolved.is_empty());
    }

    #[test]
    fn decompose_everything_removed() {
        let t = example_team();
        let b: BTreeSet<usize> = [0, 1, 2].into_iter().collect();
        let x: BTreeMap<usize, VertexSet> = t
            .participants()
            .iter()
            .enumerate()
            .map(|(i, p)| (i, p.carrier().clone()))
            .collect();
        let d = t.decompose(&b, &x).unwrap();
        assert!(d.subteams.is_empty());
    }

    #[test]
    fn decompose_dissolves_hypercube_block() {
        let u = Arc::new(Universe::Hypercube);
        let t = Team::make(u, &[vs([1, 2]), vs([3, 4])], &vs([1, 2, 3, 4]), Mode::SemiStrict).unwrap();
        let b: BTreeSet<usize> = [0].into_iter().collect();
        let x: BTreeMap<usize, VertexSet> = [(0, vs([1]))].into_iter().collect();
        let d = t.decompose(&b, &x).unwrap();
        assert!(d.dissolved.contains(&RefinedIndex::Kept(1)));
        assert_eq!(d.singleton_fill[&RefinedIndex::Kept(1)], vec![VertexId(3), VertexId(4)]);
        assert_eq!(d.subteams.len(), 3);
        let strict = t.with_mode(Mode::Strict);
        assert!(matches!(strict, Err(Error::NotStrict(_))));
    }

    #[test]
    fn graft_examples() {
        let k = Arc::new(Universe::gamma(1));
        let outer = Team::make(k.clone(), &[vs([1, 2]), vs([3])], &vs([1, 2, 3]), Mode::Strict).unwrap();
        let inner = Team::make(k.clone(), &[vs([1]), vs([2])], &vs([1, 2]), Mode::Strict).unwrap();
        let g = outer.graft(0, &inner).unwrap();
        let carriers: Vec<&VertexSet> = g.participants().iter().map(Hypergraph::carrier).collect();
        assert_eq!(carriers, vec![&vs([1]), &vs([2]), &vs([3])]);
        let trivial = Team::make(k.clone(), &[vs([3])], &vs([3]), Mode::Strict).unwrap();
        assert_eq!(outer.graft(1, &trivial).unwrap(), outer);
        assert!(matches!(outer.graft(1, &inner), Err(Error::Mismatch(_))));
    }
}
