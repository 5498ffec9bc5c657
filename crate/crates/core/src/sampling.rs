//! Seeded random teams, delegations and graftings, plus exhaustive
//! enumeration of small teams up to translation of vertex ids.

use std::sync::Arc;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clans::{Delegation, Mode, Reach, Team, Universe};
use crate::constructs::{cartesian, enumerate, Construct};
use crate::error::Result;
use crate::hypergraph::{Hypergraph, VertexSet};

const ATTEMPTS: usize = 500;

/// A grafting `τ ∘_pos τ'` with one construct per participant of the result.
#[derive(Clone, Debug)]
pub struct Grafting {
    pub outer: Team,
    pub pos: usize,
    pub inner: Team,
    pub constructs: Vec<Construct>,
}

pub struct Sampler {
    rng: ChaCha8Rng,
    universe: Arc<Universe>,
}

fn flavor_tags(u: &Universe) -> &'static [Option<&'static str>] {
    match u {
        Universe::Erosohedron => &[Some("eroso"), Some("simplex")],
        _ => &[None],
    }
}

impl Sampler {
    pub fn new(universe: Arc<Universe>, seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            universe,
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// A carrier of the given size starting at vertex 1.
    fn carrier(&mut self, size: usize) -> Option<VertexSet> {
        let max_gap = match &*self.universe {
            Universe::Gamma(Reach::Finite(k)) => i64::from(*k).min(3),
            Universe::Explicit(list) => {
                let fits: Vec<&Hypergraph> = list.iter().filter(|h| h.len() == size).collect();
                return fits.get(self.rng.random_range(0..fits.len().max(1))).map(|h| h.carrier().clone());
            }
            _ => 2,
        };
        let mut v = 1;
        let mut ids = vec![v];
        for _ in 1..size {
            v += self.rng.random_range(1..=max_gap);
            ids.push(v);
        }
        Some(ids.into_iter().collect())
    }

    /// Splits `x` into `arity` nonempty blocks, contiguous when the universe
    /// asks for ordered blocks.
    fn split(&mut self, x: &VertexSet, arity: usize) -> Option<Vec<VertexSet>> {
        let ids: Vec<i64> = x.iter().map(|v| v.0).collect();
        if arity == 0 || arity > ids.len() {
            return None;
        }
        if self.universe.requires_ordered_blocks() {
            let mut cuts: Vec<usize> = (1..ids.len()).collect();
            cuts.shuffle(&mut self.rng);
            let mut cuts = cuts[..arity - 1].to_vec();
            cuts.sort_unstable();
            let mut blocks = Vec::with_capacity(arity);
            let mut start = 0;
            for c in cuts.into_iter().chain(std::iter::once(ids.len())) {
                blocks.push(ids[start..c].iter().copied().collect());
                start = c;
            }
            return Some(blocks);
        }
        for _ in 0..ATTEMPTS {
            let mut blocks = vec![Vec::new(); arity];
            for &v in &ids {
                blocks[self.rng.random_range(0..arity)].push(v);
            }
            if blocks.iter().all(|b| !b.is_empty()) {
                return Some(blocks.into_iter().map(|b| b.into_iter().collect()).collect());
            }
        }
        None
    }

    fn tag(&mut self) -> Option<String> {
        let tags = flavor_tags(&self.universe);
        tags[self.rng.random_range(0..tags.len())].map(str::to_string)
    }

    /// A random team on a carrier of `size` vertices, or `None` when no
    /// valid team turned up within the attempt budget.
    pub fn team(&mut self, size: usize, arity: usize, mode: Mode) -> Option<Team> {
        for _ in 0..ATTEMPTS {
            let Some(whole) = self.carrier(size) else { continue };
            let Some(parts) = self.split(&whole, arity) else { continue };
            let tags: Vec<Option<String>> = (0..arity).map(|_| self.tag()).collect();
            let whole_tag = self.tag();
            if let Ok(t) = Team::make_tagged(self.universe.clone(), &parts, &tags, &whole, whole_tag.as_deref(), mode) {
                return Some(t);
            }
        }
        None
    }

    /// A random construct of a connected hypergraph: the root size is
    /// uniform, then the root is a uniform subset of that size.
    pub fn construct(&mut self, h: &Hypergraph) -> Construct {
        let ids: Vec<i64> = h.carrier().iter().map(|v| v.0).collect();
        let k = self.rng.random_range(1..=ids.len());
        let root: VertexSet = ids.choose_multiple(&mut self.rng, k).copied().collect();
        let children = match h.remove(&root).expect("subset of carrier") {
            None => Vec::new(),
            Some(rest) => rest.connected_components().iter().map(|c| self.construct(c)).collect(),
        };
        Construct::new(root, children).expect("components are disjoint")
    }

    pub fn delegation(&mut self, team: &Team) -> Delegation {
        let cs = team.participants().iter().map(|h| self.construct(h)).collect();
        Delegation::new(team.clone(), cs).expect("sampled constructs are valid")
    }

    /// A random grafting whose result has `size` vertices: an outer team of
    /// `outer_arity` and an inner team of `inner_arity` replacing one of its
    /// participants.
    pub fn grafting(&mut self, size: usize, outer_arity: usize, inner_arity: usize, mode: Mode) -> Option<Grafting> {
        for _ in 0..ATTEMPTS {
            let Some(whole) = self.carrier(size) else { continue };
            let Some(parts) = self.split(&whole, outer_arity) else { continue };
            let pos = self.rng.random_range(0..outer_arity);
            let Some(inner_parts) = self.split(&parts[pos], inner_arity) else { continue };
            let tags: Vec<Option<String>> = (0..outer_arity).map(|_| self.tag()).collect();
            let inner_tags: Vec<Option<String>> = (0..inner_arity).map(|_| self.tag()).collect();
            let whole_tag = self.tag();
            let u = self.universe.clone();
            let Ok(outer) = Team::make_tagged(u.clone(), &parts, &tags, &whole, whole_tag.as_deref(), mode) else {
                continue;
            };
            let Ok(inner) = Team::make_tagged(u, &inner_parts, &inner_tags, &parts[pos], tags[pos].as_deref(), mode)
            else {
                continue;
            };
            let Ok(grafted) = outer.graft(pos, &inner) else { continue };
            let constructs = grafted.participants().iter().map(|h| self.construct(h)).collect();
            return Some(Grafting {
                outer,
                pos,
                inner,
                constructs,
            });
        }
        None
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

/// Carriers of the given size with minimum vertex 1, one per isomorphism
/// type that the universe can tell apart by vertex ids.
pub fn normalized_carriers(u: &Universe, size: usize) -> Vec<VertexSet> {
    if size == 0 {
        return Vec::new();
    }
    match u {
        Universe::Gamma(Reach::Finite(k)) if *k >= 2 => {
            let k = i64::from(*k).min(size as i64);
            let gaps: Vec<Vec<i64>> = (1..size).map(|_| (1..=k).collect()).collect();
            cartesian(&gaps)
                .into_iter()
                .map(|g| {
                    let mut v = 1;
                    std::iter::once(1)
                        .chain(g.into_iter().map(|d| {
                            v += d;
                            v
                        }))
                        .collect()
                })
                .collect()
        }
        Universe::Explicit(list) => list.iter().filter(|h| h.len() == size).map(|h| h.carrier().clone()).collect(),
        _ => vec![VertexSet::interval(1, size as i64)],
    }
}

/// All set partitions of `x`, blocks ordered by minimum vertex.
pub fn set_partitions(x: &VertexSet) -> Vec<Vec<VertexSet>> {
    fn go(ids: &[i64], blocks: &mut Vec<Vec<i64>>, out: &mut Vec<Vec<VertexSet>>) {
        let Some((&v, rest)) = ids.split_first() else {
            out.push(blocks.iter().map(|b| b.iter().copied().collect()).collect());
            return;
        };
        for i in 0..blocks.len() {
            blocks[i].push(v);
            go(rest, blocks, out);
            blocks[i].pop();
        }
        blocks.push(vec![v]);
        go(rest, blocks, out);
        blocks.pop();
    }
    let ids: Vec<i64> = x.iter().map(|v| v.0).collect();
    let mut out = Vec::new();
    go(&ids, &mut Vec::new(), &mut out);
    out
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head.clone());
            out.push(p);
        }
    }
    out
}

/// Every team of the given arity on `whole` (arity 0 means any arity of at
/// least 2). Blocks come in every order when `all_orders` is set, otherwise
/// ordered by minimum vertex. Erosohedron teams range over all flavor tags.
pub fn all_teams(u: &Arc<Universe>, whole: &VertexSet, arity: usize, mode: Mode, all_orders: bool) -> Vec<Team> {
    let tags = flavor_tags(u);
    let mut out: Vec<Team> = Vec::new();
    for blocks in set_partitions(whole) {
        if (arity == 0 && blocks.len() < 2) || (arity != 0 && blocks.len() != arity) {
            continue;
        }
        let orders = if all_orders { permutations(&blocks) } else { vec![blocks] };
        for parts in orders {
            let tag_options: Vec<Vec<Option<&str>>> = (0..=parts.len()).map(|_| tags.to_vec()).collect();
            for choice in cartesian(&tag_options) {
                let part_tags: Vec<Option<String>> = choice[1..].iter().map(|t| t.map(str::to_string)).collect();
                if let Ok(t) = Team::make_tagged(u.clone(), &parts, &part_tags, whole, choice[0], mode) {
                    if !out.contains(&t) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

/// Every delegation over `team`.
pub fn all_delegations(team: &Team) -> Result<Vec<Delegation>> {
    let options = team
        .participants()
        .iter()
        .map(enumerate)
        .collect::<Result<Vec<_>>>()?;
    Ok(cartesian(&options)
        .into_iter()
        .map(|cs| Delegation::new(team.clone(), cs).expect("enumerated constructs are valid"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let sizes: Vec<usize> = (1..=5).map(|n| set_partitions(&VertexSet::interval(1, n)).len()).collect();
        assert_eq!(sizes, vec![1, 2, 5, 15, 52]);
    }

    #[test]
    fn seeded_sampling_is_reproducible() {
        let u = Arc::new(Universe::gamma(2));
        let draw = |seed| {
            let mut s = Sampler::new(u.clone(), seed);
            let t = s.team(6, 3, Mode::Strict).unwrap();
            s.delegation(&t).constructs().to_vec()
        };
        assert_eq!(draw(7), draw(7));
    }

    #[test]
    fn sampled_hypercube_teams_are_ordered() {
        let mut s = Sampler::new(Arc::new(Universe::Hypercube), 3);
        for _ in 0..20 {
            let t = s.team(5, 3, Mode::SemiStrict).unwrap();
            let p = t.participants();
            assert!(p.windows(2).all(|w| w[0].carrier().max_vertex() < w[1].carrier().min_vertex()));
        }
    }

    #[test]
    fn gamma_two_carriers() {
        assert_eq!(normalized_carriers(&Universe::gamma(2), 3).len(), 4);
        assert_eq!(normalized_carriers(&Universe::Simplex, 3), vec![VertexSet::interval(1, 3)]);
    }

    #[test]
    fn grafting_matches_inner_whole() {
        let mut s = Sampler::new(Arc::new(Universe::gamma(1)), 11);
        let g = s.grafting(6, 2, 2, Mode::Strict).unwrap();
        assert_eq!(&g.outer.participants()[g.pos], g.inner.whole());
        assert_eq!(g.constructs.len(), 3);
    }
}
