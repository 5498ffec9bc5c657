//! Finite atomic hypergraphs.
//!
//! A hypergraph is a nonempty carrier together with a family of nonempty
//! hyperedges covering it. Every hypergraph built here is atomic: each vertex
//! `x` of the carrier also appears as the singleton hyperedge `{x}`.
//! Hyperedges are kept as sorted vertex sequences so that set equality is
//! plain structural equality.

use std::fmt;

use crate::error::{Error, Result};

/// A vertex label. Any integer is allowed; the integer order is used
/// whenever a canonical order on vertices or components is needed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub i64);

impl From<i64> for VertexId {
    fn from(v: i64) -> Self {
        VertexId(v)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite set of vertices stored as a strictly increasing sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: VertexId) -> Self {
        VertexSet(vec![v])
    }

    /// Integer interval `lo..=hi` (empty when `lo > hi`).
    pub fn interval(lo: i64, hi: i64) -> Self {
        VertexSet((lo..=hi).map(VertexId).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = VertexId> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn min_vertex(&self) -> Option<VertexId> {
        self.0.first().copied()
    }

    pub fn max_vertex(&self) -> Option<VertexId> {
        self.0.last().copied()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Position of `v` in the sorted sequence.
    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.0.binary_search(&v).ok()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                match w.cmp(v) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        VertexSet(out)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    /// All nonempty subsets, sorted lexicographically as vertex sequences.
    pub fn nonempty_subsets(&self) -> Vec<VertexSet> {
        assert!(self.len() < 31, "subset enumeration limited to 30 vertices");
        let n = self.len();
        let mut out: Vec<VertexSet> = (1u32..(1u32 << n))
            .map(|mask| {
                VertexSet(
                    (0..n)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect();
        out.sort();
        out
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut v: Vec<VertexId> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl FromIterator<i64> for VertexSet {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        iter.into_iter().map(VertexId).collect()
    }
}

impl<const N: usize> From<[i64; N]> for VertexSet {
    fn from(ids: [i64; N]) -> Self {
        ids.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Disjoint-set forest over `0..n`.
#[derive(Clone, Debug)]
pub(crate) struct DisjointSet {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSet {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub(crate) fn find(&mut self, mut node: usize) -> usize {
        let mut root = node;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[node] != node {
            let next = self.parent[node];
            self.parent[node] = root;
            node = next;
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        match self.rank[a].cmp(&self.rank[b]) {
            std::cmp::Ordering::Less => self.parent[a] = b,
            std::cmp::Ordering::Greater => self.parent[b] = a,
            std::cmp::Ordering::Equal => {
                self.parent[b] = a;
                self.rank[a] = self.rank[a].saturating_add(1);
            }
        }
    }
}

/// A finite atomic hypergraph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hypergraph {
    carrier: VertexSet,
    hyperedges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Builds a hypergraph on `carrier` from the given hyperedges. Missing
    /// singleton hyperedges are added, so the result is always atomic.
    pub fn new(carrier: VertexSet, hyperedges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if carrier.is_empty() {
            return Err(Error::InvalidHypergraph("empty carrier".into()));
        }
        let mut edges: Vec<VertexSet> = Vec::new();
        for e in hyperedges {
            if e.is_empty() {
                return Err(Error::InvalidHypergraph("empty hyperedge".into()));
            }
            if !e.is_subset(&carrier) {
                return Err(Error::InvalidHypergraph(format!(
                    "hyperedge {e} is not contained in carrier {carrier}"
                )));
            }
            edges.push(e);
        }
        edges.extend(carrier.iter().map(VertexSet::singleton));
        Ok(Self::from_sorted_parts(carrier, edges))
    }

    /// Atomic hypergraph of an ordinary graph.
    pub fn from_graph(carrier: VertexSet, edges: impl IntoIterator<Item = (i64, i64)>) -> Result<Self> {
        Self::new(carrier, edges.into_iter().map(|(a, b)| VertexSet::from([a, b])))
    }

    /// The hypergraph whose only hyperedges are the singletons.
    pub fn discrete(carrier: VertexSet) -> Result<Self> {
        Self::new(carrier, std::iter::empty())
    }

    fn from_sorted_parts(carrier: VertexSet, mut hyperedges: Vec<VertexSet>) -> Self {
        hyperedges.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        hyperedges.dedup();
        Hypergraph { carrier, hyperedges }
    }

    pub fn carrier(&self) -> &VertexSet {
        &self.carrier
    }

    /// Hyperedges sorted by size, then lexicographically.
    pub fn hyperedges(&self) -> &[VertexSet] {
        &self.hyperedges
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn has_hyperedge(&self, e: &VertexSet) -> bool {
        self.hyperedges.binary_search_by(|x| x.len().cmp(&e.len()).then_with(|| x.cmp(e))).is_ok()
    }

    /// The hypergraph on `x_set` made of the hyperedges contained in it.
    pub fn restrict(&self, x_set: &VertexSet) -> Result<Hypergraph> {
        if x_set.is_empty() {
            return Err(Error::EmptyRestriction);
        }
        if !x_set.is_subset(&self.carrier) {
            return Err(Error::NotSubset(x_set.to_string()));
        }
        Ok(self.restrict_unchecked(x_set))
    }

    pub(crate) fn restrict_unchecked(&self, x_set: &VertexSet) -> Hypergraph {
        if x_set.len() == self.carrier.len() {
            return self.clone();
        }
        let hyperedges = self
            .hyperedges
            .iter()
            .filter(|e| e.is_subset(x_set))
            .cloned()
            .collect();
        Hypergraph {
            carrier: x_set.clone(),
            hyperedges,
        }
    }

    /// Removes `x_set` from the carrier. `None` stands for the empty
    /// hypergraph, returned when everything is removed.
    pub fn remove(&self, x_set: &VertexSet) -> Result<Option<Hypergraph>> {
        if !x_set.is_subset(&self.carrier) {
            return Err(Error::NotSubset(x_set.to_string()));
        }
        let rest = self.carrier.difference(x_set);
        if rest.is_empty() {
            Ok(None)
        } else {
            Ok(Some(self.restrict_unchecked(&rest)))
        }
    }

    /// Carriers of the connected components, ordered by minimum vertex.
    pub fn component_carriers(&self) -> Vec<VertexSet> {
        let n = self.carrier.len();
        let mut dsu = DisjointSet::new(n);
        for e in &self.hyperedges {
            let mut it = e.iter();
            if let Some(first) = it.next() {
                let a = self.carrier.index_of(first).expect("hyperedge inside carrier");
                for v in it {
                    let b = self.carrier.index_of(v).expect("hyperedge inside carrier");
                    dsu.union(a, b);
                }
            }
        }
        let mut groups: Vec<(usize, Vec<VertexId>)> = Vec::new();
        for (i, v) in self.carrier.iter().enumerate() {
            let root = dsu.find(i);
            match groups.iter_mut().find(|(r, _)| *r == root) {
                Some((_, g)) => g.push(v),
                None => groups.push((root, vec![v])),
            }
        }
        // carrier is sorted, so groups appear in order of their minimum vertex
        groups.into_iter().map(|(_, g)| VertexSet(g)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_carriers().len() == 1
    }

    /// Whether `x_set` is connected in this hypergraph.
    pub fn is_connected_subset(&self, x_set: &VertexSet) -> bool {
        !x_set.is_empty() && x_set.is_subset(&self.carrier) && self.restrict_unchecked(x_set).is_connected()
    }

    /// Connected components, ordered by minimum vertex.
    pub fn connected_components(&self) -> Vec<Hypergraph> {
        self.component_carriers()
            .iter()
            .map(|c| self.restrict_unchecked(c))
            .collect()
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.hyperedges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frieze(ids: &[i64]) -> Hypergraph {
        let carrier: VertexSet = ids.iter().copied().collect();
        let mut edges = Vec::new();
        for &a in ids {
            for &b in ids {
                if a < b && b - a <= 2 {
                    edges.push((a, b));
                }
            }
        }
        Hypergraph::from_graph(carrier, edges).unwrap()
    }

    fn simplex(ids: &[i64]) -> Hypergraph {
        let carrier: VertexSet = ids.iter().copied().collect();
        Hypergraph::new(carrier.clone(), [carrier]).unwrap()
    }

    #[test]
    fn restrict_frieze_to_odd_vertices() {
        let h = frieze(&[1, 2, 3, 4, 5]);
        let r = h.restrict(&VertexSet::from([1, 3, 5])).unwrap();
        let expected: Vec<VertexSet> = vec![
            VertexSet::from([1]),
            VertexSet::from([3]),
            VertexSet::from([5]),
            VertexSet::from([1, 3]),
            VertexSet::from([3, 5]),
        ];
        assert_eq!(r.hyperedges(), &expected[..]);
        assert_eq!(h.restrict(h.carrier()).unwrap(), h);
    }

    #[test]
    fn restrict_simplex_drops_big_hyperedge() {
        let s = simplex(&[1, 2, 3, 4]);
        let r = s.restrict(&VertexSet::from([1, 2])).unwrap();
        assert_eq!(r.hyperedges().len(), 2);
        assert!(!r.is_connected());
    }

    #[test]
    fn restrict_errors() {
        let s = simplex(&[1, 2]);
        assert_eq!(s.restrict(&VertexSet::new()), Err(Error::EmptyRestriction));
        assert!(matches!(s.restrict(&VertexSet::from([3])), Err(Error::NotSubset(_))));
    }

    #[test]
    fn remove_and_components() {
        let h = frieze(&[1, 2, 3, 4, 5, 6, 7, 8]);
        let rest = h.remove(&VertexSet::from([3, 2])).unwrap().unwrap();
        assert_eq!(rest.carrier(), &VertexSet::from([1, 4, 5, 6, 7, 8]));
        let comps = rest.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], frieze(&[1]));
        assert_eq!(comps[1], frieze(&[4, 5, 6, 7, 8]));
        assert_eq!(h.remove(&VertexSet::new()).unwrap().unwrap(), h);
        assert_eq!(h.remove(h.carrier()).unwrap(), None);
    }

    #[test]
    fn connectivity() {
        assert!(!frieze(&[1, 2, 5]).is_connected());
        assert!(frieze(&[7]).is_connected());
        assert!(simplex(&[1, 2, 3]).is_connected());
        let d = Hypergraph::discrete(VertexSet::from([1, 3, 5])).unwrap();
        let comps: Vec<_> = d.component_carriers();
        assert_eq!(comps, vec![VertexSet::from([1]), VertexSet::from([3]), VertexSet::from([5])]);
        assert_eq!(frieze(&[1, 2, 3]).connected_components(), vec![frieze(&[1, 2, 3])]);
    }

    #[test]
    fn negative_ids_order_components() {
        let d = Hypergraph::discrete(VertexSet::from([5, -3, 0])).unwrap();
        let mins: Vec<i64> = d.component_carriers().iter().map(|c| c.min_vertex().unwrap().0).collect();
        assert_eq!(mins, vec![-3, 0, 5]);
    }

    #[test]
    fn atomic_completion() {
        let h = Hypergraph::new(VertexSet::from([1, 2]), [VertexSet::from([1, 2])]).unwrap();
        assert!(h.has_hyperedge(&VertexSet::from([1])));
        assert!(h.has_hyperedge(&VertexSet::from([2])));
        assert!(Hypergraph::new(VertexSet::from([1]), [VertexSet::from([2])]).is_err());
    }

    #[test]
    fn subset_ops() {
        let a = VertexSet::from([1, 3, 5]);
        let b = VertexSet::from([1, 2, 3, 4, 5]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert!(VertexSet::new().is_subset(&a));
        assert_eq!(a.union(&VertexSet::from([2])), VertexSet::from([1, 2, 3, 5]));
        assert_eq!(b.difference(&a), VertexSet::from([2, 4]));
        assert!(a.is_disjoint(&VertexSet::from([2, 4])));
        assert_eq!(VertexSet::from([1, 2]).nonempty_subsets().len(), 3);
    }
}
