//! Constructs: the decorated rooted trees labelling faces of a hypergraph
//! polytope, together with tubings and construct restriction.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};

/// A rooted tree whose nodes carry pairwise disjoint nonempty vertex sets.
///
/// Values are always canonical: children are sorted by the minimum vertex of
/// their subtree carrier, so structural equality is construct equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Construct {
    decoration: VertexSet,
    children: Vec<Construct>,
    carrier: VertexSet,
}

/// The set of tubes of a construct, one per node.
pub type Tubing = BTreeSet<VertexSet>;

impl Construct {
    /// Builds `decoration(children…)`, sorting the children.
    pub fn new(decoration: VertexSet, mut children: Vec<Construct>) -> Result<Self> {
        if decoration.is_empty() {
            return Err(Error::InvalidConstruct("empty decoration".into()));
        }
        let mut carrier = decoration.clone();
        for c in &children {
            if !carrier.is_disjoint(&c.carrier) {
                return Err(Error::InvalidConstruct(format!(
                    "decorations overlap below {decoration}"
                )));
            }
            carrier = carrier.union(&c.carrier);
        }
        children.sort_by_key(|c| c.carrier.min_vertex());
        Ok(Construct {
            decoration,
            children,
            carrier,
        })
    }

    /// The one-node construct.
    pub fn leaf(decoration: VertexSet) -> Self {
        assert!(!decoration.is_empty(), "empty decoration");
        Construct {
            carrier: decoration.clone(),
            decoration,
            children: Vec::new(),
        }
    }

    pub fn root(&self) -> &VertexSet {
        &self.decoration
    }

    pub fn children(&self) -> &[Construct] {
        &self.children
    }

    /// Union of all decorations.
    pub fn carrier(&self) -> &VertexSet {
        &self.carrier
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(Construct::node_count).sum::<usize>()
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Whether every node has at most one child.
    pub fn is_chain(&self) -> bool {
        match self.children.as_slice() {
            [] => true,
            [c] => c.is_chain(),
            _ => false,
        }
    }

    /// Decorations in pre-order.
    pub fn decorations(&self) -> Vec<&VertexSet> {
        let mut out = vec![&self.decoration];
        for c in &self.children {
            out.extend(c.decorations());
        }
        out
    }

    fn small_ids(&self) -> bool {
        self.carrier.iter().all(|v| (0..=9).contains(&v.0))
    }

    fn write_notation(&self, f: &mut fmt::Formatter<'_>, compact: bool) -> fmt::Result {
        if compact {
            for v in self.decoration.iter() {
                write!(f, "{v}")?;
            }
        } else {
            write!(f, "{}", self.decoration)?;
        }
        if !self.children.is_empty() {
            write!(f, "(")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                c.write_notation(f, compact)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Nested notation such as `3(14(2,5))`. Decorations are written as runs of
/// digits when every vertex lies in `0..=9`, and as braced lists otherwise.
impl fmt::Display for Construct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_notation(f, self.small_ids())
    }
}

impl FromStr for Construct {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let c = parse_node(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input at offset {pos} in {s:?}")));
        }
        Ok(c)
    }
}

fn parse_node(chars: &[char], pos: &mut usize) -> Result<Construct> {
    let mut ids = Vec::new();
    match chars.get(*pos) {
        Some('{') => {
            *pos += 1;
            let start = *pos;
            while *pos < chars.len() && chars[*pos] != '}' {
                *pos += 1;
            }
            if *pos == chars.len() {
                return Err(Error::Parse("unclosed '{'".into()));
            }
            let body: String = chars[start..*pos].iter().collect();
            *pos += 1;
            for tok in body.split(',') {
                let v: i64 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad vertex {tok:?}")))?;
                ids.push(v);
            }
        }
        _ => {
            while let Some(d) = chars.get(*pos).and_then(|c| c.to_digit(10)) {
                ids.push(i64::from(d));
                *pos += 1;
            }
        }
    }
    if ids.is_empty() {
        return Err(Error::Parse(format!("expected a decoration at offset {pos}")));
    }
    let decoration: VertexSet = ids.iter().copied().collect();
    if decoration.len() != ids.len() {
        return Err(Error::Parse("repeated vertex in decoration".into()));
    }
    let mut children = Vec::new();
    if chars.get(*pos) == Some(&'(') {
        *pos += 1;
        loop {
            children.push(parse_node(chars, pos)?);
            match chars.get(*pos) {
                Some(',') => *pos += 1,
                Some(')') => {
                    *pos += 1;
                    break;
                }
                _ => return Err(Error::Parse(format!("expected ',' or ')' at offset {pos}"))),
            }
        }
    }
    Construct::new(decoration, children).map_err(|e| Error::Parse(e.to_string()))
}

/// Checks that `t` is a construct of `h`. The error names the first node
/// where the recursive definition fails.
pub fn validate(h: &Hypergraph, t: &Construct) -> Result<()> {
    if !h.is_connected() {
        return Err(Error::InvalidConstruct(format!("hypergraph on {} is not connected", h.carrier())));
    }
    if t.carrier() != h.carrier() {
        return Err(Error::InvalidConstruct(format!(
            "construct carrier {} differs from {}",
            t.carrier(),
            h.carrier()
        )));
    }
    validate_node(h, t)
}

fn validate_node(h: &Hypergraph, t: &Construct) -> Result<()> {
    let rest = match h.remove(t.root())? {
        None => {
            return if t.is_leaf() {
                Ok(())
            } else {
                Err(Error::InvalidConstruct(format!("node {} has spurious children", t.root())))
            };
        }
        Some(r) => r,
    };
    let comps = rest.connected_components();
    if comps.len() != t.children().len() {
        return Err(Error::InvalidConstruct(format!(
            "node {} has {} children but removing it leaves {} components",
            t.root(),
            t.children().len(),
            comps.len()
        )));
    }
    // both sides are ordered by minimum vertex
    for (comp, child) in comps.iter().zip(t.children()) {
        if comp.carrier() != child.carrier() {
            return Err(Error::InvalidConstruct(format!(
                "child {} of node {} is not a component ({} is)",
                child.carrier(),
                t.root(),
                comp.carrier()
            )));
        }
        validate_node(comp, child)?;
    }
    Ok(())
}

pub fn is_construct_of(h: &Hypergraph, t: &Construct) -> bool {
    validate(h, t).is_ok()
}

/// All constructs of a connected hypergraph. Root decorations are taken in
/// lexicographic order of their sorted vertex lists.
pub fn enumerate(h: &Hypergraph) -> Result<Vec<Construct>> {
    if !h.is_connected() {
        return Err(Error::Disconnected(h.carrier().to_string()));
    }
    let mut memo = HashMap::new();
    Ok(enumerate_memo(h, &mut memo))
}

fn enumerate_memo(h: &Hypergraph, memo: &mut HashMap<VertexSet, Vec<Construct>>) -> Vec<Construct> {
    if let Some(v) = memo.get(h.carrier()) {
        return v.clone();
    }
    let mut out = Vec::new();
    for root in h.carrier().nonempty_subsets() {
        let comps = match h.remove(&root).expect("subset of carrier") {
            None => Vec::new(),
            Some(rest) => rest.connected_components(),
        };
        let options: Vec<Vec<Construct>> = comps.iter().map(|c| enumerate_memo(c, memo)).collect();
        for choice in cartesian(&options) {
            out.push(Construct::new(root.clone(), choice).expect("disjoint components"));
        }
    }
    memo.insert(h.carrier().clone(), out.clone());
    out
}

/// Cartesian product of the option lists, in lexicographic order.
pub(crate) fn cartesian<T: Clone>(options: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut acc: Vec<Vec<T>> = vec![Vec::new()];
    for opts in options {
        let mut next = Vec::with_capacity(acc.len() * opts.len());
        for prefix in &acc {
            for o in opts {
                let mut p = prefix.clone();
                p.push(o.clone());
                next.push(p);
            }
        }
        acc = next;
    }
    acc
}

/// Entry `k - 1` is the number of constructs with exactly `k` nodes.
pub fn count_by_nodes(h: &Hypergraph) -> Result<Vec<BigUint>> {
    if !h.is_connected() {
        return Err(Error::Disconnected(h.carrier().to_string()));
    }
    let mut memo = HashMap::new();
    let mut v = count_memo(h, &mut memo).split_off(1);
    while v.last().is_some_and(|c| *c == BigUint::ZERO) {
        v.pop();
    }
    Ok(v)
}

fn poly_mul(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == BigUint::ZERO {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

// Coefficient of x^k counts constructs with k nodes; index 0 is unused.
fn count_memo(h: &Hypergraph, memo: &mut HashMap<VertexSet, Vec<BigUint>>) -> Vec<BigUint> {
    if let Some(v) = memo.get(h.carrier()) {
        return v.clone();
    }
    let mut total = vec![BigUint::ZERO; h.len() + 1];
    for root in h.carrier().nonempty_subsets() {
        // x for the root node
        let mut term = vec![BigUint::ZERO, BigUint::from(1u8)];
        if let Some(rest) = h.remove(&root).expect("subset of carrier") {
            for comp in rest.connected_components() {
                let c = count_memo(&comp, memo);
                term = poly_mul(&term, &c);
            }
        }
        for (i, t) in term.into_iter().enumerate() {
            if i < total.len() {
                total[i] += t;
            }
        }
    }
    memo.insert(h.carrier().clone(), total.clone());
    total
}

/// Total number of constructs of a connected hypergraph.
pub fn count_total(h: &Hypergraph) -> Result<BigUint> {
    Ok(count_by_nodes(h)?.into_iter().sum())
}

/// The tubes of `t`: for each node, its decoration together with all
/// decorations below it.
pub fn tubing(t: &Construct) -> Tubing {
    let mut out = Tubing::new();
    collect_tubes(t, &mut out);
    out
}

fn collect_tubes(t: &Construct, out: &mut Tubing) {
    out.insert(t.carrier().clone());
    for c in t.children() {
        collect_tubes(c, out);
    }
}

/// Restriction `s|_h` of a construct `s` of `l` to a sub-hypergraph `h`
/// whose hyperedges are all connected in `l`.
pub fn restrict_construct(s: &Construct, l: &Hypergraph, h: &Hypergraph) -> Result<Construct> {
    validate(l, s).map_err(|e| Error::PreconditionViolated(e.to_string()))?;
    if !h.carrier().is_subset(l.carrier()) {
        return Err(Error::PreconditionViolated(format!(
            "{} is not contained in {}",
            h.carrier(),
            l.carrier()
        )));
    }
    if !h.is_connected() {
        return Err(Error::PreconditionViolated(format!("{} is not connected", h.carrier())));
    }
    for e in h.hyperedges() {
        if !l.is_connected_subset(e) {
            return Err(Error::PreconditionViolated(format!(
                "hyperedge {e} is not connected in {}",
                l.carrier()
            )));
        }
    }
    Ok(restrict_unchecked(s, h))
}

/// The restriction recursion without precondition checks. `h` must be
/// connected and every hyperedge of `h` connected in the hypergraph of `s`.
pub(crate) fn restrict_unchecked(s: &Construct, h: &Hypergraph) -> Construct {
    let meet = s.root().intersection(h.carrier());
    if meet.is_empty() {
        let child = s
            .children()
            .iter()
            .find(|c| h.carrier().is_subset(c.carrier()))
            .expect("connected sub-hypergraph lies in one child");
        return restrict_unchecked(child, h);
    }
    let children = match h.remove(&meet).expect("subset of carrier") {
        None => Vec::new(),
        Some(rest) => rest
            .connected_components()
            .iter()
            .map(|comp| {
                let child = s
                    .children()
                    .iter()
                    .find(|c| comp.carrier().is_subset(c.carrier()))
                    .expect("component lies in one child");
                restrict_unchecked(child, comp)
            })
            .collect(),
    };
    Construct::new(meet, children).expect("disjoint components")
}

/// The construct `t_H` attached to a tube `t` and a connected hypergraph `h`.
pub fn tube_to_construct(t: &VertexSet, h: &Hypergraph) -> Construct {
    if h.carrier().is_subset(t) {
        return Construct::leaf(h.carrier().clone());
    }
    let root = h.carrier().difference(t);
    let children = match h.remove(&root).expect("subset of carrier") {
        None => Vec::new(),
        Some(rest) => rest
            .component_carriers()
            .into_iter()
            .map(Construct::leaf)
            .collect(),
    };
    Construct::new(root, children).expect("disjoint components")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gamma(k: i64, ids: impl IntoIterator<Item = i64>) -> Hypergraph {
        let carrier: VertexSet = ids.into_iter().collect();
        let mut edges = Vec::new();
        for a in carrier.iter() {
            for b in carrier.iter() {
                if a < b && b.0 - a.0 <= k {
                    edges.push((a.0, b.0));
                }
            }
        }
        Hypergraph::from_graph(carrier, edges).unwrap()
    }

    fn simplex(ids: impl IntoIterator<Item = i64>) -> Hypergraph {
        let carrier: VertexSet = ids.into_iter().collect();
        Hypergraph::new(carrier.clone(), [carrier]).unwrap()
    }

    fn c(s: &str) -> Construct {
        s.parse().unwrap()
    }

    #[test]
    fn notation_round_trip() {
        for s in ["3(14(2,5))", "23(1,4)", "678(4(5))", "1"] {
            assert_eq!(c(s).to_string(), s);
        }
        assert_eq!(c("3(5,14(2))").to_string(), "3(14(2),5)");
        let big = c("{10,12}({11},{-1})");
        assert_eq!(big.to_string(), "{10,12}({-1},{11})");
        assert_eq!(big.to_string().parse::<Construct>().unwrap(), big);
        assert!("1(2".parse::<Construct>().is_err());
        assert!("11".parse::<Construct>().is_err());
        assert!("1(1)".parse::<Construct>().is_err());
    }

    #[test]
    fn validate_examples() {
        let f = gamma(2, 1..=5);
        assert!(is_construct_of(&f, &c("3(14(2,5))")));
        assert!(is_construct_of(&f, &c("12345")));
        assert!(!is_construct_of(&f, &c("3(1,4(2,5))")));
        // hypercube with prefixes {1,2} and {1,2,3}
        let cube = Hypergraph::new(
            VertexSet::from([1, 2, 3]),
            [VertexSet::from([1, 2]), VertexSet::from([1, 2, 3])],
        )
        .unwrap();
        assert!(!is_construct_of(&cube, &c("3(1,2)")));
        assert!(is_construct_of(&cube, &c("3(12)")));
        assert!(is_construct_of(&cube, &c("1(2,3)")));
        let err = validate(&gamma(1, 1..=3), &c("1(2,3)")).unwrap_err();
        assert!(matches!(err, Error::InvalidConstruct(_)));
    }

    #[test]
    fn enumerate_small() {
        let seg = enumerate(&gamma(100, 1..=2)).unwrap();
        let names: Vec<String> = seg.iter().map(|t| t.to_string()).collect();
        assert_eq!(names, vec!["1(2)", "12", "2(1)"]);
        assert_eq!(enumerate(&simplex(1..=4)).unwrap().len(), 15);
        assert_eq!(enumerate(&gamma(1, 1..=3)).unwrap().len(), 11);
        assert_eq!(enumerate(&gamma(100, 1..=3)).unwrap().len(), 13);
        assert!(matches!(
            enumerate(&gamma(1, [1, 3])),
            Err(Error::Disconnected(_))
        ));
    }

    #[test]
    fn enumeration_is_valid_and_duplicate_free() {
        let h = gamma(2, 1..=5);
        let all = enumerate(&h).unwrap();
        let set: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
        assert!(all.iter().all(|t| is_construct_of(&h, t)));
        let counts: Vec<u64> = count_by_nodes(&h)
            .unwrap()
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect();
        let mut by_nodes = vec![0u64; 5];
        for t in &all {
            by_nodes[t.node_count() - 1] += 1;
        }
        assert_eq!(counts, by_nodes);
    }

    #[test]
    fn tubing_examples() {
        let t = tubing(&c("3(14(2,5))"));
        let expected: Tubing = [
            VertexSet::from([1, 2, 3, 4, 5]),
            VertexSet::from([1, 2, 4, 5]),
            VertexSet::from([5]),
            VertexSet::from([2]),
        ]
        .into_iter()
        .collect();
        assert_eq!(t, expected);
        assert_eq!(tubing(&c("2(1,3)")).len(), 3);
    }

    #[test]
    fn restriction_examples() {
        let l = gamma(2, 1..=5);
        let s = c("3(14(2,5))");
        let r = restrict_construct(&s, &l, &gamma(2, [1, 3, 5])).unwrap();
        assert_eq!(r.to_string(), "3(1,5)");
        let r = restrict_construct(&s, &l, &gamma(2, [2, 4])).unwrap();
        assert_eq!(r.to_string(), "4(2)");
        assert_eq!(restrict_construct(&s, &l, &l).unwrap(), s);
        // the edge {1,4} is disconnected in l
        let bad = Hypergraph::from_graph(VertexSet::from([1, 4]), [(1, 4)]).unwrap();
        assert!(matches!(
            restrict_construct(&s, &l, &bad),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn tube_to_construct_examples() {
        let h = gamma(2, [1, 3, 5]);
        assert_eq!(tube_to_construct(&VertexSet::from([1, 2, 4, 5]), &h).to_string(), "3(1,5)");
        assert_eq!(tube_to_construct(&VertexSet::from([5]), &h).to_string(), "13(5)");
        assert_eq!(tube_to_construct(&VertexSet::interval(1, 5), &h).to_string(), "135");
    }

    #[test]
    fn cartesian_order() {
        let v = cartesian(&[vec![1, 2], vec![3], vec![4, 5]]);
        assert_eq!(v, vec![vec![1, 3, 4], vec![1, 3, 5], vec![2, 3, 4], vec![2, 3, 5]]);
        assert_eq!(cartesian::<i32>(&[]), vec![Vec::<i32>::new()]);
    }
}
