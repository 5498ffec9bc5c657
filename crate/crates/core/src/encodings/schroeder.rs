//! Schröder trees, associahedron faces, and the Loday-Ronco operations.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::constructs::Construct;
use crate::error::{Error, Result};
use crate::hypergraph::VertexSet;
use crate::qalgebra::QPolynomial;

/// A planar rooted tree without unary nodes. `Leaf` is the empty tree `•()`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SchroederTree {
    Leaf,
    Node(Vec<SchroederTree>),
}

impl SchroederTree {
    pub fn node(children: Vec<SchroederTree>) -> Result<Self> {
        if children.len() < 2 {
            return Err(Error::Parse(format!("node of arity {} in a Schröder tree", children.len())));
        }
        Ok(SchroederTree::Node(children))
    }

    /// The corolla with `k` leaves.
    pub fn corolla(k: usize) -> Self {
        SchroederTree::Node(vec![SchroederTree::Leaf; k])
    }

    pub fn leaves(&self) -> usize {
        match self {
            SchroederTree::Leaf => 1,
            SchroederTree::Node(ch) => ch.iter().map(SchroederTree::leaves).sum(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, SchroederTree::Leaf)
    }
}

/// `.` for a leaf, `(A,B,…)` for a node.
impl fmt::Display for SchroederTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchroederTree::Leaf => write!(f, "."),
            SchroederTree::Node(ch) => {
                write!(f, "(")?;
                for (i, c) in ch.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl FromStr for SchroederTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_tree(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in {s:?}")));
        }
        Ok(t)
    }
}

fn parse_tree(chars: &[char], pos: &mut usize) -> Result<SchroederTree> {
    match chars.get(*pos) {
        Some('.') => {
            *pos += 1;
            Ok(SchroederTree::Leaf)
        }
        Some('(') => {
            *pos += 1;
            let mut ch = Vec::new();
            loop {
                ch.push(parse_tree(chars, pos)?);
                match chars.get(*pos) {
                    Some(',') => *pos += 1,
                    Some(')') => {
                        *pos += 1;
                        break;
                    }
                    _ => return Err(Error::Parse(format!("expected ',' or ')' at offset {pos}"))),
                }
            }
            SchroederTree::node(ch)
        }
        _ => Err(Error::Parse(format!("expected '.' or '(' at offset {pos}"))),
    }
}

fn interval_ids(x: &VertexSet) -> Result<Vec<i64>> {
    let ids: Vec<i64> = x.iter().map(|v| v.0).collect();
    if ids.is_empty() || ids.windows(2).any(|w| w[1] != w[0] + 1) {
        return Err(Error::NotInterval(x.to_string()));
    }
    Ok(ids)
}

/// Labels the tree by the interval `x`: a node with `p + 1` subtrees carries
/// `p` labels, the `j`-th label sitting between subtrees `j - 1` and `j`.
pub fn associahedron_decode(t: &SchroederTree, x: &VertexSet) -> Result<Construct> {
    let ids = interval_ids(x)?;
    if t.is_leaf() || t.leaves() != ids.len() + 1 {
        return Err(Error::BadWord(format!("tree {t} does not have {} leaves", ids.len() + 1)));
    }
    decode_rec(t, &ids)
}

fn decode_rec(t: &SchroederTree, ids: &[i64]) -> Result<Construct> {
    let SchroederTree::Node(ch) = t else {
        unreachable!("called on nodes only")
    };
    let mut labels = Vec::new();
    let mut children = Vec::new();
    let mut offset = 0;
    for (j, c) in ch.iter().enumerate() {
        let size = c.leaves() - 1;
        if size > 0 {
            children.push(decode_rec(c, &ids[offset..offset + size])?);
        }
        offset += size;
        if j + 1 < ch.len() {
            labels.push(ids[offset]);
            offset += 1;
        }
    }
    Construct::new(labels.into_iter().collect(), children)
}

/// Inverse of [`associahedron_decode`].
pub fn associahedron_encode(c: &Construct, x: &VertexSet) -> Result<SchroederTree> {
    let ids = interval_ids(x)?;
    if c.carrier() != x {
        return Err(Error::InvalidConstruct(format!("carrier {} differs from {x}", c.carrier())));
    }
    encode_rec(c, &ids)
}

fn encode_rec(c: &Construct, ids: &[i64]) -> Result<SchroederTree> {
    let bad = || Error::InvalidConstruct(format!("{c} is not an associahedron construct"));
    let mut subtrees = Vec::new();
    let mut used = 0;
    let mut gap: Vec<i64> = Vec::new();
    let mut flush = |gap: &mut Vec<i64>, subtrees: &mut Vec<SchroederTree>| -> Result<()> {
        if gap.is_empty() {
            subtrees.push(SchroederTree::Leaf);
        } else {
            let set: VertexSet = gap.iter().copied().collect();
            let child = c.children().iter().find(|ch| ch.carrier() == &set).ok_or_else(bad)?;
            subtrees.push(encode_rec(child, gap)?);
            used += 1;
            gap.clear();
        }
        Ok(())
    };
    for &v in ids {
        if c.root().contains(crate::hypergraph::VertexId(v)) {
            flush(&mut gap, &mut subtrees)?;
        } else {
            gap.push(v);
        }
    }
    flush(&mut gap, &mut subtrees)?;
    if used != c.children().len() {
        return Err(bad());
    }
    SchroederTree::node(subtrees)
}

/// Formal sum of trees with polynomial coefficients.
pub type TreeSum = BTreeMap<SchroederTree, QPolynomial>;

fn add_into(acc: &mut TreeSum, t: SchroederTree, p: &QPolynomial) {
    let e = acc.entry(t.clone()).or_default();
    *e += p;
    if e.is_zero() {
        acc.remove(&t);
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TreeTrio {
    pub prec: TreeSum,
    pub dot: TreeSum,
    pub succ: TreeSum,
}

/// The three operations on non-leaf trees, with `∗ = ≺ + q· + ≻` used
/// recursively and `•() ∗ S = S = S ∗ •()`.
pub fn lr_trio_trees(s: &SchroederTree, t: &SchroederTree) -> TreeTrio {
    let (SchroederTree::Node(ss), SchroederTree::Node(ts)) = (s, t) else {
        panic!("the operations take non-leaf trees");
    };
    let (s_last, s_init) = ss.split_last().expect("nonempty");
    let (t_first, t_rest) = ts.split_first().expect("nonempty");
    let mut out = TreeTrio::default();
    for (r, p) in lr_star(s_last, t) {
        let mut ch = s_init.to_vec();
        ch.push(r);
        add_into(&mut out.prec, SchroederTree::Node(ch), &p);
    }
    for (r, p) in lr_star(s, t_first) {
        let mut ch = vec![r];
        ch.extend(t_rest.iter().cloned());
        add_into(&mut out.succ, SchroederTree::Node(ch), &p);
    }
    for (r, p) in lr_star(s_last, t_first) {
        let mut ch = s_init.to_vec();
        ch.push(r);
        ch.extend(t_rest.iter().cloned());
        add_into(&mut out.dot, SchroederTree::Node(ch), &p);
    }
    out
}

/// `s ∗ t`.
pub fn lr_star(s: &SchroederTree, t: &SchroederTree) -> TreeSum {
    if s.is_leaf() {
        return TreeSum::from([(t.clone(), QPolynomial::one())]);
    }
    if t.is_leaf() {
        return TreeSum::from([(s.clone(), QPolynomial::one())]);
    }
    let trio = lr_trio_trees(s, t);
    let mut acc = TreeSum::new();
    for (r, p) in trio.prec.iter().chain(&trio.succ) {
        add_into(&mut acc, r.clone(), p);
    }
    let q = QPolynomial::q();
    for (r, p) in &trio.dot {
        add_into(&mut acc, r.clone(), &(p * &q));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SchroederTree {
        s.parse().unwrap()
    }

    #[test]
    fn text_form() {
        assert_eq!(t("(.,(.,.))").to_string(), "(.,(.,.))");
        assert!("(.)".parse::<SchroederTree>().is_err());
        assert!("(.,.".parse::<SchroederTree>().is_err());
        assert_eq!(t("(.,.,.)").leaves(), 3);
    }

    #[test]
    fn labelling() {
        let x = VertexSet::interval(1, 3);
        assert_eq!(associahedron_decode(&SchroederTree::corolla(4), &x).unwrap().to_string(), "123");
        let chain: Construct = "1(2(3))".parse().unwrap();
        let tree = associahedron_encode(&chain, &x).unwrap();
        assert_eq!(tree, t("(.,(.,(.,.)))"));
        assert_eq!(associahedron_decode(&tree, &x).unwrap(), chain);
        assert!(matches!(
            associahedron_decode(&tree, &VertexSet::from([1, 2, 4])),
            Err(Error::NotInterval(_))
        ));
    }

    #[test]
    fn leaf_is_a_unit() {
        let s = t("(.,.)");
        assert_eq!(lr_star(&SchroederTree::Leaf, &s), TreeSum::from([(s.clone(), QPolynomial::one())]));
        assert_eq!(lr_star(&s, &SchroederTree::Leaf), TreeSum::from([(s, QPolynomial::one())]));
    }

    #[test]
    fn smallest_product() {
        let y = t("(.,.)");
        let trio = lr_trio_trees(&y, &y);
        assert_eq!(trio.prec.keys().collect::<Vec<_>>(), vec![&t("(.,(.,.))")]);
        assert_eq!(trio.succ.keys().collect::<Vec<_>>(), vec![&t("((.,.),.)")]);
        assert_eq!(trio.dot.keys().collect::<Vec<_>>(), vec![&t("(.,.,.)")]);
    }

    #[test]
    fn introductory_product_splits_five_three_five() {
        let s = t("(.,((.,.),.))");
        let u = t("((.,.),.)");
        let trio = lr_trio_trees(&s, &u);
        assert_eq!((trio.prec.len(), trio.dot.len(), trio.succ.len()), (5, 3, 5));
        assert_eq!(lr_star(&s, &u).len(), 13);
    }
}
