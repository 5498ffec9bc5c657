//! Packed words, permutohedron faces as chains, and the surjection shuffle.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::constructs::Construct;
use crate::error::{Error, Result};
use crate::hypergraph::VertexSet;

/// A word whose letters are exactly `1..=n` for some `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PackedWord(Vec<u32>);

impl PackedWord {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::BadWord("empty packed word".into()));
        }
        let image: BTreeSet<u32> = letters.iter().copied().collect();
        let n = image.len() as u32;
        if image.first() != Some(&1) || image.last() != Some(&n) {
            return Err(Error::BadWord(format!("{letters:?} is not packed")));
        }
        Ok(PackedWord(letters))
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest letter, which is also the number of distinct letters.
    pub fn max_letter(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl fmt::Display for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Comma separated letters, with or without surrounding parentheses.
impl FromStr for PackedWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let letters = body
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad letter {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        PackedWord::new(letters)
    }
}

/// Standardization: replace each letter by its rank among the distinct letters.
pub fn std_word(w: &[u32]) -> Result<PackedWord> {
    if w.is_empty() {
        return Err(Error::BadWord("empty word".into()));
    }
    let image: Vec<u32> = w.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let letters = w
        .iter()
        .map(|x| image.binary_search(x).expect("letter in image") as u32 + 1)
        .collect();
    PackedWord::new(letters)
}

/// Encodes a chain construct of the permutohedron on `x`. The root gets the
/// largest letter and each step down the chain lowers the letter by one; a
/// vertex is written with the letter of the node containing it.
pub fn permutohedron_encode(c: &Construct, x: &VertexSet) -> Result<PackedWord> {
    if c.carrier() != x {
        return Err(Error::InvalidConstruct(format!("carrier {} differs from {x}", c.carrier())));
    }
    assert!(c.is_chain(), "permutohedron constructs are chains");
    let n = c.node_count() as u32;
    let mut letters = vec![0u32; x.len()];
    for (depth, deco) in c.decorations().into_iter().enumerate() {
        for v in deco.iter() {
            letters[x.index_of(v).expect("vertex in carrier")] = n - depth as u32;
        }
    }
    PackedWord::new(letters)
}

/// Inverse of [`permutohedron_encode`].
pub fn permutohedron_decode(w: &PackedWord, x: &VertexSet) -> Result<Construct> {
    if w.len() != x.len() {
        return Err(Error::BadWord(format!("word {w} has length {}, carrier {x} has {}", w.len(), x.len())));
    }
    let level = |k: u32| -> VertexSet {
        x.iter()
            .zip(w.letters())
            .filter(|(_, l)| **l == k)
            .map(|(v, _)| v)
            .collect()
    };
    let mut c = Construct::leaf(level(1));
    for k in 2..=w.max_letter() {
        c = Construct::new(level(k), vec![c])?;
    }
    Ok(c)
}

/// The three parts of the surjection shuffle of two packed words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordTrio {
    pub prec: BTreeSet<PackedWord>,
    pub dot: BTreeSet<PackedWord>,
    pub succ: BTreeSet<PackedWord>,
}

/// Increasing maps `[k] -> [n]`, listed as their images.
fn increasing_maps(k: usize, n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: u32, k: usize, n: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(v + 1, k, n, cur, out);
            cur.pop();
        }
    }
    go(1, k, n as u32, &mut cur, &mut out);
    out
}

/// All words `hk` with `std(h) = f`, `std(k) = g` and letters exactly
/// `1..=n`, split by comparing the largest letters of `h` and `k`.
pub fn br_shuffle(f: &PackedWord, g: &PackedWord) -> WordTrio {
    let (m1, m2) = (f.max_letter() as usize, g.max_letter() as usize);
    let mut out = WordTrio::default();
    for n in m1.max(m2)..=m1 + m2 {
        for alpha in increasing_maps(m1, n) {
            for beta in increasing_maps(m2, n) {
                let covered: BTreeSet<u32> = alpha.iter().chain(&beta).copied().collect();
                if covered.len() != n {
                    continue;
                }
                let h: Vec<u32> = f.letters().iter().map(|&l| alpha[l as usize - 1]).collect();
                let k: Vec<u32> = g.letters().iter().map(|&l| beta[l as usize - 1]).collect();
                let (mh, mk) = (alpha[m1 - 1], beta[m2 - 1]);
                let word = PackedWord(h.into_iter().chain(k).collect());
                match mh.cmp(&mk) {
                    std::cmp::Ordering::Greater => out.prec.insert(word),
                    std::cmp::Ordering::Equal => out.dot.insert(word),
                    std::cmp::Ordering::Less => out.succ.insert(word),
                };
            }
        }
    }
    out
}
