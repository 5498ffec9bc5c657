//! Hypercube faces as words over `{+, -, •}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::constructs::Construct;
use crate::error::{Error, Result};
use crate::hypergraph::{VertexId, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CubeLetter {
    Plus,
    Minus,
    Dot,
}

impl CubeLetter {
    fn symbol(self) -> char {
        match self {
            CubeLetter::Plus => '+',
            CubeLetter::Minus => '-',
            CubeLetter::Dot => '.',
        }
    }
}

/// A word starting with `+`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeWord(Vec<CubeLetter>);

impl CubeWord {
    pub fn new(letters: Vec<CubeLetter>) -> Result<Self> {
        if letters.first() != Some(&CubeLetter::Plus) {
            return Err(Error::BadWord("cube words start with '+'".into()));
        }
        Ok(CubeWord(letters))
    }

    pub fn letters(&self) -> &[CubeLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Splits `v = v1 + v2` at the last plus.
    fn split_last_plus(&self) -> (&[CubeLetter], &[CubeLetter]) {
        let p = self
            .0
            .iter()
            .rposition(|&l| l == CubeLetter::Plus)
            .expect("cube words contain a plus");
        (&self.0[..p], &self.0[p + 1..])
    }
}

impl fmt::Display for CubeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.symbol())?;
        }
        Ok(())
    }
}

/// Accepts `+`, `-` (or `−`) and `.` (or `•`).
impl FromStr for CubeWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(CubeLetter::Plus),
                '-' | '−' => Ok(CubeLetter::Minus),
                '.' | '•' => Ok(CubeLetter::Dot),
                other => Err(Error::BadWord(format!("unexpected symbol {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        CubeWord::new(letters)
    }
}

/// Reads a word as a construct of the hypercube on `x`: the last plus and
/// the dots after it form the root, the minuses after it are singleton
/// children and the part before it is one more child, read recursively.
pub fn hypercube_decode(w: &CubeWord, x: &VertexSet) -> Result<Construct> {
    if w.len() != x.len() {
        return Err(Error::BadWord(format!("word {w} has length {}, carrier {x} has {}", w.len(), x.len())));
    }
    decode_slice(w.letters(), x.as_slice().iter().map(|v| v.0).collect::<Vec<_>>().as_slice())
}

fn decode_slice(w: &[CubeLetter], ids: &[i64]) -> Result<Construct> {
    if w.first() != Some(&CubeLetter::Plus) {
        return Err(Error::BadWord("cube words start with '+'".into()));
    }
    let p = w.iter().rposition(|&l| l == CubeLetter::Plus).expect("starts with a plus");
    let mut root = vec![ids[p]];
    let mut children = Vec::new();
    for i in p + 1..w.len() {
        match w[i] {
            CubeLetter::Dot => root.push(ids[i]),
            CubeLetter::Minus => children.push(Construct::leaf(VertexSet::from([ids[i]]))),
            CubeLetter::Plus => unreachable!("last plus"),
        }
    }
    if p > 0 {
        children.push(decode_slice(&w[..p], &ids[..p])?);
    }
    Construct::new(root.into_iter().collect(), children)
}

/// Inverse of [`hypercube_decode`].
pub fn hypercube_encode(c: &Construct, x: &VertexSet) -> Result<CubeWord> {
    if c.carrier() != x {
        return Err(Error::InvalidConstruct(format!("carrier {} differs from {x}", c.carrier())));
    }
    let mut letters = vec![CubeLetter::Minus; x.len()];
    encode_into(c, x.as_slice().iter().map(|v| v.0).collect::<Vec<_>>().as_slice(), &mut letters)?;
    CubeWord::new(letters)
}

fn encode_into(c: &Construct, ids: &[i64], letters: &mut [CubeLetter]) -> Result<()> {
    let bad = || Error::InvalidConstruct(format!("{c} is not a hypercube construct"));
    let low = c.root().min_vertex().ok_or_else(bad)?;
    let p = ids.iter().position(|&v| v == low.0).ok_or_else(bad)?;
    letters[p] = CubeLetter::Plus;
    for (i, &v) in ids.iter().enumerate().skip(p + 1) {
        if c.root().contains(VertexId(v)) {
            letters[i] = CubeLetter::Dot;
        } else if c.children().iter().any(|ch| ch.is_leaf() && ch.root().as_slice() == [VertexId(v)]) {
            letters[i] = CubeLetter::Minus;
        } else {
            return Err(bad());
        }
    }
    if p > 0 {
        let prefix: VertexSet = ids[..p].iter().copied().collect();
        let child = c.children().iter().find(|ch| ch.carrier() == &prefix).ok_or_else(bad)?;
        encode_into(child, &ids[..p], &mut letters[..p])?;
    }
    let expected_children = (ids.len() - p - 1 - (c.root().len() - 1)) + usize::from(p > 0);
    if c.children().len() != expected_children {
        return Err(bad());
    }
    Ok(())
}

/// Formal sum of cube words with integer coefficients.
pub type WordSum = BTreeMap<CubeWord, i64>;

fn add_into(acc: &mut WordSum, w: CubeWord, k: i64) {
    let e = acc.entry(w.clone()).or_insert(0);
    *e += k;
    if *e == 0 {
        acc.remove(&w);
    }
}

/// The word-level operations at `q = -1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CubeTrio {
    pub prec: WordSum,
    pub dot: WordSum,
    pub succ: WordSum,
}

fn cat(parts: &[&[CubeLetter]]) -> CubeWord {
    CubeWord(parts.concat())
}

/// `u ≺ v`, `u · v` and `u ≻ v` for the hypercube on the concatenated
/// carrier, with `∗ = ≺ - · + ≻`.
pub fn hypercube_trio_words(u: &CubeWord, v: &CubeWord) -> CubeTrio {
    let (v1, v2) = v.split_last_plus();
    let minus = |k: usize| vec![CubeLetter::Minus; k];
    let mut out = CubeTrio::default();
    add_into(&mut out.prec, cat(&[u.letters(), &minus(v.len())]), 1);
    add_into(
        &mut out.dot,
        cat(&[u.letters(), &minus(v1.len()), &[CubeLetter::Dot], v2]),
        1,
    );
    if v1.is_empty() {
        add_into(&mut out.succ, cat(&[u.letters(), &[CubeLetter::Plus], v2]), 1);
    } else {
        let v1 = CubeWord(v1.to_vec());
        for (w, k) in hypercube_star_words(u, &v1) {
            add_into(&mut out.succ, cat(&[w.letters(), &[CubeLetter::Plus], v2]), k);
        }
    }
    out
}

/// `u ∗ v = u ≺ v - u · v + u ≻ v`.
pub fn hypercube_star_words(u: &CubeWord, v: &CubeWord) -> WordSum {
    let t = hypercube_trio_words(u, v);
    let mut acc = WordSum::new();
    for (w, k) in t.prec.into_iter().chain(t.succ) {
        add_into(&mut acc, w, k);
    }
    for (w, k) in t.dot {
        add_into(&mut acc, w, -k);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> CubeWord {
        s.parse().unwrap()
    }

    #[test]
    fn decode_examples() {
        let x = VertexSet::interval(1, 4);
        assert_eq!(hypercube_decode(&w("+.+-"), &x).unwrap().to_string(), "3(12,4)");
        assert_eq!(hypercube_decode(&w("++++"), &x).unwrap().to_string(), "4(3(2(1)))");
        assert!(matches!("-+".parse::<CubeWord>(), Err(Error::BadWord(_))));
        assert_eq!(w("+•−").to_string(), "+.-");
    }

    #[test]
    fn encode_inverts_decode() {
        let x = VertexSet::interval(1, 3);
        for s in ["+-+", "+++", "+--", "++-", "+.+", "+-.", "++.", "+.-", "+.."] {
            let c = hypercube_decode(&w(s), &x).unwrap();
            assert_eq!(hypercube_encode(&c, &x).unwrap(), w(s));
        }
        let not_cube: Construct = "3(1,2)".parse().unwrap();
        assert!(hypercube_encode(&not_cube, &x).is_err());
    }

    #[test]
    fn word_rules() {
        let t = hypercube_trio_words(&w("+"), &w("+"));
        assert_eq!(t.prec, WordSum::from([(w("+-"), 1)]));
        assert_eq!(t.dot, WordSum::from([(w("+."), 1)]));
        assert_eq!(t.succ, WordSum::from([(w("++"), 1)]));
    }
}
