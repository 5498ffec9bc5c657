//! Integer polynomials in `q` and formal sums of constructs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::constructs::Construct;
use crate::error::{Error, Result};
use crate::hypergraph::VertexSet;

/// A polynomial in `q` with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: BTreeMap<u32, BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// `c * q^exp`.
    pub fn monomial(exp: u32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        QPolynomial { coeffs }
    }

    /// `q^exp`.
    pub fn q_pow(exp: u32) -> Self {
        Self::monomial(exp, 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, exp: u32) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// `Some(e)` when the polynomial is exactly `q^e`.
    pub fn as_unit_monomial(&self) -> Option<u32> {
        match self.coeffs.iter().next() {
            Some((e, c)) if self.coeffs.len() == 1 && c.is_one() => Some(*e),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.as_unit_monomial().is_some()
    }

    /// Value at `q = v`.
    pub fn evaluate(&self, v: i64) -> BigInt {
        let v = BigInt::from(v);
        let mut acc = BigInt::zero();
        let mut last = self.degree().unwrap_or(0);
        // Horner from the top exponent down
        for (e, c) in self.coeffs.iter().rev() {
            acc *= num_traits::pow(v.clone(), (last - e) as usize);
            acc += c;
            last = *e;
        }
        acc * num_traits::pow(v, last as usize)
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        QPolynomial {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }
}

impl From<i64> for QPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for QPolynomial {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;
    fn add(mut self, rhs: QPolynomial) -> QPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        -&self
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Sub for QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: QPolynomial) -> QPolynomial {
        &self - &rhs
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

/// Written in increasing degree, e.g. `6+q`, `-1+2q^3`, `0`.
impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            if c.is_negative() {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let a = c.abs();
            if *e == 0 {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}")?;
            }
            match e {
                1 => write!(f, "q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

/// A formal sum of constructs on a common carrier, with polynomial
/// coefficients. Terms with a zero coefficient are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstruct {
    carrier: VertexSet,
    terms: BTreeMap<Construct, QPolynomial>,
}

impl LinearConstruct {
    /// The empty sum over `carrier`.
    pub fn zero(carrier: VertexSet) -> Self {
        LinearConstruct {
            carrier,
            terms: BTreeMap::new(),
        }
    }

    /// `1 * c`.
    pub fn from_construct(c: Construct) -> Self {
        Self::term(c, QPolynomial::one())
    }

    pub fn term(c: Construct, coeff: QPolynomial) -> Self {
        let mut out = Self::zero(c.carrier().clone());
        out.add_term(c, coeff).expect("same carrier");
        out
    }

    pub fn carrier(&self) -> &VertexSet {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical construct order.
    pub fn terms(&self) -> impl Iterator<Item = (&Construct, &QPolynomial)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, c: &Construct) -> QPolynomial {
        self.terms.get(c).cloned().unwrap_or_default()
    }

    /// Adds `coeff * c` in place.
    pub fn add_term(&mut self, c: Construct, coeff: QPolynomial) -> Result<()> {
        if c.carrier() != &self.carrier {
            return Err(Error::MixedHypergraphs(self.carrier.to_string(), c.carrier().to_string()));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(c).or_default();
        *entry += &coeff;
        if entry.is_zero() {
            self.terms.retain(|_, p| !p.is_zero());
        }
        Ok(())
    }

    pub fn add(&self, other: &LinearConstruct) -> Result<LinearConstruct> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &LinearConstruct) -> Result<()> {
        if other.carrier != self.carrier {
            return Err(Error::MixedHypergraphs(self.carrier.to_string(), other.carrier.to_string()));
        }
        for (c, p) in &other.terms {
            self.add_term(c.clone(), p.clone())?;
        }
        Ok(())
    }

    pub fn scale(&self, p: &QPolynomial) -> LinearConstruct {
        LinearConstruct {
            carrier: self.carrier.clone(),
            terms: self
                .terms
                .iter()
                .map(|(c, a)| (c.clone(), a * p))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    /// Substitutes `q = v` in every coefficient.
    pub fn evaluate_q(&self, v: i64) -> LinearConstruct {
        LinearConstruct {
            carrier: self.carrier.clone(),
            terms: self
                .terms
                .iter()
                .map(|(c, a)| (c.clone(), QPolynomial::constant(a.evaluate(v))))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn coefficient_sum(&self) -> QPolynomial {
        let mut s = QPolynomial::zero();
        for p in self.terms.values() {
            s += p;
        }
        s
    }

    /// The root decoration shared by all terms, if there is one.
    pub fn common_root(&self) -> Option<&VertexSet> {
        let mut it = self.terms.keys();
        let first = it.next()?.root();
        it.all(|c| c.root() == first).then_some(first)
    }

    /// Whether every coefficient is a single `q^e`.
    pub fn is_homogeneous(&self) -> bool {
        self.terms.values().all(QPolynomial::is_monomial)
    }
}

/// Multilinear grafting `x(children…)`: every choice of one term per child
/// gives the construct `x(t_1,…,t_n)` weighted by the product of coefficients.
pub fn graft(x: &VertexSet, children: &[LinearConstruct]) -> Result<LinearConstruct> {
    if x.is_empty() {
        return Err(Error::InvalidConstruct("empty root in graft".into()));
    }
    let mut carrier = x.clone();
    for ch in children {
        if !carrier.is_disjoint(&ch.carrier) {
            return Err(Error::Overlap(format!("{} meets {}", ch.carrier, carrier)));
        }
        carrier = carrier.union(&ch.carrier);
    }
    let mut partial: Vec<(Vec<Construct>, QPolynomial)> = vec![(Vec::new(), QPolynomial::one())];
    for ch in children {
        let mut next = Vec::with_capacity(partial.len() * ch.len());
        for (prefix, p) in &partial {
            for (c, a) in &ch.terms {
                let mut v = prefix.clone();
                v.push(c.clone());
                next.push((v, p * a));
            }
        }
        partial = next;
    }
    let mut out = LinearConstruct::zero(carrier);
    for (kids, p) in partial {
        let c = Construct::new(x.clone(), kids)?;
        out.add_term(c, p)?;
    }
    Ok(out)
}

/// Sum written as `c1 + q c2 + (1+q) c3`.
impl fmt::Display for LinearConstruct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, p)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if p.is_one_poly() {
                write!(f, "{c}")?;
            } else if p.coeffs.len() == 1 && p.coeffs.values().all(|v| !v.is_negative()) {
                write!(f, "{p} {c}")?;
            } else {
                write!(f, "({p}) {c}")?;
            }
        }
        Ok(())
    }
}

impl QPolynomial {
    fn is_one_poly(&self) -> bool {
        self.as_unit_monomial() == Some(0)
    }
}
