use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{AddAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Finite integer linear combination of basis elements `B`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChainElement<B: Ord> {
    terms: BTreeMap<B, BigInt>,
}

impl<B: Ord> Default for ChainElement<B> {
    fn default() -> Self {
        ChainElement { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> ChainElement<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, BigInt::one())
    }

    pub fn term(b: B, c: impl Into<BigInt>) -> Self {
        let mut x = Self::zero();
        x.add_term(b, c.into());
        x
    }

    pub fn from_terms<I: IntoIterator<Item = (B, BigInt)>>(terms: I) -> Self {
        let mut x = Self::zero();
        for (b, c) in terms {
            x.add_term(b, c);
        }
        x
    }

    pub fn add_term(&mut self, b: B, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `±b` according to `negative`.
    pub fn add_signed(&mut self, b: B, negative: bool, c: &BigInt) {
        self.add_term(b, if negative { -c } else { c.clone() });
    }

    pub fn coeff(&self, b: &B) -> BigInt {
        self.terms.get(b).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &BigInt)> {
        self.terms.iter()
    }

    pub fn basis_elements(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ChainElement { terms: self.terms.iter().map(|(b, x)| (b.clone(), x * c)).collect() }
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<C: Ord + Clone, F: FnMut(&B) -> ChainElement<C>>(&self, mut f: F) -> ChainElement<C> {
        let mut out = ChainElement::zero();
        for (b, c) in &self.terms {
            for (b2, c2) in f(b).terms {
                out.add_term(b2, c2 * c);
            }
        }
        out
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter<F: Fn(&B) -> bool>(&self, keep: F) -> Self {
        ChainElement {
            terms: self.terms.iter().filter(|(b, _)| keep(b)).map(|(b, c)| (b.clone(), c.clone())).collect(),
        }
    }

    pub fn as_map(&self) -> &BTreeMap<B, BigInt> {
        &self.terms
    }

    pub fn into_map(self) -> BTreeMap<B, BigInt> {
        self.terms
    }
}

impl<B: Ord + Clone> From<BTreeMap<B, BigInt>> for ChainElement<B> {
    fn from(map: BTreeMap<B, BigInt>) -> Self {
        Self::from_terms(map)
    }
}

impl<B: Ord + Clone> AddAssign<&ChainElement<B>> for ChainElement<B> {
    fn add_assign(&mut self, rhs: &ChainElement<B>) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), c.clone());
        }
    }
}

impl<B: Ord + Clone> SubAssign<&ChainElement<B>> for ChainElement<B> {
    fn sub_assign(&mut self, rhs: &ChainElement<B>) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), -c);
        }
    }
}

impl<B: Ord + Clone> Neg for ChainElement<B> {
    type Output = Self;

    fn neg(self) -> Self {
        ChainElement { terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect() }
    }
}

impl<B: Ord + Clone> std::ops::Add for &ChainElement<B> {
    type Output = ChainElement<B>;

    fn add(self, rhs: Self) -> ChainElement<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Ord + Clone> std::ops::Sub for &ChainElement<B> {
    type Output = ChainElement<B>;

    fn sub(self, rhs: Self) -> ChainElement<B> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<B: Ord + fmt::Display> fmt::Display for ChainElement<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = if c < &BigInt::zero() { (true, -c) } else { (false, c.clone()) };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{abs}*{b}")?;
            }
        }
        Ok(())
    }
}

impl<B: Ord + fmt::Display> fmt::Debug for ChainElement<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
