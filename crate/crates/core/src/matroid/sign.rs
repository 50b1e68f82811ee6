use std::fmt;
use std::ops::Neg;

use crate::error::{Error, Result};

/// A value in `{−, 0, +}`, ordered `− < 0 < +`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of<T: num_traits::Signed>(x: &T) -> Sign {
        if x.is_positive() {
            Sign::Plus
        } else if x.is_negative() {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn to_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }

    pub fn from_char(c: char) -> Result<Sign> {
        match c {
            '-' | '−' => Ok(Sign::Minus),
            '0' => Ok(Sign::Zero),
            '+' => Ok(Sign::Plus),
            _ => Err(Error::Parse(format!("bad sign character {c:?}"))),
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }
}

/// A map from the (ordered) ground set to signs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(pub Vec<Sign>);

impl SignVector {
    pub fn zero(len: usize) -> Self {
        SignVector(vec![Sign::Zero; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Sign {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|s| s.is_zero())
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(i, _)| i)
    }

    /// `(c∘d)(v) = c(v)` if `c(v) ≠ 0`, else `d(v)`.
    pub fn compose(&self, d: &SignVector) -> Result<SignVector> {
        if self.len() != d.len() {
            return Err(Error::GroundSetMismatch);
        }
        Ok(SignVector(
            self.0.iter().zip(&d.0).map(|(&a, &b)| if a.is_zero() { b } else { a }).collect(),
        ))
    }

    /// `true` when `self` arises from `c` by setting some nonzero entries to zero.
    pub fn is_zeroing_of(&self, c: &SignVector) -> bool {
        self.0.iter().zip(&c.0).all(|(&d, &c)| d.is_zero() || d == c)
    }

    pub fn parse(s: &str) -> Result<SignVector> {
        s.chars().map(Sign::from_char).collect::<Result<Vec<_>>>().map(SignVector)
    }
}

impl Neg for &SignVector {
    type Output = SignVector;
    fn neg(self) -> SignVector {
        SignVector(self.0.iter().map(|&s| -s).collect())
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sv(s: &str) -> SignVector {
        SignVector::parse(s).unwrap()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(sv("+0-").compose(&sv("0++")).unwrap(), sv("++-"));
        assert_eq!(sv("+-0").compose(&sv("000")).unwrap(), sv("+-0"));
        assert_eq!(sv("000").compose(&sv("-+0")).unwrap(), sv("-+0"));
        assert_eq!(sv("+").compose(&sv("++")), Err(Error::GroundSetMismatch));
    }

    #[test]
    fn negation_is_involution() {
        for s in [Sign::Minus, Sign::Zero, Sign::Plus] {
            assert_eq!(-(-s), s);
        }
        assert_eq!(-Sign::Zero, Sign::Zero);
        assert_eq!(-&sv("+0-"), sv("-0+"));
    }

    fn sign() -> impl Strategy<Value = Sign> {
        prop_oneof![Just(Sign::Minus), Just(Sign::Zero), Just(Sign::Plus)]
    }

    proptest! {
        #[test]
        fn compose_is_associative(
            a in proptest::collection::vec(sign(), 5),
            b in proptest::collection::vec(sign(), 5),
            c in proptest::collection::vec(sign(), 5),
        ) {
            let (a, b, c) = (SignVector(a), SignVector(b), SignVector(c));
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
