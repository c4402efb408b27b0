use std::fmt;

use crate::error::Result;

/// A group whose elements carry a decidable normal form.
///
/// Engines are stateless (or hold immutable shared data) so they can be
/// used from several threads at once.
pub trait GroupEngine: Send + Sync {
    type Element: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn identity(&self) -> Self::Element;

    fn multiply(&self, u: &Self::Element, v: &Self::Element) -> Result<Self::Element>;

    fn invert(&self, u: &Self::Element) -> Result<Self::Element>;

    fn is_identity(&self, u: &Self::Element) -> bool {
        *u == self.identity()
    }

    /// `u^n` by repeated squaring; negative exponents invert first.
    fn pow(&self, u: &Self::Element, n: i64) -> Result<Self::Element> {
        let base = if n < 0 { self.invert(u)? } else { u.clone() };
        let mut exp = n.unsigned_abs();
        let mut acc = self.identity();
        let mut square = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.multiply(&acc, &square)?;
            }
            exp >>= 1;
            if exp > 0 {
                square = self.multiply(&square, &square)?;
            }
        }
        Ok(acc)
    }

    fn commutes(&self, u: &Self::Element, v: &Self::Element) -> Result<bool> {
        Ok(self.multiply(u, v)? == self.multiply(v, u)?)
    }

    /// `u v u^-1`.
    fn conjugate(&self, u: &Self::Element, v: &Self::Element) -> Result<Self::Element> {
        let uv = self.multiply(u, v)?;
        self.multiply(&uv, &self.invert(u)?)
    }

    /// Left-to-right product of a sequence, identity when empty.
    fn product<'a, I>(&self, factors: I) -> Result<Self::Element>
    where
        I: IntoIterator<Item = &'a Self::Element>,
        Self::Element: 'a,
    {
        factors
            .into_iter()
            .try_fold(self.identity(), |acc, f| self.multiply(&acc, f))
    }
}
