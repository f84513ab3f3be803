use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::{Multidegree, Scalar, Shape};
use crate::{Error, Result};

/// Finitely supported exact linear combination of canonical basis shapes.
///
/// Zero coefficients are never stored, so two combinations are equal exactly
/// when they denote the same vector. The same type represents dual
/// functionals: the term `c·s` then stands for `c·s*`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearCombo<B: Ord> {
    terms: BTreeMap<B, Scalar>,
}

/// Combination over ordered pairs; the first slot is the left tensor factor.
pub type TensorCombo<B> = LinearCombo<(B, B)>;

impl<B: Ord> Default for LinearCombo<B> {
    fn default() -> Self {
        LinearCombo { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> LinearCombo<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(shape: B) -> Self {
        Self::term(Scalar::one(), shape)
    }

    pub fn term(coeff: Scalar, shape: B) -> Self {
        let mut c = Self::zero();
        c.add_term(shape, coeff);
        c
    }

    pub fn add_term(&mut self, shape: B, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(shape) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for (shape, c) in &other.terms {
            self.add_term(shape.clone(), c * factor);
        }
    }

    pub fn coefficient_of(&self, shape: &B) -> Scalar {
        self.terms.get(shape).cloned().unwrap_or_else(Scalar::zero)
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

    /// Terms in canonical shape order.
    pub fn iter(&self) -> btree_map::Iter<'_, B, Scalar> {
        self.terms.iter()
    }

    pub fn shapes(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        LinearCombo {
            terms: self.terms.iter().map(|(s, c)| (s.clone(), c * factor)).collect(),
        }
    }

    /// Linear extension of a map defined on basis shapes.
    pub fn map_linear<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> LinearCombo<C>) -> LinearCombo<C> {
        let mut out = LinearCombo::zero();
        for (shape, c) in &self.terms {
            out.add_scaled(&f(shape), c);
        }
        out
    }

    /// Linear extension of a map sending basis shapes to basis shapes.
    pub fn map_basis<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> C) -> LinearCombo<C> {
        let mut out = LinearCombo::zero();
        for (shape, c) in &self.terms {
            out.add_term(f(shape), c.clone());
        }
        out
    }

    /// Bilinear extension of a product defined on basis shapes.
    pub fn bilinear<C: Ord + Clone, D: Ord + Clone>(
        &self,
        other: &LinearCombo<C>,
        mut f: impl FnMut(&B, &C) -> LinearCombo<D>,
    ) -> LinearCombo<D> {
        let mut out = LinearCombo::zero();
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                out.add_scaled(&f(x, y), &(cx * cy));
            }
        }
        out
    }

    /// Σ coeff(self, s)·coeff(other, s): evaluation of a dual on a primal combination.
    pub fn dot(&self, other: &Self) -> Scalar {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Scalar::zero();
        for (s, c) in &small.terms {
            if let Some(d) = large.terms.get(s) {
                acc += c * d;
            }
        }
        acc
    }
}

impl<B: Shape> LinearCombo<B> {
    /// The common multidegree of all terms.
    pub fn multidegree_of(&self) -> Result<Multidegree<B::Label>> {
        let mut iter = self.terms.keys();
        let first = iter.next().ok_or(Error::ZeroCombo)?.multidegree();
        for s in iter {
            let d = s.multidegree();
            if d != first {
                return Err(Error::Inhomogeneous(first.to_string(), d.to_string()));
            }
        }
        Ok(first)
    }

    /// Homogeneous components, keyed by multidegree.
    pub fn split_by_multidegree(&self) -> BTreeMap<Multidegree<B::Label>, Self> {
        let mut parts: BTreeMap<_, Self> = BTreeMap::new();
        for (s, c) in &self.terms {
            parts.entry(s.multidegree()).or_default().add_term(s.clone(), c.clone());
        }
        parts
    }
}

/// The twist τ(a⊗b) = b⊗a.
pub fn swap_tensor<B: Ord + Clone>(t: &TensorCombo<B>) -> TensorCombo<B> {
    t.map_basis(|(a, b)| (b.clone(), a.clone()))
}

impl<B: Ord + Clone> FromIterator<(B, Scalar)> for LinearCombo<B> {
    fn from_iter<I: IntoIterator<Item = (B, Scalar)>>(iter: I) -> Self {
        let mut c = Self::zero();
        for (s, k) in iter {
            c.add_term(s, k);
        }
        c
    }
}

impl<B: Ord + Clone> AddAssign<&LinearCombo<B>> for LinearCombo<B> {
    fn add_assign(&mut self, rhs: &LinearCombo<B>) {
        for (s, c) in &rhs.terms {
            self.add_term(s.clone(), c.clone());
        }
    }
}

impl<B: Ord + Clone> SubAssign<&LinearCombo<B>> for LinearCombo<B> {
    fn sub_assign(&mut self, rhs: &LinearCombo<B>) {
        for (s, c) in &rhs.terms {
            self.add_term(s.clone(), -c.clone());
        }
    }
}

impl<B: Ord + Clone> Add for &LinearCombo<B> {
    type Output = LinearCombo<B>;

    fn add(self, rhs: &LinearCombo<B>) -> LinearCombo<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Ord + Clone> Add for LinearCombo<B> {
    type Output = LinearCombo<B>;

    fn add(mut self, rhs: LinearCombo<B>) -> LinearCombo<B> {
        self += &rhs;
        self
    }
}

impl<B: Ord + Clone> Sub for &LinearCombo<B> {
    type Output = LinearCombo<B>;

    fn sub(self, rhs: &LinearCombo<B>) -> LinearCombo<B> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<B: Ord + Clone> Sub for LinearCombo<B> {
    type Output = LinearCombo<B>;

    fn sub(mut self, rhs: LinearCombo<B>) -> LinearCombo<B> {
        self -= &rhs;
        self
    }
}

impl<B: Ord + Clone> Neg for &LinearCombo<B> {
    type Output = LinearCombo<B>;

    fn neg(self) -> LinearCombo<B> {
        LinearCombo {
            terms: self.terms.iter().map(|(s, c)| (s.clone(), -c.clone())).collect(),
        }
    }
}

impl<B: Ord + Clone> Neg for LinearCombo<B> {
    type Output = LinearCombo<B>;

    fn neg(self) -> LinearCombo<B> {
        -&self
    }
}

impl<B: Ord + Clone> Mul<&Scalar> for &LinearCombo<B> {
    type Output = LinearCombo<B>;

    fn mul(self, rhs: &Scalar) -> LinearCombo<B> {
        self.scale(rhs)
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Scalar, first: bool) -> fmt::Result {
    let sign = if c.is_negative() { "-" } else { "+" };
    match (first, c.is_negative()) {
        (true, false) => {}
        (true, true) => f.write_str("-")?,
        (false, _) => write!(f, " {sign} ")?,
    }
    let abs = c.abs();
    if !abs.is_one() {
        write!(f, "{abs}*")?;
    }
    Ok(())
}

/// `2*ab - ba + 1/2*abc`; unit coefficients are omitted and the zero
/// combination prints as `0`. Shapes whose text contains `+`, `-` or spaces
/// are parenthesized so the output parses back.
impl<B: Ord + fmt::Display> fmt::Display for LinearCombo<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            write_coeff(f, c, i == 0)?;
            let text = s.to_string();
            if needs_parens(&text) {
                write!(f, "({text})")?;
            } else {
                f.write_str(&text)?;
            }
        }
        Ok(())
    }
}

fn needs_parens(text: &str) -> bool {
    text.contains(['+', '-', ' ', ';', '=', '*', '/'])
}

impl<B: Ord + fmt::Debug> fmt::Debug for LinearCombo<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(s, c)| (s, c.to_string())))
            .finish()
    }
}
