use super::monomial::{Generator, PbwMonomial};
use crate::linalg::rational::{self, Rational};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Finite rational combination of PBW monomials. Zero coefficients are never
/// stored, so structural equality is equality in the algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<PbwMonomial, Rational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn one() -> Self {
        AlgebraElement::monomial(PbwMonomial::ONE)
    }

    pub fn scalar(c: Rational) -> Self {
        AlgebraElement::term(PbwMonomial::ONE, c)
    }

    pub fn monomial(m: PbwMonomial) -> Self {
        AlgebraElement::term(m, Rational::one())
    }

    pub fn term(m: PbwMonomial, c: Rational) -> Self {
        let mut e = AlgebraElement::zero();
        e.add_term(m, c);
        e
    }

    pub fn generator(t: Generator) -> Self {
        AlgebraElement::monomial(PbwMonomial::generator(t))
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

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &AlgebraElement, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, k) in &other.terms {
            self.add_term(*m, k * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        out.add_scaled(self, c);
        out
    }

    /// Every term has the same grade; returns it (0 for the zero element).
    pub fn homogeneous_grade(&self) -> Option<i64> {
        let mut grades = self.terms.keys().map(PbwMonomial::grade);
        let first = grades.next().unwrap_or(0);
        grades.all(|g| g == first).then_some(first)
    }
}

impl std::ops::Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl std::ops::Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl std::ops::Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&-Rational::one())
    }
}

impl std::ops::Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        super::rewrite::multiply(self, rhs)
    }
}

/// Canonical text: terms in descending exponent-tuple order, e.g.
/// `1/2*x^2 + x*y`.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            if m.is_one() {
                f.write_str(&rational::to_text(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", rational::to_text(&mag))?;
            }
        }
        Ok(())
    }
}

/// Element of `D ⊗ D`; each leg is a PBW monomial.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElement {
    terms: BTreeMap<(PbwMonomial, PbwMonomial), Rational>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub fn one() -> Self {
        let mut t = TensorElement::zero();
        t.add_term(PbwMonomial::ONE, PbwMonomial::ONE, Rational::one());
        t
    }

    pub fn pure(a: &AlgebraElement, b: &AlgebraElement) -> Self {
        let mut t = TensorElement::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                t.add_term(*ma, *mb, ca * cb);
            }
        }
        t
    }

    pub fn add_term(&mut self, a: PbwMonomial, b: PbwMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, c: &Rational) {
        for ((a, b), k) in &other.terms {
            self.add_term(*a, *b, k * c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(PbwMonomial, PbwMonomial), &Rational)> {
        self.terms.iter()
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

    /// Leg-wise product `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn multiply(&self, rhs: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &rhs.terms {
                let left = super::rewrite::multiply_monomials(a, c);
                let right = super::rewrite::multiply_monomials(b, d);
                let k = c1 * c2;
                for (ml, kl) in left.terms() {
                    for (mr, kr) in right.terms() {
                        out.add_term(*ml, *mr, &k * kl * kr);
                    }
                }
            }
        }
        out
    }

    /// Applies linear maps to each leg and multiplies the results in `D`.
    pub fn contract(
        &self,
        left: impl Fn(&PbwMonomial) -> AlgebraElement,
        right: impl Fn(&PbwMonomial) -> AlgebraElement,
    ) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for ((a, b), c) in &self.terms {
            let prod = super::rewrite::multiply(&left(a), &right(b));
            out.add_scaled(&prod, c);
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, ((a, b), c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{}*", rational::to_text(&mag))?;
            }
            write!(f, "{a} ⊗ {b}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{frac, int};

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut e = AlgebraElement::generator(Generator::X);
        e.add_term(PbwMonomial::generator(Generator::X), int(-1));
        assert!(e.is_zero());
        assert_eq!(e.to_string(), "0");
    }

    #[test]
    fn canonical_text() {
        let mut e = AlgebraElement::zero();
        e.add_term(PbwMonomial::new(1, 1, 0, 0, 0, 0), int(1));
        e.add_term(PbwMonomial::new(2, 0, 0, 0, 0, 0), frac(1, 2));
        assert_eq!(e.to_string(), "1/2*x^2 + x*y");
        let mut f = AlgebraElement::scalar(frac(-1, 3));
        f.add_term(PbwMonomial::generator(Generator::GInv), int(-2));
        assert_eq!(f.to_string(), "-1/3 - 2*gi");
    }
}
