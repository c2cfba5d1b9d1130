//! Coproduct, counit and antipode, plus an axiom checker over random samples.

use super::element::{AlgebraElement, TensorElement};
use super::monomial::Generator::{self, GInv, Xi, G, U, V, X, Y};
use super::monomial::PbwMonomial;
use super::relations::RelationTable;
use super::rewrite::multiply;
use crate::linalg::rational::{frac, int};
use crate::linalg::Rational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;

fn mono(t: Generator) -> PbwMonomial {
    PbwMonomial::generator(t)
}

/// `Δ(t)` for a single generator.
pub fn coproduct_generator(t: Generator) -> TensorElement {
    let one = PbwMonomial::ONE;
    let mut d = TensorElement::zero();
    match t {
        G | GInv => d.add_term(mono(t), mono(t), int(1)),
        // x, y are (g,1)-skew primitive
        X | Y => {
            d.add_term(mono(t), one, int(1));
            d.add_term(mono(G), mono(t), int(1));
        }
        Xi | U => {
            d.add_term(mono(t), one, int(1));
            d.add_term(one, mono(t), int(1));
        }
        V => {
            d.add_term(mono(V), one, int(1));
            d.add_term(one, mono(V), int(1));
            d.add_term(mono(Xi), mono(U), frac(-1, 2));
        }
    }
    d
}

pub fn coproduct_monomial(m: &PbwMonomial) -> TensorElement {
    let mut acc = TensorElement::one();
    for t in m.word() {
        acc = acc.multiply(&coproduct_generator(t));
    }
    acc
}

/// Algebra map `𝒟 → 𝒟 ⊗ 𝒟`.
pub fn coproduct(a: &AlgebraElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (m, c) in a.terms() {
        out.add_scaled(&coproduct_monomial(m), c);
    }
    out
}

/// `ε(g^m) = 1`, every other PBW monomial maps to 0.
pub fn counit_monomial(m: &PbwMonomial) -> Rational {
    if m.x + m.y + m.xi + m.u + m.v == 0 {
        Rational::one()
    } else {
        Rational::zero()
    }
}

pub fn counit(a: &AlgebraElement) -> Rational {
    a.terms().map(|(m, c)| c * counit_monomial(m)).sum()
}

pub fn antipode_generator(t: Generator) -> AlgebraElement {
    let gi = AlgebraElement::generator(GInv);
    match t {
        G => gi,
        GInv => AlgebraElement::generator(G),
        X | Y => -&multiply(&gi, &AlgebraElement::generator(t)),
        Xi | U => -&AlgebraElement::generator(t),
        V => {
            let mut s = -&AlgebraElement::generator(V);
            s.add_term(PbwMonomial::new(0, 0, 0, 1, 1, 0), frac(-1, 2));
            s
        }
    }
}

/// Image of a word under the antihomomorphism `S`.
pub fn antipode_word(word: &[Generator]) -> AlgebraElement {
    let mut acc = AlgebraElement::one();
    for &t in word.iter().rev() {
        acc = multiply(&acc, &antipode_generator(t));
    }
    acc
}

pub fn antipode_monomial(m: &PbwMonomial) -> AlgebraElement {
    antipode_word(&m.word())
}

pub fn antipode(a: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (m, c) in a.terms() {
        out.add_scaled(&antipode_monomial(m), c);
    }
    out
}

type Triple = BTreeMap<(PbwMonomial, PbwMonomial, PbwMonomial), Rational>;

fn add3(t: &mut Triple, key: (PbwMonomial, PbwMonomial, PbwMonomial), c: Rational) {
    let e = t.entry(key).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        t.remove(&key);
    }
}

/// `(Δ⊗id)Δ(a)` and `(id⊗Δ)Δ(a)`.
fn coassociativity_sides(a: &AlgebraElement) -> (Triple, Triple) {
    let d = coproduct(a);
    let (mut left, mut right) = (Triple::new(), Triple::new());
    for ((a1, a2), c) in d.terms() {
        for ((b1, b2), k) in coproduct_monomial(a1).terms() {
            add3(&mut left, (*b1, *b2, *a2), c * k);
        }
        for ((b1, b2), k) in coproduct_monomial(a2).terms() {
            add3(&mut right, (*a1, *b1, *b2), c * k);
        }
    }
    (left, right)
}

fn counit_sides(a: &AlgebraElement) -> (AlgebraElement, AlgebraElement) {
    let d = coproduct(a);
    let (mut l, mut r) = (AlgebraElement::zero(), AlgebraElement::zero());
    for ((a1, a2), c) in d.terms() {
        l.add_term(*a2, c * counit_monomial(a1));
        r.add_term(*a1, c * counit_monomial(a2));
    }
    (l, r)
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub input: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct HopfReport {
    pub checks: Vec<AxiomCheck>,
}

impl HopfReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    fn push(&mut self, axiom: &str, input: &dyn std::fmt::Display, pass: bool) {
        self.checks.push(AxiomCheck { axiom: axiom.into(), input: input.to_string(), pass });
    }
}

/// Random PBW monomial with at most `max_len` letters (`g^m` counts `|m|`).
pub fn random_monomial(rng: &mut impl Rng, max_len: u32) -> PbwMonomial {
    let len = rng.gen_range(0..=max_len);
    let mut m = PbwMonomial::ONE;
    for _ in 0..len {
        match rng.gen_range(0..6) {
            0 => m.x += 1,
            1 => m.y += 1,
            2 => {
                // keep the sign of the g-exponent consistent so |m| counts letters
                if m.g > 0 || (m.g == 0 && rng.gen_bool(0.5)) {
                    m.g += 1
                } else {
                    m.g -= 1
                }
            }
            3 => m.xi += 1,
            4 => m.u += 1,
            _ => m.v += 1,
        }
    }
    m
}

fn check_element(report: &mut HopfReport, a: &AlgebraElement, label: &dyn std::fmt::Display) {
    let (l, r) = coassociativity_sides(a);
    report.push("coassociativity", label, l == r);
    let (l, r) = counit_sides(a);
    report.push("counit", label, l == *a && r == *a);
    let d = coproduct(a);
    let eps = AlgebraElement::scalar(counit(a));
    let left = d.contract(antipode_monomial, |m| AlgebraElement::monomial(*m));
    report.push("antipode (S⊗id)", label, left == eps);
    let right = d.contract(|m| AlgebraElement::monomial(*m), antipode_monomial);
    report.push("antipode (id⊗S)", label, right == eps);
}

/// Runs the Hopf axioms on every generator and on `samples` random monomials
/// of length at most `max_len`, plus antihomomorphism checks on random pairs
/// and compatibility of `Δ`, `ε`, `S` with the defining relations.
pub fn hopf_axiom_suite(samples: usize, max_len: u32, seed: u64) -> HopfReport {
    let mut report = HopfReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in [X, Y, G, GInv, Xi, U, V] {
        check_element(&mut report, &AlgebraElement::generator(t), &t);
    }
    for _ in 0..samples {
        let m = random_monomial(&mut rng, max_len);
        check_element(&mut report, &AlgebraElement::monomial(m), &m);
    }
    for _ in 0..samples {
        let a = random_monomial(&mut rng, max_len.div_ceil(2));
        let b = random_monomial(&mut rng, max_len / 2);
        let ab = multiply(&AlgebraElement::monomial(a), &AlgebraElement::monomial(b));
        let lhs = antipode(&ab);
        let rhs = multiply(&antipode_monomial(&b), &antipode_monomial(&a));
        report.push("antihomomorphism", &format!("({a})·({b})"), lhs == rhs);
        let dab = coproduct(&ab);
        let prod = coproduct_monomial(&a).multiply(&coproduct_monomial(&b));
        report.push("Δ multiplicative", &format!("({a})·({b})"), dab == prod);
    }
    for r in RelationTable::standard().relations() {
        let mut d = TensorElement::zero();
        let mut s = AlgebraElement::zero();
        let mut e = Rational::zero();
        for (c, w) in &r.terms {
            let mut dw = TensorElement::one();
            let mut ew = Rational::one();
            for &t in w {
                dw = dw.multiply(&coproduct_generator(t));
                ew *= counit_monomial(&PbwMonomial::generator(t));
            }
            d.add_scaled(&dw, c);
            s.add_scaled(&antipode_word(w), c);
            e += c * ew;
        }
        report.push("Δ respects relation", &r.name, d.is_zero());
        report.push("S respects relation", &r.name, s.is_zero());
        report.push("ε respects relation", &r.name, e.is_zero());
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coproduct_of_v() {
        let d = coproduct(&AlgebraElement::generator(V));
        assert_eq!(d.to_string(), "-1/2*xi ⊗ u + v ⊗ 1 + 1 ⊗ v");
    }

    #[test]
    fn coproduct_of_x_squared() {
        let x2 = AlgebraElement::monomial(PbwMonomial::new(2, 0, 0, 0, 0, 0));
        let mut expect = TensorElement::zero();
        expect.add_term(PbwMonomial::new(2, 0, 0, 0, 0, 0), PbwMonomial::ONE, int(1));
        expect.add_term(PbwMonomial::new(1, 0, 1, 0, 0, 0), mono(X), int(2));
        expect.add_term(PbwMonomial::new(0, 0, 2, 0, 0, 0), PbwMonomial::new(2, 0, 0, 0, 0, 0), int(1));
        assert_eq!(coproduct(&x2), expect);
    }

    #[test]
    fn counit_values() {
        assert_eq!(counit(&AlgebraElement::monomial(PbwMonomial::new(0, 0, 3, 0, 0, 0))), int(1));
        assert_eq!(counit(&AlgebraElement::monomial(PbwMonomial::new(1, 0, 1, 0, 0, 0))), int(0));
        let mut e = AlgebraElement::one();
        e.add_term(mono(Xi), int(2));
        assert_eq!(counit(&e), int(1));
    }

    #[test]
    fn antipode_values() {
        assert_eq!(antipode(&AlgebraElement::generator(Y)).to_string(), "x*gi - y*gi");
        assert_eq!(antipode(&AlgebraElement::generator(V)).to_string(), "-1/2*xi*u - v");
        assert_eq!(antipode(&AlgebraElement::one()), AlgebraElement::one());
    }

    #[test]
    fn small_suite_passes() {
        let report = hopf_axiom_suite(20, 4, 7);
        let bad: Vec<_> = report.failures().collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
}
