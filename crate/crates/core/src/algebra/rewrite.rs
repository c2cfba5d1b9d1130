//! Normal-form rewriting toward the PBW order `x < y < g^{±1} < ξ < u < v`.
//!
//! The basic step multiplies a normal monomial `M` on the right by a single
//! generator `t`. If `t` does not precede the last letter `s` of `M` it is
//! appended; otherwise `M = P·s` and `s·t` is replaced by its oriented
//! relation `t·s + (lower terms)`, each word of which is pushed onto `P`
//! recursively.
//!
//! Termination: order words by the triple (number of letters among
//! x, y, u, v; number of letters among y, v; number of inversions). Every rule
//! `s·t → t·s + Σ c·w` keeps the first two entries and removes one inversion
//! in the leading word, and each correction word `w` has strictly fewer
//! x/y/u/v letters (`1`, `g`, `gξ`), or the same number with fewer y/v letters
//! (`xg`, `xu`, `yu`, `gu`, `u²`, `x²`), or is the reordered word with one
//! letter deleted (`−2x`, `−2y`, `−2u`, `−2v`). `g·g⁻¹` cancels in the
//! exponent. The measure is well founded, so the recursion stops.

use super::element::AlgebraElement;
use super::monomial::{Generator, PbwMonomial};
use crate::linalg::rational::{frac, int, Rational};
use num_traits::One;
use std::cell::RefCell;
use std::collections::HashMap;

use Generator::{GInv, Xi, G, U, V, X, Y};

/// `s·t` for `slot(s) > slot(t)`, as a combination of words.
fn swap_rule(s: Generator, t: Generator) -> Vec<(Rational, Vec<Generator>)> {
    let one = || int(1);
    match (s, t) {
        // yx = xy − ½x²
        (Y, X) => vec![(one(), vec![X, Y]), (frac(-1, 2), vec![X, X])],
        // gx = xg
        (G, X) => vec![(one(), vec![X, G])],
        (GInv, X) => vec![(one(), vec![X, GInv])],
        // gy = yg + xg, hence g⁻¹y = yg⁻¹ − xg⁻¹
        (G, Y) => vec![(one(), vec![Y, G]), (one(), vec![X, G])],
        (GInv, Y) => vec![(one(), vec![Y, GInv]), (int(-1), vec![X, GInv])],
        // ξx = xξ − 2x, ξy = yξ − 2y, ξg = gξ
        (Xi, X) => vec![(one(), vec![X, Xi]), (int(-2), vec![X])],
        (Xi, Y) => vec![(one(), vec![Y, Xi]), (int(-2), vec![Y])],
        (Xi, G) => vec![(one(), vec![G, Xi])],
        (Xi, GInv) => vec![(one(), vec![GInv, Xi])],
        // ux = xu, uy = yu + 1 − g, ug = gu, uξ = ξu − 2u
        (U, X) => vec![(one(), vec![X, U])],
        (U, Y) => vec![(one(), vec![Y, U]), (one(), vec![]), (int(-1), vec![G])],
        (U, G) => vec![(one(), vec![G, U])],
        (U, GInv) => vec![(one(), vec![GInv, U])],
        (U, Xi) => vec![(one(), vec![Xi, U]), (int(-2), vec![U])],
        // vx = xv + 1 − g + xu
        (V, X) => vec![
            (one(), vec![X, V]),
            (one(), vec![]),
            (int(-1), vec![G]),
            (one(), vec![X, U]),
        ],
        // vy = yv + ½gξ + yu
        (V, Y) => vec![(one(), vec![Y, V]), (frac(1, 2), vec![G, Xi]), (one(), vec![Y, U])],
        // vg = gv + gu, hence vg⁻¹ = g⁻¹v − g⁻¹u
        (V, G) => vec![(one(), vec![G, V]), (one(), vec![G, U])],
        (V, GInv) => vec![(one(), vec![GInv, V]), (int(-1), vec![GInv, U])],
        // vξ = ξv − 2v, vu = uv − ½u²
        (V, Xi) => vec![(one(), vec![Xi, V]), (int(-2), vec![V])],
        (V, U) => vec![(one(), vec![U, V]), (frac(-1, 2), vec![U, U])],
        _ => unreachable!("no rule for {s}{t}: not an inversion"),
    }
}

const CACHE_LIMIT: usize = 1 << 18;

thread_local! {
    static RMUL_CACHE: RefCell<HashMap<(PbwMonomial, Generator), AlgebraElement>> =
        RefCell::new(HashMap::new());
}

/// Normal form of `m·t`.
pub(crate) fn mul_generator(m: &PbwMonomial, t: Generator) -> AlgebraElement {
    let Some(last) = m.last_letter() else {
        return AlgebraElement::generator(t);
    };
    if last.slot() <= t.slot() {
        return AlgebraElement::monomial(m.append(t));
    }
    if let Some(hit) = RMUL_CACHE.with(|c| c.borrow().get(&(*m, t)).cloned()) {
        return hit;
    }
    let prefix = m.strip(last);
    let mut out = AlgebraElement::zero();
    for (c, word) in swap_rule(last, t) {
        let mut acc = AlgebraElement::monomial(prefix);
        for &letter in &word {
            acc = mul_element_generator(&acc, letter);
        }
        out.add_scaled(&acc, &c);
    }
    RMUL_CACHE.with(|c| {
        let mut cache = c.borrow_mut();
        if cache.len() >= CACHE_LIMIT {
            cache.clear();
        }
        cache.insert((*m, t), out.clone());
    });
    out
}

fn mul_element_generator(e: &AlgebraElement, t: Generator) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (m, c) in e.terms() {
        out.add_scaled(&mul_generator(m, t), c);
    }
    out
}

/// Normal form of an arbitrary word (which may contain `g⁻¹`).
pub fn normal_form(word: &[Generator]) -> AlgebraElement {
    let mut acc = AlgebraElement::one();
    for &t in word {
        acc = mul_element_generator(&acc, t);
    }
    acc
}

/// Same as [`normal_form`] but multiplying letters onto the left, i.e. the
/// word is consumed right to left. Used as a second reduction strategy when
/// checking confluence empirically.
pub fn normal_form_right_to_left(word: &[Generator]) -> AlgebraElement {
    let mut acc = AlgebraElement::one();
    for &t in word.iter().rev() {
        acc = multiply(&AlgebraElement::generator(t), &acc);
    }
    acc
}

pub fn multiply_monomials(a: &PbwMonomial, b: &PbwMonomial) -> AlgebraElement {
    let mut acc = AlgebraElement::monomial(*a);
    for t in b.word() {
        acc = mul_element_generator(&acc, t);
    }
    acc
}

/// PBW normal form of `a·b`.
pub fn multiply(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (mb, cb) in b.terms() {
        let word = mb.word();
        let mut acc = a.clone();
        for &t in &word {
            acc = mul_element_generator(&acc, t);
        }
        out.add_scaled(&acc, cb);
    }
    out
}

/// `a^k` for `k ≥ 0`.
pub fn power(a: &AlgebraElement, k: u32) -> AlgebraElement {
    let mut acc = AlgebraElement::scalar(Rational::one());
    for _ in 0..k {
        acc = multiply(&acc, a);
    }
    acc
}
