//! Verma modules: closed-form action on the rank-one Verma and a recursive
//! engine that applies the commutation relations directly, for any top.
//!
//! Basis vectors are `z(i,j) = y^i x^j ⊗ p` with `p` running over a basis of
//! the top (a module over `⟨g^{±1}, ξ⟩` with `u`, `v` acting by zero).

use crate::algebra::Generator::{self, GInv, Xi, G, U, V, X, Y};
use crate::linalg::rational::{binomial, factorial, frac, int, pow2};
use crate::linalg::{Matrix, Rational};
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};

/// Basis index `(i, j, p)` of `y^i x^j ⊗ p`.
pub type VermaIndex = (usize, usize, usize);
pub type VermaVector = BTreeMap<VermaIndex, Rational>;

fn add(v: &mut VermaVector, k: VermaIndex, c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = v.entry(k).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        v.remove(&k);
    }
}

fn add_scaled(v: &mut VermaVector, w: &VermaVector, c: &Rational) {
    for (k, a) in w {
        add(v, *k, a * c);
    }
}

fn shift_y(w: &VermaVector) -> VermaVector {
    w.iter().map(|(&(i, j, p), c)| ((i + 1, j, p), c.clone())).collect()
}

fn single(k: VermaIndex) -> VermaVector {
    let mut v = VermaVector::new();
    v.insert(k, int(1));
    v
}

/// Computes the action on the infinite Verma module by peeling off the
/// leftmost `y` (or `x`) and commuting the generator past it.
pub struct VermaEngine {
    top_g: Matrix,
    top_xi: Matrix,
    memo: HashMap<(Generator, VermaIndex), VermaVector>,
}

impl VermaEngine {
    /// `top_g`, `top_xi`: commuting matrices of `g` and `ξ` on the top.
    pub fn new(top_g: Matrix, top_xi: Matrix) -> Self {
        assert!(top_g.is_square() && top_xi.rows() == top_g.rows());
        VermaEngine { top_g, top_xi, memo: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.top_g.rows()
    }

    pub fn act_vec(&mut self, t: Generator, w: &VermaVector) -> VermaVector {
        let mut out = VermaVector::new();
        for (k, c) in w {
            let img = self.act(t, *k);
            add_scaled(&mut out, &img, c);
        }
        out
    }

    pub fn act(&mut self, t: Generator, k: VermaIndex) -> VermaVector {
        if let Some(v) = self.memo.get(&(t, k)) {
            return v.clone();
        }
        let v = self.compute(t, k);
        self.memo.insert((t, k), v.clone());
        v
    }

    fn compute(&mut self, t: Generator, (i, j, p): VermaIndex) -> VermaVector {
        let half = frac(1, 2);
        if t == Y {
            return single((i + 1, j, p));
        }
        if t == GInv {
            panic!("g⁻¹ is obtained by matrix inversion");
        }
        if i > 0 {
            let w = (i - 1, j, p);
            let tw = self.act(t, w);
            let mut out = shift_y(&tw);
            match t {
                // x y = y x + ½ x x
                X => add_scaled(&mut out, &self.act_vec(X, &tw), &half),
                // g y = y g + x g
                G => add_scaled(&mut out, &self.act_vec(X, &tw), &int(1)),
                // ξ y = y ξ − 2y
                Xi => add(&mut out, (i, j, p), int(-2)),
                // u y = y u + 1 − g
                U => {
                    add(&mut out, w, int(1));
                    add_scaled(&mut out, &self.act(G, w), &int(-1));
                }
                // v y = y v + ½ g ξ + y u
                V => {
                    let xi_w = self.act(Xi, w);
                    add_scaled(&mut out, &self.act_vec(G, &xi_w), &half);
                    add_scaled(&mut out, &shift_y(&self.act(U, w)), &int(1));
                }
                Y | GInv => unreachable!(),
            }
            return out;
        }
        if t == X {
            return single((0, j + 1, p));
        }
        if j > 0 {
            let w = (0, j - 1, p);
            let tw = self.act(t, w);
            let mut out = self.act_vec(X, &tw);
            match t {
                // g x = x g, u x = x u
                G | U => {}
                // ξ x = x ξ − 2x
                Xi => add(&mut out, (0, j, p), int(-2)),
                // v x = x v + 1 − g + x u
                V => {
                    add(&mut out, w, int(1));
                    add_scaled(&mut out, &self.act(G, w), &int(-1));
                    let uw = self.act(U, w);
                    add_scaled(&mut out, &self.act_vec(X, &uw), &int(1));
                }
                X | Y | GInv => unreachable!(),
            }
            return out;
        }
        let mut out = VermaVector::new();
        let top = match t {
            G => &self.top_g,
            Xi => &self.top_xi,
            _ => return out,
        };
        for q in 0..top.rows() {
            add(&mut out, (0, 0, q), top[(q, p)].clone());
        }
        out
    }
}

/// Closed-form action of a generator on `z(i,j)` in the rank-one Verma
/// module of highest weight `p`.
pub fn closed_form(t: Generator, p: i64, i: usize, j: usize) -> Vec<((usize, usize), Rational)> {
    let (iu, ju) = (i as u64, j as u64);
    let mut out = Vec::new();
    let mut push = |a: usize, b: usize, c: Rational| {
        if !c.is_zero() {
            out.push(((a, b), c));
        }
    };
    match t {
        X => {
            for k in 0..=i {
                let c = binomial(iu, k as u64) * factorial(k as u64) / pow2(k as u32);
                push(i - k, j + k + 1, c);
            }
        }
        Y => push(i + 1, j, int(1)),
        G => {
            for k in 0..=i {
                let c = binomial(iu, k as u64) * factorial(k as u64 + 1) / pow2(k as u32);
                push(i - k, j + k, c);
            }
        }
        GInv => panic!("g⁻¹ is obtained by matrix inversion"),
        Xi => push(i, j, int(p - 2 * (i + j) as i64)),
        U => {
            for k in 1..i {
                let c = -binomial(iu, k as u64 + 1) * factorial(k as u64 + 1) / pow2(k as u32);
                push(i - 1 - k, j + k, c);
            }
        }
        V => {
            if i > 0 {
                let c = int(iu as i64 * (p - 2 * ju as i64 - iu as i64 + 1)) / int(2);
                push(i - 1, j, c);
            }
            let w = int(p - 2 * (i + j) as i64 + 2);
            for k in 1..i {
                let c = binomial(iu, k as u64 + 1) * factorial(k as u64 + 1) / pow2(k as u32 + 1)
                    * &w;
                push(i - 1 - k, j + k, c);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine(p: i64) -> VermaEngine {
        VermaEngine::new(Matrix::identity(1), Matrix::scalar(1, &int(p)))
    }

    #[test]
    fn recursion_matches_closed_form() {
        for p in [0, 1, 3, -2] {
            let mut e = engine(p);
            for level in 0..=4usize {
                for j in 0..=level {
                    let i = level - j;
                    for t in [X, Y, G, Xi, U, V] {
                        let rec = e.act(t, (i, j, 0));
                        let closed: VermaVector = closed_form(t, p, i, j)
                            .into_iter()
                            .map(|((a, b), c)| ((a, b, 0), c))
                            .collect();
                        assert_eq!(rec, closed, "{t} on z({i},{j}), p={p}");
                    }
                }
            }
        }
    }

    #[test]
    fn small_values() {
        assert!(closed_form(U, 5, 1, 0).is_empty());
        assert_eq!(closed_form(V, 5, 1, 0), vec![((0, 0), frac(5, 2))]);
        assert_eq!(closed_form(G, 5, 1, 0), vec![((1, 0), int(1)), ((0, 1), int(1))]);
    }
}
