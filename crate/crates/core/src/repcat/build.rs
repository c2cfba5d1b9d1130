//! Constructors for the module families.

use super::module::{FdModule, ModuleError, Provenance, Truncation};
use super::verma::{closed_form, VermaEngine};
use crate::algebra::Generator::{self, Xi, G, U, V, X, Y};
use crate::linalg::rational::{frac, int, to_text};
use crate::linalg::{Matrix, Rational};
use std::collections::HashMap;

fn zeros6(dim: usize) -> [Matrix; 6] {
    std::array::from_fn(|_| Matrix::zeros(dim, dim))
}

fn slot(t: Generator) -> usize {
    match t {
        X => 0,
        Y => 1,
        G => 2,
        Xi => 3,
        U => 4,
        V => 5,
        Generator::GInv => unreachable!(),
    }
}

/// The simple module `L(n)` with basis `z(0..=n)`.
pub fn build_simple(n: usize) -> FdModule {
    let dim = n + 1;
    let mut m = zeros6(dim);
    m[slot(G)] = Matrix::identity(dim);
    for i in 0..dim {
        m[slot(Xi)][(i, i)] = int(n as i64 - 2 * i as i64);
        if i + 1 < dim {
            m[slot(Y)][(i + 1, i)] = int(1);
        }
        if i > 0 {
            m[slot(V)][(i - 1, i)] = frac((i * (n - i + 1)) as i64, 2);
        }
    }
    let labels = (0..dim).map(|i| format!("z({i})")).collect();
    FdModule::new(labels, m, Provenance::leaf("L", &[("n", n.to_string())]))
}

/// Pulls an sl₂-representation back along the projection to `U(sl₂)`:
/// `v ↦ ½E`, `y ↦ F`, `ξ ↦ H`, `x, u ↦ 0`, `g ↦ 1`.
pub fn pullback_sl2(e: &Matrix, f: &Matrix, h: &Matrix) -> Result<FdModule, ModuleError> {
    let dim = e.rows();
    for m in [e, f, h] {
        if m.rows() != dim || m.cols() != dim {
            return Err(ModuleError::Contract("E, F, H must be square of equal size".into()));
        }
    }
    let comm = |a: &Matrix, b: &Matrix| &(a * b) - &(b * a);
    if comm(e, f) != *h || comm(h, e) != e.scale(&int(2)) || comm(h, f) != f.scale(&int(-2)) {
        return Err(ModuleError::Contract("sl2 relations [E,F]=H, [H,E]=2E, [H,F]=-2F fail".into()));
    }
    let mut m = zeros6(dim);
    m[slot(V)] = e.scale(&frac(1, 2));
    m[slot(Y)] = f.clone();
    m[slot(Xi)] = h.clone();
    m[slot(G)] = Matrix::identity(dim);
    let labels = (0..dim).map(|i| format!("e{i}")).collect();
    Ok(FdModule::new(labels, m, Provenance::leaf("sl2-pullback", &[])))
}

/// Assembles matrices from a closed-form action on a list of basis indices;
/// images outside the list are dropped.
fn assemble<K: Copy + Eq + std::hash::Hash>(
    basis: &[K],
    mut action: impl FnMut(Generator, K) -> Vec<(K, Rational)>,
) -> [Matrix; 6] {
    let pos: HashMap<K, usize> = basis.iter().enumerate().map(|(n, k)| (*k, n)).collect();
    let mut m = zeros6(basis.len());
    for t in Generator::MODULE_GENERATORS {
        for (col, k) in basis.iter().enumerate() {
            for (img, c) in action(t, *k) {
                if let Some(&row) = pos.get(&img) {
                    m[slot(t)][(row, col)] += c;
                }
            }
        }
    }
    m
}

/// Basis region of `T(n,m)`: `j ≤ m`, `i ≤ n + 2(m−j)`, ordered by level
/// `i+j` and then `j`.
pub fn t_basis(n: usize, m: usize) -> Vec<(usize, usize)> {
    let mut b: Vec<(usize, usize)> =
        (0..=m).flat_map(|j| (0..=n + 2 * (m - j)).map(move |i| (i, j))).collect();
    b.sort_by_key(|&(i, j)| (i + j, j));
    b
}

/// `T(n,m)`: the rank-one Verma module of highest weight `n+2m` modulo the
/// span of the basis vectors outside [`t_basis`].
pub fn build_t(n: usize, m: usize) -> FdModule {
    let p = (n + 2 * m) as i64;
    let basis = t_basis(n, m);
    let mats = assemble(&basis, |t, (i, j)| closed_form(t, p, i, j));
    let labels = basis.iter().map(|(i, j)| format!("z({i},{j})")).collect();
    FdModule::new(
        labels,
        mats,
        Provenance::leaf("T", &[("n", n.to_string()), ("m", m.to_string())]),
    )
}

/// The self-extension `S_γ(n)` with basis `s_0..s_n, w_0..w_n`.
pub fn build_s(n: usize, gamma: &Rational) -> FdModule {
    let d = n + 1;
    let mut mt = zeros6(2 * d);
    let (s, w) = (|i: usize| i, |i: usize| d + i);
    let ni = n as i64;
    for i in 0..d {
        let ii = i as i64;
        mt[slot(G)][(s(i), s(i))] = int(1);
        mt[slot(G)][(w(i), w(i))] = int(1);
        mt[slot(G)][(s(i), w(i))] = -frac(ni - 2 * ii, 2) * gamma;
        mt[slot(Xi)][(s(i), s(i))] = int(ni - 2 * ii);
        mt[slot(Xi)][(w(i), w(i))] = int(ni - 2 * ii);
        if i + 1 < d {
            mt[slot(X)][(s(i + 1), w(i))] = gamma.clone();
            mt[slot(Y)][(s(i + 1), s(i))] = int(1);
            mt[slot(Y)][(w(i + 1), w(i))] = int(1);
        }
        if i > 0 {
            let c = frac(ii * (ni - ii + 1), 2);
            mt[slot(U)][(s(i - 1), w(i))] = gamma * &c;
            mt[slot(V)][(s(i - 1), s(i))] = c.clone();
            mt[slot(V)][(w(i - 1), w(i))] = c;
            mt[slot(V)][(s(i - 1), w(i))] =
                -frac(ii * (ni - 2 * ii + 2) * (ni + 1 - ii), 4) * gamma;
        }
    }
    let labels = (0..d).map(|i| format!("s{i}")).chain((0..d).map(|i| format!("w{i}"))).collect();
    FdModule::new(
        labels,
        mt,
        Provenance::leaf("S", &[("n", n.to_string()), ("gamma", to_text(gamma))]),
    )
}

/// A finite window `i+j ≤ depth` of a Verma module. The actions of `g`, `ξ`,
/// `u`, `v` are exact on the window; `x` and `y` drop the terms that leave
/// it and are therefore only partially defined.
#[derive(Clone, Debug)]
pub struct TruncatedVerma {
    pub module: FdModule,
    pub depth: usize,
    /// Generators whose action is cut off at the window boundary.
    pub partial: [Generator; 2],
}

fn window(depth: usize) -> Vec<(usize, usize)> {
    (0..=depth).flat_map(|l| (0..=l).map(move |j| (l - j, j))).collect()
}

fn truncated(module: FdModule, depth: usize, levels: Vec<usize>) -> TruncatedVerma {
    TruncatedVerma {
        module: module.with_truncation(Truncation { depth, levels }),
        depth,
        partial: [X, Y],
    }
}

/// Window of the rank-one Verma module `M(n)` (top weight `n`, `g = 1`).
pub fn build_verma_trunc(n: i64, depth: usize) -> TruncatedVerma {
    let basis = window(depth);
    let mats = assemble(&basis, |t, (i, j)| closed_form(t, n, i, j));
    let labels = basis.iter().map(|(i, j)| format!("z({i},{j})")).collect();
    let levels = basis.iter().map(|(i, j)| i + j).collect();
    let module = FdModule::new(
        labels,
        mats,
        Provenance::leaf("verma", &[("n", n.to_string()), ("depth", depth.to_string())]),
    );
    truncated(module, depth, levels)
}

/// Window of a Verma module over an arbitrary top, computed by the recursive
/// engine. `names` labels the top basis.
pub fn build_verma_general(
    top_g: Matrix,
    top_xi: Matrix,
    names: &[&str],
    depth: usize,
    provenance: Provenance,
) -> TruncatedVerma {
    let mut engine = VermaEngine::new(top_g, top_xi);
    let r = engine.rank();
    assert_eq!(names.len(), r);
    let basis: Vec<(usize, usize, usize)> = (0..r)
        .flat_map(|p| window(depth).into_iter().map(move |(i, j)| (i, j, p)))
        .collect();
    let mats = assemble(&basis, |t, k| engine.act(t, k).into_iter().collect());
    let labels = basis.iter().map(|(i, j, p)| format!("{}({i},{j})", names[*p])).collect();
    let levels = basis.iter().map(|(i, j, _)| i + j).collect();
    truncated(FdModule::new(labels, mats, provenance), depth, levels)
}

/// Window of the rank-two Verma module with top `s, w`:
/// `g s = s`, `g w = w + λ s`, `ξ s = n s`, `ξ w = n w + μ s`.
pub fn build_verma2_trunc(n: i64, lambda: &Rational, mu: &Rational, depth: usize) -> TruncatedVerma {
    let top_g = Matrix::from_rows(vec![vec![int(1), lambda.clone()], vec![int(0), int(1)]]);
    let top_xi = Matrix::from_rows(vec![vec![int(n), mu.clone()], vec![int(0), int(n)]]);
    let prov = Provenance::leaf(
        "verma2",
        &[
            ("n", n.to_string()),
            ("lambda", to_text(lambda)),
            ("mu", to_text(mu)),
            ("depth", depth.to_string()),
        ],
    );
    build_verma_general(top_g, top_xi, &["s", "w"], depth, prov)
}
