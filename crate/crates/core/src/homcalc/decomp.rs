use super::hom::{hom_dim, hom_space};
use crate::linalg::{
    algebra_radical, combine, integer_eigenspaces, rank, spectral_bound, Matrix, Rational, Subspace,
};
use crate::repcat::{
    build_simple, hw_data, quotient, submodule_generated, weight_decomposition, FdModule,
    ModuleError, Submodule,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

/// Outcome of a search that can fail to decide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
    Undetermined,
}

impl Decision {
    pub fn is_yes(self) -> bool {
        self == Decision::Yes
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Yes => "true",
            Decision::No => "false",
            Decision::Undetermined => "undetermined",
        })
    }
}

#[derive(Debug, Error)]
pub enum HomcalcError {
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error("socle layer of dimension {dim} is not a sum of simple modules L(n) (found {found})")]
    NotSemisimple { dim: usize, found: usize },
}

const LATTICE: [i64; 5] = [-2, -1, 0, 1, 2];
const LATTICE_BUDGET: usize = 625;
const RANDOM_TRIES: usize = 32;

fn lattice_points(k: usize) -> Vec<Vec<i64>> {
    if 5usize.checked_pow(k as u32).is_some_and(|n| n <= LATTICE_BUDGET) {
        let mut pts = vec![vec![]];
        for _ in 0..k {
            pts = pts
                .into_iter()
                .flat_map(|p| {
                    LATTICE.iter().map(move |&c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
        }
        return pts;
    }
    // single coordinates, then pairs, up to the budget
    let mut pts = Vec::new();
    for i in 0..k {
        let mut p = vec![0; k];
        p[i] = 1;
        pts.push(p);
    }
    'outer: for i in 0..k {
        for j in i + 1..k {
            for &c in &[1, -1, 2, -2] {
                let mut p = vec![0; k];
                p[i] = 1;
                p[j] = c;
                pts.push(p);
                if pts.len() >= LATTICE_BUDGET {
                    break 'outer;
                }
            }
        }
    }
    pts
}

fn invertible_combination(basis: &[Matrix], dim: usize) -> bool {
    let try_coeffs = |c: &[Rational]| rank(&combine(basis, c)) == dim;
    for p in lattice_points(basis.len()) {
        if p.iter().all(|&c| c == 0) {
            continue;
        }
        let c: Vec<Rational> = p.iter().map(|&v| Rational::from_integer(v.into())).collect();
        if try_coeffs(&c) {
            return true;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..RANDOM_TRIES {
        let c: Vec<Rational> = (0..basis.len())
            .map(|_| Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into()))
            .collect();
        if try_coeffs(&c) {
            return true;
        }
    }
    false
}

/// Whether `M ≅ N`. Cheap invariants (dimension, weight profile, dimensions
/// of `End M`, `End N`, `Hom(M,N)`, `Hom(N,M)`) give a definite "no"; a "yes"
/// needs an invertible element of `Hom(M,N)`, searched over a small integer
/// lattice and then seeded random rational combinations. If the search fails
/// and composition factors agree the answer is undetermined.
pub fn is_isomorphic(m: &FdModule, n: &FdModule) -> Result<Decision, HomcalcError> {
    if m.dim() != n.dim() {
        return Ok(Decision::No);
    }
    if m.dim() == 0 {
        return Ok(Decision::Yes);
    }
    if weight_decomposition(m)?.profile() != weight_decomposition(n)?.profile() {
        return Ok(Decision::No);
    }
    let hom = hom_space(m, n)?;
    let end_m = hom_dim(m, m)?;
    if hom.dim() == 0 || hom.dim() != end_m || hom_dim(n, n)? != end_m || hom_dim(n, m)? != end_m {
        return Ok(Decision::No);
    }
    if invertible_combination(&hom.basis, m.dim()) {
        return Ok(Decision::Yes);
    }
    if composition_factors(m)? != composition_factors(n)? {
        return Ok(Decision::No);
    }
    Ok(Decision::Undetermined)
}

/// Sum of the images of all maps `L(k) → M`.
pub fn socle(m: &FdModule) -> Result<Submodule, HomcalcError> {
    if m.dim() == 0 {
        return Ok(submodule_generated(m, &[]));
    }
    let (hw, _) = hw_data(m)?;
    let mut span = Subspace::zero(m.dim());
    for k in 0..=hw.max(0) as usize {
        for h in hom_space(&build_simple(k), m)?.basis {
            for c in 0..h.cols() {
                span.try_extend(&h.column(c));
            }
        }
    }
    Ok(submodule_generated(m, span.basis()))
}

/// Multiplicities of the simples `L(k)` in a semisimple module, as a sorted
/// list of labels `k`.
fn semisimple_labels(s: &FdModule) -> Result<Vec<usize>, HomcalcError> {
    if s.dim() == 0 {
        return Ok(Vec::new());
    }
    let (hw, _) = hw_data(s)?;
    let mut out = Vec::new();
    let mut covered = 0;
    for k in 0..=hw.max(0) as usize {
        let mult = hom_dim(&build_simple(k), s)?;
        covered += mult * (k + 1);
        out.extend(std::iter::repeat_n(k, mult));
    }
    if covered != s.dim() {
        return Err(HomcalcError::NotSemisimple { dim: s.dim(), found: covered });
    }
    Ok(out)
}

/// The socle filtration: labels of the simple summands of each successive
/// socle layer, bottom first.
pub fn socle_layers(m: &FdModule) -> Result<Vec<Vec<usize>>, HomcalcError> {
    let mut layers = Vec::new();
    let mut current = m.clone();
    while current.dim() > 0 {
        let soc = socle(&current)?;
        if soc.module.dim() == 0 {
            return Err(HomcalcError::NotSemisimple { dim: current.dim(), found: 0 });
        }
        layers.push(semisimple_labels(&soc.module)?);
        current = quotient(&current, &soc.span)?;
    }
    Ok(layers)
}

/// Composition factors as a sorted multiset of labels `n` of `L(n)`.
pub fn composition_factors(m: &FdModule) -> Result<Vec<usize>, HomcalcError> {
    let mut all: Vec<usize> = socle_layers(m)?.into_iter().flatten().collect();
    all.sort_unstable();
    Ok(all)
}

/// Indecomposability through `End M`: local (`End/rad` one-dimensional)
/// means indecomposable; an endomorphism with a proper generalized
/// eigenspace for an integer eigenvalue splits `M` (Fitting).
pub fn is_indecomposable(m: &FdModule) -> Result<Decision, HomcalcError> {
    if m.dim() == 0 {
        return Ok(Decision::No);
    }
    let end = hom_space(m, m)?.basis;
    let rad = algebra_radical(&end);
    if end.len() - rad.dim() == 1 {
        return Ok(Decision::Yes);
    }
    let mut candidates: Vec<Matrix> = end.clone();
    for i in 0..end.len() {
        for j in i + 1..end.len() {
            candidates.push(&end[i] + &end[j]);
            candidates.push(&end[i] - &end[j]);
        }
    }
    for a in candidates.iter().take(LATTICE_BUDGET) {
        for (_, space) in integer_eigenspaces(a, spectral_bound(a)) {
            if space.dim() < m.dim() {
                return Ok(Decision::No);
            }
        }
    }
    Ok(Decision::Undetermined)
}
