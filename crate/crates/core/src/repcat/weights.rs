use super::functors::{closure, subquotient};
use super::module::{FdModule, ModuleError};
use crate::algebra::Generator;
use crate::linalg::{integer_eigenspaces, inverse, spectral_bound, Matrix, Rational, Subspace};
use std::collections::BTreeMap;

/// Generalized ξ-eigenspaces indexed by their (integer) weight.
#[derive(Clone, Debug)]
pub struct WeightDecomposition {
    pub spaces: BTreeMap<i64, Subspace>,
}

impl WeightDecomposition {
    /// `weight → dimension`.
    pub fn profile(&self) -> BTreeMap<i64, usize> {
        self.spaces.iter().map(|(w, s)| (*w, s.dim())).collect()
    }

    pub fn weights(&self) -> Vec<i64> {
        self.spaces.keys().copied().collect()
    }

    pub fn highest(&self) -> Option<i64> {
        self.spaces.keys().next_back().copied()
    }

    /// `dim M^(n) = dim M^(−n)` for all `n`.
    pub fn is_symmetric(&self) -> bool {
        let p = self.profile();
        p.iter().all(|(w, d)| p.get(&-w) == Some(d))
    }
}

pub fn weight_decomposition(m: &FdModule) -> Result<WeightDecomposition, ModuleError> {
    let xi = m.mat(Generator::Xi);
    let spaces: BTreeMap<i64, Subspace> =
        integer_eigenspaces(xi, spectral_bound(xi)).into_iter().collect();
    let total: usize = spaces.values().map(Subspace::dim).sum();
    if total != m.dim() {
        return Err(ModuleError::NotSuitablyGraded(format!(
            "integer weight spaces cover {total} of {} dimensions",
            m.dim()
        )));
    }
    Ok(WeightDecomposition { spaces })
}

/// `(hw M, hw-rk M)`.
pub fn hw_data(m: &FdModule) -> Result<(i64, usize), ModuleError> {
    if m.dim() == 0 {
        return Err(ModuleError::ZeroModule);
    }
    let wd = weight_decomposition(m)?;
    let (w, s) = wd.spaces.iter().next_back().expect("nonzero module has a weight");
    Ok((*w, s.dim()))
}

/// The module rewritten in a basis of weight vectors, listed by decreasing
/// weight.
#[derive(Clone, Debug)]
pub struct WeightBasis {
    pub module: FdModule,
    /// Columns: new basis in old coordinates.
    pub p: Matrix,
    pub p_inv: Matrix,
    /// Weight of each new basis vector.
    pub weights: Vec<i64>,
}

pub fn weight_basis(m: &FdModule) -> Result<WeightBasis, ModuleError> {
    let wd = weight_decomposition(m)?;
    let dim = m.dim();
    // already adapted when every unit vector lies in a single weight space
    let mut unit_weights = vec![None; dim];
    for (w, s) in &wd.spaces {
        for (k, slot) in unit_weights.iter_mut().enumerate() {
            if slot.is_none() && s.contains(&crate::linalg::unit(dim, k)) {
                *slot = Some(*w);
            }
        }
    }
    if unit_weights.iter().all(Option::is_some) {
        let weights = unit_weights.into_iter().map(Option::unwrap).collect();
        return Ok(WeightBasis {
            module: m.clone(),
            p: Matrix::identity(dim),
            p_inv: Matrix::identity(dim),
            weights,
        });
    }
    let mut cols = Vec::with_capacity(dim);
    let mut weights = Vec::with_capacity(dim);
    let mut labels = Vec::with_capacity(dim);
    for (w, s) in wd.spaces.iter().rev() {
        for (k, v) in s.basis().iter().enumerate() {
            cols.push(v.clone());
            weights.push(*w);
            labels.push(format!("wt{w}.{k}"));
        }
    }
    let p = Matrix::from_columns(dim, &cols);
    let p_inv = inverse(&p)?;
    let module = m.change_basis(&p, &p_inv, labels);
    Ok(WeightBasis { module, p, p_inv, weights })
}

/// Subquotients `M_i / M_{i−1}` of the hw-series: `M_i` is the preimage of
/// the submodule of `M/M_{i−1}` generated by its top weight space.
pub fn hw_series(m: &FdModule) -> Result<Vec<FdModule>, ModuleError> {
    let dim = m.dim();
    let wd = weight_decomposition(m)?;
    let mut current = Subspace::zero(dim);
    let mut out = Vec::new();
    while current.dim() < dim {
        // highest weight whose space is not already inside `current`
        let (_, top) = wd
            .spaces
            .iter()
            .rev()
            .find(|(_, s)| !current.contains_subspace(s))
            .expect("some weight space remains");
        let mut gens: Vec<Vec<Rational>> = current.basis().to_vec();
        gens.extend(top.basis().iter().cloned());
        let next = closure(m, &gens);
        out.push(subquotient(m, &next, &current)?);
        current = next;
    }
    Ok(out)
}
