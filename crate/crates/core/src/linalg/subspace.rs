use super::matrix::Matrix;
use super::rational::Rational;
use num_traits::{One, Zero};

/// A subspace of `Q^ambient_dim`, stored as a list of linearly independent
/// coordinate vectors.
///
/// A reduced echelon copy of the span is kept alongside the user-facing basis
/// so membership tests cost one reduction pass.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    // (pivot column, row with 1 at the pivot and 0 at every other pivot)
    reduced: Vec<(usize, Vec<Rational>)>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis == other.basis
    }
}

impl Eq for Subspace {}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), reduced: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let mut s = Subspace::zero(ambient_dim);
        for i in 0..ambient_dim {
            s.try_extend(&unit(ambient_dim, i));
        }
        s
    }

    /// Span of arbitrary vectors; dependent vectors are dropped.
    pub fn span(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Self {
        let mut s = Subspace::zero(ambient_dim);
        for v in vectors {
            s.try_extend(v);
        }
        s
    }

    /// Wraps vectors the caller guarantees to be independent.
    pub(crate) fn from_independent(ambient_dim: usize, basis: Vec<Vec<Rational>>) -> Self {
        let s = Subspace::span(ambient_dim, &basis);
        debug_assert_eq!(s.dim(), basis.len(), "vectors not independent");
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Vec<Rational>> {
        self.basis
    }

    /// Remainder of `v` after reduction against the echelon rows.
    fn residue(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for (p, row) in &self.reduced {
            if r[*p].is_zero() {
                continue;
            }
            let c = r[*p].clone();
            for (a, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    *a -= &c * b;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length");
        self.residue(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the basis if it is not already in the span.
    pub fn try_extend(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length");
        let mut r = self.residue(v);
        let Some(p) = r.iter().position(|a| !a.is_zero()) else {
            return false;
        };
        let inv = Rational::one() / &r[p];
        for a in r.iter_mut() {
            *a *= &inv;
        }
        for (_, row) in self.reduced.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (a, b) in row.iter_mut().zip(&r) {
                if !b.is_zero() {
                    *a -= &c * b;
                }
            }
        }
        self.reduced.push((p, r));
        self.basis.push(v.to_vec());
        true
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut s = self.clone();
        for v in &other.basis {
            s.try_extend(v);
        }
        s
    }

    /// Matrix with the basis vectors as columns.
    pub fn as_columns(&self) -> Matrix {
        Matrix::from_columns(self.ambient_dim, &self.basis)
    }

    /// Extends the basis by standard unit vectors to a basis of the ambient
    /// space; returns only the added complement vectors.
    pub fn complement(&self) -> Vec<Vec<Rational>> {
        let mut s = self.clone();
        let mut out = Vec::new();
        for i in 0..self.ambient_dim {
            let e = unit(self.ambient_dim, i);
            if s.try_extend(&e) {
                out.push(e);
            }
            if s.dim() == self.ambient_dim {
                break;
            }
        }
        out
    }

    /// Reduced row echelon basis; two subspaces are equal iff these agree.
    pub fn canonical_basis(&self) -> Vec<Vec<Rational>> {
        let mut rows = self.reduced.clone();
        rows.sort_by_key(|(p, _)| *p);
        rows.into_iter().map(|(_, r)| r).collect()
    }

    /// Coordinates of `v` in terms of the stored basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let cols = self.as_columns();
        super::elim::solve(&cols, v).ok().flatten()
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.dim() == other.dim()
            && self.contains_subspace(other)
    }

    /// Image of the subspace under a linear map.
    pub fn image_under(&self, map: &Matrix) -> Subspace {
        assert_eq!(map.cols(), self.ambient_dim);
        let imgs: Vec<_> = self.basis.iter().map(|v| map.apply(v)).collect();
        Subspace::span(map.rows(), &imgs)
    }
}

pub fn unit(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = Rational::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    #[test]
    fn span_drops_dependent_vectors() {
        let s = Subspace::span(3, &[vec![int(1), int(2), int(0)], vec![int(2), int(4), int(0)]]);
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&[int(-1), int(-2), int(0)]));
        assert!(!s.contains(&[int(0), int(0), int(1)]));
        assert_eq!(s.complement().len(), 2);
    }

    #[test]
    fn equality_is_basis_independent() {
        let a = Subspace::span(2, &[vec![int(1), int(1)], vec![int(1), int(-1)]]);
        assert!(a.same_as(&Subspace::full(2)));
        assert_eq!(a.canonical_basis(), Subspace::full(2).canonical_basis());
    }
}
