//! First extension groups via block-triangular cocycles.
//!
//! An extension `0 → A → E → Q → 0` is `ρ_E(t) = [[ρ_A(t), φ(t)], [0, ρ_Q(t)]]`
//! with `φ(t) ∈ Hom_𝕜(Q, A)`. Substituting into a relation `Σ c·w` and reading
//! off the upper-right block gives an equation linear in `φ`: a letter `s`
//! contributes `φ(s)`, a pair `s₁s₂` contributes `ρ_A(s₁)φ(s₂) + φ(s₁)ρ_Q(s₂)`,
//! and constants contribute nothing. Coboundaries are
//! `φ(t) = ρ_A(t)h − hρ_Q(t)`.

use super::system::LinearSystem;
use crate::algebra::{Generator, RelationTable};
use crate::linalg::{Matrix, Rational, Subspace};
use crate::repcat::{weight_basis, FdModule, ModuleError, Provenance};
use num_traits::Zero;

/// One cocycle: `φ(t)` for the six generators in the order x, y, g, ξ, u, v.
pub type Cocycle = [Matrix; 6];

#[derive(Clone, Debug)]
pub struct ExtResult {
    pub sub: FdModule,
    pub quot: FdModule,
    pub dimension: usize,
    /// Representatives of a basis of `Ext¹(quot, sub)`.
    pub cocycle_basis: Vec<Cocycle>,
}

const GENS: [Generator; 6] = Generator::MODULE_GENERATORS;

struct Layout {
    /// (generator index, row in A, column in Q)
    positions: Vec<(usize, usize, usize)>,
    lookup: std::collections::HashMap<(usize, usize, usize), usize>,
}

impl Layout {
    fn new(positions: Vec<(usize, usize, usize)>) -> Self {
        let lookup = positions.iter().enumerate().map(|(k, p)| (*p, k)).collect();
        Layout { positions, lookup }
    }
}

/// Cocycle space, coboundary space (both in unknown coordinates) and layout.
fn cocycles(
    quot: &FdModule,
    sub: &FdModule,
    phi_allowed: impl Fn(usize, usize, usize) -> bool,
    h_allowed: impl Fn(usize, usize) -> bool,
) -> (Subspace, Subspace, Layout) {
    let (da, dq) = (sub.dim(), quot.dim());
    let mut positions = Vec::new();
    for t in 0..6 {
        for a in 0..da {
            for b in 0..dq {
                if phi_allowed(t, a, b) {
                    positions.push((t, a, b));
                }
            }
        }
    }
    let layout = Layout::new(positions);
    let mut sys = LinearSystem::new(layout.positions.len());
    for (ri, rel) in RelationTable::standard().relations().iter().enumerate() {
        let eq = |a: usize, b: usize| (ri * da + a) * dq + b;
        for (u, &(t, a0, b0)) in layout.positions.iter().enumerate() {
            let s = GENS[t];
            for (c, w) in &rel.terms {
                match w.as_slice() {
                    [one] if *one == s => sys.add(eq(a0, b0), u, c),
                    [s1, s2] => {
                        if *s2 == s {
                            let ra = sub.mat(*s1);
                            for r in 0..da {
                                sys.add(eq(r, b0), u, &(c * &ra[(r, a0)]));
                            }
                        }
                        if *s1 == s {
                            let rq = quot.mat(*s2);
                            for col in 0..dq {
                                sys.add(eq(a0, col), u, &(c * &rq[(b0, col)]));
                            }
                        }
                    }
                    _ => {}
                }
            }
        }
    }
    let z = sys.solutions();
    let mut coboundaries = Vec::new();
    for a in 0..da {
        for b in 0..dq {
            if !h_allowed(a, b) {
                continue;
            }
            let mut v = vec![Rational::zero(); layout.positions.len()];
            for t in 0..6 {
                let (ra, rq) = (sub.mat(GENS[t]), quot.mat(GENS[t]));
                // ρ_A(t)E_ab − E_abρ_Q(t)
                for r in 0..da {
                    if !ra[(r, a)].is_zero() {
                        v[layout.lookup[&(t, r, b)]] += &ra[(r, a)];
                    }
                }
                for col in 0..dq {
                    if !rq[(b, col)].is_zero() {
                        v[layout.lookup[&(t, a, col)]] -= &rq[(b, col)];
                    }
                }
            }
            coboundaries.push(v);
        }
    }
    let b = Subspace::span(layout.positions.len(), &coboundaries);
    (z, b, layout)
}

fn to_cocycle(v: &[Rational], layout: &Layout, da: usize, dq: usize) -> Cocycle {
    let mut phi: Cocycle = std::array::from_fn(|_| Matrix::zeros(da, dq));
    for (k, &(t, a, b)) in layout.positions.iter().enumerate() {
        phi[t][(a, b)] = v[k].clone();
    }
    phi
}

fn representatives(z: &Subspace, b: &Subspace) -> Vec<Vec<Rational>> {
    let mut span = b.clone();
    z.basis().iter().filter(|v| span.try_extend(v)).cloned().collect()
}

/// `Ext¹(quot, sub)`: extensions with `sub` as submodule and `quot` as
/// quotient.
///
/// Every extension splits into generalized weight spaces compatibly with
/// `sub`, so a representative can be chosen with `φ(t)` of the same degree as
/// `t` with respect to weight bases, and two such representatives differ by
/// the coboundary of a weight-preserving `h`. The system is solved in that
/// graded form; [`ext1_ungraded`] solves the full one.
pub fn ext1(quot: &FdModule, sub: &FdModule) -> Result<ExtResult, ModuleError> {
    let wq = weight_basis(quot)?;
    let wa = weight_basis(sub)?;
    let (z, b, layout) = cocycles(
        &wq.module,
        &wa.module,
        |t, a, c| wa.weights[a] == wq.weights[c] + GENS[t].degree(),
        |a, c| wa.weights[a] == wq.weights[c],
    );
    // B is the image of the degree-0 maps; it sits inside Z by construction
    debug_assert!(z.contains_subspace(&b));
    let reps = representatives(&z, &b);
    let cocycle_basis = reps
        .iter()
        .map(|v| {
            to_cocycle(v, &layout, sub.dim(), quot.dim())
                .map(|phi| &(&wa.p * &phi) * &wq.p_inv)
        })
        .collect();
    Ok(ExtResult {
        sub: sub.clone(),
        quot: quot.clone(),
        dimension: reps.len(),
        cocycle_basis,
    })
}

/// Same as [`ext1`] with every entry of every `φ(t)` unknown.
pub fn ext1_ungraded(quot: &FdModule, sub: &FdModule) -> ExtResult {
    let (z, b, layout) = cocycles(quot, sub, |_, _, _| true, |_, _| true);
    let reps = representatives(&z, &b);
    let cocycle_basis =
        reps.iter().map(|v| to_cocycle(v, &layout, sub.dim(), quot.dim())).collect();
    ExtResult { sub: sub.clone(), quot: quot.clone(), dimension: reps.len(), cocycle_basis }
}

/// The middle term for the class `Σ coefficients[k]·[φ_k]`, with basis
/// `sub` followed by `quot`.
pub fn build_extension(r: &ExtResult, coefficients: &[Rational]) -> Result<FdModule, ModuleError> {
    if coefficients.len() != r.dimension {
        return Err(ModuleError::Contract(format!(
            "expected {} coefficients, got {}",
            r.dimension,
            coefficients.len()
        )));
    }
    let (da, dq) = (r.sub.dim(), r.quot.dim());
    let mats: [Matrix; 6] = std::array::from_fn(|t| {
        let mut phi = Matrix::zeros(da, dq);
        for (c, cocycle) in coefficients.iter().zip(&r.cocycle_basis) {
            phi = &phi + &cocycle[t].scale(c);
        }
        let mut e = Matrix::zeros(da + dq, da + dq);
        e.set_block(0, 0, r.sub.mat(GENS[t]));
        e.set_block(0, da, &phi);
        e.set_block(da, da, r.quot.mat(GENS[t]));
        e
    });
    let labels = r
        .sub
        .labels()
        .iter()
        .map(|l| format!("sub:{l}"))
        .chain(r.quot.labels().iter().map(|l| format!("quot:{l}")))
        .collect();
    let mut prov = Provenance::derived(
        "extension",
        vec![r.sub.provenance().clone(), r.quot.provenance().clone()],
    );
    prov.params.insert(
        "class".into(),
        coefficients.iter().map(crate::linalg::rational::to_text).collect::<Vec<_>>().join(","),
    );
    Ok(FdModule::new(labels, mats, prov))
}
