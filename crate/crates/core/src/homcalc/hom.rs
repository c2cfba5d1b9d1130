use super::system::LinearSystem;
use crate::algebra::Generator;
use crate::linalg::Matrix;
use crate::repcat::{weight_basis, FdModule, ModuleError};
use num_traits::Zero;

/// Module maps `M → N`, each stored as an `N.dim × M.dim` matrix.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: FdModule,
    pub target: FdModule,
    pub basis: Vec<Matrix>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `ρ_N(t)h = hρ_M(t)` for every generator and basis element.
    pub fn check(&self) -> bool {
        self.basis.iter().all(|h| {
            Generator::MODULE_GENERATORS
                .iter()
                .all(|&t| self.target.mat(t) * h == h * self.source.mat(t))
        })
    }
}

/// Solves `ρ_N(t)h − hρ_M(t) = 0` for `h` supported on the positions where
/// `allowed(row, col)` holds.
fn intertwiners(m: &FdModule, n: &FdModule, allowed: impl Fn(usize, usize) -> bool) -> Vec<Matrix> {
    let (dm, dn) = (m.dim(), n.dim());
    let positions: Vec<(usize, usize)> =
        (0..dn).flat_map(|a| (0..dm).map(move |b| (a, b))).filter(|&(a, b)| allowed(a, b)).collect();
    let mut sys = LinearSystem::new(positions.len());
    for (ti, t) in Generator::MODULE_GENERATORS.iter().enumerate() {
        let (rn, rm) = (n.mat(*t), m.mat(*t));
        let eq = |r: usize, c: usize| (ti * dn + r) * dm + c;
        for (u, &(a, b)) in positions.iter().enumerate() {
            // ρ_N(t)·E_ab: column b is column a of ρ_N(t)
            for r in 0..dn {
                sys.add(eq(r, b), u, &rn[(r, a)]);
            }
            // E_ab·ρ_M(t): row a is row b of ρ_M(t)
            for c in 0..dm {
                sys.add(eq(a, c), u, &-rm[(b, c)].clone());
            }
        }
    }
    sys.solutions()
        .into_basis()
        .into_iter()
        .map(|v| {
            let mut h = Matrix::zeros(dn, dm);
            for (u, &(a, b)) in positions.iter().enumerate() {
                if !v[u].is_zero() {
                    h[(a, b)] = v[u].clone();
                }
            }
            h
        })
        .collect()
}

/// `Hom(M, N)`. Maps preserve weight spaces, so the system is solved in weight
/// bases with only weight-preserving entries as unknowns.
pub fn hom_space(m: &FdModule, n: &FdModule) -> Result<HomSpace, ModuleError> {
    let wm = weight_basis(m)?;
    let wn = weight_basis(n)?;
    let basis = intertwiners(&wm.module, &wn.module, |a, b| wn.weights[a] == wm.weights[b])
        .into_iter()
        .map(|h| &(&wn.p * &h) * &wm.p_inv)
        .collect();
    Ok(HomSpace { source: m.clone(), target: n.clone(), basis })
}

/// `Hom(M, N)` from the full system with every matrix entry unknown; slower,
/// used to cross-check [`hom_space`].
pub fn hom_space_ungraded(m: &FdModule, n: &FdModule) -> HomSpace {
    let basis = intertwiners(m, n, |_, _| true);
    HomSpace { source: m.clone(), target: n.clone(), basis }
}

pub(crate) fn hom_dim(m: &FdModule, n: &FdModule) -> Result<usize, ModuleError> {
    Ok(hom_space(m, n)?.dim())
}

