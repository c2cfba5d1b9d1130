use super::module::{FdModule, ModuleError, Provenance};
use crate::algebra::hopf::{antipode_generator, coproduct_generator};
use crate::algebra::{AlgebraElement, Generator};
use crate::linalg::{left_inverse, unit, Matrix, Rational, Subspace};
use num_traits::{One, Zero};

fn generators_in_order() -> [Generator; 6] {
    Generator::MODULE_GENERATORS
}

/// Contragredient module: `t` acts by the transpose of `S(t)`.
pub fn dual(m: &FdModule) -> Result<FdModule, ModuleError> {
    let mut mats = Vec::with_capacity(6);
    for t in generators_in_order() {
        mats.push(m.evaluate(&antipode_generator(t))?.transpose());
    }
    let labels = m.labels().iter().map(|l| format!("{l}*")).collect();
    Ok(FdModule::new(
        labels,
        mats.try_into().expect("six"),
        Provenance::derived("dual", vec![m.provenance().clone()]),
    ))
}

/// `M ⊗ N` with the action through the coproduct; basis `a⊗b` in
/// lexicographic order.
pub fn tensor(m: &FdModule, n: &FdModule) -> Result<FdModule, ModuleError> {
    let mut mats = Vec::with_capacity(6);
    for t in generators_in_order() {
        let mut acc = Matrix::zeros(m.dim() * n.dim(), m.dim() * n.dim());
        for ((a, b), c) in coproduct_generator(t).terms() {
            let left = m.evaluate(&AlgebraElement::monomial(*a))?;
            let right = n.evaluate(&AlgebraElement::monomial(*b))?;
            acc = &acc + &left.kron(&right).scale(c);
        }
        mats.push(acc);
    }
    let labels = m
        .labels()
        .iter()
        .flat_map(|a| n.labels().iter().map(move |b| format!("{a}⊗{b}")))
        .collect();
    Ok(FdModule::new(
        labels,
        mats.try_into().expect("six"),
        Provenance::derived("tensor", vec![m.provenance().clone(), n.provenance().clone()]),
    ))
}

pub fn direct_sum(m: &FdModule, n: &FdModule) -> FdModule {
    let mats: [Matrix; 6] = std::array::from_fn(|k| m.mats()[k].direct_sum(&n.mats()[k]));
    let labels = m
        .labels()
        .iter()
        .map(|l| format!("{l}⊕"))
        .chain(n.labels().iter().map(|l| format!("⊕{l}")))
        .collect();
    FdModule::new(
        labels,
        mats,
        Provenance::derived("sum", vec![m.provenance().clone(), n.provenance().clone()]),
    )
}

/// Smallest generator-stable subspace containing `vectors`.
pub fn closure(m: &FdModule, vectors: &[Vec<Rational>]) -> Subspace {
    let mut s = Subspace::zero(m.dim());
    let mut queue: Vec<Vec<Rational>> = Vec::new();
    for v in vectors {
        if s.try_extend(v) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for mat in m.mats() {
            let img = mat.apply(&v);
            if s.try_extend(&img) {
                queue.push(img);
            }
        }
    }
    s
}

pub fn is_stable(m: &FdModule, s: &Subspace) -> bool {
    s.basis().iter().all(|v| m.mats().iter().all(|mat| s.contains(&mat.apply(v))))
}

fn vector_label(m: &FdModule, v: &[Rational]) -> Option<String> {
    let mut nz = v.iter().enumerate().filter(|(_, c)| !c.is_zero());
    match (nz.next(), nz.next()) {
        (Some((k, c)), None) if c.is_one() => Some(m.labels()[k].clone()),
        _ => None,
    }
}

/// `outer / inner` for nested generator-stable subspaces. The basis is the
/// part of `outer`'s basis completing `inner`, taken modulo `inner`.
pub fn subquotient(m: &FdModule, outer: &Subspace, inner: &Subspace) -> Result<FdModule, ModuleError> {
    if !is_stable(m, outer) || !is_stable(m, inner) || !outer.contains_subspace(inner) {
        return Err(ModuleError::Contract("subquotient needs nested submodules".into()));
    }
    let mut span = inner.clone();
    let mut extra = Vec::new();
    for v in outer.basis() {
        if span.try_extend(v) {
            extra.push(v.clone());
        }
    }
    let k = inner.dim();
    let d = extra.len();
    let mut all: Vec<Vec<Rational>> = inner.basis().to_vec();
    all.extend(extra.iter().cloned());
    let coords = if all.is_empty() {
        Matrix::zeros(0, m.dim())
    } else {
        left_inverse(&Matrix::from_columns(m.dim(), &all))?
    };
    let mats: [Matrix; 6] = std::array::from_fn(|g| {
        let mut out = Matrix::zeros(d, d);
        for (col, v) in extra.iter().enumerate() {
            let c = coords.apply(&m.mats()[g].apply(v));
            for row in 0..d {
                out[(row, col)] = c[k + row].clone();
            }
        }
        out
    });
    let labels = extra
        .iter()
        .enumerate()
        .map(|(i, v)| vector_label(m, v).unwrap_or_else(|| format!("b{i}")))
        .collect();
    Ok(FdModule::new(labels, mats, Provenance::derived("subquotient", vec![m.provenance().clone()])))
}

/// A submodule together with its embedding.
#[derive(Clone, Debug)]
pub struct Submodule {
    pub module: FdModule,
    pub span: Subspace,
}

pub fn submodule_generated(m: &FdModule, vectors: &[Vec<Rational>]) -> Submodule {
    let span = closure(m, vectors);
    let mut module = subquotient(m, &span, &Subspace::zero(m.dim())).expect("closure is stable");
    module.set_provenance(Provenance::derived("submodule", vec![m.provenance().clone()]));
    Submodule { module, span }
}

pub fn quotient(m: &FdModule, sub: &Subspace) -> Result<FdModule, ModuleError> {
    if !is_stable(m, sub) {
        return Err(ModuleError::Contract("quotient by a non-stable subspace".into()));
    }
    let mut q = subquotient(m, &Subspace::full(m.dim()), sub)?;
    q.set_provenance(Provenance::derived("quotient", vec![m.provenance().clone()]));
    Ok(q)
}

/// Unit vector helper with a module's dimension.
pub fn basis_vector(m: &FdModule, k: usize) -> Vec<Rational> {
    unit(m.dim(), k)
}
