use super::module::FdModule;
use super::weights::weight_decomposition;
use crate::algebra::{Generator, RelationTable};
use crate::linalg::{is_nilpotent, Matrix};
use num_traits::Zero;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub dim: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn check(name: &str, pass: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), pass, detail: detail.into() }
}

/// Evaluates every defining relation on the matrices and checks that `g` is
/// invertible, `g−1`, `x`, `u` are nilpotent and the weights are integers.
///
/// On a truncated Verma window, relations mentioning `x` or `y` are checked
/// only on basis vectors of level at most `depth − 2`, where no term has been
/// cut off; the others are checked everywhere.
pub fn verify_module(m: &FdModule) -> VerifyReport {
    let dim = m.dim();
    let mut checks = Vec::new();
    let window: Option<Vec<usize>> = m.truncation().map(|t| {
        (0..dim).filter(|&k| t.levels[k] + 2 <= t.depth).collect()
    });
    for r in RelationTable::standard().relations() {
        let mut acc = Matrix::zeros(dim, dim);
        for (c, w) in &r.terms {
            let wm = m.word_matrix(w).expect("relation words avoid g⁻¹");
            acc = &acc + &wm.scale(c);
        }
        let partial = r
            .terms
            .iter()
            .any(|(_, w)| w.iter().any(|t| matches!(t, Generator::X | Generator::Y)));
        let cols: Vec<usize> = match (&window, partial) {
            (Some(win), true) => win.clone(),
            _ => (0..dim).collect(),
        };
        let bad: Vec<usize> =
            cols.iter().copied().filter(|&k| acc.column(k).iter().any(|e| !e.is_zero())).collect();
        let detail = if bad.is_empty() {
            String::new()
        } else {
            format!(
                "{} fails on basis vector(s) {}",
                r.display(),
                bad.iter().map(|&k| m.labels()[k].clone()).collect::<Vec<_>>().join(", ")
            )
        };
        checks.push(check(r.name, bad.is_empty(), detail));
    }
    let g = m.mat(Generator::G);
    checks.push(check("g invertible", m.g_inverse().is_ok(), ""));
    checks.push(check("g-1 nilpotent", is_nilpotent(&(g - &Matrix::identity(dim))), ""));
    checks.push(check("x nilpotent", is_nilpotent(m.mat(Generator::X)), ""));
    checks.push(check("u nilpotent", is_nilpotent(m.mat(Generator::U)), ""));
    let weights = weight_decomposition(m);
    let detail = weights.as_ref().err().map(ToString::to_string).unwrap_or_default();
    checks.push(check("integral weights", weights.is_ok(), detail));
    VerifyReport { dim, checks }
}
