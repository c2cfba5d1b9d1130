//! The fifteen defining relations, kept as unnormalized words so they can be
//! evaluated in the algebra, on matrices, or linearized for Ext.

use super::element::AlgebraElement;
use super::monomial::Generator::{self, Xi, G, U, V, X, Y};
use super::rewrite::normal_form;
use crate::linalg::rational::{frac, int};
use crate::linalg::Rational;
use serde::Serialize;

/// A relation `Σ c·w = 0` with each word `w` of length at most two.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: &'static str,
    pub terms: Vec<(Rational, Vec<Generator>)>,
}

impl Relation {
    /// Normal form of the left-hand side; zero when the relation holds.
    pub fn evaluate(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (c, w) in &self.terms {
            out.add_scaled(&normal_form(w), c);
        }
        out
    }

    pub fn display(&self) -> String {
        let mut s = String::new();
        for (idx, (c, w)) in self.terms.iter().enumerate() {
            let word: String = if w.is_empty() {
                "1".into()
            } else {
                w.iter().map(|t| t.name()).collect::<Vec<_>>().join("*")
            };
            let neg = c < &int(0);
            let mag = crate::linalg::rational::abs(c);
            let coeff = if mag == int(1) {
                String::new()
            } else {
                format!("{}*", crate::linalg::rational::to_text(&mag))
            };
            match (idx, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            s.push_str(&coeff);
            s.push_str(&word);
        }
        s
    }
}

/// The fixed table R1–R15.
#[derive(Clone, Debug)]
pub struct RelationTable {
    relations: Vec<Relation>,
}

fn rel(name: &'static str, terms: Vec<(Rational, Vec<Generator>)>) -> Relation {
    Relation { name, terms }
}

impl RelationTable {
    pub fn standard() -> Self {
        let o = || int(1);
        let m = || int(-1);
        let relations = vec![
            rel("R1", vec![(o(), vec![Xi, G]), (m(), vec![G, Xi])]),
            rel("R2", vec![(o(), vec![G, X]), (m(), vec![X, G])]),
            rel("R3", vec![(o(), vec![G, Y]), (m(), vec![Y, G]), (m(), vec![X, G])]),
            rel("R4", vec![(o(), vec![Xi, Y]), (m(), vec![Y, Xi]), (int(2), vec![Y])]),
            rel("R5", vec![(o(), vec![Xi, X]), (m(), vec![X, Xi]), (int(2), vec![X])]),
            rel("R6", vec![(o(), vec![U, G]), (m(), vec![G, U])]),
            rel("R7", vec![(o(), vec![V, G]), (m(), vec![G, V]), (m(), vec![G, U])]),
            rel("R8", vec![(o(), vec![V, Xi]), (m(), vec![Xi, V]), (int(2), vec![V])]),
            rel("R9", vec![(o(), vec![U, Xi]), (m(), vec![Xi, U]), (int(2), vec![U])]),
            rel("R10", vec![(o(), vec![Y, X]), (m(), vec![X, Y]), (frac(1, 2), vec![X, X])]),
            rel("R11", vec![(o(), vec![V, U]), (m(), vec![U, V]), (frac(1, 2), vec![U, U])]),
            rel("R12", vec![(o(), vec![U, X]), (m(), vec![X, U])]),
            rel(
                "R13",
                vec![(o(), vec![V, X]), (m(), vec![X, V]), (m(), vec![]), (o(), vec![G]), (m(), vec![X, U])],
            ),
            rel("R14", vec![(o(), vec![U, Y]), (m(), vec![Y, U]), (m(), vec![]), (o(), vec![G])]),
            rel(
                "R15",
                vec![(o(), vec![V, Y]), (m(), vec![Y, V]), (frac(-1, 2), vec![G, Xi]), (m(), vec![Y, U])],
            ),
        ];
        RelationTable { relations }
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn get(&self, name: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.name == name)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub relation: String,
    pub residual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationReport {
    pub checks: Vec<RelationCheck>,
}

impl PresentationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Normalizes each defining relation; all should vanish.
pub fn verify_presentation() -> PresentationReport {
    let checks = RelationTable::standard()
        .relations()
        .iter()
        .map(|r| {
            let residual = r.evaluate();
            RelationCheck {
                name: r.name.to_string(),
                relation: r.display(),
                pass: residual.is_zero(),
                residual: residual.to_string(),
            }
        })
        .collect();
    PresentationReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_relations_vanish() {
        let report = verify_presentation();
        assert_eq!(report.checks.len(), 15);
        for c in &report.checks {
            assert!(c.pass, "{} failed: {}", c.name, c.residual);
        }
    }

    #[test]
    fn display_form() {
        let t = RelationTable::standard();
        assert_eq!(t.get("R14").unwrap().display(), "u*y - y*u - 1 + g");
        assert_eq!(t.get("R10").unwrap().display(), "y*x - x*y + 1/2*x*x");
    }
}
