//! Acceptance suite. Prints one PASS/FAIL line per criterion; all
//! comparisons are exact (tolerance: equality over ℚ).

use jordan_double::algebra::hopf::hopf_axiom_suite;
use jordan_double::algebra::{verify_presentation, Generator, RelationTable};
use jordan_double::homcalc::{
    build_extension, ext1, is_indecomposable, is_isomorphic, socle, Decision,
};
use jordan_double::linalg::rational::{binomial, factorial, int, pow2};
use jordan_double::linalg::{Rational, Subspace};
use jordan_double::quiver::{gabriel_quiver, representation_type_report, GraphClass};
use jordan_double::repcat::verma::closed_form;
use jordan_double::repcat::{
    build_s, build_simple, build_t, build_verma2_trunc, build_verma_trunc, direct_sum, dual,
    hw_data, hw_series, quotient, submodule_generated, t_basis, verify_module,
    weight_decomposition, FdModule,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::time::Instant;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn report(id: &str, title: &str, run: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = run();
    println!(
        "[{}] criterion {id}: {title} — {} ({:.1}s)",
        if o.pass { "PASS" } else { "FAIL" },
        o.detail,
        start.elapsed().as_secs_f64()
    );
    o.pass
}

// ---------------------------------------------------------------------------
// Test-only oracle for the rank-one Verma action: vectors are maps
// (i, j) ↦ coefficient of y^i x^j ⊗ p, and a generator is moved to the right
// by solving the defining relation that contains the word [t, s] for t·s.

type Vector = BTreeMap<(usize, usize), Rational>;

fn axpy(acc: &mut Vector, w: &Vector, c: &Rational) {
    for (k, a) in w {
        let e = acc.entry(*k).or_insert_with(Rational::zero);
        *e += a * c;
    }
    acc.retain(|_, v| !v.is_zero());
}

struct Oracle {
    p: i64,
    rels: RelationTable,
}

impl Oracle {
    /// `t·s = Σ c·w` from the relation containing `[t, s]`.
    fn rewrite(&self, t: Generator, s: Generator) -> Vec<(Rational, Vec<Generator>)> {
        for r in self.rels.relations() {
            if let Some((lead, _)) = r.terms.iter().find(|(_, w)| *w == [t, s]) {
                return r
                    .terms
                    .iter()
                    .filter(|(_, w)| *w != [t, s])
                    .map(|(c, w)| (-c / lead, w.clone()))
                    .collect();
            }
        }
        panic!("no relation for {t}{s}");
    }

    fn word(&self, w: &[Generator], v: &Vector) -> Vector {
        w.iter().rev().fold(v.clone(), |acc, &t| self.vec(t, &acc))
    }

    fn vec(&self, t: Generator, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (&(i, j), c) in v {
            axpy(&mut out, &self.basis(t, i, j), c);
        }
        out
    }

    fn basis(&self, t: Generator, i: usize, j: usize) -> Vector {
        use Generator::*;
        let unit = |i, j| Vector::from([((i, j), int(1))]);
        if t == Y {
            return unit(i + 1, j);
        }
        let (s, rest) = match (i, j) {
            (0, j) if t == X => return unit(0, j + 1),
            (0, 0) => {
                return match t {
                    G | GInv => unit(0, 0),
                    Xi if self.p != 0 => Vector::from([((0, 0), int(self.p))]),
                    _ => Vector::new(),
                }
            }
            (0, j) => (X, unit(0, j - 1)),
            (i, j) => (Y, unit(i - 1, j)),
        };
        let mut out = Vector::new();
        for (c, w) in self.rewrite(t, s) {
            axpy(&mut out, &self.word(&w, &rest), &c);
        }
        out
    }
}

// ---------------------------------------------------------------------------

fn verify_all(mods: impl IntoIterator<Item = (String, FdModule)>) -> Outcome {
    let mut count = 0;
    for (name, m) in mods {
        let r = verify_module(&m);
        if !r.all_pass() {
            return outcome(false, format!("{name} fails {:?}", r.failed()));
        }
        count += 1;
    }
    outcome(true, format!("{count} modules verified"))
}

fn criterion_1() -> Outcome {
    let pres = verify_presentation();
    if !pres.all_pass() {
        let bad: Vec<_> = pres.checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect();
        return outcome(false, format!("relations not normalizing to 0: {bad:?}"));
    }
    let hopf = hopf_axiom_suite(200, 5, 2024);
    let failures: Vec<_> = hopf.failures().map(|f| format!("{} on {}", f.axiom, f.input)).collect();
    outcome(
        failures.is_empty(),
        format!(
            "{} relations reduce to 0; {} Hopf checks (200 random monomials, degree ≤ 5), {} failures{}",
            pres.checks.len(),
            hopf.checks.len(),
            failures.len(),
            failures.first().map(|f| format!(", first: {f}")).unwrap_or_default()
        ),
    )
}

fn criterion_2() -> Outcome {
    let mut mods: Vec<(String, FdModule)> = Vec::new();
    for n in 0..=10 {
        mods.push((format!("L({n})"), build_simple(n)));
    }
    for n in 0..=10usize {
        for m in 0..=(10 - n) / 2 {
            mods.push((format!("T({n},{m})"), build_t(n, m)));
        }
    }
    for n in 0..=8 {
        for g in [0, 1, 3] {
            mods.push((format!("S_{g}({n})"), build_s(n, &int(g))));
        }
    }
    for n in -3..=6i64 {
        for depth in 0..=6 {
            mods.push((format!("M({n}; depth {depth})"), build_verma_trunc(n, depth).module));
        }
    }
    for n in -2..=4i64 {
        for (l, m) in [(0, 0), (1, 0), (0, 1), (2, -3)] {
            for depth in 0..=5 {
                mods.push((
                    format!("M({n},{l},{m}; depth {depth})"),
                    build_verma2_trunc(n, &int(l), &int(m), depth).module,
                ));
            }
        }
    }
    verify_all(mods)
}

fn criterion_3() -> Outcome {
    for n in 0..=10usize {
        for m in 0..=(10 - n) / 2 {
            let d = build_t(n, m).dim();
            if d != (m + 1) * (n + m + 1) {
                return outcome(false, format!("dim T({n},{m}) = {d}"));
            }
        }
    }
    let mut iso = 0;
    for n in 0..=8usize {
        for m in 1..=(8 - n) / 2 {
            let t = build_t(n, m);
            let soc = match socle(&t) {
                Ok(s) => s,
                Err(e) => return outcome(false, format!("socle T({n},{m}): {e}")),
            };
            let a = is_isomorphic(&soc.module, &build_simple(n)).unwrap();
            let q = quotient(&t, &soc.span).unwrap();
            let b = is_isomorphic(&q, &build_t(n + 2, m - 1)).unwrap();
            if a != Decision::Yes || b != Decision::Yes {
                return outcome(false, format!("T({n},{m}): socle ≅ L(n) {a}, quotient ≅ T(n+2,m−1) {b}"));
            }
            iso += 2;
        }
    }
    outcome(true, format!("dimension formula on all T(n,m) with n+2m ≤ 10; {iso} isomorphisms confirmed"))
}

fn criterion_4() -> Outcome {
    let mut compared = 0;
    for p in -3..=8i64 {
        let oracle = Oracle { p, rels: RelationTable::standard() };
        for level in 0..=5usize {
            for j in 0..=level {
                let i = level - j;
                for t in Generator::MODULE_GENERATORS {
                    let closed: Vector = closed_form(t, p, i, j).into_iter().collect();
                    let rec = oracle.basis(t, i, j);
                    if closed != rec {
                        return outcome(false, format!("{t}·z({i},{j}) at p = {p}: {closed:?} vs {rec:?}"));
                    }
                    compared += 1;
                }
            }
        }
    }
    let mut identities = 0;
    for n in 0..=8usize {
        for m in 0..=(8 - n) / 2 {
            let t = build_t(n, m);
            let basis = t_basis(n, m);
            let v = t.mat(Generator::V);
            for (k, &(i, j)) in basis.iter().enumerate() {
                let mut vec = vec![Rational::zero(); t.dim()];
                vec[k] = int(1);
                for _ in 0..i {
                    vec = v.apply(&vec);
                }
                let top = basis.iter().position(|&b| b == (0, j)).unwrap();
                let c = factorial(i as u64) * factorial(i as u64) / pow2(i as u32)
                    * binomial((n + 2 * (m - j)) as u64, i as u64);
                let mut expected = vec![Rational::zero(); t.dim()];
                expected[top] = c;
                if vec != expected {
                    return outcome(false, format!("v^{i}·z({i},{j}) in T({n},{m})"));
                }
                identities += 1;
            }
        }
    }
    outcome(
        true,
        format!("{compared} closed-form actions match the relation oracle (p ∈ [−3,8], i+j ≤ 5); {identities} v-power identities hold"),
    )
}

fn criterion_5() -> Outcome {
    let mut table = BTreeMap::new();
    for n in 0..=6usize {
        for m in 0..=6usize {
            table.insert((n, m), ext1(&build_simple(n), &build_simple(m)).unwrap().dimension);
        }
    }
    let expected = |n: usize, m: usize| usize::from(m + 2 == n || n + 2 == m || (m == n && n >= 1));
    let wrong: Vec<_> = table.iter().filter(|(&(n, m), &d)| d != expected(n, m)).collect();
    let symmetric = table.iter().all(|(&(n, m), d)| table[&(m, n)] == *d);
    let dual_ok = (0..=6usize).all(|n| {
        (0..=6usize).all(|m| {
            let a = dual(&build_simple(m)).unwrap();
            let b = dual(&build_simple(n)).unwrap();
            ext1(&a, &b).unwrap().dimension == table[&(n, m)]
        })
    });
    let q = gabriel_quiver(6).unwrap();
    let quiver_ok = table.iter().all(|(&(n, m), &d)| q.multiplicity(n, m) == d);
    let printed_loop = q.paper_variant().multiplicity(0, 0);
    outcome(
        wrong.is_empty() && symmetric && dual_ok && quiver_ok,
        format!(
            "49 cells match (0 ≤ n,m ≤ 6), ext1(A,B) = ext1(B,A): {symmetric}, = ext1(B*,A*): {dual_ok}, quiver agrees: {quiver_ok}; \
             DISCREPANCY (0,0): computed {} vs printed quiver {printed_loop}{}",
            table[&(0, 0)],
            if wrong.is_empty() { String::new() } else { format!("; mismatches {wrong:?}") }
        ),
    )
}

fn criterion_6() -> Outcome {
    let mut count = 0;
    for n in 0..=5usize {
        let up = ext1(&build_simple(n + 2), &build_simple(n)).unwrap();
        if up.dimension != 1 {
            return outcome(false, format!("ext1(L({}), L({n})) has dim {}", n + 2, up.dimension));
        }
        let e = build_extension(&up, &[int(1)]).unwrap();
        let d = is_isomorphic(&e, &build_t(n, 1)).unwrap();
        if !verify_module(&e).all_pass() || d != Decision::Yes {
            return outcome(false, format!("extension of L({}) by L({n}) ≅ T({n},1): {d}", n + 2));
        }
        count += 1;
        if n >= 2 {
            let down = ext1(&build_simple(n - 2), &build_simple(n)).unwrap();
            let e = build_extension(&down, &[int(1)]).unwrap();
            let target = dual(&build_t(n - 2, 1)).unwrap();
            let d = is_isomorphic(&e, &target).unwrap();
            if down.dimension != 1 || !verify_module(&e).all_pass() || d != Decision::Yes {
                return outcome(false, format!("extension of L({}) by L({n}) ≅ T({},1)*: {d}", n - 2, n - 2));
            }
            count += 1;
        }
    }
    outcome(true, format!("{count} extension classes realized"))
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    for n in 0..=8usize {
        for m in 0..=(8 - n) / 2 {
            let d = is_indecomposable(&build_t(n, m)).unwrap();
            if d != Decision::Yes {
                return outcome(false, format!("T({n},{m}): {d}"));
            }
            checked += 1;
        }
    }
    for n in 1..=6 {
        let d = is_indecomposable(&build_s(n, &int(1))).unwrap();
        if d != Decision::Yes {
            return outcome(false, format!("S_1({n}): {d}"));
        }
        checked += 1;
    }
    for a in 0..=4 {
        for b in a..=4 {
            let d = is_indecomposable(&direct_sum(&build_simple(a), &build_simple(b))).unwrap();
            if d != Decision::No {
                return outcome(false, format!("L({a})⊕L({b}): {d}"));
            }
            checked += 1;
        }
    }
    outcome(true, format!("{checked} modules decided as expected"))
}

/// `(n, m)` with `n + 2m = hw` and `(m+1)(n+m+1) = dim`.
fn t_shape(hw: i64, dim: usize) -> Option<(usize, usize)> {
    (0..=hw.max(0) as usize / 2).map(|m| (hw as usize - 2 * m, m)).find(|&(n, m)| (m + 1) * (n + m + 1) == dim)
}

fn criterion_8() -> Outcome {
    let a = representation_type_report(6, false, Some(&[2, 4, 6])).unwrap();
    let b = representation_type_report(6, true, Some(&[0, 2, 4])).unwrap();
    let neither = |r: &jordan_double::quiver::RepresentationReport| {
        r.wild && r.components.iter().any(|c| c.class == GraphClass::Neither)
    };
    // rank-one spot check: quotients of T(n',m') by submodules generated by
    // random weight vectors are again T(n,m)
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut spot = 0;
    let mut spot_fail = None;
    while spot < 24 {
        let (n0, m0) = (rng.gen_range(0..4usize), rng.gen_range(1..4usize));
        let t = build_t(n0, m0);
        let wd = weight_decomposition(&t).unwrap();
        let weights = wd.weights();
        let w = weights[rng.gen_range(0..weights.len() - 1)];
        let space: &Subspace = &wd.spaces[&w];
        let v: Vec<Rational> = space.basis().iter().fold(vec![Rational::zero(); t.dim()], |acc, b| {
            let c = int(rng.gen_range(-3..=3));
            acc.iter().zip(b).map(|(x, y)| x + &c * y).collect()
        });
        if v.iter().all(Zero::is_zero) {
            continue;
        }
        let sub = submodule_generated(&t, &[v]);
        if sub.span.dim() == t.dim() {
            continue;
        }
        let q = quotient(&t, &sub.span).unwrap();
        let (hw, rk) = hw_data(&q).unwrap();
        if rk != 1 || hw_series(&q).unwrap().len() != 1 {
            continue;
        }
        spot += 1;
        let ok = t_shape(hw, q.dim())
            .map(|(n, m)| is_isomorphic(&q, &build_t(n, m)).unwrap() == Decision::Yes)
            .unwrap_or(false);
        if !ok && spot_fail.is_none() {
            spot_fail = Some(format!("T({n0},{m0}) / ⟨weight {w} vector⟩"));
        }
    }
    outcome(
        neither(&a) && neither(&b) && spot_fail.is_none(),
        format!(
            "{{2,4,6}} computed: {} ({} edges); {{0,2,4}} printed variant: {} ({} edges); verdict: {}; \
             rank-one spot check {spot} quotients{}; full rank-one classification not reproduced (spot check only)",
            a.components.iter().map(|c| c.class.to_string()).collect::<Vec<_>>().join(", "),
            a.separated_edges.len(),
            b.components.iter().map(|c| c.class.to_string()).collect::<Vec<_>>().join(", "),
            b.separated_edges.len(),
            a.verdict,
            spot_fail.map(|f| format!(", FAILED at {f}")).unwrap_or_default()
        ),
    )
}

fn main() {
    let results = [
        report("1", "presentation and Hopf axioms", criterion_1),
        report("2", "module verification", criterion_2),
        report("3", "T(n,m) dimension, socle and quotient", criterion_3),
        report("4", "closed forms vs relation oracle; v-power identity", criterion_4),
        report("5", "Ext table 0..6 and duality", criterion_5),
        report("6", "extension realization", criterion_6),
        report("7", "indecomposability", criterion_7),
        report("8", "wildness report", criterion_8),
    ];
    let passed = results.iter().filter(|p| **p).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
