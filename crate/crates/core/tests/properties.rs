use jordan_double::algebra::hopf::hopf_axiom_suite;
use jordan_double::algebra::rewrite::{multiply_monomials, normal_form_right_to_left};
use jordan_double::algebra::{multiply, normal_form, AlgebraElement, Generator, PbwMonomial};
use jordan_double::expr;
use jordan_double::homcalc::{
    build_extension, composition_factors, ext1, hom_space, is_isomorphic, socle_layers, Decision,
};
use jordan_double::linalg::rational::{frac, int};
use jordan_double::linalg::{
    algebra_radical, combine, integer_eigenspaces, inverse, is_nilpotent, kernel, rank,
    spectral_bound, Matrix, Rational, Subspace,
};
use jordan_double::quiver::{classify_graph, separated_quiver, Graph, Quiver};
use jordan_double::repcat::{
    build_s, build_simple, build_t, direct_sum, dual, hw_data, hw_series, tensor, verify_module,
    weight_decomposition, FdModule,
};
use proptest::prelude::*;
use std::collections::BTreeMap;

const ALL: [Generator; 7] = [
    Generator::X,
    Generator::Y,
    Generator::G,
    Generator::GInv,
    Generator::Xi,
    Generator::U,
    Generator::V,
];

fn matrix(rows: usize, cols: usize, entries: &[i64]) -> Matrix {
    Matrix::from_rows(
        (0..rows).map(|r| (0..cols).map(|c| int(entries[r * cols + c])).collect()).collect(),
    )
}

fn small_matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(-3i64..=3, r * c).prop_map(move |e| matrix(r, c, &e))
    })
}

fn monomial(max_len: u32) -> impl Strategy<Value = PbwMonomial> {
    (0..=2u32, 0..=2u32, -2..=2i64, 0..=2u32, 0..=2u32, 0..=2u32)
        .prop_map(|(x, y, g, xi, u, v)| PbwMonomial::new(x, y, g, xi, u, v))
        .prop_filter("length bound", move |m| m.length() <= max_len as u64)
}

fn word(max_len: usize) -> impl Strategy<Value = Vec<Generator>> {
    prop::collection::vec(prop::sample::select(ALL.to_vec()), 0..=max_len)
}

fn element() -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((monomial(4), -4i64..=4, 1i64..=3), 0..4).prop_map(|terms| {
        let mut a = AlgebraElement::zero();
        for (m, p, q) in terms {
            a.add_term(m, frac(p, q));
        }
        a
    })
}

/// Constructed modules of moderate size.
fn family() -> impl Strategy<Value = FdModule> {
    prop_oneof![
        (0usize..6).prop_map(build_simple),
        (0usize..4, 0usize..3).prop_map(|(n, m)| build_t(n, m)),
        (0usize..5, -2i64..=3).prop_map(|(n, g)| build_s(n, &int(g))),
        (0usize..3, 0usize..3).prop_map(|(a, b)| direct_sum(&build_simple(a), &build_t(b, 1))),
    ]
}

fn flatten(m: &Matrix) -> Vec<Rational> {
    m.entries().to_vec()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn kernel_vectors_are_annihilated(a in small_matrix(5)) {
        let k = kernel(&a);
        for v in k.basis() {
            prop_assert!(a.apply(v).iter().all(|c| *c == int(0)));
        }
        prop_assert_eq!(rank(&a) + k.dim(), a.cols());
    }

    #[test]
    fn inverse_is_two_sided(n in 1usize..5, e in prop::collection::vec(-4i64..=4, 16)) {
        let a = matrix(n, n, &e[..n * n]);
        prop_assume!(rank(&a) == n);
        let inv = inverse(&a).unwrap();
        prop_assert!((&inv * &a).is_identity());
        prop_assert!((&a * &inv).is_identity());
    }

    #[test]
    fn associativity(a in monomial(2), b in monomial(2), c in monomial(2)) {
        let (a, b, c) = (AlgebraElement::monomial(a), AlgebraElement::monomial(b), AlgebraElement::monomial(c));
        prop_assert_eq!(multiply(&multiply(&a, &b), &c), multiply(&a, &multiply(&b, &c)));
    }

    #[test]
    fn products_respect_the_grading(a in monomial(4), b in monomial(4)) {
        let p = multiply_monomials(&a, &b);
        for (m, _) in p.terms() {
            prop_assert_eq!(m.grade(), a.grade() + b.grade());
        }
    }

    #[test]
    fn reduction_order_does_not_matter(w in word(6)) {
        prop_assert_eq!(normal_form(&w), normal_form_right_to_left(&w));
    }

    #[test]
    fn printed_elements_reparse(a in element()) {
        prop_assert_eq!(expr::evaluate(&a.to_string()).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn hopf_axioms_on_random_samples(seed in any::<u64>()) {
        let r = hopf_axiom_suite(4, 4, seed);
        prop_assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn constructed_modules_verify(m in family()) {
        let r = verify_module(&m);
        prop_assert!(r.all_pass(), "{:?}", r.failed());
    }

    #[test]
    fn weight_spaces_fill_the_module(m in family()) {
        let xi = m.mat(Generator::Xi);
        let total: usize = integer_eigenspaces(xi, spectral_bound(xi)).iter().map(|(_, s)| s.dim()).sum();
        prop_assert_eq!(total, m.dim());
        prop_assert!(weight_decomposition(&m).unwrap().is_symmetric());
    }

    #[test]
    fn radical_is_a_nilpotent_ideal(m in family()) {
        let end = hom_space(&m, &m).unwrap().basis;
        let rad = algebra_radical(&end);
        let rad_mats: Vec<Matrix> = rad.basis().iter().map(|c| combine(&end, c)).collect();
        let span = Subspace::span(m.dim() * m.dim(), &rad_mats.iter().map(flatten).collect::<Vec<_>>());
        for r in &rad_mats {
            prop_assert!(is_nilpotent(r));
            for e in &end {
                prop_assert!(span.contains(&flatten(&(r * e))));
                prop_assert!(span.contains(&flatten(&(e * r))));
            }
        }
    }

    #[test]
    fn dual_is_an_involution(m in family()) {
        let dd = dual(&dual(&m).unwrap()).unwrap();
        prop_assert_eq!(is_isomorphic(&dd, &m).unwrap(), Decision::Yes);
    }

    #[test]
    fn factors_survive_dualizing(m in family()) {
        // simples are self-dual, so the multiset is unchanged
        prop_assert_eq!(composition_factors(&dual(&m).unwrap()).unwrap(), composition_factors(&m).unwrap());
    }

    #[test]
    fn t_modules_are_uniserial(n in 0usize..5, m in 0usize..3) {
        let t = build_t(n, m);
        prop_assert_eq!(hw_data(&t).unwrap(), ((n + 2 * m) as i64, 1));
        prop_assert_eq!(hw_series(&t).unwrap().len(), 1);
        let layers = socle_layers(&t).unwrap();
        let expected: Vec<Vec<usize>> = (0..=m).map(|k| vec![n + 2 * k]).collect();
        prop_assert_eq!(layers, expected);
    }

    #[test]
    fn tensor_weights_convolve(a in 0usize..4, b in 0usize..4) {
        let p = tensor(&build_simple(a), &build_simple(b)).unwrap();
        let mut expected: BTreeMap<i64, usize> = BTreeMap::new();
        for i in 0..=a {
            for j in 0..=b {
                *expected.entry(a as i64 + b as i64 - 2 * (i + j) as i64).or_default() += 1;
            }
        }
        prop_assert_eq!(weight_decomposition(&p).unwrap().profile(), expected);
    }

    #[test]
    fn extensions_verify(n in 0usize..5, shift in prop::sample::select(vec![0i64, 2, -2]), c in 1i64..4) {
        let m = n as i64 + shift;
        prop_assume!(m >= 0);
        let r = ext1(&build_simple(n), &build_simple(m as usize)).unwrap();
        prop_assume!(r.dimension > 0);
        let coeffs = vec![int(c); r.dimension];
        let e = build_extension(&r, &coeffs).unwrap();
        prop_assert!(verify_module(&e).all_pass());
        let mut expected = weight_decomposition(&r.sub).unwrap().profile();
        for (w, d) in weight_decomposition(&r.quot).unwrap().profile() {
            *expected.entry(w).or_default() += d;
        }
        prop_assert_eq!(weight_decomposition(&e).unwrap().profile(), expected);
    }

    #[test]
    fn separated_quivers_are_bipartite(arrows in prop::collection::btree_map((0usize..4, 0usize..4), 1usize..3, 0..8)) {
        let q = Quiver { vertices: (0..4).collect(), arrows, overrides: vec![] };
        let g = separated_quiver(&q, &[0, 1, 2, 3]);
        prop_assert!(!g.has_loop());
        prop_assert!(g.edges.iter().all(|&(a, b)| a < 4 && b >= 4));
    }

    #[test]
    fn classification_ignores_labels(
        n in 1usize..8,
        raw in prop::collection::vec((0usize..8, 0usize..8), 0..10),
        perm in Just((0..8).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let edges: Vec<(usize, usize)> = raw.into_iter().map(|(a, b)| (a % n, b % n)).collect();
        let labels: Vec<String> = (0..n).map(|k| k.to_string()).collect();
        let perm: Vec<usize> = perm.into_iter().filter(|&k| k < n).collect();
        let g = Graph::new(labels.clone(), edges.clone());
        let h = Graph::new(labels, edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect());
        let key = |g: &Graph| {
            let mut v: Vec<(String, usize, usize)> = classify_graph(g)
                .into_iter()
                .map(|c| (c.class.to_string(), c.vertices.len(), c.edges))
                .collect();
            v.sort();
            v
        };
        prop_assert_eq!(key(&g), key(&h));
    }
}

#[test]
fn ext_duality_on_simples() {
    for a in 0..=6usize {
        for b in 0..=6usize {
            let (la, lb) = (build_simple(a), build_simple(b));
            let lhs = ext1(&la, &lb).unwrap().dimension;
            let rhs = ext1(&dual(&lb).unwrap(), &dual(&la).unwrap()).unwrap().dimension;
            assert_eq!(lhs, rhs, "({a},{b})");
        }
    }
}
