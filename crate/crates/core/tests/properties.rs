mod support;

use lkoszul::basis::{hilbert_from_basis, hilbert_from_linalg};
use lkoszul::field::{Matrix, PrimeField, Row, Subspace};
use lkoszul::graph::{parse, to_text, VertexId};
use lkoszul::koszul::{
    euler_check, is_distributive, lattice_closure, lemma42_check, relation_family, tor_table,
    Distributivity,
};
use lkoszul::relations::{
    full_relation_span, leading_part, p_span, quadratic_generators_a, quadratic_generators_gr,
    quadratic_relations_a, quadratic_relations_gr, s_span, theta_path_coeff, v_word,
};
use lkoszul::tensor::{f_map, weight, word_at, word_index};
use lkoszul::Caps;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::*;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every vector of `F_p^d`, for brute-force membership oracles.
fn all_vectors(p: u32, d: usize) -> Vec<Row<u32>> {
    let total = (p as usize).pow(d as u32);
    (0..total)
        .map(|mut i| {
            let mut row = Vec::new();
            for c in 0..d {
                let x = (i % p as usize) as u32;
                i /= p as usize;
                if x != 0 {
                    row.push((c, x));
                }
            }
            row
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn intersection_matches_brute_force(seed in any::<u64>()) {
        let f = PrimeField::new(3).unwrap();
        let mut r = rng(seed);
        let d = r.gen_range(1..=4);
        let a = random_subspace_any(&mut r, &f, d);
        let b = random_subspace_any(&mut r, &f, d);
        let meet = a.intersect(&b).unwrap();
        let join = a.sum(&b).unwrap();
        let mut in_meet = 0;
        for v in all_vectors(3, d) {
            prop_assert_eq!(meet.contains(&v), a.contains(&v) && b.contains(&v));
            if meet.contains(&v) {
                in_meet += 1;
            }
        }
        prop_assert_eq!(in_meet, 3usize.pow(meet.dim() as u32));
        prop_assert!(join.contains_subspace(&a) && join.contains_subspace(&b));
        prop_assert_eq!(a.dim() + b.dim(), join.dim() + meet.dim());
    }

    #[test]
    fn canonical_form_ignores_generating_set(seed in any::<u64>()) {
        let f = PrimeField::default();
        let mut r = rng(seed);
        let d = r.gen_range(1..=12);
        let a = random_subspace_any(&mut r, &f, d);
        let b = random_subspace_any(&mut r, &f, d);
        let a2 = Subspace::span(&f, d, shuffled_rows(&mut r, &a));
        let b2 = Subspace::span(&f, d, shuffled_rows(&mut r, &b));
        prop_assert_eq!(&a2, &a);
        prop_assert_eq!(a.sum(&b).unwrap(), b2.sum(&a2).unwrap());
        prop_assert_eq!(a.intersect(&b).unwrap(), b2.intersect(&a2).unwrap());
    }

    #[test]
    fn rank_nullity(seed in any::<u64>()) {
        let f = PrimeField::default();
        let mut r = rng(seed);
        let (rows, cols) = (r.gen_range(0..=8), r.gen_range(0..=8));
        let m = random_matrix(&mut r, &f, rows, cols);
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), cols);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        for v in k.rows() {
            prop_assert!(m.apply(v).is_empty());
        }
    }

    #[test]
    fn image_and_preimage(seed in any::<u64>()) {
        let f = PrimeField::default();
        let mut r = rng(seed);
        let (rows, cols) = (r.gen_range(1..=7), r.gen_range(1..=7));
        let m = random_matrix(&mut r, &f, rows, cols);
        let s = random_subspace_any(&mut r, &f, cols);
        let img = m.image(&s).unwrap();
        prop_assert!(m.preimage(&img).unwrap().contains_subspace(&s));
        let c = random_subspace_any(&mut r, &f, rows);
        let pre = m.preimage(&c).unwrap();
        prop_assert!(pre.contains_subspace(&m.kernel()));
        prop_assert!(c.contains_subspace(&m.image(&pre).unwrap()));
    }

    #[test]
    fn image_of_intersection_with_preimage(seed in any::<u64>()) {
        let f = PrimeField::default();
        let mut r = rng(seed);
        let (rows, cols) = (r.gen_range(1..=7), r.gen_range(1..=7));
        let h = random_matrix(&mut r, &f, rows, cols);
        let a = random_subspace_any(&mut r, &f, cols);
        let c = random_subspace_any(&mut r, &f, rows);
        let b = h.preimage(&c).unwrap();
        let lhs = h.image(&a).unwrap().intersect(&h.image(&b).unwrap()).unwrap();
        let rhs = h.image(&a.intersect(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kron_dimension_and_complement(seed in any::<u64>()) {
        let f = PrimeField::default();
        let mut r = rng(seed);
        let (d1, d2) = (r.gen_range(0..=5), r.gen_range(0..=5));
        let a = random_subspace_any(&mut r, &f, d1);
        let b = random_subspace_any(&mut r, &f, d2);
        let ab = a.kron(&b).unwrap();
        prop_assert_eq!(ab.dim(), a.dim() * b.dim());
        prop_assert_eq!(&Subspace::span(&f, d1 * d2, ab.rows().to_vec()), &ab);
        let c = a.orthogonal_complement();
        prop_assert_eq!(c.dim() + a.dim(), d1);
        prop_assert_eq!(c.orthogonal_complement(), a);
    }

    #[test]
    fn f_map_deletes_one_letter(seed in any::<u64>()) {
        let f = PrimeField::default();
        let mut r = rng(seed);
        let n = r.gen_range(1..=4);
        let k = r.gen_range(1..=4);
        let pos = r.gen_range(0..k);
        let m = f_map(&f, n, k, pos, 10_000).unwrap();
        let idx = r.gen_range(0..n.pow(k as u32));
        let mut w = word_at(n, k, idx);
        w.remove(pos);
        prop_assert_eq!(m.apply(&vec![(idx, 1)]), vec![(word_index(n, &w), 1)]);
    }

    #[test]
    fn graph_structure(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_layered_graph(&mut r, 4, 4);
        prop_assert!(g.validate().is_empty());
        prop_assert_eq!(&parse(&to_text(&g)).unwrap(), &g);
        for v in g.vertices() {
            let heads: std::collections::BTreeSet<VertexId> =
                g.out_edges(v).iter().map(|&e| g.edge(e).head).collect();
            let s1: std::collections::BTreeSet<VertexId> = g.s_set(v, 1).into_iter().collect();
            if g.level(v) > 0 {
                prop_assert_eq!(&heads, &s1);
                let t = g.tower(v);
                prop_assert_eq!(t.len(), g.level(v) + 1);
                prop_assert!(t.windows(2).all(|p| g.level(p[0]) == g.level(p[1]) + 1));
            }
            for w in g.vertices() {
                // greater_than is the transitive closure of the edge relation
                let via = heads.iter().any(|&h| h == w || g.greater_than(h, w));
                prop_assert_eq!(g.greater_than(v, w), via);
                if g.greater_than(v, w) {
                    prop_assert!(g.level(v) > g.level(w));
                }
            }
        }
    }

    #[test]
    fn theta_leading_term(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_layered_graph(&mut r, 4, 3);
        let star = g.star().unwrap();
        for v in g.positive_vertices() {
            for p in g.enumerate_paths(v, star, 1000).unwrap() {
                for k in 1..=p.len() {
                    let t = theta_path_coeff(&g, &p, k).unwrap();
                    let lead = v_word(&g, &p, k).unwrap();
                    let top = weight(&g, &lead);
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    prop_assert_eq!(t.coeff(&lead), sign);
                    for (w, _) in t.terms() {
                        prop_assert_eq!(w.len(), k);
                        prop_assert!(weight(&g, w) < top || w == lead.as_slice());
                    }
                }
            }
        }
    }

    #[test]
    fn graded_relations_are_leading_terms(seed in any::<u64>()) {
        let f = PrimeField::default();
        let mut r = rng(seed);
        let g = random_uniform_graph(&mut r, 4, 3);
        let n = g.num_positive();
        let lead: Vec<_> = quadratic_generators_a(&g)
            .unwrap()
            .iter()
            .map(|x| leading_part(&g, x).to_row(&f, n))
            .collect();
        let gr = quadratic_relations_gr(&g, &f).unwrap();
        prop_assert_eq!(&Subspace::span(&f, n * n, lead), gr.relation_space());
        // gr R_2 = Σ_v v ⊗ P_1(v)
        let parts: Vec<Subspace<PrimeField>> = g
            .positive_vertices()
            .map(|v| s_span(&g, &f, v, 0).kron(&p_span(&g, &f, v, 1)).unwrap())
            .collect();
        prop_assert_eq!(&Subspace::sum_all(&f, n * n, &parts).unwrap(), gr.relation_space());
        prop_assert!(quadratic_generators_gr(&g).unwrap().len() >= gr.relation_space().dim());
    }

    #[test]
    fn p_span_is_kernel_of_f_on_s_span(seed in any::<u64>()) {
        let f = PrimeField::default();
        let mut r = rng(seed);
        let g = random_layered_graph(&mut r, 4, 4);
        let n = g.num_positive();
        let ones = Matrix::from_rows(&f, n, vec![(0..n).map(|i| (i, 1)).collect()]);
        for v in g.positive_vertices() {
            for l in 0..=g.level(v) + 1 {
                let s = s_span(&g, &f, v, l);
                let p = p_span(&g, &f, v, l);
                prop_assert_eq!(&s.intersect(&ones.kernel()).unwrap(), &p);
                prop_assert_eq!(p.dim(), s.dim().saturating_sub(1));
            }
        }
    }

    #[test]
    fn quadratic_generation_on_random_uniform_graphs(seed in any::<u64>()) {
        let f = PrimeField::default();
        let caps = Caps::default();
        let mut r = rng(seed);
        let g = random_uniform_graph(&mut r, 4, 3);
        let q = quadratic_relations_a(&g, &f).unwrap();
        for k in 1..=3 {
            prop_assert_eq!(
                full_relation_span(&g, &f, k, &caps).unwrap(),
                q.ideal_component(k, caps.ambient).unwrap()
            );
        }
    }

    #[test]
    fn basis_counts_match_linear_algebra(seed in any::<u64>()) {
        let f = PrimeField::default();
        let caps = Caps::default();
        let mut r = rng(seed);
        let g = random_uniform_graph(&mut r, 4, 3);
        let gr = hilbert_from_linalg(&quadratic_relations_gr(&g, &f).unwrap(), 3, &caps).unwrap();
        let a = hilbert_from_linalg(&quadratic_relations_a(&g, &f).unwrap(), 3, &caps).unwrap();
        prop_assert_eq!(&hilbert_from_basis(&g, 3), &gr);
        prop_assert_eq!(&a, &gr);
    }

    #[test]
    fn lemma42_on_random_uniform_graphs(seed in any::<u64>()) {
        let f = PrimeField::default();
        let mut r = rng(seed);
        let g = random_uniform_graph(&mut r, 4, 3);
        for k in 2..=3 {
            prop_assert!(lemma42_check(&g, &f, k, &Caps::default()).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tor_vanishing_implies_euler_condition(seed in any::<u64>()) {
        use lkoszul::relations::QuadraticPresentation;
        let f = PrimeField::default();
        let mut r = rng(seed);
        let n = r.gen_range(1..=3);
        let rel = random_subspace_any(&mut r, &f, n * n);
        let p = QuadraticPresentation::new(n, rel).unwrap();
        let t = tor_table(&p, 6, 100_000).unwrap();
        prop_assert_eq!(t.get(1, 1), Some(n));
        prop_assert_eq!(t.get(2, 2), Some(p.relation_space().dim()));
        for j in 2..=5 {
            prop_assert_eq!(t.get(1, j), Some(0));
        }
        if t.koszul_up_to_bound() {
            let e = euler_check(&p, 3, 100_000).unwrap();
            prop_assert!(e.iter().all(|&x| x == 0), "residuals {:?}", e);
        }
    }

    #[test]
    fn distributivity_ignores_generator_order(seed in any::<u64>()) {
        let f = PrimeField::default();
        let mut r = rng(seed);
        let g = random_uniform_graph(&mut r, 3, 3);
        let q = quadratic_relations_gr(&g, &f).unwrap();
        let v = g.positive_vertices().max_by_key(|&v| g.level(v)).unwrap();
        let mut fam = relation_family(&g, &q, 3, Some((v, 1)), 100_000).unwrap();
        let first = lattice_closure(&fam, 5000).unwrap();
        use rand::seq::SliceRandom;
        fam.shuffle(&mut r);
        let second = lattice_closure(&fam, 5000).unwrap();
        prop_assert_eq!(first.len(), second.len());
        prop_assert_eq!(
            is_distributive(&first) == Distributivity::Distributive,
            is_distributive(&second) == Distributivity::Distributive
        );
    }
}

#[test]
fn distributive_lattice_of_m3_fails_under_every_order() {
    let f = PrimeField::default();
    let lines: Vec<Subspace<PrimeField>> = [vec![(0, 1)], vec![(1, 1)], vec![(0, 1), (1, 1)]]
        .into_iter()
        .map(|r| Subspace::span(&f, 2, vec![r]))
        .collect();
    for perm in [[0, 1, 2], [2, 0, 1], [1, 2, 0]] {
        let fam: Vec<_> = perm.iter().map(|&i| lines[i].clone()).collect();
        let lat = lattice_closure(&fam, 100).unwrap();
        assert_ne!(is_distributive(&lat), Distributivity::Distributive);
    }
}
