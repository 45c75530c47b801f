use balgraph::construct::{
    butterfly, conjecture_search, d_join, glue_sum, in_conjecture_scope, realize, SearchParams,
};
use balgraph::digraph::{ab_index_brute_force, descent_word, for_each_path, LabeledDigraph};
use balgraph::fixtures;
use balgraph::ncpoly::{ab_to_cd, cd_words_of_degree, parse_ab, parse_cd, CdPoly};
use balgraph::random::{random_bounded_digraph, RandomGraphParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_cd(rng: &mut impl Rng, max_degree: usize) -> CdPoly {
    let mut p = CdPoly::zero();
    while p.is_zero() {
        for _ in 0..rng.gen_range(1..=4) {
            let words = cd_words_of_degree(rng.gen_range(0..=max_degree));
            let w = words[rng.gen_range(0..words.len())].clone();
            p.add_term(w, rng.gen_range(0..=3).into());
        }
    }
    p
}

/// Ψ by listing paths, then converted.
fn cd_by_paths(g: &LabeledDigraph) -> CdPoly {
    let (s, t) = g.proper_bounds().unwrap();
    ab_to_cd(&ab_index_brute_force(g, s, t)).unwrap()
}

fn balanced_linear_graphs(seed: u64, count: usize) -> Vec<LabeledDigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = RandomGraphParams {
        max_vertices: 6,
        ..Default::default()
    };
    let mut out = Vec::new();
    while out.len() < count {
        let g = random_bounded_digraph(&mut rng, &p);
        if g.is_balanced().balanced {
            out.push(g);
        }
    }
    out
}

#[test]
fn realize_roundtrip() {
    let mut rng = ChaCha8Rng::seed_from_u64(81);
    for _ in 0..100 {
        let w = random_cd(&mut rng, 6);
        let g = realize(&w).unwrap();
        assert!(g.relation().is_linear());
        assert!(g.is_balanced().balanced);
        assert_eq!(cd_by_paths(&g), w);
    }
}

#[test]
fn realize_named_targets() {
    for s in ["d", "2*c + 3", "cdc + 2*dd", "1", "ccc + cd + dc"] {
        let w = parse_cd(s).unwrap();
        let g = realize(&w).unwrap();
        assert_eq!(g.cd_index().unwrap(), w, "{s}");
        assert!(in_conjecture_scope(&g));
    }
    assert_eq!(realize(&parse_cd("d").unwrap()).unwrap().vertex_count(), 4);
}

#[test]
fn fig1_left_value_by_gluing() {
    let edge = butterfly(0);
    let mut g = glue_sum(&butterfly(1), &butterfly(1)).unwrap();
    for _ in 0..3 {
        g = glue_sum(&g, &edge).unwrap();
    }
    assert_eq!(
        g.cd_index().unwrap(),
        fixtures::fig1_left().cd_index().unwrap()
    );
    assert_eq!(g.cd_index().unwrap(), parse_cd("2*c + 3").unwrap());
}

#[test]
fn join_words_at_the_seam() {
    let g1 = butterfly(2);
    let g2 = fixtures::fig1_left();
    let h = d_join(&g1, &g2).unwrap();
    let (s, t) = h.proper_bounds().unwrap();
    let split = g1.path_lengths(0, g1.vertex_count() - 1);
    assert_eq!(split, vec![3]);
    let (mut low, mut high) = (0, 0);
    for_each_path(&h, s, t, |p| {
        let w = descent_word(&h, p).to_string();
        let seam = &w[split[0] - 1..split[0] + 1];
        let mid = h.edge(p[split[0]]);
        match h.label_name(mid.label) {
            "1" => {
                assert_eq!(seam, "ba");
                low += 1;
            }
            _ => {
                assert_eq!(seam, "ab");
                high += 1;
            }
        }
    });
    assert!(low > 0 && low == high);
    let d = parse_ab("ab + ba").unwrap();
    let want = &(&g1.ab_index_bounded().unwrap() * &d) * &g2.ab_index_bounded().unwrap();
    assert_eq!(h.ab_index_bounded().unwrap(), want);
}

#[test]
fn random_pairs_add_and_join() {
    let graphs = balanced_linear_graphs(82, 30);
    for pair in graphs.chunks(2) {
        let (g, h) = (&pair[0], &pair[1]);
        let (pg, ph) = (g.cd_index().unwrap(), h.cd_index().unwrap());
        let sum = glue_sum(g, h).unwrap();
        assert!(sum.is_balanced().balanced && sum.relation().is_linear());
        assert_eq!(cd_by_paths(&sum), &pg + &ph);
        let join = d_join(g, h).unwrap();
        assert!(join.is_balanced().balanced && join.relation().is_linear());
        assert_eq!(cd_by_paths(&join), &(&pg * &parse_cd("d").unwrap()) * &ph);
    }
}

#[test]
fn joins_of_fixture_pairs_are_balanced() {
    let pool: Vec<LabeledDigraph> = fixtures::all()
        .into_iter()
        .map(|(_, g)| g)
        .filter(in_conjecture_scope)
        .collect();
    assert!(pool.len() >= 3);
    for g in &pool {
        for h in &pool {
            assert!(d_join(g, h).unwrap().is_balanced().balanced);
        }
    }
}

#[test]
fn negative_example_is_out_of_scope() {
    let g = fixtures::fig2_relation_ii();
    assert!(g.is_balanced().balanced);
    assert!(!g.cd_index().unwrap().is_nonnegative());
    assert!(!in_conjecture_scope(&g));
    assert!(in_conjecture_scope(&fixtures::fig2_relation_i()));
}

#[test]
fn search_report() {
    let p = SearchParams {
        seed: 7,
        trials: 2000,
        ..Default::default()
    };
    let r = conjecture_search(&p);
    assert_eq!(r, conjecture_search(&p));
    assert!(r.balanced > 0 && r.nontrivial > 0);
    for c in &r.counterexamples {
        let g = LabeledDigraph::from_json(&c.graph).unwrap();
        assert!(!cd_by_paths(&g).is_nonnegative());
    }
    println!(
        "{} trials: {} balanced, {} nontrivial, {} candidates",
        r.trials,
        r.balanced,
        r.nontrivial,
        r.counterexamples.len()
    );
}
