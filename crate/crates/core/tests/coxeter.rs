use balgraph::coxeter::{
    bruhat_graph_sn, dihedral_graph, lex_reflection_order, BruhatGraph, CoxeterGroup,
    DihedralGroup, Permutation, SymmetricGroup,
};
use balgraph::digraph::LabeledDigraph;
use balgraph::ncpoly::{c, CdPoly, IntPoly};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Labeled-digraph isomorphism by trying every vertex and label bijection.
fn isomorphic(g: &LabeledDigraph, h: &LabeledDigraph) -> bool {
    if g.vertex_count() != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.labels().len() != h.labels().len()
    {
        return false;
    }
    let nl = g.labels().len();
    let mut target: Vec<(usize, usize, usize)> = h
        .edges()
        .iter()
        .map(|e| (e.tail, e.head, e.label))
        .collect();
    target.sort();
    for lmap in permutations(nl) {
        let rel_ok =
            (0..nl).all(|a| (0..nl).all(|b| g.related(a, b) == h.related(lmap[a], lmap[b])));
        if !rel_ok {
            continue;
        }
        for vmap in permutations(g.vertex_count()) {
            let mut mapped: Vec<(usize, usize, usize)> = g
                .edges()
                .iter()
                .map(|e| (vmap[e.tail], vmap[e.head], lmap[e.label]))
                .collect();
            mapped.sort();
            if mapped == target {
                return true;
            }
        }
    }
    false
}

/// Bruhat order on permutations by comparing the counts
/// `#{a ≤ i : w(a) ≥ k}` for all `i, k`.
fn tableau_leq(u: &Permutation, v: &Permutation) -> bool {
    let n = u.n();
    (1..=n).all(|i| {
        (1..=n).all(|k| {
            let cu = u.one_line()[..i].iter().filter(|&&x| x >= k).count();
            let cv = v.one_line()[..i].iter().filter(|&&x| x >= k).count();
            cu <= cv
        })
    })
}

fn c_power(k: usize) -> CdPoly {
    c().pow(k)
}

fn check_all_intervals(b: &BruhatGraph) -> usize {
    let mut count = 0;
    for (u, v) in b.strict_pairs() {
        let complete = b.complete_cd_index(u, v).unwrap();
        let ell = b.length(v) - b.length(u);
        assert_eq!(
            complete.homogeneous_part(ell - 1),
            b.poset_cd_index(u, v).unwrap()
        );
        assert!(b.interval(u, v).unwrap().is_balanced().balanced);
        let r = b.r_polynomial_recursive(u, v);
        assert_eq!(b.r_polynomial_dyer(u, v).unwrap(), r);
        assert_eq!(r.degree(), Some(ell));
        assert_eq!(r.leading_coeff(), Some(&1.into()));
        count += 1;
    }
    count
}

#[test]
fn s3_and_s4_sweep() {
    assert_eq!(check_all_intervals(&bruhat_graph_sn(3).unwrap()), 13);
    let b4 = bruhat_graph_sn(4).unwrap();
    assert!(check_all_intervals(&b4) > 0);
}

#[test]
fn s3_named_values() {
    let b = bruhat_graph_sn(3).unwrap();
    let (e, w0) = (b.element("123").unwrap(), b.element("321").unwrap());
    assert_eq!(b.complete_cd_index(e, w0).unwrap().to_string(), "cc + 1");
    assert_eq!(b.poset_cd_index(e, w0).unwrap().to_string(), "cc");
    assert_eq!(
        b.r_polynomial_recursive(e, w0),
        IntPoly::from_i64s(&[-1, 2, -2, 1])
    );
    // rank-two intervals are diamonds
    let (x, y) = (b.element("213").unwrap(), b.element("321").unwrap());
    assert_eq!(b.poset_cd_index(x, y).unwrap(), c());
}

#[test]
fn bruhat_order_matches_tableau_criterion() {
    for n in 2..=4 {
        let group = SymmetricGroup::new(n).unwrap();
        let b = BruhatGraph::new(&group);
        let els = group.elements();
        for u in &els {
            for v in &els {
                let (iu, iv) = (
                    b.element(&u.to_string()).unwrap(),
                    b.element(&v.to_string()).unwrap(),
                );
                assert_eq!(b.leq(iu, iv), tableau_leq(u, v), "{u} {v}");
            }
        }
    }
}

#[test]
fn edges_change_length_by_odd_amounts() {
    for n in 2..=5 {
        let b = bruhat_graph_sn(n).unwrap();
        for e in b.graph().edges() {
            assert_eq!((b.length(e.head) - b.length(e.tail)) % 2, 1);
        }
    }
}

#[test]
fn reversed_reflection_order_keeps_cd_index() {
    let group = SymmetricGroup::new(4).unwrap();
    let b = BruhatGraph::new(&group);
    let r = BruhatGraph::new(&group.reversed());
    for (u, v) in b.strict_pairs() {
        let (ru, rv) = (r.element(b.name(u)).unwrap(), r.element(b.name(v)).unwrap());
        assert_eq!(
            b.complete_cd_index(u, v).unwrap(),
            r.complete_cd_index(ru, rv).unwrap()
        );
        assert_eq!(
            b.r_polynomial_dyer(u, v).unwrap(),
            r.r_polynomial_dyer(ru, rv).unwrap()
        );
    }
    assert_eq!(group.reflection_order(), lex_reflection_order(4).as_slice());
}

#[test]
fn r_polynomials_invert() {
    // Σ_{u≤z≤v} (−1)^{ℓ(u,z)} R_{u,z} R_{z,v} = δ_{u,v}
    let b = bruhat_graph_sn(4).unwrap();
    let n = b.graph().vertex_count();
    for u in 0..n {
        for v in 0..n {
            if !b.leq(u, v) {
                continue;
            }
            let mut total = IntPoly::zero();
            for z in 0..n {
                if b.leq(u, z) && b.leq(z, v) {
                    let t = &b.r_polynomial_recursive(u, z) * &b.r_polynomial_recursive(z, v);
                    total = if (b.length(z) - b.length(u)) % 2 == 1 {
                        &total - &t
                    } else {
                        &total + &t
                    };
                }
            }
            let want = if u == v {
                IntPoly::one()
            } else {
                IntPoly::zero()
            };
            assert_eq!(total, want);
        }
    }
}

#[test]
fn dihedral_intervals() {
    let s3 = bruhat_graph_sn(3).unwrap();
    let s3_top = s3.interval(s3.identity(), s3.top()).unwrap();
    assert!(isomorphic(&dihedral_graph(3, 3).unwrap(), &s3_top));
    assert!(!isomorphic(&dihedral_graph(3, 2).unwrap(), &s3_top));
    for m in 2..=7 {
        let group = DihedralGroup::new(m).unwrap();
        let b = BruhatGraph::new(&group);
        for k in 1..=m {
            let g = dihedral_graph(m, k).unwrap();
            assert!(g.is_balanced().balanced);
            let top = b
                .element(&group.element_name(&group.element_of_length(k).unwrap()))
                .unwrap();
            assert_eq!(b.poset_cd_index(b.identity(), top).unwrap(), c_power(k - 1));
            b.complete_cd_index(b.identity(), top).unwrap();
        }
        check_all_intervals(&b);
    }
    assert_eq!(dihedral_graph(4, 1).unwrap().edge_count(), 1);
}

#[test]
fn s5_longest_interval() {
    let b = bruhat_graph_sn(5).unwrap();
    let (e, w0) = (b.identity(), b.top());
    let cd = b.complete_cd_index(e, w0).unwrap();
    assert_eq!(cd.homogeneous_part(9), b.poset_cd_index(e, w0).unwrap());
    assert_eq!(
        b.r_polynomial_dyer(e, w0).unwrap(),
        b.r_polynomial_recursive(e, w0)
    );
    assert!(cd.is_nonnegative());
}
