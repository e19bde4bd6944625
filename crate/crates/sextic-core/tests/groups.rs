use sextic_core::groups::*;
use sextic_core::{CycloNum, Field};

fn g(name: &str) -> SubgroupTable {
    build_group(GroupName::parse(name).unwrap()).unwrap()
}

#[test]
fn tables_are_consistent() {
    for name in ["C1", "C2", "C3", "C4", "C6", "C8", "Q8", "Dic12", "Q16", "BinTetra", "BinOcta"] {
        let t = g(name);
        t.verify().unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn class_sizes() {
    let sizes = |t: &SubgroupTable| t.classes.iter().map(Vec::len).collect::<Vec<_>>();
    assert_eq!(sizes(&g("BinOcta")), [1, 1, 8, 6, 12, 8, 6, 6]);
    assert_eq!(sizes(&g("BinTetra")), [1, 1, 6, 4, 4, 4, 4]);
    assert_eq!(sizes(&g("Q16")), [1, 1, 2, 2, 2, 4, 4]);
    assert_eq!(sizes(&g("Dic12")), [1, 1, 2, 2, 3, 3]);
    assert_eq!(g("Q8").classes.len(), 5);
    assert_eq!(g("C4").order(), 4);
    assert!(matches!(GroupName::parse("C5"), Err(GroupError::UnknownGroup(_))));
    assert!(matches!(GroupName::parse("Icosa"), Err(GroupError::UnknownGroup(_))));
}

#[test]
fn vn_decompositions() {
    let s4 = g("BinOcta");
    assert_eq!(decompose(&s4, &char_vn(&s4, 25)).unwrap(), [0, 0, 0, 3, 2, 0, 0, 4]);
    let q16 = g("Q16");
    assert_eq!(decompose(&q16, &char_vn(&q16, 9)).unwrap(), [0, 0, 0, 0, 0, 3, 2]);
    let q8 = g("Q8");
    assert_eq!(decompose(&q8, &char_vn(&q8, 5)).unwrap(), [0, 0, 0, 0, 3]);
    let mut vals = vec![CycloNum::zero(); 5];
    vals[0] = CycloNum::one();
    let bad = ClassFunction { values: vals };
    assert!(matches!(multiplicity(&q8, &bad, 0), Err(GroupError::NonIntegralMultiplicity(..))));
}

#[test]
fn embedding_counts() {
    let s4 = g("BinOcta");
    let count = |src: &str, filter: Option<usize>| {
        let s = g(src);
        let f = filter.map(|k| s.generators[k]);
        classify_embeddings(&s, &s4, f).len()
    };
    assert_eq!(count("Q8", None), 4);
    assert_eq!(count("Q8", Some(0)), 2);
    assert_eq!(count("Dic12", None), 2);
    assert_eq!(count("Q16", None), 4);
    assert_eq!(count("Q16", Some(1)), 2);
    assert_eq!(count("BinTetra", None), 1);
    assert_eq!(count("BinOcta", None), 2);
}

#[test]
fn dicyclic_automorphism_counts() {
    let r3 = dicyclic_automorphisms(3);
    assert_eq!(r3.automorphisms.len(), 12);
    assert_eq!(r3.outer_classes.len(), 2);
    let r4 = dicyclic_automorphisms(4);
    assert_eq!(r4.automorphisms.len(), 32);
    assert_eq!(r4.outer_classes.len(), 4);
    assert!(r4.outer_exponent_two);
    for (name, n) in [("Dic12", 12), ("Q16", 32)] {
        let t = g(name);
        assert_eq!(all_embeddings(&t, &t).len(), n);
    }
}

#[test]
fn j_is_a_homomorphism() {
    let r = verify_isomorphism_j().unwrap();
    println!("right_to_left = {}", r.right_to_left);
}

#[test]
fn projection_rank_matches_multiplicity() {
    let t = g("Q8");
    let rep = TwistedRep::new(&t, 5, t.elements.clone());
    let chi = rep.character(&t);
    for k in 0..5 {
        let p = projection_operator(&t, &rep, k);
        let m = multiplicity(&t, &chi, k).unwrap();
        assert_eq!(sextic_core::linalg::rank(&p), m * t.dims[k], "irrep {k}");
    }
}

#[test]
fn small_examples() {
    assert_eq!(char_vn_element(&t_mat(1, 1), 1), CycloNum::sqrt2());
    let s4 = g("BinOcta");
    assert_eq!(char_vn(&s4, 6).values[s4.identity()], CycloNum::from_int(7));
    let t12 = t_mat(1, 2);
    let powers: Vec<_> = (0..4).scan(sextic_core::Mat2::identity(), |m, _| {
        let out = m.clone();
        *m = m.mul(&t12);
        Some(out)
    }).collect();
    let c4 = g("C4");
    assert_eq!(c4.order(), 4);
    assert!(powers.iter().all(|p| c4.index_of(p).is_some()));
    let t = g("BinTetra");
    let chi = char_vn(&t, 5);
    for k in t.linear_irreps() {
        assert_eq!(multiplicity(&t, &chi, k).unwrap(), 0);
    }
    let r3 = dicyclic_automorphisms(3);
    assert_eq!(r3.automorphisms.len() / r3.outer_classes.len(), 6);
}

#[test]
fn projectors_decompose_the_identity() {
    let t = g("Q8");
    let rep = TwistedRep::new(&t, 3, t.elements.clone());
    let n = rep.dim();
    let mut sum = vec![vec![CycloNum::zero(); n]; n];
    for k in 0..t.dims.len() {
        let p = projection_operator(&t, &rep, k);
        assert_eq!(sextic_core::linalg::mat_mul(&p, &p), p, "irrep {k}");
        for i in 0..n {
            for j in 0..n {
                sum[i][j] = sum[i][j].add_ref(&p[i][j]);
            }
        }
    }
    for (i, row) in sum.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            assert_eq!(*v, if i == j { CycloNum::one() } else { CycloNum::zero() });
        }
    }
}

#[test]
fn j_examples() {
    let j = |i: u8, k: usize| Perm::parse(J_TABLE[i as usize - 1][k]).unwrap();
    assert_eq!(Perm::parse("Id").unwrap(), Perm::identity());
    let r = verify_isomorphism_j().unwrap();
    assert_eq!(r.pairs_checked, 24 * 24);
    let prod = t_mat(1, 1).mul(&t_mat(3, 0));
    let s4 = g("BinOcta");
    let label = &s4.labels[s4.index_of(&prod).unwrap()];
    let (i, k) = (label.as_bytes()[1] - b'0', (label.as_bytes()[2] - b'0') as usize);
    let composed = if r.right_to_left { j(1, 1).after(&j(3, 0)) } else { j(3, 0).after(&j(1, 1)) };
    assert_eq!(composed, j(i, k % 4));
}
