use orbifold_core::corpus;
use orbifold_core::orbifold::{chi_inclusion_exclusion_check, GroupKind};
use orbifold_core::strata::{self, extract_neat_decomposition, is_closed, strata_poset, stratify};
use orbifold_core::Rational;

#[test]
fn strata_partition_the_cells() {
    for e in corpus::all_entries() {
        let o = &e.orbifold;
        let strata = stratify(o).unwrap();
        let mut owner = vec![usize::MAX; o.complex().len()];
        for s in &strata {
            for &c in &s.cells {
                assert_eq!(owner[c], usize::MAX, "{}: cell in two strata", e.name);
                owner[c] = s.id;
                assert!(o.label(c).same_type(&s.label), "{}", e.name);
            }
        }
        assert!(owner.iter().all(|&x| x != usize::MAX), "{}", e.name);
        let singular: usize = strata.iter().filter(|s| s.is_singular()).map(|s| s.cells.len()).sum();
        assert_eq!(singular, o.singular_cells().len(), "{}", e.name);
    }
}

#[test]
fn posets_are_antisymmetric_and_minimal_strata_closed() {
    for e in corpus::all_entries() {
        let o = &e.orbifold;
        let poset = strata_poset(o, stratify(o).unwrap()).unwrap();
        assert!(poset.is_partial_order(), "{}", e.name);
        for i in 0..poset.len() {
            for j in 0..poset.len() {
                if i != j {
                    assert!(!(poset.leq(i, j) && poset.leq(j, i)), "{}: {i} {j}", e.name);
                }
            }
        }
        for m in poset.minimal_strata() {
            assert!(is_closed(o, &poset.strata[m]), "{}: stratum {m}", e.name);
        }
    }
}

#[test]
fn orders_grow_properly_on_the_frontier() {
    for e in corpus::all_entries() {
        let o = &e.orbifold;
        let k = o.complex();
        for s in stratify(o).unwrap() {
            let closure = k.closure_mask(s.cells.iter().copied());
            for c in (0..k.len()).filter(|&c| closure[c] && !s.cells.contains(&c)) {
                let (inner, outer) = (s.label.order(), o.label(c).order());
                assert!(outer % inner == 0 && outer > inner, "{}: {} on stratum {}", e.name, k.simplex(c), s.id);
            }
        }
    }
}

#[test]
fn extracted_decompositions_satisfy_the_boundary_identities() {
    for e in corpus::all_entries() {
        let o = &e.orbifold;
        let poset = strata_poset(o, stratify(o).unwrap()).unwrap();
        for m in poset.minimal_strata().into_iter().filter(|&m| poset.strata[m].is_singular()) {
            let d = extract_neat_decomposition(o, m).unwrap();
            let checks = d.checks();
            assert_eq!(checks.boundary_identities(), [true; 3], "{}: stratum {m}", e.name);
            assert!(checks.all(), "{}: stratum {m}: {checks:?}", e.name);
            assert!(
                chi_inclusion_exclusion_check(&d.whole, &d.first.orbifold, &d.second.orbifold).unwrap(),
                "{}",
                e.name
            );
            let chi = |x: &orbifold_core::OrbifoldComplex| x.euler_char().unwrap();
            assert_eq!(
                chi(&d.whole),
                chi(&d.first.orbifold) + chi(&d.second.orbifold) - chi(&d.intersection.orbifold),
                "{}",
                e.name
            );
        }
    }
}

#[test]
fn extraction_rejects_regular_and_non_minimal_strata() {
    let o = corpus::entry("d3_t12").unwrap().orbifold;
    let poset = strata_poset(&o, stratify(&o).unwrap()).unwrap();
    let regular = (0..poset.len()).find(|&i| !poset.strata[i].is_singular()).unwrap();
    assert!(matches!(extract_neat_decomposition(&o, regular), Err(strata::StrataError::SingularOnly(_))));
    let minimal = poset.minimal_strata();
    let other = (0..poset.len())
        .find(|&i| poset.strata[i].is_singular() && !minimal.contains(&i))
        .unwrap();
    assert!(matches!(extract_neat_decomposition(&o, other), Err(strata::StrataError::NotMinimal(_))));
}

#[test]
fn tetrahedral_rotation_quotient_strata_and_chains() {
    let o = corpus::entry("d3_t12").unwrap().orbifold;
    let poset = strata_poset(&o, stratify(&o).unwrap()).unwrap();
    let mut singular: Vec<(u64, usize)> = poset
        .strata
        .iter()
        .filter(|s| s.is_singular())
        .map(|s| (s.label.order(), s.dim))
        .collect();
    singular.sort_unstable();
    assert_eq!(singular, vec![(2, 1), (3, 1), (3, 1), (12, 0)]);

    let chains = poset.complete_chains(true);
    assert_eq!(chains.len(), 3);
    let mut shapes: Vec<(u64, u64)> = chains
        .iter()
        .map(|c| {
            assert_eq!(c.len(), 2);
            (poset.strata[c[0]].label.order(), poset.strata[c[1]].label.order())
        })
        .collect();
    shapes.sort_unstable();
    assert_eq!(shapes, vec![(12, 2), (12, 3), (12, 3)]);
    let center = &poset.strata[chains[0][0]];
    assert!(matches!(center.label.kind(), GroupKind::Named(_)));
    assert_eq!(strata::stratum_is_manifold(&o, center), Some(true));
}

#[test]
fn full_symmetry_quotient_boundary_corners() {
    let o = corpus::entry("d3_t24").unwrap().orbifold;
    assert_eq!(o.euler_char().unwrap(), Rational::new(1, 24));
    let b = o.orbifold_boundary().unwrap();
    assert_eq!(b.dim(), Some(2));
    assert_eq!(b.complex().euler_char_top(), 1);
    let mut corners: Vec<u64> = b
        .complex()
        .cells_of_dim(0)
        .filter(|&v| *b.label(v).kind() == GroupKind::Dihedral)
        .map(|v| b.label(v).order() / 2)
        .collect();
    corners.sort_unstable();
    assert_eq!(corners, vec![2, 3, 3]);
    assert_eq!(b.euler_char().unwrap(), Rational::new(1, 12));
}

#[test]
fn manifold_has_one_stratum_and_no_singular_chains() {
    let o = corpus::entry("ball").unwrap().orbifold;
    let poset = strata_poset(&o, stratify(&o).unwrap()).unwrap();
    assert_eq!(poset.len(), 1);
    assert!(poset.complete_chains(true).is_empty());
}

#[test]
fn teardrop_cone_point_is_minimal() {
    let o = corpus::entry("teardrop3").unwrap().orbifold;
    let poset = strata_poset(&o, stratify(&o).unwrap()).unwrap();
    let cone: Vec<usize> = (0..poset.len()).filter(|&i| poset.strata[i].is_singular()).collect();
    assert_eq!(cone.len(), 1);
    assert!(poset.minimal_strata().contains(&cone[0]));
    assert_eq!(poset.strata[cone[0]].dim, 0);
}
