//! Cross-checks between independent code paths: the direct straightening
//! formula against lazy back-substitution, quotient straightening against
//! projection, every expansion against the matching oracle, and the
//! expand/straighten round trip. These sweeps are exhaustive on small ground
//! sets and sampled on larger ones.

use num_rational::BigRational;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use plates_core::algebra::tree::undirected_labeled_trees;
use plates_core::combinatorics::permutations;
use plates_core::oracle::laplace::eval_p_composite;
use plates_core::text::{parse_csp, parse_osp};
use plates_core::{
    convolution_expand, enumerate_osps, enumerate_standard_csps, project, sample_generic_point,
    straighten_osp, straighten_theorem_form, tree_expand, verify_identity,
    weyl_chamber_expansion, BasisKind, CompositeSetPartition, DirectedTree, Genericity,
    GenericityPolicy, LabelSet, OracleKind, OrderedSetPartition, PlateVector, Side, Space,
    VectorLabel,
};

fn assert_verified(lhs: &Side, rhs: &Side, oracle: OracleKind, trials: u32, context: &str) {
    let report = verify_identity(lhs, rhs, oracle, trials, 101, &GenericityPolicy::default())
        .unwrap_or_else(|e| panic!("{context}: {e}"));
    assert!(
        report.all_passed(),
        "{context} under {}: {:?}",
        oracle.name(),
        report.counterexample
    );
}

fn unit_side(osp: &OrderedSetPartition) -> Side {
    Side::Vector(PlateVector::unit_plate(osp).unwrap())
}

#[test]
fn direct_formula_matches_back_substitution_everywhere() {
    for n in 1..=4u32 {
        for osp in enumerate_osps(n).unwrap() {
            let direct = straighten_theorem_form(&osp, None).unwrap();
            let solved = straighten_osp(&osp, Space::HatP).unwrap();
            assert_eq!(direct.terms_sorted(), solved.terms_sorted(), "{osp}");
        }
    }
    // A deeper pivot on five labels, at every admissible pivot choice.
    let osp = parse_osp("3|2|1|4|5").unwrap();
    let solved = straighten_osp(&osp, Space::HatP).unwrap();
    for pivot in 1..=3usize {
        let direct = straighten_theorem_form(&osp, Some(pivot)).unwrap();
        assert_eq!(direct.terms_sorted(), solved.terms_sorted(), "pivot {pivot}");
    }
}

#[test]
fn quotient_straightening_agrees_with_projection() {
    for n in 1..=4u32 {
        for osp in enumerate_osps(n).unwrap() {
            let unit = PlateVector::unit_plate(&osp).unwrap();
            for space in [Space::P, Space::HatP1, Space::P1] {
                assert_eq!(
                    straighten_osp(&osp, space).unwrap().terms_sorted(),
                    project(&unit, space).unwrap().terms_sorted(),
                    "{} in {}",
                    osp,
                    space.name()
                );
            }
        }
    }
}

#[test]
fn quotient_straightenings_hold_under_their_oracles() {
    for n in 1..=4u32 {
        for osp in enumerate_osps(n).unwrap() {
            for oracle in [OracleKind::P, OracleKind::HatP1, OracleKind::P1] {
                let space = match oracle {
                    OracleKind::P => Space::P,
                    OracleKind::HatP1 => Space::HatP1,
                    _ => Space::P1,
                };
                let expansion = straighten_osp(&osp, space).unwrap();
                assert_verified(
                    &unit_side(&osp),
                    &Side::Vector(expansion),
                    oracle,
                    10,
                    &osp.to_string(),
                );
            }
        }
    }
}

#[test]
fn chamber_expansions_hold_under_the_indicator() {
    for n in 1..=4u32 {
        let labels: Vec<u32> = (1..=n).collect();
        for order in permutations(&labels) {
            let perm = OrderedSetPartition::singleton_chain(&order).unwrap();
            let expansion = weyl_chamber_expansion(&perm).unwrap();
            assert_verified(
                &Side::Chamber(perm.clone()),
                &Side::Vector(expansion),
                OracleKind::Indicator,
                10,
                &perm.to_string(),
            );
        }
    }
}

#[test]
fn tree_expansions_hold_under_the_indicator() {
    for n in 1..=4u32 {
        for edges in undirected_labeled_trees(n).unwrap() {
            let tree = DirectedTree::new(n, edges).unwrap();
            let expansion = tree_expand(&tree, Space::HatP).unwrap();
            assert_verified(
                &Side::Tree(tree.clone()),
                &Side::Vector(expansion),
                OracleKind::Indicator,
                10,
                &tree.to_string(),
            );
        }
    }
}

#[test]
fn composite_expansions_hold_under_the_indicator() {
    for csp in enumerate_standard_csps(3, None).unwrap() {
        let expansion = convolution_expand(&csp).unwrap();
        assert_verified(
            &Side::Composite(csp.clone()),
            &Side::Vector(expansion),
            OracleKind::Indicator,
            10,
            &csp.to_string(),
        );
    }
}

/// Swapping the two blocks of a two-block plate and adding fills the whole
/// product of the two sub-lattices: (A|B) + (B|A) = (A∪B) + (A)*(B).
#[test]
fn two_block_swap_relation_holds_under_the_indicator() {
    for n in 2..=4u32 {
        let full: Vec<u32> = (1..=n).collect();
        for mask in 1u32..(1 << (n - 1)) {
            // Keep label 1 in A so each unordered pair appears once.
            let a: Vec<u32> = full.iter().copied().filter(|&v| v == 1 || mask >> (v - 1) & 1 == 1).collect();
            let b: Vec<u32> = full.iter().copied().filter(|&v| !a.contains(&v)).collect();
            if b.is_empty() {
                continue;
            }
            let ab = OrderedSetPartition::from_label_blocks(&[a.clone(), b.clone()]).unwrap();
            let ba = OrderedSetPartition::from_label_blocks(&[b.clone(), a.clone()]).unwrap();
            let lhs = PlateVector::unit_plate(&ab)
                .unwrap()
                .add(&PlateVector::unit_plate(&ba).unwrap())
                .unwrap();
            let merged = OrderedSetPartition::from_label_blocks(&[full.clone()]).unwrap();
            let split = CompositeSetPartition::new(vec![
                OrderedSetPartition::from_label_blocks(&[a.clone()]).unwrap(),
                OrderedSetPartition::from_label_blocks(&[b.clone()]).unwrap(),
            ])
            .unwrap();
            let mut rhs = PlateVector::zero(n, BasisKind::Canonical);
            rhs.add_term(
                VectorLabel::Csp(CompositeSetPartition::single(merged)),
                BigRational::from_integer(1.into()),
            )
            .unwrap();
            rhs.add_term(VectorLabel::Csp(split), BigRational::from_integer(1.into()))
                .unwrap();
            assert_verified(
                &Side::Vector(lhs),
                &Side::Vector(rhs),
                OracleKind::Indicator,
                10,
                &format!("A = {a:?}, B = {b:?}"),
            );
        }
    }
}

#[test]
fn composites_with_two_nontrivial_factors_vanish_in_the_whole_lattice() {
    let policy = GenericityPolicy::default();
    for n in 2..=4u32 {
        for csp in enumerate_standard_csps(n, None).unwrap() {
            let nontrivial = csp
                .factors()
                .iter()
                .filter(|f| f.support().len() > 1 || f.len() > 1)
                .count();
            if nontrivial < 2 {
                continue;
            }
            for trial in 0..10u32 {
                let mut rng = ChaCha8Rng::seed_from_u64(211);
                rng.set_stream(u64::from(trial));
                let point =
                    sample_generic_point(n, Genericity::Multiplicative, &mut rng, &policy)
                        .unwrap();
                let value = eval_p_composite(&csp, &point).unwrap();
                assert!(value.is_zero(), "{csp} at trial {trial}");
            }
        }
    }
}

#[test]
fn sampled_six_vertex_trees_satisfy_the_pointed_identities() {
    let trees = undirected_labeled_trees(6).unwrap();
    for edges in trees.into_iter().step_by(9) {
        let tree = DirectedTree::new(6, edges).unwrap();
        for oracle in [OracleKind::HatP1, OracleKind::P1] {
            let space = match oracle {
                OracleKind::HatP1 => Space::HatP1,
                _ => Space::P1,
            };
            let expansion = tree_expand(&tree, space).unwrap();
            assert_verified(
                &Side::Vector(expansion),
                &Side::Tree(tree.clone()),
                oracle,
                5,
                &tree.to_string(),
            );
        }
    }
}

/// Straightening writes a plate in the canonical basis; expanding each
/// canonical composite back into plates must recover the original unit
/// vector exactly.
#[test]
fn straighten_then_expand_is_the_identity() {
    for n in 1..=5u32 {
        for osp in enumerate_osps(n).unwrap() {
            let canonical = straighten_osp(&osp, Space::HatP).unwrap();
            let mut recovered = PlateVector::zero(n, BasisKind::Plate);
            for (label, coefficient) in canonical.iter() {
                let VectorLabel::Csp(csp) = label else {
                    panic!("straightening produced a non-composite label");
                };
                let expanded = convolution_expand(csp).unwrap().scale(coefficient);
                recovered = recovered.add(&expanded).unwrap();
            }
            assert_eq!(
                recovered.terms_sorted(),
                PlateVector::unit_plate(&osp).unwrap().terms_sorted(),
                "{osp}"
            );
        }
    }
}

/// The canonical label of a standard plate is itself; straightening must fix
/// it in every space where it survives.
#[test]
fn standard_plates_straighten_to_themselves() {
    for n in 1..=4u32 {
        for osp in enumerate_osps(n).unwrap() {
            if !osp.first_block_contains_min() {
                continue;
            }
            let decomposition = plates_core::standard_decomposition(&osp);
            if decomposition.len() != 1 {
                continue;
            }
            let straightened = straighten_osp(&osp, Space::HatP).unwrap();
            assert_eq!(straightened.len(), 1, "{osp}");
            let label = VectorLabel::Csp(decomposition);
            assert_eq!(
                straightened.coefficient(&label),
                BigRational::from_integer(1.into()),
                "{osp}"
            );
        }
    }
}

/// Full-support plates on one label: (1) is the whole line's fundamental
/// plate; larger singleton ground sets have exactly one plate each.
#[test]
fn ground_set_edge_cases() {
    let table = plates_core::dims(1).unwrap();
    assert_eq!(table.ordered_bell, 1u32.into());
    let only = enumerate_osps(1).unwrap();
    assert_eq!(only.len(), 1);
    assert_eq!(only[0].to_string(), "1");
    let support: LabelSet = only[0].support();
    assert_eq!(support.len(), 1);
    let straightened = straighten_osp(&only[0], Space::HatP).unwrap();
    assert_eq!(straightened.len(), 1);
    let csp = parse_csp("1", Some(1)).unwrap();
    assert_eq!(
        straightened.coefficient(&VectorLabel::Csp(csp)),
        BigRational::from_integer(1.into())
    );
}
