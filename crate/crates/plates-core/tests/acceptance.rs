//! Release-gate checks for the library: dimension tables, the reference
//! change-of-basis matrix, unitriangularity, the reference expansion examples,
//! oracle agreement, tree identities, quotient kill rules, and bijection
//! round trips. Every comparison is exact; each test finishes by printing a
//! single `ACCEPTANCE <k> …: PASS` line (visible with `--nocapture`).

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use plates_core::algebra::tree::undirected_labeled_trees;
use plates_core::text::{parse_csp, parse_osp};
use plates_core::{
    dims, enumerate_osps, eval_side, sample_generic_point, shuffle_lumpings,
    standard_composition, standard_decomposition, straighten_osp, straighten_theorem_form,
    tree_expand, verify_identity, ChangeOfBasis, DirectedTree, Genericity, GenericityPolicy,
    OracleKind, OrderedSetPartition, PlateVector, RationalPoint, Side, Space, VectorLabel,
};

fn nums(values: &[u64]) -> Vec<BigUint> {
    values.iter().map(|&v| BigUint::from(v)).collect()
}

fn unit_side(osp: &OrderedSetPartition) -> Side {
    Side::Vector(PlateVector::unit_plate(osp).unwrap())
}

fn coef(v: &PlateVector, label: &VectorLabel) -> i64 {
    let c = v.coefficient(label);
    assert!(c.is_integer(), "non-integer coefficient {c}");
    i64::try_from(c.to_integer()).unwrap()
}

fn canonical_coef(v: &PlateVector, text: &str) -> i64 {
    coef(v, &VectorLabel::Csp(parse_csp(text, Some(v.n())).unwrap()))
}

fn plate_coef(v: &PlateVector, text: &str) -> i64 {
    coef(v, &VectorLabel::Osp(parse_osp(text).unwrap()))
}

#[test]
fn acceptance_1_dimension_tables() {
    let start = Instant::now();
    let ordered_bell = [1u64, 3, 13, 75, 541, 4683];
    let composite_rows: [&[u64]; 6] = [
        &[1],
        &[2, 1],
        &[6, 6, 1],
        &[26, 36, 12, 1],
        &[150, 250, 120, 20, 1],
        &[1082, 2040, 1230, 300, 30, 1],
    ];
    let stirling1_rows: [&[u64]; 6] = [
        &[1],
        &[1, 1],
        &[2, 3, 1],
        &[6, 11, 6, 1],
        &[24, 50, 35, 10, 1],
        &[120, 274, 225, 85, 15, 1],
    ];
    for n in 1..=6u32 {
        let table = dims(n).unwrap();
        let i = (n - 1) as usize;
        assert_eq!(table.ordered_bell, BigUint::from(ordered_bell[i]), "n = {n}");
        assert_eq!(table.composite_row, nums(composite_rows[i]), "n = {n}");
        assert_eq!(table.stirling1_row, nums(stirling1_rows[i]), "n = {n}");
        let row_sum: BigUint = table.composite_row.iter().sum();
        assert_eq!(row_sum, table.ordered_bell, "n = {n}");
        assert_eq!(table.composite_row[0], table.cyclic_bell, "n = {n}");
        let s1_sum: BigUint = table.stirling1_row.iter().sum();
        assert_eq!(s1_sum, table.factorial, "n = {n}");
        assert_eq!(table.stirling1_row[0], table.pointed_quotient, "n = {n}");
    }
    assert!(start.elapsed() < Duration::from_secs(1));
    println!("ACCEPTANCE 1 (dimension tables, n = 1..6): PASS");
}

/// The reference 13×13 matrix, row-major over the lex basis
/// ((123), (12|3), (13|2), (1|23), (1|2|3), (1|3|2), (23|1), (2|13),
/// (2|1|3), (3|12), (3|1|2), (2|3|1), (3|2|1)).
const REFERENCE_N3: [[i64; 13]; 13] = [
    [1, 0, 0, 0, 0, 0, -1, -1, 0, -1, 0, 0, 1],
    [0, 1, 0, 0, 0, 0, 0, 0, -1, 1, 0, -1, -1],
    [0, 0, 1, 0, 0, 0, 0, 1, 0, 0, -1, 0, -1],
    [0, 0, 0, 1, 0, 0, 1, 0, -1, 0, -1, 0, -1],
    [0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 1],
    [0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
];

#[test]
fn acceptance_2_reference_matrix() {
    let start = Instant::now();
    let m = ChangeOfBasis::build(3).unwrap();
    assert_eq!(m.dim(), 13);
    let basis_order = [
        "1,2,3", "1,2|3", "1,3|2", "1|2,3", "1|2|3", "1|3|2", "2,3|1", "2|1,3", "2|1|3",
        "3|1,2", "3|1|2", "2|3|1", "3|2|1",
    ];
    for (label, expected) in m.labels().iter().zip(basis_order) {
        assert_eq!(label.to_string(), expected);
    }
    for (i, row) in REFERENCE_N3.iter().enumerate() {
        for (j, &value) in row.iter().enumerate() {
            assert_eq!(m.entry(i, j), BigInt::from(value), "entry ({i},{j})");
        }
    }
    assert!(start.elapsed() < Duration::from_secs(1));
    println!("ACCEPTANCE 2 (reference 13×13 matrix, n = 3): PASS");
}

#[test]
fn acceptance_3_unitriangularity_and_inverse() {
    let m4 = ChangeOfBasis::build(4).unwrap();
    assert_eq!(m4.dim(), 75);
    assert!(m4.is_upper_unitriangular());
    let inv4 = m4.inverse().unwrap();
    assert!(m4.product_is_identity(&inv4));
    assert!(inv4.product_is_identity(&m4));

    let start = Instant::now();
    let m5 = ChangeOfBasis::build(5).unwrap();
    assert_eq!(m5.dim(), 541);
    assert!(m5.is_upper_unitriangular());
    let inv5 = m5.inverse().unwrap();
    assert!(inv5.is_upper_unitriangular());
    assert!(m5.product_is_identity(&inv5));
    assert!(inv5.product_is_identity(&m5));
    assert!(start.elapsed() < Duration::from_secs(60));
    println!("ACCEPTANCE 3 (unitriangularity and inverse, n = 4, 5): PASS");
}

#[test]
fn acceptance_4_reference_expansions() {
    // Five-term identity for the convolution of the trivial plate on {1}
    // with the plate (2|3).
    let five = plates_core::convolution_expand(&parse_csp("1*2|3", None).unwrap()).unwrap();
    assert_eq!(five.len(), 5);
    for (label, value) in [
        ("1|2|3", 1),
        ("2|1|3", 1),
        ("2|3|1", 1),
        ("1,2|3", -1),
        ("2|1,3", -1),
    ] {
        assert_eq!(plate_coef(&five, label), value, "{label}");
    }

    // The thirteen shuffle-lumpings of (1|23) and (4|5), with signs
    // (-1)^(4-len).
    let lumpings = shuffle_lumpings(&parse_csp("1|2,3*4|5", None).unwrap());
    assert_eq!(lumpings.len(), 13);
    let expected: [(&str, i8); 13] = [
        ("1|2,3|4|5", 1),
        ("1|2,3,4|5", -1),
        ("1|4|2,3|5", 1),
        ("1,4|2,3|5", -1),
        ("4|1|2,3|5", 1),
        ("1|4|2,3,5", -1),
        ("1,4|2,3,5", 1),
        ("4|1|2,3,5", -1),
        ("1|4|5|2,3", 1),
        ("1,4|5|2,3", -1),
        ("4|1|5|2,3", 1),
        ("4|1,5|2,3", -1),
        ("4|5|1|2,3", 1),
    ];
    for (text, sign) in expected {
        let osp = parse_osp(text).unwrap();
        let found = lumpings.iter().find(|(term, _)| *term == osp);
        assert_eq!(found.map(|(_, s)| *s), Some(sign), "{text}");
    }

    // Three-term expansion of the two-edge star tree.
    let star = tree_expand(&DirectedTree::from_text("1>2,1>3").unwrap(), Space::HatP).unwrap();
    assert_eq!(star.len(), 3);
    assert_eq!(plate_coef(&star, "1|2|3"), 1);
    assert_eq!(plate_coef(&star, "1|3|2"), 1);
    assert_eq!(plate_coef(&star, "1|2,3"), -1);

    // The reference expansion of the four-vertex tree with edges
    // (1,3), (2,3), (1,4): five positive chains, five lumped negatives, and
    // one doubly lumped positive — eleven distinct terms in total.
    let simplex =
        tree_expand(&DirectedTree::from_text("1>3,2>3,1>4").unwrap(), Space::HatP).unwrap();
    assert_eq!(simplex.len(), 11);
    for label in ["1|2|3|4", "1|2|4|3", "1|4|2|3", "2|1|3|4", "2|1|4|3"] {
        assert_eq!(plate_coef(&simplex, label), 1, "{label}");
    }
    for label in ["1,2|3|4", "1,2|4|3", "1|2,4|3", "1|2|3,4", "2|1|3,4"] {
        assert_eq!(plate_coef(&simplex, label), -1, "{label}");
    }
    assert_eq!(plate_coef(&simplex, "1,2|3,4"), 1);

    // Four-term straightening of (2|1|3) in the quotient that forgets
    // measure-zero cones.
    let four = straighten_osp(&parse_osp("2|1|3").unwrap(), Space::P).unwrap();
    assert_eq!(four.len(), 4);
    assert_eq!(canonical_coef(&four, "1,2|3"), 1);
    assert_eq!(canonical_coef(&four, "1|2,3"), 1);
    assert_eq!(canonical_coef(&four, "1|2|3"), -1);
    assert_eq!(canonical_coef(&four, "1|3|2"), -1);

    // Leading group of the direct straightening of (3|2|1|4|5) at pivot 3.
    let five_blocks =
        straighten_theorem_form(&parse_osp("3|2|1|4|5").unwrap(), Some(3)).unwrap();
    assert_eq!(canonical_coef(&five_blocks, "1|4|5*2,3"), 1);
    assert_eq!(canonical_coef(&five_blocks, "1|4|5*2|3"), -1);
    assert_eq!(canonical_coef(&five_blocks, "1|4|5"), 1);
    println!("ACCEPTANCE 4 (reference expansions): PASS");
}

#[test]
fn acceptance_5_indicator_oracle_agreement() {
    let policy = GenericityPolicy::default();
    let mut identities = 0u32;
    for n in 1..=4u32 {
        for osp in enumerate_osps(n).unwrap() {
            let expansion = straighten_osp(&osp, Space::HatP).unwrap();
            let report = verify_identity(
                &unit_side(&osp),
                &Side::Vector(expansion),
                OracleKind::Indicator,
                50,
                7,
                &policy,
            )
            .unwrap();
            assert!(
                report.all_passed(),
                "plate {osp}: {:?}",
                report.counterexample
            );
            identities += 1;
        }
    }
    assert_eq!(identities, 1 + 3 + 13 + 75);
    println!("ACCEPTANCE 5 (canonical expansions at 50 generic points each, n ≤ 4): PASS");
}

#[test]
fn acceptance_6_tree_identities() {
    let start = Instant::now();
    let policy = GenericityPolicy::default();
    // Parts over the pointed quotients for every labeled tree on up to five
    // vertices, oriented low-to-high.
    for n in 1..=5u32 {
        for edges in undirected_labeled_trees(n).unwrap() {
            let tree = DirectedTree::new(n, edges).unwrap();
            for oracle in [OracleKind::HatP1, OracleKind::P1] {
                let space = match oracle {
                    OracleKind::HatP1 => Space::HatP1,
                    _ => Space::P1,
                };
                let expansion = tree_expand(&tree, space).unwrap();
                let report = verify_identity(
                    &Side::Vector(expansion),
                    &Side::Tree(tree.clone()),
                    oracle,
                    20,
                    23,
                    &policy,
                )
                .unwrap();
                assert!(
                    report.all_passed(),
                    "tree {tree} under {}: {:?}",
                    oracle.name(),
                    report.counterexample
                );
            }
        }
    }

    // The seven-vertex tree: the same two identities, plus the reference
    // term counts for its permutation-only and full expansions.
    let seven = DirectedTree::from_text("1>3,2>3,2>4,2>5,3>6,7>3").unwrap();
    assert_eq!(tree_expand(&seven, Space::P1).unwrap().len(), 124);
    assert_eq!(tree_expand(&seven, Space::HatP).unwrap().len(), 653);
    for oracle in [OracleKind::HatP1, OracleKind::P1] {
        let space = match oracle {
            OracleKind::HatP1 => Space::HatP1,
            _ => Space::P1,
        };
        let expansion = tree_expand(&seven, space).unwrap();
        let report = verify_identity(
            &Side::Vector(expansion),
            &Side::Tree(seven.clone()),
            oracle,
            20,
            23,
            &policy,
        )
        .unwrap();
        assert!(report.all_passed(), "{}: {:?}", oracle.name(), report.counterexample);
    }

    // Whole-lattice identity for the four-vertex example tree, checked
    // against the collapsed product 1/((1-x2)(1-x1*x2*x3)(1-x1*x4)).
    let tree = DirectedTree::from_text("1>3,2>3,1>4").unwrap();
    let expansion = tree_expand(&tree, Space::P).unwrap();
    let one = BigRational::one();
    for trial in 0..20u32 {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        rng.set_stream(u64::from(trial));
        let point = sample_generic_point(4, Genericity::Multiplicative, &mut rng, &policy)
            .unwrap();
        let x = point.coords();
        let collapse = (&one - &x[1]).recip()
            * (&one - &x[0] * &x[1] * &x[2]).recip()
            * (&one - &x[0] * &x[3]).recip();
        let lhs = eval_side(&Side::Vector(expansion.clone()), OracleKind::P, &point).unwrap();
        let rhs = eval_side(&Side::Tree(tree.clone()), OracleKind::P, &point).unwrap();
        assert_eq!(lhs, collapse, "trial {trial}");
        assert_eq!(rhs, collapse, "trial {trial}");
    }
    assert!(start.elapsed() < Duration::from_secs(120));
    println!("ACCEPTANCE 6 (tree identities, n ≤ 5 and the 7-vertex tree): PASS");
}

#[test]
fn acceptance_7_quotient_kill_rules() {
    let policy = GenericityPolicy::default();
    let point_at = |n: u32, seed: u64, trial: u32| -> RationalPoint {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(u64::from(trial));
        sample_generic_point(n, Genericity::FreeDistinct, &mut rng, &policy).unwrap()
    };
    // Labels keeping a block of two or more letters die in the non-pointed
    // quotient.
    let mut killed = 0u32;
    for n in 1..=5u32 {
        for osp in enumerate_osps(n).unwrap() {
            if osp.singleton_labels().is_some() {
                continue;
            }
            for trial in 0..20u32 {
                let point = point_at(n, 31, trial);
                let value = plates_core::oracle::laplace::eval_hatp1(&osp, &point).unwrap();
                assert!(value.is_zero(), "{osp} at trial {trial}");
            }
            killed += 1;
        }
    }
    assert_eq!(killed, (3 - 2) + (13 - 6) + (75 - 24) + (541 - 120));
    // The two-term sums (i|j) + (j|i) collapse to the origin: value 1 in the
    // non-pointed quotient, 0 once lines are also killed.
    for i in 1..=4u32 {
        for j in (i + 1)..=5u32 {
            let ij = OrderedSetPartition::singleton_chain(&[i, j]).unwrap();
            let ji = OrderedSetPartition::singleton_chain(&[j, i]).unwrap();
            for trial in 0..20u32 {
                let point = point_at(j, 37, trial);
                let pointed = plates_core::oracle::laplace::eval_hatp1(&ij, &point).unwrap()
                    + plates_core::oracle::laplace::eval_hatp1(&ji, &point).unwrap();
                assert!(pointed.is_one(), "({i}|{j}) + ({j}|{i}) trial {trial}");
                let both = plates_core::oracle::laplace::eval_p1(&ij, &point).unwrap()
                    + plates_core::oracle::laplace::eval_p1(&ji, &point).unwrap();
                assert!(both.is_zero(), "({i}|{j}) + ({j}|{i}) trial {trial}");
            }
        }
    }
    println!("ACCEPTANCE 7 (quotient kill rules at 20 generic points each): PASS");
}

#[test]
fn acceptance_8_bijection_round_trips() {
    let start = Instant::now();
    let mut total = 0usize;
    for n in 1..=6u32 {
        let all = enumerate_osps(n).unwrap();
        for osp in &all {
            let word = osp.packed_word().unwrap();
            assert_eq!(&word.to_ordered_set_partition(), osp);
            let decomposition = standard_decomposition(osp);
            assert_eq!(&standard_composition(&decomposition).unwrap(), osp);
        }
        total += all.len();
    }
    assert_eq!(total, 1 + 3 + 13 + 75 + 541 + 4683);
    assert!(start.elapsed() < Duration::from_secs(5));
    println!("ACCEPTANCE 8 (packed-word and factorization round trips, n ≤ 6): PASS");
}
