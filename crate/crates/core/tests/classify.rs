use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thompson_core::classify::{check_closures, check_partition};
use thompson_core::sample::random_element;
use thompson_core::{
    ball, class_of, nf_to_diagram, right_divisible, right_divisors, ClassLabel, ElementSet, NormalForm, Sign,
};

/// The example elements listed for each class.
const EXAMPLES: [(ClassLabel, [&str; 3]); 7] = [
    (ClassLabel::M1, ["e", "x2", "x1 x2^-1"]),
    (ClassLabel::M2, ["x0^-1", "x0 x1 x0^-1", "x2 x1^-1 x0^-1"]),
    (ClassLabel::M3, ["x0", "x0 x3^-1", "x0^3 x2^-1"]),
    (ClassLabel::M4, ["x1^-1", "x0 x1^-2", "x3 x4 x1^-1"]),
    (ClassLabel::M5, ["x1", "x0 x1", "x1^2 x4^-1"]),
    (ClassLabel::M6, ["x2^-1 x0^-1", "x1 x4^-1 x0^-3", "x1 x5 x3^-2 x0^-2"]),
    (ClassLabel::M7, ["x2 x0^-1", "x0 x1 x2 x0^-1", "x1 x3 x0^-2"]),
];

#[test]
fn listed_examples_are_already_normal_forms() {
    for (_, words) in EXAMPLES {
        for w in words {
            let g: NormalForm = w.parse().unwrap();
            assert_eq!(g.to_string(), *w);
        }
    }
}

#[test]
fn listed_examples_classify_as_listed() {
    for (class, words) in EXAMPLES {
        for w in words {
            assert_eq!(class_of(&w.parse().unwrap()), class, "{w}");
        }
    }
}

#[test]
fn structural_divisor_test_matches_product_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let sampled = (0..10_000).map(|_| random_element(&mut rng, 20, 8));
    for g in ball(8).unwrap().into_iter().chain(sampled) {
        let d = nf_to_diagram(&g);
        for i in 0..4 {
            for sign in [Sign::Plus, Sign::Minus] {
                assert_eq!(d.has_right_divisor(i, sign), right_divisible(&d, i, sign), "{g}: X{i} {sign:?}");
            }
        }
    }
}

#[test]
fn x0_excludes_every_other_divisor() {
    for g in ball(7).unwrap() {
        let set = right_divisors(&nf_to_diagram(&g)).unwrap();
        if set.x0 {
            assert!(!set.x0_inv && !set.x1 && !set.x1_inv, "{g}: {set}");
        }
    }
}

#[test]
fn partition_holds_on_ball_8() {
    let b = ball(8).unwrap();
    assert_eq!(b.len(), 11_237);
    assert!(check_partition(&b).is_empty());
}

#[test]
fn closures_hold_on_balls() {
    for n in 0..=8 {
        let violations = check_closures(&ball(n).unwrap());
        assert!(violations.is_empty(), "radius {n}: {}", violations[0]);
    }
}

#[test]
fn class_does_not_depend_on_spelling() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..500 {
        let g = random_element(&mut rng, 16, 6);
        let h = random_element(&mut rng, 8, 6);
        // g h h^-1 spelled out letter by letter
        let spelled = g.to_word().concat(&h.to_word()).concat(&h.to_word().inverse());
        assert_eq!(class_of(&thompson_core::reduce_to_normal_form(&spelled)), class_of(&g));
    }
}

#[test]
fn closure_violations_would_be_reported() {
    // x1 is in M5, so rule (a) applies; the product x1 x0 = x0 x2 must be in M3
    let s = ElementSet::singleton("x1".parse().unwrap());
    assert!(check_closures(&s).is_empty());
    assert_eq!(class_of(&"x0 x2".parse().unwrap()), ClassLabel::M3);
}
