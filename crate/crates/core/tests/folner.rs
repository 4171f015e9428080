use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thompson_core::folner::{ball_profile, ElementSet, Rational, GENERATORS};
use thompson_core::sample::random_subset;
use thompson_core::words::{reduce_with, Strategy};
use thompson_core::{ball, class_histogram, deletion_bound_check, mu_hat, subgraph_density, ClassLabel, NormalForm, Word};

/// Brute-force edge count: every (vertex, generator) candidate, product taken
/// by leftmost rewriting of the concatenated word, membership by linear scan.
fn brute_force_edges(s: &ElementSet) -> (usize, usize) {
    let members: Vec<&NormalForm> = s.iter().collect();
    let mut candidates = 0;
    let mut edges = 0;
    for v in &members {
        for l in GENERATORS {
            candidates += 1;
            let w = v.to_word().concat(&Word::new(vec![l]));
            let target = reduce_with(&w, Strategy::Leftmost);
            if members.iter().any(|m| **m == target) {
                edges += 1;
            }
        }
    }
    (candidates, edges)
}

#[test]
fn ball_one_has_five_distinct_elements() {
    let b = ball(1).unwrap();
    assert_eq!(b.len(), 5);
    let expected: ElementSet = ["e", "x0", "x0^-1", "x1", "x1^-1"].iter().map(|s| s.parse().unwrap()).collect();
    assert_eq!(b, expected);
}

#[test]
fn brute_force_density_of_ball_one() {
    let b = ball(1).unwrap();
    let (candidates, edges) = brute_force_edges(&b);
    assert_eq!((candidates, edges), (20, 8));
    let stats = subgraph_density(&b).unwrap();
    assert_eq!(stats.oriented_edge_count as usize, edges);
    assert_eq!(stats.density, Rational::new(8, 5));
}

#[test]
fn density_agrees_with_brute_force_on_small_balls() {
    for n in 0..=4 {
        let b = ball(n).unwrap();
        let (_, edges) = brute_force_edges(&b);
        let stats = subgraph_density(&b).unwrap();
        assert_eq!(stats.oriented_edge_count as usize, edges, "radius {n}");
        assert!(stats.density < Rational::from(4));
    }
}

/// Every word of length at most `n` over the four generators, reduced by
/// leftmost rewriting.
fn enumerate_ball(n: usize) -> ElementSet {
    let mut words = vec![Word::identity()];
    let mut all = vec![Word::identity()];
    for _ in 0..n {
        words = words
            .iter()
            .flat_map(|w| GENERATORS.iter().map(move |&l| w.concat(&Word::new(vec![l]))))
            .collect();
        all.extend(words.iter().cloned());
    }
    all.iter().map(|w| reduce_with(w, Strategy::Leftmost)).collect()
}

#[test]
fn bfs_matches_word_enumeration() {
    for n in 0..=6 {
        assert_eq!(ball(n).unwrap(), enumerate_ball(n), "radius {n}");
    }
}

#[test]
fn sphere_sizes() {
    let sizes: Vec<u64> = ball_profile(7, usize::MAX).unwrap().iter().map(|s| s.vertex_count).collect();
    assert_eq!(sizes, vec![1, 5, 17, 53, 161, 475, 1381, 3957]);
}

#[test]
fn degrees_never_exceed_four() {
    let b = ball(5).unwrap();
    for v in &b {
        assert!(b.degree(v) <= 4);
    }
}

#[test]
fn deletion_bound_holds_on_random_instances() {
    let b6 = ball(6).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    for _ in 0..200 {
        let s = random_subset(&mut rng, &b6, 2, b6.len());
        let k = random_subset(&mut rng, &s, 0, s.len() - 1);
        let report = deletion_bound_check(&s, &k).unwrap();
        assert!(report.holds, "{report}");
    }
}

#[test]
fn deleting_a_vertex_loses_twice_its_degree() {
    let b5 = ball(5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..50 {
        let s = random_subset(&mut rng, &b5, 2, b5.len());
        let v = random_subset(&mut rng, &s, 1, 1);
        let removed = v.iter().next().unwrap();
        let (_, before) = brute_force_edges(&s);
        let (_, after) = brute_force_edges(&s.difference(&v));
        assert_eq!(before - after, 2 * s.degree(removed));
    }
}

#[test]
fn half_bound_fails_when_the_centre_is_removed() {
    let b1 = ball(1).unwrap();
    let centre = ElementSet::singleton(NormalForm::identity());
    let report = deletion_bound_check(&b1, &centre).unwrap();
    let (_, remaining) = brute_force_edges(&b1.difference(&centre));
    assert_eq!(remaining, 0);
    assert_eq!(report.half_bound, Rational::new(4, 5));
    assert!(!report.half_bound_holds);
    assert!(report.holds);
}

#[test]
fn mu_hat_is_additive_on_disjoint_sets() {
    let b = ball(4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..100 {
        let z1 = random_subset(&mut rng, &b, 0, 80);
        let z2 = random_subset(&mut rng, &b, 0, 80).difference(&z1);
        let whole = mu_hat(&b, &z1.union(&z2)).unwrap();
        assert_eq!(whole, mu_hat(&b, &z1).unwrap() + mu_hat(&b, &z2).unwrap());
    }
}

#[test]
fn ball_is_independent_of_worker_count() {
    let run = |threads| {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(|| ball(6).unwrap())
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one, ball(6).unwrap());
}

#[test]
fn histogram_of_small_balls() {
    let h0 = class_histogram(&ball(0).unwrap());
    assert_eq!(h0.count(ClassLabel::M1), 1);
    assert_eq!(h0.total(), 1);
    let h1 = class_histogram(&ball(1).unwrap());
    assert_eq!(h1.0, [1, 1, 1, 1, 1, 0, 0]);
    let b = ball(5).unwrap();
    assert_eq!(class_histogram(&b).total() as usize, b.len());
}
