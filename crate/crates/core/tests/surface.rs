mod common;

use proptest::prelude::*;

use common::seq;
use hypbill::billiard::{trajectory, BilliardSequence};
use hypbill::polygon::{polygon_from_sides, regular_polygon};
use hypbill::surface::{
    deck_word, fn_coordinates, geometric_stabilizer, lift_count, DeckElement, LiftItinerary,
};

#[test]
fn deck_word_counts_colours() {
    assert_eq!(deck_word(&seq(&[1, 4])), DeckElement::JK);
    assert_eq!(deck_word(&seq(&[1, 3, 5])), DeckElement::J);
    assert_eq!(deck_word(&seq(&[2, 4, 6])), DeckElement::K);
    assert_eq!(deck_word(&seq(&[1, 4, 2, 5])), DeckElement::Identity);
}

#[test]
fn hexagon_examples() {
    let p = regular_polygon(3).unwrap();
    for (s, count) in [(&[1usize, 4][..], 1), (&[1, 3, 5], 2), (&[1, 4, 2, 5], 4)] {
        let a = seq(s);
        let t = trajectory(p.table(), &a).unwrap();
        let l = lift_count(&a, t.total_length());
        assert_eq!(l.count, count, "{a}");
        assert_eq!(geometric_stabilizer(&t, 1e-8), l.stabilizer);
    }
}

#[test]
fn nontrivial_words_lift_at_most_twice() {
    let p = regular_polygon(3).unwrap();
    for a in common::all_sequences(6, 5) {
        let Ok(t) = trajectory(p.table(), &a) else {
            continue;
        };
        let l = lift_count(&a, t.total_length());
        if l.deck_word != DeckElement::Identity {
            assert!(l.count <= 2, "{a}");
            assert_eq!(l.itinerary.passes, 2);
        }
    }
}

#[test]
fn stabilizers_agree_on_perturbed_octagon() {
    let p = polygon_from_sides(4, &[1.5, 1.55, 1.52, 1.5, 1.54], None).unwrap();
    let mut checked = 0;
    for a in common::all_sequences(8, 4) {
        let Ok(t) = trajectory(p.table(), &a) else {
            continue;
        };
        let l = lift_count(&a, t.total_length());
        assert_eq!(geometric_stabilizer(&t, 1e-8), l.stabilizer, "{a}");
        checked += 1;
    }
    assert!(checked > 20);
}

#[test]
fn fenchel_nielsen_data() {
    for k in [3usize, 4, 5] {
        let p = regular_polygon(k).unwrap();
        let fn_ = fn_coordinates(&p).unwrap();
        assert_eq!(fn_.genus(), k - 1);
        assert_eq!(fn_.curve_count(), 3 * k - 6);
        assert_eq!(fn_.twists.len(), 3 * k - 6);
        assert!(fn_.in_billiard_space());
        let s = p.side_lengths();
        assert!((fn_.alpha_lengths[0] - 2.0 * s[1]).abs() < 1e-12);
        assert!((fn_.beta_lengths[0] - 2.0 * s[0]).abs() < 1e-12);
    }
    let p = regular_polygon(5).unwrap();
    assert_eq!(fn_coordinates(&p).unwrap().curve_count(), 9);
}

fn sequence() -> impl Strategy<Value = BilliardSequence> {
    prop::collection::vec(1usize..=8, 2..8)
        .prop_filter_map("malformed", |v| BilliardSequence::new(v).ok())
}

proptest! {
    #[test]
    fn deck_word_is_a_homomorphism(a in sequence(), b in sequence()) {
        let mut v = a.entries().to_vec();
        v.extend_from_slice(b.entries());
        if let Ok(ab) = BilliardSequence::new(v) {
            prop_assert_eq!(deck_word(&ab), deck_word(&a) * deck_word(&b));
        }
    }

    #[test]
    fn counts_divide_four(a in sequence()) {
        let l = lift_count(&a, 1.0);
        prop_assert!(matches!(l.count, 1 | 2 | 4));
        prop_assert!((l.count as f64 * l.per_lift_length - 4.0).abs() < 1e-12);
        prop_assert!(l.stabilizer.contains(&DeckElement::Identity));
        let it = LiftItinerary::new(&a);
        prop_assert_eq!(it.steps.len(), it.passes * a.len());
    }

    #[test]
    fn shift_and_reversal_keep_stabilizer(a in sequence(), i in 0usize..8) {
        let base = LiftItinerary::new(&a).stabilizer().len();
        prop_assert_eq!(LiftItinerary::new(&a.shifted(i % a.len())).stabilizer().len(), base);
        prop_assert_eq!(LiftItinerary::new(&a.reversed()).stabilizer().len(), base);
    }
}
