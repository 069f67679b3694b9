//! Combinatorial model of the billiard surface: four copies of a right-angled
//! 2k-gon glued along blue sides by `(12)(34)` and along red sides by `(13)(24)`.

use std::fmt;

use crate::billiard::{BilliardSequence, BilliardTrajectory};
use crate::error::Result;
use crate::hypgeo::dist;
use crate::polygon::{green_diagonals, RightAngledPolygon, SideColor};

/// Element of the deck group `{1, J, K, JK}` permuting the four copies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeckElement {
    Identity,
    /// `(12)(34)`, crossing a blue side.
    J,
    /// `(13)(24)`, crossing a red side.
    K,
    /// `(14)(23)`.
    JK,
}

impl DeckElement {
    pub const ALL: [DeckElement; 4] = [
        DeckElement::Identity,
        DeckElement::J,
        DeckElement::K,
        DeckElement::JK,
    ];

    fn bits(self) -> (bool, bool) {
        match self {
            DeckElement::Identity => (false, false),
            DeckElement::J => (true, false),
            DeckElement::K => (false, true),
            DeckElement::JK => (true, true),
        }
    }

    fn from_bits(j: bool, k: bool) -> Self {
        match (j, k) {
            (false, false) => DeckElement::Identity,
            (true, false) => DeckElement::J,
            (false, true) => DeckElement::K,
            (true, true) => DeckElement::JK,
        }
    }

    /// Transition across a side with this label.
    pub fn of_label(label: usize) -> DeckElement {
        match SideColor::of_label(label) {
            SideColor::Blue => DeckElement::J,
            SideColor::Red => DeckElement::K,
        }
    }

    /// Image of copy `c ∈ 1..=4`.
    pub fn apply(self, c: usize) -> usize {
        // Copies 1..4 are the bit patterns 00, 01, 10, 11: J flips the low bit, K the high bit.
        let (j, k) = self.bits();
        let x = (c - 1) ^ (j as usize) ^ ((k as usize) << 1);
        x + 1
    }
}

impl std::ops::Mul for DeckElement {
    type Output = DeckElement;

    fn mul(self, other: DeckElement) -> DeckElement {
        let (a, b) = (self.bits(), other.bits());
        DeckElement::from_bits(a.0 ^ b.0, a.1 ^ b.1)
    }
}

impl fmt::Display for DeckElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DeckElement::Identity => "1",
            DeckElement::J => "J",
            DeckElement::K => "K",
            DeckElement::JK => "JK",
        })
    }
}

/// `J^(#odd labels) · K^(#even labels)`.
pub fn deck_word(a: &BilliardSequence) -> DeckElement {
    a.entries().iter().fold(DeckElement::Identity, |acc, &l| {
        acc * DeckElement::of_label(l)
    })
}

/// Path of the lifted trajectory through the copies, starting in copy 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftItinerary {
    pub passes: usize,
    /// `(copy, label)`: in `copy`, hit side `label` and cross to the next copy.
    pub steps: Vec<(usize, usize)>,
}

impl LiftItinerary {
    pub fn new(a: &BilliardSequence) -> Self {
        let passes = if deck_word(a) == DeckElement::Identity {
            1
        } else {
            2
        };
        let mut copy = 1;
        let mut steps = Vec::with_capacity(passes * a.len());
        for _ in 0..passes {
            for &l in a.entries() {
                steps.push((copy, l));
                copy = DeckElement::of_label(l).apply(copy);
            }
        }
        debug_assert_eq!(copy, 1);
        Self { passes, steps }
    }

    /// Copy reached after step `i`.
    fn after(&self, i: usize) -> usize {
        let (c, l) = self.steps[i];
        DeckElement::of_label(l).apply(c)
    }

    fn tokens(&self, g: DeckElement) -> Vec<usize> {
        // Copies encoded as 0..4, labels shifted past them.
        self.steps
            .iter()
            .flat_map(|&(c, l)| [g.apply(c) - 1, l + 4])
            .collect()
    }

    /// Whether `g` maps the closed lifted curve to itself, compared as unoriented cyclic words.
    pub fn is_fixed_by(&self, g: DeckElement) -> bool {
        let base = self.tokens(DeckElement::Identity);
        let image = self.tokens(g);
        let n = base.len();
        let mut reversed = image.clone();
        reversed.reverse();
        // After reversal the copy tokens sit at odd positions.
        let forward = (0..n)
            .step_by(2)
            .any(|s| (0..n).all(|i| base[i] == image[(s + i) % n]));
        let backward = (1..n)
            .step_by(2)
            .any(|s| (0..n).all(|i| base[i] == reversed[(s + i) % n]));
        forward || backward
    }

    pub fn stabilizer(&self) -> Vec<DeckElement> {
        DeckElement::ALL
            .into_iter()
            .filter(|&g| self.is_fixed_by(g))
            .collect()
    }
}

/// Number of closed geodesics in the preimage of a trajectory on the surface.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftCount {
    pub count: usize,
    pub per_lift_length: f64,
    pub deck_word: DeckElement,
    pub stabilizer: Vec<DeckElement>,
    pub itinerary: LiftItinerary,
}

/// Lifts of a trajectory of length `length` with sequence `a`.
pub fn lift_count(a: &BilliardSequence, length: f64) -> LiftCount {
    let itinerary = LiftItinerary::new(a);
    let stabilizer = itinerary.stabilizer();
    let s = stabilizer.len();
    LiftCount {
        count: 4 / s,
        per_lift_length: s as f64 * length,
        deck_word: deck_word(a),
        stabilizer,
        itinerary,
    }
}

/// Deck elements mapping the lifted curve of an actual trajectory onto itself.
///
/// The lift is recorded as the set of segments it runs along, each a pair
/// (copy, unordered endpoints); two segments agree when they lie in the same
/// copy and their endpoints match within `tol`. This identifies retraced
/// segments geometrically rather than by their position in the sequence.
pub fn geometric_stabilizer(t: &BilliardTrajectory, tol: f64) -> Vec<DeckElement> {
    let itinerary = LiftItinerary::new(t.sequence());
    let n = t.sequence().len();
    let pts = t.bounce_points();
    let lifted: Vec<(usize, usize, usize)> = (0..itinerary.steps.len())
        .map(|i| (itinerary.after(i), i % n, (i + 1) % n))
        .collect();
    let same_segment = |(a, b): (usize, usize), (c, d): (usize, usize)| {
        (dist(pts[a], pts[c]) <= tol && dist(pts[b], pts[d]) <= tol)
            || (dist(pts[a], pts[d]) <= tol && dist(pts[b], pts[c]) <= tol)
    };
    let fixed = |g: DeckElement| {
        let mut used = vec![false; lifted.len()];
        lifted.iter().all(|&(c, a, b)| {
            let gc = g.apply(c);
            let found = lifted
                .iter()
                .enumerate()
                .position(|(j, &(d, x, y))| !used[j] && d == gc && same_segment((a, b), (x, y)));
            match found {
                Some(j) => {
                    used[j] = true;
                    true
                }
                None => false,
            }
        })
    };
    DeckElement::ALL.into_iter().filter(|&g| fixed(g)).collect()
}

/// Fenchel–Nielsen length and twist data of the billiard surface.
#[derive(Debug, Clone, PartialEq)]
pub struct FNCoordinates {
    /// Red pants curves, twice the even-labelled sides.
    pub alpha_lengths: Vec<f64>,
    /// Pairs of green curves, each twice a green arc.
    pub delta_lengths: Vec<(f64, f64)>,
    /// Blue seams, twice the odd-labelled sides.
    pub beta_lengths: Vec<f64>,
    pub twists: Vec<f64>,
}

impl FNCoordinates {
    pub fn genus(&self) -> usize {
        self.alpha_lengths.len() - 1
    }

    /// Number of pants curves: `k + 2(k − 3)`.
    pub fn curve_count(&self) -> usize {
        self.alpha_lengths.len() + 2 * self.delta_lengths.len()
    }

    /// All twists zero and each green pair of equal length.
    pub fn in_billiard_space(&self) -> bool {
        self.twists.iter().all(|t| *t == 0.0) && self.delta_lengths.iter().all(|(a, b)| a == b)
    }
}

pub fn fn_coordinates(p: &RightAngledPolygon) -> Result<FNCoordinates> {
    let k = p.k();
    let sides = p.side_lengths();
    let doubled = |parity: usize| -> Vec<f64> {
        sides
            .iter()
            .enumerate()
            .filter(|(i, _)| (i + 1) % 2 == parity)
            .map(|(_, s)| 2.0 * s)
            .collect()
    };
    let delta_lengths = green_diagonals(p)?
        .arcs
        .iter()
        .map(|a| (2.0 * a.length, 2.0 * a.length))
        .collect();
    Ok(FNCoordinates {
        alpha_lengths: doubled(0),
        delta_lengths,
        beta_lengths: doubled(1),
        twists: vec![0.0; 3 * k - 6],
    })
}
