use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Cyclic word of side labels hit by a closed billiard trajectory.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BilliardSequence {
    entries: Vec<usize>,
}

impl BilliardSequence {
    /// At least two labels, each ≥ 1, cyclically consecutive entries distinct.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        if n < 2 {
            return Err(Error::MalformedSequence(format!(
                "need at least 2 entries, got {n}"
            )));
        }
        if entries.contains(&0) {
            return Err(Error::MalformedSequence("labels start at 1".into()));
        }
        if let Some(i) = (0..n).find(|&i| entries[i] == entries[(i + 1) % n]) {
            return Err(Error::MalformedSequence(format!(
                "entries {i} and {} repeat label {}",
                (i + 1) % n,
                entries[i]
            )));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_label(&self) -> usize {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    /// Error unless every label is at most `m`.
    pub fn check_labels(&self, m: usize) -> Result<()> {
        match self.entries.iter().find(|&&l| l > m) {
            Some(l) => Err(Error::MalformedSequence(format!(
                "label {l} exceeds side count {m}"
            ))),
            None => Ok(()),
        }
    }

    /// Start the cycle at position `i`.
    pub fn shifted(&self, i: usize) -> Self {
        let n = self.len();
        Self {
            entries: (0..n).map(|j| self.entries[(i + j) % n]).collect(),
        }
    }

    /// The same cycle traversed backwards.
    pub fn reversed(&self) -> Self {
        Self {
            entries: self.entries.iter().rev().copied().collect(),
        }
    }

    /// The word followed by itself.
    pub fn doubled(&self) -> Self {
        Self {
            entries: self.entries.repeat(2),
        }
    }

    /// Lexicographically least representative over all starting points and both directions.
    pub fn canonical(&self) -> Vec<usize> {
        let n = self.len();
        let rev = self.reversed();
        (0..n)
            .flat_map(|i| [self.shifted(i).entries, rev.shifted(i).entries])
            .min()
            .unwrap_or_default()
    }

    /// Cyclic word equality up to starting point and direction.
    pub fn same_cycle(&self, other: &BilliardSequence) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }
}

impl fmt::Display for BilliardSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for BilliardSequence {
    type Err = Error;

    /// Comma-separated labels, optionally wrapped in parentheses: `1,4` or `(1,3,5)`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::MalformedSequence(format!("not a label: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

/// Relabel by the rotation `l ↦ ((l − 1 + j) mod m) + 1`.
pub fn rotate_sequence(a: &BilliardSequence, j: usize, m: usize) -> BilliardSequence {
    BilliardSequence {
        entries: a.entries.iter().map(|&l| (l - 1 + j) % m + 1).collect(),
    }
}

/// Apply the mirror involution `(1 2)(3 4)` of a Lambert quadrilateral entrywise.
pub fn reflect_sequence(a: &BilliardSequence) -> Result<BilliardSequence> {
    a.check_labels(4)?;
    let sigma = |l: usize| match l {
        1 => 2,
        2 => 1,
        3 => 4,
        _ => 3,
    };
    Ok(BilliardSequence {
        entries: a.entries.iter().map(|&l| sigma(l)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[usize]) -> BilliardSequence {
        BilliardSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_malformed() {
        assert!(BilliardSequence::new(vec![1, 1]).is_err());
        assert!(BilliardSequence::new(vec![1, 2, 1]).is_err());
        assert!(BilliardSequence::new(vec![3]).is_err());
        assert!(BilliardSequence::new(vec![0, 2]).is_err());
        assert!("1,x".parse::<BilliardSequence>().is_err());
    }

    #[test]
    fn parses_with_and_without_parens() {
        assert_eq!("1,4".parse::<BilliardSequence>().unwrap(), seq(&[1, 4]));
        assert_eq!(
            "(1, 3, 5)".parse::<BilliardSequence>().unwrap(),
            seq(&[1, 3, 5])
        );
        assert_eq!(seq(&[1, 3, 5]).to_string(), "(1,3,5)");
    }

    #[test]
    fn rotation_arithmetic() {
        let a = seq(&[1, 4]);
        assert_eq!(rotate_sequence(&a, 0, 6), a);
        assert_eq!(rotate_sequence(&a, 1, 6), seq(&[2, 5]));
        assert_eq!(rotate_sequence(&a, 6, 6), a);
        assert_eq!(rotate_sequence(&a, 3, 6), seq(&[4, 1]));
    }

    #[test]
    fn mirror_labels() {
        assert_eq!(reflect_sequence(&seq(&[2, 3, 4])).unwrap(), seq(&[1, 4, 3]));
        assert_eq!(reflect_sequence(&seq(&[1, 3])).unwrap(), seq(&[2, 4]));
        let a = seq(&[1, 3, 2, 4]);
        assert_eq!(reflect_sequence(&reflect_sequence(&a).unwrap()).unwrap(), a);
        assert!(reflect_sequence(&seq(&[1, 5])).is_err());
    }

    #[test]
    fn canonical_form_ignores_start_and_direction() {
        let a = seq(&[3, 1, 5, 2]);
        assert!(a.same_cycle(&a.shifted(2)));
        assert!(a.same_cycle(&a.reversed()));
        assert_eq!(a.canonical(), vec![1, 3, 2, 5]);
    }
}
