//! Wall words, necklaces, and wall stabilizers.
//!
//! An oriented wall is a bi-infinite edge path whose consecutive labels are
//! straight. An axial wall of `g` is periodic with period `n = |g|`, so it is
//! described by `n` labels read from a base vertex. Its `Z_Γ(g)`-orbit only
//! depends on the labels up to rotation, which is the necklace.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{describe, Error};
use crate::presentation::TrianglePresentation;
use crate::word::FormalWord;
use crate::Gen;

/// Start index of the lexicographically least rotation of `seq`.
///
/// Two-pointer minimum-expression search, linear in `seq.len()`.
pub fn least_rotation_start<T: Ord>(seq: &[T]) -> usize {
    let n = seq.len();
    if n == 0 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = &seq[(i + k) % n];
        let b = &seq[(j + k) % n];
        match a.cmp(b) {
            core::cmp::Ordering::Equal => k += 1,
            core::cmp::Ordering::Greater => {
                i += k + 1;
                if i == j {
                    i += 1;
                }
                k = 0;
            }
            core::cmp::Ordering::Less => {
                j += k + 1;
                if i == j {
                    j += 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

/// `seq` read starting at index `start` (cyclically).
pub fn rotate<T: Clone>(seq: &[T], start: usize) -> Vec<T> {
    let n = seq.len();
    (0..n).map(|k| seq[(start + k) % n].clone()).collect()
}

pub fn least_rotation<T: Ord + Clone>(seq: &[T]) -> Vec<T> {
    rotate(seq, least_rotation_start(seq))
}

/// Least `p ≥ 1` with `seq` invariant under rotation by `p`; always divides the length.
pub fn minimal_period<T: PartialEq>(seq: &[T]) -> usize {
    let n = seq.len();
    (1..=n)
        .filter(|p| n.is_multiple_of(*p))
        .find(|&p| (0..n).all(|k| seq[k] == seq[(k + p) % n]))
        .unwrap_or(n.max(1))
}

/// A cyclic label sequence stored as its least rotation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Necklace {
    labels: Vec<Gen>,
    period: usize,
}

impl Necklace {
    /// Canonicalizes `labels`; no wall condition is checked here.
    pub fn new(labels: &[Gen]) -> Self {
        let labels = least_rotation(labels);
        let period = minimal_period(&labels);
        Necklace { labels, period }
    }

    /// The canonical rotation, of length `n`.
    pub fn labels(&self) -> &[Gen] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// One period of the canonical rotation, as in `(0,5)` or `(2)`.
    pub fn display_label(&self) -> String {
        alloc::format!("({})", describe(&self.labels[..self.period]))
    }
}

/// Checks the wall condition on a cyclic label sequence.
pub fn check_wall(pres: &TrianglePresentation, labels: &[Gen]) -> Result<(), Error> {
    if labels.is_empty() {
        return Err(Error::EmptyWord);
    }
    for (position, &g) in labels.iter().enumerate() {
        if !pres.is_generator(g as usize) {
            return Err(Error::BadGenerator {
                position,
                generator: g,
            });
        }
    }
    let n = labels.len();
    for k in 0..n {
        let next = (k + 1) % n;
        if !pres.straight(labels[k], labels[next]) {
            return Err(Error::NotAWallWord {
                position: k,
                next,
                first: labels[k],
                second: labels[next],
            });
        }
    }
    Ok(())
}

/// The necklace of the axis of the element spelled by `word`, provided the
/// cyclic word is a wall word. Then the path through the base vertex is an
/// axial wall of the element and `|g| = word.len()`.
pub fn wall_word(pres: &TrianglePresentation, word: &[Gen]) -> Result<Necklace, Error> {
    check_wall(pres, word)?;
    Ok(Necklace::new(word))
}

/// Order of the image of the wall stabilizer `S(ℓ)` in `Z_Γ(g)/⟨g⟩`.
pub fn stabilizer_order(n: usize, period: usize) -> Result<usize, Error> {
    if period == 0 || !n.is_multiple_of(period) {
        return Err(Error::invariant(alloc::format!(
            "wall period {period} does not divide g-length {n}"
        )));
    }
    Ok(n / period)
}

/// The minimal translation along a wall through the vertex named by `base`,
/// whose labels read from that vertex are `phased` (one full g-period):
/// `base · x_{a_0} ⋯ x_{a_{p-1}} · base⁻¹`.
pub fn stabilizer_generator_word(base: &FormalWord, phased: &[Gen]) -> FormalWord {
    let p = minimal_period(phased);
    base.conjugate(&FormalWord::positive(&phased[..p]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Letter;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn naive_least_rotation(seq: &[Gen]) -> Vec<Gen> {
        (0..seq.len()).map(|k| rotate(seq, k)).min().unwrap_or_default()
    }

    #[test]
    fn wall_words_in_c1() {
        let p = TrianglePresentation::c1();
        let n = wall_word(&p, &[0, 5]).unwrap();
        assert_eq!(n.labels(), &[0, 5]);
        assert_eq!(n.period(), 2);
        assert_eq!(wall_word(&p, &[5, 0]).unwrap(), n);
        let n = wall_word(&p, &[0, 1, 4]).unwrap();
        assert_eq!(n.labels(), &[0, 1, 4]);
        assert_eq!(n.period(), 3);
    }

    #[test]
    fn bent_word_rejected() {
        let p = TrianglePresentation::c1();
        assert_eq!(
            wall_word(&p, &[0, 2]),
            Err(Error::NotAWallWord {
                position: 0,
                next: 1,
                first: 0,
                second: 2
            })
        );
        assert_eq!(wall_word(&p, &[]), Err(Error::EmptyWord));
        assert!(matches!(
            wall_word(&p, &[0, 9]),
            Err(Error::BadGenerator { position: 1, .. })
        ));
    }

    #[test]
    fn stabilizer_orders() {
        assert_eq!(stabilizer_order(2, 1), Ok(2));
        assert_eq!(stabilizer_order(2, 2), Ok(1));
        assert_eq!(stabilizer_order(3, 3), Ok(1));
        assert!(stabilizer_order(3, 2).is_err());
    }

    #[test]
    fn stabilizer_generators() {
        let base = FormalWord::from_letters([Letter::neg(6)]);
        assert_eq!(
            stabilizer_generator_word(&base, &[2, 2]).to_string(),
            "x6^-1 x2 x6"
        );
        assert_eq!(
            stabilizer_generator_word(&FormalWord::identity(), &[0, 5]).to_string(),
            "x0 x5"
        );
        let base = FormalWord::from_letters([Letter::neg(3)]);
        assert_eq!(
            stabilizer_generator_word(&base, &[6, 6]).to_string(),
            "x3^-1 x6 x3"
        );
    }

    #[test]
    fn display_label_uses_one_period() {
        assert_eq!(Necklace::new(&[2, 2]).display_label(), "(2)");
        assert_eq!(Necklace::new(&[5, 0]).display_label(), "(0,5)");
    }

    proptest! {
        #[test]
        fn least_rotation_matches_naive(seq in prop::collection::vec(0u8..4, 1..12)) {
            prop_assert_eq!(least_rotation(&seq), naive_least_rotation(&seq));
        }

        #[test]
        fn necklace_is_rotation_invariant(seq in prop::collection::vec(0u8..3, 1..10), k in 0usize..10) {
            let a = Necklace::new(&seq);
            let b = Necklace::new(&rotate(&seq, k % seq.len()));
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(a.len() % a.period(), 0);
            prop_assert_eq!(stabilizer_order(a.len(), a.period()).unwrap() * a.period(), a.len());
        }

        #[test]
        fn rotations_of_wall_words_are_wall_words(seq in prop::collection::vec(0u8..7, 1..6), k in 0usize..6) {
            let p = TrianglePresentation::c1();
            if check_wall(&p, &seq).is_ok() {
                let r = rotate(&seq, k % seq.len());
                prop_assert!(check_wall(&p, &r).is_ok());
                prop_assert_eq!(wall_word(&p, &r).unwrap(), wall_word(&p, &seq).unwrap());
            }
        }
    }

    #[test]
    fn minimal_periods() {
        assert_eq!(minimal_period(&[6u8, 6]), 1);
        assert_eq!(minimal_period(&[0u8, 5, 0, 5]), 2);
        assert_eq!(minimal_period(&[1u8, 2, 3]), 3);
    }
}
