//! Exact arithmetic on permutations of `{1..r}`, lexicographic ranking, and
//! orbit/transitivity utilities.
//!
//! Permutations are stored by their image sequence `(x(1), ..., x(r))` and
//! ordered 1-based lexicographically on that sequence, so rank 1 is always the
//! identity. Composition is right-to-left: `(x * y)(i) = x(y(i))`.

use crate::error::{Error, Result};
use std::fmt;

/// Hard ceiling on the supported degree. `(R_MAX!)^2` vertices is the
/// practical desk-scale limit for the shift graph; raising this requires a
/// recompile (the image array of [`Perm`] is sized by it).
pub const R_MAX: u8 = 7;

const FACTORIALS: [u32; R_MAX as usize + 1] = [1, 1, 2, 6, 24, 120, 720, 5040];

/// The degree `r` of a symmetric group `S_r`, validated to `1..=R_MAX`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Degree(u8);

impl Degree {
    pub fn new(r: u8) -> Result<Self> {
        if r < 1 || r > R_MAX {
            return Err(Error::DegreeOutOfRange {
                r: r as u32,
                max: R_MAX as u32,
            });
        }
        Ok(Degree(r))
    }

    #[inline]
    pub fn get(self) -> u8 {
        self.0
    }

    /// `r!`, the order of `S_r`.
    #[inline]
    pub fn order(self) -> u32 {
        FACTORIALS[self.0 as usize]
    }

    /// All elements of `S_r` in rank (lexicographic) order.
    pub fn elements(self) -> impl Iterator<Item = Perm> {
        (1..=self.order()).map(move |k| Perm::from_rank(Rank(k), self).expect("rank in range"))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// 1-based lexicographic rank of a permutation; rank 1 is the identity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rank(pub u32);

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A permutation of `{1..r}`, stored as its image sequence.
///
/// Values are small and `Copy`; the degree travels with every value and
/// mixed-degree operations panic.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    deg: u8,
    // 1-based images in positions 0..deg, zero-padded above.
    images: [u8; R_MAX as usize],
}

impl Perm {
    pub fn identity(d: Degree) -> Self {
        let mut images = [0u8; R_MAX as usize];
        for i in 0..d.get() {
            images[i as usize] = i + 1;
        }
        Perm { deg: d.get(), images }
    }

    /// Builds a permutation from its 1-based image sequence.
    pub fn from_images(images: &[u8]) -> Result<Self> {
        let r = images.len();
        let invalid = || Error::InvalidImages {
            images: images.to_vec(),
            degree: r as u8,
        };
        if r < 1 || r > R_MAX as usize {
            return Err(Error::DegreeOutOfRange {
                r: r as u32,
                max: R_MAX as u32,
            });
        }
        let mut seen = [false; R_MAX as usize];
        for &x in images {
            if x < 1 || x as usize > r || seen[x as usize - 1] {
                return Err(invalid());
            }
            seen[x as usize - 1] = true;
        }
        let mut arr = [0u8; R_MAX as usize];
        arr[..r].copy_from_slice(images);
        Ok(Perm { deg: r as u8, images: arr })
    }

    /// The permutation of rank `k` in lexicographic order, via the factorial
    /// number system.
    pub fn from_rank(k: Rank, d: Degree) -> Result<Self> {
        let order = d.order();
        if k.0 < 1 || k.0 > order {
            return Err(Error::RankOutOfRange {
                rank: k.0 as u64,
                degree: d.get(),
                max: order,
            });
        }
        let r = d.get() as usize;
        let mut rem = k.0 - 1;
        let mut pool: Vec<u8> = (1..=r as u8).collect();
        let mut images = [0u8; R_MAX as usize];
        for i in 0..r {
            let f = FACTORIALS[r - 1 - i];
            let digit = (rem / f) as usize;
            rem %= f;
            images[i] = pool.remove(digit);
        }
        Ok(Perm { deg: r as u8, images })
    }

    /// Lexicographic rank, the inverse of [`Perm::from_rank`].
    pub fn rank(&self) -> Rank {
        let r = self.deg as usize;
        let imgs = &self.images[..r];
        let mut rank = 0u32;
        for i in 0..r {
            let smaller_later = imgs[i + 1..].iter().filter(|&&x| x < imgs[i]).count() as u32;
            rank += smaller_later * FACTORIALS[r - 1 - i];
        }
        Rank(rank + 1)
    }

    #[inline]
    pub fn degree(&self) -> Degree {
        Degree(self.deg)
    }

    /// 1-based image sequence.
    #[inline]
    pub fn images(&self) -> &[u8] {
        &self.images[..self.deg as usize]
    }

    /// Image of the 1-based point `i`.
    #[inline]
    pub fn apply(&self, i: u8) -> u8 {
        debug_assert!(i >= 1 && i <= self.deg);
        self.images[i as usize - 1]
    }

    #[inline]
    pub fn is_identity(&self) -> bool {
        self.images().iter().enumerate().all(|(i, &x)| x == i as u8 + 1)
    }

    /// Right-to-left composition: `(self * other)(i) = self(other(i))`.
    /// Panics if the degrees differ.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.deg, other.deg, "compose: degree mismatch");
        let mut images = [0u8; R_MAX as usize];
        for i in 0..self.deg as usize {
            images[i] = self.images[other.images[i] as usize - 1];
        }
        Perm { deg: self.deg, images }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = [0u8; R_MAX as usize];
        for i in 0..self.deg as usize {
            images[self.images[i] as usize - 1] = i as u8 + 1;
        }
        Perm { deg: self.deg, images }
    }

    /// Even iff the permutation lies in the alternating group `A_r`.
    pub fn parity(&self) -> Parity {
        let imgs = self.images();
        let mut inversions = 0usize;
        for i in 0..imgs.len() {
            for j in i + 1..imgs.len() {
                if imgs[i] > imgs[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// True for non-identity elements of order two (products of disjoint
    /// transpositions).
    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.compose(self).is_identity()
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.images().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
}

/// Number of non-trivial involutions in `S_r` (order-two elements), via the
/// telephone-number recurrence `T(r) = T(r-1) + (r-1) T(r-2)`.
pub fn count_involutions(d: Degree) -> u64 {
    let r = d.get() as usize;
    let mut t = [1u64; 2]; // T(0), T(1)
    for k in 2..=r {
        let next = t[1] + (k as u64 - 1) * t[0];
        t[0] = t[1];
        t[1] = next;
    }
    t[1] - 1
}

/// True iff the group generated by `gens` has a single orbit on `{1..r}`,
/// computed by orbit closure from point 1 (no group enumeration).
/// Panics if a generator's degree differs from `d`.
pub fn is_transitive(gens: &[Perm], d: Degree) -> bool {
    for g in gens {
        assert_eq!(g.degree(), d, "is_transitive: degree mismatch");
    }
    let r = d.get() as usize;
    let mut reached = [false; R_MAX as usize];
    reached[0] = true;
    let mut stack = vec![1u8];
    let mut count = 1usize;
    while let Some(p) = stack.pop() {
        for g in gens {
            // Close under generators and their inverses; images and
            // preimages both stay in the orbit.
            let q = g.apply(p);
            if !reached[q as usize - 1] {
                reached[q as usize - 1] = true;
                count += 1;
                stack.push(q);
            }
            let q = g.inverse().apply(p);
            if !reached[q as usize - 1] {
                reached[q as usize - 1] = true;
                count += 1;
                stack.push(q);
            }
        }
    }
    count == r
}


#[cfg(test)]
mod prop_tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_degree() -> impl Strategy<Value = Degree> {
        (2u8..=R_MAX).prop_map(|r| Degree::new(r).unwrap())
    }

    fn perm_of(d: Degree) -> impl Strategy<Value = Perm> {
        (1..=d.order()).prop_map(move |k| Perm::from_rank(Rank(k), d).unwrap())
    }

    fn arb_perm_triple() -> impl Strategy<Value = (Perm, Perm, Perm)> {
        arb_degree().prop_flat_map(|d| (perm_of(d), perm_of(d), perm_of(d)))
    }

    proptest! {
        #[test]
        fn rank_unrank_round_trip(p in arb_degree().prop_flat_map(perm_of)) {
            prop_assert_eq!(Perm::from_rank(p.rank(), p.degree()).unwrap(), p);
        }

        #[test]
        fn compose_is_associative((x, y, z) in arb_perm_triple()) {
            prop_assert_eq!(x.compose(&y).compose(&z), x.compose(&y.compose(&z)));
        }

        #[test]
        fn inverse_is_two_sided(p in arb_degree().prop_flat_map(perm_of)) {
            prop_assert!(p.compose(&p.inverse()).is_identity());
            prop_assert!(p.inverse().compose(&p).is_identity());
        }

        #[test]
        fn parity_is_a_homomorphism((x, y, _) in arb_perm_triple()) {
            let want = if x.parity() == y.parity() { Parity::Even } else { Parity::Odd };
            prop_assert_eq!(x.compose(&y).parity(), want);
        }

        #[test]
        fn rank_order_is_image_lex_order((x, y, _) in arb_perm_triple()) {
            prop_assert_eq!(x.rank() < y.rank(), x.images() < y.images());
        }
    }
}
