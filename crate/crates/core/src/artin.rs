//! The Artin action of `B_m` on the free group `F_m = ⟨x_1, …, x_m⟩`.
//!
//! The action is faithful, so comparing generator images decides equality
//! of disk braids. It does not decide equality in the spherical quotient.
//!
//! `σ_i` acts by `x_i ↦ x_i x_{i+1} x_i^{-1}`, `x_{i+1} ↦ x_i`, and the
//! automorphism of a word `l_1 ⋯ l_k` is `φ_{l_1} ∘ ⋯ ∘ φ_{l_k}`.

use std::fmt;

use crate::braid::BraidWord;
use crate::{Error, Result};

/// Default cap on the number of letters of an input braid.
pub const DEFAULT_MAX_BRAID_LETTERS: usize = 10_000;

/// Default cap on the total length of all generator images.
pub const DEFAULT_MAX_IMAGE_LETTERS: usize = 1 << 26;

/// A freely reduced word in `x_1^{±1}, …, x_rank^{±1}`, stored as signed
/// 1-based generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    /// Builds a word and freely reduces it.
    pub fn new(rank: usize, letters: &[i32]) -> Result<Self> {
        if let Some(&bad) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize > rank)
        {
            return Err(Error::out_of_range(
                "free generator",
                bad as i64,
                format!("±[1, {rank}]"),
            ));
        }
        let mut w = FreeWord::empty(rank);
        w.extend(letters);
        Ok(w)
    }

    pub fn empty(rank: usize) -> Self {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// The generator `x_i`.
    pub fn generator(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= rank);
        FreeWord {
            rank,
            letters: vec![i as i32],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != -w[1])
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Appends letters, cancelling at the junction.
    fn extend(&mut self, letters: &[i32]) {
        for &l in letters {
            if self.letters.last() == Some(&-l) {
                self.letters.pop();
            } else {
                self.letters.push(l);
            }
        }
    }

    fn extend_inverse(&mut self, letters: &[i32]) {
        for &l in letters.iter().rev() {
            if self.letters.last() == Some(&l) {
                self.letters.pop();
            } else {
                self.letters.push(-l);
            }
        }
    }

    /// The reduced product `self · other`.
    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        out.extend(&other.letters);
        out
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if *l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

/// An endomorphism of `F_rank` given by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeAutomorphism {
    images: Vec<FreeWord>,
}

impl FreeAutomorphism {
    pub fn identity(rank: usize) -> Self {
        FreeAutomorphism {
            images: (1..=rank).map(|i| FreeWord::generator(rank, i)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Image of `x_i`, 1-based.
    pub fn image(&self, i: usize) -> &FreeWord {
        &self.images[i - 1]
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, w)| w.letters == [k as i32 + 1])
    }

    /// Substitutes the generator images into `w`.
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        assert_eq!(w.rank, self.rank(), "rank mismatch");
        let mut out = FreeWord::empty(self.rank());
        for &l in &w.letters {
            let img = &self.images[l.unsigned_abs() as usize - 1].letters;
            if l > 0 {
                out.extend(img);
            } else {
                out.extend_inverse(img);
            }
        }
        out
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &FreeAutomorphism) -> FreeAutomorphism {
        FreeAutomorphism {
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    fn total_len(&self) -> usize {
        self.images.iter().map(|w| w.len()).sum()
    }
}

/// The Artin automorphism of a braid, with the default resource caps.
pub fn artin_automorphism(braid: &BraidWord) -> Result<FreeAutomorphism> {
    artin_automorphism_with_limits(braid, DEFAULT_MAX_BRAID_LETTERS, DEFAULT_MAX_IMAGE_LETTERS)
}

pub fn artin_automorphism_with_limits(
    braid: &BraidWord,
    max_braid_letters: usize,
    max_image_letters: usize,
) -> Result<FreeAutomorphism> {
    if braid.len() > max_braid_letters {
        return Err(Error::ResourceLimit(format!(
            "braid has {} letters, cap is {max_braid_letters}",
            braid.len()
        )));
    }
    let mut cur = FreeAutomorphism::identity(braid.strands());
    for l in braid.letters() {
        let i = l.index() - 1;
        let a = cur.images[i].clone();
        let b = cur.images[i + 1].clone();
        let (new_i, new_next) = if l.is_positive() {
            let mut w = a.clone();
            w.extend(&b.letters);
            w.extend_inverse(&a.letters);
            (w, a)
        } else {
            let mut w = b.inverse();
            w.extend(&a.letters);
            w.extend(&b.letters);
            (b, w)
        };
        cur.images[i] = new_i;
        cur.images[i + 1] = new_next;
        if cur.total_len() > max_image_letters {
            return Err(Error::ResourceLimit(format!(
                "free-group images exceed {max_image_letters} letters"
            )));
        }
    }
    Ok(cur)
}

/// Equality in the disk braid group `B_m`.
pub fn braids_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    if a.permutation() != b.permutation() || a.exponent_sum() != b.exponent_sum() {
        return Ok(false);
    }
    Ok(artin_automorphism(a)? == artin_automorphism(b)?)
}

/// Whether a braid is trivial in `B_m`.
pub fn is_trivial(a: &BraidWord) -> Result<bool> {
    if !a.permutation().is_identity() || a.exponent_sum() != 0 {
        return Ok(false);
    }
    Ok(artin_automorphism(a)?.is_identity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{full_twist_power, half_twist, w6};

    fn word(text: &str, m: usize) -> BraidWord {
        BraidWord::parse(text, m).unwrap()
    }

    #[test]
    fn sigma1_action() {
        let phi = artin_automorphism(&word("1", 3)).unwrap();
        assert_eq!(phi.image(1).letters(), &[1, 2, -1]);
        assert_eq!(phi.image(2).letters(), &[1]);
        assert_eq!(phi.image(3).letters(), &[3]);
        assert!(artin_automorphism(&word("", 4)).unwrap().is_identity());
    }

    #[test]
    fn inverse_letter_undoes_letter() {
        let a = word("1 -1", 3);
        assert!(artin_automorphism(&a).unwrap().is_identity());
        let b = word("2 1 -2 3 3 -1", 4);
        let ab = b.compose(&b.inverse()).unwrap();
        assert!(artin_automorphism(&ab).unwrap().is_identity());
    }

    #[test]
    fn braid_relations() {
        assert!(braids_equal(&word("1 2 1", 3), &word("2 1 2", 3)).unwrap());
        assert!(braids_equal(&word("1 3", 4), &word("3 1", 4)).unwrap());
        assert!(!braids_equal(&word("1 2", 3), &word("2 1", 3)).unwrap());
        assert!(!braids_equal(&word("1 1", 2), &word("", 2)).unwrap());
        assert!(braids_equal(&word("1", 2), &word("1", 3)).is_err());
    }

    #[test]
    fn w6_spellings_agree() {
        let alt = word("-2 -1 3 2 4 3 4 3 4", 6);
        assert!(braids_equal(&w6(), &alt).unwrap());
    }

    #[test]
    fn full_twist_is_square_of_half_twist() {
        for m in 2..=6 {
            let d = half_twist(m).unwrap();
            let dd = d.compose(&d).unwrap();
            assert!(braids_equal(&full_twist_power(m, 1).unwrap(), &dd).unwrap());
        }
    }

    #[test]
    fn full_twist_is_central() {
        let ft = full_twist_power(4, 1).unwrap();
        for i in 1..4 {
            let s = word(&i.to_string(), 4);
            let lhs = ft.compose(&s).unwrap();
            let rhs = s.compose(&ft).unwrap();
            assert!(braids_equal(&lhs, &rhs).unwrap());
        }
    }

    #[test]
    fn resource_caps() {
        let long = word(&vec!["1"; 20].join(" "), 2);
        let err = artin_automorphism_with_limits(&long, 10, 1000).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(_)));
        let grow = word(&vec!["1 -2"; 30].join(" "), 3);
        let err = artin_automorphism_with_limits(&grow, 1000, 500).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(_)));
    }

    #[test]
    fn free_word_basics() {
        let w = FreeWord::new(3, &[1, 2, -2, 3]).unwrap();
        assert_eq!(w.letters(), &[1, 3]);
        assert!(w.mul(&w.inverse()).is_empty());
        assert_eq!(w.to_string(), "x1 x3");
        assert_eq!(w.inverse().to_string(), "x3^-1 x1^-1");
        assert!(FreeWord::new(2, &[3]).is_err());
        assert!(FreeWord::new(2, &[0]).is_err());
    }
}
