//! Braid words on `m` strands.
//!
//! A [`BraidWord`] is a finite sequence of Artin generators `σ_i^{±1}`,
//! `1 ≤ i ≤ m-1`, kept exactly as written: constructors never reduce, so the
//! spellings used in the literature survive for display and comparison.
//! Free reduction is explicit ([`BraidWord::free_reduce`]).
//!
//! Conventions (all indices are 1-based):
//!
//! * `compose(a, b)` lists the letters of `a` followed by those of `b`.
//! * Permutations compose right to left, `(p ∘ q)(x) = p(q(x))`, and
//!   `permutation(compose(a, b)) = permutation(a) ∘ permutation(b)`.
//! * `σ_i` carries sign `+1`; with this choice the full twist
//!   `(σ_1 ⋯ σ_{m-1})^m` has exponent sum `+m(m-1)`.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// One Artin generator `σ_i` or its inverse, stored as the signed token `±i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(i32);

impl Letter {
    pub fn new(index: usize, positive: bool) -> Self {
        assert!(index >= 1, "generator indices are 1-based");
        let i = index as i32;
        Letter(if positive { i } else { -i })
    }

    pub fn pos(index: usize) -> Self {
        Letter::new(index, true)
    }

    pub fn neg(index: usize) -> Self {
        Letter::new(index, false)
    }

    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn sign(self) -> i64 {
        if self.0 > 0 {
            1
        } else {
            -1
        }
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    /// The signed integer token, `k` for `σ_k` and `-k` for `σ_k^{-1}`.
    pub fn token(self) -> i32 {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::domain("a braid needs at least one strand"));
        }
        if let Some(bad) = letters.iter().find(|l| l.index() >= strands) {
            return Err(Error::out_of_range(
                "generator",
                bad.index() as i64,
                format!("[1, {}]", strands - 1),
            ));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1);
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn from_tokens(strands: usize, tokens: &[i32]) -> Result<Self> {
        let mut letters = Vec::with_capacity(tokens.len());
        for &tok in tokens {
            if tok == 0 {
                return Err(Error::Parse {
                    token: "0".into(),
                    reason: "generator index must be nonzero".into(),
                });
            }
            letters.push(Letter(tok));
        }
        BraidWord::new(strands, letters)
    }

    /// Parses whitespace-separated signed integers: `k` is `σ_k`, `-k` is
    /// `σ_k^{-1}`. The empty string is the identity braid.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(Error::domain("a braid needs at least one strand"));
        }
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let value: i64 = tok.parse().map_err(|_| Error::Parse {
                token: tok.to_string(),
                reason: "not an integer".into(),
            })?;
            if value == 0 {
                return Err(Error::Parse {
                    token: tok.to_string(),
                    reason: "generator index must be nonzero".into(),
                });
            }
            if value.unsigned_abs() >= strands as u64 {
                return Err(Error::Parse {
                    token: tok.to_string(),
                    reason: format!("|index| must be at most {}", strands - 1),
                });
            }
            letters.push(Letter(value as i32));
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from tokens already known to be in range.
    fn build(strands: usize, tokens: impl IntoIterator<Item = i32>) -> Self {
        let letters: Vec<Letter> = tokens.into_iter().map(Letter).collect();
        debug_assert!(letters.iter().all(|l| l.0 != 0 && l.index() < strands));
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn tokens(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.token()).collect()
    }

    /// Largest generator index used, or 0 for the empty word.
    pub fn max_index(&self) -> usize {
        self.letters.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self^k`; negative exponents use the inverse word.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let reps = k.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.letters.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Cancels adjacent `σ_i σ_i^{-1}` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            let i = l.index() - 1;
            images.swap(i, i + 1);
        }
        Permutation { images }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    /// Components of the braided link: closure components plus the axis.
    pub fn closure_components(&self) -> usize {
        self.permutation().cycles().len() + 1
    }

    /// Whether the permutation maps every endpoint pair `{2i-1, 2i}` onto a
    /// pair `{2j-1, 2j}`. Necessary, not sufficient, for wicket membership.
    pub fn pairing_preserved(&self) -> Result<bool> {
        if self.strands % 2 != 0 {
            return Err(Error::domain(format!(
                "pairing needs an even strand count, got {}",
                self.strands
            )));
        }
        let p = self.permutation();
        Ok((0..self.strands / 2).all(|k| {
            let a = p.images[2 * k];
            let b = p.images[2 * k + 1];
            a / 2 == b / 2
        }))
    }

    /// The same letters on one strand fewer. The last strand must not be
    /// touched by any letter.
    pub fn underline(&self) -> Result<BraidWord> {
        if self.strands < 2 || self.max_index() >= self.strands - 1 {
            return Err(Error::domain(format!(
                "word uses generator {} so strand {} cannot be dropped",
                self.max_index(),
                self.strands
            )));
        }
        Ok(BraidWord {
            strands: self.strands - 1,
            letters: self.letters.clone(),
        })
    }

    /// Forgets strand `k`, which must be fixed by the permutation. Letters
    /// crossing the forgotten strand disappear, the others are reindexed.
    pub fn remove_strand(&self, k: usize) -> Result<BraidWord> {
        if k == 0 || k > self.strands {
            return Err(Error::out_of_range(
                "strand",
                k as i64,
                format!("[1, {}]", self.strands),
            ));
        }
        if self.strands < 2 {
            return Err(Error::domain("cannot remove the only strand"));
        }
        if self.permutation().apply(k) != k {
            return Err(Error::domain(format!(
                "strand {k} is not fixed by the braid permutation"
            )));
        }
        let mut pos = k;
        let mut tokens = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            let i = l.index();
            if i == pos {
                pos += 1;
            } else if i + 1 == pos {
                pos -= 1;
            } else if i + 1 < pos {
                tokens.push(l.token());
            } else {
                tokens.push(l.token() - l.sign() as i32);
            }
        }
        debug_assert_eq!(pos, k);
        Ok(BraidWord::build(self.strands - 1, tokens))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.token())?;
            first = false;
        }
        Ok(())
    }
}

/// A permutation of `{1, …, size}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // 0-based images
    images: Vec<usize>,
}

impl Permutation {
    /// From 1-based images `images[i-1] = p(i)`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::domain(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|x| x - 1).collect(),
        })
    }

    pub fn identity(size: usize) -> Self {
        Permutation {
            images: (0..size).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// `p(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "permutation sizes differ");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycles (fixed points included), each starting at its least element,
    /// ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            let body: Vec<String> = cycle.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// `Δ_m = (σ_1 ⋯ σ_{m-1})(σ_1 ⋯ σ_{m-2}) ⋯ σ_1`.
pub fn half_twist(m: usize) -> Result<BraidWord> {
    if m < 2 {
        return Err(Error::domain(format!("half twist needs m >= 2, got {m}")));
    }
    let tokens = (1..m).rev().flat_map(|top| 1..=top as i32);
    Ok(BraidWord::build(m, tokens))
}

/// `Δ_m^{2ℓ}` spelled as `(σ_1 ⋯ σ_{m-1})^{mℓ}`.
pub fn full_twist_power(m: usize, ell: usize) -> Result<BraidWord> {
    if m < 2 {
        return Err(Error::domain(format!("full twist needs m >= 2, got {m}")));
    }
    let row: Vec<i32> = (1..m as i32).collect();
    let tokens = std::iter::repeat_n(row, m * ell).flatten();
    Ok(BraidWord::build(m, tokens))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WicketKind {
    R,
    S,
    T,
}

impl WicketKind {
    pub fn name(self) -> &'static str {
        match self {
            WicketKind::R => "r",
            WicketKind::S => "s",
            WicketKind::T => "t",
        }
    }
}

/// A wicket generator or its inverse, as used in Hilden-generator expansions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WicketLetter {
    pub kind: WicketKind,
    pub index: usize,
    pub inverse: bool,
}

impl WicketLetter {
    fn new(kind: WicketKind, index: usize) -> Self {
        WicketLetter {
            kind,
            index,
            inverse: false,
        }
    }

    fn inv(kind: WicketKind, index: usize) -> Self {
        WicketLetter {
            kind,
            index,
            inverse: true,
        }
    }
}

impl fmt::Display for WicketLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.name(), self.index)?;
        if self.inverse {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

fn pair_count(strands: usize) -> Result<usize> {
    if strands % 2 != 0 || strands < 2 {
        return Err(Error::domain(format!(
            "wicket generators need a positive even strand count, got {strands}"
        )));
    }
    Ok(strands / 2)
}

/// `r_i = σ_{2i} σ_{2i+1} σ_{2i-1}^{-1} σ_{2i}^{-1}`,
/// `s_i = σ_{2i}^{-1} σ_{2i+1}^{-1} σ_{2i-1}^{-1} σ_{2i}^{-1}` (`1 ≤ i ≤ n-1`),
/// `t_j = σ_{2j-1}^{-1}` (`1 ≤ j ≤ n`), on `2n` strands.
pub fn wicket_generator(kind: WicketKind, i: usize, strands: usize) -> Result<BraidWord> {
    let n = pair_count(strands)?;
    let hi = match kind {
        WicketKind::R | WicketKind::S => n - 1,
        WicketKind::T => n,
    };
    if i == 0 || i > hi {
        return Err(Error::out_of_range(
            kind.name(),
            i as i64,
            format!("[1, {hi}]"),
        ));
    }
    let k = i as i32;
    let tokens = match kind {
        WicketKind::R => vec![2 * k, 2 * k + 1, -(2 * k - 1), -2 * k],
        WicketKind::S => vec![-2 * k, -(2 * k + 1), -(2 * k - 1), -2 * k],
        WicketKind::T => vec![-(2 * k - 1)],
    };
    Ok(BraidWord::build(strands, tokens))
}

/// Expands a product of wicket letters into a σ-word on `strands` strands.
pub fn wicket_word(letters: &[WicketLetter], strands: usize) -> Result<BraidWord> {
    let mut out = BraidWord::identity(strands.max(1));
    for wl in letters {
        let g = wicket_generator(wl.kind, wl.index, strands)?;
        let g = if wl.inverse { g.inverse() } else { g };
        out.letters.extend_from_slice(&g.letters);
    }
    Ok(out)
}

/// Generators of the Hilden group, as products of wicket generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HildenGenerator {
    Eta(usize),
    Rho(usize, usize),
    Omega(usize, usize),
    Theta,
}

impl fmt::Display for HildenGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HildenGenerator::Eta(i) => write!(f, "eta_{i}"),
            HildenGenerator::Rho(i, j) => write!(f, "rho_{i},{j}"),
            HildenGenerator::Omega(i, j) => write!(f, "omega_{i},{j}"),
            HildenGenerator::Theta => f.write_str("theta"),
        }
    }
}

/// The wicket-generator expansion of a Hilden generator on `2n` strands.
///
/// Formulas whose middle run is empty (e.g. `ω_{i,i+1} = s_i^2 t_i^2`,
/// `ρ_{i,i+1} = s_i r_i t_i^2`) are instantiated literally.
pub fn hilden_expansion(gen: HildenGenerator, n: usize) -> Result<Vec<WicketLetter>> {
    use WicketKind::{R, S, T};
    let check = |what: &'static str, v: usize, hi: usize| {
        if v == 0 || v > hi {
            Err(Error::out_of_range(what, v as i64, format!("[1, {hi}]")))
        } else {
            Ok(())
        }
    };
    let s = |k: usize| WicketLetter::new(S, k);
    let mut w = Vec::new();
    match gen {
        HildenGenerator::Eta(i) => {
            check("eta", i, n.saturating_sub(1))?;
            w.extend([s(i), WicketLetter::new(T, i), WicketLetter::new(T, i + 1)]);
        }
        HildenGenerator::Rho(i, j) => {
            check("rho i", i, n)?;
            check("rho j", j, n)?;
            if i == j {
                return Err(Error::domain("rho_{i,j} needs j != i"));
            }
            if i < j {
                w.extend((i..j).map(s));
                w.push(WicketLetter::new(R, j - 1));
                w.extend((i..j - 1).rev().map(s));
            } else {
                w.extend((j..i).rev().map(s));
                w.push(WicketLetter::inv(R, j));
                w.extend((j + 1..i).map(s));
            }
            w.extend([WicketLetter::new(T, i), WicketLetter::new(T, i)]);
        }
        HildenGenerator::Omega(i, j) => {
            check("omega i", i, n)?;
            check("omega j", j, n)?;
            if j == i || j + 1 == i {
                return Err(Error::domain("omega_{i,j} needs j not in {i-1, i}"));
            }
            if i < j {
                w.extend((i..j - 1).map(s));
                w.extend([s(j - 1), s(j - 1)]);
                w.extend((i..j - 1).rev().map(s));
            } else {
                w.extend((j + 2..i).rev().map(s));
                w.extend([s(j + 1), s(j + 1)]);
                w.extend((j + 2..i).map(s));
            }
            w.extend([WicketLetter::new(T, i), WicketLetter::new(T, i)]);
        }
        HildenGenerator::Theta => {
            if n == 0 {
                return Err(Error::domain("theta needs at least one wicket"));
            }
            w.push(WicketLetter::new(T, 1));
            w.extend((1..n).map(s));
            w.extend((1..n).rev().map(|k| WicketLetter::inv(R, k)));
            w.push(WicketLetter::new(T, 1));
        }
    }
    Ok(w)
}

pub fn hilden_generator(gen: HildenGenerator, strands: usize) -> Result<BraidWord> {
    let n = pair_count(strands)?;
    wicket_word(&hilden_expansion(gen, n)?, strands)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    W6,
    X4n8,
    Y4n8,
    W4n8,
    X4n6,
    Y4n6,
    W4n6,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::W6,
        FamilyKind::X4n8,
        FamilyKind::Y4n8,
        FamilyKind::W4n8,
        FamilyKind::X4n6,
        FamilyKind::Y4n6,
        FamilyKind::W4n6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::W6 => "w6",
            FamilyKind::X4n8 => "x4n8",
            FamilyKind::Y4n8 => "y4n8",
            FamilyKind::W4n8 => "w4n8",
            FamilyKind::X4n6 => "x4n6",
            FamilyKind::Y4n6 => "y4n6",
            FamilyKind::W4n6 => "w4n6",
        }
    }

    /// Strand count of the family member with parameter `n`.
    pub fn strands(self, n: usize) -> usize {
        match self {
            FamilyKind::W6 => 6,
            FamilyKind::X4n8 | FamilyKind::Y4n8 | FamilyKind::W4n8 => 4 * n + 8,
            FamilyKind::X4n6 | FamilyKind::Y4n6 | FamilyKind::W4n6 => 4 * n + 6,
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown braid family `{s}`")))
    }
}

/// `w_6 = σ_2^{-1} σ_1^{-1} σ_3 σ_2 σ_4 σ_3^2 σ_4 σ_3` on 6 strands.
pub fn w6() -> BraidWord {
    BraidWord::build(6, [-2, -1, 3, 2, 4, 3, 3, 4, 3])
}

/// `x_{4n+8} = σ_5 σ_2^{-1} σ_1^{-1} (σ_3 ⋯ σ_{4n+5})(σ_2 ⋯ σ_{4n+4}) σ_{4n+6} σ_{4n+5}^2 σ_{4n+6}`.
pub fn x4n8(n: usize) -> BraidWord {
    let k = 4 * n as i32;
    let tokens = [5, -2, -1]
        .into_iter()
        .chain(3..=k + 5)
        .chain(2..=k + 4)
        .chain([k + 6, k + 5, k + 5, k + 6]);
    BraidWord::build(4 * n + 8, tokens)
}

/// `y_{4n+8} = (σ_1 ⋯ σ_{4n+5})^4 σ_{4n+6} σ_{4n+5} σ_{4n+4} σ_{4n+3}^2 σ_{4n+4} σ_{4n+5} σ_{4n+6}`.
pub fn y4n8(n: usize) -> BraidWord {
    let k = 4 * n as i32;
    let tokens = (0..4).flat_map(|_| 1..=k + 5).chain([
        k + 6,
        k + 5,
        k + 4,
        k + 3,
        k + 3,
        k + 4,
        k + 5,
        k + 6,
    ]);
    BraidWord::build(4 * n + 8, tokens)
}

/// `w_{4n+8} = x_{4n+8} (y_{4n+8})^n`.
pub fn w4n8(n: usize) -> BraidWord {
    let mut w = x4n8(n);
    let y = y4n8(n);
    for _ in 0..n {
        w.letters.extend_from_slice(&y.letters);
    }
    w
}

fn drop_last_two(w: &BraidWord) -> BraidWord {
    let m = w.strands();
    w.remove_strand(m)
        .and_then(|v| v.remove_strand(m - 1))
        .expect("the last two strands of the 4n+8 family are fixed")
}

pub fn family_word(kind: FamilyKind, n: usize) -> Result<BraidWord> {
    let needs_positive = matches!(kind, FamilyKind::X4n6 | FamilyKind::Y4n6 | FamilyKind::W4n6);
    if needs_positive && n == 0 {
        return Err(Error::out_of_range(
            "family parameter n",
            0,
            "[1, ∞) for 4n+6 words",
        ));
    }
    Ok(match kind {
        FamilyKind::W6 => w6(),
        FamilyKind::X4n8 => x4n8(n),
        FamilyKind::Y4n8 => y4n8(n),
        FamilyKind::W4n8 => w4n8(n),
        FamilyKind::X4n6 => drop_last_two(&x4n8(n)),
        FamilyKind::Y4n6 => drop_last_two(&y4n8(n)),
        FamilyKind::W4n6 => drop_last_two(&w4n8(n)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(text: &str, m: usize) -> BraidWord {
        BraidWord::parse(text, m).unwrap()
    }

    #[test]
    fn parse_w6_tokens() {
        let w = word("-2 -1 3 2 4 3 3 4 3", 6);
        assert_eq!(w, w6());
        assert_eq!(w.to_string(), "-2 -1 3 2 4 3 3 4 3");
    }

    #[test]
    fn parse_edge_cases() {
        assert!(word("", 4).is_empty());
        assert!(word("   ", 4).is_empty());
        let err = BraidWord::parse("5", 5).unwrap_err();
        assert!(matches!(err, Error::Parse { ref token, .. } if token == "5"));
        let err = BraidWord::parse("1 0 2", 5).unwrap_err();
        assert!(matches!(err, Error::Parse { ref token, .. } if token == "0"));
        let err = BraidWord::parse("1 x", 5).unwrap_err();
        assert!(matches!(err, Error::Parse { ref token, .. } if token == "x"));
        assert!(BraidWord::parse("-5", 5).is_err());
    }

    #[test]
    fn compose_inverse_reduce() {
        let a = word("1", 3);
        let b = word("-1", 3);
        assert!(a.compose(&b).unwrap().free_reduce().is_empty());
        assert_eq!(word("-2 -1", 3).inverse(), word("1 2", 3));
        let x8 = x4n8(0);
        assert_eq!(x8.compose(&BraidWord::identity(8)).unwrap(), x8);
        assert!(matches!(
            a.compose(&BraidWord::identity(4)),
            Err(Error::StrandMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn w6_permutation_is_four_cycle() {
        let p = w6().permutation();
        assert_eq!(p.to_string(), "(1 3 2 4)(5)(6)");
        assert_eq!(p.images(), vec![3, 4, 2, 1, 5, 6]);
        assert!(BraidWord::identity(4).permutation().is_identity());
        assert_eq!(word("1", 2).permutation().to_string(), "(1 2)");
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(w6().exponent_sum(), 5);
        for m in 2..8 {
            let ft = full_twist_power(m, 1).unwrap();
            assert_eq!(ft.exponent_sum(), (m * (m - 1)) as i64);
        }
        let a = word("1 -2 3 3 -1", 4);
        assert_eq!(a.inverse().exponent_sum(), -a.exponent_sum());
    }

    #[test]
    fn closure_components_examples() {
        let under = w6().underline().unwrap();
        assert_eq!(under.strands(), 5);
        assert_eq!(under.closure_components(), 3);
        for m in 1..7 {
            assert_eq!(BraidWord::identity(m).closure_components(), m + 1);
        }
        assert_eq!(word("1", 2).closure_components(), 2);
    }

    #[test]
    fn underline_rejects_last_strand_use() {
        assert!(word("1 2", 3).underline().is_err());
        assert_eq!(word("1", 3).underline().unwrap().strands(), 2);
    }

    #[test]
    fn pairing_examples() {
        assert!(w6().pairing_preserved().unwrap());
        for m in [4, 6, 8] {
            let r1 = wicket_generator(WicketKind::R, 1, m).unwrap();
            assert!(r1.pairing_preserved().unwrap());
        }
        assert!(!word("2", 4).pairing_preserved().unwrap());
        assert!(word("1", 3).pairing_preserved().is_err());
    }

    #[test]
    fn twists() {
        assert_eq!(half_twist(2).unwrap(), word("1", 2));
        assert_eq!(half_twist(4).unwrap(), word("1 2 3 1 2 1", 4));
        assert!(full_twist_power(5, 0).unwrap().is_empty());
        assert_eq!(full_twist_power(3, 1).unwrap().len(), 6);
        assert!(half_twist(1).is_err());
        assert!(full_twist_power(0, 1).is_err());
    }

    #[test]
    fn wicket_generators_match_formulas() {
        assert_eq!(
            wicket_generator(WicketKind::R, 1, 6).unwrap(),
            word("2 3 -1 -2", 6)
        );
        assert_eq!(
            wicket_generator(WicketKind::S, 2, 6).unwrap(),
            word("-4 -5 -3 -4", 6)
        );
        assert_eq!(
            wicket_generator(WicketKind::T, 1, 6).unwrap(),
            word("-1", 6)
        );
        assert_eq!(
            wicket_generator(WicketKind::T, 3, 6).unwrap(),
            word("-5", 6)
        );
        assert!(wicket_generator(WicketKind::R, 3, 6).is_err());
        assert!(wicket_generator(WicketKind::T, 4, 6).is_err());
        assert!(wicket_generator(WicketKind::T, 0, 6).is_err());
        assert!(wicket_generator(WicketKind::T, 1, 5).is_err());
    }

    #[test]
    fn hilden_expansions() {
        let show = |g, n| {
            hilden_expansion(g, n)
                .unwrap()
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        assert_eq!(show(HildenGenerator::Eta(1), 3), "s1 t1 t2");
        assert_eq!(show(HildenGenerator::Rho(1, 3), 4), "s1 s2 r2 s1 t1 t1");
        assert_eq!(show(HildenGenerator::Rho(1, 2), 4), "s1 r1 t1 t1");
        assert_eq!(show(HildenGenerator::Rho(3, 1), 4), "s2 s1 r1^-1 s2 t3 t3");
        assert_eq!(show(HildenGenerator::Omega(1, 2), 4), "s1 s1 t1 t1");
        assert_eq!(
            show(HildenGenerator::Omega(1, 4), 4),
            "s1 s2 s3 s3 s2 s1 t1 t1"
        );
        assert_eq!(show(HildenGenerator::Omega(4, 1), 4), "s3 s2 s2 s3 t4 t4");
        assert_eq!(show(HildenGenerator::Omega(3, 1), 4), "s2 s2 t3 t3");
        assert_eq!(show(HildenGenerator::Theta, 3), "t1 s1 s2 r2^-1 r1^-1 t1");
        assert!(hilden_expansion(HildenGenerator::Rho(2, 2), 3).is_err());
        assert!(hilden_expansion(HildenGenerator::Omega(2, 1), 3).is_err());
        assert!(hilden_expansion(HildenGenerator::Omega(2, 2), 3).is_err());
        assert!(hilden_expansion(HildenGenerator::Eta(3), 3).is_err());
        assert!(hilden_expansion(HildenGenerator::Rho(1, 5), 4).is_err());
    }

    #[test]
    fn w8_matches_displayed_word() {
        let w8 = family_word(FamilyKind::W4n8, 0).unwrap();
        assert_eq!(w8, word("5 -2 -1 3 4 5 2 3 4 6 5 5 6", 8));
        let p = w8.permutation();
        assert_eq!((p.apply(7), p.apply(8)), (7, 8));
    }

    #[test]
    fn family_4n6_drops_the_trailing_loops() {
        assert!(family_word(FamilyKind::W4n6, 0).is_err());
        let x10 = family_word(FamilyKind::X4n6, 1).unwrap();
        assert_eq!(x10, word("5 -2 -1 3 4 5 6 7 8 9 2 3 4 5 6 7 8", 10));
        let y10 = family_word(FamilyKind::Y4n6, 1).unwrap();
        let row = "1 2 3 4 5 6 7 8 9";
        assert_eq!(y10, word(&[row; 4].join(" "), 10));
        let w10 = family_word(FamilyKind::W4n6, 1).unwrap();
        assert_eq!(w10, x10.compose(&y10).unwrap());
    }

    #[test]
    fn remove_strand_requires_fixed_strand() {
        assert!(word("1", 3).remove_strand(1).is_err());
        assert_eq!(word("1 2 2 1", 3).remove_strand(3).unwrap(), word("1 1", 2));
        assert_eq!(word("2 1 1 2", 3).remove_strand(3).unwrap(), word("", 2));
        assert_eq!(word("2 2 1 1", 3).remove_strand(1).unwrap(), word("1 1", 2));
    }

    #[test]
    fn permutation_basics() {
        let p = Permutation::new(&[2, 3, 1]).unwrap();
        let q = Permutation::new(&[1, 3, 2]).unwrap();
        assert_eq!(p.compose(&q).images(), vec![2, 1, 3]);
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(Permutation::new(&[1, 1]).is_err());
        assert!(Permutation::new(&[0, 1]).is_err());
    }
}
