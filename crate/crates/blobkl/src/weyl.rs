//! The affine Weyl group of type A in window notation.
//!
//! An element of `W_l` is an affine permutation `w : Z -> Z` with
//! `w(i + l) = w(i) + l` and `sum w(1..=l) = l(l+1)/2`, stored through its
//! window `[w(1), ..., w(l)]`. Multiplication is composition, length is the
//! affine inversion count, and Bruhat order uses the simple-reflection
//! recursion, so no reduced-word enumeration is ever needed.

use std::fmt;

use crate::error::{Error, Result};

/// Element of the affine Weyl group `W_l`, window notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineElement {
    window: Vec<i64>,
}

/// A word in the simple generators `s_0, ..., s_{l-1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word {
    level: usize,
    letters: Vec<usize>,
}

/// Canonical form of an element of the infinite dihedral group `W_2`:
/// the alternating word `sts...` or `tst...` of length `k`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub struct DihedralForm {
    pub side: Side,
    pub k: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub enum Side {
    Identity,
    S,
    T,
}

/// Generator index of `s`, the reflection through the left wall of the
/// fundamental alcove when `l = 2`.
pub const GEN_S: usize = 1;
/// Generator index of `t`, the reflection through the right wall.
pub const GEN_T: usize = 0;

impl AffineElement {
    pub fn identity(level: usize) -> Self {
        Self {
            window: (1..=level as i64).collect(),
        }
    }

    /// The simple reflection `s_i`. For `1 <= i < l` this swaps window
    /// positions `i, i+1`; `s_0` is the affine transposition sending
    /// `1 -> 0` and `l -> l+1`.
    pub fn simple(i: usize, level: usize) -> Result<Self> {
        if level < 2 || i >= level {
            return Err(Error::Index { index: i, level });
        }
        let mut w = Self::identity(level);
        if i == 0 {
            w.window[0] = 0;
            w.window[level - 1] = level as i64 + 1;
        } else {
            w.window.swap(i - 1, i);
        }
        Ok(w)
    }

    pub fn from_window(window: Vec<i64>) -> Result<Self> {
        let l = window.len();
        if l < 2 {
            return Err(Error::InvalidParams("window must have length >= 2".into()));
        }
        let sum: i64 = window.iter().sum();
        if sum != (l as i64) * (l as i64 + 1) / 2 {
            return Err(Error::InvalidParams(format!(
                "window {window:?} is not normalized: entries must sum to l(l+1)/2"
            )));
        }
        let mut seen = vec![false; l];
        for &x in &window {
            let r = (x - 1).rem_euclid(l as i64) as usize;
            if seen[r] {
                return Err(Error::InvalidParams(format!(
                    "window {window:?} repeats a residue class mod {l}"
                )));
            }
            seen[r] = true;
        }
        Ok(Self { window })
    }

    pub fn level(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &x)| x == i as i64 + 1)
    }

    /// Value of the affine permutation at any integer.
    pub fn apply(&self, x: i64) -> i64 {
        let l = self.level() as i64;
        let q = (x - 1).div_euclid(l);
        let r = (x - 1).rem_euclid(l) as usize;
        self.window[r] + q * l
    }

    /// Composition `self . other` (apply `other` first).
    pub fn mult(&self, other: &Self) -> Self {
        assert_eq!(
            self.level(),
            other.level(),
            "cannot multiply affine elements of different levels"
        );
        Self {
            window: (1..=self.level() as i64).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let l = self.level();
        let mut window = vec![0; l];
        for (r, &val) in self.window.iter().enumerate() {
            let res = (val - 1).rem_euclid(l as i64) as usize;
            let q = (val - 1).div_euclid(l as i64);
            // w(r+1) = val, so w^{-1}(val) = r+1 and w^{-1} shifts periodically
            window[res] = r as i64 + 1 - q * l as i64;
        }
        Self { window }
    }

    /// Coxeter length via the affine inversion count.
    pub fn length(&self) -> usize {
        let l = self.level() as i64;
        let mut len = 0i64;
        for i in 0..self.window.len() {
            for j in (i + 1)..self.window.len() {
                len += (self.window[j] - self.window[i]).div_euclid(l).abs();
            }
        }
        len as usize
    }

    /// Multiplication by `s_i` on the left/right; panics on a bad index,
    /// which is a programmer error once inputs are validated.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        Self::simple(i, self.level()).expect("generator index in range").mult(self)
    }

    pub fn right_mul_simple(&self, i: usize) -> Self {
        self.mult(&Self::simple(i, self.level()).expect("generator index in range"))
    }

    pub fn is_left_descent(&self, i: usize) -> bool {
        self.left_mul_simple(i).length() < self.length()
    }

    pub fn is_right_descent(&self, i: usize) -> bool {
        self.right_mul_simple(i).length() < self.length()
    }

    /// A reduced word, peeling left descents smallest-index first.
    pub fn reduced_word(&self) -> Word {
        let l = self.level();
        let mut letters = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while !w.is_identity() {
            let i = (0..l)
                .find(|&i| w.is_left_descent(i))
                .expect("non-identity element has a left descent");
            letters.push(i);
            w = w.left_mul_simple(i);
        }
        Word { level: l, letters }
    }

    /// Bruhat order, by the recursion: for a left descent `s` of `w`,
    /// `x <= w` iff `sx <= sw` when `sx < x`, else `x <= sw`.
    pub fn bruhat_leq(&self, w: &Self) -> bool {
        assert_eq!(
            self.level(),
            w.level(),
            "cannot compare affine elements of different levels"
        );
        let mut x = self.clone();
        let mut w = w.clone();
        loop {
            if x.is_identity() {
                return true;
            }
            if x.length() > w.length() {
                return false;
            }
            let i = (0..w.level())
                .find(|&i| w.is_left_descent(i))
                .expect("non-identity element has a left descent");
            w = w.left_mul_simple(i);
            if x.is_left_descent(i) {
                x = x.left_mul_simple(i);
            }
        }
    }

    /// Dihedral canonical form; `l = 2` only.
    pub fn dihedral_form(&self) -> Result<DihedralForm> {
        if self.level() != 2 {
            return Err(Error::LevelMismatch { expected: 2, got: self.level() });
        }
        let k = self.length();
        if k == 0 {
            return Ok(DihedralForm { side: Side::Identity, k: 0 });
        }
        let side = if self.is_left_descent(GEN_S) { Side::S } else { Side::T };
        Ok(DihedralForm { side, k })
    }
}

impl DihedralForm {
    pub fn new(side: Side, k: usize) -> Result<Self> {
        if (k == 0) != (side == Side::Identity) {
            return Err(Error::InvalidParams(
                "dihedral form needs k = 0 exactly for the identity".into(),
            ));
        }
        Ok(Self { side, k })
    }

    pub fn identity() -> Self {
        Self { side: Side::Identity, k: 0 }
    }

    /// The alternating reduced word `sts...` / `tst...` of length `k`.
    pub fn word(&self) -> Word {
        let first = match self.side {
            Side::Identity => return Word::new(2, vec![]).unwrap(),
            Side::S => GEN_S,
            Side::T => GEN_T,
        };
        let letters = (0..self.k).map(|j| if j % 2 == 0 { first } else { 1 - first }).collect();
        Word { level: 2, letters }
    }

    pub fn element(&self) -> AffineElement {
        self.word().evaluate()
    }

    /// Parses `"5s"`, `"4t"` or `"e"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" {
            return Ok(Self::identity());
        }
        let (num, side) = s.split_at(s.len().saturating_sub(1));
        let side = match side {
            "s" => Side::S,
            "t" => Side::T,
            _ => return Err(Error::Parse(format!("bad dihedral element '{s}', want e.g. '5s' or 'e'"))),
        };
        let k: usize = num
            .parse()
            .map_err(|_| Error::Parse(format!("bad dihedral length in '{s}'")))?;
        Self::new(side, k)
    }
}

impl fmt::Display for DihedralForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Identity => write!(f, "e"),
            Side::S => write!(f, "{}s", self.k),
            Side::T => write!(f, "{}t", self.k),
        }
    }
}

impl fmt::Debug for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level() == 2 {
            if let Ok(d) = self.dihedral_form() {
                return write!(f, "{d}");
            }
        }
        write!(
            f,
            "[{}]",
            self.window.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

impl Word {
    pub fn new(level: usize, letters: Vec<usize>) -> Result<Self> {
        for &i in &letters {
            if i >= level {
                return Err(Error::Index { index: i, level });
            }
        }
        Ok(Self { level, letters })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn evaluate(&self) -> AffineElement {
        let mut w = AffineElement::identity(self.level);
        for &i in &self.letters {
            w = w.right_mul_simple(i);
        }
        w
    }

    /// Parses `"s1 s3 s0 s2"`, the compact digit form `"1302"`, or, at
    /// level 2, the alternating alphabet `"ststs"`.
    pub fn parse(input: &str, level: usize) -> Result<Self> {
        let input = input.trim();
        let mut letters = Vec::new();
        if input.is_empty() || input == "e" {
            return Self::new(level, letters);
        }
        if level == 2 && input.chars().all(|c| c == 's' || c == 't') {
            for c in input.chars() {
                letters.push(if c == 's' { GEN_S } else { GEN_T });
            }
            return Self::new(level, letters);
        }
        if input.contains(|c: char| c.is_whitespace() || c == 's') {
            for tok in input.split_whitespace() {
                let tok = tok.strip_prefix('s').unwrap_or(tok);
                let i: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad generator '{tok}' in word")))?;
                letters.push(i);
            }
        } else {
            for c in input.chars() {
                let i = c
                    .to_digit(10)
                    .ok_or_else(|| Error::Parse(format!("bad generator digit '{c}' in word")))?;
                letters.push(i as usize);
            }
        }
        Self::new(level, letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        write!(
            f,
            "{}",
            self.letters.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
        )
    }
}
