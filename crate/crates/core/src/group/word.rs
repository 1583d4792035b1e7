use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::GroupError;

/// A generator or its inverse. Orders as `A < a < B < b < …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    generator: u16,
    inverse: bool,
}

impl Letter {
    pub const fn new(generator: u16, inverse: bool) -> Self {
        Self { generator, inverse }
    }

    pub fn generator(&self) -> usize {
        usize::from(self.generator)
    }

    pub fn is_inverse(&self) -> bool {
        self.inverse
    }

    pub fn inverse(&self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    /// Dense index `2·generator + inverse`, handy for lookup tables.
    pub fn code(&self) -> usize {
        2 * self.generator() + usize::from(self.inverse)
    }

    pub fn from_code(code: usize) -> Letter {
        Letter::new((code / 2) as u16, code % 2 == 1)
    }

    /// `A`–`Z` for generators, `a`–`z` for their inverses.
    pub fn from_char(ch: char) -> Option<Letter> {
        if ch.is_ascii_uppercase() {
            Some(Letter::new(ch as u16 - 'A' as u16, false))
        } else if ch.is_ascii_lowercase() {
            Some(Letter::new(ch as u16 - 'a' as u16, true))
        } else {
            None
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generator < 26 {
            let base = if self.inverse { b'a' } else { b'A' };
            write!(f, "{}", (base + self.generator as u8) as char)
        } else if self.inverse {
            write!(f, "[x{}^-1]", self.generator)
        } else {
            write!(f, "[x{}]", self.generator)
        }
    }
}

/// A freely reduced word in the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Freely reduces the given letters.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self { letters: out }
    }

    pub fn letter(l: Letter) -> Self {
        Self { letters: alloc::vec![l] }
    }

    pub fn generator(i: u16) -> Self {
        Self::letter(Letter::new(i, false))
    }

    /// Parses `A`–`Z` / `a`–`z` letter strings; `1` or the empty string is
    /// the identity.
    pub fn parse(s: &str) -> Result<Self, GroupError> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Self::identity());
        }
        s.chars()
            .map(|c| Letter::from_char(c).ok_or(GroupError::BadWord(c)))
            .collect::<Result<Vec<_>, _>>()
            .map(Self::from_letters)
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

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(Letter::generator).max()
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
        }
    }

    /// The reduced product `self · other`.
    pub fn concat(&self, other: &GroupWord) -> Self {
        Self::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &GroupWord) -> Self {
        g.concat(self).concat(&g.inverse())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(), |acc, _| acc.concat(self))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(f), Some(l)) => self.letters.len() == 1 || *f != l.inverse(),
            _ => true,
        }
    }

    /// Splits `self = u · core · u⁻¹` with `core` cyclically reduced; returns
    /// `(u, core)`.
    pub fn cyclic_reduction(&self) -> (GroupWord, GroupWord) {
        let n = self.letters.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k] == self.letters[n - 1 - k].inverse() {
            k += 1;
        }
        (
            Self {
                letters: self.letters[..k].to_vec(),
            },
            Self {
                letters: self.letters[k..n - k].to_vec(),
            },
        )
    }

    /// Lexicographically smallest cyclic rotation of the cyclic reduction of
    /// `self` or of its inverse. Two words share this representative exactly
    /// when they are conjugate up to inversion.
    pub fn conjugacy_representative(&self) -> GroupWord {
        let (_, core) = self.cyclic_reduction();
        let inv = core.inverse();
        let n = core.len();
        let mut best = core.letters.clone();
        let mut buf = Vec::with_capacity(n);
        for w in [&core.letters, &inv.letters] {
            for r in 0..n {
                buf.clear();
                buf.extend_from_slice(&w[r..]);
                buf.extend_from_slice(&w[..r]);
                if buf < best {
                    best.clone_from(&buf);
                }
            }
        }
        Self { letters: best }
    }

    pub fn is_conjugacy_representative(&self) -> bool {
        self.is_cyclically_reduced() && self.conjugacy_representative() == *self
    }

    /// Shortlex comparison: length first, then lexicographic.
    pub fn shortlex_cmp(&self, other: &GroupWord) -> core::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }

    pub fn to_string_compact(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let _ = write!(s, "{self}");
        s
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromIterator<Letter> for GroupWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Self::from_letters(iter)
    }
}
