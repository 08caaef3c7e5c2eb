use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numbers::Rational;

/// A finite word over `{0, 1}`, stored one symbol per byte.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if symbols.iter().any(|&b| b > 1) {
            return Err(Error::Parse {
                what: "word",
                input: format!("{symbols:?}"),
            });
        }
        Ok(Self(symbols))
    }

    pub(crate) fn from_bits(symbols: Vec<u8>) -> Self {
        debug_assert!(symbols.iter().all(|&b| b <= 1));
        Self(symbols)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, symbol: u8) -> usize {
        self.0.iter().filter(|&&b| b == symbol).count()
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// Exchanges 0 and 1.
    pub fn complement(&self) -> Self {
        Self(self.0.iter().map(|b| 1 - b).collect())
    }

    pub fn is_palindrome(&self) -> bool {
        super::palindrome::is_palindrome(&self.0)
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Self(v)
    }

    /// The word with its first and last symbols removed.
    pub fn central(&self) -> Result<Word> {
        if self.len() < 2 {
            return Err(Error::WordTooShort {
                op: "central",
                word: self.to_string(),
                min: 2,
            });
        }
        Ok(Self(self.0[1..self.len() - 1].to_vec()))
    }

    pub fn rotate_left(&self, k: usize) -> Self {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let k = k % v.len();
            v.rotate_left(k);
        }
        Self(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .0
            .iter()
            .map(|&b| if b == 0 { '0' } else { '1' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            fmt::Display::fmt(self, f)
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses a string of `0`/`1`; `ε` denotes the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "ε" {
            return Ok(Self::empty());
        }
        s.bytes()
            .map(|c| match c {
                b'0' => Ok(0),
                b'1' => Ok(1),
                _ => Err(Error::Parse {
                    what: "word",
                    input: s.to_string(),
                }),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Self)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A word known to be the Farey-Christoffel word of its slope.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FcWord {
    word: Word,
    slope: Rational,
}

impl FcWord {
    /// Validates `word` by rebuilding it from its slope.
    pub fn new(word: Word) -> Result<Self> {
        let slope = slope(&word)?;
        if super::construct::fc_word(&slope).word != word {
            return Err(Error::NotFcWord(word.to_string()));
        }
        Ok(Self { word, slope })
    }

    pub(crate) fn trusted(word: Word, slope: Rational) -> Self {
        Self { word, slope }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn into_word(self) -> Word {
        self.word
    }

    pub fn slope(&self) -> &Rational {
        &self.slope
    }
}

impl Deref for FcWord {
    type Target = Word;

    fn deref(&self) -> &Word {
        &self.word
    }
}

impl fmt::Display for FcWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.word, f)
    }
}

impl fmt::Debug for FcWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FcWord({:?} @ {})", self.word, self.slope)
    }
}

impl FromStr for FcWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(s.parse()?)
    }
}

impl Serialize for FcWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.word.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FcWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let w = Word::deserialize(deserializer)?;
        FcWord::new(w).map_err(serde::de::Error::custom)
    }
}

/// The value of a word: a positive integer, or infinity for a single symbol.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Value {
    Finite(BigUint),
    Infinite,
}

impl Value {
    pub fn finite(&self) -> Option<&BigUint> {
        match self {
            Value::Finite(k) => Some(k),
            Value::Infinite => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(k) => write!(f, "{k}"),
            Value::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `|w|_1 / |w|_0`, with `inf` for a word without zeros.
pub fn slope(w: &Word) -> Result<Rational> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let ones = w.count(1) as u64;
    let zeros = w.len() as u64 - ones;
    Rational::new(ones, zeros)
}

/// `floor(q/p)` below slope 1, `floor(p/q)` from slope 1 upwards, and
/// infinity when one of the symbols is missing.
pub fn value(w: &Word) -> Result<Value> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let ones = w.count(1);
    let zeros = w.len() - ones;
    if ones == 0 || zeros == 0 {
        return Ok(Value::Infinite);
    }
    let k = if ones < zeros {
        zeros / ones
    } else {
        ones / zeros
    };
    Ok(Value::Finite(BigUint::from(k)))
}

/// Distinct cyclic rotations, in order of the rotation offset.
pub fn conjugates(w: &Word) -> Result<Vec<Word>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut seen = std::collections::HashSet::new();
    Ok((0..w.len())
        .map(|k| w.rotate_left(k))
        .filter(|r| seen.insert(r.clone()))
        .collect())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Substitution {
    /// `0 -> 0`, `1 -> 01`: the left descendant.
    S0,
    /// `0 -> 01`, `1 -> 1`: the right descendant.
    S1,
}

pub fn substitute(w: &Word, rule: Substitution) -> Word {
    let mut out = Vec::with_capacity(2 * w.len());
    for &b in w.symbols() {
        match (rule, b) {
            (Substitution::S0, 0) | (Substitution::S1, 1) => out.push(b),
            _ => out.extend_from_slice(&[0, 1]),
        }
    }
    Word(out)
}
