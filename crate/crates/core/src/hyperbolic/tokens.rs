use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numbers::UnimodularMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Letter {
    A,
    D,
}

impl Letter {
    pub fn flip(self) -> Self {
        match self {
            Letter::A => Letter::D,
            Letter::D => Letter::A,
        }
    }
}

/// One horocycle step: `A^t = (1 0; t 1)` follows the horocycle based at
/// the left cusp, `D^t = (1 -t; 0 1)` the one based at the right cusp.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HoroToken {
    pub letter: Letter,
    pub exponent: u32,
}

impl HoroToken {
    pub fn new(letter: Letter, exponent: u32) -> Self {
        Self { letter, exponent }
    }

    pub fn matrix(&self) -> UnimodularMatrix {
        match self.letter {
            Letter::A => UnimodularMatrix::a_pow(self.exponent),
            Letter::D => UnimodularMatrix::b_pow(-i64::from(self.exponent)),
        }
    }
}

impl fmt::Display for HoroToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = match self.letter {
            Letter::A => 'A',
            Letter::D => 'D',
        };
        if self.exponent == 1 {
            write!(f, "{l}")
        } else {
            write!(f, "{l}{}", self.exponent)
        }
    }
}

/// The tokens of one level: a parenthesised jump followed by the moves,
/// printed as `(AD2)AD3A`. An empty jump prints as `(I2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TokenRow {
    pub jump: Vec<HoroToken>,
    pub moves: Vec<HoroToken>,
}

impl TokenRow {
    pub fn tokens(&self) -> impl Iterator<Item = &HoroToken> {
        self.jump.iter().chain(&self.moves)
    }

    pub fn len(&self) -> usize {
        self.jump.len() + self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for TokenRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        if self.jump.is_empty() {
            f.write_str("I2")?;
        }
        for t in &self.jump {
            write!(f, "{t}")?;
        }
        f.write_str(")")?;
        for t in &self.moves {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl Serialize for TokenRow {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for TokenRow {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "token row",
            input: s.to_string(),
        };
        let rest = s.trim().strip_prefix('(').ok_or_else(err)?;
        let (jump, moves) = rest.split_once(')').ok_or_else(err)?;
        let jump = if jump == "I2" {
            Vec::new()
        } else {
            parse_tokens(jump).ok_or_else(err)?
        };
        Ok(Self {
            jump,
            moves: parse_tokens(moves).ok_or_else(err)?,
        })
    }
}

fn parse_tokens(s: &str) -> Option<Vec<HoroToken>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        let letter = match c {
            'A' => Letter::A,
            'D' => Letter::D,
            _ => return None,
        };
        let mut digits = String::new();
        while let Some(d) = chars.next_if(char::is_ascii_digit) {
            digits.push(d);
        }
        let exponent = if digits.is_empty() {
            1
        } else {
            digits.parse().ok()?
        };
        if exponent == 0 {
            return None;
        }
        out.push(HoroToken::new(letter, exponent));
    }
    Some(out)
}

/// Exponent of the `k`-th move within a level: `1 + 2 v2(k)`.
pub fn move_exponent(k: u64) -> u32 {
    assert!(k > 0, "moves are numbered from 1");
    1 + 2 * k.trailing_zeros()
}

fn moves(n: u32, first: Letter) -> Vec<HoroToken> {
    let count = (1u64 << (n - 1)) - 1;
    let mut letter = first;
    (1..=count)
        .map(|k| {
            let t = HoroToken::new(letter, move_exponent(k));
            letter = letter.flip();
            t
        })
        .collect()
}

/// Tokens that, continuing from the last node of level `n - 1`, jump to the
/// leftmost node of level `n` and then sweep the level left to right.
/// Letters alternate across the whole concatenation of levels `2, 3, ...`.
pub fn level_tokens(n: u32) -> Result<TokenRow> {
    if n < 2 {
        return Err(Error::Level { level: n, min: 2 });
    }
    if n == 2 {
        return Ok(TokenRow {
            jump: vec![HoroToken::new(Letter::A, 1)],
            moves: moves(2, Letter::D),
        });
    }
    let first = if (n - 3).is_multiple_of(2) {
        Letter::A
    } else {
        Letter::D
    };
    Ok(TokenRow {
        jump: vec![
            HoroToken::new(first, n - 2),
            HoroToken::new(first.flip(), n - 1),
        ],
        moves: moves(n, first),
    })
}

/// Tokens sweeping level `n` starting afresh from the root: the descent
/// `A^{n-1}` then the moves with letters starting at D.
pub fn level_tokens_from_origin(n: u32) -> Result<TokenRow> {
    if n < 1 {
        return Err(Error::Level { level: n, min: 1 });
    }
    if n == 1 {
        return Ok(TokenRow {
            jump: Vec::new(),
            moves: Vec::new(),
        });
    }
    Ok(TokenRow {
        jump: vec![HoroToken::new(Letter::A, n - 1)],
        moves: moves(n, Letter::D),
    })
}

/// Matrices reached after each token, starting from `start`.
pub fn compose_tokens<'a>(
    start: &UnimodularMatrix,
    tokens: impl IntoIterator<Item = &'a HoroToken>,
) -> Vec<UnimodularMatrix> {
    let mut g = start.clone();
    tokens
        .into_iter()
        .map(|t| {
            g = &g * &t.matrix();
            g.clone()
        })
        .collect()
}

/// Product of all tokens of levels `2..n`, the state at which level `n`
/// begins; the identity for `n <= 2`.
pub fn level_start(n: u32) -> UnimodularMatrix {
    let mut g = UnimodularMatrix::identity();
    for l in 2..n {
        let row = level_tokens(l).expect("level at least 2");
        for t in row.tokens() {
            g = &g * &t.matrix();
        }
    }
    g
}
