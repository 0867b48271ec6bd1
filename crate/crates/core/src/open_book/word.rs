//! Signed Dehn-twist words. Twists act left to right: in `w_1 w_2 … w_k` the
//! twist `w_1` is applied first.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "+" | "+1" => Some(Sign::Positive),
            "-" | "-1" => Some(Sign::Negative),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Twist {
    pub curve: String,
    pub sign: Sign,
}

impl Twist {
    pub fn new(curve: &str, sign: Sign) -> Self {
        Twist { curve: curve.to_string(), sign }
    }

    pub fn pos(curve: &str) -> Self {
        Twist::new(curve, Sign::Positive)
    }

    pub fn neg(curve: &str) -> Self {
        Twist::new(curve, Sign::Negative)
    }

    pub fn inverse(&self) -> Self {
        Twist::new(&self.curve, self.sign.flip())
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.curve, self.sign.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TwistWord(pub Vec<Twist>);

impl TwistWord {
    pub fn new() -> Self {
        TwistWord(Vec::new())
    }

    pub fn from_twists(twists: impl IntoIterator<Item = Twist>) -> Self {
        TwistWord(twists.into_iter().collect())
    }

    /// Parses `a+ b- c+`.
    pub fn parse(text: &str) -> Result<Self> {
        text.split_whitespace()
            .map(|tok| {
                let (name, sign) = tok.split_at(tok.len().saturating_sub(1));
                let sign = Sign::parse(sign).ok_or_else(|| invalid(format!("bad twist `{tok}`")))?;
                if name.is_empty() {
                    return Err(invalid(format!("bad twist `{tok}`")));
                }
                Ok(Twist::new(name, sign))
            })
            .collect::<Result<Vec<_>>>()
            .map(TwistWord)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn twists(&self) -> &[Twist] {
        &self.0
    }

    pub fn push(&mut self, t: Twist) {
        self.0.push(t);
    }

    pub fn inverse(&self) -> Self {
        TwistWord(self.0.iter().rev().map(Twist::inverse).collect())
    }

    /// Net exponent of the twists along `curve`.
    pub fn exponent(&self, curve: &str) -> i64 {
        self.0.iter().filter(|t| t.curve == curve).map(|t| t.sign.value()).sum()
    }

    pub fn occurrences(&self, curve: &str) -> usize {
        self.0.iter().filter(|t| t.curve == curve).count()
    }

    /// Inserts `c^s c^-s` before position `pos`.
    pub fn insert_cancelling(&self, pos: usize, curve: &str, sign: Sign) -> Result<Self> {
        if pos > self.len() {
            return Err(invalid(format!("position {pos} is past the end of the word")));
        }
        let mut v = self.0.clone();
        let t = Twist::new(curve, sign);
        v.splice(pos..pos, [t.clone(), t.inverse()]);
        Ok(TwistWord(v))
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Twist> = Vec::with_capacity(self.len());
        for t in &self.0 {
            match out.last() {
                Some(last) if last.curve == t.curve && last.sign != t.sign => {
                    out.pop();
                }
                _ => out.push(t.clone()),
            }
        }
        TwistWord(out)
    }

    pub fn swapped(&self, pos: usize) -> Result<Self> {
        if pos + 1 >= self.len() {
            return Err(Error::NotApplicable(format!("no adjacent pair at {pos}")));
        }
        let mut v = self.0.clone();
        v.swap(pos, pos + 1);
        Ok(TwistWord(v))
    }

    pub fn position(&self, twist: &Twist) -> Option<usize> {
        self.0.iter().position(|t| t == twist)
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}
