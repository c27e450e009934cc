//! Text syntax for symbols: `{t1*t3^2, t2}`.
//!
//! Entries are `*`-products of `name` or `name^k` (k an integer, possibly
//! negative); `1` is the empty product. Whitespace is insignificant.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A parsed symbol whose entries are products of named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolText {
    pub entries: Vec<Vec<(String, i64)>>,
}

impl SymbolText {
    /// Variable names in order of first appearance.
    pub fn variable_names(&self) -> Vec<String> {
        let mut names: Vec<String> = Vec::new();
        for entry in &self.entries {
            for (name, _) in entry {
                if !names.contains(name) {
                    names.push(name.clone());
                }
            }
        }
        names
    }

    /// Entries as monomials over [`SymbolText::variable_names`].
    pub fn to_named_monomials(&self) -> (Vec<String>, Vec<Monomial>) {
        let names = self.variable_names();
        let monomials = self
            .entries
            .iter()
            .map(|entry| {
                let mut exps = alloc::vec![0i64; names.len()];
                for (name, e) in entry {
                    let j = names.iter().position(|n| n == name).expect("collected above");
                    exps[j] += e;
                }
                Monomial::new(exps)
            })
            .collect();
        (names, monomials)
    }

    /// Entries as monomials in `t1, …, t_{num_vars}`; any other name is an error.
    pub fn to_t_monomials(&self, num_vars: usize) -> Result<Vec<Monomial>> {
        self.entries
            .iter()
            .map(|entry| {
                let mut exps = alloc::vec![0i64; num_vars];
                for (name, e) in entry {
                    let j = t_index(name).filter(|&j| (1..=num_vars).contains(&j)).ok_or_else(|| {
                        Error::InvalidInput(alloc::format!(
                            "variable `{name}` is not one of t1..t{num_vars}"
                        ))
                    })?;
                    exps[j - 1] += e;
                }
                Ok(Monomial::new(exps))
            })
            .collect()
    }
}

fn t_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('t')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    digits.parse().ok()
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&alloc::format!("expected `{}`", c as char)))
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if digits == self.pos {
            return Err(self.error("expected an integer"));
        }
        core::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.error("integer out of range"))
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        match self.bytes.get(self.pos) {
            Some(b) if b.is_ascii_alphabetic() || *b == b'_' => self.pos += 1,
            _ => return Err(self.error("expected a variable name")),
        }
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
        {
            self.pos += 1;
        }
        Ok(String::from(core::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii")))
    }

    fn factor(&mut self, entry: &mut Vec<(String, i64)>) -> Result<()> {
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(());
        }
        let name = self.ident()?;
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.integer()?
        } else {
            1
        };
        entry.push((name, exp));
        Ok(())
    }

    fn entry(&mut self) -> Result<Vec<(String, i64)>> {
        let mut entry = Vec::new();
        self.factor(&mut entry)?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut entry)?;
        }
        Ok(entry)
    }
}

pub fn parse_symbol(text: &str) -> Result<SymbolText> {
    let mut c = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    c.expect(b'{')?;
    let mut entries = Vec::new();
    if c.peek() != Some(b'}') {
        entries.push(c.entry()?);
        while c.peek() == Some(b',') {
            c.pos += 1;
            entries.push(c.entry()?);
        }
    }
    c.expect(b'}')?;
    if c.peek().is_some() {
        return Err(c.error("trailing input"));
    }
    Ok(SymbolText { entries })
}
