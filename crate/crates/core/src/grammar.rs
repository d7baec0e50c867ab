//! Text form of multisegments.
//!
//! ```text
//! multiseg ::= part (';' part)*
//! part     ::= [ 'line(' label (',' int '/' int)? '):' ] rigid
//! rigid    ::= seg ('+' seg)* | '0'
//! seg      ::= '[' int ',' int ']'
//! ```
//!
//! Whitespace is ignored. Formatting is canonical: parts in line order,
//! segments in right-aligned order, no spaces, `0` for the empty multisegment.

use std::fmt;

use crate::error::{Error, Result};
use crate::line::{Line, Rational};
use crate::multisegment::{Multisegment, RigidMultisegment};
use crate::segment::Segment;

const RESERVED: &[char] = &['(', ')', ',', ':', ';', '+', '[', ']'];

struct Parser<'a> {
    // (byte offset in the original text, char), whitespace removed
    toks: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let toks = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Self { toks, pos: 0, src }
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.src.len(), |t| t.0)
    }

    fn peek(&self) -> Option<char> {
        self.toks.get(self.pos).map(|t| t.1)
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            message: message.into(),
        })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => self.fail(format!("expected '{c}', found '{d}'")),
            None => self.fail(format!("expected '{c}', found end of input")),
        }
    }

    fn eat_keyword(&mut self, word: &str) -> bool {
        let n = word.chars().count();
        let matches = self.toks.len() >= self.pos + n
            && self.toks[self.pos..self.pos + n]
                .iter()
                .map(|t| t.1)
                .eq(word.chars());
        if matches {
            self.pos += n;
        }
        matches
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        let mut text = String::new();
        if self.peek() == Some('-') {
            text.push('-');
            self.pos += 1;
        }
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            text.push(c);
            self.pos += 1;
        }
        if text.is_empty() || text == "-" {
            self.pos = start;
            return self.fail("expected an integer");
        }
        text.parse().or_else(|_| {
            self.pos = start;
            self.fail(format!("integer {text} out of range"))
        })
    }

    fn segment(&mut self) -> Result<Segment> {
        let start = self.pos;
        self.expect('[')?;
        let b = self.int()?;
        self.expect(',')?;
        let e = self.int()?;
        self.expect(']')?;
        Segment::new(b, e).or_else(|err| {
            self.pos = start;
            self.fail(err.to_string())
        })
    }

    fn rigid(&mut self) -> Result<RigidMultisegment> {
        if self.peek() == Some('0') {
            self.pos += 1;
            return Ok(RigidMultisegment::new());
        }
        let mut m = RigidMultisegment::new();
        m.push(self.segment()?);
        while self.peek() == Some('+') {
            self.pos += 1;
            m.push(self.segment()?);
        }
        Ok(m)
    }

    fn line(&mut self) -> Result<Line> {
        let mut label = String::new();
        while let Some(c) = self.peek().filter(|c| !RESERVED.contains(c)) {
            label.push(c);
            self.pos += 1;
        }
        let mut offset = Rational::from_integer(0);
        if self.peek() == Some(',') {
            self.pos += 1;
            let start = self.pos;
            let num = self.int()?;
            self.expect('/')?;
            let den = self.int()?;
            if den == 0 {
                self.pos = start;
                return self.fail("zero denominator in line offset");
            }
            offset = Rational::new(num, den);
            if let Err(err) = Line::new("", offset) {
                self.pos = start;
                return self.fail(err.to_string());
            }
        }
        self.expect(')')?;
        self.expect(':')?;
        Line::new(label, offset)
    }

    fn part(&mut self) -> Result<(Line, RigidMultisegment)> {
        let line = if self.eat_keyword("line(") {
            self.line()?
        } else {
            Line::default()
        };
        Ok((line, self.rigid()?))
    }

    fn multisegment(&mut self) -> Result<Multisegment> {
        if self.toks.is_empty() {
            return self.fail("empty input");
        }
        let mut m = Multisegment::new();
        loop {
            let (line, rigid) = self.part()?;
            m.insert_part(line, rigid);
            match self.peek() {
                Some(';') => self.pos += 1,
                Some(c) => return self.fail(format!("unexpected '{c}'")),
                None => return Ok(m),
            }
        }
    }
}

pub fn parse(text: &str) -> Result<Multisegment> {
    Parser::new(text).multisegment()
}

/// Parses a multisegment that must live on a single line.
pub fn parse_rigid(text: &str) -> Result<(Line, RigidMultisegment)> {
    let m = parse(text)?;
    if m.is_empty() {
        return Ok((Line::default(), RigidMultisegment::new()));
    }
    match m.as_rigid() {
        Some((line, rigid)) => Ok((line.clone(), rigid.clone())),
        None => Err(Error::Parse {
            pos: 0,
            message: "expected segments on a single line".into(),
        }),
    }
}

/// Parses one segment, optionally prefixed by a line header.
pub fn parse_segment(text: &str) -> Result<(Line, Segment)> {
    let (line, rigid) = parse_rigid(text)?;
    match rigid.segments() {
        [s] => Ok((line, *s)),
        _ => Err(Error::Parse {
            pos: 0,
            message: "expected exactly one segment".into(),
        }),
    }
}

pub fn format(m: &Multisegment) -> String {
    m.to_string()
}

pub(crate) fn write_multisegment(f: &mut fmt::Formatter<'_>, m: &Multisegment) -> fmt::Result {
    if m.is_empty() {
        return write!(f, "0");
    }
    for (i, (line, rigid)) in m.parts().enumerate() {
        if i > 0 {
            write!(f, ";")?;
        }
        if !line.is_default() {
            write!(f, "{line}:")?;
        }
        write!(f, "{rigid}")?;
    }
    Ok(())
}
