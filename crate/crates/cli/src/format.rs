//! Text format for presentation matrices.
//!
//! ```text
//! # comments run to the end of the line
//! generators: 3
//! relations: 4
//! entry 1 1 : [1 2 3] + [2 3 4] + [3 4 1] + [4 1 2]
//! ```
//!
//! Entry indices are 1-based. A term is an optional rational coefficient
//! followed by `*` and an injection in one-line notation. Repeated terms in
//! an entry are merged; repeating an `entry i j` line is an error.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use fistab::combinatorics::Injection;
use fistab::presentation::{FormalSum, PresentationMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(self.error_at(self.pos, message))
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.text[..pos].chars().count() + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected '{c}'"))
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !c.is_ascii_alphanumeric() && c != '_' {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.text[start..self.pos]
    }

    fn number(&mut self) -> Result<(usize, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a non-negative integer");
        }
        self.text[start..self.pos]
            .parse()
            .map(|v| (v, start))
            .map_err(|_| self.error_at(start, "integer is too large"))
    }

    fn big(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an integer");
        }
        Ok(self.text[start..self.pos].parse().expect("digits parse"))
    }
}

fn strip_comment(line: &str) -> &str {
    line.find('#').map_or(line, |i| &line[..i])
}

fn parse_degrees(cursor: &mut Cursor) -> Result<Vec<usize>, ParseError> {
    cursor.expect(':')?;
    let mut out = Vec::new();
    while !cursor.at_end() {
        out.push(cursor.number()?.0);
    }
    Ok(out)
}

/// `[coefficient "*"] "[" v1 v2 ... "]"`, returning the unsigned coefficient.
fn parse_term(
    cursor: &mut Cursor,
    source: usize,
    target: usize,
) -> Result<(Injection, BigRational), ParseError> {
    cursor.skip_ws();
    let mut coefficient = BigRational::one();
    if cursor.peek().is_some_and(|c| c.is_ascii_digit()) {
        let start = cursor.pos;
        let numerator = cursor.big()?;
        let denominator = if cursor.eat('/') {
            cursor.big()?
        } else {
            BigInt::one()
        };
        if denominator.is_zero() {
            return Err(cursor.error_at(start, "zero denominator"));
        }
        coefficient = BigRational::new(numerator, denominator);
        cursor.expect('*')?;
    }
    cursor.skip_ws();
    let start = cursor.pos;
    cursor.expect('[')?;
    let mut images = Vec::new();
    while !cursor.eat(']') {
        if cursor.at_end() {
            return cursor.error("unterminated injection, expected ']'");
        }
        let (v, at) = cursor.number()?;
        if v == 0 || v > target {
            return Err(cursor.error_at(at, format!("value {v} is outside 1..{target}")));
        }
        if images.contains(&v) {
            return Err(cursor.error_at(at, format!("value {v} repeats in an injection")));
        }
        images.push(v);
    }
    if images.len() != source {
        return Err(cursor.error_at(
            start,
            format!(
                "injection has {} values, entry needs {source}",
                images.len()
            ),
        ));
    }
    let f = Injection::new(images, target).map_err(|e| cursor.error_at(start, e.to_string()))?;
    Ok((f, coefficient))
}

pub fn parse_presentation(text: &str) -> Result<PresentationMatrix, ParseError> {
    let mut generators: Option<Vec<usize>> = None;
    let mut relations: Option<Vec<usize>> = None;
    let mut z: Option<PresentationMatrix> = None;
    let mut seen = BTreeSet::new();
    let mut last_line = 0;
    for (index, raw) in text.lines().enumerate() {
        last_line = index + 1;
        let mut cursor = Cursor {
            text: strip_comment(raw),
            pos: 0,
            line: index + 1,
        };
        if cursor.at_end() {
            continue;
        }
        let keyword_at = cursor.pos;
        match cursor.word() {
            "generators" | "relations" if z.is_some() => {
                return Err(cursor.error_at(keyword_at, "degree lines must precede entries"));
            }
            "generators" => {
                if generators.is_some() {
                    return Err(cursor.error_at(keyword_at, "duplicate generators line"));
                }
                generators = Some(parse_degrees(&mut cursor)?);
            }
            "relations" => {
                if relations.is_some() {
                    return Err(cursor.error_at(keyword_at, "duplicate relations line"));
                }
                relations = Some(parse_degrees(&mut cursor)?);
            }
            "entry" => {
                let (Some(g), Some(r)) = (&generators, &relations) else {
                    return Err(cursor.error_at(
                        keyword_at,
                        "entries need both a generators and a relations line first",
                    ));
                };
                let z = z.get_or_insert_with(|| PresentationMatrix::new(g.clone(), r.clone()));
                let (i, i_at) = cursor.number()?;
                let (j, j_at) = cursor.number()?;
                if i == 0 || i > g.len() {
                    return Err(cursor.error_at(i_at, format!("row {i} is outside 1..{}", g.len())));
                }
                if j == 0 || j > r.len() {
                    return Err(
                        cursor.error_at(j_at, format!("column {j} is outside 1..{}", r.len()))
                    );
                }
                let (i, j) = (i - 1, j - 1);
                if !seen.insert((i, j)) {
                    return Err(
                        cursor.error_at(keyword_at, format!("duplicate entry {} {}", i + 1, j + 1))
                    );
                }
                cursor.expect(':')?;
                let (source, target) = (g[i], r[j]);
                let mut sum = FormalSum::zero(source, target);
                let mut negative = cursor.eat('-');
                if !negative {
                    cursor.eat('+');
                }
                loop {
                    let (f, c) = parse_term(&mut cursor, source, target)?;
                    sum.add_term(f, if negative { -c } else { c })
                        .expect("arity already checked");
                    if cursor.at_end() {
                        break;
                    }
                    if cursor.eat('+') {
                        negative = false;
                    } else if cursor.eat('-') {
                        negative = true;
                    } else {
                        return cursor.error("expected '+', '-' or end of line");
                    }
                }
                z.set_entry(i, j, sum).expect("validated entry");
            }
            "" => return cursor.error("expected a keyword"),
            other => {
                return Err(cursor.error_at(keyword_at, format!("unknown keyword '{other}'")));
            }
        }
    }
    if let Some(z) = z {
        return Ok(z);
    }
    match (generators, relations) {
        (Some(g), Some(r)) => Ok(PresentationMatrix::new(g, r)),
        (None, _) => Err(ParseError {
            line: last_line.max(1),
            column: 1,
            message: "missing generators line".into(),
        }),
        (_, None) => Err(ParseError {
            line: last_line.max(1),
            column: 1,
            message: "missing relations line".into(),
        }),
    }
}

fn write_degrees(out: &mut String, label: &str, degrees: &[usize]) {
    out.push_str(label);
    out.push(':');
    for d in degrees {
        out.push(' ');
        out.push_str(&d.to_string());
    }
    out.push('\n');
}

/// Text that [`parse_presentation`] reads back to an equal matrix.
pub fn serialize_presentation(z: &PresentationMatrix) -> String {
    let mut out = String::new();
    write_degrees(&mut out, "generators", z.generator_degrees());
    write_degrees(&mut out, "relations", z.relation_degrees());
    for (&(i, j), sum) in z.entries() {
        out.push_str(&format!("entry {} {} :", i + 1, j + 1));
        for (k, (f, c)) in sum.terms().iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k > 0 || c.is_negative() {
                out.push(' ');
                out.push_str(sign);
            }
            out.push(' ');
            let magnitude = c.abs();
            if !magnitude.is_one() {
                out.push_str(&format!("{magnitude}*"));
            }
            let images: Vec<String> = f.images().iter().map(ToString::to_string).collect();
            out.push_str(&format!("[{}]", images.join(" ")));
        }
        out.push('\n');
    }
    out
}
