//! Word text formats.
//!
//! * spaced: decimal symbols separated by single spaces, newline-terminated,
//!   no trailing space (`0 1 2 0 3 2\n`);
//! * compact: one decimal digit per symbol, no separators, newline-terminated
//!   (`012032\n`). Only for `n <= 9`.

use std::io::{self, BufRead, Write};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WordFormat {
    #[default]
    Spaced,
    Compact,
}

/// Writes one symbol at a time in either format.
pub struct WordWriter<W: Write> {
    out: W,
    format: WordFormat,
    first: bool,
}

impl<W: Write> WordWriter<W> {
    pub fn new(out: W, format: WordFormat, n: usize) -> Result<Self> {
        if format == WordFormat::Compact && n > 9 {
            return Err(Error::UnsupportedN {
                n,
                reason: "compact format needs n <= 9",
            });
        }
        Ok(WordWriter {
            out,
            format,
            first: true,
        })
    }

    #[inline]
    pub fn push(&mut self, symbol: u8) -> io::Result<()> {
        match self.format {
            WordFormat::Compact => self.out.write_all(&[b'0' + symbol]),
            WordFormat::Spaced => {
                if !self.first {
                    self.out.write_all(b" ")?;
                }
                self.first = false;
                write!(self.out, "{symbol}")
            }
        }
    }

    pub fn finish(mut self) -> io::Result<W> {
        self.out.write_all(b"\n")?;
        self.out.flush()?;
        Ok(self.out)
    }
}

/// Symbols above 255 cannot belong to any supported alphabet; they are
/// clamped to 255 so the verifier reports them as out of range.
fn clamp(v: u64) -> u8 {
    v.min(u8::MAX as u64) as u8
}

/// Parse a word in either format. A single token longer than one character
/// is read as compact digits; anything else as spaced decimals.
pub fn parse_word(text: &str) -> Result<Vec<u8>> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if let [token] = tokens[..] {
        if token.len() > 1 {
            return token
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::parse(1, format!("not a digit: {c:?}")))
                })
                .collect();
        }
    }
    tokens
        .iter()
        .map(|t| {
            t.parse::<u64>()
                .map(clamp)
                .map_err(|_| Error::parse(1, format!("not a symbol: {t:?}")))
        })
        .collect()
}

/// Streaming reader for the spaced format.
pub struct SymbolReader<R> {
    input: R,
    line: usize,
}

impl<R: BufRead> SymbolReader<R> {
    pub fn new(input: R) -> Self {
        SymbolReader { input, line: 1 }
    }

    fn next_token(&mut self) -> Result<Option<u64>> {
        let mut value: Option<u64> = None;
        loop {
            let buf = self
                .input
                .fill_buf()
                .map_err(|e| Error::parse(self.line, e.to_string()))?;
            if buf.is_empty() {
                return Ok(value);
            }
            let mut used = 0;
            for &b in buf {
                match b {
                    b'0'..=b'9' => {
                        let v = value.unwrap_or(0);
                        value = Some(v.saturating_mul(10).saturating_add((b - b'0') as u64));
                        used += 1;
                    }
                    b' ' | b'\t' | b'\r' | b'\n' => {
                        if b == b'\n' {
                            self.line += 1;
                        }
                        used += 1;
                        if value.is_some() {
                            self.input.consume(used);
                            return Ok(value);
                        }
                    }
                    _ => {
                        return Err(Error::parse(
                            self.line,
                            format!("unexpected byte {:?}", b as char),
                        ))
                    }
                }
            }
            self.input.consume(used);
        }
    }
}

impl<R: BufRead> Iterator for SymbolReader<R> {
    type Item = Result<u8>;

    fn next(&mut self) -> Option<Result<u8>> {
        self.next_token().map(|t| t.map(clamp)).transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(symbols: &[u8], format: WordFormat, n: usize) -> String {
        let mut buf = Vec::new();
        let mut w = WordWriter::new(&mut buf, format, n).unwrap();
        for &s in symbols {
            w.push(s).unwrap();
        }
        w.finish().unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn formats_are_exact() {
        let w = [0, 1, 2, 0, 3, 2];
        assert_eq!(render(&w, WordFormat::Spaced, 3), "0 1 2 0 3 2\n");
        assert_eq!(render(&w, WordFormat::Compact, 3), "012032\n");
        assert_eq!(render(&[10, 0], WordFormat::Spaced, 10), "10 0\n");
        assert!(WordWriter::new(Vec::new(), WordFormat::Compact, 10).is_err());
    }

    #[test]
    fn parse_both_formats() {
        assert_eq!(parse_word("012032\n").unwrap(), [0, 1, 2, 0, 3, 2]);
        assert_eq!(parse_word("0 1 2 0 3 2\n").unwrap(), [0, 1, 2, 0, 3, 2]);
        assert_eq!(parse_word("10 300").unwrap(), [10, 255]);
        assert_eq!(parse_word("").unwrap(), Vec::<u8>::new());
        assert!(matches!(parse_word("0 x 2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_word("01a"), Err(Error::Parse { .. })));
    }

    #[test]
    fn reader_streams_tokens() {
        let text = "0 1  10\n2\t3";
        let got: Vec<u8> = SymbolReader::new(text.as_bytes())
            .map(|r| r.unwrap())
            .collect();
        assert_eq!(got, [0, 1, 10, 2, 3]);
        // tiny buffer to split tokens across fills
        let r = std::io::BufReader::with_capacity(1, "12 345 6".as_bytes());
        let got: Vec<u8> = SymbolReader::new(r).map(|r| r.unwrap()).collect();
        assert_eq!(got, [12, 255, 6]);
        let bad: Result<Vec<u8>> = SymbolReader::new("1 2 z".as_bytes()).collect();
        assert!(bad.is_err());
    }
}
