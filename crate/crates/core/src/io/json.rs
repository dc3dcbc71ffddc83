//! Minimal JSON reader that keeps the source position of every value.
//!
//! Positions are 1-based; columns count Unicode scalar values.

use std::fmt;

const MAX_DEPTH: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum NodeKind {
    Null,
    Bool(bool),
    /// Number kept as its source text so integer and real readers can both use it.
    Number(String),
    String(String),
    Array(Vec<Node>),
    Object(Vec<Member>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Member {
    pub key: String,
    pub key_pos: Pos,
    pub value: Node,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    pub kind: NodeKind,
    pub pos: Pos,
}

impl Node {
    pub fn type_name(&self) -> &'static str {
        match self.kind {
            NodeKind::Null => "null",
            NodeKind::Bool(_) => "boolean",
            NodeKind::Number(_) => "number",
            NodeKind::String(_) => "string",
            NodeKind::Array(_) => "array",
            NodeKind::Object(_) => "object",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub pos: Pos,
    pub message: String,
}

pub fn parse(text: &str) -> Result<Node, SyntaxError> {
    let mut reader = Reader {
        chars: text.chars().collect(),
        index: 0,
        line: 1,
        column: 1,
    };
    // A leading byte-order mark is tolerated.
    if reader.peek() == Some('\u{feff}') {
        reader.index += 1;
    }
    reader.skip_ws();
    let node = reader.value(0)?;
    reader.skip_ws();
    if let Some(c) = reader.peek() {
        return Err(reader.error_here(format!("unexpected '{}' after the document", c.escape_debug())));
    }
    Ok(node)
}

struct Reader {
    chars: Vec<char>,
    index: usize,
    line: usize,
    column: usize,
}

impl Reader {
    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            column: self.column,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.index).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.index += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error_here(&self, message: impl Into<String>) -> SyntaxError {
        SyntaxError {
            pos: self.pos(),
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(' ' | '\t' | '\n' | '\r')) {
            self.bump();
        }
    }

    fn expect_word(&mut self, word: &str) -> Result<(), SyntaxError> {
        let start = self.pos();
        for expected in word.chars() {
            if self.peek() != Some(expected) {
                return Err(SyntaxError {
                    pos: start,
                    message: "invalid literal".to_string(),
                });
            }
            self.bump();
        }
        Ok(())
    }

    fn value(&mut self, depth: usize) -> Result<Node, SyntaxError> {
        if depth > MAX_DEPTH {
            return Err(self.error_here("nesting too deep"));
        }
        let pos = self.pos();
        let kind = match self.peek() {
            None => return Err(self.error_here("unexpected end of input, expected a value")),
            Some('{') => self.object(depth)?,
            Some('[') => self.array(depth)?,
            Some('"') => NodeKind::String(self.string()?),
            Some('t') => {
                self.expect_word("true")?;
                NodeKind::Bool(true)
            }
            Some('f') => {
                self.expect_word("false")?;
                NodeKind::Bool(false)
            }
            Some('n') => {
                self.expect_word("null")?;
                NodeKind::Null
            }
            Some(c) if c == '-' || c.is_ascii_digit() => NodeKind::Number(self.number()?),
            Some(c) => {
                return Err(self.error_here(format!("unexpected '{}', expected a value", c.escape_debug())))
            }
        };
        Ok(Node { kind, pos })
    }

    fn object(&mut self, depth: usize) -> Result<NodeKind, SyntaxError> {
        self.bump();
        let mut members = Vec::new();
        self.skip_ws();
        if self.peek() == Some('}') {
            self.bump();
            return Ok(NodeKind::Object(members));
        }
        loop {
            self.skip_ws();
            if self.peek() != Some('"') {
                return Err(self.error_here("expected a quoted field name"));
            }
            let key_pos = self.pos();
            let key = self.string()?;
            self.skip_ws();
            if self.peek() != Some(':') {
                return Err(self.error_here("expected ':' after field name"));
            }
            self.bump();
            self.skip_ws();
            let value = self.value(depth + 1)?;
            members.push(Member { key, key_pos, value });
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.bump();
                }
                Some('}') => {
                    self.bump();
                    return Ok(NodeKind::Object(members));
                }
                None => return Err(self.error_here("unexpected end of input inside an object")),
                Some(_) => return Err(self.error_here("expected ',' or '}'")),
            }
        }
    }

    fn array(&mut self, depth: usize) -> Result<NodeKind, SyntaxError> {
        self.bump();
        let mut items = Vec::new();
        self.skip_ws();
        if self.peek() == Some(']') {
            self.bump();
            return Ok(NodeKind::Array(items));
        }
        loop {
            self.skip_ws();
            items.push(self.value(depth + 1)?);
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.bump();
                }
                Some(']') => {
                    self.bump();
                    return Ok(NodeKind::Array(items));
                }
                None => return Err(self.error_here("unexpected end of input inside an array")),
                Some(_) => return Err(self.error_here("expected ',' or ']'")),
            }
        }
    }

    fn string(&mut self) -> Result<String, SyntaxError> {
        let open = self.pos();
        let unterminated = || SyntaxError {
            pos: open,
            message: "unterminated string".to_string(),
        };
        self.bump();
        let mut out = String::new();
        loop {
            match self.peek() {
                None | Some('\n') | Some('\r') => return Err(unterminated()),
                Some('"') => {
                    self.bump();
                    return Ok(out);
                }
                Some('\\') => {
                    let escape_pos = self.pos();
                    self.bump();
                    let c = self.bump().ok_or_else(unterminated)?;
                    match c {
                        '"' => out.push('"'),
                        '\\' => out.push('\\'),
                        '/' => out.push('/'),
                        'b' => out.push('\u{8}'),
                        'f' => out.push('\u{c}'),
                        'n' => out.push('\n'),
                        'r' => out.push('\r'),
                        't' => out.push('\t'),
                        'u' => out.push(self.unicode_escape(escape_pos)?),
                        _ => {
                            return Err(SyntaxError {
                                pos: escape_pos,
                                message: format!("invalid escape '\\{}'", c.escape_debug()),
                            })
                        }
                    }
                }
                Some(c) if (c as u32) < 0x20 => {
                    return Err(self.error_here("control character in string"));
                }
                Some(c) => {
                    self.bump();
                    out.push(c);
                }
            }
        }
    }

    fn hex4(&mut self, escape_pos: Pos) -> Result<u32, SyntaxError> {
        let mut code = 0u32;
        for _ in 0..4 {
            let digit = self.peek().and_then(|c| c.to_digit(16)).ok_or(SyntaxError {
                pos: escape_pos,
                message: "invalid \\u escape".to_string(),
            })?;
            self.bump();
            code = code * 16 + digit;
        }
        Ok(code)
    }

    fn unicode_escape(&mut self, escape_pos: Pos) -> Result<char, SyntaxError> {
        let bad = |message: &str| SyntaxError {
            pos: escape_pos,
            message: message.to_string(),
        };
        let first = self.hex4(escape_pos)?;
        let code = match first {
            0xD800..=0xDBFF => {
                if self.peek() != Some('\\') {
                    return Err(bad("unpaired surrogate in \\u escape"));
                }
                self.bump();
                if self.bump() != Some('u') {
                    return Err(bad("unpaired surrogate in \\u escape"));
                }
                let second = self.hex4(escape_pos)?;
                if !(0xDC00..=0xDFFF).contains(&second) {
                    return Err(bad("unpaired surrogate in \\u escape"));
                }
                0x10000 + ((first - 0xD800) << 10) + (second - 0xDC00)
            }
            0xDC00..=0xDFFF => return Err(bad("unpaired surrogate in \\u escape")),
            other => other,
        };
        char::from_u32(code).ok_or_else(|| bad("invalid \\u escape"))
    }

    fn digits(&mut self, out: &mut String) -> usize {
        let mut count = 0;
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            out.push(c);
            self.bump();
            count += 1;
        }
        count
    }

    fn number(&mut self) -> Result<String, SyntaxError> {
        let start = self.pos();
        let invalid = || SyntaxError {
            pos: start,
            message: "invalid number".to_string(),
        };
        let mut text = String::new();
        if self.peek() == Some('-') {
            text.push('-');
            self.bump();
        }
        match self.peek() {
            Some('0') => {
                text.push('0');
                self.bump();
                if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    return Err(invalid());
                }
            }
            Some(c) if c.is_ascii_digit() => {
                self.digits(&mut text);
            }
            _ => return Err(invalid()),
        }
        if self.peek() == Some('.') {
            text.push('.');
            self.bump();
            if self.digits(&mut text) == 0 {
                return Err(invalid());
            }
        }
        if let Some(e @ ('e' | 'E')) = self.peek() {
            text.push(e);
            self.bump();
            if let Some(sign @ ('+' | '-')) = self.peek() {
                text.push(sign);
                self.bump();
            }
            if self.digits(&mut text) == 0 {
                return Err(invalid());
            }
        }
        Ok(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(text: &str) -> SyntaxError {
        parse(text).unwrap_err()
    }

    #[test]
    fn parses_nested_values_with_positions() {
        let node =
            parse("{\n  \"a\": [1, -2.5e3, true, null],\n  \"b\": \"x\\u00e9\\ud83d\\ude00\"\n}").unwrap();
        let NodeKind::Object(members) = &node.kind else {
            panic!()
        };
        assert_eq!(members[0].key_pos, Pos { line: 2, column: 3 });
        assert_eq!(members[0].value.pos, Pos { line: 2, column: 8 });
        let NodeKind::Array(items) = &members[0].value.kind else {
            panic!()
        };
        assert_eq!(items[1].kind, NodeKind::Number("-2.5e3".into()));
        assert_eq!(members[1].value.kind, NodeKind::String("xé😀".into()));
    }

    #[test]
    fn unterminated_string_points_at_opening_quote() {
        let e = err("{\n  \"a\": \"open\n}");
        assert_eq!(e.pos, Pos { line: 2, column: 8 });
        assert_eq!(e.message, "unterminated string");
        let e = err("[\"abc");
        assert_eq!(e.pos, Pos { line: 1, column: 2 });
    }

    #[test]
    fn rejects_malformed_numbers() {
        for text in ["01", "1.", "-", "1e", ".5", "+1"] {
            assert!(parse(text).is_err(), "{text}");
        }
    }

    #[test]
    fn rejects_trailing_garbage_and_commas() {
        assert_eq!(err("{} x").pos, Pos { line: 1, column: 4 });
        assert!(parse("[1,]").is_err());
        assert!(parse("{\"a\":1,}").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn nesting_limit() {
        let deep = "[".repeat(200) + &"]".repeat(200);
        assert_eq!(err(&deep).message, "nesting too deep");
    }
}
