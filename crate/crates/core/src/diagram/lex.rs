use super::DiagramError;

/// Byte cursor shared by the text grammars.
pub(crate) struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    pub fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    pub fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }

    pub fn skip_ws(&mut self) {
        let rest = self.rest();
        let trimmed = rest.trim_start();
        self.pos += rest.len() - trimmed.len();
    }

    pub fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn eat_str(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), DiagramError> {
        self.skip_ws();
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub fn error(&self, message: impl Into<String>) -> DiagramError {
        DiagramError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    /// Unsigned decimal integer.
    pub fn unsigned(&mut self) -> Result<u64, DiagramError> {
        let start = self.pos;
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        self.pos += digits;
        self.text[start..self.pos]
            .parse()
            .map_err(|_| DiagramError::Syntax {
                position: start,
                message: "integer out of range".into(),
            })
    }

    /// Optionally signed decimal integer.
    pub fn signed(&mut self) -> Result<i64, DiagramError> {
        let start = self.pos;
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let magnitude = self.unsigned()?;
        let value = i64::try_from(magnitude).map_err(|_| DiagramError::Syntax {
            position: start,
            message: "integer out of range".into(),
        })?;
        Ok(if negative { -value } else { value })
    }
}
