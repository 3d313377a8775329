//! Tokenizer shared by the spec and element grammars.

use crate::error::ParseError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Tok {
    Ident(String),
    Int(i64),
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Colon,
    Eq,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    /// The literal `(x)` tensor separator (element grammar only).
    TensorSep,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Int(n) => format!("'{n}'"),
            Tok::LBrace => "'{'".into(),
            Tok::RBrace => "'}'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::Comma => "','".into(),
            Tok::Semi => "';'".into(),
            Tok::Colon => "':'".into(),
            Tok::Eq => "'='".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::TensorSep => "'(x)'".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

/// Tokenizes the input. `# ...` comments run to end of line. In element
/// mode the three characters `(x)` form a single tensor-separator token,
/// and identifiers `G+`/`G-` merge their sign for family names.
pub fn tokenize(text: &str, element_mode: bool) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1usize, 1usize);

    macro_rules! bump {
        () => {{
            let c = chars.next();
            if let Some(ch) = c {
                if ch == '\n' {
                    line += 1;
                    col = 1;
                } else {
                    col += 1;
                }
            }
            c
        }};
    }

    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                bump!();
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump!();
                }
            }
            '(' => {
                bump!();
                if element_mode {
                    // recognize "(x)" with no interior whitespace
                    let mut probe = chars.clone();
                    if probe.next() == Some('x') && probe.next() == Some(')') {
                        bump!();
                        bump!();
                        out.push(Token { tok: Tok::TensorSep, line: tl, col: tc });
                        continue;
                    }
                }
                out.push(Token { tok: Tok::LParen, line: tl, col: tc });
            }
            ')' => {
                bump!();
                out.push(Token { tok: Tok::RParen, line: tl, col: tc });
            }
            '{' | '}' | '[' | ']' | ',' | ';' | ':' | '=' | '+' | '-' | '*' | '/' | '^' => {
                bump!();
                let tok = match c {
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    ',' => Tok::Comma,
                    ';' => Tok::Semi,
                    ':' => Tok::Colon,
                    '=' => Tok::Eq,
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    _ => Tok::Caret,
                };
                out.push(Token { tok, line: tl, col: tc });
            }
            '0'..='9' => {
                let mut value: i64 = 0;
                while let Some(&d) = chars.peek() {
                    if let Some(digit) = d.to_digit(10) {
                        value = value
                            .checked_mul(10)
                            .and_then(|v| v.checked_add(digit as i64))
                            .ok_or_else(|| ParseError::new(tl, tc, "integer literal too large"))?;
                        bump!();
                    } else {
                        break;
                    }
                }
                out.push(Token { tok: Tok::Int(value), line: tl, col: tc });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        bump!();
                    } else {
                        break;
                    }
                }
                // family names G+ / G- absorb the adjacent sign
                if name == "G" {
                    if let Some(&sign) = chars.peek() {
                        if sign == '+' || sign == '-' {
                            name.push(sign);
                            bump!();
                        }
                    }
                }
                out.push(Token { tok: Tok::Ident(name), line: tl, col: tc });
            }
            other => {
                return Err(ParseError::new(tl, tc, format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(out)
}

/// Cursor over the token stream with positioned error helpers.
pub struct Cursor {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Cursor {
    pub fn new(toks: Vec<Token>, text: &str) -> Self {
        let lines = text.lines().count().max(1);
        let last_len = text.lines().last().map(|l| l.len()).unwrap_or(0);
        Cursor { toks, pos: 0, end: (lines, last_len + 1) }
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    pub fn peek_at(&self, ahead: usize) -> Option<&Tok> {
        self.toks.get(self.pos + ahead).map(|t| &t.tok)
    }

    pub fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map(|t| (t.line, t.col)).unwrap_or(self.end)
    }

    pub fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError::new(line, col, message)
    }

    pub fn expect(&mut self, want: &Tok) -> Result<Token, ParseError> {
        match self.peek() {
            Some(t) if t == want => Ok(self.next().unwrap()),
            Some(t) => {
                let msg = format!("expected {}, found {}", want.describe(), t.describe());
                Err(self.error(msg))
            }
            None => Err(self.error(format!("expected {}, found end of input", want.describe()))),
        }
    }

    pub fn expect_ident(&mut self, want: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == want => {
                self.next();
                Ok(())
            }
            Some(t) => {
                let msg = format!("expected '{want}', found {}", t.describe());
                Err(self.error(msg))
            }
            None => Err(self.error(format!("expected '{want}', found end of input"))),
        }
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub fn expect_end(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error(format!(
                "unexpected {} after a complete input",
                self.peek().unwrap().describe()
            )))
        }
    }
}
