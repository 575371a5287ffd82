use num_bigint::BigInt;

use super::parse_error;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    D,
    I,
    H,
    X,
    E,
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

pub fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut column) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l, col) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            column += i - start;
            let n: BigInt = digits.parse().expect("digit run");
            out.push(Token { tok: Tok::Int(n), line: l, column: col });
            continue;
        }
        let tok = match c {
            'D' => Tok::D,
            'I' => Tok::I,
            'H' => Tok::H,
            'x' => Tok::X,
            'e' => Tok::E,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            other => return Err(parse_error(l, col, format!("unexpected character '{other}'"))),
        };
        out.push(Token { tok, line: l, column: col });
        column += 1;
        i += 1;
    }
    out.push(Token { tok: Tok::End, line, column });
    Ok(out)
}
