//! Concrete syntax for group words.
//!
//! ```text
//! word := term+                      products by juxtaposition
//! term := atom ('^' int)?            int may be negative
//! atom := ident | '(' word ')' | '[' arg (',' arg)+ ']'
//! arg  := word ('*' uint)?           '*k' repeats the argument k times
//!                                    in the left-normed list
//! ```
//!
//! Identifiers are single letters, optionally followed by digits
//! (`x`, `y`, `x1`, `x2`, …); whitespace is insignificant. Variables are
//! numbered by first occurrence.

use std::collections::HashMap;
use std::fmt;

use super::{normalize, Word, WordExpr};
use crate::error::{Error, Result};

const MAX_REPEAT: u64 = 10_000;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(u64),
    Caret,
    Minus,
    Star,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
}

struct Lexed {
    tok: Tok,
    pos: usize,
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::WordSyntax {
        position,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Lexed>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let pos = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '^' => Tok::Caret,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            ',' => Tok::Comma,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            c if c.is_ascii_alphabetic() => {
                let mut name = String::from(c);
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    name.push(bytes[i] as char);
                    i += 1;
                }
                out.push(Lexed {
                    tok: Tok::Ident(name),
                    pos,
                });
                continue;
            }
            c if c.is_ascii_digit() => {
                let mut value: u64 = 0;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add((bytes[i] - b'0') as u64))
                        .ok_or_else(|| err(pos, "integer literal too large"))?;
                    i += 1;
                }
                out.push(Lexed {
                    tok: Tok::Int(value),
                    pos,
                });
                continue;
            }
            other => return Err(err(pos, format!("unexpected character `{other}`"))),
        };
        out.push(Lexed { tok, pos });
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Lexed>,
    cursor: usize,
    end: usize,
    names: Vec<String>,
    interned: HashMap<String, u32>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.cursor).map(|l| &l.tok)
    }

    fn pos(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map(|l| l.pos)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.cursor).map(|l| l.tok.clone());
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.cursor += 1;
            Ok(())
        } else {
            Err(err(self.pos(), format!("expected {what}")))
        }
    }

    fn intern(&mut self, name: String) -> u32 {
        if let Some(&i) = self.interned.get(&name) {
            return i;
        }
        let i = self.names.len() as u32 + 1;
        self.names.push(name.clone());
        self.interned.insert(name, i);
        i
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Ident(_)) | Some(Tok::LParen) | Some(Tok::LBracket)
        )
    }

    /// word := term+
    fn parse_word(&mut self) -> Result<WordExpr> {
        if !self.starts_atom() {
            return Err(err(self.pos(), "expected a term"));
        }
        let mut terms = Vec::new();
        while self.starts_atom() {
            terms.push(self.parse_term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            WordExpr::Product(terms)
        })
    }

    /// term := atom ('^' int)?
    fn parse_term(&mut self) -> Result<WordExpr> {
        let atom = self.parse_atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let negative = if self.peek() == Some(&Tok::Minus) {
                self.bump();
                true
            } else {
                false
            };
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Int(v)) => {
                    if v > i64::MAX as u64 {
                        return Err(err(pos, "exponent too large"));
                    }
                    let k = if negative { -(v as i64) } else { v as i64 };
                    Ok(WordExpr::Power(Box::new(atom), k))
                }
                _ => Err(err(pos, "expected an integer exponent after `^`")),
            }
        } else {
            Ok(atom)
        }
    }

    /// atom := ident | '(' word ')' | '[' arg (',' arg)+ ']'
    fn parse_atom(&mut self) -> Result<WordExpr> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Ident(name)) => Ok(WordExpr::Var(self.intern(name))),
            Some(Tok::LParen) => {
                let inner = self.parse_word()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::LBracket) => {
                let mut args = Vec::new();
                self.parse_arg_into(&mut args)?;
                if self.peek() != Some(&Tok::Comma) {
                    return Err(err(self.pos(), "expected `,`: a commutator takes at least two arguments"));
                }
                while self.peek() == Some(&Tok::Comma) {
                    self.bump();
                    self.parse_arg_into(&mut args)?;
                }
                self.expect(Tok::RBracket, "`]`")?;
                if args.len() < 2 {
                    return Err(err(pos, "commutator arity < 2 after repetition expansion"));
                }
                Ok(WordExpr::Commutator(args))
            }
            Some(other) => Err(err(pos, format!("unexpected token `{other:?}`"))),
            None => Err(err(pos, "unexpected end of input")),
        }
    }

    /// arg := word ('*' uint)?
    fn parse_arg_into(&mut self, args: &mut Vec<WordExpr>) -> Result<()> {
        let word = self.parse_word()?;
        let mut count = 1u64;
        if self.peek() == Some(&Tok::Star) {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Int(v)) => {
                    if v > MAX_REPEAT {
                        return Err(err(pos, format!("repetition count exceeds {MAX_REPEAT}")));
                    }
                    count = v;
                }
                _ => return Err(err(pos, "expected a repetition count after `*`")),
            }
        }
        for _ in 0..count {
            args.push(word.clone());
        }
        Ok(())
    }
}

pub(super) fn parse_word(text: &str) -> Result<Word> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        cursor: 0,
        end: text.len(),
        names: Vec::new(),
        interned: HashMap::new(),
    };
    let expr = parser.parse_word()?;
    if parser.cursor < parser.tokens.len() {
        return Err(err(parser.pos(), "trailing input after word"));
    }
    let expr = normalize(expr);
    if matches!(&expr, WordExpr::Product(ch) if ch.is_empty()) {
        return Err(err(0, "word normalizes to the empty word"));
    }
    Ok(Word {
        expr,
        names: parser.names,
    })
}

fn name_of(names: &[String], idx: u32) -> String {
    names
        .get(idx as usize - 1)
        .cloned()
        .unwrap_or_else(|| format!("x{idx}"))
}

/// Canonical printer; emits the same grammar `parse_word` reads.
pub(super) fn write_word(
    f: &mut fmt::Formatter<'_>,
    expr: &WordExpr,
    names: &[String],
) -> fmt::Result {
    match expr {
        WordExpr::Product(children) if children.is_empty() => write!(f, "x^0"),
        WordExpr::Product(children) => {
            for (i, c) in children.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write_term(f, c, names)?;
            }
            Ok(())
        }
        other => write_term(f, other, names),
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, expr: &WordExpr, names: &[String]) -> fmt::Result {
    match expr {
        WordExpr::Var(i) => write!(f, "{}", name_of(names, *i)),
        WordExpr::Commutator(children) => {
            write!(f, "[")?;
            for (i, c) in children.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write_word(f, c, names)?;
            }
            write!(f, "]")
        }
        WordExpr::Power(base, k) => {
            match base.as_ref() {
                WordExpr::Var(_) | WordExpr::Commutator(_) => write_term(f, base, names)?,
                other => {
                    write!(f, "(")?;
                    write_word(f, other, names)?;
                    write!(f, ")")?;
                }
            }
            write!(f, "^{k}")
        }
        WordExpr::Product(_) => {
            write!(f, "(")?;
            write_word(f, expr, names)?;
            write!(f, ")")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{classify, Word, WordExpr};
    use crate::error::Error;

    #[test]
    fn grammar_cases() {
        let w = Word::parse("[x,y,y]").unwrap();
        assert_eq!(
            w.expr(),
            &WordExpr::Commutator(vec![
                WordExpr::Var(1),
                WordExpr::Var(2),
                WordExpr::Var(2)
            ])
        );

        let w = Word::parse("[x, y^10 * 3]").unwrap();
        let pow = WordExpr::Power(Box::new(WordExpr::Var(2)), 10);
        assert_eq!(
            w.expr(),
            &WordExpr::Commutator(vec![
                WordExpr::Var(1),
                pow.clone(),
                pow.clone(),
                pow
            ])
        );

        let w = Word::parse("[x,y]^3").unwrap();
        assert_eq!(
            w.expr(),
            &WordExpr::Power(
                Box::new(WordExpr::Commutator(vec![
                    WordExpr::Var(1),
                    WordExpr::Var(2)
                ])),
                3
            )
        );
    }

    #[test]
    fn repetition_sugar_matches_explicit_form() {
        let sugared = Word::parse("[x, y*3]").unwrap();
        let explicit = Word::parse("[x,y,y,y]").unwrap();
        assert_eq!(sugared.expr(), explicit.expr());
        assert_eq!(classify(sugared.expr()), classify(explicit.expr()));
    }

    #[test]
    fn products_and_powers() {
        let w = Word::parse("x y^-1 (x y)^2").unwrap();
        assert_eq!(w.var_names(), &["x".to_string(), "y".to_string()]);
        let text = w.text();
        let again = Word::parse(&text).unwrap();
        assert_eq!(again.expr(), w.expr());
    }

    #[test]
    fn normalization() {
        // zero exponents erase inside products
        let w = Word::parse("x y^0 z").unwrap();
        assert_eq!(
            w.expr(),
            &WordExpr::Product(vec![WordExpr::Var(1), WordExpr::Var(3)])
        );
        // nested powers merge
        let w = Word::parse("(x^2)^3").unwrap();
        assert_eq!(w.expr(), &WordExpr::Power(Box::new(WordExpr::Var(1)), 6));
        // unit powers collapse
        let w = Word::parse("x^1").unwrap();
        assert_eq!(w.expr(), &WordExpr::Var(1));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match Word::parse("[x y") {
            Err(Error::WordSyntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(Word::parse("").is_err());
        assert!(Word::parse("[x]").is_err());
        assert!(Word::parse("[x,]").is_err());
        assert!(Word::parse("x^").is_err());
        assert!(Word::parse("x^y").is_err());
        assert!(Word::parse("x*3").is_err()); // repetition only inside commutators
        assert!(Word::parse("x y)").is_err());
        assert!(Word::parse("#").is_err());
    }

    #[test]
    fn commutator_arity_after_expansion() {
        match Word::parse("[x, y*0]") {
            Err(Error::WordSyntax { message, .. }) => {
                assert!(message.contains("arity"), "{message}");
            }
            other => panic!("expected arity error, got {other:?}"),
        }
        assert!(Word::parse("[x*2, y]").is_ok());
    }

    #[test]
    fn trivial_word_rejected() {
        assert!(matches!(
            Word::parse("x^0"),
            Err(Error::WordSyntax { .. })
        ));
    }

    #[test]
    fn canonical_print_round_trip() {
        for text in [
            "[x,y]",
            "[x,y,z,y]",
            "[x, y^10 * 3]",
            "[x,y]^3",
            "x y^-2 [z, w]",
            "[x y, z]",
            "([x,y] z)^4",
        ] {
            let w = Word::parse(text).unwrap();
            let printed = w.text();
            let again = Word::parse(&printed).unwrap();
            assert_eq!(again.expr(), w.expr(), "round trip of `{text}` via `{printed}`");
            assert_eq!(classify(again.expr()), classify(w.expr()));
        }
    }
}
