//! The ASCII grammar for formulae and sequents.
//!
//! Binary connectives do not associate: `A*B*C` is rejected and must be
//! written `(A*B)*C` or `A*(B*C)`. The single exception is the Lambek
//! product, which binds more loosely than the slashes, so `C.(C\A)/B`
//! reads as `C.((C\A)/B)`. Prefix `~` and postfix `^` bind tightest.

use crate::error::{Error, Result, SourceSpan};
use crate::logic::{Antecedent, Connective, Formula, LogicId, Sequent, Structure};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Op(Connective),
    LParen,
    RParen,
    Comma,
    Turnstile,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    span: SourceSpan,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let (tok, len) = match c {
            b'(' => (Tok::LParen, 1),
            b')' => (Tok::RParen, 1),
            b',' => (Tok::Comma, 1),
            b'~' => (Tok::Op(Connective::Not), 1),
            b'^' => (Tok::Op(Connective::Perp), 1),
            b'&' => (Tok::Op(Connective::And), 1),
            b'|' => (Tok::Op(Connective::Or), 1),
            b'*' => (Tok::Op(Connective::Tensor), 1),
            b'@' => (Tok::Op(Connective::Par), 1),
            b'/' => (Tok::Op(Connective::Over), 1),
            b'\\' => (Tok::Op(Connective::Under), 1),
            b'.' => (Tok::Op(Connective::Product), 1),
            b'=' if bytes.get(i + 1) == Some(&b'>') => (Tok::Turnstile, 2),
            b'-' if bytes.get(i + 1) == Some(&b'>') => (Tok::Op(Connective::Implies), 2),
            b'-' if bytes.get(i + 1) == Some(&b'o') => (Tok::Op(Connective::Lolli), 2),
            c if c.is_ascii_alphabetic() => {
                let len = bytes[i..].iter().take_while(|b| b.is_ascii_alphanumeric() || **b == b'_').count();
                (Tok::Ident(text[i..i + len].to_string()), len)
            }
            _ => {
                let width = text[i..].chars().next().map_or(1, char::len_utf8);
                return Err(Error::Syntax {
                    span: SourceSpan::new(i, i + width),
                    expected: "an atom, connective, `(`, `)`, `,` or `=>`".into(),
                });
            }
        };
        i += len;
        out.push(Token { tok, span: SourceSpan::new(start, i) });
    }
    Ok(out)
}

struct Parser<'t> {
    logic: LogicId,
    toks: &'t [Token],
    pos: usize,
    end: usize,
}

impl<'t> Parser<'t> {
    fn new(logic: LogicId, toks: &'t [Token], end: usize) -> Self {
        Parser { logic, toks, pos: 0, end }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> SourceSpan {
        self.toks.get(self.pos).map_or(SourceSpan::new(self.end, self.end), |t| t.span)
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Syntax { span: self.here(), expected: expected.to_string() })
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &Tok, what: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.fail(what)
        }
    }

    fn peek_op(&self, pred: impl Fn(Connective) -> bool) -> Option<Connective> {
        match self.peek() {
            Some(Tok::Op(c)) if pred(*c) => Some(*c),
            _ => None,
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        if matches!(self.logic, LogicId::LambekL | LogicId::LambekLEps) {
            let left = self.binary(|c| c != Connective::Product)?;
            if self.eat(&Tok::Op(Connective::Product)) {
                let right = self.binary(|c| c != Connective::Product)?;
                if self.peek_op(|_| true).is_some() {
                    return self.fail("`)`: binary connectives do not associate");
                }
                return Ok(Formula::binary(Connective::Product, left, right));
            }
            return Ok(left);
        }
        self.binary(|_| true)
    }

    /// `unary (op unary)?` restricted to binary connectives accepted by `allowed`.
    fn binary(&mut self, allowed: impl Fn(Connective) -> bool) -> Result<Formula> {
        let left = self.unary()?;
        let binop = |c: Connective| c.arity() == 2 && allowed(c);
        if let Some(c) = self.peek_op(binop) {
            self.pos += 1;
            let right = self.unary()?;
            if self.peek_op(binop).is_some() {
                return self.fail("`)`: binary connectives do not associate");
            }
            return Ok(Formula::binary(c, left, right));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula> {
        if self.eat(&Tok::Op(Connective::Not)) {
            let inner = self.unary()?;
            return Ok(Formula::unary(Connective::Not, inner));
        }
        let mut f = self.primary()?;
        while self.eat(&Tok::Op(Connective::Perp)) {
            f = Formula::unary(Connective::Perp, f);
        }
        Ok(f)
    }

    fn primary(&mut self) -> Result<Formula> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Formula::atom(name))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let f = self.formula()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(f)
            }
            _ => self.fail("an atom or `(`"),
        }
    }

    /// A comma-separated list of formulae, possibly empty, up to `stop`.
    fn formula_list(&mut self, stop: Option<&Tok>) -> Result<Vec<Formula>> {
        let mut out = Vec::new();
        if self.peek() == stop {
            return Ok(out);
        }
        loop {
            out.push(self.formula()?);
            if !self.eat(&Tok::Comma) {
                return Ok(out);
            }
        }
    }

    /// An NL antecedent: `(X , Y)` or a formula. A leading `(` is tried as a
    /// pair first and re-read as a parenthesised formula if that fails.
    fn structure(&mut self) -> Result<Structure> {
        if self.peek() == Some(&Tok::LParen) {
            let save = self.pos;
            self.pos += 1;
            let pair = self.structure().and_then(|left| {
                self.expect(&Tok::Comma, "`,`")?;
                let right = self.structure()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(Structure::pair(left, right))
            });
            match pair {
                Ok(p) => return Ok(p),
                Err(_) => self.pos = save,
            }
        }
        self.formula().map(Structure::Leaf)
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            self.fail("end of input")
        }
    }
}

/// Rejects connectives foreign to the logic before any structural parsing.
fn check_connectives(toks: &[Token], logic: LogicId) -> Result<()> {
    for t in toks {
        if let Tok::Op(c) = t.tok {
            if !logic.allows(c) {
                return Err(Error::IllegalConnective { connective: c, logic, span: Some(t.span) });
            }
        }
    }
    Ok(())
}

pub fn parse_formula(text: &str, logic: LogicId) -> Result<Formula> {
    let toks = lex(text)?;
    check_connectives(&toks, logic)?;
    let mut p = Parser::new(logic, &toks, text.len());
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

pub fn parse_sequent(text: &str, logic: LogicId) -> Result<Sequent> {
    let toks = lex(text)?;
    check_connectives(&toks, logic)?;
    let mut p = Parser::new(logic, &toks, text.len());
    let antecedent = if logic == LogicId::Nl {
        if p.peek() == Some(&Tok::Turnstile) {
            return Err(Error::EmptyAntecedent(logic));
        }
        Antecedent::Tree(p.structure()?)
    } else {
        Antecedent::List(p.formula_list(Some(&Tok::Turnstile))?)
    };
    p.expect(&Tok::Turnstile, "`=>`")?;
    let succedent = p.formula_list(None)?;
    p.finish()?;
    Sequent::new(logic, antecedent, succedent)
}

/// Canonical text of a sequent; `parse_sequent` reads it back unchanged.
pub fn print_sequent(sequent: &Sequent) -> String {
    sequent.to_string()
}

pub fn print_formula(formula: &Formula) -> String {
    formula.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(text: &str, logic: LogicId) -> String {
        print_sequent(&parse_sequent(text, logic).unwrap())
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(roundtrip("~A,B->A=>~B", LogicId::Classical), "~A, B->A => ~B");
        assert_eq!(roundtrip("A@B, (B*C)^ => C-oA", LogicId::Mll), "A@B, (B*C)^ => C-oA");
        assert_eq!(roundtrip("((A , (A\\B)/C) , C) => B", LogicId::Nl), "((A , (A\\B)/C) , C) => B");
        assert_eq!(roundtrip("C.(C\\A)/B, B => A", LogicId::LambekL), "C.((C\\A)/B), B => A");
        assert_eq!(roundtrip("=> A-oA", LogicId::Mill), "=> A-oA");
        assert_eq!(roundtrip("A, B =>", LogicId::Classical), "A, B =>");
    }

    #[test]
    fn nl_pair_versus_parenthesised_formula() {
        let s = parse_sequent("((A\\B)/C , C) => A\\B", LogicId::Nl).unwrap();
        match s.antecedent() {
            Antecedent::Tree(Structure::Pair(l, _)) => {
                assert_eq!(l.to_string(), "(A\\B)/C");
            }
            other => panic!("unexpected {other:?}"),
        }
        let s = parse_sequent("(A/B) => A/B", LogicId::Nl).unwrap();
        assert!(matches!(s.antecedent(), Antecedent::Tree(Structure::Leaf(_))));
    }

    #[test]
    fn non_associative() {
        assert!(matches!(parse_sequent("A*B*C => D", LogicId::Mll), Err(Error::Syntax { .. })));
        assert!(matches!(parse_sequent("A.B.C => D", LogicId::LambekL), Err(Error::Syntax { .. })));
        assert!(matches!(parse_sequent("A/B/C => D", LogicId::LambekL), Err(Error::Syntax { .. })));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_sequent("A.B => A", LogicId::Nl),
            Err(Error::IllegalConnective { connective: Connective::Product, .. })
        ));
        assert_eq!(parse_sequent("=> A", LogicId::LambekL), Err(Error::EmptyAntecedent(LogicId::LambekL)));
        assert_eq!(parse_sequent("=> A", LogicId::Nl), Err(Error::EmptyAntecedent(LogicId::Nl)));
        assert!(parse_sequent("=> A", LogicId::LambekLEps).is_ok());
        assert_eq!(
            parse_sequent("A => A, A", LogicId::Mill),
            Err(Error::MultipleSuccedents { logic: LogicId::Mill, found: 2 })
        );
        assert_eq!(
            parse_sequent("A =>", LogicId::LambekL),
            Err(Error::MultipleSuccedents { logic: LogicId::LambekL, found: 0 })
        );
        match parse_sequent("A => (B", LogicId::Mll) {
            Err(Error::Syntax { span, .. }) => assert_eq!(span, SourceSpan::new(7, 7)),
            other => panic!("unexpected {other:?}"),
        }
        match parse_sequent("A => B $", LogicId::Mll) {
            Err(Error::Syntax { span, .. }) => assert_eq!(span, SourceSpan::new(7, 8)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn identifiers() {
        let s = parse_sequent("np_1, np_1\\s => s", LogicId::LambekL).unwrap();
        assert_eq!(s.antecedent_formulas()[0], &Formula::atom("np_1"));
    }
}
