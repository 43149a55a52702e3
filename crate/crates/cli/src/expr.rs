//! Operator expressions: `2*A+*B+ - C+^2`, `[H,[H,Y]]`, `(3/2)*lam^2*g - I*g^3`.
//!
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := unary (("*" | "/") unary)*
//! unary := "-" unary | power
//! power := atom ("^" uint)?
//! atom  := NAME | uint | "[" expr "," expr "]" | "{" expr "," expr "}" | "(" expr ")"
//! ```
//!
//! `A`, `B`, `C` and `Q` take their sign without a space (`A+`, `Q-`), so
//! `A+ - B-` needs the spaces around the binary minus.

use std::fmt;

use num_bigint::BigInt;
use psho_core::coeff::ParamScalar;
use psho_core::operators::catalogue;
use psho_core::weyl::WeylOperator;
use thiserror::Error;

const GENERATORS: [&str; 6] = ["z", "zb", "x3", "dz", "dzb", "d3"];
const PARAMETERS: [&str; 3] = ["lam", "g", "I"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// A catalogue operator, a raw generator or a parameter.
    Name(String),
    Number(BigInt),
    Neg(Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
    Difference(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Quotient(Box<Expr>, Box<Expr>),
    Power(Box<Expr>, u32),
    Commutator(Box<Expr>, Box<Expr>),
    Anticommutator(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ExprError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("unknown name `{name}` at column {column}")]
    UnknownName { column: usize, name: String },
    #[error("cannot divide by `{0}`: the divisor must be a nonzero scalar")]
    Division(String),
}

/// True for every name the parser accepts as an atom.
pub fn is_known_name(name: &str) -> bool {
    GENERATORS.contains(&name) || PARAMETERS.contains(&name) || catalogue::named(name).is_some()
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Name(String),
    Number(BigInt),
    Sym(char),
    End,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(Tok, usize)>, ExprError> {
        let mut lx = Lexer { src, pos: 0 };
        let mut out = Vec::new();
        loop {
            let (tok, at) = lx.next()?;
            let end = tok == Tok::End;
            out.push((tok, at));
            if end {
                return Ok(out);
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn next(&mut self) -> Result<(Tok, usize), ExprError> {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += self.peek().unwrap().len_utf8();
        }
        let start = self.pos;
        let Some(c) = self.peek() else {
            return Ok((Tok::End, start));
        };
        if c.is_ascii_digit() {
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let n = self.src[start..self.pos].parse().expect("digits");
            return Ok((Tok::Number(n), start));
        }
        if c.is_ascii_alphabetic() {
            while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                self.pos += 1;
            }
            let word = &self.src[start..self.pos];
            if matches!(word, "A" | "B" | "C" | "Q") {
                if let Some(s @ ('+' | '-')) = self.peek() {
                    self.pos += 1;
                    return Ok((Tok::Name(format!("{word}{s}")), start));
                }
            }
            if word == "Dp" {
                return self.dp_argument(start);
            }
            return Ok((Tok::Name(word.to_string()), start));
        }
        if "+-*/^[]{}(),".contains(c) {
            self.pos += 1;
            return Ok((Tok::Sym(c), start));
        }
        Err(ExprError::Syntax {
            column: start + 1,
            message: format!("unexpected character `{c}`"),
        })
    }

    fn dp_argument(&mut self, start: usize) -> Result<(Tok, usize), ExprError> {
        let rest = &self.src[self.pos..];
        let close = rest.find(')');
        let arg = close.and_then(|i| rest.strip_prefix('(').map(|r| &r[..i - 1]));
        match arg.map(str::trim) {
            Some(a) if !a.is_empty() && a.chars().all(|c| c.is_ascii_digit()) => {
                self.pos += close.unwrap() + 1;
                Ok((Tok::Name(format!("Dp({})", a.parse::<u32>().map_err(|_| self.too_big(start))?)), start))
            }
            _ => Err(ExprError::Syntax {
                column: start + 1,
                message: "expected `Dp(<uint>)`".into(),
            }),
        }
    }

    fn too_big(&self, start: usize) -> ExprError {
        ExprError::Syntax {
            column: start + 1,
            message: "integer argument out of range".into(),
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn column(&self) -> usize {
        self.toks[self.at].1 + 1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> ExprError {
        ExprError::Syntax {
            column: self.column(),
            message: message.into(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    lhs = Expr::Sum(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Sym('-') => {
                    self.bump();
                    lhs = Expr::Difference(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.bump();
                    lhs = Expr::Product(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Sym('/') => {
                    self.bump();
                    lhs = Expr::Quotient(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if *self.peek() == Tok::Sym('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Sym('^') {
            return Ok(base);
        }
        self.bump();
        let column = self.column();
        match self.bump() {
            Tok::Number(n) => {
                let e = u32::try_from(n).map_err(|_| ExprError::Syntax {
                    column,
                    message: "exponent out of range".into(),
                })?;
                Ok(Expr::Power(Box::new(base), e))
            }
            _ => Err(ExprError::Syntax {
                column,
                message: "expected a non-negative integer exponent".into(),
            }),
        }
    }

    fn pair(&mut self, close: char) -> Result<(Box<Expr>, Box<Expr>), ExprError> {
        let a = self.expr()?;
        self.expect(',')?;
        let b = self.expr()?;
        self.expect(close)?;
        Ok((Box::new(a), Box::new(b)))
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let column = self.column();
        match self.bump() {
            Tok::Number(n) => Ok(Expr::Number(n)),
            Tok::Name(name) if is_known_name(&name) => Ok(Expr::Name(name)),
            Tok::Name(name) => Err(ExprError::UnknownName { column, name }),
            Tok::Sym('[') => self.pair(']').map(|(a, b)| Expr::Commutator(a, b)),
            Tok::Sym('{') => self.pair('}').map(|(a, b)| Expr::Anticommutator(a, b)),
            Tok::Sym('(') => {
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Tok::End => Err(ExprError::Syntax {
                column,
                message: "unexpected end of input".into(),
            }),
            Tok::Sym(c) => Err(ExprError::Syntax {
                column,
                message: format!("unexpected `{c}`"),
            }),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let mut p = Parser {
        toks: Lexer::tokens(src)?,
        at: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Sum(..) | Expr::Difference(..) => 1,
            Expr::Product(..) | Expr::Quotient(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Power(..) => 4,
            _ => 5,
        }
    }

    fn write(&self, out: &mut String, min: u8) {
        let paren = self.precedence() < min;
        if paren {
            out.push('(');
        }
        match self {
            Expr::Name(n) => out.push_str(n),
            Expr::Number(n) => out.push_str(&n.to_string()),
            Expr::Neg(a) => {
                out.push('-');
                a.write(out, 3);
            }
            Expr::Sum(a, b) | Expr::Difference(a, b) => {
                a.write(out, 1);
                out.push_str(if matches!(self, Expr::Sum(..)) { " + " } else { " - " });
                b.write(out, 2);
            }
            Expr::Product(a, b) | Expr::Quotient(a, b) => {
                a.write(out, 2);
                out.push(if matches!(self, Expr::Product(..)) { '*' } else { '/' });
                b.write(out, 3);
            }
            Expr::Power(a, e) => {
                a.write(out, 5);
                out.push_str(&format!("^{e}"));
            }
            Expr::Commutator(a, b) | Expr::Anticommutator(a, b) => {
                let (open, close) = if matches!(self, Expr::Commutator(..)) { ('[', ']') } else { ('{', '}') };
                out.push(open);
                a.write(out, 1);
                out.push_str(", ");
                b.write(out, 1);
                out.push(close);
            }
        }
        if paren {
            out.push(')');
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out, 0);
        out
    }

    pub fn evaluate(&self) -> Result<WeylOperator, ExprError> {
        Ok(match self {
            Expr::Name(n) => resolve(n),
            Expr::Number(n) => WeylOperator::scalar(ParamScalar::from_bigint(n.clone())),
            Expr::Neg(a) => -a.evaluate()?,
            Expr::Sum(a, b) => a.evaluate()? + b.evaluate()?,
            Expr::Difference(a, b) => a.evaluate()? - b.evaluate()?,
            Expr::Product(a, b) => a.evaluate()? * b.evaluate()?,
            Expr::Quotient(a, b) => {
                let d = b.evaluate()?;
                match d.as_scalar() {
                    Some(c) if !c.is_zero() => a.evaluate()?.scale(&c.inv().expect("nonzero")),
                    _ => return Err(ExprError::Division(b.render())),
                }
            }
            Expr::Power(a, e) => a.evaluate()?.pow(*e),
            Expr::Commutator(a, b) => a.evaluate()?.commutator(&b.evaluate()?),
            Expr::Anticommutator(a, b) => a.evaluate()?.anticommutator(&b.evaluate()?),
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn resolve(name: &str) -> WeylOperator {
    if let Some(i) = GENERATORS.iter().position(|g| *g == name) {
        return if i < 3 { WeylOperator::var(i) } else { WeylOperator::der(i - 3) };
    }
    match name {
        "lam" => WeylOperator::scalar(ParamScalar::lam()),
        "g" => WeylOperator::scalar(ParamScalar::g()),
        "I" => WeylOperator::scalar(ParamScalar::i()),
        _ => catalogue::named(name).expect("names are checked while parsing"),
    }
}

/// Parses and evaluates in one step.
pub fn evaluate(src: &str) -> Result<WeylOperator, ExprError> {
    parse(src)?.evaluate()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_brackets_parse() {
        let e = parse("[H,[H,Y]]").unwrap();
        assert!(matches!(&e, Expr::Commutator(_, b) if matches!(**b, Expr::Commutator(..))));
        assert_eq!(e.render(), "[H, [H, Y]]");
    }

    #[test]
    fn signs_bind_to_ladder_names() {
        assert_eq!(parse("Q-").unwrap(), Expr::Name("Q-".into()));
        let e = parse("A+ - B-").unwrap();
        assert!(matches!(e, Expr::Difference(..)));
    }

    #[test]
    fn errors_carry_columns() {
        assert_eq!(
            parse("H + Foo").unwrap_err(),
            ExprError::UnknownName {
                column: 5,
                name: "Foo".into()
            }
        );
        assert!(matches!(parse("[H,").unwrap_err(), ExprError::Syntax { column: 4, .. }));
        assert!(matches!(parse("H $").unwrap_err(), ExprError::Syntax { column: 3, .. }));
        assert!(matches!(evaluate("H/z").unwrap_err(), ExprError::Division(_)));
    }

    #[test]
    fn dp_takes_an_integer() {
        assert_eq!(parse("Dp( 2 )").unwrap(), Expr::Name("Dp(2)".into()));
        assert!(parse("Dp(x)").is_err());
    }

    #[test]
    fn precedence_is_conventional() {
        assert!(parse("-a").is_err());
        assert_eq!(parse("-z^2").unwrap().render(), "-z^2");
        assert_eq!(parse("(-z)^2").unwrap().render(), "(-z)^2");
        assert_eq!(parse("z - (zb - x3)").unwrap().render(), "z - (zb - x3)");
        assert_eq!(parse("3/2*lam").unwrap(), parse("(3/2)*lam").unwrap());
    }
}
