//! Constant expressions for the command line.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | atom
//! atom   := number | ident | ident '(' args ')' | '(' expr ')'
//! ```
//!
//! Identifiers: `pi`, `phi7`, `theta_plus`, `omega_plus`; functions `sqrt`,
//! `ln`, `cl2`, `L(d, s)` with an integer discriminant and `zeta(s, a)`.

use rug::Float;

use crate::clausen::cl2_value;
use crate::constants::PaperConstants;
use crate::error::{Error, Result};
use crate::lseries::dirichlet_l;
use crate::precision::PrecisionContext;
use crate::zeta::hurwitz_zeta;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(String),
    Constant(ConstantName),
    Neg(Box<Expr>),
    Binary(Op, Box<Expr>, Box<Expr>),
    Call(Function, Vec<Expr>),
    /// `L(d, s)`; the discriminant is kept exact.
    LSeries(i64, Box<Expr>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantName {
    Pi,
    Phi7,
    ThetaPlus,
    OmegaPlus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Function {
    Sqrt,
    Ln,
    Cl2,
    Zeta,
}

impl Function {
    fn arity(self) -> usize {
        match self {
            Function::Zeta => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(String),
    Ident(String),
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                i += 1;
            }
            // Exponent only when followed by digits, so `2e` stays an error.
            if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                let mut j = i + 1;
                if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                    j += 1;
                }
                if j < bytes.len() && bytes[j].is_ascii_digit() {
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    i = j;
                }
            }
            let text = &src[start..i];
            if text.matches('.').count() > 1 || text == "." {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("malformed number '{text}'"),
                });
            }
            out.push((start, Token::Number(text.to_string())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Token::Ident(src[start..i].to_string())));
        } else if "+-*/(),".contains(c) {
            out.push((i, Token::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Parse {
                pos: i,
                msg: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected '{c}'"))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.eat('+') {
                Op::Add
            } else if self.eat('-') {
                Op::Sub
            } else {
                return Ok(lhs);
            };
            let rhs = self.term()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.eat('*') {
                Op::Mul
            } else if self.eat('/') {
                Op::Div
            } else {
                return Ok(lhs);
            };
            let rhs = self.unary()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn integer(&mut self) -> Result<i64> {
        let negative = self.eat('-');
        let value = match self.peek() {
            Some(Token::Number(n)) => n.parse::<i64>().ok(),
            _ => None,
        };
        match value {
            Some(v) => {
                self.pos += 1;
                Ok(if negative { -v } else { v })
            }
            None => self.error("expected an integer discriminant"),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let start = self.offset();
        match self.peek().cloned() {
            Some(Token::Number(n)) => {
                self.pos += 1;
                Ok(Expr::Number(n))
            }
            Some(Token::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                let constant = match name.as_str() {
                    "pi" => Some(ConstantName::Pi),
                    "phi7" => Some(ConstantName::Phi7),
                    "theta_plus" => Some(ConstantName::ThetaPlus),
                    "omega_plus" => Some(ConstantName::OmegaPlus),
                    _ => None,
                };
                if let Some(c) = constant {
                    return Ok(Expr::Constant(c));
                }
                if name == "L" {
                    self.expect('(')?;
                    let d = self.integer()?;
                    self.expect(',')?;
                    let s = self.expr()?;
                    self.expect(')')?;
                    return Ok(Expr::LSeries(d, Box::new(s)));
                }
                let function = match name.as_str() {
                    "sqrt" => Function::Sqrt,
                    "ln" => Function::Ln,
                    "cl2" => Function::Cl2,
                    "zeta" => Function::Zeta,
                    _ => {
                        return Err(Error::Parse {
                            pos: start,
                            msg: format!("unknown identifier '{name}'"),
                        })
                    }
                };
                self.expect('(')?;
                let mut args = vec![self.expr()?];
                while self.eat(',') {
                    args.push(self.expr()?);
                }
                self.expect(')')?;
                if args.len() != function.arity() {
                    return Err(Error::Parse {
                        pos: start,
                        msg: format!(
                            "'{name}' takes {} argument(s), got {}",
                            function.arity(),
                            args.len()
                        ),
                    });
                }
                Ok(Expr::Call(function, args))
            }
            Some(Token::Sym(c)) => self.error(format!("unexpected '{c}'")),
            None => self.error("unexpected end of expression"),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser {
        tokens: tokenize(src)?,
        pos: 0,
        end: src.len(),
    };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return p.error("trailing input");
    }
    Ok(e)
}

impl Expr {
    pub fn eval(&self, ctx: &PrecisionContext) -> Result<Float> {
        let prec = ctx.prec();
        Ok(match self {
            Expr::Number(text) => {
                let parsed = Float::parse(text).map_err(|e| Error::Parse {
                    pos: 0,
                    msg: format!("bad number '{text}': {e}"),
                })?;
                Float::with_val(prec, parsed)
            }
            Expr::Constant(c) => {
                let k = PaperConstants::new(ctx);
                match c {
                    ConstantName::Pi => k.pi,
                    ConstantName::Phi7 => k.phi7,
                    ConstantName::ThetaPlus => k.theta_plus,
                    ConstantName::OmegaPlus => k.omega_plus,
                }
            }
            Expr::Neg(e) => -e.eval(ctx)?,
            Expr::Binary(op, a, b) => {
                let (a, b) = (a.eval(ctx)?, b.eval(ctx)?);
                match op {
                    Op::Add => a + b,
                    Op::Sub => a - b,
                    Op::Mul => a * b,
                    Op::Div => {
                        if b.is_zero() {
                            return Err(Error::Domain("division by zero".into()));
                        }
                        a / b
                    }
                }
            }
            Expr::Call(f, args) => {
                let x = args[0].eval(ctx)?;
                match f {
                    Function::Sqrt => {
                        if x < 0 {
                            return Err(Error::Domain("sqrt of a negative number".into()));
                        }
                        x.sqrt()
                    }
                    Function::Ln => {
                        if x <= 0 {
                            return Err(Error::Domain("ln of a non-positive number".into()));
                        }
                        x.ln()
                    }
                    Function::Cl2 => cl2_value(&x, ctx)?,
                    Function::Zeta => hurwitz_zeta(&x, &args[1].eval(ctx)?, ctx)?,
                }
            }
            Expr::LSeries(d, s) => dirichlet_l(*d, &s.eval(ctx)?, ctx)?.value,
        })
    }
}

/// Parses and evaluates `src` at `ctx`.
pub fn evaluate(src: &str, ctx: &PrecisionContext) -> Result<Float> {
    parse(src)?.eval(ctx)
}
