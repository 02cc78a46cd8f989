//! Expression grammar shared by the CLI, presentation files and tests.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*'? factor)*      juxtaposition only as `literal ident`
//! factor := atom ('^' ['-'] int)?
//! atom   := rational | ident | '(' expr ')' | '[' expr ',' expr ']'
//! ```

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Number(Rational),
    Ident {
        name: String,
        pos: usize,
    },
    /// Signed summands; `true` marks a subtracted term.
    Sum(Vec<(bool, Expr)>),
    Product(Vec<Expr>),
    Power {
        base: Box<Expr>,
        exp: i64,
        pos: usize,
    },
    Bracket(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    End,
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' | '−' => Some(Tok::Minus),
            '*' | '·' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBrack),
            ']' => Some(Tok::RBrack),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, pos));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            if i + 1 < chars.len() && chars[i].1 == '/' && chars[i + 1].1.is_ascii_digit() {
                i += 1;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
            }
            let end = chars.get(i).map_or(text.len(), |&(p, _)| p);
            let lit = &text[pos..end];
            let value = lit.parse::<Rational>().map_err(|msg| Error::Syntax {
                pos: chars[start].0,
                msg,
            })?;
            out.push((Tok::Num(value), pos));
            continue;
        }
        if is_ident_char(c) {
            while i < chars.len() && is_ident_char(chars[i].1) {
                i += 1;
            }
            let end = chars.get(i).map_or(text.len(), |&(p, _)| p);
            out.push((Tok::Ident(text[pos..end].to_string()), pos));
            continue;
        }
        return Err(Error::Syntax {
            pos,
            msg: format!("unexpected character {c:?}"),
        });
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn error(&self, msg: String) -> Error {
        Error::Syntax {
            pos: self.pos(),
            msg,
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let mut negated = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            terms.push((negated, self.term()?));
            negated = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
        }
        if terms.len() == 1 && !terms[0].0 {
            return Ok(terms.pop().unwrap().1);
        }
        Ok(Expr::Sum(terms))
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    factors.push(self.factor()?);
                }
                Tok::Ident(_) if matches!(factors.last(), Some(Expr::Number(_))) => {
                    factors.push(self.factor()?);
                }
                Tok::Ident(_) | Tok::Num(_) | Tok::LParen | Tok::LBrack => {
                    return Err(self.error("missing '*' between factors".into()));
                }
                _ => break,
            }
        }
        if factors.len() == 1 {
            return Ok(factors.pop().unwrap());
        }
        Ok(Expr::Product(factors))
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let pos = self.pos();
        self.bump();
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let exp = match self.bump() {
            Tok::Num(r) if r.is_integer() => {
                let n: i64 = r.numer().try_into().map_err(|_| Error::Syntax {
                    pos,
                    msg: "exponent too large".into(),
                })?;
                if negative {
                    -n
                } else {
                    n
                }
            }
            _ => {
                return Err(Error::Syntax {
                    pos,
                    msg: "exponent must be an integer".into(),
                })
            }
        };
        Ok(Expr::Power {
            base: Box::new(base),
            exp,
            pos,
        })
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(r) => Ok(Expr::Number(r)),
            Tok::Ident(name) => Ok(Expr::Ident { name, pos }),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::LBrack => {
                let a = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let b = self.expr()?;
                self.expect(Tok::RBrack, "']'")?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b)))
            }
            Tok::End => Err(Error::Syntax {
                pos,
                msg: "unexpected end of input".into(),
            }),
            t => Err(Error::Syntax {
                pos,
                msg: format!("unexpected token {t:?}"),
            }),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error("trailing input".into()));
    }
    Ok(e)
}

/// An algebra that can resolve identifiers and invert some elements, so that
/// expressions can be elaborated into it.
pub trait ExprTarget: Algebra {
    fn symbol(&mut self, name: &str) -> Result<Self::Elem>;
    fn inverse(&mut self, a: &Self::Elem, shown: &str) -> Result<Self::Elem>;
}

pub fn evaluate<T: ExprTarget>(target: &mut T, e: &Expr) -> Result<T::Elem> {
    match e {
        Expr::Number(r) => Ok(target.constant(r)),
        Expr::Ident { name, .. } => target.symbol(name),
        Expr::Sum(terms) => {
            let mut acc = target.zero();
            for (neg, t) in terms {
                let v = evaluate(target, t)?;
                acc = if *neg {
                    target.sub(&acc, &v)
                } else {
                    target.add(&acc, &v)
                };
            }
            Ok(acc)
        }
        Expr::Product(fs) => {
            let mut acc = target.one();
            for f in fs {
                let v = evaluate(target, f)?;
                acc = target.mul(&acc, &v)?;
            }
            Ok(acc)
        }
        Expr::Power { base, exp, .. } => {
            let b = evaluate(target, base)?;
            let b = if *exp < 0 {
                target.inverse(&b, &describe(base))?
            } else {
                b
            };
            let n = u32::try_from(exp.unsigned_abs()).map_err(|_| Error::Syntax {
                pos: 0,
                msg: "exponent too large".into(),
            })?;
            target.pow(&b, n)
        }
        Expr::Bracket(a, b) => {
            let a = evaluate(target, a)?;
            let b = evaluate(target, b)?;
            target.commutator(&a, &b)
        }
    }
}

/// Short human-readable rendering of an expression, for error messages.
pub fn describe(e: &Expr) -> String {
    match e {
        Expr::Number(r) => r.to_string(),
        Expr::Ident { name, .. } => name.clone(),
        Expr::Sum(terms) => {
            let mut s = String::from("(");
            for (i, (neg, t)) in terms.iter().enumerate() {
                if *neg {
                    s.push_str(if i == 0 { "-" } else { " - " });
                } else if i > 0 {
                    s.push_str(" + ");
                }
                s.push_str(&describe(t));
            }
            s.push(')');
            s
        }
        Expr::Product(fs) => fs.iter().map(describe).collect::<Vec<_>>().join("*"),
        Expr::Power { base, exp, .. } => format!("{}^{exp}", describe(base)),
        Expr::Bracket(a, b) => format!("[{},{}]", describe(a), describe(b)),
    }
}

/// Canonical spelling of generator aliases (`ζ` is `zeta`, and so on).
pub fn canonical_name(name: &str) -> &str {
    match name {
        "ζ" => "zeta",
        "ω" => "omega",
        "θ" => "theta",
        "α" => "alpha",
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Scalars;
    use num_traits::{One, Zero};

    struct Calc;

    impl Algebra for Calc {
        type Elem = Rational;
        fn zero(&self) -> Rational {
            Rational::zero()
        }
        fn one(&self) -> Rational {
            Rational::one()
        }
        fn add(&self, a: &Rational, b: &Rational) -> Rational {
            a + b
        }
        fn scale(&self, a: &Rational, c: &Rational) -> Rational {
            a * c
        }
        fn mul(&mut self, a: &Rational, b: &Rational) -> Result<Rational> {
            Scalars.mul(a, b)
        }
        fn is_zero(&self, a: &Rational) -> bool {
            a.is_zero()
        }
        fn render(&self, a: &Rational) -> String {
            a.to_string()
        }
    }

    impl ExprTarget for Calc {
        fn symbol(&mut self, name: &str) -> Result<Rational> {
            match name {
                "a" => Ok(Rational::integer(3)),
                "b" => Ok(Rational::integer(5)),
                _ => Err(Error::UnknownGenerator(name.into())),
            }
        }
        fn inverse(&mut self, a: &Rational, shown: &str) -> Result<Rational> {
            if a.is_zero() {
                Err(Error::NegativePowerNotInvertible(shown.into()))
            } else {
                Ok(a.recip())
            }
        }
    }

    fn calc(s: &str) -> Result<Rational> {
        evaluate(&mut Calc, &parse_expr(s)?)
    }

    #[test]
    fn precedence_and_literals() {
        assert_eq!(calc("1/2*a + b^2").unwrap(), Rational::new(53, 2));
        assert!(calc("-a - -b").is_err());
        assert_eq!(calc("-(a - b)").unwrap(), Rational::integer(2));
        assert_eq!(calc("2a").unwrap(), Rational::integer(6));
        assert_eq!(calc("a^-2").unwrap(), Rational::new(1, 9));
        assert_eq!(calc("[a,b]").unwrap(), Rational::zero());
        assert_eq!(calc("  3/4 ").unwrap(), Rational::new(3, 4));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match calc("a + * b") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(calc("a b"), Err(Error::Syntax { .. })));
        assert!(matches!(calc("(a"), Err(Error::Syntax { .. })));
        assert!(matches!(calc("a^x"), Err(Error::Syntax { .. })));
        assert!(matches!(calc("c"), Err(Error::UnknownGenerator(_))));
        assert!(matches!(
            calc("(a-a)^-1"),
            Err(Error::NegativePowerNotInvertible(_))
        ));
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(canonical_name("ζ"), "zeta");
        let e = parse_expr("ζ*v").unwrap();
        assert!(matches!(e, Expr::Product(_)));
    }
}
