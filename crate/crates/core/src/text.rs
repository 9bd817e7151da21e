//! Parsing and formatting of polynomial expressions.
//!
//! The grammar is shared with the script language: integer and `a/b`
//! rational literals, variables, `+ - * ^` with `^` binding tighter than
//! `*` tighter than `+`/`-`, and parentheses. Implicit multiplication is
//! not part of the grammar. Variable names starting with `#` are reserved
//! for internally generated auxiliaries and rejected, except for the
//! `#inv(g)` form which glue blocks use to name the inverse variable of a
//! localization.


use crate::error::{ParseError, ParseErrorKind};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::scalar::Coefficient;

/// Lets `#inv(g)` refer to the inverse variable of a localized ring.
pub struct InverseHook<'a, C> {
    /// Index of the inverse variable in the ring being parsed into.
    pub var_index: usize,
    /// The element the ring inverts; the argument of `#inv` must equal it.
    pub of: &'a Polynomial<C>,
}

pub fn parse_polynomial<C: Coefficient>(
    text: &str,
    vars: &[String],
) -> Result<Polynomial<C>, ParseError> {
    parse_polynomial_with(text, vars, None)
}

pub fn parse_polynomial_with<C: Coefficient>(
    text: &str,
    vars: &[String],
    hook: Option<&InverseHook<'_, C>>,
) -> Result<Polynomial<C>, ParseError> {
    let mut p = Parser {
        text,
        bytes: text.as_bytes(),
        pos: 0,
        vars,
        hook,
    };
    p.skip_ws();
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(ParseError::syntax(p.pos, "unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a, C> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    vars: &'a [String],
    hook: Option<&'a InverseHook<'a, C>>,
}

impl<'a, C: Coefficient> Parser<'a, C> {
    fn arity(&self) -> usize {
        self.vars.len()
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial<C>, ParseError> {
        self.skip_ws();
        let mut negated = false;
        if self.eat(b'-') {
            negated = true;
        } else {
            self.eat(b'+');
        }
        let mut acc = self.term()?;
        if negated {
            acc = acc.negate();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.try_add(&t).expect("parser keeps one arity");
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.try_sub(&t).expect("parser keeps one arity");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<C>, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                let f = self.factor()?;
                acc = acc.try_mul(&f).expect("parser keeps one arity");
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial<C>, ParseError> {
        let base = self.atom()?;
        self.skip_ws();
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.take_digits();
            if digits.is_empty() {
                return Err(ParseError::syntax(start, "expected integer exponent"));
            }
            let e: u32 = digits
                .parse()
                .map_err(|_| ParseError::syntax(start, "exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<C>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            None => Err(ParseError::syntax(start, "expected expression")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if !self.eat(b')') {
                    return Err(ParseError::syntax(self.pos, "expected `)`"));
                }
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => self.number(),
            Some(b'#') => self.reserved(),
            Some(b) if b == b'_' || b.is_ascii_alphabetic() => {
                let name = self.take_ident();
                match self.vars.iter().position(|v| v == name) {
                    Some(i) => Ok(Polynomial::var(self.arity(), i)),
                    None => Err(ParseError {
                        offset: start,
                        kind: ParseErrorKind::UnknownVariable(name.to_string()),
                    }),
                }
            }
            Some(_) => Err(ParseError::syntax(start, "expected expression")),
        }
    }

    fn number(&mut self) -> Result<Polynomial<C>, ParseError> {
        let start = self.pos;
        let numer = self.take_digits().to_string();
        let n = C::from_decimal(&numer)
            .ok_or_else(|| ParseError::syntax(start, "bad integer literal"))?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let dstart = self.pos;
            let denom = self.take_digits().to_string();
            if denom.is_empty() {
                return Err(ParseError::syntax(dstart, "expected denominator"));
            }
            let d = C::from_decimal(&denom)
                .ok_or_else(|| ParseError::syntax(dstart, "bad integer literal"))?;
            if d.is_zero() {
                return Err(ParseError {
                    offset: dstart,
                    kind: ParseErrorKind::ZeroDenominator,
                });
            }
            return Ok(Polynomial::constant(self.arity(), n / d));
        }
        Ok(Polynomial::constant(self.arity(), n))
    }

    fn reserved(&mut self) -> Result<Polynomial<C>, ParseError> {
        let start = self.pos;
        self.pos += 1; // '#'
        let name = self.take_ident().to_string();
        if name == "inv" && self.peek() == Some(b'(') {
            if let Some(hook) = self.hook {
                self.pos += 1;
                let inner: Polynomial<C> = {
                    let mut sub = Parser {
                        text: self.text,
                        bytes: self.bytes,
                        pos: self.pos,
                        vars: self.vars,
                        hook: None,
                    };
                    sub.skip_ws();
                    let p = sub.expr()?;
                    self.pos = sub.pos;
                    p
                };
                self.skip_ws();
                if !self.eat(b')') {
                    return Err(ParseError::syntax(self.pos, "expected `)`"));
                }
                if &inner != hook.of {
                    return Err(ParseError::syntax(
                        start,
                        "argument of #inv must be the glueing element",
                    ));
                }
                return Ok(Polynomial::var(self.arity(), hook.var_index));
            }
        }
        Err(ParseError {
            offset: start,
            kind: ParseErrorKind::ReservedVariable(format!("#{name}")),
        })
    }

    fn take_digits(&mut self) -> &'a str {
        let start = self.pos;
        while self
            .peek()
            .map(|b| b.is_ascii_digit())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn take_ident(&mut self) -> &'a str {
        let start = self.pos;
        while self
            .peek()
            .map(|b| b == b'_' || b.is_ascii_alphanumeric())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }
}

/// Render a polynomial with terms descending under `ord`, coefficients in
/// lowest terms. `parse(format(f))` recovers `f` exactly.
pub fn format_polynomial<C: Coefficient>(
    f: &Polynomial<C>,
    names: &[String],
    ord: MonomialOrder,
) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in f.terms_desc(ord).into_iter().enumerate() {
        let negative = c < C::zero();
        let mag = if negative { -c } else { c };
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mono = if m.is_one() {
            None
        } else {
            let parts: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{}", names[i], e)
                    }
                })
                .collect();
            Some(parts.join("*"))
        };
        match mono {
            None => out.push_str(&mag.to_string()),
            Some(mono) => {
                if mag.is_one() {
                    out.push_str(&mono);
                } else {
                    out.push_str(&format!("{}*{}", mag, mono));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    type P = Polynomial<Rational>;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn parse(text: &str) -> Result<P, ParseError> {
        parse_polynomial(text, &vars(&["x", "y"]))
    }

    #[test]
    fn parses_rational_coefficients() {
        // x^2 - 2/3*y
        let f = parse("x^2 - 2/3*y").unwrap();
        let expected = &P::var(2, 0).pow(2) - &P::var(2, 1).scale(&rat(2, 3));
        assert_eq!(f, expected);
    }

    #[test]
    fn reports_position_of_syntax_errors() {
        let err = parse("x + ").unwrap_err();
        assert_eq!(err.offset, 4);
        assert!(matches!(err.kind, ParseErrorKind::Syntax(_)));
    }

    #[test]
    fn unknown_variable() {
        let err = parse("q").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownVariable("q".to_string()));
    }

    #[test]
    fn reserved_prefix_rejected() {
        let err = parse("x + #0").unwrap_err();
        assert_eq!(
            err.kind,
            ParseErrorKind::ReservedVariable("#0".to_string())
        );
    }

    #[test]
    fn zero_denominator_rejected() {
        let err = parse("1/0").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::ZeroDenominator);
    }

    #[test]
    fn parentheses_and_powers() {
        let f = parse("(x + 1)^2").unwrap();
        let expected = parse("x^2 + 2*x + 1").unwrap();
        assert_eq!(f, expected);
    }

    #[test]
    fn formats_canonically() {
        let names = vars(&["x", "y"]);
        let f = parse("x^2 - y").unwrap();
        assert_eq!(format_polynomial(&f, &names, MonomialOrder::Lex), "x^2 - y");
        assert_eq!(format_polynomial(&P::zero(2), &names, MonomialOrder::Lex), "0");
        let g = parse("-1/2*x*y^2 + 3").unwrap();
        assert_eq!(
            format_polynomial(&g, &names, MonomialOrder::GrevLex),
            "-1/2*x*y^2 + 3"
        );
    }

    #[test]
    fn inverse_hook() {
        let names = vars(&["v", "#0"]);
        let v: P = P::var(2, 0);
        let hook = InverseHook {
            var_index: 1,
            of: &v,
        };
        let f = parse_polynomial_with("2*#inv(v) - 1", &names, Some(&hook)).unwrap();
        let expected = &P::var(2, 1).scale(&rat(2, 1)) - &P::one(2);
        assert_eq!(f, expected);
        // wrong argument
        let err =
            parse_polynomial_with::<Rational>("#inv(v + 1)", &names, Some(&hook)).unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Syntax(_)));
        // without the hook `#inv` is just a reserved name
        let err = parse_polynomial::<Rational>("#inv(v)", &names).unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::ReservedVariable(_)));
    }
}
