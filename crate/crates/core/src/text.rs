//! Text forms for every term family, with position-aware parse errors.
//!
//! * base orders: `fin:3`, `omega`, `omega*`, `lex(<X>,<Y>)`
//! * elements: `5`, or `(a,b)` for lexicographic pairs
//! * exponent-sequence terms: `w(2 1 0)`, empty `w()`
//! * collapsing-system terms: `0`, `W`, `e(x)`, `p(t)`, `s(t1 t2 ...)`, `th(t)`
//! * order terms: atoms `1`, `n:k`, `w`, `w*`, `q` joined by `+`
//!
//! Every `Display` implementation in the crate round-trips through the
//! corresponding parser here.

use thiserror::Error;

use crate::base::{BaseOrder, Element};
use crate::fraisse::{Atom, OrderTerm};
use crate::omega::OmegaTerm;
use crate::theta::ThetaTerm;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("at position {pos}: expected {expected}")]
pub struct ParseError {
    pub pos: usize,
    pub expected: String,
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn err(&self, expected: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.pos,
            expected: expected.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn eat(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(format!("`{c}`")))
        }
    }

    fn try_keyword(&mut self, kw: &str) -> bool {
        if self.rest().starts_with(kw) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        let digits: String = self.rest().chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(self.err("a number"));
        }
        self.pos += digits.len();
        digits.parse().map_err(|_| self.err("a smaller number"))
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.err("end of input"))
        }
    }
}

/// Parses the base-order grammar `fin:N | omega | omega* | lex(X,Y)`.
pub fn parse_base_order(input: &str) -> Result<BaseOrder, ParseError> {
    let mut c = Cursor::new(input);
    let x = base_order(&mut c)?;
    c.finish()?;
    x.validate().map_err(|e| ParseError {
        pos: 0,
        expected: e.to_string(),
    })?;
    Ok(x)
}

fn base_order(c: &mut Cursor) -> Result<BaseOrder, ParseError> {
    c.skip_ws();
    if c.try_keyword("fin:") {
        let n = c.number()?;
        return Ok(BaseOrder::Fin(n as usize));
    }
    if c.try_keyword("omega*") {
        return Ok(BaseOrder::OmegaStar);
    }
    if c.try_keyword("omega") {
        return Ok(BaseOrder::Omega);
    }
    if c.try_keyword("lex(") {
        let l = base_order(c)?;
        c.skip_ws();
        c.eat(',')?;
        let r = base_order(c)?;
        c.skip_ws();
        c.eat(')')?;
        return Ok(BaseOrder::lex(l, r));
    }
    Err(c.err("`fin:N`, `omega`, `omega*` or `lex(X,Y)`"))
}

/// Parses an element code: a natural or a `(left,right)` pair.
pub fn parse_element(input: &str) -> Result<Element, ParseError> {
    let mut c = Cursor::new(input);
    let e = element(&mut c)?;
    c.finish()?;
    Ok(e)
}

fn element(c: &mut Cursor) -> Result<Element, ParseError> {
    c.skip_ws();
    match c.peek() {
        Some('(') => {
            c.eat('(')?;
            let l = element(c)?;
            c.skip_ws();
            c.eat(',')?;
            let r = element(c)?;
            c.skip_ws();
            c.eat(')')?;
            Ok(Element::pair(l, r))
        }
        Some(d) if d.is_ascii_digit() => Ok(Element::Nat(c.number()?)),
        _ => Err(c.err("a natural or `(a,b)`")),
    }
}

/// Parses the exponent-sequence grammar `w(e1 e2 ...)`.
pub fn parse_omega_term(input: &str) -> Result<OmegaTerm, ParseError> {
    let mut c = Cursor::new(input);
    c.skip_ws();
    if !c.try_keyword("w(") {
        return Err(c.err("`w(`"));
    }
    let mut exps = Vec::new();
    loop {
        c.skip_ws();
        if c.peek() == Some(')') {
            c.eat(')')?;
            break;
        }
        exps.push(element(&mut c)?);
    }
    c.finish()?;
    Ok(OmegaTerm::new(exps))
}

/// Parses the collapsing-system grammar
/// `0 | W | e(x) | p(t) | s(t1 t2 ...) | th(t)`.
pub fn parse_theta_term(input: &str) -> Result<ThetaTerm, ParseError> {
    let mut c = Cursor::new(input);
    let t = theta_term(&mut c)?;
    c.finish()?;
    Ok(t)
}

fn theta_term(c: &mut Cursor) -> Result<ThetaTerm, ParseError> {
    c.skip_ws();
    if c.try_keyword("0") {
        return Ok(ThetaTerm::Zero);
    }
    if c.try_keyword("W") {
        return Ok(ThetaTerm::BigOmega);
    }
    if c.try_keyword("e(") {
        let e = element(c)?;
        c.skip_ws();
        c.eat(')')?;
        return Ok(ThetaTerm::eps(e));
    }
    if c.try_keyword("p(") {
        let t = theta_term(c)?;
        c.skip_ws();
        c.eat(')')?;
        return Ok(ThetaTerm::pow(t));
    }
    if c.try_keyword("th(") {
        let t = theta_term(c)?;
        c.skip_ws();
        c.eat(')')?;
        return Ok(ThetaTerm::collapse(t));
    }
    if c.try_keyword("s(") {
        let mut parts = Vec::new();
        loop {
            c.skip_ws();
            if c.peek() == Some(')') {
                c.eat(')')?;
                break;
            }
            parts.push(theta_term(c)?);
        }
        return Ok(ThetaTerm::sum(parts));
    }
    Err(c.err("`0`, `W`, `e(x)`, `p(t)`, `s(...)` or `th(t)`"))
}

/// Parses the order-term grammar: atoms `1`, `n:k`, `w`, `w*`, `q` joined by
/// `+`.
pub fn parse_order_term(input: &str) -> Result<OrderTerm, ParseError> {
    let mut c = Cursor::new(input);
    let mut atoms = Vec::new();
    loop {
        c.skip_ws();
        atoms.push(order_atom(&mut c)?);
        c.skip_ws();
        if c.peek() == Some('+') {
            c.eat('+')?;
        } else {
            break;
        }
    }
    c.finish()?;
    OrderTerm::new(atoms).map_err(|e| ParseError {
        pos: 0,
        expected: e.to_string(),
    })
}

fn order_atom(c: &mut Cursor) -> Result<Atom, ParseError> {
    if c.try_keyword("n:") {
        let k = c.number()?;
        if k == 0 {
            return Err(c.err("a positive run length"));
        }
        return Ok(Atom::Ones(k as usize));
    }
    if c.try_keyword("w*") {
        return Ok(Atom::OmegaStar);
    }
    if c.try_keyword("w") {
        return Ok(Atom::Omega);
    }
    if c.try_keyword("q") {
        return Ok(Atom::Eta);
    }
    if c.try_keyword("1") {
        return Ok(Atom::Ones(1));
    }
    Err(c.err("`1`, `n:k`, `w`, `w*` or `q`"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_order_round_trip() {
        for s in ["fin:3", "omega", "omega*", "lex(fin:2,omega*)", "lex(lex(omega,fin:1),omega*)"] {
            let x = parse_base_order(s).unwrap();
            assert_eq!(x.to_string(), s);
            assert_eq!(parse_base_order(&x.to_string()).unwrap(), x);
        }
    }

    #[test]
    fn base_order_errors_carry_position() {
        let e = parse_base_order("lex(fin:2 omega)").unwrap_err();
        assert_eq!(e.pos, 10);
        assert!(e.expected.contains(','));
        let e = parse_base_order("fen:2").unwrap_err();
        assert_eq!(e.pos, 0);
        // six nested pairs exceed the depth cap
        let deep = "lex(lex(lex(lex(lex(fin:1,fin:1),fin:1),fin:1),fin:1),fin:1)";
        assert!(parse_base_order(deep).is_err());
    }

    #[test]
    fn omega_term_round_trip() {
        for s in ["w()", "w(2 1 0)", "w((1,0) (0,3))"] {
            let t = parse_omega_term(s).unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert!(parse_omega_term("w(1 2").is_err());
        assert!(parse_omega_term("w[1]").is_err());
    }

    #[test]
    fn theta_term_round_trip() {
        for s in ["0", "W", "e(3)", "p(0)", "th(W)", "s(W p(0))", "s(e((1,2)) th(s(W W)))"] {
            let t = parse_theta_term(s).unwrap();
            assert_eq!(t.to_string(), s);
        }
        let e = parse_theta_term("th(Q)").unwrap_err();
        assert_eq!(e.pos, 3);
    }

    #[test]
    fn order_term_round_trip() {
        for s in ["1", "n:3", "w*+n:3+w", "q+w*", "w+1"] {
            let t = parse_order_term(s).unwrap();
            assert_eq!(t.to_string(), s);
        }
        // canonicalization merges adjacent runs, so display may differ
        assert_eq!(parse_order_term("1+1+1").unwrap().to_string(), "n:3");
        let e = parse_order_term("w+*").unwrap_err();
        assert_eq!(e.pos, 2);
        assert!(parse_order_term("").is_err());
        assert!(parse_order_term("n:0").is_err());
    }
}
