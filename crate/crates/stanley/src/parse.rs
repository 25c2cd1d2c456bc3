//! Parser for the ideal text format:
//!
//! ```text
//! # squarefree example
//! ring 3;
//! vars a, b, c;     # optional renaming, defaults to x1..xn
//! a*b; b*c^2;
//! ```
//!
//! Statements end with `;`, generators are `*`-products of `name` or
//! `name^k` factors with k a positive integer, `#` starts a comment, and
//! whitespace is insignificant. Duplicate generators merge (set semantics)
//! and the generator list is minimalized on construction.

use crate::error::Error;
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::ring::PolyRing;
use num_bigint::BigUint;
use num_traits::Zero;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Number(BigUint),
    Semi,
    Star,
    Caret,
    Comma,
    Minus,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

fn lex(text: &str) -> Result<Vec<Spanned>, Error> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let bump = |c: char, line: &mut usize, col: &mut usize| {
            if c == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
        };
        match c {
            '#' => {
                while let Some(&c) = chars.peek() {
                    chars.next();
                    bump(c, &mut line, &mut col);
                    if c == '\n' {
                        break;
                    }
                }
            }
            c if c.is_whitespace() => {
                chars.next();
                bump(c, &mut line, &mut col);
            }
            ';' | '*' | '^' | ',' | '-' => {
                chars.next();
                bump(c, &mut line, &mut col);
                let tok = match c {
                    ';' => Tok::Semi,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    ',' => Tok::Comma,
                    _ => Tok::Minus,
                };
                out.push(Spanned { tok, line: tl, col: tc });
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        chars.next();
                        bump(c, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                let value = digits
                    .parse::<BigUint>()
                    .expect("digit run parses as BigUint");
                out.push(Spanned { tok: Tok::Number(value), line: tl, col: tc });
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' {
                        name.push(c);
                        chars.next();
                        bump(c, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                out.push(Spanned { tok: Tok::Ident(name), line: tl, col: tc });
            }
            other => {
                return Err(err(tl, tc, format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map(|t| (t.line, t.col)).unwrap_or(self.end)
    }

    fn expect_semi(&mut self, what: &str) -> Result<(), Error> {
        let (l, c) = self.here();
        match self.next() {
            Some(Spanned { tok: Tok::Semi, .. }) => Ok(()),
            _ => Err(err(l, c, format!("expected `;` after {what}"))),
        }
    }

    fn expect_number(&mut self, what: &str) -> Result<(BigUint, usize, usize), Error> {
        let (l, c) = self.here();
        match self.next() {
            Some(Spanned { tok: Tok::Number(v), line, col }) => Ok((v, line, col)),
            Some(Spanned { tok: Tok::Minus, line, col }) => {
                Err(err(line, col, format!("negative {what} not allowed")))
            }
            _ => Err(err(l, c, format!("expected {what}"))),
        }
    }
}

/// Parse the ideal text format into a `MonomialIdeal` with the default
/// (identity) variable order.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal, Error> {
    let toks = lex(text)?;
    let end = toks
        .last()
        .map(|t| (t.line, t.col + 1))
        .unwrap_or((1, 1));
    let mut p = Parser { toks, pos: 0, end };

    // ring <n>;
    let (l, c) = p.here();
    match p.next() {
        Some(Spanned { tok: Tok::Ident(kw), .. }) if kw == "ring" => {}
        _ => return Err(err(l, c, "input must start with `ring <n>;`")),
    }
    let (nval, nl, nc) = p.expect_number("ring size")?;
    if nval.is_zero() {
        return Err(err(nl, nc, "ring must have at least one variable"));
    }
    let n: usize = nval
        .try_into()
        .map_err(|_| err(nl, nc, "ring size too large"))?;
    p.expect_semi("ring size")?;

    // optional vars a, b, c;
    let mut ring = PolyRing::new(n)?;
    if let Some(Spanned { tok: Tok::Ident(kw), .. }) = p.peek() {
        if kw == "vars" {
            let vars_pos = p.here();
            p.next();
            let mut names = Vec::new();
            loop {
                let (l, c) = p.here();
                match p.next() {
                    Some(Spanned { tok: Tok::Ident(name), .. }) => names.push(name),
                    _ => return Err(err(l, c, "expected a variable name")),
                }
                let (l, c) = p.here();
                match p.next() {
                    Some(Spanned { tok: Tok::Comma, .. }) => continue,
                    Some(Spanned { tok: Tok::Semi, .. }) => break,
                    _ => return Err(err(l, c, "expected `,` or `;` in vars list")),
                }
            }
            if names.len() != n {
                return Err(err(
                    vars_pos.0,
                    vars_pos.1,
                    format!("vars lists {} names for {} variables", names.len(), n),
                ));
            }
            ring = PolyRing::with_names(names).map_err(|e| match e {
                Error::InvalidRing(msg) => err(vars_pos.0, vars_pos.1, msg),
                other => other,
            })?;
        }
    }

    let index_of: HashMap<&str, usize> = ring
        .names()
        .iter()
        .enumerate()
        .map(|(j, name)| (name.as_str(), j))
        .collect();

    // generators, one per `;`-terminated statement
    let mut gens = Vec::new();
    while p.peek().is_some() {
        let mut exponent = Exponent::zeros(n);
        loop {
            let (l, c) = p.here();
            let name = match p.next() {
                Some(Spanned { tok: Tok::Ident(name), .. }) => name,
                Some(Spanned { tok: Tok::Number(_), .. }) => {
                    return Err(err(l, c, "expected a variable name, not a number"));
                }
                _ => return Err(err(l, c, "expected a variable name")),
            };
            let var = *index_of
                .get(name.as_str())
                .ok_or_else(|| err(l, c, format!("unknown variable name `{name}`")))?;
            let mut k = BigUint::from(1u32);
            if let Some(Spanned { tok: Tok::Caret, .. }) = p.peek() {
                p.next();
                let (kval, kl, kc) = p.expect_number("exponent")?;
                if kval.is_zero() {
                    return Err(err(kl, kc, "exponent must be positive"));
                }
                k = kval;
            }
            // repeated factors multiply, i.e. exponents add
            exponent = exponent.with_coord(var, exponent.coord(var) + &k);
            let (l, c) = p.here();
            match p.next() {
                Some(Spanned { tok: Tok::Star, .. }) => continue,
                Some(Spanned { tok: Tok::Semi, .. }) => break,
                _ => return Err(err(l, c, "expected `*` or `;` after a factor")),
            }
        }
        gens.push(exponent);
    }

    MonomialIdeal::new(ring, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_basic_example() {
        let i = parse_ideal("ring 3;\nx1*x2; x2*x3^2;\n").unwrap();
        assert_eq!(i.ring().n(), 3);
        assert_eq!(
            i.gens(),
            &[Exponent::from_u64s(&[0, 1, 2]), Exponent::from_u64s(&[1, 1, 0])]
        );
    }

    #[test]
    fn parses_custom_names_and_comments() {
        let text = "# a squarefree ideal\nring 3;\nvars a, b, c;\na*b; b*c; # gens\n";
        let i = parse_ideal(text).unwrap();
        assert_eq!(i.ring().names(), &["a", "b", "c"]);
        assert_eq!(
            i.gens(),
            &[Exponent::from_u64s(&[0, 1, 1]), Exponent::from_u64s(&[1, 1, 0])]
        );
    }

    #[test]
    fn repeated_factors_accumulate() {
        let i = parse_ideal("ring 2; x1*x1*x2^2;").unwrap();
        assert_eq!(i.gens(), &[Exponent::from_u64s(&[2, 2])]);
    }

    #[test]
    fn duplicate_generators_merge() {
        let i = parse_ideal("ring 2; x1*x2; x1*x2;").unwrap();
        assert_eq!(i.num_gens(), 1);
    }

    #[test]
    fn non_minimal_generators_minimalize() {
        let i = parse_ideal("ring 2; x1; x1^2; x1^3;").unwrap();
        assert_eq!(i.gens(), &[Exponent::from_u64s(&[1, 0])]);
    }

    #[test]
    fn header_only_is_the_zero_ideal() {
        let i = parse_ideal("ring 4;").unwrap();
        assert!(i.is_zero());
        assert_eq!(i.ring().n(), 4);
    }

    #[test]
    fn error_positions_point_at_the_problem() {
        let e = parse_ideal("ring 2;\nx1*x3;").unwrap_err();
        match e {
            Error::Parse { line, col, msg } => {
                assert_eq!((line, col), (2, 4));
                assert!(msg.contains("unknown variable name `x3`"), "{msg}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn negative_exponent_is_rejected() {
        let e = parse_ideal("ring 2; x1^-2;").unwrap_err();
        match e {
            Error::Parse { msg, .. } => assert!(msg.contains("negative exponent"), "{msg}"),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn zero_exponent_is_rejected() {
        let e = parse_ideal("ring 2; x1^0;").unwrap_err();
        match e {
            Error::Parse { msg, .. } => assert!(msg.contains("positive"), "{msg}"),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn ring_zero_is_rejected() {
        assert!(parse_ideal("ring 0;").is_err());
    }

    #[test]
    fn missing_semicolon_is_a_syntax_error() {
        assert!(parse_ideal("ring 2; x1*x2").is_err());
        assert!(parse_ideal("ring 2").is_err());
    }

    #[test]
    fn wrong_vars_count_is_rejected() {
        assert!(parse_ideal("ring 3; vars a, b;").is_err());
    }

    #[test]
    fn big_exponents_survive() {
        let i = parse_ideal("ring 1; x1^123456789012345678901234567890;").unwrap();
        let expected: BigUint = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(i.gens()[0].coord(0), &expected);
    }
}
