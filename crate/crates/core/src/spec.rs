//! The ring-spec language.
//!
//! ```text
//! spec := "Zn:" INT
//!       | "prod(" spec "," spec ")"
//!       | "polyq:" INT ":" INT ("," INT)*
//!       | "quot(" spec ";" INT ("," INT)* ")"
//! ```
//!
//! Whitespace between tokens is ignored. `polyq` coefficients are listed
//! constant term first and the modulus must be monic. `quot` generators are
//! element indices of the inner ring (row-major pair index for products).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ideal::{generate_ideal, quotient_ring};
use crate::ring::{
    build_poly_quotient_capped, build_zn_capped, direct_product_capped, is_prime, validate_poly,
    Element, FiniteRing,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Zn(u64),
    Prod(Box<RingSpec>, Box<RingSpec>),
    Polyq {
        p: u64,
        coeffs: Vec<u64>,
    },
    Quot {
        base: Box<RingSpec>,
        gens: Vec<Element>,
    },
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join<T: ToString>(xs: &[T]) -> String {
            xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
        }
        match self {
            RingSpec::Zn(n) => write!(f, "Zn:{n}"),
            RingSpec::Prod(a, b) => write!(f, "prod({a},{b})"),
            RingSpec::Polyq { p, coeffs } => write!(f, "polyq:{p}:{}", join(coeffs)),
            RingSpec::Quot { base, gens } => write!(f, "quot({base};{})", join(gens)),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_ring_spec(s)
    }
}

impl RingSpec {
    /// Builds the ring, refusing any intermediate ring above `max_order`.
    pub fn build(&self, max_order: usize) -> Result<FiniteRing> {
        match self {
            RingSpec::Zn(n) => build_zn_capped(*n, max_order),
            RingSpec::Polyq { p, coeffs } => build_poly_quotient_capped(*p, coeffs, max_order),
            RingSpec::Prod(a, b) => {
                let a = a.build(max_order)?;
                let b = b.build(max_order)?;
                direct_product_capped(&a, &b, max_order)
            }
            RingSpec::Quot { base, gens } => {
                let ring = base.build(max_order)?;
                let ideal = generate_ideal(&ring, gens)?;
                let q = quotient_ring(&ring, &ideal)?;
                Ok(q.ring.with_spec(self.to_string()))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok<'a> {
    Word(&'a str),
    Int(u64),
    Punct(char),
    End,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    /// Returns the next token and its byte offset without consuming it.
    fn peek(&mut self) -> Result<(Tok<'a>, usize, usize)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let Some(c) = rest.chars().next() else {
            return Ok((Tok::End, start, start));
        };
        if c.is_ascii_digit() {
            let len = rest
                .find(|c: char| !c.is_ascii_digit())
                .unwrap_or(rest.len());
            let text = &rest[..len];
            let value = text.parse::<u64>().map_err(|_| Error::Parse {
                offset: start,
                message: format!("integer `{text}` is too large"),
            })?;
            return Ok((Tok::Int(value), start, start + len));
        }
        if c.is_ascii_alphabetic() {
            let len = rest
                .find(|c: char| !c.is_ascii_alphabetic())
                .unwrap_or(rest.len());
            return Ok((Tok::Word(&rest[..len]), start, start + len));
        }
        if "():,;".contains(c) {
            return Ok((Tok::Punct(c), start, start + 1));
        }
        Err(Error::Parse {
            offset: start,
            message: format!("unexpected character `{c}`"),
        })
    }

    fn next(&mut self) -> Result<(Tok<'a>, usize)> {
        let (tok, start, end) = self.peek()?;
        self.pos = end;
        Ok((tok, start))
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.next()? {
            (Tok::Punct(c), _) if c == want => Ok(()),
            (tok, offset) => Err(Error::Parse {
                offset,
                message: format!("expected `{want}`, found {}", describe(tok)),
            }),
        }
    }

    fn int(&mut self) -> Result<(u64, usize)> {
        match self.next()? {
            (Tok::Int(v), offset) => Ok((v, offset)),
            (tok, offset) => Err(Error::Parse {
                offset,
                message: format!("expected an integer, found {}", describe(tok)),
            }),
        }
    }

    fn int_list(&mut self) -> Result<Vec<(u64, usize)>> {
        let mut out = vec![self.int()?];
        // inside `prod(...)` a comma may instead separate the next factor
        while let (Tok::Punct(','), _, after_comma) = self.peek()? {
            let saved = self.pos;
            self.pos = after_comma;
            if let (Tok::Int(_), _, _) = self.peek()? {
                out.push(self.int()?);
            } else {
                self.pos = saved;
                break;
            }
        }
        Ok(out)
    }

    fn spec(&mut self) -> Result<RingSpec> {
        let (tok, offset) = self.next()?;
        let word = match tok {
            Tok::Word(w) => w,
            other => {
                return Err(Error::Parse {
                    offset,
                    message: format!("expected a ring constructor, found {}", describe(other)),
                })
            }
        };
        match word {
            "Zn" => {
                self.expect(':')?;
                let (n, at) = self.int()?;
                if n < 2 {
                    return Err(Error::Parse {
                        offset: at,
                        message: format!("ring order `{n}` must be at least 2"),
                    });
                }
                Ok(RingSpec::Zn(n))
            }
            "prod" => {
                self.expect('(')?;
                let a = self.spec()?;
                self.expect(',')?;
                let b = self.spec()?;
                self.expect(')')?;
                Ok(RingSpec::Prod(Box::new(a), Box::new(b)))
            }
            "polyq" => {
                self.expect(':')?;
                let (p, p_at) = self.int()?;
                if !is_prime(p) {
                    return Err(Error::Parse {
                        offset: p_at,
                        message: format!("modulus `{p}` is not prime"),
                    });
                }
                self.expect(':')?;
                let list = self.int_list()?;
                let coeffs: Vec<u64> = list.iter().map(|&(c, _)| c).collect();
                if let Err(e) = validate_poly(p, &coeffs) {
                    // point at the offending coefficient where there is one
                    let at = list
                        .iter()
                        .find(|&&(c, _)| c >= p)
                        .map_or(list[list.len() - 1].1, |&(_, at)| at);
                    return Err(Error::Parse {
                        offset: at,
                        message: e.to_string(),
                    });
                }
                Ok(RingSpec::Polyq { p, coeffs })
            }
            "quot" => {
                self.expect('(')?;
                let base = self.spec()?;
                self.expect(';')?;
                let gens = self
                    .int_list()?
                    .into_iter()
                    .map(|(g, _)| g as Element)
                    .collect();
                self.expect(')')?;
                Ok(RingSpec::Quot {
                    base: Box::new(base),
                    gens,
                })
            }
            other => Err(Error::Parse {
                offset,
                message: format!("unknown ring constructor `{other}`"),
            }),
        }
    }
}

fn describe(tok: Tok<'_>) -> String {
    match tok {
        Tok::Word(w) => format!("`{w}`"),
        Tok::Int(v) => format!("`{v}`"),
        Tok::Punct(c) => format!("`{c}`"),
        Tok::End => "end of input".to_string(),
    }
}

pub fn parse_ring_spec(s: &str) -> Result<RingSpec> {
    let mut parser = Parser { src: s, pos: 0 };
    let spec = parser.spec()?;
    match parser.next()? {
        (Tok::End, _) => Ok(spec),
        (tok, offset) => Err(Error::Parse {
            offset,
            message: format!("trailing input starting at {}", describe(tok)),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_each_constructor() {
        assert_eq!(parse_ring_spec("Zn:12").unwrap(), RingSpec::Zn(12));
        assert_eq!(
            parse_ring_spec("prod(Zn:2,Zn:3)").unwrap(),
            RingSpec::Prod(Box::new(RingSpec::Zn(2)), Box::new(RingSpec::Zn(3)))
        );
        assert_eq!(
            parse_ring_spec(" polyq : 2 : 1 , 1 ,1 ").unwrap(),
            RingSpec::Polyq {
                p: 2,
                coeffs: vec![1, 1, 1]
            }
        );
        let q = parse_ring_spec("quot(Zn:12;6)").unwrap();
        assert_eq!(q.to_string(), "quot(Zn:12;6)");
        let ring = q.build(4096).unwrap();
        assert_eq!(ring.order(), 6);
        assert_eq!(ring.spec(), "quot(Zn:12;6)");
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let err = |s: &str| match parse_ring_spec(s) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        };
        assert_eq!(err(""), 0);
        assert_eq!(err("Zn12"), 2);
        assert_eq!(err("prod(Zn:2 Zn:3)"), 10);
        assert_eq!(err("Zn:4 junk"), 5);
        assert_eq!(err("Fq:4"), 0);
        assert_eq!(err("Zn:4$"), 4);
        assert_eq!(err("quot(Zn:4;)"), 10);
    }

    #[test]
    fn semantic_errors_point_at_the_token() {
        match parse_ring_spec("Zn:1") {
            Err(Error::Parse { offset, message }) => {
                assert_eq!(offset, 3);
                assert!(message.contains("`1`"));
            }
            other => panic!("{other:?}"),
        }
        match parse_ring_spec("polyq:4:0,1") {
            Err(Error::Parse { offset, message }) => {
                assert_eq!(offset, 6);
                assert!(message.contains("`4`"));
            }
            other => panic!("{other:?}"),
        }
        match parse_ring_spec("polyq:3:0,2") {
            Err(Error::Parse { offset, message }) => {
                assert_eq!(offset, 10);
                assert!(message.contains("leading"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_ring_spec("polyq:3:7,1"),
            Err(Error::Parse { offset: 8, .. })
        ));
    }

    #[test]
    fn build_errors() {
        let spec = parse_ring_spec("quot(Zn:12;5)").unwrap();
        assert_eq!(spec.build(4096).unwrap_err(), Error::ImproperIdeal);
        let spec = parse_ring_spec("quot(Zn:12;12)").unwrap();
        assert!(matches!(
            spec.build(4096),
            Err(Error::InvalidElement { .. })
        ));
        let spec = parse_ring_spec("prod(Zn:100,Zn:100)").unwrap();
        assert!(matches!(
            spec.build(4096),
            Err(Error::OrderCapExceeded { order: 10000, .. })
        ));
    }

    fn arb_spec() -> impl Strategy<Value = RingSpec> {
        let leaf = prop_oneof![
            (2u64..1000).prop_map(RingSpec::Zn),
            (
                prop::sample::select(vec![2u64, 3, 5, 7]),
                prop::collection::vec(0u64..2, 1..4)
            )
                .prop_map(|(p, mut coeffs)| {
                    coeffs.push(1);
                    RingSpec::Polyq { p, coeffs }
                }),
        ];
        leaf.prop_recursive(3, 12, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| RingSpec::Prod(Box::new(a), Box::new(b))),
                (inner, prop::collection::vec(0usize..50, 1..4)).prop_map(|(base, gens)| {
                    RingSpec::Quot {
                        base: Box::new(base),
                        gens,
                    }
                }),
            ]
        })
    }

    proptest! {
        #[test]
        fn format_then_parse_is_identity(spec in arb_spec()) {
            let text = spec.to_string();
            let parsed = parse_ring_spec(&text).unwrap();
            prop_assert_eq!(&parsed, &spec);
            prop_assert_eq!(parsed.to_string(), text);
        }

        #[test]
        fn whitespace_is_ignored(spec in arb_spec()) {
            let text = spec.to_string();
            let spaced: String = text
                .chars()
                .flat_map(|c| if c.is_ascii_alphanumeric() { vec![c] } else { vec![' ', c, ' '] })
                .collect();
            prop_assert_eq!(parse_ring_spec(&spaced).unwrap(), spec);
        }
    }
}
