//! Recursive-descent parser for cubic polynomials in `x`.
//!
//! ```text
//! poly  := ["+"|"-"] term (("+"|"-") term)*
//! term  := [coeff] ["*"] "x" ["^" exp] | coeff
//! coeff := int ["/" int] | decimal
//! ```
//!
//! A bare `p,q,r` triple is also accepted. Decimal literals make the result
//! numeric; integer and fraction literals keep it exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rcp::{Cubic, Real, Scalar};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("polynomial has degree {0}, expected 3")]
    Degree(usize),
    #[error("leading coefficient is zero")]
    ZeroLeadingCoefficient,
    #[error("constant term is zero")]
    ZeroConstantTerm,
}

/// A parsed cubic before and after dividing out the leading coefficient.
#[derive(Clone, Debug)]
pub struct ParsedPolynomial {
    /// Coefficients indexed by degree, as written.
    pub coefficients: [Scalar; 4],
    /// The leading coefficient that was divided out.
    pub factor: Scalar,
    pub cubic: Cubic,
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    at: usize,
    text: &'a str,
    prec: usize,
    saw_cubic: bool,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, prec: usize) -> Self {
        Parser {
            chars: text.char_indices().collect(),
            at: 0,
            text,
            prec,
            saw_cubic: false,
        }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.text.len(), |&(i, _)| i)
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.get(self.at), Some((_, c)) if c.is_whitespace()) {
            self.at += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn bump(&mut self) {
        self.at += 1;
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn digits(&mut self) -> String {
        let mut out = String::new();
        while let Some(&(_, c)) = self.chars.get(self.at) {
            if c.is_ascii_digit() {
                out.push(c);
                self.at += 1;
            } else {
                break;
            }
        }
        out
    }

    /// `int ["/" int] | decimal`, returning `None` when no number starts here.
    fn coeff(&mut self) -> Result<Option<Scalar>, ParseError> {
        let start_digit = matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '.');
        if !start_digit {
            return Ok(None);
        }
        let int_part = self.digits();
        if matches!(self.chars.get(self.at), Some((_, '.'))) {
            self.bump();
            let frac = self.digits();
            if int_part.is_empty() && frac.is_empty() {
                return self.error("expected digits around '.'");
            }
            let num: BigInt = format!("{int_part}{frac}").parse().unwrap_or_default();
            let den = BigInt::from(10u32).pow(frac.len() as u32);
            let exact = BigRational::new(num, den);
            return Ok(Some(Scalar::Approx(Real::from_rational(&exact, self.prec))));
        }
        let num: BigInt = int_part.parse().expect("digits");
        if self.peek() == Some('/') {
            self.bump();
            self.skip_ws();
            let den = self.digits();
            if den.is_empty() {
                return self.error("expected denominator");
            }
            let den: BigInt = den.parse().expect("digits");
            if den.is_zero() {
                return self.error("zero denominator");
            }
            return Ok(Some(Scalar::Exact(BigRational::new(num, den))));
        }
        Ok(Some(Scalar::Exact(BigRational::from_integer(num))))
    }

    /// One term, returning `(degree, coefficient)`.
    fn term(&mut self) -> Result<(usize, Scalar), ParseError> {
        let coeff = self.coeff()?;
        if self.peek() == Some('*') {
            if coeff.is_none() {
                return self.error("'*' without a coefficient");
            }
            self.bump();
            if self.peek() != Some('x') {
                return self.error("expected 'x' after '*'");
            }
        }
        if self.peek() != Some('x') {
            return match coeff {
                Some(c) => Ok((0, c)),
                None => self.error("expected a coefficient or 'x'"),
            };
        }
        self.bump();
        let coeff = coeff.unwrap_or_else(|| Scalar::int(1));
        if self.peek() != Some('^') {
            return Ok((1, coeff));
        }
        self.bump();
        self.skip_ws();
        let exp_pos = self.pos();
        let exp = self.digits();
        match exp.parse::<usize>() {
            Ok(e @ 1..=3) => Ok((e, coeff)),
            Ok(0) => Err(ParseError::Syntax {
                pos: exp_pos,
                msg: "exponent must be 1, 2 or 3".into(),
            }),
            Ok(e) => Err(ParseError::Degree(e)),
            Err(_) => Err(ParseError::Syntax {
                pos: exp_pos,
                msg: "expected an exponent".into(),
            }),
        }
    }

    fn poly(&mut self) -> Result<[Scalar; 4], ParseError> {
        let mut coeffs: [Scalar; 4] = std::array::from_fn(|_| Scalar::int(0));
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some('+') => {
                    self.bump();
                    false
                }
                Some('-') => {
                    self.bump();
                    true
                }
                None if !first => break,
                _ if first => false,
                Some(c) => return self.error(format!("unexpected '{c}'")),
                None => break,
            };
            first = false;
            let (deg, c) = self.term()?;
            self.saw_cubic |= deg == 3;
            let c = if negative { -c } else { c };
            coeffs[deg] = &coeffs[deg] + &c;
        }
        Ok(coeffs)
    }

    /// `[sign] coeff` for the triple form.
    fn signed_coeff(&mut self) -> Result<Scalar, ParseError> {
        let negative = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            _ => false,
        };
        match self.coeff()? {
            Some(c) if negative => Ok(-c),
            Some(c) => Ok(c),
            None => self.error("expected a number"),
        }
    }
}

/// Parses a single signed number such as `-3/2` or `0.25`.
pub fn parse_value(text: &str, prec: usize) -> Result<Scalar, ParseError> {
    let mut p = Parser::new(text, prec);
    let v = p.signed_coeff()?;
    if p.peek().is_some() {
        return p.error("trailing input");
    }
    Ok(v)
}

fn parse_triple(text: &str, prec: usize) -> Result<[Scalar; 4], ParseError> {
    let mut p = Parser::new(text, prec);
    let mut out = [
        Scalar::int(1),
        Scalar::int(0),
        Scalar::int(0),
        Scalar::int(0),
    ];
    for k in 0..3 {
        if k > 0 {
            if p.peek() != Some(',') {
                return p.error("expected ','");
            }
            p.bump();
        }
        out[k + 1] = p.signed_coeff()?;
    }
    if p.peek().is_some() {
        return p.error("trailing input");
    }
    // stored as [leading, p, q, r]; reorder to degree index
    let [lead, a, b, c] = out;
    Ok([c, b, a, lead])
}

/// Parses `text` at `prec` bits for any decimal literals.
pub fn parse_polynomial(text: &str, prec: usize) -> Result<ParsedPolynomial, ParseError> {
    let (coefficients, has_cubic_term) = if text.contains(',') {
        (parse_triple(text, prec)?, true)
    } else {
        let mut p = Parser::new(text, prec);
        if p.peek().is_none() {
            return p.error("empty input");
        }
        (p.poly()?, p.saw_cubic)
    };
    let degree = (0..4)
        .rev()
        .find(|&d| !coefficients[d].is_zero())
        .unwrap_or(0);
    if degree != 3 {
        return Err(if has_cubic_term {
            ParseError::ZeroLeadingCoefficient
        } else {
            ParseError::Degree(degree)
        });
    }
    let factor = coefficients[3].clone();
    if coefficients[0].is_zero() {
        return Err(ParseError::ZeroConstantTerm);
    }
    let norm = |c: &Scalar| {
        if factor.is_exact() && factor.as_exact().is_some_and(One::is_one) {
            c.clone()
        } else {
            c / &factor
        }
    };
    let cubic = Cubic::new(
        norm(&coefficients[2]),
        norm(&coefficients[1]),
        norm(&coefficients[0]),
    )
    .map_err(|_| ParseError::ZeroConstantTerm)?;
    Ok(ParsedPolynomial {
        coefficients,
        factor,
        cubic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rcp::numerics::rat;

    fn cubic(text: &str) -> Cubic {
        parse_polynomial(text, 256).unwrap().cubic
    }

    #[test]
    fn examples() {
        assert_eq!(cubic("x^3 - 3x^2 - 6x + 8"), Cubic::from_ints(-3, -6, 8));
        assert_eq!(
            cubic("x^3 + 1/2 x^2 - 1/2 x - 1/8"),
            Cubic::from_rationals(rat(1, 2), rat(-1, 2), rat(-1, 8))
        );
        let p = parse_polynomial("2x^3 + 2x^2 - 4x - 2", 256).unwrap();
        assert_eq!(p.cubic, Cubic::from_ints(1, -2, -1));
        assert_eq!(p.factor, Scalar::int(2));
    }

    #[test]
    fn alternative_spellings() {
        assert_eq!(cubic("8 - 6*x - 3*x^2 + x^3"), Cubic::from_ints(-3, -6, 8));
        assert_eq!(cubic("x^3+x^2-x-x-1"), Cubic::from_ints(1, -2, -1));
        assert_eq!(cubic("-3,-6,8"), Cubic::from_ints(-3, -6, 8));
        assert_eq!(
            cubic(" 1/2 , -1/2, -1/8 "),
            Cubic::from_rationals(rat(1, 2), rat(-1, 2), rat(-1, 8))
        );
        assert_eq!(cubic("-x^3 + 3x^2 + 6x - 8"), Cubic::from_ints(-3, -6, 8));
        assert_eq!(cubic("x^3 - 3x + 1"), Cubic::from_ints(0, -3, 1));
    }

    #[test]
    fn decimals_are_numeric() {
        let c = cubic("x^3 + 0.5x^2 - 0.5x - 0.125");
        assert!(!c.is_exact());
        assert_eq!(c.p().to_f64(), 0.5);
        assert!(cubic("x^3 - 3x^2 - 6x + 8").is_exact());
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_polynomial("x^3 + + 1", 256),
            Err(ParseError::Syntax { pos: 6, .. })
        ));
        assert!(matches!(
            parse_polynomial("x^3 + 2y", 256),
            Err(ParseError::Syntax { .. })
        ));
        assert_eq!(
            parse_polynomial("x^2 + 1", 256).unwrap_err(),
            ParseError::Degree(2)
        );
        assert_eq!(
            parse_polynomial("x^4 + 1", 256).unwrap_err(),
            ParseError::Degree(4)
        );
        assert_eq!(
            parse_polynomial("x^3 - x^3 + x + 1", 256).unwrap_err(),
            ParseError::ZeroLeadingCoefficient
        );
        assert_eq!(
            parse_polynomial("x^3 + x", 256).unwrap_err(),
            ParseError::ZeroConstantTerm
        );
        assert_eq!(
            parse_polynomial("0,0,0", 256).unwrap_err(),
            ParseError::ZeroConstantTerm
        );
        assert!(matches!(
            parse_polynomial("1/0x^3+1", 256),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_polynomial("", 256),
            Err(ParseError::Syntax { pos: 0, .. })
        ));
    }

    #[test]
    fn values() {
        assert_eq!(parse_value("-3/2", 256).unwrap(), Scalar::ratio(-3, 2));
        assert_eq!(parse_value("6", 256).unwrap(), Scalar::int(6));
        assert!(parse_value("1.5", 256).unwrap().precision().is_some());
        assert!(parse_value("3x", 256).is_err());
    }
}
