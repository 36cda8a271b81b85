use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyalg::Polynomial;

/// How an equation was written on input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SourceForm {
    /// Term syntax such as `2*f^2(x)+5*f(x)+2*x=0`.
    Terms(String),
    /// Comma-separated coefficients, highest power first.
    CoefficientList,
}

/// A parsed equation `a_n f^n(x) + ... + a_1 f(x) + a_0 x = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationInput {
    /// Characteristic coefficients; `a_k` multiplies `r^k`.
    pub coeffs: Polynomial,
    pub source_form: SourceForm,
}

/// Writes the equation back in term syntax, e.g. `2*f^2(x)+5*f(x)+2*x=0`.
impl fmt::Display for EquationInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            match k {
                0 => write!(f, "x")?,
                1 => write!(f, "f(x)")?,
                _ => write!(f, "f^{k}(x)")?,
            }
        }
        write!(f, "=0")
    }
}

/// Parses either a coefficient list `a_n,...,a_0` or term syntax.
///
/// Coefficients are exact: integers, fractions `p/q` and decimals (converted
/// exactly, `0.5` is `1/2`). Repeated powers are summed. Positions in syntax
/// errors are 1-based character columns.
pub fn parse_equation(text: &str) -> Result<EquationInput> {
    if text.trim().is_empty() {
        return Err(Error::Usage("empty equation".to_string()));
    }
    let (coeffs, source_form) = if text.contains(['f', 'x']) {
        (parse_terms(text)?, SourceForm::Terms(text.to_string()))
    } else {
        (parse_list(text)?, SourceForm::CoefficientList)
    };
    match coeffs.degree() {
        Some(d) if d >= 1 => {}
        _ => {
            return Err(Error::Domain(format!(
                "equation must contain at least one iterate of f (parsed {coeffs})"
            )))
        }
    }
    if coeffs.constant_term().is_zero() {
        return Err(Error::Domain(
            "coefficient a_0 of x is zero; polynomial-like iterative equations require a_0 != 0".to_string(),
        ));
    }
    Ok(EquationInput { coeffs, source_form })
}

/// Parses a comma-separated list of rationals, e.g. `1,-1/2,0.25`.
pub fn parse_rational_list(text: &str) -> Result<Vec<BigRational>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for field in text.split(',') {
        let mut p = Cursor::new(field, offset);
        p.skip_ws();
        let value = p.signed_number()?;
        p.skip_ws();
        if !p.at_end() {
            return Err(p.error("unexpected character in number"));
        }
        out.push(value);
        offset += field.chars().count() + 1;
    }
    Ok(out)
}

/// Parses a single rational literal such as `-3/2` or `0.125`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let v = parse_rational_list(text)?;
    match v.as_slice() {
        [q] => Ok(q.clone()),
        _ => Err(Error::Syntax {
            position: 1,
            message: format!("expected a single number, got {text:?}"),
        }),
    }
}

fn parse_list(text: &str) -> Result<Polynomial> {
    Ok(Polynomial::from_descending(parse_rational_list(text)?))
}

fn parse_terms(text: &str) -> Result<Polynomial> {
    let mut p = Cursor::new(text, 0);
    let mut by_power: BTreeMap<usize, BigRational> = BTreeMap::new();
    p.skip_ws();
    let mut first = true;
    loop {
        p.skip_ws();
        let negative = match p.peek() {
            Some('+') => {
                p.bump();
                false
            }
            Some('-') => {
                p.bump();
                true
            }
            _ if first => false,
            _ => break,
        };
        first = false;
        p.skip_ws();
        let (coeff, power) = p.term()?;
        let coeff = if negative { -coeff } else { coeff };
        *by_power.entry(power).or_insert_with(BigRational::zero) += coeff;
        p.skip_ws();
        if p.at_end() || p.peek() == Some('=') {
            break;
        }
    }
    p.skip_ws();
    if p.peek() == Some('=') {
        p.bump();
        p.skip_ws();
        let rhs_at = p.column();
        let rhs = p.number().ok_or_else(|| p.error("expected 0 after '='"))??;
        if !rhs.is_zero() {
            return Err(Error::Syntax {
                position: rhs_at,
                message: "right-hand side must be 0".to_string(),
            });
        }
        p.skip_ws();
    }
    if !p.at_end() {
        return Err(p.error("unexpected character"));
    }
    let degree = by_power.keys().next_back().copied().unwrap_or(0);
    let mut coeffs = vec![BigRational::zero(); degree + 1];
    for (k, c) in by_power {
        coeffs[k] = c;
    }
    Ok(Polynomial::new(coeffs))
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    offset: usize,
}

impl Cursor {
    fn new(text: &str, offset: usize) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            offset,
        }
    }

    fn column(&self) -> usize {
        self.offset + self.pos + 1
    }

    fn error(&self, message: &str) -> Error {
        let found = match self.peek() {
            Some(c) => format!(" (found {c:?})"),
            None => " (found end of input)".to_string(),
        };
        Error::Syntax {
            position: self.column(),
            message: format!("{message}{found}"),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    /// Unsigned decimal `123`, `1.25`, `.5`.
    fn decimal(&mut self) -> Option<Result<BigRational>> {
        let start = self.pos;
        let int_part = self.digits();
        let mut frac_part = String::new();
        if self.peek() == Some('.') {
            self.bump();
            frac_part = self.digits();
        }
        if int_part.is_empty() && frac_part.is_empty() {
            self.pos = start;
            return None;
        }
        let digits = format!("{int_part}{frac_part}");
        let numer: BigInt = digits.parse().expect("ascii digits");
        let denom = BigInt::from(10).pow(frac_part.len() as u32);
        Some(Ok(BigRational::new(numer, denom)))
    }

    /// Unsigned rational: a decimal optionally followed by `/denominator`.
    fn number(&mut self) -> Option<Result<BigRational>> {
        let value = match self.decimal()? {
            Ok(v) => v,
            Err(e) => return Some(Err(e)),
        };
        if self.peek() != Some('/') {
            return Some(Ok(value));
        }
        self.bump();
        let at = self.column();
        match self.decimal() {
            Some(Ok(d)) if d.is_zero() => Some(Err(Error::Syntax {
                position: at,
                message: "zero denominator".to_string(),
            })),
            Some(Ok(d)) => Some(Ok(value / d)),
            Some(Err(e)) => Some(Err(e)),
            None => Some(Err(self.error("expected denominator after '/'"))),
        }
    }

    fn signed_number(&mut self) -> Result<BigRational> {
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
        self.skip_ws();
        let v = self.number().ok_or_else(|| self.error("expected a number"))??;
        Ok(if negative { -v } else { v })
    }

    /// `[coef ['*']] (x | f(x) | f^k(x))`, returning coefficient and power.
    fn term(&mut self) -> Result<(BigRational, usize)> {
        let coeff = match self.number() {
            Some(v) => {
                let v = v?;
                self.skip_ws();
                if self.peek() == Some('*') {
                    self.bump();
                    self.skip_ws();
                }
                v
            }
            None => BigRational::one(),
        };
        match self.peek() {
            Some('x') => {
                self.bump();
                Ok((coeff, 0))
            }
            Some('f') => {
                self.bump();
                self.skip_ws();
                let power = if self.peek() == Some('^') {
                    self.bump();
                    self.skip_ws();
                    let at = self.column();
                    let d = self.digits();
                    if d.is_empty() {
                        return Err(self.error("expected iterate order after '^'"));
                    }
                    d.parse::<usize>().map_err(|_| Error::Syntax {
                        position: at,
                        message: format!("iterate order {d} is too large"),
                    })?
                } else {
                    1
                };
                self.eat('(')?;
                self.eat('x')?;
                self.eat(')')?;
                Ok((coeff, power))
            }
            _ => Err(self.error("expected x, f(x) or f^k(x)")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn term_syntax() {
        let e = parse_equation("2*f^2(x)+5*f(x)+2*x=0").unwrap();
        assert_eq!(e.coeffs, Polynomial::from_i64_descending(&[2, 5, 2]));
        let e = parse_equation("2*f^3(x)+3*f^2(x)-3*f(x)-2*x").unwrap();
        assert_eq!(e.coeffs, Polynomial::from_i64_descending(&[2, 3, -3, -2]));
    }

    #[test]
    fn coefficient_list() {
        let e = parse_equation("1,-1").unwrap();
        assert_eq!(e.coeffs, Polynomial::from_i64_descending(&[1, -1]));
        assert_eq!(e.source_form, SourceForm::CoefficientList);
        let e = parse_equation(" 1/2 , 0.25, -3 ").unwrap();
        assert_eq!(e.coeffs, Polynomial::from_descending(vec![q(1, 2), q(1, 4), q(-3, 1)]));
    }

    #[test]
    fn loose_spacing_units_and_duplicates() {
        let e = parse_equation(" f^2 ( x ) - f(x) + 0.5x - x + 3 f(x) = 0 ").unwrap();
        assert_eq!(e.coeffs, Polynomial::new(vec![q(-1, 2), q(2, 1), q(1, 1)]));
        let e = parse_equation("-f(x)+x").unwrap();
        assert_eq!(e.coeffs, Polynomial::from_i64_descending(&[-1, 1]));
    }

    #[test]
    fn rejects_zero_constant_and_empty() {
        assert!(matches!(parse_equation("f^2(x)+f(x)"), Err(Error::Domain(m)) if m.contains("a_0")));
        assert!(matches!(parse_equation("1,1,0"), Err(Error::Domain(_))));
        assert!(matches!(parse_equation("   "), Err(Error::Usage(_))));
        assert!(matches!(parse_equation("3*x"), Err(Error::Domain(_))));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_equation("2*f^2(x)+5*g(x)+2*x") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 12),
            other => panic!("unexpected {other:?}"),
        }
        match parse_equation("1,,2") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_equation("f(x)+x=1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_equation("1/0,1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_equation("f(x) x"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn display_round_trip() {
        let e = parse_equation("1/2*f^3(x)-f(x)+x").unwrap();
        assert_eq!(e.to_string(), "1/2*f^3(x)-f(x)+x=0");
        assert_eq!(parse_equation(&e.to_string()).unwrap().coeffs, e.coeffs);
    }
}
