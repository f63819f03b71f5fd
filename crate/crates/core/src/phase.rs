// Copyright 2026 The flowopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Exact phases, measured in units of π and reduced modulo 2.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A rational multiple of π in `[0, 2)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Phase(Rational64);

impl Phase {
    pub fn new(numer: i64, denom: i64) -> Phase {
        Phase::from_ratio(Rational64::new(numer, denom))
    }

    /// Reduce an arbitrary rational into `[0, 2)`.
    pub fn from_ratio(r: Rational64) -> Phase {
        let two = Rational64::from_integer(2);
        let mut r = r % two;
        if r.is_negative() {
            r += two;
        }
        Phase(r)
    }

    pub fn zero() -> Phase {
        Phase(Rational64::zero())
    }

    pub fn pi() -> Phase {
        Phase(Rational64::one())
    }

    pub fn half_pi() -> Phase {
        Phase::new(1, 2)
    }

    pub fn ratio(self) -> Rational64 {
        self.0
    }

    pub fn numer(self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    /// 0 or π.
    pub fn is_pauli(self) -> bool {
        self.denom() == 1
    }

    /// π/2 or 3π/2.
    pub fn is_proper_clifford(self) -> bool {
        self.denom() == 2
    }

    /// Multiple of π/2.
    pub fn is_clifford(self) -> bool {
        self.denom() <= 2
    }

    /// The phase angle in radians, in `[0, 2π)`.
    pub fn to_radians(self) -> f64 {
        self.0.to_f64().unwrap_or(0.0) * std::f64::consts::PI
    }
}

impl From<i64> for Phase {
    fn from(n: i64) -> Phase {
        Phase::from_ratio(Rational64::from_integer(n))
    }
}

impl Add for Phase {
    type Output = Phase;
    fn add(self, rhs: Phase) -> Phase {
        Phase::from_ratio(self.0 + rhs.0)
    }
}

impl Sub for Phase {
    type Output = Phase;
    fn sub(self, rhs: Phase) -> Phase {
        Phase::from_ratio(self.0 - rhs.0)
    }
}

impl Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        Phase::from_ratio(-self.0)
    }
}

impl AddAssign for Phase {
    fn add_assign(&mut self, rhs: Phase) {
        *self = *self + rhs;
    }
}

impl SubAssign for Phase {
    fn sub_assign(&mut self, rhs: Phase) {
        *self = *self - rhs;
    }
}

/// Formats as a QASM-friendly expression: `0`, `pi`, `pi/4`, `3*pi/4`.
impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = (self.numer(), self.denom());
        match (n, d) {
            (0, _) => write!(f, "0"),
            (1, 1) => write!(f, "pi"),
            (1, d) => write!(f, "pi/{d}"),
            (n, 1) => write!(f, "{n}*pi"),
            (n, d) => write!(f, "{n}*pi/{d}"),
        }
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error returned by [`parse_phase`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid angle expression `{expr}`: {reason}")]
pub struct PhaseParseError {
    pub expr: String,
    pub reason: String,
}

/// Parse an angle expression such as `pi/4`, `-3*pi/8`, `0.25*pi` or `0`
/// into an exact phase.
///
/// The expression may use `+ - * /`, parentheses, decimal literals and `pi`.
/// It must evaluate to a rational multiple of π; anything else (a bare
/// non-zero number, `pi*pi`, division by zero) is rejected.
pub fn parse_phase(expr: &str) -> Result<Phase, PhaseParseError> {
    let mut p = ExprParser {
        src: expr.as_bytes(),
        pos: 0,
        depth: 0,
    };
    let fail = |reason: &str| PhaseParseError {
        expr: expr.trim().to_string(),
        reason: reason.to_string(),
    };
    let v = p.expr().map_err(|r| fail(&r))?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(fail("trailing characters"));
    }
    match v {
        Term { coeff, pi_power: 1 } => Ok(Phase::from_ratio(coeff)),
        Term { coeff, .. } if coeff.is_zero() => Ok(Phase::zero()),
        _ => Err(fail("not a rational multiple of pi")),
    }
}

/// `coeff * pi^pi_power`.
#[derive(Clone, Copy, Debug)]
struct Term {
    coeff: Rational64,
    pi_power: i32,
}

struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

const MAX_DEPTH: usize = 64;

impl ExprParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Term, String> {
        let mut acc = self.product()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.product()?;
            acc = combine_sum(acc, rhs, op == b'-')?;
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Term, String> {
        let mut acc = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == b'*' {
                Term {
                    coeff: checked_mul(acc.coeff, rhs.coeff)?,
                    pi_power: acc.pi_power + rhs.pi_power,
                }
            } else {
                if rhs.coeff.is_zero() {
                    return Err("division by zero".into());
                }
                Term {
                    coeff: checked_div(acc.coeff, rhs.coeff)?,
                    pi_power: acc.pi_power - rhs.pi_power,
                }
            };
            if acc.pi_power.abs() > 8 {
                return Err("expression too deep".into());
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Term, String> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err("expression too deep".into());
        }
        let r = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let t = self.unary()?;
                Ok(Term {
                    coeff: -t.coeff,
                    pi_power: t.pi_power,
                })
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.atom(),
        };
        self.depth -= 1;
        r
    }

    fn atom(&mut self) -> Result<Term, String> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let t = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err("unbalanced parentheses".into());
                }
                self.pos += 1;
                Ok(t)
            }
            Some(b'p') if self.src[self.pos..].starts_with(b"pi") => {
                self.pos += 2;
                Ok(Term {
                    coeff: Rational64::one(),
                    pi_power: 1,
                })
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(_) => Err("unexpected character".into()),
            None => Err("unexpected end of expression".into()),
        }
    }

    fn number(&mut self) -> Result<Term, String> {
        let start = self.pos;
        let mut int_part: i64 = 0;
        let mut denom: i64 = 1;
        let mut seen_dot = false;
        let mut digits = 0;
        while let Some(&c) = self.src.get(self.pos) {
            if c.is_ascii_digit() {
                int_part = int_part
                    .checked_mul(10)
                    .and_then(|x| x.checked_add(i64::from(c - b'0')))
                    .ok_or("numeric literal too large")?;
                if seen_dot {
                    denom = denom.checked_mul(10).ok_or("numeric literal too precise")?;
                }
                digits += 1;
            } else if c == b'.' && !seen_dot {
                seen_dot = true;
            } else {
                break;
            }
            self.pos += 1;
        }
        if digits == 0 {
            self.pos = start;
            return Err("malformed number".into());
        }
        Ok(Term {
            coeff: Rational64::new(int_part, denom),
            pi_power: 0,
        })
    }
}

fn combine_sum(a: Term, b: Term, subtract: bool) -> Result<Term, String> {
    let b_coeff = if subtract { -b.coeff } else { b.coeff };
    if a.coeff.is_zero() {
        return Ok(Term {
            coeff: b_coeff,
            pi_power: b.pi_power,
        });
    }
    if b_coeff.is_zero() {
        return Ok(a);
    }
    if a.pi_power != b.pi_power {
        return Err("mixes multiples of pi with plain numbers".into());
    }
    Ok(Term {
        coeff: checked_add(a.coeff, b_coeff)?,
        pi_power: a.pi_power,
    })
}

fn checked_add(a: Rational64, b: Rational64) -> Result<Rational64, String> {
    let (an, ad, bn, bd) = (
        *a.numer() as i128,
        *a.denom() as i128,
        *b.numer() as i128,
        *b.denom() as i128,
    );
    narrow(an * bd + bn * ad, ad * bd)
}

fn checked_mul(a: Rational64, b: Rational64) -> Result<Rational64, String> {
    let (an, ad, bn, bd) = (
        *a.numer() as i128,
        *a.denom() as i128,
        *b.numer() as i128,
        *b.denom() as i128,
    );
    narrow(an * bn, ad * bd)
}

fn checked_div(a: Rational64, b: Rational64) -> Result<Rational64, String> {
    let (an, ad, bn, bd) = (
        *a.numer() as i128,
        *a.denom() as i128,
        *b.numer() as i128,
        *b.denom() as i128,
    );
    narrow(an * bd, ad * bn)
}

fn narrow(n: i128, d: i128) -> Result<Rational64, String> {
    let g = gcd(n.unsigned_abs(), d.unsigned_abs()).max(1) as i128;
    let (mut n, mut d) = (n / g, d / g);
    if d < 0 {
        n = -n;
        d = -d;
    }
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(n), Ok(d)) => Ok(Rational64::new_raw(n, d)),
        _ => Err("numeric overflow".into()),
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Identifier of a symbolic phase variable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VarId(pub u32);

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", self.0)
    }
}

/// A reference to a phase variable with multiplier `+1` or `-1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VarRef {
    pub id: VarId,
    pub negated: bool,
}

impl VarRef {
    pub fn multiplier(self) -> i64 {
        if self.negated {
            -1
        } else {
            1
        }
    }
}

/// A spider phase: an exact constant plus at most one signed variable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PhaseExpr {
    pub clifford: Phase,
    pub var: Option<VarRef>,
}

impl PhaseExpr {
    pub fn constant(p: Phase) -> PhaseExpr {
        PhaseExpr {
            clifford: p,
            var: None,
        }
    }

    pub fn var(id: VarId) -> PhaseExpr {
        PhaseExpr {
            clifford: Phase::zero(),
            var: Some(VarRef { id, negated: false }),
        }
    }

    /// The constant value, if no variable is attached.
    pub fn as_constant(&self) -> Option<Phase> {
        match self.var {
            None => Some(self.clifford),
            Some(_) => None,
        }
    }

    pub fn is_constant_zero(&self) -> bool {
        self.as_constant().is_some_and(Phase::is_zero)
    }

    /// Clifford means: no variable and a multiple of π/2.
    pub fn is_clifford(&self) -> bool {
        self.as_constant().is_some_and(Phase::is_clifford)
    }

    pub fn is_pauli(&self) -> bool {
        self.as_constant().is_some_and(Phase::is_pauli)
    }

    pub fn is_proper_clifford(&self) -> bool {
        self.as_constant().is_some_and(Phase::is_proper_clifford)
    }

    pub fn add_constant(&mut self, p: Phase) {
        self.clifford += p;
    }

    /// Negate both the constant and the variable multiplier.
    pub fn negate(&mut self) {
        self.clifford = -self.clifford;
        if let Some(v) = &mut self.var {
            v.negated = !v.negated;
        }
    }

    /// Sum of two expressions; `None` if both carry a variable.
    pub fn checked_add(self, other: PhaseExpr) -> Option<PhaseExpr> {
        let var = match (self.var, other.var) {
            (Some(_), Some(_)) => return None,
            (a, b) => a.or(b),
        };
        Some(PhaseExpr {
            clifford: self.clifford + other.clifford,
            var,
        })
    }
}

impl From<Phase> for PhaseExpr {
    fn from(p: Phase) -> PhaseExpr {
        PhaseExpr::constant(p)
    }
}

impl fmt::Display for PhaseExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.var {
            None => write!(f, "{}", self.clifford),
            Some(v) => {
                let sign = if v.negated { "-" } else { "" };
                if self.clifford.is_zero() {
                    write!(f, "{sign}{}", v.id)
                } else {
                    write!(f, "{} + {sign}{}", self.clifford, v.id)
                }
            }
        }
    }
}

impl fmt::Debug for PhaseExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduction_mod_two() {
        assert_eq!(Phase::new(9, 4), Phase::new(1, 4));
        assert_eq!(Phase::new(-1, 4), Phase::new(7, 4));
        assert_eq!(Phase::new(4, 2), Phase::zero());
        assert_eq!(Phase::new(1, 4) + Phase::new(1, 4), Phase::half_pi());
    }

    #[test]
    fn classification() {
        assert!(Phase::zero().is_pauli());
        assert!(Phase::pi().is_pauli());
        assert!(Phase::new(3, 2).is_proper_clifford());
        assert!(!Phase::new(1, 4).is_clifford());
        assert!(Phase::new(1, 2).is_clifford());
    }

    #[test]
    fn parses_common_forms() {
        let cases = [
            ("pi/4", Phase::new(1, 4)),
            ("-pi/4", Phase::new(7, 4)),
            ("3*pi/4", Phase::new(3, 4)),
            ("pi*3/4", Phase::new(3, 4)),
            ("0.25*pi", Phase::new(1, 4)),
            ("0", Phase::zero()),
            ("pi", Phase::pi()),
            ("2*pi", Phase::zero()),
            ("pi/2 + pi/4", Phase::new(3, 4)),
            ("-(pi/8)", Phase::new(15, 8)),
            ("  pi / 16 ", Phase::new(1, 16)),
        ];
        for (s, want) in cases {
            assert_eq!(parse_phase(s).unwrap(), want, "{s}");
        }
    }

    #[test]
    fn rejects_non_multiples_of_pi() {
        for s in [
            "0.785", "1", "pi*pi", "pi/0", "pi +", "(pi", "pi/4 + 1", "x", "", "pi pi",
        ] {
            assert!(parse_phase(s).is_err(), "{s}");
        }
    }

    #[test]
    fn display_round_trips() {
        for (n, d) in [(0, 1), (1, 1), (1, 4), (7, 4), (3, 2), (5, 16)] {
            let p = Phase::new(n, d);
            assert_eq!(parse_phase(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn expr_negation_flips_multiplier() {
        let mut e = PhaseExpr::var(VarId(3));
        e.add_constant(Phase::new(1, 2));
        e.negate();
        assert_eq!(e.clifford, Phase::new(3, 2));
        assert!(e.var.unwrap().negated);
        assert!(e.checked_add(PhaseExpr::var(VarId(1))).is_none());
    }

    proptest! {
        #[test]
        fn always_in_range(n in -1000i64..1000, d in 1i64..64) {
            let p = Phase::new(n, d);
            prop_assert!(p.ratio() >= Rational64::zero());
            prop_assert!(p.ratio() < Rational64::from_integer(2));
        }

        #[test]
        fn group_laws(a in -64i64..64, b in -64i64..64, d in 1i64..32) {
            let (x, y) = (Phase::new(a, d), Phase::new(b, 2 * d));
            prop_assert_eq!(x + y, y + x);
            prop_assert_eq!(x - x, Phase::zero());
            prop_assert_eq!(x + (-x), Phase::zero());
            prop_assert_eq!((x + y) - y, x);
        }

        #[test]
        fn parse_never_panics(s in "[-+*/(). 0-9pi]{0,24}") {
            let _ = parse_phase(&s);
        }
    }
}
