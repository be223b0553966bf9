use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{CReal, Node};
use crate::scalar::Sign;

fn rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Renders `coeff * radical`, returning the text and whether it is negated.
fn term(coeff: &CReal, radical: &str) -> (String, bool) {
    match coeff.as_rational() {
        Some(q) => {
            let n = q.numer().abs();
            let d = q.denom();
            let mut s = if n.is_one() {
                radical.to_string()
            } else {
                format!("{n}*{radical}")
            };
            if !d.is_one() {
                s = format!("{s}/{d}");
            }
            (s, q.is_negative())
        }
        None => (format!("{}*{radical}", bare(coeff)), false),
    }
}

fn bare(x: &CReal) -> String {
    match &x.0.node {
        Node::Rat(q) => rational(q),
        Node::Ext { lo, hi, root } => {
            let radical = format!("sqrt({})", unparenthesised(&root.radicand));
            let (t, negated) = term(hi, &radical);
            if lo.is_structural_zero() {
                if negated {
                    format!("-{t}")
                } else {
                    t
                }
            } else {
                let op = if negated { '-' } else { '+' };
                format!("({} {op} {t})", bare(lo))
            }
        }
    }
}

fn unparenthesised(x: &CReal) -> String {
    let s = bare(x);
    match &x.0.node {
        Node::Ext { lo, .. } if !lo.is_structural_zero() => s[1..s.len() - 1].to_string(),
        _ => s,
    }
}

impl fmt::Display for CReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&bare(self))
    }
}

impl CReal {
    /// Decimal string with `digits` fractional digits, rounded to nearest
    /// (ties toward positive infinity).
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = BigInt::from(10).pow(digits as u32);
        let shifted = self * &CReal::from(scale.clone())
            + CReal::from(BigRational::new(1.into(), 2.into()));
        let k = floor(&shifted);
        let neg = k.is_negative();
        let (int, frac) = k.abs().div_rem(&scale);
        let mut s = String::new();
        if neg {
            s.push('-');
        }
        s.push_str(&int.to_string());
        if digits > 0 {
            s.push('.');
            s.push_str(&format!("{:0>width$}", frac.to_string(), width = digits));
        }
        s
    }
}

/// Exact floor, seeded from an interval guess.
fn floor(x: &CReal) -> BigInt {
    let mut k = match x.as_rational() {
        Some(q) => return q.floor().to_integer(),
        None => {
            let (lo, hi) = x.enclosure(128);
            ((lo + hi) / BigRational::from_integer(2.into())).floor().to_integer()
        }
    };
    while (x - &CReal::from(k.clone())).sign() == Sign::Negative {
        k -= 1;
    }
    while (x - &CReal::from(&k + 1)).sign() != Sign::Negative {
        k += 1;
    }
    if k.is_zero() {
        BigInt::zero()
    } else {
        k
    }
}
