//! Exact constructible real numbers.
//!
//! A [`CReal`] is kept in a canonical quadratic-tower normal form: either a
//! rational, or `lo + hi * sqrt(r)` where `sqrt(r)` is the largest radical
//! involved and `lo`, `hi` only mention smaller radicals. Radicals are ordered
//! by nesting depth and then by a structural key, so the shape of a value does
//! not depend on the order in which it was computed.

mod interval;
mod render;

use std::cell::Cell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Sign;
use interval::Interval;

/// Default bound on square-root nesting.
pub const DEFAULT_DEPTH_LIMIT: u32 = 16;

const PRECISIONS: [u32; 4] = [64, 192, 640, 2048];

thread_local! {
    static DEPTH_LIMIT: Cell<u32> = const { Cell::new(DEFAULT_DEPTH_LIMIT) };
}

/// Current square-root nesting limit on this thread.
pub fn depth_limit() -> u32 {
    DEPTH_LIMIT.with(Cell::get)
}

/// Runs `f` with a different nesting limit, restoring the previous one after.
pub fn with_depth_limit<R>(limit: u32, f: impl FnOnce() -> R) -> R {
    struct Restore(u32);
    impl Drop for Restore {
        fn drop(&mut self) {
            DEPTH_LIMIT.with(|d| d.set(self.0));
        }
    }
    let _restore = Restore(DEPTH_LIMIT.with(|d| d.replace(limit)));
    f()
}

/// An exact constructible real number.
#[derive(Clone)]
pub struct CReal(Arc<Inner>);

struct Inner {
    node: Node,
    depth: u32,
    key: u64,
    sign: OnceLock<Sign>,
    approx: [OnceLock<Interval>; PRECISIONS.len()],
}

enum Node {
    Rat(BigRational),
    Ext {
        lo: CReal,
        hi: CReal,
        root: Arc<Radical>,
    },
}

struct Radical {
    radicand: CReal,
    depth: u32,
    key: u64,
    approx: [OnceLock<Interval>; PRECISIONS.len()],
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv(mut h: u64, bytes: &[u8]) -> u64 {
    for b in bytes {
        h ^= u64::from(*b);
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

fn rational_key(q: &BigRational) -> u64 {
    let h = fnv(FNV_OFFSET, &q.numer().to_signed_bytes_le());
    fnv(fnv(h, b"/"), &q.denom().to_signed_bytes_le())
}

fn ext_key(root: u64, hi: u64, lo: u64) -> u64 {
    let mut h = fnv(FNV_OFFSET, b"ext");
    for part in [root, hi, lo] {
        h = fnv(h, &part.to_le_bytes());
    }
    h
}

fn cmp_radicals(a: &Arc<Radical>, b: &Arc<Radical>) -> Ordering {
    if Arc::ptr_eq(a, b) {
        return Ordering::Equal;
    }
    a.depth
        .cmp(&b.depth)
        .then(a.key.cmp(&b.key))
        .then_with(|| a.radicand.structural_cmp(&b.radicand))
}

impl Radical {
    fn new(radicand: CReal) -> Arc<Radical> {
        let key = fnv(fnv(FNV_OFFSET, b"sqrt"), &radicand.0.key.to_le_bytes());
        Arc::new(Radical {
            depth: radicand.depth() + 1,
            radicand,
            key,
            approx: Default::default(),
        })
    }

    fn interval(&self, prec: u32) -> Interval {
        match PRECISIONS.iter().position(|&p| p == prec) {
            Some(i) => self.approx[i]
                .get_or_init(|| self.radicand.interval(prec).sqrt(prec))
                .clone(),
            None => self.radicand.interval(prec).sqrt(prec),
        }
    }
}

impl CReal {
    fn from_node(node: Node) -> CReal {
        let (depth, key) = match &node {
            Node::Rat(q) => (0, rational_key(q)),
            Node::Ext { lo, hi, root } => (
                lo.depth().max(hi.depth()).max(root.depth),
                ext_key(root.key, hi.0.key, lo.0.key),
            ),
        };
        CReal(Arc::new(Inner {
            node,
            depth,
            key,
            sign: OnceLock::new(),
            approx: Default::default(),
        }))
    }

    fn ext(lo: CReal, hi: CReal, root: Arc<Radical>) -> CReal {
        if hi.is_structural_zero() {
            lo
        } else {
            CReal::from_node(Node::Ext { lo, hi, root })
        }
    }

    pub fn zero() -> CReal {
        CReal::from(BigRational::zero())
    }

    pub fn one() -> CReal {
        CReal::from(BigRational::one())
    }

    /// The rational `n / d`.
    ///
    /// # Panics
    /// Panics if `d` is zero.
    pub fn ratio(n: i64, d: i64) -> CReal {
        CReal::from(BigRational::new(n.into(), d.into()))
    }

    /// Rational value, if the normal form has no radical.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0.node {
            Node::Rat(q) => Some(q),
            Node::Ext { .. } => None,
        }
    }

    /// Square-root nesting depth of the normal form.
    pub fn depth(&self) -> u32 {
        self.0.depth
    }

    fn is_structural_zero(&self) -> bool {
        matches!(&self.0.node, Node::Rat(q) if q.is_zero())
    }

    fn top(&self) -> Option<&Arc<Radical>> {
        match &self.0.node {
            Node::Rat(_) => None,
            Node::Ext { root, .. } => Some(root),
        }
    }

    fn split(&self, t: &Arc<Radical>) -> (CReal, CReal) {
        match &self.0.node {
            Node::Ext { lo, hi, root } if cmp_radicals(root, t) == Ordering::Equal => {
                (lo.clone(), hi.clone())
            }
            _ => (self.clone(), CReal::zero()),
        }
    }

    fn common_top(&self, other: &CReal) -> Option<Arc<Radical>> {
        match (self.top(), other.top()) {
            (None, None) => None,
            (Some(a), None) => Some(a.clone()),
            (None, Some(b)) => Some(b.clone()),
            (Some(a), Some(b)) => Some(if cmp_radicals(a, b) == Ordering::Less {
                b.clone()
            } else {
                a.clone()
            }),
        }
    }

    /// Total order on normal forms. Equal results mean identical shape.
    pub fn structural_cmp(&self, other: &CReal) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        match (&self.0.node, &other.0.node) {
            (Node::Rat(a), Node::Rat(b)) => a.cmp(b),
            (Node::Rat(_), Node::Ext { .. }) => Ordering::Less,
            (Node::Ext { .. }, Node::Rat(_)) => Ordering::Greater,
            (
                Node::Ext { lo, hi, root },
                Node::Ext {
                    lo: lo2,
                    hi: hi2,
                    root: root2,
                },
            ) => cmp_radicals(root, root2)
                .then_with(|| hi.structural_cmp(hi2))
                .then_with(|| lo.structural_cmp(lo2)),
        }
    }

    pub fn structurally_eq(&self, other: &CReal) -> bool {
        self.structural_cmp(other) == Ordering::Equal
    }

    fn scale(&self, q: &BigRational) -> CReal {
        if q.is_zero() {
            return CReal::zero();
        }
        if q.is_one() {
            return self.clone();
        }
        match &self.0.node {
            Node::Rat(a) => CReal::from(a * q),
            Node::Ext { lo, hi, root } => CReal::ext(lo.scale(q), hi.scale(q), root.clone()),
        }
    }

    fn add_ref(&self, other: &CReal) -> CReal {
        if other.is_structural_zero() {
            return self.clone();
        }
        if self.is_structural_zero() {
            return other.clone();
        }
        match self.common_top(other) {
            None => CReal::from(self.as_rational().unwrap() + other.as_rational().unwrap()),
            Some(t) => {
                let (a, b) = self.split(&t);
                let (c, d) = other.split(&t);
                CReal::ext(a.add_ref(&c), b.add_ref(&d), t)
            }
        }
    }

    fn neg_ref(&self) -> CReal {
        self.scale(&-BigRational::one())
    }

    fn mul_ref(&self, other: &CReal) -> CReal {
        if let Some(q) = other.as_rational() {
            return self.scale(q);
        }
        if let Some(q) = self.as_rational() {
            return other.scale(q);
        }
        let t = self.common_top(other).expect("both operands have radicals");
        let (a, b) = self.split(&t);
        let (c, d) = other.split(&t);
        if b.is_structural_zero() {
            return CReal::ext(a.mul_ref(&c), a.mul_ref(&d), t);
        }
        if d.is_structural_zero() {
            return CReal::ext(a.mul_ref(&c), b.mul_ref(&c), t);
        }
        let r = &t.radicand;
        let lo = a.mul_ref(&c).add_ref(&b.mul_ref(&d).mul_ref(r));
        let hi = a.mul_ref(&d).add_ref(&b.mul_ref(&c));
        CReal::ext(lo, hi, t)
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<CReal> {
        match &self.0.node {
            Node::Rat(q) => {
                if q.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(CReal::from(q.recip()))
                }
            }
            Node::Ext { lo, hi, root } => {
                let norm = lo.mul_ref(lo).sub_ref(&hi.mul_ref(hi).mul_ref(&root.radicand));
                if norm.sign() != Sign::Zero {
                    let n_inv = norm.inv()?;
                    Ok(CReal::ext(
                        lo.mul_ref(&n_inv),
                        hi.neg_ref().mul_ref(&n_inv),
                        root.clone(),
                    ))
                } else if self.sign() == Sign::Zero {
                    Err(Error::DivisionByZero)
                } else {
                    // lo equals hi * sqrt(r), so the value is 2 * lo.
                    lo.scale(&BigRational::from_integer(2.into())).inv()
                }
            }
        }
    }

    fn sub_ref(&self, other: &CReal) -> CReal {
        self.add_ref(&other.neg_ref())
    }

    /// Exact quotient.
    pub fn checked_div(&self, other: &CReal) -> Result<CReal> {
        Ok(self.mul_ref(&other.inv()?))
    }

    pub fn abs(&self) -> CReal {
        if self.sign() == Sign::Negative {
            self.neg_ref()
        } else {
            self.clone()
        }
    }

    /// Exact sign.
    pub fn sign(&self) -> Sign {
        *self.0.sign.get_or_init(|| self.compute_sign())
    }

    fn compute_sign(&self) -> Sign {
        let (lo, hi, root) = match &self.0.node {
            Node::Rat(q) => return Sign::of_rational(q),
            Node::Ext { lo, hi, root } => (lo, hi, root),
        };
        for &prec in &PRECISIONS {
            let iv = self.interval(prec);
            if iv.is_positive() {
                return Sign::Positive;
            }
            if iv.is_negative() {
                return Sign::Negative;
            }
        }
        let sa = lo.sign();
        let sb = hi.sign();
        if sb == Sign::Zero {
            return sa;
        }
        if sa == Sign::Zero || sa == sb {
            return sb;
        }
        let norm = lo.mul_ref(lo).sub_ref(&hi.mul_ref(hi).mul_ref(&root.radicand));
        sa.times(norm.sign())
    }

    fn interval(&self, prec: u32) -> Interval {
        let (lo, hi, root) = match &self.0.node {
            Node::Rat(q) => return Interval::from_rational(q, prec),
            Node::Ext { lo, hi, root } => (lo, hi, root),
        };
        let eval = || {
            lo.interval(prec)
                .add(&hi.interval(prec).mul(&root.interval(prec), prec))
        };
        match PRECISIONS.iter().position(|&p| p == prec) {
            Some(i) => self.0.approx[i].get_or_init(eval).clone(),
            None => eval(),
        }
    }

    /// Rational enclosure `[lo, hi]` of width at most about `2^-prec`
    /// times the magnitude growth of the normal form.
    pub fn enclosure(&self, prec: u32) -> (BigRational, BigRational) {
        let iv = self.interval(prec);
        let den = BigInt::one() << prec;
        (
            BigRational::new(iv.lo, den.clone()),
            BigRational::new(iv.hi, den),
        )
    }

    /// Nearest `f64`.
    pub fn to_f64(&self) -> f64 {
        if let Some(q) = self.as_rational() {
            return q.to_f64().unwrap_or(f64::NAN);
        }
        self.interval(PRECISIONS[1])
            .midpoint(PRECISIONS[1])
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// Square root using the thread's nesting limit.
    pub fn sqrt(&self) -> Result<CReal> {
        self.sqrt_with_limit(depth_limit())
    }

    /// Square root, failing if the result would nest deeper than `limit`.
    pub fn sqrt_with_limit(&self, limit: u32) -> Result<CReal> {
        match self.sign() {
            Sign::Negative => return Err(Error::NegativeRadicand),
            Sign::Zero => return Ok(CReal::zero()),
            Sign::Positive => {}
        }
        if let Some(r) = self.exact_sqrt() {
            return Ok(r);
        }
        // Pull out the rational content so equal radicals share one form.
        let content = self.content();
        let primitive = self.scale(&content.recip());
        let (k, m) = square_free(&(content.numer() * content.denom()));
        let coeff = BigRational::new(k, content.denom().clone());
        let radicand = primitive.scale(&BigRational::from_integer(m));
        let depth = radicand.depth() + 1;
        if depth > limit {
            return Err(Error::DepthLimitExceeded { depth, limit });
        }
        Ok(CReal::ext(
            CReal::zero(),
            CReal::from(coeff),
            Radical::new(radicand),
        ))
    }

    /// Square root within the radicals already present, if one exists.
    fn exact_sqrt(&self) -> Option<CReal> {
        match &self.0.node {
            Node::Rat(q) => {
                if q.is_negative() {
                    return None;
                }
                let n = q.numer().sqrt();
                let d = q.denom().sqrt();
                (&n * &n == *q.numer() && &d * &d == *q.denom())
                    .then(|| CReal::from(BigRational::new(n, d)))
            }
            Node::Ext { lo, hi, root } => {
                let n2 = lo.mul_ref(lo).sub_ref(&hi.mul_ref(hi).mul_ref(&root.radicand));
                if n2.sign() == Sign::Negative {
                    return None;
                }
                let n = n2.exact_sqrt()?;
                let half = BigRational::new(1.into(), 2.into());
                for cand in [lo.add_ref(&n), lo.sub_ref(&n)] {
                    let cand = cand.scale(&half);
                    if cand.sign() != Sign::Positive {
                        continue;
                    }
                    if let Some(p) = cand.exact_sqrt() {
                        let q = hi.mul_ref(&p.scale(&BigRational::from_integer(2.into())).inv().ok()?);
                        return Some(CReal::ext(p, q, root.clone()).abs());
                    }
                }
                None
            }
        }
    }

    /// Positive rational `c` such that `self / c` has coprime integer coefficients.
    fn content(&self) -> BigRational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        self.visit_coefficients(&mut |q| {
            num = num.gcd(q.numer());
            den = den.lcm(q.denom());
        });
        if num.is_zero() {
            BigRational::one()
        } else {
            BigRational::new(num, den)
        }
    }

    fn visit_coefficients(&self, f: &mut impl FnMut(&BigRational)) {
        match &self.0.node {
            Node::Rat(q) => f(q),
            Node::Ext { lo, hi, .. } => {
                lo.visit_coefficients(f);
                hi.visit_coefficients(f);
            }
        }
    }
}

/// Splits a positive integer as `k^2 * m`, removing small square factors.
fn square_free(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut k = BigInt::one();
    let mut m = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest && p < BigInt::from(2000) {
        let mut e = 0u32;
        while rest.is_multiple_of(&p) {
            rest /= &p;
            e += 1;
        }
        k *= p.pow(e / 2);
        if e % 2 == 1 {
            m *= &p;
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    let s = rest.sqrt();
    if &s * &s == rest {
        k *= s;
    } else {
        m *= rest;
    }
    (k, m)
}

impl From<BigRational> for CReal {
    fn from(q: BigRational) -> CReal {
        CReal::from_node(Node::Rat(q))
    }
}

impl From<i64> for CReal {
    fn from(n: i64) -> CReal {
        CReal::from(BigRational::from_integer(n.into()))
    }
}

impl From<BigInt> for CReal {
    fn from(n: BigInt) -> CReal {
        CReal::from(BigRational::from_integer(n))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&CReal> for &CReal {
            type Output = CReal;
            fn $method(self, rhs: &CReal) -> CReal {
                self.$imp(rhs)
            }
        }
        impl $trait<CReal> for CReal {
            type Output = CReal;
            fn $method(self, rhs: CReal) -> CReal {
                self.$imp(&rhs)
            }
        }
        impl $trait<&CReal> for CReal {
            type Output = CReal;
            fn $method(self, rhs: &CReal) -> CReal {
                self.$imp(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for CReal {
    type Output = CReal;
    fn neg(self) -> CReal {
        self.neg_ref()
    }
}

impl Neg for &CReal {
    type Output = CReal;
    fn neg(self) -> CReal {
        self.neg_ref()
    }
}

impl Zero for CReal {
    fn zero() -> CReal {
        CReal::zero()
    }
    fn is_zero(&self) -> bool {
        self.sign() == Sign::Zero
    }
}

impl One for CReal {
    fn one() -> CReal {
        CReal::one()
    }
}

impl PartialEq for CReal {
    fn eq(&self, other: &CReal) -> bool {
        self.structurally_eq(other) || self.sub_ref(other).sign() == Sign::Zero
    }
}

impl Eq for CReal {}

impl PartialOrd for CReal {
    fn partial_cmp(&self, other: &CReal) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CReal {
    fn cmp(&self, other: &CReal) -> Ordering {
        self.sub_ref(other).sign().to_ordering()
    }
}

impl fmt::Debug for CReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CReal({self})")
    }
}
