//! Exact arithmetic in the ring of Eisenstein integers.
//!
//! All matrix entries in this crate are values `a + b*w` where `w` is the
//! primitive cube root of unity satisfying `w^2 = -1 - w` and `1 + w + w^2 = 0`.
//! Coefficients are arbitrary-precision integers, so every identity checked by
//! the library is an exact equality of algebraic integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// An Eisenstein integer `a + b*w`, with `w = e^{2*pi*i/3}`.
///
/// The pair `(a, b)` is a unique representation: two values are equal iff
/// both coefficients are equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Eisenstein {
    pub a: BigInt,
    pub b: BigInt,
}

impl Eisenstein {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Eisenstein { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        Eisenstein { a: BigInt::zero(), b: BigInt::zero() }
    }

    pub fn one() -> Self {
        Eisenstein { a: BigInt::one(), b: BigInt::zero() }
    }

    /// The generator `w` itself.
    pub fn omega() -> Self {
        Eisenstein::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True iff the imaginary part vanishes, i.e. `b = 0`.
    pub fn is_rational_integer(&self) -> bool {
        self.b.is_zero()
    }

    /// Complex conjugate: `(a, b) -> (a - b, -b)`.
    ///
    /// Conjugation is an involution and a ring homomorphism.
    pub fn conj(&self) -> Self {
        Eisenstein { a: &self.a - &self.b, b: -&self.b }
    }

    /// Field norm `a^2 - a*b + b^2 = x * conj(x)`; zero iff `x = 0`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Recognize one of the six units; returns the cube-root part when the
    /// value is `1`, `w` or `w^2` (the only units this crate stores in
    /// matrices with unit patterns).
    pub fn as_unit_root(&self) -> Option<UnitRoot> {
        UnitRoot::ALL
            .into_iter()
            .find(|u| &u.to_scalar() == self)
    }

    /// Exact division by a rational integer. Returns `None` when any
    /// coefficient is not divisible.
    pub fn div_exact(&self, k: &BigInt) -> Option<Self> {
        if k.is_zero() {
            return None;
        }
        let (qa, ra) = num_integer_div_rem(&self.a, k);
        let (qb, rb) = num_integer_div_rem(&self.b, k);
        if ra.is_zero() && rb.is_zero() {
            Some(Eisenstein { a: qa, b: qb })
        } else {
            None
        }
    }
}

fn num_integer_div_rem(n: &BigInt, d: &BigInt) -> (BigInt, BigInt) {
    (n / d, n % d)
}

impl fmt::Debug for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl fmt::Display for Eisenstein {
    /// Compact symbolic form: `0`, `1`, `-1`, `w`, `-w`, `w2`, `-w2`,
    /// falling back to `a+bw`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (&self.a, &self.b);
        if b.is_zero() {
            return write!(f, "{}", a);
        }
        if a.is_zero() && b.is_one() {
            return write!(f, "w");
        }
        if a.is_zero() && (-b).is_one() {
            return write!(f, "-w");
        }
        // w2 = -1 - w
        if (a.is_one() && b.is_one()) || ((-a).is_one() && (-b).is_one()) {
            return write!(f, "{}w2", if a.is_one() { "-" } else { "" });
        }
        if a.is_zero() {
            return write!(f, "{}w", b);
        }
        let sign = if b.is_negative() { "-" } else { "+" };
        let mag = b.abs();
        if mag.is_one() {
            write!(f, "{}{}w", a, sign)
        } else {
            write!(f, "{}{}{}w", a, sign, mag)
        }
    }
}

impl From<i64> for Eisenstein {
    fn from(v: i64) -> Self {
        Eisenstein::new(v, 0)
    }
}

impl From<&UnitRoot> for Eisenstein {
    fn from(u: &UnitRoot) -> Self {
        u.to_scalar()
    }
}

impl Add for &Eisenstein {
    type Output = Eisenstein;
    fn add(self, rhs: &Eisenstein) -> Eisenstein {
        Eisenstein { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &Eisenstein {
    type Output = Eisenstein;
    fn sub(self, rhs: &Eisenstein) -> Eisenstein {
        Eisenstein { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Neg for &Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein { a: -&self.a, b: -&self.b }
    }
}

impl Mul for &Eisenstein {
    /// `(a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w`, using `w^2 = -1 - w`.
    type Output = Eisenstein;
    fn mul(self, rhs: &Eisenstein) -> Eisenstein {
        let bd = &self.b * &rhs.b;
        Eisenstein {
            a: &self.a * &rhs.a - &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a - &bd,
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Eisenstein {
            type Output = Eisenstein;
            fn $method(self, rhs: Eisenstein) -> Eisenstein {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Eisenstein> for Eisenstein {
            type Output = Eisenstein;
            fn $method(self, rhs: &Eisenstein) -> Eisenstein {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        -&self
    }
}

/// A unit cube root of unity `w^exp`, `exp` taken modulo 3.
///
/// This is the entry alphabet of all adjacency and incidence matrices here;
/// it embeds into [`Eisenstein`] as `w^0 = (1,0)`, `w^1 = (0,1)`,
/// `w^2 = (-1,-1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct UnitRoot {
    exp: u8,
}

impl UnitRoot {
    pub const ONE: UnitRoot = UnitRoot { exp: 0 };
    pub const OMEGA: UnitRoot = UnitRoot { exp: 1 };
    pub const OMEGA_SQ: UnitRoot = UnitRoot { exp: 2 };
    pub const ALL: [UnitRoot; 3] = [UnitRoot::ONE, UnitRoot::OMEGA, UnitRoot::OMEGA_SQ];

    pub fn new(exp: i64) -> Self {
        UnitRoot { exp: exp.rem_euclid(3) as u8 }
    }

    pub fn exp(&self) -> u8 {
        self.exp
    }

    pub fn is_one(&self) -> bool {
        self.exp == 0
    }

    pub fn mul(self, rhs: UnitRoot) -> UnitRoot {
        UnitRoot { exp: (self.exp + rhs.exp) % 3 }
    }

    /// Conjugation negates the exponent; for units this is also the inverse.
    pub fn conj(self) -> UnitRoot {
        UnitRoot { exp: (3 - self.exp) % 3 }
    }

    pub fn pow(self, k: u32) -> UnitRoot {
        UnitRoot { exp: ((self.exp as u32 * k) % 3) as u8 }
    }

    pub fn to_scalar(self) -> Eisenstein {
        match self.exp {
            0 => Eisenstein::new(1, 0),
            1 => Eisenstein::new(0, 1),
            _ => Eisenstein::new(-1, -1),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self.exp {
            0 => "1",
            1 => "gamma",
            _ => "gamma2",
        }
    }

    pub fn parse(s: &str) -> Option<UnitRoot> {
        match s {
            "1" => Some(UnitRoot::ONE),
            "gamma" | "w" => Some(UnitRoot::OMEGA),
            "gamma2" | "w2" => Some(UnitRoot::OMEGA_SQ),
            _ => None,
        }
    }
}

impl fmt::Display for UnitRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for UnitRoot {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for UnitRoot {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        UnitRoot::parse(&s)
            .ok_or_else(|| serde::de::Error::custom(format!("not a unit cube root: {s:?}")))
    }
}

/// Which of the two admissible parameter choices a matrix is built with:
/// `alpha = w` or `alpha = w^2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    Gamma,
    GammaSquared,
}

impl Variant {
    pub fn unit(self) -> UnitRoot {
        match self {
            Variant::Gamma => UnitRoot::OMEGA,
            Variant::GammaSquared => UnitRoot::OMEGA_SQ,
        }
    }

    pub fn conj(self) -> Variant {
        match self {
            Variant::Gamma => Variant::GammaSquared,
            Variant::GammaSquared => Variant::Gamma,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Gamma => "gamma",
            Variant::GammaSquared => "gamma2",
        }
    }

    pub fn parse(s: &str) -> Option<Variant> {
        match s {
            "gamma" | "g" | "w" => Some(Variant::Gamma),
            "gamma2" | "g2" | "w2" => Some(Variant::GammaSquared),
            _ => None,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}
