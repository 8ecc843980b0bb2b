//! Roots of unity represented by exponents.
//!
//! A [`UnitRootExp`] with order `M` and exponent `e` stands for `ζ_M^e`,
//! where `ζ_M = exp(2πi/M)`. Multiplication adds exponents after lifting both
//! operands to the lcm of their orders, so no floating point ever enters.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::numtheory::{gcd, lcm, rem};

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct UnitRootExp {
    exponent: u64,
    order: u64,
}

impl UnitRootExp {
    /// `ζ_order^exponent`; the exponent is reduced modulo `order`.
    ///
    /// # Panics
    /// If `order == 0`.
    pub fn new(exponent: i64, order: u64) -> Self {
        assert!(order > 0, "root of unity with order 0");
        UnitRootExp {
            exponent: rem(exponent, order),
            order,
        }
    }

    pub fn one() -> Self {
        UnitRootExp::new(0, 1)
    }

    /// `-1`, written as `ζ_2`.
    pub fn minus_one() -> Self {
        UnitRootExp::new(1, 2)
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// The modulus the exponent is stored in. Not necessarily the
    /// multiplicative order; see [`UnitRootExp::multiplicative_order`].
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn multiplicative_order(&self) -> u64 {
        self.order / gcd(self.exponent, self.order)
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0
    }

    /// Rewrites the value with exponent modulus `order`, which must be a
    /// multiple of the current modulus.
    pub fn lift(&self, order: u64) -> Option<Self> {
        if order == 0 || order % self.order != 0 {
            return None;
        }
        Some(UnitRootExp {
            exponent: self.exponent * (order / self.order),
            order,
        })
    }

    /// Reduced form: modulus equal to the multiplicative order.
    pub fn reduced(&self) -> Self {
        let g = gcd(self.exponent, self.order);
        UnitRootExp {
            exponent: self.exponent / g,
            order: self.order / g,
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let e = rem(e, self.order);
        UnitRootExp {
            exponent: ((self.exponent as u128 * e as u128) % self.order as u128) as u64,
            order: self.order,
        }
    }

    pub fn inverse(&self) -> Self {
        UnitRootExp::new(-(self.exponent as i64), self.order)
    }
}

impl Mul for UnitRootExp {
    type Output = UnitRootExp;

    fn mul(self, rhs: UnitRootExp) -> UnitRootExp {
        let order = lcm(self.order, rhs.order);
        let a = self.lift(order).expect("lcm is a common multiple");
        let b = rhs.lift(order).expect("lcm is a common multiple");
        UnitRootExp {
            exponent: (a.exponent + b.exponent) % order,
            order,
        }
    }
}

impl PartialEq for UnitRootExp {
    fn eq(&self, other: &Self) -> bool {
        let order = lcm(self.order, other.order);
        self.lift(order).map(|a| a.exponent) == other.lift(order).map(|b| b.exponent)
    }
}

impl Eq for UnitRootExp {}

impl fmt::Display for UnitRootExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        match (r.exponent, r.order) {
            (0, _) => write!(f, "1"),
            (1, 2) => write!(f, "-1"),
            (e, m) => write!(f, "ζ_{m}^{e}"),
        }
    }
}
