//! Braidings on pointed categories with fusion rules Z_N.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fusion_ring::DOCUMENT_VERSION;
use crate::numtheory::gcd;
use crate::root::UnitRootExp;

/// Something that assigns a scalar to each triple in Z_N^3.
pub trait ThreeCochain {
    fn modulus(&self) -> u64;
    fn value(&self, i: u64, j: u64, l: u64) -> UnitRootExp;
}

/// The representative `ω_η(i,j,ℓ) = η^ℓ` if `i+j ≥ N`, else 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CocycleOmega {
    n: u64,
    eta: UnitRootExp,
}

impl CocycleOmega {
    pub fn new(n: u64, eta: UnitRootExp) -> Result<Self> {
        check_class(n, eta)?;
        Ok(CocycleOmega {
            n,
            eta: eta.reduced(),
        })
    }

    pub fn eta(&self) -> UnitRootExp {
        self.eta
    }

    /// Explicit value table, e.g. for corrupting in tests.
    pub fn table(&self) -> CocycleTable {
        let n = self.n;
        let mut values = Vec::with_capacity((n * n * n) as usize);
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    values.push(self.value(i, j, l));
                }
            }
        }
        CocycleTable { n, values }
    }
}

impl ThreeCochain for CocycleOmega {
    fn modulus(&self) -> u64 {
        self.n
    }

    fn value(&self, i: u64, j: u64, l: u64) -> UnitRootExp {
        let (i, j, l) = (i % self.n, j % self.n, l % self.n);
        if i + j >= self.n {
            self.eta.pow(l as i64)
        } else {
            UnitRootExp::one()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleTable {
    n: u64,
    values: Vec<UnitRootExp>,
}

impl CocycleTable {
    pub fn set(&mut self, i: u64, j: u64, l: u64, v: UnitRootExp) {
        let n = self.n;
        self.values[((i % n * n + j % n) * n + l % n) as usize] = v;
    }
}

impl ThreeCochain for CocycleTable {
    fn modulus(&self) -> u64 {
        self.n
    }

    fn value(&self, i: u64, j: u64, l: u64) -> UnitRootExp {
        let n = self.n;
        self.values[((i % n * n + j % n) * n + l % n) as usize]
    }
}

/// `ω(a+b,c,d)·ω(a,b,c+d) = ω(a,b,c)·ω(a,b+c,d)·ω(b,c,d)` on all of Z_N^4.
pub fn cocycle_condition_check(omega: &impl ThreeCochain) -> bool {
    let n = omega.modulus();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let lhs = omega.value(a + b, c, d) * omega.value(a, b, c + d);
                    let rhs = omega.value(a, b, c) * omega.value(a, b + c, d) * omega.value(b, c, d);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn check_class(n: u64, eta: UnitRootExp) -> Result<()> {
    if n == 0 {
        return Err(Error::param("N must be positive"));
    }
    if !eta.pow(n as i64).is_one() {
        return Err(Error::param(format!("η = {eta} is not an N-th root of unity for N = {n}")));
    }
    Ok(())
}

/// True iff `η = 1`, or `η = −1` with N even.
pub fn braiding_admissible(n: u64, eta: UnitRootExp) -> bool {
    eta.is_one() || (n % 2 == 0 && eta == UnitRootExp::minus_one())
}

/// Braiding `c(i,j) = s^{ij}` on Vec_{Z_N}, with `i, j` taken in `0..N`
/// and `s` a 2N-th root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointedBraiding {
    n: u64,
    s_exponent: u64,
}

impl PointedBraiding {
    /// `s = ζ_{2N}^{s_exponent}`.
    pub fn new(n: u64, s_exponent: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("N must be positive"));
        }
        Ok(PointedBraiding {
            n,
            s_exponent: UnitRootExp::new(s_exponent, 2 * n).exponent(),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// Exponent of `s` modulo 2N.
    pub fn s_exponent(&self) -> u64 {
        self.s_exponent
    }

    pub fn s(&self) -> UnitRootExp {
        UnitRootExp::new(self.s_exponent as i64, 2 * self.n)
    }

    pub fn c(&self, i: u64, j: u64) -> UnitRootExp {
        self.s().pow(((i % self.n) * (j % self.n)) as i64)
    }

    /// Class of the associator this braiding is compatible with.
    pub fn eta(&self) -> UnitRootExp {
        self.s().pow(self.n as i64).reduced()
    }

    /// Hexagons after using the symmetry `ω(i,j,k) = ω(j,i,k)`:
    /// `ω(j,k,i)c(i,j+k) = c(i,k)c(i,j)` and `c(i+j,k)ω(i,j,k)^{-1} = c(i,k)c(j,k)`.
    pub fn satisfies_reduced_hexagons(&self, omega: &CocycleOmega) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if omega.value(j, k, i) * self.c(i, j + k) != self.c(i, k) * self.c(i, j) {
                        return false;
                    }
                    if self.c(i + j, k) * omega.value(i, j, k).inverse()
                        != self.c(i, k) * self.c(j, k)
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// All braidings compatible with `ω_η`, i.e. all `s` with `s^N = η`, sorted by
/// exponent.
pub fn solve_hexagons(n: u64, eta: UnitRootExp) -> Result<Vec<PointedBraiding>> {
    check_class(n, eta)?;
    let target = eta
        .reduced()
        .lift(2 * n)
        .expect("order of η divides N")
        .exponent();
    // s^N = η  ⇔  N·σ ≡ target (mod 2N).
    (0..2 * n)
        .filter(|sigma| (n * sigma) % (2 * n) == target)
        .map(|sigma| PointedBraiding::new(n, sigma as i64))
        .collect()
}

pub fn pointed_b_value(brd: &PointedBraiding, i: u64, j: u64) -> UnitRootExp {
    brd.s().pow(2 * ((i % brd.n) * (j % brd.n)) as i64)
}

/// `{j : s^{2ij} = 1 for all i}`, ascending.
pub fn pointed_symmetric_center(brd: &PointedBraiding) -> Vec<u64> {
    // s^{2ij} = ζ_N^{σij}; trivial for all i iff σj ≡ 0 (mod N).
    (0..brd.n)
        .filter(|j| (brd.s_exponent * j) % brd.n == 0)
        .collect()
}

/// For each admissible class η (1, and −1 when N is even): the number of
/// braidings.
pub fn count_pointed_braidings(n: u64) -> Result<Vec<(UnitRootExp, usize)>> {
    let mut classes = vec![UnitRootExp::one()];
    if n % 2 == 0 {
        classes.push(UnitRootExp::minus_one());
    }
    classes
        .into_iter()
        .map(|eta| Ok((eta, solve_hexagons(n, eta)?.len())))
        .collect()
}

/// Serialized solution set. `eta_exponent` is modulo N, solution exponents
/// modulo 2N.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointedDocument {
    pub version: u32,
    #[serde(rename = "N")]
    pub n: u64,
    pub eta_exponent: u64,
    pub admissible: bool,
    pub solutions: Vec<u64>,
    pub center_orders: Vec<u64>,
}

impl PointedDocument {
    pub fn new(n: u64, eta: UnitRootExp) -> Result<Self> {
        let solutions = solve_hexagons(n, eta)?;
        Ok(PointedDocument {
            version: DOCUMENT_VERSION,
            n,
            eta_exponent: eta.reduced().lift(n).expect("checked class").exponent(),
            admissible: braiding_admissible(n, eta),
            solutions: solutions.iter().map(|b| b.s_exponent()).collect(),
            center_orders: solutions
                .iter()
                .map(|b| pointed_symmetric_center(b).len() as u64)
                .collect(),
        })
    }
}

/// Order of the symmetric center, computed as `gcd(σ, N)`.
pub fn center_order(brd: &PointedBraiding) -> u64 {
    gcd(brd.s_exponent, brd.n)
}
