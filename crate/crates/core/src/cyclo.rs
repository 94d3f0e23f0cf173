//! Exact arithmetic in `Z[q]/(Phi_m(q))`, i.e. in `Z[zeta_m]`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::qpoly::{IntPolynomial, RingElement};

fn cache() -> &'static Mutex<HashMap<usize, IntPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, IntPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `Phi_m(q)`; `m = 0` is treated as `1`.
pub fn cyclotomic_polynomial(m: usize) -> IntPolynomial {
    let m = m.max(1);
    if let Some(p) = cache().lock().expect("cyclotomic cache poisoned").get(&m) {
        return p.clone();
    }
    let mut num = IntPolynomial::monomial(1, m);
    num = &num - &IntPolynomial::one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        num = num
            .div_exact(&cyclotomic_polynomial(d))
            .expect("q^m - 1 is divisible by Phi_d for d | m");
    }
    cache().lock().expect("cyclotomic cache poisoned").insert(m, num.clone());
    num
}

/// An element of `Z[zeta_m]`, stored as its residue modulo `Phi_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicElement {
    order: usize,
    residue: IntPolynomial,
}

impl CyclotomicElement {
    pub fn from_polynomial(order: usize, p: &IntPolynomial) -> Self {
        let order = order.max(1);
        let phi = cyclotomic_polynomial(order);
        let (_, residue) = p.div_rem(&phi).expect("Phi_m is monic");
        CyclotomicElement { order, residue }
    }

    pub fn integer(order: usize, c: impl Into<BigInt>) -> Self {
        CyclotomicElement {
            order: order.max(1),
            residue: IntPolynomial::constant(c.into()),
        }
    }

    /// `zeta_m^e`.
    pub fn zeta_power(order: usize, e: i64) -> Self {
        let order = order.max(1);
        let e = e.rem_euclid(order as i64) as usize;
        CyclotomicElement::from_polynomial(order, &IntPolynomial::monomial(1, e))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn residue(&self) -> &IntPolynomial {
        &self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        match self.residue.degree() {
            None => Some(BigInt::zero()),
            Some(0) => Some(self.residue.coeff(0)),
            Some(_) => None,
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order, other.order, "mixing cyclotomic orders");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        CyclotomicElement {
            order: self.order,
            residue: &self.residue + &other.residue,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        CyclotomicElement {
            order: self.order,
            residue: &self.residue - &other.residue,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        CyclotomicElement::from_polynomial(self.order, &(&self.residue * &other.residue))
    }

    pub fn neg(&self) -> Self {
        CyclotomicElement {
            order: self.order,
            residue: -&self.residue,
        }
    }

    /// Re-express in `Z[zeta_n]` for a multiple `n` of the order.
    pub fn lift(&self, n: usize) -> Self {
        assert!(n.is_multiple_of(self.order), "{n} is not a multiple of {}", self.order);
        let step = n / self.order;
        let mut coeffs = vec![BigInt::zero(); self.residue.coeffs().len() * step.max(1)];
        for (i, c) in self.residue.coeffs().iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        CyclotomicElement::from_polynomial(n, &IntPolynomial::new(coeffs))
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{} (mod Phi_{})", self.residue, self.order),
        }
    }
}

impl RingElement for CyclotomicElement {
    fn zero_like(&self) -> Self {
        CyclotomicElement::integer(self.order, 0)
    }
    fn one_like(&self) -> Self {
        CyclotomicElement::integer(self.order, 1)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn scale_int(&self, c: &BigInt) -> Self {
        CyclotomicElement {
            order: self.order,
            residue: self.residue.scale(c),
        }
    }
}

/// `X(zeta_m^d)`.
pub fn eval_at_root(x: &IntPolynomial, m: usize, d: i64) -> CyclotomicElement {
    let m = m.max(1);
    let d = d.rem_euclid(m as i64) as usize;
    let mut folded = vec![BigInt::zero(); m];
    for (i, c) in x.coeffs().iter().enumerate() {
        folded[(i % m) * d % m] += c;
    }
    CyclotomicElement::from_polynomial(m, &IntPolynomial::new(folded))
}

/// `X(zeta_m^d)` when it is rational.
pub fn as_integer(x: &CyclotomicElement) -> Option<BigInt> {
    x.as_integer()
}

/// Multiplicative order of `zeta_m^d`.
pub fn root_order(m: usize, d: i64) -> usize {
    let m = m.max(1) as i64;
    let g = num_integer::gcd(d.rem_euclid(m), m);
    (m / g) as usize
}
