//! Exact arithmetic in GF(p^k) on a polynomial basis.
//!
//! An element is stored as its coefficient vector packed into a single code,
//! `c_0 + c_1 p + ... + c_{k-1} p^{k-1}` (constant term is the least
//! significant digit). The code order is the deterministic element order
//! used for tie-breaking throughout the crate.
//!
//! Multiplication runs through discrete log/antilog tables built once per
//! field from the schoolbook polynomial product, which stays available as
//! [`Field::mul_poly`] so the two routes can be checked against each other.

use std::fmt;

use crate::error::{Error, Result};
use crate::util::{is_prime, prime_factors};

/// Largest field order accepted by [`Field::new`].
pub const FIELD_CAP: u64 = 1 << 20;

/// Fields up to this order get a full addition table.
const ADD_TABLE_LIMIT: u32 = 729;

#[derive(Clone)]
pub struct Field {
    p: u32,
    k: u32,
    q: u32,
    /// Monic, `k + 1` coefficients, constant term first.
    modulus: Vec<u32>,
    generator: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u32>>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl Field {
    /// GF(p^k) with the lexicographically least monic irreducible modulus.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        Self::with_cap(p, k, FIELD_CAP)
    }

    pub fn with_cap(p: u32, k: u32, cap: u64) -> Result<Self> {
        if !is_prime(u64::from(p)) {
            return Err(Error::Input(format!(
                "field characteristic {p} is not prime"
            )));
        }
        if k == 0 {
            return Err(Error::Input("extension degree must be at least 1".into()));
        }
        let q = (p as u64)
            .checked_pow(k)
            .filter(|&q| q <= cap)
            .ok_or(Error::Capacity {
                limit: cap as usize,
                partial: 0,
            })?;
        let q = q as u32;

        let modulus = least_irreducible(p, k);
        let mut field = Field {
            p,
            k,
            q,
            modulus,
            generator: 0,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
        };
        field.generator = field.find_generator();
        field.build_tables();
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement<'_> {
        FieldElement {
            field: self,
            code: 0,
        }
    }

    pub fn one(&self) -> FieldElement<'_> {
        FieldElement {
            field: self,
            code: 1,
        }
    }

    pub fn element(&self, code: u32) -> Result<FieldElement<'_>> {
        if code >= self.q {
            return Err(Error::Input(format!("code {code} outside GF({})", self.q)));
        }
        Ok(FieldElement { field: self, code })
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement<'_>> {
        if coeffs.len() != self.k as usize {
            return Err(Error::Input(format!(
                "expected {} coefficients, got {}",
                self.k,
                coeffs.len()
            )));
        }
        if let Some(c) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::Input(format!(
                "coefficient {c} not reduced mod {}",
                self.p
            )));
        }
        Ok(FieldElement {
            field: self,
            code: self.pack(coeffs),
        })
    }

    /// All elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement<'_>> + '_ {
        (0..self.q).map(move |code| FieldElement { field: self, code })
    }

    /// The unit of order `q - 1` with the least code.
    pub fn multiplicative_generator(&self) -> FieldElement<'_> {
        FieldElement {
            field: self,
            code: self.generator,
        }
    }

    // Raw code arithmetic. Callers guarantee codes are below `order()`.

    pub fn coeffs(&self, mut code: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            out.push(code % self.p);
            code /= self.p;
        }
        out
    }

    fn pack(&self, coeffs: &[u32]) -> u32 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if let Some(table) = &self.add_table {
            return table[(a * self.q + b) as usize];
        }
        self.add_digits(a, b)
    }

    fn add_digits(&self, mut a: u32, mut b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut out, mut place) = (0, 1);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        let e = self.log[a as usize] + self.log[b as usize];
        self.exp[(if e >= n { e - n } else { e }) as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        let l = self.log[a as usize];
        Some(self.exp[((n - l) % n) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = u64::from(self.q - 1);
        let l = u64::from(self.log[a as usize]);
        self.exp[((l * (e % n)) % n) as usize]
    }

    /// True when `a` is a square (zero counts as a square).
    pub fn is_square(&self, a: u32) -> bool {
        a == 0 || self.p == 2 || self.log[a as usize].is_multiple_of(2)
    }

    /// Discrete log to the base of the multiplicative generator.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// Schoolbook product reduced modulo the defining polynomial.
    pub fn mul_poly(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.coeffs(a), self.coeffs(b));
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &xi) in x.iter().enumerate() {
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] += u64::from(xi) * u64::from(yj);
            }
        }
        let p = u64::from(self.p);
        let mut prod: Vec<u32> = prod.into_iter().map(|c| (c % p) as u32).collect();
        reduce(&mut prod, &self.modulus, self.p);
        prod.resize(k, 0);
        self.pack(&prod)
    }

    fn pow_poly(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_poly(acc, base);
            }
            base = self.mul_poly(base, base);
            e >>= 1;
        }
        acc
    }

    fn find_generator(&self) -> u32 {
        let n = u64::from(self.q - 1);
        if n == 1 {
            return 1;
        }
        let primes = prime_factors(n);
        (1..self.q)
            .find(|&g| primes.iter().all(|&r| self.pow_poly(g, n / r) != 1))
            .expect("the unit group of a finite field is cyclic")
    }

    fn build_tables(&mut self) {
        let n = (self.q - 1) as usize;
        self.exp = Vec::with_capacity(n);
        self.log = vec![0; self.q as usize];
        let mut x = 1;
        for i in 0..n {
            self.exp.push(x);
            self.log[x as usize] = i as u32;
            x = self.mul_poly(x, self.generator);
        }
        if self.q <= ADD_TABLE_LIMIT {
            let q = self.q;
            let table = (0..q * q).map(|i| self.add_digits(i / q, i % q)).collect();
            self.add_table = Some(table);
        }
    }
}

/// Reduces `poly` in place modulo the monic `modulus`; both constant term first.
fn reduce(poly: &mut Vec<u32>, modulus: &[u32], p: u32) {
    let deg = modulus.len() - 1;
    while poly.len() > deg {
        let lead = poly.pop().unwrap();
        if lead == 0 {
            continue;
        }
        let base = poly.len() - deg;
        for (i, &m) in modulus[..deg].iter().enumerate() {
            let c = &mut poly[base + i];
            *c = (*c + (p - lead) * m % p) % p;
        }
    }
}

/// Remainder of `poly` modulo a monic `divisor`, trimmed of trailing zeros.
fn remainder(poly: &[u32], divisor: &[u32], p: u32) -> Vec<u32> {
    let mut r = poly.to_vec();
    reduce(&mut r, divisor, p);
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

/// Monic polynomials of exactly degree `d`, tails in lexicographic order.
fn monic_polys(p: u32, d: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = p.pow(d);
    (0..count).map(move |mut t| {
        let mut tail = vec![0; d as usize];
        for slot in tail.iter_mut().rev() {
            *slot = t % p;
            t /= p;
        }
        tail.push(1);
        tail
    })
}

pub(crate) fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let k = (poly.len() - 1) as u32;
    (1..=k / 2).all(|d| monic_polys(p, d).all(|f| !remainder(poly, &f, p).is_empty()))
}

/// Candidates are visited with the constant term as the most significant
/// comparison key, so the first irreducible hit is the lexicographic minimum.
fn least_irreducible(p: u32, k: u32) -> Vec<u32> {
    monic_polys(p, k)
        .find(|poly| is_irreducible(poly, p))
        .expect("irreducible polynomials exist in every degree")
}

/// An element bound to its field. Arithmetic between elements of different
/// fields is rejected.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f Field,
    code: u32,
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code && self.field == other.field
    }
}

impl Eq for FieldElement<'_> {}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})[{:?}]", self.field.q, self.coeffs())
    }
}

impl fmt::Display for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code)
    }
}

impl<'f> FieldElement<'f> {
    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn code(&self) -> u32 {
        self.code
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.code)
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.field, other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(Error::Input(format!(
                "operands from GF({}) and GF({})",
                self.field.q, other.field.q
            )))
        }
    }

    fn with(&self, code: u32) -> Self {
        FieldElement {
            field: self.field,
            code,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(self.code, other.code)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(self.code, other.code)))
    }

    pub fn neg(&self) -> Self {
        self.with(self.field.neg(self.code))
    }

    pub fn inv(&self) -> Result<Self> {
        self.field
            .inv(self.code)
            .map(|c| self.with(c))
            .ok_or_else(|| Error::Domain("zero has no multiplicative inverse".into()))
    }

    pub fn pow(&self, n: u64) -> Self {
        self.with(self.field.pow(self.code, n))
    }

    /// Least `n >= 1` with `self^n = 1`.
    pub fn unit_order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::Domain("zero is not a unit".into()));
        }
        let n = u64::from(self.field.q - 1);
        Ok(crate::util::divisors(n)
            .into_iter()
            .find(|&d| self.field.pow(self.code, d) == 1)
            .unwrap_or(n))
    }

    /// The p-power map `x -> x^p`.
    pub fn frobenius_map(&self) -> Self {
        self.pow(u64::from(self.field.p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_has_modulus_x() {
        let f = Field::new(3, 1).unwrap();
        assert_eq!(f.order(), 3);
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.mul(2, 2), 1);
        assert_eq!(f.add(2, 2), 1);
    }

    #[test]
    fn moduli_are_least_irreducible() {
        assert_eq!(Field::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        // x^2 + 1 splits over GF(5) since 2^2 = -1.
        assert_eq!(Field::new(5, 2).unwrap().modulus(), &[1, 1, 1]);
        // x^2 + 1 is irreducible over GF(3).
        assert_eq!(Field::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        for (p, k) in [(2, 3), (2, 4), (3, 4), (7, 2), (3, 3)] {
            let f = Field::new(p, k).unwrap();
            assert!(is_irreducible(f.modulus(), p));
        }
    }

    #[test]
    fn construction_is_deterministic() {
        let a = Field::new(3, 4).unwrap();
        let b = Field::new(3, 4).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.multiplicative_generator(), b.multiplicative_generator());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(Field::new(4, 1), Err(Error::Input(_))));
        assert!(matches!(Field::new(3, 0), Err(Error::Input(_))));
        assert!(matches!(Field::new(2, 21), Err(Error::Capacity { .. })));
        assert!(Field::new(2, 20).is_ok());
    }

    #[test]
    fn table_product_matches_schoolbook_product() {
        for (p, k) in [(2, 4), (3, 4), (5, 2), (7, 2), (2, 10), (3, 7)] {
            let f = Field::new(p, k).unwrap();
            let step = (f.order() / 97).max(1);
            for a in (0..f.order()).step_by(step as usize) {
                for b in 0..f.order() {
                    assert_eq!(f.mul(a, b), f.mul_poly(a, b), "GF({p}^{k}) {a}*{b}");
                }
            }
        }
    }

    #[test]
    fn additive_inverse_and_addition_table() {
        for (p, k) in [(3, 4), (5, 2), (7, 4)] {
            let f = Field::new(p, k).unwrap();
            for x in f.elements() {
                assert!(x.add(&x.neg()).unwrap().is_zero());
            }
            assert_eq!(f.add(f.sub(17, 5), 5), 17);
        }
    }

    #[test]
    fn units_of_gf81_have_order_dividing_80() {
        let f = Field::new(3, 4).unwrap();
        for g in f.elements().skip(1) {
            assert_eq!(g.pow(80), f.one());
            assert_eq!(80 % g.unit_order().unwrap(), 0);
        }
    }

    #[test]
    fn unit_orders() {
        let f25 = Field::new(5, 2).unwrap();
        let alpha = f25.multiplicative_generator();
        assert_eq!(alpha.unit_order().unwrap(), 24);
        assert_eq!(alpha.pow(24), f25.one());
        assert_eq!(alpha.pow(8).unit_order().unwrap(), 3);
        assert_eq!(f25.one().unit_order().unwrap(), 1);
        assert!(matches!(f25.zero().unit_order(), Err(Error::Domain(_))));

        let f4 = Field::new(2, 2).unwrap();
        for x in f4.elements().skip(2) {
            assert_eq!(x.unit_order().unwrap(), 3);
        }
        let f81 = Field::new(3, 4).unwrap();
        assert_eq!(f81.multiplicative_generator().unit_order().unwrap(), 80);
        assert_eq!(
            Field::new(2, 1).unwrap().multiplicative_generator().code(),
            1
        );
    }

    #[test]
    fn generator_is_least_primitive_and_enumerates_units() {
        for (p, k) in [(2, 2), (5, 2), (3, 4), (7, 2), (2, 8)] {
            let f = Field::new(p, k).unwrap();
            let g = f.multiplicative_generator();
            let n = u64::from(f.order() - 1);
            let first = f
                .elements()
                .skip(1)
                .find(|x| x.unit_order().unwrap() == n)
                .unwrap();
            assert_eq!(g, first);
            let mut seen = vec![false; f.order() as usize];
            for e in 0..n {
                let c = g.pow(e).code() as usize;
                assert!(!seen[c]);
                seen[c] = true;
            }
            assert!(!seen[0] && seen[1..].iter().all(|&s| s));
        }
    }

    #[test]
    fn inverse_of_zero_is_domain_error() {
        let f = Field::new(5, 2).unwrap();
        assert!(matches!(f.zero().inv(), Err(Error::Domain(_))));
        for x in f.elements().skip(1) {
            assert_eq!(x.mul(&x.inv().unwrap()).unwrap(), f.one());
        }
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = Field::new(5, 2).unwrap();
        let b = Field::new(3, 2).unwrap();
        let x = a.element(3).unwrap();
        let y = b.element(3).unwrap();
        assert!(matches!(x.add(&y), Err(Error::Input(_))));
        assert!(matches!(x.mul(&y), Err(Error::Input(_))));
        // Separately constructed copies of the same field interoperate.
        let a2 = Field::new(5, 2).unwrap();
        assert!(x.add(&a2.element(4).unwrap()).is_ok());
    }

    #[test]
    fn frobenius_map_in_gf25() {
        let f = Field::new(5, 2).unwrap();
        for x in f.elements() {
            assert_eq!(x.frobenius_map().frobenius_map(), x);
            assert_eq!(x.pow(25), x);
        }
        for c in 0..5 {
            let x = f.from_coeffs(&[c, 0]).unwrap();
            assert_eq!(x.frobenius_map(), x);
        }
        let beta = f.multiplicative_generator().pow(8);
        assert_eq!(beta.frobenius_map(), beta.pow(2));
        assert_eq!(beta.frobenius_map(), beta.inv().unwrap());
    }

    #[test]
    fn frobenius_map_is_a_field_automorphism() {
        for (p, k) in [(2, 4), (3, 2), (5, 2), (3, 4)] {
            let f = Field::new(p, k).unwrap();
            for x in f.elements() {
                for y in f.elements() {
                    let (fx, fy) = (x.frobenius_map(), y.frobenius_map());
                    assert_eq!(x.add(&y).unwrap().frobenius_map(), fx.add(&fy).unwrap());
                    assert_eq!(x.mul(&y).unwrap().frobenius_map(), fx.mul(&fy).unwrap());
                }
            }
            // Order exactly k.
            let order = (1..=k)
                .find(|&n| f.elements().all(|x| x.pow(u64::from(p).pow(n)) == x))
                .unwrap();
            assert_eq!(order, k);
        }
    }

    #[test]
    fn squares_are_half_the_units_in_odd_characteristic() {
        let f = Field::new(3, 2).unwrap();
        let squares = (1..9).filter(|&a| f.is_square(a)).count();
        assert_eq!(squares, 4);
        for a in 1..9 {
            assert_eq!(f.is_square(a), (1..9).any(|b| f.mul(b, b) == a));
        }
    }
}
