//! Finite fields `F_q`, `q = p^s` with `p` an odd prime.
//!
//! Elements are encoded as integers `c_0 + c_1 p + ... + c_{s-1} p^{s-1}` where
//! `c_i` are the coordinates in the power basis of the field modulus. This
//! encoding also fixes the canonical element order used for every
//! "smallest element" choice (primitive element, γ, roots).
//!
//! Fields up to `2^16` elements carry log/exp tables; larger fields (the
//! splitting fields holding roots of `x^n + 1`) fall back to schoolbook
//! arithmetic on the coordinate vectors.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::arith::{gcd, is_prime, multiplicative_order, prime_factors};
use crate::error::{param_err, Error, Result};

/// Integer encoding of a field element.
pub type Elem = u64;

const TABLE_LIMIT: u64 = 1 << 16;
const ADD_TABLE_LIMIT: u64 = 256;
const MAX_DEGREE: usize = 40;

/// A finite field of odd characteristic.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

struct Inner {
    p: u64,
    s: u32,
    q: u64,
    /// Monic, lowest degree first, length `s + 1`.
    modulus: Vec<u64>,
    generator: Elem,
    tables: Option<Tables>,
}

struct Tables {
    log: Vec<u32>,
    exp: Vec<u32>,
    add: Option<Vec<u32>>,
}

/// Binary and unary field operations, for callers that dispatch on an operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Pow(u64),
}

/// Serialized field description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldManifest {
    pub p: u64,
    pub s: u32,
    pub modulus: Vec<u64>,
    pub generator: Vec<u64>,
}

impl Field {
    /// Builds `F_{p^s}` with the lexicographically smallest monic irreducible
    /// modulus and the smallest primitive element.
    pub fn new(p: u64, s: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(param_err!("p = {p} is not prime"));
        }
        if p == 2 {
            return Err(param_err!("characteristic 2 is not supported"));
        }
        if s < 1 {
            return Err(param_err!("extension degree s must be at least 1"));
        }
        if s as usize > MAX_DEGREE {
            return Err(param_err!(
                "degree {s} exceeds the supported maximum {MAX_DEGREE}"
            ));
        }
        let q = p
            .checked_pow(s)
            .filter(|q| *q < (1u64 << 62))
            .ok_or_else(|| param_err!("field size {p}^{s} is too large"))?;
        let modulus = if s == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, s as usize)
        };
        let mut inner = Inner {
            p,
            s,
            q,
            modulus,
            generator: 0,
            tables: None,
        };
        inner.generator = find_generator(&inner);
        if q <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(Field {
            inner: Arc::new(inner),
        })
    }

    /// Builds `F_q` from a prime power `q`.
    pub fn from_order(q: u64) -> Result<Field> {
        let (p, s) = crate::arith::prime_power(q)
            .ok_or_else(|| param_err!("q = {q} is not a prime power"))?;
        Field::new(p, s)
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn s(&self) -> u32 {
        self.inner.s
    }

    pub fn q(&self) -> u64 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    /// The canonical primitive element.
    pub fn generator(&self) -> Elem {
        self.inner.generator
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    pub fn contains(&self, a: Elem) -> bool {
        a < self.inner.q
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.inner.q
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, a: i64) -> Elem {
        a.rem_euclid(self.inner.p as i64) as u64
    }

    /// Coordinates in the power basis, lowest first.
    pub fn coords(&self, a: Elem) -> Vec<u64> {
        let p = self.inner.p;
        let mut a = a;
        (0..self.inner.s)
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect()
    }

    pub fn from_coords(&self, coords: &[u64]) -> Result<Elem> {
        if coords.len() > self.inner.s as usize {
            return Err(param_err!("too many coordinates for F_{}", self.inner.q));
        }
        let p = self.inner.p;
        let mut acc = 0;
        for &c in coords.iter().rev() {
            if c >= p {
                return Err(param_err!("coordinate {c} not reduced mod {p}"));
            }
            acc = acc * p + c;
        }
        Ok(acc)
    }

    pub fn manifest(&self) -> FieldManifest {
        FieldManifest {
            p: self.inner.p,
            s: self.inner.s,
            modulus: self.inner.modulus.clone(),
            generator: self.coords(self.inner.generator),
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.inner;
        if inner.s == 1 {
            let c = a + b;
            return if c >= inner.p { c - inner.p } else { c };
        }
        if let Some(Tables { add: Some(t), .. }) = &inner.tables {
            return t[(a * inner.q + b) as usize] as Elem;
        }
        digitwise(inner.p, inner.s, a, b, |x, y, p| (x + y) % p)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let inner = &*self.inner;
        if inner.s == 1 {
            return if a == 0 { 0 } else { inner.p - a };
        }
        digitwise(inner.p, inner.s, a, 0, |x, _, p| (p - x) % p)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.inner;
        if inner.s == 1 {
            return if a >= b { a - b } else { a + inner.p - b };
        }
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.inner;
        if a == 0 || b == 0 {
            return 0;
        }
        if inner.s == 1 {
            return ((a as u128 * b as u128) % inner.p as u128) as Elem;
        }
        if let Some(t) = &inner.tables {
            let idx = t.log[a as usize] as usize + t.log[b as usize] as usize;
            return t.exp[idx] as Elem;
        }
        poly_mul_elem(inner, a, b)
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::Domain("inverse of zero".into()));
        }
        let inner = &*self.inner;
        if let Some(t) = &inner.tables {
            let l = t.log[a as usize] as u64;
            return Ok(t.exp[((inner.q - 1 - l) % (inner.q - 1)) as usize] as Elem);
        }
        Ok(self.pow(a, inner.q - 2))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let inner = &*self.inner;
        if let Some(t) = &inner.tables {
            let l = t.log[a as usize] as u128;
            let idx = (l * e as u128 % (inner.q - 1) as u128) as usize;
            return t.exp[idx] as Elem;
        }
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Applies `op` to `a` (and `b` for binary operators).
    pub fn arith(&self, op: Op, a: Elem, b: Elem) -> Result<Elem> {
        if !self.contains(a) || !self.contains(b) {
            return Err(param_err!("operand does not belong to F_{}", self.q()));
        }
        Ok(match op {
            Op::Add => self.add(a, b),
            Op::Sub => self.sub(a, b),
            Op::Mul => self.mul(a, b),
            Op::Div => self.div(a, b)?,
            Op::Neg => self.neg(a),
            Op::Inv => self.inv(a)?,
            Op::Pow(e) => self.pow(a, e),
        })
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elem) -> Option<u64> {
        if a == 0 {
            return None;
        }
        Some(element_order(self, a))
    }

    /// Square roots of `a` in canonical order.
    pub fn sqrt_all(&self, a: Elem) -> Vec<Elem> {
        self.elements().filter(|&x| self.mul(x, x) == a).collect()
    }

    /// Human-readable form: integers for prime fields, `a^k` powers of the
    /// generator otherwise.
    pub fn display(&self, a: Elem) -> String {
        if self.s() == 1 || a == 0 {
            return a.to_string();
        }
        let g = self.generator();
        let mut x = 1;
        for k in 0..self.q() - 1 {
            if x == a {
                return match k {
                    0 => "1".to_string(),
                    1 => "a".to_string(),
                    _ => format!("a^{k}"),
                };
            }
            x = self.mul(x, g);
        }
        unreachable!("generator is primitive")
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}(p={}, s={}, modulus={:?}, generator={:?})",
            self.inner.q,
            self.inner.p,
            self.inner.s,
            self.inner.modulus,
            self.coords(self.inner.generator)
        )
    }
}

fn digitwise(p: u64, s: u32, a: Elem, b: Elem, op: impl Fn(u64, u64, u64) -> u64) -> Elem {
    let (mut a, mut b) = (a, b);
    let mut out = 0;
    let mut scale = 1;
    for _ in 0..s {
        out += op(a % p, b % p, p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    out
}

fn poly_mul_elem(inner: &Inner, a: Elem, b: Elem) -> Elem {
    let p = inner.p;
    let s = inner.s as usize;
    let mut da = [0u64; MAX_DEGREE];
    let mut db = [0u64; MAX_DEGREE];
    let (mut x, mut y) = (a, b);
    for i in 0..s {
        da[i] = x % p;
        db[i] = y % p;
        x /= p;
        y /= p;
    }
    let mut prod = [0u64; 2 * MAX_DEGREE];
    for i in 0..s {
        if da[i] == 0 {
            continue;
        }
        for j in 0..s {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    let m = &inner.modulus;
    for top in (s..2 * s - 1).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        for j in 0..s {
            prod[top - s + j] = (prod[top - s + j] + (p - c) * m[j]) % p;
        }
        prod[top] = 0;
    }
    let mut out = 0;
    for i in (0..s).rev() {
        out = out * p + prod[i];
    }
    out
}

fn raw_mul(inner: &Inner, a: Elem, b: Elem) -> Elem {
    if a == 0 || b == 0 {
        0
    } else if inner.s == 1 {
        ((a as u128 * b as u128) % inner.p as u128) as Elem
    } else {
        poly_mul_elem(inner, a, b)
    }
}

fn raw_pow(inner: &Inner, a: Elem, mut e: u64) -> Elem {
    let mut base = a;
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = raw_mul(inner, acc, base);
        }
        base = raw_mul(inner, base, base);
        e >>= 1;
    }
    acc
}

fn element_order(field: &Field, a: Elem) -> u64 {
    let n = field.q() - 1;
    let mut order = n;
    for l in prime_factors(n) {
        while order.is_multiple_of(l) && field.pow(a, order / l) == 1 {
            order /= l;
        }
    }
    order
}

fn find_generator(inner: &Inner) -> Elem {
    let n = inner.q - 1;
    let factors = prime_factors(n);
    (1..inner.q)
        .find(|&a| factors.iter().all(|&l| raw_pow(inner, a, n / l) != 1))
        .expect("the multiplicative group of a finite field is cyclic")
}

fn build_tables(inner: &Inner) -> Tables {
    let q = inner.q as usize;
    let mut exp = vec![0u32; 2 * (q - 1)];
    let mut log = vec![0u32; q];
    let mut x = 1;
    for k in 0..q - 1 {
        exp[k] = x as u32;
        exp[k + q - 1] = x as u32;
        log[x as usize] = k as u32;
        x = raw_mul(inner, x, inner.generator);
    }
    let add = (inner.s > 1 && inner.q <= ADD_TABLE_LIMIT).then(|| {
        let mut t = vec![0u32; q * q];
        for a in 0..q {
            for b in 0..q {
                t[a * q + b] =
                    digitwise(inner.p, inner.s, a as u64, b as u64, |x, y, p| (x + y) % p) as u32;
            }
        }
        t
    });
    Tables { log, exp, add }
}

// Polynomials over F_p as coefficient vectors, used only to find moduli.

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_rem(mut a: Vec<u64>, f: &[u64], p: u64) -> Vec<u64> {
    let df = f.len() - 1;
    let lead_inv = crate::arith::mod_pow(f[df], p - 2, p);
    while a.len() > df {
        let top = a.len() - 1;
        let c = a[top] * lead_inv % p;
        if c != 0 {
            for (j, &fj) in f.iter().enumerate() {
                let idx = top - df + j;
                a[idx] = (a[idx] + (p - c) * fj) % p;
            }
        }
        a.pop();
        a = trim(a);
    }
    trim(a)
}

fn fp_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    fp_rem(prod, f, p)
}

fn fp_powmod(a: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut base = fp_rem(a.to_vec(), f, p);
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = fp_mulmod(&acc, &base, f, p);
        }
        base = fp_mulmod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

fn fp_gcd(a: Vec<u64>, b: Vec<u64>, p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = fp_rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn fp_sub_x(a: &[u64], p: u64) -> Vec<u64> {
    let mut out = a.to_vec();
    if out.len() < 2 {
        out.resize(2, 0);
    }
    out[1] = (out[1] + p - 1) % p;
    trim(out)
}

/// Rabin's irreducibility test for a monic polynomial over `F_p`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    let x = vec![0u64, 1];
    let mut frob = vec![x.clone()];
    for _ in 0..d {
        let next = fp_powmod(frob.last().unwrap(), p, f, p);
        frob.push(next);
    }
    if fp_rem(x, f, p) != frob[d] {
        return false;
    }
    prime_factors(d as u64).into_iter().all(|r| {
        let h = fp_sub_x(&frob[d / r as usize], p);
        fp_gcd(f.to_vec(), h, p).len() == 1
    })
}

/// Lexicographically smallest monic irreducible polynomial of degree `d`
/// over `F_p` (ordered by the integer encoding of the lower coefficients).
pub fn smallest_irreducible(p: u64, d: usize) -> Vec<u64> {
    let mut lower = 0u64;
    loop {
        let mut f = Vec::with_capacity(d + 1);
        let mut x = lower;
        for _ in 0..d {
            f.push(x % p);
            x /= p;
        }
        f.push(1);
        if (d == 1 || f[0] != 0) && is_irreducible(&f, p) {
            return f;
        }
        lower += 1;
    }
}

/// A field extension `F_{q^t} / F_q`, represented directly over `F_p`.
#[derive(Clone, Debug)]
pub struct Extension {
    base: Field,
    field: Field,
    degree: u32,
    embed: Vec<Elem>,
    restrict: HashMap<Elem, Elem>,
}

impl Extension {
    /// Builds `F_{q^t}` containing `base`.
    pub fn new(base: &Field, t: u32) -> Result<Extension> {
        if t < 1 {
            return Err(param_err!("extension degree must be at least 1"));
        }
        let field = if t == 1 {
            base.clone()
        } else {
            Field::new(base.p(), base.s() * t)?
        };
        let embed: Vec<Elem> = if t == 1 || base.s() == 1 {
            base.elements().collect()
        } else {
            // A root of the base modulus inside the subfield of order q.
            let h = field.pow(field.generator(), (field.q() - 1) / (base.q() - 1));
            let modulus = base.modulus();
            let beta = (0..base.q() - 1)
                .map(|j| field.pow(h, j))
                .find(|&b| {
                    let mut acc = 0;
                    for &c in modulus.iter().rev() {
                        acc = field.add(field.mul(acc, b), c);
                    }
                    acc == 0
                })
                .ok_or_else(|| {
                    Error::Consistency("base modulus has no root in extension".into())
                })?;
            base.elements()
                .map(|a| {
                    let mut acc = 0;
                    for &c in base.coords(a).iter().rev() {
                        acc = field.add(field.mul(acc, beta), c);
                    }
                    acc
                })
                .collect()
        };
        let restrict = embed
            .iter()
            .enumerate()
            .map(|(a, &b)| (b, a as Elem))
            .collect();
        Ok(Extension {
            base: base.clone(),
            field,
            degree: t,
            embed,
            restrict,
        })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Degree `t` over the base field.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn embed(&self, a: Elem) -> Elem {
        self.embed[a as usize]
    }

    /// Preimage of an extension element lying in the base field.
    pub fn restrict(&self, a: Elem) -> Option<Elem> {
        self.restrict.get(&a).copied()
    }

    /// Evaluates a base-field polynomial (lowest coefficient first) at an
    /// extension element.
    pub fn eval(&self, coeffs: &[Elem], x: Elem) -> Elem {
        let f = &self.field;
        coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), self.embed(c)))
    }
}

/// The smallest extension of `base` containing a primitive `k`-th root of
/// unity, together with such a root `δ` (a fixed power of the extension's
/// canonical generator).
pub fn root_of_unity(base: &Field, k: u64) -> Result<(Extension, Elem)> {
    if k == 0 || gcd(k, base.p()) != 1 {
        return Err(param_err!(
            "k = {k} must be positive and coprime to p = {}",
            base.p()
        ));
    }
    let t = multiplicative_order(base.q() % k, k) as u32;
    let ext = Extension::new(base, t)?;
    let f = ext.field();
    let delta = f.pow(f.generator(), (f.q() - 1) / k);
    Ok((ext, delta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_prime_fields() {
        let f5 = Field::new(5, 1).unwrap();
        // order check over all elements
        let primitive: Vec<_> = f5.elements().filter(|&a| f5.order(a) == Some(4)).collect();
        assert_eq!(primitive, vec![2, 3]);
        assert_eq!(f5.generator(), 2);
        assert_eq!(Field::new(3, 1).unwrap().generator(), 2);
        assert_eq!(f5.inv(3).unwrap(), 2);
        assert_eq!(Field::new(11, 1).unwrap().inv(10).unwrap(), 10);
    }

    #[test]
    fn f9_generator_is_primitive() {
        let f9 = Field::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        let g = f9.generator();
        assert_eq!(f9.order(g), Some(8));
        assert_eq!(f9.coords(g), vec![1, 1]);
        assert_eq!(f9.display(g), "a");
        assert_eq!(f9.display(f9.mul(g, g)), "a^2");
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(Field::new(4, 1), Err(Error::Parameter(_))));
        assert!(matches!(Field::new(2, 3), Err(Error::Parameter(_))));
        assert!(matches!(Field::new(5, 0), Err(Error::Parameter(_))));
        let f5 = Field::new(5, 1).unwrap();
        assert!(matches!(f5.inv(0), Err(Error::Domain(_))));
        assert!(matches!(f5.arith(Op::Add, 7, 1), Err(Error::Parameter(_))));
        assert!(matches!(root_of_unity(&f5, 10), Err(Error::Parameter(_))));
    }

    #[test]
    fn large_field_matches_table_arithmetic() {
        // F_{3^12} uses the untabled path, F_{3^4} the tabled one; both
        // must satisfy the same identities.
        for f in [Field::new(3, 4).unwrap(), Field::new(3, 12).unwrap()] {
            let g = f.generator();
            let n = f.q() - 1;
            assert_eq!(f.pow(g, n), 1);
            for l in prime_factors(n) {
                assert_ne!(f.pow(g, n / l), 1);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for _ in 0..100 {
                let a = rng.gen_range(1..f.q());
                let b = rng.gen_range(0..f.q());
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                assert_eq!(f.sub(f.add(a, b), b), a);
                let (i, j) = (rng.gen_range(0..50), rng.gen_range(0..50));
                assert_eq!(f.mul(f.pow(a, i), f.pow(a, j)), f.pow(a, i + j));
            }
        }
    }

    #[test]
    fn roots_of_unity() {
        let f5 = Field::new(5, 1).unwrap();
        let (ext, d) = root_of_unity(&f5, 4).unwrap();
        assert_eq!(ext.degree(), 1);
        assert_eq!(d, 2);
        let (ext, d) = root_of_unity(&f5, 12).unwrap();
        assert_eq!(ext.degree(), 2);
        assert_eq!(ext.field().order(d), Some(12));
        let (_, d) = root_of_unity(&f5, 1).unwrap();
        assert_eq!(d, 1);
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let f9 = Field::new(3, 2).unwrap();
        let ext = Extension::new(&f9, 3).unwrap();
        let big = ext.field();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let a = rng.gen_range(0..9);
            let b = rng.gen_range(0..9);
            assert_eq!(ext.embed(f9.add(a, b)), big.add(ext.embed(a), ext.embed(b)));
            assert_eq!(ext.embed(f9.mul(a, b)), big.mul(ext.embed(a), ext.embed(b)));
            assert_eq!(ext.restrict(ext.embed(a)), Some(a));
        }
    }
}
