//! The quotient ring `F_q[x]/<x^n + 1>` for even `n` coprime to `q`: factor
//! structure of `x^n + 1` through cyclotomic cosets, idempotent generators,
//! multipliers, duals and the even-like test.

use serde::Serialize;

use crate::arith::{gcd, rem_euclid};
use crate::cosets::{cyclotomic_cosets, CosetTable};
use crate::error::{consistency_err, param_err, Result};
use crate::gf::{root_of_unity, Elem, Extension, Field};
use crate::poly::Poly;

/// A set of odd residues mod `2n` (exponents `i` with `δ^i` a root).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct DefiningSet {
    n: usize,
    elems: Vec<u64>,
}

impl DefiningSet {
    pub fn new(n: usize, elems: impl IntoIterator<Item = u64>) -> Result<DefiningSet> {
        let mut elems: Vec<u64> = elems.into_iter().collect();
        elems.sort_unstable();
        elems.dedup();
        if let Some(&bad) = elems.iter().find(|&&a| a % 2 == 0 || a >= 2 * n as u64) {
            return Err(param_err!("{bad} is not an odd residue mod {}", 2 * n));
        }
        Ok(DefiningSet { n, elems })
    }

    pub fn empty(n: usize) -> DefiningSet {
        DefiningSet {
            n,
            elems: Vec::new(),
        }
    }

    /// All of `O_{2n}`.
    pub fn full(n: usize) -> DefiningSet {
        DefiningSet {
            n,
            elems: (1..2 * n as u64).step_by(2).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elems(&self) -> &[u64] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, a: u64) -> bool {
        self.elems.binary_search(&a).is_ok()
    }

    pub fn union(&self, other: &DefiningSet) -> DefiningSet {
        DefiningSet::new(self.n, self.elems.iter().chain(&other.elems).copied())
            .expect("both operands are valid")
    }
}

/// Negacyclic BCH bound: one more than the longest cyclic run of
/// consecutive odd residues contained in `t`.
pub fn bch_bound(t: &DefiningSet) -> usize {
    let n = t.n();
    let member: Vec<bool> = (0..n).map(|k| t.contains(2 * k as u64 + 1)).collect();
    if member.iter().all(|&m| m) {
        return n + 1;
    }
    let mut best = 0;
    let mut run = 0;
    for k in 0..2 * n {
        if member[k % n] {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    best + 1
}

/// `∏_{i ∈ coset} (x - δ^i)`, brought back to the base field.
pub fn minimal_polynomial(coset: &[u64], ext: &Extension, delta: Elem) -> Result<Poly> {
    let big = ext.field();
    let mut prod: Vec<Elem> = vec![1];
    for &i in coset {
        let root = big.neg(big.pow(delta, i));
        let mut next = vec![0; prod.len() + 1];
        for (j, &c) in prod.iter().enumerate() {
            next[j + 1] = big.add(next[j + 1], c);
            next[j] = big.add(next[j], big.mul(c, root));
        }
        prod = next;
    }
    let coeffs = prod
        .iter()
        .map(|&c| {
            ext.restrict(c).ok_or_else(|| {
                consistency_err!("{coset:?} is not closed under multiplication by q")
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

/// `F_q[x]/<x^n + 1>` together with the data needed to factor `x^n + 1`.
#[derive(Clone, Debug)]
pub struct Negacyclic {
    field: Field,
    n: usize,
    table: CosetTable,
    ext: Extension,
    delta: Elem,
    minimal: Vec<Poly>,
    modulus: Poly,
}

impl Negacyclic {
    pub fn new(field: &Field, n: usize) -> Result<Negacyclic> {
        let table = cyclotomic_cosets(field.q(), n)?;
        let (ext, delta) = root_of_unity(field, 2 * n as u64)?;
        let minimal = table
            .cosets()
            .iter()
            .map(|c| minimal_polynomial(c, &ext, delta))
            .collect::<Result<Vec<_>>>()?;
        let mut modulus = vec![0; n + 1];
        modulus[0] = 1;
        modulus[n] = 1;
        Ok(Negacyclic {
            field: field.clone(),
            n,
            table,
            ext,
            delta,
            minimal,
            modulus: Poly::new(modulus),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cosets(&self) -> &CosetTable {
        &self.table
    }

    pub fn extension(&self) -> &Extension {
        &self.ext
    }

    /// The primitive `2n`-th root of unity `δ` in the extension field.
    pub fn delta(&self) -> Elem {
        self.delta
    }

    /// Minimal polynomial of the coset with the given table index.
    pub fn coset_minimal_polynomial(&self, index: usize) -> &Poly {
        &self.minimal[index]
    }

    /// `x^n + 1`.
    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// Reduction modulo `x^n + 1`.
    pub fn reduce(&self, a: &Poly) -> Poly {
        let f = &self.field;
        let mut out = vec![0; self.n];
        for (i, &c) in a.coeffs().iter().enumerate() {
            if c == 0 {
                continue;
            }
            let j = i % self.n;
            out[j] = if (i / self.n).is_multiple_of(2) {
                f.add(out[j], c)
            } else {
                f.sub(out[j], c)
            };
        }
        Poly::new(out)
    }

    /// Product in the quotient ring.
    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&a.mul(b, &self.field))
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b, &self.field)
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        a.sub(b, &self.field)
    }

    pub fn is_idempotent(&self, e: &Poly) -> bool {
        let e = self.reduce(e);
        self.mul(&e, &e) == e
    }

    fn check_closed(&self, t: &DefiningSet) -> Result<()> {
        if t.n() != self.n {
            return Err(param_err!(
                "defining set is for length {}, not {}",
                t.n(),
                self.n
            ));
        }
        if !self.table.is_union_of_cosets(t.elems()) {
            return Err(consistency_err!(
                "{:?} is not a union of cyclotomic cosets",
                t.elems()
            ));
        }
        Ok(())
    }

    fn cosets_in(&self, t: &DefiningSet) -> impl Iterator<Item = usize> + '_ {
        let t = t.clone();
        (0..self.table.len()).filter(move |&i| t.contains(self.table.cosets()[i][0]))
    }

    /// Monic generator `∏_{C ⊆ T} m_C(x)` of the code with defining set `t`.
    pub fn generator(&self, t: &DefiningSet) -> Result<Poly> {
        self.check_closed(t)?;
        Ok(self
            .cosets_in(t)
            .fold(Poly::one(), |acc, i| acc.mul(&self.minimal[i], &self.field)))
    }

    /// Idempotent generator of the code with defining set `t`, via the
    /// Bézout identity `a·g + b·h = 1`, `g h = x^n + 1`: `e = a·g`.
    pub fn idempotent(&self, t: &DefiningSet) -> Result<Poly> {
        let f = &self.field;
        let g = self.generator(t)?;
        let (h, r) = self.modulus.div_rem(&g, f)?;
        debug_assert!(r.is_zero());
        let (d, a, _) = g.ext_gcd(&h, f);
        if d != Poly::one() {
            return Err(consistency_err!(
                "generator and check polynomial are not coprime"
            ));
        }
        Ok(self.reduce(&a.mul(&g, f)))
    }

    /// Monic generator `gcd(e, x^n + 1)` of the ideal generated by `e`.
    pub fn generator_of(&self, e: &Poly) -> Poly {
        self.reduce(e).gcd(&self.modulus, &self.field)
    }

    /// Defining set of the code generated by a divisor (or any element) `g`:
    /// the cosets whose minimal polynomial divides `gcd(g, x^n + 1)`.
    pub fn defining_set_of(&self, g: &Poly) -> DefiningSet {
        let g = self.generator_of(g);
        let f = &self.field;
        let elems = (0..self.table.len())
            .filter(|&i| {
                g.rem(&self.minimal[i], f)
                    .map(|r| r.is_zero())
                    .unwrap_or(false)
            })
            .flat_map(|i| self.table.cosets()[i].iter().copied());
        DefiningSet::new(self.n, elems).expect("cosets are odd residues")
    }

    /// `μ_s(a) = a(x^s) mod x^n + 1`.
    pub fn apply_multiplier(&self, a: &Poly, s: i64) -> Result<Poly> {
        let two_n = 2 * self.n as u64;
        let s = rem_euclid(s, two_n);
        if gcd(s, two_n) != 1 {
            return Err(param_err!("multiplier {s} is not coprime to {two_n}"));
        }
        let f = &self.field;
        let mut out = vec![0; self.n];
        for (i, &c) in self.reduce(a).coeffs().iter().enumerate() {
            let j = (s * i as u64 % two_n) as usize;
            if j < self.n {
                out[j] = f.add(out[j], c);
            } else {
                out[j - self.n] = f.sub(out[j - self.n], c);
            }
        }
        Ok(Poly::new(out))
    }

    /// Monic reciprocal of `h = (x^n + 1)/g`; generates the dual of `<g>`.
    pub fn dual_generator(&self, g: &Poly) -> Result<Poly> {
        let f = &self.field;
        if g.is_zero() {
            return Err(param_err!("the zero polynomial does not divide x^n + 1"));
        }
        let (h, r) = self.modulus.div_rem(g, f)?;
        if !r.is_zero() {
            return Err(param_err!("generator does not divide x^{} + 1", self.n));
        }
        Ok(h.reciprocal().monic(f))
    }

    /// Both alternating sums `c_0 - c_2 + ...` and `c_1 - c_3 + ...` vanish.
    pub fn even_like(&self, c: &Poly) -> bool {
        let f = &self.field;
        let c = self.reduce(c);
        let mut sums = [0, 0];
        for (i, &x) in c.coeffs().iter().enumerate() {
            let term = if (i / 2) % 2 == 0 { x } else { f.neg(x) };
            sums[i % 2] = f.add(sums[i % 2], term);
        }
        sums == [0, 0]
    }

    /// `p(x) = (x^n + 1)/(x^2 + 1) = 1 - x^2 + x^4 - ... + x^{n-2}`.
    pub fn p_poly(&self) -> Result<Poly> {
        if self.n % 4 != 2 {
            return Err(param_err!(
                "x^2 + 1 divides x^n + 1 only for n ≡ 2 mod 4 (n = {})",
                self.n
            ));
        }
        let f = &self.field;
        let mut coeffs = vec![0; self.n - 1];
        for j in 0..self.n / 2 {
            coeffs[2 * j] = if j % 2 == 0 { 1 } else { f.neg(1) };
        }
        Ok(Poly::new(coeffs))
    }

    /// The idempotent `p̄ = (2/n) p(x)`.
    pub fn pbar(&self) -> Result<Poly> {
        let f = &self.field;
        let scale = f.div(2, f.from_int(self.n as i64))?;
        Ok(self.p_poly()?.scale(scale, f))
    }

    /// `c(δ^i)` in the extension field.
    pub fn eval_at_root(&self, c: &Poly, i: u64) -> Elem {
        let big = self.ext.field();
        self.ext.eval(c.coeffs(), big.pow(self.delta, i))
    }

    /// Basis `x^j g(x)`, `0 <= j < n - deg g`, as length-`n` rows.
    pub fn generator_rows(&self, g: &Poly) -> Vec<Vec<Elem>> {
        let deg = g.degree().unwrap_or(self.n);
        (0..self.n.saturating_sub(deg))
            .map(|j| {
                let mut row = vec![0; self.n];
                for (i, &c) in g.coeffs().iter().enumerate() {
                    row[i + j] = c;
                }
                row
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(q: u64, n: usize) -> Negacyclic {
        Negacyclic::new(&Field::from_order(q).unwrap(), n).unwrap()
    }

    #[test]
    fn nmul_examples() {
        let r = ring(5, 2);
        let a = Poly::new(vec![3, 1]);
        assert_eq!(r.mul(&Poly::one(), &a), a);
        assert!(r.mul(&a, &Poly::new(vec![3, 4])).is_zero());
        let r6 = ring(5, 6);
        let x = Poly::monomial(1, 1);
        let x5 = Poly::monomial(1, 5);
        assert_eq!(r6.mul(&x, &x5), Poly::constant(4));
    }

    #[test]
    fn minimal_polynomials() {
        let r = ring(5, 2);
        assert_eq!(r.delta(), 2);
        assert_eq!(
            minimal_polynomial(&[], r.extension(), r.delta()).unwrap(),
            Poly::one()
        );
        assert_eq!(
            minimal_polynomial(&[1], r.extension(), r.delta()).unwrap(),
            Poly::new(vec![3, 1])
        );
        let r6 = ring(5, 6);
        let m = minimal_polynomial(&[1, 5], r6.extension(), r6.delta()).unwrap();
        assert_eq!(m.degree(), Some(2));
        assert!(r6.modulus().rem(&m, r6.field()).unwrap().is_zero());
        assert!(minimal_polynomial(&[1], r6.extension(), r6.delta()).is_err());
    }

    #[test]
    fn product_of_minimal_polynomials_is_modulus() {
        for (q, n) in [(3, 10), (5, 6), (9, 4), (13, 6), (7, 10), (11, 10), (3, 22)] {
            let r = ring(q, n);
            let prod = (0..r.cosets().len()).fold(Poly::one(), |acc, i| {
                acc.mul(r.coset_minimal_polynomial(i), r.field())
            });
            assert_eq!(&prod, r.modulus(), "q = {q}, n = {n}");
        }
    }

    #[test]
    fn idempotent_examples() {
        let r = ring(5, 2);
        assert_eq!(r.idempotent(&DefiningSet::empty(2)).unwrap(), Poly::one());
        assert!(r.idempotent(&DefiningSet::full(2)).unwrap().is_zero());
        let e = r.idempotent(&DefiningSet::new(2, [1]).unwrap()).unwrap();
        assert_eq!(e, Poly::new(vec![3, 1]));
        assert!(r.is_idempotent(&e));
        let r6 = ring(5, 6);
        let bad = DefiningSet::new(6, [1]).unwrap();
        assert!(matches!(
            r6.idempotent(&bad),
            Err(crate::Error::Consistency(_))
        ));
    }

    #[test]
    fn multiplier_examples() {
        let r = ring(5, 2);
        let a = Poly::new(vec![3, 1]);
        assert_eq!(r.apply_multiplier(&a, 1).unwrap(), a);
        assert_eq!(r.apply_multiplier(&a, -1).unwrap(), Poly::new(vec![3, 4]));
        assert!(r.apply_multiplier(&a, 2).is_err());
    }

    #[test]
    fn dual_generator_examples() {
        let r = ring(5, 2);
        assert_eq!(r.dual_generator(&Poly::one()).unwrap(), r.modulus().clone());
        let g = Poly::new(vec![3, 1]);
        assert_eq!(r.dual_generator(&g).unwrap(), g);
        assert!(r.dual_generator(&Poly::new(vec![1, 1])).is_err());
    }

    #[test]
    fn even_like_examples() {
        let r = ring(5, 6);
        assert!(r.even_like(&Poly::new(vec![1, 0, 1])));
        assert!(!r.even_like(&Poly::one()));
        let p = r.p_poly().unwrap();
        assert_eq!(p, Poly::new(vec![1, 0, 4, 0, 1]));
        assert!(!r.even_like(&p));
    }

    #[test]
    fn bch_examples() {
        assert_eq!(bch_bound(&DefiningSet::empty(4)), 1);
        assert_eq!(bch_bound(&DefiningSet::new(4, [1, 3]).unwrap()), 3);
        assert_eq!(bch_bound(&DefiningSet::new(6, [1, 5]).unwrap()), 2);
        // wraps around: 11, 1 are consecutive odd residues mod 12
        assert_eq!(bch_bound(&DefiningSet::new(6, [1, 11]).unwrap()), 3);
    }

    #[test]
    fn pbar_is_idempotent_of_dimension_two() {
        for (q, n) in [(3, 10), (5, 6), (13, 6), (7, 10), (11, 26)] {
            let r = ring(q, n);
            let pbar = r.pbar().unwrap();
            assert!(r.is_idempotent(&pbar));
            let g = r.generator_of(&pbar);
            assert_eq!(n - g.degree().unwrap(), 2);
        }
    }
}
