//! The ring `R = F_q[u]/<f(u)>` with `f = ∏ (u - α_i)` for distinct `α_i`,
//! its orthogonal idempotents `η_i`, and polynomials over `R` modulo
//! `x^n + 1`, kept in CRT form (one polynomial over `F_q` per root).

use serde::Serialize;

use crate::error::{consistency_err, param_err, Result};
use crate::gf::{Elem, Field, FieldManifest};
use crate::negacyclic::Negacyclic;
use crate::poly::Poly;

#[derive(Clone, Debug)]
pub struct RingSpec {
    field: Field,
    roots: Vec<Elem>,
    f: Poly,
    etas: Vec<Poly>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RingManifest {
    pub field: FieldManifest,
    pub roots: Vec<Vec<u64>>,
    pub f: Vec<Vec<u64>>,
    pub etas: Vec<Vec<Vec<u64>>>,
}

/// An element of `R`, held in both coefficient and evaluation form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    u_coeffs: Vec<Elem>,
    crt: Vec<Elem>,
}

impl RingElement {
    /// Coefficients of `1, u, ..., u^{m-1}`.
    pub fn u_coeffs(&self) -> &[Elem] {
        &self.u_coeffs
    }

    /// Values `r(α_i)`.
    pub fn crt(&self) -> &[Elem] {
        &self.crt
    }
}

impl RingSpec {
    pub fn new(field: &Field, roots: &[Elem]) -> Result<RingSpec> {
        let m = roots.len();
        if m < 2 {
            return Err(param_err!(
                "f(u) needs at least two linear factors, got {m}"
            ));
        }
        if let Some(&r) = roots.iter().find(|&&r| !field.contains(r)) {
            return Err(param_err!("root {r} is not an element of F_{}", field.q()));
        }
        for i in 0..m {
            if roots[..i].contains(&roots[i]) {
                return Err(param_err!(
                    "repeated root {}: f(u) must split into distinct linear factors",
                    field.display(roots[i])
                ));
            }
        }
        let f = roots.iter().fold(Poly::one(), |acc, &r| {
            acc.mul(&Poly::new(vec![field.neg(r), 1]), field)
        });
        // η_i(u) = ∏_{j≠i} (u - α_j)/(α_i - α_j)
        let etas = (0..m)
            .map(|i| {
                let mut num = Poly::one();
                let mut den = field.one();
                for j in (0..m).filter(|&j| j != i) {
                    num = num.mul(&Poly::new(vec![field.neg(roots[j]), 1]), field);
                    den = field.mul(den, field.sub(roots[i], roots[j]));
                }
                num.scale(field.inv(den).expect("roots are distinct"), field)
            })
            .collect();
        let ring = RingSpec {
            field: field.clone(),
            roots: roots.to_vec(),
            f,
            etas,
        };
        ring.check_idempotents()?;
        Ok(ring)
    }

    fn check_idempotents(&self) -> Result<()> {
        let fld = &self.field;
        let mut sum = Poly::zero();
        for (i, ei) in self.etas.iter().enumerate() {
            for (j, ej) in self.etas.iter().enumerate() {
                let prod = self.mul_u(ei, ej);
                let expect = if i == j { ei.clone() } else { Poly::zero() };
                if prod != expect {
                    return Err(consistency_err!(
                        "η_{} η_{} has the wrong value",
                        i + 1,
                        j + 1
                    ));
                }
            }
            sum = sum.add(ei, fld);
        }
        if sum != Poly::one() {
            return Err(consistency_err!("the η_i do not sum to 1"));
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Elem] {
        &self.roots
    }

    /// `f(u) = ∏ (u - α_i)`.
    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn etas(&self) -> &[Poly] {
        &self.etas
    }

    /// Product of two polynomials in `u`, reduced mod `f(u)`.
    pub fn mul_u(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul(b, &self.field)
            .rem(&self.f, &self.field)
            .expect("f is monic")
    }

    /// The element with the given `u`-coefficients (reduced mod `f`).
    pub fn element(&self, u_coeffs: &[Elem]) -> RingElement {
        let p = Poly::new(u_coeffs.to_vec())
            .rem(&self.f, &self.field)
            .expect("f is monic");
        let crt = self.roots.iter().map(|&r| p.eval(r, &self.field)).collect();
        RingElement {
            u_coeffs: p.to_vec(self.m()),
            crt,
        }
    }

    /// `a_i = r(α_i)`.
    pub fn decompose(&self, r: &RingElement) -> Vec<Elem> {
        r.crt.clone()
    }

    /// `Σ η_i a_i`.
    pub fn compose(&self, a: &[Elem]) -> Result<RingElement> {
        if a.len() != self.m() {
            return Err(param_err!(
                "expected {} components, got {}",
                self.m(),
                a.len()
            ));
        }
        let fld = &self.field;
        let p = self.etas.iter().zip(a).fold(Poly::zero(), |acc, (e, &ai)| {
            acc.add(&e.scale(ai, fld), fld)
        });
        Ok(RingElement {
            u_coeffs: p.to_vec(self.m()),
            crt: a.to_vec(),
        })
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let crt: Vec<Elem> = a
            .crt
            .iter()
            .zip(&b.crt)
            .map(|(&x, &y)| self.field.mul(x, y))
            .collect();
        self.compose(&crt).expect("component counts agree")
    }

    pub fn manifest(&self) -> RingManifest {
        let fld = &self.field;
        RingManifest {
            field: fld.manifest(),
            roots: self.roots.iter().map(|&r| fld.coords(r)).collect(),
            f: self.f.coord_vectors(fld),
            etas: self.etas.iter().map(|e| e.coord_vectors(fld)).collect(),
        }
    }
}

/// A polynomial over `R` of degree `< n`, stored as its `m` CRT components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingPoly {
    components: Vec<Poly>,
}

impl RingPoly {
    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn m(&self) -> usize {
        self.components.len()
    }
}

/// `R_n = R[x]/<x^n + 1>`.
#[derive(Clone, Debug)]
pub struct RingN {
    ring: RingSpec,
    nega: Negacyclic,
}

impl RingN {
    pub fn new(ring: &RingSpec, n: usize) -> Result<RingN> {
        let nega = Negacyclic::new(ring.field(), n)?;
        Ok(RingN {
            ring: ring.clone(),
            nega,
        })
    }

    pub fn from_parts(ring: &RingSpec, nega: &Negacyclic) -> Result<RingN> {
        if ring.field() != nega.field() {
            return Err(param_err!("ring and quotient are over different fields"));
        }
        Ok(RingN {
            ring: ring.clone(),
            nega: nega.clone(),
        })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn nega(&self) -> &Negacyclic {
        &self.nega
    }

    pub fn n(&self) -> usize {
        self.nega.n()
    }

    pub fn m(&self) -> usize {
        self.ring.m()
    }

    /// Builds from CRT components, reducing each mod `x^n + 1`.
    pub fn from_components(&self, components: Vec<Poly>) -> Result<RingPoly> {
        if components.len() != self.m() {
            return Err(param_err!(
                "expected {} components, got {}",
                self.m(),
                components.len()
            ));
        }
        Ok(RingPoly {
            components: components.iter().map(|c| self.nega.reduce(c)).collect(),
        })
    }

    /// Builds from `R`-coefficients of `1, x, ..., x^{n-1}`.
    pub fn from_coefficients(&self, coeffs: &[RingElement]) -> Result<RingPoly> {
        if coeffs.len() > self.n() {
            return Err(param_err!(
                "{} coefficients exceed length {}",
                coeffs.len(),
                self.n()
            ));
        }
        let components = (0..self.m())
            .map(|i| Poly::new(coeffs.iter().map(|c| c.crt[i]).collect()))
            .collect();
        self.from_components(components)
    }

    /// `R`-coefficients of `1, x, ..., x^{n-1}`.
    pub fn coefficients(&self, a: &RingPoly) -> Vec<RingElement> {
        (0..self.n())
            .map(|j| {
                let crt: Vec<Elem> = a.components.iter().map(|c| c.coeff(j)).collect();
                self.ring.compose(&crt).expect("component counts agree")
            })
            .collect()
    }

    /// A polynomial over `F_q` viewed in `R_n` (the same value in every component).
    pub fn scalar(&self, p: &Poly) -> RingPoly {
        RingPoly {
            components: vec![self.nega.reduce(p); self.m()],
        }
    }

    pub fn one(&self) -> RingPoly {
        self.scalar(&Poly::one())
    }

    pub fn zero(&self) -> RingPoly {
        self.scalar(&Poly::zero())
    }

    /// `Σ η_i E_i`; idempotent whenever every `E_i` is.
    pub fn lift(&self, parts: &[Poly]) -> Result<RingPoly> {
        self.from_components(parts.to_vec())
    }

    fn check(&self, a: &RingPoly) -> Result<()> {
        if a.m() != self.m() {
            return Err(param_err!(
                "operand has {} components, ring has {}",
                a.m(),
                self.m()
            ));
        }
        Ok(())
    }

    fn zip(
        &self,
        a: &RingPoly,
        b: &RingPoly,
        op: impl Fn(&Poly, &Poly) -> Poly,
    ) -> Result<RingPoly> {
        self.check(a)?;
        self.check(b)?;
        Ok(RingPoly {
            components: a
                .components
                .iter()
                .zip(&b.components)
                .map(|(x, y)| op(x, y))
                .collect(),
        })
    }

    pub fn mul(&self, a: &RingPoly, b: &RingPoly) -> Result<RingPoly> {
        self.zip(a, b, |x, y| self.nega.mul(x, y))
    }

    pub fn add(&self, a: &RingPoly, b: &RingPoly) -> Result<RingPoly> {
        self.zip(a, b, |x, y| self.nega.add(x, y))
    }

    pub fn sub(&self, a: &RingPoly, b: &RingPoly) -> Result<RingPoly> {
        self.zip(a, b, |x, y| self.nega.sub(x, y))
    }

    pub fn is_idempotent(&self, a: &RingPoly) -> bool {
        a.m() == self.m() && a.components.iter().all(|c| self.nega.is_idempotent(c))
    }

    pub fn apply_multiplier(&self, a: &RingPoly, s: i64) -> Result<RingPoly> {
        self.check(a)?;
        Ok(RingPoly {
            components: a
                .components
                .iter()
                .map(|c| self.nega.apply_multiplier(c, s))
                .collect::<Result<_>>()?,
        })
    }

    /// `Σ_{i ∈ subset} η_i` (subset indices start at 1).
    pub fn eta_sum(&self, subset: &[usize]) -> Result<RingPoly> {
        check_subset(subset, self.m())?;
        let components = (1..=self.m())
            .map(|i| Poly::constant(u64::from(subset.contains(&i))))
            .collect();
        Ok(RingPoly { components })
    }

    /// Product computed coefficientwise in `R` (schoolbook with `x^n = -1`),
    /// independent of the CRT shortcut used by [`RingN::mul`].
    pub fn mul_schoolbook(&self, a: &RingPoly, b: &RingPoly) -> Result<RingPoly> {
        self.check(a)?;
        self.check(b)?;
        let fld = self.ring.field();
        let (ca, cb) = (self.coefficients(a), self.coefficients(b));
        let n = self.n();
        let mut out: Vec<Poly> = vec![Poly::zero(); n];
        for (i, x) in ca.iter().enumerate() {
            for (j, y) in cb.iter().enumerate() {
                let prod = self.ring.mul_u(
                    &Poly::new(x.u_coeffs.clone()),
                    &Poly::new(y.u_coeffs.clone()),
                );
                let k = (i + j) % n;
                out[k] = if i + j < n {
                    out[k].add(&prod, fld)
                } else {
                    out[k].sub(&prod, fld)
                };
            }
        }
        let coeffs: Vec<RingElement> = out.iter().map(|p| self.ring.element(p.coeffs())).collect();
        self.from_coefficients(&coeffs)
    }
}

pub(crate) fn check_subset(subset: &[usize], m: usize) -> Result<()> {
    if subset.is_empty() {
        return Err(param_err!("subset must be nonempty"));
    }
    if let Some(&i) = subset.iter().find(|&&i| i == 0 || i > m) {
        return Err(param_err!("subset index {i} outside 1..={m}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_examples() {
        let f5 = Field::new(5, 1).unwrap();
        let r = RingSpec::new(&f5, &[2, 4]).unwrap();
        assert_eq!(r.etas(), &[Poly::new(vec![2, 2]), Poly::new(vec![4, 3])]);
        let f3 = Field::new(3, 1).unwrap();
        let r = RingSpec::new(&f3, &[0, 2]).unwrap();
        assert_eq!(r.etas(), &[Poly::new(vec![1, 1]), Poly::new(vec![0, 2])]);
        assert_eq!(r.f(), &Poly::new(vec![0, 1, 1]));
    }

    #[test]
    fn crt_examples() {
        let f3 = Field::new(3, 1).unwrap();
        let r = RingSpec::new(&f3, &[0, 2]).unwrap();
        assert_eq!(r.decompose(&r.element(&[1])), vec![1, 1]);
        assert_eq!(r.decompose(&r.element(r.etas()[0].coeffs())), vec![1, 0]);
        let x = r.element(&[1, 2]);
        assert_eq!(r.decompose(&x), vec![1, 2]);
        assert_eq!(r.compose(&[1, 2]).unwrap(), x);
    }

    #[test]
    fn bad_rings() {
        let f5 = Field::new(5, 1).unwrap();
        assert!(RingSpec::new(&f5, &[2, 2]).is_err());
        assert!(RingSpec::new(&f5, &[2]).is_err());
        assert!(RingSpec::new(&f5, &[2, 7]).is_err());
    }

    #[test]
    fn orthogonal_lifts_multiply_to_zero() {
        let f5 = Field::new(5, 1).unwrap();
        let r = RingSpec::new(&f5, &[2, 3, 4]).unwrap();
        let rn = RingN::new(&r, 6).unwrap();
        let a = rn.scalar(&Poly::new(vec![1, 2, 3]));
        let b = rn.scalar(&Poly::new(vec![4, 0, 1, 1]));
        let ea = rn.mul(&rn.eta_sum(&[1]).unwrap(), &a).unwrap();
        let eb = rn.mul(&rn.eta_sum(&[2]).unwrap(), &b).unwrap();
        assert_eq!(rn.mul(&ea, &eb).unwrap(), rn.zero());
        assert_eq!(rn.mul(&rn.one(), &a).unwrap(), a);
        let other = RingN::new(&RingSpec::new(&f5, &[2, 3]).unwrap(), 6).unwrap();
        assert!(rn.mul(&a, &other.one()).is_err());
    }
}
