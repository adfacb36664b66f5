//! Duadic objects: the base idempotents over `F_q` attached to a splitting,
//! their lifts to `R_n`, the resulting codes over `R`, and the extended
//! odd-like codes of length `n + 2`.

use serde::Serialize;

use crate::code::{CrtCode, LinearCode};
use crate::cosets::{SplitKind, Splitting};
use crate::error::{consistency_err, param_err, Error, Result};
use crate::gf::{Elem, Field};
use crate::negacyclic::{DefiningSet, Negacyclic};
use crate::poly::Poly;
use crate::ring::{check_subset, RingN, RingPoly};

fn defining_set(n: usize, parts: &[&[u64]]) -> DefiningSet {
    DefiningSet::new(n, parts.iter().flat_map(|p| p.iter().copied()))
        .expect("splitting parts are odd residues")
}

fn ensure(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(consistency_err!("{what} does not hold"))
    }
}

/// `f1`, `f2`: idempotents of the codes with defining sets `A` and `B`.
#[derive(Clone, Debug)]
pub struct TypeIPair {
    pub f1: Poly,
    pub f2: Poly,
    pub splitting: Splitting,
}

impl TypeIPair {
    pub fn new(nega: &Negacyclic, split: &Splitting) -> Result<TypeIPair> {
        if split.kind != SplitKind::TypeI {
            return Err(param_err!("expected a Type I splitting"));
        }
        check_split(nega, split)?;
        let n = nega.n();
        let f1 = nega.idempotent(&defining_set(n, &[&split.a]))?;
        let f2 = nega.idempotent(&defining_set(n, &[&split.b]))?;
        ensure(nega.mul(&f1, &f2).is_zero(), "f1 f2 = 0")?;
        ensure(nega.add(&f1, &f2) == Poly::one(), "f1 + f2 = 1")?;
        ensure(
            nega.apply_multiplier(&f1, split.s as i64)? == f2,
            "μ_s(f1) = f2",
        )?;
        Ok(TypeIPair {
            f1,
            f2,
            splitting: split.clone(),
        })
    }
}

/// `e_i` (defining sets `A ∪ X`, `B ∪ X`), `d_i` (`A`, `B`) and `p̄`.
#[derive(Clone, Debug)]
pub struct TypeIIQuintet {
    pub e1: Poly,
    pub e2: Poly,
    pub d1: Poly,
    pub d2: Poly,
    pub pbar: Poly,
    pub splitting: Splitting,
}

impl TypeIIQuintet {
    pub fn new(nega: &Negacyclic, split: &Splitting) -> Result<TypeIIQuintet> {
        if split.kind != SplitKind::TypeII {
            return Err(param_err!("expected a Type II splitting"));
        }
        if nega.n() % 4 != 2 {
            return Err(param_err!(
                "Type II needs n ≡ 2 mod 4, got n = {}",
                nega.n()
            ));
        }
        check_split(nega, split)?;
        let n = nega.n();
        let e1 = nega.idempotent(&defining_set(n, &[&split.a, &split.x]))?;
        let e2 = nega.idempotent(&defining_set(n, &[&split.b, &split.x]))?;
        let d1 = nega.idempotent(&defining_set(n, &[&split.a]))?;
        let d2 = nega.idempotent(&defining_set(n, &[&split.b]))?;
        let pbar = nega.pbar()?;
        let one = Poly::one();
        ensure(nega.sub(&one, &e2) == d1, "d1 = 1 - e2")?;
        ensure(nega.sub(&one, &e1) == d2, "d2 = 1 - e1")?;
        ensure(nega.mul(&e1, &e2).is_zero(), "e1 e2 = 0")?;
        ensure(nega.mul(&d1, &d2) == pbar, "d1 d2 = p̄")?;
        ensure(nega.add(&e1, &pbar) == d1, "e1 + p̄ = d1")?;
        ensure(nega.add(&e2, &pbar) == d2, "e2 + p̄ = d2")?;
        ensure(
            nega.add(&e1, &e2) == nega.sub(&one, &pbar),
            "e1 + e2 = 1 - p̄",
        )?;
        Ok(TypeIIQuintet {
            e1,
            e2,
            d1,
            d2,
            pbar,
            splitting: split.clone(),
        })
    }
}

fn check_split(nega: &Negacyclic, split: &Splitting) -> Result<()> {
    if split.n != nega.n() || split.q != nega.field().q() {
        return Err(param_err!(
            "splitting is for q = {}, n = {} but the ring has q = {}, n = {}",
            split.q,
            split.n,
            nega.field().q(),
            nega.n()
        ));
    }
    split.validate(nega.cosets())
}

/// Base idempotents for either splitting type.
#[derive(Clone, Debug)]
pub enum Base {
    TypeI(TypeIPair),
    TypeII(TypeIIQuintet),
}

impl Base {
    pub fn new(nega: &Negacyclic, split: &Splitting) -> Result<Base> {
        Ok(match split.kind {
            SplitKind::TypeI => Base::TypeI(TypeIPair::new(nega, split)?),
            SplitKind::TypeII => Base::TypeII(TypeIIQuintet::new(nega, split)?),
        })
    }

    pub fn splitting(&self) -> &Splitting {
        match self {
            Base::TypeI(p) => &p.splitting,
            Base::TypeII(q) => &q.splitting,
        }
    }
}

/// The six idempotent families over `R`: `F`, `F'` from a Type I pair;
/// `D`, `D'` (odd-like) and `E`, `E'` (even-like) from a Type II quintet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyKind {
    F,
    FPrime,
    D,
    DPrime,
    E,
    EPrime,
}

impl FamilyKind {
    fn pair(self, base: &Base) -> Result<(&Poly, &Poly)> {
        match (self, base) {
            (FamilyKind::F, Base::TypeI(p)) => Ok((&p.f1, &p.f2)),
            (FamilyKind::FPrime, Base::TypeI(p)) => Ok((&p.f2, &p.f1)),
            (FamilyKind::D, Base::TypeII(q)) => Ok((&q.d1, &q.d2)),
            (FamilyKind::DPrime, Base::TypeII(q)) => Ok((&q.d2, &q.d1)),
            (FamilyKind::E, Base::TypeII(q)) => Ok((&q.e1, &q.e2)),
            (FamilyKind::EPrime, Base::TypeII(q)) => Ok((&q.e2, &q.e1)),
            (kind, _) => Err(param_err!(
                "family {kind:?} does not match the splitting type"
            )),
        }
    }

    /// The family obtained by exchanging the two base idempotents.
    pub fn primed(self) -> FamilyKind {
        match self {
            FamilyKind::F => FamilyKind::FPrime,
            FamilyKind::FPrime => FamilyKind::F,
            FamilyKind::D => FamilyKind::DPrime,
            FamilyKind::DPrime => FamilyKind::D,
            FamilyKind::E => FamilyKind::EPrime,
            FamilyKind::EPrime => FamilyKind::E,
        }
    }
}

/// `(Σ_{i∈S} η_i) x1 + (1 - Σ_{i∈S} η_i) x2`: component `i` is `x1` for
/// `i ∈ S` and `x2` otherwise. Subset indices start at 1.
pub fn family_idempotent(
    rn: &RingN,
    subset: &[usize],
    kind: FamilyKind,
    base: &Base,
) -> Result<RingPoly> {
    check_subset(subset, rn.m())?;
    let (x1, x2) = kind.pair(base)?;
    let parts: Vec<Poly> = (1..=rn.m())
        .map(|i| {
            if subset.contains(&i) {
                x1.clone()
            } else {
                x2.clone()
            }
        })
        .collect();
    rn.lift(&parts)
}

/// A negacyclic code over `R`: `C = ⊕ η_i C_i`, `C_i = <g_i>`.
#[derive(Clone, Debug)]
pub struct RingCode {
    pub n: usize,
    pub idempotent: RingPoly,
    pub generators: Vec<Poly>,
    pub defining_sets: Vec<DefiningSet>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RingCodeManifest {
    pub n: usize,
    pub idempotent: Vec<Vec<Vec<u64>>>,
    pub generators: Vec<Vec<Vec<u64>>>,
    pub defining_sets: Vec<Vec<u64>>,
    pub size_exponent: usize,
}

impl RingCode {
    pub fn m(&self) -> usize {
        self.generators.len()
    }

    /// `log_q |C| = mn - Σ deg g_i`.
    pub fn size_exponent(&self) -> usize {
        self.generators
            .iter()
            .map(|g| self.n - g.degree().unwrap_or(self.n))
            .sum()
    }

    /// Componentwise generator matrices.
    pub fn to_crt(&self, nega: &Negacyclic) -> Result<CrtCode> {
        let comps = self
            .generators
            .iter()
            .map(|g| LinearCode::from_rows(nega.field(), self.n, &nega.generator_rows(g)))
            .collect::<Result<Vec<_>>>()?;
        CrtCode::new(comps)
    }

    /// The dual, via reciprocal generators.
    pub fn dual(&self, rn: &RingN) -> Result<RingCode> {
        let nega = rn.nega();
        let gens = self
            .generators
            .iter()
            .map(|g| nega.dual_generator(g))
            .collect::<Result<Vec<_>>>()?;
        let comps = gens
            .iter()
            .map(|g| nega.idempotent(&nega.defining_set_of(g)))
            .collect::<Result<Vec<_>>>()?;
        Ok(RingCode {
            n: self.n,
            idempotent: rn.lift(&comps)?,
            defining_sets: gens.iter().map(|g| nega.defining_set_of(g)).collect(),
            generators: gens,
        })
    }

    pub fn manifest(&self, field: &Field) -> RingCodeManifest {
        RingCodeManifest {
            n: self.n,
            idempotent: self
                .idempotent
                .components()
                .iter()
                .map(|c| c.coord_vectors(field))
                .collect(),
            generators: self
                .generators
                .iter()
                .map(|g| g.coord_vectors(field))
                .collect(),
            defining_sets: self
                .defining_sets
                .iter()
                .map(|t| t.elems().to_vec())
                .collect(),
            size_exponent: self.size_exponent(),
        }
    }
}

/// The code `<E>` for an idempotent `E` of `R_n`.
pub fn code_from_idempotent(rn: &RingN, e: &RingPoly) -> Result<RingCode> {
    if !rn.is_idempotent(e) {
        return Err(consistency_err!("generator is not an idempotent of R_n"));
    }
    let nega = rn.nega();
    let generators: Vec<Poly> = e
        .components()
        .iter()
        .map(|c| nega.generator_of(c))
        .collect();
    Ok(RingCode {
        n: rn.n(),
        idempotent: e.clone(),
        defining_sets: generators.iter().map(|g| nega.defining_set_of(g)).collect(),
        generators,
    })
}

/// The smallest `γ` (in element order) with `2 + γ² n = 0`, if any.
pub fn solve_gamma(field: &Field, n: usize) -> Option<Elem> {
    let n_elem = field.from_int(n as i64);
    field
        .elements()
        .find(|&g| field.add(2, field.mul(field.mul(g, g), n_elem)) == 0)
}

/// `2^{m-1} - 1`, the number of inequivalent family members.
pub fn count_inequivalent(m: usize) -> Result<u64> {
    if !(2..64).contains(&m) {
        return Err(param_err!("m = {m} must be at least 2"));
    }
    Ok((1u64 << (m - 1)) - 1)
}

/// Appends `c_∞ = γ Σ (-1)^j c_{2j}` and `c_∞' = γ Σ (-1)^j c_{2j+1}`.
pub fn extend_word(word: &[Elem], gamma: Elem, f: &Field) -> Vec<Elem> {
    let mut sums = [0, 0];
    for (i, &c) in word.iter().enumerate() {
        let t = if (i / 2) % 2 == 0 { c } else { f.neg(c) };
        sums[i % 2] = f.add(sums[i % 2], t);
    }
    let mut out = word.to_vec();
    out.push(f.mul(gamma, sums[0]));
    out.push(f.mul(gamma, sums[1]));
    out
}

/// The extension of an odd-like code over `R` to length `n + 2`, stored per
/// CRT component as the generator rows `[S_i | 0 0]`, `[p | nγ/2 0]`,
/// `[x p | 0 nγ/2]` where `S_i` is the even-like subcode of the component.
#[derive(Clone, Debug)]
pub struct ExtendedCode {
    pub n: usize,
    pub gamma: Elem,
    pub code: CrtCode,
}

pub fn extend_code(rn: &RingN, odd: &RingCode, gamma: Elem) -> Result<ExtendedCode> {
    let nega = rn.nega();
    let f = nega.field();
    let n = nega.n();
    let n_elem = f.from_int(n as i64);
    if f.add(2, f.mul(f.mul(gamma, gamma), n_elem)) != 0 {
        return Err(param_err!(
            "γ = {} does not satisfy 2 + γ²n = 0",
            f.display(gamma)
        ));
    }
    let pbar = nega.pbar()?;
    let p = nega.p_poly()?;
    let half = f.div(f.mul(n_elem, gamma), 2)?;
    let mut p_row = p.to_vec(n);
    p_row.extend([half, 0]);
    let mut xp_row = nega.mul(&Poly::monomial(1, 1), &p).to_vec(n);
    xp_row.extend([0, half]);
    let mut comps = Vec::with_capacity(odd.m());
    for e in odd.idempotent.components() {
        if nega.mul(e, &pbar) != pbar {
            return Err(Error::Parameter(
                "code is not odd-like: it does not contain p̄".into(),
            ));
        }
        let even = nega.sub(e, &pbar);
        let g = nega.generator_of(&even);
        let mut rows: Vec<Vec<Elem>> = nega
            .generator_rows(&g)
            .into_iter()
            .map(|mut r| {
                r.extend([0, 0]);
                r
            })
            .collect();
        rows.push(p_row.clone());
        rows.push(xp_row.clone());
        comps.push(LinearCode::from_rows(f, n + 2, &rows)?);
    }
    Ok(ExtendedCode {
        n,
        gamma,
        code: CrtCode::new(comps)?,
    })
}
