//! Linear codes over `F_q`, codes over `R` held componentwise, the Gray map
//! and duality classification.

use serde::Serialize;

use crate::error::{param_err, Result};
use crate::gf::{Elem, Field, FieldManifest};
use crate::matrix::{dot, Matrix};

/// A linear code over `F_q` with a canonical (reduced row echelon) generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    length: usize,
    generator: Matrix,
    pivots: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CodeManifest {
    pub field: FieldManifest,
    pub length: usize,
    pub dimension: usize,
    pub generator: Vec<Vec<Vec<u64>>>,
}

impl LinearCode {
    /// The span of `rows`; rows must all have `length` entries.
    pub fn from_rows(field: &Field, length: usize, rows: &[Vec<Elem>]) -> Result<LinearCode> {
        if let Some(r) = rows.iter().find(|r| r.len() != length) {
            return Err(param_err!(
                "row of length {} in a code of length {length}",
                r.len()
            ));
        }
        Ok(LinearCode::from_matrix(
            field,
            Matrix::from_rows(rows, length),
        ))
    }

    pub fn from_matrix(field: &Field, mut generator: Matrix) -> LinearCode {
        let pivots = generator.rref(field);
        LinearCode {
            field: field.clone(),
            length: generator.cols(),
            generator,
            pivots,
        }
    }

    pub fn zero(field: &Field, length: usize) -> LinearCode {
        LinearCode::from_matrix(field, Matrix::zeros(0, length))
    }

    pub fn full(field: &Field, length: usize) -> LinearCode {
        LinearCode::from_matrix(field, Matrix::identity(length))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode::from_matrix(&self.field, self.generator.kernel(&self.field))
    }

    /// Generator of the dual code.
    pub fn parity_check(&self) -> Matrix {
        self.generator.kernel(&self.field)
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let f = &self.field;
        let mut v = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = v[p];
            if c == 0 {
                continue;
            }
            for (x, &g) in v.iter_mut().zip(self.generator.row(r)) {
                *x = f.sub(*x, f.mul(c, g));
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// The codeword with information symbols `msg` at the pivot positions.
    pub fn encode(&self, msg: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut out = vec![0; self.length];
        for (r, &c) in msg.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (x, &g) in out.iter_mut().zip(self.generator.row(r)) {
                *x = f.add(*x, f.mul(c, g));
            }
        }
        out
    }

    pub fn contains_code(&self, other: &LinearCode) -> bool {
        other.length == self.length
            && (0..other.dimension()).all(|r| self.contains(other.generator.row(r)))
    }

    /// `dim(C ∩ C^⊥)`.
    pub fn hull_dimension(&self) -> usize {
        let h = self.parity_check();
        let k = self.dimension();
        k + h.rows() - self.generator.stack(&h).rank(&self.field)
    }

    /// `G G^T = 0`.
    pub fn is_self_orthogonal(&self) -> bool {
        self.generator.gram(&self.generator, &self.field).is_zero()
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dimension() == self.length && self.is_self_orthogonal()
    }

    /// `C ∩ C^⊥ = {0}`, tested as `rank [G; H] = N`.
    pub fn is_lcd(&self) -> bool {
        let h = self.parity_check();
        self.generator.stack(&h).rank(&self.field) == self.length
    }

    pub fn apply_monomial(&self, map: &Monomial) -> Result<LinearCode> {
        if map.len() != self.length {
            return Err(param_err!(
                "monomial map of length {} on a code of length {}",
                map.len(),
                self.length
            ));
        }
        let rows: Vec<Vec<Elem>> = self
            .generator
            .row_vecs()
            .iter()
            .map(|r| map.apply(r, &self.field))
            .collect();
        LinearCode::from_rows(&self.field, self.length, &rows)
    }

    pub fn manifest(&self) -> CodeManifest {
        CodeManifest {
            field: self.field.manifest(),
            length: self.length,
            dimension: self.dimension(),
            generator: self
                .generator
                .row_vecs()
                .iter()
                .map(|r| r.iter().map(|&x| self.field.coords(x)).collect())
                .collect(),
        }
    }
}

pub fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// A monomial map: input coordinate `j` goes to `perm[j]`, scaled by `scale[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    perm: Vec<usize>,
    scale: Vec<Elem>,
}

impl Monomial {
    pub fn new(perm: Vec<usize>, scale: Vec<Elem>) -> Result<Monomial> {
        let mut seen = vec![false; perm.len()];
        if perm.len() != scale.len() || scale.contains(&0) {
            return Err(param_err!(
                "monomial map needs one nonzero scale per coordinate"
            ));
        }
        for &p in &perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(param_err!("not a permutation"));
            }
        }
        Ok(Monomial { perm, scale })
    }

    /// The multiplier `x^j -> x^{sj}` on length-`n` negacyclic words, as a
    /// signed permutation.
    pub fn multiplier(n: usize, s: i64, f: &Field) -> Result<Monomial> {
        let two_n = 2 * n as u64;
        let s = crate::arith::rem_euclid(s, two_n);
        if crate::arith::gcd(s, two_n) != 1 {
            return Err(param_err!("multiplier {s} is not coprime to {two_n}"));
        }
        let (perm, scale) = (0..n as u64)
            .map(|j| {
                let t = s * j % two_n;
                if t < n as u64 {
                    (t as usize, 1)
                } else {
                    ((t - n as u64) as usize, f.neg(1))
                }
            })
            .unzip();
        Monomial::new(perm, scale)
    }

    /// The multiplier extended to the two extra coordinates of a length-`n+2`
    /// extended code: the first stays fixed, the second changes sign unless
    /// `s ≡ 1 (mod 4)`.
    pub fn extended_multiplier(n: usize, s: i64, f: &Field) -> Result<Monomial> {
        let base = Monomial::multiplier(n, s, f)?;
        let mut perm = base.perm;
        let mut scale = base.scale;
        perm.extend([n, n + 1]);
        scale.push(1);
        scale.push(if s.rem_euclid(4) == 1 { 1 } else { f.neg(1) });
        Monomial::new(perm, scale)
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn apply(&self, v: &[Elem], f: &Field) -> Vec<Elem> {
        let mut out = vec![0; v.len()];
        for (j, &x) in v.iter().enumerate() {
            out[self.perm[j]] = f.mul(x, self.scale[j]);
        }
        out
    }
}

/// The `m x m` matrix `V` of the Gray map `Σ η_i a_i -> (a_1, ..., a_m) V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrayMatrix {
    v: Matrix,
    lambda: Option<Elem>,
}

impl GrayMatrix {
    pub fn new(field: &Field, rows: &[Vec<Elem>]) -> Result<GrayMatrix> {
        let m = rows.len();
        if m == 0 || rows.iter().any(|r| r.len() != m) {
            return Err(param_err!("Gray matrix must be square and nonempty"));
        }
        let v = Matrix::from_rows(rows, m);
        if v.rank(field) != m {
            return Err(param_err!("Gray matrix is singular"));
        }
        let gram = v.gram(&v, field);
        let lam = gram.get(0, 0);
        let scalar = (0..m).all(|i| (0..m).all(|j| gram.get(i, j) == if i == j { lam } else { 0 }));
        Ok(GrayMatrix {
            v,
            lambda: (scalar && lam != 0).then_some(lam),
        })
    }

    pub fn identity(m: usize) -> GrayMatrix {
        GrayMatrix {
            v: Matrix::identity(m),
            lambda: Some(1),
        }
    }

    pub fn m(&self) -> usize {
        self.v.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.v
    }

    /// `λ` with `V V^T = λ I`, when it exists.
    pub fn lambda(&self) -> Option<Elem> {
        self.lambda
    }

    /// Image of one `R`-coordinate given by its CRT components.
    pub fn map(&self, a: &[Elem], f: &Field) -> Vec<Elem> {
        (0..self.m())
            .map(|t| (0..self.m()).fold(0, |acc, i| f.add(acc, f.mul(a[i], self.v.get(i, t)))))
            .collect()
    }
}

/// A linear code over `R` of length `L`, held as `C = ⊕ η_i C_i` with each
/// `C_i` a linear code over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrtCode {
    components: Vec<LinearCode>,
}

impl CrtCode {
    pub fn new(components: Vec<LinearCode>) -> Result<CrtCode> {
        let Some(first) = components.first() else {
            return Err(param_err!("a code over R needs at least one component"));
        };
        if components
            .iter()
            .any(|c| c.length() != first.length() || c.field() != first.field())
        {
            return Err(param_err!("components differ in length or field"));
        }
        Ok(CrtCode { components })
    }

    pub fn components(&self) -> &[LinearCode] {
        &self.components
    }

    pub fn m(&self) -> usize {
        self.components.len()
    }

    pub fn length(&self) -> usize {
        self.components[0].length()
    }

    pub fn field(&self) -> &Field {
        self.components[0].field()
    }

    /// `log_q |C|`.
    pub fn size_exponent(&self) -> usize {
        self.components.iter().map(|c| c.dimension()).sum()
    }

    /// `C^⊥ = ⊕ η_i C_i^⊥`.
    pub fn dual(&self) -> CrtCode {
        CrtCode {
            components: self.components.iter().map(|c| c.dual()).collect(),
        }
    }

    pub fn apply_monomial(&self, map: &Monomial) -> Result<CrtCode> {
        Ok(CrtCode {
            components: self
                .components
                .iter()
                .map(|c| c.apply_monomial(map))
                .collect::<Result<_>>()?,
        })
    }

    /// `Φ(C)`: each `R`-coordinate becomes a block of `m` coordinates.
    pub fn gray_image(&self, v: &GrayMatrix) -> Result<LinearCode> {
        let m = self.m();
        if v.m() != m {
            return Err(param_err!(
                "Gray matrix is {0}x{0} but the ring has m = {m}",
                v.m()
            ));
        }
        let f = self.field();
        let len = self.length();
        let mut rows = Vec::with_capacity(self.size_exponent());
        for (i, c) in self.components.iter().enumerate() {
            let vrow = v.matrix().row(i);
            for r in 0..c.dimension() {
                let mut out = vec![0; m * len];
                for (j, &x) in c.generator().row(r).iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for t in 0..m {
                        out[j * m + t] = f.mul(x, vrow[t]);
                    }
                }
                rows.push(out);
            }
        }
        LinearCode::from_rows(f, m * len, &rows)
    }
}

/// Duality properties of a code over `F_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DualityFlags {
    pub self_orthogonal: bool,
    pub self_dual: bool,
    pub lcd: bool,
    /// `None` when no multiplier witness was supplied.
    pub isodual: Option<bool>,
}

/// `C^⊥` equals the given multiplier image of `C` (or `C` is self-dual).
pub fn isodual_by_multiplier(code: &LinearCode, witness: &LinearCode) -> bool {
    code.is_self_dual() || code.dual() == *witness
}

pub fn classify_duality(code: &LinearCode, witness: Option<&LinearCode>) -> DualityFlags {
    DualityFlags {
        self_orthogonal: code.is_self_orthogonal(),
        self_dual: code.is_self_dual(),
        lcd: code.is_lcd(),
        isodual: witness.map(|w| isodual_by_multiplier(code, w)),
    }
}

/// Inner product of two vectors, exposed for invariant checks.
pub fn inner(a: &[Elem], b: &[Elem], f: &Field) -> Elem {
    dot(a, b, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_and_full_codes() {
        let f = Field::new(5, 1).unwrap();
        let z = LinearCode::zero(&f, 4);
        assert!(z.is_self_orthogonal());
        assert!(!z.is_self_dual());
        assert_eq!(LinearCode::full(&f, 4).dual(), z);
    }

    #[test]
    fn gray_map_of_a_single_coordinate() {
        let f = Field::new(3, 1).unwrap();
        let v = GrayMatrix::new(&f, &[vec![1, 2], vec![f.from_int(-2), 1]]).unwrap();
        // (1, 2) V = (1 - 4, 2 + 2) over F_3
        assert_eq!(v.map(&[1, 2], &f), vec![0, 1]);
        assert_eq!(v.lambda(), Some(2));
        let v = GrayMatrix::new(&f, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(v.lambda(), None);
        assert!(GrayMatrix::new(&f, &[vec![1, 2], vec![2, 1]]).is_err());
    }

    #[test]
    fn self_dual_negacyclic_component() {
        // <x + 3> over F_5 with n = 2 is self-dual
        let f = Field::new(5, 1).unwrap();
        let c = LinearCode::from_rows(&f, 2, &[vec![3, 1]]).unwrap();
        assert!(c.is_self_dual());
        assert_eq!(c.dual(), c);
        assert_eq!(c.hull_dimension(), 1);
        assert!(!c.is_lcd());
    }

    #[test]
    fn extended_multiplier_signs() {
        let f = Field::new(7, 1).unwrap();
        let m = Monomial::extended_multiplier(10, 19, &f).unwrap();
        let mut e = vec![0; 12];
        e[11] = 1;
        assert_eq!(m.apply(&e, &f)[11], 6);
        let m = Monomial::extended_multiplier(10, 21 - 20, &f).unwrap();
        assert_eq!(m.apply(&e, &f)[11], 1);
    }
}
