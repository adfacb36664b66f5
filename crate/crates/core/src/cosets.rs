//! q-cyclotomic cosets on the odd residues mod 2n and the search for
//! Type I / Type II splittings.

use serde::Serialize;

use crate::arith::gcd;
use crate::error::{param_err, Error, Result};

/// Splitting searches enumerate at most this many bipartitions per multiplier.
pub const MAX_BIPARTITIONS_LOG2: usize = 20;

/// Partition of `O_{2n}` (odd residues in `[1, 2n)`) into q-cyclotomic cosets,
/// ordered by smallest representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    q: u64,
    n: usize,
    cosets: Vec<Vec<u64>>,
    index: Vec<usize>,
}

impl CosetTable {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cosets(&self) -> &[Vec<u64>] {
        &self.cosets
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Index of the coset containing the odd residue `a`.
    pub fn coset_of(&self, a: u64) -> Option<usize> {
        self.index
            .get((a % (2 * self.n as u64)) as usize)
            .copied()
            .filter(|&i| i != usize::MAX)
    }

    /// Whether `set` is a union of cosets.
    pub fn is_union_of_cosets(&self, set: &[u64]) -> bool {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.iter().all(|&a| {
            self.coset_of(a)
                .map(|i| {
                    self.cosets[i]
                        .iter()
                        .all(|b| sorted.binary_search(b).is_ok())
                })
                .unwrap_or(false)
        })
    }

    /// Union of the cosets whose bit is set in `mask`.
    pub fn union_of(&self, indices: impl IntoIterator<Item = usize>) -> Vec<u64> {
        let mut out: Vec<u64> = indices
            .into_iter()
            .flat_map(|i| self.cosets[i].iter().copied())
            .collect();
        out.sort_unstable();
        out
    }
}

fn check_qn(q: u64, n: usize) -> Result<()> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(param_err!("length n = {n} must be even and positive"));
    }
    if q.is_multiple_of(2) || q < 3 {
        return Err(param_err!("q = {q} must be odd"));
    }
    if gcd(q, n as u64) != 1 {
        return Err(param_err!("gcd(n, q) must be 1 (n = {n}, q = {q})"));
    }
    Ok(())
}

/// The q-cyclotomic cosets partitioning `O_{2n}`.
pub fn cyclotomic_cosets(q: u64, n: usize) -> Result<CosetTable> {
    check_qn(q, n)?;
    let two_n = 2 * n as u64;
    let mut index = vec![usize::MAX; 2 * n];
    let mut cosets = Vec::new();
    for a in (1..two_n).step_by(2) {
        if index[a as usize] != usize::MAX {
            continue;
        }
        let mut coset = Vec::new();
        let mut x = a;
        loop {
            index[x as usize] = cosets.len();
            coset.push(x);
            x = (x as u128 * q as u128 % two_n as u128) as u64;
            if x == a {
                break;
            }
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    Ok(CosetTable {
        q,
        n,
        cosets,
        index,
    })
}

/// `{ s·a mod m : a ∈ set }`, sorted.
pub fn multiply_set(set: &[u64], s: u64, modulus: u64) -> Vec<u64> {
    let mut out: Vec<u64> = set
        .iter()
        .map(|&a| (a as u128 * s as u128 % modulus as u128) as u64)
        .collect();
    out.sort_unstable();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SplitKind {
    #[serde(rename = "type1")]
    TypeI,
    #[serde(rename = "type2")]
    TypeII,
}

impl std::str::FromStr for SplitKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "1" | "i" | "type1" | "typei" => Ok(SplitKind::TypeI),
            "2" | "ii" | "type2" | "typeii" => Ok(SplitKind::TypeII),
            other => Err(param_err!("unknown splitting kind '{other}'")),
        }
    }
}

/// A partition `O_{2n} = A ∪ B ∪ X` with `μ_s(A) = B`, `μ_s(X) = X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Splitting {
    pub q: u64,
    pub n: usize,
    pub kind: SplitKind,
    pub s: u64,
    #[serde(rename = "A")]
    pub a: Vec<u64>,
    #[serde(rename = "B")]
    pub b: Vec<u64>,
    #[serde(rename = "X")]
    pub x: Vec<u64>,
}

impl Splitting {
    pub fn two_n(&self) -> u64 {
        2 * self.n as u64
    }

    /// `μ_t(A) = B`, i.e. the splitting is also given by `μ_t`.
    pub fn given_by(&self, t: u64) -> bool {
        multiply_set(&self.a, t % self.two_n(), self.two_n()) == self.b
    }

    /// `μ_t(A) = A`.
    pub fn fixes(&self, t: u64) -> bool {
        multiply_set(&self.a, t % self.two_n(), self.two_n()) == self.a
    }

    /// The splitting with `A` and `B` exchanged.
    pub fn swapped(&self) -> Splitting {
        Splitting {
            a: self.b.clone(),
            b: self.a.clone(),
            ..self.clone()
        }
    }

    /// Checks every structural invariant against a coset table.
    pub fn validate(&self, table: &CosetTable) -> Result<()> {
        let two_n = self.two_n();
        let mut all: Vec<u64> = self
            .a
            .iter()
            .chain(&self.b)
            .chain(&self.x)
            .copied()
            .collect();
        all.sort_unstable();
        let expected: Vec<u64> = (1..two_n).step_by(2).collect();
        if all != expected {
            return Err(Error::Consistency("A, B, X do not partition O_2n".into()));
        }
        for part in [&self.a, &self.b, &self.x] {
            if !table.is_union_of_cosets(part) {
                return Err(Error::Consistency("part is not a union of cosets".into()));
            }
        }
        if gcd(self.s, two_n) != 1 || !self.given_by(self.s) {
            return Err(Error::Consistency("μ_s does not map A onto B".into()));
        }
        if multiply_set(&self.b, self.s, two_n) != self.a
            || multiply_set(&self.x, self.s, two_n) != self.x
        {
            return Err(Error::Consistency("μ_s does not preserve B, X".into()));
        }
        let x_ok = match self.kind {
            SplitKind::TypeI => self.x.is_empty(),
            SplitKind::TypeII => self.x == [self.n as u64 / 2, 3 * self.n as u64 / 2],
        };
        if !x_ok {
            return Err(Error::Consistency(
                "X does not match the splitting type".into(),
            ));
        }
        Ok(())
    }
}

/// All splittings of the requested kind, ordered by multiplier and then by
/// the binary-counter index of `A` over the non-`X` cosets. Each unordered
/// pair `{A, B}` appears once per multiplier, with `1 ∈ A`.
pub fn find_splittings(q: u64, n: usize, kind: SplitKind) -> Result<Vec<Splitting>> {
    let table = cyclotomic_cosets(q, n)?;
    let two_n = 2 * n as u64;
    let x: Vec<u64> = match kind {
        SplitKind::TypeI => Vec::new(),
        SplitKind::TypeII if n % 4 == 2 => vec![n as u64 / 2, 3 * n as u64 / 2],
        SplitKind::TypeII => return Ok(Vec::new()),
    };
    let free: Vec<usize> = (0..table.len())
        .filter(|&i| !x.contains(&table.cosets[i][0]))
        .collect();
    if free.len() > 128 {
        return Err(Error::Budget(format!(
            "{} cosets exceed the mask width",
            free.len()
        )));
    }
    let mut out = Vec::new();
    for s in (1..two_n).step_by(2).filter(|&s| gcd(s, two_n) == 1) {
        // μ_s permutes the free cosets; A must alternate along each cycle.
        let image: Vec<usize> = free
            .iter()
            .map(|&c| {
                let t = table.coset_of(table.cosets[c][0] * s % two_n).unwrap();
                free.iter().position(|&f| f == t).expect("μ_s preserves X")
            })
            .collect();
        let mut seen = vec![false; free.len()];
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut ok = true;
        for start in 0..free.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut c = image[start];
            while c != start {
                seen[c] = true;
                cycle.push(c);
                c = image[c];
            }
            if cycle.len() % 2 == 1 {
                ok = false;
                break;
            }
            cycles.push(cycle);
        }
        if !ok {
            continue;
        }
        if cycles.len() > MAX_BIPARTITIONS_LOG2 {
            return Err(Error::Budget(format!(
                "2^{} bipartitions for q = {q}, n = {n}, s = {s} exceed the 2^{MAX_BIPARTITIONS_LOG2} cap",
                cycles.len()
            )));
        }
        // Cycle 0 contains the coset of 1 in its first position, which must lie in A.
        let free_choices = cycles.len().saturating_sub(1);
        let mut masks: Vec<u128> = (0..1u64 << free_choices)
            .map(|bits| {
                let mut mask = 0u128;
                for (k, cycle) in cycles.iter().enumerate() {
                    let first_in_a = k == 0 || (bits >> (k - 1)) & 1 == 1;
                    for (j, &c) in cycle.iter().enumerate() {
                        if (j % 2 == 0) == first_in_a {
                            mask |= 1u128 << c;
                        }
                    }
                }
                mask
            })
            .collect();
        masks.sort_unstable();
        for mask in masks {
            let a = table.union_of(
                (0..free.len())
                    .filter(|&j| mask >> j & 1 == 1)
                    .map(|j| free[j]),
            );
            let b = table.union_of(
                (0..free.len())
                    .filter(|&j| mask >> j & 1 == 0)
                    .map(|j| free[j]),
            );
            out.push(Splitting {
                q,
                n,
                kind,
                s,
                a,
                b,
                x: x.clone(),
            });
        }
    }
    Ok(out)
}

/// Whether a self-dual negacyclic code of length `n` exists over `F_q`:
/// with `n = 2^a n'`, `n'` odd, iff `q ≢ -1 (mod 2^{a+1})`.
pub fn self_dual_exists(q: u64, n: usize) -> Result<bool> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(param_err!("n = {n} must be even"));
    }
    let a = n.trailing_zeros();
    let m = 1u64 << (a + 1);
    Ok(q % m != m - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosets_mod_12_and_20() {
        let t = cyclotomic_cosets(5, 6).unwrap();
        assert_eq!(t.cosets(), &[vec![1, 5], vec![3], vec![7, 11], vec![9]]);
        let t = cyclotomic_cosets(3, 10).unwrap();
        assert_eq!(
            t.cosets(),
            &[vec![1, 3, 7, 9], vec![5, 15], vec![11, 13, 17, 19]]
        );
        assert!(cyclotomic_cosets(3, 6).is_err());
    }

    #[test]
    fn half_n_coset_is_singleton_when_q_is_1_mod_4() {
        for (q, n) in [(5, 6), (13, 10), (9, 14), (5, 18)] {
            let t = cyclotomic_cosets(q, n).unwrap();
            let c = t.coset_of(n as u64 / 2).unwrap();
            assert_eq!(t.cosets()[c], vec![n as u64 / 2]);
        }
    }

    #[test]
    fn type_i_q5_n6() {
        let all = find_splittings(5, 6, SplitKind::TypeI).unwrap();
        let target = all
            .iter()
            .find(|s| s.s == 11 && s.a == [1, 3, 5])
            .expect("μ_{-1} splitting");
        assert_eq!(target.b, vec![7, 9, 11]);
        let table = cyclotomic_cosets(5, 6).unwrap();
        for s in &all {
            s.validate(&table).unwrap();
            assert_eq!(s.a.len(), s.b.len());
        }
    }

    #[test]
    fn q3_n10() {
        assert!(find_splittings(3, 10, SplitKind::TypeI).unwrap().is_empty());
        let two = find_splittings(3, 10, SplitKind::TypeII).unwrap();
        let first = two.iter().find(|s| s.s == 19).unwrap();
        assert_eq!(first.a, vec![1, 3, 7, 9]);
        assert_eq!(first.b, vec![11, 13, 17, 19]);
        assert_eq!(first.x, vec![5, 15]);
    }

    #[test]
    fn type_ii_needs_oddly_even_length() {
        assert!(find_splittings(5, 8, SplitKind::TypeII).unwrap().is_empty());
    }

    #[test]
    fn self_dual_existence() {
        assert!(self_dual_exists(5, 18).unwrap());
        assert!(!self_dual_exists(3, 10).unwrap());
        assert!(self_dual_exists(13, 4).unwrap());
        assert!(self_dual_exists(5, 7).is_err());
    }

    #[test]
    fn multipliers_leave_half_n_pair_invariant() {
        for n in (2..=50).step_by(4) {
            let two_n = 2 * n as u64;
            let x = [n as u64 / 2, 3 * n as u64 / 2];
            for s in (1..two_n).step_by(2).filter(|&s| gcd(s, two_n) == 1) {
                assert_eq!(multiply_set(&x, s, two_n), x.to_vec(), "n = {n}, s = {s}");
            }
        }
    }
}
