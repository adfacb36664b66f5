//! Minimum distance: exhaustive codeword enumeration, parity-check column
//! dependency search, and certified bounds when neither fits the budget.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::binomial;
use crate::code::{weight, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::matrix::Matrix;

/// Default enumeration budget, in codewords.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 26;
/// Default column-search budget, in tested column subsets.
pub const DEFAULT_COLUMN_BUDGET: u64 = 1 << 26;
/// Codes this small are always enumerated, before trying the column search.
const CHEAP_ENUMERATION: u64 = 1 << 20;
const UPPER_BOUND_TRIALS: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub enumeration: u64,
    pub column: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            enumeration: DEFAULT_ENUMERATION_BUDGET,
            column: DEFAULT_COLUMN_BUDGET,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Enumeration,
    ColumnSearch,
    Bounds,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    pub method: Method,
    pub exact: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    /// Codewords enumerated plus column subsets tested.
    pub work: u64,
}

/// Field arithmetic through lookup tables for small fields.
struct Fast {
    q: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
}

impl Fast {
    fn new(f: &Field) -> Option<Fast> {
        let q = f.q() as usize;
        if q > 256 {
            return None;
        }
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = f.add(a as Elem, b as Elem) as u32;
                mul[a * q + b] = f.mul(a as Elem, b as Elem) as u32;
            }
        }
        Some(Fast { q, add, mul })
    }

    #[inline]
    fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.q + b as usize]
    }
}

fn fast(f: &Field) -> Result<Fast> {
    Fast::new(f)
        .ok_or_else(|| Error::Budget(format!("q = {} is too large for table arithmetic", f.q())))
}

/// `q^k`, saturating.
pub fn code_size(code: &LinearCode) -> u64 {
    let q = code.field().q();
    (0..code.dimension()).fold(1u64, |acc, _| acc.saturating_mul(q))
}

/// Weight histogram over all codewords (entry `w` counts codewords of weight `w`).
pub fn weight_distribution(code: &LinearCode, budget: u64) -> Result<Vec<u64>> {
    let size = code_size(code);
    if size > budget {
        return Err(Error::Budget(format!(
            "{size} codewords exceed the budget of {budget}"
        )));
    }
    enumerate(code)
}

/// Sweeps every codeword by a `p`-ary Gray code over the `F_p`-digits of the
/// messages, so each step adds one scaled generator row.
fn enumerate(code: &LinearCode) -> Result<Vec<u64>> {
    let f = code.field();
    let t = fast(f)?;
    let n = code.length();
    let p = f.p() as usize;
    let g = code.generator();
    // digit rows: ω^j · row_i, with ω^j encoded as p^j
    let mut digits: Vec<Vec<u32>> = Vec::new();
    for i in 0..g.rows() {
        let mut scale: Elem = 1;
        for _ in 0..f.s() {
            digits.push(g.row(i).iter().map(|&x| f.mul(x, scale) as u32).collect());
            scale *= f.p();
        }
    }
    let sparse: Vec<Vec<(usize, u32)>> = digits
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(j, &x)| (j, x))
                .collect()
        })
        .collect();
    let d = digits.len();
    let mut top = 0;
    while top < d && p.pow(top as u32) < 256 {
        top += 1;
    }
    let low = d - top;
    let prefixes = p.pow(top as u32);
    let hist = (0..prefixes)
        .into_par_iter()
        .map(|v| {
            let mut word = vec![0u32; n];
            let mut rest = v;
            for k in 0..top {
                let digit = (rest % p) as u32;
                rest /= p;
                for &(j, x) in &sparse[low + k] {
                    word[j] = t.add(word[j], t.mul(digit, x));
                }
            }
            let mut hist = vec![0u64; n + 1];
            let mut w = word.iter().filter(|&&x| x != 0).count();
            hist[w] += 1;
            let mut counter = vec![0usize; low];
            loop {
                let mut j = 0;
                while j < low && counter[j] == p - 1 {
                    counter[j] = 0;
                    j += 1;
                }
                if j == low {
                    break;
                }
                counter[j] += 1;
                for &(c, x) in &sparse[j] {
                    let old = word[c];
                    let new = t.add(old, x);
                    word[c] = new;
                    w = w + usize::from(new != 0) - usize::from(old != 0);
                }
                hist[w] += 1;
            }
            hist
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(hist)
}

/// Outcome of the column-dependency search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnSearch {
    /// The minimum distance, when a dependent set was found.
    pub distance: Option<usize>,
    /// Every set of at most this many columns is independent.
    pub independent_up_to: usize,
    /// A codeword of weight `distance`.
    pub witness: Option<Vec<Elem>>,
    pub work: u64,
}

/// Incrementally reduced set of chosen parity-check columns.
struct Basis {
    vecs: Vec<Vec<u32>>,
    pivots: Vec<usize>,
    /// `vecs[t] = Σ combos[t][u] · column(chosen[u])`
    combos: Vec<Vec<u32>>,
    chosen: Vec<usize>,
}

struct Searcher {
    t: Fast,
    neg: Vec<u32>,
    inv: Vec<u32>,
    cols: Vec<Vec<u32>>,
    n: usize,
}

impl Searcher {
    /// Reduces column `j` against the basis. Returns `None` if independent
    /// (with the reduced vector and its combination), or the dependency
    /// coefficients over `chosen ++ [j]`.
    fn reduce(
        &self,
        basis: &Basis,
        j: usize,
    ) -> std::result::Result<(Vec<u32>, Vec<u32>), Vec<u32>> {
        let t = &self.t;
        let mut v = self.cols[j].clone();
        let mut combo = vec![0u32; basis.chosen.len() + 1];
        combo[basis.chosen.len()] = 1;
        for (k, b) in basis.vecs.iter().enumerate() {
            let factor = v[basis.pivots[k]];
            if factor == 0 {
                continue;
            }
            let nf = self.neg[factor as usize];
            for (x, &y) in v.iter_mut().zip(b) {
                if y != 0 {
                    *x = t.add(*x, t.mul(nf, y));
                }
            }
            for (x, &y) in combo.iter_mut().zip(&basis.combos[k]) {
                if y != 0 {
                    *x = t.add(*x, t.mul(nf, y));
                }
            }
        }
        if v.iter().all(|&x| x == 0) {
            Err(combo)
        } else {
            Ok((v, combo))
        }
    }

    fn push(&self, basis: &mut Basis, j: usize, v: Vec<u32>, combo: Vec<u32>) {
        let pivot = v.iter().position(|&x| x != 0).expect("nonzero");
        let inv = self.inv[v[pivot] as usize];
        basis
            .vecs
            .push(v.iter().map(|&x| self.t.mul(x, inv)).collect());
        basis
            .combos
            .push(combo.iter().map(|&x| self.t.mul(x, inv)).collect());
        for c in basis.combos.iter_mut() {
            c.resize(basis.chosen.len() + 1, 0);
        }
        basis.pivots.push(pivot);
        basis.chosen.push(j);
    }

    fn pop(&self, basis: &mut Basis) {
        basis.vecs.pop();
        basis.combos.pop();
        basis.pivots.pop();
        basis.chosen.pop();
        for c in basis.combos.iter_mut() {
            c.truncate(basis.chosen.len());
        }
    }

    fn witness(&self, chosen: &[usize], j: usize, combo: &[u32]) -> Vec<Elem> {
        let mut w = vec![0; self.n];
        for (u, &c) in chosen.iter().chain(std::iter::once(&j)).enumerate() {
            w[c] = combo[u] as Elem;
        }
        w
    }

    /// Depth-first search for a dependent `size`-subset whose smallest
    /// column is `first`.
    fn subtree(&self, first: usize, size: usize) -> (Option<Vec<Elem>>, u64) {
        let mut basis = Basis {
            vecs: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
            chosen: Vec::new(),
        };
        let mut work = 0;
        let found = self.dfs(&mut basis, first, first + 1, size, &mut work);
        (found, work)
    }

    fn dfs(
        &self,
        basis: &mut Basis,
        j: usize,
        next: usize,
        size: usize,
        work: &mut u64,
    ) -> Option<Vec<Elem>> {
        *work += 1;
        match self.reduce(basis, j) {
            Err(combo) => Some(self.witness(&basis.chosen, j, &combo)),
            Ok(_) if basis.chosen.len() + 1 == size => None,
            Ok((v, combo)) => {
                self.push(basis, j, v, combo);
                let remaining = size - basis.chosen.len();
                let mut found = None;
                for k in next..self.n {
                    if k + remaining > self.n {
                        break;
                    }
                    found = self.dfs(basis, k, k + 1, size, work);
                    if found.is_some() {
                        break;
                    }
                }
                self.pop(basis);
                found
            }
        }
    }
}

/// Smallest `w` such that some `w` columns of the parity-check matrix are
/// linearly dependent, searched level by level within `budget` tested subsets.
pub fn column_search(code: &LinearCode, budget: u64) -> Result<ColumnSearch> {
    let f = code.field();
    let t = fast(f)?;
    let n = code.length();
    let h: Matrix = code.parity_check();
    let cols: Vec<Vec<u32>> = (0..n)
        .map(|j| (0..h.rows()).map(|i| h.get(i, j) as u32).collect())
        .collect();
    let q = f.q();
    let neg = (0..q).map(|a| f.neg(a) as u32).collect();
    let inv = (0..q)
        .map(|a| if a == 0 { 0 } else { f.inv(a).unwrap() as u32 })
        .collect();
    let s = Searcher {
        t,
        neg,
        inv,
        cols,
        n,
    };
    let mut spent = 0u64;
    let mut work = 0u64;
    let mut independent_up_to = 0;
    for size in 1..=n {
        let mut first = 0;
        let mut level_done = true;
        while first + size <= n {
            // a fixed-size batch of subtrees, so results never depend on scheduling
            let mut batch = Vec::new();
            while first + size <= n && batch.len() < 32 {
                let cost = binomial((n - 1 - first) as u64, (size - 1) as u64);
                if spent.saturating_add(cost) > budget {
                    break;
                }
                spent += cost;
                batch.push(first);
                first += 1;
            }
            if batch.is_empty() {
                level_done = false;
                break;
            }
            let results: Vec<(Option<Vec<Elem>>, u64)> =
                batch.par_iter().map(|&i| s.subtree(i, size)).collect();
            work += results.iter().map(|r| r.1).sum::<u64>();
            if let Some(w) = results.into_iter().find_map(|r| r.0) {
                return Ok(ColumnSearch {
                    distance: Some(size),
                    independent_up_to,
                    witness: Some(w),
                    work,
                });
            }
        }
        if !level_done {
            break;
        }
        independent_up_to = size;
    }
    Ok(ColumnSearch {
        distance: None,
        independent_up_to,
        witness: None,
        work,
    })
}

/// Best codeword weight found by Lee-Brickell style sampling: random column
/// permutations, systematic form, and all rows plus pairs of scaled rows.
/// Deterministic for a given code.
pub fn upper_bound(code: &LinearCode, trials: usize) -> (usize, Vec<Elem>) {
    let f = code.field();
    let n = code.length();
    let mut best = (usize::MAX, Vec::new());
    let mut consider = |v: Vec<Elem>| {
        let w = weight(&v);
        if w > 0 && w < best.0 {
            best = (w, v);
        }
    };
    let k = code.dimension();
    let mut rng = ChaCha8Rng::seed_from_u64((n as u64) << 32 | k as u64);
    let mut perm: Vec<usize> = (0..n).collect();
    for trial in 0..trials.max(1) {
        if trial > 0 {
            perm.shuffle(&mut rng);
        }
        let rows: Vec<Vec<Elem>> = code
            .generator()
            .row_vecs()
            .iter()
            .map(|r| perm.iter().map(|&j| r[j]).collect())
            .collect();
        let mut g = Matrix::from_rows(&rows, n);
        g.rref(f);
        let unperm = |v: &[Elem]| {
            let mut out = vec![0; n];
            for (pos, &j) in perm.iter().enumerate() {
                out[j] = v[pos];
            }
            out
        };
        for a in 0..g.rows() {
            consider(unperm(g.row(a)));
            for b in a + 1..g.rows() {
                for lam in 1..f.q() {
                    let v: Vec<Elem> = g
                        .row(a)
                        .iter()
                        .zip(g.row(b))
                        .map(|(&x, &y)| f.add(x, f.mul(lam, y)))
                        .collect();
                    consider(unperm(&v));
                }
            }
        }
    }
    best
}

/// Minimum distance within budget; `known_lower` is an externally certified
/// lower bound (e.g. from defining sets), 1 if none.
pub fn min_distance(
    code: &LinearCode,
    budget: &Budget,
    known_lower: usize,
) -> Result<DistanceReport> {
    if code.dimension() == 0 {
        return Err(Error::Domain(
            "minimum distance of the zero code is undefined".into(),
        ));
    }
    let size = code_size(code);
    let small_field = code.field().q() <= 256;
    let from_hist = |hist: Vec<u64>, work| {
        let d = hist
            .iter()
            .skip(1)
            .position(|&c| c > 0)
            .map(|i| i + 1)
            .expect("k > 0");
        DistanceReport {
            method: Method::Enumeration,
            exact: Some(d),
            lower: d,
            upper: d,
            work,
        }
    };
    if small_field && size <= budget.enumeration.min(CHEAP_ENUMERATION) {
        return Ok(from_hist(enumerate(code)?, size));
    }
    let mut col = None;
    if small_field && budget.column > 0 {
        let c = column_search(code, budget.column)?;
        if let Some(d) = c.distance {
            return Ok(DistanceReport {
                method: Method::ColumnSearch,
                exact: Some(d),
                lower: d,
                upper: d,
                work: c.work,
            });
        }
        col = Some(c);
    }
    if small_field && size <= budget.enumeration {
        let spent = col.as_ref().map_or(0, |c| c.work);
        return Ok(from_hist(enumerate(code)?, size + spent));
    }
    let (upper, _) = upper_bound(code, UPPER_BOUND_TRIALS);
    let searched = col.as_ref().map_or(0, |c| c.independent_up_to);
    Ok(DistanceReport {
        method: Method::Bounds,
        exact: None,
        lower: known_lower.max(searched + 1).min(upper),
        upper,
        work: col.map_or(0, |c| c.work),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_space_and_repetition() {
        let f = Field::new(3, 1).unwrap();
        let full = LinearCode::full(&f, 4);
        assert_eq!(
            min_distance(&full, &Budget::default(), 1).unwrap().exact,
            Some(1)
        );
        let rep = LinearCode::from_rows(&f, 5, &[vec![1; 5]]).unwrap();
        let hist = weight_distribution(&rep, 100).unwrap();
        assert_eq!(hist, vec![1, 0, 0, 0, 0, 2]);
        let c = column_search(&rep, 1 << 20).unwrap();
        assert_eq!(c.distance, Some(5));
        assert_eq!(weight(&c.witness.unwrap()), 5);
        assert!(weight_distribution(&rep, 2).is_err());
    }

    #[test]
    fn zero_code_has_no_distance() {
        let f = Field::new(3, 1).unwrap();
        assert!(min_distance(&LinearCode::zero(&f, 3), &Budget::default(), 1).is_err());
        assert_eq!(
            weight_distribution(&LinearCode::zero(&f, 3), 1).unwrap(),
            vec![1, 0, 0, 0]
        );
    }

    #[test]
    fn zero_budget_gives_bounds() {
        let f = Field::new(5, 1).unwrap();
        let c = LinearCode::from_rows(&f, 4, &[vec![1, 1, 1, 1], vec![0, 1, 2, 3]]).unwrap();
        let r = min_distance(
            &c,
            &Budget {
                enumeration: 0,
                column: 0,
            },
            1,
        )
        .unwrap();
        assert_eq!(r.method, Method::Bounds);
        assert_eq!(r.exact, None);
        assert!(r.lower <= 3 && r.upper >= 3);
        let r = min_distance(&c, &Budget::default(), 1).unwrap();
        assert_eq!(r.exact, Some(3));
    }

    #[test]
    fn extension_field_enumeration() {
        // [3, 1, 3] repetition over F_9: 8 codewords of weight 3
        let f = Field::new(3, 2).unwrap();
        let rep = LinearCode::from_rows(&f, 3, &[vec![1; 3]]).unwrap();
        assert_eq!(weight_distribution(&rep, 100).unwrap(), vec![1, 0, 0, 8]);
    }
}
