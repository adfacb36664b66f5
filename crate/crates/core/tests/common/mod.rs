#![allow(dead_code)]

use duadic_core::arith::gcd;
use duadic_core::{DefiningSet, Elem, Field, Negacyclic, Poly, RingN, RingPoly};
use rand::seq::SliceRandom;
use rand::Rng;

pub const ODD_FIELDS: [u64; 6] = [3, 5, 7, 9, 11, 13];

/// Even `n <= max` coprime to `q`.
pub fn lengths(q: u64, max: usize) -> Vec<usize> {
    (2..=max)
        .step_by(2)
        .filter(|&n| gcd(n as u64, q) == 1)
        .collect()
}

/// Union of a random selection of cosets.
pub fn random_defining_set(nega: &Negacyclic, rng: &mut impl Rng) -> DefiningSet {
    let table = nega.cosets();
    let elems: Vec<u64> = (0..table.len())
        .filter(|_| rng.gen_bool(0.5))
        .flat_map(|i| table.cosets()[i].clone())
        .collect();
    DefiningSet::new(nega.n(), elems).unwrap()
}

/// `a + b - ab`: idempotent of the sum of two ideals.
pub fn join(nega: &Negacyclic, a: &Poly, b: &Poly) -> Poly {
    nega.sub(&nega.add(a, b), &nega.mul(a, b))
}

pub fn rjoin(rn: &RingN, a: &RingPoly, b: &RingPoly) -> RingPoly {
    rn.sub(&rn.add(a, b).unwrap(), &rn.mul(a, b).unwrap())
        .unwrap()
}

/// `1 - μ_{-1}(e)`: idempotent of the dual of `<e>`.
pub fn dual_idempotent(rn: &RingN, e: &RingPoly) -> RingPoly {
    rn.sub(&rn.one(), &rn.apply_multiplier(e, -1).unwrap())
        .unwrap()
}

/// A random `m x m` matrix with `V V^T = λ I`, `λ != 0`, built from scaled
/// rotation blocks then shuffled by signed row and column permutations.
pub fn random_gray_matrix(f: &Field, m: usize, rng: &mut impl Rng) -> (Vec<Vec<Elem>>, Elem) {
    assert!((2..=4).contains(&m));
    let q = f.q();
    loop {
        let mut x = [0; 4];
        for c in x.iter_mut() {
            *c = rng.gen_range(0..q);
        }
        let [a, b, c, d] = x;
        let sq = |t| f.mul(t, t);
        let neg = |t| f.neg(t);
        let (v, lambda) = match m {
            2 => (vec![vec![a, b], vec![neg(b), a]], f.add(sq(a), sq(b))),
            3 => {
                let l = f.add(sq(a), sq(b));
                let roots = f.sqrt_all(l);
                let Some(&r) = roots.first() else { continue };
                (vec![vec![a, b, 0], vec![neg(b), a, 0], vec![0, 0, r]], l)
            }
            _ => (
                vec![
                    vec![a, b, c, d],
                    vec![neg(b), a, neg(d), c],
                    vec![neg(c), d, a, neg(b)],
                    vec![neg(d), neg(c), b, a],
                ],
                f.add(f.add(sq(a), sq(b)), f.add(sq(c), sq(d))),
            ),
        };
        if lambda == 0 {
            continue;
        }
        let mut rows: Vec<usize> = (0..m).collect();
        let mut cols: Vec<usize> = (0..m).collect();
        rows.shuffle(rng);
        cols.shuffle(rng);
        let out = rows
            .iter()
            .map(|&r| {
                let flip = rng.gen_bool(0.5);
                cols.iter()
                    .map(|&c| if flip { neg(v[r][c]) } else { v[r][c] })
                    .collect()
            })
            .collect();
        return (out, lambda);
    }
}

/// `m` distinct random elements of `F_q`.
pub fn random_roots(f: &Field, m: usize, rng: &mut impl Rng) -> Vec<Elem> {
    let mut all: Vec<Elem> = f.elements().collect();
    all.shuffle(rng);
    all.truncate(m);
    all
}
