//! Independent oracles. None of these call into the code paths they check.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use mobius_lattice::gfq::FqField;
use mobius_lattice::group::{
    action_from_subspaces, verify_lemma_4_1, GroupSet, LemmaReport, Subgroup, DEFAULT_ORDER_CAP,
};
use mobius_lattice::linalg::{enumerate_subspaces, DEFAULT_SUBSPACE_CAP};
use mobius_lattice::poset::FinitePoset;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn field(q: u32) -> Arc<FqField> {
    Arc::new(FqField::of_order(q).unwrap())
}

pub fn gl(n: usize, q: u32) -> GroupSet {
    GroupSet::general_linear(&field(q), n, DEFAULT_ORDER_CAP).unwrap()
}

pub fn sl(n: usize, q: u32) -> GroupSet {
    GroupSet::special_linear(&field(q), n, DEFAULT_ORDER_CAP).unwrap()
}

/// Product of two polynomials over GF(p) reduced by a monic modulus, on
/// coefficient vectors (low degree first).
pub fn poly_mul_mod(p: u32, modulus: &[u32], a: &[u32], b: &[u32]) -> Vec<u32> {
    let u = modulus.len() - 1;
    let mut prod = vec![0u32; 2 * u];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for d in (u..prod.len()).rev() {
        let c = prod[d];
        if c != 0 {
            for (k, &m) in modulus.iter().enumerate() {
                let at = d - u + k;
                prod[at] = (prod[at] + p * p - c * m % p) % p;
            }
        }
    }
    prod.truncate(u);
    prod
}

/// `μ` as `Σ_k (-N)^k` with `N = Z - I` strictly upper in the inclusion
/// order; uses matrix products, not any recursion along a linear extension.
pub fn zeta_inversion_mobius(p: &FinitePoset) -> Vec<Vec<i64>> {
    let n = p.len();
    let mut nil = vec![vec![0i64; n]; n];
    for x in 0..n {
        for y in 0..n {
            if x != y && p.leq(x, y) {
                nil[x][y] = -1;
            }
        }
    }
    let mut total = vec![vec![0i64; n]; n];
    let mut power = vec![vec![0i64; n]; n];
    for (i, row) in power.iter_mut().enumerate() {
        row[i] = 1;
    }
    for _ in 0..=n {
        for x in 0..n {
            for y in 0..n {
                total[x][y] += power[x][y];
            }
        }
        let mut next = vec![vec![0i64; n]; n];
        for x in 0..n {
            for k in 0..n {
                if power[x][k] != 0 {
                    for y in 0..n {
                        next[x][y] += power[x][k] * nil[k][y];
                    }
                }
            }
        }
        power = next;
    }
    total
}

/// Number-theoretic Möbius function by trial division.
pub fn number_theoretic_mu(mut n: u64) -> i64 {
    let mut result = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Gaussian binomial `[n choose k]_q` by the product formula.
pub fn gaussian_binomial(n: u32, k: u32, q: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

/// `|GL(n,q)| = Π_{i<n} (q^n - q^i)`.
pub fn gl_order(n: u32, q: u64) -> u64 {
    (0..n).map(|i| q.pow(n) - q.pow(i)).product()
}

/// All vectors of `GF(q)^n` as coefficient tuples.
pub fn all_vectors(f: &FqField, n: usize) -> Vec<Vec<u32>> {
    let q = f.order();
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..q).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

/// Every subspace of `GF(q)^n` as its set of vectors, grown by adjoining
/// one vector at a time. Returns the count per dimension.
pub fn brute_force_subspace_counts(f: &FqField, n: usize) -> Vec<usize> {
    let vectors = all_vectors(f, n);
    let zero = vec![0u32; n];
    let start: BTreeSet<Vec<u32>> = [zero].into_iter().collect();
    let mut seen: HashSet<BTreeSet<Vec<u32>>> = HashSet::new();
    seen.insert(start.clone());
    let mut stack = vec![start];
    while let Some(s) = stack.pop() {
        for v in &vectors {
            if s.contains(v) {
                continue;
            }
            let mut t = BTreeSet::new();
            for w in &s {
                for a in 0..f.order() {
                    let sum: Vec<u32> = w.iter().zip(v).map(|(&x, &y)| f.add(x, f.mul(a, y))).collect();
                    t.insert(sum);
                }
            }
            if seen.insert(t.clone()) {
                stack.push(t);
            }
        }
    }
    let mut counts = vec![0usize; n + 1];
    for s in &seen {
        let mut d = 0;
        let mut size = 1;
        while size < s.len() {
            size *= f.order() as usize;
            d += 1;
        }
        counts[d] += 1;
    }
    counts
}

/// Alternating sums over the full powerset of `sets`, split by whether the
/// intersection (the whole group for the empty family) equals `h`.
/// Returns `(Σ over ∩ != h, Σ over ∩ == h)`.
pub fn naive_split_sums(sets: &[FixedBitSet], whole: &FixedBitSet, h: &FixedBitSet) -> (i64, i64) {
    assert!(sets.len() < 25);
    let (mut other, mut equal) = (0i64, 0i64);
    for mask in 0u32..1 << sets.len() {
        let mut inter = whole.clone();
        for (i, s) in sets.iter().enumerate() {
            if mask >> i & 1 == 1 {
                inter.intersect_with(s);
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        if inter == *h {
            equal += sign;
        } else {
            other += sign;
        }
    }
    (other, equal)
}

/// Seeded random `(action, T, X')` instances of the stabilizer lemma with
/// `|G| <= 48`: the action of a random subgroup `L` on the lines of the
/// plane, a random `T <= L`, and up to 8 points fixed by `T`.
pub fn random_lemma_reports(count: usize, seed: u64) -> Vec<LemmaReport> {
    let groups = [gl(2, 2), gl(2, 3), sl(2, 3)];
    let lattices: Vec<Vec<Subgroup>> = groups
        .iter()
        .map(|g| g.overgroup_interval(&g.trivial_subgroup(), 1000).unwrap())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|round| {
            let which = rng.gen_range(0..groups.len());
            let (g, subgroups) = (&groups[which], &lattices[which]);
            let points = enumerate_subspaces(g.field(), 2, Some(1), DEFAULT_SUBSPACE_CAP).unwrap();
            let full = action_from_subspaces(g, &points).unwrap();
            let l = subgroups.choose(&mut rng).unwrap();
            let action = full.restrict(g, l).unwrap();
            assert!(action.is_consistent(g, 50, round as u64));
            let below: Vec<&Subgroup> = subgroups.iter().filter(|t| t.is_subgroup_of(l)).collect();
            let t = *below.choose(&mut rng).unwrap();
            let fixed: Vec<usize> = (0..action.len())
                .filter(|&x| t.members().is_subset(&action.point_stabilizer(x)))
                .collect();
            let k = rng.gen_range(0..=fixed.len().min(8));
            let x_prime: Vec<usize> = fixed.choose_multiple(&mut rng, k).copied().collect();
            verify_lemma_4_1(&action, t, &x_prime, 22).unwrap()
        })
        .collect()
}
