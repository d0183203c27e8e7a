//! Finite posets, their Möbius functions, and the crosscut sum.
//!
//! The order relation is kept as two bit matrices (up-sets and down-sets), so
//! interval queries are word-parallel intersections.

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    linear: Vec<usize>,
}

impl FinitePoset {
    /// Builds the poset on `labels` with `x <= y` iff `leq(x, y)`, rejecting
    /// relations that are not reflexive, antisymmetric and transitive.
    pub fn from_fn(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for x in 0..n {
            for y in 0..n {
                if leq(x, y) {
                    up[x].insert(y);
                    down[y].insert(x);
                }
            }
        }
        Self::from_sets(labels, up, down)
    }

    /// Reflexive-transitive closure of the given cover (or any acyclic) relation.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in up.iter_mut().enumerate() {
            row.insert(x);
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::IndexOutOfRange(a.max(b)));
            }
            up[a].insert(b);
        }
        // Warshall on bit rows
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in up.iter().enumerate() {
            for y in row.ones() {
                down[y].insert(x);
            }
        }
        Self::from_sets(labels, up, down)
    }

    fn from_sets(labels: Vec<String>, up: Vec<FixedBitSet>, down: Vec<FixedBitSet>) -> Result<Self> {
        let n = labels.len();
        for x in 0..n {
            if !up[x].contains(x) {
                return Err(Error::NotAPartialOrder(format!("{x} is not <= itself")));
            }
            let mut both = up[x].clone();
            both.intersect_with(&down[x]);
            if both.count_ones(..) != 1 {
                let y = both.ones().find(|&y| y != x).unwrap();
                return Err(Error::NotAPartialOrder(format!("{x} <= {y} <= {x}")));
            }
            for y in up[x].ones() {
                if !up[y].is_subset(&up[x]) {
                    return Err(Error::NotAPartialOrder(format!("not transitive through {x} <= {y}")));
                }
            }
        }
        let mut linear: Vec<usize> = (0..n).collect();
        linear.sort_by_key(|&x| (down[x].count_ones(..), x));
        Ok(Self {
            labels,
            up,
            down,
            linear,
        })
    }

    pub fn chain(n: usize) -> Self {
        Self::from_fn((0..n).map(|i| i.to_string()).collect(), |a, b| a <= b).unwrap()
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_fn((0..n).map(|i| i.to_string()).collect(), |a, b| a == b).unwrap()
    }

    /// Subsets of a `k`-set under inclusion, indexed by bitmask.
    pub fn boolean(k: usize) -> Self {
        Self::from_fn(
            (0..1usize << k).map(|m| format!("{m:0k$b}")).collect(),
            |a, b| a & !b == 0,
        )
        .unwrap()
    }

    /// Divisors of `n` under divisibility, in increasing order.
    pub fn divisors(n: u64) -> Self {
        let divs: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
        Self::from_fn(divs.iter().map(u64::to_string).collect(), |a, b| {
            divs[b].is_multiple_of(divs[a])
        })
        .unwrap()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    pub fn down_set(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    /// A linear extension: every element comes after everything below it.
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&x| self.up[x].count_ones(..) == self.len())
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&x| self.down[x].count_ones(..) == self.len())
    }

    /// Pairs `(x, y)` with `y` covering `x`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.up[x].ones() {
                if y == x {
                    continue;
                }
                let mut between = self.up[x].clone();
                between.intersect_with(&self.down[y]);
                if between.count_ones(..) == 2 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Induced subposet on `items` (in the given order).
    pub fn subposet(&self, items: &[usize]) -> Self {
        Self::from_fn(
            items.iter().map(|&i| self.labels[i].clone()).collect(),
            |a, b| self.leq(items[a], items[b]),
        )
        .expect("induced orders are partial orders")
    }

    /// Plain-text dump: element labels, then cover pairs.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "elements {}", self.len());
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "{i} {l}");
        }
        let covers = self.covers();
        let _ = writeln!(out, "covers {}", covers.len());
        for (a, b) in covers {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }
}

/// The full Möbius function of a poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusTable {
    n: usize,
    mu: Vec<i64>,
}

impl MobiusTable {
    pub fn get(&self, x: usize, y: usize) -> i64 {
        self.mu[x * self.n + y]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn row(&self, x: usize) -> &[i64] {
        &self.mu[x * self.n..(x + 1) * self.n]
    }
}

/// `μ(x, ·)` via `μ(x,x) = 1` and `μ(x,y) = -Σ_{x <= t < y} μ(x,t)`, zero
/// off the up-set of `x`.
pub fn mobius_from(poset: &FinitePoset, x: usize) -> Vec<i64> {
    let n = poset.len();
    let mut row = vec![0i64; n];
    row[x] = 1;
    for &y in poset.linear_extension() {
        if y == x || !poset.leq(x, y) {
            continue;
        }
        let mut interval = poset.up[x].clone();
        interval.intersect_with(&poset.down[y]);
        row[y] = -interval
            .ones()
            .filter(|&t| t != y)
            .map(|t| row[t])
            .sum::<i64>();
    }
    row
}

pub fn mobius(poset: &FinitePoset) -> MobiusTable {
    let n = poset.len();
    let mut mu = Vec::with_capacity(n * n);
    for x in 0..n {
        mu.extend(mobius_from(poset, x));
    }
    MobiusTable { n, mu }
}

/// A poset with a designated least and greatest element.
#[derive(Debug, Clone)]
pub struct BoundedPoset {
    poset: FinitePoset,
    bottom: usize,
    top: usize,
}

impl BoundedPoset {
    /// Uses the existing minimum and maximum.
    pub fn new(poset: FinitePoset) -> Result<Self> {
        let bottom = poset.minimum().ok_or(Error::Unbounded("minimum"))?;
        let top = poset.maximum().ok_or(Error::Unbounded("maximum"))?;
        Ok(Self { poset, bottom, top })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    /// `μ(0̂, 1̂)`.
    pub fn mobius_bottom_top(&self) -> i64 {
        mobius_from(&self.poset, self.bottom)[self.top]
    }

    /// Greatest common lower bound, if one exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let mut common = self.poset.down[a].clone();
        common.intersect_with(&self.poset.down[b]);
        common.ones().find(|&m| self.poset.down[m] == common)
    }

    /// Meet table, or the first pair without a meet.
    pub fn meet_table(&self) -> Result<Vec<usize>> {
        let n = self.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let m = self.meet(a, b).ok_or(Error::NotALattice(a, b))?;
                table[a * n + b] = m;
                table[b * n + a] = m;
            }
        }
        Ok(table)
    }

    pub fn is_lattice(&self) -> bool {
        self.meet_table().is_ok()
    }
}

/// `𝒫̂`: new `0̂` and `1̂` are appended (indices `len` and `len + 1`). With
/// `reuse_existing`, an existing minimum or maximum is used instead of
/// adding a new one.
pub fn adjoin_bounds(poset: &FinitePoset, reuse_existing: bool) -> BoundedPoset {
    let n = poset.len();
    let existing_min = reuse_existing.then(|| poset.minimum()).flatten();
    let existing_max = reuse_existing.then(|| poset.maximum()).flatten();
    let mut labels = poset.labels.clone();
    let bottom = existing_min.unwrap_or_else(|| {
        labels.push("0̂".into());
        labels.len() - 1
    });
    let top = existing_max.unwrap_or_else(|| {
        labels.push("1̂".into());
        labels.len() - 1
    });
    let extended = FinitePoset::from_fn(labels, |a, b| {
        if a == b || a == bottom || b == top {
            true
        } else if a == top || b == bottom {
            false
        } else if a < n && b < n {
            poset.leq(a, b)
        } else {
            false
        }
    })
    .expect("adjoining bounds preserves the partial order");
    BoundedPoset {
        poset: extended,
        bottom,
        top,
    }
}

/// Elements covered by `1̂`.
pub fn coatoms(poset: &BoundedPoset) -> Vec<usize> {
    let top = poset.top;
    (0..poset.len())
        .filter(|&x| {
            x != top && {
                let up = &poset.poset.up[x];
                up.count_ones(..) == 2 && up.contains(top)
            }
        })
        .collect()
}

/// `{s : s <= a for some a in generators}`, sorted.
pub fn order_ideal_generated(poset: &FinitePoset, generators: &[usize]) -> Vec<usize> {
    let mut ideal = FixedBitSet::with_capacity(poset.len());
    for &a in generators {
        ideal.union_with(&poset.down[a]);
    }
    ideal.ones().collect()
}

/// `Σ (-1)^{|Y|}` over nonempty `Y ⊆ X` whose meet is `0̂`.
///
/// `lattice` must be a lattice with `0̂ != 1̂`, `X` must contain every coatom
/// and must not contain `1̂`.
pub fn crosscut_sum(lattice: &BoundedPoset, crosscut: &[usize], bound: usize) -> Result<i64> {
    if lattice.bottom == lattice.top {
        return Err(Error::TrivialLattice);
    }
    if let Some(&bad) = crosscut.iter().find(|&&x| x >= lattice.len()) {
        return Err(Error::IndexOutOfRange(bad));
    }
    if crosscut.contains(&lattice.top) {
        return Err(Error::TopInX);
    }
    if let Some(c) = coatoms(lattice).into_iter().find(|c| !crosscut.contains(c)) {
        return Err(Error::CoatomsNotCovered(c));
    }
    let mut items = crosscut.to_vec();
    items.sort_unstable();
    items.dedup();
    if items.len() > bound {
        return Err(Error::PowersetTooLarge {
            size: items.len(),
            bound,
        });
    }
    let meets = lattice.meet_table()?;
    let n = lattice.len();

    fn walk(items: &[usize], meets: &[usize], n: usize, bottom: usize, from: usize, current: usize, size: usize) -> i64 {
        let mut total = 0;
        for i in from..items.len() {
            let m = if size == 0 { items[i] } else { meets[current * n + items[i]] };
            if m == bottom {
                total += if (size + 1).is_multiple_of(2) { 1 } else { -1 };
            }
            total += walk(items, meets, n, bottom, i + 1, m, size + 1);
        }
        total
    }
    Ok(walk(&items, &meets, n, lattice.bottom, 0, lattice.top, 0))
}

/// Seeded generators of random posets and lattices for property suites.
pub mod random {
    use rand::Rng;

    use super::{BoundedPoset, FinitePoset};

    /// Transitive closure of a random DAG on `n` labelled points: each pair
    /// `i < j` becomes a relation `i <= j` with probability `density`.
    pub fn random_poset<R: Rng>(rng: &mut R, n: usize, density: f64) -> FinitePoset {
        let mut covers = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(density) {
                    covers.push((i, j));
                }
            }
        }
        FinitePoset::from_covers((0..n).map(|i| format!("p{i}")).collect(), &covers)
            .expect("DAG closures are partial orders")
    }

    /// A random meet-closed family of subsets of a small set, with the full
    /// set adjoined, ordered by inclusion. The result is a lattice with
    /// between 2 and `max_size` elements.
    pub fn random_lattice<R: Rng>(rng: &mut R, max_size: usize) -> BoundedPoset {
        assert!(max_size >= 2);
        loop {
            let k: u32 = rng.gen_range(2..=4);
            let full: u32 = (1 << k) - 1;
            let mut family = vec![full];
            for _ in 0..rng.gen_range(1..=max_size) {
                let m = rng.gen_range(0..=full);
                if !family.contains(&m) {
                    family.push(m);
                }
            }
            // close under intersection
            let mut i = 0;
            while i < family.len() {
                for j in 0..i {
                    let m = family[i] & family[j];
                    if !family.contains(&m) {
                        family.push(m);
                    }
                }
                i += 1;
            }
            if family.len() < 2 || family.len() > max_size {
                continue;
            }
            family.sort_unstable();
            let poset = FinitePoset::from_fn(
                family.iter().map(|m| format!("{m:b}")).collect(),
                |a, b| family[a] & !family[b] == 0,
            )
            .expect("inclusion is a partial order");
            return BoundedPoset::new(poset).expect("meet-closed family with top is bounded");
        }
    }
}
