//! Explicitly enumerated finite matrix groups.
//!
//! A [`GroupSet`] lists every element of a group `G <= GL(n, q)` in canonical
//! matrix order. Subgroups are bitsets over those indices, so two subgroups
//! are equal exactly when their member sets are.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfq::{FieldSpec, FqField};
use crate::linalg::{Matrix, Subspace};

pub const DEFAULT_ORDER_CAP: usize = 250_000;
/// Products are tabulated up to this order and recomputed from generator
/// words above it.
pub const TABLE_ORDER_LIMIT: usize = 5_000;
pub const DEFAULT_INTERVAL_CAP: usize = 100_000;
pub const DEFAULT_POWERSET_BOUND: usize = 22;

/// Pairs checked by [`GroupSet::verify_closed`] once exhaustive checking is too slow.
const EXHAUSTIVE_CLOSURE_LIMIT: usize = 500;
const RANDOM_CLOSURE_PAIRS: usize = 10_000;

struct Parts {
    elements: Vec<Matrix>,
    index: HashMap<Matrix, usize>,
    generators: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    gen_perms: Vec<Vec<u32>>,
    parent: Vec<Option<(u32, u32)>>,
}

/// Serializable closure of a [`GroupSet`]: canonical elements (row-major
/// entries, concatenated) plus the index tables, so a group can be reloaded
/// without recomputing any product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureDump {
    pub field: FieldSpec,
    pub n: usize,
    pub elements: Vec<u32>,
    pub generators: Vec<u32>,
    pub identity: u32,
    pub inverses: Vec<u32>,
    pub gen_perms: Vec<Vec<u32>>,
    pub parent: Vec<Option<(u32, u32)>>,
}

pub struct GroupSet {
    field: Arc<FqField>,
    n: usize,
    elements: Vec<Matrix>,
    index: HashMap<Matrix, usize>,
    generators: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    // right multiplication by each generator, as a permutation of indices
    gen_perms: Vec<Vec<u32>>,
    // g_i = g_{parent.0} * gens[parent.1]; identity has no parent
    parent: Vec<Option<(u32, u32)>>,
    // generator word of each element, flattened: word_data[word_start[i]..word_start[i + 1]]
    word_start: Vec<u32>,
    word_data: Vec<u32>,
    table: Option<Vec<u32>>,
}

impl fmt::Debug for GroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupSet")
            .field("field", &self.field)
            .field("n", &self.n)
            .field("order", &self.order())
            .finish()
    }
}

/// A subgroup of a [`GroupSet`], identified by its member indices.
#[derive(Clone)]
pub struct Subgroup {
    members: FixedBitSet,
    order: usize,
    gens: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, gens {:?})", self.order, self.gens)
    }
}

impl Subgroup {
    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn member_ids(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Generators as parent indices; not necessarily minimal.
    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.members.is_subset(&other.members)
    }
}

impl GroupSet {
    /// The group generated by `gens`, enumerated breadth-first and then
    /// re-indexed in canonical matrix order.
    pub fn closure(field: &Arc<FqField>, n: usize, gens: &[Matrix], cap: usize) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            if g.rows() != n || !g.is_square() {
                return Err(Error::DimensionMismatch(format!(
                    "generator {i} is {}x{}, expected {n}x{n}",
                    g.rows(),
                    g.cols()
                )));
            }
            if **g.field() != **field {
                return Err(Error::MixedFields);
            }
            if !g.is_invertible() {
                return Err(Error::SingularGenerator(i));
            }
        }
        let one = Matrix::identity(field, n);
        let mut distinct: Vec<Matrix> = Vec::new();
        for g in gens {
            if *g != one && !distinct.contains(g) {
                distinct.push(g.clone());
            }
        }

        let identity = Matrix::identity(field, n);
        let mut bfs: Vec<Matrix> = vec![identity.clone()];
        let mut bfs_parent: Vec<Option<(u32, u32)>> = vec![None];
        let mut seen: HashMap<Matrix, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (s, g) in distinct.iter().enumerate() {
                let y = bfs[x].mul_unchecked(g);
                if !seen.contains_key(&y) {
                    if bfs.len() >= cap {
                        return Err(Error::OrderCapExceeded(cap));
                    }
                    seen.insert(y.clone(), bfs.len());
                    queue.push_back(bfs.len());
                    bfs.push(y);
                    bfs_parent.push(Some((x as u32, s as u32)));
                }
            }
        }
        Ok(Self::from_bfs(field, n, &distinct, bfs, bfs_parent))
    }

    fn from_bfs(
        field: &Arc<FqField>,
        n: usize,
        gens: &[Matrix],
        bfs: Vec<Matrix>,
        bfs_parent: Vec<Option<(u32, u32)>>,
    ) -> Self {
        let order = bfs.len();
        let mut perm: Vec<usize> = (0..order).collect();
        perm.sort_by(|&a, &b| bfs[a].cmp(&bfs[b]));
        // new index of BFS position
        let mut new_of = vec![0usize; order];
        for (new, &old) in perm.iter().enumerate() {
            new_of[old] = new;
        }
        let parent: Vec<Option<(u32, u32)>> = perm
            .iter()
            .map(|&old| bfs_parent[old].map(|(p, s)| (new_of[p as usize] as u32, s)))
            .collect();
        let elements: Vec<Matrix> = perm.iter().map(|&old| bfs[old].clone()).collect();
        let index: HashMap<Matrix, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let generators: Vec<usize> = gens.iter().map(|g| index[g]).collect();
        let gen_perms: Vec<Vec<u32>> = gens
            .iter()
            .map(|g| {
                elements
                    .iter()
                    .map(|x| index[&x.mul_unchecked(g)] as u32)
                    .collect()
            })
            .collect();
        let inverses = elements
            .iter()
            .map(|x| index[&x.inverse().expect("group elements are invertible")])
            .collect();
        let parts = Parts {
            elements,
            index,
            generators,
            identity: new_of[0],
            inverses,
            gen_perms,
            parent,
        };
        // BFS order lists every parent before its children
        Self::assemble(field, n, parts, &new_of)
    }

    /// Derives generator words and the multiplication table. `order` must
    /// list every element after its parent.
    fn assemble(field: &Arc<FqField>, n: usize, parts: Parts, order: &[usize]) -> Self {
        let size = parts.elements.len();
        let mut words: Vec<Vec<u32>> = vec![Vec::new(); size];
        for &j in order {
            if let Some((p, s)) = parts.parent[j] {
                let mut w = words[p as usize].clone();
                w.push(s);
                words[j] = w;
            }
        }
        let mut word_start = Vec::with_capacity(size + 1);
        let mut word_data = Vec::new();
        for w in &words {
            word_start.push(word_data.len() as u32);
            word_data.extend_from_slice(w);
        }
        word_start.push(word_data.len() as u32);

        let mut group = Self {
            field: field.clone(),
            n,
            elements: parts.elements,
            index: parts.index,
            generators: parts.generators,
            identity: parts.identity,
            inverses: parts.inverses,
            gen_perms: parts.gen_perms,
            parent: parts.parent,
            word_start,
            word_data,
            table: None,
        };
        if size <= TABLE_ORDER_LIMIT {
            // fill columns parent-first so every parent column is ready
            let mut table = vec![0u32; size * size];
            for &j in order {
                for i in 0..size {
                    table[i * size + j] = match group.parent[j] {
                        None => i as u32,
                        Some((p, s)) => {
                            group.gen_perms[s as usize][table[i * size + p as usize] as usize]
                        }
                    };
                }
            }
            group.table = Some(table);
        }
        group
    }

    /// Everything needed to rebuild this group without matrix products.
    pub fn to_dump(&self) -> ClosureDump {
        ClosureDump {
            field: self.field.spec(),
            n: self.n,
            elements: self.elements.iter().flat_map(|m| m.data().iter().copied()).collect(),
            generators: self.generators.iter().map(|&g| g as u32).collect(),
            identity: self.identity as u32,
            inverses: self.inverses.iter().map(|&i| i as u32).collect(),
            gen_perms: self.gen_perms.clone(),
            parent: self.parent.clone(),
        }
    }

    /// Rebuilds a group from [`GroupSet::to_dump`] output. The dump is
    /// checked for shape, canonical order, a consistent generator tree, and
    /// (on `spot_checks` seeded samples) against direct matrix products.
    pub fn from_dump(dump: &ClosureDump, spot_checks: usize, seed: u64) -> Result<Self> {
        let bad = |what: &str| Error::MalformedDump(what.to_string());
        let field = Arc::new(dump.field.build()?);
        let n = dump.n;
        let cell = n * n;
        if cell == 0 || !dump.elements.len().is_multiple_of(cell) {
            return Err(bad("element data length"));
        }
        let size = dump.elements.len() / cell;
        let gens = dump.generators.len();
        if dump.inverses.len() != size
            || dump.parent.len() != size
            || dump.gen_perms.len() != gens
            || dump.gen_perms.iter().any(|p| p.len() != size)
            || dump.identity as usize >= size
        {
            return Err(bad("table sizes"));
        }
        let in_range = |v: u32| (v as usize) < size;
        if !dump.generators.iter().all(|&g| in_range(g))
            || !dump.inverses.iter().all(|&g| in_range(g))
            || !dump.gen_perms.iter().flatten().all(|&g| in_range(g))
        {
            return Err(bad("index out of range"));
        }
        let elements = dump
            .elements
            .chunks(cell)
            .map(|c| Matrix::new(&field, n, n, c.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad("elements not in canonical order"));
        }
        if elements[dump.identity as usize] != Matrix::identity(&field, n) {
            return Err(bad("identity"));
        }

        // parent-first order by depth; a cycle or a dangling parent is rejected
        if dump.parent[dump.identity as usize].is_some() {
            return Err(bad("identity has a parent"));
        }
        let mut depth: Vec<Option<u32>> = vec![None; size];
        for start in 0..size {
            let mut path = Vec::new();
            let mut x = start;
            let known = loop {
                if let Some(d) = depth[x] {
                    break Some(d);
                }
                if path.len() >= size {
                    return Err(bad("parent cycle"));
                }
                path.push(x);
                match dump.parent[x] {
                    None if x == dump.identity as usize => break None,
                    None => return Err(bad("orphan element")),
                    Some((p, s)) => {
                        if !in_range(p) || s as usize >= gens {
                            return Err(bad("parent out of range"));
                        }
                        if dump.gen_perms[s as usize][p as usize] as usize != x {
                            return Err(bad("parent inconsistent with generator table"));
                        }
                        x = p as usize;
                    }
                }
            };
            let mut d = known.map_or(0, |d| d + 1);
            for &y in path.iter().rev() {
                depth[y] = Some(d);
                d += 1;
            }
        }
        let mut order: Vec<usize> = (0..size).collect();
        order.sort_by_key(|&x| depth[x]);

        let index: HashMap<Matrix, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let generators: Vec<usize> = dump.generators.iter().map(|&g| g as usize).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..spot_checks.min(size * gens.max(1)) {
            let x = rng.gen_range(0..size);
            let inv = dump.inverses[x] as usize;
            if elements[x].mul_unchecked(&elements[inv]) != elements[dump.identity as usize] {
                return Err(bad("inverse table"));
            }
            if gens > 0 {
                let s = rng.gen_range(0..gens);
                let y = elements[x].mul_unchecked(&elements[generators[s]]);
                if index.get(&y) != Some(&(dump.gen_perms[s][x] as usize)) {
                    return Err(bad("generator table"));
                }
            }
        }
        let parts = Parts {
            elements,
            index,
            generators,
            identity: dump.identity as usize,
            inverses: dump.inverses.iter().map(|&i| i as usize).collect(),
            gen_perms: dump.gen_perms.clone(),
            parent: dump.parent.clone(),
        };
        Ok(Self::assemble(&field, n, parts, &order))
    }

    /// `GL(n, q)` from [`general_linear_generators`].
    pub fn general_linear(field: &Arc<FqField>, n: usize, cap: usize) -> Result<Self> {
        Self::closure(field, n, &general_linear_generators(field, n), cap)
    }

    /// `SL(n, q)` from [`special_linear_generators`].
    pub fn special_linear(field: &Arc<FqField>, n: usize, cap: usize) -> Result<Self> {
        Self::closure(field, n, &special_linear_generators(field, n), cap)
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Matrix {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    /// Index of `g_i * g_j`.
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        let order = self.order();
        if let Some(t) = &self.table {
            return t[i * order + j] as usize;
        }
        let word = &self.word_data[self.word_start[j] as usize..self.word_start[j + 1] as usize];
        word.iter()
            .fold(i, |acc, &s| self.gen_perms[s as usize][acc] as usize)
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// Checks closure under products directly on matrices: every pair when the
    /// order is at most 500, otherwise 10^4 seeded random pairs.
    pub fn verify_closed(&self, seed: u64) -> bool {
        let order = self.order();
        let check = |i: usize, j: usize| {
            self.index
                .get(&self.elements[i].mul_unchecked(&self.elements[j]))
                .is_some_and(|&k| k == self.mul(i, j))
        };
        if order <= EXHAUSTIVE_CLOSURE_LIMIT {
            (0..order).all(|i| (0..order).all(|j| check(i, j)))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..RANDOM_CLOSURE_PAIRS).all(|_| check(rng.gen_range(0..order), rng.gen_range(0..order)))
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert(self.identity);
        Subgroup {
            members,
            order: 1,
            gens: Vec::new(),
        }
    }

    pub fn whole_group(&self) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert_range(..);
        Subgroup {
            members,
            order: self.order(),
            gens: self.generators.clone(),
        }
    }

    /// `<K, g>`, built as a union of right cosets of `K`.
    pub fn join(&self, k: &Subgroup, g: usize) -> Subgroup {
        if k.contains(g) {
            return k.clone();
        }
        let mut members = k.members.clone();
        let mut gens = k.gens.clone();
        gens.push(g);
        let k_elems: Vec<usize> = k.members.ones().collect();
        let mut reps = vec![self.identity];
        let mut next = 0;
        while next < reps.len() {
            let r = reps[next];
            for &s in &gens {
                let x = self.mul(r, s);
                if !members.contains(x) {
                    reps.push(x);
                    for &kk in &k_elems {
                        members.insert(self.mul(kk, x));
                    }
                }
            }
            next += 1;
        }
        Subgroup {
            order: members.count_ones(..),
            members,
            gens,
        }
    }

    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        gens.iter()
            .fold(self.trivial_subgroup(), |k, &g| self.join(&k, g))
    }

    pub fn subgroup_from_matrices(&self, gens: &[Matrix]) -> Result<Subgroup> {
        let ids = gens
            .iter()
            .map(|m| self.index_of(m).ok_or(Error::NotInGroup))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.generate(&ids))
    }

    /// True iff `members` is nonempty and closed under products (hence a subgroup).
    pub fn is_closed_subset(&self, members: &FixedBitSet) -> bool {
        let ids: Vec<usize> = members.ones().collect();
        !ids.is_empty()
            && ids
                .iter()
                .all(|&a| ids.iter().all(|&b| members.contains(self.mul(a, b))))
    }

    /// Wraps a member set that is known to be a subgroup, choosing
    /// generators greedily in index order.
    pub fn subgroup_from_members(&self, members: FixedBitSet) -> Subgroup {
        debug_assert!(self.is_closed_subset(&members));
        let mut current = self.trivial_subgroup();
        for g in members.ones() {
            if !current.contains(g) {
                current = self.join(&current, g);
            }
        }
        debug_assert_eq!(current.members, members);
        current
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut members = a.members.clone();
        members.intersect_with(&b.members);
        self.subgroup_from_members(members)
    }

    /// `{g in G : W g = W}`.
    pub fn stabilizer(&self, w: &Subspace) -> Result<Subgroup> {
        if w.ambient_dim() != self.n || **w.field() != *self.field {
            return Err(Error::AmbientMismatch);
        }
        let mut members = FixedBitSet::with_capacity(self.order());
        for (i, g) in self.elements.iter().enumerate() {
            if w.is_invariant_under(g) {
                members.insert(i);
            }
        }
        Ok(self.subgroup_from_members(members))
    }

    /// Whether no proper nontrivial subspace is fixed by every generator.
    pub fn is_irreducible(&self) -> Result<bool> {
        let gens: Vec<Matrix> = self
            .generators
            .iter()
            .map(|&g| self.elements[g].clone())
            .collect();
        Ok(crate::linalg::invariant_subspaces(&self.field, self.n, &gens, true)?.is_empty())
    }

    /// Invariant proper nontrivial subspaces of a subgroup.
    pub fn invariant_subspaces_of(&self, h: &Subgroup) -> Result<crate::linalg::SubspaceLattice> {
        let gens: Vec<Matrix> = h.gens.iter().map(|&g| self.elements[g].clone()).collect();
        crate::linalg::invariant_subspaces(&self.field, self.n, &gens, true)
    }

    /// All `K` with `H <= K <= G`.
    pub fn overgroup_interval(&self, h: &Subgroup, cap: usize) -> Result<Vec<Subgroup>> {
        self.interval(h, &self.whole_group(), cap)
    }

    /// All `K` with `bottom <= K <= top`, by fixed-point closure: starting
    /// from `bottom`, every known `K` is extended by each element of
    /// `top \ K`. Sorted by order, then by member indices.
    pub fn interval(&self, bottom: &Subgroup, top: &Subgroup, cap: usize) -> Result<Vec<Subgroup>> {
        if !bottom.is_subgroup_of(top) {
            return Err(Error::SubgroupNotContained);
        }
        let top_elems: Vec<usize> = top.members.ones().collect();
        let mut found: Vec<Subgroup> = vec![bottom.clone()];
        let mut seen: HashMap<FixedBitSet, usize> = HashMap::from([(bottom.members.clone(), 0)]);
        let mut next = 0;
        while next < found.len() {
            let k = found[next].clone();
            let k_elems: Vec<usize> = k.members.ones().collect();
            let mut done = k.members.clone();
            for &g in &top_elems {
                if done.contains(g) {
                    continue;
                }
                // <K, kg> = <K, gk> = <K, g>
                for &x in &k_elems {
                    done.insert(self.mul(x, g));
                    done.insert(self.mul(g, x));
                }
                let joined = self.join(&k, g);
                if !seen.contains_key(&joined.members) {
                    if found.len() >= cap {
                        return Err(Error::IntervalTooLarge(cap));
                    }
                    seen.insert(joined.members.clone(), found.len());
                    found.push(joined);
                }
            }
            next += 1;
        }
        found.sort_by_cached_key(|s| (s.order, s.member_ids()));
        Ok(found)
    }
}

/// Elementary transvections `I + a E_ij` with `a` running over the additive
/// basis `1, p, p^2, ...` of the field; they generate `SL(n, q)`.
pub fn special_linear_generators(field: &Arc<FqField>, n: usize) -> Vec<Matrix> {
    let p = field.characteristic();
    let additive_basis: Vec<u32> = (0..field.degree()).map(|t| p.pow(t)).collect();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for &a in &additive_basis {
                gens.push(Matrix::transvection(field, n, i, j, a));
            }
        }
    }
    gens
}

/// The transvections plus `diag(w, 1, ..., 1)` with `w` primitive; they
/// generate `GL(n, q)`.
pub fn general_linear_generators(field: &Arc<FqField>, n: usize) -> Vec<Matrix> {
    let mut gens = special_linear_generators(field, n);
    if n > 0 {
        let mut diag = vec![1; n];
        diag[0] = field.primitive_element();
        gens.push(Matrix::diagonal(field, &diag));
    }
    gens
}

/// A right action of a subgroup `L` of a [`GroupSet`] on points `0..len`.
#[derive(Debug, Clone)]
pub struct GroupAction {
    group_order: usize,
    acting: Subgroup,
    acting_ids: Vec<usize>,
    position: HashMap<usize, usize>,
    // images[position of g][x] = x . g
    images: Vec<Vec<usize>>,
    points: usize,
    extended: bool,
    labels: Vec<Subspace>,
}

impl GroupAction {
    /// Builds an action from an explicit table: `images[i][x]` is the image of
    /// point `x` under the `i`-th member (in index order) of `acting`.
    pub fn from_table(group: &GroupSet, acting: &Subgroup, images: Vec<Vec<usize>>) -> Result<Self> {
        let acting_ids = acting.member_ids();
        if images.len() != acting_ids.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} image rows for {} acting elements",
                images.len(),
                acting_ids.len()
            )));
        }
        let points = images.first().map_or(0, Vec::len);
        if images.iter().any(|row| row.len() != points || row.iter().any(|&x| x >= points)) {
            return Err(Error::DimensionMismatch("malformed action table".into()));
        }
        Ok(Self {
            group_order: group.order(),
            position: acting_ids.iter().enumerate().map(|(i, &g)| (g, i)).collect(),
            acting: acting.clone(),
            acting_ids,
            images,
            points,
            extended: false,
            labels: Vec::new(),
        })
    }

    /// The action of `L` on the orbit closure of `points`.
    pub fn restrict(&self, group: &GroupSet, l: &Subgroup) -> Result<Self> {
        if !l.is_subgroup_of(&self.acting) {
            return Err(Error::SubgroupNotContained);
        }
        let images = l
            .members
            .ones()
            .map(|g| self.images[self.position[&g]].clone())
            .collect();
        let mut out = Self::from_table(group, l, images)?;
        out.labels = self.labels.clone();
        out.extended = self.extended;
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.points
    }

    pub fn is_empty(&self) -> bool {
        self.points == 0
    }

    /// Whether points had to be added to close the input under the action.
    pub fn was_extended(&self) -> bool {
        self.extended
    }

    /// Subspace labels when built by [`action_from_subspaces`].
    pub fn labels(&self) -> &[Subspace] {
        &self.labels
    }

    pub fn acting(&self) -> &Subgroup {
        &self.acting
    }

    /// `x . g`, or `None` when `g` is not in the acting group.
    pub fn image(&self, x: usize, g: usize) -> Option<usize> {
        self.position.get(&g).map(|&i| self.images[i][x])
    }

    /// `L_x` as a member set of the parent group.
    pub fn point_stabilizer(&self, x: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.group_order);
        for (i, &g) in self.acting_ids.iter().enumerate() {
            if self.images[i][x] == x {
                bits.insert(g);
            }
        }
        bits
    }

    /// Identity acts trivially and `x.(gh) = (x.g).h` on `samples` random triples.
    pub fn is_consistent(&self, group: &GroupSet, samples: usize, seed: u64) -> bool {
        let e = group.identity();
        if (0..self.points).any(|x| self.image(x, e) != Some(x)) {
            return false;
        }
        if self.points == 0 {
            return true;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples).all(|_| {
            let g = self.acting_ids[rng.gen_range(0..self.acting_ids.len())];
            let h = self.acting_ids[rng.gen_range(0..self.acting_ids.len())];
            let x = rng.gen_range(0..self.points);
            let gh = group.mul(g, h);
            self.image(x, gh) == self.image(x, g).and_then(|y| self.image(y, h))
        })
    }
}

/// The action of `G` on subspaces by `W . g = W g`. Points not closed under
/// the action are extended to their orbit closure (see
/// [`GroupAction::was_extended`]).
pub fn action_from_subspaces(group: &GroupSet, points: &[Subspace]) -> Result<GroupAction> {
    for w in points {
        if w.ambient_dim() != group.dim() || **w.field() != **group.field() {
            return Err(Error::AmbientMismatch);
        }
    }
    let mut labels: Vec<Subspace> = Vec::new();
    let mut where_is: HashMap<Subspace, usize> = HashMap::new();
    for w in points {
        if !where_is.contains_key(w) {
            where_is.insert(w.clone(), labels.len());
            labels.push(w.clone());
        }
    }
    let input_len = labels.len();
    let mut images: Vec<Vec<usize>> = vec![Vec::new(); group.order()];
    let mut x = 0;
    while x < labels.len() {
        for (g, row) in images.iter_mut().enumerate() {
            let y = labels[x].image_unchecked(group.element(g));
            let id = match where_is.get(&y) {
                Some(&id) => id,
                None => {
                    where_is.insert(y.clone(), labels.len());
                    labels.push(y);
                    labels.len() - 1
                }
            };
            row.push(id);
        }
        x += 1;
    }
    let whole = group.whole_group();
    let mut action = GroupAction::from_table(group, &whole, images)?;
    action.extended = labels.len() > input_len;
    action.labels = labels;
    Ok(action)
}

/// Outcome of comparing the two alternating sums of the stabilizer lemma.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaReport {
    /// Sum over families `E` of distinct stabilizers with `∩E != T`.
    pub sum_families: i64,
    /// Sum over point sets `Q ⊆ X'` with `∩_{x in Q} L_x != T`.
    pub sum_points: i64,
    pub distinct_stabilizers: usize,
    pub equal: bool,
}

fn signed_sum_nonmatching(sets: &[FixedBitSet], start: &FixedBitSet, target: &FixedBitSet) -> i64 {
    fn walk(
        sets: &[FixedBitSet],
        from: usize,
        current: &FixedBitSet,
        size: usize,
        target: &FixedBitSet,
    ) -> i64 {
        let mut total = if current != target {
            if size.is_multiple_of(2) {
                1
            } else {
                -1
            }
        } else {
            0
        };
        for i in from..sets.len() {
            let mut next = current.clone();
            next.intersect_with(&sets[i]);
            total += walk(sets, i + 1, &next, size + 1, target);
        }
        total
    }
    walk(sets, 0, start, 0, target)
}

/// Enumerates both families of the stabilizer lemma over the powerset of `X'`
/// (and of the distinct stabilizers) and compares their alternating sums. The
/// intersection over the empty family is the acting group `L`.
pub fn verify_lemma_4_1(
    action: &GroupAction,
    t: &Subgroup,
    x_prime: &[usize],
    bound: usize,
) -> Result<LemmaReport> {
    if x_prime.len() > bound {
        return Err(Error::PowersetTooLarge {
            size: x_prime.len(),
            bound,
        });
    }
    let mut stabs = Vec::with_capacity(x_prime.len());
    for &x in x_prime {
        if x >= action.len() {
            return Err(Error::IndexOutOfRange(x));
        }
        let s = action.point_stabilizer(x);
        if !t.members.is_subset(&s) {
            return Err(Error::HypothesisViolated(x));
        }
        stabs.push(s);
    }
    let mut distinct: Vec<FixedBitSet> = Vec::new();
    for s in &stabs {
        if !distinct.contains(s) {
            distinct.push(s.clone());
        }
    }
    let whole = &action.acting.members;
    let sum_families = signed_sum_nonmatching(&distinct, whole, &t.members);
    let sum_points = signed_sum_nonmatching(&stabs, whole, &t.members);
    Ok(LemmaReport {
        sum_families,
        sum_points,
        distinct_stabilizers: distinct.len(),
        equal: sum_families == sum_points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::enumerate_subspaces;

    fn gf(p: u32) -> Arc<FqField> {
        Arc::new(FqField::prime(p).unwrap())
    }

    fn gl22() -> GroupSet {
        let f = gf(2);
        let gens = [
            Matrix::from_rows(&f, &[vec![1, 1], vec![0, 1]]).unwrap(),
            Matrix::from_rows(&f, &[vec![0, 1], vec![1, 0]]).unwrap(),
        ];
        GroupSet::closure(&f, 2, &gens, DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn dump_round_trip() {
        let f = gf(3);
        let g = GroupSet::general_linear(&f, 2, 1000).unwrap();
        let dump = g.to_dump();
        let h = GroupSet::from_dump(&dump, 100, 1).unwrap();
        assert_eq!(h.elements(), g.elements());
        assert_eq!(h.generators(), g.generators());
        for i in 0..g.order() {
            for j in 0..g.order() {
                assert_eq!(h.mul(i, j), g.mul(i, j));
            }
        }
        let mut broken = dump.clone();
        broken.gen_perms[0].swap(0, 1);
        assert!(GroupSet::from_dump(&broken, 10_000, 1).is_err());
        let mut cyclic = dump.clone();
        cyclic.parent[g.identity()] = Some((0, 0));
        assert!(GroupSet::from_dump(&cyclic, 0, 1).is_err());
    }

    #[test]
    fn closure_orders() {
        let f = gf(2);
        let trivial = GroupSet::closure(&f, 2, &[Matrix::identity(&f, 2)], 10).unwrap();
        assert_eq!(trivial.order(), 1);
        assert_eq!(gl22().order(), 6);
        let f3 = gf(3);
        assert_eq!(GroupSet::general_linear(&f3, 2, 1000).unwrap().order(), 48);
        assert_eq!(GroupSet::special_linear(&f3, 2, 1000).unwrap().order(), 24);
    }

    #[test]
    fn closure_errors() {
        let f = gf(3);
        assert_eq!(
            GroupSet::closure(&f, 2, &[Matrix::zeros(&f, 2, 2)], 10).unwrap_err(),
            Error::SingularGenerator(0)
        );
        assert_eq!(
            GroupSet::general_linear(&f, 2, 10).unwrap_err(),
            Error::OrderCapExceeded(10)
        );
    }

    #[test]
    fn word_multiplication_matches_table() {
        let f = gf(3);
        let g = GroupSet::general_linear(&f, 2, 1000).unwrap();
        assert!(g.has_table());
        assert!(g.verify_closed(7));
        let f11 = gf(11);
        let big = GroupSet::general_linear(&f11, 2, DEFAULT_ORDER_CAP).unwrap();
        assert!(!big.has_table());
        assert_eq!(big.order(), 120 * 110);
        assert!(big.verify_closed(7));
    }

    #[test]
    fn irreducibility() {
        assert!(gl22().is_irreducible().unwrap());
        let f3 = gf(3);
        let d = GroupSet::closure(&f3, 2, &[Matrix::diagonal(&f3, &[2, 1])], 100).unwrap();
        assert!(!d.is_irreducible().unwrap());
        let trivial = GroupSet::closure(&f3, 2, &[], 100).unwrap();
        assert!(!trivial.is_irreducible().unwrap());
    }

    #[test]
    fn stabilizer_examples() {
        let g = gl22();
        let f = g.field().clone();
        assert_eq!(g.stabilizer(&Subspace::whole(&f, 2)).unwrap().order(), 6);
        let e1 = Subspace::span(&f, 2, &[vec![1, 0]]).unwrap();
        let st = g.stabilizer(&e1).unwrap();
        assert_eq!(st.order(), 2);
        let lower = Matrix::from_rows(&f, &[vec![1, 0], vec![1, 1]]).unwrap();
        assert!(st.contains(g.index_of(&lower).unwrap()));

        let f3 = gf(3);
        let gl23 = GroupSet::general_linear(&f3, 2, 1000).unwrap();
        let e1 = Subspace::span(&f3, 2, &[vec![1, 0]]).unwrap();
        let st = gl23.stabilizer(&e1).unwrap();
        assert_eq!(st.order(), 12);
        assert!(st.members.ones().all(|i| gl23.element(i).get(0, 1) == 0));
    }

    #[test]
    fn intervals_in_gl22() {
        let g = gl22();
        let whole = g.whole_group();
        assert_eq!(g.overgroup_interval(&whole, 10).unwrap(), vec![whole.clone()]);
        let all = g.overgroup_interval(&g.trivial_subgroup(), 10).unwrap();
        let orders: Vec<usize> = all.iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
        let c3 = all[4].clone();
        assert_eq!(g.overgroup_interval(&c3, 10).unwrap(), vec![c3, whole]);
        assert_eq!(
            g.overgroup_interval(&g.trivial_subgroup(), 3).unwrap_err(),
            Error::IntervalTooLarge(3)
        );
    }

    #[test]
    fn action_on_lines() {
        let g = gl22();
        let f = g.field().clone();
        let lines = enumerate_subspaces(&f, 2, Some(1), 100).unwrap();
        let act = action_from_subspaces(&g, &lines).unwrap();
        assert_eq!(act.len(), 3);
        assert!(!act.was_extended());
        assert!(act.is_consistent(&g, 50, 1));
        // faithful: only the identity fixes all three lines
        let kernel = (0..3).fold(g.whole_group().members.clone(), |mut acc, x| {
            acc.intersect_with(&act.point_stabilizer(x));
            acc
        });
        assert_eq!(kernel.count_ones(..), 1);

        let single = action_from_subspaces(&g, &[Subspace::whole(&f, 2)]).unwrap();
        assert_eq!(single.len(), 1);
        let partial = action_from_subspaces(&g, &lines[..1]).unwrap();
        assert!(partial.was_extended());
        assert_eq!(partial.len(), 3);
    }

    #[test]
    fn lemma_examples() {
        let g = gl22();
        let f = g.field().clone();
        let lines = enumerate_subspaces(&f, 2, Some(1), 100).unwrap();
        let act = action_from_subspaces(&g, &lines).unwrap();
        let t = g.trivial_subgroup();
        let r = verify_lemma_4_1(&act, &t, &[], 22).unwrap();
        assert_eq!((r.sum_families, r.sum_points), (1, 1));
        let r = verify_lemma_4_1(&act, &t, &[0, 1, 2], 22).unwrap();
        assert_eq!((r.sum_families, r.sum_points), (-2, -2));
        assert!(r.equal);

        let st = g.stabilizer(&lines[0]).unwrap();
        assert_eq!(
            verify_lemma_4_1(&act, &st, &[1], 22).unwrap_err(),
            Error::HypothesisViolated(1)
        );
        // every stabilizer equals T: only the empty set counts
        let r = verify_lemma_4_1(&act, &st, &[0], 22).unwrap();
        assert_eq!((r.sum_families, r.sum_points), (1, 1));
    }
}
