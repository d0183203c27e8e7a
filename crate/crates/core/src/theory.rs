//! Stabilizer families, the reducible-subgroup ideal, and the identities
//!
//! ```text
//! -μ_Î(H,G) = Σ_{E ∈ Ψ'} (-1)^|E| = Σ_{X ∈ Ψ} (-1)^|X| = -χ̃(Δ1) = -χ̃(Δ2)
//! ```
//!
//! for an irreducible `G <= GL(n, q)` and a proper subgroup `H < G`.
//!
//! Every quantity is computed on its own path: `μ_Î` on the explicitly built
//! ideal poset, the three sums by signed walks over subsets of `C(G,H)` and
//! `S(V,H)*`, and each `χ̃` from the face counts of an explicitly enumerated
//! complex. None of them is derived from another.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::complex::{euler, SimplicialComplex, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::group::{GroupSet, Subgroup, DEFAULT_INTERVAL_CAP, DEFAULT_POWERSET_BOUND};
use crate::linalg::{enumerate_subspaces, Subspace, DEFAULT_SUBSPACE_CAP};
use crate::poset::{mobius_from, BoundedPoset, FinitePoset};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest overgroup interval that may be enumerated.
    pub max_interval: usize,
    /// Largest family whose powerset may be walked.
    pub max_powerset: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_interval: DEFAULT_INTERVAL_CAP,
            max_powerset: DEFAULT_POWERSET_BOUND,
        }
    }
}

/// `S(V,H)*` with the stabilizer of each member, and the distinct
/// stabilizers `C(G,H)`.
#[derive(Debug, Clone)]
pub struct StabilizerFamily {
    pub pairs: Vec<(Subspace, Subgroup)>,
    pub distinct: Vec<Subgroup>,
}

impl StabilizerFamily {
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// `I(G,H)` ordered by inclusion, and its completion `Î(G,H)`.
#[derive(Debug, Clone)]
pub struct ReducibleIdeal {
    members: Vec<Subgroup>,
    ideal: FinitePoset,
    hat: BoundedPoset,
}

impl ReducibleIdeal {
    /// Members of `I(G,H)`, sorted by order and then by member indices.
    pub fn members(&self) -> &[Subgroup] {
        &self.members
    }

    pub fn ideal(&self) -> &FinitePoset {
        &self.ideal
    }

    /// `Î(G,H)`: `I(G,H)` plus `G` on top, or the 2-chain `{H, G}` when `H`
    /// is irreducible.
    pub fn hat(&self) -> &BoundedPoset {
        &self.hat
    }

    pub fn contains(&self, k: &Subgroup) -> bool {
        self.members.binary_search_by_key(&(k.order(), k.member_ids()), |s| (s.order(), s.member_ids())).is_ok()
    }

    /// `μ_Î(H, G)`.
    pub fn mu_hat(&self) -> i64 {
        self.hat.mobius_bottom_top()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiSums {
    pub sum_psi: i64,
    pub sum_psi_complement: i64,
    pub sum_psi_prime: i64,
}

/// All quantities of the main identity for one pair `(G, H)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub subgroup_order: usize,
    pub subgroup_index: usize,
    pub reducible: bool,
    /// `|S(V,H)*|`
    pub invariant_subspaces: usize,
    /// `|C(G,H)|`
    pub stabilizer_family: usize,
    /// `|I(G,H)|`
    pub ideal_size: usize,
    pub mu_hat: i64,
    pub sum_psi_prime: i64,
    pub sum_psi: i64,
    pub sum_psi_complement: i64,
    pub chi1_reduced: i64,
    pub chi2_reduced: i64,
    pub mu_full: Option<i64>,
    pub eq3_residual: Option<i64>,
    pub all_equal: bool,
}

impl TheoremReport {
    /// `Σ_Ψ + Σ_{Ψ^∁} = 0`, the alternating sum over the powerset of
    /// `C(G,H)`. For irreducible `H` that powerset is `{∅}` and the total is
    /// `1` instead.
    pub fn complement_sum_vanishes(&self) -> bool {
        let total = self.sum_psi + self.sum_psi_complement;
        if self.reducible {
            total == 0
        } else {
            total == 1
        }
    }

    /// `μ_Î = Σ_{Ψ^∁}` for reducible `H`. When `H` is irreducible the coatom
    /// `H` of `Î = {H, G}` is not in the empty family `C(G,H)`, the crosscut
    /// hypothesis fails, and indeed `μ_Î = -1` while `Ψ^∁` is empty; the
    /// check is vacuous there.
    pub fn crosscut_form_holds(&self) -> bool {
        !self.reducible || self.mu_hat == self.sum_psi_complement
    }

    /// Every identity checked for this pair holds.
    pub fn passed(&self) -> bool {
        self.all_equal
            && self.complement_sum_vanishes()
            && self.crosscut_form_holds()
            && self.eq3_residual.unwrap_or(0) == 0
    }
}

/// The pieces of the decomposition
/// `μ(H,G) = μ_Î(H,G) - Σ_{K ∉ I(G,H), H <= K < G} μ(H,K)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Eq3Report {
    pub mu_full: i64,
    pub mu_hat: i64,
    pub outside_sum: i64,
    pub interval_size: usize,
    pub residual: i64,
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Verification context for one irreducible group `G`. Stabilizers of
/// subspaces are computed lazily and shared across subgroups `H`.
pub struct Verifier<'g> {
    group: &'g GroupSet,
    caps: Caps,
    subspaces: Vec<Subspace>,
    stabilizers: Vec<OnceLock<Subgroup>>,
}

impl<'g> Verifier<'g> {
    pub fn new(group: &'g GroupSet, caps: Caps) -> Result<Self> {
        if !group.is_irreducible()? {
            return Err(Error::ReducibleAmbientGroup);
        }
        let subspaces: Vec<Subspace> =
            enumerate_subspaces(group.field(), group.dim(), None, DEFAULT_SUBSPACE_CAP)?
                .into_iter()
                .filter(|w| !w.is_zero() && !w.is_whole())
                .collect();
        let stabilizers = subspaces.iter().map(|_| OnceLock::new()).collect();
        Ok(Self {
            group,
            caps,
            subspaces,
            stabilizers,
        })
    }

    pub fn group(&self) -> &GroupSet {
        self.group
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    fn check_subgroup(&self, h: &Subgroup) -> Result<()> {
        if h.members().len() != self.group.order() {
            return Err(Error::SubgroupNotContained);
        }
        Ok(())
    }

    /// `stab_G(W)` for a proper nontrivial `W`.
    pub fn stabilizer(&self, w: &Subspace) -> Result<&Subgroup> {
        let i = self
            .subspaces
            .binary_search(w)
            .map_err(|_| Error::AmbientMismatch)?;
        if let Some(s) = self.stabilizers[i].get() {
            return Ok(s);
        }
        let s = self.group.stabilizer(w)?;
        Ok(self.stabilizers[i].get_or_init(|| s))
    }

    /// `S(V,H)*` from the generators of `H`, each paired with `stab_G(W)`.
    pub fn stabilizer_family(&self, h: &Subgroup) -> Result<StabilizerFamily> {
        self.check_subgroup(h)?;
        let lattice = self.group.invariant_subspaces_of(h)?;
        let mut pairs = Vec::with_capacity(lattice.len());
        for w in lattice.iter() {
            let stab = self.stabilizer(w)?.clone();
            debug_assert!(h.is_subgroup_of(&stab));
            pairs.push((w.clone(), stab));
        }
        let mut seen = HashSet::new();
        let mut distinct: Vec<Subgroup> = pairs
            .iter()
            .filter(|(_, s)| seen.insert(s.members().clone()))
            .map(|(_, s)| s.clone())
            .collect();
        distinct.sort_by_cached_key(|s| (s.order(), s.member_ids()));
        Ok(StabilizerFamily { pairs, distinct })
    }

    /// `I(G,H)` as the union of the intervals `[H, M]`, `M ∈ C(G,H)`, and
    /// its completion by `G`.
    pub fn build_ideal(&self, h: &Subgroup, fam: &StabilizerFamily) -> Result<ReducibleIdeal> {
        self.check_subgroup(h)?;
        if *h == self.group.whole_group() {
            return Err(Error::WholeGroup);
        }
        if fam.distinct.is_empty() {
            let ideal = FinitePoset::antichain(0);
            let hat = FinitePoset::from_fn(vec!["H".into(), "G".into()], |a, b| a <= b)?;
            return Ok(ReducibleIdeal {
                members: Vec::new(),
                ideal,
                hat: BoundedPoset::new(hat)?,
            });
        }

        let mut found: HashMap<FixedBitSet, Subgroup> = HashMap::new();
        for m in &fam.distinct {
            for k in self.group.interval(h, m, self.caps.max_interval)? {
                found.entry(k.members().clone()).or_insert(k);
            }
            if found.len() > self.caps.max_interval {
                return Err(Error::IntervalTooLarge(self.caps.max_interval));
            }
        }
        let mut members: Vec<Subgroup> = found.into_values().collect();
        members.sort_by_cached_key(|s| (s.order(), s.member_ids()));

        // meets in Î are intersections, which must stay inside the ideal
        let index: HashMap<&FixedBitSet, usize> =
            members.iter().enumerate().map(|(i, s)| (s.members(), i)).collect();
        for a in 0..members.len() {
            for b in a + 1..members.len() {
                let mut meet = members[a].members().clone();
                meet.intersect_with(members[b].members());
                if !index.contains_key(&meet) {
                    return Err(Error::NotALattice(a, b));
                }
            }
        }

        let labels: Vec<String> = members
            .iter()
            .enumerate()
            .map(|(i, s)| format!("K{i}[{}]", s.order()))
            .collect();
        let leq = |a: usize, b: usize| members[a].is_subgroup_of(&members[b]);
        let ideal = FinitePoset::from_fn(labels.clone(), leq)?;
        let n = members.len();
        let mut hat_labels = labels;
        hat_labels.push("G".into());
        let hat = FinitePoset::from_fn(hat_labels, |a, b| b == n || (a < n && leq(a, b)))?;
        let hat = BoundedPoset::new(hat)?;
        debug_assert_eq!(hat.bottom(), 0);
        debug_assert_eq!(members[0], *h);
        Ok(ReducibleIdeal {
            members,
            ideal,
            hat,
        })
    }

    /// The three alternating sums over `Ψ`, `Ψ^∁` and `Ψ'`.
    ///
    /// The walks keep the running intersection (the whole group for the
    /// empty family). Intersections only shrink and always contain `H`, so
    /// once one equals `H` every extension lies in `Ψ^∁`; their signed count
    /// is `(-1)^|Y|` when nothing is left to add and zero otherwise.
    pub fn psi_sums(&self, h: &Subgroup, fam: &StabilizerFamily) -> Result<PsiSums> {
        self.check_subgroup(h)?;
        let bound = self.caps.max_powerset;
        for size in [fam.distinct.len(), fam.pairs.len()] {
            if size > bound {
                return Err(Error::PowersetTooLarge { size, bound });
            }
        }
        let target = h.order();
        let whole = self.group.whole_group();

        fn walk(sets: &[&FixedBitSet], target: usize, from: usize, current: &FixedBitSet, size: usize) -> (i64, i64) {
            if current.count_ones(..) == target {
                let tail = if from == sets.len() { sign(size) } else { 0 };
                return (0, tail);
            }
            let (mut inside, mut outside) = (sign(size), 0);
            for i in from..sets.len() {
                let mut next = current.clone();
                next.intersect_with(sets[i]);
                let (a, b) = walk(sets, target, i + 1, &next, size + 1);
                inside += a;
                outside += b;
            }
            (inside, outside)
        }

        let c_sets: Vec<&FixedBitSet> = fam.distinct.iter().map(Subgroup::members).collect();
        let (sum_psi, sum_psi_complement) = walk(&c_sets, target, 0, whole.members(), 0);
        let w_sets: Vec<&FixedBitSet> = fam.pairs.iter().map(|(_, s)| s.members()).collect();
        let (sum_psi_prime, _) = walk(&w_sets, target, 0, whole.members(), 0);
        Ok(PsiSums {
            sum_psi,
            sum_psi_complement,
            sum_psi_prime,
        })
    }

    /// `Δ1` on `{W ∈ S(V,H)* : stab_G(W) != H}` and `Δ2` on
    /// `{M ∈ C(G,H) : M != H}`; faces are the subsets whose stabilizers
    /// intersect in something larger than `H`. Every subset of the vertex set
    /// is tested, and the resulting family must already be downward closed.
    pub fn build_delta_complexes(
        &self,
        h: &Subgroup,
        fam: &StabilizerFamily,
    ) -> Result<(SimplicialComplex, SimplicialComplex)> {
        self.check_subgroup(h)?;
        let t1: Vec<(String, &FixedBitSet)> = fam
            .pairs
            .iter()
            .filter(|(_, s)| s != h)
            .map(|(w, s)| (format!("{w:?}"), s.members()))
            .collect();
        let t2: Vec<(String, &FixedBitSet)> = fam
            .distinct
            .iter()
            .filter(|s| *s != h)
            .map(|s| (format!("M{:?}", s.member_ids()), s.members()))
            .collect();
        let whole = self.group.whole_group();
        let d1 = self.complex_of(&t1, h, whole.members())?;
        let d2 = self.complex_of(&t2, h, whole.members())?;
        Ok((d1, d2))
    }

    fn complex_of(
        &self,
        vertices: &[(String, &FixedBitSet)],
        h: &Subgroup,
        whole: &FixedBitSet,
    ) -> Result<SimplicialComplex> {
        let bound = self.caps.max_powerset.min(MAX_VERTICES);
        if vertices.len() > bound {
            return Err(Error::PowersetTooLarge {
                size: vertices.len(),
                bound,
            });
        }
        fn collect(
            vertices: &[(String, &FixedBitSet)],
            h: &FixedBitSet,
            from: usize,
            mask: u64,
            current: &FixedBitSet,
            out: &mut Vec<u64>,
        ) {
            if current != h {
                out.push(mask);
            }
            for v in from..vertices.len() {
                let mut next = current.clone();
                next.intersect_with(vertices[v].1);
                collect(vertices, h, v + 1, mask | 1 << v, &next, out);
            }
        }
        let mut faces = Vec::new();
        collect(vertices, h.members(), 0, 0, whole, &mut faces);
        let labels = vertices.iter().map(|(l, _)| l.clone()).collect();
        SimplicialComplex::from_faces(labels, &faces, true)
    }

    /// All five quantities of the main identity, plus `Σ_{Ψ^∁}`.
    pub fn verify_theorem_4_5(&self, h: &Subgroup) -> Result<TheoremReport> {
        let fam = self.stabilizer_family(h)?;
        let ideal = self.build_ideal(h, &fam)?;
        self.theorem_report(h, &fam, &ideal)
    }

    fn theorem_report(&self, h: &Subgroup, fam: &StabilizerFamily, ideal: &ReducibleIdeal) -> Result<TheoremReport> {
        let mu_hat = ideal.mu_hat();
        let sums = self.psi_sums(h, fam)?;
        let (d1, d2) = self.build_delta_complexes(h, fam)?;
        let chi1_reduced = euler(&d1).chi_reduced;
        let chi2_reduced = euler(&d2).chi_reduced;
        let all_equal = [sums.sum_psi_prime, sums.sum_psi, -chi1_reduced, -chi2_reduced]
            .iter()
            .all(|&v| v == -mu_hat);
        Ok(TheoremReport {
            subgroup_order: h.order(),
            subgroup_index: self.group.order() / h.order(),
            reducible: !fam.is_empty(),
            invariant_subspaces: fam.pairs.len(),
            stabilizer_family: fam.distinct.len(),
            ideal_size: ideal.members().len(),
            mu_hat,
            sum_psi_prime: sums.sum_psi_prime,
            sum_psi: sums.sum_psi,
            sum_psi_complement: sums.sum_psi_complement,
            chi1_reduced,
            chi2_reduced,
            mu_full: None,
            eq3_residual: None,
            all_equal,
        })
    }

    /// `μ(from, to)` in the subgroup lattice, with the size of `[from, to]`.
    pub fn mobius_between(&self, from: &Subgroup, to: &Subgroup) -> Result<(i64, usize)> {
        self.check_subgroup(from)?;
        self.check_subgroup(to)?;
        mobius_between(self.group, from, to, self.caps.max_interval)
    }

    /// `μ(H, G)` over the full interval `[H, G]`.
    pub fn mobius_full_interval(&self, h: &Subgroup) -> Result<i64> {
        Ok(self.mobius_between(h, &self.group.whole_group())?.0)
    }

    pub fn verify_eq3(&self, h: &Subgroup) -> Result<Eq3Report> {
        let fam = self.stabilizer_family(h)?;
        let ideal = self.build_ideal(h, &fam)?;
        self.eq3_report(h, &ideal)
    }

    fn eq3_report(&self, h: &Subgroup, ideal: &ReducibleIdeal) -> Result<Eq3Report> {
        let interval = self.group.overgroup_interval(h, self.caps.max_interval)?;
        let poset = subgroup_poset(&interval)?;
        let row = mobius_from(&poset, 0);
        let top = interval.len() - 1;
        let mu_full = row[top];
        let mu_hat = ideal.mu_hat();
        let outside_sum: i64 = interval[..top]
            .iter()
            .zip(&row)
            // the sum runs over K outside Î \ {G}, which for irreducible H
            // is {H} rather than the empty ideal
            .filter(|(k, _)| *k != h && !ideal.contains(k))
            .map(|(_, &mu)| mu)
            .sum();
        Ok(Eq3Report {
            mu_full,
            mu_hat,
            outside_sum,
            interval_size: interval.len(),
            residual: mu_full - mu_hat + outside_sum,
        })
    }

    /// The main identity together with the decomposition of `μ(H, G)`.
    pub fn verify_pair(&self, h: &Subgroup) -> Result<TheoremReport> {
        let fam = self.stabilizer_family(h)?;
        let ideal = self.build_ideal(h, &fam)?;
        let mut report = self.theorem_report(h, &fam, &ideal)?;
        let eq3 = self.eq3_report(h, &ideal)?;
        report.mu_full = Some(eq3.mu_full);
        report.eq3_residual = Some(eq3.residual);
        Ok(report)
    }
}

/// Subgroups ordered by inclusion; `interval` must be sorted by order.
fn subgroup_poset(interval: &[Subgroup]) -> Result<FinitePoset> {
    FinitePoset::from_fn(
        (0..interval.len()).map(|i| format!("K{i}")).collect(),
        |a, b| interval[a].is_subgroup_of(&interval[b]),
    )
}

/// `μ(from, to)` in the subgroup lattice of `group`, with `|[from, to]|`.
/// Does not require `group` to be irreducible.
pub fn mobius_between(group: &GroupSet, from: &Subgroup, to: &Subgroup, cap: usize) -> Result<(i64, usize)> {
    let interval = group.interval(from, to, cap)?;
    let poset = subgroup_poset(&interval)?;
    let row = mobius_from(&poset, 0);
    Ok((row[interval.len() - 1], interval.len()))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::gfq::FqField;
    use crate::group::DEFAULT_ORDER_CAP;
    use crate::linalg::Matrix;

    fn gl(n: usize, q: u32) -> GroupSet {
        let f = Arc::new(FqField::of_order(q).unwrap());
        GroupSet::general_linear(&f, n, DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn gl22_trivial_subgroup() {
        let g = gl(2, 2);
        let v = Verifier::new(&g, Caps::default()).unwrap();
        let h = g.trivial_subgroup();
        let fam = v.stabilizer_family(&h).unwrap();
        assert_eq!(fam.pairs.len(), 3);
        assert_eq!(fam.distinct.len(), 3);
        assert!(fam.distinct.iter().all(|s| s.order() == 2));

        let ideal = v.build_ideal(&h, &fam).unwrap();
        assert_eq!(ideal.members().len(), 4);
        assert_eq!(ideal.hat().len(), 5);
        assert_eq!(ideal.mu_hat(), 2);

        let sums = v.psi_sums(&h, &fam).unwrap();
        assert_eq!(
            sums,
            PsiSums {
                sum_psi: -2,
                sum_psi_complement: 2,
                sum_psi_prime: -2
            }
        );

        let (d1, d2) = v.build_delta_complexes(&h, &fam).unwrap();
        assert_eq!(euler(&d1).chi_reduced, 2);
        assert_eq!(euler(&d2).chi_reduced, 2);
        assert_eq!(d1.num_faces(), 4);

        let r = v.verify_pair(&h).unwrap();
        assert!(r.passed());
        assert_eq!(r.mu_full, Some(3));
        assert_eq!(r.eq3_residual, Some(0));
    }

    #[test]
    fn irreducible_subgroup() {
        let g = gl(2, 2);
        let v = Verifier::new(&g, Caps::default()).unwrap();
        let all = g.overgroup_interval(&g.trivial_subgroup(), 100).unwrap();
        let c3 = all.iter().find(|s| s.order() == 3).unwrap();
        let fam = v.stabilizer_family(c3).unwrap();
        assert!(fam.is_empty());
        let ideal = v.build_ideal(c3, &fam).unwrap();
        assert!(ideal.members().is_empty());
        assert_eq!(ideal.mu_hat(), -1);
        let sums = v.psi_sums(c3, &fam).unwrap();
        assert_eq!((sums.sum_psi, sums.sum_psi_complement, sums.sum_psi_prime), (1, 0, 1));
        let (d1, d2) = v.build_delta_complexes(c3, &fam).unwrap();
        for d in [&d1, &d2] {
            assert!(d.vertices().is_empty());
            assert_eq!(d.num_faces(), 1);
        }
        let r = v.verify_pair(c3).unwrap();
        assert!(r.passed());
        assert_ne!(r.mu_hat, r.sum_psi_complement);
        assert_eq!(v.verify_eq3(c3).unwrap().residual, 0);
    }

    #[test]
    fn maximal_stabilizer() {
        let g = gl(2, 3);
        let v = Verifier::new(&g, Caps::default()).unwrap();
        let f = g.field().clone();
        let e1 = Subspace::span(&f, 2, &[vec![1, 0]]).unwrap();
        let h = v.stabilizer(&e1).unwrap().clone();
        let fam = v.stabilizer_family(&h).unwrap();
        let ideal = v.build_ideal(&h, &fam).unwrap();
        assert_eq!(ideal.members(), std::slice::from_ref(&h));
        assert_eq!(ideal.hat().len(), 2);
        let (d1, d2) = v.build_delta_complexes(&h, &fam).unwrap();
        assert!(d1.vertices().is_empty() && d2.vertices().is_empty());
        assert_eq!(d1.num_faces(), 1);
        assert!(v.verify_pair(&h).unwrap().passed());
    }

    #[test]
    fn diagonal_subgroup_of_gl23() {
        let g = gl(2, 3);
        let f = g.field().clone();
        let v = Verifier::new(&g, Caps::default()).unwrap();
        let h = g
            .subgroup_from_matrices(&[Matrix::diagonal(&f, &[2, 1])])
            .unwrap();
        let fam = v.stabilizer_family(&h).unwrap();
        assert_eq!(fam.pairs.len(), 2);
        assert_eq!(fam.distinct.len(), 2);
        assert!(fam.distinct.iter().all(|s| s.order() == 12));
        let r = v.verify_pair(&h).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.mu_hat, 0);
    }

    #[test]
    fn rejects_reducible_ambient_and_whole_group() {
        let f = Arc::new(FqField::prime(3).unwrap());
        let d = GroupSet::closure(&f, 2, &[Matrix::diagonal(&f, &[2, 1])], 10).unwrap();
        assert_eq!(
            Verifier::new(&d, Caps::default()).err(),
            Some(Error::ReducibleAmbientGroup)
        );
        let g = gl(2, 2);
        let v = Verifier::new(&g, Caps::default()).unwrap();
        assert_eq!(
            v.verify_theorem_4_5(&g.whole_group()).unwrap_err(),
            Error::WholeGroup
        );
        assert_eq!(v.mobius_full_interval(&g.whole_group()).unwrap(), 1);
    }
}
