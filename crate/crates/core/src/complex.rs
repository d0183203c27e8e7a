//! Abstract simplicial complexes on at most 64 vertices, with faces stored as
//! vertex bitmasks.
//!
//! Two degenerate complexes are kept apart: the void complex has no faces at
//! all (`χ̃ = 0`), while `{∅}` has exactly the empty face (`χ̃ = -1`).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::FinitePoset;

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    faces: BTreeSet<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    /// `face_counts[i]` is the number of `i`-dimensional faces.
    pub face_counts: Vec<u64>,
    pub chi: i64,
    pub chi_reduced: i64,
}

fn sign(k: u32) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl SimplicialComplex {
    /// The complex with no faces.
    pub fn void() -> Self {
        Self {
            vertices: Vec::new(),
            faces: BTreeSet::new(),
        }
    }

    /// Builds a complex on `vertices` from bitmask faces. Without `strict`
    /// the family is closed downward and every vertex singleton is added;
    /// with `strict` a family that is not already a complex is rejected.
    /// No vertices and no faces gives the void complex.
    pub fn from_faces(vertices: Vec<String>, faces: &[u64], strict: bool) -> Result<Self> {
        if vertices.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(vertices.len()));
        }
        let all = if vertices.len() == 64 {
            u64::MAX
        } else {
            (1u64 << vertices.len()) - 1
        };
        if let Some(&bad) = faces.iter().find(|&&f| f & !all != 0) {
            return Err(Error::IndexOutOfRange((63 - (bad & !all).leading_zeros()) as usize));
        }
        let mut set: BTreeSet<u64> = faces.iter().copied().collect();
        if strict {
            for &f in &set {
                let mut bits = f;
                while bits != 0 {
                    let v = bits & bits.wrapping_neg();
                    if !set.contains(&(f & !v)) {
                        return Err(Error::NotDownwardClosed(f));
                    }
                    bits &= bits - 1;
                }
            }
            if let Some(v) = (0..vertices.len()).find(|&v| !set.contains(&(1u64 << v))) {
                return Err(Error::MissingVertexFace(v));
            }
            if !vertices.is_empty() && set.is_empty() {
                return Err(Error::NotDownwardClosed(0));
            }
        } else {
            if set.is_empty() && vertices.is_empty() {
                return Ok(Self::void());
            }
            set.extend((0..vertices.len()).map(|v| 1u64 << v));
            let mut stack: Vec<u64> = set.iter().copied().collect();
            while let Some(f) = stack.pop() {
                let mut bits = f;
                while bits != 0 {
                    let v = bits & bits.wrapping_neg();
                    if set.insert(f & !v) {
                        stack.push(f & !v);
                    }
                    bits &= bits - 1;
                }
            }
            set.insert(0);
        }
        Ok(Self {
            vertices,
            faces: set,
        })
    }

    /// Faces given as lists of vertex indices.
    pub fn from_vertex_lists(vertices: Vec<String>, faces: &[Vec<usize>], strict: bool) -> Result<Self> {
        let masks = faces
            .iter()
            .map(|f| {
                f.iter().try_fold(0u64, |acc, &v| {
                    if v >= MAX_VERTICES {
                        Err(Error::IndexOutOfRange(v))
                    } else {
                        Ok(acc | 1 << v)
                    }
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_faces(vertices, &masks, strict)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn faces(&self) -> impl Iterator<Item = u64> + '_ {
        self.faces.iter().copied()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, face: u64) -> bool {
        self.faces.contains(&face)
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Largest face dimension; `None` for the void complex, `-1` for `{∅}`.
    pub fn dimension(&self) -> Option<i64> {
        self.faces.iter().map(|f| f.count_ones() as i64 - 1).max()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.faces.iter().all(|&f| {
            let mut bits = f;
            while bits != 0 {
                let v = bits & bits.wrapping_neg();
                if !self.faces.contains(&(f & !v)) {
                    return false;
                }
                bits &= bits - 1;
            }
            true
        })
    }

    /// Faces as sorted label lists, grouped by dimension (the empty face first).
    pub fn dump(&self) -> Vec<Vec<Vec<String>>> {
        let max = self.dimension().unwrap_or(-1);
        let mut out: Vec<Vec<Vec<String>>> = vec![Vec::new(); (max + 2).max(0) as usize];
        for &f in &self.faces {
            let labels: Vec<String> = (0..self.vertices.len())
                .filter(|&v| f >> v & 1 == 1)
                .map(|v| self.vertices[v].clone())
                .collect();
            out[f.count_ones() as usize].push(labels);
        }
        for dim in &mut out {
            dim.sort();
        }
        out
    }
}

pub fn euler(c: &SimplicialComplex) -> EulerReport {
    let max = c.dimension().unwrap_or(-1);
    let mut face_counts = vec![0u64; (max + 1).max(0) as usize];
    for f in c.faces() {
        let k = f.count_ones() as usize;
        if k > 0 {
            face_counts[k - 1] += 1;
        }
    }
    let chi: i64 = face_counts
        .iter()
        .enumerate()
        .map(|(i, &n)| sign(i as u32) * n as i64)
        .sum();
    let chi_reduced = if c.is_void() { 0 } else { chi - 1 };
    EulerReport {
        face_counts,
        chi,
        chi_reduced,
    }
}

/// `Σ_F (-1)^{|F|}` over every face, the empty face included.
pub fn face_alternating_sum(c: &SimplicialComplex) -> i64 {
    c.faces().map(|f| sign(f.count_ones())).sum()
}

/// `Δ(P)`: vertices are the elements of `P`, faces are its chains.
pub fn order_complex(poset: &FinitePoset) -> Result<SimplicialComplex> {
    let n = poset.len();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let order = poset.linear_extension();
    let mut faces = vec![0u64];
    // chains grow along the linear extension, so each is produced once
    let mut frontier: Vec<(u64, usize)> = vec![(0, 0)];
    while let Some((chain, from)) = frontier.pop() {
        for (pos, &y) in order.iter().enumerate().skip(from) {
            let mut bits = chain;
            let mut ok = true;
            while bits != 0 {
                if !poset.lt(bits.trailing_zeros() as usize, y) {
                    ok = false;
                    break;
                }
                bits &= bits - 1;
            }
            if ok {
                let next = chain | 1 << y;
                faces.push(next);
                frontier.push((next, pos + 1));
            }
        }
    }
    SimplicialComplex::from_faces(poset.labels().to_vec(), &faces, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    }

    #[test]
    fn empty_face_only() {
        let c = SimplicialComplex::from_faces(Vec::new(), &[0], false).unwrap();
        assert_eq!(c.num_faces(), 1);
        let e = euler(&c);
        assert_eq!((e.chi, e.chi_reduced), (0, -1));
        assert_eq!(face_alternating_sum(&c), 1);
    }

    #[test]
    fn void_complex() {
        let c = SimplicialComplex::from_faces(Vec::new(), &[], false).unwrap();
        assert!(c.is_void());
        assert_eq!(euler(&c).chi_reduced, 0);
        assert_eq!(face_alternating_sum(&c), 0);
    }

    #[test]
    fn triangle() {
        let c = SimplicialComplex::from_faces(names(3), &[0b111], false).unwrap();
        assert_eq!(c.num_faces(), 8);
        let e = euler(&c);
        assert_eq!(e.face_counts, vec![3, 3, 1]);
        assert_eq!((e.chi, e.chi_reduced), (1, 0));
        assert_eq!(face_alternating_sum(&c), 0);

        let boundary = SimplicialComplex::from_faces(names(3), &[0b011, 0b101, 0b110], false).unwrap();
        let e = euler(&boundary);
        assert_eq!((e.chi, e.chi_reduced), (0, -1));
    }

    #[test]
    fn isolated_vertices() {
        let c = SimplicialComplex::from_faces(names(3), &[], false).unwrap();
        let e = euler(&c);
        assert_eq!((e.chi, e.chi_reduced), (3, 2));
        assert_eq!(face_alternating_sum(&c), -2);
    }

    #[test]
    fn strict_mode() {
        assert_eq!(
            SimplicialComplex::from_faces(names(2), &[0b11], true).unwrap_err(),
            Error::NotDownwardClosed(0b11)
        );
        assert_eq!(
            SimplicialComplex::from_faces(names(2), &[0, 0b01], true).unwrap_err(),
            Error::MissingVertexFace(1)
        );
        assert!(SimplicialComplex::from_faces(names(2), &[0, 1, 2, 3], true).is_ok());
    }

    #[test]
    fn order_complexes() {
        let anti = order_complex(&FinitePoset::antichain(2)).unwrap();
        assert_eq!(anti.num_faces(), 3);
        let chain = order_complex(&FinitePoset::chain(2)).unwrap();
        assert_eq!(chain.num_faces(), 4);
        assert_eq!(euler(&chain).chi_reduced, 0);
        assert_eq!(euler(&anti).chi_reduced, 1);
        let empty = order_complex(&FinitePoset::antichain(0)).unwrap();
        assert_eq!(euler(&empty).chi_reduced, -1);
    }

    #[test]
    fn dump_groups_by_dimension() {
        let c = SimplicialComplex::from_faces(names(2), &[0b11], false).unwrap();
        let d = c.dump();
        assert_eq!(d[0], vec![Vec::<String>::new()]);
        assert_eq!(d[1], vec![vec!["a".to_string()], vec!["b".to_string()]]);
        assert_eq!(d[2], vec![vec!["a".to_string(), "b".to_string()]]);
    }
}
