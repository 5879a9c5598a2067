//! Finite abstract simplicial complexes and their reduced homology.

use super::linalg::{rank, SparseRow};
use super::Field;
use crate::error::{Error, Result};
use std::collections::{BTreeMap, HashMap, HashSet};

/// A simplicial complex given by its full face list.
///
/// `faces[k]` holds the faces with `k` vertices, each sorted ascending, so
/// `faces[0]` is either empty (the void complex) or `[[]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    faces: Vec<Vec<Vec<u32>>>,
}

impl SimplicialComplex {
    /// The complex with no faces at all.
    pub fn void(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            faces: Vec::new(),
        }
    }

    /// The complex whose only face is the empty face.
    pub fn empty(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            faces: vec![vec![Vec::new()]],
        }
    }

    /// Downward closure of `facets`. No facets gives the void complex.
    pub fn from_facets(vertex_count: usize, facets: &[Vec<u32>], cap: usize) -> Result<Self> {
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        for facet in facets {
            let mut f = facet.clone();
            f.sort_unstable();
            f.dedup();
            if f.len() >= 32 {
                return Err(Error::FaceCap(cap));
            }
            for sub in 0u32..1 << f.len() {
                let face: Vec<u32> = (0..f.len())
                    .filter(|i| sub >> i & 1 == 1)
                    .map(|i| f[i])
                    .collect();
                seen.insert(face);
                if seen.len() > cap {
                    return Err(Error::FaceCap(cap));
                }
            }
        }
        Ok(Self::from_closed_faces(vertex_count, seen))
    }

    /// Builds from a face list that is already closed under subsets.
    pub fn from_closed_faces(vertex_count: usize, faces: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut by_size: Vec<Vec<Vec<u32>>> = Vec::new();
        for mut f in faces {
            f.sort_unstable();
            if by_size.len() <= f.len() {
                by_size.resize(f.len() + 1, Vec::new());
            }
            by_size[f.len()].push(f);
        }
        for level in by_size.iter_mut() {
            level.sort_unstable();
            level.dedup();
        }
        SimplicialComplex {
            vertex_count,
            faces: by_size,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_void(&self) -> bool {
        self.faces.first().map_or(true, |f| f.is_empty())
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Faces of dimension `d` (`d = -1` is the empty face).
    pub fn faces_of_dim(&self, d: isize) -> &[Vec<u32>] {
        usize::try_from(d + 1)
            .ok()
            .and_then(|k| self.faces.get(k))
            .map_or(&[], |v| v.as_slice())
    }

    /// Every face's codimension-one faces are present.
    pub fn is_closed(&self) -> bool {
        (1..self.faces.len()).all(|k| {
            let lower: HashSet<&Vec<u32>> = self.faces[k - 1].iter().collect();
            self.faces[k].iter().all(|f| {
                (0..f.len()).all(|i| {
                    let mut g = f.clone();
                    g.remove(i);
                    lower.contains(&g)
                })
            })
        })
    }

    /// Matrix of the boundary map from faces with `k` vertices to faces with `k - 1`.
    fn boundary_rows(&self, k: usize) -> Vec<SparseRow> {
        let index: HashMap<&Vec<u32>, usize> = self.faces[k - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (f, i))
            .collect();
        self.faces[k]
            .iter()
            .map(|f| {
                let mut row: SparseRow = (0..f.len())
                    .map(|i| {
                        let mut g = f.clone();
                        g.remove(i);
                        let col = *index.get(&g).expect("complex is closed under subsets");
                        (col, if i % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                row.sort_unstable();
                row
            })
            .collect()
    }

    /// Nonzero ranks of reduced homology, keyed by dimension (from `-1`).
    pub fn reduced_homology(&self, field: Field) -> BTreeMap<isize, u64> {
        let mut out = BTreeMap::new();
        if self.is_void() {
            return out;
        }
        let top = self.faces.len();
        // ranks[k] = rank of the boundary from faces with k vertices
        let ranks: Vec<usize> = (0..=top)
            .map(|k| {
                if k == 0 || k >= top || self.faces[k].is_empty() {
                    0
                } else {
                    rank(&self.boundary_rows(k), field)
                }
            })
            .collect();
        for k in 0..top {
            let h = self.faces[k].len() - ranks[k] - ranks[k + 1];
            if h > 0 {
                out.insert(k as isize - 1, h as u64);
            }
        }
        out
    }
}
