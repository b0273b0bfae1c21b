//! Finite abstract simplicial complexes and their F2 homology.
//!
//! A complex is stored by its maximal simplices; the downward closure is
//! materialized on demand when boundary matrices are needed. Simplices are
//! sorted vertex tuples and every per-dimension list is kept in
//! lexicographic order, so matrix layouts are deterministic.

use crate::betti::BettiVector;
use crate::error::{Error, Result};
use crate::f2::{sparse_rank, F2Matrix};
use itertools::Itertools;
use std::collections::{HashMap, HashSet};

/// A finite abstract simplicial complex on an explicit vertex set.
///
/// Every listed vertex is a 0-simplex even when it appears in no facet, so
/// isolated points survive quotients and fixed-point extraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<u32>,
    facets: Vec<Vec<u32>>,
}

impl SimplicialComplex {
    /// Builds a complex from an explicit vertex set and facet list.
    ///
    /// Facets are sorted and deduplicated, non-maximal ones are dropped, and
    /// a facet mentioning a vertex outside `vertices` or repeating a vertex
    /// is a structural error.
    pub fn new(vertices: Vec<u32>, facets: Vec<Vec<u32>>) -> Result<Self> {
        let mut vertices = vertices;
        vertices.sort_unstable();
        vertices.dedup();
        let vertex_set: HashSet<u32> = vertices.iter().copied().collect();

        let mut normalized: Vec<Vec<u32>> = Vec::with_capacity(facets.len());
        for mut f in facets {
            // the closure and regularity checks enumerate subsets of a facet
            if f.len() > 25 {
                return Err(Error::Structure(format!(
                    "facet with {} vertices exceeds the supported simplex size",
                    f.len()
                )));
            }
            f.sort_unstable();
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Structure(format!("facet {f:?} repeats a vertex")));
            }
            if let Some(&v) = f.iter().find(|v| !vertex_set.contains(v)) {
                return Err(Error::Structure(format!(
                    "facet {f:?} references missing vertex {v}"
                )));
            }
            if !f.is_empty() {
                normalized.push(f);
            }
        }
        normalized.sort();
        normalized.dedup();
        // keep only maximal simplices
        let maximal: Vec<Vec<u32>> = normalized
            .iter()
            .filter(|f| {
                !normalized
                    .iter()
                    .any(|g| g.len() > f.len() && is_subset(f, g))
            })
            .cloned()
            .collect();
        Ok(SimplicialComplex {
            vertices,
            facets: maximal,
        })
    }

    /// Complex spanned by the facets alone; the vertex set is their union.
    pub fn from_facets(facets: Vec<Vec<u32>>) -> Result<Self> {
        let vertices: Vec<u32> = facets.iter().flatten().copied().collect();
        Self::new(vertices, facets)
    }

    pub fn empty() -> Self {
        SimplicialComplex {
            vertices: Vec::new(),
            facets: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Dimension of the complex, `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        if self.vertices.is_empty() {
            None
        } else {
            Some(self.facets.iter().map(|f| f.len() - 1).max().unwrap_or(0))
        }
    }

    /// Membership test for a sorted vertex tuple.
    pub fn contains_simplex(&self, simplex: &[u32]) -> bool {
        if simplex.is_empty() {
            return false;
        }
        if simplex.len() == 1 {
            return self.vertices.binary_search(&simplex[0]).is_ok();
        }
        self.facets.iter().any(|f| is_subset(simplex, f))
    }

    /// True when every simplex of `self` is a simplex of `other`.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.vertices
            .iter()
            .all(|v| other.vertices.binary_search(v).is_ok())
            && self.facets.iter().all(|f| other.contains_simplex(f))
    }

    pub(crate) fn skeleton(&self) -> Skeleton {
        Skeleton::of(self)
    }

    /// Barycentric subdivision. The second component lists, for each new
    /// vertex id, the original simplex it subdivides; ids are assigned by
    /// (dimension, lexicographic) order, so ids increase along any flag.
    pub fn barycentric_subdivision(&self) -> (SimplicialComplex, Vec<Vec<u32>>) {
        if self.is_empty() {
            return (SimplicialComplex::empty(), Vec::new());
        }
        let sk = self.skeleton();
        let mut originals: Vec<Vec<u32>> = Vec::with_capacity(sk.total());
        let mut id_of: HashMap<Vec<u32>, u32> = HashMap::with_capacity(sk.total());
        for level in &sk.by_dim {
            for s in level {
                id_of.insert(s.clone(), originals.len() as u32);
                originals.push(s.clone());
            }
        }
        let mut new_facets = Vec::new();
        for f in &self.facets {
            if f.len() == 1 {
                // a lone vertex subdivides to itself
                new_facets.push(vec![id_of[f]]);
                continue;
            }
            for perm in f.iter().permutations(f.len()) {
                let mut chain = Vec::with_capacity(f.len());
                let mut prefix: Vec<u32> = Vec::with_capacity(f.len());
                for &v in perm {
                    prefix.push(v);
                    prefix.sort_unstable();
                    chain.push(id_of[&prefix]);
                }
                new_facets.push(chain);
            }
        }
        let all: Vec<u32> = (0..originals.len() as u32).collect();
        let sd = SimplicialComplex::new(all, new_facets)
            .expect("subdivision facets are well formed by construction");
        (sd, originals)
    }
}

fn is_subset(small: &[u32], big: &[u32]) -> bool {
    // both sorted
    let mut it = big.iter();
    small.iter().all(|v| it.any(|w| w == v))
}

/// The downward closure of a complex with per-dimension indexing.
pub(crate) struct Skeleton {
    /// `by_dim[k]` lists the k-simplices as sorted tuples, lexicographically.
    pub by_dim: Vec<Vec<Vec<u32>>>,
    /// `index[k][simplex]` is the position in `by_dim[k]`.
    pub index: Vec<HashMap<Vec<u32>, usize>>,
}

impl Skeleton {
    pub fn of(complex: &SimplicialComplex) -> Skeleton {
        if complex.is_empty() {
            return Skeleton {
                by_dim: Vec::new(),
                index: Vec::new(),
            };
        }
        let dim = complex.dim().unwrap();
        let mut sets: Vec<HashSet<Vec<u32>>> = vec![HashSet::new(); dim + 1];
        for &v in &complex.vertices {
            sets[0].insert(vec![v]);
        }
        for f in &complex.facets {
            let m = f.len();
            for mask in 1u32..(1 << m) {
                let sub: Vec<u32> = (0..m)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| f[i])
                    .collect();
                sets[sub.len() - 1].insert(sub);
            }
        }
        let mut by_dim = Vec::with_capacity(dim + 1);
        let mut index = Vec::with_capacity(dim + 1);
        for set in sets {
            let mut list: Vec<Vec<u32>> = set.into_iter().collect();
            list.sort();
            let map: HashMap<Vec<u32>, usize> = list
                .iter()
                .enumerate()
                .map(|(i, s)| (s.clone(), i))
                .collect();
            by_dim.push(list);
            index.push(map);
        }
        Skeleton { by_dim, index }
    }

    pub fn dim(&self) -> usize {
        self.by_dim.len().saturating_sub(1)
    }

    pub fn count(&self, k: usize) -> usize {
        self.by_dim.get(k).map_or(0, |l| l.len())
    }

    pub fn total(&self) -> usize {
        self.by_dim.iter().map(|l| l.len()).sum()
    }

    /// Boundary ∂_k as sparse columns over the (k−1)-simplex indices.
    pub fn boundary_columns(&self, k: usize) -> Vec<Vec<u32>> {
        if k == 0 || k > self.dim() {
            return vec![Vec::new(); self.count(k)];
        }
        self.by_dim[k]
            .iter()
            .map(|s| {
                let mut col: Vec<u32> = (0..s.len())
                    .map(|drop| {
                        let face: Vec<u32> = s
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != drop)
                            .map(|(_, &v)| v)
                            .collect();
                        self.index[k - 1][&face] as u32
                    })
                    .collect();
                col.sort_unstable();
                col
            })
            .collect()
    }

    /// Boundary ∂_k as a dense bit matrix, rows over (k−1)-simplices.
    pub fn boundary_matrix(&self, k: usize) -> F2Matrix {
        let rows = if k == 0 { 0 } else { self.count(k - 1) };
        let cols = self.count(k);
        let mut m = F2Matrix::zeros(rows, cols);
        if k == 0 {
            return m;
        }
        for (j, col) in self.boundary_columns(k).into_iter().enumerate() {
            for i in col {
                m.set(i as usize, j, true);
            }
        }
        m
    }
}

/// F2 Betti numbers of a complex: β_k = dim ker ∂_k − rank ∂_{k+1}.
pub fn betti(complex: &SimplicialComplex) -> BettiVector {
    if complex.is_empty() {
        return BettiVector::new(Vec::new());
    }
    let sk = complex.skeleton();
    let dim = sk.dim();
    let ranks: Vec<usize> = (0..=dim + 1)
        .map(|k| {
            if k == 0 || k > dim {
                0
            } else {
                sparse_rank(sk.boundary_columns(k))
            }
        })
        .collect();
    let betti: Vec<u64> = (0..=dim)
        .map(|k| {
            let rank_next = if k + 1 <= dim { ranks[k + 1] } else { 0 };
            (sk.count(k) - ranks[k] - rank_next) as u64
        })
        .collect();
    BettiVector::new(betti)
}

/// F2 Betti numbers of the relative chain complex C_*(X)/C_*(A).
pub fn relative_betti(pair: (&SimplicialComplex, &SimplicialComplex)) -> Result<BettiVector> {
    let (x, a) = pair;
    if !a.is_subcomplex_of(x) {
        return Err(Error::Structure(
            "second complex is not a subcomplex of the first".into(),
        ));
    }
    if x.is_empty() {
        return Ok(BettiVector::new(Vec::new()));
    }
    if a.is_empty() {
        return Ok(betti(x));
    }
    let sk = x.skeleton();
    let sub = a.skeleton();
    let dim = sk.dim();

    // per degree: indices of X-simplices outside A, renumbered densely
    let mut keep: Vec<Vec<bool>> = Vec::with_capacity(dim + 1);
    let mut renum: Vec<Vec<u32>> = Vec::with_capacity(dim + 1);
    let mut counts: Vec<usize> = Vec::with_capacity(dim + 1);
    for k in 0..=dim {
        let mut mask = vec![true; sk.count(k)];
        if k < sub.by_dim.len() {
            for s in &sub.by_dim[k] {
                mask[sk.index[k][s]] = false;
            }
        }
        let mut map = vec![u32::MAX; sk.count(k)];
        let mut next = 0u32;
        for (i, &kept) in mask.iter().enumerate() {
            if kept {
                map[i] = next;
                next += 1;
            }
        }
        counts.push(next as usize);
        keep.push(mask);
        renum.push(map);
    }

    let ranks: Vec<usize> = (0..=dim + 1)
        .map(|k| {
            if k == 0 || k > dim {
                return 0;
            }
            let cols: Vec<Vec<u32>> = sk
                .boundary_columns(k)
                .into_iter()
                .enumerate()
                .filter(|(j, _)| keep[k][*j])
                .map(|(_, col)| {
                    let mut c: Vec<u32> = col
                        .into_iter()
                        .filter(|&i| keep[k - 1][i as usize])
                        .map(|i| renum[k - 1][i as usize])
                        .collect();
                    c.sort_unstable();
                    c
                })
                .collect();
            sparse_rank(cols)
        })
        .collect();

    let betti: Vec<u64> = (0..=dim)
        .map(|k| {
            let rank_next = if k + 1 <= dim { ranks[k + 1] } else { 0 };
            (counts[k] - ranks[k] - rank_next) as u64
        })
        .collect();
    Ok(BettiVector::new(betti))
}

/// Circle triangulated as an m-gon (m ≥ 3).
pub fn polygon(m: u32) -> SimplicialComplex {
    assert!(m >= 3);
    let facets = (0..m).map(|i| vec![i, (i + 1) % m]).collect();
    SimplicialComplex::from_facets(facets).unwrap()
}

/// Boundary of the (d+1)-simplex: the minimal triangulated d-sphere.
pub fn sphere(d: usize) -> SimplicialComplex {
    let n = d + 2;
    let facets = (0..n as u32)
        .map(|skip| (0..n as u32).filter(|&v| v != skip).collect())
        .collect();
    SimplicialComplex::from_facets(facets).unwrap()
}

/// The octahedron: a 2-sphere with 6 vertices where antipodes are 0↔5,
/// 1↔4, 2↔3.
pub fn octahedron() -> SimplicialComplex {
    let mut facets = Vec::new();
    for &a in &[0u32, 5] {
        for &b in &[1u32, 4] {
            for &c in &[2u32, 3] {
                facets.push(vec![a, b, c]);
            }
        }
    }
    SimplicialComplex::from_facets(facets).unwrap()
}

/// Möbius' 7-vertex triangulated torus: vertices Z/7, facets
/// {i, i+1, i+3} and {i, i+2, i+3}.
pub fn torus_7() -> SimplicialComplex {
    let mut facets = Vec::new();
    for i in 0..7u32 {
        facets.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        facets.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    SimplicialComplex::from_facets(facets).unwrap()
}

/// The 3×3 grid torus: vertex (i,j) = 3i+j on Z/3 × Z/3 with both diagonal
/// triangle families.
pub fn torus_9() -> SimplicialComplex {
    let v = |i: u32, j: u32| 3 * (i % 3) + (j % 3);
    let mut facets = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            facets.push(vec![v(i, j), v(i + 1, j), v(i, j + 1)]);
            facets.push(vec![v(i + 1, j), v(i, j + 1), v(i + 1, j + 1)]);
        }
    }
    SimplicialComplex::from_facets(facets).unwrap()
}

/// A 4×4 grid torus whose square diagonals zigzag: rows j = 0,1 are split
/// along the antidiagonal, rows j = 2,3 along the main diagonal. This makes
/// the reflection (i,j) ↦ (i,−j) simplicial, with the rows j = 0 and j = 2
/// as its two fixed circles.
pub fn torus_16_mirror() -> SimplicialComplex {
    let v = |i: u32, j: u32| 4 * (i % 4) + (j % 4);
    let mut facets = Vec::new();
    for i in 0..4 {
        for j in [0u32, 1] {
            facets.push(vec![v(i, j), v(i + 1, j), v(i, j + 1)]);
            facets.push(vec![v(i + 1, j), v(i, j + 1), v(i + 1, j + 1)]);
        }
        for j in [2u32, 3] {
            facets.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            facets.push(vec![v(i, j), v(i, j + 1), v(i + 1, j + 1)]);
        }
    }
    SimplicialComplex::from_facets(facets).unwrap()
}
