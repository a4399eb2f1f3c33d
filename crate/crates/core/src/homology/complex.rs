//! Finite simplicial complexes on at most 64 vertices and their reduced homology.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::field::FieldSpec;
use super::linalg::IntMatrix;
use crate::ideal::SquarefreeIdeal;
use crate::varset::VarSet;

/// A complex given by its facets. No facets at all is the void complex;
/// the single facet `∅` is the complex `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: VarSet,
    facets: Vec<VarSet>,
}

/// `dims[k + 1]` is `dim H̃_k` for `k = -1..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedHomology {
    pub dims: Vec<usize>,
}

impl ReducedHomology {
    pub fn degree(&self, k: isize) -> usize {
        usize::try_from(k + 1)
            .ok()
            .and_then(|i| self.dims.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `Σ (-1)^k dim H̃_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 1 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// Outcome of [`SimplicialComplex::self_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexCheck {
    pub boundary_squares_vanish: bool,
    pub euler_identity_holds: bool,
}

impl ComplexCheck {
    pub fn passed(&self) -> bool {
        self.boundary_squares_vanish && self.euler_identity_holds
    }
}

impl SimplicialComplex {
    /// Builds a complex from generating faces, keeping only maximal ones.
    /// Vertex set defaults to the union of the faces when `vertices` is `None`.
    pub fn from_faces(vertices: Option<VarSet>, faces: &[VarSet]) -> Self {
        let mut uniq: Vec<VarSet> = faces.to_vec();
        uniq.sort();
        uniq.dedup();
        let mut facets: Vec<VarSet> = uniq
            .iter()
            .copied()
            .filter(|&a| !uniq.iter().any(|&b| b != a && a.is_subset(b)))
            .collect();
        facets.sort();
        let vertices = vertices.unwrap_or_else(|| facets.iter().fold(VarSet::empty(), |a, &f| a | f));
        SimplicialComplex { vertices, facets }
    }

    pub fn void(vertices: VarSet) -> Self {
        SimplicialComplex {
            vertices,
            facets: Vec::new(),
        }
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: VarSet) -> Self {
        SimplicialComplex::from_faces(Some(vertices), &[vertices])
    }

    /// Boundary of the simplex on `vertices`: all proper faces.
    pub fn sphere(vertices: VarSet) -> Self {
        let faces: Vec<VarSet> = vertices.iter().map(|v| vertices - VarSet::singleton(v)).collect();
        SimplicialComplex::from_faces(Some(vertices), &faces)
    }

    /// Faces are the `σ` with `x_σ ∉ I`; facets are the prime complements.
    pub fn stanley_reisner(ideal: &SquarefreeIdeal) -> Self {
        let n = ideal.n();
        let faces: Vec<VarSet> = ideal.primes().iter().map(|p| p.complement(n)).collect();
        SimplicialComplex::from_faces(Some(VarSet::full(n)), &faces)
    }

    pub fn vertices(&self) -> VarSet {
        self.vertices
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Largest face cardinality minus one; `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn contains_face(&self, face: VarSet) -> bool {
        self.facets.iter().any(|&f| face.is_subset(f))
    }

    /// Induced subcomplex on `sigma`.
    pub fn induced(&self, sigma: VarSet) -> SimplicialComplex {
        if self.is_void() {
            return SimplicialComplex::void(sigma);
        }
        let restricted: Vec<VarSet> = self.facets.iter().map(|&f| f & sigma).collect();
        SimplicialComplex::from_faces(Some(sigma), &restricted)
    }

    /// A vertex lying in every facet, if any (such complexes are acyclic).
    pub fn cone_apex(&self) -> Option<usize> {
        if self.is_void() {
            return None;
        }
        self.facets.iter().fold(self.vertices, |acc, &f| acc & f).min()
    }

    /// Faces grouped by dimension: entry `k + 1` holds the `k`-faces, sorted.
    pub fn faces_by_dim(&self) -> Vec<Vec<VarSet>> {
        let Some(dim) = self.dim() else {
            return Vec::new();
        };
        let mut seen: HashSet<VarSet> = HashSet::new();
        for &f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut by_dim = vec![Vec::new(); (dim + 2) as usize];
        for face in seen {
            by_dim[face.len()].push(face);
        }
        for layer in &mut by_dim {
            layer.sort();
        }
        by_dim
    }

    /// Face counts `f_{-1}, f_0, ..., f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim().iter().map(Vec::len).collect()
    }

    /// `∂_k : C_k → C_{k-1}` with rows indexed by `(k-1)`-faces and columns
    /// by `k`-faces, both in canonical order. `∂_0` is the augmentation.
    pub fn boundary_matrix(&self, k: usize) -> IntMatrix {
        let layers = self.faces_by_dim();
        boundary_from_layers(&layers, k)
    }

    pub fn reduced_homology(&self, field: FieldSpec) -> ReducedHomology {
        if self.is_void() {
            return ReducedHomology { dims: Vec::new() };
        }
        let layers = self.faces_by_dim();
        let top = layers.len() - 1;
        // rank[k] = rank ∂_k for k = 0..=top-1 in face-size terms; ∂ indexed by
        // the dimension of its source, shifted by one.
        let ranks: Vec<usize> = (0..=top)
            .map(|size| {
                if size == 0 {
                    0
                } else {
                    boundary_from_layers(&layers, size - 1).rank(field)
                }
            })
            .collect();
        let dims = (0..=top)
            .map(|size| {
                let next = ranks.get(size + 1).copied().unwrap_or(0);
                layers[size].len() - ranks[size] - next
            })
            .collect();
        ReducedHomology { dims }
    }

    /// Checks `∂∂ = 0` in every degree and the reduced Euler identity
    /// `Σ (-1)^k f_k = Σ (-1)^k dim H̃_k` (with `f_{-1} = 1`).
    pub fn self_check(&self, field: FieldSpec) -> ComplexCheck {
        let layers = self.faces_by_dim();
        let boundary_squares_vanish = (1..layers.len().saturating_sub(1)).all(|k| {
            let outer = boundary_from_layers(&layers, k - 1);
            let inner = boundary_from_layers(&layers, k);
            outer.mul(&inner).is_zero()
        });
        let face_euler: i64 = layers
            .iter()
            .enumerate()
            .map(|(i, l)| if i % 2 == 1 { l.len() as i64 } else { -(l.len() as i64) })
            .sum();
        let euler_identity_holds = face_euler == self.reduced_homology(field).euler_characteristic();
        ComplexCheck {
            boundary_squares_vanish,
            euler_identity_holds,
        }
    }
}

/// Boundary from `k`-faces (layer `k + 1`) to `(k-1)`-faces (layer `k`).
fn boundary_from_layers(layers: &[Vec<VarSet>], k: usize) -> IntMatrix {
    let (Some(targets), Some(sources)) = (layers.get(k), layers.get(k + 1)) else {
        let rows = layers.get(k).map_or(0, Vec::len);
        return IntMatrix::zeros(rows, 0);
    };
    let index: HashMap<VarSet, usize> = targets.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut m = IntMatrix::zeros(targets.len(), sources.len());
    for (col, &face) in sources.iter().enumerate() {
        for (j, v) in face.iter().enumerate() {
            let row = index[&(face - VarSet::singleton(v))];
            m.set(row, col, if j % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::corpus;

    fn vs(xs: &[usize]) -> VarSet {
        VarSet::from_indices(xs.iter().copied(), 64).unwrap()
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        let c = SimplicialComplex::sphere(vs(&[1, 2, 3]));
        let h = c.reduced_homology(FieldSpec::RATIONALS);
        assert_eq!(h.dims, vec![0, 0, 1]);
    }

    #[test]
    fn two_points() {
        let c = SimplicialComplex::from_faces(None, &[vs(&[1]), vs(&[2])]);
        assert_eq!(c.reduced_homology(FieldSpec::GF2).dims, vec![0, 1]);
    }

    #[test]
    fn empty_face_only_and_void() {
        let c = SimplicialComplex::from_faces(Some(VarSet::empty()), &[VarSet::empty()]);
        assert_eq!(c.reduced_homology(FieldSpec::RATIONALS).dims, vec![1]);
        let v = SimplicialComplex::void(vs(&[1]));
        assert!(v.reduced_homology(FieldSpec::RATIONALS).is_acyclic());
        assert_eq!(v.dim(), None);
    }

    #[test]
    fn simplices_and_spheres() {
        for n in 1..=6 {
            let verts = VarSet::full(n);
            for f in [FieldSpec::RATIONALS, FieldSpec::GF2] {
                assert!(SimplicialComplex::simplex(verts).reduced_homology(f).is_acyclic());
                let h = SimplicialComplex::sphere(verts).reduced_homology(f);
                let k = n as isize - 2;
                assert_eq!(h.degree(k), 1, "n={n}");
                assert_eq!(h.dims.iter().sum::<usize>(), 1);
            }
        }
    }

    #[test]
    fn vechi_complex_facets() {
        let c = SimplicialComplex::stanley_reisner(&corpus("vechi").unwrap());
        let mut sizes: Vec<usize> = c.facets().iter().map(|f| f.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 3, 4, 4, 4]);
    }

    #[test]
    fn rp2_homology_depends_on_characteristic() {
        let c = SimplicialComplex::stanley_reisner(&corpus("rp2").unwrap());
        assert_eq!(c.f_vector(), vec![1, 6, 15, 10]);
        assert_eq!(c.reduced_homology(FieldSpec::GF2).dims, vec![0, 0, 1, 1]);
        assert!(c.reduced_homology(FieldSpec::RATIONALS).is_acyclic());
        assert!(c.reduced_homology(FieldSpec::new(3).unwrap()).is_acyclic());
    }

    #[test]
    fn boundary_squares_vanish() {
        let c = SimplicialComplex::stanley_reisner(&corpus("ex3").unwrap());
        assert!(c.self_check(FieldSpec::RATIONALS).passed());
        let rp2 = SimplicialComplex::stanley_reisner(&corpus("rp2").unwrap());
        assert!(rp2.self_check(FieldSpec::GF2).passed());
    }

    #[test]
    fn cone_detection() {
        let c = SimplicialComplex::from_faces(None, &[vs(&[1, 2]), vs(&[1, 3])]);
        assert_eq!(c.cone_apex(), Some(1));
        assert!(c.reduced_homology(FieldSpec::RATIONALS).is_acyclic());
        assert_eq!(SimplicialComplex::sphere(vs(&[1, 2, 3])).cone_apex(), None);
    }
}
