//! Full-dimensional lattice polytopes in dimensions 1 to 4: hulls, facets,
//! lattice points, face lattices and polar duality.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::lattice::{self, IntMatrix, IntVector};

pub const MAX_DIM: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("dimension {0} is outside the supported range 1..={MAX_DIM}")]
    UnsupportedDimension(usize),
    #[error("point {point} has dimension {found}, expected {expected}")]
    DimensionMismatch { point: String, expected: usize, found: usize },
    #[error("no input points")]
    Empty,
    #[error("points span an affine subspace of dimension {span}, expected {expected}")]
    Degenerate { span: usize, expected: usize },
    #[error("polytope is not reflexive")]
    NotReflexive,
    #[error("face is not a proper face of this polytope")]
    UnknownFace,
}

/// A facet inequality `<normal, x> >= -offset`, with the normal primitive and
/// pointing into the polytope.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: IntVector,
    pub offset: BigInt,
}

impl Facet {
    /// `<normal, x> + offset`; nonnegative exactly on the inner side.
    pub fn slack(&self, x: &IntVector) -> BigInt {
        self.normal.dot(x) + &self.offset
    }

    pub fn is_tight(&self, x: &IntVector) -> bool {
        self.slack(x).is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePolytope {
    dim: usize,
    /// sorted lexicographically
    vertices: Vec<IntVector>,
    /// sorted by normal
    facets: Vec<Facet>,
}

/// Normal of the hyperplane through `base + span(dirs)`, as signed maximal
/// minors of the `(k-1) x k` direction matrix. Zero iff the directions are
/// dependent.
pub(crate) fn hyperplane_normal(dirs: &[IntVector], k: usize) -> IntVector {
    if k == 1 {
        return IntVector::from_i64(&[1]);
    }
    let mut normal = Vec::with_capacity(k);
    for j in 0..k {
        let minor = IntMatrix::from_rows(
            dirs.iter()
                .map(|d| (0..k).filter(|&c| c != j).map(|c| d[c].clone()).collect())
                .collect(),
        );
        let det = lattice::determinant(&minor).expect("minor is square and small");
        normal.push(if j % 2 == 0 { det } else { -det });
    }
    IntVector::new(normal)
}

pub(crate) fn combinations(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Dimension of the affine span of a point set.
pub fn affine_dimension(points: &[IntVector]) -> usize {
    match points.split_first() {
        Some((first, rest)) if !rest.is_empty() => {
            let diffs: Vec<IntVector> = rest.iter().map(|p| p.sub(first)).collect();
            lattice::rank(&IntMatrix::from_row_vectors(&diffs))
        }
        _ => 0,
    }
}

/// Convex hull of a finite point set that affinely spans `Z^k`.
///
/// Facets are found by brute force over `k`-subsets of the points, extended to
/// hyperplanes and kept when every point lies on one side.
pub fn convex_hull(points: &[IntVector], k: usize) -> Result<LatticePolytope, PolytopeError> {
    if k == 0 || k > MAX_DIM {
        return Err(PolytopeError::UnsupportedDimension(k));
    }
    if points.is_empty() {
        return Err(PolytopeError::Empty);
    }
    if let Some(bad) = points.iter().find(|p| p.dim() != k) {
        return Err(PolytopeError::DimensionMismatch {
            point: bad.to_string(),
            expected: k,
            found: bad.dim(),
        });
    }
    let pts: Vec<IntVector> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let span = affine_dimension(&pts);
    if span != k {
        return Err(PolytopeError::Degenerate { span, expected: k });
    }

    let mut facets: BTreeMap<IntVector, BigInt> = BTreeMap::new();
    combinations(pts.len(), k, |idx| {
        let base = &pts[idx[0]];
        let dirs: Vec<IntVector> = idx[1..].iter().map(|&i| pts[i].sub(base)).collect();
        let normal = hyperplane_normal(&dirs, k);
        if normal.is_zero() {
            return;
        }
        let normal = lattice::primitive(&normal).expect("nonzero");
        let level = normal.dot(base);
        let (mut above, mut below) = (false, false);
        for p in &pts {
            match (normal.dot(p) - &level).sign() {
                num_bigint::Sign::Plus => above = true,
                num_bigint::Sign::Minus => below = true,
                num_bigint::Sign::NoSign => {}
            }
            if above && below {
                return;
            }
        }
        // full-dimensional, so never both false
        let (normal, level) = if below { (normal.neg(), -level) } else { (normal, level) };
        facets.entry(normal).or_insert(-level);
    });

    let facets: Vec<Facet> =
        facets.into_iter().map(|(normal, offset)| Facet { normal, offset }).collect();
    let vertices = pts
        .into_iter()
        .filter(|p| {
            let tight: Vec<IntVector> =
                facets.iter().filter(|f| f.is_tight(p)).map(|f| f.normal.clone()).collect();
            tight.len() >= k && lattice::rank(&IntMatrix::from_row_vectors(&tight)) == k
        })
        .collect();
    Ok(LatticePolytope { dim: k, vertices, facets })
}

impl LatticePolytope {
    pub fn from_vertices(points: &[IntVector]) -> Result<Self, PolytopeError> {
        let k = points.first().ok_or(PolytopeError::Empty)?.dim();
        convex_hull(points, k)
    }

    /// Convenience constructor from small integer coordinates.
    pub fn from_i64(points: &[&[i64]]) -> Result<Self, PolytopeError> {
        let pts: Vec<IntVector> = points.iter().map(|p| IntVector::from_i64(p)).collect();
        Self::from_vertices(&pts)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[IntVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn contains(&self, x: &IntVector) -> bool {
        self.facets.iter().all(|f| !f.slack(x).is_negative())
    }

    /// Origin strictly inside and every facet at lattice distance one.
    pub fn is_reflexive(&self) -> bool {
        self.facets.iter().all(|f| f.offset.is_one())
    }

    pub fn origin_is_interior(&self) -> bool {
        self.facets.iter().all(|f| f.offset.is_positive())
    }

    /// The polar polytope; its vertices are the facet normals.
    pub fn polar(&self) -> Result<LatticePolytope, PolytopeError> {
        if !self.is_reflexive() {
            return Err(PolytopeError::NotReflexive);
        }
        let normals: Vec<IntVector> = self.facets.iter().map(|f| f.normal.clone()).collect();
        convex_hull(&normals, self.dim)
    }

    /// Index of a vertex, by exact coordinates.
    pub fn vertex_index(&self, v: &IntVector) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// Index of the facet with the given inward normal.
    pub fn facet_index(&self, normal: &IntVector) -> Option<usize> {
        self.facets.binary_search_by(|f| f.normal.cmp(normal)).ok()
    }

    /// Applies `x -> m x` to every vertex.
    pub fn transform(&self, m: &IntMatrix) -> Result<LatticePolytope, PolytopeError> {
        let pts: Vec<IntVector> = self.vertices.iter().map(|v| m.mul_vec(v)).collect();
        convex_hull(&pts, self.dim)
    }

    /// Cartesian product `self x other`.
    pub fn product(&self, other: &LatticePolytope) -> Result<LatticePolytope, PolytopeError> {
        let mut pts = Vec::new();
        for a in &self.vertices {
            for b in &other.vertices {
                let mut e = a.entries().to_vec();
                e.extend_from_slice(b.entries());
                pts.push(IntVector::new(e));
            }
        }
        convex_hull(&pts, self.dim + other.dim)
    }

    /// All lattice points, sorted. Enumerates the vertex bounding box and
    /// keeps points satisfying every facet inequality.
    pub fn lattice_points(&self) -> Vec<IntVector> {
        let k = self.dim;
        let bound = |pick: fn(&BigInt, &BigInt) -> bool| -> Vec<i64> {
            (0..k)
                .map(|i| {
                    let mut best = &self.vertices[0][i];
                    for v in &self.vertices {
                        if pick(&v[i], best) {
                            best = &v[i];
                        }
                    }
                    best.to_i64().expect("lattice point enumeration needs machine-size bounds")
                })
                .collect()
        };
        let lo = bound(|a, b| a < b);
        let hi = bound(|a, b| a > b);
        // machine-width copies of the inequalities for the scan (checked)
        let ineqs: Vec<(Vec<i128>, i128)> = self
            .facets
            .iter()
            .map(|f| {
                let n = f.normal.entries().iter().map(|x| x.to_i128().expect("small normal")).collect();
                (n, f.offset.to_i128().expect("small offset"))
            })
            .collect();

        let mut out = Vec::new();
        let mut cur = lo.clone();
        loop {
            let inside = ineqs.iter().all(|(n, c)| {
                n.iter().zip(&cur).map(|(a, &x)| a * x as i128).sum::<i128>() + c >= 0
            });
            if inside {
                out.push(IntVector::from_i64(&cur));
            }
            // odometer over the box, last coordinate fastest
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < hi[i] {
                    cur[i] += 1;
                    for (j, c) in cur.iter_mut().enumerate().skip(i + 1) {
                        *c = lo[j];
                    }
                    break;
                }
            }
        }
    }

    /// The number of lattice points.
    pub fn lattice_point_count(&self) -> usize {
        self.lattice_points().len()
    }

    /// All proper faces with their lattice points and relative-interior counts.
    pub fn face_lattice(&self) -> FaceLattice {
        FaceLattice::build(self)
    }

    /// Vertex matrix with vertices as columns.
    pub fn vertex_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(&self.vertices)
    }
}

impl fmt::Display for LatticePolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(ToString::to_string).collect();
        write!(f, "conv{{{}}}", vs.join(", "))
    }
}

/// A proper face of a polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub dim: usize,
    /// sorted indices into the polytope's vertex list
    pub vertex_indices: Vec<usize>,
    /// sorted indices of the facets containing this face
    pub facet_indices: Vec<usize>,
    pub lattice_points: Vec<IntVector>,
    /// lattice points in the relative interior
    pub interior_count: usize,
}

impl Face {
    pub fn lattice_point_count(&self) -> usize {
        self.lattice_points.len()
    }
}

#[derive(Clone, Debug)]
pub struct FaceLattice {
    /// `faces[d]` holds the faces of dimension `d`, for `d` in `0..k`.
    faces: Vec<Vec<Face>>,
    /// `incidence[d]` holds pairs `(i, j)` with face `i` of dimension `d`
    /// contained in face `j` of dimension `d + 1`.
    incidence: Vec<Vec<(usize, usize)>>,
    /// lattice points in the interior of the polytope itself
    interior_count: usize,
}

impl FaceLattice {
    fn build(p: &LatticePolytope) -> FaceLattice {
        let k = p.dim;
        let facet_vertices: Vec<BTreeSet<usize>> = p
            .facets
            .iter()
            .map(|f| {
                p.vertices.iter().enumerate().filter(|(_, v)| f.is_tight(v)).map(|(i, _)| i).collect()
            })
            .collect();

        // every proper face is an intersection of facets
        let mut sets: BTreeSet<BTreeSet<usize>> = facet_vertices.iter().cloned().collect();
        let mut frontier: Vec<BTreeSet<usize>> = sets.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for b in &facet_vertices {
                    let c: BTreeSet<usize> = a.intersection(b).copied().collect();
                    if !c.is_empty() && sets.insert(c.clone()) {
                        next.push(c);
                    }
                }
            }
            frontier = next;
        }

        let points = p.lattice_points();
        let tight_sets: Vec<BTreeSet<usize>> = points
            .iter()
            .map(|x| (0..p.facets.len()).filter(|&i| p.facets[i].is_tight(x)).collect())
            .collect();
        let interior_count = tight_sets.iter().filter(|t| t.is_empty()).count();

        let mut faces: Vec<Vec<Face>> = vec![Vec::new(); k];
        for vs in sets {
            let facet_indices: Vec<usize> =
                (0..facet_vertices.len()).filter(|&i| vs.is_subset(&facet_vertices[i])).collect();
            let verts: Vec<IntVector> = vs.iter().map(|&i| p.vertices[i].clone()).collect();
            let dim = affine_dimension(&verts);
            let fset: BTreeSet<usize> = facet_indices.iter().copied().collect();
            let mut lattice_points = Vec::new();
            let mut interior_count = 0;
            for (x, t) in points.iter().zip(&tight_sets) {
                if fset.is_subset(t) {
                    lattice_points.push(x.clone());
                    if *t == fset {
                        interior_count += 1;
                    }
                }
            }
            faces[dim].push(Face {
                dim,
                vertex_indices: vs.into_iter().collect(),
                facet_indices,
                lattice_points,
                interior_count,
            });
        }
        for layer in &mut faces {
            layer.sort_by(|a, b| a.vertex_indices.cmp(&b.vertex_indices));
        }
        let incidence = (0..k.saturating_sub(1))
            .map(|d| {
                let mut pairs = Vec::new();
                for (i, lo) in faces[d].iter().enumerate() {
                    for (j, hi) in faces[d + 1].iter().enumerate() {
                        if lo.vertex_indices.iter().all(|v| hi.vertex_indices.binary_search(v).is_ok()) {
                            pairs.push((i, j));
                        }
                    }
                }
                pairs
            })
            .collect();
        FaceLattice { faces, incidence, interior_count }
    }

    pub fn faces(&self, dim: usize) -> &[Face] {
        &self.faces[dim]
    }

    pub fn all_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().flatten()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn incidence(&self, dim: usize) -> &[(usize, usize)] {
        &self.incidence[dim]
    }

    pub fn interior_count(&self) -> usize {
        self.interior_count
    }

    /// Faces of codimension `c` (so `c = 1` gives the facets).
    pub fn faces_of_codim(&self, c: usize) -> &[Face] {
        &self.faces[self.faces.len() - c]
    }

    pub fn find(&self, vertex_indices: &[usize]) -> Option<&Face> {
        let dim_guess = self.faces.iter().position(|layer| {
            layer.iter().any(|f| f.vertex_indices == vertex_indices)
        })?;
        self.faces[dim_guess].iter().find(|f| f.vertex_indices == vertex_indices)
    }
}

/// A reflexive polytope together with its polar, both face lattices, and the
/// duality `face -> dual face` between them.
#[derive(Clone, Debug)]
pub struct ReflexivePair {
    pub primal: LatticePolytope,
    pub dual: LatticePolytope,
    pub primal_faces: FaceLattice,
    pub dual_faces: FaceLattice,
    /// facet `i` of the primal has normal equal to dual vertex `facet_to_dual_vertex[i]`
    facet_to_dual_vertex: Vec<usize>,
    /// and symmetrically
    dual_facet_to_vertex: Vec<usize>,
}

impl ReflexivePair {
    pub fn new(p: &LatticePolytope) -> Result<Self, PolytopeError> {
        let dual = p.polar()?;
        let facet_to_dual_vertex = p
            .facets
            .iter()
            .map(|f| dual.vertex_index(&f.normal).expect("facet normals are the polar vertices"))
            .collect();
        let dual_facet_to_vertex = dual
            .facets
            .iter()
            .map(|f| p.vertex_index(&f.normal).expect("polar of polar is the original"))
            .collect();
        Ok(ReflexivePair {
            primal_faces: p.face_lattice(),
            dual_faces: dual.face_lattice(),
            primal: p.clone(),
            dual,
            facet_to_dual_vertex,
            dual_facet_to_vertex,
        })
    }

    /// The same pair seen from the other side.
    pub fn swapped(&self) -> ReflexivePair {
        ReflexivePair {
            primal: self.dual.clone(),
            dual: self.primal.clone(),
            primal_faces: self.dual_faces.clone(),
            dual_faces: self.primal_faces.clone(),
            facet_to_dual_vertex: self.dual_facet_to_vertex.clone(),
            dual_facet_to_vertex: self.facet_to_dual_vertex.clone(),
        }
    }

    /// Dual of a primal face: the dual vertices whose facets contain it.
    pub fn dual_of(&self, f: &Face) -> &Face {
        let mut vs: Vec<usize> = f.facet_indices.iter().map(|&i| self.facet_to_dual_vertex[i]).collect();
        vs.sort_unstable();
        let k = self.primal.dim;
        self.dual_faces.faces[k - 1 - f.dim]
            .iter()
            .find(|g| g.vertex_indices == vs)
            .expect("face duality is a bijection for reflexive polytopes")
    }
}

/// The face of `p°` dual to the proper face `f` of a reflexive `p`.
pub fn dual_face(p: &LatticePolytope, f: &Face) -> Result<Face, PolytopeError> {
    let pair = ReflexivePair::new(p)?;
    if pair.primal_faces.find(&f.vertex_indices).is_none() {
        return Err(PolytopeError::UnknownFace);
    }
    Ok(pair.dual_of(f).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(points: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::from_i64(points).unwrap()
    }

    fn p3() -> LatticePolytope {
        poly(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]])
    }

    fn cube() -> LatticePolytope {
        let mut pts = Vec::new();
        for x in [-1, 1] {
            for y in [-1, 1] {
                for z in [-1, 1] {
                    pts.push(IntVector::from_i64(&[x, y, z]));
                }
            }
        }
        convex_hull(&pts, 3).unwrap()
    }

    fn octahedron() -> LatticePolytope {
        poly(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]])
    }

    #[test]
    fn hull_absorbs_origin() {
        let p = poly(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1], &[0, 0, 0]]);
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.facets().len(), 4);
    }

    #[test]
    fn hull_diamond() {
        let p = poly(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        assert_eq!(p.facets().len(), 4);
        for f in p.facets() {
            assert_eq!(f.offset, BigInt::one());
            assert!(f.normal.entries().iter().all(|x| x.abs().is_one()));
        }
    }

    #[test]
    fn hull_cube() {
        let c = cube();
        assert_eq!(c.vertices().len(), 8);
        assert_eq!(c.facets().len(), 6);
    }

    #[test]
    fn hull_rejects_degenerate() {
        let err = LatticePolytope::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]);
        assert_eq!(err, Err(PolytopeError::Degenerate { span: 2, expected: 3 }));
        assert_eq!(
            convex_hull(&[IntVector::from_i64(&[1, 2, 3, 4, 5])], 5),
            Err(PolytopeError::UnsupportedDimension(5))
        );
        assert!(matches!(
            convex_hull(&[IntVector::from_i64(&[1, 2])], 3),
            Err(PolytopeError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn reflexivity() {
        assert!(p3().is_reflexive());
        assert!(cube().is_reflexive());
        assert!(!poly(&[&[0], &[2]]).is_reflexive());
        // origin interior but a facet at distance 2
        assert!(!poly(&[&[2, 0], &[0, 2], &[-2, -2]]).is_reflexive());
    }

    #[test]
    fn polar_examples() {
        let d = p3().polar().unwrap();
        let expected = poly(&[&[3, -1, -1], &[-1, 3, -1], &[-1, -1, 3], &[-1, -1, -1]]);
        assert_eq!(d, expected);
        assert_eq!(octahedron().polar().unwrap(), cube());
        let seg = poly(&[&[-1], &[1]]);
        assert_eq!(seg.polar().unwrap(), seg);
        assert_eq!(d.polar().unwrap(), p3());
        assert_eq!(poly(&[&[0], &[2]]).polar(), Err(PolytopeError::NotReflexive));
    }

    #[test]
    fn lattice_point_counts() {
        assert_eq!(p3().lattice_point_count(), 5);
        assert_eq!(cube().lattice_point_count(), 27);
        assert_eq!(p3().polar().unwrap().lattice_point_count(), 35);
    }

    #[test]
    fn face_lattice_examples() {
        let fl = p3().face_lattice();
        assert_eq!(fl.f_vector(), vec![4, 6, 4]);
        assert_eq!(fl.interior_count(), 1);

        let fl = cube().face_lattice();
        assert_eq!(fl.f_vector(), vec![8, 12, 6]);
        assert!(fl.faces(2).iter().all(|f| f.interior_count == 1));
        assert!(fl.faces(1).iter().all(|f| f.interior_count == 1));

        let wp = poly(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -3]]);
        let fl = wp.face_lattice();
        let with_interior: Vec<&Face> = fl.faces(2).iter().filter(|f| f.interior_count > 0).collect();
        assert_eq!(with_interior.len(), 1);
        assert_eq!(with_interior[0].interior_count, 1);
        assert!(with_interior[0].lattice_points.contains(&IntVector::from_i64(&[0, 0, -1])));
    }

    #[test]
    fn incidence_is_consistent() {
        let fl = cube().face_lattice();
        // each edge lies in two squares, each square has four edges
        assert_eq!(fl.incidence(1).len(), 24);
        assert_eq!(fl.incidence(0).len(), 24);
    }

    #[test]
    fn dual_face_examples() {
        let p = p3();
        let fl = p.face_lattice();
        let dual = p.polar().unwrap();

        let v = p.vertex_index(&IntVector::from_i64(&[1, 0, 0])).unwrap();
        let vf = fl.faces(0).iter().find(|f| f.vertex_indices == [v]).unwrap();
        let df = dual_face(&p, vf).unwrap();
        assert_eq!(df.dim, 2);
        let got: BTreeSet<IntVector> = df.vertex_indices.iter().map(|&i| dual.vertices()[i].clone()).collect();
        let want: BTreeSet<IntVector> = [[-1, 3, -1], [-1, -1, 3], [-1, -1, -1]]
            .iter()
            .map(|x| IntVector::from_i64(x))
            .collect();
        assert_eq!(got, want);

        let a = p.vertex_index(&IntVector::from_i64(&[1, 0, 0])).unwrap();
        let b = p.vertex_index(&IntVector::from_i64(&[0, 1, 0])).unwrap();
        let mut ab = vec![a, b];
        ab.sort();
        let edge = fl.faces(1).iter().find(|f| f.vertex_indices == ab).unwrap();
        let de = dual_face(&p, edge).unwrap();
        let got: BTreeSet<IntVector> = de.vertex_indices.iter().map(|&i| dual.vertices()[i].clone()).collect();
        let want: BTreeSet<IntVector> =
            [[-1, -1, 3], [-1, -1, -1]].iter().map(|x| IntVector::from_i64(x)).collect();
        assert_eq!(got, want);

        // a facet goes to the vertex equal to its normal
        let pair = ReflexivePair::new(&p).unwrap();
        for (i, facet) in fl.faces(2).iter().enumerate() {
            let d = pair.dual_of(facet);
            assert_eq!(d.dim, 0, "facet {i}");
            assert_eq!(dual.vertices()[d.vertex_indices[0]], p.facets()[facet.facet_indices[0]].normal);
        }
    }

    #[test]
    fn dual_face_requires_reflexive() {
        let p = poly(&[&[2, 0], &[0, 2], &[-2, -2]]);
        let fl = p.face_lattice();
        assert_eq!(dual_face(&p, &fl.faces(0)[0]), Err(PolytopeError::NotReflexive));
    }
}
