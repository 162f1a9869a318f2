//! Rational polyhedral fans: face fans and normal fans of polytopes, and the
//! fine simplicial subdivision of a face fan whose rays are all boundary
//! lattice points.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::lattice::{self, IntMatrix, IntVector};
use crate::polytope::{combinations, hyperplane_normal, LatticePolytope};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanError {
    #[error("cone generators must be nonzero")]
    ZeroGenerator,
    #[error("cone contains a line")]
    NotStronglyConvex,
    #[error("generators have mixed dimensions")]
    DimensionMismatch,
    #[error("the origin is not an interior point of the polytope")]
    OriginNotInterior,
    #[error("polytope is not reflexive")]
    NotReflexive,
    #[error("subdivision is only implemented up to dimension 3, not {0}")]
    UnsupportedDimension(usize),
}

/// A strongly convex rational cone, stored by its primitive extreme rays.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    rays: Vec<IntVector>,
    dim: usize,
    ambient: usize,
}

/// Facets of a cone written in coordinates where it is full-dimensional:
/// `coords` selects the ambient coordinates, `normals` are inward.
struct LocalFacets {
    coords: Vec<usize>,
    normals: Vec<Vec<BigInt>>,
}

fn project(v: &IntVector, coords: &[usize]) -> Vec<BigInt> {
    coords.iter().map(|&c| v[c].clone()).collect()
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl Cone {
    /// Cone generated by `gens` in `Z^ambient`. Generators are made primitive
    /// and non-extreme ones are dropped.
    pub fn new(gens: &[IntVector], ambient: usize) -> Result<Cone, FanError> {
        let mut rays = BTreeSet::new();
        for g in gens {
            if g.dim() != ambient {
                return Err(FanError::DimensionMismatch);
            }
            rays.insert(lattice::primitive(g).map_err(|_| FanError::ZeroGenerator)?);
        }
        let rays: Vec<IntVector> = rays.into_iter().collect();
        let dim = if rays.is_empty() { 0 } else { lattice::rank(&IntMatrix::from_row_vectors(&rays)) };
        let mut cone = Cone { rays, dim, ambient };
        if cone.dim == 0 {
            return Ok(cone);
        }
        let facets = cone.local_facets();
        let tight = cone.facet_ray_sets(&facets);
        // the minimal face must be the origin
        let lineality: BTreeSet<usize> = tight
            .iter()
            .fold((0..cone.rays.len()).collect(), |acc: BTreeSet<usize>, t| acc.intersection(t).copied().collect());
        if !lineality.is_empty() || (tight.is_empty() && cone.dim > 0) {
            return Err(FanError::NotStronglyConvex);
        }
        let extreme: BTreeSet<usize> = cone
            .face_sets(&tight)
            .into_iter()
            .filter(|s| s.len() == 1)
            .flatten()
            .collect();
        if extreme.len() < cone.rays.len() {
            cone.rays = extreme.into_iter().map(|i| cone.rays[i].clone()).collect();
        }
        Ok(cone)
    }

    pub fn zero(ambient: usize) -> Cone {
        Cone { rays: Vec::new(), dim: 0, ambient }
    }

    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn is_simplicial(&self) -> bool {
        self.rays.len() == self.dim
    }

    /// Generators form part of a basis of the lattice.
    pub fn is_smooth(&self) -> bool {
        self.is_simplicial()
            && (self.dim == 0
                || lattice::smith_diagonal(&IntMatrix::from_row_vectors(&self.rays))
                    .iter()
                    .all(One::is_one))
    }

    /// Absolute determinant of the generators of a full-dimensional simplicial
    /// cone, i.e. its lattice multiplicity.
    pub fn multiplicity(&self) -> Option<BigInt> {
        (self.is_simplicial() && self.dim == self.ambient && self.dim > 0)
            .then(|| lattice::determinant(&IntMatrix::from_row_vectors(&self.rays)).expect("square").abs())
    }

    fn local_facets(&self) -> LocalFacets {
        let d = self.dim;
        // d coordinates on which the span projects injectively
        let mut coords = Vec::new();
        combinations(self.ambient, d, |c| {
            if coords.is_empty() {
                let m = IntMatrix::from_rows(self.rays.iter().map(|r| project(r, c)).collect());
                if lattice::rank(&m) == d {
                    coords = c.to_vec();
                }
            }
        });
        let local: Vec<IntVector> = self.rays.iter().map(|r| IntVector::new(project(r, &coords))).collect();
        let mut normals = BTreeSet::new();
        combinations(local.len(), d - 1, |idx| {
            let dirs: Vec<IntVector> = idx.iter().map(|&i| local[i].clone()).collect();
            let n = hyperplane_normal(&dirs, d);
            if n.is_zero() {
                return;
            }
            let n = lattice::primitive(&n).expect("nonzero");
            let (mut pos, mut neg) = (false, false);
            for g in &local {
                match n.dot(g).sign() {
                    num_bigint::Sign::Plus => pos = true,
                    num_bigint::Sign::Minus => neg = true,
                    num_bigint::Sign::NoSign => {}
                }
            }
            match (pos, neg) {
                (true, false) => {
                    normals.insert(n.into_entries());
                }
                (false, true) => {
                    normals.insert(n.neg().into_entries());
                }
                _ => {}
            }
        });
        LocalFacets { coords, normals: normals.into_iter().collect() }
    }

    fn facet_ray_sets(&self, f: &LocalFacets) -> Vec<BTreeSet<usize>> {
        f.normals
            .iter()
            .map(|n| {
                (0..self.rays.len()).filter(|&i| dot(n, &project(&self.rays[i], &f.coords)).is_zero()).collect()
            })
            .collect()
    }

    /// All faces as index sets into `rays`, including the cone itself and the
    /// empty set for the origin.
    fn face_sets(&self, facets: &[BTreeSet<usize>]) -> BTreeSet<BTreeSet<usize>> {
        let mut sets: BTreeSet<BTreeSet<usize>> = facets.iter().cloned().collect();
        let mut frontier: Vec<BTreeSet<usize>> = sets.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for b in facets {
                    let c: BTreeSet<usize> = a.intersection(b).copied().collect();
                    if sets.insert(c.clone()) {
                        next.push(c);
                    }
                }
            }
            frontier = next;
        }
        sets.insert((0..self.rays.len()).collect());
        sets.insert(BTreeSet::new());
        sets
    }

    /// Every face of the cone, itself and the zero cone included.
    pub fn faces(&self) -> Vec<Cone> {
        if self.dim == 0 {
            return vec![self.clone()];
        }
        let facets = self.facet_ray_sets(&self.local_facets());
        self.face_sets(&facets)
            .into_iter()
            .map(|s| {
                let rays: Vec<IntVector> = s.into_iter().map(|i| self.rays[i].clone()).collect();
                let dim = if rays.is_empty() { 0 } else { lattice::rank(&IntMatrix::from_row_vectors(&rays)) };
                Cone { rays, dim, ambient: self.ambient }
            })
            .collect()
    }

    pub fn contains(&self, v: &IntVector) -> bool {
        if v.is_zero() {
            return true;
        }
        if self.dim == 0 || v.dim() != self.ambient {
            return false;
        }
        let mut with_v = self.rays.clone();
        with_v.push(v.clone());
        if lattice::rank(&IntMatrix::from_row_vectors(&with_v)) != self.dim {
            return false;
        }
        let f = self.local_facets();
        let pv = project(v, &f.coords);
        f.normals.iter().all(|n| !dot(n, &pv).is_negative())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.rays.iter().all(|r| self.contains(r))
    }
}

/// A fan, stored as its maximal cones. Faces are generated on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    ambient: usize,
    maximal: Vec<Cone>,
    rays: Vec<IntVector>,
}

impl Fan {
    /// Fan with the given maximal cones. Cones that are faces of other listed
    /// cones are dropped. The intersection property is not checked.
    pub fn from_maximal_cones(ambient: usize, cones: Vec<Cone>) -> Fan {
        let set: BTreeSet<Cone> = cones.into_iter().collect();
        let maximal: Vec<Cone> = set
            .iter()
            .filter(|c| {
                !set.iter().any(|d| d != *c && d.dim > c.dim && d.faces().contains(c))
            })
            .cloned()
            .collect();
        let rays: BTreeSet<IntVector> = maximal
            .iter()
            .flat_map(|c| c.faces().into_iter().filter(|f| f.dim == 1).flat_map(|f| f.rays))
            .collect();
        Fan { ambient, maximal, rays: rays.into_iter().collect() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn maximal_cones(&self) -> &[Cone] {
        &self.maximal
    }

    /// The primitive generators of the one-dimensional cones, sorted.
    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    pub fn max_dim(&self) -> usize {
        self.maximal.iter().map(Cone::dim).max().unwrap_or(0)
    }

    /// All cones of the fan.
    pub fn cones(&self) -> BTreeSet<Cone> {
        let mut all: BTreeSet<Cone> = self.maximal.iter().flat_map(Cone::faces).collect();
        all.insert(Cone::zero(self.ambient));
        all
    }

    pub fn cones_of_dim(&self, d: usize) -> Vec<Cone> {
        self.cones().into_iter().filter(|c| c.dim == d).collect()
    }

    /// Every maximal cone of `self` lies in some maximal cone of `coarse`.
    pub fn refines(&self, coarse: &Fan) -> bool {
        self.maximal.iter().all(|c| coarse.maximal.iter().any(|d| d.contains_cone(c)))
    }
}

/// Fan over the faces of `p`: one cone per face, one maximal cone per facet.
pub fn face_fan(p: &LatticePolytope) -> Result<Fan, FanError> {
    if !p.origin_is_interior() {
        return Err(FanError::OriginNotInterior);
    }
    let k = p.dim();
    let cones = p
        .facets()
        .iter()
        .map(|f| {
            let gens: Vec<IntVector> = p.vertices().iter().filter(|v| f.is_tight(v)).cloned().collect();
            Cone::new(&gens, k)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Fan::from_maximal_cones(k, cones))
}

/// Normal fan of a full-dimensional polytope: for each vertex `v` the cone of
/// functionals minimized at `v`, generated by the inward normals of the
/// facets through `v`.
pub fn normal_fan(e: &LatticePolytope) -> Result<Fan, FanError> {
    let k = e.dim();
    let cones = e
        .vertices()
        .iter()
        .map(|v| {
            let gens: Vec<IntVector> =
                e.facets().iter().filter(|f| f.is_tight(v)).map(|f| f.normal.clone()).collect();
            Cone::new(&gens, k)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Fan::from_maximal_cones(k, cones))
}

/// Orientation of three points in a plane, given by two chosen coordinates.
fn orient(a: &[BigInt], b: &[BigInt], c: &[BigInt]) -> BigInt {
    (&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0])
}

/// Placing triangulation of lattice points spanning an affine space of
/// dimension at most 2, inserting them in the given order. Returns simplices
/// as index lists.
fn placing_triangulation(pts: &[IntVector]) -> Vec<Vec<usize>> {
    let n = pts.len();
    if n == 1 {
        return vec![vec![0]];
    }
    let diffs: Vec<IntVector> = pts[1..].iter().map(|p| p.sub(&pts[0])).collect();
    let m = lattice::rank(&IntMatrix::from_row_vectors(&diffs));
    debug_assert!(m <= 2);
    if m == 1 {
        // points on a line: lexicographic order is monotone along it
        return (0..n - 1).map(|i| vec![i, i + 1]).collect();
    }
    // two coordinates on which the plane projects injectively
    let k = pts[0].dim();
    let mut coords = Vec::new();
    combinations(k, 2, |c| {
        if coords.is_empty() {
            let m = IntMatrix::from_rows(diffs.iter().map(|d| project(d, c)).collect());
            if lattice::rank(&m) == 2 {
                coords = c.to_vec();
            }
        }
    });
    let q: Vec<Vec<BigInt>> = pts.iter().map(|p| project(p, &coords)).collect();

    let mut line: Vec<usize> = vec![0];
    let mut tris: Vec<[usize; 3]> = Vec::new();
    for i in 1..n {
        if tris.is_empty() {
            if line.len() < 2 || orient(&q[line[0]], &q[line[1]], &q[i]).is_zero() {
                line.push(i);
            } else {
                tris.extend(line.windows(2).map(|w| [w[0], w[1], i]));
            }
            continue;
        }
        // a lexicographically later point is a vertex of the new hull, so it
        // sees some boundary edges and lies outside the current hull
        let mut new = Vec::new();
        for t in &tris {
            for e in 0..3 {
                let (a, b, c) = (t[e], t[(e + 1) % 3], t[(e + 2) % 3]);
                let shared = tris.iter().filter(|s| s.contains(&a) && s.contains(&b)).count();
                if shared != 1 {
                    continue;
                }
                let side_c = orient(&q[a], &q[b], &q[c]);
                let side_p = orient(&q[a], &q[b], &q[i]);
                if !side_p.is_zero() && side_p.sign() != side_c.sign() {
                    new.push([a, b, i]);
                }
            }
        }
        assert!(!new.is_empty(), "placing order keeps every new point outside the hull");
        tris.extend(new);
    }
    tris.into_iter().map(|t| t.to_vec()).collect()
}

/// Simplicial refinement of the face fan of a reflexive `p` (dimension at
/// most 3) whose rays are all nonzero lattice points of `p`. Each facet is
/// triangulated by placing its lattice points in lexicographic order.
/// Regularity of the triangulation is not checked.
pub fn max_projective_subdivision(p: &LatticePolytope) -> Result<Fan, FanError> {
    let k = p.dim();
    if k > 3 {
        return Err(FanError::UnsupportedDimension(k));
    }
    if !p.is_reflexive() {
        return Err(FanError::NotReflexive);
    }
    let points = p.lattice_points();
    let mut cones = Vec::new();
    for f in p.facets() {
        let on_facet: Vec<IntVector> = points.iter().filter(|x| f.is_tight(x)).cloned().collect();
        for simplex in placing_triangulation(&on_facet) {
            let gens: Vec<IntVector> = simplex.iter().map(|&i| on_facet[i].clone()).collect();
            cones.push(Cone::new(&gens, k)?);
        }
    }
    Ok(Fan::from_maximal_cones(k, cones))
}

pub fn is_simplicial(f: &Fan) -> bool {
    f.maximal.iter().all(Cone::is_simplicial)
}

pub fn is_smooth(f: &Fan) -> bool {
    f.maximal.iter().all(Cone::is_smooth)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(points: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::from_i64(points).unwrap()
    }

    fn simplex() -> LatticePolytope {
        poly(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]])
    }

    fn octahedron() -> LatticePolytope {
        poly(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]])
    }

    fn wp1113() -> LatticePolytope {
        poly(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -3]])
    }

    #[test]
    fn cone_drops_interior_generators() {
        let c = Cone::new(&[IntVector::from_i64(&[1, 0]), IntVector::from_i64(&[1, 1]), IntVector::from_i64(&[0, 2])], 2)
            .unwrap();
        assert_eq!(c.rays(), &[IntVector::from_i64(&[0, 1]), IntVector::from_i64(&[1, 0])]);
        assert_eq!(c.dim(), 2);
        assert!(c.is_smooth());
    }

    #[test]
    fn cone_rejects_lines() {
        let gens = [IntVector::from_i64(&[1, 0]), IntVector::from_i64(&[-1, 0]), IntVector::from_i64(&[0, 1])];
        assert_eq!(Cone::new(&gens, 2), Err(FanError::NotStronglyConvex));
        let gens = [IntVector::from_i64(&[1]), IntVector::from_i64(&[-1])];
        assert_eq!(Cone::new(&gens, 1), Err(FanError::NotStronglyConvex));
        assert_eq!(Cone::new(&[IntVector::zero(2)], 2), Err(FanError::ZeroGenerator));
    }

    #[test]
    fn cone_faces() {
        let c = Cone::new(
            &[
                IntVector::from_i64(&[1, 1, 1]),
                IntVector::from_i64(&[1, -1, 1]),
                IntVector::from_i64(&[-1, 1, 1]),
                IntVector::from_i64(&[-1, -1, 1]),
            ],
            3,
        )
        .unwrap();
        let faces = c.faces();
        let count = |d| faces.iter().filter(|f| f.dim() == d).count();
        assert_eq!((count(0), count(1), count(2), count(3)), (1, 4, 4, 1));
        assert!(!c.is_simplicial());
        assert!(c.contains(&IntVector::from_i64(&[0, 0, 5])));
        assert!(!c.contains(&IntVector::from_i64(&[2, 0, 1])));
    }

    #[test]
    fn face_fans() {
        let f = face_fan(&simplex()).unwrap();
        assert_eq!((f.maximal_cones().len(), f.rays().len()), (4, 4));
        assert!(is_smooth(&f));
        let f = face_fan(&octahedron()).unwrap();
        assert_eq!((f.maximal_cones().len(), f.rays().len()), (8, 6));
        let f = face_fan(&poly(&[&[1, 0], &[0, 1], &[-1, -1]])).unwrap();
        assert_eq!(f.maximal_cones().len(), 3);
        assert_eq!(f.cones().len(), 7);
        let off = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(face_fan(&off), Err(FanError::OriginNotInterior));
    }

    #[test]
    fn cube_face_fan_is_not_simplicial() {
        let cube = octahedron().polar().unwrap();
        let f = face_fan(&cube).unwrap();
        assert!(!is_simplicial(&f));
        assert!(!is_smooth(&f));
    }

    #[test]
    fn normal_fans_match_polar_face_fans() {
        let s = simplex();
        assert_eq!(normal_fan(&s.polar().unwrap()).unwrap(), face_fan(&s).unwrap());
        let cube = octahedron().polar().unwrap();
        assert_eq!(normal_fan(&cube).unwrap(), face_fan(&octahedron()).unwrap());
        let seg = normal_fan(&poly(&[&[-1], &[1]])).unwrap();
        assert_eq!(seg.rays(), &[IntVector::from_i64(&[-1]), IntVector::from_i64(&[1])]);
    }

    #[test]
    fn subdivisions() {
        let s = max_projective_subdivision(&simplex()).unwrap();
        assert_eq!(s.maximal_cones().len(), 4);
        assert_eq!(s, face_fan(&simplex()).unwrap());

        let cube = octahedron().polar().unwrap();
        let s = max_projective_subdivision(&cube).unwrap();
        assert_eq!(s.rays().len(), 26);
        assert_eq!(s.maximal_cones().len(), 48);
        assert!(is_smooth(&s));
        assert!(s.refines(&face_fan(&cube).unwrap()));

        let w = max_projective_subdivision(&wp1113()).unwrap();
        assert_eq!(w.rays().len(), 5);
        assert!(w.rays().contains(&IntVector::from_i64(&[0, 0, -1])));
        assert!(is_smooth(&w));
    }

    #[test]
    fn subdivision_of_polygons() {
        let hexagon_dual = poly(&[&[-1, -1], &[2, -1], &[-1, 2]]);
        let s = max_projective_subdivision(&hexagon_dual).unwrap();
        assert_eq!(s.rays().len(), 9);
        assert_eq!(s.maximal_cones().len(), 9);
        assert!(is_smooth(&s));
    }

    #[test]
    fn subdivision_limits() {
        let quintic = poly(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, -1, -1, -1]]);
        assert_eq!(max_projective_subdivision(&quintic), Err(FanError::UnsupportedDimension(4)));
        let not_reflexive = poly(&[&[2, 0], &[0, 2], &[-2, -2]]);
        assert_eq!(max_projective_subdivision(&not_reflexive), Err(FanError::NotReflexive));
    }
}
