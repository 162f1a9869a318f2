//! Lattice automorphisms of polytopes, orbits, small-group identification,
//! the canonical normal form used to class polytopes up to `GL(k, Z)`, and the
//! exhaustive classification of reflexive polytopes in dimensions 1 and 2.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::lattice::{self, IntMatrix, IntVector};
use crate::polytope::{convex_hull, LatticePolytope, PolytopeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("point set is not stable under the group: {0} leaves it")]
    NotStable(String),
    #[error("classification is only available in dimensions 1 and 2, not {0}")]
    UnsupportedDimension(usize),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

/// A finite group of integer matrices acting on column vectors by `x -> g x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixGroup {
    dim: usize,
    /// sorted, identity included
    elements: Vec<IntMatrix>,
}

/// The group of lattice automorphisms of a polytope, or a subgroup of it.
pub type PolytopeAutGroup = MatrixGroup;

impl MatrixGroup {
    /// Wraps a list of matrices, checking the group axioms.
    pub fn new(dim: usize, elements: Vec<IntMatrix>) -> Option<Self> {
        let set: BTreeSet<IntMatrix> = elements.into_iter().collect();
        if !set.contains(&IntMatrix::identity(dim)) {
            return None;
        }
        for a in &set {
            if a.rows() != dim || a.cols() != dim {
                return None;
            }
            for b in &set {
                if !set.contains(&a.mul(b)) {
                    return None;
                }
            }
        }
        Some(MatrixGroup { dim, elements: set.into_iter().collect() })
    }

    pub fn trivial(dim: usize) -> Self {
        MatrixGroup { dim, elements: vec![IntMatrix::identity(dim)] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[IntMatrix] {
        &self.elements
    }

    pub fn contains(&self, m: &IntMatrix) -> bool {
        self.elements.binary_search(m).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &MatrixGroup) -> bool {
        self.dim == other.dim && self.elements.iter().all(|g| other.contains(g))
    }

    /// The contragredient action `g -> (g^T)^{-1}`, which preserves the pairing
    /// between `N` and `M`.
    pub fn dual(&self) -> MatrixGroup {
        let mut elements: Vec<IntMatrix> = self.elements.iter().map(inverse_transpose).collect();
        elements.sort();
        MatrixGroup { dim: self.dim, elements }
    }

    /// Image of a point under every element.
    pub fn orbit(&self, x: &IntVector) -> BTreeSet<IntVector> {
        self.elements.iter().map(|g| g.mul_vec(x)).collect()
    }
}

/// `(g^T)^{-1}` for a unimodular `g`.
pub fn inverse_transpose(g: &IntMatrix) -> IntMatrix {
    let det = lattice::determinant(g).expect("square");
    let adj = lattice::adjugate(g).expect("square");
    debug_assert!(det.abs().is_one());
    adj.scale(&det).transpose()
}

fn element_order(g: &IntMatrix) -> u64 {
    let id = IntMatrix::identity(g.rows());
    let mut p = g.clone();
    let mut n = 1;
    while p != id {
        p = p.mul(g);
        n += 1;
        assert!(n <= 1000, "element of a finite group has bounded order");
    }
    n
}

/// All unimodular matrices permuting the vertex set of `p`.
///
/// Fixes `k` linearly independent vertices as a basis and tries every ordered
/// tuple of vertices as their images; a candidate is kept when the induced
/// map is integral, unimodular and maps vertices to vertices.
pub fn automorphism_group(p: &LatticePolytope) -> PolytopeAutGroup {
    let k = p.dim();
    let verts = p.vertices();

    // greedy basis among the vertices
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..verts.len() {
        let mut trial: Vec<IntVector> = basis.iter().map(|&j| verts[j].clone()).collect();
        trial.push(verts[i].clone());
        if lattice::rank(&IntMatrix::from_row_vectors(&trial)) == trial.len() {
            basis.push(i);
            if basis.len() == k {
                break;
            }
        }
    }
    assert_eq!(basis.len(), k, "full-dimensional polytope has a vertex basis");

    let b = IntMatrix::from_columns(&basis.iter().map(|&i| verts[i].clone()).collect::<Vec<_>>());
    let det_b = lattice::determinant(&b).expect("square");
    let adj_b = lattice::adjugate(&b).expect("square");

    // vertices can only map to vertices with the same number of incident facets
    let signature = |v: &IntVector| -> (usize, BigInt) {
        (p.facets().iter().filter(|f| f.is_tight(v)).count(), v.content())
    };
    let sigs: Vec<(usize, BigInt)> = verts.iter().map(signature).collect();
    let vertex_set: HashSet<&IntVector> = verts.iter().collect();

    let mut found = Vec::new();
    let mut images = vec![0usize; k];
    fn rec(
        depth: usize,
        images: &mut Vec<usize>,
        basis: &[usize],
        sigs: &[(usize, BigInt)],
        f: &mut dyn FnMut(&[usize]),
    ) {
        if depth == basis.len() {
            f(images);
            return;
        }
        for cand in 0..sigs.len() {
            if sigs[cand] != sigs[basis[depth]] || images[..depth].contains(&cand) {
                continue;
            }
            images[depth] = cand;
            rec(depth + 1, images, basis, sigs, f);
        }
    }
    rec(0, &mut images, &basis, &sigs, &mut |imgs| {
        let c = IntMatrix::from_columns(&imgs.iter().map(|&i| verts[i].clone()).collect::<Vec<_>>());
        // A = C B^{-1} = C adj(B) / det(B)
        let num = c.mul(&adj_b);
        let mut a = IntMatrix::zeros(k, k);
        for r in 0..k {
            for s in 0..k {
                let (q, rem) = num.get(r, s).div_rem(&det_b);
                if !rem.is_zero() {
                    return;
                }
                a.set(r, s, q);
            }
        }
        if !lattice::determinant(&a).expect("square").abs().is_one() {
            return;
        }
        if verts.iter().all(|v| vertex_set.contains(&a.mul_vec(v))) {
            found.push(a);
        }
    });
    found.sort();
    found.dedup();
    MatrixGroup { dim: k, elements: found }
}

/// The subgroup of determinant `+1` elements.
pub fn orientation_preserving(g: &PolytopeAutGroup) -> PolytopeAutGroup {
    MatrixGroup {
        dim: g.dim,
        elements: g
            .elements
            .iter()
            .filter(|m| lattice::determinant(m).expect("square").is_one())
            .cloned()
            .collect(),
    }
}

/// Isomorphism type of a small group, decided from its order, its element
/// orders and commutativity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupLabel {
    Trivial,
    Cyclic(u64),
    /// dihedral group of order `2n`
    Dihedral(u64),
    ElementaryAbelian { prime: u64, rank: u32 },
    A4,
    S4,
    Other { order: u64, element_orders: BTreeMap<u64, u64> },
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Trivial => write!(f, "trivial"),
            GroupLabel::Cyclic(n) => write!(f, "C{n}"),
            GroupLabel::Dihedral(n) => write!(f, "D{n}"),
            GroupLabel::ElementaryAbelian { prime, rank } => write!(f, "C{prime}^{rank}"),
            GroupLabel::A4 => write!(f, "A4"),
            GroupLabel::S4 => write!(f, "S4"),
            GroupLabel::Other { order, element_orders } => {
                let h: Vec<String> = element_orders.iter().map(|(o, c)| format!("{o}:{c}")).collect();
                write!(f, "order{order}[{}]", h.join(","))
            }
        }
    }
}

fn histogram(pairs: &[(u64, u64)]) -> BTreeMap<u64, u64> {
    pairs.iter().copied().collect()
}

fn dihedral_histogram(n: u64) -> BTreeMap<u64, u64> {
    let mut h = BTreeMap::new();
    for r in 0..n {
        *h.entry(n / r.gcd(&n)).or_insert(0) += 1;
    }
    *h.entry(2).or_insert(0) += n;
    h
}

fn prime_power(n: u64) -> Option<(u64, u32)> {
    let p = (2..=n).find(|d| n % d == 0)?;
    let mut m = n;
    let mut e = 0;
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

pub fn identify_small_group(g: &MatrixGroup) -> GroupLabel {
    let order = g.order() as u64;
    let mut hist: BTreeMap<u64, u64> = BTreeMap::new();
    for e in &g.elements {
        *hist.entry(element_order(e)).or_insert(0) += 1;
    }
    let abelian = g.elements.iter().all(|a| g.elements.iter().all(|b| a.mul(b) == b.mul(a)));

    if order == 1 {
        return GroupLabel::Trivial;
    }
    if hist.contains_key(&order) {
        return GroupLabel::Cyclic(order);
    }
    if order == 12 && hist == histogram(&[(1, 1), (2, 3), (3, 8)]) {
        return GroupLabel::A4;
    }
    if order == 24 && hist == histogram(&[(1, 1), (2, 9), (3, 8), (4, 6)]) {
        return GroupLabel::S4;
    }
    if abelian {
        if let Some((p, r)) = prime_power(order) {
            if hist.keys().all(|&o| o == 1 || o == p) {
                return GroupLabel::ElementaryAbelian { prime: p, rank: r };
            }
        }
    }
    if !abelian && order % 2 == 0 && order >= 6 && hist == dihedral_histogram(order / 2) {
        return GroupLabel::Dihedral(order / 2);
    }
    GroupLabel::Other { order, element_orders: hist }
}

/// Orbit of the first vertex covers all vertices.
pub fn is_vertex_transitive(g: &MatrixGroup, p: &LatticePolytope) -> bool {
    match p.vertices().first() {
        None => true,
        Some(v) => {
            let orbit = g.orbit(v);
            orbit.len() == p.vertices().len() && p.vertices().iter().all(|w| orbit.contains(w))
        }
    }
}

/// Partition of a `g`-stable point set into orbits. Orbits and their members
/// are sorted.
pub fn orbits(g: &MatrixGroup, pts: &[IntVector]) -> Result<Vec<Vec<IntVector>>, SymmetryError> {
    let set: BTreeSet<&IntVector> = pts.iter().collect();
    let mut assigned: BTreeSet<IntVector> = BTreeSet::new();
    let mut out = Vec::new();
    for x in &set {
        if assigned.contains(*x) {
            continue;
        }
        let orbit = g.orbit(x);
        if let Some(bad) = orbit.iter().find(|y| !set.contains(y)) {
            return Err(SymmetryError::NotStable(bad.to_string()));
        }
        assigned.extend(orbit.iter().cloned());
        out.push(orbit.into_iter().collect());
    }
    Ok(out)
}

/// Canonical representative of a polytope's `GL(k, Z)` class: the
/// lexicographically smallest (column by column) Hermite form of the vertex
/// matrix over all orderings of the vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    matrix: IntMatrix,
}

impl NormalForm {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn vertex_count(&self) -> usize {
        self.matrix.cols()
    }

    /// The columns are the vertices of a polytope in the class.
    pub fn to_polytope(&self) -> Result<LatticePolytope, PolytopeError> {
        convex_hull(&self.matrix.columns(), self.matrix.rows())
    }

    /// Compact text key: rows separated by `;`, entries by `,`.
    pub fn key(&self) -> String {
        (0..self.matrix.rows())
            .map(|r| self.matrix.row(r).iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn from_key(key: &str) -> Option<NormalForm> {
        let rows: Option<Vec<Vec<BigInt>>> = key
            .split(';')
            .map(|r| r.split(',').map(|x| x.trim().parse::<BigInt>().ok()).collect())
            .collect();
        let rows = rows?;
        let c = rows.first()?.len();
        if c == 0 || rows.iter().any(|r| r.len() != c) {
            return None;
        }
        Some(NormalForm { matrix: IntMatrix::from_rows(rows) })
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.key())
    }
}

/// Partial Hermite reduction of a prefix of columns: the transform `u`
/// (rows `rank..` are not canonical) and the reduced prefix.
#[derive(Clone)]
struct Prefix {
    used: Vec<bool>,
    cols: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    rank: usize,
}

impl Prefix {
    fn start(k: usize, n: usize) -> Self {
        let u = (0..k)
            .map(|i| (0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        Prefix { used: vec![false; n], cols: Vec::new(), u, rank: 0 }
    }

    fn apply(u: &[Vec<BigInt>], c: &IntVector) -> Vec<BigInt> {
        u.iter().map(|row| row.iter().zip(c.entries()).map(|(a, b)| a * b).sum()).collect()
    }

    /// Appends column `c`, returning the reduced column and the new transform.
    fn push(&self, c: &IntVector) -> (Vec<BigInt>, Vec<Vec<BigInt>>, usize) {
        let k = self.u.len();
        let mut u = self.u.clone();
        let mut x = Self::apply(&u, c);
        let r = self.rank;
        if r < k && x[r..].iter().any(|v| !v.is_zero()) {
            for i in r + 1..k {
                while !x[i].is_zero() {
                    let q = x[r].div_floor(&x[i]);
                    let t = &q * &x[i];
                    x[r] -= t;
                    for j in 0..k {
                        let t = &q * &u[i][j];
                        u[r][j] -= t;
                    }
                    x.swap(r, i);
                    u.swap(r, i);
                }
            }
            if x[r].is_negative() {
                x[r] = -&x[r];
                for v in u[r].iter_mut() {
                    *v = -&*v;
                }
            }
            let pivot = x[r].clone();
            for i in 0..r {
                let q = x[i].div_floor(&pivot);
                x[i] -= &q * &pivot;
                for j in 0..k {
                    let t = &q * &u[r][j];
                    u[i][j] -= t;
                }
            }
            return (x, u, r + 1);
        }
        (x, u, r)
    }
}

/// Normal form of a polytope's vertex set.
///
/// Breadth-first over column prefixes: the Hermite form of a prefix of columns
/// is the prefix of the Hermite form, so only prefixes achieving the smallest
/// next column survive. Once a prefix has full rank the transform is fixed and
/// the cheapest completion is the sorted image of the remaining vertices.
pub fn normal_form(p: &LatticePolytope) -> NormalForm {
    normal_form_of_points(p.vertices(), p.dim())
}

pub fn normal_form_of_points(verts: &[IntVector], k: usize) -> NormalForm {
    let n = verts.len();
    let mut layer = vec![Prefix::start(k, n)];
    let mut best: Option<Vec<Vec<BigInt>>> = None;
    while !layer.is_empty() {
        let mut next: Vec<Prefix> = Vec::new();
        let mut min_col: Option<Vec<BigInt>> = None;
        for st in &layer {
            if st.rank == k || st.cols.len() == n {
                let mut rest: Vec<Vec<BigInt>> = (0..n)
                    .filter(|&i| !st.used[i])
                    .map(|i| Prefix::apply(&st.u, &verts[i]))
                    .collect();
                rest.sort();
                let mut full = st.cols.clone();
                full.extend(rest);
                if best.as_ref().is_none_or(|b| full < *b) {
                    best = Some(full);
                }
                continue;
            }
            for i in 0..n {
                if st.used[i] {
                    continue;
                }
                let (x, u, rank) = st.push(&verts[i]);
                match &min_col {
                    Some(m) if x > *m => continue,
                    Some(m) if x < *m => {
                        next.clear();
                        min_col = Some(x.clone());
                    }
                    None => min_col = Some(x.clone()),
                    _ => {}
                }
                let mut used = st.used.clone();
                used[i] = true;
                let mut cols = st.cols.clone();
                cols.push(x);
                next.push(Prefix { used, cols, u, rank });
            }
        }
        layer = next;
    }
    let cols = best.expect("at least one vertex ordering");
    let columns: Vec<IntVector> = cols.into_iter().map(IntVector::new).collect();
    NormalForm { matrix: IntMatrix::from_columns(&columns) }
}

/// Box half-width used by [`enumerate_reflexive`].
pub const DEFAULT_SEARCH_BOX: i64 = 4;

/// All reflexive polytopes of dimension 1 or 2 up to lattice equivalence,
/// sorted by normal form.
pub fn enumerate_reflexive(dim: usize) -> Result<Vec<NormalForm>, SymmetryError> {
    enumerate_reflexive_in_box(dim, DEFAULT_SEARCH_BOX)
}

/// Like [`enumerate_reflexive`], searching vertices in `[-bound, bound]^dim`.
pub fn enumerate_reflexive_in_box(dim: usize, bound: i64) -> Result<Vec<NormalForm>, SymmetryError> {
    let candidates = match dim {
        1 => {
            let mut c = Vec::new();
            for a in -bound..0 {
                for b in 1..=bound {
                    c.push(vec![IntVector::from_i64(&[a]), IntVector::from_i64(&[b])]);
                }
            }
            c
        }
        2 => reflexive_polygon_candidates(bound),
        d => return Err(SymmetryError::UnsupportedDimension(d)),
    };
    let mut classes = BTreeSet::new();
    for vs in candidates {
        let p = convex_hull(&vs, dim)?;
        if p.is_reflexive() && p.vertices().len() == vs.len() {
            classes.insert(normal_form(&p));
        }
    }
    Ok(classes.into_iter().collect())
}

/// Vertex subsets of the box that can bound a reflexive polygon, generated as
/// counterclockwise chains whose edges all sit at lattice distance one from
/// the origin and turn strictly left. Every reflexive polygon in the box shows
/// up (starting from its lexicographically smallest vertex); the caller still
/// filters with the exact hull.
fn reflexive_polygon_candidates(bound: i64) -> Vec<Vec<IntVector>> {
    let gcd = |a: i64, b: i64| a.gcd(&b);
    let mut prim: Vec<[i64; 2]> = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            if gcd(x, y) == 1 {
                prim.push([x, y]);
            }
        }
    }
    let det = |a: [i64; 2], b: [i64; 2]| a[0] * b[1] - a[1] * b[0];
    // edge a -> b lies on a line at distance one, origin on the left
    let edge_ok = |a: [i64; 2], b: [i64; 2]| {
        let d = [b[0] - a[0], b[1] - a[1]];
        det(a, b) > 0 && det(a, b) == gcd(d[0], d[1])
    };
    let left_turn = |a: [i64; 2], b: [i64; 2], c: [i64; 2]| {
        det([b[0] - a[0], b[1] - a[1]], [c[0] - b[0], c[1] - b[1]]) > 0
    };

    let mut out = Vec::new();
    for &start in &prim {
        let mut chain = vec![start];
        extend_chain(&prim, &mut chain, &edge_ok, &left_turn, &mut out);
    }
    out
}

fn extend_chain(
    prim: &[[i64; 2]],
    chain: &mut Vec<[i64; 2]>,
    edge_ok: &dyn Fn([i64; 2], [i64; 2]) -> bool,
    left_turn: &dyn Fn([i64; 2], [i64; 2], [i64; 2]) -> bool,
    out: &mut Vec<Vec<IntVector>>,
) {
    // a convex lattice polygon with one interior point has at most 6 vertices
    const MAX_VERTICES: usize = 6;
    let start = chain[0];
    let last = *chain.last().expect("nonempty");
    if chain.len() >= 3
        && edge_ok(last, start)
        && left_turn(chain[chain.len() - 2], last, start)
        && left_turn(last, start, chain[1])
    {
        out.push(chain.iter().map(|p| IntVector::from_i64(p)).collect());
    }
    if chain.len() == MAX_VERTICES {
        return;
    }
    // vertices wind once around the origin, so their angle from `start` increases
    let det = |a: [i64; 2], b: [i64; 2]| a[0] * b[1] - a[1] * b[0];
    let half = |v: [i64; 2]| {
        let d = det(start, v);
        u8::from(!(d > 0 || (d == 0 && start[0] * v[0] + start[1] * v[1] > 0)))
    };
    let after = |a: [i64; 2], b: [i64; 2]| half(a) < half(b) || (half(a) == half(b) && det(a, b) > 0);
    for &next in prim {
        if next <= start || !after(last, next) || !edge_ok(last, next) {
            continue;
        }
        if chain.len() >= 2 && !left_turn(chain[chain.len() - 2], last, next) {
            continue;
        }
        chain.push(next);
        extend_chain(prim, chain, edge_ok, left_turn, out);
        chain.pop();
    }
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

    #[test]
    fn automorphism_orders() {
        assert_eq!(automorphism_group(&simplex()).order(), 24);
        assert_eq!(automorphism_group(&octahedron()).order(), 48);
        assert_eq!(automorphism_group(&poly(&[&[-1], &[1]])).order(), 2);
    }

    #[test]
    fn automorphisms_form_a_group() {
        let g = automorphism_group(&octahedron());
        assert!(MatrixGroup::new(3, g.elements().to_vec()).is_some());
    }

    #[test]
    fn rotation_subgroups() {
        let a = orientation_preserving(&automorphism_group(&simplex()));
        assert_eq!(a.order(), 12);
        let s = orientation_preserving(&automorphism_group(&octahedron()));
        assert_eq!(s.order(), 24);
        assert_eq!(orientation_preserving(&MatrixGroup::trivial(3)).order(), 1);
    }

    #[test]
    fn group_labels() {
        let a = orientation_preserving(&automorphism_group(&simplex()));
        assert_eq!(identify_small_group(&a), GroupLabel::A4);
        let s = orientation_preserving(&automorphism_group(&octahedron()));
        assert_eq!(identify_small_group(&s), GroupLabel::S4);
        assert_eq!(identify_small_group(&MatrixGroup::trivial(3)), GroupLabel::Trivial);

        let square = poly(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]);
        let g = automorphism_group(&square);
        assert_eq!(identify_small_group(&g), GroupLabel::Dihedral(4));
        assert_eq!(identify_small_group(&orientation_preserving(&g)), GroupLabel::Cyclic(4));
        let seg = automorphism_group(&poly(&[&[-1], &[1]]));
        assert_eq!(identify_small_group(&seg), GroupLabel::Cyclic(2));
    }

    #[test]
    fn klein_four_is_elementary_abelian() {
        let m = |d: &[i64]| IntMatrix::from_i64_rows(&[&[d[0], 0], &[0, d[1]]]);
        let g = MatrixGroup::new(2, vec![m(&[1, 1]), m(&[-1, 1]), m(&[1, -1]), m(&[-1, -1])]).unwrap();
        assert_eq!(identify_small_group(&g), GroupLabel::ElementaryAbelian { prime: 2, rank: 2 });
    }

    #[test]
    fn vertex_transitivity() {
        let p = simplex();
        let a = orientation_preserving(&automorphism_group(&p));
        assert!(is_vertex_transitive(&a, &p));
        let o = octahedron();
        assert!(is_vertex_transitive(&orientation_preserving(&automorphism_group(&o)), &o));
        assert!(!is_vertex_transitive(&MatrixGroup::trivial(3), &p));
    }

    #[test]
    fn cube_rotation_orbits() {
        let cube = octahedron().polar().unwrap();
        let g = orientation_preserving(&automorphism_group(&cube));
        let pts: Vec<IntVector> = cube.lattice_points().into_iter().filter(|x| !x.is_zero()).collect();
        let mut sizes: Vec<usize> = orbits(&g, &pts).unwrap().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![6, 8, 12]);

        let singletons = orbits(&MatrixGroup::trivial(3), &pts).unwrap();
        assert_eq!(singletons.len(), 26);
    }

    #[test]
    fn dual_simplex_vertex_orbit() {
        let p = simplex();
        let d = p.polar().unwrap();
        let a = orientation_preserving(&automorphism_group(&p)).dual();
        let o = orbits(&a, d.vertices()).unwrap();
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].len(), 4);
    }

    #[test]
    fn orbits_reject_unstable_sets() {
        let g = automorphism_group(&octahedron());
        let pts = vec![IntVector::from_i64(&[1, 0, 0])];
        assert!(matches!(orbits(&g, &pts), Err(SymmetryError::NotStable(_))));
    }

    #[test]
    fn normal_form_separates_and_identifies() {
        let s = simplex();
        assert_ne!(normal_form(&s), normal_form(&octahedron()));
        let u = IntMatrix::from_i64_rows(&[&[1, 2, 0], &[0, 1, 0], &[3, 5, 1]]);
        assert_eq!(normal_form(&s), normal_form(&s.transform(&u).unwrap()));
        let nf = normal_form(&s);
        assert_eq!(normal_form(&nf.to_polytope().unwrap()), nf);
        assert_eq!(NormalForm::from_key(&nf.key()), Some(nf));
    }

    #[test]
    fn classification_counts() {
        assert_eq!(enumerate_reflexive(1).unwrap().len(), 1);
        let polys = enumerate_reflexive(2).unwrap();
        assert_eq!(polys.len(), 16);
        let tri = normal_form(&poly(&[&[1, 0], &[0, 1], &[-1, -1]]));
        assert!(polys.contains(&tri));
        assert_eq!(enumerate_reflexive(3), Err(SymmetryError::UnsupportedDimension(3)));
    }

    #[test]
    fn larger_box_finds_nothing_new() {
        assert_eq!(enumerate_reflexive_in_box(2, 6).unwrap(), enumerate_reflexive(2).unwrap());
        assert_eq!(enumerate_reflexive_in_box(1, 6).unwrap().len(), 1);
    }

    #[test]
    fn polygons_closed_under_polarity() {
        let polys = enumerate_reflexive(2).unwrap();
        for nf in &polys {
            let dual = nf.to_polytope().unwrap().polar().unwrap();
            assert!(polys.contains(&normal_form(&dual)));
        }
    }
}
