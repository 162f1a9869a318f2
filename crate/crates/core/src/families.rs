//! Anticanonical hypersurface families in homogeneous coordinates, their
//! diagonal symplectic symmetries, Picard rank lower bounds, and the search
//! for naturally one-parameter families.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use thiserror::Error;

use crate::invariants::{self, InvariantError};
use crate::lattice::{self, FiniteAbelianGroup, IntMatrix, IntVector, RationalLattice};
use crate::polytope::{LatticePolytope, PolytopeError};
use crate::symmetry::{
    automorphism_group, identify_small_group, is_vertex_transitive, normal_form, orbits,
    orientation_preserving, GroupLabel, MatrixGroup, NormalForm, SymmetryError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("point {0} lies outside the dual polytope")]
    OutsideDual(String),
    #[error("the group is not a subgroup of the polytope's automorphism group")]
    NotSubgroup,
    #[error("monomial support is empty")]
    EmptySupport,
    #[error("monomial support spans a sublattice of rank {0}; the diagonal group is infinite")]
    InfiniteGroup(usize),
    #[error("constraint row {0} is not in the image of the ray matrix")]
    ConstraintNotLifted(usize),
    #[error("no rank of S_G is known for the group {0}")]
    GroupNotInTable(String),
    #[error("expected a 3-dimensional reflexive polytope")]
    NotK3Polytope,
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

fn require_k3(p: &LatticePolytope) -> Result<(), FamilyError> {
    if p.dim() == 3 && p.is_reflexive() {
        Ok(())
    } else {
        Err(FamilyError::NotK3Polytope)
    }
}

/// The nonzero lattice points of `p`, sorted. These are the rays of the
/// maximal subdivision of its face fan.
pub fn ray_points(p: &LatticePolytope) -> Vec<IntVector> {
    p.lattice_points().into_iter().filter(|x| !x.is_zero()).collect()
}

/// The monomial attached to a point `x` of the dual polytope: the exponent
/// of `z_j` is `<v_j, x> + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialExponent {
    pub point: IntVector,
    pub exponents: Vec<BigInt>,
}

impl MonomialExponent {
    pub fn new(point: &IntVector, rays: &[IntVector]) -> Result<Self, FamilyError> {
        let exponents: Vec<BigInt> = rays.iter().map(|v| v.dot(point) + 1).collect();
        if exponents.iter().any(Signed::is_negative) {
            return Err(FamilyError::OutsideDual(point.to_string()));
        }
        Ok(MonomialExponent { point: point.clone(), exponents })
    }

    pub fn degree(&self) -> BigInt {
        self.exponents.iter().sum()
    }
}

/// One monomial per lattice point of the polar of `delta`, in the
/// homogeneous coordinates indexed by `rays`.
pub fn anticanonical_monomials(
    delta: &LatticePolytope,
    rays: &[IntVector],
) -> Result<Vec<MonomialExponent>, FamilyError> {
    let dual = delta.polar()?;
    dual.lattice_points().iter().map(|x| MonomialExponent::new(x, rays)).collect()
}

/// A family of anticanonical hypersurfaces whose coefficients are constant on
/// the classes. The monomial of the origin is always its own class and is not
/// counted.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub polytope: LatticePolytope,
    pub rays: Vec<IntVector>,
    /// partition of the nonzero lattice points of the polar
    pub classes: Vec<Vec<IntVector>>,
    pub parameter_count: usize,
}

/// Coefficients constant on orbits of `h` acting on the polar by the
/// contragredient action.
pub fn symmetric_family(delta: &LatticePolytope, h: &MatrixGroup) -> Result<FamilySpec, FamilyError> {
    let full = automorphism_group(delta);
    if !h.is_subgroup_of(&full) {
        return Err(FamilyError::NotSubgroup);
    }
    let dual = delta.polar()?;
    let classes = orbits(&h.dual(), &ray_points(&dual))?;
    Ok(FamilySpec {
        polytope: delta.clone(),
        rays: ray_points(delta),
        parameter_count: classes.len(),
        classes,
    })
}

/// Which monomials appear in a pencil.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Support {
    /// vertices of the polar and the origin
    Vertices,
    /// every lattice point of the polar
    All,
}

impl FromStr for Support {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "vertices" => Ok(Support::Vertices),
            "all" => Ok(Support::All),
            other => Err(format!("unknown support {other:?}, expected vertices or all")),
        }
    }
}

pub fn support_points(delta: &LatticePolytope, support: Support) -> Result<Vec<IntVector>, FamilyError> {
    let dual = delta.polar()?;
    Ok(match support {
        Support::Vertices => {
            let mut s = dual.vertices().to_vec();
            s.push(IntVector::zero(dual.dim()));
            s.sort();
            s
        }
        Support::All => dual.lattice_points(),
    })
}

/// Group of diagonal symplectic symmetries of a generic member of the family
/// with monomial support `support`, using the nonzero lattice points of
/// `delta` as homogeneous coordinates.
pub fn symplectic_torus_group(
    delta: &LatticePolytope,
    support: &[IntVector],
) -> Result<FiniteAbelianGroup, FamilyError> {
    symplectic_torus_group_with_rays(delta, &ray_points(delta), support)
}

/// As [`symplectic_torus_group`] with an explicit choice of rays.
///
/// Phases `a` in `(Q/Z)^q` scale every monomial of the support by the same
/// factor as the volume form. Each constraint row `E(x) - E(x0)` and
/// `1 - E(x0)` equals `V y` for the integer vector `y = x - x0` resp.
/// `-x0`, so the phases acting trivially on the toric variety
/// (`V^T a = 0`) satisfy all of them, and the quotient is the set of
/// `b = V^T a` in `(Q/Z)^k` with `y . b = 0`: the dual of the lattice `Y`
/// spanned by the `y` modulo `Z^k`.
pub fn symplectic_torus_group_with_rays(
    delta: &LatticePolytope,
    rays: &[IntVector],
    support: &[IntVector],
) -> Result<FiniteAbelianGroup, FamilyError> {
    let k = delta.dim();
    let mut support: Vec<IntVector> = support.to_vec();
    support.sort();
    support.dedup();
    let x0 = support.first().ok_or(FamilyError::EmptySupport)?.clone();
    let e0 = MonomialExponent::new(&x0, rays)?;
    let v = IntMatrix::from_row_vectors(rays);

    let mut ys: Vec<IntVector> = Vec::new();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for x in &support[1..] {
        let e = MonomialExponent::new(x, rays)?;
        rows.push(e.exponents.iter().zip(&e0.exponents).map(|(a, b)| a - b).collect());
        ys.push(x.sub(&x0));
    }
    let det_row: Vec<BigInt> = e0.exponents.iter().map(|e| BigInt::one() - e).collect();
    if support.iter().any(IntVector::is_zero) {
        // E(0) is the all-ones vector, so the row for x = 0 is the det row
        let before = lattice::rank(&IntMatrix::from_rows(rows.clone()));
        let mut with_det = rows.clone();
        with_det.push(det_row.clone());
        assert_eq!(lattice::rank(&IntMatrix::from_rows(with_det)), before, "det row is dependent when 0 is in the support");
    }
    rows.push(det_row);
    ys.push(x0.neg());

    for (i, (row, y)) in rows.iter().zip(&ys).enumerate() {
        if v.mul_vec(y).entries() != row.as_slice() {
            return Err(FamilyError::ConstraintNotLifted(i));
        }
    }

    let (h, _) = lattice::hermite_normal_form(&IntMatrix::from_row_vectors(&ys));
    let r = lattice::rank(&h);
    if r < k {
        return Err(FamilyError::InfiniteGroup(r));
    }
    let basis = IntMatrix::from_rows((0..k).map(|i| h.row(i).to_vec()).collect());
    let det = lattice::determinant(&basis).expect("square");
    let adj = lattice::adjugate(&basis).expect("square");
    // rows of (basis^{-1})^T span the dual lattice of Y
    let (dual_basis, denom) = if det.is_negative() { (adj.transpose().scale(&-BigInt::one()), -det) } else { (adj.transpose(), det) };
    let dual = RationalLattice::new(dual_basis, denom).expect("positive denominator");
    Ok(lattice::lattice_quotient(&RationalLattice::standard(k), &dual).expect("Z^k lies in the dual of a sublattice"))
}

/// A group whose `rank S_G` may be recorded.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SGKey {
    Abelian(FiniteAbelianGroup),
    Named(String),
}

impl fmt::Display for SGKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SGKey::Abelian(g) => {
                let parts: Vec<String> = g.invariant_factors().iter().map(ToString::to_string).collect();
                write!(f, "{}", if parts.is_empty() { "1".to_string() } else { parts.join(",") })
            }
            SGKey::Named(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct TableParseError {
    pub line: usize,
    pub message: String,
}

/// Known ranks of the sublattice `S_G` for finite symplectic groups `G`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SGRankTable {
    entries: BTreeMap<SGKey, u32>,
}

const SHIPPED_TABLE: &str = include_str!("../data/sg_ranks.txt");

impl SGRankTable {
    /// The table bundled with the library.
    pub fn shipped() -> SGRankTable {
        SGRankTable::parse(SHIPPED_TABLE).expect("bundled table parses")
    }

    /// Lines `d1,d2,...:rank` for abelian groups by invariant factors, or
    /// `NAME:rank` for a named group. Blank lines and `#` comments are
    /// ignored; later lines override earlier ones.
    pub fn parse(text: &str) -> Result<SGRankTable, TableParseError> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| TableParseError { line: i + 1, message };
            let (key, rank) = line.split_once(':').ok_or_else(|| err("missing ':'".into()))?;
            let rank: u32 = rank.trim().parse().map_err(|_| err(format!("bad rank {:?}", rank.trim())))?;
            let key = key.trim();
            let key = if key.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                let orders: Vec<u64> = key
                    .split(',')
                    .map(|t| t.trim().parse::<u64>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| err(format!("bad group {key:?}")))?;
                SGKey::Abelian(FiniteAbelianGroup::from_u64(&orders).ok_or_else(|| err("zero order".into()))?)
            } else if !key.is_empty() && key.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                SGKey::Named(key.to_string())
            } else {
                return Err(err(format!("bad group {key:?}")));
            };
            entries.insert(key, rank);
        }
        Ok(SGRankTable { entries })
    }

    pub fn get(&self, key: &SGKey) -> Option<u32> {
        self.entries.get(key).copied()
    }

    pub fn insert(&mut self, key: SGKey, rank: u32) {
        self.entries.insert(key, rank);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SGKey, u32)> {
        self.entries.iter().map(|(k, &v)| (k, v))
    }

    /// One `key:rank` line per entry.
    pub fn to_text(&self) -> String {
        self.entries.iter().map(|(k, v)| format!("{k}:{v}\n")).collect()
    }
}

/// `rho_cor(delta) + rank S_G`, a lower bound for the Picard rank of a member
/// of the family admitting the symplectic action of `g`.
pub fn picard_lower_bound(
    delta: &LatticePolytope,
    g: &FiniteAbelianGroup,
    table: &SGRankTable,
) -> Result<i64, FamilyError> {
    require_k3(delta)?;
    let rho_cor = invariants::rho_tor(delta)? + invariants::delta(delta)?;
    let rank = if g.is_trivial() {
        0
    } else {
        let key = SGKey::Abelian(g.clone());
        table.get(&key).ok_or_else(|| FamilyError::GroupNotInTable(key.to_string()))?
    };
    Ok(rho_cor + i64::from(rank))
}

/// A polytope giving a naturally one-parameter family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneParameterClass {
    pub normal_form: NormalForm,
    pub group: GroupLabel,
    pub group_order: usize,
    pub vertex_count: usize,
    pub facet_count: usize,
}

/// Whether `p`, read as the monomial polytope, has only its vertices and the
/// origin as lattice points and a vertex-transitive group of
/// orientation-preserving automorphisms.
pub fn one_parameter_class(p: &LatticePolytope) -> Option<OneParameterClass> {
    if p.dim() != 3 || !p.is_reflexive() || p.lattice_point_count() != p.vertices().len() + 1 {
        return None;
    }
    let g = orientation_preserving(&automorphism_group(p));
    is_vertex_transitive(&g, p).then(|| OneParameterClass {
        normal_form: normal_form(p),
        group: identify_small_group(&g),
        group_order: g.order(),
        vertex_count: p.vertices().len(),
        facet_count: p.facets().len(),
    })
}

/// All classes of `db` giving one-parameter families, sorted by normal form.
pub fn search_one_parameter(db: &[LatticePolytope]) -> Vec<OneParameterClass> {
    let mut found: BTreeMap<NormalForm, OneParameterClass> = BTreeMap::new();
    for p in db {
        if let Some(c) = one_parameter_class(p) {
            found.entry(c.normal_form.clone()).or_insert(c);
        }
    }
    found.into_values().collect()
}

/// Converts small invariant factors to machine integers.
pub fn invariant_factors_u64(g: &FiniteAbelianGroup) -> Vec<u64> {
    g.invariant_factors().iter().map(|d| d.to_u64().expect("small group")).collect()
}
