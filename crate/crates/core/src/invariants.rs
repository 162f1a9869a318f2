//! Lattice-point invariants of reflexive polytopes: the toric Picard rank and
//! correction term of K3 hypersurfaces in dimension 3, and the Hodge numbers
//! of Calabi-Yau threefolds in dimension 4.

use thiserror::Error;

use crate::polytope::{LatticePolytope, PolytopeError, ReflexivePair};
use crate::symmetry::{normal_form, NormalForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("expected a polytope of dimension {expected}, got {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

fn require_dim(p: &LatticePolytope, k: usize) -> Result<(), InvariantError> {
    if p.dim() == k {
        Ok(())
    } else {
        Err(InvariantError::WrongDimension { expected: k, found: p.dim() })
    }
}

fn pair(p: &LatticePolytope) -> Result<ReflexivePair, InvariantError> {
    if !p.is_reflexive() {
        return Err(PolytopeError::NotReflexive.into());
    }
    Ok(ReflexivePair::new(p)?)
}

/// `sum over facets of l*(facet)`.
fn facet_interior_sum(pair: &ReflexivePair) -> i64 {
    pair.primal_faces.faces_of_codim(1).iter().map(|f| f.interior_count as i64).sum()
}

/// `sum over codimension-2 faces of l*(face) * l*(dual face)`.
fn codim2_correction(pair: &ReflexivePair) -> i64 {
    pair.primal_faces
        .faces_of_codim(2)
        .iter()
        .map(|f| f.interior_count as i64 * pair.dual_of(f).interior_count as i64)
        .sum()
}

fn ell(pair: &ReflexivePair) -> i64 {
    pair.primal.lattice_point_count() as i64
}

fn rho_tor_of(pair: &ReflexivePair) -> i64 {
    ell(pair) - 4 - facet_interior_sum(pair)
}

fn h11_of(pair: &ReflexivePair) -> i64 {
    let k = pair.primal.dim() as i64;
    ell(pair) - k - 1 - facet_interior_sum(pair) + codim2_correction(pair)
}

/// Rank of the toric part of the Picard lattice of a K3 hypersurface:
/// `l(p) - 4 - sum over facets of l*(facet)`.
pub fn rho_tor(p: &LatticePolytope) -> Result<i64, InvariantError> {
    require_dim(p, 3)?;
    Ok(rho_tor_of(&pair(p)?))
}

/// The correction term `sum over edges of l*(edge) * l*(dual edge)`.
pub fn delta(p: &LatticePolytope) -> Result<i64, InvariantError> {
    require_dim(p, 3)?;
    Ok(codim2_correction(&pair(p)?))
}

/// `h^{1,1}` of the Calabi-Yau threefold hypersurface.
pub fn h11(p: &LatticePolytope) -> Result<i64, InvariantError> {
    require_dim(p, 4)?;
    Ok(h11_of(&pair(p)?))
}

/// `h^{2,1}` of the Calabi-Yau threefold hypersurface, computed from the
/// polar side.
pub fn h_k21(p: &LatticePolytope) -> Result<i64, InvariantError> {
    require_dim(p, 4)?;
    Ok(h11_of(&pair(p)?.swapped()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MirrorCheck {
    pub rho_tor: i64,
    pub delta: i64,
    pub rho_tor_dual: i64,
    pub delta_dual: i64,
    /// `rho_tor + delta + rho_tor_dual == 20` and `delta == delta_dual`
    pub ok: bool,
}

fn mirror_of(pair: &ReflexivePair) -> MirrorCheck {
    let swapped = pair.swapped();
    let (rho_tor, delta) = (rho_tor_of(pair), codim2_correction(pair));
    let (rho_tor_dual, delta_dual) = (rho_tor_of(&swapped), codim2_correction(&swapped));
    MirrorCheck {
        rho_tor,
        delta,
        rho_tor_dual,
        delta_dual,
        ok: rho_tor + delta + rho_tor_dual == 20 && delta == delta_dual,
    }
}

pub fn mirror_rank_check(p: &LatticePolytope) -> Result<MirrorCheck, InvariantError> {
    require_dim(p, 3)?;
    Ok(mirror_of(&pair(p)?))
}

/// Everything computed for one reflexive polytope. The K3 fields are filled
/// for `k = 3`, the Hodge numbers for `k = 4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRecord {
    pub normal_form: NormalForm,
    pub k: usize,
    pub ell: i64,
    pub ell_dual: i64,
    pub rho_tor: Option<i64>,
    pub delta: Option<i64>,
    pub rho_cor: Option<i64>,
    pub rho_tor_dual: Option<i64>,
    pub h11: Option<i64>,
    pub h_k21: Option<i64>,
    /// the rank identity for `k = 3`, the Hodge swap for `k = 4`
    pub mirror_ok: bool,
}

impl InvariantRecord {
    pub fn compute(p: &LatticePolytope) -> Result<InvariantRecord, InvariantError> {
        let k = p.dim();
        if k != 3 && k != 4 {
            return Err(InvariantError::WrongDimension { expected: 3, found: k });
        }
        let pair = pair(p)?;
        let mut rec = InvariantRecord {
            normal_form: normal_form(p),
            k,
            ell: ell(&pair),
            ell_dual: pair.dual.lattice_point_count() as i64,
            rho_tor: None,
            delta: None,
            rho_cor: None,
            rho_tor_dual: None,
            h11: None,
            h_k21: None,
            mirror_ok: false,
        };
        if k == 3 {
            let m = mirror_of(&pair);
            rec.rho_tor = Some(m.rho_tor);
            rec.delta = Some(m.delta);
            rec.rho_cor = Some(m.rho_tor + m.delta);
            rec.rho_tor_dual = Some(m.rho_tor_dual);
            rec.mirror_ok = m.ok;
        } else {
            let swapped = pair.swapped();
            let h11 = h11_of(&pair);
            let h21 = h11_of(&swapped);
            rec.h11 = Some(h11);
            rec.h_k21 = Some(h21);
            // the same numbers read off a pair built from the polar itself
            let mirror = ReflexivePair::new(&pair.dual)?;
            rec.mirror_ok = h11_of(&mirror) == h21 && h11_of(&mirror.swapped()) == h11;
        }
        Ok(rec)
    }

    /// `rho_cor` of the polar side.
    pub fn rho_cor_dual(&self) -> Option<i64> {
        Some(self.rho_tor_dual? + self.delta?)
    }
}
