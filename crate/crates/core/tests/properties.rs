//! Property tests for the structural invariants: normal forms, duality,
//! unimodular invariance and the text formats.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use rk3::invariants::{self, InvariantRecord};
use rk3::ks::{self, KSEntry};
use rk3::lattice::{self, IntMatrix, IntVector, RationalLattice};
use rk3::polytope::{LatticePolytope, ReflexivePair};
use rk3::store;
use rk3::symmetry;

fn sample3d() -> &'static [LatticePolytope] {
    static S: OnceLock<Vec<LatticePolytope>> = OnceLock::new();
    S.get_or_init(|| {
        ks::parse_ks(include_str!("../data/sample3d.ks"))
            .unwrap()
            .iter()
            .map(|e| e.polytope().unwrap())
            .collect()
    })
}

fn matrix(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_i64_rows(&rows.iter().map(Vec::as_slice).collect::<Vec<_>>())
}

fn small_matrix(r: usize, c: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, c), r).prop_map(|rows| matrix(&rows))
}

/// A unimodular 3x3 matrix as a product of elementary moves.
fn unimodular3() -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0usize..3, 0usize..3, -2i64..=2, any::<bool>()), 0..8).prop_map(|ops| {
        let mut m = IntMatrix::identity(3);
        for (i, j, q, flip) in ops {
            let mut e = IntMatrix::identity(3);
            if i != j {
                e.set(i, j, BigInt::from(q));
            } else if flip {
                e.set(i, i, BigInt::from(-1));
            }
            m = e.mul(&m);
        }
        m
    })
}

fn is_hermite(h: &IntMatrix) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut zero_seen = false;
    for r in 0..h.rows() {
        match (0..h.cols()).find(|&c| !h.get(r, c).is_zero()) {
            None => zero_seen = true,
            Some(c) => {
                if zero_seen || last_pivot.is_some_and(|p| c <= p) || !h.get(r, c).is_positive() {
                    return false;
                }
                let p = h.get(r, c);
                if (0..r).any(|i| h.get(i, c).is_negative() || h.get(i, c) >= p) {
                    return false;
                }
                last_pivot = Some(c);
            }
        }
    }
    true
}

fn transformed(p: &LatticePolytope, u: &IntMatrix) -> LatticePolytope {
    p.transform(u).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hermite_form_is_reduced(m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| small_matrix(r, c))) {
        let (h, u) = lattice::hermite_normal_form(&m);
        prop_assert_eq!(u.mul(&m), h.clone());
        prop_assert_eq!(lattice::determinant(&u).unwrap().abs(), BigInt::one());
        prop_assert!(is_hermite(&h));
    }

    #[test]
    fn smith_form_divides(m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| small_matrix(r, c))) {
        let (s, u, v) = lattice::smith_normal_form(&m);
        prop_assert_eq!(u.mul(&m).mul(&v), s.clone());
        prop_assert_eq!(lattice::determinant(&u).unwrap().abs(), BigInt::one());
        prop_assert_eq!(lattice::determinant(&v).unwrap().abs(), BigInt::one());
        let d = lattice::smith_diagonal(&m);
        for w in d.windows(2) {
            let divides = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            prop_assert!(divides);
        }
        if m.is_square() {
            let prod: BigInt = d.iter().product();
            prop_assert_eq!(prod, lattice::determinant(&m).unwrap().abs());
        }
    }

    #[test]
    fn quotient_order_is_index(m in small_matrix(3, 3)) {
        let det = lattice::determinant(&m).unwrap();
        prop_assume!(!det.is_zero());
        // rows of m^{-1} = adj(m) / det span a lattice containing Z^3
        let sup = RationalLattice::new(lattice::adjugate(&m).unwrap().transpose(), det.abs()).unwrap();
        let sup = if det.is_negative() {
            RationalLattice::new(sup.basis.scale(&BigInt::from(-1)), sup.denominator).unwrap()
        } else {
            sup
        };
        let g = lattice::lattice_quotient(&RationalLattice::standard(3), &sup).unwrap();
        prop_assert_eq!(g.order(), det.abs());
    }

    #[test]
    fn normal_form_ignores_coordinates(i in 0usize..20, u in unimodular3(), shuffle in any::<u64>()) {
        let p = &sample3d()[i];
        let q = transformed(p, &u);
        // same vertex set listed in another order
        let mut vs = q.vertices().to_vec();
        let n = vs.len();
        for a in 0..n {
            vs.swap(a, (shuffle.rotate_left(a as u32 * 7) as usize) % n);
        }
        let nf = symmetry::normal_form(p);
        prop_assert_eq!(symmetry::normal_form_of_points(&vs, 3), nf.clone());
        prop_assert_eq!(symmetry::normal_form(&nf.to_polytope().unwrap()), nf);
    }

    #[test]
    fn census_normal_form_agrees(i in 0usize..20, u in unimodular3()) {
        let p = transformed(&sample3d()[i], &u);
        let pts: Vec<[i64; 3]> = p.vertices().iter().map(|v| {
            let x = v.to_i64().unwrap();
            [x[0], x[1], x[2]]
        }).collect();
        let census = rk3_census::normal_form(&pts);
        let ours = symmetry::normal_form(&p);
        let cols: Vec<[i64; 3]> = ours.matrix().columns().iter().map(|c| {
            let x = c.to_i64().unwrap();
            [x[0], x[1], x[2]]
        }).collect();
        prop_assert_eq!(census, cols);
    }

    #[test]
    fn invariants_ignore_coordinates(i in 0usize..20, u in unimodular3()) {
        let p = &sample3d()[i];
        let q = transformed(p, &u);
        prop_assert_eq!(q.lattice_point_count(), p.lattice_point_count());
        prop_assert_eq!(q.polar().unwrap().lattice_point_count(), p.polar().unwrap().lattice_point_count());
        prop_assert_eq!(invariants::rho_tor(&q), invariants::rho_tor(p));
        prop_assert_eq!(invariants::delta(&q), invariants::delta(p));
        prop_assert_eq!(q.face_lattice().f_vector(), p.face_lattice().f_vector());
        let g = symmetry::automorphism_group(p).order();
        prop_assert_eq!(symmetry::automorphism_group(&q).order(), g);
    }

    #[test]
    fn ks_round_trip(i in 0usize..20, u in unimodular3(), note in proptest::option::of("[a-z0-9=: ]{0,12}")) {
        let p = transformed(&sample3d()[i], &u);
        let note = note.map(|s| s.trim().to_string()).filter(|s| !s.is_empty());
        let e = KSEntry::from_polytope(&p, note);
        let back = ks::parse_ks(&ks::emit_ks(std::slice::from_ref(&e))).unwrap();
        prop_assert_eq!(back.len(), 1);
        prop_assert_eq!(&back[0], &e);
        prop_assert_eq!(back[0].polytope().unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn store_round_trip_and_determinism(picks in prop::collection::vec(0usize..20, 1..8), jobs in 1usize..5) {
        let entries: Vec<KSEntry> = picks.iter().map(|&i| KSEntry::from_polytope(&sample3d()[i], None)).collect();
        let text = ks::emit_ks(&entries);
        let digest = store::source_digest(text.as_bytes());
        let serial = store::ingest(&entries, digest.clone(), 1).unwrap();
        let parallel = store::ingest(&entries, digest.clone(), jobs).unwrap();
        let bytes = store::write_records(&serial);
        prop_assert_eq!(&store::write_records(&parallel), &bytes);
        let (back, warnings) = store::parse_records(&bytes, Some(&digest)).unwrap();
        prop_assert!(warnings.is_empty());
        prop_assert_eq!(&back, &serial);
        // one record per distinct class, indexed by its first occurrence
        for r in back.by_index() {
            let first = entries.iter().position(|e| symmetry::normal_form(&e.polytope().unwrap()) == r.record.normal_form);
            prop_assert_eq!(first, Some(r.index));
        }
    }
}

#[test]
fn euler_relation_and_duality() {
    for p in sample3d() {
        let f = p.face_lattice().f_vector();
        assert_eq!(f[0] as i64 - f[1] as i64 + f[2] as i64, 2);
        let pair = ReflexivePair::new(p).unwrap();
        let back = pair.swapped();
        for face in pair.primal_faces.all_faces() {
            let d = pair.dual_of(face);
            assert_eq!(d.dim, 2 - face.dim);
            assert_eq!(back.dual_of(d), face);
        }
        assert_eq!(&pair.dual.polar().unwrap(), p);
        let r = InvariantRecord::compute(p).unwrap();
        assert!(r.mirror_ok);
        assert_eq!(r.rho_tor.unwrap() + r.delta.unwrap() + r.rho_tor_dual.unwrap(), 20);
    }
}

#[test]
fn vertex_is_its_own_relative_interior() {
    let origin = IntVector::zero(3);
    for p in sample3d() {
        assert!(p.contains(&origin));
        for v in p.face_lattice().faces(0) {
            assert_eq!(v.interior_count, 1);
        }
    }
}
