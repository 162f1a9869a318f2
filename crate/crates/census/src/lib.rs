//! Enumeration of all three-dimensional reflexive polytopes up to `GL(3, Z)`.
//!
//! Every reflexive polytope is reached from the simplex `conv{3e1-..., ...}`
//! (the polar of the standard simplex) by repeatedly dropping one vertex and
//! taking the hull of the remaining lattice points, as long as the origin
//! stays interior. Polars of reflexive polytopes found along the way are
//! used as further starting points. Classes are deduplicated by a
//! lexicographically minimal Hermite normal form.
//!
//! Plain `i64` arithmetic throughout; coordinates stay tiny.

use std::collections::HashSet;

pub type Point = [i64; 3];

fn sub(a: Point, b: Point) -> Point {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: Point, b: Point) -> Point {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: Point, b: Point) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn det3(a: Point, b: Point, c: Point) -> i64 {
    dot(a, cross(b, c))
}

/// Facet `n . x + c >= 0` with `n` primitive.
type Facet = (Point, i64);

#[derive(Clone)]
struct Poly {
    verts: Vec<Point>,
    facets: Vec<Facet>,
    pts: Vec<Point>,
}

fn hull(cands: &[Point]) -> Option<(Vec<Point>, Vec<Facet>)> {
    let n = cands.len();
    let mut facets: Vec<Facet> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut nr = cross(sub(cands[j], cands[i]), sub(cands[k], cands[i]));
                if nr == [0, 0, 0] {
                    continue;
                }
                let g = gcd(gcd(nr[0], nr[1]), nr[2]);
                nr = [nr[0] / g, nr[1] / g, nr[2] / g];
                let c0 = dot(nr, cands[i]);
                let (mut pos, mut neg) = (false, false);
                for p in cands {
                    let s = dot(nr, *p) - c0;
                    if s > 0 {
                        pos = true
                    } else if s < 0 {
                        neg = true
                    }
                    if pos && neg {
                        break;
                    }
                }
                if pos && neg {
                    continue;
                }
                if !pos && !neg {
                    return None;
                }
                let (nr, c) = if neg { ([-nr[0], -nr[1], -nr[2]], c0) } else { (nr, -c0) };
                if !facets.iter().any(|f| f.0 == nr) {
                    facets.push((nr, c));
                }
            }
        }
    }
    if facets.len() < 4 {
        return None;
    }
    let mut verts = Vec::new();
    for p in cands {
        let on: Vec<Point> = facets.iter().filter(|f| dot(f.0, *p) + f.1 == 0).map(|f| f.0).collect();
        let mut is_vertex = false;
        'o: for a in 0..on.len() {
            for b in a + 1..on.len() {
                for c in b + 1..on.len() {
                    if det3(on[a], on[b], on[c]) != 0 {
                        is_vertex = true;
                        break 'o;
                    }
                }
            }
        }
        if is_vertex {
            verts.push(*p);
        }
    }
    Some((verts, facets))
}

/// Columns of the lexicographically smallest Hermite form of the vertex
/// matrix over all vertex orders.
pub fn normal_form(verts: &[Point]) -> Vec<Point> {
    #[derive(Clone)]
    struct St {
        used: u64,
        cols: Vec<Point>,
        u: [Point; 3],
        r: usize,
    }
    fn push(st: &St, c: Point) -> (Point, [Point; 3], usize) {
        let mut u = st.u;
        let mut x = [dot(u[0], c), dot(u[1], c), dot(u[2], c)];
        let mut r = st.r;
        if r < 3 && (r..3).any(|i| x[i] != 0) {
            for i in r + 1..3 {
                while x[i] != 0 {
                    let q = x[r] / x[i];
                    x[r] -= q * x[i];
                    for t in 0..3 {
                        u[r][t] -= q * u[i][t];
                    }
                    x.swap(r, i);
                    u.swap(r, i);
                }
            }
            if x[r] < 0 {
                x[r] = -x[r];
                for t in 0..3 {
                    u[r][t] = -u[r][t];
                }
            }
            let p = x[r];
            for i in 0..r {
                let q = x[i].div_euclid(p);
                x[i] -= q * p;
                for t in 0..3 {
                    u[i][t] -= q * u[r][t];
                }
            }
            r += 1;
        }
        (x, u, r)
    }
    assert!(verts.len() <= 64);
    let n = verts.len();
    let mut layer = vec![St { used: 0, cols: vec![], u: [[1, 0, 0], [0, 1, 0], [0, 0, 1]], r: 0 }];
    let mut best: Option<Vec<Point>> = None;
    loop {
        let mut next: Vec<St> = Vec::new();
        let mut min_col: Option<Point> = None;
        for st in &layer {
            if st.r == 3 {
                let mut rest: Vec<Point> = (0..n)
                    .filter(|i| st.used >> i & 1 == 0)
                    .map(|i| {
                        let c = verts[i];
                        [dot(st.u[0], c), dot(st.u[1], c), dot(st.u[2], c)]
                    })
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
                if st.used >> i & 1 == 1 {
                    continue;
                }
                let (x, u, r) = push(st, verts[i]);
                match min_col {
                    Some(m) if x > m => continue,
                    Some(m) if x < m => {
                        next.clear();
                        min_col = Some(x)
                    }
                    None => min_col = Some(x),
                    _ => {}
                }
                let mut cols = st.cols.clone();
                cols.push(x);
                next.push(St { used: st.used | 1 << i, cols, u, r });
            }
        }
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    best.expect("nonempty vertex set")
}

fn lattice_points(verts: &[Point], facets: &[Facet]) -> Vec<Point> {
    let mut lo = [i64::MAX; 3];
    let mut hi = [i64::MIN; 3];
    for v in verts {
        for t in 0..3 {
            lo[t] = lo[t].min(v[t]);
            hi[t] = hi[t].max(v[t]);
        }
    }
    let mut out = vec![];
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            for z in lo[2]..=hi[2] {
                let p = [x, y, z];
                if facets.iter().all(|f| dot(f.0, p) + f.1 >= 0) {
                    out.push(p);
                }
            }
        }
    }
    out
}

fn make(cands: &[Point]) -> Option<Poly> {
    let (verts, facets) = hull(cands)?;
    if !facets.iter().all(|f| f.1 > 0) {
        return None;
    }
    let pts = lattice_points(&verts, &facets);
    Some(Poly { verts, facets, pts })
}

/// One reflexive class: its normal-form vertices and the lattice point and
/// vertex counts of it and its polar.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CensusEntry {
    pub vertices: Vec<Point>,
    pub points: usize,
    pub dual_vertices: usize,
    pub dual_points: usize,
}

/// All reflexive classes, sorted by `(points, vertices)`. `progress` is
/// called now and then with the number of visited polytopes and reflexive
/// classes found so far.
pub fn enumerate(mut progress: impl FnMut(usize, usize)) -> Vec<CensusEntry> {
    let seed = make(&[[3, -1, -1], [-1, 3, -1], [-1, -1, 3], [-1, -1, -1]]).expect("seed is a polytope");
    let mut seen: HashSet<Vec<Point>> = HashSet::new();
    let mut found: Vec<CensusEntry> = Vec::new();
    let mut seeds = vec![seed];
    let mut nodes = 0usize;
    while let Some(s) = seeds.pop() {
        if !seen.insert(normal_form(&s.verts)) {
            continue;
        }
        let mut stack = vec![s];
        while let Some(p) = stack.pop() {
            nodes += 1;
            if nodes % 20000 == 0 {
                progress(nodes, found.len());
            }
            if p.facets.iter().all(|f| f.1 == 1) {
                let dual: Vec<Point> = p.facets.iter().map(|f| f.0).collect();
                let dual_poly = make(&dual).expect("polar of a reflexive polytope");
                found.push(CensusEntry {
                    vertices: normal_form(&p.verts),
                    points: p.pts.len(),
                    dual_vertices: dual_poly.verts.len(),
                    dual_points: dual_poly.pts.len(),
                });
                if !seen.contains(&normal_form(&dual)) {
                    seeds.push(dual_poly);
                }
            }
            for v in &p.verts {
                let on_v: Vec<&Facet> = p.facets.iter().filter(|f| dot(f.0, *v) + f.1 == 0).collect();
                let mut cands: Vec<Point> = p.verts.iter().filter(|w| *w != v).cloned().collect();
                for q in &p.pts {
                    if q == v || p.verts.contains(q) {
                        continue;
                    }
                    if on_v.iter().any(|f| dot(f.0, *q) + f.1 == 0) {
                        cands.push(*q);
                    }
                }
                let Some((cv, cf)) = hull(&cands) else { continue };
                if !cf.iter().all(|f| f.1 > 0) {
                    continue;
                }
                if !seen.insert(normal_form(&cv)) {
                    continue;
                }
                let pts: Vec<Point> = p.pts.iter().filter(|q| *q != v).cloned().collect();
                stack.push(Poly { verts: cv, facets: cf, pts });
            }
        }
    }
    found.sort_by(|a, b| (a.points, &a.vertices).cmp(&(b.points, &b.vertices)));
    found.dedup();
    found
}

/// KS text: header `3 n M:points n N:dual_points dual_vertices`, then the
/// vertices as columns.
pub fn to_ks(entries: &[CensusEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        let n = e.vertices.len();
        out.push_str(&format!("3 {n} M:{} {n} N:{} {}\n", e.points, e.dual_points, e.dual_vertices));
        for r in 0..3 {
            let row: Vec<String> = e.vertices.iter().map(|v| v[r].to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form_is_invariant() {
        let s = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]];
        let t: Vec<Point> = s.iter().map(|v| [v[0] + 2 * v[1], v[1], 3 * v[0] + 5 * v[1] + v[2]]).collect();
        assert_eq!(normal_form(&s), normal_form(&t));
    }

    #[test]
    fn hull_of_octahedron() {
        let o = [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1], [0, 0, 0]];
        let p = make(&o).unwrap();
        assert_eq!((p.verts.len(), p.facets.len(), p.pts.len()), (6, 8, 7));
    }
}
