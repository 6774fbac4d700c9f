//! Deterministic example orbifolds: the compact 1-orbifolds, bad
//! 2-orbifolds, quotients of balls by finite groups, mirrors and doubles.

use std::fmt;

use thiserror::Error;

use crate::action::{self, Permutation, SimplicialAction};
use crate::complex::{Simplex, SimplicialComplex};
use crate::orbifold::{self, LocalGroupLabel, OrbifoldComplex};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("cone order {0} is smaller than 2")]
    OrderTooSmall(u64),
    #[error("unknown corpus entry {0:?}")]
    UnknownEntry(String),
}

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// Stated outright in the literature for this example.
    Stated,
    /// Computed from a closed formula or identity independent of the cell sum.
    Derived,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Stated => "stated",
            Source::Derived => "derived",
        })
    }
}

#[derive(Debug, Clone)]
pub enum Provenance {
    DirectLabeled,
    Quotient(Box<SimplicialAction>),
    Mirror(String),
    Double(String),
}

impl Provenance {
    pub fn tag(&self) -> &'static str {
        match self {
            Provenance::DirectLabeled => "direct-labeled",
            Provenance::Quotient(_) => "quotient",
            Provenance::Mirror(_) => "mirror",
            Provenance::Double(_) => "double",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub orbifold: OrbifoldComplex,
    pub provenance: Provenance,
    pub expected_chi: Option<(Rational, Source)>,
}

impl CorpusEntry {
    fn new(name: impl Into<String>, orbifold: OrbifoldComplex, provenance: Provenance) -> Self {
        CorpusEntry {
            name: name.into(),
            orbifold,
            provenance,
            expected_chi: None,
        }
    }

    fn expect(mut self, chi: Rational, source: Source) -> Self {
        self.expected_chi = Some((chi, source));
        self
    }

    pub fn dim(&self) -> Option<usize> {
        self.orbifold.dim()
    }

    pub fn action(&self) -> Option<&SimplicialAction> {
        match &self.provenance {
            Provenance::Quotient(a) => Some(a),
            _ => None,
        }
    }
}

fn complex<C, V>(cells: impl IntoIterator<Item = C>) -> SimplicialComplex
where
    C: IntoIterator<Item = V>,
    V: Into<crate::complex::VertexId>,
{
    SimplicialComplex::new(cells).expect("corpus cells are duplicate-free")
}

fn simplex(v: &[&str]) -> Simplex {
    Simplex::new(v.iter().copied()).expect("corpus cells are duplicate-free")
}

fn manifold(k: SimplicialComplex) -> OrbifoldComplex {
    OrbifoldComplex::manifold(k).expect("corpus manifolds are pseudomanifolds")
}

fn labeled(k: SimplicialComplex, labels: Vec<(Simplex, LocalGroupLabel)>, boundary: Vec<Simplex>) -> OrbifoldComplex {
    OrbifoldComplex::new(k, labels, boundary).expect("corpus cells exist")
}

/// [0,1], S¹, M₁ (one mirror end) and M₂ (two mirror ends).
pub fn build_dim1() -> Vec<CorpusEntry> {
    let edge = || complex([["0", "1"]]);
    let half = Rational::HALF;
    vec![
        CorpusEntry::new("interval", manifold(edge()), Provenance::DirectLabeled).expect(Rational::ONE, Source::Stated),
        CorpusEntry::new("s1", manifold(complex([["0", "1"], ["1", "2"], ["0", "2"]])), Provenance::DirectLabeled)
            .expect(Rational::ZERO, Source::Stated),
        CorpusEntry::new(
            "m1",
            labeled(edge(), vec![(simplex(&["0"]), LocalGroupLabel::reflection())], vec![simplex(&["1"])]),
            Provenance::DirectLabeled,
        )
        .expect(half, Source::Stated),
        CorpusEntry::new(
            "m2",
            labeled(
                edge(),
                vec![
                    (simplex(&["0"]), LocalGroupLabel::reflection()),
                    (simplex(&["1"]), LocalGroupLabel::reflection()),
                ],
                vec![],
            ),
            Provenance::DirectLabeled,
        )
        .expect(Rational::ZERO, Source::Stated),
    ]
}

/// Suspension of the triangle abc with poles N and S.
fn suspended_triangle() -> SimplicialComplex {
    complex([
        ["N", "a", "b"],
        ["N", "b", "c"],
        ["N", "a", "c"],
        ["S", "a", "b"],
        ["S", "b", "c"],
        ["S", "a", "c"],
    ])
}

fn cone_points(points: &[(&str, u64)]) -> Result<OrbifoldComplex, CorpusError> {
    let mut labels = Vec::new();
    for &(v, n) in points {
        if n < 2 {
            return Err(CorpusError::OrderTooSmall(n));
        }
        labels.push((simplex(&[v]), LocalGroupLabel::cyclic(n).expect("order at least 2")));
    }
    Ok(labeled(suspended_triangle(), labels, vec![]))
}

fn one_minus_inverse(n: u64) -> Rational {
    Rational::ONE - Rational::new(1, n as i64)
}

pub fn teardrop(n: u64) -> Result<CorpusEntry, CorpusError> {
    let o = cone_points(&[("N", n)])?;
    Ok(CorpusEntry::new(format!("teardrop{n}"), o, Provenance::DirectLabeled)
        .expect(Rational::ONE + Rational::new(1, n as i64), Source::Stated))
}

pub fn spindle(n: u64, m: u64) -> Result<CorpusEntry, CorpusError> {
    let o = cone_points(&[("N", n), ("S", m)])?;
    let chi = Rational::integer(2) - one_minus_inverse(n) - one_minus_inverse(m);
    Ok(CorpusEntry::new(format!("spindle{n}_{m}"), o, Provenance::DirectLabeled).expect(chi, Source::Derived))
}

pub fn turnover(n: u64, m: u64, r: u64) -> Result<CorpusEntry, CorpusError> {
    let o = cone_points(&[("N", n), ("S", m), ("a", r)])?;
    let chi = Rational::integer(2) - one_minus_inverse(n) - one_minus_inverse(m) - one_minus_inverse(r);
    Ok(CorpusEntry::new(format!("turnover{n}_{m}_{r}"), o, Provenance::DirectLabeled).expect(chi, Source::Derived))
}

/// Teardrop(n), spindle(n, m) and turnover(n, m, r) on a suspended triangle.
pub fn build_bad2(n: u64, m: u64, r: u64) -> Result<Vec<CorpusEntry>, CorpusError> {
    Ok(vec![teardrop(n)?, spindle(n, m)?, turnover(n, m, r)?])
}

/// Cone from `apex` over the maximal cells of `base`.
pub fn cone(base: &SimplicialComplex, apex: &str) -> SimplicialComplex {
    let cells: Vec<Vec<String>> = base
        .maximal_cells()
        .into_iter()
        .map(|id| {
            let mut c: Vec<String> = base.simplex(id).vertices().iter().map(|v| v.to_string()).collect();
            c.push(apex.to_string());
            c
        })
        .collect();
    complex(cells)
}

fn polygon_vertex(i: usize) -> String {
    format!("p{i:02}")
}

/// Cone from `c` over a k-gon: a disk.
pub fn cone_polygon(k: usize) -> SimplicialComplex {
    complex((0..k).map(|i| vec!["c".to_string(), polygon_vertex(i), polygon_vertex((i + 1) % k)]))
}

/// Cone from `o` over the boundary of the tetrahedron abcd: a ball.
pub fn ball() -> SimplicialComplex {
    complex([["o", "a", "b", "c"], ["o", "a", "b", "d"], ["o", "a", "c", "d"], ["o", "b", "c", "d"]])
}

fn permutation(k: &SimplicialComplex, image: impl Fn(&str) -> String) -> Permutation {
    let images: Vec<u32> = k
        .vertices()
        .iter()
        .map(|v| {
            let to = image(v.as_str());
            k.vertex_index(&to.as_str().into())
                .unwrap_or_else(|| panic!("vertex {to} missing from corpus complex"))
        })
        .collect();
    Permutation::from_images(images).expect("corpus permutations are bijections")
}

fn build_action(k: SimplicialComplex, generators: Vec<Permutation>) -> SimplicialAction {
    SimplicialAction::new(k, generators).expect("corpus actions are simplicial")
}

/// ℤ₂ swapping the ends of the path −1, 0, 1.
pub fn z2_path_action() -> SimplicialAction {
    let k = complex([["-1", "0"], ["0", "1"]]);
    let swap = Permutation::from_cycles(&k, [["-1", "1"]]).expect("vertices exist");
    build_action(k, vec![swap])
}

/// ℤ₃ rotating a cone over a 9-gon by three steps.
pub fn z3_disk_action() -> SimplicialAction {
    let k = cone_polygon(9);
    let rot = permutation(&k, |v| match v.strip_prefix('p') {
        Some(i) => polygon_vertex((i.parse::<usize>().expect("index") + 3) % 9),
        None => v.to_string(),
    });
    build_action(k, vec![rot])
}

fn ring_vertex(ring: char, i: usize) -> String {
    format!("{ring}{i:02}")
}

/// Cone from `o` over the suspension (poles N, S) of a k-gon e₀…e_{k−1}.
pub fn bipyramid_ball(k: usize) -> SimplicialComplex {
    let mut cells = Vec::new();
    for i in 0..k {
        let (a, b) = (ring_vertex('e', i), ring_vertex('e', (i + 1) % k));
        cells.push(vec!["o".to_string(), "N".to_string(), a.clone(), b.clone()]);
        cells.push(vec!["o".to_string(), "S".to_string(), a, b]);
    }
    complex(cells)
}

/// ℤₙ rotating the bipyramid ball over a 3n-gon by three steps about the
/// polar axis.
pub fn zn_bipyramid_action(n: usize) -> SimplicialAction {
    let k = 3 * n;
    let ball = bipyramid_ball(k);
    let rot = permutation(&ball, |v| match v.strip_prefix('e') {
        Some(i) => ring_vertex('e', (i.parse::<usize>().expect("index") + 3) % k),
        None => v.to_string(),
    });
    build_action(ball, vec![rot])
}

/// A ball whose boundary sphere has a polar cap N, rings u, e, w of k
/// vertices each and a polar cap S, coned from `o`.
pub fn ringed_ball(k: usize) -> SimplicialComplex {
    let mut cells: Vec<Vec<String>> = Vec::new();
    let v = |r: char, i: usize| ring_vertex(r, i % k);
    for i in 0..k {
        cells.push(vec!["N".into(), v('u', i), v('u', i + 1)]);
        cells.push(vec!["S".into(), v('w', i), v('w', i + 1)]);
        for (upper, lower) in [('u', 'e'), ('e', 'w')] {
            cells.push(vec![v(upper, i), v(upper, i + 1), v(lower, i)]);
            cells.push(vec![v(upper, i + 1), v(lower, i), v(lower, i + 1)]);
        }
    }
    for c in &mut cells {
        c.push("o".into());
    }
    complex(cells)
}

/// The dihedral group of order 2n acting on a ringed ball with k = 4n:
/// rotation by four steps about the polar axis, and the half-turn
/// i ↦ −i exchanging the u and w rings and the poles.
pub fn dihedral_action(n: usize) -> SimplicialAction {
    let k = 4 * n;
    let ball = ringed_ball(k);
    let split = |v: &str| -> Option<(char, usize)> {
        let mut chars = v.chars();
        let r = chars.next()?;
        let i = chars.as_str().parse().ok()?;
        Some((r, i))
    };
    let rot = permutation(&ball, |v| match split(v) {
        Some((r, i)) => ring_vertex(r, (i + 4) % k),
        None => v.to_string(),
    });
    let flip = permutation(&ball, |v| match (v, split(v)) {
        ("N", _) => "S".into(),
        ("S", _) => "N".into(),
        (_, Some((r, i))) => {
            let r = match r {
                'u' => 'w',
                'w' => 'u',
                other => other,
            };
            ring_vertex(r, (k - i) % k)
        }
        _ => v.to_string(),
    });
    build_action(ball, vec![rot, flip])
}

/// Cone from `o` over the barycentric subdivision of the tetrahedron
/// boundary, and the map from a vertex permutation of abcd to the induced
/// permutation of this complex.
fn tetrahedral_ball() -> SimplicialComplex {
    let boundary = complex([["a", "b", "c"], ["a", "b", "d"], ["a", "c", "d"], ["b", "c", "d"]]);
    let sd = boundary.barycentric_subdivision().complex;
    cone(&sd, "o")
}

fn tetrahedral_permutation(k: &SimplicialComplex, letters: &[(char, char)]) -> Permutation {
    permutation(k, |v| {
        if v == "o" {
            return v.to_string();
        }
        let mapped: Vec<String> = v
            .trim_start_matches('[')
            .trim_end_matches(']')
            .split(',')
            .map(|x| {
                let c = x.chars().next().expect("letter");
                letters.iter().find(|&&(from, _)| from == c).map_or(c, |&(_, to)| to).to_string()
            })
            .collect();
        Simplex::new(mapped).expect("distinct letters").to_string()
    })
}

/// Tetrahedral rotations (order 12) on the coned subdivided tetrahedron.
pub fn t12_action() -> SimplicialAction {
    let k = tetrahedral_ball();
    let three = tetrahedral_permutation(&k, &[('a', 'b'), ('b', 'c'), ('c', 'a')]);
    let two = tetrahedral_permutation(&k, &[('a', 'b'), ('b', 'a'), ('c', 'd'), ('d', 'c')]);
    build_action(k, vec![three, two])
}

/// All symmetries of the tetrahedron (order 24) on the same ball.
pub fn t24_action() -> SimplicialAction {
    let k = tetrahedral_ball();
    let four = tetrahedral_permutation(&k, &[('a', 'b'), ('b', 'c'), ('c', 'd'), ('d', 'a')]);
    let swap = tetrahedral_permutation(&k, &[('a', 'b'), ('b', 'a')]);
    build_action(k, vec![four, swap])
}

fn quotient_entry(name: &str, action: SimplicialAction, source: Source) -> CorpusEntry {
    let o = action::quotient_of_manifold(&action).expect("corpus actions have quotients");
    let chi = Rational::integer(action.complex().euler_char_top()) / action.group().order() as i64;
    CorpusEntry::new(name, o, Provenance::Quotient(Box::new(action))).expect(chi, source)
}

/// Quotients of disks and balls by ℤ₂, ℤ₃, ℤₙ, dihedral and tetrahedral
/// groups; expected values from χ(M)/|Γ|.
pub fn build_disk_quotients() -> Vec<CorpusEntry> {
    let mut out = vec![
        quotient_entry("path_z2", z2_path_action(), Source::Stated),
        quotient_entry("disk_z3", z3_disk_action(), Source::Derived),
    ];
    for n in [2, 3, 4] {
        out.push(quotient_entry(&format!("d3_z{n}"), zn_bipyramid_action(n), Source::Derived));
    }
    for n in [2, 3] {
        out.push(quotient_entry(&format!("d3_d{n}"), dihedral_action(n), Source::Derived));
    }
    out.push(quotient_entry("d3_t12", t12_action(), Source::Derived));
    out.push(quotient_entry("d3_t24", t24_action(), Source::Stated));
    out
}

/// Plain manifolds: a disk and a ball.
pub fn build_manifolds() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry::new("disk", manifold(cone_polygon(6)), Provenance::DirectLabeled).expect(Rational::ONE, Source::Derived),
        CorpusEntry::new("ball", manifold(ball()), Provenance::DirectLabeled).expect(Rational::ONE, Source::Derived),
    ]
}

/// mirror(M) for every manifold entry and the double of every entry with
/// boundary, with expected values χ(M) − ½χ(∂M) and 2χ(O) − χ(∂O).
pub fn build_mirrors_and_doubles(entries: &[CorpusEntry]) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for e in entries {
        let o = &e.orbifold;
        let chi = o.euler_char().expect("corpus entries are valid");
        let chi_boundary = o.orbifold_boundary().expect("valid").euler_char().expect("valid");
        if o.is_manifold() && matches!(e.provenance, Provenance::DirectLabeled) {
            let m = orbifold::mirror(o.complex()).expect("manifold entries are pseudomanifolds");
            out.push(
                CorpusEntry::new(format!("mirror_{}", e.name), m, Provenance::Mirror(e.name.clone()))
                    .expect(chi - Rational::HALF * chi_boundary, Source::Derived),
            );
        }
        if o.has_boundary() {
            let d = o.double().expect("valid");
            out.push(
                CorpusEntry::new(format!("double_{}", e.name), d, Provenance::Double(e.name.clone()))
                    .expect(2 * chi - chi_boundary, Source::Derived),
            );
        }
    }
    out
}

/// Every built-in entry, in a fixed order.
pub fn all_entries() -> Vec<CorpusEntry> {
    let mut base = build_dim1();
    base.extend(build_manifolds());
    for n in 2..=12 {
        base.push(teardrop(n).expect("order at least 2"));
    }
    for n in 2..=6 {
        for m in n..=6 {
            base.push(spindle(n, m).expect("orders at least 2"));
        }
    }
    for (n, m, r) in [(2, 3, 5), (2, 3, 7), (3, 3, 3)] {
        base.push(turnover(n, m, r).expect("orders at least 2"));
    }
    base.extend(build_disk_quotients());
    let derived = build_mirrors_and_doubles(&base);
    base.extend(derived);
    base
}

pub fn entry(name: &str) -> Result<CorpusEntry, CorpusError> {
    all_entries()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CorpusError::UnknownEntry(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbifold::GroupKind;

    #[test]
    fn names_are_unique() {
        let entries = all_entries();
        let mut names: Vec<&str> = entries.iter().map(|e| e.name.as_str()).collect();
        names.sort_unstable();
        let before = names.len();
        names.dedup();
        assert_eq!(before, names.len());
        assert!(names.contains(&"teardrop3") && names.contains(&"d3_t24"));
    }

    #[test]
    fn order_too_small() {
        assert_eq!(build_bad2(1, 2, 2).unwrap_err(), CorpusError::OrderTooSmall(1));
        assert!(matches!(entry("nope"), Err(CorpusError::UnknownEntry(_))));
    }

    #[test]
    fn group_orders() {
        assert_eq!(t12_action().group().order(), 12);
        assert_eq!(t24_action().group().order(), 24);
        assert_eq!(dihedral_action(3).group().order(), 6);
        assert_eq!(zn_bipyramid_action(4).group().order(), 4);
    }

    #[test]
    fn quotient_sizes() {
        let q = |a: &SimplicialAction| action::quotient_of_manifold(a).unwrap().complex().f_vector()[3];
        assert_eq!(q(&t24_action()), 1);
        assert_eq!(q(&t12_action()), 48);
        assert_eq!(q(&zn_bipyramid_action(3)), 6);
        assert_eq!(q(&dihedral_action(3)), 12);
    }

    #[test]
    fn t24_labels() {
        let o = action::quotient_of_manifold(&t24_action()).unwrap();
        let center = o.label_of(&Simplex::new(["o"]).unwrap()).unwrap();
        assert_eq!(center.order(), 24);
        assert!(matches!(center.kind(), GroupKind::Named(_)));
        let b = o.orbifold_boundary().unwrap();
        let mut corners: Vec<u64> = b
            .complex()
            .cells_of_dim(0)
            .map(|v| b.label(v))
            .filter(|l| *l.kind() == GroupKind::Dihedral)
            .map(|l| l.order() / 2)
            .collect();
        corners.sort_unstable();
        assert_eq!(corners, vec![2, 3, 3]);
    }
}
