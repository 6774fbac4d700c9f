//! Stratification of the singular locus, the closure order on strata, and
//! neat decompositions along minimal strata.

use thiserror::Error;

use crate::complex::{CellId, ComplexError, SimplicialComplex};
use crate::orbifold::{LocalGroupLabel, OrbifoldComplex, OrbifoldError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrataError {
    #[error(transparent)]
    Orbifold(#[from] OrbifoldError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("strata do not partition the cells: {0}")]
    NotAPartition(String),
    #[error("closure order is not antisymmetric between strata {0} and {1}")]
    NotAntisymmetric(usize, usize),
    #[error("stratum {0} is not minimal")]
    NotMinimal(usize),
    #[error("stratum {0} is not singular")]
    SingularOnly(usize),
    #[error("not a pure subcomplex: {0}")]
    NotSubcomplex(String),
    #[error("not a decomposition: {0}")]
    NotADecomposition(String),
}

/// A connected component of open cells carrying the same local group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub id: usize,
    /// Sorted cell ids.
    pub cells: Vec<CellId>,
    pub label: LocalGroupLabel,
    pub dim: usize,
}

impl Stratum {
    pub fn is_singular(&self) -> bool {
        !self.label.is_trivial()
    }
}

/// Components of equal-label cells under the face relation, listed by their
/// smallest cell id.
pub fn stratify(o: &OrbifoldComplex) -> Result<Vec<Stratum>, StrataError> {
    o.ensure_valid()?;
    Ok(stratify_unchecked(o))
}

fn stratify_unchecked(o: &OrbifoldComplex) -> Vec<Stratum> {
    let k = o.complex();
    let all: Vec<CellId> = (0..k.len()).collect();
    k.components_where(&all, |c, f| o.label(c).same_type(o.label(f)))
        .into_iter()
        .enumerate()
        .map(|(id, cells)| Stratum {
            id,
            label: o.label(cells[0]).clone(),
            dim: cells.iter().map(|&c| k.cell_dim(c)).max().unwrap_or(0),
            cells,
        })
        .collect()
}

/// Strata under `S ≤ T ⇔ S ⊆ closure(T)`.
#[derive(Debug, Clone)]
pub struct StrataPoset {
    pub strata: Vec<Stratum>,
    /// `leq[i][j]` holds when stratum i lies in the closure of stratum j.
    leq: Vec<Vec<bool>>,
    /// Cover relations `(lower, upper)`, sorted.
    pub hasse: Vec<(usize, usize)>,
}

pub fn strata_poset(o: &OrbifoldComplex, strata: Vec<Stratum>) -> Result<StrataPoset, StrataError> {
    let k = o.complex();
    let mut owner = vec![usize::MAX; k.len()];
    for (i, s) in strata.iter().enumerate() {
        if s.id != i {
            return Err(StrataError::NotAPartition(format!("stratum at position {i} has id {}", s.id)));
        }
        for &c in &s.cells {
            if c >= k.len() || owner[c] != usize::MAX {
                return Err(StrataError::NotAPartition(format!("cell {c} is claimed twice or is out of range")));
            }
            owner[c] = i;
        }
    }
    if let Some(c) = owner.iter().position(|&x| x == usize::MAX) {
        return Err(StrataError::NotAPartition(format!("{} belongs to no stratum", k.simplex(c))));
    }
    let n = strata.len();
    let mut leq = vec![vec![false; n]; n];
    for j in 0..n {
        let closure = k.closure_mask(strata[j].cells.iter().copied());
        let mut hits = vec![0usize; n];
        for (c, &inside) in closure.iter().enumerate() {
            if inside {
                hits[owner[c]] += 1;
            }
        }
        for i in 0..n {
            leq[i][j] = hits[i] == strata[i].cells.len();
        }
    }
    for (i, row) in leq.iter().enumerate() {
        if let Some(j) = (i + 1..n).find(|&j| row[j] && leq[j][i]) {
            return Err(StrataError::NotAntisymmetric(i, j));
        }
    }
    let hasse = covers(&leq, &(0..n).collect::<Vec<_>>());
    Ok(StrataPoset { strata, leq, hasse })
}

/// Cover relations of the order restricted to `members`.
fn covers(leq: &[Vec<bool>], members: &[usize]) -> Vec<(usize, usize)> {
    let lt = |a: usize, b: usize| a != b && leq[a][b];
    let mut out = Vec::new();
    for &i in members {
        for &j in members {
            if lt(i, j) && !members.iter().any(|&m| lt(i, m) && lt(m, j)) {
                out.push((i, j));
            }
        }
    }
    out.sort_unstable();
    out
}

impl StrataPoset {
    pub fn len(&self) -> usize {
        self.strata.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strata.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    /// Reflexive, transitive and antisymmetric.
    pub fn is_partial_order(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| self.leq[i][i])
            && (0..n).all(|i| (0..n).all(|j| i == j || !(self.leq[i][j] && self.leq[j][i])))
            && (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(self.leq[i][j] && self.leq[j][k]) || self.leq[i][k])))
    }

    /// Strata with nothing strictly below them.
    pub fn minimal_strata(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !(0..self.len()).any(|j| self.lt(j, i))).collect()
    }

    /// Maximal chains, each listed from its minimal element upward, of the
    /// whole poset or of its singular strata only.
    pub fn complete_chains(&self, singular_only: bool) -> Vec<Vec<usize>> {
        let members: Vec<usize> = (0..self.len())
            .filter(|&i| !singular_only || self.strata[i].is_singular())
            .collect();
        let cover = covers(&self.leq, &members);
        let mut chains = Vec::new();
        for &m in &members {
            if members.iter().any(|&x| self.lt(x, m)) {
                continue;
            }
            let mut stack = vec![vec![m]];
            while let Some(chain) = stack.pop() {
                let last = *chain.last().expect("non-empty chain");
                let ups: Vec<usize> = cover.iter().filter(|&&(a, _)| a == last).map(|&(_, b)| b).collect();
                if ups.is_empty() {
                    chains.push(chain);
                } else {
                    for u in ups.into_iter().rev() {
                        let mut next = chain.clone();
                        next.push(u);
                        stack.push(next);
                    }
                }
            }
        }
        chains.sort();
        chains
    }

    /// Strata meeting closure(S) \ S.
    pub fn closure_decomposition(&self, o: &OrbifoldComplex, s: usize) -> Vec<usize> {
        let k = o.complex();
        let closure = k.closure_mask(self.strata[s].cells.iter().copied());
        let mut out: Vec<usize> = Vec::new();
        for (i, t) in self.strata.iter().enumerate() {
            if i != s && t.cells.iter().any(|&c| closure[c]) {
                out.push(i);
            }
        }
        out
    }
}

/// closure(S) = S as cell sets.
pub fn is_closed(o: &OrbifoldComplex, s: &Stratum) -> bool {
    let closure = o.complex().closure_mask(s.cells.iter().copied());
    closure.iter().filter(|&&b| b).count() == s.cells.len()
}

/// Combinatorial manifold test for a closed stratum of dimension at most 2:
/// pure, every codimension-one cell in one or two top cells, and every vertex
/// link in a surface a single path or circle. `None` above dimension 2.
pub fn stratum_is_manifold(o: &OrbifoldComplex, s: &Stratum) -> Option<bool> {
    if s.dim > 2 {
        return None;
    }
    if !is_closed(o, s) {
        return Some(false);
    }
    let k = o.complex();
    let mask = k.closure_mask(s.cells.iter().copied());
    let (sub, _) = k.subcomplex(&mask);
    Some(is_low_dim_manifold(&sub))
}

fn is_low_dim_manifold(k: &SimplicialComplex) -> bool {
    let Some(n) = k.dim() else {
        return true;
    };
    if k.boundary_facets().is_err() {
        return false;
    }
    if n < 2 {
        return true;
    }
    // Link of a vertex in a surface: edges opposite to it in its triangles.
    for v in k.cells_of_dim(0) {
        let vi = k.cell_indices(v)[0];
        let mut link_edges: Vec<[u32; 2]> = Vec::new();
        for e in k.cofacets(v) {
            for &t in k.cofacets(*e) {
                let opp: Vec<u32> = k.cell_indices(t).iter().copied().filter(|&x| x != vi).collect();
                let edge = [opp[0], opp[1]];
                if !link_edges.contains(&edge) {
                    link_edges.push(edge);
                }
            }
        }
        if !is_path_or_circle(&link_edges) {
            return false;
        }
    }
    true
}

fn is_path_or_circle(edges: &[[u32; 2]]) -> bool {
    if edges.is_empty() {
        return false;
    }
    let mut verts: Vec<u32> = edges.iter().flat_map(|e| e.iter().copied()).collect();
    verts.sort_unstable();
    verts.dedup();
    let degree = |v: u32| edges.iter().filter(|e| e.contains(&v)).count();
    if verts.iter().any(|&v| degree(v) > 2) {
        return false;
    }
    let cells: Vec<Vec<String>> = edges.iter().map(|e| vec![e[0].to_string(), e[1].to_string()]).collect();
    let graph = SimplicialComplex::new(cells).expect("edges have distinct ends");
    let all: Vec<CellId> = (0..graph.len()).collect();
    graph.connected_components(&all).len() == 1
}

/// Minimal strata, in order of id.
pub fn minimal_strata(p: &StrataPoset) -> Vec<usize> {
    p.minimal_strata()
}

/// A piece of a decomposition together with the map from its cell ids to
/// the cell ids of the decomposed orbifold.
#[derive(Debug, Clone)]
pub struct Piece {
    pub orbifold: OrbifoldComplex,
    pub cell_map: Vec<CellId>,
}

impl Piece {
    fn mask(&self, len: usize) -> Vec<bool> {
        let mut m = vec![false; len];
        for &c in &self.cell_map {
            m[c] = true;
        }
        m
    }

    /// The orbifold boundary of the piece, as a mask on the parent.
    fn boundary_mask(&self, len: usize) -> Vec<bool> {
        let local = self.orbifold.boundary_mask();
        let mut m = vec![false; len];
        for (i, &inside) in local.iter().enumerate() {
            if inside {
                m[self.cell_map[i]] = true;
            }
        }
        m
    }
}

/// Two closed sub-orbifolds O₁ ⊇ S and O₂ with O₁ ∪ O₂ = O, meeting in the
/// frontier of the closed star of S.
#[derive(Debug, Clone)]
pub struct NeatDecomposition {
    /// The orbifold that was decomposed (already subdivided when produced
    /// by [`extract_neat_decomposition`]).
    pub whole: OrbifoldComplex,
    /// Cells of the extracted stratum, in `whole`.
    pub stratum: Vec<CellId>,
    pub first: Piece,
    pub second: Piece,
    pub intersection: Piece,
}

/// Set-level identities of a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecompositionChecks {
    /// O₁ ∪ O₂ = O and neither piece contains the other.
    pub is_decomposition: bool,
    /// O₁ ∩ O₂ = ∂O₁ ∩ ∂O₂.
    pub meets_along_boundaries: bool,
    /// ∂Oᵢ = (Oᵢ ∩ ∂O) ∪ (O₁ ∩ O₂) for i = 1, 2.
    pub pieces_boundary: bool,
    /// ∂O = (∂O ∩ O₁) ∪ (∂O ∩ O₂).
    pub whole_boundary: bool,
    /// ∂(O₁ ∩ O₂) = O₁ ∩ O₂ ∩ ∂O, i.e. the intersection is neat.
    pub intersection_neat: bool,
    /// S ⊆ O₁ and S ∩ O₂ = ∅.
    pub separates_stratum: bool,
}

impl DecompositionChecks {
    pub fn all(&self) -> bool {
        self.is_decomposition
            && self.meets_along_boundaries
            && self.pieces_boundary
            && self.whole_boundary
            && self.intersection_neat
            && self.separates_stratum
    }

    /// The three boundary-decomposition identities.
    pub fn boundary_identities(&self) -> [bool; 3] {
        [self.pieces_boundary, self.whole_boundary, self.intersection_neat]
    }
}

impl NeatDecomposition {
    pub fn checks(&self) -> DecompositionChecks {
        let len = self.whole.complex().len();
        let a = self.first.mask(len);
        let b = self.second.mask(len);
        let i = self.intersection.mask(len);
        let da = self.first.boundary_mask(len);
        let db = self.second.boundary_mask(len);
        let di = self.intersection.boundary_mask(len);
        let d = self.whole.boundary_mask();
        let all = |f: &dyn Fn(usize) -> bool| (0..len).all(f);

        let covers = all(&|c| a[c] || b[c]);
        let proper = (0..len).any(|c| a[c] && !b[c]) && (0..len).any(|c| b[c] && !a[c]);
        let intersection_ok = all(&|c| i[c] == (a[c] && b[c]));
        DecompositionChecks {
            is_decomposition: covers && proper && intersection_ok,
            meets_along_boundaries: all(&|c| (a[c] && b[c]) == (da[c] && db[c])),
            pieces_boundary: all(&|c| da[c] == ((a[c] && d[c]) || i[c]) && db[c] == ((b[c] && d[c]) || i[c])),
            whole_boundary: all(&|c| d[c] == ((d[c] && a[c]) || (d[c] && b[c]))),
            intersection_neat: all(&|c| di[c] == (i[c] && d[c])),
            separates_stratum: self.stratum.iter().all(|&c| a[c] && !b[c]),
        }
    }
}

/// Decomposes `o` along the closed star of the given cells, without further
/// subdivision: O₁ is the closure of the top cells meeting a vertex of the
/// stratum, O₂ the closure of the others.
pub(crate) fn decompose_along(o: &OrbifoldComplex, stratum: &[CellId]) -> Result<NeatDecomposition, StrataError> {
    let k = o.complex();
    let n = k
        .dim()
        .ok_or_else(|| StrataError::NotADecomposition("empty orbifold".into()))?;
    let mut near = vec![false; k.vertices().len()];
    for &c in stratum {
        for &v in k.cell_indices(c) {
            near[v as usize] = true;
        }
    }
    let (star, rest): (Vec<CellId>, Vec<CellId>) = k
        .cells_of_dim(n)
        .partition(|&t| k.cell_indices(t).iter().any(|&v| near[v as usize]));
    if rest.is_empty() {
        return Err(StrataError::NotADecomposition("the star covers every top cell".into()));
    }
    let a = k.closure_mask(star);
    let b = k.closure_mask(rest);
    let i: Vec<bool> = a.iter().zip(&b).map(|(&x, &y)| x && y).collect();
    let piece = |mask: &[bool]| -> Result<Piece, StrataError> {
        let (orbifold, cell_map) = o.restrict_mask(mask)?;
        Ok(Piece { orbifold, cell_map })
    };
    Ok(NeatDecomposition {
        whole: o.clone(),
        stratum: stratum.to_vec(),
        first: piece(&a)?,
        second: piece(&b)?,
        intersection: piece(&i)?,
    })
}

/// Subdivides twice, then splits off the closed star of a minimal singular
/// stratum (an id from `stratify(o)`).
pub fn extract_neat_decomposition(o: &OrbifoldComplex, stratum: usize) -> Result<NeatDecomposition, StrataError> {
    let strata = stratify(o)?;
    let poset = strata_poset(o, strata)?;
    if stratum >= poset.len() {
        return Err(StrataError::NotMinimal(stratum));
    }
    if !poset.strata[stratum].is_singular() {
        return Err(StrataError::SingularOnly(stratum));
    }
    if !poset.minimal_strata().contains(&stratum) {
        return Err(StrataError::NotMinimal(stratum));
    }
    let (once, first_carrier) = o.subdivide_with_carrier();
    let (fine, second_carrier) = once.subdivide_with_carrier();
    let mut inside = vec![false; o.complex().len()];
    for &c in &poset.strata[stratum].cells {
        inside[c] = true;
    }
    let cells: Vec<CellId> = (0..fine.complex().len())
        .filter(|&c| inside[first_carrier[second_carrier[c]]])
        .collect();
    decompose_along(&fine, &cells)
}

/// Whether the pure subcomplex spanned by `cells` satisfies ∂K = K ∩ ∂O,
/// where ∂K is the boundary of K as a sub-orbifold. The empty subcomplex is
/// neat.
pub fn is_neat(o: &OrbifoldComplex, cells: &[CellId]) -> Result<bool, StrataError> {
    let k = o.complex();
    if let Some(&bad) = cells.iter().find(|&&c| c >= k.len()) {
        return Err(StrataError::NotSubcomplex(format!("cell id {bad} out of range")));
    }
    if cells.is_empty() {
        return Ok(true);
    }
    let mask = k.closure_mask(cells.iter().copied());
    let (sub, _) = k.subcomplex(&mask);
    if !sub.is_pure() || sub.boundary_facets().is_err() {
        return Err(StrataError::NotSubcomplex("the spanned subcomplex is not a pure pseudomanifold".into()));
    }
    let (piece, map) = o.restrict_mask(&mask)?;
    let piece = Piece { orbifold: piece, cell_map: map };
    let db = piece.boundary_mask(k.len());
    let d = o.boundary_mask();
    Ok((0..k.len()).all(|c| db[c] == (mask[c] && d[c])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Simplex;
    use crate::rational::Rational;

    fn s(v: &[&str]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    fn teardrop(n: u64) -> OrbifoldComplex {
        let k = SimplicialComplex::new([
            ["N", "a", "b"],
            ["N", "b", "c"],
            ["N", "a", "c"],
            ["S", "a", "b"],
            ["S", "b", "c"],
            ["S", "a", "c"],
        ])
        .unwrap();
        OrbifoldComplex::new(k, [(s(&["N"]), LocalGroupLabel::cyclic(n).unwrap())], []).unwrap()
    }

    #[test]
    fn teardrop_strata() {
        let t = teardrop(3);
        let strata = stratify(&t).unwrap();
        assert_eq!(strata.len(), 2);
        let p = strata_poset(&t, strata).unwrap();
        assert!(p.is_partial_order());
        let cone = p.strata.iter().position(|s| s.is_singular()).unwrap();
        let regular = 1 - cone;
        assert!(p.lt(cone, regular));
        assert_eq!(p.hasse, vec![(cone, regular)]);
        assert_eq!(p.minimal_strata(), vec![cone]);
        assert_eq!(p.complete_chains(true), vec![vec![cone]]);
        assert_eq!(p.complete_chains(false), vec![vec![cone, regular]]);
        assert_eq!(p.closure_decomposition(&t, regular), vec![cone]);
        assert!(p.closure_decomposition(&t, cone).is_empty());
        assert!(is_closed(&t, &p.strata[cone]));
        assert_eq!(stratum_is_manifold(&t, &p.strata[cone]), Some(true));
    }

    #[test]
    fn manifold_is_one_stratum() {
        let k = SimplicialComplex::new([["a", "b", "c"], ["a", "c", "d"]]).unwrap();
        let m = OrbifoldComplex::manifold(k).unwrap();
        let p = strata_poset(&m, stratify(&m).unwrap()).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.complete_chains(false), vec![vec![0]]);
        assert!(p.complete_chains(true).is_empty());
        assert_eq!(stratum_is_manifold(&m, &p.strata[0]), Some(true));
        assert!(matches!(extract_neat_decomposition(&m, 0), Err(StrataError::SingularOnly(0))));
    }

    #[test]
    fn bad_partition_is_rejected() {
        let t = teardrop(2);
        let mut strata = stratify(&t).unwrap();
        let stolen = strata[0].cells[0];
        strata[1].cells.push(stolen);
        assert!(matches!(strata_poset(&t, strata), Err(StrataError::NotAPartition(_))));
    }

    #[test]
    fn teardrop_cone_point_decomposition() {
        let t = teardrop(5);
        let cone = stratify(&t).unwrap().iter().position(|s| s.is_singular()).unwrap();
        let d = extract_neat_decomposition(&t, cone).unwrap();
        let c = d.checks();
        assert!(c.all(), "{c:?}");
        let chi = |p: &Piece| p.orbifold.euler_char().unwrap();
        // Cone disk, plain disk, circle.
        assert_eq!(chi(&d.first), Rational::new(1, 5));
        assert_eq!(chi(&d.second), Rational::ONE);
        assert_eq!(chi(&d.intersection), Rational::ZERO);
        assert_eq!(chi(&d.first) + chi(&d.second) - chi(&d.intersection), t.euler_char().unwrap());
    }

    #[test]
    fn neat_arcs_in_a_disk() {
        let k = SimplicialComplex::new([["a", "b", "m"], ["b", "c", "m"], ["c", "d", "m"], ["d", "a", "m"]]).unwrap();
        let disk = OrbifoldComplex::manifold(k.clone()).unwrap();
        let id = |v: &[&str]| disk.complex().find(&s(v)).unwrap();
        assert!(is_neat(&disk, &[id(&["a", "m"]), id(&["m", "c"])]).unwrap());
        assert!(!is_neat(&disk, &[id(&["a", "m"])]).unwrap());
        let mirrored = crate::orbifold::mirror(&k).unwrap();
        assert!(is_neat(&mirrored, &[id(&["a", "m"]), id(&["m", "c"])]).unwrap());
        assert!(!is_neat(&mirrored, &[id(&["a", "m"])]).unwrap());
        assert!(is_neat(&teardrop(2), &[]).unwrap());
    }
}
