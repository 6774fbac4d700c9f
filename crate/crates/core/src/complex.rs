//! Finite abstract simplicial complexes.
//!
//! A [`SimplicialComplex`] is stored in indexed form: vertices are kept in a
//! sorted table and every cell is a sorted list of vertex indices. Cells are
//! ordered by dimension and then lexicographically by vertex name, so a
//! [`CellId`] is stable for a given complex and iteration order is
//! deterministic.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use rustc_hash::{FxHashMap, FxHashSet};
use thiserror::Error;

/// Position of a cell inside its complex.
pub type CellId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("cell {0} repeats a vertex")]
    DuplicateVertexInCell(String),
    #[error("empty vertex list given as a cell")]
    EmptyCell,
    #[error("not a pseudomanifold: {0}")]
    NotPseudomanifold(String),
    #[error("cell {0} is not in the complex")]
    CellNotFound(String),
}

/// Opaque, totally ordered vertex token.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(Arc<str>);

impl VertexId {
    pub fn new(name: impl AsRef<str>) -> Self {
        VertexId(Arc::from(name.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId::new(s)
    }
}

impl From<String> for VertexId {
    fn from(s: String) -> Self {
        VertexId(Arc::from(s))
    }
}

impl From<&String> for VertexId {
    fn from(s: &String) -> Self {
        VertexId::new(s)
    }
}

impl From<&VertexId> for VertexId {
    fn from(v: &VertexId) -> Self {
        v.clone()
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

/// A non-empty, sorted, duplicate-free list of vertices.
///
/// Simplices order by dimension first and then lexicographically, matching
/// the cell order of [`SimplicialComplex`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Simplex {
    vertices: Vec<VertexId>,
}

impl Simplex {
    pub fn new<I, V>(vertices: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let mut vertices: Vec<VertexId> = vertices.into_iter().map(Into::into).collect();
        if vertices.is_empty() {
            return Err(ComplexError::EmptyCell);
        }
        vertices.sort();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(ComplexError::DuplicateVertexInCell(format_vertex_list(&vertices)));
        }
        Ok(Simplex { vertices })
    }

    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// True when every vertex of `self` is a vertex of `other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        let mut it = other.vertices.iter();
        self.vertices.iter().all(|v| it.any(|w| w == v))
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vertices
            .len()
            .cmp(&other.vertices.len())
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn format_vertex_list(vertices: &[VertexId]) -> String {
    let mut s = String::from("[");
    for (i, v) in vertices.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(v.as_str());
    }
    s.push(']');
    s
}

/// Canonical encoding `[v0,v1,...]`; also used to name the barycenter vertex
/// of this cell in a subdivision.
impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_vertex_list(&self.vertices))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite abstract simplicial complex, closed under taking faces.
#[derive(Clone)]
pub struct SimplicialComplex {
    vertices: Vec<VertexId>,
    cells: Vec<Box<[u32]>>,
    index: FxHashMap<Box<[u32]>, CellId>,
    /// `dim_offsets[d]..dim_offsets[d + 1]` are the cells of dimension `d`.
    dim_offsets: Vec<usize>,
    facets: Vec<Vec<CellId>>,
    cofacets: Vec<Vec<CellId>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.cells == other.cells
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("dim", &self.dim())
            .field("f_vector", &self.f_vector())
            .finish()
    }
}

/// Barycentric subdivision together with the carrier of every new cell.
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    /// `carrier[new_cell]` is the old cell whose interior contains the
    /// interior of `new_cell` (the largest element of its flag).
    pub carrier: Vec<CellId>,
    /// `barycenter[old_cell]` is the new vertex index standing for that cell.
    pub barycenter: Vec<u32>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::from_index_cells(Vec::new(), Vec::new())
    }

    /// Face closure of the given maximal cells.
    pub fn new<I, C, V>(maximal_cells: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = C>,
        C: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let cells: Vec<Simplex> = maximal_cells
            .into_iter()
            .map(Simplex::new)
            .collect::<Result<_, _>>()?;
        Ok(Self::from_simplices(&cells))
    }

    pub fn from_simplices(cells: &[Simplex]) -> Self {
        let names: BTreeSet<&VertexId> = cells.iter().flat_map(|c| c.vertices.iter()).collect();
        let vertices: Vec<VertexId> = names.into_iter().cloned().collect();
        let lookup: FxHashMap<&VertexId, u32> =
            vertices.iter().enumerate().map(|(i, v)| (v, i as u32)).collect();
        let mut closed: FxHashSet<Box<[u32]>> = FxHashSet::default();
        for cell in cells {
            let idx: Vec<u32> = cell.vertices.iter().map(|v| lookup[v]).collect();
            insert_all_faces(&idx, &mut closed);
        }
        Self::from_index_cells(vertices, closed.into_iter().collect())
    }

    /// Builds a complex from a face-closed set of index cells over a sorted
    /// vertex table. Every vertex in the table must occur in some cell.
    pub(crate) fn from_index_cells(vertices: Vec<VertexId>, mut cells: Vec<Box<[u32]>>) -> Self {
        cells.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let max_len = cells.last().map_or(0, |c| c.len());
        let mut dim_offsets = vec![0usize; max_len + 1];
        for (d, slot) in dim_offsets.iter_mut().enumerate().skip(1) {
            *slot = cells.partition_point(|c| c.len() <= d);
        }
        let index: FxHashMap<Box<[u32]>, CellId> =
            cells.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        let mut facets = vec![Vec::new(); cells.len()];
        let mut cofacets = vec![Vec::new(); cells.len()];
        let mut buf = Vec::with_capacity(max_len);
        for (id, cell) in cells.iter().enumerate() {
            if cell.len() < 2 {
                continue;
            }
            for skip in 0..cell.len() {
                buf.clear();
                buf.extend(cell.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
                let f = *index
                    .get(buf.as_slice())
                    .expect("cell set passed to from_index_cells must be face-closed");
                facets[id].push(f);
                cofacets[f].push(id);
            }
        }
        for c in &mut cofacets {
            c.sort_unstable();
        }
        for f in &mut facets {
            f.sort_unstable();
        }
        SimplicialComplex {
            vertices,
            cells,
            index,
            dim_offsets,
            facets,
            cofacets,
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Maximum cell dimension, `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.cells.last().map(|c| c.len() - 1)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_name(&self, index: u32) -> &VertexId {
        &self.vertices[index as usize]
    }

    pub fn vertex_index(&self, v: &VertexId) -> Option<u32> {
        self.vertices.binary_search(v).ok().map(|i| i as u32)
    }

    /// Number of cells in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.dim_offsets.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn cells_of_dim(&self, d: usize) -> Range<CellId> {
        if d + 1 >= self.dim_offsets.len() {
            return self.cells.len()..self.cells.len();
        }
        self.dim_offsets[d]..self.dim_offsets[d + 1]
    }

    pub fn cell_dim(&self, id: CellId) -> usize {
        self.cells[id].len() - 1
    }

    pub fn cell_indices(&self, id: CellId) -> &[u32] {
        &self.cells[id]
    }

    pub fn simplex(&self, id: CellId) -> Simplex {
        Simplex::from_sorted(self.cells[id].iter().map(|&v| self.vertices[v as usize].clone()).collect())
    }

    pub fn simplices(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.len()).map(|id| self.simplex(id))
    }

    pub fn find(&self, s: &Simplex) -> Option<CellId> {
        let idx: Option<Vec<u32>> = s.vertices.iter().map(|v| self.vertex_index(v)).collect();
        self.find_indices(&idx?)
    }

    pub fn find_indices(&self, sorted: &[u32]) -> Option<CellId> {
        self.index.get(sorted).copied()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.find(s).is_some()
    }

    /// Codimension-one faces.
    pub fn facets(&self, id: CellId) -> &[CellId] {
        &self.facets[id]
    }

    /// Cells having `id` as a codimension-one face.
    pub fn cofacets(&self, id: CellId) -> &[CellId] {
        &self.cofacets[id]
    }

    /// All faces of `id` other than `id` itself.
    pub fn proper_faces(&self, id: CellId) -> Vec<CellId> {
        let cell = &self.cells[id];
        let k = cell.len();
        let mut out = Vec::with_capacity((1usize << k) - 2);
        let mut buf = Vec::with_capacity(k);
        for mask in 1..(1u32 << k) - 1 {
            buf.clear();
            buf.extend((0..k).filter(|i| mask & (1 << i) != 0).map(|i| cell[i]));
            out.push(self.index[buf.as_slice()]);
        }
        out
    }

    /// Cells with no cofaces.
    pub fn maximal_cells(&self) -> Vec<CellId> {
        (0..self.len()).filter(|&id| self.cofacets[id].is_empty()).collect()
    }

    /// Every cell is a face of some cell of top dimension.
    pub fn is_pure(&self) -> bool {
        match self.dim() {
            None => true,
            Some(n) => self.maximal_cells().into_iter().all(|id| self.cell_dim(id) == n),
        }
    }

    /// Marks every face of the marked cells.
    pub fn close_downward(&self, mask: &mut [bool]) {
        for id in (0..self.len()).rev() {
            if mask[id] {
                for &f in &self.facets[id] {
                    mask[f] = true;
                }
            }
        }
    }

    /// Face closure of a set of cells, as a mask over cell ids.
    pub fn closure_mask(&self, cells: impl IntoIterator<Item = CellId>) -> Vec<bool> {
        let mut mask = vec![false; self.len()];
        for id in cells {
            mask[id] = true;
        }
        self.close_downward(&mut mask);
        mask
    }

    /// The subcomplex on the cells marked in a face-closed mask, together
    /// with the map from its cell ids back to ours.
    pub fn subcomplex(&self, mask: &[bool]) -> (SimplicialComplex, Vec<CellId>) {
        let kept: Vec<CellId> = (0..self.len()).filter(|&i| mask[i]).collect();
        let mut used = vec![u32::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        for &id in &kept {
            if self.cells[id].len() == 1 {
                let v = self.cells[id][0];
                used[v as usize] = vertices.len() as u32;
                vertices.push(self.vertices[v as usize].clone());
            }
        }
        let cells: Vec<Box<[u32]>> = kept
            .iter()
            .map(|&id| self.cells[id].iter().map(|&v| used[v as usize]).collect())
            .collect();
        debug_assert!(cells.iter().all(|c| c.iter().all(|&v| v != u32::MAX)), "mask is not closed");
        let sub = Self::from_index_cells(vertices, cells);
        (sub, kept)
    }

    /// Σ (−1)^dim over all cells.
    pub fn euler_char_top(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// The (n−1)-cells lying in exactly one n-cell, after checking that the
    /// complex is a pure pseudomanifold with boundary.
    pub fn boundary_facets(&self) -> Result<Vec<CellId>, ComplexError> {
        let Some(n) = self.dim() else {
            return Ok(Vec::new());
        };
        if !self.is_pure() {
            return Err(ComplexError::NotPseudomanifold(format!(
                "complex of dimension {n} is not pure"
            )));
        }
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for id in self.cells_of_dim(n - 1) {
            match self.cofacets[id].len() {
                1 => out.push(id),
                2 => {}
                k => {
                    return Err(ComplexError::NotPseudomanifold(format!(
                        "{} lies in {k} top cells",
                        self.simplex(id)
                    )))
                }
            }
        }
        Ok(out)
    }

    /// Face closure of the (n−1)-cells incident to exactly one n-cell.
    pub fn topological_boundary(&self) -> Result<SimplicialComplex, ComplexError> {
        let facets = self.boundary_facets()?;
        let mask = self.closure_mask(facets);
        Ok(self.subcomplex(&mask).0)
    }

    /// Barycentric subdivision: vertices are the cells of `self`, named by
    /// their canonical encoding, and cells are the flags σ₀ ⊊ … ⊊ σₖ.
    pub fn barycentric_subdivision(&self) -> Subdivision {
        let mut order: Vec<CellId> = (0..self.len()).collect();
        let names: Vec<VertexId> = order.iter().map(|&id| VertexId::from(self.simplex(id).to_string())).collect();
        order.sort_by(|&a, &b| names[a].cmp(&names[b]));
        let mut barycenter = vec![0u32; self.len()];
        for (new, &old) in order.iter().enumerate() {
            barycenter[old] = new as u32;
        }
        let vertices: Vec<VertexId> = order.iter().map(|&old| names[old].clone()).collect();

        // flags_ending[σ] lists every flag whose largest element is σ.
        let mut flags_ending: Vec<Vec<Vec<u32>>> = Vec::with_capacity(self.len());
        let mut cells: Vec<Box<[u32]>> = Vec::new();
        let mut carriers: Vec<(Box<[u32]>, CellId)> = Vec::new();
        for (id, &top) in barycenter.iter().enumerate() {
            let mut flags = vec![vec![top]];
            for face in self.proper_faces(id) {
                for flag in &flags_ending[face] {
                    let mut f = flag.clone();
                    f.push(top);
                    flags.push(f);
                }
            }
            for flag in &flags {
                let mut sorted = flag.clone();
                sorted.sort_unstable();
                let boxed: Box<[u32]> = sorted.into_boxed_slice();
                carriers.push((boxed.clone(), id));
                cells.push(boxed);
            }
            flags_ending.push(flags);
        }
        drop(flags_ending);
        let complex = Self::from_index_cells(vertices, cells);
        let mut carrier = vec![0; complex.len()];
        for (cell, old) in carriers {
            carrier[complex.index[&cell]] = old;
        }
        Subdivision {
            complex,
            carrier,
            barycenter,
        }
    }

    /// Partition of `cells` into groups connected by the face relation
    /// (in any codimension) inside the subset.
    pub fn connected_components(&self, cells: &[CellId]) -> Vec<Vec<CellId>> {
        let mut member = vec![false; self.len()];
        for &c in cells {
            member[c] = true;
        }
        self.components_where(cells, |a, b| member[a] && member[b])
    }

    /// Components of `cells` where a cell and one of its proper faces are
    /// linked when `linked(cell, face)` holds. Components are listed by
    /// their smallest cell id, each sorted.
    pub fn components_where(
        &self,
        cells: &[CellId],
        mut linked: impl FnMut(CellId, CellId) -> bool,
    ) -> Vec<Vec<CellId>> {
        let mut dsu = DisjointSets::new(self.len());
        for &c in cells {
            for f in self.proper_faces(c) {
                if linked(c, f) {
                    dsu.union(c, f);
                }
            }
        }
        let mut groups: FxHashMap<usize, Vec<CellId>> = FxHashMap::default();
        let mut sorted = cells.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for c in sorted {
            groups.entry(dsu.find(c)).or_default().push(c);
        }
        let mut out: Vec<Vec<CellId>> = groups.into_values().collect();
        out.sort_by_key(|g| g[0]);
        out
    }
}

fn insert_all_faces(cell: &[u32], out: &mut FxHashSet<Box<[u32]>>) {
    let mut sorted = cell.to_vec();
    sorted.sort_unstable();
    let k = sorted.len();
    if out.contains(sorted.as_slice()) {
        return;
    }
    for mask in 1..(1u64 << k) {
        let face: Box<[u32]> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| sorted[i]).collect();
        out.insert(face);
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(cells: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::new(cells.iter().map(|c| c.iter().copied())).unwrap()
    }

    fn tetra_boundary() -> SimplicialComplex {
        cx(&[&["a", "b", "c"], &["a", "b", "d"], &["a", "c", "d"], &["b", "c", "d"]])
    }

    /// Independent face count: every non-empty subset of every maximal cell,
    /// deduplicated as sorted string vectors.
    fn brute_face_count(cells: &[&[&str]]) -> usize {
        let mut all = BTreeSet::new();
        for c in cells {
            for mask in 1..(1u32 << c.len()) {
                let mut f: Vec<&str> = (0..c.len()).filter(|i| mask & (1 << i) != 0).map(|i| c[i]).collect();
                f.sort();
                all.insert(f);
            }
        }
        all.len()
    }

    #[test]
    fn face_closure_counts() {
        assert_eq!(cx(&[&["a", "b", "c"]]).len(), 7);
        assert_eq!(cx(&[&["a"]]).len(), 1);
        let tb: &[&[&str]] = &[&["a", "b", "c"], &["a", "b", "d"], &["a", "c", "d"], &["b", "c", "d"]];
        assert_eq!(brute_face_count(tb), 14);
        assert_eq!(tetra_boundary().len(), 14);
    }

    #[test]
    fn build_is_idempotent_on_closed_input() {
        let k = tetra_boundary();
        let again = SimplicialComplex::from_simplices(&k.simplices().collect::<Vec<_>>());
        assert_eq!(k, again);
    }

    #[test]
    fn duplicate_vertex_is_rejected() {
        let err = SimplicialComplex::new([["a", "b", "a"]]).unwrap_err();
        assert!(matches!(err, ComplexError::DuplicateVertexInCell(_)));
    }

    #[test]
    fn topological_euler_characteristics() {
        assert_eq!(tetra_boundary().euler_char_top(), 2);
        assert_eq!(cx(&[&["a", "b"], &["b", "c"], &["a", "c"]]).euler_char_top(), 0);
        assert_eq!(cx(&[&["a", "b", "c"]]).euler_char_top(), 1);
        assert_eq!(SimplicialComplex::empty().euler_char_top(), 0);
    }

    #[test]
    fn boundaries() {
        let tri = cx(&[&["a", "b", "c"]]);
        let b = tri.topological_boundary().unwrap();
        assert_eq!(b.f_vector(), vec![3, 3]);
        assert!(tetra_boundary().topological_boundary().unwrap().is_empty());
        let path = cx(&[&["a", "b"], &["b", "c"]]);
        let pb = path.topological_boundary().unwrap();
        let names: Vec<&str> = pb.vertices().iter().map(|v| v.as_str()).collect();
        assert_eq!(names, ["a", "c"]);
        assert_eq!(pb.len(), 2);
        assert!(b.topological_boundary().unwrap().is_empty());
    }

    #[test]
    fn non_pseudomanifolds_are_rejected() {
        let book = cx(&[&["a", "b", "c"], &["a", "b", "d"], &["a", "b", "e"]]);
        assert!(matches!(book.topological_boundary(), Err(ComplexError::NotPseudomanifold(_))));
        let impure = cx(&[&["a", "b", "c"], &["c", "d"]]);
        assert!(matches!(impure.topological_boundary(), Err(ComplexError::NotPseudomanifold(_))));
    }

    #[test]
    fn subdivision_of_edge_and_triangle() {
        let sd = cx(&[&["a", "b"]]).barycentric_subdivision();
        assert_eq!(sd.complex.f_vector(), vec![3, 2]);
        // 7 cells; comparable pairs: 6 vertex<edge, 3 vertex<tri, 3 edge<tri;
        // 3! full flags.
        let sd = cx(&[&["a", "b", "c"]]).barycentric_subdivision();
        assert_eq!(sd.complex.f_vector(), vec![7, 12, 6]);
    }

    #[test]
    fn subdivision_names_and_carriers() {
        let k = cx(&[&["a", "b"]]);
        let sd = k.barycentric_subdivision();
        let names: Vec<&str> = sd.complex.vertices().iter().map(|v| v.as_str()).collect();
        assert_eq!(names, ["[a,b]", "[a]", "[b]"]);
        let mut hit = vec![false; k.len()];
        for (new, &old) in sd.carrier.iter().enumerate() {
            hit[old] = true;
            let carrier = k.simplex(old);
            let flag = sd.complex.simplex(new);
            assert!(flag.vertices().iter().any(|v| v.as_str() == carrier.to_string()));
            for v in flag.vertices() {
                let cell = k.simplices().find(|s| s.to_string() == v.as_str()).unwrap();
                assert!(cell.is_face_of(&carrier));
            }
        }
        assert!(hit.into_iter().all(|h| h));
    }

    #[test]
    fn subdivision_preserves_euler_characteristic() {
        let k = tetra_boundary();
        let sd = k.barycentric_subdivision();
        assert_eq!(sd.complex.euler_char_top(), 2);
        assert_eq!(sd.complex.barycentric_subdivision().complex.euler_char_top(), 2);
    }

    #[test]
    fn components() {
        let two = cx(&[&["a", "b", "c"], &["d", "e", "f"]]);
        let all: Vec<CellId> = (0..two.len()).collect();
        assert_eq!(two.connected_components(&all).len(), 2);
        let one = tetra_boundary();
        let all: Vec<CellId> = (0..one.len()).collect();
        assert_eq!(one.connected_components(&all).len(), 1);
        let circle = cx(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        let verts: Vec<CellId> = circle.cells_of_dim(0).collect();
        assert_eq!(circle.connected_components(&verts).len(), 3);
    }
}
