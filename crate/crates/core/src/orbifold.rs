//! Orbifolds encoded as compatible triangulations with local-group labels.
//!
//! Every open cell of the triangulation carries the local group of its
//! interior points, recorded as a [`LocalGroupLabel`]. The orbifold boundary
//! is given explicitly as a set of codimension-one cells; the remaining cells
//! of the topological boundary of the underlying space are mirror faces.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::complex::{CellId, ComplexError, Simplex, SimplicialComplex, VertexId};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbifoldError {
    #[error("invalid orbifold: {}", format_violations(.0))]
    InvalidOrbifold(Vec<Violation>),
    #[error("cell {0} is not in the complex")]
    CellNotFound(String),
    #[error("not a label-inheriting subcomplex: {0}")]
    NotSubcomplex(String),
    #[error("not a pseudomanifold: {0}")]
    NotPseudomanifold(String),
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

/// Isomorphism type of a local group, as far as it is tracked.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    Trivial,
    Cyclic,
    Dihedral,
    Reflection,
    Named(String),
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Trivial => f.write_str("trivial"),
            GroupKind::Cyclic => f.write_str("cyclic"),
            GroupKind::Dihedral => f.write_str("dihedral"),
            GroupKind::Reflection => f.write_str("reflection"),
            GroupKind::Named(t) => write!(f, "named:{t}"),
        }
    }
}

impl FromStr for GroupKind {
    type Err = OrbifoldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "trivial" => GroupKind::Trivial,
            "cyclic" => GroupKind::Cyclic,
            "dihedral" => GroupKind::Dihedral,
            "reflection" => GroupKind::Reflection,
            _ => match s.strip_prefix("named:") {
                Some(t) if !t.is_empty() => GroupKind::Named(t.to_string()),
                _ => return Err(OrbifoldError::InvalidLabel(format!("unknown group kind {s:?}"))),
            },
        })
    }
}

/// The local group Γ of the points of an open cell: its order, its kind and,
/// for quotient-built orbifolds, a generating set of group-element tokens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalGroupLabel {
    order: u64,
    kind: GroupKind,
    generators: Option<Arc<[String]>>,
}

impl LocalGroupLabel {
    /// Checks that the kind is trivial exactly when the order is one.
    pub fn new(order: u64, kind: GroupKind) -> Result<Self, OrbifoldError> {
        let ok = match kind {
            GroupKind::Trivial => order == 1,
            _ => order >= 2,
        };
        if !ok {
            return Err(OrbifoldError::InvalidLabel(format!("order {order} with kind {kind}")));
        }
        Ok(LocalGroupLabel {
            order,
            kind,
            generators: None,
        })
    }

    pub fn trivial() -> Self {
        LocalGroupLabel {
            order: 1,
            kind: GroupKind::Trivial,
            generators: None,
        }
    }

    pub fn cyclic(order: u64) -> Result<Self, OrbifoldError> {
        Self::new(order, GroupKind::Cyclic)
    }

    /// Dihedral group of the given order (2m for the corner of order m).
    pub fn dihedral(order: u64) -> Result<Self, OrbifoldError> {
        Self::new(order, GroupKind::Dihedral)
    }

    pub fn reflection() -> Self {
        LocalGroupLabel {
            order: 2,
            kind: GroupKind::Reflection,
            generators: None,
        }
    }

    pub fn with_generators(mut self, generators: Vec<String>) -> Self {
        self.generators = Some(generators.into());
        self
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn generators(&self) -> Option<&[String]> {
        self.generators.as_deref()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Equal order and kind; generator tokens are ignored.
    pub fn same_type(&self, other: &LocalGroupLabel) -> bool {
        self.order == other.order && self.kind == other.kind
    }
}

impl fmt::Display for LocalGroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.order, self.kind)
    }
}

/// A broken orbifold invariant, naming the offending cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotPseudomanifold { detail: String },
    /// A top-dimensional cell carries a non-trivial group.
    NonEffective { cell: Simplex },
    /// The order on a cell does not divide the order on one of its faces.
    DivisibilityViolation {
        face: Simplex,
        face_order: u64,
        coface: Simplex,
        coface_order: u64,
    },
    BoundaryFaceNotOnBoundary { cell: Simplex },
    /// A cell of the topological boundary that is neither declared orbifold
    /// boundary nor labeled as a mirror.
    UnmarkedMirror { cell: Simplex },
}

impl Violation {
    pub fn rule(&self) -> &'static str {
        match self {
            Violation::NotPseudomanifold { .. } => "NotPseudomanifold",
            Violation::NonEffective { .. } => "NonEffective",
            Violation::DivisibilityViolation { .. } => "DivisibilityViolation",
            Violation::BoundaryFaceNotOnBoundary { .. } => "BoundaryFaceNotOnBoundary",
            Violation::UnmarkedMirror { .. } => "UnmarkedMirror",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotPseudomanifold { detail } => write!(f, "NotPseudomanifold: {detail}"),
            Violation::NonEffective { cell } => {
                write!(f, "NonEffective: top cell {cell} has a non-trivial label")
            }
            Violation::DivisibilityViolation {
                face,
                face_order,
                coface,
                coface_order,
            } => write!(
                f,
                "DivisibilityViolation: order {coface_order} on {coface} does not divide order {face_order} on its face {face}"
            ),
            Violation::BoundaryFaceNotOnBoundary { cell } => write!(
                f,
                "BoundaryFaceNotOnBoundary: {cell} is declared boundary but is not on the topological boundary"
            ),
            Violation::UnmarkedMirror { cell } => write!(
                f,
                "UnmarkedMirror: {cell} is on the topological boundary, not declared boundary, and has trivial label"
            ),
        }
    }
}

/// A compatible triangulation of a compact orbifold.
#[derive(Clone)]
pub struct OrbifoldComplex {
    complex: SimplicialComplex,
    labels: Vec<LocalGroupLabel>,
    boundary_faces: Vec<CellId>,
}

impl fmt::Debug for OrbifoldComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrbifoldComplex")
            .field("dim", &self.dim())
            .field("f_vector", &self.complex.f_vector())
            .field("singular_cells", &self.labels.iter().filter(|l| !l.is_trivial()).count())
            .field("boundary_faces", &self.boundary_faces.len())
            .finish()
    }
}

impl OrbifoldComplex {
    /// Unlisted cells get the trivial label.
    pub fn new<L, B>(complex: SimplicialComplex, labels: L, boundary_faces: B) -> Result<Self, OrbifoldError>
    where
        L: IntoIterator<Item = (Simplex, LocalGroupLabel)>,
        B: IntoIterator<Item = Simplex>,
    {
        let mut label_vec = vec![LocalGroupLabel::trivial(); complex.len()];
        for (cell, label) in labels {
            let id = complex
                .find(&cell)
                .ok_or_else(|| OrbifoldError::CellNotFound(cell.to_string()))?;
            label_vec[id] = label;
        }
        let mut bf = Vec::new();
        for cell in boundary_faces {
            bf.push(
                complex
                    .find(&cell)
                    .ok_or_else(|| OrbifoldError::CellNotFound(cell.to_string()))?,
            );
        }
        Ok(Self::from_parts(complex, label_vec, bf))
    }

    pub(crate) fn from_parts(complex: SimplicialComplex, labels: Vec<LocalGroupLabel>, mut boundary_faces: Vec<CellId>) -> Self {
        debug_assert_eq!(labels.len(), complex.len());
        boundary_faces.sort_unstable();
        boundary_faces.dedup();
        OrbifoldComplex {
            complex,
            labels,
            boundary_faces,
        }
    }

    pub fn empty() -> Self {
        Self::from_parts(SimplicialComplex::empty(), Vec::new(), Vec::new())
    }

    /// A manifold: every label trivial and the whole topological boundary
    /// declared as orbifold boundary.
    pub fn manifold(complex: SimplicialComplex) -> Result<Self, OrbifoldError> {
        let boundary = complex.boundary_facets()?;
        let labels = vec![LocalGroupLabel::trivial(); complex.len()];
        Ok(Self::from_parts(complex, labels, boundary))
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn dim(&self) -> Option<usize> {
        self.complex.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.complex.is_empty()
    }

    pub fn label(&self, id: CellId) -> &LocalGroupLabel {
        &self.labels[id]
    }

    pub fn labels(&self) -> &[LocalGroupLabel] {
        &self.labels
    }

    pub fn label_of(&self, cell: &Simplex) -> Option<&LocalGroupLabel> {
        self.complex.find(cell).map(|id| &self.labels[id])
    }

    /// Declared orbifold-boundary faces, as sorted cell ids.
    pub fn boundary_faces(&self) -> &[CellId] {
        &self.boundary_faces
    }

    pub fn has_boundary(&self) -> bool {
        !self.boundary_faces.is_empty()
    }

    /// Face closure of the declared boundary faces, as a mask.
    pub fn boundary_mask(&self) -> Vec<bool> {
        self.complex.closure_mask(self.boundary_faces.iter().copied())
    }

    /// Topological-boundary cells of codimension one that are not declared
    /// orbifold boundary.
    pub fn mirror_faces(&self) -> Result<Vec<CellId>, OrbifoldError> {
        let top = self.complex.boundary_facets()?;
        Ok(top
            .into_iter()
            .filter(|id| self.boundary_faces.binary_search(id).is_err())
            .collect())
    }

    /// True when every label is trivial.
    pub fn is_manifold(&self) -> bool {
        self.labels.iter().all(LocalGroupLabel::is_trivial)
    }

    /// Cells with non-trivial labels: the singular locus.
    pub fn singular_cells(&self) -> Vec<CellId> {
        (0..self.labels.len()).filter(|&i| !self.labels[i].is_trivial()).collect()
    }

    /// Empty exactly when every orbifold invariant holds.
    pub fn validate(&self) -> Vec<Violation> {
        let k = &self.complex;
        let mut out = Vec::new();
        let Some(n) = k.dim() else {
            return out;
        };
        let top_boundary = match k.boundary_facets() {
            Ok(b) => Some(b),
            Err(e) => {
                out.push(Violation::NotPseudomanifold { detail: e.to_string() });
                None
            }
        };
        for id in k.cells_of_dim(n) {
            if !self.labels[id].is_trivial() {
                out.push(Violation::NonEffective { cell: k.simplex(id) });
            }
        }
        for id in 0..k.len() {
            let co = self.labels[id].order;
            for &f in k.facets(id) {
                let fo = self.labels[f].order;
                if !fo.is_multiple_of(co) {
                    out.push(Violation::DivisibilityViolation {
                        face: k.simplex(f),
                        face_order: fo,
                        coface: k.simplex(id),
                        coface_order: co,
                    });
                }
            }
        }
        if let Some(top_boundary) = top_boundary {
            for &b in &self.boundary_faces {
                if top_boundary.binary_search(&b).is_err() {
                    out.push(Violation::BoundaryFaceNotOnBoundary { cell: k.simplex(b) });
                }
            }
            for id in top_boundary {
                if self.boundary_faces.binary_search(&id).is_err() && self.labels[id].order < 2 {
                    out.push(Violation::UnmarkedMirror { cell: k.simplex(id) });
                }
            }
        }
        out
    }

    pub fn ensure_valid(&self) -> Result<(), OrbifoldError> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(OrbifoldError::InvalidOrbifold(v))
        }
    }

    /// Σ (−1)^dim τ / |Γ_τ| over every cell, without validation.
    pub fn cell_sum(&self) -> Rational {
        self.chi_of_cells(0..self.complex.len())
    }

    /// The same sum restricted to the given cells.
    pub fn chi_of_cells(&self, cells: impl IntoIterator<Item = CellId>) -> Rational {
        // Accumulate per order to keep the arithmetic integral until the end.
        let mut by_order: FxHashMap<u64, i64> = FxHashMap::default();
        for id in cells {
            let sign = if self.complex.cell_dim(id).is_multiple_of(2) { 1 } else { -1 };
            *by_order.entry(self.labels[id].order).or_default() += sign;
        }
        by_order
            .into_iter()
            .map(|(order, count)| Rational::new(count, order as i64))
            .sum()
    }

    /// Orbifold Euler characteristic Σ_τ (−1)^dim τ / n_τ.
    pub fn euler_char(&self) -> Result<Rational, OrbifoldError> {
        self.ensure_valid()?;
        Ok(self.cell_sum())
    }

    /// The closed (n−1)-orbifold spanned by the declared boundary faces, with
    /// inherited labels.
    pub fn orbifold_boundary(&self) -> Result<OrbifoldComplex, OrbifoldError> {
        self.ensure_valid()?;
        Ok(self.boundary_unchecked())
    }

    pub(crate) fn boundary_unchecked(&self) -> OrbifoldComplex {
        let mask = self.boundary_mask();
        let (sub, map) = self.complex.subcomplex(&mask);
        let labels = map.iter().map(|&old| self.labels[old].clone()).collect();
        OrbifoldComplex::from_parts(sub, labels, Vec::new())
    }

    /// Barycentric subdivision; each new cell inherits the label of the old
    /// cell containing its interior.
    pub fn subdivide(&self) -> Result<OrbifoldComplex, OrbifoldError> {
        self.ensure_valid()?;
        Ok(self.subdivide_unchecked())
    }

    pub(crate) fn subdivide_unchecked(&self) -> OrbifoldComplex {
        self.subdivide_with_carrier().0
    }

    /// Subdivision plus the carrier of every new cell.
    pub(crate) fn subdivide_with_carrier(&self) -> (OrbifoldComplex, Vec<CellId>) {
        let sd = self.complex.barycentric_subdivision();
        let labels = sd.carrier.iter().map(|&old| self.labels[old].clone()).collect();
        let n = self.dim().unwrap_or(0);
        let boundary = if n == 0 {
            Vec::new()
        } else {
            let mut declared = vec![false; self.complex.len()];
            for &b in &self.boundary_faces {
                declared[b] = true;
            }
            sd.complex
                .cells_of_dim(n - 1)
                .filter(|&id| declared[sd.carrier[id]])
                .collect()
        };
        (OrbifoldComplex::from_parts(sd.complex, labels, boundary), sd.carrier)
    }

    /// Two copies glued along the closure of the boundary faces. Copy-two
    /// vertices off the boundary are renamed `(v,2)`. If the boundary is not
    /// a full subcomplex the orbifold is subdivided once first, so that the
    /// two copies of a cell never collapse onto each other.
    pub fn double(&self) -> Result<OrbifoldComplex, OrbifoldError> {
        self.ensure_valid()?;
        let base = if self.boundary_is_full() {
            self.clone()
        } else {
            self.subdivide_unchecked()
        };
        let k = &base.complex;
        let on_boundary = base.boundary_mask();
        let mut shared = vec![false; k.vertices().len()];
        for id in k.cells_of_dim(0) {
            if on_boundary[id] {
                shared[k.cell_indices(id)[0] as usize] = true;
            }
        }
        let copy_two: Vec<VertexId> = k
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, v)| {
                if shared[i] {
                    v.clone()
                } else {
                    VertexId::from(format!("({v},2)"))
                }
            })
            .collect();
        let rename = |id: CellId| -> Simplex {
            Simplex::new(k.cell_indices(id).iter().map(|&v| copy_two[v as usize].clone()))
                .expect("renaming is injective")
        };
        let mut maximal: Vec<Simplex> = Vec::new();
        for id in k.maximal_cells() {
            maximal.push(k.simplex(id));
            maximal.push(rename(id));
        }
        let glued = SimplicialComplex::from_simplices(&maximal);
        debug_assert_eq!(glued.len(), 2 * k.len() - on_boundary.iter().filter(|&&b| b).count());
        let mut labels = vec![LocalGroupLabel::trivial(); glued.len()];
        for id in 0..k.len() {
            let one = glued.find(&k.simplex(id)).expect("copy one present");
            let two = glued.find(&rename(id)).expect("copy two present");
            labels[one] = base.labels[id].clone();
            labels[two] = base.labels[id].clone();
        }
        Ok(OrbifoldComplex::from_parts(glued, labels, Vec::new()))
    }

    /// No cell outside the boundary closure has all its vertices on it.
    fn boundary_is_full(&self) -> bool {
        let mask = self.boundary_mask();
        let k = &self.complex;
        let mut vertex_on = vec![false; k.vertices().len()];
        for id in k.cells_of_dim(0) {
            if mask[id] {
                vertex_on[k.cell_indices(id)[0] as usize] = true;
            }
        }
        (0..k.len()).all(|id| mask[id] || !k.cell_indices(id).iter().all(|&v| vertex_on[v as usize]))
    }

    /// The sub-orbifold spanned by `cells` (closed downward), with inherited
    /// labels. A codimension-one cell of its topological boundary is declared
    /// orbifold boundary when it lies in our boundary or has trivial label;
    /// otherwise it is a mirror. Returns the map from new cell ids to ours.
    pub fn restrict(&self, cells: impl IntoIterator<Item = CellId>) -> Result<(OrbifoldComplex, Vec<CellId>), OrbifoldError> {
        let mask = self.complex.closure_mask(cells);
        self.restrict_mask(&mask)
    }

    pub(crate) fn restrict_mask(&self, mask: &[bool]) -> Result<(OrbifoldComplex, Vec<CellId>), OrbifoldError> {
        let (sub, map) = self.complex.subcomplex(mask);
        let labels: Vec<LocalGroupLabel> = map.iter().map(|&old| self.labels[old].clone()).collect();
        let on_boundary = self.boundary_mask();
        let top = sub.boundary_facets()?;
        let boundary = top
            .into_iter()
            .filter(|&id| on_boundary[map[id]] || labels[id].is_trivial())
            .collect();
        Ok((OrbifoldComplex::from_parts(sub, labels, boundary), map))
    }
}

/// Mirror orbifold mM: same complex, every cell of the topological boundary
/// labeled as a reflection, no orbifold boundary.
pub fn mirror(manifold: &SimplicialComplex) -> Result<OrbifoldComplex, OrbifoldError> {
    let top = manifold.boundary_facets()?;
    let mask = manifold.closure_mask(top);
    let labels = mask
        .iter()
        .map(|&m| {
            if m {
                LocalGroupLabel::reflection()
            } else {
                LocalGroupLabel::trivial()
            }
        })
        .collect();
    Ok(OrbifoldComplex::from_parts(manifold.clone(), labels, Vec::new()))
}

/// Checks χ(O) = χ(O₁) + χ(O₂) − χ(O₁ ∩ O₂) exactly, where O₁ and O₂ are
/// label-inheriting subcomplexes covering O.
pub fn chi_inclusion_exclusion_check(
    whole: &OrbifoldComplex,
    first: &OrbifoldComplex,
    second: &OrbifoldComplex,
) -> Result<bool, OrbifoldError> {
    let locate = |part: &OrbifoldComplex| -> Result<Vec<bool>, OrbifoldError> {
        let mut mask = vec![false; whole.complex.len()];
        for id in 0..part.complex.len() {
            let cell = part.complex.simplex(id);
            let Some(w) = whole.complex.find(&cell) else {
                return Err(OrbifoldError::NotSubcomplex(format!("{cell} is not a cell of the whole")));
            };
            if !whole.labels[w].same_type(&part.labels[id]) {
                return Err(OrbifoldError::NotSubcomplex(format!(
                    "{cell} is labeled {} but {} in the whole",
                    part.labels[id], whole.labels[w]
                )));
            }
            mask[w] = true;
        }
        Ok(mask)
    };
    let a = locate(first)?;
    let b = locate(second)?;
    if let Some(missing) = (0..whole.complex.len()).find(|&i| !a[i] && !b[i]) {
        return Err(OrbifoldError::NotSubcomplex(format!(
            "{} is covered by neither piece",
            whole.complex.simplex(missing)
        )));
    }
    let both = whole.chi_of_cells((0..whole.complex.len()).filter(|&i| a[i] && b[i]));
    Ok(whole.cell_sum() == first.cell_sum() + second.cell_sum() - both)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[&str]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    fn cx(cells: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::new(cells.iter().map(|c| c.iter().copied())).unwrap()
    }

    fn teardrop(n: u64) -> OrbifoldComplex {
        let k = cx(&[
            &["N", "a", "b"],
            &["N", "b", "c"],
            &["N", "a", "c"],
            &["S", "a", "b"],
            &["S", "b", "c"],
            &["S", "a", "c"],
        ]);
        OrbifoldComplex::new(k, [(s(&["N"]), LocalGroupLabel::cyclic(n).unwrap())], []).unwrap()
    }

    fn interval() -> OrbifoldComplex {
        OrbifoldComplex::new(cx(&[&["0", "1"]]), [], [s(&["0"]), s(&["1"])]).unwrap()
    }

    fn m1() -> OrbifoldComplex {
        OrbifoldComplex::new(cx(&[&["0", "1"]]), [(s(&["0"]), LocalGroupLabel::reflection())], [s(&["1"])]).unwrap()
    }

    fn m2() -> OrbifoldComplex {
        OrbifoldComplex::new(
            cx(&[&["0", "1"]]),
            [(s(&["0"]), LocalGroupLabel::reflection()), (s(&["1"]), LocalGroupLabel::reflection())],
            [],
        )
        .unwrap()
    }

    #[test]
    fn label_invariants() {
        assert!(LocalGroupLabel::new(1, GroupKind::Cyclic).is_err());
        assert!(LocalGroupLabel::new(2, GroupKind::Trivial).is_err());
        assert!(LocalGroupLabel::new(1, GroupKind::Reflection).is_err());
        assert!(LocalGroupLabel::dihedral(2).is_ok());
        assert_eq!("named:g12".parse::<GroupKind>().unwrap(), GroupKind::Named("g12".into()));
        assert!("named:".parse::<GroupKind>().is_err());
    }

    #[test]
    fn teardrop_is_valid_with_chi_one_plus_one_over_n() {
        let t = teardrop(3);
        assert!(t.validate().is_empty());
        assert_eq!(t.euler_char().unwrap(), Rational::new(4, 3));
    }

    #[test]
    fn one_dimensional_table() {
        assert_eq!(interval().euler_char().unwrap(), Rational::ONE);
        assert_eq!(m1().euler_char().unwrap(), Rational::HALF);
        assert_eq!(m2().euler_char().unwrap(), Rational::ZERO);
        assert_eq!(interval().orbifold_boundary().unwrap().euler_char().unwrap(), Rational::integer(2));
        let b = m1().orbifold_boundary().unwrap();
        assert_eq!(b.dim(), Some(0));
        assert_eq!(b.euler_char().unwrap(), Rational::ONE);
        assert!(m2().orbifold_boundary().unwrap().is_empty());
    }

    #[test]
    fn divisibility_violation_is_reported() {
        let k = cx(&[&["a", "b", "c"]]);
        let o = OrbifoldComplex::new(
            k,
            [
                (s(&["a", "b"]), LocalGroupLabel::cyclic(3).unwrap()),
                (s(&["a"]), LocalGroupLabel::cyclic(2).unwrap()),
                (s(&["b"]), LocalGroupLabel::cyclic(3).unwrap()),
            ],
            [s(&["a", "c"]), s(&["b", "c"])],
        )
        .unwrap();
        let v = o.validate();
        assert_eq!(v.len(), 1, "{v:?}");
        assert_eq!(v[0].rule(), "DivisibilityViolation");
        assert!(matches!(o.euler_char(), Err(OrbifoldError::InvalidOrbifold(_))));
    }

    #[test]
    fn unmarked_mirror_is_reported() {
        let k = cx(&[&["a", "b", "c"]]);
        let o = OrbifoldComplex::new(k, [], [s(&["a", "c"]), s(&["b", "c"])]).unwrap();
        let v = o.validate();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].rule(), "UnmarkedMirror");
        assert!(v[0].to_string().contains("[a,b]"));
    }

    #[test]
    fn non_effective_and_misplaced_boundary() {
        let k = cx(&[&["a", "b"], &["b", "c"]]);
        let o = OrbifoldComplex::new(
            k,
            [(s(&["a", "b"]), LocalGroupLabel::cyclic(2).unwrap()), (s(&["a"]), LocalGroupLabel::cyclic(2).unwrap())],
            [s(&["b"]), s(&["c"])],
        )
        .unwrap();
        let rules: Vec<&str> = o.validate().iter().map(Violation::rule).collect();
        assert!(rules.contains(&"NonEffective"));
        assert!(rules.contains(&"BoundaryFaceNotOnBoundary"));
    }

    #[test]
    fn boundary_of_boundary_is_empty() {
        for o in [interval(), m1(), m2(), teardrop(5)] {
            let b = o.orbifold_boundary().unwrap();
            assert!(b.orbifold_boundary().unwrap().is_empty());
        }
    }

    #[test]
    fn doubling() {
        let c = interval().double().unwrap();
        assert!(c.validate().is_empty());
        assert!(!c.has_boundary());
        assert_eq!(c.complex().f_vector(), vec![4, 4]);
        assert_eq!(c.euler_char().unwrap(), Rational::ZERO);

        let d = m1().double().unwrap();
        assert!(d.validate().is_empty());
        assert_eq!(d.euler_char().unwrap(), Rational::ZERO);
        let names: Vec<&str> = d.complex().vertices().iter().map(|v| v.as_str()).collect();
        assert_eq!(names, ["(0,2)", "0", "1"]);
        assert_eq!(d.singular_cells().len(), 2);
    }

    #[test]
    fn mirror_of_interval_and_disk() {
        let m = mirror(&cx(&[&["0", "1"]])).unwrap();
        assert!(m.validate().is_empty());
        assert_eq!(m.euler_char().unwrap(), Rational::ZERO);
        let disk = mirror(&cx(&[&["a", "b", "c"]])).unwrap();
        assert!(disk.validate().is_empty());
        // 1/2·(3 − 3) from the boundary circle, plus the open triangle.
        assert_eq!(disk.euler_char().unwrap(), Rational::ONE);
        assert!(disk.orbifold_boundary().unwrap().is_empty());
    }

    #[test]
    fn subdivision_keeps_chi_and_validity() {
        for o in [teardrop(3), m1(), m2(), interval()] {
            let sd = o.subdivide().unwrap();
            assert!(sd.validate().is_empty(), "{:?}", sd.validate());
            assert_eq!(sd.euler_char().unwrap(), o.euler_char().unwrap());
            assert_eq!(
                sd.orbifold_boundary().unwrap().euler_char().unwrap(),
                o.orbifold_boundary().unwrap().euler_char().unwrap()
            );
        }
    }

    #[test]
    fn inclusion_exclusion_on_teardrop_halves() {
        let t = teardrop(4);
        let k = t.complex();
        let half = |pole: &str| {
            let ids: Vec<CellId> = k
                .cells_of_dim(2)
                .filter(|&id| k.simplex(id).vertices().iter().any(|v| v.as_str() == pole))
                .collect();
            t.restrict(ids).unwrap().0
        };
        let north = half("N");
        let south = half("S");
        assert!(chi_inclusion_exclusion_check(&t, &north, &south).unwrap());
        assert!(chi_inclusion_exclusion_check(&t, &t, &t).unwrap());
        assert!(matches!(
            chi_inclusion_exclusion_check(&t, &north, &north),
            Err(OrbifoldError::NotSubcomplex(_))
        ));
    }
}
