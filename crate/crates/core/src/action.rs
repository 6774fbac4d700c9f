//! Finite permutation groups acting simplicially on complexes, and the
//! quotient orbifolds they produce.

use std::collections::BTreeMap;
use std::fmt;

use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::complex::{CellId, ComplexError, Simplex, SimplicialComplex, VertexId};
use crate::orbifold::{GroupKind, LocalGroupLabel, OrbifoldComplex, OrbifoldError};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("not a bijection: {0}")]
    NotBijection(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("permutation does not act simplicially: {0}")]
    NotSimplicial(String),
    #[error("action is not regular: {0}")]
    NotRegular(String),
    #[error("boundary faces are not permuted among themselves: {0}")]
    BoundaryNotInvariant(String),
    #[error("cell {0} is not in the complex")]
    CellNotFound(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Orbifold(#[from] OrbifoldError),
}

/// A permutation of vertex indices `0..degree`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Box<[u32]>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, ActionError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            match seen.get_mut(i as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(ActionError::NotBijection(format!("image list {images:?}"))),
            }
        }
        Ok(Permutation(images.into_boxed_slice()))
    }

    /// Builds a permutation of the complex's vertices from cycles of vertex
    /// names; vertices not mentioned are fixed.
    pub fn from_cycles<C, V>(complex: &SimplicialComplex, cycles: C) -> Result<Self, ActionError>
    where
        C: IntoIterator,
        C::Item: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let degree = complex.vertices().len();
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            let mut idx = Vec::new();
            for v in cycle {
                let v: VertexId = v.into();
                let i = complex
                    .vertex_index(&v)
                    .ok_or_else(|| ActionError::UnknownVertex(v.to_string()))?;
                if std::mem::replace(&mut moved[i as usize], true) {
                    return Err(ActionError::NotBijection(format!("vertex {v} appears twice")));
                }
                idx.push(i);
            }
            for k in 0..idx.len() {
                images[idx[k] as usize] = idx[(k + 1) % idx.len()];
            }
        }
        Ok(Permutation(images.into_boxed_slice()))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, v: u32) -> u32 {
        self.0[v as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&v| self.0[v as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Permutation(inv.into_boxed_slice())
    }

    /// Non-trivial cycles, each starting at its smallest index, ordered by
    /// that index.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start as u32;
            while !seen[v as usize] {
                seen[v as usize] = true;
                cycle.push(v);
                v = self.0[v as usize];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Cycle notation over vertex names, `()` for the identity.
    pub fn token(&self, complex: &SimplicialComplex) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let names: Vec<&str> = c.iter().map(|&v| complex.vertex_name(v).as_str()).collect();
                format!("({})", names.join(" "))
            })
            .collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.cycles())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// A finite permutation group with every element enumerated. The identity
/// is always element 0.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

/// Breadth-first closure of the generators under composition.
pub fn close_group(degree: usize, generators: Vec<Permutation>) -> Result<PermutationGroup, ActionError> {
    for g in &generators {
        if g.degree() != degree {
            return Err(ActionError::NotBijection(format!(
                "generator of degree {} on {degree} vertices",
                g.degree()
            )));
        }
    }
    let id = Permutation::identity(degree);
    let mut index: FxHashMap<Permutation, usize> = FxHashMap::default();
    index.insert(id.clone(), 0);
    let mut elements = vec![id];
    let mut next = 0;
    while next < elements.len() {
        let current = elements[next].clone();
        for g in &generators {
            let p = g.compose(&current);
            if !index.contains_key(&p) {
                index.insert(p.clone(), elements.len());
                elements.push(p);
            }
        }
        next += 1;
    }
    Ok(PermutationGroup {
        degree,
        generators,
        elements,
    })
}

impl PermutationGroup {
    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }
}

/// Isomorphism-kind heuristic for a finite group given by its elements.
/// `fixes_codim1(e)` reports whether element `e` fixes a codimension-one
/// cell pointwise.
pub fn classify_group(elements: &[&Permutation], fixes_codim1: impl Fn(&Permutation) -> bool) -> GroupKind {
    let order = elements.len() as u64;
    if order == 1 {
        return GroupKind::Trivial;
    }
    if order == 2 {
        let g = elements.iter().find(|e| !e.is_identity()).expect("order two");
        if fixes_codim1(g) {
            return GroupKind::Reflection;
        }
    }
    let orders: Vec<u64> = elements.iter().map(|e| e.order()).collect();
    if orders.contains(&order) {
        return GroupKind::Cyclic;
    }
    if order.is_multiple_of(2) && orders.contains(&(order / 2)) {
        return GroupKind::Dihedral;
    }
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for o in orders {
        *counts.entry(o).or_default() += 1;
    }
    let profile: Vec<String> = counts.iter().map(|(o, c)| format!("{o}^{c}")).collect();
    GroupKind::Named(format!("g{order}-{}", profile.join("-")))
}

/// Pointwise stabilizer of a cell.
#[derive(Debug, Clone)]
pub struct StabilizerInfo {
    pub cell: Simplex,
    /// Indices into the group's element list.
    pub elements: Vec<usize>,
    pub order: u64,
    pub kind: GroupKind,
    /// A small generating set, in cycle notation.
    pub generators: Vec<String>,
}

impl StabilizerInfo {
    pub fn label(&self) -> LocalGroupLabel {
        LocalGroupLabel::new(self.order, self.kind.clone())
            .expect("classification respects label invariants")
            .with_generators(self.generators.clone())
    }
}

/// A finite permutation group acting simplicially on a complex.
#[derive(Debug, Clone)]
pub struct SimplicialAction {
    complex: SimplicialComplex,
    group: PermutationGroup,
}

impl SimplicialAction {
    pub fn new(complex: SimplicialComplex, generators: Vec<Permutation>) -> Result<Self, ActionError> {
        let group = close_group(complex.vertices().len(), generators)?;
        let action = SimplicialAction { complex, group };
        for g in action.group.generators() {
            for id in action.complex.maximal_cells() {
                if action.image(g, id).is_none() {
                    return Err(ActionError::NotSimplicial(format!(
                        "{} is sent to a non-cell by {}",
                        action.complex.simplex(id),
                        g.token(&action.complex)
                    )));
                }
            }
        }
        Ok(action)
    }

    /// Generators given in cycle notation over vertex names.
    pub fn from_cycles<G, C, V>(complex: SimplicialComplex, generators: G) -> Result<Self, ActionError>
    where
        G: IntoIterator,
        G::Item: IntoIterator<Item = C>,
        C: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let perms = generators
            .into_iter()
            .map(|cycles| Permutation::from_cycles(&complex, cycles))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(complex, perms)
    }

    pub fn trivial(complex: SimplicialComplex) -> Self {
        let group = PermutationGroup::trivial(complex.vertices().len());
        SimplicialAction { complex, group }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    /// The cell `g(τ)`, if it exists.
    pub fn image(&self, g: &Permutation, id: CellId) -> Option<CellId> {
        let mut buf: Vec<u32> = self.complex.cell_indices(id).iter().map(|&v| g.apply(v)).collect();
        buf.sort_unstable();
        self.complex.find_indices(&buf)
    }

    fn fixes_setwise(&self, g: &Permutation, id: CellId) -> bool {
        let cell = self.complex.cell_indices(id);
        let mut buf: Vec<u32> = cell.iter().map(|&v| g.apply(v)).collect();
        buf.sort_unstable();
        buf.as_slice() == cell
    }

    fn fixes_pointwise(&self, g: &Permutation, id: CellId) -> bool {
        self.complex.cell_indices(id).iter().all(|&v| g.apply(v) == v)
    }

    /// Every element fixing a cell setwise fixes it pointwise.
    pub fn is_regular(&self) -> bool {
        self.first_irregularity().is_none()
    }

    fn first_irregularity(&self) -> Option<String> {
        for g in self.group.elements().iter().skip(1) {
            for id in 0..self.complex.len() {
                if self.complex.cell_dim(id) > 0 && self.fixes_setwise(g, id) && !self.fixes_pointwise(g, id) {
                    return Some(format!(
                        "{} fixes {} setwise but not pointwise",
                        g.token(&self.complex),
                        self.complex.simplex(id)
                    ));
                }
            }
        }
        None
    }

    /// Representative (smallest index) of every vertex orbit.
    pub fn vertex_orbit_reps(&self) -> Vec<u32> {
        let n = self.group.degree();
        let mut rep: Vec<u32> = (0..n as u32).collect();
        for g in self.group.elements() {
            for v in 0..n {
                let w = g.apply(v as u32) as usize;
                rep[w] = rep[w].min(v as u32);
            }
        }
        // An orbit's minimum is reached from every member by some element,
        // so one pass suffices.
        rep
    }

    /// Cell orbits, each sorted, listed by their smallest cell id.
    pub fn cell_orbits(&self) -> Vec<Vec<CellId>> {
        let mut seen = vec![false; self.complex.len()];
        let mut out = Vec::new();
        for id in 0..self.complex.len() {
            if seen[id] {
                continue;
            }
            let mut orbit: Vec<CellId> = self
                .group
                .elements()
                .iter()
                .map(|g| self.image(g, id).expect("simplicial action"))
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &c in &orbit {
                seen[c] = true;
            }
            out.push(orbit);
        }
        out
    }

    /// Whether the orbit space is itself a simplicial complex on the vertex
    /// orbits: the vertices of every cell lie in distinct orbits, and cells
    /// with the same set of vertex orbits lie in the same cell orbit.
    pub fn has_simplicial_quotient(&self) -> bool {
        self.first_non_simplicial_quotient().is_none()
    }

    fn first_non_simplicial_quotient(&self) -> Option<String> {
        let rep = self.vertex_orbit_reps();
        let mut seen: FxHashMap<Vec<u32>, usize> = FxHashMap::default();
        for (k, orbit) in self.cell_orbits().into_iter().enumerate() {
            let id = orbit[0];
            let mut image: Vec<u32> = self.complex.cell_indices(id).iter().map(|&v| rep[v as usize]).collect();
            image.sort_unstable();
            if image.windows(2).any(|w| w[0] == w[1]) {
                return Some(format!("{} has two vertices in one orbit", self.complex.simplex(id)));
            }
            if seen.insert(image, k).is_some() {
                return Some(format!(
                    "{} shares its vertex orbits with a cell of another orbit",
                    self.complex.simplex(id)
                ));
            }
        }
        None
    }

    /// The induced action on the barycentric subdivision, together with the
    /// carrier map of the subdivision.
    pub fn subdivide(&self) -> (SimplicialAction, Vec<CellId>) {
        let sd = self.complex.barycentric_subdivision();
        let lift = |g: &Permutation| -> Permutation {
            let mut images = vec![0u32; sd.complex.vertices().len()];
            for old in 0..self.complex.len() {
                let to = self.image(g, old).expect("simplicial action");
                images[sd.barycenter[old] as usize] = sd.barycenter[to];
            }
            Permutation(images.into_boxed_slice())
        };
        let group = PermutationGroup {
            degree: sd.complex.vertices().len(),
            generators: self.group.generators.iter().map(lift).collect(),
            elements: self.group.elements.iter().map(lift).collect(),
        };
        (
            SimplicialAction {
                complex: sd.complex,
                group,
            },
            sd.carrier,
        )
    }

    /// Pointwise stabilizer of a cell, with its kind.
    pub fn stabilizer(&self, cell: &Simplex) -> Result<StabilizerInfo, ActionError> {
        let id = self
            .complex
            .find(cell)
            .ok_or_else(|| ActionError::CellNotFound(cell.to_string()))?;
        Ok(self.stabilizer_of(id, &CodimOneFixers::new(self)))
    }

    fn stabilizer_of(&self, id: CellId, fixers: &CodimOneFixers) -> StabilizerInfo {
        let elements: Vec<usize> = (0..self.group.elements.len())
            .filter(|&e| self.fixes_pointwise(&self.group.elements[e], id))
            .collect();
        let perms: Vec<&Permutation> = elements.iter().map(|&e| &self.group.elements[e]).collect();
        let kind = classify_group(&perms, |p| {
            let e = elements[perms.iter().position(|q| *q == p).expect("member")];
            fixers.fixes[e]
        });
        StabilizerInfo {
            cell: self.complex.simplex(id),
            order: elements.len() as u64,
            kind,
            generators: self.generating_tokens(&elements),
            elements,
        }
    }

    /// Greedy generating set: add each element not yet generated.
    fn generating_tokens(&self, elements: &[usize]) -> Vec<String> {
        let degree = self.group.degree();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut span: Vec<Permutation> = vec![Permutation::identity(degree)];
        for &e in elements {
            let g = &self.group.elements[e];
            if span.contains(g) {
                continue;
            }
            gens.push(g.clone());
            span = close_group(degree, gens.clone()).expect("same degree").elements;
        }
        gens.iter().map(|g| g.token(&self.complex)).collect()
    }
}

/// Per group element: does it fix some codimension-one cell pointwise?
struct CodimOneFixers {
    fixes: Vec<bool>,
}

impl CodimOneFixers {
    fn new(action: &SimplicialAction) -> Self {
        let k = &action.complex;
        let fixes = match k.dim() {
            Some(n) if n >= 1 => action
                .group
                .elements
                .iter()
                .map(|g| k.cells_of_dim(n - 1).any(|id| action.fixes_pointwise(g, id)))
                .collect(),
            _ => vec![false; action.group.elements.len()],
        };
        CodimOneFixers { fixes }
    }
}

/// Subdivides (at most twice) until the action is regular and its quotient
/// is simplicial. Returns the new action and the carrier map to the cells of
/// the original complex.
pub fn regularize_tracked(action: &SimplicialAction) -> Result<(SimplicialAction, Vec<CellId>), ActionError> {
    let mut current = action.clone();
    let mut carrier: Vec<CellId> = (0..current.complex.len()).collect();
    for _ in 0..2 {
        if current.is_regular() && current.has_simplicial_quotient() {
            return Ok((current, carrier));
        }
        let (next, step) = current.subdivide();
        carrier = step.iter().map(|&c| carrier[c]).collect();
        current = next;
    }
    if let Some(why) = current.first_irregularity().or_else(|| current.first_non_simplicial_quotient()) {
        return Err(ActionError::NotRegular(why));
    }
    Ok((current, carrier))
}

pub fn regularize(action: &SimplicialAction) -> Result<SimplicialAction, ActionError> {
    regularize_tracked(action).map(|(a, _)| a)
}

/// The quotient orbifold M/Γ. Each cell is labeled by the pointwise
/// stabilizer of the lexicographically least cell of its orbit; orbits of
/// the given manifold boundary faces become orbifold boundary, and mirror
/// faces arise from reflections.
pub fn quotient(action: &SimplicialAction, boundary_faces: &[Simplex]) -> Result<OrbifoldComplex, ActionError> {
    if let Some(why) = action.first_irregularity().or_else(|| action.first_non_simplicial_quotient()) {
        return Err(ActionError::NotRegular(why));
    }
    let k = &action.complex;
    let mut boundary_ids = Vec::with_capacity(boundary_faces.len());
    for f in boundary_faces {
        boundary_ids.push(k.find(f).ok_or_else(|| ActionError::CellNotFound(f.to_string()))?);
    }
    boundary_ids.sort_unstable();
    for g in action.group.generators() {
        for &b in &boundary_ids {
            let to = action.image(g, b).expect("simplicial action");
            if boundary_ids.binary_search(&to).is_err() {
                return Err(ActionError::BoundaryNotInvariant(format!(
                    "{} sends {} to {}",
                    g.token(k),
                    k.simplex(b),
                    k.simplex(to)
                )));
            }
        }
    }

    let rep = action.vertex_orbit_reps();
    let mut reps: Vec<u32> = rep.clone();
    reps.sort_unstable();
    reps.dedup();
    let new_index: FxHashMap<u32, u32> = reps.iter().enumerate().map(|(i, &r)| (r, i as u32)).collect();
    let vertices: Vec<VertexId> = reps.iter().map(|&r| k.vertex_name(r).clone()).collect();

    // First (hence lexicographically least) preimage of every quotient cell.
    let mut first: FxHashMap<Box<[u32]>, CellId> = FxHashMap::default();
    let mut image_of = Vec::with_capacity(k.len());
    for id in 0..k.len() {
        let mut img: Vec<u32> = k.cell_indices(id).iter().map(|&v| new_index[&rep[v as usize]]).collect();
        img.sort_unstable();
        let img: Box<[u32]> = img.into_boxed_slice();
        first.entry(img.clone()).or_insert(id);
        image_of.push(img);
    }
    let cells: Vec<Box<[u32]>> = first.keys().cloned().collect();
    let q = SimplicialComplex::from_index_cells(vertices, cells);

    let fixers = CodimOneFixers::new(action);
    let mut labels = vec![LocalGroupLabel::trivial(); q.len()];
    for (img, &id) in &first {
        let qid = q.find_indices(img).expect("quotient cell");
        let stab = action.stabilizer_of(id, &fixers);
        labels[qid] = if stab.order == 1 {
            LocalGroupLabel::trivial()
        } else {
            stab.label()
        };
    }
    let boundary: Vec<CellId> = boundary_ids
        .iter()
        .map(|&b| q.find_indices(&image_of[b]).expect("quotient cell"))
        .collect();
    Ok(OrbifoldComplex::from_parts(q, labels, boundary))
}

/// Regularizes, then takes the quotient with the whole topological boundary
/// of the manifold as boundary.
pub fn quotient_of_manifold(action: &SimplicialAction) -> Result<OrbifoldComplex, ActionError> {
    let regular = regularize(action)?;
    let faces: Vec<Simplex> = regular
        .complex
        .boundary_facets()?
        .into_iter()
        .map(|id| regular.complex.simplex(id))
        .collect();
    quotient(&regular, &faces)
}

/// Outcome of the covering check χ(M) = |Γ|·χ(M/Γ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringCheck {
    pub group_order: u64,
    pub chi_manifold: Rational,
    pub chi_quotient: Rational,
    pub holds: bool,
}

/// Checks χ(M) = |Γ|·χ(M/Γ) exactly, M → M/Γ being a |Γ|-sheeted covering.
pub fn covering_check(action: &SimplicialAction) -> Result<CoveringCheck, ActionError> {
    if let Some(why) = action.first_irregularity() {
        return Err(ActionError::NotRegular(why));
    }
    let q = quotient_of_manifold(action)?;
    let chi_quotient = q.euler_char()?;
    let chi_manifold = Rational::integer(action.complex.euler_char_top());
    let group_order = action.group.order();
    Ok(CoveringCheck {
        group_order,
        chi_manifold,
        chi_quotient,
        holds: chi_manifold == chi_quotient * group_order as i64,
    })
}

pub fn covering_multiplicativity_check(action: &SimplicialAction) -> Result<bool, ActionError> {
    covering_check(action).map(|c| c.holds)
}
