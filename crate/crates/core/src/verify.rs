//! Exact checks of χ(O) = ½χ(∂O) and related identities, including a
//! step-by-step decomposition proof recorded as a ledger.

use std::fmt;

use thiserror::Error;

use crate::complex::CellId;
use crate::orbifold::{GroupKind, OrbifoldComplex, OrbifoldError};
use crate::rational::Rational;
use crate::strata::{self, StrataError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("dimension {0} is even")]
    EvenDimension(usize),
    #[error("the orbifold is empty")]
    EmptyOrbifold,
    #[error("the orbifold has non-empty boundary")]
    HasBoundary,
    #[error("dimension {0} is not 2")]
    NotTwoDimensional(usize),
    #[error("unclassifiable singularity: {0}")]
    UnclassifiableSingularity(String),
    #[error("decomposition did not finish within {0} steps")]
    NonTerminating(usize),
    #[error(transparent)]
    Orbifold(#[from] OrbifoldError),
    #[error(transparent)]
    Strata(#[from] StrataError),
}

/// One exact comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: Rational,
    pub actual: Rational,
    pub pass: bool,
    /// How `expected` was formed, e.g. `1/2 * 1/12`.
    pub note: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: Rational, actual: Rational) -> Self {
        Check {
            name: name.into(),
            expected,
            actual,
            pass: expected == actual,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        match &self.note {
            Some(note) => write!(f, "{}: {} = {} {status}", self.name, self.actual, note),
            None => write!(f, "{}: {} = {} {status}", self.name, self.actual, self.expected),
        }
    }
}

/// One extraction of a minimal singular stratum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionStep {
    pub index: usize,
    pub stratum_dim: usize,
    pub stratum_order: u64,
    pub stratum_kind: GroupKind,
    pub stratum_cells: usize,
    pub chi_whole: Rational,
    pub chi_first: Rational,
    pub chi_second: Rational,
    pub chi_intersection: Rational,
    pub chi_boundary_whole: Rational,
    pub chi_boundary_first: Rational,
    pub chi_boundary_second: Rational,
    pub chi_boundary_intersection: Rational,
    /// χ(O) = χ(O₁) + χ(O₂) − χ(O₁ ∩ O₂).
    pub inclusion_exclusion: bool,
    /// O₁ ∩ O₂ = ∂O₁ ∩ ∂O₂ and the cover is a decomposition.
    pub neat: bool,
    pub boundary_identities: [bool; 3],
    pub pieces_valid: bool,
    /// χ(O₁) = ½χ(∂O₁).
    pub first_piece_theorem: bool,
    /// χ(O) = ½χ(∂O) − ½χ(∂(O₁ ∩ O₂)).
    pub ledger_identity: bool,
    /// χ(∂(O₁ ∩ O₂)) = 0.
    pub intersection_boundary_vanishes: bool,
    /// Every singular cell of O₁ carries group generators from a quotient.
    pub very_good_certified: bool,
}

impl DecompositionStep {
    pub fn pass(&self) -> bool {
        self.inclusion_exclusion
            && self.neat
            && self.boundary_identities.iter().all(|&b| b)
            && self.pieces_valid
            && self.first_piece_theorem
            && self.ledger_identity
            && self.intersection_boundary_vanishes
    }
}

impl fmt::Display for DecompositionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "ok" } else { "FAIL" };
        write!(
            f,
            "step {}: stratum dim={} order={} kind={} cells={} | chi(O)={} chi(O1)={} chi(O2)={} chi(O1^O2)={} | \
             incl-excl {} neat {} boundary-identities {}/{}/{} ledger {} chi(d(O1^O2))={} very-good {}",
            self.index,
            self.stratum_dim,
            self.stratum_order,
            self.stratum_kind,
            self.stratum_cells,
            self.chi_whole,
            self.chi_first,
            self.chi_second,
            self.chi_intersection,
            yn(self.inclusion_exclusion),
            yn(self.neat),
            yn(self.boundary_identities[0]),
            yn(self.boundary_identities[1]),
            yn(self.boundary_identities[2]),
            yn(self.ledger_identity),
            self.chi_boundary_intersection,
            if self.very_good_certified { "certified" } else { "uncertified" },
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub subject: String,
    pub checks: Vec<Check>,
    pub ledger: Option<Vec<DecompositionStep>>,
}

impl VerificationReport {
    fn new(checks: Vec<Check>) -> Self {
        VerificationReport {
            subject: "orbifold".to_string(),
            checks,
            ledger: None,
        }
    }

    pub fn with_subject(mut self, subject: impl Into<String>) -> Self {
        self.subject = subject.into();
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass) && self.ledger.iter().flatten().all(DecompositionStep::pass)
    }
}

fn odd_dimension(o: &OrbifoldComplex) -> Result<usize, VerifyError> {
    match o.dim() {
        None => Err(VerifyError::EmptyOrbifold),
        Some(n) if n % 2 == 0 => Err(VerifyError::EvenDimension(n)),
        Some(n) => Ok(n),
    }
}

/// χ(O) against ½χ(∂O) for an odd-dimensional compact orbifold.
pub fn check_main_theorem(o: &OrbifoldComplex) -> Result<VerificationReport, VerifyError> {
    odd_dimension(o)?;
    let chi = o.euler_char()?;
    let chi_boundary = o.orbifold_boundary()?.euler_char()?;
    let check = Check::new("main_theorem", Rational::HALF * chi_boundary, chi).with_note(format!("1/2 * {chi_boundary}"));
    Ok(VerificationReport::new(vec![check]))
}

/// χ(O) = 0 for a closed odd-dimensional orbifold.
pub fn check_satake(o: &OrbifoldComplex) -> Result<VerificationReport, VerifyError> {
    odd_dimension(o)?;
    if o.has_boundary() {
        return Err(VerifyError::HasBoundary);
    }
    let chi = o.euler_char()?;
    Ok(VerificationReport::new(vec![Check::new("satake", Rational::ZERO, chi)]))
}

/// χ(|O|) − ½Σ(1 − 1/mᵢ) − Σ(1 − 1/nᵢ) over corner reflectors of order mᵢ and
/// cone points of order nᵢ, read off the labels of a 2-orbifold.
pub fn two_orbifold_formula(o: &OrbifoldComplex) -> Result<Rational, VerifyError> {
    let n = o.dim().ok_or(VerifyError::EmptyOrbifold)?;
    if n != 2 {
        return Err(VerifyError::NotTwoDimensional(n));
    }
    o.ensure_valid()?;
    let k = o.complex();
    let mut mirror = vec![false; k.len()];
    for id in o.mirror_faces()? {
        mirror[id] = true;
    }
    for id in k.cells_of_dim(1) {
        if !o.label(id).is_trivial() && !mirror[id] {
            return Err(VerifyError::UnclassifiableSingularity(format!(
                "{} is singular but not a mirror edge",
                k.simplex(id)
            )));
        }
    }
    let on_boundary = o.boundary_mask();
    let mut corners = Rational::ZERO;
    let mut cones = Rational::ZERO;
    for v in k.cells_of_dim(0) {
        let label = o.label(v);
        if label.is_trivial() {
            continue;
        }
        let unclassifiable = |why: &str| VerifyError::UnclassifiableSingularity(format!("{} ({label}) {why}", k.simplex(v)));
        if on_boundary[v] {
            return Err(unclassifiable("lies on the orbifold boundary"));
        }
        let mirrors = k.cofacets(v).iter().filter(|&&e| mirror[e]).count();
        let order = label.order() as i64;
        match (label.kind(), mirrors) {
            (GroupKind::Cyclic, 0) => cones = cones + (Rational::ONE - Rational::new(1, order)),
            (GroupKind::Dihedral, m) if m > 0 => {
                corners = corners + (Rational::ONE - Rational::new(2, order));
            }
            (GroupKind::Reflection, m) if m > 0 => {}
            _ => return Err(unclassifiable(&format!("meets {mirrors} mirror edges"))),
        }
    }
    Ok(Rational::integer(k.euler_char_top()) - Rational::HALF * corners - cones)
}

/// Reproduces the inductive proof: repeatedly splits off the closed star of
/// a minimal singular stratum and checks every identity of each step, then
/// checks the remaining manifold directly.
///
/// The orbifold is subdivided twice up front; later steps work on the
/// remaining piece without further subdivision.
pub fn prove_by_decomposition(o: &OrbifoldComplex) -> Result<VerificationReport, VerifyError> {
    odd_dimension(o)?;
    o.ensure_valid()?;
    let chi = o.cell_sum();
    let chi_boundary = o.boundary_unchecked().cell_sum();
    let initial = strata::stratify(o)?;
    let budget = initial.iter().filter(|s| s.is_singular()).count() + 1;

    let mut ledger = Vec::new();
    let mut current = if o.is_manifold() {
        o.clone()
    } else {
        o.subdivide_unchecked().subdivide_unchecked()
    };
    let mut reassembled = Rational::ZERO;
    while let Some(cells) = next_minimal_singular(&current)? {
        if ledger.len() >= budget {
            return Err(VerifyError::NonTerminating(budget));
        }
        let step = decomposition_step(&current, &cells, ledger.len() + 1)?;
        reassembled = reassembled + step.0.chi_first - step.0.chi_intersection;
        ledger.push(step.0);
        current = step.1;
    }
    let final_chi = current.cell_sum();
    let final_boundary = current.boundary_unchecked().cell_sum();
    reassembled = reassembled + final_chi;

    let checks = vec![
        Check::new("final_manifold", Rational::HALF * final_boundary, final_chi)
            .with_note(format!("1/2 * {final_boundary}")),
        Check::new("reassembled_chi", chi, reassembled),
        Check::new("main_theorem", Rational::HALF * chi_boundary, chi).with_note(format!("1/2 * {chi_boundary}")),
    ];
    let mut report = VerificationReport::new(checks);
    report.ledger = Some(ledger);
    Ok(report)
}

/// Cells of the minimal singular stratum of lowest dimension, ties broken by
/// smallest cell id.
fn next_minimal_singular(o: &OrbifoldComplex) -> Result<Option<Vec<CellId>>, VerifyError> {
    if o.is_manifold() {
        return Ok(None);
    }
    let poset = strata::strata_poset(o, strata::stratify(o)?)?;
    let pick = poset
        .minimal_strata()
        .into_iter()
        .filter(|&i| poset.strata[i].is_singular())
        .min_by_key(|&i| (poset.strata[i].dim, poset.strata[i].cells[0]));
    Ok(pick.map(|i| poset.strata[i].cells.clone()))
}

fn decomposition_step(
    o: &OrbifoldComplex,
    cells: &[CellId],
    index: usize,
) -> Result<(DecompositionStep, OrbifoldComplex), VerifyError> {
    let d = strata::decompose_along(o, cells)?;
    let checks = d.checks();
    let chi_of = |p: &OrbifoldComplex| p.cell_sum();
    let boundary_chi = |p: &OrbifoldComplex| p.boundary_unchecked().cell_sum();
    let (first, second, inter) = (&d.first.orbifold, &d.second.orbifold, &d.intersection.orbifold);
    let label = o.label(cells[0]);
    let chi_whole = chi_of(o);
    let chi_first = chi_of(first);
    let chi_second = chi_of(second);
    let chi_intersection = chi_of(inter);
    let chi_boundary_whole = boundary_chi(o);
    let chi_boundary_first = boundary_chi(first);
    let chi_boundary_intersection = boundary_chi(inter);
    let step = DecompositionStep {
        index,
        stratum_dim: cells.iter().map(|&c| o.complex().cell_dim(c)).max().unwrap_or(0),
        stratum_order: label.order(),
        stratum_kind: label.kind().clone(),
        stratum_cells: cells.len(),
        chi_whole,
        chi_first,
        chi_second,
        chi_intersection,
        chi_boundary_whole,
        chi_boundary_first,
        chi_boundary_second: boundary_chi(second),
        chi_boundary_intersection,
        inclusion_exclusion: chi_whole == chi_first + chi_second - chi_intersection,
        neat: checks.is_decomposition && checks.meets_along_boundaries && checks.separates_stratum,
        boundary_identities: checks.boundary_identities(),
        pieces_valid: first.validate().is_empty() && second.validate().is_empty() && inter.validate().is_empty(),
        first_piece_theorem: chi_first == Rational::HALF * chi_boundary_first,
        ledger_identity: chi_whole == Rational::HALF * chi_boundary_whole - Rational::HALF * chi_boundary_intersection,
        intersection_boundary_vanishes: chi_boundary_intersection.is_zero(),
        very_good_certified: first
            .labels()
            .iter()
            .all(|l| l.is_trivial() || l.generators().is_some()),
    };
    Ok((step, d.second.orbifold))
}
