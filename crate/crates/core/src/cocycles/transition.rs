use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{ChernCocycle, CocycleError, CoverNerve, LocalSystem};
use crate::affine::{apply_matrix, frac, AffReal, AffToral, Representation};

/// Transition label on one edge.
///
/// `drift` records, per incident triangle, how the lift of the translation
/// on that triple overlap differs from the canonical lift in `[0, 1)^n`.
/// The toral value seen on triangle `T` is `translation + drift[T] mod 1`;
/// integral drifts leave every toral value unchanged and only move the
/// obstruction cocycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLabel {
    pub transition: AffToral,
    pub drift: BTreeMap<usize, Vec<BigRational>>,
}

impl EdgeLabel {
    pub fn constant(transition: AffToral) -> Self {
        Self {
            transition,
            drift: BTreeMap::new(),
        }
    }

    /// Lift of the translation on triangle `t`.
    pub fn lift_at(&self, t: usize) -> Vec<BigRational> {
        let base = self.transition.translation();
        match self.drift.get(&t) {
            Some(d) => base.iter().zip(d).map(|(x, y)| x + y).collect(),
            None => base.to_vec(),
        }
    }
}

/// Torus-bundle transition data: an [`EdgeLabel`] per nerve edge, in the
/// edge's stored orientation, plus optional labels for the reversed
/// orientation that must be the inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionData {
    nerve: CoverNerve,
    dim: usize,
    labels: Vec<EdgeLabel>,
    reverse: BTreeMap<usize, AffToral>,
}

impl TransitionData {
    pub fn new(
        nerve: CoverNerve,
        dim: usize,
        labels: Vec<EdgeLabel>,
        reverse: BTreeMap<usize, AffToral>,
    ) -> Result<Self, CocycleError> {
        if labels.len() != nerve.edges().len() {
            return Err(CocycleError::DimensionMismatch(format!(
                "{} edges but {} labels",
                nerve.edges().len(),
                labels.len()
            )));
        }
        for (e, label) in labels.iter().enumerate() {
            if label.transition.dim() != dim {
                return Err(CocycleError::DimensionMismatch(format!(
                    "label on edge {:?} has dimension {}, expected {dim}",
                    nerve.edge_name(e),
                    label.transition.dim()
                )));
            }
            for (&t, d) in &label.drift {
                if t >= nerve.triangles().len() || !nerve.triangle_edges(t).contains(&e) {
                    return Err(CocycleError::DimensionMismatch(format!(
                        "drift on edge {:?} refers to a non-incident triangle",
                        nerve.edge_name(e)
                    )));
                }
                if d.len() != dim {
                    return Err(CocycleError::DimensionMismatch(format!(
                        "drift on edge {:?} has length {}, expected {dim}",
                        nerve.edge_name(e),
                        d.len()
                    )));
                }
            }
        }
        for (&e, label) in &reverse {
            if e >= labels.len() || label.dim() != dim {
                return Err(CocycleError::DimensionMismatch(format!(
                    "reverse label #{e} does not match the nerve"
                )));
            }
        }
        Ok(Self {
            nerve,
            dim,
            labels,
            reverse,
        })
    }

    /// Constant labels without drift or reverse labels.
    pub fn from_transitions(nerve: CoverNerve, transitions: Vec<AffToral>) -> Result<Self, CocycleError> {
        let dim = transitions.first().map_or(0, AffToral::dim);
        let labels = transitions.into_iter().map(EdgeLabel::constant).collect();
        Self::new(nerve, dim, labels, BTreeMap::new())
    }

    pub fn nerve(&self) -> &CoverNerve {
        &self.nerve
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[EdgeLabel] {
        &self.labels
    }

    pub fn label(&self, edge: usize) -> &EdgeLabel {
        &self.labels[edge]
    }

    pub fn reverse_labels(&self) -> &BTreeMap<usize, AffToral> {
        &self.reverse
    }

    /// The local system of linear parts; fails when they are not flat.
    pub fn local_system(&self) -> Result<LocalSystem, CocycleError> {
        let linear = self.labels.iter().map(|l| l.transition.linear().clone()).collect();
        LocalSystem::new(self.nerve.clone(), self.dim, linear)
    }

    /// `ĝ_{bc} + A_{bc}·ĝ_{ab} − ĝ_{ac}` on triangle `t`, with per-edge lift
    /// offsets added to the lifts.
    pub(crate) fn triangle_defect(&self, t: usize, offsets: Option<&[Vec<BigInt>]>) -> Vec<BigRational> {
        let edges = self.nerve.triangle_edges(t);
        let [ab, bc, ac] = edges.map(|e| {
            let mut lift = self.labels[e].lift_at(t);
            if let Some(off) = offsets {
                for (x, k) in lift.iter_mut().zip(&off[e]) {
                    *x += BigRational::from_integer(k.clone());
                }
            }
            lift
        });
        let moved = apply_matrix(self.labels[edges[1]].transition.linear().matrix(), &ab);
        bc.iter()
            .zip(&moved)
            .zip(&ac)
            .map(|((x, y), z)| x + y - z)
            .collect()
    }
}

/// A failed triangle identity `ψ_{cb}·ψ_{ba} = ψ_{ca}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleViolation {
    pub triangle: usize,
    pub vertices: [String; 3],
    pub linear_mismatch: bool,
    /// `g_{cb} + A_{cb}·g_{ba} − g_{ca}` reduced into `[0, 1)`.
    pub discrepancy: Vec<BigRational>,
}

/// A reverse label that is not the inverse of the forward label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeViolation {
    pub edge: usize,
    pub vertices: [String; 2],
    pub expected: AffToral,
    pub found: AffToral,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CocycleReport {
    pub triangles: Vec<TriangleViolation>,
    pub edges: Vec<EdgeViolation>,
}

impl CocycleReport {
    pub fn is_ok(&self) -> bool {
        self.triangles.is_empty() && self.edges.is_empty()
    }
}

/// Checks the toral cocycle condition on every triangle and the inverse
/// relation on every reversed label, listing all failures.
pub fn verify_cocycle(td: &TransitionData) -> CocycleReport {
    let nerve = td.nerve();
    let mut report = CocycleReport::default();
    for t in 0..nerve.triangles().len() {
        let [ab, bc, ac] = nerve.triangle_edges(t);
        let lin = |e: usize| td.labels[e].transition.linear().matrix();
        let linear_mismatch = lin(bc) * lin(ab) != *lin(ac);
        let discrepancy: Vec<BigRational> = td.triangle_defect(t, None).iter().map(frac).collect();
        if linear_mismatch || discrepancy.iter().any(|x| !x.is_zero()) {
            report.triangles.push(TriangleViolation {
                triangle: t,
                vertices: nerve.triangle_name(t),
                linear_mismatch,
                discrepancy,
            });
        }
    }
    for (&e, found) in &td.reverse {
        let expected = td.labels[e].transition.inverse();
        if &expected != found {
            let [a, b] = nerve.edge_name(e);
            report.edges.push(EdgeViolation {
                edge: e,
                vertices: [b, a],
                expected,
                found: found.clone(),
            });
        }
    }
    report
}

/// Monodromy of the linear parts around each loop of the nerve.
pub fn monodromy_of(td: &TransitionData) -> Result<Representation, CocycleError> {
    td.local_system()?.monodromy()
}

/// Chart transitions `x_b = A·x_a + c` of an integral affine atlas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineAtlas {
    pub nerve: CoverNerve,
    pub transitions: Vec<AffReal>,
}

/// Torus bundle `T^*B / Λ` of an integral affine atlas: every edge carries
/// `((A⁻¹)ᵀ, 0)`.
pub fn trivial_fstar_fibration(atlas: &AffineAtlas) -> Result<TransitionData, CocycleError> {
    let nerve = &atlas.nerve;
    if atlas.transitions.len() != nerve.edges().len() {
        return Err(CocycleError::DimensionMismatch(format!(
            "{} edges but {} atlas transitions",
            nerve.edges().len(),
            atlas.transitions.len()
        )));
    }
    let dim = atlas.transitions.first().map_or(0, AffReal::dim);
    if atlas.transitions.iter().any(|t| t.dim() != dim) {
        return Err(CocycleError::DimensionMismatch("atlas transitions differ in dimension".into()));
    }
    for t in 0..nerve.triangles().len() {
        let [ab, bc, ac] = nerve.triangle_edges(t);
        let composed = atlas.transitions[bc]
            .mul(&atlas.transitions[ab])
            .expect("dimensions agree");
        if composed != atlas.transitions[ac] {
            return Err(CocycleError::CocycleViolation(format!(
                "atlas transitions do not compose on triangle {:?}",
                nerve.triangle_name(t)
            )));
        }
    }
    let transitions = atlas
        .transitions
        .iter()
        .map(|t| AffToral::linear_only(t.linear().contragredient()))
        .collect();
    TransitionData::from_transitions(nerve.clone(), transitions)
}

/// Re-glues so that the obstruction cocycle moves by `shift` (one vector per
/// triangle) while every linear part and every toral value stays put.
pub fn twist_by_class(td: &TransitionData, shift: &[Vec<BigInt>]) -> Result<TransitionData, CocycleError> {
    let nerve = td.nerve();
    if shift.len() != nerve.triangles().len() || shift.iter().any(|v| v.len() != td.dim) {
        return Err(CocycleError::DimensionMismatch(format!(
            "shift needs {} vectors of length {}",
            nerve.triangles().len(),
            td.dim
        )));
    }
    if !nerve.tetrahedra().is_empty() {
        let cc = td.local_system()?.cech_complex();
        let image = cc.delta(3).mul_vec(&LocalSystem::flatten(shift)).expect("shapes agree");
        if image.iter().any(|x| !x.is_zero()) {
            return Err(CocycleError::Unrealizable(
                "shift is not a cocycle on this nerve".into(),
            ));
        }
    }
    let mut out = td.clone();
    for (t, s) in shift.iter().enumerate() {
        if s.iter().all(Zero::is_zero) {
            continue;
        }
        let bc = nerve.triangle_edges(t)[1];
        let drift = out.labels[bc]
            .drift
            .entry(t)
            .or_insert_with(|| vec![BigRational::zero(); td.dim]);
        for (d, k) in drift.iter_mut().zip(s) {
            *d += BigRational::from_integer(k.clone());
        }
        if drift.iter().all(Zero::is_zero) {
            out.labels[bc].drift.remove(&t);
        }
    }
    Ok(out)
}

/// Transition data with monodromy `rep` and obstruction class `[target]`.
pub fn realize_class(
    nerve: &CoverNerve,
    rep: &Representation,
    target: &ChernCocycle,
) -> Result<TransitionData, CocycleError> {
    if target.nerve() != nerve {
        return Err(CocycleError::NerveMismatch);
    }
    if target.twisting() != rep {
        return Err(CocycleError::TwistingMismatch);
    }
    let local = LocalSystem::from_representation(nerve.clone(), rep)?;
    let transitions = local
        .linear_parts()
        .iter()
        .cloned()
        .map(AffToral::linear_only)
        .collect();
    let base = TransitionData::from_transitions(nerve.clone(), transitions)?;
    twist_by_class(&base, target.values())
}
