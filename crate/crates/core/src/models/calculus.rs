//! Forest reduction, real loci and canonical models.

use serde::Serialize;

use super::model::{Base, BlowUpModel, Center, CenterKind};
use super::surface::SurfaceType;
use crate::error::{Error, Result};

/// One move: `child` stops being infinitely near `root` and becomes a
/// distinct base point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub root: String,
    pub child: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Total number of edges in the forest of infinitely-near centers.
pub fn forest_length(model: &BlowUpModel) -> usize {
    model
        .centers()
        .iter()
        .filter(|c| c.parent.is_some())
        .count()
}

fn is_root(model: &BlowUpModel, id: &str) -> bool {
    model
        .centers()
        .iter()
        .any(|c| c.id == id && c.parent.is_none())
}

/// Detaches the first depth-one child of the first root that has one.
/// Returns `None` when the forest is already flat.
pub fn reduction_step(model: &BlowUpModel) -> Option<(BlowUpModel, ReductionStep)> {
    let idx = model
        .centers()
        .iter()
        .position(|c| c.parent.as_deref().is_some_and(|p| is_root(model, p)))?;
    let mut next = model.clone();
    let child = &mut next.centers_mut()[idx];
    let root = child.parent.take().expect("selected center has a parent");
    let step = ReductionStep {
        root,
        child: child.id.clone(),
    };
    Some((next, step))
}

/// Flattens a blow-up of `P²` at real points into a blow-up at distinct
/// points, one detached child per step.
pub fn forest_reduce(model: &BlowUpModel) -> Result<(BlowUpModel, ReductionTrace)> {
    if model.base() != Base::P2 {
        return Err(Error::NeedsNormalization(format!(
            "base is {}, not P2",
            model.base()
        )));
    }
    if let Some(c) = model
        .centers()
        .iter()
        .find(|c| c.kind != CenterKind::RealPoint)
    {
        return Err(Error::NeedsNormalization(format!(
            "center `{}` is not a real point",
            c.id
        )));
    }
    let mut current = model.clone();
    let mut trace = ReductionTrace::default();
    while let Some((next, step)) = reduction_step(&current) {
        debug_assert_eq!(forest_length(&next) + 1, forest_length(&current));
        trace.steps.push(step);
        current = next;
    }
    Ok((current, trace))
}

pub fn base_locus(base: Base) -> SurfaceType {
    match base {
        Base::Sphere => SurfaceType::SPHERE,
        Base::P1xP1 => SurfaceType::TORUS,
        Base::P2 => SurfaceType::PROJECTIVE_PLANE,
        Base::Hirzebruch(d) if d % 2 == 0 => SurfaceType::TORUS,
        Base::Hirzebruch(_) => SurfaceType::KLEIN_BOTTLE,
    }
}

/// Topological type of the real points. Each real center adds a cross-cap;
/// conjugate pairs have no real points and change nothing.
pub fn real_locus(model: &BlowUpModel) -> SurfaceType {
    let r = u32::try_from(model.real_center_count()).expect("center count fits in u32");
    base_locus(model.base()).add_crosscaps(r)
}

/// `F_d ≅ F_{d-2}`: returns the parity representative and the number of
/// moves used to reach it.
pub fn hirzebruch_normalize(d: u32) -> (u32, u32) {
    (d % 2, d / 2)
}

/// The unique rational model of a surface, or `None` if it has none.
pub fn canonical_model(s: SurfaceType) -> Option<BlowUpModel> {
    let model = match s {
        SurfaceType::OrientableGenus(0) => BlowUpModel::bare(Base::Sphere),
        SurfaceType::OrientableGenus(1) => BlowUpModel::bare(Base::P1xP1),
        SurfaceType::OrientableGenus(_) => return None,
        SurfaceType::Nonorientable(0) => return None,
        SurfaceType::Nonorientable(1) => BlowUpModel::bare(Base::P2),
        SurfaceType::Nonorientable(2) => BlowUpModel::bare(Base::Hirzebruch(1)),
        SurfaceType::Nonorientable(k) => {
            let centers = (1..=k - 2).map(|i| Center::real(format!("O{i}"))).collect();
            BlowUpModel::new(Base::P1xP1, centers).expect("flat centers with distinct ids")
        }
    };
    Some(model)
}

/// Rational models are isomorphic exactly when their real loci are
/// diffeomorphic.
pub fn models_isomorphic(a: &BlowUpModel, b: &BlowUpModel) -> bool {
    real_locus(a) == real_locus(b)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub real_locus: SurfaceType,
    pub canonical: Option<BlowUpModel>,
    /// Present only for blow-ups of `P²` at real points.
    pub reduced: Option<BlowUpModel>,
    pub trace: Option<ReductionTrace>,
}

pub fn classify(model: &BlowUpModel) -> Classification {
    let real_locus = real_locus(model);
    let (reduced, trace) = match forest_reduce(model) {
        Ok((m, t)) => (Some(m), Some(t)),
        Err(_) => (None, None),
    };
    Classification {
        real_locus,
        canonical: canonical_model(real_locus),
        reduced,
        trace,
    }
}
