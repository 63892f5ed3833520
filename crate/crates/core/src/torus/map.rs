use serde::{Deserialize, Serialize};

use super::moves::{Axis, FiberScale, Matrix2, MoebiusPair, Move};
use super::point::TorusPoint;
use crate::arith::{Poly, RatLit};
use crate::error::{Error, Result};

/// Composition of elementary moves, applied first to last. The empty list
/// is the identity.
///
/// Maps are never expanded into a single bivariate rational map: the
/// degree of a composite grows multiplicatively with every scaling.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(from = "MapWire", into = "MapWire")]
pub struct TorusMap {
    moves: Vec<Move>,
}

impl TorusMap {
    pub fn identity() -> Self {
        TorusMap::default()
    }

    /// Builds a map after certifying every move.
    pub fn from_moves(moves: Vec<Move>) -> Result<Self> {
        let map = TorusMap { moves };
        let cert = certify(&map);
        match cert.first_failure() {
            None => Ok(map),
            Some(c) => Err(Error::CertificationFailed {
                index: c.index,
                reason: c.problems.join("; "),
            }),
        }
    }

    pub fn from_moves_unchecked(moves: Vec<Move>) -> Self {
        TorusMap { moves }
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn push(&mut self, mv: impl Into<Move>) {
        self.moves.push(mv.into());
    }

    /// `other ∘ self`: apply `self` first, then `other`.
    pub fn then(mut self, other: &TorusMap) -> TorusMap {
        self.moves.extend(other.moves.iter().cloned());
        self
    }

    /// Applies the moves in order.
    ///
    /// # Panics
    ///
    /// Only for maps built with unchecked constructors that fail
    /// certification; use [`TorusMap::try_apply`] for those.
    pub fn apply(&self, pt: &TorusPoint) -> TorusPoint {
        self.try_apply(pt)
            .expect("certified maps are defined at every real point")
    }

    pub fn try_apply(&self, pt: &TorusPoint) -> Result<TorusPoint> {
        let mut cur = pt.clone();
        for (i, mv) in self.moves.iter().enumerate() {
            cur = mv.apply(&cur).ok_or(Error::Indeterminate(i))?;
        }
        Ok(cur)
    }

    pub fn invert(&self) -> TorusMap {
        TorusMap {
            moves: self.moves.iter().rev().map(Move::inverse).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoveCheck {
    pub index: usize,
    pub kind: &'static str,
    pub valid: bool,
    pub problems: Vec<String>,
}

/// Per-move verification report for a [`TorusMap`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub valid: bool,
    pub checks: Vec<MoveCheck>,
}

impl Certificate {
    pub fn first_failure(&self) -> Option<&MoveCheck> {
        self.checks.iter().find(|c| !c.valid)
    }

    pub fn verdict(&self) -> &'static str {
        if self.valid {
            "valid"
        } else {
            "invalid"
        }
    }
}

/// Re-verifies every move: equal degrees, no real roots and positive
/// leading coefficients for scalings, nonzero determinants for Möbius pairs.
pub fn certify(map: &TorusMap) -> Certificate {
    let checks: Vec<MoveCheck> = map
        .moves
        .iter()
        .enumerate()
        .map(|(index, mv)| {
            let problems = mv.problems();
            MoveCheck {
                index,
                kind: mv.kind(),
                valid: problems.is_empty(),
                problems,
            }
        })
        .collect();
    Certificate {
        valid: checks.iter().all(|c| c.valid),
        checks,
    }
}

#[derive(Serialize, Deserialize)]
struct MapWire {
    moves: Vec<MoveWire>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum MoveWire {
    ScaleY {
        p: Poly,
        q: Poly,
    },
    ScaleX {
        p: Poly,
        q: Poly,
    },
    Moebius {
        mx: [[RatLit; 2]; 2],
        my: [[RatLit; 2]; 2],
    },
}

fn to_wire(m: &Matrix2) -> [[RatLit; 2]; 2] {
    m.clone().map(|row| row.map(RatLit))
}

fn from_wire(m: [[RatLit; 2]; 2]) -> Matrix2 {
    m.map(|row| row.map(|r| r.0))
}

impl From<TorusMap> for MapWire {
    fn from(map: TorusMap) -> Self {
        let moves = map
            .moves
            .iter()
            .map(|mv| match mv {
                Move::Scale(s) => {
                    let (p, q) = (s.p().clone(), s.q().clone());
                    match s.axis() {
                        Axis::ScaleY => MoveWire::ScaleY { p, q },
                        Axis::ScaleX => MoveWire::ScaleX { p, q },
                    }
                }
                Move::Moebius(m) => MoveWire::Moebius {
                    mx: to_wire(m.mx()),
                    my: to_wire(m.my()),
                },
            })
            .collect();
        MapWire { moves }
    }
}

impl From<MapWire> for TorusMap {
    fn from(w: MapWire) -> Self {
        let moves = w
            .moves
            .into_iter()
            .map(|mv| match mv {
                MoveWire::ScaleY { p, q } => FiberScale::new_unchecked(Axis::ScaleY, p, q).into(),
                MoveWire::ScaleX { p, q } => FiberScale::new_unchecked(Axis::ScaleX, p, q).into(),
                MoveWire::Moebius { mx, my } => {
                    MoebiusPair::new_unchecked(from_wire(mx), from_wire(my)).into()
                }
            })
            .collect();
        TorusMap { moves }
    }
}
