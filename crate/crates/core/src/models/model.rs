//! Blow-up models: a base surface plus an ordered forest of blow-up centers.
//!
//! Text grammar:
//!
//! ```text
//! base (P2 | S2 | P1xP1 | F<d>) [; centers [ id(kind[, parent=id]), ... ]]
//! ```
//!
//! where `kind` is `real` or `conj` (a pair of complex conjugate points).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    P2,
    /// The quadric sphere `x² + y² + z² = 1`.
    Sphere,
    P1xP1,
    /// Real Hirzebruch surface `F_d`.
    Hirzebruch(u32),
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::P2 => f.write_str("P2"),
            Base::Sphere => f.write_str("S2"),
            Base::P1xP1 => f.write_str("P1xP1"),
            Base::Hirzebruch(d) => write!(f, "F{d}"),
        }
    }
}

impl FromStr for Base {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "P2" => Ok(Base::P2),
            "S2" => Ok(Base::Sphere),
            "P1xP1" => Ok(Base::P1xP1),
            other => other
                .strip_prefix('F')
                .and_then(|d| d.parse().ok())
                .map(Base::Hirzebruch)
                .ok_or_else(|| Error::Parse(format!("unknown base `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CenterKind {
    #[serde(rename = "real")]
    RealPoint,
    #[serde(rename = "conj")]
    ConjugatePair,
}

impl fmt::Display for CenterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CenterKind::RealPoint => "real",
            CenterKind::ConjugatePair => "conj",
        })
    }
}

impl FromStr for CenterKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "real" => Ok(CenterKind::RealPoint),
            "conj" | "conjugate" | "pair" => Ok(CenterKind::ConjugatePair),
            other => Err(Error::Parse(format!("unknown center kind `{other}`"))),
        }
    }
}

/// A blow-up center. A center with a parent is infinitely near: it lies on
/// the exceptional divisor of its parent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Center {
    pub id: String,
    pub kind: CenterKind,
    #[serde(default)]
    pub parent: Option<String>,
}

impl Center {
    pub fn real(id: impl Into<String>) -> Self {
        Center {
            id: id.into(),
            kind: CenterKind::RealPoint,
            parent: None,
        }
    }

    pub fn conj(id: impl Into<String>) -> Self {
        Center {
            id: id.into(),
            kind: CenterKind::ConjugatePair,
            parent: None,
        }
    }

    pub fn on(mut self, parent: impl Into<String>) -> Self {
        self.parent = Some(parent.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ModelWire", into = "ModelWire")]
pub struct BlowUpModel {
    base: Base,
    centers: Vec<Center>,
}

impl BlowUpModel {
    /// Validates that parents precede their children, ids are unique and
    /// nonreal centers only carry nonreal children.
    pub fn new(base: Base, centers: Vec<Center>) -> Result<Self> {
        let mut seen: HashMap<&str, CenterKind> = HashMap::new();
        for c in &centers {
            if c.id.is_empty() || !c.id.chars().all(|ch| ch.is_alphanumeric() || ch == '_') {
                return Err(Error::InvalidModel(format!("bad center id `{}`", c.id)));
            }
            if let Some(p) = &c.parent {
                match seen.get(p.as_str()) {
                    None => {
                        return Err(Error::InvalidModel(format!(
                            "parent `{p}` of `{}` is not an earlier center",
                            c.id
                        )))
                    }
                    Some(CenterKind::ConjugatePair) if c.kind == CenterKind::RealPoint => {
                        return Err(Error::InvalidModel(format!(
                            "real center `{}` cannot lie over the nonreal center `{p}`",
                            c.id
                        )))
                    }
                    Some(_) => {}
                }
            }
            if seen.insert(&c.id, c.kind).is_some() {
                return Err(Error::InvalidModel(format!(
                    "duplicate center id `{}`",
                    c.id
                )));
            }
        }
        Ok(BlowUpModel { base, centers })
    }

    pub fn bare(base: Base) -> Self {
        BlowUpModel {
            base,
            centers: Vec::new(),
        }
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn centers(&self) -> &[Center] {
        &self.centers
    }

    pub fn real_center_count(&self) -> usize {
        self.centers
            .iter()
            .filter(|c| c.kind == CenterKind::RealPoint)
            .count()
    }

    /// Appends a center, validating it against the existing ones.
    pub fn with_center(&self, c: Center) -> Result<Self> {
        let mut centers = self.centers.clone();
        centers.push(c);
        BlowUpModel::new(self.base, centers)
    }

    pub(crate) fn centers_mut(&mut self) -> &mut Vec<Center> {
        &mut self.centers
    }
}

impl fmt::Display for BlowUpModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "base {}", self.base)?;
        if self.centers.is_empty() {
            return Ok(());
        }
        f.write_str("; centers [")?;
        for (i, c) in self.centers.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}({}", c.id, c.kind)?;
            if let Some(p) = &c.parent {
                write!(f, ", parent={p}")?;
            }
            f.write_str(")")?;
        }
        f.write_str("]")
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out.into_iter()
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .collect()
}

fn parse_center(item: &str) -> Result<Center> {
    let bad = || {
        Error::Parse(format!(
            "bad center `{item}`, expected id(kind[, parent=id])"
        ))
    };
    let (id, rest) = item.split_once('(').ok_or_else(bad)?;
    let inner = rest.trim().strip_suffix(')').ok_or_else(bad)?;
    let mut parts = inner.split(',').map(str::trim);
    let kind = parts.next().ok_or_else(bad)?.parse()?;
    let parent = parts.next().map(|p| {
        p.strip_prefix("parent")
            .map_or(p, |r| r.trim_start().trim_start_matches('=').trim())
            .to_string()
    });
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(Center {
        id: id.trim().to_string(),
        kind,
        parent,
    })
}

impl FromStr for BlowUpModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut sections = s.split(';').map(str::trim).filter(|t| !t.is_empty());
        let base = sections
            .next()
            .and_then(|b| b.strip_prefix("base"))
            .ok_or_else(|| Error::Parse("model must start with `base`".into()))?
            .parse()?;
        let centers = match sections.next() {
            None => Vec::new(),
            Some(sec) => {
                let list = sec
                    .strip_prefix("centers")
                    .map(str::trim)
                    .and_then(|l| l.strip_prefix('['))
                    .and_then(|l| l.strip_suffix(']'))
                    .ok_or_else(|| {
                        Error::Parse(format!("expected `centers [...]`, got `{sec}`"))
                    })?;
                split_top_level(list)
                    .into_iter()
                    .map(parse_center)
                    .collect::<Result<Vec<_>>>()?
            }
        };
        if let Some(extra) = sections.next() {
            return Err(Error::Parse(format!("unexpected section `{extra}`")));
        }
        BlowUpModel::new(base, centers)
    }
}

#[derive(Serialize, Deserialize)]
struct ModelWire {
    base: String,
    #[serde(default)]
    centers: Vec<Center>,
}

impl TryFrom<ModelWire> for BlowUpModel {
    type Error = Error;

    fn try_from(w: ModelWire) -> Result<Self> {
        BlowUpModel::new(w.base.parse()?, w.centers)
    }
}

impl From<BlowUpModel> for ModelWire {
    fn from(m: BlowUpModel) -> Self {
        ModelWire {
            base: m.base.to_string(),
            centers: m.centers,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grammar() {
        let m: BlowUpModel = "base P2; centers [a(real), b(real,parent=a)]"
            .parse()
            .unwrap();
        assert_eq!(m.base(), Base::P2);
        assert_eq!(m.centers(), &[Center::real("a"), Center::real("b").on("a")]);
        assert_eq!(
            m.to_string(),
            "base P2; centers [a(real), b(real, parent=a)]"
        );
        assert_eq!(m.to_string().parse::<BlowUpModel>().unwrap(), m);

        let f: BlowUpModel = "base F7".parse().unwrap();
        assert_eq!(f, BlowUpModel::bare(Base::Hirzebruch(7)));
        let s: BlowUpModel = "base S2; centers []".parse().unwrap();
        assert_eq!(s, BlowUpModel::bare(Base::Sphere));
        let c: BlowUpModel = "base P1xP1; centers [z(conj), w(conj, z)]".parse().unwrap();
        assert_eq!(c.centers()[1].parent.as_deref(), Some("z"));
    }

    #[test]
    fn rejects_bad_text() {
        for bad in [
            "",
            "P2",
            "base P3",
            "base P2; centers a(real)",
            "base P2; centers [a(imaginary)]",
            "base P2; centers [a(real, parent=b)]",
            "base P2; centers [a(real), a(real)]",
            "base P2; centers [a(conj), b(real, parent=a)]",
            "base P2; centers [a(real)]; extra",
        ] {
            assert!(bad.parse::<BlowUpModel>().is_err(), "{bad}");
        }
    }

    #[test]
    fn json_mirror() {
        let m: BlowUpModel = "base F3; centers [a(real), b(conj)]".parse().unwrap();
        let j = serde_json::to_string(&m).unwrap();
        assert_eq!(
            j,
            r#"{"base":"F3","centers":[{"id":"a","kind":"real","parent":null},{"id":"b","kind":"conj","parent":null}]}"#
        );
        assert_eq!(serde_json::from_str::<BlowUpModel>(&j).unwrap(), m);
        let bad = r#"{"base":"P2","centers":[{"id":"a","kind":"real","parent":"zz"}]}"#;
        assert!(serde_json::from_str::<BlowUpModel>(bad).is_err());
    }
}
