use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Compact connected topological surface, up to diffeomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurfaceType {
    /// Orientable surface of genus `g`.
    OrientableGenus(u32),
    /// Connected sum of `k >= 1` real projective planes.
    Nonorientable(u32),
}

impl SurfaceType {
    pub fn nonorientable(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidSurface(
                "a nonorientable surface needs k >= 1".into(),
            ));
        }
        Ok(SurfaceType::Nonorientable(k))
    }

    pub const SPHERE: SurfaceType = SurfaceType::OrientableGenus(0);
    pub const TORUS: SurfaceType = SurfaceType::OrientableGenus(1);
    pub const PROJECTIVE_PLANE: SurfaceType = SurfaceType::Nonorientable(1);
    pub const KLEIN_BOTTLE: SurfaceType = SurfaceType::Nonorientable(2);

    /// Connected sum with `r` copies of the real projective plane.
    pub fn add_crosscaps(self, r: u32) -> SurfaceType {
        if r == 0 {
            return self;
        }
        match self {
            SurfaceType::OrientableGenus(g) => SurfaceType::Nonorientable(2 * g + r),
            SurfaceType::Nonorientable(k) => SurfaceType::Nonorientable(k + r),
        }
    }
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceType::OrientableGenus(g) => write!(f, "OrientableGenus({g})"),
            SurfaceType::Nonorientable(k) => write!(f, "Nonorientable({k})"),
        }
    }
}

impl FromStr for SurfaceType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let arg = |prefix: &str| -> Option<u32> {
            s.strip_prefix(prefix)?
                .strip_prefix('(')?
                .strip_suffix(')')?
                .trim()
                .parse()
                .ok()
        };
        if let Some(g) = arg("OrientableGenus") {
            Ok(SurfaceType::OrientableGenus(g))
        } else if let Some(k) = arg("Nonorientable") {
            SurfaceType::nonorientable(k)
        } else {
            Err(Error::Parse(format!("unknown surface type `{s}`")))
        }
    }
}

impl Serialize for SurfaceType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
