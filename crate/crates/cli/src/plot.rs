//! CSV samples of a torus map over a rational grid.

use num::BigRational;

use realmodels::arith::parse_rational;
use realmodels::torus::{certify, TorusPoint};

use crate::commands::{coord_approx, coord_text, parse_map, CliError, CliResult};

/// `lo,hi,n` → `n` evenly spaced rationals from `lo` to `hi` inclusive.
pub fn parse_grid(spec: &str) -> CliResult<Vec<BigRational>> {
    let bad = || CliError::Input(format!("bad grid `{spec}`, expected lo,hi,n"));
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    let [lo, hi, n] = parts.as_slice() else {
        return Err(bad());
    };
    let lo = parse_rational(lo)?;
    let hi = parse_rational(hi)?;
    let n: usize = n.parse().map_err(|_| bad())?;
    if n == 0 || (n > 1 && lo >= hi) {
        return Err(bad());
    }
    if n == 1 {
        return Ok(vec![lo]);
    }
    let step = (&hi - &lo) / BigRational::from_integer((n - 1).into());
    Ok((0..n)
        .map(|i| &lo + &step * BigRational::from_integer(i.into()))
        .collect())
}

pub fn plot(input: &str, grid: &str) -> CliResult<String> {
    let map = parse_map(input)?;
    let cert = certify(&map);
    if !cert.valid {
        return Err(CliError::Certification(
            "refusing to plot an uncertified map".into(),
        ));
    }
    let axis = parse_grid(grid)?;

    let mut w = csv::Writer::from_writer(Vec::new());
    let io_err = |e: csv::Error| CliError::Input(e.to_string());
    w.write_record([
        "x_in",
        "y_in",
        "x_out",
        "y_out",
        "x_out_approx",
        "y_out_approx",
    ])
    .map_err(io_err)?;
    for x in &axis {
        for y in &axis {
            let p = TorusPoint::affine(x, y);
            let q = map.apply(&p);
            w.write_record([
                coord_text(&p.x),
                coord_text(&p.y),
                coord_text(&q.x),
                coord_text(&q.y),
                coord_approx(&q.x).to_string(),
                coord_approx(&q.y).to_string(),
            ])
            .map_err(io_err)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| CliError::Input(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Input(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid() {
        let g = parse_grid("0,1,3").unwrap();
        assert_eq!(
            g.iter().map(ToString::to_string).collect::<Vec<_>>(),
            ["0", "1/2", "1"]
        );
        assert_eq!(parse_grid("5,5,1").unwrap().len(), 1);
        for bad in ["1,0,3", "0,1", "0,1,0", "a,1,2"] {
            assert!(parse_grid(bad).is_err(), "{bad}");
        }
    }
}
