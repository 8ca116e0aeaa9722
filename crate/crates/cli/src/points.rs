use macdonald_core::combin::{bar_point, tilde_point, IntVector};
use macdonald_core::exactalg::Point;
use macdonald_core::families::{ainvtau_point, atau_point, tau_point};

/// Parses a named evaluation point in `n` variables: `atau`, `ainvtau`,
/// `tau`, `bar:<v>`, `tilde:<v>` or `barinv:<v>`.
pub fn parse_point(spec: &str, n: usize) -> Result<Point, String> {
    let vector = |s: &str| -> Result<IntVector, String> {
        let v: IntVector = s.parse().map_err(|_| format!("malformed index vector `{s}` in point `{spec}`"))?;
        if v.n() != n {
            return Err(format!("point `{spec}` has {} coordinates, expected {n}", v.n()));
        }
        Ok(v)
    };
    match spec.split_once(':') {
        None => match spec {
            "atau" => Ok(atau_point(n)),
            "ainvtau" => Ok(ainvtau_point(n)),
            "tau" => Ok(tau_point(n)),
            _ => Err(unknown(spec)),
        },
        Some(("bar", v)) => Ok(bar_point(&vector(v)?)),
        Some(("tilde", v)) => Ok(tilde_point(&vector(v)?)),
        Some(("barinv", v)) => Ok(bar_point(&vector(v)?).inverse()),
        Some(_) => Err(unknown(spec)),
    }
}

fn unknown(spec: &str) -> String {
    format!("unknown point `{spec}`; expected atau, ainvtau, tau, bar:<v>, tilde:<v> or barinv:<v>")
}

#[cfg(test)]
mod tests {
    use super::*;
    use macdonald_core::exactalg::FieldElem;

    #[test]
    fn named_points() {
        let p = parse_point("barinv:0,1", 2).unwrap();
        assert_eq!(p.coords(), &[FieldElem::qta(0, 1, 0), FieldElem::qta(-1, 0, 0)]);
        assert_eq!(parse_point("tilde:0,0", 2).unwrap(), parse_point("tau", 2).unwrap());
        let scaled = parse_point("tau", 2).unwrap().scaled(&FieldElem::a());
        assert_eq!(scaled, parse_point("atau", 2).unwrap());
        assert!(parse_point("bar:1,0,0", 2).is_err());
        assert!(parse_point("atau:1", 2).is_err());
    }
}
