//! Declarative instance files: one key per line, `#` comments.
//!
//! ```text
//! label = c1
//! coeffs = 1, -4, 6, -2, 1, -2, 1      # constant term first
//! radicand = -1
//! rank_zero = true
//! rank_note = rank J(Q) = 0 and rank J^(-1)(Q) = 0 by external 2-descent
//! witness_primes = 11, 23, 31
//! side_condition = 0, -1, 0, 5, -5, 1  # constant term first
//! claimed_torsion = Z13
//! point = 0 | 1
//! point = inf+
//! mumford = 1, 1, 1 | -w, -w | 2       # a-coeffs | b-coeffs | weight
//! ```
//!
//! Coordinates over Q(sqrt(d)) are written `a`, `bw`, or `a+bw` with `w`
//! standing for sqrt(d) and a, b rationals like `-1/2`.

use std::fs;

use g2jac_core::curve::{CurvePoint, Sign};
use g2jac_core::exactfield::{QuadExt, QuadFieldDesc, Rational};
use g2jac_core::pipeline::InstanceSpec;
use g2jac_core::poly::Poly;
use g2jac_core::Genus2Curve;

pub fn parse_instance_file(path: &str) -> Result<InstanceSpec, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {}", path, e))?;
    parse_instance(&text).map_err(|e| format!("{}: {}", path, e))
}

fn parse_instance(text: &str) -> Result<InstanceSpec, String> {
    let mut label = None;
    let mut coeffs = None;
    let mut radicand = None;
    let mut rank_zero = false;
    let mut rank_note = String::new();
    let mut witness_primes = Vec::new();
    let mut side_condition = None;
    let mut claimed_torsion = String::from("?");
    let mut point_lines = Vec::new();
    let mut mumford_lines = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key = value", lineno + 1))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "label" => label = Some(value.to_string()),
            "coeffs" => coeffs = Some(parse_i64_list(value)?),
            "radicand" => radicand = Some(value.parse::<i64>().map_err(|e| e.to_string())?),
            "rank_zero" => rank_zero = value == "true",
            "rank_note" => rank_note = value.to_string(),
            "witness_primes" => {
                witness_primes = parse_i64_list(value)?.into_iter().map(|p| p as u64).collect()
            }
            "side_condition" => side_condition = Some(parse_i64_list(value)?),
            "claimed_torsion" => claimed_torsion = value.to_string(),
            "point" => point_lines.push(value.to_string()),
            "mumford" => mumford_lines.push(value.to_string()),
            other => return Err(format!("line {}: unknown key '{}'", lineno + 1, other)),
        }
    }

    let label = label.ok_or("missing 'label'")?;
    let coeffs = coeffs.ok_or("missing 'coeffs'")?;
    if coeffs.len() != 7 {
        return Err(format!("'coeffs' needs 7 entries, got {}", coeffs.len()));
    }
    let mut c = [0i64; 7];
    c.copy_from_slice(&coeffs);
    let curve = Genus2Curve::new(&label, c).map_err(|e| e.to_string())?;
    let d = radicand.ok_or("missing 'radicand'")?;
    let field = QuadFieldDesc::new(d).map_err(|e| e.to_string())?;
    let side = side_condition.ok_or("missing 'side_condition'")?;
    let side_condition = Poly::from_i64s(&g2jac_core::exactfield::rational_int(0), &side);

    let mut seed_points = Vec::new();
    for p in &point_lines {
        seed_points.push(parse_point(p, field)?);
    }
    let mut mumford_seeds = Vec::new();
    for m in &mumford_lines {
        mumford_seeds.push(parse_mumford(m, field)?);
    }

    Ok(InstanceSpec {
        curve,
        field,
        asserted_rank_zero: rank_zero,
        rank_provenance: rank_note,
        witness_primes,
        seed_points,
        mumford_seeds,
        side_condition,
        claimed_torsion,
    })
}

fn parse_i64_list(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("'{}': {}", t.trim(), e)))
        .collect()
}

fn parse_point(s: &str, field: QuadFieldDesc) -> Result<CurvePoint<QuadExt>, String> {
    match s {
        "inf+" => return Ok(CurvePoint::Infinity(Sign::Plus)),
        "inf-" => return Ok(CurvePoint::Infinity(Sign::Minus)),
        _ => {}
    }
    let (x, y) = s
        .split_once('|')
        .ok_or_else(|| format!("point '{}': expected 'x | y' or 'inf+'/'inf-'", s))?;
    Ok(CurvePoint::Affine(
        parse_quad(x.trim(), field)?,
        parse_quad(y.trim(), field)?,
    ))
}

fn parse_mumford(
    s: &str,
    field: QuadFieldDesc,
) -> Result<(Poly<QuadExt>, Poly<QuadExt>, u32), String> {
    let parts: Vec<&str> = s.split('|').map(|t| t.trim()).collect();
    if parts.len() != 3 {
        return Err(format!("mumford '{}': expected 'a-coeffs | b-coeffs | d'", s));
    }
    // Accept the labelled form the `group --kv` output uses:
    // "a: 1,1,1 | b: -w,-w | d: 2".
    let strip = |part: &'_ str, label: &str| -> String {
        part.strip_prefix(label).unwrap_or(part).trim().to_string()
    };
    let a = parse_quad_list(&strip(parts[0], "a:"), field)?;
    let b = parse_quad_list(&strip(parts[1], "b:"), field)?;
    let d = strip(parts[2], "d:").parse::<u32>().map_err(|e| e.to_string())?;
    Ok((Poly::new(a), Poly::new(b), d))
}

fn parse_quad_list(s: &str, field: QuadFieldDesc) -> Result<Vec<QuadExt>, String> {
    s.split(',').map(|t| parse_quad(t.trim(), field)).collect()
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<i64>().map_err(|e| format!("'{}': {}", s, e))?,
            d.trim().parse::<i64>().map_err(|e| format!("'{}': {}", s, e))?,
        ),
        None => (s.parse::<i64>().map_err(|e| format!("'{}': {}", s, e))?, 1),
    };
    if den == 0 {
        return Err(format!("'{}': zero denominator", s));
    }
    Ok(g2jac_core::exactfield::rational(num, den))
}

/// `a`, `bw`, `a+bw`, `a-bw`; `w` alone is `1w`, `-w` is `-1w`; the w
/// coefficient may be a fraction like `-1/2w`.
fn parse_quad(s: &str, field: QuadFieldDesc) -> Result<QuadExt, String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty coordinate".into());
    }
    // Split at the last '+' or '-' that is not the leading sign and not
    // inside a fraction (fractions contain only digits and '/').
    let bytes = s.as_bytes();
    let mut split_at = None;
    for i in (1..bytes.len()).rev() {
        if bytes[i] == b'+' || bytes[i] == b'-' {
            split_at = Some(i);
            break;
        }
    }
    let (apart, bpart) = match split_at {
        Some(i) if s.ends_with('w') => (&s[..i], &s[i..]),
        _ => {
            if s.ends_with('w') {
                ("", s.as_str())
            } else {
                (s.as_str(), "")
            }
        }
    };
    let a = if apart.is_empty() {
        g2jac_core::exactfield::rational(0, 1)
    } else {
        parse_rational(apart)?
    };
    let b = if bpart.is_empty() {
        g2jac_core::exactfield::rational(0, 1)
    } else {
        let w = bpart.strip_suffix('w').ok_or_else(|| format!("'{}': expected w-term", s))?;
        match w {
            "" | "+" => g2jac_core::exactfield::rational(1, 1),
            "-" => g2jac_core::exactfield::rational(-1, 1),
            frac => {
                let frac = frac.strip_suffix('*').unwrap_or(frac);
                parse_rational(frac)?
            }
        }
    };
    Ok(field.elem(a, b))
}

/// Coefficient-list rendering used by the machine-readable outputs.
pub fn quad_coeff_string(x: &QuadExt) -> String {
    if x.surd_part() == &g2jac_core::exactfield::rational(0, 1) {
        format!("{}", x.rational_part())
    } else if x.rational_part() == &g2jac_core::exactfield::rational(0, 1) {
        format!("{}w", x.surd_part())
    } else {
        format!("{}+{}w", x.rational_part(), x.surd_part())
    }
}

pub fn poly_coeff_string(p: &Poly<QuadExt>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = p.coeffs().iter().map(quad_coeff_string).collect();
    parts.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quad_coordinate_syntax() {
        let k = QuadFieldDesc::new(-3).unwrap();
        let q = |a: (i64, i64), b: (i64, i64)| {
            k.elem(
                g2jac_core::exactfield::rational(a.0, a.1),
                g2jac_core::exactfield::rational(b.0, b.1),
            )
        };
        assert_eq!(parse_quad("0", k).unwrap(), q((0, 1), (0, 1)));
        assert_eq!(parse_quad("-1/2", k).unwrap(), q((-1, 2), (0, 1)));
        assert_eq!(parse_quad("w", k).unwrap(), q((0, 1), (1, 1)));
        assert_eq!(parse_quad("-w", k).unwrap(), q((0, 1), (-1, 1)));
        assert_eq!(parse_quad("-1/2-1/2w", k).unwrap(), q((-1, 2), (-1, 2)));
        assert_eq!(parse_quad("2+3w", k).unwrap(), q((2, 1), (3, 1)));
        assert_eq!(parse_quad("-3/2+1/2w", k).unwrap(), q((-3, 2), (1, 2)));
        assert!(parse_quad("", k).is_err());
    }

    #[test]
    fn full_instance_roundtrip() {
        let text = "
# c2 over Q(sqrt(-3))
label = c2
coeffs = 1, 4, 10, 10, 5, 2, 1
radicand = -3
rank_zero = true
rank_note = externally computed
witness_primes = 5, 11
side_condition = 0, -1, -5, -8, -6, -1, 2, 1
claimed_torsion = Z18
point = 0 | 1
point = 0 | -1
point = -1 | 1
point = -1 | -1
point = inf+
point = inf-
mumford = 1, 1, 1 | -w, -w | 2
mumford = 1 | 0, 0, -1, -1 | 2
";
        let spec = parse_instance(text).unwrap();
        assert_eq!(spec.curve.label(), "c2");
        assert_eq!(spec.field.d(), -3);
        assert_eq!(spec.witness_primes, vec![5, 11]);
        assert_eq!(spec.seed_points.len(), 6);
        assert_eq!(spec.mumford_seeds.len(), 2);
        assert!(spec.validate().is_ok());
        // The parsed instance matches the built-in one.
        let builtin = g2jac_core::pipeline::instance_c2_eisenstein();
        assert_eq!(spec.side_condition, builtin.side_condition);
        assert_eq!(spec.mumford_seeds, builtin.mumford_seeds);
    }

    #[test]
    fn mumford_lines_accept_kv_element_form() {
        let k = QuadFieldDesc::new(-3).unwrap();
        let plain = parse_mumford("1, 1, 1 | -w, -w | 2", k).unwrap();
        let labelled = parse_mumford("a: 1,1,1 | b: -1w,-1w | d: 2", k).unwrap();
        assert_eq!(plain, labelled);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_instance("label = x").is_err()); // missing coeffs
        assert!(parse_instance("junk line").is_err());
        assert!(parse_instance("label = x\ncoeffs = 1, 2\nradicand = -1\nside_condition = 1").is_err());
    }
}
