//! Literal parsing and output formatting for the CLI: "a+bi" complex
//! literals, {re, im} JSON objects, and 12-significant-digit CSV fields.

use num_complex::Complex64;
use serde::Serialize;

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        ComplexJson { re: z.re, im: z.im }
    }
}

/// Parses "a+bi" style literals: "0", "1.5", "-2i", "i", "0.3-0.4i", "1e-3+2e-2i".
pub fn parse_complex(input: &str) -> Result<Complex64, String> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty complex literal".into());
    }
    if let Some(body) = s.strip_suffix('i') {
        // Split a±bi at the sign that starts the imaginary part: the last
        // '+'/'-' that is not the leading sign and not an exponent sign.
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let c = bytes[idx] as char;
            if (c == '+' || c == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
                split = Some(idx);
                break;
            }
        }
        let (re_part, im_part) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("0", body),
        };
        let im = match im_part {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other
                .parse::<f64>()
                .map_err(|_| format!("bad imaginary part in '{input}'"))?,
        };
        let re = if re_part.is_empty() {
            0.0
        } else {
            re_part
                .parse::<f64>()
                .map_err(|_| format!("bad real part in '{input}'"))?
        };
        Ok(Complex64::new(re, im))
    } else {
        let re = s
            .parse::<f64>()
            .map_err(|_| format!("bad complex literal '{input}'"))?;
        Ok(Complex64::new(re, 0.0))
    }
}

/// 12 significant digits, scientific notation.
pub fn sig12(x: f64) -> String {
    format!("{:.11e}", x)
}

/// Parses a "key=value" family parameter argument.
pub fn parse_param(arg: &str) -> Result<(String, f64), String> {
    let (k, v) = arg
        .split_once('=')
        .ok_or_else(|| format!("expected key=value, got '{arg}'"))?;
    let value = v
        .parse::<f64>()
        .map_err(|_| format!("bad numeric value in '{arg}'"))?;
    Ok((k.to_string(), value))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_common_forms() {
        assert_eq!(parse_complex("0").unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(parse_complex("1.5").unwrap(), Complex64::new(1.5, 0.0));
        assert_eq!(parse_complex("-2i").unwrap(), Complex64::new(0.0, -2.0));
        assert_eq!(parse_complex("i").unwrap(), Complex64::new(0.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(
            parse_complex("0.3-0.4i").unwrap(),
            Complex64::new(0.3, -0.4)
        );
        assert_eq!(
            parse_complex("1e-3+2e-2i").unwrap(),
            Complex64::new(1e-3, 2e-2)
        );
        assert_eq!(parse_complex(" 0.1 + 0.2 i ").unwrap(), Complex64::new(0.1, 0.2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_complex("").is_err());
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("1+2").is_err());
        assert!(parse_complex("1++2i").is_err());
    }

    #[test]
    fn sig12_has_twelve_digits() {
        assert_eq!(sig12(3.0), "3.00000000000e0");
        assert_eq!(sig12(0.5), "5.00000000000e-1");
    }

    #[test]
    fn param_pairs() {
        assert_eq!(parse_param("t=0.5").unwrap(), ("t".to_string(), 0.5));
        assert!(parse_param("t").is_err());
        assert!(parse_param("t=x").is_err());
    }
}
