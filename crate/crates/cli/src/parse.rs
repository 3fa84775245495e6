//! Parsing of complex numbers and lists given on the command line.

use regprod::Complex64;

use crate::CliError;

/// Parses "a+bi", "a-bi", "bi", "a", "i" or "(a,b)". A trailing `j` is
/// accepted in place of `i`.
pub fn parse_complex(text: &str) -> Result<Complex64, CliError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || CliError::Usage(format!("cannot parse complex number '{text}'"));
    if s.is_empty() {
        return Err(bad());
    }
    let value = if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        let (re, im) = inner.split_once(',').ok_or_else(bad)?;
        Complex64::new(
            parse_real(re).ok_or_else(bad)?,
            parse_real(im).ok_or_else(bad)?,
        )
    } else if let Some(body) = s.strip_suffix(['i', 'j']) {
        match split_point(body) {
            Some(p) => Complex64::new(
                parse_real(&body[..p]).ok_or_else(bad)?,
                parse_unit(&body[p..]).ok_or_else(bad)?,
            ),
            None => Complex64::new(0.0, parse_unit(body).ok_or_else(bad)?),
        }
    } else {
        Complex64::new(parse_real(&s).ok_or_else(bad)?, 0.0)
    };
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(bad())
    }
}

/// Index of the sign separating real and imaginary parts, skipping a
/// leading sign and exponent signs.
fn split_point(body: &str) -> Option<usize> {
    let bytes = body.as_bytes();
    (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'))
}

fn parse_real(s: &str) -> Option<f64> {
    if s.chars()
        .any(|c| c.is_ascii_alphabetic() && c != 'e' && c != 'E')
    {
        return None;
    }
    s.parse::<f64>().ok()
}

/// Imaginary coefficient, where a bare sign means ±1.
fn parse_unit(s: &str) -> Option<f64> {
    match s {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        _ => parse_real(s),
    }
}

/// Splits on commas outside parentheses.
pub fn split_list(text: &str) -> Vec<String> {
    let mut items = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                items.push(std::mem::take(&mut current));
                continue;
            }
            _ => {}
        }
        current.push(ch);
    }
    items.push(current);
    items.into_iter().map(|s| s.trim().to_string()).collect()
}

pub fn parse_complex_list(text: &str) -> Result<Vec<Complex64>, CliError> {
    split_list(text).iter().map(|s| parse_complex(s)).collect()
}

/// Positive integer sizes such as "1e3" or "2000".
pub fn parse_sizes(text: &str) -> Result<Vec<usize>, CliError> {
    split_list(text)
        .iter()
        .map(|s| {
            let v: f64 = s
                .parse()
                .map_err(|_| CliError::Usage(format!("cannot parse size '{s}'")))?;
            if v >= 1.0 && v.fract() == 0.0 && v <= 1e9 {
                Ok(v as usize)
            } else {
                Err(CliError::Usage(format!(
                    "size '{s}' must be a positive integer ≤ 1e9"
                )))
            }
        })
        .collect()
}
