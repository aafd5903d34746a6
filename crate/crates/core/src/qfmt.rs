//! Canonical `"p/q"` rendering and parsing of rationals.
//!
//! Integers render without the denominator (`"3"`, `"-2"`), everything else
//! as a reduced fraction with positive denominator (`"-3/2"`). This is the
//! one serialization used by every machine-readable surface.

use alloc::string::{String, ToString};

use num_traits::{One, Signed};

use crate::{Int, Rat};

/// Render a rational in canonical form.
pub fn render(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        let mut s = q.numer().to_string();
        s.push('/');
        s.push_str(&q.denom().to_string());
        s
    }
}

/// Parse a canonical `"p"` or `"p/q"` string.
pub fn parse(s: &str) -> Result<Rat, ParseRatError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let n: Int = num.parse().map_err(|_| ParseRatError::bad(s))?;
    let d: Int = match den {
        Some(d) => d.parse().map_err(|_| ParseRatError::bad(s))?,
        None => Int::one(),
    };
    if d.is_zero() {
        return Err(ParseRatError::bad(s));
    }
    Ok(Rat::new(n, d))
}

use num_traits::Zero;

/// Error for a malformed rational literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError {
    input: String,
}

impl ParseRatError {
    fn bad(s: &str) -> Self {
        Self { input: s.into() }
    }

    /// The offending input text.
    pub fn input(&self) -> &str {
        &self.input
    }
}

impl core::fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "malformed rational literal {:?}", self.input)
    }
}

impl core::error::Error for ParseRatError {}

/// Render a squared norm for humans: `sqrt(p/q)` unless it is a perfect
/// square of a rational, in which case the root itself is shown.
pub fn render_sqrt(sq: &Rat) -> String {
    debug_assert!(!sq.is_negative());
    if let Some(root) = exact_sqrt(sq) {
        return render(&root);
    }
    let mut s = String::from("sqrt(");
    s.push_str(&render(sq));
    s.push(')');
    s
}

fn exact_sqrt(q: &Rat) -> Option<Rat> {
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}
