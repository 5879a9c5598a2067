//! Monomials over a fixed number of variables `x0, x1, ...`.

mod ideal;

pub use ideal::MonomialIdeal;

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// An exponent vector. The unit monomial is the all-zeros vector.
///
/// Ordering is graded: lower total degree first, ties broken so that higher
/// powers of lower-indexed variables come first (`x0x1 < x0x2 < x1x2`).
/// Serializes as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m
    }

    /// Squarefree monomial `prod_{i in vars} x_i`.
    pub fn squarefree(nvars: usize, vars: &[usize]) -> Self {
        let mut m = Monomial::one(nvars);
        for &v in vars {
            m.exps[v] = 1;
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Index of the variable if this monomial is a single variable.
    pub fn as_variable(&self) -> Option<usize> {
        if self.degree() == 1 {
            self.exps.iter().position(|&e| e == 1)
        } else {
            None
        }
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    fn check_ambient(&self, other: &Monomial) -> Result<()> {
        if self.nvars() == other.nvars() {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(self.nvars(), other.nvars()))
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    /// `self / gcd(self, other)`, the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    /// Exact quotient, if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(self.colon(other))
        } else {
            None
        }
    }

    /// The same monomial in a ring with `nvars >= self.nvars()` variables.
    pub fn embed(&self, nvars: usize) -> Result<Monomial> {
        if nvars < self.nvars() {
            return Err(Error::AmbientMismatch(self.nvars(), nvars));
        }
        let mut exps = self.exps.clone();
        exps.resize(nvars, 0);
        Ok(Monomial { exps })
    }

    /// Parses `x0^2*x1` (or `1`) as a monomial in `nvars` variables.
    pub fn parse(text: &str, nvars: usize) -> Result<Monomial> {
        let mut m = Monomial::one(nvars);
        let text = text.trim();
        if text == "1" {
            return Ok(m);
        }
        let bad = || Error::MonomialParse(text.to_string());
        for factor in text.split('*') {
            let factor = factor.trim();
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (v.trim(), e.trim().parse::<u32>().map_err(|_| bad())?),
                None => (factor, 1),
            };
            let idx: usize = var
                .strip_prefix('x')
                .and_then(|s| s.parse().ok())
                .ok_or_else(bad)?;
            if idx >= nvars {
                return Err(Error::MonomialParse(format!(
                    "{text}: variable x{idx} outside {nvars} variables"
                )));
            }
            m.exps[idx] = m.exps[idx].checked_add(exp).ok_or(Error::ExponentOverflow)?;
        }
        Ok(m)
    }

    /// Largest variable index mentioned in `text`, plus one.
    pub fn infer_nvars(text: &str) -> usize {
        text.split(|c: char| !c.is_ascii_alphanumeric())
            .filter_map(|t| t.strip_prefix('x')?.parse::<usize>().ok())
            .map(|i| i + 1)
            .max()
            .unwrap_or(0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
