//! Laurent monomials `∏_j x_j^{e_j}` with coefficient 1.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::Prime;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<i64>,
}

impl Monomial {
    pub fn new(exponents: Vec<i64>) -> Monomial {
        Monomial { exponents }
    }

    pub fn one(num_vars: usize) -> Monomial {
        Monomial {
            exponents: alloc::vec![0; num_vars],
        }
    }

    /// The variable `x_j` (0-based).
    pub fn var(num_vars: usize, j: usize) -> Monomial {
        let mut m = Monomial::one(num_vars);
        m.exponents[j] = 1;
        m
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn exponent(&self, j: usize) -> i64 {
        self.exponents[j]
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.exponents.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self^k`.
    pub fn pow(&self, k: i64) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().map(|e| e * k).collect(),
        }
    }

    /// Value at `point` in F_p; coordinates must be nonzero.
    pub fn evaluate(&self, point: &[u32], p: Prime) -> Result<u32> {
        if point.len() != self.num_vars() {
            return Err(Error::DimensionMismatch(self.num_vars(), point.len()));
        }
        let mut acc = 1 % p.get();
        for (&x, &e) in point.iter().zip(&self.exponents) {
            let x = x % p.get();
            if x == 0 {
                return Err(Error::InvalidInput("evaluation point has a zero coordinate".into()));
            }
            let base = if e < 0 { p.inv(x).expect("nonzero") } else { x };
            acc = p.mul(acc, p.pow(base, e.unsigned_abs()));
        }
        Ok(acc)
    }

    /// Renders with the given variable names, e.g. `t1*t3^2`; `1` for the
    /// empty product.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        MonomialDisplay { monomial: self, names: Some(names) }
    }
}

/// Default variable names `t1, …, tm`.
pub fn t_names(m: usize) -> Vec<String> {
    (1..=m).map(|j| alloc::format!("t{j}")).collect()
}

struct MonomialDisplay<'a> {
    monomial: &'a Monomial,
    names: Option<&'a [String]>,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &e) in self.monomial.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            let name = match self.names {
                Some(names) => names.get(j).cloned().unwrap_or_else(|| alloc::format!("t{}", j + 1)),
                None => alloc::format!("t{}", j + 1),
            };
            f.write_str(&name)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        MonomialDisplay { monomial: self, names: None }.fmt(f)
    }
}
