//! Diagonal quadratic forms with signed monomial coefficients, Pfister forms,
//! small Pfister quadrics, and an exhaustive isotropy oracle over F_p.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::Prime;
use crate::monomial::{t_names, Monomial};

/// `±∏ t_j^{e_j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedMonomial {
    pub negative: bool,
    pub monomial: Monomial,
}

impl SignedMonomial {
    pub fn positive(monomial: Monomial) -> SignedMonomial {
        SignedMonomial {
            negative: false,
            monomial,
        }
    }

    pub fn negated(&self) -> SignedMonomial {
        SignedMonomial {
            negative: !self.negative,
            monomial: self.monomial.clone(),
        }
    }

    pub fn evaluate(&self, point: &[u32], p: Prime) -> Result<u32> {
        let v = self.monomial.evaluate(point, p)?;
        Ok(if self.negative { p.neg(v) } else { v })
    }
}

/// `⟨a_1, …, a_k⟩` with monomial entries; the entries are units by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagonalForm {
    num_vars: usize,
    coeffs: Vec<SignedMonomial>,
}

impl DiagonalForm {
    pub fn new(num_vars: usize, coeffs: Vec<SignedMonomial>) -> Result<DiagonalForm> {
        if let Some(bad) = coeffs.iter().find(|c| c.monomial.num_vars() != num_vars) {
            return Err(Error::DimensionMismatch(num_vars, bad.monomial.num_vars()));
        }
        Ok(DiagonalForm { num_vars, coeffs })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn coeffs(&self) -> &[SignedMonomial] {
        &self.coeffs
    }

    /// Rank of the form, i.e. the number of quadric variables.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Orthogonal sum.
    pub fn orthogonal_sum(&self, other: &DiagonalForm) -> Result<DiagonalForm> {
        if self.num_vars != other.num_vars {
            return Err(Error::DimensionMismatch(self.num_vars, other.num_vars));
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(other.coeffs.iter().cloned());
        DiagonalForm::new(self.num_vars, coeffs)
    }

    /// `Σ_i c_i x_i^2` with the given coefficient variable names, e.g.
    /// `x0^2 - a1*x1^2 - a2*x2^2`.
    pub fn polynomial(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            let sign = match (i, c.negative) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            out.push_str(sign);
            if !c.monomial.is_one() {
                out.push_str(&alloc::format!("{}*", c.monomial.display_with(names)));
            }
            out.push_str(&alloc::format!("x{i}^2"));
        }
        out
    }
}

impl fmt::Display for DiagonalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.polynomial(&t_names(self.num_vars)))
    }
}

/// `⟨⟨a_1, …, a_n⟩⟩ = ⊗_i ⟨1, −a_i⟩`.
///
/// The coefficient for the subset `T ⊆ {1..n}` is `(−1)^{|T|} ∏_{i∈T} a_i`;
/// subsets are enumerated as a binary counter with bit `i` for `a_{i+1}`.
pub fn pfister_coefficients(num_vars: usize, entries: &[Monomial]) -> Result<DiagonalForm> {
    if let Some(bad) = entries.iter().find(|a| a.num_vars() != num_vars) {
        return Err(Error::DimensionMismatch(num_vars, bad.num_vars()));
    }
    let n = entries.len();
    if n >= 32 {
        return Err(Error::CapExceeded {
            what: "Pfister form rank",
            needed: 1u128 << n.min(127),
            cap: 1 << 31,
        });
    }
    let coeffs = (0u64..1 << n)
        .map(|subset| {
            let mut monomial = Monomial::one(num_vars);
            for (i, a) in entries.iter().enumerate() {
                if subset >> i & 1 == 1 {
                    monomial = monomial.mul(a);
                }
            }
            SignedMonomial {
                negative: subset.count_ones() % 2 == 1,
                monomial,
            }
        })
        .collect();
    DiagonalForm::new(num_vars, coeffs)
}

/// The small Pfister quadric `⟨⟨a_1, …, a_{n−1}⟩⟩ ⊥ ⟨−a_n⟩ = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadricEquation {
    pub form: DiagonalForm,
    pub entries: Vec<Monomial>,
}

impl QuadricEquation {
    /// `2^{n−1} + 1`.
    pub fn variables(&self) -> usize {
        self.form.len()
    }

    /// Dimension of the projective quadric, `2^{n−1} − 1`.
    pub fn projective_dimension(&self) -> usize {
        self.form.len() - 2
    }
}

pub fn small_pfister_quadric(num_vars: usize, entries: &[Monomial]) -> Result<QuadricEquation> {
    let Some((last, head)) = entries.split_last() else {
        return Err(Error::InvalidInput("a small Pfister quadric needs at least one entry".into()));
    };
    if last.num_vars() != num_vars {
        return Err(Error::DimensionMismatch(num_vars, last.num_vars()));
    }
    let pfister = pfister_coefficients(num_vars, head)?;
    let tail = DiagonalForm::new(num_vars, alloc::vec![SignedMonomial::positive(last.clone()).negated()])?;
    Ok(QuadricEquation {
        form: pfister.orthogonal_sum(&tail)?,
        entries: entries.to_vec(),
    })
}

/// Evaluates every coefficient at `point ∈ (F_p^*)^m`.
pub fn specialize(form: &DiagonalForm, point: &[u32], p: Prime) -> Result<Vec<u32>> {
    if point.len() != form.num_vars {
        return Err(Error::DimensionMismatch(form.num_vars, point.len()));
    }
    if point.iter().any(|&x| x % p.get() == 0) {
        return Err(Error::InvalidInput("specialization point has a zero coordinate".into()));
    }
    form.coeffs.iter().map(|c| c.evaluate(point, p)).collect()
}

/// Default cap on `p^k` for [`isotropy_bruteforce`].
pub const DEFAULT_ISOTROPY_CAP: u128 = 10_000_000;

/// Lexicographically first nonzero `x ∈ F_p^k` with `Σ c_i x_i^2 = 0`, or
/// `None` if the form is anisotropic. Exhaustive.
pub fn isotropy_bruteforce(coeffs: &[u32], p: Prime, cap: u128) -> Result<Option<Vec<u32>>> {
    let k = coeffs.len();
    let count = (p.get() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if count > cap {
        return Err(Error::CapExceeded {
            what: "isotropy search space",
            needed: count,
            cap,
        });
    }
    let coeffs: Vec<u32> = coeffs.iter().map(|c| c % p.get()).collect();
    let mut x = alloc::vec![0u32; k];
    // most significant coordinate first
    loop {
        let mut carry = true;
        for d in x.iter_mut().rev() {
            *d += 1;
            if *d < p.get() {
                carry = false;
                break;
            }
            *d = 0;
        }
        if carry {
            return Ok(None);
        }
        let value = coeffs
            .iter()
            .zip(&x)
            .fold(0, |acc, (&c, &xi)| p.add(acc, p.mul(c, p.mul(xi, xi))));
        if value == 0 {
            return Ok(Some(x));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(m: usize, j: usize) -> Monomial {
        Monomial::var(m, j)
    }

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn pfister_examples() {
        let one = pfister_coefficients(1, &[a(1, 0)]).unwrap();
        assert_eq!(one.polynomial(&names(&["a"])), "x0^2 - a*x1^2");
        let two = pfister_coefficients(2, &[a(2, 0), a(2, 1)]).unwrap();
        assert_eq!(two.polynomial(&names(&["a", "b"])), "x0^2 - a*x1^2 - b*x2^2 + a*b*x3^2");
        let empty = pfister_coefficients(0, &[]).unwrap();
        assert_eq!(empty.len(), 1);
        assert_eq!(empty.polynomial(&[]), "x0^2");
    }

    #[test]
    fn small_quadric_examples() {
        let conic = small_pfister_quadric(2, &[a(2, 0), a(2, 1)]).unwrap();
        assert_eq!(conic.form.polynomial(&names(&["a1", "a2"])), "x0^2 - a1*x1^2 - a2*x2^2");
        assert_eq!(conic.variables(), 3);
        assert_eq!(conic.projective_dimension(), 1);
        let q = small_pfister_quadric(3, &[a(3, 0), a(3, 1), a(3, 2)]).unwrap();
        assert_eq!(q.variables(), 5);
        assert_eq!(q.projective_dimension(), 3);
        assert!(small_pfister_quadric(1, &[]).is_err());
    }

    #[test]
    fn specialize_examples() {
        let p = Prime::new(7).unwrap();
        let one = pfister_coefficients(1, &[a(1, 0)]).unwrap();
        assert_eq!(specialize(&one, &[2], p).unwrap(), vec![1, 5]);
        let two = pfister_coefficients(2, &[a(2, 0), a(2, 1)]).unwrap();
        assert_eq!(specialize(&two, &[2, 3], p).unwrap(), vec![1, 5, 4, 6]);
        let empty = DiagonalForm::new(1, vec![]).unwrap();
        assert_eq!(specialize(&empty, &[3], p).unwrap(), Vec::<u32>::new());
        assert!(specialize(&one, &[7], p).is_err());
    }

    #[test]
    fn isotropy_examples() {
        let p5 = Prime::new(5).unwrap();
        assert_eq!(isotropy_bruteforce(&[1, 4], p5, DEFAULT_ISOTROPY_CAP).unwrap(), Some(vec![1, 1]));
        let p7 = Prime::new(7).unwrap();
        assert_eq!(
            isotropy_bruteforce(&[1, 1, 1], p7, DEFAULT_ISOTROPY_CAP).unwrap(),
            Some(vec![1, 2, 3])
        );
        // 3 is not a square mod 7
        assert_eq!(isotropy_bruteforce(&[1, 4], p7, DEFAULT_ISOTROPY_CAP).unwrap(), None);
        assert!(isotropy_bruteforce(&[1; 9], p7, DEFAULT_ISOTROPY_CAP).unwrap_err().is_resource());
    }
}
