use alloc::vec::Vec;

use super::multivector::{check_dim, check_modulus, Multivector, Space};
use crate::binomial;
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::linalg;

/// A subspace of `Λ^p V` or `Λ^p V^∨`, held as the reduced row-echelon basis
/// of its coordinate rows. The echelon form is unique, so derived equality is
/// equality of subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    modulus: Prime,
    dim: usize,
    degree: usize,
    space: Space,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(modulus: Prime, dim: usize, degree: usize, space: Space) -> Result<Subspace> {
        Multivector::zero(modulus, dim, degree, space)?;
        Ok(Subspace {
            modulus,
            dim,
            degree,
            space,
            rows: Vec::new(),
            pivots: Vec::new(),
        })
    }

    pub fn full(modulus: Prime, dim: usize, degree: usize, space: Space) -> Result<Subspace> {
        let n = binomial(dim, degree);
        let rows = (0..n)
            .map(|i| {
                let mut r = alloc::vec![0; n];
                r[i] = 1;
                r
            })
            .collect();
        Subspace::zero(modulus, dim, degree, space)?.with_rows(rows)
    }

    /// Span of the given elements, which must all match the ambient space.
    pub fn span(
        modulus: Prime,
        dim: usize,
        degree: usize,
        space: Space,
        generators: &[Multivector],
    ) -> Result<Subspace> {
        let mut rows = Vec::with_capacity(generators.len());
        for g in generators {
            check_modulus(modulus, g.modulus())?;
            check_dim(dim, g.dim())?;
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
            if g.space() != space {
                return Err(Error::SpaceMismatch {
                    expected: space,
                    found: g.space(),
                });
            }
            rows.push(g.to_dense());
        }
        Subspace::zero(modulus, dim, degree, space)?.with_rows(rows)
    }

    pub(crate) fn from_dense_rows(
        modulus: Prime,
        dim: usize,
        degree: usize,
        space: Space,
        rows: Vec<Vec<u32>>,
    ) -> Result<Subspace> {
        Subspace::zero(modulus, dim, degree, space)?.with_rows(rows)
    }

    fn with_rows(mut self, rows: Vec<Vec<u32>>) -> Result<Subspace> {
        let (rows, pivots) = linalg::rref(rows, self.ambient_dimension(), self.modulus);
        self.rows = rows;
        self.pivots = pivots;
        Ok(self)
    }

    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    /// Dimension of the underlying `V`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn space(&self) -> Space {
        self.space
    }

    /// `C(dim, degree)`.
    pub fn ambient_dimension(&self) -> usize {
        binomial(self.dim, self.degree)
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub(crate) fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// The echelon basis as multivectors.
    pub fn basis(&self) -> Vec<Multivector> {
        self.rows
            .iter()
            .map(|r| {
                Multivector::from_dense(self.modulus, self.dim, self.degree, self.space, r)
                    .expect("row length matches ambient dimension")
            })
            .collect()
    }

    pub fn contains(&self, w: &Multivector) -> Result<bool> {
        check_modulus(self.modulus, w.modulus())?;
        check_dim(self.dim, w.dim())?;
        if w.space() != self.space {
            return Err(Error::SpaceMismatch {
                expected: self.space,
                found: w.space(),
            });
        }
        if w.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, w.degree()));
        }
        let mut v = w.to_dense();
        linalg::reduce_against(&mut v, &self.rows, &self.pivots, self.modulus);
        Ok(v.iter().all(|&x| x == 0))
    }

    /// `Σ coeffs[i] · basis[i]`.
    pub fn combination(&self, coeffs: &[u32]) -> Multivector {
        let p = self.modulus;
        let mut acc = alloc::vec![0u32; self.ambient_dimension()];
        for (row, &c) in self.rows.iter().zip(coeffs) {
            if c == 0 {
                continue;
            }
            for (a, &x) in acc.iter_mut().zip(row) {
                *a = p.add(*a, p.mul(c, x));
            }
        }
        Multivector::from_dense(p, self.dim, self.degree, self.space, &acc)
            .expect("row length matches ambient dimension")
    }

    /// The annihilator `{f : ⟨f, s⟩ = 0 for all s ∈ self}` on the opposite
    /// side of the duality. Its dimension is `C(m, p) − dim self`.
    pub fn orthogonal_complement(&self) -> Subspace {
        let n = self.ambient_dimension();
        let null = linalg::nullspace(self.rows.clone(), n, self.modulus);
        Subspace::from_dense_rows(self.modulus, self.dim, self.degree, self.space.opposite(), null)
            .expect("ambient already validated")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extalg::Blade;

    fn e(p: Prime, dim: usize, space: Space, idx: &[usize]) -> Multivector {
        Multivector::basis(p, dim, space, Blade::from_indices(idx).unwrap()).unwrap()
    }

    #[test]
    fn complement_of_two_plane_sum() {
        let p = Prime::new(2).unwrap();
        let omega = e(p, 4, Space::Primal, &[0, 1])
            .add(&e(p, 4, Space::Primal, &[2, 3]))
            .unwrap();
        let s = Subspace::span(p, 4, 2, Space::Primal, &[omega]).unwrap();
        let perp = s.orthogonal_complement();
        assert_eq!(perp.dimension(), 5);
        assert_eq!(perp.space(), Space::Dual);
        let d = |idx: &[usize]| e(p, 4, Space::Dual, idx);
        let expected = Subspace::span(
            p,
            4,
            2,
            Space::Dual,
            &[
                d(&[0, 2]),
                d(&[0, 3]),
                d(&[1, 2]),
                d(&[1, 3]),
                d(&[0, 1]).add(&d(&[2, 3])).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(perp, expected);
    }

    #[test]
    fn complement_extremes() {
        let p = Prime::new(3).unwrap();
        let zero = Subspace::zero(p, 4, 2, Space::Primal).unwrap();
        assert_eq!(zero.orthogonal_complement(), Subspace::full(p, 4, 2, Space::Dual).unwrap());
        let full = Subspace::full(p, 4, 2, Space::Primal).unwrap();
        assert!(full.orthogonal_complement().is_zero());
    }

    #[test]
    fn span_is_canonical() {
        let p = Prime::new(3).unwrap();
        let a = e(p, 3, Space::Primal, &[0]);
        let b = e(p, 3, Space::Primal, &[1]);
        let s1 = Subspace::span(p, 3, 1, Space::Primal, &[a.clone(), b.clone()]).unwrap();
        let s2 = Subspace::span(p, 3, 1, Space::Primal, &[a.add(&b).unwrap(), a.sub(&b).unwrap()])
            .unwrap();
        assert_eq!(s1, s2);
        assert!(s1.contains(&a.scale(2)).unwrap());
        assert!(!s1.contains(&e(p, 3, Space::Primal, &[2])).unwrap());
    }
}
