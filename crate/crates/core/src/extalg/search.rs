//! Deterministic search for a basis of pure wedges.
//!
//! The search runs in three phases and stops as soon as the span is complete:
//!
//! 1. index-basis wedges `e_J` that lie in the target, in lexicographic order;
//! 2. for pairs of index tuples `A < B` whose basis wedges are *not* in the
//!    target, wedges `∧_i (e_{a_i} + c_i e_{b_i})` pairing the tuples
//!    position by position, with `c` running over `(F_ℓ^*)^k` in counter order;
//! 3. a breadth-first widening over wedges of normalized vectors whose
//!    support grows from one index up to the full dimension.
//!
//! A candidate is kept only if it lies in the target and is independent of
//! everything kept so far, so the output length equals the target dimension.

use alloc::vec::Vec;

use super::blade::{blades, Blade};
use super::multivector::{wedge_all, Multivector, Space, Vector};
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::linalg::Echelon;

/// Default number of candidates examined before the search gives up.
pub const DEFAULT_SEARCH_CAP: u64 = 1 << 22;

/// A basis element together with the vectors it is the wedge of.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureElement {
    pub element: Multivector,
    pub factors: Vec<Vector>,
}

struct Search<'a> {
    target: &'a Subspace,
    found: Echelon,
    out: Vec<PureElement>,
    examined: u64,
    cap: u64,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.out.len() == self.target.dimension()
    }

    fn tick(&mut self) -> Result<()> {
        self.examined += 1;
        if self.examined > self.cap {
            return Err(self.exhausted());
        }
        Ok(())
    }

    fn exhausted(&self) -> Error {
        Error::SearchExhausted {
            examined: self.examined,
            found: self.out.len(),
            target: self.target.dimension(),
        }
    }

    fn offer(&mut self, factors: Vec<Vector>, element: Multivector) -> Result<bool> {
        if element.is_zero() || !self.target.contains(&element)? {
            return Ok(false);
        }
        if self.found.insert(&element.to_dense()) {
            self.out.push(PureElement { element, factors });
            return Ok(true);
        }
        Ok(false)
    }
}

/// A basis of `target` made of pure wedges, each with its factors.
///
/// Fails with [`Error::SearchExhausted`] (reporting the number of candidates
/// examined) when `cap` candidates do not complete the span.
pub fn pure_wedge_basis(target: &Subspace, cap: u64) -> Result<Vec<PureElement>> {
    let p = target.modulus();
    let m = target.dim();
    let n = target.degree();
    let space = target.space();
    let mut search = Search {
        target,
        found: Echelon::new(target.ambient_dimension(), p),
        out: Vec::new(),
        examined: 0,
        cap,
    };
    if search.done() {
        return Ok(search.out);
    }

    let mut uncovered = Vec::new();
    for blade in blades(m, n) {
        search.tick()?;
        let factors: Vec<Vector> = blade.indices().map(|i| Vector::unit(p, space, m, i)).collect();
        let element = Multivector::basis(p, m, space, blade)?;
        if target.contains(&element)? {
            search.offer(factors, element)?;
            if search.done() {
                return Ok(search.out);
            }
        } else {
            uncovered.push(blade);
        }
    }

    for (k, &a) in uncovered.iter().enumerate() {
        for &b in &uncovered[k + 1..] {
            if pair_phase(&mut search, p, m, space, a, b)? {
                return Ok(search.out);
            }
        }
    }

    for width in 1..=m {
        let pool = normalized_vectors(p, m, space, width, search.cap)
            .ok_or_else(|| search.exhausted())?;
        let mut chosen = Vec::with_capacity(n);
        let unit = Multivector::scalar(p, m, space, 1)?;
        if widen(&mut search, &pool, 0, n, &mut chosen, &unit)? {
            return Ok(search.out);
        }
    }
    Err(search.exhausted())
}

fn pair_phase(
    search: &mut Search<'_>,
    p: Prime,
    m: usize,
    space: Space,
    a: Blade,
    b: Blade,
) -> Result<bool> {
    let ai: Vec<usize> = a.indices().collect();
    let bi: Vec<usize> = b.indices().collect();
    let differing: Vec<usize> = (0..ai.len()).filter(|&i| ai[i] != bi[i]).collect();
    let mut coeffs = alloc::vec![1u32; differing.len()];
    loop {
        search.tick()?;
        let mut factors = Vec::with_capacity(ai.len());
        for i in 0..ai.len() {
            let mut coords = alloc::vec![0u32; m];
            coords[ai[i]] = 1;
            if let Some(k) = differing.iter().position(|&d| d == i) {
                coords[bi[i]] = coeffs[k];
            }
            factors.push(Vector::from_residues(p, space, coords));
        }
        let element = wedge_all(p, m, space, &factors)?;
        if search.offer(factors, element)? && search.done() {
            return Ok(true);
        }
        if !advance_nonzero(&mut coeffs, p.get()) {
            return Ok(false);
        }
    }
}

/// Counter over `{1, …, base−1}^k`, least significant digit last.
fn advance_nonzero(digits: &mut [u32], base: u32) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 1;
    }
    false
}

/// Vectors with support of size at most `width` whose first nonzero
/// coordinate is 1, ordered by support and then by coefficients. `None` if
/// the pool would exceed `cap`.
fn normalized_vectors(p: Prime, m: usize, space: Space, width: usize, cap: u64) -> Option<Vec<Vector>> {
    let mut pool = Vec::new();
    for size in 1..=width.min(m) {
        for support in blades(m, size) {
            let idx: Vec<usize> = support.indices().collect();
            let mut tail = alloc::vec![1u32; size - 1];
            loop {
                let mut coords = alloc::vec![0u32; m];
                coords[idx[0]] = 1;
                for (k, &i) in idx[1..].iter().enumerate() {
                    coords[i] = tail[k];
                }
                pool.push(Vector::from_residues(p, space, coords));
                if pool.len() as u64 > cap {
                    return None;
                }
                if !advance_nonzero(&mut tail, p.get()) {
                    break;
                }
            }
        }
    }
    Some(pool)
}

fn widen(
    search: &mut Search<'_>,
    pool: &[Vector],
    start: usize,
    remaining: usize,
    chosen: &mut Vec<Vector>,
    partial: &Multivector,
) -> Result<bool> {
    if remaining == 0 {
        return search.offer(chosen.clone(), partial.clone()).map(|_| search.done());
    }
    for i in start..pool.len() {
        search.tick()?;
        let next = partial.wedge(&Multivector::from_vector(&pool[i]))?;
        if next.is_zero() {
            continue;
        }
        chosen.push(pool[i].clone());
        let finished = widen(search, pool, i + 1, remaining - 1, chosen, &next)?;
        chosen.pop();
        if finished {
            return Ok(true);
        }
    }
    Ok(false)
}
