mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use unram_core::extalg::{
    blades, contract, divisibility_kernel, dual_pairing, is_pure_wedge, orthogonal_complement, pure_wedge_basis,
    s_dec, wedge_all, Decomposition, DEFAULT_SEARCH_CAP, DEFAULT_S_DEC_CAP,
};
use unram_core::{binomial, Blade, Multivector, Prime, Space, Subspace, Vector};

fn p(x: u32) -> Prime {
    Prime::new(x).unwrap()
}

fn b(idx: &[usize]) -> Blade {
    Blade::from_indices(idx).unwrap()
}

fn mv(ell: u32, m: usize, space: Space, terms: &[(&[usize], i64)]) -> Multivector {
    let deg = terms.first().map_or(0, |t| t.0.len());
    Multivector::from_terms(p(ell), m, deg, space, terms.iter().map(|&(i, c)| (b(i), c))).unwrap()
}

fn omega(n: usize, ell: u32) -> Multivector {
    let m = 2 * n;
    let lo: Vec<usize> = (0..n).collect();
    let hi: Vec<usize> = (n..m).collect();
    mv(ell, m, Space::Primal, &[(&lo, 1), (&hi, 1)])
}

#[test]
fn blade_order_matches_lex_subsets() {
    for m in 0..7 {
        for k in 0..=m {
            let ours: Vec<Vec<usize>> = blades(m, k).iter().map(|b| b.indices().collect()).collect();
            assert_eq!(ours, common::subsets(m, k));
        }
    }
}

#[test]
fn wedge_examples() {
    let e1 = mv(2, 4, Space::Primal, &[(&[0], 1)]);
    let e2 = mv(2, 4, Space::Primal, &[(&[1], 1)]);
    assert_eq!(e1.wedge(&e2).unwrap(), mv(2, 4, Space::Primal, &[(&[0, 1], 1)]));
    assert!(e1.wedge(&e1).unwrap().is_zero());
    let w = omega(2, 2);
    assert!(w.wedge(&w).unwrap().is_zero());
    // odd ℓ keeps the cross term 2·e1234
    let w3 = omega(2, 3);
    assert_eq!(w3.wedge(&w3).unwrap(), mv(3, 4, Space::Primal, &[(&[0, 1, 2, 3], 2)]));
    // overflow degree is zero, not an error
    let top = mv(2, 4, Space::Primal, &[(&[0, 1, 2], 1)]);
    let z = top.wedge(&w).unwrap();
    assert!(z.is_zero());
    assert_eq!(z.degree(), 5);
    assert!(e1.wedge(&e1.with_space(Space::Dual)).is_err());
}

#[test]
fn pairing_examples() {
    let f = mv(2, 4, Space::Dual, &[(&[0, 1], 1)]);
    assert_eq!(dual_pairing(&f, &mv(2, 4, Space::Primal, &[(&[0, 1], 1)])).unwrap().value(), 1);
    assert_eq!(dual_pairing(&f, &mv(2, 4, Space::Primal, &[(&[0, 2], 1)])).unwrap().value(), 0);
    let g = omega(2, 2).with_space(Space::Dual);
    assert_eq!(dual_pairing(&g, &omega(2, 2)).unwrap().value(), 0);
    assert!(dual_pairing(&omega(2, 2), &omega(2, 2)).is_err());
}

#[test]
fn contract_examples() {
    let x1 = mv(2, 4, Space::Dual, &[(&[0], 1)]);
    let x3 = mv(2, 4, Space::Dual, &[(&[2], 1)]);
    let e12 = mv(2, 4, Space::Primal, &[(&[0, 1], 1)]);
    let e2 = mv(2, 4, Space::Primal, &[(&[1], 1)]);
    assert_eq!(contract(&x1, &e12).unwrap(), e2);
    assert!(contract(&x3, &e12).unwrap().is_zero());
    assert_eq!(contract(&x1, &omega(2, 2)).unwrap(), e2);
    let big = mv(2, 4, Space::Dual, &[(&[0, 1, 2], 1)]);
    assert!(contract(&big, &e12).is_err());
}

#[test]
fn divisibility_examples() {
    let e12 = mv(2, 4, Space::Primal, &[(&[0, 1], 1)]);
    let k = divisibility_kernel(&e12);
    let expected = Subspace::span(
        p(2),
        4,
        1,
        Space::Primal,
        &[mv(2, 4, Space::Primal, &[(&[0], 1)]), mv(2, 4, Space::Primal, &[(&[1], 1)])],
    )
    .unwrap();
    assert_eq!(k, expected);
    assert!(divisibility_kernel(&omega(2, 2)).is_zero());
    let zero = Multivector::zero(p(2), 4, 2, Space::Primal).unwrap();
    assert_eq!(divisibility_kernel(&zero).dimension(), 4);
}

/// Brute force over every nonzero vector of F_ℓ^{2n}: none divides ω.
#[test]
fn omega_has_no_divisor_bruteforce() {
    for (n, ell) in [(2, 2), (2, 3), (2, 5), (3, 2), (3, 3)] {
        let m = 2 * n;
        let w = omega(n, ell).to_dense();
        let mut checked = 0;
        for v in common::all_vectors(m, ell).into_iter().skip(1) {
            let prod = common::vector_wedge(&v, &w, m, n, ell);
            assert!(prod.iter().any(|&c| c != 0), "v = {v:?} divides omega (n={n}, ell={ell})");
            checked += 1;
        }
        assert_eq!(checked, (ell as usize).pow(m as u32) - 1);
        assert!(divisibility_kernel(&omega(n, ell)).is_zero());
    }
}

#[test]
fn omega_indivisible_and_s_dec_zero() {
    for n in 2..=4 {
        for ell in [2, 3, 5] {
            let w = omega(n, ell);
            assert!(divisibility_kernel(&w).is_zero(), "n={n} ell={ell}");
            let s = Subspace::span(p(ell), 2 * n, n, Space::Primal, std::slice::from_ref(&w)).unwrap();
            let d = s_dec(&s, DEFAULT_S_DEC_CAP).unwrap();
            assert!(d.is_zero());
            assert_ne!(d, s);
        }
    }
}

#[test]
fn s_dec_examples() {
    let e12 = mv(2, 4, Space::Primal, &[(&[0, 1], 1)]);
    let s = Subspace::span(p(2), 4, 2, Space::Primal, &[e12]).unwrap();
    assert_eq!(s_dec(&s, DEFAULT_S_DEC_CAP).unwrap(), s);
    let z = Subspace::zero(p(2), 4, 2, Space::Primal).unwrap();
    assert_eq!(s_dec(&z, DEFAULT_S_DEC_CAP).unwrap(), z);
    let full = Subspace::full(p(3), 6, 3, Space::Primal).unwrap();
    assert!(s_dec(&full, DEFAULT_S_DEC_CAP).unwrap_err().is_resource());
}

#[test]
fn orthogonal_complement_examples() {
    let s = Subspace::span(p(2), 4, 2, Space::Primal, &[omega(2, 2)]).unwrap();
    let perp = orthogonal_complement(&s);
    let d = |i: &[usize]| mv(2, 4, Space::Dual, &[(i, 1)]);
    let expected = Subspace::span(
        p(2),
        4,
        2,
        Space::Dual,
        &[d(&[0, 2]), d(&[0, 3]), d(&[1, 2]), d(&[1, 3]), mv(2, 4, Space::Dual, &[(&[0, 1], 1), (&[2, 3], 1)])],
    )
    .unwrap();
    assert_eq!(perp, expected);
    assert_eq!(perp.dimension(), 5);
    let z = Subspace::zero(p(3), 4, 2, Space::Primal).unwrap();
    assert_eq!(orthogonal_complement(&z), Subspace::full(p(3), 4, 2, Space::Dual).unwrap());
    let full = Subspace::full(p(3), 4, 2, Space::Primal).unwrap();
    assert!(orthogonal_complement(&full).is_zero());
}

#[test]
fn displayed_basis_spans_complement() {
    for n in 2..=4 {
        for ell in [2, 3, 5] {
            let m = 2 * n;
            let s = Subspace::span(p(ell), m, n, Space::Primal, &[omega(n, ell)]).unwrap();
            let lo: Vec<usize> = (0..n).collect();
            let hi: Vec<usize> = (n..m).collect();
            let mut shown: Vec<Multivector> = common::subsets(m, n)
                .into_iter()
                .filter(|j| *j != lo && *j != hi)
                .map(|j| mv(ell, m, Space::Dual, &[(&j, 1)]))
                .collect();
            shown.push(mv(ell, m, Space::Dual, &[(&lo, 1), (&hi, -1)]));
            let shown = Subspace::span(p(ell), m, n, Space::Dual, &shown).unwrap();
            let perp = orthogonal_complement(&s);
            assert_eq!(perp, shown, "n={n} ell={ell}");
            assert_eq!(perp.dimension(), binomial(m, n) - 1);
        }
    }
}

/// Every wedge of `n` vectors in F_ℓ^m, enumerated directly by maximal minors.
fn all_pure(m: usize, n: usize, ell: u32) -> HashSet<Vec<u32>> {
    let vectors = common::all_vectors(m, ell);
    let mut out = HashSet::new();
    common::for_each_tuple(vectors.len(), n, |t| {
        let vs: Vec<Vec<i64>> = t.iter().map(|&i| vectors[i].clone()).collect();
        out.insert(common::wedge_of_vectors(&vs, m, ell));
    });
    out
}

#[test]
fn is_pure_wedge_matches_exhaustive_enumeration() {
    for ell in [2, 3] {
        for m in 1..=4 {
            for n in 1..=2.min(m) {
                let pure = all_pure(m, n, ell);
                let len = binomial(m, n);
                let mut agreed = 0;
                common::for_each_tuple(ell as usize, len, |coords| {
                    let dense: Vec<u32> = coords.iter().map(|&c| c as u32).collect();
                    let w = Multivector::from_dense(p(ell), m, n, Space::Primal, &dense).unwrap();
                    let verdict = is_pure_wedge(&w);
                    assert_eq!(verdict.is_pure(), pure.contains(&dense), "m={m} n={n} ell={ell} w={w}");
                    if let Decomposition::Pure(f) = verdict {
                        if !w.is_zero() {
                            let vs: Vec<Vec<i64>> =
                                f.iter().map(|v| v.coords().iter().map(|&c| c as i64).collect()).collect();
                            assert_eq!(common::wedge_of_vectors(&vs, m, ell), dense);
                        }
                    }
                    agreed += 1;
                });
                assert_eq!(agreed, (ell as usize).pow(len as u32));
            }
        }
    }
}

#[test]
fn plucker_witness_example() {
    match is_pure_wedge(&omega(2, 2)) {
        Decomposition::NotPure(w) => {
            assert_eq!(w.xi, b(&[0]));
            assert_eq!(w.relation, mv(2, 4, Space::Primal, &[(&[1, 2, 3], 1)]));
        }
        Decomposition::Pure(_) => panic!("omega is not pure"),
    }
    let e12 = mv(2, 4, Space::Primal, &[(&[0, 1], 1)]);
    match is_pure_wedge(&e12) {
        Decomposition::Pure(f) => assert_eq!(wedge_all(p(2), 4, Space::Primal, &f).unwrap(), e12),
        Decomposition::NotPure(_) => panic!(),
    }
    let zero = Multivector::zero(p(2), 4, 2, Space::Primal).unwrap();
    assert_eq!(is_pure_wedge(&zero), Decomposition::Pure(vec![]));
}

#[test]
fn pure_wedge_basis_example() {
    let s = Subspace::span(p(2), 4, 2, Space::Primal, &[omega(2, 2)]).unwrap();
    let basis = pure_wedge_basis(&orthogonal_complement(&s), DEFAULT_SEARCH_CAP).unwrap();
    let d = |i: &[usize]| mv(2, 4, Space::Dual, &[(i, 1)]);
    let got: Vec<Multivector> = basis.iter().map(|x| x.element.clone()).collect();
    assert_eq!(
        got,
        vec![
            d(&[0, 2]),
            d(&[0, 3]),
            d(&[1, 2]),
            d(&[1, 3]),
            mv(2, 4, Space::Dual, &[(&[0, 1], 1), (&[0, 3], 1), (&[1, 2], 1), (&[2, 3], 1)]),
        ]
    );
    let last = &basis[4].factors;
    assert_eq!(last[0], Vector::new(p(2), Space::Dual, &[1, 0, 1, 0]));
    assert_eq!(last[1], Vector::new(p(2), Space::Dual, &[0, 1, 0, 1]));

    let d3 = |i: &[usize]| mv(3, 4, Space::Dual, &[(i, 1)]);
    let standard = vec![d3(&[0, 1]), d3(&[1, 3]), d3(&[2, 3])];
    let w = Subspace::span(p(3), 4, 2, Space::Dual, &standard).unwrap();
    let found: Vec<Multivector> =
        pure_wedge_basis(&w, DEFAULT_SEARCH_CAP).unwrap().into_iter().map(|x| x.element).collect();
    assert_eq!(found, standard);
    assert!(pure_wedge_basis(&Subspace::zero(p(2), 4, 2, Space::Dual).unwrap(), DEFAULT_SEARCH_CAP)
        .unwrap()
        .is_empty());
}

#[test]
fn pure_wedge_basis_for_construction() {
    for n in 2..=4 {
        for ell in [2, 3, 5] {
            let m = 2 * n;
            let s = Subspace::span(p(ell), m, n, Space::Primal, &[omega(n, ell)]).unwrap();
            let perp = orthogonal_complement(&s);
            let basis = pure_wedge_basis(&perp, DEFAULT_SEARCH_CAP).unwrap();
            assert_eq!(basis.len(), binomial(m, n) - 1);
            for e in &basis {
                assert!(is_pure_wedge(&e.element).is_pure());
                assert_eq!(wedge_all(p(ell), m, Space::Dual, &e.factors).unwrap(), e.element);
            }
            let elems: Vec<_> = basis.iter().map(|e| e.element.clone()).collect();
            assert_eq!(Subspace::span(p(ell), m, n, Space::Dual, &elems).unwrap(), perp);
        }
    }
}

fn prime_strategy() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 5, 7])
}

fn element(ell: u32, m: usize, k: usize, space: Space) -> impl Strategy<Value = Multivector> {
    prop::collection::vec(0..ell, binomial(m, k))
        .prop_map(move |c| Multivector::from_dense(p(ell), m, k, space, &c).unwrap())
}

fn vectors(ell: u32, m: usize, k: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(0..ell as i64, m), k)
}

proptest! {
    #[test]
    fn anticommutativity(
        (ell, m, a, c, pa, pc) in (prime_strategy(), 1usize..=6)
            .prop_flat_map(|(ell, m)| (Just(ell), Just(m), 0..=m, 0..=m))
            .prop_flat_map(|(ell, m, pa, pc)| (
                Just(ell), Just(m),
                element(ell, m, pa, Space::Primal),
                element(ell, m, pc, Space::Primal),
                Just(pa), Just(pc),
            ))
    ) {
        let ab = a.wedge(&c).unwrap();
        let ba = c.wedge(&a).unwrap();
        let expected = if pa * pc % 2 == 1 { ba.neg() } else { ba };
        prop_assert_eq!(ab, expected);
        let _ = (ell, m);
    }

    #[test]
    fn pairing_is_kronecker_and_bilinear(
        (ell, m, k, f, g, w, c) in (prime_strategy(), 1usize..=6)
            .prop_flat_map(|(ell, m)| (Just(ell), Just(m), 0..=m))
            .prop_flat_map(|(ell, m, k)| (
                Just(ell), Just(m), Just(k),
                element(ell, m, k, Space::Dual),
                element(ell, m, k, Space::Dual),
                element(ell, m, k, Space::Primal),
                0..ell,
            ))
    ) {
        let q = p(ell);
        let lhs = dual_pairing(&f.add(&g.scale(c)).unwrap(), &w).unwrap().value();
        let rhs = q.add(dual_pairing(&f, &w).unwrap().value(), q.mul(c, dual_pairing(&g, &w).unwrap().value()));
        prop_assert_eq!(lhs, rhs);
        // dense dot product
        let dot = f.to_dense().iter().zip(w.to_dense()).fold(0, |acc, (&x, y)| q.add(acc, q.mul(x, y)));
        prop_assert_eq!(dual_pairing(&f, &w).unwrap().value(), dot);
        for (i, bi) in blades(m, k).into_iter().enumerate().take(6) {
            for bj in blades(m, k).into_iter().skip(i).take(3) {
                let x = Multivector::basis(q, m, Space::Dual, bi).unwrap();
                let y = Multivector::basis(q, m, Space::Primal, bj).unwrap();
                prop_assert_eq!(dual_pairing(&x, &y).unwrap().value(), u32::from(bi == bj));
            }
        }
    }

    #[test]
    fn pairing_of_vector_wedges_is_a_determinant(
        (ell, m, fs, vs) in (prime_strategy(), 1usize..=5)
            .prop_flat_map(|(ell, m)| (Just(ell), Just(m), 0..=m.min(4)))
            .prop_flat_map(|(ell, m, k)| (Just(ell), Just(m), vectors(ell, m, k), vectors(ell, m, k)))
    ) {
        let q = p(ell);
        let to_vec = |s: Space, v: &Vec<i64>| Vector::new(q, s, v);
        let f: Vec<Vector> = fs.iter().map(|v| to_vec(Space::Dual, v)).collect();
        let v: Vec<Vector> = vs.iter().map(|x| to_vec(Space::Primal, x)).collect();
        let lhs = dual_pairing(&wedge_all(q, m, Space::Dual, &f).unwrap(), &wedge_all(q, m, Space::Primal, &v).unwrap())
            .unwrap()
            .value();
        prop_assert_eq!(lhs, common::pairing_of_wedges(&fs, &vs, ell));
        prop_assert_eq!(wedge_all(q, m, Space::Primal, &v).unwrap().to_dense(), common::wedge_of_vectors(&vs, m, ell));
    }

    #[test]
    fn adjunction(
        (ell, m, xi, eta, w) in (prime_strategy(), 1usize..=6)
            .prop_flat_map(|(ell, m)| (Just(ell), Just(m), 0..=m))
            .prop_flat_map(|(ell, m, n)| (Just(ell), Just(m), Just(n), 0..=n))
            .prop_flat_map(|(ell, m, n, k)| (
                Just(ell), Just(m),
                element(ell, m, k, Space::Dual),
                element(ell, m, n - k, Space::Dual),
                element(ell, m, n, Space::Primal),
            ))
    ) {
        let lhs = dual_pairing(&eta, &contract(&xi, &w).unwrap()).unwrap();
        let rhs = dual_pairing(&xi.wedge(&eta).unwrap(), &w).unwrap();
        prop_assert_eq!(lhs, rhs);
        let _ = (ell, m);
    }

    #[test]
    fn complement_dimension(
        (ell, m, k, gens) in (prime_strategy(), 1usize..=6)
            .prop_flat_map(|(ell, m)| (Just(ell), Just(m), 0..=m))
            .prop_flat_map(|(ell, m, k)| (
                Just(ell), Just(m), Just(k),
                prop::collection::vec(element(ell, m, k, Space::Primal), 0..5),
            ))
    ) {
        let s = Subspace::span(p(ell), m, k, Space::Primal, &gens).unwrap();
        let perp = orthogonal_complement(&s);
        prop_assert_eq!(s.dimension() + perp.dimension(), binomial(m, k));
        for f in perp.basis() {
            for g in &gens {
                prop_assert!(dual_pairing(&f, g).unwrap().is_zero());
            }
        }
        prop_assert_eq!(orthogonal_complement(&perp), s);
    }

    #[test]
    fn divisibility_kernel_matches_definition(
        (ell, _m, w, v) in (prime_strategy(), 1usize..=5)
            .prop_flat_map(|(ell, m)| (Just(ell), Just(m), 0..=m))
            .prop_flat_map(|(ell, m, k)| (
                Just(ell), Just(m),
                element(ell, m, k, Space::Primal),
                prop::collection::vec(0..ell as i64, m),
            ))
    ) {
        let q = p(ell);
        let x = Multivector::from_vector(&Vector::new(q, Space::Primal, &v));
        let in_kernel = divisibility_kernel(&w).contains(&x).unwrap();
        prop_assert_eq!(in_kernel, x.wedge(&w).unwrap().is_zero());
    }
}
