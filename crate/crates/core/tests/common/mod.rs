//! Reference implementations used as oracles. They work on plain integer
//! matrices and index lists and share no code with the library.

#![allow(dead_code)]

/// All k-subsets of 0..m in lexicographic order.
pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Determinant by cofactor expansion along the first row.
pub fn det(a: &[Vec<i64>]) -> i64 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut total = 0;
    for c in 0..n {
        let minor: Vec<Vec<i64>> = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
            .collect();
        let sign = if c % 2 == 0 { 1 } else { -1 };
        total += sign * a[0][c] * det(&minor);
    }
    total
}

pub fn modp(x: i64, p: u32) -> u32 {
    x.rem_euclid(p as i64) as u32
}

/// Coordinates of `v_1 ∧ … ∧ v_k` in lexicographic order: maximal minors.
pub fn wedge_of_vectors(vs: &[Vec<i64>], m: usize, p: u32) -> Vec<u32> {
    subsets(m, vs.len())
        .iter()
        .map(|cols| {
            let minor: Vec<Vec<i64>> = vs.iter().map(|v| cols.iter().map(|&c| v[c]).collect()).collect();
            modp(det(&minor), p)
        })
        .collect()
}

/// `⟨f_1∧…∧f_k, v_1∧…∧v_k⟩ = det(f_a(v_b))`.
pub fn pairing_of_wedges(fs: &[Vec<i64>], vs: &[Vec<i64>], p: u32) -> u32 {
    let gram: Vec<Vec<i64>> = fs
        .iter()
        .map(|f| vs.iter().map(|v| f.iter().zip(v).map(|(a, b)| a * b).sum()).collect())
        .collect();
    modp(det(&gram), p)
}

/// Sorts an index tuple, returning the sign of the sorting permutation, or
/// `None` if an index repeats.
pub fn sort_with_sign(idx: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut v = idx.to_vec();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

fn position(m: usize, k: usize, idx: &[usize]) -> usize {
    subsets(m, k).iter().position(|s| s == idx).unwrap()
}

/// Bilinear expansion of `{a_1, …, a_n}` with `a_i = ∏ t_j^{e_ij}` into
/// `Σ ∏_i e_{i,j_i} {t_{j_1}, …, t_{j_n}}`, with `{…, t, …, t, …} = 0` and
/// slot swaps negating.
pub fn expand_symbol(exps: &[Vec<i64>], m: usize, p: u32) -> Vec<u32> {
    let n = exps.len();
    let mut acc = vec![0i64; subsets(m, n).len()];
    for_each_tuple(m, n, |tuple| {
        let coeff: i64 = tuple.iter().enumerate().map(|(i, &j)| exps[i][j]).product();
        if coeff == 0 {
            return;
        }
        if let Some((sorted, sign)) = sort_with_sign(tuple) {
            acc[position(m, n, &sorted)] += sign * coeff;
        }
    });
    acc.into_iter().map(|x| modp(x, p)).collect()
}

/// Tame symbol at `ord_{t_j}` on the bilinear expansion:
/// `∂{u_1, …, t_j, …, u_n} = (−1)^{k} {u_1, …, û_k, …, u_n}` with `t_j` in
/// position `k` (0-based) and every other entry a unit at `t_j`.
pub fn tame_residue(exps: &[Vec<i64>], j: usize, m: usize, p: u32) -> Vec<u32> {
    let n = exps.len();
    let mut acc = vec![0i64; subsets(m, n - 1).len()];
    for_each_tuple(m, n, |tuple| {
        let coeff: i64 = tuple.iter().enumerate().map(|(i, &c)| exps[i][c]).product();
        if coeff == 0 {
            return;
        }
        let hits: Vec<usize> = (0..n).filter(|&k| tuple[k] == j).collect();
        if hits.len() != 1 {
            // no uniformizer, or {t, t} = 0
            return;
        }
        let k = hits[0];
        let rest: Vec<usize> = tuple.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &c)| c).collect();
        if let Some((sorted, sign)) = sort_with_sign(&rest) {
            let s = if k.is_multiple_of(2) { 1 } else { -1 };
            acc[position(m, n - 1, &sorted)] += s * sign * coeff;
        }
    });
    acc.into_iter().map(|x| modp(x, p)).collect()
}

pub fn for_each_tuple(m: usize, n: usize, mut f: impl FnMut(&[usize])) {
    let total = m.pow(n as u32);
    let mut tuple = vec![0; n];
    for mut code in 0..total {
        for slot in tuple.iter_mut() {
            *slot = code % m;
            code /= m;
        }
        f(&tuple);
    }
}

/// All vectors of F_p^m, in base-p counter order.
pub fn all_vectors(m: usize, p: u32) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for_each_tuple(p as usize, m, |t| out.push(t.iter().map(|&x| x as i64).collect()));
    out
}

/// `v ∧ w` for a vector `v` and a dense degree-k element `w`:
/// `(v∧w)_K = Σ_{r} (−1)^r v_{K_r} w_{K∖K_r}`.
pub fn vector_wedge(v: &[i64], w: &[u32], m: usize, k: usize, p: u32) -> Vec<u32> {
    let lower = subsets(m, k);
    subsets(m, k + 1)
        .iter()
        .map(|big| {
            let mut s = 0i64;
            for r in 0..big.len() {
                let rest: Vec<usize> = big.iter().enumerate().filter(|&(i, _)| i != r).map(|(_, &x)| x).collect();
                let pos = lower.iter().position(|x| *x == rest).unwrap();
                let sign = if r % 2 == 0 { 1 } else { -1 };
                s += sign * v[big[r]] * w[pos] as i64;
            }
            modp(s, p)
        })
        .collect()
}
