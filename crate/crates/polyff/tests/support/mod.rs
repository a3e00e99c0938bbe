//! Independent oracles for the acceptance suite. Nothing here calls into the
//! library's ring, matrix or closure code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

pub type Perm = Vec<usize>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    a.iter().map(|&i| b[i]).collect()
}

fn perm_order(p: &Perm) -> u64 {
    let id: Perm = (0..p.len()).collect();
    let mut q = p.clone();
    let mut m = 1;
    while q != id {
        q = compose(&q, p);
        m += 1;
    }
    m
}

pub fn all_perms(n: usize) -> Vec<Perm> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn is_even(p: &Perm) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

pub fn spectrum(perms: &[Perm]) -> Vec<(u64, u64)> {
    let mut counts = BTreeMap::new();
    for p in perms {
        *counts.entry(perm_order(p)).or_insert(0u64) += 1;
    }
    counts.into_iter().collect()
}

pub type IntMat = [[i64; 3]; 3];

const ID: IntMat = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

fn imul(a: &IntMat, b: &IntMat, n: i64) -> IntMat {
    let mut out = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum::<i64>().rem_euclid(n);
        }
    }
    out
}

/// Rotation matrices written out from the closed forms, entries mod `n`.
pub fn int_rhos(x: i64, y: i64, n: i64) -> [IntMat; 3] {
    let rv = [
        [1, 1 - x, (1 - x) * (1 - y)],
        [0, -1, y - 1],
        [0, 1 + x, (1 + x) * (1 - y) - 1],
    ];
    let re = [[-1, 0, 0], [2, 1, 1 - y], [0, 0, -1]];
    let rf = [[-1, x - 1, 0], [2, 1 - 2 * x, 0], [0, 1 + x, 1]];
    [rv, re, rf].map(|m| m.map(|row| row.map(|v| v.rem_euclid(n))))
}

pub fn naive_closure_order(gens: &[IntMat], n: i64) -> usize {
    let mut seen = BTreeSet::from([ID]);
    let mut frontier = vec![ID];
    while let Some(g) = frontier.pop() {
        for s in gens {
            let h = imul(&g, s, n);
            if seen.insert(h) {
                frontier.push(h);
            }
        }
    }
    seen.len()
}

/// Prime divisors of `n` by trial division.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Composite identity (apply `v`, then `e`, then `f`), fixed-point-free
/// involution `e`, and transitivity, checked from scratch.
pub fn dart_properties_hold(v: &[u32], e: &[u32], f: &[u32]) -> Result<(), &'static str> {
    let n = v.len();
    if e.len() != n || f.len() != n {
        return Err("degree mismatch");
    }
    for d in 0..n {
        if f[e[v[d] as usize] as usize] as usize != d {
            return Err("composite is not the identity");
        }
        let t = e[d] as usize;
        if t == d {
            return Err("e has a fixed point");
        }
        if e[t] as usize != d {
            return Err("e is not an involution");
        }
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(d) = stack.pop() {
        for perm in [v, e, f] {
            let t = perm[d] as usize;
            if !seen[t] {
                seen[t] = true;
                reached += 1;
                stack.push(t);
            }
        }
    }
    if reached != n {
        return Err("not transitive");
    }
    Ok(())
}
