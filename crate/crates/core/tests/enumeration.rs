//! Enumeration checked against an independent brute-force oracle: all partial
//! orders on labeled middle points, filtered to lattices, quotiented by every
//! permutation.

use std::collections::{BTreeSet, HashSet};

use mosaic_core::catalog::{enumerate_lattices, enumerate_ortholattices, CatalogError};
use mosaic_core::lattice::{find_isomorphism, is_modular, find_sublattice_copy, FiniteBoundedLattice};

type Order = Vec<Vec<bool>>;

/// Frozen census, first produced by `oracle_classes` and reproduced by the
/// enumerator on every run.
const LATTICE_COUNTS: [usize; 8] = [1, 1, 1, 2, 5, 15, 53, 222];
const ORTHOLATTICE_COUNTS: [usize; 8] = [1, 1, 0, 1, 0, 2, 0, 5];

fn middle_orders(m: usize) -> Vec<Order> {
    fn go(m: usize, j: usize, rel: &mut Order, out: &mut Vec<Order>) {
        if j == m {
            out.push(rel.clone());
            return;
        }
        // Relations of j with every i < j: 0 incomparable, 1 i < j, 2 j < i.
        for code in 0..3usize.pow(j as u32) {
            let mut c = code;
            for i in 0..j {
                let s = c % 3;
                c /= 3;
                rel[i][j] = s == 1;
                rel[j][i] = s == 2;
            }
            let ok = (0..=j).all(|a| (0..=j).all(|b| (0..=j).all(|k| !(rel[a][b] && rel[b][k]) || rel[a][k])));
            if ok {
                go(m, j + 1, rel, out);
            }
        }
        for i in 0..j {
            rel[i][j] = false;
            rel[j][i] = false;
        }
    }
    let mut rel = vec![vec![false; m]; m];
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
    }
    let mut out = Vec::new();
    go(m, 0, &mut rel, &mut out);
    out
}

fn with_bounds(mid: &Order) -> Order {
    let m = mid.len();
    let n = m + 2;
    let mut leq = vec![vec![false; n]; n];
    for a in 0..n {
        leq[0][a] = true;
        leq[a][n - 1] = true;
    }
    for a in 0..m {
        for b in 0..m {
            leq[a + 1][b + 1] = mid[a][b];
        }
    }
    leq
}

fn is_lattice(leq: &Order) -> bool {
    let n = leq.len();
    let unique_extreme = |bounds: Vec<usize>, least: bool| {
        bounds
            .iter()
            .filter(|&&u| bounds.iter().all(|&v| if least { leq[u][v] } else { leq[v][u] }))
            .count()
            == 1
    };
    (0..n).all(|a| {
        (0..n).all(|b| {
            let upper = (0..n).filter(|&u| leq[a][u] && leq[b][u]).collect();
            let lower = (0..n).filter(|&u| leq[u][a] && leq[u][b]).collect();
            unique_extreme(upper, true) && unique_extreme(lower, false)
        })
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Least leq matrix (as a bit vector) over every permutation of all points.
fn oracle_code(leq: &Order, perms: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .map(|p| p.iter().flat_map(|&a| p.iter().map(move |&b| leq[a][b])).fold(0u64, |c, bit| c << 1 | bit as u64))
        .min()
        .unwrap()
}

/// Isomorphism classes of n-element bounded lattices, one leq matrix each.
fn oracle_classes(n: usize) -> Vec<Order> {
    if n == 1 {
        return vec![vec![vec![true]]];
    }
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mid in middle_orders(n - 2) {
        let leq = with_bounds(&mid);
        if is_lattice(&leq) && seen.insert(oracle_code(&leq, &perms)) {
            out.push(leq);
        }
    }
    out
}

fn leq_of(l: &FiniteBoundedLattice) -> Order {
    l.leq_matrix()
}

/// Orthocomplementations straight from the definition, counted up to
/// conjugation by order automorphisms.
fn oracle_ortho_count(leq: &Order, perms: &[Vec<usize>]) -> usize {
    let n = leq.len();
    let join = |a: usize, b: usize| (0..n).find(|&u| leq[a][u] && leq[b][u] && (0..n).all(|v| !(leq[a][v] && leq[b][v]) || leq[u][v])).unwrap();
    let meet = |a: usize, b: usize| (0..n).find(|&u| leq[u][a] && leq[u][b] && (0..n).all(|v| !(leq[v][a] && leq[v][b]) || leq[v][u])).unwrap();
    let top = (0..n).find(|&t| (0..n).all(|a| leq[a][t])).unwrap();
    let bottom = (0..n).find(|&t| (0..n).all(|a| leq[t][a])).unwrap();
    let autos: Vec<&Vec<usize>> = perms.iter().filter(|p| (0..n).all(|a| (0..n).all(|b| leq[a][b] == leq[p[a]][p[b]]))).collect();
    let mut orbits = BTreeSet::new();
    for cand in perms {
        let involutive = (0..n).all(|x| cand[cand[x]] == x);
        let ortho = involutive
            && (0..n).all(|x| {
                join(x, cand[x]) == top
                    && meet(x, cand[x]) == bottom
                    && (0..n).all(|y| !leq[x][y] || leq[cand[y]][cand[x]])
            });
        if ortho {
            let rep = autos
                .iter()
                .map(|g| {
                    let mut c = vec![0; n];
                    for x in 0..n {
                        c[g[x]] = g[cand[x]];
                    }
                    c
                })
                .min()
                .unwrap();
            orbits.insert(rep);
        }
    }
    orbits.len()
}

fn check_size(n: usize) {
    let perms = permutations(n);
    let oracle = oracle_classes(n);
    assert_eq!(oracle.len(), LATTICE_COUNTS[n - 1], "oracle count for n = {n}");
    let ours = enumerate_lattices(n).unwrap();
    assert_eq!(ours.len(), oracle.len(), "enumerator count for n = {n}");
    let oracle_codes: HashSet<_> = oracle.iter().map(|l| oracle_code(l, &perms)).collect();
    let our_codes: HashSet<_> = ours.iter().map(|l| oracle_code(&leq_of(l), &perms)).collect();
    assert_eq!(oracle_codes, our_codes);

    let ortho: usize = oracle.iter().map(|l| oracle_ortho_count(l, &perms)).sum();
    assert_eq!(ortho, ORTHOLATTICE_COUNTS[n - 1], "ortholattice count for n = {n}");
    assert_eq!(enumerate_ortholattices(n).unwrap().len(), ortho);
}

#[test]
fn census_up_to_seven_matches_oracle() {
    for n in 1..=7 {
        check_size(n);
    }
}

#[test]
#[ignore = "exhaustive oracle at eight elements takes a while"]
fn census_eight_matches_oracle() {
    check_size(8);
}

#[test]
fn frozen_census() {
    for n in 1..=8 {
        assert_eq!(enumerate_lattices(n).unwrap().len(), LATTICE_COUNTS[n - 1]);
        assert_eq!(enumerate_ortholattices(n).unwrap().len(), ORTHOLATTICE_COUNTS[n - 1]);
    }
}

#[test]
fn size_limits() {
    assert_eq!(enumerate_lattices(9), Err(CatalogError::SizeTooLarge(9)));
    assert_eq!(enumerate_ortholattices(0).unwrap_err(), CatalogError::SizeTooLarge(0));
}

#[test]
fn five_element_classes() {
    let five = enumerate_lattices(5).unwrap();
    let non_modular: Vec<_> = five.iter().filter(|l| !is_modular(l).holds).collect();
    assert_eq!(non_modular.len(), 1);
    assert!(find_isomorphism(&FiniteBoundedLattice::pentagon(), non_modular[0]).is_some());
}

#[test]
fn classifier_facts_hold_on_corpus() {
    let p = FiniteBoundedLattice::pentagon();
    let h = FiniteBoundedLattice::hexagon();
    for n in 1..=8 {
        for l in enumerate_lattices(n).unwrap() {
            assert_eq!(is_modular(&l).holds, find_sublattice_copy(&l, &p).is_none());
        }
        for op in enumerate_ortholattices(n).unwrap() {
            let om = mosaic_core::lattice::is_orthomodular(op.lattice(), op.pi()).unwrap().holds;
            assert_eq!(om, find_sublattice_copy(op.lattice(), &h).is_none());
        }
    }
}

#[test]
fn hexagon_is_enumerated() {
    let six = enumerate_ortholattices(6).unwrap();
    let h = FiniteBoundedLattice::hexagon();
    assert!(six.iter().any(|op| find_isomorphism(&h, op.lattice()).is_some()));
}
