use std::collections::BTreeSet;

use golden8::constants::{build_cm_e8, build_cmu, build_j};
use golden8::roots::{enumerate, hasse, EnumerationRule, PairingMode};
use golden8::ExactMatrix;
use proptest::prelude::*;

fn path(n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        if i + 1 < n {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    a
}

fn type_d(n: usize) -> Vec<Vec<i64>> {
    let mut a = path(n);
    a[n - 2][n - 1] = 0;
    a[n - 1][n - 2] = 0;
    a[n - 3][n - 1] = -1;
    a[n - 1][n - 3] = -1;
    a
}

fn type_e(n: usize) -> Vec<Vec<i64>> {
    // chain 0..n-2 with node n-1 hanging off node 2
    let mut a = path(n - 1);
    for row in &mut a {
        row.push(0);
    }
    a.push(vec![0; n]);
    a[n - 1][n - 1] = 2;
    a[2][n - 1] = -1;
    a[n - 1][2] = -1;
    a
}

fn type_b(n: usize) -> Vec<Vec<i64>> {
    let mut a = path(n);
    a[n - 1][n - 2] = -2;
    a
}

fn matrix(rows: &[Vec<i64>]) -> ExactMatrix {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    ExactMatrix::from_int_rows(&refs).unwrap()
}

/// Finite types with their textbook positive-root counts.
fn finite_types() -> Vec<(String, Vec<Vec<i64>>, usize)> {
    let mut v = Vec::new();
    for n in 1..=7 {
        v.push((format!("A{n}"), path(n), n * (n + 1) / 2));
    }
    for n in 2..=6 {
        v.push((format!("B{n}"), type_b(n), n * n));
    }
    for n in 4..=7 {
        v.push((format!("D{n}"), type_d(n), n * (n - 1)));
    }
    v.push(("E6".into(), type_e(6), 36));
    v.push(("E7".into(), type_e(7), 63));
    v.push(("E8".into(), type_e(8), 120));
    v.push(("F4".into(), vec![vec![2, -1, 0, 0], vec![-1, 2, -2, 0], vec![0, -1, 2, -1], vec![0, 0, -1, 2]], 24));
    v.push(("G2".into(), vec![vec![2, -1], vec![-3, 2]], 6));
    v
}

#[test]
fn finite_type_counts() {
    for (name, a, count) in finite_types() {
        for mode in [PairingMode::Normalized, PairingMode::Relaxed] {
            let sys = enumerate(&matrix(&a), EnumerationRule::new(mode, 40)).unwrap();
            assert_eq!(sys.len(), count, "{name} {mode:?}");
        }
    }
}

#[test]
fn e8_heights_match_lattice_oracle() {
    let sys = enumerate(&build_cm_e8(), EnumerationRule::new(PairingMode::Normalized, 30)).unwrap();
    let oracle = golden8::lattice::e8_height_histogram().unwrap();
    assert_eq!(sys.height_histogram(), oracle);
    assert_eq!(sys.cumulative_through(29), 120);
}

#[test]
fn relaxed_cmu_and_j_through_height_8() {
    let rule = EnumerationRule::new(PairingMode::Relaxed, 8);
    for m in [build_cmu(), build_j()] {
        let sys = enumerate(&m, rule).unwrap();
        let cumulative: Vec<usize> = sys.cumulative_counts().into_iter().map(|(_, c)| c).collect();
        // four antidiagonal pairs, each contributing 2 + 1 + ... + 7 through height 8
        assert_eq!(cumulative, vec![8, 12, 20, 32, 48, 68, 92, 120]);
    }
}

fn simply_laced_symmetric(n: usize) -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec(prop::bool::ANY, n * (n - 1) / 2).prop_map(move |bits| {
        let mut a = vec![vec![0i64; n]; n];
        let mut k = 0;
        for i in 0..n {
            a[i][i] = 2;
            for j in i + 1..n {
                if bits[k] {
                    a[i][j] = -1;
                    a[j][i] = -1;
                }
                k += 1;
            }
        }
        matrix(&a)
    })
}

fn permute(a: &ExactMatrix, perm: &[usize]) -> ExactMatrix {
    ExactMatrix::from_fn(a.dim(), |i, j| a.get(perm[i], perm[j]).clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn relabeling_permutes_roots(idx in 0usize..22, seed in prop::collection::vec(0usize..100, 8)) {
        let types = finite_types();
        let (_, a, _) = &types[idx % types.len()];
        let a = matrix(a);
        let n = a.dim();
        let mut perm: Vec<usize> = (0..n).collect();
        for (i, s) in seed.iter().take(n).enumerate() {
            perm.swap(i, s % n);
        }
        let rule = EnumerationRule::new(PairingMode::Normalized, 40);
        let base = enumerate(&a, rule).unwrap();
        let moved = enumerate(&permute(&a, &perm), rule).unwrap();
        let want: BTreeSet<Vec<u32>> = base.roots.iter().map(|r| r.coeffs.clone()).collect();
        // coefficient k of the relabelled system belongs to simple root perm[k]
        let got: BTreeSet<Vec<u32>> = moved
            .roots
            .iter()
            .map(|r| {
                let mut c = vec![0; n];
                for k in 0..n {
                    c[perm[k]] = r.coeffs[k];
                }
                c
            })
            .collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn raw_equals_normalized_when_simply_laced(a in simply_laced_symmetric(5), h in 1u32..7) {
        let norm = enumerate(&a, EnumerationRule::new(PairingMode::Normalized, h)).unwrap();
        let raw = enumerate(&a, EnumerationRule::new(PairingMode::Raw, h)).unwrap();
        prop_assert_eq!(norm.roots, raw.roots);
    }

    #[test]
    fn every_layer_hangs_off_the_previous(a in simply_laced_symmetric(5), h in 1u32..7) {
        let sys = enumerate(&a, EnumerationRule::new(PairingMode::Normalized, h)).unwrap();
        let edges = hasse(&sys);
        for (i, r) in sys.roots.iter().enumerate() {
            if r.height > 1 {
                prop_assert!(edges.iter().any(|e| e.to == i && sys.roots[e.from].height + 1 == r.height));
                prop_assert!(!r.parents.is_empty());
            }
        }
    }

    #[test]
    fn dedup_changes_multiplicity_only(a in simply_laced_symmetric(4), h in 1u32..6) {
        let mut rule = EnumerationRule::new(PairingMode::Normalized, h);
        let with = enumerate(&a, rule).unwrap();
        rule.dedup = false;
        let without = enumerate(&a, rule).unwrap();
        let paths: usize = with.roots.iter().map(|r| r.parents.len().max(1)).sum();
        prop_assert_eq!(without.len(), paths);
        prop_assert_eq!(without.distinct_coeff_count(), with.len());
    }
}
