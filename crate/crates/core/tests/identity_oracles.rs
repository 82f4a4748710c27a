use golden8::constants::{build_bracket_minus, build_bracket_plus, build_hadamard, build_u};
use golden8::identities::{hadamard_char_poly_reference, u_char_poly_reference, Suite};
use golden8::GoldenScalar;

fn lucas(n: u32) -> i64 {
    let (mut a, mut b) = (2i64, 1i64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

fn fibonacci(n: u32) -> i64 {
    let (mut a, mut b) = (0i64, 1i64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

#[test]
fn power_scalars_follow_lucas_and_fibonacci() {
    let suite = Suite::default();
    for n in 1..=10 {
        let p = suite.verify_power_pattern(n).unwrap();
        assert!(p.sum_report.holds && p.diff_report.holds, "n = {n}");
        let sqrt5 = GoldenScalar::sqrt5();
        let (int_side, rad_side) = if n % 2 == 0 {
            (&p.sum_scalar, &p.diff_scalar)
        } else {
            (&p.diff_scalar, &p.sum_scalar)
        };
        assert_eq!(int_side, &GoldenScalar::integer(lucas(n)), "n = {n}");
        assert_eq!(rad_side, &sqrt5.scale(&golden8::Rational::from_integer(fibonacci(n).into())), "n = {n}");
    }
}

#[test]
fn u_polynomial_at_one_matches_float_determinant() {
    // det(I − U) in floats against the exact polynomial at x = 1
    let u = build_u().to_f64_rows();
    let mut m: Vec<Vec<f64>> = (0..8)
        .map(|i| (0..8).map(|j| if i == j { 1.0 } else { 0.0 } - u[i][j]).collect())
        .collect();
    let mut det = 1.0;
    for c in 0..8 {
        let p = (c..8).max_by(|&a, &b| m[a][c].abs().total_cmp(&m[b][c].abs())).unwrap();
        m.swap(c, p);
        if p != c {
            det = -det;
        }
        det *= m[c][c];
        let pivot = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            let f = row[c] / pivot[c];
            for (x, p) in row.iter_mut().zip(&pivot).skip(c) {
                *x -= f * p;
            }
        }
    }
    let poly_at_one: f64 = u_char_poly_reference().coeffs().iter().map(|c| c.to_f64()).sum();
    assert!((det - poly_at_one).abs() < 1e-9, "{det} vs {poly_at_one}");
}

#[test]
fn normalized_hadamard_polynomial_is_binomial() {
    // eigenvalues ±1 with multiplicity 4 each: (x² − 1)⁴
    let binom = [1i64, 4, 6, 4, 1];
    let h = build_hadamard(3).unwrap().normalized_char_poly().unwrap();
    let expected: Vec<i64> = (0..=8)
        .map(|k| if k % 2 == 1 { 0 } else { binom[k / 2] * if (k / 2) % 2 == 0 { 1 } else { -1 } })
        .collect();
    let got: Vec<String> = h.coeffs().iter().map(ToString::to_string).collect();
    assert_eq!(got, expected.iter().map(ToString::to_string).collect::<Vec<_>>());
    assert_eq!(h, hadamard_char_poly_reference());
}

#[test]
fn brackets_are_orthogonal_and_traceless() {
    for b in [build_bracket_plus(), build_bracket_minus()] {
        assert!(b.is_orthogonal());
        assert!(b.trace().is_zero());
        assert_eq!(b.char_poly(), hadamard_char_poly_reference());
    }
}

#[test]
fn whole_battery_holds() {
    let suite = Suite::default();
    let reports = suite.run_all();
    assert!(reports.iter().all(|r| r.holds), "{:?}", reports.iter().find(|r| !r.holds));
}
