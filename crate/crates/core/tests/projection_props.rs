use golden8::field::PHI_F64;
use golden8::projection::{
    analyze, build_vertices, classify_hull, default_rule, peel_hulls, project, tally_all, Basis,
    COPLANAR_TOL,
};
use proptest::prelude::*;
use std::f64::consts::{PI, TAU};

const QHULL_LAYERS: &str = include_str!("data/qhull_layers.txt");

fn icosahedron() -> Vec<[f64; 3]> {
    let mut v = Vec::new();
    for a in [1.0, -1.0] {
        for b in [PHI_F64, -PHI_F64] {
            v.push([0.0, a, b]);
            v.push([a, b, 0.0]);
            v.push([b, 0.0, a]);
        }
    }
    v
}

fn octahedron() -> Vec<[f64; 3]> {
    let mut v = Vec::new();
    for k in 0..3 {
        for s in [1.0, -1.0] {
            let mut p = [0.0; 3];
            p[k] = s;
            v.push(p);
        }
    }
    v
}

/// Rotation from a unit quaternion built from three angles.
fn rotation(a: f64, b: f64, c: f64) -> [[f64; 3]; 3] {
    let (w, x, y, z) = {
        let q = [a.cos(), a.sin() * b.cos(), a.sin() * b.sin() * c.cos(), a.sin() * b.sin() * c.sin()];
        (q[0], q[1], q[2], q[3])
    };
    [
        [1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - w * z), 2.0 * (x * z + w * y)],
        [2.0 * (x * y + w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - w * x)],
        [2.0 * (x * z - w * y), 2.0 * (y * z + w * x), 1.0 - 2.0 * (x * x + y * y)],
    ]
}

fn transform(pts: &[[f64; 3]], r: &[[f64; 3]; 3], s: f64) -> Vec<[f64; 3]> {
    pts.iter()
        .map(|p| std::array::from_fn(|i| s * (r[i][0] * p[0] + r[i][1] * p[1] + r[i][2] * p[2])))
        .collect()
}

fn signature_of(pts: &[[f64; 3]]) -> Vec<String> {
    peel_hulls(pts, COPLANAR_TOL)
        .iter()
        .map(|l| classify_hull(l).classification)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn classification_survives_rotation_and_scale(
        a in 0.0..PI, b in 0.0..PI, c in 0.0..TAU, s in 0.01f64..100.0
    ) {
        let r = rotation(a, b, c);
        let mut nested = octahedron();
        nested.extend(transform(&icosahedron(), &rotation(0.3, 1.1, 2.0), 3.0));
        for solid in [octahedron(), icosahedron(), nested] {
            prop_assert_eq!(signature_of(&transform(&solid, &r, s)), signature_of(&solid));
        }
        let mut stretched = octahedron();
        stretched[2][1] *= 1.5;
        prop_assert_eq!(signature_of(&transform(&stretched, &r, s)), vec!["other(v=6)".to_string()]);
    }
}

#[test]
fn layers_match_qhull_on_every_subset() {
    let vs = build_vertices(Basis::U, default_rule()).unwrap();
    let mut checked = 0;
    for line in QHULL_LAYERS.lines().filter(|l| !l.starts_with('#')) {
        let (dims, sizes) = line.split_once(' ').unwrap();
        let d: Vec<usize> = dims.split(',').map(|x| x.parse().unwrap()).collect();
        let want: Vec<usize> = sizes.split(' ').map(|x| x.parse().unwrap()).collect();
        let (report, _) = analyze(&vs, [d[0], d[1], d[2]]).unwrap();
        let got: Vec<usize> = report.layers.iter().map(|l| l.vertex_count).collect();
        assert_eq!(got, want, "dims {dims}");
        assert_eq!(got.iter().sum::<usize>(), report.distinct_points);
        checked += 1;
    }
    assert_eq!(checked, 56);
}

#[test]
fn dims_234_show_octahedra_and_icosahedra() {
    let vs = build_vertices(Basis::U, default_rule()).unwrap();
    let (report, _) = analyze(&vs, [2, 3, 4]).unwrap();
    let kinds: Vec<&str> = report.layers.iter().map(|l| l.classification.as_str()).collect();
    assert!(kinds.contains(&"regular octahedron"));
    assert!(kinds.iter().any(|k| k.ends_with("icosahedron")));
    assert!(kinds.contains(&"irregular icosahedron"));
}

#[test]
fn projection_keeps_negation_symmetry() {
    let vs = build_vertices(Basis::U, default_rule()).unwrap();
    let p = project(&vs, [2, 3, 4]).unwrap();
    for q in &p.points {
        let neg = q.map(|c| -c);
        assert!(p.points.iter().any(|r| (0..3).all(|k| (r[k] - neg[k]).abs() < 1e-12)));
    }
    assert_eq!(p.multiplicity.iter().sum::<usize>(), vs.len());
}

#[test]
fn tally_is_grouped_and_deterministic() {
    let vs = build_vertices(Basis::U, default_rule()).unwrap();
    let t = tally_all(&vs).unwrap();
    assert_eq!(t.reports.len(), 56);
    assert!(t.group_count > 1);
    assert_eq!(t.groups.iter().map(|g| g.members.len()).sum::<usize>(), 56);
    let again = tally_all(&vs).unwrap();
    let sigs = |x: &golden8::projection::Tally| x.reports.iter().map(|r| r.signature.clone()).collect::<Vec<_>>();
    assert_eq!(sigs(&t), sigs(&again));
    let cmu = tally_all(&build_vertices(Basis::CmU, default_rule()).unwrap()).unwrap();
    assert_eq!(cmu.reports.len(), 56);
}
