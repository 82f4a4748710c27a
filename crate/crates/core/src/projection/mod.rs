//! Vertex sets built from the positive roots of cmU, their projections onto
//! the 56 coordinate 3-subsets, and convex-hull peeling of each projection.
//!
//! Linear algebra is exact; points become `f64` only after projection and
//! deduplication.

pub mod hull;

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::constants::{build_cmu, build_u};
use crate::error::{Error, Result};
use crate::field::GoldenExt;
use crate::matrix::ExactMatrix;
use crate::roots::{enumerate, EnumerationRule, PairingMode};

pub use hull::{convex_hull, Extent, Hull};

pub const COPLANAR_TOL: f64 = 1e-9;
pub const EDGE_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Basis {
    U,
    #[serde(rename = "cmU")]
    CmU,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::U => "U",
            Basis::CmU => "cmU",
        }
    }

    pub fn matrix(self) -> ExactMatrix {
        match self {
            Basis::U => build_u(),
            Basis::CmU => build_cmu(),
        }
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "U" | "u" => Ok(Basis::U),
            "cmU" | "cmu" => Ok(Basis::CmU),
            other => Err(Error::InvalidArgument(format!("unknown basis {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Provenance {
    pub cartan: String,
    pub basis: Basis,
    pub rule: EnumerationRule,
    pub positive_roots: usize,
}

/// `±(coeffs·B)` over the enumerated positive roots.
#[derive(Clone, Debug, Serialize)]
pub struct VertexSet {
    #[serde(skip)]
    pub exact: Vec<Vec<GoldenExt>>,
    pub points: Vec<[f64; 8]>,
    pub provenance: Provenance,
}

impl VertexSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Vertices from arbitrary exact rows, for tests and custom inputs.
    pub fn from_exact(exact: Vec<Vec<GoldenExt>>, provenance: Provenance) -> Result<Self> {
        if let Some(bad) = exact.iter().find(|v| v.len() != 8) {
            return Err(Error::DimensionMismatch {
                left: 8,
                right: bad.len(),
            });
        }
        let points = exact
            .iter()
            .map(|v| std::array::from_fn(|k| v[k].to_f64()))
            .collect();
        Ok(Self {
            exact,
            points,
            provenance,
        })
    }
}

/// Rule used by default for the cmU vertex set.
pub fn default_rule() -> EnumerationRule {
    EnumerationRule::new(PairingMode::Relaxed, 8)
}

pub fn build_vertices(basis: Basis, rule: EnumerationRule) -> Result<VertexSet> {
    let sys = enumerate(&build_cmu(), rule)?;
    let b = basis.matrix();
    let mut exact = Vec::with_capacity(2 * sys.len());
    let mut seen = std::collections::HashSet::new();
    for r in &sys.roots {
        if !seen.insert(r.coeffs.clone()) {
            continue;
        }
        let v: Vec<GoldenExt> = (0..8)
            .map(|k| {
                r.coeffs.iter().enumerate().fold(GoldenExt::zero(), |acc, (i, &c)| {
                    if c == 0 {
                        acc
                    } else {
                        &acc + &(&GoldenExt::integer(i64::from(c)) * b.get(i, k))
                    }
                })
            })
            .collect();
        let neg: Vec<GoldenExt> = v.iter().map(|x| -x).collect();
        exact.push(v);
        exact.push(neg);
    }
    VertexSet::from_exact(
        exact,
        Provenance {
            cartan: "cmU".into(),
            basis,
            rule,
            positive_roots: seen.len(),
        },
    )
}

/// All 3-subsets of `1..=8`, lexicographic.
pub fn all_subsets() -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(56);
    for a in 1..=8 {
        for b in a + 1..=8 {
            for c in b + 1..=8 {
                out.push([a, b, c]);
            }
        }
    }
    out
}

pub fn check_dims(dims: [usize; 3]) -> Result<()> {
    if dims.iter().any(|&d| !(1..=8).contains(&d)) {
        return Err(Error::InvalidArgument(format!("dimensions {dims:?} must lie in 1..=8")));
    }
    if dims[0] == dims[1] || dims[0] == dims[2] || dims[1] == dims[2] {
        return Err(Error::InvalidArgument(format!("dimensions {dims:?} must be distinct")));
    }
    Ok(())
}

/// Distinct projected points in order of first appearance.
#[derive(Clone, Debug, Serialize)]
pub struct Projection {
    pub dims: [usize; 3],
    pub points: Vec<[f64; 3]>,
    pub multiplicity: Vec<usize>,
}

/// Coordinate selection on 1-based `dims`; exactly equal images merge.
pub fn project(vs: &VertexSet, dims: [usize; 3]) -> Result<Projection> {
    check_dims(dims)?;
    let mut index: HashMap<[&GoldenExt; 3], usize> = HashMap::new();
    let mut points = Vec::new();
    let mut multiplicity = Vec::new();
    for v in &vs.exact {
        let key = dims.map(|d| &v[d - 1]);
        match index.get(&key) {
            Some(&i) => multiplicity[i] += 1,
            None => {
                index.insert(key, points.len());
                points.push(key.map(GoldenExt::to_f64));
                multiplicity.push(1);
            }
        }
    }
    Ok(Projection {
        dims,
        points,
        multiplicity,
    })
}

/// One peeled shell; `points` and `edges` are local to the layer.
#[derive(Clone, Debug)]
pub struct Layer {
    pub extent: Extent,
    pub points: Vec<[f64; 3]>,
    pub edges: Vec<(usize, usize)>,
    /// Faces as counterclockwise corner lists.
    pub faces: Vec<Vec<usize>>,
}

/// Repeatedly take the hull corners of the remaining points as a layer.
/// A point, collinear or coplanar remainder becomes one final layer.
pub fn peel_hulls(points: &[[f64; 3]], rel_tol: f64) -> Vec<Layer> {
    let eps = hull::tolerance(points, rel_tol);
    let mut remaining: Vec<[f64; 3]> = points.to_vec();
    let mut layers = Vec::new();
    while !remaining.is_empty() {
        let h = convex_hull(&remaining, eps);
        let local: HashMap<usize, usize> = h.corners.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let layer_points: Vec<[f64; 3]> = h.corners.iter().map(|&i| remaining[i]).collect();
        let edges = h.edges.iter().map(|(a, b)| (local[a], local[b])).collect();
        let faces = h
            .faces
            .iter()
            .zip(&h.planes)
            .map(|(f, pl)| {
                hull::order_face(&remaining, f, pl.normal)
                    .into_iter()
                    .map(|i| local[&i])
                    .collect()
            })
            .collect();
        layers.push(Layer {
            extent: h.extent,
            points: layer_points,
            edges,
            faces,
        });
        if h.extent != Extent::Solid {
            break;
        }
        let mut taken = vec![false; remaining.len()];
        for &i in &h.corners {
            taken[i] = true;
        }
        remaining = remaining
            .into_iter()
            .zip(taken)
            .filter(|(_, t)| !t)
            .map(|(p, _)| p)
            .collect();
    }
    layers
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LayerReport {
    pub vertex_count: usize,
    pub classification: String,
    pub edge_count: usize,
    /// Longest over shortest edge.
    pub edge_spread: Option<f64>,
}

fn edge_lengths(layer: &Layer) -> Vec<f64> {
    layer
        .edges
        .iter()
        .map(|&(a, b)| hull::dist(layer.points[a], layer.points[b]))
        .collect()
}

pub fn classify_hull(layer: &Layer) -> LayerReport {
    let v = layer.points.len();
    let lengths = edge_lengths(layer);
    let (min, max) = lengths
        .iter()
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), &l| (lo.min(l), hi.max(l)));
    let spread = (!lengths.is_empty() && min > 0.0).then(|| max / min);
    let equal = spread.is_some() && (max - min) <= EDGE_TOL * max;
    let mut degree = vec![0usize; v];
    for &(a, b) in &layer.edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let classification = match layer.extent {
        Extent::Point => "point".to_string(),
        Extent::Linear => format!("linear(v={v})"),
        Extent::Flat => format!("flat(v={v})"),
        Extent::Solid => {
            if v == 6 && layer.edges.len() == 12 && degree.iter().all(|&d| d == 4) && equal {
                "regular octahedron".to_string()
            } else if v == 12 && layer.edges.len() == 30 && degree.iter().all(|&d| d == 5) {
                if equal { "regular icosahedron" } else { "irregular icosahedron" }.to_string()
            } else {
                format!("other(v={v})")
            }
        }
    };
    LayerReport {
        vertex_count: v,
        classification,
        edge_count: layer.edges.len(),
        edge_spread: spread,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HullReport {
    pub dims: [usize; 3],
    pub distinct_points: usize,
    pub max_multiplicity: usize,
    pub layers: Vec<LayerReport>,
    pub signature: String,
}

pub fn signature(layers: &[LayerReport]) -> String {
    layers
        .iter()
        .map(|l| l.classification.as_str())
        .collect::<Vec<_>>()
        .join(" / ")
}

pub fn analyze(vs: &VertexSet, dims: [usize; 3]) -> Result<(HullReport, Vec<Layer>)> {
    let proj = project(vs, dims)?;
    let layers = peel_hulls(&proj.points, COPLANAR_TOL);
    let reports: Vec<LayerReport> = layers.iter().map(classify_hull).collect();
    Ok((
        HullReport {
            dims,
            distinct_points: proj.points.len(),
            max_multiplicity: proj.multiplicity.iter().copied().max().unwrap_or(0),
            signature: signature(&reports),
            layers: reports,
        },
        layers,
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct SignatureGroup {
    pub signature: String,
    pub members: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Tally {
    pub provenance: Provenance,
    pub reports: Vec<HullReport>,
    pub group_count: usize,
    pub groups: Vec<SignatureGroup>,
}

pub fn group_reports(reports: &[HullReport]) -> Vec<SignatureGroup> {
    let mut by_sig: BTreeMap<&str, Vec<[usize; 3]>> = BTreeMap::new();
    for r in reports {
        by_sig.entry(&r.signature).or_default().push(r.dims);
    }
    by_sig
        .into_iter()
        .map(|(s, mut members)| {
            members.sort_unstable();
            SignatureGroup {
                signature: s.to_string(),
                members,
            }
        })
        .collect()
}

pub fn tally_all(vs: &VertexSet) -> Result<Tally> {
    let mut reports = all_subsets()
        .into_iter()
        .map(|d| analyze(vs, d).map(|(r, _)| r))
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by_key(|r| r.dims);
    let groups = group_reports(&reports);
    Ok(Tally {
        provenance: vs.provenance.clone(),
        group_count: groups.len(),
        reports,
        groups,
    })
}

fn fmt_coord(x: f64) -> String {
    let s = format!("{x:.12}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000000000000".to_string()
    } else {
        s
    }
}

/// Wavefront OBJ text with one object per layer.
pub fn layers_to_obj(dims: [usize; 3], layers: &[Layer]) -> String {
    let mut out = format!("# hull layers, dims {} {} {}\n", dims[0], dims[1], dims[2]);
    let mut base = 1;
    for (k, layer) in layers.iter().enumerate() {
        let _ = writeln!(out, "o layer_{}", k + 1);
        for p in &layer.points {
            let _ = writeln!(out, "v {} {} {}", fmt_coord(p[0]), fmt_coord(p[1]), fmt_coord(p[2]));
        }
        for f in &layer.faces {
            let idx: Vec<String> = f.iter().map(|i| (i + base).to_string()).collect();
            let _ = writeln!(out, "f {}", idx.join(" "));
        }
        if layer.faces.is_empty() {
            for &(a, b) in &layer.edges {
                let _ = writeln!(out, "l {} {}", a + base, b + base);
            }
        }
        base += layer.points.len();
    }
    out
}
