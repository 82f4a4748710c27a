//! Incremental 3D convex hull in floating point, reduced to its facet planes
//! so that coplanar triangles and points on faces or edges are handled
//! uniformly.

type P3 = [f64; 3];

fn sub(a: P3, b: P3) -> P3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot(a: P3, b: P3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: P3, b: P3) -> P3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm(a: P3) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn dist(a: P3, b: P3) -> f64 {
    norm(sub(a, b))
}

/// Supporting plane `n·x = d` with unit outward normal.
#[derive(Clone, Copy, Debug)]
pub struct Plane {
    pub normal: P3,
    pub offset: f64,
}

impl Plane {
    fn through(a: P3, b: P3, c: P3) -> Option<Self> {
        let n = cross(sub(b, a), sub(c, a));
        let len = norm(n);
        if len == 0.0 {
            return None;
        }
        let normal = [n[0] / len, n[1] / len, n[2] / len];
        Some(Self {
            normal,
            offset: dot(normal, a),
        })
    }

    pub fn signed_distance(&self, p: P3) -> f64 {
        dot(self.normal, p) - self.offset
    }

    fn same_as(&self, other: &Self, eps: f64) -> bool {
        norm(sub(self.normal, other.normal)) <= 1e-9 && (self.offset - other.offset).abs() <= eps
    }
}

/// Affine dimension of a point set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extent {
    Point,
    Linear,
    Flat,
    Solid,
}

/// Corners, edges and facet planes of the convex hull of `points`.
#[derive(Clone, Debug)]
pub struct Hull {
    pub extent: Extent,
    pub corners: Vec<usize>,
    /// Pairs of corner indices (into `points`) sharing two facet planes.
    pub edges: Vec<(usize, usize)>,
    pub planes: Vec<Plane>,
    /// For each plane, the corners lying on it.
    pub faces: Vec<Vec<usize>>,
}

pub fn tolerance(points: &[P3], rel: f64) -> f64 {
    let scale = points
        .iter()
        .flat_map(|p| p.iter().map(|c| c.abs()))
        .fold(0.0, f64::max);
    rel * scale.max(1.0)
}

struct Face {
    v: [usize; 3],
    plane: Plane,
    alive: bool,
}

fn farthest(points: &[P3], mut key: impl FnMut(P3) -> f64) -> (usize, f64) {
    let mut best = (0, f64::NEG_INFINITY);
    for (i, &p) in points.iter().enumerate() {
        let k = key(p);
        if k > best.1 {
            best = (i, k);
        }
    }
    best
}

/// Hull of `points` with absolute tolerance `eps`.
pub fn convex_hull(points: &[P3], eps: f64) -> Hull {
    let degenerate = |extent, corners: Vec<usize>| Hull {
        extent,
        corners,
        edges: Vec::new(),
        planes: Vec::new(),
        faces: Vec::new(),
    };
    if points.is_empty() {
        return degenerate(Extent::Point, Vec::new());
    }
    let i0 = 0;
    let (i1, d1) = farthest(points, |p| dist(p, points[i0]));
    if d1 <= eps {
        return degenerate(Extent::Point, (0..points.len()).collect());
    }
    let axis = sub(points[i1], points[i0]);
    let (i2, d2) = farthest(points, |p| norm(cross(axis, sub(p, points[i0]))) / norm(axis));
    if d2 <= eps {
        return degenerate(Extent::Linear, (0..points.len()).collect());
    }
    let base = Plane::through(points[i0], points[i1], points[i2]).expect("non-collinear");
    let (i3, d3) = farthest(points, |p| base.signed_distance(p).abs());
    if d3 <= eps {
        return degenerate(Extent::Flat, (0..points.len()).collect());
    }

    let tet = [i0, i1, i2, i3];
    let centroid = tet.iter().fold([0.0; 3], |acc, &i| {
        [acc[0] + points[i][0] / 4.0, acc[1] + points[i][1] / 4.0, acc[2] + points[i][2] / 4.0]
    });
    let mut faces: Vec<Face> = Vec::new();
    let add_face = |faces: &mut Vec<Face>, a: usize, b: usize, c: usize| {
        let mut v = [a, b, c];
        let mut plane = Plane::through(points[a], points[b], points[c]).expect("non-degenerate face");
        if plane.signed_distance(centroid) > 0.0 {
            v.swap(1, 2);
            plane = Plane::through(points[v[0]], points[v[1]], points[v[2]]).expect("non-degenerate face");
        }
        faces.push(Face { v, plane, alive: true });
    };
    add_face(&mut faces, i0, i1, i2);
    add_face(&mut faces, i0, i1, i3);
    add_face(&mut faces, i0, i2, i3);
    add_face(&mut faces, i1, i2, i3);

    for (p, &pt) in points.iter().enumerate() {
        if tet.contains(&p) {
            continue;
        }
        let visible: Vec<usize> = (0..faces.len())
            .filter(|&f| faces[f].alive && faces[f].plane.signed_distance(pt) > eps)
            .collect();
        if visible.is_empty() {
            continue;
        }
        let mut directed: Vec<(usize, usize)> = Vec::new();
        for &f in &visible {
            let v = faces[f].v;
            directed.extend([(v[0], v[1]), (v[1], v[2]), (v[2], v[0])]);
            faces[f].alive = false;
        }
        let horizon: Vec<(usize, usize)> = directed
            .iter()
            .copied()
            .filter(|&(a, b)| !directed.contains(&(b, a)))
            .collect();
        for (a, b) in horizon {
            if let Some(plane) = Plane::through(points[a], points[b], pt) {
                faces.push(Face {
                    v: [a, b, p],
                    plane,
                    alive: true,
                });
            }
        }
    }

    let mut planes: Vec<Plane> = Vec::new();
    for f in faces.iter().filter(|f| f.alive) {
        if !planes.iter().any(|q| q.same_as(&f.plane, eps)) {
            planes.push(f.plane);
        }
    }
    let on: Vec<Vec<usize>> = points
        .iter()
        .map(|&pt| {
            (0..planes.len())
                .filter(|&k| planes[k].signed_distance(pt).abs() <= eps)
                .collect()
        })
        .collect();
    let corners: Vec<usize> = (0..points.len()).filter(|&i| on[i].len() >= 3).collect();
    let mut edges = Vec::new();
    for (x, &a) in corners.iter().enumerate() {
        for &b in &corners[x + 1..] {
            let shared = on[a].iter().filter(|k| on[b].contains(k)).count();
            if shared >= 2 {
                edges.push((a, b));
            }
        }
    }
    let faces = (0..planes.len())
        .map(|k| corners.iter().copied().filter(|&c| on[c].contains(&k)).collect())
        .collect();
    Hull {
        extent: Extent::Solid,
        corners,
        edges,
        planes,
        faces,
    }
}

/// Corners of a face ordered counterclockwise about its outward normal.
pub fn order_face(points: &[P3], face: &[usize], normal: P3) -> Vec<usize> {
    let n = face.len() as f64;
    let c = face.iter().fold([0.0; 3], |acc, &i| {
        [acc[0] + points[i][0] / n, acc[1] + points[i][1] / n, acc[2] + points[i][2] / n]
    });
    let Some(&first) = face.first() else {
        return Vec::new();
    };
    let u = sub(points[first], c);
    let w = cross(normal, u);
    let mut keyed: Vec<(f64, usize)> = face
        .iter()
        .map(|&i| {
            let d = sub(points[i], c);
            (dot(d, w).atan2(dot(d, u)), i)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    keyed.into_iter().map(|(_, i)| i).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube() -> Vec<P3> {
        let mut v = Vec::new();
        for x in [-1.0, 1.0] {
            for y in [-1.0, 1.0] {
                for z in [-1.0, 1.0] {
                    v.push([x, y, z]);
                }
            }
        }
        v
    }

    #[test]
    fn cube_hull() {
        let mut pts = cube();
        pts.push([0.0, 0.0, 0.0]);
        pts.push([1.0, 0.0, 0.0]);
        pts.push([1.0, 1.0, 0.0]);
        let h = convex_hull(&pts, 1e-9);
        assert_eq!(h.extent, Extent::Solid);
        assert_eq!(h.corners, (0..8).collect::<Vec<_>>());
        assert_eq!(h.planes.len(), 6);
        assert_eq!(h.edges.len(), 12);
    }

    #[test]
    fn degenerate_sets() {
        assert_eq!(convex_hull(&[[1.0, 2.0, 3.0]], 1e-9).extent, Extent::Point);
        let line = [[0.0, 0.0, 0.0], [1.0, 1.0, 1.0], [2.0, 2.0, 2.0]];
        assert_eq!(convex_hull(&line, 1e-9).extent, Extent::Linear);
        let flat = [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [1.0, 1.0, 0.0]];
        assert_eq!(convex_hull(&flat, 1e-9).extent, Extent::Flat);
    }

    #[test]
    fn square_face_order() {
        let pts = cube();
        let h = convex_hull(&pts, 1e-9);
        for (k, f) in h.faces.iter().enumerate() {
            let ordered = order_face(&pts, f, h.planes[k].normal);
            assert_eq!(ordered.len(), 4);
            for w in 0..4 {
                let (a, b) = (ordered[w], ordered[(w + 1) % 4]);
                assert!((dist(pts[a], pts[b]) - 2.0).abs() < 1e-12);
            }
        }
    }
}
