//! Height-by-height positive-root enumeration for a (generalized) Cartan
//! matrix, with weights, Hasse edges and DOT output.
//!
//! Level 1 holds the simple roots. A candidate `β + e_j` is accepted by the
//! root-string rule `p − ⟨β, j⟩ ≥ 1`, where `p` is the largest `m` with
//! `β − m·e_j` already found and the pairing is `2(A·β)_j / A_jj`
//! ([`PairingMode::Normalized`]) or `(A·β)_j` ([`PairingMode::Raw`]).
//!
//! [`PairingMode::Relaxed`] applies the string rule only on rows that are
//! crystallographic (nonzero diagonal, normalized off-diagonal entries
//! non-positive integers). On any other row there is no string bound: `e_j`
//! may be added whenever it is linked to the support of `β` by a nonzero
//! entry, except onto `e_j` itself. This is the root support of the Lie
//! algebra in which such generators satisfy no Serre relation.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{rat_int, GoldenScalar};
use crate::matrix::ExactMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairingMode {
    Normalized,
    Raw,
    Relaxed,
}

impl PairingMode {
    pub fn name(self) -> &'static str {
        match self {
            PairingMode::Normalized => "normalized",
            PairingMode::Raw => "raw",
            PairingMode::Relaxed => "relaxed",
        }
    }
}

impl std::str::FromStr for PairingMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "normalized" | "normalized-pairing" => Ok(Self::Normalized),
            "raw" | "raw-pairing" => Ok(Self::Raw),
            "relaxed" | "relaxed-pairing" => Ok(Self::Relaxed),
            other => Err(Error::InvalidArgument(format!("unknown pairing mode {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationRule {
    pub mode: PairingMode,
    pub max_height: u32,
    pub dedup: bool,
}

impl Default for EnumerationRule {
    fn default() -> Self {
        Self {
            mode: PairingMode::Normalized,
            max_height: 10,
            dedup: true,
        }
    }
}

impl EnumerationRule {
    pub fn new(mode: PairingMode, max_height: u32) -> Self {
        Self {
            mode,
            max_height,
            dedup: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootRecord {
    pub coeffs: Vec<u32>,
    pub height: u32,
    /// `A·coeffs`
    #[serde(serialize_with = "ser_weight")]
    pub weight: Vec<GoldenScalar>,
    /// `(index of β, j)` for each accepted `β + e_j` producing this root.
    pub parents: Vec<(usize, usize)>,
}

fn ser_weight<S: serde::Serializer>(
    w: &[GoldenScalar],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(w.iter().map(ToString::to_string))
}

impl RootRecord {
    pub fn coeff_string(&self) -> String {
        join_coeffs(&self.coeffs)
    }
}

fn join_coeffs(c: &[u32]) -> String {
    let wide = c.iter().any(|&x| x > 9);
    let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
    if wide {
        parts.join(",")
    } else {
        parts.concat()
    }
}

/// Enumerated roots sorted by height, then lexicographically by
/// coefficients (descending within a height).
#[derive(Clone, Debug, Serialize)]
pub struct RootSystem {
    pub rule: EnumerationRule,
    pub rank: usize,
    pub roots: Vec<RootRecord>,
}

impl RootSystem {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn max_height(&self) -> u32 {
        self.roots.iter().map(|r| r.height).max().unwrap_or(0)
    }

    /// Root count per height, heights `1..=max_height`.
    pub fn height_histogram(&self) -> BTreeMap<u32, usize> {
        let mut h = BTreeMap::new();
        for r in &self.roots {
            *h.entry(r.height).or_insert(0) += 1;
        }
        h
    }

    /// Cumulative count through each height.
    pub fn cumulative_counts(&self) -> Vec<(u32, usize)> {
        let mut acc = 0;
        self.height_histogram()
            .into_iter()
            .map(|(h, c)| {
                acc += c;
                (h, acc)
            })
            .collect()
    }

    pub fn cumulative_through(&self, height: u32) -> usize {
        self.roots.iter().filter(|r| r.height <= height).count()
    }

    pub fn distinct_coeff_count(&self) -> usize {
        let mut v: Vec<&Vec<u32>> = self.roots.iter().map(|r| &r.coeffs).collect();
        v.sort();
        v.dedup();
        v.len()
    }

    pub fn distinct_weight_count(&self) -> usize {
        let mut v: Vec<&Vec<GoldenScalar>> = self.roots.iter().map(|r| &r.weight).collect();
        v.sort_by(|a, b| {
            a.iter()
                .map(|x| (x.a(), x.b()))
                .cmp(b.iter().map(|x| (x.a(), x.b())))
        });
        v.dedup();
        v.len()
    }

    fn first_index(&self) -> HashMap<&[u32], usize> {
        let mut idx = HashMap::new();
        for (i, r) in self.roots.iter().enumerate() {
            idx.entry(r.coeffs.as_slice()).or_insert(i);
        }
        idx
    }
}

fn scalar_entries(a: &ExactMatrix) -> Result<Vec<Vec<GoldenScalar>>> {
    let n = a.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    a.get(i, j).as_scalar().cloned().ok_or_else(|| Error::NotScalar {
                        row: i,
                        col: j,
                        value: a.get(i, j).to_string(),
                    })
                })
                .collect()
        })
        .collect()
}

/// Row `j` is crystallographic when `A_jj ≠ 0` and every `2A_jk/A_jj`
/// (k ≠ j) is a non-positive integer.
fn crystallographic_rows(a: &[Vec<GoldenScalar>]) -> Vec<bool> {
    let n = a.len();
    (0..n)
        .map(|j| {
            let d = &a[j][j];
            if d.is_zero() {
                return false;
            }
            let two_over_d = GoldenScalar::integer(2).checked_div(d).expect("nonzero");
            (0..n).filter(|&k| k != j).all(|k| {
                let c = &a[j][k] * &two_over_d;
                c.is_integer() && c.signum() <= 0
            })
        })
        .collect()
}

fn weight_of(a: &[Vec<GoldenScalar>], coeffs: &[u32]) -> Vec<GoldenScalar> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(coeffs)
                .filter(|(_, &c)| c != 0)
                .fold(GoldenScalar::zero(), |acc, (x, &c)| {
                    &acc + &x.scale(&rat_int(i64::from(c)))
                })
        })
        .collect()
}

type Parents = Vec<(usize, usize)>;

/// Enumerate positive roots of `a` up to `rule.max_height`.
pub fn enumerate(a: &ExactMatrix, rule: EnumerationRule) -> Result<RootSystem> {
    if rule.max_height < 1 {
        return Err(Error::InvalidArgument("max_height must be >= 1".into()));
    }
    let n = a.dim();
    let entries = scalar_entries(a)?;
    if rule.mode == PairingMode::Normalized {
        if let Some(index) = (0..n).find(|&i| entries[i][i].is_zero()) {
            return Err(Error::ZeroDiagonal { index });
        }
    }
    let crystallographic = crystallographic_rows(&entries);
    let two_over_diag: Vec<Option<GoldenScalar>> = (0..n)
        .map(|j| GoldenScalar::integer(2).checked_div(&entries[j][j]).ok())
        .collect();
    let linked = |j: usize, k: usize| !entries[j][k].is_zero() || !entries[k][j].is_zero();

    let mut roots: Vec<RootRecord> = Vec::new();
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();

    let mut level: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            let mut c = vec![0u32; n];
            c[i] = 1;
            c
        })
        .collect();
    level.sort_by(|x, y| y.cmp(x));
    for c in &level {
        index.insert(c.clone(), roots.len());
        roots.push(RootRecord {
            weight: weight_of(&entries, c),
            coeffs: c.clone(),
            height: 1,
            parents: Vec::new(),
        });
    }

    for height in 1..rule.max_height {
        // candidate -> discovering (parent index, j), in discovery order
        let mut next: BTreeMap<Vec<u32>, Parents> = BTreeMap::new();
        for beta in &level {
            let beta_idx = index[beta];
            let weight = &roots[beta_idx].weight;
            let support_is_only = |j: usize| beta.iter().enumerate().all(|(k, &c)| (c != 0) == (k == j));
            for j in 0..n {
                let string_bound = match rule.mode {
                    PairingMode::Relaxed => crystallographic[j],
                    _ => true,
                };
                let accept = if string_bound {
                    let pairing = match rule.mode {
                        PairingMode::Raw => weight[j].clone(),
                        _ => match &two_over_diag[j] {
                            Some(t) => &weight[j] * t,
                            // raw mode only reaches here with a zero diagonal
                            None => weight[j].clone(),
                        },
                    };
                    let mut p = 0u32;
                    let mut probe = beta.clone();
                    while probe[j] > 0 {
                        probe[j] -= 1;
                        if probe.iter().all(|&x| x == 0) || !index.contains_key(&probe) {
                            break;
                        }
                        p += 1;
                    }
                    let margin = &GoldenScalar::integer(i64::from(p) - 1) - &pairing;
                    margin.signum() >= 0
                } else {
                    !support_is_only(j)
                        && (beta[j] > 0 || (0..n).any(|k| beta[k] > 0 && linked(j, k)))
                };
                if accept {
                    let mut gamma = beta.clone();
                    gamma[j] += 1;
                    next.entry(gamma).or_default().push((beta_idx, j));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        // descending lexicographic order within a height
        let mut ordered: Vec<(Vec<u32>, Parents)> = next.into_iter().collect();
        ordered.reverse();
        level = Vec::with_capacity(ordered.len());
        for (gamma, parents) in ordered {
            let weight = weight_of(&entries, &gamma);
            index.insert(gamma.clone(), roots.len());
            if rule.dedup {
                roots.push(RootRecord {
                    coeffs: gamma.clone(),
                    height: height + 1,
                    weight,
                    parents,
                });
            } else {
                for p in parents {
                    roots.push(RootRecord {
                        coeffs: gamma.clone(),
                        height: height + 1,
                        weight: weight.clone(),
                        parents: vec![p],
                    });
                }
            }
            level.push(gamma);
        }
    }
    Ok(RootSystem {
        rule,
        rank: n,
        roots,
    })
}

/// Table of weights in the `{1, φ}` basis.
#[derive(Clone, Debug, Serialize)]
pub struct WeightsTable {
    pub rows: Vec<WeightRow>,
    pub all_integer: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightRow {
    pub height: u32,
    pub coeffs: String,
    pub weight: Vec<String>,
    pub integer: bool,
}

pub fn weights_table(system: &RootSystem) -> WeightsTable {
    let rows: Vec<WeightRow> = system
        .roots
        .iter()
        .map(|r| WeightRow {
            height: r.height,
            coeffs: r.coeff_string(),
            weight: r.weight.iter().map(ToString::to_string).collect(),
            integer: r.weight.iter().all(GoldenScalar::is_integer),
        })
        .collect();
    let all_integer = rows.iter().all(|r| r.integer);
    WeightsTable { rows, all_integer }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HasseEdge {
    pub from: usize,
    pub to: usize,
    pub simple: usize,
}

/// Edges `β → β + e_j` between present roots (first occurrence of each
/// coefficient vector), ordered by source then simple root.
pub fn hasse(system: &RootSystem) -> Vec<HasseEdge> {
    let idx = system.first_index();
    let mut edges = Vec::new();
    for (&coeffs, &from) in &idx {
        for j in 0..coeffs.len() {
            let mut up = coeffs.to_vec();
            up[j] += 1;
            if let Some(&to) = idx.get(up.as_slice()) {
                edges.push(HasseEdge { from, to, simple: j });
            }
        }
    }
    edges.sort();
    edges
}

/// Edge structure as pairs of coefficient vectors, independent of indexing.
pub fn hasse_shape(system: &RootSystem) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out: Vec<_> = hasse(system)
        .into_iter()
        .map(|e| (system.roots[e.from].coeffs.clone(), system.roots[e.to].coeffs.clone()))
        .collect();
    out.sort();
    out
}

/// DOT digraph grouped by height; nodes are named `r<height>_<index>`
/// with `index` the position within that height.
pub fn emit_hasse_dot(edges: &[HasseEdge], system: &RootSystem) -> String {
    let idx = system.first_index();
    let mut name = vec![String::new(); system.roots.len()];
    let mut by_height: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    let mut ordered: Vec<usize> = idx.values().copied().collect();
    ordered.sort_unstable();
    for i in ordered {
        let h = system.roots[i].height;
        let slot = by_height.entry(h).or_default();
        name[i] = format!("r{}_{}", h, slot.len());
        slot.push(i);
    }
    let mut out = String::new();
    out.push_str("digraph hasse {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
    for (h, members) in &by_height {
        let _ = writeln!(out, "  subgraph height_{h} {{\n    rank=same;");
        for &i in members {
            let _ = writeln!(
                out,
                "    {} [label=\"{}\\nh={}\"];",
                name[i],
                system.roots[i].coeff_string(),
                h
            );
        }
        out.push_str("  }\n");
    }
    for e in edges {
        let _ = writeln!(
            out,
            "  {} -> {} [label=\"{}\"];",
            name[e.from],
            name[e.to],
            e.simple + 1
        );
    }
    out.push_str("}\n");
    out
}
