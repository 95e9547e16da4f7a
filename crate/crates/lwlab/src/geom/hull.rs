//! Incremental convex hull for dimensions 1..=6 with simplicial facets.
//!
//! Points are inserted one at a time; the horizon of the visible region is
//! recovered from ridge counts among visible facets, so no global adjacency
//! is maintained. Sign queries within the coplanarity tolerance fall back to
//! exact rational determinants.

use crate::error::{LwError, Result};
use crate::linalg::{self, Vector};
use crate::tol;
use std::collections::HashMap;

/// One supporting halfspace `<normal, x> <= offset` with its incident
/// vertices (indices into the owning hull's vertex list).
#[derive(Debug, Clone)]
pub struct Facet {
    pub normal: Vector,
    pub offset: f64,
    pub vertices: Vec<usize>,
}

/// Convex hull of a point set: canonical extreme points plus simplicial
/// facets. `interior` is a strictly interior point (vertex centroid).
#[derive(Debug, Clone)]
pub struct Hull {
    pub dim: usize,
    pub vertices: Vec<Vector>,
    pub facets: Vec<Facet>,
    pub interior: Vector,
}

/// Coplanarity tolerance scaled to the coordinate magnitude of the input.
fn scaled_tol(points: &[Vector]) -> f64 {
    let scale = points
        .iter()
        .flat_map(|p| p.iter())
        .fold(0.0f64, |m, &x| m.max(x.abs()));
    tol::COPLANAR * scale.max(1.0)
}

/// Convex hull of `points` in dimension `dim`.
///
/// Errors with `DegenerateInput` when the affine hull of the points has
/// dimension below `dim`.
pub fn convex_hull(dim: usize, points: &[Vector]) -> Result<Hull> {
    assert!(dim >= 1 && dim <= 6, "hull supports dimensions 1..=6");
    for p in points {
        assert_eq!(p.len(), dim);
        assert!(p.iter().all(|x| x.is_finite()), "non-finite coordinate");
    }
    if points.len() < dim + 1 {
        return Err(LwError::DegenerateInput {
            found: affine_dim(points, scaled_tol(points)),
            expected: dim,
        });
    }
    if dim == 1 {
        return hull_1d(points);
    }
    Builder::new(dim, points)?.run()
}

/// Dimension of the affine hull of `points`, judged at tolerance `tol`.
pub fn affine_dim(points: &[Vector], tol: f64) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let diffs: Vec<Vector> = points[1..]
        .iter()
        .map(|p| linalg::sub(p, &points[0]))
        .collect();
    linalg::gram_schmidt(&diffs, tol).len()
}

fn hull_1d(points: &[Vector]) -> Result<Hull> {
    let mut lo = 0;
    let mut hi = 0;
    for (i, p) in points.iter().enumerate() {
        if p[0] < points[lo][0] {
            lo = i;
        }
        if p[0] > points[hi][0] {
            hi = i;
        }
    }
    let t = scaled_tol(points);
    if points[hi][0] - points[lo][0] <= t {
        return Err(LwError::DegenerateInput {
            found: 0,
            expected: 1,
        });
    }
    let vertices = vec![points[lo].clone(), points[hi].clone()];
    let facets = vec![
        Facet {
            normal: vec![-1.0],
            offset: -vertices[0][0],
            vertices: vec![0],
        },
        Facet {
            normal: vec![1.0],
            offset: vertices[1][0],
            vertices: vec![1],
        },
    ];
    let interior = vec![0.5 * (vertices[0][0] + vertices[1][0])];
    Ok(Hull {
        dim: 1,
        vertices,
        facets,
        interior,
    })
}

struct Builder<'a> {
    dim: usize,
    points: &'a [Vector],
    tol: f64,
    facets: Vec<Facet>, // vertices index into `points` during construction
    interior: Vector,
}

impl<'a> Builder<'a> {
    fn new(dim: usize, points: &'a [Vector]) -> Result<Self> {
        let tol = scaled_tol(points);
        let seed = initial_simplex(dim, points, tol)?;
        let interior: Vector = {
            let mut c = vec![0.0; dim];
            for &i in &seed {
                linalg::axpy(&mut c, 1.0 / (dim as f64 + 1.0), &points[i]);
            }
            c
        };
        let mut b = Builder {
            dim,
            points,
            tol,
            facets: Vec::new(),
            interior,
        };
        for omit in 0..seed.len() {
            let verts: Vec<usize> = seed
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != omit)
                .map(|(_, &v)| v)
                .collect();
            let f = b.make_facet(verts)?;
            b.facets.push(f);
        }
        Ok(b)
    }

    fn make_facet(&self, verts: Vec<usize>) -> Result<Facet> {
        let p0 = &self.points[verts[0]];
        let rows: Vec<Vector> = verts[1..]
            .iter()
            .map(|&v| linalg::sub(&self.points[v], p0))
            .collect();
        let mut normal = linalg::generalized_cross(&rows);
        let nn = linalg::norm(&normal);
        if nn <= self.tol.min(1e-14) {
            return Err(LwError::DegenerateInput {
                found: self.dim - 1,
                expected: self.dim,
            });
        }
        for x in normal.iter_mut() {
            *x /= nn;
        }
        let mut offset = linalg::dot(&normal, p0);
        let h = linalg::dot(&normal, &self.interior) - offset;
        if h > 0.0 {
            for x in normal.iter_mut() {
                *x = -*x;
            }
            offset = -offset;
        } else if h > -self.tol {
            // interior point nearly on the plane: settle orientation exactly
            let refs: Vec<&[f64]> = verts.iter().map(|&v| self.points[v].as_slice()).collect();
            let s = linalg::orient_sign_exact(&refs, &self.interior);
            let cross_sign = {
                // sign of <cross, interior - p0> where cross was the raw normal
                let d = linalg::dot(&normal, &linalg::sub(&self.interior, p0));
                if d > 0.0 {
                    1
                } else {
                    -1
                }
            };
            if s != 0 && s == cross_sign {
                for x in normal.iter_mut() {
                    *x = -*x;
                }
                offset = -offset;
            }
        }
        Ok(Facet {
            normal,
            offset,
            vertices: verts,
        })
    }

    /// Strictly-beyond test with exact fallback in the tolerance band.
    fn beyond(&self, facet: &Facet, p: usize) -> bool {
        let h = linalg::dot(&facet.normal, &self.points[p]) - facet.offset;
        if h > self.tol {
            return true;
        }
        if h < -self.tol {
            return false;
        }
        let refs: Vec<&[f64]> = facet
            .vertices
            .iter()
            .map(|&v| self.points[v].as_slice())
            .collect();
        let sp = linalg::orient_sign_exact(&refs, &self.points[p]);
        if sp == 0 {
            return false;
        }
        let sc = linalg::orient_sign_exact(&refs, &self.interior);
        sp != sc
    }

    fn run(mut self) -> Result<Hull> {
        for p in 0..self.points.len() {
            let visible: Vec<usize> = (0..self.facets.len())
                .filter(|&f| self.beyond(&self.facets[f], p))
                .collect();
            if visible.is_empty() {
                continue;
            }
            // ridges seen exactly once among visible facets form the horizon
            let mut ridge_count: HashMap<Vec<usize>, usize> = HashMap::new();
            for &f in &visible {
                for omit in 0..self.dim {
                    let mut key: Vec<usize> = self.facets[f]
                        .vertices
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != omit)
                        .map(|(_, &v)| v)
                        .collect();
                    key.sort_unstable();
                    *ridge_count.entry(key).or_insert(0) += 1;
                }
            }
            let mut new_facets = Vec::new();
            for &f in &visible {
                for omit in 0..self.dim {
                    let ridge: Vec<usize> = self.facets[f]
                        .vertices
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != omit)
                        .map(|(_, &v)| v)
                        .collect();
                    let mut key = ridge.clone();
                    key.sort_unstable();
                    if ridge_count[&key] != 1 {
                        continue;
                    }
                    let mut verts = ridge;
                    verts.push(p);
                    new_facets.push(self.make_facet(verts)?);
                }
            }
            let mut keep = Vec::with_capacity(self.facets.len());
            let mut vis_iter = visible.iter().peekable();
            for (i, f) in self.facets.drain(..).enumerate() {
                if vis_iter.peek() == Some(&&i) {
                    vis_iter.next();
                } else {
                    keep.push(f);
                }
            }
            keep.extend(new_facets);
            self.facets = keep;
        }
        self.finish()
    }

    fn finish(self) -> Result<Hull> {
        // canonical vertex list: points referenced by facets, sorted
        // lexicographically for determinism
        let mut used: Vec<usize> = self
            .facets
            .iter()
            .flat_map(|f| f.vertices.iter().copied())
            .collect();
        used.sort_unstable();
        used.dedup();
        let mut order: Vec<usize> = (0..used.len()).collect();
        order.sort_by(|&a, &b| {
            let pa = &self.points[used[a]];
            let pb = &self.points[used[b]];
            pa.iter()
                .zip(pb.iter())
                .find_map(|(x, y)| {
                    let c = x.total_cmp(y);
                    c.is_ne().then_some(c)
                })
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        let mut remap = vec![usize::MAX; self.points.len()];
        let mut vertices = Vec::with_capacity(used.len());
        for (new_idx, &slot) in order.iter().enumerate() {
            remap[used[slot]] = new_idx;
            vertices.push(self.points[used[slot]].clone());
        }
        let facets: Vec<Facet> = self
            .facets
            .into_iter()
            .map(|f| Facet {
                normal: f.normal,
                offset: f.offset,
                vertices: f.vertices.into_iter().map(|v| remap[v]).collect(),
            })
            .collect();
        let mut interior = vec![0.0; self.dim];
        for v in &vertices {
            linalg::axpy(&mut interior, 1.0 / vertices.len() as f64, v);
        }
        Ok(Hull {
            dim: self.dim,
            vertices,
            facets,
            interior,
        })
    }
}

/// Greedy affinely independent seed: lexicographic minimum first, then the
/// point farthest from the current affine hull.
fn initial_simplex(dim: usize, points: &[Vector], tol: f64) -> Result<Vec<usize>> {
    let first = (0..points.len())
        .min_by(|&a, &b| {
            points[a]
                .iter()
                .zip(points[b].iter())
                .find_map(|(x, y)| {
                    let c = x.total_cmp(y);
                    c.is_ne().then_some(c)
                })
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .unwrap();
    let mut chosen = vec![first];
    let mut basis: Vec<Vector> = Vec::new();
    while chosen.len() < dim + 1 {
        let mut best = (0usize, -1.0f64);
        for i in 0..points.len() {
            if chosen.contains(&i) {
                continue;
            }
            let mut r = linalg::sub(&points[i], &points[chosen[0]]);
            for b in &basis {
                let c = linalg::dot(&r, b);
                linalg::axpy(&mut r, -c, b);
            }
            let res = linalg::norm(&r);
            if res > best.1 {
                best = (i, res);
            }
        }
        if best.1 <= tol {
            return Err(LwError::DegenerateInput {
                found: chosen.len() - 1,
                expected: dim,
            });
        }
        let mut r = linalg::sub(&points[best.0], &points[chosen[0]]);
        for b in &basis {
            let c = linalg::dot(&r, b);
            linalg::axpy(&mut r, -c, b);
        }
        let nr = linalg::norm(&r);
        basis.push(linalg::scale(&r, 1.0 / nr));
        chosen.push(best.0);
    }
    Ok(chosen)
}

impl Hull {
    /// Group near-coplanar simplicial facets into maximal faces.
    /// Returns (normal, offset, incident vertex indices) per merged facet.
    pub fn merged_facets(&self) -> Vec<(Vector, f64, Vec<usize>)> {
        let tol = tol::COPLANAR
            * self
                .vertices
                .iter()
                .flat_map(|v| v.iter())
                .fold(1.0f64, |m, &x| m.max(x.abs()));
        let mut groups: Vec<(Vector, f64, Vec<usize>)> = Vec::new();
        for f in &self.facets {
            let mut found = false;
            for g in groups.iter_mut() {
                if linalg::dot(&g.0, &f.normal) > 1.0 - 1e-8 && (g.1 - f.offset).abs() <= tol {
                    g.2.extend(f.vertices.iter().copied());
                    found = true;
                    break;
                }
            }
            if !found {
                groups.push((f.normal.clone(), f.offset, f.vertices.clone()));
            }
        }
        for g in groups.iter_mut() {
            g.2.sort_unstable();
            g.2.dedup();
        }
        groups
    }

    /// True when `x` satisfies every facet inequality within `slack`.
    pub fn contains(&self, x: &[f64], slack: f64) -> bool {
        self.facets
            .iter()
            .all(|f| linalg::dot(&f.normal, x) <= f.offset + slack)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square_with_center() -> Vec<Vector> {
        vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![0.5, 0.5],
            vec![1.0, 1.0],
            vec![0.0, 1.0],
        ]
    }

    #[test]
    fn square_discards_interior_point() {
        let h = convex_hull(2, &square_with_center()).unwrap();
        assert_eq!(h.vertices.len(), 4);
        assert_eq!(h.facets.len(), 4);
        assert!(!h.vertices.iter().any(|v| v == &vec![0.5, 0.5]));
    }

    #[test]
    fn collinear_points_are_degenerate() {
        let pts = vec![vec![0.0, 0.0], vec![1.0, 1.0], vec![2.0, 2.0]];
        match convex_hull(2, &pts) {
            Err(LwError::DegenerateInput { found, expected }) => {
                assert_eq!(found, 1);
                assert_eq!(expected, 2);
            }
            other => panic!("expected DegenerateInput, got {other:?}"),
        }
    }

    #[test]
    fn cube_has_six_merged_facets() {
        let mut pts = Vec::new();
        for i in 0..8 {
            pts.push(vec![
                if i & 1 == 0 { -0.5 } else { 0.5 },
                if i & 2 == 0 { -0.5 } else { 0.5 },
                if i & 4 == 0 { -0.5 } else { 0.5 },
            ]);
        }
        let h = convex_hull(3, &pts).unwrap();
        assert_eq!(h.vertices.len(), 8);
        assert_eq!(h.facets.len(), 12);
        let merged = h.merged_facets();
        assert_eq!(merged.len(), 6);
        for (_, _, verts) in merged {
            assert_eq!(verts.len(), 4);
        }
    }

    #[test]
    fn segment_hull() {
        let pts = vec![vec![2.0], vec![-1.0], vec![0.5]];
        let h = convex_hull(1, &pts).unwrap();
        assert_eq!(h.vertices.len(), 2);
        assert!(h.contains(&[0.3], 1e-12));
        assert!(!h.contains(&[2.5], 1e-12));
    }

    #[test]
    fn every_vertex_satisfies_every_facet() {
        let pts: Vec<Vector> = (0..20)
            .map(|i| {
                let x = (i as f64 * 0.7).sin();
                let y = (i as f64 * 1.3).cos();
                let z = (i as f64 * 2.1).sin() * (i as f64 * 0.4).cos();
                vec![x, y, z]
            })
            .collect();
        let h = convex_hull(3, &pts).unwrap();
        for v in &h.vertices {
            for f in &h.facets {
                assert!(linalg::dot(&f.normal, v) <= f.offset + 1e-9);
            }
            assert!(h.contains(v, 1e-9));
        }
        for f in &h.facets {
            assert_eq!(f.vertices.len(), 3);
        }
    }
}
