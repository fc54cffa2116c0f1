use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::{Complex, Face};
use crate::linalg::{rank, Matrix};
use crate::scalar::{Fp, Scalar};

/// Reduced Betti numbers `β̃_0, …, β̃_dim` over the field `S`.
///
/// The degree −1 group (nonzero only for `{∅}`) is not reported.
pub fn reduced_homology<S: Scalar>(c: &Complex) -> Vec<usize> {
    let dim = c.dim();
    if dim < 0 {
        return Vec::new();
    }
    let faces = c.faces_by_size();
    // rank of ∂_k : C_k → C_{k-1}, for k = 0..=dim (size k+1 → size k)
    let mut ranks = vec![0usize; dim as usize + 2];
    for k in 0..=dim as usize {
        let (src, dst) = (&faces[k + 1], &faces[k]);
        let row_of: HashMap<&Face, usize> = dst.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut m = Matrix::<S>::zeros(dst.len(), src.len());
        for (j, f) in src.iter().enumerate() {
            for (pos, &v) in f.vertices().iter().enumerate() {
                let sign = if pos % 2 == 0 { S::one() } else { -S::one() };
                m[(row_of[&f.without(v)], j)] = sign;
            }
        }
        ranks[k] = rank(&m);
    }
    (0..=dim as usize)
        .map(|k| faces[k + 1].len() - ranks[k] - ranks[k + 1])
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "dim", rename_all = "lowercase")]
pub enum Topology {
    Sphere(isize),
    Ball(isize),
    Other,
}

fn ridge_degrees(c: &Complex) -> BTreeMap<Face, usize> {
    let mut count = BTreeMap::new();
    for f in c.facets().iter().filter(|f| !f.is_empty()) {
        for &v in f.vertices() {
            *count.entry(f.without(v)).or_insert(0) += 1;
        }
    }
    count
}

/// Pure pseudomanifold with the reduced homology of a sphere; `{∅}` counts as the (−1)-sphere.
pub fn is_homology_sphere(c: &Complex) -> bool {
    if c.is_void() {
        return false;
    }
    if c.dim() < 0 {
        return true;
    }
    if !c.is_pure() || ridge_degrees(c).values().any(|&n| n != 2) {
        return false;
    }
    let b = reduced_homology::<Fp>(c);
    let top = b.len() - 1;
    b.iter().enumerate().all(|(k, &x)| x == usize::from(k == top))
}

/// Pure, ridges in at most two facets, acyclic, and bounded by a homology sphere.
pub fn is_homology_ball(c: &Complex) -> bool {
    if c.dim() < 0 || !c.is_pure() || ridge_degrees(c).values().any(|&n| n > 2) {
        return false;
    }
    if reduced_homology::<Fp>(c).iter().any(|&x| x != 0) {
        return false;
    }
    match c.boundary_complex() {
        Ok(bd) => is_homology_sphere(&bd) && bd.dim() == c.dim() - 1,
        Err(_) => false,
    }
}

pub fn classify(c: &Complex) -> Topology {
    if is_homology_sphere(c) {
        Topology::Sphere(c.dim())
    } else if is_homology_ball(c) {
        Topology::Ball(c.dim())
    } else {
        Topology::Other
    }
}
