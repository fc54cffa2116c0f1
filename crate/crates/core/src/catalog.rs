//! Bundled example complexes.
//!
//! Vertices are labelled `1, 2, …` unless a construction says otherwise. None of
//! these carry coordinates; checks sample them.

use rand::Rng;

use crate::simplicial::{Complex, Face};

/// Numeric labels are ordered numerically, so the vertex order matches the labels.
fn build(name: &str, facets: Vec<Vec<String>>) -> Complex {
    let mut names: Vec<usize> = facets.iter().flatten().map(|l| l.parse().expect("numeric label")).collect();
    names.sort_unstable();
    names.dedup();
    let raw = facets
        .iter()
        .map(|f| f.iter().map(|l| names.binary_search(&l.parse().unwrap()).unwrap()).collect())
        .collect();
    Complex::new(name, labels(names.into_iter()), raw).expect("catalog complexes are valid")
}

fn labels(range: impl Iterator<Item = usize>) -> Vec<String> {
    range.map(|i| i.to_string()).collect()
}

/// The full `d`-simplex on vertices `1..=d+1`.
pub fn simplex(d: usize) -> Complex {
    build(&format!("simplex{d}"), vec![labels(1..=d + 1)])
}

/// Boundary of the `d`-simplex, a `(d-1)`-sphere.
pub fn simplex_boundary(d: usize) -> Complex {
    simplex(d).boundary_complex().expect("a simplex is pure").compacted().renamed(format!("bd_simplex{d}"))
}

/// The `n`-gon.
pub fn cycle(n: usize) -> Complex {
    assert!(n >= 3, "a cycle needs at least three vertices");
    let facets = (1..=n).map(|i| labels([i, i % n + 1].into_iter())).collect();
    build(&format!("cycle{n}"), facets)
}

/// Boundary of the `n`-dimensional cross-polytope; vertices `2i-1`, `2i` are antipodal.
pub fn cross_polytope(n: usize) -> Complex {
    assert!(n >= 1);
    let mut facets = Vec::with_capacity(1 << n);
    for mask in 0..(1usize << n) {
        facets.push((0..n).map(|i| (2 * i + 1 + (mask >> i & 1)).to_string()).collect());
    }
    build(&format!("cross{n}"), facets)
}

pub fn octahedron() -> Complex {
    cross_polytope(3).renamed("octahedron")
}

/// Boundary of the icosahedron: top `0`, upper ring `1..=5`, lower ring `6..=10`, bottom `11`.
pub fn icosahedron() -> Complex {
    let mut facets = Vec::new();
    for i in 0..5 {
        let (u, u1) = (1 + i, 1 + (i + 1) % 5);
        let (l, l1) = (6 + i, 6 + (i + 1) % 5);
        facets.push(labels([0, u, u1].into_iter()));
        facets.push(labels([u, u1, l].into_iter()));
        facets.push(labels([l, l1, u1].into_iter()));
        facets.push(labels([11, l, l1].into_iter()));
    }
    build("icosahedron", facets)
}

/// `k`-fold suspension of `base`, new apexes `n1, s1, n2, s2, …`.
pub fn suspension_tower(base: &Complex, k: usize) -> Complex {
    let mut c = base.clone();
    for i in 1..=k {
        c = c.suspension(&format!("n{i}"), &format!("s{i}")).expect("fresh labels");
    }
    c.renamed(format!("susp{k}({})", base.name()))
}

/// The 7-vertex torus: facets `{i, i+1, i+3}` and `{i, i+2, i+3}` modulo 7.
pub fn torus7() -> Complex {
    let mut facets = Vec::new();
    for i in 0..7 {
        facets.push(labels([i, (i + 1) % 7, (i + 3) % 7].into_iter()));
        facets.push(labels([i, (i + 2) % 7, (i + 3) % 7].into_iter()));
    }
    build("torus7", facets)
}

/// Stacked `(d-1)`-sphere on `vertices` vertices: start from the boundary of the
/// `d`-simplex and repeatedly subdivide a random facet.
pub fn random_stacked_sphere(d: usize, vertices: usize, rng: &mut impl Rng) -> Complex {
    assert!(vertices > d, "a stacked (d-1)-sphere has at least d+1 vertices");
    let mut c = simplex_boundary(d);
    let mut next = d + 2;
    while c.vertices().len() < vertices {
        let f: Face = c.facets()[rng.gen_range(0..c.facets().len())].clone();
        c = c.stellar_subdivision(&f, &next.to_string(), rng).expect("facets have d >= 2 vertices");
        next += 1;
    }
    c.renamed(format!("stacked{}_{vertices}", d - 1))
}

/// Cone over the 4-cycle with apex `a`: a 2-ball.
pub fn cone_over_cycle4() -> Complex {
    cycle(4).cone("a").expect("fresh apex").renamed("cone_cycle4")
}

/// Cone over the octahedron with apex `a`: a 3-ball.
pub fn cone_over_octahedron() -> Complex {
    octahedron().cone("a").expect("fresh apex").renamed("cone_octahedron")
}

/// Two tetrahedron boundaries sharing the vertex `1`.
pub fn wedge_of_spheres() -> Complex {
    let mut facets = Vec::new();
    for group in [[1, 2, 3, 4], [1, 5, 6, 7]] {
        for skip in 0..4 {
            facets.push(group.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, v)| v.to_string()).collect());
        }
    }
    build("wedge", facets)
}

/// Deterministic spheres: simplex boundaries (d = 3..=6), octahedron, icosahedron and
/// cross-polytope suspension towers.
pub fn named_spheres() -> Vec<Complex> {
    let mut out: Vec<Complex> = (3..=6).map(simplex_boundary).collect();
    out.push(octahedron());
    out.push(icosahedron());
    out.push(suspension_tower(&cycle(4), 1).renamed("susp1(cycle4)"));
    out.push(suspension_tower(&octahedron(), 1));
    out.push(suspension_tower(&cycle(5), 2));
    out
}

/// Bundled balls: a triangle, a tetrahedron, and the two cones.
pub fn named_balls() -> Vec<Complex> {
    vec![simplex(2), simplex(3), cone_over_cycle4(), cone_over_octahedron()]
}

/// Lookup by name, as accepted by the command line (`builtin:<name>`).
pub fn by_name(name: &str) -> Option<Complex> {
    let c = match name {
        "octahedron" | "octa" => octahedron(),
        "icosahedron" => icosahedron(),
        "torus" | "torus7" => torus7(),
        "wedge" => wedge_of_spheres(),
        "cone_cycle4" => cone_over_cycle4(),
        "cone_octahedron" => cone_over_octahedron(),
        _ => {
            let num = |prefix: &str| name.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok());
            if let Some(d) = num("bd_simplex") {
                if d == 0 {
                    return None;
                }
                simplex_boundary(d)
            } else if let Some(d) = num("simplex") {
                simplex(d)
            } else if let Some(n) = num("cycle") {
                if n < 3 {
                    return None;
                }
                cycle(n)
            } else if let Some(n) = num("cross") {
                if n == 0 {
                    return None;
                }
                cross_polytope(n)
            } else {
                return None;
            }
        }
    };
    Some(c)
}

/// Names understood by [`by_name`] (parametric families shown with one member).
pub const NAMES: &[&str] = &[
    "octahedron",
    "icosahedron",
    "torus7",
    "wedge",
    "cone_cycle4",
    "cone_octahedron",
    "bd_simplex3",
    "simplex2",
    "cycle4",
    "cross4",
];

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::scalar::Fp;
    use crate::simplicial::{f_vector, is_homology_ball, is_homology_sphere, reduced_homology};

    #[test]
    fn named_spheres_are_spheres() {
        for s in named_spheres() {
            assert!(is_homology_sphere(&s), "{}", s.name());
        }
    }

    #[test]
    fn named_balls_are_balls() {
        for b in named_balls() {
            assert!(is_homology_ball(&b), "{}", b.name());
        }
    }

    #[test]
    fn face_counts() {
        assert_eq!(f_vector(&simplex_boundary(3)).0, vec![1, 4, 6, 4]);
        assert_eq!(f_vector(&icosahedron()).0, vec![1, 12, 30, 20]);
        assert_eq!(f_vector(&octahedron()).0, vec![1, 6, 12, 8]);
        assert_eq!(f_vector(&torus7()).0, vec![1, 7, 21, 14]);
    }

    #[test]
    fn torus_homology() {
        assert_eq!(reduced_homology::<Fp>(&torus7()), vec![0, 2, 1]);
        assert!(!is_homology_sphere(&torus7()));
        assert!(!is_homology_sphere(&wedge_of_spheres()));
    }

    #[test]
    fn stacked_spheres() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (d, n) in [(3, 8), (4, 9)] {
            let s = random_stacked_sphere(d, n, &mut rng);
            assert_eq!(s.vertices().len(), n);
            assert!(is_homology_sphere(&s));
        }
    }

    #[test]
    fn lookup() {
        for n in NAMES {
            assert!(by_name(n).is_some(), "{n}");
        }
        assert!(by_name("nope").is_none());
        assert!(by_name("cycle2").is_none());
    }
}
