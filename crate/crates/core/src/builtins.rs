//! Named example complexes.

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// Boundary of the d-dimensional cross-polytope on vertices `1..=2d`, with
/// antipodal pairs `{2k-1, 2k}`.
pub fn cross_polytope_boundary(d: usize) -> Result<SimplicialComplex> {
    glued_cross_polytopes(d, 1)
}

/// `c` copies of the d-dimensional cross-polytope boundary glued along the
/// facet `{1, 3, ..., 2d-1}`. Copy 1 uses labels `1..=2d`; copy `k > 1`
/// replaces the even vertices by fresh labels `2d + (k-2)d + 1, ...`.
pub fn glued_cross_polytopes(d: usize, c: usize) -> Result<SimplicialComplex> {
    if d == 0 || c == 0 {
        return Err(Error::BadParams(format!("need d >= 1 and c >= 1, got d={d}, c={c}")));
    }
    let n = 2 * d + (c - 1) * d;
    if n > crate::complex::MAX_VERTICES {
        return Err(Error::BadParams(format!("{n} vertices exceed the supported maximum")));
    }
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut facets = Vec::new();
    for copy in 0..c {
        let antipode = |k: usize| if copy == 0 { 2 * k + 1 } else { 2 * d + (copy - 1) * d + k };
        for choice in 0u64..(1 << d) {
            let f = Face::from_indices(
                (0..d).map(|k| if choice >> k & 1 == 0 { 2 * k } else { antipode(k) }),
            );
            facets.push(f);
        }
    }
    SimplicialComplex::from_faces(labels, facets)
}

/// An 11-vertex flag triangulation of the real projective plane.
pub fn rp2_flag() -> SimplicialComplex {
    const FACETS: [&str; 20] = [
        "145", "126", "156", "237", "347", "267", "148", "478", "129", "189", "23a", "34a",
        "45a", "29a", "56b", "67b", "78b", "89b", "5ab", "9ab",
    ];
    let labels: Vec<String> = "123456789ab".chars().map(|c| c.to_string()).collect();
    let facets: Vec<Vec<String>> =
        FACETS.iter().map(|f| f.chars().map(|c| c.to_string()).collect()).collect();
    SimplicialComplex::new(&labels, &facets).expect("static data")
}

/// The complex `⟨123, 234, 345⟩`.
pub fn path3() -> SimplicialComplex {
    SimplicialComplex::from_numbered(5, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]]).expect("static data")
}

/// The non-pure complex `⟨12, 3⟩`.
pub fn bier_example() -> SimplicialComplex {
    SimplicialComplex::from_numbered(3, &[&[1, 2], &[3]]).expect("static data")
}

/// A flag annulus: two 4-cycles `1..4` and `5..8` joined by a band of
/// triangles. It is pure, connected with connected vertex links, and has
/// nonzero first homology.
pub fn flag_annulus() -> SimplicialComplex {
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for i in 0..4 {
        let a = i + 1;
        let a2 = (i + 1) % 4 + 1;
        let b = i + 5;
        let b2 = (i + 1) % 4 + 5;
        facets.push(vec![a, a2, b]);
        facets.push(vec![a2, b, b2]);
    }
    let refs: Vec<&[usize]> = facets.iter().map(|f| f.as_slice()).collect();
    SimplicialComplex::from_numbered(8, &refs).expect("static data")
}

/// Looks up a builtin by name, e.g. `octahedron`, `cross:4`, `glued:3:2`, `rp2`.
pub fn by_name(spec: &str) -> Result<SimplicialComplex> {
    let parts: Vec<&str> = spec.split(':').collect();
    let num = |s: &str| -> Result<usize> {
        s.parse().map_err(|_| Error::BadParams(format!("bad number `{s}` in `{spec}`")))
    };
    match parts.as_slice() {
        ["octahedron"] => cross_polytope_boundary(3),
        ["cross", d] => cross_polytope_boundary(num(d)?),
        ["glued", d, c] => glued_cross_polytopes(num(d)?, num(c)?),
        ["rp2"] => Ok(rp2_flag()),
        ["path3"] | ["path"] => Ok(path3()),
        ["bier"] => Ok(bier_example()),
        ["annulus"] => Ok(flag_annulus()),
        _ => Err(Error::BadParams(format!("unknown builtin `{spec}`"))),
    }
}

/// Names accepted by [`by_name`] for the standard set used in harnesses.
pub const STANDARD: [&str; 7] =
    ["octahedron", "rp2", "path3", "glued:3:2", "glued:3:3", "annulus", "cross:2"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedron_facets() {
        let oct = cross_polytope_boundary(3).unwrap();
        let names: Vec<String> = oct.facets().iter().map(|&f| oct.face_label(f)).collect();
        assert_eq!(names, ["135", "136", "145", "146", "235", "236", "245", "246"]);
    }

    #[test]
    fn rp2_counts() {
        let rp2 = rp2_flag();
        assert_eq!(rp2.n(), 11);
        assert_eq!(rp2.facets().len(), 20);
        assert_eq!(rp2.f_vector(), vec![1, 11, 30, 20]);
        assert!(rp2.is_flag());
    }

    #[test]
    fn glued_shares_one_facet() {
        assert_eq!(glued_cross_polytopes(3, 1).unwrap(), cross_polytope_boundary(3).unwrap());
        for c in 1..=3 {
            let g = glued_cross_polytopes(3, c).unwrap();
            assert_eq!(g.facets().len(), 7 * c + 1);
            assert_eq!(g.reduced_euler_characteristic(), c as i64);
            assert!(g.is_flag() && g.is_pure());
        }
        let g = glued_cross_polytopes(2, 3).unwrap();
        assert_eq!(g.reduced_euler_characteristic(), -3);
        assert!(glued_cross_polytopes(0, 1).is_err());
    }

    #[test]
    fn annulus_is_flag() {
        let a = flag_annulus();
        assert!(a.is_flag() && a.is_pure());
        assert_eq!(a.f_vector(), vec![1, 8, 16, 8]);
        assert_eq!(a.reduced_euler_characteristic(), -1);
    }
}
