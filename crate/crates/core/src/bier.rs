//! The Bier ball of a complex and its boundary sphere.
//!
//! For `Δ` on `[n]`, the Bier ball `Γ` lives on `x_1..x_n, y_1..y_n`
//! (indices `0..n` and `n..2n`). Its facets are `F♯ = x_F ∪ y_{[n]∖F}` for
//! every face `F` of `Δ`, and `I_Γ = I_Δ + (x_i y_i)`.

use std::collections::HashMap;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// A facet order, listing every facet exactly once.
pub type FacetOrder = Vec<Face>;

#[derive(Clone, Debug)]
pub struct BierBall {
    gamma: SimplicialComplex,
    n: usize,
    /// Face of `Δ` behind each facet of `Γ`, aligned with `gamma.facets()`.
    sources: Vec<Face>,
}

impl BierBall {
    pub fn gamma(&self) -> &SimplicialComplex {
        &self.gamma
    }

    /// Number of vertices of the underlying `Δ`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Face `F` of `Δ` with `F♯ = facet`.
    pub fn source_of(&self, facet: Face) -> Option<Face> {
        let i = self.gamma.facets().iter().position(|&g| g == facet)?;
        Some(self.sources[i])
    }

    /// `F♯` for a face `F` of `Δ`.
    pub fn sharp(&self, f: Face) -> Face {
        sharp(self.n, f)
    }
}

fn sharp(n: usize, f: Face) -> Face {
    let ys = Face::full(n).minus(f);
    Face(f.0 | ys.0 << n)
}

/// Labels `x:<l>` then `y:<l>` for the doubled vertex set.
pub fn doubled_labels(delta: &SimplicialComplex) -> Vec<String> {
    let xs = delta.labels().iter().map(|l| format!("x:{l}"));
    let ys = delta.labels().iter().map(|l| format!("y:{l}"));
    xs.chain(ys).collect()
}

pub fn bier_ball(delta: &SimplicialComplex) -> Result<BierBall> {
    let n = delta.n();
    if 2 * n > crate::complex::MAX_VERTICES {
        return Err(Error::TooManyVertices { got: 2 * n, max: crate::complex::MAX_VERTICES });
    }
    let faces = delta.faces();
    let by_sharp: HashMap<Face, Face> = faces.iter().map(|&f| (sharp(n, f), f)).collect();
    let gamma = SimplicialComplex::from_faces(doubled_labels(delta), by_sharp.keys().copied().collect())?;
    let sources = gamma.facets().iter().map(|g| by_sharp[g]).collect();
    Ok(BierBall { gamma, n, sources })
}

/// Facets of `Γ` ordered by `dim F` ascending, ties lexicographic in `F`.
pub fn bier_shelling_order(ball: &BierBall) -> FacetOrder {
    let mut sources = ball.sources.clone();
    sources.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    sources.into_iter().map(|f| ball.sharp(f)).collect()
}

/// Complex generated by the ridges of `Γ` lying in exactly one facet.
pub fn boundary_sphere(ball: &BierBall) -> Result<SimplicialComplex> {
    let delta_is_simplex = ball.sources.iter().any(|f| f.len() == ball.n);
    if delta_is_simplex {
        return Err(Error::IsSimplex);
    }
    let mut count: HashMap<Face, usize> = HashMap::new();
    for &g in ball.gamma.facets() {
        for v in g.iter() {
            *count.entry(g.without(v)).or_default() += 1;
        }
    }
    let ridges: Vec<Face> = count.into_iter().filter(|&(_, c)| c == 1).map(|(r, _)| r).collect();
    if ridges.is_empty() {
        return Ok(SimplicialComplex::void(ball.gamma.labels().to_vec()));
    }
    SimplicialComplex::from_faces(ball.gamma.labels().to_vec(), ridges)
}

/// Number of facets of `Γ` containing each ridge; a ball has all counts ≤ 2.
pub fn ridge_degrees(ball: &BierBall) -> HashMap<Face, usize> {
    let mut count: HashMap<Face, usize> = HashMap::new();
    for &g in ball.gamma.facets() {
        for v in g.iter() {
            *count.entry(g.without(v)).or_default() += 1;
        }
    }
    count
}

/// Supports of `y^{[n]∖F}` over facets `F` of a pure `Δ`, as subsets of `[n]`.
pub fn canonical_module_generators(delta: &SimplicialComplex) -> Result<Vec<Face>> {
    if !delta.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(delta.alexander_dual_generators())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    fn names(c: &SimplicialComplex, fs: &[Face]) -> Vec<String> {
        fs.iter()
            .map(|&f| c.face_labels(f).iter().map(|l| l.replace(':', "")).collect::<String>())
            .collect()
    }

    #[test]
    fn bier_example_ball() {
        let delta = builtins::bier_example();
        let ball = bier_ball(&delta).unwrap();
        assert_eq!(ball.gamma().facets().len(), 5);
        let order = bier_shelling_order(&ball);
        assert_eq!(
            names(ball.gamma(), &order),
            ["y1y2y3", "x1y2y3", "x2y1y3", "x3y1y2", "x1x2y3"]
        );
        let sphere = boundary_sphere(&ball).unwrap();
        let mut got = names(&sphere, sphere.facets());
        got.sort();
        let mut want = vec!["x1x2", "x2y1", "x3y1", "x3y2", "x1y2"];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn empty_face_complex() {
        let delta = SimplicialComplex::new(&["1"], &[vec![]]).unwrap();
        let ball = bier_ball(&delta).unwrap();
        assert_eq!(names(ball.gamma(), ball.gamma().facets()), ["y1"]);
        assert_eq!(bier_shelling_order(&ball).len(), 1);

        let delta2 = SimplicialComplex::new(&["1", "2"], &[vec![]]).unwrap();
        let ball2 = bier_ball(&delta2).unwrap();
        let sphere = boundary_sphere(&ball2).unwrap();
        assert_eq!(names(&sphere, sphere.facets()), ["y1", "y2"]);
    }

    #[test]
    fn path_ball() {
        let ball = bier_ball(&builtins::path3()).unwrap();
        assert_eq!(ball.gamma().n(), 10);
        assert_eq!(ball.gamma().facets().len(), 16);
        assert!(ball.gamma().is_pure());
    }

    #[test]
    fn simplex_has_no_boundary_sphere() {
        let simplex = SimplicialComplex::from_numbered(3, &[&[1, 2, 3]]).unwrap();
        let ball = bier_ball(&simplex).unwrap();
        assert_eq!(boundary_sphere(&ball).unwrap_err(), Error::IsSimplex);
    }

    #[test]
    fn octahedron_ridges() {
        let ball = bier_ball(&builtins::cross_polytope_boundary(3).unwrap()).unwrap();
        assert!(ridge_degrees(&ball).values().all(|&c| c <= 2));
    }

    #[test]
    fn h_of_gamma_is_f_of_delta() {
        for name in builtins::STANDARD {
            let delta = builtins::by_name(name).unwrap();
            let ball = bier_ball(&delta).unwrap();
            let mut f = delta.f_vector();
            f.resize(delta.n() + 1, 0);
            assert_eq!(ball.gamma().h_vector().unwrap(), f, "{name}");
        }
        let bier = builtins::bier_example();
        assert_eq!(bier_ball(&bier).unwrap().gamma().h_vector().unwrap(), vec![1, 3, 1, 0]);
    }

    #[test]
    fn canonical_generators() {
        let path = builtins::path3();
        let gens = canonical_module_generators(&path).unwrap();
        assert_eq!(names(&path, &gens), ["12", "15", "45"]);
        let simplex = SimplicialComplex::from_numbered(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(canonical_module_generators(&simplex).unwrap(), vec![Face::EMPTY]);
        let oct = builtins::cross_polytope_boundary(3).unwrap();
        let g = canonical_module_generators(&oct).unwrap();
        assert_eq!(g.len(), 8);
        assert!(g.iter().all(|f| f.len() == 3));
        assert_eq!(canonical_module_generators(&builtins::bier_example()), Err(Error::NotPure));
    }
}
