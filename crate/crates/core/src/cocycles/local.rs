use num_bigint::BigInt;

use super::{CocycleError, CoverNerve};
use crate::affine::{GlnZ, Representation};
use crate::linalg::IntMatrix;
use crate::twisted::CochainComplex;

/// A flat `Z^n` local system on a nerve: one matrix `L_e` per edge with
/// `L_{bc}·L_{ab} = L_{ac}` on every triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSystem {
    nerve: CoverNerve,
    dim: usize,
    linear: Vec<GlnZ>,
}

impl LocalSystem {
    pub fn new(nerve: CoverNerve, dim: usize, linear: Vec<GlnZ>) -> Result<Self, CocycleError> {
        if linear.len() != nerve.edges().len() {
            return Err(CocycleError::DimensionMismatch(format!(
                "{} edges but {} matrices",
                nerve.edges().len(),
                linear.len()
            )));
        }
        if let Some(e) = linear.iter().position(|m| m.dim() != dim) {
            return Err(CocycleError::DimensionMismatch(format!(
                "matrix on edge {:?} is not {dim}x{dim}",
                nerve.edge_name(e)
            )));
        }
        let system = Self { nerve, dim, linear };
        if let Some(t) = system.non_flat_triangles().first() {
            return Err(CocycleError::CocycleViolation(format!(
                "linear parts do not compose on triangle {:?}",
                system.nerve.triangle_name(*t)
            )));
        }
        Ok(system)
    }

    /// Tree edges carry the identity, every loop edge carries `ρ(word)`.
    pub fn from_representation(nerve: CoverNerve, rep: &Representation) -> Result<Self, CocycleError> {
        if rep.presentation() != nerve.presentation() {
            return Err(CocycleError::RelatorViolated(
                "representation is over a different presentation".into(),
            ));
        }
        let linear = (0..nerve.edges().len())
            .map(|e| match nerve.loops().get(&e) {
                Some(word) => rep.evaluate_word(word),
                None => GlnZ::identity(rep.dim()),
            })
            .collect();
        Self::new(nerve, rep.dim(), linear).map_err(|err| match err {
            CocycleError::CocycleViolation(msg) => CocycleError::RelatorViolated(msg),
            other => other,
        })
    }

    pub(crate) fn non_flat_triangles(&self) -> Vec<usize> {
        (0..self.nerve.triangles().len())
            .filter(|&t| {
                let [ab, bc, ac] = self.nerve.triangle_edges(t);
                self.linear[bc].matrix() * self.linear[ab].matrix() != *self.linear[ac].matrix()
            })
            .collect()
    }

    pub fn nerve(&self) -> &CoverNerve {
        &self.nerve
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn linear(&self, edge: usize) -> &GlnZ {
        &self.linear[edge]
    }

    pub fn linear_parts(&self) -> &[GlnZ] {
        &self.linear
    }

    /// Transport from the root chart to chart `v` along the spanning tree.
    pub fn transport(&self, v: usize) -> GlnZ {
        let mut t = GlnZ::identity(self.dim);
        for (edge, forward) in self.nerve.tree_path(v) {
            let step = if forward {
                self.linear[edge].clone()
            } else {
                self.linear[edge].inverse()
            };
            t = step.mul(&t).expect("dimensions agree");
        }
        t
    }

    /// Monodromy around the loop closed by `edge`: root → a → b → root.
    pub fn edge_monodromy(&self, edge: usize) -> GlnZ {
        let (a, b) = self.nerve.edges()[edge];
        let there = self.linear[edge].mul(&self.transport(a)).expect("dimensions agree");
        self.transport(b).inverse().mul(&there).expect("dimensions agree")
    }

    /// Monodromy representation over the nerve's presentation.
    ///
    /// Generator images are read off the single-letter loop edges; every
    /// other loop edge must then agree with its declared word.
    pub fn monodromy(&self) -> Result<Representation, CocycleError> {
        let pres = self.nerve.presentation();
        let loops = self.nerve.loops();
        let mut images = vec![None; pres.generator_count()];
        for (&edge, word) in loops {
            if let [letter] = word.letters() {
                if images[letter.generator].is_none() {
                    let m = self.edge_monodromy(edge);
                    images[letter.generator] = Some(if letter.inverse { m.inverse() } else { m });
                }
            }
        }
        let images: Vec<IntMatrix> = images
            .into_iter()
            .map(|m| m.expect("nerve validation guarantees a carrier").into_matrix())
            .collect();
        let rep = Representation::new(pres.clone(), self.dim, images)
            .map_err(|e| CocycleError::RelatorViolated(e.to_string()))?;
        for (&edge, word) in loops {
            if self.edge_monodromy(edge) != rep.evaluate_word(word) {
                return Err(CocycleError::RelatorViolated(format!(
                    "loop through edge {:?} is not {}",
                    self.nerve.edge_name(edge),
                    pres.display_word(word)
                )));
            }
        }
        Ok(rep)
    }

    /// Twisted Čech complex `C^0 → C^1 → C^2 (→ C^3)` with blocks of size `n`
    /// ordered by simplex index.
    pub fn cech_complex(&self) -> CochainComplex {
        let n = self.dim;
        let nerve = &self.nerve;
        let (nv, ne, nt) = (nerve.vertices().len(), nerve.edges().len(), nerve.triangles().len());
        let id = IntMatrix::identity(n);
        let neg_id = IntMatrix::scalar(n, -1);

        let mut d0 = IntMatrix::zeros(ne * n, nv * n);
        for (e, &(a, b)) in nerve.edges().iter().enumerate() {
            d0.set_block(e * n, b * n, &id);
            d0.set_block(e * n, a * n, &-self.linear[e].matrix());
        }

        let mut d1 = IntMatrix::zeros(nt * n, ne * n);
        for t in 0..nt {
            let [ab, bc, ac] = nerve.triangle_edges(t);
            d1.set_block(t * n, bc * n, &id);
            d1.set_block(t * n, ab * n, self.linear[bc].matrix());
            d1.set_block(t * n, ac * n, &neg_id);
        }

        let mut dims = vec![nv * n, ne * n, nt * n];
        let mut deltas = vec![d0, d1];
        if !nerve.tetrahedra().is_empty() {
            let nq = nerve.tetrahedra().len();
            let mut d2 = IntMatrix::zeros(nq * n, nt * n);
            for q in 0..nq {
                let [bcd, acd, abd, abc] = nerve.tetrahedron_faces(q);
                let [_, _, c, d] = nerve.tetrahedra()[q];
                let cd = nerve.edge(c, d).expect("tetrahedron edges exist");
                d2.set_block(q * n, bcd * n, &id);
                d2.set_block(q * n, acd * n, &neg_id);
                d2.set_block(q * n, abd * n, &id);
                d2.set_block(q * n, abc * n, &-self.linear[cd].matrix());
            }
            dims.push(nq * n);
            deltas.push(d2);
        }
        CochainComplex::new(dims, deltas).expect("flat local systems give a complex")
    }

    /// Flattens per-simplex vectors into one cochain.
    pub fn flatten(values: &[Vec<BigInt>]) -> Vec<BigInt> {
        values.iter().flatten().cloned().collect()
    }

    /// Splits a cochain into per-simplex blocks of length `n`.
    pub fn blocks(&self, cochain: &[BigInt]) -> Vec<Vec<BigInt>> {
        if self.dim == 0 {
            return Vec::new();
        }
        cochain.chunks(self.dim).map(<[BigInt]>::to_vec).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::GroupPresentation;
    use crate::cocycles::NerveSpec;

    fn pair(a: &str, b: &str) -> [String; 2] {
        [a.into(), b.into()]
    }

    fn circle() -> CoverNerve {
        CoverNerve::new(NerveSpec {
            vertices: vec!["U0".into(), "U1".into(), "U2".into()],
            edges: vec![pair("U0", "U1"), pair("U1", "U2"), pair("U0", "U2")],
            spanning_tree: vec![pair("U0", "U1"), pair("U1", "U2")],
            loops: vec![(pair("U0", "U2"), "a".into())],
            presentation: GroupPresentation::free(&["a"]).unwrap(),
            ..Default::default()
        })
        .unwrap()
    }

    #[test]
    fn circle_monodromy_is_the_loop_label() {
        let m = GlnZ::from_rows(&[[1, 1], [0, 1]]).unwrap();
        let ls = LocalSystem::new(circle(), 2, vec![GlnZ::identity(2), GlnZ::identity(2), m.clone()]).unwrap();
        assert_eq!(ls.monodromy().unwrap().image(0), &m);
    }

    #[test]
    fn tree_labels_are_transported_away() {
        let m = GlnZ::from_rows(&[[1, 1], [0, 1]]).unwrap();
        let p = GlnZ::from_rows(&[[0, 1], [1, 0]]).unwrap();
        let ls = LocalSystem::new(circle(), 2, vec![p.clone(), GlnZ::identity(2), p.mul(&m).unwrap()]).unwrap();
        assert_eq!(ls.transport(2), p);
        assert_eq!(ls.monodromy().unwrap().image(0), &m);
    }

    #[test]
    fn from_representation_round_trips() {
        let m = GlnZ::from_rows(&[[2, 1], [1, 1]]).unwrap();
        let pres = GroupPresentation::free(&["a"]).unwrap();
        let rep = Representation::new(pres, 2, vec![m.into_matrix()]).unwrap();
        let ls = LocalSystem::from_representation(circle(), &rep).unwrap();
        assert_eq!(ls.monodromy().unwrap(), rep);
    }

    #[test]
    fn circle_cech_cohomology() {
        let ls = LocalSystem::new(circle(), 1, vec![GlnZ::identity(1); 3]).unwrap();
        let cc = ls.cech_complex();
        assert_eq!(cc.cohomology(0).unwrap().to_string(), "Z");
        assert_eq!(cc.cohomology(1).unwrap().to_string(), "Z");
    }
}
