//! Built-in datasets.
//!
//! * `rp2-twisted`: the two-cell complex of RP² with `t ↦ −I₃`.
//! * `rp2-bundle`: the six-chart cover of RP² given by the hemi-icosahedron
//!   (antipodal quotient of the icosahedron), carrying the torus bundle of
//!   the antipodal action `x ↦ −x` on `R³ ∖ {0}`.
//! * `s2-tetra`: the boundary of a tetrahedron as a cover of S², with a
//!   circle bundle of obstruction class 1.
//! * `circle-loop`: a three-chart cover of S¹ whose loop edge carries
//!   `[[1, 1], [0, 1]]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::affine::{AffReal, AffToral, GlnZ, GroupPresentation, Representation};
use crate::cocycles::{
    trivial_fstar_fibration, AffineAtlas, CoverNerve, EdgeLabel, NerveSpec, TransitionData,
};
use crate::linalg::IntMatrix;
use crate::twisted::TwistedComplex;

pub const BUILTIN_NAMES: [&str; 4] = ["rp2-twisted", "rp2-bundle", "s2-tetra", "circle-loop"];

fn pair(a: &str, b: &str) -> [String; 2] {
    [a.to_string(), b.to_string()]
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

/// RP² as a two-cell complex over `⟨t | t²⟩` with `t ↦ −I₃`.
pub fn rp2_twisted() -> (TwistedComplex, Representation) {
    let complex = TwistedComplex::real_projective_plane();
    let rep = Representation::new(
        complex.presentation().clone(),
        3,
        vec![IntMatrix::scalar(3, -1)],
    )
    .expect("t ↦ −I satisfies t² = 1");
    (complex, rep)
}

/// Element `a + b·φ` of `Z[φ]`, `φ² = φ + 1`.
type Golden = (i64, i64);

fn golden_sq((a, b): Golden) -> Golden {
    (a * a + b * b, 2 * a * b + b * b)
}

fn golden_sign((a, b): Golden) -> i64 {
    // Only 0, ±1, ±φ occur.
    if b != 0 {
        b.signum()
    } else {
        a.signum()
    }
}

fn icosahedron() -> Vec<[Golden; 3]> {
    let mut out = Vec::new();
    for s in [1, -1] {
        for t in [1, -1] {
            out.push([(0, 0), (s, 0), (0, t)]);
            out.push([(s, 0), (0, t), (0, 0)]);
            out.push([(0, s), (0, 0), (t, 0)]);
        }
    }
    out
}

fn adjacent(p: &[Golden; 3], q: &[Golden; 3]) -> bool {
    let mut d = (0, 0);
    for i in 0..3 {
        let s = golden_sq((p[i].0 - q[i].0, p[i].1 - q[i].1));
        d = (d.0 + s.0, d.1 + s.1);
    }
    d == (4, 0)
}

fn negate(p: &[Golden; 3]) -> [Golden; 3] {
    p.map(|(a, b)| (-a, -b))
}

struct Hemi {
    /// Sign relating neighbouring representatives: `+1` when the
    /// representatives themselves are adjacent, `−1` when one is adjacent to
    /// the other's antipode.
    sign: Vec<Vec<i64>>,
    triangles: Vec<[usize; 3]>,
}

fn hemi_icosahedron() -> Hemi {
    let reps: Vec<[Golden; 3]> = icosahedron()
        .into_iter()
        .filter(|p| golden_sign(*p.iter().find(|c| **c != (0, 0)).expect("nonzero point")) > 0)
        .collect();
    assert_eq!(reps.len(), 6);
    let mut sign = vec![vec![0; 6]; 6];
    for i in 0..6 {
        for j in 0..6 {
            if i != j {
                sign[i][j] = if adjacent(&reps[i], &reps[j]) {
                    1
                } else {
                    assert!(adjacent(&reps[i], &negate(&reps[j])));
                    -1
                };
            }
        }
    }
    let mut triangles = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                // A face lifts to the icosahedron iff the signs close up.
                if sign[i][j] * sign[j][k] * sign[i][k] == 1 {
                    triangles.push([i, j, k]);
                }
            }
        }
    }
    assert_eq!(triangles.len(), 10);
    Hemi { sign, triangles }
}

fn rp2_name(i: usize) -> String {
    format!("P{i}")
}

/// Nerve of the hemi-icosahedral cover of RP² over `⟨a | a²⟩`, with the
/// star spanning tree at `P0`.
pub fn rp2_nerve() -> CoverNerve {
    let hemi = hemi_icosahedron();
    let mut edges = Vec::new();
    let mut loops = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            edges.push(pair(&rp2_name(i), &rp2_name(j)));
            if i > 0 {
                // Lift P0 → Pi → Pj → P0; it closes iff the signs agree.
                let closes = hemi.sign[0][i] * hemi.sign[i][j] * hemi.sign[j][0] == 1;
                loops.push((pair(&rp2_name(i), &rp2_name(j)), if closes { "" } else { "a" }.to_string()));
            }
        }
    }
    CoverNerve::new(NerveSpec {
        vertices: (0..6).map(rp2_name).collect(),
        edges,
        triangles: hemi.triangles.iter().map(|t| t.map(rp2_name)).collect(),
        tetrahedra: Vec::new(),
        spanning_tree: (1..6).map(|j| pair(&rp2_name(0), &rp2_name(j))).collect(),
        loops,
        presentation: GroupPresentation::cyclic("a", 2),
    })
    .expect("hemi-icosahedral nerve is valid")
}

/// Integral affine atlas on the hemi-icosahedral cover induced from the
/// standard structure on `R³ ∖ {0}`: transitions are `x ↦ ±x`.
pub fn rp2_atlas() -> AffineAtlas {
    let hemi = hemi_icosahedron();
    let nerve = rp2_nerve();
    let transitions = nerve
        .edges()
        .iter()
        .map(|&(a, b)| {
            let linear = if hemi.sign[a][b] == 1 {
                GlnZ::identity(3)
            } else {
                GlnZ::minus_identity(3)
            };
            AffReal::linear_only(linear)
        })
        .collect();
    AffineAtlas { nerve, transitions }
}

/// The torus bundle of [`rp2_atlas`].
pub fn rp2_bundle() -> TransitionData {
    trivial_fstar_fibration(&rp2_atlas()).expect("antipodal atlas is a cocycle")
}

/// Boundary of the tetrahedron on `V0..V3`, trivial fundamental group.
pub fn s2_tetra_nerve() -> CoverNerve {
    let v = |i: usize| format!("V{i}");
    let mut edges = Vec::new();
    let mut loops = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            edges.push(pair(&v(i), &v(j)));
            if i > 0 {
                loops.push((pair(&v(i), &v(j)), String::new()));
            }
        }
    }
    let mut triangles = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            for k in j + 1..4 {
                triangles.push([v(i), v(j), v(k)]);
            }
        }
    }
    CoverNerve::new(NerveSpec {
        vertices: (0..4).map(v).collect(),
        edges,
        triangles,
        tetrahedra: Vec::new(),
        spanning_tree: (1..4).map(|j| pair(&v(0), &v(j))).collect(),
        loops,
        presentation: GroupPresentation::default(),
    })
    .expect("tetrahedral nerve is valid")
}

/// Circle bundle over the tetrahedral S² with obstruction class 1.
///
/// Translations are `½` on `V0V1, V1V2, V2V3, V0V3` and `0` on `V0V2, V1V3`;
/// on the triple overlap `V0V1V2` the lift of the `V1V2` translation is
/// `−½` instead of `½`. The obstruction cocycle is `1` on `V1V2V3` and `0`
/// elsewhere.
pub fn s2_tetra() -> TransitionData {
    let nerve = s2_tetra_nerve();
    let g = |x: BigRational| AffToral::translation_only(vec![x]);
    let (h, z) = (half(), BigRational::zero());
    // Edge order: 01, 02, 03, 12, 13, 23.
    let mut labels: Vec<EdgeLabel> = [h.clone(), z.clone(), h.clone(), h.clone(), z, h]
        .into_iter()
        .map(|x| EdgeLabel::constant(g(x)))
        .collect();
    let t012 = nerve.triangle([0, 1, 2]).expect("face exists");
    let e12 = nerve.edge(1, 2).expect("edge exists");
    labels[e12]
        .drift
        .insert(t012, vec![BigRational::from_integer(BigInt::from(-1))]);
    TransitionData::new(nerve, 1, labels, Default::default()).expect("valid labels")
}

/// Three charts on S¹, tree `U0U1, U1U2`, loop edge `U0U2 ↦ a`.
pub fn circle_nerve() -> CoverNerve {
    CoverNerve::new(NerveSpec {
        vertices: vec!["U0".into(), "U1".into(), "U2".into()],
        edges: vec![pair("U0", "U1"), pair("U1", "U2"), pair("U0", "U2")],
        triangles: Vec::new(),
        tetrahedra: Vec::new(),
        spanning_tree: vec![pair("U0", "U1"), pair("U1", "U2")],
        loops: vec![(pair("U0", "U2"), "a".into())],
        presentation: GroupPresentation::free(&["a"]).expect("valid name"),
    })
    .expect("circle nerve is valid")
}

/// Loop edge labelled `[[1, 1], [0, 1]]`, all other labels trivial.
pub fn circle_loop() -> TransitionData {
    let m = GlnZ::from_rows(&[[1, 1], [0, 1]]).expect("unimodular");
    TransitionData::from_transitions(
        circle_nerve(),
        vec![AffToral::identity(2), AffToral::identity(2), AffToral::linear_only(m)],
    )
    .expect("valid labels")
}

/// `T¹ = R/Z` covered by three arcs, transitions pure translations.
pub fn circle_translation_atlas() -> AffineAtlas {
    let third = BigRational::new(1.into(), 3.into());
    let quarter = BigRational::new(1.into(), 4.into());
    AffineAtlas {
        nerve: circle_nerve(),
        transitions: vec![
            AffReal::translation_only(vec![third.clone()]),
            AffReal::translation_only(vec![third]),
            AffReal::translation_only(vec![quarter]),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycles::{chern_cocycle, monodromy_of, verify_cocycle};

    #[test]
    fn hemi_icosahedron_is_a_triangulation() {
        let hemi = hemi_icosahedron();
        // Every edge of K6 lies on exactly two faces.
        for i in 0..6 {
            for j in i + 1..6 {
                let count = hemi
                    .triangles
                    .iter()
                    .filter(|t| t.contains(&i) && t.contains(&j))
                    .count();
                assert_eq!(count, 2, "edge {i}{j}");
            }
        }
    }

    #[test]
    fn rp2_bundle_is_a_cocycle() {
        let td = rp2_bundle();
        assert!(verify_cocycle(&td).is_ok());
        assert_eq!(monodromy_of(&td).unwrap().image(0), &GlnZ::minus_identity(3));
        assert!(chern_cocycle(&td).unwrap().is_zero());
    }

    #[test]
    fn s2_tetra_values() {
        let td = s2_tetra();
        assert!(verify_cocycle(&td).is_ok());
        let c = chern_cocycle(&td).unwrap();
        let values: Vec<i64> = c.values().iter().map(|v| i64::try_from(&v[0]).unwrap()).collect();
        assert_eq!(values, vec![0, 0, 0, 1]);
    }

    #[test]
    fn circle_datasets() {
        let m = GlnZ::from_rows(&[[1, 1], [0, 1]]).unwrap();
        assert_eq!(monodromy_of(&circle_loop()).unwrap().image(0), &m);
        let td = trivial_fstar_fibration(&circle_translation_atlas()).unwrap();
        assert!(monodromy_of(&td).unwrap().is_trivial());
        assert!(chern_cocycle(&td).unwrap().is_zero());
    }
}
