//! The built-in example checks behind `paper-examples`.

use std::f64::consts::TAU;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use torfib::affine::{AffToral, GlnZ};
use torfib::cocycles::{
    chern_cocycle, cohomologous, monodromy_of, realize_class, trivial_fstar_fibration,
    twist_by_class, ChernCocycle, LocalSystem, TransitionData,
};
use torfib::constructions::{
    check_closedness, check_equivariance, chern_vector, BasePoint, Sign, TorusPoint2Pi,
};
use torfib::datasets;
use torfib::linalg::complete_primitive;

pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &'static str, f: impl FnOnce() -> Result<String, String>) -> Check {
    match f() {
        Ok(detail) => Check {
            name,
            pass: true,
            detail,
        },
        Err(detail) => Check {
            name,
            pass: false,
            detail,
        },
    }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn err(e: impl ToString) -> String {
    e.to_string()
}

/// Whether the obstruction of `td` is cohomologous to `v` on the first triangle.
fn has_class(td: &TransitionData, v: &[i64]) -> Result<bool, String> {
    let c = chern_cocycle(td).map_err(err)?;
    let target = ChernCocycle::concentrated(c.local_system().clone(), 0, ints(v)).map_err(err)?;
    Ok(cohomologous(&c, &target).map_err(err)?.is_equal())
}

/// `[V1V2V3] − [V0V2V3] + [V0V1V3] − [V0V1V2]` on the tetrahedral nerve.
fn s2_total(td: &TransitionData) -> Result<BigInt, String> {
    let c = chern_cocycle(td).map_err(err)?;
    let nerve = td.nerve();
    let value = |t: [usize; 3]| c.values()[nerve.triangle(t).expect("face exists")][0].clone();
    Ok(value([1, 2, 3]) - value([0, 2, 3]) + value([0, 1, 3]) - value([0, 1, 2]))
}

pub fn run_all() -> Vec<Check> {
    vec![
        check("rp2-twisted cohomology", || {
            let (complex, rep) = datasets::rp2_twisted();
            let cc = complex.to_cochain_complex(&rep).map_err(err)?;
            let groups: Vec<String> = (0..3)
                .map(|k| cc.cohomology(k).map(|h| h.to_string()))
                .collect::<Result<_, _>>()
                .map_err(err)?;
            if groups == ["0", "(Z/2)^3", "Z^3"] {
                Ok(format!("H^0, H^1, H^2 = {}", groups.join(", ")))
            } else {
                Err(format!("got {groups:?}"))
            }
        }),
        check("rp2-bundle monodromy", || {
            let rep = monodromy_of(&datasets::rp2_bundle()).map_err(err)?;
            if rep.image(0) == &GlnZ::minus_identity(3) {
                Ok(format!("a ↦ {}", rep.image(0)))
            } else {
                Err(format!("a ↦ {}", rep.image(0)))
            }
        }),
        check("rp2-bundle surgery by (1,0,0)", || {
            let td = datasets::rp2_bundle();
            let mut shift = vec![ints(&[0, 0, 0]); td.nerve().triangles().len()];
            shift[0] = ints(&[1, 0, 0]);
            let twisted = twist_by_class(&td, &shift).map_err(err)?;
            let same = monodromy_of(&twisted).map_err(err)? == monodromy_of(&td).map_err(err)?;
            if same && has_class(&twisted, &[1, 0, 0])? && !has_class(&twisted, &[0, 0, 0])? {
                Ok("class (1,0,0), monodromy unchanged".into())
            } else {
                Err("class or monodromy wrong".into())
            }
        }),
        check("rp2 realization of (2,5,-1)", || {
            let nerve = datasets::rp2_nerve();
            let rep = monodromy_of(&datasets::rp2_bundle()).map_err(err)?;
            let local = LocalSystem::from_representation(nerve.clone(), &rep).map_err(err)?;
            let target = ChernCocycle::concentrated(local, 0, ints(&[2, 5, -1])).map_err(err)?;
            let td = realize_class(&nerve, &rep, &target).map_err(err)?;
            if has_class(&td, &[2, 5, -1])? {
                Ok("class (2,5,-1)".into())
            } else {
                Err("wrong class".into())
            }
        }),
        check("s2-tetra class and additivity", || {
            let td = datasets::s2_tetra();
            let once = s2_total(&td)?;
            let flat = TransitionData::from_transitions(
                td.nerve().clone(),
                vec![AffToral::identity(1); td.nerve().edges().len()],
            )
            .map_err(err)?;
            let mut shift = vec![ints(&[0]); 4];
            shift[td.nerve().triangle([1, 2, 3]).expect("face exists")] = ints(&[1]);
            let twice = twist_by_class(&twist_by_class(&flat, &shift).map_err(err)?, &shift).map_err(err)?;
            let total = s2_total(&twice)?;
            if once == BigInt::from(1) && total == BigInt::from(2) {
                Ok(format!("class {once}; unit shift applied twice gives {total}"))
            } else {
                Err(format!("class {once}, after two unit shifts {total}"))
            }
        }),
        check("circle-loop monodromy", || {
            let rep = monodromy_of(&datasets::circle_loop()).map_err(err)?;
            let expected = GlnZ::from_rows(&[[1, 1], [0, 1]]).map_err(err)?;
            if rep.image(0) == &expected {
                Ok(format!("a ↦ {}", rep.image(0)))
            } else {
                Err(format!("a ↦ {}", rep.image(0)))
            }
        }),
        check("translation atlas on the circle", || {
            let td = trivial_fstar_fibration(&datasets::circle_translation_atlas()).map_err(err)?;
            let trivial = monodromy_of(&td).map_err(err)?.is_trivial();
            let zero = chern_cocycle(&td).map_err(err)?.is_zero();
            if trivial && zero {
                Ok("trivial monodromy, zero class".into())
            } else {
                Err("nontrivial output".into())
            }
        }),
        check("equivariance of the attaching maps", || {
            let mut rng = ChaCha8Rng::seed_from_u64(1);
            let mut worst: f64 = 0.0;
            let mut n = 0;
            while n < 1000 {
                let x: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-5.0..5.0));
                let Ok(p) = BasePoint::new(x) else { continue };
                let t = TorusPoint2Pi::new(std::array::from_fn(|_| rng.gen_range(0.0..TAU)));
                worst = worst.max(check_equivariance(Sign::Plus, &p, &t).map_err(err)?);
                n += 1;
            }
            if worst < 1e-9 {
                Ok(format!("max deviation {worst:.2e} over 1000 samples"))
            } else {
                Err(format!("max deviation {worst:.2e}"))
            }
        }),
        check("closedness identity", || {
            let mut rng = ChaCha8Rng::seed_from_u64(2);
            let mut worst: f64 = 0.0;
            let mut n = 0;
            while n < 200 {
                let x: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-3.0..3.0));
                if (x[0] < 0.0 && x[1].abs() < 0.5) || x[0].hypot(x[1]) < 0.5 {
                    continue;
                }
                let p = BasePoint::new(x).map_err(err)?;
                worst = worst.max(check_closedness(&p, 1e-4).map_err(err)?);
                n += 1;
            }
            if worst < 1e-6 {
                Ok(format!("max residual {worst:.2e} over 200 samples at h = 1e-4"))
            } else {
                Err(format!("max residual {worst:.2e}"))
            }
        }),
        check("generalized gluing class (2,3,5)", || {
            let v = ints(&[2, 3, 5]);
            let g = GlnZ::new(complete_primitive(&v).map_err(err)?).map_err(err)?;
            let c = chern_vector(&g).map_err(err)?;
            if c == v {
                Ok(format!("G = {g}, (G⁻¹)ᵀe₁ = (2,3,5)"))
            } else {
                Err(format!("chern vector {c:?}"))
            }
        }),
    ]
}
