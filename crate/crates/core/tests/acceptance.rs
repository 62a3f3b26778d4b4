//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use torfib::affine::{conjugacy_check, ConjugacyVerdict, GlnZ, Representation};
use torfib::cocycles::{
    chern_cocycle, chern_cocycle_with_lift_offsets, cohomologous, monodromy_of, realize_class,
    twist_by_class, verify_cocycle, ChernCocycle, Cohomologous, LocalSystem,
};
use torfib::constructions::{
    check_closedness, check_equivariance, chern_vector, BasePoint, Sign, TorusPoint2Pi,
};
use torfib::datasets;
use torfib::linalg::{complete_primitive, smith_normal_form, AbelianGroup, IntMatrix};

type Outcome = Result<String, String>;

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn group(free: usize, torsion: &[i64]) -> AbelianGroup {
    AbelianGroup {
        free_rank: free,
        torsion: ints(torsion),
    }
}

fn expect_groups(rep: &Representation, expected: [AbelianGroup; 3]) -> Outcome {
    let (complex, _) = datasets::rp2_twisted();
    let cc = complex.to_cochain_complex(rep).map_err(|e| e.to_string())?;
    let mut got = Vec::new();
    for (k, want) in expected.iter().enumerate() {
        let h = cc.cohomology(k).map_err(|e| e.to_string())?;
        if &h != want {
            return Err(format!("H^{k} = {h}, expected {want}"));
        }
        got.push(format!("H^{k} = {h}"));
    }
    Ok(got.join(", "))
}

fn criterion_1() -> Outcome {
    let (_, rep) = datasets::rp2_twisted();
    expect_groups(&rep, [group(0, &[]), group(0, &[2, 2, 2]), group(3, &[])])
}

fn criterion_2() -> Outcome {
    let (complex, _) = datasets::rp2_twisted();
    let rep = Representation::trivial(complex.presentation().clone(), 3);
    expect_groups(&rep, [group(3, &[]), group(0, &[]), group(0, &[2, 2, 2])])
}

fn criterion_3() -> Outcome {
    let td = datasets::rp2_bundle();
    if !verify_cocycle(&td).is_ok() {
        return Err("dataset fails its cocycle condition".into());
    }
    let mono = monodromy_of(&td).map_err(|e| e.to_string())?;
    let expected = Representation::new(mono.presentation().clone(), 3, vec![IntMatrix::scalar(3, -1)])
        .map_err(|e| e.to_string())?;
    match conjugacy_check(&mono, &expected, 1).map_err(|e| e.to_string())? {
        ConjugacyVerdict::Conjugate { witness } => {
            let lhs = witness.matrix() * mono.image(0).matrix();
            let rhs = expected.image(0).matrix() * witness.matrix();
            if lhs == rhs {
                Ok(format!("a ↦ {} with witness {}", mono.image(0), witness))
            } else {
                Err("witness does not intertwine".into())
            }
        }
        other => Err(format!("verdict {other:?}")),
    }
}

/// Checks `c1 − c2 = δw` by direct substitution.
fn verify_witness(c1: &ChernCocycle, c2: &ChernCocycle, witness: &[Vec<BigInt>]) -> bool {
    let nerve = c1.nerve();
    let local = c1.local_system();
    (0..nerve.triangles().len()).all(|t| {
        let [ab, bc, ac] = nerve.triangle_edges(t);
        let moved = local.linear(bc).matrix().mul_vec(&witness[ab]).unwrap();
        (0..local.dim()).all(|i| {
            let dw = &witness[bc][i] + &moved[i] - &witness[ac][i];
            dw == &c1.values()[t][i] - &c2.values()[t][i]
        })
    })
}

fn criterion_4() -> Outcome {
    let nerve = datasets::rp2_nerve();
    let (complex, cellular_rep) = datasets::rp2_twisted();
    let rep = Representation::new(nerve.presentation().clone(), 3, vec![IntMatrix::scalar(3, -1)])
        .map_err(|e| e.to_string())?;
    let local = LocalSystem::from_representation(nerve.clone(), &rep).map_err(|e| e.to_string())?;
    // The Čech model must see the same H² as the cellular one.
    let cellular = complex.to_cochain_complex(&cellular_rep).unwrap().cohomology(2).unwrap();
    let cech = local.cech_complex().cohomology(2).unwrap();
    if cech != cellular {
        return Err(format!("Čech H² = {cech}, cellular H² = {cellular}"));
    }
    let bundle = datasets::rp2_bundle();
    let bundle_mono = monodromy_of(&bundle).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..50 {
        let v: Vec<BigInt> = (0..3).map(|_| BigInt::from(rng.gen_range(-9..=9))).collect();
        let target = ChernCocycle::concentrated(local.clone(), 0, v.clone()).map_err(|e| e.to_string())?;
        let td = realize_class(&nerve, &rep, &target).map_err(|e| e.to_string())?;
        if !verify_cocycle(&td).is_ok() {
            return Err(format!("realization of {v:?} is not a cocycle"));
        }
        if monodromy_of(&td).map_err(|e| e.to_string())? != rep {
            return Err(format!("monodromy changed for {v:?}"));
        }
        let c = chern_cocycle(&td).map_err(|e| e.to_string())?;
        match cohomologous(&c, &target).map_err(|e| e.to_string())? {
            Cohomologous::Equal { witness } if verify_witness(&c, &target, &witness) => {}
            other => return Err(format!("class of realization of {v:?}: {other:?}")),
        }
        // Surgery on the antipodal bundle itself.
        let shift = target.values().to_vec();
        let twisted = twist_by_class(&bundle, &shift).map_err(|e| e.to_string())?;
        if monodromy_of(&twisted).map_err(|e| e.to_string())? != bundle_mono {
            return Err(format!("surgery by {v:?} changed the monodromy"));
        }
        let c = chern_cocycle(&twisted).map_err(|e| e.to_string())?;
        let expected = ChernCocycle::new(twisted.local_system().unwrap(), shift).map_err(|e| e.to_string())?;
        if !cohomologous(&c, &expected).map_err(|e| e.to_string())?.is_equal() {
            return Err(format!("surgery by {v:?} gave the wrong class"));
        }
        if v.iter().any(|x| !x.is_zero()) && c.class().is_zero() {
            return Err(format!("nonzero target {v:?} realized as the zero class"));
        }
    }
    Ok(format!("H² = {cech}; 50 targets realized, monodromy unchanged"))
}

fn det_i128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det_i128(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all `k×k` minors by cofactor expansion.
fn minor_gcd_oracle(m: &[Vec<i64>], k: usize) -> i128 {
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    let mut g: i128 = 0;
    for rows in subsets(r, k) {
        for cols in subsets(c, k) {
            let sub: Vec<Vec<i128>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| m[i][j] as i128).collect())
                .collect();
            g = g.gcd(&det_i128(&sub));
        }
    }
    g
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut minor_checks = 0;
    for case in 0..1000 {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let raw: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let m = IntMatrix::from_rows(&raw).unwrap();
        let snf = smith_normal_form(&m);
        if &(&snf.u * &m) * &snf.v != snf.d {
            return Err(format!("case {case}: U·M·V ≠ D for {m}"));
        }
        for t in [&snf.u, &snf.v] {
            if !t.determinant().unwrap().abs().is_one() {
                return Err(format!("case {case}: transform not unimodular"));
            }
        }
        let diag = snf.diagonal();
        for i in 0..r {
            for j in 0..c {
                if i != j && !snf.d.get(i, j).is_zero() {
                    return Err(format!("case {case}: D not diagonal"));
                }
            }
        }
        if diag.iter().any(Signed::is_negative) {
            return Err(format!("case {case}: negative invariant factor in {diag:?}"));
        }
        for w in diag.windows(2) {
            let ok = if w[0].is_zero() {
                w[1].is_zero()
            } else {
                w[1].is_multiple_of(&w[0])
            };
            if !ok {
                return Err(format!("case {case}: divisibility chain broken: {diag:?}"));
            }
        }
        if r.max(c) <= 4 {
            let mut prod = BigInt::one();
            for k in 1..=r.min(c) {
                prod *= &diag[k - 1];
                let expected = minor_gcd_oracle(&raw, k);
                if prod.to_i128() != Some(expected) {
                    return Err(format!("case {case}: d_1⋯d_{k} = {prod}, minor gcd {expected}"));
                }
                minor_checks += 1;
            }
        }
    }
    Ok(format!("1000 matrices, {minor_checks} minor-gcd checks"))
}

fn criterion_6() -> Outcome {
    let td = datasets::s2_tetra();
    let base = chern_cocycle(&td).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for i in 0..200 {
        let offsets: Vec<Vec<BigInt>> = (0..td.nerve().edges().len())
            .map(|_| vec![BigInt::from(rng.gen_range(-5..=5))])
            .collect();
        let c = chern_cocycle_with_lift_offsets(&td, &offsets).map_err(|e| e.to_string())?;
        match cohomologous(&c, &base).map_err(|e| e.to_string())? {
            Cohomologous::Equal { witness } if verify_witness(&c, &base, &witness) => {}
            other => return Err(format!("perturbation {i}: {other:?}")),
        }
    }
    Ok("200 lift perturbations cohomologous".into())
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst_eq: f64 = 0.0;
    let mut n = 0;
    while n < 1000 {
        let x: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-5.0..5.0));
        let Ok(p) = BasePoint::new(x) else { continue };
        let t = TorusPoint2Pi::new(std::array::from_fn(|_| rng.gen_range(0.0..std::f64::consts::TAU)));
        for sign in [Sign::Plus, Sign::Minus] {
            worst_eq = worst_eq.max(check_equivariance(sign, &p, &t).map_err(|e| e.to_string())?);
        }
        n += 1;
    }
    if worst_eq >= 1e-9 {
        return Err(format!("equivariance deviation {worst_eq:e}"));
    }
    let mut worst_closed: f64 = 0.0;
    let mut n = 0;
    while n < 200 {
        let x: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-3.0..3.0));
        // Branch-safe: stay 0.5 away from the cut and from the degenerate locus.
        let near_cut = x[0] < 0.0 && x[1].abs() < 0.5;
        if near_cut || x[0].hypot(x[1]) < 0.5 {
            continue;
        }
        let p = BasePoint::new(x).unwrap();
        worst_closed = worst_closed.max(check_closedness(&p, 1e-4).map_err(|e| e.to_string())?);
        n += 1;
    }
    if worst_closed >= 1e-6 {
        return Err(format!("closedness residual {worst_closed:e}"));
    }
    Ok(format!(
        "max equivariance deviation {worst_eq:.1e}, max closedness residual {worst_closed:.1e}"
    ))
}

fn gcd_oracle(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..200 {
        let mut g = IntMatrix::identity(3);
        for _ in 0..rng.gen_range(1..=12) {
            let (a, b) = (rng.gen_range(0..3), rng.gen_range(0..3));
            let mut e = IntMatrix::identity(3);
            if a == b {
                e.set(a, a, -1);
            } else {
                e.set(a, b, rng.gen_range(-3..=3));
            }
            g = &g * &e;
        }
        let g = GlnZ::new(g).map_err(|e| e.to_string())?;
        let v = chern_vector(&g).map_err(|e| e.to_string())?;
        if !gcd_oracle(&v).is_one() {
            return Err(format!("G #{i}: chern vector {v:?} is not primitive"));
        }
    }
    let mut done = 0;
    while done < 200 {
        let v: Vec<BigInt> = (0..3).map(|_| BigInt::from(rng.gen_range(-20..=20))).collect();
        if !gcd_oracle(&v).is_one() {
            continue;
        }
        let g = GlnZ::new(complete_primitive(&v).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let back = g.inverse().transpose().matrix().col(0);
        if back != v || chern_vector(&g).unwrap() != v {
            return Err(format!("round trip of {v:?} gave {back:?}"));
        }
        done += 1;
    }
    Ok("200 chern vectors primitive, 200 completions round-trip".into())
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 8] = [
        ("twisted cohomology of RP²", criterion_1, Duration::from_secs(1)),
        ("untwisted cohomology of RP²", criterion_2, Duration::from_secs(1)),
        ("monodromy of the RP² bundle", criterion_3, Duration::from_secs(1)),
        ("surgery realizes every class", criterion_4, Duration::from_secs(30)),
        ("Smith normal form properties", criterion_5, Duration::from_secs(30)),
        ("Chern-lift invariance", criterion_6, Duration::from_secs(10)),
        ("attaching-map identities", criterion_7, Duration::from_secs(5)),
        ("primitivity of chern vectors", criterion_8, Duration::from_secs(10)),
    ];
    let mut failures = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(detail) if elapsed <= limit => ("PASS", detail),
            Ok(detail) => ("FAIL", format!("{detail}; took {elapsed:.2?}, limit {limit:?}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!("criterion {}: {status} [{elapsed:.2?}] {name}: {detail}", i + 1);
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
