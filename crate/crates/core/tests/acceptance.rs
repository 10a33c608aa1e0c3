//! Acceptance suite. Runs each criterion, prints one PASS/FAIL line per
//! criterion, and exits non-zero if any fails.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use sympleig::hmat::{
    adjoint_det, detect_rotation_form, eigen_sphere_point, is_left_eigenvalue, is_symplectic,
    random_symplectic, rotation_matrix, symplectic_residual, MatH2, RotationForm,
};
use sympleig::quat::{random_unit, random_unit_imaginary, re_dot, similar, Quaternion};
use sympleig::solver::{
    bound_check, construct, norm, rank_and_kernel, solve_linear, system_matrix, Branch, RealMatrix,
    RANK_TOL,
};
use sympleig::topology::{
    cayley_path, cover_matrices, five_sigmas, omega_margin, sample_matrix, OMEGA_THRESHOLD,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn u() -> Quaternion {
    Quaternion::new(1.0, 1.0, 1.0, 1.0)
}

/// The two matrices (1/4)[[u, ∓√3u], [±√3u, u]].
fn example_pair() -> [MatH2; 2] {
    let s3 = 3f64.sqrt();
    [
        MatH2::new(u(), -u().scale(s3), u().scale(s3), u()).scale(0.25),
        MatH2::new(u(), u().scale(s3), -u().scale(s3), u()).scale(0.25),
    ]
}

fn basis() -> [Quaternion; 4] {
    [Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::K]
}

fn random_tuple(rng: &mut ChaCha8Rng) -> [Quaternion; 4] {
    [0; 4].map(|_| random_unit(rng))
}

fn c1_example() -> Outcome {
    let r = construct(&basis()).map_err(|e| e.to_string())?;
    ensure(r.branch == Branch::FullRank, || format!("branch {:?}", r.branch))?;
    let dq = r.q.max_abs_diff(u().scale(0.5));
    ensure(dq <= 1e-12, || format!("q off by {dq:e}"))?;
    let dc = (r.cos_theta - 0.5).abs();
    ensure(dc <= 1e-12, || format!("cos θ off by {dc:e}"))?;
    let want = example_pair();
    let d0 = r.matrices[0].max_abs_diff(&want[0]);
    let d1 = r.matrices[1].max_abs_diff(&want[1]);
    ensure(d0 <= 1e-12 && d1 <= 1e-12, || format!("matrix errors {d0:e}, {d1:e}"))?;
    Ok(format!("q = u/2, cos θ = 1/2, matrix errors {d0:.1e} / {d1:.1e}"))
}

fn c2_soundness() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut worst_sym, mut worst_margin, mut worst_res) = (0.0f64, f64::NEG_INFINITY, 0.0f64);
    for trial in 0..1000 {
        let s = random_tuple(&mut rng);
        let r = construct(&s).map_err(|e| format!("trial {trial}: {e}"))?;
        for a in &r.matrices {
            worst_sym = worst_sym.max(symplectic_residual(a));
            for &x in &s {
                worst_margin = worst_margin.max(adjoint_det(&a.shift(x)));
            }
        }
        for &x in &s {
            worst_res = worst_res.max((re_dot(r.q, x) - r.cos_theta).abs());
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(worst_sym <= 1e-9, || format!("symplectic residual {worst_sym:e}"))?;
    ensure(worst_margin <= 1e-8, || format!("eigenvalue margin {worst_margin:e}"))?;
    ensure(worst_res <= 1e-9, || format!("Re(q̄σ) - cos θ residual {worst_res:e}"))?;
    ensure(secs < 5.0, || format!("took {secs:.2} s"))?;
    Ok(format!(
        "1000 tuples: max symplectic residual {worst_sym:.1e}, max margin {worst_margin:.1e}, \
         max residual {worst_res:.1e}, {secs:.2} s"
    ))
}

fn random_unit_row_matrix(rng: &mut ChaCha8Rng, n: usize) -> RealMatrix {
    loop {
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|_| {
                let r: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
                let rn = norm(&r);
                r.into_iter().map(|x| x / rn).collect()
            })
            .collect();
        let m = RealMatrix::from_rows(&rows).unwrap();
        if rank_and_kernel(&m, RANK_TOL).rank == n {
            return m;
        }
    }
}

fn c3_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut tightest = 0.0f64;
    for trial in 0..1000 {
        let n = 2 + trial % 5;
        let m = random_unit_row_matrix(&mut rng, n);
        let w: Vec<f64> = loop {
            let w: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
            if norm(&w) > 0.0 {
                break w;
            }
        };
        let b = bound_check(&m, &w).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure(b.strict, || format!("trial {trial}: {} ≮ {}", b.lhs, b.rhs))?;
        tightest = tightest.max(b.lhs / b.rhs);
    }
    // ‖M⁻¹u‖ over the full-rank constructions of criterion 2
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut smallest = f64::INFINITY;
    let mut full_rank = 0;
    for trial in 0..1000 {
        let s = random_tuple(&mut rng);
        let m = system_matrix(&s).unwrap();
        if rank_and_kernel(&m, RANK_TOL).rank < 4 {
            continue;
        }
        full_rank += 1;
        let v = solve_linear(&m, &[1.0; 4]).map_err(|e| format!("trial {trial}: {e}"))?;
        let vn = norm(&v);
        ensure(vn > 1.0 + 1e-12, || format!("trial {trial}: ‖M⁻¹u‖ = {vn}"))?;
        smallest = smallest.min(vn);
    }
    Ok(format!(
        "1000 bound trials strict (max ratio {tightest:.4}); {full_rank} full-rank systems with \
         min ‖M⁻¹u‖ = {smallest:.4}"
    ))
}

fn random_form(rng: &mut ChaCha8Rng) -> RotationForm {
    loop {
        let theta = rng.random_range(-PI..PI);
        if theta.sin().abs() > 0.1 {
            return RotationForm { q: random_unit(rng), theta };
        }
    }
}

fn c4_real_lemma() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for trial in 0..500 {
        let f = random_form(&mut rng);
        let a = rotation_matrix(&f).map_err(|e| e.to_string())?;
        let omega = random_unit_imaginary(&mut rng);
        // (2): σ on the sphere by construction
        let s = eigen_sphere_point(&f, omega).map_err(|e| e.to_string())?;
        let (sin, cos) = f.theta.sin_cos();
        let c1 = is_left_eigenvalue(&a, s, 1e-8);
        let c3 = (s.norm() - 1.0).abs() <= 1e-8 && (re_dot(f.q, s) - cos).abs() <= 1e-8;
        let c4 = similar(f.q.conj() * s, Quaternion::new(cos, sin, 0.0, 0.0), 1e-8);
        // (3) ⇒ (2): recover ω from σ and check it is unit imaginary
        let w = (f.q.conj() * s - Quaternion::real(cos)).scale(1.0 / sin);
        let c2 = w.t.abs() <= 1e-8 && (w.norm() - 1.0).abs() <= 1e-8;
        ensure(c1 && c2 && c3 && c4, || {
            format!("trial {trial}: conditions (1..4) = {c1} {c2} {c3} {c4}")
        })?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    let mut smallest = f64::INFINITY;
    let mut checked = 0;
    while checked < 500 {
        let f = random_form(&mut rng);
        let s = random_unit(&mut rng);
        if f.sphere_gap(s) <= 0.05 {
            continue;
        }
        let a = rotation_matrix(&f).map_err(|e| e.to_string())?;
        let margin = adjoint_det(&a.shift(s));
        ensure(!is_left_eigenvalue(&a, s, 1e-8) && margin > 1e-6, || {
            format!("off-sphere σ accepted, margin {margin:e}")
        })?;
        smallest = smallest.min(margin);
        checked += 1;
    }
    Ok(format!(
        "500 sphere points satisfy (1)-(4); 500 off-sphere points rejected, min margin {smallest:.3e}"
    ))
}

fn c5_cayley() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst_sym = 0.0f64;
    let mut min_margin = f64::INFINITY;
    let mut done = 0;
    while done < 200 {
        let a = random_symplectic(&mut rng);
        let s = random_unit(&mut rng);
        if !omega_margin(&a, s, OMEGA_THRESHOLD).map_err(|e| e.to_string())?.member {
            continue;
        }
        let a1 = cayley_path(&a, s, 1.0).map_err(|e| e.to_string())?;
        let d1 = a1.max_abs_diff(&a);
        ensure(d1 <= 1e-12, || format!("A₁ differs from A by {d1:e}"))?;
        let a0 = cayley_path(&a, s, 0.0).map_err(|e| e.to_string())?;
        ensure(a0 == MatH2::scalar(-s), || "A₀ ≠ -σI".to_string())?;
        for k in 1..=16 {
            let t = k as f64 / 16.0;
            let at = cayley_path(&a, s, t).map_err(|e| e.to_string())?;
            let res = symplectic_residual(&at);
            ensure(res <= 1e-8, || format!("t = {t}: symplectic residual {res:e}"))?;
            let m = omega_margin(&at, s, OMEGA_THRESHOLD).map_err(|e| e.to_string())?;
            ensure(m.member, || format!("t = {t}: left Ω(σ), margin {:e}", m.margin))?;
            worst_sym = worst_sym.max(res);
            min_margin = min_margin.min(m.margin);
        }
        done += 1;
    }
    Ok(format!(
        "200 paths: endpoints exact, max symplectic residual {worst_sym:.1e}, min Ω margin {min_margin:.3e}"
    ))
}

fn c6_covering() -> Outcome {
    let n = 10_000;
    let injected = [1234usize, 8765];
    let pair = example_pair();
    let mut samples: Vec<MatH2> = (0..n).map(|i| sample_matrix(0, i)).collect();
    samples[injected[0]] = pair[0];
    samples[injected[1]] = pair[1];

    let four = cover_matrices(&basis(), &samples, OMEGA_THRESHOLD).map_err(|e| e.to_string())?;
    let idx: Vec<usize> = four.uncovered.iter().map(|s| s.index).collect();
    ensure(idx == injected, || format!("four-set uncovered indices {idx:?}"))?;
    for s in &four.uncovered {
        ensure(s.margins.iter().all(|&m| m <= 1e-8), || format!("margins {:?}", s.margins))?;
    }

    let five = cover_matrices(&five_sigmas(), &samples, OMEGA_THRESHOLD).map_err(|e| e.to_string())?;
    ensure(five.uncovered.is_empty(), || {
        format!("five-set left {} samples uncovered", five.uncovered.len())
    })?;

    let s5 = five_sigmas()[4];
    let r = construct(&basis()).map_err(|e| e.to_string())?;
    let forms = r.forms();
    let v0 = re_dot(forms[0].q, s5);
    let v1 = re_dot(forms[1].q, s5);
    let err = (v0 - FRAC_1_SQRT_2).abs().max((v1 + FRAC_1_SQRT_2).abs());
    ensure(err <= 1e-12, || format!("Re(q̄σ₅) = {v0}, {v1}"))?;
    Ok(format!(
        "four sets miss exactly samples {idx:?}; five sets cover all {n} (min best margin {:.3e}); \
         Re(q̄σ₅) = ±1/√2 to {err:.1e}",
        five.min_best_margin
    ))
}

fn c7_classifier() -> Outcome {
    let a = example_pair()[0];
    let f = detect_rotation_form(&a, 1e-9)
        .map_err(|e| e.to_string())?
        .ok_or("example matrix not detected")?;
    let back = rotation_matrix(&f).map_err(|e| e.to_string())?;
    let d = back.max_abs_diff(&a);
    ensure(d <= 1e-10, || format!("round trip error {d:e}"))?;
    ensure(
        f.q.max_abs_diff(u().scale(0.5)) <= 1e-10 && (f.theta - PI / 3.0).abs() <= 1e-10,
        || format!("recovered q = {}, θ = {}", f.q, f.theta),
    )?;
    ensure(detect_rotation_form(&MatH2::IDENTITY, 1e-9).unwrap().is_none(), || {
        "identity detected".into()
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..1000 {
        let m = random_symplectic(&mut rng);
        ensure(is_symplectic(&m, 1e-10), || format!("sample {i} not symplectic"))?;
        ensure(detect_rotation_form(&m, 1e-9).unwrap().is_none(), || {
            format!("sample {i} detected as rotation form")
        })?;
    }
    Ok(format!("example → (u/2, π/3), round trip {d:.1e}; identity and 1000 samples rejected"))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("example reproduction", c1_example),
        ("construction soundness sweep", c2_soundness),
        ("unit-row norm bound", c3_bound),
        ("eigenvalue sphere equivalences", c4_real_lemma),
        ("Cayley contraction", c5_cayley),
        ("covering phenomena", c6_covering),
        ("rotation-form classifier", c7_classifier),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("[PASS] {}. {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {}. {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.2} s",
        criteria.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
