mod common;

use common::{c, exp_minus_i, max_abs_diff, select_generator, CMatrix};
use num_complex::Complex64;
use qlt_core::laplace::{compute_coefficients, lchs_discrete_sum, ApSpec, LaplaceGrid, SignalFunction};
use qlt_core::qlt::{
    build_qlt, build_select, predicted_gate_count, prep_complex_weights, prep_real_weights,
    run_qlt, QltConfig, SelectVariant,
};
use qlt_core::statevector::{init_state, Circuit};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn config(
    ap: ApSpec,
    grid: LaplaceGrid,
    signal: SignalFunction,
    variant: SelectVariant,
) -> QltConfig {
    QltConfig::new(ap, grid, signal, variant)
}

fn random_tabulated(rng: &mut ChaCha8Rng, len: usize) -> SignalFunction {
    loop {
        let samples: Vec<f64> = (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let mixed = samples.iter().any(|s| *s < 0.0) && samples.iter().any(|s| *s > 0.0);
        if mixed || len == 1 {
            return SignalFunction::Tabulated { samples };
        }
    }
}

#[test]
fn select_matches_matrix_exponential() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for variant in [SelectVariant::Full, SelectVariant::Reduced] {
        for n_sys in 1..=2 {
            for d in 0..=2 {
                for dp in 0..=2 {
                    let first = rng.gen_range(0.0..2.0);
                    let diff: f64 = rng.gen_range(-0.3..1.0);
                    let grid = LaplaceGrid::new(
                        rng.gen_range(0.5..4.0),
                        1 << d,
                        rng.gen_range(0.5..3.0),
                        1 << dp,
                        0.8,
                    )
                    .unwrap();
                    let cfg = config(
                        ApSpec::symmetric(first, diff.max(-first / 4.0), n_sys).unwrap(),
                        grid,
                        SignalFunction::ExpDecay { rate: 1.0 },
                        variant,
                    );
                    let engine = build_select(&cfg).unwrap().unitary().unwrap();
                    let oracle =
                        exp_minus_i(&select_generator(cfg.ap.first_real, cfg.ap.diff_real, n_sys, &grid));
                    let err = max_abs_diff(&engine, &oracle);
                    assert!(err < 1e-12, "{variant} n={n_sys} d={d} d'={dp}: {err:e}");
                }
            }
        }
    }
}

#[test]
fn select_single_qubit_worked_example() {
    // K = 1, M_k = 2 → h_k = 1; T = 1, M_t = 2 → h_t = 0.5.
    let grid = LaplaceGrid::new(1.0, 2, 1.0, 2, 0.8).unwrap();
    assert_eq!(grid.h_k(), 1.0);
    assert_eq!(grid.h_t(), 0.5);
    let ap = ApSpec::symmetric(1.0, 1.0, 1).unwrap();
    let oracle = exp_minus_i(&select_generator(1.0, 1.0, 1, &grid));
    for variant in [SelectVariant::Full, SelectVariant::Reduced] {
        let cfg = config(ap, grid, SignalFunction::ExpDecay { rate: 1.0 }, variant);
        let u = build_select(&cfg).unwrap().unitary().unwrap();
        assert!(max_abs_diff(&u, &oracle) < 1e-12);
    }
    // l = 1, j = 1: t = 0.5, k = 0, L = diag(1, 2)
    let base = 2 + 4;
    assert!((oracle[(base, base)] - c(0.0, -0.5).exp()).norm() < 1e-15);
    assert!((oracle[(base + 1, base + 1)] - c(0.0, -1.0).exp()).norm() < 1e-15);
}

#[test]
fn variants_agree() {
    for (d, dp, n) in [(1, 1, 1), (2, 1, 2), (1, 3, 1), (3, 2, 2)] {
        let grid = LaplaceGrid::new(2.5, 1 << d, 1.7, 1 << dp, 0.8).unwrap();
        let ap = ApSpec::symmetric(0.7, 0.4, n).unwrap();
        let sig = SignalFunction::ExpDecay { rate: 1.0 };
        let full = build_select(&config(ap, grid, sig.clone(), SelectVariant::Full)).unwrap();
        let red = build_select(&config(ap, grid, sig, SelectVariant::Reduced)).unwrap();
        assert!(max_abs_diff(&full.unitary().unwrap(), &red.unitary().unwrap()) < 1e-12);
        assert!(full.max_control_arity() <= 2 && red.max_control_arity() <= 2);
    }
}

#[test]
fn zero_time_step_gives_identity() {
    let grid = LaplaceGrid::degenerate(3.0, 4, 0.0, 4, 0.8).unwrap();
    for variant in [SelectVariant::Full, SelectVariant::Reduced] {
        let cfg = config(
            ApSpec::symmetric(1.0, 1.0, 2).unwrap(),
            grid,
            SignalFunction::ExpDecay { rate: 1.0 },
            variant,
        );
        let c = build_select(&cfg).unwrap();
        let dim = 1 << c.n_qubits();
        assert!(max_abs_diff(&c.unitary().unwrap(), &CMatrix::identity(dim, dim)) < 1e-15);
    }
}

#[test]
fn lcu_block_is_weighted_sum_of_exponentials() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let shapes = [
        (1, 1, 1),
        (1, 2, 1),
        (1, 1, 3),
        (2, 2, 2),
        (2, 3, 1),
        (1, 3, 3),
        (2, 1, 2),
        (1, 2, 3),
        (2, 3, 3),
        (2, 2, 1),
        (1, 2, 2),
        (2, 1, 3),
    ];
    for (n_sys, d, dp) in shapes {
        let m_t = 1 << dp;
        let grid = LaplaceGrid::new(rng.gen_range(1.0..8.0), 1 << d, rng.gen_range(1.0..3.0), m_t, 0.8)
            .unwrap();
        let ap = ApSpec::symmetric(rng.gen_range(0.5..2.0), rng.gen_range(0.0..1.0), n_sys).unwrap();
        let cfg = config(ap, grid, random_tabulated(&mut rng, m_t), SelectVariant::Full);
        let q = build_qlt(&cfg).unwrap();
        let u = q.lcu_circuit().unwrap().unitary().unwrap();
        let co = &q.coefficients;
        let scale = co.norm_c * co.norm_c_hat;
        let nx = 1usize << n_sys;
        for x in 0..nx {
            let mut want = c(0.0, 0.0);
            for (l, ch) in co.c_hat.iter().enumerate() {
                let t = l as f64 * grid.t_max / m_t as f64;
                for (j, cj) in co.c.iter().enumerate() {
                    let k = -grid.k_max + j as f64 * grid.h_k();
                    let ang = t * (k + 1.0) * ap.real_part(x);
                    want += cj * ch * c(0.0, -ang).exp();
                }
            }
            want /= scale;
            for y in 0..nx {
                let expected = if x == y { want } else { c(0.0, 0.0) };
                assert!(
                    (u[(y, x)] - expected).norm() < 1e-10,
                    "n={n_sys} d={d} d'={dp} ({y},{x})"
                );
            }
        }
    }
}

#[test]
fn simulated_values_match_double_sum() {
    for n_sys in 1..=2 {
        for d in 1..=4 {
            let grid = LaplaceGrid::new(8.0, 1 << d, 3.0, 1 << d, 0.8).unwrap();
            for variant in [SelectVariant::Full, SelectVariant::Reduced] {
                for signal in [
                    SignalFunction::ExpDecay { rate: 0.9 },
                    SignalFunction::ExpDecaySine {
                        rate: 0.9,
                        frequency: 1.0,
                    },
                ] {
                    let cfg = config(ApSpec::symmetric(1.0, 1.0, n_sys).unwrap(), grid, signal, variant);
                    let r = run_qlt(&cfg).unwrap();
                    let co = compute_coefficients(&grid, &cfg.signal).unwrap();
                    assert_eq!(r.values.len(), 1 << n_sys);
                    for (x, v) in r.values.iter().enumerate() {
                        let want = lchs_discrete_sum(&co, &grid, cfg.ap.node(x)).unwrap();
                        assert!((v - want).norm() < 1e-10, "n={n_sys} d={d} x={x}: {v} vs {want}");
                    }
                }
            }
        }
    }
}

#[test]
fn complex_prep_on_positive_reals_matches_real_prep() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for width in 1..=3 {
        let w: Vec<f64> = (0..1 << width).map(|_| rng.gen_range(0.1..2.0)).collect();
        let cw: Vec<Complex64> = w.iter().map(|x| c(*x, 0.0)).collect();
        let real = state_of(&prep_real_weights(&w).unwrap());
        let cplx = state_of(&prep_complex_weights(&cw).unwrap());
        let total: f64 = w.iter().sum();
        for i in 0..w.len() {
            assert!((real[i] - cplx[i]).norm() < 1e-14);
            assert!((cplx[i].norm_sqr() - w[i] / total).abs() < 1e-14);
        }
    }
}

fn state_of(circuit: &Circuit) -> Vec<Complex64> {
    let mut s = init_state(circuit.n_qubits()).unwrap();
    s.apply_circuit(circuit).unwrap();
    s.amplitudes().to_vec()
}

#[test]
fn complex_prep_squares_reproduce_normalized_weights() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for width in 1..=3 {
        let w: Vec<Complex64> = (0..1 << width)
            .map(|_| c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
            .collect();
        let norm: f64 = w.iter().map(|z| z.norm()).sum();
        let a = state_of(&prep_complex_weights(&w).unwrap());
        for (ai, wi) in a.iter().zip(&w) {
            assert!((ai * ai - wi / norm).norm() < 1e-14);
        }
    }
}

#[test]
fn unprep_is_prep_transpose() {
    let cfg = config(
        ApSpec::symmetric(1.0, 1.0, 1).unwrap(),
        LaplaceGrid::new(8.0, 4, 3.0, 2, 0.8).unwrap(),
        SignalFunction::ExpDecaySine {
            rate: 0.9,
            frequency: 1.0,
        },
        SelectVariant::Full,
    );
    let q = build_qlt(&cfg).unwrap();
    for (prep, unprep) in [(&q.prep_j, &q.unprep_j), (&q.prep_l, &q.unprep_l)] {
        let p = prep.unitary().unwrap();
        let u = unprep.unitary().unwrap();
        assert!(max_abs_diff(&u, &p.transpose()) < 1e-14);
    }
}

#[test]
fn select_counts_scale_with_register_widths() {
    for m in 1..=6 {
        let grid = LaplaceGrid::new(8.0, 1 << m, 3.0, 1 << m, 0.8).unwrap();
        let ap = ApSpec::symmetric(1.0, 1.0, m).unwrap();
        let sig = SignalFunction::ExpDecay { rate: 0.9 };
        let full = build_select(&config(ap, grid, sig.clone(), SelectVariant::Full)).unwrap();
        let red = build_select(&config(ap, grid, sig, SelectVariant::Reduced)).unwrap();
        assert_eq!(full.len(), m * m * (2 + 3 * m));
        assert_eq!(red.len(), m * (1 + m) * (1 + m));
        assert!(full.max_control_arity() <= 2);
    }
}

#[test]
fn single_time_node_gives_constant_values() {
    let grid = LaplaceGrid::new(8.0, 4, 3.0, 1, 0.8).unwrap();
    let cfg = config(
        ApSpec::symmetric(1.0, 1.0, 2).unwrap(),
        grid,
        SignalFunction::ExpDecay { rate: 0.9 },
        SelectVariant::Full,
    );
    let r = run_qlt(&cfg).unwrap();
    let co = compute_coefficients(&grid, &cfg.signal).unwrap();
    let want = co.c_hat[0] * co.c.iter().sum::<Complex64>();
    for v in &r.values {
        assert!((v - want).norm() < 1e-12);
    }
}

#[test]
fn predicted_counts() {
    let sig = SignalFunction::ExpDecay { rate: 0.9 };
    let one = LaplaceGrid::new(8.0, 2, 3.0, 2, 0.8).unwrap();
    let three = LaplaceGrid::new(8.0, 8, 3.0, 8, 0.8).unwrap();
    let ap1 = ApSpec::symmetric(1.0, 1.0, 1).unwrap();
    let ap3 = ApSpec::symmetric(1.0, 1.0, 3).unwrap();
    let full1 = config(ap1, one, sig.clone(), SelectVariant::Full);
    let full3 = config(ap3, three, sig.clone(), SelectVariant::Full);
    let red1 = config(ap1, one, sig, SelectVariant::Reduced);
    assert_eq!(predicted_gate_count(&full1).unwrap(), 5);
    assert_eq!(predicted_gate_count(&full3).unwrap(), 99);
    assert_eq!(predicted_gate_count(&red1).unwrap(), 4);
    assert_eq!(build_select(&full3).unwrap().len(), 99);
}
