use proptest::prelude::*;

use uacg_core::closedforms::{cf_spectrum, dl_from_laplacian};
use uacg_core::graphs::Graph;
use uacg_core::linalg::{
    energy, jacobi_eigenvalues, jacobi_spectrum, left_circulant, left_circulant_spectrum, spectrum_equal,
    JacobiOptions, Spectrum, SymMatrix,
};
use uacg_core::numtheory::{euler_phi, is_unit};
use uacg_core::{Family, GraphKind};

fn symmetric(max_order: usize) -> impl Strategy<Value = SymMatrix<f64>> {
    (1..=max_order).prop_flat_map(|n| {
        prop::collection::vec(-10.0f64..10.0, n * n)
            .prop_map(move |v| SymMatrix::from_lower(n, |i, j| v[i * n + j]).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jacobi_preserves_trace_and_frobenius(m in symmetric(14)) {
        let eig = jacobi_eigenvalues(&m, JacobiOptions::default()).unwrap();
        let scale = m.frobenius_norm_sq().max(1.0);
        let sum: f64 = eig.iter().sum();
        let sq: f64 = eig.iter().map(|x| x * x).sum();
        prop_assert!((sum - m.trace()).abs() <= 1e-10 * scale);
        prop_assert!((sq - m.frobenius_norm_sq()).abs() <= 1e-10 * scale);
    }

    #[test]
    fn left_circulant_rule_matches_jacobi(row in prop::collection::vec(-6i32..=6, 1..=64)) {
        let row: Vec<f64> = row.into_iter().map(f64::from).collect();
        let by_rule = left_circulant_spectrum(&row);
        let by_jacobi = jacobi_spectrum(&left_circulant(&row).unwrap(), JacobiOptions::default()).unwrap();
        let cmp = spectrum_equal(&by_rule, &by_jacobi, 1e-9);
        prop_assert!(cmp.is_equal(), "{:?}", cmp);
    }

    #[test]
    fn energy_is_translation_invariant(values in prop::collection::vec(-50.0f64..50.0, 1..40), c in -20.0f64..20.0, s in -5.0f64..5.0) {
        let a = Spectrum::from_values(values.clone());
        let b = Spectrum::from_values(values.into_iter().map(|v| v + c).collect());
        let (ea, eb) = (energy(&a, s).value, energy(&b, s + c).value);
        prop_assert!(ea >= 0.0);
        prop_assert!((ea - eb).abs() <= 1e-6 * ea.max(1.0));
    }

    #[test]
    fn clustering_keeps_order(values in prop::collection::vec(-5i32..5, 0..60)) {
        let s = Spectrum::from_values(values.iter().map(|&v| f64::from(v)).collect());
        prop_assert_eq!(s.order(), values.len());
        let v = s.values();
        prop_assert!(v.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn uacg_degrees(n in 2usize..160) {
        let g = Graph::build(GraphKind::Uacg, n).unwrap();
        let nu = n as u64;
        let phi = euler_phi(nu).unwrap() as usize;
        for v in 0..n {
            let loop_unit = usize::from(is_unit(2 * v as u64 % nu, nu));
            prop_assert_eq!(g.degree(v), phi - loop_unit);
        }
        let x = Graph::build(GraphKind::Ucg, n).unwrap();
        prop_assert!(x.degree_sequence().iter().all(|&d| d == phi));
        let c = g.complement();
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * (n - 1) / 2);
        for v in 0..n {
            prop_assert!(!c.adjacent(v, v));
            for w in 0..n {
                prop_assert_eq!(g.adjacent(v, w), g.adjacent(w, v));
            }
        }
    }

    #[test]
    fn uacg_connected_with_small_diameter(n in 3usize..160) {
        let d = Graph::build(GraphKind::Uacg, n).unwrap().distance_matrix().unwrap();
        prop_assert!(d.diameter() <= 3);
        prop_assert!(d.transmissions().total() > 0);
    }

    #[test]
    fn closed_forms_have_order_n(n in 2u64..400) {
        for family in Family::ALL {
            if let Ok(s) = cf_spectrum::<f64>(family, n) {
                prop_assert_eq!(s.order(), n as usize, "{} n={}", family, n);
            }
        }
    }

    #[test]
    fn single_and_double_precision_agree(n in 3u64..200) {
        for family in Family::ALL {
            let (Ok(a), Ok(b)) = (cf_spectrum::<f64>(family, n), cf_spectrum::<f32>(family, n)) else { continue };
            let (a, b) = (a.values(), b.values());
            prop_assert_eq!(a.len(), b.len());
            for (x, y) in a.iter().zip(&b) {
                prop_assert!((x - f64::from(*y)).abs() <= 1e-4 * x.abs().max(1.0));
            }
        }
    }

    #[test]
    fn odd_distance_laplacian_two_routes(k in 1u64..100) {
        let n = 2 * k + 1;
        let via = dl_from_laplacian(&cf_spectrum::<f64>(Family::Laplacian, n).unwrap(), n).unwrap();
        let direct = cf_spectrum::<f64>(Family::DistanceLaplacian, n).unwrap();
        prop_assert!(spectrum_equal(&via, &direct, 1e-12).is_equal());
    }
}
