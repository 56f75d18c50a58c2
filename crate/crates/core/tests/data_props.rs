use proptest::prelude::*;
use randnet::data::{
    kfold, load_table, make_synthetic, normalize, regular_grid, split_train_test, write_csv, Sampling, TableFormat,
    TargetFunction,
};
use randnet::{Dataset, Matrix};

fn dataset(rows: Vec<Vec<f64>>) -> Dataset {
    let y = rows.iter().map(|r| r.iter().sum()).collect();
    Dataset::new("p", Matrix::from_rows(&rows).unwrap(), y).unwrap()
}

fn rows_strategy() -> impl Strategy<Value = Vec<Vec<f64>>> {
    (1usize..4).prop_flat_map(|d| prop::collection::vec(prop::collection::vec(-1e3f64..1e3, d), 2..40))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn output_normalization_round_trips(rows in rows_strategy()) {
        let ds = dataset(rows);
        let (norm, n) = normalize(&ds, Some((0.0, 1.0)), Some((-1.0, 1.0)));
        prop_assert!(norm.y.iter().all(|v| (-1.0 - 1e-12..=1.0 + 1e-12).contains(v)));
        prop_assert!(norm.x.as_slice().iter().all(|v| (-1e-12..=1.0 + 1e-12).contains(v)));
        let back = n.denormalize_y(&norm.y);
        let spread = ds.y.iter().fold(0.0f64, |a, v| a.max(v.abs())).max(1.0);
        for (a, b) in back.iter().zip(&ds.y) {
            prop_assert!((a - b).abs() <= 1e-12 * spread);
        }
    }

    #[test]
    fn train_test_split_partitions(n in 2usize..200, frac in 0.05f64..0.95, seed in any::<u64>()) {
        let ds = dataset((0..n).map(|i| vec![i as f64]).collect());
        match split_train_test(&ds, frac, seed) {
            Ok((train, test)) => {
                prop_assert_eq!(train.len() + test.len(), n);
                let mut all: Vec<f64> = train.x.as_slice().iter().chain(test.x.as_slice()).copied().collect();
                all.sort_by(f64::total_cmp);
                prop_assert_eq!(all, (0..n).map(|i| i as f64).collect::<Vec<_>>());
            }
            Err(_) => prop_assert!((frac * n as f64).ceil() as usize >= n),
        }
    }

    #[test]
    fn folds_are_exclusive_and_balanced(n in 2usize..300, k in 2usize..12, seed in any::<u64>()) {
        prop_assume!(k <= n);
        let plan = kfold(n, k, seed).unwrap();
        let mut seen = vec![0usize; n];
        for f in 0..k {
            let (fit, held) = plan.fold(f);
            prop_assert_eq!(fit.len() + held.len(), n);
            for &i in &held {
                seen[i] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
        let sizes = plan.sizes();
        prop_assert!(sizes.iter().max().unwrap() - sizes.iter().min().unwrap() <= 1);
    }

    #[test]
    fn noise_stays_within_amplitude(noise in 0.0f64..0.5, seed in any::<u64>()) {
        let clean = make_synthetic(TargetFunction::SineExp2d, 100, Sampling::UniformRandom, 0.0, seed).unwrap();
        let noisy = make_synthetic(TargetFunction::SineExp2d, 100, Sampling::UniformRandom, noise, seed).unwrap();
        prop_assert_eq!(&clean.x, &noisy.x);
        for (a, b) in clean.y.iter().zip(&noisy.y) {
            prop_assert!((a - b).abs() <= noise);
        }
    }
}

#[test]
fn two_d_target_is_additive() {
    for &(a, b) in &[(0.0, 0.0), (0.3, 0.8), (1.0, 0.25)] {
        let whole = TargetFunction::SineExp2d.eval(&[a, b]);
        let parts = TargetFunction::SineExp1d.eval(&[a]) + TargetFunction::SineExp1d.eval(&[b]);
        assert!((whole - parts).abs() < 1e-15);
    }
}

#[test]
fn grid_covers_corners_and_spacing() {
    let g = regular_grid(5, 2);
    assert_eq!(g.shape(), (25, 2));
    for corner in [[0.0, 0.0], [0.0, 1.0], [1.0, 0.0], [1.0, 1.0]] {
        assert!(g.row_iter().any(|r| r == corner));
    }
    let ds = make_synthetic(TargetFunction::ThreeGauss1d, 11, Sampling::RegularGrid, 0.0, 0).unwrap();
    for (i, r) in ds.x.row_iter().enumerate() {
        assert!((r[0] - i as f64 / 10.0).abs() < 1e-15);
    }
    assert!(make_synthetic(TargetFunction::SineExp2d, 10, Sampling::RegularGrid, 0.0, 0).is_err());
}

#[test]
fn synthetic_is_reproducible() {
    let a = make_synthetic(TargetFunction::SineExp1d, 50, Sampling::UniformRandom, 0.2, 5).unwrap();
    let b = make_synthetic(TargetFunction::SineExp1d, 50, Sampling::UniformRandom, 0.2, 5).unwrap();
    let c = make_synthetic(TargetFunction::SineExp1d, 50, Sampling::UniformRandom, 0.2, 6).unwrap();
    assert_eq!(a, b);
    assert_ne!(a.x, c.x);
}

#[test]
fn csv_round_trip_through_loader() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.csv");
    let ds = make_synthetic(TargetFunction::SineExp2d, 30, Sampling::UniformRandom, 0.1, 1).unwrap();
    write_csv(&ds, &path).unwrap();
    let back = load_table(&path, TableFormat::Csv).unwrap();
    assert_eq!(back.x, ds.x);
    assert_eq!(back.y, ds.y);
}

#[test]
fn keel_file_loads() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.dat");
    std::fs::write(
        &path,
        "@relation t\n@attribute a real [0, 10]\n@attribute b real [0, 1]\n@inputs a\n@outputs b\n@data\n1, 0.5\n2, 0.25\n",
    )
    .unwrap();
    let ds = load_table(&path, TableFormat::from_path(&path)).unwrap();
    assert_eq!(ds.x.as_slice(), &[1.0, 2.0]);
    assert_eq!(ds.y, vec![0.5, 0.25]);
}
