use proptest::prelude::*;
use randnet::matrix::norm2;
use randnet::param_gen::{
    angle_to_weight_norm, generate_hidden_params, generate_standard_from, weight_to_angle, GenConfig, Placement,
    PlacementContext,
};
use randnet::slfn::sigmoid;
use randnet::Matrix;

fn angle_range() -> impl Strategy<Value = (f64, f64)> {
    (0.0f64..89.0, 0.01f64..1.0).prop_map(|(lo, frac)| (lo, lo + (90.0 - lo) * frac))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn anchor_is_the_inflection_point(n in 1usize..8, (lo, hi) in angle_range(), seed in any::<u64>()) {
        let cfg = GenConfig::new(20, n).with_angles(lo, hi).with_seed(seed);
        let p = generate_hidden_params(&cfg, &PlacementContext::unit()).unwrap();
        let anchors = p.anchors.as_ref().unwrap();
        for i in 0..p.nodes() {
            prop_assert!((sigmoid(p.activation(i, anchors.row(i))) - 0.5).abs() <= 1e-12);
        }
    }

    #[test]
    fn weight_norm_matches_angle(n in 1usize..8, (lo, hi) in angle_range(), seed in any::<u64>()) {
        let cfg = GenConfig::new(20, n).with_angles(lo, hi).with_seed(seed);
        let p = generate_hidden_params(&cfg, &PlacementContext::unit()).unwrap();
        for (i, &alpha) in p.angles.as_ref().unwrap().iter().enumerate() {
            prop_assert!(alpha > lo && alpha < hi, "angle {alpha} outside ({lo}, {hi})");
            let expect = 4.0 * alpha.to_radians().tan();
            let norm = norm2(p.weights.row(i));
            prop_assert!(((norm - expect) / expect).abs() <= 1e-9);
        }
    }

    #[test]
    fn angle_round_trip(alpha in 0.001f64..89.9) {
        let back = weight_to_angle(&[angle_to_weight_norm(alpha)]);
        prop_assert!((back - alpha).abs() <= 1e-9 * alpha.max(1.0));
    }

    #[test]
    fn generation_is_deterministic(n in 1usize..5, seed in any::<u64>()) {
        let cfg = GenConfig::new(15, n).with_angles(20.0, 80.0).with_seed(seed);
        let a = generate_hidden_params(&cfg, &PlacementContext::unit()).unwrap();
        let b = generate_hidden_params(&cfg, &PlacementContext::unit()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn standard_weights_within_bound(n in 1usize..6, s in 0.1f64..5.0, seed in any::<u64>()) {
        let cfg = GenConfig::new(30, n).with_standard_bound(s).with_seed(seed);
        let p = generate_standard_from(&cfg).unwrap();
        prop_assert!(p.weights.as_slice().iter().chain(&p.biases).all(|v| v.abs() <= s));
        prop_assert!(p.anchors.is_none() && p.angles.is_none());
    }
}

#[test]
fn both_orientations_occur() {
    let cfg = GenConfig::new(400, 1).with_angles(30.0, 60.0).with_seed(3);
    let p = generate_hidden_params(&cfg, &PlacementContext::unit()).unwrap();
    let rising = p.weights.as_slice().iter().filter(|&&w| w > 0.0).count();
    assert!(rising > 150 && rising < 250, "{rising} of 400 rising");
}

#[test]
fn anchors_follow_placement() {
    let train = Matrix::from_rows(&[[0.1, 0.2], [0.3, 0.4], [0.9, 0.8]]).unwrap();
    let cfg = GenConfig::new(12, 2).with_placement(Placement::TrainingSample).with_seed(9);
    let ctx = PlacementContext::unit().with_training(train.clone());
    let p = generate_hidden_params(&cfg, &ctx).unwrap();
    for a in p.anchors.as_ref().unwrap().row_iter() {
        assert!(train.row_iter().any(|r| r == a));
    }

    let protos = Matrix::from_fn(4, 2, |i, j| 0.1 * (i + j) as f64);
    let cfg = GenConfig::new(4, 2).with_placement(Placement::ClusterPrototype);
    let ctx = PlacementContext::unit().with_prototypes(protos.clone());
    let p = generate_hidden_params(&cfg, &ctx).unwrap();
    assert_eq!(p.anchors.unwrap(), protos);

    let bounds = vec![(2.0, 3.0), (-1.0, 0.0)];
    let cfg = GenConfig::new(50, 2).with_seed(4);
    let p = generate_hidden_params(&cfg, &PlacementContext::hypercube(bounds.clone())).unwrap();
    for a in p.anchors.as_ref().unwrap().row_iter() {
        assert!(a.iter().zip(&bounds).all(|(v, (lo, hi))| (lo..=hi).contains(&v)));
    }
}

#[test]
fn invalid_configs_rejected() {
    let ctx = PlacementContext::unit();
    for cfg in [
        GenConfig::new(0, 1),
        GenConfig::new(5, 0),
        GenConfig::new(5, 1).with_angles(95.0, 100.0),
        GenConfig::new(5, 1).with_angles(50.0, 40.0),
        GenConfig::new(5, 1).with_angles(-1.0, 40.0),
    ] {
        assert!(generate_hidden_params(&cfg, &ctx).is_err(), "{cfg:?}");
    }
    let cfg = GenConfig::new(5, 1).with_placement(Placement::ClusterPrototype);
    assert!(generate_hidden_params(&cfg, &ctx).is_err());
}
