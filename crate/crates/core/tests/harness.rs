use stegolab::harness::{
    detection_experiment, detection_null, energy_experiment, report_csv, run_benchmark,
    synthetic_corpus, ExperimentConfig,
};
use stegolab::{GrayImage, Method};

#[test]
fn constant_corpus_loses_main_diagonal_mass() {
    let corpus: Vec<GrayImage> = (0..3)
        .map(|i| GrayImage::filled(32, 32, 60 + i * 40).unwrap())
        .collect();
    for m in Method::ALL {
        let e = energy_experiment::<f64>(&corpus, &ExperimentConfig::new(m, 0.4, 4, 1)).unwrap();
        for img in e {
            assert_eq!(img.cover.e[0], 1.0);
            assert!(img.stego.e[0] < 1.0);
        }
    }
}

#[test]
fn experiments_are_deterministic() {
    let corpus = synthetic_corpus(20, 32, 32, 4).unwrap();
    let cfg = ExperimentConfig::new(Method::LsbmImproved, 0.8, 4, 9);
    assert_eq!(
        energy_experiment::<f64>(&corpus, &cfg).unwrap(),
        energy_experiment::<f64>(&corpus, &cfg).unwrap()
    );
    let a = run_benchmark::<f64>(&corpus, &[Method::Lsbm, Method::Lsbmr], &[0.4, 0.8], 4, 9).unwrap();
    let b = run_benchmark::<f64>(&corpus, &[Method::Lsbm, Method::Lsbmr], &[0.4, 0.8], 4, 9).unwrap();
    assert_eq!(a.rows.len(), 4);
    assert_eq!(report_csv(&a), report_csv(&b));
}

#[test]
fn baseline_lowers_mean_main_diagonal() {
    let corpus = synthetic_corpus(20, 64, 64, 12).unwrap();
    let e = energy_experiment::<f64>(&corpus, &ExperimentConfig::new(Method::Lsbm, 0.8, 4, 3)).unwrap();
    let cover: f64 = e.iter().map(|x| x.cover.e[0]).sum();
    let stego: f64 = e.iter().map(|x| x.stego.e[0]).sum();
    assert!(stego < cover);
}

#[test]
fn null_experiment_is_chance() {
    let corpus = synthetic_corpus(40, 32, 32, 6).unwrap();
    let acc: f64 = detection_null(&corpus, 1, 0.5).unwrap();
    assert_eq!(acc, 50.0);
}

#[test]
fn detection_rejects_small_corpora_and_bad_splits() {
    let corpus = synthetic_corpus(19, 16, 16, 1).unwrap();
    let cfg = ExperimentConfig::new(Method::Lsbm, 0.5, 4, 1);
    assert!(detection_experiment::<f64>(&corpus, &cfg, 0.5).is_err());
    let corpus = synthetic_corpus(20, 16, 16, 1).unwrap();
    assert!(detection_experiment::<f64>(&corpus, &cfg, 1.0).is_err());
    let acc = detection_experiment::<f32>(&corpus, &cfg, 0.5).unwrap();
    assert!((0.0..=100.0).contains(&acc));
}

#[test]
fn infeasible_rate_is_reported() {
    // 4x4 image cannot hold even the 32-bit prefix at 0.5 bpp
    let corpus = vec![GrayImage::filled(4, 4, 9).unwrap()];
    let cfg = ExperimentConfig::new(Method::Lsbm, 0.5, 4, 1);
    assert!(matches!(
        energy_experiment::<f64>(&corpus, &cfg),
        Err(stegolab::Error::Capacity { .. })
    ));
}
