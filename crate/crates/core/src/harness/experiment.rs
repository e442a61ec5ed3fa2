use rayon::prelude::*;

use super::{train_fld, ExperimentReport, FeatureVector, Label, ReportRow};
use crate::glcm::{band_features, cooccurrence, diagonal_energies, DiagonalEnergies};
use crate::{embed, BitStream, EmbedConfig, Error, GrayImage, Method, OffsetSet, Real, Result, Rng};

/// Smallest corpus accepted by the detection experiment.
pub const MIN_DETECTION_CORPUS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub method: Method,
    pub rate: f64,
    pub threshold: u32,
    pub seed: u64,
}

impl ExperimentConfig {
    pub fn new(method: Method, rate: f64, threshold: u32, seed: u64) -> Self {
        Self {
            method,
            rate,
            threshold,
            seed,
        }
    }
}

/// Cover and stego energies of one image, averaged over the feature offsets.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ImageEnergies<F> {
    pub cover: DiagonalEnergies<F>,
    pub stego: DiagonalEnergies<F>,
}

/// Embeds a uniformly random message filling the rate budget of image
/// `index`. Message bits depend only on `(seed, index)`, so every method sees
/// the same payload for the same image.
fn embed_corpus_image(image: &GrayImage, index: usize, cfg: &ExperimentConfig) -> Result<GrayImage> {
    let image_seed = Rng::derive_seed(cfg.seed, index as u64);
    let embed_cfg = EmbedConfig::new(cfg.method, Rng::derive_seed(image_seed, 1))
        .with_rate(cfg.rate)
        .with_threshold(cfg.threshold);
    let bits = embed_cfg.payload_bits(image.len())?;
    let mut msg_rng = Rng::new(Rng::derive_seed(image_seed, 0));
    let message: BitStream = (0..bits).map(|_| msg_rng.coin()).collect();
    embed(image, &message, &embed_cfg)
}

fn mean_energies<F: Real>(image: &GrayImage, offsets: &OffsetSet) -> Result<DiagonalEnergies<F>> {
    let per_offset = offsets
        .offsets()
        .iter()
        .map(|&o| diagonal_energies::<F>(&cooccurrence(image, o)))
        .collect::<Result<Vec<_>>>()?;
    Ok(DiagonalEnergies::mean(&per_offset).expect("offset sets are non-empty"))
}

/// Paired cover/stego energies per image, in corpus order.
pub fn energy_experiment<F: Real>(
    corpus: &[GrayImage],
    cfg: &ExperimentConfig,
) -> Result<Vec<ImageEnergies<F>>> {
    if corpus.is_empty() {
        return Err(Error::InvalidArgument("empty corpus".into()));
    }
    let offsets = OffsetSet::feature_default();
    corpus
        .par_iter()
        .enumerate()
        .map(|(i, img)| {
            let stego = embed_corpus_image(img, i, cfg)?;
            Ok(ImageEnergies {
                cover: mean_energies(img, &offsets)?,
                stego: mean_energies(&stego, &offsets)?,
            })
        })
        .collect()
}

fn held_out_accuracy<F: Real>(
    corpus: &[GrayImage],
    split: f64,
    seed: u64,
    stego_of: impl Fn(usize, &GrayImage) -> Result<GrayImage> + Sync,
) -> Result<F> {
    if corpus.len() < MIN_DETECTION_CORPUS {
        return Err(Error::InvalidArgument(format!(
            "detection needs at least {MIN_DETECTION_CORPUS} images, got {}",
            corpus.len()
        )));
    }
    if !(split > 0.0 && split < 1.0) {
        return Err(Error::InvalidArgument(format!("split {split} outside (0, 1)")));
    }
    let offsets = OffsetSet::feature_default();
    let pairs: Vec<(FeatureVector<F>, FeatureVector<F>)> = corpus
        .par_iter()
        .enumerate()
        .map(|(i, img)| {
            let stego = stego_of(i, img)?;
            Ok((
                band_features::<F>(img, &offsets)?.with_label(Label::Cover),
                band_features::<F>(&stego, &offsets)?.with_label(Label::Stego),
            ))
        })
        .collect::<Result<_>>()?;

    // split by image so a cover and its stego never straddle train and test
    let mut order: Vec<usize> = (0..pairs.len()).collect();
    Rng::new(Rng::derive_seed(seed, u64::MAX)).shuffle(&mut order);
    let n_train = ((split * pairs.len() as f64).round() as usize).clamp(1, pairs.len() - 1);
    let flatten = |idx: &[usize]| -> Vec<FeatureVector<F>> {
        idx.iter()
            .flat_map(|&i| [pairs[i].0.clone(), pairs[i].1.clone()])
            .collect()
    };
    let train = flatten(&order[..n_train]);
    let test = flatten(&order[n_train..]);
    let fld = train_fld(&train)?;
    Ok(fld.accuracy(&test) * F::of(100.0))
}

/// Held-out detection accuracy (percent) of a Fisher discriminant on band
/// features, covers against their stego versions. `split` is the training
/// fraction of images; test classes are balanced by construction.
pub fn detection_experiment<F: Real>(
    corpus: &[GrayImage],
    cfg: &ExperimentConfig,
    split: f64,
) -> Result<F> {
    held_out_accuracy(corpus, split, cfg.seed, |i, img| embed_corpus_image(img, i, cfg))
}

/// Calibration run: the "stego" class is the unmodified cover, so no
/// detector can beat chance.
pub fn detection_null<F: Real>(corpus: &[GrayImage], seed: u64, split: f64) -> Result<F> {
    held_out_accuracy(corpus, split, seed, |_, img| Ok(img.clone()))
}

/// One report row per `(method, rate)` in the given order, with detection
/// run on a 50/50 split.
pub fn run_benchmark<F: Real>(
    corpus: &[GrayImage],
    methods: &[Method],
    rates: &[f64],
    threshold: u32,
    seed: u64,
) -> Result<ExperimentReport<F>> {
    let mut rows = Vec::with_capacity(methods.len() * rates.len());
    for &method in methods {
        for &rate in rates {
            let cfg = ExperimentConfig::new(method, rate, threshold, seed);
            let energies = energy_experiment::<F>(corpus, &cfg)?;
            let detect_pct = detection_experiment::<F>(corpus, &cfg, 0.5)?;
            rows.push(ReportRow {
                method,
                rate,
                threshold,
                seed,
                n: corpus.len(),
                cover: DiagonalEnergies::mean(energies.iter().map(|e| &e.cover)).unwrap(),
                stego: DiagonalEnergies::mean(energies.iter().map(|e| &e.stego)).unwrap(),
                detect_pct,
            });
        }
    }
    Ok(ExperimentReport { rows })
}
