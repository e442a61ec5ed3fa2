//! Seeded synthetic "natural-like" images: Gaussian-blurred noise with a
//! random correlation length, contrast, brightness, illumination ramp and
//! fine sensor noise, so that smoothness varies from image to image.

use crate::{GrayImage, Result, Rng};

fn gaussian_kernel(sigma: f64) -> Vec<f64> {
    let radius = (3.0 * sigma).ceil() as isize;
    let mut k: Vec<f64> = (-radius..=radius)
        .map(|i| (-(i * i) as f64 / (2.0 * sigma * sigma)).exp())
        .collect();
    let s: f64 = k.iter().sum();
    k.iter_mut().for_each(|v| *v /= s);
    k
}

/// Mirror index into `0..n`.
fn reflect(i: isize, n: usize) -> usize {
    let n = n as isize;
    let period = 2 * n;
    let mut m = i.rem_euclid(period);
    if m >= n {
        m = period - 1 - m;
    }
    m as usize
}

fn blur(src: &[f64], w: usize, h: usize, sigma: f64) -> Vec<f64> {
    let k = gaussian_kernel(sigma);
    let r = (k.len() / 2) as isize;
    let mut tmp = vec![0.0; w * h];
    for y in 0..h {
        for x in 0..w {
            tmp[y * w + x] = k
                .iter()
                .enumerate()
                .map(|(t, &kv)| kv * src[y * w + reflect(x as isize + t as isize - r, w)])
                .sum();
        }
    }
    let mut out = vec![0.0; w * h];
    for y in 0..h {
        for x in 0..w {
            out[y * w + x] = k
                .iter()
                .enumerate()
                .map(|(t, &kv)| kv * tmp[reflect(y as isize + t as isize - r, h) * w + x])
                .sum();
        }
    }
    out
}

/// One synthetic image, fully determined by `(width, height, seed)`.
pub fn synthetic_image(width: usize, height: usize, seed: u64) -> Result<GrayImage> {
    let mut rng = Rng::new(seed);
    let n = width * height;
    // correlation length, log-uniform in [2, 12] px; contrast scales with
    // it so that local gradients stay at a few gray levels per pixel
    let sigma = 2.0 * (rng.unit_f64() * 6f64.ln()).exp();
    let contrast = (sigma * (1.5 + 2.5 * rng.unit_f64())).min(60.0);
    let mean = 70.0 + 110.0 * rng.unit_f64();
    let ramp = 40.0 * rng.unit_f64();
    let angle = std::f64::consts::TAU * rng.unit_f64();
    let grain = 1.5 * rng.unit_f64();

    let noise: Vec<f64> = (0..n).map(|_| rng.normal()).collect();
    let mut field = blur(&noise, width, height, sigma);
    let mu = field.iter().sum::<f64>() / n as f64;
    let sd = (field.iter().map(|v| (v - mu).powi(2)).sum::<f64>() / n as f64)
        .sqrt()
        .max(1e-12);
    field.iter_mut().for_each(|v| *v = (*v - mu) / sd);

    let (ca, sa) = (angle.cos(), angle.sin());
    let (cx, cy) = (width as f64 / 2.0, height as f64 / 2.0);
    let span = width.max(height) as f64;
    let mut pixels = Vec::with_capacity(n);
    for y in 0..height {
        for x in 0..width {
            let along = ((x as f64 - cx) * ca + (y as f64 - cy) * sa) / span;
            let v = mean + contrast * field[y * width + x] + ramp * along + grain * rng.normal();
            pixels.push(v.round().clamp(0.0, 255.0) as u8);
        }
    }
    GrayImage::new(width, height, pixels)
}

/// `n` synthetic images; image `i` uses a seed derived from `(seed, i)`.
pub fn synthetic_corpus(n: usize, width: usize, height: usize, seed: u64) -> Result<Vec<GrayImage>> {
    (0..n)
        .map(|i| synthetic_image(width, height, Rng::derive_seed(seed, i as u64)))
        .collect()
}
