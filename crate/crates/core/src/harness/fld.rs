//! Two-class Fisher linear discriminant.

use super::{FeatureVector, Label};
use crate::{Error, Real, Result};

/// Linear rule `score(x) = w·x + bias`; positive scores are called stego.
#[derive(Clone, Debug, PartialEq)]
pub struct FisherDiscriminant<F> {
    pub weights: Vec<F>,
    pub bias: F,
}

impl<F: Real> FisherDiscriminant<F> {
    pub fn score(&self, x: &[F]) -> F {
        self.weights
            .iter()
            .zip(x)
            .fold(self.bias, |acc, (&w, &v)| acc + w * v)
    }

    pub fn predict(&self, x: &[F]) -> Label {
        if self.score(x) > F::zero() {
            Label::Stego
        } else {
            Label::Cover
        }
    }

    /// Fraction of labeled samples classified correctly.
    pub fn accuracy(&self, samples: &[FeatureVector<F>]) -> F {
        let labeled: Vec<_> = samples.iter().filter(|s| s.label.is_some()).collect();
        if labeled.is_empty() {
            return F::zero();
        }
        let hits = labeled
            .iter()
            .filter(|s| Some(self.predict(&s.values)) == s.label)
            .count();
        F::from_count(hits as u64) / F::from_count(labeled.len() as u64)
    }
}

/// Fits `w ∝ Sw⁻¹ (mean_stego − mean_cover)` with the threshold at the
/// midpoint of the projected class means.
///
/// `Sw` is the pooled within-class covariance. When it is singular (too few
/// samples, constant features) `εI` is added with `ε = 1e-6 · trace / dim`,
/// growing tenfold until the factorization succeeds.
pub fn train_fld<F: Real>(samples: &[FeatureVector<F>]) -> Result<FisherDiscriminant<F>> {
    let dim = samples
        .first()
        .map(FeatureVector::dim)
        .ok_or_else(|| Error::Training("no samples".into()))?;
    if dim == 0 || samples.iter().any(|s| s.dim() != dim) {
        return Err(Error::Training("inconsistent feature dimensionality".into()));
    }
    let mut sums = [vec![F::zero(); dim], vec![F::zero(); dim]];
    let mut counts = [0u64; 2];
    for s in samples {
        let k = class_index(s)?;
        counts[k] += 1;
        for (a, &v) in sums[k].iter_mut().zip(&s.values) {
            *a += v;
        }
    }
    if counts.contains(&0) {
        return Err(Error::Training("both cover and stego samples are required".into()));
    }
    let means: Vec<Vec<F>> = sums
        .iter()
        .zip(counts)
        .map(|(s, n)| s.iter().map(|&v| v / F::from_count(n)).collect())
        .collect();

    let mut scatter = vec![F::zero(); dim * dim];
    for s in samples {
        let m = &means[class_index(s)?];
        let centered: Vec<F> = s.values.iter().zip(m).map(|(&v, &mu)| v - mu).collect();
        for i in 0..dim {
            for j in 0..=i {
                scatter[i * dim + j] += centered[i] * centered[j];
            }
        }
    }
    let dof = F::from_count((samples.len() as u64).saturating_sub(2).max(1));
    for i in 0..dim {
        for j in 0..=i {
            let v = scatter[i * dim + j] / dof;
            scatter[i * dim + j] = v;
            scatter[j * dim + i] = v;
        }
    }

    let diff: Vec<F> = means[1].iter().zip(&means[0]).map(|(&s, &c)| s - c).collect();
    let weights = solve_regularized(&scatter, &diff, dim);
    let mid: F = weights
        .iter()
        .zip(means[0].iter().zip(&means[1]))
        .map(|(&w, (&c, &s))| w * (c + s))
        .sum::<F>()
        / F::of(2.0);
    Ok(FisherDiscriminant { weights, bias: -mid })
}

fn class_index<F>(s: &FeatureVector<F>) -> Result<usize> {
    match s.label {
        Some(Label::Cover) => Ok(0),
        Some(Label::Stego) => Ok(1),
        None => Err(Error::Training("unlabeled sample".into())),
    }
}

fn solve_regularized<F: Real>(a: &[F], b: &[F], dim: usize) -> Vec<F> {
    if let Some(l) = cholesky(a, dim) {
        return cholesky_solve(&l, b, dim);
    }
    let trace: F = (0..dim).map(|i| a[i * dim + i]).sum();
    let mut eps = F::of(1e-6) * trace / F::from_count(dim as u64);
    if eps <= F::zero() {
        eps = F::epsilon();
    }
    loop {
        let mut reg = a.to_vec();
        for i in 0..dim {
            reg[i * dim + i] += eps;
        }
        if let Some(l) = cholesky(&reg, dim) {
            return cholesky_solve(&l, b, dim);
        }
        eps *= F::of(10.0);
    }
}

/// Lower-triangular factor, or `None` when `a` is not numerically positive
/// definite.
fn cholesky<F: Real>(a: &[F], dim: usize) -> Option<Vec<F>> {
    let max_diag = (0..dim)
        .map(|i| a[i * dim + i])
        .fold(F::zero(), |m, v| m.max(v));
    if max_diag <= F::zero() {
        return None;
    }
    let tol = max_diag * F::epsilon() * F::from_count(dim as u64) * F::of(16.0);
    let mut l = vec![F::zero(); dim * dim];
    for i in 0..dim {
        for j in 0..=i {
            let mut s = a[i * dim + j];
            for k in 0..j {
                s -= l[i * dim + k] * l[j * dim + k];
            }
            if i == j {
                if s <= tol {
                    return None;
                }
                l[i * dim + i] = s.sqrt();
            } else {
                l[i * dim + j] = s / l[j * dim + j];
            }
        }
    }
    Some(l)
}

fn cholesky_solve<F: Real>(l: &[F], b: &[F], dim: usize) -> Vec<F> {
    let mut y = vec![F::zero(); dim];
    for i in 0..dim {
        let mut s = b[i];
        for k in 0..i {
            s -= l[i * dim + k] * y[k];
        }
        y[i] = s / l[i * dim + i];
    }
    let mut x = vec![F::zero(); dim];
    for i in (0..dim).rev() {
        let mut s = y[i];
        for k in i + 1..dim {
            s -= l[k * dim + i] * x[k];
        }
        x[i] = s / l[i * dim + i];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rng;

    fn fv<F: Real>(v: &[f64], label: Label) -> FeatureVector<F> {
        FeatureVector::labeled(v.iter().map(|&x| F::of(x)).collect(), label)
    }

    #[test]
    fn separable_one_dimensional() {
        let data: Vec<FeatureVector<f64>> = vec![
            fv(&[0.1], Label::Cover),
            fv(&[0.2], Label::Cover),
            fv(&[0.8], Label::Stego),
            fv(&[0.9], Label::Stego),
        ];
        let d = train_fld(&data).unwrap();
        assert_eq!(d.accuracy(&data), 1.0);
        // threshold sits at the midpoint 0.5
        assert!(d.score(&[0.49]) < 0.0 && d.score(&[0.51]) > 0.0);
    }

    #[test]
    fn separable_two_dimensional_f32() {
        // classes split by x + y = 1, with an elongated within-class spread
        let mut rng = Rng::new(8);
        let mut data: Vec<FeatureVector<f32>> = Vec::new();
        for _ in 0..200 {
            let t = rng.unit_f64() * 2.0 - 1.0;
            let off = 0.1 + 0.05 * rng.unit_f64();
            data.push(fv(&[0.5 + t - off, 0.5 - t - off], Label::Cover));
            data.push(fv(&[0.5 + t + off, 0.5 - t + off], Label::Stego));
        }
        let d = train_fld(&data).unwrap();
        assert_eq!(d.accuracy(&data), 1.0);
    }

    #[test]
    fn identical_distributions_are_chance() {
        let mut rng = Rng::new(21);
        let mut draw = |label| fv::<f64>(&[rng.normal(), rng.normal(), rng.normal()], label);
        let train: Vec<_> = (0..200)
            .flat_map(|_| [draw(Label::Cover), draw(Label::Stego)])
            .collect();
        let test: Vec<_> = (0..2000)
            .flat_map(|_| [draw(Label::Cover), draw(Label::Stego)])
            .collect();
        let acc = train_fld(&train).unwrap().accuracy(&test);
        assert!((acc - 0.5).abs() < 0.05, "{acc}");
    }

    #[test]
    fn singular_scatter_is_regularized() {
        // second feature is constant, third duplicates the first
        let data: Vec<FeatureVector<f64>> = vec![
            fv(&[0.1, 1.0, 0.1], Label::Cover),
            fv(&[0.2, 1.0, 0.2], Label::Cover),
            fv(&[0.7, 1.0, 0.7], Label::Stego),
            fv(&[0.8, 1.0, 0.8], Label::Stego),
        ];
        let d = train_fld(&data).unwrap();
        assert!(d.weights.iter().all(|w| w.is_finite()));
        assert_eq!(d.accuracy(&data), 1.0);

        // every feature constant: zero scatter
        let flat = vec![fv::<f64>(&[1.0], Label::Cover), fv(&[1.0], Label::Stego)];
        let d = train_fld(&flat).unwrap();
        assert!(d.bias.is_finite());
    }

    #[test]
    fn training_errors() {
        let one_class = vec![fv::<f64>(&[0.1], Label::Cover), fv(&[0.2], Label::Cover)];
        assert!(matches!(train_fld(&one_class), Err(Error::Training(_))));
        assert!(train_fld::<f64>(&[]).is_err());
        let ragged = vec![fv::<f64>(&[0.1], Label::Cover), fv(&[0.2, 0.3], Label::Stego)];
        assert!(train_fld(&ragged).is_err());
        let unlabeled = vec![fv::<f64>(&[0.1], Label::Cover), FeatureVector::new(vec![0.3])];
        assert!(train_fld(&unlabeled).is_err());
    }
}
