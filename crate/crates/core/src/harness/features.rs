use crate::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Cover,
    Stego,
}

/// Per-image steganalysis features, optionally labeled for training.
#[derive(Clone, Debug, PartialEq)]
pub struct FeatureVector<F> {
    pub values: Vec<F>,
    pub label: Option<Label>,
}

impl<F: Real> FeatureVector<F> {
    pub fn new(values: Vec<F>) -> Self {
        Self {
            values,
            label: None,
        }
    }

    pub fn labeled(values: Vec<F>, label: Label) -> Self {
        Self {
            values,
            label: Some(label),
        }
    }

    pub fn with_label(mut self, label: Label) -> Self {
        self.label = Some(label);
        self
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }
}
