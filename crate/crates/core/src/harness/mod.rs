//! Corpus-scale evaluation: paired cover/stego diagonal energies, a Fisher
//! linear discriminant detector, and CSV/SVG reporting.

mod corpus;
mod experiment;
mod features;
mod fld;
mod report;

pub use corpus::{synthetic_corpus, synthetic_image};
pub use experiment::{
    detection_experiment, detection_null, energy_experiment, run_benchmark, ExperimentConfig,
    ImageEnergies, MIN_DETECTION_CORPUS,
};
pub use features::{FeatureVector, Label};
pub use fld::{train_fld, FisherDiscriminant};
pub use report::{report_csv, report_svg, ExperimentReport, ReportRow, REPORT_HEADER};
