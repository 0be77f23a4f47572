use thiserror::Error;

/// Errors produced by the scinet library.
///
/// The CLI maps these onto process exit codes: config/usage problems exit
/// with 1, data problems with 2, numerical failures with 3.
#[derive(Debug, Error)]
pub enum Error {
    /// Tensor or parameter shapes do not line up. The message names the
    /// offending dimensions.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A model, training, or run configuration is internally inconsistent.
    #[error("invalid config: {0}")]
    Config(String),

    /// Dataset, manifest, or raster file problem.
    #[error("data error: {0}")]
    Data(String),

    /// Checkpoint file is corrupt, truncated, or does not match the config.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    /// Training produced a non-finite loss. Carries the diagnostic context
    /// that `fit` dumps before aborting.
    #[error("non-finite loss at step {step} (epoch {epoch}, lr {lr:e}): {detail}")]
    NonFinite {
        step: usize,
        epoch: usize,
        lr: f64,
        detail: String,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("image error: {0}")]
    Image(#[from] image::ImageError),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn data(msg: impl Into<String>) -> Self {
        Error::Data(msg.into())
    }
}
