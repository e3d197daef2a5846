use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown wavelet family '{0}' (expected haar, db8, sym16 or coif1)")]
    UnknownWaveletFamily(String),

    #[error("empty signal")]
    EmptySignal,

    #[error("band length mismatch: approx has {approx} samples, detail has {detail}")]
    BandLengthMismatch { approx: usize, detail: usize },

    #[error("band shape mismatch for {band}: expected {expected:?}, got {got:?}")]
    BandShapeMismatch {
        band: &'static str,
        expected: Vec<usize>,
        got: Vec<usize>,
    },

    #[error("{levels} decomposition levels exceed log2 of the minimum extent {min_extent}")]
    TooManyLevels { levels: usize, min_extent: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("PLY is missing property '{name}'; present properties: {present:?}")]
    PlyMissingProperty { name: String, present: Vec<String> },

    #[error("malformed PLY header at byte {offset}: {reason}")]
    PlyMalformedHeader { offset: usize, reason: String },

    #[error("malformed PLY body: {0}")]
    PlyMalformedBody(String),

    #[error("voxel grid would hold {voxels} voxels, above the {limit} limit")]
    GridTooLarge { voxels: u64, limit: u64 },

    #[error("point cloud occupies a single voxel; nothing to decompose")]
    SingleVoxelCloud,

    #[error("MLP input width {got} does not match first layer width {expected}")]
    WidthMismatch { expected: usize, got: usize },

    #[error("backward requires a scalar loss, got a tensor of {0} elements")]
    NonScalarLoss(usize),

    #[error("non-finite gradient for parameter '{0}'")]
    NonFiniteGradient(String),

    #[error("non-finite values in {0}")]
    NonFinite(String),

    #[error("image shape mismatch: {a:?} vs {b:?}")]
    ImageShapeMismatch { a: Vec<usize>, b: Vec<usize> },

    #[error("direction is not unit length (|v| = {0})")]
    NonUnitDirection(f64),

    #[error("render output has no contributor lists; rasterize with retain_contributors")]
    MissingContributors,

    #[error("camera {view} is {cam_w}x{cam_h} but its image is {img_w}x{img_h}")]
    CameraImageMismatch {
        view: usize,
        cam_w: usize,
        cam_h: usize,
        img_w: usize,
        img_h: usize,
    },

    #[error("unknown ablation variant '{0}'")]
    UnknownVariant(String),

    #[error("training aborted at iteration {iteration}: non-finite loss ({breakdown})")]
    NanLoss { iteration: usize, breakdown: String },

    #[error("config error: {0}")]
    Config(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("image codec error: {0}")]
    ImageCodec(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code the CLI maps this error to: 2 for usage/config
    /// problems, 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NanLoss { .. } | Error::NonFinite(_) | Error::NonFiniteGradient(_) => 3,
            _ => 2,
        }
    }
}
