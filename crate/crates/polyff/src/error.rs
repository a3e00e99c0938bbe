use polyff_core::catalog::CatalogError;
use polyff_core::group::GroupError;
use polyff_core::mat3::MatError;
use polyff_core::regmap::MapError;
use polyff_core::RingError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    BadArgs(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Matrix(#[from] MatError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("relation check failed for {0} parameter pairs")]
    RelationFailures(usize),
    #[error("{0} scan rows hit the closure cap")]
    ScanCapRows(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 0 success, 2 bad arguments, 3 bad prime or missing extension,
    /// 4 closure cap, 5 invariant or relation failure, 1 anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::BadArgs(_) | CliError::Ring(_) => 2,
            CliError::Catalog(e) => match e {
                CatalogError::BadPrime { .. }
                | CatalogError::ExtensionDisabled { .. }
                | CatalogError::ExtensionUnsupported(_) => 3,
                CatalogError::Ring(_) | CatalogError::UnknownName(_) | CatalogError::Reduce(_) => 2,
            },
            CliError::Group(GroupError::CapExceeded { .. }) | CliError::ScanCapRows(_) => 4,
            CliError::Group(_) | CliError::Matrix(_) => 2,
            CliError::Map(MapError::InvariantViolation(_))
            | CliError::Invariant(_)
            | CliError::RelationFailures(_) => 5,
            CliError::Map(_) => 2,
            CliError::Io(_) | CliError::Json(_) | CliError::Csv(_) => 1,
        }
    }
}
