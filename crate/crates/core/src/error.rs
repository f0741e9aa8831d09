use thiserror::Error;

use crate::abelian::GroupError;
use crate::algebra::BuildError;
use crate::cartan::DatumError;
use crate::cyclotomic::CycError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Cyclotomic(#[from] CycError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Datum(#[from] DatumError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error("{0}")]
    Verification(String),
    #[error("datum file: {0}")]
    Parse(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
