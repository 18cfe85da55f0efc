use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("key count {0} exceeds the supported maximum of 32")]
    TooManyKeys(usize),
    #[error("room universe of size {0} exceeds the supported maximum of 8")]
    TooManyRooms(usize),
    #[error("guest universe of size {0} exceeds the supported maximum of 8")]
    TooManyGuests(usize),
    #[error("duplicate identifier `{0}`")]
    DuplicateName(String),
    #[error("identifiers must be nonempty")]
    EmptyName,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    /// The visited store hit its configured capacity.
    #[error("state limit reached after exploring {states_explored} states")]
    ResourceExhausted { states_explored: usize },
    #[error("invalid search bound: {0}")]
    InvalidBound(&'static str),
}
