//! Model checking the hotel room locking protocol.
//!
//! Two regimes are offered side by side. [`bounded`] searches traces of an
//! exact length, the way a bounded relational analyzer does. [`checker`] runs
//! unbounded explicit-state search with configurable stuttering and deadlock
//! semantics. [`symmetry`] folds states under room/guest relabeling, and
//! [`hybrid`] partitions a check by initial state.

pub mod bounded;
pub mod checker;
mod error;
pub mod hotel;
pub mod hybrid;
pub mod model;
pub mod symmetry;

pub use bounded::{bounded_check, bounded_scan, bounded_sweep, ObligationSystem, Obliged};
pub use checker::{
    bfs_check, check, dfs_check, reachable_stats, CheckOutcome, CheckSemantics, DeadlockPolicy, Property, ReachStats,
    Search, StoreKind, StutterMode, Trace, TransitionSystem, Verdict, VerdictKind, DEFAULT_DFS_DEPTH,
};
pub use error::{CheckError, ModelError};
pub use hotel::{no_bad_entry, HotelSystem, NoIntervening};
pub use hybrid::{derive_initial_generator, hybrid_check, HybridOptions, HybridReport};
pub use model::{ActionLabel, GuestId, HotelConfig, HotelState, IdSet, Key, RoomId};
