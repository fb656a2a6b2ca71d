use automata_core::{StateSet, Word};

/// Outcome of a synchronization question.
///
/// When `synchronizing` holds, `witness` maps the queried set to the
/// singleton `{target}`; otherwise both are absent. `explored` counts the
/// distinct search nodes the engine visited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyncResult {
    pub synchronizing: bool,
    pub witness: Option<Word>,
    pub target: Option<usize>,
    pub explored: usize,
}

impl SyncResult {
    pub(crate) fn negative(explored: usize) -> Self {
        SyncResult {
            synchronizing: false,
            witness: None,
            target: None,
            explored,
        }
    }

    pub(crate) fn positive(witness: Word, target: usize, explored: usize) -> Self {
        SyncResult {
            synchronizing: true,
            witness: Some(witness),
            target: Some(target),
            explored,
        }
    }
}

/// Minimum achievable image size together with a word realizing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankResult {
    pub rank: usize,
    pub witness: Word,
    pub final_image: StateSet,
    pub explored: usize,
}

/// A synchronizing set of states found by the maximum-set engines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxSyncSetResult {
    pub set: StateSet,
    pub witness: Word,
    pub target: usize,
}

/// Whether some word maps the full state set exactly onto the target set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachResult {
    pub reachable: bool,
    pub witness: Option<Word>,
    pub explored: usize,
}

/// A shortest word accepted by every acceptor, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionResult {
    pub nonempty: bool,
    pub witness: Option<Word>,
    pub explored: usize,
}
