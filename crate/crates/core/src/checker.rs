//! Explicit-state checking over a pluggable transition system.
//!
//! Breadth-first search (optionally depth-bounded) and depth-bounded
//! depth-first search, both keeping a predecessor record per visited state so
//! that a counter-example is rebuilt by walking parent links.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::CheckError;

/// Depth cut used by depth-first search when none is given.
pub const DEFAULT_DFS_DEPTH: usize = 100;

/// A finite-branching transition system with labelled steps.
///
/// `successors` is the full next-state relation, step filters included.
/// Implementations must be deterministic: the same state always yields the
/// same steps in the same order.
pub trait TransitionSystem: Sync {
    type State: Clone + Eq + Debug + Send + Sync;
    type Label: Clone + Eq + Debug + Send + Sync;

    fn initial_states(&self) -> Vec<Self::State>;

    fn successors(&self, state: &Self::State) -> Vec<(Self::Label, Self::State)>;

    /// Injective byte encoding of a state.
    fn encode(&self, state: &Self::State, out: &mut Vec<u8>);

    /// Injective byte encoding of a label.
    fn encode_label(&self, label: &Self::Label, out: &mut Vec<u8>);

    /// Orbit representative under the system's symmetry group, if it has one.
    fn canonicalize(&self, _state: &Self::State) -> Option<Self::State> {
        None
    }

    /// The label that must immediately follow `label`, if any. Only consulted
    /// by searches that enforce look-ahead obligations.
    fn required_next(&self, _label: &Self::Label) -> Option<Self::Label> {
        None
    }
}

pub type StatePredicate<S> = Arc<dyn Fn(&S) -> bool + Send + Sync>;
pub type StepPredicate<S, L> = Arc<dyn Fn(&S, &L, &S) -> bool + Send + Sync>;

/// A named safety property: either an invariant on states or a box-action
/// formula on steps.
pub struct Property<S, L> {
    name: String,
    kind: PropertyKind<S, L>,
}

pub enum PropertyKind<S, L> {
    State(StatePredicate<S>),
    Step(StepPredicate<S, L>),
}

impl<S, L> Clone for Property<S, L> {
    fn clone(&self) -> Self {
        Property {
            name: self.name.clone(),
            kind: match &self.kind {
                PropertyKind::State(p) => PropertyKind::State(p.clone()),
                PropertyKind::Step(p) => PropertyKind::Step(p.clone()),
            },
        }
    }
}

impl<S, L> Property<S, L> {
    pub fn state(name: impl Into<String>, holds: impl Fn(&S) -> bool + Send + Sync + 'static) -> Self {
        Property {
            name: name.into(),
            kind: PropertyKind::State(Arc::new(holds)),
        }
    }

    pub fn step(name: impl Into<String>, holds: impl Fn(&S, &L, &S) -> bool + Send + Sync + 'static) -> Self {
        Property {
            name: name.into(),
            kind: PropertyKind::Step(Arc::new(holds)),
        }
    }

    /// Holds everywhere; used for plain exploration.
    pub fn trivial() -> Self
    where
        S: 'static,
    {
        Property::state("true", |_| true)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &PropertyKind<S, L> {
        &self.kind
    }

    pub fn holds_in(&self, state: &S) -> bool {
        match &self.kind {
            PropertyKind::State(p) => p(state),
            PropertyKind::Step(_) => true,
        }
    }

    pub fn holds_on(&self, from: &S, label: &L, to: &S) -> bool {
        match &self.kind {
            PropertyKind::State(_) => true,
            PropertyKind::Step(p) => p(from, label, to),
        }
    }
}

impl<S, L> Debug for Property<S, L> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Property").field("name", &self.name).finish()
    }
}

/// How steps that do not change the state are treated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum StutterMode {
    /// Every produced step is a step; properties see self-loops.
    #[default]
    LabelAware,
    /// A step whose successor equals its source is stuttering: it is
    /// neither explored nor checked against step properties.
    Delta,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum DeadlockPolicy {
    #[default]
    Ignore,
    Flag,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Search {
    /// Level-by-level; `max_depth` bounds the number of steps from an
    /// initial state.
    Bfs {
        max_depth: Option<usize>,
    },
    Dfs {
        max_depth: usize,
    },
}

impl Default for Search {
    fn default() -> Self {
        Search::Bfs { max_depth: None }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum StoreKind {
    /// Full state encodings; exact.
    #[default]
    Full,
    /// 64-bit hashes of encodings. Smaller, but a collision silently drops
    /// a state, so verdicts are unsound under collision.
    Fingerprint,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CheckSemantics {
    pub stutter: StutterMode,
    pub deadlock: DeadlockPolicy,
    /// In delta mode, also treat states whose only successors are
    /// themselves as deadlocked.
    pub strict_deadlock: bool,
    pub search: Search,
    /// Fold the visited store through [`TransitionSystem::canonicalize`].
    pub symmetry: bool,
    pub store: StoreKind,
    /// Cap on visited states; exceeding it is a resource error.
    pub max_states: Option<usize>,
}

impl CheckSemantics {
    pub fn bfs() -> Self {
        CheckSemantics::default()
    }

    pub fn bfs_bounded(max_depth: usize) -> Self {
        CheckSemantics {
            search: Search::Bfs {
                max_depth: Some(max_depth),
            },
            ..Default::default()
        }
    }

    pub fn dfs(max_depth: usize) -> Self {
        CheckSemantics {
            search: Search::Dfs { max_depth },
            ..Default::default()
        }
    }

    pub fn with_stutter(mut self, stutter: StutterMode) -> Self {
        self.stutter = stutter;
        self
    }

    pub fn with_deadlock(mut self, policy: DeadlockPolicy, strict: bool) -> Self {
        self.deadlock = policy;
        self.strict_deadlock = strict;
        self
    }

    pub fn with_symmetry(mut self, symmetry: bool) -> Self {
        self.symmetry = symmetry;
        self
    }

    pub fn with_store(mut self, store: StoreKind) -> Self {
        self.store = store;
        self
    }

    pub fn with_max_states(mut self, max: Option<usize>) -> Self {
        self.max_states = max;
        self
    }

    fn is_stutter<S: PartialEq>(&self, from: &S, to: &S) -> bool {
        self.stutter == StutterMode::Delta && from == to
    }

    /// `total` successors were produced, `progressing` of them not stuttering.
    fn is_deadlocked(&self, total: usize, progressing: usize) -> bool {
        if self.stutter == StutterMode::Delta && self.strict_deadlock {
            progressing == 0
        } else {
            total == 0
        }
    }
}

/// Alternating states and labels; `labels.len() == states.len() - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace<S, L> {
    states: Vec<S>,
    labels: Vec<L>,
}

impl<S, L> Trace<S, L> {
    pub fn new(initial: S) -> Self {
        Trace {
            states: vec![initial],
            labels: Vec::new(),
        }
    }

    /// `None` unless `states` is nonempty and one longer than `labels`.
    pub fn from_parts(states: Vec<S>, labels: Vec<L>) -> Option<Self> {
        (!states.is_empty() && states.len() == labels.len() + 1).then_some(Trace { states, labels })
    }

    pub fn push(&mut self, label: L, state: S) {
        self.labels.push(label);
        self.states.push(state);
    }

    pub fn states(&self) -> &[S] {
        &self.states
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    /// Number of states.
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn last_state(&self) -> &S {
        self.states.last().expect("trace is nonempty")
    }

    pub fn steps(&self) -> impl Iterator<Item = (&S, &L, &S)> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (&self.states[i], l, &self.states[i + 1]))
    }

    pub fn map_states<S2>(self, f: impl FnMut(S) -> S2) -> Trace<S2, L> {
        Trace {
            states: self.states.into_iter().map(f).collect(),
            labels: self.labels,
        }
    }

    pub fn into_parts(self) -> (Vec<S>, Vec<L>) {
        (self.states, self.labels)
    }
}

impl<S: Clone + Eq, L: Eq> Trace<S, L> {
    /// The trace starts in an initial state of `ts` and each step is one of
    /// `ts`'s successors.
    pub fn replays<T>(&self, ts: &T) -> bool
    where
        T: TransitionSystem<State = S, Label = L>,
    {
        ts.initial_states().contains(&self.states[0])
            && self
                .steps()
                .all(|(from, label, to)| ts.successors(from).iter().any(|(l, s)| l == label && s == to))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<S, L> {
    Verified { states_explored: usize, diameter: usize },
    CounterExample { trace: Trace<S, L>, property: String },
    DepthExhausted { max_depth: usize, states_explored: usize },
    Deadlock { trace: Trace<S, L> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VerdictKind {
    Verified,
    CounterExample,
    DepthExhausted,
    Deadlock,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::Verified => "verified",
            VerdictKind::CounterExample => "counterexample",
            VerdictKind::DepthExhausted => "depth-exhausted",
            VerdictKind::Deadlock => "deadlock",
        }
    }
}

impl<S, L> Verdict<S, L> {
    pub fn kind(&self) -> VerdictKind {
        match self {
            Verdict::Verified { .. } => VerdictKind::Verified,
            Verdict::CounterExample { .. } => VerdictKind::CounterExample,
            Verdict::DepthExhausted { .. } => VerdictKind::DepthExhausted,
            Verdict::Deadlock { .. } => VerdictKind::Deadlock,
        }
    }

    pub fn trace(&self) -> Option<&Trace<S, L>> {
        match self {
            Verdict::CounterExample { trace, .. } | Verdict::Deadlock { trace } => Some(trace),
            _ => None,
        }
    }

    pub fn counterexample_len(&self) -> Option<usize> {
        match self {
            Verdict::CounterExample { trace, .. } => Some(trace.len()),
            _ => None,
        }
    }

    pub fn map_states<S2>(self, f: impl FnMut(S) -> S2) -> Verdict<S2, L> {
        match self {
            Verdict::Verified {
                states_explored,
                diameter,
            } => Verdict::Verified {
                states_explored,
                diameter,
            },
            Verdict::CounterExample { trace, property } => Verdict::CounterExample {
                trace: trace.map_states(f),
                property,
            },
            Verdict::DepthExhausted {
                max_depth,
                states_explored,
            } => Verdict::DepthExhausted {
                max_depth,
                states_explored,
            },
            Verdict::Deadlock { trace } => Verdict::Deadlock {
                trace: trace.map_states(f),
            },
        }
    }
}

/// A verdict plus exploration statistics, whatever the verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome<S, L> {
    pub verdict: Verdict<S, L>,
    pub states_explored: usize,
    /// Largest step depth at which a state was stored.
    pub diameter: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReachStats {
    pub state_count: usize,
    pub diameter: usize,
    pub deadlock_count: usize,
}

enum VisitedIndex {
    Full(HashMap<Box<[u8]>, u32>),
    Fingerprint(HashMap<u64, u32>),
}

impl VisitedIndex {
    fn new(kind: StoreKind) -> Self {
        match kind {
            StoreKind::Full => VisitedIndex::Full(HashMap::new()),
            StoreKind::Fingerprint => VisitedIndex::Fingerprint(HashMap::new()),
        }
    }

    fn fingerprint(key: &[u8]) -> u64 {
        let mut h = DefaultHasher::new();
        key.hash(&mut h);
        h.finish()
    }

    fn get(&self, key: &[u8]) -> Option<u32> {
        match self {
            VisitedIndex::Full(m) => m.get(key).copied(),
            VisitedIndex::Fingerprint(m) => m.get(&Self::fingerprint(key)).copied(),
        }
    }

    fn insert(&mut self, key: &[u8], value: u32) {
        match self {
            VisitedIndex::Full(m) => {
                m.insert(key.into(), value);
            }
            VisitedIndex::Fingerprint(m) => {
                m.insert(Self::fingerprint(key), value);
            }
        }
    }

    fn len(&self) -> usize {
        match self {
            VisitedIndex::Full(m) => m.len(),
            VisitedIndex::Fingerprint(m) => m.len(),
        }
    }
}

/// Computes visited-store keys, folding through the symmetry canonicalizer
/// when enabled.
struct Keyer<'a, T> {
    ts: &'a T,
    symmetry: bool,
    buf: Vec<u8>,
}

impl<'a, T: TransitionSystem> Keyer<'a, T> {
    fn new(ts: &'a T, symmetry: bool) -> Self {
        Keyer {
            ts,
            symmetry,
            buf: Vec::new(),
        }
    }

    fn key(&mut self, state: &T::State) -> &[u8] {
        self.buf.clear();
        match self.symmetry.then(|| self.ts.canonicalize(state)).flatten() {
            Some(canon) => self.ts.encode(&canon, &mut self.buf),
            None => self.ts.encode(state, &mut self.buf),
        }
        &self.buf
    }
}

struct Record<S, L> {
    state: S,
    parent: Option<(u32, L)>,
    depth: u32,
}

/// Visited store with one predecessor record per state.
struct Store<'a, T: TransitionSystem> {
    keyer: Keyer<'a, T>,
    index: VisitedIndex,
    records: Vec<Record<T::State, T::Label>>,
    max_states: Option<usize>,
}

impl<'a, T: TransitionSystem> Store<'a, T> {
    fn new(ts: &'a T, sem: &CheckSemantics) -> Self {
        Store {
            keyer: Keyer::new(ts, sem.symmetry),
            index: VisitedIndex::new(sem.store),
            records: Vec::new(),
            max_states: sem.max_states,
        }
    }

    /// Index of the new record, or `None` if an equivalent state is stored.
    fn insert(
        &mut self,
        state: T::State,
        parent: Option<(u32, T::Label)>,
        depth: u32,
    ) -> Result<Option<u32>, CheckError> {
        let key = self.keyer.key(&state);
        if self.index.get(key).is_some() {
            return Ok(None);
        }
        if self.max_states.is_some_and(|max| self.records.len() >= max) {
            return Err(CheckError::ResourceExhausted {
                states_explored: self.records.len(),
            });
        }
        let idx = self.records.len() as u32;
        self.index.insert(key, idx);
        self.records.push(Record { state, parent, depth });
        Ok(Some(idx))
    }

    fn trace_to(&self, idx: u32) -> Trace<T::State, T::Label> {
        let mut states = Vec::new();
        let mut labels = Vec::new();
        let mut cur = idx;
        loop {
            let rec = &self.records[cur as usize];
            states.push(rec.state.clone());
            match &rec.parent {
                Some((p, label)) => {
                    labels.push(label.clone());
                    cur = *p;
                }
                None => break,
            }
        }
        states.reverse();
        labels.reverse();
        Trace { states, labels }
    }

    fn len(&self) -> usize {
        self.records.len()
    }
}

fn counterexample<S, L>(trace: Trace<S, L>, property: &Property<S, L>) -> Verdict<S, L> {
    Verdict::CounterExample {
        trace,
        property: property.name().to_string(),
    }
}

/// Breadth-first check. A returned counter-example has the minimum number of
/// states among all counter-examples within the depth bound.
pub fn bfs_check<T: TransitionSystem>(
    ts: &T,
    property: &Property<T::State, T::Label>,
    sem: &CheckSemantics,
) -> Result<CheckOutcome<T::State, T::Label>, CheckError> {
    let Search::Bfs { max_depth } = sem.search else {
        return Err(CheckError::InvalidBound("bfs_check needs a breadth-first search mode"));
    };
    let mut store = Store::new(ts, sem);
    let mut diameter = 0usize;

    let finish = |verdict, store: &Store<'_, T>, diameter| {
        Ok(CheckOutcome {
            verdict,
            states_explored: store.len(),
            diameter,
        })
    };

    for init in ts.initial_states() {
        if let Some(idx) = store.insert(init, None, 0)? {
            if !property.holds_in(&store.records[idx as usize].state) {
                let trace = store.trace_to(idx);
                return finish(counterexample(trace, property), &store, diameter);
            }
        }
    }

    let mut cut = false;
    let mut next = 0usize;
    while next < store.len() {
        let idx = next as u32;
        next += 1;
        let state = store.records[next - 1].state.clone();
        let depth = store.records[next - 1].depth;
        let steps = ts.successors(&state);
        let total = steps.len();

        if max_depth.is_some_and(|limit| depth as usize >= limit) {
            let progressing = steps.iter().filter(|(_, s)| !sem.is_stutter(&state, s)).count();
            if progressing > 0 {
                cut = true;
            }
            if sem.deadlock == DeadlockPolicy::Flag && sem.is_deadlocked(total, progressing) {
                let trace = store.trace_to(idx);
                return finish(Verdict::Deadlock { trace }, &store, diameter);
            }
            continue;
        }

        let mut progressing = 0;
        for (label, succ) in steps {
            if sem.is_stutter(&state, &succ) {
                continue;
            }
            progressing += 1;
            if !property.holds_on(&state, &label, &succ) {
                let mut trace = store.trace_to(idx);
                trace.push(label, succ);
                return finish(counterexample(trace, property), &store, diameter);
            }
            if let Some(new) = store.insert(succ, Some((idx, label)), depth + 1)? {
                diameter = diameter.max(depth as usize + 1);
                if !property.holds_in(&store.records[new as usize].state) {
                    let trace = store.trace_to(new);
                    return finish(counterexample(trace, property), &store, diameter);
                }
            }
        }
        if sem.deadlock == DeadlockPolicy::Flag && sem.is_deadlocked(total, progressing) {
            let trace = store.trace_to(idx);
            return finish(Verdict::Deadlock { trace }, &store, diameter);
        }
    }

    let states_explored = store.len();
    let verdict = match max_depth {
        Some(limit) if cut => Verdict::DepthExhausted {
            max_depth: limit,
            states_explored,
        },
        _ => Verdict::Verified {
            states_explored,
            diameter,
        },
    };
    finish(verdict, &store, diameter)
}

struct Frame<S, L> {
    state: S,
    label_in: Option<L>,
    depth: usize,
    steps: std::vec::IntoIter<(L, S)>,
}

/// Depth-first check cut at `max_depth` steps. Counter-examples are valid
/// but not necessarily minimal. A state is re-expanded when reached again at
/// a smaller depth, so every state within the bound is eventually expanded.
pub fn dfs_check<T: TransitionSystem>(
    ts: &T,
    property: &Property<T::State, T::Label>,
    sem: &CheckSemantics,
) -> Result<CheckOutcome<T::State, T::Label>, CheckError> {
    let Search::Dfs { max_depth } = sem.search else {
        return Err(CheckError::InvalidBound("dfs_check needs a depth-first search mode"));
    };
    if max_depth == 0 {
        return Err(CheckError::InvalidBound("depth-first max depth must be at least 1"));
    }

    let mut keyer = Keyer::new(ts, sem.symmetry);
    // key -> smallest depth at which the state was reached
    let mut visited = VisitedIndex::new(sem.store);
    let mut stack: Vec<Frame<T::State, T::Label>> = Vec::new();
    let mut cut = false;
    let mut diameter = 0usize;

    let path = |stack: &[Frame<T::State, T::Label>]| {
        let mut trace = Trace::new(stack[0].state.clone());
        for f in &stack[1..] {
            trace.push(f.label_in.clone().expect("non-root frame"), f.state.clone());
        }
        trace
    };
    let outcome = |verdict, visited: &VisitedIndex, diameter| {
        Ok(CheckOutcome {
            verdict,
            states_explored: visited.len(),
            diameter,
        })
    };

    // Expands `state`, reporting deadlock; returns its steps.
    let expand = |state: &T::State| {
        let steps = ts.successors(state);
        let progressing = steps.iter().filter(|(_, s)| !sem.is_stutter(state, s)).count();
        let deadlocked = sem.deadlock == DeadlockPolicy::Flag && sem.is_deadlocked(steps.len(), progressing);
        (steps, progressing, deadlocked)
    };

    for init in ts.initial_states() {
        let key = keyer.key(&init);
        if visited.get(key).is_some() {
            continue;
        }
        visited.insert(key, 0);
        if !property.holds_in(&init) {
            return outcome(counterexample(Trace::new(init), property), &visited, diameter);
        }
        let (steps, _, deadlocked) = expand(&init);
        stack.push(Frame {
            state: init,
            label_in: None,
            depth: 0,
            steps: steps.into_iter(),
        });
        if deadlocked {
            return outcome(Verdict::Deadlock { trace: path(&stack) }, &visited, diameter);
        }

        while let Some(top) = stack.last_mut() {
            let Some((label, succ)) = top.steps.next() else {
                stack.pop();
                continue;
            };
            if sem.is_stutter(&top.state, &succ) {
                continue;
            }
            if !property.holds_on(&top.state, &label, &succ) {
                let mut trace = path(&stack);
                trace.push(label, succ);
                return outcome(counterexample(trace, property), &visited, diameter);
            }
            let depth = top.depth + 1;
            let key = keyer.key(&succ);
            if visited.get(key).is_some_and(|d| d as usize <= depth) {
                continue;
            }
            if sem.max_states.is_some_and(|max| visited.len() >= max) && visited.get(key).is_none() {
                return Err(CheckError::ResourceExhausted {
                    states_explored: visited.len(),
                });
            }
            visited.insert(key, depth as u32);
            diameter = diameter.max(depth);

            let (steps, progressing, deadlocked) = expand(&succ);
            stack.push(Frame {
                state: succ,
                label_in: Some(label),
                depth,
                steps: steps.into_iter(),
            });
            if !property.holds_in(&stack.last().expect("just pushed").state) {
                let trace = path(&stack);
                return outcome(counterexample(trace, property), &visited, diameter);
            }
            if deadlocked {
                return outcome(Verdict::Deadlock { trace: path(&stack) }, &visited, diameter);
            }
            if depth >= max_depth {
                if progressing > 0 {
                    cut = true;
                }
                stack.pop();
            }
        }
    }

    let states_explored = visited.len();
    let verdict = if cut {
        Verdict::DepthExhausted {
            max_depth,
            states_explored,
        }
    } else {
        Verdict::Verified {
            states_explored,
            diameter,
        }
    };
    outcome(verdict, &visited, diameter)
}

/// Dispatches on `sem.search`.
pub fn check<T: TransitionSystem>(
    ts: &T,
    property: &Property<T::State, T::Label>,
    sem: &CheckSemantics,
) -> Result<CheckOutcome<T::State, T::Label>, CheckError> {
    match sem.search {
        Search::Bfs { .. } => bfs_check(ts, property, sem),
        Search::Dfs { .. } => dfs_check(ts, property, sem),
    }
}

/// Exhaustive exploration without a property. The search mode of `sem` is
/// ignored; stutter mode, deadlock strictness, symmetry and store apply.
pub fn reachable_stats<T: TransitionSystem>(ts: &T, sem: &CheckSemantics) -> Result<ReachStats, CheckError> {
    let mut store = Store::new(ts, sem);
    for init in ts.initial_states() {
        store.insert(init, None, 0)?;
    }
    let mut diameter = 0usize;
    let mut deadlock_count = 0usize;
    let mut next = 0usize;
    while next < store.len() {
        let state = store.records[next].state.clone();
        let depth = store.records[next].depth;
        next += 1;
        let steps = ts.successors(&state);
        let total = steps.len();
        let mut progressing = 0;
        for (_, succ) in steps {
            if sem.is_stutter(&state, &succ) {
                continue;
            }
            progressing += 1;
            if store.insert(succ, None, depth + 1)?.is_some() {
                diameter = diameter.max(depth as usize + 1);
            }
        }
        if sem.is_deadlocked(total, progressing) {
            deadlock_count += 1;
        }
    }
    Ok(ReachStats {
        state_count: store.len(),
        diameter,
        deadlock_count,
    })
}
