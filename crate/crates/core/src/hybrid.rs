//! Two-phase checking: enumerate initial states up front, then run an
//! independent explicit-state check from each one.
//!
//! Tasks are pure (system + one initial state in, outcome out) and share no
//! visited store. A fixed pool of scoped threads pulls task indices from a
//! shared counter; results are merged by task index after the pool drains,
//! so the aggregated verdict does not depend on the worker count.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::thread;

use crate::checker::{check, CheckOutcome, CheckSemantics, Property, TransitionSystem, Verdict, VerdictKind};
use crate::error::CheckError;
use crate::hotel::HotelSystem;
use crate::model::{HotelConfig, HotelState};

/// Wraps a system so that it starts from exactly one state.
pub struct FixedInitial<'a, T: TransitionSystem> {
    inner: &'a T,
    init: T::State,
}

impl<'a, T: TransitionSystem> FixedInitial<'a, T> {
    pub fn new(inner: &'a T, init: T::State) -> Self {
        FixedInitial { inner, init }
    }
}

impl<T: TransitionSystem> TransitionSystem for FixedInitial<'_, T> {
    type State = T::State;
    type Label = T::Label;

    fn initial_states(&self) -> Vec<T::State> {
        vec![self.init.clone()]
    }

    fn successors(&self, state: &T::State) -> Vec<(T::Label, T::State)> {
        self.inner.successors(state)
    }

    fn encode(&self, state: &T::State, out: &mut Vec<u8>) {
        self.inner.encode(state, out);
    }

    fn encode_label(&self, label: &T::Label, out: &mut Vec<u8>) {
        self.inner.encode_label(label, out);
    }

    fn canonicalize(&self, state: &T::State) -> Option<T::State> {
        self.inner.canonicalize(state)
    }

    fn required_next(&self, label: &T::Label) -> Option<T::Label> {
        self.inner.required_next(label)
    }
}

/// Initial states of `ts` sorted by encoding; with `symmetry`, one
/// canonical representative per orbit.
pub fn task_initial_states<T: TransitionSystem>(ts: &T, symmetry: bool) -> Vec<T::State> {
    let mut keyed: Vec<(Vec<u8>, T::State)> = ts
        .initial_states()
        .into_iter()
        .map(|s| {
            let s = if symmetry { ts.canonicalize(&s).unwrap_or(s) } else { s };
            let mut key = Vec::new();
            ts.encode(&s, &mut key);
            (key, s)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, s)| s).collect()
}

/// The static generator stage: every initial state of `c`, optionally
/// reduced to orbit representatives.
pub fn derive_initial_generator(c: &HotelConfig, symmetry: bool) -> Vec<HotelState> {
    task_initial_states(&HotelSystem::new(c.clone()), symmetry)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HybridOptions {
    /// Reduce initial states to orbit representatives.
    pub symmetry: bool,
    pub workers: usize,
    /// Stop handing out tasks once one finds a violation. The reported
    /// counter-example then depends on scheduling.
    pub short_circuit: bool,
}

impl Default for HybridOptions {
    fn default() -> Self {
        HybridOptions {
            symmetry: false,
            workers: 1,
            short_circuit: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TaskSummary {
    pub kind: VerdictKind,
    pub states_explored: usize,
    pub counterexample_len: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaskReport {
    /// Position of the task's initial state in encoding order.
    pub index: usize,
    pub result: Result<TaskSummary, CheckError>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HybridReport<S, L> {
    pub outcome: Result<Verdict<S, L>, CheckError>,
    /// Reports of the tasks that ran, by index.
    pub tasks: Vec<TaskReport>,
    pub task_count: usize,
}

impl<S, L> HybridReport<S, L> {
    /// Tasks whose check ended in a counter-example.
    pub fn violating_tasks(&self) -> usize {
        self.tasks
            .iter()
            .filter(|t| matches!(&t.result, Ok(s) if s.kind == VerdictKind::CounterExample))
            .count()
    }

    pub fn states_explored(&self) -> usize {
        self.tasks
            .iter()
            .map(|t| match &t.result {
                Ok(s) => s.states_explored,
                Err(CheckError::ResourceExhausted { states_explored }) => *states_explored,
                Err(_) => 0,
            })
            .sum()
    }
}

type TaskResult<S, L> = (usize, Result<CheckOutcome<S, L>, CheckError>);

/// Runs one check per initial state of `ts` on `opts.workers` threads.
///
/// The aggregated verdict is Verified iff every task is; otherwise it is the
/// counter-example (or deadlock) of the lowest-indexed failing task.
pub fn hybrid_check<T: TransitionSystem>(
    ts: &T,
    property: &Property<T::State, T::Label>,
    sem: &CheckSemantics,
    opts: &HybridOptions,
) -> Result<HybridReport<T::State, T::Label>, CheckError> {
    if opts.workers == 0 {
        return Err(CheckError::InvalidBound("at least one worker is required"));
    }
    let initial = task_initial_states(ts, opts.symmetry);
    let task_count = initial.len();
    let next = AtomicUsize::new(0);
    let stop = AtomicBool::new(false);

    let worker = || {
        let mut done: Vec<TaskResult<T::State, T::Label>> = Vec::new();
        loop {
            if opts.short_circuit && stop.load(Ordering::Relaxed) {
                break;
            }
            let i = next.fetch_add(1, Ordering::Relaxed);
            let Some(init) = initial.get(i) else { break };
            let task = FixedInitial::new(ts, init.clone());
            let result = check(&task, property, sem);
            if matches!(&result, Ok(o) if o.verdict.kind() == VerdictKind::CounterExample) {
                stop.store(true, Ordering::Relaxed);
            }
            done.push((i, result));
        }
        done
    };

    let mut results: Vec<TaskResult<T::State, T::Label>> = if opts.workers == 1 {
        worker()
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = (0..opts.workers).map(|_| scope.spawn(worker)).collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("worker panicked"))
                .collect()
        })
    };
    results.sort_by_key(|(i, _)| *i);

    let tasks = results
        .iter()
        .map(|(index, r)| TaskReport {
            index: *index,
            result: r.as_ref().map_err(Clone::clone).map(|o| TaskSummary {
                kind: o.verdict.kind(),
                states_explored: o.states_explored,
                counterexample_len: o.verdict.counterexample_len(),
            }),
        })
        .collect();

    let mut total = 0usize;
    let mut diameter = 0usize;
    let mut depth_cut = None;
    let mut failure = None;
    let mut verdict = None;
    for (_, r) in results {
        match r {
            Ok(o) => {
                total += o.states_explored;
                diameter = diameter.max(o.diameter);
                match o.verdict {
                    v @ (Verdict::CounterExample { .. } | Verdict::Deadlock { .. }) => {
                        verdict = Some(v);
                        break;
                    }
                    Verdict::DepthExhausted { max_depth, .. } => depth_cut = Some(max_depth),
                    Verdict::Verified { .. } => {}
                }
            }
            Err(CheckError::ResourceExhausted { states_explored }) => {
                total += states_explored;
                failure.get_or_insert(());
            }
            Err(e) => return Err(e),
        }
    }

    let outcome = match (verdict, failure, depth_cut) {
        (Some(v), _, _) => Ok(v),
        (None, Some(()), _) => Err(CheckError::ResourceExhausted { states_explored: total }),
        (None, None, Some(max_depth)) => Ok(Verdict::DepthExhausted {
            max_depth,
            states_explored: total,
        }),
        (None, None, None) => Ok(Verdict::Verified {
            states_explored: total,
            diameter,
        }),
    };
    Ok(HybridReport {
        outcome,
        tasks,
        task_count,
    })
}
