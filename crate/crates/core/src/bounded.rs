//! Exact-length trace checking.
//!
//! [`bounded_check`] decides whether some trace of exactly `t` states
//! violates a property. Every step of such a trace is a produced step (no
//! implicit stuttering), so a violation on a prefix only counts if the prefix
//! extends to the full length. With look-ahead obligations enabled, a step
//! whose label has a [`TransitionSystem::required_next`] must be followed by
//! that label, unless it is the final step.
//!
//! The search is explicit path enumeration in label order with memoised
//! dead ends, so the first counter-example found is the lexicographically
//! first one (initial states in enumeration order, then labels in step
//! order).

use std::collections::HashSet;

use crate::checker::{
    Property, PropertyKind, StatePredicate, StepPredicate, Trace, TransitionSystem, Verdict, VerdictKind,
};
use crate::error::CheckError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedOutcome<S, L> {
    pub verdict: Verdict<S, L>,
    /// Search nodes `(state, obligation, remaining steps)` expanded.
    pub nodes: usize,
    /// Nodes skipped because they were already known to be dead ends.
    pub pruned: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub t: usize,
    pub kind: VerdictKind,
    pub nodes: usize,
    pub pruned: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport<S, L> {
    pub verdict: Verdict<S, L>,
    pub rows: Vec<SweepRow>,
}

type Path<S, L> = Vec<(L, S)>;

struct PathSearch<'a, T: TransitionSystem> {
    ts: &'a T,
    property: &'a Property<T::State, T::Label>,
    obligations: bool,
    /// Nodes with no violating continuation of the remaining length.
    clean: HashSet<Vec<u8>>,
    /// Nodes with no continuation at all of the remaining length.
    stuck: HashSet<Vec<u8>>,
    nodes: usize,
    pruned: usize,
}

impl<'a, T: TransitionSystem> PathSearch<'a, T> {
    fn key(&self, s: &T::State, pending: Option<&T::Label>, remaining: usize) -> Vec<u8> {
        let mut key = Vec::new();
        self.ts.encode(s, &mut key);
        match pending {
            Some(l) => {
                key.push(1);
                self.ts.encode_label(l, &mut key);
            }
            None => key.push(0),
        }
        key.extend((remaining as u32).to_be_bytes());
        key
    }

    fn steps(&self, s: &T::State, pending: Option<&T::Label>) -> Vec<(T::Label, T::State)> {
        let mut steps = self.ts.successors(s);
        if let Some(required) = pending {
            steps.retain(|(l, _)| l == required);
        }
        steps
    }

    fn obligation(&self, label: &T::Label) -> Option<T::Label> {
        if self.obligations {
            self.ts.required_next(label)
        } else {
            None
        }
    }

    /// First continuation of exactly `remaining` steps, reversed.
    fn extend(
        &mut self,
        s: &T::State,
        pending: Option<&T::Label>,
        remaining: usize,
    ) -> Option<Path<T::State, T::Label>> {
        if remaining == 0 {
            return Some(Vec::new());
        }
        let key = self.key(s, pending, remaining);
        if self.stuck.contains(&key) {
            self.pruned += 1;
            return None;
        }
        self.nodes += 1;
        for (label, next) in self.steps(s, pending) {
            let owed = self.obligation(&label);
            if let Some(mut tail) = self.extend(&next, owed.as_ref(), remaining - 1) {
                tail.push((label, next));
                return Some(tail);
            }
        }
        self.stuck.insert(key);
        None
    }

    /// First continuation of exactly `remaining` steps containing a
    /// violation, reversed.
    fn violate(
        &mut self,
        s: &T::State,
        pending: Option<&T::Label>,
        remaining: usize,
    ) -> Option<Path<T::State, T::Label>> {
        if remaining == 0 {
            return None;
        }
        let key = self.key(s, pending, remaining);
        if self.clean.contains(&key) {
            self.pruned += 1;
            return None;
        }
        self.nodes += 1;
        for (label, next) in self.steps(s, pending) {
            let owed = self.obligation(&label);
            let bad = !self.property.holds_on(s, &label, &next) || !self.property.holds_in(&next);
            let tail = if bad {
                self.extend(&next, owed.as_ref(), remaining - 1)
            } else {
                self.violate(&next, owed.as_ref(), remaining - 1)
            };
            if let Some(mut tail) = tail {
                tail.push((label, next));
                return Some(tail);
            }
        }
        self.clean.insert(key);
        None
    }
}

/// Searches all traces of exactly `trace_len` states.
pub fn bounded_check<T: TransitionSystem>(
    ts: &T,
    property: &Property<T::State, T::Label>,
    trace_len: usize,
    obligations: bool,
) -> Result<BoundedOutcome<T::State, T::Label>, CheckError> {
    if trace_len == 0 {
        return Err(CheckError::InvalidBound("trace length must be at least 1"));
    }
    let mut search = PathSearch {
        ts,
        property,
        obligations,
        clean: HashSet::new(),
        stuck: HashSet::new(),
        nodes: 0,
        pruned: 0,
    };
    let steps = trace_len - 1;
    for init in ts.initial_states() {
        let found = if property.holds_in(&init) {
            search.violate(&init, None, steps)
        } else {
            search.extend(&init, None, steps)
        };
        if let Some(path) = found {
            let mut trace = Trace::new(init);
            for (label, state) in path.into_iter().rev() {
                trace.push(label, state);
            }
            return Ok(BoundedOutcome {
                verdict: Verdict::CounterExample {
                    trace,
                    property: property.name().to_string(),
                },
                nodes: search.nodes,
                pruned: search.pruned,
            });
        }
    }
    Ok(BoundedOutcome {
        verdict: Verdict::Verified {
            states_explored: search.nodes,
            diameter: steps,
        },
        nodes: search.nodes,
        pruned: search.pruned,
    })
}

/// Runs [`bounded_check`] for `t = 1..=t_max`, stopping at the first
/// counter-example.
pub fn bounded_sweep<T: TransitionSystem>(
    ts: &T,
    property: &Property<T::State, T::Label>,
    t_max: usize,
    obligations: bool,
) -> Result<SweepReport<T::State, T::Label>, CheckError> {
    if t_max == 0 {
        return Err(CheckError::InvalidBound("sweep bound must be at least 1"));
    }
    let mut rows = Vec::new();
    let mut total = 0;
    for t in 1..=t_max {
        let out = bounded_check(ts, property, t, obligations)?;
        total += out.nodes;
        rows.push(SweepRow {
            t,
            kind: out.verdict.kind(),
            nodes: out.nodes,
            pruned: out.pruned,
        });
        if out.verdict.kind() == VerdictKind::CounterExample {
            return Ok(SweepReport {
                verdict: out.verdict,
                rows,
            });
        }
    }
    Ok(SweepReport {
        verdict: Verdict::Verified {
            states_explored: total,
            diameter: t_max - 1,
        },
        rows,
    })
}

/// Per-length verdicts over `lengths` without stopping at violations.
/// Exact-length semantics means a violation at one length need not show up
/// at a longer one.
pub fn bounded_scan<T: TransitionSystem>(
    ts: &T,
    property: &Property<T::State, T::Label>,
    lengths: impl IntoIterator<Item = usize>,
    obligations: bool,
) -> Result<Vec<SweepRow>, CheckError> {
    lengths
        .into_iter()
        .map(|t| {
            let out = bounded_check(ts, property, t, obligations)?;
            Ok(SweepRow {
                t,
                kind: out.verdict.kind(),
                nodes: out.nodes,
                pruned: out.pruned,
            })
        })
        .collect()
}

/// A state paired with the label the next step owes, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obliged<S, L> {
    pub state: S,
    pub pending: Option<L>,
}

/// Carries look-ahead obligations in the state so that unbounded searches
/// see the same traces as [`bounded_check`] with obligations enabled.
#[derive(Clone, Debug)]
pub struct ObligationSystem<T> {
    inner: T,
}

impl<T: TransitionSystem> ObligationSystem<T> {
    pub fn new(inner: T) -> Self {
        ObligationSystem { inner }
    }

    pub fn inner(&self) -> &T {
        &self.inner
    }

    /// Evaluates `property` on the underlying states.
    pub fn lift_property(property: &Property<T::State, T::Label>) -> Property<Obliged<T::State, T::Label>, T::Label>
    where
        T::State: 'static,
        T::Label: 'static,
    {
        match property.kind() {
            PropertyKind::State(p) => {
                let p: StatePredicate<T::State> = p.clone();
                Property::state(property.name(), move |s: &Obliged<T::State, T::Label>| p(&s.state))
            }
            PropertyKind::Step(p) => {
                let p: StepPredicate<T::State, T::Label> = p.clone();
                Property::step(
                    property.name(),
                    move |a: &Obliged<T::State, T::Label>, l: &T::Label, b: &Obliged<T::State, T::Label>| {
                        p(&a.state, l, &b.state)
                    },
                )
            }
        }
    }
}

impl<T: TransitionSystem> TransitionSystem for ObligationSystem<T> {
    type State = Obliged<T::State, T::Label>;
    type Label = T::Label;

    fn initial_states(&self) -> Vec<Self::State> {
        self.inner
            .initial_states()
            .into_iter()
            .map(|state| Obliged { state, pending: None })
            .collect()
    }

    fn successors(&self, s: &Self::State) -> Vec<(T::Label, Self::State)> {
        self.inner
            .successors(&s.state)
            .into_iter()
            .filter(|(l, _)| s.pending.as_ref().is_none_or(|p| p == l))
            .map(|(l, state)| {
                let pending = self.inner.required_next(&l);
                (l, Obliged { state, pending })
            })
            .collect()
    }

    fn encode(&self, s: &Self::State, out: &mut Vec<u8>) {
        self.inner.encode(&s.state, out);
        match &s.pending {
            Some(l) => {
                out.push(1);
                self.inner.encode_label(l, out);
            }
            None => out.push(0),
        }
    }

    fn encode_label(&self, label: &T::Label, out: &mut Vec<u8>) {
        self.inner.encode_label(label, out);
    }
}
