//! JSON result documents.
//!
//! A [`Report`] is the machine-readable outcome of one `check` run:
//!
//! ```text
//! { config, semantics, verdict, stats { states, diameter, tasks? }, trace? { states[], labels[] } }
//! ```
//!
//! Reports are plain data: everything refers to rooms and guests by name,
//! so a report can be parsed, validated against the model and rendered
//! again without the run that produced it. Rendering is deterministic, so
//! `render(parse(render(r))) == render(r)` byte for byte.

use hotelmc_core::model::{apply, is_initial, no_bad_entry_step, no_intervening_tla_ok, type_inv};
use hotelmc_core::{ActionLabel, GuestId, HotelConfig, HotelState, IdSet, Key, RoomId, Trace, VerdictKind};
use serde::{Deserialize, Serialize};

use crate::args::{DeadlockArg, Mode, NoInterveningArg, StutterArg};
use crate::error::ReportError;

/// Verdict string for runs that hit `--max-states`.
pub const RESOURCE_EXHAUSTED: &str = "resource-exhausted";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigJson {
    pub keys: usize,
    pub rooms: Vec<String>,
    pub guests: Vec<String>,
    pub exact_scope: bool,
}

impl ConfigJson {
    pub fn from_config(c: &HotelConfig) -> Self {
        ConfigJson {
            keys: c.key_count(),
            rooms: c.room_names().to_vec(),
            guests: c.guest_names().to_vec(),
            exact_scope: c.exact_scope(),
        }
    }

    pub fn to_config(&self) -> Result<HotelConfig, ReportError> {
        Ok(
            HotelConfig::with_names(self.keys, self.rooms.clone(), self.guests.clone())?
                .with_exact_scope(self.exact_scope),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemanticsJson {
    pub mode: Mode,
    pub no_intervening: NoInterveningArg,
    pub stutter: StutterArg,
    pub deadlock: DeadlockArg,
    pub strict_deadlock: bool,
    pub symmetry: bool,
    pub depth: Option<usize>,
    pub trace_len: Option<usize>,
    pub workers: usize,
    pub max_states: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StatsJson {
    pub states: usize,
    pub diameter: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tasks: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violating_tasks: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RoomJson {
    pub name: String,
    pub keys: Vec<Key>,
    pub current: Key,
    pub last: Key,
    pub occupant: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GuestJson {
    pub name: String,
    pub gkeys: Vec<Key>,
}

/// One instant: the rooms and guests present, with their bindings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateJson {
    pub rooms: Vec<RoomJson>,
    pub guests: Vec<GuestJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelJson {
    pub action: String,
    pub guest: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub room: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub key: Option<Key>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceJson {
    pub states: Vec<StateJson>,
    pub labels: Vec<LabelJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub config: ConfigJson,
    pub semantics: SemanticsJson,
    /// A `VerdictKind` string or `resource-exhausted`.
    pub verdict: String,
    pub stats: StatsJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceJson>,
}

fn names(set: IdSet, all: &[String]) -> Vec<String> {
    set.iter().map(|i| all[i as usize].clone()).collect()
}

pub fn state_to_json(s: &HotelState, c: &HotelConfig) -> StateJson {
    StateJson {
        rooms: s
            .rooms
            .iter()
            .map(|r| {
                let ri = r as usize;
                RoomJson {
                    name: c.room_name(RoomId(r)).to_string(),
                    keys: s.keys[ri].iter().collect(),
                    current: s.current[ri],
                    last: s.last[ri],
                    occupant: names(s.occupant[ri], c.guest_names()),
                }
            })
            .collect(),
        guests: s
            .guests
            .iter()
            .map(|g| GuestJson {
                name: c.guest_name(GuestId(g)).to_string(),
                gkeys: s.gkeys[g as usize].iter().collect(),
            })
            .collect(),
    }
}

fn room_id(c: &HotelConfig, name: &str) -> Result<RoomId, ReportError> {
    c.room_by_name(name)
        .ok_or_else(|| ReportError::UnknownRoom(name.into()))
}

fn guest_id(c: &HotelConfig, name: &str) -> Result<GuestId, ReportError> {
    c.guest_by_name(name)
        .ok_or_else(|| ReportError::UnknownGuest(name.into()))
}

fn key_set(keys: &[Key], c: &HotelConfig) -> Result<IdSet, ReportError> {
    let mut set = IdSet::EMPTY;
    for &k in keys {
        if k as usize >= c.key_count() {
            return Err(ReportError::KeyOutOfRange(k));
        }
        set.insert(k);
    }
    Ok(set)
}

pub fn state_from_json(j: &StateJson, c: &HotelConfig) -> Result<HotelState, ReportError> {
    let mut s = HotelState::empty();
    for room in &j.rooms {
        let r = room_id(c, &room.name)?;
        if s.rooms.contains(r.0) {
            return Err(ReportError::Duplicate(room.name.clone()));
        }
        s.rooms.insert(r.0);
        let ri = r.0 as usize;
        s.keys[ri] = key_set(&room.keys, c)?;
        key_set(&[room.current, room.last], c)?;
        s.current[ri] = room.current;
        s.last[ri] = room.last;
        for g in &room.occupant {
            s.occupant[ri].insert(guest_id(c, g)?.0);
        }
    }
    for guest in &j.guests {
        let g = guest_id(c, &guest.name)?;
        if s.guests.contains(g.0) {
            return Err(ReportError::Duplicate(guest.name.clone()));
        }
        s.guests.insert(g.0);
        s.gkeys[g.0 as usize] = key_set(&guest.gkeys, c)?;
    }
    Ok(s)
}

pub fn label_to_json(l: &ActionLabel, c: &HotelConfig) -> LabelJson {
    let (room, key) = match *l {
        ActionLabel::Entry { room, key, .. } | ActionLabel::Checkin { room, key, .. } => {
            (Some(c.room_name(room).to_string()), Some(key))
        }
        ActionLabel::Checkout { .. } => (None, None),
    };
    LabelJson {
        action: l.kind_name().to_string(),
        guest: c.guest_name(l.guest()).to_string(),
        room,
        key,
    }
}

pub fn label_from_json(j: &LabelJson, c: &HotelConfig) -> Result<ActionLabel, ReportError> {
    let guest = guest_id(c, &j.guest)?;
    let bad = || ReportError::BadParameters(j.action.clone());
    match j.action.as_str() {
        "Entry" | "Checkin" => {
            let room = room_id(c, j.room.as_deref().ok_or_else(bad)?)?;
            let key = j.key.ok_or_else(bad)?;
            key_set(&[key], c)?;
            Ok(if j.action == "Entry" {
                ActionLabel::Entry { guest, room, key }
            } else {
                ActionLabel::Checkin { guest, room, key }
            })
        }
        "Checkout" if j.room.is_none() && j.key.is_none() => Ok(ActionLabel::Checkout { guest }),
        "Checkout" => Err(bad()),
        other => Err(ReportError::UnknownAction(other.into())),
    }
}

pub fn trace_to_json(t: &Trace<HotelState, ActionLabel>, c: &HotelConfig) -> TraceJson {
    TraceJson {
        states: t.states().iter().map(|s| state_to_json(s, c)).collect(),
        labels: t.labels().iter().map(|l| label_to_json(l, c)).collect(),
    }
}

pub fn verdict_kind(s: &str) -> Option<VerdictKind> {
    [
        VerdictKind::Verified,
        VerdictKind::CounterExample,
        VerdictKind::DepthExhausted,
        VerdictKind::Deadlock,
    ]
    .into_iter()
    .find(|k| k.as_str() == s)
}

impl Report {
    /// Rebuilds the model trace and checks it: shape, type invariant, an
    /// initial first state, every step a transition (respecting the step
    /// filter if it was on), and a violating last step for counter-examples.
    pub fn validate(&self) -> Result<Option<Trace<HotelState, ActionLabel>>, ReportError> {
        let c = self.config.to_config()?;
        let kind = match verdict_kind(&self.verdict) {
            Some(k) => Some(k),
            None if self.verdict == RESOURCE_EXHAUSTED => None,
            None => return Err(ReportError::UnknownVerdict(self.verdict.clone())),
        };
        let needs_trace = matches!(kind, Some(VerdictKind::CounterExample | VerdictKind::Deadlock));
        let Some(tj) = &self.trace else {
            return if needs_trace {
                Err(ReportError::MissingTrace(self.verdict.clone()))
            } else {
                Ok(None)
            };
        };
        let states = tj
            .states
            .iter()
            .map(|s| state_from_json(s, &c))
            .collect::<Result<Vec<_>, _>>()?;
        let labels = tj
            .labels
            .iter()
            .map(|l| label_from_json(l, &c))
            .collect::<Result<Vec<_>, _>>()?;
        let shape = ReportError::Shape {
            states: states.len(),
            labels: labels.len(),
        };
        let trace = Trace::from_parts(states, labels).ok_or(shape)?;
        for (i, s) in trace.states().iter().enumerate() {
            if !type_inv(s, &c) {
                return Err(ReportError::TypeInv(i));
            }
        }
        if !is_initial(&trace.states()[0], &c) {
            return Err(ReportError::NotInitial);
        }
        let tla = self.semantics.no_intervening == NoInterveningArg::Tla;
        for (i, (from, label, to)) in trace.steps().enumerate() {
            let ok = apply(from, label).as_ref() == Some(to) && (!tla || no_intervening_tla_ok(from, label));
            if !ok {
                return Err(ReportError::BadStep(i));
            }
        }
        if kind == Some(VerdictKind::CounterExample) {
            let violates = trace
                .steps()
                .last()
                .is_some_and(|(from, label, to)| !no_bad_entry_step(from, label, to));
            if !violates {
                return Err(ReportError::NoViolation);
            }
        }
        Ok(Some(trace))
    }
}

/// Pretty JSON with a trailing newline.
pub fn render(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports always serialize");
    s.push('\n');
    s
}

/// Parses and validates `input`, then requires that rendering the result
/// reproduces `input` exactly.
pub fn round_trip(input: &str) -> Result<Report, crate::error::CliError> {
    let report: Report = serde_json::from_str(input)?;
    report.validate()?;
    if render(&report) != input {
        return Err(ReportError::NotCanonical.into());
    }
    Ok(report)
}
