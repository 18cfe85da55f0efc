//! Human-readable output.
//!
//! Trace format, version 1:
//!
//! ```text
//! hotelmc-trace v1
//! config: keys=3 rooms=r0,r1,r2 guests=g0,g1,g2 scope=up-to
//! semantics: mode=bfs no-intervening=off stutter=label deadlock=ignore symmetry=off
//! verdict: counterexample
//! stats: states=116587 diameter=4
//! keys: r0 -> {k0, k1, k2}
//!
//! == instant 0 ==
//! current  : r0 -> k0
//! last     : r0 -> k0
//! occupant : -
//! gkeys    : -
//!    Checkin(g0, r0, k1)
//! == instant 1 ==
//! ...
//! ```
//!
//! Each instant lists the binding pairs of the four mutable relations, `-`
//! standing for the empty relation; the action taken is printed between
//! consecutive blocks. Room key pools are static and printed once.

use std::fmt::Write;

use clap::ValueEnum;

use crate::report::{LabelJson, Report, StateJson};

pub const TRACE_FORMAT_VERSION: u32 = 1;

fn relation(pairs: Vec<String>) -> String {
    if pairs.is_empty() {
        "-".into()
    } else {
        pairs.join(", ")
    }
}

fn key_set(keys: &[u8]) -> String {
    let inner: Vec<_> = keys.iter().map(|k| format!("k{k}")).collect();
    format!("{{{}}}", inner.join(", "))
}

fn on_off(b: bool) -> &'static str {
    if b {
        "on"
    } else {
        "off"
    }
}

pub fn label_text(l: &LabelJson) -> String {
    match (&l.room, l.key) {
        (Some(r), Some(k)) => format!("{}({}, {}, k{})", l.action, l.guest, r, k),
        _ => format!("{}({})", l.action, l.guest),
    }
}

fn instant(out: &mut String, i: usize, s: &StateJson) {
    let rooms = |f: &dyn Fn(&crate::report::RoomJson) -> Vec<String>| relation(s.rooms.iter().flat_map(f).collect());
    let _ = writeln!(out, "== instant {i} ==");
    let _ = writeln!(
        out,
        "current  : {}",
        rooms(&|r| vec![format!("{} -> k{}", r.name, r.current)])
    );
    let _ = writeln!(
        out,
        "last     : {}",
        rooms(&|r| vec![format!("{} -> k{}", r.name, r.last)])
    );
    let _ = writeln!(
        out,
        "occupant : {}",
        rooms(&|r| r.occupant.iter().map(|g| format!("{} -> {}", r.name, g)).collect())
    );
    let gkeys: Vec<String> = s
        .guests
        .iter()
        .flat_map(|g| g.gkeys.iter().map(move |k| format!("{} -> k{}", g.name, k)))
        .collect();
    let _ = writeln!(out, "gkeys    : {}", relation(gkeys));
}

pub fn render(report: &Report) -> String {
    let mut out = String::new();
    let c = &report.config;
    let m = &report.semantics;
    let _ = writeln!(out, "hotelmc-trace v{TRACE_FORMAT_VERSION}");
    let _ = writeln!(
        out,
        "config: keys={} rooms={} guests={} scope={}",
        c.keys,
        c.rooms.join(","),
        c.guests.join(","),
        if c.exact_scope { "exact" } else { "up-to" }
    );
    let _ = writeln!(
        out,
        "semantics: mode={} no-intervening={} stutter={} deadlock={} symmetry={}",
        flag(&m.mode),
        flag(&m.no_intervening),
        flag(&m.stutter),
        flag(&m.deadlock),
        on_off(m.symmetry)
    );
    if let Some(d) = m.depth {
        let _ = writeln!(out, "bound: depth={d}");
    }
    if let Some(t) = m.trace_len {
        let _ = writeln!(out, "bound: trace-len={t}");
    }
    let _ = writeln!(out, "verdict: {}", report.verdict);
    let mut stats = format!("stats: states={}", report.stats.states);
    if let Some(d) = report.stats.diameter {
        let _ = write!(stats, " diameter={d}");
    }
    if let Some(t) = report.stats.tasks {
        let _ = write!(stats, " tasks={t}");
    }
    if let Some(v) = report.stats.violating_tasks {
        let _ = write!(stats, " violating-tasks={v}");
    }
    let _ = writeln!(out, "{stats}");
    if let Some(trace) = &report.trace {
        if let Some(first) = trace.states.first() {
            let pools: Vec<_> = first
                .rooms
                .iter()
                .map(|r| format!("{} -> {}", r.name, key_set(&r.keys)))
                .collect();
            let _ = writeln!(out, "keys: {}", relation(pools));
        }
        out.push('\n');
        for (i, s) in trace.states.iter().enumerate() {
            instant(&mut out, i, s);
            if let Some(l) = trace.labels.get(i) {
                let _ = writeln!(out, "   {}", label_text(l));
            }
        }
    }
    out
}

/// Flag spelling of an option value.
fn flag<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value()
        .map(|p| p.get_name().to_string())
        .unwrap_or_default()
}

/// One line per state, for `enumerate --list`.
pub fn state_line(s: &StateJson) -> String {
    let rooms: Vec<_> = s
        .rooms
        .iter()
        .map(|r| {
            let occ = if r.occupant.is_empty() {
                String::new()
            } else {
                format!(" occupant={}", r.occupant.join(","))
            };
            format!(
                "{}[keys={} current=k{} last=k{}{}]",
                r.name,
                key_set(&r.keys),
                r.current,
                r.last,
                occ
            )
        })
        .collect();
    let guests: Vec<_> = s
        .guests
        .iter()
        .map(|g| {
            if g.gkeys.is_empty() {
                g.name.clone()
            } else {
                format!("{}[gkeys={}]", g.name, key_set(&g.gkeys))
            }
        })
        .collect();
    format!("rooms: {} | guests: {}", relation(rooms), relation(guests))
}
