mod common;

use common::{intervening_prefix, oracle_reachable, small_configs};
use hotelmc_core::model::{enumerate_initial_states, no_intervening_tla_ok};
use hotelmc_core::symmetry::{count_canonical_initial_states, Canonicalizer};
use hotelmc_core::*;

fn hotel(c: &HotelConfig, tla: bool) -> HotelSystem {
    HotelSystem::new(c.clone()).with_tla_no_intervening(tla)
}

const N3_REACHABLE: usize = 2792;
const N3_REACHABLE_TLA: usize = 2180;

#[test]
fn reachable_counts_match_independent_enumeration() {
    for c in small_configs() {
        for tla in [false, true] {
            let oracle = oracle_reachable(&c, |s, l| !tla || no_intervening_tla_ok(s, l));
            let stats = reachable_stats(&hotel(&c, tla), &CheckSemantics::bfs()).unwrap();
            assert_eq!(stats.state_count, oracle.len(), "{c:?} tla={tla}");
            // a property that always holds explores everything
            let out = bfs_check(&hotel(&c, tla), &Property::trivial(), &CheckSemantics::bfs()).unwrap();
            assert_eq!(out.states_explored, oracle.len());
        }
    }
    let c = HotelConfig::uniform(3).unwrap();
    assert_eq!(oracle_reachable(&c, |_, _| true).len(), N3_REACHABLE);
    assert_eq!(oracle_reachable(&c, no_intervening_tla_ok).len(), N3_REACHABLE_TLA);
}

#[test]
fn reachable_stats_examples() {
    let one = reachable_stats(&hotel(&HotelConfig::uniform(1).unwrap(), false), &CheckSemantics::bfs()).unwrap();
    assert_eq!(one.state_count, 4);
    assert_eq!(one.diameter, 0);
    let empty = reachable_stats(
        &hotel(&HotelConfig::new(0, 0, 0).unwrap(), false),
        &CheckSemantics::bfs(),
    )
    .unwrap();
    assert_eq!(
        empty,
        ReachStats {
            state_count: 1,
            diameter: 0,
            deadlock_count: 1
        }
    );
    let n3 = reachable_stats(&hotel(&HotelConfig::uniform(3).unwrap(), false), &CheckSemantics::bfs()).unwrap();
    assert_eq!(n3.state_count, N3_REACHABLE);
    let dfs = reachable_stats(
        &hotel(&HotelConfig::uniform(3).unwrap(), false),
        &CheckSemantics::dfs(3),
    )
    .unwrap();
    assert_eq!(n3, dfs, "search mode does not affect exhaustive stats");
}

#[test]
fn fingerprint_store_agrees_at_small_scale() {
    let sys = hotel(&HotelConfig::uniform(3).unwrap(), false);
    let full = reachable_stats(&sys, &CheckSemantics::bfs()).unwrap();
    let fp = reachable_stats(&sys, &CheckSemantics::bfs().with_store(StoreKind::Fingerprint)).unwrap();
    assert_eq!(full, fp);
}

#[test]
fn empty_universe_verifies_trivially() {
    let sys = hotel(&HotelConfig::new(0, 0, 0).unwrap(), false);
    let out = bfs_check(&sys, &no_bad_entry(), &CheckSemantics::bfs()).unwrap();
    assert_eq!(
        out.verdict,
        Verdict::Verified {
            states_explored: 1,
            diameter: 0
        }
    );
    let out = dfs_check(&sys, &no_bad_entry(), &CheckSemantics::dfs(DEFAULT_DFS_DEPTH)).unwrap();
    assert_eq!(out.verdict.kind(), VerdictKind::Verified);
}

#[test]
fn dfs_examples_n3() {
    let sys = hotel(&HotelConfig::uniform(3).unwrap(), false);
    let out = dfs_check(&sys, &no_bad_entry(), &CheckSemantics::dfs(100)).unwrap();
    let trace = out.verdict.trace().expect("counter-example");
    assert!(trace.len() >= 5);
    assert!(trace.replays(&sys));
    let (from, label, to) = trace.steps().last().unwrap();
    assert!(!model::no_bad_entry_step(from, label, to));

    let out = dfs_check(&sys, &no_bad_entry(), &CheckSemantics::dfs(1)).unwrap();
    assert_eq!(out.verdict.kind(), VerdictKind::DepthExhausted);
}

/// bfs and dfs agree on Verified vs CounterExample for every small config,
/// in both stutter modes and both filter settings; every trace replays.
#[test]
fn search_order_does_not_change_verdicts() {
    for c in small_configs() {
        for tla in [false, true] {
            let sys = hotel(&c, tla);
            for stutter in [StutterMode::LabelAware, StutterMode::Delta] {
                let bfs = bfs_check(&sys, &no_bad_entry(), &CheckSemantics::bfs().with_stutter(stutter)).unwrap();
                let dfs = dfs_check(&sys, &no_bad_entry(), &CheckSemantics::dfs(100).with_stutter(stutter)).unwrap();
                assert_eq!(bfs.verdict.kind(), dfs.verdict.kind(), "{c:?} tla={tla} {stutter:?}");
                for v in [&bfs.verdict, &dfs.verdict] {
                    if let Some(t) = v.trace() {
                        assert!(t.replays(&sys));
                        assert!(model::is_initial(&t.states()[0], &c));
                    }
                }
                if let (Some(b), Some(d)) = (bfs.verdict.counterexample_len(), dfs.verdict.counterexample_len()) {
                    assert!(b <= d);
                }
            }
        }
    }
}

/// The minimum counter-example length equals the first violating length of
/// an exact-length sweep.
#[test]
fn bfs_counterexamples_are_minimal() {
    for c in small_configs() {
        let sys = hotel(&c, false);
        let bfs = bfs_check(&sys, &no_bad_entry(), &CheckSemantics::bfs()).unwrap();
        let sweep = bounded_sweep(&sys, &no_bad_entry(), 8, false).unwrap();
        assert_eq!(
            bfs.verdict.counterexample_len(),
            sweep.verdict.counterexample_len(),
            "{c:?}"
        );
    }
}

#[test]
fn bounded_examples_n3() {
    let sys = hotel(&HotelConfig::uniform(3).unwrap(), false);
    let t4 = bounded_check(&sys, &no_bad_entry(), 4, false).unwrap();
    assert_eq!(t4.verdict.kind(), VerdictKind::Verified);
    let t5 = bounded_check(&sys, &no_bad_entry(), 5, false).unwrap();
    let trace = t5.verdict.trace().expect("violation at five instants");
    assert_eq!(trace.len(), 5);
    assert!(trace.replays(&sys));
    let kinds: Vec<_> = trace.labels().iter().map(|l| l.kind_name()).collect();
    assert_eq!(kinds, ["Checkin", "Checkout", "Checkin", "Entry"]);
    assert_eq!(
        bounded_check(&sys, &no_bad_entry(), 1, false).unwrap().verdict.kind(),
        VerdictKind::Verified
    );
    assert!(bounded_check(&sys, &no_bad_entry(), 0, false).is_err());

    let a = bounded_check(&sys, &no_bad_entry(), 6, false).unwrap();
    let b = bounded_check(&sys, &no_bad_entry(), 6, false).unwrap();
    assert_eq!(a, b, "repeated runs are identical");
}

#[test]
fn alloy_lookahead_blocks_the_counterexample() {
    let sys = hotel(&HotelConfig::uniform(3).unwrap(), false);
    let sweep = bounded_sweep(&sys, &no_bad_entry(), 7, true).unwrap();
    assert_eq!(sweep.rows.len(), 7);
    assert!(sweep.rows.iter().all(|r| r.kind == VerdictKind::Verified));
    let sweep = bounded_sweep(&sys, &no_bad_entry(), 1, true).unwrap();
    assert_eq!(sweep.verdict.kind(), VerdictKind::Verified);
}

#[test]
fn lookahead_exempts_a_final_checkin() {
    // From the intervening prefix, the trace ending in g1's checkin is legal
    // under look-ahead (no step follows), but cannot be extended by g0's
    // stale entry.
    let (c, states, _) = intervening_prefix();
    let sys = HotelSystem::new(c).with_initial_states(vec![states[0].clone()]);
    let any = Property::trivial();
    assert_eq!(
        bounded_check(
            &sys,
            &Property::state("never-third-checkin", {
                let target = states[3].clone();
                move |s: &HotelState| *s != target
            }),
            4,
            true
        )
        .unwrap()
        .verdict
        .kind(),
        VerdictKind::Verified,
        "checkin k1 must be followed by the matching entry, so the prefix is not a trace"
    );
    assert_eq!(
        bounded_check(&sys, &any, 4, true).unwrap().verdict.kind(),
        VerdictKind::Verified
    );
    let obliged = ObligationSystem::new(sys.clone());
    let lifted = ObligationSystem::<HotelSystem>::lift_property(&no_bad_entry());
    let out = bfs_check(&obliged, &lifted, &CheckSemantics::bfs()).unwrap();
    assert_eq!(out.verdict.kind(), VerdictKind::Verified);
}

#[test]
fn delta_mode_blind_to_self_loop_entries() {
    let (c, mut states, mut labels) = intervening_prefix();
    // g0 enters with k1 before checking out, so the lock already knows k1.
    let g0 = GuestId(0);
    let r = RoomId(0);
    let mut s = states[0].clone();
    let seq = [
        ActionLabel::Checkin {
            guest: g0,
            room: r,
            key: 1,
        },
        ActionLabel::Entry {
            guest: g0,
            room: r,
            key: 1,
        },
        ActionLabel::Checkout { guest: g0 },
        ActionLabel::Checkin {
            guest: GuestId(1),
            room: r,
            key: 2,
        },
    ];
    states.truncate(1);
    labels.clear();
    for l in seq {
        s = model::apply(&s, &l).unwrap();
        states.push(s.clone());
        labels.push(l);
    }
    let last = states.last().unwrap().clone();
    let stale = ActionLabel::Entry {
        guest: g0,
        room: r,
        key: 1,
    };
    let after = model::apply(&last, &stale).expect("stale entry enabled");
    assert_eq!(after, last, "the step changes nothing");
    assert!(!model::no_bad_entry_step(&last, &stale, &after));

    let sys = HotelSystem::new(c).with_initial_states(vec![last.clone()]);
    let label_aware = bfs_check(&sys, &no_bad_entry(), &CheckSemantics::bfs()).unwrap();
    let trace = label_aware.verdict.trace().expect("flagged");
    assert_eq!(trace.labels(), &[stale]);
    let delta = bfs_check(
        &sys,
        &no_bad_entry(),
        &CheckSemantics::bfs().with_stutter(StutterMode::Delta),
    )
    .unwrap();
    if let Some(t) = delta.verdict.trace() {
        assert_ne!(t.labels()[0], stale);
    }
    assert!(
        delta.verdict.trace().is_none_or(|t| t.steps().all(|(a, _, b)| a != b)),
        "delta mode never reports a stuttering step"
    );
}

/// The violating steps reachable in delta mode are exactly the label-aware
/// ones minus self-loops, and both sets are nonempty.
#[test]
fn stutter_modes_see_different_violations() {
    let c = HotelConfig::uniform(3).unwrap();
    let reach = oracle_reachable(&c, |_, _| true);
    let mut label_aware = 0;
    let mut self_loops = 0;
    for s in &reach {
        for (l, t) in model::enabled_steps(s) {
            if !model::no_bad_entry_step(s, &l, &t) {
                label_aware += 1;
                if *s == t {
                    self_loops += 1;
                }
            }
        }
    }
    assert!(self_loops > 0);
    assert!(label_aware > self_loops);
    let sys = hotel(&c, false);
    let delta = bfs_check(
        &sys,
        &no_bad_entry(),
        &CheckSemantics::bfs().with_stutter(StutterMode::Delta),
    )
    .unwrap();
    assert_eq!(delta.verdict.kind(), VerdictKind::CounterExample);
}

#[test]
fn strict_deadlocks_cover_more_states() {
    let sys = hotel(&HotelConfig::uniform(3).unwrap(), false);
    let plain = reachable_stats(&sys, &CheckSemantics::bfs()).unwrap();
    let strict = reachable_stats(
        &sys,
        &CheckSemantics::bfs()
            .with_stutter(StutterMode::Delta)
            .with_deadlock(DeadlockPolicy::Ignore, true),
    )
    .unwrap();
    assert!(plain.deadlock_count > 0);
    assert!(strict.deadlock_count > plain.deadlock_count);
    // flagging deadlocks turns the check into a deadlock report
    let out = bfs_check(
        &sys,
        &no_bad_entry(),
        &CheckSemantics::bfs().with_deadlock(DeadlockPolicy::Flag, false),
    )
    .unwrap();
    assert_eq!(out.verdict.kind(), VerdictKind::Deadlock);
    assert!(out.verdict.trace().unwrap().replays(&sys));
}

#[test]
fn symmetry_counts() {
    assert_eq!(count_canonical_initial_states(&HotelConfig::new(0, 0, 0).unwrap()), 1);
    // brute-force orbit count for n = 3: every state's orbit, deduplicated
    let c = HotelConfig::uniform(3).unwrap();
    let canon = Canonicalizer::new(&c);
    let mut orbits: Vec<Vec<HotelState>> = enumerate_initial_states(&c)
        .iter()
        .map(|s| {
            let mut o = canon.orbit(s);
            o.sort();
            o
        })
        .collect();
    orbits.sort();
    orbits.dedup();
    assert_eq!(orbits.len(), 92);
    assert_eq!(count_canonical_initial_states(&c), 92);
}

#[test]
fn symmetry_folding_preserves_verdicts() {
    for c in small_configs() {
        for tla in [false, true] {
            let sys = hotel(&c, tla);
            let plain = bfs_check(&sys, &no_bad_entry(), &CheckSemantics::bfs()).unwrap();
            let folded = bfs_check(&sys, &no_bad_entry(), &CheckSemantics::bfs().with_symmetry(true)).unwrap();
            assert_eq!(plain.verdict.kind(), folded.verdict.kind(), "{c:?}");
            assert_eq!(plain.verdict.counterexample_len(), folded.verdict.counterexample_len());
            assert!(folded.states_explored <= plain.states_explored);
            if let Some(t) = folded.verdict.trace() {
                assert!(t.replays(&sys));
            }
        }
    }
}

#[test]
fn canonical_form_is_relabeling_invariant() {
    let c = HotelConfig::uniform(3).unwrap();
    let canon = Canonicalizer::new(&c);
    let perms = symmetry::permutations(3);
    let reach: Vec<_> = oracle_reachable(&c, |_, _| true).into_iter().collect();
    for s in reach.iter().step_by(5) {
        let rep = canon.canonicalize(s);
        assert_eq!(canon.canonicalize(&rep), rep);
        for rp in &perms {
            for gp in &perms {
                assert_eq!(canon.canonicalize(&s.relabel(rp, gp)), rep);
            }
        }
    }
}

#[test]
fn hybrid_matches_monolithic() {
    for c in small_configs() {
        for tla in [false, true] {
            let sys = hotel(&c, tla);
            let mono = bfs_check(&sys, &no_bad_entry(), &CheckSemantics::bfs()).unwrap();
            for symmetry in [false, true] {
                let opts = HybridOptions {
                    symmetry,
                    workers: 3,
                    short_circuit: false,
                };
                let rep = hybrid_check(&sys, &no_bad_entry(), &CheckSemantics::bfs(), &opts).unwrap();
                let v = rep.outcome.unwrap();
                assert_eq!(v.kind(), mono.verdict.kind(), "{c:?} tla={tla}");
                if let Some(t) = v.trace() {
                    assert!(t.replays(&sys));
                    assert!(t.len() >= mono.verdict.counterexample_len().unwrap());
                }
            }
        }
    }
}

#[test]
fn hybrid_reports_violation_ratio() {
    let sys = hotel(&HotelConfig::uniform(3).unwrap(), false);
    let rep = hybrid_check(&sys, &no_bad_entry(), &CheckSemantics::bfs(), &HybridOptions::default()).unwrap();
    assert_eq!(rep.task_count, 776);
    assert_eq!(rep.tasks.len(), 776);
    // A bad entry needs two checkins into the same room by different
    // guests: two guests, and a room holding two keys above its current one.
    let brute = enumerate_initial_states(&HotelConfig::uniform(3).unwrap())
        .into_iter()
        .filter(|s| {
            s.guests.len() >= 2
                && s.rooms.iter().any(|r| {
                    let r = r as usize;
                    s.keys[r].iter().filter(|&k| k > s.current[r]).count() >= 2
                })
        })
        .count();
    assert_eq!(rep.violating_tasks(), brute);
    assert!(brute > 0 && brute < 776);
    assert_eq!(
        derive_initial_generator(&HotelConfig::uniform(3).unwrap(), false).len(),
        776
    );
}
