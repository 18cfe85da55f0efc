//! Brute-force oracles, written directly from the protocol's guards and
//! effects without going through the library's step or enumeration code.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use hotelmc_core::{ActionLabel, GuestId, HotelConfig, HotelState, IdSet, RoomId};

/// Smallest pool element above `k`, by scanning every key.
pub fn oracle_next(k: u8, pool: IdSet, key_count: usize) -> Option<u8> {
    (0..key_count as u8).filter(|&x| pool.contains(x) && x > k).min()
}

/// Every `(label, successor)` obtained by evaluating each action's guard over
/// every parameter triple of the universe.
pub fn oracle_steps(s: &HotelState, c: &HotelConfig) -> BTreeSet<(ActionLabel, HotelState)> {
    let kc = c.key_count();
    let mut out = BTreeSet::new();
    for g in 0..c.guest_count() as u8 {
        for r in 0..c.room_count() as u8 {
            for k in 0..kc as u8 {
                if !s.guests.contains(g) || !s.rooms.contains(r) {
                    continue;
                }
                let ri = r as usize;
                let gi = g as usize;
                let entry_ok = s.gkeys[gi].contains(k)
                    && (k == s.current[ri] || oracle_next(s.current[ri], s.keys[ri], kc) == Some(k));
                if entry_ok {
                    let mut t = s.clone();
                    t.current[ri] = k;
                    out.insert((
                        ActionLabel::Entry {
                            guest: GuestId(g),
                            room: RoomId(r),
                            key: k,
                        },
                        t,
                    ));
                }
                let checkin_ok = s.occupant[ri].is_empty() && oracle_next(s.last[ri], s.keys[ri], kc) == Some(k);
                if checkin_ok {
                    let mut t = s.clone();
                    t.occupant[ri] = IdSet::singleton(g);
                    t.gkeys[gi] = IdSet::from_bits(t.gkeys[gi].bits() | 1 << k);
                    t.last[ri] = k;
                    out.insert((
                        ActionLabel::Checkin {
                            guest: GuestId(g),
                            room: RoomId(r),
                            key: k,
                        },
                        t,
                    ));
                }
            }
        }
        if s.guests.contains(g)
            && (0..c.room_count() as u8).any(|r| s.rooms.contains(r) && s.occupant[r as usize].contains(g))
        {
            let mut t = s.clone();
            for r in 0..c.room_count() {
                let mut occ = t.occupant[r];
                occ.remove(g);
                t.occupant[r] = occ;
            }
            out.insert((ActionLabel::Checkout { guest: GuestId(g) }, t));
        }
    }
    out
}

fn power_set(n: usize) -> Vec<IdSet> {
    (0..1u32 << n).map(IdSet::from_bits).collect()
}

/// Initial states by filtering every candidate valuation of
/// `rooms, guests, keys, current` through the `Init` predicate.
pub fn oracle_initial_states(c: &HotelConfig) -> BTreeSet<HotelState> {
    let kc = c.key_count();
    let pools = power_set(kc);
    let mut out = BTreeSet::new();
    let room_sets: Vec<IdSet> = if c.exact_scope() {
        vec![IdSet::range(c.room_count())]
    } else {
        power_set(c.room_count())
    };
    let guest_sets: Vec<IdSet> = if c.exact_scope() {
        vec![IdSet::range(c.guest_count())]
    } else {
        power_set(c.guest_count())
    };
    for &rooms in &room_sets {
        let rs: Vec<usize> = (0..c.room_count()).filter(|&r| rooms.contains(r as u8)).collect();
        // each room independently picks (pool, current) from all candidates
        let per_room: Vec<(IdSet, u8)> = pools.iter().flat_map(|&p| (0..kc as u8).map(move |k| (p, k))).collect();
        if per_room.is_empty() && !rs.is_empty() {
            continue;
        }
        let mut choice = vec![0usize; rs.len()];
        loop {
            let picked: Vec<(IdSet, u8)> = choice.iter().map(|&i| per_room[i]).collect();
            let current_in_pool = picked.iter().all(|(p, k)| p.contains(*k));
            let disjoint = (0..picked.len()).all(|i| (0..i).all(|j| picked[i].0.bits() & picked[j].0.bits() == 0));
            if current_in_pool && disjoint {
                for &guests in &guest_sets {
                    let mut s = HotelState::empty();
                    s.rooms = rooms;
                    s.guests = guests;
                    for (i, &r) in rs.iter().enumerate() {
                        s.keys[r] = picked[i].0;
                        s.current[r] = picked[i].1;
                        s.last[r] = picked[i].1;
                    }
                    out.insert(s);
                }
            }
            // odometer increment
            let mut pos = 0;
            loop {
                if pos == choice.len() {
                    break;
                }
                choice[pos] += 1;
                if choice[pos] < per_room.len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
            if pos == choice.len() {
                break;
            }
        }
    }
    out
}

/// Reachable states under the oracle step relation, optionally restricted
/// by a step filter.
pub fn oracle_reachable(c: &HotelConfig, filter: impl Fn(&HotelState, &ActionLabel) -> bool) -> HashSet<HotelState> {
    let mut seen: HashSet<HotelState> = HashSet::new();
    let mut queue: VecDeque<HotelState> = VecDeque::new();
    for s in oracle_initial_states(c) {
        if seen.insert(s.clone()) {
            queue.push_back(s);
        }
    }
    while let Some(s) = queue.pop_front() {
        for (l, t) in oracle_steps(&s, c) {
            if filter(&s, &l) && seen.insert(t.clone()) {
                queue.push_back(t);
            }
        }
    }
    seen
}

/// Configs with at most three keys, rooms and guests.
pub fn small_configs() -> Vec<HotelConfig> {
    let mut out = Vec::new();
    for k in 0..=3 {
        for r in 0..=3 {
            for g in 0..=3 {
                out.push(HotelConfig::new(k, r, g).unwrap());
            }
        }
    }
    out
}

/// The intervening-guest prefix on a single room with pool {0,1,2}: g0 checks
/// in with k1, checks out, g1 checks in with k2.
pub fn intervening_prefix() -> (HotelConfig, Vec<HotelState>, Vec<ActionLabel>) {
    let c = HotelConfig::new(3, 1, 2).unwrap();
    let mut s = HotelState::empty();
    s.rooms = IdSet::singleton(0);
    s.guests = IdSet::range(2);
    s.keys[0] = IdSet::range(3);
    let labels = vec![
        ActionLabel::Checkin {
            guest: GuestId(0),
            room: RoomId(0),
            key: 1,
        },
        ActionLabel::Checkout { guest: GuestId(0) },
        ActionLabel::Checkin {
            guest: GuestId(1),
            room: RoomId(0),
            key: 2,
        },
    ];
    let mut states = vec![s];
    for l in &labels {
        let next = hotelmc_core::model::apply(states.last().unwrap(), l).expect("prefix step enabled");
        states.push(next);
    }
    (c, states, labels)
}
