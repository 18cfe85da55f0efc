//! The hotel room locking protocol as an explicit action system.
//!
//! Keys are the naturals `0..key_count`, ordered naturally. Rooms and guests
//! are positions in their configured universes. The variable room and guest
//! sets, the key pools, and the four maps of the protocol live together in a
//! [`HotelState`]; the three actions are guard + functional effect, so every
//! `(state, label)` pair has at most one successor.

use std::fmt;

use crate::error::ModelError;

pub const MAX_ROOMS: usize = 8;
pub const MAX_GUESTS: usize = 8;
pub const MAX_KEYS: usize = 32;

/// A key is a natural number below the configured key count.
pub type Key = u8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RoomId(pub u8);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GuestId(pub u8);

/// A finite set of small naturals (keys, room or guest positions), bit `i`
/// standing for element `i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdSet(u32);

impl IdSet {
    pub const EMPTY: IdSet = IdSet(0);

    pub fn from_bits(bits: u32) -> Self {
        IdSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn singleton(i: u8) -> Self {
        IdSet(1 << i)
    }

    /// `{0, .., n-1}`
    pub fn range(n: usize) -> Self {
        if n >= 32 {
            IdSet(u32::MAX)
        } else {
            IdSet((1u32 << n) - 1)
        }
    }

    pub fn contains(self, i: u8) -> bool {
        u32::from(i) < 32 && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: u8) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: u8) {
        self.0 &= !(1 << i);
    }

    pub fn with(self, i: u8) -> Self {
        IdSet(self.0 | 1 << i)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: IdSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: IdSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = u8> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as u8;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Image of the set under `perm` (element `i` goes to `perm[i]`).
    pub fn map(self, perm: &[u8]) -> Self {
        let mut out = IdSet::EMPTY;
        for i in self.iter() {
            out.insert(perm[i as usize]);
        }
        out
    }
}

impl fmt::Debug for IdSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<u8> for IdSet {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        let mut s = IdSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// Problem instance: the key count and the room/guest universes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HotelConfig {
    key_count: usize,
    room_names: Vec<String>,
    guest_names: Vec<String>,
    exact_scope: bool,
}

impl HotelConfig {
    /// `rooms` rooms named `r0..`, `guests` guests named `g0..`, up-to scope.
    pub fn new(key_count: usize, rooms: usize, guests: usize) -> Result<Self, ModelError> {
        Self::with_names(
            key_count,
            (0..rooms).map(|i| format!("r{i}")).collect(),
            (0..guests).map(|i| format!("g{i}")).collect(),
        )
    }

    pub fn with_names(key_count: usize, room_names: Vec<String>, guest_names: Vec<String>) -> Result<Self, ModelError> {
        if key_count > MAX_KEYS {
            return Err(ModelError::TooManyKeys(key_count));
        }
        if room_names.len() > MAX_ROOMS {
            return Err(ModelError::TooManyRooms(room_names.len()));
        }
        if guest_names.len() > MAX_GUESTS {
            return Err(ModelError::TooManyGuests(guest_names.len()));
        }
        for names in [&room_names, &guest_names] {
            for (i, name) in names.iter().enumerate() {
                if name.is_empty() {
                    return Err(ModelError::EmptyName);
                }
                if names[..i].contains(name) {
                    return Err(ModelError::DuplicateName(name.clone()));
                }
            }
        }
        Ok(HotelConfig {
            key_count,
            room_names,
            guest_names,
            exact_scope: false,
        })
    }

    /// `n` keys, up to `n` rooms and up to `n` guests.
    pub fn uniform(n: usize) -> Result<Self, ModelError> {
        Self::new(n, n, n)
    }

    /// Exactly `n` rooms and guests over `n + 2` keys.
    pub fn exact(n: usize) -> Result<Self, ModelError> {
        Ok(Self::new(n + 2, n, n)?.with_exact_scope(true))
    }

    pub fn with_exact_scope(mut self, exact: bool) -> Self {
        self.exact_scope = exact;
        self
    }

    pub fn key_count(&self) -> usize {
        self.key_count
    }

    pub fn room_count(&self) -> usize {
        self.room_names.len()
    }

    pub fn guest_count(&self) -> usize {
        self.guest_names.len()
    }

    pub fn exact_scope(&self) -> bool {
        self.exact_scope
    }

    pub fn room_names(&self) -> &[String] {
        &self.room_names
    }

    pub fn guest_names(&self) -> &[String] {
        &self.guest_names
    }

    pub fn room_name(&self, r: RoomId) -> &str {
        &self.room_names[r.0 as usize]
    }

    pub fn guest_name(&self, g: GuestId) -> &str {
        &self.guest_names[g.0 as usize]
    }

    pub fn room_by_name(&self, name: &str) -> Option<RoomId> {
        self.room_names.iter().position(|n| n == name).map(|i| RoomId(i as u8))
    }

    pub fn guest_by_name(&self, name: &str) -> Option<GuestId> {
        self.guest_names
            .iter()
            .position(|n| n == name)
            .map(|i| GuestId(i as u8))
    }

    pub fn all_keys(&self) -> IdSet {
        IdSet::range(self.key_count)
    }

    pub fn all_rooms(&self) -> IdSet {
        IdSet::range(self.room_count())
    }

    pub fn all_guests(&self) -> IdSet {
        IdSet::range(self.guest_count())
    }

    fn key_bytes(&self) -> usize {
        self.key_count.div_ceil(8).max(1)
    }

    /// Length of [`HotelState::encode`] output under this config.
    pub fn encoded_len(&self) -> usize {
        2 + self.room_count() * (self.key_bytes() + 3) + self.guest_count() * self.key_bytes()
    }
}

/// One valuation of every variable of the protocol.
///
/// Per-room and per-guest arrays are indexed by universe position; entries
/// for rooms or guests outside `rooms`/`guests` are kept zeroed so that
/// structural equality coincides with equality of valuations.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HotelState {
    pub rooms: IdSet,
    pub guests: IdSet,
    pub keys: [IdSet; MAX_ROOMS],
    pub current: [Key; MAX_ROOMS],
    pub last: [Key; MAX_ROOMS],
    pub occupant: [IdSet; MAX_ROOMS],
    pub gkeys: [IdSet; MAX_GUESTS],
}

impl HotelState {
    /// No rooms, no guests.
    pub fn empty() -> Self {
        HotelState {
            rooms: IdSet::EMPTY,
            guests: IdSet::EMPTY,
            keys: [IdSet::EMPTY; MAX_ROOMS],
            current: [0; MAX_ROOMS],
            last: [0; MAX_ROOMS],
            occupant: [IdSet::EMPTY; MAX_ROOMS],
            gkeys: [IdSet::EMPTY; MAX_GUESTS],
        }
    }

    /// Appends the canonical byte encoding of `self` under `config`.
    ///
    /// Fixed length for a given config and injective over states whose
    /// arrays are zero outside `rooms`/`guests`.
    pub fn encode(&self, config: &HotelConfig, out: &mut Vec<u8>) {
        let kb = config.key_bytes();
        let put_keys = |out: &mut Vec<u8>, ks: IdSet| {
            out.extend_from_slice(&ks.bits().to_be_bytes()[4 - kb..]);
        };
        out.push(self.rooms.bits() as u8);
        out.push(self.guests.bits() as u8);
        for r in 0..config.room_count() {
            put_keys(out, self.keys[r]);
            out.push(self.current[r]);
            out.push(self.last[r]);
            out.push(self.occupant[r].bits() as u8);
        }
        for g in 0..config.guest_count() {
            put_keys(out, self.gkeys[g]);
        }
    }

    pub fn encoding(&self, config: &HotelConfig) -> Vec<u8> {
        let mut out = Vec::with_capacity(config.encoded_len());
        self.encode(config, &mut out);
        out
    }

    /// Applies a joint relabeling: room `i` becomes `room_perm[i]`, guest `j`
    /// becomes `guest_perm[j]`. Keys are untouched.
    pub fn relabel(&self, room_perm: &[u8], guest_perm: &[u8]) -> HotelState {
        let mut out = HotelState::empty();
        out.rooms = self.rooms.map(room_perm);
        out.guests = self.guests.map(guest_perm);
        for r in self.rooms.iter() {
            let to = room_perm[r as usize] as usize;
            let r = r as usize;
            out.keys[to] = self.keys[r];
            out.current[to] = self.current[r];
            out.last[to] = self.last[r];
            out.occupant[to] = self.occupant[r].map(guest_perm);
        }
        for g in self.guests.iter() {
            out.gkeys[guest_perm[g as usize] as usize] = self.gkeys[g as usize];
        }
        out
    }
}

impl fmt::Debug for HotelState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("HotelState");
        d.field("rooms", &self.rooms).field("guests", &self.guests);
        for r in self.rooms.iter() {
            let r = r as usize;
            d.field(
                &format!("room{r}"),
                &format_args!(
                    "keys={:?} current={} last={} occupant={:?}",
                    self.keys[r], self.current[r], self.last[r], self.occupant[r]
                ),
            );
        }
        for g in self.guests.iter() {
            d.field(&format!("gkeys{g}"), &self.gkeys[g as usize]);
        }
        d.finish()
    }
}

/// Which action, with which parameters, produced a step.
///
/// Variant order is the label order: `Entry < Checkin < Checkout`, then
/// lexicographic on `(guest, room, key)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ActionLabel {
    Entry { guest: GuestId, room: RoomId, key: Key },
    Checkin { guest: GuestId, room: RoomId, key: Key },
    Checkout { guest: GuestId },
}

impl ActionLabel {
    pub fn guest(&self) -> GuestId {
        match *self {
            ActionLabel::Entry { guest, .. } | ActionLabel::Checkin { guest, .. } | ActionLabel::Checkout { guest } => {
                guest
            }
        }
    }

    pub fn room(&self) -> Option<RoomId> {
        match *self {
            ActionLabel::Entry { room, .. } | ActionLabel::Checkin { room, .. } => Some(room),
            ActionLabel::Checkout { .. } => None,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            ActionLabel::Entry { .. } => "Entry",
            ActionLabel::Checkin { .. } => "Checkin",
            ActionLabel::Checkout { .. } => "Checkout",
        }
    }

    pub fn relabel(&self, room_perm: &[u8], guest_perm: &[u8]) -> ActionLabel {
        let g = |g: GuestId| GuestId(guest_perm[g.0 as usize]);
        let r = |r: RoomId| RoomId(room_perm[r.0 as usize]);
        match *self {
            ActionLabel::Entry { guest, room, key } => ActionLabel::Entry {
                guest: g(guest),
                room: r(room),
                key,
            },
            ActionLabel::Checkin { guest, room, key } => ActionLabel::Checkin {
                guest: g(guest),
                room: r(room),
                key,
            },
            ActionLabel::Checkout { guest } => ActionLabel::Checkout { guest: g(guest) },
        }
    }

    /// Four bytes: tag, guest, room, key.
    pub fn encode(&self, out: &mut Vec<u8>) {
        match *self {
            ActionLabel::Entry { guest, room, key } => out.extend([0, guest.0, room.0, key]),
            ActionLabel::Checkin { guest, room, key } => out.extend([1, guest.0, room.0, key]),
            ActionLabel::Checkout { guest } => out.extend([2, guest.0, 0, 0]),
        }
    }

    /// Renders with universe names, e.g. `Entry(g0, r1, k1)`.
    pub fn display<'a>(&'a self, config: &'a HotelConfig) -> impl fmt::Display + 'a {
        LabelDisplay { label: self, config }
    }
}

struct LabelDisplay<'a> {
    label: &'a ActionLabel,
    config: &'a HotelConfig,
}

impl fmt::Display for LabelDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.config;
        match *self.label {
            ActionLabel::Entry { guest, room, key } | ActionLabel::Checkin { guest, room, key } => {
                write!(
                    f,
                    "{}({}, {}, k{})",
                    self.label.kind_name(),
                    c.guest_name(guest),
                    c.room_name(room),
                    key
                )
            }
            ActionLabel::Checkout { guest } => write!(f, "Checkout({})", c.guest_name(guest)),
        }
    }
}

/// Smallest key of `pool` strictly greater than `k`.
pub fn next_key(k: Key, pool: IdSet) -> Option<Key> {
    let above = if k >= 31 {
        0
    } else {
        pool.bits() & (u32::MAX << (k + 1))
    };
    (above != 0).then(|| above.trailing_zeros() as Key)
}

/// The type invariant: bounds, `current[r] ∈ keys[r]`, disjoint pools, and
/// map domains matching `rooms`/`guests`.
pub fn type_inv(s: &HotelState, c: &HotelConfig) -> bool {
    let all_keys = c.all_keys();
    if !s.rooms.is_subset(c.all_rooms()) || !s.guests.is_subset(c.all_guests()) {
        return false;
    }
    let mut used = IdSet::EMPTY;
    for r in 0..MAX_ROOMS {
        let present = s.rooms.contains(r as u8);
        if !present {
            if !s.keys[r].is_empty() || s.current[r] != 0 || s.last[r] != 0 || !s.occupant[r].is_empty() {
                return false;
            }
            continue;
        }
        let pool = s.keys[r];
        if !pool.is_subset(all_keys)
            || !all_keys.contains(s.current[r])
            || !all_keys.contains(s.last[r])
            || !pool.contains(s.current[r])
            || !s.occupant[r].is_subset(s.guests)
            || pool.intersects(used)
        {
            return false;
        }
        used = IdSet::from_bits(used.bits() | pool.bits());
    }
    (0..MAX_GUESTS).all(|g| {
        if s.guests.contains(g as u8) {
            s.gkeys[g].is_subset(all_keys)
        } else {
            s.gkeys[g].is_empty()
        }
    })
}

/// `Init`: any disjoint family of nonempty pools with a current key drawn
/// from each, `last = current`, nobody checked in, nobody holding keys.
pub fn is_initial(s: &HotelState, c: &HotelConfig) -> bool {
    type_inv(s, c)
        && (!c.exact_scope() || (s.rooms == c.all_rooms() && s.guests == c.all_guests()))
        && s.rooms.iter().all(|r| {
            let r = r as usize;
            s.last[r] == s.current[r] && s.occupant[r].is_empty()
        })
        && s.guests.iter().all(|g| s.gkeys[g as usize].is_empty())
}

/// Every state satisfying `Init`, sorted by encoding.
pub fn enumerate_initial_states(c: &HotelConfig) -> Vec<HotelState> {
    let (room_sets, guest_sets): (Vec<IdSet>, Vec<IdSet>) = if c.exact_scope() {
        (vec![c.all_rooms()], vec![c.all_guests()])
    } else {
        (subsets(c.all_rooms()).collect(), subsets(c.all_guests()).collect())
    };

    let mut out = Vec::new();
    for &rooms in &room_sets {
        let layouts = room_layouts(rooms, c.key_count());
        for &guests in &guest_sets {
            for (keys, current) in &layouts {
                let mut s = HotelState::empty();
                s.rooms = rooms;
                s.guests = guests;
                s.keys = *keys;
                s.current = *current;
                s.last = *current;
                out.push(s);
            }
        }
    }
    out.sort_by_cached_key(|s| s.encoding(c));
    out
}

/// All subsets of `set`, in increasing bit order.
fn subsets(set: IdSet) -> impl Iterator<Item = IdSet> {
    let full = set.bits();
    let mut next = Some(0u32);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == full {
            None
        } else {
            Some((cur.wrapping_sub(full)) & full)
        };
        Some(IdSet::from_bits(cur))
    })
}

type Layout = ([IdSet; MAX_ROOMS], [Key; MAX_ROOMS]);

/// Disjoint nonempty key pools for each room of `rooms`, each paired with a
/// choice of current key from the pool.
fn room_layouts(rooms: IdSet, key_count: usize) -> Vec<Layout> {
    let room_list: Vec<u8> = rooms.iter().collect();
    let mut pools = Vec::new();
    assign_pools(&room_list, 0, key_count, &mut [IdSet::EMPTY; MAX_ROOMS], &mut pools);

    let mut out = Vec::new();
    for keys in pools {
        let mut current = [0; MAX_ROOMS];
        choose_current(&room_list, 0, &keys, &mut current, &mut out);
    }
    out
}

fn assign_pools(
    rooms: &[u8],
    key: usize,
    key_count: usize,
    keys: &mut [IdSet; MAX_ROOMS],
    out: &mut Vec<[IdSet; MAX_ROOMS]>,
) {
    if key == key_count {
        if rooms.iter().all(|&r| !keys[r as usize].is_empty()) {
            out.push(*keys);
        }
        return;
    }
    // key unassigned
    assign_pools(rooms, key + 1, key_count, keys, out);
    for &r in rooms {
        keys[r as usize].insert(key as u8);
        assign_pools(rooms, key + 1, key_count, keys, out);
        keys[r as usize].remove(key as u8);
    }
}

fn choose_current(
    rooms: &[u8],
    i: usize,
    keys: &[IdSet; MAX_ROOMS],
    current: &mut [Key; MAX_ROOMS],
    out: &mut Vec<Layout>,
) {
    let Some(&r) = rooms.get(i) else {
        out.push((*keys, *current));
        return;
    };
    for k in keys[r as usize].iter() {
        current[r as usize] = k;
        choose_current(rooms, i + 1, keys, current, out);
    }
    current[r as usize] = 0;
}

/// Every enabled step from `s`, sorted by label.
pub fn enabled_steps(s: &HotelState) -> Vec<(ActionLabel, HotelState)> {
    let mut steps = Vec::new();

    for g in s.guests.iter() {
        let held = s.gkeys[g as usize];
        for r in s.rooms.iter() {
            let ri = r as usize;
            let cur = s.current[ri];
            let fresh = next_key(cur, s.keys[ri]);
            for k in held.iter() {
                if k == cur || Some(k) == fresh {
                    let mut next = s.clone();
                    next.current[ri] = k;
                    steps.push((
                        ActionLabel::Entry {
                            guest: GuestId(g),
                            room: RoomId(r),
                            key: k,
                        },
                        next,
                    ));
                }
            }
        }
    }

    for g in s.guests.iter() {
        for r in s.rooms.iter() {
            let ri = r as usize;
            if !s.occupant[ri].is_empty() {
                continue;
            }
            if let Some(k) = next_key(s.last[ri], s.keys[ri]) {
                let mut next = s.clone();
                next.occupant[ri] = IdSet::singleton(g);
                next.gkeys[g as usize].insert(k);
                next.last[ri] = k;
                steps.push((
                    ActionLabel::Checkin {
                        guest: GuestId(g),
                        room: RoomId(r),
                        key: k,
                    },
                    next,
                ));
            }
        }
    }

    for g in s.guests.iter() {
        if s.rooms.iter().any(|r| s.occupant[r as usize].contains(g)) {
            let mut next = s.clone();
            for r in next.rooms.iter() {
                next.occupant[r as usize].remove(g);
            }
            steps.push((ActionLabel::Checkout { guest: GuestId(g) }, next));
        }
    }

    // Generation order already matches label order except for the
    // (guest, room, key) nesting inside Entry; sort to be exact.
    steps.sort_by_key(|a| a.0);
    steps
}

/// Applies `label` to `s` if enabled.
pub fn apply(s: &HotelState, label: &ActionLabel) -> Option<HotelState> {
    enabled_steps(s)
        .into_iter()
        .find(|(l, _)| l == label)
        .map(|(_, next)| next)
}

/// The checkin post-condition: `g` alone in `r`, holding `k = last[r]`,
/// which the lock has not yet seen.
pub fn post_pred(s: &HotelState, g: GuestId, r: RoomId, k: Key) -> bool {
    let ri = r.0 as usize;
    s.occupant[ri] == IdSet::singleton(g.0)
        && s.gkeys[g.0 as usize].contains(k)
        && s.last[ri] == k
        && s.current[ri] != k
}

/// `NoBadEntry` on one step: an `Entry` into an occupied room must be by an
/// occupant.
pub fn no_bad_entry_step(s: &HotelState, label: &ActionLabel, _next: &HotelState) -> bool {
    match *label {
        ActionLabel::Entry { guest, room, .. } => {
            let occ = s.occupant[room.0 as usize];
            occ.is_empty() || occ.contains(guest.0)
        }
        _ => true,
    }
}

/// Step filter form of `NoIntervening`: whenever the checkin post-condition
/// holds for some `(g, r, k)`, the step must be exactly `Entry(g, r, k)`.
pub fn no_intervening_tla_ok(s: &HotelState, label: &ActionLabel) -> bool {
    // Post(g, r, k) forces occupant[r] = {g} and k = last[r], so each room
    // has at most one candidate triple.
    s.rooms.iter().all(|r| {
        let ri = r as usize;
        let occ = s.occupant[ri];
        if occ.len() != 1 {
            return true;
        }
        let g = GuestId(occ.bits().trailing_zeros() as u8);
        let k = s.last[ri];
        !post_pred(s, g, RoomId(r), k)
            || *label
                == ActionLabel::Entry {
                    guest: g,
                    room: RoomId(r),
                    key: k,
                }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_room(pool: &[Key], current: Key, guests: usize) -> HotelState {
        let mut s = HotelState::empty();
        s.rooms = IdSet::singleton(0);
        s.guests = IdSet::range(guests);
        s.keys[0] = pool.iter().copied().collect();
        s.current[0] = current;
        s.last[0] = current;
        s
    }

    #[test]
    fn next_key_examples() {
        let pool = |ks: &[u8]| ks.iter().copied().collect::<IdSet>();
        assert_eq!(next_key(0, pool(&[0, 1, 2])), Some(1));
        assert_eq!(next_key(2, pool(&[0, 1, 2])), None);
        assert_eq!(next_key(1, pool(&[0, 2, 3])), Some(2));
        assert_eq!(next_key(31, IdSet::range(32)), None);
        assert_eq!(next_key(30, IdSet::range(32)), Some(31));
        assert_eq!(next_key(0, IdSet::EMPTY), None);
    }

    #[test]
    fn type_inv_rejects_shared_key() {
        let c = HotelConfig::new(3, 2, 0).unwrap();
        let mut s = HotelState::empty();
        s.rooms = IdSet::range(2);
        s.keys[0] = IdSet::singleton(0);
        s.keys[1] = IdSet::singleton(0);
        assert!(!type_inv(&s, &c));
        s.keys[1] = IdSet::singleton(1);
        s.current[1] = 1;
        s.last[1] = 1;
        assert!(type_inv(&s, &c));
    }

    #[test]
    fn type_inv_vacuous_on_empty_state() {
        let c = HotelConfig::new(3, 3, 3).unwrap();
        assert!(type_inv(&HotelState::empty(), &c));
    }

    #[test]
    fn type_inv_rejects_current_outside_pool() {
        let c = HotelConfig::new(3, 1, 1).unwrap();
        let mut s = one_room(&[1, 2], 1, 1);
        assert!(type_inv(&s, &c));
        s.current[0] = 0;
        assert!(!type_inv(&s, &c));
    }

    #[test]
    fn type_inv_rejects_stray_occupant() {
        let c = HotelConfig::new(3, 1, 2).unwrap();
        let mut s = one_room(&[0, 1], 0, 1);
        s.occupant[0] = IdSet::singleton(1);
        assert!(!type_inv(&s, &c));
    }

    #[test]
    fn config_validation() {
        assert_eq!(HotelConfig::new(33, 1, 1).unwrap_err(), ModelError::TooManyKeys(33));
        assert_eq!(HotelConfig::new(1, 9, 1).unwrap_err(), ModelError::TooManyRooms(9));
        assert!(matches!(
            HotelConfig::with_names(1, vec!["a".into(), "a".into()], vec![]),
            Err(ModelError::DuplicateName(_))
        ));
    }

    #[test]
    fn single_key_single_room_initials() {
        let c = HotelConfig::new(1, 1, 1).unwrap();
        let init = enumerate_initial_states(&c);
        assert_eq!(init.len(), 4);
        assert!(init.iter().all(|s| is_initial(s, &c)));
    }

    #[test]
    fn empty_universes_have_one_initial_state() {
        let c = HotelConfig::new(0, 0, 0).unwrap();
        assert_eq!(enumerate_initial_states(&c), vec![HotelState::empty()]);
        let c = HotelConfig::new(3, 0, 0).unwrap();
        assert_eq!(enumerate_initial_states(&c).len(), 1);
    }

    #[test]
    fn no_keys_means_no_rooms() {
        let c = HotelConfig::new(0, 2, 1).unwrap();
        let init = enumerate_initial_states(&c);
        // rooms need a nonempty pool
        assert_eq!(init.len(), 2);
        assert!(init.iter().all(|s| s.rooms.is_empty()));
    }

    #[test]
    fn fresh_room_offers_only_checkins() {
        let s = one_room(&[0, 1, 2], 0, 2);
        let labels: Vec<_> = enabled_steps(&s).into_iter().map(|(l, _)| l).collect();
        assert_eq!(
            labels,
            vec![
                ActionLabel::Checkin {
                    guest: GuestId(0),
                    room: RoomId(0),
                    key: 1
                },
                ActionLabel::Checkin {
                    guest: GuestId(1),
                    room: RoomId(0),
                    key: 1
                },
            ]
        );
    }

    #[test]
    fn no_guests_no_steps() {
        let mut s = one_room(&[0, 1, 2], 0, 0);
        s.guests = IdSet::EMPTY;
        assert!(enabled_steps(&s).is_empty());
    }

    #[test]
    fn intervening_checkin_allows_stale_key() {
        let g0 = GuestId(0);
        let g1 = GuestId(1);
        let r = RoomId(0);
        let mut s = one_room(&[0, 1, 2], 0, 2);
        for label in [
            ActionLabel::Checkin {
                guest: g0,
                room: r,
                key: 1,
            },
            ActionLabel::Checkout { guest: g0 },
            ActionLabel::Checkin {
                guest: g1,
                room: r,
                key: 2,
            },
        ] {
            s = apply(&s, &label).expect("step enabled");
        }
        assert_eq!(s.occupant[0], IdSet::singleton(1));
        let entry = ActionLabel::Entry {
            guest: g0,
            room: r,
            key: 1,
        };
        let next = apply(&s, &entry).expect("stale key still opens the door");
        assert!(!no_bad_entry_step(&s, &entry, &next));
        assert!(post_pred(&s, g1, r, 2));
        assert!(!no_intervening_tla_ok(&s, &entry));
        assert!(no_intervening_tla_ok(
            &s,
            &ActionLabel::Entry {
                guest: g1,
                room: r,
                key: 2
            }
        ));
        assert!(!no_intervening_tla_ok(&s, &ActionLabel::Checkout { guest: g1 }));
    }

    #[test]
    fn entry_into_empty_room_is_fine() {
        let mut s = one_room(&[0, 1], 0, 1);
        s.gkeys[0] = IdSet::singleton(1);
        let label = ActionLabel::Entry {
            guest: GuestId(0),
            room: RoomId(0),
            key: 1,
        };
        let next = apply(&s, &label).unwrap();
        assert!(no_bad_entry_step(&s, &label, &next));
    }

    #[test]
    fn entry_consummates_checkin() {
        let g = GuestId(0);
        let r = RoomId(0);
        let s = one_room(&[0, 1], 0, 1);
        let s = apply(
            &s,
            &ActionLabel::Checkin {
                guest: g,
                room: r,
                key: 1,
            },
        )
        .unwrap();
        assert!(post_pred(&s, g, r, 1));
        let s = apply(
            &s,
            &ActionLabel::Entry {
                guest: g,
                room: r,
                key: 1,
            },
        )
        .unwrap();
        assert!(!post_pred(&s, g, r, 1));
    }

    #[test]
    fn label_order() {
        let e = ActionLabel::Entry {
            guest: GuestId(2),
            room: RoomId(2),
            key: 5,
        };
        let ci = ActionLabel::Checkin {
            guest: GuestId(0),
            room: RoomId(0),
            key: 0,
        };
        let co = ActionLabel::Checkout { guest: GuestId(0) };
        assert!(e < ci && ci < co);
    }

    #[test]
    fn encoding_has_fixed_length() {
        let c = HotelConfig::uniform(3).unwrap();
        for s in enumerate_initial_states(&c) {
            assert_eq!(s.encoding(&c).len(), c.encoded_len());
        }
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let all: Vec<_> = subsets(IdSet::from_bits(0b1010)).collect();
        assert_eq!(
            all,
            vec![
                IdSet::from_bits(0),
                IdSet::from_bits(0b10),
                IdSet::from_bits(0b1000),
                IdSet::from_bits(0b1010)
            ]
        );
    }
}
