//! Canonical forms of hotel states under joint relabeling of rooms and
//! guests. Keys are totally ordered and never permuted.

use crate::model::{enumerate_initial_states, HotelConfig, HotelState};

/// All permutations of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut perm: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![perm.clone()];
    // Next lexicographic permutation until exhausted.
    loop {
        let Some(i) = (1..perm.len()).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return out;
        };
        let j = (i..perm.len())
            .rev()
            .find(|&j| perm[j] > perm[i - 1])
            .expect("pivot has a successor");
        perm.swap(i - 1, j);
        perm[i..].reverse();
        out.push(perm.clone());
    }
}

/// Exhaustive-search canonicalizer for one configuration.
///
/// The canonical form of a state is the relabeling with the smallest
/// encoding over the whole group `S(rooms) × S(guests)`.
#[derive(Clone, Debug)]
pub struct Canonicalizer {
    config: HotelConfig,
    room_perms: Vec<Vec<u8>>,
    guest_perms: Vec<Vec<u8>>,
}

impl Canonicalizer {
    pub fn new(config: &HotelConfig) -> Self {
        Canonicalizer {
            config: config.clone(),
            room_perms: permutations(config.room_count()),
            guest_perms: permutations(config.guest_count()),
        }
    }

    pub fn config(&self) -> &HotelConfig {
        &self.config
    }

    /// Size of the symmetry group.
    pub fn group_order(&self) -> usize {
        self.room_perms.len() * self.guest_perms.len()
    }

    pub fn canonicalize(&self, s: &HotelState) -> HotelState {
        self.canonicalize_with_witness(s).0
    }

    /// The canonical form together with the room and guest permutations that
    /// map `s` onto it.
    pub fn canonicalize_with_witness(&self, s: &HotelState) -> (HotelState, Vec<u8>, Vec<u8>) {
        let mut best: Option<(Vec<u8>, HotelState, usize, usize)> = None;
        let mut buf = Vec::with_capacity(self.config.encoded_len());
        for (ri, rp) in self.room_perms.iter().enumerate() {
            for (gi, gp) in self.guest_perms.iter().enumerate() {
                let image = s.relabel(rp, gp);
                buf.clear();
                image.encode(&self.config, &mut buf);
                if best.as_ref().is_none_or(|(enc, ..)| buf < *enc) {
                    best = Some((buf.clone(), image, ri, gi));
                }
            }
        }
        let (_, canon, ri, gi) = best.expect("the identity permutation always exists");
        (canon, self.room_perms[ri].clone(), self.guest_perms[gi].clone())
    }

    /// Every distinct image of `s` under the group, sorted by encoding.
    pub fn orbit(&self, s: &HotelState) -> Vec<HotelState> {
        let mut images: Vec<(Vec<u8>, HotelState)> = Vec::with_capacity(self.group_order());
        for rp in &self.room_perms {
            for gp in &self.guest_perms {
                let image = s.relabel(rp, gp);
                images.push((image.encoding(&self.config), image));
            }
        }
        images.sort_by(|a, b| a.0.cmp(&b.0));
        images.dedup_by(|a, b| a.0 == b.0);
        images.into_iter().map(|(_, s)| s).collect()
    }
}

pub fn canonicalize(s: &HotelState, c: &HotelConfig) -> HotelState {
    Canonicalizer::new(c).canonicalize(s)
}

/// One representative per orbit of initial states, sorted by encoding.
pub fn canonical_initial_states(c: &HotelConfig) -> Vec<HotelState> {
    let canon = Canonicalizer::new(c);
    let mut reps: Vec<(Vec<u8>, HotelState)> = enumerate_initial_states(c)
        .iter()
        .map(|s| {
            let rep = canon.canonicalize(s);
            (rep.encoding(c), rep)
        })
        .collect();
    reps.sort_by(|a, b| a.0.cmp(&b.0));
    reps.dedup_by(|a, b| a.0 == b.0);
    reps.into_iter().map(|(_, s)| s).collect()
}

pub fn count_canonical_initial_states(c: &HotelConfig) -> usize {
    canonical_initial_states(c).len()
}
