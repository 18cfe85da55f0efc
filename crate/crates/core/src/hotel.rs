//! The hotel protocol packaged as a [`TransitionSystem`].

use std::sync::OnceLock;

use crate::checker::{Property, TransitionSystem};
use crate::model::{
    enabled_steps, enumerate_initial_states, no_bad_entry_step, no_intervening_tla_ok, type_inv, ActionLabel,
    HotelConfig, HotelState,
};
use crate::symmetry::Canonicalizer;

/// How the "enter right after checking in" restriction is imposed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum NoIntervening {
    #[default]
    Off,
    /// Three-instant look-ahead: a checkin must be followed by the matching
    /// entry unless it is the last step of the trace.
    Alloy,
    /// Step filter: while the checkin post-condition holds, only the
    /// matching entry may happen.
    Tla,
}

/// Next-state relation `Act ∧ TypeInv'`, optionally conjoined with the
/// step-filter form of `NoIntervening`.
#[derive(Clone, Debug)]
pub struct HotelSystem {
    config: HotelConfig,
    tla_no_intervening: bool,
    type_inv_filter: bool,
    initial: Option<Vec<HotelState>>,
    canon: OnceLock<Canonicalizer>,
}

impl HotelSystem {
    pub fn new(config: HotelConfig) -> Self {
        HotelSystem {
            canon: OnceLock::new(),
            config,
            tla_no_intervening: false,
            type_inv_filter: true,
            initial: None,
        }
    }

    pub fn with_tla_no_intervening(mut self, on: bool) -> Self {
        self.tla_no_intervening = on;
        self
    }

    /// Drops successors violating the type invariant. On by default; the
    /// actions preserve it, so this never prunes anything.
    pub fn with_type_inv_filter(mut self, on: bool) -> Self {
        self.type_inv_filter = on;
        self
    }

    /// Replaces the enumerated initial states with an explicit list.
    pub fn with_initial_states(mut self, initial: Vec<HotelState>) -> Self {
        self.initial = Some(initial);
        self
    }

    pub fn config(&self) -> &HotelConfig {
        &self.config
    }

    pub fn tla_no_intervening(&self) -> bool {
        self.tla_no_intervening
    }

    pub fn canonicalizer(&self) -> &Canonicalizer {
        self.canon.get_or_init(|| Canonicalizer::new(&self.config))
    }
}

impl TransitionSystem for HotelSystem {
    type State = HotelState;
    type Label = ActionLabel;

    fn initial_states(&self) -> Vec<HotelState> {
        match &self.initial {
            Some(init) => init.clone(),
            None => enumerate_initial_states(&self.config),
        }
    }

    fn successors(&self, state: &HotelState) -> Vec<(ActionLabel, HotelState)> {
        let mut steps = enabled_steps(state);
        if self.tla_no_intervening {
            steps.retain(|(label, _)| no_intervening_tla_ok(state, label));
        }
        if self.type_inv_filter {
            steps.retain(|(_, next)| type_inv(next, &self.config));
        }
        steps
    }

    fn encode(&self, state: &HotelState, out: &mut Vec<u8>) {
        state.encode(&self.config, out);
    }

    fn encode_label(&self, label: &ActionLabel, out: &mut Vec<u8>) {
        label.encode(out);
    }

    fn canonicalize(&self, state: &HotelState) -> Option<HotelState> {
        Some(self.canonicalizer().canonicalize(state))
    }

    fn required_next(&self, label: &ActionLabel) -> Option<ActionLabel> {
        match *label {
            ActionLabel::Checkin { guest, room, key } => Some(ActionLabel::Entry { guest, room, key }),
            _ => None,
        }
    }
}

/// `NoBadEntry` as a box-action property.
pub fn no_bad_entry() -> Property<HotelState, ActionLabel> {
    Property::step("NoBadEntry", no_bad_entry_step)
}
