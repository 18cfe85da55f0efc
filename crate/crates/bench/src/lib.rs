//! Shared fixtures for the benchmarks.

use hotelmc_core::{HotelConfig, HotelSystem};

pub fn hotel(n: usize, tla_no_intervening: bool) -> HotelSystem {
    HotelSystem::new(HotelConfig::uniform(n).expect("small n")).with_tla_no_intervening(tla_no_intervening)
}
