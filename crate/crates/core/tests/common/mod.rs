//! Shared fixtures; the oracle itself lives in `liaison::oracle`.
#![allow(dead_code, unused_imports)]

use std::sync::Arc;

use liaison::{parse_ideal, Ideal, Ring};

pub use liaison::oracle::*;

pub fn ideal(ring: &Arc<Ring>, text: &str) -> Ideal {
    parse_ideal(text, ring).unwrap()
}

pub fn ring(vars: &[&str]) -> Arc<Ring> {
    Ring::grevlex(vars).unwrap()
}
