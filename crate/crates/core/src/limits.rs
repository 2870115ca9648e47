//! Process-wide resource limits.
//!
//! The conductor limit bounds the cyclotomic fields the library will build;
//! the degree limit is advisory for front-ends (core operations themselves
//! are not degree-capped, so that internal verification can form products of
//! high degree). Both are set once by an embedding application before any
//! computation starts.

use std::sync::atomic::{AtomicI64, AtomicU32, Ordering};

pub const DEFAULT_CONDUCTOR_LIMIT: u32 = 256;
pub const DEFAULT_DEGREE_LIMIT: i64 = 64;

static CONDUCTOR_LIMIT: AtomicU32 = AtomicU32::new(DEFAULT_CONDUCTOR_LIMIT);
static DEGREE_LIMIT: AtomicI64 = AtomicI64::new(DEFAULT_DEGREE_LIMIT);

pub fn conductor_limit() -> u32 {
    CONDUCTOR_LIMIT.load(Ordering::Relaxed)
}

pub fn set_conductor_limit(limit: u32) {
    CONDUCTOR_LIMIT.store(limit.max(1), Ordering::Relaxed);
}

pub fn degree_limit() -> i64 {
    DEGREE_LIMIT.load(Ordering::Relaxed)
}

pub fn set_degree_limit(limit: i64) {
    DEGREE_LIMIT.store(limit.max(1), Ordering::Relaxed);
}
