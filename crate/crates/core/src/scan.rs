//! Tuple scans used by every law check.
//!
//! Carriers up to the exhaustive limit are scanned completely. Larger carriers
//! fall back to a fixed-seed random sample and log a warning, so results stay
//! reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Triples are scanned exhaustively up to this carrier size.
pub const EXHAUSTIVE_TRIPLES: usize = 16;
/// Quadruples and quintuples are scanned exhaustively up to this carrier size.
pub const EXHAUSTIVE_WIDE: usize = 8;

const SAMPLE_COUNT: u64 = 1 << 16;
const SAMPLE_SEED: u64 = 0x7275_7373;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Scan<const K: usize> {
    pub cases: u64,
    pub exhaustive: bool,
    pub witness: Option<[usize; K]>,
}

impl<const K: usize> Scan<K> {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    pub fn into_result(self) -> Result<(), [usize; K]> {
        match self.witness {
            None => Ok(()),
            Some(w) => Err(w),
        }
    }
}

/// Default exhaustive limit for tuples of width `K`.
pub const fn default_limit(k: usize) -> usize {
    if k <= 3 {
        EXHAUSTIVE_TRIPLES
    } else {
        EXHAUSTIVE_WIDE
    }
}

/// Finds the first tuple (in lexicographic order) where `holds` is false.
pub fn scan<const K: usize>(n: usize, holds: impl FnMut([usize; K]) -> bool) -> Scan<K> {
    scan_with_limit(n, default_limit(K), holds)
}

pub fn scan_with_limit<const K: usize>(n: usize, limit: usize, mut holds: impl FnMut([usize; K]) -> bool) -> Scan<K> {
    if n == 0 {
        return Scan {
            cases: 0,
            exhaustive: true,
            witness: None,
        };
    }
    if n <= limit {
        let mut t = [0usize; K];
        let mut cases = 0u64;
        loop {
            cases += 1;
            if !holds(t) {
                return Scan {
                    cases,
                    exhaustive: true,
                    witness: Some(t),
                };
            }
            // odometer, last coordinate fastest
            let mut i = K;
            loop {
                if i == 0 {
                    return Scan {
                        cases,
                        exhaustive: true,
                        witness: None,
                    };
                }
                i -= 1;
                t[i] += 1;
                if t[i] < n {
                    break;
                }
                t[i] = 0;
            }
        }
    }
    log::warn!("carrier of size {n} exceeds exhaustive limit {limit} for {K}-tuples; sampling {SAMPLE_COUNT} tuples");
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ (n as u64) ^ ((K as u64) << 32));
    for i in 0..SAMPLE_COUNT {
        let mut t = [0usize; K];
        for x in t.iter_mut() {
            *x = rng.gen_range(0..n);
        }
        if !holds(t) {
            return Scan {
                cases: i + 1,
                exhaustive: false,
                witness: Some(t),
            };
        }
    }
    Scan {
        cases: SAMPLE_COUNT,
        exhaustive: false,
        witness: None,
    }
}
