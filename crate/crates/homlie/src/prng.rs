//! Deterministic pseudo-random rationals for sampling-style guards.
//!
//! A fixed-seed xorshift generator; identical inputs always produce the
//! identical stream, so report bodies stay byte-stable.

use crate::linalg::Vector;
use crate::rational::ratio;

#[derive(Debug, Clone)]
pub struct DeterministicRng {
    state: u64,
}

impl DeterministicRng {
    pub fn new(seed: u64) -> Self {
        DeterministicRng {
            state: seed | 1,
        }
    }

    fn next_u64(&mut self) -> u64 {
        // xorshift64*
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Small rational with numerator in -9..=9 and denominator in 1..=3.
    pub fn small_rational(&mut self) -> crate::rational::Scalar {
        let n = (self.next_u64() % 19) as i64 - 9;
        let d = (self.next_u64() % 3) as i64 + 1;
        ratio(n, d)
    }

    pub fn vector(&mut self, dim: usize) -> Vector {
        (0..dim).map(|_| self.small_rational()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_is_reproducible() {
        let mut a = DeterministicRng::new(42);
        let mut b = DeterministicRng::new(42);
        for _ in 0..100 {
            assert_eq!(a.small_rational(), b.small_rational());
        }
    }
}
