use alloc::vec;
use alloc::vec::Vec;

/// Segment length of the incremental sieve.
pub const BLOCK: u64 = 1 << 20;

fn small_primes(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

fn isqrt(n: u64) -> u64 {
    let mut r = libm::sqrt(n as f64) as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Primes `≤ cap` in increasing order, sieved one block at a time so memory
/// stays at `O(√cap + BLOCK)`.
#[derive(Debug, Clone)]
pub struct PrimeSieve {
    cap: u64,
    base: Vec<u64>,
    block_start: u64,
    block: Vec<bool>,
    pos: usize,
}

impl PrimeSieve {
    pub fn new(cap: u64) -> Self {
        Self {
            cap,
            base: small_primes(isqrt(cap)),
            block_start: 0,
            block: Vec::new(),
            pos: 0,
        }
    }

    fn fill_next_block(&mut self) -> bool {
        let start = if self.block.is_empty() && self.block_start == 0 {
            0
        } else {
            self.block_start + self.block.len() as u64
        };
        if start > self.cap {
            return false;
        }
        let end = (start + BLOCK - 1).min(self.cap);
        let len = (end - start + 1) as usize;
        let mut is_prime = vec![true; len];
        for v in start..start.saturating_add(2).min(end + 1) {
            if v < 2 {
                is_prime[(v - start) as usize] = false;
            }
        }
        for &q in &self.base {
            if q * q > end {
                break;
            }
            let first = (q * q).max(start.div_ceil(q) * q);
            let mut m = first;
            while m <= end {
                is_prime[(m - start) as usize] = false;
                m += q;
            }
        }
        self.block_start = start;
        self.block = is_prime;
        self.pos = 0;
        true
    }
}

impl Iterator for PrimeSieve {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            while self.pos < self.block.len() {
                let i = self.pos;
                self.pos += 1;
                if self.block[i] {
                    return Some(self.block_start + i as u64);
                }
            }
            if !self.fill_next_block() {
                return None;
            }
        }
    }
}
