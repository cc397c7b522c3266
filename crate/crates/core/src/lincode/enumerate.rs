//! Exhaustive codeword enumeration.
//!
//! A code of dimension `k` over GF(p^m) is an F_p-space of dimension `k*m`
//! spanned by the rows `w^l * g_i`. Words are visited in p-ary modular Gray
//! order, so every step adds exactly one F_p basis row: the step from counter
//! `c - 1` to `c` adds row `v_p(c)`, the number of trailing zero base-p
//! digits of `c`. The top digits are split off as a prefix and each prefix
//! block is an independent task for rayon.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::field::FieldElement;

/// The code as an F_p-basis over flattened digit words of length `n*m`.
pub(crate) struct PrimeBasis {
    p: u64,
    m: usize,
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl PrimeBasis {
    /// `rows` must be linearly independent over GF(p^m).
    pub(crate) fn new(rows: &[Vec<FieldElement>], n: usize, gen: &FieldElement) -> Self {
        let spec = gen.spec();
        let (p, m) = (spec.p(), spec.m());
        let mut basis = Vec::with_capacity(rows.len() * m);
        for row in rows {
            let mut scaled = row.clone();
            for _ in 0..m {
                basis.push(
                    scaled
                        .iter()
                        .flat_map(|e| e.digits().iter().copied())
                        .collect(),
                );
                scaled = scaled.iter().map(|e| e * gen).collect();
            }
        }
        PrimeBasis {
            p,
            m,
            n,
            rows: basis,
        }
    }

    pub(crate) fn dimension(&self) -> usize {
        self.rows.len()
    }

    fn add_row(&self, word: &mut [u64], row: usize) {
        let p = self.p;
        for (w, &r) in word.iter_mut().zip(&self.rows[row]) {
            let s = *w + r;
            *w = if s >= p || s < *w {
                s.wrapping_sub(p)
            } else {
                s
            };
        }
    }

    fn add_scaled_row(&self, word: &mut [u64], row: usize, c: u64) {
        let p = self.p as u128;
        for (w, &r) in word.iter_mut().zip(&self.rows[row]) {
            *w = ((*w as u128 + c as u128 * r as u128) % p) as u64;
        }
    }

    fn weight(&self, word: &[u64]) -> usize {
        if self.m == 1 {
            word.iter().filter(|&&d| d != 0).count()
        } else {
            word.chunks(self.m)
                .filter(|c| c.iter().any(|&d| d != 0))
                .count()
        }
    }

    /// Splits the F_p digits into (prefix count, block count) so that there
    /// are enough blocks to keep every worker busy.
    fn split(&self) -> (usize, u64) {
        let dim = self.dimension();
        let mut prefix = 0usize;
        let mut blocks = 1u64;
        while prefix < dim && blocks < 256 {
            prefix += 1;
            blocks = blocks.saturating_mul(self.p);
        }
        (prefix, blocks)
    }

    /// Walks one prefix block, calling `visit(weight)` for every word.
    /// `visit` returns `false` to stop early.
    fn walk_block(&self, prefix_len: usize, block: u64, mut visit: impl FnMut(usize) -> bool) {
        let low = self.dimension() - prefix_len;
        let mut word = vec![0u64; self.n * self.m];
        let mut b = block;
        for i in 0..prefix_len {
            let digit = b % self.p;
            b /= self.p;
            self.add_scaled_row(&mut word, low + i, digit);
        }
        if !visit(self.weight(&word)) {
            return;
        }
        let count = self.p.pow(low as u32);
        for c in 1..count {
            let mut i = 0;
            let mut x = c;
            while x % self.p == 0 {
                x /= self.p;
                i += 1;
            }
            self.add_row(&mut word, i);
            if !visit(self.weight(&word)) {
                return;
            }
        }
    }

    /// Minimum nonzero weight; `None` for the zero code.
    pub(crate) fn min_weight(&self) -> Option<usize> {
        if self.dimension() == 0 {
            return None;
        }
        let best = AtomicUsize::new(usize::MAX);
        let (prefix, blocks) = self.split();
        (0..blocks).into_par_iter().for_each(|block| {
            let mut local = best.load(Ordering::Relaxed);
            let mut seen = 0u32;
            self.walk_block(prefix, block, |w| {
                if w != 0 && w < local {
                    local = w;
                    best.fetch_min(w, Ordering::Relaxed);
                }
                seen = seen.wrapping_add(1);
                if seen.is_multiple_of(4096) {
                    local = local.min(best.load(Ordering::Relaxed));
                }
                local > 1
            });
        });
        Some(best.into_inner())
    }

    /// Number of codewords of each weight `0..=n`.
    pub(crate) fn weight_distribution(&self) -> Vec<u128> {
        let (prefix, blocks) = self.split();
        (0..blocks)
            .into_par_iter()
            .map(|block| {
                let mut hist = vec![0u128; self.n + 1];
                self.walk_block(prefix, block, |w| {
                    hist[w] += 1;
                    true
                });
                hist
            })
            .reduce(
                || vec![0u128; self.n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    }

    /// Every codeword, as flattened digit vectors, in visiting order.
    pub(crate) fn words(&self) -> Vec<Vec<u64>> {
        let dim = self.dimension();
        let mut out = Vec::new();
        let mut word = vec![0u64; self.n * self.m];
        out.push(word.clone());
        let count = self.p.pow(dim as u32);
        for c in 1..count {
            let mut i = 0;
            let mut x = c;
            while x % self.p == 0 {
                x /= self.p;
                i += 1;
            }
            self.add_row(&mut word, i);
            out.push(word.clone());
        }
        out
    }
}
