//! Lexicographic enumeration of integer boxes `{0..=cap}^m` with
//! constraints checked as soon as their last coordinate is fixed.
//!
//! Work is split into blocks by a fixed-length prefix; blocks run in
//! parallel and the reducer keeps the hit from the earliest block, so the
//! answer is the scan-order minimum whatever the thread count.

use rayon::prelude::*;

use crate::budget::{Budget, BudgetExceeded};

/// A linear test over integer coordinates.
#[derive(Debug, Clone)]
pub(crate) enum Constraint {
    /// `Σ x_e` over the edge set is even.
    Even(Vec<usize>),
    /// `Σ c_e x_e <= rhs`.
    AtMost { terms: Vec<(usize, i64)>, rhs: i64 },
}

impl Constraint {
    fn last(&self) -> Option<usize> {
        match self {
            Constraint::Even(e) => e.iter().copied().max(),
            Constraint::AtMost { terms, .. } => terms.iter().map(|t| t.0).max(),
        }
    }

    #[inline]
    fn holds(&self, x: &[u8]) -> bool {
        match self {
            Constraint::Even(edges) => edges.iter().map(|&e| x[e] as u32).sum::<u32>() % 2 == 0,
            Constraint::AtMost { terms, rhs } => {
                terms.iter().map(|&(e, c)| c * x[e] as i64).sum::<i64>() <= *rhs
            }
        }
    }
}

const TICK_BATCH: u64 = 1 << 12;

pub(crate) struct BoxScan {
    m: usize,
    cap: u8,
    at: Vec<Vec<Constraint>>,
    trivial: Vec<Constraint>,
}

impl BoxScan {
    pub(crate) fn new(m: usize, cap: u8, constraints: Vec<Constraint>) -> Self {
        let mut at = vec![Vec::new(); m];
        let mut trivial = Vec::new();
        for c in constraints {
            match c.last() {
                Some(i) => at[i].push(c),
                None => trivial.push(c),
            }
        }
        BoxScan {
            m,
            cap,
            at,
            trivial,
        }
    }

    #[inline]
    fn ok_at(&self, pos: usize, x: &[u8]) -> bool {
        self.at[pos].iter().all(|c| c.holds(x))
    }

    /// Valid prefixes of length `len`, in lexicographic order.
    fn prefixes(&self, len: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        let mut x = vec![0u8; self.m];
        self.collect_prefixes(0, len, &mut x, &mut out);
        out
    }

    fn collect_prefixes(&self, pos: usize, len: usize, x: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if pos == len {
            out.push(x[..len].to_vec());
            return;
        }
        for v in 0..=self.cap {
            x[pos] = v;
            if self.ok_at(pos, x) {
                self.collect_prefixes(pos + 1, len, x, out);
            }
        }
        x[pos] = 0;
    }

    fn prefix_len(&self) -> usize {
        let threads = rayon::current_num_threads().max(1);
        let mut len = 0;
        let mut blocks = 1usize;
        while len < self.m && blocks < 16 * threads {
            blocks = blocks.saturating_mul(self.cap as usize + 1);
            len += 1;
        }
        len
    }

    /// First point in lexicographic order for which `visit` returns
    /// `Some`. `init` builds per-block scratch state.
    pub(crate) fn find_first<S, T, I, F>(
        &self,
        budget: &Budget,
        init: I,
        visit: F,
    ) -> Result<Option<T>, BudgetExceeded>
    where
        T: Send,
        I: Fn() -> S + Sync,
        F: Fn(&mut S, &[u8]) -> Option<T> + Sync,
    {
        if !self.trivial.iter().all(|c| c.holds(&[])) {
            return Ok(None);
        }
        let len = self.prefix_len();
        let blocks = self.prefixes(len);
        let found = blocks.par_iter().find_map_first(|prefix| {
            let mut state = init();
            let mut x = vec![0u8; self.m];
            x[..len].copy_from_slice(prefix);
            let mut walk = Walk {
                scan: self,
                budget,
                pending: 0,
                state: &mut state,
                visit: &visit,
            };
            match walk.dfs(len, &mut x) {
                Ok(Some(t)) => Some(Ok(t)),
                Ok(None) => walk.flush().err().map(Err),
                Err(e) => Some(Err(e)),
            }
        });
        found.transpose()
    }
}

struct Walk<'a, S, F> {
    scan: &'a BoxScan,
    budget: &'a Budget,
    pending: u64,
    state: &'a mut S,
    visit: &'a F,
}

impl<S, T, F> Walk<'_, S, F>
where
    F: Fn(&mut S, &[u8]) -> Option<T>,
{
    fn flush(&mut self) -> Result<(), BudgetExceeded> {
        let p = std::mem::take(&mut self.pending);
        self.budget.spend(p)
    }

    fn dfs(&mut self, pos: usize, x: &mut Vec<u8>) -> Result<Option<T>, BudgetExceeded> {
        self.pending += 1;
        if self.pending >= TICK_BATCH {
            self.flush()?;
        }
        if pos == self.scan.m {
            return Ok((self.visit)(self.state, x));
        }
        for v in 0..=self.scan.cap {
            x[pos] = v;
            if self.scan.ok_at(pos, x) {
                if let Some(t) = self.dfs(pos + 1, x)? {
                    return Ok(Some(t));
                }
            }
        }
        x[pos] = 0;
        Ok(None)
    }
}
