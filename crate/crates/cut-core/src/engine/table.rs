use crate::engine::{CutSet, NimValueSet};
use crate::{Error, Result};

/// Default cap on stored entries (positions × part-count layers).
pub const DEFAULT_ENTRY_LIMIT: u64 = 1_000_000;

/// Memoized Grundy values 𝒢(n) and nim-sets 𝒩(n, p) for one cut-set.
///
/// Storage is 1-indexed to match the usual tables: `values[m-1] = 𝒢(m)` and
/// `layers[j][m-1] = 𝒩(m, j+1)`. Every layer is complete up to the same
/// position, so extending by one position only ever reads finished entries:
/// 𝒩(m, p) needs 𝒢(h) for h < m and 𝒩(m−h, p−1) for m−h < m, and 𝒢(m)
/// itself is the mex over the freshly built 𝒩(m, d+1).
///
/// Construction is a single logical writer; the `get*` accessors take
/// `&self` and are safe to call concurrently once a prefix is built.
pub struct GrundyTable {
    cuts: CutSet,
    limit: u64,
    values: Vec<u64>,
    layers: Vec<Vec<NimValueSet>>,
}

impl GrundyTable {
    pub fn new(cuts: CutSet) -> Self {
        Self::with_limit(cuts, DEFAULT_ENTRY_LIMIT)
    }

    /// `limit` caps positions × layers; growth past it is a resource-limit
    /// error rather than an unbounded allocation.
    pub fn with_limit(cuts: CutSet, limit: u64) -> Self {
        Self {
            cuts,
            limit,
            values: Vec::new(),
            layers: Vec::new(),
        }
    }

    pub fn cutset(&self) -> &CutSet {
        &self.cuts
    }

    /// Highest position computed so far.
    pub fn computed_to(&self) -> u64 {
        self.values.len() as u64
    }

    /// 𝒢(n), extending the table as needed.
    pub fn grundy(&mut self, n: u64) -> Result<u64> {
        if n == 0 {
            return Err(Error::Domain("pile sizes start at 1".into()));
        }
        self.ensure_positions(n)?;
        Ok(self.values[(n - 1) as usize])
    }

    /// The prefix 𝒢(1..=n_max) as a slice.
    pub fn values(&mut self, n_max: u64) -> Result<&[u64]> {
        if n_max == 0 {
            return Err(Error::Domain("pile sizes start at 1".into()));
        }
        self.ensure_positions(n_max)?;
        Ok(&self.values[..n_max as usize])
    }

    /// 𝒩(n, p): nim-values over all cuts of `n` into exactly `p` parts.
    /// Empty when `n < p`.
    pub fn nim_set(&mut self, n: u64, p: u64) -> Result<NimValueSet> {
        if n == 0 || p == 0 {
            return Err(Error::Domain("nim-sets need n ≥ 1 and p ≥ 1".into()));
        }
        self.ensure_positions(n)?;
        self.ensure_layers(p)?;
        Ok(self.layers[(p - 1) as usize][(n - 1) as usize].clone())
    }

    /// Read-only lookup; `None` if position `n` has not been computed.
    pub fn get(&self, n: u64) -> Option<u64> {
        self.values.get(n.checked_sub(1)? as usize).copied()
    }

    /// True when growing the table to position `n` stays under the entry
    /// cap, so a `grundy(n)` call cannot fail with a resource limit.
    pub fn within_budget(&self, n: u64) -> bool {
        let layer_dim = (self.layers.len() as u64).max((self.cuts.max_cut() + 1).min(n.max(1)));
        let positions = n.max(self.values.len() as u64);
        positions.saturating_mul(layer_dim) <= self.limit
    }

    /// Read-only nim-set lookup; `None` outside the computed region.
    pub fn get_nim_set(&self, n: u64, p: u64) -> Option<&NimValueSet> {
        self.layers
            .get(p.checked_sub(1)? as usize)?
            .get(n.checked_sub(1)? as usize)
    }

    fn check_budget(&self, positions: u64, layer_count: u64) -> Result<()> {
        if positions.saturating_mul(layer_count) > self.limit {
            return Err(Error::ResourceLimit(format!(
                "table for {} would need {positions} positions × {layer_count} layers \
                 (cap {} entries)",
                self.cuts, self.limit
            )));
        }
        Ok(())
    }

    fn ensure_positions(&mut self, n: u64) -> Result<()> {
        let layer_dim = (self.layers.len() as u64).max((self.cuts.max_cut() + 1).min(n.max(1)));
        self.check_budget(n, layer_dim)?;
        while (self.values.len() as u64) < n {
            let m = self.values.len() as u64 + 1;

            // A pile of size m supports part counts up to m; layers beyond
            // that stay empty, so they are created only once m reaches them.
            // Backfill is all-empty: layer j is empty at positions ≤ j, and
            // a new layer j always appears exactly when j = m−1.
            let wanted = ((self.cuts.max_cut() + 1).min(m)) as usize;
            while self.layers.len() < wanted {
                debug_assert_eq!(self.layers.len(), self.values.len());
                self.layers
                    .push(vec![NimValueSet::new(); self.values.len()]);
            }

            for j in 1..self.layers.len() {
                let set = self.compose(m, j);
                self.layers[j].push(set);
            }

            let mut options = NimValueSet::new();
            for &d in self.cuts.cuts() {
                if let Some(layer) = self.layers.get(d as usize) {
                    options.union_with(&layer[(m - 1) as usize]);
                }
            }
            let g = options.mex();
            self.values.push(g);
            self.layers[0].push(NimValueSet::singleton(g));
        }
        Ok(())
    }

    fn ensure_layers(&mut self, p: u64) -> Result<()> {
        self.check_budget(self.values.len() as u64, p)?;
        while (self.layers.len() as u64) < p {
            let j = self.layers.len();
            let mut layer = Vec::with_capacity(self.values.len());
            for m in 1..=self.values.len() as u64 {
                layer.push(self.compose(m, j));
            }
            self.layers.push(layer);
        }
        Ok(())
    }

    /// 𝒩(m, j+1) from the previous layer: strip off a first part h.
    fn compose(&self, m: u64, j: usize) -> NimValueSet {
        let mut out = NimValueSet::new();
        for h in 1..=m.saturating_sub(j as u64) {
            let g = self.values[(h - 1) as usize];
            out.union_xor(&self.layers[j - 1][(m - h - 1) as usize], g);
        }
        out
    }
}
