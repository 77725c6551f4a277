//! Minimal reverse-mode autodiff over `ndarray` matrices, plus the Adam
//! optimizer, early stopping, and checkpoint IO shared by every trainable
//! model in the crate.
//!
//! All tensors are `Array2<f64>`; vectors are 1×D rows. Graphs are built
//! per forward pass (define-by-run) against a [`ParamStore`] that owns the
//! parameters and their optimizer state.

mod ckpt;
mod graph;
mod optim;

pub use ckpt::{load_params, save_params, CheckpointManifest};
pub use graph::{Graph, NodeId};
pub use optim::{Adam, EarlyStopper, StopDecision};

use std::collections::BTreeMap;

use ndarray::Array2;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

/// Handle to one parameter matrix inside a [`ParamStore`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParamId(pub(crate) usize);

#[derive(Debug, Clone)]
pub(crate) struct ParamEntry {
    pub name: String,
    pub value: Array2<f64>,
    pub trainable: bool,
    // Adam state
    pub m: Array2<f64>,
    pub v: Array2<f64>,
}

/// Owns parameter matrices and their optimizer state.
///
/// Parameter names are unique; initialization is seeded per name so the
/// values do not depend on registration order.
#[derive(Debug, Clone, Default)]
pub struct ParamStore {
    entries: Vec<ParamEntry>,
    by_name: BTreeMap<String, usize>,
}

impl ParamStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, name: &str, value: Array2<f64>) -> ParamId {
        assert!(
            !self.by_name.contains_key(name),
            "duplicate parameter name `{name}`"
        );
        let idx = self.entries.len();
        let (r, c) = value.dim();
        self.entries.push(ParamEntry {
            name: name.to_string(),
            value,
            trainable: true,
            m: Array2::zeros((r, c)),
            v: Array2::zeros((r, c)),
        });
        self.by_name.insert(name.to_string(), idx);
        ParamId(idx)
    }

    /// Xavier-uniform initialization, seeded by `(seed, name)`.
    pub fn add_xavier(&mut self, name: &str, rows: usize, cols: usize, seed: u64) -> ParamId {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(name));
        let bound = (6.0 / (rows + cols) as f64).sqrt();
        let value = Array2::from_shape_fn((rows, cols), |_| rng.gen_range(-bound..bound));
        self.add(name, value)
    }

    pub fn add_zeros(&mut self, name: &str, rows: usize, cols: usize) -> ParamId {
        self.add(name, Array2::zeros((rows, cols)))
    }

    pub fn id(&self, name: &str) -> Option<ParamId> {
        self.by_name.get(name).copied().map(ParamId)
    }

    pub fn value(&self, id: ParamId) -> &Array2<f64> {
        &self.entries[id.0].value
    }

    pub fn value_mut(&mut self, id: ParamId) -> &mut Array2<f64> {
        &mut self.entries[id.0].value
    }

    pub fn name(&self, id: ParamId) -> &str {
        &self.entries[id.0].name
    }

    pub fn set_trainable(&mut self, id: ParamId, trainable: bool) {
        self.entries[id.0].trainable = trainable;
    }

    /// Freeze every parameter whose name starts with `prefix`.
    pub fn freeze_prefix(&mut self, prefix: &str) {
        for e in &mut self.entries {
            if e.name.starts_with(prefix) {
                e.trainable = false;
            }
        }
    }

    pub fn ids(&self) -> impl Iterator<Item = ParamId> + '_ {
        (0..self.entries.len()).map(ParamId)
    }

    pub fn param_count(&self) -> usize {
        self.entries.iter().map(|e| e.value.len()).sum()
    }

    /// Content hash over every parameter (names, shapes, and exact bytes).
    pub fn content_hash(&self) -> String {
        self.hash_filtered(|_| true)
    }

    /// Content hash restricted to parameters whose name starts with `prefix`.
    pub fn content_hash_prefix(&self, prefix: &str) -> String {
        self.hash_filtered(|name| name.starts_with(prefix))
    }

    fn hash_filtered(&self, keep: impl Fn(&str) -> bool) -> String {
        let mut hasher = Sha256::new();
        // by_name iteration is sorted, so the hash is order-independent.
        for (name, &idx) in &self.by_name {
            if !keep(name) {
                continue;
            }
            let e = &self.entries[idx];
            hasher.update(name.as_bytes());
            hasher.update((e.value.nrows() as u64).to_le_bytes());
            hasher.update((e.value.ncols() as u64).to_le_bytes());
            for x in e.value.iter() {
                hasher.update(x.to_le_bytes());
            }
        }
        hex_digest(hasher)
    }

    pub(crate) fn entries(&self) -> &[ParamEntry] {
        &self.entries
    }

    pub(crate) fn entries_mut(&mut self) -> &mut Vec<ParamEntry> {
        &mut self.entries
    }

    pub(crate) fn sorted_names(&self) -> impl Iterator<Item = (&String, usize)> {
        self.by_name.iter().map(|(n, &i)| (n, i))
    }
}

pub(crate) fn hex_digest(hasher: Sha256) -> String {
    let bytes = hasher.finalize();
    let mut s = String::with_capacity(64);
    for b in bytes {
        s.push_str(&format!("{b:02x}"));
    }
    s
}

/// FNV-1a over a string; used to derive per-parameter init streams.
pub(crate) fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in s.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Seeded RNG used across the crate; ChaCha keeps streams portable.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derive a child seed from a parent seed and a label.
pub fn derive_seed(seed: u64, label: &str) -> u64 {
    seed ^ fnv1a(label)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn param_hash_ignores_registration_order() {
        let mut a = ParamStore::new();
        a.add_xavier("w1", 3, 4, 7);
        a.add_xavier("w2", 2, 2, 7);
        let mut b = ParamStore::new();
        b.add_xavier("w2", 2, 2, 7);
        b.add_xavier("w1", 3, 4, 7);
        assert_eq!(a.content_hash(), b.content_hash());
    }

    #[test]
    fn xavier_is_deterministic_per_name() {
        let mut a = ParamStore::new();
        let id = a.add_xavier("w", 4, 4, 99);
        let mut b = ParamStore::new();
        let id2 = b.add_xavier("w", 4, 4, 99);
        assert_eq!(a.value(id), b.value(id2));
    }

    #[test]
    fn prefix_hash_tracks_subset() {
        let mut s = ParamStore::new();
        let w = s.add_xavier("text.w", 3, 3, 1);
        s.add_xavier("image.w", 3, 3, 1);
        let before = s.content_hash_prefix("image.");
        s.value_mut(w)[(0, 0)] += 1.0;
        assert_eq!(before, s.content_hash_prefix("image."));
        assert_ne!(s.content_hash(), before);
    }
}
