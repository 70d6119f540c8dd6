//! Mode systems: how many boson modes exist and which pairs are coupled.

use alloc::vec;
use alloc::vec::Vec;

/// A family of `n` boson modes together with the scalar commutators
/// `[a_i, a_j+] = kappa[i][j]` with entries in `{0, 1}`.
///
/// Creators commute among themselves, annihilators commute among themselves,
/// and `[a_i, a_j+]` is the only nontrivial bracket. The diagonal is always 1:
/// each mode on its own is an ordinary boson.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModeSystem {
    n: usize,
    /// Row-major `n * n` matrix; `kappa[(i-1) * n + (j-1)]` is `[a_i, a_j+]`.
    kappa: Vec<bool>,
}

impl ModeSystem {
    /// The coupled preset: `[a_i, a_j+] = 1` for every pair of modes.
    pub fn coupled(n: usize) -> ModeSystem {
        assert!(n >= 1, "a mode system needs at least one mode");
        ModeSystem {
            n,
            kappa: vec![true; n * n],
        }
    }

    /// The noncoupled preset: `[a_i, a_j+] = 1` only for `i = j`.
    pub fn noncoupled(n: usize) -> ModeSystem {
        assert!(n >= 1, "a mode system needs at least one mode");
        let mut kappa = vec![false; n * n];
        for i in 0..n {
            kappa[i * n + i] = true;
        }
        ModeSystem { n, kappa }
    }

    /// A custom coupling matrix. Returns `None` unless the matrix is square
    /// with a unit diagonal.
    pub fn from_matrix(rows: Vec<Vec<bool>>) -> Option<ModeSystem> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return None;
        }
        if (0..n).any(|i| !rows[i][i]) {
            return None;
        }
        let kappa = rows.into_iter().flatten().collect();
        Some(ModeSystem { n, kappa })
    }

    /// Number of modes.
    pub fn modes(&self) -> usize {
        self.n
    }

    /// The commutator `[a_i, a_j+]`, with 1-based mode indices.
    pub fn kappa(&self, i: u32, j: u32) -> bool {
        let (i, j) = (i as usize, j as usize);
        assert!(
            (1..=self.n).contains(&i) && (1..=self.n).contains(&j),
            "mode index out of range"
        );
        self.kappa[(i - 1) * self.n + (j - 1)]
    }

    /// True if this is exactly the coupled preset.
    pub fn is_coupled(&self) -> bool {
        self.kappa.iter().all(|&k| k)
    }

    /// True if this is exactly the noncoupled preset.
    pub fn is_noncoupled(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.kappa[i * self.n + j] == (i == j)))
    }
}
