use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The group H_n x R^k, named by the Heisenberg index `n` and the Euclidean
/// factor dimension `k`. `n = 0` denotes plain Euclidean space R^k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub n: u32,
    pub k: u32,
}

impl GroupSpec {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if n + k == 0 {
            return Err(Error::domain("GroupSpec", "n + k must be >= 1"));
        }
        Ok(GroupSpec { n, k })
    }

    /// Homogeneous dimension: Q = 2n + 2 + k for n >= 1, Q = k for n = 0.
    pub fn homogeneous_dimension(&self) -> u32 {
        if self.n >= 1 {
            2 * self.n + 2 + self.k
        } else {
            self.k
        }
    }

    /// The Heisenberg factor alone, (n, 0).
    pub fn heisenberg_factor(&self) -> Result<GroupSpec> {
        GroupSpec::new(self.n, 0)
    }

    pub fn is_euclidean(&self) -> bool {
        self.n == 0
    }
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.n, self.k) {
            (0, k) => write!(f, "R^{k}"),
            (n, 0) => write!(f, "H_{n}"),
            (n, k) => write!(f, "H_{n} x R^{k}"),
        }
    }
}
