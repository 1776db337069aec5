//! Size limits shared by the enumeration, algebra and tensor layers.

/// Environment variable overriding [`Limits::max_n`].
pub const MAX_N_ENV: &str = "HY_MAX_N";

pub const DEFAULT_MAX_N: usize = 7;
pub const DEFAULT_CHECK_MAX_N: usize = 5;
pub const DEFAULT_TENSOR_CAP: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of boxes for enumeration and operator construction.
    pub max_n: usize,
    /// Largest degree for the exhaustive primitivity / inequivalence loops.
    pub check_max_n: usize,
    /// Largest admissible `N^n` for tensor realizations.
    pub tensor_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: DEFAULT_MAX_N,
            check_max_n: DEFAULT_CHECK_MAX_N,
            tensor_cap: DEFAULT_TENSOR_CAP,
        }
    }
}

impl Limits {
    /// Defaults with `max_n` taken from `HY_MAX_N` when it is set and parses.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(n) = std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            limits.max_n = n;
        }
        limits
    }

    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n = max_n;
        self
    }

    pub(crate) fn check_n(&self, n: usize) -> crate::Result<()> {
        if n == 0 || n > self.max_n {
            return Err(crate::Error::OutOfRange { n, max: self.max_n });
        }
        Ok(())
    }
}
