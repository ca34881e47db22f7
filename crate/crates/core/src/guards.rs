//! Desk-scale limits on the brute-force routines.

/// Environment variable that lifts every guard when set to a non-empty,
/// non-`0` value.
pub const GUARD_OVERRIDE_ENV: &str = "DYCKGEN_GUARD_OVERRIDE";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Largest ceiling accepted by the direct determinant routines.
    pub direct_det_max_k: usize,
    /// Largest `k·N` accepted by the enumerative bosonic partition functions.
    pub enum_kn_max: usize,
    /// Largest path length accepted by the oracle enumerator.
    pub oracle_len_max: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            direct_det_max_k: 32,
            enum_kn_max: 36,
            oracle_len_max: 24,
        }
    }
}

impl Guards {
    pub fn unlimited() -> Self {
        Guards {
            direct_det_max_k: usize::MAX,
            enum_kn_max: usize::MAX,
            oracle_len_max: usize::MAX,
        }
    }

    /// Defaults, or [`Guards::unlimited`] when the override variable is set.
    pub fn from_env() -> Self {
        match std::env::var(GUARD_OVERRIDE_ENV) {
            Ok(v) if !v.is_empty() && v != "0" => Self::unlimited(),
            _ => Self::default(),
        }
    }
}
