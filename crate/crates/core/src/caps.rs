//! Resource caps.  Runaway computations surface as explicit errors, never as
//! silently truncated output.

use serde::{Deserialize, Serialize};

pub const CAPS_ENV_VAR: &str = "REES_ACI_CAPS";

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", default)]
pub struct Caps {
    /// S-pairs processed per Buchberger run.
    pub max_spairs: usize,
    /// Basis members per Buchberger run.
    pub max_basis: usize,
    /// Largest exponent allowed in any intermediate monomial.
    pub max_exponent: u64,
    /// Minimal generators admitted by the lcm-lattice builder.
    pub max_lattice_generators: usize,
    /// Multidegrees admitted in one lcm lattice.
    pub max_lattice_size: usize,
    /// Minimal generators admitted by the independent Betti oracle.
    pub max_taylor_generators: usize,
    /// Reduction-number search runs up to `|b| + reduction_extra`.
    pub reduction_extra: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_spairs: 250_000,
            max_basis: 8_192,
            max_exponent: 1 << 20,
            max_lattice_generators: 24,
            max_lattice_size: 200_000,
            max_taylor_generators: 12,
            reduction_extra: 2,
        }
    }
}

impl Caps {
    /// Apply `key=value` overrides from a comma-separated list, as accepted in
    /// the `REES_ACI_CAPS` environment variable.
    pub fn apply_overrides(&mut self, spec: &str) -> Result<(), String> {
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| format!("malformed caps entry `{part}` (want key=value)"))?;
            let value: u64 = value
                .trim()
                .parse()
                .map_err(|_| format!("malformed caps value in `{part}`"))?;
            match key.trim() {
                "max_spairs" => self.max_spairs = value as usize,
                "max_basis" => self.max_basis = value as usize,
                "max_exponent" => self.max_exponent = value,
                "max_lattice_generators" => self.max_lattice_generators = value as usize,
                "max_lattice_size" => self.max_lattice_size = value as usize,
                "max_taylor_generators" => self.max_taylor_generators = value as usize,
                "reduction_extra" => self.reduction_extra = value,
                other => return Err(format!("unknown caps key `{other}`")),
            }
        }
        Ok(())
    }

    /// Defaults, then overrides from the environment when present.
    pub fn from_env() -> Result<Self, String> {
        let mut caps = Caps::default();
        if let Ok(spec) = std::env::var(CAPS_ENV_VAR) {
            caps.apply_overrides(&spec)?;
        }
        Ok(caps)
    }
}
