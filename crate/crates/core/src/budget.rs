//! Size limits for the constructions that grow exponentially.

use crate::error::{Error, Result};

/// Environment variable read by [`Budget::from_env`].
pub const BUDGET_ENV: &str = "PATHCIRC_BUDGET";

/// Limits applied before building or checking anything exponential.
///
/// `PATHCIRC_BUDGET` accepts either a bare integer (the gate limit) or a
/// comma-separated list of `key=value` pairs with keys `gates`, `width`,
/// `table` and `graphs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of gates in a compiled circuit.
    pub max_gates: usize,
    /// Maximum input width for exhaustive extensional equality.
    pub max_equiv_width: usize,
    /// Maximum input width of a truth table handed to synthesis.
    pub max_table_width: usize,
    /// Maximum number of graphs tensored into a universal circuit.
    pub max_graphs: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_gates: 1 << 24,
            max_equiv_width: 20,
            max_table_width: 16,
            max_graphs: 1 << 16,
        }
    }
}

impl Budget {
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(spec) => Self::default().with_overrides(&spec),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec.is_empty() {
            return Ok(self);
        }
        if let Ok(gates) = spec.parse::<usize>() {
            self.max_gates = gates;
            return Ok(self);
        }
        for item in spec.split(',') {
            let (key, value) = item.split_once('=').ok_or_else(|| {
                Error::parse(BUDGET_ENV, format!("expected key=value, got `{item}`"))
            })?;
            let value: usize = value.trim().parse().map_err(|_| {
                Error::parse(BUDGET_ENV, format!("`{}` is not a number", value.trim()))
            })?;
            match key.trim() {
                "gates" => self.max_gates = value,
                "width" => self.max_equiv_width = value,
                "table" => self.max_table_width = value,
                "graphs" => self.max_graphs = value,
                other => {
                    return Err(Error::parse(
                        BUDGET_ENV,
                        format!("unknown budget key `{other}`"),
                    ))
                }
            }
        }
        Ok(self)
    }

    pub fn check_gates(&self, gates: u128) -> Result<()> {
        check("gate count", gates, self.max_gates)
    }

    pub fn check_equiv_width(&self, width: usize) -> Result<()> {
        check(
            "equivalence input width",
            width as u128,
            self.max_equiv_width,
        )
    }

    pub fn check_table_width(&self, width: usize) -> Result<()> {
        check(
            "truth table input width",
            width as u128,
            self.max_table_width,
        )
    }

    pub fn check_graphs(&self, graphs: u128) -> Result<()> {
        check("graph count", graphs, self.max_graphs)
    }
}

fn check(what: &'static str, requested: u128, limit: usize) -> Result<()> {
    if requested > limit as u128 {
        Err(Error::Budget {
            what,
            requested,
            limit: limit as u128,
        })
    } else {
        Ok(())
    }
}
