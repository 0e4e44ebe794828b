use super::Circuit;
use crate::bits::{lane_mask, packed_inputs};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Exhaustive extensional equality: do both circuits compute the same
/// function on all `2^n_inputs` inputs?
pub fn ext_equal(c1: &Circuit, c2: &Circuit, max_width: usize) -> Result<bool> {
    let budget = Budget {
        max_equiv_width: max_width,
        ..Budget::default()
    };
    ext_equal_with_budget(c1, c2, &budget)
}

pub fn ext_equal_with_budget(c1: &Circuit, c2: &Circuit, budget: &Budget) -> Result<bool> {
    if c1.n_inputs() != c2.n_inputs() {
        return Err(Error::width(
            "ext_equal inputs",
            c1.n_inputs(),
            c2.n_inputs(),
        ));
    }
    if c1.n_outputs() != c2.n_outputs() {
        return Err(Error::width(
            "ext_equal outputs",
            c1.n_outputs(),
            c2.n_outputs(),
        ));
    }
    let width = c1.n_inputs();
    budget.check_equiv_width(width)?;
    let total = 1u64 << width;
    let mut base = 0;
    while base < total {
        let inputs = packed_inputs(width, base);
        let mask = lane_mask(width, base);
        let a = c1.eval_packed(&inputs)?;
        let b = c2.eval_packed(&inputs)?;
        if a.iter().zip(&b).any(|(x, y)| (x ^ y) & mask != 0) {
            return Ok(false);
        }
        base += 64;
    }
    Ok(true)
}
