use crate::bits::BitVector;
use crate::error::{Error, Result};

/// A total boolean function given row by row.
///
/// Row `x` holds the output for the input whose bits, read most significant
/// first, spell the number `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    in_width: usize,
    out_width: usize,
    rows: Vec<u64>,
}

impl TruthTable {
    /// Rows are output values; there must be exactly `2^in_width` of them.
    pub fn new(in_width: usize, out_width: usize, rows: Vec<u64>) -> Result<Self> {
        if in_width >= usize::BITS as usize - 1 || out_width > 64 {
            return Err(Error::width("truth table", 63, in_width.max(out_width)));
        }
        if rows.len() != 1usize << in_width {
            return Err(Error::width("truth table rows", 1 << in_width, rows.len()));
        }
        if out_width < 64 {
            if let Some((x, row)) = rows.iter().enumerate().find(|(_, r)| **r >> out_width != 0) {
                return Err(Error::Validation(format!(
                    "row {x} holds {row}, which does not fit in {out_width} bits"
                )));
            }
        }
        Ok(TruthTable {
            in_width,
            out_width,
            rows,
        })
    }

    pub fn from_fn(in_width: usize, out_width: usize, f: impl Fn(u64) -> u64) -> Result<Self> {
        let rows = (0..1u64 << in_width).map(f).collect();
        TruthTable::new(in_width, out_width, rows)
    }

    pub fn in_width(&self) -> usize {
        self.in_width
    }

    pub fn out_width(&self) -> usize {
        self.out_width
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn row(&self, input: u64) -> u64 {
        self.rows[input as usize]
    }

    pub fn lookup(&self, input: &BitVector) -> Result<BitVector> {
        if input.width() != self.in_width {
            return Err(Error::width("table lookup", self.in_width, input.width()));
        }
        let x = input.value().expect("table inputs fit in 64 bits");
        Ok(BitVector::from_value(self.row(x), self.out_width))
    }

    /// Inputs on which output bit `bit` (0 = most significant) is set.
    pub fn minterms(&self, bit: usize) -> impl Iterator<Item = u64> + '_ {
        let shift = self.out_width - 1 - bit;
        self.rows
            .iter()
            .enumerate()
            .filter(move |(_, r)| (*r >> shift) & 1 == 1)
            .map(|(x, _)| x as u64)
    }
}
