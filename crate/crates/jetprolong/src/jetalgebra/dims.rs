use crate::{JetError, Result};

/// Dimension context: `n` independent variables `x^1..x^n` and `m` dependent
/// variables `y^1..y^m`. Both counts are at least one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dims {
    n: u32,
    m: u32,
}

impl Dims {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(JetError::Domain(format!(
                "dimensions must be positive, got n={n} m={m}"
            )));
        }
        Ok(Dims { n, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Validates an independent-variable index `i` in `1..=n`.
    pub fn check_x(&self, i: u32) -> Result<()> {
        if i == 0 || i > self.n {
            Err(JetError::IndexOutOfRange {
                what: "independent",
                index: i,
                bound: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Validates a dependent-variable index `j` in `1..=m`.
    pub fn check_y(&self, j: u32) -> Result<()> {
        if j == 0 || j > self.m {
            Err(JetError::IndexOutOfRange {
                what: "dependent",
                index: j,
                bound: self.m,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn ensure_same(&self, other: &Dims) -> Result<()> {
        if self != other {
            Err(JetError::DimsMismatch {
                left: (self.n, self.m),
                right: (other.n, other.m),
            })
        } else {
            Ok(())
        }
    }
}
