use super::Dims;
use crate::Result;

/// Which component of the vector field a symbol differentiates: `Y(j)` is the
/// coefficient of `∂/∂y^j`, `X(k)` the coefficient of `∂/∂x^k`.
///
/// `Y` sorts before `X` so that brackets render in the conventional
/// `[A·Y − B·X]` order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Head {
    Y(u32),
    X(u32),
}

impl Head {
    pub fn index(&self) -> u32 {
        match *self {
            Head::Y(j) => j,
            Head::X(k) => k,
        }
    }

    pub fn is_x(&self) -> bool {
        matches!(self, Head::X(_))
    }

    pub fn is_y(&self) -> bool {
        matches!(self, Head::Y(_))
    }
}

/// One partial derivative of a vector-field component, e.g. the symbol for
/// `∂³X^2 / ∂x^1 ∂y^1 ∂y^3`. The order-zero symbol is the undifferentiated
/// component itself.
///
/// Index multisets are kept sorted, which is the canonical form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DerivativeSymbol {
    head: Head,
    x_indices: Vec<u32>,
    y_indices: Vec<u32>,
}

impl DerivativeSymbol {
    pub fn new(dims: &Dims, head: Head, x_indices: Vec<u32>, y_indices: Vec<u32>) -> Result<Self> {
        match head {
            Head::Y(j) => dims.check_y(j)?,
            Head::X(k) => dims.check_x(k)?,
        }
        let mut x_indices = x_indices;
        let mut y_indices = y_indices;
        for &i in &x_indices {
            dims.check_x(i)?;
        }
        for &l in &y_indices {
            dims.check_y(l)?;
        }
        x_indices.sort_unstable();
        y_indices.sort_unstable();
        Ok(DerivativeSymbol {
            head,
            x_indices,
            y_indices,
        })
    }

    /// The undifferentiated component.
    pub fn component(dims: &Dims, head: Head) -> Result<Self> {
        Self::new(dims, head, Vec::new(), Vec::new())
    }

    pub fn head(&self) -> Head {
        self.head
    }

    pub fn x_indices(&self) -> &[u32] {
        &self.x_indices
    }

    pub fn y_indices(&self) -> &[u32] {
        &self.y_indices
    }

    pub fn x_order(&self) -> usize {
        self.x_indices.len()
    }

    pub fn y_order(&self) -> usize {
        self.y_indices.len()
    }

    pub fn order(&self) -> usize {
        self.x_order() + self.y_order()
    }

    /// Same symbol differentiated once more along `x^i`.
    pub fn with_extra_x(&self, i: u32) -> Self {
        let mut s = self.clone();
        let pos = s.x_indices.partition_point(|&v| v <= i);
        s.x_indices.insert(pos, i);
        s
    }

    /// Same symbol differentiated once more along `y^l`.
    pub fn with_extra_y(&self, l: u32) -> Self {
        let mut s = self.clone();
        let pos = s.y_indices.partition_point(|&v| v <= l);
        s.y_indices.insert(pos, l);
        s
    }
}
