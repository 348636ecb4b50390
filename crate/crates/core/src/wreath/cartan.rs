//! Simply-laced Cartan data with an orientation.

use crate::error::{Error, Result};

/// Symmetric Cartan matrix with a_ii = 2, a_ij in {0, -1}, and an orientation eps on its edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    a: Vec<Vec<i32>>,
    eps: Vec<Vec<i32>>,
}

impl CartanData {
    /// Validates a matrix and orientation.
    pub fn new(a: Vec<Vec<i32>>, eps: Vec<Vec<i32>>) -> Result<Self> {
        let r = a.len();
        if r == 0 {
            return Err(Error::InvalidCartan("no nodes".into()));
        }
        if a.iter().any(|row| row.len() != r) || eps.len() != r || eps.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidCartan("matrices must be square of equal size".into()));
        }
        for i in 0..r {
            if a[i][i] != 2 {
                return Err(Error::InvalidCartan(format!("a[{0}][{0}] must be 2", i + 1)));
            }
            if eps[i][i] != 0 {
                return Err(Error::InvalidCartan(format!("eps[{0}][{0}] must be 0", i + 1)));
            }
            for j in 0..r {
                if i == j {
                    continue;
                }
                if a[i][j] != a[j][i] || !matches!(a[i][j], 0 | -1) {
                    return Err(Error::InvalidCartan(format!(
                        "a[{}][{}] must be symmetric and in {{0,-1}}",
                        i + 1,
                        j + 1
                    )));
                }
                if eps[i][j] != -eps[j][i] || eps[i][j].abs() > 1 {
                    return Err(Error::InvalidCartan(format!(
                        "eps[{}][{}] must be antisymmetric in {{0,1,-1}}",
                        i + 1,
                        j + 1
                    )));
                }
                if (eps[i][j] != 0) != (a[i][j] == -1) {
                    return Err(Error::InvalidCartan(format!(
                        "eps[{}][{}] must be nonzero exactly on edges",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(CartanData { a, eps })
    }

    /// Type A_r with every edge oriented from i to i+1.
    pub fn type_a(r: usize) -> Self {
        let mut a = vec![vec![0; r]; r];
        let mut eps = vec![vec![0; r]; r];
        for i in 0..r {
            a[i][i] = 2;
            if i + 1 < r {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
                eps[i][i + 1] = 1;
                eps[i + 1][i] = -1;
            }
        }
        CartanData { a, eps }
    }

    /// Derives an orientation from the matrix, pointing each edge from the lower to the higher node.
    pub fn from_matrix(a: Vec<Vec<i32>>) -> Result<Self> {
        let r = a.len();
        let mut eps = vec![vec![0; r]; r];
        for i in 0..r {
            for j in 0..r.min(a[i].len()) {
                if i != j && a[i][j] == -1 {
                    eps[i][j] = if i < j { 1 } else { -1 };
                }
            }
        }
        Self::new(a, eps)
    }

    pub fn nodes(&self) -> usize {
        self.a.len()
    }

    /// a_ij for 1-based nodes.
    pub fn a(&self, i: usize, j: usize) -> i32 {
        self.a[i - 1][j - 1]
    }

    /// eps_ij for 1-based nodes.
    pub fn eps(&self, i: usize, j: usize) -> i32 {
        self.eps[i - 1][j - 1]
    }

    pub fn matrix(&self) -> &[Vec<i32>] {
        &self.a
    }

    pub fn orientation(&self) -> &[Vec<i32>] {
        &self.eps
    }

    pub fn check_node(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.nodes() {
            Err(Error::NodeOutOfRange { node: i, nodes: self.nodes() })
        } else {
            Ok(())
        }
    }
}
