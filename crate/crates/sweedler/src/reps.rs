//! Left modules over a Hopf algebra, given by explicit action matrices, and
//! their characters.

use crate::cyclo::CycNumber;
use crate::linalg::Matrix;
use crate::structures::{Elem, HopfAlgebra, StructureError, VerificationReport};

/// A left H-module: one action matrix per basis element of H.
#[derive(Debug, Clone)]
pub struct Representation {
    name: String,
    algebra_name: String,
    dim_v: usize,
    action: Vec<Matrix>,
}

impl Representation {
    /// Shape-validates the action table; call [`verify_representation`] to
    /// check the module axioms.
    pub fn new(
        h: &HopfAlgebra,
        name: String,
        action: Vec<Matrix>,
    ) -> Result<Self, StructureError> {
        if action.len() != h.dim() {
            return Err(StructureError::InvalidStructure {
                message: format!(
                    "action table has {} matrices, expected {}",
                    action.len(),
                    h.dim()
                ),
            });
        }
        let dim_v = action.first().map_or(0, Matrix::rows);
        if dim_v == 0 {
            return Err(StructureError::InvalidStructure {
                message: "module dimension must be at least 1".to_string(),
            });
        }
        for (i, m) in action.iter().enumerate() {
            if m.rows() != dim_v || m.cols() != dim_v {
                return Err(StructureError::InvalidStructure {
                    message: format!(
                        "action matrix {i} is {}x{}, expected {dim_v}x{dim_v}",
                        m.rows(),
                        m.cols()
                    ),
                });
            }
        }
        Ok(Representation { name, algebra_name: h.name().to_string(), dim_v, action })
    }

    /// The one-dimensional module where H acts through ε.
    pub fn trivial(h: &HopfAlgebra) -> Self {
        let action = h
            .counit_coeffs()
            .iter()
            .map(|e| Matrix::from_rows(vec![vec![e.clone()]]))
            .collect();
        Representation {
            name: "trivial".to_string(),
            algebra_name: h.name().to_string(),
            dim_v: 1,
            action,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra_name(&self) -> &str {
        &self.algebra_name
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    /// ρ(b_i).
    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// Number of basis-action matrices (the dimension of the algebra).
    pub fn action_len(&self) -> usize {
        self.action.len()
    }

    /// Linear extension ρ(a) = Σ aᵢ·ρ(b_i).
    pub fn apply_elem(&self, a: &Elem) -> Matrix {
        assert_eq!(a.dim(), self.action.len(), "dimension mismatch");
        let mut acc = Matrix::zeros(self.dim_v, self.dim_v);
        for (i, c) in a.coords().iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&self.action[i].scale(c));
            }
        }
        acc
    }
}

/// Checks ρ(1) = Id and bilinear multiplicativity over all basis pairs.
pub fn verify_representation(h: &HopfAlgebra, rho: &Representation) -> VerificationReport {
    let n = h.dim();
    let mut report = VerificationReport::new();

    let identity_ok = rho.apply_elem(h.unit_elem()).is_identity();
    report.push("identity-action", (!identity_ok).then(Vec::new));

    let mut witness = None;
    'pairs: for i in 0..n {
        for j in 0..n {
            let lhs = rho.action(i).mul(rho.action(j));
            let rhs = rho.apply_elem(h.mult_entry(i, j));
            if lhs != rhs {
                witness = Some(vec![i, j]);
                break 'pairs;
            }
        }
    }
    report.push("multiplicative", witness);

    report
}

/// The character χ of a module: traces of the action matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    name: String,
    values: Vec<CycNumber>,
}

impl Character {
    /// A character from explicit basis values.
    pub fn new(name: String, values: Vec<CycNumber>) -> Self {
        Character { name, values }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn values(&self) -> &[CycNumber] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &CycNumber {
        &self.values[i]
    }

    /// Linear extension χ(a) = Σ aᵢ·χ(b_i).
    pub fn apply(&self, a: &Elem) -> CycNumber {
        assert_eq!(a.dim(), self.values.len(), "dimension mismatch");
        let mut acc = CycNumber::zero();
        for (c, v) in a.coords().iter().zip(&self.values) {
            if !c.is_zero() && !v.is_zero() {
                acc += &(c * v);
            }
        }
        acc
    }
}

/// The character of a representation.
pub fn character(h: &HopfAlgebra, rho: &Representation) -> Character {
    let values = (0..h.dim()).map(|i| rho.action(i).trace()).collect();
    Character { name: rho.name().to_string(), values }
}

/// The left regular representation: ρ(b_i) = matrix of left multiplication.
pub fn regular_representation(h: &HopfAlgebra) -> Representation {
    let action = (0..h.dim()).map(|i| h.left_mult_matrix(&h.basis(i))).collect();
    Representation {
        name: "regular".to_string(),
        algebra_name: h.name().to_string(),
        dim_v: h.dim(),
        action,
    }
}
