//! Hopf algebras as structure-constant tables.
//!
//! An algebra is a dense multiplication table, a sparse comultiplication
//! table, a counit row, and an antipode matrix over a fixed basis. Nothing is
//! trusted at construction beyond shape: [`HopfAlgebra::verify_axioms`] checks
//! the ten defining axioms exhaustively over basis triples, and automorphism
//! candidates are validated check by check. The checker — not whatever code
//! assembled the tables — is the source of truth.

mod constructions;

pub use constructions::{
    dual, dual_automorphism, group_algebra, group_automorphism, group_cayley, tensor_automorphism,
    tensor_product,
};

use thiserror::Error;

use crate::cyclo::CycNumber;
use crate::linalg::Matrix;

/// Errors from structure assembly, validation, and order searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("antipode matrix is singular")]
    SingularAntipode,
    #[error("not a group: {reason}")]
    NotAGroup { reason: String },
    #[error("not a group automorphism: {reason}")]
    NotAGroupAutomorphism { reason: String },
    #[error("map fails the Hopf-automorphism check '{check}'")]
    AutomorphismCheckFailed { check: String },
    #[error("no power up to {bound} is the identity")]
    OrderBoundExceeded { bound: u64 },
    #[error("malformed structure: {message}")]
    InvalidStructure { message: String },
}

/// An element of the algebra, as coordinates over the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elem {
    coords: Vec<CycNumber>,
}

impl Elem {
    pub fn from_coords(coords: Vec<CycNumber>) -> Self {
        Elem { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Elem { coords: vec![CycNumber::zero(); dim] }
    }

    /// The i-th basis element.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Elem::zero(dim);
        e.coords[i] = CycNumber::one();
        e
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[CycNumber] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &CycNumber {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(CycNumber::is_zero)
    }

    pub fn add(&self, other: &Elem) -> Elem {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        Elem {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Elem) -> Elem {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        Elem {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, factor: &CycNumber) -> Elem {
        Elem { coords: self.coords.iter().map(|a| a * factor).collect() }
    }

    /// `self += factor · other`, the accumulation step all expansions use.
    pub fn add_scaled(&mut self, factor: &CycNumber, other: &Elem) {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        if factor.is_zero() {
            return;
        }
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            if !b.is_zero() {
                *a += &(factor * b);
            }
        }
    }
}

/// Renders an element as a linear combination of basis labels, e.g.
/// `1/2*z + 1/2*xz`. A unit basis label `1` absorbs into its coefficient.
pub fn format_elem(elem: &Elem, labels: &[String]) -> String {
    assert_eq!(elem.dim(), labels.len(), "label count mismatch");
    let mut out = String::new();
    for (label, coeff) in labels.iter().zip(elem.coords()) {
        if coeff.is_zero() {
            continue;
        }
        let text = coeff.format();
        let (negative, magnitude) = match text.strip_prefix('-') {
            // Only a syntactically leading minus on a one-term literal can be
            // pulled out; anything with interior operators keeps parentheses.
            Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
            _ if text.contains(['+', '-']) => (false, format!("({text})")),
            _ => (false, text),
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if label == "1" {
            out.push_str(&magnitude);
        } else if magnitude == "1" {
            out.push_str(label);
        } else {
            out.push_str(&magnitude);
            out.push('*');
            out.push_str(label);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// An element of H⊗H as a dense coefficient grid over basis pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorSquare {
    dim: usize,
    coeffs: Vec<CycNumber>,
}

impl TensorSquare {
    pub fn zero(dim: usize) -> Self {
        TensorSquare { dim, coeffs: vec![CycNumber::zero(); dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, left: usize, right: usize) -> &CycNumber {
        &self.coeffs[left * self.dim + right]
    }

    pub fn add_at(&mut self, left: usize, right: usize, value: &CycNumber) {
        if !value.is_zero() {
            self.coeffs[left * self.dim + right] += value;
        }
    }

    /// Outer product a⊗b.
    pub fn outer(a: &Elem, b: &Elem) -> Self {
        assert_eq!(a.dim(), b.dim(), "dimension mismatch");
        let dim = a.dim();
        let mut t = TensorSquare::zero(dim);
        for (i, ca) in a.coords().iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.coords().iter().enumerate() {
                if !cb.is_zero() {
                    t.coeffs[i * dim + j] = ca * cb;
                }
            }
        }
        t
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &CycNumber)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k / self.dim, k % self.dim, c))
    }
}

/// One sparse comultiplication row: Δ(b_k) = Σ coeff · b_left ⊗ b_right.
pub type ComultRow = Vec<(CycNumber, usize, usize)>;

/// A finite-dimensional Hopf algebra given by structure constants.
#[derive(Debug, Clone)]
pub struct HopfAlgebra {
    name: String,
    dim: usize,
    basis_labels: Vec<String>,
    mult: Vec<Vec<Elem>>,
    unit: Elem,
    comult: Vec<ComultRow>,
    counit: Vec<CycNumber>,
    antipode: Matrix,
}

impl HopfAlgebra {
    /// Assembles an algebra after shape validation only; call
    /// [`verify_axioms`](Self::verify_axioms) to check the mathematics.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: String,
        basis_labels: Vec<String>,
        mult: Vec<Vec<Elem>>,
        unit: Elem,
        comult: Vec<ComultRow>,
        counit: Vec<CycNumber>,
        antipode: Matrix,
    ) -> Result<Self, StructureError> {
        let n = basis_labels.len();
        if n == 0 {
            return Err(StructureError::InvalidStructure {
                message: "dimension must be at least 1".to_string(),
            });
        }
        let expect_len = |what: &str, found: usize| {
            if found == n {
                Ok(())
            } else {
                Err(StructureError::InvalidStructure {
                    message: format!("{what}: expected {n} entries, found {found}"),
                })
            }
        };
        expect_len("mult rows", mult.len())?;
        for row in &mult {
            expect_len("mult columns", row.len())?;
            for e in row {
                expect_len("mult entry coordinates", e.dim())?;
            }
        }
        expect_len("unit coordinates", unit.dim())?;
        expect_len("comult rows", comult.len())?;
        for row in &comult {
            for (_, l, r) in row {
                if *l >= n || *r >= n {
                    return Err(StructureError::InvalidStructure {
                        message: format!("comult index ({l}, {r}) out of range for dim {n}"),
                    });
                }
            }
        }
        expect_len("counit coordinates", counit.len())?;
        if antipode.rows() != n || antipode.cols() != n {
            return Err(StructureError::InvalidStructure {
                message: format!(
                    "antipode: expected {n}x{n}, found {}x{}",
                    antipode.rows(),
                    antipode.cols()
                ),
            });
        }
        Ok(HopfAlgebra { name, dim: n, basis_labels, mult, unit, comult, counit, antipode })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn basis(&self, i: usize) -> Elem {
        Elem::basis(self.dim, i)
    }

    pub fn unit_elem(&self) -> &Elem {
        &self.unit
    }

    pub fn counit_coeffs(&self) -> &[CycNumber] {
        &self.counit
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    /// The product table entry b_i·b_j.
    pub fn mult_entry(&self, i: usize, j: usize) -> &Elem {
        &self.mult[i][j]
    }

    /// The sparse expansion of Δ(b_i).
    pub fn comult_entry(&self, i: usize) -> &[(CycNumber, usize, usize)] {
        &self.comult[i]
    }

    /// Bilinear product of two elements.
    pub fn multiply(&self, a: &Elem, b: &Elem) -> Elem {
        assert_eq!(a.dim(), self.dim, "dimension mismatch");
        assert_eq!(b.dim(), self.dim, "dimension mismatch");
        let mut out = Elem::zero(self.dim);
        for (i, ca) in a.coords().iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.coords().iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                out.add_scaled(&(ca * cb), &self.mult[i][j]);
            }
        }
        out
    }

    /// Linear extension of Δ.
    pub fn comultiply(&self, a: &Elem) -> TensorSquare {
        assert_eq!(a.dim(), self.dim, "dimension mismatch");
        let mut t = TensorSquare::zero(self.dim);
        for (i, ca) in a.coords().iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (c, l, r) in &self.comult[i] {
                t.add_at(*l, *r, &(ca * c));
            }
        }
        t
    }

    /// Linear extension of ε.
    pub fn counit_of(&self, a: &Elem) -> CycNumber {
        assert_eq!(a.dim(), self.dim, "dimension mismatch");
        let mut acc = CycNumber::zero();
        for (ca, e) in a.coords().iter().zip(&self.counit) {
            if !ca.is_zero() && !e.is_zero() {
                acc += &(ca * e);
            }
        }
        acc
    }

    /// S applied to an element.
    pub fn apply_antipode(&self, a: &Elem) -> Elem {
        Elem::from_coords(self.antipode.apply(a.coords()))
    }

    /// Exact inverse of the antipode matrix.
    pub fn antipode_inv(&self) -> Result<Matrix, StructureError> {
        self.antipode.inverse().ok_or(StructureError::SingularAntipode)
    }

    /// Matrix of left multiplication by `a` (column j is a·b_j).
    pub fn left_mult_matrix(&self, a: &Elem) -> Matrix {
        let cols: Vec<Elem> = (0..self.dim).map(|j| self.multiply(a, &self.basis(j))).collect();
        Matrix::from_fn(self.dim, self.dim, |i, j| cols[j].coord(i).clone())
    }

    /// Matrix of right multiplication by `a` (column j is b_j·a).
    pub fn right_mult_matrix(&self, a: &Elem) -> Matrix {
        let cols: Vec<Elem> = (0..self.dim).map(|j| self.multiply(&self.basis(j), a)).collect();
        Matrix::from_fn(self.dim, self.dim, |i, j| cols[j].coord(i).clone())
    }

    /// True iff Δ(g) = g⊗g and ε(g) = 1.
    pub fn is_grouplike(&self, g: &Elem) -> bool {
        self.counit_of(g).is_one() && self.comultiply(g) == TensorSquare::outer(g, g)
    }

    /// Runs all ten Hopf-axiom checks exhaustively over basis triples.
    pub fn verify_axioms(&self) -> VerificationReport {
        let n = self.dim;
        let mut report = VerificationReport::new();

        // (1) associativity: (b_i b_j) b_k = b_i (b_j b_k).
        let mut witness = None;
        'assoc: for i in 0..n {
            for j in 0..n {
                let ij = &self.mult[i][j];
                for k in 0..n {
                    let lhs = self.multiply(ij, &self.basis(k));
                    let rhs = self.multiply(&self.basis(i), &self.mult[j][k]);
                    if lhs != rhs {
                        witness = Some(vec![i, j, k]);
                        break 'assoc;
                    }
                }
            }
        }
        report.push("associativity", witness);

        // (2) unit law: 1·b_i = b_i = b_i·1.
        let mut witness = None;
        for i in 0..n {
            let b = self.basis(i);
            if self.multiply(&self.unit, &b) != b || self.multiply(&b, &self.unit) != b {
                witness = Some(vec![i]);
                break;
            }
        }
        report.push("unit-law", witness);

        // (3) coassociativity: (Δ⊗Id)Δ = (Id⊗Δ)Δ on each basis element,
        // compared as dense order-3 tensors.
        let mut witness = None;
        for i in 0..n {
            let mut lhs = vec![CycNumber::zero(); n * n * n];
            let mut rhs = vec![CycNumber::zero(); n * n * n];
            for (c, l, r) in &self.comult[i] {
                for (c2, a, b) in &self.comult[*l] {
                    lhs[(a * n + b) * n + r] += &(c * c2);
                }
                for (c2, a, b) in &self.comult[*r] {
                    rhs[(l * n + a) * n + b] += &(c * c2);
                }
            }
            if lhs != rhs {
                witness = Some(vec![i]);
                break;
            }
        }
        report.push("coassociativity", witness);

        // (4) counit law: (ε⊗Id)Δ = Id = (Id⊗ε)Δ.
        let mut witness = None;
        for i in 0..n {
            let mut left = Elem::zero(n);
            let mut right = Elem::zero(n);
            for (c, l, r) in &self.comult[i] {
                left.add_scaled(&(c * &self.counit[*l]), &self.basis(*r));
                right.add_scaled(&(c * &self.counit[*r]), &self.basis(*l));
            }
            let b = self.basis(i);
            if left != b || right != b {
                witness = Some(vec![i]);
                break;
            }
        }
        report.push("counit-law", witness);

        // (5) Δ is multiplicative: Δ(b_i b_j) = Δ(b_i)Δ(b_j) in H⊗H.
        let mut witness = None;
        'comult_mult: for i in 0..n {
            for j in 0..n {
                let lhs = self.comultiply(&self.mult[i][j]);
                let mut rhs = TensorSquare::zero(n);
                for (c1, l1, r1) in &self.comult[i] {
                    for (c2, l2, r2) in &self.comult[j] {
                        let c = c1 * c2;
                        let left = &self.mult[*l1][*l2];
                        let right = &self.mult[*r1][*r2];
                        for (li, lc) in left.coords().iter().enumerate() {
                            if lc.is_zero() {
                                continue;
                            }
                            let clc = &c * lc;
                            for (ri, rc) in right.coords().iter().enumerate() {
                                if !rc.is_zero() {
                                    rhs.add_at(li, ri, &(&clc * rc));
                                }
                            }
                        }
                    }
                }
                if lhs != rhs {
                    witness = Some(vec![i, j]);
                    break 'comult_mult;
                }
            }
        }
        report.push("comult-multiplicative", witness);

        // (6) Δ preserves the unit: Δ(1) = 1⊗1.
        let delta_one = self.comultiply(&self.unit);
        let witness = (delta_one != TensorSquare::outer(&self.unit, &self.unit)).then(Vec::new);
        report.push("comult-unit", witness);

        // (7) ε is multiplicative: ε(b_i b_j) = ε(b_i)ε(b_j).
        let mut witness = None;
        'counit_mult: for i in 0..n {
            for j in 0..n {
                let lhs = self.counit_of(&self.mult[i][j]);
                if lhs != &self.counit[i] * &self.counit[j] {
                    witness = Some(vec![i, j]);
                    break 'counit_mult;
                }
            }
        }
        report.push("counit-multiplicative", witness);

        // (8) ε preserves the unit: ε(1) = 1.
        let witness = (!self.counit_of(&self.unit).is_one()).then(Vec::new);
        report.push("counit-unit", witness);

        // (9) antipode law: μ(S⊗Id)Δ(b_i) = ε(b_i)·1 = μ(Id⊗S)Δ(b_i).
        let mut witness = None;
        for i in 0..n {
            let mut left = Elem::zero(n);
            let mut right = Elem::zero(n);
            for (c, l, r) in &self.comult[i] {
                left.add_scaled(c, &self.multiply(&self.apply_antipode(&self.basis(*l)), &self.basis(*r)));
                right.add_scaled(c, &self.multiply(&self.basis(*l), &self.apply_antipode(&self.basis(*r))));
            }
            let target = self.unit.scale(&self.counit[i]);
            if left != target || right != target {
                witness = Some(vec![i]);
                break;
            }
        }
        report.push("antipode-law", witness);

        // (10) S is invertible as a linear map.
        let witness = self.antipode.inverse().is_none().then(Vec::new);
        report.push("antipode-invertible", witness);

        report
    }
}

/// One named axiom or automorphism check, with a basis-index witness when it
/// fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<Vec<usize>>,
}

/// Outcome of `verify_axioms` or `verify_automorphism`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    checks: Vec<Check>,
}

impl VerificationReport {
    pub(crate) fn new() -> Self {
        VerificationReport { checks: Vec::new() }
    }

    pub(crate) fn push(&mut self, name: &'static str, witness: Option<Vec<usize>>) {
        self.checks.push(Check { name, passed: witness.is_none(), witness });
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Validates a candidate Hopf-automorphism matrix against every defining
/// property except finite order (which needs a bound; see
/// [`HopfAutomorphism::new`]).
pub fn verify_automorphism(h: &HopfAlgebra, map: &Matrix) -> VerificationReport {
    let n = h.dim();
    let mut report = VerificationReport::new();
    if map.rows() != n || map.cols() != n {
        report.push("shape", Some(Vec::new()));
        return report;
    }
    report.push("shape", None);

    report.push("invertible", map.inverse().is_none().then(Vec::new));

    let image = |i: usize| Elem::from_coords(map.column(i));

    let unit_ok = Elem::from_coords(map.apply(h.unit_elem().coords())) == *h.unit_elem();
    report.push("preserves-unit", (!unit_ok).then(Vec::new));

    let mut witness = None;
    'mult: for i in 0..n {
        for j in 0..n {
            let lhs = Elem::from_coords(map.apply(h.mult_entry(i, j).coords()));
            let rhs = h.multiply(&image(i), &image(j));
            if lhs != rhs {
                witness = Some(vec![i, j]);
                break 'mult;
            }
        }
    }
    report.push("multiplicative", witness);

    let mut witness = None;
    for i in 0..n {
        let lhs = h.comultiply(&image(i));
        let mut rhs = TensorSquare::zero(n);
        for (c, l, r) in h.comult_entry(i) {
            let left = image(*l);
            let right = image(*r);
            for (li, lc) in left.coords().iter().enumerate() {
                if lc.is_zero() {
                    continue;
                }
                let clc = c * lc;
                for (ri, rc) in right.coords().iter().enumerate() {
                    if !rc.is_zero() {
                        rhs.add_at(li, ri, &(&clc * rc));
                    }
                }
            }
        }
        if lhs != rhs {
            witness = Some(vec![i]);
            break;
        }
    }
    report.push("comult-compatible", witness);

    let mut witness = None;
    for i in 0..n {
        if h.counit_of(&image(i)) != h.counit_coeffs()[i] {
            witness = Some(vec![i]);
            break;
        }
    }
    report.push("counit-compatible", witness);

    let commutes = map.mul(h.antipode_matrix()) == h.antipode_matrix().mul(map);
    report.push("commutes-with-antipode", (!commutes).then(Vec::new));

    report
}

/// A verified Hopf-algebra automorphism with its exact order.
#[derive(Debug, Clone)]
pub struct HopfAutomorphism {
    name: String,
    algebra_name: String,
    map: Matrix,
    order: u64,
}

impl HopfAutomorphism {
    /// Validates the candidate matrix and determines its order (searching up
    /// to `order_bound`).
    pub fn new(
        h: &HopfAlgebra,
        name: String,
        map: Matrix,
        order_bound: u64,
    ) -> Result<Self, StructureError> {
        let report = verify_automorphism(h, &map);
        if let Some(fail) = report.first_failure() {
            return Err(StructureError::AutomorphismCheckFailed { check: fail.name.to_string() });
        }
        let order = map_order(&map, order_bound)?;
        Ok(HopfAutomorphism { name, algebra_name: h.name().to_string(), map, order })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra_name(&self) -> &str {
        &self.algebra_name
    }

    pub fn matrix(&self) -> &Matrix {
        &self.map
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn apply(&self, a: &Elem) -> Elem {
        Elem::from_coords(self.map.apply(a.coords()))
    }
}

/// Least k ≤ bound with f^k = Id, by iterated multiplication.
pub fn map_order(f: &Matrix, bound: u64) -> Result<u64, StructureError> {
    assert!(bound >= 1, "order bound must be positive");
    let mut power = f.clone();
    for k in 1..=bound {
        if power.is_identity() {
            return Ok(k);
        }
        power = power.mul(f);
    }
    Err(StructureError::OrderBoundExceeded { bound })
}
