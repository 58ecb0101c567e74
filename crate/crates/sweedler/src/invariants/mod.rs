//! Twisted Sweedler powers, twisted exponents, the canonical element q on
//! H ⊗ H*, and twisted indicators.
//!
//! Exponents and indicators are each computable along two deliberately
//! independent paths — the twisted-power state machine and the order/trace of
//! the q-action matrix — and the two must agree exactly; a disagreement is a
//! defect, never a tolerance question.

use num::Integer;

use crate::cyclo::CycNumber;
use crate::linalg::Matrix;
use crate::reps::{character, Character, Representation};
use crate::structures::{dual, Elem, HopfAlgebra, HopfAutomorphism, StructureError, TensorSquare};

/// Errors from invariant computations.
#[derive(Debug, thiserror::Error)]
pub enum InvariantError {
    /// The norm is only defined on grouplike elements.
    #[error("element is not grouplike")]
    NotGrouplike,
    /// The group-exponent shortcut needs a group-algebra structure table.
    #[error("'{name}' does not carry the group-algebra structure")]
    NotGroupAlgebra {
        /// Algebra name.
        name: String,
    },
    /// No two-sided integral with counit 1 exists.
    #[error("no normalized two-sided integral: {reason}")]
    NoNormalizedIntegral {
        /// What failed: empty solution space, excess dimension, or vanishing counit.
        reason: String,
    },
    /// Indicators are only defined when the automorphism order divides m.
    #[error("m = {m} is not divisible by the automorphism order r = {r}")]
    MNotDivisibleByOrder {
        /// Requested power.
        m: u64,
        /// Automorphism order.
        r: u64,
    },
    /// The q-element methods require the antipode to be an involution.
    #[error("the antipode is not an involution; the q-element methods do not apply")]
    NotInvolutory,
    /// No exponent found up to the search bound.
    #[error("no exponent up to bound {bound}; the exponent may be infinite")]
    ExponentBoundExceeded {
        /// The bound that was exhausted.
        bound: u64,
    },
    /// The two computation paths produced different values — a defect.
    #[error("independent methods disagree at m = {m}")]
    MethodDisagreement {
        /// The power at which the values differ.
        m: u64,
    },
    /// Underlying structural failure.
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// Which computation path produced an exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExponentMethod {
    /// Least k with the kr-th twisted power acting as the counit.
    Definition,
    /// Order of the q-element acting on V ⊗ H*.
    QOrder,
}

/// A finite twisted exponent; an exceeded search bound is reported as
/// [`InvariantError::ExponentBoundExceeded`] instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentResult {
    /// The twisted exponent (the least admissible k ≥ 1).
    pub value: u64,
    /// r · value, the period of the associated power family.
    pub d_tau: u64,
    /// Computation path used.
    pub method: ExponentMethod,
    /// Search bound in force during the computation.
    pub bound_used: u64,
}

/// Which indicator formula(s) produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndicatorMethod {
    /// Character applied to the twisted power of the integral.
    CharSum,
    /// Normalized trace of a power of the q-action.
    Trace,
    /// Both, compared exactly.
    Both,
}

/// One indicator value.
#[derive(Debug, Clone)]
pub struct IndicatorEntry {
    /// The power m (always a multiple of r).
    pub m: u64,
    /// The indicator value.
    pub value: CycNumber,
    /// Which formula(s) produced (and agreed on) the value.
    pub methods: IndicatorMethod,
}

/// A table of indicator values for one (module, automorphism) pair with
/// periodicity and ring classification.
#[derive(Debug, Clone)]
pub struct IndicatorReport {
    /// Module name.
    pub module: String,
    /// Automorphism name.
    pub automorphism: String,
    /// Automorphism order.
    pub r: u64,
    /// Values at m = r, 2r, … up to the requested maximum.
    pub entries: Vec<IndicatorEntry>,
    /// The guaranteed period r·exp of the indicator sequence.
    pub period: u64,
    /// Least divisor d of the module's twisted exponent with every value an
    /// algebraic integer of the d-th cyclotomic field.
    pub ring_conductor: u64,
    /// True when every value is a rational integer.
    pub all_rational_integers: bool,
}

/// Default exponent search bound: 2·r·(dim H)³.
pub fn default_bound(h: &HopfAlgebra, tau: &HopfAutomorphism) -> u64 {
    let n = h.dim() as u64;
    2 * tau.order() * n * n * n
}

// --- twisted powers -------------------------------------------------------

/// Incremental twisted-power engine.
///
/// Keeps the state s_j in H ⊗ H (never materializing higher tensor powers):
/// s_1 = Δ(h) and s_{j+1} = (μ∘(Id⊗A^j) ⊗ Id)((Id⊗Δ)(s_j)); the m-th twisted
/// power is (Id⊗ε)(s_m).
struct PowerStream<'a> {
    h: &'a HopfAlgebra,
    a: &'a Matrix,
    state: TensorSquare,
    /// A^m, the twist applied on the next advance.
    apow: Matrix,
    /// Power index of the current state.
    m: u64,
}

impl<'a> PowerStream<'a> {
    fn new(h: &'a HopfAlgebra, a: &'a Matrix, start: &Elem) -> Self {
        PowerStream { h, a, state: h.comultiply(start), apow: a.clone(), m: 1 }
    }

    /// Folds one more tensor factor into the state.
    fn advance(&mut self) {
        let n = self.h.dim();
        let mut next = TensorSquare::zero(n);
        for (u, v, coeff) in self.state.nonzero() {
            for (c, l, r) in self.h.comult_entry(v) {
                // u · A^m(b_l) ⊗ b_r
                let image = Elem::from_coords(self.apow.column(*l));
                let product = self.h.multiply(&Elem::basis(n, u), &image);
                let scale = coeff * c;
                for (w, p) in product.coords().iter().enumerate() {
                    if !p.is_zero() {
                        next.add_at(w, *r, &(&scale * p));
                    }
                }
            }
        }
        self.state = next;
        self.apow = self.apow.mul(self.a);
        self.m += 1;
    }

    /// The current twisted power (Id⊗ε)(s_m).
    fn extract(&self) -> Elem {
        let n = self.h.dim();
        let counit = self.h.counit_coeffs();
        let mut out = Elem::zero(n);
        for (u, v, coeff) in self.state.nonzero() {
            if !counit[v].is_zero() {
                out.add_scaled(&(coeff * &counit[v]), &Elem::basis(n, u));
            }
        }
        out
    }
}

/// The m-th twisted power of `start`: μ^m ∘ (Id⊗A⊗…⊗A^{m−1}) ∘ Δ^{m−1}.
/// For m = 1 this is `start` itself.
pub fn twisted_power(h: &HopfAlgebra, start: &Elem, a: &Matrix, m: u64) -> Elem {
    assert!(m >= 1, "power index must be positive");
    if m == 1 {
        return start.clone();
    }
    let mut stream = PowerStream::new(h, a, start);
    while stream.m < m {
        stream.advance();
    }
    stream.extract()
}

/// The endomorphism twist used for exponents: S⁻² followed by τ.
fn exponent_twist(h: &HopfAlgebra, tau: &HopfAutomorphism) -> Result<Matrix, InvariantError> {
    let s_inv = h.antipode_inv()?;
    Ok(s_inv.mul(&s_inv).mul(tau.matrix()))
}

/// Whether a twisted power equals the counit scaling: on the algebra itself
/// (`rho = None`, compare with ε(b)·1) or on a module (compare actions).
fn power_is_counit(
    h: &HopfAlgebra,
    basis_index: usize,
    power: &Elem,
    rho: Option<&Representation>,
) -> bool {
    let eps = &h.counit_coeffs()[basis_index];
    match rho {
        None => power == &h.unit_elem().scale(eps),
        Some(rho) => {
            let wanted = Matrix::identity(rho.dim_v()).scale(eps);
            rho.apply_elem(power) == wanted
        }
    }
}

/// Whether the kr-th twisted power (twist S⁻²∘τ) acts as ε·Id — on the
/// algebra when `rho` is absent, on the module otherwise.
pub fn gamma_is_counit(
    h: &HopfAlgebra,
    tau: &HopfAutomorphism,
    k: u64,
    rho: Option<&Representation>,
) -> Result<bool, InvariantError> {
    assert!(k >= 1, "power index must be positive");
    let a = exponent_twist(h, tau)?;
    let m = k * tau.order();
    for i in 0..h.dim() {
        let power = twisted_power(h, &h.basis(i), &a, m);
        if !power_is_counit(h, i, &power, rho) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The twisted exponent by definition: the least k ≤ bound whose kr-th
/// twisted power acts as the counit. All basis streams advance in lockstep so
/// each power is built incrementally rather than recomputed per k.
pub fn twisted_exponent(
    h: &HopfAlgebra,
    tau: &HopfAutomorphism,
    rho: Option<&Representation>,
    bound: u64,
) -> Result<ExponentResult, InvariantError> {
    assert!(bound >= 1, "search bound must be positive");
    let a = exponent_twist(h, tau)?;
    let r = tau.order();
    let mut streams: Vec<PowerStream> =
        (0..h.dim()).map(|i| PowerStream::new(h, &a, &h.basis(i))).collect();
    for k in 1..=bound {
        let m = k * r;
        for stream in &mut streams {
            while stream.m < m {
                stream.advance();
            }
        }
        let hit = (0..h.dim())
            .all(|i| power_is_counit(h, i, &streams[i].extract(), rho));
        if hit {
            return Ok(ExponentResult {
                value: k,
                d_tau: r * k,
                method: ExponentMethod::Definition,
                bound_used: bound,
            });
        }
    }
    Err(InvariantError::ExponentBoundExceeded { bound })
}

// --- norms of grouplikes --------------------------------------------------

/// The norm N(g) = g·τ(g)·…·τ^{r−1}(g) of a grouplike element.
pub fn norm(h: &HopfAlgebra, tau: &HopfAutomorphism, g: &Elem) -> Result<Elem, InvariantError> {
    if !h.is_grouplike(g) {
        return Err(InvariantError::NotGrouplike);
    }
    let mut image = g.clone();
    let mut product = g.clone();
    for _ in 1..tau.order() {
        image = tau.apply(&image);
        product = h.multiply(&product, &image);
    }
    Ok(product)
}

/// The twisted exponent of a group algebra: the lcm over group elements g of
/// the multiplicative order of the norm N(g).
pub fn group_twisted_exponent(
    h: &HopfAlgebra,
    tau: &HopfAutomorphism,
) -> Result<u64, InvariantError> {
    let cayley = crate::structures::group_cayley(h).ok_or_else(|| {
        InvariantError::NotGroupAlgebra { name: h.name().to_string() }
    })?;
    let n = h.dim();
    let identity = (0..n)
        .find(|&i| h.unit_elem() == &Elem::basis(n, i))
        .expect("a group algebra's unit is a basis element");
    let mut result: u64 = 1;
    for g in 0..n {
        let norm_elem = norm(h, tau, &Elem::basis(n, g))?;
        let w = (0..n)
            .find(|&i| norm_elem == Elem::basis(n, i))
            .expect("norms of group elements are group elements");
        let mut acc = w;
        let mut order: u64 = 1;
        while acc != identity {
            acc = cayley[acc][w];
            order += 1;
        }
        result = result.lcm(&order);
    }
    Ok(result)
}

// --- integrals ------------------------------------------------------------

/// The unique two-sided integral Λ with ε(Λ) = 1, from the exact linear
/// system b·Λ = ε(b)·Λ = Λ·b over all basis elements b.
pub fn find_integral(h: &HopfAlgebra) -> Result<Elem, InvariantError> {
    let n = h.dim();
    let counit = h.counit_coeffs();
    let mut rows: Vec<Vec<CycNumber>> = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        let b = h.basis(i);
        for side in [h.left_mult_matrix(&b), h.right_mult_matrix(&b)] {
            for row in 0..n {
                rows.push(
                    (0..n)
                        .map(|col| {
                            if row == col {
                                side.at(row, col) - &counit[i]
                            } else {
                                side.at(row, col).clone()
                            }
                        })
                        .collect(),
                );
            }
        }
    }
    let space = Matrix::from_rows(rows).nullspace();
    match space.len() {
        0 => Err(InvariantError::NoNormalizedIntegral {
            reason: "no nonzero two-sided integral".to_string(),
        }),
        1 => {
            let candidate = Elem::from_coords(space.into_iter().next().unwrap());
            let eps = h.counit_of(&candidate);
            if eps.is_zero() {
                return Err(InvariantError::NoNormalizedIntegral {
                    reason: "the counit vanishes on the integral space".to_string(),
                });
            }
            let inverse = eps.inverse().expect("nonzero cyclotomic numbers are invertible");
            Ok(candidate.scale(&inverse))
        }
        d => Err(InvariantError::NoNormalizedIntegral {
            reason: format!("integral space has dimension {d}"),
        }),
    }
}

// --- the canonical element q on H ⊗ H* ------------------------------------

/// The canonical element of H ⊗ H*: the product over i < r of the twisted
/// coevaluations (Id ⊗ (τ*)^i)(Σ_j b_j ⊗ b*_j).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QElement {
    dim: usize,
    /// Row-major grid: entry (a, b) is the coefficient of b_a ⊗ b*_b.
    tensor: Vec<CycNumber>,
}

impl QElement {
    /// Algebra dimension n (the tensor lives on an n×n grid).
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficient of b_a ⊗ b*_b.
    pub fn coeff(&self, a: usize, b: usize) -> &CycNumber {
        &self.tensor[a * self.dim + b]
    }
}

/// Computes the canonical element for (H, τ), multiplying the r twisted
/// coevaluation factors in H ⊗ H* (H* multiplied by convolution).
pub fn q_element(h: &HopfAlgebra, tau: &HopfAutomorphism) -> QElement {
    let n = h.dim();
    let dual_h = dual(h);
    let tau_dual = tau.matrix().transpose();

    // Factor i = 0 is the plain coevaluation.
    let mut grid = vec![CycNumber::zero(); n * n];
    for j in 0..n {
        grid[j * n + j] = CycNumber::one();
    }

    let mut tpow = tau_dual.clone();
    for _ in 1..tau.order() {
        // Next factor: Σ_j b_j ⊗ (τ*)^i(b*_j), with (τ*)^i(b*_j) read off tpow.
        let mut next = vec![CycNumber::zero(); n * n];
        for a in 0..n {
            for b in 0..n {
                let left = &grid[a * n + b];
                if left.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let product = h.mult_entry(a, j);
                    let image = Elem::from_coords(tpow.column(j));
                    let dual_product = dual_h.multiply(&Elem::basis(n, b), &image);
                    for (w, pw) in product.coords().iter().enumerate() {
                        if pw.is_zero() {
                            continue;
                        }
                        let scale = &(left * pw);
                        for (v, qv) in dual_product.coords().iter().enumerate() {
                            if !qv.is_zero() {
                                let term = &(scale * qv);
                                next[w * n + v] = &next[w * n + v] + term;
                            }
                        }
                    }
                }
            }
        }
        grid = next;
        tpow = tpow.mul(&tau_dual);
    }
    QElement { dim: n, tensor: grid }
}

fn is_involutory(h: &HopfAlgebra) -> bool {
    let s = h.antipode_matrix();
    s.mul(s).is_identity()
}

/// The matrix of left multiplication by the canonical element on V ⊗ H*:
/// H acts through the module, H* on itself by left convolution.
pub fn q_action(h: &HopfAlgebra, tau: &HopfAutomorphism, rho: &Representation) -> Matrix {
    let n = h.dim();
    let q = q_element(h, tau);
    let dual_h = dual(h);
    let mut action = Matrix::zeros(rho.dim_v() * n, rho.dim_v() * n);
    for a in 0..n {
        for b in 0..n {
            let coeff = q.coeff(a, b);
            if coeff.is_zero() {
                continue;
            }
            let left_conv = dual_h.left_mult_matrix(&Elem::basis(n, b));
            let block = rho.action(a).kronecker(&left_conv).scale(coeff);
            action = action.add(&block);
        }
    }
    action
}

/// The twisted exponent as the multiplicative order of the canonical element
/// acting on V ⊗ H*. Requires an involutory antipode.
pub fn twisted_exponent_via_q(
    h: &HopfAlgebra,
    tau: &HopfAutomorphism,
    rho: &Representation,
    bound: u64,
) -> Result<ExponentResult, InvariantError> {
    if !is_involutory(h) {
        return Err(InvariantError::NotInvolutory);
    }
    let action = q_action(h, tau, rho);
    match crate::structures::map_order(&action, bound) {
        Ok(value) => Ok(ExponentResult {
            value,
            d_tau: tau.order() * value,
            method: ExponentMethod::QOrder,
            bound_used: bound,
        }),
        Err(StructureError::OrderBoundExceeded { bound }) => {
            Err(InvariantError::ExponentBoundExceeded { bound })
        }
        Err(e) => Err(e.into()),
    }
}

// --- indicators -----------------------------------------------------------

fn require_divisible(m: u64, r: u64) -> Result<u64, InvariantError> {
    assert!(m >= 1, "power index must be positive");
    if m % r != 0 {
        return Err(InvariantError::MNotDivisibleByOrder { m, r });
    }
    Ok(m / r)
}

/// The m-th indicator as a character sum: χ applied to the m-th twisted power
/// (twist τ itself) of the normalized integral.
pub fn indicator_charsum(
    h: &HopfAlgebra,
    tau: &HopfAutomorphism,
    chi: &Character,
    m: u64,
) -> Result<CycNumber, InvariantError> {
    require_divisible(m, tau.order())?;
    let integral = find_integral(h)?;
    let power = twisted_power(h, &integral, tau.matrix(), m);
    Ok(chi.apply(&power))
}

/// The m-th indicator as a normalized trace: tr(Q^{m/r}) / dim H for the
/// q-action Q on V ⊗ H*. Requires an involutory antipode.
pub fn indicator_trace(
    h: &HopfAlgebra,
    tau: &HopfAutomorphism,
    rho: &Representation,
    m: u64,
) -> Result<CycNumber, InvariantError> {
    let k = require_divisible(m, tau.order())?;
    if !is_involutory(h) {
        return Err(InvariantError::NotInvolutory);
    }
    let action = q_action(h, tau, rho);
    let mut power = Matrix::identity(action.rows());
    for _ in 0..k {
        power = power.mul(&action);
    }
    let dim = CycNumber::from_int(h.dim() as i64);
    Ok(power
        .trace()
        .checked_div(&dim)
        .expect("the algebra dimension is a nonzero integer"))
}

fn divisors_ascending(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Tabulates indicators for m = r, 2r, … ≤ m_max with the chosen formula(s),
/// recording the guaranteed period and the minimal cyclotomic integer ring
/// containing every value. With [`IndicatorMethod::Both`], any disagreement
/// between the formulas aborts the report.
pub fn indicator_report(
    h: &HopfAlgebra,
    tau: &HopfAutomorphism,
    rho: &Representation,
    m_max: u64,
    method: IndicatorMethod,
    bound: u64,
) -> Result<IndicatorReport, InvariantError> {
    let r = tau.order();
    let chi = character(h, rho);
    let exponent = twisted_exponent(h, tau, Some(rho), bound)?.value;

    let mut entries = Vec::new();
    let charsum_wanted = matches!(method, IndicatorMethod::CharSum | IndicatorMethod::Both);
    let trace_wanted = matches!(method, IndicatorMethod::Trace | IndicatorMethod::Both);

    let mut charsum_values = Vec::new();
    if charsum_wanted {
        let integral = find_integral(h)?;
        let mut stream = PowerStream::new(h, tau.matrix(), &integral);
        let mut m = r;
        while m <= m_max {
            while stream.m < m {
                stream.advance();
            }
            charsum_values.push((m, chi.apply(&stream.extract())));
            m += r;
        }
    }

    let mut trace_values = Vec::new();
    if trace_wanted {
        if !is_involutory(h) {
            return Err(InvariantError::NotInvolutory);
        }
        let action = q_action(h, tau, rho);
        let dim = CycNumber::from_int(h.dim() as i64);
        let mut power = action.clone();
        let mut m = r;
        while m <= m_max {
            trace_values.push((
                m,
                power
                    .trace()
                    .checked_div(&dim)
                    .expect("the algebra dimension is a nonzero integer"),
            ));
            power = power.mul(&action);
            m += r;
        }
    }

    match method {
        IndicatorMethod::CharSum => {
            for (m, value) in charsum_values {
                entries.push(IndicatorEntry { m, value, methods: IndicatorMethod::CharSum });
            }
        }
        IndicatorMethod::Trace => {
            for (m, value) in trace_values {
                entries.push(IndicatorEntry { m, value, methods: IndicatorMethod::Trace });
            }
        }
        IndicatorMethod::Both => {
            for ((m, charsum), (m2, trace)) in charsum_values.into_iter().zip(trace_values) {
                debug_assert_eq!(m, m2);
                if charsum != trace {
                    return Err(InvariantError::MethodDisagreement { m });
                }
                entries.push(IndicatorEntry { m, value: charsum, methods: IndicatorMethod::Both });
            }
        }
    }

    let ring_conductor = divisors_ascending(exponent)
        .into_iter()
        .find(|&d| entries.iter().all(|e| e.value.is_algebraic_integer_in(d)))
        .expect("indicator values lie in the cyclotomic integers of the twisted exponent");
    let all_rational_integers = entries.iter().all(|e| e.value.is_algebraic_integer_in(1));

    Ok(IndicatorReport {
        module: rho.name().to_string(),
        automorphism: tau.name().to_string(),
        r,
        entries,
        period: r * exponent,
        ring_conductor,
        all_rational_integers,
    })
}

/// Whether m is large compared to d: gcd(d / gcd(d, m), m) = 1.
pub fn is_large_compared(m: u64, d: u64) -> bool {
    assert!(m >= 1 && d >= 1, "arguments must be positive");
    (d / d.gcd(&m)).gcd(&m) == 1
}
