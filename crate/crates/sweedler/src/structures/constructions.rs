//! Derived Hopf algebras: duals, tensor products, and group algebras.

use num::Integer;

use crate::cyclo::CycNumber;
use crate::linalg::Matrix;

use super::{ComultRow, Elem, HopfAlgebra, HopfAutomorphism, StructureError};

/// The dual Hopf algebra on the dual basis: multiplication dual to Δ,
/// comultiplication dual to μ, unit ε, counit evaluation at 1, antipode Sᵀ.
pub fn dual(h: &HopfAlgebra) -> HopfAlgebra {
    let n = h.dim();
    let labels: Vec<String> = h.basis_labels().iter().map(|l| format!("{l}*")).collect();

    let mut mult = vec![vec![Elem::zero(n); n]; n];
    for k in 0..n {
        let e_k = Elem::basis(n, k);
        for (c, l, r) in h.comult_entry(k) {
            mult[*l][*r].add_scaled(c, &e_k);
        }
    }

    let mut comult: Vec<ComultRow> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            let product = h.mult_entry(i, j);
            for (k, coeff) in product.coords().iter().enumerate() {
                if !coeff.is_zero() {
                    comult[k].push((coeff.clone(), i, j));
                }
            }
        }
    }

    let unit = Elem::from_coords(h.counit_coeffs().to_vec());
    let counit = h.unit_elem().coords().to_vec();
    let antipode = h.antipode_matrix().transpose();

    HopfAlgebra::new(format!("{}*", h.name()), labels, mult, unit, comult, counit, antipode)
        .expect("dual of a well-shaped algebra is well-shaped")
}

/// The dual automorphism τ* (α ↦ α∘τ), validated against `dual_h`.
pub fn dual_automorphism(
    tau: &HopfAutomorphism,
    dual_h: &HopfAlgebra,
) -> Result<HopfAutomorphism, StructureError> {
    HopfAutomorphism::new(
        dual_h,
        format!("{}*", tau.name()),
        tau.matrix().transpose(),
        tau.order(),
    )
}

/// Componentwise Hopf structure on the product basis b_i ⊗ b′_j
/// (index i·dim′ + j).
pub fn tensor_product(a: &HopfAlgebra, b: &HopfAlgebra) -> HopfAlgebra {
    let (n, m) = (a.dim(), b.dim());
    let dim = n * m;
    let idx = |i: usize, j: usize| i * m + j;

    let labels: Vec<String> = (0..dim)
        .map(|p| format!("{}(x){}", a.basis_labels()[p / m], b.basis_labels()[p % m]))
        .collect();

    let outer = |ea: &Elem, eb: &Elem| {
        let mut coords = vec![CycNumber::zero(); dim];
        for (i, ca) in ea.coords().iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in eb.coords().iter().enumerate() {
                if !cb.is_zero() {
                    coords[idx(i, j)] = ca * cb;
                }
            }
        }
        Elem::from_coords(coords)
    };

    let mut mult = vec![vec![Elem::zero(dim); dim]; dim];
    for p in 0..dim {
        for q in 0..dim {
            mult[p][q] = outer(a.mult_entry(p / m, q / m), b.mult_entry(p % m, q % m));
        }
    }

    let unit = outer(a.unit_elem(), b.unit_elem());

    // Δ(x⊗y) = Σ (x₁⊗y₁) ⊗ (x₂⊗y₂): the middle flip is what makes the
    // product of coalgebras a coalgebra.
    let mut comult: Vec<ComultRow> = Vec::with_capacity(dim);
    for p in 0..dim {
        let mut row = ComultRow::new();
        for (c1, l1, r1) in a.comult_entry(p / m) {
            for (c2, l2, r2) in b.comult_entry(p % m) {
                row.push((c1 * c2, idx(*l1, *l2), idx(*r1, *r2)));
            }
        }
        comult.push(row);
    }

    let counit: Vec<CycNumber> = (0..dim)
        .map(|p| &a.counit_coeffs()[p / m] * &b.counit_coeffs()[p % m])
        .collect();

    let antipode = a.antipode_matrix().kronecker(b.antipode_matrix());

    HopfAlgebra::new(
        format!("{}(x){}", a.name(), b.name()),
        labels,
        mult,
        unit,
        comult,
        counit,
        antipode,
    )
    .expect("tensor product of well-shaped algebras is well-shaped")
}

/// τ ⊗ τ′ on the tensor-product algebra; its order is lcm(r, r′).
pub fn tensor_automorphism(
    tau_a: &HopfAutomorphism,
    tau_b: &HopfAutomorphism,
    tensor_h: &HopfAlgebra,
) -> Result<HopfAutomorphism, StructureError> {
    let order = tau_a.order().lcm(&tau_b.order());
    let gamma = HopfAutomorphism::new(
        tensor_h,
        format!("{}(x){}", tau_a.name(), tau_b.name()),
        tau_a.matrix().kronecker(tau_b.matrix()),
        order,
    )?;
    debug_assert_eq!(gamma.order(), order, "order of a tensor automorphism is the lcm");
    Ok(gamma)
}

/// Checks a multiplication table for the group laws; `Ok` holds the inverse
/// of each element.
fn check_group_table(cayley: &[Vec<usize>], identity: usize) -> Result<Vec<usize>, StructureError> {
    let n = cayley.len();
    let fail = |reason: String| Err(StructureError::NotAGroup { reason });
    if n == 0 {
        return fail("empty table".to_string());
    }
    if identity >= n {
        return fail(format!("identity index {identity} out of range"));
    }
    for (i, row) in cayley.iter().enumerate() {
        if row.len() != n {
            return fail(format!("row {i} has {} entries, expected {n}", row.len()));
        }
        if let Some(bad) = row.iter().find(|&&e| e >= n) {
            return fail(format!("entry {bad} in row {i} out of range"));
        }
    }
    for i in 0..n {
        if cayley[identity][i] != i || cayley[i][identity] != i {
            return fail(format!("element {identity} is not an identity at {i}"));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if cayley[cayley[i][j]][k] != cayley[i][cayley[j][k]] {
                    return fail(format!("associativity fails at ({i}, {j}, {k})"));
                }
            }
        }
    }
    let mut inverse = vec![usize::MAX; n];
    for i in 0..n {
        match (0..n).find(|&j| cayley[i][j] == identity && cayley[j][i] == identity) {
            Some(j) => inverse[i] = j,
            None => return fail(format!("element {i} has no inverse")),
        }
    }
    Ok(inverse)
}

/// The group algebra k[G] from a Cayley table: Δ(g) = g⊗g, ε(g) = 1,
/// S(g) = g⁻¹.
pub fn group_algebra(
    name: &str,
    labels: &[&str],
    cayley: &[Vec<usize>],
    identity: usize,
) -> Result<HopfAlgebra, StructureError> {
    let inverse = check_group_table(cayley, identity)?;
    let n = cayley.len();
    if labels.len() != n {
        return Err(StructureError::InvalidStructure {
            message: format!("{} labels for {n} group elements", labels.len()),
        });
    }
    let mult: Vec<Vec<Elem>> = cayley
        .iter()
        .map(|row| row.iter().map(|&k| Elem::basis(n, k)).collect())
        .collect();
    let comult: Vec<ComultRow> =
        (0..n).map(|i| vec![(CycNumber::one(), i, i)]).collect();
    let counit = vec![CycNumber::one(); n];
    let mut antipode = Matrix::zeros(n, n);
    for (g, &inv) in inverse.iter().enumerate() {
        antipode.set(inv, g, CycNumber::one());
    }
    HopfAlgebra::new(
        name.to_string(),
        labels.iter().map(|s| s.to_string()).collect(),
        mult,
        Elem::basis(n, identity),
        comult,
        counit,
        antipode,
    )
}

/// Recovers the Cayley table if `h` carries the group-algebra structure on its
/// basis (basis-to-basis products, group-like basis, ε ≡ 1).
pub fn group_cayley(h: &HopfAlgebra) -> Option<Vec<Vec<usize>>> {
    let n = h.dim();
    let as_basis_index = |e: &Elem| {
        let mut found = None;
        for (k, c) in e.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_one() || found.is_some() {
                return None;
            }
            found = Some(k);
        }
        found
    };
    as_basis_index(h.unit_elem())?;
    for i in 0..n {
        match h.comult_entry(i) {
            [(c, l, r)] if c.is_one() && *l == i && *r == i => {}
            _ => return None,
        }
        if !h.counit_coeffs()[i].is_one() {
            return None;
        }
    }
    let mut table = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(as_basis_index(h.mult_entry(i, j))?);
        }
        table.push(row);
    }
    Some(table)
}

/// A group automorphism as a Hopf automorphism: `perm[i]` is the image of
/// basis element i.
pub fn group_automorphism(
    h: &HopfAlgebra,
    name: &str,
    perm: &[usize],
) -> Result<HopfAutomorphism, StructureError> {
    let cayley = group_cayley(h).ok_or_else(|| StructureError::NotAGroup {
        reason: format!("'{}' does not carry the group-algebra structure", h.name()),
    })?;
    let n = cayley.len();
    let fail = |reason: String| Err(StructureError::NotAGroupAutomorphism { reason });
    if perm.len() != n {
        return fail(format!("permutation has {} entries, expected {n}", perm.len()));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return fail("not a permutation of the basis".to_string());
        }
        seen[p] = true;
    }
    for i in 0..n {
        for j in 0..n {
            if perm[cayley[i][j]] != cayley[perm[i]][perm[j]] {
                return fail(format!("multiplicativity fails at ({i}, {j})"));
            }
        }
    }
    let order = permutation_order(perm);
    let mut matrix = Matrix::zeros(n, n);
    for (j, &p) in perm.iter().enumerate() {
        matrix.set(p, j, CycNumber::one());
    }
    let auto = HopfAutomorphism::new(h, name.to_string(), matrix, order)
        .expect("a group automorphism always passes the Hopf checks");
    debug_assert_eq!(auto.order(), order);
    Ok(auto)
}

fn permutation_order(perm: &[usize]) -> u64 {
    let mut seen = vec![false; perm.len()];
    let mut order: u64 = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len: u64 = 0;
        let mut at = start;
        while !seen[at] {
            seen[at] = true;
            at = perm[at];
            len += 1;
        }
        order = order.lcm(&len);
    }
    order
}
