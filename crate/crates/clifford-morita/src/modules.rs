//! Finite-dimensional graded left modules over a superalgebra, the parity
//! change and suspension functors, graded Hom spaces and twisted endomorphism
//! superalgebras.

use std::collections::BTreeMap;

use crate::algebra::{Element, Parity, SuperAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, RowSpan};
use crate::scalar::ExactScalar;

/// Which twisting functor S a construction uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    Sigma,
    Pi,
}

impl std::fmt::Display for Twist {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Twist::Sigma => write!(f, "sigma"),
            Twist::Pi => write!(f, "pi"),
        }
    }
}

/// A graded module given by one exact action matrix per algebra basis
/// element, columns indexed by the module basis.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedModule<K> {
    pub algebra_id: u64,
    pub dim: usize,
    pub parity: Vec<Parity>,
    pub algebra_parity: Vec<Parity>,
    pub action: Vec<Matrix<K>>,
}

/// The left module Af on a row-reduced graded basis; also returns the basis
/// as elements of A (even block first).
pub fn module_from_idempotent<K: ExactScalar>(
    a: &SuperAlgebra<K>,
    f: &Element<K>,
) -> Result<(GradedModule<K>, Vec<Element<K>>)> {
    if !a.is_even_idempotent(f)? {
        return Err(Error::NotIdempotent);
    }
    let mut spans = [RowSpan::new(a.dim()), RowSpan::new(a.dim())];
    for k in 0..a.dim() {
        let v = a.mul(&a.basis_element(k), f)?;
        spans[a.parity_of(k) as usize].insert(a.dense_coords(&v));
    }
    let ne = spans[0].rank();
    let mut basis = Vec::new();
    let mut parity = Vec::new();
    for (p, span) in spans.iter().enumerate() {
        for row in span.rows() {
            basis.push(a.element_from_dense(row));
            parity.push(p as Parity);
        }
    }
    let dim = basis.len();
    let express = |v: &Element<K>| -> Option<Vec<K>> {
        let p = a.homogeneous_parity(v)?;
        let coords = spans[p as usize].coordinates_in_rows(&a.dense_coords(v))?;
        let offset = if p == 0 { 0 } else { ne };
        let mut out = vec![K::zero(); dim];
        for (i, c) in coords.into_iter().enumerate() {
            out[i + offset] = c;
        }
        Some(out)
    };
    let mut action = Vec::with_capacity(a.dim());
    for i in 0..a.dim() {
        let mut m = Matrix::zero(dim, dim);
        for (j, b) in basis.iter().enumerate() {
            let col = a.mul(&a.basis_element(i), b)?;
            let coords = express(&col).ok_or_else(|| {
                Error::DimMismatch("action leaves the module span".into())
            })?;
            for (r, c) in coords.into_iter().enumerate() {
                m[(r, j)] = c;
            }
        }
        action.push(m);
    }
    Ok((
        GradedModule {
            algebra_id: a.id(),
            dim,
            parity,
            algebra_parity: a.parity_vec().to_vec(),
            action,
        },
        basis,
    ))
}

/// The left regular module.
pub fn regular_module<K: ExactScalar>(a: &SuperAlgebra<K>) -> GradedModule<K> {
    let action = (0..a.dim())
        .map(|i| a.left_mul_matrix(&a.basis_element(i)).unwrap())
        .collect();
    GradedModule {
        algebra_id: a.id(),
        dim: a.dim(),
        parity: a.parity_vec().to_vec(),
        algebra_parity: a.parity_vec().to_vec(),
        action,
    }
}

/// Parity change π: flips the grading and negates the action of odd algebra
/// elements.
pub fn parity_change<K: ExactScalar>(m: &GradedModule<K>) -> GradedModule<K> {
    let mut out = suspension(m);
    for (i, mat) in out.action.iter_mut().enumerate() {
        if m.algebra_parity[i] == 1 {
            *mat = mat.scale(&-K::one());
        }
    }
    out
}

/// Suspension σ: flips the grading, action unchanged.
pub fn suspension<K: ExactScalar>(m: &GradedModule<K>) -> GradedModule<K> {
    GradedModule {
        algebra_id: m.algebra_id,
        dim: m.dim,
        parity: m.parity.iter().map(|p| p ^ 1).collect(),
        algebra_parity: m.algebra_parity.clone(),
        action: m.action.clone(),
    }
}

pub fn apply_twist<K: ExactScalar>(twist: Twist, m: &GradedModule<K>) -> GradedModule<K> {
    match twist {
        Twist::Sigma => suspension(m),
        Twist::Pi => parity_change(m),
    }
}

pub fn direct_sum<K: ExactScalar>(m: &GradedModule<K>, n: &GradedModule<K>) -> GradedModule<K> {
    assert_eq!(m.algebra_id, n.algebra_id);
    let dim = m.dim + n.dim;
    let mut parity = m.parity.clone();
    parity.extend_from_slice(&n.parity);
    let action = m
        .action
        .iter()
        .zip(&n.action)
        .map(|(am, an)| {
            let mut big = Matrix::zero(dim, dim);
            for i in 0..m.dim {
                for j in 0..m.dim {
                    big[(i, j)] = am[(i, j)].clone();
                }
            }
            for i in 0..n.dim {
                for j in 0..n.dim {
                    big[(m.dim + i, m.dim + j)] = an[(i, j)].clone();
                }
            }
            big
        })
        .collect();
    GradedModule {
        algebra_id: m.algebra_id,
        dim,
        parity,
        algebra_parity: m.algebra_parity.clone(),
        action,
    }
}

/// View a module over A as a module over Â on the same space:
/// â·m = (−1)^{|a||m|} a·m.
pub fn hat_module<K: ExactScalar>(
    hat_a: &SuperAlgebra<K>,
    m: &GradedModule<K>,
) -> GradedModule<K> {
    assert_eq!(hat_a.parity_vec(), &m.algebra_parity[..]);
    let action = m
        .action
        .iter()
        .enumerate()
        .map(|(i, mat)| {
            let mut out = mat.clone();
            if m.algebra_parity[i] == 1 {
                for r in 0..m.dim {
                    for c in 0..m.dim {
                        if m.parity[c] == 1 {
                            out[(r, c)] = -out[(r, c)].clone();
                        }
                    }
                }
            }
            out
        })
        .collect();
    GradedModule {
        algebra_id: hat_a.id(),
        dim: m.dim,
        parity: m.parity.clone(),
        algebra_parity: m.algebra_parity.clone(),
        action,
    }
}

/// Exhaustive check of the module axioms against the algebra's structure
/// constants, the unit action and the grading.
pub fn module_axioms_hold<K: ExactScalar>(a: &SuperAlgebra<K>, m: &GradedModule<K>) -> bool {
    if m.algebra_id != a.id() || m.action.len() != a.dim() {
        return false;
    }
    let unit_action = act_by(a, m, &a.unit());
    if unit_action != Matrix::identity(m.dim) {
        return false;
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = m.action[i].mul(&m.action[j]);
            let mut rhs = Matrix::zero(m.dim, m.dim);
            for (k, c) in a.basis_product(i, j) {
                rhs = rhs.add(&m.action[k].scale(&c));
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    for i in 0..a.dim() {
        for r in 0..m.dim {
            for c in 0..m.dim {
                if !m.action[i][(r, c)].is_zero()
                    && m.parity[r] != (m.parity[c] + a.parity_of(i)) % 2
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Action matrix of an arbitrary algebra element.
pub fn act_by<K: ExactScalar>(
    _a: &SuperAlgebra<K>,
    m: &GradedModule<K>,
    x: &Element<K>,
) -> Matrix<K> {
    let mut out = Matrix::zero(m.dim, m.dim);
    for i in x.support() {
        out = out.add(&m.action[i].scale(&x.coeff(i)));
    }
    out
}

/// Basis of the degree-i homomorphism space Hom(M, N)_i: matrices F with
/// F(M_j) ⊆ N_{i+j} and F·a_M = (−1)^{i|a|} a_N·F, solved exactly. Degree 0
/// is the graded Hom space Hom_Gr(M, N).
pub fn hom_basis<K: ExactScalar>(
    a: &SuperAlgebra<K>,
    m: &GradedModule<K>,
    n: &GradedModule<K>,
    i: Parity,
) -> Result<Vec<Matrix<K>>> {
    if m.algebra_id != a.id() || n.algebra_id != a.id() {
        return Err(Error::AlgebraMismatch(a.label().to_string()));
    }
    // Positions allowed by the grading constraint.
    let mut unknown_at = BTreeMap::new();
    let mut positions = Vec::new();
    for r in 0..n.dim {
        for c in 0..m.dim {
            if n.parity[r] == (m.parity[c] + i) % 2 {
                unknown_at.insert((r, c), positions.len());
                positions.push((r, c));
            }
        }
    }
    if positions.is_empty() {
        return Ok(Vec::new());
    }
    // Constraints from a generating set suffice; use the single-generator
    // blades for monomial algebras, all basis elements otherwise.
    let gens: Vec<usize> = if a.is_monomial() {
        (0..a.signature().unwrap().n()).map(|k| 1 << k).collect()
    } else {
        (0..a.dim()).collect()
    };
    let mut rows: Vec<Vec<K>> = Vec::new();
    for &g in &gens {
        let sign = if i == 1 && a.parity_of(g) == 1 {
            -K::one()
        } else {
            K::one()
        };
        let am = &m.action[g];
        let an = &n.action[g];
        for r in 0..n.dim {
            for cp in 0..m.dim {
                let mut row = vec![K::zero(); positions.len()];
                let mut nonzero = false;
                // (F·am)[r,cp] = Σ_c F[r,c]·am[c,cp]
                for c in 0..m.dim {
                    if let Some(&u) = unknown_at.get(&(r, c)) {
                        if !am[(c, cp)].is_zero() {
                            row[u] = row[u].clone() + am[(c, cp)].clone();
                            nonzero = true;
                        }
                    }
                }
                // −sign·(an·F)[r,cp] = −sign·Σ_{r'} an[r,r']·F[r',cp]
                for rp in 0..n.dim {
                    if let Some(&u) = unknown_at.get(&(rp, cp)) {
                        if !an[(r, rp)].is_zero() {
                            row[u] = row[u].clone() - sign.clone() * an[(r, rp)].clone();
                            nonzero = true;
                        }
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        // No constraints: every graded matrix qualifies.
        (0..positions.len())
            .map(|u| {
                let mut v = vec![K::zero(); positions.len()];
                v[u] = K::one();
                v
            })
            .collect()
    } else {
        Matrix::from_rows(rows).nullspace()
    };
    Ok(kernel
        .into_iter()
        .map(|v| {
            let mut f = Matrix::zero(n.dim, m.dim);
            for (u, &(r, c)) in positions.iter().enumerate() {
                f[(r, c)] = v[u].clone();
            }
            f
        })
        .collect())
}

/// The S-twisted endomorphism superalgebra End^S(M) = Hom_Gr(M,M) ⊕
/// Hom_Gr(S(M),M) under matrix composition. Returns the algebra and the
/// matrices realizing its basis (even block first).
pub fn twisted_end<K: ExactScalar>(
    a: &SuperAlgebra<K>,
    m: &GradedModule<K>,
    twist: Twist,
) -> Result<(SuperAlgebra<K>, Vec<Matrix<K>>)> {
    let even = hom_basis(a, m, m, 0)?;
    let twisted = apply_twist(twist, m);
    let odd = hom_basis(a, &twisted, m, 0)?;
    let ne = even.len();
    let dim = ne + odd.len();
    let mats: Vec<Matrix<K>> = even.into_iter().chain(odd).collect();
    let mut span = RowSpan::new(m.dim * m.dim);
    for mat in &mats {
        let fresh = span.insert(mat.flatten());
        debug_assert!(fresh, "graded Hom bases overlap");
    }
    let express = |mat: &Matrix<K>| -> Option<Vec<(usize, K)>> {
        let coords = span.coordinates_in_inserted(&mat.flatten())?;
        Some(
            coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        )
    };
    let mut rows = vec![Vec::new(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let prod = mats[i].mul(&mats[j]);
            if prod.is_zero_matrix() {
                continue;
            }
            rows[i * dim + j] = express(&prod).ok_or_else(|| {
                Error::DimMismatch("twisted End is not closed under composition".into())
            })?;
        }
    }
    let unit = express(&Matrix::identity(m.dim)).ok_or_else(|| {
        Error::DimMismatch("identity not in the graded endomorphism span".into())
    })?;
    let parity: Vec<Parity> = (0..dim).map(|k| u8::from(k >= ne)).collect();
    let names = (0..dim).map(|k| format!("F{k}")).collect();
    let algebra = SuperAlgebra::general(
        parity,
        rows,
        unit.into_iter().collect(),
        format!("End^{}({})", twist, a.label()),
        names,
    );
    Ok((algebra, mats))
}
