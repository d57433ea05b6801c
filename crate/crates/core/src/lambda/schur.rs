use crate::characters::CharacterTable;
use crate::combinatorics::{CycleType, Partition};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::sympoly::SymPolyN;

/// Determinant by expansion over column subsets (`O(2^k · k)` products).
fn determinant<T: Scalar>(matrix: &[Vec<SymPolyN<T>>], n_vars: usize) -> SymPolyN<T> {
    let k = matrix.len();
    if k == 0 {
        return SymPolyN::one(n_vars);
    }
    let full = (1usize << k) - 1;
    let mut minors: Vec<Option<SymPolyN<T>>> = vec![None; full + 1];
    minors[0] = Some(SymPolyN::one(n_vars));
    for mask in 1..=full {
        let row = mask.count_ones() as usize - 1;
        let mut acc = SymPolyN::zero(n_vars);
        let mut pos = 0;
        for col in 0..k {
            if mask & (1 << col) == 0 {
                continue;
            }
            let entry = &matrix[row][col];
            if !entry.is_zero() {
                let rest = minors[mask & !(1 << col)].as_ref().unwrap();
                let term = entry.mul(rest);
                acc = if (row + pos) % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            pos += 1;
        }
        minors[mask] = Some(acc);
    }
    minors[full].take().unwrap()
}

fn jacobi_trudi<T: Scalar>(
    shape: &Partition,
    n_vars: usize,
    entry: fn(usize, usize) -> SymPolyN<T>,
) -> SymPolyN<T> {
    let rows = shape.parts();
    let k = rows.len();
    let matrix: Vec<Vec<SymPolyN<T>>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let idx = rows[i] as isize - i as isize + j as isize;
                    if idx < 0 {
                        SymPolyN::zero(n_vars)
                    } else {
                        entry(idx as usize, n_vars)
                    }
                })
                .collect()
        })
        .collect();
    determinant(&matrix, n_vars)
}

fn check_rows(shape: &Partition, n_vars: usize) -> Result<()> {
    if shape.len() > n_vars {
        return Err(Error::Domain(format!(
            "shape {shape} has {} rows, more than the {n_vars} variables",
            shape.len()
        )));
    }
    Ok(())
}

/// Schur polynomial `s_Δ(x_1..x_N)` via the Jacobi–Trudi determinant in `h_k`.
pub fn schur<T: Scalar>(shape: &Partition, n_vars: usize) -> Result<SymPolyN<T>> {
    check_rows(shape, n_vars)?;
    Ok(jacobi_trudi(shape, n_vars, SymPolyN::complete_homogeneous))
}

/// Schur polynomial via the dual Jacobi–Trudi determinant in `e_k` of the conjugate shape.
pub fn schur_dual<T: Scalar>(shape: &Partition, n_vars: usize) -> Result<SymPolyN<T>> {
    check_rows(shape, n_vars)?;
    Ok(jacobi_trudi(&shape.conjugate(), n_vars, SymPolyN::elementary))
}

/// `∏_r N_r(x)^{l_r}`: the `GL_N × S_n` character of `(C^N)^{⊗n}` at a class `μ`.
pub fn schur_weyl_lhs<T: Scalar>(mu: &CycleType, n_vars: usize) -> SymPolyN<T> {
    SymPolyN::power_sum_product(&mu.to_partition(), n_vars)
}

/// `Σ_Δ χ_Δ(μ) s_Δ(x)` over diagrams with at most `N` rows.
pub fn schur_weyl_rhs<T: Scalar>(
    mu: &CycleType,
    n_vars: usize,
    table: &CharacterTable,
) -> Result<SymPolyN<T>> {
    if table.n() != mu.n() {
        return Err(Error::Domain(format!(
            "class {mu} is not in S_{}",
            table.n()
        )));
    }
    let mut out = SymPolyN::zero(n_vars);
    for shape in table.irreps() {
        if shape.len() > n_vars {
            continue;
        }
        let chi = table.value(shape, mu)?;
        if chi == 0.into() {
            continue;
        }
        out = out.add(&schur(shape, n_vars)?.scale(&T::from_bigint(&chi)));
    }
    Ok(out)
}
