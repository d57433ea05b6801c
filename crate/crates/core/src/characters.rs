//! Irreducible characters of `S_n`, class functions, and induction from Young subgroups.
//!
//! The character table is computed with the Murnaghan–Nakayama rule. Rim hooks
//! are removed on the beta-set (abacus) form of a partition, and intermediate
//! values are memoized on `(shape, remaining cycle lengths)`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::combinatorics::{class_size, factorial, partitions, CycleType, Partition};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::TruncSeries;

/// Largest `n` for which [`CharacterTable::new`] builds a table.
pub const CHARACTER_TABLE_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq)]
pub struct CharacterTable {
    n: usize,
    classes: Vec<CycleType>,
    irreps: Vec<Partition>,
    values: Vec<Vec<BigInt>>,
    class_index: HashMap<Partition, usize>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_cap(n, CHARACTER_TABLE_CAP)
    }

    pub fn with_cap(n: usize, cap: usize) -> Result<Self> {
        if n > cap {
            return Err(Error::SizeLimit {
                what: "character table",
                requested: n,
                cap,
            });
        }
        let shapes = partitions(n)?;
        let mut memo = HashMap::new();
        let values = shapes
            .iter()
            .map(|shape| {
                shapes
                    .iter()
                    .map(|mu| mn_character(shape.parts(), mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        let class_index = shapes
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Ok(CharacterTable {
            n,
            classes: shapes.iter().map(Partition::cycle_type).collect(),
            irreps: shapes,
            values,
            class_index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Conjugacy classes, canonical order.
    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    /// Irreducibles by Young diagram, canonical order.
    pub fn irreps(&self) -> &[Partition] {
        &self.irreps
    }

    /// `values()[i][j] = χ_{irreps[i]}(classes[j])`.
    pub fn values(&self) -> &[Vec<BigInt>] {
        &self.values
    }

    pub fn class_position(&self, mu: &CycleType) -> Result<usize> {
        self.class_index
            .get(&mu.to_partition())
            .copied()
            .ok_or_else(|| Error::Domain(format!("{mu} is not a class of S_{}", self.n)))
    }

    pub fn irrep_position(&self, shape: &Partition) -> Result<usize> {
        // Irreducibles and classes share the canonical partition order.
        self.class_index
            .get(shape)
            .copied()
            .ok_or_else(|| Error::Domain(format!("{shape} is not a diagram of size {}", self.n)))
    }

    pub fn row(&self, shape: &Partition) -> Result<&[BigInt]> {
        Ok(&self.values[self.irrep_position(shape)?])
    }

    pub fn value(&self, shape: &Partition, mu: &CycleType) -> Result<BigInt> {
        Ok(self.values[self.irrep_position(shape)?][self.class_position(mu)?].clone())
    }

    /// `χ_Δ(id)`.
    pub fn dimension(&self, shape: &Partition) -> Result<BigInt> {
        self.value(shape, &Partition::ones(self.n).cycle_type())
    }
}

/// Positions of beads for a partition with `len` rows: `λ_i + len - 1 - i`.
fn beta_set(parts: &[usize]) -> Vec<usize> {
    let len = parts.len();
    parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect()
}

fn from_beta_set(mut beads: Vec<usize>) -> Vec<usize> {
    beads.sort_unstable_by(|a, b| b.cmp(a));
    let len = beads.len();
    beads
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (len - 1 - i))
        .filter(|&p| p > 0)
        .collect()
}

fn mn_character(
    shape: &[usize],
    cycles: &[usize],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), BigInt>,
) -> BigInt {
    let Some((&r, rest)) = cycles.split_first() else {
        return if shape.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    };
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let beads = beta_set(shape);
    let mut total = BigInt::zero();
    for (i, &b) in beads.iter().enumerate() {
        if b < r || beads.contains(&(b - r)) {
            continue;
        }
        // Height of the rim hook = beads strictly between the old and new position.
        let height = beads.iter().filter(|&&c| c > b - r && c < b).count();
        let mut moved = beads.clone();
        moved[i] = b - r;
        let smaller = from_beta_set(moved);
        let chi = mn_character(&smaller, rest, memo);
        if height % 2 == 0 {
            total += chi;
        } else {
            total -= chi;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// `n! / ∏ hook lengths`, the number of standard Young tableaux.
pub fn hook_length_dimension(shape: &Partition) -> BigUint {
    let conj = shape.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in shape.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.parts()[j] - i - 1;
            hooks *= BigUint::from(arm + leg + 1);
        }
    }
    factorial(shape.n()) / hooks
}

/// A q-series valued class function on `S_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction<T> {
    n: usize,
    classes: Vec<CycleType>,
    values: Vec<TruncSeries<T>>,
}

impl<T: Scalar> ClassFunction<T> {
    /// Values listed in the canonical class order.
    pub fn new(n: usize, values: Vec<TruncSeries<T>>) -> Result<Self> {
        let classes: Vec<CycleType> = partitions(n)?.iter().map(Partition::cycle_type).collect();
        if classes.len() != values.len() {
            return Err(Error::Domain(format!(
                "S_{n} has {} classes, got {} values",
                classes.len(),
                values.len()
            )));
        }
        Ok(ClassFunction {
            n,
            classes,
            values,
        })
    }

    pub fn from_fn<F>(n: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(&CycleType) -> TruncSeries<T>,
    {
        let classes: Vec<CycleType> = partitions(n)?.iter().map(Partition::cycle_type).collect();
        let values = classes.iter().map(&mut f).collect();
        Ok(ClassFunction {
            n,
            classes,
            values,
        })
    }

    /// The irreducible character `χ_Δ` as a constant-series class function.
    pub fn from_character(table: &CharacterTable, shape: &Partition, order: usize) -> Result<Self> {
        let row = table.row(shape)?;
        Self::new(
            table.n(),
            row.iter()
                .map(|x| TruncSeries::constant(T::from_bigint(x), order))
                .collect(),
        )
    }

    pub fn trivial(n: usize, order: usize) -> Result<Self> {
        Self::from_fn(n, |_| TruncSeries::one(order))
    }

    /// Character of the regular representation: `n!` at the identity, 0 elsewhere.
    pub fn regular(n: usize, order: usize) -> Result<Self> {
        let nf = T::from_bigint(&BigInt::from(factorial(n)));
        Self::from_fn(n, |mu| {
            if mu.n() == mu.cycles() {
                TruncSeries::constant(nf.clone(), order)
            } else {
                TruncSeries::zero(order)
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn values(&self) -> &[TruncSeries<T>] {
        &self.values
    }

    pub fn value(&self, mu: &CycleType) -> Result<&TruncSeries<T>> {
        self.classes
            .iter()
            .position(|c| c == mu)
            .map(|i| &self.values[i])
            .ok_or_else(|| Error::Domain(format!("{mu} is not a class of S_{}", self.n)))
    }

    /// Smallest truncation order among the values.
    pub fn order(&self) -> usize {
        self.values.iter().map(TruncSeries::order).min().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        Ok(ClassFunction {
            n: self.n,
            classes: self.classes.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    /// Pointwise product (character of the tensor product).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        Ok(ClassFunction {
            n: self.n,
            classes: self.classes.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.mul(b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        ClassFunction {
            n: self.n,
            classes: self.classes.clone(),
            values: self.values.iter().map(|v| v.scale(c)).collect(),
        }
    }

    fn check_same_group(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Domain(format!(
                "class functions on S_{} and S_{} cannot be combined",
                self.n, other.n
            )));
        }
        Ok(())
    }
}

/// `(1/n!) Σ_μ |C_μ| f(μ) g(μ)`; characters of `S_n` are real.
pub fn inner_product<T: Scalar>(
    f: &ClassFunction<T>,
    g: &ClassFunction<T>,
) -> Result<TruncSeries<T>> {
    f.check_same_group(g)?;
    let nf = T::from_bigint(&BigInt::from(factorial(f.n)));
    let order = f.order().min(g.order());
    let mut acc = TruncSeries::zero(order);
    for ((mu, a), b) in f.classes.iter().zip(&f.values).zip(&g.values) {
        let weight = T::from_bigint(&BigInt::from(class_size(mu))) / nf.clone();
        acc = acc.add(&a.mul(b).scale(&weight));
    }
    Ok(acc)
}

/// Multiplicity of the irreducible `Δ` in the (graded) module with character `f`.
pub fn multiplicity<T: Scalar>(
    f: &ClassFunction<T>,
    shape: &Partition,
    table: &CharacterTable,
) -> Result<TruncSeries<T>> {
    if table.n() != f.n() || shape.n() != f.n() {
        return Err(Error::Domain(format!(
            "class function on S_{} paired with {shape} from S_{}",
            f.n(),
            table.n()
        )));
    }
    let chi = ClassFunction::from_character(table, shape, f.order())?;
    inner_product(f, &chi)
}

/// Multiplicities of every irreducible, in canonical order.
pub fn decompose<T: Scalar>(
    f: &ClassFunction<T>,
    table: &CharacterTable,
) -> Result<Vec<(Partition, TruncSeries<T>)>> {
    table
        .irreps()
        .iter()
        .map(|shape| Ok((shape.clone(), multiplicity(f, shape, table)?)))
        .collect()
}

/// Splits `mu` into `(alpha, mu - alpha)` over every sub-multiset `alpha ⊢ k`.
pub(crate) fn splittings(mu: &CycleType, k: usize) -> Result<Vec<(CycleType, CycleType)>> {
    let mut out = Vec::new();
    for alpha in partitions(k)? {
        let a = alpha.cycle_type();
        if a.iter().all(|(len, l)| mu.multiplicity(len) >= l) {
            let b = CycleType::from_counts(mu.iter().map(|(len, l)| (len, l - a.multiplicity(len))))?;
            out.push((a, b));
        }
    }
    Ok(out)
}

/// Character of `Ind_{S_k × S_l}^{S_{k+l}} (f ⊗ g)`.
///
/// At a class `μ` this is `Σ z_μ / (z_α z_β) · f(α) g(β)` over the ways to
/// split the cycles of `μ` into `α ⊢ k` and `β ⊢ l`, where `z` is the
/// centralizer order.
pub fn induce_character<T: Scalar>(
    f: &ClassFunction<T>,
    g: &ClassFunction<T>,
) -> Result<ClassFunction<T>> {
    let n = f.n + g.n;
    let order = f.order().min(g.order());
    let mut err = None;
    let out = ClassFunction::from_fn(n, |mu| {
        let z_mu = T::from_bigint(&BigInt::from(mu.centralizer_order()));
        let mut acc = TruncSeries::zero(order);
        let parts = match splittings(mu, f.n) {
            Ok(p) => p,
            Err(e) => {
                err = Some(e);
                return acc;
            }
        };
        for (alpha, beta) in parts {
            let (fa, gb) = match (f.value(&alpha), g.value(&beta)) {
                (Ok(fa), Ok(gb)) => (fa, gb),
                (Err(e), _) | (_, Err(e)) => {
                    err = Some(e);
                    return acc;
                }
            };
            let z = T::from_bigint(&BigInt::from(
                alpha.centralizer_order() * beta.centralizer_order(),
            ));
            acc = acc.add(&fa.mul(gb).scale(&(z_mu.clone() / z)));
        }
        acc
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}
