//! Specht modules as explicit tableau-indexed matrices, and irreducible
//! characters of the symmetric groups.
//!
//! The raw matrix `W_λ(σ)` has `(t, u)` entry `χ(r∘u∘σ, c∘t)`; the
//! representation is `W_λ(1)⁻¹ · W_λ(σ)`. It satisfies
//! `action(σ) · action(τ) = action(τ ∘ σ)`, so it acts on row vectors from
//! the right.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::combinatorics::{
    chi, col_word, precompose, row_word, standard_tableaux, Diagram, Permutation, Tableau,
};
use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;

/// A Specht module with its tableau basis and the inverse of `W_λ(1)` cached.
#[derive(Clone, Debug)]
pub struct SpechtModule {
    shape: Diagram,
    tableaux: Vec<Tableau>,
    row_words: Vec<Vec<usize>>,
    col_words: Vec<Vec<usize>>,
    raw_identity_inverse: RationalMatrix,
}

impl SpechtModule {
    pub fn new(shape: &Diagram) -> Self {
        let tableaux = standard_tableaux(shape);
        let row_words = tableaux.iter().map(row_word).collect();
        let col_words = tableaux.iter().map(col_word).collect();
        let mut module = SpechtModule {
            shape: shape.clone(),
            tableaux,
            row_words,
            col_words,
            raw_identity_inverse: RationalMatrix::identity(0),
        };
        let raw = module.raw_unchecked(&Permutation::identity(shape.size()));
        module.raw_identity_inverse = raw
            .inverse()
            .expect("W_λ(1) is invertible for every diagram");
        module
    }

    pub fn shape(&self) -> &Diagram {
        &self.shape
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn dimension(&self) -> usize {
        self.tableaux.len()
    }

    pub fn row_words(&self) -> &[Vec<usize>] {
        &self.row_words
    }

    pub fn col_words(&self) -> &[Vec<usize>] {
        &self.col_words
    }

    pub fn raw_identity_inverse(&self) -> &RationalMatrix {
        &self.raw_identity_inverse
    }

    fn check_degree(&self, sigma: &Permutation) -> Result<()> {
        if sigma.degree() != self.shape.size() {
            return Err(Error::SizeMismatch {
                expected: self.shape.size(),
                found: sigma.degree(),
            });
        }
        Ok(())
    }

    fn raw_unchecked(&self, sigma: &Permutation) -> RationalMatrix {
        let d = self.dimension();
        let mut m = RationalMatrix::zeros(d, d);
        for (ti, cw) in self.col_words.iter().enumerate() {
            for (ui, rw) in self.row_words.iter().enumerate() {
                let v = chi(&precompose(rw, sigma), cw);
                if v != 0 {
                    m.set(ti, ui, BigRational::from_integer(BigInt::from(v)));
                }
            }
        }
        m
    }

    /// `W_λ(σ)`.
    pub fn raw(&self, sigma: &Permutation) -> Result<RationalMatrix> {
        self.check_degree(sigma)?;
        Ok(self.raw_unchecked(sigma))
    }

    /// `W_λ(1)⁻¹ · W_λ(σ)`.
    pub fn action(&self, sigma: &Permutation) -> Result<RationalMatrix> {
        self.raw_identity_inverse.mul(&self.raw(sigma)?)
    }
}

pub fn w_raw(shape: &Diagram, sigma: &Permutation) -> Result<RationalMatrix> {
    if sigma.degree() != shape.size() {
        return Err(Error::SizeMismatch {
            expected: shape.size(),
            found: sigma.degree(),
        });
    }
    SpechtModule::new(shape).raw(sigma)
}

pub fn specht_action(shape: &Diagram, sigma: &Permutation) -> Result<RationalMatrix> {
    if sigma.degree() != shape.size() {
        return Err(Error::SizeMismatch {
            expected: shape.size(),
            found: sigma.degree(),
        });
    }
    SpechtModule::new(shape).action(sigma)
}

type CharacterCache = HashMap<(Vec<usize>, Vec<usize>), i64>;

thread_local! {
    static MN_CACHE: RefCell<CharacterCache> = RefCell::new(HashMap::new());
}

/// Irreducible character `χ_λ(μ)` by the Murnaghan-Nakayama rule.
pub fn mn_character(shape: &Diagram, class: &Diagram) -> Result<i64> {
    if shape.size() != class.size() {
        return Err(Error::SizeMismatch {
            expected: shape.size(),
            found: class.size(),
        });
    }
    Ok(mn_rec(shape.rows(), class.rows()))
}

fn mn_rec(shape: &[usize], class: &[usize]) -> i64 {
    let Some((&hook, rest)) = class.split_first() else {
        return 1;
    };
    let key = (shape.to_vec(), class.to_vec());
    if let Some(v) = MN_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return v;
    }
    // Beta numbers: removing a rim hook of length `hook` moves one bead down
    // by `hook` onto an empty position; the sign counts the beads jumped.
    let len = shape.len();
    let beta: Vec<usize> = shape
        .iter()
        .enumerate()
        .map(|(i, &r)| r + len - 1 - i)
        .collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < hook || beta.contains(&(b - hook)) {
            continue;
        }
        let target = b - hook;
        let jumped = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let smaller: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(j, &x)| x + j + 1 - len)
            .filter(|&r| r > 0)
            .collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&smaller, rest);
    }
    MN_CACHE.with(|c| c.borrow_mut().insert(key, total));
    total
}

/// Trace of `specht_action` on the canonical representative of `class`.
pub fn character_of_action(shape: &Diagram, class: &Diagram) -> Result<i64> {
    if shape.size() != class.size() {
        return Err(Error::SizeMismatch {
            expected: shape.size(),
            found: class.size(),
        });
    }
    let trace = specht_action(shape, &Permutation::class_representative(class))?.trace();
    rational_to_i64(&trace)
}

pub(crate) fn rational_to_i64(v: &BigRational) -> Result<i64> {
    if !v.is_integer() {
        return Err(Error::Inconsistent(format!(
            "expected an integer, found {v}"
        )));
    }
    v.to_integer()
        .to_i64()
        .ok_or_else(|| Error::Inconsistent(format!("{v} does not fit in 64 bits")))
}
