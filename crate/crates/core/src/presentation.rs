//! Presentation matrices of FI-modules and the matrices `A_λ` built from them.
//!
//! Rows of `A_λ(f)` for `f: [x] -> [y]` are indexed by pairs `(p, t)` with
//! `p` a monotone injection `[k] -> [x]` and `t` a standard tableau of shape
//! `λ`; columns by `(q, u)` likewise over `[y]`. Pairs are ordered with `p`
//! outer (lexicographic) and `t` inner (the order of
//! [`standard_tableaux`](crate::combinatorics::standard_tableaux)). The
//! `((p, t), (q, u))` entry is `χ(r∘u∘ξ(f∘p), c∘t)` when `f∘p` and `q` have
//! the same image, and zero otherwise.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{
    chi, monotone_injections, nu, precompose, xi, Diagram, Injection, Permutation,
};
use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::specht::SpechtModule;

/// A finite rational combination of injections `[x] -> [y]`. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSum {
    source: usize,
    target: usize,
    terms: BTreeMap<Injection, BigRational>,
}

impl FormalSum {
    pub fn zero(source: usize, target: usize) -> Self {
        FormalSum {
            source,
            target,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(source: usize, target: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Injection, BigRational)>,
    {
        let mut sum = FormalSum::zero(source, target);
        for (f, c) in terms {
            sum.add_term(f, c)?;
        }
        Ok(sum)
    }

    /// Adds `coefficient · f`, merging with an existing term.
    pub fn add_term(&mut self, f: Injection, coefficient: BigRational) -> Result<()> {
        if f.source() != self.source || f.target() != self.target {
            return Err(Error::DimensionMismatch(format!(
                "injection {f} is [{}] -> [{}], sum is [{}] -> [{}]",
                f.source(),
                f.target(),
                self.source,
                self.target
            )));
        }
        let entry = self.terms.entry(f).or_insert_with(BigRational::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn terms(&self) -> &BTreeMap<Injection, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.values().cloned().sum()
    }

    pub fn scale(&self, alpha: &BigRational) -> FormalSum {
        let mut out = FormalSum::zero(self.source, self.target);
        if !alpha.is_zero() {
            out.terms = self
                .terms
                .iter()
                .map(|(f, c)| (f.clone(), c * alpha))
                .collect();
        }
        out
    }

    pub fn add(&self, other: &FormalSum) -> Result<FormalSum> {
        let mut out = self.clone();
        for (f, c) in &other.terms {
            out.add_term(f.clone(), c.clone())?;
        }
        Ok(out)
    }
}

/// Generators in degrees `x_1..x_g`, relations in degrees `y_1..y_r`, and a
/// `g × r` grid of formal sums. Indices are 0-based in this API; absent
/// entries are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PresentationMatrix {
    generator_degrees: Vec<usize>,
    relation_degrees: Vec<usize>,
    entries: BTreeMap<(usize, usize), FormalSum>,
}

impl PresentationMatrix {
    pub fn new(generator_degrees: Vec<usize>, relation_degrees: Vec<usize>) -> Self {
        PresentationMatrix {
            generator_degrees,
            relation_degrees,
            entries: BTreeMap::new(),
        }
    }

    /// Sets entry `(i, j)`; a zero sum clears it.
    pub fn set_entry(&mut self, i: usize, j: usize, sum: FormalSum) -> Result<()> {
        let (g, r) = (self.num_generators(), self.num_relations());
        if i >= g || j >= r {
            return Err(Error::EntryOutOfRange {
                row: i,
                col: j,
                rows: g,
                cols: r,
            });
        }
        let expected = (self.generator_degrees[i], self.relation_degrees[j]);
        if (sum.source, sum.target) != expected {
            return Err(Error::EntryArity {
                row: i,
                col: j,
                expected,
                found: (sum.source, sum.target),
            });
        }
        if sum.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), sum);
        }
        Ok(())
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<&FormalSum> {
        self.entries.get(&(i, j))
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &FormalSum)> {
        self.entries.iter()
    }

    pub fn generator_degrees(&self) -> &[usize] {
        &self.generator_degrees
    }

    pub fn relation_degrees(&self) -> &[usize] {
        &self.relation_degrees
    }

    pub fn num_generators(&self) -> usize {
        self.generator_degrees.len()
    }

    pub fn num_relations(&self) -> usize {
        self.relation_degrees.len()
    }

    /// Largest generator degree, 0 without generators.
    pub fn x_max(&self) -> usize {
        self.generator_degrees.iter().copied().max().unwrap_or(0)
    }

    /// Largest relation degree, 0 without relations.
    pub fn y_max(&self) -> usize {
        self.relation_degrees.iter().copied().max().unwrap_or(0)
    }
}

/// The `A_λ` construction for one shape, reusing the tableau data across calls.
pub struct ALambda {
    module: SpechtModule,
    k: usize,
}

impl ALambda {
    pub fn new(shape: &Diagram) -> Self {
        ALambda {
            module: SpechtModule::new(shape),
            k: shape.size(),
        }
    }

    pub fn module(&self) -> &SpechtModule {
        &self.module
    }

    /// Number of rows (or columns) contributed by degree `n`.
    pub fn block_size(&self, n: usize) -> usize {
        monotone_injections(self.k, n).len() * self.module.dimension()
    }

    /// Adds `alpha · A_λ(f)` into `out` at offset `(row0, col0)`. The columns
    /// of `out` at that offset follow `targets`, the ordered `OI(k, y)`.
    #[allow(clippy::too_many_arguments)]
    fn accumulate(
        &self,
        f: &Injection,
        alpha: &BigRational,
        sources: &[Injection],
        targets: &HashMap<Vec<usize>, usize>,
        out: &mut RationalMatrix,
        row0: usize,
        col0: usize,
    ) -> Result<()> {
        let d = self.module.dimension();
        let row_words = self.module.row_words();
        let col_words = self.module.col_words();
        for (pi, p) in sources.iter().enumerate() {
            let fp = f.compose(p)?;
            let qi = targets[nu(&fp).images()];
            let twist = xi(&fp);
            for (ti, cw) in col_words.iter().enumerate() {
                for (ui, rw) in row_words.iter().enumerate() {
                    let v = chi(&precompose(rw, &twist), cw);
                    if v != 0 {
                        let value = alpha * BigRational::from_integer(BigInt::from(v));
                        out.add_to(row0 + pi * d + ti, col0 + qi * d + ui, &value);
                    }
                }
            }
        }
        Ok(())
    }

    fn target_index(&self, y: usize) -> HashMap<Vec<usize>, usize> {
        monotone_injections(self.k, y)
            .into_iter()
            .enumerate()
            .map(|(i, q)| (q.images().to_vec(), i))
            .collect()
    }

    pub fn injection(&self, f: &Injection) -> Result<RationalMatrix> {
        let mut out =
            RationalMatrix::zeros(self.block_size(f.source()), self.block_size(f.target()));
        let sources = monotone_injections(self.k, f.source());
        let targets = self.target_index(f.target());
        self.accumulate(f, &BigRational::one(), &sources, &targets, &mut out, 0, 0)?;
        Ok(out)
    }

    pub fn sum(&self, s: &FormalSum) -> Result<RationalMatrix> {
        let mut out = RationalMatrix::zeros(self.block_size(s.source), self.block_size(s.target));
        let sources = monotone_injections(self.k, s.source);
        let targets = self.target_index(s.target);
        for (f, c) in &s.terms {
            self.accumulate(f, c, &sources, &targets, &mut out, 0, 0)?;
        }
        Ok(out)
    }

    /// The block matrix `A_λ Z`.
    pub fn presentation(&self, z: &PresentationMatrix) -> Result<RationalMatrix> {
        let row_sizes: Vec<usize> = z
            .generator_degrees
            .iter()
            .map(|&x| self.block_size(x))
            .collect();
        let col_sizes: Vec<usize> = z
            .relation_degrees
            .iter()
            .map(|&y| self.block_size(y))
            .collect();
        let mut out = RationalMatrix::zeros(row_sizes.iter().sum(), col_sizes.iter().sum());
        let mut sources_cache: HashMap<usize, Vec<Injection>> = HashMap::new();
        let mut targets_cache: HashMap<usize, HashMap<Vec<usize>, usize>> = HashMap::new();
        for (&(i, j), s) in &z.entries {
            let row0: usize = row_sizes[..i].iter().sum();
            let col0: usize = col_sizes[..j].iter().sum();
            let sources = sources_cache
                .entry(s.source)
                .or_insert_with(|| monotone_injections(self.k, s.source));
            let targets = targets_cache
                .entry(s.target)
                .or_insert_with(|| self.target_index(s.target));
            for (f, c) in &s.terms {
                self.accumulate(f, c, sources, targets, &mut out, row0, col0)?;
            }
        }
        Ok(out)
    }
}

pub fn a_lambda_injection(shape: &Diagram, f: &Injection) -> Result<RationalMatrix> {
    ALambda::new(shape).injection(f)
}

pub fn a_lambda_sum(shape: &Diagram, s: &FormalSum) -> Result<RationalMatrix> {
    ALambda::new(shape).sum(s)
}

pub fn a_lambda_presentation(shape: &Diagram, z: &PresentationMatrix) -> Result<RationalMatrix> {
    ALambda::new(shape).presentation(z)
}

/// Every injection replaced by `1`: the `g × r` matrix of coefficient sums.
pub fn epsilon_presentation(z: &PresentationMatrix) -> RationalMatrix {
    let mut out = RationalMatrix::zeros(z.num_generators(), z.num_relations());
    for (&(i, j), s) in &z.entries {
        out.set(i, j, s.coefficient_sum());
    }
    out
}

/// Action of `f` on the induced module of `shape`: `A_λ(1_x)⁻¹ · A_λ(f)`.
pub fn induced_action(shape: &Diagram, f: &Injection) -> Result<RationalMatrix> {
    let a = ALambda::new(shape);
    let identity = a.injection(&Injection::identity(f.source()))?;
    identity.inverse()?.mul(&a.injection(f)?)
}

/// The block matrix `V(f)` of the module induced from a representation `W`
/// of the symmetric group of degree `k` (of dimension `dim`). Block `(p, q)`
/// is `W(ξ(f∘p))` when `ν(f∘p) = q`.
pub fn v_matrix<W>(k: usize, dim: usize, action: W, f: &Injection) -> Result<RationalMatrix>
where
    W: Fn(&Permutation) -> Result<RationalMatrix>,
{
    let sources = monotone_injections(k, f.source());
    let targets: HashMap<Vec<usize>, usize> = monotone_injections(k, f.target())
        .into_iter()
        .enumerate()
        .map(|(i, q)| (q.images().to_vec(), i))
        .collect();
    let mut out = RationalMatrix::zeros(sources.len() * dim, targets.len() * dim);
    let mut cache: HashMap<Permutation, RationalMatrix> = HashMap::new();
    for (pi, p) in sources.iter().enumerate() {
        let fp = f.compose(p)?;
        let qi = targets[nu(&fp).images()];
        let sigma = xi(&fp);
        if !cache.contains_key(&sigma) {
            let block = action(&sigma)?;
            if (block.nrows(), block.ncols()) != (dim, dim) {
                return Err(Error::DimensionMismatch(format!(
                    "action returned a {}x{} matrix, expected {dim}x{dim}",
                    block.nrows(),
                    block.ncols()
                )));
            }
            cache.insert(sigma.clone(), block);
        }
        let block = &cache[&sigma];
        for a in 0..dim {
            for b in 0..dim {
                let v = block.get(a, b);
                if !v.is_zero() {
                    out.set(pi * dim + a, qi * dim + b, v.clone());
                }
            }
        }
    }
    Ok(out)
}
