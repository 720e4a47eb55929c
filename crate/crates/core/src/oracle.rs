//! Brute-force evaluation of a presented FI-module at a single degree.
//!
//! `M[n]` is the cokernel of the relation matrix whose rows are pairs
//! `(i, f: [x_i] -> [n])` and whose columns are pairs `(j, h: [y_j] -> [n])`.
//! Its character is the ambient character minus the character of the image,
//! and the decomposition into irreducibles comes from the character inner
//! product. Nothing here uses the corank formula.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{
    all_injections, falling_factorial, lambda_plus_n, partitions, Diagram, Injection, Permutation,
};
use crate::error::{Error, Result};
use crate::linalg::{integer_rank, integer_reduced_echelon, RationalMatrix, ReducedEchelon};
use crate::multiplicity::{eventual_multiplicities, onset_bound, stable_dimension};
use crate::presentation::PresentationMatrix;
use crate::specht::mn_character;

/// Environment variable overriding [`DEFAULT_MAX_ROWS`].
pub const MAX_ROWS_VAR: &str = "FISTAB_ORACLE_MAX_ROWS";
pub const DEFAULT_MAX_ROWS: usize = 5000;

pub fn max_rows() -> usize {
    std::env::var(MAX_ROWS_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_ROWS)
}

/// Position of an injection `[k] -> [n]` in the lexicographic order of
/// [`all_injections`].
pub fn injection_index(images: &[usize], n: usize) -> usize {
    let k = images.len();
    let mut used = vec![false; n + 1];
    let mut index = 0u128;
    for (l, &v) in images.iter().enumerate() {
        let smaller = (1..v).filter(|&u| !used[u]).count() as u128;
        index += smaller * falling_factorial(n - l - 1, k - l - 1);
        used[v] = true;
    }
    index as usize
}

fn ambient_offsets(z: &PresentationMatrix, n: usize) -> (Vec<usize>, usize) {
    let mut offsets = Vec::with_capacity(z.num_generators());
    let mut total = 0usize;
    for &x in z.generator_degrees() {
        offsets.push(total);
        total += falling_factorial(n, x) as usize;
    }
    (offsets, total)
}

fn check_budget(z: &PresentationMatrix, n: usize) -> Result<usize> {
    let rows: u128 = z
        .generator_degrees()
        .iter()
        .map(|&x| falling_factorial(n, x))
        .sum();
    let cap = max_rows();
    if rows > cap as u128 {
        return Err(Error::ResourceCap {
            n,
            rows: rows.min(usize::MAX as u128) as usize,
            cap,
        });
    }
    Ok(rows as usize)
}

/// `Σ_i |FI(x_i, n)|`.
pub fn ambient_dimension(z: &PresentationMatrix, n: usize) -> u128 {
    z.generator_degrees()
        .iter()
        .map(|&x| falling_factorial(n, x))
        .sum()
}

/// The relation matrix at degree `n`, as a dense rational matrix.
pub fn relation_matrix_at(z: &PresentationMatrix, n: usize) -> Result<RationalMatrix> {
    let rows = check_budget(z, n)?;
    let (offsets, _) = ambient_offsets(z, n);
    let mut col_offset = 0;
    let col_sizes: Vec<usize> = z
        .relation_degrees()
        .iter()
        .map(|&y| falling_factorial(n, y) as usize)
        .collect();
    let mut m = RationalMatrix::zeros(rows, col_sizes.iter().sum());
    for (j, &y) in z.relation_degrees().iter().enumerate() {
        for (hi, h) in all_injections(y, n).iter().enumerate() {
            for (i, offset) in offsets.iter().enumerate() {
                let Some(sum) = z.entry(i, j) else { continue };
                for (g, alpha) in sum.terms() {
                    let hg = h.compose(g)?;
                    m.add_to(
                        offset + injection_index(hg.images(), n),
                        col_offset + hi,
                        alpha,
                    );
                }
            }
        }
        col_offset += col_sizes[j];
    }
    Ok(m)
}

/// Relation columns scaled to primitive integer vectors, zero and repeated
/// columns removed. They span the same space as the relation matrix.
fn primitive_columns(z: &PresentationMatrix, n: usize, ambient: usize) -> Result<Vec<Vec<BigInt>>> {
    let (offsets, _) = ambient_offsets(z, n);
    let mut seen: BTreeSet<Vec<(usize, BigInt)>> = BTreeSet::new();
    for (j, &y) in z.relation_degrees().iter().enumerate() {
        let column_terms: Vec<(usize, &Injection, BigInt)> = {
            let mut scale = BigInt::one();
            for i in 0..z.num_generators() {
                if let Some(sum) = z.entry(i, j) {
                    for c in sum.terms().values() {
                        scale = scale.lcm(c.denom());
                    }
                }
            }
            let mut out = Vec::new();
            for i in 0..z.num_generators() {
                if let Some(sum) = z.entry(i, j) {
                    for (g, c) in sum.terms() {
                        let v = (c * BigRational::from_integer(scale.clone())).to_integer();
                        out.push((i, g, v));
                    }
                }
            }
            out
        };
        if column_terms.is_empty() {
            continue;
        }
        for h in all_injections(y, n) {
            let mut col: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (i, g, v) in &column_terms {
                let hg = h.compose(g)?;
                *col.entry(offsets[*i] + injection_index(hg.images(), n))
                    .or_insert_with(BigInt::zero) += v;
            }
            let mut col: Vec<(usize, BigInt)> =
                col.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            if col.is_empty() {
                continue;
            }
            let g = col.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
            let flip = col[0].1.is_negative();
            for (_, v) in col.iter_mut() {
                *v = &*v / &g;
                if flip {
                    *v = -&*v;
                }
            }
            seen.insert(col);
        }
    }
    Ok(seen
        .into_iter()
        .map(|col| {
            let mut dense = vec![BigInt::zero(); ambient];
            for (r, v) in col {
                dense[r] = v;
            }
            dense
        })
        .collect())
}

/// Sizes describing `M[n]` as a cokernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeEvaluation {
    pub n: usize,
    pub ambient: usize,
    pub relations: u128,
    pub rank: usize,
    pub dimension: usize,
}

pub fn evaluate(z: &PresentationMatrix, n: usize) -> Result<DegreeEvaluation> {
    let ambient = check_budget(z, n)?;
    let columns = primitive_columns(z, n, ambient)?;
    let rank = integer_rank(&columns, ambient);
    Ok(DegreeEvaluation {
        n,
        ambient,
        relations: z
            .relation_degrees()
            .iter()
            .map(|&y| falling_factorial(n, y))
            .sum(),
        rank,
        dimension: ambient - rank,
    })
}

/// `dim M[n]`.
pub fn dimension_at(z: &PresentationMatrix, n: usize) -> Result<usize> {
    evaluate(z, n).map(|e| e.dimension)
}

/// Trace of a permutation with cycle type `class` on `⊕_i F^{x_i}[n]`.
pub fn ambient_trace(z: &PresentationMatrix, n: usize, class: &Diagram) -> Result<i64> {
    if class.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: class.size(),
        });
    }
    let fixed = class.rows().iter().filter(|&&r| r == 1).count();
    Ok(z.generator_degrees()
        .iter()
        .map(|&x| falling_factorial(fixed, x) as i64)
        .sum())
}

/// `M[n]` with its image subspace in reduced echelon form, ready for traces.
pub struct DegreeModule {
    n: usize,
    degrees: Vec<usize>,
    offsets: Vec<usize>,
    ambient: usize,
    image: ReducedEchelon,
    pivot_basis: Vec<(usize, Injection)>,
}

impl DegreeModule {
    pub fn new(z: &PresentationMatrix, n: usize) -> Result<Self> {
        let ambient = check_budget(z, n)?;
        let (offsets, _) = ambient_offsets(z, n);
        let columns = primitive_columns(z, n, ambient)?;
        let image = integer_reduced_echelon(&columns, ambient);
        let basis: Vec<(usize, Vec<Injection>)> = z
            .generator_degrees()
            .iter()
            .map(|&x| (x, all_injections(x, n)))
            .collect();
        let pivot_basis = image
            .pivots
            .iter()
            .map(|&p| {
                let i = offsets.partition_point(|&o| o <= p) - 1;
                (i, basis[i].1[p - offsets[i]].clone())
            })
            .collect();
        Ok(DegreeModule {
            n,
            degrees: z.generator_degrees().to_vec(),
            offsets,
            ambient,
            image,
            pivot_basis,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.ambient - self.image.rank()
    }

    /// Trace of `σ` on `M[n]`. `σ` acts on injections by post-composition.
    pub fn trace(&self, sigma: &Permutation) -> Result<BigRational> {
        if sigma.degree() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: sigma.degree(),
            });
        }
        let fixed = (1..=self.n).filter(|&i| sigma.apply(i) == i).count();
        let ambient: u128 = self
            .degrees
            .iter()
            .map(|&x| falling_factorial(fixed, x))
            .sum();
        // Row r of the echelon basis has σ-image whose coordinate at pivot
        // f_r is the row's coordinate at σ⁻¹∘f_r.
        let inverse = sigma.inverse();
        let mut image = BigInt::zero();
        for (r, (i, f)) in self.pivot_basis.iter().enumerate() {
            let moved = inverse.as_injection().compose(f)?;
            let col = self.offsets[*i] + injection_index(moved.images(), self.n);
            image += &self.image.numerators[r][col];
        }
        Ok(BigRational::from_integer(BigInt::from(ambient))
            - BigRational::new(image, self.image.denominator.clone()))
    }

    pub fn class_trace(&self, class: &Diagram) -> Result<BigRational> {
        self.trace(&Permutation::class_representative(class))
    }

    /// Multiplicity of every irreducible `ν ⊢ n`, in canonical order.
    pub fn decompose(&self) -> Result<Vec<(Diagram, usize)>> {
        let classes = partitions(self.n);
        let traces: Vec<BigRational> = classes
            .iter()
            .map(|c| self.class_trace(c))
            .collect::<Result<_>>()?;
        let order = BigRational::from_integer(BigInt::from(falling_factorial(self.n, self.n)));
        let mut out = Vec::with_capacity(classes.len());
        let mut dim_check = BigInt::zero();
        for shape in partitions(self.n) {
            let mut total = BigRational::zero();
            for (class, trace) in classes.iter().zip(&traces) {
                let weight = BigInt::from(class.class_size()) * mn_character(&shape, class)?;
                total += trace * BigRational::from_integer(weight);
            }
            let m = total / &order;
            if !m.is_integer() || m.is_negative() {
                return Err(Error::Inconsistent(format!(
                    "multiplicity of {shape} at n = {} is {m}",
                    self.n
                )));
            }
            let m = m.to_integer();
            dim_check += &m * BigInt::from(shape.hook_length_count());
            out.push((shape, m.try_into().expect("multiplicity fits in usize")));
        }
        if dim_check != BigInt::from(self.dimension()) {
            return Err(Error::Inconsistent(format!(
                "decomposition has dimension {dim_check}, cokernel has {}",
                self.dimension()
            )));
        }
        Ok(out)
    }
}

/// Trace of the canonical representative of `class` on `M[n]`.
pub fn cokernel_trace(z: &PresentationMatrix, n: usize, class: &Diagram) -> Result<BigRational> {
    if class.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: class.size(),
        });
    }
    DegreeModule::new(z, n)?.class_trace(class)
}

/// Multiplicities of the irreducibles `ν ⊢ n` in `M[n]`, in canonical order.
pub fn decompose_at(z: &PresentationMatrix, n: usize) -> Result<Vec<(Diagram, usize)>> {
    DegreeModule::new(z, n)?.decompose()
}

/// Comparison of one eventual multiplicity with the observed one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeCheck {
    pub shape: Diagram,
    /// `λ^{+(n-|λ|)}`, absent when the new top row would be too short.
    pub target: Option<Diagram>,
    pub eventual: usize,
    pub observed: usize,
}

impl ShapeCheck {
    pub fn ok(&self) -> bool {
        self.target.is_none() || self.eventual == self.observed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub n: usize,
    pub onset: usize,
    pub checks: Vec<ShapeCheck>,
    /// Irreducibles of `M[n]` not of the form `λ^{+m}` with `|λ| ≤ x_max`.
    pub unexpected: Vec<(Diagram, usize)>,
    pub dimension: usize,
    pub polynomial_value: BigRational,
}

impl VerifyReport {
    pub fn pre_stable(&self) -> bool {
        self.n < self.onset
    }

    pub fn dimension_ok(&self) -> bool {
        self.polynomial_value == BigRational::from_integer(BigInt::from(self.dimension))
    }

    /// Everything observed at `n` agrees with the eventual data.
    pub fn agrees(&self) -> bool {
        self.checks.iter().all(ShapeCheck::ok) && self.unexpected.is_empty() && self.dimension_ok()
    }

    /// Agreement was required (`n ≥ onset`) and did not hold.
    pub fn failed(&self) -> bool {
        !self.pre_stable() && !self.agrees()
    }

    /// Agreement at or past the onset.
    pub fn passed(&self) -> bool {
        !self.pre_stable() && self.agrees()
    }
}

pub fn verify(z: &PresentationMatrix, n: usize) -> Result<VerifyReport> {
    let table = eventual_multiplicities(z);
    let module = DegreeModule::new(z, n)?;
    let observed: BTreeMap<Diagram, usize> = module.decompose()?.into_iter().collect();
    let checks: Vec<ShapeCheck> = table
        .entries()
        .iter()
        .map(|(shape, eventual)| {
            let target = n
                .checked_sub(shape.size())
                .and_then(|m| lambda_plus_n(shape, m).ok());
            let observed = target.as_ref().map_or(0, |t| observed[t]);
            ShapeCheck {
                shape: shape.clone(),
                target,
                eventual: *eventual,
                observed,
            }
        })
        .collect();
    let x_max = if z.num_generators() == 0 {
        None
    } else {
        Some(z.x_max())
    };
    let unexpected = observed
        .iter()
        .filter(|(nu, m)| {
            let below = nu.size() - nu.row(1);
            **m > 0 && x_max.is_none_or(|x| below > x)
        })
        .map(|(nu, m)| (nu.clone(), *m))
        .collect();
    let polynomial_value = table
        .support()
        .map(|(shape, m)| {
            stable_dimension(shape).evaluate_at(n as u64) * BigRational::from_integer(m.into())
        })
        .sum();
    Ok(VerifyReport {
        n,
        onset: onset_bound(z),
        checks,
        unexpected,
        dimension: module.dimension(),
        polynomial_value,
    })
}
