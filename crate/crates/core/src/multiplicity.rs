//! Eventual multiplicities, the eventual dimension polynomial and the onset
//! of stabilization for a finitely presented FI-module.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{partitions, Diagram};
use crate::presentation::{epsilon_presentation, ALambda, PresentationMatrix};

/// `μ(λ⁺, M)` for every `λ` with `|λ| ≤ x_max`, ordered by size and then by
/// the canonical (descending lexicographic) partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    entries: Vec<(Diagram, usize)>,
    x_max: usize,
    y_max: usize,
}

impl MultiplicityTable {
    pub fn entries(&self) -> &[(Diagram, usize)] {
        &self.entries
    }

    /// The multiplicity of `λ⁺`; zero for shapes outside the table.
    pub fn get(&self, shape: &Diagram) -> usize {
        self.entries
            .iter()
            .find(|(d, _)| d == shape)
            .map_or(0, |(_, m)| *m)
    }

    pub fn x_max(&self) -> usize {
        self.x_max
    }

    pub fn y_max(&self) -> usize {
        self.y_max
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Shapes with nonzero multiplicity.
    pub fn support(&self) -> impl Iterator<Item = (&Diagram, usize)> {
        self.entries
            .iter()
            .filter(|(_, m)| *m > 0)
            .map(|(d, m)| (d, *m))
    }
}

/// Shapes `λ` with `|λ| ≤ x_max`, in table order. Empty without generators.
pub fn table_shapes(z: &PresentationMatrix) -> Vec<Diagram> {
    if z.num_generators() == 0 {
        return Vec::new();
    }
    (0..=z.x_max()).flat_map(partitions).collect()
}

pub fn corank_for_shape(z: &PresentationMatrix, shape: &Diagram) -> usize {
    ALambda::new(shape)
        .presentation(z)
        .expect("a validated presentation assembles")
        .corank()
}

pub fn eventual_multiplicities(z: &PresentationMatrix) -> MultiplicityTable {
    eventual_multiplicities_with_threads(z, 1)
}

/// Same as [`eventual_multiplicities`], spreading shapes over `threads`
/// worker threads. The result does not depend on `threads`.
pub fn eventual_multiplicities_with_threads(
    z: &PresentationMatrix,
    threads: usize,
) -> MultiplicityTable {
    let shapes = table_shapes(z);
    let threads = threads.clamp(1, shapes.len().max(1));
    let mut coranks = vec![0; shapes.len()];
    if threads == 1 {
        for (slot, shape) in coranks.iter_mut().zip(&shapes) {
            *slot = corank_for_shape(z, shape);
        }
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|t| {
                    let shapes = &shapes;
                    scope.spawn(move || {
                        (t..shapes.len())
                            .step_by(threads)
                            .map(|i| (i, corank_for_shape(z, &shapes[i])))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            for h in handles {
                for (i, c) in h.join().expect("worker thread panicked") {
                    coranks[i] = c;
                }
            }
        });
    }
    MultiplicityTable {
        entries: shapes.into_iter().zip(coranks).collect(),
        x_max: z.x_max(),
        y_max: z.y_max(),
    }
}

/// `μ(∅⁺, M)`, the corank of the coefficient-sum matrix.
pub fn eventual_invariants(z: &PresentationMatrix) -> usize {
    epsilon_presentation(z).corank()
}

/// `x_max + y_max`.
pub fn onset_bound(z: &PresentationMatrix) -> usize {
    z.x_max() + z.y_max()
}

/// A polynomial in `n` with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coefficients: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coefficients: Vec<BigRational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Polynomial { coefficients }
    }

    pub fn zero() -> Self {
        Polynomial::new(Vec::new())
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn evaluate(&self, n: &BigRational) -> BigRational {
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * n + c)
    }

    pub fn evaluate_at(&self, n: u64) -> BigRational {
        self.evaluate(&BigRational::from_integer(n.into()))
    }

    /// Multiplies by `(n - root)`.
    fn times_linear(&self, root: &BigRational) -> Polynomial {
        let mut out = vec![BigRational::zero(); self.coefficients.len() + 1];
        for (i, c) in self.coefficients.iter().enumerate() {
            out[i + 1] += c;
            out[i] -= c * root;
        }
        Polynomial::new(out)
    }

    fn scale(&self, c: &BigRational) -> Polynomial {
        Polynomial::new(self.coefficients.iter().map(|x| x * c).collect())
    }

    fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coefficients.len().max(other.coefficients.len());
        let zero = BigRational::zero();
        Polynomial::new(
            (0..len)
                .map(|i| {
                    self.coefficients.get(i).unwrap_or(&zero)
                        + other.coefficients.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }
}

/// Prints as `(3n^2 - 5n)/2`: an integer polynomial over a common
/// positive denominator, parenthesized when the denominator is not 1.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let denominator = self
            .coefficients
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut body = String::new();
        let mut terms = 0;
        for (power, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let numerator = (c * BigRational::from_integer(denominator.clone())).to_integer();
            let magnitude = numerator.abs();
            if terms == 0 {
                if numerator.is_negative() {
                    body.push('-');
                }
            } else if numerator.is_negative() {
                body.push_str(" - ");
            } else {
                body.push_str(" + ");
            }
            if power == 0 || !magnitude.is_one() {
                body.push_str(&magnitude.to_string());
            }
            match power {
                0 => {}
                1 => body.push('n'),
                _ => body.push_str(&format!("n^{power}")),
            }
            terms += 1;
        }
        if denominator.is_one() {
            write!(f, "{body}")
        } else if terms == 1 {
            write!(f, "{body}/{denominator}")
        } else {
            write!(f, "({body})/{denominator}")
        }
    }
}

/// The polynomial that agrees with `dim M[n]` for `n ≥ onset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionPolynomial {
    pub polynomial: Polynomial,
    pub onset: usize,
}

impl DimensionPolynomial {
    pub fn evaluate_at(&self, n: u64) -> BigRational {
        self.polynomial.evaluate_at(n)
    }
}

impl fmt::Display for DimensionPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} valid for n >= {}", self.polynomial, self.onset)
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `dim λ^{+(n-|λ|)}` as a polynomial in `n`: with `l_i = λ_i + |λ| - i`,
/// `Π_{i<j} (l_i - l_j) / Π_i l_i! · Π_i (n - l_i)`.
pub fn stable_dimension(shape: &Diagram) -> Polynomial {
    let k = shape.size();
    let l: Vec<i64> = (1..=k)
        .map(|i| (shape.row(i) + k) as i64 - i as i64)
        .collect();
    let mut numerator = BigInt::one();
    for i in 0..k {
        for j in i + 1..k {
            numerator *= BigInt::from(l[i] - l[j]);
        }
    }
    let denominator = l
        .iter()
        .fold(BigInt::one(), |acc, &li| acc * factorial(li as usize));
    let mut p = Polynomial::constant(BigRational::new(numerator, denominator));
    for &li in &l {
        p = p.times_linear(&BigRational::from_integer(li.into()));
    }
    p
}

pub fn dimension_polynomial_from(table: &MultiplicityTable, onset: usize) -> DimensionPolynomial {
    let polynomial = table.support().fold(Polynomial::zero(), |acc, (shape, m)| {
        acc.add(&stable_dimension(shape).scale(&BigRational::from_integer(m.into())))
    });
    DimensionPolynomial { polynomial, onset }
}

pub fn dimension_polynomial(z: &PresentationMatrix) -> DimensionPolynomial {
    dimension_polynomial_from(&eventual_multiplicities(z), onset_bound(z))
}
