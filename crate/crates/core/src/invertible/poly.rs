//! Invertible polynomials `f = Σ_i ∏_j z_j^{E_ij}` and their atoms.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

use super::matrix::{determinant, inverse, transpose, Matrix};
use crate::error::{Error, Result};

pub type Weight = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AtomKind {
    /// `z^a`
    Fermat,
    /// `z_1^{a_1} z_2 + … + z_{k−1}^{a_{k−1}} z_k + z_k^{a_k}`
    Chain,
    /// `z_1^{a_1} z_2 + … + z_k^{a_k} z_1`
    Loop,
}

impl fmt::Display for AtomKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AtomKind::Fermat => "fermat",
            AtomKind::Chain => "chain",
            AtomKind::Loop => "loop",
        })
    }
}

/// One indecomposable block. `vars[i]` carries exponent `exponents[i]` in
/// the monomial of row `rows[i]`, times `vars[i+1]` (cyclically for loops).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atom {
    pub kind: AtomKind,
    pub vars: Vec<usize>,
    pub rows: Vec<usize>,
    pub exponents: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvertiblePolynomial {
    matrix: Matrix,
    atoms: Vec<Atom>,
    weights: Vec<Weight>,
    det: i128,
}

impl InvertiblePolynomial {
    /// Checks that `E` is a disjoint union of Fermat, chain and loop atoms
    /// (rows in any order) and solves `E q = 1` for the weights.
    pub fn validate(matrix: Matrix) -> Result<Self> {
        let n = matrix.len();
        if let Some(row) = matrix.iter().find(|r| r.len() != n) {
            return Err(Error::InvalidMatrix(format!(
                "expected {n} columns, found a row of length {}",
                row.len()
            )));
        }
        if matrix.iter().flatten().any(|&x| x < 0) {
            return Err(Error::InvalidMatrix("negative exponent".into()));
        }
        let det = determinant(&matrix);
        if det == 0 {
            return Err(Error::SingularMatrix);
        }
        let atoms = decompose(&matrix)?;
        let inv = inverse(&matrix)?;
        let weights: Vec<Weight> = inv.iter().map(|row| row.iter().copied().sum()).collect();
        if let Some(q) = weights.iter().find(|q| **q <= Weight::zero() || **q > Weight::one()) {
            return Err(Error::InvalidMatrix(format!("weight {q} outside (0, 1]")));
        }
        let f = InvertiblePolynomial {
            matrix,
            atoms,
            weights,
            det,
        };
        f.milnor_number()?;
        Ok(f)
    }

    /// The polynomial in no variables.
    pub fn empty() -> Self {
        InvertiblePolynomial {
            matrix: Vec::new(),
            atoms: Vec::new(),
            weights: Vec::new(),
            det: 1,
        }
    }

    pub fn fermat(a: i64) -> Result<Self> {
        Self::validate(vec![vec![a]])
    }

    /// `z_1^{a_1} z_2 + … + z_k^{a_k}`.
    pub fn chain(exponents: &[i64]) -> Result<Self> {
        let k = exponents.len();
        let mut m = vec![vec![0; k]; k];
        for (i, &a) in exponents.iter().enumerate() {
            m[i][i] = a;
            if i + 1 < k {
                m[i][i + 1] = 1;
            }
        }
        Self::validate(m)
    }

    /// `z_1^{a_1} z_2 + … + z_k^{a_k} z_1`.
    pub fn loop_of(exponents: &[i64]) -> Result<Self> {
        let k = exponents.len();
        let mut m = vec![vec![0; k]; k];
        for (i, &a) in exponents.iter().enumerate() {
            m[i][i] = a;
            m[i][(i + 1) % k] += 1;
        }
        Self::validate(m)
    }

    /// Sum of polynomials in disjoint sets of variables.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let (n, m) = (self.num_vars(), other.num_vars());
        let mut e = vec![vec![0; n + m]; n + m];
        for i in 0..n {
            e[i][..n].copy_from_slice(&self.matrix[i]);
        }
        for i in 0..m {
            e[n + i][n..].copy_from_slice(&other.matrix[i]);
        }
        Self::validate(e)
    }

    pub fn num_vars(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn det(&self) -> i128 {
        self.det
    }

    /// Milnor–Orlik: `μ = ∏ (1/q_i − 1)`.
    pub fn milnor_number(&self) -> Result<i64> {
        let mu: Weight = self.weights.iter().map(|q| q.recip() - Weight::one()).product();
        if !mu.is_integer() {
            return Err(Error::InvalidMatrix(format!(
                "Milnor–Orlik product {mu} is not an integer"
            )));
        }
        Ok(mu.to_integer())
    }

    /// The Berglund–Hübsch transpose, with exponent matrix `Eᵀ`.
    pub fn transpose(&self) -> Self {
        Self::validate(transpose(&self.matrix)).expect("transpose of an invertible polynomial")
    }

    /// The monomials supported on the coordinates in `vars` (sorted), as a
    /// polynomial in those variables.
    pub fn restrict_to(&self, vars: &[usize]) -> Result<Self> {
        let mut keep = vec![false; self.num_vars()];
        for &v in vars {
            if v >= self.num_vars() {
                return Err(Error::InvalidMatrix(format!("no variable {v}")));
            }
            keep[v] = true;
        }
        let rows: Vec<Vec<i64>> = self
            .matrix
            .iter()
            .filter(|row| row.iter().enumerate().all(|(j, &e)| e == 0 || keep[j]))
            .map(|row| (0..self.num_vars()).filter(|&j| keep[j]).map(|j| row[j]).collect())
            .collect();
        if rows.len() != vars.len() {
            return Err(Error::InvalidMatrix(format!(
                "{} monomials survive on {} variables",
                rows.len(),
                vars.len()
            )));
        }
        if rows.is_empty() {
            return Ok(Self::empty());
        }
        Self::validate(rows)
    }
}

impl fmt::Display for InvertiblePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.matrix.is_empty() {
            return f.write_str("0");
        }
        let names: Vec<String> = (0..self.num_vars())
            .map(|j| match (self.num_vars(), j) {
                (n, _) if n <= 3 => ["x", "y", "z"][j].to_string(),
                _ => format!("z{}", j + 1),
            })
            .collect();
        let monomials: Vec<String> = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(j, &e)| {
                        if e == 1 {
                            names[j].clone()
                        } else {
                            format!("{}^{e}", names[j])
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("")
            })
            .collect();
        f.write_str(&monomials.join(" + "))
    }
}

/// Finds atoms: each row is owned by one variable (its "main" exponent),
/// any second variable in the row has exponent 1 and is the owner's
/// successor. The successor graph must be a disjoint union of paths and
/// cycles.
fn decompose(m: &[Vec<i64>]) -> Result<Vec<Atom>> {
    let n = m.len();
    let mut options: Vec<Vec<(usize, Option<usize>)>> = Vec::with_capacity(n);
    for (i, row) in m.iter().enumerate() {
        let support: Vec<usize> = (0..n).filter(|&j| row[j] > 0).collect();
        let opts = match support.as_slice() {
            [j] => vec![(*j, None)],
            [j, k] => {
                let mut o = Vec::new();
                if row[*k] == 1 {
                    o.push((*j, Some(*k)));
                }
                if row[*j] == 1 {
                    o.push((*k, Some(*j)));
                }
                o
            }
            _ => Vec::new(),
        };
        if opts.is_empty() {
            return Err(Error::InvalidMatrix(format!("row {i} is not of the form z^a or z^a w")));
        }
        options.push(opts);
    }
    let mut owner_of_row = vec![None; n];
    let mut row_of_var = vec![None; n];
    if !assign(0, &options, &mut owner_of_row, &mut row_of_var) {
        return Err(Error::InvalidMatrix(
            "not a disjoint union of Fermat, chain and loop atoms".into(),
        ));
    }
    let successor: Vec<Option<usize>> = (0..n)
        .map(|v| owner_of_row[row_of_var[v].expect("bijection")].expect("assigned").1)
        .collect();
    let mut predecessor = vec![None; n];
    for v in 0..n {
        if let Some(w) = successor[v] {
            predecessor[w] = Some(v);
        }
    }
    let mut atoms = Vec::new();
    let mut seen = vec![false; n];
    let row_exponent = |v: usize| m[row_of_var[v].unwrap()][v];
    // Paths start at variables without a predecessor.
    for start in 0..n {
        if predecessor[start].is_some() {
            continue;
        }
        let mut vars = vec![start];
        seen[start] = true;
        while let Some(next) = successor[*vars.last().unwrap()] {
            seen[next] = true;
            vars.push(next);
        }
        let kind = if vars.len() == 1 {
            AtomKind::Fermat
        } else {
            AtomKind::Chain
        };
        atoms.push(atom(kind, vars, &row_of_var, row_exponent));
    }
    // Whatever remains lies on cycles.
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut vars = vec![start];
        seen[start] = true;
        let mut v = successor[start].expect("cycle");
        while v != start {
            seen[v] = true;
            vars.push(v);
            v = successor[v].expect("cycle");
        }
        atoms.push(atom(AtomKind::Loop, vars, &row_of_var, row_exponent));
    }
    Ok(atoms)
}

fn atom(kind: AtomKind, vars: Vec<usize>, row_of_var: &[Option<usize>], exponent: impl Fn(usize) -> i64) -> Atom {
    Atom {
        kind,
        rows: vars.iter().map(|&v| row_of_var[v].unwrap()).collect(),
        exponents: vars.iter().map(|&v| exponent(v)).collect(),
        vars,
    }
}

/// Backtracking search for a row → owner assignment that is a bijection and
/// gives every variable at most one predecessor.
fn assign(
    row: usize,
    options: &[Vec<(usize, Option<usize>)>],
    owner_of_row: &mut Vec<Option<(usize, Option<usize>)>>,
    row_of_var: &mut Vec<Option<usize>>,
) -> bool {
    if row == options.len() {
        return true;
    }
    for &(owner, succ) in &options[row] {
        if row_of_var[owner].is_some() {
            continue;
        }
        if let Some(s) = succ {
            if owner_of_row.iter().flatten().any(|&(_, t)| t == Some(s)) {
                continue;
            }
        }
        row_of_var[owner] = Some(row);
        owner_of_row[row] = Some((owner, succ));
        if assign(row + 1, options, owner_of_row, row_of_var) {
            return true;
        }
        row_of_var[owner] = None;
        owner_of_row[row] = None;
    }
    false
}
