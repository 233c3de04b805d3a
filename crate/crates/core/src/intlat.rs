//! Exact integer lattice algebra.
//!
//! Everything here runs on arbitrary-precision integers: the inputs coming
//! from Cartan matrices are tiny, but unimodular transforms blow entries up
//! quickly and nothing in this module is allowed to overflow or round.
//!
//! The two normal forms are the workhorses:
//!
//! * [`smith_normal_form`] gives `U * M * V = D` with `U`, `V` unimodular and
//!   `D` diagonal with a divisibility chain — used for kernels, torsion
//!   solution groups, and invariant factors.
//! * [`hermite_rows`] gives the canonical row echelon basis of the lattice
//!   spanned by the input rows — used to make lattice outputs byte-stable
//!   so that two runs (or two algorithms) can be compared for equality.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.at(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMat::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    /// Builds a matrix from big-integer rows; `cols` disambiguates the shape
    /// when `rows` is empty.
    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        let r = rows.len();
        let mut m = IntMat::zero(r, cols);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, x) in row.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.at(k, j);
                    let cur = out.at(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row_i += c * row_j`
    fn add_row_multiple(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for k in 0..self.cols {
            let add = c * self.at(j, k);
            let v = self.at(i, k) + add;
            self.set(i, k, v);
        }
    }

    /// `col_i += c * col_j`
    fn add_col_multiple(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for k in 0..self.rows {
            let add = c * self.at(k, j);
            let v = self.at(k, i) + add;
            self.set(k, i, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.at(i, j);
            self.set(i, j, v);
        }
    }

    /// Columns `a`, `b` are replaced by `(x*ca + y*cb, p*ca + q*cb)`; the
    /// caller guarantees `x*q - y*p = ±1`.
    fn col_pair_op(&mut self, a: usize, b: usize, x: &BigInt, y: &BigInt, p: &BigInt, q: &BigInt) {
        for i in 0..self.rows {
            let ca = self.at(i, a).clone();
            let cb = self.at(i, b).clone();
            self.set(i, a, x * &ca + y * &cb);
            self.set(i, b, p * &ca + q * &cb);
        }
    }
}

/// Result of [`smith_normal_form`]: `u * m * v = d`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
}

impl SmithForm {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let n = self.d.nrows().min(self.d.ncols());
        (0..n).filter(|&i| !self.d.at(i, i).is_zero()).count()
    }

    /// The nonzero diagonal entries `d_1 | d_2 | ...`, all positive.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.nrows().min(self.d.ncols());
        (0..n)
            .map(|i| self.d.at(i, i).clone())
            .filter(|x| !x.is_zero())
            .collect()
    }
}

/// Position of the entry with smallest nonzero absolute value in the
/// submatrix starting at `(t, t)`, scanning row-major so ties resolve to the
/// lowest index. Fixing this rule makes the transforms reproducible
/// byte-for-byte.
fn pivot_position(m: &IntMat, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in t..m.nrows() {
        for j in t..m.ncols() {
            let v = m.at(i, j);
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            match &best {
                Some((abs, _, _)) if *abs <= a => {}
                _ => best = Some((a, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Smith normal form with transforms: returns `(u, d, v)` with
/// `u * m * v = d`, `u` and `v` unimodular, `d` diagonal with nonnegative
/// entries satisfying `d_1 | d_2 | ...`.
pub fn smith_normal_form(m: &IntMat) -> SmithForm {
    let mut d = m.clone();
    let mut u = IntMat::identity(m.nrows());
    let mut v = IntMat::identity(m.ncols());
    let mut t = 0;
    while t < d.nrows().min(d.ncols()) {
        let Some((pi, pj)) = pivot_position(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            for i in t + 1..d.nrows() {
                let q = -(d.at(i, t) / d.at(t, t));
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
            }
            for j in t + 1..d.ncols() {
                let q = -(d.at(t, j) / d.at(t, t));
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
            }
            let col_clear = (t + 1..d.nrows()).all(|i| d.at(i, t).is_zero());
            let row_clear = (t + 1..d.ncols()).all(|j| d.at(t, j).is_zero());
            if col_clear && row_clear {
                break;
            }
            // remainders survived; re-select the (smaller) pivot and repeat
            let (pi, pj) = pivot_position(&d, t).expect("nonzero remainder exists");
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
        }
        t += 1;
    }
    // normalise signs
    let n = d.nrows().min(d.ncols());
    for i in 0..n {
        if d.at(i, i).is_negative() {
            d.negate_row(i);
            u.negate_row(i);
        }
    }
    // enforce the divisibility chain d_1 | d_2 | ...
    let r = (0..n).filter(|&i| !d.at(i, i).is_zero()).count();
    loop {
        let mut stable = true;
        for i in 0..r.saturating_sub(1) {
            let a = d.at(i, i).clone();
            let b = d.at(i + 1, i + 1).clone();
            if (&b % &a).is_zero() {
                continue;
            }
            stable = false;
            // row_i += row_{i+1} puts (a, b) in row i; a 2x2 unimodular column
            // move then replaces the pair by (gcd, lcm)
            d.add_row_multiple(i, i + 1, &BigInt::one());
            u.add_row_multiple(i, i + 1, &BigInt::one());
            let e = a.extended_gcd(&b);
            let g = e.gcd.clone();
            let (x, y) = (e.x, e.y);
            let p = -(&b / &g);
            let q = &a / &g;
            d.col_pair_op(i, i + 1, &x, &y, &p, &q);
            v.col_pair_op(i, i + 1, &x, &y, &p, &q);
            // clear the leftover below the new pivot
            let q2 = -(d.at(i + 1, i) / d.at(i, i));
            d.add_row_multiple(i + 1, i, &q2);
            u.add_row_multiple(i + 1, i, &q2);
            debug_assert!(d.at(i + 1, i).is_zero());
            if d.at(i, i).is_negative() {
                d.negate_row(i);
                u.negate_row(i);
            }
            if d.at(i + 1, i + 1).is_negative() {
                d.negate_row(i + 1);
                u.negate_row(i + 1);
            }
        }
        if stable {
            break;
        }
    }
    SmithForm { u, d, v }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det_bareiss(m: &IntMat) -> BigInt {
    assert_eq!(m.nrows(), m.ncols(), "determinant of a non-square matrix");
    let n = m.nrows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.at(k, k).is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a.at(i, k).is_zero()) else {
                return BigInt::zero();
            };
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.set(i, j, num / &prev); // division is exact (Bareiss)
            }
            a.set(i, k, BigInt::zero());
        }
        prev = a.at(k, k).clone();
    }
    sign * a.at(n - 1, n - 1).clone()
}

/// Canonical Hermite form of the lattice spanned by the rows: pivots are
/// positive, entries above a pivot are reduced into `[0, pivot)`, zero rows
/// are dropped. Two generating sets span the same lattice exactly when their
/// Hermite forms are equal.
pub fn hermite_rows(m: &IntMat) -> IntMat {
    let mut a = m.clone();
    let rows = a.nrows();
    let cols = a.ncols();
    let mut pr = 0; // next pivot row
    for col in 0..cols {
        if pr == rows {
            break;
        }
        loop {
            let nonzero: Vec<usize> = (pr..rows).filter(|&i| !a.at(i, col).is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            let &imin = nonzero
                .iter()
                .min_by_key(|&&i| a.at(i, col).abs())
                .unwrap();
            a.swap_rows(pr, imin);
            let mut done = true;
            for i in pr + 1..rows {
                if a.at(i, col).is_zero() {
                    continue;
                }
                let q = -(a.at(i, col) / a.at(pr, col));
                a.add_row_multiple(i, pr, &q);
                if !a.at(i, col).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a.at(pr, col).is_zero() {
            continue;
        }
        if a.at(pr, col).is_negative() {
            a.negate_row(pr);
        }
        let p = a.at(pr, col).clone();
        for i in 0..pr {
            let q = -a.at(i, col).div_floor(&p);
            a.add_row_multiple(i, pr, &q);
        }
        pr += 1;
    }
    IntMat::from_bigint_rows((0..pr).map(|i| a.row(i)).collect(), cols)
}

/// Basis of the integer kernel `{v : m * v = 0}`, returned as Hermite-form
/// rows. The lattice is saturated: any integer vector lying in its rational
/// span is an integer combination of the basis.
pub fn kernel_basis(m: &IntMat) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let r = snf.rank();
    let n = m.ncols();
    let rows: Vec<Vec<BigInt>> = (r..n).map(|j| snf.v.col(j)).collect();
    hermite_rows(&IntMat::from_bigint_rows(rows, n)).to_rows()
}

/// Basis (Hermite-form rows) of the saturation of the row space of `m`:
/// the smallest saturated sublattice of `Z^cols` containing every row.
///
/// Computed by two kernel passes: the rational row space is the orthogonal
/// complement of `ker m`, so its integer points are the kernel of the matrix
/// whose rows are a kernel basis.
pub fn saturation(m: &IntMat) -> Vec<Vec<BigInt>> {
    let k = kernel_basis(m);
    let km = IntMat::from_bigint_rows(k, m.ncols());
    kernel_basis(&km)
}

/// A finite-order point of a split torus in `h`-coordinates: entry `i` is
/// the exponent of the chosen primitive root of unity at coordinate `i`,
/// kept in `[0, 1)`. The element it denotes is the product over `i` of
/// `h_i(omega^(order * exponents[i]))` for `omega` a primitive root of unity
/// of degree `order`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TorusElement {
    exponents: Vec<BigRational>,
    order: BigInt,
}

fn mod_one(x: &BigRational) -> BigRational {
    x - x.floor()
}

impl TorusElement {
    pub fn new(exponents: Vec<BigRational>) -> Self {
        let exponents: Vec<BigRational> = exponents.iter().map(mod_one).collect();
        let order = exponents
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        TorusElement { exponents, order }
    }

    pub fn identity(n: usize) -> Self {
        TorusElement::new(vec![BigRational::zero(); n])
    }

    pub fn exponents(&self) -> &[BigRational] {
        &self.exponents
    }

    /// Least `k > 0` with `k * exponents` integral (the lcm of the reduced
    /// denominators).
    pub fn order(&self) -> &BigInt {
        &self.order
    }

    pub fn ambient_rank(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_identity(&self) -> bool {
        self.exponents.iter().all(|e| e.is_zero())
    }

    pub fn mul(&self, other: &TorusElement) -> TorusElement {
        assert_eq!(self.ambient_rank(), other.ambient_rank());
        TorusElement::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn pow(&self, k: &BigInt) -> TorusElement {
        let kq = BigRational::from(k.clone());
        TorusElement::new(self.exponents.iter().map(|e| e * &kq).collect())
    }

    /// Pairing with an integer character `chi`: the sum of `chi[j] *
    /// exponents[j]`.
    pub fn pair(&self, chi: &[BigInt]) -> BigRational {
        assert_eq!(chi.len(), self.exponents.len());
        chi.iter()
            .zip(&self.exponents)
            .map(|(c, e)| BigRational::from(c.clone()) * e)
            .fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn pairs_integrally(&self, chi: &[BigInt]) -> bool {
        self.pair(chi).is_integer()
    }

    /// The unit multiple `k * self` (`gcd(k, order) = 1`) with
    /// lexicographically least exponent vector. Generates the same cyclic
    /// group; used to make reported generators independent of how the normal
    /// form happened to be reached. Skipped for orders above `10^4`, where
    /// scanning units would be wasteful.
    pub fn canonical_generator(&self) -> TorusElement {
        let ord = &self.order;
        if ord <= &BigInt::one() || ord > &BigInt::from(10_000) {
            return self.clone();
        }
        let mut best = self.clone();
        let mut k = BigInt::from(2);
        while &k < ord {
            if k.gcd(ord).is_one() {
                let cand = self.pow(&k);
                if cand.exponents < best.exponents {
                    best = cand;
                }
            }
            k += 1;
        }
        best
    }
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Generators of the group of finite-order solutions of `m * e = 0 (mod Z)`
/// in `(Q/Z)^cols`, taken modulo the image of the rational kernel of `m`
/// (the connected part of the solution set).
///
/// With `u m v = d`, a generator is contributed by every invariant factor
/// `d_i > 1`: the image under `v` of `(1/d_i)` at slot `i`. Orders of the
/// generators are exactly those invariant factors. Each generator is
/// replaced by its [`TorusElement::canonical_generator`] and the list is
/// sorted by decreasing order, then by exponents.
pub fn torsion_solutions(m: &IntMat) -> Vec<TorusElement> {
    let snf = smith_normal_form(m);
    let n = m.ncols();
    let k = snf.d.nrows().min(snf.d.ncols());
    let mut gens = Vec::new();
    for i in 0..k {
        let di = snf.d.at(i, i);
        if di <= &BigInt::one() {
            continue;
        }
        let exps: Vec<BigRational> = (0..n)
            .map(|j| BigRational::new(snf.v.at(j, i).clone(), di.clone()))
            .collect();
        gens.push(TorusElement::new(exps).canonical_generator());
    }
    gens.sort_by(|a, b| {
        b.order()
            .cmp(a.order())
            .then_with(|| a.exponents().cmp(b.exponents()))
    });
    gens
}

/// Membership of a finite-order point in the subtorus whose cocharacter
/// lattice is the saturated kernel of `m`: the point lies in the connected
/// part exactly when it pairs integrally with every character vanishing on
/// that kernel, i.e. with each basis vector of the saturated row space.
pub fn in_connected_part(m: &IntMat, e: &TorusElement) -> Result<bool> {
    if e.ambient_rank() != m.ncols() {
        return Err(Error::Internal(format!(
            "torus element has rank {}, relation matrix has {} columns",
            e.ambient_rank(),
            m.ncols()
        )));
    }
    Ok(saturation(m).iter().all(|chi| e.pairs_integrally(chi)))
}
