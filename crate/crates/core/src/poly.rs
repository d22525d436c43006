//! Integer Laurent polynomials, Chebyshev families, companion matrices,
//! resultants, and the product construction for linear recurrences.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// An integer Laurent polynomial: `coeffs[i]` multiplies `z^(min_exp + i)`.
///
/// Nonzero polynomials keep nonzero first/last coefficients; the zero
/// polynomial is the empty coefficient list with `min_exp = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn new(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { min_exp, coeffs };
        p.normalize();
        p
    }

    pub fn from_ints(min_exp: i64, coeffs: &[i64]) -> Self {
        LaurentPoly::new(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        LaurentPoly {
            min_exp: 0,
            coeffs: vec![],
        }
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::from_ints(0, &[c])
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        LaurentPoly::from_ints(exp, &[coeff])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_exp += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn max_exp(&self) -> i64 {
        self.min_exp + self.coeffs.len() as i64 - 1
    }

    /// Difference between highest and lowest exponent (0 for monomials).
    pub fn span(&self) -> usize {
        if self.is_zero() {
            0
        } else {
            self.coeffs.len() - 1
        }
    }

    /// Coefficients in ascending exponent order, starting at `min_exp`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        if self.is_zero() || exp < self.min_exp || exp > self.max_exp() {
            BigInt::zero()
        } else {
            self.coeffs[(exp - self.min_exp) as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Degree of an ordinary polynomial (min_exp >= 0); the zero polynomial
    /// reports degree 0 here, callers that care must check `is_zero` first.
    pub fn degree(&self) -> Result<usize> {
        if self.min_exp < 0 {
            return Err(Error::NegativeExponent(self.min_exp));
        }
        Ok(self.max_exp().max(0) as usize)
    }

    /// Dense ascending coefficients from exponent 0 through the degree.
    /// Requires min_exp >= 0.
    pub fn dense_from_zero(&self) -> Result<Vec<BigInt>> {
        if self.min_exp < 0 {
            return Err(Error::NegativeExponent(self.min_exp));
        }
        let mut v = vec![BigInt::zero(); self.min_exp as usize];
        v.extend(self.coeffs.iter().cloned());
        Ok(v)
    }

    /// Coefficients read the same forwards and backwards.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// First and last coefficients both exactly 1.
    pub fn is_bimonic(&self) -> bool {
        !self.is_zero()
            && self.coeffs.first().is_some_and(|c| c.is_one())
            && self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> LaurentPoly {
        if s.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Multiply by z^t.
    pub fn shifted(&self, t: i64) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp + t,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(other.min_exp);
        let hi = self.max_exp().max(other.max_exp());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_exp - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.min_exp - lo) as usize + i] += c;
        }
        LaurentPoly::new(lo, coeffs)
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.min_exp + other.min_exp, coeffs)
    }

    /// Evaluate at a floating-point argument (x must be nonzero when the
    /// polynomial has negative exponents).
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let e = self.min_exp + i as i64;
                c.to_string().parse::<f64>().unwrap_or(0.0) * x.powi(e as i32)
            })
            .sum()
    }

    /// Evaluate an ordinary polynomial exactly at an integer argument.
    pub fn eval_int(&self, x: &BigInt) -> Result<BigInt> {
        if self.min_exp < 0 {
            return Err(Error::NegativeExponent(self.min_exp));
        }
        let dense = self.dense_from_zero()?;
        let mut acc = BigInt::zero();
        for c in dense.iter().rev() {
            acc = acc * x + c;
        }
        Ok(acc)
    }

    /// Sum of all coefficients, i.e. the value at 1 for ordinary polynomials.
    pub fn coeff_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Formal derivative of an ordinary polynomial.
    pub fn derivative(&self) -> Result<LaurentPoly> {
        let dense = self.dense_from_zero()?;
        let coeffs: Vec<BigInt> = dense
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Ok(LaurentPoly::new(0, coeffs))
    }

    /// Exact division of ordinary polynomials; fails if the division leaves a
    /// remainder (in particular on any non-integral quotient).
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let num = self.dense_from_zero()?;
        let den = divisor.dense_from_zero()?;
        let q = pz_div_exact(&num, &den, "LaurentPoly::div_exact")?;
        Ok(LaurentPoly::new(0, q))
    }

    /// True when the polynomial has no repeated complex roots (checked via
    /// gcd with the derivative). Constants count as squarefree.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let dense = self.dense_from_zero()?;
        if dense.len() <= 2 {
            return Ok(true); // constants and linear polynomials
        }
        let deriv = pz_trim(
            dense
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        );
        let g = pz_gcd(&pz_trim(dense), &deriv);
        Ok(g.len() <= 1)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = self.min_exp + i as i64;
            if first {
                first = false;
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            let mag = if first { c.clone() } else { c.abs() };
            match e {
                0 => write!(f, "{mag}")?,
                1 => {
                    if mag.abs().is_one() {
                        write!(f, "{}z", if mag.is_negative() { "-" } else { "" })?;
                    } else {
                        write!(f, "{mag}*z")?;
                    }
                }
                _ => {
                    if mag.abs().is_one() {
                        write!(f, "{}z^{e}", if mag.is_negative() { "-" } else { "" })?;
                    } else {
                        write!(f, "{mag}*z^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Dense ascending integer polynomials (private helpers). The empty vector is
// the zero polynomial.
// ---------------------------------------------------------------------------

fn pz_trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn pz_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    pz_trim(out)
}

fn pz_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    pz_trim(out)
}

/// Exact polynomial division over the integers.
fn pz_div_exact(num: &[BigInt], den: &[BigInt], context: &'static str) -> Result<Vec<BigInt>> {
    let num = pz_trim(num.to_vec());
    let den = pz_trim(den.to_vec());
    if den.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    if num.is_empty() {
        return Ok(vec![]);
    }
    if num.len() < den.len() {
        return Err(Error::InexactDivision(context));
    }
    let mut rem = num;
    let mut quot = vec![BigInt::zero(); rem.len() - den.len() + 1];
    let dlead = den.last().unwrap().clone();
    while rem.len() >= den.len() {
        let shift = rem.len() - den.len();
        let (q, r) = num_integer::Integer::div_rem(rem.last().unwrap(), &dlead);
        if !r.is_zero() {
            return Err(Error::InexactDivision(context));
        }
        quot[shift] = q.clone();
        for (i, d) in den.iter().enumerate() {
            let sub = &q * d;
            rem[shift + i] -= sub;
        }
        rem = pz_trim(rem);
        if rem.is_empty() {
            break;
        }
    }
    if !rem.is_empty() {
        return Err(Error::InexactDivision(context));
    }
    Ok(pz_trim(quot))
}

fn pz_content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = num_integer::Integer::gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn pz_primitive(a: Vec<BigInt>) -> Vec<BigInt> {
    let a = pz_trim(a);
    if a.is_empty() {
        return a;
    }
    let c = pz_content(&a);
    if c.is_one() {
        return a;
    }
    a.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced modulo b.
fn pz_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    while pz_trim(rem.clone()).len() > db {
        rem = pz_trim(rem);
        let shift = rem.len() - 1 - db;
        let top = rem.last().unwrap().clone();
        for c in rem.iter_mut() {
            *c *= lead;
        }
        for (i, d) in b.iter().enumerate() {
            let sub = &top * d;
            rem[shift + i] -= sub;
        }
        rem = pz_trim(rem);
        if rem.is_empty() {
            break;
        }
    }
    rem
}

/// Primitive gcd of two integer polynomials (result primitive, positive lead).
fn pz_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut f = pz_primitive(a.to_vec());
    let mut g = pz_primitive(b.to_vec());
    if f.is_empty() {
        return g;
    }
    if g.is_empty() {
        return f;
    }
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_empty() {
        let r = pz_pseudo_rem(&f, &g);
        f = g;
        g = pz_primitive(r);
    }
    if f.last().is_some_and(|c| c.is_negative()) {
        f = f.iter().map(|c| -c).collect();
    }
    f
}

// ---------------------------------------------------------------------------
// Chebyshev polynomials
// ---------------------------------------------------------------------------

/// Chebyshev polynomial of the first kind, T_k, with exact integer
/// coefficients: T_0 = 1, T_1 = w, T_{k+1} = 2w*T_k - T_{k-1}.
pub fn cheb_t(k: u64) -> LaurentPoly {
    cheb_iter(k, LaurentPoly::constant(1), LaurentPoly::monomial(1, 1))
}

/// Chebyshev polynomial of the second kind, U_k: U_0 = 1, U_1 = 2w.
pub fn cheb_u(k: u64) -> LaurentPoly {
    cheb_iter(k, LaurentPoly::constant(1), LaurentPoly::monomial(1, 2))
}

fn cheb_iter(k: u64, p0: LaurentPoly, p1: LaurentPoly) -> LaurentPoly {
    match k {
        0 => return p0,
        1 => return p1,
        _ => {}
    }
    let two_w = LaurentPoly::monomial(1, 2);
    let (mut prev, mut cur) = (p0, p1);
    for _ in 2..=k {
        let next = two_w.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

// ---------------------------------------------------------------------------
// The Laplacian symbol and its reduced form
// ---------------------------------------------------------------------------

/// The Laurent polynomial (3 - z - z^-1)(3 - z^k - z^-k) - 1.
///
/// This is the symbol of the Laplacian viewed as a polynomial in the cyclic
/// shift; it is palindromic and bimonic with exponents -(k+1)..(k+1).
pub fn laplacian_symbol(k: u64) -> LaurentPoly {
    let e = k as i64;
    let three = LaurentPoly::constant(3);
    let outer = three
        .sub(&LaurentPoly::monomial(1, 1))
        .sub(&LaurentPoly::monomial(-1, 1));
    let inner = three
        .sub(&LaurentPoly::monomial(e, 1))
        .sub(&LaurentPoly::monomial(-e, 1));
    outer.mul(&inner).sub(&LaurentPoly::constant(1))
}

/// The degree-k polynomial h with symbol(z) = 2(w - 1) h(w) under
/// w = (z + 1/z)/2: h(w) = 2 T_k(w) - (T_k(w) - 1)/(w - 1) - 3.
///
/// Its roots parameterize the spanning-tree product formula; h(1) = -(1 + k^2)
/// and the leading coefficient is 2^k.
pub fn reduced_symbol(k: u64) -> Result<LaurentPoly> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let t_k = cheb_t(k);
    let w_minus_1 = LaurentPoly::from_ints(0, &[-1, 1]);
    let ratio = t_k.sub(&LaurentPoly::constant(1)).div_exact(&w_minus_1)?;
    Ok(t_k
        .scale(&BigInt::from(2))
        .sub(&ratio)
        .sub(&LaurentPoly::constant(3)))
}

// ---------------------------------------------------------------------------
// Companion matrices
// ---------------------------------------------------------------------------

/// Companion matrix of a bimonic (Laurent) polynomial with degree span s:
/// identity superdiagonal, bottom row (-a_0, -a_1, ..., -a_{s-1}) where the
/// normalized coefficients are a_0 + a_1 z + ... + z^s with a_0 = 1.
pub fn companion_matrix(p: &LaurentPoly) -> Result<IntMatrix> {
    if !p.is_bimonic() {
        return Err(Error::NotBimonic);
    }
    let s = p.span();
    if s < 1 {
        return Err(Error::InvalidParameter(
            "degree span must be at least 1".into(),
        ));
    }
    let coeffs = p.coeffs();
    let mut m = IntMatrix::zeros(s, s);
    for i in 0..s - 1 {
        m[(i, i + 1)] = BigInt::one();
    }
    for j in 0..s {
        m[(s - 1, j)] = -&coeffs[j];
    }
    Ok(m)
}

// ---------------------------------------------------------------------------
// Resultants
// ---------------------------------------------------------------------------

/// Resultant of two ordinary polynomials, as the determinant of the Sylvester
/// matrix (rows of f-coefficients first). With this convention
/// Res(f, g) = lc(f)^deg(g) * product of g over the roots of f,
/// so Res(x - 2, x - 3) = -1 and Res(f, g) = (-1)^(deg f * deg g) Res(g, f).
pub fn resultant(f: &LaurentPoly, g: &LaurentPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let fd = f.dense_from_zero()?;
    let gd = g.dense_from_zero()?;
    let m = fd.len() - 1; // deg f
    let n = gd.len() - 1; // deg g
    if m + n == 0 {
        return Ok(BigInt::one());
    }
    let size = m + n;
    let mut s = IntMatrix::zeros(size, size);
    for row in 0..n {
        for (i, c) in fd.iter().rev().enumerate() {
            s[(row, row + i)] = c.clone();
        }
    }
    for row in 0..m {
        for (i, c) in gd.iter().rev().enumerate() {
            s[(n + row, row + i)] = c.clone();
        }
    }
    s.det_bareiss()
}

// ---------------------------------------------------------------------------
// Product recurrences
// ---------------------------------------------------------------------------

/// Characteristic polynomial annihilating termwise products: if sequences u, v
/// satisfy linear recurrences with squarefree characteristic polynomials P and
/// Q, the returned R annihilates n -> u(n)v(n). Computed as the resultant in
/// xi of P(xi) and xi^deg(Q) Q(z/xi), a determinant over Z[z].
///
/// Inputs with repeated roots are rejected: the product construction needs
/// simple roots to cover the full solution space.
pub fn recurrence_product(p: &LaurentPoly, q: &LaurentPoly) -> Result<LaurentPoly> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_squarefree()? {
        return Err(Error::RepeatedRoots);
    }
    if !q.is_squarefree()? {
        return Err(Error::RepeatedRoots);
    }
    let pd = p.dense_from_zero()?;
    let qd = q.dense_from_zero()?;
    let pm = pd.len() - 1; // deg P
    let qn = qd.len() - 1; // deg Q
    if pm == 0 || qn == 0 {
        if pm + qn == 0 {
            return Ok(LaurentPoly::constant(1));
        }
        // One factor is constant: any linear combination is annihilated by the
        // other characteristic polynomial scaled into the same shape.
        return Err(Error::InvalidParameter(
            "recurrence_product needs two polynomials of degree at least 1".into(),
        ));
    }

    // Sylvester matrix over Z[z]. Row block one: qn rows of P's descending
    // coefficients (constants). Row block two: pm rows of the descending
    // xi-coefficients of xi^qn Q(z/xi), namely (q_0, q_1 z, ..., q_qn z^qn).
    let size = pm + qn;
    let mut m: Vec<Vec<Vec<BigInt>>> = vec![vec![vec![]; size]; size];
    for row in 0..qn {
        for (i, c) in pd.iter().rev().enumerate() {
            m[row][row + i] = pz_trim(vec![c.clone()]);
        }
    }
    for row in 0..pm {
        for (i, c) in qd.iter().enumerate() {
            // coefficient of xi^(qn - i) is q_i z^i
            let mut entry = vec![BigInt::zero(); i + 1];
            entry[i] = c.clone();
            m[qn + row][row + i] = pz_trim(entry);
        }
    }
    let det = pz_det_bareiss(m)?;
    Ok(LaurentPoly::new(0, det))
}

/// Fraction-free determinant over Z[z]; mirrors `IntMatrix::det_bareiss`.
fn pz_det_bareiss(mut m: Vec<Vec<Vec<BigInt>>>) -> Result<Vec<BigInt>> {
    let n = m.len();
    if n == 0 {
        return Ok(vec![BigInt::one()]);
    }
    let mut sign = 1i8;
    let mut prev: Vec<BigInt> = vec![BigInt::one()];
    for k in 0..n {
        if m[k][k].is_empty() {
            match (k + 1..n).find(|&i| !m[i][k].is_empty()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(vec![]),
            }
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let t = pz_sub(&pz_mul(&row[j], &pivot_row[k]), &pz_mul(&lead, &pivot_row[j]));
                row[j] = pz_div_exact(&t, &prev, "pz_det_bareiss")?;
            }
        }
        prev = m[k][k].clone();
    }
    let mut det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det = det.iter().map(|c| -c).collect();
    }
    Ok(det)
}

/// Characteristic polynomial det(zI - A) computed symbolically with the
/// fraction-free elimination over Z[z]. Intended for small matrices.
pub fn char_poly(a: &IntMatrix) -> Result<LaurentPoly> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut m: Vec<Vec<Vec<BigInt>>> = vec![vec![vec![]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut entry = vec![-&a[(i, j)]];
            if i == j {
                entry.push(BigInt::one());
            }
            m[i][j] = pz_trim(entry);
        }
    }
    Ok(LaurentPoly::new(0, pz_det_bareiss(m)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ints(p: &LaurentPoly) -> (i64, Vec<i64>) {
        (
            p.min_exp(),
            p.coeffs()
                .iter()
                .map(|c| i64::try_from(c).expect("fits i64"))
                .collect(),
        )
    }

    #[test]
    fn laurent_normalization_trims_and_shifts() {
        let p = LaurentPoly::from_ints(-2, &[0, 1, 0, 3, 0]);
        assert_eq!(ints(&p), (-1, vec![1, 0, 3]));
        assert!(LaurentPoly::from_ints(5, &[0, 0]).is_zero());
        assert_eq!(LaurentPoly::from_ints(5, &[0, 0]).min_exp(), 0);
    }

    #[test]
    fn laurent_mul_tracks_exponents() {
        // (z^-1 + z)(z^-1 - z) = z^-2 - z^2
        let a = LaurentPoly::from_ints(-1, &[1, 0, 1]);
        let b = LaurentPoly::from_ints(-1, &[1, 0, -1]);
        assert_eq!(ints(&a.mul(&b)), (-2, vec![1, 0, 0, 0, -1]));
    }

    #[test]
    fn cheb_t_small_values() {
        assert_eq!(ints(&cheb_t(0)), (0, vec![1]));
        assert_eq!(ints(&cheb_t(1)), (1, vec![1]));
        assert_eq!(ints(&cheb_t(2)), (0, vec![-1, 0, 2]));
        assert_eq!(ints(&cheb_t(3)), (1, vec![-3, 0, 4]));
        assert_eq!(ints(&cheb_t(4)), (0, vec![1, 0, -8, 0, 8]));
    }

    #[test]
    fn cheb_u_small_values() {
        assert_eq!(ints(&cheb_u(0)), (0, vec![1]));
        assert_eq!(ints(&cheb_u(1)), (1, vec![2]));
        assert_eq!(ints(&cheb_u(2)), (0, vec![-1, 0, 4]));
        assert_eq!(ints(&cheb_u(3)), (1, vec![-4, 0, 8]));
    }

    #[test]
    fn cheb_values_at_two() {
        // T_5(2) = 362 and U_4(2) = 209 (integer Chebyshev values).
        let two = BigInt::from(2);
        assert_eq!(cheb_t(5).eval_int(&two).unwrap(), BigInt::from(362));
        assert_eq!(cheb_u(4).eval_int(&two).unwrap(), BigInt::from(209));
    }

    #[test]
    fn cheb_pell_identity_exact() {
        // T_k^2 - (w^2 - 1) U_{k-1}^2 = 1 for k = 1..12.
        let w2m1 = LaurentPoly::from_ints(0, &[-1, 0, 1]);
        for k in 1..=12u64 {
            let t = cheb_t(k);
            let u = cheb_u(k - 1);
            let lhs = t.mul(&t).sub(&w2m1.mul(&u).mul(&u));
            assert_eq!(lhs, LaurentPoly::constant(1), "k = {k}");
        }
    }

    #[test]
    fn cheb_numeric_law_cos() {
        // T_n(cos x) = cos(n x), evaluated through the value recurrence.
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let x: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let n = rng.gen_range(0..=30u32);
            let c = x.cos();
            let (mut prev, mut cur) = (1.0f64, c);
            let val = match n {
                0 => 1.0,
                _ => {
                    for _ in 2..=n {
                        let next = 2.0 * c * cur - prev;
                        prev = cur;
                        cur = next;
                    }
                    cur
                }
            };
            assert!((val - (n as f64 * x).cos()).abs() < 1e-9);
        }
    }

    #[test]
    fn symbol_k1_matches_expected_coefficients() {
        let p = laplacian_symbol(1);
        assert_eq!(ints(&p), (-2, vec![1, -6, 10, -6, 1]));
        assert!(p.is_palindromic());
        assert!(p.is_bimonic());
    }

    #[test]
    fn symbol_k2_matches_expected_coefficients() {
        let p = laplacian_symbol(2);
        assert_eq!(ints(&p), (-3, vec![1, -3, -2, 8, -2, -3, 1]));
    }

    #[test]
    fn symbol_palindromic_and_bimonic_through_k8() {
        for k in 1..=8u64 {
            let p = laplacian_symbol(k);
            assert!(p.is_palindromic(), "k = {k}");
            assert!(p.is_bimonic(), "k = {k}");
            assert_eq!(p.min_exp(), -(k as i64 + 1));
            assert_eq!(p.max_exp(), k as i64 + 1);
        }
    }

    #[test]
    fn reduced_symbol_small_k() {
        // h_1 = 2w - 4, h_2 = 4w^2 - 2w - 7, h_4 = 16w^4 - 8w^3 - 24w^2 - 1.
        assert_eq!(ints(&reduced_symbol(1).unwrap()), (0, vec![-4, 2]));
        assert_eq!(ints(&reduced_symbol(2).unwrap()), (0, vec![-7, -2, 4]));
        assert_eq!(
            ints(&reduced_symbol(4).unwrap()),
            (0, vec![-1, 0, -24, -8, 16])
        );
    }

    #[test]
    fn reduced_symbol_k3_has_content_two() {
        // h_3 = 8w^3 - 4w^2 - 10w - 4 = 2(4w^3 - 2w^2 - 5w - 2): the defining
        // expression keeps the factor 2; roots are unaffected.
        assert_eq!(ints(&reduced_symbol(3).unwrap()), (0, vec![-4, -10, -4, 8]));
    }

    #[test]
    fn reduced_symbol_value_at_one_and_leading() {
        for k in 1..=10u64 {
            let h = reduced_symbol(k).unwrap();
            assert_eq!(h.degree().unwrap(), k as usize, "degree for k = {k}");
            assert_eq!(
                h.coeff_sum(),
                BigInt::from(-(1 + (k as i64) * (k as i64))),
                "h({k})(1)"
            );
            assert_eq!(h.leading_coeff(), BigInt::from(2).pow(k as u32));
        }
    }

    #[test]
    fn symbol_factors_through_reduced_symbol_exactly() {
        // 2^k * symbol(z) = (W - 2) * sum_j c_j 2^(k-j) W^j with W = z + 1/z,
        // where c_j are the coefficients of the reduced symbol. This is the
        // exact w = (z + 1/z)/2 substitution with denominators cleared.
        for k in 1..=8u64 {
            let h = reduced_symbol(k).unwrap();
            let w_big = LaurentPoly::from_ints(-1, &[1, 0, 1]); // z + 1/z
            let mut sum = LaurentPoly::zero();
            let mut w_pow = LaurentPoly::constant(1);
            for (j, c) in h.dense_from_zero().unwrap().iter().enumerate() {
                let scaled = w_pow.scale(&(c * BigInt::from(2).pow((k - j as u64) as u32)));
                sum = sum.add(&scaled);
                w_pow = w_pow.mul(&w_big);
            }
            let lhs = laplacian_symbol(k).scale(&BigInt::from(2).pow(k as u32));
            let rhs = w_big.sub(&LaurentPoly::constant(2)).mul(&sum);
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn symbol_identity_numeric_on_unit_circle() {
        // (3 - 2cos phi)(3 - 2cos k phi) - 1 = 2(w - 1) h_k(w) at w = cos phi.
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..200 {
            let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            for k in 1..=6u64 {
                let w = phi.cos();
                let lhs = (3.0 - 2.0 * w) * (3.0 - 2.0 * (k as f64 * phi).cos()) - 1.0;
                let h = reduced_symbol(k).unwrap().eval_f64(w);
                let rhs = 2.0 * (w - 1.0) * h;
                assert!((lhs - rhs).abs() < 1e-9, "phi = {phi}, k = {k}");
            }
        }
    }

    #[test]
    fn companion_of_k1_symbol() {
        let a = companion_matrix(&laplacian_symbol(1)).unwrap();
        assert_eq!(a.rows(), 4);
        let expected = IntMatrix::from_rows(&[
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![-1, 6, -10, 6],
        ]);
        assert_eq!(a, expected);
    }

    #[test]
    fn companion_rejects_non_bimonic() {
        assert!(matches!(
            companion_matrix(&LaurentPoly::from_ints(0, &[2, 3, 1])),
            Err(Error::NotBimonic)
        ));
        assert!(matches!(
            companion_matrix(&LaurentPoly::from_ints(0, &[1, 3, 2])),
            Err(Error::NotBimonic)
        ));
    }

    #[test]
    fn companion_char_poly_recovers_normalized_input() {
        // det(zI - A) = z^(k+1) * symbol(z) for the bimonic symbol.
        for k in 1..=3u64 {
            let p = laplacian_symbol(k);
            let a = companion_matrix(&p).unwrap();
            let cp = char_poly(&a).unwrap();
            assert_eq!(cp, p.shifted(k as i64 + 1), "k = {k}");
        }
    }

    #[test]
    fn companion_determinant_is_unimodular() {
        // det A = (-1)^s a_0 = +1 because the span s = 2(k+1) is even.
        for k in 1..=6u64 {
            let a = companion_matrix(&laplacian_symbol(k)).unwrap();
            assert_eq!(a.det_bareiss().unwrap(), BigInt::one(), "k = {k}");
        }
    }

    #[test]
    fn resultant_of_linears() {
        let f = LaurentPoly::from_ints(0, &[-2, 1]); // x - 2
        let g = LaurentPoly::from_ints(0, &[-3, 1]); // x - 3
        assert_eq!(resultant(&f, &g).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn resultant_of_quadratics() {
        let f = LaurentPoly::from_ints(0, &[-1, 0, 1]); // x^2 - 1
        let g = LaurentPoly::from_ints(0, &[-4, 0, 1]); // x^2 - 4
        assert_eq!(resultant(&f, &g).unwrap(), BigInt::from(9));
    }

    #[test]
    fn resultant_antisymmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            let f = random_poly(&mut rng, 1..=4);
            let g = random_poly(&mut rng, 1..=4);
            let df = f.degree().unwrap() as u32;
            let dg = g.degree().unwrap() as u32;
            let sign = if (df * dg) % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                resultant(&f, &g).unwrap(),
                resultant(&g, &f).unwrap() * BigInt::from(sign)
            );
        }
    }

    #[test]
    fn resultant_multiplicative_in_second_argument() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..30 {
            let f = random_poly(&mut rng, 1..=3);
            let g = random_poly(&mut rng, 1..=3);
            let h = random_poly(&mut rng, 1..=3);
            assert_eq!(
                resultant(&f, &g.mul(&h)).unwrap(),
                resultant(&f, &g).unwrap() * resultant(&f, &h).unwrap()
            );
        }
    }

    #[test]
    fn resultant_vanishes_iff_common_root() {
        // (x - 2)(x + 1) and (x - 2)(x - 5) share the root 2.
        let f = LaurentPoly::from_ints(0, &[-2, 1]).mul(&LaurentPoly::from_ints(0, &[1, 1]));
        let g = LaurentPoly::from_ints(0, &[-2, 1]).mul(&LaurentPoly::from_ints(0, &[-5, 1]));
        assert_eq!(resultant(&f, &g).unwrap(), BigInt::zero());
        let h = LaurentPoly::from_ints(0, &[-7, 1]);
        assert_ne!(resultant(&f, &h).unwrap(), BigInt::zero());
    }

    fn random_poly(rng: &mut ChaCha8Rng, degrees: std::ops::RangeInclusive<usize>) -> LaurentPoly {
        loop {
            let d = rng.gen_range(degrees.clone());
            let coeffs: Vec<i64> = (0..=d).map(|_| rng.gen_range(-5..=5)).collect();
            let p = LaurentPoly::from_ints(0, &coeffs);
            if !p.is_zero() && p.degree().unwrap() == d {
                return p;
            }
        }
    }

    #[test]
    fn recurrence_product_of_linears_is_root_product() {
        let f = LaurentPoly::from_ints(0, &[-2, 1]); // root 2
        let g = LaurentPoly::from_ints(0, &[-3, 1]); // root 3
        let r = recurrence_product(&f, &g).unwrap();
        assert_eq!(ints(&r), (0, vec![-6, 1])); // root 6
    }

    #[test]
    fn recurrence_product_squares_fibonacci() {
        // Characteristic polynomial of squared Fibonacci numbers:
        // (z^2 - z - 1) paired with itself gives z^4 - z^3 - 4z^2 - z + 1.
        let f = LaurentPoly::from_ints(0, &[-1, -1, 1]);
        let r = recurrence_product(&f, &f).unwrap();
        assert_eq!(ints(&r), (0, vec![1, -1, -4, -1, 1]));
        // Squared Fibonacci really is annihilated: 0,1,1,4,9,25,64,...
        let mut fib = vec![BigInt::zero(), BigInt::one()];
        for i in 2..20 {
            let next = &fib[i - 1] + &fib[i - 2];
            fib.push(next);
        }
        let sq: Vec<BigInt> = fib.iter().map(|x| x * x).collect();
        for n in 0..sq.len() - 4 {
            let combo: BigInt = r
                .coeffs()
                .iter()
                .enumerate()
                .map(|(j, c)| c * &sq[n + j])
                .sum();
            assert!(combo.is_zero(), "offset {n}");
        }
    }

    #[test]
    fn recurrence_product_rejects_repeated_roots() {
        let sq = LaurentPoly::from_ints(0, &[1, -2, 1]); // (z-1)^2
        let ok = LaurentPoly::from_ints(0, &[-1, -1, 1]);
        assert!(matches!(
            recurrence_product(&sq, &ok),
            Err(Error::RepeatedRoots)
        ));
        assert!(matches!(
            recurrence_product(&ok, &sq),
            Err(Error::RepeatedRoots)
        ));
    }

    #[test]
    fn recurrence_product_annihilates_random_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..25 {
            let (p, proots) = poly_with_distinct_roots(&mut rng);
            let (q, qroots) = poly_with_distinct_roots(&mut rng);
            let r = recurrence_product(&p, &q).unwrap();
            let u = sequence_from_roots(&proots, 40, &mut rng);
            let v = sequence_from_roots(&qroots, 40, &mut rng);
            let prod: Vec<BigInt> = u.iter().zip(&v).map(|(a, b)| a * b).collect();
            let rd = r.dense_from_zero().unwrap();
            for n in 0..prod.len() - rd.len() {
                let combo: BigInt = rd.iter().enumerate().map(|(j, c)| c * &prod[n + j]).sum();
                assert!(combo.is_zero(), "offset {n}");
            }
        }
    }

    fn poly_with_distinct_roots(rng: &mut ChaCha8Rng) -> (LaurentPoly, Vec<i64>) {
        let mut pool: Vec<i64> = (-4..=4).collect();
        let d = rng.gen_range(1..=3);
        let mut roots = Vec::new();
        for _ in 0..d {
            let i = rng.gen_range(0..pool.len());
            roots.push(pool.swap_remove(i));
        }
        let mut p = LaurentPoly::constant(1);
        for r in &roots {
            p = p.mul(&LaurentPoly::from_ints(0, &[-r, 1]));
        }
        (p, roots)
    }

    fn sequence_from_roots(roots: &[i64], len: usize, rng: &mut ChaCha8Rng) -> Vec<BigInt> {
        // Random integer combination of the exponential solutions r^n.
        let weights: Vec<i64> = roots.iter().map(|_| rng.gen_range(-3..=3)).collect();
        (0..len)
            .map(|n| {
                roots
                    .iter()
                    .zip(&weights)
                    .map(|(r, w)| BigInt::from(*w) * BigInt::from(*r).pow(n as u32))
                    .sum()
            })
            .collect()
    }

    #[test]
    fn squarefree_check_sees_through_shifts() {
        // z^2(z - 1) has 0 as a double root.
        let p = LaurentPoly::from_ints(2, &[-1, 1]);
        assert!(!p.is_squarefree().unwrap());
        let q = LaurentPoly::from_ints(1, &[-1, 1]); // z(z-1): simple roots
        assert!(q.is_squarefree().unwrap());
    }

    #[test]
    fn div_exact_detects_remainders() {
        let num = LaurentPoly::from_ints(0, &[-1, 0, 1]);
        let den = LaurentPoly::from_ints(0, &[-1, 1]);
        assert_eq!(ints(&num.div_exact(&den).unwrap()), (0, vec![1, 1]));
        let bad = LaurentPoly::from_ints(0, &[1, 0, 1]);
        assert!(bad.div_exact(&den).is_err());
    }

    #[test]
    fn ratio_identity_exact_in_polynomial_form() {
        // 2^(n-1) (T_n(w) - 1)/(w - 1) = sum_j e_j 2^(n-1-j) (1 + w)^j where
        // U_{n-1}(y)^2 = sum_j e_j y^(2j); this is the square identity for the
        // Chebyshev ratio, with denominators cleared.
        for n in 1..=14u64 {
            let lhs = cheb_t(n)
                .sub(&LaurentPoly::constant(1))
                .div_exact(&LaurentPoly::from_ints(0, &[-1, 1]))
                .unwrap()
                .scale(&BigInt::from(2).pow((n - 1) as u32));
            let u = cheb_u(n - 1);
            let usq = u.mul(&u);
            let one_plus_w = LaurentPoly::from_ints(0, &[1, 1]);
            let mut rhs = LaurentPoly::zero();
            let mut pw = LaurentPoly::constant(1);
            for j in 0..=(n - 1) as i64 {
                let e_j = usq.coeff(2 * j);
                rhs = rhs.add(&pw.scale(&(e_j * BigInt::from(2).pow((n - 1 - j as u64) as u32))));
                pw = pw.mul(&one_plus_w);
            }
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn ratio_identity_numeric() {
        // (T_n(w) - 1)/(w - 1) = U_{n-1}(sqrt((1+w)/2))^2 on (-1, 3], checked
        // with relative tolerance because both sides reach ~1e22 at w = 3.
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..200 {
            let w: f64 = rng.gen_range(-0.999..=3.0);
            let n = rng.gen_range(1..=30u32);
            let t_n = cheb_value(w, n);
            let lhs = (t_n - 1.0) / (w - 1.0);
            let y = ((1.0 + w) / 2.0).sqrt();
            let u = cheb_value_u(y, n - 1);
            let rhs = u * u;
            let scale = lhs.abs().max(rhs.abs()).max(1.0);
            assert!(
                ((lhs - rhs) / scale).abs() < 1e-9,
                "w = {w}, n = {n}: {lhs} vs {rhs}"
            );
        }
    }

    fn cheb_value(x: f64, n: u32) -> f64 {
        let (mut prev, mut cur) = (1.0, x);
        match n {
            0 => 1.0,
            1 => x,
            _ => {
                for _ in 2..=n {
                    let next = 2.0 * x * cur - prev;
                    prev = cur;
                    cur = next;
                }
                cur
            }
        }
    }

    fn cheb_value_u(x: f64, n: u32) -> f64 {
        let (mut prev, mut cur) = (1.0, 2.0 * x);
        match n {
            0 => 1.0,
            1 => 2.0 * x,
            _ => {
                for _ in 2..=n {
                    let next = 2.0 * x * cur - prev;
                    prev = cur;
                    cur = next;
                }
                cur
            }
        }
    }
}
