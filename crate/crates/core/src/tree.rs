//! Spanning-tree counts of GP(n, k) by several independent routes: the
//! matrix-tree determinant, a resultant formula driven by the reduced
//! Laplacian symbol, and closed-form recurrences for shifts 1 through 4.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::GpGraph;
use crate::jacobian::reduced_shift;
use crate::matrix::exact_div;
use crate::poly::{cheb_t, reduced_symbol, resultant, LaurentPoly};
use crate::quad::QuadExt;
use crate::recurrence::LinearRecurrence;

/// Which route counts the trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TauMethod {
    /// Closed form when the reduced shift is at most 4; otherwise the
    /// resultant route past n = 60 and the matrix-tree route below it.
    Auto,
    /// Matrix-tree determinant of the reduced Laplacian.
    Kirchhoff,
    /// Resultant of the reduced symbol against T_n - 1.
    Resultant,
    /// Shift-specific closed forms (reduced shift 1..=4).
    Closed,
}

/// Number of spanning trees by the matrix-tree theorem: the determinant of
/// the Laplacian with one row and column removed.
pub fn tau_kirchhoff(n: u64, k: u64) -> Result<BigUint> {
    let g = GpGraph::new(n, k)?;
    let l = g.laplacian();
    let last = l.rows() - 1;
    let det = l.delete_row_col(last, last).det_bareiss()?;
    positive_count(det, n, k, "kirchhoff")
}

/// Number of spanning trees from the reduced symbol h of the shift:
///
///   tau = (-1)^((n-1)(k-1)) * n * Res(h, T_n - 1) / (L^(n-1) * (-1)^k * h(1))
///
/// with L the leading coefficient of h. The two sign factors convert the
/// product of (T_n - 1)/(w - 1) over the roots of h into resultants.
pub fn tau_resultant(n: u64, k: u64) -> Result<BigUint> {
    let kp = reduced_shift(n, k)?;
    tau_resultant_with_symbol(n, kp, &reduced_symbol(kp)?)
}

/// The resultant assembly with a caller-supplied symbol, exposed so that
/// consistency checks can feed deliberately corrupted inputs and watch the
/// pipeline reject them.
pub fn tau_resultant_with_symbol(n: u64, k: u64, h: &LaurentPoly) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "GP(n, k) needs n >= 3, got n = {n}"
        )));
    }
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let t_n_minus_1 = cheb_t(n).sub(&LaurentPoly::constant(1));
    let res = resultant(h, &t_n_minus_1)?;
    let lead = h.leading_coeff();
    let h_at_one = h.coeff_sum();
    if h_at_one.is_zero() {
        return Err(Error::Inconsistency(
            "reduced symbol vanishes at 1".into(),
        ));
    }
    let mut numerator = BigInt::from(n) * res;
    if (n - 1) % 2 == 1 && (k - 1) % 2 == 1 {
        numerator = -numerator;
    }
    let mut denominator = lead.pow(n as u32 - 1) * h_at_one;
    if k % 2 == 1 {
        denominator = -denominator;
    }
    let tau = exact_div(numerator, &denominator, "tau_resultant")?;
    positive_count(tau, n, k, "resultant")
}

/// Spanning trees of the n-prism GP(n, 1): tau = n (T_n(2) - 1).
pub fn tau_prism(n: u64) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "GP(n, 1) needs n >= 3, got n = {n}"
        )));
    }
    let t = cheb_value_int(n, &BigInt::from(2));
    positive_count(BigInt::from(n) * (t - BigInt::one()), n, 1, "prism")
}

/// T_n evaluated at an integer through the value recurrence.
fn cheb_value_int(n: u64, x: &BigInt) -> BigInt {
    let mut prev = BigInt::one();
    let mut cur = x.clone();
    match n {
        0 => prev,
        _ => {
            for _ in 2..=n {
                let next = BigInt::from(2) * x * &cur - &prev;
                prev = std::mem::replace(&mut cur, next);
            }
            cur
        }
    }
}

/// Spanning trees of GP(n, 2) through the quadratic field Q(sqrt(29)):
/// with w1 = (1 + sqrt(29))/4 a root of h_2, write T_n(w1) - 1 as
/// (alpha + beta sqrt(29))/4; then tau = (-1)^n n (alpha^2 - 29 beta^2)/20.
/// Returns (tau, alpha, beta).
pub fn tau_k2_quadratic(n: u64) -> Result<(BigUint, BigInt, BigInt)> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "GP(n, 2) needs n >= 3, got n = {n}"
        )));
    }
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let w1 = QuadExt::new(quarter.clone(), quarter, 29)?;
    // T_n(w1) by the value recurrence in the field.
    let mut prev = QuadExt::from_ints(1, 0, 29)?;
    let mut cur = w1.clone();
    for _ in 2..=n {
        let next = cur.scale(&BigRational::from_integer(BigInt::from(2)))
            .mul(&w1)?
            .sub(&prev)?;
        prev = std::mem::replace(&mut cur, next);
    }
    let x = cur.sub(&QuadExt::from_ints(1, 0, 29)?)?;
    let four = BigRational::from_integer(BigInt::from(4));
    let alpha_r = x.rational_part() * &four;
    let beta_r = x.radical_part() * &four;
    if !alpha_r.is_integer() || !beta_r.is_integer() {
        return Err(Error::Inconsistency(
            "T_n((1 + sqrt 29)/4) - 1 should have denominator 4".into(),
        ));
    }
    let alpha = alpha_r.to_integer();
    let beta = beta_r.to_integer();
    // Norm of x is (alpha^2 - 29 beta^2)/16; the root product (w1-1)(w2-1)
    // is -5/4, and the overall sign works out to (-1)^n.
    let mut tau = BigInt::from(n) * (&alpha * &alpha - BigInt::from(29) * &beta * &beta);
    if n % 2 == 1 {
        tau = -tau;
    }
    let tau = exact_div(tau, &BigInt::from(20), "tau_k2_quadratic")?;
    Ok((positive_count(tau, n, 2, "k2 quadratic")?, alpha, beta))
}

/// The integer sequence behind the GP(n, 2) count: tau = n a(n)^2, where
/// a(n+4) = a(n+3) + 3a(n+2) - a(n+1) - a(n) with a(0..4) = 0, 1, 1, 5.
pub fn k2_recurrence() -> LinearRecurrence {
    let chars = [1i64, 1, -3, -1, 1].map(BigInt::from).to_vec();
    let init = [0i64, 1, 1, 5].map(BigInt::from).to_vec();
    LinearRecurrence::new(chars, init, 0).expect("valid built-in recurrence")
}

/// tau(GP(n, 2)) = n a(n)^2 via the degree-4 recurrence.
pub fn tau_k2_recurrence(n: u64) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "GP(n, 2) needs n >= 3, got n = {n}"
        )));
    }
    let a = k2_recurrence().term(n as i64)?;
    positive_count(BigInt::from(n) * (&a * &a), n, 2, "k2 recurrence")
}

/// Degree-8 characteristic polynomial shared by the two GP(n, 3) sequences,
/// constructed as A(z)^2 - 6z B(z)^2 with A = z^4 + z^3 + 11z^2 + z + 1 and
/// B = z^3 + 2z^2 + 2z + 1. Expanded: z^8 - 4z^7 - z^6 - 24z^5 + 65z^4
/// - 24z^3 - z^2 - 4z + 1.
pub fn k3_char_poly() -> LaurentPoly {
    let a = LaurentPoly::from_ints(0, &[1, 1, 11, 1, 1]);
    let b = LaurentPoly::from_ints(0, &[1, 2, 2, 1]);
    let six_z = LaurentPoly::monomial(1, 6);
    a.mul(&a).sub(&six_z.mul(&b).mul(&b))
}

/// The even-index sequence for GP(2m, 3): tau = 12 m a(m)^2.
pub fn k3_even_recurrence() -> LinearRecurrence {
    let init = [0i64, 1, 4, 9, 72, 320, 1332, 6889].map(BigInt::from).to_vec();
    LinearRecurrence::from_char_poly(&k3_char_poly(), init, 0)
        .expect("valid built-in recurrence")
}

/// The odd-index sequence for GP(2m + 1, 3): tau = (2m + 1) b(m)^2.
pub fn k3_odd_recurrence() -> LinearRecurrence {
    let init = [1i64, 1, 20, 83, 289, 1693, 7775, 34820]
        .map(BigInt::from)
        .to_vec();
    LinearRecurrence::from_char_poly(&k3_char_poly(), init, 0)
        .expect("valid built-in recurrence")
}

/// tau(GP(n, 3)) for n >= 4, split by parity over the shared degree-8
/// recurrence.
pub fn tau_k3_recurrence(n: u64) -> Result<BigUint> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "GP(n, 3) needs n >= 4, got n = {n}"
        )));
    }
    let m = (n / 2) as i64;
    let tau = if n % 2 == 0 {
        let a = k3_even_recurrence().term(m)?;
        BigInt::from(12) * BigInt::from(m) * (&a * &a)
    } else {
        let b = k3_odd_recurrence().term(m)?;
        BigInt::from(n) * (&b * &b)
    };
    positive_count(tau, n, 3, "k3 recurrence")
}

/// The degree-16 recurrence for GP(n, 4): tau = n a(n)^2 with
/// characteristic polynomial z^16 - z^15 - 2z^13 - 16z^12 + 10z^11 - 2z^10
/// + 16z^9 + 50z^8 - 16z^7 - 2z^6 - 10z^5 - 16z^4 + 2z^3 + z + 1.
pub fn k4_recurrence() -> LinearRecurrence {
    let chars = [
        1i64, 1, 0, 2, -16, -10, -2, -16, 50, 16, -2, 10, -16, -2, 0, -1, 1,
    ]
    .map(BigInt::from)
    .to_vec();
    let init = [
        -83i64, 35, -19, 1, -5, 1, -1, 0, 1, 1, 5, 1, 19, 35, 83, 73,
    ]
    .map(BigInt::from)
    .to_vec();
    LinearRecurrence::new(chars, init, -7).expect("valid built-in recurrence")
}

/// tau(GP(n, 4)) = n a(n)^2 for n >= 5.
pub fn tau_k4_recurrence(n: u64) -> Result<BigUint> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!(
            "GP(n, 4) needs n >= 5, got n = {n}"
        )));
    }
    let a = k4_recurrence().term(n as i64)?;
    positive_count(BigInt::from(n) * (&a * &a), n, 4, "k4 recurrence")
}

/// Closed form for the reduced shift of (n, k); errors for shifts above 4.
pub fn tau_closed(n: u64, k: u64) -> Result<BigUint> {
    match reduced_shift(n, k)? {
        1 => tau_prism(n),
        2 => tau_k2_recurrence(n),
        3 => tau_k3_recurrence(n),
        4 => tau_k4_recurrence(n),
        kp => Err(Error::UnsupportedMethod(format!(
            "no closed form for reduced shift {kp} (have 1..=4)"
        ))),
    }
}

/// Spanning-tree count by the requested route.
pub fn tau(n: u64, k: u64, method: TauMethod) -> Result<BigUint> {
    match method {
        TauMethod::Kirchhoff => tau_kirchhoff(n, k),
        TauMethod::Resultant => tau_resultant(n, k),
        TauMethod::Closed => tau_closed(n, k),
        TauMethod::Auto => {
            if reduced_shift(n, k)? <= 4 {
                tau_closed(n, k)
            } else if n > 60 {
                tau_resultant(n, k)
            } else {
                tau_kirchhoff(n, k)
            }
        }
    }
}

fn positive_count(value: BigInt, n: u64, k: u64, route: &str) -> Result<BigUint> {
    if value.is_positive() {
        Ok(value.to_biguint().unwrap())
    } else {
        Err(Error::Inconsistency(format!(
            "GP({n},{k}) {route} count came out nonpositive: {value}"
        )))
    }
}
