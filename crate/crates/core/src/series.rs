//! Truncated power series in `x` with coefficients in `Z[t]`, and the
//! generating-series identities of the three polytope families.
//!
//! The series of a family is `f(x) = Σ_{n>=1} (-1)^n p(X^{n-1}, t) x^n` with
//! `p` the Poincaré polynomial counting cells by dimension.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::combinatorics::{poincare_polynomial, Family, TPoly};
use crate::error::{Error, Result};

pub const DEFAULT_ORDER: usize = 12;

/// `Σ_{n=0}^{N} c_n x^n` modulo `x^{N+1}`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct XSeries {
    order: usize,
    coeffs: Vec<TPoly>,
}

impl XSeries {
    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn new(order: usize, mut coeffs: Vec<TPoly>) -> Self {
        coeffs.resize(order + 1, TPoly::zero());
        Self { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![TPoly::one()])
    }

    /// The identity series `x`.
    pub fn x(order: usize) -> Self {
        Self::new(order, vec![TPoly::zero(), TPoly::one()])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> &TPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[TPoly] {
        &self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::new(
            self.order,
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::new(
            self.order,
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|a| -a).collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order;
        let mut out = vec![TPoly::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Ok(Self::new(n, out))
    }

    pub fn scale(&self, c: &TPoly) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `x^k · self`, truncated.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![TPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(self.order, coeffs)
    }

    /// `self(g(x))`; `g` must have zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        self.check_order(g)?;
        if !g.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        // Horner: c_0 + g(c_1 + g(c_2 + …))
        let mut acc = Self::zero(self.order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g)?;
            acc.coeffs[0] = &acc.coeffs[0] + c;
        }
        Ok(acc)
    }

    /// Multiplicative inverse; the constant term must be `±1`.
    pub fn inverse(&self) -> Result<Self> {
        rational_expand(&[TPoly::one()], &self.coeffs, self.order)
    }

    /// Square root with constant term 1, by Newton's iteration
    /// `s ← (s + f/s) / 2` doubling the correct order each step. The result
    /// is checked by squaring.
    pub fn sqrt(&self) -> Result<Self> {
        if self.coeffs[0] != TPoly::one() {
            return Err(Error::NotInvertible(
                "square root needs constant term 1".into(),
            ));
        }
        let two = BigInt::from(2);
        let mut s = Self::one(self.order);
        let mut correct = 1; // s is right modulo x^correct
        while correct <= self.order {
            correct = (2 * correct).min(self.order + 1);
            let sum = s.add(&self.mul(&s.inverse()?)?)?;
            let halved = sum.coeffs[..correct]
                .iter()
                .map(|c| c.div_exact_int(&two))
                .collect::<Result<Vec<_>>>()
                .map_err(|_| {
                    Error::InexactDivision("square root has non-integral coefficients".into())
                })?;
            s = Self::new(self.order, halved);
        }
        if &s.mul(&s)? != self {
            return Err(Error::Invariant(
                "square root failed its squaring check".into(),
            ));
        }
        Ok(s)
    }

    /// Coefficients as polynomials with `t` specialised to `value`.
    pub fn eval_t(&self, value: i64) -> Vec<BigInt> {
        let v = BigInt::from(value);
        self.coeffs.iter().map(|c| c.eval(&v)).collect()
    }

    /// Lowest order at which `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        (0..=self.order.min(other.order)).find(|&n| self.coeffs[n] != other.coeffs[n])
    }
}

impl fmt::Debug for XSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for XSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order + 1)
    }
}

/// `numerator / denominator` expanded to order `order` by long division. The
/// denominator's constant term must be `±1`.
pub fn rational_expand(
    numerator: &[TPoly],
    denominator: &[TPoly],
    order: usize,
) -> Result<XSeries> {
    let d0 = denominator.first().cloned().unwrap_or_else(TPoly::zero);
    let sign = if d0 == TPoly::one() {
        BigInt::one()
    } else if d0 == -&TPoly::one() {
        -BigInt::one()
    } else {
        return Err(Error::NotInvertible(format!(
            "constant term {d0} is not ±1"
        )));
    };
    let mut q: Vec<TPoly> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut r = numerator.get(n).cloned().unwrap_or_else(TPoly::zero);
        for k in 1..=n.min(denominator.len().saturating_sub(1)) {
            r = &r - &(&denominator[k] * &q[n - k]);
        }
        q.push(r.scale(&sign));
    }
    Ok(XSeries::new(order, q))
}

/// `Σ_{n=1}^{N} (-1)^n p(X^{n-1}, t) x^n`.
pub fn series_from_family(family: Family, order: usize) -> Result<XSeries> {
    let mut coeffs = vec![TPoly::zero()];
    for n in 1..=order {
        let p = poincare_polynomial(family, n - 1)?;
        coeffs.push(if n % 2 == 0 { p } else { -&p });
    }
    Ok(XSeries::new(order, coeffs))
}

/// Closed forms of the simplex and cube series as `(numerator, denominator)`
/// polynomials in `x`.
pub fn closed_form(family: Family) -> Option<(Vec<TPoly>, Vec<TPoly>)> {
    let p = TPoly::from_i64s;
    match family {
        // -x / ((1 + x)(1 + (1+t)x))
        Family::Simplex => Some((
            vec![p(&[0]), p(&[-1])],
            vec![p(&[1]), p(&[2, 1]), p(&[1, 1])],
        )),
        // -x / (1 + (2+t)x)
        Family::Cube => Some((vec![p(&[0]), p(&[-1])], vec![p(&[1]), p(&[2, 1])])),
        Family::Associahedron => None,
    }
}

/// Checks `2(1+t) x f + (1 + (2+t)x) - sqrt(1 + 2(2+t)x + t²x²) = 0` for the
/// enumerated associahedron series `f`. `x f` is exact through order
/// `order + 1`, so the identity is checked that far. Returns the first order
/// at which it fails.
pub fn verify_associahedron_closed_form(order: usize) -> Result<Option<usize>> {
    let n = order + 1;
    let f = XSeries::new(n, series_from_family(Family::Associahedron, order)?.coeffs);
    let p = TPoly::from_i64s;
    let radicand = XSeries::new(n, vec![p(&[1]), p(&[4, 2]), p(&[0, 0, 1])]);
    let root = radicand.sqrt()?;
    let lhs = f
        .shift(1)
        .scale(&p(&[2, 2]))
        .add(&XSeries::new(n, vec![p(&[1]), p(&[2, 1])]))?
        .sub(&root)?;
    Ok(lhs.first_difference(&XSeries::zero(n)))
}

/// A linear fractional map `(n0 + n1 x) / (d0 + d1 x)` over `Z[t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Moebius {
    pub n0: TPoly,
    pub n1: TPoly,
    pub d0: TPoly,
    pub d1: TPoly,
}

impl Moebius {
    /// `self ∘ other`, by substituting and clearing the common denominator.
    pub fn compose(&self, other: &Moebius) -> Moebius {
        Moebius {
            n0: &(&self.n0 * &other.d0) + &(&self.n1 * &other.n0),
            n1: &(&self.n0 * &other.d1) + &(&self.n1 * &other.n1),
            d0: &(&self.d0 * &other.d0) + &(&self.d1 * &other.n0),
            d1: &(&self.d0 * &other.d1) + &(&self.d1 * &other.n1),
        }
    }

    /// Whether the map is `x`, i.e. `(n0 + n1 x) = x (d0 + d1 x)` identically.
    pub fn is_identity(&self) -> bool {
        self.n0.is_zero() && self.d1.is_zero() && self.n1 == self.d0 && !self.d0.is_zero()
    }
}

/// `f = -x / (1 + (2+t)x)` composed with itself is `x`, as rational functions.
pub fn cube_series_is_symbolically_involutive() -> bool {
    let f = Moebius {
        n0: TPoly::zero(),
        n1: -&TPoly::one(),
        d0: TPoly::one(),
        d1: TPoly::from_i64s(&[2, 1]),
    };
    f.compose(&f).is_identity()
}

/// Catalan numbers `C_0 … C_n` by the convolution recurrence.
pub fn catalan(n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::one()];
    for k in 1..=n {
        let next = (0..k).map(|i| &c[i] * &c[k - 1 - i]).sum();
        c.push(next);
    }
    c
}

/// Little Schröder (super Catalan) numbers `s_1 … s_n`:
/// `n s_n = 3(2n-3) s_{n-1} - (n-3) s_{n-2}`.
pub fn super_catalan(n: usize) -> Vec<BigInt> {
    let mut s = vec![BigInt::zero(), BigInt::one(), BigInt::one()];
    for k in 3..=n {
        let kk = BigInt::from(k);
        let v = (BigInt::from(3 * (2 * k - 3)) * &s[k - 1]
            - BigInt::from(k as i64 - 3) * &s[k - 2])
            / kk;
        s.push(v);
    }
    s.truncate(n + 1);
    s.remove(0);
    s
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesReport {
    pub order: usize,
    pub simplex: XSeries,
    pub associahedron: XSeries,
    pub cube: XSeries,
    pub simplex_after_associahedron_is_x: bool,
    pub associahedron_after_simplex_is_x: bool,
    pub cube_after_cube_is_x: bool,
    pub cube_symbolically_involutive: bool,
    pub simplex_closed_form: bool,
    pub cube_closed_form: bool,
    /// First failing order of the associahedron closed form, if any.
    pub associahedron_closed_form_failure: Option<usize>,
    pub catalan_at_t0: bool,
    pub super_catalan_at_t1: bool,
}

impl SeriesReport {
    pub fn passed(&self) -> bool {
        self.simplex_after_associahedron_is_x
            && self.associahedron_after_simplex_is_x
            && self.cube_after_cube_is_x
            && self.cube_symbolically_involutive
            && self.simplex_closed_form
            && self.cube_closed_form
            && self.associahedron_closed_form_failure.is_none()
            && self.catalan_at_t0
            && self.super_catalan_at_t1
    }
}

pub fn series_report(order: usize) -> Result<SeriesReport> {
    if order == 0 {
        return Err(Error::Invariant("order must be at least 1".into()));
    }
    let s = series_from_family(Family::Simplex, order)?;
    let k = series_from_family(Family::Associahedron, order)?;
    let c = series_from_family(Family::Cube, order)?;
    let x = XSeries::x(order);
    let closed = |fam| -> Result<bool> {
        let (num, den) = closed_form(fam).expect("family with a rational closed form");
        Ok(rational_expand(&num, &den, order)? == series_from_family(fam, order)?)
    };
    let abs_at = |v: i64| -> Vec<BigInt> { k.eval_t(v)[1..].iter().map(Signed::abs).collect() };
    Ok(SeriesReport {
        order,
        simplex_after_associahedron_is_x: s.compose(&k)? == x,
        associahedron_after_simplex_is_x: k.compose(&s)? == x,
        cube_after_cube_is_x: c.compose(&c)? == x,
        cube_symbolically_involutive: cube_series_is_symbolically_involutive(),
        simplex_closed_form: closed(Family::Simplex)?,
        cube_closed_form: closed(Family::Cube)?,
        associahedron_closed_form_failure: verify_associahedron_closed_form(order)?,
        catalan_at_t0: abs_at(0) == catalan(order)[1..],
        super_catalan_at_t1: abs_at(1) == super_catalan(order + 1)[1..],
        simplex: s,
        associahedron: k,
        cube: c,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> TPoly {
        TPoly::from_i64s(c)
    }

    #[test]
    fn family_series_examples() {
        let s = series_from_family(Family::Simplex, 3).unwrap();
        assert_eq!(
            s.coeffs(),
            &[p(&[]), p(&[-1]), p(&[2, 1]), p(&[-3, -3, -1])]
        );
        let k = series_from_family(Family::Associahedron, 3).unwrap();
        assert_eq!(
            k.coeffs(),
            &[p(&[]), p(&[-1]), p(&[2, 1]), p(&[-5, -5, -1])]
        );
        let c = series_from_family(Family::Cube, 2).unwrap();
        assert_eq!(c.coeffs(), &[p(&[]), p(&[-1]), p(&[2, 1])]);
    }

    #[test]
    fn composing_with_x() {
        let k = series_from_family(Family::Associahedron, 6).unwrap();
        assert_eq!(k.compose(&XSeries::x(6)).unwrap(), k);
        assert_eq!(XSeries::x(6).compose(&k).unwrap(), k);
    }

    #[test]
    fn errors() {
        let one = XSeries::one(4);
        assert!(matches!(one.compose(&one), Err(Error::NonzeroConstantTerm)));
        assert!(matches!(
            XSeries::x(3).add(&XSeries::x(4)),
            Err(Error::OrderMismatch(3, 4))
        ));
        assert!(matches!(
            rational_expand(&[p(&[1])], &[p(&[2])], 3),
            Err(Error::NotInvertible(_))
        ));
        assert!(XSeries::x(3).sqrt().is_err());
    }

    #[test]
    fn inverse_pairs_through_order_ten() {
        let s = series_from_family(Family::Simplex, 10).unwrap();
        let k = series_from_family(Family::Associahedron, 10).unwrap();
        let c = series_from_family(Family::Cube, 10).unwrap();
        let x = XSeries::x(10);
        assert_eq!(s.compose(&k).unwrap(), x);
        assert_eq!(k.compose(&s).unwrap(), x);
        assert_eq!(c.compose(&c).unwrap(), x);
        assert!(cube_series_is_symbolically_involutive());
    }

    #[test]
    fn closed_forms() {
        for fam in [Family::Simplex, Family::Cube] {
            let (num, den) = closed_form(fam).unwrap();
            assert_eq!(
                rational_expand(&num, &den, 6).unwrap(),
                series_from_family(fam, 6).unwrap()
            );
        }
        assert_eq!(verify_associahedron_closed_form(8).unwrap(), None);
        assert_eq!(verify_associahedron_closed_form(1).unwrap(), None);
    }

    #[test]
    fn closed_form_check_detects_a_wrong_series() {
        // the simplex series is not the associahedron's: the identity breaks
        let n = 5;
        let f = XSeries::new(
            n + 1,
            series_from_family(Family::Simplex, n).unwrap().coeffs,
        );
        let radicand = XSeries::new(n + 1, vec![p(&[1]), p(&[4, 2]), p(&[0, 0, 1])]);
        let lhs = f
            .shift(1)
            .scale(&p(&[2, 2]))
            .add(&XSeries::new(n + 1, vec![p(&[1]), p(&[2, 1])]))
            .unwrap()
            .sub(&radicand.sqrt().unwrap())
            .unwrap();
        assert_eq!(lhs.first_difference(&XSeries::zero(n + 1)), Some(4));
    }

    #[test]
    fn sqrt_squares_back() {
        let r = XSeries::new(10, vec![p(&[1]), p(&[4, 2]), p(&[0, 0, 1])]);
        let s = r.sqrt().unwrap();
        assert_eq!(s.mul(&s).unwrap(), r);
        assert_eq!(s.coeff(1), &p(&[2, 1]));
        assert_eq!(s.coeff(2), &p(&[-2, -2]));
    }

    #[test]
    fn specialisations() {
        let k = series_from_family(Family::Associahedron, 8).unwrap();
        let at0: Vec<i64> = k.eval_t(0)[1..]
            .iter()
            .map(|c| i64::try_from(c.abs()).unwrap())
            .collect();
        assert_eq!(at0, vec![1, 2, 5, 14, 42, 132, 429, 1430]);
        assert_eq!(
            catalan(8)[1..],
            k.eval_t(0)[1..].iter().map(Signed::abs).collect::<Vec<_>>()[..]
        );
        let at1: Vec<i64> = k.eval_t(1)[1..6]
            .iter()
            .map(|c| i64::try_from(c.abs()).unwrap())
            .collect();
        assert_eq!(at1, vec![1, 3, 11, 45, 197]);
        let sc: Vec<i64> = super_catalan(6)
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect();
        assert_eq!(sc, vec![1, 1, 3, 11, 45, 197]);
    }

    #[test]
    fn default_report_passes() {
        let r = series_report(DEFAULT_ORDER).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}
